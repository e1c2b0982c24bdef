use std::fmt;

use crate::error::{Error, Result};
use crate::fields::{arith, FieldElement, FieldSpec};

use super::{text, Poly};

/// R_{q,n} = F_q[x]/(x^n − 1) with gcd(n, q) = 1.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct RingSpec {
    base: FieldSpec,
    n: usize,
}

impl RingSpec {
    pub fn new(base: &FieldSpec, n: usize) -> Result<Self> {
        if n == 0 {
            return Err(Error::BadInput("ring length n must be positive".into()));
        }
        if arith::gcd(n as u64, base.p() as u64) != 1 {
            return Err(Error::NotCoprime {
                a: n as u64,
                b: base.q() as u64,
            });
        }
        Ok(RingSpec {
            base: base.clone(),
            n,
        })
    }

    pub fn base(&self) -> &FieldSpec {
        &self.base
    }

    pub fn n(&self) -> usize {
        self.n
    }

    /// x^n − 1 as an ordinary polynomial.
    pub fn modulus(&self) -> Poly {
        Poly::xn_minus_one(&self.base, self.n)
    }

    pub fn zero(&self) -> RingElement {
        RingElement::from_raw(self, vec![0; self.n])
    }

    pub fn one(&self) -> RingElement {
        self.monomial(1, 0)
    }

    pub fn x(&self) -> RingElement {
        self.monomial(1, 1)
    }

    /// c·x^e, exponent reduced mod n.
    pub fn monomial(&self, c: u32, e: usize) -> RingElement {
        let mut v = vec![0; self.n];
        v[e % self.n] = c;
        RingElement::from_raw(self, v)
    }

    /// Reduces a polynomial mod x^n − 1 by folding exponents.
    pub fn element_from_poly(&self, f: &Poly) -> Result<RingElement> {
        if f.field() != &self.base {
            return Err(Error::SpecMismatch);
        }
        Ok(self.fold(f.coeffs()))
    }

    /// Folds an arbitrary-length raw coefficient vector into R_{q,n}.
    pub fn fold(&self, coeffs: &[u32]) -> RingElement {
        let mut v = vec![0; self.n];
        for (i, &c) in coeffs.iter().enumerate() {
            let slot = &mut v[i % self.n];
            *slot = self.base.add(*slot, c);
        }
        RingElement::from_raw(self, v)
    }

    /// Element with index `i` in the base-q enumeration of all q^n elements.
    pub fn element_from_index(&self, mut i: u64) -> RingElement {
        let q = self.base.q() as u64;
        let v = (0..self.n)
            .map(|_| {
                let d = (i % q) as u32;
                i /= q;
                d
            })
            .collect();
        RingElement::from_raw(self, v)
    }

    /// Parses the `c*x^e` text form (lenient about `*`, `^`, implicit
    /// coefficients and signs) or the dense `[c0,c1,...]` form.
    pub fn parse(&self, s: &str) -> Result<RingElement> {
        let raw = text::parse_ring(&self.base, s)?;
        Ok(self.fold(&raw))
    }
}

/// A class of R_{q,n}, stored as exactly n little-endian coefficients.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct RingElement {
    spec: RingSpec,
    coeffs: Vec<u32>,
}

impl RingElement {
    pub fn new(spec: &RingSpec, coeffs: &[u32]) -> Result<Self> {
        if coeffs.iter().any(|&c| c >= spec.base.q()) {
            return Err(Error::BadInput("coefficient outside F_q".into()));
        }
        Ok(spec.fold(coeffs))
    }

    pub(crate) fn from_raw(spec: &RingSpec, coeffs: Vec<u32>) -> Self {
        debug_assert_eq!(coeffs.len(), spec.n);
        RingElement {
            spec: spec.clone(),
            coeffs,
        }
    }

    pub fn spec(&self) -> &RingSpec {
        &self.spec
    }

    pub fn coeffs(&self) -> &[u32] {
        &self.coeffs
    }

    pub fn coeff(&self, i: usize) -> FieldElement {
        FieldElement::raw(&self.spec.base, self.coeffs[i % self.spec.n])
    }

    pub fn to_poly(&self) -> Poly {
        Poly::from_raw(&self.spec.base, self.coeffs.clone())
    }

    pub fn is_zero(&self) -> bool {
        self.coeffs.iter().all(|&c| c == 0)
    }

    pub fn is_one(&self) -> bool {
        self.coeffs[0] == 1 && self.coeffs[1..].iter().all(|&c| c == 0)
    }

    fn check(&self, other: &Self) -> Result<()> {
        if self.spec == other.spec {
            Ok(())
        } else {
            Err(Error::SpecMismatch)
        }
    }

    pub fn add(&self, other: &Self) -> Result<Self> {
        self.check(other)?;
        let f = &self.spec.base;
        let v = self
            .coeffs
            .iter()
            .zip(&other.coeffs)
            .map(|(&a, &b)| f.add(a, b))
            .collect();
        Ok(Self::from_raw(&self.spec, v))
    }

    pub fn sub(&self, other: &Self) -> Result<Self> {
        self.add(&other.neg())
    }

    pub fn neg(&self) -> Self {
        let f = &self.spec.base;
        Self::from_raw(&self.spec, self.coeffs.iter().map(|&c| f.neg(c)).collect())
    }

    pub fn scale(&self, c: u32) -> Self {
        let f = &self.spec.base;
        Self::from_raw(&self.spec, self.coeffs.iter().map(|&a| f.mul(a, c)).collect())
    }

    /// Cyclic convolution of length n.
    pub fn mul(&self, other: &Self) -> Result<Self> {
        self.check(other)?;
        let n = self.spec.n;
        let f = &self.spec.base;
        if f.k() == 1 {
            let p = f.p() as u64;
            let mut acc = vec![0u64; n];
            for (i, &a) in self.coeffs.iter().enumerate() {
                if a == 0 {
                    continue;
                }
                let a = a as u64;
                let (lo, hi) = other.coeffs.split_at(n - i);
                for (s, &b) in acc[i..].iter_mut().zip(lo) {
                    *s += a * b as u64;
                }
                for (s, &b) in acc[..i].iter_mut().zip(hi) {
                    *s += a * b as u64;
                }
            }
            let v = acc.into_iter().map(|s| (s % p) as u32).collect();
            return Ok(Self::from_raw(&self.spec, v));
        }
        let mut v = vec![0u32; n];
        for (i, &a) in self.coeffs.iter().enumerate() {
            if a == 0 {
                continue;
            }
            for (j, &b) in other.coeffs.iter().enumerate() {
                let slot = &mut v[(i + j) % n];
                *slot = f.add(*slot, f.mul(a, b));
            }
        }
        Ok(Self::from_raw(&self.spec, v))
    }

    /// x^t · f, i.e. a cyclic rotation of the coefficients by t.
    pub fn shift_mul_x(&self, t: usize) -> Self {
        let n = self.spec.n;
        let mut v = vec![0; n];
        for (i, &c) in self.coeffs.iter().enumerate() {
            v[(i + t) % n] = c;
        }
        Self::from_raw(&self.spec, v)
    }

    /// Unit test: gcd(f, x^n − 1) = 1.
    pub fn is_unit(&self) -> bool {
        if self.is_zero() {
            return false;
        }
        Poly::gcd(&self.to_poly(), &self.spec.modulus())
            .map(|g| g.is_one())
            .unwrap_or(false)
    }

    pub fn inverse(&self) -> Result<Self> {
        if self.is_zero() {
            return Err(Error::NotAUnit);
        }
        let inv = self.to_poly().inv_mod(&self.spec.modulus())?;
        let out = self.spec.element_from_poly(&inv)?;
        debug_assert!(self.mul(&out)?.is_one());
        Ok(out)
    }

    pub fn is_idempotent(&self) -> bool {
        self.mul(self).map(|sq| &sq == self).unwrap_or(false)
    }

    /// Sum of the coefficients, i.e. f(1).
    pub fn coefficient_sum(&self) -> FieldElement {
        let f = &self.spec.base;
        let s = self.coeffs.iter().fold(0, |acc, &c| f.add(acc, c));
        FieldElement::raw(f, s)
    }

    /// Canonical `c*x^e` text, descending exponents.
    pub fn to_text(&self) -> String {
        super::poly::render_terms(&self.spec.base, &self.coeffs, "x")
    }

    /// Dense `[c0,c1,...,c_{n-1}]` text.
    pub fn to_dense_text(&self) -> String {
        let f = &self.spec.base;
        let parts: Vec<String> = self.coeffs.iter().map(|&c| f.render_coeff(c)).collect();
        format!("[{}]", parts.join(","))
    }
}

impl fmt::Display for RingElement {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(&self.to_text())
    }
}
