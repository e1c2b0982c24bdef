use std::fmt;
use std::sync::Arc;

use num_bigint::BigUint;
use num_traits::One;
use rand::Rng;

use super::{arith, FieldElement, FieldSpec};
use crate::error::{Error, Result};
use crate::polyring::Poly;

#[derive(Debug)]
struct Inner {
    base: FieldSpec,
    n: usize,
    /// Monic, `n + 1` coefficients over F_q.
    modulus: Vec<u32>,
    /// Positions and values of the nonzero low coefficients of the modulus.
    sparse_tail: Vec<(usize, u32)>,
    /// Column `j` is `(z^j)^q`: the matrix of the Frobenius map over F_q.
    frob: Vec<Vec<u32>>,
}

/// The working extension F_{q^n} = F_q[z]/(g(z)).
#[derive(Clone, Debug)]
pub struct ExtFieldSpec(Arc<Inner>);

impl PartialEq for ExtFieldSpec {
    fn eq(&self, other: &Self) -> bool {
        Arc::ptr_eq(&self.0, &other.0)
            || (self.0.base == other.0.base && self.0.modulus == other.0.modulus)
    }
}

impl Eq for ExtFieldSpec {}

impl ExtFieldSpec {
    /// F_{q^n} with the default (seed 0) modulus. Requires gcd(n, q) = 1.
    pub fn new(base: &FieldSpec, n: usize) -> Result<Self> {
        Self::check_degree(base, n)?;
        let modulus = super::find_irreducible(base, n, 0)?;
        Ok(Self::build(base, modulus))
    }

    /// F_{q^n} defined by an explicit monic irreducible modulus.
    pub fn with_modulus(base: &FieldSpec, n: usize, modulus: &Poly) -> Result<Self> {
        Self::check_degree(base, n)?;
        if modulus.field() != base {
            return Err(Error::SpecMismatch);
        }
        if modulus.degree() != Some(n) || !modulus.is_monic() || !modulus.is_irreducible() {
            return Err(Error::NotIrreducible(n));
        }
        Ok(Self::build(base, modulus.clone()))
    }

    /// Splitting fields for x^n − 1 may have degree divisible by p, so they
    /// skip the coprimality requirement of the linearized machinery.
    pub(crate) fn splitting(base: &FieldSpec, m: usize) -> Result<Self> {
        let modulus = super::find_irreducible(base, m, 0)?;
        Ok(Self::build(base, modulus))
    }

    fn check_degree(base: &FieldSpec, n: usize) -> Result<()> {
        if n == 0 {
            return Err(Error::BadInput("extension degree must be positive".into()));
        }
        if arith::gcd(n as u64, base.p() as u64) != 1 {
            return Err(Error::NotCoprime {
                a: n as u64,
                b: base.q() as u64,
            });
        }
        Ok(())
    }

    fn build(base: &FieldSpec, modulus: Poly) -> Self {
        let n = modulus.degree().expect("nonzero modulus");
        let coeffs = modulus.coeffs().to_vec();
        let sparse_tail = coeffs[..n]
            .iter()
            .enumerate()
            .filter(|(_, &c)| c != 0)
            .map(|(i, &c)| (i, c))
            .collect();
        let mut spec = ExtFieldSpec(Arc::new(Inner {
            base: base.clone(),
            n,
            modulus: coeffs,
            sparse_tail,
            frob: Vec::new(),
        }));
        let zq = spec.pow_raw(&spec.z_raw(), &BigUint::from(base.q()));
        let mut frob = Vec::with_capacity(n);
        let mut col = spec.one_raw();
        for _ in 0..n {
            frob.push(col.clone());
            col = spec.mul_raw(&col, &zq);
        }
        Arc::get_mut(&mut spec.0).expect("unshared during construction").frob = frob;
        spec
    }

    pub fn base(&self) -> &FieldSpec {
        &self.0.base
    }

    pub fn n(&self) -> usize {
        self.0.n
    }

    pub fn modulus(&self) -> Poly {
        Poly::from_raw(&self.0.base, self.0.modulus.clone())
    }

    /// q^n as a big integer.
    pub fn order(&self) -> BigUint {
        arith::big_pow(self.0.base.q() as u64, self.0.n)
    }

    /// q^n when it fits in a `u64`.
    pub fn size(&self) -> Option<u64> {
        arith::big_to_u64(&self.order())
    }

    // Raw-slice arithmetic. Slices always have exactly n entries.

    pub fn zero_raw(&self) -> Vec<u32> {
        vec![0; self.0.n]
    }

    pub fn one_raw(&self) -> Vec<u32> {
        self.embed_raw(1)
    }

    pub fn embed_raw(&self, c: u32) -> Vec<u32> {
        let mut v = self.zero_raw();
        v[0] = c;
        v
    }

    pub fn z_raw(&self) -> Vec<u32> {
        let mut v = self.zero_raw();
        if self.0.n > 1 {
            v[1] = 1;
        } else {
            // F_q[z]/(z + c): z = −c
            v[0] = self.0.base.neg(self.0.modulus[0]);
        }
        v
    }

    pub fn is_base_raw(a: &[u32]) -> bool {
        a.iter().skip(1).all(|&c| c == 0)
    }

    pub fn add_raw(&self, a: &[u32], b: &[u32]) -> Vec<u32> {
        let f = &self.0.base;
        a.iter().zip(b).map(|(&x, &y)| f.add(x, y)).collect()
    }

    pub fn sub_raw(&self, a: &[u32], b: &[u32]) -> Vec<u32> {
        let f = &self.0.base;
        a.iter().zip(b).map(|(&x, &y)| f.sub(x, y)).collect()
    }

    pub fn neg_raw(&self, a: &[u32]) -> Vec<u32> {
        a.iter().map(|&x| self.0.base.neg(x)).collect()
    }

    pub fn scale_raw(&self, c: u32, a: &[u32]) -> Vec<u32> {
        a.iter().map(|&x| self.0.base.mul(c, x)).collect()
    }

    pub fn mul_raw(&self, a: &[u32], b: &[u32]) -> Vec<u32> {
        if Self::is_base_raw(a) {
            return self.scale_raw(a[0], b);
        }
        if Self::is_base_raw(b) {
            return self.scale_raw(b[0], a);
        }
        let n = self.0.n;
        let f = &self.0.base;
        if f.k() == 1 {
            let p = f.p() as u64;
            let mut prod = vec![0u64; 2 * n - 1];
            for (i, &x) in a.iter().enumerate() {
                if x == 0 {
                    continue;
                }
                let x = x as u64;
                for (acc, &y) in prod[i..i + n].iter_mut().zip(b) {
                    *acc += x * y as u64;
                }
            }
            for d in (n..2 * n - 1).rev() {
                let c = prod[d] % p;
                if c == 0 {
                    continue;
                }
                let c = p - c;
                for &(i, m) in &self.0.sparse_tail {
                    prod[d - n + i] += c * m as u64;
                }
            }
            return prod[..n].iter().map(|&c| (c % p) as u32).collect();
        }
        let mut prod = vec![0u32; 2 * n - 1];
        for (i, &x) in a.iter().enumerate() {
            if x == 0 {
                continue;
            }
            for (j, &y) in b.iter().enumerate() {
                prod[i + j] = f.add(prod[i + j], f.mul(x, y));
            }
        }
        for d in (n..2 * n - 1).rev() {
            let c = prod[d];
            if c == 0 {
                continue;
            }
            for &(i, m) in &self.0.sparse_tail {
                prod[d - n + i] = f.sub(prod[d - n + i], f.mul(c, m));
            }
        }
        prod.truncate(n);
        prod
    }

    pub fn pow_raw(&self, a: &[u32], e: &BigUint) -> Vec<u32> {
        let mut acc = self.one_raw();
        for i in (0..e.bits()).rev() {
            acc = self.mul_raw(&acc, &acc);
            if e.bit(i) {
                acc = self.mul_raw(&acc, a);
            }
        }
        acc
    }

    pub fn inv_raw(&self, a: &[u32]) -> Result<Vec<u32>> {
        if a.iter().all(|&c| c == 0) {
            return Err(Error::ZeroInverse);
        }
        let inv = Poly::from_raw(&self.0.base, a.to_vec()).inv_mod(&self.modulus())?;
        Ok(self.pad(inv.coeffs()))
    }

    fn pad(&self, c: &[u32]) -> Vec<u32> {
        let mut v = c.to_vec();
        v.resize(self.0.n, 0);
        v
    }

    /// a^q, via the precomputed Frobenius matrix.
    pub fn frob_raw(&self, a: &[u32]) -> Vec<u32> {
        if Self::is_base_raw(a) {
            return a.to_vec();
        }
        let f = &self.0.base;
        let n = self.0.n;
        if f.k() == 1 {
            let p = f.p() as u64;
            let mut acc = vec![0u64; n];
            for (&c, col) in a.iter().zip(&self.0.frob) {
                if c == 0 {
                    continue;
                }
                for (s, &v) in acc.iter_mut().zip(col) {
                    *s += c as u64 * v as u64;
                }
            }
            return acc.into_iter().map(|s| (s % p) as u32).collect();
        }
        let mut acc = vec![0u32; n];
        for (&c, col) in a.iter().zip(&self.0.frob) {
            if c == 0 {
                continue;
            }
            for (s, &v) in acc.iter_mut().zip(col) {
                *s = f.add(*s, f.mul(c, v));
            }
        }
        acc
    }

    /// a^{q^i}; `i` is taken mod n.
    pub fn frob_pow_raw(&self, a: &[u32], i: usize) -> Vec<u32> {
        let mut out = a.to_vec();
        for _ in 0..i % self.0.n {
            out = self.frob_raw(&out);
        }
        out
    }

    /// Frobenius matrix over F_q, column-major.
    pub fn frobenius_matrix(&self) -> &[Vec<u32>] {
        &self.0.frob
    }

    pub fn norm_raw(&self, a: &[u32]) -> Result<u32> {
        let mut acc = a.to_vec();
        let mut conj = a.to_vec();
        for _ in 1..self.0.n {
            conj = self.frob_raw(&conj);
            acc = self.mul_raw(&acc, &conj);
        }
        if !Self::is_base_raw(&acc) {
            return Err(Error::InternalError(
                "norm does not lie in the base field".into(),
            ));
        }
        Ok(acc[0])
    }

    /// Element with index `i` in the base-q digit enumeration of F_{q^n}.
    pub fn element_from_index(&self, mut i: u64) -> Vec<u32> {
        let q = self.0.base.q() as u64;
        (0..self.0.n)
            .map(|_| {
                let d = (i % q) as u32;
                i /= q;
                d
            })
            .collect()
    }

    pub fn index_of(&self, a: &[u32]) -> u64 {
        let q = self.0.base.q() as u64;
        a.iter().rev().fold(0u64, |acc, &c| acc * q + c as u64)
    }

    pub fn random_raw<R: Rng + ?Sized>(&self, rng: &mut R) -> Vec<u32> {
        let q = self.0.base.q();
        (0..self.0.n).map(|_| rng.gen_range(0..q)).collect()
    }

    /// Prime divisors of q^n − 1 (trial division; may be `TooLarge`).
    pub fn group_order_primes(&self) -> Result<Vec<BigUint>> {
        arith::prime_divisors_big(&(self.order() - BigUint::one()))
    }

    fn order_with(&self, a: &[u32], primes: &[BigUint]) -> Result<BigUint> {
        if a.iter().all(|&c| c == 0) {
            return Err(Error::ZeroOrder);
        }
        let one = self.one_raw();
        let mut order = self.order() - BigUint::one();
        for r in primes {
            while (&order % r) == BigUint::ZERO && self.pow_raw(a, &(&order / r)) == one {
                order /= r;
            }
        }
        Ok(order)
    }

    pub fn order_raw(&self, a: &[u32]) -> Result<BigUint> {
        self.order_with(a, &self.group_order_primes()?)
    }

    /// First element of order q^n − 1 in the index enumeration.
    pub fn primitive_element(&self) -> Result<ExtElement> {
        let primes = self.group_order_primes()?;
        let full = self.order() - BigUint::one();
        let mut i = 1u64;
        loop {
            let a = self.element_from_index(i);
            if self.order_with(&a, &primes)? == full {
                return Ok(ExtElement::from_raw(self, a));
            }
            i += 1;
        }
    }

    pub fn element(&self, coeffs: &[u32]) -> Result<ExtElement> {
        ExtElement::new(self, coeffs)
    }

    pub fn zero(&self) -> ExtElement {
        ExtElement::from_raw(self, self.zero_raw())
    }

    pub fn one(&self) -> ExtElement {
        ExtElement::from_raw(self, self.one_raw())
    }

    pub fn z(&self) -> ExtElement {
        ExtElement::from_raw(self, self.z_raw())
    }

    pub fn embed(&self, c: &FieldElement) -> Result<ExtElement> {
        if c.spec() != self.base() {
            return Err(Error::SpecMismatch);
        }
        Ok(ExtElement::from_raw(self, self.embed_raw(c.value())))
    }

    pub fn render_raw(&self, a: &[u32]) -> String {
        if Self::is_base_raw(a) {
            return self.0.base.render_coeff(a[0]);
        }
        let parts: Vec<String> = a.iter().map(|&c| self.0.base.render_coeff(c)).collect();
        format!("({})", parts.join(","))
    }

    /// Parses a base-field element or a parenthesised coefficient vector
    /// `(c0,c1,...)` over F_q.
    pub fn parse_raw(&self, s: &str) -> Result<Vec<u32>> {
        let s = s.trim();
        if let Some(inner) = s.strip_prefix('(').and_then(|t| t.strip_suffix(')')) {
            let parts = split_top_level(inner, ',');
            if parts.len() > self.0.n {
                return Err(Error::LengthMismatch {
                    expected: self.0.n,
                    got: parts.len(),
                });
            }
            let mut v = parts
                .iter()
                .map(|t| self.0.base.parse(t))
                .collect::<Result<Vec<_>>>()?;
            v.resize(self.0.n, 0);
            return Ok(v);
        }
        Ok(self.embed_raw(self.0.base.parse(s)?))
    }
}

/// Splits on `sep` outside of brackets and parentheses.
pub(crate) fn split_top_level(s: &str, sep: char) -> Vec<String> {
    let mut out = Vec::new();
    let mut depth = 0i32;
    let mut cur = String::new();
    for ch in s.chars() {
        match ch {
            '[' | '(' => depth += 1,
            ']' | ')' => depth -= 1,
            _ => {}
        }
        if ch == sep && depth == 0 {
            out.push(std::mem::take(&mut cur));
        } else {
            cur.push(ch);
        }
    }
    out.push(cur);
    out
}

/// An element of F_{q^n}, coefficients little-endian in z.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct ExtElement {
    spec: ExtFieldSpec,
    coeffs: Vec<u32>,
}

impl ExtElement {
    pub fn new(spec: &ExtFieldSpec, coeffs: &[u32]) -> Result<Self> {
        if coeffs.len() != spec.n() {
            return Err(Error::LengthMismatch {
                expected: spec.n(),
                got: coeffs.len(),
            });
        }
        if coeffs.iter().any(|&c| c >= spec.base().q()) {
            return Err(Error::BadInput("coefficient outside F_q".into()));
        }
        Ok(Self::from_raw(spec, coeffs.to_vec()))
    }

    pub(crate) fn from_raw(spec: &ExtFieldSpec, coeffs: Vec<u32>) -> Self {
        debug_assert_eq!(coeffs.len(), spec.n());
        ExtElement {
            spec: spec.clone(),
            coeffs,
        }
    }

    pub fn spec(&self) -> &ExtFieldSpec {
        &self.spec
    }

    pub fn coeffs(&self) -> &[u32] {
        &self.coeffs
    }

    pub fn is_zero(&self) -> bool {
        self.coeffs.iter().all(|&c| c == 0)
    }

    pub fn is_one(&self) -> bool {
        self.coeffs == self.spec.one_raw()
    }

    pub fn in_base_field(&self) -> bool {
        ExtFieldSpec::is_base_raw(&self.coeffs)
    }

    /// The element as a member of F_q, if it lies there.
    pub fn to_base(&self) -> Option<FieldElement> {
        self.in_base_field()
            .then(|| FieldElement::raw(self.spec.base(), self.coeffs[0]))
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
        Ok(Self::from_raw(&self.spec, self.spec.add_raw(&self.coeffs, &other.coeffs)))
    }

    pub fn sub(&self, other: &Self) -> Result<Self> {
        self.check(other)?;
        Ok(Self::from_raw(&self.spec, self.spec.sub_raw(&self.coeffs, &other.coeffs)))
    }

    pub fn mul(&self, other: &Self) -> Result<Self> {
        self.check(other)?;
        Ok(Self::from_raw(&self.spec, self.spec.mul_raw(&self.coeffs, &other.coeffs)))
    }

    pub fn neg(&self) -> Self {
        Self::from_raw(&self.spec, self.spec.neg_raw(&self.coeffs))
    }

    pub fn inv(&self) -> Result<Self> {
        Ok(Self::from_raw(&self.spec, self.spec.inv_raw(&self.coeffs)?))
    }

    pub fn pow(&self, e: &BigUint) -> Self {
        Self::from_raw(&self.spec, self.spec.pow_raw(&self.coeffs, e))
    }

    pub fn pow_u64(&self, e: u64) -> Self {
        self.pow(&BigUint::from(e))
    }

    /// a^{q^i}.
    pub fn frobenius(&self, i: usize) -> Self {
        Self::from_raw(&self.spec, self.spec.frob_pow_raw(&self.coeffs, i))
    }

    /// N(a) = a^{(q^n − 1)/(q − 1)}, computed as the product of the conjugates.
    pub fn norm(&self) -> Result<FieldElement> {
        let v = self.spec.norm_raw(&self.coeffs)?;
        Ok(FieldElement::raw(self.spec.base(), v))
    }

    pub fn order(&self) -> Result<BigUint> {
        self.spec.order_raw(&self.coeffs)
    }
}

impl fmt::Display for ExtElement {
    /// Comma-joined coefficients over F_q.
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let parts: Vec<String> = self
            .coeffs
            .iter()
            .map(|&c| self.spec.base().render_coeff(c))
            .collect();
        f.write_str(&parts.join(","))
    }
}
