use std::fmt;
use std::sync::Arc;

use num_bigint::BigUint;

use super::arith;
use crate::error::{Error, Result};
use crate::polyring::Poly;

#[derive(Debug)]
struct Inner {
    p: u32,
    k: usize,
    q: u32,
    /// Monic modulus over F_p, little-endian, `k + 1` entries. `[0, 1]` when k = 1.
    modulus: Vec<u32>,
    /// `p^i` for `i < k`, used to pack digits.
    place: Vec<u32>,
}

/// The base field F_q = F_p[y]/(m(y)), q = p^k.
///
/// Elements are handled as raw `u32` values holding the little-endian
/// coefficient vector over F_p packed as base-p digits, so `0` and `1` are
/// the additive and multiplicative identities and, for k = 1, the value is
/// the residue itself. Cloning is cheap.
#[derive(Clone, Debug)]
pub struct FieldSpec(Arc<Inner>);

impl PartialEq for FieldSpec {
    fn eq(&self, other: &Self) -> bool {
        Arc::ptr_eq(&self.0, &other.0)
            || (self.0.p == other.0.p && self.0.modulus == other.0.modulus)
    }
}

impl Eq for FieldSpec {}

impl FieldSpec {
    /// The prime field F_p.
    pub fn prime(p: u64) -> Result<Self> {
        if !arith::is_prime(p) {
            return Err(Error::NotPrime(p));
        }
        if p >= 1 << 16 {
            return Err(Error::BadInput(format!("characteristic {p} exceeds 2^16")));
        }
        let p = p as u32;
        Ok(FieldSpec(Arc::new(Inner {
            p,
            k: 1,
            q: p,
            modulus: vec![0, 1],
            place: vec![1],
        })))
    }

    /// F_{p^k} with an explicit monic modulus over F_p (little-endian, `k + 1`
    /// coefficients), or the default modulus when `modulus` is `None`.
    pub fn new(p: u64, k: usize, modulus: Option<&[u32]>) -> Result<Self> {
        let fp = Self::prime(p)?;
        if k == 0 {
            return Err(Error::BadInput("extension degree must be positive".into()));
        }
        if k == 1 {
            return Ok(fp);
        }
        let q = (p as u128).pow(k as u32);
        if q >= 1 << 31 {
            return Err(Error::BadInput(format!("field order {p}^{k} exceeds 2^31")));
        }
        let modulus = match modulus {
            Some(m) => {
                let poly = Poly::from_raw(&fp, m.iter().map(|&c| c % fp.p()).collect());
                if poly.degree() != Some(k) || !poly.is_monic() || !poly.is_irreducible() {
                    return Err(Error::NotIrreducible(k));
                }
                poly.coeffs().to_vec()
            }
            None => crate::fields::find_irreducible(&fp, k, 0)?.coeffs().to_vec(),
        };
        let p = p as u32;
        let place = (0..k).map(|i| p.pow(i as u32)).collect();
        Ok(FieldSpec(Arc::new(Inner {
            p,
            k,
            q: q as u32,
            modulus,
            place,
        })))
    }

    /// F_q for a prime power q, with the default modulus.
    pub fn from_order(q: u64) -> Result<Self> {
        let (p, k) = arith::prime_power(q)?;
        Self::new(p, k, None)
    }

    pub fn p(&self) -> u32 {
        self.0.p
    }

    pub fn k(&self) -> usize {
        self.0.k
    }

    pub fn q(&self) -> u32 {
        self.0.q
    }

    /// Defining modulus over F_p, or `None` for a prime field.
    pub fn modulus(&self) -> Option<&[u32]> {
        (self.0.k > 1).then_some(self.0.modulus.as_slice())
    }

    pub fn digits(&self, a: u32) -> Vec<u32> {
        let p = self.0.p;
        let mut a = a;
        (0..self.0.k)
            .map(|_| {
                let d = a % p;
                a /= p;
                d
            })
            .collect()
    }

    pub fn from_digits(&self, digits: &[u32]) -> Result<u32> {
        if digits.len() > self.0.k {
            return Err(Error::LengthMismatch {
                expected: self.0.k,
                got: digits.len(),
            });
        }
        Ok(digits
            .iter()
            .zip(&self.0.place)
            .map(|(&d, &w)| (d % self.0.p) * w)
            .sum())
    }

    /// Image of an integer under Z → F_p ⊂ F_q.
    pub fn from_int(&self, c: i64) -> u32 {
        c.rem_euclid(self.0.p as i64) as u32
    }

    #[inline]
    pub fn add(&self, a: u32, b: u32) -> u32 {
        let p = self.0.p;
        if self.0.k == 1 {
            let s = a + b;
            return if s >= p { s - p } else { s };
        }
        let mut out = 0;
        let (mut a, mut b) = (a, b);
        for &w in &self.0.place {
            let s = (a % p + b % p) % p;
            out += s * w;
            a /= p;
            b /= p;
        }
        out
    }

    #[inline]
    pub fn neg(&self, a: u32) -> u32 {
        let p = self.0.p;
        if self.0.k == 1 {
            return if a == 0 { 0 } else { p - a };
        }
        let mut out = 0;
        let mut a = a;
        for &w in &self.0.place {
            let d = a % p;
            out += if d == 0 { 0 } else { (p - d) * w };
            a /= p;
        }
        out
    }

    #[inline]
    pub fn sub(&self, a: u32, b: u32) -> u32 {
        self.add(a, self.neg(b))
    }

    #[inline]
    pub fn mul(&self, a: u32, b: u32) -> u32 {
        if self.0.k == 1 {
            return ((a as u64 * b as u64) % self.0.p as u64) as u32;
        }
        if a == 0 || b == 0 {
            return 0;
        }
        let p = self.0.p as u64;
        let k = self.0.k;
        let da = self.digits(a);
        let db = self.digits(b);
        let mut prod = vec![0u64; 2 * k - 1];
        for (i, &x) in da.iter().enumerate() {
            if x == 0 {
                continue;
            }
            for (j, &y) in db.iter().enumerate() {
                prod[i + j] = (prod[i + j] + x as u64 * y as u64) % p;
            }
        }
        for d in (k..prod.len()).rev() {
            let c = prod[d];
            if c == 0 {
                continue;
            }
            prod[d] = 0;
            for (i, &m) in self.0.modulus[..k].iter().enumerate() {
                prod[d - k + i] = (prod[d - k + i] + (p - c) * m as u64) % p;
            }
        }
        prod[..k]
            .iter()
            .zip(&self.0.place)
            .map(|(&d, &w)| d as u32 * w)
            .sum()
    }

    pub fn pow(&self, a: u32, mut e: u64) -> u32 {
        let mut acc = 1;
        let mut b = a;
        while e > 0 {
            if e & 1 == 1 {
                acc = self.mul(acc, b);
            }
            b = self.mul(b, b);
            e >>= 1;
        }
        acc
    }

    pub fn pow_big(&self, a: u32, e: &BigUint) -> u32 {
        let mut acc = 1;
        for i in (0..e.bits()).rev() {
            acc = self.mul(acc, acc);
            if e.bit(i) {
                acc = self.mul(acc, a);
            }
        }
        acc
    }

    pub fn inv(&self, a: u32) -> Result<u32> {
        if a == 0 {
            return Err(Error::ZeroInverse);
        }
        if self.0.k == 1 {
            // extended Euclid on residues
            let p = self.0.p as i64;
            let (mut r0, mut r1) = (p, a as i64);
            let (mut t0, mut t1) = (0i64, 1i64);
            while r1 != 0 {
                let qt = r0 / r1;
                (r0, r1) = (r1, r0 - qt * r1);
                (t0, t1) = (t1, t0 - qt * t1);
            }
            return Ok(t0.rem_euclid(p) as u32);
        }
        Ok(self.pow(a, self.0.q as u64 - 2))
    }

    /// Multiplicative order of `a`.
    pub fn order(&self, a: u32) -> Result<u64> {
        if a == 0 {
            return Err(Error::ZeroOrder);
        }
        let mut order = self.0.q as u64 - 1;
        for (r, _) in arith::factor_u64(order) {
            while order % r == 0 && self.pow(a, order / r) == 1 {
                order /= r;
            }
        }
        Ok(order)
    }

    /// First element of multiplicative order q − 1 in ascending packed order.
    pub fn primitive_element(&self) -> u32 {
        (1..self.0.q)
            .find(|&a| self.order(a).ok() == Some(self.0.q as u64 - 1))
            .expect("a finite field always has a primitive element")
    }

    pub fn elements(&self) -> impl Iterator<Item = u32> {
        0..self.0.q
    }

    pub fn element(&self, value: u32) -> Result<FieldElement> {
        FieldElement::new(self, value)
    }

    /// Integer for k = 1, comma-joined digits otherwise.
    pub fn render(&self, a: u32) -> String {
        if self.0.k == 1 {
            a.to_string()
        } else {
            join_digits(&self.digits(a))
        }
    }

    /// Rendering used inside polynomial text: digit lists are bracketed.
    pub fn render_coeff(&self, a: u32) -> String {
        if self.0.k == 1 {
            a.to_string()
        } else {
            format!("[{}]", join_digits(&self.digits(a)))
        }
    }

    /// Parses an integer (reduced mod p, negatives allowed) or, for k > 1, a
    /// digit list `c0,c1,...` with optional brackets.
    pub fn parse(&self, s: &str) -> Result<u32> {
        let s = s.trim();
        let inner = s
            .strip_prefix('[')
            .and_then(|t| t.strip_suffix(']'))
            .unwrap_or(s);
        if inner.contains(',') || s.starts_with('[') {
            let digits = inner
                .split(',')
                .map(|d| {
                    d.trim()
                        .parse::<i64>()
                        .map(|c| self.from_int(c))
                        .map_err(|_| Error::Parse(format!("bad digit {d:?} in {s:?}")))
                })
                .collect::<Result<Vec<_>>>()?;
            return self.from_digits(&digits);
        }
        inner
            .parse::<i64>()
            .map(|c| self.from_int(c))
            .map_err(|_| Error::Parse(format!("bad field element {s:?}")))
    }
}

fn join_digits(d: &[u32]) -> String {
    d.iter().map(u32::to_string).collect::<Vec<_>>().join(",")
}

/// An element of F_q tagged with its field.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct FieldElement {
    spec: FieldSpec,
    value: u32,
}

impl FieldElement {
    pub fn new(spec: &FieldSpec, value: u32) -> Result<Self> {
        if value >= spec.q() {
            return Err(Error::BadInput(format!(
                "{value} is not a packed element of F_{}",
                spec.q()
            )));
        }
        Ok(FieldElement {
            spec: spec.clone(),
            value,
        })
    }

    pub fn from_coeffs(spec: &FieldSpec, coeffs: &[u32]) -> Result<Self> {
        let value = spec.from_digits(coeffs)?;
        Ok(FieldElement {
            spec: spec.clone(),
            value,
        })
    }

    pub(crate) fn raw(spec: &FieldSpec, value: u32) -> Self {
        FieldElement {
            spec: spec.clone(),
            value,
        }
    }

    pub fn zero(spec: &FieldSpec) -> Self {
        Self::raw(spec, 0)
    }

    pub fn one(spec: &FieldSpec) -> Self {
        Self::raw(spec, 1)
    }

    pub fn spec(&self) -> &FieldSpec {
        &self.spec
    }

    pub fn value(&self) -> u32 {
        self.value
    }

    pub fn coeffs(&self) -> Vec<u32> {
        self.spec.digits(self.value)
    }

    pub fn is_zero(&self) -> bool {
        self.value == 0
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
        Ok(Self::raw(&self.spec, self.spec.add(self.value, other.value)))
    }

    pub fn sub(&self, other: &Self) -> Result<Self> {
        self.check(other)?;
        Ok(Self::raw(&self.spec, self.spec.sub(self.value, other.value)))
    }

    pub fn mul(&self, other: &Self) -> Result<Self> {
        self.check(other)?;
        Ok(Self::raw(&self.spec, self.spec.mul(self.value, other.value)))
    }

    pub fn neg(&self) -> Self {
        Self::raw(&self.spec, self.spec.neg(self.value))
    }

    pub fn inv(&self) -> Result<Self> {
        Ok(Self::raw(&self.spec, self.spec.inv(self.value)?))
    }

    pub fn pow(&self, e: u64) -> Self {
        Self::raw(&self.spec, self.spec.pow(self.value, e))
    }

    pub fn order(&self) -> Result<u64> {
        self.spec.order(self.value)
    }
}

impl fmt::Display for FieldElement {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(&self.spec.render(self.value))
    }
}
