use std::fmt;

use num_bigint::BigUint;

use crate::error::{Error, Result};
use crate::fields::FieldSpec;

/// A polynomial over F_q, dense and little-endian with no trailing zeros.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Poly {
    field: FieldSpec,
    coeffs: Vec<u32>,
}

impl Poly {
    /// Builds from raw field values, trimming trailing zeros.
    pub fn from_raw(field: &FieldSpec, mut coeffs: Vec<u32>) -> Self {
        while coeffs.last() == Some(&0) {
            coeffs.pop();
        }
        Poly {
            field: field.clone(),
            coeffs,
        }
    }

    pub fn zero(field: &FieldSpec) -> Self {
        Self::from_raw(field, Vec::new())
    }

    pub fn one(field: &FieldSpec) -> Self {
        Self::from_raw(field, vec![1])
    }

    pub fn x(field: &FieldSpec) -> Self {
        Self::monomial(field, 1, 1)
    }

    pub fn monomial(field: &FieldSpec, c: u32, e: usize) -> Self {
        let mut v = vec![0; e + 1];
        v[e] = c;
        Self::from_raw(field, v)
    }

    /// x^n − 1.
    pub fn xn_minus_one(field: &FieldSpec, n: usize) -> Self {
        let mut v = vec![0; n + 1];
        v[0] = field.neg(1);
        v[n] = 1;
        Self::from_raw(field, v)
    }

    pub fn field(&self) -> &FieldSpec {
        &self.field
    }

    pub fn coeffs(&self) -> &[u32] {
        &self.coeffs
    }

    pub fn coeff(&self, i: usize) -> u32 {
        self.coeffs.get(i).copied().unwrap_or(0)
    }

    pub fn degree(&self) -> Option<usize> {
        self.coeffs.len().checked_sub(1)
    }

    pub fn is_zero(&self) -> bool {
        self.coeffs.is_empty()
    }

    pub fn is_one(&self) -> bool {
        self.coeffs == [1]
    }

    pub fn leading(&self) -> u32 {
        self.coeffs.last().copied().unwrap_or(0)
    }

    pub fn is_monic(&self) -> bool {
        self.leading() == 1
    }

    fn check(&self, other: &Self) -> Result<()> {
        if self.field == other.field {
            Ok(())
        } else {
            Err(Error::SpecMismatch)
        }
    }

    pub fn add(&self, other: &Self) -> Result<Self> {
        self.check(other)?;
        let f = &self.field;
        let len = self.coeffs.len().max(other.coeffs.len());
        let v = (0..len)
            .map(|i| f.add(self.coeff(i), other.coeff(i)))
            .collect();
        Ok(Self::from_raw(f, v))
    }

    pub fn sub(&self, other: &Self) -> Result<Self> {
        self.add(&other.neg())
    }

    pub fn neg(&self) -> Self {
        let v = self.coeffs.iter().map(|&c| self.field.neg(c)).collect();
        Self::from_raw(&self.field, v)
    }

    pub fn scale(&self, c: u32) -> Self {
        let v = self.coeffs.iter().map(|&a| self.field.mul(a, c)).collect();
        Self::from_raw(&self.field, v)
    }

    pub fn mul(&self, other: &Self) -> Result<Self> {
        self.check(other)?;
        if self.is_zero() || other.is_zero() {
            return Ok(Self::zero(&self.field));
        }
        let f = &self.field;
        let mut v = vec![0u32; self.coeffs.len() + other.coeffs.len() - 1];
        for (i, &a) in self.coeffs.iter().enumerate() {
            if a == 0 {
                continue;
            }
            for (j, &b) in other.coeffs.iter().enumerate() {
                v[i + j] = f.add(v[i + j], f.mul(a, b));
            }
        }
        Ok(Self::from_raw(f, v))
    }

    /// Euclidean division; errors on a zero divisor.
    pub fn div_rem(&self, divisor: &Self) -> Result<(Self, Self)> {
        self.check(divisor)?;
        let f = &self.field;
        let dd = divisor.degree().ok_or(Error::ZeroInverse)?;
        let lead_inv = f.inv(divisor.leading())?;
        let mut rem = self.coeffs.clone();
        if rem.len() <= dd {
            return Ok((Self::zero(f), self.clone()));
        }
        let mut quot = vec![0u32; rem.len() - dd];
        for i in (dd..rem.len()).rev() {
            let c = rem[i];
            if c == 0 {
                continue;
            }
            let factor = f.mul(c, lead_inv);
            quot[i - dd] = factor;
            for (j, &d) in divisor.coeffs.iter().enumerate() {
                if d != 0 {
                    rem[i - dd + j] = f.sub(rem[i - dd + j], f.mul(factor, d));
                }
            }
        }
        rem.truncate(dd);
        Ok((Self::from_raw(f, quot), Self::from_raw(f, rem)))
    }

    pub fn rem(&self, divisor: &Self) -> Result<Self> {
        Ok(self.div_rem(divisor)?.1)
    }

    pub fn monic(&self) -> Self {
        if self.is_zero() {
            return self.clone();
        }
        let inv = self.field.inv(self.leading()).expect("nonzero leading coefficient");
        self.scale(inv)
    }

    /// Extended Euclid: `(g, u, v)` with `u·a + v·b = g`, g monic.
    pub fn egcd(a: &Self, b: &Self) -> Result<(Self, Self, Self)> {
        a.check(b)?;
        if a.is_zero() && b.is_zero() {
            return Err(Error::BothZero);
        }
        let f = &a.field;
        let (mut r0, mut r1) = (a.clone(), b.clone());
        let (mut s0, mut s1) = (Self::one(f), Self::zero(f));
        let (mut t0, mut t1) = (Self::zero(f), Self::one(f));
        while !r1.is_zero() {
            let (quot, rem) = r0.div_rem(&r1)?;
            r0 = std::mem::replace(&mut r1, rem);
            let s2 = s0.sub(&quot.mul(&s1)?)?;
            s0 = std::mem::replace(&mut s1, s2);
            let t2 = t0.sub(&quot.mul(&t1)?)?;
            t0 = std::mem::replace(&mut t1, t2);
        }
        let inv = f.inv(r0.leading())?;
        let out = (r0.scale(inv), s0.scale(inv), t0.scale(inv));
        #[cfg(debug_assertions)]
        {
            let lhs = out.1.mul(a)?.add(&out.2.mul(b)?)?;
            debug_assert_eq!(lhs, out.0, "Bezout identity");
        }
        Ok(out)
    }

    pub fn gcd(a: &Self, b: &Self) -> Result<Self> {
        a.check(b)?;
        if a.is_zero() && b.is_zero() {
            return Err(Error::BothZero);
        }
        let (mut r0, mut r1) = (a.clone(), b.clone());
        while !r1.is_zero() {
            let rem = r0.rem(&r1)?;
            r0 = std::mem::replace(&mut r1, rem);
        }
        Ok(r0.monic())
    }

    /// Inverse of `self` modulo `m`, if they are coprime.
    pub fn inv_mod(&self, m: &Self) -> Result<Self> {
        let (g, u, _) = Self::egcd(&self.rem(m)?, m)?;
        if !g.is_one() {
            return Err(Error::NotAUnit);
        }
        u.rem(m)
    }

    pub fn derivative(&self) -> Self {
        let f = &self.field;
        let v = self
            .coeffs
            .iter()
            .enumerate()
            .skip(1)
            .map(|(i, &c)| f.mul(c, f.from_int((i as u64 % f.p() as u64) as i64)))
            .collect();
        Self::from_raw(f, v)
    }

    pub fn mul_mod(&self, other: &Self, m: &Self) -> Result<Self> {
        self.mul(other)?.rem(m)
    }

    pub fn pow_mod(&self, e: &BigUint, m: &Self) -> Result<Self> {
        let mut acc = Self::one(&self.field).rem(m)?;
        let base = self.rem(m)?;
        for i in (0..e.bits()).rev() {
            acc = acc.mul_mod(&acc, m)?;
            if e.bit(i) {
                acc = acc.mul_mod(&base, m)?;
            }
        }
        Ok(acc)
    }

    /// Irreducibility over F_q by Ben-Or's test: no factor of degree
    /// `d <= deg/2`, checked via `gcd(x^{q^d} − x, self)`.
    pub fn is_irreducible(&self) -> bool {
        let deg = match self.degree() {
            Some(d) if d >= 1 => d,
            _ => return false,
        };
        if deg == 1 {
            return true;
        }
        let f = &self.field;
        let q = BigUint::from(f.q());
        let x = Self::x(f);
        let mut h = x.clone();
        for _ in 1..=deg / 2 {
            h = h.pow_mod(&q, self).expect("nonzero modulus");
            let g = Self::gcd(&h.sub(&x).expect("same field"), self).expect("nonzero");
            if !g.is_one() {
                return false;
            }
        }
        true
    }

    /// Canonical text, e.g. `1*x^20+2*x^15+1*x^0`; `0` for the zero polynomial.
    pub fn to_text(&self) -> String {
        render_terms(&self.field, &self.coeffs, "x")
    }
}

pub(crate) fn render_terms(field: &FieldSpec, coeffs: &[u32], var: &str) -> String {
    let terms: Vec<String> = coeffs
        .iter()
        .enumerate()
        .rev()
        .filter(|(_, &c)| c != 0)
        .map(|(e, &c)| format!("{}*{var}^{e}", field.render_coeff(c)))
        .collect();
    if terms.is_empty() {
        "0".to_string()
    } else {
        terms.join("+")
    }
}

impl fmt::Display for Poly {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(&self.to_text())
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn p(field: &FieldSpec, c: &[u32]) -> Poly {
        Poly::from_raw(field, c.to_vec())
    }

    #[test]
    fn gcd_examples() {
        let f2 = FieldSpec::prime(2).unwrap();
        let a = p(&f2, &[1, 1, 1]);
        let b = p(&f2, &[1, 1]);
        assert!(Poly::gcd(&a, &b).unwrap().is_one());
        let x3 = Poly::xn_minus_one(&f2, 3);
        assert_eq!(Poly::gcd(&b, &x3).unwrap(), b);
        assert_eq!(Poly::gcd(&a, &a).unwrap(), a.monic());
        let z = Poly::zero(&f2);
        assert_eq!(Poly::gcd(&z, &z), Err(Error::BothZero));
        assert_eq!(Poly::egcd(&z, &z).map(|_| ()), Err(Error::BothZero));
    }

    #[test]
    fn bezout_identity_holds() {
        let f5 = FieldSpec::prime(5).unwrap();
        let a = p(&f5, &[3, 0, 2, 1, 4]);
        let b = p(&f5, &[1, 2, 0, 3]);
        let (g, u, v) = Poly::egcd(&a, &b).unwrap();
        assert_eq!(u.mul(&a).unwrap().add(&v.mul(&b).unwrap()).unwrap(), g);
        assert!(g.is_monic());
    }

    #[test]
    fn division_round_trip() {
        let f3 = FieldSpec::prime(3).unwrap();
        let a = p(&f3, &[1, 2, 0, 1, 2, 2]);
        let b = p(&f3, &[2, 0, 1]);
        let (qt, r) = a.div_rem(&b).unwrap();
        assert!(r.degree().unwrap_or(0) < 2);
        assert_eq!(qt.mul(&b).unwrap().add(&r).unwrap(), a);
        assert_eq!(a.div_rem(&Poly::zero(&f3)).map(|_| ()), Err(Error::ZeroInverse));
    }

    #[test]
    fn irreducibility() {
        let f2 = FieldSpec::prime(2).unwrap();
        assert!(p(&f2, &[1, 1, 0, 1]).is_irreducible());
        assert!(p(&f2, &[1, 0, 1, 1]).is_irreducible());
        assert!(!p(&f2, &[1, 0, 0, 1]).is_irreducible());
        assert!(!p(&f2, &[1, 0, 1]).is_irreducible());
        let f3 = FieldSpec::prime(3).unwrap();
        assert!(p(&f3, &[1, 0, 1]).is_irreducible());
        assert!(!p(&f3, &[2, 0, 1]).is_irreducible());
        // product of two irreducible quadratics has no root but is reducible
        let q = p(&f3, &[1, 0, 1]).mul(&p(&f3, &[2, 1, 1])).unwrap();
        assert!(!q.is_irreducible());
    }

    #[test]
    fn text_format() {
        let f3 = FieldSpec::prime(3).unwrap();
        let a = p(&f3, &[1, 0, 0, 2]);
        assert_eq!(a.to_text(), "2*x^3+1*x^0");
        assert_eq!(Poly::zero(&f3).to_text(), "0");
    }
}
