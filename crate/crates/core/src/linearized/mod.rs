//! Linearized polynomials F(x) = Σ f_i x^{[i]} over F_{q^n}, where
//! x^{[i]} = x^{q^i}, kept in reduced form with exactly n slots.

mod perm;

pub use perm::{
    a_complete_check, a_complete_sufficient, a_complete_verdicts, binomial_is_permutation, sign_vector_associates,
    sign_vector_involutions, PermutationReport, SignedInvolution,
};

use std::fmt;

use crate::error::{Error, Result};
use crate::fields::{linalg, ExtElement, ExtFieldSpec, FieldElement};
use crate::polyring::{text, RingElement, RingSpec};

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct LinearizedPoly {
    spec: ExtFieldSpec,
    /// Slot i holds f_i as a raw element of F_{q^n}.
    coeffs: Vec<Vec<u32>>,
}

impl LinearizedPoly {
    pub fn new(spec: &ExtFieldSpec, coeffs: &[ExtElement]) -> Result<Self> {
        if coeffs.len() != spec.n() {
            return Err(Error::LengthMismatch {
                expected: spec.n(),
                got: coeffs.len(),
            });
        }
        if coeffs.iter().any(|c| c.spec() != spec) {
            return Err(Error::SpecMismatch);
        }
        Ok(Self::from_raw(
            spec,
            coeffs.iter().map(|c| c.coeffs().to_vec()).collect(),
        ))
    }

    pub(crate) fn from_raw(spec: &ExtFieldSpec, coeffs: Vec<Vec<u32>>) -> Self {
        debug_assert_eq!(coeffs.len(), spec.n());
        LinearizedPoly {
            spec: spec.clone(),
            coeffs,
        }
    }

    /// Polynomial with F_q coefficients given as raw base-field values;
    /// slots beyond n wrap around.
    pub fn from_base_coeffs(spec: &ExtFieldSpec, coeffs: &[u32]) -> Result<Self> {
        let base = spec.base();
        if coeffs.iter().any(|&c| c >= base.q()) {
            return Err(Error::BadInput("coefficient outside F_q".into()));
        }
        let mut slots = vec![0; spec.n()];
        for (i, &c) in coeffs.iter().enumerate() {
            let s = &mut slots[i % spec.n()];
            *s = base.add(*s, c);
        }
        Ok(Self::from_raw(
            spec,
            slots.into_iter().map(|c| spec.embed_raw(c)).collect(),
        ))
    }

    pub fn zero(spec: &ExtFieldSpec) -> Self {
        Self::from_raw(spec, vec![spec.zero_raw(); spec.n()])
    }

    /// The identity map x, i.e. the coefficient vector (1, 0, ..., 0).
    pub fn identity(spec: &ExtFieldSpec) -> Self {
        Self::monomial_raw(spec, spec.one_raw(), 0)
    }

    /// c·x^{[i]}, slot taken mod n.
    pub fn monomial(c: &ExtElement, i: usize) -> Self {
        Self::monomial_raw(c.spec(), c.coeffs().to_vec(), i)
    }

    fn monomial_raw(spec: &ExtFieldSpec, c: Vec<u32>, i: usize) -> Self {
        let mut v = vec![spec.zero_raw(); spec.n()];
        v[i % spec.n()] = c;
        Self::from_raw(spec, v)
    }

    pub fn spec(&self) -> &ExtFieldSpec {
        &self.spec
    }

    pub fn n(&self) -> usize {
        self.spec.n()
    }

    pub fn coeff(&self, i: usize) -> ExtElement {
        ExtElement::from_raw(&self.spec, self.coeffs[i % self.n()].clone())
    }

    pub(crate) fn coeffs_raw(&self) -> &[Vec<u32>] {
        &self.coeffs
    }

    pub fn is_zero(&self) -> bool {
        self.coeffs.iter().all(|c| c.iter().all(|&d| d == 0))
    }

    pub fn is_identity(&self) -> bool {
        *self == Self::identity(&self.spec)
    }

    /// Whether every coefficient lies in F_q, i.e. F ∈ L_n(F_q).
    pub fn has_base_coeffs(&self) -> bool {
        self.coeffs.iter().all(|c| ExtFieldSpec::is_base_raw(c))
    }

    /// The ring R_{q,n} sharing q and n with this polynomial.
    pub fn ring(&self) -> RingSpec {
        RingSpec::new(self.spec.base(), self.n()).expect("extension degree is coprime to p")
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
        let v = self
            .coeffs
            .iter()
            .zip(&other.coeffs)
            .map(|(a, b)| self.spec.add_raw(a, b))
            .collect();
        Ok(Self::from_raw(&self.spec, v))
    }

    pub fn sub(&self, other: &Self) -> Result<Self> {
        self.add(&other.neg())
    }

    pub fn neg(&self) -> Self {
        let v = self.coeffs.iter().map(|a| self.spec.neg_raw(a)).collect();
        Self::from_raw(&self.spec, v)
    }

    /// c·F (left multiplication of every coefficient).
    pub fn scale(&self, c: &ExtElement) -> Result<Self> {
        if c.spec() != &self.spec {
            return Err(Error::SpecMismatch);
        }
        let v = self
            .coeffs
            .iter()
            .map(|a| self.spec.mul_raw(c.coeffs(), a))
            .collect();
        Ok(Self::from_raw(&self.spec, v))
    }

    /// F + λx.
    pub fn add_lambda_x(&self, lambda: &ExtElement) -> Result<Self> {
        self.add(&Self::monomial(lambda, 0))
    }

    /// Σ f_i x^i, defined only for F_q coefficients.
    pub fn conventional_associate(&self) -> Result<RingElement> {
        if !self.has_base_coeffs() {
            return Err(Error::CoefficientsNotInBaseField);
        }
        let raw: Vec<u32> = self.coeffs.iter().map(|c| c[0]).collect();
        RingElement::new(&self.ring(), &raw)
    }

    /// Σ f_i x^{[i]} from f = Σ f_i x^i.
    pub fn linearized_associate(f: &RingElement, spec: &ExtFieldSpec) -> Result<Self> {
        if f.spec().base() != spec.base() || f.spec().n() != spec.n() {
            return Err(Error::SpecMismatch);
        }
        Self::from_base_coeffs(spec, f.coeffs())
    }

    /// F(a) = Σ f_i a^{q^i}.
    pub fn evaluate(&self, a: &ExtElement) -> Result<ExtElement> {
        if a.spec() != &self.spec {
            return Err(Error::SpecMismatch);
        }
        Ok(ExtElement::from_raw(&self.spec, self.evaluate_raw(a.coeffs())))
    }

    pub(crate) fn evaluate_raw(&self, a: &[u32]) -> Vec<u32> {
        let spec = &self.spec;
        let last = self.coeffs.iter().rposition(|c| c.iter().any(|&d| d != 0));
        let mut acc = spec.zero_raw();
        let Some(last) = last else {
            return acc;
        };
        let mut conj = a.to_vec();
        for (i, c) in self.coeffs.iter().enumerate().take(last + 1) {
            if i > 0 {
                conj = spec.frob_raw(&conj);
            }
            if c.iter().any(|&d| d != 0) {
                acc = spec.add_raw(&acc, &spec.mul_raw(c, &conj));
            }
        }
        acc
    }

    /// Symbolic composition F ∘ G: coefficient k is Σ_{i+j≡k} f_i g_j^{q^i}.
    pub fn compose(&self, g: &Self) -> Result<Self> {
        self.check(g)?;
        let spec = &self.spec;
        let n = self.n();
        let mut out = vec![spec.zero_raw(); n];
        for (j, gj) in g.coeffs.iter().enumerate() {
            if gj.iter().all(|&d| d == 0) {
                continue;
            }
            let fixed = ExtFieldSpec::is_base_raw(gj);
            let mut conj = gj.clone();
            for (i, fi) in self.coeffs.iter().enumerate() {
                if i > 0 && !fixed {
                    conj = spec.frob_raw(&conj);
                }
                if fi.iter().all(|&d| d == 0) {
                    continue;
                }
                let k = (i + j) % n;
                out[k] = spec.add_raw(&out[k], &spec.mul_raw(fi, &conj));
            }
        }
        Ok(Self::from_raw(spec, out))
    }

    /// F composed with itself `k` times (F^0 is the identity).
    pub fn compose_pow(&self, k: usize) -> Result<Self> {
        let mut acc = Self::identity(&self.spec);
        for _ in 0..k {
            acc = acc.compose(self)?;
        }
        Ok(acc)
    }

    /// Rank test: F is a permutation iff its images of the basis
    /// 1, z, ..., z^{n−1} are F_q-independent. Uses F(z^k) = Σ f_i (z^{q^i})^k.
    pub fn is_permutation_rank(&self) -> bool {
        let spec = &self.spec;
        let n = self.n();
        let mut rows = vec![spec.zero_raw(); n];
        let mut w = spec.z_raw();
        for (i, fi) in self.coeffs.iter().enumerate() {
            if i > 0 {
                w = spec.frob_raw(&w);
            }
            if fi.iter().all(|&d| d == 0) {
                continue;
            }
            let mut pow = fi.clone();
            for row in rows.iter_mut() {
                *row = spec.add_raw(row, &pow);
                pow = spec.mul_raw(&pow, &w);
            }
        }
        linalg::rank(spec.base(), &rows) == n
    }

    /// F ∘ F = x.
    pub fn is_involution(&self) -> bool {
        if self.has_base_coeffs() {
            return self
                .conventional_associate()
                .and_then(|f| f.mul(&f))
                .map(|sq| sq.is_one())
                .unwrap_or(false);
        }
        self.compose(self).map(|c| c.is_identity()).unwrap_or(false)
    }

    /// Sum of the coefficients, defined for F_q coefficients.
    pub fn coefficient_sum(&self) -> Result<FieldElement> {
        Ok(self.conventional_associate()?.coefficient_sum())
    }

    /// Canonical text: `c*x^[i]` terms joined by ` + `, descending slots.
    pub fn to_text(&self) -> String {
        let terms: Vec<String> = self
            .coeffs
            .iter()
            .enumerate()
            .rev()
            .filter(|(_, c)| c.iter().any(|&d| d != 0))
            .map(|(i, c)| format!("{}*x^[{i}]", self.spec.render_raw(c)))
            .collect();
        if terms.is_empty() {
            "0".into()
        } else {
            terms.join(" + ")
        }
    }

    /// Parses the text form. Accepts `x^[i]`, `x^{[i]}`, bare `x` for
    /// x^{[0]}, and `x^e` when e is a power of q. Coefficients are F_q
    /// elements or `(c0,c1,...)` vectors over F_q; slots wrap mod n.
    pub fn parse(spec: &ExtFieldSpec, s: &str) -> Result<Self> {
        if s.trim() == "0" {
            return Ok(Self::zero(spec));
        }
        let n = spec.n();
        let q = spec.base().q() as u128;
        let mut out = vec![spec.zero_raw(); n];
        for term in text::split_terms(s)? {
            let slot = match term.power.as_deref() {
                None => {
                    return Err(Error::Parse(format!(
                        "constant term {:?} in a linearized polynomial",
                        term.coeff.unwrap_or_default()
                    )))
                }
                Some("") => 0,
                Some(e) => {
                    if let Some(inner) = e.strip_prefix('[').and_then(|t| t.strip_suffix(']')) {
                        text::parse_exponent(inner)?
                    } else {
                        let e = text::parse_exponent(e)? as u128;
                        let mut slot = 0;
                        let mut pow = 1u128;
                        while pow < e {
                            pow *= q;
                            slot += 1;
                        }
                        if pow != e {
                            return Err(Error::Parse(format!(
                                "exponent {e} is not a power of q = {q}"
                            )));
                        }
                        slot
                    }
                }
            };
            let mut c = match &term.coeff {
                Some(c) => spec.parse_raw(c)?,
                None => spec.one_raw(),
            };
            if term.negative {
                c = spec.neg_raw(&c);
            }
            let slot = slot % n;
            out[slot] = spec.add_raw(&out[slot], &c);
        }
        Ok(Self::from_raw(spec, out))
    }
}

impl fmt::Display for LinearizedPoly {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(&self.to_text())
    }
}
