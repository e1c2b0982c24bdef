use crate::error::{Error, Result};
use crate::fields::{ExtElement, ExtFieldSpec, FieldElement};
use crate::idempotents::{self, closed_form_is_primitive, IdempotentBasis};
use crate::polyring::RingElement;

use super::LinearizedPoly;

/// Outcome of the idempotent permutation test.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct PermutationReport {
    pub is_permutation: bool,
    /// Whether the coefficient sum vanished, which settles the answer early.
    pub coefficient_sum_rejected: bool,
    /// f·e_i for each component, in basis order.
    pub products: Vec<RingElement>,
}

impl PermutationReport {
    /// Components whose product with f vanishes.
    pub fn zero_components(&self) -> Vec<usize> {
        self.products
            .iter()
            .enumerate()
            .filter(|(_, p)| p.is_zero())
            .map(|(i, _)| i)
            .collect()
    }
}

impl LinearizedPoly {
    fn associate_for(&self, basis: &IdempotentBasis) -> Result<RingElement> {
        let f = self.conventional_associate()?;
        if f.spec() != basis.spec() {
            return Err(Error::SpecMismatch);
        }
        Ok(f)
    }

    /// F ∈ L_n(F_q) permutes F_{q^n} iff f·e_i ≠ 0 for every primitive
    /// idempotent e_i.
    pub fn is_permutation(&self, basis: &IdempotentBasis) -> Result<bool> {
        Ok(self.permutation_report(basis)?.is_permutation)
    }

    pub fn permutation_report(&self, basis: &IdempotentBasis) -> Result<PermutationReport> {
        let f = self.associate_for(basis)?;
        let products = basis
            .idempotents()
            .map(|e| f.mul(e))
            .collect::<Result<Vec<_>>>()?;
        Ok(PermutationReport {
            is_permutation: products.iter().all(|p| !p.is_zero()),
            coefficient_sum_rejected: f.coefficient_sum().is_zero(),
            products,
        })
    }

    /// gcd(f, x^n − 1) = 1.
    pub fn is_permutation_gcd(&self) -> Result<bool> {
        Ok(self.conventional_associate()?.is_unit())
    }

    /// True (reject) when the coefficients sum to zero in F_q; a rejected
    /// polynomial is never a permutation.
    pub fn coefficient_sum_reject(&self) -> Result<bool> {
        Ok(self.coefficient_sum()?.is_zero())
    }

    /// F^{-1} through the components: f^{-1} = Σ (f mod f_i)^{-1} e_i,
    /// cross-checked against the direct inverse in R_{q,n}.
    pub fn compositional_inverse(&self, basis: &IdempotentBasis) -> Result<Self> {
        let f = self.associate_for(basis)?;
        let v = idempotents::project(&f, basis)?;
        let inv = match idempotents::invert_components(&v, basis) {
            Ok(inv) => inv,
            Err(Error::NotAUnit) => return Err(Error::NotAPermutation),
            Err(e) => return Err(e),
        };
        let g = idempotents::reconstruct(&inv, basis)?;
        let direct = f.inverse().map_err(|_| {
            Error::InternalError("component inverse exists but ring inverse does not".into())
        })?;
        if g != direct {
            return Err(Error::InternalError(
                "component inverse differs from ring inverse".into(),
            ));
        }
        Self::linearized_associate(&g, &self.spec)
    }

    /// Values of the p^m sufficient conditions: entry 0 is Σ f_j and entry i
    /// (1 ≤ i ≤ m) is the constant term of f·e_i written with the
    /// closed-form idempotents,
    /// −p^{−m+i−1} Σ_{p∤j} f_{p^m − j p^{i−1}} + (p^{−m+i} − p^{−m+i−1}) Σ_{p|j} f_{p^m − j p^{i−1}}.
    pub fn pm_condition_values(&self, p: u64, m: u32) -> Result<Vec<FieldElement>> {
        let f = self.conventional_associate()?;
        let n = self.n();
        if p.checked_pow(m) != Some(n as u64) {
            return Err(Error::BadInput(format!("n = {n} is not {p}^{m}")));
        }
        let q = self.spec.base().q() as u64;
        if !closed_form_is_primitive(p, m, q)? {
            return Err(Error::ConditionNotMet(format!("p = {p}, m = {m}, q = {q}")));
        }
        let base = self.spec.base();
        let p_inv = base.inv(base.from_int(p as i64))?;
        // p^{-k}
        let pinv = |k: u32| base.pow(p_inv, k as u64);
        let mut out = vec![f.coefficient_sum()];
        for i in 1..=m {
            let step = p.pow(i - 1) as usize;
            let (mut s_not, mut s_div) = (0, 0);
            for j in 0..p.pow(m - i + 1) as usize {
                let c = f.coeffs()[(n - (j * step) % n) % n];
                if j as u64 % p == 0 {
                    s_div = base.add(s_div, c);
                } else {
                    s_not = base.add(s_not, c);
                }
            }
            let w_not = base.neg(pinv(m - i + 1));
            let w_div = base.sub(pinv(m - i), pinv(m - i + 1));
            let v = base.add(base.mul(w_not, s_not), base.mul(w_div, s_div));
            out.push(FieldElement::new(base, v)?);
        }
        Ok(out)
    }

    /// Whether all p^m sufficient conditions hold. `true` implies a
    /// permutation; `false` is inconclusive.
    pub fn pm_sufficient_conditions(&self, p: u64, m: u32) -> Result<bool> {
        Ok(self
            .pm_condition_values(p, m)?
            .iter()
            .all(|v| !v.is_zero()))
    }
}

/// f_i x^{[i]} + f_j x^{[j]} with nonzero f_i, f_j ∈ F_q is a permutation
/// iff f_i + f_j ≠ 0.
pub fn binomial_is_permutation(
    fi: &FieldElement,
    fj: &FieldElement,
    i: usize,
    j: usize,
    n: usize,
) -> Result<bool> {
    if fi.spec() != fj.spec() {
        return Err(Error::SpecMismatch);
    }
    if fi.is_zero() || fj.is_zero() {
        return Err(Error::ZeroCoefficient);
    }
    if i >= j || j >= n {
        return Err(Error::BadInput(format!(
            "need 0 <= i < j < n, got i = {i}, j = {j}, n = {n}"
        )));
    }
    Ok(!fi.add(fj)?.is_zero())
}

/// Verdict for F and each F + λx, λ ∈ A, by the exact test (idempotents
/// for F_q coefficients, rank otherwise).
pub fn a_complete_verdicts(
    f: &LinearizedPoly,
    a: &[ExtElement],
    basis: &IdempotentBasis,
) -> Result<Vec<bool>> {
    if !a.iter().any(ExtElement::is_zero) {
        return Err(Error::ZeroNotInA);
    }
    a.iter()
        .map(|lambda| {
            let g = f.add_lambda_x(lambda)?;
            if g.has_base_coeffs() {
                g.is_permutation(basis)
            } else {
                Ok(g.is_permutation_rank())
            }
        })
        .collect()
}

/// F is A-complete: F + λx permutes F_{q^n} for every λ ∈ A (0 ∈ A).
pub fn a_complete_check(
    f: &LinearizedPoly,
    a: &[ExtElement],
    basis: &IdempotentBasis,
) -> Result<bool> {
    Ok(a_complete_verdicts(f, a, basis)?.into_iter().all(|v| v))
}

/// Sufficient p^m conditions for A-completeness with A ⊂ F_q: condition (i)
/// against −λ and condition (ii) against −(p^{−m+i} − p^{−m+i−1})λ.
pub fn a_complete_sufficient(
    f: &LinearizedPoly,
    a: &[FieldElement],
    p: u64,
    m: u32,
) -> Result<bool> {
    if !a.iter().any(FieldElement::is_zero) {
        return Err(Error::ZeroNotInA);
    }
    let values = f.pm_condition_values(p, m)?;
    let base = f.spec().base();
    let p_inv = base.inv(base.from_int(p as i64))?;
    let pinv = |k: u32| base.pow(p_inv, k as u64);
    for lambda in a {
        if lambda.spec() != base {
            return Err(Error::SpecMismatch);
        }
        if values[0].value() == base.neg(lambda.value()) {
            return Ok(false);
        }
        for i in 1..=m {
            let e0 = base.sub(pinv(m - i), pinv(m - i + 1));
            let rhs = base.neg(base.mul(e0, lambda.value()));
            if values[i as usize].value() == rhs {
                return Ok(false);
            }
        }
    }
    Ok(true)
}

/// One Σ ε_i e_i with its sign vector.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct SignedInvolution {
    /// ε_i ∈ {1, −1}, aligned with the basis.
    pub signs: Vec<i8>,
    pub associate: RingElement,
}

/// All 2^t conventional associates Σ ε_i e_i. In characteristic 2 every sign
/// pattern gives 1, so only the identity is returned.
pub fn sign_vector_associates(basis: &IdempotentBasis) -> Result<Vec<SignedInvolution>> {
    let spec = basis.spec();
    let t = basis.len();
    if spec.base().p() == 2 {
        log::warn!("characteristic 2: +1 = -1, sign vectors collapse to the identity");
        return Ok(vec![SignedInvolution {
            signs: vec![1; t],
            associate: spec.one(),
        }]);
    }
    if t > 20 {
        return Err(Error::TooLarge {
            size: format!("2^{t}"),
            cap: 1 << 20,
        });
    }
    let mut out = Vec::with_capacity(1 << t);
    for mask in 0u32..1 << t {
        let signs: Vec<i8> = (0..t)
            .map(|i| if mask >> (t - 1 - i) & 1 == 1 { -1 } else { 1 })
            .collect();
        let mut f = spec.zero();
        for (s, e) in signs.iter().zip(basis.idempotents()) {
            f = if *s > 0 { f.add(e)? } else { f.sub(e)? };
        }
        out.push(SignedInvolution { signs, associate: f });
    }
    Ok(out)
}

/// The involutions of L_n(F_q) given by the sign vectors, as linearized
/// polynomials over `spec`.
pub fn sign_vector_involutions(
    basis: &IdempotentBasis,
    spec: &ExtFieldSpec,
) -> Result<Vec<LinearizedPoly>> {
    sign_vector_associates(basis)?
        .iter()
        .map(|s| {
            let f = LinearizedPoly::linearized_associate(&s.associate, spec)?;
            debug_assert!(f.is_involution());
            Ok(f)
        })
        .collect()
}
