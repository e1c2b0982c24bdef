//! The α-cyclic shift S_α(F) = F ∘ αx^{[1]}, its orbits and the inverses
//! and involutions it transports.

use crate::error::{Error, Result};
use crate::fields::{arith, ExtElement};
use crate::linearized::LinearizedPoly;

/// Default cap on the number of orbit members materialized.
pub const DEFAULT_CLASS_CAP: u64 = 100_000;

/// The orbit of a permutation under S_α.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct ShiftClass {
    pub representative: LinearizedPoly,
    pub alpha: ExtElement,
    pub order: u64,
    /// S_α^k(F) for k = 0, ..., order − 1.
    pub members: Vec<LinearizedPoly>,
}

fn check_alpha(f: &LinearizedPoly, alpha: &ExtElement) -> Result<()> {
    if alpha.spec() != f.spec() {
        return Err(Error::SpecMismatch);
    }
    if alpha.is_zero() {
        return Err(Error::ZeroAlpha);
    }
    Ok(())
}

/// S_α(F): slot i + 1 (mod n) receives α^{q^i} f_i.
pub fn alpha_shift(f: &LinearizedPoly, alpha: &ExtElement) -> Result<LinearizedPoly> {
    check_alpha(f, alpha)?;
    let spec = f.spec();
    let n = f.n();
    let mut out = vec![spec.zero_raw(); n];
    let mut conj = alpha.coeffs().to_vec();
    for (i, fi) in f.coeffs_raw().iter().enumerate() {
        if i > 0 {
            conj = spec.frob_raw(&conj);
        }
        out[(i + 1) % n] = spec.mul_raw(&conj, fi);
    }
    Ok(LinearizedPoly::from_raw(spec, out))
}

/// S_α^k(F).
pub fn alpha_shift_pow(f: &LinearizedPoly, alpha: &ExtElement, k: u64) -> Result<LinearizedPoly> {
    check_alpha(f, alpha)?;
    let mut g = f.clone();
    for _ in 0..k {
        g = alpha_shift(&g, alpha)?;
    }
    Ok(g)
}

fn norm_order(alpha: &ExtElement) -> Result<u64> {
    let norm = alpha.norm()?;
    norm.order()
}

/// α-cyclic order n·t of a permutation, t the order of N(α) in F_q^*.
pub fn cyclic_order(f: &LinearizedPoly, alpha: &ExtElement) -> Result<u64> {
    check_alpha(f, alpha)?;
    if !f.is_permutation_rank() {
        return Err(Error::NotAPermutation);
    }
    Ok(f.n() as u64 * norm_order(alpha)?)
}

/// The orbit length found by applying S_α until F recurs.
pub fn cyclic_order_by_iteration(f: &LinearizedPoly, alpha: &ExtElement, cap: u64) -> Result<u64> {
    check_alpha(f, alpha)?;
    let mut g = alpha_shift(f, alpha)?;
    let mut k = 1;
    while &g != f {
        if k >= cap {
            return Err(Error::TooLarge {
                size: format!("orbit longer than {k}"),
                cap,
            });
        }
        g = alpha_shift(&g, alpha)?;
        k += 1;
    }
    Ok(k)
}

/// Whether N(α) generates F_q^*, giving the maximal order (q − 1)n.
pub fn is_maximal_order_element(alpha: &ExtElement) -> Result<bool> {
    if alpha.is_zero() {
        return Err(Error::ZeroAlpha);
    }
    let q = alpha.spec().base().q() as u64;
    Ok(norm_order(alpha)? == q - 1)
}

pub fn shift_class(f: &LinearizedPoly, alpha: &ExtElement) -> Result<ShiftClass> {
    shift_class_with_cap(f, alpha, DEFAULT_CLASS_CAP)
}

pub fn shift_class_with_cap(f: &LinearizedPoly, alpha: &ExtElement, cap: u64) -> Result<ShiftClass> {
    let order = cyclic_order(f, alpha)?;
    if order > cap {
        return Err(Error::TooLarge {
            size: order.to_string(),
            cap,
        });
    }
    let mut members = Vec::with_capacity(order as usize);
    let mut g = f.clone();
    for _ in 0..order {
        let next = alpha_shift(&g, alpha)?;
        members.push(g);
        g = next;
    }
    if &g != f {
        return Err(Error::InternalError(
            "orbit did not close after the predicted order".into(),
        ));
    }
    Ok(ShiftClass {
        representative: f.clone(),
        alpha: alpha.clone(),
        order,
        members,
    })
}

/// Checks the hypotheses under which S_α transports inverses: F_q
/// coefficients, gcd(n, q − 1) = 1 and α a generator of F_q^*.
fn shift_hypotheses(f: &LinearizedPoly, alpha: &ExtElement) -> Result<Vec<String>> {
    check_alpha(f, alpha)?;
    let q = f.spec().base().q() as u64;
    let n = f.n() as u64;
    let mut failed = Vec::new();
    if arith::gcd(n, q - 1) != 1 {
        failed.push(format!("gcd(n, q - 1) = gcd({n}, {}) != 1", q - 1));
    }
    match alpha.to_base() {
        None => failed.push("alpha is not in F_q".into()),
        Some(a) => {
            if a.order()? != q - 1 {
                failed.push("alpha is not primitive in F_q^*".into());
            }
        }
    }
    if !f.has_base_coeffs() {
        failed.push("coefficients are not all in F_q".into());
    }
    Ok(failed)
}

/// The inverse of S_α^t(F) is S_α^{(q−1)n − t}(F^{-1}).
pub fn shifted_inverse(f_inv: &LinearizedPoly, alpha: &ExtElement, t: u64) -> Result<LinearizedPoly> {
    let mut failed = shift_hypotheses(f_inv, alpha)?;
    let full = (f_inv.spec().base().q() as u64 - 1) * f_inv.n() as u64;
    if t > full {
        failed.push(format!("t = {t} exceeds (q - 1)n = {full}"));
    }
    if failed.is_empty() && !f_inv.is_permutation_rank() {
        failed.push("the given inverse is not a permutation".into());
    }
    if !failed.is_empty() {
        return Err(Error::HypothesisViolated(failed));
    }
    alpha_shift_pow(f_inv, alpha, full - t)
}

/// S_α^{(q−1)n/2}(F) for an involution F.
pub fn half_order_involution(f: &LinearizedPoly, alpha: &ExtElement) -> Result<LinearizedPoly> {
    let full = (f.spec().base().q() as u64 - 1) * f.n() as u64;
    if full % 2 == 1 {
        return Err(Error::OddOrder(full));
    }
    let mut failed = shift_hypotheses(f, alpha)?;
    if failed.is_empty() && !f.is_involution() {
        failed.push("F is not an involution".into());
    }
    if !failed.is_empty() {
        return Err(Error::HypothesisViolated(failed));
    }
    let g = alpha_shift_pow(f, alpha, full / 2)?;
    if !g.is_involution() {
        return Err(Error::InternalError("half-order shift is not an involution".into()));
    }
    Ok(g)
}

/// Multiplicative order of N(α) as used by [`cyclic_order`]; exposed for
/// the discrete-log cross-check.
pub fn norm_order_of(alpha: &ExtElement) -> Result<u64> {
    if alpha.is_zero() {
        return Err(Error::ZeroAlpha);
    }
    norm_order(alpha)
}

/// t from the discrete-log form: least t ≥ 1 with l·t ≡ 0 mod (q − 1).
pub fn order_from_log(l: u64, q: u64) -> u64 {
    let m = q - 1;
    m / arith::gcd(l % m, m)
}
