//! Brute-force checks by full enumeration, used to validate the algebraic
//! tests at desk scale. Every enumeration is capped; exceeding a cap is an
//! error rather than a silent switch to sampling.

use rand::SeedableRng;
use rand_chacha::ChaCha8Rng;

use crate::error::{Error, Result};
use crate::fields::{ExtElement, ExtFieldSpec};
use crate::linearized::LinearizedPoly;
use crate::polyring::{RingElement, RingSpec};

/// Default enumeration cap (number of elements visited).
pub const DEFAULT_CAP: u64 = 1_000_000;

fn field_size(spec: &ExtFieldSpec, cap: u64) -> Result<u64> {
    match spec.size() {
        Some(s) if s <= cap => Ok(s),
        _ => Err(Error::TooLarge {
            size: spec.order().to_string(),
            cap,
        }),
    }
}

fn ring_size(spec: &RingSpec, cap: u64) -> Result<u64> {
    let q = spec.base().q() as u64;
    match q.checked_pow(spec.n() as u32) {
        Some(s) if s <= cap => Ok(s),
        _ => Err(Error::TooLarge {
            size: format!("{q}^{}", spec.n()),
            cap,
        }),
    }
}

pub fn is_bijection_bruteforce(f: &LinearizedPoly) -> Result<bool> {
    is_bijection_bruteforce_with_cap(f, DEFAULT_CAP)
}

/// Evaluates F on all of F_{q^n} and checks the images are distinct.
pub fn is_bijection_bruteforce_with_cap(f: &LinearizedPoly, cap: u64) -> Result<bool> {
    let spec = f.spec();
    let size = field_size(spec, cap)?;
    let mut seen = vec![false; size as usize];
    for i in 0..size {
        let image = f.evaluate_raw(&spec.element_from_index(i));
        let slot = &mut seen[spec.index_of(&image) as usize];
        if *slot {
            return Ok(false);
        }
        *slot = true;
    }
    Ok(true)
}

fn collect_where(
    f: &LinearizedPoly,
    cap: u64,
    keep: impl Fn(&[u32], &[u32]) -> bool,
) -> Result<Vec<ExtElement>> {
    let spec = f.spec();
    let size = field_size(spec, cap)?;
    Ok((0..size)
        .map(|i| spec.element_from_index(i))
        .filter(|a| keep(a, &f.evaluate_raw(a)))
        .map(|a| ExtElement::from_raw(spec, a))
        .collect())
}

/// All a with F(a) = 0.
pub fn kernel(f: &LinearizedPoly) -> Result<Vec<ExtElement>> {
    collect_where(f, DEFAULT_CAP, |_, image| image.iter().all(|&c| c == 0))
}

/// All a with F(a) = a.
pub fn fixed_points(f: &LinearizedPoly) -> Result<Vec<ExtElement>> {
    collect_where(f, DEFAULT_CAP, |a, image| a == image)
}

/// Every f ∈ R_{q,n} with f² = 1, by enumeration.
pub fn sqrt_unity_bruteforce(spec: &RingSpec) -> Result<Vec<RingElement>> {
    let size = ring_size(spec, DEFAULT_CAP)?;
    let mut out = Vec::new();
    for i in 0..size {
        let f = spec.element_from_index(i);
        if f.mul(&f)?.is_one() {
            out.push(f);
        }
    }
    Ok(out)
}

/// Least l ≥ 0 with β^l = a, by walking the powers of β.
pub fn discrete_log(a: &ExtElement, beta: &ExtElement) -> Result<u64> {
    if a.spec() != beta.spec() {
        return Err(Error::SpecMismatch);
    }
    if a.is_zero() {
        return Err(Error::ZeroOrder);
    }
    let spec = a.spec();
    let group = field_size(spec, DEFAULT_CAP + 1)? - 1;
    let one = spec.one_raw();
    let mut acc = one.clone();
    let mut found = None;
    for l in 0..group {
        if found.is_none() && acc == a.coeffs() {
            found = Some(l);
        }
        acc = spec.mul_raw(&acc, beta.coeffs());
        if acc == one && l + 1 < group {
            return Err(Error::NotPrimitive);
        }
    }
    found.ok_or(Error::NotPrimitive)
}

/// F(F(a)) = a on `samples` pseudorandom elements drawn from `seed`.
pub fn involution_check_pointwise(f: &LinearizedPoly, samples: usize, seed: u64) -> bool {
    let spec = f.spec();
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    (0..samples).all(|_| {
        let a = spec.random_raw(&mut rng);
        f.evaluate_raw(&f.evaluate_raw(&a)) == a
    })
}
