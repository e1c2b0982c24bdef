//! Exact arithmetic in F_p, F_q = F_p[y]/(m(y)) and F_{q^n} = F_q[z]/(g(z)).

pub mod arith;
mod base;
mod ext;
pub mod linalg;

pub use arith::integer_order_mod;
pub use base::{FieldElement, FieldSpec};
pub use ext::{ExtElement, ExtFieldSpec};
pub(crate) use ext::split_top_level;

use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;

use crate::error::{Error, Result};
use crate::polyring::Poly;

/// A monic irreducible polynomial of exact `degree` over `base`.
///
/// Seed 0 scans candidates `x^degree + tail` with the tail running through
/// F_q^degree in ascending packed order, which yields the lexicographically
/// smallest irreducible (e.g. y^3 + y + 1 over F_2). Any other seed draws
/// tails from a ChaCha stream seeded with it.
pub fn find_irreducible(base: &FieldSpec, degree: usize, seed: u64) -> Result<Poly> {
    if degree == 0 {
        return Err(Error::BadInput("degree must be at least 1".into()));
    }
    let q = base.q() as u64;
    let candidate = |tail: Vec<u32>| {
        let mut c = tail;
        c.push(1);
        Poly::from_raw(base, c)
    };
    if seed == 0 {
        let mut i: u64 = 0;
        loop {
            let mut idx = i;
            let tail = (0..degree)
                .map(|_| {
                    let d = (idx % q) as u32;
                    idx /= q;
                    d
                })
                .collect();
            let poly = candidate(tail);
            if poly.is_irreducible() {
                return Ok(poly);
            }
            i += 1;
        }
    }
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    loop {
        let tail = (0..degree).map(|_| rng.gen_range(0..base.q())).collect();
        let poly = candidate(tail);
        if poly.is_irreducible() {
            return Ok(poly);
        }
    }
}
