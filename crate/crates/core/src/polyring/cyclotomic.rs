//! q-cyclotomic cosets mod n and the factorization of x^n − 1 over F_q.

use num_bigint::BigUint;

use crate::error::{Error, Result};
use crate::fields::{arith, ExtFieldSpec};

use super::{Poly, RingSpec};

/// A q-cyclotomic coset {j, jq, jq^2, ...} mod n.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct CyclotomicCoset {
    /// Smallest member.
    pub representative: usize,
    /// Members in ascending order.
    pub members: Vec<usize>,
}

impl CyclotomicCoset {
    pub fn size(&self) -> usize {
        self.members.len()
    }
}

/// All q-cyclotomic cosets mod n, ordered by (size, representative).
///
/// Size-major ordering puts the trivial coset {0} first and lists the
/// larger blocks after the smaller ones, which is the component order used
/// throughout the crate.
pub fn cyclotomic_cosets(spec: &RingSpec) -> Vec<CyclotomicCoset> {
    let n = spec.n();
    let q = spec.base().q() as u64 % n as u64;
    let mut seen = vec![false; n];
    let mut out = Vec::new();
    for rep in 0..n {
        if seen[rep] {
            continue;
        }
        let mut members = Vec::new();
        let mut j = rep;
        while !seen[j] {
            seen[j] = true;
            members.push(j);
            j = (j as u64 * q % n as u64) as usize;
        }
        members.sort_unstable();
        out.push(CyclotomicCoset {
            representative: rep,
            members,
        });
    }
    out.sort_by_key(|c| (c.size(), c.representative));
    out
}

/// Monic irreducible factors f_i of x^n − 1 over F_q, one per coset and in
/// coset order, computed as Π_{j ∈ C_i} (x − ζ^j) for a primitive n-th root
/// of unity ζ in the splitting field F_{q^m}, m = ord_n(q).
pub fn factor_xn_minus_1(spec: &RingSpec) -> Result<Vec<(CyclotomicCoset, Poly)>> {
    let base = spec.base();
    let n = spec.n();
    let cosets = cyclotomic_cosets(spec);
    if n == 1 {
        let f = Poly::from_raw(base, vec![base.neg(1), 1]);
        return Ok(cosets.into_iter().map(|c| (c, f.clone())).collect());
    }
    let m = arith::integer_order_mod(base.q() as u64, n as u64)? as usize;
    let ext = ExtFieldSpec::splitting(base, m)?;
    let zeta = root_of_unity(&ext, n)?;

    let mut powers = Vec::with_capacity(n);
    let mut acc = ext.one_raw();
    for _ in 0..n {
        powers.push(acc.clone());
        acc = ext.mul_raw(&acc, &zeta);
    }

    let mut out = Vec::with_capacity(cosets.len());
    for coset in cosets {
        // Coefficients over F_{q^m}, little-endian in x.
        let mut prod: Vec<Vec<u32>> = vec![ext.one_raw()];
        for &j in &coset.members {
            let root = &powers[j];
            let mut next = vec![ext.zero_raw(); prod.len() + 1];
            for (i, c) in prod.iter().enumerate() {
                next[i + 1] = ext.add_raw(&next[i + 1], c);
                next[i] = ext.sub_raw(&next[i], &ext.mul_raw(c, root));
            }
            prod = next;
        }
        let coeffs = prod
            .iter()
            .map(|c| {
                if ExtFieldSpec::is_base_raw(c) {
                    Ok(c[0])
                } else {
                    Err(Error::InternalError(format!(
                        "coset factor for representative {} is not over F_q",
                        coset.representative
                    )))
                }
            })
            .collect::<Result<Vec<_>>>()?;
        out.push((coset, Poly::from_raw(base, coeffs)));
    }

    let product = out
        .iter()
        .try_fold(Poly::one(base), |acc, (_, f)| acc.mul(f))?;
    if product != spec.modulus() {
        return Err(Error::InternalError(
            "factor product differs from x^n - 1".into(),
        ));
    }
    Ok(out)
}

/// An element of exact order n, found by scanning γ^((q^m − 1)/n) over
/// successive γ in enumeration order.
fn root_of_unity(ext: &ExtFieldSpec, n: usize) -> Result<Vec<u32>> {
    let cofactor = (ext.order() - 1u32) / BigUint::from(n);
    let primes: Vec<u64> = arith::factor_u64(n as u64).iter().map(|&(p, _)| p).collect();
    let one = ext.one_raw();
    for idx in 2.. {
        let gamma = ext.element_from_index(idx);
        let zeta = ext.pow_raw(&gamma, &cofactor);
        if primes
            .iter()
            .all(|&r| ext.pow_raw(&zeta, &BigUint::from(n as u64 / r)) != one)
        {
            return Ok(zeta);
        }
        if idx > 1 << 20 {
            break;
        }
    }
    Err(Error::InternalError("no primitive n-th root of unity found".into()))
}

/// Whether x^n − 1 is squarefree over F_q; holds whenever gcd(n, q) = 1.
pub fn is_squarefree(spec: &RingSpec) -> bool {
    let m = spec.modulus();
    Poly::gcd(&m, &m.derivative())
        .map(|g| g.is_one())
        .unwrap_or(false)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::fields::FieldSpec;

    fn ring(q: u64, n: usize) -> RingSpec {
        RingSpec::new(&FieldSpec::from_order(q).unwrap(), n).unwrap()
    }

    #[test]
    fn cosets_mod_25_over_f3() {
        let c = cyclotomic_cosets(&ring(3, 25));
        assert_eq!(c.len(), 3);
        assert_eq!(c[0].members, vec![0]);
        assert_eq!(c[1].members, vec![5, 10, 15, 20]);
        assert_eq!(c[2].size(), 20);
        assert_eq!(c[2].representative, 1);
    }

    #[test]
    fn cosets_partition() {
        for (q, n) in [(2, 7), (3, 8), (8, 11), (11, 9), (4, 15), (3, 125)] {
            let c = cyclotomic_cosets(&ring(q, n));
            let mut all: Vec<usize> = c.iter().flat_map(|c| c.members.clone()).collect();
            all.sort_unstable();
            assert_eq!(all, (0..n).collect::<Vec<_>>());
        }
    }

    #[test]
    fn factors_are_irreducible_and_multiply_out() {
        for (q, n) in [(2, 3), (2, 7), (3, 2), (3, 5), (3, 25), (5, 2), (4, 5), (8, 11), (9, 4)] {
            let r = ring(q, n);
            let fs = factor_xn_minus_1(&r).unwrap();
            for (coset, f) in &fs {
                assert_eq!(f.degree(), Some(coset.size()));
                assert!(f.is_monic() && f.is_irreducible(), "q={q} n={n} {f}");
            }
        }
    }

    #[test]
    fn factors_of_x25_over_f3() {
        let fs = factor_xn_minus_1(&ring(3, 25)).unwrap();
        let f3 = FieldSpec::prime(3).unwrap();
        assert_eq!(fs[0].1, Poly::from_raw(&f3, vec![2, 1]));
        assert_eq!(fs[1].1, Poly::from_raw(&f3, vec![1, 1, 1, 1, 1]));
        let mut phi25 = vec![0; 21];
        for i in 0..5 {
            phi25[5 * i] = 1;
        }
        assert_eq!(fs[2].1, Poly::from_raw(&f3, phi25));
    }

    #[test]
    fn squarefree() {
        assert!(is_squarefree(&ring(3, 125)));
        assert!(is_squarefree(&ring(8, 11)));
    }
}
