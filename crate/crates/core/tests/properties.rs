use linperm::idempotents::{invert_components, primitive_idempotents, project, reconstruct};
use linperm::shifts::{alpha_shift, alpha_shift_pow, cyclic_order};
use linperm::{ExtFieldSpec, FieldSpec, IdempotentBasis, LinearizedPoly, RingSpec};
use proptest::prelude::*;

struct Setting {
    base: FieldSpec,
    ring: RingSpec,
    ext: ExtFieldSpec,
    basis: IdempotentBasis,
}

fn setting(q: u64, n: usize) -> Setting {
    let base = FieldSpec::from_order(q).unwrap();
    let ring = RingSpec::new(&base, n).unwrap();
    let ext = ExtFieldSpec::new(&base, n).unwrap();
    let basis = primitive_idempotents(&ring).unwrap();
    Setting { base, ring, ext, basis }
}

const SETTINGS: [(u64, usize); 6] = [(2, 7), (3, 5), (4, 3), (5, 4), (3, 8), (11, 9)];

fn vec_in(q: u64, n: usize) -> impl Strategy<Value = Vec<u32>> {
    proptest::collection::vec(0..q as u32, n)
}

/// (index into SETTINGS, three coefficient vectors of length n).
fn triples() -> impl Strategy<Value = (usize, Vec<u32>, Vec<u32>, Vec<u32>)> {
    (0..SETTINGS.len()).prop_flat_map(|i| {
        let (q, n) = SETTINGS[i];
        (Just(i), vec_in(q, n), vec_in(q, n), vec_in(q, n))
    })
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(48))]

    #[test]
    fn ring_axioms((i, a, b, c) in triples()) {
        let s = setting(SETTINGS[i].0, SETTINGS[i].1);
        let (a, b, c) = (
            s.ring.fold(&a), s.ring.fold(&b), s.ring.fold(&c),
        );
        prop_assert_eq!(a.mul(&b).unwrap(), b.mul(&a).unwrap());
        prop_assert_eq!(a.mul(&b).unwrap().mul(&c).unwrap(), a.mul(&b.mul(&c).unwrap()).unwrap());
        prop_assert_eq!(
            a.mul(&b.add(&c).unwrap()).unwrap(),
            a.mul(&b).unwrap().add(&a.mul(&c).unwrap()).unwrap()
        );
        prop_assert_eq!(a.is_unit(), a.inverse().is_ok());
        if let Ok(inv) = a.inverse() {
            prop_assert!(a.mul(&inv).unwrap().is_one());
        }
    }

    #[test]
    fn composition_is_ring_multiplication((i, a, b, _c) in triples()) {
        let s = setting(SETTINGS[i].0, SETTINGS[i].1);
        let f = LinearizedPoly::from_base_coeffs(&s.ext, &a).unwrap();
        let g = LinearizedPoly::from_base_coeffs(&s.ext, &b).unwrap();
        let fg = f.compose(&g).unwrap();
        prop_assert_eq!(&fg, &g.compose(&f).unwrap());
        prop_assert_eq!(
            fg.conventional_associate().unwrap(),
            f.conventional_associate().unwrap().mul(&g.conventional_associate().unwrap()).unwrap()
        );
        let back = LinearizedPoly::linearized_associate(&f.conventional_associate().unwrap(), &s.ext).unwrap();
        prop_assert_eq!(back, f);
    }

    #[test]
    fn decomposition_round_trips((i, a, _b, _c) in triples()) {
        let s = setting(SETTINGS[i].0, SETTINGS[i].1);
        let f = s.ring.fold(&a);
        let parts = project(&f, &s.basis).unwrap();
        prop_assert_eq!(reconstruct(&parts, &s.basis).unwrap(), f.clone());
        match invert_components(&parts, &s.basis) {
            Ok(inv) => prop_assert_eq!(reconstruct(&inv, &s.basis).unwrap(), f.inverse().unwrap()),
            Err(_) => prop_assert!(!f.is_unit()),
        }
    }

    #[test]
    fn inverses_compose_to_identity((i, a, _b, _c) in triples()) {
        let s = setting(SETTINGS[i].0, SETTINGS[i].1);
        let f = LinearizedPoly::from_base_coeffs(&s.ext, &a).unwrap();
        prop_assert_eq!(f.is_permutation(&s.basis).unwrap(), f.is_permutation_gcd().unwrap());
        if let Ok(inv) = f.compositional_inverse(&s.basis) {
            prop_assert!(f.compose(&inv).unwrap().is_identity());
            prop_assert!(inv.compose(&f).unwrap().is_identity());
        } else {
            prop_assert!(!f.is_permutation_rank());
        }
    }

    #[test]
    fn evaluation_is_linear_and_respects_composition(
        (i, a, b, c) in triples(),
        seed in any::<u64>(),
    ) {
        let (q, n) = SETTINGS[i];
        let s = setting(q, n);
        let f = LinearizedPoly::from_base_coeffs(&s.ext, &a).unwrap();
        let g = LinearizedPoly::from_base_coeffs(&s.ext, &b).unwrap();
        let mut rng = <rand_chacha::ChaCha8Rng as rand::SeedableRng>::seed_from_u64(seed);
        let x = s.ext.element(&s.ext.random_raw(&mut rng)).unwrap();
        let y = s.ext.element(&s.ext.random_raw(&mut rng)).unwrap();
        let lam = s.ext.embed(&s.base.element(c[0]).unwrap()).unwrap();
        let fx = f.evaluate(&x).unwrap();
        prop_assert_eq!(
            f.evaluate(&x.add(&y).unwrap()).unwrap(),
            fx.add(&f.evaluate(&y).unwrap()).unwrap()
        );
        prop_assert_eq!(f.evaluate(&lam.mul(&x).unwrap()).unwrap(), lam.mul(&fx).unwrap());
        prop_assert_eq!(
            f.compose(&g).unwrap().evaluate(&x).unwrap(),
            f.evaluate(&g.evaluate(&x).unwrap()).unwrap()
        );
    }

    #[test]
    fn shifts_form_a_cyclic_action((i, a, _b, c) in triples(), k1 in 0u64..40, k2 in 0u64..40) {
        let (q, n) = SETTINGS[i];
        let s = setting(q, n);
        let f = LinearizedPoly::from_base_coeffs(&s.ext, &a).unwrap();
        let alpha = s.ext.embed(&s.base.element(c[0].max(1)).unwrap()).unwrap();
        let lhs = alpha_shift_pow(&alpha_shift_pow(&f, &alpha, k1).unwrap(), &alpha, k2).unwrap();
        prop_assert_eq!(&lhs, &alpha_shift_pow(&f, &alpha, k1 + k2).unwrap());
        // S_α(F) = F ∘ αx^[1].
        let ax1 = LinearizedPoly::monomial(&alpha, 1 % n);
        prop_assert_eq!(alpha_shift(&f, &alpha).unwrap(), f.compose(&ax1).unwrap());
        if f.is_permutation_rank() {
            let m = cyclic_order(&f, &alpha).unwrap();
            prop_assert_eq!(alpha_shift_pow(&f, &alpha, m).unwrap(), f.clone());
            prop_assert!(alpha_shift_pow(&f, &alpha, 1).unwrap().is_permutation_rank());
        }
    }
}
