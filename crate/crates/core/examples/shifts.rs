// α-cyclic shifts over F_{3^5}: the orbit of a permutation, inverses
// carried along the orbit, and the half-order involution.

use linperm::idempotents::primitive_idempotents;
use linperm::shifts::{alpha_shift_pow, cyclic_order, half_order_involution, shift_class, shifted_inverse};
use linperm::{ExtFieldSpec, FieldSpec, LinearizedPoly, RingSpec};

pub fn run_example() -> linperm::Result<()> {
    let f3 = FieldSpec::prime(3)?;
    let field = ExtFieldSpec::new(&f3, 5)?;
    let basis = primitive_idempotents(&RingSpec::new(&f3, 5)?)?;
    let alpha = field.embed(&f3.element(2)?)?;

    let f = LinearizedPoly::parse(&field, "x^[1]+x")?;
    let f_inv = f.compositional_inverse(&basis)?;
    assert_eq!(cyclic_order(&f, &alpha)?, 10);
    let class = shift_class(&f, &alpha)?;
    for t in 0..=10 {
        let g = alpha_shift_pow(&f, &alpha, t)?;
        let g_inv = shifted_inverse(&f_inv, &alpha, t)?;
        assert!(g.compose(&g_inv)?.is_identity());
    }
    println!("orbit of {f} has {} members", class.members.len());

    let inv = LinearizedPoly::parse(&field, "x^[4]+x^[3]+x^[2]+x^[1]")?;
    let h = half_order_involution(&inv, &alpha)?;
    assert!(h.is_involution());
    println!("half-order shift of {inv}: {h}");
    Ok(())
}

fn main() {
    run_example().expect("shift example failed");
}
