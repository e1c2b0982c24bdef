// Build a permutation of F_{3^25} from three units placed on the simple
// components of R_{3,25}, then invert it component by component.

use linperm::idempotents::primitive_idempotents;
use linperm::{ExtFieldSpec, FieldSpec, LinearizedPoly, RingSpec};

pub fn run_example() -> linperm::Result<()> {
    let f3 = FieldSpec::prime(3)?;
    let ring = RingSpec::new(&f3, 25)?;
    let field = ExtFieldSpec::new(&f3, 25)?;
    let basis = primitive_idempotents(&ring)?;

    // f_i = x^i (x^20 + 2x^15 + 1), placed in reverse order.
    let f0 = ring.parse("x^20+2*x^15+1")?;
    let mut f = ring.zero();
    for (i, e) in basis.idempotents().enumerate() {
        f = f.add(&f0.shift_mul_x(2 - i).mul(e)?)?;
    }

    let big_f = LinearizedPoly::linearized_associate(&f, &field)?;
    let inv = big_f.compositional_inverse(&basis)?;
    assert!(big_f.compose(&inv)?.is_identity());
    assert!(inv.compose(&big_f)?.is_identity());
    println!("F      = {big_f}");
    println!("F^{{-1}} = {inv}");
    Ok(())
}

fn main() {
    run_example().expect("inverse example failed");
}
