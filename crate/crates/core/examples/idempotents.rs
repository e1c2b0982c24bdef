// Primitive idempotents of R_{3,125}, by the CRT and by the closed form
// for n = 5^3, and the decomposition of a unit along them.

use linperm::idempotents::{closed_form_pm, closed_form_is_primitive, primitive_idempotents, project, reconstruct};
use linperm::{FieldSpec, RingSpec};

pub fn run_example() -> linperm::Result<()> {
    let ring = RingSpec::new(&FieldSpec::prime(3)?, 125)?;
    let crt = primitive_idempotents(&ring)?;
    assert!(closed_form_is_primitive(5, 3, 3)?);
    let closed = closed_form_pm(&ring, 5, 3)?;

    for (i, (a, b)) in crt.idempotents().zip(closed.idempotents()).enumerate() {
        assert_eq!(a, b);
        let c = &crt.components()[i];
        println!("e{i}: coset of {} (size {}), {} terms", c.coset.representative, c.coset.size(), a.coeffs().iter().filter(|&&x| x != 0).count());
    }

    let f = ring.parse("x^124+x^25+2")?;
    let parts = project(&f, &crt)?;
    assert_eq!(reconstruct(&parts, &crt)?, f);
    println!("f = {f} splits into {} components", parts.len());
    Ok(())
}

fn main() {
    run_example().expect("idempotents example failed");
}
