// The eight involutions Σ ±e_i of F_{11^9}.

use linperm::linearized::sign_vector_involutions;
use linperm::idempotents::primitive_idempotents;
use linperm::oracle::involution_check_pointwise;
use linperm::{ExtFieldSpec, FieldSpec, RingSpec};

pub fn run_example() -> linperm::Result<()> {
    let f11 = FieldSpec::prime(11)?;
    let basis = primitive_idempotents(&RingSpec::new(&f11, 9)?)?;
    let field = ExtFieldSpec::new(&f11, 9)?;
    let all = sign_vector_involutions(&basis, &field)?;
    assert_eq!(all.len(), 8);
    for f in &all {
        assert!(f.is_involution());
        assert!(involution_check_pointwise(f, 50, 1));
        println!("{f}");
    }
    Ok(())
}

fn main() {
    run_example().expect("involution example failed");
}
