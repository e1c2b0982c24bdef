// Linear permutations of F_{3^125} with F_3 coefficients on x, x^[25] and
// x^[124]: the idempotent test, the gcd test and the coefficient-sum
// shortcut.

use linperm::idempotents::primitive_idempotents;
use linperm::{ExtFieldSpec, FieldSpec, LinearizedPoly, RingSpec};

pub fn run_example() -> linperm::Result<()> {
    let f3 = FieldSpec::prime(3)?;
    let field = ExtFieldSpec::new(&f3, 125)?;
    let basis = primitive_idempotents(&RingSpec::new(&f3, 125)?)?;

    let mut found = 0;
    for v in 1..27u32 {
        let mut coeffs = vec![0; 125];
        coeffs[0] = v % 3;
        coeffs[25] = v / 3 % 3;
        coeffs[124] = v / 9;
        let f = LinearizedPoly::from_base_coeffs(&field, &coeffs)?;
        let report = f.permutation_report(&basis)?;
        assert_eq!(report.is_permutation, f.is_permutation_gcd()?);
        if report.is_permutation {
            found += 1;
            println!("{f}");
        } else {
            assert!(report.coefficient_sum_rejected);
        }
    }
    assert_eq!(found, 18);
    Ok(())
}

fn main() {
    run_example().expect("permutation example failed");
}
