// Cross-check the algebraic permutation tests against full enumeration
// of F_{2^3}.

use linperm::idempotents::primitive_idempotents;
use linperm::oracle::{is_bijection_bruteforce, kernel};
use linperm::{ExtFieldSpec, FieldSpec, LinearizedPoly, RingSpec};

pub fn run_example() -> linperm::Result<()> {
    let f2 = FieldSpec::prime(2)?;
    let field = ExtFieldSpec::new(&f2, 3)?;
    let basis = primitive_idempotents(&RingSpec::new(&f2, 3)?)?;
    for mask in 0..8u32 {
        let coeffs: Vec<u32> = (0..3).map(|i| mask >> i & 1).collect();
        let f = LinearizedPoly::from_base_coeffs(&field, &coeffs)?;
        let brute = is_bijection_bruteforce(&f)?;
        assert_eq!(brute, f.is_permutation(&basis)?);
        assert_eq!(brute, f.is_permutation_gcd()?);
        assert_eq!(brute, f.is_permutation_rank());
        println!("{:<30} bijection={brute} kernel size={}", f.to_text(), kernel(&f)?.len());
    }
    Ok(())
}

fn main() {
    run_example().expect("oracle example failed");
}
