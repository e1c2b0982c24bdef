// A-complete checks: f_t x^[t] + λx over F_{8^11} permutes exactly when
// λ ≠ f_t, and a partial verdict over F_{3^5}.

use linperm::idempotents::primitive_idempotents;
use linperm::linearized::{a_complete_check, a_complete_verdicts};
use linperm::{ExtFieldSpec, FieldSpec, LinearizedPoly, RingSpec};

pub fn run_example() -> linperm::Result<()> {
    let f8 = FieldSpec::from_order(8)?;
    let field = ExtFieldSpec::new(&f8, 11)?;
    let basis = primitive_idempotents(&RingSpec::new(&f8, 11)?)?;
    let all: Vec<_> = f8.elements().map(|c| field.embed(&f8.element(c).unwrap())).collect::<Result<_, _>>()?;

    let c = field.embed(&f8.element(5)?)?;
    let f = LinearizedPoly::monomial(&c, 3);
    let verdicts = a_complete_verdicts(&f, &all, &basis)?;
    for (lambda, ok) in all.iter().zip(&verdicts) {
        assert_eq!(*ok, lambda != &c);
    }
    println!("{f}: fails only at lambda = {}", f8.render(5));

    // Over F_3, x^[2] + x^[1] + x has coefficient sum 0, so λ = 0 fails while
    // λ = 1, 2 give permutations.
    let f3 = FieldSpec::prime(3)?;
    let field = ExtFieldSpec::new(&f3, 5)?;
    let basis = primitive_idempotents(&RingSpec::new(&f3, 5)?)?;
    let g = LinearizedPoly::parse(&field, "x^[1]+x^[2]+x")?;
    let lams: Vec<_> = (0..3).map(|v| field.embed(&f3.element(v).unwrap())).collect::<Result<_, _>>()?;
    println!("{g}: verdicts {:?}", a_complete_verdicts(&g, &lams, &basis)?);
    println!("F_3-complete: {}", a_complete_check(&g, &lams, &basis)?);
    Ok(())
}

fn main() {
    run_example().expect("complete example failed");
}
