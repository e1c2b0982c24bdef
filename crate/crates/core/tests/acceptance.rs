//! Acceptance suite: one PASS/FAIL line per criterion with its wall time.
//! Runs as a plain binary (harness = false) and exits non-zero on any FAIL.

use std::collections::BTreeSet;
use std::time::{Duration, Instant};

use linperm::cli::{self, Report};
use linperm::idempotents::{closed_form_pm, closed_form_is_primitive, primitive_idempotents};
use linperm::linearized::{sign_vector_associates, sign_vector_involutions};
use linperm::oracle::{involution_check_pointwise, is_bijection_bruteforce, sqrt_unity_bruteforce};
use linperm::polyring::cyclotomic_cosets;
use linperm::shifts::{
    alpha_shift_pow, cyclic_order, cyclic_order_by_iteration, half_order_involution, order_from_log,
    shifted_inverse,
};
use linperm::{ExtFieldSpec, FieldSpec, LinearizedPoly, RingSpec};
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;

const CLOSED_FORMS: &str = include_str!("../goldens/example1.txt");
const SUPPORT_PERMS: &str = include_str!("../goldens/table1.txt");
const INVERSES: &str = include_str!("../goldens/table2.txt");
const INVOLUTIONS: &str = include_str!("../goldens/table3.txt");

type Outcome = Result<String, String>;

fn ensure(cond: bool, msg: impl FnOnce() -> String) -> Result<(), String> {
    if cond {
        Ok(())
    } else {
        Err(msg())
    }
}

fn s<E: std::fmt::Display>(e: E) -> String {
    e.to_string()
}

fn rows(text: &str) -> Vec<Vec<&str>> {
    text.lines()
        .map(str::trim)
        .filter(|l| !l.is_empty() && !l.starts_with('#'))
        .map(|l| l.split('|').map(str::trim).collect())
        .collect()
}

fn field(q: u64) -> FieldSpec {
    FieldSpec::from_order(q).unwrap()
}

fn ext(q: u64, n: usize) -> ExtFieldSpec {
    ExtFieldSpec::new(&field(q), n).unwrap()
}

fn ring(q: u64, n: usize) -> RingSpec {
    RingSpec::new(&field(q), n).unwrap()
}

fn closed_form_listing() -> Outcome {
    let mut out = Vec::new();
    let mut err = Vec::new();
    let argv = ["linperm", "idempotents", "--q", "3", "--n", "125", "--closed-form", "--output", "json"];
    let code = cli::run(argv, &mut out, &mut err);
    ensure(code == 0, || format!("exit {code}: {}", String::from_utf8_lossy(&err)))?;
    let report: Report = serde_json::from_slice(&out).map_err(s)?;
    let spec = ring(3, 125);
    let got: Vec<String> = report.outputs["idempotents"]
        .as_array()
        .ok_or("no idempotents in output")?
        .iter()
        .map(|e| e["idempotent"].as_str().unwrap_or_default().to_string())
        .collect();
    let want: Vec<String> = rows(CLOSED_FORMS)
        .iter()
        .map(|r| spec.parse(r[1]).map(|e| e.to_text()))
        .collect::<Result<_, _>>()
        .map_err(s)?;
    ensure(got == want, || "closed form differs from the expected polynomials".into())?;
    let crt: BTreeSet<String> = primitive_idempotents(&spec)
        .map_err(s)?
        .idempotents()
        .map(|e| e.to_text())
        .collect();
    ensure(crt == want.iter().cloned().collect(), || "CRT set differs".into())?;
    Ok("4 idempotents, CLI closed form = golden = CRT set".into())
}

fn support_permutations() -> Outcome {
    let l = ext(3, 125);
    let basis = primitive_idempotents(&ring(3, 125)).map_err(s)?;
    let listed: Vec<LinearizedPoly> = rows(SUPPORT_PERMS)
        .iter()
        .flatten()
        .map(|c| LinearizedPoly::parse(&l, c))
        .collect::<Result<_, _>>()
        .map_err(s)?;
    ensure(listed.len() == 18, || format!("{} listed polynomials", listed.len()))?;
    for f in &listed {
        let idem = f.is_permutation(&basis).map_err(s)?;
        let gcd = f.is_permutation_gcd().map_err(s)?;
        let rank = f.is_permutation_rank();
        ensure(idem && gcd && rank, || format!("{f}: idempotent {idem}, gcd {gcd}, rank {rank}"))?;
    }
    let mut rejected = 0;
    for v in 0..27u32 {
        let mut c = vec![0; 125];
        c[0] = v % 3;
        c[25] = v / 3 % 3;
        c[124] = v / 9;
        if (c[0] + c[25] + c[124]) % 3 != 0 {
            continue;
        }
        let f = LinearizedPoly::from_base_coeffs(&l, &c).map_err(s)?;
        let rej = f.coefficient_sum_reject().map_err(s)?;
        ensure(rej && !f.is_permutation(&basis).map_err(s)?, || format!("{f} not rejected"))?;
        rejected += 1;
    }
    Ok(format!("18 listed pass idempotent/gcd/rank; {rejected} zero-sum polynomials rejected"))
}

fn listed_inverses() -> Outcome {
    let l = ext(3, 25);
    let basis = primitive_idempotents(&ring(3, 25)).map_err(s)?;
    let table = rows(INVERSES);
    for r in &table {
        let f = LinearizedPoly::parse(&l, r[1]).map_err(s)?;
        let inv = LinearizedPoly::parse(&l, r[2]).map_err(s)?;
        ensure(f.compose(&inv).map_err(s)?.is_identity(), || format!("{}: F∘F^-1 ≠ x", r[0]))?;
        let computed = f.compositional_inverse(&basis).map_err(s)?;
        ensure(computed == inv, || format!("{}: computed inverse {computed}", r[0]))?;
    }
    Ok(format!("{} rows: composition is x, inverse matches exactly", table.len()))
}

fn sign_involutions() -> Outcome {
    let l = ext(11, 9);
    let basis = primitive_idempotents(&ring(11, 9)).map_err(s)?;
    let got = sign_vector_involutions(&basis, &l).map_err(s)?;
    let got_set: BTreeSet<String> = got.iter().map(|f| f.to_text()).collect();
    let want: BTreeSet<String> = rows(INVOLUTIONS)
        .iter()
        .map(|r| LinearizedPoly::parse(&l, r[1]).map(|f| f.to_text()))
        .collect::<Result<_, _>>()
        .map_err(s)?;
    ensure(got_set == want && got.len() == 8, || "involution set differs".into())?;
    for (i, f) in got.iter().enumerate() {
        ensure(f.is_involution(), || format!("{f} is not an involution"))?;
        ensure(involution_check_pointwise(f, 1000, 1000 + i as u64), || {
            format!("{f} fails pointwise")
        })?;
    }
    Ok("8 involutions = golden; symbolic and 1000-sample pointwise checks pass".into())
}

fn f8n11() -> Outcome {
    let f8 = field(8);
    let spec = ring(8, 11);
    let l = ExtFieldSpec::new(&f8, 11).map_err(s)?;
    let basis = primitive_idempotents(&spec).map_err(s)?;
    let e0 = spec.fold(&[1; 11]);
    let e1 = spec.one().sub(&e0).map_err(s)?;
    let got: Vec<_> = basis.idempotents().cloned().collect();
    ensure(got == vec![e0, e1], || "idempotents differ".into())?;
    let mut cases = 0;
    for t in 0..11 {
        for ft in f8.elements() {
            for lambda in f8.elements() {
                let mut c = vec![0u32; 11];
                c[t] = ft;
                c[0] = f8.add(c[0], lambda);
                let f = LinearizedPoly::from_base_coeffs(&l, &c).map_err(s)?;
                let gcd = f.is_permutation_gcd().map_err(s)?;
                let want = lambda != f8.neg(ft);
                ensure(gcd == want, || format!("t={t} f_t={ft} λ={lambda}: gcd says {gcd}"))?;
                ensure(f.is_permutation(&basis).map_err(s)? == want, || "idempotent test disagrees".into())?;
                cases += 1;
            }
        }
    }
    Ok(format!("e0, e1 match; {cases} cases (t, f_t ∈ F_8, λ ∈ F_8) agree"))
}

fn oracle_equivalence() -> Outcome {
    let mut checked = 0;
    let mut run = |l: &ExtFieldSpec, basis, c: &[u32]| -> Result<(), String> {
        let f = LinearizedPoly::from_base_coeffs(l, c).map_err(s)?;
        let brute = is_bijection_bruteforce(&f).map_err(s)?;
        let gcd = f.is_permutation_gcd().map_err(s)?;
        let idem = f.is_permutation(basis).map_err(s)?;
        let rank = f.is_permutation_rank();
        ensure(brute == gcd && gcd == idem && idem == rank, || {
            format!("{f}: brute {brute} gcd {gcd} idempotent {idem} rank {rank}")
        })?;
        checked += 1;
        Ok(())
    };
    let l = ext(2, 3);
    let basis = primitive_idempotents(&ring(2, 3)).map_err(s)?;
    for mask in 0..8u32 {
        let c: Vec<u32> = (0..3).map(|i| mask >> i & 1).collect();
        run(&l, &basis, &c)?;
    }
    let l = ext(3, 5);
    let basis = primitive_idempotents(&ring(3, 5)).map_err(s)?;
    let mut rng = ChaCha8Rng::seed_from_u64(6);
    for _ in 0..500 {
        let c: Vec<u32> = (0..5).map(|_| rng.gen_range(0..3)).collect();
        run(&l, &basis, &c)?;
    }
    Ok(format!("{checked} polynomials, zero disagreements"))
}

fn order_law() -> Outcome {
    let l = ext(3, 5);
    let f3 = l.base().clone();
    let beta = f3.primitive_element();
    let polys: Vec<LinearizedPoly> = ["x", "x^[1]+x", "x^[3]+2x^[1]+2x"]
        .iter()
        .map(|t| LinearizedPoly::parse(&l, t))
        .collect::<Result<_, _>>()
        .map_err(s)?;
    let mut count = 0;
    for i in 1..l.size().unwrap() {
        let alpha = l.element(&l.element_from_index(i)).map_err(s)?;
        let norm = alpha.norm().map_err(s)?.value();
        let log = (0..2u64).find(|&k| f3.pow(beta, k) == norm).ok_or("norm has no log")?;
        let t = order_from_log(log, 3);
        for f in &polys {
            ensure(f.is_permutation_rank(), || format!("{f} is not a permutation"))?;
            let m = cyclic_order(f, &alpha).map_err(s)?;
            let it = cyclic_order_by_iteration(f, &alpha, 10_000).map_err(s)?;
            ensure(m == it && m == 5 * t, || format!("α #{i}, {f}: norm {m}, iterated {it}, 5t = {}", 5 * t))?;
            count += 1;
        }
    }
    Ok(format!("{count} (α, F) pairs over all 242 α, zero disagreements"))
}

fn shifted_inverses_in(q: u64, n: usize, seed: u64) -> Result<(usize, usize), String> {
    let l = ext(q, n);
    let basis = primitive_idempotents(&ring(q, n)).map_err(s)?;
    let alpha = l.embed(&l.base().element(2).map_err(s)?).map_err(s)?;
    let full = (q - 1) * n as u64;
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    let mut perms = 0;
    while perms < 20 {
        let c: Vec<u32> = (0..n).map(|_| rng.gen_range(0..q as u32)).collect();
        let f = LinearizedPoly::from_base_coeffs(&l, &c).map_err(s)?;
        if !f.is_permutation(&basis).map_err(s)? {
            continue;
        }
        let f_inv = f.compositional_inverse(&basis).map_err(s)?;
        for t in 0..=full {
            let g = alpha_shift_pow(&f, &alpha, t).map_err(s)?;
            let g_inv = shifted_inverse(&f_inv, &alpha, t).map_err(s)?;
            ensure(g.compose(&g_inv).map_err(s)?.is_identity(), || format!("{f}, t = {t}"))?;
        }
        perms += 1;
    }
    let signed = sign_vector_associates(&basis).map_err(s)?;
    for _ in 0..20 {
        let pick = &signed[rng.gen_range(0..signed.len())];
        let f = LinearizedPoly::linearized_associate(&pick.associate, &l).map_err(s)?;
        let h = half_order_involution(&f, &alpha).map_err(s)?;
        ensure(h.is_involution(), || format!("half-order shift of {f} is not an involution"))?;
    }
    Ok((perms, signed.len()))
}

fn shifted_inverses() -> Outcome {
    let (a, b) = shifted_inverses_in(3, 5, 8)?;
    let (c, d) = shifted_inverses_in(5, 3, 8)?;
    Ok(format!(
        "q=3,n=5: {a} permutations × t∈[0,10], 20 involutions from {b} sign vectors; q=5,n=3: {c} × t∈[0,12], 20 from {d}"
    ))
}

fn axiom_suite() -> Outcome {
    let specs = [(2, 3), (3, 2), (3, 5), (5, 2), (3, 25), (11, 9), (8, 11), (3, 125)];
    let mut closed_checked = Vec::new();
    for (q, n) in specs {
        let spec = ring(q, n);
        let basis = primitive_idempotents(&spec).map_err(s)?;
        let es: Vec<_> = basis.idempotents().cloned().collect();
        let tag = format!("R_{{{q},{n}}}");
        ensure(es.len() == cyclotomic_cosets(&spec).len(), || format!("{tag}: t ≠ #cosets"))?;
        let mut sum = spec.zero();
        for (i, a) in es.iter().enumerate() {
            ensure(a.mul(a).map_err(s)? == *a, || format!("{tag}: e_{i}² ≠ e_{i}"))?;
            for (j, b) in es.iter().enumerate().skip(i + 1) {
                ensure(a.mul(b).map_err(s)?.is_zero(), || format!("{tag}: e_{i} e_{j} ≠ 0"))?;
            }
            sum = sum.add(a).map_err(s)?;
        }
        ensure(sum.is_one(), || format!("{tag}: Σ e_i ≠ 1"))?;
        let pp = linperm::fields::arith::prime_power(n as u64);
        if let Ok((p, m)) = pp {
            if closed_form_is_primitive(p, m as u32, q).map_err(s)? {
                let closed = closed_form_pm(&spec, p, m as u32).map_err(s)?;
                let same = closed.idempotents().cloned().collect::<Vec<_>>() == es;
                ensure(same, || format!("{tag}: closed form ≠ CRT"))?;
                closed_checked.push(tag);
            }
        }
    }
    Ok(format!("8 rings; closed form = CRT for {}", closed_checked.join(" ")))
}

fn sufficient_conditions() -> Outcome {
    let l = ext(3, 125);
    let basis = primitive_idempotents(&ring(3, 125)).map_err(s)?;
    for t in [
        "x^[64]+x^[63]+x^[62]+2x",
        "2x^[64]+2x^[63]+2x^[62]+2x",
        "2x^[64]+x^[63]+x",
        "x^[64]+2x^[63]+x",
    ] {
        let f = LinearizedPoly::parse(&l, t).map_err(s)?;
        ensure(f.pm_sufficient_conditions(5, 3).map_err(s)?, || format!("{t}: conditions fail"))?;
        ensure(f.is_permutation(&basis).map_err(s)?, || format!("{t}: not a permutation"))?;
    }
    // (f_64, f_63, f_62, f_0), one pattern per row of the condition system.
    let patterns = [([1, 1, 0, 1], 0usize), ([1, 0, 0, 1], 1), ([1, 0, 0, 0], 2), ([2, 1, 1, 0], 3)];
    let mut hits = Vec::new();
    for (pat, row) in patterns {
        let mut c = vec![0u32; 125];
        c[64] = pat[0];
        c[63] = pat[1];
        c[62] = pat[2];
        c[0] = pat[3];
        let f = LinearizedPoly::from_base_coeffs(&l, &c).map_err(s)?;
        ensure(!f.pm_sufficient_conditions(5, 3).map_err(s)?, || format!("{pat:?} accepted"))?;
        let values = f.pm_condition_values(5, 3).map_err(s)?;
        ensure(values[row].is_zero(), || format!("{pat:?}: row {row} does not vanish"))?;
        hits.push(if row == 0 { "(i)".to_string() } else { format!("(ii) i={row}") });
    }
    Ok(format!("F_1..F_4 satisfy conditions and permute; violations caught by {}", hits.join(", ")))
}

fn square_roots() -> Outcome {
    let mut parts = Vec::new();
    for (q, n) in [(3, 2), (5, 2), (3, 4)] {
        let spec = ring(q, n);
        let basis = primitive_idempotents(&spec).map_err(s)?;
        let brute: BTreeSet<String> = sqrt_unity_bruteforce(&spec).map_err(s)?.iter().map(|f| f.to_text()).collect();
        let signed: BTreeSet<String> = sign_vector_associates(&basis)
            .map_err(s)?
            .iter()
            .map(|x| x.associate.to_text())
            .collect();
        ensure(brute.len() == 1 << basis.len() && brute == signed, || {
            format!("R_{{{q},{n}}}: {} roots, {} sign vectors", brute.len(), signed.len())
        })?;
        parts.push(format!("R_{{{q},{n}}}: {}", brute.len()));
    }
    Ok(parts.join(", "))
}

fn main() {
    let criteria: Vec<(&str, Option<Duration>, fn() -> Outcome)> = vec![
        ("closed-form idempotents of R_{3,125}", Some(Duration::from_secs(1)), closed_form_listing),
        ("permutations of F_{3^125} on x, x^[25], x^[124]", Some(Duration::from_secs(1)), support_permutations),
        ("listed inverses over F_{3^25}", Some(Duration::from_secs(1)), listed_inverses),
        ("sign-vector involutions over F_{11^9}", Some(Duration::from_secs(10)), sign_involutions),
        ("R_{8,11} idempotents and binomials", Some(Duration::from_secs(1)), f8n11),
        ("permutation tests vs enumeration", Some(Duration::from_secs(30)), oracle_equivalence),
        ("α-cyclic order law over F_{3^5}", Some(Duration::from_secs(60)), order_law),
        ("shifted inverses and half-order involutions", None, shifted_inverses),
        ("idempotent axioms", Some(Duration::from_secs(5)), axiom_suite),
        ("p^m sufficient conditions on R_{3,125}", None, sufficient_conditions),
        ("square roots of one", None, square_roots),
    ];
    let mut failed = 0;
    for (i, (name, limit, check)) in criteria.into_iter().enumerate() {
        let start = Instant::now();
        let result = check();
        let took = start.elapsed();
        let late = limit.is_some_and(|l| took > l);
        let budget = limit.map(|l| format!(" / {:.0}s", l.as_secs_f64())).unwrap_or_default();
        match (&result, late) {
            (Ok(detail), false) => println!("PASS {:>2} {name} [{:.3}s{budget}]: {detail}", i + 1, took.as_secs_f64()),
            (Ok(_), true) => {
                failed += 1;
                println!("FAIL {:>2} {name} [{:.3}s{budget}]: over time budget", i + 1, took.as_secs_f64());
            }
            (Err(why), _) => {
                failed += 1;
                println!("FAIL {:>2} {name} [{:.3}s{budget}]: {why}", i + 1, took.as_secs_f64());
            }
        }
    }
    println!("{} of 11 criteria passed", 11 - failed);
    if failed > 0 {
        std::process::exit(1);
    }
}
