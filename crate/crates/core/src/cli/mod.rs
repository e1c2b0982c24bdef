//! The `linperm` command line. [`run`] parses argv, dispatches one
//! subcommand and writes either text or a single JSON document to `out`.
//! Errors go to `err` as one JSON object per line.
//!
//! Exit codes: 0 on success, 1 when a mathematical verdict fails (a
//! reproduction diff, a non-invertible input to `invert`, a failed
//! cross-check), 2 on usage errors.

pub mod reproduce;

use std::io::Write;

use clap::{Parser, Subcommand, ValueEnum};
use serde::{Deserialize, Serialize};
use serde_json::{json, Value};

use crate::error::{Error, Result};
use crate::fields::{arith, split_top_level, ExtElement, ExtFieldSpec, FieldSpec};
use crate::idempotents::{closed_form_pm, closed_form_is_primitive, primitive_idempotents, IdempotentBasis};
use crate::linearized::{a_complete_sufficient, a_complete_verdicts, sign_vector_associates, LinearizedPoly};
use crate::oracle;
use crate::polyring::{Poly, RingElement, RingSpec};
use crate::shifts;

pub use reproduce::Target;

pub const SCHEMA_VERSION: u32 = 1;

/// Above this n the rank test is skipped for F_q-coefficient inputs.
const RANK_TEST_MAX_N: usize = 64;

#[derive(Parser, Debug)]
#[command(name = "linperm", version, about = "Linear permutations of F_{q^n} via idempotents of F_q[x]/(x^n - 1)")]
pub struct Cli {
    /// Order of the base field F_q.
    #[arg(long, global = true)]
    pub q: Option<u64>,
    /// Extension degree; the ring is F_q[x]/(x^n - 1).
    #[arg(long, global = true)]
    pub n: Option<usize>,
    /// Modulus of F_q over F_p, little-endian digits "c0,c1,...,1".
    #[arg(long, global = true)]
    pub base_modulus: Option<String>,
    /// Modulus of F_{q^n} over F_q, little-endian coefficients.
    #[arg(long, global = true)]
    pub ext_modulus: Option<String>,
    #[arg(long, global = true, default_value_t = 0)]
    pub seed: u64,
    #[arg(long, global = true, value_enum, default_value_t = Output::Text)]
    pub output: Output,
    #[command(subcommand)]
    pub command: Command,
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, ValueEnum)]
pub enum Output {
    Text,
    Json,
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, ValueEnum)]
pub enum OracleCheck {
    Bijection,
    Kernel,
    Fixed,
    Sqrt1,
}

#[derive(Subcommand, Debug)]
pub enum Command {
    /// Primitive idempotents of R_{q,n}.
    Idempotents {
        /// Use the closed form for n a prime power (checks the primitivity condition first).
        #[arg(long)]
        closed_form: bool,
    },
    /// Decide whether F permutes F_{q^n}.
    IsPerm {
        #[arg(long)]
        poly: String,
    },
    /// Compositional inverse through the simple components.
    Invert {
        #[arg(long)]
        poly: String,
    },
    /// F ∘ G for `--poly F --poly G`.
    Compose {
        #[arg(long, required = true)]
        poly: Vec<String>,
    },
    /// All involutions Σ ±e_i.
    Involutions {
        /// Pointwise samples per involution, drawn from --seed.
        #[arg(long, default_value_t = 100)]
        samples: usize,
    },
    /// Verdict for F + λx, λ in the given comma-separated set.
    Complete {
        #[arg(long)]
        poly: String,
        #[arg(long)]
        lambda_set: String,
    },
    /// S_α^t(F).
    Shift {
        #[arg(long)]
        alpha: String,
        #[arg(long)]
        t: u64,
        #[arg(long)]
        poly: String,
    },
    /// α-cyclic order of F.
    Order {
        #[arg(long)]
        alpha: String,
        #[arg(long)]
        poly: String,
    },
    /// The orbit of F under S_α.
    Class {
        #[arg(long)]
        alpha: String,
        #[arg(long)]
        poly: String,
    },
    /// Regenerate a bundled artifact and diff it against its golden file.
    Reproduce {
        #[arg(long, value_enum)]
        target: Target,
    },
    /// Brute-force checks by enumeration.
    Oracle {
        #[arg(long, value_enum)]
        check: OracleCheck,
        #[arg(long)]
        poly: Option<String>,
    },
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct Moduli {
    pub base: Option<String>,
    pub ext: Option<String>,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct FieldInfo {
    pub p: u64,
    pub k: usize,
    pub n: usize,
    pub moduli: Moduli,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct Check {
    pub name: String,
    pub passed: bool,
}

/// The JSON document written by `--output json`.
#[derive(Clone, Debug, PartialEq, Serialize, Deserialize)]
pub struct Report {
    pub schema_version: u32,
    pub field: FieldInfo,
    pub operation: String,
    pub inputs: Value,
    pub outputs: Value,
    pub checks: Vec<Check>,
    pub seed: u64,
}

impl Report {
    pub fn passed(&self) -> bool {
        self.checks.iter().all(|c| c.passed)
    }
}

/// What a subcommand produced, before formatting.
struct Outcome {
    inputs: Value,
    outputs: Value,
    lines: Vec<String>,
    checks: Vec<Check>,
}

impl Outcome {
    fn new(inputs: Value) -> Self {
        Outcome {
            inputs,
            outputs: json!({}),
            lines: Vec::new(),
            checks: Vec::new(),
        }
    }

    fn out(&mut self, key: &str, v: Value) {
        self.outputs[key] = v;
    }

    fn line(&mut self, s: impl Into<String>) {
        self.lines.push(s.into());
    }

    fn check(&mut self, name: &str, passed: bool) {
        self.checks.push(Check {
            name: name.into(),
            passed,
        });
    }
}

/// Field setup shared by every subcommand.
struct Job {
    base: FieldSpec,
    n: usize,
    ext_modulus: Option<String>,
    seed: u64,
    ext: Option<ExtFieldSpec>,
}

impl Job {
    fn from_cli(cli: &Cli) -> Result<Self> {
        let q = cli.q.ok_or_else(|| Error::BadInput("--q is required".into()))?;
        let n = cli.n.ok_or_else(|| Error::BadInput("--n is required".into()))?;
        Self::new(q, n, cli.base_modulus.as_deref(), cli.ext_modulus.clone(), cli.seed)
    }

    fn new(q: u64, n: usize, base_modulus: Option<&str>, ext_modulus: Option<String>, seed: u64) -> Result<Self> {
        let (p, k) = arith::prime_power(q)?;
        let base = match base_modulus {
            Some(s) => {
                let digits = parse_int_list(s)?;
                FieldSpec::new(p, k, Some(&digits))?
            }
            None => FieldSpec::new(p, k, None)?,
        };
        if n == 0 {
            return Err(Error::BadInput("n must be positive".into()));
        }
        if n as u64 % p == 0 {
            return Err(Error::NotCoprime { a: n as u64, b: p });
        }
        let mut job = Job {
            base,
            n,
            ext_modulus,
            seed,
            ext: None,
        };
        if job.ext_modulus.is_some() {
            job.ext()?;
        }
        Ok(job)
    }

    fn ring(&self) -> Result<RingSpec> {
        RingSpec::new(&self.base, self.n)
    }

    fn basis(&self) -> Result<IdempotentBasis> {
        primitive_idempotents(&self.ring()?)
    }

    fn ext(&mut self) -> Result<ExtFieldSpec> {
        if let Some(e) = &self.ext {
            return Ok(e.clone());
        }
        let e = match &self.ext_modulus {
            Some(s) => {
                let coeffs = split_top_level(s.trim_matches(|c| c == '[' || c == ']'), ',')
                    .iter()
                    .map(|c| self.base.parse(c))
                    .collect::<Result<Vec<_>>>()?;
                ExtFieldSpec::with_modulus(&self.base, self.n, &Poly::from_raw(&self.base, coeffs))?
            }
            None => ExtFieldSpec::new(&self.base, self.n)?,
        };
        self.ext = Some(e.clone());
        Ok(e)
    }

    fn poly(&mut self, s: &str) -> Result<LinearizedPoly> {
        LinearizedPoly::parse(&self.ext()?, s)
    }

    fn element(&mut self, s: &str) -> Result<ExtElement> {
        let ext = self.ext()?;
        ext.element(&ext.parse_raw(s)?)
    }

    fn info(&self) -> FieldInfo {
        FieldInfo {
            p: self.base.p() as u64,
            k: self.base.k(),
            n: self.n,
            moduli: Moduli {
                base: self.base.modulus().map(|m| {
                    m.iter().map(u32::to_string).collect::<Vec<_>>().join(",")
                }),
                ext: self.ext.as_ref().map(|e| e.modulus().to_text()),
            },
        }
    }
}

fn parse_int_list(s: &str) -> Result<Vec<u32>> {
    s.trim_matches(|c| c == '[' || c == ']')
        .split(',')
        .map(|d| {
            d.trim()
                .parse::<u32>()
                .map_err(|_| Error::Parse(format!("bad modulus digit {d:?}")))
        })
        .collect()
}

fn render(e: &ExtElement) -> String {
    e.spec().render_raw(e.coeffs())
}

/// Whether an error is the caller's fault (exit 2) or a verdict (exit 1).
fn is_usage(e: &Error) -> bool {
    matches!(
        e,
        Error::Parse(_)
            | Error::BadInput(_)
            | Error::NotCoprime { .. }
            | Error::NotPrime(_)
            | Error::NotIrreducible(_)
            | Error::LengthMismatch { .. }
            | Error::SpecMismatch
            | Error::ZeroAlpha
            | Error::ZeroNotInA
            | Error::TooLarge { .. }
            | Error::CoefficientsNotInBaseField
    )
}

fn error_line(kind: &str, code: i32, message: &str) -> String {
    json!({"error": kind, "exit": code, "message": message}).to_string()
}

/// Runs the CLI on `argv` (including the program name) and returns the
/// process exit code.
pub fn run<I, S>(argv: I, out: &mut dyn Write, err: &mut dyn Write) -> i32
where
    I: IntoIterator<Item = S>,
    S: Into<std::ffi::OsString> + Clone,
{
    let cli = match Cli::try_parse_from(argv) {
        Ok(c) => c,
        Err(e) => {
            use clap::error::ErrorKind;
            if matches!(e.kind(), ErrorKind::DisplayHelp | ErrorKind::DisplayVersion) {
                let _ = write!(out, "{e}");
                return 0;
            }
            let msg = e.to_string();
            let first = msg
                .lines()
                .next()
                .unwrap_or_default()
                .trim_start_matches("error: ")
                .to_string();
            let _ = writeln!(err, "{}", error_line("Usage", 2, &first));
            return 2;
        }
    };
    match execute(&cli) {
        Ok(report) => {
            let code = if report.passed() { 0 } else { 1 };
            let _ = match cli.output {
                Output::Json => writeln!(out, "{}", serde_json::to_string(&report.0).unwrap_or_default()),
                Output::Text => write_text(out, &report),
            };
            if code != 0 {
                let failed: Vec<&str> = report
                    .0
                    .checks
                    .iter()
                    .filter(|c| !c.passed)
                    .map(|c| c.name.as_str())
                    .collect();
                let _ = writeln!(
                    err,
                    "{}",
                    error_line("CheckFailed", 1, &format!("failed checks: {}", failed.join(", ")))
                );
            }
            code
        }
        Err(e) => {
            let code = if is_usage(&e) { 2 } else { 1 };
            let _ = writeln!(err, "{}", error_line(e.kind(), code, &e.to_string()));
            code
        }
    }
}

/// A report together with its human-readable lines.
pub struct Rendered(pub Report, Vec<String>);

impl Rendered {
    fn passed(&self) -> bool {
        self.0.passed()
    }
}

fn write_text(out: &mut dyn Write, r: &Rendered) -> std::io::Result<()> {
    for l in &r.1 {
        writeln!(out, "{l}")?;
    }
    for c in &r.0.checks {
        writeln!(out, "check {}: {}", c.name, if c.passed { "pass" } else { "FAIL" })?;
    }
    Ok(())
}

/// Runs the parsed command and returns its report.
pub fn execute(cli: &Cli) -> Result<Rendered> {
    let (operation, info, outcome) = match &cli.command {
        Command::Reproduce { target } => {
            let (q, n) = target.setting();
            let job = Job::new(q, n, None, None, cli.seed)?;
            ("reproduce", job.info(), run_reproduce(*target)?)
        }
        cmd => {
            let mut job = Job::from_cli(cli)?;
            let (op, outcome) = dispatch(cmd, &mut job)?;
            (op, job.info(), outcome)
        }
    };
    Ok(Rendered(
        Report {
            schema_version: SCHEMA_VERSION,
            field: info,
            operation: operation.into(),
            inputs: outcome.inputs,
            outputs: outcome.outputs,
            checks: outcome.checks,
            seed: cli.seed,
        },
        outcome.lines,
    ))
}

fn dispatch(cmd: &Command, job: &mut Job) -> Result<(&'static str, Outcome)> {
    Ok(match cmd {
        Command::Idempotents { closed_form } => ("idempotents", idempotents(job, *closed_form)?),
        Command::IsPerm { poly } => ("is-perm", is_perm(job, poly)?),
        Command::Invert { poly } => ("invert", invert(job, poly)?),
        Command::Compose { poly } => ("compose", compose(job, poly)?),
        Command::Involutions { samples } => ("involutions", involutions(job, *samples)?),
        Command::Complete { poly, lambda_set } => ("complete", complete(job, poly, lambda_set)?),
        Command::Shift { alpha, t, poly } => ("shift", shift(job, alpha, *t, poly)?),
        Command::Order { alpha, poly } => ("order", order(job, alpha, poly)?),
        Command::Class { alpha, poly } => ("class", class(job, alpha, poly)?),
        Command::Oracle { check, poly } => ("oracle", run_oracle(job, *check, poly.as_deref())?),
        Command::Reproduce { .. } => unreachable!("handled before field setup"),
    })
}

fn idempotents(job: &mut Job, closed_form: bool) -> Result<Outcome> {
    let spec = job.ring()?;
    let mut o = Outcome::new(json!({"closed_form": closed_form}));
    let crt = primitive_idempotents(&spec)?;
    let basis = if closed_form {
        let (p, m) = arith::prime_power(job.n as u64)
            .map_err(|_| Error::BadInput(format!("closed form needs n a prime power, got {}", job.n)))?;
        let holds = closed_form_is_primitive(p, m as u32, job.base.q() as u64)?;
        o.check("closed_form_condition", holds);
        o.line(format!(
            "closed form for n = {p}^{m}: ord_{{{p}^2}}(q) = phi({p}^2) {}",
            if holds { "holds" } else { "fails" }
        ));
        if !holds {
            return Ok(o);
        }
        let closed = closed_form_pm(&spec, p, m as u32)?;
        let same = closed
            .idempotents()
            .zip(crt.idempotents())
            .all(|(a, b)| a == b)
            && closed.len() == crt.len();
        o.check("crt_agrees", same);
        closed
    } else {
        crt
    };
    let mut list = Vec::new();
    for (i, c) in basis.components().iter().enumerate() {
        let text = c.idempotent.to_text();
        o.line(format!(
            "e{i} [coset {} size {}]: {text}",
            c.coset.representative,
            c.coset.size()
        ));
        list.push(json!({
            "index": i,
            "coset_representative": c.coset.representative,
            "coset_size": c.coset.size(),
            "factor": c.factor.to_text(),
            "idempotent": text,
        }));
    }
    o.out("count", json!(basis.len()));
    o.out("idempotents", Value::Array(list));
    Ok(o)
}

fn is_perm(job: &mut Job, poly: &str) -> Result<Outcome> {
    let f = job.poly(poly)?;
    let mut o = Outcome::new(json!({"poly": f.to_text()}));
    let mut tests = Vec::new();
    let mut verdicts = Vec::new();
    if f.has_base_coeffs() {
        tests.push("coefficient-sum");
        if f.coefficient_sum_reject()? {
            o.out("permutation", json!(false));
            o.out("tests", json!(tests));
            o.out("rejected_by", json!("coefficient-sum"));
            o.line("not a permutation (coefficient sum is 0)");
            return Ok(o);
        }
        let report = f.permutation_report(&job.basis()?)?;
        tests.push("idempotent");
        verdicts.push(report.is_permutation);
        tests.push("gcd");
        verdicts.push(f.is_permutation_gcd()?);
        o.out(
            "products",
            json!(report.products.iter().map(RingElement::to_text).collect::<Vec<_>>()),
        );
        o.out("zero_components", json!(report.zero_components()));
        if f.n() <= RANK_TEST_MAX_N {
            tests.push("rank");
            verdicts.push(f.is_permutation_rank());
        }
    } else {
        tests.push("rank");
        verdicts.push(f.is_permutation_rank());
    }
    let verdict = verdicts[0];
    o.check("tests_agree", verdicts.iter().all(|&v| v == verdict));
    o.out("permutation", json!(verdict));
    o.out("tests", json!(tests));
    o.line(if verdict { "permutation" } else { "not a permutation" });
    o.line(format!("tests: {}", tests.join(", ")));
    Ok(o)
}

fn invert(job: &mut Job, poly: &str) -> Result<Outcome> {
    let f = job.poly(poly)?;
    let mut o = Outcome::new(json!({"poly": f.to_text()}));
    let inv = f.compositional_inverse(&job.basis()?)?;
    let ring_inv = f.conventional_associate()?.inverse()?;
    o.check("ring_inverse_agrees", ring_inv == inv.conventional_associate()?);
    o.check("composes_to_identity", f.compose(&inv)?.is_identity());
    o.out("inverse", json!(inv.to_text()));
    o.line(inv.to_text());
    Ok(o)
}

fn compose(job: &mut Job, polys: &[String]) -> Result<Outcome> {
    if polys.len() != 2 {
        return Err(Error::BadInput(format!("compose takes two --poly, got {}", polys.len())));
    }
    let f = job.poly(&polys[0])?;
    let g = job.poly(&polys[1])?;
    let mut o = Outcome::new(json!({"f": f.to_text(), "g": g.to_text()}));
    let h = f.compose(&g)?;
    o.out("composition", json!(h.to_text()));
    o.line(h.to_text());
    Ok(o)
}

fn involutions(job: &mut Job, samples: usize) -> Result<Outcome> {
    let ext = job.ext()?;
    let basis = job.basis()?;
    let q = job.base.q() as u64;
    let mut o = Outcome::new(json!({"samples": samples}));
    let mut rows = Vec::new();
    let mut symbolic = true;
    let mut pointwise = true;
    for s in sign_vector_associates(&basis)? {
        let f = LinearizedPoly::linearized_associate(&s.associate, &ext)?;
        symbolic &= f.is_involution();
        pointwise &= oracle::involution_check_pointwise(&f, samples, job.seed);
        let signs: Vec<String> = s
            .signs
            .iter()
            .map(|&e| if e > 0 { "1".into() } else { (q - 1).to_string() })
            .collect();
        o.line(format!("{}: {}", signs.join(","), f.to_text()));
        rows.push(json!({"signs": signs, "involution": f.to_text()}));
    }
    o.check("symbolic", symbolic);
    o.check("pointwise", pointwise);
    o.out("count", json!(rows.len()));
    o.out("involutions", Value::Array(rows));
    Ok(o)
}

fn complete(job: &mut Job, poly: &str, lambda_set: &str) -> Result<Outcome> {
    let f = job.poly(poly)?;
    let lambdas = split_top_level(lambda_set, ',')
        .iter()
        .map(|s| job.element(s))
        .collect::<Result<Vec<_>>>()?;
    let rendered: Vec<String> = lambdas.iter().map(render).collect();
    let mut o = Outcome::new(json!({"poly": f.to_text(), "lambda_set": rendered}));
    let verdicts = a_complete_verdicts(&f, &lambdas, &job.basis()?)?;
    let all = verdicts.iter().all(|&v| v);
    for (l, v) in rendered.iter().zip(&verdicts) {
        o.line(format!("lambda = {l}: {}", if *v { "permutation" } else { "not a permutation" }));
    }
    o.line(if all { "A-complete" } else { "not A-complete" });
    o.out(
        "verdicts",
        Value::Array(
            rendered
                .iter()
                .zip(&verdicts)
                .map(|(l, v)| json!({"lambda": l, "permutation": v}))
                .collect(),
        ),
    );
    o.out("a_complete", json!(all));

    // The p^m sufficient test, when it applies.
    let base_lambdas: Option<Vec<_>> = lambdas.iter().map(ExtElement::to_base).collect();
    if let (Ok((p, m)), Some(a), true) = (
        arith::prime_power(job.n as u64),
        base_lambdas,
        f.has_base_coeffs(),
    ) {
        if closed_form_is_primitive(p, m as u32, job.base.q() as u64)? {
            let suff = a_complete_sufficient(&f, &a, p, m as u32)?;
            o.out("sufficient_conditions", json!(suff));
            o.check("sufficient_implies_complete", !suff || all);
        }
    }
    Ok(o)
}

fn shift(job: &mut Job, alpha: &str, t: u64, poly: &str) -> Result<Outcome> {
    let f = job.poly(poly)?;
    let a = job.element(alpha)?;
    let mut o = Outcome::new(json!({"poly": f.to_text(), "alpha": render(&a), "t": t}));
    let g = shifts::alpha_shift_pow(&f, &a, t)?;
    o.out("shifted", json!(g.to_text()));
    o.line(g.to_text());
    Ok(o)
}

fn order(job: &mut Job, alpha: &str, poly: &str) -> Result<Outcome> {
    let f = job.poly(poly)?;
    let a = job.element(alpha)?;
    let mut o = Outcome::new(json!({"poly": f.to_text(), "alpha": render(&a)}));
    let m = shifts::cyclic_order(&f, &a)?;
    if m <= shifts::DEFAULT_CLASS_CAP {
        let it = shifts::cyclic_order_by_iteration(&f, &a, shifts::DEFAULT_CLASS_CAP)?;
        o.check("iteration_agrees", it == m);
    }
    o.out("order", json!(m));
    o.out("maximal", json!(shifts::is_maximal_order_element(&a)?));
    o.line(m.to_string());
    Ok(o)
}

fn class(job: &mut Job, alpha: &str, poly: &str) -> Result<Outcome> {
    let f = job.poly(poly)?;
    let a = job.element(alpha)?;
    let mut o = Outcome::new(json!({"poly": f.to_text(), "alpha": render(&a)}));
    let c = shifts::shift_class(&f, &a)?;
    let members: Vec<String> = c.members.iter().map(LinearizedPoly::to_text).collect();
    o.check("members_are_permutations", c.members.iter().all(LinearizedPoly::is_permutation_rank));
    for (k, m) in members.iter().enumerate() {
        o.line(format!("S^{k}: {m}"));
    }
    o.out("order", json!(c.order));
    o.out("members", json!(members));
    Ok(o)
}

fn run_oracle(job: &mut Job, check: OracleCheck, poly: Option<&str>) -> Result<Outcome> {
    if check == OracleCheck::Sqrt1 {
        let spec = job.ring()?;
        let mut o = Outcome::new(json!({"check": "sqrt1"}));
        let roots = oracle::sqrt_unity_bruteforce(&spec)?;
        let mut found: Vec<String> = roots.iter().map(RingElement::to_text).collect();
        found.sort();
        let mut signed: Vec<String> = sign_vector_associates(&job.basis()?)?
            .iter()
            .map(|s| s.associate.to_text())
            .collect();
        signed.sort();
        o.check("matches_sign_vectors", found == signed);
        for r in &found {
            o.line(r.clone());
        }
        o.out("count", json!(found.len()));
        o.out("roots", json!(found));
        return Ok(o);
    }
    let poly = poly.ok_or_else(|| Error::BadInput("this check needs --poly".into()))?;
    let f = job.poly(poly)?;
    let name = match check {
        OracleCheck::Bijection => "bijection",
        OracleCheck::Kernel => "kernel",
        OracleCheck::Fixed => "fixed",
        OracleCheck::Sqrt1 => unreachable!(),
    };
    let mut o = Outcome::new(json!({"check": name, "poly": f.to_text()}));
    match check {
        OracleCheck::Bijection => {
            let b = oracle::is_bijection_bruteforce(&f)?;
            if f.has_base_coeffs() {
                o.check("idempotent_test_agrees", f.is_permutation(&job.basis()?)? == b);
            }
            o.check("rank_test_agrees", f.is_permutation_rank() == b);
            o.out("bijection", json!(b));
            o.line(if b { "bijection" } else { "not a bijection" });
        }
        _ => {
            let pts = if check == OracleCheck::Kernel {
                oracle::kernel(&f)?
            } else {
                oracle::fixed_points(&f)?
            };
            let pts: Vec<String> = pts.iter().map(render).collect();
            o.line(format!("{} elements", pts.len()));
            for p in &pts {
                o.line(p.clone());
            }
            o.out("count", json!(pts.len()));
            o.out("elements", json!(pts));
        }
    }
    Ok(o)
}

fn run_reproduce(target: Target) -> Result<Outcome> {
    let report = reproduce::reproduce(target)?;
    let mut o = Outcome::new(json!({"target": target.name()}));
    for r in &report.rows {
        if r.matched {
            o.line(format!("ok   {}: {}", r.label, r.got));
        } else {
            o.line(format!("DIFF {}: expected {} got {}", r.label, r.expected, r.got));
        }
    }
    o.line(format!(
        "{}: {} rows, {} mismatches",
        target,
        report.rows.len(),
        report.mismatches()
    ));
    o.check("golden_match", report.passed());
    o.out("rows", serde_json::to_value(&report.rows).map_err(|e| Error::InternalError(e.to_string()))?);
    o.out("mismatches", json!(report.mismatches()));
    Ok(o)
}
