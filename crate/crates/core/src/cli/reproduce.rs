//! Regeneration of the bundled reference artifacts and comparison against
//! the embedded golden files. Goldens are parsed and re-rendered before
//! comparison, so spacing and term order in the files do not matter.

use std::collections::BTreeSet;
use std::fmt;
use std::str::FromStr;

use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};
use crate::fields::{ExtFieldSpec, FieldSpec};
use crate::idempotents::{closed_form_pm, primitive_idempotents};
use crate::linearized::{sign_vector_associates, LinearizedPoly};
use crate::polyring::{RingElement, RingSpec};

const EXAMPLE1: &str = include_str!("../../goldens/example1.txt");
const TABLE1: &str = include_str!("../../goldens/table1.txt");
const TABLE2: &str = include_str!("../../goldens/table2.txt");
const TABLE3: &str = include_str!("../../goldens/table3.txt");
const F8N11: &str = include_str!("../../goldens/f8n11.txt");

#[derive(Clone, Copy, Debug, PartialEq, Eq, clap::ValueEnum)]
pub enum Target {
    Example1,
    Table1,
    Table2,
    Table3,
    F8n11,
}

impl Target {
    pub const ALL: [Target; 5] = [
        Target::Example1,
        Target::Table1,
        Target::Table2,
        Target::Table3,
        Target::F8n11,
    ];

    pub fn name(self) -> &'static str {
        match self {
            Target::Example1 => "example1",
            Target::Table1 => "table1",
            Target::Table2 => "table2",
            Target::Table3 => "table3",
            Target::F8n11 => "f8n11",
        }
    }

    /// (q, n) of the ring the artifact lives in.
    pub fn setting(self) -> (u64, usize) {
        match self {
            Target::Example1 | Target::Table1 => (3, 125),
            Target::Table2 => (3, 25),
            Target::Table3 => (11, 9),
            Target::F8n11 => (8, 11),
        }
    }
}

impl fmt::Display for Target {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.name())
    }
}

impl FromStr for Target {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        Target::ALL
            .into_iter()
            .find(|t| t.name() == s)
            .ok_or_else(|| Error::BadInput(format!("unknown target {s:?}")))
    }
}

/// One compared cell.
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct Row {
    pub label: String,
    pub expected: String,
    pub got: String,
    pub matched: bool,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct Report {
    pub target: String,
    pub rows: Vec<Row>,
}

impl Report {
    pub fn passed(&self) -> bool {
        self.rows.iter().all(|r| r.matched)
    }

    pub fn mismatches(&self) -> usize {
        self.rows.iter().filter(|r| !r.matched).count()
    }
}

/// Non-comment lines of a golden, split on `|`.
fn golden_rows(text: &str) -> Vec<Vec<&str>> {
    text.lines()
        .map(str::trim)
        .filter(|l| !l.is_empty() && !l.starts_with('#'))
        .map(|l| l.split('|').map(str::trim).collect())
        .collect()
}

fn row(label: impl Into<String>, expected: String, got: String) -> Row {
    Row {
        label: label.into(),
        matched: expected == got,
        expected,
        got,
    }
}

fn ring(q: u64, n: usize) -> Result<RingSpec> {
    RingSpec::new(&FieldSpec::from_order(q)?, n)
}

fn ext(q: u64, n: usize) -> Result<ExtFieldSpec> {
    ExtFieldSpec::new(&FieldSpec::from_order(q)?, n)
}

pub fn reproduce(target: Target) -> Result<Report> {
    let rows = match target {
        Target::Example1 => example1()?,
        Target::Table1 => table1()?,
        Target::Table2 => table2()?,
        Target::Table3 => table3()?,
        Target::F8n11 => f8n11()?,
    };
    Ok(Report {
        target: target.name().into(),
        rows,
    })
}

/// Expected idempotents against a generated list, plus a CRT cross-check.
fn idempotent_rows(golden: &str, spec: &RingSpec, got: &[RingElement]) -> Result<Vec<Row>> {
    let lines = golden_rows(golden);
    if lines.len() != got.len() {
        return Err(Error::InternalError(format!(
            "golden has {} idempotents, generated {}",
            lines.len(),
            got.len()
        )));
    }
    lines
        .iter()
        .zip(got)
        .map(|(cells, e)| Ok(row(cells[0], spec.parse(cells[1])?.to_text(), e.to_text())))
        .collect()
}

fn example1() -> Result<Vec<Row>> {
    let spec = ring(3, 125)?;
    let closed: Vec<RingElement> = closed_form_pm(&spec, 5, 3)?.idempotents().cloned().collect();
    let mut rows = idempotent_rows(EXAMPLE1, &spec, &closed)?;
    let crt: BTreeSet<String> = primitive_idempotents(&spec)?
        .idempotents()
        .map(RingElement::to_text)
        .collect();
    let closed: BTreeSet<String> = closed.iter().map(RingElement::to_text).collect();
    rows.push(row(
        "crt = closed form",
        "true".into(),
        (crt == closed).to_string(),
    ));
    Ok(rows)
}

/// Every F_3 combination of x, x^[25], x^[124] that permutes F_{3^125}.
fn table1() -> Result<Vec<Row>> {
    let spec = ext(3, 125)?;
    let basis = primitive_idempotents(&ring(3, 125)?)?;
    let mut expected = BTreeSet::new();
    for cells in golden_rows(TABLE1) {
        for c in cells {
            expected.insert(LinearizedPoly::parse(&spec, c)?.to_text());
        }
    }
    let mut got = BTreeSet::new();
    for v in 1..27u32 {
        let mut coeffs = vec![0u32; 125];
        coeffs[0] = v % 3;
        coeffs[25] = v / 3 % 3;
        coeffs[124] = v / 9;
        let f = LinearizedPoly::from_base_coeffs(&spec, &coeffs)?;
        if f.is_permutation(&basis)? {
            got.insert(f.to_text());
        }
    }
    let mut rows: Vec<Row> = expected
        .union(&got)
        .map(|f| Row {
            label: f.clone(),
            expected: expected.contains(f).to_string(),
            got: got.contains(f).to_string(),
            matched: expected.contains(f) == got.contains(f),
        })
        .collect();
    rows.push(row("count", "18".into(), got.len().to_string()));
    Ok(rows)
}

/// Parses a cycle like `(012)` or `Id` into the map i -> σ(i) on {0,1,2}.
pub fn parse_cycle(label: &str, t: usize) -> Result<Vec<usize>> {
    let mut sigma: Vec<usize> = (0..t).collect();
    if label == "Id" {
        return Ok(sigma);
    }
    let inner = label
        .strip_prefix('(')
        .and_then(|s| s.strip_suffix(')'))
        .ok_or_else(|| Error::Parse(format!("bad cycle {label:?}")))?;
    let pts = inner
        .chars()
        .map(|c| {
            c.to_digit(10)
                .map(|d| d as usize)
                .filter(|&d| d < t)
                .ok_or_else(|| Error::Parse(format!("bad cycle {label:?}")))
        })
        .collect::<Result<Vec<_>>>()?;
    for (k, &a) in pts.iter().enumerate() {
        sigma[a] = pts[(k + 1) % pts.len()];
    }
    Ok(sigma)
}

/// f_σ = Σ f_{σ(i)} e_i over R_{3,25} with f_i = x^i (x^20 + 2x^15 + 1).
fn table2() -> Result<Vec<Row>> {
    let rspec = ring(3, 25)?;
    let spec = ext(3, 25)?;
    let basis = primitive_idempotents(&rspec)?;
    let f0 = rspec.parse("x^20+2*x^15+1")?;
    let units: Vec<RingElement> = (0..basis.len()).map(|i| f0.shift_mul_x(i)).collect();
    let mut rows = Vec::new();
    for cells in golden_rows(TABLE2) {
        let sigma = parse_cycle(cells[0], basis.len())?;
        let mut f = rspec.zero();
        for (i, e) in basis.idempotents().enumerate() {
            f = f.add(&units[sigma[i]].mul(e)?)?;
        }
        let big_f = LinearizedPoly::linearized_associate(&f, &spec)?;
        let inv = big_f.compositional_inverse(&basis)?;
        rows.push(row(
            format!("{} F", cells[0]),
            LinearizedPoly::parse(&spec, cells[1])?.to_text(),
            big_f.to_text(),
        ));
        rows.push(row(
            format!("{} F^-1", cells[0]),
            LinearizedPoly::parse(&spec, cells[2])?.to_text(),
            inv.to_text(),
        ));
    }
    Ok(rows)
}

fn sign_label(signs: &[i8], q: u64) -> String {
    signs
        .iter()
        .map(|&s| if s > 0 { "1".to_string() } else { (q - 1).to_string() })
        .collect::<Vec<_>>()
        .join(",")
}

fn table3() -> Result<Vec<Row>> {
    let spec = ext(11, 9)?;
    let basis = primitive_idempotents(&ring(11, 9)?)?;
    let generated: Vec<(String, String)> = sign_vector_associates(&basis)?
        .iter()
        .map(|s| {
            let f = LinearizedPoly::linearized_associate(&s.associate, &spec)?;
            Ok((sign_label(&s.signs, 11), f.to_text()))
        })
        .collect::<Result<_>>()?;
    let mut rows = Vec::new();
    for cells in golden_rows(TABLE3) {
        let got = generated
            .iter()
            .find(|(l, _)| l == cells[0])
            .map(|(_, f)| f.clone())
            .unwrap_or_else(|| "missing".into());
        rows.push(row(cells[0], LinearizedPoly::parse(&spec, cells[1])?.to_text(), got));
    }
    rows.push(row("count", "8".into(), generated.len().to_string()));
    Ok(rows)
}

fn f8n11() -> Result<Vec<Row>> {
    let spec = ring(8, 11)?;
    let basis = primitive_idempotents(&spec)?;
    let got: Vec<RingElement> = basis.idempotents().cloned().collect();
    idempotent_rows(F8N11, &spec, &got)
}
