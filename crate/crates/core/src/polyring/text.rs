//! Lenient term-list parsing shared by the ring and linearized text forms.

use crate::error::{Error, Result};
use crate::fields::{split_top_level, FieldSpec};

/// One signed term `c*x^e` before interpretation. `power` is `None` for a
/// constant, `Some("")` for a bare `x` and otherwise the text after `^`.
#[derive(Debug, Clone, PartialEq, Eq)]
pub(crate) struct RawTerm {
    pub negative: bool,
    pub coeff: Option<String>,
    pub power: Option<String>,
}

pub(crate) fn split_terms(s: &str) -> Result<Vec<RawTerm>> {
    let s: String = s.chars().filter(|c| !c.is_whitespace()).collect();
    if s.is_empty() {
        return Err(Error::Parse("empty polynomial".into()));
    }
    let mut pieces: Vec<(bool, String)> = Vec::new();
    let mut depth = 0i32;
    let mut cur = String::new();
    let mut negative = false;
    let mut prev = None;
    for ch in s.chars() {
        match ch {
            '[' | '(' | '{' => depth += 1,
            ']' | ')' | '}' => depth -= 1,
            _ => {}
        }
        if depth == 0 && (ch == '+' || ch == '-') && prev != Some('^') && prev != Some('*') {
            if !cur.is_empty() {
                pieces.push((negative, std::mem::take(&mut cur)));
                negative = false;
            }
            if ch == '-' {
                negative = !negative;
            }
            prev = Some(ch);
            continue;
        }
        cur.push(ch);
        prev = Some(ch);
    }
    if depth != 0 {
        return Err(Error::Parse(format!("unbalanced brackets in {s:?}")));
    }
    if cur.is_empty() {
        return Err(Error::Parse(format!("dangling sign in {s:?}")));
    }
    pieces.push((negative, cur));

    pieces
        .into_iter()
        .map(|(negative, body)| {
            let pos = top_level_x(&body);
            let (coeff, power) = match pos {
                None => (Some(body.clone()), None),
                Some(p) => {
                    let c = body[..p].trim_end_matches('*');
                    let rest = &body[p + 1..];
                    let power = if rest.is_empty() {
                        String::new()
                    } else if let Some(e) = rest.strip_prefix('^') {
                        let e = e
                            .strip_prefix('{')
                            .and_then(|t| t.strip_suffix('}'))
                            .unwrap_or(e);
                        if e.is_empty() {
                            return Err(Error::Parse(format!("missing exponent in {body:?}")));
                        }
                        e.to_string()
                    } else {
                        return Err(Error::Parse(format!("unexpected {rest:?} after x")));
                    };
                    let coeff = if c.is_empty() { None } else { Some(c.to_string()) };
                    (coeff, Some(power))
                }
            };
            Ok(RawTerm {
                negative,
                coeff,
                power,
            })
        })
        .collect()
}

fn top_level_x(body: &str) -> Option<usize> {
    let mut depth = 0i32;
    for (i, ch) in body.char_indices() {
        match ch {
            '[' | '(' | '{' => depth += 1,
            ']' | ')' | '}' => depth -= 1,
            'x' | 'X' if depth == 0 => return Some(i),
            _ => {}
        }
    }
    None
}

pub(crate) fn parse_exponent(e: &str) -> Result<usize> {
    e.parse::<usize>()
        .map_err(|_| Error::Parse(format!("bad exponent {e:?}")))
}

/// Raw coefficients (unfolded) of a ring text or dense form.
pub(crate) fn parse_ring(field: &FieldSpec, s: &str) -> Result<Vec<u32>> {
    let t = s.trim();
    if t == "0" {
        return Ok(vec![0]);
    }
    if t.starts_with('[') && t.ends_with(']') && !t.contains(['x', 'X']) {
        let inner = &t[1..t.len() - 1];
        return split_top_level(inner, ',')
            .iter()
            .map(|c| field.parse(c))
            .collect();
    }
    let mut out: Vec<u32> = Vec::new();
    for term in split_terms(t)? {
        let e = match term.power.as_deref() {
            None => 0,
            Some("") => 1,
            Some(e) => parse_exponent(e)?,
        };
        let mut c = match &term.coeff {
            Some(c) => field.parse(c)?,
            None => 1,
        };
        if term.negative {
            c = field.neg(c);
        }
        if out.len() <= e {
            out.resize(e + 1, 0);
        }
        out[e] = field.add(out[e], c);
    }
    Ok(out)
}
