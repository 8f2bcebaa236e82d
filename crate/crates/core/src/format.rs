//! Reading and writing origamis.
//!
//! JSON: `{"n": 3, "h": [1, 0, 2], "v": [2, 1, 0], "name": "L"}` with 0-based images.
//! Text: `n=3; h=(1,2); v=(1,3)` with 1-based cycle notation (`n` optional).
//! Complex numbers are written as `{"re": .., "im": ..}`.

use num_complex::Complex64;
use serde::{Deserialize, Serialize};

use crate::error::OrigamiError;
use crate::origami::{quaternion_origami, torus_grid, Origami};
use crate::perm::Permutation;

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct OrigamiJson {
    pub n: usize,
    pub h: Vec<usize>,
    pub v: Vec<usize>,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub name: Option<String>,
}

impl From<&Origami> for OrigamiJson {
    fn from(o: &Origami) -> Self {
        OrigamiJson {
            n: o.n_squares(),
            h: o.h().images().to_vec(),
            v: o.v().images().to_vec(),
            name: o.name().map(str::to_owned),
        }
    }
}

impl TryFrom<OrigamiJson> for Origami {
    type Error = OrigamiError;
    fn try_from(j: OrigamiJson) -> Result<Self, OrigamiError> {
        if j.h.len() != j.n || j.v.len() != j.n {
            return Err(OrigamiError::Parse(format!(
                "n = {} but h has {} and v has {} entries",
                j.n,
                j.h.len(),
                j.v.len()
            )));
        }
        Origami::new(Permutation::new(j.h)?, Permutation::new(j.v)?, j.name)
    }
}

#[derive(Clone, Copy, Debug, PartialEq, Serialize, Deserialize)]
pub struct ComplexJson {
    pub re: f64,
    pub im: f64,
}

impl From<Complex64> for ComplexJson {
    fn from(z: Complex64) -> Self {
        ComplexJson { re: z.re, im: z.im }
    }
}

impl From<ComplexJson> for Complex64 {
    fn from(z: ComplexJson) -> Self {
        Complex64::new(z.re, z.im)
    }
}

fn parse_real(s: &str) -> Option<f64> {
    match s.split_once('/') {
        Some((p, q)) => Some(p.trim().parse::<f64>().ok()? / q.trim().parse::<f64>().ok()?),
        None => s.trim().parse().ok(),
    }
}

/// Parses `2`, `-0.5`, `1/3`, `i`, `-2i`, `0.3+1.1i` or `1/3-2/5i`.
pub fn parse_complex(s: &str) -> Result<Complex64, String> {
    let t: String = s.chars().filter(|c| !c.is_whitespace()).collect();
    let bad = || format!("cannot read {s:?} as a complex number");
    if t.is_empty() {
        return Err(bad());
    }
    let Some(body) = t.strip_suffix('i') else {
        return parse_real(&t).map(|re| Complex64::new(re, 0.0)).ok_or_else(bad);
    };
    // split before the last sign that is not a leading sign or part of an exponent
    let bytes = body.as_bytes();
    let split = (1..bytes.len())
        .rev()
        .find(|&k| (bytes[k] == b'+' || bytes[k] == b'-') && !matches!(bytes[k - 1], b'e' | b'E'));
    let (re, im) = match split {
        Some(k) => (&body[..k], &body[k..]),
        None => ("0", body),
    };
    let im = match im {
        "" | "+" => 1.0,
        "-" => -1.0,
        other => parse_real(other).ok_or_else(bad)?,
    };
    Ok(Complex64::new(parse_real(re).ok_or_else(bad)?, im))
}

pub fn to_json(o: &Origami) -> String {
    serde_json::to_string(&OrigamiJson::from(o)).expect("plain data serializes")
}

pub fn from_json(s: &str) -> Result<Origami, OrigamiError> {
    let j: OrigamiJson = serde_json::from_str(s).map_err(|e| OrigamiError::Parse(e.to_string()))?;
    Origami::try_from(j)
}

pub fn to_text(o: &Origami) -> String {
    o.to_string()
}

/// Parses 1-based cycle notation such as `(1,2,3)(4,5)`; `()` is the identity.
pub fn parse_cycles(s: &str, n: usize) -> Result<Permutation, OrigamiError> {
    let cycles = raw_cycles(s)?;
    let zero_based: Vec<Vec<usize>> = cycles
        .into_iter()
        .map(|c| c.into_iter().map(|i| i - 1).collect())
        .collect();
    Permutation::from_cycles(n, &zero_based)
}

fn raw_cycles(s: &str) -> Result<Vec<Vec<usize>>, OrigamiError> {
    let bad = |msg: &str| OrigamiError::Parse(format!("{msg} in {s:?}"));
    let mut out = Vec::new();
    let mut rest = s.trim();
    while !rest.is_empty() {
        let body = rest.strip_prefix('(').ok_or_else(|| bad("expected '('"))?;
        let close = body.find(')').ok_or_else(|| bad("unclosed cycle"))?;
        let inner = body[..close].trim();
        if !inner.is_empty() {
            let cycle = inner
                .split([',', ' '])
                .filter(|t| !t.is_empty())
                .map(|t| match t.parse::<usize>() {
                    Ok(0) | Err(_) => Err(bad("labels are positive integers")),
                    Ok(i) => Ok(i),
                })
                .collect::<Result<Vec<_>, _>>()?;
            out.push(cycle);
        }
        rest = body[close + 1..].trim_start();
    }
    Ok(out)
}

pub fn from_text(s: &str) -> Result<Origami, OrigamiError> {
    let mut n = None;
    let mut h = None;
    let mut v = None;
    let mut name = None;
    for field in s.split([';', '\n']).map(str::trim).filter(|f| !f.is_empty()) {
        let (key, value) = field
            .split_once('=')
            .ok_or_else(|| OrigamiError::Parse(format!("expected key=value, got {field:?}")))?;
        let value = value.trim();
        match key.trim() {
            "n" => {
                n = Some(
                    value
                        .parse::<usize>()
                        .map_err(|_| OrigamiError::Parse(format!("bad square count {value:?}")))?,
                )
            }
            "h" => h = Some(value.to_owned()),
            "v" => v = Some(value.to_owned()),
            "name" => name = Some(value.to_owned()),
            other => return Err(OrigamiError::Parse(format!("unknown key {other:?}"))),
        }
    }
    let h = h.ok_or_else(|| OrigamiError::Parse("missing h".into()))?;
    let v = v.ok_or_else(|| OrigamiError::Parse("missing v".into()))?;
    let n = match n {
        Some(n) => n,
        None => raw_cycles(&h)?
            .iter()
            .chain(raw_cycles(&v)?.iter())
            .flatten()
            .copied()
            .max()
            .unwrap_or(1),
    };
    Origami::new(parse_cycles(&h, n)?, parse_cycles(&v, n)?, name)
}

/// Reads either format, choosing by the first non-blank character.
pub fn parse_origami(s: &str) -> Result<Origami, OrigamiError> {
    if s.trim_start().starts_with('{') {
        from_json(s)
    } else {
        from_text(s)
    }
}

/// Built-in origamis by name: `W`, `torus:<n>`.
pub fn builtin(name: &str) -> Result<Origami, OrigamiError> {
    match name {
        "W" | "w" | "quaternion" => Ok(quaternion_origami()),
        _ => match name.strip_prefix("torus:") {
            Some(k) => torus_grid(
                k.parse()
                    .map_err(|_| OrigamiError::Parse(format!("bad grid size {k:?}")))?,
            ),
            None => Err(OrigamiError::Parse(format!("unknown built-in origami {name:?}"))),
        },
    }
}
