//! Text formats for sequences and patterns.
//!
//! * sequence CSV: header `k,re,im`, then one row per sample with `k`
//!   counting up from 0.
//! * sequence JSON: `{"p":…, "u":…, "ts":…, "samples":[[re,im],…]}`.
//! * pattern CSV: header `t,f,orientation` (see [`LmfhPattern::to_csv`]).
//!
//! Floats are written in the shortest decimal form that parses back to the
//! same binary64 value (never more than 17 significant digits), so files
//! round-trip bit-exactly.

use std::fmt::Write as _;

use num_complex::Complex64;
use serde::{Deserialize, Serialize};

use crate::numtheory::Prime;
use crate::pattern::{Flip, LmfhPattern, Orientation};
use crate::sequences::{ComplexSequence, ZcParams};
use crate::Error;

pub const SEQUENCE_HEADER: &str = "k,re,im";
pub const PATTERN_HEADER: &str = "t,f,orientation";

fn parse_err(line: usize, msg: impl Into<String>) -> Error {
    Error::Parse {
        line,
        msg: msg.into(),
    }
}

pub fn sequence_to_csv(seq: &[Complex64]) -> String {
    let mut out = String::with_capacity(48 * seq.len() + 8);
    out.push_str(SEQUENCE_HEADER);
    out.push('\n');
    for (k, z) in seq.iter().enumerate() {
        let _ = writeln!(out, "{k},{},{}", z.re, z.im);
    }
    out
}

fn parse_finite(field: &str, line: usize) -> Result<f64, Error> {
    let v: f64 = field
        .trim()
        .parse()
        .map_err(|_| parse_err(line, format!("bad number {field:?}")))?;
    if !v.is_finite() {
        return Err(parse_err(line, format!("non-finite value {field:?}")));
    }
    Ok(v)
}

/// Non-empty lines with their 1-based line numbers; a trailing `\r` is
/// dropped.
fn lines(text: &str) -> impl Iterator<Item = (usize, &str)> {
    text.lines()
        .enumerate()
        .map(|(i, l)| (i + 1, l.strip_suffix('\r').unwrap_or(l)))
        .filter(|(_, l)| !l.trim().is_empty())
}

fn expect_header<'a>(
    it: &mut impl Iterator<Item = (usize, &'a str)>,
    header: &str,
) -> Result<(), Error> {
    match it.next() {
        Some((_, l)) if l.trim() == header => Ok(()),
        Some((n, l)) => Err(parse_err(n, format!("expected header {header:?}, got {l:?}"))),
        None => Err(parse_err(1, "empty input")),
    }
}

/// Parses a `k,re,im` file. Indices must run `0, 1, 2, …` without gaps.
pub fn parse_sequence_csv(text: &str) -> Result<ComplexSequence, Error> {
    let mut it = lines(text);
    expect_header(&mut it, SEQUENCE_HEADER)?;
    let mut out = Vec::new();
    for (n, line) in it {
        let mut fields = line.split(',');
        let (Some(k), Some(re), Some(im), None) =
            (fields.next(), fields.next(), fields.next(), fields.next())
        else {
            return Err(parse_err(n, "expected three fields"));
        };
        let k: usize = k
            .trim()
            .parse()
            .map_err(|_| parse_err(n, format!("bad index {k:?}")))?;
        if k != out.len() {
            return Err(parse_err(n, format!("index {k} out of sequence, expected {}", out.len())));
        }
        out.push(Complex64::new(parse_finite(re, n)?, parse_finite(im, n)?));
    }
    if out.is_empty() {
        return Err(parse_err(1, "no samples"));
    }
    Ok(out.into())
}

#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct SequenceFile {
    pub p: u64,
    pub u: i64,
    pub ts: i64,
    pub samples: Vec<[f64; 2]>,
}

impl SequenceFile {
    pub fn new(params: ZcParams, seq: &[Complex64]) -> Self {
        SequenceFile {
            p: params.p() as u64,
            u: params.u(),
            ts: params.ts(),
            samples: seq.iter().map(|z| [z.re, z.im]).collect(),
        }
    }

    /// Validates parameters and length and returns them with the samples.
    pub fn into_parts(self) -> Result<(ZcParams, ComplexSequence), Error> {
        let params = ZcParams::new(self.p, self.u, self.ts)?;
        if self.samples.len() != params.prime().as_usize() {
            return Err(Error::LengthMismatch {
                expected: params.prime().as_usize(),
                got: self.samples.len(),
            });
        }
        let seq = self
            .samples
            .into_iter()
            .map(|[re, im]| Complex64::new(re, im))
            .collect();
        Ok((params, seq))
    }
}

pub fn sequence_to_json(params: ZcParams, seq: &[Complex64]) -> String {
    serde_json::to_string(&SequenceFile::new(params, seq)).expect("finite floats serialize")
}

pub fn parse_sequence_json(text: &str) -> Result<(ZcParams, ComplexSequence), Error> {
    let file: SequenceFile = serde_json::from_str(text).map_err(|e| parse_err(e.line(), e.to_string()))?;
    file.into_parts()
}

/// Parses a `t,f,orientation` file. `P` is the number of rows and must be an
/// odd prime; all rows must share one orientation.
pub fn parse_pattern_csv(text: &str) -> Result<LmfhPattern, Error> {
    let mut it = lines(text);
    expect_header(&mut it, PATTERN_HEADER)?;
    let mut points = Vec::new();
    let mut orientation = None;
    for (n, line) in it {
        let mut fields = line.split(',');
        let (Some(t), Some(f), Some(o), None) =
            (fields.next(), fields.next(), fields.next(), fields.next())
        else {
            return Err(parse_err(n, "expected three fields"));
        };
        let t: i64 = t.trim().parse().map_err(|_| parse_err(n, format!("bad time {t:?}")))?;
        let f: i64 = f.trim().parse().map_err(|_| parse_err(n, format!("bad frequency {f:?}")))?;
        let o = match o.trim() {
            "obverse" => Orientation::Obverse,
            "reverse" => Orientation::Reverse,
            other => return Err(parse_err(n, format!("bad orientation {other:?}"))),
        };
        if *orientation.get_or_insert(o) != o {
            return Err(parse_err(n, "mixed orientations"));
        }
        points.push((t, f));
    }
    let prime = Prime::new(points.len() as u64)?;
    LmfhPattern::from_points(prime, points, orientation.unwrap_or(Orientation::Obverse))
}

/// Parses an ordered, comma-separated flip list such as `dft,conj`.
/// `none` on its own (or an empty string) means no flips.
pub fn parse_flip_list(text: &str) -> Result<Vec<Flip>, Error> {
    let text = text.trim();
    if text.is_empty() || text == "none" {
        return Ok(Vec::new());
    }
    text.split(',')
        .map(|s| match s.trim() {
            "dft" => Ok(Flip::Dft),
            "idft" => Ok(Flip::Idft),
            "conj" => Ok(Flip::Conj),
            other => Err(parse_err(1, format!("unknown flip {other:?}"))),
        })
        .collect()
}
