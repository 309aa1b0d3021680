//! Line-oriented text formats.
//!
//! A file is a sequence of `key: value` lines. A key with an empty value may
//! be followed by matrix rows, one per line, entries separated by
//! whitespace. Scalars are written `p/q` or `p`. `#` starts a comment.
//!
//! ```text
//! name: example
//! dimension: 2
//! form:
//! 0 1
//! -1 0
//! Y:
//! 0 5
//! 0 0
//! v: 0 1
//! ```
//!
//! Witness files carry `P:` (rows) and `w:`; other keys are ignored there, so
//! a classification report with a witness section doubles as a witness file.

use std::fmt::Write as _;

use super::CliError;
use crate::linalg::{format_scalar, parse_scalar, Matrix, Scalar, Vector};
use crate::symplectic::{EquivalenceWitness, SymplecticForm, Tuple};

#[derive(Debug, Clone)]
struct Section {
    key: String,
    inline: String,
    rows: Vec<(usize, String)>,
    line: usize,
}

fn sections(text: &str) -> Result<Vec<Section>, CliError> {
    let mut out: Vec<Section> = Vec::new();
    for (idx, raw) in text.lines().enumerate() {
        let lineno = idx + 1;
        let line = raw.split('#').next().unwrap_or("").trim();
        if line.is_empty() {
            continue;
        }
        if let Some((key, rest)) = line.split_once(':') {
            let key = key.trim().to_string();
            if out.iter().any(|s| s.key == key) {
                return Err(CliError::parse(format!("line {lineno}: duplicate key `{key}`")));
            }
            out.push(Section {
                key,
                inline: rest.trim().to_string(),
                rows: Vec::new(),
                line: lineno,
            });
        } else {
            match out.last_mut() {
                Some(s) => s.rows.push((lineno, line.to_string())),
                None => {
                    return Err(CliError::parse(format!(
                        "line {lineno}: data before any key"
                    )))
                }
            }
        }
    }
    Ok(out)
}

fn find<'a>(secs: &'a [Section], key: &str) -> Option<&'a Section> {
    secs.iter().find(|s| s.key == key)
}

fn require<'a>(secs: &'a [Section], key: &str) -> Result<&'a Section, CliError> {
    find(secs, key).ok_or_else(|| CliError::parse(format!("missing `{key}:`")))
}

fn parse_row(line: usize, text: &str) -> Result<Vector, CliError> {
    text.split_whitespace()
        .map(|tok| {
            parse_scalar(tok)
                .ok_or_else(|| CliError::parse(format!("line {line}: bad rational `{tok}`")))
        })
        .collect()
}

fn parse_vector(sec: &Section, dim: usize) -> Result<Vector, CliError> {
    if !sec.rows.is_empty() {
        return Err(CliError::parse(format!(
            "line {}: `{}` takes a single line",
            sec.line, sec.key
        )));
    }
    let v = parse_row(sec.line, &sec.inline)?;
    if v.len() != dim {
        return Err(CliError::parse(format!(
            "line {}: `{}` has {} entries, expected {dim}",
            sec.line,
            sec.key,
            v.len()
        )));
    }
    Ok(v)
}

fn parse_matrix(sec: &Section, dim: usize) -> Result<Matrix, CliError> {
    if !sec.inline.is_empty() {
        return Err(CliError::parse(format!(
            "line {}: rows of `{}` go on the following lines",
            sec.line, sec.key
        )));
    }
    if sec.rows.len() != dim {
        return Err(CliError::parse(format!(
            "line {}: `{}` has {} rows, expected {dim}",
            sec.line,
            sec.key,
            sec.rows.len()
        )));
    }
    let rows = sec
        .rows
        .iter()
        .map(|(line, text)| {
            let row = parse_row(*line, text)?;
            if row.len() != dim {
                return Err(CliError::parse(format!(
                    "line {line}: {} entries, expected {dim}",
                    row.len()
                )));
            }
            Ok(row)
        })
        .collect::<Result<Vec<_>, _>>()?;
    Matrix::from_rows(rows).map_err(|e| CliError::parse(e.to_string()))
}

/// A tuple file with its optional metadata.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct TupleDocument {
    pub name: Option<String>,
    pub seed: Option<u64>,
    pub tuple: Tuple,
}

impl TupleDocument {
    pub fn new(tuple: Tuple) -> Self {
        TupleDocument {
            name: None,
            seed: None,
            tuple,
        }
    }
}

/// Syntax problems are parse failures; a form that is not symplectic or a
/// `Y` outside its algebra is a semantic failure.
pub fn parse_document(text: &str) -> Result<TupleDocument, CliError> {
    let secs = sections(text)?;
    let dim_sec = require(&secs, "dimension")?;
    let dim: usize = dim_sec.inline.parse().map_err(|_| {
        CliError::parse(format!("line {}: bad dimension `{}`", dim_sec.line, dim_sec.inline))
    })?;
    let gram = parse_matrix(require(&secs, "form")?, dim)?;
    let y = parse_matrix(require(&secs, "Y")?, dim)?;
    let v = parse_vector(require(&secs, "v")?, dim)?;
    let seed = match find(&secs, "seed") {
        None => None,
        Some(s) => Some(s.inline.parse().map_err(|_| {
            CliError::parse(format!("line {}: bad seed `{}`", s.line, s.inline))
        })?),
    };
    let name = find(&secs, "name").map(|s| s.inline.clone());
    let form = SymplecticForm::new(gram)?;
    let tuple = Tuple::new(form, y, v)?;
    Ok(TupleDocument { name, seed, tuple })
}

fn push_matrix(out: &mut String, key: &str, m: &Matrix) {
    writeln!(out, "{key}:").unwrap();
    for row in m.to_rows() {
        writeln!(out, "{}", join(&row)).unwrap();
    }
}

fn push_vector(out: &mut String, key: &str, v: &[Scalar]) {
    if v.is_empty() {
        writeln!(out, "{key}:").unwrap();
    } else {
        writeln!(out, "{key}: {}", join(v)).unwrap();
    }
}

pub(crate) fn join(v: &[Scalar]) -> String {
    v.iter().map(format_scalar).collect::<Vec<_>>().join(" ")
}

pub fn render_document(doc: &TupleDocument) -> String {
    let mut out = String::new();
    if let Some(name) = &doc.name {
        writeln!(out, "name: {name}").unwrap();
    }
    if let Some(seed) = doc.seed {
        writeln!(out, "seed: {seed}").unwrap();
    }
    let t = &doc.tuple;
    writeln!(out, "dimension: {}", t.dim()).unwrap();
    push_matrix(&mut out, "form", t.form.gram());
    push_matrix(&mut out, "Y", &t.y);
    push_vector(&mut out, "v", &t.v);
    out
}

/// Reads `P:` and `w:`; the dimension is taken from the number of rows of `P`.
pub fn parse_witness(text: &str) -> Result<EquivalenceWitness, CliError> {
    let secs = sections(text)?;
    let p_sec = require(&secs, "P")?;
    let dim = p_sec.rows.len();
    let p = parse_matrix(p_sec, dim)?;
    let w = parse_vector(require(&secs, "w")?, dim)?;
    Ok(EquivalenceWitness { p, w })
}

pub(crate) fn push_witness(out: &mut String, wit: &EquivalenceWitness) {
    push_matrix(out, "P", &wit.p);
    push_vector(out, "w", &wit.w);
}

pub fn render_witness(wit: &EquivalenceWitness) -> String {
    let mut out = String::new();
    push_witness(&mut out, wit);
    out
}

pub(crate) fn push_pair(out: &mut String, prefix: &str, y: &Matrix, form: &SymplecticForm) {
    push_matrix(out, &format!("{prefix}_Y"), y);
    push_matrix(out, &format!("{prefix}_form"), form.gram());
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::linalg::scalar::{frac, int, unit_vector};
    use crate::symplectic::standard_j;

    const SAMPLE: &str = "\
name: example   # trailing comment
dimension: 2
form:
0 1
-1 0
Y:
0 5/2
0 0
v: 0 1
";

    #[test]
    fn parse_and_render_round_trip() {
        let doc = parse_document(SAMPLE).unwrap();
        assert_eq!(doc.name.as_deref(), Some("example"));
        assert_eq!(doc.tuple.y[(0, 1)], frac(5, 2));
        assert_eq!(doc.tuple.v, unit_vector(2, 1));
        let text = render_document(&doc);
        assert_eq!(parse_document(&text).unwrap(), doc);
    }

    #[test]
    fn empty_dimension() {
        let doc = parse_document("dimension: 0\nform:\nY:\nv:\n").unwrap();
        assert_eq!(doc.tuple, Tuple::empty());
        assert_eq!(parse_document(&render_document(&doc)).unwrap(), doc);
    }

    #[test]
    fn parse_errors() {
        use super::super::ExitStatus;
        let cases = [
            SAMPLE.replace("5/2", "5/0"),
            SAMPLE.replace("dimension: 2", "dimension: two"),
            SAMPLE.replace("v: 0 1", "v: 0 1 0"),
            SAMPLE.replace("-1 0\n", ""),
            SAMPLE.replace("v: 0 1\n", ""),
            format!("{SAMPLE}v: 1 0\n"),
            "0 1\ndimension: 2\n".to_string(),
        ];
        for text in &cases {
            assert_eq!(parse_document(text).unwrap_err().status, ExitStatus::ParseFailure, "{text}");
        }
    }

    #[test]
    fn semantic_errors() {
        use super::super::ExitStatus;
        let not_skew = SAMPLE.replace("-1 0", "1 0");
        assert_eq!(parse_document(&not_skew).unwrap_err().status, ExitStatus::SemanticFailure);
        let not_in_algebra = SAMPLE.replace("0 5/2", "1 5/2");
        assert_eq!(
            parse_document(&not_in_algebra).unwrap_err().status,
            ExitStatus::SemanticFailure
        );
    }

    #[test]
    fn witness_round_trip() {
        let wit = EquivalenceWitness {
            p: standard_j(0).gram().clone(),
            w: vec![int(1), frac(-1, 3)],
        };
        assert_eq!(parse_witness(&render_witness(&wit)).unwrap(), wit);
    }
}
