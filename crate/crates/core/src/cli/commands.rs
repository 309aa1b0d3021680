use std::fmt::Write as _;
use std::fs;
use std::io::Write;
use std::path::{Path, PathBuf};

use super::format::{join, parse_document, parse_witness, push_pair, push_witness, render_document, render_witness, TupleDocument};
use super::CliError;
use crate::classify::{classify, normal_form, AffineLabel, Decomposition, Presentation};
use crate::coadjoint::{restrict_functional, stabilizer_basis};
use crate::linalg::{format_scalar, parse_scalar, FactorJordanData};
use crate::scramble::scramble;
use crate::symplectic::{parameter, standardize, verify_witness};

fn read_input(path: &Path) -> Result<String, CliError> {
    fs::read_to_string(path)
        .map_err(|e| CliError::parse(format!("cannot read {}: {e}", path.display())))
}

fn write_file(path: &Path, contents: &str) -> Result<(), CliError> {
    fs::write(path, contents)
        .map_err(|e| CliError::semantic(format!("cannot write {}: {e}", path.display())))
}

fn emit(out: &mut dyn Write, text: &str) -> Result<(), CliError> {
    out.write_all(text.as_bytes())
        .map_err(|e| CliError::semantic(format!("cannot write output: {e}")))
}

fn load_document(path: &Path) -> Result<TupleDocument, CliError> {
    let text = read_input(path)?;
    parse_document(&text).map_err(|e| CliError {
        message: format!("{}: {}", path.display(), e.message),
        ..e
    })
}

#[derive(Debug, Clone, Default)]
pub struct ClassifyOptions {
    pub emit_witness: bool,
    pub emit_functional: bool,
    /// Also write `normal_form(affine) ⊕ residual` as a tuple document.
    pub target_out: Option<PathBuf>,
    /// Also write the witness on its own.
    pub witness_out: Option<PathBuf>,
}

fn jordan_line(summary: &[FactorJordanData]) -> String {
    if summary.is_empty() {
        return "none".into();
    }
    summary
        .iter()
        .map(|f| {
            let nullities: Vec<String> = f.nullities.iter().map(usize::to_string).collect();
            format!(
                "({})^{} nullities {}",
                f.factor,
                f.multiplicity,
                nullities.join(",")
            )
        })
        .collect::<Vec<_>>()
        .join("; ")
}

/// Classifies a document and renders the report.
pub fn classify_report(
    doc: &TupleDocument,
    opts: &ClassifyOptions,
) -> Result<(String, Decomposition), CliError> {
    let t = &doc.tuple;
    let dec = classify(t)?;
    let mut out = String::new();
    if let Some(name) = &doc.name {
        writeln!(out, "input: {name}").unwrap();
    }
    writeln!(out, "dimension: {}", t.dim()).unwrap();
    writeln!(out, "kind: {}", dec.affine.kind()).unwrap();
    if let Some(r) = dec.affine.r() {
        writeln!(out, "r: {r}").unwrap();
    }
    if let Some(d) = dec.affine.modulus() {
        writeln!(out, "d: {}", format_scalar(d)).unwrap();
    }
    match parameter(t) {
        Ok(c) => writeln!(out, "parameter: {}", format_scalar(&c)).unwrap(),
        Err(_) => writeln!(out, "parameter: none").unwrap(),
    }
    writeln!(out, "residual_dimension: {}", dec.residual.dim()).unwrap();
    writeln!(out, "residual_charpoly: {}", dec.residual.charpoly).unwrap();
    writeln!(out, "residual_jordan: {}", jordan_line(&dec.residual.jordan_summary)).unwrap();
    push_pair(&mut out, "residual", &dec.residual.y, &dec.residual.form);
    if opts.emit_witness {
        push_witness(&mut out, &dec.witness);
    }
    if opts.emit_functional {
        if t.is_affine() {
            let (s, _) = standardize(t)?;
            let f = restrict_functional(&s.y, &stabilizer_basis(s.n))?;
            writeln!(out, "functional_n: {}", s.n).unwrap();
            writeln!(out, "functional: {}", join(&f.coords)).unwrap();
        } else {
            writeln!(out, "functional: none").unwrap();
        }
    }
    Ok((out, dec))
}

pub fn cmd_classify(input: &Path, opts: &ClassifyOptions, out: &mut dyn Write) -> Result<(), CliError> {
    let doc = load_document(input)?;
    let (report, dec) = classify_report(&doc, opts)?;
    if let Some(path) = &opts.target_out {
        let target = TupleDocument {
            name: Some(format!("{} presentation", dec.affine)),
            seed: None,
            tuple: dec.presentation.clone(),
        };
        write_file(path, &render_document(&target))?;
    }
    if let Some(path) = &opts.witness_out {
        write_file(path, &render_witness(&dec.witness))?;
    }
    emit(out, &report)
}

#[derive(Debug, Clone)]
pub struct NormalFormRequest {
    /// `odd-chain`, `two-chains` or `zero`.
    pub kind: String,
    pub r: usize,
    pub d: Option<String>,
    pub presentation: Presentation,
}

impl NormalFormRequest {
    pub fn label(&self) -> Result<AffineLabel, CliError> {
        let label = match self.kind.as_str() {
            "odd-chain" => {
                let text = self
                    .d
                    .as_deref()
                    .ok_or_else(|| CliError::parse("odd-chain needs --d"))?;
                let d = parse_scalar(text)
                    .ok_or_else(|| CliError::parse(format!("bad rational `{text}`")))?;
                AffineLabel::OddChain { r: self.r, d }
            }
            "two-chains" => AffineLabel::TwoChains { r: self.r },
            "zero" => AffineLabel::Zero,
            other => return Err(CliError::parse(format!("unknown kind `{other}`"))),
        };
        label.validate().map_err(|e| CliError::parse(e.to_string()))?;
        Ok(label)
    }
}

pub fn cmd_normal_form(req: &NormalFormRequest, out: &mut dyn Write) -> Result<(), CliError> {
    let label = req.label()?;
    let tuple = normal_form(&label, req.presentation)?;
    let pres = match req.presentation {
        Presentation::Standard => "standard",
        Presentation::ProofBasis => "proof-basis",
    };
    let doc = TupleDocument {
        name: Some(format!("{label} {pres}")),
        seed: None,
        tuple,
    };
    emit(out, &render_document(&doc))
}

#[derive(Debug, Clone)]
pub struct ScrambleRequest {
    pub input: PathBuf,
    pub seed: u64,
    pub count: usize,
    pub out_dir: PathBuf,
}

/// Seed of the `i`-th scrambled copy.
pub fn derived_seed(seed: u64, i: usize) -> u64 {
    seed.wrapping_mul(1_000_003).wrapping_add(i as u64)
}

/// Writes `scrambled_NNN.tuple` and `scrambled_NNN.witness` for each copy and
/// lists the tuple files on `out`.
pub fn cmd_scramble(req: &ScrambleRequest, out: &mut dyn Write) -> Result<(), CliError> {
    let doc = load_document(&req.input)?;
    fs::create_dir_all(&req.out_dir).map_err(|e| {
        CliError::semantic(format!("cannot create {}: {e}", req.out_dir.display()))
    })?;
    let base = doc.name.clone().unwrap_or_else(|| "input".into());
    let mut listing = String::new();
    for i in 0..req.count {
        let seed = derived_seed(req.seed, i);
        let (tuple, wit) = scramble(&doc.tuple, seed)?;
        let scrambled = TupleDocument {
            name: Some(format!("{base} scrambled {i:03}")),
            seed: Some(seed),
            tuple,
        };
        let tuple_path = req.out_dir.join(format!("scrambled_{i:03}.tuple"));
        let witness_path = req.out_dir.join(format!("scrambled_{i:03}.witness"));
        write_file(&tuple_path, &render_document(&scrambled))?;
        write_file(&witness_path, &render_witness(&wit))?;
        writeln!(listing, "{}", tuple_path.display()).unwrap();
    }
    emit(out, &listing)
}

/// Succeeds iff the witness carries `a` to `b`.
pub fn cmd_verify(a: &Path, b: &Path, witness: &Path, out: &mut dyn Write) -> Result<(), CliError> {
    let doc_a = load_document(a)?;
    let doc_b = load_document(b)?;
    let wit = parse_witness(&read_input(witness)?)?;
    if verify_witness(&doc_a.tuple, &doc_b.tuple, &wit) {
        emit(out, "verified\n")
    } else {
        Err(CliError::verification(format!(
            "witness {} does not carry {} to {}",
            witness.display(),
            a.display(),
            b.display()
        )))
    }
}

/// Functional of the standardized `Y` on the stabilizer basis.
pub fn cmd_orbit_functional(input: &Path, out: &mut dyn Write) -> Result<(), CliError> {
    let doc = load_document(input)?;
    let t = &doc.tuple;
    if !t.is_affine() {
        return Err(CliError::semantic("orbit functional needs a nonzero marked vector"));
    }
    let (s, to_standard) = standardize(t)?;
    let basis = stabilizer_basis(s.n);
    let f = restrict_functional(&s.y, &basis)?;
    let mut text = String::new();
    writeln!(text, "frame_n: {}", s.n).unwrap();
    writeln!(text, "basis_size: {}", basis.len()).unwrap();
    writeln!(text, "parameter: {}", format_scalar(&s.blocks.c)).unwrap();
    writeln!(text, "functional: {}", join(&f.coords)).unwrap();
    push_witness(&mut text, &to_standard);
    emit(out, &text)
}
