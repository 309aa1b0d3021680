use std::io;
use std::path::PathBuf;
use std::process::ExitCode;

use clap::{Parser, Subcommand, ValueEnum};

use cotype::cli::{
    cmd_classify, cmd_normal_form, cmd_orbit_functional, cmd_scramble, cmd_verify,
    ClassifyOptions, CliError, NormalFormRequest, ScrambleRequest,
};
use cotype::Presentation;

#[derive(Parser)]
#[command(name = "cotype", version, about = "Classify marked infinitesimally symplectic maps")]
struct Cli {
    #[command(subcommand)]
    command: Command,
}

#[derive(Clone, Copy, ValueEnum)]
enum Kind {
    OddChain,
    TwoChains,
    Zero,
}

#[derive(Clone, Copy, ValueEnum)]
enum PresentationArg {
    Standard,
    ProofBasis,
}

#[derive(Subcommand)]
enum Command {
    /// Decompose a tuple into its affine summand and residual pair.
    Classify {
        input: PathBuf,
        #[arg(long)]
        emit_witness: bool,
        #[arg(long)]
        emit_functional: bool,
        /// Write the normal-form presentation the witness maps onto.
        #[arg(long, value_name = "FILE")]
        target_out: Option<PathBuf>,
        #[arg(long, value_name = "FILE")]
        witness_out: Option<PathBuf>,
    },
    /// Print the representative tuple of a label.
    NormalForm {
        #[arg(long, value_enum)]
        kind: Kind,
        #[arg(long, default_value_t = 0)]
        r: usize,
        /// Modulus, as `p/q`; required for odd chains.
        #[arg(long, allow_hyphen_values = true)]
        d: Option<String>,
        #[arg(long, value_enum, default_value = "standard")]
        presentation: PresentationArg,
    },
    /// Write seeded random equivalent copies of a tuple, with witnesses.
    Scramble {
        input: PathBuf,
        #[arg(long, default_value_t = 0)]
        seed: u64,
        #[arg(long, default_value_t = 1)]
        count: usize,
        #[arg(long, value_name = "DIR")]
        out_dir: PathBuf,
    },
    /// Check that a witness carries tuple A to tuple B.
    Verify {
        a: PathBuf,
        b: PathBuf,
        witness: PathBuf,
    },
    /// Print the trace functional of the standardized map on the stabilizer.
    OrbitFunctional { input: PathBuf },
}

fn dispatch(cli: Cli) -> Result<(), CliError> {
    let stdout = io::stdout();
    let mut out = stdout.lock();
    match cli.command {
        Command::Classify {
            input,
            emit_witness,
            emit_functional,
            target_out,
            witness_out,
        } => {
            let opts = ClassifyOptions {
                emit_witness,
                emit_functional,
                target_out,
                witness_out,
            };
            cmd_classify(&input, &opts, &mut out)
        }
        Command::NormalForm {
            kind,
            r,
            d,
            presentation,
        } => {
            let kind = match kind {
                Kind::OddChain => "odd-chain",
                Kind::TwoChains => "two-chains",
                Kind::Zero => "zero",
            };
            let presentation = match presentation {
                PresentationArg::Standard => Presentation::Standard,
                PresentationArg::ProofBasis => Presentation::ProofBasis,
            };
            let req = NormalFormRequest {
                kind: kind.into(),
                r,
                d,
                presentation,
            };
            cmd_normal_form(&req, &mut out)
        }
        Command::Scramble {
            input,
            seed,
            count,
            out_dir,
        } => cmd_scramble(
            &ScrambleRequest {
                input,
                seed,
                count,
                out_dir,
            },
            &mut out,
        ),
        Command::Verify { a, b, witness } => cmd_verify(&a, &b, &witness, &mut out),
        Command::OrbitFunctional { input } => cmd_orbit_functional(&input, &mut out),
    }
}

fn main() -> ExitCode {
    match dispatch(Cli::parse()) {
        Ok(()) => ExitCode::SUCCESS,
        Err(e) => {
            eprintln!("cotype: {e}");
            ExitCode::from(e.status.code() as u8)
        }
    }
}
