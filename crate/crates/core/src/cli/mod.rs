//! Command implementations behind the `cotype` binary, and the text formats
//! they read and write.

pub mod commands;
pub mod format;

use std::fmt;

pub use commands::{
    classify_report, cmd_classify, cmd_normal_form, cmd_orbit_functional, cmd_scramble,
    cmd_verify, ClassifyOptions, NormalFormRequest, ScrambleRequest,
};
pub use format::{
    parse_document, parse_witness, render_document, render_witness, TupleDocument,
};

/// Process exit status contract.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum ExitStatus {
    Ok = 0,
    VerificationFailed = 1,
    ParseFailure = 2,
    SemanticFailure = 3,
}

impl ExitStatus {
    pub fn code(self) -> i32 {
        self as i32
    }
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct CliError {
    pub status: ExitStatus,
    pub message: String,
}

impl CliError {
    pub fn parse(message: impl Into<String>) -> Self {
        CliError {
            status: ExitStatus::ParseFailure,
            message: message.into(),
        }
    }

    pub fn semantic(message: impl Into<String>) -> Self {
        CliError {
            status: ExitStatus::SemanticFailure,
            message: message.into(),
        }
    }

    pub fn verification(message: impl Into<String>) -> Self {
        CliError {
            status: ExitStatus::VerificationFailed,
            message: message.into(),
        }
    }
}

impl fmt::Display for CliError {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(&self.message)
    }
}

impl std::error::Error for CliError {}

impl From<crate::Error> for CliError {
    fn from(e: crate::Error) -> Self {
        CliError::semantic(e.to_string())
    }
}
