//! Verification suites behind the command-line subcommands. Each returns a
//! [`VerificationReport`] with checks sorted by id.

mod classify;
mod fock;
mod identities;
mod probe;
mod repr;

pub use classify::{classify_suite, realization_sources};
pub use fock::fock_suite;
pub use identities::{identities_suite, IdentityOptions};
pub use probe::probe_suite;
pub use repr::{repr_suite, ReprSource};

use thiserror::Error;

use crate::report::ReportError;

/// Seed used when none is given.
pub const DEFAULT_SEED: u64 = 0x5eed_0005;

#[derive(Debug, Error)]
pub enum SuiteError {
    #[error("invalid argument: {0}")]
    Usage(String),
    #[error(transparent)]
    Uea(#[from] crate::uea::UeaError),
    #[error(transparent)]
    Lie(#[from] crate::lie::LieError),
    #[error(transparent)]
    Fock(#[from] crate::fock::FockError),
    #[error(transparent)]
    Repr(#[from] crate::repr::ReprError),
    #[error(transparent)]
    Gt(#[from] crate::gt::GtError),
    #[error(transparent)]
    Report(#[from] ReportError),
}

/// Summary of a family of identity checks: how many ran, and the first few failures.
#[derive(Debug, Clone, serde::Serialize)]
pub(crate) struct Tally {
    pub cases: usize,
    pub failures: usize,
    pub examples: Vec<String>,
}

impl Tally {
    pub fn new() -> Self {
        Tally { cases: 0, failures: 0, examples: Vec::new() }
    }

    pub fn record(&mut self, ok: bool, what: impl FnOnce() -> String) {
        self.cases += 1;
        if !ok {
            self.failures += 1;
            if self.examples.len() < 5 {
                self.examples.push(what());
            }
        }
    }

    pub fn ok(&self) -> bool {
        self.failures == 0 && self.cases > 0
    }
}
