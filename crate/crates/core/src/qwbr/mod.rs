//! The quantized walled Brauer algebra `H_{r,s}(q, rho)` as a confluent
//! rewriting system, its quantum Jucys-Murphy elements, relation checks,
//! the classical limit and the center.

mod checks;
mod element;
mod jm;
mod rewriting;

use thiserror::Error;

use crate::scalars::ScalarError;
use crate::wbr_algebra::AlgebraError;

pub use checks::{
    associativity_failures, classical_limit_check, q_center_dimension, q_supersym_central_check,
    seed_modes, verify_q_relations, verify_q_relations_with, CentralityCheck, ClassicalLimitReport,
    QCenterReport,
};
pub use element::{q_mul, QElement};
pub use jm::{
    contraction, q_jm_closed_form, q_jm_family, q_jm_recursive, q_power_sum, transposition_element,
};
pub use rewriting::{
    presentation, Alphabet, CompletionConfig, Letter, NcPoly, Presentation, QParams, RewriteSystem,
    Word,
};

/// Largest `r + s` the quantized module accepts.
pub const MAX_STRANDS: usize = 5;

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum QError {
    #[error(transparent)]
    Scalar(#[from] ScalarError),
    #[error(transparent)]
    Algebra(#[from] AlgebraError),
    #[error("completion found {found} irreducible words, expected {expected}")]
    DimensionMismatch { found: usize, expected: usize },
    #[error("completion exceeded the budget with {rules} rules")]
    CompletionBudgetExceeded { rules: usize },
    #[error("r + s = {n} exceeds the quantized size cap {cap}")]
    SizeLimitExceeded { n: usize, cap: usize },
    #[error("generator {0} does not exist in this algebra")]
    NoSuchGenerator(String),
    #[error("elements belong to different systems")]
    Mismatch,
    #[error("recursive and closed-form L_{k} differ")]
    ClosedFormMismatch { k: usize },
    #[error("coefficient of {entry} has a pole at q = 1")]
    PoleAtQ1 { entry: String },
    #[error("classical limit differs from the walled Brauer algebra at {what}")]
    LimitMismatch { what: String },
    #[error("this operation needs the generic-q mode, got {0}")]
    WrongMode(String),
}

#[cfg(test)]
mod tests;
