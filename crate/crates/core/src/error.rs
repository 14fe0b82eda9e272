use thiserror::Error;

use crate::algebra::{Multivector, Signature};
use crate::ideal::GeneratorReport;

/// Errors raised by the algebraic engine.
#[derive(Debug, Clone, PartialEq, Error)]
pub enum AlgebraError {
    #[error("invalid signature ({p},{q}): need 1 <= p+q <= {max}", max = Signature::MAX_DIM)]
    InvalidSignature { p: usize, q: usize },

    #[error("generator index {index} out of range for dimension {dim}")]
    IndexOutOfRange { index: usize, dim: usize },

    #[error("signature mismatch: {left} vs {right}")]
    SignatureMismatch { left: Signature, right: Signature },

    #[error("dimension mismatch: {left} vs {right}")]
    DimensionMismatch { left: usize, right: usize },

    #[error("expected dimension {expected}, found {found}")]
    WrongDimension { expected: usize, found: usize },

    #[error("expected a homogeneous form of grade {expected}")]
    WrongGrade { expected: usize },

    #[error("input is zero")]
    ZeroInput,

    #[error("scalar part is zero; cannot normalize")]
    ZeroScalarPart,

    #[error("invalid generator set: {0}")]
    InvalidGenerators(GeneratorReport),

    #[error("candidate blades span {rank} of {dimension} ideal dimensions")]
    CandidatesInsufficient { rank: usize, dimension: usize },

    #[error("Radon-Hurwitz argument {0} outside the supported range i >= -12")]
    RadonHurwitzRange(i64),

    #[error("degenerate structure: {0}")]
    Degenerate(String),

    #[error("result is not idempotent: {0}")]
    NotIdempotent(Box<Multivector>),

    #[error("idempotent is not primitive: ideal dimension {found}, minimal {minimal}")]
    NotPrimitive { found: usize, minimal: usize },

    #[error("4-form is not self-dual")]
    NotSelfDual,
}

pub type Result<T, E = AlgebraError> = std::result::Result<T, E>;
