use thiserror::Error;

use crate::rootsys::RootSystemKind;

pub type Result<T, E = Error> = std::result::Result<T, E>;

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum Error {
    #[error("invalid root system parameter: {0}")]
    InvalidParameter(String),

    #[error("cannot parse root system kind {0:?} (expected C<n>, A<2n-1>, SL<2n> or E6)")]
    ParseKind(String),

    #[error("{kind} expects {expected} coordinates, got {found}")]
    WrongLength {
        kind: RootSystemKind,
        expected: usize,
        found: usize,
    },

    #[error("weight belongs to {found}, expected {expected}")]
    SystemMismatch {
        expected: RootSystemKind,
        found: RootSystemKind,
    },

    #[error("simple root index {index} out of range 1..={rank}")]
    IndexOutOfRange { index: usize, rank: usize },

    #[error("weight {0} is not dominant")]
    NotDominant(String),

    #[error("the zero weight dominates none of the fundamental weights")]
    ZeroWeight,

    #[error("{basis} coordinates are not defined for {kind}")]
    UndefinedBasis {
        basis: &'static str,
        kind: RootSystemKind,
    },

    #[error("resource cap exceeded: {what} needs at least {needed}, cap is {cap}")]
    ResourceCap {
        what: &'static str,
        needed: u64,
        cap: u64,
    },

    #[error("search budget of {budget} visited nodes exhausted before completion")]
    BudgetExhausted { budget: u64 },

    #[error("operation requires an effective character, found coefficient {0}")]
    NegativeCoefficient(String),

    #[error("non-integral result: {0}")]
    NonIntegral(String),

    #[error("certification failed: {0}")]
    Certification(String),
}

impl Error {
    /// True for the errors that come from a configured resource cap or
    /// search budget rather than from malformed input.
    pub fn is_resource_limit(&self) -> bool {
        matches!(self, Error::ResourceCap { .. } | Error::BudgetExhausted { .. })
    }
}
