use thiserror::Error;

/// Errors raised by the algebra routines.
///
/// Variants ending in `Mismatch`/`Violation` indicate an internal
/// inconsistency (a theorem the code relies on did not hold) rather than bad
/// input.
#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum Error {
    #[error("generator list is empty")]
    Empty,
    #[error("generators must be positive, got {0}")]
    NonPositive(i64),
    #[error("generators must have gcd 1, got gcd {0}")]
    Gcd(u64),
    #[error("{a1} and {a2} are not coprime")]
    Coprimality { a1: u64, a2: u64 },
    #[error("invalid argument: {0}")]
    InvalidArgument(String),
    #[error("exponent {0} is not in the semigroup")]
    NotInSemigroup(i64),
    #[error("operands live over different fields")]
    MixedField,
    #[error("operands live in different semigroup rings")]
    MixedSemigroup,
    #[error("series is not a unit with constant term 1")]
    NotAUnit,
    #[error("element is zero")]
    ZeroElement,
    #[error("element has valuation 0 and generates the unit ideal")]
    NotParameter,
    #[error("truncation {have} is too small, need at least {need}")]
    TruncationTooSmall { have: usize, need: usize },
    #[error("integrality still holds at {at}, contradicting the bound {bound}")]
    BoundViolation { at: u32, bound: u32 },
    #[error("semigroup is not symmetric (ring is not Gorenstein)")]
    NotGorenstein,
    #[error("ideal is integrally closed")]
    ClosedIdeal,
    #[error("generator valuation {b} does not exceed the Frobenius number {frobenius}")]
    NotInConductor { b: usize, frobenius: i64 },
    #[error("valuation {b} differs from the multiplicity {a1}; ideal is not a reduction of m")]
    NotAReduction { b: usize, a1: usize },
    #[error("semigroup has {0} generators, expected 2")]
    NotTwoGenerated(usize),
    #[error("operation needs at least two generators (ring is regular)")]
    RegularRing,
    #[error("cross-check failed: {0}")]
    CrossCheckMismatch(String),
    #[error("search space has {count} ideals, above the cap {cap}")]
    SearchSpaceTooLarge { count: u128, cap: u128 },
    #[error("invalid field: {0}")]
    InvalidField(String),
    #[error("parse error: {0}")]
    Parse(String),
}

pub type Result<T> = std::result::Result<T, Error>;
