use thiserror::Error;

#[derive(Debug, Clone, Error, PartialEq, Eq)]
pub enum Error {
    #[error("prime {prime} is too small for dimension {dim} (need p > dim)")]
    PrimeTooSmall { prime: u32, dim: usize },
    #[error("{0} is not a prime")]
    NotPrime(u32),
    #[error("structure constants are not associative: (b{0} b{1}) b{2} != b{0} (b{1} b{2})")]
    NotAssociative(usize, usize, usize),
    #[error("the given unit is not a two-sided identity")]
    NoUnit,
    #[error("bad relation: {0}")]
    BadRelation(String),
    #[error("quotient path algebra is not finite-dimensional within path length cap {0}")]
    InfiniteDimensional(usize),
    #[error("randomized splitting failed after {0} trials")]
    RandomnessExhausted(usize),
    #[error("modules live over different algebras")]
    AlgebraMismatch,
    #[error("algebra is not certified Gorenstein within bound {0}")]
    NotCertifiedGorenstein(usize),
    #[error("atlas member exceeds dimension cap {0}")]
    DimCapExceeded(usize),
    #[error("proper presentation check failed: {0}")]
    ProperityFailed(String),
    #[error("sequence is not exact")]
    NotExact,
    #[error("complex term is not Gorenstein-projective")]
    NotGproj,
    #[error("unsupported shape for derived Hom: {0}")]
    UnsupportedShape(String),
    #[error("complex is zero")]
    EmptyComplex,
    #[error("cocone did not reduce to a two-term complex: {0}")]
    ConeNotTwoTerm(String),
    #[error("unknown check id {0}")]
    UnknownCheck(String),
    #[error("fixture error: {0}")]
    FixtureError(String),
    #[error("parse error: {0}")]
    ParseError(String),
    #[error("invalid input: {0}")]
    Invalid(String),
}

pub type Result<T, E = Error> = std::result::Result<T, E>;
