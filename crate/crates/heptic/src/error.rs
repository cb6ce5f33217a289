//! Error types.

use thiserror::Error;

#[derive(Error, Debug)]
pub enum AlgebraError {
    #[error("dimension mismatch: expected {expected}, got {got}")]
    DimensionMismatch { expected: usize, got: usize },
    #[error("unknown variable `{0}`")]
    UnknownVariable(String),
    #[error("zero polynomial has no content normalization")]
    ZeroPolynomial,
    #[error("division left a nonzero remainder")]
    InexactDivision,
    #[error("singular linear system")]
    SingularSystem,
    #[error("inconsistent overdetermined system")]
    InconsistentSystem,
    #[error("parse error: {0}")]
    Parse(String),
}

#[derive(Error, Debug)]
pub enum GroupError {
    #[error("group closure exceeded the safety bound of {0} elements")]
    ClosureBound(usize),
    #[error("conic image of a generator is not one of the C_k")]
    ConicActionBroken,
    #[error("labeling error: {0}")]
    Labeling(String),
    #[error("incidence verification failure: {0}")]
    Incidence(String),
    #[error("no candidate transition satisfies the acceptance checks")]
    TransitionRejected,
    #[error(transparent)]
    Algebra(#[from] AlgebraError),
}

#[derive(Error, Debug)]
pub enum DeriveError {
    #[error("derived {name} does not match its transcribed display")]
    GoldenMismatch { name: &'static str },
    #[error("decomposition over the invariant basis failed: {0}")]
    Decomposition(String),
    #[error("defining identity for {name} failed")]
    IdentityFailed { name: &'static str },
    #[error("solution space has dimension {got}, expected {expected}")]
    WrongKernelDimension { expected: usize, got: usize },
    #[error("{0}")]
    Other(String),
    #[error(transparent)]
    Algebra(#[from] AlgebraError),
    #[error(transparent)]
    Group(#[from] GroupError),
}

#[derive(Error, Debug)]
pub enum TableError {
    #[error("schema version mismatch: file has {got}, expected {expected}")]
    SchemaVersion { expected: u32, got: u32 },
    #[error("derivation fingerprint mismatch (stale table)")]
    Fingerprint,
    #[error("malformed table: {0}")]
    Malformed(String),
    #[error(transparent)]
    Io(#[from] std::io::Error),
    #[error(transparent)]
    Algebra(#[from] AlgebraError),
}

#[derive(Error, Debug)]
pub enum SolveError {
    #[error("K parameters must be finite")]
    NonFiniteParameter,
    #[error("degenerate parameter: tau_K(K) vanishes (excluded orbit locus)")]
    DegenerateParameter,
    #[error("no convergent trajectory after {restarts} restarts")]
    Exhausted { restarts: usize, trace: Vec<[num_complex::Complex64; 3]> },
    #[error("F(y) vanishes: point lies on an excluded orbit")]
    ExcludedOrbit,
}
