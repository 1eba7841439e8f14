//! Crate-wide error type.

use thiserror::Error;

#[derive(Debug, Error)]
pub enum Error {
    #[error("parse error: {0}")]
    Parse(String),
    #[error("bracket symmetry violation at index pair ({i}, {j})")]
    SymmetryViolation { i: usize, j: usize },
    #[error("distinguished unit element is zero")]
    ZeroUnit,
    #[error("dimension mismatch: {0}")]
    DimensionMismatch(String),
    #[error("matrix is singular")]
    Singular,
    #[error("matrix is not Hermitian")]
    NotHermitian,
    #[error("zero polynomial has no root set")]
    ZeroPolynomial,
    #[error("map is not quadratic: sq(2e_{0}) != 4 sq(e_{0})")]
    NotQuadratic(usize),
    #[error("unit is not a two-sided identity (witness basis index {0})")]
    UnitNotIdentity(usize),
    #[error("star structure inconsistent: {0}")]
    StarInconsistent(String),
    #[error("factor classification invariants differ: {0}")]
    IncompatibleInvariants(String),
    #[error("axiom failure in {stage}: {detail}")]
    AxiomFailure { stage: String, detail: String },
    #[error("algebra is not classified into a case that admits an associative hull")]
    NotClassified,
    #[error("|mu| = {0} is not a rational square; exact hull constants are unrepresentable")]
    IrrationalHbar(String),
    #[error("algebra is not semisimple (radical dimension {0})")]
    NotSemisimple(usize),
    #[error("operation requires complex scalars")]
    RealFieldUnsupported,
    #[error("splitting retries exhausted; seed trail {0:?}")]
    MaxRetriesExceeded(Vec<u64>),
    #[error("simple summand of dimension {0} is not a split matrix algebra")]
    NotSplit(usize),
    #[error("no conjugator H solves the star intertwining system")]
    NoConjugator,
    #[error("dimension {0} exceeds the desk-scale bound {1} for this operation")]
    TooLarge(usize, usize),
    #[error("|t| = {0} is too large to be perturbative (needs |t| < {1})")]
    NotPerturbative(String, String),
    #[error("report schema mismatch: expected {expected}, found {found}")]
    SchemaMismatch { expected: u32, found: u32 },
    #[error("io error: {0}")]
    Io(#[from] std::io::Error),
    #[error("json error: {0}")]
    Json(#[from] serde_json::Error),
}

pub type Result<T> = std::result::Result<T, Error>;
