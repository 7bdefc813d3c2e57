use thiserror::Error;

#[derive(Debug, Error, Clone, PartialEq, Eq)]
pub enum Error {
    #[error("linear system has no solution")]
    NoSolution,
    #[error("ideal is not admissible: paths of length {0} survive")]
    NotAdmissible(usize),
    #[error("invalid algebra spec: {0}")]
    Spec(String),
    #[error("field F_{p} too small: need p > {needed}")]
    FieldTooSmall { p: u32, needed: usize },
    #[error("random splitting budget of {0} attempts exhausted")]
    RandomBudgetExhausted(usize),
    #[error("projective resolution did not terminate within depth {0}")]
    ResolutionDepthExceeded(usize),
    #[error("complex has terms outside the window [{lo}, {hi}]")]
    WindowViolation { lo: i64, hi: i64 },
    #[error("nonzero homology in degree {0} outside the window")]
    HomologyOutsideWindow(i64),
    #[error("summands are not presilting")]
    NotPresilting,
    #[error("mutation leaves the window")]
    OutOfWindow,
    #[error("clique pool needs a hereditary algebra (no relations)")]
    PoolConstructionUnsupported,
    #[error("search budget exceeded: {0}")]
    BudgetExceeded(String),
    #[error("isomorphism test undecided")]
    UndecidedIso,
    #[error("checkers disagree: {0}")]
    CheckerDisagreement(String),
    #[error("parse error: {0}")]
    Parse(String),
}

pub type Result<T> = std::result::Result<T, Error>;
