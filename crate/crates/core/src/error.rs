use thiserror::Error;

pub type Result<T, E = Error> = std::result::Result<T, E>;

#[derive(Debug, Error)]
pub enum Error {
    #[error("dimension mismatch: {0}")]
    DimensionMismatch(String),

    #[error("invalid algebra label {0}")]
    InvalidLabel(String),

    #[error("vector is not a root of {0}")]
    NotARoot(String),

    #[error("no valid a2 subsystem in {0}")]
    NoMagicStar(String),

    #[error("magic star classification failed: {0}")]
    Classification(String),

    #[error("clifford construction failed: {0}")]
    Construction(String),

    #[error("no charge conjugation matrix with transpose sign {sign} for signature ({p},{q})")]
    NoConjugation { p: usize, q: usize, sign: i8 },

    #[error("chirality undefined: {0}")]
    Chirality(String),

    #[error("invalid level or variant: {0}")]
    Variant(String),

    #[error("calibration failed: {0}")]
    Calibration(String),

    #[error("precondition violated: {0}")]
    Precondition(String),

    #[error("parse error: {0}")]
    Parse(String),

    #[error("monomial matrix invariant broken: {0}")]
    Monomial(String),

    #[error(transparent)]
    Io(#[from] std::io::Error),
}
