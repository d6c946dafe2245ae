use thiserror::Error;

#[derive(Debug, Error)]
pub enum Error {
    #[error("constant term of the series is not a unit")]
    NonUnitConstantTerm,

    #[error("series in {var} has negative power {exp}")]
    NegativeSeriesPower { var: &'static str, exp: i32 },

    #[error("index out of range: {0}")]
    Index(String),

    #[error("operator image is not skew-symmetric under U -> U^-1 (n = {n})")]
    NotSkewSymmetric { n: usize },

    #[error("operator output is not a Laurent polynomial: {0}")]
    NonPolynomialResult(String),

    #[error("integrality violated: {0}")]
    IntegralityViolation(String),

    #[error("three-term recurrence degenerates at n = {n}")]
    DegenerateRecurrence { n: usize },

    #[error("unsupported exponent: {0}")]
    UnsupportedExponent(String),

    #[error("knot {knot}: Habiro polynomial H_{needed} is not available (have {available})")]
    MissingHabiro {
        knot: String,
        needed: usize,
        available: usize,
    },

    #[error("route {route} unavailable: {reason}")]
    RouteUnavailable { route: &'static str, reason: String },

    #[error("unknown knot {0:?}")]
    UnknownKnot(String),

    #[error("invalid knot record: {0}")]
    KnotRecord(String),

    #[error("check {id} failed: {detail}")]
    CheckFailed { id: String, detail: String },

    #[error("{0}")]
    Validation(String),

    #[error(transparent)]
    Io(#[from] std::io::Error),

    #[error(transparent)]
    Json(#[from] serde_json::Error),
}

impl Error {
    /// Errors that indicate a broken invariant of the implementation rather
    /// than bad input.
    pub fn is_internal(&self) -> bool {
        matches!(
            self,
            Error::NotSkewSymmetric { .. }
                | Error::NonPolynomialResult(_)
                | Error::IntegralityViolation(_)
                | Error::CheckFailed { .. }
        )
    }
}

pub type Result<T> = std::result::Result<T, Error>;
