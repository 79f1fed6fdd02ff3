use thiserror::Error;

/// Errors raised by the exact and numeric layers.
///
/// Variants fall into two groups: domain errors, which describe an input the
/// mathematics rejects (a parabola is not a Hausdorff curve, a point collides
/// with the divisor, ...), and internal errors that indicate a bug.
#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum Error {
    #[error("zero polynomial")]
    ZeroPolynomial,
    #[error("division by zero")]
    DivisionByZero,
    #[error("degree {degree} exceeds the supported factorization limit of {limit}")]
    DegreeOutOfScope { degree: usize, limit: usize },
    #[error("modulus is not a monic irreducible polynomial: {0}")]
    InvalidModulus(String),
    #[error("unknown variable `{0}`")]
    UnknownVariable(String),
    #[error("polynomial is not homogeneous")]
    NotHomogeneous,
    #[error("curve contains the line at infinity")]
    CurveContainsLineAtInfinity,
    #[error("variable `{0}` does not occur")]
    VariableAbsent(String),
    #[error("polynomial is not squarefree")]
    NotSquarefree,
    #[error("invalid divisor: {0}")]
    InvalidDivisor(String),
    #[error("divisor is not rational-Hausdorff: {0}")]
    NotRationalHausdorff(String),
    #[error("curve is not a Hausdorff curve: {0}")]
    NotHausdorffCurve(String),
    #[error("singular point is invalid: {0}")]
    InvalidSingularPoint(String),
    #[error("linear system is empty")]
    EmptySystem,
    #[error("direction collides with a divisor point")]
    DirectionCollidesWithDivisor,
    #[error("system is not monomial: {0}")]
    SystemNotMonomial(String),
    #[error("Bezout bookkeeping mismatch: {0}")]
    BezoutMismatch(String),
    #[error("residual intersection is not linear: {0}")]
    ResidualNotLinear(String),
    #[error("parametrization failed verification")]
    VerificationFailed,
    #[error("no real intersections with the sweep lines")]
    NoRealIntersections,
    #[error("system became reducible: {0}")]
    SystemBecameReducible(String),
    #[error("too many interpolation points: {points} for a system of dimension {dim}")]
    TooManyInterpolationPoints { points: usize, dim: i64 },
    #[error("empty sample set")]
    EmptySampleSet,
    #[error("parse error at line {line}, column {column}: {message}")]
    Parse {
        line: usize,
        column: usize,
        message: String,
    },
    #[error("invalid input: {0}")]
    InvalidInput(String),
    #[error("internal error: {0}")]
    Internal(String),
}

impl Error {
    /// Machine-readable tag used in CLI error reports.
    pub fn kind(&self) -> &'static str {
        match self {
            Error::ZeroPolynomial => "ZeroPolynomial",
            Error::DivisionByZero => "DivisionByZero",
            Error::DegreeOutOfScope { .. } => "DegreeOutOfScope",
            Error::InvalidModulus(_) => "InvalidModulus",
            Error::UnknownVariable(_) => "UnknownVariable",
            Error::NotHomogeneous => "NotHomogeneous",
            Error::CurveContainsLineAtInfinity => "CurveContainsLineAtInfinity",
            Error::VariableAbsent(_) => "VariableAbsent",
            Error::NotSquarefree => "NotSquarefree",
            Error::InvalidDivisor(_) => "InvalidDivisor",
            Error::NotRationalHausdorff(_) => "NotRationalHausdorff",
            Error::NotHausdorffCurve(_) => "NotHausdorffCurve",
            Error::InvalidSingularPoint(_) => "InvalidSingularPoint",
            Error::EmptySystem => "EmptySystem",
            Error::DirectionCollidesWithDivisor => "DirectionCollidesWithDivisor",
            Error::SystemNotMonomial(_) => "SystemNotMonomial",
            Error::BezoutMismatch(_) => "BezoutMismatch",
            Error::ResidualNotLinear(_) => "ResidualNotLinear",
            Error::VerificationFailed => "VerificationFailed",
            Error::NoRealIntersections => "NoRealIntersections",
            Error::SystemBecameReducible(_) => "SystemBecameReducible",
            Error::TooManyInterpolationPoints { .. } => "TooManyInterpolationPoints",
            Error::EmptySampleSet => "EmptySampleSet",
            Error::Parse { .. } => "ParseError",
            Error::InvalidInput(_) => "InvalidInput",
            Error::Internal(_) => "Internal",
        }
    }

    /// Internal errors indicate a bug rather than a rejected input.
    pub fn is_internal(&self) -> bool {
        matches!(self, Error::Internal(_) | Error::VerificationFailed)
    }
}

pub type Result<T, E = Error> = std::result::Result<T, E>;
