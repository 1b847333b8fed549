use crate::algebra::AlgebraKind;

/// Errors shared by every layer of the crate.
///
/// Geometric degeneracies (zero divisors, on-quadric points, null
/// directions) are ordinary values of the domain, not panics; they are
/// reported through this enum so callers can skip, resample or map them
/// to exit codes.
#[derive(Debug, Clone, PartialEq, Eq, thiserror::Error)]
pub enum Error {
    #[error("algebra kind mismatch: {0} vs {1}")]
    KindMismatch(AlgebraKind, AlgebraKind),
    #[error("zero divisor: element has non-invertible norm")]
    ZeroDivisor,
    #[error("Moebius denominator is not invertible")]
    NonInvertibleDenominator,
    #[error("matrix is not projectively a reversion")]
    NotAReversion,
    #[error("neither diagonal entry of the matrix is invertible")]
    NonInvertiblePivot,
    #[error("M*JM is not a real multiple of J")]
    NotPseudoUnitary,
    #[error("quadric branch {kind}/{sigma:+} has no real points")]
    InvalidBranch { kind: AlgebraKind, sigma: i64 },
    #[error("point does not lie on the quadric")]
    OffQuadric,
    #[error("null direction: the line meets the quadric at most once")]
    NullDirection,
    #[error("point coincides with the inversion center")]
    CenterPole,
    #[error("points are not collinear")]
    NotCollinear,
    #[error("reversion point lies on the quadric (degenerate constant map)")]
    DegeneratePoint,
    #[error("formula pole: denominator 1 \u{00b1} ab vanishes")]
    PoleAtFormulaSingularity,
    #[error("parameter outside the exact parameterization domain")]
    ParamSingular,
    #[error("empty reversion chain")]
    EmptyChain,
    #[error("reversion chain must have an even number of points")]
    OddChain,
    #[error("invalid input: {0}")]
    InvalidInput(String),
}

impl Error {
    /// Stable machine-readable tag, used in JSON error reports and
    /// skipped-sample records.
    pub fn name(&self) -> &'static str {
        match self {
            Error::KindMismatch(..) => "KindMismatch",
            Error::ZeroDivisor => "ZeroDivisor",
            Error::NonInvertibleDenominator => "NonInvertibleDenominator",
            Error::NotAReversion => "NotAReversion",
            Error::NonInvertiblePivot => "NonInvertiblePivot",
            Error::NotPseudoUnitary => "NotPseudoUnitary",
            Error::InvalidBranch { .. } => "InvalidBranch",
            Error::OffQuadric => "OffQuadric",
            Error::NullDirection => "NullDirection",
            Error::CenterPole => "CenterPole",
            Error::NotCollinear => "NotCollinear",
            Error::DegeneratePoint => "DegeneratePoint",
            Error::PoleAtFormulaSingularity => "PoleAtFormulaSingularity",
            Error::ParamSingular => "ParamSingular",
            Error::EmptyChain => "EmptyChain",
            Error::OddChain => "OddChain",
            Error::InvalidInput(_) => "InvalidInput",
        }
    }
}

pub type Result<T> = std::result::Result<T, Error>;
