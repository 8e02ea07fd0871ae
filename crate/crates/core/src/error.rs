//! Crate-wide error type. Halt reasons of the reduced ODE are not errors
//! (partial trajectories are first-class results) and live in `curves`.

use core::fmt;

#[derive(Debug, Clone, PartialEq)]
pub enum Error {
    /// Point violates the coordinate chart constraints (e.g. z <= 0 in a
    /// half-space model).
    PointOutsideChart,
    /// A vector required to be metrically unit is not, within tolerance.
    NonUnitVector { norm: f64 },
    /// Consecutive curve samples coincide; arclength is not defined.
    DegenerateCurve { index: usize },
    /// Curve reconstruction left the chart domain (half-plane boundary).
    ChartExit { s: f64 },
    /// A positive curvature profile was required but k <= floor was found.
    NonpositiveCurvature { s: f64, k: f64 },
    /// k dropped below the floor where the alpha^2/k^3 term is singular.
    CurvatureUnderflow { k: f64 },
    /// Least-squares multiplier fit has no information (H or k vanishes).
    IndeterminateMultiplier,
    /// Surface grid tangents are linearly dependent at a grid node.
    RankDeficient { it: usize, is: usize },
    /// Operation requires a constant-curvature ambient space.
    NotSpaceForm,
    /// Catalog kind and source-curve geometry do not match.
    UnsupportedPair,
    /// Grid must have at least 5 samples and positive spacing.
    InvalidGrid,
    /// Mismatched buffer lengths or coordinate dimensions.
    DimensionMismatch,
}

impl fmt::Display for Error {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            Error::PointOutsideChart => write!(f, "point outside chart domain"),
            Error::NonUnitVector { norm } => {
                write!(f, "expected unit vector, metric norm {norm}")
            }
            Error::DegenerateCurve { index } => {
                write!(f, "degenerate curve: duplicate samples at index {index}")
            }
            Error::ChartExit { s } => write!(f, "curve left chart domain near s = {s}"),
            Error::NonpositiveCurvature { s, k } => {
                write!(f, "nonpositive curvature k = {k} at s = {s}")
            }
            Error::CurvatureUnderflow { k } => write!(f, "curvature underflow: k = {k}"),
            Error::IndeterminateMultiplier => {
                write!(f, "indeterminate multiplier: residual insensitive to lambda")
            }
            Error::RankDeficient { it, is } => {
                write!(f, "rank-deficient surface tangents at grid node ({it}, {is})")
            }
            Error::NotSpaceForm => write!(f, "ambient space is not a space form"),
            Error::UnsupportedPair => write!(f, "catalog kind does not accept this curve geometry"),
            Error::InvalidGrid => write!(f, "grid needs n >= 5 and s_max > s_min"),
            Error::DimensionMismatch => write!(f, "dimension mismatch"),
        }
    }
}

#[cfg(feature = "std")]
impl std::error::Error for Error {}

pub type Result<T> = core::result::Result<T, Error>;
