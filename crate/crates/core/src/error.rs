use thiserror::Error;

use crate::geometry::Method;
use crate::rational::Rational;

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum CoverError {
    /// The requested construction only covers up to `threshold`.
    #[error("{method} covers only d <= {threshold}, got d = {d}")]
    ///
    /// The rationals are boxed to keep `Result<_, CoverError>` small.
    ThresholdExceeded {
        method: Method,
        threshold: Box<Rational>,
        d: Box<Rational>,
    },
    #[error("invalid parameter: {0}")]
    InvalidParameter(String),
    #[error("affine map is not invertible")]
    NonInvertible,
}
