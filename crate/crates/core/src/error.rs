use thiserror::Error;

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum Error {
    #[error("invalid input: {0}")]
    Input(String),
    #[error("arithmetic error: {0}")]
    Arithmetic(String),
    #[error("parse error: {0}")]
    Parse(String),
    /// A quasisymmetric combination that is not symmetric. The witness is a
    /// pair of compositions that rearrange each other but carry different
    /// coefficients.
    #[error("not symmetric: coefficient of {left:?} is {left_coeff}, of {right:?} is {right_coeff}")]
    NotSymmetric {
        left: Vec<usize>,
        right: Vec<usize>,
        left_coeff: String,
        right_coeff: String,
    },
    #[error("internal error: {0}")]
    Internal(String),
}

pub type Result<T> = std::result::Result<T, Error>;
