use thiserror::Error;

use crate::invariants::Pipeline;

pub type Result<T, E = Error> = std::result::Result<T, E>;

#[derive(Debug, Clone, PartialEq, Error)]
pub enum Error {
    #[error("invalid Grassmannian G({r},{k}): need 1 <= r < k")]
    InvalidGrassmannian { r: u32, k: u32 },

    #[error("dimension mismatch: sum of i*s_i is {got}, moduli dimension is {expected}")]
    DimensionMismatch { expected: i64, got: i64 },

    #[error("exponent vector has {got} entries, expected {expected}")]
    ExponentLength { expected: usize, got: usize },

    #[error("n = {n} out of range 0..={max}")]
    IndexOutOfRange { n: u64, max: u64 },

    #[error("result {re} + {im}i is not an integer (residual {residual:e}, tolerance {tol:e}, error bound {err:e})")]
    NonIntegerResult {
        re: f64,
        im: f64,
        residual: f64,
        tol: f64,
        err: f64,
    },

    #[error("kd = {kd} exceeds the floating-point budget kd <= {budget}; use an exact pipeline")]
    PrecisionBudgetExceeded { kd: u64, budget: u64 },

    #[error("critical point validation failed at {point}: {what} = {value:e} (tolerance {tol:e})")]
    ValidationFailure {
        point: String,
        what: &'static str,
        value: f64,
        tol: f64,
    },

    #[error("pipeline {pipeline} not applicable: {reason}")]
    PipelineNotApplicable { pipeline: Pipeline, reason: String },

    #[error("pipelines disagree: {first} = {first_value}, {second} = {second_value}")]
    CrossCheckMismatch {
        first: Pipeline,
        first_value: String,
        second: Pipeline,
        second_value: String,
    },

    #[error("series constant term is not 1")]
    NonUnitConstantTerm,

    #[error("series truncated at order {have}, coefficient {needed} requested")]
    TruncationTooLow { needed: usize, have: usize },

    #[error("invalid argument: {0}")]
    InvalidArgument(String),

    #[error("invalid ring specification: {0}")]
    RingSpec(String),
}
