use num_traits::ToPrimitive;

use super::{Pipeline, PipelineResult};
use crate::charclass::theta_integral;
use crate::error::{Error, Result};

/// `<X^m>` for maps to `P^{k-1}`, computed as the top Segre class of
/// `V = (rho_* U)^{+k}` on the Jacobian; always `k^g`.
pub fn projective_invariant(g: u32, d: u32, k: u32) -> Result<PipelineResult> {
    if k < 2 {
        return Err(Error::InvalidGrassmannian { r: 1, k });
    }
    let q = theta_integral(g, k, d);
    if !q.is_integer() {
        let re = q.to_f64().unwrap_or(f64::NAN);
        return Err(Error::NonIntegerResult { re, im: 0.0, residual: (re - re.round()).abs(), tol: 0.0, err: 0.0 });
    }
    Ok(PipelineResult::exact(Pipeline::Projective, q.to_integer()))
}
