use super::{check_budget, InvariantQuery, Pipeline, PipelineResult};
use crate::critical::enumerate_critical_points;
use crate::error::{Error, Result};
use crate::numerics::{round_with_residual, CompensatedSum, GuardedComplex};
use crate::sympoly::GrassmannianRing;

/// `sum over dW1(Z) = 0 of h(Z)^{g-1} Z1^s1 ... Zr^sr`, rounded to an integer.
///
/// Terms are accumulated in critical-point order, so the result is
/// bit-reproducible. For `g = 0` the Hessian class enters inverted.
pub fn vafa_intriligator(query: &InvariantQuery, tol: f64) -> Result<PipelineResult> {
    check_budget(query.kd())?;
    let ring = GrassmannianRing::new(query.r, query.k)?;
    let points = enumerate_critical_points(query.r, query.k)?;
    let mut sum = CompensatedSum::new();
    for p in &points {
        let h = ring.hessian.eval(&p.z);
        let weight = match query.g {
            0 => {
                if h.abs() <= tol.max(h.err) {
                    return Err(Error::ValidationFailure {
                        point: p.to_string(),
                        what: "|h(Z)|",
                        value: h.abs(),
                        tol,
                    });
                }
                h.recip()
            }
            g => h.powu(g as u64 - 1),
        };
        let monomial = p
            .z
            .iter()
            .zip(&query.s)
            .fold(GuardedComplex::ONE, |acc, (&z, &e)| acc * z.powu(e as u64));
        sum.add(weight * monomial);
    }
    let (value, residual) = round_with_residual(sum.total(), tol)?;
    Ok(PipelineResult { pipeline: Pipeline::Vi, value, residual, exact: false })
}
