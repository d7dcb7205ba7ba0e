//! Routes specific to `G(2,k)`, where the invariants are `I(d,k;n) = <X1^{kd-2n} X2^n>`.

use num_bigint::BigInt;
use num_integer::Integer;
use num_rational::BigRational;
use num_traits::{One, ToPrimitive};

use super::{check_budget, InvariantQuery, Pipeline, PipelineResult};
use crate::error::{Error, Result};
use crate::numerics::{binomial, int, round_with_residual, CompensatedSum, GuardedComplex, UnityAngle};

fn check_n(d: u32, k: u32, n: u64) -> Result<u64> {
    let kd = k as u64 * d as u64;
    if n > kd / 2 {
        return Err(Error::IndexOutOfRange { n, max: kd / 2 });
    }
    Ok(kd - 2 * n)
}

/// `2^e` for a possibly negative exponent.
fn pow2(e: i64) -> BigRational {
    let p = BigInt::one() << e.unsigned_abs();
    if e >= 0 {
        BigRational::from_integer(p)
    } else {
        BigRational::new(BigInt::one(), p)
    }
}

fn to_integer(pipeline: Pipeline, q: BigRational) -> Result<PipelineResult> {
    if !q.is_integer() {
        let re = q.to_f64().unwrap_or(f64::NAN);
        return Err(Error::NonIntegerResult { re, im: 0.0, residual: (re - re.round()).abs(), tol: 0.0, err: 0.0 });
    }
    Ok(PipelineResult::exact(pipeline, q.to_integer()))
}

/// The ordered-pair root-of-unity sum for `g = 1`:
/// `(-1)^d / 2 * sum over xi1 != xi2 of (xi1 + xi2)^{kd-2n} (xi1 xi2)^n`.
pub fn brute_force_r2(d: u32, k: u32, n: u64, tol: f64) -> Result<PipelineResult> {
    check_n(d, k, n)?;
    brute_force_r2_genus(1, d, k, n, tol)
}

/// The ordered-pair sum at any genus, with the Hessian class written in the roots:
/// `h = -k^2 (xi1 xi2)^{k-1} / (xi1 - xi2)^2` after the common scaling
/// `q = alpha xi`, `alpha^k = -1`, which contributes the overall `(-1)^d`.
pub fn brute_force_r2_genus(g: u32, d: u32, k: u32, n: u64, tol: f64) -> Result<PipelineResult> {
    let dim = InvariantQuery::moduli_dimension(g, d, 2, k);
    if dim < 0 || 2 * n as i64 > dim {
        return Err(Error::IndexOutOfRange { n, max: dim.max(0) as u64 / 2 });
    }
    check_budget(k as u64 * d as u64)?;
    let m = dim as u64 - 2 * n;
    let k2 = (k as f64) * (k as f64);
    let mut sum = CompensatedSum::new();
    for j1 in 0..k {
        for j2 in (0..k).filter(|&j| j != j1) {
            let x1 = UnityAngle::new(j1 as i64, k as u64);
            let x2 = UnityAngle::new(j2 as i64, k as u64);
            let prod = x1 * x2;
            let (c1, c2) = (x1.to_complex(), x2.to_complex());
            let diff = c1 - c2;
            let weight = match g {
                0 => (diff * diff * prod.pow(k as u64 - 1).inv().to_complex()).scale(-1.0 / k2),
                1 => GuardedComplex::ONE,
                _ => {
                    let e = (g - 1) as u64;
                    let scale = (-k2).powi(e as i32);
                    (prod.pow((k as u64 - 1) * e).to_complex() * (diff * diff).powu(e).recip()).scale(scale)
                }
            };
            sum.add(weight * (c1 + c2).powu(m) * prod.pow(n).to_complex());
        }
    }
    let half = if d.is_multiple_of(2) { 0.5 } else { -0.5 };
    let (value, residual) = round_with_residual(sum.total().scale(half), tol)?;
    Ok(PipelineResult { pipeline: Pipeline::Oracle, value, residual, exact: false })
}

/// `(-1)^{d+1} k 2^{m-1} - (-1)^{d+1} (k^2/2) sum_{n/k <= p <= d - n/k} C(m, kp - n)`, `m = kd - 2n`.
pub fn closed_form_r2_g1(d: u32, k: u32, n: u64) -> Result<PipelineResult> {
    let m = check_n(d, k, n)?;
    let (k, d) = (k as u64, d as u64);
    let sign = if d % 2 == 1 { int(1) } else { int(-1) };
    let p_lo = n.div_ceil(k);
    let p_hi = (k * d - n) / k;
    let sum: BigInt = (p_lo..=p_hi).map(|p| binomial(m, (k * p) as i64 - n as i64)).sum();
    let value = &sign * int(k) * pow2(m as i64 - 1)
        - &sign * BigRational::new(BigInt::from(k * k), BigInt::from(2)) * BigRational::from_integer(sum);
    to_integer(Pipeline::Closed, value)
}

/// Pairing at the first chamber: `k 2^{m-1}` for odd `d`,
/// `(k^2/2) C(m, m/2) - k 2^{m-1}` for even `d`.
pub fn flip_initial_term(d: u32, k: u32, n: u64) -> Result<BigRational> {
    let m = check_n(d, k, n)?;
    let k = k as u64;
    let base = int(k) * pow2(m as i64 - 1);
    Ok(if d % 2 == 1 {
        base
    } else {
        BigRational::new(BigInt::from(k * k), BigInt::from(2)) * BigRational::from_integer(binomial(m, (m / 2) as i64))
            - base
    })
}

/// Change of the pairing across the wall at `l`: `(-1)^d k^2 C(m, kl - n)`, zero out of range.
pub fn flip_correction(d: u32, k: u32, n: u64, l: u32) -> Result<BigInt> {
    let m = check_n(d, k, n)?;
    let c = binomial(m, (k as i64) * (l as i64) - n as i64) * BigInt::from(k as u64 * k as u64);
    Ok(if d.is_odd() { -c } else { c })
}

/// Initial pairing plus the corrections for `l = floor(d/2) + 1 ..= d`.
pub fn flip_pipeline_r2_g1(d: u32, k: u32, n: u64) -> Result<PipelineResult> {
    let mut total = flip_initial_term(d, k, n)?;
    for l in d / 2 + 1..=d {
        total += BigRational::from_integer(flip_correction(d, k, n, l)?);
    }
    to_integer(Pipeline::Flip, total)
}
