//! Critical points of `W1 = W + (-1)^r X1`.
//!
//! In Chern-root coordinates `dW1/dq_i = q_i^k + (-1)^r`, so every root solves
//! `q^k = (-1)^{r-1}`. A critical point is an unordered set of `r` distinct
//! solutions; distinctness keeps the map from roots to `X = e(q)` locally
//! invertible, and taking subsets rather than tuples removes the `r!`
//! overcount from permuting the roots.

use std::fmt;

use itertools::Itertools;
use serde::Serialize;

use crate::error::{Error, Result};
use crate::numerics::{roots_of_sign, CompensatedSum, GuardedComplex, UnityAngle};
use crate::sympoly::{check_grassmannian, GrassmannianRing};

#[derive(Debug, Clone, PartialEq)]
pub struct CriticalPoint {
    /// Distinct Chern roots in increasing angle.
    pub q: Vec<UnityAngle>,
    /// `Z_i = e_i(q)`.
    pub z: Vec<GuardedComplex>,
}

impl CriticalPoint {
    pub fn from_roots(q: Vec<UnityAngle>) -> Self {
        let z = (1..=q.len()).map(|i| elementary(&q, i)).collect();
        Self { q, z }
    }

    /// Exact check that every root satisfies `q^k = (-1)^{r-1}` and that the roots are distinct.
    pub fn is_exact_critical(&self, k: u64) -> bool {
        let sign = UnityAngle::sign(self.q.len() as u64 - 1);
        self.q.iter().all(|a| a.pow(k) == sign) && self.q.iter().all_unique()
    }

    pub fn angles(&self) -> Vec<String> {
        self.q.iter().map(|a| a.to_string()).collect()
    }
}

impl fmt::Display for CriticalPoint {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "q = [{}]", self.angles().join(", "))
    }
}

/// `e_i(q)`; each product of roots is formed exactly as an angle before conversion.
fn elementary(q: &[UnityAngle], i: usize) -> GuardedComplex {
    q.iter()
        .combinations(i)
        .map(|c| c.into_iter().fold(UnityAngle::one(), |acc, &a| acc * a).to_complex())
        .collect::<CompensatedSum>()
        .total()
}

/// All `C(k, r)` critical points, in lexicographic order of root indices.
pub fn enumerate_critical_points(r: u32, k: u32) -> Result<Vec<CriticalPoint>> {
    check_grassmannian(r, k)?;
    let roots = roots_of_sign(k as u64, r as u64);
    Ok(roots
        .into_iter()
        .combinations(r as usize)
        .map(CriticalPoint::from_roots)
        .collect())
}

/// `h` at a critical point computed from the roots alone:
/// `(-1)^{r(r-1)/2} k^r prod q_i^{k-1} / prod_{i<j} (q_i - q_j)^2`.
///
/// At a critical point of `W1` the Hessian in root coordinates is
/// `diag(k q_i^{k-1})`, and the Jacobian of `q -> e(q)` is a Vandermonde matrix.
pub fn hessian_from_roots(q: &[UnityAngle], k: u32) -> GuardedComplex {
    let r = q.len();
    let top = q.iter().fold(UnityAngle::one(), |acc, a| acc * a.pow(k as u64 - 1));
    let mut num = top.to_complex().scale((k as f64).powi(r as i32));
    if (r * (r - 1) / 2) % 2 == 1 {
        num = -num;
    }
    let mut den = GuardedComplex::ONE;
    for (a, b) in q.iter().tuple_combinations() {
        let diff = a.to_complex() - b.to_complex();
        den = den * diff * diff;
    }
    num * den.recip()
}

#[derive(Debug, Clone, PartialEq, Serialize)]
pub struct ValidationReport {
    pub points: usize,
    /// Largest computed `|dW1/dXi(Z)|` over points and partials.
    pub max_gradient_residual: f64,
    /// Largest a priori rounding bound on those evaluations.
    pub max_gradient_bound: f64,
    /// Smallest `|h(Z)|` over points.
    pub min_hessian_abs: f64,
}

/// Evaluates the symbolic gradient of `W1` and the Hessian class at every enumerated point.
pub fn validate_critical_points(r: u32, k: u32, tol: f64) -> Result<ValidationReport> {
    let ring = GrassmannianRing::new(r, k)?;
    let points = enumerate_critical_points(r, k)?;
    let mut report = ValidationReport {
        points: points.len(),
        max_gradient_residual: 0.0,
        max_gradient_bound: 0.0,
        min_hessian_abs: f64::INFINITY,
    };
    let mut worst_gradient: Option<&CriticalPoint> = None;
    let mut worst_hessian: Option<&CriticalPoint> = None;
    for p in &points {
        for g in &ring.gradient {
            let v = g.eval(&p.z);
            report.max_gradient_bound = report.max_gradient_bound.max(v.err);
            let residual = v.abs();
            if residual > report.max_gradient_residual {
                report.max_gradient_residual = residual;
                worst_gradient = Some(p);
            }
        }
        let h = ring.hessian.eval(&p.z).abs();
        if h < report.min_hessian_abs {
            report.min_hessian_abs = h;
            worst_hessian = Some(p);
        }
    }
    if report.max_gradient_residual > tol {
        return Err(Error::ValidationFailure {
            point: worst_gradient.map(|p| p.to_string()).unwrap_or_default(),
            what: "gradient residual",
            value: report.max_gradient_residual,
            tol,
        });
    }
    if report.min_hessian_abs <= tol {
        return Err(Error::ValidationFailure {
            point: worst_hessian.map(|p| p.to_string()).unwrap_or_default(),
            what: "|h(Z)|",
            value: report.min_hessian_abs,
            tol,
        });
    }
    Ok(report)
}
