//! Self-checks exposed through `gwgr verify`.

use std::fmt;

use clap::ValueEnum;
use num_bigint::BigInt;
use serde::Serialize;

use crate::charclass::{diagonal_blowup_correction, flip_blowup_correction, identity_517, theta_integral};
use crate::critical::{enumerate_critical_points, validate_critical_points};
use crate::invariants::{invariant, InvariantQuery};
use crate::numerics::{binomial, int, PRECISION_BUDGET_KD};
use crate::sympoly::{gradient_matches_relations, lg_potential, lg_potential_via_log, relation_polys};

#[derive(Debug, Clone, Copy, PartialEq, Eq, ValueEnum, Serialize)]
#[serde(rename_all = "lowercase")]
pub enum Suite {
    Sympoly,
    Critical,
    Pipelines,
    Charclass,
    All,
}

impl Suite {
    fn name(self) -> &'static str {
        match self {
            Suite::Sympoly => "sympoly",
            Suite::Critical => "critical",
            Suite::Pipelines => "pipelines",
            Suite::Charclass => "charclass",
            Suite::All => "all",
        }
    }
}

impl fmt::Display for Suite {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.name())
    }
}

/// Optional caps on the grid; each suite clamps them to its own default range.
#[derive(Debug, Clone, Copy, Default)]
pub struct Bounds {
    pub max_k: Option<u32>,
    pub max_d: Option<u32>,
}

#[derive(Debug, Clone, PartialEq, Serialize)]
pub struct Check {
    pub suite: Suite,
    pub name: String,
    pub pass: bool,
    pub detail: String,
    /// A command that reruns just this check.
    pub repro: String,
}

impl Check {
    fn new(suite: Suite, name: String, pass: bool, detail: String, repro: String) -> Self {
        Self { suite, name, pass, detail, repro }
    }
}

pub fn run(suite: Suite, bounds: Bounds, tol: f64) -> Vec<Check> {
    match suite {
        Suite::Sympoly => sympoly(bounds),
        Suite::Critical => critical(bounds, tol),
        Suite::Pipelines => pipelines(bounds),
        Suite::Charclass => charclass(bounds),
        Suite::All => [Suite::Sympoly, Suite::Critical, Suite::Pipelines, Suite::Charclass]
            .into_iter()
            .flat_map(|s| run(s, bounds, tol))
            .collect(),
    }
}

fn cap(requested: Option<u32>, default: u32) -> u32 {
    requested.map_or(default, |v| v.min(default))
}

fn sympoly(bounds: Bounds) -> Vec<Check> {
    let max_k = cap(bounds.max_k, 8);
    let mut out = Vec::new();
    for k in 2..=max_k {
        for r in 1..k {
            let repro = format!("gwgr ring --r {r} --k {k}");
            let name = format!("G({r},{k})");
            let grad = gradient_matches_relations(r, k, -1);
            out.push(Check::new(
                Suite::Sympoly,
                format!("{name} dW_(k+1)/dXi = -Y_(k+1-i)"),
                grad == Ok(true),
                format!("{grad:?}"),
                repro.clone(),
            ));
            let (a, b) = (lg_potential(r, k), lg_potential_via_log(r, k));
            out.push(Check::new(
                Suite::Sympoly,
                format!("{name} W from power sums = W from log expansion"),
                a.is_ok() && a == b,
                match (&a, &b) {
                    (Ok(a), Ok(b)) if a == b => format!("W = {a}"),
                    _ => format!("{a:?} vs {b:?}"),
                },
                repro.clone(),
            ));
            let graded = relation_polys(r, k).map(|ys| {
                ys.iter().enumerate().all(|(i, y)| y.is_zero() || y.homogeneous_degree() == Some(i as u32 + 1))
            });
            out.push(Check::new(
                Suite::Sympoly,
                format!("{name} Y_i homogeneous of degree i"),
                graded == Ok(true),
                format!("{graded:?}"),
                repro,
            ));
        }
    }
    out
}

fn critical(bounds: Bounds, tol: f64) -> Vec<Check> {
    let max_k = cap(bounds.max_k, 10);
    let mut out = Vec::new();
    for k in 2..=max_k {
        for r in 1..k.min(4) {
            let repro = format!("gwgr critical --r {r} --k {k}");
            let expected = binomial(k as u64, r as i64);
            let (count, exact) = match enumerate_critical_points(r, k) {
                Ok(points) => {
                    let exact = points.iter().all(|p| p.is_exact_critical(k as u64));
                    (BigInt::from(points.len()), exact)
                }
                Err(_) => (BigInt::from(0), false),
            };
            out.push(Check::new(
                Suite::Critical,
                format!("G({r},{k}) C(k,r) exact critical points"),
                count == expected && exact,
                format!("{count} points, exact roots: {exact}"),
                repro.clone(),
            ));
            let report = validate_critical_points(r, k, tol);
            out.push(Check::new(
                Suite::Critical,
                format!("G({r},{k}) gradient vanishes, h nonzero"),
                report.is_ok(),
                match report {
                    Ok(rep) => format!(
                        "max residual {:.3e}, min |h| {:.3e}",
                        rep.max_gradient_residual, rep.min_hessian_abs
                    ),
                    Err(e) => e.to_string(),
                },
                repro,
            ));
        }
    }
    out
}

fn invariant_repro(q: &InvariantQuery) -> String {
    let s: Vec<String> = q.s.iter().map(|e| e.to_string()).collect();
    format!("gwgr invariant --genus {} --degree {} --r {} --k {} --exponents {}", q.g, q.d, q.r, q.k, s.join(","))
}

fn pipelines(bounds: Bounds) -> Vec<Check> {
    let max_k = cap(bounds.max_k, 5);
    let max_d = cap(bounds.max_d, 5);
    let mut out = Vec::new();
    for k in 3..=max_k {
        for d in 1..=max_d {
            if (k * d) as u64 > PRECISION_BUDGET_KD {
                continue;
            }
            for n in 0..=k * d / 2 {
                let q = InvariantQuery::rank_two(1, d, k, n).expect("valid split");
                let res = invariant(&q, None, 1e-6);
                let detail = match &res {
                    Ok(rs) => {
                        let parts: Vec<String> = rs.iter().map(|r| format!("{}={}", r.pipeline, r.value)).collect();
                        parts.join(" ")
                    }
                    Err(e) => e.to_string(),
                };
                out.push(Check::new(
                    Suite::Pipelines,
                    format!("g=1 G(2,{k}) d={d} n={n} pipelines agree"),
                    res.is_ok_and(|rs| rs.len() == 4),
                    detail,
                    invariant_repro(&q),
                ));
            }
        }
    }
    for g in 0..=3 {
        for k in 2..=cap(bounds.max_k, 6) {
            for d in 1..=max_d.min(4) {
                let Ok(q) = InvariantQuery::projective(g, d, k) else { continue };
                if q.kd() > PRECISION_BUDGET_KD {
                    continue;
                }
                let res = invariant(&q, None, 1e-9);
                let expected = BigInt::from(k).pow(g);
                out.push(Check::new(
                    Suite::Pipelines,
                    format!("g={g} P^{} d={d} equals k^g", k - 1),
                    res.as_ref().is_ok_and(|rs| rs.iter().all(|r| r.value == expected)),
                    match res {
                        Ok(rs) => format!("{} (expected {expected})", rs[0].value),
                        Err(e) => e.to_string(),
                    },
                    invariant_repro(&q),
                ));
            }
        }
    }
    out
}

fn charclass(bounds: Bounds) -> Vec<Check> {
    let max_k = cap(bounds.max_k, 5);
    let max_d = cap(bounds.max_d, 6);
    let repro = |k: u32, d: u32| format!("gwgr verify --suite charclass --max-k {k} --max-d {d}");
    let mut out = Vec::new();
    for g in 0..=4 {
        for k in 2..=max_k {
            let v = theta_integral(g, k, g + 1);
            out.push(Check::new(
                Suite::Charclass,
                format!("theta integral g={g} k={k} equals k^g"),
                v == int(BigInt::from(k).pow(g)),
                format!("{v}"),
                repro(k, max_d),
            ));
        }
    }
    for d in (2..=max_d).step_by(2) {
        for k in 2..=max_k {
            if k * d > 30 {
                continue;
            }
            for n in 0..=k * d / 2 {
                let m = k * d - 2 * n;
                let expected = -int(BigInt::from(k) << m);
                let got = diagonal_blowup_correction(d, k, n);
                let identity = identity_517(d, k, n);
                out.push(Check::new(
                    Suite::Charclass,
                    format!("diagonal correction d={d} k={k} n={n} equals -k 2^m"),
                    got.as_ref() == Ok(&expected) && identity == Ok(true),
                    format!("{got:?}, identity {identity:?}"),
                    repro(k, d),
                ));
            }
        }
    }
    for d in 1..=max_d.min(5) {
        for k in (3..=max_k.min(4)).filter(|&k| k * d <= 48) {
            for l in d / 2 + 1..=d {
                for n in 0..=k * d / 2 {
                    let m = (k * d - 2 * n) as u64;
                    let c = binomial(m, (k * l) as i64 - n as i64) * BigInt::from(k * k);
                    let expected = int(if d % 2 == 0 { c } else { -c });
                    let got = flip_blowup_correction(d, k, n, l);
                    out.push(Check::new(
                        Suite::Charclass,
                        format!("wall correction d={d} k={k} l={l} n={n}"),
                        got.as_ref() == Ok(&expected),
                        format!("{got:?}, expected {expected}"),
                        repro(k, d),
                    ));
                }
            }
        }
    }
    out
}

/// Counts of passing and failing checks.
pub fn summarize(checks: &[Check]) -> (usize, usize) {
    let pass = checks.iter().filter(|c| c.pass).count();
    (pass, checks.len() - pass)
}
