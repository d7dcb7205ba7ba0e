//! Gromov invariants `<X1^s1 ... Xr^sr>` of maps from a genus-`g` curve to `G(r,k)`.
//!
//! Several independent routes compute the same numbers:
//!
//! - [`vafa_intriligator`]: the residue sum over critical points of `W1`, any `g` and `r`.
//! - [`brute_force_r2`]: a direct double loop over pairs of `k`-th roots of unity (`r = 2`).
//! - [`closed_form_r2_g1`]: the exact closed form for elliptic curves (`g = 1`, `r = 2`).
//! - [`flip_pipeline_r2_g1`]: initial pairing plus wall-crossing corrections (`g = 1`, `r = 2`).
//! - [`projective_invariant`]: the `r = 1` value `k^g` from Segre classes.
//!
//! [`invariant`] runs any applicable subset and treats disagreement as an error.

mod projective;
mod query;
mod rank_two;
mod residue;

use std::fmt;
use std::str::FromStr;

use num_bigint::BigInt;
use serde::{Deserialize, Serialize};

pub use projective::projective_invariant;
pub use query::InvariantQuery;
pub use rank_two::{brute_force_r2, brute_force_r2_genus, closed_form_r2_g1, flip_pipeline_r2_g1};
pub use residue::vafa_intriligator;

use crate::error::{Error, Result};
use crate::numerics::PRECISION_BUDGET_KD;

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize, Deserialize)]
#[serde(rename_all = "lowercase")]
pub enum Pipeline {
    Vi,
    Oracle,
    Closed,
    Flip,
    Projective,
}

impl Pipeline {
    pub const ALL: [Pipeline; 5] =
        [Pipeline::Vi, Pipeline::Oracle, Pipeline::Closed, Pipeline::Flip, Pipeline::Projective];

    pub fn name(self) -> &'static str {
        match self {
            Pipeline::Vi => "vi",
            Pipeline::Oracle => "oracle",
            Pipeline::Closed => "closed",
            Pipeline::Flip => "flip",
            Pipeline::Projective => "projective",
        }
    }

    pub fn is_floating(self) -> bool {
        matches!(self, Pipeline::Vi | Pipeline::Oracle)
    }

    pub fn describe(self) -> &'static str {
        match self {
            Pipeline::Vi => "residue sum of h^(g-1) Z^s over critical points of W1",
            Pipeline::Oracle => "direct sum over ordered pairs of distinct k-th roots of unity",
            Pipeline::Closed => "exact binomial closed form for elliptic curves",
            Pipeline::Flip => "initial pairing plus wall-crossing corrections",
            Pipeline::Projective => "top Segre class on the Jacobian, k^g",
        }
    }

    /// `Ok(())` if the pipeline can evaluate `query` at all (precision budget aside).
    pub fn check_applicable(self, query: &InvariantQuery) -> Result<()> {
        let reason = match self {
            Pipeline::Vi => None,
            Pipeline::Oracle if query.r != 2 => Some("requires r = 2"),
            Pipeline::Closed | Pipeline::Flip if query.r != 2 || query.g != 1 => {
                Some("requires r = 2 and g = 1")
            }
            Pipeline::Projective if query.r != 1 => Some("requires r = 1"),
            _ => None,
        };
        match reason {
            Some(reason) => Err(Error::PipelineNotApplicable { pipeline: self, reason: reason.into() }),
            None => Ok(()),
        }
    }
}

impl fmt::Display for Pipeline {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.name())
    }
}

impl FromStr for Pipeline {
    type Err = String;
    fn from_str(s: &str) -> std::result::Result<Self, String> {
        Pipeline::ALL
            .into_iter()
            .find(|p| p.name() == s)
            .ok_or_else(|| format!("unknown pipeline '{s}'"))
    }
}

#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
pub struct PipelineResult {
    pub pipeline: Pipeline,
    #[serde(with = "decimal")]
    pub value: BigInt,
    pub residual: f64,
    pub exact: bool,
}

impl PipelineResult {
    pub(crate) fn exact(pipeline: Pipeline, value: BigInt) -> Self {
        Self { pipeline, value, residual: 0.0, exact: true }
    }
}

/// Big integers travel as decimal strings.
pub mod decimal {
    use num_bigint::BigInt;
    use serde::{de::Error, Deserialize, Deserializer, Serializer};

    pub fn serialize<S: Serializer>(v: &BigInt, s: S) -> Result<S::Ok, S::Error> {
        s.serialize_str(&v.to_string())
    }

    pub fn deserialize<'de, D: Deserializer<'de>>(d: D) -> Result<BigInt, D::Error> {
        let s = String::deserialize(d)?;
        s.parse().map_err(D::Error::custom)
    }
}

pub(crate) fn check_budget(kd: u64) -> Result<()> {
    if kd > PRECISION_BUDGET_KD {
        return Err(Error::PrecisionBudgetExceeded { kd, budget: PRECISION_BUDGET_KD });
    }
    Ok(())
}

/// The pipelines [`invariant`] runs when none are requested explicitly.
pub fn default_pipelines(query: &InvariantQuery) -> Vec<Pipeline> {
    Pipeline::ALL
        .into_iter()
        .filter(|p| p.check_applicable(query).is_ok())
        .filter(|p| !p.is_floating() || query.kd() <= PRECISION_BUDGET_KD)
        .collect()
}

pub fn run_pipeline(p: Pipeline, query: &InvariantQuery, tol: f64) -> Result<PipelineResult> {
    p.check_applicable(query)?;
    match p {
        Pipeline::Vi => vafa_intriligator(query, tol),
        Pipeline::Oracle => {
            brute_force_r2_genus(query.g, query.d, query.k, query.s[1] as u64, tol)
        }
        Pipeline::Closed => closed_form_r2_g1(query.d, query.k, query.s[1] as u64),
        Pipeline::Flip => flip_pipeline_r2_g1(query.d, query.k, query.s[1] as u64),
        Pipeline::Projective => projective_invariant(query.g, query.d, query.k),
    }
}

/// Runs `pipelines` (or every applicable one when `None`) and cross-checks the values.
pub fn invariant(
    query: &InvariantQuery,
    pipelines: Option<&[Pipeline]>,
    tol: f64,
) -> Result<Vec<PipelineResult>> {
    let selected = match pipelines {
        Some(list) => {
            for p in list {
                p.check_applicable(query)?;
            }
            list.to_vec()
        }
        None => default_pipelines(query),
    };
    let results = selected
        .iter()
        .map(|&p| run_pipeline(p, query, tol))
        .collect::<Result<Vec<_>>>()?;
    if let Some(first) = results.first() {
        if let Some(bad) = results.iter().find(|r| r.value != first.value) {
            return Err(Error::CrossCheckMismatch {
                first: first.pipeline,
                first_value: first.value.to_string(),
                second: bad.pipeline,
                second_value: bad.value.to_string(),
            });
        }
    }
    Ok(results)
}
