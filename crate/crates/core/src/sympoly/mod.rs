//! Exact polynomial algebra in the Chern classes `X1..Xr` of `S*` on `G(r,k)`.

mod poly;
mod potential;

pub use poly::MultiPoly;
pub use potential::{
    determinant, gradient_matches_relations, hessian_class, hessian_matrix, ideal_generators,
    lg_potential, lg_potential_via_log, log_coefficient, neg_log_coefficients, perturbed_potential,
    relation_polys, GrassmannianRing, PowerSumTable,
};
pub(crate) use potential::check_grassmannian;

use crate::numerics::GuardedComplex;

pub fn poly_eval(p: &MultiPoly, z: &[GuardedComplex]) -> GuardedComplex {
    p.eval(z)
}
