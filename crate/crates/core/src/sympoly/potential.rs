//! The Landau-Ginzburg potential of `G(r,k)` and the polynomials derived from it.
//!
//! Throughout, `Xi = c_i(S*)` is the `i`-th elementary symmetric function of
//! the Chern roots `q1..qr`, so `c_t(S*) = 1 + X1 t + ... + Xr t^r`.

use num_bigint::BigInt;
use num_rational::BigRational;
use num_traits::One;

use super::MultiPoly;
use crate::error::{Error, Result};
use crate::numerics::int;

pub(crate) fn check_grassmannian(r: u32, k: u32) -> Result<()> {
    if r < 1 || r >= k {
        return Err(Error::InvalidGrassmannian { r, k });
    }
    Ok(())
}

/// Power sums `p1..pn` of the Chern roots written in `X1..Xr`.
#[derive(Clone, Debug, PartialEq)]
pub struct PowerSumTable {
    r: usize,
    sums: Vec<MultiPoly>,
}

impl PowerSumTable {
    /// Builds `p1..pn` from Newton's identities
    /// `p_j = X1 p_{j-1} - X2 p_{j-2} + ... + (-1)^{j-1} j X_j`, with `X_i = 0` for `i > r`.
    pub fn new(r: usize, n: usize) -> Self {
        let mut sums: Vec<MultiPoly> = Vec::with_capacity(n);
        for j in 1..=n {
            let mut p = MultiPoly::zero(r);
            for i in 1..j.min(r + 1) {
                let term = &MultiPoly::var(r, i - 1) * &sums[j - i - 1];
                p = if i % 2 == 1 { &p + &term } else { &p - &term };
            }
            if j <= r {
                let term = MultiPoly::var(r, j - 1).scale(&int(j as i64));
                p = if j % 2 == 1 { &p + &term } else { &p - &term };
            }
            sums.push(p);
        }
        Self { r, sums }
    }

    /// `p_j`, one-based.
    pub fn get(&self, j: usize) -> &MultiPoly {
        &self.sums[j - 1]
    }

    pub fn len(&self) -> usize {
        self.sums.len()
    }

    pub fn is_empty(&self) -> bool {
        self.sums.is_empty()
    }

    /// Left side of `p_j - X1 p_{j-1} + X2 p_{j-2} - ... + (-1)^j j X_j`, which must vanish.
    pub fn newton_residual(&self, j: usize) -> MultiPoly {
        let r = self.r;
        let mut acc = self.get(j).clone();
        for i in 1..j.min(r + 1) {
            let term = &MultiPoly::var(r, i - 1) * self.get(j - i);
            acc = if i % 2 == 1 { &acc - &term } else { &acc + &term };
        }
        if j <= r {
            let term = MultiPoly::var(r, j - 1).scale(&int(j as i64));
            acc = if j % 2 == 1 { &acc - &term } else { &acc + &term };
        }
        acc
    }
}

/// `W = p_{k+1} / (k+1)`, the sum of `q_i^{k+1}/(k+1)` over the Chern roots.
pub fn lg_potential(r: u32, k: u32) -> Result<MultiPoly> {
    check_grassmannian(r, k)?;
    let table = PowerSumTable::new(r as usize, k as usize + 1);
    Ok(table.get(k as usize + 1).scale(&BigRational::new(BigInt::one(), BigInt::from(k + 1))))
}

/// Coefficients `W_0..W_order` of `-log(1 + X1 t + ... + Xr t^r)`.
///
/// Computed from the series `-log(1 + u) = sum_j (-1)^j u^j / j` with
/// `u = X1 t + ... + Xr t^r`, truncated at `t^order`.
pub fn neg_log_coefficients(r: usize, order: usize) -> Vec<MultiPoly> {
    let mut u = vec![MultiPoly::zero(r); order + 1];
    for (i, slot) in u.iter_mut().enumerate().skip(1).take(r) {
        *slot = MultiPoly::var(r, i - 1);
    }
    let mut out = vec![MultiPoly::zero(r); order + 1];
    let mut power = u.clone();
    for j in 1..=order {
        let c = BigRational::new(BigInt::from(if j % 2 == 0 { 1 } else { -1 }), BigInt::from(j));
        for (o, p) in out.iter_mut().zip(&power) {
            if !p.is_zero() {
                *o = &*o + &p.scale(&c);
            }
        }
        power = truncated_product(&power, &u, order);
    }
    out
}

fn truncated_product(a: &[MultiPoly], b: &[MultiPoly], order: usize) -> Vec<MultiPoly> {
    let nvars = a[0].nvars();
    let mut out = vec![MultiPoly::zero(nvars); order + 1];
    for (i, ai) in a.iter().enumerate().filter(|(_, p)| !p.is_zero()) {
        for (j, bj) in b.iter().enumerate().take(order + 1 - i).filter(|(_, p)| !p.is_zero()) {
            out[i + j] = &out[i + j] + &(ai * bj);
        }
    }
    out
}

/// `W_{k+1}`, the `t^{k+1}` coefficient of `-log c_t(S*)`.
pub fn log_coefficient(r: u32, k: u32) -> Result<MultiPoly> {
    check_grassmannian(r, k)?;
    Ok(neg_log_coefficients(r as usize, k as usize + 1).pop().expect("order >= 1"))
}

/// `W` rebuilt as `(-1)^{k+1} W_{k+1}` from the logarithm expansion.
pub fn lg_potential_via_log(r: u32, k: u32) -> Result<MultiPoly> {
    let w = log_coefficient(r, k)?;
    Ok(if k.is_multiple_of(2) { -&w } else { w })
}

/// `Y_1..Y_k`, the coefficients of `c_t(Q*) = 1 / c_t(S*)` truncated at `t^k`.
pub fn relation_polys(r: u32, k: u32) -> Result<Vec<MultiPoly>> {
    check_grassmannian(r, k)?;
    let r = r as usize;
    let mut y = vec![MultiPoly::one(r)];
    for j in 1..=k as usize {
        let mut acc = MultiPoly::zero(r);
        for i in 1..=j.min(r) {
            acc = &acc - &(&MultiPoly::var(r, i - 1) * &y[j - i]);
        }
        y.push(acc);
    }
    y.remove(0);
    Ok(y)
}

/// The ideal generators `Y_{k-r+1}..Y_k` of the cohomology relations.
pub fn ideal_generators(r: u32, k: u32) -> Result<Vec<MultiPoly>> {
    let y = relation_polys(r, k)?;
    Ok(y[(k - r) as usize..].to_vec())
}

pub fn hessian_matrix(w: &MultiPoly) -> Vec<Vec<MultiPoly>> {
    let n = w.nvars();
    let grad: Vec<MultiPoly> = (0..n).map(|i| w.derivative(i)).collect();
    (0..n).map(|i| (0..n).map(|j| grad[i].derivative(j)).collect()).collect()
}

/// Symbolic determinant by cofactor expansion along the first row.
pub fn determinant(m: &[Vec<MultiPoly>]) -> MultiPoly {
    let n = m.len();
    match n {
        0 => panic!("empty matrix"),
        1 => m[0][0].clone(),
        2 => &(&m[0][0] * &m[1][1]) - &(&m[0][1] * &m[1][0]),
        _ => {
            let nvars = m[0][0].nvars();
            let mut acc = MultiPoly::zero(nvars);
            for col in 0..n {
                if m[0][col].is_zero() {
                    continue;
                }
                let minor: Vec<Vec<MultiPoly>> = m[1..]
                    .iter()
                    .map(|row| row.iter().enumerate().filter(|&(j, _)| j != col).map(|(_, p)| p.clone()).collect())
                    .collect();
                let term = &m[0][col] * &determinant(&minor);
                acc = if col % 2 == 0 { &acc + &term } else { &acc - &term };
            }
            acc
        }
    }
}

/// `h = (-1)^{r(r-1)/2} det(d^2 W / dXi dXj)`.
pub fn hessian_class(r: u32, k: u32) -> Result<MultiPoly> {
    let w = lg_potential(r, k)?;
    let det = determinant(&hessian_matrix(&w));
    Ok(if (r * (r - 1) / 2) % 2 == 1 { -&det } else { det })
}

/// `W1 = W + (-1)^r X1`, whose critical points index the residue sum.
pub fn perturbed_potential(r: u32, k: u32) -> Result<MultiPoly> {
    let w = lg_potential(r, k)?;
    let x1 = MultiPoly::var(r as usize, 0);
    Ok(if r.is_multiple_of(2) { &w + &x1 } else { &w - &x1 })
}

/// Everything the residue formula needs about `G(r,k)`, built once.
#[derive(Clone, Debug)]
pub struct GrassmannianRing {
    pub r: u32,
    pub k: u32,
    pub potential: MultiPoly,
    pub relations: Vec<MultiPoly>,
    pub hessian: MultiPoly,
    /// Partials of `W1` with respect to `X1..Xr`.
    pub gradient: Vec<MultiPoly>,
}

impl GrassmannianRing {
    pub fn new(r: u32, k: u32) -> Result<Self> {
        let potential = lg_potential(r, k)?;
        let relations = relation_polys(r, k)?;
        let hessian = hessian_class(r, k)?;
        let w1 = perturbed_potential(r, k)?;
        let gradient = (0..r as usize).map(|i| w1.derivative(i)).collect();
        Ok(Self { r, k, potential, relations, hessian, gradient })
    }

    pub fn ideal_generators(&self) -> &[MultiPoly] {
        &self.relations[(self.k - self.r) as usize..]
    }
}

/// Whether `W_{k+1}` and `Y_{k+1-i}` satisfy `dW_{k+1}/dXi = sign * Y_{k+1-i}` for every `i`.
pub fn gradient_matches_relations(r: u32, k: u32, sign: i64) -> Result<bool> {
    let w = log_coefficient(r, k)?;
    let y = relation_polys(r, k)?;
    let s = int(sign);
    Ok((1..=r as usize).all(|i| w.derivative(i - 1) == y[k as usize - i].scale(&s)))
}
