use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};
use crate::sympoly::check_grassmannian;

/// A request for `<X1^s1 ... Xr^sr>` on maps of degree `d` from a genus-`g` curve to `G(r,k)`.
#[derive(Debug, Clone, PartialEq, Eq, Hash, Serialize, Deserialize)]
pub struct InvariantQuery {
    pub g: u32,
    pub d: u32,
    pub r: u32,
    pub k: u32,
    pub s: Vec<u32>,
}

impl InvariantQuery {
    pub fn new(g: u32, d: u32, r: u32, k: u32, s: Vec<u32>) -> Result<Self> {
        check_grassmannian(r, k)?;
        if s.len() != r as usize {
            return Err(Error::ExponentLength { expected: r as usize, got: s.len() });
        }
        let expected = Self::moduli_dimension(g, d, r, k);
        let got: i64 = s.iter().enumerate().map(|(i, &e)| (i as i64 + 1) * e as i64).sum();
        if got != expected {
            return Err(Error::DimensionMismatch { expected, got });
        }
        Ok(Self { g, d, r, k, s })
    }

    /// `<X1^m X2^n>` on `G(2,k)` with `m` fixed by the dimension constraint.
    pub fn rank_two(g: u32, d: u32, k: u32, n: u32) -> Result<Self> {
        let dim = Self::moduli_dimension(g, d, 2, k);
        let m = dim - 2 * n as i64;
        if m < 0 {
            return Err(Error::DimensionMismatch { expected: dim, got: 2 * n as i64 });
        }
        Self::new(g, d, 2, k, vec![m as u32, n])
    }

    /// `<X^m>` on `P^{k-1}` with `m = kd - (k-1)(g-1)`.
    pub fn projective(g: u32, d: u32, k: u32) -> Result<Self> {
        let m = Self::moduli_dimension(g, d, 1, k);
        if m < 0 {
            return Err(Error::DimensionMismatch { expected: m, got: 0 });
        }
        Self::new(g, d, 1, k, vec![m as u32])
    }

    /// Expected dimension `kd - r(k-r)(g-1)`.
    pub fn moduli_dimension(g: u32, d: u32, r: u32, k: u32) -> i64 {
        let (g, d, r, k) = (g as i64, d as i64, r as i64, k as i64);
        k * d - r * (k - r) * (g - 1)
    }

    pub fn kd(&self) -> u64 {
        self.k as u64 * self.d as u64
    }

    /// Whether the degree is too small for the geometric interpretation, so the
    /// number is only the value of the formula.
    ///
    /// For `r = 1` the projective-bundle description needs `d > 2g - 2`. For
    /// `r >= 2` the range `d/2 < tau < d - (2g - 2)` of stability parameters
    /// must be nonempty, i.e. `d > 4g - 4`.
    pub fn is_formal(&self) -> bool {
        let (g, d) = (self.g as i64, self.d as i64);
        if self.r == 1 {
            d <= 2 * g - 2
        } else {
            d <= 4 * g - 4
        }
    }
}
