//! The two blow-up rings used by the rank-two flip recursion.

use std::sync::Arc;

use num_rational::BigRational;

use super::ring::{GradedRing, GradedRingSpec};
use super::series::{blowup_correction, RingSeries};
use crate::error::{Error, Result};
use crate::numerics::{int, rational};

fn check_n(d: u32, k: u32, n: u32) -> Result<u32> {
    let kd = k * d;
    if 2 * n > kd {
        return Err(Error::IndexOutOfRange { n: n as u64, max: kd as u64 / 2 });
    }
    Ok(kd - 2 * n)
}

/// `Q[w, e] / (e^2, w^{kd/2})`, top degree `kd/2`, `w^{kd/2-1} e -> 2/d`.
pub fn diagonal_ring(d: u32, k: u32) -> Result<Arc<GradedRing>> {
    if d == 0 || d % 2 == 1 {
        return Err(Error::InvalidArgument(format!("d = {d} must be even and positive")));
    }
    let top = k * d / 2;
    GradedRingSpec::new(&[("w", 1), ("e", 1)])
        .nilpotent("e", 2)
        .nilpotent("w", top)
        .top_degree(top)
        .evaluate(&[("w", top - 1), ("e", 1)], rational(2, d as i64))
        .build()
}

/// Correction at the diagonal chamber for even `d`; equals `-k 2^m`.
pub fn diagonal_blowup_correction(d: u32, k: u32, n: u32) -> Result<BigRational> {
    let m = check_n(d, k, n)?;
    let ring = diagonal_ring(d, k)?;
    let top = (k * d / 2) as i64;
    let (w, e) = (ring.gen("w"), ring.gen("e"));
    let x = &w + &e;
    let order = (top - n as i64).max(0) as usize;
    let s_normal = RingSeries::one_plus_power(&w, -top, order);
    blowup_correction(m, n, top, &s_normal, &x.scale(&int(2)), &x.pow(2), &x)
}

/// `Q[w, y, e] / (e^2, w^{2l-d}, y^{B+1} = (B+1) e y^B)` with `B = k(d-l)`,
/// top degree `B + 2l - d`, `w^{2l-d-1} e y^B -> k/l`.
pub fn flip_ring(d: u32, k: u32, l: u32) -> Result<Arc<GradedRing>> {
    if 2 * l <= d || l > d {
        return Err(Error::InvalidArgument(format!("l = {l} outside {}..={d}", d / 2 + 1)));
    }
    let b = k * (d - l);
    let w_nil = 2 * l - d;
    GradedRingSpec::new(&[("w", 1), ("y", 1), ("e", 1)])
        .nilpotent("e", 2)
        .nilpotent("w", w_nil)
        .rewrite(&[("y", b + 1)], int(b + 1), &[("e", 1), ("y", b)])
        .top_degree(b + w_nil)
        .evaluate(&[("w", w_nil - 1), ("e", 1), ("y", b)], rational(k as i64, l as i64))
        .build()
}

/// Correction across the wall at `l`; equals `(-1)^d k^2 C(kd-2n, kl-n)`.
pub fn flip_blowup_correction(d: u32, k: u32, n: u32, l: u32) -> Result<BigRational> {
    let m = check_n(d, k, n)?;
    let ring = flip_ring(d, k, l)?;
    let top = (k * (d - l) + 2 * l - d) as i64;
    let (w, y, e) = (ring.gen("w"), ring.gen("y"), ring.gen("e"));
    let order = (top - n as i64).max(0) as usize;
    let exponent = 2 * l as i64 - d as i64 - k as i64 * l as i64;
    let s_normal = RingSeries::one_plus_power(&-&w, exponent, order);
    let c1e = &y - &w;
    let c2e = &(&y - &e) * &(&e - &w);
    let c1l = &y - &e;
    blowup_correction(m, n, top, &s_normal, &c1e, &c2e, &c1l)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::numerics::binomial;
    use num_bigint::BigInt;

    #[test]
    fn diagonal_examples() {
        assert_eq!(diagonal_blowup_correction(2, 3, 0).unwrap(), int(-192));
        assert_eq!(diagonal_blowup_correction(4, 3, 6).unwrap(), int(-3));
        assert!(diagonal_blowup_correction(3, 3, 0).is_err());
    }

    #[test]
    fn flip_examples() {
        // d = 3, k = 3, l = 2, n = 1: -9 C(7, 5)
        assert_eq!(flip_blowup_correction(3, 3, 1, 2).unwrap(), int(-9 * 21));
        // d = 5, k = 4, l = 3, n = 2: -16 C(16, 10)
        let expected = BigInt::from(-16) * binomial(16, 10);
        assert_eq!(flip_blowup_correction(5, 4, 2, 3).unwrap(), BigRational::from_integer(expected));
        assert_eq!(flip_blowup_correction(2, 4, 0, 2).unwrap(), int(16));
        assert!(flip_blowup_correction(2, 4, 0, 1).is_err());
        assert!(flip_blowup_correction(4, 3, 0, 2).is_err());
    }
}
