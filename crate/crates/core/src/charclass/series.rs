use std::sync::Arc;

use num_rational::BigRational;
use num_traits::{One, Zero};

use super::ring::{GradedRing, GradedRingSpec, RingElement};
use crate::error::{Error, Result};
use crate::numerics::{generalized_binomial, int};

/// A power series in `t` over a [`GradedRing`], truncated after `t^order`.
#[derive(Clone, Debug)]
pub struct RingSeries {
    ring: Arc<GradedRing>,
    coeffs: Vec<RingElement>,
}

impl RingSeries {
    /// Missing coefficients are zero; extra ones beyond `order` are dropped.
    pub fn new(ring: &Arc<GradedRing>, mut coeffs: Vec<RingElement>, order: usize) -> Self {
        coeffs.resize_with(order + 1, || ring.zero());
        coeffs.truncate(order + 1);
        Self { ring: Arc::clone(ring), coeffs }
    }

    pub fn one(ring: &Arc<GradedRing>, order: usize) -> Self {
        Self::new(ring, vec![ring.one()], order)
    }

    pub fn zero(ring: &Arc<GradedRing>, order: usize) -> Self {
        Self::new(ring, Vec::new(), order)
    }

    /// `(a + b t)^n` for `n >= 0`.
    pub fn binomial_linear(a: &RingElement, b: &RingElement, n: u32, order: usize) -> Self {
        let ring = a.ring();
        let coeffs = (0..=order.min(n as usize))
            .map(|j| {
                let c = BigRational::from_integer(crate::numerics::binomial(n as u64, j as i64));
                (&a.pow(n - j as u32) * &b.pow(j as u32)).scale(&c)
            })
            .collect();
        Self::new(ring, coeffs, order)
    }

    /// `(1 + x t)^e` for any integer `e`.
    pub fn one_plus_power(x: &RingElement, e: i64, order: usize) -> Self {
        let coeffs = (0..=order)
            .map(|j| x.pow(j as u32).scale(&BigRational::from_integer(generalized_binomial(e, j as u64))))
            .collect();
        Self::new(x.ring(), coeffs, order)
    }

    /// `sum_j x^j t^j / j!`
    pub fn exp_linear(x: &RingElement, order: usize) -> Self {
        let mut fact = BigRational::one();
        let coeffs = (0..=order)
            .map(|j| {
                if j > 0 {
                    fact /= int(j as i64);
                }
                x.pow(j as u32).scale(&fact)
            })
            .collect();
        Self::new(x.ring(), coeffs, order)
    }

    pub fn ring(&self) -> &Arc<GradedRing> {
        &self.ring
    }

    pub fn order(&self) -> usize {
        self.coeffs.len() - 1
    }

    pub fn coefficients(&self) -> &[RingElement] {
        &self.coeffs
    }

    pub fn coefficient(&self, i: usize) -> Result<&RingElement> {
        self.coeffs.get(i).ok_or(Error::TruncationTooLow { needed: i, have: self.order() })
    }

    pub fn truncate(&self, order: usize) -> Self {
        Self::new(&self.ring, self.coeffs.clone(), order.min(self.order()))
    }

    pub fn add(&self, other: &Self) -> Self {
        let order = self.order().min(other.order());
        let coeffs = (0..=order).map(|i| &self.coeffs[i] + &other.coeffs[i]).collect();
        Self::new(&self.ring, coeffs, order)
    }

    /// Product, truncated at the smaller of the two orders.
    pub fn mul(&self, other: &Self) -> Self {
        let order = self.order().min(other.order());
        let mut coeffs = vec![self.ring.zero(); order + 1];
        for (i, a) in self.coeffs.iter().enumerate().take(order + 1) {
            if a.is_zero() {
                continue;
            }
            for (j, b) in other.coeffs.iter().enumerate().take(order + 1 - i) {
                coeffs[i + j] = &coeffs[i + j] + &(a * b);
            }
        }
        Self::new(&self.ring, coeffs, order)
    }

    pub fn scale(&self, c: &BigRational) -> Self {
        Self::new(&self.ring, self.coeffs.iter().map(|x| x.scale(c)).collect(), self.order())
    }
}

impl PartialEq for RingSeries {
    fn eq(&self, other: &Self) -> bool {
        self.coeffs == other.coeffs
    }
}

/// `1 / c` up to the truncation order of `c`.
pub fn series_inverse(c: &RingSeries) -> Result<RingSeries> {
    let ring = c.ring();
    if c.coeffs[0] != ring.one() {
        return Err(Error::NonUnitConstantTerm);
    }
    let mut s: Vec<RingElement> = vec![ring.one()];
    for i in 1..=c.order() {
        let mut acc = ring.zero();
        for j in 1..=i {
            acc = &acc + &(&c.coeffs[j] * &s[i - j]);
        }
        s.push(-&acc);
    }
    Ok(RingSeries::new(ring, s, c.order()))
}

/// Push-forward of `X^l` from the projectivization of a rank `fiber_rank` bundle
/// whose Segre series is `s`: the coefficient `s_{l - fiber_rank + 1}`, zero below the fiber.
pub fn pushforward_power(l: i64, fiber_rank: i64, s: &RingSeries) -> Result<RingElement> {
    let i = l - fiber_rank + 1;
    if i < 0 {
        return Ok(s.ring().zero());
    }
    s.coefficient(i as usize).cloned()
}

/// `Q[theta]/(theta^{g+1})` with `theta^g -> g!`.
pub fn theta_ring(g: u32) -> Result<Arc<GradedRing>> {
    let fact: BigRational = (1..=g as i64).map(int).product();
    GradedRingSpec::new(&[("theta", 1)])
        .nilpotent("theta", g + 1)
        .top_degree(g)
        .evaluate(&[("theta", g)], fact)
        .build()
}

/// The integral over the Jacobian of the push-forward of `X^{N-1+g}`, where
/// `N = k(d+1-g)` and the bundle has total Chern class `e^{-k theta}`.
pub fn theta_integral(g: u32, k: u32, d: u32) -> BigRational {
    let ring = theta_ring(g).expect("theta ring is well formed");
    let theta = ring.gen("theta");
    let order = g as usize;
    let c = RingSeries::exp_linear(&theta.scale(&-int(k)), order);
    let s = series_inverse(&c).expect("unit constant term");
    let rank = k as i64 * (d as i64 + 1 - g as i64);
    let pushed = pushforward_power(rank - 1 + g as i64, rank, &s).expect("order is g");
    pushed.evaluate()
}

/// `-[t^{M-n}] s_normal (1 + c1E t)^m (c1L + c2E t)^n`, evaluated on the top degree.
pub fn blowup_correction(
    m: u32,
    n: u32,
    big_m: i64,
    s_normal: &RingSeries,
    c1e: &RingElement,
    c2e: &RingElement,
    c1l: &RingElement,
) -> Result<BigRational> {
    let idx = big_m - n as i64;
    if idx < 0 {
        return Ok(BigRational::zero());
    }
    let idx = idx as usize;
    if s_normal.order() < idx {
        return Err(Error::TruncationTooLow { needed: idx, have: s_normal.order() });
    }
    let ring = s_normal.ring();
    let product = s_normal
        .truncate(idx)
        .mul(&RingSeries::binomial_linear(&ring.one(), c1e, m, idx))
        .mul(&RingSeries::binomial_linear(c1l, c2e, n, idx));
    Ok(-product.coefficient(idx)?.evaluate())
}

/// `-2m (2/d) 2^{m-2} - n (2/d) 2^m == -k 2^m` with `m = kd - 2n`, checked in rationals.
pub fn identity_517(d: u32, k: u32, n: u32) -> Result<bool> {
    if d == 0 || d % 2 == 1 {
        return Err(Error::InvalidArgument(format!("d = {d} must be even and positive")));
    }
    let m = k as i64 * d as i64 - 2 * n as i64;
    if m < 0 {
        return Err(Error::IndexOutOfRange { n: n as u64, max: (k as u64 * d as u64) / 2 });
    }
    let two_over_d = BigRational::new(2.into(), d.into());
    let p = |e: i64| -> BigRational {
        if e >= 0 {
            int(num_bigint::BigInt::one() << e)
        } else {
            BigRational::new(1.into(), num_bigint::BigInt::one() << -e)
        }
    };
    let lhs = -int(2 * m) * &two_over_d * p(m - 2) - int(n) * &two_over_d * p(m);
    Ok(lhs == -int(k) * p(m))
}
