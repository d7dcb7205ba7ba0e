use std::fmt;
use std::ops::{Add, Mul, Neg, Sub};

use num_bigint::BigInt;
use num_rational::BigRational;
use num_traits::{FromPrimitive, ToPrimitive};

use crate::error::{Error, Result};

/// Unit roundoff for `f64`.
const U: f64 = f64::EPSILON / 2.0;

/// A complex double together with a bound on its distance from the exact value.
///
/// `err` bounds the modulus of the difference between the stored value and
/// the value exact arithmetic would have produced from exact inputs. Every
/// operation adds its own rounding error to the propagated input errors, so
/// the bound never shrinks.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct GuardedComplex {
    pub re: f64,
    pub im: f64,
    pub err: f64,
}

impl GuardedComplex {
    pub const ZERO: Self = Self { re: 0.0, im: 0.0, err: 0.0 };
    pub const ONE: Self = Self { re: 1.0, im: 0.0, err: 0.0 };

    pub fn exact(re: f64, im: f64) -> Self {
        Self { re, im, err: 0.0 }
    }

    pub fn real(re: f64) -> Self {
        Self::exact(re, 0.0)
    }

    pub fn with_err(re: f64, im: f64, err: f64) -> Self {
        debug_assert!(err >= 0.0);
        Self { re, im, err }
    }

    pub fn from_rational(q: &BigRational) -> Self {
        let x = q.to_f64().unwrap_or(f64::NAN);
        let err = if q.is_integer() && x.abs() < 9.0e15 { 0.0 } else { 2.0 * U * x.abs() };
        Self::with_err(x, 0.0, err)
    }

    /// `|re| + |im|`, an upper bound for the modulus.
    pub fn norm1(&self) -> f64 {
        self.re.abs() + self.im.abs()
    }

    pub fn abs(&self) -> f64 {
        self.re.hypot(self.im)
    }

    pub fn scale(self, s: f64) -> Self {
        let re = self.re * s;
        let im = self.im * s;
        let round = U * (re.abs() + im.abs());
        Self::with_err(re, im, self.err * s.abs() + round)
    }

    pub fn powu(self, mut e: u64) -> Self {
        let mut base = self;
        let mut acc = Self::ONE;
        while e > 0 {
            if e & 1 == 1 {
                acc = acc * base;
            }
            e >>= 1;
            if e > 0 {
                base = base * base;
            }
        }
        acc
    }

    pub fn recip(self) -> Self {
        let m = self.abs();
        let m2 = self.re * self.re + self.im * self.im;
        let re = self.re / m2;
        let im = -self.im / m2;
        let err = if self.err < m {
            self.err / (m * (m - self.err)) + 6.0 * U / m
        } else {
            f64::INFINITY
        };
        Self::with_err(re, im, err)
    }
}

impl Add for GuardedComplex {
    type Output = Self;
    fn add(self, rhs: Self) -> Self {
        let re = self.re + rhs.re;
        let im = self.im + rhs.im;
        Self::with_err(re, im, self.err + rhs.err + U * (re.abs() + im.abs()))
    }
}

impl Sub for GuardedComplex {
    type Output = Self;
    fn sub(self, rhs: Self) -> Self {
        self + (-rhs)
    }
}

impl Neg for GuardedComplex {
    type Output = Self;
    fn neg(self) -> Self {
        Self::with_err(-self.re, -self.im, self.err)
    }
}

impl Mul for GuardedComplex {
    type Output = Self;
    fn mul(self, rhs: Self) -> Self {
        let re = self.re * rhs.re - self.im * rhs.im;
        let im = self.re * rhs.im + self.im * rhs.re;
        let propagated = self.abs() * rhs.err + rhs.abs() * self.err + self.err * rhs.err;
        let round = 3.0 * U * self.norm1() * rhs.norm1();
        Self::with_err(re, im, propagated + round)
    }
}

impl fmt::Display for GuardedComplex {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let sign = if self.im.is_sign_negative() { '-' } else { '+' };
        write!(f, "{:.12} {} {:.12}i", self.re, sign, self.im.abs())
    }
}

/// Neumaier-compensated complex summation with a running error bound.
#[derive(Debug, Clone, Default)]
pub struct CompensatedSum {
    re: f64,
    re_comp: f64,
    im: f64,
    im_comp: f64,
    input_err: f64,
    abs_total: f64,
    count: u64,
}

fn neumaier(sum: &mut f64, comp: &mut f64, x: f64) {
    let t = *sum + x;
    if sum.abs() >= x.abs() {
        *comp += (*sum - t) + x;
    } else {
        *comp += (x - t) + *sum;
    }
    *sum = t;
}

impl CompensatedSum {
    pub fn new() -> Self {
        Self::default()
    }

    pub fn add(&mut self, z: GuardedComplex) {
        neumaier(&mut self.re, &mut self.re_comp, z.re);
        neumaier(&mut self.im, &mut self.im_comp, z.im);
        self.input_err += z.err;
        self.abs_total += z.norm1();
        self.count += 1;
    }

    pub fn total(&self) -> GuardedComplex {
        let re = self.re + self.re_comp;
        let im = self.im + self.im_comp;
        let n = self.count as f64;
        let round = 2.0 * U * (re.abs() + im.abs()) + (4.0 * n + 4.0) * U * U * self.abs_total;
        GuardedComplex::with_err(re, im, self.input_err + round)
    }
}

impl Extend<GuardedComplex> for CompensatedSum {
    fn extend<I: IntoIterator<Item = GuardedComplex>>(&mut self, iter: I) {
        for z in iter {
            self.add(z);
        }
    }
}

impl FromIterator<GuardedComplex> for CompensatedSum {
    fn from_iter<I: IntoIterator<Item = GuardedComplex>>(iter: I) -> Self {
        let mut s = Self::new();
        s.extend(iter);
        s
    }
}

/// Nearest integer to `z.re`, accepted when `|z.re - n| + |z.im| <= max(tol, z.err)`.
pub fn round_to_integer(z: GuardedComplex, tol: f64) -> Result<BigInt> {
    round_with_residual(z, tol).map(|(n, _)| n)
}

/// Like [`round_to_integer`], also returning the residual `|z.re - n| + |z.im|`.
///
/// An error bound of 1/2 or more means the nearest integer is not determined,
/// which is reported as a non-integer result regardless of the residual.
pub fn round_with_residual(z: GuardedComplex, tol: f64) -> Result<(BigInt, f64)> {
    let nearest = z.re.round();
    let residual = (z.re - nearest).abs() + z.im.abs();
    let fail = || Error::NonIntegerResult { re: z.re, im: z.im, residual, tol, err: z.err };
    if !residual.is_finite() || z.err.is_nan() || z.err >= 0.5 || residual > tol.max(z.err) {
        return Err(fail());
    }
    let n = BigInt::from_f64(nearest).ok_or_else(fail)?;
    Ok((n, residual))
}
