use std::cmp::Ordering;
use std::fmt;
use std::ops::Mul;

use num_integer::Integer;

use super::GuardedComplex;

/// The root of unity `exp(2 pi i j / N)`, stored as the reduced fraction `j/N` with `0 <= j < N`.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub struct UnityAngle {
    num: u64,
    den: u64,
}

impl UnityAngle {
    pub fn new(j: i64, n: u64) -> Self {
        assert!(n > 0, "angle denominator must be positive");
        let j = j.rem_euclid(n as i64) as u64;
        let g = j.gcd(&n);
        Self { num: j / g, den: n / g }
    }

    pub fn one() -> Self {
        Self { num: 0, den: 1 }
    }

    pub fn minus_one() -> Self {
        Self { num: 1, den: 2 }
    }

    /// `(-1)^e` as an angle.
    pub fn sign(e: u64) -> Self {
        if e.is_multiple_of(2) {
            Self::one()
        } else {
            Self::minus_one()
        }
    }

    pub fn numerator(&self) -> u64 {
        self.num
    }

    pub fn denominator(&self) -> u64 {
        self.den
    }

    pub fn pow(self, e: u64) -> Self {
        let j = ((self.num as u128 * e as u128) % self.den as u128) as i64;
        Self::new(j, self.den)
    }

    pub fn inv(self) -> Self {
        Self::new(-(self.num as i64), self.den)
    }

    pub fn to_complex(self) -> GuardedComplex {
        let (n, d) = (self.num as u128, self.den as u128);
        if (4 * n) % d == 0 {
            let (re, im) = [(1.0, 0.0), (0.0, 1.0), (-1.0, 0.0), (0.0, -1.0)][(4 * n / d) as usize];
            return GuardedComplex::exact(re, im);
        }
        let (re, im) = trig(n, d);
        GuardedComplex::with_err(re, im, 8.0 * f64::EPSILON)
    }
}

fn trig(n: u128, d: u128) -> (f64, f64) {
    // Angles past a half turn are mirrored so the sine argument stays in [0, pi].
    let twice = 2 * n;
    let (a, neg) = if twice >= d { (d - n, true) } else { (n, false) };
    let theta = std::f64::consts::TAU * (a as f64 / d as f64);
    let (s, c) = theta.sin_cos();
    (c, if neg { -s } else { s })
}

impl PartialOrd for UnityAngle {
    fn partial_cmp(&self, other: &Self) -> Option<Ordering> {
        Some(self.cmp(other))
    }
}

impl Ord for UnityAngle {
    fn cmp(&self, other: &Self) -> Ordering {
        (self.num as u128 * other.den as u128).cmp(&(other.num as u128 * self.den as u128))
    }
}

impl Mul for UnityAngle {
    type Output = Self;
    fn mul(self, other: Self) -> Self {
        let den = self.den.lcm(&other.den);
        let j = self.num * (den / self.den) + other.num * (den / other.den);
        Self::new((j % den) as i64, den)
    }
}

impl fmt::Display for UnityAngle {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{}/{}", self.num, self.den)
    }
}

/// The `k` solutions of `q^k = (-1)^(r-1)`, in increasing angle.
pub fn roots_of_sign(k: u64, r: u64) -> Vec<UnityAngle> {
    assert!(k >= 1);
    if r % 2 == 1 {
        (0..k).map(|j| UnityAngle::new(j as i64, k)).collect()
    } else {
        (0..k).map(|j| UnityAngle::new(2 * j as i64 + 1, 2 * k)).collect()
    }
}
