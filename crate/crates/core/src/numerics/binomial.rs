use num_bigint::{BigInt, BigUint};
use num_traits::{One, Zero};

/// Exact binomial coefficient `C(n, m)`, zero when `m < 0` or `m > n`.
pub fn binomial(n: u64, m: i64) -> BigInt {
    if m < 0 || m as u64 > n {
        return BigInt::zero();
    }
    let m = (m as u64).min(n - m as u64);
    let mut acc = BigUint::one();
    for i in 0..m {
        acc *= n - i;
        acc /= i + 1;
    }
    BigInt::from(acc)
}

/// `C(a, j)` for an arbitrary integer `a` and `j >= 0`, as used in `(1 + x)^a`.
pub fn generalized_binomial(a: i64, j: u64) -> BigInt {
    let mut num = BigInt::one();
    let mut den = BigInt::one();
    for i in 0..j {
        num *= BigInt::from(a) - BigInt::from(i);
        den *= BigInt::from(i + 1);
    }
    num / den
}
