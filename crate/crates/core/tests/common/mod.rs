//! Oracles shared by the integration tests, independent of the library code paths.

#![allow(dead_code)]

use std::collections::HashMap;

use gwgr::numerics::BigInt;
use itertools::Itertools;

/// Intersection numbers on `G(r,k)` by repeated Pieri multiplication: `c_i(S*)` adds
/// a vertical strip of `i` boxes, and the number of ways to reach the full
/// `r x (k-r)` rectangle is the degree of the product.
pub fn pieri_number(r: usize, k: usize, s: &[u32]) -> BigInt {
    let cols = k - r;
    let mut states: HashMap<Vec<usize>, BigInt> = HashMap::from([(vec![0; r], BigInt::from(1))]);
    for (i, &e) in s.iter().enumerate() {
        for _ in 0..e {
            let mut next: HashMap<Vec<usize>, BigInt> = HashMap::new();
            for (lambda, mult) in &states {
                for rows in (0..r).combinations(i + 1) {
                    let mut mu = lambda.clone();
                    for &row in &rows {
                        mu[row] += 1;
                    }
                    if mu.windows(2).all(|w| w[0] >= w[1]) && mu[0] <= cols {
                        *next.entry(mu).or_default() += mult;
                    }
                }
            }
            states = next;
        }
    }
    states.remove(&vec![cols; r]).unwrap_or_default()
}

/// Every exponent vector `s` with `sum i * s_i = total`.
pub fn exponent_vectors(r: usize, total: u32) -> Vec<Vec<u32>> {
    if r == 0 {
        return if total == 0 { vec![vec![]] } else { vec![] };
    }
    let weight = r as u32;
    let mut out = Vec::new();
    for last in 0..=total / weight {
        for mut head in exponent_vectors(r - 1, total - last * weight) {
            head.push(last);
            out.push(head);
        }
    }
    out
}
