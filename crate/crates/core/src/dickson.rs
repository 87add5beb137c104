//! Dickson polynomials of the second kind, `E_n(x, α)`, over the integers.
//!
//! `E_0 = 1`, `E_1 = x`, `E_n = x·E_{n−1} − α·E_{n−2}`.
//!
//! The zero search used for relation exponents only needs the evaluation
//! points `x ∈ {−2, 0, 1, 2}` with `α = ±1`. Those split into two families:
//!
//! * `x = 0`: `E_1 = 0`, so the first zero is at `n = 1`.
//! * `(x, α) = (1, 1)`: the sequence `1, 1, 0, −1, −1, 0, ...` has period 6
//!   and vanishes exactly at `n ≡ 2 (mod 3)`.
//! * every other point: `|E_n|` is strictly increasing from `n = 1` on. For
//!   `|x| = 2, α = 1` the values are `(±1)^n (n + 1)`; for `α = −1` we have
//!   `|E_n| = |x||E_{n−1}| + |E_{n−2}|` (all terms share a sign pattern),
//!   which grows without bound.
//!
//! The search scans `n ≤ ZERO_SEARCH_BOUND` and, when no zero shows up,
//! checks the strict growth over the whole window before answering "none".

use num_bigint::BigInt;
use num_traits::{One, Signed, Zero};
use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};

/// Largest index inspected by [`minimal_relation_exponent`].
pub const ZERO_SEARCH_BOUND: usize = 48;

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, Serialize, Deserialize)]
pub struct DicksonQuery {
    pub x: i64,
    pub alpha: i64,
}

impl DicksonQuery {
    pub fn new(x: i64, alpha: i64) -> Result<Self> {
        if alpha != 1 && alpha != -1 {
            return Err(Error::InvalidParameters(format!(
                "alpha must be +1 or -1, got {alpha}"
            )));
        }
        Ok(DicksonQuery { x, alpha })
    }
}

/// `E_n(x, α)` by the three-term recurrence.
pub fn dickson_e(n: usize, q: DicksonQuery) -> BigInt {
    dickson_sequence(n, q).pop().expect("sequence is nonempty")
}

/// `[E_0, ..., E_n]`.
pub fn dickson_sequence(n: usize, q: DicksonQuery) -> Vec<BigInt> {
    let x = BigInt::from(q.x);
    let alpha = BigInt::from(q.alpha);
    let mut out = Vec::with_capacity(n + 1);
    out.push(BigInt::one());
    if n >= 1 {
        out.push(x.clone());
    }
    for k in 2..=n {
        let next = &x * &out[k - 1] - &alpha * &out[k - 2];
        out.push(next);
    }
    out
}

/// `E_n(x, α) / x` for odd `n`, as the exact value of the quotient
/// polynomial `Σ_k (−α)^k C(n−k, k) x^{n−2k−1}` (defined at `x = 0` too).
pub fn dickson_e_odd_over_x(n: usize, q: DicksonQuery) -> BigInt {
    assert!(n % 2 == 1, "E_n is divisible by x only for odd n");
    let x = BigInt::from(q.x);
    let neg_alpha = BigInt::from(-q.alpha);
    let mut total = BigInt::zero();
    for k in 0..=(n - 1) / 2 {
        let term = num_traits::pow(neg_alpha.clone(), k)
            * binomial(n - k, k)
            * num_traits::pow(x.clone(), n - 2 * k - 1);
        total += term;
    }
    total
}

pub(crate) fn binomial(n: usize, k: usize) -> BigInt {
    let mut acc = BigInt::one();
    for i in 0..k {
        acc = acc * BigInt::from(n - i) / BigInt::from(i + 1);
    }
    acc
}

/// Smallest `r ≥ 2` with `E_{r−1}(x, α) = 0`, or `None` when the sequence
/// never vanishes.
pub fn minimal_relation_exponent(q: DicksonQuery) -> Result<Option<u64>> {
    if !matches!(q.x, -2 | 0 | 1 | 2) || !matches!(q.alpha, 1 | -1) {
        return Err(Error::UnsupportedDicksonPoint {
            x: q.x,
            alpha: q.alpha,
        });
    }
    let seq = dickson_sequence(ZERO_SEARCH_BOUND, q);
    if let Some(n) = (1..=ZERO_SEARCH_BOUND).find(|&n| seq[n].is_zero()) {
        return Ok(Some(n as u64 + 1));
    }
    let growing = (2..=ZERO_SEARCH_BOUND).all(|n| seq[n].abs() > seq[n - 1].abs());
    if growing && seq[1].abs() >= seq[0].abs() {
        Ok(None)
    } else {
        Err(Error::UndecidedZeroSearch {
            x: q.x,
            alpha: q.alpha,
        })
    }
}
