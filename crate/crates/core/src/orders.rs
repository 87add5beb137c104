//! Exact finite/infinite order decisions for integer matrices.
//!
//! An integer matrix of finite order has a squarefree minimal polynomial
//! whose factors are distinct cyclotomic polynomials `Φ_d`, with the sum of
//! their degrees `φ(d)` at most `n`. Its order is the lcm of those `d`, so
//! it is bounded by [`torsion_bound`].

use std::fmt;

use num_traits::{One, Signed};
use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};
use crate::exact::{cyclotomic, euler_phi, lcm_u64, ExactMatrix, IntPolynomial};
use crate::repmat::Representation;
use crate::words::{evaluate, Word};

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub enum OrderResult {
    Finite(u64),
    Infinite,
}

impl OrderResult {
    pub fn is_finite(self) -> bool {
        matches!(self, OrderResult::Finite(_))
    }

    pub fn value(self) -> Option<u64> {
        match self {
            OrderResult::Finite(k) => Some(k),
            OrderResult::Infinite => None,
        }
    }
}

impl fmt::Display for OrderResult {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            OrderResult::Finite(k) => write!(f, "finite {k}"),
            OrderResult::Infinite => write!(f, "infinite"),
        }
    }
}

#[derive(Serialize, Deserialize)]
#[serde(rename_all = "lowercase")]
enum OrderKind {
    Finite,
    Infinite,
}

#[derive(Serialize, Deserialize)]
struct OrderDoc {
    kind: OrderKind,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    value: Option<u64>,
}

impl Serialize for OrderResult {
    fn serialize<S: serde::Serializer>(&self, s: S) -> std::result::Result<S::Ok, S::Error> {
        let doc = match self {
            OrderResult::Finite(k) => OrderDoc {
                kind: OrderKind::Finite,
                value: Some(*k),
            },
            OrderResult::Infinite => OrderDoc {
                kind: OrderKind::Infinite,
                value: None,
            },
        };
        doc.serialize(s)
    }
}

impl<'de> Deserialize<'de> for OrderResult {
    fn deserialize<D: serde::Deserializer<'de>>(d: D) -> std::result::Result<Self, D::Error> {
        let doc = OrderDoc::deserialize(d)?;
        match (doc.kind, doc.value) {
            (OrderKind::Finite, Some(k)) if k >= 1 => Ok(OrderResult::Finite(k)),
            (OrderKind::Infinite, None) => Ok(OrderResult::Infinite),
            _ => Err(serde::de::Error::custom("finite orders carry a positive value, infinite ones none")),
        }
    }
}

/// Every `d` with `φ(d) ≤ n`, ascending. Since `φ(d) ≥ √(d/2)`, all of them
/// are at most `2n²`.
fn cyclotomic_indices(n: usize) -> Vec<u64> {
    let n = n as u64;
    (1..=2 * n * n + 2).filter(|&d| euler_phi(d) <= n).collect()
}

/// `max lcm(d_1, ..., d_t)` over sets of distinct `d_i` with `Σ φ(d_i) ≤ n`.
pub fn torsion_bound(n: usize) -> u64 {
    fn search(cands: &[(u64, u64)], start: usize, budget: u64, acc: u64, best: &mut u64) {
        *best = (*best).max(acc);
        for k in start..cands.len() {
            let (d, phi) = cands[k];
            if phi <= budget {
                search(cands, k + 1, budget - phi, lcm_u64(acc, d), best);
            }
        }
    }
    let cands: Vec<(u64, u64)> = cyclotomic_indices(n.max(1))
        .into_iter()
        .map(|d| (d, euler_phi(d)))
        .collect();
    let mut best = 1;
    search(&cands, 0, n.max(1) as u64, 1, &mut best);
    best
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Default)]
pub enum OrderMethod {
    /// Powers `m, m², ...` up to the torsion bound.
    #[default]
    PowerLoop,
    /// Screen the characteristic polynomial for cyclotomic factors first.
    Cyclotomic,
}

fn require_unimodular(m: &ExactMatrix) -> Result<()> {
    let det = m.det();
    if det.abs().is_one() {
        Ok(())
    } else {
        Err(Error::NotUnimodular(det.to_string()))
    }
}

/// Order of `m` by the exhaustive power loop.
pub fn matrix_order(m: &ExactMatrix) -> Result<OrderResult> {
    matrix_order_with(m, OrderMethod::PowerLoop)
}

pub fn matrix_order_with(m: &ExactMatrix, method: OrderMethod) -> Result<OrderResult> {
    require_unimodular(m)?;
    match method {
        OrderMethod::PowerLoop => Ok(power_loop(m)),
        OrderMethod::Cyclotomic => Ok(cyclotomic_order(m)),
    }
}

fn power_loop(m: &ExactMatrix) -> OrderResult {
    let bound = torsion_bound(m.dim());
    let mut p = m.clone();
    for k in 1..=bound {
        if p.is_identity() {
            return OrderResult::Finite(k);
        }
        p = &p * m;
    }
    OrderResult::Infinite
}

/// The exponents `d` such that the characteristic polynomial is a product of
/// `Φ_d`'s, or `None` when some factor is not cyclotomic.
fn cyclotomic_support(charpoly: &IntPolynomial, n: usize) -> Option<Vec<u64>> {
    let mut rest = charpoly.clone();
    let mut support = Vec::new();
    for d in cyclotomic_indices(n) {
        let phi = cyclotomic(d as usize);
        let mut used = false;
        loop {
            let (q, r) = rest.div_rem_monic(&phi);
            if !r.is_zero() {
                break;
            }
            rest = q;
            used = true;
        }
        if used {
            support.push(d);
        }
        if rest.degree() == Some(0) {
            break;
        }
    }
    (rest.degree() == Some(0)).then_some(support)
}

fn cyclotomic_order(m: &ExactMatrix) -> OrderResult {
    let Some(support) = cyclotomic_support(&m.char_poly(), m.dim()) else {
        return OrderResult::Infinite;
    };
    let period = support.into_iter().fold(1, lcm_u64);
    if !m.pow(period).is_identity() {
        return OrderResult::Infinite;
    }
    let mut order = period;
    loop {
        let smaller = divisors_of_prime_quotients(order)
            .into_iter()
            .find(|&k| m.pow(k).is_identity());
        match smaller {
            Some(k) => order = k,
            None => return OrderResult::Finite(order),
        }
    }
}

/// `k / p` for each prime `p` dividing `k`.
fn divisors_of_prime_quotients(k: u64) -> Vec<u64> {
    let mut out = Vec::new();
    let mut rest = k;
    let mut p = 2;
    while p * p <= rest {
        if rest.is_multiple_of(p) {
            out.push(k / p);
            while rest.is_multiple_of(p) {
                rest /= p;
            }
        }
        p += 1;
    }
    if rest > 1 {
        out.push(k / rest);
    }
    out
}

/// Order of the element represented by `w`.
pub fn element_order(rep: &Representation, w: &Word) -> Result<OrderResult> {
    matrix_order(&evaluate(rep, w)?)
}

pub fn element_order_with(rep: &Representation, w: &Word, method: OrderMethod) -> Result<OrderResult> {
    matrix_order_with(&evaluate(rep, w)?, method)
}
