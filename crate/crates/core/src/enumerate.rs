//! Breadth-first enumeration of the reflection group, and the
//! classification of uniformly signed cycles.

use std::collections::{HashSet, VecDeque};
use std::fmt;

use serde::Serialize;

use crate::error::{Error, Result};
use crate::exact::ExactMatrix;
use crate::graph::{Shape, Sign, SignedCoxeterGraph};
use crate::orders::{element_order, OrderResult};
use crate::repmat::Representation;
use crate::taucalc::IdentityReport;
use crate::words::{build_hat_word, evaluate, Word};

pub const DEFAULT_CAP: usize = 200_000;

#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize)]
#[serde(tag = "kind", rename_all = "lowercase")]
pub enum EnumerationResult {
    Complete { count: usize, cap: usize },
    Exceeded { cap: usize },
}

impl EnumerationResult {
    pub fn count(self) -> Option<usize> {
        match self {
            EnumerationResult::Complete { count, .. } => Some(count),
            EnumerationResult::Exceeded { .. } => None,
        }
    }
}

impl fmt::Display for EnumerationResult {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            EnumerationResult::Complete { count, .. } => write!(f, "complete {count}"),
            EnumerationResult::Exceeded { .. } => write!(f, "exceeded"),
        }
    }
}

/// All group elements, or `None` once more than `cap` have been seen.
pub fn bfs_elements(rep: &Representation, cap: usize) -> Option<Vec<ExactMatrix>> {
    let start = rep.identity().clone();
    let mut seen: HashSet<Vec<u8>> = HashSet::new();
    seen.insert(start.canonical_key());
    let mut elements = vec![start.clone()];
    let mut queue = VecDeque::from([start]);
    if elements.len() > cap {
        return None;
    }
    while let Some(m) = queue.pop_front() {
        for gen in rep.reflections() {
            let next = &m * gen;
            if seen.insert(next.canonical_key()) {
                elements.push(next.clone());
                if elements.len() > cap {
                    return None;
                }
                queue.push_back(next);
            }
        }
    }
    Some(elements)
}

pub fn bfs_enumerate(rep: &Representation, cap: usize) -> EnumerationResult {
    match bfs_elements(rep, cap) {
        Some(all) => EnumerationResult::Complete { count: all.len(), cap },
        None => EnumerationResult::Exceeded { cap },
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize)]
pub enum CycleClass {
    #[serde(rename = "affine_S_tilde")]
    AffineSTilde,
    #[serde(rename = "coxeter_D")]
    CoxeterD,
}

impl fmt::Display for CycleClass {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(match self {
            CycleClass::AffineSTilde => "affine_S_tilde",
            CycleClass::CoxeterD => "coxeter_D",
        })
    }
}

/// Affine for all-plus cycles and even all-minus cycles, type D for odd
/// all-minus cycles.
pub fn classify_cycle(g: &SignedCoxeterGraph) -> Result<CycleClass> {
    if g.shape() != Shape::Cycle {
        return Err(Error::WrongShape { expected: "cycle" });
    }
    if g.all_signs(Sign::Plus) {
        Ok(CycleClass::AffineSTilde)
    } else if g.all_signs(Sign::Minus) {
        Ok(if g.n().is_multiple_of(2) {
            CycleClass::AffineSTilde
        } else {
            CycleClass::CoxeterD
        })
    } else {
        Err(Error::HypothesisViolated("classification needs uniformly signed vertices".into()))
    }
}

/// `2^{n−1} n!`.
pub fn coxeter_d_order(n: usize) -> u128 {
    (1..=n as u128).product::<u128>() << (n - 1)
}

/// The replacement generator `s_2 s_3 ⋯ s_n ⋯ s_3 s_2`.
pub fn replacement_generator(g: &SignedCoxeterGraph) -> Result<Word> {
    build_hat_word(g, 1, g.n() - 1, 1)
}

fn power_report(rep: &Representation, name: &str, params: Vec<usize>, base: &Word, e: u64) -> Result<IdentityReport> {
    let diff = &evaluate(rep, base)?.pow(e) - rep.identity();
    let mut r = IdentityReport::from_difference(name, params, diff);
    r.detail = Some(format!("({base})^{e}"));
    Ok(r)
}

/// On an odd all-minus cycle, replacing `s_n` by `s'_0 = s_2 ⋯ s_n ⋯ s_2`
/// gives generators `s_1, ..., s_{n−1}, s'_0` satisfying the type D
/// relations: a path `s_1 − ⋯ − s_{n−1}` with `s'_0` joined to `s_2`.
pub fn verify_dn_transform(rep: &Representation) -> Result<Vec<IdentityReport>> {
    let g = rep.graph();
    let n = g.n();
    if g.shape() != Shape::Cycle || !g.all_signs(Sign::Minus) || n.is_multiple_of(2) {
        return Err(Error::HypothesisViolated("needs an odd cycle with every sign -1".into()));
    }
    let s0 = replacement_generator(g)?;
    let mut out = Vec::new();
    out.push(power_report(rep, "dn_first_commutes", vec![1], &Word::generator(0).concat(&s0), 2)?);
    out.push(power_report(rep, "dn_braid_with_second", vec![2], &s0.concat(&Word::generator(1)), 3)?);
    for k in 2..n - 1 {
        out.push(power_report(rep, "dn_commutes", vec![k + 1], &s0.concat(&Word::generator(k)), 2)?);
    }
    let closing = element_order(rep, &Word::new(vec![0, n - 1]))?;
    out.push(IdentityReport::from_check(
        "dn_closing_braid",
        vec![1, n],
        closing == OrderResult::Finite(3),
        format!("(s1 s{n}) has order {closing}"),
    ));

    // exact orders of all pairs match the type D diagram
    let mut gens: Vec<Word> = (0..n - 1).map(Word::generator).collect();
    gens.push(s0);
    let adjacent = |a: usize, b: usize| -> bool {
        let (a, b) = (a.min(b), a.max(b));
        if b == n - 1 {
            a == 1
        } else {
            b == a + 1
        }
    };
    let mut diagram_ok = true;
    let mut mismatches = Vec::new();
    for a in 0..n {
        if element_order(rep, &gens[a])? != OrderResult::Finite(2) {
            diagram_ok = false;
            mismatches.push(format!("generator {} is not an involution", a + 1));
        }
        for b in a + 1..n {
            let expected = if adjacent(a, b) { 3 } else { 2 };
            let got = element_order(rep, &gens[a].concat(&gens[b]))?;
            if got != OrderResult::Finite(expected) {
                diagram_ok = false;
                mismatches.push(format!("pair ({},{}) has order {got}", a + 1, b + 1));
            }
        }
    }
    out.push(IdentityReport::from_check(
        "dn_diagram",
        vec![n],
        diagram_ok,
        if diagram_ok {
            "pair orders match the type D diagram".to_string()
        } else {
            mismatches.join("; ")
        },
    ));
    Ok(out)
}
