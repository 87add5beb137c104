//! Words in the generators and their images under the representation.

use std::fmt;
use std::str::FromStr;

use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};
use crate::exact::ExactMatrix;
use crate::graph::{Shape, SignedCoxeterGraph};
use crate::repmat::Representation;
use crate::taucalc::IdentityReport;

/// A literal word. Letters are 0-based internally; text and serde forms are
/// 1-based.
#[derive(Debug, Clone, Default, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct Word(Vec<usize>);

impl Word {
    pub fn new(letters: Vec<usize>) -> Self {
        Word(letters)
    }

    pub fn empty() -> Self {
        Word(Vec::new())
    }

    pub fn generator(i: usize) -> Self {
        Word(vec![i])
    }

    /// From 1-based letters.
    pub fn from_one_based(letters: &[usize]) -> Result<Self> {
        letters
            .iter()
            .map(|&l| {
                l.checked_sub(1)
                    .ok_or_else(|| Error::InvalidParameters("generator indices start at 1".into()))
            })
            .collect::<Result<Vec<_>>>()
            .map(Word)
    }

    pub fn letters(&self) -> &[usize] {
        &self.0
    }

    pub fn one_based(&self) -> Vec<usize> {
        self.0.iter().map(|l| l + 1).collect()
    }

    pub fn len(&self) -> usize {
        self.0.len()
    }

    pub fn is_empty(&self) -> bool {
        self.0.is_empty()
    }

    pub fn concat(&self, other: &Word) -> Word {
        let mut v = self.0.clone();
        v.extend_from_slice(&other.0);
        Word(v)
    }

    pub fn reversed(&self) -> Word {
        Word(self.0.iter().rev().copied().collect())
    }

    pub fn repeat(&self, k: usize) -> Word {
        Word(self.0.repeat(k))
    }

    pub fn validate(&self, n: usize) -> Result<()> {
        match self.0.iter().find(|&&l| l >= n) {
            Some(&l) => Err(Error::IndexOutOfRange { index: l + 1, n }),
            None => Ok(()),
        }
    }
}

impl fmt::Display for Word {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let parts: Vec<String> = self.one_based().iter().map(|l| l.to_string()).collect();
        write!(f, "{}", parts.join(" "))
    }
}

impl FromStr for Word {
    type Err = Error;

    /// Space- or comma-separated 1-based indices, e.g. `"1 2 3 2"`.
    fn from_str(s: &str) -> Result<Self> {
        let letters = s
            .split(|c: char| c.is_whitespace() || c == ',')
            .filter(|t| !t.is_empty())
            .map(|t| {
                t.parse::<usize>()
                    .map_err(|_| Error::InvalidParameters(format!("bad generator index `{t}`")))
            })
            .collect::<Result<Vec<_>>>()?;
        Word::from_one_based(&letters)
    }
}

impl Serialize for Word {
    fn serialize<S: serde::Serializer>(&self, s: S) -> std::result::Result<S::Ok, S::Error> {
        self.one_based().serialize(s)
    }
}

impl<'de> Deserialize<'de> for Word {
    fn deserialize<D: serde::Deserializer<'de>>(d: D) -> std::result::Result<Self, D::Error> {
        let v = Vec::<usize>::deserialize(d)?;
        Word::from_one_based(&v).map_err(serde::de::Error::custom)
    }
}

/// `s_{i1} s_{i1+1} ⋯ s_j ⋯ s_{i2+1} s_{i2}` (0-based indices).
///
/// On a cycle both runs advance in the increasing cyclic direction and each
/// may cover at most `n − 2` steps, so the letters of a run are distinct and
/// the run never closes up on itself.
pub fn build_hat_word(g: &SignedCoxeterGraph, i1: usize, j: usize, i2: usize) -> Result<Word> {
    let n = g.n();
    for &idx in &[i1, j, i2] {
        if idx >= n {
            return Err(Error::IndexOutOfRange { index: idx + 1, n });
        }
    }
    match g.shape() {
        Shape::Line => {
            if i1 > j || i2 > j {
                return Err(Error::InvalidParameters(format!(
                    "hat word ({},{},{}) needs i1 <= j and i2 <= j on a line",
                    i1 + 1,
                    j + 1,
                    i2 + 1
                )));
            }
            let mut v: Vec<usize> = (i1..=j).collect();
            v.extend((i2..j).rev());
            Ok(Word(v))
        }
        Shape::Cycle => {
            let up = g.cyclic_distance(i1, j);
            let down = g.cyclic_distance(i2, j);
            if up > n - 2 || down > n - 2 {
                return Err(Error::InvalidParameters(format!(
                    "hat word ({},{},{}) wraps around the whole cycle",
                    i1 + 1,
                    j + 1,
                    i2 + 1
                )));
            }
            let mut v: Vec<usize> = (0..=up).map(|k| (i1 + k) % n).collect();
            v.extend((0..down).rev().map(|k| (i2 + k) % n));
            Ok(Word(v))
        }
        Shape::General => Err(Error::WrongShape {
            expected: "line or cycle",
        }),
    }
}

/// Product of the reflection matrices in letter order.
pub fn evaluate(rep: &Representation, w: &Word) -> Result<ExactMatrix> {
    w.validate(rep.n())?;
    let mut acc = rep.identity().clone();
    for &l in w.letters() {
        acc = &acc * &rep.reflections()[l];
    }
    Ok(acc)
}

/// `c⁻¹ w c`, with `c⁻¹` spelled as `c` reversed.
pub fn conjugate(w: &Word, c: &Word) -> Word {
    c.reversed().concat(w).concat(c)
}

/// `s_i · s_{i+1,j,i+1}` (0-based).
pub fn arc_cube_base(g: &SignedCoxeterGraph, i: usize, j: usize) -> Result<Word> {
    let hat = build_hat_word(g, g.succ(i), j, g.succ(i))?;
    Ok(Word::generator(i).concat(&hat))
}

/// Conjugating the `i`-th element `s_i s_{i+1,i−1,i+1}` by `s_{i+1} s_i`
/// gives the `(i+1)`-th one when `f_{i−1} = f_i = f_{i+1}`.
pub fn verify_conjugate_shift(rep: &Representation, i: usize) -> Result<IdentityReport> {
    let g = rep.graph();
    if g.shape() != Shape::Cycle {
        return Err(Error::WrongShape { expected: "cycle" });
    }
    rep.check_index(i)?;
    let (prev, next) = (g.pred(i), g.succ(i));
    if g.sign(prev) != g.sign(i) || g.sign(i) != g.sign(next) {
        return Err(Error::HypothesisViolated(format!(
            "conjugate shift at {} needs f_{} = f_{} = f_{}",
            i + 1,
            prev + 1,
            i + 1,
            next + 1
        )));
    }
    let current = arc_cube_base(g, i, prev)?;
    let shifted = arc_cube_base(g, next, i)?;
    let conj = conjugate(&current, &Word::new(vec![next, i]));
    let diff = &evaluate(rep, &conj)? - &evaluate(rep, &shifted)?;
    Ok(IdentityReport::from_difference(
        "conjugate_shift",
        vec![i + 1],
        diff,
    ))
}
