//! Defining presentations for line and cycle graphs.

use std::collections::HashMap;
use std::fmt;
use std::str::FromStr;

use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};
use crate::graph::{Shape, SignedCoxeterGraph};
use crate::orders::{element_order, OrderResult};
use crate::repmat::Representation;
use crate::taucalc::{compute_kappa, IdentityReport};
use crate::words::{arc_cube_base, build_hat_word, evaluate, Word};

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize, Deserialize)]
#[serde(rename_all = "snake_case")]
pub enum RelatorOrigin {
    Involution,
    Commuting,
    Braid,
    /// `(s_i · s_{i+1,j,i+1})³`, on lines and cycles alike.
    GeneralizedLine,
    CycleArcSquare,
}

impl RelatorOrigin {
    pub fn label(self) -> &'static str {
        match self {
            RelatorOrigin::Involution => "involution",
            RelatorOrigin::Commuting => "commuting",
            RelatorOrigin::Braid => "braid",
            RelatorOrigin::GeneralizedLine => "generalized_line",
            RelatorOrigin::CycleArcSquare => "cycle_arc_square",
        }
    }
}

/// `base^exponent = 1`.
#[derive(Debug, Clone, PartialEq, Eq, Hash, Serialize, Deserialize)]
pub struct Relator {
    pub base: Word,
    pub exponent: u32,
    pub origin: RelatorOrigin,
}

impl Relator {
    pub fn new(base: Word, exponent: u32, origin: RelatorOrigin) -> Self {
        Relator { base, exponent, origin }
    }

    /// Smallest rotation of the base or of its reverse, with the exponent.
    /// Two relators with the same key are conjugate or inverse to each other.
    pub fn canonical_key(&self) -> (Vec<usize>, u32) {
        let letters = self.base.letters();
        let rev: Vec<usize> = letters.iter().rev().copied().collect();
        let len = letters.len();
        let mut best: Option<Vec<usize>> = None;
        for src in [letters, &rev[..]] {
            for shift in 0..len.max(1) {
                let rot: Vec<usize> = (0..len).map(|k| src[(k + shift) % len]).collect();
                if best.as_ref().is_none_or(|b| rot < *b) {
                    best = Some(rot);
                }
            }
        }
        (best.unwrap_or_default(), self.exponent)
    }

    pub fn to_text(&self) -> String {
        let letters: Vec<String> = self.base.one_based().iter().map(|l| format!("s{l}")).collect();
        if letters.len() == 1 {
            format!("{}^{}", letters[0], self.exponent)
        } else {
            format!("({})^{}", letters.join("*"), self.exponent)
        }
    }
}

impl fmt::Display for Relator {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(&self.to_text())
    }
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct Presentation {
    pub n: usize,
    pub relators: Vec<Relator>,
}

impl Presentation {
    /// Builds a presentation, merging relators with equal canonical keys.
    /// The merged entry keeps the position and origin of the first
    /// occurrence and the lexicographically smallest base.
    pub fn from_relators(n: usize, relators: Vec<Relator>) -> Self {
        let mut index: HashMap<(Vec<usize>, u32), usize> = HashMap::new();
        let mut out: Vec<Relator> = Vec::new();
        for r in relators {
            match index.get(&r.canonical_key()) {
                Some(&k) => {
                    if r.base < out[k].base {
                        out[k].base = r.base;
                    }
                }
                None => {
                    index.insert(r.canonical_key(), out.len());
                    out.push(r);
                }
            }
        }
        Presentation { n, relators: out }
    }

    pub fn canonical_keys(&self) -> Vec<(Vec<usize>, u32)> {
        let mut keys: Vec<_> = self.relators.iter().map(Relator::canonical_key).collect();
        keys.sort();
        keys
    }

    pub fn equivalent(&self, other: &Presentation) -> bool {
        self.n == other.n && self.canonical_keys() == other.canonical_keys()
    }

    pub fn validate(&self) -> Result<()> {
        for r in &self.relators {
            if r.base.is_empty() {
                return Err(Error::MalformedPresentation("empty relator base".into()));
            }
            if r.exponent < 2 {
                return Err(Error::MalformedPresentation(format!("exponent {} below 2", r.exponent)));
            }
            if let Some(&l) = r.base.letters().iter().find(|&&l| l >= self.n) {
                return Err(Error::MalformedPresentation(format!(
                    "generator {} out of range for {} generators",
                    l + 1,
                    self.n
                )));
            }
        }
        Ok(())
    }

    pub fn from_json(text: &str) -> Result<Self> {
        let p: Presentation =
            serde_json::from_str(text).map_err(|e| Error::MalformedPresentation(e.to_string()))?;
        p.validate()?;
        Ok(p)
    }
}

/// `s_{j+1,i,j+1} · s_{i+1,j,i+1}` on a cycle.
pub fn arc_square_base(g: &SignedCoxeterGraph, i: usize, j: usize) -> Result<Word> {
    let left = build_hat_word(g, g.succ(j), i, g.succ(j))?;
    let right = build_hat_word(g, g.succ(i), j, g.succ(i))?;
    Ok(left.concat(&right))
}

pub fn generate_presentation(g: &SignedCoxeterGraph) -> Result<Presentation> {
    let n = g.n();
    let shape = g.shape();
    if shape == Shape::General {
        return Err(Error::WrongShape {
            expected: "line or cycle",
        });
    }
    let cyclic = shape == Shape::Cycle;
    let mut rels = Vec::new();
    for i in 0..n {
        rels.push(Relator::new(Word::generator(i), 2, RelatorOrigin::Involution));
    }
    for i in 0..n {
        for j in i + 2..n {
            if !cyclic || j - i <= n - 2 {
                rels.push(Relator::new(Word::new(vec![i, j]), 2, RelatorOrigin::Commuting));
            }
        }
    }
    let braid_pairs = if cyclic { n } else { n - 1 };
    for i in 0..braid_pairs {
        let k = (i + 1) % n;
        if g.sign(i) == g.sign(k) {
            rels.push(Relator::new(Word::new(vec![i, k]), 3, RelatorOrigin::Braid));
        }
    }
    for i in 0..n {
        for j in 0..n {
            let qualifies_pair = if cyclic {
                j != i && j != g.pred(i) && j != g.succ(i)
            } else {
                j >= i + 2
            };
            if qualifies_pair && g.sign(i) == g.sign(j) {
                rels.push(Relator::new(arc_cube_base(g, i, j)?, 3, RelatorOrigin::GeneralizedLine));
            }
        }
    }
    if cyclic {
        for i in 0..n {
            for j in i + 1..n {
                if compute_kappa(g, i, j)? == 0 {
                    rels.push(Relator::new(arc_square_base(g, i, j)?, 2, RelatorOrigin::CycleArcSquare));
                }
            }
        }
    }
    Ok(Presentation::from_relators(n, rels))
}

fn relator_parameters(r: &Relator) -> Vec<usize> {
    let mut p = r.base.one_based();
    p.push(r.exponent as usize);
    p
}

/// `π(base)^exponent = I` for each relator.
pub fn verify_presentation(rep: &Representation, p: &Presentation) -> Result<Vec<IdentityReport>> {
    p.relators
        .iter()
        .map(|r| {
            let m = evaluate(rep, &r.base)?.pow(r.exponent as u64);
            let diff = &m - rep.identity();
            let mut report = IdentityReport::from_difference(
                &format!("relator_{}", r.origin.label()),
                relator_parameters(r),
                diff,
            );
            report.detail = Some(r.to_text());
            Ok(report)
        })
        .collect()
}

/// The order of each base is exactly its stated exponent.
pub fn minimality_check(rep: &Representation, p: &Presentation) -> Result<Vec<IdentityReport>> {
    p.relators
        .iter()
        .map(|r| {
            let order = element_order(rep, &r.base)?;
            Ok(IdentityReport::from_check(
                &format!("minimal_{}", r.origin.label()),
                relator_parameters(r),
                order == OrderResult::Finite(r.exponent as u64),
                format!("{} has order {}", r.to_text(), order),
            ))
        })
        .collect()
}

pub fn sign_flip_equivalent(g: &SignedCoxeterGraph) -> Result<bool> {
    Ok(generate_presentation(g)?.equivalent(&generate_presentation(&g.negate())?))
}

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum ExportFormat {
    Text,
    Json,
    Gap,
}

impl FromStr for ExportFormat {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        match s {
            "text" => Ok(ExportFormat::Text),
            "json" => Ok(ExportFormat::Json),
            "gap" => Ok(ExportFormat::Gap),
            other => Err(Error::UnknownFormat(other.to_string())),
        }
    }
}

pub fn export(p: &Presentation, format: ExportFormat) -> String {
    match format {
        ExportFormat::Text => p.relators.iter().map(Relator::to_text).collect::<Vec<_>>().join(", "),
        ExportFormat::Json => serde_json::to_string_pretty(p).expect("presentation serializes"),
        ExportFormat::Gap => {
            let names: Vec<String> = (1..=p.n).map(|k| format!("\"s{k}\"")).collect();
            let binds: Vec<String> = (1..=p.n).map(|k| format!("s{k} := F.{k};;")).collect();
            let rels: Vec<String> = p.relators.iter().map(Relator::to_text).collect();
            format!(
                "F := FreeGroup({});;\n{}\nrels := [ {} ];;\nG := F / rels;;\n",
                names.join(", "),
                binds.join(" "),
                rels.join(", ")
            )
        }
    }
}
