//! Signed simply-laced Coxeter graphs.
//!
//! Vertices are indexed from 0 inside the crate. Every textual form (the
//! graph JSON document, words, CLI output) is 1-based.

use std::collections::VecDeque;
use std::fmt;

use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};

/// Vertex label `f_i`.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub enum Sign {
    Plus,
    Minus,
}

impl Sign {
    pub fn value(self) -> i64 {
        match self {
            Sign::Plus => 1,
            Sign::Minus => -1,
        }
    }

    pub fn flip(self) -> Sign {
        match self {
            Sign::Plus => Sign::Minus,
            Sign::Minus => Sign::Plus,
        }
    }
}

impl TryFrom<i64> for Sign {
    type Error = Error;

    fn try_from(v: i64) -> Result<Sign> {
        match v {
            1 => Ok(Sign::Plus),
            -1 => Ok(Sign::Minus),
            other => Err(Error::InvalidSign(other)),
        }
    }
}

impl std::ops::Mul for Sign {
    type Output = Sign;

    fn mul(self, rhs: Sign) -> Sign {
        if self == rhs {
            Sign::Plus
        } else {
            Sign::Minus
        }
    }
}

impl fmt::Display for Sign {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(match self {
            Sign::Plus => "+1",
            Sign::Minus => "-1",
        })
    }
}

/// Converts a slice of `±1` integers into signs.
pub fn signs_from_ints(values: &[i64]) -> Result<Vec<Sign>> {
    values.iter().map(|&v| Sign::try_from(v)).collect()
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, Serialize, Deserialize)]
#[serde(rename_all = "lowercase")]
pub enum Shape {
    Line,
    Cycle,
    General,
}

impl fmt::Display for Shape {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(match self {
            Shape::Line => "line",
            Shape::Cycle => "cycle",
            Shape::General => "general",
        })
    }
}

/// A Coxeter graph with `m_{i,j} ∈ {2,3}` off the diagonal and a sign on
/// every vertex.
#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub struct SignedCoxeterGraph {
    signs: Vec<Sign>,
    // row-major n×n, diagonal 1
    m: Vec<u8>,
    shape: Shape,
}

impl SignedCoxeterGraph {
    /// Builds a line `1 - 2 - ... - n` or a simple cycle on `n` vertices.
    pub fn build(shape: Shape, signs: Vec<Sign>) -> Result<Self> {
        let n = signs.len();
        let (name, min) = match shape {
            Shape::Line => ("line", 2),
            Shape::Cycle => ("cycle", 3),
            Shape::General => {
                return Err(Error::InvalidParameters(
                    "general graphs need an explicit edge list".into(),
                ))
            }
        };
        if n < min {
            return Err(Error::TooFewVertices {
                shape: name,
                got: n,
                min,
            });
        }
        let mut edges: Vec<(usize, usize)> = (0..n - 1).map(|i| (i, i + 1)).collect();
        if shape == Shape::Cycle {
            edges.push((0, n - 1));
        }
        Ok(Self::from_edges_unchecked(signs, &edges))
    }

    pub fn line(signs: Vec<Sign>) -> Result<Self> {
        Self::build(Shape::Line, signs)
    }

    pub fn cycle(signs: Vec<Sign>) -> Result<Self> {
        Self::build(Shape::Cycle, signs)
    }

    /// Builds a graph from 0-based simply-laced edges; absent pairs get `m = 2`.
    pub fn from_edges(signs: Vec<Sign>, edges: &[(usize, usize)]) -> Result<Self> {
        let n = signs.len();
        if n == 0 {
            return Err(Error::TooFewVertices {
                shape: "graph",
                got: 0,
                min: 1,
            });
        }
        for &(i, j) in edges {
            if i >= n || j >= n {
                return Err(Error::IndexOutOfRange {
                    index: i.max(j) + 1,
                    n,
                });
            }
            if i == j {
                return Err(Error::MalformedGraph(format!("loop at vertex {}", i + 1)));
            }
        }
        Ok(Self::from_edges_unchecked(signs, edges))
    }

    fn from_edges_unchecked(signs: Vec<Sign>, edges: &[(usize, usize)]) -> Self {
        let n = signs.len();
        let mut m = vec![2u8; n * n];
        for i in 0..n {
            m[i * n + i] = 1;
        }
        for &(i, j) in edges {
            m[i * n + j] = 3;
            m[j * n + i] = 3;
        }
        let shape = detect_shape(n, &m);
        SignedCoxeterGraph { signs, m, shape }
    }

    pub fn n(&self) -> usize {
        self.signs.len()
    }

    pub fn signs(&self) -> &[Sign] {
        &self.signs
    }

    pub fn sign(&self, i: usize) -> Sign {
        self.signs[i]
    }

    /// `m_{i,j}`; 1 on the diagonal.
    pub fn m(&self, i: usize, j: usize) -> u8 {
        self.m[i * self.n() + j]
    }

    pub fn coxeter_matrix(&self) -> Vec<Vec<u8>> {
        let n = self.n();
        (0..n).map(|i| self.m[i * n..(i + 1) * n].to_vec()).collect()
    }

    pub fn shape(&self) -> Shape {
        self.shape
    }

    pub fn is_adjacent(&self, i: usize, j: usize) -> bool {
        i != j && self.m(i, j) == 3
    }

    /// 0-based simply-laced edges with `i < j`.
    pub fn edges(&self) -> Vec<(usize, usize)> {
        let n = self.n();
        let mut out = Vec::new();
        for i in 0..n {
            for j in i + 1..n {
                if self.m(i, j) == 3 {
                    out.push((i, j));
                }
            }
        }
        out
    }

    /// Cyclic successor (`n + 1 = 1`).
    pub fn succ(&self, i: usize) -> usize {
        (i + 1) % self.n()
    }

    /// Cyclic predecessor (`1 - 1 = n`).
    pub fn pred(&self, i: usize) -> usize {
        (i + self.n() - 1) % self.n()
    }

    /// Number of forward steps from `from` to `to` around the cycle.
    pub fn cyclic_distance(&self, from: usize, to: usize) -> usize {
        (to + self.n() - from) % self.n()
    }

    pub fn negate(&self) -> Self {
        SignedCoxeterGraph {
            signs: self.signs.iter().map(|s| s.flip()).collect(),
            m: self.m.clone(),
            shape: self.shape,
        }
    }

    /// 2-colourability of the graph of `m = 3` edges.
    pub fn is_bipartite(&self) -> bool {
        let n = self.n();
        let mut colour: Vec<Option<bool>> = vec![None; n];
        for start in 0..n {
            if colour[start].is_some() {
                continue;
            }
            colour[start] = Some(false);
            let mut queue = VecDeque::from([start]);
            while let Some(v) = queue.pop_front() {
                let c = colour[v].unwrap();
                for w in 0..n {
                    if !self.is_adjacent(v, w) {
                        continue;
                    }
                    match colour[w] {
                        None => {
                            colour[w] = Some(!c);
                            queue.push_back(w);
                        }
                        Some(cw) if cw == c => return false,
                        Some(_) => {}
                    }
                }
            }
        }
        true
    }

    pub fn product_of_signs(&self) -> Sign {
        self.signs.iter().fold(Sign::Plus, |acc, &s| acc * s)
    }

    pub fn all_signs(&self, s: Sign) -> bool {
        self.signs.iter().all(|&x| x == s)
    }

    /// Parses the graph JSON document.
    pub fn parse(text: &str) -> Result<Self> {
        let doc: GraphDocument =
            serde_json::from_str(text).map_err(|e| Error::MalformedGraph(e.to_string()))?;
        doc.into_graph()
    }

    pub fn to_document(&self) -> GraphDocument {
        let signs = self.signs.iter().map(|s| s.value()).collect();
        match self.shape {
            Shape::Line | Shape::Cycle => GraphDocument::Shaped {
                shape: self.shape,
                signs,
            },
            Shape::General => GraphDocument::Explicit {
                n: self.n(),
                signs,
                edges: self
                    .edges()
                    .into_iter()
                    .map(|(i, j)| [i as i64 + 1, j as i64 + 1, 3])
                    .collect(),
            },
        }
    }

    pub fn to_json(&self) -> String {
        serde_json::to_string(&self.to_document()).expect("graph document serializes")
    }
}

fn detect_shape(n: usize, m: &[u8]) -> Shape {
    let at = |i: usize, j: usize| m[i * n + j];
    let mut path_edges = 0;
    let mut other = 0;
    for i in 0..n {
        for j in i + 1..n {
            if at(i, j) != 3 {
                continue;
            }
            if j == i + 1 {
                path_edges += 1;
            } else {
                other += 1;
            }
        }
    }
    if n >= 2 && path_edges == n - 1 {
        if other == 0 {
            return Shape::Line;
        }
        if other == 1 && n >= 3 && at(0, n - 1) == 3 {
            return Shape::Cycle;
        }
    }
    Shape::General
}

impl fmt::Display for SignedCoxeterGraph {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{} [", self.shape)?;
        for (k, s) in self.signs.iter().enumerate() {
            if k > 0 {
                f.write_str(",")?;
            }
            write!(f, "{s}")?;
        }
        f.write_str("]")
    }
}

/// On-disk form of a graph.
#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
#[serde(untagged)]
pub enum GraphDocument {
    Shaped {
        shape: Shape,
        signs: Vec<i64>,
    },
    Explicit {
        n: usize,
        signs: Vec<i64>,
        edges: Vec<[i64; 3]>,
    },
}

impl GraphDocument {
    pub fn into_graph(self) -> Result<SignedCoxeterGraph> {
        match self {
            GraphDocument::Shaped { shape, signs } => {
                if shape == Shape::General {
                    return Err(Error::MalformedGraph(
                        "shape `general` requires the explicit edge form".into(),
                    ));
                }
                SignedCoxeterGraph::build(shape, signs_from_ints(&signs)?)
            }
            GraphDocument::Explicit { n, signs, edges } => {
                if signs.len() != n {
                    return Err(Error::MalformedGraph(format!(
                        "n = {n} but {} signs given",
                        signs.len()
                    )));
                }
                let signs = signs_from_ints(&signs)?;
                let mut labels: Vec<Option<i64>> = vec![None; n * n];
                let mut simple = Vec::new();
                for [a, b, m] in edges {
                    if a < 1 || b < 1 || a as usize > n || b as usize > n {
                        return Err(Error::IndexOutOfRange {
                            index: a.max(b).max(0) as usize,
                            n,
                        });
                    }
                    let (i, j) = (a as usize - 1, b as usize - 1);
                    if i == j {
                        return Err(Error::MalformedGraph(format!("loop at vertex {a}")));
                    }
                    let (lo, hi) = (i.min(j), i.max(j));
                    if let Some(prev) = labels[lo * n + hi] {
                        return Err(if prev == m {
                            Error::DuplicateEdge { i: lo + 1, j: hi + 1 }
                        } else {
                            Error::Asymmetric { i: lo + 1, j: hi + 1 }
                        });
                    }
                    if m != 2 && m != 3 {
                        return Err(Error::NotSimplyLaced { i: lo + 1, j: hi + 1, m });
                    }
                    labels[lo * n + hi] = Some(m);
                    if m == 3 {
                        simple.push((lo, hi));
                    }
                }
                SignedCoxeterGraph::from_edges(signs, &simple)
            }
        }
    }
}
