//! The mixed-sign geometric representation of a simply-laced graph.
//!
//! Reflections act on column vectors: column `j` of `π_{s_i}` is the image
//! of the basis vector `e_j`. With this convention `τ_i = π_{s_i} − I` is
//! supported on row `i` alone.

use num_bigint::BigInt;
use num_traits::Zero;
use serde::Serialize;

use crate::error::{Error, Result};
use crate::exact::ExactMatrix;
use crate::graph::SignedCoxeterGraph;

/// The `i`-th row of `τ_i`.
#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct RowVector(pub Vec<BigInt>);

impl RowVector {
    pub fn len(&self) -> usize {
        self.0.len()
    }

    pub fn is_empty(&self) -> bool {
        self.0.is_empty()
    }

    pub fn entries(&self) -> &[BigInt] {
        &self.0
    }
}

/// `B(e_i, e_j)`: `2 f_i` on the diagonal, `−1 = −2cos(π/3)` on edges and
/// `0` on commuting pairs.
pub fn bilinear_form(g: &SignedCoxeterGraph) -> ExactMatrix {
    let n = g.n();
    let mut b = ExactMatrix::zero(n);
    for i in 0..n {
        for j in 0..n {
            let v: i64 = if i == j {
                2 * g.sign(i).value()
            } else if g.m(i, j) == 3 {
                -1
            } else {
                0
            };
            b.set(i, j, v);
        }
    }
    b
}

/// `π_{s_i}(e_j) = −e_j` for `i = j`, `e_j` when `m_{i,j} = 2`, and
/// `e_j + f_i e_i` when `m_{i,j} = 3`.
pub fn reflections(g: &SignedCoxeterGraph) -> Vec<ExactMatrix> {
    let n = g.n();
    (0..n)
        .map(|i| {
            let mut p = ExactMatrix::identity(n);
            p.set(i, i, -1);
            for j in 0..n {
                if g.is_adjacent(i, j) {
                    p.set(i, j, g.sign(i).value());
                }
            }
            p
        })
        .collect()
}

#[derive(Debug, Clone)]
pub struct Representation {
    graph: SignedCoxeterGraph,
    bform: ExactMatrix,
    reflections: Vec<ExactMatrix>,
    taus: Vec<ExactMatrix>,
    identity: ExactMatrix,
}

impl Representation {
    pub fn new(graph: SignedCoxeterGraph) -> Self {
        let n = graph.n();
        let bform = bilinear_form(&graph);
        let reflections = reflections(&graph);
        let identity = ExactMatrix::identity(n);
        let taus = reflections.iter().map(|p| p - &identity).collect();
        Representation {
            graph,
            bform,
            reflections,
            taus,
            identity,
        }
    }

    pub fn graph(&self) -> &SignedCoxeterGraph {
        &self.graph
    }

    pub fn n(&self) -> usize {
        self.graph.n()
    }

    pub fn bform(&self) -> &ExactMatrix {
        &self.bform
    }

    pub fn reflections(&self) -> &[ExactMatrix] {
        &self.reflections
    }

    pub fn reflection(&self, i: usize) -> Result<&ExactMatrix> {
        self.check_index(i)?;
        Ok(&self.reflections[i])
    }

    pub fn identity(&self) -> &ExactMatrix {
        &self.identity
    }

    /// `τ_i = π_{s_i} − I`.
    pub fn tau(&self, i: usize) -> Result<&ExactMatrix> {
        self.check_index(i)?;
        Ok(&self.taus[i])
    }

    pub fn taus(&self) -> &[ExactMatrix] {
        &self.taus
    }

    /// `ν_i`, the only nonzero row of `τ_i`.
    pub fn nu(&self, i: usize) -> Result<RowVector> {
        self.check_index(i)?;
        Ok(RowVector(self.taus[i].row(i).to_vec()))
    }

    pub fn det_bform(&self) -> BigInt {
        self.bform.det()
    }

    /// Exact singularity test of `B`.
    pub fn is_degenerate(&self) -> bool {
        self.det_bform().is_zero()
    }

    pub fn check_index(&self, i: usize) -> Result<()> {
        if i < self.n() {
            Ok(())
        } else {
            Err(Error::IndexOutOfRange {
                index: i + 1,
                n: self.n(),
            })
        }
    }
}
