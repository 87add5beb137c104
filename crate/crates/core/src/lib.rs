//! Exact computations in mixed-sign simply-laced Coxeter groups.
//!
//! Vertices of a line or cycle graph carry signs `±1`, and the group is the
//! matrix group generated by the reflections of the associated geometric
//! representation. Everything is computed over arbitrary-precision integers.

#![allow(clippy::needless_range_loop)]

pub mod dickson;
pub mod enumerate;
pub mod error;
pub mod exact;
pub mod graph;
pub mod orders;
pub mod presentations;
pub mod repmat;
pub mod taucalc;
pub mod words;

pub use enumerate::{CycleClass, EnumerationResult};
pub use error::{Error, Result};
pub use exact::{ExactMatrix, IntPolynomial};
pub use graph::{Shape, Sign, SignedCoxeterGraph};
pub use orders::OrderResult;
pub use presentations::{Presentation, Relator, RelatorOrigin};
pub use repmat::Representation;
pub use taucalc::IdentityReport;
pub use words::Word;
