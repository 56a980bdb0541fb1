//! Exact algebraic invariants of right-angled Artin groups.
//!
//! Every quantity here is read off the defining graph `Γ` of the group: the
//! clique polynomial and cut polynomial, lower central series and Chen ranks,
//! the first resonance variety and BNS invariant, Stanley–Reisner Hilbert
//! series, and the rational homotopy ranks of the higher cubical complexes.
//! All arithmetic is exact (arbitrary precision integers and rationals).

pub mod error;
pub mod graph;
pub mod invariants;
pub mod io;
mod linalg;
pub mod oracles;
pub mod polyseries;
pub mod regression;
pub mod rescaling;
pub mod resonance;
pub mod stanley_reisner;

pub use error::{Error, Result};
pub use graph::{ComponentPartition, Edge, Graph, VertexSet};
pub use invariants::{Connectivity, CutProfile};
pub use polyseries::{IntPoly, RankTable, RatSeries};
pub use resonance::{Character, LatticeFingerprint, ResonanceDescription};

/// Default truncation for rank tables.
pub const DEFAULT_KMAX: usize = 12;
/// Default truncation degree for Hilbert and Poincaré series.
pub const DEFAULT_DMAX: usize = 12;
/// Largest vertex count for which `2^n` subset enumeration runs without an
/// explicit override.
pub const DEFAULT_GUARD: usize = 24;
