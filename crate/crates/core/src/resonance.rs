//! First resonance variety and the BNS invariant `Σ¹`.
//!
//! The resonance variety `R¹` is a union of coordinate subspaces `H_W`, one
//! for each inclusion-maximal vertex set `W` whose induced subgraph is
//! disconnected. `Σ¹` is described by its combinatorial criterion: a
//! character belongs to it iff its support induces a connected, dominating
//! subgraph.

use num_rational::BigRational;
use num_traits::Zero;
use rayon::prelude::*;

use crate::error::{Error, Result};
use crate::graph::{Graph, VertexSet};
use crate::linalg;
use crate::DEFAULT_GUARD;

/// A rational point of `H¹ = Q^V`, one coordinate per vertex.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Character {
    values: Vec<BigRational>,
}

impl Character {
    pub fn new(values: Vec<BigRational>) -> Self {
        Character { values }
    }

    pub fn from_integers(values: &[i64]) -> Self {
        Character::new(
            values
                .iter()
                .map(|&v| BigRational::from_integer(v.into()))
                .collect(),
        )
    }

    pub fn values(&self) -> &[BigRational] {
        &self.values
    }

    pub fn support(&self) -> VertexSet {
        self.values
            .iter()
            .enumerate()
            .filter(|(_, v)| !v.is_zero())
            .map(|(i, _)| i)
            .collect()
    }

    pub fn is_zero(&self) -> bool {
        self.values.iter().all(Zero::is_zero)
    }

    pub fn is_integral(&self) -> bool {
        self.values.iter().all(BigRational::is_integer)
    }

    fn check(&self, g: &Graph) -> Result<()> {
        if self.values.len() == g.n() {
            Ok(())
        } else {
            Err(Error::OutOfRange(format!(
                "character has {} coordinates, graph has {} vertices",
                self.values.len(),
                g.n()
            )))
        }
    }
}

/// `R¹(G_Γ)` as a list of coordinate subspaces.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct ResonanceDescription {
    pub ambient_dim: usize,
    /// Maximal `W` with `Γ_W` disconnected, largest first, then
    /// lexicographic.
    pub components: Vec<VertexSet>,
    pub codim: usize,
}

impl ResonanceDescription {
    /// Whether the support of `a` lies in some component. The zero
    /// character always does.
    pub fn contains(&self, a: &Character) -> bool {
        let s = a.support();
        s.is_empty() || self.components.iter().any(|&w| s.is_subset(w))
    }
}

/// Intersection-lattice data of a resonance description, invariant under
/// reordering the components.
#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub struct LatticeFingerprint {
    /// Sorted component dimensions.
    pub dimensions: Vec<usize>,
    /// Sorted dimensions of all pairwise intersections.
    pub pairs: Vec<usize>,
    /// Sorted dimensions of all triple intersections.
    pub triples: Vec<usize>,
}

pub fn resonance_components(g: &Graph) -> Result<ResonanceDescription> {
    resonance_components_guarded(g, DEFAULT_GUARD)
}

/// Enumerates all `2^n` subsets once to mark the disconnected ones, then
/// keeps those `W` for which every one-vertex extension `W ∪ {v}` is
/// connected. That test certifies maximality: a disconnected `W' ⊋ W`
/// either splits `W` too (so every extension of `W` stays disconnected) or
/// has a part missing `W`, any vertex of which gives a disconnected
/// extension.
pub fn resonance_components_guarded(g: &Graph, guard: usize) -> Result<ResonanceDescription> {
    let n = g.n();
    if n > guard {
        return Err(Error::GuardExceeded { n, guard });
    }
    let total = 1u64 << n;
    let words = total.div_ceil(64) as usize;
    let disconnected: Vec<u64> = (0..words)
        .into_par_iter()
        .map(|i| {
            let base = i as u64 * 64;
            (0..64u64.min(total))
                .filter(|&b| g.component_count(VertexSet::from_bits(base + b)) > 1)
                .fold(0u64, |acc, b| acc | 1 << b)
        })
        .collect();
    let is_disconnected = |w: u64| disconnected[(w / 64) as usize] >> (w % 64) & 1 == 1;
    let all = g.vertices().bits();
    let mut components: Vec<VertexSet> = (0..total)
        .into_par_iter()
        .filter(|&w| is_disconnected(w))
        .filter(|&w| {
            VertexSet::from_bits(all & !w)
                .iter()
                .all(|v| !is_disconnected(w | 1 << v))
        })
        .map(VertexSet::from_bits)
        .collect();
    components.sort_by(|a, b| a.component_order(*b));
    let largest = components.first().map_or(0, |w| w.len());
    Ok(ResonanceDescription {
        ambient_dim: n,
        components,
        codim: n - largest,
    })
}

/// Membership of `a` in `R¹` via the component list.
pub fn resonance_contains_combinatorial(g: &Graph, a: &Character) -> Result<bool> {
    a.check(g)?;
    if a.is_zero() {
        return Ok(true);
    }
    Ok(resonance_components(g)?.contains(a))
}

/// Membership of `a` in `R¹` by linear algebra: `a` is resonant iff some
/// `a'` independent of `a` has `a ∧ a'` killed by the cup product, i.e.
/// `a_v x_w - a_w x_v = 0` on every edge has a solution space of dimension
/// at least 2.
pub fn resonance_contains_linear(g: &Graph, a: &Character) -> Result<bool> {
    a.check(g)?;
    if a.is_zero() {
        return Ok(true);
    }
    let n = g.n();
    let rows = g
        .edges()
        .into_iter()
        .map(|(v, w)| {
            let mut row = vec![BigRational::zero(); n];
            row[w] = a.values[v].clone();
            row[v] = -a.values[w].clone();
            row
        })
        .collect();
    Ok(linalg::nullity(rows, n) >= 2)
}

/// `χ ∈ Σ¹(G_Γ)` iff the support of `χ` induces a connected subgraph that
/// dominates `Γ`.
pub fn sigma1_contains(g: &Graph, chi: &Character) -> Result<bool> {
    chi.check(g)?;
    if chi.is_zero() {
        return Err(Error::ZeroCharacter);
    }
    let s = chi.support();
    let dominating = g
        .vertices()
        .difference(s)
        .iter()
        .all(|v| !g.neighbors(v).intersection(s).is_empty());
    Ok(dominating && g.is_connected_on(s))
}

/// For an integral character `χ`, `ker χ` is finitely generated iff `χ`
/// is not resonant.
pub fn kernel_finitely_generated(g: &Graph, chi: &Character) -> Result<bool> {
    chi.check(g)?;
    if chi.is_zero() {
        return Err(Error::ZeroCharacter);
    }
    if !chi.is_integral() {
        return Err(Error::NonIntegralCharacter);
    }
    Ok(!resonance_contains_combinatorial(g, chi)?)
}

pub fn lattice_fingerprint(r: &ResonanceDescription) -> LatticeFingerprint {
    let c = &r.components;
    let mut dimensions: Vec<usize> = c.iter().map(|w| w.len()).collect();
    let mut pairs = Vec::new();
    let mut triples = Vec::new();
    for i in 0..c.len() {
        for j in i + 1..c.len() {
            let ij = c[i].intersection(c[j]);
            pairs.push(ij.len());
            triples.extend(c[j + 1..].iter().map(|w| ij.intersection(*w).len()));
        }
    }
    dimensions.sort_unstable();
    pairs.sort_unstable();
    triples.sort_unstable();
    LatticeFingerprint {
        dimensions,
        pairs,
        triples,
    }
}
