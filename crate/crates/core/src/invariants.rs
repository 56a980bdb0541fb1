//! Graph-level quantities behind the rank formulas: clique and cut
//! polynomials, vertex connectivity, and the LCS and Chen rank tables.

use num_bigint::BigInt;
use num_traits::{Signed, Zero};
use rayon::prelude::*;

use crate::error::{Error, Result};
use crate::graph::{Edge, Graph, VertexSet};
use crate::polyseries::{
    binomial, geometric_substitution, product_form_inversion, IntPoly, RankTable,
};
use crate::DEFAULT_GUARD;

/// `P_Γ(t) = Σ f_k t^k`, where `f_k` counts the `k`-cliques (`f_0 = 1`).
pub fn clique_polynomial(g: &Graph) -> IntPoly {
    IntPoly::new(g.clique_counts().into_iter().map(BigInt::from).collect())
}

/// Clique polynomial by edge deletion. Cliques through an edge `{u, v}` are
/// `{u, v}` plus a clique of the common neighbourhood, so
/// `P_Γ = P_{Γ∖e} + t² P_{Γ[N(u) ∩ N(v)]}`; an edgeless graph on `m`
/// vertices gives `1 + m t`.
pub fn clique_polynomial_recursive(g: &Graph) -> IntPoly {
    fn go(adj: &mut [u64], within: u64) -> IntPoly {
        let Some(u) = VertexSet::from_bits(within)
            .iter()
            .find(|&u| adj[u] & within != 0)
        else {
            return IntPoly::from_i64(&[1, within.count_ones() as i64]);
        };
        let v = (adj[u] & within).trailing_zeros() as usize;
        let common = adj[u] & adj[v] & within;
        adj[u] &= !(1 << v);
        adj[v] &= !(1 << u);
        let without = go(adj, within);
        adj[u] |= 1 << v;
        adj[v] |= 1 << u;
        let through = go(adj, common);
        &without + &(&through * &IntPoly::monomial(BigInt::from(1), 2))
    }
    let mut adj = g.adjacency().to_vec();
    go(&mut adj, g.vertices().bits())
}

/// Cut numbers `c_j(Γ) = Σ_{|W| = j} b̃_0(Γ_W)` for `j = 0..=n`; the entries
/// for `j < 2` are always zero.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct CutProfile {
    c: Vec<BigInt>,
}

impl CutProfile {
    /// `c[j]` for `j = 0..=n`.
    pub fn new(c: Vec<BigInt>) -> Result<Self> {
        if c.iter().take(2).any(|x| !x.is_zero()) {
            return Err(Error::Invariant("cut numbers c_0, c_1 must vanish".into()));
        }
        if c.iter().any(Signed::is_negative) {
            return Err(Error::Invariant("negative cut number".into()));
        }
        Ok(CutProfile { c })
    }

    /// Number of vertices of the underlying graph.
    pub fn n(&self) -> usize {
        self.c.len().saturating_sub(1)
    }

    /// `c_j`, zero outside `0..=n`.
    pub fn get(&self, j: usize) -> BigInt {
        self.c.get(j).cloned().unwrap_or_default()
    }

    pub fn as_slice(&self) -> &[BigInt] {
        &self.c
    }

    /// Largest `j` with `c_j != 0`.
    pub fn top_degree(&self) -> Option<usize> {
        self.c.iter().rposition(|x| !x.is_zero())
    }

    pub fn to_polynomial(&self) -> IntPoly {
        IntPoly::new(self.c.clone())
    }

    /// Profile of `Γ` from the profile of `Γ ∖ e`, where `e` is a near-bridge
    /// of `Γ`: `c_j(Γ) = c_j(Γ∖e) - C(n-2, j-2)` for `j < n`. The top entry
    /// `c_n(Γ) = b̃_0(Γ)` is not determined by the lemma and is supplied.
    pub fn restore_near_bridge(&self, reduced_b0_whole: usize) -> Result<Self> {
        let n = self.n();
        let mut c = self.c.clone();
        for (j, cj) in c.iter_mut().enumerate().take(n).skip(2) {
            *cj -= binomial(n - 2, j - 2);
        }
        if n >= 2 {
            c[n] = BigInt::from(reduced_b0_whole);
        }
        CutProfile::new(c)
    }

    /// Profile of `Γ' ⊔ K_1` from that of `Γ'`:
    /// `c_j(Γ) = c_j(Γ') + c_{j-1}(Γ') + C(|V_Γ| - 1, j - 1)` for `j ≥ 2`.
    pub fn with_isolated_vertex(&self) -> Self {
        let n = self.n() + 1;
        let mut c = vec![BigInt::zero(); n + 1];
        for (j, cj) in c.iter_mut().enumerate().skip(2) {
            *cj = self.get(j) + self.get(j - 1) + binomial(n - 1, j - 1);
        }
        CutProfile { c }
    }
}

fn check_guard(g: &Graph, guard: usize) -> Result<()> {
    if g.n() > guard {
        Err(Error::GuardExceeded { n: g.n(), guard })
    } else {
        Ok(())
    }
}

/// Subsets per parallel work unit.
const CHUNK_BITS: usize = 12;

/// Runs `visit` over every subset of `0..n` split into fixed chunks, folding
/// per-chunk accumulators with `merge`. The chunking is independent of the
/// thread count, and callers only use commutative, associative merges.
pub(crate) fn sweep_subsets<A, F, M>(n: usize, init: A, visit: F, merge: M) -> A
where
    A: Clone + Send + Sync,
    F: Fn(&mut A, u64) + Send + Sync,
    M: Fn(A, A) -> A + Send + Sync,
{
    let low = n.min(CHUNK_BITS);
    let chunks = 1u64 << (n - low);
    let per_chunk = 1u64 << low;
    (0..chunks)
        .into_par_iter()
        .map(|chunk| {
            let mut acc = init.clone();
            let base = chunk << low;
            for w in base..base + per_chunk {
                visit(&mut acc, w);
            }
            acc
        })
        .reduce(|| init.clone(), merge)
}

/// Cut numbers by a single sweep over all `2^n` subsets, with the default
/// enumeration guard.
pub fn cut_numbers(g: &Graph) -> Result<CutProfile> {
    cut_numbers_guarded(g, DEFAULT_GUARD)
}

pub fn cut_numbers_guarded(g: &Graph, guard: usize) -> Result<CutProfile> {
    check_guard(g, guard)?;
    let n = g.n();
    let counts = sweep_subsets(
        n,
        vec![0u64; n + 1],
        |acc, w| {
            let w = VertexSet::from_bits(w);
            if w.len() >= 2 {
                acc[w.len()] += g.component_count(w) as u64 - 1;
            }
        },
        |mut a, b| {
            a.iter_mut().zip(b).for_each(|(x, y)| *x += y);
            a
        },
    );
    CutProfile::new(counts.into_iter().map(BigInt::from).collect())
}

/// `Q_Γ(t) = Σ_{j ≥ 2} c_j(Γ) t^j`.
pub fn cut_polynomial(g: &Graph) -> Result<IntPoly> {
    Ok(cut_numbers(g)?.to_polynomial())
}

pub fn cut_polynomial_guarded(g: &Graph, guard: usize) -> Result<IntPoly> {
    Ok(cut_numbers_guarded(g, guard)?.to_polynomial())
}

/// Cut numbers of `g` from the enumerated profile of `g ∖ e`, for a
/// near-bridge `e`.
pub fn cut_recursion_near_bridge(g: &Graph, e: Edge) -> Result<CutProfile> {
    if !g.is_near_bridge(e)? {
        return Err(Error::NotNearBridge(e.0, e.1));
    }
    let without = cut_numbers(&g.remove_edge(e)?)?;
    without.restore_near_bridge(g.component_count(g.vertices()) - 1)
}

/// Cut numbers of `g` from the enumerated profile of `g` minus an isolated
/// vertex.
pub fn cut_recursion_add_singleton(g: &Graph) -> Result<CutProfile> {
    let v = g.isolated_vertex().ok_or(Error::NoIsolatedVertex)?;
    let rest = g.remove_vertices(VertexSet::singleton(v))?;
    Ok(cut_numbers(&rest)?.with_isolated_vertex())
}

/// Vertex connectivity: the largest `r` such that deleting fewer than `r`
/// vertices always leaves a connected graph. Complete graphs get `κ = n`.
#[derive(Clone, Copy, Debug, PartialEq, Eq, PartialOrd, Ord)]
pub struct Connectivity {
    pub kappa: usize,
}

/// Connectivity via unit-capacity max flow between non-adjacent pairs
/// (Menger), so it needs no subset enumeration.
pub fn connectivity(g: &Graph) -> Connectivity {
    let n = g.n();
    if n == 0 || !g.is_connected() {
        return Connectivity { kappa: 0 };
    }
    let mut best = n;
    for s in 0..n {
        for t in s + 1..n {
            if !g.is_adjacent(s, t) {
                best = best.min(local_vertex_connectivity(g, s, t, best));
            }
        }
    }
    Connectivity { kappa: best }
}

/// Maximum number of internally disjoint `s`–`t` paths, capped at `cap`.
fn local_vertex_connectivity(g: &Graph, s: usize, t: usize, cap: usize) -> usize {
    // node 2v is v_in, 2v+1 is v_out
    let n = g.n();
    let size = 2 * n;
    let mut residual = vec![vec![0u8; size]; size];
    for v in 0..n {
        residual[2 * v][2 * v + 1] = if v == s || v == t { n as u8 } else { 1 };
        for u in g.neighbors(v) {
            residual[2 * v + 1][2 * u] = n as u8;
        }
    }
    let (source, sink) = (2 * s + 1, 2 * t);
    let mut flow = 0;
    while flow < cap {
        let mut prev = vec![usize::MAX; size];
        prev[source] = source;
        let mut queue = std::collections::VecDeque::from([source]);
        while let Some(x) = queue.pop_front() {
            if x == sink {
                break;
            }
            for y in 0..size {
                if residual[x][y] > 0 && prev[y] == usize::MAX {
                    prev[y] = x;
                    queue.push_back(y);
                }
            }
        }
        if prev[sink] == usize::MAX {
            break;
        }
        let mut y = sink;
        while y != source {
            let x = prev[y];
            residual[x][y] -= 1;
            residual[y][x] += 1;
            y = x;
        }
        flow += 1;
    }
    flow
}

/// LCS ranks `φ_1..φ_kmax` from `∏ (1 - t^k)^{φ_k} = P_Γ(-t)`.
pub fn lcs_ranks(g: &Graph, kmax: usize) -> Result<RankTable> {
    product_form_inversion(&clique_polynomial(g).eval_neg(), kmax)
}

/// Chen ranks: `θ_1 = |V|` and `Σ_{k ≥ 2} θ_k t^k = Q_Γ(t/(1-t))`.
pub fn chen_ranks(g: &Graph, kmax: usize) -> Result<RankTable> {
    chen_ranks_guarded(g, kmax, DEFAULT_GUARD)
}

pub fn chen_ranks_guarded(g: &Graph, kmax: usize, guard: usize) -> Result<RankTable> {
    chen_ranks_from_cut(&cut_polynomial_guarded(g, guard)?, g.n(), kmax)
}

pub(crate) fn chen_ranks_from_cut(q: &IntPoly, n: usize, kmax: usize) -> Result<RankTable> {
    Ok(geometric_substitution(q, kmax)?.with_rank(1, BigInt::from(n)))
}
