//! Finite simplicial graphs on at most 64 vertices.
//!
//! Vertices are indexed densely `0..n` and every vertex subset is a bitmask,
//! so membership tests and neighbourhood intersections during the `2^n`
//! subset sweeps are single word operations. Labels are kept separately and
//! only matter for input and output.

use std::cmp::Ordering;
use std::collections::{BTreeSet, HashMap};
use std::fmt;

use crate::error::{Error, Result};

/// Hard ceiling imposed by the `u64` subset representation.
pub const MAX_VERTICES: usize = 64;

/// An unordered edge given by two vertex indices.
pub type Edge = (usize, usize);

/// A subset of the vertices of some graph, stored as a bitmask.
#[derive(Clone, Copy, Default, PartialEq, Eq, Hash)]
pub struct VertexSet(u64);

impl VertexSet {
    pub const EMPTY: VertexSet = VertexSet(0);

    pub fn from_bits(bits: u64) -> Self {
        VertexSet(bits)
    }

    /// The set `{0, .., n-1}`.
    pub fn full(n: usize) -> Self {
        if n >= 64 {
            VertexSet(u64::MAX)
        } else {
            VertexSet((1u64 << n) - 1)
        }
    }

    pub fn singleton(v: usize) -> Self {
        VertexSet(1u64 << v)
    }

    pub fn from_indices<I: IntoIterator<Item = usize>>(indices: I) -> Self {
        VertexSet(indices.into_iter().fold(0u64, |acc, v| acc | (1u64 << v)))
    }

    pub fn bits(self) -> u64 {
        self.0
    }

    pub fn len(self) -> usize {
        self.0.count_ones() as usize
    }

    pub fn is_empty(self) -> bool {
        self.0 == 0
    }

    pub fn contains(self, v: usize) -> bool {
        v < 64 && self.0 >> v & 1 == 1
    }

    pub fn with(self, v: usize) -> Self {
        VertexSet(self.0 | 1u64 << v)
    }

    pub fn without(self, v: usize) -> Self {
        VertexSet(self.0 & !(1u64 << v))
    }

    pub fn union(self, other: Self) -> Self {
        VertexSet(self.0 | other.0)
    }

    pub fn intersection(self, other: Self) -> Self {
        VertexSet(self.0 & other.0)
    }

    pub fn difference(self, other: Self) -> Self {
        VertexSet(self.0 & !other.0)
    }

    pub fn is_subset(self, other: Self) -> bool {
        self.0 & !other.0 == 0
    }

    /// Smallest member, if any.
    pub fn first(self) -> Option<usize> {
        (self.0 != 0).then(|| self.0.trailing_zeros() as usize)
    }

    pub fn iter(self) -> VertexIter {
        VertexIter(self.0)
    }

    pub fn to_vec(self) -> Vec<usize> {
        self.iter().collect()
    }

    /// Lexicographic comparison of the increasing member lists.
    pub fn lex_cmp(self, other: Self) -> Ordering {
        self.iter().cmp(other.iter())
    }

    /// Size-descending, then lexicographic.
    pub fn component_order(self, other: Self) -> Ordering {
        other
            .len()
            .cmp(&self.len())
            .then_with(|| self.lex_cmp(other))
    }
}

impl fmt::Debug for VertexSet {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.debug_set().entries(self.iter()).finish()
    }
}

impl FromIterator<usize> for VertexSet {
    fn from_iter<I: IntoIterator<Item = usize>>(iter: I) -> Self {
        VertexSet::from_indices(iter)
    }
}

impl IntoIterator for VertexSet {
    type Item = usize;
    type IntoIter = VertexIter;

    fn into_iter(self) -> VertexIter {
        self.iter()
    }
}

/// Iterator over the members of a [`VertexSet`] in increasing order.
#[derive(Clone)]
pub struct VertexIter(u64);

impl Iterator for VertexIter {
    type Item = usize;

    fn next(&mut self) -> Option<usize> {
        if self.0 == 0 {
            return None;
        }
        let v = self.0.trailing_zeros() as usize;
        self.0 &= self.0 - 1;
        Some(v)
    }

    fn size_hint(&self) -> (usize, Option<usize>) {
        let n = self.0.count_ones() as usize;
        (n, Some(n))
    }
}

impl ExactSizeIterator for VertexIter {}

/// Connected components of an induced subgraph.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct ComponentPartition {
    pub blocks: Vec<VertexSet>,
}

impl ComponentPartition {
    /// Number of components minus one; `-1` for the empty vertex set.
    pub fn reduced_b0(&self) -> i64 {
        self.blocks.len() as i64 - 1
    }
}

/// A labeled, loopless graph without multiple edges.
#[derive(Clone, PartialEq, Eq)]
pub struct Graph {
    labels: Vec<String>,
    adj: Vec<u64>,
}

impl fmt::Debug for Graph {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let edges: Vec<String> = self
            .edges()
            .into_iter()
            .map(|(u, v)| format!("{}-{}", self.labels[u], self.labels[v]))
            .collect();
        f.debug_struct("Graph")
            .field("labels", &self.labels)
            .field("edges", &edges)
            .finish()
    }
}

impl Graph {
    /// Builds a graph, rejecting self-loops, repeated edges, repeated labels
    /// and out-of-range endpoints.
    pub fn new<I>(labels: Vec<String>, edges: I) -> Result<Self>
    where
        I: IntoIterator<Item = Edge>,
    {
        let n = labels.len();
        if n > MAX_VERTICES {
            return Err(Error::TooManyVertices {
                n,
                max: MAX_VERTICES,
            });
        }
        let mut seen = BTreeSet::new();
        for l in &labels {
            if !seen.insert(l.as_str()) {
                return Err(Error::DuplicateLabel(l.clone()));
            }
        }
        let mut adj = vec![0u64; n];
        for (u, v) in edges {
            for x in [u, v] {
                if x >= n {
                    return Err(Error::VertexOutOfRange { index: x, n });
                }
            }
            if u == v {
                return Err(Error::SelfLoop(labels[u].clone()));
            }
            if adj[u] >> v & 1 == 1 {
                return Err(Error::DuplicateEdge(labels[u].clone(), labels[v].clone()));
            }
            adj[u] |= 1 << v;
            adj[v] |= 1 << u;
        }
        Ok(Graph { labels, adj })
    }

    /// Graph on vertices labeled `1..=n`.
    pub fn numbered<I>(n: usize, edges: I) -> Result<Self>
    where
        I: IntoIterator<Item = Edge>,
    {
        Graph::new((1..=n).map(|i| i.to_string()).collect(), edges)
    }

    fn from_adjacency(labels: Vec<String>, adj: Vec<u64>) -> Self {
        debug_assert_eq!(labels.len(), adj.len());
        Graph { labels, adj }
    }

    pub fn n(&self) -> usize {
        self.labels.len()
    }

    pub fn labels(&self) -> &[String] {
        &self.labels
    }

    pub fn label(&self, v: usize) -> &str {
        &self.labels[v]
    }

    pub fn index_of(&self, label: &str) -> Option<usize> {
        self.labels.iter().position(|l| l == label)
    }

    pub fn vertices(&self) -> VertexSet {
        VertexSet::full(self.n())
    }

    /// Adjacency rows as bitmasks.
    pub fn adjacency(&self) -> &[u64] {
        &self.adj
    }

    pub fn neighbors(&self, v: usize) -> VertexSet {
        VertexSet(self.adj[v])
    }

    pub fn is_adjacent(&self, u: usize, v: usize) -> bool {
        u < self.n() && v < self.n() && self.adj[u] >> v & 1 == 1
    }

    /// Edges as `(u, v)` with `u < v`, sorted.
    pub fn edges(&self) -> Vec<Edge> {
        (0..self.n())
            .flat_map(|u| {
                VertexSet(self.adj[u] & !((2u64 << u) - 1))
                    .iter()
                    .map(move |v| (u, v))
            })
            .collect()
    }

    pub fn edge_count(&self) -> usize {
        self.adj
            .iter()
            .map(|a| a.count_ones() as usize)
            .sum::<usize>()
            / 2
    }

    /// Checks that `w` only names vertices of this graph.
    pub fn check_set(&self, w: VertexSet) -> Result<()> {
        match w.difference(self.vertices()).first() {
            Some(index) => Err(Error::VertexOutOfRange { index, n: self.n() }),
            None => Ok(()),
        }
    }

    fn check_vertex(&self, v: usize) -> Result<()> {
        if v < self.n() {
            Ok(())
        } else {
            Err(Error::VertexOutOfRange {
                index: v,
                n: self.n(),
            })
        }
    }

    /// The full subgraph on `w`, with vertices kept in this graph's order.
    pub fn induced_subgraph(&self, w: VertexSet) -> Result<Graph> {
        self.check_set(w)?;
        let keep = w.to_vec();
        let labels = keep.iter().map(|&v| self.labels[v].clone()).collect();
        let adj = keep
            .iter()
            .map(|&v| {
                keep.iter()
                    .enumerate()
                    .filter(|&(_, &u)| self.adj[v] >> u & 1 == 1)
                    .fold(0u64, |acc, (i, _)| acc | 1 << i)
            })
            .collect();
        Ok(Graph::from_adjacency(labels, adj))
    }

    /// The graph with the vertices of `w` (and their edges) deleted.
    pub fn remove_vertices(&self, w: VertexSet) -> Result<Graph> {
        self.check_set(w)?;
        self.induced_subgraph(self.vertices().difference(w))
    }

    pub fn remove_edge(&self, (u, v): Edge) -> Result<Graph> {
        if !self.is_adjacent(u, v) {
            return Err(Error::NotAnEdge(u, v));
        }
        let mut adj = self.adj.clone();
        adj[u] &= !(1 << v);
        adj[v] &= !(1 << u);
        Ok(Graph::from_adjacency(self.labels.clone(), adj))
    }

    /// Vertices reachable from `start` inside `within`.
    pub(crate) fn reach(adj: &[u64], within: u64, start: usize) -> u64 {
        let mut comp = 1u64 << start;
        let mut frontier = comp;
        while frontier != 0 {
            let v = frontier.trailing_zeros() as usize;
            frontier &= frontier - 1;
            let fresh = adj[v] & within & !comp;
            comp |= fresh;
            frontier |= fresh;
        }
        comp
    }

    /// Number of connected components of the subgraph induced on `w`.
    /// Does not validate `w`.
    pub fn component_count(&self, w: VertexSet) -> usize {
        let mut rest = w.0;
        let mut count = 0;
        while rest != 0 {
            let comp = Self::reach(&self.adj, w.0, rest.trailing_zeros() as usize);
            rest &= !comp;
            count += 1;
        }
        count
    }

    /// Whether the subgraph induced on `w` is connected (the empty set counts
    /// as connected).
    pub fn is_connected_on(&self, w: VertexSet) -> bool {
        match w.first() {
            None => true,
            Some(v) => Self::reach(&self.adj, w.0, v) == w.0,
        }
    }

    pub fn is_connected(&self) -> bool {
        self.is_connected_on(self.vertices())
    }

    pub fn components(&self, w: VertexSet) -> Result<ComponentPartition> {
        self.check_set(w)?;
        let mut blocks = Vec::new();
        let mut rest = w.0;
        while rest != 0 {
            let comp = Self::reach(&self.adj, w.0, rest.trailing_zeros() as usize);
            rest &= !comp;
            blocks.push(VertexSet(comp));
        }
        Ok(ComponentPartition { blocks })
    }

    /// Visits every clique (including the empty one) by ordered extension:
    /// a clique only grows by common neighbours above its largest vertex.
    pub fn for_each_clique<F: FnMut(VertexSet)>(&self, mut f: F) {
        fn extend<F: FnMut(VertexSet)>(adj: &[u64], clique: u64, candidates: u64, f: &mut F) {
            f(VertexSet(clique));
            let mut c = candidates;
            while c != 0 {
                let v = c.trailing_zeros() as usize;
                c &= c - 1;
                extend(adj, clique | 1 << v, c & adj[v], f);
            }
        }
        extend(&self.adj, 0, self.vertices().0, &mut f);
    }

    /// All cliques, grouped by size and lexicographic within each size.
    pub fn cliques(&self) -> Vec<VertexSet> {
        let mut out = Vec::new();
        self.for_each_clique(|c| out.push(c));
        out.sort_by(|a, b| a.len().cmp(&b.len()).then_with(|| a.lex_cmp(*b)));
        out
    }

    /// `f_k` for `k = 0..=ω`, where `ω` is the clique number.
    pub fn clique_counts(&self) -> Vec<u64> {
        let mut counts = vec![0u64; self.n() + 1];
        self.for_each_clique(|c| counts[c.len()] += 1);
        while counts.len() > 1 && counts.last() == Some(&0) {
            counts.pop();
        }
        counts
    }

    pub fn clique_number(&self) -> usize {
        self.clique_counts().len() - 1
    }

    fn merged_labels(g1: &Graph, g2: &Graph) -> Vec<String> {
        let clash = g1.labels.iter().any(|l| g2.labels.contains(l));
        if clash {
            g1.labels
                .iter()
                .map(|l| format!("L.{l}"))
                .chain(g2.labels.iter().map(|l| format!("R.{l}")))
                .collect()
        } else {
            g1.labels.iter().chain(&g2.labels).cloned().collect()
        }
    }

    fn combine(g1: &Graph, g2: &Graph, cross: bool) -> Result<Graph> {
        let (n1, n2) = (g1.n(), g2.n());
        if n1 + n2 > MAX_VERTICES {
            return Err(Error::TooManyVertices {
                n: n1 + n2,
                max: MAX_VERTICES,
            });
        }
        let left = VertexSet::full(n1).0;
        let right = VertexSet::full(n2).0 << n1;
        let adj = g1
            .adj
            .iter()
            .map(|&a| a | if cross { right } else { 0 })
            .chain(
                g2.adj
                    .iter()
                    .map(|&a| a << n1 | if cross { left } else { 0 }),
            )
            .collect();
        Ok(Graph::from_adjacency(Graph::merged_labels(g1, g2), adj))
    }

    /// Join: disjoint union plus every edge between the two sides. Labels
    /// are prefixed with `L.` / `R.` when the two label sets overlap.
    pub fn join(&self, other: &Graph) -> Result<Graph> {
        Graph::combine(self, other, true)
    }

    /// Disjoint union, with the same label disambiguation as [`Graph::join`].
    pub fn disjoint_union(&self, other: &Graph) -> Result<Graph> {
        Graph::combine(self, other, false)
    }

    pub fn complement(&self) -> Graph {
        let full = self.vertices().0;
        let adj = self
            .adj
            .iter()
            .enumerate()
            .map(|(v, &a)| full & !a & !(1 << v))
            .collect();
        Graph::from_adjacency(self.labels.clone(), adj)
    }

    /// Same graph with vertex `i` relabeled and moved to position `perm[i]`.
    pub fn permuted(&self, perm: &[usize]) -> Result<Graph> {
        let n = self.n();
        let mut labels = vec![String::new(); n];
        for (i, &p) in perm.iter().enumerate() {
            self.check_vertex(p)?;
            labels[p] = self.labels[i].clone();
        }
        let edges = self.edges().into_iter().map(|(u, v)| (perm[u], perm[v]));
        Graph::new(labels, edges)
    }

    /// True iff every cycle through `e` visits all vertices: equivalently,
    /// removing `e` and any single other vertex separates its endpoints.
    pub fn is_near_bridge(&self, (u, v): Edge) -> Result<bool> {
        let without = self.remove_edge((u, v))?;
        let all = self.vertices();
        Ok(all
            .without(u)
            .without(v)
            .iter()
            .all(|w| Graph::reach(&without.adj, all.without(w).0, u) >> v & 1 == 0))
    }

    /// An isolated vertex, if one exists.
    pub fn isolated_vertex(&self) -> Option<usize> {
        self.adj.iter().position(|&a| a == 0)
    }

    /// Built-in families: `path:n`, `dynkinD:n`, `cycle:n`, `complete:n`,
    /// `empty:n`, `ycycle:n`, `triforce6`, `grid6`. Vertices are labeled
    /// `1..=n`.
    pub fn family(spec: &str) -> Result<Graph> {
        let spec = spec.trim();
        let malformed = || Error::MalformedSpec(spec.to_string());
        let fixed = |edges: &[(usize, usize)]| {
            Graph::numbered(6, edges.iter().map(|&(u, v)| (u - 1, v - 1)))
        };
        match spec {
            "triforce6" => {
                return fixed(&[
                    (1, 2),
                    (1, 3),
                    (2, 3),
                    (2, 4),
                    (2, 5),
                    (3, 5),
                    (3, 6),
                    (4, 5),
                    (5, 6),
                ])
            }
            "grid6" => {
                return fixed(&[
                    (1, 2),
                    (2, 3),
                    (1, 4),
                    (2, 5),
                    (3, 6),
                    (4, 5),
                    (5, 6),
                    (1, 5),
                    (2, 6),
                ])
            }
            _ => {}
        }
        let (name, count) = spec.split_once(':').ok_or_else(malformed)?;
        let n: usize = count.trim().parse().map_err(|_| malformed())?;
        let min = match name.trim() {
            "path" => 1,
            "dynkinD" => 3,
            "cycle" => 3,
            "ycycle" => 4,
            "complete" | "empty" => 0,
            _ => return Err(malformed()),
        };
        if n < min {
            return Err(Error::FamilyRange {
                family: name.trim().to_string(),
                n,
                min,
            });
        }
        if n > MAX_VERTICES {
            return Err(Error::TooManyVertices {
                n,
                max: MAX_VERTICES,
            });
        }
        let path = |len: usize| (1..len).map(|i| (i - 1, i));
        let edges: Vec<Edge> = match name.trim() {
            "path" => path(n).collect(),
            "dynkinD" => path(n - 1).chain([(n - 3, n - 1)]).collect(),
            "cycle" => path(n).chain([(0, n - 1)]).collect(),
            "ycycle" => path(n - 1).chain([(0, n - 2), (0, n - 1)]).collect(),
            "complete" => (0..n)
                .flat_map(|u| (u + 1..n).map(move |v| (u, v)))
                .collect(),
            _ => Vec::new(),
        };
        Graph::numbered(n, edges)
    }
}

/// Map from label to index, for parsers.
pub(crate) fn label_index(labels: &[String]) -> HashMap<&str, usize> {
    labels
        .iter()
        .enumerate()
        .map(|(i, l)| (l.as_str(), i))
        .collect()
}
