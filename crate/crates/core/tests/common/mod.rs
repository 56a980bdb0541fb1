//! Brute-force reference implementations shared by the integration suites.
//! They deliberately avoid the library's bitmask traversal and sweep code.

#![allow(dead_code)]

use num_bigint::BigInt;
use num_traits::{One, Zero};
use proptest::prelude::*;
use raag::Graph;

pub fn fam(spec: &str) -> Graph {
    Graph::family(spec).unwrap()
}

pub fn ints(v: &[i64]) -> Vec<BigInt> {
    v.iter().map(|&x| x.into()).collect()
}

/// Random graph on `min_n..=max_n` vertices, each edge present with
/// probability one half.
pub fn arb_graph(min_n: usize, max_n: usize) -> impl Strategy<Value = Graph> {
    (min_n..=max_n)
        .prop_flat_map(|n| {
            (
                Just(n),
                proptest::collection::vec(any::<bool>(), n * (n.max(1) - 1) / 2),
            )
        })
        .prop_map(|(n, bits)| {
            let pairs = (0..n).flat_map(|u| (u + 1..n).map(move |v| (u, v)));
            let edges: Vec<_> = pairs
                .zip(bits)
                .filter(|(_, b)| *b)
                .map(|(e, _)| e)
                .collect();
            Graph::numbered(n, edges).unwrap()
        })
}

/// Random labelled tree, built by attaching each new vertex to an earlier one.
pub fn arb_tree(max_n: usize) -> impl Strategy<Value = Vec<usize>> {
    (2..=max_n).prop_flat_map(|n| (1..n).map(|v| 0..v).collect::<Vec<_>>())
}

pub fn tree_from_parents(parents: &[usize]) -> Graph {
    let edges = parents.iter().enumerate().map(|(i, &p)| (p, i + 1));
    Graph::numbered(parents.len() + 1, edges).unwrap()
}

/// Members of the subset `w` of `0..n`, as a plain list.
pub fn members(w: u64, n: usize) -> Vec<usize> {
    (0..n).filter(|&v| w >> v & 1 == 1).collect()
}

/// Components of the induced subgraph on `w`, by union-find over the edge
/// list.
pub fn components_uf(g: &Graph, w: u64) -> usize {
    let n = g.n();
    let mut parent: Vec<usize> = (0..n).collect();
    fn find(p: &mut [usize], x: usize) -> usize {
        if p[x] != x {
            let r = find(p, p[x]);
            p[x] = r;
        }
        p[x]
    }
    for (u, v) in g.edges() {
        if w >> u & 1 == 1 && w >> v & 1 == 1 {
            let (a, b) = (find(&mut parent, u), find(&mut parent, v));
            parent[a] = b;
        }
    }
    members(w, n)
        .into_iter()
        .filter(|&v| find(&mut parent, v) == v)
        .count()
}

pub fn is_clique(g: &Graph, w: u64) -> bool {
    let m = members(w, g.n());
    m.iter()
        .enumerate()
        .all(|(i, &u)| m[i + 1..].iter().all(|&v| g.is_adjacent(u, v)))
}

/// `f_k` for `k = 0..=n` by testing every subset.
pub fn clique_counts_brute(g: &Graph) -> Vec<BigInt> {
    let n = g.n();
    let mut f = vec![BigInt::zero(); n + 1];
    for w in 0..1u64 << n {
        if is_clique(g, w) {
            f[w.count_ones() as usize] += 1;
        }
    }
    while f.len() > 1 && f.last().unwrap().is_zero() {
        f.pop();
    }
    f
}

pub fn cut_numbers_brute(g: &Graph) -> Vec<BigInt> {
    let n = g.n();
    let mut c = vec![BigInt::zero(); n + 1];
    for w in 0..1u64 << n {
        if w.count_ones() >= 2 {
            c[w.count_ones() as usize] += components_uf(g, w) - 1;
        }
    }
    c
}

/// Maximal disconnected subsets, found by testing every proper superset.
pub fn resonance_brute(g: &Graph) -> Vec<u64> {
    let n = g.n();
    let full = (1u64 << n) - 1;
    let disconnected: Vec<bool> = (0..=full).map(|w| components_uf(g, w) > 1).collect();
    let mut out: Vec<u64> = (0..=full)
        .filter(|&w| disconnected[w as usize])
        .filter(|&w| {
            let free = full & !w;
            // every nonempty subset s of the free vertices
            let mut s = free;
            while s != 0 {
                if disconnected[(w | s) as usize] {
                    return false;
                }
                s = (s - 1) & free;
            }
            true
        })
        .collect();
    out.sort_unstable();
    out
}

/// `κ` as `n - max |W|` over disconnected `W`, or `n` if there is none.
pub fn kappa_brute(g: &Graph) -> usize {
    let n = g.n();
    (0..1u64 << n)
        .filter(|&w| components_uf(g, w) > 1)
        .map(|w| n - w.count_ones() as usize)
        .min()
        .unwrap_or(n)
}

/// Number of degree-`d` monomials in `n` variables whose support is a clique,
/// by listing the monomials as exponent vectors.
pub fn sr_monomial_count(g: &Graph, d: usize) -> BigInt {
    fn go(g: &Graph, v: usize, left: usize, support: u64, out: &mut BigInt) {
        if v == g.n() {
            if left == 0 && is_clique(g, support) {
                *out += 1;
            }
            return;
        }
        for e in 0..=left {
            let s = if e > 0 { support | 1 << v } else { support };
            go(g, v + 1, left - e, s, out);
        }
    }
    let mut out = BigInt::zero();
    go(g, 0, d, 0, &mut out);
    out
}

/// `∏ (1 - t^k)^{r_k}` truncated at degree `order`, by repeated
/// multiplication with the binomial series `Σ_m C(r, m) (-t^k)^m`.
pub fn product_form(ranks: &[BigInt], order: usize) -> Vec<BigInt> {
    let mut acc = vec![BigInt::zero(); order + 1];
    acc[0] = BigInt::one();
    for (i, r) in ranks.iter().enumerate() {
        let k = i + 1;
        if k > order {
            break;
        }
        let mut binom = vec![BigInt::one()];
        for m in 1..=order / k {
            let prev = binom[m - 1].clone();
            binom.push(prev * (r - BigInt::from(m - 1)) / BigInt::from(m));
        }
        let mut next = vec![BigInt::zero(); order + 1];
        for (a, x) in acc.iter().enumerate() {
            for (m, b) in binom.iter().enumerate() {
                let d = a + k * m;
                if d > order {
                    break;
                }
                let term = x * b;
                if m % 2 == 1 {
                    next[d] -= term;
                } else {
                    next[d] += term;
                }
            }
        }
        acc = next;
    }
    acc
}

/// Coefficients of `p(sign · t^power)` up to `order`.
pub fn substituted(p: &[BigInt], negate: bool, power: usize, order: usize) -> Vec<BigInt> {
    let mut out = vec![BigInt::zero(); order + 1];
    for (k, c) in p.iter().enumerate() {
        if k * power <= order {
            out[k * power] = if negate && k % 2 == 1 { -c } else { c.clone() };
        }
    }
    out
}

pub fn truncated_mul(a: &[BigInt], b: &[BigInt], order: usize) -> Vec<BigInt> {
    let mut out = vec![BigInt::zero(); order + 1];
    for (i, x) in a.iter().enumerate().take(order + 1) {
        for (j, y) in b.iter().enumerate().take(order + 1 - i) {
            out[i + j] += x * y;
        }
    }
    out
}

/// Test graphs used by the series and rescaling checks.
pub fn corpus() -> Vec<(String, Graph)> {
    let mut specs: Vec<String> = Vec::new();
    for n in 1..=9 {
        specs.push(format!("path:{n}"));
    }
    for n in 3..=9 {
        specs.push(format!("dynkinD:{n}"));
        specs.push(format!("cycle:{n}"));
    }
    for n in 4..=9 {
        specs.push(format!("ycycle:{n}"));
    }
    for n in 1..=7 {
        specs.push(format!("complete:{n}"));
        specs.push(format!("empty:{n}"));
    }
    specs.extend(
        [
            "triforce6",
            "grid6",
            "join(empty:2,empty:3)",
            "join(path:3,cycle:5)",
            "union(complete:3,path:4)",
            "complement(cycle:7)",
            "union(triforce6,empty:1)",
        ]
        .map(String::from),
    );
    specs
        .into_iter()
        .map(|s| {
            let g = raag::io::parse_dsl(&s).unwrap();
            (s, g)
        })
        .collect()
}
