//! Hilbert series of the exterior and polynomial Stanley–Reisner rings of
//! the flag complex, and the linear strands of their Betti tables.

use num_bigint::BigInt;
use num_traits::{One, Signed, Zero};

use crate::error::{Error, Result};
use crate::graph::{Graph, VertexSet};
use crate::invariants::{chen_ranks, clique_polynomial};
use crate::polyseries::binomial;
use crate::DEFAULT_GUARD;

/// Dimensions of the graded pieces of a graded algebra, degrees `0..=dmax`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct HilbertTable {
    coeffs: Vec<BigInt>,
}

impl HilbertTable {
    pub fn new(coeffs: Vec<BigInt>) -> Result<Self> {
        if !coeffs.first().is_some_and(One::is_one) {
            return Err(Error::Invariant("Hilbert series must start with 1".into()));
        }
        if let Some(d) = coeffs.iter().position(Signed::is_negative) {
            return Err(Error::Invariant(format!(
                "negative dimension in degree {d}"
            )));
        }
        Ok(HilbertTable { coeffs })
    }

    pub fn coeffs(&self) -> &[BigInt] {
        &self.coeffs
    }

    pub fn dmax(&self) -> usize {
        self.coeffs.len() - 1
    }

    pub fn get(&self, d: usize) -> &BigInt {
        &self.coeffs[d]
    }
}

/// `Hilb(E/J_Γ, t) = P_Γ(t)`, zero-padded to degree `dmax`.
pub fn hilbert_exterior(g: &Graph, dmax: usize) -> HilbertTable {
    let p = clique_polynomial(g);
    HilbertTable {
        coeffs: (0..=dmax).map(|d| p.coeff(d)).collect(),
    }
}

/// `Hilb(S/I_Γ, t) = P_Γ(t/(1-t))`: in degree `d ≥ 1` this is
/// `Σ_k f_k C(d-1, k-1)`, since a `k`-set supports `C(d-1, k-1)` monomials
/// of degree `d`.
pub fn hilbert_polynomial_sr(g: &Graph, dmax: usize) -> HilbertTable {
    let p = clique_polynomial(g);
    let coeffs = (0..=dmax)
        .map(|d| {
            if d == 0 {
                return BigInt::one();
            }
            p.coeffs()
                .iter()
                .enumerate()
                .skip(1)
                .map(|(k, f)| f * binomial(d - 1, k - 1))
                .sum()
        })
        .collect();
    HilbertTable { coeffs }
}

/// Next subset with the same popcount (Gosper's hack).
fn next_same_size(w: u64) -> Option<u64> {
    let low = w & w.wrapping_neg();
    let ripple = w.checked_add(low)?;
    Some(ripple | (((w ^ ripple) >> 2) / low))
}

/// Linear strand `β_{i,i+1}(S/I_Γ) = Σ_{|W| = i+1} dim H̃_0(Γ_W)`,
/// computed by walking the `(i+1)`-subsets and counting components of each
/// induced subgraph.
pub fn hochster_linear_betti(g: &Graph, i: usize) -> Result<BigInt> {
    let n = g.n();
    if i < 1 || i + 1 > n {
        return Err(Error::OutOfRange(format!(
            "Betti index {i} outside 1..={}",
            n.saturating_sub(1)
        )));
    }
    if n > DEFAULT_GUARD {
        return Err(Error::GuardExceeded {
            n,
            guard: DEFAULT_GUARD,
        });
    }
    let limit = g.vertices().bits();
    let mut w = VertexSet::full(i + 1).bits();
    let mut total = BigInt::zero();
    loop {
        let sub = g.induced_subgraph(VertexSet::from_bits(w))?;
        total += sub.components(sub.vertices())?.reduced_b0();
        match next_same_size(w) {
            Some(next) if next <= limit => w = next,
            _ => break,
        }
    }
    Ok(total)
}

/// `β^E_{k-1,k}(E/J_Γ)`, which equals the Chen rank `θ_k`.
pub fn exterior_linear_betti(g: &Graph, k: usize) -> Result<BigInt> {
    if k < 2 {
        return Err(Error::OutOfRange(format!("exterior Betti degree {k} < 2")));
    }
    Ok(chen_ranks(g, k)?.get(k).clone())
}

#[cfg(test)]
mod tests {
    use super::*;

    fn fam(s: &str) -> Graph {
        Graph::family(s).unwrap()
    }

    fn ints(v: &[i64]) -> Vec<BigInt> {
        v.iter().map(|&x| x.into()).collect()
    }

    #[test]
    fn exterior_series() {
        let k5 = hilbert_exterior(&fam("complete:5"), 6);
        for d in 0..=6 {
            assert_eq!(k5.get(d), &binomial(5, d));
        }
        assert!(hilbert_exterior(&fam("empty:4"), 3).get(2).is_zero());
        assert_eq!(
            hilbert_exterior(&fam("triforce6"), 5).coeffs(),
            ints(&[1, 6, 9, 4, 0, 0])
        );
    }

    #[test]
    fn polynomial_series() {
        let p3 = hilbert_polynomial_sr(&fam("path:3"), 6);
        for d in 1..=6 {
            assert_eq!(p3.get(d), &BigInt::from(2 * d + 1));
        }
        let k3 = hilbert_polynomial_sr(&fam("complete:3"), 6);
        for d in 0..=6 {
            assert_eq!(k3.get(d), &binomial(3 + d - 1, d));
        }
        let e4 = hilbert_polynomial_sr(&fam("empty:4"), 5);
        assert!(e4.coeffs()[1..].iter().all(|c| c == &BigInt::from(4)));
    }

    #[test]
    fn hochster_strand() {
        let t = fam("triforce6");
        let got: Vec<BigInt> = (1..=3)
            .map(|i| hochster_linear_betti(&t, i).unwrap())
            .collect();
        assert_eq!(got, ints(&[6, 8, 3]));
        for n in 3..8 {
            let p = fam(&format!("path:{n}"));
            for i in 1..n {
                let want = BigInt::from(i) * binomial(n - 1, i + 1);
                assert_eq!(hochster_linear_betti(&p, i).unwrap(), want);
            }
        }
        let k = fam("complete:5");
        assert!((1..5).all(|i| hochster_linear_betti(&k, i).unwrap().is_zero()));
        assert!(hochster_linear_betti(&k, 0).is_err());
        assert!(hochster_linear_betti(&k, 5).is_err());
    }

    #[test]
    fn exterior_strand() {
        assert_eq!(
            exterior_linear_betti(&fam("path:4"), 3).unwrap(),
            BigInt::from(8)
        );
        assert_eq!(
            exterior_linear_betti(&fam("triforce6"), 4).unwrap(),
            BigInt::from(45)
        );
        assert!(exterior_linear_betti(&fam("complete:4"), 3)
            .unwrap()
            .is_zero());
        assert!(exterior_linear_betti(&fam("path:4"), 1).is_err());
    }
}
