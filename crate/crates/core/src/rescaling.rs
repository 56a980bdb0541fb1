//! Rational homotopy of the higher cubical complexes `K_Γ^q`, whose
//! cohomology is that of the toric complex rescaled by `2q + 1`.

use num_bigint::BigInt;
use num_traits::Zero;

use crate::error::{Error, Result};
use crate::graph::Graph;
use crate::invariants::clique_polynomial;
use crate::polyseries::{product_form_inversion, IntPoly, RankTable, RatSeries};
use crate::stanley_reisner::HilbertTable;

/// Recorded alongside [`formal_and_coformal`]; the flag is a stated
/// consequence of the dimension bound, not something computed here.
pub const FORMALITY_NOTE: &str =
    "K^q is formal and coformal when 2q+1 exceeds the clique number (dimension bound only; not computed)";

/// Ranks `Φ_m = rank π_m(Ω K_Γ^q)`, nonzero only in degrees `m = 2qk`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct HomotopyRankTable {
    pub q: usize,
    /// `ranks.get(k)` is `Φ_{2qk}`.
    pub ranks: RankTable,
}

impl HomotopyRankTable {
    pub fn kmax(&self) -> usize {
        self.ranks.kmax()
    }

    /// `Φ_m` for any degree `m ≥ 1` inside the table's range.
    pub fn rank(&self, m: usize) -> BigInt {
        let step = 2 * self.q;
        if m == 0 || !m.is_multiple_of(step) || m / step > self.kmax() {
            BigInt::zero()
        } else {
            self.ranks.get(m / step).clone()
        }
    }

    /// `(degree, rank)` for the degrees `2q, 4q, .., 2q·kmax`.
    pub fn entries(&self) -> Vec<(usize, BigInt)> {
        self.ranks
            .iter()
            .map(|(k, r)| (2 * self.q * k, r.clone()))
            .collect()
    }
}

fn check_q(q: usize) -> Result<()> {
    if q < 1 {
        Err(Error::OutOfRange("q must be at least 1".into()))
    } else {
        Ok(())
    }
}

/// Inverts `∏_m (1 - t^m)^{e_m} = P_Γ(-t^{2q+1})` directly in `t`. Only
/// exponents at `m = (2q+1)k` may be nonzero, and those are `Φ_{2qk}`.
pub fn homotopy_ranks(g: &Graph, q: usize, kmax: usize) -> Result<HomotopyRankTable> {
    check_q(q)?;
    let stride = 2 * q + 1;
    let p = clique_polynomial(g).eval_neg().substitute_power(stride);
    let exps = product_form_inversion(&p, stride * kmax)?;
    if let Some((m, _)) = exps.iter().find(|(m, e)| m % stride != 0 && !e.is_zero()) {
        return Err(Error::Invariant(format!(
            "nonzero exponent in degree {m}, not a multiple of {stride}"
        )));
    }
    let ranks = (1..=kmax).map(|k| exps.get(stride * k).clone()).collect();
    Ok(HomotopyRankTable {
        q,
        ranks: RankTable::new(ranks)?,
    })
}

/// `Poin(Ω K_Γ^q, t) = 1 / P_Γ(-t^{2q})` through degree `dmax`. Every
/// coefficient is a homology dimension; anything else is an error.
pub fn loop_poincare_series(g: &Graph, q: usize, dmax: usize) -> Result<HilbertTable> {
    check_q(q)?;
    let denom = RatSeries::compose_scaled(&clique_polynomial(g), -1, 2 * q, dmax);
    let series = denom.reciprocal()?;
    let coeffs = series
        .to_integers()
        .ok_or_else(|| Error::Invariant("loop space series is not integral".into()))?;
    HilbertTable::new(coeffs)
}

/// `Poin(K_Γ^q, t) = P_Γ(t^{2q+1})`; `q = 0` is the toric complex itself.
pub fn cubical_poincare_polynomial(g: &Graph, q: usize) -> IntPoly {
    clique_polynomial(g).substitute_power(2 * q + 1)
}

/// Whether `2q + 1 > dim K_Γ`, the clique number.
pub fn formal_and_coformal(g: &Graph, q: usize) -> bool {
    2 * q + 1 > g.clique_number()
}
