use std::fmt;

use num_bigint::BigInt;
use num_traits::{One, Signed, Zero};

use super::{binomial, IntPoly};
use crate::error::{Error, Result};

/// Ranks indexed by `k = 1..=kmax`. Every entry is a nonnegative integer.
#[derive(Clone, PartialEq, Eq)]
pub struct RankTable {
    ranks: Vec<BigInt>,
}

impl RankTable {
    /// `ranks[0]` is the rank in degree 1.
    pub fn new(ranks: Vec<BigInt>) -> Result<Self> {
        if ranks.is_empty() {
            return Err(Error::OutOfRange("rank tables need kmax >= 1".into()));
        }
        if let Some(k) = ranks.iter().position(Signed::is_negative) {
            return Err(Error::Invariant(format!(
                "negative rank {} in degree {}",
                ranks[k],
                k + 1
            )));
        }
        Ok(RankTable { ranks })
    }

    pub fn kmax(&self) -> usize {
        self.ranks.len()
    }

    /// Rank in degree `k`, `1 <= k <= kmax`.
    pub fn get(&self, k: usize) -> &BigInt {
        &self.ranks[k - 1]
    }

    pub fn ranks(&self) -> &[BigInt] {
        &self.ranks
    }

    pub fn iter(&self) -> impl Iterator<Item = (usize, &BigInt)> {
        self.ranks.iter().enumerate().map(|(i, r)| (i + 1, r))
    }

    pub(crate) fn with_rank(mut self, k: usize, value: BigInt) -> Self {
        assert!(!value.is_negative());
        self.ranks[k - 1] = value;
        self
    }

    /// `∏_{k ≤ kmax} (1 - t^k)^{r_k}` truncated at degree `kmax`.
    pub fn euler_product(&self) -> Vec<BigInt> {
        let kmax = self.kmax();
        let mut acc = vec![BigInt::zero(); kmax + 1];
        acc[0] = BigInt::one();
        for (k, r) in self.iter() {
            // multiply by (1 - t^k)^r = Σ_m (-1)^m C(r, m) t^{km}
            let mut factor = vec![BigInt::one()];
            let mut c = BigInt::one();
            for m in 1..=kmax / k {
                c = -c * (r - BigInt::from(m - 1)) / m;
                factor.push(c.clone());
            }
            acc = truncated_sparse_mul(&acc, &factor, k, kmax);
        }
        acc
    }
}

impl fmt::Debug for RankTable {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.debug_list()
            .entries(self.ranks.iter().map(|r| r.to_string()))
            .finish()
    }
}

/// `a(t) · g(t^step)` truncated at degree `top`, where `g` is given by its
/// coefficient list.
fn truncated_sparse_mul(a: &[BigInt], g: &[BigInt], step: usize, top: usize) -> Vec<BigInt> {
    let mut out = vec![BigInt::zero(); top + 1];
    for (i, ai) in a.iter().enumerate().take(top + 1) {
        if ai.is_zero() {
            continue;
        }
        for (m, gm) in g.iter().enumerate() {
            let d = i + m * step;
            if d > top {
                break;
            }
            out[d] += ai * gm;
        }
    }
    out
}

/// Finds the exponents `r_1..r_kmax` with `∏ (1 - t^k)^{r_k} ≡ p(t)` modulo
/// `t^{kmax+1}` by dividing out one factor at a time. Integer arithmetic
/// throughout.
///
/// Fails if `p(0) != 1` or an exponent comes out negative; for the
/// polynomials arising from graphs the latter never happens.
pub fn product_form_inversion(p: &IntPoly, kmax: usize) -> Result<RankTable> {
    if kmax == 0 {
        return Err(Error::OutOfRange("kmax must be positive".into()));
    }
    if !p.coeff(0).is_one() {
        return Err(Error::ConstantTerm);
    }
    let mut residual: Vec<BigInt> = (0..=kmax).map(|k| p.coeff(k)).collect();
    let mut ranks = Vec::with_capacity(kmax);
    for k in 1..=kmax {
        let r = -residual[k].clone();
        if r.is_negative() {
            return Err(Error::Invariant(format!(
                "product form exponent in degree {k} is negative ({r})"
            )));
        }
        if !r.is_zero() {
            // (1 - t^k)^{-r} = Σ_m C(r + m - 1, m) t^{km}
            let mut factor = vec![BigInt::one()];
            let mut c = BigInt::one();
            for m in 1..=kmax / k {
                c = c * (&r + BigInt::from(m - 1)) / m;
                factor.push(c.clone());
            }
            residual = truncated_sparse_mul(&residual, &factor, k, kmax);
        }
        debug_assert!(residual[k].is_zero());
        ranks.push(r);
    }
    RankTable::new(ranks)
}

/// Coefficients of `q(t/(1-t))` in degrees `2..=kmax`, using
/// `(t/(1-t))^j = Σ_{k ≥ j} C(k-1, j-1) t^k`. The degree-1 slot of the
/// returned table is left at zero for the caller to fill.
pub fn geometric_substitution(q: &IntPoly, kmax: usize) -> Result<RankTable> {
    if kmax == 0 {
        return Err(Error::OutOfRange("kmax must be positive".into()));
    }
    if let Some(d) = (0..2).find(|&d| !q.coeff(d).is_zero()) {
        return Err(Error::LowDegreeTerm(d));
    }
    let ranks = (1..=kmax)
        .map(|k| {
            q.coeffs()
                .iter()
                .enumerate()
                .skip(2)
                .take_while(|&(j, _)| j <= k)
                .map(|(j, c)| c * binomial(k - 1, j - 1))
                .sum()
        })
        .collect();
    RankTable::new(ranks)
}
