//! Closed forms for the standard graph families, plus an independent
//! logarithmic route to LCS ranks.
//!
//! None of these touch the subset enumeration or the divide-out inversion;
//! they exist to be compared against the general pipeline.

use num_bigint::BigInt;
use num_integer::Integer;
use num_rational::BigRational;
use num_traits::Zero;

use crate::error::{Error, Result};
use crate::polyseries::{binomial, binomial_signed, moebius, IntPoly, RatSeries};

fn require(family: &str, n: usize, min: usize) -> Result<()> {
    if n < min {
        Err(Error::FamilyRange {
            family: family.to_string(),
            n,
            min,
        })
    } else {
        Ok(())
    }
}

/// Cut number `c_j = (j-1) C(n-1, j)` of any tree on `n` vertices
/// (`2 ≤ j ≤ n - 1`; zero beyond).
pub fn tree_cut_numbers(n: usize, j: usize) -> Result<BigInt> {
    require("tree", n, 1)?;
    if j < 2 {
        return Ok(BigInt::zero());
    }
    Ok(BigInt::from(j - 1) * binomial(n - 1, j))
}

/// `(t/(1-t))^j` to the given order, by repeated series multiplication.
fn geometric_power(j: usize, order: usize) -> RatSeries {
    let base = &IntPoly::from_i64(&[0, 1]).to_series(order)
        * &IntPoly::from_i64(&[1, -1])
            .to_series(order)
            .reciprocal()
            .unwrap();
    (0..j).fold(RatSeries::one(order), |acc, _| &acc * &base)
}

fn integer_coeffs(s: &RatSeries) -> Vec<BigInt> {
    s.to_integers()
        .expect("closed forms have integer coefficients")
}

/// Coefficients of `1 - (1 - (n-1)t)/(1-t)^{n-1}` up to `t^kmax`: the Chen
/// series of a tree on `n` vertices.
pub fn tree_chen_series(n: usize, kmax: usize) -> Result<Vec<BigInt>> {
    require("tree", n, 1)?;
    let num = IntPoly::from_i64(&[1, 1 - n as i64]).to_series(kmax);
    let den = IntPoly::from_i64(&[1, -1])
        .pow(n as u32 - 1)
        .to_series(kmax);
    let s = &RatSeries::one(kmax) - &(&num * &den.reciprocal()?);
    Ok(integer_coeffs(&s))
}

fn circuit_cut(n: usize, j: usize) -> BigInt {
    BigInt::from(j - 1) * binomial(n - 1, j) - binomial(n - 2, j - 2)
}

/// `Σ_{j=2}^{n-2} ((j-1) C(n-1, j) - C(n-2, j-2)) (t/(1-t))^j` up to
/// `t^kmax`: the Chen series of an `n`-circuit, `n ≥ 4`.
pub fn circuit_chen_series(n: usize, kmax: usize) -> Result<Vec<BigInt>> {
    require("circuit", n, 4)?;
    let mut s = RatSeries::new(Vec::new(), kmax);
    for j in 2..=n - 2 {
        let c = BigRational::from_integer(circuit_cut(n, j));
        s = &s + &geometric_power(j, kmax).scale(&c);
    }
    Ok(integer_coeffs(&s))
}

/// Circuit series plus `(t/(1-t))^{n-1}`: the Chen series of an
/// `(n-1)`-circuit with one pendant vertex, `n ≥ 4` (for `n = 4` the
/// circuit is a triangle, which has no cuts of its own).
pub fn ycycle_chen_series(n: usize, kmax: usize) -> Result<Vec<BigInt>> {
    require("ycycle", n, 4)?;
    let base = RatSeries::from_integers(circuit_chen_series(n, kmax)?, kmax);
    Ok(integer_coeffs(&(&base + &geometric_power(n - 1, kmax))))
}

/// Witt's formula `φ_k(F_n) = (1/k) Σ_{d | k} μ(d) n^{k/d}`, `k = 1..=kmax`.
pub fn free_lcs(n: usize, kmax: usize) -> Vec<BigInt> {
    (1..=kmax)
        .map(|k| {
            let sum: BigInt = (1..=k)
                .filter(|d| k % d == 0)
                .map(|d| BigInt::from(moebius(d as u64)) * BigInt::from(n).pow((k / d) as u32))
                .sum();
            let (q, r) = sum.div_rem(&BigInt::from(k));
            debug_assert!(r.is_zero());
            q
        })
        .collect()
}

/// Chen's formula `θ_k(F_n) = (k-1) C(n+k-2, k)` for `k ≥ 2`, with
/// `θ_1 = n`; `k = 1..=kmax`.
pub fn free_chen(n: usize, kmax: usize) -> Vec<BigInt> {
    (1..=kmax)
        .map(|k| {
            if k == 1 {
                BigInt::from(n)
            } else {
                BigInt::from(k - 1) * binomial_signed(n as i64 + k as i64 - 2, k as i64)
            }
        })
        .collect()
}

/// Exponents `r_m` of `p = ∏ (1 - t^k)^{r_k}` by the logarithmic route:
/// with `N_m = m [t^m](-log p)`, `r_m = (1/m) Σ_{d | m} μ(m/d) N_d`.
///
/// Returns `None` if some `r_m` is not an integer.
pub fn product_exponents_via_log(p: &IntPoly, kmax: usize) -> Result<Option<Vec<BigInt>>> {
    let neg_log = -&p.to_series(kmax).log()?;
    let power_sums: Vec<BigRational> = (0..=kmax)
        .map(|m| neg_log.coeff(m) * BigInt::from(m))
        .collect();
    let mut out = Vec::with_capacity(kmax);
    for m in 1..=kmax {
        let total: BigRational = (1..=m)
            .filter(|d| m % d == 0)
            .map(|d| &power_sums[d] * BigInt::from(moebius((m / d) as u64)))
            .sum();
        let r = total / BigInt::from(m);
        if !r.is_integer() {
            return Ok(None);
        }
        out.push(r.to_integer());
    }
    Ok(Some(out))
}
