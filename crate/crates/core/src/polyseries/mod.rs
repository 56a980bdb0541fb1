//! Exact polynomials, truncated power series, and the two inversions that
//! turn generating functions into rank tables.

mod poly;
mod ranks;
mod series;

pub use poly::IntPoly;
pub use ranks::{geometric_substitution, product_form_inversion, RankTable};
pub use series::RatSeries;

use num_bigint::BigInt;
use num_traits::{One, Zero};

/// Binomial coefficient; zero when `k > n`.
pub fn binomial(n: usize, k: usize) -> BigInt {
    if k > n {
        return BigInt::zero();
    }
    let k = k.min(n - k);
    let mut acc = BigInt::one();
    for i in 0..k {
        acc = acc * (n - i) / (i + 1);
    }
    acc
}

/// Binomial coefficient with a signed top argument; zero unless
/// `0 <= k <= n`.
pub fn binomial_signed(n: i64, k: i64) -> BigInt {
    if n < 0 || k < 0 || k > n {
        BigInt::zero()
    } else {
        binomial(n as usize, k as usize)
    }
}

/// Möbius function by trial division.
pub fn moebius(m: u64) -> i8 {
    assert!(m > 0, "moebius(0) is undefined");
    let mut m = m;
    let mut sign = 1i8;
    let mut p = 2u64;
    while p * p <= m {
        if m.is_multiple_of(p) {
            m /= p;
            if m.is_multiple_of(p) {
                return 0;
            }
            sign = -sign;
        }
        p += 1;
    }
    if m > 1 {
        sign = -sign;
    }
    sign
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn moebius_values() {
        let got: Vec<i8> = [1, 2, 3, 4, 6, 12].iter().map(|&m| moebius(m)).collect();
        assert_eq!(got, vec![1, -1, -1, 0, 1, 0]);
        assert_eq!(moebius(30), -1);
        assert_eq!(moebius(49), 0);
    }

    #[test]
    fn binomials() {
        assert_eq!(binomial(5, 2), BigInt::from(10));
        assert_eq!(binomial(2, 5), BigInt::zero());
        assert_eq!(binomial(0, 0), BigInt::one());
        assert_eq!(binomial(60, 30), "118264581564861424".parse().unwrap());
        assert_eq!(binomial_signed(-1, 0), BigInt::zero());
    }
}
