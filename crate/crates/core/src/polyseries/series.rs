use std::fmt;
use std::ops::{Add, Mul, Neg, Sub};

use num_bigint::BigInt;
use num_rational::BigRational;
use num_traits::{One, Zero};

use super::IntPoly;
use crate::error::{Error, Result};

/// Power series with rational coefficients, known modulo `t^(order+1)`.
///
/// Binary operations produce a result at the smaller of the two orders.
#[derive(Clone, PartialEq, Eq)]
pub struct RatSeries {
    coeffs: Vec<BigRational>,
}

impl RatSeries {
    /// Pads with zeros or truncates `coeffs` to `order + 1` terms.
    pub fn new(mut coeffs: Vec<BigRational>, order: usize) -> Self {
        coeffs.resize(order + 1, BigRational::zero());
        RatSeries { coeffs }
    }

    pub fn from_integers<I: IntoIterator<Item = BigInt>>(coeffs: I, order: usize) -> Self {
        RatSeries::new(
            coeffs.into_iter().map(BigRational::from_integer).collect(),
            order,
        )
    }

    pub fn from_poly(p: &IntPoly, order: usize) -> Self {
        RatSeries::from_integers(p.coeffs().iter().take(order + 1).cloned(), order)
    }

    pub fn one(order: usize) -> Self {
        RatSeries::from_poly(&IntPoly::one(), order)
    }

    pub fn order(&self) -> usize {
        self.coeffs.len() - 1
    }

    pub fn coeffs(&self) -> &[BigRational] {
        &self.coeffs
    }

    pub fn coeff(&self, k: usize) -> &BigRational {
        &self.coeffs[k]
    }

    pub fn truncate(&self, order: usize) -> Self {
        RatSeries::new(
            self.coeffs[..=order.min(self.order())].to_vec(),
            order.min(self.order()),
        )
    }

    /// Integer coefficients, or `None` if some coefficient is fractional.
    pub fn to_integers(&self) -> Option<Vec<BigInt>> {
        self.coeffs
            .iter()
            .map(|c| c.is_integer().then(|| c.to_integer()))
            .collect()
    }

    pub fn scale(&self, c: &BigRational) -> Self {
        RatSeries {
            coeffs: self.coeffs.iter().map(|a| a * c).collect(),
        }
    }

    fn check_unit(&self) -> Result<()> {
        if self.coeffs[0].is_one() {
            Ok(())
        } else {
            Err(Error::ConstantTerm)
        }
    }

    /// Multiplicative inverse of a series with constant term 1.
    pub fn reciprocal(&self) -> Result<Self> {
        self.check_unit()?;
        let order = self.order();
        let mut inv = vec![BigRational::zero(); order + 1];
        inv[0] = BigRational::one();
        for k in 1..=order {
            let mut acc = BigRational::zero();
            for j in 1..=k {
                acc -= &self.coeffs[j] * &inv[k - j];
            }
            inv[k] = acc;
        }
        Ok(RatSeries { coeffs: inv })
    }

    pub fn derivative(&self) -> Self {
        let order = self.order();
        let coeffs = (1..=order)
            .map(|k| &self.coeffs[k] * BigInt::from(k))
            .collect();
        // the top coefficient of the derivative is unknown at this order
        RatSeries::new(coeffs, order.saturating_sub(1))
    }

    /// Antiderivative with zero constant term, one order higher.
    pub fn integral(&self) -> Self {
        let order = self.order() + 1;
        let coeffs = std::iter::once(BigRational::zero())
            .chain(
                self.coeffs
                    .iter()
                    .enumerate()
                    .map(|(k, c)| c / BigInt::from(k + 1)),
            )
            .collect();
        RatSeries::new(coeffs, order)
    }

    /// Logarithm of a series with constant term 1, as `∫ s'/s`.
    pub fn log(&self) -> Result<Self> {
        self.check_unit()?;
        if self.order() == 0 {
            return Ok(RatSeries::new(Vec::new(), 0));
        }
        let quotient = &self.derivative() * &self.reciprocal()?;
        Ok(quotient.integral())
    }

    /// `p(sign · t^power)` as a series of the given order.
    pub fn compose_scaled(p: &IntPoly, sign: i64, power: usize, order: usize) -> Self {
        assert!(power > 0 && (sign == 1 || sign == -1));
        let mut coeffs = vec![BigRational::zero(); order + 1];
        for (k, c) in p.coeffs().iter().enumerate() {
            let d = k * power;
            if d > order {
                break;
            }
            let c = if sign < 0 && k % 2 == 1 {
                -c
            } else {
                c.clone()
            };
            coeffs[d] = BigRational::from_integer(c);
        }
        RatSeries { coeffs }
    }
}

impl fmt::Debug for RatSeries {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let terms: Vec<String> = self.coeffs.iter().map(|c| c.to_string()).collect();
        write!(
            f,
            "RatSeries[{}; O(t^{})]",
            terms.join(", "),
            self.order() + 1
        )
    }
}

impl Add for &RatSeries {
    type Output = RatSeries;

    fn add(self, rhs: &RatSeries) -> RatSeries {
        let order = self.order().min(rhs.order());
        RatSeries::new(
            (0..=order)
                .map(|k| &self.coeffs[k] + &rhs.coeffs[k])
                .collect(),
            order,
        )
    }
}

impl Sub for &RatSeries {
    type Output = RatSeries;

    fn sub(self, rhs: &RatSeries) -> RatSeries {
        let order = self.order().min(rhs.order());
        RatSeries::new(
            (0..=order)
                .map(|k| &self.coeffs[k] - &rhs.coeffs[k])
                .collect(),
            order,
        )
    }
}

impl Neg for &RatSeries {
    type Output = RatSeries;

    fn neg(self) -> RatSeries {
        RatSeries {
            coeffs: self.coeffs.iter().map(|c| -c).collect(),
        }
    }
}

impl Mul for &RatSeries {
    type Output = RatSeries;

    fn mul(self, rhs: &RatSeries) -> RatSeries {
        let order = self.order().min(rhs.order());
        let mut out = vec![BigRational::zero(); order + 1];
        for (i, a) in self.coeffs.iter().enumerate().take(order + 1) {
            if a.is_zero() {
                continue;
            }
            for (j, b) in rhs.coeffs.iter().enumerate().take(order + 1 - i) {
                out[i + j] += a * b;
            }
        }
        RatSeries { coeffs: out }
    }
}
