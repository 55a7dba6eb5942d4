use std::fmt;

use num_traits::{One, Zero};
use serde::{Deserialize, Deserializer, Serialize, Serializer};

use super::{format_rational, Polynomial, Rational};
use crate::error::{Error, Result};
use crate::par;

/// Power series truncated at `order`: exactly `order + 1` trusted coefficients.
#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub struct PowerSeries {
    coeffs: Vec<Rational>,
}

impl PowerSeries {
    /// Builds a series from its coefficients; the order is `coeffs.len() - 1`.
    ///
    /// An empty vector is treated as the zero series of order 0.
    pub fn new(mut coeffs: Vec<Rational>) -> Self {
        if coeffs.is_empty() {
            coeffs.push(Rational::zero());
        }
        PowerSeries { coeffs }
    }

    pub fn from_ints(xs: &[i64]) -> Self {
        Self::new(super::rats(xs))
    }

    pub fn zero(order: usize) -> Self {
        PowerSeries { coeffs: vec![Rational::zero(); order + 1] }
    }

    pub fn one(order: usize) -> Self {
        Self::from_polynomial(&Polynomial::one(), order)
    }

    /// `1 + t + t² + …` to the given order.
    pub fn geometric(order: usize) -> Self {
        PowerSeries { coeffs: vec![Rational::one(); order + 1] }
    }

    pub fn from_polynomial(p: &Polynomial, order: usize) -> Self {
        PowerSeries { coeffs: (0..=order).map(|i| p.coeff(i)).collect() }
    }

    pub fn order(&self) -> usize {
        self.coeffs.len() - 1
    }

    pub fn coeffs(&self) -> &[Rational] {
        &self.coeffs
    }

    pub fn into_coeffs(self) -> Vec<Rational> {
        self.coeffs
    }

    /// Coefficient of `t^i`; `None` beyond the truncation order.
    pub fn coeff(&self, i: usize) -> Option<&Rational> {
        self.coeffs.get(i)
    }

    /// Index of the first nonzero coefficient within the window.
    pub fn valuation(&self) -> Option<usize> {
        self.coeffs.iter().position(|c| !c.is_zero())
    }

    pub fn truncate(&self, order: usize) -> Self {
        let order = order.min(self.order());
        PowerSeries { coeffs: self.coeffs[..=order].to_vec() }
    }

    pub fn add(&self, other: &Self) -> Self {
        let n = self.order().min(other.order());
        PowerSeries { coeffs: (0..=n).map(|i| &self.coeffs[i] + &other.coeffs[i]).collect() }
    }

    pub fn sub(&self, other: &Self) -> Self {
        let n = self.order().min(other.order());
        PowerSeries { coeffs: (0..=n).map(|i| &self.coeffs[i] - &other.coeffs[i]).collect() }
    }

    pub fn neg(&self) -> Self {
        PowerSeries { coeffs: self.coeffs.iter().map(|c| -c).collect() }
    }

    pub fn scale(&self, c: &Rational) -> Self {
        PowerSeries { coeffs: self.coeffs.iter().map(|a| a * c).collect() }
    }

    /// Multiplication by `t^k`, keeping the order.
    pub fn shift(&self, k: usize) -> Self {
        let n = self.order();
        PowerSeries {
            coeffs: (0..=n)
                .map(|i| if i < k { Rational::zero() } else { self.coeffs[i - k].clone() })
                .collect(),
        }
    }

    /// Truncated Cauchy product. Long products fan out over the rayon pool.
    pub fn mul(&self, other: &Self) -> Self {
        let n = self.order().min(other.order());
        let term = |i: usize| cauchy_term(&self.coeffs, &other.coeffs, i);
        let coeffs = if n + 1 >= par::PAR_PRODUCT_THRESHOLD {
            par::map_range(n + 1, term)
        } else {
            par::map_range_seq(n + 1, term)
        };
        PowerSeries { coeffs }
    }

    /// Always-sequential Cauchy product; used by the benches as a baseline.
    pub fn mul_seq(&self, other: &Self) -> Self {
        let n = self.order().min(other.order());
        PowerSeries { coeffs: par::map_range_seq(n + 1, |i| cauchy_term(&self.coeffs, &other.coeffs, i)) }
    }

    /// The unique `q` with `q·other = self` up to the common order.
    pub fn div(&self, other: &Self) -> Result<Self> {
        let b0 = &other.coeffs[0];
        if b0.is_zero() {
            return Err(Error::ZeroConstantTerm);
        }
        let n = self.order().min(other.order());
        let inv = b0.recip();
        let mut q: Vec<Rational> = Vec::with_capacity(n + 1);
        for i in 0..=n {
            let mut acc = self.coeffs[i].clone();
            for j in 1..=i {
                let b = &other.coeffs[j];
                if !b.is_zero() {
                    acc -= b * &q[i - j];
                }
            }
            q.push(acc * &inv);
        }
        Ok(PowerSeries { coeffs: q })
    }

    /// Multiplies by a polynomial, keeping this series' order.
    pub fn mul_poly(&self, p: &Polynomial) -> Self {
        self.mul(&PowerSeries::from_polynomial(p, self.order()))
    }

    /// `(1 - t)·self`: the sequence of consecutive differences.
    pub fn first_differences(&self) -> Self {
        self.mul_poly(&Polynomial::from_ints(&[1, -1]))
    }

    /// `(1 - A·t)·self`.
    pub fn damp(&self, rate: &Rational) -> Self {
        self.mul_poly(&Polynomial::new(vec![Rational::one(), -rate.clone()]))
    }
}

fn cauchy_term(a: &[Rational], b: &[Rational], i: usize) -> Rational {
    let mut acc = Rational::zero();
    for j in 0..=i {
        let x = &a[j];
        if x.is_zero() {
            continue;
        }
        let y = &b[i - j];
        if !y.is_zero() {
            acc += x * y;
        }
    }
    acc
}

impl fmt::Display for PowerSeries {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let parts: Vec<String> = self.coeffs.iter().map(format_rational).collect();
        write!(f, "{}", parts.join(", "))
    }
}

impl Serialize for PowerSeries {
    fn serialize<S: Serializer>(&self, s: S) -> std::result::Result<S::Ok, S::Error> {
        super::serde_rational::vec::serialize(&self.coeffs, s)
    }
}

impl<'de> Deserialize<'de> for PowerSeries {
    fn deserialize<D: Deserializer<'de>>(d: D) -> std::result::Result<Self, D::Error> {
        let coeffs = super::serde_rational::vec::deserialize(d)?;
        if coeffs.is_empty() {
            return Err(serde::de::Error::custom("power series needs at least one coefficient"));
        }
        Ok(PowerSeries { coeffs })
    }
}

/// Outcome of a coefficient-wise comparison over a window.
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct Comparison {
    pub holds: bool,
    pub first_violation: Option<usize>,
}

/// Checks `a_i ≤ b_i` for `from ≤ i ≤ min(a.order, b.order)`.
pub fn coeffwise_leq(a: &PowerSeries, b: &PowerSeries, from: usize) -> Comparison {
    let n = a.order().min(b.order());
    let first_violation = (from..=n).find(|&i| a.coeffs[i] > b.coeffs[i]);
    Comparison { holds: first_violation.is_none(), first_violation }
}
