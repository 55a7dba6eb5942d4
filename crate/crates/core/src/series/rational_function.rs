use std::fmt;

use num_traits::{One, Zero};
use serde::{Deserialize, Serialize};

use super::{format_rational, Polynomial, PowerSeries, Rational};
use crate::error::{Error, Result};

/// Quotient of two polynomials. The denominator is never zero.
///
/// JSON form: `{"num": [..], "den": [..]}`, ascending degree, exact rationals.
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
#[serde(try_from = "RawRationalFunction", into = "RawRationalFunction")]
pub struct RationalFunction {
    num: Polynomial,
    den: Polynomial,
}

#[derive(Serialize, Deserialize)]
struct RawRationalFunction {
    num: Polynomial,
    den: Polynomial,
}

impl TryFrom<RawRationalFunction> for RationalFunction {
    type Error = Error;

    fn try_from(raw: RawRationalFunction) -> Result<Self> {
        RationalFunction::new(raw.num, raw.den)
    }
}

impl From<RationalFunction> for RawRationalFunction {
    fn from(f: RationalFunction) -> Self {
        RawRationalFunction { num: f.num, den: f.den }
    }
}

impl RationalFunction {
    pub fn new(num: Polynomial, den: Polynomial) -> Result<Self> {
        if den.is_zero() {
            return Err(Error::DivisionByZero);
        }
        Ok(RationalFunction { num, den })
    }

    pub fn from_ints(num: &[i64], den: &[i64]) -> Result<Self> {
        Self::new(Polynomial::from_ints(num), Polynomial::from_ints(den))
    }

    pub fn from_polynomial(p: Polynomial) -> Self {
        RationalFunction { num: p, den: Polynomial::one() }
    }

    pub fn constant(c: Rational) -> Self {
        Self::from_polynomial(Polynomial::constant(c))
    }

    pub fn num(&self) -> &Polynomial {
        &self.num
    }

    pub fn den(&self) -> &Polynomial {
        &self.den
    }

    pub fn is_zero(&self) -> bool {
        self.num.is_zero()
    }

    /// Power series expansion to `order`, by the linear recurrence the
    /// denominator imposes on the coefficients.
    pub fn expand(&self, order: usize) -> Result<PowerSeries> {
        let d0 = self.den.constant_term();
        if d0.is_zero() {
            return Err(Error::ZeroConstantTerm);
        }
        let inv = d0.recip();
        let den = self.den.coeffs();
        let mut q: Vec<Rational> = Vec::with_capacity(order + 1);
        for i in 0..=order {
            let mut acc = self.num.coeff(i);
            for (j, d) in den.iter().enumerate().skip(1).take(i) {
                if !d.is_zero() {
                    acc -= d * &q[i - j];
                }
            }
            q.push(acc * &inv);
        }
        Ok(PowerSeries::new(q))
    }

    /// Divides numerator and denominator by `t - root`.
    pub fn cancel_linear_root(&self, root: &Rational) -> Result<Self> {
        let (qn, rn) = self.num.divide_by_linear(root);
        let (qd, rd) = self.den.divide_by_linear(root);
        if !rn.is_zero() || !rd.is_zero() {
            return Err(Error::NotACommonRoot(format_rational(root)));
        }
        // qd cannot be zero: den is nonzero and divisible by (t - root)
        Ok(RationalFunction { num: qn, den: qd })
    }

    /// Cancels the polynomial gcd and scales so that the denominator has
    /// constant term 1 (or leading coefficient 1 if its constant term is 0).
    pub fn reduced(&self) -> Self {
        if self.num.is_zero() {
            return RationalFunction { num: Polynomial::zero(), den: Polynomial::one() };
        }
        let g = self.num.gcd(&self.den);
        let (num, _) = self.num.div_rem(&g).expect("gcd is nonzero");
        let (den, _) = self.den.div_rem(&g).expect("gcd is nonzero");
        let lead = {
            let c = den.constant_term();
            if c.is_zero() {
                den.leading().cloned().unwrap_or_else(Rational::one)
            } else {
                c
            }
        };
        let inv = lead.recip();
        RationalFunction { num: num.scale(&inv), den: den.scale(&inv) }
    }

    pub fn add(&self, other: &Self) -> Self {
        let num = &(&self.num * &other.den) + &(&other.num * &self.den);
        RationalFunction { num, den: &self.den * &other.den }.reduced()
    }

    pub fn sub(&self, other: &Self) -> Self {
        self.add(&other.neg())
    }

    pub fn neg(&self) -> Self {
        RationalFunction { num: -&self.num, den: self.den.clone() }
    }

    pub fn mul(&self, other: &Self) -> Self {
        RationalFunction { num: &self.num * &other.num, den: &self.den * &other.den }.reduced()
    }

    pub fn div(&self, other: &Self) -> Result<Self> {
        if other.num.is_zero() {
            return Err(Error::DivisionByZero);
        }
        Ok(RationalFunction { num: &self.num * &other.den, den: &self.den * &other.num }.reduced())
    }

    pub fn recip(&self) -> Result<Self> {
        Self::from_polynomial(Polynomial::one()).div(self)
    }

    /// Multiplication by `t^k`.
    pub fn shift(&self, k: usize) -> Self {
        RationalFunction { num: self.num.shift(k), den: self.den.clone() }.reduced()
    }

    /// Exact division by `t^k`, when `t^k` divides the numerator.
    pub fn unshift(&self, k: usize) -> Option<Self> {
        Some(RationalFunction { num: self.num.unshift(k)?, den: self.den.clone() })
    }
}

impl fmt::Display for RationalFunction {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.den == Polynomial::one() {
            write!(f, "{}", self.num)
        } else {
            write!(f, "({}) / ({})", self.num, self.den)
        }
    }
}
