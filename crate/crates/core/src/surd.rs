//! Exact numbers `(p + q·√D)/s` in a real quadratic field.
//!
//! Values are kept canonical: `D` square-free, `s > 0`, `gcd(p, q, s) = 1`,
//! and rational values carry `q = 0, D = 0`. Equality is therefore
//! structural, and ordering needs only sign logic plus one squaring.

use std::cmp::Ordering;
use std::fmt;
use std::str::FromStr;

use num_bigint::{BigInt, Sign};
use num_integer::Integer;
use num_traits::{One, Signed, Zero};
use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};
use crate::series::{serde_bigint, Rational};

#[derive(Clone, Debug, PartialEq, Eq, Hash, Serialize, Deserialize)]
#[serde(try_from = "RawSurd", into = "RawSurd")]
pub struct QuadraticSurd {
    p: BigInt,
    q: BigInt,
    s: BigInt,
    d: u64,
}

#[derive(Serialize, Deserialize)]
struct RawSurd {
    #[serde(with = "serde_bigint")]
    p: BigInt,
    #[serde(with = "serde_bigint")]
    q: BigInt,
    #[serde(with = "serde_bigint")]
    s: BigInt,
    #[serde(rename = "D")]
    d: u64,
}

impl TryFrom<RawSurd> for QuadraticSurd {
    type Error = Error;

    fn try_from(r: RawSurd) -> Result<Self> {
        QuadraticSurd::new(r.p, r.q, r.s, r.d)
    }
}

impl From<QuadraticSurd> for RawSurd {
    fn from(x: QuadraticSurd) -> Self {
        RawSurd { p: x.p, q: x.q, s: x.s, d: x.d }
    }
}

/// Splits `n = f²·m` with `m` square-free; returns `(f, m)`.
fn square_free_part(mut n: u64) -> (u64, u64) {
    if n == 0 {
        return (1, 0);
    }
    let mut f = 1u64;
    let mut m = 1u64;
    let mut k = 2u64;
    while k.saturating_mul(k) <= n {
        let mut e = 0;
        while n.is_multiple_of(k) {
            n /= k;
            e += 1;
        }
        for _ in 0..e / 2 {
            f *= k;
        }
        if e % 2 == 1 {
            m *= k;
        }
        k += 1;
    }
    (f, m * n)
}

impl QuadraticSurd {
    /// `(p + q·√d)/s`, normalised. Fails only for `s = 0`.
    pub fn new(p: impl Into<BigInt>, q: impl Into<BigInt>, s: impl Into<BigInt>, d: u64) -> Result<Self> {
        let (p, q, s) = (p.into(), q.into(), s.into());
        if s.is_zero() {
            return Err(Error::DivisionByZero);
        }
        Ok(Self::normalize(p, q, s, d))
    }

    fn normalize(mut p: BigInt, mut q: BigInt, mut s: BigInt, d: u64) -> Self {
        let (f, mut d) = square_free_part(d);
        q *= BigInt::from(f);
        match d {
            0 => q = BigInt::zero(),
            1 => {
                p += &q;
                q = BigInt::zero();
            }
            _ => {}
        }
        if q.is_zero() {
            d = 0;
        }
        if s.is_negative() {
            p = -p;
            q = -q;
            s = -s;
        }
        let g = p.gcd(&q).gcd(&s);
        if !g.is_one() && !g.is_zero() {
            p /= &g;
            q /= &g;
            s /= &g;
        }
        if p.is_zero() && q.is_zero() {
            s = BigInt::one();
        }
        QuadraticSurd { p, q, s, d }
    }

    pub fn from_rational(r: &Rational) -> Self {
        Self::normalize(r.numer().clone(), BigInt::zero(), r.denom().clone(), 0)
    }

    pub fn from_int(n: i64) -> Self {
        Self::normalize(n.into(), BigInt::zero(), BigInt::one(), 0)
    }

    /// `√d`.
    pub fn sqrt(d: u64) -> Self {
        Self::normalize(BigInt::zero(), BigInt::one(), BigInt::one(), d)
    }

    pub fn zero() -> Self {
        Self::from_int(0)
    }

    pub fn one() -> Self {
        Self::from_int(1)
    }

    pub fn p(&self) -> &BigInt {
        &self.p
    }

    pub fn q(&self) -> &BigInt {
        &self.q
    }

    pub fn s(&self) -> &BigInt {
        &self.s
    }

    /// Square-free radicand; 0 for rational values.
    pub fn radicand(&self) -> u64 {
        self.d
    }

    pub fn is_rational(&self) -> bool {
        self.q.is_zero()
    }

    pub fn is_zero(&self) -> bool {
        self.p.is_zero() && self.q.is_zero()
    }

    pub fn to_rational(&self) -> Option<Rational> {
        self.is_rational().then(|| Rational::new(self.p.clone(), self.s.clone()))
    }

    /// Rational part `p/s`.
    pub fn rational_part(&self) -> Rational {
        Rational::new(self.p.clone(), self.s.clone())
    }

    /// Coefficient of `√D`, i.e. `q/s`.
    pub fn irrational_part(&self) -> Rational {
        Rational::new(self.q.clone(), self.s.clone())
    }

    pub fn conjugate(&self) -> Self {
        QuadraticSurd { p: self.p.clone(), q: -&self.q, s: self.s.clone(), d: self.d }
    }

    fn common_radicand(&self, other: &Self) -> Result<u64> {
        match (self.d, other.d) {
            (0, d) | (d, 0) => Ok(d),
            (a, b) if a == b => Ok(a),
            (a, b) => Err(Error::MixedRadicands(a, b)),
        }
    }

    pub fn add(&self, other: &Self) -> Result<Self> {
        let d = self.common_radicand(other)?;
        Ok(Self::normalize(
            &self.p * &other.s + &other.p * &self.s,
            &self.q * &other.s + &other.q * &self.s,
            &self.s * &other.s,
            d,
        ))
    }

    pub fn neg(&self) -> Self {
        QuadraticSurd { p: -&self.p, q: -&self.q, s: self.s.clone(), d: self.d }
    }

    pub fn sub(&self, other: &Self) -> Result<Self> {
        self.add(&other.neg())
    }

    pub fn mul(&self, other: &Self) -> Result<Self> {
        let d = self.common_radicand(other)?;
        let dd = BigInt::from(d);
        Ok(Self::normalize(
            &self.p * &other.p + &self.q * &other.q * &dd,
            &self.p * &other.q + &self.q * &other.p,
            &self.s * &other.s,
            d,
        ))
    }

    pub fn mul_rational(&self, r: &Rational) -> Self {
        Self::normalize(&self.p * r.numer(), &self.q * r.numer(), &self.s * r.denom(), self.d)
    }

    /// `1/x = s·(p - q√D) / (p² - q²D)`.
    pub fn recip(&self) -> Result<Self> {
        if self.is_zero() {
            return Err(Error::DivisionByZero);
        }
        let norm = &self.p * &self.p - &self.q * &self.q * BigInt::from(self.d);
        // D is square-free, so the norm of a nonzero element never vanishes
        Ok(Self::normalize(&self.s * &self.p, -(&self.s * &self.q), norm, self.d))
    }

    pub fn div(&self, other: &Self) -> Result<Self> {
        self.common_radicand(other)?;
        self.mul(&other.recip()?)
    }

    /// `self^n` by repeated squaring.
    pub fn pow(&self, mut n: u64) -> Self {
        let mut base = self.clone();
        let mut acc = Self::one();
        while n > 0 {
            if n & 1 == 1 {
                acc = acc.mul(&base).expect("same field");
            }
            base = base.mul(&base).expect("same field");
            n >>= 1;
        }
        acc
    }

    /// Sign of the value: one squaring, no approximation.
    pub fn signum(&self) -> Ordering {
        let sp = self.p.sign();
        let sq = self.q.sign();
        match (sp, sq) {
            (_, Sign::NoSign) => sign_to_ord(sp),
            (Sign::NoSign, _) => sign_to_ord(sq),
            (a, b) if a == b => sign_to_ord(a),
            _ => {
                // p and q√D have opposite signs; the larger square wins
                let p2 = &self.p * &self.p;
                let q2d = &self.q * &self.q * BigInt::from(self.d);
                match p2.cmp(&q2d) {
                    Ordering::Greater => sign_to_ord(sp),
                    Ordering::Less => sign_to_ord(sq),
                    Ordering::Equal => Ordering::Equal,
                }
            }
        }
    }

    pub fn try_cmp(&self, other: &Self) -> Result<Ordering> {
        Ok(self.sub(other)?.signum())
    }

    pub fn cmp_rational(&self, r: &Rational) -> Ordering {
        self.sub(&Self::from_rational(r)).expect("rationals live in every field").signum()
    }

    /// Lower/upper `f64` bounds are not needed anywhere exact; this is only
    /// for display and plotting.
    pub fn to_f64(&self) -> f64 {
        let f = |x: &BigInt| x.to_string().parse::<f64>().unwrap_or(f64::NAN);
        (f(&self.p) + f(&self.q) * (self.d as f64).sqrt()) / f(&self.s)
    }
}

fn sign_to_ord(s: Sign) -> Ordering {
    match s {
        Sign::Minus => Ordering::Less,
        Sign::NoSign => Ordering::Equal,
        Sign::Plus => Ordering::Greater,
    }
}

impl PartialOrd for QuadraticSurd {
    /// `None` when the operands live in different quadratic fields.
    fn partial_cmp(&self, other: &Self) -> Option<Ordering> {
        self.try_cmp(other).ok()
    }
}

impl From<Rational> for QuadraticSurd {
    fn from(r: Rational) -> Self {
        Self::from_rational(&r)
    }
}

impl fmt::Display for QuadraticSurd {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if let Some(r) = self.to_rational() {
            return write!(f, "{r}");
        }
        let q_abs = self.q.abs();
        let q_txt = if q_abs.is_one() { String::new() } else { q_abs.to_string() };
        let body = if self.p.is_zero() {
            let sign = if self.q.is_negative() { "-" } else { "" };
            format!("{sign}{q_txt}√{}", self.d)
        } else {
            let op = if self.q.is_negative() { '-' } else { '+' };
            format!("{}{op}{q_txt}√{}", self.p, self.d)
        };
        if self.s.is_one() {
            f.write_str(&body)
        } else {
            write!(f, "({body})/{}", self.s)
        }
    }
}

impl FromStr for QuadraticSurd {
    type Err = Error;

    /// Accepts forms such as `2`, `-3/4`, `sqrt5`, `√5`, `(1+sqrt5)/2`,
    /// `(1+√5)/2`, `5+2*sqrt(13)` and the [`Display`](fmt::Display) output.
    fn from_str(s: &str) -> Result<Self> {
        parse_surd(s)
    }
}

fn parse_surd(input: &str) -> Result<QuadraticSurd> {
    let bad = || Error::Parse(format!("not a quadratic surd: {input:?}"));
    let text: String = input.chars().filter(|c| !c.is_whitespace()).collect();
    if text.is_empty() {
        return Err(bad());
    }
    // split off a top-level "/s"
    let mut depth = 0i32;
    let mut slash = None;
    for (i, c) in text.char_indices() {
        match c {
            '(' => depth += 1,
            ')' => depth -= 1,
            '/' if depth == 0 => slash = Some(i),
            _ => {}
        }
    }
    let (numer, denom) = match slash {
        Some(i) => (&text[..i], text[i + 1..].parse::<BigInt>().map_err(|_| bad())?),
        None => (text.as_str(), BigInt::one()),
    };
    let numer = numer
        .strip_prefix('(')
        .and_then(|x| x.strip_suffix(')'))
        .filter(|inner| balanced(inner))
        .unwrap_or(numer);

    let mut p = BigInt::zero();
    let mut q = BigInt::zero();
    let mut radicand: Option<u64> = None;
    for term in split_terms(numer) {
        let (neg, body) = match term.strip_prefix('-') {
            Some(b) => (true, b),
            None => (false, term.strip_prefix('+').unwrap_or(term)),
        };
        if body.is_empty() {
            return Err(bad());
        }
        let sqrt_pos =
            body.find("sqrt").map(|i| (i, 4)).or_else(|| body.find('√').map(|i| (i, '√'.len_utf8())));
        match sqrt_pos {
            None => {
                let v: BigInt = body.parse().map_err(|_| bad())?;
                p += if neg { -v } else { v };
            }
            Some((at, len)) => {
                let coeff_txt = body[..at].trim_end_matches('*');
                let coeff: BigInt = if coeff_txt.is_empty() {
                    BigInt::one()
                } else {
                    coeff_txt.parse().map_err(|_| bad())?
                };
                let rad_txt = body[at + len..].trim_start_matches('(').trim_end_matches(')');
                let d: u64 = rad_txt.parse().map_err(|_| bad())?;
                if radicand.is_some_and(|r| r != d) {
                    return Err(bad());
                }
                radicand = Some(d);
                q += if neg { -coeff } else { coeff };
            }
        }
    }
    QuadraticSurd::new(p, q, denom, radicand.unwrap_or(0))
}

fn balanced(s: &str) -> bool {
    let mut depth = 0i32;
    for c in s.chars() {
        match c {
            '(' => depth += 1,
            ')' => {
                depth -= 1;
                if depth < 0 {
                    return false;
                }
            }
            _ => {}
        }
    }
    depth == 0
}

/// Splits `a+b-c` into signed terms, ignoring signs inside parentheses.
fn split_terms(s: &str) -> Vec<&str> {
    let mut out = Vec::new();
    let mut start = 0;
    let mut depth = 0i32;
    for (i, c) in s.char_indices() {
        match c {
            '(' => depth += 1,
            ')' => depth -= 1,
            '+' | '-' if depth == 0 && i > start => {
                out.push(&s[start..i]);
                start = i;
            }
            _ => {}
        }
    }
    out.push(&s[start..]);
    out
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::series::ratio;

    fn phi() -> QuadraticSurd {
        QuadraticSurd::new(1, 1, 2, 5).unwrap()
    }

    #[test]
    fn canonical_form() {
        // √12 = 2√3
        let x = QuadraticSurd::new(0, 1, 1, 12).unwrap();
        assert_eq!((x.q().clone(), x.radicand()), (BigInt::from(2), 3));
        // (4 + √0)/2 = 2
        assert_eq!(QuadraticSurd::new(4, 1, 2, 0).unwrap(), QuadraticSurd::from_int(2));
        // (2 + 2√9)/4 = 2
        assert_eq!(QuadraticSurd::new(2, 2, 4, 9).unwrap(), QuadraticSurd::from_int(2));
        // sign moves to the numerator, common factors cancel
        let y = QuadraticSurd::new(2, 4, -6, 5).unwrap();
        assert_eq!(y, QuadraticSurd::new(-1, -2, 3, 5).unwrap());
        assert_eq!(y.s(), &BigInt::from(3));
        assert!(QuadraticSurd::new(1, 1, 0, 5).is_err());
    }

    #[test]
    fn conjugate_pairs() {
        let a = phi();
        let b = a.conjugate();
        assert_eq!(a.mul(&b).unwrap(), QuadraticSurd::from_int(-1));
        assert_eq!(a.add(&b).unwrap(), QuadraticSurd::from_int(1));
        let r5 = QuadraticSurd::sqrt(5);
        assert_eq!(r5.mul(&r5).unwrap(), QuadraticSurd::from_int(5));
    }

    #[test]
    fn mixed_fields_rejected() {
        let a = QuadraticSurd::sqrt(2);
        let b = QuadraticSurd::sqrt(3);
        assert_eq!(a.add(&b), Err(Error::MixedRadicands(2, 3)));
        assert_eq!(a.try_cmp(&b), Err(Error::MixedRadicands(2, 3)));
        assert!(a.partial_cmp(&b).is_none());
        // rationals mix with anything
        assert!(a.add(&QuadraticSurd::from_int(1)).is_ok());
    }

    #[test]
    fn division() {
        let a = phi();
        assert_eq!(a.div(&a).unwrap(), QuadraticSurd::one());
        assert_eq!(a.recip().unwrap(), a.sub(&QuadraticSurd::one()).unwrap());
        assert_eq!(QuadraticSurd::zero().recip(), Err(Error::DivisionByZero));
    }

    #[test]
    fn comparisons() {
        let three_halves = QuadraticSurd::from_rational(&ratio(3, 2));
        assert_eq!(phi().try_cmp(&three_halves).unwrap(), Ordering::Greater);
        let degenerate = QuadraticSurd::new(4, 1, 2, 0).unwrap();
        assert_eq!(degenerate.try_cmp(&QuadraticSurd::from_int(2)).unwrap(), Ordering::Equal);
        // (r + √(r² - 4r))/2 at r = 4
        let r = 4u64;
        let a = QuadraticSurd::new(r as i64, 1, 2, r * r - 4 * r).unwrap();
        assert_eq!(a, QuadraticSurd::from_int(2));
        assert_eq!(phi().cmp_rational(&ratio(1618, 1000)), Ordering::Greater);
        assert_eq!(phi().cmp_rational(&ratio(1619, 1000)), Ordering::Less);
    }

    #[test]
    fn powers() {
        assert_eq!(phi().pow(2), QuadraticSurd::new(3, 1, 2, 5).unwrap());
        assert_eq!(QuadraticSurd::sqrt(7).pow(0), QuadraticSurd::one());
        let x = QuadraticSurd::new(1, 1, 2, 13).unwrap();
        let cube = x.mul(&x).unwrap().mul(&x).unwrap();
        assert_eq!(x.pow(3), cube);
        assert_eq!(x.pow(3), QuadraticSurd::new(5, 2, 1, 13).unwrap());
    }

    #[test]
    fn display_and_parse() {
        assert_eq!(phi().to_string(), "(1+√5)/2");
        assert_eq!(QuadraticSurd::from_rational(&ratio(5, 4)).to_string(), "5/4");
        assert_eq!(QuadraticSurd::new(5, -2, 1, 13).unwrap().to_string(), "5-2√13");
        for txt in ["(1+sqrt5)/2", "(1+√5)/2", "(1 + sqrt(5))/2"] {
            assert_eq!(txt.parse::<QuadraticSurd>().unwrap(), phi());
        }
        assert_eq!("3/2".parse::<QuadraticSurd>().unwrap(), QuadraticSurd::from_rational(&ratio(3, 2)));
        assert_eq!("5+2*sqrt13".parse::<QuadraticSurd>().unwrap(), QuadraticSurd::new(5, 2, 1, 13).unwrap());
        assert_eq!("-sqrt2".parse::<QuadraticSurd>().unwrap(), QuadraticSurd::new(0, -1, 1, 2).unwrap());
        for x in [phi(), QuadraticSurd::new(-7, 3, 4, 6).unwrap(), QuadraticSurd::from_int(-2)] {
            assert_eq!(x.to_string().parse::<QuadraticSurd>().unwrap(), x);
        }
        assert!("sqrt2+sqrt3".parse::<QuadraticSurd>().is_err());
        assert!("abc".parse::<QuadraticSurd>().is_err());
    }

    #[test]
    fn json_shape() {
        let j = serde_json::to_string(&phi()).unwrap();
        assert_eq!(j, r#"{"p":1,"q":1,"s":2,"D":5}"#);
        let back: QuadraticSurd = serde_json::from_str(&j).unwrap();
        assert_eq!(back, phi());
    }
}
