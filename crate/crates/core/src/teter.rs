//! Teter rings: Bass series from the Gorenstein cover and the `ρ_e`/`R_e`
//! growth bounds.

use num_bigint::BigInt;
use num_integer::binomial;
use num_traits::{One, Signed, Zero};
use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};
use crate::series::{rat, serde_rational, Polynomial, PowerSeries, Rational, RationalFunction};

/// The Poincaré series of an artinian Gorenstein cover `Q`, with
/// `e = edim Q` read off its degree-1 coefficient.
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
#[serde(try_from = "RawTeterSpec", into = "RawTeterSpec")]
pub struct TeterSpec {
    poincare_q: RationalFunction,
    edim: usize,
}

#[derive(Serialize, Deserialize)]
#[serde(rename_all = "camelCase")]
struct RawTeterSpec {
    poincare_q: RationalFunction,
}

impl TryFrom<RawTeterSpec> for TeterSpec {
    type Error = Error;

    fn try_from(r: RawTeterSpec) -> Result<Self> {
        TeterSpec::new(r.poincare_q)
    }
}

impl From<TeterSpec> for RawTeterSpec {
    fn from(s: TeterSpec) -> Self {
        RawTeterSpec { poincare_q: s.poincare_q }
    }
}

impl TeterSpec {
    pub fn new(poincare_q: RationalFunction) -> Result<Self> {
        let p = poincare_q.expand(1)?;
        let (c0, c1) = (&p.coeffs()[0], &p.coeffs()[1]);
        if !c0.is_one() {
            return Err(Error::InvalidPoincare(format!("constant term must be 1, got {c0}")));
        }
        if !c1.is_integer() || *c1 < rat(2) {
            return Err(Error::InvalidPoincare(format!(
                "degree-1 coefficient (edim) must be an integer >= 2, got {c1}"
            )));
        }
        let edim = c1
            .to_integer()
            .try_into()
            .map_err(|_| Error::InvalidPoincare(format!("edim {c1} is out of range")))?;
        Ok(TeterSpec { poincare_q, edim })
    }

    pub fn poincare_q(&self) -> &RationalFunction {
        &self.poincare_q
    }

    pub fn edim(&self) -> usize {
        self.edim
    }
}

/// `I^R = (P^Q - 1) / (t·(1 - t²·P^Q))`, reduced.
pub fn teter_bass_rf(spec: &TeterSpec) -> Result<RationalFunction> {
    let (n, d) = (spec.poincare_q.num(), spec.poincare_q.den());
    let top =
        (n - d).unshift(1).ok_or_else(|| Error::InvalidPoincare("P^Q - 1 is not divisible by t".into()))?;
    let bottom = d - &n.shift(2);
    Ok(RationalFunction::new(top, bottom)?.reduced())
}

pub fn teter_bass(spec: &TeterSpec, order: usize) -> Result<PowerSeries> {
    teter_bass_rf(spec)?.expand(order)
}

fn binom(n: usize, k: usize) -> BigInt {
    if k > n {
        BigInt::zero()
    } else {
        binomial(BigInt::from(n), BigInt::from(k))
    }
}

/// `Σ_{j=0}^{k} C(n, j)`.
fn binom_prefix(n: usize, k: usize) -> BigInt {
    (0..=k.min(n)).map(|j| binom(n, j)).sum()
}

/// `ρ_e(i) = C(e,i)^{-1} · Σ_{j=0}^{i+1} C(e-1,j)`.
pub fn rho(e: usize, i: usize) -> Result<Rational> {
    if e == 0 {
        return Err(Error::InvalidSpec("e must be positive".into()));
    }
    if i > e {
        return Err(Error::IndexOutOfRange { index: i, max: e });
    }
    Ok(Rational::new(binom_prefix(e - 1, i + 1), binom(e, i)))
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct RhoTable {
    pub e: usize,
    #[serde(with = "serde_rational::vec")]
    pub values: Vec<Rational>,
    pub argmin: usize,
    /// `R_e`.
    #[serde(with = "serde_rational")]
    pub minimum: Rational,
}

/// The table `ρ_e(0..=e)` and its minimum `R_e`.
///
/// For `e ≥ 3` the minimum is taken over `1 ≤ i ≤ ⌊e/2⌋`; for `e ≤ 2` over
/// the whole table. Ties go to the smallest index.
pub fn r_min(e: usize) -> Result<RhoTable> {
    let values = (0..=e).map(|i| rho(e, i)).collect::<Result<Vec<_>>>()?;
    let range = if e >= 3 { 1..=e / 2 } else { 0..=e };
    let mut argmin = *range.start();
    for i in range {
        if values[i] < values[argmin] {
            argmin = i;
        }
    }
    let minimum = values[argmin].clone();
    Ok(RhoTable { e, values, argmin, minimum })
}

/// Coefficients of `(1 - At + At³)·(1+t)^{e-1}/(1-t)`.
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct LemmaAReport {
    pub e: usize,
    #[serde(with = "serde_rational")]
    pub a: Rational,
    pub non_negative: bool,
    pub strictly_positive: bool,
    /// First degree with a negative coefficient.
    pub first_violation: Option<usize>,
    /// Every degree with a zero coefficient; complete, since the series is
    /// constant `2^{e-1}` from degree `e + 2` on.
    pub zeros: Vec<usize>,
    #[serde(with = "serde_rational::vec")]
    pub coefficients: Vec<Rational>,
}

pub fn lemma_a_coefficients(e: usize, a: &Rational, order: usize) -> Vec<Rational> {
    let f = RationalFunction::new(Polynomial::one_plus_t_pow(e - 1), Polynomial::from_ints(&[1, -1]))
        .expect("nonzero denominator");
    let damp = Polynomial::new(vec![Rational::one(), -a.clone(), Rational::zero(), a.clone()]);
    f.expand(order).expect("unit constant term").mul_poly(&damp).into_coeffs()
}

pub fn lemma_a_check(e: usize, a: &Rational, order: usize) -> Result<LemmaAReport> {
    if e < 2 {
        return Err(Error::PreconditionViolated(format!("e = {e}; need e >= 2")));
    }
    let order = order.max(e + 2);
    let coefficients = lemma_a_coefficients(e, a, order);
    let first_violation = coefficients.iter().position(Signed::is_negative);
    let zeros: Vec<usize> =
        coefficients.iter().enumerate().filter(|(_, c)| c.is_zero()).map(|(i, _)| i).collect();
    Ok(LemmaAReport {
        e,
        a: a.clone(),
        non_negative: first_violation.is_none(),
        strictly_positive: first_violation.is_none() && zeros.is_empty(),
        first_violation,
        zeros,
        coefficients,
    })
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct TeterGrowthReport {
    pub e: usize,
    pub order: usize,
    #[serde(with = "serde_rational")]
    pub rate: Rational,
    /// For `e = 2`: whether `μ_0 = 2, μ_i = 3·2^{i-1}` holds on the window.
    pub closed_form: Option<bool>,
    /// `(1 - R_e·t)·I^R ≥ 0` on the window.
    pub damped_non_negative: bool,
    pub damped_first_violation: Option<usize>,
    pub increasing: bool,
    pub first_non_increase: Option<usize>,
}

impl TeterGrowthReport {
    pub fn certified(&self) -> bool {
        self.closed_form.unwrap_or(true) && self.damped_non_negative && self.increasing
    }
}

pub fn teter_growth_check(spec: &TeterSpec, order: usize) -> Result<TeterGrowthReport> {
    let e = spec.edim;
    let mu = teter_bass(spec, order)?;
    let m = mu.coeffs();
    let rate = r_min(e)?.minimum;
    let closed_form = (e == 2).then(|| {
        let mut expected = rat(3);
        m[0] == rat(2)
            && (1..=order).all(|i| {
                let ok = m[i] == expected;
                expected *= rat(2);
                ok
            })
    });
    let damped = mu.damp(&rate);
    let damped_first_violation = damped.coeffs().iter().position(Signed::is_negative);
    let first_non_increase = (0..order).find(|&i| m[i + 1] <= m[i]).map(|i| i + 1);
    Ok(TeterGrowthReport {
        e,
        order,
        rate,
        closed_form,
        damped_non_negative: damped_first_violation.is_none(),
        damped_first_violation,
        increasing: first_non_increase.is_none(),
        first_non_increase,
    })
}

/// `1/(1-t)^e`, the Poincaré series of a regular cover shape.
pub fn inverse_power_of_one_minus_t(e: usize) -> RationalFunction {
    let den = Polynomial::from_ints(&[1, -1]).pow(e);
    RationalFunction::new(Polynomial::one(), den).expect("nonzero")
}
