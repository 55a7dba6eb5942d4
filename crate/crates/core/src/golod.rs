//! Bass series of Golod rings from their reduced Koszul ranks.

use num_bigint::BigInt;
use num_traits::{One, Zero};
use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};
use crate::par;
use crate::series::{rat, serde_rational, Polynomial, PowerSeries, Rational, RationalFunction};
use crate::surd::QuadraticSurd;

/// Depth, embedding dimension and reduced Koszul ranks `h_0..h_{e-d-1}`.
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
#[serde(try_from = "RawGolodSpec", into = "RawGolodSpec")]
pub struct GolodSpec {
    depth: usize,
    edim: usize,
    h: Vec<u64>,
}

#[derive(Serialize, Deserialize)]
struct RawGolodSpec {
    depth: usize,
    edim: usize,
    h: Vec<u64>,
}

impl TryFrom<RawGolodSpec> for GolodSpec {
    type Error = Error;

    fn try_from(r: RawGolodSpec) -> Result<Self> {
        GolodSpec::new(r.depth, r.edim, r.h)
    }
}

impl From<GolodSpec> for RawGolodSpec {
    fn from(s: GolodSpec) -> Self {
        RawGolodSpec { depth: s.depth, edim: s.edim, h: s.h }
    }
}

impl GolodSpec {
    pub fn new(depth: usize, edim: usize, h: Vec<u64>) -> Result<Self> {
        if edim == 0 {
            return Err(Error::InvalidSpec("edim must be positive".into()));
        }
        if depth >= edim {
            return Err(Error::InvalidSpec(format!("depth {depth} must be smaller than edim {edim}")));
        }
        if h.len() != edim - depth {
            return Err(Error::InvalidSpec(format!(
                "expected {} reduced Koszul ranks, got {}",
                edim - depth,
                h.len()
            )));
        }
        if h[0] != 1 {
            return Err(Error::InvalidSpec(format!("h_0 must be 1, got {}", h[0])));
        }
        if let Some(i) = h.iter().position(|&x| x == 0) {
            return Err(Error::InvalidSpec(format!("h_{i} must be positive")));
        }
        Ok(GolodSpec { depth, edim, h })
    }

    pub fn depth(&self) -> usize {
        self.depth
    }

    pub fn edim(&self) -> usize {
        self.edim
    }

    pub fn h(&self) -> &[u64] {
        &self.h
    }

    /// `e - d`.
    pub fn codepth(&self) -> usize {
        self.edim - self.depth
    }

    /// `h_i`, zero outside `0..e-d`.
    pub fn h_at(&self, i: isize) -> u64 {
        usize::try_from(i).ok().and_then(|i| self.h.get(i).copied()).unwrap_or(0)
    }

    fn require_non_gorenstein(&self) -> Result<()> {
        if self.codepth() <= 1 {
            Err(Error::GorensteinCase(self.codepth()))
        } else {
            Ok(())
        }
    }
}

/// Ranks `c_0..c_e` of the full Koszul homology.
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct KoszulRanks {
    pub c: Vec<u64>,
}

impl KoszulRanks {
    pub fn new(c: Vec<u64>) -> Result<Self> {
        if c.first() != Some(&1) {
            return Err(Error::InvalidSpec("c_0 must be 1".into()));
        }
        Ok(KoszulRanks { c })
    }

    pub fn get(&self, i: usize) -> u64 {
        self.c.get(i).copied().unwrap_or(0)
    }
}

/// `c_i = h_i + h_{i-1}`, padded with zeros to length `e + 1`.
pub fn ranks_merge(spec: &GolodSpec) -> KoszulRanks {
    let c = (0..=spec.edim as isize).map(|i| spec.h_at(i) + spec.h_at(i - 1)).collect();
    KoszulRanks { c }
}

/// The upper bound `(Σ c_{e-i} t^i - t^{e+1}) / (1 - Σ c_i t^{i+1})` as a
/// rational function, before any cancellation.
pub fn golod_upper_bound_rf(c: &KoszulRanks, e: usize) -> RationalFunction {
    let mut num = vec![Rational::zero(); e + 2];
    for (i, slot) in num.iter_mut().take(e).enumerate() {
        *slot = rat(c.get(e - i) as i64);
    }
    num[e + 1] = rat(-1);
    let mut den = vec![Rational::zero(); e + 2];
    den[0] = Rational::one();
    for i in 1..=e {
        den[i + 1] = rat(-(c.get(i) as i64));
    }
    RationalFunction::new(Polynomial::new(num), Polynomial::new(den))
        .expect("denominator has constant term 1")
}

pub fn golod_upper_bound(c: &KoszulRanks, e: usize, order: usize) -> Result<PowerSeries> {
    golod_upper_bound_rf(c, e).expand(order)
}

/// The reduced closed form of the Bass series of a Golod ring.
pub fn golod_bass_rf(spec: &GolodSpec) -> Result<RationalFunction> {
    spec.require_non_gorenstein()?;
    let (d, e, k) = (spec.depth, spec.edim, spec.codepth());
    let mut num = vec![Rational::zero(); e + 1];
    for i in 0..=k - 2 {
        num[d + i] += rat(spec.h[k - 1 - i] as i64);
    }
    num[e - 1] += Rational::one();
    num[e] -= Rational::one();
    let mut den = vec![Rational::zero(); k + 1];
    den[0] = Rational::one();
    den[1] = rat(-1);
    for i in 1..k {
        den[i + 1] -= rat(spec.h[i] as i64);
    }
    RationalFunction::new(Polynomial::new(num), Polynomial::new(den))
}

pub fn golod_bass_series(spec: &GolodSpec, order: usize) -> Result<PowerSeries> {
    golod_bass_rf(spec)?.expand(order)
}

/// Result of checking a series against the Bass number recurrences.
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct RecurrenceCheck {
    pub holds: bool,
    /// Which identity failed first: `"mu_d"`, `"mu_e"` or `"mu_e+n"`.
    pub failed: Option<String>,
    /// For `"mu_e+n"`, the offending `n`.
    pub n: Option<usize>,
}

impl RecurrenceCheck {
    fn ok() -> Self {
        RecurrenceCheck { holds: true, failed: None, n: None }
    }

    fn fail(what: &str, n: Option<usize>) -> Self {
        RecurrenceCheck { holds: false, failed: Some(what.into()), n }
    }
}

/// Verifies `μ_d`, `μ_e` and `μ_{e+n}` against the Koszul data.
pub fn bass_recurrence_check(spec: &GolodSpec, series: &PowerSeries) -> Result<RecurrenceCheck> {
    spec.require_non_gorenstein()?;
    let (d, e, k) = (spec.depth, spec.edim, spec.codepth());
    if series.order() < e + 2 {
        return Err(Error::PreconditionViolated(format!(
            "series order {} is below e + 2 = {}",
            series.order(),
            e + 2
        )));
    }
    let mu = series.coeffs();
    let h = |i: usize| rat(spec.h[i] as i64);
    if mu[d] != h(k - 1) {
        return Ok(RecurrenceCheck::fail("mu_d", None));
    }
    let mut rhs = &mu[e - 1] - Rational::one();
    for i in 0..=k - 2 {
        rhs += &mu[d + i] * h(k - 1 - i);
    }
    if mu[e] != rhs {
        return Ok(RecurrenceCheck::fail("mu_e", None));
    }
    for n in 1..=series.order() - e {
        let mut rhs = mu[e + n - 1].clone();
        for i in n..=n + k - 2 {
            rhs += &mu[d + i] * h(k - 1 + n - i);
        }
        if mu[e + n] != rhs {
            return Ok(RecurrenceCheck::fail("mu_e+n", Some(n)));
        }
    }
    Ok(RecurrenceCheck::ok())
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
#[serde(rename_all = "snake_case", tag = "kind")]
pub enum GolodRate {
    /// `μ_{i+1} ≥ A·μ_i` for `d ≤ i < order`, where `A` is the smallest
    /// ratio among `μ_{d+1}/μ_d, …, μ_e/μ_{e-1}`.
    Exponential {
        #[serde(with = "serde_rational")]
        rate: Rational,
        certified: bool,
        first_violation: Option<usize>,
        order: usize,
    },
    /// `e - d = 2` and `μ_d = 1`: the Bass numbers are `μ_{d+i} = 2F_i`.
    FibonacciException { verified: bool, order: usize },
}

pub fn golod_rate(spec: &GolodSpec, order: usize) -> Result<GolodRate> {
    spec.require_non_gorenstein()?;
    let (d, e) = (spec.depth, spec.edim);
    let order = order.max(e);
    let series = golod_bass_series(spec, order)?;
    let mu = series.coeffs();
    if spec.codepth() == 2 && spec.h[1] == 1 {
        let verified = fibonacci_doubles(order - d)
            .iter()
            .enumerate()
            .skip(1)
            .all(|(i, f)| mu[d + i] == Rational::from_integer(f.clone()));
        return Ok(GolodRate::FibonacciException { verified, order });
    }
    let rate = (d..e).map(|i| &mu[i + 1] / &mu[i]).min().expect("e > d");
    let first_violation = (d..order).find(|&i| mu[i + 1] < &rate * &mu[i]);
    Ok(GolodRate::Exponential { rate, certified: first_violation.is_none(), first_violation, order })
}

/// `2F_0, 2F_1, …, 2F_n` with `F_1 = F_2 = 1`.
pub fn fibonacci_doubles(n: usize) -> Vec<BigInt> {
    let mut out = Vec::with_capacity(n + 1);
    let (mut a, mut b) = (BigInt::zero(), BigInt::one());
    for _ in 0..=n {
        out.push(&a * 2);
        let next = &a + &b;
        a = std::mem::replace(&mut b, next);
    }
    out
}

/// `t^d (r + t - t²) / (1 - t - r t²)`.
pub fn codim2_rf(d: usize, r: u64) -> RationalFunction {
    let r = rat(r as i64);
    let num = Polynomial::new(vec![r.clone(), rat(1), rat(-1)]).shift(d);
    let den = Polynomial::new(vec![rat(1), rat(-1), -r]);
    RationalFunction::new(num, den).expect("nonzero denominator")
}

pub fn codim2_bass(d: usize, r: u64, order: usize) -> Result<PowerSeries> {
    if r == 0 {
        return Err(Error::InvalidSpec("r must be positive".into()));
    }
    codim2_rf(d, r).expand(order)
}

/// `μ_{d+i}` for a codimension two Golod ring, evaluated in `ℚ(√(1+4r))`.
pub fn codim2_closed_form(r: u64, i: usize) -> Result<Rational> {
    if r == 0 {
        return Err(Error::InvalidSpec("r must be positive".into()));
    }
    if i < 3 {
        return Err(Error::PreconditionViolated(format!("closed form needs i >= 3, got {i}")));
    }
    let d = 1 + 4 * r;
    let delta = QuadraticSurd::sqrt(d);
    let r_ = QuadraticSurd::from_int(r as i64);
    let one = QuadraticSurd::one();
    let two = QuadraticSurd::from_int(2);
    let plus = one.add(&delta)?.div(&two)?;
    let minus = one.sub(&delta)?.div(&two)?;
    let two_r = r_.mul(&two)?;
    let c_plus = two_r.sub(&one)?.add(&delta)?;
    let c_minus = one.sub(&two_r)?.add(&delta)?;
    let k = (i - 1) as u64;
    let bracket = c_plus.mul(&plus.pow(k))?.add(&c_minus.mul(&minus.pow(k))?)?;
    let front = r_.add(&one)?.div(&two.mul(&delta)?)?;
    let value = front.mul(&bracket)?;
    value.to_rational().ok_or_else(|| Error::IrrationalResidue(value.to_string()))
}

/// Bass series for many specs at once, fanned out over the thread pool.
pub fn sweep(specs: &[GolodSpec], order: usize) -> Vec<Result<PowerSeries>> {
    par::map(specs, |s| golod_bass_series(s, order))
}

pub fn sweep_seq(specs: &[GolodSpec], order: usize) -> Vec<Result<PowerSeries>> {
    par::map_seq(specs, |s| golod_bass_series(s, order))
}

/// Every spec with `2 ≤ e - d ≤ max_codepth`, `h_0 = 1` and other entries
/// in `1..=max_h`, at the given depth.
pub fn enumerate_specs(depth: usize, max_codepth: usize, max_h: u64) -> Vec<GolodSpec> {
    let mut out = Vec::new();
    for k in 2..=max_codepth {
        let mut tail = vec![1u64; k - 1];
        loop {
            let mut h = vec![1];
            h.extend_from_slice(&tail);
            out.push(GolodSpec::new(depth, depth + k, h).expect("valid by construction"));
            // odometer over the tail
            let mut pos = 0;
            while pos < tail.len() && tail[pos] == max_h {
                tail[pos] = 1;
                pos += 1;
            }
            if pos == tail.len() {
                break;
            }
            tail[pos] += 1;
        }
    }
    out
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::series::ratio;

    fn spec(d: usize, e: usize, h: &[u64]) -> GolodSpec {
        GolodSpec::new(d, e, h.to_vec()).unwrap()
    }

    #[test]
    fn validation() {
        assert!(GolodSpec::new(0, 2, vec![2, 1]).is_err());
        assert!(GolodSpec::new(0, 2, vec![1, 0]).is_err());
        assert!(GolodSpec::new(0, 3, vec![1, 1]).is_err());
        assert!(GolodSpec::new(2, 2, vec![]).is_err());
        assert!(GolodSpec::new(1, 2, vec![1]).is_ok());
    }

    #[test]
    fn merge() {
        assert_eq!(ranks_merge(&spec(0, 2, &[1, 1])).c, vec![1, 2, 1]);
        assert_eq!(ranks_merge(&spec(0, 3, &[1, 1, 1])).c, vec![1, 2, 2, 1]);
        assert_eq!(ranks_merge(&spec(1, 2, &[1])).c, vec![1, 1, 0]);
    }

    #[test]
    fn upper_bound() {
        let c = KoszulRanks::new(vec![1, 2, 1]).unwrap();
        let s = golod_upper_bound(&c, 2, 5).unwrap();
        assert_eq!(s, PowerSeries::from_ints(&[1, 2, 2, 4, 6, 10]));
        let f = golod_upper_bound_rf(&c, 2);
        assert!(f.num().eval(&rat(-1)).is_zero());
        assert!(f.den().eval(&rat(-1)).is_zero());
        let c3 = KoszulRanks::new(vec![1, 2, 2, 1]).unwrap();
        let s3 = golod_upper_bound(&c3, 3, 5).unwrap();
        assert_eq!(s3, PowerSeries::from_ints(&[1, 2, 4, 6, 12, 22]));
    }

    #[test]
    fn bass_series() {
        assert_eq!(
            golod_bass_series(&spec(0, 2, &[1, 1]), 5).unwrap(),
            PowerSeries::from_ints(&[1, 2, 2, 4, 6, 10])
        );
        assert_eq!(
            golod_bass_series(&spec(0, 2, &[1, 2]), 4).unwrap(),
            PowerSeries::from_ints(&[2, 3, 6, 12, 24])
        );
        let s = spec(0, 3, &[1, 1, 1]);
        let mu = golod_bass_series(&s, 5).unwrap();
        assert_eq!(mu, PowerSeries::from_ints(&[1, 2, 4, 6, 12, 22]));
        assert_eq!(mu, golod_upper_bound(&ranks_merge(&s), 3, 5).unwrap());
        assert_eq!(golod_bass_series(&spec(1, 2, &[1]), 5), Err(Error::GorensteinCase(1)));
    }

    #[test]
    fn depth_shifts_the_series() {
        let s = golod_bass_series(&spec(2, 4, &[1, 3]), 6).unwrap();
        assert_eq!(s, codim2_bass(2, 3, 6).unwrap());
        assert_eq!(s, PowerSeries::from_ints(&[0, 0, 3, 4, 12, 24, 60]));
    }

    #[test]
    fn recurrences() {
        let ex1 = spec(0, 2, &[1, 1]);
        let mu = golod_bass_series(&ex1, 12).unwrap();
        assert!(bass_recurrence_check(&ex1, &mu).unwrap().holds);

        let s = spec(0, 2, &[1, 2]);
        let mu2 = PowerSeries::from_ints(&[2, 3, 6, 12, 24]);
        assert!(bass_recurrence_check(&s, &mu2).unwrap().holds);

        let mut bad = PowerSeries::from_ints(&[1, 2, 2, 4, 6, 10]).into_coeffs();
        bad[5] = rat(11);
        let r = bass_recurrence_check(&ex1, &PowerSeries::new(bad)).unwrap();
        assert_eq!((r.holds, r.failed.as_deref(), r.n), (false, Some("mu_e+n"), Some(3)));

        let short = PowerSeries::from_ints(&[1, 2, 2]);
        assert!(bass_recurrence_check(&ex1, &short).is_err());
    }

    #[test]
    fn rates() {
        match golod_rate(&spec(0, 2, &[1, 2]), 60).unwrap() {
            GolodRate::Exponential { rate, certified, .. } => {
                assert_eq!(rate, ratio(3, 2));
                assert!(certified);
            }
            other => panic!("unexpected {other:?}"),
        }
        match golod_rate(&spec(0, 3, &[1, 1, 1]), 60).unwrap() {
            GolodRate::Exponential { rate, certified, .. } => {
                assert_eq!(rate, ratio(3, 2));
                assert!(certified);
            }
            other => panic!("unexpected {other:?}"),
        }
        assert_eq!(
            golod_rate(&spec(0, 2, &[1, 1]), 60).unwrap(),
            GolodRate::FibonacciException { verified: true, order: 60 }
        );
    }

    #[test]
    fn codim2() {
        assert_eq!(codim2_bass(0, 1, 5).unwrap(), PowerSeries::from_ints(&[1, 2, 2, 4, 6, 10]));
        assert_eq!(codim2_bass(0, 2, 5).unwrap(), PowerSeries::from_ints(&[2, 3, 6, 12, 24, 48]));
        assert_eq!(codim2_closed_form(1, 4).unwrap(), rat(6));
        assert_eq!(codim2_closed_form(2, 5).unwrap(), rat(48));
        assert_eq!(codim2_closed_form(3, 3).unwrap(), rat(24));
        assert!(codim2_closed_form(3, 2).is_err());
    }

    #[test]
    fn closed_form_matches_expansion() {
        for r in 1..=20u64 {
            let mu = codim2_bass(0, r, 63).unwrap();
            for i in 3..=60 {
                assert_eq!(&codim2_closed_form(r, i).unwrap(), mu.coeff(i).unwrap(), "r={r} i={i}");
            }
        }
    }

    #[test]
    fn fibonacci() {
        let mu = codim2_bass(0, 1, 60).unwrap();
        let f2 = fibonacci_doubles(60);
        for i in 1..=60 {
            assert_eq!(mu.coeff(i).unwrap(), &Rational::from_integer(f2[i].clone()));
        }
    }

    #[test]
    fn sweeps_agree() {
        let specs = enumerate_specs(0, 4, 3);
        assert_eq!(specs.len(), 3 + 9 + 27);
        assert_eq!(sweep(&specs, 30), sweep_seq(&specs, 30));
    }

    #[test]
    fn json_shape() {
        let s = spec(0, 2, &[1, 2]);
        let j = serde_json::to_string(&s).unwrap();
        assert_eq!(j, r#"{"depth":0,"edim":2,"h":[1,2]}"#);
        assert!(serde_json::from_str::<GolodSpec>(r#"{"depth":0,"edim":2,"h":[2,2]}"#).is_err());
    }
}
