//! Monotonicity and growth certificates for finite windows of a sequence.
//!
//! Every statement here is about the supplied window only. "From index s"
//! means from `s` through the last entry.

use num_traits::{One, Signed};
use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};
use crate::series::{serde_rational, Rational};
use crate::surd::QuadraticSurd;

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
#[serde(rename_all = "camelCase")]
pub struct GrowthReport {
    pub start_index: usize,
    /// Number of entries inspected, counted from `start_index`.
    pub window: usize,
    /// Smallest `s ≥ start` with `a_s ≤ a_{s+1} ≤ …` to the end.
    pub nondecreasing_from: Option<usize>,
    /// Smallest `s ≥ start` with `a_s < a_{s+1} < …` to the end.
    pub increasing_from: Option<usize>,
    /// `min a_{i+1}/a_i` over the window; `None` for a single entry.
    #[serde(with = "serde_rational::option")]
    pub min_ratio: Option<Rational>,
    /// `A > 1` with `a_i ≥ A^i` at every absolute index `i` of the window.
    #[serde(with = "serde_rational::option")]
    pub exp_base_certificate: Option<Rational>,
}

fn check_positive(seq: &[Rational], start: usize) -> Result<()> {
    if start >= seq.len() {
        return Err(Error::IndexOutOfRange { index: start, max: seq.len().saturating_sub(1) });
    }
    match (start..seq.len()).find(|&i| !seq[i].is_positive()) {
        Some(index) => Err(Error::NonpositiveEntry { index, value: seq[index].to_string() }),
        None => Ok(()),
    }
}

/// Scans `seq[start..]`. The exponential base is `candidate` when given,
/// otherwise the minimum ratio.
pub fn analyze(seq: &[Rational], start: usize, candidate: Option<&Rational>) -> Result<GrowthReport> {
    check_positive(seq, start)?;
    let last = seq.len() - 1;
    let tail_from = |ok: &dyn Fn(&Rational, &Rational) -> bool| {
        let mut s = last;
        while s > start && ok(&seq[s - 1], &seq[s]) {
            s -= 1;
        }
        s
    };
    let nondecreasing_from = Some(tail_from(&|a, b| a <= b));
    let increasing_from = Some(tail_from(&|a, b| a < b));
    let min_ratio = (start..last).map(|i| &seq[i + 1] / &seq[i]).min();

    let base = candidate.cloned().or_else(|| min_ratio.clone());
    let exp_base_certificate = base.filter(|a| *a > Rational::one()).filter(|a| {
        let mut power = num_traits::pow(a.clone(), start);
        (start..=last).all(|i| {
            let ok = seq[i] >= power;
            power *= a;
            ok
        })
    });

    Ok(GrowthReport {
        start_index: start,
        window: seq.len() - start,
        nondecreasing_from,
        increasing_from,
        min_ratio,
        exp_base_certificate,
    })
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
#[serde(rename_all = "camelCase")]
pub struct TermwiseCertificate {
    pub holds: bool,
    /// The first `i` with `a_{i+1} < A·a_i`.
    pub first_violation: Option<usize>,
    pub rate: QuadraticSurd,
}

/// Checks `a_{i+1} ≥ A·a_i` for every step of `seq[start..]`, exactly.
pub fn certify_termwise(seq: &[Rational], start: usize, rate: &QuadraticSurd) -> Result<TermwiseCertificate> {
    check_positive(seq, start)?;
    let first_violation = (start..seq.len() - 1)
        .find(|&i| rate.mul_rational(&seq[i]).cmp_rational(&seq[i + 1]) == std::cmp::Ordering::Greater);
    Ok(TermwiseCertificate { holds: first_violation.is_none(), first_violation, rate: rate.clone() })
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::series::{rat, ratio, rats};

    #[test]
    fn example_windows() {
        let r = analyze(&rats(&[1, 2, 2, 4, 6, 10]), 0, None).unwrap();
        assert_eq!(r.nondecreasing_from, Some(0));
        assert_eq!(r.increasing_from, Some(2));
        assert_eq!(r.min_ratio, Some(rat(1)));
        assert_eq!(r.exp_base_certificate, None);

        let r = analyze(&rats(&[2, 3, 6, 12, 24]), 0, None).unwrap();
        assert_eq!(r.increasing_from, Some(0));
        assert_eq!(r.min_ratio, Some(ratio(3, 2)));
        assert_eq!(r.exp_base_certificate, Some(ratio(3, 2)));

        let r = analyze(&rats(&[5]), 0, None).unwrap();
        assert_eq!((r.nondecreasing_from, r.increasing_from), (Some(0), Some(0)));
        assert_eq!(r.min_ratio, None);
    }

    #[test]
    fn exponential_base_uses_absolute_indices() {
        // 3·2^i ≥ 2^i everywhere, but 2^i ≥ (5/2)^i fails at i = 1
        let seq: Vec<Rational> = (0..10).map(|i| rat(3 << i)).collect();
        let r = analyze(&seq, 4, None).unwrap();
        assert_eq!(r.exp_base_certificate, Some(rat(2)));
        let r = analyze(&seq, 4, Some(&ratio(5, 2))).unwrap();
        assert_eq!(r.exp_base_certificate, None);
        let r = analyze(&seq, 4, Some(&rat(1))).unwrap();
        assert_eq!(r.exp_base_certificate, None);
    }

    #[test]
    fn entries_must_be_positive() {
        let seq = rats(&[0, 1, 2]);
        assert!(analyze(&seq, 1, None).is_ok());
        assert!(matches!(analyze(&seq, 0, None), Err(Error::NonpositiveEntry { index: 0, .. })));
        assert!(analyze(&seq, 3, None).is_err());
    }

    #[test]
    fn termwise() {
        let seq = rats(&[2, 3, 6, 12]);
        assert!(certify_termwise(&seq, 0, &QuadraticSurd::from_rational(&ratio(3, 2))).unwrap().holds);
        let c = certify_termwise(&seq, 0, &QuadraticSurd::from_int(2)).unwrap();
        assert_eq!(c.first_violation, Some(0));
        let flat = rats(&[1, 1, 2, 2]);
        assert!(certify_termwise(&flat, 0, &QuadraticSurd::one()).unwrap().holds);
        assert!(!certify_termwise(&rats(&[2, 1]), 0, &QuadraticSurd::one()).unwrap().holds);
    }

    #[test]
    fn golden_ratio_on_doubled_fibonacci() {
        // F_{i+1}/F_i alternates around φ, so every other step falls short
        let seq = rats(&[2, 2, 4, 6, 10, 16]);
        let phi: QuadraticSurd = "(1+sqrt5)/2".parse().unwrap();
        let c = certify_termwise(&seq, 1, &phi).unwrap();
        assert_eq!(c.first_violation, Some(2));
        let c = certify_termwise(&seq, 3, &phi).unwrap();
        assert_eq!(c.first_violation, Some(4));
        assert!(certify_termwise(&seq, 1, &QuadraticSurd::from_rational(&ratio(3, 2))).unwrap().holds);
    }
}
