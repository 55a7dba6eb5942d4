//! Betti sequences over rings with `m³ = 0`, syzygy lengths, and the rate
//! bounds for the Bass sequence in terms of `a = rank m²`, `e = edim` and
//! `r = rank Soc R`.

use num_bigint::BigInt;
use num_integer::Integer;
use num_traits::{One, Signed};
use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};
use crate::golod::codim2_bass;
use crate::growth::{certify_termwise, TermwiseCertificate};
use crate::par;
use crate::series::{serde_bigint, Rational};
use crate::surd::QuadraticSurd;

/// The invariants `(a, e, r)` of an artinian ring with `m³ = 0`.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, Serialize, Deserialize)]
#[serde(try_from = "RawM3Spec", into = "RawM3Spec")]
pub struct M3Spec {
    a: u64,
    e: u64,
    r: u64,
}

#[derive(Serialize, Deserialize)]
struct RawM3Spec {
    a: u64,
    e: u64,
    r: u64,
}

impl TryFrom<RawM3Spec> for M3Spec {
    type Error = Error;

    fn try_from(s: RawM3Spec) -> Result<Self> {
        M3Spec::new(s.a, s.e, s.r)
    }
}

impl From<M3Spec> for RawM3Spec {
    fn from(s: M3Spec) -> Self {
        RawM3Spec { a: s.a, e: s.e, r: s.r }
    }
}

impl M3Spec {
    /// Besides `a ≤ r` and `a = 0 ⇒ e = r`, requires `e ≥ 2`, `r ≥ 1` and,
    /// for `a > 0`, `r - a ≤ e - 1`: the socle generators outside `m²` are
    /// minimal generators of `m`, and at least one generator is not in the
    /// socle.
    pub fn new(a: u64, e: u64, r: u64) -> Result<Self> {
        let bad = |m: String| Err(Error::InvalidSpec(m));
        if e < 2 {
            return bad(format!("e = {e}; need e >= 2"));
        }
        if r == 0 {
            return bad("r must be positive".into());
        }
        if a > r {
            return bad(format!("a = {a} exceeds r = {r}"));
        }
        if a == 0 && e != r {
            return bad(format!("a = 0 forces e = r, got e = {e}, r = {r}"));
        }
        if a > 0 && r - a > e - 1 {
            return bad(format!("r - a = {} exceeds e - 1 = {}", r - a, e - 1));
        }
        Ok(M3Spec { a, e, r })
    }

    pub fn a(&self) -> u64 {
        self.a
    }

    pub fn e(&self) -> u64 {
        self.e
    }

    pub fn r(&self) -> u64 {
        self.r
    }

    pub fn is_gorenstein(&self) -> bool {
        self.r == 1
    }

    /// `rank(mE/m²E)` for the injective hull `E` of the residue field.
    pub fn hull_rank_m_over_m2(&self) -> u64 {
        if self.a == 0 {
            1
        } else {
            self.e + self.a - self.r
        }
    }

    pub fn length(&self) -> u64 {
        1 + self.e + self.a
    }
}

/// Consecutive Betti numbers `b_start, b_start+1, …`, all at least 1.
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
#[serde(try_from = "RawBettiWindow", into = "RawBettiWindow")]
pub struct BettiWindow {
    values: Vec<BigInt>,
    start_index: usize,
}

#[derive(Serialize, Deserialize)]
#[serde(rename_all = "camelCase")]
struct RawBettiWindow {
    #[serde(with = "serde_bigint::vec")]
    values: Vec<BigInt>,
    #[serde(default)]
    start_index: usize,
}

impl TryFrom<RawBettiWindow> for BettiWindow {
    type Error = Error;

    fn try_from(w: RawBettiWindow) -> Result<Self> {
        BettiWindow::new(w.values, w.start_index)
    }
}

impl From<BettiWindow> for RawBettiWindow {
    fn from(w: BettiWindow) -> Self {
        RawBettiWindow { values: w.values, start_index: w.start_index }
    }
}

impl BettiWindow {
    pub fn new(values: Vec<BigInt>, start_index: usize) -> Result<Self> {
        if values.is_empty() {
            return Err(Error::InvalidSpec("empty Betti window".into()));
        }
        if let Some(i) = values.iter().position(|v| !v.is_positive()) {
            return Err(Error::NonpositiveEntry { index: start_index + i, value: values[i].to_string() });
        }
        Ok(BettiWindow { values, start_index })
    }

    pub fn from_u64(values: &[u64]) -> Result<Self> {
        Self::new(values.iter().map(|&v| BigInt::from(v)).collect(), 0)
    }

    pub fn values(&self) -> &[BigInt] {
        &self.values
    }

    pub fn start_index(&self) -> usize {
        self.start_index
    }

    pub fn len(&self) -> usize {
        self.values.len()
    }

    pub fn is_empty(&self) -> bool {
        self.values.is_empty()
    }

    /// `b_i` by absolute index.
    pub fn get(&self, i: usize) -> Option<&BigInt> {
        i.checked_sub(self.start_index).and_then(|k| self.values.get(k))
    }

    pub fn last_index(&self) -> usize {
        self.start_index + self.values.len() - 1
    }

    pub fn to_rationals(&self) -> Vec<Rational> {
        self.values.iter().cloned().map(Rational::from_integer).collect()
    }

    fn require_from_zero(&self) -> Result<()> {
        if self.start_index == 0 {
            Ok(())
        } else {
            Err(Error::PreconditionViolated(format!(
                "length computations need b_0; window starts at {}",
                self.start_index
            )))
        }
    }
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
#[serde(rename_all = "camelCase")]
pub struct SyzygyLength {
    /// `j` such that the value is `ℓ(M_{j+1})`.
    pub j: usize,
    #[serde(with = "serde_bigint")]
    pub length: BigInt,
    /// `ℓ(M_{k+1})` for every `k ≤ j`.
    #[serde(with = "serde_bigint::vec")]
    pub prefix_lengths: Vec<BigInt>,
    /// `ℓ(M_{j+1}) ≡ (-1)^{j+1}·ℓ(M)` modulo `ℓ(R)`.
    pub congruent: bool,
}

/// Lengths of the syzygies from the exact sequence
/// `0 → M_{j+1} → R^{b_j} → … → R^{b_0} → M → 0`.
pub fn syzygy_lengths(l_r: u64, l_m: u64, betti: &BettiWindow) -> Result<Vec<BigInt>> {
    betti.require_from_zero()?;
    let l_r = BigInt::from(l_r);
    let mut prev = BigInt::from(l_m);
    Ok(betti
        .values
        .iter()
        .map(|b| {
            prev = b * &l_r - &prev;
            prev.clone()
        })
        .collect())
}

pub fn syzygy_length(l_r: u64, l_m: u64, betti: &BettiWindow) -> Result<SyzygyLength> {
    if l_r == 0 {
        return Err(Error::PreconditionViolated("length of R must be positive".into()));
    }
    let prefix_lengths = syzygy_lengths(l_r, l_m, betti)?;
    let j = prefix_lengths.len() - 1;
    let length = prefix_lengths[j].clone();
    let sign = if j % 2 == 0 { -1 } else { 1 };
    let target = BigInt::from(l_m) * sign;
    let diff: BigInt = &length - target;
    let congruent = diff.is_multiple_of(&BigInt::from(l_r));
    Ok(SyzygyLength { j, length, prefix_lengths, congruent })
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
#[serde(rename_all = "camelCase")]
pub struct DividesViolation {
    /// `"i"`: some `b_i = 1` though `ℓ(R) | ℓ(M)`; `"ii"`: `b_1 < b_0` though
    /// `ℓ(M) = ℓ(R)`; `"iii"`: a syzygy of non-positive length.
    pub rule: String,
    pub index: usize,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
#[serde(rename_all = "camelCase")]
pub struct DividesReport {
    pub consistent: bool,
    pub violations: Vec<DividesViolation>,
    #[serde(with = "serde_bigint::vec")]
    pub syzygy_lengths: Vec<BigInt>,
}

/// Consistency of a Betti window of a non-free module with the length
/// arithmetic. `syzygy_lengths[j]` is `ℓ(M_{j+1})`.
pub fn divides_check(l_r: u64, l_m: u64, betti: &BettiWindow) -> Result<DividesReport> {
    if l_r == 0 || l_m == 0 {
        return Err(Error::PreconditionViolated("lengths must be positive".into()));
    }
    let lengths = syzygy_lengths(l_r, l_m, betti)?;
    let mut violations = Vec::new();
    let v = |rule: &str, index| DividesViolation { rule: rule.into(), index };
    if l_m.is_multiple_of(l_r) {
        for (i, b) in betti.values.iter().enumerate() {
            if b.is_one() {
                violations.push(v("i", i));
            }
        }
    }
    if l_m == l_r && betti.len() >= 2 && betti.values[1] < betti.values[0] {
        violations.push(v("ii", 1));
    }
    for (j, len) in lengths.iter().enumerate() {
        if !len.is_positive() {
            violations.push(v("iii", j + 1));
        }
    }
    Ok(DividesReport { consistent: violations.is_empty(), violations, syzygy_lengths: lengths })
}

/// What the caller knows about the module beyond its Betti numbers.
#[derive(Clone, Debug, Default, PartialEq, Eq, Serialize, Deserialize)]
#[serde(rename_all = "camelCase")]
pub struct ModuleFacts {
    /// `no_k_summand[i]`: the residue field is asserted not to be a direct
    /// summand of the syzygy `M_i`. Missing entries assert nothing.
    #[serde(default)]
    pub no_k_summand: Vec<bool>,
    /// `rank(mM/m²M)`, needed for the bound on `b_1`.
    #[serde(default)]
    pub rank_m_over_m2: Option<u64>,
    /// Whether `m²M = 0`.
    #[serde(default)]
    pub m2_annihilates: Option<bool>,
    /// The `k`-rank of `M_1`.
    #[serde(default)]
    pub s: Option<u64>,
}

impl ModuleFacts {
    /// Facts about the injective hull of the residue field, whose Betti
    /// numbers are the Bass numbers of the ring.
    pub fn injective_hull(spec: &M3Spec) -> Self {
        ModuleFacts {
            no_k_summand: Vec::new(),
            rank_m_over_m2: Some(spec.hull_rank_m_over_m2()),
            m2_annihilates: Some(spec.a == 0),
            s: None,
        }
    }

    pub fn with_no_summand_through(mut self, last: usize) -> Self {
        self.no_k_summand = (0..=last).map(|i| i >= 1).collect();
        self
    }

    fn no_summand(&self, i: usize) -> bool {
        self.no_k_summand.get(i).copied().unwrap_or(false)
    }
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
#[serde(rename_all = "camelCase")]
pub struct BoundCheck {
    /// `"betti1"`, `"betti3"`, `"betti2_eq"`, `"betti_eq"` or `"betti2"`.
    pub fact: String,
    pub index: usize,
    #[serde(with = "serde_bigint")]
    pub lhs: BigInt,
    #[serde(with = "serde_bigint")]
    pub rhs: BigInt,
    /// Whether `lhs = rhs`.
    pub equality: bool,
    pub holds: bool,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
#[serde(rename_all = "camelCase")]
pub struct BoundReport {
    pub consistent: bool,
    pub checks: Vec<BoundCheck>,
}

/// Checks a Betti window against the inequalities available over a ring
/// with `m³ = 0`, and against their equality forms where the supplied
/// facts force equality.
pub fn m3_bound_check(spec: &M3Spec, betti: &BettiWindow, facts: &ModuleFacts) -> Result<BoundReport> {
    betti.require_from_zero()?;
    let b = &betti.values;
    let (a, e, r) = (BigInt::from(spec.a), BigInt::from(spec.e), BigInt::from(spec.r));
    let mut checks = Vec::new();
    let mut push = |fact: &str, index, lhs: BigInt, rhs: BigInt, holds: bool| {
        checks.push(BoundCheck { fact: fact.into(), index, equality: lhs == rhs, holds, lhs, rhs });
    };

    if let (Some(rank), true) = (facts.rank_m_over_m2, b.len() >= 2) {
        let rhs = &e * &b[0] - BigInt::from(rank);
        let mut holds = b[1] >= rhs;
        if facts.no_summand(1) {
            holds &= b[1] == rhs;
        }
        push("betti1", 1, b[1].clone(), rhs, holds);
    }
    for i in 2..b.len() {
        let rhs = &e * &b[i - 1] - &a * &b[i - 2];
        let lhs = b[i].clone();
        push("betti3", i, lhs.clone(), rhs.clone(), lhs >= rhs);
        if facts.no_summand(i) && facts.no_summand(i - 1) {
            if i == 2 {
                if let Some(zero) = facts.m2_annihilates {
                    push("betti2_eq", 2, lhs.clone(), rhs.clone(), (lhs == rhs) == zero);
                }
            } else {
                push("betti_eq", i, lhs.clone(), rhs.clone(), lhs == rhs);
            }
        }
    }
    if spec.a == spec.r && facts.m2_annihilates == Some(true) && b.len() >= 2 {
        if let Some(s) = facts.s {
            let lhs = &e * &b[1];
            let rhs = &r * &b[0] + BigInt::from(s) * (&e - 1);
            let holds = lhs >= rhs;
            push("betti2", 1, lhs, rhs, holds);
        }
    }
    Ok(BoundReport { consistent: checks.iter().all(|c| c.holds), checks })
}

/// `b_i = e·b_{i-1} - a·b_{i-2}` from `b_0, b_1`, up to index `order`.
pub fn extremal_recurrence(e: u64, a: u64, b0: u64, b1: u64, order: usize) -> Result<BettiWindow> {
    if e < 2 {
        return Err(Error::PreconditionViolated(format!("e = {e}; need e >= 2")));
    }
    if b0 == 0 || b1 == 0 {
        return Err(Error::PreconditionViolated("seeds must be positive".into()));
    }
    let (e, a) = (BigInt::from(e), BigInt::from(a));
    let mut values = vec![BigInt::from(b0), BigInt::from(b1)];
    for i in 2..=order {
        let next = &e * &values[i - 1] - &a * &values[i - 2];
        if !next.is_positive() {
            return Err(Error::NonpositiveTerm { index: i, value: next.to_string() });
        }
        values.push(next);
    }
    values.truncate(order + 1);
    BettiWindow::new(values, 0)
}

/// The column of the rate table a spec falls into.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize, Deserialize)]
#[serde(rename_all = "snake_case")]
pub enum ScholiumCase {
    /// `a = 0`, so `e = r`.
    SquareZero,
    /// `0 < a < r`.
    SocleOutsideSquare,
    /// `a = r`, `e < r`.
    NarrowEmbedding,
    /// `a = e = r ∈ {2, 3}`.
    BalancedSmall,
    /// `a = e = r ≥ 4`.
    Balanced,
    /// `a = r`, `e = r + 1`.
    OneWider,
    /// `a = r`, `e ≥ r + 2`.
    Wide,
}

pub fn scholium_case(spec: &M3Spec) -> ScholiumCase {
    let M3Spec { a, e, r } = *spec;
    if a == 0 {
        ScholiumCase::SquareZero
    } else if a < r {
        ScholiumCase::SocleOutsideSquare
    } else if e < r {
        ScholiumCase::NarrowEmbedding
    } else if e == r {
        if r <= 3 {
            ScholiumCase::BalancedSmall
        } else {
            ScholiumCase::Balanced
        }
    } else if e == r + 1 {
        ScholiumCase::OneWider
    } else {
        ScholiumCase::Wide
    }
}

/// Lower bound for the termwise growth rate of the Bass sequence.
pub fn scholium_rate(spec: &M3Spec) -> Result<QuadraticSurd> {
    if spec.is_gorenstein() {
        return Err(Error::InvalidSpec("r = 1: the ring is Gorenstein".into()));
    }
    let M3Spec { a, e, r } = *spec;
    let q = |n: u64, d: u64| QuadraticSurd::from_rational(&Rational::new(n.into(), d.into()));
    Ok(match scholium_case(spec) {
        ScholiumCase::SquareZero => q(e, 1),
        ScholiumCase::SocleOutsideSquare => q(r - a, 1).add(&q(r - a, a + e)).expect("rational"),
        ScholiumCase::NarrowEmbedding => q(r, e),
        ScholiumCase::BalancedSmall => q(2, 1),
        ScholiumCase::Balanced => QuadraticSurd::new(r as i64, 1, 2, r * r - 4 * r)?,
        ScholiumCase::OneWider => q(r * r - 1, r),
        ScholiumCase::Wide => q(e - r, 1),
    })
}

/// `r / (ℓ(R/m^h) - 1)`.
pub fn prop_s_rate(r: u64, l_small: u64) -> Result<Rational> {
    if l_small < 2 {
        return Err(Error::PreconditionViolated(format!("ℓ(R/m^h) = {l_small}; need >= 2")));
    }
    if r < l_small {
        return Err(Error::PreconditionViolated(format!(
            "need r > ℓ(R/m^h) - 1, got r = {r}, ℓ(R/m^h) = {l_small}"
        )));
    }
    Ok(Rational::new(r.into(), (l_small - 1).into()))
}

/// `(r - rank(m² ∩ Soc R))·(1 + 1/(ℓ(R) - 1))`.
pub fn prop_growth_rate(r: u64, soc_m2: u64, l_r: u64) -> Result<Rational> {
    if soc_m2 >= r {
        return Err(Error::PreconditionViolated(format!(
            "Soc R must not lie in m²: rank(m² ∩ Soc R) = {soc_m2}, r = {r}"
        )));
    }
    if l_r < 2 {
        return Err(Error::PreconditionViolated(format!("ℓ(R) = {l_r}; need >= 2")));
    }
    let base = Rational::from_integer((r - soc_m2).into());
    Ok(base * Rational::new(l_r.into(), (l_r - 1).into()))
}

/// An extremal Bass-like sequence for one spec, with the index from which
/// the rate table's bound is claimed.
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
#[serde(rename_all = "camelCase")]
pub struct ScholiumSequence {
    pub spec: M3Spec,
    pub case: ScholiumCase,
    pub rate: QuadraticSurd,
    /// `None` for `a = e = r = 3`, where the rate is a table entry only.
    pub window: Option<BettiWindow>,
    pub certify_from: usize,
}

/// Seeds `b_0 = r` and `b_1 = e·r - rank(mE/m²E)`, continued by the
/// equality case of the bound that governs the spec's column.
pub fn scholium_extremal(spec: &M3Spec, order: usize) -> Result<ScholiumSequence> {
    let rate = scholium_rate(spec)?;
    let case = scholium_case(spec);
    let M3Spec { a, e, r } = *spec;
    let b0 = BigInt::from(r);
    let b1 = BigInt::from(e * r - spec.hull_rank_m_over_m2());
    let mut values = vec![b0, b1];
    let mut push_while = |f: &dyn Fn(&[BigInt]) -> BigInt| {
        while values.len() <= order {
            let next = f(&values);
            values.push(next);
        }
    };
    let (e_, a_, r_) = (BigInt::from(e), BigInt::from(a), BigInt::from(r));
    let certify_from = match case {
        ScholiumCase::SquareZero => {
            push_while(&|v| &e_ * v.last().unwrap());
            1
        }
        ScholiumCase::SocleOutsideSquare => {
            let k = BigInt::from(r - a);
            push_while(&|v| &k * (&v[v.len() - 1] + &v[v.len() - 2]));
            1
        }
        ScholiumCase::NarrowEmbedding => {
            push_while(&|v| (&r_ * v.last().unwrap()).div_ceil(&e_));
            1
        }
        ScholiumCase::BalancedSmall if r == 2 => {
            let mu = codim2_bass(0, 2, order.max(1))?;
            values = mu.coeffs().iter().map(|c| c.to_integer()).collect();
            1
        }
        ScholiumCase::BalancedSmall => {
            return Ok(ScholiumSequence { spec: *spec, case, rate, window: None, certify_from: 0 });
        }
        ScholiumCase::Balanced => {
            push_while(&|v| &r_ * (&v[v.len() - 1] - &v[v.len() - 2]));
            0
        }
        ScholiumCase::OneWider | ScholiumCase::Wide => {
            push_while(&|v| &e_ * &v[v.len() - 1] - &a_ * &v[v.len() - 2]);
            if case == ScholiumCase::OneWider {
                0
            } else {
                1
            }
        }
    };
    values.truncate(order + 1);
    if let Some(i) = values.iter().position(|v| !v.is_positive()) {
        return Err(Error::NonpositiveTerm { index: i, value: values[i].to_string() });
    }
    Ok(ScholiumSequence { spec: *spec, case, rate, window: Some(BettiWindow::new(values, 0)?), certify_from })
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
#[serde(rename_all = "camelCase")]
pub struct ScholiumCertificate {
    pub spec: M3Spec,
    pub case: ScholiumCase,
    pub certify_from: usize,
    /// `None` when there is no sequence to certify.
    pub certificate: Option<TermwiseCertificate>,
}

impl ScholiumCertificate {
    pub fn holds(&self) -> bool {
        self.certificate.as_ref().is_none_or(|c| c.holds)
    }
}

pub fn scholium_certificate(spec: &M3Spec, order: usize) -> Result<ScholiumCertificate> {
    let seq = scholium_extremal(spec, order)?;
    let certificate = match &seq.window {
        Some(w) => Some(certify_termwise(&w.to_rationals(), seq.certify_from, &seq.rate)?),
        None => None,
    };
    Ok(ScholiumCertificate { spec: *spec, case: seq.case, certify_from: seq.certify_from, certificate })
}

/// Every valid non-Gorenstein spec with `2 ≤ e ≤ max_e` and `2 ≤ r ≤ max_r`.
pub fn valid_specs(max_e: u64, max_r: u64) -> Vec<M3Spec> {
    let mut out = Vec::new();
    for e in 2..=max_e {
        for r in 2..=max_r {
            for a in 0..=r {
                if let Ok(s) = M3Spec::new(a, e, r) {
                    out.push(s);
                }
            }
        }
    }
    out
}

pub fn scholium_sweep(specs: &[M3Spec], order: usize) -> Vec<Result<ScholiumCertificate>> {
    par::map(specs, |s| scholium_certificate(s, order))
}

pub fn scholium_sweep_seq(specs: &[M3Spec], order: usize) -> Vec<Result<ScholiumCertificate>> {
    par::map_seq(specs, |s| scholium_certificate(s, order))
}

/// `x ↦ r·(1 - 1/x)`, whose fixed point is the balanced-case rate.
pub fn balanced_map(r: u64, x: &QuadraticSurd) -> Result<QuadraticSurd> {
    let one = QuadraticSurd::one();
    QuadraticSurd::from_int(r as i64).mul(&one.sub(&x.recip()?)?)
}
