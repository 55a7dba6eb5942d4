//! Poincaré and Bass series of fiber products `S ×_k T`.

use num_traits::{One, Signed, Zero};
use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};
use crate::series::{rat, serde_rational, Polynomial, PowerSeries, Rational, RationalFunction};

/// One factor of a fiber product.
///
/// A regular ring of dimension `n` is described by `n` alone; its Poincaré
/// series `(1+t)^n` and Bass series `t^n` are synthesised on demand.
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
#[serde(try_from = "RawComponent", into = "RawComponent")]
pub enum FiberComponent {
    Regular { dim: usize },
    Singular { poincare: RationalFunction, bass: RationalFunction, depth: usize, edim: usize },
}

#[derive(Serialize, Deserialize)]
#[serde(tag = "kind", rename_all = "lowercase")]
enum RawComponent {
    Regular { dim: usize },
    Singular { poincare: RationalFunction, bass: RationalFunction, depth: usize, edim: usize },
}

impl TryFrom<RawComponent> for FiberComponent {
    type Error = Error;

    fn try_from(raw: RawComponent) -> Result<Self> {
        match raw {
            RawComponent::Regular { dim } => Ok(FiberComponent::Regular { dim }),
            RawComponent::Singular { poincare, bass, depth, edim } => {
                FiberComponent::singular(poincare, bass, depth, edim)
            }
        }
    }
}

impl From<FiberComponent> for RawComponent {
    fn from(c: FiberComponent) -> Self {
        match c {
            FiberComponent::Regular { dim } => RawComponent::Regular { dim },
            FiberComponent::Singular { poincare, bass, depth, edim } => {
                RawComponent::Singular { poincare, bass, depth, edim }
            }
        }
    }
}

impl FiberComponent {
    pub fn regular(dim: usize) -> Self {
        FiberComponent::Regular { dim }
    }

    /// Checks that `P(0) = 1`, that the `t`-coefficient of `P` is the
    /// embedding dimension and that the Bass series starts in degree `depth`.
    pub fn singular(
        poincare: RationalFunction,
        bass: RationalFunction,
        depth: usize,
        edim: usize,
    ) -> Result<Self> {
        if edim == 0 {
            return Err(Error::InvalidSpec("a singular component has edim >= 1".into()));
        }
        let p = poincare.expand(1)?;
        if !p.coeffs()[0].is_one() {
            return Err(Error::InvalidPoincare(format!("constant term must be 1, got {}", p.coeffs()[0])));
        }
        if p.coeffs()[1] != rat(edim as i64) {
            return Err(Error::InvalidPoincare(format!(
                "degree-1 coefficient {} does not match edim {edim}",
                p.coeffs()[1]
            )));
        }
        let b = bass.expand(depth)?;
        if b.valuation() != Some(depth) {
            return Err(Error::InvalidSpec(format!("Bass series must start in degree depth = {depth}")));
        }
        Ok(FiberComponent::Singular { poincare, bass, depth, edim })
    }

    /// `k[x_1..x_e]/(x_1..x_e)²`: `P = 1/(1-et)`, `I = (e-t)/(1-et)`.
    pub fn square_zero(e: usize) -> Self {
        let e_ = e as i64;
        let den = [1, -e_];
        FiberComponent::Singular {
            poincare: RationalFunction::from_ints(&[1], &den).expect("nonzero"),
            bass: RationalFunction::from_ints(&[e_, -1], &den).expect("nonzero"),
            depth: 0,
            edim: e,
        }
    }

    /// The zero-dimensional hypersurface `k[x]/(x²)`.
    pub fn hypersurface0() -> Self {
        Self::square_zero(1)
    }

    pub fn depth(&self) -> usize {
        match self {
            FiberComponent::Regular { dim } => *dim,
            FiberComponent::Singular { depth, .. } => *depth,
        }
    }

    pub fn edim(&self) -> usize {
        match self {
            FiberComponent::Regular { dim } => *dim,
            FiberComponent::Singular { edim, .. } => *edim,
        }
    }

    pub fn poincare(&self) -> RationalFunction {
        match self {
            FiberComponent::Regular { dim } => {
                RationalFunction::from_polynomial(Polynomial::one_plus_t_pow(*dim))
            }
            FiberComponent::Singular { poincare, .. } => poincare.clone(),
        }
    }

    pub fn bass(&self) -> RationalFunction {
        match self {
            FiberComponent::Regular { dim } => {
                RationalFunction::from_polynomial(Polynomial::monomial(Rational::one(), *dim))
            }
            FiberComponent::Singular { bass, .. } => bass.clone(),
        }
    }

    fn is_regular_of_dim(&self, n: usize) -> bool {
        matches!(self, FiberComponent::Regular { dim } if *dim == n)
    }

    /// `P = 1/(1-t)` after normalisation, i.e. `k[x]/(x²)`.
    fn is_zero_dim_hypersurface(&self) -> bool {
        match self {
            FiberComponent::Singular { poincare, depth, .. } => {
                let p = poincare.reduced();
                *depth == 0 && p.num() == &Polynomial::one() && p.den() == &Polynomial::from_ints(&[1, -1])
            }
            FiberComponent::Regular { .. } => false,
        }
    }
}

/// `1/P^R = 1/P^S + 1/P^T - 1`, as a rational function.
pub fn fiber_poincare_rf(s: &FiberComponent, t: &FiberComponent) -> Result<RationalFunction> {
    let inv =
        s.poincare().recip()?.add(&t.poincare().recip()?).sub(&RationalFunction::constant(Rational::one()));
    inv.recip()
}

pub fn fiber_poincare(s: &FiberComponent, t: &FiberComponent, order: usize) -> Result<PowerSeries> {
    fiber_poincare_rf(s, t)?.expand(order)
}

/// Contribution of one factor to `I^R/P^R`: `I/P` for a singular ring and
/// `-t^{n+1}/(1+t)^n` for a regular ring of dimension `n`.
fn quotient_term(c: &FiberComponent) -> Result<RationalFunction> {
    match c {
        FiberComponent::Regular { dim } => {
            RationalFunction::new(Polynomial::monomial(rat(-1), dim + 1), Polynomial::one_plus_t_pow(*dim))
        }
        FiberComponent::Singular { poincare, bass, .. } => bass.div(poincare),
    }
}

pub fn fiber_bass_rf(s: &FiberComponent, t: &FiberComponent) -> Result<RationalFunction> {
    let p = fiber_poincare_rf(s, t)?;
    let ratio = RationalFunction::from_polynomial(Polynomial::monomial(Rational::one(), 1))
        .add(&quotient_term(s)?)
        .add(&quotient_term(t)?);
    Ok(p.mul(&ratio))
}

pub fn fiber_bass(s: &FiberComponent, t: &FiberComponent, order: usize) -> Result<PowerSeries> {
    fiber_bass_rf(s, t)?.expand(order)
}

/// `min{depth S, depth T, 1}`.
pub fn fiber_depth(depth_s: usize, depth_t: usize) -> usize {
    depth_s.min(depth_t).min(1)
}

/// The fiber product as a component in its own right, so that products
/// can be iterated.
pub fn fiber_product(s: &FiberComponent, t: &FiberComponent) -> Result<FiberComponent> {
    FiberComponent::singular(
        fiber_poincare_rf(s, t)?,
        fiber_bass_rf(s, t)?,
        fiber_depth(s.depth(), t.depth()),
        s.edim() + t.edim(),
    )
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize, Deserialize)]
#[serde(rename_all = "snake_case")]
pub enum FiberClassification {
    /// Both factors are 1-dimensional regular rings.
    Hypersurface,
    /// A 1-dimensional regular ring against `k[x]/(x²)` or a 2-dimensional
    /// regular ring: Golod with `μ_{d+1} = 2 = μ_{d+2}`.
    GolodException,
    General,
}

pub fn classify_exception(s: &FiberComponent, t: &FiberComponent) -> FiberClassification {
    if s.is_regular_of_dim(1) && t.is_regular_of_dim(1) {
        return FiberClassification::Hypersurface;
    }
    let partner_is_exceptional = |c: &FiberComponent| c.is_zero_dim_hypersurface() || c.is_regular_of_dim(2);
    if (s.is_regular_of_dim(1) && partner_is_exceptional(t))
        || (t.is_regular_of_dim(1) && partner_is_exceptional(s))
    {
        FiberClassification::GolodException
    } else {
        FiberClassification::General
    }
}

/// Positivity of `(1-t)·I^R` from the depth on: the Bass numbers increase
/// strictly on `d..=order`.
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct IncreaseCertificate {
    pub depth: usize,
    pub order: usize,
    pub holds: bool,
    pub first_violation: Option<usize>,
}

pub fn increase_certificate(
    s: &FiberComponent,
    t: &FiberComponent,
    order: usize,
) -> Result<IncreaseCertificate> {
    let d = fiber_depth(s.depth(), t.depth());
    let diff = fiber_bass(s, t, order)?.first_differences();
    let first_violation = (d..=order).find(|&i| !diff.coeffs()[i].is_positive());
    Ok(IncreaseCertificate { depth: d, order, holds: first_violation.is_none(), first_violation })
}

/// The auxiliary series `V = 1/(1 - t²·Σ c_i t^i)` with its growth facts.
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct Series1V {
    pub v: PowerSeries,
    /// `v_{i+1} > v_i` for `2 ≤ i < order`.
    pub increasing: bool,
    /// `v_i > (√c_0)^i` for `3 ≤ i ≤ order`.
    pub beats_sqrt_c0: bool,
}

impl Series1V {
    pub fn certified(&self) -> bool {
        self.increasing && self.beats_sqrt_c0
    }
}

pub fn series1_v(c: &[Rational], order: usize) -> Result<Series1V> {
    let Some(c0) = c.first() else {
        return Err(Error::PreconditionViolated("c is empty".into()));
    };
    if *c0 <= Rational::one() {
        return Err(Error::PreconditionViolated(format!("c_0 = {c0} must exceed 1")));
    }
    if let Some(i) = (1..c.len()).find(|&i| c[i] <= c[i - 1]) {
        return Err(Error::PreconditionViolated(format!("c is not strictly increasing at index {i}")));
    }
    let needed = order.saturating_sub(1);
    if c.len() < needed {
        return Err(Error::PreconditionViolated(format!(
            "order {order} needs c_0..c_{}; only {} given",
            needed.saturating_sub(1),
            c.len()
        )));
    }
    let mut den = vec![Rational::one(), Rational::zero()];
    den.extend(c.iter().take(needed).map(|x| -x));
    let v = PowerSeries::one(order).div(&PowerSeries::from_polynomial(&Polynomial::new(den), order))?;
    let vs = v.coeffs();
    let increasing = (2..order).all(|i| vs[i + 1] > vs[i]);
    // v_i > c_0^{i/2} ⇔ v_i > 0 and v_i² > c_0^i
    let mut c0_pow = c0 * c0 * c0;
    let mut beats_sqrt_c0 = true;
    for x in vs.iter().skip(3) {
        if !(x.is_positive() && x * x > c0_pow) {
            beats_sqrt_c0 = false;
            break;
        }
        c0_pow *= c0;
    }
    Ok(Series1V { v, increasing, beats_sqrt_c0 })
}

/// Outcome of checking that `(1-t)·V·W` is positive away from degree 1.
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct Series1Check {
    pub holds: bool,
    /// The degree-1 coefficient, which equals `w_1 - w_0`.
    #[serde(with = "serde_rational")]
    pub degree_one: Rational,
    pub first_violation: Option<usize>,
}

pub fn series1_check_b(w: &RationalFunction, c: &[Rational], order: usize) -> Result<Series1Check> {
    let ws = w.expand(order)?;
    if ws.coeffs()[0].is_zero() {
        return Err(Error::PreconditionViolated("W must have order 0".into()));
    }
    if !w_condition_check(w, order)? {
        return Err(Error::PreconditionViolated("(1 - t + t²)·W has a negative coefficient".into()));
    }
    let v = series1_v(c, order)?.v;
    let prod = v.mul(&ws).first_differences();
    let coeffs = prod.coeffs();
    let degree_one = coeffs.get(1).cloned().unwrap_or_else(Rational::zero);
    let first_violation =
        (0..=order).find(|&i| if i == 1 { coeffs[i].is_negative() } else { !coeffs[i].is_positive() });
    Ok(Series1Check { holds: first_violation.is_none(), degree_one, first_violation })
}

/// `(1 - t + t²)·W ≥ 0` coefficient-wise up to `order`.
pub fn w_condition_check(w: &RationalFunction, order: usize) -> Result<bool> {
    let s = w.expand(order)?.mul_poly(&Polynomial::from_ints(&[1, -1, 1]));
    Ok(s.coeffs().iter().all(|x| !x.is_negative()))
}

/// Named components used for corpus sweeps.
pub fn corpus() -> Vec<(&'static str, FiberComponent)> {
    let ex1 = fiber_product(&FiberComponent::hypersurface0(), &FiberComponent::regular(1))
        .expect("k[[x,y]]/(x², xy)");
    vec![
        ("hyp0", FiberComponent::hypersurface0()),
        ("m2e2", FiberComponent::square_zero(2)),
        ("m2e3", FiberComponent::square_zero(3)),
        ("ex1", ex1),
        ("R1", FiberComponent::regular(1)),
        ("R2", FiberComponent::regular(2)),
        ("R3", FiberComponent::regular(3)),
    ]
}
