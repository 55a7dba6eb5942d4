//! Named reproduction fixtures: each recomputes a published value through
//! the library and records a PASS/FAIL verdict per check.

use std::fmt;

use num_bigint::BigInt;
use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};
use crate::fiber::{
    classify_exception, fiber_bass, fiber_bass_rf, fiber_depth, fiber_product, FiberClassification,
    FiberComponent,
};
use crate::golod::{
    codim2_bass, codim2_closed_form, fibonacci_doubles, golod_bass_series, golod_upper_bound, ranks_merge,
    GolodSpec,
};
use crate::series::{rat, ratio, serde_rational, Polynomial, Rational, RationalFunction};
use crate::teter::{inverse_power_of_one_minus_t, r_min, rho, teter_bass, TeterSpec};

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct Check {
    pub label: String,
    pub pass: bool,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct FixtureReport {
    pub name: String,
    pub description: String,
    /// The headline sequence, when the fixture has one.
    #[serde(with = "serde_rational::vec", default)]
    pub series: Vec<Rational>,
    pub checks: Vec<Check>,
    pub pass: bool,
}

impl fmt::Display for FixtureReport {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let verdict = |p: bool| if p { "PASS" } else { "FAIL" };
        writeln!(f, "{} [{}] {}", self.name, verdict(self.pass), self.description)?;
        if !self.series.is_empty() {
            let s: Vec<String> = self.series.iter().map(ToString::to_string).collect();
            writeln!(f, "  series: {}", s.join(", "))?;
        }
        for c in &self.checks {
            writeln!(f, "  {} {}", verdict(c.pass), c.label)?;
        }
        Ok(())
    }
}

struct Builder {
    name: &'static str,
    description: String,
    series: Vec<Rational>,
    checks: Vec<Check>,
}

impl Builder {
    fn new(name: &'static str, description: impl Into<String>) -> Self {
        Builder { name, description: description.into(), series: Vec::new(), checks: Vec::new() }
    }

    fn check(&mut self, label: impl Into<String>, pass: bool) {
        self.checks.push(Check { label: label.into(), pass });
    }

    fn finish(self) -> FixtureReport {
        let pass = self.checks.iter().all(|c| c.pass);
        FixtureReport {
            name: self.name.into(),
            description: self.description,
            series: self.series,
            checks: self.checks,
            pass,
        }
    }
}

pub const NAMES: [&str; 7] =
    ["example1", "example2", "mugolod-table", "mugolod-remark", "exceptions", "teter-a", "r-table"];

fn ints(xs: &[i64]) -> Vec<Rational> {
    xs.iter().copied().map(rat).collect()
}

/// Runs one fixture. `edim` only affects `example2` (default 3).
pub fn run(name: &str, order: usize, edim: Option<usize>) -> Result<FixtureReport> {
    match name {
        "example1" => example1(order),
        "example2" => example2(edim.unwrap_or(3), order),
        "mugolod-table" => mugolod_table(order),
        "mugolod-remark" => mugolod_remark(order),
        "exceptions" => exceptions(order),
        "teter-a" => teter_a(order),
        "r-table" => r_table(),
        other => Err(Error::InvalidSpec(format!(
            "unknown fixture {other:?}; expected one of {}",
            NAMES.join(", ")
        ))),
    }
}

pub fn run_all(order: usize) -> Result<Vec<FixtureReport>> {
    NAMES.iter().map(|n| run(n, order, None)).collect()
}

fn example1(order: usize) -> Result<FixtureReport> {
    let order = order.max(5);
    let mut b = Builder::new("example1", "k[[x,y]]/(x², xy): Bass numbers by three routes");
    let spec = GolodSpec::new(0, 2, vec![1, 1])?;
    let golod = golod_bass_series(&spec, order)?;
    let bound = golod_upper_bound(&ranks_merge(&spec), 2, order)?;
    let fiber = fiber_bass(&FiberComponent::hypersurface0(), &FiberComponent::regular(1), order)?;
    b.check("first six are 1, 2, 2, 4, 6, 10", golod.coeffs()[..6] == ints(&[1, 2, 2, 4, 6, 10])[..]);
    b.check(format!("Golod formula = upper bound to order {order}"), golod == bound);
    b.check(format!("Golod formula = fiber product formula to order {order}"), golod == fiber);
    b.series = golod.into_coeffs();
    Ok(b.finish())
}

fn example2(e: usize, order: usize) -> Result<FixtureReport> {
    if e < 1 {
        return Err(Error::InvalidSpec("edim must be positive".into()));
    }
    let mut b = Builder::new("example2", format!("m² = 0, edim {e}: μ_0 = e, μ_i = e^(i-1)(e² - 1)"));
    let h = FiberComponent::hypersurface0();
    let mut ring = h.clone();
    for _ in 1..e {
        ring = fiber_product(&h, &ring)?;
    }
    let mu = ring.bass().expand(order)?;
    let e_ = rat(e as i64);
    let mut expected = vec![e_.clone()];
    let mut pow = rat(1);
    for _ in 1..=order {
        expected.push(&pow * (&e_ * &e_ - rat(1)));
        pow *= &e_;
    }
    b.check(format!("μ^i = {e}^(i-1)·{} for 1 <= i <= {order}", e * e - 1), mu.coeffs() == &expected[..]);
    if e == 2 {
        let teter = teter_bass(&TeterSpec::new(inverse_power_of_one_minus_t(2))?, order)?;
        b.check("Teter route agrees", teter == mu);
    }
    b.series = mu.into_coeffs();
    Ok(b.finish())
}

fn mugolod_table(order: usize) -> Result<FixtureReport> {
    let order = order.max(6);
    let mut b = Builder::new(
        "mugolod-table",
        "codimension two Golod: r, r+1, r(r+1), 2r(r+1), then μ_i = μ_(i-1) + r·μ_(i-2)",
    );
    for r in 1..=6u64 {
        let mu = codim2_bass(0, r, order)?;
        let m = mu.coeffs();
        let ri = r as i64;
        let head = ints(&[ri, ri + 1, ri * (ri + 1), 2 * ri * (ri + 1)]);
        let rec = (4..=order).all(|i| m[i] == &m[i - 1] + rat(ri) * &m[i - 2]);
        b.check(format!("r = {r}: table head and recurrence"), m[..4] == head[..] && rec);
        let closed = (3..=order).all(|i| codim2_closed_form(r, i).ok().as_ref() == Some(&m[i]));
        b.check(format!("r = {r}: closed form in Q(√{})", 1 + 4 * r), closed);
        if r == 3 {
            let shifted = codim2_bass(2, 3, 6)?;
            b.check(
                "depth 2 shifts the sequence: 0, 0, 3, 4, 12, 24, 60",
                shifted.coeffs() == &ints(&[0, 0, 3, 4, 12, 24, 60])[..],
            );
        }
    }
    b.series = codim2_bass(0, 2, order)?.into_coeffs();
    Ok(b.finish())
}

fn mugolod_remark(order: usize) -> Result<FixtureReport> {
    let order = order.max(2);
    let mut b = Builder::new("mugolod-remark", "r = 1 gives 2F_i, r = 2 gives 3·2^(i-1)");
    let fib = codim2_bass(0, 1, order)?;
    let f2 = fibonacci_doubles(order);
    b.check(
        format!("μ_i = 2F_i for 1 <= i <= {order}"),
        (1..=order).all(|i| fib.coeffs()[i] == Rational::from_integer(f2[i].clone())),
    );
    let two = codim2_bass(0, 2, order)?;
    b.check(
        format!("μ_i = 3·2^(i-1) for 1 <= i <= {order}"),
        (1..=order).all(|i| two.coeffs()[i] == Rational::from_integer(BigInt::from(3) << (i - 1))),
    );
    b.series = fib.into_coeffs();
    Ok(b.finish())
}

fn exceptions(order: usize) -> Result<FixtureReport> {
    let order = order.max(4);
    let mut b = Builder::new("exceptions", "fiber products with a 1-dimensional regular factor");
    let r1 = FiberComponent::regular(1);
    let r2 = FiberComponent::regular(2);
    let h = FiberComponent::hypersurface0();
    let t = RationalFunction::from_polynomial(Polynomial::from_ints(&[0, 1]));
    b.check(
        "regular(1) × regular(1) is a hypersurface: I = t",
        classify_exception(&r1, &r1) == FiberClassification::Hypersurface && fiber_bass_rf(&r1, &r1)? == t,
    );
    for (label, other) in [("regular(2)", &r2), ("k[x]/(x²)", &h)] {
        let d = fiber_depth(1, other.depth());
        let mu = fiber_bass(&r1, other, order)?;
        b.check(
            format!("regular(1) × {label}: Golod exception with μ_(d+1) = 2 = μ_(d+2)"),
            classify_exception(&r1, other) == FiberClassification::GolodException
                && mu.coeffs()[d + 1] == rat(2)
                && mu.coeffs()[d + 2] == rat(2),
        );
    }
    b.series = fiber_bass(&r1, &r2, order)?.into_coeffs();
    Ok(b.finish())
}

fn teter_a(order: usize) -> Result<FixtureReport> {
    let order = order.max(1);
    let mut b = Builder::new("teter-a", "edim Q = 2: μ_0 = 2, μ_i = 3·2^(i-1)");
    let mu = teter_bass(&TeterSpec::new(inverse_power_of_one_minus_t(2))?, order)?;
    let m = mu.coeffs();
    b.check(
        format!("closed form to order {order}"),
        m[0] == rat(2) && (1..=order).all(|i| m[i] == Rational::from_integer(BigInt::from(3) << (i - 1))),
    );
    b.series = mu.into_coeffs();
    Ok(b.finish())
}

fn r_table() -> Result<FixtureReport> {
    let mut b = Builder::new("r-table", "R_e = min ρ_e(i)");
    b.check("R_1 = 1 = R_2", r_min(1)?.minimum == rat(1) && r_min(2)?.minimum == rat(1));
    for e in 3..=9 {
        b.check(format!("R_{e} = ρ_{e}({})", e / 2), r_min(e)?.minimum == rho(e, e / 2)?);
    }
    let t10 = r_min(10)?;
    b.check(
        "R_10 = ρ_10(4) = 191/105",
        t10.argmin == 4 && t10.minimum == ratio(191, 105) && t10.minimum < rho(10, 5)?,
    );
    b.series = (1..=16).map(|e| r_min(e).map(|t| t.minimum)).collect::<Result<_>>()?;
    Ok(b.finish())
}
