//! Report types emitted by the subcommands, and their CSV and table forms.
//!
//! Every report round-trips through JSON; rationals are written as strings.

use std::fmt::Write as _;

use bassforge::artinian::{BettiWindow, DividesReport, ScholiumCertificate, ScholiumSequence};
use bassforge::fiber::{FiberClassification, IncreaseCertificate};
use bassforge::golod::{GolodRate, GolodSpec};
use bassforge::growth::{GrowthReport, TermwiseCertificate};
use bassforge::reproduce::FixtureReport;
use bassforge::teter::{RhoTable, TeterGrowthReport, TeterSpec};
use bassforge::PowerSeries;
use serde::{Deserialize, Serialize};

pub trait Render: Serialize {
    /// One row, no header.
    fn csv(&self) -> String;
    fn table(&self) -> String;
}

fn join<T: ToString>(xs: &[T]) -> String {
    xs.iter().map(ToString::to_string).collect::<Vec<_>>().join(",")
}

fn opt<T: ToString>(x: &Option<T>) -> String {
    x.as_ref().map_or_else(|| "-".to_string(), ToString::to_string)
}

/// Right-aligned columns; the first row is the header.
fn columns(rows: &[Vec<String>]) -> String {
    let width = rows.iter().map(Vec::len).max().unwrap_or(0);
    let widths: Vec<usize> = (0..width)
        .map(|c| rows.iter().filter_map(|r| r.get(c)).map(|s| s.chars().count()).max().unwrap_or(0))
        .collect();
    let mut out = String::new();
    for row in rows {
        let cells: Vec<String> = row.iter().zip(&widths).map(|(s, w)| format!("{s:>w$}", w = *w)).collect();
        out.push_str(cells.join("  ").trim_end());
        out.push('\n');
    }
    out
}

fn series_table(label: &str, s: &PowerSeries) -> String {
    let mut rows = vec![vec!["i".to_string(), label.to_string()]];
    rows.extend(s.coeffs().iter().enumerate().map(|(i, c)| vec![i.to_string(), c.to_string()]));
    columns(&rows)
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct GolodReport {
    pub spec: GolodSpec,
    pub series: PowerSeries,
    pub rate: GolodRate,
}

impl Render for GolodReport {
    fn csv(&self) -> String {
        join(self.series.coeffs())
    }

    fn table(&self) -> String {
        let s = &self.spec;
        let mut out = format!("depth {}, edim {}, h = {}\n", s.depth(), s.edim(), join(s.h()));
        out.push_str(&series_table("μ_i", &self.series));
        match &self.rate {
            GolodRate::Exponential { rate, certified, first_violation, order } => {
                let verdict = if *certified {
                    "certified".to_string()
                } else {
                    format!("fails at {}", opt(first_violation))
                };
                let _ = writeln!(out, "rate {rate}: μ_(i+1) >= {rate}·μ_i to order {order}, {verdict}");
            }
            GolodRate::FibonacciException { verified, order } => {
                let _ = writeln!(out, "Fibonacci case: μ_(d+i) = 2F_i to order {order}, verified {verified}");
            }
        }
        out
    }
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct Codim2Report {
    pub depth: usize,
    #[serde(rename = "type")]
    pub r: u64,
    pub series: PowerSeries,
}

impl Render for Codim2Report {
    fn csv(&self) -> String {
        join(self.series.coeffs())
    }

    fn table(&self) -> String {
        format!("depth {}, type {}\n{}", self.depth, self.r, series_table("μ_i", &self.series))
    }
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct FiberReport {
    pub depth: usize,
    pub classification: FiberClassification,
    pub poincare: PowerSeries,
    pub bass: PowerSeries,
    pub increase: IncreaseCertificate,
}

impl Render for FiberReport {
    fn csv(&self) -> String {
        join(self.bass.coeffs())
    }

    fn table(&self) -> String {
        let mut rows = vec![vec!["i".into(), "P_i".into(), "μ_i".into()]];
        for (i, (p, m)) in self.poincare.coeffs().iter().zip(self.bass.coeffs()).enumerate() {
            rows.push(vec![i.to_string(), p.to_string(), m.to_string()]);
        }
        let inc = &self.increase;
        format!(
            "depth {}, {:?}\n{}increasing from {} to order {}: {}\n",
            self.depth,
            self.classification,
            columns(&rows),
            inc.depth,
            inc.order,
            if inc.holds {
                "yes".to_string()
            } else {
                format!("no, first failure at {}", opt(&inc.first_violation))
            }
        )
    }
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct TeterReport {
    pub spec: TeterSpec,
    pub series: PowerSeries,
    pub growth: TeterGrowthReport,
}

impl Render for TeterReport {
    fn csv(&self) -> String {
        join(self.series.coeffs())
    }

    fn table(&self) -> String {
        let g = &self.growth;
        let mut out = format!("edim Q = {}, P_Q = {}\n", g.e, self.spec.poincare_q());
        out.push_str(&series_table("μ_i", &self.series));
        let _ = writeln!(
            out,
            "R_{} = {}: (1 - R·t)·I >= 0 {}, increasing {}",
            g.e,
            g.rate,
            if g.damped_non_negative {
                "yes".to_string()
            } else {
                format!("no (at {})", opt(&g.damped_first_violation))
            },
            if g.increasing { "yes".to_string() } else { format!("no (at {})", opt(&g.first_non_increase)) },
        );
        if let Some(c) = g.closed_form {
            let _ = writeln!(out, "μ_i = 3·2^(i-1): {c}");
        }
        out
    }
}

impl Render for RhoTable {
    fn csv(&self) -> String {
        join(&self.values)
    }

    fn table(&self) -> String {
        let e = self.e;
        let mut rows = vec![vec!["i".to_string(), format!("ρ_{e}(i)")]];
        rows.extend(self.values.iter().enumerate().map(|(i, v)| vec![i.to_string(), v.to_string()]));
        format!("{}R_{e} = {} at i={}\n", columns(&rows), self.minimum, self.argmin)
    }
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct ScholiumReport {
    pub sequence: ScholiumSequence,
    pub certificate: ScholiumCertificate,
}

impl Render for ScholiumReport {
    fn csv(&self) -> String {
        self.sequence.window.as_ref().map(|w| join(w.values())).unwrap_or_default()
    }

    fn table(&self) -> String {
        let s = &self.sequence;
        let mut out = format!(
            "a = {}, e = {}, r = {}: {:?}, rate {}\n",
            s.spec.a(),
            s.spec.e(),
            s.spec.r(),
            s.case,
            s.rate
        );
        match (&s.window, &self.certificate.certificate) {
            (Some(w), Some(c)) => {
                out.push_str(&window_table(w));
                let verdict = if c.holds {
                    "holds".to_string()
                } else {
                    format!("fails at {}", opt(&c.first_violation))
                };
                let _ = writeln!(out, "b_(i+1) >= {}·b_i from {}: {verdict}", c.rate, s.certify_from);
            }
            _ => out.push_str("no extremal sequence; the rate is a table entry\n"),
        }
        out
    }
}

fn window_table(w: &BettiWindow) -> String {
    let mut rows = vec![vec!["i".to_string(), "b_i".to_string()]];
    rows.extend(
        w.values().iter().enumerate().map(|(k, v)| vec![(w.start_index() + k).to_string(), v.to_string()]),
    );
    columns(&rows)
}

impl Render for BettiWindow {
    fn csv(&self) -> String {
        join(self.values())
    }

    fn table(&self) -> String {
        window_table(self)
    }
}

impl Render for DividesReport {
    fn csv(&self) -> String {
        join(&self.syzygy_lengths)
    }

    fn table(&self) -> String {
        let mut rows = vec![vec!["j".to_string(), "ℓ(M_j)".to_string()]];
        rows.extend(self.syzygy_lengths.iter().enumerate().map(|(j, l)| vec![j.to_string(), l.to_string()]));
        let mut out = columns(&rows);
        if self.consistent {
            out.push_str("consistent\n");
        }
        for v in &self.violations {
            let _ = writeln!(out, "violates rule ({}) at index {}", v.rule, v.index);
        }
        out
    }
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct AnalyzeReport {
    pub growth: GrowthReport,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub termwise: Option<TermwiseCertificate>,
}

impl Render for AnalyzeReport {
    fn csv(&self) -> String {
        let g = &self.growth;
        let mut cells = vec![
            g.start_index.to_string(),
            opt(&g.nondecreasing_from),
            opt(&g.increasing_from),
            opt(&g.min_ratio),
            opt(&g.exp_base_certificate),
        ];
        if let Some(t) = &self.termwise {
            cells.push(t.holds.to_string());
        }
        cells.join(",")
    }

    fn table(&self) -> String {
        let g = &self.growth;
        let mut rows = vec![
            vec!["start".to_string(), g.start_index.to_string()],
            vec!["window".to_string(), g.window.to_string()],
            vec!["non-decreasing from".to_string(), opt(&g.nondecreasing_from)],
            vec!["increasing from".to_string(), opt(&g.increasing_from)],
            vec!["min ratio".to_string(), opt(&g.min_ratio)],
            vec!["a_i >= A^i with A".to_string(), opt(&g.exp_base_certificate)],
        ];
        if let Some(t) = &self.termwise {
            let verdict =
                if t.holds { "holds".to_string() } else { format!("fails at {}", opt(&t.first_violation)) };
            rows.push(vec![format!("a_(i+1) >= {}·a_i", t.rate), verdict]);
        }
        rows.iter().map(|r| format!("{:<24}{}\n", r[0], r[1])).collect()
    }
}

impl Render for FixtureReport {
    fn csv(&self) -> String {
        join(&self.series)
    }

    fn table(&self) -> String {
        self.to_string()
    }
}

impl Render for Vec<FixtureReport> {
    fn csv(&self) -> String {
        self.iter().map(|r| format!("{},{}", r.name, r.csv())).collect::<Vec<_>>().join("\n")
    }

    fn table(&self) -> String {
        self.iter().map(ToString::to_string).collect::<Vec<_>>().join("\n")
    }
}
