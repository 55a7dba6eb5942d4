//! The `bassforge` command line.

pub mod args;
pub mod report;

use std::ffi::OsString;
use std::io::Write;
use std::path::Path;

use bassforge::artinian::{
    divides_check, extremal_recurrence, scholium_certificate, scholium_extremal, BettiWindow, M3Spec,
};
use bassforge::fiber::{
    classify_exception, fiber_bass, fiber_depth, fiber_poincare, increase_certificate, FiberComponent,
};
use bassforge::golod::{codim2_bass, golod_bass_series, golod_rate, GolodSpec};
use bassforge::growth::{analyze, certify_termwise};
use bassforge::series::parse_rational_list;
use bassforge::teter::{r_min, teter_bass, teter_growth_check, TeterSpec};
use bassforge::{reproduce, Polynomial, RationalFunction};
use clap::error::ErrorKind;
use clap::Parser;

use args::{ArtinianCommand, Cli, Command, Format};
use report::*;

/// Failure of one invocation, with its exit status.
#[derive(Debug)]
pub enum Failure {
    /// Malformed input: exit 2.
    Parse(String),
    /// Input read fine but was rejected: exit 1.
    Core(bassforge::Error),
    Io(String),
}

impl Failure {
    pub fn exit_code(&self) -> i32 {
        match self {
            Failure::Parse(_) | Failure::Core(bassforge::Error::Parse(_)) => 2,
            Failure::Core(_) | Failure::Io(_) => 1,
        }
    }

    fn object(&self) -> serde_json::Value {
        let (code, message) = match self {
            Failure::Parse(m) => ("Parse", m.clone()),
            Failure::Core(e) => (e.code(), e.to_string()),
            Failure::Io(m) => ("Io", m.clone()),
        };
        serde_json::json!({ "code": code, "message": message })
    }
}

impl From<bassforge::Error> for Failure {
    fn from(e: bassforge::Error) -> Self {
        Failure::Core(e)
    }
}

fn emit<R: Render>(r: &R, format: Format) -> String {
    match format {
        Format::Json => serde_json::to_string_pretty(r).expect("reports serialize"),
        Format::Csv => r.csv(),
        Format::Table => r.table().trim_end().to_string(),
    }
}

fn read_component(path: &Path) -> Result<FiberComponent, Failure> {
    let text = std::fs::read_to_string(path).map_err(|e| Failure::Io(format!("{}: {e}", path.display())))?;
    serde_json::from_str(&text).map_err(|e| Failure::Parse(format!("{}: {e}", path.display())))
}

fn poincare_arg(parts: &[String]) -> Result<RationalFunction, Failure> {
    let (mut num, mut den) = (None, None);
    for p in parts {
        match p.split_once('=') {
            Some(("num", v)) => num = Some(parse_rational_list(v)?),
            Some(("den", v)) => den = Some(parse_rational_list(v)?),
            _ => return Err(Failure::Parse(format!("expected num=.. or den=.., got {p:?}"))),
        }
    }
    match (num, den) {
        (Some(n), Some(d)) => Ok(RationalFunction::new(Polynomial::new(n), Polynomial::new(d))?),
        _ => Err(Failure::Parse("--poincare-q needs both num=.. and den=..".into())),
    }
}

/// Rendered report, and whether every check inside it passed.
type Outcome = Result<(String, bool), Failure>;

fn output<T: Render>(r: Result<T, Failure>, format: Format) -> Outcome {
    r.map(|r| (emit(&r, format), true))
}

fn dispatch(cli: Cli) -> Outcome {
    let (order, format) = (cli.order, cli.format);
    match cli.command {
        Command::Golod { depth, edim, h } => {
            let spec = GolodSpec::new(depth, edim, h)?;
            let series = golod_bass_series(&spec, order)?;
            let rate = golod_rate(&spec, order)?;
            output(Ok(GolodReport { spec, series, rate }), format)
        }
        Command::Codim2 { depth, r } => {
            let series = codim2_bass(depth, r, order)?;
            output(Ok(Codim2Report { depth, r, series }), format)
        }
        Command::Fiber { left, right } => {
            let (s, t) = (read_component(&left)?, read_component(&right)?);
            let report = FiberReport {
                depth: fiber_depth(s.depth(), t.depth()),
                classification: classify_exception(&s, &t),
                poincare: fiber_poincare(&s, &t, order)?,
                bass: fiber_bass(&s, &t, order)?,
                increase: increase_certificate(&s, &t, order)?,
            };
            output(Ok(report), format)
        }
        Command::Teter { poincare_q } => {
            let spec = TeterSpec::new(poincare_arg(&poincare_q)?)?;
            let series = teter_bass(&spec, order)?;
            let growth = teter_growth_check(&spec, order)?;
            output(Ok(TeterReport { spec, series, growth }), format)
        }
        Command::Rho { edim } => output(Ok(r_min(edim)?), format),
        Command::Artinian { command } => match command {
            ArtinianCommand::Scholium { spec } => {
                let spec = M3Spec::new(spec.a, spec.e, spec.r)?;
                let report = ScholiumReport {
                    sequence: scholium_extremal(&spec, order)?,
                    certificate: scholium_certificate(&spec, order)?,
                };
                output(Ok(report), format)
            }
            ArtinianCommand::Extremal { e, a, b0, b1 } => {
                output(Ok(extremal_recurrence(e, a, b0, b1, order)?), format)
            }
            ArtinianCommand::Divides { lr, lm, betti } => {
                let window = BettiWindow::from_u64(&betti)?;
                output(Ok(divides_check(lr, lm, &window)?), format)
            }
        },
        Command::Analyze { seq, from, rate } => {
            let candidate = rate.as_ref().and_then(|r| r.to_rational());
            let growth = analyze(&seq, from, candidate.as_ref())?;
            let termwise = rate.as_ref().map(|r| certify_termwise(&seq, from, r)).transpose()?;
            output(Ok(AnalyzeReport { growth, termwise }), format)
        }
        Command::Reproduce { name, edim } => {
            if name == "all" {
                let reports = reproduce::run_all(order)?;
                Ok((emit(&reports, format), reports.iter().all(|r| r.pass)))
            } else {
                let report = reproduce::run(&name, order, edim)?;
                Ok((emit(&report, format), report.pass))
            }
        }
    }
}

/// Runs one invocation, writing the report to `out` and errors to `err`.
/// Returns the process exit status.
pub fn run_with<I, T>(argv: I, out: &mut dyn Write, err: &mut dyn Write) -> i32
where
    I: IntoIterator<Item = T>,
    T: Into<OsString> + Clone,
{
    let cli = match Cli::try_parse_from(argv) {
        Ok(cli) => cli,
        Err(e) => {
            return match e.kind() {
                ErrorKind::DisplayHelp
                | ErrorKind::DisplayVersion
                | ErrorKind::DisplayHelpOnMissingArgumentOrSubcommand
                    if e.exit_code() == 0 =>
                {
                    let _ = write!(out, "{}", e.render());
                    0
                }
                _ => {
                    let _ = write!(err, "{}", e.render());
                    2
                }
            };
        }
    };
    match dispatch(cli) {
        Ok((text, pass)) => {
            let _ = writeln!(out, "{text}");
            // a failed fixture still prints its report
            if pass {
                0
            } else {
                1
            }
        }
        Err(f) => {
            let _ = writeln!(err, "{}", f.object());
            f.exit_code()
        }
    }
}

pub fn run<I, T>(argv: I) -> i32
where
    I: IntoIterator<Item = T>,
    T: Into<OsString> + Clone,
{
    run_with(argv, &mut std::io::stdout().lock(), &mut std::io::stderr().lock())
}
