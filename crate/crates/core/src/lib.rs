//! Exact Bass series, Poincaré series and growth certificates for local rings.
//!
//! Everything is computed over arbitrary-precision rationals. Series are
//! truncated at an explicit order, and every "for all i" statement is
//! replaced by a certificate over a named finite window.
//!
//! The crate is organised by ring family:
//!
//! * [`series`]: power series, polynomials and rational functions over ℚ.
//! * [`surd`]: exact arithmetic and ordering in ℚ(√D).
//! * [`golod`]: Golod rings from reduced Koszul ranks, codimension two.
//! * [`fiber`]: fiber products of local rings.
//! * [`teter`]: Teter rings and the ρ/R rate tables.
//! * [`artinian`]: syzygy length arithmetic and radical-cube-zero bounds.
//! * [`growth`]: monotonicity, termwise rates and exponential certificates.
//! * [`reproduce`]: the canned fixture catalogue used by the CLI.
//!
//! With the default `parallel` feature, batch sweeps and long Cauchy
//! products are spread over a rayon pool; see [`par`].

pub mod artinian;
pub mod error;
pub mod fiber;
pub mod golod;
pub mod growth;
pub mod par;
pub mod reproduce;
pub mod series;
pub mod surd;
pub mod teter;

pub use error::{Error, Result};
pub use series::{Polynomial, PowerSeries, Rational, RationalFunction};
pub use surd::QuadraticSurd;
