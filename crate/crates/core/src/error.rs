use thiserror::Error;

pub type Result<T> = std::result::Result<T, Error>;

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum Error {
    #[error("denominator has zero constant term")]
    ZeroConstantTerm,
    #[error("{0} is not a common root of numerator and denominator")]
    NotACommonRoot(String),
    #[error("operands live in different quadratic fields (D = {0} and D = {1})")]
    MixedRadicands(u64, u64),
    #[error("division by zero")]
    DivisionByZero,
    #[error("closed form left an irrational residue: {0}")]
    IrrationalResidue(String),
    #[error("ring is Gorenstein (e - d = {0}); Bass series is a monomial")]
    GorensteinCase(usize),
    #[error("invalid spec: {0}")]
    InvalidSpec(String),
    #[error("invalid Poincaré series: {0}")]
    InvalidPoincare(String),
    #[error("index {index} out of range 0..={max}")]
    IndexOutOfRange { index: usize, max: usize },
    #[error("precondition violated: {0}")]
    PreconditionViolated(String),
    #[error("recurrence produced non-positive term {value} at index {index}")]
    NonpositiveTerm { index: usize, value: String },
    #[error("sequence entry {value} at index {index} is not positive")]
    NonpositiveEntry { index: usize, value: String },
    #[error("parse error: {0}")]
    Parse(String),
}

impl Error {
    /// Stable machine-readable identifier, used by the CLI's error objects.
    pub fn code(&self) -> &'static str {
        match self {
            Error::ZeroConstantTerm => "ZeroConstantTerm",
            Error::NotACommonRoot(_) => "NotACommonRoot",
            Error::MixedRadicands(..) => "MixedRadicands",
            Error::DivisionByZero => "DivisionByZero",
            Error::IrrationalResidue(_) => "IrrationalResidue",
            Error::GorensteinCase(_) => "GorensteinCase",
            Error::InvalidSpec(_) => "InvalidSpec",
            Error::InvalidPoincare(_) => "InvalidPoincare",
            Error::IndexOutOfRange { .. } => "IndexOutOfRange",
            Error::PreconditionViolated(_) => "PreconditionViolated",
            Error::NonpositiveTerm { .. } => "NonpositiveTerm",
            Error::NonpositiveEntry { .. } => "NonpositiveEntry",
            Error::Parse(_) => "Parse",
        }
    }
}
