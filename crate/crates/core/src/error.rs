//! Error type shared by all modules.

use thiserror::Error;

pub type Result<T> = std::result::Result<T, Error>;

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum Error {
    #[error("NonPrimeP: {0} is not prime")]
    NonPrimeP(u64),
    #[error("ReducibleModulus: modulus is not irreducible over F_p")]
    ReducibleModulus,
    #[error("NoDefaultModulus: no built-in modulus for p={p}, l={l} (p^l > 64)")]
    NoDefaultModulus { p: u64, l: u32 },
    #[error("ZeroPolynomial: operation undefined for the zero polynomial")]
    ZeroPolynomial,
    #[error("IncompatibleContexts: {0}")]
    IncompatibleContexts(String),
    #[error("NonSquare: matrix is not square")]
    NonSquare,
    #[error("NotMonic: polynomial is not monic")]
    NotMonic,
    #[error("UnknownVariable: {0}")]
    UnknownVariable(String),
    #[error("NegativePrecision: precision {0} < 0")]
    NegativePrecision(i64),
    #[error("ReducibleF: {0} is not irreducible")]
    ReducibleF(String),
    #[error("StructureViolation: {0}")]
    StructureViolation(String),
    #[error("ZeroTail: all coefficients of tau^s, s >= 1, vanish")]
    ZeroTail,
    #[error("DegreeOutOfTable: degree {requested} exceeds table degree {available}")]
    DegreeOutOfTable { requested: usize, available: usize },
    #[error("TableTooSmall: need mu values up to degree {needed}, table holds {available}")]
    TableTooSmall { needed: usize, available: usize },
    #[error("TermBudgetExceeded: {terms} monomials exceed budget {budget}")]
    TermBudgetExceeded { terms: usize, budget: usize },
    #[error("NZero: evaluation on the Goss plane requires n > 0")]
    NZero,
    #[error("NotApplicable: {0}")]
    NotApplicable(String),
    #[error("NonUnitLeading: leading coefficient is not a unit constant")]
    NonUnitLeading,
    #[error("ParseError: {0}")]
    Parse(String),
}

impl Error {
    /// Short machine-readable name, used by the CLI when surfacing errors.
    pub fn name(&self) -> &'static str {
        match self {
            Error::NonPrimeP(_) => "NonPrimeP",
            Error::ReducibleModulus => "ReducibleModulus",
            Error::NoDefaultModulus { .. } => "NoDefaultModulus",
            Error::ZeroPolynomial => "ZeroPolynomial",
            Error::IncompatibleContexts(_) => "IncompatibleContexts",
            Error::NonSquare => "NonSquare",
            Error::NotMonic => "NotMonic",
            Error::UnknownVariable(_) => "UnknownVariable",
            Error::NegativePrecision(_) => "NegativePrecision",
            Error::ReducibleF(_) => "ReducibleF",
            Error::StructureViolation(_) => "StructureViolation",
            Error::ZeroTail => "ZeroTail",
            Error::DegreeOutOfTable { .. } => "DegreeOutOfTable",
            Error::TableTooSmall { .. } => "TableTooSmall",
            Error::TermBudgetExceeded { .. } => "TermBudgetExceeded",
            Error::NZero => "NZero",
            Error::NotApplicable(_) => "NotApplicable",
            Error::NonUnitLeading => "NonUnitLeading",
            Error::Parse(_) => "ParseError",
        }
    }
}
