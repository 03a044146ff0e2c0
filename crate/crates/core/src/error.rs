use thiserror::Error;

pub type Result<T> = std::result::Result<T, Error>;

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum Error {
    #[error("d = {0} is not square-free")]
    NotSquareFree(i64),
    #[error("d = {0} is not allowed (d must differ from 0 and 1)")]
    InvalidD(i64),
    #[error("{0} is not prime")]
    NotPrime(u64),
    #[error("modulus mismatch: {0} vs {1}")]
    ModulusMismatch(u64, u64),
    #[error("search space {size} exceeds the limit {limit}")]
    TooLarge { size: u128, limit: u128 },
    #[error("invalid isoclass label: {0}")]
    InvalidLabel(String),
    #[error("monomial matrix shape mismatch: {0}")]
    ShapeMismatch(String),
    #[error("generated group exceeds {0} elements")]
    GroupTooLarge(usize),
    #[error("no clean functional equation: {0}")]
    NoCleanFunctionalEquation(String),
    #[error("not a power series: {0}")]
    NotPowerSeries(String),
    #[error("{classes} conjugacy classes exceed the limit {limit}")]
    ClassCountTooLarge { classes: usize, limit: usize },
    #[error("no suitable field characteristic for exponent {0}")]
    NoSuitableFieldChar(u64),
    #[error("quotient level k = {k} is too shallow for dimension p^{n} (needs k >= {needed})")]
    QuotientTooShallow { k: u32, n: u32, needed: u32 },
    #[error("character table computation failed: {0}")]
    Dixon(String),
    #[error("invalid argument: {0}")]
    InvalidArgument(String),
}

impl Error {
    /// The variant name, for machine-readable error reports.
    pub fn kind(&self) -> &'static str {
        match self {
            Error::NotSquareFree(_) => "NotSquareFree",
            Error::InvalidD(_) => "InvalidD",
            Error::NotPrime(_) => "NotPrime",
            Error::ModulusMismatch(..) => "ModulusMismatch",
            Error::TooLarge { .. } => "TooLarge",
            Error::InvalidLabel(_) => "InvalidLabel",
            Error::ShapeMismatch(_) => "ShapeMismatch",
            Error::GroupTooLarge(_) => "GroupTooLarge",
            Error::NoCleanFunctionalEquation(_) => "NoCleanFunctionalEquation",
            Error::NotPowerSeries(_) => "NotPowerSeries",
            Error::ClassCountTooLarge { .. } => "ClassCountTooLarge",
            Error::NoSuitableFieldChar(_) => "NoSuitableFieldChar",
            Error::QuotientTooShallow { .. } => "QuotientTooShallow",
            Error::Dixon(_) => "Dixon",
            Error::InvalidArgument(_) => "InvalidArgument",
        }
    }

    /// Process exit code for the command-line surface: 2 for bad input, 3 for
    /// resource guards. Verification failures (exit 1) are not errors.
    pub fn exit_code(&self) -> i32 {
        match self {
            Error::TooLarge { .. }
            | Error::GroupTooLarge(_)
            | Error::ClassCountTooLarge { .. } => 3,
            Error::Dixon(_) => 1,
            _ => 2,
        }
    }
}
