use thiserror::Error;

/// Errors raised anywhere in the pipeline.
#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum Error {
    #[error("no generators given")]
    EmptyInput,
    #[error("generator 0 is not allowed")]
    ZeroGenerator,
    #[error("generators {0:?} have gcd {1}, not 1")]
    NonCoprimeGenerators(Vec<u32>, u32),
    #[error("{0} is not representable below the conductor")]
    NotRepresentable(u32),
    #[error("unbound variable `{0}`")]
    UnboundVariable(String),
    #[error("unknown variable `{0}`")]
    UnknownVariable(String),
    #[error("series moduli differ ({0} vs {1})")]
    ModulusMismatch(u32, u32),
    #[error("the zero polynomial has no weighted order")]
    ZeroPolynomial,
    #[error("expected 3 minimal generators, got {0}")]
    WrongGeneratorCount(usize),
    #[error("expected {expected} generator series, got {got}")]
    ArityMismatch { expected: usize, got: usize },
    #[error("generator series are not in normal form")]
    NotNormalForm,
    #[error("generator {0} has order 0")]
    OrderZeroGenerator(usize),
    #[error("series coefficient `{0}` is not a rational constant")]
    NonNumericSeries(String),
    #[error("no generator series given")]
    NoGenerators,
    #[error("point is not in the variety; violated: {0}")]
    NotInVariety(String),
    #[error("parse error: {0}")]
    Parse(String),
}

pub type Result<T> = std::result::Result<T, Error>;
