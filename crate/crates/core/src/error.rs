use thiserror::Error;

pub type Result<T> = std::result::Result<T, Error>;

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum Error {
    #[error("modulus {0} is outside the supported range 2..=64")]
    InvalidModulus(u32),

    #[error("residue {value} is not reduced modulo {modulus}")]
    InvalidResidue { value: u64, modulus: u32 },

    #[error("modulus mismatch: {left} vs {right}")]
    ModulusMismatch { left: u32, right: u32 },

    #[error("multiplier {c} is not coprime to {modulus}")]
    InvalidTransform { c: u32, modulus: u32 },

    #[error("{what} = {value} is outside {min}..={max}")]
    OutOfRange {
        what: &'static str,
        value: i64,
        min: i64,
        max: i64,
    },

    #[error("operation requires a nonempty sequence")]
    EmptySequence,

    #[error("{0} is not prime")]
    NotPrime(u32),

    #[error("parse error: {0}")]
    Parse(String),

    #[error("invalid enumeration spec: {0}")]
    InvalidSpec(String),

    /// The caller asked for a check whose hypotheses do not hold.
    #[error("hypothesis not met: {0}")]
    HypothesisNotMet(String),

    /// Hypotheses hold but the stated conclusion does not: a counterexample.
    #[error("critical finding: {0}")]
    ConclusionFailed(String),

    #[error("no qualifying sequence for n={n}, k={k}")]
    NoQualifyingSequence { n: u32, k: u32 },

    #[error("cache error: {0}")]
    Cache(String),
}

impl Error {
    pub(crate) fn range(what: &'static str, value: impl TryInto<i64>, min: i64, max: i64) -> Self {
        Error::OutOfRange {
            what,
            value: value.try_into().unwrap_or(i64::MAX),
            min,
            max,
        }
    }

    pub fn is_critical(&self) -> bool {
        matches!(self, Error::ConclusionFailed(_))
    }
}
