use thiserror::Error;

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum Error {
    #[error("division by an interval that contains zero")]
    DivisionByZeroInterval,
    #[error("square root of an interval with a negative lower endpoint")]
    NegativeRadicand,
    #[error("rational with zero denominator")]
    ZeroDenominator,
    #[error("precision exhausted: {0}")]
    PrecisionExhausted(&'static str),
    #[error("working precision {needed} exceeds the limit of {limit} digits")]
    ResourceLimit { needed: u64, limit: u32 },
    #[error("{0} is not a side count of the form 3*2^k")]
    UnsupportedSideCount(u64),
    #[error("malformed radical expression: {0:?}")]
    MalformedRadical(String),
    #[error("malformed decimal: {0:?}")]
    MalformedDecimal(String),
    #[error("value must be positive")]
    NonPositiveValue,
    #[error("no convergent with denominator <= {den_cap} is certified {side} the enclosure")]
    NoValidBound { den_cap: u64, side: &'static str },
    #[error("unknown series {0:?}")]
    UnsupportedSeriesName(String),
    #[error("invalid term count {terms} for series {series}")]
    InvalidTermCount { series: &'static str, terms: u32 },
}

pub type Result<T> = std::result::Result<T, Error>;
