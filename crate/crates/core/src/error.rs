//! Error type shared by all modules of the crate.

use std::fmt;

pub type Result<T> = std::result::Result<T, Error>;

#[derive(Debug, Clone, PartialEq, Eq)]
pub enum Error {
    /// p is not an odd prime (p = 2 is excluded by construction).
    NotOddPrime { p: u64 },
    /// Extension degree must be at least 2.
    DegreeTooSmall { m: u32 },
    /// p^m exceeds the configured magnitude bound.
    OrderTooLarge { p: u64, m: u32, max: u64 },
    /// Supplied modulus is not a monic degree-m polynomial with reduced coefficients.
    BadModulus { reason: &'static str },
    /// Supplied element has the wrong shape or unreduced coefficients.
    BadElement { reason: &'static str },
    /// Supplied modulus factors over GF(p).
    Reducible,
    /// Supplied element does not generate the multiplicative group.
    NotPrimitive { order: u64 },
    /// Multiplicative inverse of zero requested.
    InverseOfZero,
    /// underline-mod needs a modulus greater than 1.
    BadUnderlineModulus { n: i64 },
    /// Malformed comma-separated coefficient list.
    BadCoefficientString { reason: &'static str },

    EmptySequence,
    NonBinarySymbol { index: usize, value: u8 },
    /// Declared period is not the least period of the stored bits.
    LeastPeriodViolation { declared: usize, least: usize },
    ShiftOutOfRange { e: u64, period: u64 },
    PeriodMismatch { lhs: usize, rhs: usize },
    EmptyFamily,
    /// Period not divisible by the de-interleaving factor.
    IndivisiblePeriod { period: usize, count: usize },

    DivisionByZeroPoly,
    GcdOfZeroPolys,
    BadHex { reason: &'static str },

    TauOutOfRange { tau: u64, limit: u64 },
    /// Cross-correlation prediction requires e1 < e2.
    ShiftOrder { e1: u64, e2: u64 },
    InsufficientData { len: usize, need: usize },
    /// The three linear-complexity methods are forced to agree; divergence is a bug.
    MethodDisagreement { l_closed: u64, l_gcd: u64, l_bm: u64 },
    MinimalPolyMismatch { expected_hex: String, got_hex: String },
    NotPositive { what: &'static str },
    PeriodNotEven { n: u64 },
    /// Full e-sweep refused; pass an explicit e-list for instances this large.
    SweepTooLarge { n: u64, limit: u64 },
}

impl fmt::Display for Error {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        use Error::*;
        match self {
            NotOddPrime { p } => write!(f, "p must be an odd prime (got {p})"),
            DegreeTooSmall { m } => write!(f, "extension degree m must be > 1 (got {m})"),
            OrderTooLarge { p, m, max } => {
                write!(f, "field order {p}^{m} exceeds the magnitude bound {max}")
            }
            BadModulus { reason } => write!(f, "invalid modulus polynomial: {reason}"),
            BadElement { reason } => write!(f, "invalid field element: {reason}"),
            Reducible => write!(f, "polynomial is reducible over GF(p)"),
            NotPrimitive { order } => {
                write!(f, "element is not primitive (multiplicative order {order})")
            }
            InverseOfZero => write!(f, "zero has no multiplicative inverse"),
            BadUnderlineModulus { n } => write!(f, "underline-mod requires n > 1 (got {n})"),
            BadCoefficientString { reason } => {
                write!(f, "malformed coefficient list: {reason}")
            }
            EmptySequence => write!(f, "sequence must contain at least one symbol"),
            NonBinarySymbol { index, value } => {
                write!(f, "symbol at index {index} is {value}, expected 0 or 1")
            }
            LeastPeriodViolation { declared, least } => write!(
                f,
                "declared period {declared} is not least (bits repeat with period {least})"
            ),
            ShiftOutOfRange { e, period } => {
                write!(f, "shift {e} out of range for period {period}")
            }
            PeriodMismatch { lhs, rhs } => {
                write!(f, "period mismatch: {lhs} vs {rhs}")
            }
            EmptyFamily => write!(f, "interleaving needs at least one sequence"),
            IndivisiblePeriod { period, count } => {
                write!(f, "period {period} is not divisible by {count}")
            }
            DivisionByZeroPoly => write!(f, "division by the zero polynomial"),
            GcdOfZeroPolys => write!(f, "gcd of two zero polynomials is undefined"),
            BadHex { reason } => write!(f, "malformed hex string: {reason}"),
            TauOutOfRange { tau, limit } => {
                write!(f, "shift tau {tau} out of range [0, {limit})")
            }
            ShiftOrder { e1, e2 } => {
                write!(f, "cross-correlation requires e1 < e2 (got e1={e1}, e2={e2})")
            }
            InsufficientData { len, need } => {
                write!(f, "need at least {need} symbols, got {len}")
            }
            MethodDisagreement { l_closed, l_gcd, l_bm } => write!(
                f,
                "linear-complexity methods disagree: closed-form {l_closed}, gcd {l_gcd}, berlekamp-massey {l_bm}"
            ),
            MinimalPolyMismatch { expected_hex, got_hex } => write!(
                f,
                "minimal polynomial mismatch: closed form {expected_hex}, gcd method {got_hex}"
            ),
            NotPositive { what } => write!(f, "{what} must be positive"),
            PeriodNotEven { n } => write!(f, "period {n} must be even"),
            SweepTooLarge { n, limit } => write!(
                f,
                "full e-sweep refused for N = {n} > {limit}; pass an explicit e-list"
            ),
        }
    }
}

impl std::error::Error for Error {}
