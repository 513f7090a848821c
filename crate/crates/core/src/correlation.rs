//! Periodic auto/cross-correlation: a brute-force kernel (with a bit-packed
//! popcount variant for larger periods) and the closed-form case tables for
//! the first-type sequence and the interleavings, cross-checked against each
//! other by the callers.
//!
//! Correlation of two {0,1} sequences is the signed agreement count
//! sum_i (-1)^(a_i + b_(i+tau)) over one period, reported for every shift
//! tau in [0, period).

use crate::error::{Error, Result};
use crate::field::FieldContext;
use crate::sequence::{gen_t1, BinarySequence};

/// Stable branch-label strings; these are part of the report schema so
/// coverage can be asserted, not just values.
pub mod labels {
    pub const T1_PEAK: &str = "t1:N";
    pub const T1_HALF: &str = "t1:N1";
    pub const T1_OFF: &str = "t1:N2";

    pub const AUTO_EVEN_PEAK: &str = "auto-even:2N";
    pub const AUTO_EVEN_HALF: &str = "auto-even:2N1";
    pub const AUTO_EVEN_OFF: &str = "auto-even:2N2";
    pub const AUTO_ODD_N_N2: &str = "auto-odd:-N-N2";
    pub const AUTO_ODD_N1_N2: &str = "auto-odd:-N1-N2";
    pub const AUTO_ODD_OFF: &str = "auto-odd:-2N2";
    pub const AUTO_ODD_SPECIAL_N_N1: &str = "auto-odd-special:-N-N1";
    pub const AUTO_ODD_SPECIAL_OFF: &str = "auto-odd-special:-2N2";

    pub const CROSS_EVEN_N_N2: &str = "cross-even:N+N2";
    pub const CROSS_EVEN_N1_N2: &str = "cross-even:N1+N2";
    pub const CROSS_EVEN_OFF: &str = "cross-even:2N2";
    pub const CROSS_EVEN_HALF_N_N1: &str = "cross-even-halfshift:N+N1";
    pub const CROSS_EVEN_HALF_OFF: &str = "cross-even-halfshift:2N2";
    pub const CROSS_ODD_N_N2: &str = "cross-odd:-N-N2";
    pub const CROSS_ODD_N1_N2: &str = "cross-odd:-N1-N2";
    pub const CROSS_ODD_OFF: &str = "cross-odd:-2N2";
    pub const CROSS_ODD_SUM1_2N: &str = "cross-odd-sum1:-2N";
    pub const CROSS_ODD_SUM1_2N1: &str = "cross-odd-sum1:-2N1";
    pub const CROSS_ODD_SUM1_OFF: &str = "cross-odd-sum1:-2N2";
    pub const CROSS_ODD_SUM1H_N_N1: &str = "cross-odd-sum1h:-N-N1";
    pub const CROSS_ODD_SUM1H_OFF: &str = "cross-odd-sum1h:-2N2";

    /// Every label the first-type autocorrelation table can emit.
    pub const T1_SET: [&str; 3] = [T1_PEAK, T1_HALF, T1_OFF];

    /// Every label the interleaved autocorrelation prediction can emit.
    pub const AUTO_SET: [&str; 8] = [
        AUTO_EVEN_PEAK,
        AUTO_EVEN_HALF,
        AUTO_EVEN_OFF,
        AUTO_ODD_N_N2,
        AUTO_ODD_N1_N2,
        AUTO_ODD_OFF,
        AUTO_ODD_SPECIAL_N_N1,
        AUTO_ODD_SPECIAL_OFF,
    ];

    /// Every label the cross-correlation prediction can emit.
    pub const CROSS_SET: [&str; 13] = [
        CROSS_EVEN_N_N2,
        CROSS_EVEN_N1_N2,
        CROSS_EVEN_OFF,
        CROSS_EVEN_HALF_N_N1,
        CROSS_EVEN_HALF_OFF,
        CROSS_ODD_N_N2,
        CROSS_ODD_N1_N2,
        CROSS_ODD_OFF,
        CROSS_ODD_SUM1_2N,
        CROSS_ODD_SUM1_2N1,
        CROSS_ODD_SUM1_OFF,
        CROSS_ODD_SUM1H_N_N1,
        CROSS_ODD_SUM1H_OFF,
    ];
}

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum CorrelationKind {
    Auto,
    Cross,
}

/// Brute-force correlation profile over all shifts of one period.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct CorrelationProfile {
    pub kind: CorrelationKind,
    pub lhs_id: String,
    pub rhs_id: String,
    pub values: Vec<i64>,
}

impl CorrelationProfile {
    pub fn with_ids(mut self, lhs: impl Into<String>, rhs: impl Into<String>) -> Self {
        self.lhs_id = lhs.into();
        self.rhs_id = rhs.into();
        self
    }
}

pub(crate) fn correlate_values(a: &[u8], b: &[u8]) -> Vec<i64> {
    debug_assert_eq!(a.len(), b.len());
    let period = a.len();
    (0..period)
        .map(|tau| {
            let mut sum = 0i64;
            for (i, &ai) in a.iter().enumerate() {
                let mut j = i + tau;
                if j >= period {
                    j -= period;
                }
                sum += if ai ^ b[j] == 0 { 1 } else { -1 };
            }
            sum
        })
        .collect()
}

fn pack_bits(bits: &[u8]) -> Vec<u64> {
    let mut words = vec![0u64; bits.len().div_ceil(64)];
    for (i, &b) in bits.iter().enumerate() {
        if b == 1 {
            words[i / 64] |= 1 << (i % 64);
        }
    }
    words
}

/// Word-packed kernel: correlation at shift tau is period - 2 * popcount of
/// the XOR against the rotated partner. Same results as the naive sum, about
/// 64x less work per shift.
pub(crate) fn correlate_values_packed(a: &[u8], b: &[u8]) -> Vec<i64> {
    debug_assert_eq!(a.len(), b.len());
    let period = a.len();
    let words = period.div_ceil(64);
    let packed_a = pack_bits(a);
    let mut doubled = Vec::with_capacity(2 * period);
    doubled.extend_from_slice(b);
    doubled.extend_from_slice(b);
    let packed_b = pack_bits(&doubled);
    let tail_bits = period % 64;
    let tail_mask = if tail_bits == 0 { u64::MAX } else { (1u64 << tail_bits) - 1 };
    (0..period)
        .map(|tau| {
            let word_off = tau / 64;
            let shift = tau % 64;
            let mut mismatches = 0u64;
            for i in 0..words {
                let lo = packed_b[word_off + i] >> shift;
                let hi = if shift == 0 {
                    0
                } else {
                    packed_b.get(word_off + i + 1).copied().unwrap_or(0) << (64 - shift)
                };
                let mut w = lo | hi;
                if i == words - 1 {
                    w &= tail_mask;
                }
                mismatches += u64::from((w ^ packed_a[i]).count_ones());
            }
            period as i64 - 2 * mismatches as i64
        })
        .collect()
}

fn profile_from(a: &BinarySequence, b: &BinarySequence, values: Vec<i64>) -> CorrelationProfile {
    CorrelationProfile {
        kind: if a == b { CorrelationKind::Auto } else { CorrelationKind::Cross },
        lhs_id: "a".to_string(),
        rhs_id: "b".to_string(),
        values,
    }
}

/// Brute-force O(P^2) correlation over all shifts.
pub fn correlate(a: &BinarySequence, b: &BinarySequence) -> Result<CorrelationProfile> {
    if a.period() != b.period() {
        return Err(Error::PeriodMismatch { lhs: a.period(), rhs: b.period() });
    }
    Ok(profile_from(a, b, correlate_values(a.bits(), b.bits())))
}

/// Bit-packed variant of [`correlate`] for stress runs at larger periods.
pub fn correlate_packed(a: &BinarySequence, b: &BinarySequence) -> Result<CorrelationProfile> {
    if a.period() != b.period() {
        return Err(Error::PeriodMismatch { lhs: a.period(), rhs: b.period() });
    }
    Ok(profile_from(a, b, correlate_values_packed(a.bits(), b.bits())))
}

/// The three constants of the first-type autocorrelation table: the peak N,
/// the half-period trough N1 = -2p^(m-1) + 2(p^(m-1)-1)/(p-1), and the
/// off-peak level N2 = 2(p^(m-2)-1)/(p-1). All divisions are exact.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct AutocorrConstants {
    pub n: i64,
    pub n1: i64,
    pub n2: i64,
}

pub fn autocorr_constants(ctx: &FieldContext) -> AutocorrConstants {
    let p = ctx.p();
    let m = ctx.m();
    let p_m1 = p.pow(m - 1);
    let p_m2 = p.pow(m - 2);
    AutocorrConstants {
        n: ctx.n() as i64,
        n1: -2 * p_m1 as i64 + (2 * ((p_m1 - 1) / (p - 1))) as i64,
        n2: (2 * ((p_m2 - 1) / (p - 1))) as i64,
    }
}

/// Closed-form prediction with the branch label that produced each value.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct CorrelationPrediction {
    pub values: Vec<i64>,
    pub case_labels: Vec<&'static str>,
}

/// First-type autocorrelation table: N at shift 0, N1 at the half period,
/// N2 everywhere else.
pub fn predict_t1_autocorrelation(ctx: &FieldContext) -> CorrelationPrediction {
    let c = autocorr_constants(ctx);
    let n = ctx.n() as usize;
    let mut values = Vec::with_capacity(n);
    let mut case_labels = Vec::with_capacity(n);
    for tau in 0..n {
        let (v, l) = if tau == 0 {
            (c.n, labels::T1_PEAK)
        } else if tau == n / 2 {
            (c.n1, labels::T1_HALF)
        } else {
            (c.n2, labels::T1_OFF)
        };
        values.push(v);
        case_labels.push(l);
    }
    CorrelationPrediction { values, case_labels }
}

/// Autocorrelation of the interleaving with shift e, over all 2N shifts.
///
/// Even shifts 2*tau0 see twice the first-type table. Odd shifts split on
/// whether 2e = 1 - N/2 (mod N); in the generic case four residues of tau0
/// are distinguished, in the special case they collapse pairwise.
pub fn predict_se_autocorrelation(ctx: &FieldContext, e: u64) -> Result<CorrelationPrediction> {
    let n_u = ctx.n();
    if e >= n_u {
        return Err(Error::ShiftOutOfRange { e, period: n_u });
    }
    let c = autocorr_constants(ctx);
    let n = n_u as i64;
    let half = n / 2;
    let e = e as i64;
    let reduce = |x: i64| x.rem_euclid(n);
    let special = reduce(2 * e) == reduce(1 - half);
    let mut values = Vec::with_capacity(2 * n as usize);
    let mut case_labels = Vec::with_capacity(2 * n as usize);
    for tau in 0..2 * n {
        let tau0 = tau / 2;
        let (v, l) = if tau % 2 == 0 {
            if tau0 == 0 {
                (2 * c.n, labels::AUTO_EVEN_PEAK)
            } else if tau0 == half {
                (2 * c.n1, labels::AUTO_EVEN_HALF)
            } else {
                (2 * c.n2, labels::AUTO_EVEN_OFF)
            }
        } else if special {
            if tau0 == reduce(-e) || tau0 == reduce(e - 1) {
                (-c.n - c.n1, labels::AUTO_ODD_SPECIAL_N_N1)
            } else {
                (-2 * c.n2, labels::AUTO_ODD_SPECIAL_OFF)
            }
        } else if tau0 == reduce(-e - half) || tau0 == reduce(e - 1 + half) {
            (-c.n - c.n2, labels::AUTO_ODD_N_N2)
        } else if tau0 == reduce(-e) || tau0 == reduce(e - 1) {
            (-c.n1 - c.n2, labels::AUTO_ODD_N1_N2)
        } else {
            (-2 * c.n2, labels::AUTO_ODD_OFF)
        };
        values.push(v);
        case_labels.push(l);
    }
    Ok(CorrelationPrediction { values, case_labels })
}

/// Cross-correlation of the interleavings with shifts e1 < e2, over all 2N
/// shifts. Even shifts split on e2 - e1 = N/2 (mod N); odd shifts split on
/// e1 + e2 = 1 and e1 + e2 = 1 - N/2 (mod N).
pub fn predict_cross_correlation(
    ctx: &FieldContext,
    e1: u64,
    e2: u64,
) -> Result<CorrelationPrediction> {
    let n_u = ctx.n();
    if e1 >= n_u {
        return Err(Error::ShiftOutOfRange { e: e1, period: n_u });
    }
    if e2 >= n_u {
        return Err(Error::ShiftOutOfRange { e: e2, period: n_u });
    }
    if e1 >= e2 {
        return Err(Error::ShiftOrder { e1, e2 });
    }
    let c = autocorr_constants(ctx);
    let n = n_u as i64;
    let half = n / 2;
    let (e1, e2) = (e1 as i64, e2 as i64);
    let reduce = |x: i64| x.rem_euclid(n);
    let diff_half = e2 - e1 == half;
    let sum1 = reduce(e1 + e2) == 1;
    let sum1h = reduce(e1 + e2) == reduce(1 - half);
    let mut values = Vec::with_capacity(2 * n as usize);
    let mut case_labels = Vec::with_capacity(2 * n as usize);
    for tau in 0..2 * n {
        let tau0 = tau / 2;
        let (v, l) = if tau % 2 == 0 {
            if diff_half {
                if tau0 == 0 || tau0 == half {
                    (c.n + c.n1, labels::CROSS_EVEN_HALF_N_N1)
                } else {
                    (2 * c.n2, labels::CROSS_EVEN_HALF_OFF)
                }
            } else if tau0 == 0 || tau0 == reduce(e1 - e2) {
                (c.n + c.n2, labels::CROSS_EVEN_N_N2)
            } else if tau0 == half || tau0 == reduce(e1 - e2 + half) {
                (c.n1 + c.n2, labels::CROSS_EVEN_N1_N2)
            } else {
                (2 * c.n2, labels::CROSS_EVEN_OFF)
            }
        } else if sum1 {
            if tau0 == reduce(-e2 - half) {
                (-2 * c.n, labels::CROSS_ODD_SUM1_2N)
            } else if tau0 == reduce(-e2) {
                (-2 * c.n1, labels::CROSS_ODD_SUM1_2N1)
            } else {
                (-2 * c.n2, labels::CROSS_ODD_SUM1_OFF)
            }
        } else if sum1h {
            if tau0 == reduce(-e2 - half) || tau0 == reduce(-e2) {
                (-c.n - c.n1, labels::CROSS_ODD_SUM1H_N_N1)
            } else {
                (-2 * c.n2, labels::CROSS_ODD_SUM1H_OFF)
            }
        } else if tau0 == reduce(-e2 - half) || tau0 == reduce(e1 - 1 + half) {
            (-c.n - c.n2, labels::CROSS_ODD_N_N2)
        } else if tau0 == reduce(-e2) || tau0 == reduce(e1 - 1) {
            (-c.n1 - c.n2, labels::CROSS_ODD_N1_N2)
        } else {
            (-2 * c.n2, labels::CROSS_ODD_OFF)
        };
        values.push(v);
        case_labels.push(l);
    }
    Ok(CorrelationPrediction { values, case_labels })
}

/// The lookup form shared by [`decompose_correlation_all`] and the verify
/// harness: evaluate the 2N-shift profile from a precomputed first-type
/// autocorrelation profile `r`.
pub(crate) fn decompose_from_profile(r: &[i64], e1: u64, e2: u64) -> Vec<i64> {
    let n = r.len() as i64;
    let half = n / 2;
    let (e1, e2) = (e1 as i64, e2 as i64);
    let idx = |x: i64| x.rem_euclid(n) as usize;
    (0..2 * n)
        .map(|tau| {
            let tau0 = tau / 2;
            if tau % 2 == 0 {
                r[idx(tau0)] + r[idx(e2 - e1 + tau0)]
            } else {
                -r[idx(e2 + tau0 + half)] - r[idx(e1 - tau0 - 1 + half)]
            }
        })
        .collect()
}

/// Rewrite the correlation of two interleavings entirely in terms of the
/// brute-force first-type autocorrelation profile: even shifts are a sum of
/// two table lookups, odd shifts a negated sum. A third route between the
/// brute-force kernel and the closed-form tables.
pub fn decompose_correlation_all(ctx: &FieldContext, e1: u64, e2: u64) -> Result<Vec<i64>> {
    let n_u = ctx.n();
    for e in [e1, e2] {
        if e >= n_u {
            return Err(Error::ShiftOutOfRange { e, period: n_u });
        }
    }
    let t1 = gen_t1(ctx)?;
    let r = correlate_values(t1.bits(), t1.bits());
    Ok(decompose_from_profile(&r, e1, e2))
}

/// Single-shift variant of [`decompose_correlation_all`].
pub fn decompose_correlation(ctx: &FieldContext, e1: u64, e2: u64, tau: u64) -> Result<i64> {
    if tau >= 2 * ctx.n() {
        return Err(Error::TauOutOfRange { tau, limit: 2 * ctx.n() });
    }
    Ok(decompose_correlation_all(ctx, e1, e2)?[tau as usize])
}
