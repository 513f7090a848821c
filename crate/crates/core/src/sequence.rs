//! The two Legendre-binarized sequence types, cyclic shifts, and their
//! interleavings.
//!
//! A sequence is stored as exactly one least period; indexing wraps. The
//! least-period check runs at construction time and failure is a hard error,
//! which surfaces a wrong (modulus, generator) choice immediately instead of
//! corrupting every downstream statistic.

use crate::error::{Error, Result};
use crate::field::{legendre, FieldContext};
use std::fmt;

/// Descriptor naming which construction a sequence came from.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum SequenceKind {
    Type1,
    Type2,
    Interleaved { e: u64 },
}

impl fmt::Display for SequenceKind {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            SequenceKind::Type1 => f.write_str("T1"),
            SequenceKind::Type2 => f.write_str("T2"),
            SequenceKind::Interleaved { e } => write!(f, "S^{e}"),
        }
    }
}

/// Smallest d dividing `bits.len()` such that the bits repeat with period d.
pub fn least_period(bits: &[u8]) -> usize {
    let n = bits.len();
    for d in 1..n {
        if n % d == 0 && bits.iter().enumerate().all(|(i, &b)| b == bits[i % d]) {
            return d;
        }
    }
    n
}

/// One exact least period of a binary sequence.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct BinarySequence {
    bits: Vec<u8>,
}

impl BinarySequence {
    /// Validates that every symbol is 0/1 and that the declared length is the
    /// least period.
    pub fn from_bits(bits: Vec<u8>) -> Result<Self> {
        if bits.is_empty() {
            return Err(Error::EmptySequence);
        }
        if let Some((index, &value)) = bits.iter().enumerate().find(|(_, &v)| v > 1) {
            return Err(Error::NonBinarySymbol { index, value });
        }
        let least = least_period(&bits);
        if least != bits.len() {
            return Err(Error::LeastPeriodViolation { declared: bits.len(), least });
        }
        Ok(Self { bits })
    }

    pub fn period(&self) -> usize {
        self.bits.len()
    }

    pub fn bits(&self) -> &[u8] {
        &self.bits
    }

    /// Cyclic access: the sequence is periodic, so any index is valid.
    pub fn bit(&self, n: usize) -> u8 {
        self.bits[n % self.bits.len()]
    }

    pub fn count_ones(&self) -> usize {
        self.bits.iter().filter(|&&b| b == 1).count()
    }

    pub fn count_zeros(&self) -> usize {
        self.bits.len() - self.count_ones()
    }

    /// ASCII '0'/'1' rendering of one period.
    pub fn to_bit_string(&self) -> String {
        self.bits.iter().map(|&b| if b == 1 { '1' } else { '0' }).collect()
    }

    /// Packed hex: 8 bits per byte, little-endian within each byte, trailing
    /// partial byte zero-padded high.
    pub fn to_packed_hex(&self) -> String {
        self.bits
            .chunks(8)
            .map(|chunk| {
                let byte = chunk
                    .iter()
                    .enumerate()
                    .fold(0u8, |acc, (i, &b)| acc | b << i);
                format!("{byte:02x}")
            })
            .collect()
    }
}

fn legendre_symbols(ctx: &FieldContext) -> Result<Vec<i8>> {
    let n = ctx.n() as usize;
    let m = ctx.m() as usize;
    let p = ctx.p();
    // The trace is GF(p)-linear, so evaluating it on the power basis once
    // turns the per-element trace into a dot product.
    let basis_traces: Vec<u64> = (0..m)
        .map(|j| {
            let mut coeffs = vec![0u64; m];
            coeffs[j] = 1;
            ctx.trace(&ctx.element(&coeffs).expect("basis vector is reduced"))
        })
        .collect();
    let mut symbols = Vec::with_capacity(n);
    let mut power = ctx.one();
    for _ in 0..n {
        let tr = power
            .coeffs()
            .iter()
            .zip(&basis_traces)
            .fold(0u64, |acc, (&c, &t)| (acc + c * t % p) % p);
        symbols.push(legendre(p, tr as i64)?);
        power = ctx.ext_mul(&power, ctx.omega());
    }
    Ok(symbols)
}

/// First-type sequence: positions where the Legendre symbol of the trace is
/// -1 become 1; both the +1 and the 0 case map to 0.
pub fn gen_t1(ctx: &FieldContext) -> Result<BinarySequence> {
    let bits = legendre_symbols(ctx)?
        .into_iter()
        .map(|sym| match sym {
            1 => 0,
            -1 => 1,
            _ => 0,
        })
        .collect();
    BinarySequence::from_bits(bits)
}

/// Second-type sequence: identical to the first type except that the
/// trace-zero positions map to 1 instead of 0. Kept as its own case table so
/// the complement relation between the types stays a checkable fact.
pub fn gen_t2(ctx: &FieldContext) -> Result<BinarySequence> {
    let bits = legendre_symbols(ctx)?
        .into_iter()
        .map(|sym| match sym {
            1 => 0,
            -1 => 1,
            _ => 1,
        })
        .collect();
    BinarySequence::from_bits(bits)
}

/// Left cyclic shift: output\[n\] = input\[n + e\].
pub fn left_shift(s: &BinarySequence, e: u64) -> Result<BinarySequence> {
    let period = s.period() as u64;
    if e >= period {
        return Err(Error::ShiftOutOfRange { e, period });
    }
    let split = e as usize;
    let mut bits = s.bits()[split..].to_vec();
    bits.extend_from_slice(&s.bits()[..split]);
    BinarySequence::from_bits(bits)
}

/// Merge equal-period sequences symbol by symbol: output[j*T + i] is symbol j
/// of family member i.
pub fn interleave(family: &[&BinarySequence]) -> Result<BinarySequence> {
    let first = family.first().ok_or(Error::EmptyFamily)?;
    let n = first.period();
    for s in family {
        if s.period() != n {
            return Err(Error::PeriodMismatch { lhs: n, rhs: s.period() });
        }
    }
    let t = family.len();
    let mut bits = vec![0u8; t * n];
    for j in 0..n {
        for (i, s) in family.iter().enumerate() {
            bits[j * t + i] = s.bits()[j];
        }
    }
    BinarySequence::from_bits(bits)
}

/// Split an interleaved sequence back into its `count` component sequences.
pub fn deinterleave(u: &BinarySequence, count: usize) -> Result<Vec<BinarySequence>> {
    if count == 0 {
        return Err(Error::EmptyFamily);
    }
    let period = u.period();
    if period % count != 0 {
        return Err(Error::IndivisiblePeriod { period, count });
    }
    (0..count)
        .map(|i| {
            BinarySequence::from_bits(u.bits().iter().skip(i).step_by(count).copied().collect())
        })
        .collect()
}

/// Closed-form count of zeros in one period of the first type:
/// p^(m-1) + 2(p^(m-1) - 1)/(p - 1). The division is exact.
pub fn t1_zero_count(ctx: &FieldContext) -> u64 {
    let p_m1 = ctx.p().pow(ctx.m() - 1);
    p_m1 + 2 * ((p_m1 - 1) / (ctx.p() - 1))
}

/// Closed-form count of ones in one period of the first type: p^(m-1).
pub fn t1_one_count(ctx: &FieldContext) -> u64 {
    ctx.p().pow(ctx.m() - 1)
}

/// The interleaving of the first type with the e-shifted second type; period
/// exactly 2N, perfectly balanced.
pub fn gen_se(ctx: &FieldContext, e: u64) -> Result<BinarySequence> {
    let n = ctx.n();
    if e >= n {
        return Err(Error::ShiftOutOfRange { e, period: n });
    }
    let t1 = gen_t1(ctx)?;
    let t2_shifted = left_shift(&gen_t2(ctx)?, e)?;
    interleave(&[&t1, &t2_shifted])
}
