//! Dense polynomials over F2 backed by u64 limb vectors: bit i of the vector
//! is the coefficient of x^i. Everything stays canonical (no trailing zero
//! limbs), and the zero polynomial reports its degree as `None` rather than
//! any integer sentinel.
//!
//! Note that x^n - 1 and x^n + 1 coincide over F2; this crate writes the `+`
//! form throughout.

use crate::error::{Error, Result};
use std::fmt;
use std::ops::{Add, Mul};

#[derive(Debug, Clone, PartialEq, Eq, Hash, Default)]
pub struct Gf2Poly {
    limbs: Vec<u64>,
}

impl Gf2Poly {
    pub fn zero() -> Self {
        Self { limbs: Vec::new() }
    }

    pub fn one() -> Self {
        Self { limbs: vec![1] }
    }

    /// Build from a 0/1 coefficient slice, constant term first.
    pub fn from_coefficient_bits(bits: &[u8]) -> Self {
        let mut out = Self::zero();
        for (i, &b) in bits.iter().enumerate() {
            debug_assert!(b <= 1);
            if b == 1 {
                out.set_coeff(i);
            }
        }
        out
    }

    /// x^n + 1 (equal to x^n - 1 over F2).
    pub fn xn_plus_one(n: u64) -> Result<Self> {
        if n < 1 {
            return Err(Error::NotPositive { what: "exponent n" });
        }
        let mut out = Self::zero();
        out.set_coeff(n as usize);
        out.limbs[0] |= 1;
        Ok(out)
    }

    pub fn is_zero(&self) -> bool {
        self.limbs.is_empty()
    }

    /// Degree, or `None` for the zero polynomial.
    pub fn degree(&self) -> Option<usize> {
        let top = *self.limbs.last()?;
        Some(64 * (self.limbs.len() - 1) + (63 - top.leading_zeros() as usize))
    }

    pub fn coeff(&self, i: usize) -> bool {
        self.limbs
            .get(i / 64)
            .map_or(false, |w| w >> (i % 64) & 1 == 1)
    }

    fn set_coeff(&mut self, i: usize) {
        let word = i / 64;
        if self.limbs.len() <= word {
            self.limbs.resize(word + 1, 0);
        }
        self.limbs[word] |= 1 << (i % 64);
    }

    fn trim(&mut self) {
        while self.limbs.last() == Some(&0) {
            self.limbs.pop();
        }
    }

    /// self ^= src << shift (in bit positions).
    fn xor_shifted(&mut self, src: &Gf2Poly, shift: usize) {
        if src.is_zero() {
            return;
        }
        let word_off = shift / 64;
        let bit_off = shift % 64;
        let needed = word_off + src.limbs.len() + usize::from(bit_off != 0);
        if self.limbs.len() < needed {
            self.limbs.resize(needed, 0);
        }
        for (i, &w) in src.limbs.iter().enumerate() {
            self.limbs[word_off + i] ^= w << bit_off;
            if bit_off != 0 {
                self.limbs[word_off + i + 1] ^= w >> (64 - bit_off);
            }
        }
        self.trim();
    }

    /// Quotient and remainder with deg r < deg divisor; exact over F2.
    pub fn divmod(&self, divisor: &Gf2Poly) -> Result<(Gf2Poly, Gf2Poly)> {
        let db = divisor.degree().ok_or(Error::DivisionByZeroPoly)?;
        let mut r = self.clone();
        let mut q = Gf2Poly::zero();
        while let Some(dr) = r.degree() {
            if dr < db {
                break;
            }
            let k = dr - db;
            q.set_coeff(k);
            r.xor_shifted(divisor, k);
        }
        Ok((q, r))
    }

    /// Euclidean gcd; monic for free over F2. Errors only when both inputs
    /// are zero.
    pub fn gcd(&self, other: &Gf2Poly) -> Result<Gf2Poly> {
        if self.is_zero() && other.is_zero() {
            return Err(Error::GcdOfZeroPolys);
        }
        let mut a = self.clone();
        let mut b = other.clone();
        while !b.is_zero() {
            let (_, r) = a.divmod(&b)?;
            a = b;
            b = r;
        }
        Ok(a)
    }

    /// Hex rendering of the coefficient bit vector; the constant term is the
    /// least significant bit.
    pub fn to_hex(&self) -> String {
        match self.limbs.split_last() {
            None => "0".to_string(),
            Some((top, rest)) => {
                let mut s = format!("{top:x}");
                for w in rest.iter().rev() {
                    s.push_str(&format!("{w:016x}"));
                }
                s
            }
        }
    }

    pub fn from_hex(s: &str) -> Result<Gf2Poly> {
        if s.is_empty() {
            return Err(Error::BadHex { reason: "empty string" });
        }
        let mut out = Gf2Poly::zero();
        for (idx, ch) in s.chars().rev().enumerate() {
            let v = ch
                .to_digit(16)
                .ok_or(Error::BadHex { reason: "expected hex digits" })?
                as u64;
            let word = idx / 16;
            if out.limbs.len() <= word {
                out.limbs.resize(word + 1, 0);
            }
            out.limbs[word] |= v << (idx % 16 * 4);
        }
        out.trim();
        Ok(out)
    }
}

impl Add<&Gf2Poly> for &Gf2Poly {
    type Output = Gf2Poly;

    fn add(self, rhs: &Gf2Poly) -> Gf2Poly {
        let mut out = self.clone();
        out.xor_shifted(rhs, 0);
        out
    }
}

impl Mul<&Gf2Poly> for &Gf2Poly {
    type Output = Gf2Poly;

    fn mul(self, rhs: &Gf2Poly) -> Gf2Poly {
        let mut out = Gf2Poly::zero();
        for (word, &w) in self.limbs.iter().enumerate() {
            let mut bits = w;
            while bits != 0 {
                let b = bits.trailing_zeros() as usize;
                out.xor_shifted(rhs, 64 * word + b);
                bits &= bits - 1;
            }
        }
        out
    }
}

impl fmt::Display for Gf2Poly {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let Some(deg) = self.degree() else {
            return f.write_str("0");
        };
        let mut first = true;
        for i in (0..=deg).rev() {
            if !self.coeff(i) {
                continue;
            }
            if !first {
                f.write_str(" + ")?;
            }
            first = false;
            match i {
                0 => f.write_str("1")?,
                1 => f.write_str("x")?,
                _ => write!(f, "x^{i}")?,
            }
        }
        Ok(())
    }
}
