//! Balanced interleaved binary sequences over GF(p^m), with exact analysis.
//!
//! For an odd prime p and extension degree m > 1, fix an irreducible modulus
//! and a primitive element omega, and binarize the trace of successive powers
//! of omega through the Legendre symbol. Two case tables for the trace-zero
//! positions give two sequence types of common period N = 2(p^m - 1)/(p - 1);
//! interleaving the first type with a cyclic shift of the second doubles the
//! period and makes the result perfectly balanced.
//!
//! The interesting part is that the autocorrelation, the cross-correlation
//! between different shifts, and the linear complexity of these interleavings
//! all have closed forms. This crate computes each quantity both ways — by
//! brute force and from the closed-form case tables — and treats any mismatch
//! as an error, so the library doubles as a verification harness for the
//! formulas themselves.
//!
//! Module map:
//! - [`field`]: GF(p) / GF(p^m) arithmetic, Legendre symbol, trace,
//!   deterministic modulus and generator searches.
//! - [`gf2poly`]: dense polynomials over F2 (division, gcd) for the
//!   minimal-polynomial method.
//! - [`sequence`]: the two sequence types, shifts, interleavings.
//! - [`correlation`]: brute-force kernels and the closed-form predictors with
//!   stable branch labels.
//! - [`complexity`]: linear complexity by closed form, gcd method and
//!   Berlekamp-Massey, cross-validated.
//! - [`verify`]: the one-shot per-instance check suite.
//! - [`report`]: frozen JSON/CSV report schemas.
//!
//! ```
//! use geoseq::{FieldContext, FieldParams, gen_se, correlate, predict_se_autocorrelation, lc_report};
//!
//! // GF(25) from x^2 + 2x + 3 with generator 4a, a worked instance
//! let ctx = FieldContext::new(FieldParams {
//!     irreducible: Some(vec![3, 2, 1]),
//!     omega: Some(vec![0, 4]),
//!     ..FieldParams::new(5, 2)
//! })?;
//! assert_eq!(ctx.n(), 12);
//!
//! let s4 = gen_se(&ctx, 4)?;
//! assert_eq!(s4.to_bit_string(), "101110000011010001011101");
//! assert_eq!(s4.count_ones(), 12);
//!
//! // brute force equals the closed-form prediction at every shift
//! let observed = correlate(&s4, &s4)?.values;
//! assert_eq!(observed, predict_se_autocorrelation(&ctx, 4)?.values);
//!
//! // and all three linear-complexity methods agree
//! assert_eq!(lc_report(&ctx, 4)?.l_closed_form, 23);
//! # Ok::<(), geoseq::Error>(())
//! ```

pub mod complexity;
pub mod correlation;
pub mod error;
pub mod field;
pub mod gf2poly;
pub mod report;
pub mod sequence;
pub mod verify;

mod arith;

pub use complexity::{
    berlekamp_massey, bm_linear_complexity, g_of, lc_report, minimal_poly,
    minimal_poly_from_period, nu2, LinearComplexityReport,
};
pub use correlation::{
    autocorr_constants, correlate, correlate_packed, decompose_correlation,
    decompose_correlation_all, predict_cross_correlation, predict_se_autocorrelation,
    predict_t1_autocorrelation, AutocorrConstants, CorrelationKind, CorrelationPrediction,
    CorrelationProfile,
};
pub use error::{Error, Result};
pub use field::{
    find_irreducible, find_primitive, format_coeffs, legendre, parse_coeffs, underline_mod,
    ExtFieldElement, FieldContext, FieldParams, DEFAULT_MAX_ORDER,
};
pub use gf2poly::Gf2Poly;
pub use sequence::{
    deinterleave, gen_se, gen_t1, gen_t2, interleave, least_period, left_shift, t1_one_count,
    t1_zero_count, BinarySequence, SequenceKind,
};
pub use verify::{verify_instance, VerifyOptions, VerifyReport};
