//! One-shot verification harness for a single field instance: regenerates
//! every sequence and checks each identity the closed forms assert, counting
//! which prediction branches fired along the way.
//!
//! The brute-force side of every comparison here uses the bit-packed kernel,
//! which keeps full default sweeps usable at periods in the thousands; the
//! packed and naive kernels are checked against each other elsewhere.

use crate::complexity::{bm_linear_complexity, lc_report, nu2};
use crate::correlation::{
    correlate_values, correlate_values_packed, decompose_from_profile,
    predict_cross_correlation, predict_se_autocorrelation, predict_t1_autocorrelation,
};
use crate::error::{Error, Result};
use crate::field::{format_coeffs, half_period_power_is_prime_primitive, FieldContext};
use crate::sequence::{gen_se, gen_t1, gen_t2, t1_one_count, t1_zero_count, BinarySequence};
use serde::Serialize;
use std::collections::BTreeMap;

/// Largest N for which a full default e-sweep is attempted.
pub const DEFAULT_SWEEP_LIMIT: u64 = 4096;

/// Default cap on the number of (e1, e2) pairs in the cross-correlation checks.
pub const DEFAULT_MAX_PAIRS: usize = 2000;

#[derive(Debug, Clone, Default)]
pub struct VerifyOptions {
    /// Shifts to check; defaults to every e in [0, N).
    pub e_list: Option<Vec<u64>>,
    /// Overrides [`DEFAULT_MAX_PAIRS`].
    pub max_pairs: Option<usize>,
    /// Test hook: flip this bit (mod 2N) of each interleaved sequence inside
    /// the autocorrelation check, forcing a visible mismatch.
    pub corrupt_bit: Option<usize>,
}

#[derive(Debug, Clone, Serialize)]
pub struct CheckOutcome {
    pub name: &'static str,
    pub pass: bool,
    pub checked: u64,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub first_failure: Option<String>,
}

struct Check {
    name: &'static str,
    pass: bool,
    checked: u64,
    first_failure: Option<String>,
}

impl Check {
    fn new(name: &'static str) -> Self {
        Self { name, pass: true, checked: 0, first_failure: None }
    }

    fn record(&mut self, ok: bool, failure: impl FnOnce() -> String) {
        self.checked += 1;
        if !ok && self.pass {
            self.pass = false;
            self.first_failure = Some(failure());
        }
    }

    fn finish(self) -> CheckOutcome {
        CheckOutcome {
            name: self.name,
            pass: self.pass,
            checked: self.checked,
            first_failure: self.first_failure,
        }
    }
}

#[derive(Debug, Clone, Serialize)]
pub struct VerifyReport {
    pub p: u64,
    pub m: u32,
    pub irreducible: String,
    pub omega: String,
    #[serde(rename = "N")]
    pub n: u64,
    pub e_count: usize,
    pub pair_count: usize,
    pub checks: Vec<CheckOutcome>,
    pub branch_coverage: BTreeMap<String, u64>,
    pub all_pass: bool,
}

impl VerifyReport {
    pub fn to_json(&self) -> String {
        let mut s = serde_json::to_string_pretty(self).expect("report serialization");
        s.push('\n');
        s
    }

    /// First failing (check, detail), if any.
    pub fn first_failure(&self) -> Option<(&'static str, &str)> {
        self.checks
            .iter()
            .find(|c| !c.pass)
            .map(|c| (c.name, c.first_failure.as_deref().unwrap_or("unspecified")))
    }
}

fn add_coverage(coverage: &mut BTreeMap<String, u64>, case_labels: &[&'static str]) {
    for label in case_labels {
        *coverage.entry((*label).to_string()).or_insert(0) += 1;
    }
}

/// Deterministic pair selection: everything when it fits the budget,
/// otherwise the three forced special-congruence pairs plus a lexicographic
/// prefix.
fn select_pairs(e_list: &[u64], n: u64, max_pairs: usize) -> Vec<(u64, u64)> {
    let k = e_list.len();
    let total = k.saturating_mul(k.saturating_sub(1)) / 2;
    let mut pairs = Vec::new();
    if total <= max_pairs {
        for i in 0..k {
            for j in (i + 1)..k {
                pairs.push((e_list[i], e_list[j]));
            }
        }
        return pairs;
    }
    let half = n / 2;
    for (a, b) in [(0, 1), (0, half), (0, half + 1)] {
        if a < b && b < n {
            pairs.push((a, b));
        }
    }
    'outer: for i in 0..k {
        for j in (i + 1)..k {
            if pairs.len() >= max_pairs {
                break 'outer;
            }
            let pair = (e_list[i], e_list[j]);
            if !pairs.contains(&pair) {
                pairs.push(pair);
            }
        }
    }
    pairs
}

pub fn verify_instance(ctx: &FieldContext, opts: &VerifyOptions) -> Result<VerifyReport> {
    let n = ctx.n();
    let nn = n as usize;
    let half = nn / 2;

    let e_list: Vec<u64> = match &opts.e_list {
        Some(list) => {
            for &e in list {
                if e >= n {
                    return Err(Error::ShiftOutOfRange { e, period: n });
                }
            }
            let mut sorted = list.clone();
            sorted.sort_unstable();
            sorted.dedup();
            sorted
        }
        None => {
            if n > DEFAULT_SWEEP_LIMIT {
                return Err(Error::SweepTooLarge { n, limit: DEFAULT_SWEEP_LIMIT });
            }
            (0..n).collect()
        }
    };
    let max_pairs = opts.max_pairs.unwrap_or(DEFAULT_MAX_PAIRS);
    let pairs = select_pairs(&e_list, n, max_pairs);

    let t1 = gen_t1(ctx)?;
    let t2 = gen_t2(ctx)?;
    let mut cache: BTreeMap<u64, BinarySequence> = BTreeMap::new();
    for &e in &e_list {
        cache.insert(e, gen_se(ctx, e)?);
    }
    for &(e1, e2) in &pairs {
        for e in [e1, e2] {
            if !cache.contains_key(&e) {
                cache.insert(e, gen_se(ctx, e)?);
            }
        }
    }

    let mut coverage: BTreeMap<String, u64> = BTreeMap::new();
    let mut checks = Vec::new();

    // Periods: generation already hard-errors when a least period is wrong,
    // so this pins the periods to their predicted values N and 2N.
    let mut check = Check::new("least_period");
    check.record(t1.period() == nn, || {
        format!("T1 period {} expected {nn}", t1.period())
    });
    check.record(t2.period() == nn, || {
        format!("T2 period {} expected {nn}", t2.period())
    });
    for (&e, se) in &cache {
        check.record(se.period() == 2 * nn, || {
            format!("e={e} period {} expected {}", se.period(), 2 * nn)
        });
    }
    checks.push(check.finish());

    let mut check = Check::new("balance");
    check.record(t1.count_zeros() as u64 == t1_zero_count(ctx), || {
        format!("T1 zeros {} expected {}", t1.count_zeros(), t1_zero_count(ctx))
    });
    check.record(t1.count_ones() as u64 == t1_one_count(ctx), || {
        format!("T1 ones {} expected {}", t1.count_ones(), t1_one_count(ctx))
    });
    for (&e, se) in &cache {
        check.record(se.count_ones() as u64 == n && se.count_zeros() as u64 == n, || {
            format!("e={e} ones {} zeros {} expected {n} each", se.count_ones(), se.count_zeros())
        });
    }
    checks.push(check.finish());

    // The second type is the complement of the half-period shift of the first.
    let mut check = Check::new("type2_shift_complement");
    for i in 0..nn {
        let expected = t1.bit(i + half) ^ 1;
        check.record(t2.bits()[i] == expected, || {
            format!("n={i} expected={expected} observed={}", t2.bits()[i])
        });
    }
    checks.push(check.finish());

    let mut check = Check::new("half_period_power");
    check.record(half_period_power_is_prime_primitive(ctx), || {
        "omega^(N/2) is not a primitive element of GF(p)".to_string()
    });
    checks.push(check.finish());

    // First-type autocorrelation against its three-constant table.
    let auto_t1 = correlate_values_packed(t1.bits(), t1.bits());
    let t1_prediction = predict_t1_autocorrelation(ctx);
    add_coverage(&mut coverage, &t1_prediction.case_labels);
    let mut check = Check::new("t1_autocorrelation_table");
    for tau in 0..nn {
        let (expected, observed) = (t1_prediction.values[tau], auto_t1[tau]);
        check.record(observed == expected, || {
            format!("tau={tau} expected={expected} observed={observed}")
        });
    }
    checks.push(check.finish());

    // Cross-correlation of the two types is the negated half-shifted
    // autocorrelation of the first.
    let cross_t1_t2 = correlate_values_packed(t1.bits(), t2.bits());
    let mut check = Check::new("t1_t2_cross_identity");
    for tau in 0..nn {
        let expected = -auto_t1[(tau + half) % nn];
        let observed = cross_t1_t2[tau];
        check.record(observed == expected, || {
            format!("tau={tau} expected={expected} observed={observed}")
        });
    }
    checks.push(check.finish());

    let auto_t2 = correlate_values_packed(t2.bits(), t2.bits());
    let mut check = Check::new("t2_autocorrelation_matches_t1");
    for tau in 0..nn {
        check.record(auto_t2[tau] == auto_t1[tau], || {
            format!("tau={tau} expected={} observed={}", auto_t1[tau], auto_t2[tau])
        });
    }
    checks.push(check.finish());

    // Interleaved autocorrelation against the closed-form branch tables.
    let mut check = Check::new("se_autocorrelation_prediction");
    for &e in &e_list {
        let se = &cache[&e];
        let prediction = predict_se_autocorrelation(ctx, e)?;
        add_coverage(&mut coverage, &prediction.case_labels);
        let observed = match opts.corrupt_bit {
            Some(bit) => {
                let mut bits = se.bits().to_vec();
                let idx = bit % bits.len();
                bits[idx] ^= 1;
                correlate_values_packed(&bits, &bits)
            }
            None => correlate_values_packed(se.bits(), se.bits()),
        };
        for tau in 0..2 * nn {
            check.record(observed[tau] == prediction.values[tau], || {
                format!(
                    "e={e} tau={tau} expected={} observed={}",
                    prediction.values[tau], observed[tau]
                )
            });
        }
    }
    checks.push(check.finish());

    // Cross-correlation against the branch tables, plus the decomposition
    // into first-type profile lookups as a third route.
    let naive_auto_t1 = correlate_values(t1.bits(), t1.bits());
    let mut cross_check = Check::new("cross_correlation_prediction");
    let mut decomp_check = Check::new("correlation_decomposition");
    for &(e1, e2) in &pairs {
        let s1 = &cache[&e1];
        let s2 = &cache[&e2];
        let observed = correlate_values_packed(s1.bits(), s2.bits());
        let prediction = predict_cross_correlation(ctx, e1, e2)?;
        add_coverage(&mut coverage, &prediction.case_labels);
        let decomposed = decompose_from_profile(&naive_auto_t1, e1, e2);
        for tau in 0..2 * nn {
            cross_check.record(observed[tau] == prediction.values[tau], || {
                format!(
                    "e1={e1} e2={e2} tau={tau} expected={} observed={}",
                    prediction.values[tau], observed[tau]
                )
            });
            decomp_check.record(decomposed[tau] == observed[tau], || {
                format!(
                    "e1={e1} e2={e2} tau={tau} expected={} observed={}",
                    decomposed[tau], observed[tau]
                )
            });
        }
    }
    checks.push(cross_check.finish());
    checks.push(decomp_check.finish());

    // All three linear-complexity methods, plus the bound attainment rules.
    let odd_part = n >> nu2(n)?;
    let mut check = Check::new("linear_complexity_methods");
    for &e in &e_list {
        match lc_report(ctx, e) {
            Ok(report) => {
                let l = report.l_closed_form;
                let in_bounds = l >= 2 * n - odd_part && l <= 2 * n - 1;
                let upper_rule = (l == 2 * n - 1) == (report.g == 1);
                check.record(in_bounds && upper_rule, || {
                    format!("e={e} L={l} G={} outside the closed-form bounds", report.g)
                });
            }
            Err(err) => check.record(false, || format!("e={e}: {err}")),
        }
    }
    checks.push(check.finish());

    let mut check = Check::new("t1_linear_complexity");
    for (name, seq) in [("T1", &t1), ("T2", &t2)] {
        let mut prefix = seq.bits().to_vec();
        prefix.extend_from_slice(seq.bits());
        let l = bm_linear_complexity(&prefix, seq.period())? as u64;
        check.record(l == n, || format!("{name} L={l} expected {n}"));
    }
    checks.push(check.finish());

    let all_pass = checks.iter().all(|c| c.pass);
    Ok(VerifyReport {
        p: ctx.p(),
        m: ctx.m(),
        irreducible: format_coeffs(ctx.modulus()),
        omega: ctx.omega().to_string(),
        n,
        e_count: e_list.len(),
        pair_count: pairs.len(),
        checks,
        branch_coverage: coverage,
        all_pass,
    })
}
