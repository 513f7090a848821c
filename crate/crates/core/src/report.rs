//! Machine-readable report documents. Field order is fixed by the struct
//! definitions and maps serialize through ordered containers, so identical
//! runs produce byte-identical output.
//!
//! CSV reports carry one `#`-prefixed parameter comment line above the frozen
//! header row `tau,value,predicted,branch`.

use crate::complexity::LinearComplexityReport;
use crate::correlation::CorrelationPrediction;
use crate::field::{format_coeffs, FieldContext};
use serde::Serialize;
use std::fmt::Write;

/// Instance identification block embedded in correlation reports.
#[derive(Debug, Clone, Serialize)]
pub struct CorrelationParameters {
    pub p: u64,
    pub m: u32,
    pub irreducible: String,
    pub omega: String,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub e: Option<u64>,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub e1: Option<u64>,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub e2: Option<u64>,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub swapped: Option<bool>,
}

impl CorrelationParameters {
    pub fn new(ctx: &FieldContext) -> Self {
        Self {
            p: ctx.p(),
            m: ctx.m(),
            irreducible: format_coeffs(ctx.modulus()),
            omega: ctx.omega().to_string(),
            e: None,
            e1: None,
            e2: None,
            swapped: None,
        }
    }

    pub fn with_shift(mut self, e: u64) -> Self {
        self.e = Some(e);
        self
    }

    pub fn with_pair(mut self, e1: u64, e2: u64, swapped: bool) -> Self {
        self.e1 = Some(e1);
        self.e2 = Some(e2);
        self.swapped = Some(swapped);
        self
    }

    fn comment_line(&self) -> String {
        let mut s = format!(
            "p={} m={} irreducible={} omega={}",
            self.p, self.m, self.irreducible, self.omega
        );
        if let Some(e) = self.e {
            write!(s, " e={e}").unwrap();
        }
        if let Some(e1) = self.e1 {
            write!(s, " e1={e1}").unwrap();
        }
        if let Some(e2) = self.e2 {
            write!(s, " e2={e2}").unwrap();
        }
        if let Some(swapped) = self.swapped {
            write!(s, " swapped={swapped}").unwrap();
        }
        s
    }
}

/// Per-shift comparison of the brute-force profile against a closed-form
/// prediction.
#[derive(Debug, Clone, Serialize)]
pub struct CorrelationReport {
    pub parameters: CorrelationParameters,
    pub observed: Vec<i64>,
    pub predicted: Vec<i64>,
    pub branches: Vec<String>,
    #[serde(rename = "match")]
    pub matches: bool,
}

impl CorrelationReport {
    pub fn new(
        parameters: CorrelationParameters,
        observed: Vec<i64>,
        prediction: &CorrelationPrediction,
    ) -> Self {
        let matches = observed == prediction.values;
        Self {
            parameters,
            observed,
            predicted: prediction.values.clone(),
            branches: prediction.case_labels.iter().map(|s| s.to_string()).collect(),
            matches,
        }
    }

    pub fn to_json(&self) -> String {
        let mut s = serde_json::to_string_pretty(self).expect("report serialization");
        s.push('\n');
        s
    }

    pub fn to_csv(&self) -> String {
        let mut s = format!("# {}\n", self.parameters.comment_line());
        s.push_str("tau,value,predicted,branch\n");
        for (tau, (value, (predicted, branch))) in self
            .observed
            .iter()
            .zip(self.predicted.iter().zip(&self.branches))
            .enumerate()
        {
            writeln!(s, "{tau},{value},{predicted},{branch}").unwrap();
        }
        s
    }
}

/// Linear-complexity report with a frozen key set.
#[derive(Debug, Clone, Serialize)]
pub struct ComplexityReport {
    pub p: u64,
    pub m: u32,
    pub e: u64,
    #[serde(rename = "N")]
    pub n: u64,
    pub nu2: u32,
    #[serde(rename = "G")]
    pub g: u64,
    #[serde(rename = "L_closed")]
    pub l_closed: u64,
    #[serde(rename = "L_gcd")]
    pub l_gcd: u64,
    #[serde(rename = "L_bm")]
    pub l_bm: u64,
    pub minimal_poly_hex: String,
    pub agreement: bool,
}

impl ComplexityReport {
    pub fn new(ctx: &FieldContext, e: u64, report: &LinearComplexityReport) -> Self {
        Self {
            p: ctx.p(),
            m: ctx.m(),
            e,
            n: ctx.n(),
            nu2: report.nu2_n,
            g: report.g,
            l_closed: report.l_closed_form,
            l_gcd: report.l_gcd_method,
            l_bm: report.l_berlekamp_massey,
            minimal_poly_hex: report.minimal_poly.to_hex(),
            agreement: report.agreement,
        }
    }

    pub fn to_json(&self) -> String {
        let mut s = serde_json::to_string_pretty(self).expect("report serialization");
        s.push('\n');
        s
    }

    pub fn to_csv(&self) -> String {
        format!(
            "p,m,e,N,nu2,G,L_closed,L_gcd,L_bm,minimal_poly_hex,agreement\n{},{},{},{},{},{},{},{},{},{},{}\n",
            self.p,
            self.m,
            self.e,
            self.n,
            self.nu2,
            self.g,
            self.l_closed,
            self.l_gcd,
            self.l_bm,
            self.minimal_poly_hex,
            self.agreement
        )
    }
}

/// Field summary emitted by the `field-info` command.
#[derive(Debug, Clone, Serialize)]
pub struct FieldInfo {
    pub p: u64,
    pub m: u32,
    pub irreducible: String,
    pub omega: String,
    pub order: u64,
    #[serde(rename = "N")]
    pub n: u64,
    #[serde(rename = "N1")]
    pub n1: i64,
    #[serde(rename = "N2")]
    pub n2: i64,
}

impl FieldInfo {
    pub fn new(ctx: &FieldContext) -> Self {
        let c = crate::correlation::autocorr_constants(ctx);
        Self {
            p: ctx.p(),
            m: ctx.m(),
            irreducible: format_coeffs(ctx.modulus()),
            omega: ctx.omega().to_string(),
            order: ctx.order(),
            n: ctx.n(),
            n1: c.n1,
            n2: c.n2,
        }
    }

    pub fn to_json(&self) -> String {
        let mut s = serde_json::to_string_pretty(self).expect("report serialization");
        s.push('\n');
        s
    }
}
