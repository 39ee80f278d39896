//! CSV and JSON serialization of condition reports.
//!
//! CSV layout, one header line then one row per report:
//!
//! ```text
//! n,ell,regime,i_n,norm_L,norm_Linv,kappa_inf,skeel_inv
//! ```
//!
//! `ell` is always exact; the four numeric columns are decimals at the
//! requested number of significant digits. With exact output enabled, four
//! more columns (`norm_L_exact`, ...) carry the values as `p/q`. `i_n` is
//! empty outside the middle regime.

use newton_cond_core::conditioning::{
    inf_norm, kappa_l_by_cases, kappa_l_closed, skeel_cond, ConditionReport, Regime,
};
use newton_cond_core::matrices::{build_l, build_l_inverse};
use newton_cond_core::Scalar;
use serde::Serialize;

use crate::format::{parse_rational, render_exact, render_sig};
use crate::{CliError, Result};

pub const CSV_HEADER: &str = "n,ell,regime,i_n,norm_L,norm_Linv,kappa_inf,skeel_inv";
pub const CSV_EXACT_HEADER: &str = ",norm_L_exact,norm_Linv_exact,kappa_inf_exact,skeel_inv_exact";

/// Largest degree for which `cond` re-derives the norms from the matrices.
pub const BRUTE_FORCE_LIMIT: usize = 200;

#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct ExactColumns {
    pub norm_l: String,
    pub norm_linv: String,
    pub kappa_inf: String,
    pub skeel_inv: String,
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct ConditionRecord {
    pub n: usize,
    pub ell: String,
    pub regime: &'static str,
    pub i_n: Option<usize>,
    pub norm_l: String,
    pub norm_linv: String,
    pub kappa_inf: String,
    pub skeel_inv: String,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub exact: Option<ExactColumns>,
}

impl ConditionRecord {
    pub fn new(report: &ConditionReport, digits: usize, exact: bool) -> Self {
        Self {
            n: report.n,
            ell: render_exact(&report.length),
            regime: report.regime.name(),
            i_n: report.i_n,
            norm_l: render_sig(&report.norm_l, digits),
            norm_linv: render_sig(&report.norm_linv, digits),
            kappa_inf: render_sig(&report.kappa_inf, digits),
            skeel_inv: render_sig(&report.skeel_of_inverse, digits),
            exact: exact.then(|| ExactColumns {
                norm_l: render_exact(&report.norm_l),
                norm_linv: render_exact(&report.norm_linv),
                kappa_inf: render_exact(&report.kappa_inf),
                skeel_inv: render_exact(&report.skeel_of_inverse),
            }),
        }
    }

    pub fn csv_row(&self) -> String {
        let mut row = format!(
            "{},{},{},{},{},{},{},{}",
            self.n,
            self.ell,
            self.regime,
            self.i_n.map(|i| i.to_string()).unwrap_or_default(),
            self.norm_l,
            self.norm_linv,
            self.kappa_inf,
            self.skeel_inv
        );
        if let Some(e) = &self.exact {
            row.push_str(&format!(
                ",{},{},{},{}",
                e.norm_l, e.norm_linv, e.kappa_inf, e.skeel_inv
            ));
        }
        row
    }
}

pub fn csv_header(exact: bool) -> String {
    if exact {
        format!("{CSV_HEADER}{CSV_EXACT_HEADER}")
    } else {
        CSV_HEADER.to_string()
    }
}

/// Exact values recovered from a CSV row written with exact columns.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct ParsedExactRow {
    pub n: usize,
    pub ell: Scalar,
    pub regime: String,
    pub i_n: Option<usize>,
    pub norm_l: Scalar,
    pub norm_linv: Scalar,
    pub kappa_inf: Scalar,
    pub skeel_inv: Scalar,
}

pub fn parse_exact_row(line: &str) -> Result<ParsedExactRow> {
    let fields: Vec<&str> = line.split(',').collect();
    if fields.len() != 12 {
        return Err(CliError::Usage(format!(
            "expected 12 fields in an exact report row, got {}",
            fields.len()
        )));
    }
    let n = fields[0]
        .parse()
        .map_err(|_| CliError::Usage(format!("bad n {:?}", fields[0])))?;
    let i_n = if fields[3].is_empty() {
        None
    } else {
        Some(
            fields[3]
                .parse()
                .map_err(|_| CliError::Usage(format!("bad i_n {:?}", fields[3])))?,
        )
    };
    Ok(ParsedExactRow {
        n,
        ell: parse_rational(fields[1])?,
        regime: fields[2].to_string(),
        i_n,
        norm_l: parse_rational(fields[8])?,
        norm_linv: parse_rational(fields[9])?,
        kappa_inf: parse_rational(fields[10])?,
        skeel_inv: parse_rational(fields[11])?,
    })
}

/// Closed-form report, cross-checked against the constructed matrices for
/// moderate `n`. Any disagreement is an invariant violation.
pub fn checked_report(n: usize, length: &Scalar) -> Result<ConditionReport> {
    let report = kappa_l_closed(n, length)?;
    let fail = |what: &str| {
        Err(CliError::Invariant(format!(
            "{what} (n = {n}, ell = {})",
            render_exact(length)
        )))
    };
    if report.kappa_inf != kappa_l_by_cases(n, length)? {
        return fail("norm product differs from the three-case kappa formula");
    }
    if report.skeel_of_inverse > report.kappa_inf {
        return fail("Skeel lower bound exceeds kappa");
    }
    if report.regime == Regime::Middle && !matches!(report.i_n, Some(i) if (1..=n).contains(&i)) {
        return fail("dominant row out of range");
    }
    if n <= BRUTE_FORCE_LIMIT {
        let l = build_l(n, length)?;
        let l_inv = build_l_inverse(n, length)?;
        if inf_norm(&l) != report.norm_l {
            return fail("closed-form norm of L differs from brute force");
        }
        if inf_norm(&l_inv) != report.norm_linv {
            return fail("closed-form norm of L^-1 differs from brute force");
        }
        if skeel_cond(&l_inv, &l)? != report.skeel_of_inverse {
            return fail("Skeel condition of L^-1 differs from 3^n");
        }
    }
    Ok(report)
}
