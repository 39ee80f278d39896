//! `κ∞(L)` at equidistant nodes on `[0, 1]`, `[0, 2]` and `[0, 3]` for
//! `n ∈ {3, 4, 5, 9, 14, 19}`.

use newton_cond_core::conditioning::kappa_l_closed;
use newton_cond_core::numerics::int;
use newton_cond_core::Scalar;
use serde::Serialize;

use crate::format::{render_exact, render_sig};
use crate::Result;

pub const DEGREES: [usize; 6] = [3, 4, 5, 9, 14, 19];
pub const LENGTHS: [i64; 3] = [1, 2, 3];

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Table1Row {
    pub n: usize,
    /// `κ∞(L)` for lengths 1, 2 and 3.
    pub kappas: [Scalar; 3],
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Table1Result {
    pub rows: Vec<Table1Row>,
}

#[derive(Serialize)]
struct JsonRow {
    n: usize,
    kappa: [String; 3],
    #[serde(skip_serializing_if = "Option::is_none")]
    exact: Option<[String; 3]>,
}

pub fn cmd_table1() -> Result<Table1Result> {
    let rows = DEGREES
        .iter()
        .map(|&n| {
            let mut kappas = LENGTHS.map(|_| Scalar::default());
            for (slot, l) in kappas.iter_mut().zip(LENGTHS) {
                *slot = kappa_l_closed(n, &int(l))?.kappa_inf;
            }
            Ok(Table1Row { n, kappas })
        })
        .collect::<Result<_>>()?;
    Ok(Table1Result { rows })
}

impl Table1Result {
    pub fn to_csv(&self, digits: usize, exact: bool) -> String {
        let mut out = String::from("n,kappa_ell1,kappa_ell2,kappa_ell3");
        if exact {
            out.push_str(",kappa_ell1_exact,kappa_ell2_exact,kappa_ell3_exact");
        }
        out.push('\n');
        for row in &self.rows {
            out.push_str(&row.n.to_string());
            for k in &row.kappas {
                out.push(',');
                out.push_str(&render_sig(k, digits));
            }
            if exact {
                for k in &row.kappas {
                    out.push(',');
                    out.push_str(&render_exact(k));
                }
            }
            out.push('\n');
        }
        out
    }

    pub fn to_json(&self, digits: usize, exact: bool) -> serde_json::Result<String> {
        let rows: Vec<JsonRow> = self
            .rows
            .iter()
            .map(|r| JsonRow {
                n: r.n,
                kappa: r.kappas.clone().map(|k| render_sig(&k, digits)),
                exact: exact.then(|| r.kappas.clone().map(|k| render_exact(&k))),
            })
            .collect();
        serde_json::to_string_pretty(&rows)
    }
}
