//! Matrix dump files.
//!
//! ```text
//! # <tag> <n> <ell>
//! 1,0,0
//! 1,1/2,0
//! 1,1,1/2
//! ```
//!
//! One header line, then the full `(n+1) × (n+1)` matrix in row-major order
//! with entries written exactly (`p/q`, or `p` for integers). `<ell>` is `-`
//! for the Pascal matrices, which do not depend on the length.

use std::str::FromStr;

use newton_cond_core::matrices::{
    build_l, build_l3, build_l_inverse, build_pascal, build_pascal_inverse, scaling_d,
    LowerTriangular, MatrixTag,
};
use newton_cond_core::Scalar;

use crate::format::{parse_rational, render_exact};
use crate::{CliError, Result};

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum MatrixKind {
    L,
    LInverse,
    Pascal,
    PascalInverse,
    L3,
    D,
}

impl MatrixKind {
    pub fn needs_length(self) -> bool {
        !matches!(self, MatrixKind::Pascal | MatrixKind::PascalInverse)
    }

    pub fn build(self, n: usize, length: Option<&Scalar>) -> Result<LowerTriangular> {
        let length =
            || length.ok_or_else(|| CliError::Usage(format!("matrix {self:?} needs --ell")));
        Ok(match self {
            MatrixKind::L => build_l(n, length()?)?,
            MatrixKind::LInverse => build_l_inverse(n, length()?)?,
            MatrixKind::Pascal => build_pascal(n)?,
            MatrixKind::PascalInverse => build_pascal_inverse(n)?,
            MatrixKind::L3 => build_l3(n, length()?)?,
            MatrixKind::D => scaling_d(n, length()?)?,
        })
    }
}

impl FromStr for MatrixKind {
    type Err = CliError;

    fn from_str(s: &str) -> Result<Self> {
        Ok(match s {
            "L" => MatrixKind::L,
            "Linv" => MatrixKind::LInverse,
            "pascal" => MatrixKind::Pascal,
            "pascal_inv" => MatrixKind::PascalInverse,
            "L3" => MatrixKind::L3,
            "D" => MatrixKind::D,
            other => {
                return Err(CliError::Usage(format!(
                    "unknown matrix kind {other:?} (expected L, Linv, pascal, pascal_inv, L3 or D)"
                )))
            }
        })
    }
}

pub fn write_matrix(m: &LowerTriangular, length: Option<&Scalar>) -> String {
    let ell = length.map(render_exact).unwrap_or_else(|| "-".into());
    let mut out = format!("# {} {} {}\n", m.tag().name(), m.n(), ell);
    for i in 0..m.dim() {
        let row: Vec<String> = (0..m.dim()).map(|j| render_exact(&m.entry(i, j))).collect();
        out.push_str(&row.join(","));
        out.push('\n');
    }
    out
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct MatrixFile {
    pub tag: String,
    pub n: usize,
    pub length: Option<Scalar>,
    pub matrix: LowerTriangular,
}

pub fn read_matrix(text: &str) -> Result<MatrixFile> {
    let bad = |msg: &str| CliError::Usage(format!("malformed matrix file: {msg}"));
    let mut lines = text.lines();
    let header = lines.next().ok_or_else(|| bad("empty"))?;
    let fields: Vec<&str> = header
        .strip_prefix('#')
        .ok_or_else(|| bad("missing header"))?
        .split_whitespace()
        .collect();
    let [tag, n, ell] = fields[..] else {
        return Err(bad("header must be '# tag n ell'"));
    };
    let n: usize = n.parse().map_err(|_| bad("bad n"))?;
    let length = if ell == "-" {
        None
    } else {
        Some(parse_rational(ell)?)
    };
    let mut rows = Vec::with_capacity(n + 1);
    for (i, line) in lines.enumerate() {
        let entries = line
            .split(',')
            .map(parse_rational)
            .collect::<std::result::Result<Vec<_>, _>>()?;
        if entries.len() != n + 1 {
            return Err(bad("wrong row width"));
        }
        if entries[i + 1..].iter().any(|v| *v != Scalar::default()) {
            return Err(bad("nonzero entry above the diagonal"));
        }
        rows.push(entries[..=i].to_vec());
    }
    if rows.len() != n + 1 {
        return Err(bad("wrong number of rows"));
    }
    Ok(MatrixFile {
        tag: tag.to_string(),
        n,
        length,
        matrix: LowerTriangular::from_rows(rows, MatrixTag::Generic)?,
    })
}
