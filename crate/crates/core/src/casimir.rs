//! Quadratic Casimir candidates for the colour algebra, a brute-force
//! centrality checker, and the highest-weight eigenvalue formula.
//!
//! Three sign exponents for Sum (-1)^e(i,j) E~_ij E~_ji are kept side
//! by side and the centrality sweep is the arbiter; nothing here
//! assumes which candidates are central.

use std::fmt;
use std::str::FromStr;

use rayon::prelude::*;

use crate::error::{Error, Result};
use crate::exact::{ExactMatrix, ExactScalar};
use crate::grading::{Degree2, GradedSignature};
use crate::klein::realise_all;
use crate::report::{VerificationReport, Violation};
use crate::representations::WeightDiagonalRep;

/// Which sign exponent the quadratic sum uses.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash)]
pub enum CasimirVariant {
    /// The self-dot of the pair degree of E~_ij (which reduces to the
    /// gl(m|n) parity of E_ij).
    PaperLiteral,
    /// The self-dot of the column degree (which reduces to the gl(m|n)
    /// parity of the column index).
    ColumnDegree,
    /// The self-dot of the row degree.
    RowDegree,
}

impl CasimirVariant {
    pub const ALL: [CasimirVariant; 3] = [
        CasimirVariant::PaperLiteral,
        CasimirVariant::ColumnDegree,
        CasimirVariant::RowDegree,
    ];

    pub fn label(self) -> &'static str {
        match self {
            CasimirVariant::PaperLiteral => "paper-literal",
            CasimirVariant::ColumnDegree => "column-degree",
            CasimirVariant::RowDegree => "row-degree",
        }
    }

    /// The exponent e(i,j) of (-1) weighting the (i,j) summand.
    pub fn exponent(self, sig: &GradedSignature, i: usize, j: usize) -> Result<Degree2> {
        Ok(match self {
            CasimirVariant::PaperLiteral => {
                let d = sig.pair_degree22(i, j)?;
                d.dot(d)
            }
            CasimirVariant::ColumnDegree => {
                let d = sig.z22_degree(j)?;
                sig.check_index("row", i)?;
                d.dot(d)
            }
            CasimirVariant::RowDegree => {
                let d = sig.z22_degree(i)?;
                sig.check_index("column", j)?;
                d.dot(d)
            }
        })
    }
}

impl fmt::Display for CasimirVariant {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.label())
    }
}

impl FromStr for CasimirVariant {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        match s {
            "paper-literal" => Ok(CasimirVariant::PaperLiteral),
            "column-degree" => Ok(CasimirVariant::ColumnDegree),
            "row-degree" => Ok(CasimirVariant::RowDegree),
            other => Err(Error::InvalidScalar(format!(
                "unknown Casimir variant {other:?}"
            ))),
        }
    }
}

/// Sum over all (i,j) of (-1)^e(i,j) E~_ij E~_ji on the representation.
pub fn casimir_matrix(
    rep: &WeightDiagonalRep,
    sig: &GradedSignature,
    variant: CasimirVariant,
) -> Result<ExactMatrix> {
    let lifted = realise_all(rep, sig)?;
    let r = rep.rank();
    let at = |i: usize, j: usize| &lifted[(i - 1) * r + (j - 1)];
    let mut out = ExactMatrix::zero(rep.dimension(), rep.dimension());
    for i in 1..=r {
        for j in 1..=r {
            let sign = variant.exponent(sig, i, j)?;
            let term = at(i, j).mul(at(j, i))?;
            out = if sign.is_odd() {
                out.sub(&term)?
            } else {
                out.add(&term)?
            };
        }
    }
    Ok(out)
}

/// Lists every lifted generator whose matrix commutator with the
/// Casimir candidate fails to vanish. The candidate has trivial colour
/// degree, so its bracket with anything is the plain commutator.
pub fn centrality_report(
    rep: &WeightDiagonalRep,
    sig: &GradedSignature,
    variant: CasimirVariant,
) -> Result<VerificationReport> {
    let casimir = casimir_matrix(rep, sig, variant)?;
    let lifted = realise_all(rep, sig)?;
    let r = rep.rank();
    let total = r * r;
    let violations: Vec<Violation> = (0..total)
        .into_par_iter()
        .filter_map(|idx| {
            let l = idx % r + 1;
            let k = idx / r + 1;
            let gen = &lifted[(k - 1) * r + (l - 1)];
            let diff = casimir
                .graded_bracket(gen, Degree2::EVEN)
                .expect("same dimensions");
            if diff.is_zero() {
                None
            } else {
                Some(Violation {
                    indices: vec![k, l],
                    diff: Some(diff),
                })
            }
        })
        .collect();
    Ok(VerificationReport::new(
        format!("centrality of {variant} Casimir for {sig}, dim {}", rep.dimension()),
        total,
        violations,
    ))
}

/// The highest-weight eigenvalue formula: for a top row
/// (mu_1, ..., mu_r) it evaluates
/// Sum_{i<=m} mu_i (mu_i + m - n - 2i + 1)
///   - Sum_{k<=n} mu_{m+k} (mu_{m+k} + m + n - 2k + 1).
pub fn hw_eigenvalue(sig: &GradedSignature, top_row: &[i64]) -> Result<ExactScalar> {
    let r = sig.rank();
    if top_row.len() != r {
        return Err(Error::InvalidPattern(format!(
            "top row has length {}, expected {r}",
            top_row.len()
        )));
    }
    let (m, n) = (sig.m() as i64, sig.n() as i64);
    let mut total = ExactScalar::zero();
    for (pos, &mu) in top_row.iter().enumerate() {
        let term = if pos < sig.m() {
            let i = pos as i64 + 1;
            mu * (mu + m - n - 2 * i + 1)
        } else {
            let k = (pos - sig.m()) as i64 + 1;
            -(mu * (mu + m + n - 2 * k + 1))
        };
        total = total + ExactScalar::from_int(term);
    }
    Ok(total)
}
