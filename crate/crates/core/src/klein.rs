//! Klein operators and the seven-region realisation map.
//!
//! On an integer-weight representation the operator B_k = (-1)^{H_k}
//! (H_k the sum of the first k Cartan generators) is a diagonal +-1
//! matrix, equal to its own inverse. Dressing each generator matrix
//! with B_{m1} and/or B_m on the side dictated by its region produces
//! the lifted generators of the colour algebra. B_0 is the identity, so
//! the dressing formulas stay total when m1 = 0 (or m = 0).

use rayon::prelude::*;

use crate::error::{Error, Result};
use crate::exact::ExactMatrix;
use crate::grading::{GradedSignature, RegionTag};
use crate::report::{VerificationReport, Violation};
use crate::representations::WeightDiagonalRep;

/// The diagonal matrix of B_k on the representation: entry
/// (-1)^{w_1 + ... + w_k} on each basis vector. Accepts 0 <= k <= r,
/// with B_0 = identity.
pub fn b_matrix(rep: &WeightDiagonalRep, k: usize) -> Result<ExactMatrix> {
    let r = rep.rank();
    if k > r {
        return Err(Error::IndexOutOfRange {
            what: "Klein operator",
            index: k,
            bound: r,
        });
    }
    let signs: Vec<i64> = (1..=rep.dimension())
        .map(|v| {
            let partial: i64 = rep.weight(v).expect("in range")[..k].iter().sum();
            if partial.rem_euclid(2) == 0 {
                1
            } else {
                -1
            }
        })
        .collect();
    Ok(ExactMatrix::diagonal_signs(&signs))
}

/// The sign in B_k E_ij = s E_ij B_k: -1 exactly when k sits inside the
/// range determined by i and j (i <= k < j or i > k >= j), +1 otherwise.
pub fn b_sign(sig: &GradedSignature, k: usize, i: usize, j: usize) -> Result<i64> {
    sig.check_index("Klein operator", k)?;
    sig.check_index("row", i)?;
    sig.check_index("column", j)?;
    Ok(if (i <= k && k < j) || (i > k && k >= j) {
        -1
    } else {
        1
    })
}

/// The lifted generator matrix: the image of E_ij composed with Klein
/// factors according to its region. Right factors act on regions
/// (b)-(d), left factors on (e)-(g); region (a) is untouched. B and
/// B^{-1} coincide matrix-wise on integer-weight representations, but
/// the side of the multiplication still matters.
pub fn realise(
    rep: &WeightDiagonalRep,
    sig: &GradedSignature,
    i: usize,
    j: usize,
) -> Result<ExactMatrix> {
    let (m, n) = rep.ambient();
    if sig.m() != m || sig.n() != n {
        return Err(Error::SignatureMismatch {
            sig: sig.to_string(),
            m,
            n,
        });
    }
    let rho = rep.generator(i, j)?;
    let region = sig.classify_region(i, j)?;
    let b_m1 = || b_matrix(rep, sig.m1());
    let b_m = || b_matrix(rep, sig.m());
    Ok(match region {
        RegionTag::A => rho.clone(),
        RegionTag::B => rho.mul(&b_m1()?)?,
        RegionTag::C => rho.mul(&b_m()?)?,
        RegionTag::D => rho.mul(&b_m1()?)?.mul(&b_m()?)?,
        RegionTag::E => b_m1()?.mul(rho)?,
        RegionTag::F => b_m()?.mul(rho)?,
        RegionTag::G => b_m1()?.mul(&b_m()?)?.mul(rho)?,
    })
}

/// All r*r lifted generator matrices, indexed row-major by (i,j).
pub fn realise_all(rep: &WeightDiagonalRep, sig: &GradedSignature) -> Result<Vec<ExactMatrix>> {
    let r = rep.rank();
    let mut out = Vec::with_capacity(r * r);
    for i in 1..=r {
        for j in 1..=r {
            out.push(realise(rep, sig, i, j)?);
        }
    }
    Ok(out)
}

/// Exhaustively checks B_k rho(E_ij) - s rho(E_ij) B_k = 0 for all
/// (k,i,j) with the sign s from [`b_sign`].
pub fn verify_b_commutation(rep: &WeightDiagonalRep) -> VerificationReport {
    let r = rep.rank();
    let sig = rep.ambient_signature();
    let b: Vec<ExactMatrix> = (0..=r)
        .map(|k| b_matrix(rep, k).expect("in range"))
        .collect();
    let total = r * r * r;
    let violations: Vec<Violation> = (0..total)
        .into_par_iter()
        .filter_map(|idx| {
            let j = idx % r + 1;
            let i = (idx / r) % r + 1;
            let k = idx / (r * r) + 1;
            let rho = rep.generator(i, j).expect("in range");
            let sign = b_sign(&sig, k, i, j).expect("in range");
            let left = b[k].mul(rho).expect("same dimensions");
            let right = rho.mul(&b[k]).expect("same dimensions");
            let diff = if sign == 1 {
                left.sub(&right)
            } else {
                left.add(&right)
            }
            .expect("same dimensions");
            if diff.is_zero() {
                None
            } else {
                Some(Violation {
                    indices: vec![k, i, j],
                    diff: Some(diff),
                })
            }
        })
        .collect();
    let (m, n) = rep.ambient();
    VerificationReport::new(
        format!("Klein commutation on gl({m}|{n}), dim {}", rep.dimension()),
        total,
        violations,
    )
}
