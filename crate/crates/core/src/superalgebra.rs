//! The Lie superalgebra gl(m|n): abstract basis, structure constants,
//! the partial-trace elements H_k, and the exhaustive relation sweep
//! checking a representation against the enveloping-algebra relations.

use rayon::prelude::*;

use crate::error::Result;
use crate::exact::{ExactMatrix, ExactScalar};
use crate::grading::{Degree2, GradedSignature};
use crate::report::{VerificationReport, Violation};
use crate::representations::WeightDiagonalRep;

/// Index pair (i,j) of a basis element E_ij (or its lifted counterpart;
/// the two bases share index labels).
#[derive(Clone, Copy, Debug, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub struct BasisElement {
    pub i: usize,
    pub j: usize,
}

impl BasisElement {
    pub fn new(i: usize, j: usize) -> Self {
        BasisElement { i, j }
    }
}

/// Finitely supported linear combination of basis elements with exact
/// coefficients; zero coefficients are never stored.
#[derive(Clone, Debug, Default, PartialEq, Eq)]
pub struct LinearCombination {
    terms: std::collections::BTreeMap<BasisElement, ExactScalar>,
}

impl LinearCombination {
    pub fn zero() -> Self {
        LinearCombination::default()
    }

    pub fn add_term(&mut self, element: BasisElement, coeff: ExactScalar) {
        if coeff.is_zero() {
            return;
        }
        match self.terms.entry(element) {
            std::collections::btree_map::Entry::Vacant(slot) => {
                slot.insert(coeff);
            }
            std::collections::btree_map::Entry::Occupied(mut slot) => {
                let sum = &*slot.get() + &coeff;
                if sum.is_zero() {
                    slot.remove();
                } else {
                    *slot.get_mut() = sum;
                }
            }
        }
    }

    pub fn is_zero(&self) -> bool {
        self.terms.is_empty()
    }

    pub fn len(&self) -> usize {
        self.terms.len()
    }

    pub fn is_empty(&self) -> bool {
        self.terms.is_empty()
    }

    pub fn coefficient(&self, element: BasisElement) -> ExactScalar {
        self.terms
            .get(&element)
            .cloned()
            .unwrap_or_else(ExactScalar::zero)
    }

    pub fn iter(&self) -> impl Iterator<Item = (BasisElement, &ExactScalar)> {
        self.terms.iter().map(|(e, c)| (*e, c))
    }

    pub fn scale(&self, factor: &ExactScalar) -> Self {
        let mut out = LinearCombination::zero();
        for (e, c) in self.iter() {
            out.add_term(e, factor * c);
        }
        out
    }

    pub fn add(&self, other: &Self) -> Self {
        let mut out = self.clone();
        for (e, c) in other.iter() {
            out.add_term(e, c.clone());
        }
        out
    }

    pub fn sub(&self, other: &Self) -> Self {
        self.add(&other.scale(&ExactScalar::from_int(-1)))
    }

    /// Evaluates the combination against a matrix assignment for the
    /// basis elements.
    pub fn evaluate<F>(&self, dim: usize, mut image: F) -> Result<ExactMatrix>
    where
        F: FnMut(usize, usize) -> Result<ExactMatrix>,
    {
        let mut out = ExactMatrix::zero(dim, dim);
        for (e, c) in self.iter() {
            out = out.add(&image(e.i, e.j)?.scale(c))?;
        }
        Ok(out)
    }
}

/// Sign exponent d_ij * d_kl of the bracket of E_ij with E_kl: 1 means
/// anticommutator, 0 commutator.
pub fn super_sign_exponent(
    sig: &GradedSignature,
    i: usize,
    j: usize,
    k: usize,
    l: usize,
) -> Result<Degree2> {
    Ok(sig.z2_pair_degree(i, j)? * sig.z2_pair_degree(k, l)?)
}

/// Structure constants of gl(m|n):
/// [[E_ij, E_kl]] = delta_jk E_il - (-1)^{d_ij d_kl} delta_il E_kj.
pub fn super_structure(
    sig: &GradedSignature,
    i: usize,
    j: usize,
    k: usize,
    l: usize,
) -> Result<LinearCombination> {
    let sign = super_sign_exponent(sig, i, j, k, l)?;
    let mut out = LinearCombination::zero();
    if j == k {
        out.add_term(BasisElement::new(i, l), ExactScalar::one());
    }
    if i == l {
        out.add_term(BasisElement::new(k, j), ExactScalar::from_int(-1).with_sign(sign));
    }
    Ok(out)
}

/// H_k = E_11 + ... + E_kk.
pub fn h_element(sig: &GradedSignature, k: usize) -> Result<LinearCombination> {
    sig.check_index("H", k)?;
    let mut out = LinearCombination::zero();
    for t in 1..=k {
        out.add_term(BasisElement::new(t, t), ExactScalar::one());
    }
    Ok(out)
}

/// The integer c with [H_k, E_ij] = c E_ij: +1 when i <= k < j, -1 when
/// i > k >= j, 0 in the four remaining index configurations.
pub fn h_bracket_sign(sig: &GradedSignature, k: usize, i: usize, j: usize) -> Result<i64> {
    sig.check_index("H", k)?;
    sig.check_index("row", i)?;
    sig.check_index("column", j)?;
    Ok(if i <= k && k < j {
        1
    } else if i > k && k >= j {
        -1
    } else {
        0
    })
}

fn unflatten4(idx: usize, r: usize) -> (usize, usize, usize, usize) {
    let l = idx % r + 1;
    let k = (idx / r) % r + 1;
    let j = (idx / (r * r)) % r + 1;
    let i = idx / (r * r * r) + 1;
    (i, j, k, l)
}

/// Exhaustively checks the enveloping-algebra relations of gl(m|n) on a
/// representation: for every quadruple (i,j,k,l), the graded bracket of
/// the generator matrices must equal the image of the structure
/// constants. Violations are data, not errors.
pub fn verify_super_relations(rep: &WeightDiagonalRep) -> VerificationReport {
    let r = rep.rank();
    let sig = rep.ambient_signature();
    let total = r * r * r * r;
    let violations: Vec<Violation> = (0..total)
        .into_par_iter()
        .filter_map(|idx| {
            let (i, j, k, l) = unflatten4(idx, r);
            let sign = super_sign_exponent(&sig, i, j, k, l).expect("indices in range");
            let lhs = rep
                .generator(i, j)
                .expect("in range")
                .graded_bracket(rep.generator(k, l).expect("in range"), sign)
                .expect("same dimensions");
            let rhs = super_structure(&sig, i, j, k, l)
                .expect("indices in range")
                .evaluate(rep.dimension(), |p, q| rep.generator(p, q).cloned())
                .expect("in range");
            let diff = lhs.sub(&rhs).expect("same dimensions");
            if diff.is_zero() {
                None
            } else {
                Some(Violation {
                    indices: vec![i, j, k, l],
                    diff: Some(diff),
                })
            }
        })
        .collect();
    let (m, n) = rep.ambient();
    VerificationReport::new(
        format!("gl({m}|{n}) relations, dim {}", rep.dimension()),
        total,
        violations,
    )
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::representations::{defining_rep, graded_tensor_square};

    fn sig(m1: usize, m2: usize, n1: usize, n2: usize) -> GradedSignature {
        GradedSignature::new(m1, m2, n1, n2).unwrap()
    }

    fn gl22() -> GradedSignature {
        sig(2, 0, 2, 0)
    }

    #[test]
    fn structure_examples() {
        // {E13, E41} = E43 (anticommutator: d_13 d_41 = 1).
        let s = gl22();
        assert_eq!(
            super_sign_exponent(&s, 1, 3, 4, 1).unwrap(),
            Degree2::ODD
        );
        let b = super_structure(&s, 1, 3, 4, 1).unwrap();
        assert_eq!(b.len(), 1);
        assert_eq!(b.coefficient(BasisElement::new(4, 3)), ExactScalar::one());

        // [E21, E13] = E23 (commutator: d_21 d_13 = 0).
        assert_eq!(
            super_sign_exponent(&s, 2, 1, 1, 3).unwrap(),
            Degree2::EVEN
        );
        let c = super_structure(&s, 2, 1, 1, 3).unwrap();
        assert_eq!(c.len(), 1);
        assert_eq!(c.coefficient(BasisElement::new(2, 3)), ExactScalar::one());

        // [[E11, E11]] = 0: the delta terms cancel.
        assert!(super_structure(&s, 1, 1, 1, 1).unwrap().is_zero());
    }

    #[test]
    fn h_examples() {
        let s = gl22();
        let h2 = h_element(&s, 2).unwrap();
        assert_eq!(h2.len(), 2);
        assert_eq!(h2.coefficient(BasisElement::new(1, 1)), ExactScalar::one());
        assert_eq!(h2.coefficient(BasisElement::new(2, 2)), ExactScalar::one());
        assert_eq!(h_bracket_sign(&s, 1, 1, 3).unwrap(), 1);
        assert_eq!(h_bracket_sign(&s, 2, 3, 1).unwrap(), -1);
        assert_eq!(h_bracket_sign(&s, 3, 1, 2).unwrap(), 0);
        assert!(h_bracket_sign(&s, 5, 1, 2).is_err());
    }

    #[test]
    fn defining_rep_satisfies_relations() {
        let report = verify_super_relations(&defining_rep(&gl22()));
        assert_eq!(report.checked, 256);
        assert!(report.pass());
    }

    #[test]
    fn tensor_square_of_gl11_satisfies_relations() {
        let rep = graded_tensor_square(&defining_rep(&sig(1, 0, 1, 0))).unwrap();
        let report = verify_super_relations(&rep);
        assert_eq!(report.checked, 16);
        assert!(report.pass());
    }

    #[test]
    fn corrupted_rep_is_detected() {
        // Flip one sign on the matrix of E_13 in the defining rep of
        // gl(2|2) and the sweep must name a violating quadruple.
        let rep = defining_rep(&gl22());
        let mut generators: Vec<ExactMatrix> = Vec::new();
        for i in 1..=4 {
            for j in 1..=4 {
                generators.push(rep.generator(i, j).unwrap().clone());
            }
        }
        generators[2] = generators[2].neg(); // E_13
        let weights = (1..=4).map(|v| rep.weight(v).unwrap().to_vec()).collect();
        let broken = WeightDiagonalRep::new(2, 2, generators, weights).unwrap();
        let report = verify_super_relations(&broken);
        assert!(!report.pass());
        assert!(report
            .violations
            .iter()
            .any(|v| v.indices.contains(&1) && v.indices.contains(&3)));
        assert!(report.violations[0].diff.is_some());
    }

    #[test]
    fn linear_combination_cancellation() {
        let mut lc = LinearCombination::zero();
        lc.add_term(BasisElement::new(1, 2), ExactScalar::one());
        lc.add_term(BasisElement::new(1, 2), ExactScalar::from_int(-1));
        assert!(lc.is_zero());
    }
}
