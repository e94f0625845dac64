//! The colour algebra gl(m1,m2|n1,n2): structure constants over the
//! lifted basis, the commutator/anticommutator flip table against
//! gl(m|n), and the central verification engine checking that the
//! Klein-dressed matrices satisfy the colour relations.
//!
//! Linear combinations here are over the lifted basis elements, which
//! share index labels with the gl(m|n) basis.

use rayon::prelude::*;

use crate::error::Result;
use crate::exact::ExactScalar;
use crate::grading::{Degree2, GradedSignature};
use crate::klein::realise_all;
use crate::report::{VerificationReport, Violation};
use crate::representations::WeightDiagonalRep;
use crate::superalgebra::{super_sign_exponent, BasisElement, LinearCombination};

/// Colour sign exponent: the dot product of the colour degrees of E_ij
/// and E_kl; 1 means anticommutator, 0 commutator.
pub fn colour_sign_exponent(
    sig: &GradedSignature,
    i: usize,
    j: usize,
    k: usize,
    l: usize,
) -> Result<Degree2> {
    Ok(sig.pair_degree22(i, j)?.dot(sig.pair_degree22(k, l)?))
}

/// Structure constants of the colour algebra: the same delta pattern as
/// gl(m|n), with the colour dot product in the sign.
pub fn colour_structure(
    sig: &GradedSignature,
    i: usize,
    j: usize,
    k: usize,
    l: usize,
) -> Result<LinearCombination> {
    let sign = colour_sign_exponent(sig, i, j, k, l)?;
    let mut out = LinearCombination::zero();
    if j == k {
        out.add_term(BasisElement::new(i, l), ExactScalar::one());
    }
    if i == l {
        out.add_term(BasisElement::new(k, j), ExactScalar::from_int(-1).with_sign(sign));
    }
    Ok(out)
}

/// All quadruples where the colour algebra and gl(m|n) disagree on
/// commutator versus anticommutator, in lexicographic order.
pub fn bracket_flip_table(sig: &GradedSignature) -> Vec<((usize, usize), (usize, usize))> {
    let r = sig.rank();
    let mut out = Vec::new();
    for i in 1..=r {
        for j in 1..=r {
            for k in 1..=r {
                for l in 1..=r {
                    let colour = colour_sign_exponent(sig, i, j, k, l).expect("in range");
                    let plain = super_sign_exponent(sig, i, j, k, l).expect("in range");
                    if colour != plain {
                        out.push(((i, j), (k, l)));
                    }
                }
            }
        }
    }
    out
}

/// Exhaustively checks the colour enveloping relations on the lifted
/// matrices: for every quadruple, the graded bracket of the lifts must
/// equal the lift of the colour structure constants.
pub fn verify_colour_relations(
    rep: &WeightDiagonalRep,
    sig: &GradedSignature,
) -> Result<VerificationReport> {
    let lifted = realise_all(rep, sig)?;
    let r = rep.rank();
    let at = |i: usize, j: usize| &lifted[(i - 1) * r + (j - 1)];
    let total = r * r * r * r;
    let violations: Vec<Violation> = (0..total)
        .into_par_iter()
        .filter_map(|idx| {
            let l = idx % r + 1;
            let k = (idx / r) % r + 1;
            let j = (idx / (r * r)) % r + 1;
            let i = idx / (r * r * r) + 1;
            let sign = colour_sign_exponent(sig, i, j, k, l).expect("in range");
            let lhs = at(i, j)
                .graded_bracket(at(k, l), sign)
                .expect("same dimensions");
            let rhs = colour_structure(sig, i, j, k, l)
                .expect("in range")
                .evaluate(rep.dimension(), |p, q| Ok(at(p, q).clone()))
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
    Ok(VerificationReport::new(
        format!("colour relations for {sig}, dim {}", rep.dimension()),
        total,
        violations,
    ))
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::grading::all_signatures;
    use crate::klein::realise;
    use crate::representations::{defining_rep, graded_tensor_square};
    use crate::superalgebra::super_structure;

    fn sig(m1: usize, m2: usize, n1: usize, n2: usize) -> GradedSignature {
        GradedSignature::new(m1, m2, n1, n2).unwrap()
    }

    #[test]
    fn structure_examples() {
        let s = sig(1, 1, 1, 1);
        // [E~13, E~41] = -E~43: colour dot (1,0).(0,1) = 0.
        assert_eq!(
            colour_sign_exponent(&s, 1, 3, 4, 1).unwrap(),
            Degree2::EVEN
        );
        let b = colour_structure(&s, 1, 3, 4, 1).unwrap();
        assert_eq!(b.len(), 1);
        assert_eq!(
            b.coefficient(BasisElement::new(4, 3)),
            ExactScalar::from_int(-1)
        );

        // {E~21, E~13} = E~23: colour dot (1,1).(1,0) = 1.
        assert_eq!(colour_sign_exponent(&s, 2, 1, 1, 3).unwrap(), Degree2::ODD);
        let c = colour_structure(&s, 2, 1, 1, 3).unwrap();
        assert_eq!(c.len(), 1);
        assert_eq!(c.coefficient(BasisElement::new(2, 3)), ExactScalar::one());

        // Diagonal elements commute.
        assert!(colour_structure(&s, 1, 1, 2, 2).unwrap().is_zero());
    }

    #[test]
    fn flip_table_examples() {
        let s = sig(1, 1, 1, 1);
        let flips = bracket_flip_table(&s);
        assert!(flips.contains(&((1, 3), (4, 1))));
        assert!(flips.contains(&((2, 1), (1, 3))));
        // Degenerate splitting: the colour grading is the gl(m|n) one.
        assert!(bracket_flip_table(&sig(2, 0, 2, 0)).is_empty());
    }

    #[test]
    fn degenerate_structure_equals_super() {
        for s in all_signatures(5) {
            if !s.is_super_degenerate() {
                continue;
            }
            let r = s.rank();
            for i in 1..=r {
                for j in 1..=r {
                    for k in 1..=r {
                        for l in 1..=r {
                            assert_eq!(
                                colour_structure(&s, i, j, k, l).unwrap(),
                                super_structure(&s, i, j, k, l).unwrap(),
                                "{s} ({i},{j},{k},{l})"
                            );
                        }
                    }
                }
            }
        }
    }

    #[test]
    fn first_example_family() {
        // Lifts of E_ij and E_kl with i <= m1, j,k in the first odd
        // block, l in the second even block: the colour bracket is a
        // commutator equal to delta_jk E~il.
        let s = sig(1, 1, 1, 1);
        for rep in [
            defining_rep(&s),
            graded_tensor_square(&defining_rep(&s)).unwrap(),
        ] {
            for i in 1..=s.m1() {
                for j in s.m() + 1..=s.m() + s.n1() {
                    for k in s.m() + 1..=s.m() + s.n1() {
                        for l in s.m1() + 1..=s.m() {
                            assert_eq!(s.pair_degree22(i, j).unwrap().bits(), (1, 0));
                            assert_eq!(s.pair_degree22(k, l).unwrap().bits(), (0, 1));
                            let sign = colour_sign_exponent(&s, i, j, k, l).unwrap();
                            assert_eq!(sign, Degree2::EVEN);
                            let lhs = realise(&rep, &s, i, j)
                                .unwrap()
                                .graded_bracket(&realise(&rep, &s, k, l).unwrap(), sign)
                                .unwrap();
                            let expected = if j == k {
                                realise(&rep, &s, i, l).unwrap()
                            } else {
                                crate::exact::ExactMatrix::zero(rep.dimension(), rep.dimension())
                            };
                            assert_eq!(lhs, expected);
                        }
                    }
                }
            }
        }
    }

    #[test]
    fn second_example_family() {
        // i <= m1, j in the first odd block, k in the second odd block,
        // l <= m1: the bracket is a commutator equal to -delta_il E~kj.
        let s = sig(1, 1, 1, 1);
        for rep in [
            defining_rep(&s),
            graded_tensor_square(&defining_rep(&s)).unwrap(),
        ] {
            for i in 1..=s.m1() {
                for j in s.m() + 1..=s.m() + s.n1() {
                    for k in s.m() + s.n1() + 1..=s.rank() {
                        for l in 1..=s.m1() {
                            let sign = colour_sign_exponent(&s, i, j, k, l).unwrap();
                            assert_eq!(sign, Degree2::EVEN);
                            let lhs = realise(&rep, &s, i, j)
                                .unwrap()
                                .graded_bracket(&realise(&rep, &s, k, l).unwrap(), sign)
                                .unwrap();
                            let expected = if i == l {
                                realise(&rep, &s, k, j).unwrap().neg()
                            } else {
                                crate::exact::ExactMatrix::zero(rep.dimension(), rep.dimension())
                            };
                            assert_eq!(lhs, expected);
                        }
                    }
                }
            }
        }
    }

    #[test]
    fn colour_relations_on_tensor_square() {
        let s = sig(1, 1, 1, 1);
        let rep = graded_tensor_square(&defining_rep(&s)).unwrap();
        let report = verify_colour_relations(&rep, &s).unwrap();
        assert_eq!(report.checked, 256);
        assert!(report.pass());
    }

    #[test]
    fn colour_relations_reject_mismatched_signature() {
        let rep = defining_rep(&sig(1, 1, 1, 1));
        assert!(verify_colour_relations(&rep, &sig(2, 1, 1, 0)).is_err());
    }

    #[test]
    fn corrupted_rep_fails_colour_relations() {
        let s = sig(1, 1, 1, 1);
        let rep = defining_rep(&s).corrupted();
        let report = verify_colour_relations(&rep, &s).unwrap();
        assert!(!report.pass());
    }
}
