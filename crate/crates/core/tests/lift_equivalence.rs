//! The Gelfand-Zetlin sign rule and the Klein dressing are the same
//! map: on the defining module, routing raw Chevalley matrix elements
//! through the sign rule reproduces the dressed generator matrices
//! entry for entry, and the diagonal/Klein data read off the patterns
//! matches the representation. Smoke scale here; the acceptance suite
//! repeats this at full scale.

use zzgl_core::{
    all_signatures, b_matrix, defining_rep, realise, sign_lifted_chevalley_matrix,
    ChevalleyGenerator, DefiningPatternProvider, ExactScalar, GZPattern, MatrixElementProvider,
};

#[test]
fn sign_rule_matches_klein_dressing() {
    for sig in all_signatures(4) {
        let rep = defining_rep(&sig);
        let provider = DefiningPatternProvider::new(sig).unwrap();
        for t in 1..sig.rank() {
            for gen in [ChevalleyGenerator::Raising(t), ChevalleyGenerator::Lowering(t)] {
                let (p, q) = gen.pair();
                let lifted = sign_lifted_chevalley_matrix(&provider, &sig, gen).unwrap();
                let dressed = realise(&rep, &sig, p, q).unwrap();
                assert_eq!(lifted, dressed, "{sig} {gen}");
            }
        }
    }
}

#[test]
fn pattern_accessors_match_representation_data() {
    for sig in all_signatures(4) {
        let rep = defining_rep(&sig);
        for k in 1..=sig.rank() {
            let pattern = GZPattern::defining_basis_pattern(sig, k).unwrap();
            // Cartan eigenvalues from row sums equal the tabulated
            // weights, and the lifted diagonal action coincides.
            assert_eq!(pattern.weight(), rep.weight(k).unwrap(), "{sig} e_{k}");
            for i in 1..=sig.rank() {
                assert_eq!(
                    pattern.colour_diagonal_action(i).unwrap(),
                    pattern.cartan_eigenvalue(i).unwrap()
                );
                let lifted_cartan = realise(&rep, &sig, i, i).unwrap();
                assert_eq!(
                    lifted_cartan.entry(k, k),
                    ExactScalar::from_int(pattern.cartan_eigenvalue(i).unwrap())
                );
            }
            // Klein eigenvalues from row sums equal the B matrices.
            for t in 0..=sig.rank() {
                assert_eq!(
                    ExactScalar::from_int(pattern.b_sign(t).unwrap()),
                    b_matrix(&rep, t).unwrap().entry(k, k),
                    "{sig} e_{k} B_{t}"
                );
            }
        }
    }
}

#[test]
fn provider_diagonal_agrees_with_row_sum_rule() {
    for sig in all_signatures(4) {
        let provider = DefiningPatternProvider::new(sig).unwrap();
        let rep = defining_rep(&sig);
        for v in 1..=provider.dimension() {
            let pattern = provider.pattern(v).unwrap();
            for i in 1..=sig.rank() {
                let sums_diff =
                    pattern.row_sum(i).unwrap() - pattern.row_sum(i - 1).unwrap();
                assert_eq!(
                    ExactScalar::from_int(sums_diff),
                    rep.generator(i, i).unwrap().entry(v, v)
                );
            }
        }
    }
}
