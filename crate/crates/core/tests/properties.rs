use lefschetz_core::artinian::{ArtinianAlgebra, LinearForm};
use lefschetz_core::gr::hilbert_triple_check;
use lefschetz_core::groebner::IdealHandle;
use lefschetz_core::jordan::{csm_decompose, jordan_profile};
use lefschetz_core::linalg::{int, rank_mod_p, Matrix};
use lefschetz_core::poly::{Monomial, MonomialOrder, Polynomial, VariableSet};
use proptest::prelude::*;

fn matrix_strategy(max: usize) -> impl Strategy<Value = Matrix> {
    (1..=max, 1..=max).prop_flat_map(|(r, c)| {
        prop::collection::vec(-4i64..=4, r * c).prop_map(move |v| {
            Matrix::from_rows(
                v.chunks(c)
                    .map(|row| row.iter().map(|&x| int(x)).collect())
                    .collect(),
            )
        })
    })
}

fn poly_strategy(n: usize) -> impl Strategy<Value = Polynomial> {
    prop::collection::vec((prop::collection::vec(0u32..=3, n), -5i64..=5), 0..6).prop_map(
        move |terms| {
            Polynomial::from_terms(
                n,
                terms.into_iter().map(|(e, c)| (Monomial::new(e), int(c))),
            )
        },
    )
}

/// Pure powers plus a few extra homogeneous forms, so the quotient is Artinian.
fn ideal_strategy() -> impl Strategy<Value = IdealHandle> {
    let powers = prop::collection::vec(2u32..=3, 3);
    let extras = prop::collection::vec((prop::collection::vec(0u32..=2, 3), -3i64..=3), 0..4);
    (powers, extras, 2u32..=3).prop_map(|(powers, extras, d)| {
        let mut gens: Vec<Polynomial> = powers
            .iter()
            .enumerate()
            .map(|(i, &e)| Polynomial::monomial(Monomial::var_pow(3, i, e), int(1)))
            .collect();
        let extra = Polynomial::from_terms(
            3,
            extras
                .into_iter()
                .filter(|(e, _)| e.iter().sum::<u32>() == d)
                .map(|(e, c)| (Monomial::new(e), int(c))),
        );
        gens.push(extra);
        IdealHandle::new(VariableSet::new(&["x", "y", "z"]).unwrap(), gens).unwrap()
    })
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(64))]

    #[test]
    fn rank_is_transpose_invariant(m in matrix_strategy(6)) {
        prop_assert_eq!(m.rank(), m.transpose().rank());
    }

    #[test]
    fn rank_nullity(m in matrix_strategy(6)) {
        prop_assert_eq!(m.rank() + m.kernel_basis().len(), m.cols());
        for v in m.kernel_basis() {
            prop_assert!(m.mul_vec(&v).iter().all(|x| *x == int(0)));
        }
    }

    #[test]
    fn inverse_when_full_rank(m in matrix_strategy(5)) {
        if m.rows() == m.cols() {
            match m.inverse() {
                Some(inv) => prop_assert_eq!(m.mul(&inv), Matrix::identity(m.rows())),
                None => prop_assert!(m.rank() < m.rows()),
            }
        }
    }

    #[test]
    fn modular_rank_never_exceeds_rational(m in matrix_strategy(6)) {
        prop_assert!(rank_mod_p(&m, 7).unwrap() <= m.rank());
        prop_assert!(rank_mod_p(&m, 1_048_583).unwrap() <= m.rank());
    }

    #[test]
    fn display_parse_roundtrip(f in poly_strategy(3)) {
        let vars = VariableSet::new(&["x", "y", "z"]).unwrap();
        let text = f.to_string_in(&vars);
        prop_assert_eq!(vars.parse(&text).unwrap(), f);
    }

    #[test]
    fn ring_axioms(f in poly_strategy(3), g in poly_strategy(3), h in poly_strategy(3)) {
        prop_assert_eq!(f.mul(&g), g.mul(&f));
        prop_assert_eq!(f.mul(&g).mul(&h), f.mul(&g.mul(&h)));
        prop_assert_eq!(f.mul(&g.add(&h)), f.mul(&g).add(&f.mul(&h)));
        prop_assert!(f.sub(&f).is_zero());
    }
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(24))]

    #[test]
    fn groebner_basis_is_reduced_and_contains_generators(i in ideal_strategy()) {
        let gb = i.reduced_groebner(MonomialOrder::Grevlex);
        prop_assert!(gb.satisfies_buchberger_criterion());
        prop_assert!(gb.is_reduced());
        for g in i.generators() {
            prop_assert!(gb.normal_form(g).is_zero());
        }
    }

    #[test]
    fn hilbert_functions_agree(i in ideal_strategy(), c in prop::collection::vec(-3i64..=3, 3)) {
        let z = LinearForm::from_integers(&c);
        prop_assume!(!z.is_zero());
        prop_assert!(hilbert_triple_check(&i, &z).unwrap().equal);
    }

    #[test]
    fn jordan_blocks_fill_the_algebra(i in ideal_strategy(), c in prop::collection::vec(-3i64..=3, 3)) {
        let z = LinearForm::from_integers(&c);
        prop_assume!(!z.is_zero());
        let a = ArtinianAlgebra::build(i).unwrap();
        let profile = jordan_profile(&a, &z).unwrap();
        prop_assert_eq!(profile.dim(), a.dim());
        let dec = csm_decompose(&a, &z).unwrap();
        prop_assert_eq!(&dec.tilde_sum(), a.hilbert());
    }
}
