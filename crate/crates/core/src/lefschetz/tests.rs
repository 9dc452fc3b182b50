use super::*;

fn alg(vars: &[&str], gens: &[&str]) -> ArtinianAlgebra {
    ArtinianAlgebra::from_strings(vars, gens).unwrap()
}

fn remark_initial() -> ArtinianAlgebra {
    alg(
        &["x", "y", "z"],
        &["x^2", "x*y", "x*z", "y^3", "y^2*z", "z^3"],
    )
}

#[test]
fn stats_examples() {
    let s = stats(&HilbertSeries::from_dims(&[1, 3, 3, 1]));
    assert_eq!((s.sperner, s.cosperner), (3, 5));
    assert_eq!(s.sperner_vector, Some(vec![3, 6, 7]));

    for d in 1..6 {
        let s = stats(&HilbertSeries::truncated(d));
        assert_eq!((s.sperner, s.cosperner), (1, d - 1));
        let expected: Vec<usize> = (1..d).map(|k| k.min(d)).collect();
        assert_eq!(s.sperner_vector, Some(expected));
    }

    let s = stats(&HilbertSeries::from_dims(&[1, 2, 1]));
    assert_eq!(s.sperner_vector, Some(vec![2, 3]));
    assert!(stats(&HilbertSeries::from_dims(&[1, 3, 2]))
        .sperner_vector
        .is_none());
}

#[test]
fn wlp_examples() {
    for d in 1..6 {
        let a = ArtinianAlgebra::from_strings(&["x"], &[format!("x^{d}")]).unwrap();
        assert!(check_wlp(&a, &LinearForm::variable(1, 0)).is_witness());
        assert!(find_witness(&a, Property::Wlp, &SearchParams::default()).is_witness());
    }
    let a = alg(&["x", "y"], &["x^2", "x*y", "y^2"]);
    assert!(check_wlp(&a, &LinearForm::variable(2, 0)).is_witness());

    let b = remark_initial();
    let v = check_wlp(&b, &LinearForm::all_ones(3));
    assert!(!v.is_witness());
    let first = &v.report[1];
    assert_eq!((first.source_dim, first.target_dim), (3, 3));
    assert!(first.rank <= 2);
}

#[test]
fn slp_examples() {
    let a = alg(&["x", "y"], &["x^2", "y^2"]);
    let v = check_slp(&a, &LinearForm::all_ones(2));
    assert!(v.is_witness());
    assert_eq!(v.report[0].power, 2);
    assert!(!check_slp(&a, &LinearForm::variable(2, 0)).is_witness());

    let r = alg(&["x", "y", "z"], &["x^2", "(x+y)^2", "(x+y+z)^2"]);
    let v = find_witness(&r, Property::Slp, &SearchParams::default());
    assert!(v.is_witness());
}

#[test]
fn socle_certificate_for_initial_ideal() {
    let b = remark_initial();
    let v = find_witness(&b, Property::Slp, &SearchParams::default());
    match &v.status {
        Status::DefinitelyNo {
            certificate:
                Certificate::SocleObstruction {
                    degree, element, ..
                },
        } => {
            assert_eq!(*degree, 1);
            assert_eq!(element, "x");
        }
        other => panic!("unexpected {other:?}"),
    }
    let w = find_witness(&b, Property::Wlp, &SearchParams::default());
    assert!(w.is_definitely_no());
}

#[test]
fn asymmetric_hilbert_certificate() {
    let a = alg(&["x", "y"], &["x^2", "x*y", "y^3"]);
    assert_eq!(a.dims(), vec![1, 2, 1]);
    let c = alg(&["x", "y"], &["x^2", "x*y", "y^4"]);
    assert_eq!(c.dims(), vec![1, 2, 1, 1]);
    let v = find_witness(&c, Property::Slp, &SearchParams::default());
    assert!(matches!(
        v.status,
        Status::DefinitelyNo {
            certificate: Certificate::AsymmetricHilbert { degree: 1, .. }
        }
    ));
}

#[test]
fn complete_intersection_family_has_slp() {
    // (f_1, f_2, g^3) with quadrics f_1, f_2 and a linear form g
    let a = alg(
        &["x", "y", "z"],
        &["x^2 + y*z", "y^2 + x*z", "(x + y + z)^3"],
    );
    assert_eq!(a.dim(), 12);
    assert!(find_witness(&a, Property::Slp, &SearchParams::default()).is_witness());
}

#[test]
fn candidate_order_is_deterministic() {
    let p = SearchParams::default();
    let c = candidates(3, &p);
    assert_eq!(c.len(), 3 + 1 + 8);
    assert_eq!(c[0], LinearForm::variable(3, 0));
    assert_eq!(c[3], LinearForm::all_ones(3));
    assert_eq!(c, candidates(3, &p));
    let other = SearchParams {
        seed: 7,
        ..p.clone()
    };
    assert_ne!(random_forms(3, &p), random_forms(3, &other));
    for g in random_forms(3, &p) {
        for c in g.coeffs() {
            assert!(
                *c >= Scalar::from_integer(1.into()) && *c <= Scalar::from_integer(1000.into())
            );
        }
    }
}

#[test]
fn modular_screen_never_upgrades() {
    let r = alg(&["x", "y", "z"], &["x^2", "(x+y)^2", "(x+y+z)^2"]);
    let params = SearchParams {
        modulus: Some(1_000_003),
        ..SearchParams::default()
    };
    let v = find_witness(&r, Property::Slp, &params);
    let g = v.witness().unwrap();
    assert!(check_slp(&r, g).is_witness());
    assert_eq!(v.modular_screen, Some(1_000_003));
}

#[test]
fn tensor_criterion() {
    let a = alg(&["x"], &["x^3"]);
    let rep = verify_tensor_criterion(&a, 3, &SearchParams::default()).unwrap();
    assert!(rep.slp.is_witness() && rep.all_wlp_witnessed && rep.consistent);

    let b = alg(&["x", "y"], &["x^2", "y^2"]);
    let rep = verify_tensor_criterion(&b, 4, &SearchParams::default()).unwrap();
    assert!(rep.all_wlp_witnessed && rep.consistent);

    let c = remark_initial();
    let rep = verify_tensor_criterion(&c, 4, &SearchParams::default()).unwrap();
    assert!(!rep.slp.is_witness());
    assert!(!rep.all_wlp_witnessed);
    assert!(rep.consistent);

    let d = alg(&["x", "y"], &["x^2", "x*y", "y^4"]);
    assert!(matches!(
        verify_tensor_criterion(&d, 2, &SearchParams::default()),
        Err(Error::NonSymmetricHilbert)
    ));
}

#[test]
fn sperner_bounds_hold_for_sampled_forms() {
    let a = alg(
        &["x", "y", "z"],
        &["x^2 + y*z", "y^3 - x*z^2", "z^3 + x*y^2", "x*y*z"],
    );
    let st = stats(a.hilbert());
    let params = SearchParams {
        trials: 6,
        seed: 11,
        ..SearchParams::default()
    };
    for g in candidates(3, &params) {
        assert!(quotient_dim(&a, &g) >= st.sperner);
        let wlp = check_wlp(&a, &g).is_witness();
        let rank: usize = a.linear_maps(&g).iter().map(Matrix::rank).sum();
        assert_eq!(wlp, rank == st.cosperner);
    }
}
