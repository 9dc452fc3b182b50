use super::*;
use crate::poly::{elementary_symmetric, power_sum};

fn ring(names: &[&str]) -> VariableSet {
    VariableSet::new(names).unwrap()
}

fn ideal(vars: &VariableSet, gens: &[&str]) -> IdealHandle {
    IdealHandle::parse(vars, gens).unwrap()
}

#[test]
fn principal_linear_ideal() {
    let v = ring(&["x", "y"]);
    let i = ideal(&v, &["x - y"]);
    assert_eq!(i.basis_strings(), vec!["x - y"]);
    let j = ideal(&v, &["3*x^2 - 6*x*y"]);
    assert_eq!(j.basis_strings(), vec!["x^2 - 2*x*y"]);
}

#[test]
fn initial_ideal_of_three_squares() {
    let v = ring(&["x", "y", "z"]);
    let i = ideal(&v, &["x^2", "(x+y)^2", "(x+y+z)^2"]);
    let gb = i.grevlex();
    assert!(gb.satisfies_buchberger_criterion());
    assert!(gb.is_reduced());
    let lt = i.leading_term_ideal(MonomialOrder::Grevlex);
    let expected = ideal(&v, &["x^2", "x*y", "x*z", "y^3", "y^2*z", "z^3"]);
    assert!(lt.equals(&expected).unwrap());
    let mut lms: Vec<String> = gb
        .leading_monomials()
        .iter()
        .map(|m| Polynomial::monomial(m.clone(), Scalar::from_integer(1.into())).to_string_in(&v))
        .collect();
    lms.sort();
    assert_eq!(lms, vec!["x*y", "x*z", "x^2", "y^2*z", "y^3", "z^3"]);
}

#[test]
fn normal_form_examples() {
    let v = ring(&["x", "y"]);
    let i = ideal(&v, &["x^2"]);
    let p = |s: &str| v.parse(s).unwrap();
    assert!(i.normal_form(&p("x^2*y")).is_zero());
    assert_eq!(i.normal_form(&Polynomial::one(2)), Polynomial::one(2));
    assert!(i.normal_form(&p("x^2 + 5*x^3*y")).is_zero());
    // linear and idempotent
    let f = p("x^3 + x*y + y^2");
    let g = p("x^2*y + 2*x*y");
    let nf = |q: &Polynomial| i.normal_form(q);
    assert_eq!(nf(&f.add(&g)), nf(&f).add(&nf(&g)));
    assert_eq!(nf(&nf(&f)), nf(&f));
}

#[test]
fn intersection_examples() {
    let v = ring(&["x", "y"]);
    let x = ideal(&v, &["x"]);
    let y = ideal(&v, &["y"]);
    assert!(x
        .intersection(&y)
        .unwrap()
        .equals(&ideal(&v, &["x*y"]))
        .unwrap());
    let i = ideal(&v, &["x^2", "x*y^2", "y^4"]);
    assert!(i.intersection(&i).unwrap().equals(&i).unwrap());
    let x2 = ideal(&v, &["x^2"]);
    assert!(x2.intersection(&x).unwrap().equals(&x2).unwrap());
}

#[test]
fn colon_examples() {
    let v = ring(&["x", "y"]);
    let i = ideal(&v, &["x^3", "y^4"]);
    let y = v.parse("y").unwrap();
    let c = i.colon_power(&y, 2).unwrap();
    assert!(c.equals(&ideal(&v, &["x^3", "y^2"])).unwrap());
    assert_eq!(c.minimal_generators(), vec![(2, 1), (3, 1)]);
    assert!(i.colon(&Polynomial::one(2)).unwrap().equals(&i).unwrap());
    assert!(i.colon_power(&y, 4).unwrap().is_unit());
}

#[test]
fn power_sum_colon_by_z() {
    let v = ring(&["x", "y", "z"]);
    let gens: Vec<Polynomial> = (1..=3).map(|d| power_sum(3, d)).collect();
    let i = IdealHandle::new(v.clone(), gens).unwrap();
    let z = v.parse("z").unwrap();
    let colon = i.colon(&z).unwrap();
    let f = v.parse("(x-z)*(y-z)").unwrap();
    let expected = IdealHandle::new(v.clone(), vec![f, power_sum(3, 1), power_sum(3, 2)]).unwrap();
    assert!(colon.equals(&expected).unwrap());
    assert_eq!(colon.minimal_generator_count(), 3);
}

#[test]
fn symmetric_ideal_rewrite() {
    // (f_1, f_2, f_3) = (f_1, f_2, z^6) with f_i = e_i(x^2, y^2, z^2)
    let v = ring(&["x", "y", "z"]);
    let f = |i| elementary_symmetric(3, i, 2).unwrap();
    let i = IdealHandle::new(v.clone(), vec![f(1), f(2), f(3)]).unwrap();
    let j = IdealHandle::new(v.clone(), vec![f(1), f(2), v.parse("z^6").unwrap()]).unwrap();
    assert!(i.equals(&j).unwrap());
}

#[test]
fn equality_membership_sum() {
    let v = ring(&["x", "y"]);
    assert!(ideal(&v, &["x", "y"])
        .equals(&ideal(&v, &["x+y", "y"]))
        .unwrap());
    assert!(ideal(&v, &["x"])
        .contains(&v.parse("x^2+x*y").unwrap())
        .unwrap());
    assert!(!ideal(&v, &["x"])
        .contains(&v.parse("y^2").unwrap())
        .unwrap());
    let s = ideal(&v, &["x^2"]).sum(&ideal(&v, &["y"])).unwrap();
    assert!(s.equals(&ideal(&v, &["x^2", "y"])).unwrap());
}

#[test]
fn minimal_generator_examples() {
    let v = ring(&["x", "y"]);
    assert_eq!(
        ideal(&v, &["x^2", "x*y", "x^2+x*y"]).minimal_generators(),
        vec![(2, 2)]
    );
    assert_eq!(
        ideal(&v, &["x", "x*y", "y^3"]).minimal_generators(),
        vec![(1, 1), (3, 1)]
    );
    assert_eq!(IdealHandle::unit(v).minimal_generators(), vec![(0, 1)]);
}

#[test]
fn leading_term_ideal_examples() {
    let v = ring(&["x", "y"]);
    let mono = ideal(&v, &["x^2", "x*y^3"]);
    assert!(mono
        .leading_term_ideal(MonomialOrder::Grevlex)
        .equals(&mono)
        .unwrap());
    let lin = ideal(&v, &["x+y"]);
    assert!(lin
        .leading_term_ideal(MonomialOrder::Grevlex)
        .equals(&ideal(&v, &["x"]))
        .unwrap());
}

#[test]
fn rejects_non_homogeneous_generators() {
    let v = ring(&["x", "y"]);
    assert!(matches!(
        IdealHandle::parse(&v, &["x^2 + y"]),
        Err(Error::NonHomogeneousInput(_))
    ));
}

#[test]
fn colon_agrees_with_membership_oracle() {
    let v = ring(&["x", "y", "z"]);
    let cases: [(&[&str], &str); 3] = [
        (&["x^2 + y*z", "y^2 - x*z", "z^3"], "x + z"),
        (&["x^2", "y^3", "z^2", "x*y - y*z"], "y"),
        (&["x^3 - y^2*z", "x*y*z", "z^3 + y^3", "x^4"], "x - y + 2*z"),
    ];
    for (gens, f) in cases {
        let i = ideal(&v, gens);
        let f = v.parse(f).unwrap();
        let colon = i.colon(&f).unwrap();
        for d in 0..=4 {
            for m in monomials_of_degree(3, d) {
                let g = Polynomial::monomial(m, Scalar::from_integer(1.into()));
                assert_eq!(
                    colon.contains(&g).unwrap(),
                    i.contains(&g.mul(&f)).unwrap(),
                    "monomial {g:?}"
                );
            }
        }
        for g in colon.generators() {
            assert!(i.contains(&g.mul(&f)).unwrap());
        }
    }
}
