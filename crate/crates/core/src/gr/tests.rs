use super::*;
use crate::lefschetz::quotient_dim;
use crate::poly::{power_sum, VariableSet};

fn alg(vars: &[&str], gens: &[&str]) -> ArtinianAlgebra {
    ArtinianAlgebra::from_strings(vars, gens).unwrap()
}

fn form(a: &ArtinianAlgebra, text: &str) -> LinearForm {
    LinearForm::parse(a.vars(), text).unwrap()
}

#[test]
fn normalization_examples() {
    let a = alg(&["x", "y", "z"], &["x^2", "y^2", "z^2"]);
    let (_, ch) = normalize_z(a.ideal(), &form(&a, "z")).unwrap();
    assert!(ch.is_identity());

    let (_, ch) = normalize_z(a.ideal(), &form(&a, "x")).unwrap();
    let perm = Matrix::from_i64(&[&[0, 0, 1], &[0, 1, 0], &[1, 0, 0]]);
    assert_eq!(ch.forward, perm);
    assert_eq!(ch.forward.mul(&ch.inverse), Matrix::identity(3));

    let b = alg(&["x", "y"], &["x^2", "y^2"]);
    let (j, ch) = normalize_z(b.ideal(), &form(&b, "x + y")).unwrap();
    let expected = IdealHandle::parse(b.vars(), &["x^2", "(y - x)^2"]).unwrap();
    assert!(j.equals(&expected).unwrap());
    assert_eq!(
        ch.apply_form(&form(&b, "x + y")),
        LinearForm::variable(2, 1)
    );
    assert_eq!(ArtinianAlgebra::build(j).unwrap().dims(), b.dims());

    let c = alg(&["x", "y", "z"], &["x^2", "y^2", "z^2"]);
    let g = form(&c, "2*x - 3*y");
    let (_, ch) = normalize_z(c.ideal(), &g).unwrap();
    assert_eq!(ch.apply_form(&g), LinearForm::variable(3, 2));
    assert_eq!(ch.forward.mul(&ch.inverse), Matrix::identity(3));
    assert!(matches!(
        normalize_z(c.ideal(), &LinearForm::from_integers(&[0, 0, 0])),
        Err(Error::ZeroLinearForm)
    ));
}

#[test]
fn in_prime_examples() {
    let v = VariableSet::new(&["x", "y", "z"]).unwrap();
    let mono = IdealHandle::parse(&v, &["x^2", "x*y", "y^3", "z^2"]).unwrap();
    assert!(in_prime_ideal(&mono).unwrap().equals(&mono).unwrap());

    let i = IdealHandle::parse(&v, &["x^2", "(x+y)^2", "(x+y+z)^2"]).unwrap();
    let expected = IdealHandle::parse(
        &v,
        &["x^2", "2*x*y + y^2", "x*z + y*z", "y^3", "y^2*z", "z^3"],
    )
    .unwrap();
    assert!(in_prime_ideal(&i).unwrap().equals(&expected).unwrap());

    let f = v.parse("x*y + y*z + z^2").unwrap();
    let p = IdealHandle::new(v.clone(), vec![f.clone()]).unwrap();
    let q = IdealHandle::new(v.clone(), vec![f.in_prime_part().unwrap()]).unwrap();
    assert!(in_prime_ideal(&p).unwrap().equals(&q).unwrap());
}

#[test]
fn graded_algebra_examples() {
    let a = alg(&["x", "y"], &["x^2", "y^3"]);
    let gr = gr_algebra(&a, &form(&a, "y")).unwrap();
    assert!(gr.algebra.ideal().equals(a.ideal()).unwrap());

    let b = alg(&["x", "y"], &["x^2", "y^2"]);
    assert_eq!(
        gr_algebra(&b, &form(&b, "x + y")).unwrap().algebra.dims(),
        vec![1, 2, 1]
    );

    let r = alg(&["x", "y", "z"], &["x^2", "(x+y)^2", "(x+y+z)^2"]);
    let gr = gr_algebra(&r, &form(&r, "z")).unwrap();
    let expected = IdealHandle::parse(
        r.vars(),
        &["x^2", "2*x*y + y^2", "x*z + y*z", "y^3", "y^2*z", "z^3"],
    )
    .unwrap();
    assert!(gr.algebra.ideal().equals(&expected).unwrap());
    assert!(find_witness(&gr.algebra, Property::Slp, &SearchParams::default()).is_witness());
}

#[test]
fn remark37_examples() {
    let r = alg(&["x", "y", "z"], &["x^2", "(x+y)^2", "(x+y+z)^2"]);
    for z in ["z", "x", "x + 2*y - z"] {
        let rep = verify_remark37(&r, &form(&r, z)).unwrap();
        assert!(rep.equal, "{z}: {rep:?}");
    }
    let m = alg(&["x", "y"], &["x^2", "x*y", "y^3"]);
    assert!(verify_remark37(&m, &form(&m, "y")).unwrap().equal);
}

#[test]
fn theorem1_examples() {
    let r = alg(&["x", "y", "z"], &["x^2", "(x+y)^2", "(x+y+z)^2"]);
    let rep = verify_theorem1(&r, &form(&r, "z"), &SearchParams::default()).unwrap();
    assert!(rep
        .comparisons
        .iter()
        .all(|c| c.agreement == Agreement::Consistent));
    assert_eq!(rep.comparisons[1].algebra, "witness");

    let m = alg(&["x", "y"], &["x^2", "y^3"]);
    let rep = verify_theorem1(&m, &form(&m, "x"), &SearchParams::default()).unwrap();
    assert!(!rep.has_contradiction());
}

#[test]
fn hilbert_triples() {
    let v = VariableSet::new(&["x", "y", "z"]).unwrap();
    let i = IdealHandle::parse(&v, &["x^2", "(x+y)^2", "(x+y+z)^2"]).unwrap();
    let z = LinearForm::variable(3, 2);
    let t = hilbert_triple_check(&i, &z).unwrap();
    assert!(t.equal);
    assert_eq!(t.algebra, vec![1, 3, 3, 1]);

    let ps = IdealHandle::new(v.clone(), (1..=3).map(|d| power_sum(3, d)).collect()).unwrap();
    assert!(hilbert_triple_check(&ps, &z).unwrap().equal);
    assert!(
        hilbert_triple_check(&ps, &LinearForm::from_integers(&[1, -1, 2]))
            .unwrap()
            .equal
    );
}

#[test]
fn quotient_dimension_does_not_drop_in_gr() {
    let r = alg(&["x", "y", "z"], &["x^2 + y*z", "y^2 - x*z", "z^3"]);
    let z = form(&r, "x + z");
    let gr = gr_algebra(&r, &z).unwrap();
    for g in crate::lefschetz::candidates(3, &SearchParams::default()) {
        let g_star = gr.initial_form(&g);
        assert!(quotient_dim(&r, &g) <= quotient_dim(&gr.algebra, &g_star));
    }
}
