//! Worked examples, checked through the public API.

use num_bigint::BigInt;
use torquo::action::parse_action;
use torquo::classify::{classify, classify_rank_one, is_homology_sphere, join_decomposition, Verdict};
use torquo::matroid::ElementSet;
use torquo::topology::{
    convolution_check, is_simply_connected, poincare_quotient, poincare_singular, singular_strata, singular_wedge,
    ReducedHomology,
};
use torquo::tutte::{tutte, tutte_at, tutte_oracle, BivariatePolynomial, UnivariatePolynomial};
use torquo::{IntMatrix, IsotropyGroup, Matroid, RepresentedMatroid, TorusAction};

fn action(text: &str) -> TorusAction {
    parse_action(text).unwrap()
}

fn matroid(text: &str) -> RepresentedMatroid {
    RepresentedMatroid::from_action(&action(text)).unwrap()
}

fn set(labels: &[usize]) -> ElementSet {
    labels.iter().copied().collect()
}

fn t(coeffs: &[i64]) -> UnivariatePolynomial {
    UnivariatePolynomial::from_coefficients(coeffs)
}

fn xy(terms: &[(u32, u32, i64)]) -> BivariatePolynomial {
    BivariatePolynomial::from_terms(terms.iter().map(|&(a, b, c)| ((a, b), BigInt::from(c))))
}

const U23: &str = "1 0 1\n0 1 1";

#[test]
fn effectiveness_and_isotropy() {
    assert!(action("1 1").is_effective());
    let e = action("2 4").effectiveness();
    assert!(!e.effective);
    assert_eq!(e.kernel.to_string(), "Z_2");
    assert_eq!(action("2 0\n0 3").effectiveness().kernel.to_string(), "Z_6");

    assert_eq!(action("3 1 1").isotropy_of_circle(0).unwrap().to_string(), "Z_3");
    assert_eq!(action(U23).isotropy_of_circle(2).unwrap().to_string(), "T^1");
    assert_eq!(action("0 1").isotropy_of_circle(0).unwrap(), IsotropyGroup::torus(1));
    assert!(action(U23).isotropy_of_subset(&[0, 1, 2]).unwrap().is_trivial());
    assert!(action("3 1 1").isotropy_of_subset(&[1]).unwrap().is_trivial());
    assert_eq!(action("2 0\n0 3").isotropy_of_subset(&[0, 1]).unwrap().to_string(), "Z_6");
}

#[test]
fn matroid_basics() {
    let u23 = matroid(U23);
    assert_eq!(u23.full_rank(), 2);
    assert_eq!(u23.rank_of(ElementSet::EMPTY), 0);
    assert_eq!(matroid("0 1").rank_of(set(&[0])), 0);

    assert_eq!(matroid("0 1 1").loops(), set(&[0]));
    assert!(matroid("0 1 1").coloops().is_empty());
    assert_eq!(matroid("1 0\n0 1").coloops(), set(&[0, 1]));
    assert!(u23.loops().is_empty() && u23.coloops().is_empty());

    assert_eq!(u23.delete(2).unwrap().coloops(), set(&[0, 1]));
    let c = u23.contract(2).unwrap();
    assert_eq!((c.full_rank(), c.size()), (1, 2));
    assert_eq!(c.rank_of(set(&[0, 1])), 1);

    assert_eq!(u23.closure(&[0]).unwrap().elements, set(&[0]));
    assert_eq!(matroid("0 1 1").closure(&[]).unwrap().elements, set(&[0]));
    assert_eq!(matroid("1 1").closure(&[0]).unwrap().elements, set(&[0, 1]));

    assert_eq!(u23.circuits(), vec![set(&[0, 1, 2])]);
    assert_eq!(matroid("0 1").circuits(), vec![set(&[0])]);
    assert!(matroid("1 0\n0 1").circuits().is_empty());

    assert_eq!(matroid("0 1 1").components(), vec![set(&[0]), set(&[1, 2])]);
    assert_eq!(u23.components().len(), 1);
    assert_eq!(matroid("1 0\n0 1").components(), vec![set(&[0]), set(&[1])]);
}

#[test]
fn lattices_and_mobius() {
    let l = matroid(U23).flat_lattice();
    assert_eq!(l.len(), 5);
    assert_eq!(l.mobius(), 2);
    assert_eq!(matroid("1").flat_lattice().len(), 2);
    assert_eq!(matroid("1").mobius(), -1);
    assert_eq!(matroid("1 0\n0 1").mobius(), 1);
    assert_eq!(matroid("1 1").mobius(), -1);

    assert_eq!(matroid(U23).order_complex_euler().unwrap(), 2);
    assert_eq!(matroid("1 1").order_complex_euler().unwrap(), -1);
    assert_eq!(matroid("1 0\n0 1").order_complex_euler().unwrap(), 1);
}

#[test]
fn tutte_polynomials() {
    let u23 = xy(&[(2, 0, 1), (1, 0, 1), (0, 1, 1)]);
    assert_eq!(tutte(&matroid(U23)), u23);
    assert_eq!(tutte(&matroid("0")), xy(&[(0, 1, 1)]));
    assert_eq!(tutte(&matroid("1")), xy(&[(1, 0, 1)]));
    assert_eq!(tutte(&matroid("1 1 1")), xy(&[(1, 0, 1), (0, 1, 1), (0, 2, 1)]));
    assert_eq!(tutte_oracle(&matroid("1 1")).unwrap(), xy(&[(1, 0, 1), (0, 1, 1)]));
    assert_eq!(tutte_oracle(&matroid("1 0\n0 1")).unwrap(), xy(&[(2, 0, 1)]));
    let empty = RepresentedMatroid::from_matrix(IntMatrix::zeros(1, 0)).unwrap();
    assert_eq!(tutte_oracle(&empty).unwrap(), BivariatePolynomial::one());

    assert_eq!(tutte_at(&matroid(U23), 1, 0), BigInt::from(2));
    assert_eq!(tutte_at(&matroid("0"), 1, 0), BigInt::from(0));
    assert_eq!(tutte_at(&matroid("1 0\n0 1"), 1, 0), BigInt::from(1));

    let x_plus_y = xy(&[(1, 0, 1), (0, 1, 1)]);
    assert_eq!(x_plus_y.substitute_x(&BigInt::from(0)).substitute_t_squared(), t(&[0, 0, 1]));
    assert_eq!(u23.substitute_x(&BigInt::from(1)), t(&[2, 1]));
    assert!(xy(&[(2, 0, 1)]).substitute_x(&BigInt::from(0)).is_zero());
}

#[test]
fn quotient_homology() {
    assert_eq!(poincare_quotient(&action("2 3")).unwrap().poincare, t(&[0, 0, 1]));
    assert_eq!(poincare_quotient(&action("1 1 1 1")).unwrap().poincare, t(&[0, 0, 1, 0, 1, 0, 1]));
    assert!(poincare_quotient(&action("1 0\n0 1")).unwrap().poincare.is_zero());

    assert!(is_simply_connected(&action("1 2 3")));
    assert!(!is_simply_connected(&TorusAction::trivial(1).unwrap()));
    assert!(is_simply_connected(&action("5")));
}

#[test]
fn singular_sets() {
    let p = |s: &str| poincare_singular(&action(s)).unwrap();
    assert_eq!(p(U23), ReducedHomology::Polynomial(t(&[2])));
    assert_eq!(p("1 1"), ReducedHomology::Empty);
    assert_eq!(p("1 0\n0 1"), ReducedHomology::Polynomial(t(&[1])));

    let w = singular_wedge(&action(U23)).unwrap();
    assert_eq!(w[0].flat.elements, ElementSet::EMPTY);
    assert_eq!(w[0].multiplicity, BigInt::from(2));
    assert_eq!(w[0].sphere_dim, 0);
    assert!(w[1..].iter().all(|s| s.sphere_dim == -1 && s.flat.rank == 1));

    let w = singular_wedge(&action("1 0\n0 1")).unwrap();
    assert_eq!(w.len(), 3);
    assert_eq!(w[0].multiplicity, BigInt::from(1));
    assert!(w[1..].iter().all(|s| s.multiplicity == BigInt::from(1) && s.sphere_dim == -1));

    let w = singular_wedge(&action("1 1")).unwrap();
    assert_eq!(w.len(), 1);
    assert_eq!(w[0].sphere_dim, -1);

    let s = singular_strata(&action(U23)).unwrap();
    assert_eq!(s.len(), 3);
    assert!(s.iter().all(|s| s.dim == 0));
    assert!(singular_strata(&action("1 1")).unwrap().is_empty());
    assert_eq!(singular_strata(&action("1 0\n0 1")).unwrap().len(), 2);

    assert!(convolution_check(&matroid(U23)));
    assert!(convolution_check(&matroid("0")));
}

#[test]
fn classifications() {
    let f = join_decomposition(&action("0 1 1")).unwrap();
    assert_eq!(f.len(), 2);
    assert_eq!(f[0].columns, set(&[0]));
    assert_eq!(join_decomposition(&action("1 1 0 0\n0 0 1 1")).unwrap().len(), 2);
    assert_eq!(join_decomposition(&action(U23)).unwrap().len(), 1);

    assert!(is_homology_sphere(&action("2 3")).unwrap());
    assert!(is_homology_sphere(&action(U23)).unwrap());
    assert!(!is_homology_sphere(&action("1 1 1")).unwrap());

    let w = |v: &[i64]| v.iter().map(|&x| BigInt::from(x)).collect::<Vec<_>>();
    assert_eq!(classify_rank_one(&w(&[2, 3])).unwrap().verdict, Verdict::Sphere(2));
    assert_eq!(classify_rank_one(&w(&[3, 1, 1])).unwrap().verdict, Verdict::NotManifold);
    assert_eq!(classify_rank_one(&w(&[5, 5, 5, 5, 1])).unwrap().verdict, Verdict::ComplexProjective(4));

    assert_eq!(classify(&action("0 1 1")).unwrap().verdict, Verdict::Sphere(4));
    assert_eq!(classify(&action("1 0\n0 1")).unwrap().verdict, Verdict::Cone);
    let c = classify(&action("3 1 1")).unwrap();
    assert_eq!(c.verdict, Verdict::NotManifold);
    assert_eq!(c.homology.poincare, t(&[0, 0, 1, 0, 1]));
}

// Values computed by an independent rational-arithmetic subset expansion.
#[test]
fn tutte_reference_values() {
    let u24 = matroid("1 1 1 1\n0 1 2 3");
    assert_eq!(tutte(&u24), xy(&[(2, 0, 1), (1, 0, 2), (0, 1, 2), (0, 2, 1)]));
    let k4 = matroid("1 0 0 1 1 0\n0 1 0 -1 0 1\n0 0 1 0 -1 -1");
    assert_eq!(
        tutte(&k4),
        xy(&[(3, 0, 1), (2, 0, 3), (1, 0, 2), (1, 1, 4), (0, 1, 2), (0, 2, 3), (0, 3, 1)])
    );
    let mixed = matroid("1 2 3 4 5\n0 1 1 2 3");
    assert_eq!(
        tutte(&mixed),
        xy(&[(2, 0, 1), (1, 0, 2), (1, 1, 1), (0, 1, 2), (0, 2, 2), (0, 3, 1)])
    );
}
