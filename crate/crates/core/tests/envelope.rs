use std::sync::OnceLock;

use proptest::prelude::*;
use triplex::envelope::{Element, EnvelopingAlgebra};
use triplex::hopf::{Hopf, TensorElement};
use triplex::lts::catalog;
use triplex::{Error, Scalar, Subspace};

fn s2_6() -> &'static EnvelopingAlgebra {
    static ALG: OnceLock<EnvelopingAlgebra> = OnceLock::new();
    ALG.get_or_init(|| EnvelopingAlgebra::build(&catalog::s2(), 6).unwrap())
}

fn sl2_4() -> &'static EnvelopingAlgebra {
    static ALG: OnceLock<EnvelopingAlgebra> = OnceLock::new();
    ALG.get_or_init(|| EnvelopingAlgebra::build(&catalog::sl2_lts(), 4).unwrap())
}

/// Elements supported in degrees `lo..=hi` of `alg`.
fn element(alg: &'static EnvelopingAlgebra, lo: usize, hi: usize) -> impl Strategy<Value = Element> {
    let range = alg.degree_range(lo).start..alg.up_to_degree(hi).end;
    prop::collection::vec((range, -3i64..=3), 1..5)
        .prop_map(|ts| Element::from_terms(ts.into_iter().map(|(i, c)| (i, Scalar::from_int(c)))))
}

fn deg(alg: &EnvelopingAlgebra, x: &Element) -> usize {
    alg.degree(x).unwrap_or(0)
}

#[test]
fn pbw_dimensions() {
    assert_eq!(s2_6().quotient_dims(), &[1, 2, 3, 4, 5, 6, 7]);
    assert_eq!(s2_6().nf_count(), 28);
    assert_eq!(sl2_4().quotient_dims(), &[1, 3, 6, 10, 15]);
    assert_eq!(sl2_4().nf_count(), 35);
    let a = EnvelopingAlgebra::build(&catalog::abelian(3), 3).unwrap();
    assert_eq!(a.quotient_dims(), &[1, 3, 6, 10]);
}

#[test]
fn size_guard_and_bad_input() {
    assert!(matches!(EnvelopingAlgebra::build_with_limit(&catalog::s2(), 6, 100), Err(Error::SizeGuard { .. })));
    assert!(EnvelopingAlgebra::build(&catalog::s2(), 0).is_err());
}

#[test]
fn generators_commute_and_cohere() {
    for alg in [s2_6(), sl2_4()] {
        assert!(alg.check_commuting_generators().unwrap());
        assert!(alg.check_triple_coherence().unwrap());
    }
}

#[test]
fn nucleus_exhaustive_s2() {
    let alg = EnvelopingAlgebra::build(&catalog::s2(), 5).unwrap();
    for a in 0..2 {
        for x in alg.up_to_degree(4) {
            for y in alg.up_to_degree(4 - alg.nf_degree(x)) {
                assert!(alg.check_nucleus(a, &Element::basis(x), &Element::basis(y)).unwrap());
            }
        }
    }
}

#[test]
fn primitives_are_t() {
    let h = Hopf::new(s2_6()).unwrap();
    let t = Subspace::coordinate(s2_6().nf_count(), s2_6().degree_range(1)).unwrap();
    for k in 2..=6 {
        assert_eq!(h.primitives(k).unwrap(), t, "k = {k}");
    }
    let sl2 = Hopf::new(sl2_4()).unwrap();
    assert_eq!(sl2.primitives(4).unwrap().dim(), 3);
    let line = EnvelopingAlgebra::build(&catalog::abelian(1), 3).unwrap();
    assert_eq!(Hopf::new(&line).unwrap().primitives(3).unwrap().dim(), 1);
}

#[test]
fn sign_map() {
    let alg = s2_6();
    let h = Hopf::new(alg).unwrap();
    for i in alg.up_to_degree(6) {
        let x = Element::basis(i);
        assert_eq!(h.s_map(&h.s_map(&x)), x);
        assert_eq!(h.counit(&h.s_map(&x)), h.counit(&x));
    }
    assert_eq!(h.s_map(&Element::one()), Element::one());
}

#[test]
fn augmentation_closures_stay_inside() {
    let alg = EnvelopingAlgebra::build(&catalog::s2(), 5).unwrap();
    let aug = alg.augmentation_ideal();
    for i in alg.up_to_degree(3).skip(1) {
        let c = alg.right_ideal_closure(&[Element::basis(i)]).unwrap();
        assert!(aug.contains(&c.subspace).unwrap());
    }
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(48))]

    #[test]
    fn nucleus_on_random_elements(x in element(s2_6(), 0, 3), y in element(s2_6(), 0, 2), a in 0usize..2) {
        prop_assert!(s2_6().check_nucleus(a, &x, &y).unwrap());
    }

    #[test]
    fn sign_is_multiplicative(x in element(s2_6(), 0, 3), y in element(s2_6(), 0, 3)) {
        let alg = s2_6();
        let h = Hopf::new(alg).unwrap();
        prop_assert_eq!(h.s_map(&alg.mul(&x, &y).unwrap()), alg.mul(&h.s_map(&x), &h.s_map(&y)).unwrap());
    }

    #[test]
    fn comult_is_multiplicative(x in element(s2_6(), 0, 3), y in element(s2_6(), 0, 3)) {
        let alg = s2_6();
        let h = Hopf::new(alg).unwrap();
        let lhs = h.comult(&alg.mul(&x, &y).unwrap());
        let rhs = h.tensor_mul(&h.comult(&x), &h.comult(&y)).unwrap();
        prop_assert_eq!(lhs, rhs);
    }

    #[test]
    fn comult_on_t_is_primitive(v in prop::collection::vec(-3i64..=3, 3)) {
        let alg = sl2_4();
        let h = Hopf::new(alg).unwrap();
        let x = alg.iota(&v.iter().map(|&c| Scalar::from_int(c)).collect::<Vec<_>>());
        let expected = TensorElement::pure(&x, &Element::one()).axpy(&Scalar::one(), &TensorElement::pure(&Element::one(), &x));
        prop_assert_eq!(h.comult(&x), expected);
    }

    #[test]
    fn divisions_on_random_pairs(x in element(s2_6(), 0, 3), y in element(s2_6(), 0, 3)) {
        let alg = s2_6();
        prop_assume!(deg(alg, &x) + deg(alg, &y) <= 6);
        let h = Hopf::new(alg).unwrap();
        prop_assert!(h.check_divisions(&x, &y).unwrap().passed());
    }

    #[test]
    fn weak_associativity(x in element(s2_6(), 0, 2), y in element(s2_6(), 0, 2), z in element(s2_6(), 0, 2)) {
        let alg = s2_6();
        let h = Hopf::new(alg).unwrap();
        prop_assert!(h.check_weak_assoc(&x, &y, &z).unwrap());
    }

    #[test]
    fn jordan_operator_identity(x in element(sl2_4(), 0, 3), a in 0usize..3) {
        prop_assert!(sl2_4().check_jordan(a, &x).unwrap());
    }

    #[test]
    fn closures_of_augmentation_elements(x in element(s2_6(), 1, 2)) {
        let alg = s2_6();
        let c = alg.right_ideal_closure(&[x]).unwrap();
        prop_assert!(c.within_augmentation);
        prop_assert!(!c.contains_one);
    }
}
