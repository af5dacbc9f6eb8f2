use proptest::prelude::*;
use triplex::freealg::{fmul, free_count, parse, FreeElement, MonomialTable, Tree};
use triplex::Scalar;

fn table() -> MonomialTable {
    MonomialTable::enumerate(2, 5).unwrap()
}

fn element(max_idx: usize) -> impl Strategy<Value = FreeElement> {
    prop::collection::vec((0..max_idx, -3i64..=3), 0..5)
        .prop_map(|ts| FreeElement::from_terms(ts.into_iter().map(|(i, c)| (i, Scalar::from_int(c)))))
}

#[test]
fn counts_are_catalan_weighted() {
    // d^n times the Catalan number C_(n-1)
    assert_eq!(free_count(2, 1), 2);
    assert_eq!(free_count(2, 2), 4);
    assert_eq!(free_count(2, 3), 16);
    assert_eq!(free_count(2, 4), 80);
    assert_eq!(free_count(3, 3), 54);
    let t = table();
    assert_eq!(t.len(), 1 + 2 + 4 + 16 + 80 + 448);
}

#[test]
fn indices_are_stable() {
    let t = table();
    for idx in 0..t.len() {
        let tree = t.tree(idx);
        match tree {
            Some(tree) => assert_eq!(t.index_of(&tree).unwrap(), idx),
            None => assert_eq!(idx, t.unit()),
        }
    }
    let again = table();
    let probe = Tree::node(Tree::leaf(1), Tree::node(Tree::leaf(0), Tree::leaf(1)));
    assert_eq!(t.index_of(&probe).unwrap(), again.index_of(&probe).unwrap());
}

proptest! {
    #[test]
    fn fmul_is_bilinear_and_unital(x in element(23), y in element(23), z in element(23), c in -3i64..=3) {
        // keep degree <= 2 so every product fits the budget
        let t = table();
        let low = |e: FreeElement| FreeElement::from_terms(e.terms().iter().filter(|(&i, _)| t.degree(i) <= 2).map(|(&i, c)| (i, c.clone())));
        let (x, y, z) = (low(x), low(y), low(z));
        let c = Scalar::from_int(c);
        let lhs = fmul(&t, &x.axpy(&c, &y), &z).unwrap();
        let rhs = fmul(&t, &x, &z).unwrap().axpy(&c, &fmul(&t, &y, &z).unwrap());
        prop_assert_eq!(lhs, rhs);
        let lhs = fmul(&t, &z, &x.axpy(&c, &y)).unwrap();
        let rhs = fmul(&t, &z, &x).unwrap().axpy(&c, &fmul(&t, &z, &y).unwrap());
        prop_assert_eq!(lhs, rhs);
        prop_assert_eq!(fmul(&t, &FreeElement::one(), &x).unwrap(), x.clone());
        prop_assert_eq!(fmul(&t, &x, &FreeElement::one()).unwrap(), x.clone());
        if let (Some(dx), Some(dy)) = (x.degree(&t), y.degree(&t)) {
            let p = fmul(&t, &x, &y).unwrap();
            if !p.is_zero() {
                prop_assert!(p.degree(&t).unwrap() <= dx + dy);
            }
        }
    }

    #[test]
    fn monomial_products_add_degrees(a in 0usize..23, b in 0usize..23) {
        let t = table();
        if t.degree(a) + t.degree(b) <= 5 {
            let p = t.mul(a, b).unwrap();
            prop_assert_eq!(t.degree(p), t.degree(a) + t.degree(b));
            if a != t.unit() && b != t.unit() {
                prop_assert_eq!(t.factors(p), Some((a, b)));
            }
        }
    }

    #[test]
    fn format_parse_round_trip(x in element(125)) {
        let t = table();
        let names = ["e".to_string(), "f".to_string()];
        let text = triplex::freealg::format(&x, &t, &names);
        prop_assert_eq!(parse(&text, &names, &t).unwrap(), x);
    }
}

#[test]
fn budget_is_loud() {
    let t = MonomialTable::enumerate(2, 2).unwrap();
    let e = t.generator(0);
    let e2 = t.mul(e, e).unwrap();
    assert!(t.mul(e2, e).is_err());
}
