//! Built-in systems used by the test suites and shipped as data files.

use super::{lts_from_involution, lts_from_lie, LieAlgebra, Operator, TripleSystem};
use crate::exactlin::{solve_combination, Matrix, Scalar, SparseVector};

fn names(xs: &[&str]) -> Vec<String> {
    xs.iter().map(|s| s.to_string()).collect()
}

/// Elementary matrix `E_{ij}` of size `n`.
fn elementary(n: usize, i: usize, j: usize) -> Matrix {
    let mut m = Matrix::zeros(n, n);
    m.set(i, j, Scalar::one());
    m
}

/// The two-dimensional system `[e,f,e] = 2e`, `[e,f,f] = -2f`, listed with
/// its skew partners.
pub fn s2() -> TripleSystem {
    let two = Scalar::from_int(2);
    TripleSystem::new(
        "s2",
        names(&["e", "f"]),
        [
            ([0, 1, 0], vec![(0, two.clone())]),
            ([1, 0, 0], vec![(0, -&two)]),
            ([0, 1, 1], vec![(1, -&two)]),
            ([1, 0, 1], vec![(1, two)]),
        ],
    )
    .expect("static data")
}

fn sl2_matrices() -> Vec<Matrix> {
    let mut h = Matrix::zeros(2, 2);
    h.set(0, 0, Scalar::one());
    h.set(1, 1, -Scalar::one());
    vec![h, elementary(2, 0, 1), elementary(2, 1, 0)]
}

/// `sl(2)` on the basis `(h, e, f)`.
pub fn sl2() -> LieAlgebra {
    LieAlgebra::from_matrices("sl2", names(&["h", "e", "f"]), &sl2_matrices()).expect("static data")
}

/// `sl(2)` viewed as a triple system through `[[x,y],z]`.
pub fn sl2_lts() -> TripleSystem {
    lts_from_lie(&sl2()).expect("sl2 is a Lie algebra")
}

/// Conjugation by `diag(1,-1)`: fixes `h`, negates `e` and `f`.
pub fn sl2_diag_involution() -> Operator {
    let mut m = Matrix::identity(3);
    m.set(1, 1, -Scalar::one());
    m.set(2, 2, -Scalar::one());
    Operator::generic(m)
}

fn sl3_matrices() -> Vec<Matrix> {
    let diag = |a: usize, b: usize| {
        let mut m = Matrix::zeros(3, 3);
        m.set(a, a, Scalar::one());
        m.set(b, b, -Scalar::one());
        m
    };
    vec![
        diag(0, 1),
        diag(1, 2),
        elementary(3, 0, 1),
        elementary(3, 0, 2),
        elementary(3, 1, 2),
        elementary(3, 1, 0),
        elementary(3, 2, 0),
        elementary(3, 2, 1),
    ]
}

/// `sl(3)` on the basis `(h1, h2, e12, e13, e23, e21, e31, e32)`.
pub fn sl3() -> LieAlgebra {
    LieAlgebra::from_matrices("sl3", names(&["h1", "h2", "e12", "e13", "e23", "e21", "e31", "e32"]), &sl3_matrices())
        .expect("static data")
}

/// `x -> -x^T` on `sl(3)`, as a matrix in the basis of [`sl3`].
pub fn sl3_neg_transpose() -> Operator {
    let mats = sl3_matrices();
    let vecs: Vec<SparseVector> = mats.iter().map(Matrix::to_vector).collect();
    let cols: Vec<Vec<Scalar>> = mats
        .iter()
        .map(|x| {
            let img = x.transpose().scale(&-Scalar::one()).to_vector();
            solve_combination(9, &vecs, &img).expect("dims agree").expect("sl3 is closed under -transpose")
        })
        .collect();
    Operator::generic(Matrix::from_columns(8, &cols).expect("square"))
}

/// Symmetric traceless 3x3 matrices: the `-1` eigenspace of `x -> -x^T`.
pub fn sl3_sym_lts() -> TripleSystem {
    lts_from_involution(&sl3(), &sl3_neg_transpose()).expect("valid involution").with_name("sl3-sym")
}

/// `S2 ⊕ S2`, a non-simple system used for negative checks.
pub fn s2_pair() -> TripleSystem {
    s2().direct_sum(&s2())
}

pub fn abelian(d: usize) -> TripleSystem {
    TripleSystem::abelian(d)
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn sl2_brackets() {
        let l = sl2();
        l.validate().unwrap();
        let (h, e, f) = (l.basis_vector(0), l.basis_vector(1), l.basis_vector(2));
        let two = Scalar::from_int(2);
        assert_eq!(l.bracket(&h, &e).unwrap(), vec![Scalar::zero(), two.clone(), Scalar::zero()]);
        assert_eq!(l.bracket(&e, &f).unwrap(), h);
        assert_eq!(l.bracket(&h, &f).unwrap(), vec![Scalar::zero(), Scalar::zero(), -two]);
    }

    #[test]
    fn sl3_and_its_involution() {
        let l = sl3();
        l.validate().unwrap();
        let s = sl3_neg_transpose();
        assert!(l.is_automorphism(&s.matrix).unwrap());
        assert_eq!(s.matrix.mul(&s.matrix).unwrap(), Matrix::identity(8));
        let t = sl3_sym_lts();
        assert_eq!(t.basis_names(), &["h1", "h2", "t2", "t3", "t4"]);
    }

    #[test]
    fn direct_sum_layout() {
        let t = s2_pair();
        assert_eq!(t.dim(), 4);
        assert!(t.check_axioms().all_pass());
        assert!(t.constant(0, 2, 0).is_zero());
        assert_eq!(t.constant(2, 3, 2).get(2), Scalar::from_int(2));
    }
}
