use num_rational::BigRational;
use num_traits::{One, Zero};
use proptest::prelude::*;
use triplex::exactlin::kernel;
use triplex::{Matrix, Scalar, SparseVector, Subspace};

fn scalar() -> impl Strategy<Value = Scalar> {
    (-20i64..=20, 1i64..=9).prop_map(|(n, d)| Scalar::ratio(n, d))
}

fn small_vectors(max_dim: usize, max_count: usize) -> impl Strategy<Value = (usize, Vec<Vec<i64>>)> {
    (1..=max_dim).prop_flat_map(move |dim| {
        (Just(dim), prop::collection::vec(prop::collection::vec(-2i64..=2, dim), 0..=max_count))
    })
}

fn sparse(v: &[i64]) -> SparseVector {
    SparseVector::from_dense(&v.iter().map(|&x| Scalar::from_int(x)).collect::<Vec<_>>())
}

/// Dense Gaussian elimination on an augmented system: is `target` in the
/// column span of `cols`?
fn dense_solvable(cols: &[Vec<i64>], target: &[i64]) -> bool {
    let rows = target.len();
    let n = cols.len();
    let mut m: Vec<Vec<BigRational>> = (0..rows)
        .map(|i| {
            let mut row: Vec<BigRational> = cols.iter().map(|c| BigRational::from_integer(c[i].into())).collect();
            row.push(BigRational::from_integer(target[i].into()));
            row
        })
        .collect();
    let mut r = 0;
    for c in 0..n {
        let Some(p) = (r..rows).find(|&i| !m[i][c].is_zero()) else { continue };
        m.swap(r, p);
        let inv = BigRational::one() / m[r][c].clone();
        for j in 0..=n {
            m[r][j] = &m[r][j] * &inv;
        }
        for i in 0..rows {
            if i != r && !m[i][c].is_zero() {
                let f = m[i][c].clone();
                for j in 0..=n {
                    let sub = &f * &m[r][j];
                    m[i][j] -= sub;
                }
            }
        }
        r += 1;
    }
    (r..rows).all(|i| m[i][n].is_zero())
}

proptest! {
    #[test]
    fn scalar_round_trips(a in scalar(), b in scalar()) {
        prop_assert_eq!(&(&a + &b) - &b, a.clone());
        if !b.is_zero() {
            prop_assert_eq!(&(&a * &b) / &b, a.clone());
        }
        prop_assert_eq!(a.to_string().parse::<Scalar>().unwrap(), a);
    }

    #[test]
    fn echelonize_is_idempotent((dim, vs) in small_vectors(6, 6)) {
        let rows: Vec<SparseVector> = vs.iter().map(|v| sparse(v)).collect();
        let s = Subspace::echelonize(dim, &rows).unwrap();
        let again = Subspace::echelonize(dim, s.rows()).unwrap();
        prop_assert_eq!(&again, &s);
        for r in &rows {
            prop_assert!(s.member(r).unwrap());
        }
    }

    #[test]
    fn membership_matches_dense_solver((dim, vs) in small_vectors(8, 6), t in prop::collection::vec(-2i64..=2, 8)) {
        let target = &t[..dim];
        let rows: Vec<SparseVector> = vs.iter().map(|v| sparse(v)).collect();
        let s = Subspace::echelonize(dim, &rows).unwrap();
        prop_assert_eq!(s.member(&sparse(target)).unwrap(), dense_solvable(&vs, target));
    }

    #[test]
    fn sum_and_intersection_dimensions((dim, a) in small_vectors(6, 4), b in prop::collection::vec(prop::collection::vec(-2i64..=2, 6), 0..4)) {
        let ra: Vec<SparseVector> = a.iter().map(|v| sparse(v)).collect();
        let rb: Vec<SparseVector> = b.iter().map(|v| sparse(&v[..dim])).collect();
        let sa = Subspace::echelonize(dim, &ra).unwrap();
        let sb = Subspace::echelonize(dim, &rb).unwrap();
        let sum = sa.sum(&sb).unwrap();
        let meet = sa.intersection(&sb).unwrap();
        prop_assert_eq!(sum.dim() + meet.dim(), sa.dim() + sb.dim());
        prop_assert!(sum.contains(&sa).unwrap() && sa.contains(&meet).unwrap() && sb.contains(&meet).unwrap());
    }

    #[test]
    fn kernel_is_annihilated((dim, vs) in small_vectors(5, 6)) {
        // images of the unit vectors of a domain of size vs.len()
        let images: Vec<SparseVector> = vs.iter().map(|v| sparse(v)).collect();
        let ker = kernel(dim, &images).unwrap();
        prop_assert_eq!(ker.dim() + Subspace::echelonize(dim, &images).unwrap().dim(), images.len());
        for k in ker.rows() {
            let mut acc = SparseVector::zero(dim);
            for (i, c) in k.iter() {
                acc = acc.axpy(c, &images[i]).unwrap();
            }
            prop_assert!(acc.is_zero());
        }
    }
}

#[test]
fn matrix_basics() {
    let a = Matrix::from_ints(&[&[1, 2], &[3, 4]]).unwrap();
    let b = Matrix::from_ints(&[&[0, 1], &[1, 0]]).unwrap();
    assert_eq!(a.mul(&b).unwrap(), Matrix::from_ints(&[&[2, 1], &[4, 3]]).unwrap());
    assert_eq!(a.trace().unwrap(), Scalar::from_int(5));
    assert_eq!(a.rank(), 2);
    assert_eq!(
        triplex::exactlin::mat_bracket(&a, &b).unwrap(),
        Matrix::from_ints(&[&[-1, -3], &[3, 1]]).unwrap()
    );
}
