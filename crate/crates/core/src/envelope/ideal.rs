//! Right-ideal closures inside the truncated enveloping algebra.

use std::collections::BTreeSet;

use super::{Element, EnvelopingAlgebra};
use crate::error::{Error, Result};
use crate::exactlin::{EchelonBuilder, Scalar, SparseVector, Subspace};

/// The smallest subspace containing the generators and stable under
/// `v -> v m` for normal-form monomials `m` with `deg v + deg m <= N`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct IdealClosure {
    /// The closure in normal-form coordinates.
    pub subspace: Subspace,
    /// `dim(I ∩ U(T)_k)` for `k = 0..=N`.
    pub filtered_dims: Vec<usize>,
    pub contains_one: bool,
    /// `dim(I ∩ T)`.
    pub meets_t: usize,
    pub within_augmentation: bool,
    /// `N - max deg(generators)`: the degrees up to which the truncation
    /// cannot hide products.
    pub window: usize,
    /// Least `n0` such that every normal-form monomial of degree
    /// `n0..=window` lies in the closure.
    pub stabilization: Option<usize>,
}

impl EnvelopingAlgebra {
    /// Coordinates ordered by degree descending, so the echelon pivot of a
    /// vector is one of its highest-degree terms.
    fn descending(&self, x: &Element) -> SparseVector {
        let last = self.nf_count() - 1;
        SparseVector::from_entries(self.nf_count(), x.terms().iter().map(|(&i, c)| (last - i, c.clone())))
            .expect("normal-form indices")
    }

    pub fn right_ideal_closure(&self, gens: &[Element]) -> Result<IdealClosure> {
        if gens.is_empty() {
            return Err(Error::Precondition("right-ideal closure needs at least one generator".into()));
        }
        let n = self.max_degree;
        let last = self.nf_count() - 1;
        let mut max_gen = 0;
        for g in gens {
            let d = self.degree0(g);
            self.budget(d)?;
            max_gen = max_gen.max(d);
        }

        let mut builder = EchelonBuilder::new(self.nf_count());
        let mut work = BTreeSet::new();
        let push = |builder: &mut EchelonBuilder, work: &mut BTreeSet<(usize, usize)>, x: &Element| -> Result<()> {
            let pivot = builder.insert(&self.descending(x))?.map(|r| r.leading().expect("nonzero").0);
            if let Some(p) = pivot {
                work.insert((self.nf_degree(last - p), builder.rank() - 1));
            }
            Ok(())
        };
        for g in gens {
            push(&mut builder, &mut work, g)?;
        }
        while let Some((k, r)) = work.pop_first() {
            let v = Element::from_terms(builder.rows()[r].iter().map(|(c, x)| (last - c, x.clone())));
            for m in self.degree_range(1).start..self.up_to_degree(n - k).end {
                let p = self.mul(&v, &Element::basis(m))?;
                push(&mut builder, &mut work, &p)?;
            }
        }

        let rows: Vec<SparseVector> = builder.rows().iter().map(|r| self.descending_inverse(r)).collect();
        let subspace = Subspace::echelonize(self.nf_count(), &rows)?;
        let mut filtered_dims = vec![0usize; n + 1];
        for row in builder.rows() {
            let (p, _) = row.leading().expect("nonzero");
            for slot in filtered_dims.iter_mut().skip(self.nf_degree(last - p)) {
                *slot += 1;
            }
        }
        let contains_one = subspace.member(&SparseVector::unit(self.nf_count(), 0))?;
        let meets_t = subspace.intersection(&Subspace::coordinate(self.nf_count(), self.degree_range(1))?)?.dim();
        let within_augmentation = self.augmentation_ideal().contains(&subspace)?;
        let window = n - max_gen;
        let mut stabilization = None;
        for deg in (0..=window).rev() {
            let mut all = true;
            for j in self.degree_range(deg) {
                if !subspace.member(&SparseVector::unit(self.nf_count(), j))? {
                    all = false;
                    break;
                }
            }
            if !all {
                break;
            }
            stabilization = Some(deg);
        }
        Ok(IdealClosure { subspace, filtered_dims, contains_one, meets_t, within_augmentation, window, stabilization })
    }

    fn descending_inverse(&self, v: &SparseVector) -> SparseVector {
        let last = self.nf_count() - 1;
        SparseVector::from_entries(self.nf_count(), v.iter().map(|(c, x)| (last - c, x.clone())))
            .expect("normal-form indices")
    }

    /// Span of all normal-form monomials of positive degree.
    pub fn augmentation_ideal(&self) -> Subspace {
        Subspace::coordinate(self.nf_count(), 1..self.nf_count()).expect("indices in range")
    }

    /// Kernel of the counit, computed from its values on the basis.
    pub fn counit_kernel(&self) -> Result<Subspace> {
        let images: Vec<SparseVector> = (0..self.nf_count())
            .map(|j| {
                let c = if j == 0 { Scalar::one() } else { Scalar::zero() };
                SparseVector::from_dense(&[c])
            })
            .collect();
        crate::exactlin::kernel(1, &images)
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::lts::catalog;

    #[test]
    fn closure_examples() {
        let u = EnvelopingAlgebra::build(&catalog::s2(), 6).unwrap();
        let whole = u.right_ideal_closure(&[Element::one()]).unwrap();
        assert!(whole.contains_one);
        assert_eq!(whole.subspace.dim(), u.nf_count());
        assert_eq!(whole.stabilization, Some(0));

        let e = u.right_ideal_closure(&[u.generator(0)]).unwrap();
        assert!(e.within_augmentation);
        assert!(!e.contains_one);
        assert!(e.meets_t >= 1);

        let one_plus_e = u.right_ideal_closure(&[u.parse("1 + e").unwrap()]).unwrap();
        assert!(one_plus_e.contains_one);
        assert!(matches!(u.right_ideal_closure(&[]), Err(Error::Precondition(_))));
    }

    #[test]
    fn augmentation() {
        let u = EnvelopingAlgebra::build(&catalog::s2(), 5).unwrap();
        let aug = u.augmentation_ideal();
        assert_eq!(aug.dim(), u.nf_count() - 1);
        assert_eq!(aug, u.counit_kernel().unwrap());
        assert_eq!(aug.sum(&u.filtration(0)).unwrap().dim(), u.nf_count());
        let gens: Vec<Element> = (1..u.nf_count()).map(Element::basis).collect();
        let closed = u.right_ideal_closure(&gens).unwrap();
        assert_eq!(closed.subspace, aug);
    }
}
