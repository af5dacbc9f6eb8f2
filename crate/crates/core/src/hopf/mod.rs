//! Counit, comultiplication, the sign automorphism and the two divisions on
//! the truncated enveloping algebra, with checks of the bialgebra identities.
//!
//! The coproduct of a normal-form monomial is computed on its representative
//! tree in the free algebra, where generators are primitive and the map is
//! multiplicative, and then both legs are reduced. That is well defined
//! because the relators are coideal elements; [`Hopf::new`] verifies this
//! for every relator of degree at most 3.

use std::collections::BTreeMap;

use crate::envelope::{relators_of, Element, EnvelopingAlgebra};
use crate::error::{Error, Result};
use crate::exactlin::{kernel, Scalar, SparseVector, Subspace};
use crate::freealg::FreeElement;

/// A finite sum of pure tensors of normal-form monomials.
#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub struct Tensor<K: Ord> {
    terms: BTreeMap<K, Scalar>,
}

/// `sum x1 ⊗ x2`.
pub type TensorElement = Tensor<(usize, usize)>;
/// `sum x1 ⊗ x2 ⊗ x3`.
pub type Tensor3 = Tensor<(usize, usize, usize)>;

impl<K: Ord + Clone> Default for Tensor<K> {
    fn default() -> Self {
        Self { terms: BTreeMap::new() }
    }
}

impl<K: Ord + Clone> Tensor<K> {
    pub fn zero() -> Self {
        Self::default()
    }

    pub fn is_zero(&self) -> bool {
        self.terms.is_empty()
    }

    pub fn terms(&self) -> &BTreeMap<K, Scalar> {
        &self.terms
    }

    pub fn coefficient(&self, key: &K) -> Scalar {
        self.terms.get(key).cloned().unwrap_or_default()
    }

    pub fn add_term(&mut self, key: K, c: &Scalar) {
        if c.is_zero() {
            return;
        }
        let slot = self.terms.entry(key.clone()).or_default();
        *slot += c;
        if slot.is_zero() {
            self.terms.remove(&key);
        }
    }

    /// `self + c * other`.
    pub fn axpy(&self, c: &Scalar, other: &Self) -> Self {
        let mut out = self.clone();
        for (k, x) in &other.terms {
            out.add_term(k.clone(), &(c * x));
        }
        out
    }

    pub fn sub(&self, other: &Self) -> Self {
        self.axpy(&-Scalar::one(), other)
    }
}

impl TensorElement {
    /// `x ⊗ y`.
    pub fn pure(x: &Element, y: &Element) -> Self {
        let mut out = Self::zero();
        for (&i, a) in x.terms() {
            for (&j, b) in y.terms() {
                out.add_term((i, j), &(a * b));
            }
        }
        out
    }

    /// `sum x2 ⊗ x1`.
    pub fn swap(&self) -> Self {
        Self { terms: self.terms.iter().map(|(&(i, j), c)| ((j, i), c.clone())).collect() }
    }
}

/// The bialgebra structure of a built enveloping algebra.
#[derive(Clone, Debug)]
pub struct Hopf<'a> {
    alg: &'a EnvelopingAlgebra,
    /// Coproduct of each normal-form monomial.
    deltas: Vec<TensorElement>,
}

#[derive(Clone, Debug, Default, PartialEq, Eq)]
pub struct CoalgebraReport {
    pub degree: usize,
    pub coassociative: bool,
    pub cocommutative: bool,
    pub counit: bool,
    pub multiplicative: bool,
    pub checked_monomials: usize,
    pub checked_pairs: usize,
}

impl CoalgebraReport {
    pub fn passed(&self) -> bool {
        self.coassociative && self.cocommutative && self.counit && self.multiplicative
    }
}

/// The four division identities, each compared with `ε(x) y`.
#[derive(Clone, Debug, Default, PartialEq, Eq)]
pub struct DivisionReport {
    /// `sum x1 \ (x2 y)`.
    pub left_inner: bool,
    /// `sum x1 (x2 \ y)`.
    pub left_outer: bool,
    /// `sum (y x1) / x2`.
    pub right_inner: bool,
    /// `sum (y / x1) x2`.
    pub right_outer: bool,
}

impl DivisionReport {
    pub fn passed(&self) -> bool {
        self.left_inner && self.left_outer && self.right_inner && self.right_outer
    }
}

impl<'a> Hopf<'a> {
    pub fn new(alg: &'a EnvelopingAlgebra) -> Result<Self> {
        let table = alg.table();
        let deltas = (0..alg.nf_count()).map(|i| reduced_coproduct(alg, alg.representative(i))).collect::<Result<_>>()?;
        let hopf = Self { alg, deltas };
        for r in relators_of(alg)? {
            if r.degree(table).is_some_and(|d| d <= 3) && !hopf.free_coproduct(&r)?.is_zero() {
                return Err(Error::VerificationFailure("a relator is not a coideal element".into()));
            }
        }
        Ok(hopf)
    }

    pub fn algebra(&self) -> &EnvelopingAlgebra {
        self.alg
    }

    /// Reduced coproduct of a free element.
    fn free_coproduct(&self, x: &FreeElement) -> Result<TensorElement> {
        let mut out = TensorElement::zero();
        for (&i, c) in x.terms() {
            out = out.axpy(c, &reduced_coproduct(self.alg, i)?);
        }
        Ok(out)
    }

    /// `ε(x)`: the coefficient of 1.
    pub fn counit(&self, x: &Element) -> Scalar {
        x.coefficient(0)
    }

    /// `Δ(x)`.
    pub fn comult(&self, x: &Element) -> TensorElement {
        let mut out = TensorElement::zero();
        for (&i, c) in x.terms() {
            out = out.axpy(c, &self.deltas[i]);
        }
        out
    }

    /// `(Δ ⊗ Id) Δ (x)`.
    pub fn comult3(&self, x: &Element) -> Tensor3 {
        let mut out = Tensor3::zero();
        for (&(i, j), c) in self.comult(x).terms() {
            for (&(a, b), e) in self.deltas[i].terms() {
                out.add_term((a, b, j), &(c * e));
            }
        }
        out
    }

    /// `(Id ⊗ Δ) Δ (x)`.
    pub fn comult3_right(&self, x: &Element) -> Tensor3 {
        let mut out = Tensor3::zero();
        for (&(i, j), c) in self.comult(x).terms() {
            for (&(a, b), e) in self.deltas[j].terms() {
                out.add_term((i, a, b), &(c * e));
            }
        }
        out
    }

    /// `S(x)`: `(-1)^n` on normal-form monomials of degree `n`.
    pub fn s_map(&self, x: &Element) -> Element {
        Element::from_terms(x.terms().iter().map(|(&i, c)| {
            let c = if self.alg.nf_degree(i) % 2 == 1 { -c } else { c.clone() };
            (i, c)
        }))
    }

    /// `x \ y = S(x) y`.
    pub fn left_div(&self, x: &Element, y: &Element) -> Result<Element> {
        self.alg.mul(&self.s_map(x), y)
    }

    /// `y / x = sum S(x3) ((x1 y) S(x2))`.
    pub fn right_div(&self, y: &Element, x: &Element) -> Result<Element> {
        self.alg.budget(self.alg.degree0(x) + self.alg.degree0(y))?;
        let mut out = Element::zero();
        for (&(a, b, c), k) in self.comult3(x).terms() {
            let x1y = self.alg.mul(&Element::basis(a), y)?;
            let inner = self.alg.mul(&x1y, &self.s_map(&Element::basis(b)))?;
            let term = self.alg.mul(&self.s_map(&Element::basis(c)), &inner)?;
            out = out.axpy(k, &term);
        }
        Ok(out)
    }

    /// Componentwise product `(a ⊗ b)(c ⊗ d) = ac ⊗ bd`.
    pub fn tensor_mul(&self, x: &TensorElement, y: &TensorElement) -> Result<TensorElement> {
        let mut out = TensorElement::zero();
        for (&(a, b), s) in x.terms() {
            for (&(c, d), t) in y.terms() {
                let left = self.alg.mul(&Element::basis(a), &Element::basis(c))?;
                let right = self.alg.mul(&Element::basis(b), &Element::basis(d))?;
                out = out.axpy(&(s * t), &TensorElement::pure(&left, &right));
            }
        }
        Ok(out)
    }

    /// Coassociativity, cocommutativity and the counit laws on normal-form
    /// monomials of degree at most `k`, and `Δ(xy) = Δ(x)Δ(y)` on pairs of
    /// them with `deg x + deg y <= N`.
    pub fn check_coalgebra(&self, k: usize) -> Result<CoalgebraReport> {
        self.alg.budget(k)?;
        let mut report = CoalgebraReport {
            degree: k,
            coassociative: true,
            cocommutative: true,
            counit: true,
            multiplicative: true,
            ..Default::default()
        };
        let basis: Vec<usize> = self.alg.up_to_degree(k).collect();
        for &i in &basis {
            let x = Element::basis(i);
            let dx = self.comult(&x);
            report.checked_monomials += 1;
            report.coassociative &= self.comult3(&x) == self.comult3_right(&x);
            report.cocommutative &= dx.swap() == dx;
            let mut left = Element::zero();
            let mut right = Element::zero();
            for (&(a, b), c) in dx.terms() {
                if a == 0 {
                    left.add_term(b, c);
                }
                if b == 0 {
                    right.add_term(a, c);
                }
            }
            report.counit &= left == x && right == x;
        }
        for &i in &basis {
            for &j in &basis {
                if self.alg.nf_degree(i) + self.alg.nf_degree(j) > self.alg.max_degree() {
                    continue;
                }
                let (x, y) = (Element::basis(i), Element::basis(j));
                let lhs = self.comult(&self.alg.mul(&x, &y)?);
                let rhs = self.tensor_mul(&self.comult(&x), &self.comult(&y))?;
                report.checked_pairs += 1;
                report.multiplicative &= lhs == rhs;
            }
        }
        Ok(report)
    }

    /// The four division identities for the pair `(x, y)`.
    pub fn check_divisions(&self, x: &Element, y: &Element) -> Result<DivisionReport> {
        let alg = self.alg;
        alg.budget(alg.degree0(x) + alg.degree0(y))?;
        let target = y.scale(&self.counit(x));
        let mut sums = [Element::zero(), Element::zero(), Element::zero(), Element::zero()];
        for (&(a, b), c) in self.comult(x).terms() {
            let (x1, x2) = (Element::basis(a), Element::basis(b));
            let terms = [
                self.left_div(&x1, &alg.mul(&x2, y)?)?,
                alg.mul(&x1, &self.left_div(&x2, y)?)?,
                self.right_div(&alg.mul(y, &x1)?, &x2)?,
                alg.mul(&self.right_div(y, &x1)?, &x2)?,
            ];
            for (s, t) in sums.iter_mut().zip(terms.iter()) {
                *s = s.axpy(c, t);
            }
        }
        Ok(DivisionReport {
            left_inner: sums[0] == target,
            left_outer: sums[1] == target,
            right_inner: sums[2] == target,
            right_outer: sums[3] == target,
        })
    }

    /// `sum x1 (y (x2 z)) = sum (x1 (y x2)) z`.
    pub fn check_weak_assoc(&self, x: &Element, y: &Element, z: &Element) -> Result<bool> {
        let alg = self.alg;
        alg.budget(alg.degree0(x) + alg.degree0(y) + alg.degree0(z))?;
        let mut lhs = Element::zero();
        let mut rhs = Element::zero();
        for (&(a, b), c) in self.comult(x).terms() {
            let (x1, x2) = (Element::basis(a), Element::basis(b));
            lhs = lhs.axpy(c, &alg.mul(&x1, &alg.mul(y, &alg.mul(&x2, z)?)?)?);
            rhs = rhs.axpy(c, &alg.mul(&alg.mul(&x1, &alg.mul(y, &x2)?)?, z)?);
        }
        Ok(lhs == rhs)
    }

    /// Solutions of `Δx = x ⊗ 1 + 1 ⊗ x` in `U(T)_k`, in normal-form coordinates.
    pub fn primitives(&self, k: usize) -> Result<Subspace> {
        if k < 2 {
            return Err(Error::Precondition("primitive elements are solved for in degree at least 2".into()));
        }
        self.alg.budget(k)?;
        let n = self.alg.nf_count();
        let images: Vec<SparseVector> = self
            .alg
            .up_to_degree(k)
            .map(|j| {
                let x = Element::basis(j);
                let defect = self
                    .comult(&x)
                    .sub(&TensorElement::pure(&x, &Element::one()))
                    .sub(&TensorElement::pure(&Element::one(), &x));
                SparseVector::from_entries(n * n, defect.terms().iter().map(|(&(a, b), c)| (a * n + b, c.clone())))
            })
            .collect::<Result<_>>()?;
        let ker = kernel(n * n, &images)?;
        let rows: Vec<SparseVector> = ker.rows().iter().map(|r| r.embed(n, 0)).collect::<Result<_>>()?;
        Subspace::echelonize(n, &rows)
    }
}

fn reduced_coproduct(alg: &EnvelopingAlgebra, free_idx: usize) -> Result<TensorElement> {
    let mut out = TensorElement::zero();
    for ((l, r), m) in alg.table().coproduct(free_idx) {
        let left = alg.reduce(&FreeElement::monomial(l))?;
        let right = alg.reduce(&FreeElement::monomial(r))?;
        out = out.axpy(&Scalar::from(m as usize), &TensorElement::pure(&left, &right));
    }
    Ok(out)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::lts::{catalog, TripleSystem};

    #[test]
    fn counit_and_comult() {
        let u = EnvelopingAlgebra::build(&catalog::s2(), 6).unwrap();
        let h = Hopf::new(&u).unwrap();
        let one = Element::one();
        let e = u.generator(0);
        assert_eq!(h.counit(&one), Scalar::one());
        assert!(h.counit(&e).is_zero());
        assert_eq!(h.counit(&u.parse("3 + 2*e^2*f").unwrap()), Scalar::from_int(3));
        assert_eq!(h.comult(&one), TensorElement::pure(&one, &one));
        let de = TensorElement::pure(&e, &one).axpy(&Scalar::one(), &TensorElement::pure(&one, &e));
        assert_eq!(h.comult(&e), de);
        let e2 = u.power(0, 2).unwrap();
        let expected = TensorElement::pure(&e2, &one)
            .axpy(&Scalar::from_int(2), &TensorElement::pure(&e, &e))
            .axpy(&Scalar::one(), &TensorElement::pure(&one, &e2));
        assert_eq!(h.comult(&e2), expected);
    }

    #[test]
    fn sign_map() {
        let u = EnvelopingAlgebra::build(&catalog::s2(), 5).unwrap();
        let h = Hopf::new(&u).unwrap();
        assert_eq!(h.s_map(&Element::one()), Element::one());
        let x = u.parse("e^2*f").unwrap();
        assert_eq!(h.s_map(&x), x.scale(&-Scalar::one()));
        for i in u.up_to_degree(2) {
            for j in u.up_to_degree(3) {
                let (x, y) = (Element::basis(i), Element::basis(j));
                assert_eq!(h.s_map(&u.mul(&x, &y).unwrap()), u.mul(&h.s_map(&x), &h.s_map(&y)).unwrap());
            }
        }
    }

    #[test]
    fn divisions() {
        let u = EnvelopingAlgebra::build(&catalog::s2(), 6).unwrap();
        let h = Hopf::new(&u).unwrap();
        let (e, f) = (u.generator(0), u.generator(1));
        assert_eq!(h.left_div(&e, &f).unwrap(), u.parse("-e*f").unwrap());
        assert_eq!(h.right_div(&f, &Element::one()).unwrap(), f);
        assert!(h.check_divisions(&e, &f).unwrap().passed());
        assert!(h.check_divisions(&Element::one(), &f).unwrap().passed());
        assert!(h.check_divisions(&u.power(0, 2).unwrap(), &e).unwrap().passed());
    }

    #[test]
    fn coalgebra_and_weak_associativity() {
        let u = EnvelopingAlgebra::build(&catalog::s2(), 6).unwrap();
        let h = Hopf::new(&u).unwrap();
        assert!(h.check_coalgebra(0).unwrap().passed());
        assert!(h.check_coalgebra(3).unwrap().passed());
        let (e, f) = (u.generator(0), u.generator(1));
        assert!(h.check_weak_assoc(&e, &Element::one(), &Element::one()).unwrap());
        assert!(h.check_weak_assoc(&e, &f, &e).unwrap());
        assert!(h.check_weak_assoc(&u.power(0, 2).unwrap(), &f, &f).unwrap());
    }

    #[test]
    fn primitive_elements() {
        let u = EnvelopingAlgebra::build(&catalog::s2(), 5).unwrap();
        let h = Hopf::new(&u).unwrap();
        let p4 = h.primitives(4).unwrap();
        let t = Subspace::coordinate(u.nf_count(), u.degree_range(1)).unwrap();
        assert_eq!(p4, t);
        assert_eq!(h.primitives(5).unwrap(), p4);
        let a = EnvelopingAlgebra::build(&TripleSystem::abelian(1), 3).unwrap();
        assert_eq!(Hopf::new(&a).unwrap().primitives(3).unwrap().dim(), 1);
    }
}
