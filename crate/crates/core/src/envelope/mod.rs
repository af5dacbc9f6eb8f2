//! The degree-truncated universal enveloping algebra of a Lie triple system.
//!
//! `U(T)` is built as a quotient of the free magma algebra by the two-sided
//! ideal generated by three relator families:
//!
//! - `b_i b_j - b_j b_i`;
//! - `(a, m1, m2) + (m1, a, m2)` for every generator `a` and monomials `m1, m2`;
//! - `a(bc) - b(ac) - [a, b, c]` for basis triples.
//!
//! The ideal is closed under left and right multiplication by monomials up
//! to the truncation degree and echelonized with the highest-degree column
//! first. The quotient is accepted only if its dimension in every degree
//! equals the symmetric-algebra count `C(d + n - 1, n)` and the chosen
//! representatives `b_1^k1 (b_2^k2 (... b_d^kd))` are independent; a build
//! that fails the count is rejected rather than repaired.

mod checks;
mod ideal;

pub use checks::S2Row;
pub use ideal::IdealClosure;

use std::collections::{BTreeMap, BTreeSet, HashMap};

use num_integer::binomial;

use crate::error::{Error, Result};
use crate::exactlin::{EchelonBuilder, Matrix, Scalar, SparseVector, Subspace};
use crate::freealg::{self, FreeElement, MonomialTable, DEFAULT_MAX_MONOMIALS};
use crate::lts::TripleSystem;

/// An element of `U(T)` in normal-form coordinates.
#[derive(Clone, Debug, Default, PartialEq, Eq, Hash)]
pub struct Element {
    terms: BTreeMap<usize, Scalar>,
}

impl Element {
    pub fn zero() -> Self {
        Self::default()
    }

    pub fn one() -> Self {
        Self::basis(0)
    }

    /// The normal-form monomial with index `idx`.
    pub fn basis(idx: usize) -> Self {
        Self::term(idx, Scalar::one())
    }

    pub fn term(idx: usize, c: Scalar) -> Self {
        let mut out = Self::zero();
        out.add_term(idx, &c);
        out
    }

    pub fn from_terms<I: IntoIterator<Item = (usize, Scalar)>>(terms: I) -> Self {
        let mut out = Self::zero();
        for (i, c) in terms {
            out.add_term(i, &c);
        }
        out
    }

    pub fn is_zero(&self) -> bool {
        self.terms.is_empty()
    }

    pub fn terms(&self) -> &BTreeMap<usize, Scalar> {
        &self.terms
    }

    pub fn coefficient(&self, idx: usize) -> Scalar {
        self.terms.get(&idx).cloned().unwrap_or_default()
    }

    pub fn add_term(&mut self, idx: usize, c: &Scalar) {
        if c.is_zero() {
            return;
        }
        let slot = self.terms.entry(idx).or_default();
        *slot += c;
        if slot.is_zero() {
            self.terms.remove(&idx);
        }
    }

    pub fn add(&self, other: &Self) -> Self {
        self.axpy(&Scalar::one(), other)
    }

    pub fn sub(&self, other: &Self) -> Self {
        self.axpy(&-Scalar::one(), other)
    }

    /// `self + c * other`.
    pub fn axpy(&self, c: &Scalar, other: &Self) -> Self {
        let mut out = self.clone();
        for (i, x) in &other.terms {
            out.add_term(*i, &(c * x));
        }
        out
    }

    pub fn scale(&self, c: &Scalar) -> Self {
        if c.is_zero() {
            return Self::zero();
        }
        Self { terms: self.terms.iter().map(|(i, x)| (*i, c * x)).collect() }
    }
}

/// `U(T)` truncated at degree `N`, with certified normal forms.
#[derive(Clone, Debug)]
pub struct EnvelopingAlgebra {
    t: TripleSystem,
    max_degree: usize,
    table: MonomialTable,
    /// Exponent vectors, by degree and then lexicographically descending.
    exponents: Vec<Vec<usize>>,
    exponent_index: HashMap<Vec<usize>, usize>,
    /// `nf_starts[n]` is the first normal-form index of degree `n`.
    nf_starts: Vec<usize>,
    /// Free index of each representative monomial.
    rep_free: Vec<usize>,
    /// Normal form of every free monomial.
    reduce_table: Vec<Vec<(usize, Scalar)>>,
    /// Relation ideal in permuted free coordinates, see `column_of`.
    relations: Subspace,
    column_of: Vec<usize>,
    quotient_dims: Vec<usize>,
}

fn exponent_vectors(d: usize, n: usize) -> Vec<Vec<usize>> {
    if d == 1 {
        return vec![vec![n]];
    }
    let mut out = Vec::new();
    for k in (0..=n).rev() {
        for mut rest in exponent_vectors(d - 1, n - k) {
            rest.insert(0, k);
            out.push(rest);
        }
    }
    out
}

impl EnvelopingAlgebra {
    /// Builds `U(T)` up to degree `max_degree` with the default size guard.
    pub fn build(t: &TripleSystem, max_degree: usize) -> Result<Self> {
        Self::build_with_limit(t, max_degree, DEFAULT_MAX_MONOMIALS)
    }

    pub fn build_with_limit(t: &TripleSystem, max_degree: usize, limit: usize) -> Result<Self> {
        let report = t.check_axioms();
        if !report.all_pass() {
            let failed: Vec<String> =
                report.results.iter().filter(|r| !r.passed()).map(|r| r.axiom.to_string()).collect();
            return Err(Error::InvalidTripleSystem(format!("axioms fail: {}", failed.join(", "))));
        }
        if max_degree == 0 {
            return Err(Error::Precondition("truncation degree must be at least 1".into()));
        }
        let d = t.dim();
        if d == 0 {
            return Err(Error::Precondition("the triple system has dimension 0".into()));
        }
        let table = MonomialTable::enumerate_with_limit(d, max_degree, limit)?;

        let mut exponents = Vec::new();
        let mut nf_starts = Vec::with_capacity(max_degree + 2);
        for n in 0..=max_degree {
            nf_starts.push(exponents.len());
            exponents.extend(exponent_vectors(d, n));
        }
        nf_starts.push(exponents.len());
        let exponent_index = exponents.iter().enumerate().map(|(i, k)| (k.clone(), i)).collect();
        let rep_free: Vec<usize> =
            exponents.iter().map(|k| representative(&table, k)).collect::<Result<_>>()?;
        let mut is_rep = vec![false; table.len()];
        for &r in &rep_free {
            is_rep[r] = true;
        }

        // Highest degree first, and within a degree the non-representatives
        // first, so that pivots fall on the monomials to be rewritten.
        let mut order: Vec<usize> = (0..table.len()).collect();
        order.sort_by_key(|&i| (std::cmp::Reverse(table.degree(i)), is_rep[i], i));
        let mut column_of = vec![0usize; table.len()];
        for (c, &i) in order.iter().enumerate() {
            column_of[i] = c;
        }
        let degree_of_column: Vec<usize> = order.iter().map(|&i| table.degree(i)).collect();

        let mut closure = RelationClosure {
            table: &table,
            column_of: &column_of,
            order: &order,
            degree_of_column: &degree_of_column,
            builder: EchelonBuilder::new(table.len()),
            work: BTreeSet::new(),
        };
        for r in relators(t, &table)? {
            closure.push(&r)?;
        }
        closure.saturate()?;
        let relations = closure.builder.finish();

        let mut pivots_per_degree = vec![0usize; max_degree + 1];
        for &p in relations.pivots() {
            pivots_per_degree[degree_of_column[p]] += 1;
            if is_rep[order[p]] {
                return Err(Error::VerificationFailure(format!(
                    "normal-form representatives are dependent in degree {}",
                    degree_of_column[p]
                )));
            }
        }
        let mut quotient_dims = Vec::with_capacity(max_degree + 1);
        for n in 0..=max_degree {
            let found = table.count(n) - pivots_per_degree[n];
            let expected = binomial(d + n - 1, n);
            if found != expected {
                return Err(Error::PbwCertificateFailure { degree: n, expected, found });
            }
            quotient_dims.push(found);
        }

        let rep_index: HashMap<usize, usize> = rep_free.iter().enumerate().map(|(n, &f)| (f, n)).collect();
        let mut reduce_table: Vec<Vec<(usize, Scalar)>> = vec![Vec::new(); table.len()];
        for (n, &f) in rep_free.iter().enumerate() {
            reduce_table[f] = vec![(n, Scalar::one())];
        }
        for row in relations.rows() {
            let mut it = row.iter();
            let (pivot, _) = it.next().expect("rows are nonzero");
            let mut nf: Vec<(usize, Scalar)> = it
                .map(|(c, x)| {
                    let rep = rep_index.get(&order[c]).copied().expect("reduced rows end on representatives");
                    (rep, -x)
                })
                .collect();
            nf.sort_by_key(|e| e.0);
            reduce_table[order[pivot]] = nf;
        }

        let alg = Self {
            t: t.clone(),
            max_degree,
            table,
            exponents,
            exponent_index,
            nf_starts,
            rep_free,
            reduce_table,
            relations,
            column_of,
            quotient_dims,
        };
        alg.check_power_bracketings()?;
        Ok(alg)
    }

    /// Every bracketing of `g^n`, `n <= 4`, must reduce to the same element.
    fn check_power_bracketings(&self) -> Result<()> {
        for g in 0..self.dim() {
            for n in 2..=self.max_degree.min(4) {
                let target = self.power(g, n)?;
                for idx in self.table.degree_range(n) {
                    let tree = self.table.tree(idx).expect("degree >= 2");
                    if tree.leaves().iter().all(|&h| h == g) && self.reduce_monomial(idx) != target {
                        return Err(Error::VerificationFailure(format!(
                            "bracketings of {}^{n} disagree",
                            self.t.basis_names()[g]
                        )));
                    }
                }
            }
        }
        Ok(())
    }

    pub fn triple_system(&self) -> &TripleSystem {
        &self.t
    }

    pub fn dim(&self) -> usize {
        self.t.dim()
    }

    pub fn max_degree(&self) -> usize {
        self.max_degree
    }

    pub fn table(&self) -> &MonomialTable {
        &self.table
    }

    pub fn names(&self) -> &[String] {
        self.t.basis_names()
    }

    /// Quotient dimension in each degree `0..=N`.
    pub fn quotient_dims(&self) -> &[usize] {
        &self.quotient_dims
    }

    /// Dimension of `U(T)` up to degree `N`.
    pub fn nf_count(&self) -> usize {
        self.exponents.len()
    }

    /// Dimension of the relation ideal inside the truncated free algebra.
    pub fn relation_dim(&self) -> usize {
        self.relations.dim()
    }

    pub fn exponents(&self, idx: usize) -> &[usize] {
        &self.exponents[idx]
    }

    pub fn nf_index(&self, exponents: &[usize]) -> Option<usize> {
        self.exponent_index.get(exponents).copied()
    }

    pub fn nf_degree(&self, idx: usize) -> usize {
        self.exponents[idx].iter().sum()
    }

    /// Normal-form indices of degree exactly `n`.
    pub fn degree_range(&self, n: usize) -> std::ops::Range<usize> {
        self.nf_starts[n]..self.nf_starts[n + 1]
    }

    /// Normal-form indices of degree at most `k`, clamped to `N`.
    pub fn up_to_degree(&self, k: usize) -> std::ops::Range<usize> {
        0..self.nf_starts[k.min(self.max_degree) + 1]
    }

    /// Free index of the representative of a normal-form monomial.
    pub fn representative(&self, idx: usize) -> usize {
        self.rep_free[idx]
    }

    pub fn degree(&self, x: &Element) -> Option<usize> {
        x.terms.keys().map(|&i| self.nf_degree(i)).max()
    }

    pub(crate) fn degree0(&self, x: &Element) -> usize {
        self.degree(x).unwrap_or(0)
    }

    pub(crate) fn budget(&self, needed: usize) -> Result<()> {
        if needed > self.max_degree {
            Err(Error::DegreeBudgetExceeded { needed, cap: self.max_degree })
        } else {
            Ok(())
        }
    }

    pub fn generator(&self, g: usize) -> Element {
        let mut k = vec![0; self.dim()];
        k[g] = 1;
        Element::basis(self.exponent_index[&k])
    }

    /// `sum v_i b_i` for a vector of `T`.
    pub fn iota(&self, v: &[Scalar]) -> Element {
        Element::from_terms(v.iter().enumerate().map(|(g, c)| (1 + g, c.clone())))
    }

    /// The basis triple product `[b_a, b_b, b_c]` as an element.
    pub fn triple(&self, a: usize, b: usize, c: usize) -> Element {
        Element::from_terms(self.t.constant(a, b, c).iter().map(|(g, x)| (1 + g, x.clone())))
    }

    /// `g^n`.
    pub fn power(&self, g: usize, n: usize) -> Result<Element> {
        self.budget(n)?;
        let mut k = vec![0; self.dim()];
        k[g] = n;
        Ok(Element::basis(self.exponent_index[&k]))
    }

    fn reduce_monomial(&self, free_idx: usize) -> Element {
        Element::from_terms(self.reduce_table[free_idx].iter().cloned())
    }

    /// Normal form of a free element.
    pub fn reduce(&self, x: &FreeElement) -> Result<Element> {
        let mut out = Element::zero();
        for (&i, c) in x.terms() {
            if i >= self.table.len() {
                return Err(Error::IndexOutOfRange { index: i, dim: self.table.len() });
            }
            for (n, y) in &self.reduce_table[i] {
                out.add_term(*n, &(c * y));
            }
        }
        Ok(out)
    }

    /// Whether a free element lies in the relation ideal.
    pub fn in_relations(&self, x: &FreeElement) -> Result<bool> {
        let v = self.permuted(x)?;
        self.relations.member(&v)
    }

    fn permuted(&self, x: &FreeElement) -> Result<SparseVector> {
        let n = self.table.len();
        let entries: Vec<(usize, Scalar)> = x
            .terms()
            .iter()
            .map(|(&i, c)| if i < n { Ok((self.column_of[i], c.clone())) } else { Err(Error::IndexOutOfRange { index: i, dim: n }) })
            .collect::<Result<_>>()?;
        SparseVector::from_entries(n, entries)
    }

    /// The element written on representative monomials.
    pub fn lift(&self, x: &Element) -> FreeElement {
        FreeElement::from_terms(x.terms.iter().map(|(&i, c)| (self.rep_free[i], c.clone())))
    }

    pub fn mul(&self, x: &Element, y: &Element) -> Result<Element> {
        self.budget(self.degree0(x) + self.degree0(y))?;
        let mut out = Element::zero();
        for (&i, a) in &x.terms {
            for (&j, b) in &y.terms {
                let f = self.table.mul(self.rep_free[i], self.rep_free[j])?;
                let ab = a * b;
                for (n, c) in &self.reduce_table[f] {
                    out.add_term(*n, &(&ab * c));
                }
            }
        }
        Ok(out)
    }

    /// `(x, y, z) = (xy)z - x(yz)`.
    pub fn associator(&self, x: &Element, y: &Element, z: &Element) -> Result<Element> {
        self.budget(self.degree0(x) + self.degree0(y) + self.degree0(z))?;
        let left = self.mul(&self.mul(x, y)?, z)?;
        let right = self.mul(x, &self.mul(y, z)?)?;
        Ok(left.sub(&right))
    }

    /// Coordinates in the normal-form basis.
    pub fn to_vector(&self, x: &Element) -> SparseVector {
        SparseVector::from_entries(self.nf_count(), x.terms.iter().map(|(&i, c)| (i, c.clone())))
            .expect("indices are normal-form indices")
    }

    pub fn from_vector(&self, v: &SparseVector) -> Element {
        Element::from_terms(v.iter().map(|(i, c)| (i, c.clone())))
    }

    /// `U(T)_k`: span of normal-form monomials of degree at most `k`.
    pub fn filtration(&self, k: usize) -> Subspace {
        Subspace::coordinate(self.nf_count(), self.up_to_degree(k)).expect("indices in range")
    }

    /// Matrix of `y -> xy` on `U(T)_{N - deg x}`; column `j` is the image of
    /// normal-form monomial `j`.
    pub fn left_mult_operator(&self, x: &Element) -> Result<Matrix> {
        let dx = self.degree0(x);
        self.budget(dx)?;
        let domain = self.up_to_degree(self.max_degree - dx);
        let mut m = Matrix::zeros(self.nf_count(), domain.len());
        for j in domain {
            for (i, c) in self.mul(x, &Element::basis(j))?.terms {
                m.set(i, j, c);
            }
        }
        Ok(m)
    }

    /// Parses an expression over the basis names of `T` and reduces it.
    pub fn parse(&self, text: &str) -> Result<Element> {
        self.reduce(&freealg::parse(text, self.names(), &self.table)?)
    }

    /// Text of an element on the representative monomials, in normal-form order.
    pub fn format(&self, x: &Element) -> String {
        freealg::format_terms(x.terms.iter().map(|(&i, c)| (self.rep_free[i], c)), &self.table, self.names())
    }

    /// Text of one normal-form monomial.
    pub fn format_basis(&self, idx: usize) -> String {
        freealg::format_monomial(&self.table, self.names(), self.rep_free[idx])
    }
}

/// `b_1^k1 (b_2^k2 (... b_d^kd))` with left-nested powers.
fn representative(table: &MonomialTable, k: &[usize]) -> Result<usize> {
    let mut acc: Option<usize> = None;
    for g in (0..k.len()).rev() {
        if k[g] == 0 {
            continue;
        }
        let p = table.power(g, k[g])?;
        acc = Some(match acc {
            None => p,
            Some(rest) => table.mul(p, rest)?,
        });
    }
    Ok(acc.unwrap_or(0))
}

/// The defining relators of a built algebra, in free coordinates.
pub fn relators_of(alg: &EnvelopingAlgebra) -> Result<Vec<FreeElement>> {
    relators(&alg.t, &alg.table)
}

/// The three relator families, in free coordinates.
pub(crate) fn relators(t: &TripleSystem, table: &MonomialTable) -> Result<Vec<FreeElement>> {
    let d = t.dim();
    let n = table.max_degree();
    let gen = |g: usize| table.generator(g);
    let one = Scalar::one();
    let minus = -Scalar::one();
    let mut out = Vec::new();
    if n >= 2 {
        for i in 0..d {
            for j in i + 1..d {
                out.push(FreeElement::from_terms([
                    (table.mul(gen(i), gen(j))?, one.clone()),
                    (table.mul(gen(j), gen(i))?, minus.clone()),
                ]));
            }
        }
    }
    // (a, m1, m2) + (m1, a, m2)
    for a in 0..d {
        let ga = gen(a);
        for p in 1..n {
            for q in 1..n.saturating_sub(p) {
                for m1 in table.degree_range(p) {
                    for m2 in table.degree_range(q) {
                        let terms = [
                            (table.mul(table.mul(ga, m1)?, m2)?, one.clone()),
                            (table.mul(ga, table.mul(m1, m2)?)?, minus.clone()),
                            (table.mul(table.mul(m1, ga)?, m2)?, one.clone()),
                            (table.mul(m1, table.mul(ga, m2)?)?, minus.clone()),
                        ];
                        let r = FreeElement::from_terms(terms);
                        if !r.is_zero() {
                            out.push(r);
                        }
                    }
                }
            }
        }
    }
    // a(bc) - b(ac) - [a, b, c]
    if n >= 3 {
        for a in 0..d {
            for b in 0..d {
                for c in 0..d {
                    let mut r = FreeElement::from_terms([
                        (table.mul(gen(a), table.mul(gen(b), gen(c))?)?, one.clone()),
                        (table.mul(gen(b), table.mul(gen(a), gen(c))?)?, minus.clone()),
                    ]);
                    for (l, x) in t.constant(a, b, c).iter() {
                        r.add_term(gen(l), &-x);
                    }
                    if !r.is_zero() {
                        out.push(r);
                    }
                }
            }
        }
    }
    Ok(out)
}

/// Two-sided closure of the relation span under monomial multiplication.
struct RelationClosure<'a> {
    table: &'a MonomialTable,
    column_of: &'a [usize],
    order: &'a [usize],
    degree_of_column: &'a [usize],
    builder: EchelonBuilder,
    /// Rows still to be multiplied, lowest degree first.
    work: BTreeSet<(usize, usize)>,
}

impl RelationClosure<'_> {
    fn push(&mut self, x: &FreeElement) -> Result<()> {
        let n = self.table.len();
        let v = SparseVector::from_entries(n, x.terms().iter().map(|(&i, c)| (self.column_of[i], c.clone())))?;
        let pivot = self.builder.insert(&v)?.map(|row| row.leading().expect("nonzero").0);
        if let Some(p) = pivot {
            self.work.insert((self.degree_of_column[p], self.builder.rank() - 1));
        }
        Ok(())
    }

    fn saturate(&mut self) -> Result<()> {
        let max = self.table.max_degree();
        while let Some((k, r)) = self.work.pop_first() {
            if k >= max {
                continue;
            }
            let terms: Vec<(usize, Scalar)> =
                self.builder.rows()[r].iter().map(|(c, x)| (self.order[c], x.clone())).collect();
            for deg in 1..=max - k {
                for m in self.table.degree_range(deg) {
                    let right = FreeElement::from_terms(
                        terms.iter().map(|(i, c)| Ok((self.table.mul(*i, m)?, c.clone()))).collect::<Result<Vec<_>>>()?,
                    );
                    self.push(&right)?;
                    let left = FreeElement::from_terms(
                        terms.iter().map(|(i, c)| Ok((self.table.mul(m, *i)?, c.clone()))).collect::<Result<Vec<_>>>()?,
                    );
                    self.push(&left)?;
                }
            }
        }
        Ok(())
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::lts::catalog;

    fn s2(n: usize) -> EnvelopingAlgebra {
        EnvelopingAlgebra::build(&catalog::s2(), n).unwrap()
    }

    #[test]
    fn exponent_order() {
        assert_eq!(exponent_vectors(2, 2), vec![vec![2, 0], vec![1, 1], vec![0, 2]]);
        assert_eq!(exponent_vectors(3, 1), vec![vec![1, 0, 0], vec![0, 1, 0], vec![0, 0, 1]]);
    }

    #[test]
    fn s2_quotient_dims() {
        let u = s2(4);
        assert_eq!(u.quotient_dims(), &[1, 2, 3, 4, 5]);
        assert_eq!(u.nf_count(), 15);
        assert_eq!(u.relation_dim(), u.table().len() - 15);
    }

    #[test]
    fn abelian_gives_symmetric_algebra() {
        let u = EnvelopingAlgebra::build(&TripleSystem::abelian(2), 4).unwrap();
        assert_eq!(u.quotient_dims(), &[1, 2, 3, 4, 5]);
        let e = u.generator(0);
        let f = u.generator(1);
        let ef = u.mul(&e, &f).unwrap();
        assert!(u.associator(&e, &f, &e).unwrap().is_zero());
        assert_eq!(u.mul(&ef, &e).unwrap(), u.mul(&u.power(0, 2).unwrap(), &f).unwrap());
    }

    #[test]
    fn reduce_examples() {
        let u = s2(4);
        let fe = u.parse("f*e").unwrap();
        assert_eq!(fe, Element::basis(u.nf_index(&[1, 1]).unwrap()));
        assert!(u.parse("(e*e)*f - e*(e*f)").unwrap().is_zero());
        for r in relators(u.triple_system(), u.table()).unwrap() {
            assert!(u.reduce(&r).unwrap().is_zero());
            assert!(u.in_relations(&r).unwrap());
        }
    }

    #[test]
    fn associator_examples() {
        let u = s2(6);
        let (e, f) = (u.generator(0), u.generator(1));
        assert_eq!(u.associator(&e, &f, &e).unwrap(), e.scale(&-Scalar::one()));
        assert!(u.associator(&e, &e, &f).unwrap().is_zero());
        let e2 = u.power(0, 2).unwrap();
        assert_eq!(u.associator(&e2, &f, &e).unwrap(), e2.scale(&Scalar::from_int(-2)));
        assert_eq!(u.mul(&e2, &u.power(0, 3).unwrap()).unwrap(), u.power(0, 5).unwrap());
        assert_eq!(u.mul(&e, &f).unwrap(), u.mul(&f, &e).unwrap());
        assert!(u.mul(&u.power(0, 4).unwrap(), &e2.add(&e)).is_ok());
        assert!(matches!(u.mul(&u.power(0, 4).unwrap(), &u.power(0, 3).unwrap()), Err(Error::DegreeBudgetExceeded { .. })));
    }

    #[test]
    fn format_and_parse() {
        let u = s2(4);
        let x = u.parse("3 - e*f + 1/2*e^2*f").unwrap();
        assert_eq!(u.format(&x), "3 - e*f + 1/2*(e^2*f)");
        assert_eq!(u.parse(&u.format(&x)).unwrap(), x);
    }

    #[test]
    fn invalid_inputs() {
        let bad = TripleSystem::new(
            "bad",
            vec!["e".into(), "f".into()],
            [([0, 1, 0], vec![(0, Scalar::from_int(2))])],
        )
        .unwrap();
        assert!(matches!(EnvelopingAlgebra::build(&bad, 3), Err(Error::InvalidTripleSystem(_))));
        assert!(matches!(
            EnvelopingAlgebra::build_with_limit(&catalog::s2(), 6, 1000),
            Err(Error::SizeGuard { .. })
        ));
    }

    #[test]
    fn left_multiplication_matrix() {
        let u = s2(4);
        let l1 = u.left_mult_operator(&Element::one()).unwrap();
        assert_eq!(l1, Matrix::identity(u.nf_count()));
        let le = u.left_mult_operator(&u.generator(0)).unwrap();
        assert_eq!(le.cols(), u.up_to_degree(3).len());
        let le2 = u.left_mult_operator(&u.power(0, 2).unwrap()).unwrap();
        for j in u.up_to_degree(2) {
            let once = u.mul(&u.generator(0), &Element::basis(j)).unwrap();
            let twice = u.mul(&u.generator(0), &once).unwrap();
            let col: Vec<Scalar> = le2.column(j);
            assert_eq!(u.from_vector(&SparseVector::from_dense(&col)), twice);
        }
    }
}
