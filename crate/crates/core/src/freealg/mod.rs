//! The free unital magma algebra on `d` generators, truncated at degree `N`.
//!
//! Monomials are binary trees over the generators. A [`MonomialTable`] gives
//! every tree of degree at most `N` a dense index: index 0 is the empty
//! product, degree-1 indices follow the generators, and each higher degree
//! is laid out block by block as `(degree of left factor, left index, right
//! index)`. Products of indexed monomials are computed in closed form from
//! that layout.

mod parse;

use std::collections::BTreeMap;
use std::fmt;

use crate::error::{Error, Result};
use crate::exactlin::Scalar;

pub use parse::{format, format_monomial, format_terms, parse};

/// Default upper bound on the number of indexed monomials.
pub const DEFAULT_MAX_MONOMIALS: usize = 200_000;

/// A nonassociative word.
#[derive(Clone, Debug, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub enum Tree {
    Leaf(usize),
    Node(Box<Tree>, Box<Tree>),
}

impl Tree {
    pub fn leaf(g: usize) -> Self {
        Tree::Leaf(g)
    }

    pub fn node(left: Tree, right: Tree) -> Self {
        Tree::Node(Box::new(left), Box::new(right))
    }

    /// `((g g) g) ...` with `n >= 1` leaves.
    pub fn power(g: usize, n: usize) -> Self {
        assert!(n >= 1, "a power tree needs at least one leaf");
        let mut t = Tree::Leaf(g);
        for _ in 1..n {
            t = Tree::node(t, Tree::Leaf(g));
        }
        t
    }

    pub fn degree(&self) -> usize {
        match self {
            Tree::Leaf(_) => 1,
            Tree::Node(l, r) => l.degree() + r.degree(),
        }
    }

    /// The generator `g` if this is a left-nested power `g^n`, `n >= 1`.
    pub fn as_power(&self) -> Option<(usize, usize)> {
        match self {
            Tree::Leaf(g) => Some((*g, 1)),
            Tree::Node(l, r) => match (l.as_power(), r.as_ref()) {
                (Some((g, n)), Tree::Leaf(h)) if g == *h => Some((g, n + 1)),
                _ => None,
            },
        }
    }

    /// Generator indices from left to right.
    pub fn leaves(&self) -> Vec<usize> {
        let mut out = Vec::with_capacity(self.degree());
        self.collect_leaves(&mut out);
        out
    }

    fn collect_leaves(&self, out: &mut Vec<usize>) {
        match self {
            Tree::Leaf(g) => out.push(*g),
            Tree::Node(l, r) => {
                l.collect_leaves(out);
                r.collect_leaves(out);
            }
        }
    }
}

impl fmt::Display for Tree {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            Tree::Leaf(g) => write!(f, "x{g}"),
            Tree::Node(l, r) => write!(f, "({l} {r})"),
        }
    }
}

/// `Catalan(n - 1) * d^n` as an exact count, saturating.
pub fn free_count(d: usize, n: usize) -> u128 {
    if n == 0 {
        return 1;
    }
    let mut catalan: u128 = 1;
    for k in 0..(n - 1) as u128 {
        catalan = catalan * 2 * (2 * k + 1) / (k + 2);
    }
    (d as u128).checked_pow(n as u32).and_then(|p| p.checked_mul(catalan)).unwrap_or(u128::MAX)
}

/// Dense indexing of all monomials of degree at most `N`.
#[derive(Clone, Debug)]
pub struct MonomialTable {
    d: usize,
    max_degree: usize,
    /// `starts[n]` is the first index of degree `n`; `starts[N + 1]` is the size.
    starts: Vec<usize>,
    /// `split_starts[n][p]`: first index of degree `n` whose left factor has degree `p`.
    split_starts: Vec<Vec<usize>>,
    /// Factors of each index of degree at least 2.
    factors: Vec<(u32, u32)>,
}

impl MonomialTable {
    /// Enumerates all monomials with the default size guard.
    pub fn enumerate(d: usize, max_degree: usize) -> Result<Self> {
        Self::enumerate_with_limit(d, max_degree, DEFAULT_MAX_MONOMIALS)
    }

    pub fn enumerate_with_limit(d: usize, max_degree: usize, limit: usize) -> Result<Self> {
        if d == 0 {
            return Err(Error::Precondition("the free algebra needs at least one generator".into()));
        }
        let total: u128 = (0..=max_degree).fold(0u128, |acc, n| acc.saturating_add(free_count(d, n)));
        if total > limit as u128 || total > u32::MAX as u128 {
            return Err(Error::SizeGuard { count: total, limit });
        }
        let counts: Vec<usize> = (0..=max_degree).map(|n| free_count(d, n) as usize).collect();
        let mut starts = vec![0usize; max_degree + 2];
        for n in 0..=max_degree {
            starts[n + 1] = starts[n] + counts[n];
        }
        let mut split_starts = vec![Vec::new(); max_degree + 1];
        let mut factors = vec![(0u32, 0u32); starts[max_degree + 1]];
        for n in 2..=max_degree {
            let mut idx = starts[n];
            let mut splits = vec![0usize; n];
            for p in 1..n {
                splits[p] = idx;
                let q = n - p;
                for l in starts[p]..starts[p + 1] {
                    for r in starts[q]..starts[q + 1] {
                        factors[idx] = (l as u32, r as u32);
                        idx += 1;
                    }
                }
            }
            debug_assert_eq!(idx, starts[n + 1]);
            split_starts[n] = splits;
        }
        Ok(Self { d, max_degree, starts, split_starts, factors })
    }

    pub fn generators(&self) -> usize {
        self.d
    }

    pub fn max_degree(&self) -> usize {
        self.max_degree
    }

    /// Total number of indexed monomials, including the empty product.
    pub fn len(&self) -> usize {
        self.starts[self.max_degree + 1]
    }

    pub fn is_empty(&self) -> bool {
        false
    }

    /// Number of monomials of exactly degree `n`.
    pub fn count(&self, n: usize) -> usize {
        self.starts[n + 1] - self.starts[n]
    }

    /// Index range of degree `n`.
    pub fn degree_range(&self, n: usize) -> std::ops::Range<usize> {
        self.starts[n]..self.starts[n + 1]
    }

    pub fn unit(&self) -> usize {
        0
    }

    pub fn generator(&self, g: usize) -> usize {
        assert!(g < self.d, "generator out of range");
        1 + g
    }

    pub fn degree(&self, idx: usize) -> usize {
        self.starts.partition_point(|&s| s <= idx) - 1
    }

    /// Left and right factor of an index of degree at least 2.
    pub fn factors(&self, idx: usize) -> Option<(usize, usize)> {
        if idx <= self.d {
            None
        } else {
            let (l, r) = self.factors[idx];
            Some((l as usize, r as usize))
        }
    }

    /// Index of the product of two indexed monomials, treating 0 as the unit.
    pub fn mul(&self, a: usize, b: usize) -> Result<usize> {
        let (p, q) = (self.degree(a), self.degree(b));
        if p + q > self.max_degree {
            return Err(Error::DegreeBudgetExceeded { needed: p + q, cap: self.max_degree });
        }
        if p == 0 {
            return Ok(b);
        }
        if q == 0 {
            return Ok(a);
        }
        let base = self.split_starts[p + q][p];
        Ok(base + (a - self.starts[p]) * self.count(q) + (b - self.starts[q]))
    }

    pub fn tree(&self, idx: usize) -> Option<Tree> {
        match idx {
            0 => None,
            i if i <= self.d => Some(Tree::Leaf(i - 1)),
            i => {
                let (l, r) = self.factors[i];
                Some(Tree::node(self.tree(l as usize)?, self.tree(r as usize)?))
            }
        }
    }

    pub fn index_of(&self, tree: &Tree) -> Result<usize> {
        match tree {
            Tree::Leaf(g) if *g < self.d => Ok(1 + g),
            Tree::Leaf(g) => Err(Error::IndexOutOfRange { index: *g, dim: self.d }),
            Tree::Node(l, r) => {
                let (a, b) = (self.index_of(l)?, self.index_of(r)?);
                self.mul(a, b)
            }
        }
    }

    /// Index of `g^n`, left-nested; `g^0` is the unit.
    pub fn power(&self, g: usize, n: usize) -> Result<usize> {
        let mut idx = 0;
        for _ in 0..n {
            idx = self.mul(idx, self.generator(g))?;
        }
        Ok(idx)
    }

    /// Coproduct of a monomial under `b -> b⊗1 + 1⊗b`, extended
    /// multiplicatively. Terms are pairs of indices with multiplicities.
    pub fn coproduct(&self, idx: usize) -> BTreeMap<(usize, usize), u64> {
        let mut out = BTreeMap::new();
        match self.factors(idx) {
            None if idx == 0 => {
                out.insert((0, 0), 1);
            }
            None => {
                out.insert((idx, 0), 1);
                out.insert((0, idx), 1);
            }
            Some((l, r)) => {
                let (dl, dr) = (self.coproduct(l), self.coproduct(r));
                for (&(l1, l2), &m) in &dl {
                    for (&(r1, r2), &n) in &dr {
                        let a = self.mul(l1, r1).expect("legs fit inside the parent degree");
                        let b = self.mul(l2, r2).expect("legs fit inside the parent degree");
                        *out.entry((a, b)).or_insert(0) += m * n;
                    }
                }
            }
        }
        out
    }
}

/// A finite linear combination of indexed monomials.
#[derive(Clone, Debug, Default, PartialEq, Eq, Hash)]
pub struct FreeElement {
    terms: BTreeMap<usize, Scalar>,
}

impl FreeElement {
    pub fn zero() -> Self {
        Self::default()
    }

    pub fn one() -> Self {
        Self::monomial(0)
    }

    pub fn monomial(idx: usize) -> Self {
        Self::term(idx, Scalar::one())
    }

    pub fn term(idx: usize, c: Scalar) -> Self {
        let mut terms = BTreeMap::new();
        if !c.is_zero() {
            terms.insert(idx, c);
        }
        Self { terms }
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

    /// Highest degree present, `None` for zero.
    pub fn degree(&self, table: &MonomialTable) -> Option<usize> {
        self.terms.keys().map(|&i| table.degree(i)).max()
    }
}

/// Product in the free algebra. Fails when the degrees overflow the table.
pub fn fmul(table: &MonomialTable, x: &FreeElement, y: &FreeElement) -> Result<FreeElement> {
    let (dx, dy) = (x.degree(table).unwrap_or(0), y.degree(table).unwrap_or(0));
    if dx + dy > table.max_degree() {
        return Err(Error::DegreeBudgetExceeded { needed: dx + dy, cap: table.max_degree() });
    }
    let mut out = FreeElement::zero();
    for (&i, a) in &x.terms {
        for (&j, b) in &y.terms {
            out.add_term(table.mul(i, j)?, &(a * b));
        }
    }
    Ok(out)
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn catalan_counts() {
        let t = MonomialTable::enumerate(2, 6).unwrap();
        let counts: Vec<usize> = (0..=6).map(|n| t.count(n)).collect();
        assert_eq!(counts, vec![1, 2, 4, 16, 80, 448, 2688]);
        assert_eq!(t.len(), 3239);
        assert_eq!(MonomialTable::enumerate(3, 4).unwrap().count(4), 405);
        assert_eq!(free_count(1, 5), 14);
    }

    #[test]
    fn size_guard() {
        assert!(matches!(MonomialTable::enumerate_with_limit(2, 6, 3000), Err(Error::SizeGuard { count: 3239, .. })));
        assert!(MonomialTable::enumerate(0, 3).is_err());
    }

    #[test]
    fn tree_round_trip_and_order() {
        let t = MonomialTable::enumerate(2, 5).unwrap();
        let mut prev: Option<(usize, Tree)> = None;
        for idx in 1..t.len() {
            let tree = t.tree(idx).unwrap();
            assert_eq!(t.index_of(&tree).unwrap(), idx);
            assert_eq!(tree.degree(), t.degree(idx));
            if let Some((pi, pt)) = &prev {
                assert!(*pi < idx);
                if pt.degree() == tree.degree() {
                    assert!(serial(pt) < serial(&tree));
                }
            }
            prev = Some((idx, tree));
        }
    }

    fn serial(t: &Tree) -> Vec<usize> {
        match t {
            Tree::Leaf(g) => vec![*g],
            Tree::Node(l, r) => {
                let mut v = vec![l.degree()];
                v.extend(serial(l));
                v.extend(serial(r));
                v
            }
        }
    }

    #[test]
    fn products() {
        let t = MonomialTable::enumerate(2, 4).unwrap();
        let (e, f) = (FreeElement::monomial(t.generator(0)), FreeElement::monomial(t.generator(1)));
        assert_eq!(fmul(&t, &FreeElement::one(), &e).unwrap(), e);
        let ef = fmul(&t, &e, &f).unwrap();
        let fe = fmul(&t, &f, &e).unwrap();
        assert_ne!(ef, fe);
        let a = fmul(&t, &e, &ef).unwrap();
        let b = fmul(&t, &fmul(&t, &e, &e).unwrap(), &f).unwrap();
        assert_ne!(a, b);
        let big = fmul(&t, &a, &a);
        assert!(matches!(big, Err(Error::DegreeBudgetExceeded { needed: 6, cap: 4 })));
        assert_eq!(t.tree(t.power(0, 3).unwrap()).unwrap().as_power(), Some((0, 3)));
        assert_eq!(t.power(1, 0).unwrap(), 0);
    }

    #[test]
    fn coproduct_of_square() {
        let t = MonomialTable::enumerate(2, 4).unwrap();
        let e = t.generator(0);
        let ee = t.mul(e, e).unwrap();
        let d = t.coproduct(ee);
        assert_eq!(d.get(&(ee, 0)), Some(&1));
        assert_eq!(d.get(&(e, e)), Some(&2));
        assert_eq!(d.get(&(0, ee)), Some(&1));
        assert_eq!(d.values().sum::<u64>(), 4);
    }
}
