//! Canonical reduced row-echelon subspaces.
//!
//! Elimination always pivots on the lowest-index nonzero column, so the
//! reduced basis of a span does not depend on the order the spanning vectors
//! arrive in. Callers that want a different elimination priority permute
//! their coordinates before handing vectors over.

use std::collections::BTreeMap;

use super::{Scalar, SparseVector};
use crate::error::{Error, Result};

/// Incremental row-echelon form.
///
/// Rows are stored normalized (pivot entry 1, pivot = first nonzero column)
/// but are not back-substituted until [`EchelonBuilder::finish`]. Once
/// inserted a row is never modified, which lets closure algorithms treat the
/// returned rows as a stable work list.
#[derive(Clone, Debug)]
pub struct EchelonBuilder {
    dim: usize,
    rows: Vec<SparseVector>,
    pivot_row: Vec<Option<usize>>,
}

impl EchelonBuilder {
    pub fn new(dim: usize) -> Self {
        Self { dim, rows: Vec::new(), pivot_row: vec![None; dim] }
    }

    pub fn dim(&self) -> usize {
        self.dim
    }

    pub fn rank(&self) -> usize {
        self.rows.len()
    }

    pub fn rows(&self) -> &[SparseVector] {
        &self.rows
    }

    pub fn is_pivot(&self, col: usize) -> bool {
        self.pivot_row[col].is_some()
    }

    fn check(&self, v: &SparseVector) -> Result<()> {
        if v.dim() != self.dim {
            return Err(Error::DimensionMismatch { expected: self.dim, found: v.dim() });
        }
        Ok(())
    }

    /// Residue of `v` after eliminating every pivot column.
    pub fn reduce(&self, v: &SparseVector) -> Result<SparseVector> {
        self.check(v)?;
        let mut acc: BTreeMap<usize, Scalar> = v.iter().map(|(i, x)| (i, x.clone())).collect();
        let mut out = Vec::new();
        while let Some((col, val)) = acc.pop_first() {
            match self.pivot_row[col] {
                Some(r) => {
                    for (c, x) in self.rows[r].entries().iter().skip(1) {
                        let slot = acc.entry(*c).or_default();
                        *slot -= &val * x;
                        if slot.is_zero() {
                            acc.remove(c);
                        }
                    }
                }
                None => out.push((col, val)),
            }
        }
        Ok(SparseVector::from_sorted_unchecked(self.dim, out))
    }

    /// Adds `v` to the span. Returns the new normalized row when `v` was
    /// independent of the rows already present.
    pub fn insert(&mut self, v: &SparseVector) -> Result<Option<&SparseVector>> {
        let residue = self.reduce(v)?;
        let Some((pivot, lead)) = residue.leading() else {
            return Ok(None);
        };
        let inv = lead.recip().expect("leading entry is nonzero");
        let row = residue.scale(&inv);
        self.pivot_row[pivot] = Some(self.rows.len());
        self.rows.push(row);
        Ok(self.rows.last())
    }

    /// Back-substitutes into the canonical reduced row-echelon form.
    pub fn finish(self) -> Subspace {
        let dim = self.dim;
        let mut order: Vec<usize> = (0..self.rows.len()).collect();
        order.sort_by_key(|&r| self.rows[r].leading().map(|(c, _)| c));
        let mut pivot_of_col: Vec<Option<usize>> = vec![None; dim];
        let mut reduced: Vec<Option<SparseVector>> = vec![None; order.len()];
        // Largest pivot first: every row it depends on is already reduced,
        // and reduced rows never contain another pivot column.
        for (slot, &r) in order.iter().enumerate().rev() {
            let row = &self.rows[r];
            let (pivot, _) = row.leading().expect("stored rows are nonzero");
            let mut acc: BTreeMap<usize, Scalar> = row.iter().skip(1).map(|(i, x)| (i, x.clone())).collect();
            let cols: Vec<usize> = acc.keys().copied().filter(|c| pivot_of_col[*c].is_some()).collect();
            for c in cols {
                let Some(val) = acc.remove(&c) else { continue };
                let other = reduced[pivot_of_col[c].unwrap()].as_ref().unwrap();
                for (k, x) in other.iter().skip(1) {
                    let e = acc.entry(k).or_default();
                    *e -= &val * x;
                    if e.is_zero() {
                        acc.remove(&k);
                    }
                }
            }
            let mut entries = Vec::with_capacity(acc.len() + 1);
            entries.push((pivot, Scalar::one()));
            entries.extend(acc.into_iter().filter(|(_, v)| !v.is_zero()));
            reduced[slot] = Some(SparseVector::from_sorted_unchecked(dim, entries));
            pivot_of_col[pivot] = Some(slot);
        }
        let rows: Vec<SparseVector> = reduced.into_iter().map(Option::unwrap).collect();
        let pivots = rows.iter().map(|r| r.leading().unwrap().0).collect();
        Subspace { dim, rows, pivots }
    }
}

/// A linear subspace of `Q^dim` held in reduced row-echelon form.
#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub struct Subspace {
    dim: usize,
    rows: Vec<SparseVector>,
    pivots: Vec<usize>,
}

impl Subspace {
    pub fn zero(dim: usize) -> Self {
        Self { dim, rows: Vec::new(), pivots: Vec::new() }
    }

    pub fn full(dim: usize) -> Self {
        Self {
            dim,
            rows: (0..dim).map(|i| SparseVector::unit(dim, i)).collect(),
            pivots: (0..dim).collect(),
        }
    }

    /// Reduced row-echelon basis of the span of `vectors`.
    pub fn echelonize<'a, I>(dim: usize, vectors: I) -> Result<Self>
    where
        I: IntoIterator<Item = &'a SparseVector>,
    {
        let mut b = EchelonBuilder::new(dim);
        for v in vectors {
            b.insert(v)?;
        }
        Ok(b.finish())
    }

    /// Span of the coordinate vectors `e_i` for the given indices.
    pub fn coordinate(dim: usize, indices: impl IntoIterator<Item = usize>) -> Result<Self> {
        let units = indices
            .into_iter()
            .map(|i| SparseVector::from_entries(dim, [(i, Scalar::one())]))
            .collect::<Result<Vec<_>>>()?;
        Self::echelonize(dim, &units)
    }

    /// Ambient dimension.
    pub fn ambient_dim(&self) -> usize {
        self.dim
    }

    /// Dimension of the subspace.
    pub fn dim(&self) -> usize {
        self.rows.len()
    }

    pub fn rows(&self) -> &[SparseVector] {
        &self.rows
    }

    pub fn pivots(&self) -> &[usize] {
        &self.pivots
    }

    fn check(&self, v: &SparseVector) -> Result<()> {
        if v.dim() != self.dim {
            return Err(Error::DimensionMismatch { expected: self.dim, found: v.dim() });
        }
        Ok(())
    }

    /// What is left of `v` after subtracting its projection along the pivots.
    pub fn residue(&self, v: &SparseVector) -> Result<SparseVector> {
        self.check(v)?;
        let mut out = v.clone();
        for (row, &p) in self.rows.iter().zip(&self.pivots) {
            let c = out.get(p);
            if !c.is_zero() {
                out = out.axpy(&-c, row)?;
            }
        }
        Ok(out)
    }

    pub fn member(&self, v: &SparseVector) -> Result<bool> {
        Ok(self.residue(v)?.is_zero())
    }

    /// Coefficients of `v` on the echelon rows, `None` when `v` is outside.
    pub fn coordinates(&self, v: &SparseVector) -> Result<Option<Vec<Scalar>>> {
        if !self.member(v)? {
            return Ok(None);
        }
        Ok(Some(self.pivots.iter().map(|&p| v.get(p)).collect()))
    }

    pub fn contains(&self, other: &Subspace) -> Result<bool> {
        for r in &other.rows {
            if !self.member(r)? {
                return Ok(false);
            }
        }
        Ok(true)
    }

    pub fn sum(&self, other: &Subspace) -> Result<Subspace> {
        if other.dim != self.dim {
            return Err(Error::DimensionMismatch { expected: self.dim, found: other.dim });
        }
        Self::echelonize(self.dim, self.rows.iter().chain(&other.rows))
    }

    /// Zassenhaus intersection.
    pub fn intersection(&self, other: &Subspace) -> Result<Subspace> {
        if other.dim != self.dim {
            return Err(Error::DimensionMismatch { expected: self.dim, found: other.dim });
        }
        let n = self.dim;
        let mut b = EchelonBuilder::new(2 * n);
        for r in &self.rows {
            let doubled = r.embed(2 * n, 0)?.add(&r.embed(2 * n, n)?)?;
            b.insert(&doubled)?;
        }
        for r in &other.rows {
            b.insert(&r.embed(2 * n, 0)?)?;
        }
        let full = b.finish();
        let tails: Vec<SparseVector> = full
            .rows
            .iter()
            .zip(&full.pivots)
            .filter(|(_, &p)| p >= n)
            .map(|(r, _)| r.slice(n, n))
            .collect();
        Self::echelonize(n, &tails)
    }
}

/// Null space of the linear map sending `e_i` to `images[i]` (all images in
/// `Q^codomain`).
pub fn kernel(codomain: usize, images: &[SparseVector]) -> Result<Subspace> {
    let n = images.len();
    let mut b = EchelonBuilder::new(codomain + n);
    for (i, img) in images.iter().enumerate() {
        if img.dim() != codomain {
            return Err(Error::DimensionMismatch { expected: codomain, found: img.dim() });
        }
        let mut entries: Vec<(usize, Scalar)> = img.iter().map(|(c, x)| (c, x.clone())).collect();
        entries.push((codomain + i, Scalar::one()));
        b.insert(&SparseVector::from_sorted_unchecked(codomain + n, entries))?;
    }
    let full = b.finish();
    let tails: Vec<SparseVector> = full
        .rows
        .iter()
        .zip(&full.pivots)
        .filter(|(_, &p)| p >= codomain)
        .map(|(r, _)| r.slice(codomain, n))
        .collect();
    Subspace::echelonize(n, &tails)
}

/// Coefficients `c` with `sum c_i generators[i] = target`, or `None` when
/// `target` lies outside the span. With dependent generators one solution is
/// returned.
pub fn solve_combination(dim: usize, generators: &[SparseVector], target: &SparseVector) -> Result<Option<Vec<Scalar>>> {
    let k = generators.len();
    let total = dim + k;
    let mut b = EchelonBuilder::new(total);
    for (i, g) in generators.iter().enumerate() {
        if g.dim() != dim {
            return Err(Error::DimensionMismatch { expected: dim, found: g.dim() });
        }
        let mut entries: Vec<(usize, Scalar)> = g.iter().map(|(c, x)| (c, x.clone())).collect();
        entries.push((dim + i, Scalar::one()));
        b.insert(&SparseVector::from_sorted_unchecked(total, entries))?;
    }
    if target.dim() != dim {
        return Err(Error::DimensionMismatch { expected: dim, found: target.dim() });
    }
    let residue = b.reduce(&target.embed(total, 0)?)?;
    if residue.iter().any(|(c, _)| c < dim) {
        return Ok(None);
    }
    let mut coeffs = vec![Scalar::zero(); k];
    for (c, x) in residue.iter() {
        coeffs[c - dim] = -x;
    }
    Ok(Some(coeffs))
}
