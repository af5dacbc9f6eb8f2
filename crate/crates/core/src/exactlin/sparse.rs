use std::collections::BTreeMap;
use std::fmt;

use super::Scalar;
use crate::error::{Error, Result};

/// A vector of fixed dimension stored as sorted `(index, value)` pairs with
/// no explicit zeros.
#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub struct SparseVector {
    dim: usize,
    entries: Vec<(usize, Scalar)>,
}

impl SparseVector {
    pub fn zero(dim: usize) -> Self {
        Self { dim, entries: Vec::new() }
    }

    pub fn unit(dim: usize, index: usize) -> Self {
        assert!(index < dim, "unit index {index} out of range {dim}");
        Self { dim, entries: vec![(index, Scalar::one())] }
    }

    /// Collects entries, summing duplicates and dropping zeros.
    pub fn from_entries<I>(dim: usize, entries: I) -> Result<Self>
    where
        I: IntoIterator<Item = (usize, Scalar)>,
    {
        let mut acc: BTreeMap<usize, Scalar> = BTreeMap::new();
        for (i, v) in entries {
            if i >= dim {
                return Err(Error::IndexOutOfRange { index: i, dim });
            }
            *acc.entry(i).or_default() += v;
        }
        Ok(Self::from_map(dim, acc))
    }

    pub(crate) fn from_map(dim: usize, map: BTreeMap<usize, Scalar>) -> Self {
        let entries = map.into_iter().filter(|(_, v)| !v.is_zero()).collect();
        Self { dim, entries }
    }

    /// Caller guarantees entries are sorted, in range and nonzero.
    pub(crate) fn from_sorted_unchecked(dim: usize, entries: Vec<(usize, Scalar)>) -> Self {
        debug_assert!(entries.windows(2).all(|w| w[0].0 < w[1].0));
        debug_assert!(entries.iter().all(|(i, v)| *i < dim && !v.is_zero()));
        Self { dim, entries }
    }

    pub fn from_dense(values: &[Scalar]) -> Self {
        let entries = values
            .iter()
            .enumerate()
            .filter(|(_, v)| !v.is_zero())
            .map(|(i, v)| (i, v.clone()))
            .collect();
        Self { dim: values.len(), entries }
    }

    pub fn to_dense(&self) -> Vec<Scalar> {
        let mut out = vec![Scalar::zero(); self.dim];
        for (i, v) in &self.entries {
            out[*i] = v.clone();
        }
        out
    }

    pub fn dim(&self) -> usize {
        self.dim
    }

    pub fn nnz(&self) -> usize {
        self.entries.len()
    }

    pub fn is_zero(&self) -> bool {
        self.entries.is_empty()
    }

    pub fn entries(&self) -> &[(usize, Scalar)] {
        &self.entries
    }

    pub fn iter(&self) -> impl Iterator<Item = (usize, &Scalar)> + '_ {
        self.entries.iter().map(|(i, v)| (*i, v))
    }

    pub fn get(&self, index: usize) -> Scalar {
        match self.entries.binary_search_by_key(&index, |(i, _)| *i) {
            Ok(pos) => self.entries[pos].1.clone(),
            Err(_) => Scalar::zero(),
        }
    }

    /// Lowest index carrying a nonzero entry.
    pub fn leading(&self) -> Option<(usize, &Scalar)> {
        self.entries.first().map(|(i, v)| (*i, v))
    }

    pub fn scale(&self, c: &Scalar) -> Self {
        if c.is_zero() {
            return Self::zero(self.dim);
        }
        Self {
            dim: self.dim,
            entries: self.entries.iter().map(|(i, v)| (*i, v * c)).collect(),
        }
    }

    pub fn neg(&self) -> Self {
        Self {
            dim: self.dim,
            entries: self.entries.iter().map(|(i, v)| (*i, -v)).collect(),
        }
    }

    fn check_dim(&self, other: &Self) -> Result<()> {
        if self.dim != other.dim {
            return Err(Error::DimensionMismatch { expected: self.dim, found: other.dim });
        }
        Ok(())
    }

    /// `self + c * other`, merging the sorted supports.
    pub fn axpy(&self, c: &Scalar, other: &Self) -> Result<Self> {
        self.check_dim(other)?;
        if c.is_zero() {
            return Ok(self.clone());
        }
        let mut out = Vec::with_capacity(self.entries.len() + other.entries.len());
        let (mut a, mut b) = (self.entries.iter().peekable(), other.entries.iter().peekable());
        loop {
            match (a.peek(), b.peek()) {
                (Some((i, x)), Some((j, y))) => {
                    if i < j {
                        out.push((*i, x.clone()));
                        a.next();
                    } else if j < i {
                        out.push((*j, c * y));
                        b.next();
                    } else {
                        let s = x + &(c * y);
                        if !s.is_zero() {
                            out.push((*i, s));
                        }
                        a.next();
                        b.next();
                    }
                }
                (Some((i, x)), None) => {
                    out.push((*i, x.clone()));
                    a.next();
                }
                (None, Some((j, y))) => {
                    out.push((*j, c * y));
                    b.next();
                }
                (None, None) => break,
            }
        }
        Ok(Self { dim: self.dim, entries: out })
    }

    pub fn add(&self, other: &Self) -> Result<Self> {
        self.axpy(&Scalar::one(), other)
    }

    pub fn sub(&self, other: &Self) -> Result<Self> {
        self.axpy(&-Scalar::one(), other)
    }

    pub fn dot(&self, other: &Self) -> Result<Scalar> {
        self.check_dim(other)?;
        let mut acc = Scalar::zero();
        let (mut a, mut b) = (self.entries.iter().peekable(), other.entries.iter().peekable());
        while let (Some((i, x)), Some((j, y))) = (a.peek(), b.peek()) {
            if i < j {
                a.next();
            } else if j < i {
                b.next();
            } else {
                acc += x * y;
                a.next();
                b.next();
            }
        }
        Ok(acc)
    }

    /// Reindexes into a larger ambient space, shifting every index by `offset`.
    pub fn embed(&self, dim: usize, offset: usize) -> Result<Self> {
        if offset + self.dim > dim {
            return Err(Error::DimensionMismatch { expected: dim, found: offset + self.dim });
        }
        Ok(Self {
            dim,
            entries: self.entries.iter().map(|(i, v)| (i + offset, v.clone())).collect(),
        })
    }

    /// The coordinates in `start..start + len`, reindexed from zero.
    pub fn slice(&self, start: usize, len: usize) -> Self {
        Self {
            dim: len,
            entries: self
                .entries
                .iter()
                .filter(|(i, _)| *i >= start && *i < start + len)
                .map(|(i, v)| (i - start, v.clone()))
                .collect(),
        }
    }
}

impl fmt::Display for SparseVector {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "(")?;
        for (k, v) in self.to_dense().iter().enumerate() {
            if k > 0 {
                write!(f, ", ")?;
            }
            write!(f, "{v}")?;
        }
        write!(f, ")")
    }
}
