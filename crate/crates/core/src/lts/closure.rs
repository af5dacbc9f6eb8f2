//! Lie and associative closures of sets of maps, and the checks built on
//! them: whether the right multiplications generate all of `End(T)`, and a
//! Burnside-style irreducibility certificate.

use super::TripleSystem;
use crate::error::{Error, Result};
use crate::exactlin::{mat_bracket, EchelonBuilder, Matrix, SparseVector, Subspace};

fn check_square(gens: &[Matrix]) -> Result<usize> {
    let n = gens.first().map_or(0, Matrix::rows);
    for g in gens {
        if !g.is_square() || g.rows() != n {
            return Err(Error::DimensionMismatch { expected: n, found: g.rows() });
        }
    }
    Ok(n)
}

/// Fixpoint closure of `span(gens)` under a bilinear product.
fn closure_under<F>(gens: &[Matrix], n: usize, mut product: F) -> Result<Subspace>
where
    F: FnMut(&Matrix, &Matrix) -> Result<Vec<Matrix>>,
{
    let mut builder = EchelonBuilder::new(n * n);
    let mut elems: Vec<Matrix> = Vec::new();
    for g in gens {
        if let Some(row) = builder.insert(&g.to_vector())? {
            elems.push(Matrix::from_vector(n, n, row)?);
        }
    }
    // Each element meets every earlier one when it is processed.
    let mut next = 0;
    while next < elems.len() {
        for j in 0..=next {
            for p in product(&elems[next], &elems[j])? {
                if let Some(row) = builder.insert(&p.to_vector())? {
                    let m = Matrix::from_vector(n, n, row)?;
                    elems.push(m);
                }
            }
        }
        next += 1;
    }
    Ok(builder.finish())
}

/// Smallest commutator-closed subspace containing `gens`, as flattened
/// `n x n` matrices.
pub fn lie_closure(gens: &[Matrix]) -> Result<Subspace> {
    let n = check_square(gens)?;
    closure_under(gens, n, |a, b| Ok(vec![mat_bracket(a, b)?]))
}

/// Smallest product-closed subspace containing `gens`.
pub fn associative_envelope(gens: &[Matrix]) -> Result<Subspace> {
    let n = check_square(gens)?;
    closure_under(gens, n, |a, b| Ok(vec![a.mul(b)?, b.mul(a)?]))
}

/// Dimension of the Lie algebra generated by all `R_{b_i, b_j}`.
pub fn endo_closure_dim(t: &TripleSystem) -> Result<usize> {
    if t.dim() == 0 {
        return Ok(0);
    }
    Ok(lie_closure(&t.basis_r_ops())?.dim())
}

/// Whether the maps `R_{a,b}` generate `End(T)` as a Lie algebra.
pub fn endo_theorem_check(t: &TripleSystem) -> Result<bool> {
    let d = t.dim();
    Ok(d > 0 && endo_closure_dim(t)? == d * d)
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub enum Simplicity {
    /// The associative envelope of the `R` maps is all of `End(T)` and the
    /// product is nonzero.
    Simple,
    /// Either the product vanishes or a proper nonzero invariant subspace
    /// (an ideal) was found.
    NotSimple { reason: String, witness: Option<Subspace> },
    /// The envelope is proper over Q but no invariant subspace was found.
    Inconclusive,
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct SimplicityReport {
    pub envelope_dim: usize,
    pub full_dim: usize,
    pub nonzero_product: bool,
    pub verdict: Simplicity,
}

impl SimplicityReport {
    pub fn is_simple(&self) -> bool {
        self.verdict == Simplicity::Simple
    }
}

/// Ideals of `T` are exactly the subspaces invariant under every
/// `R_{b,c}`, so an irreducible action (envelope = `End(T)`) together with a
/// nonzero product certifies simplicity.
pub fn simplicity_certificate(t: &TripleSystem) -> Result<SimplicityReport> {
    let d = t.dim();
    let nonzero_product = t.has_nonzero_product();
    let full_dim = d * d;
    if d == 0 {
        return Ok(SimplicityReport {
            envelope_dim: 0,
            full_dim,
            nonzero_product,
            verdict: Simplicity::NotSimple { reason: "zero-dimensional".into(), witness: None },
        });
    }
    let env = associative_envelope(&t.basis_r_ops())?;
    let envelope_dim = env.dim();
    let verdict = if !nonzero_product {
        Simplicity::NotSimple { reason: "triple product vanishes identically".into(), witness: None }
    } else if envelope_dim == full_dim {
        Simplicity::Simple
    } else {
        match invariant_subspace_witness(t, &env)? {
            Some(w) => Simplicity::NotSimple { reason: "proper invariant subspace".into(), witness: Some(w) },
            None => Simplicity::Inconclusive,
        }
    };
    Ok(SimplicityReport { envelope_dim, full_dim, nonzero_product, verdict })
}

/// Looks for a proper nonzero subspace `F b_i + A b_i` with `A` the envelope.
fn invariant_subspace_witness(t: &TripleSystem, env: &Subspace) -> Result<Option<Subspace>> {
    let d = t.dim();
    let maps: Vec<Matrix> = env.rows().iter().map(|r| Matrix::from_vector(d, d, r)).collect::<Result<_>>()?;
    for i in 0..d {
        let b = t.basis_vector(i);
        let mut vecs = vec![SparseVector::from_dense(&b)];
        for m in &maps {
            vecs.push(SparseVector::from_dense(&m.apply(&b)?));
        }
        let orbit = Subspace::echelonize(d, &vecs)?;
        if orbit.dim() < d {
            return Ok(Some(orbit));
        }
    }
    Ok(None)
}

#[cfg(test)]
mod tests {
    use super::super::catalog;
    use super::*;

    #[test]
    fn s2_right_maps_generate_gl2() {
        assert_eq!(endo_closure_dim(&catalog::s2()).unwrap(), 4);
        assert!(endo_theorem_check(&catalog::s2()).unwrap());
    }

    #[test]
    fn nilpotent_singleton() {
        let n = Matrix::from_ints(&[&[0, 1], &[0, 0]]).unwrap();
        assert_eq!(lie_closure(&[n]).unwrap().dim(), 1);
    }

    #[test]
    fn closure_is_monotone_and_idempotent() {
        let r = catalog::s2().basis_r_ops();
        let small = lie_closure(&r[..2]).unwrap();
        let big = lie_closure(&r).unwrap();
        assert!(big.contains(&small).unwrap());
        let again: Vec<Matrix> = big.rows().iter().map(|v| Matrix::from_vector(2, 2, v).unwrap()).collect();
        assert_eq!(lie_closure(&again).unwrap(), big);
    }

    #[test]
    fn negatives() {
        assert!(!endo_theorem_check(&TripleSystem::abelian(3)).unwrap());
        assert!(!endo_theorem_check(&catalog::s2_pair()).unwrap());
        assert!(lie_closure(&[Matrix::identity(2), Matrix::identity(3)]).is_err());
    }

    #[test]
    fn certificates() {
        let s2 = simplicity_certificate(&catalog::s2()).unwrap();
        assert!(s2.is_simple());
        assert_eq!(s2.envelope_dim, 4);
        let ab = simplicity_certificate(&TripleSystem::abelian(2)).unwrap();
        assert!(matches!(ab.verdict, Simplicity::NotSimple { .. }));
        let pair = simplicity_certificate(&catalog::s2_pair()).unwrap();
        assert!(pair.envelope_dim < 16);
        match pair.verdict {
            Simplicity::NotSimple { witness: Some(w), .. } => assert_eq!(w.dim(), 2),
            other => panic!("unexpected verdict {other:?}"),
        }
    }
}
