//! Inner derivations, the standard embedding Lie algebra `InnDer(T) ⊕ T`,
//! its Killing form, and the rank-one maps built from that form.

use super::{LieAlgebra, Operator, OperatorKind, TripleSystem};
use crate::error::{Error, Result};
use crate::exactlin::{kernel, mat_bracket, Matrix, Scalar, SparseVector, Subspace};

/// The span of all `D_{b_i, b_j}`.
#[derive(Clone, Debug)]
pub struct InnerDerivations {
    /// Echelon basis, as `d x d` matrices.
    pub basis: Vec<Matrix>,
    /// The same basis as flattened row-major vectors.
    pub span: Subspace,
}

impl InnerDerivations {
    pub fn dim(&self) -> usize {
        self.basis.len()
    }

    /// Coordinates of a map in [`InnerDerivations::basis`].
    pub fn coordinates(&self, m: &Matrix) -> Result<Option<Vec<Scalar>>> {
        self.span.coordinates(&m.to_vector())
    }
}

/// Spans the inner derivations and checks that the span is a Lie algebra of
/// derivations of the triple product.
pub fn inner_derivations(t: &TripleSystem) -> Result<InnerDerivations> {
    let d = t.dim();
    let mut gens = Vec::with_capacity(d * d);
    for i in 0..d {
        for j in 0..d {
            gens.push(t.d_op(&t.basis_vector(i), &t.basis_vector(j))?.matrix.to_vector());
        }
    }
    let span = Subspace::echelonize(d * d, &gens)?;
    let basis: Vec<Matrix> = span.rows().iter().map(|r| Matrix::from_vector(d, d, r)).collect::<Result<_>>()?;

    for (p, a) in basis.iter().enumerate() {
        for b in &basis[p + 1..] {
            if !span.member(&mat_bracket(a, b)?.to_vector())? {
                return Err(Error::ClosureFailure("inner derivations not closed under commutators".into()));
            }
        }
    }
    for (p, der) in basis.iter().enumerate() {
        for x in 0..d {
            for y in 0..d {
                for z in 0..d {
                    let (ex, ey, ez) = (t.basis_vector(x), t.basis_vector(y), t.basis_vector(z));
                    let lhs = der.apply(&t.triple_product(&ex, &ey, &ez)?)?;
                    let terms = [
                        t.triple_product(&der.apply(&ex)?, &ey, &ez)?,
                        t.triple_product(&ex, &der.apply(&ey)?, &ez)?,
                        t.triple_product(&ex, &ey, &der.apply(&ez)?)?,
                    ];
                    let rhs: Vec<Scalar> = (0..d).map(|l| terms.iter().map(|v| &v[l]).sum()).collect();
                    if lhs != rhs {
                        return Err(Error::ClosureFailure(format!(
                            "inner derivation {p} is not a derivation on basis triple ({x}, {y}, {z})"
                        )));
                    }
                }
            }
        }
    }
    Ok(InnerDerivations { basis, span })
}

/// `L(T) = InnDer(T) ⊕ T` with its involution and Killing form.
///
/// Basis order: the echelon basis of `InnDer(T)` first, then the basis of `T`.
#[derive(Clone, Debug)]
pub struct StandardEmbedding {
    pub lie: LieAlgebra,
    pub inner: InnerDerivations,
    /// Dimension of `T`.
    pub t_dim: usize,
    /// `+1` on `InnDer(T)`, `-1` on `T`.
    pub sigma: Operator,
    pub killing: Matrix,
}

impl StandardEmbedding {
    pub fn inner_dim(&self) -> usize {
        self.inner.dim()
    }

    /// Index of `b_i` of `T` inside the Lie algebra basis.
    pub fn t_index(&self, i: usize) -> usize {
        self.inner_dim() + i
    }

    /// The Killing form restricted to `T`, on the basis of `T`.
    pub fn killing_on_t(&self) -> Matrix {
        let m = self.inner_dim();
        let d = self.t_dim;
        let mut k = Matrix::zeros(d, d);
        for i in 0..d {
            for j in 0..d {
                k.set(i, j, self.killing.get(m + i, m + j).clone());
            }
        }
        k
    }

    pub fn killing_nondegenerate(&self) -> bool {
        self.killing.rank() == self.killing.rows()
    }

    /// `K(x, y)` for `x, y` in coordinates of `T`.
    pub fn k_t(&self, x: &[Scalar], y: &[Scalar]) -> Result<Scalar> {
        let kt = self.killing_on_t();
        let ky = kt.apply(y)?;
        Ok(x.iter().zip(&ky).map(|(a, b)| a * b).sum())
    }

    /// `sigma([x,y]) = [sigma x, sigma y]` on all basis pairs.
    pub fn sigma_preserves_bracket(&self) -> Result<bool> {
        self.lie.is_automorphism(&self.sigma.matrix)
    }

    /// `K(sigma x, sigma y) = K(x, y)` on all basis pairs.
    pub fn sigma_preserves_killing(&self) -> Result<bool> {
        let s = &self.sigma.matrix;
        Ok(s.transpose().mul(&self.killing)?.mul(s)? == self.killing)
    }

    /// `K(R_{a,b} x, y) = K(x, R_{b,a} y)` for all basis `a, b`.
    pub fn r_adjointness(&self, t: &TripleSystem) -> Result<Option<(usize, usize)>> {
        let kt = self.killing_on_t();
        let d = t.dim();
        for a in 0..d {
            for b in 0..d {
                let rab = t.r_op(&t.basis_vector(a), &t.basis_vector(b))?.matrix;
                let rba = t.r_op(&t.basis_vector(b), &t.basis_vector(a))?.matrix;
                if rab.transpose().mul(&kt)? != kt.mul(&rba)? {
                    return Ok(Some((a, b)));
                }
            }
        }
        Ok(None)
    }
}

/// Builds `L(T)` with `[a,b] = D_{a,b}`, `[D,c] = D(c)` and the commutator on
/// `InnDer(T)`, then validates it as a Lie algebra.
pub fn standard_embedding(t: &TripleSystem) -> Result<StandardEmbedding> {
    let inner = inner_derivations(t)?;
    let d = t.dim();
    let m = inner.dim();
    let n = m + d;
    let lift = |coords: Vec<Scalar>, offset: usize| -> Vec<(usize, Scalar)> {
        coords.into_iter().enumerate().filter(|(_, x)| !x.is_zero()).map(|(i, x)| (i + offset, x)).collect()
    };
    let inner_coords = |mat: &Matrix| -> Result<Vec<Scalar>> {
        inner
            .coordinates(mat)?
            .ok_or_else(|| Error::ClosureFailure("bracket leaves the inner derivation algebra".into()))
    };

    let mut entries = Vec::new();
    for p in 0..m {
        for q in 0..m {
            let c = lift(inner_coords(&mat_bracket(&inner.basis[p], &inner.basis[q])?)?, 0);
            if !c.is_empty() {
                entries.push(([p, q], c));
            }
        }
        for k in 0..d {
            let img = lift(inner.basis[p].column(k), m);
            if !img.is_empty() {
                let neg: Vec<(usize, Scalar)> = img.iter().map(|(i, x)| (*i, -x)).collect();
                entries.push(([p, m + k], img));
                entries.push(([m + k, p], neg));
            }
        }
    }
    for i in 0..d {
        for j in 0..d {
            let dij = t.d_op(&t.basis_vector(i), &t.basis_vector(j))?.matrix;
            let c = lift(inner_coords(&dij)?, 0);
            if !c.is_empty() {
                entries.push(([m + i, m + j], c));
            }
        }
    }

    let mut names: Vec<String> = (0..m).map(|p| format!("D{p}")).collect();
    names.extend(t.basis_names().iter().cloned());
    let lie = LieAlgebra::new(format!("L({})", t.name()), names, entries)?;
    lie.validate()?;

    let mut sigma = Matrix::identity(n);
    for i in m..n {
        sigma.set(i, i, -Scalar::one());
    }
    let killing = lie.killing_form()?;
    for p in 0..m {
        for i in m..n {
            if !killing.get(p, i).is_zero() {
                return Err(Error::VerificationFailure("Killing form pairs InnDer(T) with T".into()));
            }
        }
    }
    Ok(StandardEmbedding { lie, inner, t_dim: d, sigma: Operator::new(sigma, OperatorKind::Sigma), killing })
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct TraceReport {
    /// `(i, j, 2 tr R_{b_i,b_j}, K(b_i,b_j))` for every basis pair.
    pub values: Vec<(usize, usize, Scalar, Scalar)>,
}

impl TraceReport {
    pub fn holds(&self) -> bool {
        self.values.iter().all(|(_, _, a, b)| a == b)
    }

    pub fn first_mismatch(&self) -> Option<&(usize, usize, Scalar, Scalar)> {
        self.values.iter().find(|(_, _, a, b)| a != b)
    }
}

/// Compares `2 tr(R_{b_i,b_j})` with `K(b_i, b_j)` on all basis pairs.
pub fn trace_identity_check(t: &TripleSystem, emb: &StandardEmbedding) -> Result<TraceReport> {
    let d = t.dim();
    let two = Scalar::from_int(2);
    let mut values = Vec::with_capacity(d * d);
    for i in 0..d {
        for j in 0..d {
            let r = t.r_op(&t.basis_vector(i), &t.basis_vector(j))?.matrix;
            let lhs = &two * &r.trace()?;
            let rhs = emb.killing.get(emb.t_index(i), emb.t_index(j)).clone();
            values.push((i, j, lhs, rhs));
        }
    }
    Ok(TraceReport { values })
}

/// `tau_{x,y}: z -> K(y, z) x`.
pub fn tau_map(emb: &StandardEmbedding, x: &[Scalar], y: &[Scalar]) -> Result<Operator> {
    let d = emb.t_dim;
    if x.len() != d || y.len() != d {
        return Err(Error::DimensionMismatch { expected: d, found: x.len().max(y.len()) });
    }
    // row vector y^T K
    let ky = emb.killing_on_t().transpose().apply(y)?;
    let mut m = Matrix::zeros(d, d);
    for i in 0..d {
        for j in 0..d {
            m.set(i, j, &x[i] * &ky[j]);
        }
    }
    Ok(Operator::new(m, OperatorKind::Tau))
}

/// `lambda_{x,y} = tau_{x,y} - tau_{y,x}`.
pub fn lambda_map(emb: &StandardEmbedding, x: &[Scalar], y: &[Scalar]) -> Result<Operator> {
    let m = tau_map(emb, x, y)?.matrix.sub(&tau_map(emb, y, x)?.matrix)?;
    Ok(Operator::new(m, OperatorKind::Lambda))
}

/// `sigma_{x,y} = tau_{x,y} + tau_{y,x}`.
pub fn sigma_map(emb: &StandardEmbedding, x: &[Scalar], y: &[Scalar]) -> Result<Operator> {
    let m = tau_map(emb, x, y)?.matrix.add(&tau_map(emb, y, x)?.matrix)?;
    Ok(Operator::new(m, OperatorKind::Sigma))
}

/// `K(d z, w) + K(z, d w) = 0` for all `z, w`.
pub fn is_k_skew(emb: &StandardEmbedding, d: &Matrix) -> Result<bool> {
    let k = emb.killing_on_t();
    Ok(d.transpose().mul(&k)?.add(&k.mul(d)?)?.is_zero())
}

/// Basis of the maps on `T` that are skew for the Killing form.
pub fn k_skew_basis(emb: &StandardEmbedding) -> Result<Vec<Matrix>> {
    let n = emb.t_dim;
    let k = emb.killing_on_t();
    let images: Vec<SparseVector> = (0..n * n)
        .map(|idx| {
            let mut e = Matrix::zeros(n, n);
            e.set(idx / n, idx % n, Scalar::one());
            Ok(e.transpose().mul(&k)?.add(&k.mul(&e)?)?.to_vector())
        })
        .collect::<Result<_>>()?;
    let ker = kernel(n * n, &images)?;
    ker.rows().iter().map(|r| Matrix::from_vector(n, n, r)).collect()
}

/// Checks `[d, tau_{x,y}] = tau_{d x, y} + tau_{x, d y}` for a K-skew `d`.
pub fn tau_commutator_check(emb: &StandardEmbedding, d: &Matrix, x: &[Scalar], y: &[Scalar]) -> Result<bool> {
    if !is_k_skew(emb, d)? {
        return Err(Error::Precondition("operator is not skew for the Killing form".into()));
    }
    let lhs = mat_bracket(d, &tau_map(emb, x, y)?.matrix)?;
    let rhs = tau_map(emb, &d.apply(x)?, y)?.matrix.add(&tau_map(emb, x, &d.apply(y)?)?.matrix)?;
    Ok(lhs == rhs)
}

#[cfg(test)]
mod tests {
    use super::super::catalog;
    use super::*;

    #[test]
    fn s2_inner_derivations_are_one_dimensional() {
        let inner = inner_derivations(&catalog::s2()).unwrap();
        assert_eq!(inner.dim(), 1);
        let diag = Matrix::from_ints(&[&[2, 0], &[0, -2]]).unwrap();
        assert!(inner.coordinates(&diag).unwrap().is_some());
        assert_eq!(inner_derivations(&TripleSystem::abelian(3)).unwrap().dim(), 0);
        assert_eq!(inner_derivations(&catalog::sl2_lts()).unwrap().dim(), 3);
    }

    #[test]
    fn s2_embedding_is_sl2_sized() {
        let t = catalog::s2();
        let emb = standard_embedding(&t).unwrap();
        assert_eq!(emb.lie.dim(), 3);
        assert!(emb.killing_nondegenerate());
        assert!(emb.sigma.matrix.mul(&emb.sigma.matrix).unwrap() == Matrix::identity(3));
        assert!(emb.sigma_preserves_bracket().unwrap());
        assert!(emb.sigma_preserves_killing().unwrap());
        let kt = emb.killing_on_t();
        assert_eq!(kt, Matrix::from_ints(&[&[0, 4], &[4, 0]]).unwrap());
    }

    #[test]
    fn abelian_embedding() {
        let emb = standard_embedding(&TripleSystem::abelian(2)).unwrap();
        assert_eq!(emb.lie.dim(), 2);
        assert!(emb.killing.is_zero());
        let rep = trace_identity_check(&TripleSystem::abelian(2), &emb).unwrap();
        assert!(rep.holds());
    }

    #[test]
    fn trace_identity_on_s2() {
        let t = catalog::s2();
        let emb = standard_embedding(&t).unwrap();
        let rep = trace_identity_check(&t, &emb).unwrap();
        assert!(rep.holds());
        let k_ef = &rep.values.iter().find(|v| v.0 == 0 && v.1 == 1).unwrap().3;
        assert_eq!(*k_ef, Scalar::from_int(4));
        let k_ee = &rep.values.iter().find(|v| v.0 == 0 && v.1 == 0).unwrap().3;
        assert!(k_ee.is_zero());
    }

    #[test]
    fn tau_lambda_properties() {
        let t = catalog::s2();
        let emb = standard_embedding(&t).unwrap();
        let x = vec![Scalar::from_int(3), Scalar::from_int(-1)];
        let y = vec![Scalar::from_int(2), Scalar::from_int(5)];
        assert!(tau_map(&emb, &x, &y).unwrap().matrix.rank() <= 1);
        let lam = lambda_map(&emb, &x, &y).unwrap();
        assert!(is_k_skew(&emb, &lam.matrix).unwrap());
        assert!(tau_commutator_check(&emb, &lam.matrix, &x, &y).unwrap());
        let not_skew = Matrix::identity(2);
        assert!(matches!(tau_commutator_check(&emb, &not_skew, &x, &y), Err(Error::Precondition(_))));
        let skews = k_skew_basis(&emb).unwrap();
        assert_eq!(skews.len(), 1);
    }
}
