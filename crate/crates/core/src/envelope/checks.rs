//! Exact identity checks inside `U(T)`.

use super::{Element, EnvelopingAlgebra};
use crate::error::{Error, Result};
use crate::exactlin::Scalar;
use crate::lts::catalog;

/// One row of the two-dimensional suite.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct S2Row {
    pub n: usize,
    /// `(e^n, f, f) e`.
    pub product: Element,
    /// `n e^n f - n(n-1) e^(n-1)`.
    pub product_expected: Element,
    /// `-2 (e^n, f, e)`.
    pub eigen: Element,
    /// `2n e^n`.
    pub eigen_expected: Element,
}

impl S2Row {
    pub fn passed(&self) -> bool {
        self.product == self.product_expected && self.eigen == self.eigen_expected
    }
}

impl EnvelopingAlgebra {
    fn check_generator(&self, g: usize) -> Result<()> {
        if g >= self.dim() {
            return Err(Error::IndexOutOfRange { index: g, dim: self.dim() });
        }
        Ok(())
    }

    /// `D_{a,b}(z) = a(bz) - b(az)` for generators `a, b`.
    pub fn d_map(&self, a: usize, b: usize, z: &Element) -> Result<Element> {
        self.check_generator(a)?;
        self.check_generator(b)?;
        let (ga, gb) = (self.generator(a), self.generator(b));
        let abz = self.mul(&ga, &self.mul(&gb, z)?)?;
        let bax = self.mul(&gb, &self.mul(&ga, z)?)?;
        Ok(abz.sub(&bax))
    }

    /// `R_{a,b}(x) = -2 (x, a, b)` for generators `a, b`.
    pub fn r_map(&self, a: usize, b: usize, x: &Element) -> Result<Element> {
        self.check_generator(a)?;
        self.check_generator(b)?;
        let assoc = self.associator(x, &self.generator(a), &self.generator(b))?;
        Ok(assoc.scale(&Scalar::from_int(-2)))
    }

    /// Compares `L_{ax + xa}` with `L_a L_x + L_x L_a` on `U(T)_{N - deg x - 1}`.
    pub fn check_jordan(&self, a: usize, x: &Element) -> Result<bool> {
        self.check_generator(a)?;
        let dx = self.degree0(x);
        self.budget(dx + 1)?;
        let ga = self.generator(a);
        let sym = self.mul(&ga, x)?.add(&self.mul(x, &ga)?);
        for j in self.up_to_degree(self.max_degree - dx - 1) {
            let y = Element::basis(j);
            let lhs = self.mul(&sym, &y)?;
            let rhs = self.mul(&ga, &self.mul(x, &y)?)?.add(&self.mul(x, &self.mul(&ga, &y)?)?);
            if lhs != rhs {
                return Ok(false);
            }
        }
        Ok(true)
    }

    /// `D(xy) = D(x) y + x D(y)` for `D = [L_a, L_b]`, and `D` restricted to
    /// `T` equals the inner derivation `[a, b, -]`.
    pub fn check_d_derivation(&self, a: usize, b: usize, x: &Element, y: &Element) -> Result<bool> {
        self.budget(self.degree0(x) + self.degree0(y) + 2)?;
        let xy = self.mul(x, y)?;
        let lhs = self.d_map(a, b, &xy)?;
        let rhs = self.mul(&self.d_map(a, b, x)?, y)?.add(&self.mul(x, &self.d_map(a, b, y)?)?);
        if lhs != rhs {
            return Ok(false);
        }
        if self.max_degree >= 3 {
            for c in 0..self.dim() {
                if self.d_map(a, b, &self.generator(c))? != self.triple(a, b, c) {
                    return Ok(false);
                }
            }
        }
        Ok(true)
    }

    /// `(c^n, a, b) - n c^(n-1) (c, a, b)`, which should lie in `U(T)_{n-2}`.
    pub fn lemma_residue(&self, c: usize, a: usize, b: usize, n: usize) -> Result<Element> {
        for g in [c, a, b] {
            self.check_generator(g)?;
        }
        self.budget(n + 2)?;
        let (gc, ga, gb) = (self.generator(c), self.generator(a), self.generator(b));
        let lhs = self.associator(&self.power(c, n)?, &ga, &gb)?;
        if n == 0 {
            return Ok(lhs);
        }
        let rhs = self.mul(&self.power(c, n - 1)?, &self.associator(&gc, &ga, &gb)?)?;
        Ok(lhs.axpy(&-Scalar::from(n), &rhs))
    }

    /// Whether the residue of [`EnvelopingAlgebra::lemma_residue`] lies in
    /// `U(T)_{n-2}` (which is zero for `n < 2`).
    pub fn check_lemma_derivation(&self, c: usize, a: usize, b: usize, n: usize) -> Result<bool> {
        let residue = self.lemma_residue(c, a, b, n)?;
        Ok(match n.checked_sub(2) {
            None => residue.is_zero(),
            Some(k) => self.degree(&residue).is_none_or(|deg| deg <= k),
        })
    }

    /// Compares `(c^n, a, b)` with
    /// `n/2 c^(n-1) [a, c, b] - 1/2 sum_{i=0}^{n-2} (c^i, D_{a,c}(c^(n-1-i)), b)`.
    pub fn check_assoc_expansion(&self, c: usize, a: usize, b: usize, n: usize) -> Result<bool> {
        for g in [c, a, b] {
            self.check_generator(g)?;
        }
        self.budget(n + 2)?;
        let gb = self.generator(b);
        let lhs = self.associator(&self.power(c, n)?, &self.generator(a), &gb)?;
        if n == 0 {
            return Ok(lhs.is_zero());
        }
        let half = Scalar::ratio(1, 2);
        let lead = self.mul(&self.power(c, n - 1)?, &self.triple(a, c, b))?;
        let mut rhs = lead.scale(&(&Scalar::from(n) * &half));
        for i in 0..n - 1 {
            let inner = self.d_map(a, c, &self.power(c, n - 1 - i)?)?;
            let term = self.associator(&self.power(c, i)?, &inner, &gb)?;
            rhs = rhs.axpy(&-&half, &term);
        }
        Ok(lhs == rhs)
    }

    fn require_s2(&self) -> Result<()> {
        if !self.t.same_constants(&catalog::s2()) {
            return Err(Error::Precondition(
                "this suite needs the two-dimensional system [e,f,e] = 2e, [e,f,f] = -2f".into(),
            ));
        }
        Ok(())
    }

    /// `(e^n, f, f) e` and `R_{f,e}(e^n)` against their closed forms for
    /// `n = 0..=n_max`.
    pub fn s2_suite(&self, n_max: usize) -> Result<Vec<S2Row>> {
        self.require_s2()?;
        self.budget(n_max + 3)?;
        let (e, f) = (self.generator(0), self.generator(1));
        let mut rows = Vec::with_capacity(n_max + 1);
        for n in 0..=n_max {
            let en = self.power(0, n)?;
            let product = self.mul(&self.associator(&en, &f, &f)?, &e)?;
            let ni = Scalar::from(n);
            let mut product_expected = self.mul(&en, &f)?.scale(&ni);
            if n >= 1 {
                let c = &ni * &Scalar::from(n - 1);
                product_expected = product_expected.axpy(&-c, &self.power(0, n - 1)?);
            }
            let eigen = self.r_map(1, 0, &en)?;
            let eigen_expected = en.scale(&(&Scalar::from_int(2) * &ni));
            rows.push(S2Row { n, product, product_expected, eigen, eigen_expected });
        }
        Ok(rows)
    }

    /// `R_{a,b}` maps `U(T)_k` into `U(T)_k` for every `k <= N - 2`.
    pub fn filtration_preservation_check(&self, a: usize, b: usize) -> Result<bool> {
        self.budget(2)?;
        for j in self.up_to_degree(self.max_degree - 2) {
            let image = self.r_map(a, b, &Element::basis(j))?;
            if self.degree(&image).is_some_and(|deg| deg > self.nf_degree(j)) {
                return Ok(false);
            }
        }
        Ok(true)
    }

    /// `b_i b_j = b_j b_i` for all generators.
    pub fn check_commuting_generators(&self) -> Result<bool> {
        self.budget(2)?;
        for i in 0..self.dim() {
            for j in 0..i {
                let (gi, gj) = (self.generator(i), self.generator(j));
                if self.mul(&gi, &gj)? != self.mul(&gj, &gi)? {
                    return Ok(false);
                }
            }
        }
        Ok(true)
    }

    /// `(a, x, y) + (x, a, y) = 0`.
    pub fn check_nucleus(&self, a: usize, x: &Element, y: &Element) -> Result<bool> {
        self.check_generator(a)?;
        let ga = self.generator(a);
        let s = self.associator(&ga, x, y)?.add(&self.associator(x, &ga, y)?);
        Ok(s.is_zero())
    }

    /// `[a, b, c] = -2 (a, b, c) = a(bc) - b(ac)` on all basis triples.
    pub fn check_triple_coherence(&self) -> Result<bool> {
        self.budget(3)?;
        let d = self.dim();
        let minus_two = Scalar::from_int(-2);
        for a in 0..d {
            for b in 0..d {
                for c in 0..d {
                    let (ga, gb, gc) = (self.generator(a), self.generator(b), self.generator(c));
                    let target = self.triple(a, b, c);
                    let assoc = self.associator(&ga, &gb, &gc)?.scale(&minus_two);
                    let left = self.mul(&ga, &self.mul(&gb, &gc)?)?.sub(&self.mul(&gb, &self.mul(&ga, &gc)?)?);
                    if assoc != target || left != target {
                        return Ok(false);
                    }
                }
            }
        }
        Ok(true)
    }

    /// `(c^i, c^j, x) = 0`.
    pub fn check_power_nucleus(&self, c: usize, i: usize, j: usize, x: &Element) -> Result<bool> {
        self.check_generator(c)?;
        Ok(self.associator(&self.power(c, i)?, &self.power(c, j)?, x)?.is_zero())
    }
}
