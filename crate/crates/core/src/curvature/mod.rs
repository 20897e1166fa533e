//! The spaces `P(h)` and `R(h)`, their Ricci maps and decompositions.

mod explicit;
mod pspace;
mod rspace;

use serde::Serialize;

use crate::error::{Error, Result};
use crate::exact::{Field, Matrix, Scalar};
use crate::reps::LieRep;

pub use explicit::{complex_trace, p_explicit, realify, PKind};
pub use pspace::{
    act_on_p, ambient_so, cyclic_defect, p_constraint_rows, p_kernel, p_pairing, prolongation, pspace, pspace_with,
    ricci_tilde, weyl_part, weyl_part_in, PSpaceResult,
};
pub use rspace::{
    act_on_r, berger_span, bianchi_defect, curvature_space, pspan, r_pairing, ricci, rspace, rspace_with, tau_image,
    tau_slice, RSpaceResult,
};

/// Index of the pair `(i, j)`, `i < j`, in lexicographic order.
pub fn pair_index(n: usize, i: usize, j: usize) -> usize {
    debug_assert!(i < j && j < n);
    i * n - i * (i + 1) / 2 + (j - i - 1)
}

pub fn pair_count(n: usize) -> usize {
    n * n.saturating_sub(1) / 2
}

/// All pairs `i < j` in the order of [`pair_index`].
pub fn pairs(n: usize) -> impl Iterator<Item = (usize, usize)> {
    (0..n).flat_map(move |i| (i + 1..n).map(move |j| (i, j)))
}

/// All triples `i < j < k`, lexicographic.
pub fn triples(n: usize) -> impl Iterator<Item = (usize, usize, usize)> {
    (0..n).flat_map(move |i| (i + 1..n).flat_map(move |j| (j + 1..n).map(move |k| (i, j, k))))
}

/// An element of `Hom(V, h)`: row `i` holds the coordinates of `P(eᵢ)`.
#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct PMap<F: Field = Scalar> {
    coeffs: Matrix<F>,
}

impl<F: Field> PMap<F> {
    pub fn zero(n: usize, d: usize) -> Self {
        PMap { coeffs: Matrix::zeros(n, d) }
    }

    pub fn from_coeffs(coeffs: Matrix<F>) -> Self {
        PMap { coeffs }
    }

    /// From the flat `(i, a)`-ordered vector, `i` outer.
    pub fn from_vector(n: usize, d: usize, v: &[F]) -> Self {
        PMap { coeffs: Matrix::from_vec(n, d, v.to_vec()) }
    }

    /// Coordinates of `P(eᵢ)` given as matrices; fails if one is not in `h`.
    pub fn from_values(rep: &LieRep<F>, values: &[Matrix<F>]) -> Result<Self> {
        if values.len() != rep.n() {
            return Err(Error::DimensionMismatch { expected: rep.n(), found: values.len() });
        }
        let rows = values
            .iter()
            .enumerate()
            .map(|(i, m)| rep.coords(m).ok_or_else(|| Error::NotInAlgebra(format!("value at e{}", i + 1))))
            .collect::<Result<Vec<_>>>()?;
        if rows.is_empty() || rep.dim() == 0 {
            return Ok(PMap::zero(rep.n(), rep.dim()));
        }
        Ok(PMap { coeffs: Matrix::from_rows(&rows) })
    }

    pub fn n(&self) -> usize {
        self.coeffs.rows()
    }

    pub fn d(&self) -> usize {
        self.coeffs.cols()
    }

    pub fn coeffs(&self) -> &Matrix<F> {
        &self.coeffs
    }

    pub fn to_vector(&self) -> Vec<F> {
        self.coeffs.data().to_vec()
    }

    /// Coordinates of `P(x)` in the basis of `h`.
    pub fn value_coords(&self, x: &[F]) -> Vec<F> {
        self.coeffs.transpose().mul_vec(x)
    }

    /// `P(eᵢ)` as a matrix.
    pub fn at(&self, rep: &LieRep<F>, i: usize) -> Matrix<F> {
        rep.combine(self.coeffs.row(i))
    }

    /// `P(x)` as a matrix.
    pub fn eval(&self, rep: &LieRep<F>, x: &[F]) -> Matrix<F> {
        rep.combine(&self.value_coords(x))
    }
}

/// An element of `Λ²V* ⊗ h` stored over pairs `i < j`.
#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct CurvTensor<F: Field = Scalar> {
    n: usize,
    coeffs: Matrix<F>,
}

impl<F: Field> CurvTensor<F> {
    pub fn zero(n: usize, d: usize) -> Self {
        CurvTensor { n, coeffs: Matrix::zeros(pair_count(n), d) }
    }

    /// Rows are pairs `i < j` in lexicographic order.
    pub fn from_coeffs(n: usize, coeffs: Matrix<F>) -> Result<Self> {
        if coeffs.rows() != pair_count(n) {
            return Err(Error::DimensionMismatch { expected: pair_count(n), found: coeffs.rows() });
        }
        Ok(CurvTensor { n, coeffs })
    }

    pub fn from_vector(n: usize, d: usize, v: &[F]) -> Self {
        CurvTensor { n, coeffs: Matrix::from_vec(pair_count(n), d, v.to_vec()) }
    }

    /// Builds `R` from a function giving `R(eᵢ, eⱼ)` for `i < j` as a matrix.
    pub fn from_fn(rep: &LieRep<F>, f: impl Fn(usize, usize) -> Matrix<F>) -> Result<Self> {
        let n = rep.n();
        let mut coeffs = Matrix::zeros(pair_count(n), rep.dim());
        for (p, (i, j)) in pairs(n).enumerate() {
            let c = rep
                .coords(&f(i, j))
                .ok_or_else(|| Error::NotInAlgebra(format!("value at (e{}, e{})", i + 1, j + 1)))?;
            coeffs.row_mut(p).clone_from_slice(&c);
        }
        Ok(CurvTensor { n, coeffs })
    }

    pub fn n(&self) -> usize {
        self.n
    }

    pub fn d(&self) -> usize {
        self.coeffs.cols()
    }

    pub fn coeffs(&self) -> &Matrix<F> {
        &self.coeffs
    }

    pub fn to_vector(&self) -> Vec<F> {
        self.coeffs.data().to_vec()
    }

    /// `h`-coordinates of `R(eᵢ, eⱼ)` for any `i, j`.
    pub fn get(&self, i: usize, j: usize) -> Vec<F> {
        use std::cmp::Ordering::*;
        match i.cmp(&j) {
            Equal => vec![F::zero(); self.d()],
            Less => self.coeffs.row(pair_index(self.n, i, j)).to_vec(),
            Greater => self.coeffs.row(pair_index(self.n, j, i)).iter().map(F::negated).collect(),
        }
    }

    pub fn at(&self, rep: &LieRep<F>, i: usize, j: usize) -> Matrix<F> {
        rep.combine(&self.get(i, j))
    }

    /// `R(x, y)` as a matrix.
    pub fn eval(&self, rep: &LieRep<F>, x: &[F], y: &[F]) -> Matrix<F> {
        let mut c = vec![F::zero(); self.d()];
        for (p, (i, j)) in pairs(self.n).enumerate() {
            let w = x[i].times(&y[j]).minus(&x[j].times(&y[i]));
            if w.is_zero() {
                continue;
            }
            for (acc, r) in c.iter_mut().zip(self.coeffs.row(p)) {
                acc.add_mul_assign(&w, r);
            }
        }
        rep.combine(&c)
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn pair_indexing() {
        for n in 1..7 {
            for (k, (i, j)) in pairs(n).enumerate() {
                assert_eq!(pair_index(n, i, j), k);
            }
            assert_eq!(pairs(n).count(), pair_count(n));
        }
        assert_eq!(triples(5).count(), 10);
    }
}
