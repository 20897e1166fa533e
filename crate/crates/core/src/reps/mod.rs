//! Matrix Lie algebra representations with their invariant forms.

mod build;
mod clifford;
mod forms;
mod spec;

use std::sync::OnceLock;

use serde::Serialize;

use crate::error::{Error, Result};
use crate::exact::{kernel_of_rows, Basis, Field, Matrix, Scalar, Strategy, Subspace};

pub use build::{
    adjoint_so, adjoint_su, build, j_matrix, quaternion_triple, so_basis, so_rep, soxso_rep, sp_rep, sp_sp1_rep,
    sp_u_frame, su_rep, u_rep, wedge, wedge_with,
};
pub use clifford::{clifford_generators, spin9_rep};
pub use forms::{cayley_form, g2_form, g2_rep, spin7_rep, ExteriorForm};
pub(crate) use forms::{for_each_subset, sort_sign};
pub use spec::RepSpec;

#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize)]
#[serde(rename_all = "lowercase")]
pub enum FieldMarker {
    Real,
    Complex,
}

/// A linear Lie algebra `h ⊂ so(V, gram)` given by basis matrices.
#[derive(Clone, Debug)]
pub struct LieRep<F: Field = Scalar> {
    label: String,
    n: usize,
    basis: Vec<Matrix<F>>,
    gram: Matrix<F>,
    field: FieldMarker,
    coords: Basis<F>,
    gram_inv: OnceLock<Matrix<F>>,
    ad: OnceLock<Option<Vec<Matrix<F>>>>,
}

impl<F: Field> LieRep<F> {
    /// Wraps basis matrices; fails on shape mismatch or dependent basis.
    pub fn new(label: impl Into<String>, gram: Matrix<F>, basis: Vec<Matrix<F>>, field: FieldMarker) -> Result<Self> {
        let n = gram.rows();
        if !gram.is_square() {
            return Err(Error::DimensionMismatch { expected: n, found: gram.cols() });
        }
        if let Some(b) = basis.iter().find(|b| b.rows() != n || b.cols() != n) {
            return Err(Error::DimensionMismatch { expected: n, found: b.rows().max(b.cols()) });
        }
        let flat: Vec<Vec<F>> = basis.iter().map(|b| b.data().to_vec()).collect();
        let coords = Basis::new(flat)?;
        Ok(LieRep {
            label: label.into(),
            n,
            basis,
            gram,
            field,
            coords,
            gram_inv: OnceLock::new(),
            ad: OnceLock::new(),
        })
    }

    pub fn label(&self) -> &str {
        &self.label
    }

    pub fn n(&self) -> usize {
        self.n
    }

    pub fn dim(&self) -> usize {
        self.basis.len()
    }

    pub fn basis(&self) -> &[Matrix<F>] {
        &self.basis
    }

    pub fn gram(&self) -> &Matrix<F> {
        &self.gram
    }

    pub fn field(&self) -> FieldMarker {
        self.field
    }

    pub fn gram_inverse(&self) -> &Matrix<F> {
        self.gram_inv.get_or_init(|| self.gram.inverse().expect("invariant form must be nondegenerate"))
    }

    /// Coordinates of `m` in the basis, `None` if `m ∉ h`.
    pub fn coords(&self, m: &Matrix<F>) -> Option<Vec<F>> {
        if m.rows() != self.n || m.cols() != self.n {
            return None;
        }
        if self.basis.is_empty() {
            return m.is_zero().then(Vec::new);
        }
        self.coords.coords(m.data())
    }

    pub fn contains(&self, m: &Matrix<F>) -> bool {
        self.coords(m).is_some()
    }

    /// `Σ cₐ Bₐ`.
    pub fn combine(&self, coeffs: &[F]) -> Matrix<F> {
        assert_eq!(coeffs.len(), self.dim(), "coefficient count mismatch");
        let mut out = Matrix::zeros(self.n, self.n);
        for (c, b) in coeffs.iter().zip(&self.basis) {
            out.add_scaled(c, b);
        }
        out
    }

    /// True iff `[Bᵢ, Bⱼ] ∈ span(basis)` for all `i < j`.
    pub fn closure_check(&self) -> bool {
        self.adjoint_matrices().is_some()
    }

    /// Structure constants: `ad(Bₐ)` as `d × d` matrices, column `b` holding
    /// the coordinates of `[Bₐ, B_b]`. `None` if the basis is not closed.
    pub fn adjoint_matrices(&self) -> Option<&[Matrix<F>]> {
        self.ad
            .get_or_init(|| {
                let d = self.dim();
                let mut ad = vec![Matrix::zeros(d, d); d];
                for a in 0..d {
                    for b in a + 1..d {
                        let c = self.coords(&self.basis[a].commutator(&self.basis[b]))?;
                        for (k, x) in c.into_iter().enumerate() {
                            ad[b][(k, a)] = x.negated();
                            ad[a][(k, b)] = x;
                        }
                    }
                }
                Some(ad)
            })
            .as_deref()
    }

    /// `Bᵀ G + G B = 0` for every basis matrix.
    pub fn is_metric_skew(&self) -> bool {
        self.basis.iter().all(|b| b.transpose().mul(&self.gram).plus(&self.gram.mul(b)).is_zero())
    }

    /// `{X ∈ gl(V) : XBᵢ = BᵢX ∀i}` as a subspace of row-major `n²` vectors.
    pub fn commutant(&self) -> Subspace<F> {
        let n = self.n;
        let rows = self.basis.iter().flat_map(move |b| {
            (0..n).flat_map(move |r| {
                (0..n).map(move |c| {
                    // (XB − BX)[r][c] = Σ_k X[r][k] B[k][c] − B[r][k] X[k][c]
                    let mut row = vec![F::zero(); n * n];
                    for k in 0..n {
                        let x = &b[(k, c)];
                        if !x.is_zero() {
                            row[r * n + k] = row[r * n + k].plus(x);
                        }
                        let y = &b[(r, k)];
                        if !y.is_zero() {
                            row[k * n + c] = row[k * n + c].minus(y);
                        }
                    }
                    row
                })
            })
        });
        kernel_of_rows(n * n, rows, Strategy::Incremental)
    }
}

impl LieRep<Scalar> {
    /// The same algebra with its basis reordered or rescaled is still the same
    /// span; this compares spans.
    pub fn same_algebra(&self, other: &LieRep<Scalar>) -> bool {
        self.n == other.n && self.dim() == other.dim() && other.basis.iter().all(|b| self.contains(b))
    }

    /// Irreducibility over `ℝ` for a positive definite form: the commutant is
    /// closed under the `G`-adjoint, and an invariant subspace `W` would put
    /// the orthogonal projector onto `W` into it. So `V` is irreducible iff
    /// the only `G`-self-adjoint elements of the commutant are scalars.
    pub fn is_irreducible(&self) -> bool {
        let n = self.n;
        let g = &self.gram;
        let selfadj = self.commutant().restrict_kernel(n * n, |v| {
            let x = Matrix::from_vec(n, n, v.to_vec());
            g.mul(&x).minus(&x.transpose().mul(g)).into_data()
        });
        n > 0 && selfadj.dim() == 1
    }
}
