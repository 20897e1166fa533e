use super::{dot, kernel_of_rows, Echelon, Field, Matrix, Scalar, Strategy};
use crate::error::{Error, Result};

/// A linear subspace of `F^ambient_dim` given by independent basis vectors.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Subspace<F = Scalar> {
    ambient_dim: usize,
    basis: Vec<Vec<F>>,
}

impl<F: Field> Subspace<F> {
    /// Wraps vectors already known to be independent.
    pub(crate) fn from_independent(ambient_dim: usize, basis: Vec<Vec<F>>) -> Self {
        debug_assert!(basis.iter().all(|v| v.len() == ambient_dim));
        Subspace { ambient_dim, basis }
    }

    /// Checked constructor: fails unless the vectors are independent and of
    /// the right length.
    pub fn new(ambient_dim: usize, basis: Vec<Vec<F>>) -> Result<Self> {
        if let Some(v) = basis.iter().find(|v| v.len() != ambient_dim) {
            return Err(Error::DimensionMismatch { expected: ambient_dim, found: v.len() });
        }
        let mut e = Echelon::new(ambient_dim);
        for v in &basis {
            if !e.insert(v.clone()) {
                return Err(Error::Invalid("basis vectors are linearly dependent".into()));
            }
        }
        Ok(Subspace { ambient_dim, basis })
    }

    /// Span of arbitrary vectors, keeping the first independent ones in order.
    pub fn span<I: IntoIterator<Item = Vec<F>>>(ambient_dim: usize, vectors: I) -> Self {
        let mut e = Echelon::new(ambient_dim);
        let mut basis = Vec::new();
        for v in vectors {
            assert_eq!(v.len(), ambient_dim, "vector length mismatch");
            if e.rank() == ambient_dim {
                break;
            }
            if e.insert(v.clone()) {
                basis.push(v);
            }
        }
        Subspace { ambient_dim, basis }
    }

    pub fn zero(ambient_dim: usize) -> Self {
        Subspace { ambient_dim, basis: Vec::new() }
    }

    pub fn full(ambient_dim: usize) -> Self {
        Subspace { ambient_dim, basis: (0..ambient_dim).map(|i| super::unit(ambient_dim, i)).collect() }
    }

    pub fn ambient_dim(&self) -> usize {
        self.ambient_dim
    }

    pub fn dim(&self) -> usize {
        self.basis.len()
    }

    pub fn vectors(&self) -> &[Vec<F>] {
        &self.basis
    }

    pub fn into_vectors(self) -> Vec<Vec<F>> {
        self.basis
    }

    /// Basis as the columns of an `ambient_dim × dim` matrix.
    pub fn basis_matrix(&self) -> Matrix<F> {
        Matrix::from_cols(self.ambient_dim, &self.basis)
    }

    pub fn echelon(&self) -> Echelon<F> {
        let mut e = Echelon::new(self.ambient_dim);
        for v in &self.basis {
            e.insert(v.clone());
        }
        e
    }

    pub fn contains(&self, v: &[F]) -> bool {
        self.echelon().contains(v)
    }

    pub fn contains_subspace(&self, other: &Subspace<F>) -> bool {
        if other.ambient_dim != self.ambient_dim || other.dim() > self.dim() {
            return false;
        }
        let e = self.echelon();
        other.basis.iter().all(|v| e.contains(v))
    }

    /// Span equality by mutual containment.
    pub fn same_span(&self, other: &Subspace<F>) -> bool {
        self.dim() == other.dim() && self.contains_subspace(other)
    }

    pub fn sum(&self, other: &Subspace<F>) -> Result<Subspace<F>> {
        self.check_ambient(other)?;
        Ok(Subspace::span(self.ambient_dim, self.basis.iter().chain(&other.basis).cloned()))
    }

    /// `A ∩ B`, from the kernel of `[A | −B]`.
    pub fn intersect(&self, other: &Subspace<F>) -> Result<Subspace<F>> {
        self.check_ambient(other)?;
        let (da, db) = (self.dim(), other.dim());
        let rows = (0..self.ambient_dim).map(|r| {
            self.basis
                .iter()
                .map(|v| v[r].clone())
                .chain(other.basis.iter().map(|v| v[r].negated()))
                .collect::<Vec<F>>()
        });
        let k = kernel_of_rows(da + db, rows, Strategy::Incremental);
        let vectors = k.basis.iter().map(|c| self.combine(&c[..da])).collect();
        Ok(Subspace::from_independent(self.ambient_dim, vectors))
    }

    /// `Σ cᵢ bᵢ` over this subspace's basis.
    pub fn combine(&self, coeffs: &[F]) -> Vec<F> {
        assert_eq!(coeffs.len(), self.dim(), "coefficient count mismatch");
        let mut out = vec![F::zero(); self.ambient_dim];
        for (c, v) in coeffs.iter().zip(&self.basis) {
            if c.is_zero() {
                continue;
            }
            for (o, x) in out.iter_mut().zip(v) {
                if !x.is_zero() {
                    o.add_mul_assign(c, x);
                }
            }
        }
        out
    }

    /// Image of the subspace under `f`, as a span in `target_dim`.
    pub fn map_span(&self, target_dim: usize, f: impl Fn(&[F]) -> Vec<F>) -> Subspace<F> {
        Subspace::span(target_dim, self.basis.iter().map(|v| f(v)))
    }

    /// `{v ∈ self : f(v) = 0}` for a linear `f` into `F^out_dim`.
    pub fn restrict_kernel(&self, out_dim: usize, f: impl Fn(&[F]) -> Vec<F>) -> Subspace<F> {
        let images: Vec<Vec<F>> = self.basis.iter().map(|v| f(v)).collect();
        let rows = (0..out_dim).map(|r| images.iter().map(|im| im[r].clone()).collect::<Vec<F>>());
        let k = kernel_of_rows(self.dim(), rows, Strategy::Incremental);
        let vectors = k.basis.iter().map(|c| self.combine(c)).collect();
        Subspace::from_independent(self.ambient_dim, vectors)
    }

    fn check_ambient(&self, other: &Subspace<F>) -> Result<()> {
        if self.ambient_dim != other.ambient_dim {
            return Err(Error::DimensionMismatch { expected: self.ambient_dim, found: other.ambient_dim });
        }
        Ok(())
    }
}

/// A symmetric bilinear form applied as a linear operator `v ↦ G v`.
pub trait Gram<F: Field> {
    fn dim(&self) -> usize;
    fn apply(&self, v: &[F]) -> Vec<F>;

    fn pair(&self, x: &[F], y: &[F]) -> F {
        dot(x, &self.apply(y))
    }
}

impl<F: Field> Gram<F> for Matrix<F> {
    fn dim(&self) -> usize {
        self.rows()
    }
    fn apply(&self, v: &[F]) -> Vec<F> {
        self.mul_vec(v)
    }
}

/// `left ⊗ right` acting on coordinates indexed `(i, a) ↦ i·right.dim + a`,
/// without forming the Kronecker product.
#[derive(Clone, Debug)]
pub struct KronGram<F = Scalar> {
    pub left: Matrix<F>,
    pub right: Matrix<F>,
}

impl<F: Field> Gram<F> for KronGram<F> {
    fn dim(&self) -> usize {
        self.left.rows() * self.right.rows()
    }
    fn apply(&self, v: &[F]) -> Vec<F> {
        let (n, d) = (self.left.rows(), self.right.rows());
        let c = Matrix::from_vec(n, d, v.to_vec());
        self.left.mul(&c).mul(&self.right.transpose()).into_data()
    }
}

/// Exact LDLᵀ test of positive-definiteness for a symmetric matrix.
pub fn is_positive_definite(s: &Matrix<Scalar>) -> bool {
    if !s.is_symmetric() {
        return false;
    }
    let n = s.rows();
    let mut a = s.clone();
    for k in 0..n {
        let pivot = a[(k, k)].clone();
        if !pivot.is_positive() {
            return false;
        }
        let inv = pivot.recip();
        for i in k + 1..n {
            let f = &a[(i, k)] * &inv;
            if f.is_zero() {
                continue;
            }
            for j in k + 1..n {
                let akj = a[(k, j)].clone();
                if !akj.is_zero() {
                    a[(i, j)].sub_mul_assign(&f, &akj);
                }
            }
        }
    }
    true
}

/// Orthogonal complement of `a` inside `inside` with respect to `gram`.
///
/// Requires `a ⊆ inside` and `gram` positive-definite on `inside`.
pub fn orth_complement<G: Gram<Scalar>>(a: &Subspace, inside: &Subspace, gram: &G) -> Result<Subspace> {
    a.check_ambient(inside)?;
    if gram.dim() != inside.ambient_dim {
        return Err(Error::DimensionMismatch { expected: inside.ambient_dim, found: gram.dim() });
    }
    if !inside.contains_subspace(a) {
        return Err(Error::NotContained);
    }
    let g_inside: Vec<Vec<Scalar>> = inside.basis.iter().map(|v| gram.apply(v)).collect();
    let k = inside.dim();
    let restricted = Matrix::from_fn(k, k, |i, j| dot(&inside.basis[i], &g_inside[j]));
    if !is_positive_definite(&restricted) {
        return Err(Error::NotPositiveDefinite);
    }
    let rows = a.basis.iter().map(|u| g_inside.iter().map(|gv| dot(u, gv)).collect::<Vec<Scalar>>());
    let coeffs = kernel_of_rows(k, rows, Strategy::Incremental);
    let vectors = coeffs.basis.iter().map(|c| inside.combine(c)).collect();
    Ok(Subspace::from_independent(inside.ambient_dim, vectors))
}

/// Coordinates with respect to a fixed independent family.
///
/// The family is reduced once; a coordinate query reads the entries at the
/// pivot positions, multiplies by a precomputed inverse and then verifies the
/// reconstruction, so membership comes for free.
#[derive(Clone, Debug)]
pub struct Basis<F = Scalar> {
    vectors: Vec<Vec<F>>,
    positions: Vec<usize>,
    inverse: Matrix<F>,
}

impl<F: Field> Basis<F> {
    pub fn new(vectors: Vec<Vec<F>>) -> Result<Self> {
        let len = vectors.first().map_or(0, Vec::len);
        let mut e = Echelon::new(len);
        for v in &vectors {
            if v.len() != len {
                return Err(Error::DimensionMismatch { expected: len, found: v.len() });
            }
            if !e.insert(v.clone()) {
                return Err(Error::Invalid("basis vectors are linearly dependent".into()));
            }
        }
        let positions = e.pivots().to_vec();
        let d = vectors.len();
        let sub = Matrix::from_fn(d, d, |r, c| vectors[c][positions[r]].clone());
        let inverse = sub.inverse().expect("pivot submatrix of an independent family is invertible");
        Ok(Basis { vectors, positions, inverse })
    }

    pub fn len(&self) -> usize {
        self.vectors.len()
    }

    pub fn is_empty(&self) -> bool {
        self.vectors.is_empty()
    }

    pub fn vectors(&self) -> &[Vec<F>] {
        &self.vectors
    }

    /// Coordinates of `v`, or `None` when `v` is outside the span.
    pub fn coords(&self, v: &[F]) -> Option<Vec<F>> {
        if self.vectors.is_empty() {
            return v.iter().all(F::is_zero).then(Vec::new);
        }
        let picked: Vec<F> = self.positions.iter().map(|&p| v[p].clone()).collect();
        let c = self.inverse.mul_vec(&picked);
        let mut rebuilt = vec![F::zero(); v.len()];
        for (ci, b) in c.iter().zip(&self.vectors) {
            if ci.is_zero() {
                continue;
            }
            for (r, x) in rebuilt.iter_mut().zip(b) {
                if !x.is_zero() {
                    r.add_mul_assign(ci, x);
                }
            }
        }
        (rebuilt == v).then_some(c)
    }
}
