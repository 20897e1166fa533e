//! Row reduction and kernels.
//!
//! Two routes compute the same reduced row-echelon form: a dense
//! Gauss–Jordan pass over a materialized matrix ([`rref`]) and an incremental
//! accumulator that absorbs constraint rows one at a time ([`Echelon`]). The
//! RREF of a row space is unique, so both produce bit-identical kernels.

use serde::{Deserialize, Serialize};

use super::{Field, Matrix, Subspace};

/// Which elimination route builds constraint kernels.
#[derive(Clone, Copy, Debug, Default, PartialEq, Eq, Serialize, Deserialize)]
pub enum Strategy {
    /// Stream rows into an [`Echelon`]; memory bounded by the rank.
    #[default]
    Incremental,
    /// Materialize the whole constraint matrix and run [`rref`] on it.
    Dense,
}

/// Reduced row-echelon form with leftmost pivots, pivot rows chosen as the
/// first nonzero row at or below the current position and scaled to 1.
///
/// Returns the reduced matrix, its rank and the pivot columns.
pub fn rref<F: Field>(m: &Matrix<F>) -> (Matrix<F>, usize, Vec<usize>) {
    let mut a = m.clone();
    let (rows, cols) = (a.rows(), a.cols());
    let mut pivots = Vec::new();
    let mut r = 0;
    for c in 0..cols {
        if r == rows {
            break;
        }
        let Some(p) = (r..rows).find(|&i| !a[(i, c)].is_zero()) else {
            continue;
        };
        a.swap_rows(r, p);
        let inv = a[(r, c)].recip();
        for x in a.row_mut(r)[c..].iter_mut() {
            if !x.is_zero() {
                *x = x.times(&inv);
            }
        }
        let pivot_row: Vec<F> = a.row(r)[c..].to_vec();
        for i in 0..rows {
            if i == r {
                continue;
            }
            let f = a[(i, c)].clone();
            if f.is_zero() {
                continue;
            }
            let row = &mut a.row_mut(i)[c..];
            for (x, p) in row.iter_mut().zip(&pivot_row) {
                if !p.is_zero() {
                    x.sub_mul_assign(&f, p);
                }
            }
        }
        pivots.push(c);
        r += 1;
    }
    (a, r, pivots)
}

pub fn rank<F: Field>(m: &Matrix<F>) -> usize {
    let mut e = Echelon::new(m.cols());
    for r in 0..m.rows() {
        e.insert(m.row(r).to_vec());
    }
    e.rank()
}

/// Incrementally maintained reduced row-echelon basis of a row space.
#[derive(Clone, Debug)]
pub struct Echelon<F> {
    cols: usize,
    /// Rows sorted by pivot column, each with a unit pivot and zeros in every
    /// other pivot column.
    rows: Vec<Vec<F>>,
    pivots: Vec<usize>,
}

impl<F: Field> Echelon<F> {
    pub fn new(cols: usize) -> Self {
        Echelon { cols, rows: Vec::new(), pivots: Vec::new() }
    }

    pub fn cols(&self) -> usize {
        self.cols
    }

    pub fn rank(&self) -> usize {
        self.rows.len()
    }

    pub fn pivots(&self) -> &[usize] {
        &self.pivots
    }

    pub fn rows(&self) -> &[Vec<F>] {
        &self.rows
    }

    /// Reduces `v` against the current rows in place.
    pub fn reduce(&self, v: &mut [F]) {
        assert_eq!(v.len(), self.cols, "vector length mismatch");
        for (row, &p) in self.rows.iter().zip(&self.pivots) {
            if v[p].is_zero() {
                continue;
            }
            let f = v[p].clone();
            for (x, r) in v[p..].iter_mut().zip(&row[p..]) {
                if !r.is_zero() {
                    x.sub_mul_assign(&f, r);
                }
            }
        }
    }

    pub fn contains(&self, v: &[F]) -> bool {
        let mut w = v.to_vec();
        self.reduce(&mut w);
        w.iter().all(F::is_zero)
    }

    /// Adds a row; returns `false` if it was already in the span.
    pub fn insert(&mut self, mut v: Vec<F>) -> bool {
        if self.rows.len() == self.cols {
            return false;
        }
        self.reduce(&mut v);
        let Some(p) = v.iter().position(|x| !x.is_zero()) else {
            return false;
        };
        let inv = v[p].recip();
        for x in v[p..].iter_mut() {
            if !x.is_zero() {
                *x = x.times(&inv);
            }
        }
        for row in &mut self.rows {
            if row[p].is_zero() {
                continue;
            }
            let f = row[p].clone();
            for (x, r) in row[p..].iter_mut().zip(&v[p..]) {
                if !r.is_zero() {
                    x.sub_mul_assign(&f, r);
                }
            }
        }
        let at = self.pivots.partition_point(|&q| q < p);
        self.pivots.insert(at, p);
        self.rows.insert(at, v);
        true
    }

    /// The reduced matrix padded with zero rows to `rows`, rank, pivots.
    pub fn to_rref(&self, rows: usize) -> (Matrix<F>, usize, Vec<usize>) {
        let mut m = Matrix::zeros(rows.max(self.rank()), self.cols);
        for (i, r) in self.rows.iter().enumerate() {
            m.row_mut(i).clone_from_slice(r);
        }
        (m, self.rank(), self.pivots.clone())
    }

    /// Null space of the accumulated rows, one basis vector per free column
    /// in increasing column order.
    pub fn kernel(&self) -> Subspace<F> {
        kernel_from_reduced(self.cols, &self.rows, &self.pivots)
    }
}

fn kernel_from_reduced<F: Field>(cols: usize, rows: &[Vec<F>], pivots: &[usize]) -> Subspace<F> {
    let mut is_pivot = vec![false; cols];
    for &p in pivots {
        is_pivot[p] = true;
    }
    let basis = (0..cols)
        .filter(|&c| !is_pivot[c])
        .map(|free| {
            let mut v = vec![F::zero(); cols];
            v[free] = F::one();
            for (row, &p) in rows.iter().zip(pivots) {
                if !row[free].is_zero() {
                    v[p] = row[free].negated();
                }
            }
            v
        })
        .collect();
    Subspace::from_independent(cols, basis)
}

/// `{v : M v = 0}`.
pub fn kernel_basis<F: Field>(m: &Matrix<F>) -> Subspace<F> {
    kernel_with(m, Strategy::default())
}

pub fn kernel_with<F: Field>(m: &Matrix<F>, strategy: Strategy) -> Subspace<F> {
    match strategy {
        Strategy::Incremental => kernel_of_rows(m.cols(), (0..m.rows()).map(|r| m.row(r).to_vec()), strategy),
        Strategy::Dense => {
            let (red, rank, pivots) = rref(m);
            let rows: Vec<Vec<F>> = (0..rank).map(|r| red.row(r).to_vec()).collect();
            kernel_from_reduced(m.cols(), &rows, &pivots)
        }
    }
}

/// Kernel of the matrix whose rows are produced by `rows`, without
/// materializing it on the incremental route.
pub fn kernel_of_rows<F: Field, I>(cols: usize, rows: I, strategy: Strategy) -> Subspace<F>
where
    I: IntoIterator<Item = Vec<F>>,
{
    match strategy {
        Strategy::Incremental => {
            let mut e = Echelon::new(cols);
            for r in rows {
                if e.rank() == cols {
                    break;
                }
                e.insert(r);
            }
            e.kernel()
        }
        Strategy::Dense => {
            let rows: Vec<Vec<F>> = rows.into_iter().collect();
            if rows.is_empty() {
                return Subspace::full(cols);
            }
            kernel_with(&Matrix::from_rows(&rows), Strategy::Dense)
        }
    }
}
