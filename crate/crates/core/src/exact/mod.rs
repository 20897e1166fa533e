//! Exact arithmetic over ℚ and ℚ(i): scalars, dense matrices, row reduction
//! and subspace operations.

mod complex;
mod echelon;
mod field;
mod matrix;
mod scalar;
mod subspace;

pub use complex::CScalar;
pub use echelon::{kernel_basis, kernel_of_rows, kernel_with, rank, rref, Echelon, Strategy};
pub use field::Field;
pub use matrix::{bilinear, dot, unit, Matrix};
pub use scalar::Scalar;
pub use subspace::{is_positive_definite, orth_complement, Basis, Gram, KronGram, Subspace};
