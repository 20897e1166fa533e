use std::fmt;

use super::{CScalar, Scalar};

/// The exact fields the elimination routines run over: ℚ and ℚ(i).
///
/// Methods take references so generic loops never clone operands just to
/// combine them.
pub trait Field: Clone + PartialEq + Eq + fmt::Debug + fmt::Display + Send + Sync + 'static {
    fn zero() -> Self;
    fn one() -> Self;
    fn from_int(v: i64) -> Self;
    fn from_scalar(s: Scalar) -> Self;
    fn is_zero(&self) -> bool;
    fn plus(&self, o: &Self) -> Self;
    fn minus(&self, o: &Self) -> Self;
    fn times(&self, o: &Self) -> Self;
    fn negated(&self) -> Self;
    /// Panics on zero.
    fn recip(&self) -> Self;

    fn divide(&self, o: &Self) -> Self {
        self.times(&o.recip())
    }

    fn is_one(&self) -> bool {
        *self == Self::one()
    }

    /// `self -= a * b`.
    fn sub_mul_assign(&mut self, a: &Self, b: &Self) {
        *self = self.minus(&a.times(b));
    }

    /// `self += a * b`.
    fn add_mul_assign(&mut self, a: &Self, b: &Self) {
        *self = self.plus(&a.times(b));
    }
}

impl Field for Scalar {
    fn zero() -> Self {
        Scalar::ZERO
    }
    fn one() -> Self {
        Scalar::ONE
    }
    fn from_int(v: i64) -> Self {
        Scalar::from_int(v)
    }
    fn from_scalar(s: Scalar) -> Self {
        s
    }
    fn is_zero(&self) -> bool {
        Scalar::is_zero(self)
    }
    fn is_one(&self) -> bool {
        Scalar::is_one(self)
    }
    fn plus(&self, o: &Self) -> Self {
        self + o
    }
    fn minus(&self, o: &Self) -> Self {
        self - o
    }
    fn times(&self, o: &Self) -> Self {
        self * o
    }
    fn negated(&self) -> Self {
        -self
    }
    fn recip(&self) -> Self {
        Scalar::recip(self)
    }
    fn sub_mul_assign(&mut self, a: &Self, b: &Self) {
        Scalar::sub_mul_assign(self, a, b)
    }
    fn add_mul_assign(&mut self, a: &Self, b: &Self) {
        Scalar::add_mul_assign(self, a, b)
    }
}

impl Field for CScalar {
    fn zero() -> Self {
        CScalar::ZERO
    }
    fn one() -> Self {
        CScalar::ONE
    }
    fn from_int(v: i64) -> Self {
        CScalar::real(Scalar::from_int(v))
    }
    fn from_scalar(s: Scalar) -> Self {
        CScalar::real(s)
    }
    fn is_zero(&self) -> bool {
        self.re.is_zero() && self.im.is_zero()
    }
    fn plus(&self, o: &Self) -> Self {
        self + o
    }
    fn minus(&self, o: &Self) -> Self {
        self - o
    }
    fn times(&self, o: &Self) -> Self {
        self * o
    }
    fn negated(&self) -> Self {
        -self
    }
    fn recip(&self) -> Self {
        CScalar::recip(self)
    }
    fn sub_mul_assign(&mut self, a: &Self, b: &Self) {
        if a.im.is_zero() && b.im.is_zero() {
            self.re.sub_mul_assign(&a.re, &b.re);
        } else {
            *self = &*self - &(a * b);
        }
    }
}
