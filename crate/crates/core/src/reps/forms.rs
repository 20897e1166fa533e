use std::collections::HashMap;

use super::build::so_basis;
use super::{FieldMarker, LieRep, RepSpec};
use crate::error::Result;
use crate::exact::{kernel_of_rows, Matrix, Scalar, Strategy};

/// A constant-coefficient exterior form `Σ c_I e^I` on `ℝⁿ`.
#[derive(Clone, Debug)]
pub struct ExteriorForm {
    n: usize,
    degree: usize,
    terms: HashMap<Vec<usize>, i64>,
}

/// Sorts `idx` in place and returns the permutation sign, or 0 on a repeat.
pub(crate) fn sort_sign(idx: &mut [usize]) -> i64 {
    let mut sign = 1;
    for i in 1..idx.len() {
        let mut j = i;
        while j > 0 && idx[j - 1] > idx[j] {
            idx.swap(j - 1, j);
            sign = -sign;
            j -= 1;
        }
    }
    if idx.windows(2).any(|w| w[0] == w[1]) {
        0
    } else {
        sign
    }
}

impl ExteriorForm {
    /// Terms are given with 1-based indices, as in `e¹²³`.
    pub fn from_terms(n: usize, terms: &[(i64, [usize; 4])], degree: usize) -> Self {
        let mut map = HashMap::new();
        for (c, idx) in terms {
            let mut key: Vec<usize> = idx[..degree].iter().map(|i| i - 1).collect();
            let s = sort_sign(&mut key);
            assert!(s != 0 && key.iter().all(|&i| i < n), "malformed form term");
            *map.entry(key).or_insert(0) += s * c;
        }
        ExteriorForm { n, degree, terms: map }
    }

    pub fn degree(&self) -> usize {
        self.degree
    }

    /// Value on basis vectors `e_{idx}` (0-based, any order).
    pub fn value(&self, idx: &[usize]) -> i64 {
        let mut key = idx.to_vec();
        let s = sort_sign(&mut key);
        if s == 0 {
            return 0;
        }
        s * self.terms.get(&key).copied().unwrap_or(0)
    }

    /// Components of `A·φ` on sorted index tuples, `A` acting as a derivation
    /// (up to overall sign).
    pub fn derivative(&self, a: &Matrix) -> Vec<Scalar> {
        let mut out = Vec::new();
        for_each_subset(self.n, self.degree, &mut |idx| {
            let mut acc = Scalar::ZERO;
            let mut probe = idx.to_vec();
            for s in 0..idx.len() {
                for l in 0..self.n {
                    let x = &a[(l, idx[s])];
                    if x.is_zero() {
                        continue;
                    }
                    probe[s] = l;
                    let v = self.value(&probe);
                    if v != 0 {
                        acc.add_mul_assign(x, &Scalar::from_int(v));
                    }
                }
                probe[s] = idx[s];
            }
            out.push(acc);
        });
        out
    }

    /// `{A ∈ so(n) : A·φ = 0}`.
    pub fn annihilator(&self) -> Vec<Matrix> {
        let so = so_basis(self.n);
        let images: Vec<Vec<Scalar>> = so.iter().map(|w| self.derivative(w)).collect();
        let rows = (0..images[0].len()).map(|r| images.iter().map(|v| v[r].clone()).collect::<Vec<_>>());
        kernel_of_rows(so.len(), rows, Strategy::Incremental)
            .vectors()
            .iter()
            .map(|c| {
                let mut m = Matrix::zeros(self.n, self.n);
                for (x, w) in c.iter().zip(&so) {
                    m.add_scaled(x, w);
                }
                m
            })
            .collect()
    }
}

pub(crate) fn for_each_subset(n: usize, k: usize, f: &mut impl FnMut(&[usize])) {
    fn rec(start: usize, n: usize, k: usize, cur: &mut Vec<usize>, f: &mut impl FnMut(&[usize])) {
        if cur.len() == k {
            f(cur);
            return;
        }
        for i in start..n {
            cur.push(i);
            rec(i + 1, n, k, cur, f);
            cur.pop();
        }
    }
    rec(0, n, k, &mut Vec::with_capacity(k), f);
}

/// `e¹²³ + e¹⁴⁵ + e¹⁶⁷ + e²⁴⁶ − e²⁵⁷ − e³⁴⁷ − e³⁵⁶`.
pub fn g2_form() -> ExteriorForm {
    let t = |c, a, b, d| (c, [a, b, d, 0]);
    ExteriorForm::from_terms(
        7,
        &[t(1, 1, 2, 3), t(1, 1, 4, 5), t(1, 1, 6, 7), t(1, 2, 4, 6), t(-1, 2, 5, 7), t(-1, 3, 4, 7), t(-1, 3, 5, 6)],
        3,
    )
}

/// The Cayley 4-form
/// `e¹²³⁴ + e¹²⁵⁶ + e¹²⁷⁸ + e¹³⁵⁷ − e¹³⁶⁸ − e¹⁴⁵⁸ − e¹⁴⁶⁷ − e²³⁵⁸ − e²³⁶⁷ − e²⁴⁵⁷ + e²⁴⁶⁸ + e³⁴⁵⁶ + e³⁴⁷⁸ + e⁵⁶⁷⁸`.
pub fn cayley_form() -> ExteriorForm {
    ExteriorForm::from_terms(
        8,
        &[
            (1, [1, 2, 3, 4]),
            (1, [1, 2, 5, 6]),
            (1, [1, 2, 7, 8]),
            (1, [1, 3, 5, 7]),
            (-1, [1, 3, 6, 8]),
            (-1, [1, 4, 5, 8]),
            (-1, [1, 4, 6, 7]),
            (-1, [2, 3, 5, 8]),
            (-1, [2, 3, 6, 7]),
            (-1, [2, 4, 5, 7]),
            (1, [2, 4, 6, 8]),
            (1, [3, 4, 5, 6]),
            (1, [3, 4, 7, 8]),
            (1, [5, 6, 7, 8]),
        ],
        4,
    )
}

pub fn g2_rep() -> Result<LieRep> {
    LieRep::new(RepSpec::G2.to_string(), Matrix::identity(7), g2_form().annihilator(), FieldMarker::Real)
}

pub fn spin7_rep() -> Result<LieRep> {
    LieRep::new(RepSpec::Spin7.to_string(), Matrix::identity(8), cayley_form().annihilator(), FieldMarker::Real)
}
