use rayon::prelude::*;

use super::pspace::trace_form;
use super::{pair_count, pair_index, pairs, triples, CurvTensor, PMap};
use crate::error::{Error, Result};
use crate::exact::{kernel_of_rows, orth_complement, Field, KronGram, Matrix, Scalar, Strategy, Subspace};
use crate::reps::LieRep;

/// Column of the coefficient `(eᵢ∧eⱼ) ⊗ Bₐ` with the sign from ordering.
fn col(n: usize, d: usize, i: usize, j: usize, a: usize) -> (usize, bool) {
    if i < j {
        (pair_index(n, i, j) * d + a, false)
    } else {
        (pair_index(n, j, i) * d + a, true)
    }
}

/// `R(eᵢ,eⱼ)e_k + R(eⱼ,e_k)eᵢ + R(e_k,eᵢ)eⱼ` for all `i < j < k`,
/// concatenated.
pub fn bianchi_defect<F: Field>(rep: &LieRep<F>, r: &CurvTensor<F>) -> Vec<F> {
    let n = rep.n();
    let vals: Vec<Matrix<F>> = pairs(n).map(|(i, j)| r.at(rep, i, j)).collect();
    let at = |i: usize, j: usize, v: usize| -> Vec<F> {
        if i < j {
            vals[pair_index(n, i, j)].col(v)
        } else {
            vals[pair_index(n, j, i)].col(v).iter().map(F::negated).collect()
        }
    };
    triples(n)
        .flat_map(|(i, j, k)| {
            let (a, b, c) = (at(i, j, k), at(j, k, i), at(k, i, j));
            (0..n).map(move |t| a[t].plus(&b[t]).plus(&c[t])).collect::<Vec<_>>()
        })
        .collect()
}

fn bianchi_rows<F: Field>(rep: &LieRep<F>) -> impl Iterator<Item = Vec<F>> + '_ {
    let (n, d) = (rep.n(), rep.dim());
    let cols = pair_count(n) * d;
    let basis = rep.basis();
    triples(n).flat_map(move |(i, j, k)| {
        (0..n).map(move |t| {
            let mut row = vec![F::zero(); cols];
            for (a, b) in basis.iter().enumerate() {
                for (u, v, w) in [(i, j, k), (j, k, i), (k, i, j)] {
                    let x = &b[(t, w)];
                    if x.is_zero() {
                        continue;
                    }
                    let (c, neg) = col(n, d, u, v, a);
                    row[c] = if neg { row[c].minus(x) } else { row[c].plus(x) };
                }
            }
            row
        })
    })
}

/// The Bianchi kernel `R(h)` for any linear algebra, as a subspace of
/// `F^{C(n,2)·d}`.
pub fn curvature_space<F: Field>(rep: &LieRep<F>, strategy: Strategy) -> Subspace<F> {
    kernel_of_rows(pair_count(rep.n()) * rep.dim(), bianchi_rows(rep), strategy)
}

/// `Ric(R)(u, v) = tr(z ↦ R(u, z)v)`.
pub fn ricci<F: Field>(rep: &LieRep<F>, r: &CurvTensor<F>) -> Matrix<F> {
    let n = rep.n();
    let mut out = Matrix::<F>::zeros(n, n);
    for u in 0..n {
        for z in 0..n {
            if u == z {
                continue;
            }
            let m = rep.combine(&r.get(u, z));
            for v in 0..n {
                let x = &m[(z, v)];
                if !x.is_zero() {
                    out[(u, v)] = out[(u, v)].plus(x);
                }
            }
        }
    }
    out
}

/// `(ξ·R)(x, y) = [ξ, R(x, y)] − R(ξx, y) − R(x, ξy)` for `ξ = B_a`.
pub fn act_on_r<F: Field>(rep: &LieRep<F>, a: usize, r: &CurvTensor<F>) -> Result<CurvTensor<F>> {
    let ad = rep.adjoint_matrices().ok_or_else(|| Error::Precondition("basis is not closed under brackets".into()))?;
    let (n, d) = (rep.n(), rep.dim());
    let xi = &rep.basis()[a];
    let bracket = r.coeffs().mul(&ad[a].transpose());
    let mut out = Matrix::zeros(pair_count(n), d);
    for (p, (i, j)) in pairs(n).enumerate() {
        let mut row = bracket.row(p).to_vec();
        for l in 0..n {
            let (xi_li, xi_lj) = (&xi[(l, i)], &xi[(l, j)]);
            if !xi_li.is_zero() {
                for (o, v) in row.iter_mut().zip(r.get(l, j)) {
                    o.sub_mul_assign(xi_li, &v);
                }
            }
            if !xi_lj.is_zero() {
                for (o, v) in row.iter_mut().zip(r.get(i, l)) {
                    o.sub_mul_assign(xi_lj, &v);
                }
            }
        }
        out.row_mut(p).clone_from_slice(&row);
    }
    CurvTensor::from_coeffs(n, out)
}

/// Pairing on `Λ²V* ⊗ h`: inverse of the induced `Λ²` gram, tensored with
/// the trace form on `h`.
pub fn r_pairing(rep: &LieRep) -> KronGram {
    let n = rep.n();
    let g = rep.gram();
    let ps: Vec<(usize, usize)> = pairs(n).collect();
    let l2 = Matrix::from_fn(ps.len(), ps.len(), |x, y| {
        let ((i, j), (k, l)) = (ps[x], ps[y]);
        &(&g[(i, k)] * &g[(j, l)]) - &(&g[(i, l)] * &g[(j, k)])
    });
    KronGram { left: l2.inverse().expect("induced form is nondegenerate"), right: trace_form(rep) }
}

#[derive(Clone, Debug)]
pub struct RSpaceResult {
    pub full: Subspace,
    pub r0: Subspace,
    pub r1: Subspace,
    pub rprime: Subspace,
}

impl RSpaceResult {
    pub fn dims(&self) -> (usize, usize, usize, usize) {
        (self.full.dim(), self.r0.dim(), self.r1.dim(), self.rprime.dim())
    }
}

pub fn rspace(rep: &LieRep) -> Result<RSpaceResult> {
    rspace_with(rep, Strategy::Incremental)
}

/// `R(h) = R₀ ⊕ R₁ ⊕ R′`: Ricci-flat part, `h`-invariants, and the
/// orthogonal complement of their sum.
pub fn rspace_with(rep: &LieRep, strategy: Strategy) -> Result<RSpaceResult> {
    let (n, d) = (rep.n(), rep.dim());
    let full = curvature_space(rep, strategy);
    let r0 = full.restrict_kernel(n * n, |v| ricci(rep, &CurvTensor::from_vector(n, d, v)).into_data());
    if rep.adjoint_matrices().is_none() {
        return Err(Error::Precondition("basis is not closed under brackets".into()));
    }
    let images: Vec<Vec<Scalar>> = full
        .vectors()
        .par_iter()
        .map(|v| {
            let r = CurvTensor::from_vector(n, d, v);
            (0..d).flat_map(|a| act_on_r(rep, a, &r).expect("closed").to_vector()).collect()
        })
        .collect();
    let r1 = invariant_part(&full, &images);
    let rprime = orth_complement(&r0.sum(&r1)?, &full, &r_pairing(rep))?;
    Ok(RSpaceResult { full, r0, r1, rprime })
}

fn invariant_part(space: &Subspace, images: &[Vec<Scalar>]) -> Subspace {
    let out_dim = images.first().map_or(0, Vec::len);
    let rows = (0..out_dim)
        .map(|r| images.iter().map(|im| im[r].clone()).collect::<Vec<_>>())
        .filter(|row| row.iter().any(|x| !x.is_zero()));
    let coeffs = kernel_of_rows(space.dim(), rows, Strategy::Incremental);
    Subspace::span(space.ambient_dim(), coeffs.vectors().iter().map(|c| space.combine(c)))
}

/// `τ(x ⊗ R) = R(·, x)`.
pub fn tau_slice<F: Field>(r: &CurvTensor<F>, x: &[F]) -> PMap<F> {
    let (n, d) = (r.n(), r.d());
    let mut out = Matrix::<F>::zeros(n, d);
    for i in 0..n {
        for (j, xj) in x.iter().enumerate() {
            if xj.is_zero() || i == j {
                continue;
            }
            for (o, v) in out.row_mut(i).iter_mut().zip(r.get(i, j)) {
                o.add_mul_assign(xj, &v);
            }
        }
    }
    PMap::from_coeffs(out)
}

/// Span of `R(·, eᵢ)` over a family of curvature tensors.
pub fn tau_image<F: Field>(rep: &LieRep<F>, tensors: &Subspace<F>) -> Subspace<F> {
    let (n, d) = (rep.n(), rep.dim());
    let slices = tensors.vectors().iter().flat_map(|v| {
        let r = CurvTensor::from_vector(n, d, v);
        (0..n).map(move |i| tau_slice(&r, &crate::exact::unit(n, i)).to_vector())
    });
    Subspace::span(n * d, slices)
}

/// Span of all values `R(eᵢ, eⱼ)` in `h`-coordinates.
pub fn berger_span<F: Field>(rep: &LieRep<F>, tensors: &Subspace<F>) -> Subspace<F> {
    value_span(rep.dim(), tensors)
}

/// Span of all values `P(eᵢ)` in `h`-coordinates.
pub fn pspan<F: Field>(rep: &LieRep<F>, maps: &Subspace<F>) -> Subspace<F> {
    value_span(rep.dim(), maps)
}

fn value_span<F: Field>(d: usize, space: &Subspace<F>) -> Subspace<F> {
    if d == 0 {
        return Subspace::zero(0);
    }
    Subspace::span(d, space.vectors().iter().flat_map(|v| v.chunks(d).map(<[F]>::to_vec).collect::<Vec<_>>()))
}
