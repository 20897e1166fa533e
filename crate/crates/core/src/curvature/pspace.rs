use super::{triples, PMap};
use crate::error::{Error, Result};
use crate::exact::{kernel_of_rows, orth_complement, Field, KronGram, Matrix, Scalar, Strategy, Subspace};
use crate::reps::{wedge_with, LieRep};

/// `G·Bₐ` for each basis matrix, so that `(Bₐv, w) = (G Bₐ)[w][v]`.
fn lowered<F: Field>(rep: &LieRep<F>) -> Vec<Matrix<F>> {
    rep.basis().iter().map(|b| rep.gram().mul(b)).collect()
}

/// `(P(eᵢ)eⱼ, e_k) + (P(eⱼ)e_k, eᵢ) + (P(e_k)eᵢ, eⱼ)` for `i < j < k`.
pub fn cyclic_defect<F: Field>(rep: &LieRep<F>, p: &PMap<F>) -> Vec<F> {
    let g = rep.gram();
    let vals: Vec<Matrix<F>> = (0..rep.n()).map(|i| g.mul(&p.at(rep, i))).collect();
    triples(rep.n()).map(|(i, j, k)| vals[i][(k, j)].plus(&vals[j][(i, k)]).plus(&vals[k][(j, i)])).collect()
}

/// Rows of the cyclic constraint matrix: one per triple `i < j < k`,
/// columns over `(i, a)` with `i` outer.
pub fn p_constraint_rows<F: Field>(rep: &LieRep<F>) -> impl Iterator<Item = Vec<F>> + '_ {
    let (n, d) = (rep.n(), rep.dim());
    let gb = lowered(rep);
    triples(n).map(move |(i, j, k)| {
        let mut row = vec![F::zero(); n * d];
        for (a, m) in gb.iter().enumerate() {
            row[i * d + a] = m[(k, j)].clone();
            row[j * d + a] = m[(i, k)].clone();
            row[k * d + a] = m[(j, i)].clone();
        }
        row
    })
}

/// `P(h)` as a subspace of `F^{n·d}`.
pub fn p_kernel<F: Field>(rep: &LieRep<F>, strategy: Strategy) -> Subspace<F> {
    kernel_of_rows(rep.n() * rep.dim(), p_constraint_rows(rep), strategy)
}

/// `R̃ic(P) = Σᵢⱼ (G⁻¹)ᵢⱼ P(eᵢ)eⱼ`.
pub fn ricci_tilde<F: Field>(rep: &LieRep<F>, p: &PMap<F>) -> Vec<F> {
    let n = rep.n();
    let ginv = rep.gram_inverse();
    let mut out = vec![F::zero(); n];
    for i in 0..n {
        let pi = p.at(rep, i);
        let col = pi.mul_vec(&ginv.col(i));
        for (o, x) in out.iter_mut().zip(col) {
            *o = o.plus(&x);
        }
    }
    out
}

/// Pairing on `Hom(V, h)`: `G⁻¹ ⊗ H`, `H_ab = tr(G⁻¹ Bₐᵀ G B_b)`.
/// For the identity gram this is `Σᵢ tr(P(eᵢ)ᵀ Q(eᵢ))`.
pub fn p_pairing(rep: &LieRep) -> KronGram {
    KronGram { left: rep.gram_inverse().clone(), right: trace_form(rep) }
}

pub(crate) fn trace_form(rep: &LieRep) -> Matrix {
    let ginv = rep.gram_inverse();
    let gb = lowered(rep);
    let d = rep.dim();
    let ginv_bt: Vec<Matrix> = rep.basis().iter().map(|b| ginv.mul(&b.transpose())).collect();
    Matrix::from_fn(d, d, |a, b| ginv_bt[a].mul(&gb[b]).trace())
}

#[derive(Clone, Debug)]
pub struct PSpaceResult {
    pub full: Subspace,
    pub p0: Subspace,
    pub p1: Subspace,
}

impl PSpaceResult {
    pub fn dims(&self) -> (usize, usize, usize) {
        (self.full.dim(), self.p0.dim(), self.p1.dim())
    }
}

pub fn pspace(rep: &LieRep) -> Result<PSpaceResult> {
    pspace_with(rep, Strategy::Incremental)
}

/// `P(h)`, `P₀ = P ∩ ker R̃ic` and its orthogonal complement `P₁`.
pub fn pspace_with(rep: &LieRep, strategy: Strategy) -> Result<PSpaceResult> {
    let (n, d) = (rep.n(), rep.dim());
    let full = p_kernel(rep, strategy);
    let p0 = full.restrict_kernel(n, |v| ricci_tilde(rep, &PMap::from_vector(n, d, v)));
    let p1 = orth_complement(&p0, &full, &p_pairing(rep))?;
    Ok(PSpaceResult { full, p0, p1 })
}

/// `(ξ·P)(y) = [ξ, P(y)] − P(ξy)` for `ξ = B_a`.
pub fn act_on_p<F: Field>(rep: &LieRep<F>, a: usize, p: &PMap<F>) -> Result<PMap<F>> {
    let ad = rep.adjoint_matrices().ok_or_else(|| Error::Precondition("basis is not closed under brackets".into()))?;
    let xi = &rep.basis()[a];
    let bracket = p.coeffs().mul(&ad[a].transpose());
    let pulled = xi.transpose().mul(p.coeffs());
    Ok(PMap::from_coeffs(bracket.minus(&pulled)))
}

/// `so(V, G)` with basis `eᵢ∧eⱼ`, the natural home of the Weyl part.
pub fn ambient_so<F: Field>(rep: &LieRep<F>) -> LieRep<F> {
    let n = rep.n();
    let g = rep.gram();
    let unit = |i| crate::exact::unit::<F>(n, i);
    let basis = super::pairs(n).map(|(i, j)| wedge_with(g, &unit(i), &unit(j))).collect();
    LieRep::new(format!("so({})", n), g.clone(), basis, rep.field()).expect("wedge basis is independent")
}

/// `W = P + 1/(n−1) R̃ic(P)∧·`, returned over [`ambient_so`].
pub fn weyl_part(rep: &LieRep, p: &PMap) -> Result<PMap> {
    weyl_part_in(rep, &ambient_so(rep), p)
}

pub fn weyl_part_in(rep: &LieRep, ambient: &LieRep, p: &PMap) -> Result<PMap> {
    let n = rep.n();
    if n < 2 {
        return Err(Error::Precondition("Weyl part needs n >= 2".into()));
    }
    if cyclic_defect(rep, p).iter().any(|x| !x.is_zero()) {
        return Err(Error::Precondition("P is not in P(h)".into()));
    }
    let r = ricci_tilde(rep, p);
    let scale = Scalar::new(1, n as i64 - 1);
    let values: Vec<Matrix> = (0..n)
        .map(|i| {
            let mut w = p.at(rep, i);
            w.add_scaled(&scale, &wedge_with(rep.gram(), &r, &crate::exact::unit(n, i)));
            w
        })
        .collect();
    PMap::from_values(ambient, &values)
}

/// First prolongation `{S : V → h | S(x)y = S(y)x}`.
pub fn prolongation<F: Field>(rep: &LieRep<F>, strategy: Strategy) -> Subspace<F> {
    let (n, d) = (rep.n(), rep.dim());
    let basis = rep.basis();
    let rows = super::pairs(n).flat_map(move |(i, j)| {
        (0..n).map(move |r| {
            let mut row = vec![F::zero(); n * d];
            for (a, b) in basis.iter().enumerate() {
                row[i * d + a] = b[(r, j)].clone();
                row[j * d + a] = b[(r, i)].negated();
            }
            row
        })
    });
    kernel_of_rows(n * d, rows, strategy)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::exact::{dot, Gram};
    use crate::reps::{build, so_rep, FieldMarker, RepSpec};

    fn x_wedge(rep: &LieRep, x: &[Scalar]) -> PMap {
        let n = rep.n();
        let values: Vec<Matrix> = (0..n).map(|i| wedge_with(rep.gram(), x, &crate::exact::unit(n, i))).collect();
        PMap::from_values(rep, &values).unwrap()
    }

    #[test]
    fn zero_map() {
        let rep = so_rep(4).unwrap();
        let z = PMap::zero(4, 6);
        assert!(cyclic_defect(&rep, &z).iter().all(Scalar::is_zero));
        assert!(ricci_tilde(&rep, &z).iter().all(Scalar::is_zero));
    }

    #[test]
    fn wedge_map_is_in_p() {
        let rep = so_rep(5).unwrap();
        let x: Vec<Scalar> = [1, -2, 0, 3, 1].iter().map(|&v| Scalar::from_int(v)).collect();
        let p = x_wedge(&rep, &x);
        assert!(cyclic_defect(&rep, &p).iter().all(Scalar::is_zero));
        let expected: Vec<Scalar> = x.iter().map(|v| v * &Scalar::from_int(-4)).collect();
        assert_eq!(ricci_tilde(&rep, &p), expected);
        let w = weyl_part(&rep, &p).unwrap();
        assert!(w.coeffs().is_zero());
    }

    #[test]
    fn constraint_rows_match_defect() {
        let rep = build(RepSpec::U(2)).unwrap();
        let (n, d) = (rep.n(), rep.dim());
        let v: Vec<Scalar> = (0..n * d).map(|k| Scalar::from_int((k as i64 * 7 % 5) - 2)).collect();
        let p = PMap::from_vector(n, d, &v);
        let via_rows: Vec<Scalar> = p_constraint_rows(&rep).map(|r| dot(&r, &v)).collect();
        assert_eq!(via_rows, cyclic_defect(&rep, &p));
    }

    #[test]
    fn so3_split() {
        let r = pspace(&so_rep(3).unwrap()).unwrap();
        assert_eq!(r.dims(), (8, 5, 3));
    }

    #[test]
    fn oracle_route_agrees() {
        let rep = build(RepSpec::G2).unwrap();
        assert_eq!(p_kernel(&rep, Strategy::Dense), p_kernel(&rep, Strategy::Incremental));
    }

    #[test]
    fn p1_is_orthogonal_to_p0() {
        let rep = build(RepSpec::U(2)).unwrap();
        let r = pspace(&rep).unwrap();
        let g = p_pairing(&rep);
        for a in r.p0.vectors() {
            for b in r.p1.vectors() {
                assert!(g.pair(a, b).is_zero());
            }
        }
    }

    #[test]
    fn prolongation_of_so_vanishes() {
        for n in 3..=5 {
            assert_eq!(prolongation(&so_rep(n).unwrap(), Strategy::Incremental).dim(), 0);
        }
        let trivial = LieRep::<Scalar>::new("0", Matrix::identity(3), vec![], FieldMarker::Real).unwrap();
        assert_eq!(prolongation(&trivial, Strategy::Incremental).dim(), 0);
    }
}
