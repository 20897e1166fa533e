use super::{FieldMarker, LieRep, RepSpec};
use crate::error::{Error, Result};
use crate::exact::{kernel_of_rows, Basis, CScalar, Field, Matrix, Scalar, Strategy};

/// `(x∧y)z = (x,z)y − (y,z)x` for the form `g`, i.e. `y(gx)ᵀ − x(gy)ᵀ`.
pub fn wedge_with<F: Field>(g: &Matrix<F>, x: &[F], y: &[F]) -> Matrix<F> {
    assert_eq!(x.len(), y.len(), "wedge factors differ in length");
    let gx = g.mul_vec(x);
    let gy = g.mul_vec(y);
    Matrix::from_fn(x.len(), x.len(), |r, c| y[r].times(&gx[c]).minus(&x[r].times(&gy[c])))
}

/// Euclidean wedge.
pub fn wedge(x: &[Scalar], y: &[Scalar]) -> Result<Matrix> {
    if x.len() != y.len() {
        return Err(Error::DimensionMismatch { expected: x.len(), found: y.len() });
    }
    Ok(wedge_with(&Matrix::identity(x.len()), x, y))
}

/// `eᵢ∧eⱼ` for `i < j`, lexicographic.
pub fn so_basis(n: usize) -> Vec<Matrix> {
    let mut out = Vec::with_capacity(n * (n.saturating_sub(1)) / 2);
    for i in 0..n {
        for j in i + 1..n {
            let mut m = Matrix::zeros(n, n);
            m[(j, i)] = Scalar::ONE;
            m[(i, j)] = -Scalar::ONE;
            out.push(m);
        }
    }
    out
}

/// Kernel of a linear condition on `span(ambient)`, returned as matrices.
///
/// `condition` must be linear; it is sampled on each ambient basis element.
fn cut_out(ambient: &[Matrix], condition: impl Fn(&Matrix) -> Vec<Scalar>) -> Vec<Matrix> {
    let images: Vec<Vec<Scalar>> = ambient.iter().map(&condition).collect();
    let out_dim = images.first().map_or(0, Vec::len);
    let rows = (0..out_dim).map(|r| images.iter().map(|v| v[r].clone()).collect::<Vec<_>>());
    let kernel = kernel_of_rows(ambient.len(), rows, Strategy::Incremental);
    let n = ambient.first().map_or(0, Matrix::rows);
    kernel
        .vectors()
        .iter()
        .map(|c| {
            let mut m = Matrix::zeros(n, n);
            for (x, b) in c.iter().zip(ambient) {
                m.add_scaled(x, b);
            }
            m
        })
        .collect()
}

fn commutes_with<'a>(ops: &'a [Matrix]) -> impl Fn(&Matrix) -> Vec<Scalar> + 'a {
    move |a| ops.iter().flat_map(|j| a.commutator(j).into_data()).collect()
}

fn real_rep(label: String, n: usize, basis: Vec<Matrix>) -> Result<LieRep> {
    LieRep::new(label, Matrix::identity(n), basis, FieldMarker::Real)
}

pub fn so_rep(n: usize) -> Result<LieRep> {
    real_rep(RepSpec::So(n).to_string(), n, so_basis(n))
}

/// Complex structure `J(x, y) = (−y, x)` on `ℝᵐ ⊕ ℝᵐ`.
pub fn j_matrix(m: usize) -> Matrix {
    Matrix::from_fn(2 * m, 2 * m, |r, c| {
        if r + m == c {
            -Scalar::ONE
        } else if c + m == r {
            Scalar::ONE
        } else {
            Scalar::ZERO
        }
    })
}

pub fn u_rep(m: usize) -> Result<LieRep> {
    let j = [j_matrix(m)];
    let basis = cut_out(&so_basis(2 * m), commutes_with(&j));
    real_rep(RepSpec::U(m).to_string(), 2 * m, basis)
}

pub fn su_rep(m: usize) -> Result<LieRep> {
    let j = [j_matrix(m)];
    let comm = commutes_with(&j);
    let basis = cut_out(&so_basis(2 * m), |a| {
        let mut v = comm(a);
        v.push(j[0].mul(a).trace());
        v
    });
    real_rep(RepSpec::Su(m).to_string(), 2 * m, basis)
}

/// Left multiplication by `i`, `j`, `k` on each quaternion block `ℝ⁴`.
pub fn quaternion_triple(m: usize) -> [Matrix; 3] {
    let li = Matrix::from_ints(&[&[0, -1, 0, 0], &[1, 0, 0, 0], &[0, 0, 0, -1], &[0, 0, 1, 0]]);
    let lj = Matrix::from_ints(&[&[0, 0, -1, 0], &[0, 0, 0, 1], &[1, 0, 0, 0], &[0, -1, 0, 0]]);
    let j1 = Matrix::block_diag(&vec![li; m]);
    let j2 = Matrix::block_diag(&vec![lj; m]);
    let j3 = j1.mul(&j2);
    [j1, j2, j3]
}

fn sp_basis(m: usize) -> Vec<Matrix> {
    let [j1, j2, _] = quaternion_triple(m);
    cut_out(&so_basis(4 * m), commutes_with(&[j1, j2]))
}

pub fn sp_rep(m: usize) -> Result<LieRep> {
    real_rep(RepSpec::Sp(m).to_string(), 4 * m, sp_basis(m))
}

pub fn sp_sp1_rep(m: usize) -> Result<LieRep> {
    let mut basis = sp_basis(m);
    basis.extend(quaternion_triple(m));
    real_rep(RepSpec::SpSp1(m).to_string(), 4 * m, basis)
}

/// `sp(k)` inside `u(2k) ⊂ so(4k)` in the complex frame of [`j_matrix`]:
/// the elements commuting with `J` and with the realified antilinear map
/// `v ↦ Ω v̄`, `Ω = [[0, I], [−I, 0]]`.
pub fn sp_u_frame(k: usize) -> Result<LieRep> {
    let m = 2 * k;
    let omega = Matrix::from_fn(m, m, |r, c| {
        if r + k == c {
            Scalar::ONE
        } else if c + k == r {
            -Scalar::ONE
        } else {
            Scalar::ZERO
        }
    });
    let j2 = Matrix::block_diag(&[omega.clone(), omega.scale(&-Scalar::ONE)]);
    let basis = cut_out(&so_basis(2 * m), commutes_with(&[j_matrix(m), j2]));
    real_rep(format!("sp:{k} (complex frame)"), 2 * m, basis)
}

pub fn soxso_rep(p: usize, q: usize) -> Result<LieRep> {
    let (ip, iq) = (Matrix::identity(p), Matrix::identity(q));
    let mut basis: Vec<Matrix> = so_basis(p).iter().map(|a| a.kron(&iq)).collect();
    basis.extend(so_basis(q).iter().map(|b| ip.kron(b)));
    real_rep(RepSpec::SoxSo(p, q).to_string(), p * q, basis)
}

/// Adjoint action in a basis `vs` of a matrix algebra, with the gram of
/// `−½ tr(XY)`. Entries must come out real.
fn adjoint_of<F: Field>(label: String, vs: &[Matrix<F>], to_real: impl Fn(&F) -> Scalar) -> Result<LieRep> {
    let d = vs.len();
    let coords = Basis::new(vs.iter().map(|v| v.data().to_vec()).collect())?;
    let half = F::from_scalar(Scalar::new(-1, 2));
    let gram = Matrix::from_fn(d, d, |a, b| to_real(&vs[a].mul(&vs[b]).trace().times(&half)));
    let ad = vs
        .iter()
        .map(|x| {
            let cols: Vec<Vec<Scalar>> = vs
                .iter()
                .map(|y| {
                    let c = coords.coords(x.commutator(y).data()).expect("matrix algebra basis is closed");
                    c.iter().map(&to_real).collect()
                })
                .collect();
            Matrix::from_cols(d, &cols)
        })
        .collect();
    LieRep::new(label, gram, ad, FieldMarker::Real)
}

/// `so(k)` acting on itself; orthonormal basis `eᵢ∧eⱼ`.
pub fn adjoint_so(k: usize) -> Result<LieRep> {
    adjoint_of(RepSpec::AdjointSo(k).to_string(), &so_basis(k), Scalar::clone)
}

/// `su(k)` acting on itself in the orthogonal basis
/// `Eᵢⱼ − Eⱼᵢ`, `i(Eᵢⱼ + Eⱼᵢ)`, `i·diag(1,…,1,−l,0,…)`.
///
/// The last family has squared norm `l(l+1)/2`, which is not a rational
/// square in general, so the gram is diagonal rather than the identity.
pub fn adjoint_su(k: usize) -> Result<LieRep> {
    let i = CScalar::I;
    let mut vs: Vec<Matrix<CScalar>> = Vec::new();
    for a in 0..k {
        for b in a + 1..k {
            let mut m = Matrix::zeros(k, k);
            m[(a, b)] = CScalar::ONE;
            m[(b, a)] = -&CScalar::ONE;
            vs.push(m);
        }
    }
    for a in 0..k {
        for b in a + 1..k {
            let mut m = Matrix::zeros(k, k);
            m[(a, b)] = i.clone();
            m[(b, a)] = i.clone();
            vs.push(m);
        }
    }
    for l in 1..k {
        let mut m = Matrix::zeros(k, k);
        for a in 0..l {
            m[(a, a)] = i.clone();
        }
        m[(l, l)] = CScalar::new(Scalar::ZERO, Scalar::from_int(-(l as i64)));
        vs.push(m);
    }
    adjoint_of(RepSpec::AdjointSu(k).to_string(), &vs, |c: &CScalar| {
        assert!(c.is_real(), "adjoint coefficients of su(k) are real");
        c.re.clone()
    })
}

/// Builds the representation named by `spec`.
pub fn build(spec: RepSpec) -> Result<LieRep> {
    match spec.validate()? {
        RepSpec::So(n) => so_rep(n),
        RepSpec::U(m) => u_rep(m),
        RepSpec::Su(m) => su_rep(m),
        RepSpec::Sp(m) => sp_rep(m),
        RepSpec::SpSp1(m) => sp_sp1_rep(m),
        RepSpec::G2 => super::g2_rep(),
        RepSpec::Spin7 => super::spin7_rep(),
        RepSpec::Spin9 => super::spin9_rep(),
        RepSpec::AdjointSo(k) => adjoint_so(k),
        RepSpec::AdjointSu(k) => adjoint_su(k),
        RepSpec::SoxSo(p, q) => soxso_rep(p, q),
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::exact::unit;

    fn e(n: usize, i: usize) -> Vec<Scalar> {
        unit(n, i)
    }

    #[test]
    fn wedge_examples() {
        let w = wedge(&e(3, 0), &e(3, 1)).unwrap();
        assert_eq!(w.mul_vec(&e(3, 0)), e(3, 1));
        assert!(w.mul_vec(&e(3, 2)).iter().all(Scalar::is_zero));
        let x = vec![Scalar::from_int(2), Scalar::new(1, 3), Scalar::from_int(-1)];
        assert!(wedge(&x, &x).unwrap().is_zero());
        assert!(wedge(&e(3, 0), &e(2, 0)).is_err());
    }

    #[test]
    fn dims_match_families() {
        for spec in [
            RepSpec::So(2),
            RepSpec::So(4),
            RepSpec::U(1),
            RepSpec::U(3),
            RepSpec::Su(2),
            RepSpec::Su(3),
            RepSpec::Sp(1),
            RepSpec::Sp(2),
            RepSpec::SpSp1(1),
            RepSpec::SpSp1(2),
            RepSpec::G2,
            RepSpec::Spin7,
            RepSpec::AdjointSo(3),
            RepSpec::AdjointSo(4),
            RepSpec::AdjointSu(2),
            RepSpec::AdjointSu(3),
            RepSpec::SoxSo(3, 3),
            RepSpec::SoxSo(3, 4),
        ] {
            let rep = build(spec).unwrap();
            assert_eq!(rep.n(), spec.n(), "{spec}");
            assert_eq!(rep.dim(), spec.expected_dim(), "{spec}");
            assert!(rep.is_metric_skew(), "{spec}");
            assert!(rep.closure_check(), "{spec}");
        }
    }

    #[test]
    fn commutant_types() {
        for n in 3..=5 {
            assert_eq!(build(RepSpec::So(n)).unwrap().commutant().dim(), 1);
        }
        for m in 1..=3 {
            assert_eq!(build(RepSpec::U(m)).unwrap().commutant().dim(), 2);
        }
        for m in 1..=2 {
            assert_eq!(build(RepSpec::Sp(m)).unwrap().commutant().dim(), 4);
        }
        assert_eq!(build(RepSpec::SpSp1(2)).unwrap().commutant().dim(), 1);
        assert_eq!(build(RepSpec::AdjointSu(3)).unwrap().commutant().dim(), 1);
        assert_eq!(build(RepSpec::SoxSo(3, 3)).unwrap().commutant().dim(), 1);
    }

    #[test]
    fn sp_complex_frame() {
        let sp = sp_u_frame(1).unwrap();
        assert_eq!(sp.dim(), 3);
        assert!(sp.closure_check());
        let u = u_rep(2).unwrap();
        assert!(sp.basis().iter().all(|b| u.contains(b)));
        let sp2 = sp_u_frame(2).unwrap();
        assert_eq!(sp2.dim(), 10);
    }

    #[test]
    fn adjoint_su_gram_is_diagonal() {
        let rep = adjoint_su(3).unwrap();
        let g = rep.gram();
        for a in 0..8 {
            for b in 0..8 {
                let want = match (a, b) {
                    (7, 7) => Scalar::from_int(3),
                    _ if a == b => Scalar::ONE,
                    _ => Scalar::ZERO,
                };
                assert_eq!(g[(a, b)], want);
            }
        }
        assert_eq!(adjoint_so(4).unwrap().gram(), &Matrix::identity(6));
    }
}
