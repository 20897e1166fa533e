use super::PMap;
use crate::error::{Error, Result};
use crate::exact::{dot, unit, CScalar, Matrix, Scalar};
use crate::reps::{j_matrix, quaternion_triple, wedge_with, LieRep};

/// Closed-form elements of `P(h)`.
#[derive(Clone, Debug)]
pub enum PKind {
    /// `P(y) = x∧y`.
    Wedge { x: Vec<Scalar> },
    /// `P(y) = Sy∧x + y∧Sx`, `S` symmetric.
    SymPair { s: Matrix, x: Vec<Scalar> },
    /// `P(y) = Sy∧x` with `S` symmetric, `tr S = 0`, `Sx = 0`.
    Traceless { s: Matrix, x: Vec<Scalar> },
    /// `P(y) = ½(Jx, y)J + ¼(x∧y + Jx∧Jy)` on `ℝ²ᵐ`. The sign of the `J` term
    /// is tied to the wedge convention `(u∧v)z = (u, z)v − (v, z)u`.
    Unitary { x: Vec<Scalar> },
    /// `P(y) = ½ Σ (J_α x, y)J_α + ¼(x∧y + Σ J_α x∧J_α y)` on `ℝ⁴ᵐ`.
    Quaternionic { x: Vec<Scalar> },
    /// `P(y) = [x, y]` on an adjoint representation; `x` in `h`-coordinates.
    Adjoint { x: Vec<Scalar> },
    /// `P = S − S₁` on `ℂᵐ = ℝᵐ ⊕ iℝᵐ`; `t[a][b][c]` is the `e_c` coefficient
    /// of `S(e_a)e_b` and must be symmetric in `a, b`.
    Hermitian { t: Vec<Vec<Vec<CScalar>>> },
}

/// `X + iY ↦ [[X, −Y], [Y, X]]`.
pub fn realify(m: &Matrix<CScalar>) -> Matrix {
    let k = m.rows();
    Matrix::from_fn(2 * k, 2 * k, |r, c| {
        let z = &m[(r % k, c % k)];
        match (r < k, c < k) {
            (true, true) | (false, false) => z.re.clone(),
            (true, false) => -&z.im,
            (false, true) => z.im.clone(),
        }
    })
}

/// Imaginary part of the complex trace of `A ∈ u(m)`, i.e. `−½ tr(JA)`.
/// Real-valued, since the trace of a skew-Hermitian matrix is imaginary.
pub fn complex_trace(a: &Matrix) -> Scalar {
    let m = a.rows() / 2;
    &j_matrix(m).mul(a).trace() * &Scalar::new(-1, 2)
}

fn check_len(x: &[Scalar], n: usize) -> Result<()> {
    if x.len() != n {
        return Err(Error::DimensionMismatch { expected: n, found: x.len() });
    }
    Ok(())
}

fn check_symmetric(s: &Matrix, n: usize) -> Result<()> {
    if s.rows() != n || !s.is_symmetric() {
        return Err(Error::InvalidParameter("S must be a symmetric n×n matrix".into()));
    }
    Ok(())
}

/// Builds the map and expresses it over the basis of `rep`.
pub fn p_explicit(rep: &LieRep, kind: &PKind) -> Result<PMap> {
    let n = rep.n();
    let g = rep.gram();
    let w = |a: &[Scalar], b: &[Scalar]| wedge_with(g, a, b);
    let e = |i| unit::<Scalar>(n, i);
    let values: Vec<Matrix> = match kind {
        PKind::Wedge { x } => {
            check_len(x, n)?;
            (0..n).map(|i| w(x, &e(i))).collect()
        }
        PKind::SymPair { s, x } => {
            check_len(x, n)?;
            check_symmetric(s, n)?;
            let sx = s.mul_vec(x);
            (0..n).map(|i| w(&s.col(i), x).plus(&w(&e(i), &sx))).collect()
        }
        PKind::Traceless { s, x } => {
            check_len(x, n)?;
            check_symmetric(s, n)?;
            if !s.trace().is_zero() || s.mul_vec(x).iter().any(|v| !v.is_zero()) {
                return Err(Error::InvalidParameter("need tr S = 0 and Sx = 0".into()));
            }
            (0..n).map(|i| w(&s.col(i), x)).collect()
        }
        PKind::Unitary { x } => {
            check_len(x, n)?;
            if n % 2 != 0 {
                return Err(Error::InvalidParameter("unitary kind needs even n".into()));
            }
            let j = j_matrix(n / 2);
            let jx = j.mul_vec(x);
            let (half, quarter) = (Scalar::new(1, 2), Scalar::new(1, 4));
            (0..n)
                .map(|i| {
                    let y = e(i);
                    let mut v = w(x, &y).plus(&w(&jx, &j.col(i))).scale(&quarter);
                    v.add_scaled(&(&half * &dot(&jx, &y)), &j);
                    v
                })
                .collect()
        }
        PKind::Quaternionic { x } => {
            check_len(x, n)?;
            if n % 4 != 0 {
                return Err(Error::InvalidParameter("quaternionic kind needs n divisible by 4".into()));
            }
            let js = quaternion_triple(n / 4);
            let (half, quarter) = (Scalar::new(1, 2), Scalar::new(1, 4));
            (0..n)
                .map(|i| {
                    let y = e(i);
                    let mut v = w(x, &y);
                    for j in &js {
                        v = v.plus(&w(&j.mul_vec(x), &j.col(i)));
                    }
                    v = v.scale(&quarter);
                    for j in &js {
                        v.add_scaled(&(&half * &dot(&j.mul_vec(x), &y)), j);
                    }
                    v
                })
                .collect()
        }
        PKind::Adjoint { x } => {
            if rep.n() != rep.dim() {
                return Err(Error::InvalidParameter("adjoint kind needs V = h".into()));
            }
            check_len(x, rep.dim())?;
            let xm = rep.combine(x);
            (0..n).map(|i| rep.combine(&xm.col(i))).collect()
        }
        PKind::Hermitian { t } => hermitian_values(n, t)?,
    };
    PMap::from_values(rep, &values)
}

fn hermitian_values(n: usize, t: &[Vec<Vec<CScalar>>]) -> Result<Vec<Matrix>> {
    let m = t.len();
    if 2 * m != n || t.iter().any(|s| s.len() != m || s.iter().any(|r| r.len() != m)) {
        return Err(Error::InvalidParameter("S must be an m×m×m tensor with n = 2m".into()));
    }
    for a in 0..m {
        for b in 0..m {
            if t[a][b] != t[b][a] {
                return Err(Error::InvalidParameter("S(e_a)e_b must be symmetric in a, b".into()));
            }
        }
    }
    let mut out = vec![Matrix::zeros(n, n); n];
    for a in 0..m {
        // Matrix of S(e_a): column b is S(e_a)e_b.
        let s = Matrix::from_fn(m, m, |c, b| t[a][b][c].clone());
        let s_star = s.transpose().map(CScalar::conj);
        out[a] = realify(&s.minus(&s_star));
        out[m + a] = realify(&s.plus(&s_star).scale(&CScalar::I));
    }
    Ok(out)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::curvature::{cyclic_defect, ricci_tilde};
    use crate::exact::Field;
    use crate::reps::{build, so_rep, RepSpec};

    fn ints(v: &[i64]) -> Vec<Scalar> {
        v.iter().map(|&x| Scalar::from_int(x)).collect()
    }

    fn in_p(rep: &LieRep, p: &PMap) -> bool {
        cyclic_defect(rep, p).iter().all(Scalar::is_zero)
    }

    #[test]
    fn wedge_kind() {
        let rep = so_rep(3).unwrap();
        let p = p_explicit(&rep, &PKind::Wedge { x: ints(&[1, 0, 0]) }).unwrap();
        assert!(in_p(&rep, &p));
        assert_eq!(ricci_tilde(&rep, &p), ints(&[-2, 0, 0]));
    }

    #[test]
    fn traceless_kind() {
        let rep = so_rep(4).unwrap();
        let s = Matrix::from_ints(&[&[1, 0, 0, 0], &[0, -1, 0, 0], &[0, 0, 0, 0], &[0, 0, 0, 0]]);
        let p = p_explicit(&rep, &PKind::Traceless { s: s.clone(), x: ints(&[0, 0, 1, 0]) }).unwrap();
        assert!(in_p(&rep, &p));
        assert!(ricci_tilde(&rep, &p).iter().all(Scalar::is_zero));
        assert!(p_explicit(&rep, &PKind::Traceless { s, x: ints(&[1, 0, 0, 0]) }).is_err());
    }

    #[test]
    fn sym_pair_ricci() {
        // R̃ic(y ↦ Sy∧x + y∧Sx) = (tr S)x + (n − 2)Sx.
        let n = 4;
        let rep = so_rep(n).unwrap();
        let s = Matrix::from_ints(&[&[2, 1, 0, 0], &[1, 0, 3, 0], &[0, 3, -1, 1], &[0, 0, 1, 5]]);
        let x = ints(&[1, -1, 2, 0]);
        let p = p_explicit(&rep, &PKind::SymPair { s: s.clone(), x: x.clone() }).unwrap();
        assert!(in_p(&rep, &p));
        let sx = s.mul_vec(&x);
        let expected: Vec<Scalar> =
            x.iter().zip(&sx).map(|(a, b)| &(&s.trace() * a) + &(&Scalar::from_int(n as i64 - 2) * b)).collect();
        assert_eq!(ricci_tilde(&rep, &p), expected);
    }

    #[test]
    fn unitary_and_quaternionic_kinds() {
        let u = build(RepSpec::U(2)).unwrap();
        let p = p_explicit(&u, &PKind::Unitary { x: ints(&[1, 2, 0, -1]) }).unwrap();
        assert!(in_p(&u, &p));
        let q = build(RepSpec::SpSp1(1)).unwrap();
        let p = p_explicit(&q, &PKind::Quaternionic { x: ints(&[1, 0, 2, 1]) }).unwrap();
        assert!(in_p(&q, &p));
    }

    #[test]
    fn adjoint_kind() {
        let rep = build(RepSpec::AdjointSu(3)).unwrap();
        let p = p_explicit(&rep, &PKind::Adjoint { x: ints(&[1, 0, -2, 0, 3, 1, 0, 1]) }).unwrap();
        assert!(in_p(&rep, &p));
    }

    #[test]
    fn realify_respects_products() {
        let c = |a, b| CScalar::new(Scalar::from_int(a), Scalar::from_int(b));
        let x = Matrix::from_vec(2, 2, vec![c(1, 2), c(0, -1), c(3, 0), c(1, 1)]);
        let y = Matrix::from_vec(2, 2, vec![c(0, 1), c(2, 0), c(-1, 1), c(0, 0)]);
        assert_eq!(realify(&x.mul(&y)), realify(&x).mul(&realify(&y)));
    }

    fn c(re: i64, im: i64) -> CScalar {
        CScalar::new(Scalar::from_int(re), Scalar::from_int(im))
    }

    /// A tensor symmetric in its first two slots, built from one seed per
    /// unordered pair.
    fn sym_tensor(m: usize, seed: impl Fn(usize, usize, usize) -> CScalar) -> Vec<Vec<Vec<CScalar>>> {
        (0..m).map(|a| (0..m).map(|b| (0..m).map(|k| seed(a.min(b), a.max(b), k)).collect()).collect()).collect()
    }

    #[test]
    fn u_trace_identity() {
        let rep = build(RepSpec::U(2)).unwrap();
        let full = crate::curvature::pspace(&rep).unwrap().full;
        let j = j_matrix(2);
        for v in full.vectors() {
            let p = PMap::from_vector(rep.n(), rep.dim(), v);
            let r = ricci_tilde(&rep, &p);
            for i in 0..rep.n() {
                let x = unit::<Scalar>(rep.n(), i);
                assert_eq!(dot(&r, &x), -complex_trace(&p.eval(&rep, &j.mul_vec(&x))));
            }
        }
    }

    #[test]
    fn hermitian_kind_and_su_membership() {
        let u = build(RepSpec::U(2)).unwrap();
        let su = build(RepSpec::Su(2)).unwrap();
        let generic = sym_tensor(2, |a, b, k| c((a + 2 * b) as i64 - k as i64, (a * k) as i64 + 1));
        let p = p_explicit(&u, &PKind::Hermitian { t: generic.clone() }).unwrap();
        assert!(in_p(&u, &p));
        assert!(p_explicit(&su, &PKind::Hermitian { t: generic }).is_err());
        // Σ_b S_abb = 0 for each a.
        let mut traceless = sym_tensor(2, |a, b, k| c((a + b + k) as i64, a as i64 - k as i64));
        traceless[0][0][0] = traceless[0][1][1].negated();
        traceless[1][1][1] = traceless[1][0][0].negated();
        let p = p_explicit(&su, &PKind::Hermitian { t: traceless }).unwrap();
        assert!(in_p(&su, &p));
    }

    #[test]
    fn hermitian_sp_membership() {
        // sp(1) ⊂ u(2) is su(2); S(e_a) ∈ sp(2, ℂ) means S(e_a) traceless.
        let sp = crate::reps::sp_u_frame(1).unwrap();
        let mut t = sym_tensor(2, |a, b, k| c(1 + (a * b) as i64, k as i64));
        t[0][0][0] = t[0][1][1].negated();
        t[1][1][1] = t[1][0][0].negated();
        assert!(p_explicit(&sp, &PKind::Hermitian { t: t.clone() }).is_ok());
        t[0][0][0] = t[0][0][0].plus(&CScalar::ONE);
        assert!(p_explicit(&sp, &PKind::Hermitian { t }).is_err());
    }

    #[test]
    fn malformed_params() {
        let rep = so_rep(3).unwrap();
        assert!(p_explicit(&rep, &PKind::Wedge { x: ints(&[1, 0]) }).is_err());
        let asym = Matrix::from_ints(&[&[0, 1, 0], &[0, 0, 0], &[0, 0, 0]]);
        assert!(p_explicit(&rep, &PKind::SymPair { s: asym, x: ints(&[1, 0, 0]) }).is_err());
        assert!(p_explicit(&rep, &PKind::Unitary { x: ints(&[1, 0, 0]) }).is_err());
        let bad = vec![vec![vec![c(1, 0)], vec![c(0, 0)]], vec![vec![c(0, 0)], vec![c(0, 0)]]];
        assert!(p_explicit(&build(RepSpec::U(2)).unwrap(), &PKind::Hermitian { t: bad }).is_err());
    }
}
