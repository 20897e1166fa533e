//! Curvature values of Lorentzian metrics whose holonomy lies in `sim(n)`,
//! assembled from `(R₀, P, T)` in a Witt frame `p, e₁..eₙ, q`.

mod io;

use serde::Serialize;

use crate::curvature::{
    bianchi_defect, curvature_space, cyclic_defect, pair_count, pair_index, pairs, pspace, ricci, ricci_tilde, triples,
    CurvTensor, PMap,
};
use crate::error::{Error, Result};
use crate::exact::{bilinear, rank, unit, Matrix, Scalar, Strategy};
use crate::reps::{wedge_with, FieldMarker, LieRep};

pub use io::{report, AssembleInput, AssemblyReport, Check};

/// Basis `p, e₁..eₙ, q` with `g(p, q) = 1`, `g(eᵢ, eⱼ) = G_ij`, `p`, `q` null.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct WittFrame {
    n: usize,
    gram: Matrix,
}

impl WittFrame {
    pub fn new(n: usize) -> Self {
        Self::with_inner(&Matrix::identity(n))
    }

    /// Uses `inner` as the form on `ℝⁿ`.
    pub fn with_inner(inner: &Matrix) -> Self {
        let n = inner.rows();
        let gram = Matrix::from_fn(n + 2, n + 2, |r, c| match (r, c) {
            (0, c) if c == n + 1 => Scalar::ONE,
            (r, 0) if r == n + 1 => Scalar::ONE,
            (r, c) if (1..=n).contains(&r) && (1..=n).contains(&c) => inner[(r - 1, c - 1)].clone(),
            _ => Scalar::ZERO,
        });
        WittFrame { n, gram }
    }

    pub fn n(&self) -> usize {
        self.n
    }

    pub fn dim(&self) -> usize {
        self.n + 2
    }

    pub fn gram(&self) -> &Matrix {
        &self.gram
    }

    pub fn p(&self) -> usize {
        0
    }

    pub fn q(&self) -> usize {
        self.n + 1
    }

    /// Position of `eᵢ` (0-based `i`).
    pub fn e(&self, i: usize) -> usize {
        i + 1
    }

    pub fn labels(&self) -> Vec<String> {
        std::iter::once("p".to_string())
            .chain((1..=self.n).map(|i| format!("e{i}")))
            .chain(std::iter::once("q".to_string()))
            .collect()
    }

    /// `x ∈ ℝⁿ` as a vector of the frame.
    pub fn lift(&self, x: &[Scalar]) -> Vec<Scalar> {
        let mut v = vec![Scalar::ZERO; self.dim()];
        v[1..=self.n].clone_from_slice(x);
        v
    }

    /// `A ∈ gl(ℝⁿ)` acting on `span{eᵢ}`, zero on `p` and `q`.
    pub fn embed(&self, a: &Matrix) -> Matrix {
        let n = self.n;
        Matrix::from_fn(n + 2, n + 2, |r, c| {
            if (1..=n).contains(&r) && (1..=n).contains(&c) {
                a[(r - 1, c - 1)].clone()
            } else {
                Scalar::ZERO
            }
        })
    }

    /// `x∧y` for the Lorentzian form.
    pub fn wedge(&self, x: &[Scalar], y: &[Scalar]) -> Matrix {
        wedge_with(&self.gram, x, y)
    }

    fn unit(&self, i: usize) -> Vec<Scalar> {
        unit(self.dim(), i)
    }
}

/// `sim(n) = (ℝ ⊕ so(n)) ⋉ ℝⁿ`: basis `p∧q`, `eᵢ∧eⱼ`, `p∧eᵢ`.
pub fn sim_basis(n: usize) -> Result<LieRep> {
    if n == 0 {
        return Err(Error::InvalidParameter("sim(n) needs n >= 1".into()));
    }
    let f = WittFrame::new(n);
    let mut basis = vec![f.wedge(&f.unit(f.p()), &f.unit(f.q()))];
    basis.extend(pairs(n).map(|(i, j)| f.wedge(&f.unit(f.e(i)), &f.unit(f.e(j)))));
    basis.extend((0..n).map(|i| f.wedge(&f.unit(f.p()), &f.unit(f.e(i)))));
    LieRep::new(format!("sim({n})"), f.gram().clone(), basis, FieldMarker::Real)
}

/// `h ⋉ (p∧ℝⁿ)` inside `so(1, n+1)`.
pub fn semidirect(frame: &WittFrame, rep: &LieRep) -> Result<LieRep> {
    let mut basis: Vec<Matrix> = rep.basis().iter().map(|b| frame.embed(b)).collect();
    basis.extend((0..frame.n()).map(|i| frame.wedge(&frame.unit(frame.p()), &frame.unit(frame.e(i)))));
    LieRep::new(format!("{} + p^R{}", rep.label(), frame.n()), frame.gram().clone(), basis, FieldMarker::Real)
}

/// The data `(R₀, P, T)` with `R₀ ∈ R(h)`, `P ∈ P(h)` and `T = Tᵀ`.
#[derive(Clone, Debug)]
pub struct LorentzCurv {
    rep: LieRep,
    r0: CurvTensor,
    p: PMap,
    t: Matrix,
}

impl LorentzCurv {
    /// Rejects data violating the invariants, naming the failing one.
    pub fn new(rep: LieRep, r0: CurvTensor, p: PMap, t: Matrix) -> Result<Self> {
        let (n, d) = (rep.n(), rep.dim());
        if r0.n() != n || r0.d() != d {
            return Err(Error::DimensionMismatch { expected: pair_count(n) * d, found: r0.coeffs().data().len() });
        }
        if p.n() != n || p.d() != d {
            return Err(Error::DimensionMismatch { expected: n * d, found: p.coeffs().data().len() });
        }
        if t.rows() != n || t.cols() != n {
            return Err(Error::DimensionMismatch { expected: n, found: t.rows() });
        }
        if !t.is_symmetric() {
            return Err(Error::Precondition("T not symmetric".into()));
        }
        if bianchi_defect(&rep, &r0).iter().any(|x| !x.is_zero()) {
            return Err(Error::Precondition("R0 fails the Bianchi identity".into()));
        }
        if cyclic_defect(&rep, &p).iter().any(|x| !x.is_zero()) {
            return Err(Error::Precondition("P fails the cyclic identity (not in P(h))".into()));
        }
        Ok(LorentzCurv { rep, r0, p, t })
    }

    pub fn zero(rep: LieRep) -> Self {
        let (n, d) = (rep.n(), rep.dim());
        LorentzCurv { r0: CurvTensor::zero(n, d), p: PMap::zero(n, d), t: Matrix::zeros(n, n), rep }
    }

    pub fn rep(&self) -> &LieRep {
        &self.rep
    }

    pub fn r0(&self) -> &CurvTensor {
        &self.r0
    }

    pub fn p(&self) -> &PMap {
        &self.p
    }

    pub fn t(&self) -> &Matrix {
        &self.t
    }

    pub fn frame(&self) -> WittFrame {
        WittFrame::with_inner(self.rep.gram())
    }
}

/// A curvature value `Λ²ℝ^{n+2} → so(1, n+1)`: one matrix per pair `a < b`.
#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct FullCurv {
    dim: usize,
    values: Vec<Matrix>,
}

impl FullCurv {
    pub fn zero(dim: usize) -> Self {
        FullCurv { dim, values: vec![Matrix::zeros(dim, dim); pair_count(dim)] }
    }

    pub fn dim(&self) -> usize {
        self.dim
    }

    /// `R(b_a, b_b)` for any `a, b`.
    pub fn at(&self, a: usize, b: usize) -> Matrix {
        use std::cmp::Ordering::*;
        match a.cmp(&b) {
            Equal => Matrix::zeros(self.dim, self.dim),
            Less => self.values[pair_index(self.dim, a, b)].clone(),
            Greater => self.values[pair_index(self.dim, b, a)].scale(&-Scalar::ONE),
        }
    }

    /// Overwrites `R(b_a, b_b)`, `a < b`.
    pub fn set(&mut self, a: usize, b: usize, m: Matrix) {
        let k = pair_index(self.dim, a, b);
        self.values[k] = m;
    }

    pub fn values(&self) -> &[Matrix] {
        &self.values
    }
}

/// `R(p, ·) = 0`, `R(u, v) = R₀(u, v) + p∧(P(u)v − P(v)u)`,
/// `R(u, q) = P(u) − p∧T(u)`.
pub fn assemble(frame: &WittFrame, data: &LorentzCurv) -> Result<FullCurv> {
    let rep = &data.rep;
    let n = rep.n();
    if frame.n() != n || frame.gram() != &WittFrame::with_inner(rep.gram()).gram {
        return Err(Error::Precondition("frame does not match the representation".into()));
    }
    let pv = frame.unit(frame.p());
    let mut out = FullCurv::zero(frame.dim());
    let p_at: Vec<Matrix> = (0..n).map(|i| data.p.at(rep, i)).collect();
    for (i, j) in pairs(n) {
        let w: Vec<Scalar> = p_at[i].col(j).iter().zip(p_at[j].col(i)).map(|(a, b)| a - &b).collect();
        let v = frame.embed(&data.r0.at(rep, i, j)).plus(&frame.wedge(&pv, &frame.lift(&w)));
        out.set(frame.e(i), frame.e(j), v);
    }
    for i in 0..n {
        let v = frame.embed(&p_at[i]).minus(&frame.wedge(&pv, &frame.lift(&data.t.col(i))));
        out.set(frame.e(i), frame.q(), v);
    }
    Ok(out)
}

/// `R(a, b)c + R(b, c)a + R(c, a)b` over all basis triples, concatenated.
pub fn full_bianchi_defect(r: &FullCurv) -> Vec<Scalar> {
    triples(r.dim())
        .flat_map(|(a, b, c)| {
            let s = r.at(a, b).col(c);
            let t = r.at(b, c).col(a);
            let u = r.at(c, a).col(b);
            (0..r.dim()).map(move |k| &(&s[k] + &t[k]) + &u[k])
        })
        .collect()
}

pub fn bianchi_holds(r: &FullCurv) -> bool {
    full_bianchi_defect(r).iter().all(Scalar::is_zero)
}

/// `(R(a, b)c, d) = (R(c, d)a, b)` on all basis quadruples.
pub fn pair_symmetry_holds(frame: &WittFrame, r: &FullCurv) -> bool {
    let m = r.dim();
    let lowered: Vec<Matrix> = (0..pair_count(m)).map(|k| frame.gram().mul(&r.values[k])).collect();
    let get = |a: usize, b: usize, c: usize, d: usize| -> Scalar {
        // (R(a, b)c, d) = (G R(a, b))[d][c]
        match a.cmp(&b) {
            std::cmp::Ordering::Equal => Scalar::ZERO,
            std::cmp::Ordering::Less => lowered[pair_index(m, a, b)][(d, c)].clone(),
            std::cmp::Ordering::Greater => -&lowered[pair_index(m, b, a)][(d, c)],
        }
    };
    pairs(m).all(|(a, b)| pairs(m).all(|(c, d)| get(a, b, c, d) == get(c, d, a, b)))
}

/// `Ric(u, v) = tr(z ↦ R(u, z)v)`.
pub fn ricci_full(r: &FullCurv) -> Matrix {
    let m = r.dim();
    Matrix::from_fn(m, m, |u, v| {
        let mut acc = Scalar::ZERO;
        for z in 0..m {
            if z != u {
                acc = &acc + &r.at(u, z)[(z, v)];
            }
        }
        acc
    })
}

/// The four identities relating the Lorentzian Ricci tensor to `R₀`, `P`, `T`.
#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct RicciIdentities {
    /// `Ric(p, ·) = 0`.
    pub p_row_zero: bool,
    /// `Ric(u, v) = Ric(R₀)(u, v)`.
    pub spatial: bool,
    /// `Ric(u, q) = g(u, R̃ic(P))`.
    pub mixed: bool,
    /// `Ric(q, q) = tr T`.
    pub qq_trace: bool,
}

impl RicciIdentities {
    pub fn all(&self) -> bool {
        self.p_row_zero && self.spatial && self.mixed && self.qq_trace
    }
}

pub fn ricci_identities(frame: &WittFrame, data: &LorentzCurv, ric: &Matrix) -> RicciIdentities {
    let rep = &data.rep;
    let n = rep.n();
    let (p, q) = (frame.p(), frame.q());
    let ric0 = ricci(rep, &data.r0);
    let rt = ricci_tilde(rep, &data.p);
    RicciIdentities {
        p_row_zero: (0..frame.dim()).all(|c| ric[(p, c)].is_zero() && ric[(c, p)].is_zero()),
        spatial: pairs(n).chain((0..n).map(|i| (i, i))).all(|(i, j)| {
            ric[(frame.e(i), frame.e(j))] == ric0[(i, j)] && ric[(frame.e(j), frame.e(i))] == ric0[(j, i)]
        }),
        mixed: (0..n).all(|i| {
            let want = bilinear(rep.gram(), &unit(n, i), &rt);
            ric[(frame.e(i), q)] == want && ric[(q, frame.e(i))] == want
        }),
        qq_trace: ric[(q, q)] == data.t.trace(),
    }
}

/// `Ric = Λ g`.
pub fn einstein_check(frame: &WittFrame, r: &FullCurv, lambda: &Scalar) -> bool {
    ricci_full(r) == frame.gram().scale(lambda)
}

/// The unique `Λ` with `Ric = Λ g`, if any. Always `0` when it exists, since
/// `Ric(p, q) = 0` while `g(p, q) = 1`.
pub fn einstein_constant(frame: &WittFrame, r: &FullCurv) -> Option<Scalar> {
    let ric = ricci_full(r);
    let lambda = ric[(frame.p(), frame.q())].clone();
    (ric == frame.gram().scale(&lambda)).then_some(lambda)
}

/// Every value `R(a, b)` lies in `alg`.
pub fn holonomy_containment(r: &FullCurv, alg: &LieRep) -> bool {
    r.values.iter().all(|m| alg.contains(m))
}

/// `R(g)` for `g = h ⋉ (p∧ℝⁿ)` against the image of the assembly map.
#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct DimensionIdentity {
    pub dim_rh: usize,
    pub dim_ph: usize,
    pub dim_sym: usize,
    /// `dim R(g)` computed as a Bianchi kernel.
    pub dim_rg: usize,
    /// Rank of the assembly map on basis data.
    pub assembly_rank: usize,
    /// Every assembled basis element lies in `R(g)`.
    pub image_in_kernel: bool,
}

impl DimensionIdentity {
    pub fn holds(&self) -> bool {
        let expected = self.dim_rh + self.dim_ph + self.dim_sym;
        self.image_in_kernel && self.assembly_rank == expected && self.dim_rg == expected
    }
}

pub fn dimension_identity(rep: &LieRep) -> Result<DimensionIdentity> {
    let frame = WittFrame::with_inner(rep.gram());
    let g = semidirect(&frame, rep)?;
    let n = rep.n();
    let d = rep.dim();
    let rh = curvature_space(rep, Strategy::Incremental);
    let ph = pspace(rep)?.full;
    let mut syms = Vec::new();
    for i in 0..n {
        for j in i..n {
            let mut t = Matrix::zeros(n, n);
            t[(i, j)] = Scalar::ONE;
            t[(j, i)] = Scalar::ONE;
            syms.push(t);
        }
    }
    let zero = LorentzCurv::zero(rep.clone());
    let mut data: Vec<LorentzCurv> = Vec::new();
    for v in rh.vectors() {
        data.push(LorentzCurv { r0: CurvTensor::from_vector(n, d, v), ..zero.clone() });
    }
    for v in ph.vectors() {
        data.push(LorentzCurv { p: PMap::from_vector(n, d, v), ..zero.clone() });
    }
    for t in &syms {
        data.push(LorentzCurv { t: t.clone(), ..zero.clone() });
    }
    let rg = curvature_space(&g, Strategy::Incremental);
    let mut image = Vec::new();
    let mut image_in_kernel = true;
    for x in &data {
        let full = assemble(&frame, x)?;
        let tensor = CurvTensor::from_fn(&g, |a, b| full.at(a, b))?;
        let v = tensor.to_vector();
        image_in_kernel &= rg.contains(&v);
        image.push(v);
    }
    let assembly_rank = if image.is_empty() { 0 } else { rank(&Matrix::from_rows(&image)) };
    Ok(DimensionIdentity {
        dim_rh: rh.dim(),
        dim_ph: ph.dim(),
        dim_sym: syms.len(),
        dim_rg: rg.dim(),
        assembly_rank,
        image_in_kernel,
    })
}
