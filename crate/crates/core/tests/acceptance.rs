//! One PASS/FAIL line per acceptance criterion. Exits nonzero on any failure.

use std::collections::HashMap;
use std::panic::{catch_unwind, AssertUnwindSafe};
use std::process::ExitCode;

use holocurv_core::complex::{run_obstruction, sp_standard, ComplexCase};
use holocurv_core::curvature::{
    ambient_so, complex_trace, p_explicit, prolongation, pspace_with, ricci_tilde, rspace_with, tau_image,
    weyl_part_in, PKind, PSpaceResult, RSpaceResult,
};
use holocurv_core::exact::{unit, Field};
use holocurv_core::lorentz::{
    assemble, bianchi_holds, dimension_identity, einstein_check, einstein_constant, ricci_full, ricci_identities,
    LorentzCurv,
};
use holocurv_core::reps::j_matrix;
use holocurv_core::{build, CScalar, CurvTensor, LieRep, Matrix, PMap, RepSpec, Scalar, Strategy, Subspace};
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;

type Outcome = Result<(), String>;

#[derive(Default)]
struct Cache {
    reps: HashMap<RepSpec, LieRep>,
    p: HashMap<RepSpec, PSpaceResult>,
    r: HashMap<RepSpec, RSpaceResult>,
}

impl Cache {
    fn rep(&mut self, s: RepSpec) -> LieRep {
        self.reps.entry(s).or_insert_with(|| build(s).expect("builds")).clone()
    }

    fn p(&mut self, s: RepSpec) -> PSpaceResult {
        if !self.p.contains_key(&s) {
            let rep = self.rep(s);
            self.p.insert(s, pspace_with(&rep, Strategy::Incremental).expect("pspace"));
        }
        self.p[&s].clone()
    }

    fn r(&mut self, s: RepSpec) -> RSpaceResult {
        if !self.r.contains_key(&s) {
            let rep = self.rep(s);
            self.r.insert(s, rspace_with(&rep, Strategy::Incremental).expect("rspace"));
        }
        self.r[&s].clone()
    }
}

fn ensure(ok: bool, msg: impl FnOnce() -> String) -> Outcome {
    if ok {
        Ok(())
    } else {
        Err(msg())
    }
}

fn ricci_tilde_vanishes(rep: &LieRep, p: &Subspace) -> bool {
    let (n, d) = (rep.n(), rep.dim());
    p.vectors().iter().all(|v| ricci_tilde(rep, &PMap::from_vector(n, d, v)).iter().all(Scalar::is_zero))
}

fn c01(c: &mut Cache) -> Outcome {
    for n in 2..=7 {
        let (_, p0, p1) = c.p(RepSpec::So(n)).dims();
        let want = (n, (n - 2) * n * (n + 2) / 3);
        ensure((p1, p0) == want, || format!("so({n}): (P1, P0) = ({p1}, {p0}), expected {want:?}"))?;
    }
    Ok(())
}

fn ricci_flat_p(c: &mut Cache, s: RepSpec, dim: usize) -> Outcome {
    let rep = c.rep(s);
    let p = c.p(s);
    let (dp, _, dp1) = p.dims();
    ensure(dp == dim && dp1 == 0, || format!("{s}: P = {dp}, P1 = {dp1}; expected {dim}, 0"))?;
    ensure(ricci_tilde_vanishes(&rep, &p.full), || format!("{s}: Ric~ nonzero on P"))
}

fn c02(c: &mut Cache) -> Outcome {
    ricci_flat_p(c, RepSpec::G2, 64)
}

fn c03(c: &mut Cache) -> Outcome {
    ricci_flat_p(c, RepSpec::Spin7, 112)
}

fn c04(c: &mut Cache) -> Outcome {
    let (su2, sp1) = (c.rep(RepSpec::Su(2)), c.rep(RepSpec::Sp(1)));
    ensure(conjugate_in_o4(&su2, &sp1), || "su(2) and sp(1) are not conjugate in O(4)".into())?;
    for s in [RepSpec::Su(2), RepSpec::Sp(1)] {
        let rep = c.rep(s);
        let p = c.p(s);
        let oracle = pspace_with(&rep, Strategy::Dense).map_err(|e| e.to_string())?;
        ensure(p.full.same_span(&oracle.full), || format!("{s}: incremental and dense kernels differ"))?;
        ensure(p.full.dim() == 8, || format!("{s}: P = {}, oracle expects 8", p.full.dim()))?;
        ensure(p.p1.dim() == 0, || format!("{s}: P1 = {}", p.p1.dim()))?;
        ensure(ricci_tilde_vanishes(&rep, &p.full), || format!("{s}: Ric~ nonzero on P"))?;
    }
    Ok(())
}

/// Some signed permutation `Q` carries one algebra onto the other.
fn conjugate_in_o4(a: &LieRep, b: &LieRep) -> bool {
    let perms = [[0, 1, 2, 3], [0, 1, 3, 2], [0, 2, 1, 3], [0, 2, 3, 1], [0, 3, 1, 2], [0, 3, 2, 1]];
    let n = 4;
    perms.iter().flat_map(|p| (0..16).map(move |signs| (p, signs))).any(|(p, signs)| {
        let q = Matrix::from_fn(n, n, |i, j| {
            if p[i] != j {
                Scalar::ZERO
            } else if signs >> i & 1 == 1 {
                Scalar::from_int(-1)
            } else {
                Scalar::ONE
            }
        });
        a.basis().iter().all(|x| b.contains(&q.mul(x).mul(&q.transpose())))
    })
}

fn c05(c: &mut Cache) -> Outcome {
    let s = RepSpec::U(2);
    let rep = c.rep(s);
    let p = c.p(s);
    ensure(p.p1.dim() == 4, || format!("u(2): P1 = {}", p.p1.dim()))?;
    let (n, d) = (rep.n(), rep.dim());
    let j = j_matrix(2);
    for v in p.full.vectors() {
        let pm = PMap::from_vector(n, d, v);
        let ric = ricci_tilde(&rep, &pm);
        for i in 0..n {
            let x = unit(n, i);
            let lhs = holocurv_core::exact::bilinear(rep.gram(), &ric, &x);
            let rhs = complex_trace(&pm.eval(&rep, &j.mul_vec(&x))).negated();
            ensure(lhs == rhs, || format!("u(2): identity fails at e{}: {lhs} vs {rhs}", i + 1))?;
        }
    }
    Ok(())
}

fn c06(c: &mut Cache) -> Outcome {
    for (s, want) in [(RepSpec::SpSp1(2), 8), (RepSpec::Sp(2), 0)] {
        let rep = c.rep(s);
        let p = c.p(s);
        ensure(p.p1.dim() == want, || format!("{s}: P1 = {}, expected {want}", p.p1.dim()))?;
        let oracle = pspace_with(&rep, Strategy::Dense).map_err(|e| e.to_string())?;
        ensure(p.dims() == oracle.dims(), || format!("{s}: dims {:?} vs oracle {:?}", p.dims(), oracle.dims()))?;
    }
    Ok(())
}

fn c07(c: &mut Cache) -> Outcome {
    let s = RepSpec::SoxSo(3, 3);
    let (dp, dp0, _) = c.p(s).dims();
    ensure(dp == 9 && dp0 == 0, || format!("P = {dp}, P0 = {dp0}"))?;
    let r = c.r(s);
    ensure(r.full.dim() == 1 && r.r1.same_span(&r.full), || format!("R dims {:?}", r.dims()))
}

fn c08(c: &mut Cache) -> Outcome {
    let s = RepSpec::AdjointSu(3);
    let rep = c.rep(s);
    let p = c.p(s);
    ensure(p.full.dim() == 8 && p.p1.dim() == 8, || format!("P dims {:?}", p.dims()))?;
    let (n, d) = (rep.n(), rep.dim());
    let brackets = (0..d).map(|a| {
        let x = unit(d, a);
        p_explicit(&rep, &PKind::Adjoint { x }).expect("adjoint map").to_vector()
    });
    ensure(Subspace::span(n * d, brackets).same_span(&p.full), || "kernel differs from {y -> [x,y]}".into())
}

fn c09(c: &mut Cache) -> Outcome {
    let mut rows: Vec<RepSpec> = (4..=7).map(RepSpec::So).collect();
    rows.extend([
        RepSpec::U(2),
        RepSpec::Su(2),
        RepSpec::Sp(2),
        RepSpec::SpSp1(2),
        RepSpec::G2,
        RepSpec::Spin7,
        RepSpec::AdjointSu(3),
        RepSpec::SoxSo(3, 3),
    ]);
    for s in rows {
        let rep = c.rep(s);
        ensure(rep.is_irreducible(), || format!("{s}: not irreducible"))?;
        let (p, r) = (c.p(s), c.r(s));
        ensure(tau_image(&rep, &r.full).same_span(&p.full), || format!("{s}: tau not onto P"))?;
        ensure(tau_image(&rep, &r.r0).same_span(&p.p0), || format!("{s}: tau(R0) != P0"))?;
        ensure(tau_image(&rep, &r.r1).same_span(&p.p1), || format!("{s}: tau(R1) != P1"))?;
    }
    Ok(())
}

fn c10(_: &mut Cache) -> Outcome {
    let cases =
        [(ComplexCase::Sp(3), 2), (ComplexCase::SoEven(3), 1), (ComplexCase::SoOdd(3), 1), (ComplexCase::Sl8, -1)];
    for (case, want) in cases {
        let r = run_obstruction(case).map_err(|e| e.to_string())?;
        ensure(r.nonzero(), || format!("{case}: value vanishes"))?;
        ensure(r.value == CScalar::from_int(want), || format!("{case}: value {}, expected {want}", r.value))?;
    }
    Ok(())
}

fn c11(c: &mut Cache) -> Outcome {
    for s in [RepSpec::Su(2), RepSpec::Sp(1), RepSpec::G2, RepSpec::Spin7] {
        let r = c.r(s);
        ensure(r.full.dim() > 0 && r.r0.same_span(&r.full), || format!("{s}: R dims {:?}", r.dims()))?;
    }
    Ok(())
}

fn small_rational(rng: &mut ChaCha8Rng) -> Scalar {
    Scalar::new(rng.gen_range(-5..=5), rng.gen_range(1..=4))
}

fn random_in(rng: &mut ChaCha8Rng, space: &Subspace) -> Vec<Scalar> {
    let coeffs: Vec<Scalar> = (0..space.dim()).map(|_| small_rational(rng)).collect();
    space.combine(&coeffs)
}

fn check_triple(rep: &LieRep, r0: Vec<Scalar>, p: Vec<Scalar>, t: Matrix) -> Outcome {
    let (n, d) = (rep.n(), rep.dim());
    let data = LorentzCurv::new(rep.clone(), CurvTensor::from_vector(n, d, &r0), PMap::from_vector(n, d, &p), t)
        .map_err(|e| e.to_string())?;
    let frame = data.frame();
    let full = assemble(&frame, &data).map_err(|e| e.to_string())?;
    ensure(bianchi_holds(&full), || "assembled tensor fails Bianchi".into())?;
    let ric = ricci_full(&full);
    let ids = ricci_identities(&frame, &data, &ric);
    ensure(ids.all(), || format!("Ricci identities: {ids:?}"))?;
    if let Some(lambda) = einstein_constant(&frame, &full) {
        ensure(lambda.is_zero(), || format!("Einstein with lambda = {lambda}"))?;
        ensure(einstein_check(&frame, &full, &Scalar::ZERO), || "Einstein check disagrees".into())?;
    }
    ensure(!einstein_check(&frame, &full, &Scalar::ONE), || "Einstein with lambda = 1".into())
}

fn c12(c: &mut Cache) -> Outcome {
    let s = RepSpec::So(3);
    let rep = c.rep(s);
    let (rs, ps) = (c.r(s).full, c.p(s).full);
    let n = rep.n();
    let mut rng = ChaCha8Rng::seed_from_u64(12);
    let mut einstein = 0;
    for k in 0..20 {
        let r0 = random_in(&mut rng, &rs);
        let p = random_in(&mut rng, &ps);
        let mut t = Matrix::zeros(n, n);
        for i in 0..n {
            for j in i..n {
                let x = small_rational(&mut rng);
                t[(i, j)] = x.clone();
                t[(j, i)] = x;
            }
        }
        check_triple(&rep, r0, p, t.clone()).map_err(|e| format!("triple {k}: {e}"))?;
        // The traceless part of T alone gives an Einstein (Ricci-flat) tensor.
        let shift = t.trace().divide(&Scalar::from_int(n as i64));
        let t0 = t.minus(&Matrix::identity(n).scale(&shift));
        let zeros = vec![Scalar::ZERO; rs.ambient_dim()];
        let zp = vec![Scalar::ZERO; ps.ambient_dim()];
        check_triple(&rep, zeros.clone(), zp.clone(), t0.clone())
            .map_err(|e| format!("triple {k}, traceless T: {e}"))?;
        let data = LorentzCurv::new(
            rep.clone(),
            CurvTensor::from_vector(n, rep.dim(), &zeros),
            PMap::from_vector(n, rep.dim(), &zp),
            t0,
        )
        .map_err(|e| e.to_string())?;
        let frame = data.frame();
        if einstein_constant(&frame, &assemble(&frame, &data).map_err(|e| e.to_string())?).is_some() {
            einstein += 1;
        }
    }
    ensure(einstein == 20, || format!("only {einstein}/20 traceless-T tensors are Einstein"))
}

fn c13(c: &mut Cache) -> Outcome {
    let specs: Vec<RepSpec> = c.p.keys().copied().collect();
    ensure(!specs.is_empty(), || "no P-spaces computed".into())?;
    for s in specs {
        let rep = c.rep(s);
        if rep.n() < 2 {
            continue;
        }
        let ambient = ambient_so(&rep);
        let (n, d) = (rep.n(), rep.dim());
        for v in c.p(s).full.vectors() {
            let w = weyl_part_in(&rep, &ambient, &PMap::from_vector(n, d, v)).map_err(|e| format!("{s}: {e}"))?;
            ensure(ricci_tilde(&ambient, &w).iter().all(Scalar::is_zero), || format!("{s}: Weyl part has Ric~ != 0"))?;
        }
    }
    Ok(())
}

fn c14(c: &mut Cache) -> Outcome {
    for s in [RepSpec::So(2), RepSpec::So(3)] {
        let id = dimension_identity(&c.rep(s)).map_err(|e| e.to_string())?;
        ensure(id.holds(), || format!("{s}: {id:?}"))?;
    }
    Ok(())
}

fn c15(c: &mut Cache) -> Outcome {
    for n in 3..=6 {
        let dim = prolongation(&c.rep(RepSpec::So(n)), Strategy::Incremental).dim();
        ensure(dim == 0, || format!("so({n}): prolongation has dim {dim}"))?;
    }
    let sp4 = sp_standard(2).map_err(|e| e.to_string())?;
    let dim = prolongation(&sp4, Strategy::Incremental).dim();
    ensure(dim == 20, || format!("sp(4,C): prolongation has complex dim {dim}"))
}

type Criterion = (&'static str, fn(&mut Cache) -> Outcome);

const CRITERIA: [Criterion; 15] = [
    ("so(n) P1, P0 dimensions for n = 2..7", c01),
    ("g2: dim P = 64, P1 = 0, Ric~ = 0", c02),
    ("spin(7): dim P = 112, P1 = 0, Ric~ = 0", c03),
    ("su(2) = sp(1): P1 = 0, Ric~ = 0, dim P = 8 by oracle", c04),
    ("u(2): P1 = 4 and the complex-trace identity", c05),
    ("sp(2)+sp(1): P1 = 8; sp(2): P1 = 0; oracle agreement", c06),
    ("so(3)xso(3): P = P1 = 9, R = R1 of dim 1", c07),
    ("adjoint su(3): P = P1 = span of brackets", c08),
    ("tau is onto and respects the gradings", c09),
    ("obstruction scalars 2, 1, 1, -1", c10),
    ("Ricci-flat holonomy families", c11),
    ("Lorentzian assembly on 20 random so(3) triples", c12),
    ("Weyl parts are Ric~-free", c13),
    ("assembly dimension identity for so(2), so(3)", c14),
    ("first prolongations", c15),
];

fn main() -> ExitCode {
    let mut cache = Cache::default();
    let mut failed = 0;
    for (i, (name, f)) in CRITERIA.iter().enumerate() {
        let outcome = catch_unwind(AssertUnwindSafe(|| f(&mut cache))).unwrap_or_else(|e| {
            let msg = e.downcast_ref::<String>().cloned().or_else(|| e.downcast_ref::<&str>().map(|s| s.to_string()));
            Err(format!("panicked: {}", msg.unwrap_or_default()))
        });
        match outcome {
            Ok(()) => println!("PASS {:>2} {name}", i + 1),
            Err(e) => {
                failed += 1;
                println!("FAIL {:>2} {name}: {e}", i + 1);
            }
        }
    }
    println!("{}/{} criteria pass", CRITERIA.len() - failed, CRITERIA.len());
    if failed == 0 {
        ExitCode::SUCCESS
    } else {
        ExitCode::FAILURE
    }
}
