//! Per-algebra verification rows: dimensions of the curvature components
//! and the structural checks run on them.

use rayon::prelude::*;
use serde::Serialize;

use crate::curvature::{
    act_on_p, ambient_so, berger_span, pair_count, pspace_with, pspan, ricci, ricci_tilde, rspace_with, tau_image,
    weyl_part_in, CurvTensor, PMap, PSpaceResult, RSpaceResult,
};
use crate::error::Result;
use crate::exact::{Matrix, Scalar, Strategy, Subspace};
use crate::reps::{build, LieRep, RepSpec};

/// Above this many unknowns the Bianchi kernel is not computed by default.
pub const R_SPACE_LIMIT: usize = 5000;

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct NamedCheck {
    pub name: String,
    pub pass: bool,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub detail: Option<String>,
}

impl NamedCheck {
    pub fn new(name: &str, pass: bool) -> Self {
        NamedCheck { name: name.into(), pass, detail: None }
    }

    fn expect(name: &str, expected: usize, got: usize) -> Self {
        NamedCheck { name: name.into(), pass: expected == got, detail: Some(format!("expected {expected}, got {got}")) }
    }
}

/// Values a row is checked against. `None` means "report only".
#[derive(Clone, Debug, Default, PartialEq, Eq, Serialize)]
pub struct Expected {
    pub dim_p: Option<usize>,
    pub dim_p0: Option<usize>,
    pub dim_p1: Option<usize>,
    pub dim_r: Option<usize>,
    pub dim_r1: Option<usize>,
    /// Closed-form `dim P₀` reported alongside, not asserted.
    pub formula_p0: Option<usize>,
    /// `Ric` vanishes on all of `R(h)`.
    pub ricci_flat: bool,
}

pub fn expected(spec: RepSpec) -> Expected {
    let mut e = Expected::default();
    match spec {
        RepSpec::So(n) => {
            e.dim_p1 = Some(n);
            e.dim_p0 = Some((n - 2) * n * (n + 2) / 3);
            if n == 2 {
                e.dim_r = Some(1);
            }
            if n == 3 {
                e.dim_r = Some(6);
                e.dim_r1 = Some(1);
            }
        }
        RepSpec::U(m) => {
            e.dim_p1 = Some(2 * m);
            e.formula_p0 = Some(m * m * (m - 1));
        }
        RepSpec::Su(m) => {
            e.dim_p1 = Some(0);
            e.formula_p0 = Some(m * m * (m - 1));
            e.ricci_flat = true;
        }
        RepSpec::Sp(m) => {
            e.dim_p1 = Some(0);
            e.formula_p0 = Some(m * (m + 1) * (m + 2) / 3);
            e.ricci_flat = true;
        }
        RepSpec::SpSp1(m) => {
            e.dim_p1 = Some(4 * m);
            e.formula_p0 = Some(m * (m + 1) * (m + 2) / 3);
        }
        RepSpec::G2 => {
            e.dim_p = Some(64);
            e.dim_p1 = Some(0);
            e.ricci_flat = true;
        }
        RepSpec::Spin7 => {
            e.dim_p = Some(112);
            e.dim_p1 = Some(0);
            e.ricci_flat = true;
        }
        // Symmetric Berger algebras: P = P₁ ≅ ℝⁿ.
        RepSpec::Spin9 | RepSpec::AdjointSo(5..) | RepSpec::AdjointSu(3..) | RepSpec::SoxSo(..) => {
            let n = spec.n();
            e.dim_p = Some(n);
            e.dim_p1 = Some(n);
            e.dim_p0 = Some(0);
            e.dim_r = Some(1);
            e.dim_r1 = Some(1);
        }
        // adjoint so(3) and su(2) are so(3) on ℝ³.
        RepSpec::AdjointSo(3) | RepSpec::AdjointSu(2) => {
            e.dim_p1 = Some(3);
            e.dim_p0 = Some(5);
        }
        RepSpec::AdjointSo(_) | RepSpec::AdjointSu(_) => {}
    }
    e
}

/// One verification row.
#[derive(Clone, Debug, Serialize)]
pub struct Report {
    pub algebra: String,
    pub n: usize,
    pub dim_h: usize,
    #[serde(rename = "dim_P")]
    pub dim_p: Option<usize>,
    #[serde(rename = "dim_P0")]
    pub dim_p0: Option<usize>,
    #[serde(rename = "dim_P1")]
    pub dim_p1: Option<usize>,
    #[serde(rename = "dim_R")]
    pub dim_r: Option<usize>,
    #[serde(rename = "dim_R0")]
    pub dim_r0: Option<usize>,
    #[serde(rename = "dim_R1")]
    pub dim_r1: Option<usize>,
    #[serde(rename = "dim_Rprime")]
    pub dim_rprime: Option<usize>,
    pub irreducible: bool,
    pub checks: Vec<NamedCheck>,
    pub notes: Vec<String>,
}

impl Report {
    pub fn all_pass(&self) -> bool {
        self.checks.iter().all(|c| c.pass)
    }

    pub fn failures(&self) -> impl Iterator<Item = &NamedCheck> {
        self.checks.iter().filter(|c| !c.pass)
    }
}

/// Structure-only report: dimensions of `h` and sanity checks.
pub fn structure(spec: RepSpec) -> Result<Report> {
    let rep = build(spec)?;
    Ok(Report {
        algebra: spec.to_string(),
        n: rep.n(),
        dim_h: rep.dim(),
        dim_p: None,
        dim_p0: None,
        dim_p1: None,
        dim_r: None,
        dim_r0: None,
        dim_r1: None,
        dim_rprime: None,
        irreducible: rep.is_irreducible(),
        checks: base_checks(spec, &rep),
        notes: Vec::new(),
    })
}

fn base_checks(spec: RepSpec, rep: &LieRep) -> Vec<NamedCheck> {
    vec![
        NamedCheck::new("closure", rep.closure_check()),
        NamedCheck::new("skewness", rep.is_metric_skew()),
        NamedCheck::expect("dim_h", spec.expected_dim(), rep.dim()),
    ]
}

/// Whether to compute `R(h)` and the checks that depend on it.
#[derive(Clone, Copy, Debug, Default, PartialEq, Eq)]
pub enum RMode {
    Skip,
    /// Only below [`R_SPACE_LIMIT`] unknowns.
    #[default]
    Bounded,
    Always,
}

#[derive(Clone, Copy, Debug, Default, PartialEq, Eq)]
pub struct RowOptions {
    pub strategy: Strategy,
    pub r: RMode,
}

fn all_zero(v: &[Scalar]) -> bool {
    v.iter().all(Scalar::is_zero)
}

/// `R̃ic(ξ·P) = ξ R̃ic(P)` for all basis `ξ`, `P`.
fn ricci_equivariant(rep: &LieRep, p: &PSpaceResult) -> bool {
    let (n, d) = (rep.n(), rep.dim());
    p.full.vectors().par_iter().all(|v| {
        let pm = PMap::from_vector(n, d, v);
        let r = ricci_tilde(rep, &pm);
        (0..d).all(|a| {
            let moved = act_on_p(rep, a, &pm).expect("closed");
            ricci_tilde(rep, &moved) == rep.basis()[a].mul_vec(&r)
        })
    })
}

/// `R̃ic(W(P)) = 0` for every basis `P`.
fn weyl_traceless(rep: &LieRep, p: &PSpaceResult) -> Result<bool> {
    if rep.n() < 2 {
        return Ok(true);
    }
    let ambient = ambient_so(rep);
    let (n, d) = (rep.n(), rep.dim());
    for v in p.full.vectors() {
        let w = weyl_part_in(rep, &ambient, &PMap::from_vector(n, d, v))?;
        if !all_zero(&ricci_tilde(&ambient, &w)) {
            return Ok(false);
        }
    }
    Ok(true)
}

/// `{y ↦ [x, y]}` for an adjoint representation.
fn adjoint_maps(rep: &LieRep) -> Subspace {
    let n = rep.n();
    let vectors = (0..rep.dim()).map(|a| {
        let xm = &rep.basis()[a];
        let rows: Vec<Vec<Scalar>> = (0..n).map(|i| xm.col(i)).collect();
        Matrix::from_rows(&rows).into_data()
    });
    Subspace::span(n * rep.dim(), vectors)
}

/// Runs one row.
pub fn verify_row(spec: RepSpec, opts: RowOptions) -> Result<Report> {
    let rep = build(spec)?;
    let (n, d) = (rep.n(), rep.dim());
    let exp = expected(spec);
    let irreducible = rep.is_irreducible();
    let mut checks = base_checks(spec, &rep);
    let mut notes = Vec::new();

    let p = pspace_with(&rep, opts.strategy)?;
    let (dp, dp0, dp1) = p.dims();
    checks.push(NamedCheck::new("p_accounting", dp0 + dp1 == dp));
    if irreducible {
        checks.push(NamedCheck::new("p1_is_0_or_n", dp1 == 0 || dp1 == n));
    }
    if let Some(x) = exp.dim_p {
        checks.push(NamedCheck::expect("dim_P", x, dp));
    }
    if let Some(x) = exp.dim_p0 {
        checks.push(NamedCheck::expect("dim_P0", x, dp0));
    }
    if let Some(x) = exp.dim_p1 {
        checks.push(NamedCheck::expect("dim_P1", x, dp1));
    }
    if exp.dim_p1 == Some(0) {
        checks.push(NamedCheck::new("ricci_tilde_vanishes", p.p0.dim() == dp));
    }
    if let Some(x) = exp.formula_p0 {
        if x != dp0 {
            notes.push(format!("reference formula for dim P0 gives {x}; computed real dimension is {dp0}"));
        }
    }
    checks.push(NamedCheck::new("ricci_equivariant", ricci_equivariant(&rep, &p)));
    checks.push(NamedCheck::new("weyl_traceless", weyl_traceless(&rep, &p)?));
    checks.push(NamedCheck::expect("pspan", if dp == 0 { 0 } else { d }, pspan(&rep, &p.full).dim()));
    if matches!(spec, RepSpec::AdjointSu(3..) | RepSpec::AdjointSo(5..)) {
        checks.push(NamedCheck::new("adjoint_span", adjoint_maps(&rep).same_span(&p.full)));
    }

    let mut r_dims = (None, None, None, None);
    let unknowns = pair_count(n) * d;
    let run_r = match opts.r {
        RMode::Skip => false,
        RMode::Bounded => unknowns <= R_SPACE_LIMIT,
        RMode::Always => true,
    };
    if run_r {
        let r = rspace_with(&rep, opts.strategy)?;
        let (dr, dr0, dr1, drp) = r.dims();
        r_dims = (Some(dr), Some(dr0), Some(dr1), Some(drp));
        checks.extend(r_checks(&rep, &p, &r, &exp, irreducible));
    } else if opts.r == RMode::Bounded {
        notes.push(format!("R(h) skipped: {unknowns} unknowns exceeds {R_SPACE_LIMIT}"));
    }

    Ok(Report {
        algebra: spec.to_string(),
        n,
        dim_h: d,
        dim_p: Some(dp),
        dim_p0: Some(dp0),
        dim_p1: Some(dp1),
        dim_r: r_dims.0,
        dim_r0: r_dims.1,
        dim_r1: r_dims.2,
        dim_rprime: r_dims.3,
        irreducible,
        checks,
        notes,
    })
}

fn r_checks(rep: &LieRep, p: &PSpaceResult, r: &RSpaceResult, exp: &Expected, irreducible: bool) -> Vec<NamedCheck> {
    let (n, d) = (rep.n(), rep.dim());
    let (dr, dr0, dr1, drp) = r.dims();
    let mut checks = vec![NamedCheck::new("r_accounting", dr0 + dr1 + drp == dr)];
    if irreducible {
        checks.push(NamedCheck::new("r1_at_most_1", dr1 <= 1));
    }
    if let Some(x) = exp.dim_r {
        checks.push(NamedCheck::expect("dim_R", x, dr));
    }
    if let Some(x) = exp.dim_r1 {
        checks.push(NamedCheck::expect("dim_R1", x, dr1));
    }
    let symmetric = r.full.vectors().iter().all(|v| {
        let m = ricci(rep, &CurvTensor::from_vector(n, d, v));
        m == m.transpose()
    });
    checks.push(NamedCheck::new("ricci_symmetric", symmetric));
    if dr > 0 {
        checks.push(NamedCheck::expect("berger", d, berger_span(rep, &r.full).dim()));
    }
    if irreducible && n >= 4 {
        let full = tau_image(rep, &r.full).same_span(&p.full);
        let graded = tau_image(rep, &r.r0).same_span(&p.p0) && tau_image(rep, &r.r1).same_span(&p.p1);
        checks.push(NamedCheck::new("tau_surjective", full));
        checks.push(NamedCheck::new("tau_graded", graded));
    }
    if exp.ricci_flat {
        checks.push(NamedCheck::new("ricci_flat_family", dr0 == dr));
    }
    checks
}

/// Rows of the default table run.
pub fn default_rows() -> Vec<RepSpec> {
    let mut rows: Vec<RepSpec> = (2..=7).map(RepSpec::So).collect();
    rows.extend([
        RepSpec::G2,
        RepSpec::Spin7,
        RepSpec::Su(2),
        RepSpec::Sp(1),
        RepSpec::U(2),
        RepSpec::SpSp1(2),
        RepSpec::Sp(2),
        RepSpec::SoxSo(3, 3),
        RepSpec::AdjointSu(3),
        RepSpec::Spin9,
    ]);
    rows
}

#[derive(Clone, Debug, Serialize)]
pub struct TableReport {
    pub rows: Vec<Report>,
    pub all_pass: bool,
}

/// Rows run in parallel; output keeps the input order.
pub fn verify_table(rows: &[RepSpec], opts: RowOptions) -> Result<TableReport> {
    let rows = rows.par_iter().map(|&s| verify_row(s, opts)).collect::<Result<Vec<_>>>()?;
    let all_pass = rows.iter().all(Report::all_pass);
    Ok(TableReport { rows, all_pass })
}
