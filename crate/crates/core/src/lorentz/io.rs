use std::fmt;
use std::str::FromStr;

use serde::{Deserialize, Serialize};

use super::{
    assemble, bianchi_holds, einstein_constant, holonomy_containment, pair_symmetry_holds, ricci_full,
    ricci_identities, semidirect, LorentzCurv,
};
use crate::curvature::{pair_count, CurvTensor, PMap};
use crate::error::{Error, Result};
use crate::exact::{Matrix, Scalar};
use crate::report::NamedCheck;
use crate::reps::{build, RepSpec};

/// JSON input for `assemble`. `R0` has one row per pair `i < j`
/// (lexicographic) and one column per basis element of `h`; `P` has one row
/// per `eᵢ`; every number is a string `"p/q"`.
#[derive(Clone, Debug, Deserialize, Serialize)]
#[serde(deny_unknown_fields)]
pub struct AssembleInput {
    pub algebra: String,
    #[serde(rename = "R0")]
    pub r0: Vec<Vec<Scalar>>,
    #[serde(rename = "P")]
    pub p: Vec<Vec<Scalar>>,
    #[serde(rename = "T")]
    pub t: Vec<Vec<Scalar>>,
}

fn grid(name: &str, rows: &[Vec<Scalar>], r: usize, c: usize) -> Result<Matrix> {
    if rows.len() != r || rows.iter().any(|row| row.len() != c) {
        return Err(Error::Parse(format!("{name} must be a {r}x{c} grid")));
    }
    Ok(Matrix::from_fn(r, c, |i, j| rows[i][j].clone()))
}

impl AssembleInput {
    pub fn from_json(s: &str) -> Result<Self> {
        serde_json::from_str(s).map_err(|e| Error::Parse(format!("assemble input: {e}")))
    }

    /// Builds the algebra and validates the triple.
    pub fn into_data(self) -> Result<LorentzCurv> {
        let spec: RepSpec = self.algebra.parse()?;
        let rep = build(spec)?;
        let (n, d) = (rep.n(), rep.dim());
        let r0 = grid("R0", &self.r0, pair_count(n), d)?;
        let p = grid("P", &self.p, n, d)?;
        let t = grid("T", &self.t, n, n)?;
        LorentzCurv::new(rep, CurvTensor::from_coeffs(n, r0)?, PMap::from_coeffs(p), t)
    }
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize, Deserialize)]
#[serde(rename_all = "lowercase")]
pub enum Check {
    Einstein,
    Bianchi,
    All,
}

impl FromStr for Check {
    type Err = Error;
    fn from_str(s: &str) -> Result<Self> {
        match s {
            "einstein" => Ok(Check::Einstein),
            "bianchi" => Ok(Check::Bianchi),
            "all" => Ok(Check::All),
            other => Err(Error::Parse(format!("unknown check '{other}'"))),
        }
    }
}

impl fmt::Display for Check {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(match self {
            Check::Einstein => "einstein",
            Check::Bianchi => "bianchi",
            Check::All => "all",
        })
    }
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct AssemblyReport {
    pub algebra: String,
    pub n: usize,
    pub frame: Vec<String>,
    pub checks: Vec<NamedCheck>,
    /// Full Ricci tensor in the frame order.
    pub ricci: Matrix,
    pub ric_qq: Scalar,
    /// `Λ` with `Ric = Λg`, when the tensor is Einstein.
    pub einstein_lambda: Option<Scalar>,
    pub note: Option<String>,
}

impl AssemblyReport {
    pub fn all_pass(&self) -> bool {
        self.checks.iter().all(|c| c.pass)
    }
}

pub fn report(data: &LorentzCurv, check: Check) -> Result<AssemblyReport> {
    let frame = data.frame();
    let r = assemble(&frame, data)?;
    let ric = ricci_full(&r);
    let mut checks = Vec::new();
    let mut push = |name: &str, pass: bool| checks.push(NamedCheck::new(name, pass));
    if matches!(check, Check::Bianchi | Check::All) {
        push("bianchi", bianchi_holds(&r));
        push("pair_symmetry", pair_symmetry_holds(&frame, &r));
        push("holonomy_containment", holonomy_containment(&r, &semidirect(&frame, data.rep())?));
    }
    let mut lambda = None;
    let mut note = None;
    if matches!(check, Check::Einstein | Check::All) {
        let ids = ricci_identities(&frame, data, &ric);
        push("ricci_p_row_zero", ids.p_row_zero);
        push("ricci_spatial", ids.spatial);
        push("ricci_mixed", ids.mixed);
        push("ricci_qq_trace", ids.qq_trace);
        lambda = einstein_constant(&frame, &r);
        push("einstein_forces_lambda_zero", lambda.as_ref().is_none_or(Scalar::is_zero));
        note = Some(match &lambda {
            Some(_) => "Einstein: Ric(p,q) = 0 while g(p,q) = 1, so Lambda = 0 (Ricci-flat)".into(),
            None => "not Einstein".into(),
        });
    }
    Ok(AssemblyReport {
        algebra: data.rep().label().to_string(),
        n: frame.n(),
        frame: frame.labels(),
        checks,
        ric_qq: ric[(frame.q(), frame.q())].clone(),
        ricci: ric,
        einstein_lambda: lambda,
        note,
    })
}
