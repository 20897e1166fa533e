use std::fmt::Write as _;

use holocurv_core::complex::ObstructionReport;
use holocurv_core::lorentz::AssemblyReport;
use holocurv_core::report::{NamedCheck, Report, TableReport};
use serde::Serialize;

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum Format {
    Json,
    Csv,
    Text,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct ProlongationReport {
    pub target: String,
    pub field: &'static str,
    pub n: usize,
    pub dim: usize,
}

#[derive(Debug)]
pub enum Output {
    Report(Report),
    Table(TableReport),
    Obstruction(ObstructionReport),
    Assembly(AssemblyReport),
    Prolongation(ProlongationReport),
}

const REPORT_HEADER: [&str; 13] = [
    "algebra",
    "n",
    "dim_h",
    "dim_P",
    "dim_P0",
    "dim_P1",
    "dim_R",
    "dim_R0",
    "dim_R1",
    "dim_Rprime",
    "irreducible",
    "pass",
    "failed",
];

fn opt(v: Option<usize>) -> String {
    v.map_or_else(String::new, |x| x.to_string())
}

fn report_record(r: &Report) -> Vec<String> {
    let failed: Vec<&str> = r.failures().map(|c| c.name.as_str()).collect();
    vec![
        r.algebra.clone(),
        r.n.to_string(),
        r.dim_h.to_string(),
        opt(r.dim_p),
        opt(r.dim_p0),
        opt(r.dim_p1),
        opt(r.dim_r),
        opt(r.dim_r0),
        opt(r.dim_r1),
        opt(r.dim_rprime),
        r.irreducible.to_string(),
        r.all_pass().to_string(),
        failed.join(" "),
    ]
}

fn csv<I, R>(header: &[&str], records: I) -> String
where
    I: IntoIterator<Item = R>,
    R: IntoIterator,
    R::Item: AsRef<[u8]>,
{
    let mut w = csv::Writer::from_writer(Vec::new());
    w.write_record(header).expect("in-memory write");
    for r in records {
        w.write_record(r).expect("in-memory write");
    }
    String::from_utf8(w.into_inner().expect("in-memory flush")).expect("utf-8 fields")
}

fn check_lines(out: &mut String, checks: &[NamedCheck]) {
    for c in checks {
        let tag = if c.pass { "PASS" } else { "FAIL" };
        let _ = write!(out, "  {tag} {}", c.name);
        if let Some(d) = &c.detail {
            let _ = write!(out, " ({d})");
        }
        out.push('\n');
    }
}

fn report_text(out: &mut String, r: &Report) {
    let _ = writeln!(out, "{}: n = {}, dim h = {}, irreducible = {}", r.algebra, r.n, r.dim_h, r.irreducible);
    if let (Some(a), Some(b), Some(c)) = (r.dim_p, r.dim_p0, r.dim_p1) {
        let _ = writeln!(out, "  P = {a} (P0 = {b}, P1 = {c})");
    }
    if let (Some(a), Some(b), Some(c), Some(d)) = (r.dim_r, r.dim_r0, r.dim_r1, r.dim_rprime) {
        let _ = writeln!(out, "  R = {a} (R0 = {b}, R1 = {c}, R' = {d})");
    }
    check_lines(out, &r.checks);
    for n in &r.notes {
        let _ = writeln!(out, "  note: {n}");
    }
}

fn json<T: Serialize>(v: &T) -> String {
    let mut s = serde_json::to_string_pretty(v).expect("serializable");
    s.push('\n');
    s
}

impl Output {
    pub fn passed(&self) -> bool {
        match self {
            Output::Report(r) => r.all_pass(),
            Output::Table(t) => t.all_pass,
            Output::Obstruction(o) => o.nonzero(),
            Output::Assembly(a) => a.all_pass(),
            Output::Prolongation(_) => true,
        }
    }

    /// One line per failed check, prefixed by the row.
    pub fn failures(&self) -> Vec<String> {
        let row = |r: &Report| {
            r.failures()
                .map(|c| match &c.detail {
                    Some(d) => format!("{}: {} ({d})", r.algebra, c.name),
                    None => format!("{}: {}", r.algebra, c.name),
                })
                .collect::<Vec<_>>()
        };
        match self {
            Output::Report(r) => row(r),
            Output::Table(t) => t.rows.iter().flat_map(row).collect(),
            Output::Obstruction(o) if !o.nonzero() => vec![format!("{}: value vanishes", o.case)],
            Output::Assembly(a) => a.checks.iter().filter(|c| !c.pass).map(|c| c.name.clone()).collect(),
            _ => Vec::new(),
        }
    }

    pub fn render(&self, format: Format) -> String {
        match format {
            Format::Json => match self {
                Output::Report(r) => json(r),
                Output::Table(t) => json(t),
                Output::Obstruction(o) => json(o),
                Output::Assembly(a) => json(a),
                Output::Prolongation(p) => json(p),
            },
            Format::Csv => match self {
                Output::Report(r) => csv(&REPORT_HEADER, [report_record(r)]),
                Output::Table(t) => csv(&REPORT_HEADER, t.rows.iter().map(report_record)),
                Output::Obstruction(o) => csv(
                    &["case", "value", "verdict"],
                    [[o.case.to_string(), o.value.to_string(), o.verdict.to_string()]],
                ),
                Output::Assembly(a) => {
                    csv(&["check", "pass"], a.checks.iter().map(|c| [c.name.clone(), c.pass.to_string()]))
                }
                Output::Prolongation(p) => csv(
                    &["target", "field", "n", "dim"],
                    [[p.target.clone(), p.field.into(), p.n.to_string(), p.dim.to_string()]],
                ),
            },
            Format::Text => {
                let mut out = String::new();
                match self {
                    Output::Report(r) => report_text(&mut out, r),
                    Output::Table(t) => {
                        for r in &t.rows {
                            report_text(&mut out, r);
                        }
                        let ok = t.rows.iter().filter(|r| r.all_pass()).count();
                        let _ = writeln!(out, "{ok}/{} rows pass", t.rows.len());
                    }
                    Output::Obstruction(o) => {
                        let _ =
                            writeln!(out, "{}: dim V = {}, dim h = {}, legs = {}", o.case, o.dim_v, o.dim_h, o.legs);
                        let _ = writeln!(out, "  value = {}", o.value);
                        let _ = writeln!(out, "  {}", o.verdict);
                    }
                    Output::Assembly(a) => {
                        let _ = writeln!(out, "{}: n = {}, frame = {}", a.algebra, a.n, a.frame.join(" "));
                        check_lines(&mut out, &a.checks);
                        let _ = writeln!(out, "  Ric(q,q) = {}", a.ric_qq);
                        if let Some(n) = &a.note {
                            let _ = writeln!(out, "  note: {n}");
                        }
                    }
                    Output::Prolongation(p) => {
                        let _ = writeln!(
                            out,
                            "{} ({}, n = {}): first prolongation has dimension {}",
                            p.target, p.field, p.n, p.dim
                        );
                    }
                }
                out
            }
        }
    }
}
