//! Command implementations: load documents, run the requested work, and
//! assemble a report plus an overall verdict.

use std::collections::BTreeMap;
use std::time::Instant;

use mlie::classical::{superize, verify_superization};
use mlie::doc::{self, Document, LoadedDocument, TermDoc};
use mlie::{CheckReport, Error, FieldSpec, GmAlgebra, GradedAlgebra};
use serde::Serialize;

use crate::report::Report;

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum CheckName {
    Graded,
    Assoc,
    Bas,
    Bji,
    Strict,
}

impl CheckName {
    pub const ALL: [CheckName; 5] = [
        CheckName::Graded,
        CheckName::Assoc,
        CheckName::Bas,
        CheckName::Bji,
        CheckName::Strict,
    ];

    pub fn parse(s: &str) -> Option<Self> {
        match s {
            "graded" => Some(CheckName::Graded),
            "assoc" => Some(CheckName::Assoc),
            "bas" => Some(CheckName::Bas),
            "bji" => Some(CheckName::Bji),
            "strict" => Some(CheckName::Strict),
            _ => None,
        }
    }

    fn run(self, alg: &GradedAlgebra) -> CheckReport {
        match self {
            CheckName::Graded => alg.check_graded(),
            CheckName::Assoc => alg.check_associative(),
            CheckName::Bas => alg.check_bas(),
            CheckName::Bji => alg.check_bji(),
            CheckName::Strict => alg.check_strict(),
        }
    }
}

#[derive(Clone, Debug)]
pub enum Command {
    Check(Vec<CheckName>),
    PathAlgebra,
    Grade,
    Sl,
    Osp,
    Superize,
    VerifySuperization,
    RepCheck,
}

impl Command {
    fn name(&self) -> &'static str {
        match self {
            Command::Check(_) => "check",
            Command::PathAlgebra => "path-algebra",
            Command::Grade => "grade",
            Command::Sl => "sl",
            Command::Osp => "osp",
            Command::Superize => "superize",
            Command::VerifySuperization => "verify-superization",
            Command::RepCheck => "rep-check",
        }
    }
}

#[derive(Clone, Debug)]
pub struct Job {
    pub command: Command,
    /// Paths of input documents, merged in order.
    pub inputs: Vec<String>,
    pub field: Option<FieldSpec>,
    pub max_len: Option<usize>,
    /// Include counterexample witnesses in the report.
    pub witnesses: bool,
    /// Where to write the JSON report.
    pub report: Option<String>,
    /// Where to write a derived document (`path-algebra`, `superize`).
    pub out: Option<String>,
}

fn load(job: &Job) -> Result<LoadedDocument, Error> {
    if job.inputs.is_empty() {
        return Err(Error::Precondition("no input documents given".to_string()));
    }
    let docs = job
        .inputs
        .iter()
        .map(|path| {
            let text = std::fs::read_to_string(path)
                .map_err(|e| Error::Precondition(format!("cannot read {path}: {e}")))?;
            doc::from_json(&text).map_err(|e| Error::Precondition(format!("{path}: {e}")))
        })
        .collect::<Result<Vec<_>, _>>()?;
    doc::resolve(&doc::merge(docs)?, job.field)
}

/// The graded algebra a document set describes: an explicit algebra
/// section, or a block algebra (given directly or as a quiver) flattened
/// through the bicharacter.
fn graded_input(loaded: &LoadedDocument, job: &Job) -> Result<GradedAlgebra, Error> {
    if let Some(alg) = &loaded.algebra {
        return Ok(alg.clone());
    }
    let r = loaded
        .braiding
        .as_ref()
        .ok_or_else(|| Error::Precondition("flattening a block algebra needs a bicharacter section".to_string()))?;
    gm_input(loaded, job)?.to_graded(r)
}

/// The block algebra a document set describes: a gm section, or a quiver
/// section built into its path algebra.
fn gm_input(loaded: &LoadedDocument, job: &Job) -> Result<GmAlgebra, Error> {
    if let Some(gm) = &loaded.gm {
        return Ok(gm.clone());
    }
    if let Some(q) = &loaded.quiver {
        return q.path_algebra(loaded.field, job.max_len);
    }
    Err(Error::Precondition("documents contain no algebra, gm, or quiver section".to_string()))
}

fn timed_check(report: &mut Report, witnesses: bool, f: impl FnOnce() -> CheckReport) {
    let start = Instant::now();
    let check = f();
    report.push_check(&check, start.elapsed().as_millis(), witnesses);
}

#[derive(Serialize)]
struct BlockRow {
    row: Vec<i64>,
    col: Vec<i64>,
    dim: usize,
    basis: Vec<String>,
}

fn block_table(gm: &GmAlgebra) -> Vec<BlockRow> {
    gm.blocks()
        .iter()
        .map(|(&(i, j), basis)| BlockRow {
            row: gm.index_set()[i].coords().to_vec(),
            col: gm.index_set()[j].coords().to_vec(),
            dim: basis.len(),
            basis: basis.clone(),
        })
        .collect()
}

#[derive(Serialize)]
struct DegreeRow {
    degree: Vec<i64>,
    dim: usize,
    basis: Vec<Vec<TermDoc>>,
}

/// Renders an ambient coordinate row as named terms over the gm basis.
fn row_terms(gm: &GmAlgebra, row: &[mlie::FieldElement]) -> Vec<TermDoc> {
    row.iter()
        .enumerate()
        .filter(|(_, c)| !c.is_zero())
        .map(|(g, c)| {
            let (_, _, name) = gm.global_info(g);
            TermDoc { basis: name.to_string(), value: c.to_string() }
        })
        .collect()
}

fn subalgebra_data(report: &mut Report, gm: &GmAlgebra, sub: &mlie::classical::Subalgebra) {
    let degrees: Vec<DegreeRow> = sub
        .degree_rows()
        .iter()
        .map(|(u, rows)| DegreeRow {
            degree: u.coords().to_vec(),
            dim: rows.len(),
            basis: rows.iter().map(|row| row_terms(gm, row)).collect(),
        })
        .collect();
    report.insert_data("dim", &sub.dim());
    report.insert_data("degrees", &degrees);
}

fn write_out(job: &Job, doc: &Document) -> Result<(), Error> {
    if let Some(path) = &job.out {
        std::fs::write(path, doc::to_json(doc)?)?;
    }
    Ok(())
}

/// Runs a job to completion. `Ok` carries the report; the exit status is 0
/// exactly when every executed check passed. Input and validation problems
/// come back as `Err`.
pub fn run(job: &Job) -> Result<Report, Error> {
    let loaded = load(job)?;
    let mut report = Report::new(job.command.name(), &job.inputs, loaded.field.to_string());
    match &job.command {
        Command::Check(names) => {
            let alg = graded_input(&loaded, job)?;
            let names = if names.is_empty() { CheckName::ALL.to_vec() } else { names.clone() };
            report.insert_data("dim", &alg.dim());
            for name in names {
                timed_check(&mut report, job.witnesses, || name.run(&alg));
            }
        }
        Command::PathAlgebra => {
            let q = loaded
                .quiver
                .as_ref()
                .ok_or_else(|| Error::Precondition("path-algebra needs a quiver section".to_string()))?;
            let gm = q.path_algebra(loaded.field, job.max_len)?;
            report.insert_data("dim", &gm.dim());
            report.insert_data("blocks", &block_table(&gm));
            timed_check(&mut report, job.witnesses, || gm.check_associative());
            if let Some(r) = &loaded.braiding {
                let flat = gm.to_graded(r)?;
                timed_check(&mut report, job.witnesses, || flat.check_graded());
            }
            write_out(job, &doc::gm_to_document(&gm, loaded.braiding.as_ref()))?;
        }
        Command::Grade => {
            let gm = gm_input(&loaded, job)?;
            let mut by_degree: BTreeMap<Vec<i64>, (usize, Vec<String>)> = BTreeMap::new();
            for (&(i, j), basis) in gm.blocks() {
                let deg = gm.block_degree(i, j).coords().to_vec();
                let slot = by_degree.entry(deg).or_default();
                slot.0 += basis.len();
                slot.1.extend(basis.iter().cloned());
            }
            #[derive(Serialize)]
            struct GradeRow {
                degree: Vec<i64>,
                dim: usize,
                basis: Vec<String>,
            }
            let rows: Vec<GradeRow> = by_degree
                .into_iter()
                .map(|(degree, (dim, basis))| GradeRow { degree, dim, basis })
                .collect();
            report.insert_data("dim", &gm.dim());
            report.insert_data("degrees", &rows);
        }
        Command::Sl => {
            let tr = loaded
                .trace
                .as_ref()
                .ok_or_else(|| Error::Precondition("sl needs a trace section".to_string()))?;
            let sub = tr.compute_sl();
            subalgebra_data(&mut report, tr.source(), &sub);
        }
        Command::Osp => {
            let t = loaded
                .transpose
                .as_ref()
                .ok_or_else(|| Error::Precondition("osp needs a transpose section".to_string()))?;
            let m = loaded
                .form
                .as_ref()
                .ok_or_else(|| Error::Precondition("osp needs a form section".to_string()))?;
            let r = loaded
                .braiding
                .as_ref()
                .ok_or_else(|| Error::Precondition("osp needs a bicharacter section".to_string()))?;
            let sub = t.compute_osp(m, r)?;
            subalgebra_data(&mut report, t.source(), &sub);
        }
        Command::Superize => {
            let gm = gm_input(&loaded, job)?;
            let r = loaded
                .braiding
                .as_ref()
                .ok_or_else(|| Error::Precondition("superize needs a bicharacter section".to_string()))?;
            let s = superize(&gm, r)?;
            let degrees: std::collections::BTreeSet<_> = gm.index_set().iter().cloned().collect();
            let (even, odd) = r.super_split(&degrees)?;
            let coords = |set: &std::collections::BTreeSet<mlie::GroupElement>| -> Vec<Vec<i64>> {
                set.iter().map(|g| g.coords().to_vec()).collect()
            };
            report.insert_data("even", &coords(&even));
            report.insert_data("odd", &coords(&odd));
            report.insert_data("super_blocks", &block_table(s.result()));
            timed_check(&mut report, job.witnesses, || s.check_multiplicative());
            let mut out_doc = doc::gm_to_document(s.result(), Some(s.braiding()));
            if let Some(tr) = &loaded.trace {
                out_doc.trace = Some(doc::trace_section(&s.super_trace(tr)?));
            }
            if let Some(t) = &loaded.transpose {
                out_doc.transpose = Some(doc::transpose_section(&s.super_transpose(t)?));
            }
            if let Some(m) = &loaded.form {
                out_doc.form = Some(doc::gm_element_terms(s.result(), &s.to_super(m)));
            }
            write_out(job, &out_doc)?;
        }
        Command::VerifySuperization => {
            let tr = loaded
                .trace
                .as_ref()
                .ok_or_else(|| Error::Precondition("verify-superization needs a trace section".to_string()))?;
            let t = loaded
                .transpose
                .as_ref()
                .ok_or_else(|| Error::Precondition("verify-superization needs a transpose section".to_string()))?;
            let m = loaded
                .form
                .as_ref()
                .ok_or_else(|| Error::Precondition("verify-superization needs a form section".to_string()))?;
            let s = superize(tr.source(), tr.braiding())?;
            timed_check(&mut report, job.witnesses, || s.check_multiplicative());
            let start = Instant::now();
            let check = verify_superization(tr, t, m)?;
            report.push_check(&check, start.elapsed().as_millis(), job.witnesses);
        }
        Command::RepCheck => {
            let rep = loaded
                .representation
                .as_ref()
                .ok_or_else(|| Error::Precondition("rep-check needs a representation section".to_string()))?;
            report.insert_data("lie_dim", &rep.lie_dim());
            report.insert_data("carrier_dim", &rep.carrier_dim());
            timed_check(&mut report, job.witnesses, || rep.check_rep());
            timed_check(&mut report, job.witnesses, || rep.check_module());
        }
    }
    if let Some(path) = &job.report {
        std::fs::write(path, report.to_json())?;
    }
    Ok(report)
}

/// Human-readable lines: data first, then one line per check.
pub fn render_text(report: &Report) -> String {
    let mut out = String::new();
    for (key, value) in &report.data {
        let rendered = match value {
            serde_json::Value::String(s) => s.clone(),
            v => serde_json::to_string(v).expect("report data serializes"),
        };
        out.push_str(&format!("{key}: {rendered}\n"));
    }
    for check in &report.checks {
        if check.verdict == "pass" {
            out.push_str(&format!("check {}: pass\n", check.name));
        } else {
            match &check.witness {
                Some(w) => out.push_str(&format!(
                    "check {}: FAIL at ({}) defect {}\n",
                    check.name,
                    w.labels.join(","),
                    w.defect
                )),
                None => out.push_str(&format!("check {}: FAIL\n", check.name)),
            }
        }
    }
    out
}
