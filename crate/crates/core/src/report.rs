//! Reports over catalog pairs and single elements, as JSON or markdown.

use std::fmt::Write as _;

use rayon::prelude::*;
use serde::Serialize;

use crate::catalog::{CatalogEntry, ExpectedFlags};
use crate::cayley::{cayley_for_representative, CayleyRepresentative, Convention, RealFormContext};
use crate::criteria::{analyze_element, is_in_np, verify_pair, CriteriaReport, PairContext, RepresentativeReport, SampleConfig};
use crate::error::{Error, Result};
use crate::lie::{Element, LieAlgebra};
use crate::linalg::Matrix;
use crate::scalar::Scalar;
use crate::theta::decompose_kp;

pub const TOOL_NAME: &str = "symcheck";
pub const TOOL_VERSION: &str = env!("CARGO_PKG_VERSION");

#[derive(Debug, Clone, Copy, PartialEq, Eq, clap::ValueEnum)]
pub enum Format {
    Json,
    Md,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct RunConfig {
    pub seed: u64,
    pub samples: usize,
    pub convention: Convention,
    pub parallel: bool,
}

impl Default for RunConfig {
    fn default() -> Self {
        RunConfig {
            seed: 0,
            samples: 100,
            convention: Convention::Adjusted,
            parallel: false,
        }
    }
}

impl RunConfig {
    fn sample_config(&self) -> SampleConfig {
        SampleConfig {
            seed: self.seed,
            samples: self.samples,
        }
    }
}

/// The configuration as echoed in reports. Parallelism is left out so that
/// output does not depend on it.
#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct ConfigEcho {
    pub pairs: Vec<String>,
    pub seed: u64,
    pub samples: usize,
    pub convention: Convention,
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct CayleySection {
    pub convention: Convention,
    pub real_form: Option<String>,
    pub status: String,
    pub representatives: Vec<CayleyRepresentative>,
    pub pass: bool,
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct PairReport {
    pub id: String,
    pub description: String,
    pub error: Option<String>,
    pub criteria: Option<CriteriaReport>,
    pub cayley: Option<CayleySection>,
    pub failures: Vec<String>,
    pub pass: bool,
    #[serde(skip)]
    pub internal_error: bool,
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct Report {
    pub tool: String,
    pub version: String,
    pub command: String,
    pub config: ConfigEcho,
    pub pairs: Vec<PairReport>,
    pub failures: Vec<String>,
    pub pass: bool,
    pub exit_code: i32,
}

fn cayley_section(ctx: &PairContext, criteria: &CriteriaReport, convention: Convention) -> Result<CayleySection> {
    let pair = &ctx.pair;
    let Some(data) = &pair.entry.real_form else {
        return Ok(CayleySection {
            convention,
            real_form: None,
            status: "real form unavailable".to_string(),
            representatives: vec![],
            pass: true,
        });
    };
    let real = match RealFormContext::new(pair, data) {
        Ok(r) => r,
        Err(Error::Structural(msg)) => {
            return Ok(CayleySection {
                convention,
                real_form: Some(data.name.clone()),
                status: format!("invalid real form: {msg}"),
                representatives: vec![],
                pass: false,
            })
        }
        Err(other) => return Err(other),
    };
    let mut reps = Vec::new();
    for (rep, verdict) in pair.entry.representatives.iter().zip(&criteria.representatives) {
        reps.push(cayley_for_representative(
            &real,
            pair,
            &rep.label,
            &rep.element,
            verdict.minus1(),
            rep.expected.compact,
            convention,
        )?);
    }
    let pass = reps.iter().all(CayleyRepresentative::pass);
    Ok(CayleySection {
        convention,
        real_form: Some(data.name.clone()),
        status: "checked".to_string(),
        representatives: reps,
        pass,
    })
}

fn cayley_failures(section: &CayleySection) -> Vec<String> {
    let mut out = Vec::new();
    if section.representatives.is_empty() && !section.pass {
        out.push(format!("cayley: {}", section.status));
    }
    for r in &section.representatives {
        if r.status != "ok" {
            out.push(format!("{}: cayley: {}", r.label, r.status));
            continue;
        }
        if r.round_trip != Some(true) {
            out.push(format!("{}: cayley: round trip fails", r.label));
        }
        if r.agree != Some(true) {
            out.push(format!("{}: cayley: compactness differs from (-1)-distinguished verdict", r.label));
        }
        if !r.expected_compact_match {
            out.push(format!("{}: cayley: expected compactness differs", r.label));
        }
    }
    out
}

fn run_pair(entry: CatalogEntry, config: &RunConfig) -> Result<(CriteriaReport, CayleySection)> {
    let ctx = PairContext::new(decompose_kp(entry)?)?;
    let (criteria, _) = verify_pair(&ctx, config.sample_config())?;
    let cayley = cayley_section(&ctx, &criteria, config.convention)?;
    Ok((criteria, cayley))
}

/// Verifies one catalog entry. Errors become report entries; the
/// `internal_error` flag separates broken invariants from failed checks.
pub fn analyze_entry(entry: CatalogEntry, config: &RunConfig) -> PairReport {
    let id = entry.id.clone();
    let description = entry.description.clone();
    match run_pair(entry, config) {
        Ok((criteria, cayley)) => {
            let mut failures = criteria.failures.clone();
            failures.extend(cayley_failures(&cayley));
            PairReport {
                id,
                description,
                error: None,
                pass: failures.is_empty(),
                criteria: Some(criteria),
                cayley: Some(cayley),
                failures,
                internal_error: false,
            }
        }
        Err(err) => PairReport {
            id,
            description,
            error: Some(err.to_string()),
            criteria: None,
            cayley: None,
            failures: vec![format!("error: {err}")],
            pass: false,
            internal_error: err.is_internal(),
        },
    }
}

/// Runs the selected entries (in id order) and assembles the report.
pub fn cmd_verify(command: &str, mut entries: Vec<CatalogEntry>, config: &RunConfig) -> Report {
    entries.sort_by(|a, b| a.id.cmp(&b.id));
    let ids: Vec<String> = entries.iter().map(|e| e.id.clone()).collect();
    let pairs: Vec<PairReport> = if config.parallel {
        entries.into_par_iter().map(|e| analyze_entry(e, config)).collect()
    } else {
        entries.into_iter().map(|e| analyze_entry(e, config)).collect()
    };
    let failures: Vec<String> = pairs
        .iter()
        .flat_map(|p| p.failures.iter().map(move |f| format!("{}: {f}", p.id)))
        .collect();
    let exit_code = if pairs.iter().any(|p| p.internal_error) {
        3
    } else if failures.is_empty() {
        0
    } else {
        1
    };
    Report {
        tool: TOOL_NAME.to_string(),
        version: TOOL_VERSION.to_string(),
        command: command.to_string(),
        config: ConfigEcho {
            pairs: ids,
            seed: config.seed,
            samples: config.samples,
            convention: config.convention,
        },
        pass: failures.is_empty(),
        pairs,
        failures,
        exit_code,
    }
}

/// One row of `symcheck list`.
#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct ListRow {
    pub id: String,
    pub description: String,
    pub g: usize,
    pub k: usize,
    pub p: usize,
    pub r: usize,
    pub real_form: Option<String>,
    pub representatives: Vec<String>,
}

pub fn cmd_list(entries: Vec<CatalogEntry>) -> Result<Vec<ListRow>> {
    let mut rows = Vec::new();
    for entry in entries {
        let real_form = entry.real_form.as_ref().map(|r| r.name.clone());
        let representatives = entry.representatives.iter().map(|r| r.label.clone()).collect();
        let (id, description) = (entry.id.clone(), entry.description.clone());
        let ctx = PairContext::new(decompose_kp(entry)?)?;
        rows.push(ListRow {
            id,
            description,
            g: ctx.pair.dim(),
            k: ctx.pair.k.dim(),
            p: ctx.pair.p.dim(),
            r: ctx.cartan.r,
            real_form,
            representatives,
        });
    }
    rows.sort_by(|a, b| a.id.cmp(&b.id));
    Ok(rows)
}

/// Parses an element file: `{"matrix": [[SCALAR, ...], ...]}` or
/// `{"coords": [SCALAR, ...]}`, with scalars written as JSON strings.
pub fn parse_element(alg: &LieAlgebra, text: &str) -> Result<Element> {
    let value: serde_json::Value =
        serde_json::from_str(text).map_err(|e| Error::Input(format!("element file is not valid JSON: {e}")))?;
    let obj = value
        .as_object()
        .ok_or_else(|| Error::Input("element file must be a JSON object".into()))?;
    if obj.len() != 1 {
        return Err(Error::Input("element file must have exactly one key: matrix or coords".into()));
    }
    let scalar = |v: &serde_json::Value| -> Result<Scalar> {
        let s = v
            .as_str()
            .ok_or_else(|| Error::Input(format!("scalars must be JSON strings, found {v}")))?;
        Ok(Scalar::parse(s)?)
    };
    let list = |v: &serde_json::Value, what: &str| -> Result<Vec<Scalar>> {
        v.as_array()
            .ok_or_else(|| Error::Input(format!("{what} must be an array")))?
            .iter()
            .map(scalar)
            .collect()
    };
    let (key, body) = obj.iter().next().unwrap();
    match key.as_str() {
        "coords" => alg.element(list(body, "coords")?).map_err(|e| Error::Input(e.to_string())),
        "matrix" => {
            let rows = body
                .as_array()
                .ok_or_else(|| Error::Input("matrix must be an array of rows".into()))?
                .iter()
                .map(|r| list(r, "matrix row"))
                .collect::<Result<Vec<_>>>()?;
            let cols = rows.first().map_or(0, Vec::len);
            if rows.iter().any(|r| r.len() != cols) {
                return Err(Error::Input("matrix rows have different lengths".into()));
            }
            alg.from_matrix(&Matrix::from_rows_with_cols(cols, rows))
        }
        other => Err(Error::Input(format!("unknown key {other:?}; expected matrix or coords"))),
    }
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct ElementReport {
    pub tool: String,
    pub version: String,
    pub pair: String,
    pub convention: Convention,
    pub element: String,
    pub in_p: bool,
    pub nilpotent: bool,
    pub in_np: bool,
    pub verdict: String,
    pub analysis: Option<RepresentativeReport>,
    pub cayley: Option<CayleyRepresentative>,
    pub failures: Vec<String>,
    pub pass: bool,
    pub exit_code: i32,
}

/// Classifies a user-supplied element of the pair's algebra.
pub fn cmd_check_element(entry: CatalogEntry, element: &Element, config: &RunConfig) -> Result<ElementReport> {
    let ctx = PairContext::new(decompose_kp(entry)?)?;
    let pair = &ctx.pair;
    let alg = pair.algebra();
    let in_p = pair.in_p(element);
    let nilpotent = alg.is_nilpotent_element(element)?;
    let in_np = is_in_np(pair, element)?;
    let mut report = ElementReport {
        tool: TOOL_NAME.to_string(),
        version: TOOL_VERSION.to_string(),
        pair: pair.id().to_string(),
        convention: config.convention,
        element: alg.render(element),
        in_p,
        nilpotent,
        in_np,
        verdict: String::new(),
        analysis: None,
        cayley: None,
        failures: vec![],
        pass: true,
        exit_code: 0,
    };
    if element.is_zero() {
        report.verdict = "zero element: triple completion refused, criteria skipped".into();
        return Ok(report);
    }
    if !in_p {
        report.verdict = "not in p: criteria skipped".into();
        return Ok(report);
    }
    if !nilpotent {
        report.verdict = "not nilpotent: not in N(p), criteria skipped".into();
        return Ok(report);
    }
    let analysis = analyze_element(
        pair,
        &ctx.cartan,
        "element",
        element,
        &ExpectedFlags::default(),
        config.sample_config(),
    )?;
    let mut failures = analysis.report.failures.clone();
    if let Some(data) = &pair.entry.real_form {
        let real = RealFormContext::new(pair, data)?;
        let c = cayley_for_representative(
            &real,
            pair,
            "element",
            element,
            analysis.report.minus1(),
            None,
            config.convention,
        )?;
        let section = CayleySection {
            convention: config.convention,
            real_form: Some(data.name.clone()),
            status: "checked".into(),
            pass: c.pass(),
            representatives: vec![c.clone()],
        };
        failures.extend(cayley_failures(&section));
        report.cayley = Some(c);
    }
    report.verdict = "classified".into();
    report.analysis = Some(analysis.report);
    report.pass = failures.is_empty();
    report.exit_code = if report.pass { 0 } else { 1 };
    report.failures = failures;
    Ok(report)
}

pub fn to_json<T: Serialize>(value: &T) -> String {
    let mut s = serde_json::to_string_pretty(value).expect("reports serialize");
    s.push('\n');
    s
}

fn yes(b: bool) -> &'static str {
    if b {
        "yes"
    } else {
        "no"
    }
}

fn opt_yes(b: Option<bool>) -> &'static str {
    b.map_or("n/a", yes)
}

fn opt_text(s: &Option<String>) -> &str {
    s.as_deref().unwrap_or("n/a")
}

pub fn list_markdown(rows: &[ListRow]) -> String {
    let mut out = String::from("| id | g | k | p | r | real form | representatives |\n|---|---|---|---|---|---|---|\n");
    for r in rows {
        let _ = writeln!(
            out,
            "| {} | {} | {} | {} | {} | {} | {} |",
            r.id,
            r.g,
            r.k,
            r.p,
            r.r,
            r.real_form.as_deref().unwrap_or("none"),
            r.representatives.join(", ")
        );
    }
    out
}

fn representative_markdown(out: &mut String, r: &RepresentativeReport) {
    let _ = writeln!(out, "#### {}\n", r.label);
    let _ = writeln!(out, "- element: `{}`", r.element);
    let _ = writeln!(out, "- triple: e = `{}`, h = `{}`, f = `{}`", r.triple.e, r.triple.h, r.triple.f);
    let _ = writeln!(out, "- orbit dimension: {}", r.orbit_dim);
    let _ = writeln!(out, "- principal: {}, even: {}, noticed: {}", yes(r.principal), yes(r.even), yes(r.noticed));
    let _ = writeln!(
        out,
        "- minus1: centralizer {}, grading {}, even case {}; agree: {}",
        yes(r.minus1_centralizer),
        yes(r.minus1_grading),
        opt_yes(r.minus1_even),
        yes(r.criteria_agree)
    );
    let d = &r.dims;
    let _ = writeln!(
        out,
        "- dims: g0- {}, g2+ {}, g^s {}, k^s {}, p^s {}, g^e {}, u_e {}, [k,e] {}, p^e {}",
        d.g0_minus, d.g2_plus, d.g_s, d.k_s, d.p_s, d.g_e, d.u_e, d.bracket_k_e, d.p_e
    );
    if let Some(w) = &r.p_s_witness {
        let _ = writeln!(out, "- p^s witness: `{w}`; semisimple sample: `{}`", opt_text(&r.semisimple_witness));
    }
    let _ = writeln!(
        out,
        "- perp identity: {}, levi instance: {}, expected flags: {}",
        yes(r.perp_identity),
        yes(r.levi_instance),
        yes(r.expected_flags_match)
    );
    for f in &r.failures {
        let _ = writeln!(out, "- FAILURE: {f}");
    }
    out.push('\n');
}

fn cayley_markdown(out: &mut String, c: &CayleyRepresentative) {
    let _ = writeln!(out, "- {}: {}", c.label, c.status);
    if c.status == "ok" {
        let _ = writeln!(out, "  - scale: {}, sigma(e) factor: {}", opt_text(&c.lambda), opt_text(&c.sigma_e_factor));
        if let Some(t) = &c.real_triple {
            let _ = writeln!(out, "  - real triple: e' = `{}`, h' = `{}`, f' = `{}`", t.e, t.h, t.f);
        }
        let _ = writeln!(
            out,
            "  - round trip: {}, z dim: {}, z gram: `{}`, compact: {}, minus1: {}, agree: {}",
            opt_yes(c.round_trip),
            c.z_dim.map_or("n/a".to_string(), |d| d.to_string()),
            opt_text(&c.z_gram),
            opt_yes(c.compact),
            yes(c.minus1),
            opt_yes(c.agree)
        );
    }
}

pub fn report_markdown(report: &Report) -> String {
    let mut out = String::new();
    let _ = writeln!(out, "# {} {}: {}\n", report.tool, report.version, report.command);
    let c = &report.config;
    let _ = writeln!(
        out,
        "seed {}, samples {}, convention {}, pairs {}\n",
        c.seed,
        c.samples,
        c.convention,
        c.pairs.join(", ")
    );
    for p in &report.pairs {
        let _ = writeln!(out, "## {} ({})\n", p.id, if p.pass { "pass" } else { "FAIL" });
        let _ = writeln!(out, "{}\n", p.description);
        if let Some(e) = &p.error {
            let _ = writeln!(out, "error: {e}\n");
        }
        if let Some(cr) = &p.criteria {
            let d = &cr.dims;
            let _ = writeln!(out, "dims: g {}, k {}, p {}, r {}\n", d.g, d.k, d.p, d.r);
            let rr = &cr.restricted_roots;
            let roots: Vec<String> = rr
                .roots
                .iter()
                .filter(|a| a.positive)
                .map(|a| {
                    let mark = if a.simple { "*" } else { "" };
                    format!("{:?}{mark} x{}", a.functional, a.multiplicity)
                })
                .collect();
            let _ = writeln!(
                out,
                "restricted roots: {} total, reduced: {}, dim g^a {}; positive: {}\n",
                rr.count,
                yes(rr.reduced),
                rr.zero_space_dim,
                roots.join(", ")
            );
            let ch = &cr.chamber;
            let _ = writeln!(
                out,
                "chamber element c = `{}`; dim k^c {}, k^c = k^a: {}, p^c = a: {}\n",
                ch.c,
                ch.k_c_dim,
                yes(ch.k_c_equals_k_a),
                yes(ch.p_c_equals_a)
            );
            let _ = writeln!(
                out,
                "principal checks: p^s = 0 {}, grading equality {}, even case {}; random perp {}/{}\n",
                yes(cr.theorem_null_p),
                yes(cr.theorem_equality),
                yes(cr.theorem_derived),
                cr.random_perp.passed,
                cr.random_perp.samples
            );
            let _ = writeln!(out, "### representatives\n");
            for r in &cr.representatives {
                representative_markdown(&mut out, r);
            }
        }
        if let Some(cs) = &p.cayley {
            let _ = writeln!(
                out,
                "### cayley ({}, real form {})\n\n{}\n",
                cs.convention,
                cs.real_form.as_deref().unwrap_or("none"),
                cs.status
            );
            for c in &cs.representatives {
                cayley_markdown(&mut out, c);
            }
            if !cs.representatives.is_empty() {
                out.push('\n');
            }
        }
    }
    let _ = writeln!(out, "## result: {} (exit {})\n", if report.pass { "pass" } else { "FAIL" }, report.exit_code);
    for f in &report.failures {
        let _ = writeln!(out, "- {f}");
    }
    out
}

pub fn element_markdown(report: &ElementReport) -> String {
    let mut out = String::new();
    let _ = writeln!(out, "# {} {}: element in {}\n", report.tool, report.version, report.pair);
    let _ = writeln!(out, "- element: `{}`", report.element);
    let _ = writeln!(
        out,
        "- in p: {}, nilpotent: {}, in N(p): {}",
        yes(report.in_p),
        yes(report.nilpotent),
        yes(report.in_np)
    );
    let _ = writeln!(out, "- verdict: {}\n", report.verdict);
    if let Some(a) = &report.analysis {
        representative_markdown(&mut out, a);
    }
    if let Some(c) = &report.cayley {
        let _ = writeln!(out, "### cayley ({})\n", report.convention);
        cayley_markdown(&mut out, c);
        out.push('\n');
    }
    let _ = writeln!(out, "## result: {} (exit {})", if report.pass { "pass" } else { "FAIL" }, report.exit_code);
    for f in &report.failures {
        let _ = writeln!(out, "- {f}");
    }
    out
}
