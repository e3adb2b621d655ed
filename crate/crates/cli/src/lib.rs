//! Report building for the `flexgroup` command.

pub mod catalog;

use std::fmt::Write as _;

use flexgroup::classify::verify::render_markdown;
use flexgroup::{
    classify_structure, cycliciser, run_suite, CycResult, Error, FiniteGroup, FlexEngine, FlexOptions, FlexVerdict,
    RankResult, Result, StructureTag, Suite, TheoremReport, VerifyOptions,
};
use rayon::prelude::*;
use serde::Serialize;

pub const SCHEMA: u32 = 1;

#[derive(Clone, Copy, Debug, PartialEq, Eq, clap::ValueEnum)]
pub enum Format {
    Json,
    Md,
    Csv,
}

#[derive(Debug, Serialize)]
pub struct AnalyzeDoc {
    pub schema: u32,
    pub group: String,
    pub order: usize,
    pub d: usize,
    pub witness: Vec<usize>,
    pub cycliciser: CycResult,
    pub structure: StructureTag,
    pub profile: Vec<FlexVerdict>,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub table: Option<Vec<Vec<usize>>>,
}

pub fn analyze(g: &FiniteGroup, name: &str, opts: &FlexOptions, with_table: bool) -> Result<AnalyzeDoc> {
    let engine = FlexEngine::with_options(g, opts.clone());
    let RankResult { d, witness } = engine.min_generators();
    Ok(AnalyzeDoc {
        schema: SCHEMA,
        group: name.to_string(),
        order: g.order(),
        d,
        witness,
        cycliciser: cycliciser(g)?,
        structure: classify_structure(g),
        profile: engine.profile(),
        table: with_table.then(|| g.table_rows()),
    })
}

pub fn render_analyze(doc: &AnalyzeDoc, format: Format) -> String {
    match format {
        Format::Json => to_json(doc),
        Format::Md => {
            let mut s = format!("# {}\n\n", doc.group);
            let _ = writeln!(s, "- order: {}", doc.order);
            let _ = writeln!(s, "- d(G): {} (witness {:?})", doc.d, doc.witness);
            let _ = writeln!(s, "- Cyc(G): order {} {:?}", doc.cycliciser.order(), doc.cycliciser.members);
            let _ = writeln!(s, "- structure: {}\n", doc.structure);
            s.push_str("| k | flexible | counterexample |\n|---|---|---|\n");
            for v in &doc.profile {
                let ce = v.counterexample.as_ref().map_or("-".to_string(), |c| format!("{c:?}"));
                let _ = writeln!(s, "| {} | {} | {} |", v.k, v.flexible, ce);
            }
            s
        }
        Format::Csv => {
            let mut w = csv::Writer::from_writer(Vec::new());
            w.write_record(["group", "order", "d", "k", "flexible", "counterexample"]).unwrap();
            for v in &doc.profile {
                let ce = v.counterexample.as_ref().map_or(String::new(), |c| join(c));
                w.write_record([
                    doc.group.clone(),
                    doc.order.to_string(),
                    doc.d.to_string(),
                    v.k.to_string(),
                    v.flexible.to_string(),
                    ce,
                ])
                .unwrap();
            }
            String::from_utf8(w.into_inner().unwrap()).unwrap()
        }
    }
}

#[derive(Debug, Serialize)]
pub struct VerifySummary {
    pub groups: usize,
    pub checks: usize,
    pub disagreements: usize,
    pub not_applicable: usize,
}

#[derive(Debug, Serialize)]
pub struct VerifyDoc {
    pub schema: u32,
    pub suite: Suite,
    pub reports: Vec<TheoremReport>,
    pub summary: VerifySummary,
}

impl VerifyDoc {
    pub fn all_agree(&self) -> bool {
        self.summary.disagreements == 0
    }
}

/// Runs `suite` on each group in parallel; reports keep the input order.
pub fn verify(
    groups: &[(String, FiniteGroup, Option<usize>)],
    suite: Suite,
    opts: &VerifyOptions,
) -> Result<VerifyDoc> {
    let reports: Vec<TheoremReport> = groups
        .par_iter()
        .map(|(name, g, expected_d)| run_suite(g, name, suite, *expected_d, opts))
        .collect::<Result<_>>()?;
    let checks = reports.iter().map(|r| r.checks.len()).sum();
    let disagreements = reports.iter().flat_map(|r| &r.checks).filter(|c| !c.agree).count();
    let not_applicable = reports.iter().flat_map(|r| &r.checks).filter(|c| !c.is_applicable()).count();
    Ok(VerifyDoc {
        schema: SCHEMA,
        suite,
        summary: VerifySummary { groups: reports.len(), checks, disagreements, not_applicable },
        reports,
    })
}

pub fn render_verify(doc: &VerifyDoc, format: Format) -> String {
    match format {
        Format::Json => to_json(doc),
        Format::Md => {
            let s = &doc.summary;
            format!(
                "# verify {}\n\n{} groups, {} checks, {} disagreements, {} not applicable\n\n{}",
                doc.suite.name(),
                s.groups,
                s.checks,
                s.disagreements,
                s.not_applicable,
                render_markdown(&doc.reports)
            )
        }
        Format::Csv => {
            let mut w = csv::Writer::from_writer(Vec::new());
            w.write_record(["group", "check", "expected", "observed", "agree", "details"]).unwrap();
            for r in &doc.reports {
                for c in &r.checks {
                    w.write_record([
                        r.group.clone(),
                        c.name.clone(),
                        c.expected.to_string(),
                        c.observed.to_string(),
                        c.agree.to_string(),
                        c.details.clone(),
                    ])
                    .unwrap();
                }
            }
            String::from_utf8(w.into_inner().unwrap()).unwrap()
        }
    }
}

#[derive(Debug, Serialize)]
pub struct CatalogRow {
    pub name: String,
    pub spec: String,
    pub order: usize,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub expected_d: Option<usize>,
    pub tags: Vec<String>,
}

#[derive(Debug, Serialize)]
pub struct CatalogDoc {
    pub schema: u32,
    pub entries: Vec<CatalogRow>,
}

pub fn catalog_doc(max_order: Option<usize>, tags: &[String]) -> Result<CatalogDoc> {
    let entries = catalog::select(max_order, tags)?
        .into_iter()
        .map(|(e, g)| CatalogRow {
            name: e.name,
            spec: e.spec,
            order: g.order(),
            expected_d: e.expected_d,
            tags: e.tags,
        })
        .collect();
    Ok(CatalogDoc { schema: SCHEMA, entries })
}

pub fn render_catalog(doc: &CatalogDoc, format: Format) -> String {
    match format {
        Format::Json => to_json(doc),
        Format::Md => {
            let mut s = String::from("| name | spec | order | d | tags |\n|---|---|---|---|---|\n");
            for e in &doc.entries {
                let d = e.expected_d.map_or("-".to_string(), |d| d.to_string());
                let _ = writeln!(s, "| {} | `{}` | {} | {} | {} |", e.name, e.spec, e.order, d, e.tags.join(", "));
            }
            s
        }
        Format::Csv => {
            let mut w = csv::Writer::from_writer(Vec::new());
            w.write_record(["name", "spec", "order", "expected_d", "tags"]).unwrap();
            for e in &doc.entries {
                let d = e.expected_d.map_or(String::new(), |d| d.to_string());
                w.write_record([e.name.clone(), e.spec.clone(), e.order.to_string(), d, e.tags.join(";")]).unwrap();
            }
            String::from_utf8(w.into_inner().unwrap()).unwrap()
        }
    }
}

fn join(xs: &[usize]) -> String {
    xs.iter().map(|x| x.to_string()).collect::<Vec<_>>().join(" ")
}

fn to_json<T: Serialize>(doc: &T) -> String {
    let mut s = serde_json::to_string_pretty(doc).expect("report serialises");
    s.push('\n');
    s
}

/// Process exit code for an error.
pub fn exit_code(e: &Error) -> i32 {
    match e {
        _ if e.is_cap() => 3,
        Error::InternalInvariantViolation(_) => 1,
        _ => 2,
    }
}
