//! Report assembly and rendering. Every renderer is a pure function of the
//! report, so output bytes depend only on the inputs.

use std::fmt::Write as _;

use clap::ValueEnum;
use serde::Serialize;

use berger_core::criteria::ScreenVerdict;
use berger_core::curvature::CurvatureReport;
use berger_core::matalg::catalog::CatalogEntry;
use berger_core::matalg::{FieldTag, FormKind, MatrixRep};

pub const VERSION: &str = env!("CARGO_PKG_VERSION");

#[derive(Clone, Copy, Debug, PartialEq, Eq, ValueEnum)]
pub enum Format {
    Json,
    Csv,
    Text,
}

#[derive(Debug, Serialize)]
pub struct ScreenConfig {
    pub family: Option<String>,
    pub rank: Option<usize>,
    pub weight: Option<Vec<i32>>,
    pub max_rank: usize,
    pub max_dim: u64,
    pub zero_weight_free: bool,
    pub extended: bool,
    pub orbit_cap: usize,
}

#[derive(Debug, Serialize)]
pub struct Summary {
    pub screened: usize,
    pub criteria_passers: usize,
    pub survivors: usize,
    pub obstructed: usize,
}

#[derive(Debug, Serialize)]
pub struct VerdictRow {
    pub name: String,
    #[serde(flatten)]
    pub verdict: ScreenVerdict,
}

#[derive(Debug, Serialize)]
pub struct ScreenReport {
    pub command: &'static str,
    pub version: &'static str,
    pub config: ScreenConfig,
    pub summary: Summary,
    pub verdicts: Vec<VerdictRow>,
}

impl ScreenReport {
    pub fn new(config: ScreenConfig, verdicts: Vec<ScreenVerdict>) -> Self {
        let summary = Summary {
            screened: verdicts.len(),
            criteria_passers: verdicts.iter().filter(|v| v.criteria_pass).count(),
            survivors: verdicts.iter().filter(|v| v.survivor).count(),
            obstructed: verdicts.iter().filter(|v| v.obstruction.is_some()).count(),
        };
        let verdicts = verdicts.into_iter().map(|v| VerdictRow { name: v.name(), verdict: v }).collect();
        ScreenReport { command: "screen", version: VERSION, config, summary, verdicts }
    }
}

#[derive(Debug, Serialize)]
pub struct CurvatureOut {
    pub command: &'static str,
    pub version: &'static str,
    pub report: CurvatureReport,
}

impl CurvatureOut {
    pub fn new(report: CurvatureReport) -> Self {
        CurvatureOut { command: "curvature", version: VERSION, report }
    }
}

#[derive(Debug, Serialize)]
pub struct ProlongReport {
    pub command: &'static str,
    pub version: &'static str,
    pub algebra_name: String,
    pub field: FieldTag,
    pub dim_v: usize,
    pub dim_g: usize,
    pub dim_g1: usize,
    pub rank_mode: String,
}

impl ProlongReport {
    pub fn new(r: &MatrixRep, dim_g1: usize, rank_mode: &str) -> Self {
        ProlongReport {
            command: "prolong",
            version: VERSION,
            algebra_name: r.name.clone(),
            field: r.field,
            dim_v: r.dim,
            dim_g: r.basis.len(),
            dim_g1,
            rank_mode: rank_mode.into(),
        }
    }
}

#[derive(Debug, Serialize)]
pub struct CatalogReport {
    pub command: &'static str,
    pub version: &'static str,
    pub entries: Vec<CatalogEntry>,
}

impl CatalogReport {
    pub fn new(entries: Vec<CatalogEntry>) -> Self {
        CatalogReport { command: "catalog", version: VERSION, entries }
    }
}

pub enum Report {
    Screen(ScreenReport),
    Curvature(CurvatureOut),
    Prolong(ProlongReport),
    Catalog(CatalogReport),
}

/// Fixed CSV column orders.
pub const SCREEN_COLUMNS: [&str; 16] = [
    "name",
    "family",
    "rank",
    "highest",
    "dim",
    "self_dual",
    "orthogonal",
    "real_type",
    "zero_weight",
    "root_multiple",
    "passed",
    "criteria_pass",
    "survivor",
    "obstruction",
    "rejected_by",
    "classification_label",
];
pub const CURVATURE_COLUMNS: [&str; 16] = [
    "algebra_name",
    "field",
    "dim_v",
    "dim_g",
    "dim_K",
    "dim_Bh",
    "dim_g_underline",
    "dim_g_h",
    "is_berger",
    "is_weak_berger",
    "ideals_verified",
    "underline_in_h",
    "gamma_equals_roots_and_zero",
    "span_condition",
    "rank_mode",
    "graded",
];
pub const PROLONG_COLUMNS: [&str; 6] = ["algebra_name", "field", "dim_v", "dim_g", "dim_g1", "rank_mode"];
pub const CATALOG_COLUMNS: [&str; 5] = ["name", "field", "dim_g", "dim_v", "form"];

fn opt<T: ToString>(x: Option<T>) -> String {
    x.map(|v| v.to_string()).unwrap_or_default()
}

fn labels(l: &[i32]) -> String {
    l.iter().map(|c| c.to_string()).collect::<Vec<_>>().join(" ")
}

fn field_name(f: FieldTag) -> &'static str {
    match f {
        FieldTag::Real => "real",
        FieldTag::Complex => "complex",
    }
}

fn form_name(f: Option<FormKind>) -> &'static str {
    match f {
        Some(FormKind::Symmetric) => "symmetric",
        Some(FormKind::Antisymmetric) => "antisymmetric",
        Some(FormKind::Hermitian) => "hermitian",
        None => "",
    }
}

impl Report {
    pub fn render(&self, format: Format) -> Result<Vec<u8>, Box<dyn std::error::Error>> {
        match format {
            Format::Json => {
                let mut out = match self {
                    Report::Screen(r) => serde_json::to_vec_pretty(r)?,
                    Report::Curvature(r) => serde_json::to_vec_pretty(r)?,
                    Report::Prolong(r) => serde_json::to_vec_pretty(r)?,
                    Report::Catalog(r) => serde_json::to_vec_pretty(r)?,
                };
                out.push(b'\n');
                Ok(out)
            }
            Format::Csv => self.csv(),
            Format::Text => Ok(self.text().into_bytes()),
        }
    }

    fn csv(&self) -> Result<Vec<u8>, Box<dyn std::error::Error>> {
        let mut w = csv::Writer::from_writer(Vec::new());
        match self {
            Report::Screen(r) => {
                w.write_record(SCREEN_COLUMNS)?;
                for row in &r.verdicts {
                    let v = &row.verdict;
                    let passed: Vec<String> = v.passed.iter().map(|c| format!("{c:?}")).collect();
                    w.write_record([
                        row.name.clone(),
                        v.family.to_string(),
                        v.rank.to_string(),
                        labels(&v.highest),
                        v.dim.to_string(),
                        v.flags.self_dual.to_string(),
                        v.flags.orthogonal.to_string(),
                        v.flags.real_type.to_string(),
                        v.flags.zero_weight.to_string(),
                        opt(v.root_multiple.as_ref().map(|m| format!("{}{}", m.factor, if m.long { "L" } else { "S" }))),
                        passed.join(";"),
                        v.criteria_pass.to_string(),
                        v.survivor.to_string(),
                        opt(v.obstruction.as_ref()),
                        opt(v.rejected_by.as_ref()),
                        opt(v.classification_label.as_ref()),
                    ])?;
                }
            }
            Report::Curvature(c) => {
                let r = &c.report;
                let g = r.gamma_set.as_ref();
                w.write_record(CURVATURE_COLUMNS)?;
                w.write_record([
                    r.algebra_name.clone(),
                    field_name(r.field).into(),
                    r.dim_v.to_string(),
                    r.dim_g.to_string(),
                    r.dim_k.to_string(),
                    opt(r.dim_bh),
                    r.dim_g_underline.to_string(),
                    opt(r.dim_g_h),
                    r.is_berger.to_string(),
                    opt(r.is_weak_berger),
                    opt(r.ideals_verified),
                    opt(r.underline_in_h),
                    opt(g.map(|g| g.gamma_equals_roots_and_zero)),
                    opt(g.map(|g| g.span_condition)),
                    r.rank_mode.clone(),
                    r.graded.to_string(),
                ])?;
            }
            Report::Prolong(p) => {
                w.write_record(PROLONG_COLUMNS)?;
                w.write_record([
                    p.algebra_name.clone(),
                    field_name(p.field).into(),
                    p.dim_v.to_string(),
                    p.dim_g.to_string(),
                    p.dim_g1.to_string(),
                    p.rank_mode.clone(),
                ])?;
            }
            Report::Catalog(c) => {
                w.write_record(CATALOG_COLUMNS)?;
                for e in &c.entries {
                    w.write_record([
                        e.name.clone(),
                        field_name(e.field).into(),
                        e.dim_g.to_string(),
                        e.dim_v.to_string(),
                        form_name(e.form).into(),
                    ])?;
                }
            }
        }
        Ok(w.into_inner()?)
    }

    fn text(&self) -> String {
        let mut s = String::new();
        match self {
            Report::Screen(r) => {
                for row in &r.verdicts {
                    let v = &row.verdict;
                    let status = if v.survivor {
                        match &v.classification_label {
                            Some(l) => format!("survivor ({l})"),
                            None => "survivor".into(),
                        }
                    } else if let Some(o) = &v.obstruction {
                        format!("rejected, obstruction {o}")
                    } else {
                        format!("rejected by {}", v.rejected_by.as_deref().unwrap_or("criteria"))
                    };
                    let _ = writeln!(s, "{} [{}] dim {}: {status}", row.name, labels(&v.highest), v.dim);
                }
                let m = &r.summary;
                let _ = writeln!(
                    s,
                    "screened {}, criteria passers {}, survivors {}, obstructed {}",
                    m.screened, m.criteria_passers, m.survivors, m.obstructed
                );
            }
            Report::Curvature(c) => {
                let r = &c.report;
                let _ = writeln!(s, "algebra: {}", r.algebra_name);
                let _ = writeln!(s, "field: {}", field_name(r.field));
                let _ = writeln!(s, "dim_v: {}", r.dim_v);
                let _ = writeln!(s, "dim_g: {}", r.dim_g);
                let _ = writeln!(s, "dim_K: {}", r.dim_k);
                let _ = writeln!(s, "dim_Bh: {}", opt(r.dim_bh).if_empty("n/a"));
                let _ = writeln!(s, "dim_g_underline: {}", r.dim_g_underline);
                let _ = writeln!(s, "dim_g_h: {}", opt(r.dim_g_h).if_empty("n/a"));
                let _ = writeln!(s, "is_berger={}", r.is_berger);
                let _ = writeln!(s, "is_weak_berger={}", opt(r.is_weak_berger).if_empty("n/a"));
                if let Some(v) = r.ideals_verified {
                    let _ = writeln!(s, "ideals_verified={v}");
                }
                if let Some(g) = &r.gamma_set {
                    let _ = writeln!(s, "gamma_equals_roots_and_zero={}", g.gamma_equals_roots_and_zero);
                    let _ = writeln!(s, "span_condition={}", g.span_condition);
                }
                let _ = writeln!(s, "rank_mode: {}", r.rank_mode);
            }
            Report::Prolong(p) => {
                let _ = writeln!(s, "{}: dim g^(1) = {} ({}, dim g {}, dim V {})", p.algebra_name, p.dim_g1, p.rank_mode, p.dim_g, p.dim_v);
            }
            Report::Catalog(c) => {
                for e in &c.entries {
                    let form = match form_name(e.form) {
                        "" => String::new(),
                        f => format!(", {f} form"),
                    };
                    let _ = writeln!(s, "{}: dim {}, dim g {}, {}{form}", e.name, e.dim_v, e.dim_g, field_name(e.field));
                }
            }
        }
        s
    }
}

trait IfEmpty {
    fn if_empty(self, d: &str) -> String;
}

impl IfEmpty for String {
    fn if_empty(self, d: &str) -> String {
        if self.is_empty() {
            d.into()
        } else {
            self
        }
    }
}
