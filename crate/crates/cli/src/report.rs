//! Serialized forms of classification reports and enumeration summaries.

use std::fmt::Write as _;

use flagdom_core::grading::format_labels;
use flagdom_core::{ClassificationReport, RootSystemType};
use serde::{Deserialize, Serialize};

/// One classification report with the stable output schema.
#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct ReportRow {
    #[serde(rename = "type")]
    pub family: String,
    pub rank: usize,
    pub labels: String,
    pub dim_g: usize,
    pub dim_k: usize,
    pub depth: i64,
    #[serde(rename = "dimC_D")]
    pub dim_c_d: usize,
    #[serde(rename = "dimC_Z")]
    pub dim_c_z: usize,
    #[serde(rename = "dimC_U")]
    pub dim_c_u: usize,
    #[serde(rename = "hermitian_GK")]
    pub hermitian_gk: bool,
    pub fibration: String,
    pub classical: bool,
    pub f_dims: [usize; 3],
    pub bracket_generating: bool,
}

/// Column order shared by the JSON and CSV renderings.
pub const FIELDS: [&str; 14] = [
    "type",
    "rank",
    "labels",
    "dim_g",
    "dim_k",
    "depth",
    "dimC_D",
    "dimC_Z",
    "dimC_U",
    "hermitian_GK",
    "fibration",
    "classical",
    "f_dims",
    "bracket_generating",
];

impl From<&ClassificationReport> for ReportRow {
    fn from(r: &ClassificationReport) -> Self {
        let (a, b, c) = r.f_dims;
        Self {
            family: r.root_type.family().to_string(),
            rank: r.rank,
            labels: format_labels(&r.labels),
            dim_g: r.dim_g,
            dim_k: r.dim_k,
            depth: r.depth,
            dim_c_d: r.dim_c_d,
            dim_c_z: r.dim_c_z,
            dim_c_u: r.dim_c_u,
            hermitian_gk: r.hermitian_gk,
            fibration: r.fibration.to_string(),
            classical: r.classical,
            f_dims: [a, b, c],
            bracket_generating: r.bracket_generating,
        }
    }
}

impl ReportRow {
    /// CSV cells in [`FIELDS`] order; `f_dims` is written as `a;b;c`.
    pub fn csv_record(&self) -> [String; 14] {
        let [a, b, c] = self.f_dims;
        [
            self.family.clone(),
            self.rank.to_string(),
            self.labels.clone(),
            self.dim_g.to_string(),
            self.dim_k.to_string(),
            self.depth.to_string(),
            self.dim_c_d.to_string(),
            self.dim_c_z.to_string(),
            self.dim_c_u.to_string(),
            self.hermitian_gk.to_string(),
            self.fibration.clone(),
            self.classical.to_string(),
            format!("{a};{b};{c}"),
            self.bracket_generating.to_string(),
        ]
    }

    fn write_text(&self, out: &mut String) {
        let [a, b, c] = self.f_dims;
        let verdict = if self.classical { "classical" } else { "non-classical" };
        let _ = writeln!(out, "{}{} ({}): {verdict}", self.family, self.rank, self.labels);
        let _ = writeln!(out, "  dim_g {}  dim_k {}  depth {}", self.dim_g, self.dim_k, self.depth);
        let _ = writeln!(
            out,
            "  dimC_D {}  dimC_Z {}  dimC_U {}",
            self.dim_c_d, self.dim_c_z, self.dim_c_u
        );
        let _ = writeln!(
            out,
            "  hermitian_GK {}  fibration {}",
            self.hermitian_gk, self.fibration
        );
        let _ = writeln!(
            out,
            "  f_dims ({a},{b},{c})  bracket_generating {}",
            self.bracket_generating
        );
    }
}

/// All valid labelings of one type, in lexicographic label order.
#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct EnumerationSummary {
    #[serde(rename = "type")]
    pub family: String,
    pub rank: usize,
    pub total_labelings: usize,
    pub valid_labelings: usize,
    pub classical_count: usize,
    pub nonclassical_count: usize,
    pub rows: Vec<ReportRow>,
}

impl EnumerationSummary {
    pub fn new(ty: RootSystemType, reports: &[ClassificationReport]) -> Self {
        let rows: Vec<ReportRow> = reports.iter().map(ReportRow::from).collect();
        let classical_count = rows.iter().filter(|r| r.classical).count();
        Self {
            family: ty.family().to_string(),
            rank: ty.rank(),
            total_labelings: 3usize.pow(ty.rank() as u32),
            valid_labelings: rows.len(),
            classical_count,
            nonclassical_count: rows.len() - classical_count,
            rows,
        }
    }
}

/// Output encodings.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Default)]
pub enum Format {
    #[default]
    Text,
    Json,
    Csv,
}

impl std::str::FromStr for Format {
    type Err = String;

    fn from_str(s: &str) -> Result<Self, Self::Err> {
        match s {
            "text" => Ok(Format::Text),
            "json" => Ok(Format::Json),
            "csv" => Ok(Format::Csv),
            _ => Err(format!("unknown format '{s}' (expected json, csv or text)")),
        }
    }
}

/// Pretty JSON with a trailing newline.
pub fn to_json<T: Serialize>(value: &T) -> String {
    let mut s = serde_json::to_string_pretty(value).expect("serializable");
    s.push('\n');
    s
}

pub fn rows_to_csv(rows: &[ReportRow]) -> String {
    let mut w = csv::Writer::from_writer(Vec::new());
    w.write_record(FIELDS).expect("in-memory write");
    for row in rows {
        w.write_record(row.csv_record()).expect("in-memory write");
    }
    String::from_utf8(w.into_inner().expect("in-memory flush")).expect("utf-8")
}

pub fn render_report(row: &ReportRow, format: Format) -> String {
    match format {
        Format::Json => to_json(row),
        Format::Csv => rows_to_csv(std::slice::from_ref(row)),
        Format::Text => {
            let mut out = String::new();
            row.write_text(&mut out);
            out
        }
    }
}

pub fn render_summary(summary: &EnumerationSummary, format: Format) -> String {
    match format {
        Format::Json => to_json(summary),
        Format::Csv => rows_to_csv(&summary.rows),
        Format::Text => {
            let mut out = String::new();
            for row in &summary.rows {
                let [a, b, c] = row.f_dims;
                let verdict = if row.classical { "classical" } else { "non-classical" };
                let _ = writeln!(
                    out,
                    "{:<16} {verdict:<14} f=({a},{b},{c}) depth {} dimC_D {} fibration {}",
                    row.labels, row.depth, row.dim_c_d, row.fibration
                );
            }
            let _ = writeln!(
                out,
                "{}{}: {} labelings, {} valid, {} classical, {} non-classical",
                summary.family,
                summary.rank,
                summary.total_labelings,
                summary.valid_labelings,
                summary.classical_count,
                summary.nonclassical_count
            );
            out
        }
    }
}
