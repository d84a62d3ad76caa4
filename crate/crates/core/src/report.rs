//! Classification report over a knot table: the non-fibered knots of bridge
//! index at least three through nine and ten crossings, their determinants
//! and branched-cover homology, and the knots left open.

use std::fmt::Write as _;

use thiserror::Error;

use crate::branched_cover::{is_square_free, AbelianGroup};
use crate::obstructions::{self, classify_table, crossing_number, ObstructionError, Reason};
use crate::table::KnotTable;

/// Non-fibered knots of bridge index ≥ 3 with at most nine crossings.
pub const NINE_CROSSING_MANIFEST: [&str; 10] =
    ["8_15", "9_16", "9_25", "9_35", "9_37", "9_38", "9_39", "9_41", "9_46", "9_49"];

/// Non-fibered knots of bridge index ≥ 3 with ten crossings.
pub const TEN_CROSSING_MANIFEST: [&str; 56] = [
    "10_49", "10_50", "10_51", "10_52", "10_53", "10_54", "10_55", "10_56", "10_57", "10_58", "10_61", "10_63",
    "10_65", "10_66", "10_67", "10_68", "10_72", "10_74", "10_76", "10_77", "10_80", "10_83", "10_84", "10_86",
    "10_87", "10_90", "10_92", "10_93", "10_95", "10_97", "10_98", "10_101", "10_102", "10_103", "10_108", "10_111",
    "10_113", "10_114", "10_117", "10_119", "10_120", "10_121", "10_122", "10_128", "10_129", "10_130", "10_131",
    "10_134", "10_135", "10_142", "10_144", "10_146", "10_147", "10_162", "10_164", "10_165",
];

/// Ten-crossing knots that no obstruction here rules out.
pub const EXPECTED_OPEN: [&str; 10] =
    ["10_65", "10_66", "10_67", "10_77", "10_87", "10_98", "10_108", "10_129", "10_147", "10_164"];

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum ReportError {
    #[error("table is missing {}", .0.join(", "))]
    Missing(Vec<String>),

    #[error(transparent)]
    Record(#[from] ObstructionError),
}

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct ReportOptions {
    pub max_crossings: u32,
    /// Skip the completeness check against the manifest.
    pub allow_partial: bool,
}

impl Default for ReportOptions {
    fn default() -> Self {
        ReportOptions { max_crossings: 10, allow_partial: false }
    }
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct ReportRow {
    pub name: String,
    pub determinant: u64,
    pub genus: u32,
    /// Listed only when the determinant is not square-free.
    pub homology: Option<AbelianGroup>,
    pub reason: Option<Reason>,
}

impl ReportRow {
    pub fn is_open(&self) -> bool {
        self.reason.is_none()
    }

    fn verdict_text(&self) -> &'static str {
        self.reason.map_or("OPEN", Reason::as_str)
    }
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Report {
    pub max_crossings: u32,
    pub nine: Vec<ReportRow>,
    pub ten: Vec<ReportRow>,
    /// Every knot in scope with no applicable obstruction, in knot order.
    pub open: Vec<String>,
    pub classified: usize,
}

fn in_scope(name: &str, max: u32) -> bool {
    crossing_number(name).is_none_or(|c| c <= max)
}

pub fn reproduce_tables(t: &KnotTable, opts: ReportOptions) -> Result<Report, ReportError> {
    let records: Vec<_> = t.records.iter().filter(|r| in_scope(&r.name, opts.max_crossings)).cloned().collect();

    if !opts.allow_partial {
        let missing: Vec<String> = NINE_CROSSING_MANIFEST
            .iter()
            .chain(&TEN_CROSSING_MANIFEST)
            .filter(|n| in_scope(n, opts.max_crossings) && t.get(n).is_none())
            .map(|n| n.to_string())
            .collect();
        if !missing.is_empty() {
            return Err(ReportError::Missing(missing));
        }
    }

    let classification = classify_table(&records);
    if let Some(e) = classification.entries.iter().find_map(|e| e.verdict.as_ref().err()) {
        return Err(e.clone().into());
    }

    let rows = |manifest: &[&str]| -> Vec<ReportRow> {
        classification
            .entries
            .iter()
            .filter(|e| manifest.contains(&e.name.as_str()))
            .map(|e| {
                let k = t.get(&e.name).expect("classified from this table");
                let v = e.verdict.as_ref().expect("errors returned above");
                ReportRow {
                    name: k.name.clone(),
                    determinant: k.determinant,
                    genus: k.genus,
                    homology: (!is_square_free(k.determinant)).then(|| v.homology.clone()),
                    reason: v.reason,
                }
            })
            .collect()
    };

    Ok(Report {
        max_crossings: opts.max_crossings,
        nine: rows(&NINE_CROSSING_MANIFEST),
        ten: rows(&TEN_CROSSING_MANIFEST),
        open: classification.open,
        classified: classification.entries.len(),
    })
}

fn homology_text(h: &Option<AbelianGroup>) -> String {
    h.as_ref().map(ToString::to_string).unwrap_or_default()
}

impl Report {
    pub fn to_text(&self) -> String {
        let mut s = String::new();
        let _ = writeln!(s, "Knots through {} crossings: {} classified", self.max_crossings, self.classified);
        let _ = writeln!(s);
        let _ = writeln!(s, "Non-fibered, bridge index >= 3, at most nine crossings");
        let _ = writeln!(s, "{:<8} {:>11} {:>5}  {:<14} verdict", "knot", "determinant", "genus", "H1");
        for r in &self.nine {
            let _ = writeln!(
                s,
                "{:<8} {:>11} {:>5}  {:<14} {}",
                r.name,
                r.determinant,
                r.genus,
                homology_text(&r.homology),
                r.verdict_text()
            );
        }
        if !self.ten.is_empty() {
            let _ = writeln!(s);
            let _ = writeln!(s, "Non-fibered, bridge index >= 3, ten crossings (* = open)");
            let _ = writeln!(s, "  {:<8} {:>11}  {:<14} verdict", "knot", "determinant", "H1");
            for r in &self.ten {
                let mark = if r.is_open() { '*' } else { ' ' };
                let _ = writeln!(
                    s,
                    "{mark} {:<8} {:>11}  {:<14} {}",
                    r.name,
                    r.determinant,
                    homology_text(&r.homology),
                    r.verdict_text()
                );
            }
        }
        let _ = writeln!(s);
        if self.open.is_empty() {
            let _ = writeln!(s, "Open: none");
        } else {
            let _ = writeln!(s, "Open ({}): {}", self.open.len(), self.open.join(", "));
        }
        s
    }

    pub fn to_markdown(&self) -> String {
        let mut s = String::new();
        let _ = writeln!(s, "# Knots through {} crossings\n", self.max_crossings);
        let _ = writeln!(s, "{} knots classified.\n", self.classified);
        let _ = writeln!(s, "## Non-fibered, bridge index ≥ 3, at most nine crossings\n");
        let _ = writeln!(s, "| Knot | Determinant | Genus | H₁(Σ(K)) | Verdict |");
        let _ = writeln!(s, "|---|---:|---:|---|---|");
        for r in &self.nine {
            let _ = writeln!(
                s,
                "| {} | {} | {} | {} | {} |",
                r.name,
                r.determinant,
                r.genus,
                homology_text(&r.homology),
                r.verdict_text()
            );
        }
        if !self.ten.is_empty() {
            let _ = writeln!(s, "\n## Non-fibered, bridge index ≥ 3, ten crossings\n");
            let _ = writeln!(s, "Open rows are in bold.\n");
            let _ = writeln!(s, "| Knot | Determinant | H₁(Σ(K)) | Verdict |");
            let _ = writeln!(s, "|---|---:|---|---|");
            for r in &self.ten {
                let b = if r.is_open() { "**" } else { "" };
                let _ = writeln!(
                    s,
                    "| {b}{}{b} | {b}{}{b} | {b}{}{b} | {b}{}{b} |",
                    r.name,
                    r.determinant,
                    homology_text(&r.homology),
                    r.verdict_text()
                );
            }
        }
        let _ = writeln!(s, "\n## Open\n");
        if self.open.is_empty() {
            let _ = writeln!(s, "None.");
        } else {
            for n in &self.open {
                let _ = writeln!(s, "- {n}");
            }
        }
        s
    }
}

/// The manifest names, in knot order.
pub fn manifest() -> Vec<&'static str> {
    let mut v: Vec<_> = NINE_CROSSING_MANIFEST.iter().chain(&TEN_CROSSING_MANIFEST).copied().collect();
    v.sort_by(|a, b| obstructions::knot_order(a, b));
    v
}
