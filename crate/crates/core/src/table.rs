//! Knot-table CSV ingestion and export.
//!
//! Columns, in order:
//! `name,pd,determinant,genus,fibered,bridge_index,thin,lspace_cover,algebraically_slice,h1`.
//! Booleans are `Y`/`N`; tri-states add `?` (for `lspace_cover`, `?` means
//! "follow `thin`"). `h1` is an invariant-factor list like `3|9`, `pd` a
//! planar diagram code; either may be blank. Lines starting with `#` are
//! provenance comments and are kept verbatim.

use std::collections::HashSet;
use std::fs;
use std::path::{Path, PathBuf};

use rayon::prelude::*;
use thiserror::Error;

use crate::branched_cover::AbelianGroup;
use crate::diagram::PlanarDiagram;
use crate::obstructions::{KnotRecord, LSpaceFlag, ObstructionError, TriState};

pub const HEADER: [&str; 10] = [
    "name",
    "pd",
    "determinant",
    "genus",
    "fibered",
    "bridge_index",
    "thin",
    "lspace_cover",
    "algebraically_slice",
    "h1",
];

const BUNDLED: &str = include_str!("../data/knots.csv");

#[derive(Debug, Error)]
pub enum TableError {
    #[error("cannot read {path}: {source}")]
    Io { path: PathBuf, source: std::io::Error },

    #[error("line {line}: {msg}")]
    Csv { line: u64, msg: String },

    #[error("bad header: expected `{}`, found `{found}`", HEADER.join(","))]
    Header { found: String },

    #[error("line {line}, column {column}: {msg}")]
    Field { line: u64, column: &'static str, msg: String },

    #[error("line {line}: duplicate knot name {name}")]
    Duplicate { line: u64, name: String },

    #[error("line {line}: {source}")]
    Record { line: u64, source: ObstructionError },
}

#[derive(Debug, Clone, Default, PartialEq, Eq)]
pub struct KnotTable {
    pub records: Vec<KnotRecord>,
    pub source_path: Option<PathBuf>,
    /// The `#` comment lines of the source, without the leading `#`.
    pub provenance: Vec<String>,
}

impl KnotTable {
    pub fn get(&self, name: &str) -> Option<&KnotRecord> {
        self.records.iter().find(|r| r.name == name)
    }

    pub fn len(&self) -> usize {
        self.records.len()
    }

    pub fn is_empty(&self) -> bool {
        self.records.is_empty()
    }

    /// Records whose name encodes at most `max` crossings.
    pub fn restrict_crossings(&self, max: u32) -> KnotTable {
        let records = self
            .records
            .iter()
            .filter(|r| crate::obstructions::crossing_number(&r.name).is_some_and(|c| c <= max))
            .cloned()
            .collect();
        KnotTable { records, ..self.clone() }
    }

    /// A table containing only the named records, in the given order.
    pub fn select(&self, names: &[&str]) -> KnotTable {
        let records = names.iter().filter_map(|n| self.get(n)).cloned().collect();
        KnotTable { records, ..self.clone() }
    }
}

fn field_err(line: u64, column: &'static str, msg: impl Into<String>) -> TableError {
    TableError::Field { line, column, msg: msg.into() }
}

fn parse_bool(s: &str, line: u64, column: &'static str) -> Result<bool, TableError> {
    match s {
        "Y" => Ok(true),
        "N" => Ok(false),
        _ => Err(field_err(line, column, format!("expected Y or N, found {s:?}"))),
    }
}

fn parse_tri(s: &str, line: u64, column: &'static str) -> Result<TriState, TableError> {
    match s {
        "Y" => Ok(TriState::Yes),
        "N" => Ok(TriState::No),
        "?" => Ok(TriState::Unknown),
        _ => Err(field_err(line, column, format!("expected Y, N or ?, found {s:?}"))),
    }
}

fn parse_num<T: std::str::FromStr>(s: &str, line: u64, column: &'static str) -> Result<T, TableError> {
    s.parse().map_err(|_| field_err(line, column, format!("expected a nonnegative integer, found {s:?}")))
}

fn parse_row(row: &csv::StringRecord, line: u64) -> Result<KnotRecord, TableError> {
    if row.len() != HEADER.len() {
        return Err(TableError::Csv { line, msg: format!("expected {} fields, found {}", HEADER.len(), row.len()) });
    }
    let f = |i: usize| row[i].trim();
    let name = f(0).to_string();
    if name.is_empty() {
        return Err(field_err(line, "name", "empty"));
    }
    let pd = match f(1) {
        "" => None,
        text => Some(text.parse::<PlanarDiagram>().map_err(|e| field_err(line, "pd", e.to_string()))?),
    };
    let lspace_cover = match parse_tri(f(7), line, "lspace_cover")? {
        TriState::Yes => LSpaceFlag::Yes,
        TriState::No => LSpaceFlag::No,
        TriState::Unknown => LSpaceFlag::Auto,
    };
    let homology = match f(9) {
        "" => None,
        text => Some(AbelianGroup::parse_pipe(text).map_err(|e| field_err(line, "h1", e.to_string()))?),
    };
    Ok(KnotRecord {
        name,
        pd,
        determinant: parse_num(f(2), line, "determinant")?,
        genus: parse_num(f(3), line, "genus")?,
        fibered: parse_bool(f(4), line, "fibered")?,
        bridge_index: parse_num(f(5), line, "bridge_index")?,
        thin: parse_bool(f(6), line, "thin")?,
        lspace_cover,
        algebraically_slice: parse_tri(f(8), line, "algebraically_slice")?,
        homology,
    })
}

/// Parses and validates a table. Rows with a diagram are cross-checked
/// against their listed determinant and homology.
pub fn parse_table(text: &str) -> Result<KnotTable, TableError> {
    let provenance = text.lines().filter_map(|l| l.strip_prefix('#')).map(str::to_string).collect();

    let mut reader =
        csv::ReaderBuilder::new().comment(Some(b'#')).has_headers(true).flexible(true).from_reader(text.as_bytes());
    let header = reader.headers().map_err(|e| TableError::Csv { line: 1, msg: e.to_string() })?.clone();
    if header.is_empty() && text.lines().all(|l| l.trim().is_empty() || l.starts_with('#')) {
        return Ok(KnotTable { provenance, ..KnotTable::default() });
    }
    if header.iter().map(str::trim).ne(HEADER.iter().copied()) {
        return Err(TableError::Header { found: header.iter().collect::<Vec<_>>().join(",") });
    }

    let mut rows = Vec::new();
    for result in reader.records() {
        let row =
            result.map_err(|e| TableError::Csv { line: e.position().map_or(0, |p| p.line()), msg: e.to_string() })?;
        let line = row.position().map_or(0, |p| p.line());
        rows.push((line, parse_row(&row, line)?));
    }

    let mut seen = HashSet::new();
    for (line, r) in &rows {
        if !seen.insert(r.name.as_str()) {
            return Err(TableError::Duplicate { line: *line, name: r.name.clone() });
        }
    }

    rows.par_iter()
        .map(|(line, r)| r.validate().map(|_| ()).map_err(|source| TableError::Record { line: *line, source }))
        .collect::<Result<Vec<()>, _>>()?;

    Ok(KnotTable { records: rows.into_iter().map(|(_, r)| r).collect(), source_path: None, provenance })
}

pub fn ingest_table(path: impl AsRef<Path>) -> Result<KnotTable, TableError> {
    let path = path.as_ref();
    let text = fs::read_to_string(path).map_err(|source| TableError::Io { path: path.to_path_buf(), source })?;
    let mut table = parse_table(&text)?;
    table.source_path = Some(path.to_path_buf());
    Ok(table)
}

/// The table shipped with the library: every prime knot through ten
/// crossings plus the unknot.
pub fn bundled_table() -> KnotTable {
    parse_table(BUNDLED).expect("bundled knot table is valid")
}

pub fn bundled_text() -> &'static str {
    BUNDLED
}

/// Serializes a table in the format `parse_table` reads.
pub fn export_table(t: &KnotTable) -> String {
    let mut out = String::new();
    for line in &t.provenance {
        out.push('#');
        out.push_str(line);
        out.push('\n');
    }
    let mut w = csv::WriterBuilder::new().from_writer(Vec::new());
    w.write_record(HEADER).expect("write to memory");
    let yn = |b: bool| if b { "Y" } else { "N" };
    for r in &t.records {
        let row = [
            r.name.clone(),
            r.pd.as_ref().map(|d| d.to_string()).unwrap_or_default(),
            r.determinant.to_string(),
            r.genus.to_string(),
            yn(r.fibered).to_string(),
            r.bridge_index.to_string(),
            yn(r.thin).to_string(),
            r.lspace_cover.as_char().to_string(),
            r.algebraically_slice.as_char().to_string(),
            r.homology.as_ref().map(AbelianGroup::to_pipe).unwrap_or_default(),
        ];
        w.write_record(&row).expect("write to memory");
    }
    out.push_str(&String::from_utf8(w.into_inner().expect("flush to memory")).expect("utf-8"));
    out
}
