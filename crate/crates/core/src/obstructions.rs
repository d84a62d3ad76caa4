//! Known obstructions to cosmetic crossing changes, applied to one knot
//! record at a time.
//!
//! Four tests are run on every record, always all of them, and each outcome
//! lands in the verdict's trace:
//!
//! 1. two-bridge knots,
//! 2. fibered knots,
//! 3. genus one with either a non-algebraically-slice flag or a non-cyclic
//!    H₁(Σ(K)),
//! 4. Σ(K) an L-space whose H₁ has only square-free invariant factors.
//!
//! When several fire, the reported reason prefers 1, 2, 4, 3 in that order:
//! the homological criterion is credited ahead of the genus-one one.

use std::cmp::Ordering;
use std::fmt;

use rayon::prelude::*;
use thiserror::Error;

use crate::branched_cover::{self, square_free_summands, AbelianGroup, BranchedCoverError};
use crate::diagram::{self, DiagramError, PlanarDiagram};

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum ObstructionError {
    #[error("{0}: no homology and no diagram to compute it from")]
    MissingHomology(String),

    #[error("{name}: {source}")]
    Diagram { name: String, source: DiagramError },

    #[error("{name}: {source}")]
    Homology { name: String, source: BranchedCoverError },

    #[error("{name}: {msg}")]
    Invalid { name: String, msg: String },
}

/// Three-valued flag: `Y`, `N`, or `?`.
#[derive(Debug, Clone, Copy, Default, PartialEq, Eq, Hash)]
pub enum TriState {
    Yes,
    No,
    #[default]
    Unknown,
}

impl TriState {
    pub fn as_char(self) -> char {
        match self {
            TriState::Yes => 'Y',
            TriState::No => 'N',
            TriState::Unknown => '?',
        }
    }
}

/// Whether Σ(K) is an L-space. `Auto` defers to Khovanov thinness.
#[derive(Debug, Clone, Copy, Default, PartialEq, Eq, Hash)]
pub enum LSpaceFlag {
    Yes,
    /// Not known to be an L-space.
    No,
    #[default]
    Auto,
}

impl LSpaceFlag {
    pub fn as_char(self) -> char {
        match self {
            LSpaceFlag::Yes => 'Y',
            LSpaceFlag::No => 'N',
            LSpaceFlag::Auto => '?',
        }
    }
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct KnotRecord {
    pub name: String,
    pub pd: Option<PlanarDiagram>,
    pub determinant: u64,
    pub genus: u32,
    pub fibered: bool,
    pub bridge_index: u32,
    pub thin: bool,
    pub lspace_cover: LSpaceFlag,
    pub algebraically_slice: TriState,
    pub homology: Option<AbelianGroup>,
}

impl KnotRecord {
    /// A record with only the name set; fill in the rest field by field.
    pub fn named(name: impl Into<String>) -> Self {
        KnotRecord {
            name: name.into(),
            pd: None,
            determinant: 1,
            genus: 0,
            fibered: false,
            bridge_index: 1,
            thin: false,
            lspace_cover: LSpaceFlag::Auto,
            algebraically_slice: TriState::Unknown,
            homology: None,
        }
    }

    fn invalid(&self, msg: impl Into<String>) -> ObstructionError {
        ObstructionError::Invalid { name: self.name.clone(), msg: msg.into() }
    }

    /// H₁(Σ(K)) computed from the diagram, if there is one.
    pub fn diagram_homology(&self) -> Result<Option<(AbelianGroup, u64)>, ObstructionError> {
        let Some(pd) = &self.pd else { return Ok(None) };
        let g = diagram::default_goeritz(pd)
            .map_err(|source| ObstructionError::Diagram { name: self.name.clone(), source })?;
        let wrap = |source| ObstructionError::Homology { name: self.name.clone(), source };
        let det = branched_cover::knot_determinant(&g).map_err(wrap)?;
        let group = branched_cover::branched_homology(&g).map_err(wrap)?;
        Ok(Some((group, det)))
    }

    /// The stored homology, else the one computed from the diagram.
    pub fn resolved_homology(&self) -> Result<AbelianGroup, ObstructionError> {
        if let Some(h) = &self.homology {
            return Ok(h.clone());
        }
        match self.diagram_homology()? {
            Some((h, _)) => Ok(h),
            None => Err(ObstructionError::MissingHomology(self.name.clone())),
        }
    }

    /// Checks internal consistency; the diagram, when present, must agree
    /// with the listed determinant and homology. Returns the homology the
    /// record resolves to, if any.
    pub fn validate(&self) -> Result<Option<AbelianGroup>, ObstructionError> {
        if self.name.trim().is_empty() {
            return Err(self.invalid("empty name"));
        }
        if self.determinant.is_multiple_of(2) {
            return Err(self.invalid(format!("determinant {} is even", self.determinant)));
        }
        if self.bridge_index < 1 {
            return Err(self.invalid("bridge index must be at least 1"));
        }
        if let Some(h) = &self.homology {
            if h.order() != self.determinant {
                return Err(self.invalid(format!(
                    "homology {h} has order {} but determinant is {}",
                    h.order(),
                    self.determinant
                )));
            }
        }
        let computed = self.diagram_homology()?;
        if let Some((group, det)) = &computed {
            if *det != self.determinant {
                return Err(self.invalid(format!("diagram has determinant {det}, table lists {}", self.determinant)));
            }
            if let Some(h) = &self.homology {
                if h != group {
                    return Err(self.invalid(format!("diagram gives homology {group}, table lists {h}")));
                }
            }
        }
        Ok(self.homology.clone().or(computed.map(|(g, _)| g)))
    }

    /// Resolved L-space status of Σ(K).
    pub fn lspace(&self) -> bool {
        match self.lspace_cover {
            LSpaceFlag::Yes => true,
            LSpaceFlag::No => false,
            LSpaceFlag::Auto => self.thin,
        }
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub enum Obstruction {
    TwoBridge,
    Fibered,
    GenusOne,
    LSpaceSquareFree,
}

impl Obstruction {
    /// Evaluation order, as the obstructions are conventionally listed.
    pub const LISTED: [Obstruction; 4] =
        [Obstruction::TwoBridge, Obstruction::Fibered, Obstruction::GenusOne, Obstruction::LSpaceSquareFree];

    /// Order in which a firing obstruction is credited as the reason.
    pub const PRIORITY: [Obstruction; 4] =
        [Obstruction::TwoBridge, Obstruction::Fibered, Obstruction::LSpaceSquareFree, Obstruction::GenusOne];

    pub fn name(self) -> &'static str {
        match self {
            Obstruction::TwoBridge => "two_bridge",
            Obstruction::Fibered => "fibered",
            Obstruction::GenusOne => "genus_one",
            Obstruction::LSpaceSquareFree => "lspace_square_free",
        }
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub enum Reason {
    TwoBridge,
    Fibered,
    GenusOneHomology,
    GenusOneNotAlgSlice,
    LSpaceSquareFree,
}

impl Reason {
    pub fn as_str(self) -> &'static str {
        match self {
            Reason::TwoBridge => "two_bridge",
            Reason::Fibered => "fibered",
            Reason::GenusOneHomology => "genus_one_homology",
            Reason::GenusOneNotAlgSlice => "genus_one_not_alg_slice",
            Reason::LSpaceSquareFree => "lspace_square_free",
        }
    }
}

impl fmt::Display for Reason {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.as_str())
    }
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct TraceStep {
    pub obstruction: Obstruction,
    /// The reason this step would give, when it fires.
    pub fired: Option<Reason>,
    pub note: String,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub enum Status {
    Holds,
    Open,
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Verdict {
    pub status: Status,
    pub reason: Option<Reason>,
    pub homology: AbelianGroup,
    pub trace: Vec<TraceStep>,
}

impl Verdict {
    pub fn holds(&self) -> bool {
        self.status == Status::Holds
    }

    pub fn firings(&self) -> impl Iterator<Item = Reason> + '_ {
        self.trace.iter().filter_map(|s| s.fired)
    }
}

impl fmt::Display for Verdict {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self.reason {
            Some(r) => write!(f, "holds ({r})"),
            None => write!(f, "open"),
        }
    }
}

fn step(k: &KnotRecord, h: &AbelianGroup, o: Obstruction) -> TraceStep {
    let (fired, note) = match o {
        Obstruction::TwoBridge => {
            let fire = k.bridge_index <= 2;
            (fire.then_some(Reason::TwoBridge), format!("bridge index {}", k.bridge_index))
        }
        Obstruction::Fibered => {
            (k.fibered.then_some(Reason::Fibered), if k.fibered { "fibered".into() } else { "not fibered".into() })
        }
        Obstruction::GenusOne => {
            if k.genus != 1 {
                (None, format!("genus {}", k.genus))
            } else if !h.is_cyclic() {
                (Some(Reason::GenusOneHomology), format!("genus 1, H1 = {h} not cyclic"))
            } else {
                match k.algebraically_slice {
                    TriState::No => (Some(Reason::GenusOneNotAlgSlice), "genus 1, not algebraically slice".into()),
                    TriState::Yes => (None, "genus 1, cyclic H1, algebraically slice".into()),
                    TriState::Unknown => (None, "genus 1, cyclic H1, algebraic sliceness unknown".into()),
                }
            }
        }
        Obstruction::LSpaceSquareFree => {
            let origin = match k.lspace_cover {
                LSpaceFlag::Yes => "L-space (listed)",
                LSpaceFlag::No => "not known to be an L-space",
                LSpaceFlag::Auto if k.thin => "L-space (thin)",
                LSpaceFlag::Auto => "not known to be an L-space (not thin)",
            };
            let sf = square_free_summands(h);
            let fire = k.lspace() && sf.all_square_free;
            let detail = match sf.witness {
                None => format!("{origin}; H1 = {h} square-free"),
                Some(w) => format!("{origin}; H1 = {h}, {}^2 divides Z/{}", w.prime, w.factor),
            };
            (fire.then_some(Reason::LSpaceSquareFree), detail)
        }
    };
    TraceStep { obstruction: o, fired, note }
}

pub fn verdict(k: &KnotRecord) -> Result<Verdict, ObstructionError> {
    let homology = k.resolved_homology()?;
    let trace: Vec<TraceStep> = Obstruction::LISTED.iter().map(|&o| step(k, &homology, o)).collect();
    let reason =
        Obstruction::PRIORITY.iter().find_map(|o| trace.iter().find(|s| s.obstruction == *o).and_then(|s| s.fired));
    let status = if reason.is_some() { Status::Holds } else { Status::Open };
    Ok(Verdict { status, reason, homology, trace })
}

/// Natural order on knot names such as `9_35` < `10_1` < `10_65`; names not
/// of that form sort last, alphabetically.
pub fn knot_order(a: &str, b: &str) -> Ordering {
    fn key(s: &str) -> Option<(u32, u32)> {
        let (c, i) = s.split_once('_')?;
        Some((c.parse().ok()?, i.parse().ok()?))
    }
    match (key(a), key(b)) {
        (Some(x), Some(y)) => x.cmp(&y).then_with(|| a.cmp(b)),
        (Some(_), None) => Ordering::Less,
        (None, Some(_)) => Ordering::Greater,
        (None, None) => a.cmp(b),
    }
}

/// Crossing number encoded in a knot name like `10_65`.
pub fn crossing_number(name: &str) -> Option<u32> {
    name.split_once('_')?.0.parse().ok()
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Classified {
    pub name: String,
    pub verdict: Result<Verdict, ObstructionError>,
}

#[derive(Debug, Clone, Default, PartialEq, Eq)]
pub struct ClassificationReport {
    pub entries: Vec<Classified>,
    /// Knots with no applicable obstruction.
    pub open: Vec<String>,
    /// Knots whose records could not be evaluated.
    pub errors: Vec<String>,
}

pub fn classify_table(records: &[KnotRecord]) -> ClassificationReport {
    let mut entries: Vec<Classified> =
        records.par_iter().map(|k| Classified { name: k.name.clone(), verdict: verdict(k) }).collect();
    entries.sort_by(|a, b| knot_order(&a.name, &b.name));
    let open = entries.iter().filter(|e| matches!(&e.verdict, Ok(v) if !v.holds())).map(|e| e.name.clone()).collect();
    let errors = entries.iter().filter(|e| e.verdict.is_err()).map(|e| e.name.clone()).collect();
    ClassificationReport { entries, open, errors }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn group(f: &[u64]) -> AbelianGroup {
        AbelianGroup::new(f.to_vec()).unwrap()
    }

    fn rec(name: &str, det: u64, genus: u32, h: &[u64]) -> KnotRecord {
        KnotRecord {
            determinant: det,
            genus,
            bridge_index: 3,
            thin: true,
            homology: Some(group(h)),
            ..KnotRecord::named(name)
        }
    }

    #[test]
    fn genus_one_non_cyclic() {
        let v = verdict(&rec("9_35", 27, 1, &[3, 9])).unwrap();
        assert_eq!(v.status, Status::Holds);
        assert_eq!(v.reason, Some(Reason::GenusOneHomology));
        assert_eq!(v.trace.len(), 4);
    }

    #[test]
    fn non_square_free_is_open() {
        let v = verdict(&rec("10_65", 63, 2, &[63])).unwrap();
        assert_eq!(v.status, Status::Open);
        assert_eq!(v.reason, None);
        assert!(v.trace[3].note.contains("3^2"), "{}", v.trace[3].note);
    }

    #[test]
    fn thin_square_free_cover() {
        let v = verdict(&rec("9_46", 9, 1, &[3, 3])).unwrap();
        assert_eq!(v.reason, Some(Reason::LSpaceSquareFree));
        // the genus-one test fires too, and is recorded
        assert!(v.firings().any(|r| r == Reason::GenusOneHomology));
    }

    #[test]
    fn listed_lspace_override() {
        let mut k = rec("10_128", 11, 3, &[11]);
        k.thin = false;
        assert!(!verdict(&k).unwrap().holds());
        k.lspace_cover = LSpaceFlag::Yes;
        assert_eq!(verdict(&k).unwrap().reason, Some(Reason::LSpaceSquareFree));
    }

    #[test]
    fn two_bridge_and_fibered_first() {
        let mut k = rec("x", 27, 1, &[3, 9]);
        k.fibered = true;
        assert_eq!(verdict(&k).unwrap().reason, Some(Reason::Fibered));
        k.bridge_index = 2;
        assert_eq!(verdict(&k).unwrap().reason, Some(Reason::TwoBridge));
    }

    #[test]
    fn genus_one_slice_flag() {
        let mut k = rec("x", 27, 1, &[27]);
        assert!(!verdict(&k).unwrap().holds());
        k.algebraically_slice = TriState::No;
        assert_eq!(verdict(&k).unwrap().reason, Some(Reason::GenusOneNotAlgSlice));
        k.algebraically_slice = TriState::Yes;
        assert!(!verdict(&k).unwrap().holds());
    }

    #[test]
    fn homology_from_diagram() {
        let k = KnotRecord {
            pd: Some("X(1,4,2,5) X(3,6,4,1) X(5,2,6,3)".parse().unwrap()),
            determinant: 3,
            bridge_index: 3,
            thin: true,
            ..KnotRecord::named("t")
        };
        assert_eq!(k.validate().unwrap(), Some(group(&[3])));
        assert_eq!(verdict(&k).unwrap().homology, group(&[3]));
        let bad = KnotRecord { determinant: 5, ..k.clone() };
        assert!(bad.validate().is_err());
        let bad = KnotRecord { homology: Some(group(&[3])), determinant: 3, ..k };
        assert!(bad.validate().is_ok());
    }

    #[test]
    fn missing_homology() {
        assert_eq!(verdict(&KnotRecord::named("x")), Err(ObstructionError::MissingHomology("x".into())));
    }

    #[test]
    fn even_determinant_rejected() {
        let k = KnotRecord { determinant: 28, ..KnotRecord::named("9_35") };
        assert!(k.validate().is_err());
    }

    #[test]
    fn classify_sorts_and_collects() {
        let report =
            classify_table(&[rec("10_65", 63, 2, &[63]), rec("9_35", 27, 1, &[3, 9]), KnotRecord::named("bad")]);
        let names: Vec<_> = report.entries.iter().map(|e| e.name.as_str()).collect();
        assert_eq!(names, ["9_35", "10_65", "bad"]);
        assert_eq!(report.open, ["10_65"]);
        assert_eq!(report.errors, ["bad"]);
        assert_eq!(classify_table(&[]), ClassificationReport::default());
    }

    #[test]
    fn name_order() {
        let mut v = vec!["10_1", "9_35", "3_1", "10_165", "10_65", "0_1"];
        v.sort_by(|a, b| knot_order(a, b));
        assert_eq!(v, ["0_1", "3_1", "9_35", "10_1", "10_65", "10_165"]);
        assert_eq!(crossing_number("10_65"), Some(10));
    }
}
