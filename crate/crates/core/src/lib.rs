//! Exact integer algebra for the cosmetic crossing conjecture.
//!
//! * [`intlinalg`]: determinants, gcds of minors, Smith normal form.
//! * [`diagram`]: planar diagram codes, checkerboard colorings, Goeritz
//!   matrices, pretzel diagrams.
//! * [`branched_cover`]: H₁ of the branched double cover and the
//!   square-free-summand test.
//! * [`filling`]: Dehn-filling homology relative to the rational
//!   longitude, and an exhaustive check of the square-free argument.
//! * [`obstructions`]: per-knot verdicts from the known obstructions.
//! * [`table`], [`report`], [`pretzel`]: knot-table ingestion, the
//!   classification report, and the pretzel family search.

pub mod branched_cover;
pub mod diagram;
pub mod filling;
pub mod intlinalg;
pub mod obstructions;
pub mod pretzel;
pub mod report;
pub mod table;

pub use branched_cover::{branched_homology, knot_determinant, square_free_summands, AbelianGroup};
pub use diagram::{default_goeritz, parse_pd, pretzel_diagram, GoeritzMatrix, PlanarDiagram};
pub use filling::{
    common_distance_one_slopes, cosmetic_pair, filling_order, filling_presentation, rational_longitude_constant,
    search_counterexamples, slope_distance, verify_squarefree_theorem, MData, SearchReport, Slope, TheoremCheck,
};
pub use intlinalg::{
    determinant, invariant_factors, smith_diagonal, smith_normal_form, BigMatrix, IntMatrix, SnfResult,
};
pub use obstructions::{classify_table, verdict, ClassificationReport, KnotRecord, Verdict};
pub use pretzel::{pretzel_determinant, pretzel_search, PretzelHit};
pub use report::{reproduce_tables, Report, ReportOptions};
pub use table::{bundled_table, export_table, ingest_table, parse_table, KnotTable};
