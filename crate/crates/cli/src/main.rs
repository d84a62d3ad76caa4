//! `nugatory`: command-line front end for the knot-table classification,
//! branched-cover homology, and the filling-homology oracle.

use std::path::PathBuf;
use std::process::ExitCode;

use anyhow::{bail, Context, Result};
use clap::{Parser, Subcommand, ValueEnum};

use nugatory::branched_cover::square_free_summands;
use nugatory::filling::{common_distance_one_slopes, search_counterexamples, Slope};
use nugatory::obstructions::verdict;
use nugatory::{
    branched_homology, bundled_table, default_goeritz, ingest_table, knot_determinant, pretzel_search,
    reproduce_tables, KnotTable, PlanarDiagram, ReportOptions,
};

#[derive(Parser)]
#[command(name = "nugatory", version, about = "Obstructions to cosmetic crossing changes")]
struct Cli {
    #[command(subcommand)]
    command: Command,
}

#[derive(Subcommand)]
enum Command {
    /// First homology of the branched double cover.
    Homology {
        /// Planar diagram code, e.g. "X(1,4,2,5) X(3,6,4,1) X(5,2,6,3)".
        #[arg(long, conflicts_with = "name", required_unless_present = "name")]
        pd: Option<String>,
        /// Knot name to look up in the table.
        #[arg(long)]
        name: Option<String>,
        #[arg(long)]
        table: Option<PathBuf>,
    },
    /// Which obstruction, if any, rules out cosmetic crossing changes.
    Verdict {
        #[arg(long)]
        name: String,
        #[arg(long)]
        table: Option<PathBuf>,
    },
    /// Classification tables and the list of open knots.
    Tables {
        #[arg(long)]
        table: Option<PathBuf>,
        #[arg(long, default_value_t = 10, value_parser = clap::value_parser!(u32).range(0..=10))]
        max_crossings: u32,
        /// Write the report here instead of standard output.
        #[arg(long)]
        out: Option<PathBuf>,
        #[arg(long, value_enum, default_value_t = Format::Text)]
        format: Format,
        /// Do not require every non-fibered bridge-3 knot to be present.
        #[arg(long)]
        allow_partial: bool,
    },
    /// Pretzel knots P(-p, p-1, r) with the given determinant.
    Pretzel {
        #[arg(long)]
        det: u64,
    },
    /// Exhaustive search for filling data that defeats the square-free argument.
    Oracle {
        #[arg(long)]
        max_order: u64,
        /// Drop the square-free hypothesis (counterexamples then exist).
        #[arg(long)]
        allow_non_squarefree: bool,
    },
    /// The two slopes at distance one from both of two slopes at distance two.
    Slopes {
        #[arg(long, allow_hyphen_values = true)]
        alpha: Slope,
        #[arg(long, allow_hyphen_values = true)]
        beta: Slope,
    },
}

#[derive(Clone, Copy, ValueEnum)]
enum Format {
    Text,
    Markdown,
}

/// `--table`, else `$NUGATORY_DATA`, else the bundled table.
fn load_table(path: Option<PathBuf>) -> Result<KnotTable> {
    let path = path.or_else(|| std::env::var_os("NUGATORY_DATA").map(PathBuf::from));
    match path {
        Some(p) => ingest_table(&p).with_context(|| format!("loading {}", p.display())),
        None => Ok(bundled_table()),
    }
}

fn run(cli: Cli) -> Result<()> {
    match cli.command {
        Command::Homology { pd, name, table } => {
            let diagram: PlanarDiagram = match (pd, name) {
                (Some(pd), _) => pd.parse()?,
                (None, Some(name)) => {
                    let t = load_table(table)?;
                    let k = t.get(&name).with_context(|| format!("no knot named {name}"))?;
                    match &k.pd {
                        Some(d) => d.clone(),
                        None => bail!("{name} has no diagram in the table"),
                    }
                }
                (None, None) => unreachable!("clap requires one of --pd, --name"),
            };
            let g = default_goeritz(&diagram)?;
            let h = branched_homology(&g)?;
            let det = knot_determinant(&g)?;
            println!("{h}");
            println!("det {det}");
            let sf = square_free_summands(&h);
            match sf.witness {
                None => println!("square-free summands: yes"),
                Some(w) => println!("square-free summands: no ({}^2 divides Z/{})", w.prime, w.factor),
            }
        }
        Command::Verdict { name, table } => {
            let t = load_table(table)?;
            let k = t.get(&name).with_context(|| format!("no knot named {name}"))?;
            let v = verdict(k)?;
            println!("{name}: {v}");
            println!("H1 = {}", v.homology);
            for s in &v.trace {
                let mark = s.fired.map_or("-".to_string(), |r| format!("fires: {r}"));
                println!("  {:<20} {:<28} {}", s.obstruction.name(), mark, s.note);
            }
        }
        Command::Tables { table, max_crossings, out, format, allow_partial } => {
            let t = load_table(table)?;
            let report = reproduce_tables(&t, ReportOptions { max_crossings, allow_partial })?;
            let text = match format {
                Format::Text => report.to_text(),
                Format::Markdown => report.to_markdown(),
            };
            match out {
                Some(p) => std::fs::write(&p, text).with_context(|| format!("writing {}", p.display()))?,
                None => print!("{text}"),
            }
        }
        Command::Pretzel { det } => {
            let hits = pretzel_search(det)?;
            for h in &hits {
                let sf = if h.square_free_det { "square-free" } else { "not square-free" };
                println!("P(-{}, {}, {})  det {}  {sf}", h.p, h.q, h.r, h.det);
            }
            println!("{} hits", hits.len());
        }
        Command::Oracle { max_order, allow_non_squarefree } => {
            if max_order < 1 {
                bail!("--max-order must be at least 1");
            }
            let report = search_counterexamples(max_order, !allow_non_squarefree)?;
            println!("enumerated {} instances with odd order <= {max_order}", report.enumerated);
            println!("hypotheses met by {}", report.hypotheses_met);
            for m in &report.counterexamples {
                println!("  {m}");
            }
            println!("{} counterexamples", report.counterexamples.len());
        }
        Command::Slopes { alpha, beta } => {
            for s in common_distance_one_slopes(alpha, beta)? {
                println!("{s}");
            }
        }
    }
    Ok(())
}

fn main() -> ExitCode {
    let cli = Cli::parse();
    match run(cli) {
        Ok(()) => ExitCode::SUCCESS,
        Err(e) => {
            eprintln!("error: {e:#}");
            ExitCode::from(1)
        }
    }
}
