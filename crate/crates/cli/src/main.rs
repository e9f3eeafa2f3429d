use std::fs;
use std::io::{self, Write};
use std::path::PathBuf;
use std::process::ExitCode;

use ancell_core::export::{cell_report, off_mesh, report_text, Frame, Listing};
use ancell_core::lattice::xi_combination;
use ancell_core::section::{neighbor_cell_clearance, section_equivalence_check};
use ancell_core::verify::{run_suite, Status, Suite};
use ancell_core::voronoi::locate;
use ancell_core::{format_rat, parse_rat, Error, Limits, RatVec};
use clap::{Parser, Subcommand, ValueEnum};
use serde_json::json;

#[derive(Parser)]
#[command(name = "ancell", version, about = "Exact construction and checks of the A_n Voronoi cell")]
struct Cli {
    /// Machine-readable output
    #[arg(long, global = true)]
    json: bool,

    /// Seed for randomized checks
    #[arg(long, global = true, default_value_t = 1)]
    seed: u64,

    /// Lift every enumeration cap
    #[arg(long, global = true)]
    cap_override: bool,

    #[command(subcommand)]
    command: Command,
}

#[derive(Subcommand)]
enum Command {
    /// Vertex and facet counts and the exact squared volume
    Info { n: usize },
    /// List vertices, facets, faces, rhombi or simplices
    Enumerate {
        #[command(subcommand)]
        kind: Kind,
    },
    /// Locate a point of the plane x·1 = 0
    Locate {
        n: usize,
        /// n+1 rationals such as 1/2 or -3
        #[arg(required = true, allow_hyphen_values = true)]
        coords: Vec<String>,
        /// Project onto the plane first
        #[arg(long)]
        project: bool,
    },
    /// Run the self-check suites
    Verify {
        n: usize,
        #[arg(long, value_enum, default_value_t = SuiteArg::All)]
        suite: SuiteArg,
    },
    /// Write an OFF mesh of the cell (n = 2 or 3)
    Mesh {
        n: usize,
        /// Output file; standard output when absent
        #[arg(long)]
        out: Option<PathBuf>,
        #[arg(long, value_enum, default_value_t = FrameArg::Ambient)]
        frame: FrameArg,
    },
    /// Compare the plane section of the D_{n+1} cell with the A_n cell
    Section { n: usize },
}

#[derive(Subcommand)]
enum Kind {
    Vertices { n: usize },
    Facets { n: usize },
    Faces { k: usize, n: usize },
    Rhombi {
        n: usize,
        /// List the translates xi_j + R_j instead
        #[arg(long)]
        flipped: bool,
    },
    Simplices { n: usize },
}

#[derive(Clone, Copy, ValueEnum)]
enum SuiteArg {
    All,
    Decomp,
    Zonotope,
    Section,
}

#[derive(Clone, Copy, ValueEnum)]
enum FrameArg {
    Ambient,
    Projected,
}

enum Failure {
    Core(Error),
    Io(io::Error),
    Checks,
}

impl From<Error> for Failure {
    fn from(e: Error) -> Self {
        Failure::Core(e)
    }
}

impl From<io::Error> for Failure {
    fn from(e: io::Error) -> Self {
        Failure::Io(e)
    }
}

fn main() -> ExitCode {
    let cli = Cli::parse();
    let limits = if cli.cap_override { Limits::unbounded() } else { Limits::default() };
    match dispatch(&cli, &limits) {
        Ok(()) => ExitCode::SUCCESS,
        Err(Failure::Checks) => ExitCode::from(1),
        Err(Failure::Core(e @ Error::CapExceeded { .. })) => {
            eprintln!("error: {e}");
            ExitCode::from(3)
        }
        Err(Failure::Core(e)) => {
            eprintln!("error: {e}");
            ExitCode::from(2)
        }
        Err(Failure::Io(e)) => {
            eprintln!("error: {e}");
            ExitCode::from(4)
        }
    }
}

fn emit(text: &str) -> Result<(), Failure> {
    let mut out = io::stdout().lock();
    out.write_all(text.as_bytes())?;
    out.flush()?;
    Ok(())
}

fn dispatch(cli: &Cli, limits: &Limits) -> Result<(), Failure> {
    match &cli.command {
        Command::Info { n } => {
            let r = cell_report(*n, limits)?;
            if cli.json {
                emit(&format!("{}\n", serde_json::to_string(&r).expect("report serializes")))
            } else {
                emit(&report_text(&r))
            }
        }
        Command::Enumerate { kind } => {
            let listing = match kind {
                Kind::Vertices { n } => Listing::vertices(*n, limits)?,
                Kind::Facets { n } => Listing::facets(*n, limits)?,
                Kind::Faces { k, n } => Listing::faces(*n, *k, limits)?,
                Kind::Rhombi { n, flipped } => Listing::rhombi(*n, *flipped)?,
                Kind::Simplices { n } => Listing::simplices(*n, limits)?,
            };
            if cli.json {
                emit(&format!("{}\n", listing.to_json()))
            } else {
                emit(&listing.to_text())
            }
        }
        Command::Locate { n, coords, project } => {
            // coordinates may start with '-', so flags after them arrive here
            let mut json = cli.json;
            let mut project = *project;
            let mut values = Vec::new();
            for c in coords {
                match c.as_str() {
                    "--json" => json = true,
                    "--project" => project = true,
                    s if s.starts_with("--") => {
                        return Err(Error::InvalidArgument(format!("unexpected flag {s} after coordinates")).into())
                    }
                    _ => values.push(c.clone()),
                }
            }
            cmd_locate(json, *n, &values, project)
        }
        Command::Verify { n, suite } => cmd_verify(cli.json, *n, *suite, cli.seed, limits),
        Command::Mesh { n, out, frame } => {
            let frame = match frame {
                FrameArg::Ambient => Frame::Ambient,
                FrameArg::Projected => Frame::Projected,
            };
            let text = off_mesh(*n, frame)?;
            match out {
                Some(path) => Ok(fs::write(path, text)?),
                None => emit(&text),
            }
        }
        Command::Section { n } => cmd_section(cli.json, *n),
    }
}

fn cmd_locate(json: bool, n: usize, coords: &[String], project: bool) -> Result<(), Failure> {
    let parsed = coords.iter().map(|c| parse_rat(c)).collect::<Result<Vec<_>, _>>()?;
    if parsed.len() != n + 1 {
        return Err(Error::DimensionMismatch {
            expected: n + 1,
            found: parsed.len(),
        }
        .into());
    }
    let x = if project { xi_combination(&parsed) } else { RatVec::new(parsed) };
    let loc = locate(n, &x)?;
    let closest: Vec<String> = loc.closest.coords().iter().map(|c| c.to_string()).collect();
    if json {
        let v = json!({
            "n": n,
            "point": x,
            "inside": loc.inside,
            "boundary": loc.boundary,
            "rhombus": loc.rhombus_index.map(|j| j + 1),
            "sorting_perm": loc.sorting_perm.one_based(),
            "closest": closest,
        });
        return emit(&format!("{v}\n"));
    }
    let rhombus = loc.rhombus_index.map_or("-".to_string(), |j| (j + 1).to_string());
    emit(&format!(
        "point {x}\ninside {}\nboundary {}\nrhombus {rhombus}\nsorting permutation {}\nclosest ({})\n",
        loc.inside,
        loc.boundary,
        loc.sorting_perm,
        closest.join(", ")
    ))
}

fn cmd_verify(json: bool, n: usize, suite: SuiteArg, seed: u64, limits: &Limits) -> Result<(), Failure> {
    let suite = match suite {
        SuiteArg::All => Suite::All,
        SuiteArg::Decomp => Suite::Decomp,
        SuiteArg::Zonotope => Suite::Zonotope,
        SuiteArg::Section => Suite::Section,
    };
    let report = run_suite(n, suite, seed, limits)?;
    for c in &report.checks {
        eprintln!("{:<24} {:>10.3} ms", c.name, c.elapsed.as_secs_f64() * 1e3);
    }
    if json {
        let checks: Vec<_> = report
            .checks
            .iter()
            .map(|c| json!({"name": c.name, "status": c.status.to_string(), "detail": c.detail}))
            .collect();
        emit(&format!("{}\n", json!({"n": n, "passed": report.passed(), "checks": checks})))?;
    } else {
        let mut text = String::new();
        for c in &report.checks {
            text.push_str(&format!("{:<9} {:<24} {}\n", c.status.to_string(), c.name, c.detail));
        }
        let failed = report.checks.iter().filter(|c| c.status == Status::Fail).count();
        text.push_str(&format!(
            "{} checks, {failed} failed\n",
            report.checks.len()
        ));
        emit(&text)?;
    }
    if report.passed() {
        Ok(())
    } else {
        Err(Failure::Checks)
    }
}

fn cmd_section(json: bool, n: usize) -> Result<(), Failure> {
    let r = section_equivalence_check(n)?;
    let c = neighbor_cell_clearance(n)?;
    let witness = r.witness.as_ref().map(|w| w.to_strings());
    if json {
        let v = json!({
            "n": n,
            "equal": r.equal,
            "section_vertices": r.section_vertices,
            "cell_vertices": r.cell_vertices,
            "neighbor_rank": r.neighbor_rank,
            "witness": witness,
            "clearance": format_rat(&c.min),
            "as_expected": r.as_expected(),
        });
        emit(&format!("{v}\n"))?;
    } else {
        let rank = r.neighbor_rank.map_or("empty".to_string(), |k| k.to_string());
        let w = r.witness.as_ref().map_or("none".to_string(), |w| w.to_string());
        emit(&format!(
            "n {n}\nsection equals cell {}\nsection vertices {}\ncell vertices {}\nneighbor section rank {rank}\nwitness {w}\nclearance {}\n",
            r.equal,
            r.section_vertices,
            r.cell_vertices,
            format_rat(&c.min)
        ))?;
    }
    if r.as_expected() {
        Ok(())
    } else {
        Err(Failure::Checks)
    }
}
