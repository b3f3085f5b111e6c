//! `sphtile`: catalog, verification, enumeration, solving and export for
//! edge-to-edge tilings of the sphere by regular polygons.

use std::f64::consts::PI;
use std::fs;
use std::path::PathBuf;
use std::process::ExitCode;

use clap::{Args, Parser, Subcommand, ValueEnum};

use spherical_tilings::algsolve::{admissible_assignments, solve_vertex_system};
use spherical_tilings::catalog::{self, Kind, Recipe, Relation};
use spherical_tilings::embedder;
use spherical_tilings::report;
use spherical_tilings::vertexcomb::{enumerate_candidate_types, VertexType, DEFAULT_MAX_SIZE};
use spherical_tilings::Error;

#[derive(Parser)]
#[command(
    name = "sphtile",
    version,
    about = "Edge-to-edge tilings of the sphere by regular polygons"
)]
struct Cli {
    #[command(subcommand)]
    command: Command,
}

#[derive(Subcommand)]
enum Command {
    /// Browse the catalog.
    #[command(subcommand)]
    Catalog(CatalogCmd),
    /// Build tilings and check every identity they must satisfy.
    Verify(VerifyArgs),
    /// List vertex types allowed by the planar angle bound.
    Enumerate(EnumerateArgs),
    /// Solve the angle system of a vertex type.
    Solve(SolveArgs),
    /// Embed a tiling and write it to a file.
    Export(ExportArgs),
    /// Remove or rotate pentagonal cupolas of the expanded dodecahedral tiling.
    Derive(DeriveArgs),
}

#[derive(Subcommand)]
enum CatalogCmd {
    /// Names of catalog entries.
    List {
        /// platonic, archimedean, johnson, prism, antiprism, hosohedron or dihedron.
        #[arg(long)]
        family: Option<String>,
    },
    /// Counts, angles and edge of one entry.
    Show {
        name: String,
        #[arg(long)]
        json: bool,
    },
}

#[derive(Args)]
struct VerifyArgs {
    /// Catalog name, e.g. J72 or prism(7).
    #[arg(required_unless_present = "all", conflicts_with = "all")]
    name: Option<String>,
    #[arg(long)]
    all: bool,
    #[arg(long, default_value_t = 1e-9)]
    tol: f64,
    /// Write a JSON report here.
    #[arg(long)]
    report: Option<PathBuf>,
}

#[derive(Args)]
struct EnumerateArgs {
    #[arg(long, default_value_t = DEFAULT_MAX_SIZE)]
    max_size: u32,
    #[arg(long, conflicts_with = "triangle_free")]
    with_triangle: bool,
    #[arg(long)]
    triangle_free: bool,
}

#[derive(Args)]
struct SolveArgs {
    /// Face sizes, e.g. "3,4,4,5" or "3.4^2.5".
    #[arg(long = "type")]
    vertex_type: String,
    /// Also print solutions no tiling can use.
    #[arg(long)]
    all_roots: bool,
}

#[derive(Clone, Copy, ValueEnum)]
enum Format {
    Obj,
    Json,
}

#[derive(Args)]
struct ExportArgs {
    name: String,
    #[arg(long, value_enum)]
    format: Format,
    #[arg(long)]
    out: PathBuf,
    /// Segments per edge in OBJ output.
    #[arg(long, default_value_t = 8)]
    arc_steps: usize,
}

#[derive(Args)]
struct DeriveArgs {
    /// Base tiling; only eD has cupolas to work on.
    base: String,
    /// Cupolas to remove, optionally suffixed o (opposite) or n (non-opposite).
    #[arg(long, default_value = "0")]
    dim: String,
    /// Cupolas to rotate, with the same optional suffix.
    #[arg(long, default_value = "0")]
    rot: String,
}

/// Failure classes mapped to exit codes.
enum Failure {
    Verification(String),
    Usage(String),
}

impl From<Error> for Failure {
    fn from(e: Error) -> Self {
        match e {
            Error::UnknownName(_) | Error::Format(_) | Error::PreconditionFailed(_) => {
                Failure::Usage(e.to_string())
            }
            _ => Failure::Verification(e.to_string()),
        }
    }
}

fn io(e: std::io::Error) -> Failure {
    Failure::Verification(e.to_string())
}

fn over_pi(a: f64) -> String {
    format!("{:.12}π", a / PI)
}

fn catalog_cmd(cmd: CatalogCmd) -> Result<(), Failure> {
    match cmd {
        CatalogCmd::List { family } => {
            let kind = family.map(|f| f.parse::<Kind>()).transpose()?;
            for name in catalog::list(kind) {
                println!("{name}");
            }
        }
        CatalogCmd::Show { name, json } => {
            let t = catalog::make(&name)?;
            if json {
                let e = embedder::embed(&t.map, &t.assignment)?;
                println!(
                    "{}",
                    embedder::export_json(&t.name, &t.map, &t.assignment, Some(&e))?
                );
            } else {
                println!("{} ({})", t.name, t.kind.as_str());
                println!("{}", t.census());
                for (m, a) in t.assignment.iter() {
                    println!("α{m} = {}", over_pi(a));
                }
                println!("x = {:.15}", t.assignment.edge());
            }
        }
    }
    Ok(())
}

fn verify(args: VerifyArgs) -> Result<(), Failure> {
    let names = match args.name {
        Some(n) => {
            if catalog::golden::named(&n).is_none() && catalog::parse_family(&n).is_none() {
                return Err(Error::UnknownName(n).into());
            }
            vec![n]
        }
        None => catalog::list(None),
    };
    let reports = report::verify_all(&names, args.tol);
    let mut failed = 0;
    for r in &reports {
        if r.passed {
            println!("PASS {}", r.name);
        } else {
            failed += 1;
            let why: Vec<String> = r
                .failures()
                .map(|c| format!("{} ({:e}) {}", c.name, c.residual, c.detail))
                .collect();
            println!("FAIL {}: {}", r.name, why.join("; "));
        }
    }
    if let Some(path) = args.report {
        fs::write(path, report::to_json(&reports) + "\n").map_err(io)?;
    }
    println!("{} of {} passed", reports.len() - failed, reports.len());
    if failed > 0 {
        return Err(Failure::Verification(format!("{failed} entries failed")));
    }
    Ok(())
}

fn enumerate(args: EnumerateArgs) -> Result<(), Failure> {
    if args.max_size < 3 {
        return Err(Failure::Usage("--max-size must be at least 3".into()));
    }
    for t in enumerate_candidate_types(args.max_size) {
        let tri = t.contains(3);
        if (args.with_triangle && !tri) || (args.triangle_free && tri) {
            continue;
        }
        println!("{t}");
    }
    Ok(())
}

fn solve(args: SolveArgs) -> Result<(), Failure> {
    let t: VertexType = args.vertex_type.parse()?;
    if !t.is_admissible() {
        return Err(Failure::Usage(format!(
            "{t} violates the planar angle bound"
        )));
    }
    if args.all_roots {
        for s in solve_vertex_system(&t) {
            let angles: Vec<String> = s
                .angles
                .iter()
                .map(|(m, &a)| format!("α{m} = {}", over_pi(a)))
                .collect();
            println!(
                "{}, cos x = {:.15} [{}{}]",
                angles.join(", "),
                s.cos_edge,
                if s.is_geometric() {
                    "geometric"
                } else {
                    "non-geometric"
                },
                if s.monotone { ", ordered" } else { "" },
            );
        }
        return Ok(());
    }
    let all = admissible_assignments(&t);
    if all.is_empty() {
        println!("{t}: no admissible angles");
    }
    for a in all {
        let angles: Vec<String> = a
            .iter()
            .map(|(m, x)| format!("α{m} = {}", over_pi(x)))
            .collect();
        println!("{}, x = {:.15}", angles.join(", "), a.edge());
    }
    Ok(())
}

fn export(args: ExportArgs) -> Result<(), Failure> {
    let t = catalog::make(&args.name)?;
    let e = embedder::embed(&t.map, &t.assignment)?;
    let text = match args.format {
        Format::Obj => embedder::export_obj(&t.map, &e, args.arc_steps, true),
        Format::Json => embedder::export_json(&t.name, &t.map, &t.assignment, Some(&e))? + "\n",
    };
    fs::write(&args.out, text).map_err(io)?;
    println!("wrote {}", args.out.display());
    Ok(())
}

/// `"2"`, `"2o"` or `"1n"`: a count with an optional relation.
fn count(s: &str) -> Result<(usize, Option<Relation>), Failure> {
    let s = s.trim();
    let (digits, rel) = match s.char_indices().find(|(_, c)| !c.is_ascii_digit()) {
        Some((i, _)) => (&s[..i], Some(s[i..].parse::<Relation>()?)),
        None => (s, None),
    };
    let n = digits
        .parse()
        .map_err(|_| Failure::Usage(format!("bad cupola count {s:?}")))?;
    Ok((n, rel))
}

fn derive(args: DeriveArgs) -> Result<(), Failure> {
    if args.base != "eD" {
        return Err(Failure::Usage(format!(
            "only eD has pentagonal cupolas to derive from, not {}",
            args.base
        )));
    }
    let (dim, r1) = count(&args.dim)?;
    let (rot, r2) = count(&args.rot)?;
    let relation = match (r1, r2) {
        (Some(a), Some(b)) if a != b => {
            return Err(Failure::Usage("conflicting cupola relations".into()))
        }
        (a, b) => a.or(b),
    };
    let recipe = Recipe::new(dim, rot, relation)?;
    let t = catalog::derive_from_ed(&recipe)?;
    println!("{} ({recipe})", t.name);
    println!("{}", t.census());
    if !t.census_matches() {
        return Err(Failure::Verification(format!(
            "{} counts differ from the catalog",
            t.name
        )));
    }
    Ok(())
}

fn main() -> ExitCode {
    let cli = Cli::parse();
    let result = match cli.command {
        Command::Catalog(c) => catalog_cmd(c),
        Command::Verify(a) => verify(a),
        Command::Enumerate(a) => enumerate(a),
        Command::Solve(a) => solve(a),
        Command::Export(a) => export(a),
        Command::Derive(a) => derive(a),
    };
    match result {
        Ok(()) => ExitCode::SUCCESS,
        Err(Failure::Verification(msg)) => {
            eprintln!("error: {msg}");
            ExitCode::from(1)
        }
        Err(Failure::Usage(msg)) => {
            eprintln!("error: {msg}");
            ExitCode::from(2)
        }
    }
}
