//! `perimax`: perimeter bounds for simple polygons in a convex body.

mod failure;
mod render;

use std::path::{Path, PathBuf};
use std::process::ExitCode;
use std::sync::Mutex;

use clap::{Args, Parser, Subcommand};
use serde_json::Value;

use perimax_core::certificate::{certify, sweeps::run_sweeps};
use perimax_core::io::{self, format_g17};
use perimax_core::search_harness::{near_extremal_even, near_extremal_odd, verify_no_counterexample_with, CampaignOptions};
use perimax_core::triangle_bound::{SolverRegistry, SolverSettings, Witness};
use perimax_core::{ConvexBody, Error};

use failure::{Failure, Status};

type CliResult<T = ()> = Result<T, Failure>;

#[derive(Parser)]
#[command(name = "perimax", version, about = "Perimeter bounds for simple polygons in a convex body")]
struct Cli {
    #[command(subcommand)]
    command: Command,
}

#[derive(Subcommand)]
enum Command {
    /// Largest perimeter of a simple n-gon in the body.
    Bound(BoundArgs),
    /// Inscribed triangle that dominates a given polygon.
    Certify(CertifyArgs),
    /// Hill-climbing campaign looking for polygons above the bound.
    Search(SearchArgs),
    /// Simple n-gon whose perimeter comes close to the bound.
    Construct(ConstructArgs),
    /// Randomized sweeps of the inequalities behind the bound.
    CheckPaper(CheckArgs),
    /// Draw the body, a polygon and a triangle as SVG.
    Render(RenderArgs),
}

#[derive(Args)]
struct BoundArgs {
    #[arg(long)]
    body: PathBuf,
    #[arg(long)]
    n: usize,
    /// Grid resolution of the search (default depends on the solver).
    #[arg(long)]
    grid: Option<usize>,
    /// Solver name, or `auto`.
    #[arg(long, default_value = "auto")]
    solver: String,
    #[arg(long, conflicts_with = "plain")]
    json: bool,
    #[arg(long)]
    plain: bool,
}

#[derive(Args)]
struct CertifyArgs {
    #[arg(long)]
    body: PathBuf,
    #[arg(long)]
    polygon: PathBuf,
    #[arg(long)]
    json: bool,
}

#[derive(Args)]
struct SearchArgs {
    #[arg(long)]
    body: PathBuf,
    #[arg(long)]
    n: usize,
    #[arg(long, default_value_t = 32)]
    trials: usize,
    #[arg(long, default_value_t = 100_000)]
    steps: usize,
    #[arg(long, default_value_t = 0)]
    seed: u64,
    #[arg(long)]
    json: bool,
}

#[derive(Args)]
struct ConstructArgs {
    #[arg(long)]
    body: PathBuf,
    #[arg(long)]
    n: usize,
    #[arg(long, default_value_t = 1e-4)]
    eps: f64,
    #[arg(long)]
    json: bool,
}

#[derive(Args)]
struct CheckArgs {
    #[arg(long, default_value_t = 100_000)]
    samples: usize,
    #[arg(long, default_value_t = 1)]
    seed: u64,
    #[arg(long)]
    json: bool,
}

#[derive(Args)]
struct RenderArgs {
    #[arg(long)]
    body: PathBuf,
    #[arg(long)]
    polygon: Option<PathBuf>,
    /// Polygon file with three vertices, or `bound`/`certify` JSON output.
    #[arg(long)]
    triangle: Option<PathBuf>,
    #[arg(short = 'o', long = "output")]
    output: PathBuf,
}

fn main() -> ExitCode {
    let cli = Cli::parse();
    let result = match cli.command {
        Command::Bound(a) => bound(a),
        Command::Certify(a) => certify_cmd(a),
        Command::Search(a) => search(a),
        Command::Construct(a) => construct(a),
        Command::CheckPaper(a) => check(a),
        Command::Render(a) => render_cmd(a),
    };
    match result {
        Ok(()) => ExitCode::SUCCESS,
        Err(f) => {
            eprintln!("error: {f}");
            f.code()
        }
    }
}

fn read(path: &Path) -> CliResult<String> {
    std::fs::read_to_string(path).map_err(|e| Failure::usage(format!("cannot read {}: {e}", path.display())))
}

fn load_body(path: &Path) -> CliResult<ConvexBody> {
    io::parse_body(&read(path)?).map_err(|e| Failure::usage(format!("{}: {e}", path.display())))
}

fn emit(v: &Value) {
    println!("{}", io::to_json_string(v));
}

fn g(v: f64) -> String {
    format_g17(v)
}

fn threads() -> CliResult<Option<usize>> {
    match std::env::var("PERIMAX_THREADS") {
        Err(_) => Ok(None),
        Ok(s) => match s.trim().parse::<usize>() {
            Ok(t) if t >= 1 => Ok(Some(t)),
            _ => Err(Failure::usage(format!("PERIMAX_THREADS must be a positive integer, got '{s}'"))),
        },
    }
}

fn bound(a: BoundArgs) -> CliResult {
    let body = load_body(&a.body)?;
    if a.n < 3 {
        return Err(Failure::usage(format!("n must be at least 3 (got {})", a.n)));
    }
    let settings = SolverSettings { grid: a.grid, ..SolverSettings::default() };
    let r = SolverRegistry::with_builtin()
        .solve(&a.solver, &body, a.n, &settings)
        .map_err(|e| Failure::usage(e.to_string()))?;
    if a.json {
        emit(&io::bound_value(&r, body.metric()));
        return Ok(());
    }
    println!("bound {}", g(r.value));
    println!("n {}  solver {}", r.n, r.solver);
    match &r.witness {
        Witness::Triangle(t) => {
            for p in t.vertices() {
                let c = p.chart();
                println!("vertex {} {}", g(c[0]), g(c[1]));
            }
            let [x, y, z] = t.sides();
            println!("sides {} {} {}", g(x), g(y), g(z));
        }
        Witness::Diameter(pair) => {
            println!("even-n diameter bound: n * diam, diam {}", g(r.value / r.n as f64));
            for p in pair {
                let c = p.chart();
                println!("endpoint {} {}", g(c[0]), g(c[1]));
            }
        }
    }
    let d = &r.diagnostics;
    println!(
        "grid {}  candidates {}  refine rounds {}  param tolerance {}  evaluations {}",
        d.grid,
        d.candidates,
        d.refine_rounds,
        g(d.param_tolerance),
        d.evaluations
    );
    Ok(())
}

fn certify_cmd(a: CertifyArgs) -> CliResult {
    let body = load_body(&a.body)?;
    let polygon = io::parse_polygon(&read(&a.polygon)?).map_err(|e| Failure::usage(format!("{}: {e}", a.polygon.display())))?;
    let c = certify(&polygon, &body)?;
    if a.json {
        emit(&io::certificate_value(&c, body.metric()));
        return Ok(());
    }
    println!("perimeter {}", g(c.perimeter));
    println!("bound {}", g(c.bound));
    println!("slack {}", g(c.slack));
    println!("case {}  triple {}", c.trace.case.as_str(), c.trace.triple.map(|l| l.as_str()).join(""));
    for p in c.triangle.vertices() {
        let x = p.chart();
        println!("vertex {} {}", g(x[0]), g(x[1]));
    }
    Ok(())
}

fn search(a: SearchArgs) -> CliResult {
    let body = load_body(&a.body)?;
    let best = Mutex::new(f64::NEG_INFINITY);
    let progress = |i: usize, perimeter: f64| {
        let mut b = best.lock().unwrap_or_else(|e| e.into_inner());
        *b = b.max(perimeter);
        eprintln!("restart={i} best={}", g(*b));
    };
    let opts = CampaignOptions { threads: threads()?, progress: Some(&progress), ..CampaignOptions::default() };
    let report = verify_no_counterexample_with(&body, a.n, a.trials, a.steps, a.seed, &opts).map_err(|e| match e {
        Error::Counterexample { .. } | Error::CertificateSearchFailed { .. } => Failure::new(Status::Violation, e.to_string()),
        e => Failure::input(e),
    })?;
    if a.json {
        emit(&io::report_value(&report));
        return Ok(());
    }
    println!("bound {}  ({})", g(report.bound), report.solver);
    match report.best_perimeter() {
        Some(p) => println!("best perimeter {}  gap {}", g(p), g(report.bound - p)),
        None => println!("no restarts"),
    }
    println!("certified {}/{}", report.certified, report.trials);
    println!("pass");
    Ok(())
}

fn construct(a: ConstructArgs) -> CliResult {
    let body = load_body(&a.body)?;
    if !(a.eps > 0.0 && a.eps.is_finite()) {
        return Err(Failure::usage("eps must be positive"));
    }
    let p = if a.n % 2 == 1 { near_extremal_odd(&body, a.n, a.eps) } else { near_extremal_even(&body, a.n, a.eps) }
        .map_err(|e| match e {
            Error::InvalidN(_) => Failure::usage(e.to_string()),
            e => Failure::input(e),
        })?;
    let target = perimax_core::triangle_bound::compute_bound(&body, a.n, &SolverSettings::default())?.value;
    let mut v = io::polygon_value(&p);
    if let Value::Object(m) = &mut v {
        m.insert("n".into(), a.n.into());
        m.insert("eps".into(), a.eps.into());
        m.insert("perimeter".into(), p.perimeter().into());
        m.insert("bound".into(), target.into());
    }
    if a.json {
        emit(&v);
    } else {
        println!("perimeter {}  bound {}  gap {}", g(p.perimeter()), g(target), g(target - p.perimeter()));
        for q in p.vertices() {
            let c = q.chart();
            println!("vertex {} {}", g(c[0]), g(c[1]));
        }
    }
    Ok(())
}

fn check(a: CheckArgs) -> CliResult {
    if a.samples == 0 {
        return Err(Failure::usage("samples must be at least 1"));
    }
    let sweeps = run_sweeps(a.samples, a.seed);
    if a.json {
        emit(&io::sweeps_value(a.samples, a.seed, &sweeps));
    }
    let out: &dyn Fn(String) = if a.json { &|s| eprintln!("{s}") } else { &|s| println!("{s}") };
    for s in &sweeps {
        out(format!(
            "{:<24} samples {:>7}  min margin {}  {}",
            s.name,
            s.samples,
            g(s.min_margin),
            if s.passed() { "ok" } else { "FAILED" }
        ));
    }
    match sweeps.iter().find(|s| !s.passed()) {
        None => Ok(()),
        Some(s) => {
            let args: Vec<String> = s.worst.iter().map(|&x| g(x)).collect();
            Err(Failure::new(
                Status::Violation,
                format!("{}: {} failures, worst sample [{}]", s.name, s.failures, args.join(", ")),
            ))
        }
    }
}

fn render_cmd(a: RenderArgs) -> CliResult {
    let body = load_body(&a.body)?;
    let polygon = match &a.polygon {
        Some(path) => Some(io::parse_polygon(&read(path)?).map_err(|e| Failure::usage(format!("{}: {e}", path.display())))?),
        None => None,
    };
    let triangle = match &a.triangle {
        Some(path) => {
            Some(io::parse_triangle(&read(path)?, body.metric()).map_err(|e| Failure::usage(format!("{}: {e}", path.display())))?)
        }
        None => None,
    };
    let metric_ok = polygon.as_ref().is_none_or(|p| p.metric() == body.metric())
        && triangle.is_none_or(|t| t.iter().all(|p| p.metric() == body.metric()));
    if !metric_ok {
        return Err(Failure::new(Status::Invalid, "metric mismatch between body and figures"));
    }
    let svg = render::svg(&body, polygon.as_ref().map(|p| p.vertices()), triangle.as_ref());
    std::fs::write(&a.output, svg).map_err(|e| Failure::usage(format!("cannot write {}: {e}", a.output.display())))
}
