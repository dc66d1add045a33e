//! Command-line analyzer for approximation numbers of polynomial maps.

mod corpus;
mod jsonreport;
mod mapfile;

use std::io::Write;
use std::path::PathBuf;
use std::process::ExitCode;

use clap::{Parser, Subcommand, ValueEnum};

use appnum_core::analysis::{analyze, RouteChoice};
use appnum_core::{Budget, Config};

#[derive(Parser)]
#[command(
    name = "appnum",
    version,
    about = "Approximation numbers, openness and fibre bounds of polynomial maps"
)]
struct Cli {
    #[command(subcommand)]
    command: Command,
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, ValueEnum)]
enum RouteArg {
    Direct,
    Formula,
    Both,
}

#[derive(Parser, Debug)]
struct Tuning {
    /// Seed for all randomized subroutines.
    #[arg(long)]
    seed: Option<u64>,
    /// Reduction-step budget for the Groebner engine.
    #[arg(long)]
    budget: Option<u64>,
    /// Coefficient bound B for random affine slices.
    #[arg(long)]
    slice_bound: Option<i64>,
    /// Independent repetitions per jump-locus query.
    #[arg(long)]
    slice_reps: Option<u32>,
}

#[derive(Subcommand)]
enum Command {
    /// Analyze a map file and emit a JSON report.
    Analyze {
        path: PathBuf,
        #[command(flatten)]
        tuning: Tuning,
        /// Which app route(s) to compute.
        #[arg(long, value_enum, default_value_t = RouteArg::Both)]
        route: RouteArg,
        /// Write the JSON report here instead of stdout.
        #[arg(long)]
        out: Option<PathBuf>,
        /// Print a human-readable summary to stderr.
        #[arg(long)]
        verbose: bool,
    },
    /// Run the built-in example corpus against its expected values.
    Corpus {
        /// Run only the named entry.
        #[arg(long)]
        only: Option<String>,
        /// Load expectations from a JSON file instead of the built-ins.
        #[arg(long)]
        expect: Option<PathBuf>,
        #[command(flatten)]
        tuning: Tuning,
    },
}

fn env_u64(name: &str) -> Option<u64> {
    std::env::var(name).ok().and_then(|v| v.parse().ok())
}

fn env_i64(name: &str) -> Option<i64> {
    std::env::var(name).ok().and_then(|v| v.parse().ok())
}

/// Defaults, overridden by environment, then map-file options, then flags.
fn resolve_config(tuning: &Tuning, file: &mapfile::FileOptions) -> Config {
    let seed = tuning
        .seed
        .or(file.seed)
        .or_else(|| env_u64("APPNUM_SEED"))
        .unwrap_or(0);
    let budget = tuning
        .budget
        .or(file.budget)
        .or_else(|| env_u64("APPNUM_BUDGET"))
        .unwrap_or(appnum_core::config::DEFAULT_BUDGET);
    let slice_bound = tuning
        .slice_bound
        .or(file.slice_bound)
        .or_else(|| env_i64("APPNUM_SLICE_BOUND"))
        .unwrap_or(appnum_core::config::DEFAULT_SLICE_BOUND);
    let slice_reps = tuning
        .slice_reps
        .or(file.slice_reps)
        .or_else(|| env_u64("APPNUM_SLICE_REPS").map(|v| v as u32))
        .unwrap_or(appnum_core::config::DEFAULT_SLICE_REPS);
    Config {
        seed,
        budget: Budget::new(budget),
        slice_bound,
        slice_reps,
    }
}

fn cmd_analyze(
    path: &PathBuf,
    tuning: &Tuning,
    route: RouteArg,
    out: Option<&PathBuf>,
    verbose: bool,
) -> Result<u8, String> {
    let text = std::fs::read_to_string(path)
        .map_err(|e| format!("cannot read {}: {}", path.display(), e))?;
    let mf = mapfile::parse_map_file(&text).map_err(|e| e.to_string())?;
    let cfg = resolve_config(tuning, &mf.options);
    let route_choice = match route {
        RouteArg::Direct => RouteChoice::Direct,
        RouteArg::Formula => RouteChoice::Formula,
        RouteArg::Both => RouteChoice::Both,
    };
    let analysis = analyze(&mf.map, &cfg, route_choice).map_err(|e| e.to_string())?;

    let route_name = match route {
        RouteArg::Direct => "direct",
        RouteArg::Formula => "formula",
        RouteArg::Both => "both",
    };
    let report = jsonreport::build_report(
        &path.display().to_string(),
        &mf.map,
        &cfg,
        route_name,
        &analysis,
    );
    let json = serde_json::to_string_pretty(&report).expect("serializable report");
    match out {
        Some(p) => std::fs::write(p, json.as_bytes())
            .map_err(|e| format!("cannot write {}: {}", p.display(), e))?,
        None => {
            println!("{}", json);
        }
    }

    if verbose {
        let mut err = std::io::stderr().lock();
        let _ = writeln!(err, "map: {}", path.display());
        if let Some(v) = analysis.app_direct_value() {
            let _ = writeln!(err, "app (direct route): {}", v);
        }
        if let Some(v) = analysis.app_formula_value() {
            let _ = writeln!(err, "app (formula route): {}", v);
        }
        let _ = writeln!(err, "openness: {}", analysis.openness.as_str());
        if let Some((cv, dim)) = &analysis.critical_values {
            let _ = writeln!(err, "critical values: {} (dimension {})", cv, dim);
        }
        if let Some(f) = &analysis.fibre_count {
            let _ = writeln!(
                err,
                "generic fibre count: {} (lower bound: {})",
                f.generic_count,
                f.bound.map(|b| b.to_string()).unwrap_or("not-applicable".into())
            );
        }
        for c in &analysis.caveats {
            let _ = writeln!(err, "caveat: {}", c.as_str());
        }
        if let Some(d) = &analysis.discrepancy {
            let _ = writeln!(err, "DISCREPANCY: {}", d);
        }
    }

    if analysis.discrepancy.is_some() {
        return Ok(2);
    }
    Ok(if analysis.has_caveats() { 1 } else { 0 })
}

fn cmd_corpus(
    only: Option<&str>,
    expect_path: Option<&PathBuf>,
    tuning: &Tuning,
) -> Result<u8, String> {
    let expectations: Vec<corpus::Expectation> = match expect_path {
        None => corpus::default_expectations(),
        Some(p) => {
            let text = std::fs::read_to_string(p)
                .map_err(|e| format!("cannot read {}: {}", p.display(), e))?;
            serde_json::from_str(&text).map_err(|e| format!("bad expectation file: {}", e))?
        }
    };
    let seed = tuning.seed.or_else(|| env_u64("APPNUM_SEED")).unwrap_or(0);
    let mut all_pass = true;
    let mut ran_any = false;
    for entry in corpus::ENTRIES {
        if let Some(filter) = only {
            if entry.name != filter {
                continue;
            }
        }
        let expectation = match expectations.iter().find(|e| e.name == entry.name) {
            Some(e) => e.clone(),
            None => continue,
        };
        ran_any = true;
        let started = std::time::Instant::now();
        match corpus::run_entry(entry, &expectation, seed) {
            Ok(outcome) if outcome.passed() => {
                println!("PASS {} ({:.1}s)", outcome.name, started.elapsed().as_secs_f64());
            }
            Ok(outcome) => {
                all_pass = false;
                println!("FAIL {}", outcome.name);
                for m in &outcome.mismatches {
                    println!("  {}", m);
                }
            }
            Err(e) => {
                all_pass = false;
                println!("FAIL {} (error: {})", entry.name, e);
            }
        }
    }
    if !ran_any {
        return Err(match only {
            Some(f) => format!("no corpus entry named `{}`", f),
            None => "no corpus entries matched".into(),
        });
    }
    Ok(if all_pass { 0 } else { 1 })
}

fn main() -> ExitCode {
    let cli = Cli::parse();
    let result = match &cli.command {
        Command::Analyze {
            path,
            tuning,
            route,
            out,
            verbose,
        } => cmd_analyze(path, tuning, *route, out.as_ref(), *verbose),
        Command::Corpus {
            only,
            expect,
            tuning,
        } => cmd_corpus(only.as_deref(), expect.as_ref(), tuning),
    };
    match result {
        Ok(code) => ExitCode::from(code),
        Err(msg) => {
            eprintln!("error: {}", msg);
            ExitCode::from(2)
        }
    }
}
