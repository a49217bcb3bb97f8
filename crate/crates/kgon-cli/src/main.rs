//! `kgon` — exact maximum-area inscribed k-gons, the rotating-pointer
//! quadrilateral heuristic, stability checks, fuzzing and SVG figures.
//!
//! Machine-readable JSON goes to stdout, human-readable summaries to stderr.
//! Exit codes: 0 success, 1 domain errors, 2 usage errors; `repro` exits 0
//! iff the heuristic failure is confirmed for at least one variant.

use std::fs;
use std::path::PathBuf;
use std::process::ExitCode;

use anyhow::Context;
use clap::{Parser, Subcommand, ValueEnum};
use serde::Serialize;

use kgon::{
    brute_force, canonicalize, dp_kgon, ds_all_roots, ds_run, enumerate_stable, fuzz_campaign,
    is_stable, stable_count, sweep_quad, verify_counterexample_with, DsVariant, Error, FuzzConfig,
    Strictness,
};
use kgon_cli::polyfile::{parse_polygon, ParsedPolygon};
use kgon_cli::report::{
    DsReport, DsRunSummary, PolygonEcho, RenderReport, SolveReport, StabilityEnumReport,
    StabilityTupleReport,
};
use kgon_cli::svg::render_svg;

#[derive(Parser)]
#[command(name = "kgon", version, about)]
struct Cli {
    #[command(subcommand)]
    command: Command,
}

#[derive(Copy, Clone, ValueEnum)]
enum AlgoArg {
    /// Exhaustive enumeration (the reference oracle)
    Brute,
    /// O(n²) diagonal sweep, k = 4 only
    Sweep,
    /// Rooted fan-decomposition dynamic program, any k
    Dp,
}

#[derive(Copy, Clone, ValueEnum)]
enum VariantArg {
    Literal,
    Prose,
}

impl From<VariantArg> for DsVariant {
    fn from(v: VariantArg) -> Self {
        match v {
            VariantArg::Literal => DsVariant::Literal,
            VariantArg::Prose => DsVariant::Prose,
        }
    }
}

#[derive(Subcommand)]
enum Command {
    /// Compute the exact maximum-area inscribed k-gon
    Solve {
        #[arg(long)]
        k: usize,
        #[arg(long, value_enum)]
        algo: AlgoArg,
        file: PathBuf,
    },
    /// Run the quadrilateral heuristic and report its trace
    Ds {
        #[arg(long, value_enum)]
        variant: VariantArg,
        /// Run from a single root (default: all roots)
        #[arg(long, conflicts_with = "all_roots")]
        root: Option<usize>,
        #[arg(long)]
        all_roots: bool,
        /// Include the full step trace in the report
        #[arg(long)]
        trace: bool,
        file: PathBuf,
    },
    /// Check vertex stability; with --indices test one tuple, otherwise
    /// enumerate all k-stable k-gons
    Stability {
        #[arg(long)]
        k: usize,
        #[arg(long, value_delimiter = ',')]
        indices: Option<Vec<usize>>,
        /// Require strict area decrease instead of no increase
        #[arg(long)]
        strict: bool,
        file: PathBuf,
    },
    /// Compare the heuristic against the exact optimum on random polygons
    Fuzz {
        #[arg(long, default_value_t = 5)]
        n_min: usize,
        #[arg(long, default_value_t = 12)]
        n_max: usize,
        #[arg(long, default_value_t = 100)]
        trials: usize,
        #[arg(long, default_value_t = 0)]
        seed: u64,
        #[arg(long, default_value_t = 1_000_000)]
        bound: i64,
        /// Restrict to one variant (default: both)
        #[arg(long, value_enum)]
        variant: Option<VariantArg>,
    },
    /// Verify the embedded 16-vertex counterexample
    Repro {
        /// Restrict to one variant (default: both)
        #[arg(long, value_enum)]
        variant: Option<VariantArg>,
    },
    /// Render a polygon and inscribed overlays to an SVG file
    Render {
        file: PathBuf,
        /// Comma-separated vertex indices; repeat for multiple overlays
        #[arg(long = "overlay")]
        overlays: Vec<String>,
        #[arg(long)]
        out: PathBuf,
    },
}

fn main() -> ExitCode {
    if let Ok(threads) = std::env::var("KGON_THREADS") {
        match threads.parse::<usize>() {
            Ok(t) if t >= 1 => {
                let _ = rayon::ThreadPoolBuilder::new().num_threads(t).build_global();
            }
            _ => {
                eprintln!("error: KGON_THREADS must be a positive integer, got {threads:?}");
                return ExitCode::from(2);
            }
        }
    }
    let cli = Cli::parse();
    match run(cli.command) {
        Ok(code) => code,
        Err(err) => {
            eprintln!("error: {err:#}");
            ExitCode::FAILURE
        }
    }
}

fn load(file: &PathBuf) -> anyhow::Result<ParsedPolygon> {
    let text = fs::read_to_string(file).with_context(|| format!("reading {}", file.display()))?;
    let parsed = parse_polygon(&text).with_context(|| format!("parsing {}", file.display()))?;
    if parsed.reversed {
        eprintln!("note: input was clockwise; vertices reversed to counter-clockwise");
    }
    Ok(parsed)
}

fn emit<T: Serialize>(report: &T) -> anyhow::Result<()> {
    println!("{}", serde_json::to_string_pretty(report)?);
    Ok(())
}

fn variants_from(arg: Option<VariantArg>) -> Vec<DsVariant> {
    match arg {
        Some(v) => vec![v.into()],
        None => DsVariant::ALL.to_vec(),
    }
}

fn run(command: Command) -> anyhow::Result<ExitCode> {
    match command {
        Command::Solve { k, algo, file } => {
            let parsed = load(&file)?;
            let (name, solution) = match algo {
                AlgoArg::Brute => ("brute", brute_force(&parsed.polygon, k)?),
                AlgoArg::Dp => ("dp", dp_kgon(&parsed.polygon, k)?),
                AlgoArg::Sweep => {
                    if k != 4 {
                        return Err(Error::InvalidK { k, min: 4, max: 4 })
                            .context("the sweep solver is specific to quadrilaterals");
                    }
                    ("sweep", sweep_quad(&parsed.polygon)?)
                }
            };
            eprintln!(
                "max {k}-gon by {name}: indices {} twice-area {}",
                solution.indices, solution.area
            );
            emit(&SolveReport {
                command: "solve",
                input: PolygonEcho::from(&parsed),
                algo: name,
                k,
                solution,
            })?;
            Ok(ExitCode::SUCCESS)
        }

        Command::Ds {
            variant,
            root,
            all_roots: _,
            trace,
            file,
        } => {
            let parsed = load(&file)?;
            let variant = DsVariant::from(variant);
            let (runs, overall_best) = match root {
                Some(root) => {
                    let run = ds_run(&parsed.polygon, root, variant)?;
                    eprintln!(
                        "{variant} run from root {root}: best {} twice-area {}",
                        run.best, run.best_area
                    );
                    (vec![DsRunSummary::new(run, trace)], None)
                }
                None => {
                    let (runs, best) = ds_all_roots(&parsed.polygon, variant)?;
                    eprintln!(
                        "{variant} best over {} roots: {} twice-area {}",
                        runs.len(),
                        best.indices,
                        best.area
                    );
                    (
                        runs.into_iter().map(|r| DsRunSummary::new(r, trace)).collect(),
                        Some(best),
                    )
                }
            };
            emit(&DsReport {
                command: "ds",
                input: PolygonEcho::from(&parsed),
                variant,
                runs,
                overall_best,
            })?;
            Ok(ExitCode::SUCCESS)
        }

        Command::Stability {
            k,
            indices,
            strict,
            file,
        } => {
            let parsed = load(&file)?;
            let strictness = if strict { Strictness::Strict } else { Strictness::Weak };
            match indices {
                Some(raw) => {
                    if raw.len() != k {
                        return Err(Error::InvalidK {
                            k,
                            min: raw.len(),
                            max: raw.len(),
                        })
                        .context("--k must match the number of --indices");
                    }
                    let tuple = canonicalize(&raw, parsed.polygon.len())?;
                    let per_position: Vec<bool> = (0..tuple.k())
                        .map(|p| is_stable(&parsed.polygon, &tuple, p, strictness))
                        .collect::<Result<_, _>>()?;
                    let count = stable_count(&parsed.polygon, &tuple, strictness)?;
                    eprintln!("{count}/{k} stable positions for {tuple}");
                    emit(&StabilityTupleReport {
                        command: "stability",
                        input: PolygonEcho::from(&parsed),
                        strictness,
                        area: tuple.area_on(&parsed.polygon),
                        indices: tuple,
                        per_position,
                        stable_count: count,
                        k_stable: count == k,
                    })?;
                }
                None => {
                    let stable = enumerate_stable(&parsed.polygon, k, strictness)?;
                    eprintln!("{} {k}-stable {k}-gons", stable.len());
                    emit(&StabilityEnumReport {
                        command: "stability",
                        input: PolygonEcho::from(&parsed),
                        strictness,
                        k,
                        count: stable.len(),
                        stable,
                    })?;
                }
            }
            Ok(ExitCode::SUCCESS)
        }

        Command::Fuzz {
            n_min,
            n_max,
            trials,
            seed,
            bound,
            variant,
        } => {
            let config = FuzzConfig {
                n_min,
                n_max,
                k: 4,
                trials,
                seed,
                bound,
                variants: variants_from(variant),
                injected: Vec::new(),
            };
            let report = fuzz_campaign(&config)?;
            eprintln!(
                "{}/{} trials completed, {} skipped, {} mismatches",
                report.summary.completed,
                report.summary.trials,
                report.summary.skipped,
                report.summary.mismatches
            );
            emit(&report)?;
            Ok(ExitCode::SUCCESS)
        }

        Command::Repro { variant } => {
            let report = verify_counterexample_with(&variants_from(variant))?;
            for verdict in &report.variants {
                eprintln!(
                    "{} variant: {} (best {} twice-area {} vs optimal {} twice-area {})",
                    verdict.variant,
                    if verdict.confirmed { "confirmed sub-optimal on every root" } else { "not confirmed" },
                    verdict.overall_best.indices,
                    verdict.overall_best.area,
                    report.optimal.indices,
                    report.optimal.area,
                );
            }
            let confirmed = report.confirmed_any;
            emit(&report)?;
            Ok(if confirmed { ExitCode::SUCCESS } else { ExitCode::FAILURE })
        }

        Command::Render { file, overlays, out } => {
            let parsed = load(&file)?;
            let n = parsed.polygon.len();
            let tuples: Vec<(kgon::IndexTuple, String)> = overlays
                .iter()
                .map(|raw| -> anyhow::Result<_> {
                    let indices: Vec<usize> = raw
                        .split(',')
                        .map(|t| t.trim().parse::<usize>())
                        .collect::<Result<_, _>>()
                        .with_context(|| format!("parsing overlay {raw:?}"))?;
                    let tuple = canonicalize(&indices, n)?;
                    let label = tuple.to_string();
                    Ok((tuple, label))
                })
                .collect::<Result<_, _>>()?;
            let doc = render_svg(&parsed.polygon, &tuples)?;
            fs::write(&out, doc).with_context(|| format!("writing {}", out.display()))?;
            eprintln!("wrote {}", out.display());
            emit(&RenderReport {
                command: "render",
                out: out.display().to_string(),
                overlays: tuples.into_iter().map(|(t, _)| t).collect(),
            })?;
            Ok(ExitCode::SUCCESS)
        }
    }
}
