//! Command-line runner for the orbit-space verification suites.
//!
//! Suite records are written to stdout as JSON lines (schema documented in
//! the library and the README); human-readable progress goes to stderr.
//! With a fixed seed the stdout stream and any `--out` file are
//! byte-identical across runs; `--timings` opts into real wall times and
//! gives that up.
//!
//! Exit codes: 0 when every gating suite passes, 1 on suite failure or a
//! runtime error, 2 on bad usage.

use anyhow::{Context, Result};
use clap::{Args, Parser, Subcommand, ValueEnum};
use orbispace::harness::{
    algebra_suites_run, coverage_report, full_gating_run, hp2_fixed_points_suite, run_map_suites,
    CaseKind, MapCase, TestReport,
};
use orbispace::homology::{
    fig2_connected_sum_faces, homology, homology_polytope_check, build_g42_sponge,
    build_hp2_sponge, hp2_gkm_graph, hp2_skeleton_census, rp2, ChainComplex, StratumClass,
};
use orbispace::model_spaces::{
    chart_weights, enumerate_quoric, general_position_check, SymmetryReduction,
};
use orbispace::orbit_maps::{S3S3Chart, Sign};
use std::io::Write;
use std::path::PathBuf;
use std::process::ExitCode;

#[derive(Parser)]
#[command(name = "orbispace", version, about = "Orbit-space models and their verification suites")]
struct Cli {
    #[command(subcommand)]
    command: Command,
}

#[derive(Subcommand)]
enum Command {
    /// Run the verification suites for one target family
    Verify {
        #[arg(value_enum)]
        target: VerifyTarget,
        #[command(flatten)]
        run: RunArgs,
    },
    /// Enumerate combinatorial model spaces
    Enumerate {
        #[command(subcommand)]
        what: EnumerateWhat,
    },
    /// Integral homology of a preset or serialized chain complex
    #[command(group(clap::ArgGroup::new("source").required(true).args(["input", "preset"])))]
    Homology {
        /// Chain complex file (see the README for the text format)
        #[arg(long)]
        input: Option<PathBuf>,
        #[arg(long, value_enum)]
        preset: Option<HomologyPreset>,
    },
    /// Print a standard tangent-weight quadruple and its general-position
    /// check
    Weights {
        #[arg(long, value_enum)]
        chart: ChartArg,
    },
    /// Print an equivariant-skeleton census
    Census {
        #[arg(value_enum)]
        target: CensusTarget,
    },
    /// Run every gating suite and write the full report
    Report {
        /// Report file (JSON lines)
        #[arg(long)]
        out: PathBuf,
        #[command(flatten)]
        run: RunArgs,
        /// Also print non-gating coverage statistics to stdout
        #[arg(long)]
        coverage: bool,
    },
}

#[derive(Args)]
struct RunArgs {
    /// Samples per suite
    #[arg(long, default_value_t = 10_000)]
    samples: usize,
    /// Base PRNG seed
    #[arg(long, default_value_t = 42)]
    seed: u64,
    /// Override every suite tolerance (default: per-suite values)
    #[arg(long)]
    tol: Option<f64>,
    /// Record real wall times (breaks byte-reproducibility of reports)
    #[arg(long)]
    timings: bool,
}

#[derive(Clone, Copy, ValueEnum)]
enum VerifyTarget {
    Hp2,
    S6,
    Cp2,
    Octonion,
    QuoricFibers,
    Arnold,
}

#[derive(Subcommand)]
enum EnumerateWhat {
    /// Proper 3-colorings of an m-gon by the sphere subgroups
    Quoric {
        #[arg(long)]
        m: usize,
        #[arg(long, value_enum, default_value_t = SymmetryArg::Raw)]
        symmetry: SymmetryArg,
    },
}

#[derive(Clone, Copy, ValueEnum)]
enum SymmetryArg {
    Raw,
    Swap12,
    Full,
}

#[derive(Clone, Copy, ValueEnum)]
enum HomologyPreset {
    Hp2Sponge,
    G42Sponge,
    Rp2,
    Fig2,
}

#[derive(Clone, Copy, ValueEnum)]
#[value(rename_all = "verbatim")]
enum ChartArg {
    #[value(alias = "a")]
    A,
    #[value(alias = "b")]
    B,
}

#[derive(Clone, Copy, ValueEnum)]
enum CensusTarget {
    Hp2Skeleton,
}

fn main() -> ExitCode {
    let cli = Cli::parse();
    match run(cli) {
        Ok(all_pass) => {
            if all_pass {
                ExitCode::SUCCESS
            } else {
                ExitCode::from(1)
            }
        }
        Err(e) => {
            eprintln!("error: {e:#}");
            ExitCode::from(1)
        }
    }
}

fn run(cli: Cli) -> Result<bool> {
    match cli.command {
        Command::Verify { target, run } => {
            let reports = verify_target(target, &run);
            emit_reports(&reports, run.timings, None)?;
            Ok(reports.iter().all(|r| r.pass))
        }
        Command::Report { out, run, coverage } => {
            let reports = full_gating_run(run.samples, run.seed, run.tol);
            emit_reports(&reports, run.timings, Some(&out))?;
            if coverage {
                let n = run.samples.min(2_000);
                for case in MapCase::all() {
                    let c = coverage_report(&case, n, run.seed);
                    println!("{}", c.to_json_line());
                }
            }
            Ok(reports.iter().all(|r| r.pass))
        }
        Command::Enumerate { what } => {
            let EnumerateWhat::Quoric { m, symmetry } = what;
            let symmetry = match symmetry {
                SymmetryArg::Raw => SymmetryReduction::Raw,
                SymmetryArg::Swap12 => SymmetryReduction::Swap12,
                SymmetryArg::Full => SymmetryReduction::DihedralSwap12,
            };
            let list = enumerate_quoric(m, symmetry)?;
            for qf in &list {
                println!("{qf}");
            }
            println!("{} colorings", list.len());
            Ok(true)
        }
        Command::Homology { input, preset } => {
            if let Some(path) = input {
                let text = std::fs::read_to_string(&path)
                    .with_context(|| format!("reading {}", path.display()))?;
                let complex = ChainComplex::from_text(&text)?;
                print!("{}", homology(&complex)?);
            } else if let Some(preset) = preset {
                print_preset(preset)?;
            }
            Ok(true)
        }
        Command::Weights { chart } => {
            let chart = match chart {
                ChartArg::A => S3S3Chart::A,
                ChartArg::B => S3S3Chart::B,
            };
            let ws = chart_weights(chart);
            println!("chart {chart:?}");
            for w in &ws.weights {
                println!("  ({}, {}, {})", w[0], w[1], w[2]);
            }
            let gp = general_position_check(&ws);
            println!("general position: {gp}");
            Ok(gp)
        }
        Command::Census { target: CensusTarget::Hp2Skeleton } => {
            print_census();
            Ok(true)
        }
    }
}

fn verify_target(target: VerifyTarget, run: &RunArgs) -> Vec<TestReport> {
    let kinds: Vec<CaseKind> = match target {
        VerifyTarget::Hp2 => vec![CaseKind::Hp2T3, CaseKind::Hp2Right],
        VerifyTarget::S6 => vec![CaseKind::S6T2, CaseKind::S6Sigma],
        VerifyTarget::Cp2 => vec![CaseKind::Cp2],
        VerifyTarget::Octonion => return algebra_suites_run(run.samples, run.seed),
        VerifyTarget::QuoricFibers => vec![
            CaseKind::Biaxial(Sign::Plus, Sign::Plus),
            CaseKind::Biaxial(Sign::Plus, Sign::Minus),
            CaseKind::Biaxial(Sign::Minus, Sign::Plus),
            CaseKind::Biaxial(Sign::Minus, Sign::Minus),
            CaseKind::S3S3(S3S3Chart::A),
            CaseKind::S3S3(S3S3Chart::B),
        ],
        VerifyTarget::Arnold => vec![CaseKind::ConjCircle, CaseKind::DiagCircle],
    };
    let mut reports = Vec::new();
    if matches!(target, VerifyTarget::Hp2) {
        reports.push(hp2_fixed_points_suite());
    }
    for kind in kinds {
        reports.extend(run_map_suites(&MapCase::new(kind), run.samples, run.seed, run.tol));
    }
    reports
}

fn emit_reports(
    reports: &[TestReport],
    timings: bool,
    out: Option<&PathBuf>,
) -> Result<()> {
    let document = orbispace::harness::report_document(reports, timings);
    print!("{document}");
    if let Some(path) = out {
        std::fs::File::create(path)
            .and_then(|mut f| f.write_all(document.as_bytes()))
            .with_context(|| format!("writing {}", path.display()))?;
    }
    for r in reports {
        eprintln!(
            "{} {}/{} [{}]: max_residual={:.3e}{}",
            if r.pass { "PASS" } else { "FAIL" },
            r.map,
            r.group,
            r.suite,
            r.max_residual,
            r.min_separation
                .map(|m| format!(" min_separation={m:.3e}"))
                .unwrap_or_default(),
        );
    }
    Ok(())
}

fn print_preset(preset: HomologyPreset) -> Result<()> {
    match preset {
        HomologyPreset::Rp2 => print!("{}", homology(&rp2())?),
        HomologyPreset::Hp2Sponge => {
            let c = build_hp2_sponge();
            println!("# cells per dimension: {:?}", c.cell_counts());
            print!("{}", homology(&c)?);
        }
        HomologyPreset::G42Sponge => {
            let c = build_g42_sponge();
            println!("# cells per dimension: {:?}", c.cell_counts());
            print!("{}", homology(&c)?);
        }
        HomologyPreset::Fig2 => {
            let fc = fig2_connected_sum_faces();
            let check = homology_polytope_check(&fc)?;
            for face in fc.faces() {
                let h = homology(&face.complex)?;
                let verdict = if h.is_reduced_trivial() { "acyclic" } else { "NOT acyclic" };
                println!("face {} (dim {}): {}", face.name, face.dim, verdict);
            }
            println!(
                "homology polytope: {} ({} failing face{})",
                check.is_homology_polytope,
                check.failures.len(),
                if check.failures.len() == 1 { "" } else { "s" }
            );
            for f in &check.failures {
                print!("{}: {}", f.face, f.homology);
            }
        }
    }
    Ok(())
}

fn print_census() {
    let census = hp2_skeleton_census();
    let (m, n, s, v) = census.counts();
    println!("quaternionic lines: {m}");
    println!("complex planes:     {n}");
    println!("invariant spheres:  {s}");
    println!("fixed points:       {v}");
    for stratum in census.of_class(StratumClass::Sphere) {
        let lines = census.containers(stratum, StratumClass::QuaternionicLine);
        let planes = census.containers(stratum, StratumClass::ComplexPlane);
        println!(
            "{}: in line {} and planes {}",
            stratum.name,
            lines.join(", "),
            planes.join(", ")
        );
    }
    for stratum in census.of_class(StratumClass::FixedPoint) {
        let lines = census.containers(stratum, StratumClass::QuaternionicLine);
        let planes = census.containers(stratum, StratumClass::ComplexPlane);
        println!(
            "{}: in {} lines, {} planes",
            stratum.name,
            lines.len(),
            planes.len()
        );
    }
    let g = hp2_gkm_graph();
    let degrees: Vec<usize> = (0..g.vertices).map(|v| g.degree(v)).collect();
    println!(
        "orbit graph: {} vertices, {} edges, degrees {:?}",
        g.vertices,
        g.edges.len(),
        degrees
    );
}
