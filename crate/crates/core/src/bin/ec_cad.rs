//! Command-line front end: build truth-invariant decompositions from
//! problem files and evaluate the growth-bound calculator.

use clap::{Args, Parser, Subcommand};
use eccad::bounds::{dominant_term, gb_degree_exponent, growth_table, DominantTerm, Flavor};
use eccad::ecprep::{self, EcSource, Strategy};
use eccad::engine::{build_cad, build_cad_from_designation, EngineError, Mode, RestrictionVariant, RunConfig};
use eccad::formula::parse_problem;
use eccad::projection::projection_to_json;
use eccad::realalg::fmt_rat;
use eccad::report::{cad_to_json, Report};
use std::process::ExitCode;
use std::time::Duration;

const EXIT_OK: u8 = 0;
const EXIT_NOT_WELL_ORIENTED: u8 = 2;
const EXIT_NON_PRIMITIVE: u8 = 3;
const EXIT_PARSE: u8 = 4;
const EXIT_USAGE: u8 = 5;

#[derive(Parser)]
#[command(name = "ec-cad", about = "Cylindrical algebraic decomposition with equational constraints", version)]
struct Cli {
    #[command(subcommand)]
    command: Command,
}

#[derive(Subcommand)]
enum Command {
    /// Build a truth-invariant CAD for a problem file.
    Build(BuildArgs),
    /// Print growth-table rows and dominant-term bounds.
    Bounds(BoundsArgs),
}

#[derive(Args)]
struct BuildArgs {
    /// Problem file: vars line, optional let lines, formula line.
    file: String,
    #[arg(long, default_value = "multi_ec")]
    mode: String,
    #[arg(long, default_value = "propagate")]
    ec_source: String,
    /// auto, exhaustive, or a comma-separated list of candidate ids from
    /// --list-candidates.
    #[arg(long, default_value = "auto")]
    designation: String,
    /// Lift every cell nontrivially (reproduces the unrestricted variant).
    #[arg(long)]
    no_cell_restriction: bool,
    /// Print the candidate pool with ids and exit.
    #[arg(long)]
    list_candidates: bool,
    /// Write the full decomposition as JSON.
    #[arg(long)]
    dump: Option<String>,
    /// Write the projection layers as JSON.
    #[arg(long)]
    dump_projection: Option<String>,
    #[arg(long)]
    stats: bool,
    /// Fail (exit 3) on a non-primitive designation instead of falling
    /// back to a run without it.
    #[arg(long)]
    strict: bool,
    /// Cap on exhaustive designation enumeration.
    #[arg(long, default_value_t = 256)]
    exhaustive_cap: usize,
    /// Admissibility rule variant (calibration aid).
    #[arg(long, default_value = "literal", hide = true)]
    restriction_variant: String,
}

#[derive(Args)]
struct BoundsArgs {
    #[arg(long)]
    n: usize,
    #[arg(long)]
    m: u64,
    #[arg(long)]
    d: u64,
    #[arg(long, default_value_t = 0)]
    l: usize,
    #[arg(long, default_value = "P_only")]
    flavor: String,
    /// Print the growth-table rows.
    #[arg(long)]
    table: bool,
}

fn main() -> ExitCode {
    let cli = Cli::parse();
    match cli.command {
        Command::Build(args) => run_build(args),
        Command::Bounds(args) => run_bounds(args),
    }
}

fn parse_mode(s: &str) -> Option<Mode> {
    match s {
        "sign_invariant" => Some(Mode::SignInvariant),
        "single_ec" => Some(Mode::SingleEc),
        "multi_ec" => Some(Mode::MultiEc),
        _ => None,
    }
}

fn parse_variant(s: &str) -> Option<RestrictionVariant> {
    match s {
        "literal" => Some(RestrictionVariant::Literal),
        "alternating" => Some(RestrictionVariant::Alternating),
        "gap_or_final" => Some(RestrictionVariant::GapOrFinal),
        _ => None,
    }
}

fn parse_source(s: &str) -> Option<EcSource> {
    match s {
        "explicit" => Some(EcSource::Explicit),
        "propagate" => Some(EcSource::Propagate),
        "groebner" => Some(EcSource::Groebner),
        _ => None,
    }
}

fn run_build(args: BuildArgs) -> ExitCode {
    let text = match std::fs::read_to_string(&args.file) {
        Ok(t) => t,
        Err(e) => {
            eprintln!("error: cannot read {}: {e}", args.file);
            return ExitCode::from(EXIT_USAGE);
        }
    };
    let problem = match parse_problem(&text) {
        Ok(p) => p,
        Err(e) => {
            eprintln!("parse error: {e}");
            return ExitCode::from(EXIT_PARSE);
        }
    };
    let Some(mode) = parse_mode(&args.mode) else {
        eprintln!("error: unknown mode '{}'", args.mode);
        return ExitCode::from(EXIT_USAGE);
    };
    let Some(ec_source) = parse_source(&args.ec_source) else {
        eprintln!("error: unknown ec-source '{}'", args.ec_source);
        return ExitCode::from(EXIT_USAGE);
    };
    let nvars = problem.order.len();

    if args.list_candidates {
        let out = match ecprep::designate(&problem.formula, nvars, ec_source, &Strategy::Auto) {
            Ok(o) => o,
            Err(e) => {
                eprintln!("error: {e}");
                return ExitCode::from(EXIT_NON_PRIMITIVE);
            }
        };
        for (id, cand) in out.pool.candidates.iter().enumerate() {
            println!(
                "{id}: level {} [{}] {}",
                cand.level,
                cand.provenance,
                cand.poly.to_text(&problem.order)
            );
        }
        return ExitCode::from(EXIT_OK);
    }

    if args.designation == "exhaustive" {
        return run_exhaustive(&args, &problem, mode, ec_source);
    }

    let strategy = if args.designation == "auto" {
        Strategy::Auto
    } else {
        // Comma-separated candidate ids against the pool.
        let out = match ecprep::designate(&problem.formula, nvars, ec_source, &Strategy::Auto) {
            Ok(o) => o,
            Err(e) => {
                eprintln!("error: {e}");
                return ExitCode::from(EXIT_NON_PRIMITIVE);
            }
        };
        let mut polys = Vec::new();
        for part in args.designation.split(',') {
            let id: usize = match part.trim().parse() {
                Ok(i) => i,
                Err(_) => {
                    eprintln!("error: bad candidate id '{part}'");
                    return ExitCode::from(EXIT_USAGE);
                }
            };
            match out.pool.candidates.get(id) {
                Some(c) => polys.push(c.poly.clone()),
                None => {
                    eprintln!("error: candidate id {id} out of range");
                    return ExitCode::from(EXIT_USAGE);
                }
            }
        }
        Strategy::Forced(polys)
    };

    let Some(variant) = parse_variant(&args.restriction_variant) else {
        eprintln!("error: unknown restriction variant '{}'", args.restriction_variant);
        return ExitCode::from(EXIT_USAGE);
    };
    let cfg = RunConfig {
        mode,
        ec_source,
        strategy,
        cell_restriction: !args.no_cell_restriction,
        restriction_variant: variant,
    };
    match build_cad(&problem.formula, &problem.order, &cfg) {
        Ok(cad) => {
            let report = Report::from_cad(&cad);
            print!("{}", report.render(args.stats));
            if let Some(path) = &args.dump {
                if let Err(e) = std::fs::write(path, serde_json::to_string_pretty(&cad_to_json(&cad)).unwrap()) {
                    eprintln!("error: cannot write {path}: {e}");
                    return ExitCode::from(EXIT_USAGE);
                }
            }
            if let Some(path) = &args.dump_projection {
                let doc = projection_to_json(&cad.layers, &problem.order);
                if let Err(e) = std::fs::write(path, serde_json::to_string_pretty(&doc).unwrap()) {
                    eprintln!("error: cannot write {path}: {e}");
                    return ExitCode::from(EXIT_USAGE);
                }
            }
            ExitCode::from(EXIT_OK)
        }
        Err(EngineError::Designation(e)) => {
            if args.strict {
                eprintln!("error: {e}");
                ExitCode::from(EXIT_NON_PRIMITIVE)
            } else {
                eprintln!("warning: {e}; rerunning sign-invariant");
                let cfg = RunConfig {
                    mode: Mode::SignInvariant,
                    ec_source,
                    strategy: Strategy::Auto,
                    cell_restriction: !args.no_cell_restriction,
                    restriction_variant: variant,
                };
                match build_cad(&problem.formula, &problem.order, &cfg) {
                    Ok(cad) => {
                        print!("{}", Report::from_cad(&cad).render(args.stats));
                        ExitCode::from(EXIT_OK)
                    }
                    Err(e) => {
                        eprintln!("error: {e}");
                        ExitCode::from(EXIT_NOT_WELL_ORIENTED)
                    }
                }
            }
        }
        Err(EngineError::NotWellOriented(w)) => {
            eprintln!("FAIL: {w}");
            ExitCode::from(EXIT_NOT_WELL_ORIENTED)
        }
        Err(EngineError::Algebra(e)) => {
            eprintln!("error: {e}");
            ExitCode::from(EXIT_NOT_WELL_ORIENTED)
        }
    }
}

fn run_exhaustive(args: &BuildArgs, problem: &eccad::formula::Problem, mode: Mode, ec_source: EcSource) -> ExitCode {
    let nvars = problem.order.len();
    let out = match ecprep::designate(&problem.formula, nvars, ec_source, &Strategy::Auto) {
        Ok(o) => o,
        Err(e) => {
            eprintln!("error: {e}");
            return ExitCode::from(EXIT_NON_PRIMITIVE);
        }
    };
    let designations = ecprep::enumerate_designations(&out.pool, nvars, args.exhaustive_cap);
    let mut sizes: Vec<(usize, usize)> = Vec::new();
    for (i, d) in designations.iter().enumerate() {
        let mut working = problem.formula.extract_polynomials();
        let base_working = out.working_set.clone();
        for p in base_working.iter() {
            working.insert(p);
        }
        for p in d.polys() {
            working.insert(p);
        }
        let outcome = ecprep::DesignationOutcome {
            designation: d.clone(),
            working_set: working,
            pool: out.pool.clone(),
            warnings: Vec::new(),
            unsat_by_gb: out.unsat_by_gb,
        };
        let cfg = RunConfig {
            mode,
            ec_source,
            strategy: Strategy::Auto,
            cell_restriction: !args.no_cell_restriction,
            restriction_variant: parse_variant(&args.restriction_variant)
                .unwrap_or(RestrictionVariant::Literal),
        };
        match build_cad_from_designation(
            &problem.formula,
            &problem.order,
            &cfg,
            outcome,
            Duration::default(),
        ) {
            Ok(cad) => {
                let total = cad.top_cells().len();
                println!(
                    "designation {i}: cells {} -> {total}",
                    cad.level_counts()
                        .iter()
                        .map(|c| c.to_string())
                        .collect::<Vec<_>>()
                        .join("/")
                );
                sizes.push((i, total));
            }
            Err(e) => {
                println!("designation {i}: FAIL ({e})");
            }
        }
    }
    let mut distinct: Vec<usize> = sizes.iter().map(|(_, s)| *s).collect();
    distinct.sort_unstable();
    distinct.dedup();
    println!(
        "distinct final sizes: {{{}}}",
        distinct
            .iter()
            .map(|s| s.to_string())
            .collect::<Vec<_>>()
            .join(", ")
    );
    ExitCode::from(EXIT_OK)
}

fn run_bounds(args: BoundsArgs) -> ExitCode {
    let flavor = match args.flavor.as_str() {
        "P_only" => Flavor::POnly,
        "EC_then_P" => Flavor::EcThenP,
        "GB_EC_then_P" => Flavor::GbEcThenP,
        other => {
            eprintln!("error: unknown flavor '{other}'");
            return ExitCode::from(EXIT_USAGE);
        }
    };
    if args.table {
        match growth_table(args.n, args.m, args.d, args.l, flavor) {
            Ok(rows) => {
                if flavor == Flavor::GbEcThenP {
                    println!(
                        "note: constraint-degree column uses (s+1)^(s+1) d^(s+1) per level"
                    );
                }
                for row in rows {
                    match row.ec_degree {
                        Some(ec) => println!(
                            "level {}: count {} degree {} constraint-degree {}",
                            row.level, row.count, row.degree, ec
                        ),
                        None => println!(
                            "level {}: count {} degree {}",
                            row.level, row.count, row.degree
                        ),
                    }
                }
            }
            Err(e) => {
                eprintln!("error: {e}");
                return ExitCode::from(EXIT_USAGE);
            }
        }
    }
    for (name, which, needs_l) in [
        ("eq8", DominantTerm::Eq8, false),
        ("eq10", DominantTerm::Eq10, true),
        ("eq11", DominantTerm::Eq11, true),
    ] {
        if needs_l && args.l == 0 {
            continue;
        }
        match dominant_term(args.n, args.m, args.d, args.l, which) {
            Ok(v) => println!("{name}: {}", fmt_rat(&v)),
            Err(e) => eprintln!("{name}: {e}"),
        }
    }
    if args.l >= 1 && args.l < args.n {
        match gb_degree_exponent(args.n, args.l) {
            Ok(v) => println!("gb-degree-exponent: {v}"),
            Err(e) => eprintln!("gb-degree-exponent: {e}"),
        }
    }
    ExitCode::from(EXIT_OK)
}
