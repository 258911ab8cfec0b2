//! Command-line interface for connected domination on grid graphs: the
//! closed-form size, witness construction, set verification, the exact
//! solver, a formula-versus-solver sweep table, and the regularization
//! routine with trace and audit output.
//!
//! Exit codes: 0 on success, 1 on a failed check (a set that is not a
//! connected dominating set, a sweep mismatch, a failed audit), 2 on usage
//! or domain errors, 3 when the solver gives up within its budget.

use std::fs;
use std::io::{self, Read, Write};
use std::path::{Path, PathBuf};
use std::process::ExitCode;

use clap::{Parser, Subcommand, ValueEnum};
use serde::Serialize;

use cds_grid::{
    audit_final, build_cds, enumerate_mcds, gamma_formula, normalize_origin, run_routine,
    solve_gamma_with_ceiling, SolverError, VertexSet,
};

#[derive(Parser)]
#[command(name = "cds-grid", version, about = "Connected domination on grid graphs")]
struct Cli {
    #[command(subcommand)]
    command: Cmd,
}

#[derive(Clone, Copy, PartialEq, Eq, ValueEnum)]
enum Format {
    Ascii,
    Json,
}

#[derive(Subcommand)]
enum Cmd {
    /// Print the closed-form minimum connected dominating set size.
    Formula {
        /// Grid width, at least 4.
        m: u32,
        /// Grid height, at least 4.
        n: u32,
        /// Emit one JSON object instead of plain lines.
        #[arg(long)]
        json: bool,
    },
    /// Build an optimal connected dominating set witness.
    Construct {
        /// Grid width, at least 4.
        m: u32,
        /// Grid height, at least 4.
        n: u32,
        /// Picture of the grid, or JSON with the case and its parts.
        #[arg(long, value_enum, default_value_t = Format::Ascii)]
        format: Format,
    },
    /// Check a vertex set read as canonical JSON.
    Verify {
        /// File holding the set; standard input when omitted.
        #[arg(long)]
        input: Option<PathBuf>,
        /// Emit one JSON object instead of plain lines.
        #[arg(long)]
        json: bool,
    },
    /// Compute the exact minimum size by exhaustive search.
    Solve {
        /// Grid width, at least 1.
        m: u32,
        /// Grid height, at least 1.
        n: u32,
        /// Include the lexicographically least witness.
        #[arg(long, conflicts_with = "all")]
        witness: bool,
        /// Enumerate every minimum set instead of one witness.
        #[arg(long)]
        all: bool,
        /// Stop enumerating after this many sets.
        #[arg(long, default_value_t = 200, requires = "all")]
        cap: usize,
        /// Give up after this many search nodes.
        #[arg(long, conflicts_with = "all")]
        budget: Option<u64>,
        /// Largest cell count the solver accepts.
        #[arg(long, default_value_t = 30, conflicts_with = "all")]
        ceiling: u32,
    },
    /// Rewrite a minimum set into frame-regular normal form.
    Regularize {
        /// File holding the set as canonical JSON.
        #[arg(long)]
        input: PathBuf,
        /// Write the step records to this file as JSON.
        #[arg(long)]
        trace: Option<PathBuf>,
        /// Print the final audit report as JSON and fail if any check fails.
        #[arg(long)]
        audit: bool,
    },
    /// Emit a CSV table comparing the formula against the solver.
    Sweep {
        /// Width range, inclusive, as LO..HI.
        #[arg(long, value_parser = parse_range)]
        m: (u32, u32),
        /// Height range, inclusive, as LO..HI.
        #[arg(long, value_parser = parse_range)]
        n: (u32, u32),
        /// Solve exactly when the cell count is at most this bound;
        /// larger grids get "skipped" in the solver columns.
        #[arg(long = "solve-upto", default_value_t = 30)]
        solve_upto: u32,
        /// Output file; standard output when omitted.
        #[arg(long)]
        out: Option<PathBuf>,
    },
}

/// A command failure carrying the process exit code.
struct Failure {
    code: u8,
    message: String,
}

impl Failure {
    fn check(message: impl Into<String>) -> Self {
        Self { code: 1, message: message.into() }
    }

    fn domain(message: impl Into<String>) -> Self {
        Self { code: 2, message: message.into() }
    }

    fn inconclusive(message: impl Into<String>) -> Self {
        Self { code: 3, message: message.into() }
    }
}

fn solver_failure(e: SolverError) -> Failure {
    match e {
        SolverError::Inconclusive { .. } => Failure::inconclusive(e.to_string()),
        SolverError::CapacityExceeded { .. } | SolverError::Grid(_) => {
            Failure::domain(e.to_string())
        }
        SolverError::InvariantViolation(_) => Failure::check(e.to_string()),
    }
}

fn parse_range(text: &str) -> Result<(u32, u32), String> {
    let (lo, hi) = text
        .split_once("..")
        .ok_or_else(|| format!("expected LO..HI, got {text}"))?;
    let lo: u32 = lo.parse().map_err(|e| format!("bad lower bound {lo:?}: {e}"))?;
    let hi: u32 = hi.parse().map_err(|e| format!("bad upper bound {hi:?}: {e}"))?;
    if lo > hi {
        return Err(format!("empty range {lo}..{hi}"));
    }
    Ok((lo, hi))
}

fn main() -> ExitCode {
    let cli = Cli::parse();
    let result = match cli.command {
        Cmd::Formula { m, n, json } => cmd_formula(m, n, json),
        Cmd::Construct { m, n, format } => cmd_construct(m, n, format),
        Cmd::Verify { input, json } => cmd_verify(input.as_deref(), json),
        Cmd::Solve { m, n, witness, all, cap, budget, ceiling } => {
            cmd_solve(m, n, witness, all, cap, budget, ceiling)
        }
        Cmd::Regularize { input, trace, audit } => {
            cmd_regularize(&input, trace.as_deref(), audit)
        }
        Cmd::Sweep { m, n, solve_upto, out } => cmd_sweep(m, n, solve_upto, out.as_deref()),
    };
    match result {
        Ok(()) => ExitCode::SUCCESS,
        Err(f) => {
            eprintln!("error: {}", f.message);
            ExitCode::from(f.code)
        }
    }
}

#[derive(Serialize)]
struct FormulaRow {
    m: u32,
    n: u32,
    a_prime: u32,
    r_bar_prime: u32,
    c_prime: u32,
    gamma: u32,
}

fn cmd_formula(m: u32, n: u32, json: bool) -> Result<(), Failure> {
    let b = gamma_formula(m, n).map_err(|e| Failure::domain(e.to_string()))?;
    if json {
        let row = FormulaRow {
            m,
            n,
            a_prime: b.a_prime,
            r_bar_prime: b.r_bar_prime,
            c_prime: b.c_prime,
            gamma: b.gamma,
        };
        println!("{}", to_json(&row));
    } else {
        println!("gamma = {}", b.gamma);
        println!("a' = {}", b.a_prime);
        println!("r_bar' = {}", b.r_bar_prime);
        println!("c' = {}", b.c_prime);
    }
    Ok(())
}

fn vertex_list(set: &VertexSet) -> Vec<[u32; 2]> {
    set.iter().map(|v| [v.x, v.y]).collect()
}

#[derive(Serialize)]
struct ConstructRow {
    m: u32,
    n: u32,
    vertices: Vec<[u32; 2]>,
    case: String,
    parts: PartsRow,
}

#[derive(Serialize)]
struct PartsRow {
    #[serde(rename = "A")]
    a: Vec<[u32; 2]>,
    #[serde(rename = "B")]
    b: Vec<[u32; 2]>,
    #[serde(rename = "C")]
    c: Vec<[u32; 2]>,
    #[serde(rename = "D")]
    d: Vec<[u32; 2]>,
    #[serde(rename = "E")]
    e: Vec<[u32; 2]>,
}

fn cmd_construct(m: u32, n: u32, format: Format) -> Result<(), Failure> {
    let (witness, case) = build_cds(m, n).map_err(|e| Failure::domain(e.to_string()))?;
    match format {
        Format::Ascii => print!("{}", witness.to_ascii()),
        Format::Json => {
            let row = ConstructRow {
                m,
                n,
                vertices: vertex_list(&witness),
                case: case.tag.to_string(),
                parts: PartsRow {
                    a: vertex_list(&case.part_a),
                    b: vertex_list(&case.part_b),
                    c: vertex_list(&case.part_c),
                    d: vertex_list(&case.part_d),
                    e: vertex_list(&case.part_e),
                },
            };
            println!("{}", to_json(&row));
        }
    }
    Ok(())
}

#[derive(Serialize)]
struct VerifyRow {
    m: u32,
    n: u32,
    cardinality: usize,
    is_dominating: bool,
    is_connected: bool,
    is_cds: bool,
}

fn cmd_verify(input: Option<&Path>, json: bool) -> Result<(), Failure> {
    let text = read_input(input)?;
    let set = VertexSet::from_canonical_json(&text)
        .map_err(|e| Failure::domain(format!("bad input set: {e}")))?;
    let row = VerifyRow {
        m: set.dims().m,
        n: set.dims().n,
        cardinality: set.len(),
        is_dominating: set.is_dominating(),
        is_connected: set.is_connected(),
        is_cds: set.is_cds(),
    };
    if json {
        println!("{}", to_json(&row));
    } else {
        println!("m = {}", row.m);
        println!("n = {}", row.n);
        println!("cardinality = {}", row.cardinality);
        println!("is_dominating = {}", row.is_dominating);
        println!("is_connected = {}", row.is_connected);
        println!("is_cds = {}", row.is_cds);
    }
    if row.is_cds {
        Ok(())
    } else {
        Err(Failure::check("the set is not a connected dominating set"))
    }
}

#[derive(Serialize)]
struct SolveRow {
    gamma: u32,
    #[serde(skip_serializing_if = "Option::is_none")]
    witness: Option<VertexSet>,
    node_count: u64,
}

#[derive(Serialize)]
struct EnumerateRow {
    gamma: u32,
    count: usize,
    truncated: bool,
    sets: Vec<VertexSet>,
}

fn cmd_solve(
    m: u32,
    n: u32,
    witness: bool,
    all: bool,
    cap: usize,
    budget: Option<u64>,
    ceiling: u32,
) -> Result<(), Failure> {
    if all {
        let e = enumerate_mcds(m, n, cap).map_err(solver_failure)?;
        let row = EnumerateRow {
            gamma: e.gamma,
            count: e.sets.len(),
            truncated: e.truncated,
            sets: e.sets,
        };
        println!("{}", to_json(&row));
    } else {
        let r = solve_gamma_with_ceiling(m, n, budget, ceiling).map_err(solver_failure)?;
        let row = SolveRow {
            gamma: r.gamma,
            witness: witness.then_some(r.witness),
            node_count: r.node_count,
        };
        println!("{}", to_json(&row));
    }
    Ok(())
}

fn cmd_regularize(input: &Path, trace: Option<&Path>, audit: bool) -> Result<(), Failure> {
    let text = fs::read_to_string(input)
        .map_err(|e| Failure::domain(format!("cannot read {}: {e}", input.display())))?;
    let set = VertexSet::from_canonical_json(&text)
        .map_err(|e| Failure::domain(format!("bad input set: {e}")))?;
    let dims = set.dims();
    if dims.m < 4 || dims.n < 4 {
        return Err(Failure::domain(format!(
            "the routine requires both sides at least 4, got {dims}"
        )));
    }
    if !set.is_cds() {
        return Err(Failure::check("input is not a connected dominating set"));
    }
    let d0 = normalize_origin(&set).map_err(|e| Failure::check(e.to_string()))?;
    let outcome = run_routine(&d0).map_err(|e| Failure::check(e.to_string()))?;
    if let Some(path) = trace {
        let json = format!("{}\n", to_json(&outcome.steps));
        fs::write(path, json)
            .map_err(|e| Failure::domain(format!("cannot write {}: {e}", path.display())))?;
    }
    if audit {
        let report =
            audit_final(&outcome.final_set, &outcome.steps).map_err(|e| Failure::check(e.to_string()))?;
        println!("{}", to_json(&report));
        let failed: Vec<&str> = report
            .checks
            .iter()
            .filter(|c| !c.pass)
            .map(|c| c.name.as_str())
            .collect();
        if !failed.is_empty() {
            return Err(Failure::check(format!("audit checks failed: {}", failed.join(", "))));
        }
    } else {
        let cases: Vec<String> =
            outcome.steps.iter().map(|s| s.case_label.to_string()).collect();
        println!("steps = {}", outcome.steps.len());
        println!("cases = {}", cases.join(" "));
        println!("final_frame = {}", outcome.final_frame);
        println!("final_set = {}", outcome.final_set.to_canonical_json());
    }
    Ok(())
}

fn cmd_sweep(
    m: (u32, u32),
    n: (u32, u32),
    solve_upto: u32,
    out: Option<&Path>,
) -> Result<(), Failure> {
    let sink: Box<dyn Write> = match out {
        Some(path) => Box::new(fs::File::create(path).map_err(|e| {
            Failure::domain(format!("cannot write {}: {e}", path.display()))
        })?),
        None => Box::new(io::stdout().lock()),
    };
    let mut writer = csv::Writer::from_writer(sink);
    let io_failure = |e: csv::Error| Failure::domain(format!("cannot write table: {e}"));
    writer
        .write_record(["m", "n", "gamma_formula", "gamma_solver", "match"])
        .map_err(io_failure)?;
    let mut mismatches = 0usize;
    for mm in m.0..=m.1 {
        for nn in n.0..=n.1 {
            let g = gamma_formula(mm, nn).map_err(|e| Failure::domain(e.to_string()))?;
            let (solver_field, match_field) = if mm * nn <= solve_upto {
                let r = solve_gamma_with_ceiling(mm, nn, None, solve_upto)
                    .map_err(solver_failure)?;
                let agree = r.gamma == g.gamma;
                if !agree {
                    mismatches += 1;
                }
                (r.gamma.to_string(), agree.to_string())
            } else {
                ("skipped".to_string(), "skipped".to_string())
            };
            writer
                .write_record([
                    mm.to_string(),
                    nn.to_string(),
                    g.gamma.to_string(),
                    solver_field,
                    match_field,
                ])
                .map_err(io_failure)?;
        }
    }
    writer.flush().map_err(|e| Failure::domain(format!("cannot write table: {e}")))?;
    if mismatches > 0 {
        return Err(Failure::check(format!(
            "{mismatches} rows disagree with the formula"
        )));
    }
    Ok(())
}

fn read_input(path: Option<&Path>) -> Result<String, Failure> {
    match path {
        Some(p) => fs::read_to_string(p)
            .map_err(|e| Failure::domain(format!("cannot read {}: {e}", p.display()))),
        None => {
            let mut text = String::new();
            io::stdin()
                .read_to_string(&mut text)
                .map_err(|e| Failure::domain(format!("cannot read standard input: {e}")))?;
            Ok(text)
        }
    }
}

fn to_json<T: Serialize>(value: &T) -> String {
    serde_json::to_string(value).expect("serialization cannot fail")
}
