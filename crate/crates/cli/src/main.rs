use std::fs;
use std::path::PathBuf;
use std::process::ExitCode;
use std::time::Duration;

use clap::{Args, Parser, Subcommand};
use serde_json::json;

use pbei_core::betti::{
    full_betti_table, graded_betti_with, BettiOptions, RankMethod, DEFAULT_CAP,
};
use pbei_core::graph_ideals::{build_family, parse_graph, permanental_warning, Graph, IdealFamily};
use pbei_core::hilbert::{hilbert_function, hilbert_numerator, krull_dim};
use pbei_core::verify::{parse_check_list, run_verify, Tier, VerifyConfig};
use pbei_core::{Error, Field, Ideal, TermOrder};

#[derive(Parser)]
#[command(
    name = "pbei",
    version,
    about = "Parity binomial edge ideals: Groebner bases, Hilbert series, Betti numbers"
)]
struct Cli {
    #[command(subcommand)]
    command: Command,
}

#[derive(Subcommand)]
enum Command {
    /// Print the generators of an ideal.
    Ideal(IdealArgs),
    /// Reduced Groebner basis.
    Gb(GbArgs),
    /// Hilbert-Poincare numerator and Hilbert function.
    Hilbert(HilbertArgs),
    /// Graded Betti numbers.
    Betti(BettiArgs),
    /// Run the check registry.
    Verify(VerifyArgs),
}

#[derive(Args)]
struct Source {
    /// Complete graph on n vertices.
    #[arg(long, conflicts_with = "graph", required_unless_present = "graph")]
    complete: Option<usize>,
    /// Graph file: `n` on the first line, then `i j` per edge.
    #[arg(long)]
    graph: Option<PathBuf>,
    /// parity, permanental, determinantal, saturation, pplus, pminus,
    /// chain:<k>, prime:<i>,<j>
    #[arg(long, default_value = "parity")]
    kind: String,
    /// q or fp:<p>
    #[arg(long, default_value = "q")]
    field: String,
}

#[derive(Args)]
struct IdealArgs {
    #[command(flatten)]
    source: Source,
    #[arg(long)]
    json: Option<PathBuf>,
}

#[derive(Args)]
struct GbArgs {
    #[command(flatten)]
    source: Source,
    #[arg(long, default_value = "degrevlex")]
    order: String,
    #[arg(long)]
    json: Option<PathBuf>,
}

#[derive(Args)]
struct HilbertArgs {
    #[command(flatten)]
    source: Source,
    #[arg(long, default_value = "degrevlex")]
    order: String,
    /// Also print H(0..=d).
    #[arg(long)]
    degrees: Option<usize>,
    #[arg(long)]
    json: Option<PathBuf>,
}

#[derive(Args)]
struct BettiArgs {
    #[command(flatten)]
    source: Source,
    /// Largest homological index; omit both bounds for the full table.
    #[arg(long, requires = "jmax")]
    imax: Option<usize>,
    #[arg(long, requires = "imax")]
    jmax: Option<usize>,
    /// Bound on nonzero entries per strand.
    #[arg(long, default_value_t = DEFAULT_CAP)]
    cap: usize,
    /// Exact elimination for every strand.
    #[arg(long)]
    exact: bool,
    #[arg(long)]
    json: Option<PathBuf>,
}

#[derive(Args)]
struct VerifyArgs {
    #[arg(long, default_value = "quick")]
    tier: String,
    /// Comma-separated check ids, or `all`.
    #[arg(long, default_value = "all")]
    checks: String,
    #[arg(long)]
    nmin: Option<usize>,
    #[arg(long)]
    nmax: Option<usize>,
    #[arg(long, default_value = "q")]
    field: String,
    #[arg(long)]
    json: Option<PathBuf>,
    /// Perturb the sign of one generator (negative control).
    #[arg(long)]
    poison: bool,
    #[arg(long)]
    workers: Option<usize>,
    /// Per-check timeout in seconds; timeouts are reported as skipped.
    #[arg(long)]
    timeout: Option<u64>,
    #[arg(long, default_value_t = DEFAULT_CAP)]
    betti_cap: usize,
}

/// Failures that map to exit code 2.
struct UsageError(String);

impl From<Error> for UsageError {
    fn from(e: Error) -> Self {
        UsageError(e.to_string())
    }
}

impl From<std::io::Error> for UsageError {
    fn from(e: std::io::Error) -> Self {
        UsageError(e.to_string())
    }
}

type CliResult<T> = std::result::Result<T, UsageError>;

fn load_ideal(src: &Source) -> CliResult<Ideal> {
    let field: Field = src.field.parse()?;
    let family: IdealFamily = src.kind.parse()?;
    let graph = match (&src.complete, &src.graph) {
        (Some(n), _) => {
            if *n < 2 {
                return Err(UsageError(format!("--complete needs n >= 2, got {n}")));
            }
            Graph::complete(*n)
        }
        (None, Some(path)) => {
            let text = fs::read_to_string(path)
                .map_err(|e| UsageError(format!("{}: {e}", path.display())))?;
            parse_graph(&text).map_err(|e| UsageError(format!("{}: {e}", path.display())))?
        }
        (None, None) => {
            return Err(UsageError(
                "one of --complete or --graph is required".into(),
            ))
        }
    };
    if matches!(family, IdealFamily::Permanental) {
        if let Some(w) = permanental_warning(field) {
            eprintln!("warning: {w}");
        }
    }
    Ok(build_family(&graph, &family, field)?)
}

fn emit(path: &Option<PathBuf>, value: serde_json::Value) -> CliResult<()> {
    if let Some(p) = path {
        fs::write(p, serde_json::to_string_pretty(&value).unwrap() + "\n")?;
    }
    Ok(())
}

fn cmd_ideal(a: &IdealArgs) -> CliResult<u8> {
    let ideal = load_ideal(&a.source)?;
    let gens: Vec<String> = ideal.generators().iter().map(|g| g.to_string()).collect();
    for g in &gens {
        println!("{g}");
    }
    emit(
        &a.json,
        json!({ "ring": ideal.ring().to_string(), "generators": gens }),
    )?;
    Ok(0)
}

fn cmd_gb(a: &GbArgs) -> CliResult<u8> {
    let ideal = load_ideal(&a.source)?;
    let order: TermOrder = a.order.parse()?;
    let gb = ideal.groebner(&order);
    let elems: Vec<String> = gb.elements().iter().map(|g| g.to_string()).collect();
    for e in &elems {
        println!("{e}");
    }
    emit(
        &a.json,
        json!({ "order": order.to_string(), "basis": elems }),
    )?;
    Ok(0)
}

fn cmd_hilbert(a: &HilbertArgs) -> CliResult<u8> {
    let ideal = load_ideal(&a.source)?;
    let order: TermOrder = a.order.parse()?;
    let num = hilbert_numerator(&ideal, &order)?;
    let dim = krull_dim(&num);
    println!("numerator: {num}");
    println!("denominator: (1 - t)^{}", num.arity);
    match dim {
        Some(d) => println!("dim: {d}"),
        None => println!("dim: -1 (unit ideal)"),
    }
    let values = a.degrees.map(|d| hilbert_function(&num, d));
    if let Some(v) = &values {
        let shown: Vec<String> = v.iter().map(|x| x.to_string()).collect();
        println!("H: {}", shown.join(", "));
    }
    let coeffs: Vec<String> = num.poly.coeffs().iter().map(|c| c.to_string()).collect();
    emit(
        &a.json,
        json!({
            "numerator": num.to_string(),
            "coefficients": coeffs,
            "arity": num.arity,
            "dim": dim,
            "hilbert_function": values.map(|v| v.iter().map(|x| x.to_string()).collect::<Vec<_>>()),
        }),
    )?;
    Ok(0)
}

fn cmd_betti(a: &BettiArgs) -> CliResult<u8> {
    let ideal = load_ideal(&a.source)?;
    let method = if a.exact {
        RankMethod::Exact
    } else {
        RankMethod::Auto
    };
    let opts = BettiOptions { cap: a.cap, method };
    let table = match (a.imax, a.jmax) {
        (Some(i), Some(j)) => graded_betti_with(&ideal, i, j, &opts),
        _ => full_betti_table(&ideal, &opts),
    };
    let table = match table {
        Ok(t) => t,
        Err(e @ Error::DeskScaleExceeded(_)) => {
            eprintln!("error: {e}");
            return Ok(2);
        }
        Err(e) => return Err(e.into()),
    };
    print!("{table}");
    let entries: Vec<_> = table
        .entries()
        .map(|e| json!({ "i": e.i, "j": e.j, "beta": e.beta }))
        .collect();
    emit(
        &a.json,
        json!({
            "arity": table.arity(),
            "entries": entries,
            "reg": table.reg(),
            "pd": table.pd(),
            "depth": table.depth(),
        }),
    )?;
    Ok(0)
}

fn cmd_verify(a: &VerifyArgs) -> CliResult<u8> {
    let tier: Tier = a.tier.parse()?;
    let mut cfg = VerifyConfig::new(tier);
    cfg.checks = parse_check_list(&a.checks)?;
    cfg.field = a.field.parse()?;
    cfg.poison = a.poison;
    cfg.betti_cap = a.betti_cap;
    if let Some(n) = a.nmin {
        cfg.nmin = n;
        cfg.nmax = cfg.nmax.max(n);
    }
    if let Some(n) = a.nmax {
        cfg.nmax = n;
    }
    if let Some(w) = a.workers {
        cfg.workers = w.max(1);
    }
    if let Some(t) = a.timeout {
        cfg.timeout = Some(Duration::from_secs(t));
    }
    let report = run_verify(&cfg)?;
    for c in &report.checks {
        let status = format!("{:?}", c.status).to_uppercase();
        let extra = c.reason.as_deref().or(c.witness.as_deref()).unwrap_or("");
        println!(
            "{:<10} n={:<2} {:<7} {:>7}ms {}",
            c.check_id, c.n, status, c.runtime_ms, extra
        );
        if let Some(note) = &c.note {
            println!("{:>14} note: {note}", "");
        }
    }
    let s = report.summary;
    println!("pass {}, fail {}, skipped {}", s.pass, s.fail, s.skipped);
    if let Some(p) = &a.json {
        fs::write(p, report.to_json() + "\n")?;
    }
    if report.exit_code() == 2 {
        eprintln!("error: no check ran");
    }
    Ok(report.exit_code() as u8)
}

fn main() -> ExitCode {
    let cli = Cli::parse();
    let result = match &cli.command {
        Command::Ideal(a) => cmd_ideal(a),
        Command::Gb(a) => cmd_gb(a),
        Command::Hilbert(a) => cmd_hilbert(a),
        Command::Betti(a) => cmd_betti(a),
        Command::Verify(a) => cmd_verify(a),
    };
    match result {
        Ok(code) => ExitCode::from(code),
        Err(UsageError(msg)) => {
            eprintln!("error: {msg}");
            ExitCode::from(2)
        }
    }
}
