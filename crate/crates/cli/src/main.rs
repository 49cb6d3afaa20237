//! Command-line front end: construct Farey/left-neighbor data, coset
//! tables, induced permutations and Hecke operator representations, and run
//! the verification suites. Output is either human-readable text or
//! deterministic JSON.
//!
//! Exit codes: 0 on success, 1 when a verification check fails, 2 on usage
//! or domain errors.

mod words;

use std::fmt::Write as _;
use std::path::PathBuf;
use std::process::ExitCode;

use anyhow::{anyhow, bail, Context, Result};
use clap::{Parser, Subcommand, ValueEnum};
use period_hecke::verify::{run_suite, Suite, VerifyOptions};
use period_hecke::{
    cosets, farey_sequence_with_limit, h_tilde, h_tilde_level1, lns, m_of, rho, CosetTable,
    ExtRational, FormalSum, HeckeRep, Permutation, DEFAULT_MAX_FAREY_LEVEL,
};

#[derive(Clone, Copy, PartialEq, Eq, Debug, ValueEnum)]
enum Format {
    Text,
    Json,
}

#[derive(Parser)]
#[command(name = "period-hecke", version, about = "Exact Hecke operator representations on period functions")]
struct Cli {
    #[command(subcommand)]
    command: Command,

    /// Output format
    #[arg(long, global = true, value_enum, default_value_t = Format::Text)]
    format: Format,

    /// Override every numeric verification tolerance (must be > 0)
    #[arg(long, global = true)]
    tol: Option<f64>,

    /// JSON file with custom coset representatives {"n":..,"reps":[[[a,b],[c,d]],..]}
    #[arg(long, global = true)]
    reps: Option<PathBuf>,

    /// Refusal threshold for Farey sequence construction
    #[arg(long, global = true, default_value_t = DEFAULT_MAX_FAREY_LEVEL)]
    max_farey: i64,
}

#[derive(Subcommand)]
enum Command {
    /// Print the Farey sequence of a level
    Farey { n: i64 },
    /// Print the left neighbor chain of a rational ("p/q", an integer, or "inf")
    Lns {
        #[arg(allow_hyphen_values = true)]
        q: String,
    },
    /// Print the unimodular path sum M(q) for a rational 0 <= q < 1
    Mq {
        #[arg(allow_hyphen_values = true)]
        q: String,
    },
    /// Print the coset table of the level-n congruence subgroup
    Cosets { n: i64 },
    /// Print the induced permutation of a unimodular matrix ([[a,b],[c,d]] or a word in S, T, T')
    Rho { n: i64, g: String },
    /// Print the degree-m Hecke operator at level n (a formal sum when n = 1, a grid otherwise)
    Hecke { n: i64, m: i64 },
    /// Run verification suites: all, farey, cosets, hecke or numeric
    Verify { suite: String },
}

/// Validated run configuration shared by the subcommands.
struct Config {
    format: Format,
    tol: Option<f64>,
    max_farey: i64,
    reps: Option<CosetTable>,
}

impl Config {
    fn from_cli(cli: &Cli) -> Result<Config> {
        if let Some(tol) = cli.tol {
            if !tol.is_finite() || tol <= 0.0 {
                bail!("--tol must be positive (got {tol})");
            }
        }
        if cli.max_farey < 0 {
            bail!("--max-farey must be nonnegative (got {})", cli.max_farey);
        }
        let reps = match &cli.reps {
            None => None,
            Some(path) => {
                let text = std::fs::read_to_string(path)
                    .with_context(|| format!("cannot read {}", path.display()))?;
                let table: CosetTable = serde_json::from_str(&text)
                    .with_context(|| format!("invalid representative file {}", path.display()))?;
                Some(table)
            }
        };
        Ok(Config { format: cli.format, tol: cli.tol, max_farey: cli.max_farey, reps })
    }

    /// The coset table for a requested level: the validated user table when
    /// one was supplied, the default enumeration otherwise.
    fn table(&self, n: i64) -> Result<CosetTable> {
        match &self.reps {
            None => Ok(cosets(n)?),
            Some(table) if table.n() == n => Ok(table.clone()),
            Some(table) => bail!(
                "representative file is for level {}, command asked for level {n}",
                table.n()
            ),
        }
    }
}

fn parse_q(s: &str) -> Result<ExtRational> {
    s.parse::<ExtRational>().map_err(|e| anyhow!("{e}"))
}

fn emit_json<T: serde::Serialize>(value: &T) -> Result<()> {
    println!("{}", serde_json::to_string(value)?);
    Ok(())
}

fn formal_sum_text(sum: &FormalSum) -> String {
    sum.to_string()
}

fn permutation_text(p: &Permutation) -> String {
    let mut out = format!("mapping: {p}\n");
    for (i, row) in p.matrix().iter().enumerate() {
        let cells: Vec<String> = row.iter().map(|c| c.to_string()).collect();
        let _ = writeln!(out, "row {}: {}", i + 1, cells.join(" "));
    }
    out.trim_end().to_string()
}

fn grid_text(rep: &HeckeRep) -> String {
    let mut out = format!("level {}, degree {}, {} components\n", rep.n(), rep.m(), rep.mu());
    for j in 1..=rep.mu() {
        let mut terms = Vec::new();
        for k in 1..=rep.mu() {
            for &(coeff, mat) in rep.cell(j, k).terms() {
                if coeff == 1 {
                    terms.push(format!("psi_{k}|{mat}"));
                } else {
                    terms.push(format!("{coeff}*psi_{k}|{mat}"));
                }
            }
        }
        let row = if terms.is_empty() { "0".to_string() } else { terms.join(" + ") };
        let _ = writeln!(out, "component {j}: {row}");
    }
    out.trim_end().to_string()
}

fn run(cli: &Cli) -> Result<ExitCode> {
    let config = Config::from_cli(cli)?;
    match &cli.command {
        Command::Farey { n } => {
            let f = farey_sequence_with_limit(*n, config.max_farey)?;
            match config.format {
                Format::Json => emit_json(&f)?,
                Format::Text => {
                    let entries: Vec<String> =
                        f.entries().iter().map(|q| q.to_string()).collect();
                    println!("F_{} ({} entries): {}", f.level(), entries.len(), entries.join(", "));
                }
            }
        }
        Command::Lns { q } => {
            let seq = lns(parse_q(q)?)?;
            match config.format {
                Format::Json => emit_json(&seq)?,
                Format::Text => {
                    let chain: Vec<String> =
                        seq.chain().iter().map(|q| q.to_string()).collect();
                    println!("LNS({}): {}", seq.target(), chain.join(" -> "));
                }
            }
        }
        Command::Mq { q } => {
            let q = parse_q(q)?;
            let sum = m_of(q)?;
            match config.format {
                Format::Json => emit_json(&sum)?,
                Format::Text => println!("M({q}) = {}", formal_sum_text(&sum)),
            }
        }
        Command::Cosets { n } => {
            let table = config.table(*n)?;
            match config.format {
                Format::Json => emit_json(&table)?,
                Format::Text => {
                    println!("level {} has index {}", table.n(), table.mu());
                    for (i, rep) in table.reps().iter().enumerate() {
                        println!("alpha_{} = {rep}", i + 1);
                    }
                }
            }
        }
        Command::Rho { n, g } => {
            let g = words::parse_matrix_arg(g)?;
            if !g.is_sl2() {
                bail!("matrix {g} has determinant {}, expected 1", g.det());
            }
            let table = config.table(*n)?;
            let p = rho(&g, &table);
            match config.format {
                Format::Json => emit_json(&p)?,
                Format::Text => println!("{}", permutation_text(&p)),
            }
        }
        Command::Hecke { n, m } => {
            if *n == 1 {
                let sum = h_tilde_level1(*m)?;
                match config.format {
                    Format::Json => emit_json(&sum)?,
                    Format::Text => {
                        println!("level 1, degree {m}: {}", formal_sum_text(&sum))
                    }
                }
            } else {
                let table = config.table(*n)?;
                let rep = h_tilde(*n, *m, &table)?;
                match config.format {
                    Format::Json => emit_json(&rep)?,
                    Format::Text => println!("{}", grid_text(&rep)),
                }
            }
        }
        Command::Verify { suite } => {
            let suite: Suite = suite.parse()?;
            let opts = VerifyOptions { tol: config.tol };
            let checks = run_suite(suite, &opts);
            let passed = checks.iter().all(|c| c.passed);
            match config.format {
                Format::Json => {
                    emit_json(&serde_json::json!({
                        "suite": format!("{suite:?}").to_lowercase(),
                        "passed": passed,
                        "checks": checks,
                    }))?;
                }
                Format::Text => {
                    for check in &checks {
                        let status = if check.passed { "PASS" } else { "FAIL" };
                        println!("[{status}] {} — {}", check.id, check.description);
                        let measured = check.measured.to_string();
                        if measured.len() <= 140 {
                            println!("       {measured}");
                        } else {
                            println!("       (detailed measurements: rerun with --format json)");
                        }
                    }
                    println!(
                        "{}: {} of {} checks passed",
                        if passed { "ok" } else { "FAILED" },
                        checks.iter().filter(|c| c.passed).count(),
                        checks.len()
                    );
                }
            }
            if !passed {
                return Ok(ExitCode::from(1));
            }
        }
    }
    Ok(ExitCode::SUCCESS)
}

fn main() -> ExitCode {
    // die quietly when the consumer closes the pipe (e.g. `... | head`)
    #[cfg(unix)]
    unsafe {
        libc::signal(libc::SIGPIPE, libc::SIG_DFL);
    }
    let cli = Cli::parse();
    match run(&cli) {
        Ok(code) => code,
        Err(err) => {
            eprintln!("error: {err:#}");
            ExitCode::from(2)
        }
    }
}
