//! Command-line front end.
//!
//! Exit codes: 0 success or pass, 1 invalid input, 2 a property failed,
//! 3 internal consistency failure. Diagnostics go to the error stream as a
//! single line.

use std::io::Write;
use std::path::PathBuf;

use clap::{Args, Parser, Subcommand, ValueEnum};
use num_bigint::BigInt;
use serde_json::json;

use crate::characters::{character, character_table};
use crate::error::{Error, Result};
use crate::kronecker::{kron_char, kron_schur_oracle_capped, kron_table, records_to_jsonl, reduced_kron, KronTriple, ReducedTriple};
use crate::partitions::Partition;
use crate::plethysm::{hn_expansion_json, pleth_coefficient, pleth_hn_expansion, PlethQuery};
use crate::tableaux::{kostka, lr_coefficient};
use crate::verify::{run_property_with, search_saturation_counterexample, Caps, Params, Report, Status};

#[derive(Parser, Debug)]
#[command(name = "symcomb", version, about = "Exact symmetric-group characters and structure constants")]
struct Cli {
    /// Emit JSON instead of plain text.
    #[arg(long, global = true)]
    json: bool,
    /// Worker threads for table and verify commands.
    #[arg(long, global = true)]
    jobs: Option<usize>,
    /// Override a resource cap, e.g. `--cap table=24`. Names: table,
    /// saturation, pleth, schur.
    #[arg(long = "cap", global = true, value_name = "NAME=VALUE")]
    caps: Vec<String>,
    #[command(subcommand)]
    command: Command,
}

#[derive(Copy, Clone, Debug, PartialEq, Eq, ValueEnum)]
enum KronMethod {
    Char,
    Schur,
}

#[derive(Copy, Clone, Debug, PartialEq, Eq, ValueEnum)]
enum TableKind {
    Kron,
    Char,
}

#[derive(Subcommand, Debug)]
enum Command {
    /// χ^λ at cycle type α.
    Char { lambda: Partition, alpha: Partition },
    /// Kostka number K_{λμ}.
    Kostka { lambda: Partition, mu: Partition },
    /// Littlewood–Richardson coefficient c^λ_{μν}.
    Lr { lambda: Partition, mu: Partition, nu: Partition },
    /// Kronecker coefficient g(λ,μ,ν).
    Kron {
        lambda: Partition,
        mu: Partition,
        nu: Partition,
        #[arg(long, value_enum, default_value = "char")]
        method: KronMethod,
    },
    /// Reduced Kronecker coefficient.
    Rkron { alpha: Partition, beta: Partition, gamma: Partition },
    /// Schur expansion of h_d[h_n].
    PlethHn { d: u32, n: u32 },
    /// Coefficient of s_target in s_outer[s_inner].
    Pleth { target: Partition, inner: Partition, outer: Partition },
    /// Write a full table as JSON lines.
    Table {
        #[arg(value_enum)]
        kind: TableKind,
        #[arg(long)]
        n: u32,
        #[arg(long)]
        out: PathBuf,
    },
    /// Run a property check or the saturation search.
    Verify(VerifyArgs),
}

#[derive(Args, Debug)]
struct VerifyArgs {
    /// Property name, or `saturation-cex`.
    property: String,
    /// Extra parameters as `key=value`.
    params: Vec<String>,
    #[arg(long)]
    n: Option<i64>,
    #[arg(long)]
    k: Option<i64>,
    #[arg(long)]
    d: Option<i64>,
    #[arg(long = "n-min")]
    n_min: Option<i64>,
    #[arg(long = "n-max")]
    n_max: Option<i64>,
    /// Add `elapsed_ms` to JSON reports.
    #[arg(long)]
    timing: bool,
}

enum Outcome {
    Ok,
    PropertyFailed,
}

/// Runs one invocation, writing results to `out` and diagnostics to `err`.
pub fn run<I, S>(argv: I, out: &mut dyn Write, err: &mut dyn Write) -> i32
where
    I: IntoIterator<Item = S>,
    S: Into<std::ffi::OsString> + Clone,
{
    let cli = match Cli::try_parse_from(argv) {
        Ok(c) => c,
        Err(e) => {
            use clap::error::ErrorKind;
            return match e.kind() {
                ErrorKind::DisplayHelp | ErrorKind::DisplayVersion => {
                    let _ = write!(out, "{e}");
                    0
                }
                _ => {
                    let msg = e.to_string();
                    let first = msg.lines().next().unwrap_or("invalid arguments");
                    let _ = writeln!(err, "{first}");
                    1
                }
            };
        }
    };
    // Output is buffered so the worker pool never touches the caller's writer.
    let mut buf = Vec::new();
    let result = match cli.jobs {
        Some(0) => Err(Error::OutOfRange("--jobs must be at least 1".into())),
        Some(j) => match rayon::ThreadPoolBuilder::new().num_threads(j).build() {
            Ok(pool) => pool.install(|| dispatch(&cli, &mut buf)),
            Err(e) => Err(Error::Internal(format!("thread pool: {e}"))),
        },
        None => dispatch(&cli, &mut buf),
    };
    let _ = out.write_all(&buf);
    match result {
        Ok(Outcome::Ok) => 0,
        Ok(Outcome::PropertyFailed) => 2,
        Err(e) => {
            let _ = writeln!(err, "error: {e}");
            if e.is_internal() {
                3
            } else {
                1
            }
        }
    }
}

/// Process entry point for the binary.
pub fn main() -> i32 {
    let stdout = std::io::stdout();
    let stderr = std::io::stderr();
    run(std::env::args_os(), &mut stdout.lock(), &mut stderr.lock())
}

fn parse_caps(specs: &[String]) -> Result<Caps> {
    let mut caps = Caps::default();
    for spec in specs {
        let (name, value) = spec
            .split_once('=')
            .ok_or_else(|| Error::OutOfRange(format!("--cap expects NAME=VALUE, got {spec:?}")))?;
        let value: u32 = value
            .parse()
            .map_err(|_| Error::OutOfRange(format!("cap value {value:?} is not a non-negative integer")))?;
        match name {
            "table" => caps.table = value,
            "saturation" => caps.saturation_pad = value,
            "pleth" => caps.pleth_degree = value,
            "schur" => caps.schur_oracle = value,
            _ => return Err(Error::OutOfRange(format!("unknown cap {name:?}"))),
        }
    }
    Ok(caps)
}

fn emit_value(out: &mut dyn Write, json: bool, query: serde_json::Value, v: &BigInt) -> Result<Outcome> {
    if json {
        let mut obj = query;
        obj["value"] = json!(v.to_string());
        writeln!(out, "{obj}")
    } else {
        writeln!(out, "{v}")
    }
    .map_err(io_err)?;
    Ok(Outcome::Ok)
}

fn io_err(e: std::io::Error) -> Error {
    Error::OutOfRange(format!("write failed: {e}"))
}

fn emit_report(out: &mut dyn Write, json: bool, timing: bool, r: &Report) -> Result<()> {
    if json {
        let text = if timing { r.to_json_timed() } else { r.to_json() };
        writeln!(out, "{text}").map_err(io_err)
    } else {
        let status = serde_json::to_value(r.status).expect("status serializes");
        let mut line = format!("{}: {} ({} checked)", r.property, status.as_str().unwrap_or("?"), r.checked_count);
        if !r.note.is_empty() {
            line.push_str(&format!("; {}", r.note));
        }
        writeln!(out, "{line}").map_err(io_err)?;
        if let Some(w) = &r.witness {
            writeln!(out, "witness: {w}").map_err(io_err)?;
        }
        if timing {
            writeln!(out, "elapsed: {} ms", r.elapsed.as_millis()).map_err(io_err)?;
        }
        Ok(())
    }
}

fn dispatch(cli: &Cli, out: &mut dyn Write) -> Result<Outcome> {
    let caps = parse_caps(&cli.caps)?;
    let json = cli.json;
    match &cli.command {
        Command::Char { lambda, alpha } => {
            let v = character(lambda, alpha)?;
            emit_value(out, json, json!({"lambda": lambda, "alpha": alpha}), &v)
        }
        Command::Kostka { lambda, mu } => {
            if lambda.size() != mu.size() {
                return Err(Error::SizeMismatch(format!("|{lambda}| = {} but |{mu}| = {}", lambda.size(), mu.size())));
            }
            let v = kostka(lambda, mu.parts())?;
            emit_value(out, json, json!({"lambda": lambda, "mu": mu}), &v)
        }
        Command::Lr { lambda, mu, nu } => {
            let v = lr_coefficient(lambda, mu, nu)?;
            emit_value(out, json, json!({"lambda": lambda, "mu": mu, "nu": nu}), &v)
        }
        Command::Kron { lambda, mu, nu, method } => {
            let t = KronTriple::new(lambda.clone(), mu.clone(), nu.clone())?;
            if t.n() > caps.table {
                return Err(Error::CapExceeded(format!("n = {} exceeds table cap {}", t.n(), caps.table)));
            }
            let v = match method {
                KronMethod::Char => kron_char(&t)?,
                KronMethod::Schur => kron_schur_oracle_capped(&t, mu.len(), nu.len(), caps.schur_oracle)?,
            };
            emit_value(out, json, json!({"lambda": lambda, "mu": mu, "nu": nu}), &v)
        }
        Command::Rkron { alpha, beta, gamma } => {
            let v = reduced_kron(&ReducedTriple::new(alpha.clone(), beta.clone(), gamma.clone()))?;
            emit_value(out, json, json!({"alpha": alpha, "beta": beta, "gamma": gamma}), &v)
        }
        Command::PlethHn { d, n } => {
            let v = pleth_hn_expansion(*d, *n, caps.pleth_degree)?;
            if json {
                writeln!(out, "{}", hn_expansion_json(*d, *n, &v)).map_err(io_err)?;
            } else {
                for (lam, a) in v.iter() {
                    writeln!(out, "{lam} {a}").map_err(io_err)?;
                }
            }
            Ok(Outcome::Ok)
        }
        Command::Pleth { target, inner, outer } => {
            let q = PlethQuery::new(inner.clone(), outer.clone(), Some(target.clone()))?;
            let v = pleth_coefficient(&q, caps.pleth_degree)?;
            emit_value(out, json, json!({"target": target, "inner": inner, "outer": outer}), &v)
        }
        Command::Table { kind, n, out: path } => {
            if *n > caps.table {
                return Err(Error::CapExceeded(format!("n = {n} exceeds table cap {}", caps.table)));
            }
            let (text, rows) = match kind {
                TableKind::Kron => {
                    let records = kron_table(*n)?;
                    (records_to_jsonl(&records), records.len())
                }
                TableKind::Char => {
                    let t = character_table(*n, caps.table)?;
                    (t.to_jsonl(), t.shapes.len())
                }
            };
            std::fs::write(path, text)
                .map_err(|e| Error::OutOfRange(format!("cannot write {}: {e}", path.display())))?;
            if json {
                writeln!(out, "{}", json!({"path": path.display().to_string(), "rows": rows.to_string()})).map_err(io_err)?;
            } else {
                writeln!(out, "wrote {rows} rows to {}", path.display()).map_err(io_err)?;
            }
            Ok(Outcome::Ok)
        }
        Command::Verify(args) => verify(args, &caps, json, out),
    }
}

fn verify(args: &VerifyArgs, caps: &Caps, json: bool, out: &mut dyn Write) -> Result<Outcome> {
    let mut params = Params::new();
    for kv in &args.params {
        let (k, v) = kv
            .split_once('=')
            .ok_or_else(|| Error::OutOfRange(format!("parameter {kv:?} is not key=value")))?;
        let v: i64 = v.parse().map_err(|_| Error::OutOfRange(format!("parameter {k} is not an integer")))?;
        params.insert(k.to_string(), v);
    }
    for (name, v) in [("n", args.n), ("k", args.k), ("d", args.d), ("n_min", args.n_min), ("n_max", args.n_max)] {
        if let Some(v) = v {
            params.insert(name.to_string(), v);
        }
    }
    let report = if args.property == "saturation-cex" {
        let k = params.get("k").copied().unwrap_or(3);
        let n_max = params.get("n_max").copied().unwrap_or(4);
        let k = u32::try_from(k).map_err(|_| Error::OutOfRange(format!("k = {k}")))?;
        let n_max = u32::try_from(n_max).map_err(|_| Error::OutOfRange(format!("n_max = {n_max}")))?;
        search_saturation_counterexample(k, n_max, caps)?
    } else {
        run_property_with(&args.property, &params, caps)?
    };
    emit_report(out, json, args.timing, &report)?;
    Ok(match report.status {
        Status::Fail => Outcome::PropertyFailed,
        _ => Outcome::Ok,
    })
}
