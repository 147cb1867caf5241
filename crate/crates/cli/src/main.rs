mod cache;
mod compute;
mod config;

use std::io::Write;
use std::path::PathBuf;
use std::process::ExitCode;

use clap::{Parser, Subcommand};
use qtshuffle_core::verify::{all_passed, jobs, report_json, run_jobs, Check, CheckResult, Job, Profile};

use config::{Config, Output, Threads};

/// Exit code 1 for failed checks or computations, 2 for usage errors.
#[derive(Debug)]
pub enum Failure {
    Usage(String),
    Check(String),
}

#[derive(Parser)]
#[command(name = "qtshuffle", version, about = "q,t symmetric functions, parking functions and LLT tableaux")]
struct Cli {
    /// Directory for Macdonald tables and config.toml.
    #[arg(long, global = true, env = "QTSHUFFLE_CACHE_DIR")]
    cache_dir: Option<PathBuf>,
    /// Worker threads, or "auto".
    #[arg(long, global = true, env = "QTSHUFFLE_THREADS")]
    threads: Option<Threads>,
    #[arg(long, global = true, env = "QTSHUFFLE_OUTPUT", value_enum)]
    output: Option<Output>,
    /// Run past the size limits.
    #[arg(long, global = true, env = "QTSHUFFLE_FORCE")]
    force: bool,
    #[command(subcommand)]
    command: Command,
}

#[derive(Subcommand)]
enum Command {
    /// Compute one object and print it.
    Compute {
        #[arg(value_enum)]
        object: compute::Object,
        #[arg(long, env = "QTSHUFFLE_N")]
        n: Option<usize>,
        #[arg(long, env = "QTSHUFFLE_M")]
        m: Option<usize>,
        /// A partition such as 3,1.
        #[arg(long, env = "QTSHUFFLE_MU")]
        mu: Option<String>,
        #[arg(long, env = "QTSHUFFLE_ETA")]
        eta: Option<String>,
        /// Substitutions such as q=1,t=1 or t=q^-1.
        #[arg(long, env = "QTSHUFFLE_EVAL")]
        eval: Option<String>,
    },
    /// Run identity checks.
    Verify {
        #[arg(long, env = "QTSHUFFLE_PROFILE", default_value = "quick")]
        profile: String,
        /// Comma-separated check names.
        #[arg(long, env = "QTSHUFFLE_ONLY")]
        only: Option<String>,
        #[arg(long, env = "QTSHUFFLE_N")]
        n: Option<usize>,
        #[arg(long, env = "QTSHUFFLE_M")]
        m: Option<usize>,
    },
    /// Manage cached Macdonald tables.
    Cache {
        #[arg(value_enum)]
        action: cache::Action,
        /// Degree; all degrees when omitted.
        #[arg(long, env = "QTSHUFFLE_N")]
        n: Option<usize>,
    },
}

fn main() -> ExitCode {
    let cli = Cli::parse();
    match run(cli) {
        Ok(code) => code,
        Err(Failure::Usage(msg)) => {
            eprintln!("error: {msg}");
            ExitCode::from(2)
        }
        Err(Failure::Check(msg)) => {
            eprintln!("error: {msg}");
            ExitCode::from(1)
        }
    }
}

fn run(cli: Cli) -> Result<ExitCode, Failure> {
    let cfg = Config::resolve(cli.cache_dir, cli.threads, cli.output, cli.force)?;
    if let Threads::Count(k) = cfg.threads {
        rayon::ThreadPoolBuilder::new()
            .num_threads(k)
            .build_global()
            .map_err(|e| Failure::Check(e.to_string()))?;
    }
    let mut out = std::io::stdout().lock();
    match cli.command {
        Command::Compute { object, n, m, mu, eta, eval } => {
            let req = compute::Request {
                object,
                n,
                m,
                mu: mu.as_deref().map(compute::parse_partition).transpose()?,
                eta: eta.as_deref().map(compute::parse_partition).transpose()?,
                eval: eval.as_deref().map(compute::parse_eval).transpose()?.unwrap_or_default(),
            };
            cache::preload(&cfg.cache_dir, compute::degrees(&req))?;
            let rows = compute::run(&req, &cfg)?;
            write_rows(&mut out, cfg.output, &rows)?;
            Ok(ExitCode::SUCCESS)
        }
        Command::Verify { profile, only, n, m } => {
            let profile: Profile = profile.parse().map_err(|e| Failure::Usage(format!("{e}")))?;
            let selected = select_jobs(profile, only.as_deref(), n, m, &cfg)?;
            let degrees: Vec<usize> = selected.iter().filter(|j| !j.check.is_ribbon_check()).map(|j| j.n).collect();
            cache::preload(&cfg.cache_dir, degrees)?;
            let results = run_jobs(&selected);
            write_results(&mut out, cfg.output, &results)?;
            Ok(if all_passed(&results) { ExitCode::SUCCESS } else { ExitCode::from(1) })
        }
        Command::Cache { action, n } => {
            let entries = cache::run(&cfg.cache_dir, action, n, cfg.bounds.nabla)?;
            write_cache(&mut out, cfg.output, &entries)?;
            Ok(ExitCode::SUCCESS)
        }
    }
}

fn uses_nabla(c: Check) -> bool {
    matches!(c, Check::Main | Check::SpecQZero | Check::Enk | Check::EnkIdentities)
}

fn select_jobs(
    profile: Profile,
    only: Option<&str>,
    n: Option<usize>,
    m: Option<usize>,
    cfg: &Config,
) -> Result<Vec<Job>, Failure> {
    let checks: Option<Vec<Check>> = only
        .map(|s| {
            s.split(',')
                .map(|x| x.trim().parse::<Check>().map_err(|e| Failure::Usage(format!("{e}"))))
                .collect()
        })
        .transpose()?;
    let selected: Vec<Job> = match (&checks, n) {
        (Some(cs), Some(n)) => cs
            .iter()
            .map(|&c| {
                if c.is_ribbon_check() {
                    Job::ribbon(c, n, profile.ribbon_size(c))
                } else {
                    Job::new(c, n, m.unwrap_or(1))
                }
            })
            .collect(),
        _ => jobs(profile)
            .into_iter()
            .filter(|j| checks.as_ref().map_or(true, |cs| cs.contains(&j.check)))
            .filter(|j| n.map_or(true, |n| j.n == n) && m.map_or(true, |m| j.m == m))
            .collect(),
    };
    if selected.is_empty() {
        return Err(Failure::Usage("no checks match the selection".into()));
    }
    if n.is_some() {
        for j in &selected {
            let limit = if uses_nabla(j.check) {
                cfg.bounds.nabla_limit(j.m)
            } else if j.check.is_ribbon_check() {
                cfg.bounds.llt_size
            } else {
                cfg.bounds.enumeration
            };
            cfg.guard(j.check.name(), j.n, limit)?;
        }
    }
    Ok(selected)
}

fn io_err(e: impl std::fmt::Display) -> Failure {
    Failure::Check(format!("writing output: {e}"))
}

fn write_rows(out: &mut impl Write, fmt: Output, rows: &[compute::Row]) -> Result<(), Failure> {
    match fmt {
        Output::Text => {
            for r in rows {
                if rows.len() == 1 && r.extra.is_empty() {
                    writeln!(out, "{}", r.value).map_err(io_err)?;
                } else {
                    writeln!(out, "{} n={} m={} {}: {}", r.name, r.n, r.m, r.extra, r.value).map_err(io_err)?;
                }
            }
        }
        Output::Json => {
            let v: Vec<serde_json::Value> = rows
                .iter()
                .map(|r| {
                    let value = match &r.value {
                        compute::Value::Sym(f) => f.to_json(),
                        compute::Value::Scalar(c) => serde_json::Value::String(c.to_string()),
                    };
                    serde_json::json!({"name": r.name, "n": r.n, "m": r.m, "extra": r.extra, "value": value})
                })
                .collect();
            writeln!(out, "{}", serde_json::to_string_pretty(&v).map_err(io_err)?).map_err(io_err)?;
        }
        Output::Csv => {
            let mut w = csv::Writer::from_writer(out);
            w.write_record(["name", "n", "m", "extra", "polynomial"]).map_err(io_err)?;
            for r in rows {
                w.write_record([r.name.clone(), r.n.to_string(), r.m.to_string(), r.extra.clone(), r.value.to_string()])
                    .map_err(io_err)?;
            }
            w.flush().map_err(io_err)?;
        }
    }
    Ok(())
}

fn write_results(out: &mut impl Write, fmt: Output, results: &[CheckResult]) -> Result<(), Failure> {
    match fmt {
        Output::Text => {
            for r in results {
                writeln!(out, "{r}").map_err(io_err)?;
            }
            let failed = results.iter().filter(|r| !r.passed()).count();
            writeln!(out, "{} checks, {} failed", results.len(), failed).map_err(io_err)?;
        }
        Output::Json => {
            writeln!(out, "{}", serde_json::to_string_pretty(&report_json(results)).map_err(io_err)?)
                .map_err(io_err)?;
        }
        Output::Csv => {
            let mut w = csv::Writer::from_writer(out);
            w.write_record(["name", "n", "m", "extra", "status", "elapsed", "witness"]).map_err(io_err)?;
            for r in results {
                let extra: Vec<String> = r.params.extra.iter().map(|(k, v)| format!("{k}={v}")).collect();
                w.write_record([
                    r.name.clone(),
                    r.params.n.to_string(),
                    r.params.m.to_string(),
                    extra.join(" "),
                    r.status.to_string(),
                    format!("{:.3}", r.elapsed),
                    r.witness.clone().unwrap_or_default(),
                ])
                .map_err(io_err)?;
            }
            w.flush().map_err(io_err)?;
        }
    }
    Ok(())
}

fn write_cache(out: &mut impl Write, fmt: Output, entries: &[cache::Entry]) -> Result<(), Failure> {
    match fmt {
        Output::Json => {
            writeln!(out, "{}", serde_json::to_string_pretty(entries).map_err(io_err)?).map_err(io_err)?;
        }
        Output::Csv => {
            let mut w = csv::Writer::from_writer(out);
            for e in entries {
                w.serialize(e).map_err(io_err)?;
            }
            w.flush().map_err(io_err)?;
        }
        Output::Text => {
            for e in entries {
                writeln!(out, "degree {}: {} ({})", e.degree, e.status, e.path).map_err(io_err)?;
            }
        }
    }
    Ok(())
}
