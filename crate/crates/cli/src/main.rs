//! `cotor`: enumerate, inspect and mutate cotorsion pairs from the shell.
//!
//! Exit codes: 0 success, 1 property violation, 2 invalid input,
//! 3 inconclusive (search cap exhausted; 0 with `--allow-inconclusive`).

mod commands;
mod report;

use std::fs;
use std::io::Write;
use std::path::PathBuf;
use std::process::ExitCode;

use clap::{Args, Parser, Subcommand};
use cotor::suites::Outcome;
use cotor::{BackendSpec, CatError, StarConfig};

use commands::TcpFilters;
use report::{Body, Report, SCHEMA};

#[derive(Parser)]
#[command(
    name = "cotor",
    version,
    about = "Cotorsion pairs, twin pairs and mutation over finite triangulated categories"
)]
struct Cli {
    #[command(flatten)]
    global: Global,
    #[command(subcommand)]
    command: Command,
}

#[derive(Args)]
struct Global {
    /// `nakayama:m=M,n=N` or `polygon:N=N`.
    #[arg(long, global = true, default_value = "nakayama:m=2,n=2")]
    backend: String,
    /// Largest number of summands tried on the left of a star search.
    #[arg(long, global = true, default_value_t = 4)]
    cap: usize,
    /// Worker threads (defaults to all cores).
    #[arg(long, global = true)]
    jobs: Option<usize>,
    /// Seed for sampled checks.
    #[arg(long, global = true, default_value_t = 0)]
    seed: u64,
    /// Write the report here instead of stdout.
    #[arg(long, global = true)]
    out: Option<PathBuf>,
    /// Exit 0 instead of 3 when some verdict is inconclusive.
    #[arg(long, global = true)]
    allow_inconclusive: bool,
}

#[derive(Subcommand)]
enum Command {
    /// List all cotorsion pairs.
    EnumerateCp,
    /// List twin cotorsion pairs with their conditions.
    EnumerateTcp {
        #[arg(long)]
        concentric: bool,
        #[arg(long)]
        hovey: bool,
        #[arg(long = "cond-I")]
        cond_i: bool,
        #[arg(long = "cond-II")]
        cond_ii: bool,
        #[arg(long = "cond-III")]
        cond_iii: bool,
    },
    /// Check one pair (`--pair "U=[..];V=[..]"`) or twin pair (`--tcp ..`).
    InspectPair {
        #[arg(long)]
        pair: Option<String>,
        #[arg(long)]
        tcp: Option<String>,
    },
    /// The quotient Z/I of a twin pair, or the polygon cut along `--i`.
    Reduce {
        #[arg(long)]
        tcp: Option<String>,
        #[arg(long)]
        i: Option<String>,
    },
    /// Apply the mutation μ_k to a mutable pair.
    Mutate {
        #[arg(long)]
        tcp: Option<String>,
        #[arg(long)]
        i: Option<String>,
        #[arg(long)]
        pair: String,
        #[arg(long, allow_hyphen_values = true, default_value_t = 1)]
        k: i64,
    },
    /// Run property suites (comma separated, or `all`).
    Verify {
        #[arg(long, default_value = "all")]
        suite: String,
    },
    /// Mutation orbits as a Graphviz digraph.
    OrbitGraph {
        #[arg(long)]
        tcp: Option<String>,
        #[arg(long)]
        i: Option<String>,
    },
    /// Look for a dictionary between `--backend` and `--other`.
    MatchBackends {
        #[arg(long)]
        other: String,
    },
    /// Counts and suite outcomes over several Nakayama categories.
    Census {
        #[arg(long, default_value = "1x3,1x4,2x2,2x3,3x2")]
        instances: String,
    },
}

impl Command {
    fn name(&self) -> &'static str {
        match self {
            Command::EnumerateCp => "enumerate-cp",
            Command::EnumerateTcp { .. } => "enumerate-tcp",
            Command::InspectPair { .. } => "inspect-pair",
            Command::Reduce { .. } => "reduce",
            Command::Mutate { .. } => "mutate",
            Command::Verify { .. } => "verify",
            Command::OrbitGraph { .. } => "orbit-graph",
            Command::MatchBackends { .. } => "match-backends",
            Command::Census { .. } => "census",
        }
    }
}

fn run(cli: &Cli) -> Result<(Outcome, String), CatError> {
    let g = &cli.global;
    if g.cap < 2 {
        return Err(CatError::Invalid("--cap must be at least 2".into()));
    }
    if let Some(j) = g.jobs {
        rayon::ThreadPoolBuilder::new()
            .num_threads(j)
            .build_global()
            .map_err(|e| CatError::Invalid(format!("--jobs: {e}")))?;
    }
    let cfg = StarConfig {
        cap: g.cap,
        ..StarConfig::default()
    };
    let spec: BackendSpec = g.backend.parse()?;
    let backend = spec.build()?;
    let out = match &cli.command {
        Command::EnumerateCp => commands::enumerate_cp(&backend, cfg)?,
        Command::EnumerateTcp {
            concentric,
            hovey,
            cond_i,
            cond_ii,
            cond_iii,
        } => commands::enumerate_tcp(
            &backend,
            cfg,
            TcpFilters {
                concentric: *concentric,
                hovey: *hovey,
                cond_i: *cond_i,
                cond_ii: *cond_ii,
                cond_iii: *cond_iii,
            },
        )?,
        Command::InspectPair { pair, tcp } => commands::inspect_pair(&backend, cfg, pair.as_deref(), tcp.as_deref())?,
        Command::Reduce { tcp, i } => commands::reduce(&backend, cfg, tcp, i)?,
        Command::Mutate { tcp, i, pair, k } => commands::mutate(&backend, cfg, tcp, i, pair, *k)?,
        Command::Verify { suite } => commands::verify(&backend, cfg, suite, g.seed)?,
        Command::OrbitGraph { tcp, i } => commands::orbit_graph(&backend, cfg, tcp, i)?,
        Command::MatchBackends { other } => commands::match_cmd(&backend, other)?,
        Command::Census { instances } => commands::census(cfg, instances, g.seed)?,
    };
    let text = match out.body {
        Body::Text(t) => t,
        Body::Json(result) => {
            let dyn_backend = backend.as_dyn();
            let report = Report {
                schema: SCHEMA,
                tool_version: env!("CARGO_PKG_VERSION"),
                command: cli.command.name().to_string(),
                backend: dyn_backend.spec(),
                caps: dyn_backend.caps(),
                cap: g.cap,
                seed: g.seed,
                outcome: out.outcome,
                result,
            };
            let mut s = serde_json::to_string_pretty(&report).map_err(|e| CatError::Internal(e.to_string()))?;
            s.push('\n');
            s
        }
    };
    Ok((out.outcome, text))
}

fn exit_code(res: &Result<Outcome, CatError>, allow_inconclusive: bool) -> u8 {
    match res {
        Ok(Outcome::Pass) => 0,
        Ok(Outcome::Violation) | Err(CatError::Internal(_)) => 1,
        Err(CatError::Invalid(_) | CatError::Unsupported(_)) => 2,
        Ok(Outcome::Inconclusive) | Err(CatError::Inconclusive(_)) => {
            if allow_inconclusive {
                0
            } else {
                3
            }
        }
    }
}

fn main() -> ExitCode {
    let cli = Cli::parse();
    let allow = cli.global.allow_inconclusive;
    let (code, text) = match run(&cli) {
        Ok((outcome, text)) => (exit_code(&Ok(outcome), allow), Some(text)),
        Err(err) => {
            eprintln!("error: {err}");
            (exit_code(&Err(err), allow), None)
        }
    };
    if let Some(text) = text {
        let written = match &cli.global.out {
            Some(path) => fs::write(path, &text),
            None => std::io::stdout().write_all(text.as_bytes()),
        };
        if let Err(e) = written {
            eprintln!("error: cannot write report: {e}");
            return ExitCode::from(2);
        }
    }
    ExitCode::from(code)
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn exit_codes() {
        assert_eq!(exit_code(&Ok(Outcome::Pass), false), 0);
        assert_eq!(exit_code(&Ok(Outcome::Violation), true), 1);
        assert_eq!(exit_code(&Err(CatError::Internal("x".into())), false), 1);
        assert_eq!(exit_code(&Err(CatError::Invalid("x".into())), false), 2);
        assert_eq!(exit_code(&Err(CatError::Unsupported("x")), false), 2);
        assert_eq!(exit_code(&Ok(Outcome::Inconclusive), false), 3);
        assert_eq!(exit_code(&Ok(Outcome::Inconclusive), true), 0);
        assert_eq!(exit_code(&Err(CatError::Inconclusive("x".into())), false), 3);
    }
}
