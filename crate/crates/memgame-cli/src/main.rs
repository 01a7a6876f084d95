use std::fs;
use std::io::{self, Write};
use std::path::PathBuf;
use std::process::ExitCode;

use clap::{Args, Parser, Subcommand};
use memgame_cli::config::{Point, SweepConfig};
use memgame_cli::error::{CliError, CliResult};
use memgame_cli::format::{fmt_num, parse_num};
use memgame_cli::{figure, nash, sweep, verify};
use memgame::channels::ChannelSpec;
use memgame::closedform::{closed_payoff_pair, Pairing};
use memgame::equilibrium::CaseId;
use memgame::games::builtin_game;
use memgame::oracle::{oracle_payoffs, GameConfig};

/// Quantum games through noisy channels with memory.
#[derive(Parser)]
#[command(name = "memgame", version)]
struct Cli {
    #[command(subcommand)]
    cmd: Cmd,
}

#[derive(Subcommand)]
enum Cmd {
    /// Payoff pair at one parameter point.
    Payoff(PayoffArgs),
    /// Compare the closed form with the density-matrix oracle.
    Verify {
        #[arg(long, value_parser = pairing)]
        pairing: Pairing,
        #[arg(long, default_value_t = 200)]
        samples: usize,
        #[arg(long, default_value_t = 42)]
        seed: u64,
        #[arg(long, default_value_t = 1e-9, allow_hyphen_values = true)]
        tol: f64,
        /// Draw memoryless channels only.
        #[arg(long)]
        mu_zero: bool,
    },
    /// Evaluate a sweep config and write CSV.
    Sweep {
        config: PathBuf,
        #[arg(long)]
        out: Option<PathBuf>,
    },
    /// CSV data for one of the payoff-versus-memory figures.
    Figure {
        #[arg(long)]
        id: u32,
        #[arg(long)]
        out: Option<PathBuf>,
        /// Print the sweep configs instead of the data.
        #[arg(long)]
        config: bool,
    },
    /// Grid Nash certificate for a case study.
    Nash {
        #[arg(long = "case", value_parser = case)]
        case_id: CaseId,
        #[arg(long, default_value = "13x17x17")]
        grid: String,
        /// Write per-point gains to this CSV file.
        #[arg(long)]
        csv: Option<PathBuf>,
    },
}

#[derive(Args)]
struct PayoffArgs {
    #[arg(long)]
    game: String,
    #[arg(long, value_parser = pairing)]
    pairing: Pairing,
    #[arg(long, value_parser = num, default_value = "0", allow_hyphen_values = true)]
    gamma: f64,
    #[arg(long, value_parser = num, default_value = "0", allow_hyphen_values = true)]
    delta: f64,
    #[arg(long, value_parser = num, default_value = "0", allow_hyphen_values = true)]
    p1: f64,
    #[arg(long, value_parser = num, default_value = "0", allow_hyphen_values = true)]
    mu1: f64,
    #[arg(long, value_parser = num, default_value = "0", allow_hyphen_values = true)]
    p2: f64,
    #[arg(long, value_parser = num, default_value = "0", allow_hyphen_values = true)]
    mu2: f64,
    #[arg(long, value_parser = num, default_value = "0", allow_hyphen_values = true)]
    theta1: f64,
    #[arg(long, value_parser = num, default_value = "0", allow_hyphen_values = true)]
    alpha1: f64,
    #[arg(long, value_parser = num, default_value = "0", allow_hyphen_values = true)]
    beta1: f64,
    #[arg(long, value_parser = num, default_value = "0", allow_hyphen_values = true)]
    theta2: f64,
    #[arg(long, value_parser = num, default_value = "0", allow_hyphen_values = true)]
    alpha2: f64,
    #[arg(long, value_parser = num, default_value = "0", allow_hyphen_values = true)]
    beta2: f64,
    /// Evaluate with the density-matrix simulation instead.
    #[arg(long)]
    oracle: bool,
}

fn num(s: &str) -> Result<f64, String> {
    parse_num(s).map_err(|e| e.to_string())
}

fn pairing(s: &str) -> Result<Pairing, String> {
    Pairing::parse(s).map_err(|_| format!("unknown pairing '{s}'"))
}

fn case(s: &str) -> Result<CaseId, String> {
    CaseId::parse(s).map_err(|_| format!("unknown case '{s}'"))
}

fn emit(path: Option<&PathBuf>, text: &str) -> CliResult<()> {
    match path {
        Some(p) => fs::write(p, text).map_err(|source| CliError::Io { path: p.display().to_string(), source }),
        None => {
            let mut out = io::stdout().lock();
            out.write_all(text.as_bytes()).and_then(|_| out.flush()).map_err(|source| CliError::Io { path: "stdout".into(), source })
        }
    }
}

fn payoff(a: &PayoffArgs) -> CliResult<(f64, f64)> {
    let game = builtin_game(&a.game).map_err(|_| CliError::Usage(format!("unknown game '{}'", a.game)))?;
    let point = Point {
        gamma: a.gamma,
        delta: a.delta,
        p1: a.p1,
        mu1: a.mu1,
        p2: a.p2,
        mu2: a.mu2,
        theta1: a.theta1,
        alpha1: a.alpha1,
        beta1: a.beta1,
        theta2: a.theta2,
        alpha2: a.alpha2,
        beta2: a.beta2,
    };
    let v = point.validate()?;
    Ok(if a.oracle {
        let (k1, k2) = a.pairing.kinds();
        oracle_payoffs(&GameConfig {
            game,
            ch1: ChannelSpec::new(k1, v.n1.p, v.n1.mu)?,
            ch2: ChannelSpec::new(k2, v.n2.p, v.n2.mu)?,
            ent: v.ent,
            s1: v.s1,
            s2: v.s2,
        })?
    } else {
        closed_payoff_pair(a.pairing, &game, &v.ent, &v.s1, &v.s2, v.n1, v.n2)?
    })
}

fn run(cli: Cli) -> CliResult<()> {
    match cli.cmd {
        Cmd::Payoff(a) => {
            let (pa, pb) = payoff(&a)?;
            println!("payoff_a={} payoff_b={}", fmt_num(pa), fmt_num(pb));
            Ok(())
        }
        Cmd::Verify { pairing, samples, seed, tol, mu_zero } => {
            let r = verify::verify(pairing, samples, seed, mu_zero)?;
            println!(
                "pairing={} samples={} seed={} memory={} max_abs_diff={} tol={}",
                pairing.id(),
                samples,
                seed,
                if mu_zero { "off" } else { "on" },
                fmt_num(r.max_abs_diff),
                fmt_num(tol)
            );
            if r.max_abs_diff <= tol {
                Ok(())
            } else {
                Err(CliError::Failed(format!("sample {} differs by {}", r.worst, fmt_num(r.max_abs_diff))))
            }
        }
        Cmd::Sweep { config, out } => {
            let text = fs::read_to_string(&config)
                .map_err(|source| CliError::Io { path: config.display().to_string(), source })?;
            let cfg = SweepConfig::parse(&text)?;
            emit(out.as_ref(), &sweep::to_csv(&sweep::evaluate(&cfg)?))
        }
        Cmd::Figure { id, out, config } => {
            if config {
                let texts: Vec<String> = figure::figure_configs(id)?.iter().map(SweepConfig::to_text).collect();
                emit(out.as_ref(), &texts.join("\n"))
            } else {
                emit(out.as_ref(), &sweep::to_csv(&figure::figure_rows(id)?))
            }
        }
        Cmd::Nash { case_id, grid, csv } => {
            let r = nash::run(case_id, &grid)?;
            print!("{}", nash::summary(&r));
            if let Some(p) = csv.as_ref() {
                emit(Some(p), &nash::gains_csv(&r))?;
            }
            if r.all_nash() {
                Ok(())
            } else {
                Err(CliError::Failed(format!("case {}: profile is not a grid epsilon-Nash point everywhere", case_id.id())))
            }
        }
    }
}

fn main() -> ExitCode {
    let cli = match Cli::try_parse() {
        Ok(c) => c,
        Err(e) => {
            let _ = e.print();
            return ExitCode::from(if e.use_stderr() { 2 } else { 0 });
        }
    };
    match run(cli) {
        Ok(()) => ExitCode::SUCCESS,
        Err(e) => {
            eprintln!("memgame: {e}");
            ExitCode::from(e.exit_code() as u8)
        }
    }
}
