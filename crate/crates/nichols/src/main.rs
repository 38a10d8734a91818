use std::io::{self, Write};
use std::path::PathBuf;
use std::process::ExitCode;

use clap::{Args, Parser, Subcommand};
use nichols::cache::TowerCache;
use nichols::config::{Output, PartialConfig, Profile, RunConfig};
use nichols::suites::Suite;
use nichols::{chain_json, hilbert_line, load_tower, parse_lambda, root_system, verify, xi_text, AppError};

#[derive(Parser)]
#[command(name = "nichols", version, about = "Exact verification of Nichols algebra identities for small Weyl groups")]
struct Cli {
    #[command(flatten)]
    flags: Flags,
    #[command(subcommand)]
    command: Command,
}

#[derive(Args)]
struct Flags {
    /// Root system: A2, A3, A4, B2, C2, B3 or G2.
    #[arg(long, global = true)]
    system: Option<String>,
    /// Highest degree of the tower to compute.
    #[arg(long, global = true)]
    max_degree: Option<usize>,
    /// Highest degree checked against the brute-force symmetrizer.
    #[arg(long, global = true)]
    oracle_bound: Option<usize>,
    /// default or extended.
    #[arg(long, global = true)]
    profile: Option<String>,
    /// Directory for cached tower degrees.
    #[arg(long, global = true)]
    cache_dir: Option<PathBuf>,
    /// text or json.
    #[arg(long, global = true)]
    output: Option<String>,
    /// Seed for the sampled group algebra elements.
    #[arg(long, global = true)]
    seed: Option<u64>,
    /// File of key=value lines; flags override it.
    #[arg(long, global = true)]
    config: Option<PathBuf>,
}

#[derive(Subcommand)]
enum Command {
    /// Run verification suites and print the report.
    Verify {
        /// Comma-separated suites, or `all`.
        #[arg(long, default_value = "all")]
        suite: String,
    },
    /// Print the dimensions of the graded pieces.
    Hilbert,
    /// Print the λ-chain of a weight as JSON.
    Chain {
        /// Coordinates in the fundamental weights, e.g. 1,0.
        #[arg(long, allow_hyphen_values = true)]
        lambda: String,
    },
    /// Print the Chevalley element of a weight by degree.
    Xi {
        #[arg(long, allow_hyphen_values = true)]
        lambda: String,
    },
    /// Inspect, clear or verify the tower cache.
    Cache {
        #[command(subcommand)]
        action: CacheAction,
    },
}

#[derive(Subcommand)]
enum CacheAction {
    Inspect,
    Clear,
    Verify {
        /// Only this degree.
        #[arg(long)]
        degree: Option<usize>,
    },
}

fn resolve(flags: Flags) -> Result<RunConfig, AppError> {
    let file = match &flags.config {
        Some(p) => PartialConfig::from_file(p)?,
        None => PartialConfig::default(),
    };
    let cli = PartialConfig {
        system: flags.system,
        max_degree: flags.max_degree,
        oracle_bound: flags.oracle_bound,
        profile: flags.profile.as_deref().map(str::parse::<Profile>).transpose()?,
        cache_dir: flags.cache_dir,
        output: flags.output.as_deref().map(str::parse::<Output>).transpose()?,
        seed: flags.seed,
    };
    Ok(file.overridden_by(cli).resolve()?)
}

fn cache_of(config: &RunConfig) -> Result<TowerCache, AppError> {
    config
        .cache_dir
        .clone()
        .map(TowerCache::new)
        .ok_or_else(|| AppError::Usage(String::from("cache commands need --cache-dir")))
}

fn run(cli: Cli, out: &mut impl Write) -> Result<bool, AppError> {
    let config = resolve(cli.flags)?;
    match cli.command {
        Command::Verify { suite } => {
            let suites = Suite::parse_list(&suite).map_err(AppError::Usage)?;
            let report = verify(&config, &suites)?;
            match config.output {
                Output::Json => writeln!(out, "{}", report.to_json())?,
                Output::Text => write!(out, "{}", report.to_text())?,
            }
            Ok(!report.failed())
        }
        Command::Hilbert => {
            let (tower, _) = load_tower(&config)?;
            writeln!(out, "{}", hilbert_line(&tower))?;
            Ok(true)
        }
        Command::Chain { lambda } => {
            let rs = root_system(&config)?;
            let l = parse_lambda(&rs, &lambda)?;
            writeln!(out, "{}", chain_json(&rs, &l)?)?;
            Ok(true)
        }
        Command::Xi { lambda } => {
            let (tower, _) = load_tower(&config)?;
            let l = parse_lambda(tower.root_system(), &lambda)?;
            write!(out, "{}", xi_text(&config, &tower, &l)?)?;
            Ok(true)
        }
        Command::Cache { action } => {
            let cache = cache_of(&config)?;
            match action {
                CacheAction::Inspect => {
                    for line in cache.inspect()? {
                        writeln!(out, "{line}")?;
                    }
                    Ok(true)
                }
                CacheAction::Clear => {
                    let n = cache.clear()?;
                    writeln!(out, "removed {n} entries")?;
                    Ok(true)
                }
                CacheAction::Verify { degree } => {
                    let rs = root_system(&config)?;
                    let mut ok = true;
                    for (n, verdict) in cache.verify(&rs, degree)? {
                        match verdict {
                            Ok(()) => writeln!(out, "{} degree {n}: ok", rs.kind())?,
                            Err(e) => {
                                ok = false;
                                writeln!(out, "{} degree {n}: {e}", rs.kind())?;
                            }
                        }
                    }
                    Ok(ok)
                }
            }
        }
    }
}

fn main() -> ExitCode {
    let cli = Cli::parse();
    let stdout = io::stdout();
    let mut out = io::BufWriter::new(stdout.lock());
    let result = run(cli, &mut out).and_then(|ok| out.flush().map(|()| ok).map_err(AppError::from));
    match result {
        Ok(true) => ExitCode::SUCCESS,
        Err(AppError::Io(e)) if e.kind() == io::ErrorKind::BrokenPipe => ExitCode::SUCCESS,
        Ok(false) => ExitCode::from(1),
        Err(e) => {
            eprintln!("{e}");
            ExitCode::from(e.exit_code() as u8)
        }
    }
}
