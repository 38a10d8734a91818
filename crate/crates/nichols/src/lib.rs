//! Command-line driver for the `nichols-core` verification library:
//! configuration, the tower cache, the check suites and their reports.

pub mod cache;
pub mod config;
pub mod report;
pub mod suites;

use std::fmt;

use nichols_core::alcove::lambda_chain;
use nichols_core::kmodel::KModel;
use nichols_core::nichols::Tower;
use nichols_core::rootsys::{RootSystem, Weight};
use serde::Serialize;

use crate::cache::{LoadStats, TowerCache};
use crate::config::{Profile, RunConfig};
use crate::report::Report;
use crate::suites::{run_suites, Suite};

#[derive(Debug)]
pub enum AppError {
    /// Bad flags, configuration or arguments.
    Usage(String),
    Io(std::io::Error),
    Compute(nichols_core::Error),
}

impl AppError {
    pub fn exit_code(&self) -> i32 {
        match self {
            AppError::Usage(_) => 2,
            _ => 1,
        }
    }
}

impl fmt::Display for AppError {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            AppError::Usage(s) => write!(f, "usage error: {s}"),
            AppError::Io(e) => write!(f, "filesystem error: {e}"),
            AppError::Compute(e) => write!(f, "{e}"),
        }
    }
}

impl std::error::Error for AppError {}

impl From<std::io::Error> for AppError {
    fn from(e: std::io::Error) -> Self {
        AppError::Io(e)
    }
}

impl From<nichols_core::Error> for AppError {
    fn from(e: nichols_core::Error) -> Self {
        AppError::Compute(e)
    }
}

impl From<config::ConfigError> for AppError {
    fn from(e: config::ConfigError) -> Self {
        AppError::Usage(e.0)
    }
}

pub fn root_system(config: &RunConfig) -> Result<RootSystem, AppError> {
    Ok(RootSystem::build(config.system)?)
}

/// The tower through `max_degree`, through the cache when one is configured.
pub fn load_tower(config: &RunConfig) -> Result<(Tower, Option<LoadStats>), AppError> {
    let rs = root_system(config)?;
    match &config.cache_dir {
        Some(dir) => {
            let (t, stats) = TowerCache::new(dir).build(rs, config.max_degree)?;
            Ok((t, Some(stats)))
        }
        None => Ok((Tower::build(rs, config.max_degree), None)),
    }
}

pub fn verify(config: &RunConfig, suites: &[Suite]) -> Result<Report, AppError> {
    let (tower, _) = load_tower(config)?;
    Ok(verify_tower(config, &tower, suites))
}

pub fn verify_tower(config: &RunConfig, tower: &Tower, suites: &[Suite]) -> Report {
    let run = run_suites(config, tower, suites);
    let name = if suites.len() == suites::ALL_SUITES.len() {
        String::from("all")
    } else {
        suites.iter().map(|s| s.name()).collect::<Vec<_>>().join(",")
    };
    Report::new(&name, config, tower.dims(), tower.is_closed(), &run)
}

/// Dimensions up to the last nonzero one, with `(closed)` once the tower
/// is known to be finite.
pub fn hilbert_line(tower: &Tower) -> String {
    let dims = tower.dims();
    let end = if tower.is_closed() { tower.top_degree() + 1 } else { dims.len() };
    let mut s = dims[..end].iter().map(|d| d.to_string()).collect::<Vec<_>>().join(" ");
    if tower.is_closed() {
        s.push_str(" (closed)");
    }
    s
}

/// A weight from comma-separated coordinates in the fundamental weights.
pub fn parse_lambda(rs: &RootSystem, s: &str) -> Result<Weight, AppError> {
    let coords: Vec<i64> = s
        .split(',')
        .map(|c| c.trim().parse::<i64>())
        .collect::<Result<_, _>>()
        .map_err(|_| AppError::Usage(format!("lambda `{s}` must be comma-separated integers")))?;
    if coords.len() != rs.rank() {
        return Err(AppError::Usage(format!(
            "lambda needs {} coordinates for {}",
            rs.rank(),
            rs.kind()
        )));
    }
    Ok(rs.weight(&coords))
}

#[derive(Serialize)]
struct ChainStep {
    root: Vec<i64>,
    level: i64,
}

#[derive(Serialize)]
struct ChainJson {
    lambda: Vec<i64>,
    steps: Vec<ChainStep>,
}

/// `{"lambda": [...], "steps": [{"root": [...], "level": k}]}` with `λ` in
/// fundamental-weight coordinates and roots in ambient coordinates.
pub fn chain_json(rs: &RootSystem, lambda: &Weight) -> Result<String, AppError> {
    let chain = lambda_chain(rs, lambda)?;
    let integral = |v: Option<Vec<i64>>| v.ok_or_else(|| AppError::Compute(nichols_core::Error::Internal(String::from("non-integral coordinates"))));
    let fundamental = Weight::new(rs.fundamental_coords(lambda));
    let j = ChainJson {
        lambda: integral(fundamental.to_ints())?,
        steps: chain
            .steps
            .iter()
            .map(|s| {
                Ok(ChainStep {
                    root: integral(rs.root(s.root).to_ints())?,
                    level: s.level,
                })
            })
            .collect::<Result<_, AppError>>()?,
    };
    Ok(serde_json::to_string_pretty(&j).expect("chains serialize"))
}

/// `Ξ^[λ]` one degree per line.
pub fn xi_text(config: &RunConfig, tower: &Tower, lambda: &Weight) -> Result<String, AppError> {
    let model = if config.profile == Profile::Extended && !tower.is_closed() {
        KModel::filtered(tower, tower.computed_degree())?
    } else {
        KModel::new(tower)
    };
    let x = model.xi(lambda)?.element;
    let mut out = format!("Xi^[{lambda}] in {}", tower.root_system().kind());
    if let Some(cap) = model.cap() {
        out.push_str(&format!(" modulo degrees above {cap}"));
    }
    out.push('\n');
    for (d, _) in x.components() {
        out.push_str(&format!("degree {d}: {}\n", tower.format_element(&x.homogeneous(d))));
    }
    Ok(out)
}
