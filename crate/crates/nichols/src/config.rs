//! Run configuration: a `key=value` file overridden by command-line flags.

use std::fmt;
use std::fs;
use std::path::{Path, PathBuf};
use std::str::FromStr;

use nichols_core::rootsys::{Family, SystemKind};

#[derive(Clone, Copy, Debug, PartialEq, Eq, Default)]
pub enum Profile {
    #[default]
    Default,
    Extended,
}

impl FromStr for Profile {
    type Err = ConfigError;
    fn from_str(s: &str) -> Result<Self, ConfigError> {
        match s.to_ascii_lowercase().as_str() {
            "default" => Ok(Profile::Default),
            "extended" => Ok(Profile::Extended),
            _ => Err(ConfigError(format!("unknown profile `{s}`"))),
        }
    }
}

impl fmt::Display for Profile {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(match self {
            Profile::Default => "default",
            Profile::Extended => "extended",
        })
    }
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Default)]
pub enum Output {
    #[default]
    Text,
    Json,
}

impl FromStr for Output {
    type Err = ConfigError;
    fn from_str(s: &str) -> Result<Self, ConfigError> {
        match s.to_ascii_lowercase().as_str() {
            "text" => Ok(Output::Text),
            "json" => Ok(Output::Json),
            _ => Err(ConfigError(format!("unknown output format `{s}`"))),
        }
    }
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct ConfigError(pub String);

impl fmt::Display for ConfigError {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(&self.0)
    }
}

impl std::error::Error for ConfigError {}

pub const DEFAULT_ORACLE_BOUND: usize = 6;
pub const DEFAULT_SEED: u64 = 1;

/// Largest degree to compute when none is configured.  Closed towers stop
/// earlier on their own.
pub fn default_max_degree(kind: SystemKind, profile: Profile) -> usize {
    let extended = profile == Profile::Extended;
    match (kind.family(), kind.rank()) {
        (Family::A, 2) => 8,
        (Family::B | Family::C, 2) => 10,
        (Family::A, 3) => 14,
        (Family::G, _) if extended => 6,
        (Family::G, _) => 4,
        (Family::B | Family::C, 3) if extended => 5,
        _ => 4,
    }
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct RunConfig {
    pub system: SystemKind,
    pub max_degree: usize,
    pub oracle_bound: usize,
    pub profile: Profile,
    pub cache_dir: Option<PathBuf>,
    pub output: Output,
    pub seed: u64,
}

/// Settings as read from a file or flags; unset keys stay `None`.
#[derive(Clone, Debug, Default, PartialEq, Eq)]
pub struct PartialConfig {
    pub system: Option<String>,
    pub max_degree: Option<usize>,
    pub oracle_bound: Option<usize>,
    pub profile: Option<Profile>,
    pub cache_dir: Option<PathBuf>,
    pub output: Option<Output>,
    pub seed: Option<u64>,
}

fn parse_num<T: FromStr>(key: &str, v: &str) -> Result<T, ConfigError> {
    v.parse()
        .map_err(|_| ConfigError(format!("`{key}` expects a non-negative integer, got `{v}`")))
}

impl PartialConfig {
    pub fn parse(text: &str) -> Result<Self, ConfigError> {
        let mut c = PartialConfig::default();
        for (no, line) in text.lines().enumerate() {
            let line = line.split('#').next().unwrap_or("").trim();
            if line.is_empty() {
                continue;
            }
            let (k, v) = line
                .split_once('=')
                .ok_or_else(|| ConfigError(format!("line {}: expected key=value", no + 1)))?;
            let (k, v) = (k.trim().replace('-', "_"), v.trim());
            match k.as_str() {
                "system" => c.system = Some(v.to_string()),
                "max_degree" => c.max_degree = Some(parse_num(&k, v)?),
                "oracle_bound" => c.oracle_bound = Some(parse_num(&k, v)?),
                "profile" => c.profile = Some(v.parse()?),
                "cache_dir" => c.cache_dir = Some(PathBuf::from(v)),
                "output" => c.output = Some(v.parse()?),
                "seed" => c.seed = Some(parse_num(&k, v)?),
                _ => return Err(ConfigError(format!("line {}: unknown key `{k}`", no + 1))),
            }
        }
        Ok(c)
    }

    pub fn from_file(path: &Path) -> Result<Self, ConfigError> {
        let text = fs::read_to_string(path)
            .map_err(|e| ConfigError(format!("cannot read {}: {e}", path.display())))?;
        Self::parse(&text)
    }

    /// `self` with every key set in `flags` replaced.
    pub fn overridden_by(self, flags: PartialConfig) -> PartialConfig {
        PartialConfig {
            system: flags.system.or(self.system),
            max_degree: flags.max_degree.or(self.max_degree),
            oracle_bound: flags.oracle_bound.or(self.oracle_bound),
            profile: flags.profile.or(self.profile),
            cache_dir: flags.cache_dir.or(self.cache_dir),
            output: flags.output.or(self.output),
            seed: flags.seed.or(self.seed),
        }
    }

    pub fn resolve(self) -> Result<RunConfig, ConfigError> {
        let label = self.system.unwrap_or_else(|| String::from("A2"));
        let system: SystemKind = label.parse().map_err(|e| ConfigError(format!("{e}")))?;
        let profile = self.profile.unwrap_or_default();
        let max_degree = self.max_degree.unwrap_or_else(|| default_max_degree(system, profile));
        if max_degree < 1 {
            return Err(ConfigError(String::from("max_degree must be at least 1")));
        }
        let oracle_bound = self.oracle_bound.unwrap_or(DEFAULT_ORACLE_BOUND);
        if oracle_bound > DEFAULT_ORACLE_BOUND && profile != Profile::Extended {
            return Err(ConfigError(format!(
                "oracle_bound above {DEFAULT_ORACLE_BOUND} needs the extended profile"
            )));
        }
        Ok(RunConfig {
            system,
            max_degree,
            oracle_bound,
            profile,
            cache_dir: self.cache_dir,
            output: self.output.unwrap_or_default(),
            seed: self.seed.unwrap_or(DEFAULT_SEED),
        })
    }
}
