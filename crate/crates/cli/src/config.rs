use std::path::{Path, PathBuf};
use std::str::FromStr;

use serde::Deserialize;

use crate::Failure;

#[derive(Clone, Copy, Debug, PartialEq, Eq, Deserialize, clap::ValueEnum)]
#[serde(rename_all = "lowercase")]
pub enum Output {
    Json,
    Csv,
    Text,
}

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum Threads {
    Auto,
    Count(usize),
}

impl FromStr for Threads {
    type Err = String;
    fn from_str(s: &str) -> Result<Self, String> {
        if s == "auto" {
            return Ok(Threads::Auto);
        }
        match s.parse::<usize>() {
            Ok(k) if k > 0 => Ok(Threads::Count(k)),
            _ => Err(format!("threads must be a positive integer or \"auto\", got {s:?}")),
        }
    }
}

impl<'de> Deserialize<'de> for Threads {
    fn deserialize<D: serde::Deserializer<'de>>(d: D) -> Result<Self, D::Error> {
        #[derive(Deserialize)]
        #[serde(untagged)]
        enum Raw {
            Int(usize),
            Str(String),
        }
        match Raw::deserialize(d)? {
            Raw::Int(k) => Threads::from_str(&k.to_string()),
            Raw::Str(s) => Threads::from_str(&s),
        }
        .map_err(serde::de::Error::custom)
    }
}

/// Largest `n` accepted without `--force`.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Deserialize)]
#[serde(default, deny_unknown_fields)]
pub struct Bounds {
    /// Macdonald-side work (∇, E_{n,k}, H̃_μ) with `m = 1`.
    pub nabla: usize,
    /// Macdonald-side work with `m ≥ 2`.
    pub nabla_higher: usize,
    /// Enumeration of flag-strip fillings.
    pub enumeration: usize,
    /// `|μ|` for LLT polynomials.
    pub llt_size: usize,
}

impl Default for Bounds {
    fn default() -> Self {
        Bounds { nabla: 6, nabla_higher: 4, enumeration: 8, llt_size: 12 }
    }
}

impl Bounds {
    pub fn nabla_limit(&self, m: usize) -> usize {
        if m <= 1 {
            self.nabla
        } else {
            self.nabla_higher
        }
    }
}

#[derive(Debug, Default, Deserialize)]
#[serde(default, deny_unknown_fields)]
struct FileConfig {
    threads: Option<Threads>,
    output: Option<Output>,
    bounds: Bounds,
}

#[derive(Clone, Debug)]
pub struct Config {
    pub cache_dir: PathBuf,
    pub threads: Threads,
    pub output: Output,
    pub bounds: Bounds,
    pub force: bool,
}

pub fn default_cache_dir() -> PathBuf {
    if let Some(x) = std::env::var_os("XDG_CACHE_HOME").filter(|x| !x.is_empty()) {
        return PathBuf::from(x).join("qtshuffle");
    }
    if let Some(h) = std::env::var_os("HOME").filter(|x| !x.is_empty()) {
        return PathBuf::from(h).join(".cache").join("qtshuffle");
    }
    PathBuf::from(".qtshuffle-cache")
}

pub fn config_path(cache_dir: &Path) -> PathBuf {
    cache_dir.join("config.toml")
}

fn read_file_config(path: &Path) -> Result<FileConfig, Failure> {
    match std::fs::read_to_string(path) {
        Ok(text) => toml::from_str(&text).map_err(|e| Failure::Usage(format!("{}: {e}", path.display()))),
        Err(e) if e.kind() == std::io::ErrorKind::NotFound => Ok(FileConfig::default()),
        Err(e) => Err(Failure::Usage(format!("{}: {e}", path.display()))),
    }
}

impl Config {
    /// Defaults, then the config file in the cache directory, then the
    /// environment and flags (already merged by the argument parser).
    pub fn resolve(
        cache_dir: Option<PathBuf>,
        threads: Option<Threads>,
        output: Option<Output>,
        force: bool,
    ) -> Result<Config, Failure> {
        let cache_dir = cache_dir.unwrap_or_else(default_cache_dir);
        let file = read_file_config(&config_path(&cache_dir))?;
        Ok(Config {
            threads: threads.or(file.threads).unwrap_or(Threads::Auto),
            output: output.or(file.output).unwrap_or(Output::Text),
            bounds: file.bounds,
            cache_dir,
            force,
        })
    }

    pub fn guard(&self, what: &str, n: usize, limit: usize) -> Result<(), Failure> {
        if n > limit && !self.force {
            return Err(Failure::Usage(format!(
                "{what} with n = {n} exceeds the limit n ≤ {limit}; pass --force to run anyway"
            )));
        }
        Ok(())
    }
}
