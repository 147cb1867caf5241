use std::path::{Path, PathBuf};
use std::time::Instant;

use qtshuffle_core::macdonald::{install_table, is_table_loaded, MacdonaldTable};
use serde::Serialize;

use crate::Failure;

#[derive(Clone, Copy, Debug, PartialEq, Eq, clap::ValueEnum)]
pub enum Action {
    Warm,
    Validate,
    Clear,
}

#[derive(Debug, Serialize)]
pub struct Entry {
    pub degree: usize,
    pub path: String,
    pub status: String,
}

pub fn table_path(dir: &Path, n: usize) -> PathBuf {
    dir.join(format!("macdonald-{n}.json"))
}

/// Degrees with a table file in `dir`, ascending.
fn cached_degrees(dir: &Path) -> Vec<usize> {
    let Ok(rd) = std::fs::read_dir(dir) else {
        return Vec::new();
    };
    let mut out: Vec<usize> = rd
        .filter_map(|e| e.ok())
        .filter_map(|e| {
            let name = e.file_name().into_string().ok()?;
            name.strip_prefix("macdonald-")?.strip_suffix(".json")?.parse().ok()
        })
        .collect();
    out.sort_unstable();
    out
}

/// Read and re-validate a cached table; a bad file is an error naming it.
fn load(path: &Path, n: usize) -> Result<MacdonaldTable, Failure> {
    let bad = |e: String| Failure::Check(format!("invalid cache file {}: {e}", path.display()));
    let t = MacdonaldTable::read_file(path).map_err(|e| bad(e.to_string()))?;
    if t.degree() != n {
        return Err(bad(format!("holds degree {}, expected {n}", t.degree())));
    }
    t.validate().map_err(|e| bad(e.to_string()))?;
    Ok(t)
}

/// Install cached tables for the given degrees, when present.
pub fn preload(dir: &Path, degrees: impl IntoIterator<Item = usize>) -> Result<(), Failure> {
    for n in degrees {
        let path = table_path(dir, n);
        if !is_table_loaded(n) && path.exists() {
            install_table(load(&path, n)?);
        }
    }
    Ok(())
}

pub fn run(dir: &Path, action: Action, degree: Option<usize>, default_max: usize) -> Result<Vec<Entry>, Failure> {
    let entry = |n: usize, status: String| Entry { degree: n, path: table_path(dir, n).display().to_string(), status };
    match action {
        Action::Warm => {
            let degrees: Vec<usize> = match degree {
                Some(n) => vec![n],
                None => (1..=default_max).collect(),
            };
            let mut out = Vec::new();
            for n in degrees {
                if n == 0 {
                    return Err(Failure::Usage("degree must be positive".into()));
                }
                let path = table_path(dir, n);
                if path.exists() {
                    load(&path, n)?;
                    out.push(entry(n, "cached".into()));
                    continue;
                }
                let start = Instant::now();
                let t = MacdonaldTable::build(n).map_err(|e| Failure::Check(e.to_string()))?;
                t.write_file(&path).map_err(|e| Failure::Check(e.to_string()))?;
                out.push(entry(n, format!("built in {:.3}s", start.elapsed().as_secs_f64())));
            }
            Ok(out)
        }
        Action::Validate => {
            let degrees = match degree {
                Some(n) => vec![n],
                None => cached_degrees(dir),
            };
            let mut out = Vec::new();
            for n in degrees {
                let path = table_path(dir, n);
                if !path.exists() {
                    out.push(entry(n, "missing".into()));
                    continue;
                }
                load(&path, n)?;
                out.push(entry(n, "valid".into()));
            }
            Ok(out)
        }
        Action::Clear => {
            let degrees = match degree {
                Some(n) => vec![n],
                None => cached_degrees(dir),
            };
            let mut out = Vec::new();
            for n in degrees {
                let path = table_path(dir, n);
                match std::fs::remove_file(&path) {
                    Ok(()) => out.push(entry(n, "removed".into())),
                    Err(e) if e.kind() == std::io::ErrorKind::NotFound => out.push(entry(n, "absent".into())),
                    Err(e) => return Err(Failure::Check(format!("{}: {e}", path.display()))),
                }
            }
            Ok(out)
        }
    }
}
