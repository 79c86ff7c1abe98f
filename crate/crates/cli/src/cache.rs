//! On-disk report cache: one JSON file mapping job keys to reports.

use std::collections::BTreeMap;
use std::fs;
use std::path::{Path, PathBuf};

use serde::{Deserialize, Serialize};

use ict_core::formulas::{IctReport, REPORT_SCHEMA};

pub const TOOL_VERSION: &str = concat!(env!("CARGO_PKG_VERSION"), "+", "ict-report/1");
const FILE_NAME: &str = "reports.json";

#[derive(Serialize, Deserialize, Debug, Clone, PartialEq, Eq)]
pub struct CacheEntry {
    pub tool_version: String,
    pub report: IctReport,
}

#[derive(Serialize, Deserialize, Debug, Default)]
struct CacheFile {
    entries: BTreeMap<String, CacheEntry>,
}

pub struct Cache {
    path: PathBuf,
    file: CacheFile,
}

/// `$ICTOOL_CACHE_DIR`, else `$XDG_CACHE_HOME/ictool`, else `~/.cache/ictool`.
pub fn default_dir() -> Option<PathBuf> {
    let var = |k: &str| std::env::var_os(k).filter(|v| !v.is_empty()).map(PathBuf::from);
    var("ICTOOL_CACHE_DIR")
        .or_else(|| var("XDG_CACHE_HOME").map(|d| d.join("ictool")))
        .or_else(|| var("HOME").map(|d| d.join(".cache").join("ictool")))
}

impl Cache {
    /// Opens the cache in `dir`. A missing file is an empty cache; an
    /// unreadable one is reported and replaced on the next store.
    pub fn open(dir: &Path) -> Cache {
        debug_assert!(TOOL_VERSION.ends_with(REPORT_SCHEMA));
        let path = dir.join(FILE_NAME);
        let file = match fs::read_to_string(&path) {
            Ok(text) => serde_json::from_str(&text).unwrap_or_else(|e| {
                eprintln!("warning: ignoring corrupt cache {}: {e}", path.display());
                CacheFile::default()
            }),
            Err(_) => CacheFile::default(),
        };
        Cache { path, file }
    }

    pub fn get(&self, key: &str) -> Option<&IctReport> {
        match self.file.entries.get(key) {
            Some(e) if e.tool_version == TOOL_VERSION => Some(&e.report),
            Some(e) => {
                eprintln!("cache: entry from version {} is stale", e.tool_version);
                None
            }
            None => None,
        }
    }

    /// Stores and writes through a temporary file so readers never see a partial cache.
    pub fn put(&mut self, key: String, report: IctReport) -> std::io::Result<()> {
        self.file.entries.insert(
            key,
            CacheEntry {
                tool_version: TOOL_VERSION.to_string(),
                report,
            },
        );
        let dir = self.path.parent().expect("cache file has a directory");
        fs::create_dir_all(dir)?;
        let tmp = dir.join(format!(".{FILE_NAME}.{}", std::process::id()));
        fs::write(&tmp, serde_json::to_string_pretty(&self.file)?)?;
        fs::rename(&tmp, &self.path)
    }
}
