//! On-disk cache of `compute` payloads, keyed by `(n, ell, version)`.

use std::fs;
use std::io::Write;
use std::path::{Path, PathBuf};
use std::time::{SystemTime, UNIX_EPOCH};

use serde::{Deserialize, Serialize};
use serde_json::Value;

use crate::Result;

/// Bumped whenever computed payloads could change.
pub const ARTIFACT_VERSION: &str = env!("CARGO_PKG_VERSION");

/// `$ZSF_CACHE_DIR`, else `$XDG_CACHE_HOME/zsf`, else `$HOME/.cache/zsf`.
pub fn default_dir() -> Option<PathBuf> {
    let from = |var: &str| std::env::var_os(var).filter(|v| !v.is_empty()).map(PathBuf::from);
    from("ZSF_CACHE_DIR")
        .or_else(|| from("XDG_CACHE_HOME").map(|d| d.join("zsf")))
        .or_else(|| from("HOME").map(|d| d.join(".cache").join("zsf")))
}

#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
pub struct CacheKey {
    pub n: u32,
    pub ell: u32,
    pub version: String,
}

#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
pub struct CacheEntry {
    pub key: CacheKey,
    /// Seconds since the Unix epoch.
    pub created_at: u64,
    pub payload: Value,
}

#[derive(Debug, Clone)]
pub struct Cache {
    dir: PathBuf,
}

impl Cache {
    pub fn new(dir: impl Into<PathBuf>) -> Self {
        Cache { dir: dir.into() }
    }

    pub fn dir(&self) -> &Path {
        &self.dir
    }

    fn path(&self, n: u32, ell: u32) -> PathBuf {
        self.dir.join(format!("delta-{n}-{ell}-v{ARTIFACT_VERSION}.json"))
    }

    /// Unreadable or mismatched entries count as misses.
    pub fn load(&self, n: u32, ell: u32) -> Option<Value> {
        let text = fs::read_to_string(self.path(n, ell)).ok()?;
        let entry: CacheEntry = serde_json::from_str(&text).ok()?;
        let key_ok = entry.key.n == n && entry.key.ell == ell && entry.key.version == ARTIFACT_VERSION;
        key_ok.then_some(entry.payload)
    }

    /// Writes to a temporary file in the cache directory, then renames it
    /// over the final path.
    pub fn store(&self, n: u32, ell: u32, payload: &Value) -> Result<()> {
        fs::create_dir_all(&self.dir)?;
        let entry = CacheEntry {
            key: CacheKey {
                n,
                ell,
                version: ARTIFACT_VERSION.to_string(),
            },
            created_at: SystemTime::now()
                .duration_since(UNIX_EPOCH)
                .map(|d| d.as_secs())
                .unwrap_or(0),
            payload: payload.clone(),
        };
        let mut tmp = tempfile::NamedTempFile::new_in(&self.dir)?;
        serde_json::to_writer(&mut tmp, &entry).map_err(|e| crate::Error::Io(e.to_string()))?;
        tmp.flush()?;
        tmp.persist(self.path(n, ell))
            .map_err(|e| crate::Error::Io(e.to_string()))?;
        Ok(())
    }

    /// Removes every cache file of any version; returns how many.
    pub fn clear(&self) -> Result<usize> {
        let entries = match fs::read_dir(&self.dir) {
            Ok(e) => e,
            Err(e) if e.kind() == std::io::ErrorKind::NotFound => return Ok(0),
            Err(e) => return Err(e.into()),
        };
        let mut removed = 0;
        for entry in entries {
            let path = entry?.path();
            let name = path.file_name().and_then(|s| s.to_str()).unwrap_or("");
            if name.starts_with("delta-") && name.ends_with(".json") {
                fs::remove_file(&path)?;
                removed += 1;
            }
        }
        Ok(removed)
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use serde_json::json;

    #[test]
    fn round_trip_and_clear() {
        let dir = tempfile::tempdir().unwrap();
        let cache = Cache::new(dir.path().join("nested"));
        assert_eq!(cache.load(6, 3), None);
        let payload = json!({"facets": [[1, 3, 5]], "n": 6});
        cache.store(6, 3, &payload).unwrap();
        assert_eq!(cache.load(6, 3), Some(payload));
        assert_eq!(cache.load(6, 2), None);
        fs::write(cache.dir().join("unrelated.txt"), "x").unwrap();
        assert_eq!(cache.clear().unwrap(), 1);
        assert_eq!(cache.load(6, 3), None);
        assert!(cache.dir().join("unrelated.txt").exists());
    }

    #[test]
    fn corrupt_entry_is_a_miss() {
        let dir = tempfile::tempdir().unwrap();
        let cache = Cache::new(dir.path());
        fs::write(cache.path(4, 2), "{not json").unwrap();
        assert_eq!(cache.load(4, 2), None);
    }
}
