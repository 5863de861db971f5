//! On-disk cache of report records, one JSON file per content hash.

use std::fs;
use std::io::Write;
use std::path::{Path, PathBuf};

use jetbound_core::{GeometryKind, RelationSet, TowerContext, WeightVector, ENGINE_VERSION};
use sha2::{Digest, Sha256};

use crate::error::CliError;
use crate::report::{join, ReportRecord};

pub const CACHE_ENV: &str = "JETBOUND_CACHE";
pub const DEFAULT_DIR: &str = ".jetbound-cache";

pub struct Cache {
    dir: PathBuf,
}

/// Hex sha256 of engine version, `(n, r, k)`, geometry, weights and the
/// canonical relation text.
pub fn cache_key(
    n: u32,
    k: u32,
    geometry: GeometryKind,
    weights: &WeightVector,
) -> Result<String, CliError> {
    let ctx = TowerContext::new(n, k).map_err(|e| CliError::Input(e.to_string()))?;
    let rels = RelationSet::build(&ctx);
    let mut h = Sha256::new();
    for part in [
        ENGINE_VERSION.to_owned(),
        format!("n={n};r={};k={k}", ctx.rank()),
        geometry.as_str().to_owned(),
        join(weights.as_slice(), ","),
        rels.canonical_text(&ctx),
    ] {
        h.update(part.as_bytes());
        h.update([0u8]);
    }
    Ok(hex::encode(h.finalize()))
}

impl Cache {
    pub fn new(dir: impl Into<PathBuf>) -> Self {
        Cache { dir: dir.into() }
    }

    /// `$JETBOUND_CACHE`, else `.jetbound-cache` in the working directory.
    pub fn from_env() -> Self {
        Cache::new(
            std::env::var_os(CACHE_ENV).map_or_else(|| PathBuf::from(DEFAULT_DIR), PathBuf::from),
        )
    }

    pub fn dir(&self) -> &Path {
        &self.dir
    }

    pub fn path_for(&self, key: &str) -> PathBuf {
        self.dir.join(format!("{key}.json"))
    }

    /// A corrupt or unreadable entry counts as a miss.
    pub fn load(&self, key: &str) -> Option<ReportRecord> {
        let bytes = fs::read(self.path_for(key)).ok()?;
        serde_json::from_slice(&bytes).ok()
    }

    /// Write-temp-then-rename; concurrent writers of one key race harmlessly.
    pub fn store(&self, key: &str, rec: &ReportRecord) -> Result<(), CliError> {
        fs::create_dir_all(&self.dir)?;
        let mut tmp = tempfile::NamedTempFile::new_in(&self.dir)?;
        tmp.write_all(rec.to_json().as_bytes())?;
        tmp.flush()?;
        tmp.persist(self.path_for(key))
            .map_err(|e| CliError::Io(e.error))?;
        Ok(())
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use jetbound_core::default_weights;

    #[test]
    fn keys_separate_inputs() {
        let a = default_weights(2);
        let k1 = cache_key(2, 2, GeometryKind::LogarithmicPair, &a).unwrap();
        let k2 = cache_key(2, 2, GeometryKind::CompactHypersurface, &a).unwrap();
        let k3 = cache_key(2, 2, GeometryKind::LogarithmicPair, &a.scaled(2)).unwrap();
        assert_eq!(k1.len(), 64);
        assert_ne!(k1, k2);
        assert_ne!(k1, k3);
        assert_eq!(
            k1,
            cache_key(2, 2, GeometryKind::LogarithmicPair, &a).unwrap()
        );
    }

    #[test]
    fn store_then_load() {
        let dir = tempfile::tempdir().unwrap();
        let cache = Cache::new(dir.path().join("nested"));
        let rec = ReportRecord {
            dim: 2,
            order: 1,
            geometry: "compact".into(),
            weights: vec![1],
            total_dim: 3,
            polynomial: vec!["0".into(), "3".into()],
            leading_coeff: "3".into(),
            threshold: Some(1),
        };
        assert!(cache.load("k").is_none());
        cache.store("k", &rec).unwrap();
        assert_eq!(cache.load("k"), Some(rec));
        fs::write(cache.path_for("bad"), b"{").unwrap();
        assert!(cache.load("bad").is_none());
    }
}
