//! On-disk JSON cache for enumerations.
//!
//! Files are named `<kind>-<key>-<convention hash>.json`, so any change to
//! the numbering or element conventions makes old entries unreachable. A file
//! that fails to parse or validate is recomputed and overwritten.

use std::fs;
use std::path::{Path, PathBuf};

use serde::de::DeserializeOwned;
use serde::{Deserialize, Serialize};
use sha2::{Digest, Sha256};

use crate::affine::{AffineGroup, MinRepLevels};
use crate::cartan::CorootVec;
use crate::error::{Error, Result};

pub const CACHE_FORMAT_VERSION: u32 = 1;
pub const CACHE_DIR_ENV: &str = "AFFGRASS_CACHE_DIR";

/// Conventions every stored result depends on.
pub const CONVENTIONS: &str = "cartan:A[i][j]=<alpha_j,alpha_i^vee>;\
nodes:bourbaki,affine=0;\
roots:simple-root-basis;coroots:simple-coroot-basis;weights:fundamental-weight-basis;\
affine-elem:t_lambda*w,s0=t_{theta^vee}s_theta;\
grading:q=complex-dimension;\
c1-weight:+theta";

/// First 16 hex digits of the SHA-256 of [`CONVENTIONS`].
pub fn convention_hash() -> String {
    let digest = Sha256::digest(CONVENTIONS.as_bytes());
    hex::encode(&digest[..8])
}

#[derive(Serialize, Deserialize)]
struct Stored<T> {
    version: u32,
    convention_hash: String,
    kind: String,
    key: String,
    data: T,
}

#[derive(Debug, Clone)]
pub struct Cache {
    dir: PathBuf,
}

impl Cache {
    pub fn at(dir: impl Into<PathBuf>) -> Self {
        Cache { dir: dir.into() }
    }

    /// `$AFFGRASS_CACHE_DIR`, else `$HOME/.cache/affgrass`, else a directory
    /// under the system temp dir.
    pub fn from_env() -> Self {
        if let Some(d) = std::env::var_os(CACHE_DIR_ENV).filter(|d| !d.is_empty()) {
            return Cache::at(d);
        }
        match std::env::var_os("HOME").filter(|d| !d.is_empty()) {
            Some(home) => Cache::at(Path::new(&home).join(".cache").join("affgrass")),
            None => Cache::at(std::env::temp_dir().join("affgrass-cache")),
        }
    }

    pub fn dir(&self) -> &Path {
        &self.dir
    }

    pub fn path(&self, kind: &str, key: &str) -> PathBuf {
        self.dir
            .join(format!("{kind}-{key}-{}.json", convention_hash()))
    }

    /// `None` when absent; a corrupt or mismatched entry is logged and
    /// treated as absent.
    pub fn load<T: DeserializeOwned>(&self, kind: &str, key: &str) -> Option<T> {
        let path = self.path(kind, key);
        let text = fs::read_to_string(&path).ok()?;
        match serde_json::from_str::<Stored<T>>(&text) {
            Ok(s)
                if s.version == CACHE_FORMAT_VERSION
                    && s.convention_hash == convention_hash()
                    && s.kind == kind
                    && s.key == key =>
            {
                Some(s.data)
            }
            Ok(_) => {
                log::warn!(
                    "cache entry {} has a stale header; recomputing",
                    path.display()
                );
                None
            }
            Err(e) => {
                log::warn!(
                    "cache entry {} is corrupt ({e}); recomputing",
                    path.display()
                );
                None
            }
        }
    }

    pub fn store<T: Serialize>(&self, kind: &str, key: &str, data: &T) -> Result<()> {
        fs::create_dir_all(&self.dir)
            .map_err(|e| Error::Cache(format!("{}: {e}", self.dir.display())))?;
        let stored = Stored {
            version: CACHE_FORMAT_VERSION,
            convention_hash: convention_hash(),
            kind: kind.to_string(),
            key: key.to_string(),
            data,
        };
        let text = serde_json::to_string(&stored).map_err(|e| Error::Cache(e.to_string()))?;
        let path = self.path(kind, key);
        let tmp = path.with_extension("json.tmp");
        fs::write(&tmp, text).map_err(|e| Error::Cache(format!("{}: {e}", tmp.display())))?;
        fs::rename(&tmp, &path).map_err(|e| Error::Cache(format!("{}: {e}", path.display())))
    }
}

/// Levels as `(translation, finite reduced word)` pairs.
type StoredLevels = Vec<Vec<(Vec<i64>, Vec<usize>)>>;

fn restore_levels(g: &AffineGroup, stored: StoredLevels, max_len: usize) -> Option<MinRepLevels> {
    if stored.len() != max_len + 1 {
        return None;
    }
    let mut by_length = Vec::with_capacity(stored.len());
    for (k, level) in stored.into_iter().enumerate() {
        let mut out = Vec::with_capacity(level.len());
        for (trans, word) in level {
            let fin = g.weyl().from_word(&word).ok()?;
            let x = g.from_parts(CorootVec(trans), fin).ok()?;
            if x.len() != k || !g.is_min_rep(&x) {
                return None;
            }
            out.push(x);
        }
        by_length.push(out);
    }
    Some(MinRepLevels {
        by_length,
        max_length: max_len,
    })
}

/// [`AffineGroup::enumerate_minreps`] through the cache.
pub fn cached_minreps(
    g: &AffineGroup,
    max_len: usize,
    cache: Option<&Cache>,
) -> Result<MinRepLevels> {
    g.bounds()
        .check_enum("min-rep enumeration length", max_len)?;
    let Some(cache) = cache else {
        return g.enumerate_minreps(max_len);
    };
    let kind = "minreps";
    let key = format!("{}-len{max_len}", g.lie_type());
    if let Some(stored) = cache.load::<StoredLevels>(kind, &key) {
        if let Some(levels) = restore_levels(g, stored, max_len) {
            return Ok(levels);
        }
        log::warn!("cache entry {kind}/{key} failed validation; recomputing");
    }
    let levels = g.enumerate_minreps(max_len)?;
    let stored: StoredLevels = levels
        .by_length
        .iter()
        .map(|l| {
            l.iter()
                .map(|x| (x.trans().0.clone(), g.weyl().reduced_word(x.fin())))
                .collect()
        })
        .collect();
    if let Err(e) = cache.store(kind, &key, &stored) {
        log::warn!("could not write cache entry {kind}/{key}: {e}");
    }
    Ok(levels)
}
