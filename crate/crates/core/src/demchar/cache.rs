//! Character cache keyed by `(label, ℓ, λ)`, in memory and optionally on disk.
//!
//! Each key is one JSON file in the cache directory. Files are written to a
//! temporary file in the same directory and renamed into place, so readers
//! never observe a partial record.

use std::collections::HashMap;
use std::fs;
use std::io::Write;
use std::path::{Path, PathBuf};
use std::sync::{Arc, RwLock};

use serde::{Deserialize, Serialize};

use super::charpoly::CharPoly;
use super::kernel::demazure_character;
use super::verify::highest_weight_violation;
use crate::error::{Error, Result};
use crate::rootsys::{AffineLabel, FiniteWeight, RootSystemData};

#[derive(Debug, Clone, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct CacheKey {
    pub label: AffineLabel,
    pub level: i64,
    pub lambda: Vec<i64>,
}

impl CacheKey {
    pub fn file_name(&self) -> String {
        let label = self.label.to_string().replace('^', "-");
        let coords: Vec<String> = self.lambda.iter().map(i64::to_string).collect();
        format!("{label}_l{}_{}.json", self.level, coords.join("_"))
    }
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct TermRecord {
    pub classical_coords: Vec<i64>,
    pub delta_deg_num: i64,
    pub delta_deg_den: i64,
    pub mult: i64,
}

/// On-disk form of one cached character.
#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct CharacterRecord {
    pub label: AffineLabel,
    pub level: i64,
    pub lambda_coords: Vec<i64>,
    pub terms: Vec<TermRecord>,
}

impl CharacterRecord {
    pub fn new(key: &CacheKey, f: &CharPoly) -> Self {
        CharacterRecord {
            label: key.label,
            level: key.level,
            lambda_coords: key.lambda.clone(),
            terms: f
                .terms()
                .map(|(k, m)| TermRecord {
                    classical_coords: k.classical.to_vec(),
                    delta_deg_num: k.degree,
                    delta_deg_den: 1,
                    mult: m,
                })
                .collect(),
        }
    }

    pub fn key(&self) -> CacheKey {
        CacheKey {
            label: self.label,
            level: self.level,
            lambda: self.lambda_coords.clone(),
        }
    }

    pub fn to_charpoly(&self) -> Result<CharPoly> {
        let rank = self.lambda_coords.len();
        let mut f = CharPoly::zero(self.level);
        for t in &self.terms {
            if t.classical_coords.len() != rank {
                return Err(Error::Cache("term has the wrong rank".into()));
            }
            if t.delta_deg_den <= 0 || t.delta_deg_num % t.delta_deg_den != 0 {
                return Err(Error::Cache(format!(
                    "non-integral degree {}/{}",
                    t.delta_deg_num, t.delta_deg_den
                )));
            }
            if t.mult == 0 {
                return Err(Error::Cache("zero multiplicity stored".into()));
            }
            f.add_term(
                t.classical_coords.as_slice().into(),
                t.delta_deg_num / t.delta_deg_den,
                t.mult,
            );
        }
        Ok(f)
    }
}

/// Shared character store. Safe for concurrent readers; writers take the lock
/// only to insert a finished character.
#[derive(Debug, Default)]
pub struct CharacterCache {
    dir: Option<PathBuf>,
    mem: RwLock<HashMap<CacheKey, Arc<CharPoly>>>,
}

impl CharacterCache {
    pub fn in_memory() -> Self {
        CharacterCache::default()
    }

    /// Backs the cache with `dir`, creating it if needed.
    pub fn with_dir(dir: impl Into<PathBuf>) -> Result<Self> {
        let dir = dir.into();
        fs::create_dir_all(&dir)
            .map_err(|e| Error::Cache(format!("cannot create {}: {e}", dir.display())))?;
        Ok(CharacterCache {
            dir: Some(dir),
            mem: RwLock::default(),
        })
    }

    pub fn dir(&self) -> Option<&Path> {
        self.dir.as_deref()
    }

    /// Character of `D(ℓ, λ)`, computed at most once per key unless a disk
    /// entry is unreadable.
    pub fn character(
        &self,
        rs: &RootSystemData,
        level: i64,
        lambda: &FiniteWeight,
    ) -> Result<Arc<CharPoly>> {
        let key = CacheKey {
            label: rs.label,
            level,
            lambda: lambda
                .to_ints()
                .ok_or_else(|| Error::Precondition(format!("weight {lambda} is not integral")))?,
        };
        if let Some(f) = self.mem.read().expect("cache lock").get(&key) {
            return Ok(f.clone());
        }
        if let Some(f) = self.load(&key) {
            let f = Arc::new(f);
            self.mem.write().expect("cache lock").insert(key, f.clone());
            return Ok(f);
        }
        let f = Arc::new(demazure_character(rs, level, lambda)?);
        self.store(&key, &f)?;
        self.mem.write().expect("cache lock").insert(key, f.clone());
        Ok(f)
    }

    fn load(&self, key: &CacheKey) -> Option<CharPoly> {
        let path = self.dir.as_ref()?.join(key.file_name());
        let rec = read_record(&path).ok()?;
        if rec.key() != *key {
            return None;
        }
        rec.to_charpoly().ok()
    }

    fn store(&self, key: &CacheKey, f: &CharPoly) -> Result<()> {
        let Some(dir) = &self.dir else { return Ok(()) };
        let path = dir.join(key.file_name());
        if path.exists() {
            // an unreadable entry stays for the admin tools to report
            return Ok(());
        }
        let rec = CharacterRecord::new(key, f);
        let bytes = serde_json::to_vec(&rec).map_err(|e| Error::Serde(e.to_string()))?;
        let io = |e: std::io::Error| Error::Cache(format!("writing {}: {e}", path.display()));
        let mut tmp = tempfile::NamedTempFile::new_in(dir).map_err(io)?;
        tmp.write_all(&bytes).map_err(io)?;
        tmp.persist(&path).map_err(|e| io(e.error))?;
        Ok(())
    }
}

pub fn read_record(path: &Path) -> Result<CharacterRecord> {
    let text = fs::read_to_string(path)
        .map_err(|e| Error::Cache(format!("reading {}: {e}", path.display())))?;
    serde_json::from_str(&text).map_err(|e| Error::Cache(format!("{}: {e}", path.display())))
}

/// One cache file and what could be read from it.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct CacheEntry {
    pub path: PathBuf,
    pub record: std::result::Result<CharacterRecord, String>,
}

impl CacheEntry {
    pub fn file_name(&self) -> String {
        self.path
            .file_name()
            .map(|s| s.to_string_lossy().into_owned())
            .unwrap_or_default()
    }
}

/// All `*.json` files in `dir`, sorted by name.
pub fn list_entries(dir: &Path) -> Result<Vec<CacheEntry>> {
    if !dir.exists() {
        return Ok(Vec::new());
    }
    let rd = fs::read_dir(dir).map_err(|e| Error::Cache(format!("{}: {e}", dir.display())))?;
    let mut paths: Vec<PathBuf> = rd
        .filter_map(|e| e.ok().map(|e| e.path()))
        .filter(|p| p.extension().is_some_and(|x| x == "json"))
        .collect();
    paths.sort();
    Ok(paths
        .into_iter()
        .map(|path| {
            let record = read_record(&path).map_err(|e| e.to_string()).and_then(|r| {
                if path.file_name().is_some_and(|n| *n == *r.key().file_name()) {
                    Ok(r)
                } else {
                    Err("file name does not match its key".to_string())
                }
            });
            CacheEntry { path, record }
        })
        .collect())
}

/// Verdict on one entry: `Ok(dimension)` or the reason it is invalid.
pub type Validation = std::result::Result<i64, String>;

/// Recomputes each entry and checks it against the stored terms and the
/// highest-weight invariants.
pub fn validate_entries(dir: &Path) -> Result<Vec<(CacheEntry, Validation)>> {
    let entries = list_entries(dir)?;
    Ok(entries
        .into_iter()
        .map(|entry| {
            let v = validate_record(&entry.record);
            (entry, v)
        })
        .collect())
}

fn validate_record(record: &std::result::Result<CharacterRecord, String>) -> Validation {
    let rec = record.as_ref().map_err(Clone::clone)?;
    let stored = rec.to_charpoly().map_err(|e| e.to_string())?;
    let rs = RootSystemData::new(rec.label);
    let lambda = FiniteWeight::from_ints(&rec.lambda_coords);
    if lambda.rank() != rs.rank() {
        return Err("lambda has the wrong rank".into());
    }
    let fresh = demazure_character(&rs, rec.level, &lambda).map_err(|e| e.to_string())?;
    if fresh.dimension() != stored.dimension() {
        return Err(format!(
            "stored dimension {} but recomputed {}",
            stored.dimension(),
            fresh.dimension()
        ));
    }
    if fresh != stored {
        return Err("stored terms differ from the recomputed character".into());
    }
    if let Some(why) = highest_weight_violation(&rs, &stored, &lambda) {
        return Err(why);
    }
    Ok(stored.dimension())
}

#[derive(Debug, Clone, Default, PartialEq, Eq)]
pub struct ClearReport {
    pub removed: Vec<PathBuf>,
    /// Unreadable entries, left in place.
    pub kept: Vec<(PathBuf, String)>,
}

/// Removes every readable entry; unreadable ones are reported and kept.
pub fn clear_entries(dir: &Path) -> Result<ClearReport> {
    let mut report = ClearReport::default();
    for entry in list_entries(dir)? {
        match entry.record {
            Ok(_) => {
                fs::remove_file(&entry.path)
                    .map_err(|e| Error::Cache(format!("{}: {e}", entry.path.display())))?;
                report.removed.push(entry.path);
            }
            Err(why) => report.kept.push((entry.path, why)),
        }
    }
    Ok(report)
}
