use std::collections::HashMap;
use std::fs;
use std::path::{Path, PathBuf};
use std::sync::{Arc, Mutex, OnceLock, RwLock};

use serde::{Deserialize, Serialize};

use super::{brauer_character, brauer_labels};
use crate::combinatorics::{partitions_unchecked, Partition};
use crate::error::{KlmovError, Result};

pub const SCHEMA: &str = "brauer-chars-v1";

/// χ_A(γ_μ) for every Brauer label A of Br_n and every μ ⊢ n.
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct BrauerCharTable {
    pub schema: String,
    pub n: usize,
    pub labels: Vec<Partition>,
    pub classes: Vec<Partition>,
    pub values: Vec<Vec<i64>>,
    #[serde(skip)]
    index: HashMap<Partition, usize>,
    #[serde(skip)]
    class_index: HashMap<Partition, usize>,
}

impl BrauerCharTable {
    pub fn compute(n: usize) -> Self {
        let labels = brauer_labels(n);
        let classes = partitions_unchecked(n);
        let values = labels
            .iter()
            .map(|a| classes.iter().map(|mu| brauer_character(a, mu).expect("labels are compatible")).collect())
            .collect();
        Self::indexed(BrauerCharTable {
            schema: SCHEMA.into(),
            n,
            labels,
            classes,
            values,
            index: HashMap::new(),
            class_index: HashMap::new(),
        })
    }

    fn indexed(mut t: Self) -> Self {
        t.index = t.labels.iter().cloned().enumerate().map(|(i, l)| (l, i)).collect();
        t.class_index = t.classes.iter().cloned().enumerate().map(|(i, l)| (l, i)).collect();
        t
    }

    pub fn get(&self, a: &Partition, mu: &Partition) -> Result<i64> {
        let i = self
            .index
            .get(a)
            .ok_or_else(|| KlmovError::ParityMismatch(format!("{a} is not a label of Br_{}", self.n)))?;
        let j = self
            .class_index
            .get(mu)
            .ok_or_else(|| KlmovError::SizeMismatch(format!("{mu} is not a class of S_{}", self.n)))?;
        Ok(self.values[*i][*j])
    }

    fn is_consistent(&self, n: usize) -> bool {
        self.schema == SCHEMA
            && self.n == n
            && self.labels == brauer_labels(n)
            && self.classes == partitions_unchecked(n)
            && self.values.len() == self.labels.len()
            && self.values.iter().all(|row| row.len() == self.classes.len())
    }
}

struct Store {
    tables: RwLock<HashMap<usize, Arc<BrauerCharTable>>>,
    dir: RwLock<Option<PathBuf>>,
    write_lock: Mutex<()>,
}

fn store() -> &'static Store {
    static S: OnceLock<Store> = OnceLock::new();
    S.get_or_init(|| Store { tables: RwLock::new(HashMap::new()), dir: RwLock::new(None), write_lock: Mutex::new(()) })
}

/// Enables (or with `None` disables) the on-disk table cache.
pub fn set_cache_dir(dir: Option<PathBuf>) {
    *store().dir.write().unwrap() = dir;
}

fn file_for(dir: &Path, n: usize) -> PathBuf {
    dir.join(format!("{SCHEMA}-n{n}.json"))
}

fn load(dir: &Path, n: usize) -> Option<BrauerCharTable> {
    let text = fs::read_to_string(file_for(dir, n)).ok()?;
    match serde_json::from_str::<BrauerCharTable>(&text) {
        Ok(t) if t.is_consistent(n) => Some(BrauerCharTable::indexed(t)),
        _ => {
            log::warn!("ignoring corrupt character cache for n={n}; recomputing");
            None
        }
    }
}

fn save(dir: &Path, table: &BrauerCharTable) -> Result<()> {
    let _guard = store().write_lock.lock().unwrap();
    fs::create_dir_all(dir).map_err(|e| KlmovError::Cache(e.to_string()))?;
    let path = file_for(dir, table.n);
    let tmp = path.with_extension(format!("json.tmp{}", std::process::id()));
    let text = serde_json::to_string(table).map_err(|e| KlmovError::Cache(e.to_string()))?;
    fs::write(&tmp, text).map_err(|e| KlmovError::Cache(e.to_string()))?;
    fs::rename(&tmp, &path).map_err(|e| KlmovError::Cache(e.to_string()))
}

/// The Brauer character table for n, from memory, disk, or fresh computation.
pub fn brauer_table(n: usize) -> Arc<BrauerCharTable> {
    if let Some(t) = store().tables.read().unwrap().get(&n) {
        return t.clone();
    }
    let dir = store().dir.read().unwrap().clone();
    let table = match dir.as_deref().and_then(|d| load(d, n)) {
        Some(t) => t,
        None => {
            let t = BrauerCharTable::compute(n);
            if let Some(d) = dir.as_deref() {
                if let Err(e) = save(d, &t) {
                    log::warn!("could not write character cache: {e}");
                }
            }
            t
        }
    };
    let table = Arc::new(table);
    store().tables.write().unwrap().entry(n).or_insert(table).clone()
}

/// Reads a table directly from a cache directory without touching the in-memory store.
pub fn read_cached(dir: &Path, n: usize) -> Option<BrauerCharTable> {
    load(dir, n)
}

/// Computes a table and writes it into a cache directory.
pub fn write_cached(dir: &Path, n: usize) -> Result<BrauerCharTable> {
    let t = BrauerCharTable::compute(n);
    save(dir, &t)?;
    Ok(t)
}
