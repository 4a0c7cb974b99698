//! Content-addressed on-disk store for reduced Betti numbers.
//!
//! One JSON file per complex under `<dir>/<hh>/<hash>.json`, where `hash` is
//! the SHA-256 of the canonical complex text and the field. Entries record
//! their key text, so collisions and truncated files are detected and
//! recomputed.

use std::collections::HashMap;
use std::fs;
use std::io::Write;
use std::path::{Path, PathBuf};
use std::sync::atomic::{AtomicUsize, Ordering};

use coverdepth::{FieldSpec, HomologyCache, ReducedBetti, SimplicialComplex};
use parking_lot::RwLock;
use serde::{Deserialize, Serialize};
use sha2::{Digest, Sha256};

#[derive(Serialize, Deserialize)]
struct Entry {
    key: String,
    dims: Vec<usize>,
}

pub struct DiskCache {
    dir: PathBuf,
    memory: RwLock<HashMap<String, ReducedBetti>>,
    corrupt: AtomicUsize,
}

impl DiskCache {
    pub fn open(dir: &Path) -> std::io::Result<Self> {
        fs::create_dir_all(dir)?;
        Ok(DiskCache {
            dir: dir.to_path_buf(),
            memory: RwLock::new(HashMap::new()),
            corrupt: AtomicUsize::new(0),
        })
    }

    /// Entries found unreadable or mismatched so far.
    #[cfg(test)]
    fn corrupt_entries(&self) -> usize {
        self.corrupt.load(Ordering::Relaxed)
    }

    fn key_text(complex: &SimplicialComplex, field: FieldSpec) -> String {
        let body = serde_json::to_string(complex).expect("complex serializes");
        format!("{}|{}", field.characteristic(), body)
    }

    fn path_for(&self, key: &str) -> PathBuf {
        let hash = hex::encode(Sha256::digest(key.as_bytes()));
        self.dir.join(&hash[..2]).join(format!("{hash}.json"))
    }

    fn read(&self, key: &str) -> Option<ReducedBetti> {
        let path = self.path_for(key);
        let bytes = fs::read(&path).ok()?;
        match serde_json::from_slice::<Entry>(&bytes) {
            Ok(entry) if entry.key == key => Some(ReducedBetti::from_dims(entry.dims)),
            _ => {
                self.corrupt.fetch_add(1, Ordering::Relaxed);
                eprintln!(
                    "warning: cache entry {} is corrupt, recomputing",
                    path.display()
                );
                None
            }
        }
    }

    fn write(&self, key: &str, betti: &ReducedBetti) -> std::io::Result<()> {
        let path = self.path_for(key);
        let parent = path.parent().expect("cache path has a parent");
        fs::create_dir_all(parent)?;
        let entry = Entry {
            key: key.to_string(),
            dims: betti.dims().to_vec(),
        };
        let mut tmp = tempfile::NamedTempFile::new_in(parent)?;
        tmp.write_all(&serde_json::to_vec(&entry)?)?;
        tmp.persist(&path).map_err(|e| e.error)?;
        Ok(())
    }
}

impl HomologyCache for DiskCache {
    fn get(&self, complex: &SimplicialComplex, field: FieldSpec) -> Option<ReducedBetti> {
        let key = Self::key_text(complex, field);
        if let Some(b) = self.memory.read().get(&key) {
            return Some(b.clone());
        }
        let found = self.read(&key)?;
        self.memory.write().insert(key, found.clone());
        Some(found)
    }

    fn put(&self, complex: &SimplicialComplex, field: FieldSpec, betti: &ReducedBetti) {
        let key = Self::key_text(complex, field);
        if let Err(e) = self.write(&key, betti) {
            eprintln!("warning: cannot write cache entry: {e}");
        }
        self.memory.write().insert(key, betti.clone());
    }
}
