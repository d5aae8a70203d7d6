//! Persistent structure-constant cache.
//!
//! Line-delimited JSON, append-only. Two record shapes share the file:
//!
//! ```text
//! {"lam":[1,1],"mu":[[1],[1]],"q":2,"count":3}
//! {"lam":[1,1],"mu":[[1],[1]],"poly":[1,1]}
//! ```
//!
//! Keys are trimmed partitions. Duplicate keys must carry equal payloads;
//! a conflicting duplicate turns the load into an error since it means two
//! runs disagreed about a count. One process owns the writer; readers that
//! miss a record simply recompute.

use std::collections::HashMap;
use std::fs::{File, OpenOptions};
use std::io::{BufRead, BufReader, BufWriter, Write};
use std::path::{Path, PathBuf};
use std::sync::{Mutex, RwLock};

use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};

type CountKey = (Vec<Vec<i64>>, Vec<i64>, u32);
type PolyKey = (Vec<Vec<i64>>, Vec<i64>);

#[derive(Debug, Serialize, Deserialize)]
#[serde(untagged)]
enum Record {
    Count {
        lam: Vec<i64>,
        mu: Vec<Vec<i64>>,
        q: u32,
        count: u64,
    },
    Poly {
        lam: Vec<i64>,
        mu: Vec<Vec<i64>>,
        poly: Vec<i64>,
    },
}

/// In-memory maps backed by an optional append-only file.
#[derive(Debug)]
pub struct StructureCache {
    counts: RwLock<HashMap<CountKey, u64>>,
    polys: RwLock<HashMap<PolyKey, Vec<i64>>>,
    writer: Mutex<Option<BufWriter<File>>>,
    path: Option<PathBuf>,
}

impl StructureCache {
    /// Purely in-memory cache.
    pub fn in_memory() -> Self {
        StructureCache {
            counts: RwLock::new(HashMap::new()),
            polys: RwLock::new(HashMap::new()),
            writer: Mutex::new(None),
            path: None,
        }
    }

    /// Opens (or creates) a file-backed cache, validating existing records.
    pub fn open(path: &Path) -> Result<Self> {
        let mut counts = HashMap::new();
        let mut polys = HashMap::new();
        if path.exists() {
            let reader = BufReader::new(File::open(path)?);
            for (lineno, line) in reader.lines().enumerate() {
                let line = line?;
                if line.trim().is_empty() {
                    continue;
                }
                let record: Record = serde_json::from_str(&line).map_err(|e| {
                    Error::CacheConflict(format!(
                        "{}:{}: unparseable record: {e}",
                        path.display(),
                        lineno + 1
                    ))
                })?;
                match record {
                    Record::Count { lam, mu, q, count } => {
                        let key = (mu, lam, q);
                        if let Some(&old) = counts.get(&key) {
                            if old != count {
                                return Err(Error::CacheConflict(format!(
                                    "{}:{}: duplicate count key {key:?} with {old} vs {count}",
                                    path.display(),
                                    lineno + 1
                                )));
                            }
                        }
                        counts.insert(key, count);
                    }
                    Record::Poly { lam, mu, poly } => {
                        let key = (mu, lam);
                        if let Some(old) = polys.get(&key) {
                            if *old != poly {
                                return Err(Error::CacheConflict(format!(
                                    "{}:{}: duplicate poly key {key:?} with {old:?} vs {poly:?}",
                                    path.display(),
                                    lineno + 1
                                )));
                            }
                        }
                        polys.insert(key, poly);
                    }
                }
            }
        }
        let file = OpenOptions::new().create(true).append(true).open(path)?;
        Ok(StructureCache {
            counts: RwLock::new(counts),
            polys: RwLock::new(polys),
            writer: Mutex::new(Some(BufWriter::new(file))),
            path: Some(path.to_path_buf()),
        })
    }

    pub fn path(&self) -> Option<&Path> {
        self.path.as_deref()
    }

    pub fn get_count(&self, mu: &[Vec<i64>], lam: &[i64], q: u32) -> Option<u64> {
        self.counts
            .read()
            .unwrap()
            .get(&(mu.to_vec(), lam.to_vec(), q))
            .copied()
    }

    /// Records a count, appending to the backing file on first sight.
    /// A conflicting existing value is an error.
    pub fn put_count(&self, mu: &[Vec<i64>], lam: &[i64], q: u32, count: u64) -> Result<()> {
        let key = (mu.to_vec(), lam.to_vec(), q);
        {
            let mut map = self.counts.write().unwrap();
            match map.get(&key) {
                Some(&old) if old == count => return Ok(()),
                Some(&old) => {
                    return Err(Error::CacheConflict(format!(
                        "count for mu={mu:?} lam={lam:?} q={q} changed from {old} to {count}"
                    )))
                }
                None => {
                    map.insert(key, count);
                }
            }
        }
        self.append(&Record::Count {
            lam: lam.to_vec(),
            mu: mu.to_vec(),
            q,
            count,
        })
    }

    pub fn get_poly(&self, mu: &[Vec<i64>], lam: &[i64]) -> Option<Vec<i64>> {
        self.polys
            .read()
            .unwrap()
            .get(&(mu.to_vec(), lam.to_vec()))
            .cloned()
    }

    pub fn put_poly(&self, mu: &[Vec<i64>], lam: &[i64], poly: &[i64]) -> Result<()> {
        let key = (mu.to_vec(), lam.to_vec());
        {
            let mut map = self.polys.write().unwrap();
            match map.get(&key) {
                Some(old) if old.as_slice() == poly => return Ok(()),
                Some(old) => {
                    return Err(Error::CacheConflict(format!(
                        "poly for mu={mu:?} lam={lam:?} changed from {old:?} to {poly:?}"
                    )))
                }
                None => {
                    map.insert(key, poly.to_vec());
                }
            }
        }
        self.append(&Record::Poly {
            lam: lam.to_vec(),
            mu: mu.to_vec(),
            poly: poly.to_vec(),
        })
    }

    /// One record per line, flushed immediately so records are atomic at
    /// line granularity.
    fn append(&self, record: &Record) -> Result<()> {
        let mut guard = self.writer.lock().unwrap();
        if let Some(w) = guard.as_mut() {
            serde_json::to_writer(&mut *w, record)?;
            w.write_all(b"\n")?;
            w.flush()?;
        }
        Ok(())
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn roundtrip_through_a_file() {
        let dir = tempfile::tempdir().unwrap();
        let path = dir.path().join("cache.jsonl");
        let mu = vec![vec![1], vec![1]];
        let lam = vec![1, 1];
        {
            let cache = StructureCache::open(&path).unwrap();
            cache.put_count(&mu, &lam, 2, 3).unwrap();
            cache.put_poly(&mu, &lam, &[1, 1]).unwrap();
            // Idempotent re-put is fine.
            cache.put_count(&mu, &lam, 2, 3).unwrap();
        }
        let cache = StructureCache::open(&path).unwrap();
        assert_eq!(cache.get_count(&mu, &lam, 2), Some(3));
        assert_eq!(cache.get_poly(&mu, &lam), Some(vec![1, 1]));
        assert_eq!(cache.get_count(&mu, &lam, 3), None);
    }

    #[test]
    fn conflicting_puts_are_errors() {
        let cache = StructureCache::in_memory();
        cache.put_count(&[vec![1]], &[1], 2, 1).unwrap();
        let err = cache.put_count(&[vec![1]], &[1], 2, 2).unwrap_err();
        assert!(matches!(err, Error::CacheConflict(_)), "{err}");
    }

    #[test]
    fn conflicting_file_records_fail_the_load() {
        let dir = tempfile::tempdir().unwrap();
        let path = dir.path().join("cache.jsonl");
        std::fs::write(
            &path,
            "{\"lam\":[1],\"mu\":[[1]],\"q\":2,\"count\":1}\n{\"lam\":[1],\"mu\":[[1]],\"q\":2,\"count\":5}\n",
        )
        .unwrap();
        assert!(StructureCache::open(&path).is_err());
    }

    #[test]
    fn equal_duplicate_file_records_are_tolerated() {
        let dir = tempfile::tempdir().unwrap();
        let path = dir.path().join("cache.jsonl");
        std::fs::write(
            &path,
            "{\"lam\":[1],\"mu\":[[1]],\"q\":2,\"count\":1}\n{\"lam\":[1],\"mu\":[[1]],\"q\":2,\"count\":1}\n",
        )
        .unwrap();
        let cache = StructureCache::open(&path).unwrap();
        assert_eq!(cache.get_count(&[vec![1]], &[1], 2), Some(1));
    }
}
