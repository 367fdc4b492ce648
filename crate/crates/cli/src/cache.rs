//! Append-only JSON-lines cache of certificates keyed by canonical fraction.
//!
//! A later line for the same key wins. Lines that fail to parse or carry a
//! different schema version are ignored, which only ever causes a recompute.

use std::collections::HashMap;
use std::fs::{File, OpenOptions};
use std::io::{BufRead, BufReader, Write};
use std::path::{Path, PathBuf};

use anyhow::{Context, Result};
use serde_json::{json, Value};

pub const CACHE_VERSION: u64 = 1;

#[derive(Debug, Default)]
pub struct Cache {
    path: Option<PathBuf>,
    entries: HashMap<String, Value>,
}

impl Cache {
    pub fn disabled() -> Self {
        Cache::default()
    }

    pub fn open(path: &Path) -> Result<Self> {
        let mut entries = HashMap::new();
        if path.exists() {
            let f = File::open(path).with_context(|| format!("opening cache {}", path.display()))?;
            for line in BufReader::new(f).lines() {
                let line = line?;
                let Ok(v) = serde_json::from_str::<Value>(&line) else {
                    continue;
                };
                if v["v"].as_u64() != Some(CACHE_VERSION) {
                    continue;
                }
                if let (Some(key), cert) = (v["key"].as_str(), &v["cert"]) {
                    if cert.is_object() {
                        entries.insert(key.to_string(), cert.clone());
                    }
                }
            }
        }
        Ok(Cache {
            path: Some(path.to_path_buf()),
            entries,
        })
    }

    pub fn get(&self, key: &str) -> Option<&Value> {
        self.entries.get(key)
    }

    #[cfg(test)]
    pub fn len(&self) -> usize {
        self.entries.len()
    }

    /// Appends fresh entries in the given order.
    pub fn append(&mut self, fresh: &[(String, Value)]) -> Result<()> {
        if fresh.is_empty() {
            return Ok(());
        }
        if let Some(path) = &self.path {
            let mut f = OpenOptions::new()
                .create(true)
                .append(true)
                .open(path)
                .with_context(|| format!("opening cache {}", path.display()))?;
            let mut buf = String::new();
            for (key, cert) in fresh {
                buf.push_str(&serde_json::to_string(&json!({"v": CACHE_VERSION, "key": key, "cert": cert}))?);
                buf.push('\n');
            }
            f.write_all(buf.as_bytes())?;
        }
        for (key, cert) in fresh {
            self.entries.insert(key.clone(), cert.clone());
        }
        Ok(())
    }
}
