//! Content-addressed on-disk cache for command payloads.

use std::fs;
use std::io::Write;
use std::path::{Path, PathBuf};
use std::time::{SystemTime, UNIX_EPOCH};

use serde::{Deserialize, Serialize};
use serde_json::Value;
use sha2::{Digest, Sha256};

pub const CACHE_ENV: &str = "MODP_CACHE_DIR";

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum CachePolicy {
    Use,
    Refresh,
    Off,
}

#[derive(Debug, Serialize, Deserialize)]
pub struct CacheEntry {
    pub key: String,
    pub version: String,
    pub created_at: u64,
    pub payload: Value,
}

/// What a lookup did, for `--verbose`.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum CacheEvent {
    Hit,
    Miss,
    Disabled,
}

pub struct Cache {
    dir: Option<PathBuf>,
    policy: CachePolicy,
    version: String,
    warned: bool,
    pub warnings: Vec<String>,
}

impl Cache {
    pub fn new(dir: Option<PathBuf>, policy: CachePolicy, version: &str) -> Cache {
        Cache { dir, policy, version: version.to_string(), warned: false, warnings: Vec::new() }
    }

    /// `$MODP_CACHE_DIR`, else the platform cache directory.
    pub fn default_dir() -> Option<PathBuf> {
        match std::env::var_os(CACHE_ENV) {
            Some(d) if !d.is_empty() => Some(PathBuf::from(d)),
            _ => dirs::cache_dir().map(|d| d.join("modp")),
        }
    }

    pub fn key(&self, op: &str, params: &Value) -> String {
        let mut h = Sha256::new();
        h.update(op.as_bytes());
        h.update([0u8]);
        h.update(params.to_string().as_bytes());
        h.update([0u8]);
        h.update(self.version.as_bytes());
        hex::encode(h.finalize())
    }

    fn path(&self, key: &str) -> Option<PathBuf> {
        self.dir.as_ref().map(|d| d.join(format!("{key}.json")))
    }

    fn read(&self, path: &Path, key: &str) -> Option<Value> {
        let text = fs::read_to_string(path).ok()?;
        let entry: CacheEntry = serde_json::from_str(&text).ok()?;
        (entry.version == self.version && entry.key == key).then_some(entry.payload)
    }

    fn write(&mut self, path: &Path, key: &str, payload: &Value) {
        let entry = CacheEntry {
            key: key.to_string(),
            version: self.version.clone(),
            created_at: SystemTime::now().duration_since(UNIX_EPOCH).map(|d| d.as_secs()).unwrap_or(0),
            payload: payload.clone(),
        };
        let result = (|| -> std::io::Result<()> {
            let dir = path.parent().expect("cache files live in a directory");
            fs::create_dir_all(dir)?;
            let mut tmp = tempfile::NamedTempFile::new_in(dir)?;
            tmp.write_all(serde_json::to_string(&entry)?.as_bytes())?;
            tmp.persist(path).map_err(|e| e.error)?;
            Ok(())
        })();
        if let Err(e) = result {
            if !self.warned {
                self.warned = true;
                self.warnings.push(format!("warning: cache not written ({}): {e}", path.display()));
            }
        }
    }

    /// Cached payload for `(op, params)`, computing and storing it on a miss.
    pub fn roundtrip<E>(
        &mut self,
        op: &str,
        params: &Value,
        compute: impl FnOnce() -> Result<Value, E>,
    ) -> Result<(Value, CacheEvent), E> {
        let key = self.key(op, params);
        let path = match (self.policy, self.path(&key)) {
            (CachePolicy::Off, _) | (_, None) => return Ok((compute()?, CacheEvent::Disabled)),
            (_, Some(p)) => p,
        };
        if self.policy == CachePolicy::Use {
            if let Some(v) = self.read(&path, &key) {
                return Ok((v, CacheEvent::Hit));
            }
        }
        let v = compute()?;
        self.write(&path, &key, &v);
        Ok((v, CacheEvent::Miss))
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use serde_json::json;

    #[test]
    fn hit_after_miss() {
        let dir = tempfile::tempdir().unwrap();
        let mut c = Cache::new(Some(dir.path().to_path_buf()), CachePolicy::Use, "1");
        let p = json!({"n": 3});
        let (a, e1) = c.roundtrip::<()>("op", &p, || Ok(json!([1, 2]))).unwrap();
        let (b, e2) = c.roundtrip::<()>("op", &p, || panic!("recomputed")).unwrap();
        assert_eq!((a, e1), (b.clone(), CacheEvent::Miss));
        assert_eq!(e2, CacheEvent::Hit);
        assert_eq!(b, json!([1, 2]));
    }

    #[test]
    fn version_and_corruption_miss() {
        let dir = tempfile::tempdir().unwrap();
        let p = json!({});
        let mut c = Cache::new(Some(dir.path().to_path_buf()), CachePolicy::Use, "1");
        c.roundtrip::<()>("op", &p, || Ok(json!(1))).unwrap();
        let mut c2 = Cache::new(Some(dir.path().to_path_buf()), CachePolicy::Use, "2");
        assert_eq!(c2.roundtrip::<()>("op", &p, || Ok(json!(2))).unwrap(), (json!(2), CacheEvent::Miss));
        let key = c.key("op", &p);
        fs::write(dir.path().join(format!("{key}.json")), "{not json").unwrap();
        assert_eq!(c.roundtrip::<()>("op", &p, || Ok(json!(3))).unwrap(), (json!(3), CacheEvent::Miss));
        assert_eq!(c.roundtrip::<()>("op", &p, || Ok(json!(4))).unwrap(), (json!(3), CacheEvent::Hit));
    }

    #[test]
    fn unwritable_warns_once() {
        let dir = tempfile::tempdir().unwrap();
        let file = dir.path().join("plain");
        fs::write(&file, "x").unwrap();
        let mut c = Cache::new(Some(file.join("sub")), CachePolicy::Use, "1");
        for i in 0..3 {
            let (v, _) = c.roundtrip::<()>("op", &json!(i), || Ok(json!(i))).unwrap();
            assert_eq!(v, json!(i));
        }
        assert_eq!(c.warnings.len(), 1);
    }
}
