//! On-disk store for the word-level pairing memo.

use std::collections::BTreeMap;
use std::fs;
use std::path::Path;

use serde::{Deserialize, Serialize};

use super::{PairKey, Pairing};
use crate::coeffs::LaurentBi;
use crate::error::{Error, Result};
use crate::scalar::Scalar;
use crate::words::Word;

/// Bumped whenever a convention change would alter stored values.
pub const CACHE_VERSION: &str = "pairing-v1:peel-left;e=ω_i⊗e_i;f=f_i⊗ω'_i";

#[derive(Serialize, Deserialize)]
#[serde(bound = "")]
struct CacheFile<T: Scalar> {
    version: String,
    cartan_type: String,
    entries: BTreeMap<String, LaurentBi<T>>,
}

fn key_string(k: &PairKey) -> String {
    format!("{}|{}", k.fword, k.eword)
}

fn parse_key(s: &str) -> Result<PairKey> {
    let (f, e) = s.split_once('|').ok_or_else(|| Error::Cache(format!("bad key {s}")))?;
    let word = |x: &str| -> Result<Word> {
        if x.is_empty() {
            Ok(Word::empty())
        } else {
            x.parse::<Word>().map_err(|_| Error::Cache(format!("bad key {s}")))
        }
    };
    Ok(PairKey { fword: word(f)?, eword: word(e)? })
}

impl<T: Scalar> Pairing<T> {
    /// Writes the memo; keys are sorted so the file is reproducible.
    pub fn save_cache(&self, path: &Path) -> Result<()> {
        let entries = self.memo.iter().map(|e| (key_string(e.key()), e.value().clone())).collect();
        let file = CacheFile::<T> {
            version: CACHE_VERSION.to_string(),
            cartan_type: self.rd.cartan_type.to_string(),
            entries,
        };
        fs::write(path, serde_json::to_string(&file)?)?;
        Ok(())
    }

    /// Loads a memo written by [`Pairing::save_cache`]. A missing file is not
    /// an error; a file from another version or type is ignored. Returns the
    /// number of entries loaded.
    pub fn load_cache(&self, path: &Path) -> Result<usize> {
        if !path.exists() {
            return Ok(0);
        }
        let text = fs::read_to_string(path)?;
        let file: CacheFile<T> = serde_json::from_str(&text)?;
        if file.version != CACHE_VERSION || file.cartan_type != self.rd.cartan_type.to_string() {
            return Ok(0);
        }
        let n = file.entries.len();
        for (k, v) in file.entries {
            self.memo.insert(parse_key(&k)?, v);
        }
        Ok(n)
    }
}
