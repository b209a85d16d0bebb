//! Optional on-disk memo for substitution factor sets, keyed by the
//! substitution's canonical JSON hash and the word length. Enabled by the
//! `SUBSHIFT_CACHE_DIR` environment variable.

use sha2::{Digest, Sha256};
use std::collections::BTreeSet;
use std::path::PathBuf;
use subshift_core::{Letter, Substitution};

const FORMAT_VERSION: &str = "v1";

fn cache_path(subst: &Substitution, n: usize) -> Option<PathBuf> {
    let dir = std::env::var_os("SUBSHIFT_CACHE_DIR")?;
    let mut hasher = Sha256::new();
    hasher.update(subst.to_json().as_bytes());
    let hash = hasher.finalize();
    let hex: String = hash.iter().take(16).map(|b| format!("{b:02x}")).collect();
    Some(PathBuf::from(dir).join(format!("{FORMAT_VERSION}_{hex}_{n}.json")))
}

pub(crate) fn load(subst: &Substitution, n: usize) -> Option<BTreeSet<Vec<Letter>>> {
    let path = cache_path(subst, n)?;
    let data = std::fs::read_to_string(path).ok()?;
    let words: Vec<String> = serde_json::from_str(&data).ok()?;
    let mut set = BTreeSet::new();
    for w in words {
        let parsed = subst.alphabet().parse_word(&w).ok()?;
        if parsed.len() != n {
            return None;
        }
        set.insert(parsed);
    }
    Some(set)
}

pub(crate) fn store(subst: &Substitution, n: usize, set: &BTreeSet<Vec<Letter>>) {
    let Some(path) = cache_path(subst, n) else {
        return;
    };
    if let Some(parent) = path.parent() {
        let _ = std::fs::create_dir_all(parent);
    }
    let words: Vec<String> =
        set.iter().map(|w| subst.alphabet().format_word(w)).collect();
    if let Ok(json) = serde_json::to_string(&words) {
        let _ = std::fs::write(path, json);
    }
}
