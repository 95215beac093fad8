//! Result cache: JSON documents keyed by
//! `(subcommand, canonicalized inputs, crate version)`.
//!
//! The cache is a pure optimization — a hit replays the stored document
//! byte-for-byte (modulo output format, which is applied after
//! retrieval), and every failure to read or write is silently treated
//! as a miss so caching can never change results or break a run.

use std::path::{Path, PathBuf};

use sha2::{Digest, Sha256};

use crate::args::Cli;
use crate::envelope::Document;

/// Resolve the cache directory: `--no-cache` wins, then `--cache-dir`,
/// then `$TORUSRT_CACHE_DIR`, then `$HOME/.cache/torusrt`.
pub fn resolve(cli: &Cli) -> Option<PathBuf> {
    if cli.no_cache {
        return None;
    }
    if let Some(d) = &cli.cache_dir {
        return Some(d.clone());
    }
    if let Ok(d) = std::env::var("TORUSRT_CACHE_DIR") {
        if !d.is_empty() {
            return Some(PathBuf::from(d));
        }
    }
    std::env::var_os("HOME").map(|h| PathBuf::from(h).join(".cache").join("torusrt"))
}

/// Content hash of the key triple.  `inputs` serializes with sorted keys
/// (serde_json maps are ordered), so equal effective configurations hash
/// equally regardless of flag spelling order.
pub fn key(subcommand: &str, inputs: &serde_json::Value) -> String {
    let mut h = Sha256::new();
    h.update(subcommand.as_bytes());
    h.update([0u8]);
    h.update(serde_json::to_string(inputs).expect("inputs serialize").as_bytes());
    h.update([0u8]);
    h.update(env!("CARGO_PKG_VERSION").as_bytes());
    let digest = h.finalize();
    let mut out = String::with_capacity(64);
    for b in digest {
        out.push_str(&format!("{b:02x}"));
    }
    out
}

fn path_for(dir: &Path, subcommand: &str, inputs: &serde_json::Value) -> PathBuf {
    dir.join(format!("{}.json", key(subcommand, inputs)))
}

/// Fetch a stored document, treating every failure as a miss.
pub fn lookup(dir: &Path, subcommand: &str, inputs: &serde_json::Value) -> Option<Document> {
    let text = std::fs::read_to_string(path_for(dir, subcommand, inputs)).ok()?;
    serde_json::from_str(&text).ok()
}

/// Store a document, best effort.
pub fn store(dir: &Path, subcommand: &str, doc: &Document) {
    if std::fs::create_dir_all(dir).is_err() {
        return;
    }
    let path = path_for(dir, subcommand, &doc.inputs);
    if let Ok(text) = serde_json::to_string_pretty(doc) {
        let _ = std::fs::write(path, text);
    }
}
