//! Text persistence for the KL memo.
//!
//! ```text
//! KLCACHE 1
//! 4;2143;4231;1,1
//! ```
//!
//! One entry per line, `N;x;w;c0,c1,...`, sorted by `(N, x, w)`. Loading is
//! all-or-nothing.

use std::fs;
use std::path::Path;

use super::engine::KlEngine;
use super::perm::{leq_unchecked, Permutation};
use super::poly::KLPolynomial;
use crate::error::{Error, Result};

pub const CACHE_HEADER: &str = "KLCACHE 1";

/// File name used inside a cache directory.
pub const CACHE_FILE_NAME: &str = "kl_cache.txt";

/// Serialize the memo table.
pub fn write_cache(engine: &KlEngine) -> String {
    let mut out = String::from(CACHE_HEADER);
    out.push('\n');
    for (x, w, p) in engine.snapshot() {
        let coeffs: Vec<String> = p.coeffs().iter().map(i64::to_string).collect();
        out.push_str(&format!("{};{};{};{}\n", x.size(), x, w, coeffs.join(",")));
    }
    out
}

/// Parse a cache file and merge it into `engine`. Nothing is inserted unless
/// every entry validates.
pub fn read_cache(engine: &KlEngine, text: &str) -> Result<usize> {
    let mut lines = text.lines();
    let header = lines.next().unwrap_or("");
    if header != CACHE_HEADER {
        return Err(Error::VersionMismatch {
            expected: CACHE_HEADER.into(),
            found: header.into(),
        });
    }
    let mut entries = Vec::new();
    for (k, line) in lines.enumerate() {
        let lineno = k + 2;
        let corrupt = |msg: &str| Error::CorruptEntry {
            line: lineno,
            msg: msg.into(),
        };
        let fields: Vec<&str> = line.split(';').collect();
        if fields.len() != 4 {
            return Err(corrupt("expected four ';'-separated fields"));
        }
        let n: usize = fields[0].parse().map_err(|_| corrupt("bad size"))?;
        let x: Permutation = fields[1].parse().map_err(|_| corrupt("bad permutation x"))?;
        let w: Permutation = fields[2].parse().map_err(|_| corrupt("bad permutation w"))?;
        if x.size() != n || w.size() != n {
            return Err(corrupt("permutation size disagrees with N"));
        }
        if n > 9 && !fields[1].contains(',') && n > 1 {
            return Err(corrupt("permutations beyond size 9 must be comma-separated"));
        }
        let coeffs = fields[3]
            .split(',')
            .map(|c| c.parse::<i64>())
            .collect::<std::result::Result<Vec<_>, _>>()
            .map_err(|_| corrupt("bad coefficient"))?;
        let p = KLPolynomial::from_coeffs(coeffs);
        if !leq_unchecked(&x, &w) {
            return Err(corrupt("x is not below w in Bruhat order"));
        }
        if p.coeff(0) != 1 || p.coeffs().iter().any(|&c| c < 0) {
            return Err(corrupt("polynomial must have constant term 1 and non-negative coefficients"));
        }
        let gap = w.length() - x.length();
        if x != w && 2 * p.degree().unwrap_or(0) + 1 > gap {
            return Err(corrupt("degree bound violated"));
        }
        if x == w && p != KLPolynomial::one() {
            return Err(corrupt("P_{w,w} must be 1"));
        }
        entries.push((x, w, p));
    }
    let count = entries.len();
    for (x, w, p) in entries {
        engine.insert(x, w, p);
    }
    Ok(count)
}

/// Write the memo table to `path`.
pub fn cache_store(engine: &KlEngine, path: &Path) -> Result<()> {
    fs::write(path, write_cache(engine))?;
    Ok(())
}

/// Load `path` into the memo table; returns the number of entries.
pub fn cache_load(engine: &KlEngine, path: &Path) -> Result<usize> {
    let text = fs::read_to_string(path)?;
    read_cache(engine, &text)
}
