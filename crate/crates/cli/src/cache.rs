//! On-disk cache of enumerated canonical codes, one file per order and filter.
//!
//! A file holds the header `ct-cache v1 n=<n> filter=<desc>`, one hex code
//! per line and the trailer `end count=<m>`. A header for another order,
//! filter or version marks the file stale; a missing trailer or a count that
//! disagrees with the body marks it corrupt.

use std::fs;
use std::io::{self, Write};
use std::path::{Path, PathBuf};

use chemtree::{CanonicalCode, EnumFilter};
use thiserror::Error;

pub const CACHE_DIR_ENV: &str = "CT_CACHE_DIR";

#[derive(Debug, Error)]
pub enum CacheError {
    #[error("cache io error at {path}: {source}")]
    Io { path: PathBuf, source: io::Error },
    #[error("corrupt cache file {path}: {reason}")]
    Corrupt { path: PathBuf, reason: String },
}

#[derive(Debug, Clone)]
pub struct Cache {
    dir: PathBuf,
}

fn header(n: usize, filter: EnumFilter) -> String {
    format!("ct-cache v1 n={n} filter={filter}")
}

impl Cache {
    pub fn new(dir: impl Into<PathBuf>) -> Self {
        Cache { dir: dir.into() }
    }

    /// `$CT_CACHE_DIR`, else `$XDG_CACHE_HOME/ct`, else `$HOME/.cache/ct`.
    pub fn from_env() -> Option<Self> {
        let var = |k: &str| std::env::var_os(k).filter(|v| !v.is_empty()).map(PathBuf::from);
        var(CACHE_DIR_ENV)
            .or_else(|| var("XDG_CACHE_HOME").map(|d| d.join("ct")))
            .or_else(|| var("HOME").map(|d| d.join(".cache").join("ct")))
            .map(Cache::new)
    }

    pub fn dir(&self) -> &Path {
        &self.dir
    }

    pub fn path(&self, n: usize, filter: EnumFilter) -> PathBuf {
        self.dir.join(format!("n{n}-{filter}.codes"))
    }

    /// Writes the codes atomically (temporary file, then rename).
    pub fn store(&self, n: usize, filter: EnumFilter, codes: &[CanonicalCode]) -> Result<(), CacheError> {
        let path = self.path(n, filter);
        let io_err = |source| CacheError::Io { path: path.clone(), source };
        fs::create_dir_all(&self.dir).map_err(io_err)?;
        let tmp = path.with_extension(format!("tmp{}", std::process::id()));
        let write = || -> io::Result<()> {
            let mut f = io::BufWriter::new(fs::File::create(&tmp)?);
            writeln!(f, "{}", header(n, filter))?;
            for c in codes {
                writeln!(f, "{}", c.to_hex())?;
            }
            writeln!(f, "end count={}", codes.len())?;
            f.into_inner().map_err(|e| e.into_error())?.sync_all()?;
            fs::rename(&tmp, &path)
        };
        write().map_err(|e| {
            let _ = fs::remove_file(&tmp);
            io_err(e)
        })
    }

    /// `Ok(None)` when the file is missing or stale.
    pub fn load(&self, n: usize, filter: EnumFilter) -> Result<Option<Vec<CanonicalCode>>, CacheError> {
        let path = self.path(n, filter);
        let text = match fs::read_to_string(&path) {
            Ok(t) => t,
            Err(e) if e.kind() == io::ErrorKind::NotFound => return Ok(None),
            Err(source) => return Err(CacheError::Io { path, source }),
        };
        let corrupt = |reason: &str| CacheError::Corrupt { path: path.clone(), reason: reason.to_owned() };
        let mut lines = text.lines();
        if lines.next() != Some(header(n, filter).as_str()) {
            return Ok(None);
        }
        let mut codes = Vec::new();
        for line in lines {
            if let Some(count) = line.strip_prefix("end count=") {
                let count: usize = count.parse().map_err(|_| corrupt("bad trailer"))?;
                if count != codes.len() {
                    return Err(corrupt("trailer count disagrees with the body"));
                }
                if !text.ends_with('\n') {
                    return Err(corrupt("unterminated trailer"));
                }
                return Ok(Some(codes));
            }
            codes.push(CanonicalCode::from_hex(line).ok_or_else(|| corrupt("bad hex code"))?);
        }
        Err(corrupt("missing trailer"))
    }
}
