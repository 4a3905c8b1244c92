//! Optional on-disk persistence of the character memo table.
//!
//! When `SPECHT_CACHE_DIR` is set, the table is loaded before a command runs
//! and written back afterwards if it grew. A missing, stale or corrupt file
//! only costs recomputation, so failures are reported on stderr and ignored.

use std::fs::{self, File};
use std::io::{BufReader, BufWriter, Write};
use std::path::PathBuf;

use specht::characters::{cache, cache_len};

pub const ENV_VAR: &str = "SPECHT_CACHE_DIR";
const FILE_NAME: &str = "mn-cache-v1.bin";

pub struct Cache {
    path: PathBuf,
    loaded: usize,
}

impl Cache {
    /// Loads the cache file if the environment variable names a directory.
    pub fn open() -> Option<Cache> {
        let dir = std::env::var_os(ENV_VAR).filter(|d| !d.is_empty())?;
        let path = PathBuf::from(dir).join(FILE_NAME);
        if path.exists() {
            let loaded = File::open(&path)
                .map_err(specht::Error::from)
                .and_then(|f| cache::load(BufReader::new(f)));
            if let Err(e) = loaded {
                eprintln!("warning: ignoring cache {}: {e}", path.display());
            }
        }
        Some(Cache {
            path,
            loaded: cache_len(),
        })
    }

    /// Writes the table back through a temporary file and a rename, so a
    /// concurrent reader never sees a partial file.
    pub fn save(&self) {
        if cache_len() <= self.loaded {
            return;
        }
        if let Err(e) = self.write() {
            eprintln!(
                "warning: could not write cache {}: {e}",
                self.path.display()
            );
        }
    }

    fn write(&self) -> specht::Result<()> {
        if let Some(dir) = self.path.parent() {
            fs::create_dir_all(dir)?;
        }
        let tmp = self
            .path
            .with_extension(format!("tmp.{}", std::process::id()));
        let result = (|| {
            let mut w = BufWriter::new(File::create(&tmp)?);
            cache::save(&mut w)?;
            w.flush()?;
            drop(w);
            fs::rename(&tmp, &self.path)?;
            Ok(())
        })();
        if result.is_err() {
            let _ = fs::remove_file(&tmp);
        }
        result
    }
}
