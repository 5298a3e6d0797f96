//! On-disk enumeration cache under `ZS_CACHE_DIR`. Only complete runs are
//! stored, so a hit replays exactly the bytes a recomputation would write.

use std::fs;
use std::path::{Path, PathBuf};

use anyhow::Context;
use zs_core::EnumSpec;

pub struct Cache {
    dir: PathBuf,
}

impl Cache {
    pub fn from_env() -> Option<Self> {
        let dir = std::env::var_os("ZS_CACHE_DIR")?;
        if dir.is_empty() {
            return None;
        }
        Some(Cache { dir: dir.into() })
    }

    pub fn path_for(&self, spec: &EnumSpec) -> PathBuf {
        let name = format!(
            "n{}-len{}-{}-{}-z{}-d{}-v{}.jsonl",
            spec.n,
            spec.min_length,
            spec.max_length,
            spec.filter.as_str(),
            u8::from(spec.exclude_zero),
            u8::from(spec.dedupe_units),
            env!("CARGO_PKG_VERSION"),
        );
        self.dir.join(name)
    }

    /// Writes through a temporary file so concurrent readers never see a partial entry.
    pub fn store(&self, path: &Path, bytes: &[u8]) -> anyhow::Result<()> {
        fs::create_dir_all(&self.dir)
            .with_context(|| format!("creating {}", self.dir.display()))?;
        let tmp = path.with_extension(format!("tmp{}", std::process::id()));
        fs::write(&tmp, bytes).with_context(|| format!("writing {}", tmp.display()))?;
        fs::rename(&tmp, path).with_context(|| format!("renaming to {}", path.display()))?;
        Ok(())
    }
}
