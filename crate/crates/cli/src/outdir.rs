//! Output directory helper that records every file it writes, so the
//! manifest can list them.

use std::path::{Path, PathBuf};

use anyhow::{Context, Result};

pub struct OutputDir {
    root: PathBuf,
    written: Vec<String>,
}

impl OutputDir {
    /// Creates the directory (and parents) if absent.
    pub fn create(root: &Path) -> Result<Self> {
        std::fs::create_dir_all(root)
            .with_context(|| format!("creating output directory {}", root.display()))?;
        Ok(OutputDir {
            root: root.to_path_buf(),
            written: Vec::new(),
        })
    }

    /// Writes one file under the root; `name` may contain subdirectories.
    pub fn write(&mut self, name: &str, bytes: &[u8]) -> Result<()> {
        let path = self.root.join(name);
        if let Some(parent) = path.parent() {
            std::fs::create_dir_all(parent)?;
        }
        std::fs::write(&path, bytes).with_context(|| format!("writing {}", path.display()))?;
        self.written.push(name.to_string());
        Ok(())
    }

    /// Sorted list of files written so far.
    pub fn written(&self) -> Vec<String> {
        let mut names = self.written.clone();
        names.sort_unstable();
        names
    }
}
