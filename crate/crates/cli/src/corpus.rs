use std::fs;
use std::path::{Path, PathBuf};

use anyhow::{Context, Result};
use sinklab_core::GroupSpec;

/// Name of the file listing corpus entries, one spec path per line.
pub const MANIFEST: &str = "MANIFEST";

pub fn read_spec(path: &Path) -> Result<(String, GroupSpec)> {
    let text = fs::read_to_string(path).with_context(|| format!("cannot read {}", path.display()))?;
    let spec = GroupSpec::parse(&text).with_context(|| format!("{}", path.display()))?;
    let id = spec.name.clone().unwrap_or_else(|| {
        path.file_stem()
            .map(|s| s.to_string_lossy().into_owned())
            .unwrap_or_default()
    });
    Ok((id, spec))
}

/// Entries named in `dir/MANIFEST`, or every `*.grp` file in `dir` when there
/// is no manifest.
pub fn load(dir: &Path) -> Result<Vec<(String, GroupSpec)>> {
    let manifest = dir.join(MANIFEST);
    let paths: Vec<PathBuf> = if manifest.exists() {
        fs::read_to_string(&manifest)
            .with_context(|| format!("cannot read {}", manifest.display()))?
            .lines()
            .map(|l| l.split('#').next().unwrap_or("").trim())
            .filter(|l| !l.is_empty())
            .map(|l| dir.join(l))
            .collect()
    } else {
        let mut paths: Vec<PathBuf> = fs::read_dir(dir)
            .with_context(|| format!("cannot list {}", dir.display()))?
            .filter_map(|e| e.ok().map(|e| e.path()))
            .filter(|p| p.extension().is_some_and(|x| x == "grp"))
            .collect();
        paths.sort();
        paths
    };
    paths.iter().map(|p| read_spec(p)).collect()
}
