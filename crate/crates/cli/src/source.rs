use std::fs;
use std::path::{Path, PathBuf};

use gvz_core::group::{direct_product, parse_table_file, Family, Group, Limits};

use crate::CliError;

/// Where a single group comes from.
#[derive(Debug, Clone, PartialEq, Eq)]
pub enum Source {
    /// `name:params`, or two of them joined by ` x ` for a direct product.
    Family(String),
    TableFile(PathBuf),
    PermutationFile(PathBuf),
}

impl Source {
    pub fn load(&self, limits: &Limits) -> Result<Group, CliError> {
        match self {
            Source::Family(spec) => build_family_spec(spec, limits),
            Source::TableFile(path) => {
                let text = read(path)?;
                parse_table_file(&display_name(path), &text, limits).map_err(|e| CliError::group(path, e))
            }
            Source::PermutationFile(path) => {
                let text = read(path)?;
                Group::from_permutation_text(&display_name(path), &text, limits).map_err(|e| CliError::group(path, e))
            }
        }
    }
}

fn read(path: &Path) -> Result<String, CliError> {
    fs::read_to_string(path).map_err(|e| CliError::Io {
        path: path.display().to_string(),
        message: e.to_string(),
    })
}

fn display_name(path: &Path) -> String {
    path.file_stem()
        .map(|s| s.to_string_lossy().into_owned())
        .unwrap_or_else(|| path.display().to_string())
}

/// Parses `dihedral:8` or `quaternion:8 x cyclic:3`.
pub fn build_family_spec(spec: &str, limits: &Limits) -> Result<Group, CliError> {
    let parts: Vec<&str> = spec.split(" x ").map(str::trim).collect();
    let mut groups = parts.iter().map(|p| {
        let family: Family = p.parse().map_err(|e| CliError::Input(format!("{p}: {e}")))?;
        family.build(limits).map_err(|e| CliError::Input(format!("{p}: {e}")))
    });
    let first = groups.next().expect("split yields at least one part")?;
    groups.try_fold(first, |acc, g| {
        let g = g?;
        direct_product(&acc, &g, limits).map_err(|e| CliError::Input(format!("{spec}: {e}")))
    })
}
