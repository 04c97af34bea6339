//! JSON documents for stratified spaces and vector field zeros.
//!
//! A space file:
//!
//! ```json
//! {
//!   "name": "pinched_torus",
//!   "dimension": 2,
//!   "maximal_simplices": [[0, 1, 2], ...],
//!   "strata": [
//!     {"id": 0, "dim": 2, "name": "regular", "simplices": []},
//!     {"id": 1, "dim": 0, "name": "pinch", "simplices": [[0]]}
//!   ],
//!   "subdivisions": 0
//! }
//! ```
//!
//! Simplices not listed under any stratum belong to the unique stratum of
//! dimension `dimension`. The canonical writer lists every simplex of the other
//! strata and leaves the top stratum implicit.

use std::collections::BTreeMap;
use std::path::Path;

use serde::{Deserialize, Serialize};
use stratih_core::hopf::ZeroDatum;
use stratih_core::{Simplex, SimplicialComplex, StratifiedSpace, Stratum};

use crate::error::CliError;

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct StratumEntry {
    pub id: u32,
    pub dim: usize,
    pub name: String,
    #[serde(default)]
    pub simplices: Vec<Simplex>,
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct SpaceFile {
    #[serde(default, skip_serializing_if = "String::is_empty")]
    pub name: String,
    pub dimension: usize,
    pub maximal_simplices: Vec<Simplex>,
    pub strata: Vec<StratumEntry>,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub subdivisions: Option<usize>,
}

impl SpaceFile {
    /// Canonical document for `space`.
    pub fn from_space(space: &StratifiedSpace, subdivisions: Option<usize>) -> SpaceFile {
        let n = space.n();
        let tops = space.strata().iter().filter(|s| s.dim == n).count();
        let mut listed: BTreeMap<u32, Vec<Simplex>> = BTreeMap::new();
        for (simplex, id) in space.labelled_simplices() {
            let stratum = space.stratum(id).expect("labelled");
            if stratum.dim != n || tops != 1 {
                listed.entry(id).or_default().push(simplex.clone());
            }
        }
        let strata = space
            .strata()
            .iter()
            .map(|s| StratumEntry {
                id: s.id,
                dim: s.dim,
                name: s.name.clone(),
                simplices: listed.remove(&s.id).unwrap_or_default(),
            })
            .collect();
        SpaceFile {
            name: space.name().to_string(),
            dimension: n,
            maximal_simplices: space.complex().maximal_simplices(),
            strata,
            subdivisions,
        }
    }

    pub fn to_space(&self) -> Result<StratifiedSpace, CliError> {
        let complex = SimplicialComplex::build(&self.maximal_simplices)?;
        let mut labels: BTreeMap<Simplex, u32> = BTreeMap::new();
        for stratum in &self.strata {
            for simplex in &stratum.simplices {
                let mut s = simplex.clone();
                s.sort_unstable();
                if !complex.contains(&s) {
                    return Err(CliError::Input(format!(
                        "stratum {} lists {simplex:?}, which is not in the complex",
                        stratum.id
                    )));
                }
                if let Some(previous) = labels.insert(s, stratum.id) {
                    if previous != stratum.id {
                        return Err(CliError::Input(format!("{simplex:?} is listed in strata {previous} and {}", stratum.id)));
                    }
                }
            }
        }
        let tops: Vec<u32> = self.strata.iter().filter(|s| s.dim == self.dimension).map(|s| s.id).collect();
        let default = if tops.len() == 1 { Some(tops[0]) } else { None };
        let strata = self.strata.iter().map(|s| Stratum::new(s.id, s.dim, s.name.clone())).collect();
        let space = StratifiedSpace::stratify(complex, self.dimension, strata, |s| labels.get(s).copied().or(default))?;
        Ok(space.with_name(self.name.clone()))
    }

    pub fn to_json(&self) -> String {
        let mut out = serde_json::to_string_pretty(self).expect("serializable");
        out.push('\n');
        out
    }

    pub fn parse(text: &str) -> Result<SpaceFile, CliError> {
        serde_json::from_str(text).map_err(|e| CliError::Input(format!("bad space file: {e}")))
    }

    pub fn read(path: &Path) -> Result<SpaceFile, CliError> {
        let text = std::fs::read_to_string(path).map_err(|e| CliError::Input(format!("cannot read {}: {e}", path.display())))?;
        let mut file = SpaceFile::parse(&text)?;
        if file.name.is_empty() {
            file.name = path.file_stem().map(|s| s.to_string_lossy().into_owned()).unwrap_or_default();
        }
        Ok(file)
    }
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct ZeroEntry {
    pub stratum: u32,
    #[serde(default)]
    pub component: usize,
    pub index: i64,
    #[serde(default)]
    pub label: String,
}

/// Zeros of a stratified vector field. `field_class` is carried along but not
/// interpreted.
#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct ZerosFile {
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub field_class: Option<String>,
    pub zeros: Vec<ZeroEntry>,
}

impl ZerosFile {
    pub fn data(&self) -> Vec<ZeroDatum> {
        self.zeros.iter().map(|z| ZeroDatum::new(z.stratum, z.component, z.index, z.label.clone())).collect()
    }

    pub fn to_json(&self) -> String {
        let mut out = serde_json::to_string_pretty(self).expect("serializable");
        out.push('\n');
        out
    }

    pub fn parse(text: &str) -> Result<ZerosFile, CliError> {
        serde_json::from_str(text).map_err(|e| CliError::Input(format!("bad zeros file: {e}")))
    }

    pub fn read(path: &Path) -> Result<ZerosFile, CliError> {
        let text = std::fs::read_to_string(path).map_err(|e| CliError::Input(format!("cannot read {}: {e}", path.display())))?;
        ZerosFile::parse(&text)
    }
}
