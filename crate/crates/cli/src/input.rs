//! Instance files, ideal literals, edge-split systems and the corpus
//! manifest.

use std::fs;
use std::path::{Path, PathBuf};

use coverdepth::{ClosureMode, EdgeSplitSystem, Hypergraph, MonomialIdeal, VertexSet};
use serde::{Deserialize, Serialize};
use sha2::{Digest, Sha256};

use crate::CliError;

pub fn read_text(path: &Path) -> Result<String, CliError> {
    fs::read_to_string(path).map_err(|e| CliError::Io {
        path: path.to_path_buf(),
        source: e,
    })
}

fn parse<T: for<'de> Deserialize<'de>>(text: &str, what: &str) -> Result<T, CliError> {
    serde_json::from_str(text).map_err(|e| CliError::Parse(format!("{what}: {e}")))
}

pub fn load_hypergraph(path: &Path) -> Result<Hypergraph, CliError> {
    parse(&read_text(path)?, &path.display().to_string())
}

/// `[[0,1,0],[1,0,1]]`, either inline or as a path to a file holding it.
pub fn load_ideal(arg: &str) -> Result<MonomialIdeal, CliError> {
    let text = if arg.trim_start().starts_with('[') {
        arg.to_string()
    } else {
        read_text(Path::new(arg))?
    };
    let lists: Vec<Vec<u32>> = parse(&text, "ideal")?;
    MonomialIdeal::from_exponent_lists(None, lists).map_err(|e| CliError::Parse(e.to_string()))
}

/// Hypergraph file with optional `upper` (1-based edge indices) and `t`.
#[derive(Deserialize)]
struct RawSystem {
    n: usize,
    edges: Vec<Vec<usize>>,
    upper: Option<Vec<usize>>,
    t: Option<u32>,
}

pub struct SystemInput {
    pub hypergraph: Hypergraph,
    pub upper: Option<VertexSet>,
    pub t: u32,
}

impl SystemInput {
    pub fn system(&self, upper: VertexSet, mode: ClosureMode) -> Result<EdgeSplitSystem, CliError> {
        EdgeSplitSystem::new(self.hypergraph.clone(), upper, self.t, mode)
            .map_err(|e| CliError::Parse(e.to_string()))
    }

    /// The given split, or every split when the file names none.
    pub fn splits(&self) -> Vec<VertexSet> {
        match self.upper {
            Some(u) => vec![u],
            None => self.hypergraph.all_edges().subsets().collect(),
        }
    }
}

pub fn load_system(path: &Path) -> Result<SystemInput, CliError> {
    let raw: RawSystem = parse(&read_text(path)?, &path.display().to_string())?;
    let hypergraph =
        Hypergraph::new(raw.n, raw.edges).map_err(|e| CliError::Parse(e.to_string()))?;
    let upper = match raw.upper {
        None => None,
        Some(list) => {
            let m = hypergraph.num_edges();
            if let Some(&bad) = list.iter().find(|&&j| j == 0 || j > m) {
                return Err(CliError::Parse(format!(
                    "upper edge index {bad} outside 1..={m}"
                )));
            }
            Some(list.into_iter().collect())
        }
    };
    Ok(SystemInput {
        hypergraph,
        upper,
        t: raw.t.unwrap_or(1),
    })
}

#[derive(Debug, Clone, Serialize, Deserialize)]
pub struct Expected {
    #[serde(skip_serializing_if = "Option::is_none", default)]
    pub t1_nonincreasing: Option<bool>,
    #[serde(skip_serializing_if = "Option::is_none", default)]
    pub t2_dstab_le_n: Option<bool>,
    #[serde(skip_serializing_if = "Option::is_none", default)]
    pub limit_matches: Option<bool>,
    #[serde(skip_serializing_if = "Option::is_none", default)]
    pub ntf_holds: Option<bool>,
}

#[derive(Debug, Clone, Serialize, Deserialize)]
pub struct ManifestEntry {
    pub id: String,
    pub file: String,
    pub family: String,
    pub balanced: bool,
    pub expected: Expected,
}

#[derive(Debug, Clone, Serialize, Deserialize)]
pub struct Manifest {
    pub instances: Vec<ManifestEntry>,
}

pub struct Instance {
    pub id: String,
    pub hypergraph: Hypergraph,
    pub expected: Option<Expected>,
}

/// Instances from a corpus directory (through its manifest) or from
/// individual files, identified by file stem.
pub fn load_instances(corpus: Option<&Path>, files: &[PathBuf]) -> Result<Vec<Instance>, CliError> {
    let mut out = Vec::new();
    if let Some(dir) = corpus {
        let manifest: Manifest = parse(&read_text(&dir.join("manifest.json"))?, "manifest.json")?;
        for entry in manifest.instances {
            let hypergraph = load_hypergraph(&dir.join(&entry.file))?;
            out.push(Instance {
                id: entry.id,
                hypergraph,
                expected: Some(entry.expected),
            });
        }
    }
    for path in files {
        let id = path
            .file_stem()
            .map(|s| s.to_string_lossy().into_owned())
            .unwrap_or_else(|| path.display().to_string());
        out.push(Instance {
            id,
            hypergraph: load_hypergraph(path)?,
            expected: None,
        });
    }
    let mut seen = std::collections::BTreeSet::new();
    for inst in &out {
        if !seen.insert(inst.id.as_str()) {
            return Err(CliError::Parse(format!(
                "duplicate instance id `{}`",
                inst.id
            )));
        }
    }
    Ok(out)
}

/// SHA-256 over the canonical JSON of each instance, in id order.
pub fn content_hash(instances: &[Instance]) -> String {
    let mut sorted: Vec<&Instance> = instances.iter().collect();
    sorted.sort_by(|a, b| a.id.cmp(&b.id));
    let mut hasher = Sha256::new();
    for inst in sorted {
        hasher.update(inst.id.as_bytes());
        hasher.update(b"\n");
        hasher.update(serde_json::to_vec(&inst.hypergraph).expect("hypergraph serializes"));
        hasher.update(b"\n");
    }
    hex::encode(hasher.finalize())
}
