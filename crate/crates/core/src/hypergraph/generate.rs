//! Seeded instance families.

use std::fmt;
use std::str::FromStr;

use rand::seq::SliceRandom;
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;
use serde::{Deserialize, Serialize};

use super::{Hypergraph, HypergraphError};
use crate::vertex_set::VertexSet;

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, Serialize, Deserialize)]
#[serde(rename_all = "snake_case")]
pub enum Family {
    Bipartite,
    Tree,
    EvenCycle,
    OddCycle,
    Interval,
}

impl Family {
    pub const ALL: [Family; 5] = [
        Family::Bipartite,
        Family::Tree,
        Family::EvenCycle,
        Family::OddCycle,
        Family::Interval,
    ];

    pub fn name(self) -> &'static str {
        match self {
            Family::Bipartite => "bipartite",
            Family::Tree => "tree",
            Family::EvenCycle => "even_cycle",
            Family::OddCycle => "odd_cycle",
            Family::Interval => "interval",
        }
    }

    /// Whether every instance of the family is balanced.
    pub fn is_balanced(self) -> bool {
        self != Family::OddCycle
    }
}

impl fmt::Display for Family {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.name())
    }
}

impl FromStr for Family {
    type Err = HypergraphError;

    fn from_str(s: &str) -> Result<Self, Self::Err> {
        Family::ALL
            .into_iter()
            .find(|f| f.name() == s)
            .ok_or_else(|| HypergraphError::UnknownFamily(s.to_string()))
    }
}

/// Family plus its size parameters.
#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
#[serde(tag = "family", rename_all = "snake_case")]
pub enum FamilySpec {
    /// Random bipartite graph on parts `{1..left}` and `{left+1..left+right}`;
    /// each cross pair is an edge with probability `density`.
    Bipartite {
        left: usize,
        right: usize,
        density: f64,
    },
    /// Uniform random recursive tree on `n` vertices.
    Tree {
        n: usize,
    },
    EvenCycle {
        n: usize,
    },
    OddCycle {
        n: usize,
    },
    /// `edges` distinct random intervals `[a, b]` of `{1..n}`.
    Interval {
        n: usize,
        edges: usize,
    },
}

impl FamilySpec {
    pub fn family(&self) -> Family {
        match self {
            FamilySpec::Bipartite { .. } => Family::Bipartite,
            FamilySpec::Tree { .. } => Family::Tree,
            FamilySpec::EvenCycle { .. } => Family::EvenCycle,
            FamilySpec::OddCycle { .. } => Family::OddCycle,
            FamilySpec::Interval { .. } => Family::Interval,
        }
    }

    fn check(&self) -> Result<(), HypergraphError> {
        let bad = |msg: String| Err(HypergraphError::BadParams(msg));
        match *self {
            FamilySpec::Bipartite {
                left,
                right,
                density,
            } => {
                if left == 0 || right == 0 {
                    return bad(format!(
                        "bipartite parts must be nonempty, got {left}+{right}"
                    ));
                }
                if left + right > 64 {
                    return bad(format!("{} vertices exceed 64", left + right));
                }
                if left * right > 64 {
                    return bad(format!("up to {} edges exceed 64", left * right));
                }
                if !(density > 0.0 && density <= 1.0) {
                    return bad(format!("density must lie in (0, 1], got {density}"));
                }
            }
            FamilySpec::Tree { n } => {
                if !(2..=64).contains(&n) {
                    return bad(format!("tree needs 2..=64 vertices, got {n}"));
                }
            }
            FamilySpec::EvenCycle { n } => {
                if n < 4 || n % 2 == 1 || n > 64 {
                    return bad(format!("even cycle needs even n in 4..=64, got {n}"));
                }
            }
            FamilySpec::OddCycle { n } => {
                if n < 3 || n % 2 == 0 || n > 63 {
                    return bad(format!("odd cycle needs odd n in 3..=63, got {n}"));
                }
            }
            FamilySpec::Interval { n, edges } => {
                if n == 0 || n > 64 || edges == 0 || edges > 64 {
                    return bad(format!(
                        "interval needs n, edges in 1..=64, got {n}, {edges}"
                    ));
                }
                if edges > n * (n + 1) / 2 {
                    return bad(format!(
                        "only {} intervals exist in 1..={n}",
                        n * (n + 1) / 2
                    ));
                }
            }
        }
        Ok(())
    }
}

/// Deterministic for a fixed `(spec, seed)`.
pub fn generate(spec: &FamilySpec, seed: u64) -> Result<Hypergraph, HypergraphError> {
    spec.check()?;
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    match *spec {
        FamilySpec::Bipartite {
            left,
            right,
            density,
        } => {
            let mut edges = Vec::new();
            for i in 1..=left {
                for j in left + 1..=left + right {
                    if density >= 1.0 || rng.gen_bool(density) {
                        edges.push(VertexSet::from_iter([i, j]));
                    }
                }
            }
            if edges.is_empty() {
                let i = rng.gen_range(1..=left);
                let j = rng.gen_range(left + 1..=left + right);
                edges.push(VertexSet::from_iter([i, j]));
            }
            Hypergraph::from_sets(left + right, edges)
        }
        FamilySpec::Tree { n } => {
            let edges = (2..=n)
                .map(|v| VertexSet::from_iter([rng.gen_range(1..v), v]))
                .collect();
            Hypergraph::from_sets(n, edges)
        }
        FamilySpec::EvenCycle { n } | FamilySpec::OddCycle { n } => Ok(Hypergraph::cycle(n)),
        FamilySpec::Interval { n, edges } => {
            let mut all: Vec<VertexSet> = Vec::new();
            for a in 1..=n {
                for b in a..=n {
                    all.push((a..=b).collect());
                }
            }
            all.shuffle(&mut rng);
            all.truncate(edges);
            Hypergraph::from_sets(n, all)
        }
    }
}
