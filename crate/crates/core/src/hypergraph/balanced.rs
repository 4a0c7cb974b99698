//! Brute-force balancedness recognition.
//!
//! Two independent routes. [`Hypergraph::is_balanced`] searches the
//! hypergraph for an odd special cycle (every cycle edge meets the cycle in
//! exactly its two consecutive vertices). [`check_matrix_balanced`] searches
//! a 0/1 matrix for an odd square submatrix with two ones per row and column
//! whose support is a single cycle, i.e. a row/column permutation of `B_k`.

use serde::{Deserialize, Serialize};

use super::{Hypergraph, HypergraphError, IncidenceMatrix};
use crate::vertex_set::VertexSet;

/// Size limits for the exponential searches.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize, Deserialize)]
pub struct BalanceCaps {
    pub max_vertices: usize,
    pub max_edges: usize,
}

impl Default for BalanceCaps {
    fn default() -> Self {
        BalanceCaps {
            max_vertices: 12,
            max_edges: 16,
        }
    }
}

impl BalanceCaps {
    fn check(&self, n: usize, m: usize) -> Result<(), HypergraphError> {
        if n > self.max_vertices {
            return Err(HypergraphError::SizeLimitExceeded {
                what: "vertex count",
                value: n,
                cap: self.max_vertices,
            });
        }
        if m > self.max_edges {
            return Err(HypergraphError::SizeLimitExceeded {
                what: "edge count",
                value: m,
                cap: self.max_edges,
            });
        }
        Ok(())
    }
}

/// An odd cycle `(i_1, E_1, i_2, ..., i_k, E_k, i_1)` in which every `E_t`
/// contains exactly the two cycle vertices `i_t, i_{t+1}`.
#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct CycleWitness {
    pub vertices: Vec<usize>,
    /// 1-based edge indices; `edges[t]` joins `vertices[t]` and `vertices[t + 1]`
    /// (cyclically).
    pub edges: Vec<usize>,
}

impl CycleWitness {
    pub fn len(&self) -> usize {
        self.vertices.len()
    }

    pub fn is_empty(&self) -> bool {
        self.vertices.is_empty()
    }

    /// Re-checks the witness against `h`.
    pub fn is_valid_for(&self, h: &Hypergraph) -> bool {
        let k = self.vertices.len();
        if k < 3 || k.is_multiple_of(2) || self.edges.len() != k {
            return false;
        }
        let on_cycle: VertexSet = self.vertices.iter().copied().collect();
        if on_cycle.len() != k {
            return false;
        }
        let mut seen = VertexSet::EMPTY;
        (0..k).all(|t| {
            let j = self.edges[t];
            if j == 0 || j > h.num_edges() || seen.contains(j) {
                return false;
            }
            seen.insert(j);
            let pair = VertexSet::from_iter([self.vertices[t], self.vertices[(t + 1) % k]]);
            h.edge(j).intersection(on_cycle) == pair
        })
    }
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
#[serde(tag = "verdict", rename_all = "SCREAMING_SNAKE_CASE")]
pub enum Balance {
    Balanced,
    Unbalanced { cycle: CycleWitness },
}

impl Balance {
    pub fn is_balanced(&self) -> bool {
        matches!(self, Balance::Balanced)
    }
}

/// 1-based row and column indices of a `B_k` submatrix.
#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct SubmatrixWitness {
    pub rows: Vec<usize>,
    pub cols: Vec<usize>,
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
#[serde(tag = "verdict", rename_all = "SCREAMING_SNAKE_CASE")]
pub enum MatrixBalance {
    Balanced,
    Unbalanced { submatrix: SubmatrixWitness },
}

impl MatrixBalance {
    pub fn is_balanced(&self) -> bool {
        matches!(self, MatrixBalance::Balanced)
    }
}

impl Hypergraph {
    pub fn is_balanced(&self) -> Result<Balance, HypergraphError> {
        self.is_balanced_with(BalanceCaps::default())
    }

    pub fn is_balanced_with(&self, caps: BalanceCaps) -> Result<Balance, HypergraphError> {
        caps.check(self.n(), self.num_edges())?;
        let mut search = CycleSearch {
            h: self,
            vertices: Vec::new(),
            edges: Vec::new(),
        };
        for start in 1..=self.n() {
            search.vertices.push(start);
            let found = search.extend(start, VertexSet::singleton(start), VertexSet::EMPTY);
            if found {
                return Ok(Balance::Unbalanced {
                    cycle: CycleWitness {
                        vertices: search.vertices,
                        edges: search.edges,
                    },
                });
            }
            search.vertices.clear();
        }
        Ok(Balance::Balanced)
    }
}

struct CycleSearch<'a> {
    h: &'a Hypergraph,
    vertices: Vec<usize>,
    edges: Vec<usize>,
}

impl CycleSearch<'_> {
    /// Extends the current path. The smallest cycle vertex is always the
    /// start, so every rotation is found from exactly one start vertex.
    fn extend(&mut self, start: usize, on_path: VertexSet, used_edges: VertexSet) -> bool {
        let cur = *self.vertices.last().expect("path is never empty");
        let k = self.vertices.len();
        for (idx, &e) in self.h.edges().iter().enumerate() {
            let j = idx + 1;
            if used_edges.contains(j) || !e.contains(cur) {
                continue;
            }
            let meet = e.intersection(on_path);
            if k >= 3 && k % 2 == 1 && meet == VertexSet::from_iter([cur, start]) {
                self.edges.push(j);
                return true;
            }
            if meet != VertexSet::singleton(cur) {
                continue;
            }
            for v in e.difference(on_path).iter().filter(|&v| v > start) {
                // v may only sit in the edge that reaches it.
                if self.edges.iter().any(|&f| self.h.edge(f).contains(v)) {
                    continue;
                }
                self.vertices.push(v);
                self.edges.push(j);
                if self.extend(start, on_path.with(v), used_edges.with(j)) {
                    return true;
                }
                self.vertices.pop();
                self.edges.pop();
            }
        }
        false
    }
}

/// Matrix route: searches every odd column subset `C` (`|C| >= 3`) for `|C|`
/// rows with exactly two ones inside `C` that link the columns of `C` into
/// one cycle.
pub fn check_matrix_balanced(a: &IncidenceMatrix) -> Result<MatrixBalance, HypergraphError> {
    check_matrix_balanced_with(a, BalanceCaps::default())
}

pub fn check_matrix_balanced_with(
    a: &IncidenceMatrix,
    caps: BalanceCaps,
) -> Result<MatrixBalance, HypergraphError> {
    caps.check(a.num_cols(), a.num_rows())?;
    let max_order = a.num_cols().min(a.num_rows());
    let all_cols = VertexSet::full(a.num_cols());
    let mut subsets: Vec<VertexSet> = all_cols
        .subsets()
        .filter(|c| c.len() >= 3 && c.len() % 2 == 1 && c.len() <= max_order)
        .collect();
    subsets.sort();
    for cols in subsets {
        // Rows with exactly two ones inside `cols`, keyed by their pair.
        let pairs: Vec<(usize, VertexSet)> = a
            .rows()
            .iter()
            .enumerate()
            .map(|(r, &s)| (r + 1, s.intersection(cols)))
            .filter(|(_, s)| s.len() == 2)
            .collect();
        if pairs.len() < cols.len() {
            continue;
        }
        let mut degree_ok = true;
        for c in cols.iter() {
            if pairs.iter().filter(|(_, s)| s.contains(c)).count() < 2 {
                degree_ok = false;
                break;
            }
        }
        if !degree_ok {
            continue;
        }
        if let Some((col_order, rows)) = hamiltonian_cycle(cols, &pairs) {
            return Ok(MatrixBalance::Unbalanced {
                submatrix: SubmatrixWitness {
                    rows,
                    cols: col_order,
                },
            });
        }
    }
    Ok(MatrixBalance::Balanced)
}

/// A cycle through every column of `cols` using distinct rows, each row
/// joining two consecutive columns.
fn hamiltonian_cycle(
    cols: VertexSet,
    pairs: &[(usize, VertexSet)],
) -> Option<(Vec<usize>, Vec<usize>)> {
    fn walk(
        cols: VertexSet,
        pairs: &[(usize, VertexSet)],
        start: usize,
        visited: VertexSet,
        order: &mut Vec<usize>,
        rows: &mut Vec<usize>,
    ) -> bool {
        let cur = *order.last().expect("nonempty");
        if visited == cols {
            let closing = VertexSet::from_iter([cur, start]);
            if let Some(&(r, _)) = pairs
                .iter()
                .find(|(r, s)| *s == closing && !rows.contains(r))
            {
                rows.push(r);
                return true;
            }
            return false;
        }
        for &(r, s) in pairs {
            if !s.contains(cur) || rows.contains(&r) {
                continue;
            }
            let next = s.without(cur).max_vertex();
            if visited.contains(next) {
                continue;
            }
            order.push(next);
            rows.push(r);
            if walk(cols, pairs, start, visited.with(next), order, rows) {
                return true;
            }
            order.pop();
            rows.pop();
        }
        false
    }

    let start = cols.iter().next()?;
    let mut order = vec![start];
    let mut rows = Vec::new();
    if walk(
        cols,
        pairs,
        start,
        VertexSet::singleton(start),
        &mut order,
        &mut rows,
    ) {
        Some((order, rows))
    } else {
        None
    }
}
