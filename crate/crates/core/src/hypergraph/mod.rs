//! Hypergraphs on `{1..n}`, their incidence matrices, minimal vertex covers,
//! restriction to the edges avoiding a vertex subset, and seeded instance
//! families.

mod balanced;
mod generate;

use std::fmt;

use serde::{Deserialize, Serialize};
use thiserror::Error;

use crate::vertex_set::{minimal_transversals, VertexSet, MAX_VERTICES};

pub use balanced::{
    check_matrix_balanced, Balance, BalanceCaps, CycleWitness, MatrixBalance, SubmatrixWitness,
};
pub use generate::{generate, Family, FamilySpec};

/// Set of 1-based edge indices `E_1..E_m`, packed like a [`VertexSet`].
pub type EdgeSet = VertexSet;

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum HypergraphError {
    #[error("edge #{index} is empty")]
    EmptyEdge { index: usize },
    #[error("edge #{index} repeats edge #{first}")]
    DuplicateEdge { index: usize, first: usize },
    #[error("edge #{index} contains vertex {vertex} outside 1..={n}")]
    VertexOutOfRange {
        index: usize,
        vertex: usize,
        n: usize,
    },
    #[error("{n} vertices requested, at most {MAX_VERTICES} supported")]
    TooManyVertices { n: usize },
    #[error("{n} edges requested, at most {MAX_VERTICES} supported")]
    TooManyEdges { n: usize },
    #[error("{what} = {value} exceeds the brute-force cap {cap}")]
    SizeLimitExceeded {
        what: &'static str,
        value: usize,
        cap: usize,
    },
    #[error("unknown hypergraph family `{0}`")]
    UnknownFamily(String),
    #[error("bad generator parameters: {0}")]
    BadParams(String),
    #[error("incidence matrix is malformed: {0}")]
    BadMatrix(String),
}

/// A hypergraph with vertex set `{1..n}` and an ordered list of distinct
/// nonempty edges.
///
/// Edge order is significant: edge `j` (1-based) is `E_j` in every edge
/// split, degree-complex key and report.
#[derive(Clone, PartialEq, Eq, Hash, Serialize, Deserialize)]
#[serde(try_from = "RawHypergraph", into = "RawHypergraph")]
pub struct Hypergraph {
    n: usize,
    edges: Vec<VertexSet>,
}

#[derive(Serialize, Deserialize)]
struct RawHypergraph {
    n: usize,
    edges: Vec<Vec<usize>>,
}

impl TryFrom<RawHypergraph> for Hypergraph {
    type Error = HypergraphError;

    fn try_from(raw: RawHypergraph) -> Result<Self, Self::Error> {
        Hypergraph::new(raw.n, raw.edges)
    }
}

impl From<Hypergraph> for RawHypergraph {
    fn from(h: Hypergraph) -> Self {
        RawHypergraph {
            n: h.n,
            edges: h.edges.iter().map(|e| e.to_vec()).collect(),
        }
    }
}

impl Hypergraph {
    /// Builds and validates a hypergraph from 1-based vertex lists.
    pub fn new(n: usize, edges: Vec<Vec<usize>>) -> Result<Self, HypergraphError> {
        if n > MAX_VERTICES {
            return Err(HypergraphError::TooManyVertices { n });
        }
        let mut sets = Vec::with_capacity(edges.len());
        for (k, edge) in edges.iter().enumerate() {
            if let Some(&vertex) = edge.iter().find(|&&v| v == 0 || v > n) {
                return Err(HypergraphError::VertexOutOfRange {
                    index: k + 1,
                    vertex,
                    n,
                });
            }
            sets.push(edge.iter().copied().collect());
        }
        Self::from_sets(n, sets)
    }

    pub fn from_sets(n: usize, edges: Vec<VertexSet>) -> Result<Self, HypergraphError> {
        let h = Hypergraph { n, edges };
        h.validate()?;
        Ok(h)
    }

    /// Checks the structural invariants: edges nonempty, inside `{1..n}`,
    /// pairwise distinct.
    pub fn validate(&self) -> Result<(), HypergraphError> {
        if self.n > MAX_VERTICES {
            return Err(HypergraphError::TooManyVertices { n: self.n });
        }
        if self.edges.len() > MAX_VERTICES {
            return Err(HypergraphError::TooManyEdges {
                n: self.edges.len(),
            });
        }
        let universe = VertexSet::full(self.n);
        for (k, &e) in self.edges.iter().enumerate() {
            let index = k + 1;
            if e.is_empty() {
                return Err(HypergraphError::EmptyEdge { index });
            }
            if !e.is_subset(universe) {
                return Err(HypergraphError::VertexOutOfRange {
                    index,
                    vertex: e.max_vertex(),
                    n: self.n,
                });
            }
            if let Some(first) = self.edges[..k].iter().position(|&f| f == e) {
                return Err(HypergraphError::DuplicateEdge {
                    index,
                    first: first + 1,
                });
            }
        }
        Ok(())
    }

    /// The path `1 - 2 - ... - n`.
    pub fn path(n: usize) -> Self {
        let edges = (1..n).map(|i| VertexSet::from_iter([i, i + 1])).collect();
        Self::from_sets(n, edges).expect("path is well formed")
    }

    /// The cycle `1 - 2 - ... - n - 1`, `n >= 3`.
    pub fn cycle(n: usize) -> Self {
        assert!(n >= 3, "a cycle needs at least three vertices");
        let mut edges: Vec<VertexSet> = (1..n).map(|i| VertexSet::from_iter([i, i + 1])).collect();
        edges.push(VertexSet::from_iter([n, 1]));
        Self::from_sets(n, edges).expect("cycle is well formed")
    }

    /// `K_{a,b}` with parts `{1..a}` and `{a+1..a+b}`.
    pub fn complete_bipartite(a: usize, b: usize) -> Self {
        let mut edges = Vec::with_capacity(a * b);
        for i in 1..=a {
            for j in a + 1..=a + b {
                edges.push(VertexSet::from_iter([i, j]));
            }
        }
        Self::from_sets(a + b, edges).expect("complete bipartite graph is well formed")
    }

    pub fn n(&self) -> usize {
        self.n
    }

    pub fn vertices(&self) -> VertexSet {
        VertexSet::full(self.n)
    }

    pub fn edges(&self) -> &[VertexSet] {
        &self.edges
    }

    pub fn num_edges(&self) -> usize {
        self.edges.len()
    }

    pub fn all_edges(&self) -> EdgeSet {
        VertexSet::full(self.edges.len())
    }

    /// Edge `E_j`, 1-based.
    pub fn edge(&self, j: usize) -> VertexSet {
        self.edges[j - 1]
    }

    pub fn incidence_matrix(&self) -> IncidenceMatrix {
        IncidenceMatrix {
            cols: self.n,
            rows: self.edges.clone(),
        }
    }

    /// Inclusion-minimal vertex covers, smallest first and then
    /// lexicographic. No edges gives the single cover `∅`.
    pub fn minimal_vertex_covers(&self) -> Vec<VertexSet> {
        minimal_transversals(&self.edges)
    }

    /// The hypergraph on `V ∖ f` whose edges are the edges disjoint from
    /// `f`, relabeled onto `{1..|V ∖ f|}` in increasing order.
    pub fn restrict(&self, f: VertexSet) -> Restriction {
        let kept = self.vertices().difference(f);
        let vertex_map = kept.to_vec();
        let mut relabel = [0usize; MAX_VERTICES + 1];
        for (new, &old) in vertex_map.iter().enumerate() {
            relabel[old] = new + 1;
        }
        let mut edges = Vec::new();
        let mut edge_map = Vec::new();
        for (j, &e) in self.edges.iter().enumerate() {
            if !e.intersects(f) {
                edges.push(e.iter().map(|v| relabel[v]).collect());
                edge_map.push(j + 1);
            }
        }
        Restriction {
            hypergraph: Hypergraph {
                n: vertex_map.len(),
                edges,
            },
            vertex_map,
            edge_map,
        }
    }
}

impl fmt::Debug for Hypergraph {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "Hypergraph(n={}, edges=[", self.n)?;
        for (k, e) in self.edges.iter().enumerate() {
            if k > 0 {
                f.write_str(",")?;
            }
            write!(f, "{e}")?;
        }
        f.write_str("])")
    }
}

/// Result of [`Hypergraph::restrict`].
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Restriction {
    pub hypergraph: Hypergraph,
    /// `vertex_map[i - 1]` is the original label of new vertex `i`.
    pub vertex_map: Vec<usize>,
    /// `edge_map[j - 1]` is the original index of new edge `j`.
    pub edge_map: Vec<usize>,
}

/// A 0/1 matrix stored by row supports; columns are 1-based.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct IncidenceMatrix {
    cols: usize,
    rows: Vec<VertexSet>,
}

impl IncidenceMatrix {
    pub fn from_dense(rows: &[Vec<u8>]) -> Result<Self, HypergraphError> {
        let cols = rows.first().map_or(0, Vec::len);
        if cols > MAX_VERTICES || rows.len() > MAX_VERTICES {
            return Err(HypergraphError::BadMatrix(format!(
                "at most {MAX_VERTICES} rows and columns supported"
            )));
        }
        let mut supports = Vec::with_capacity(rows.len());
        for (r, row) in rows.iter().enumerate() {
            if row.len() != cols {
                return Err(HypergraphError::BadMatrix(format!(
                    "row {} has {} entries, expected {cols}",
                    r + 1,
                    row.len()
                )));
            }
            let mut s = VertexSet::EMPTY;
            for (c, &x) in row.iter().enumerate() {
                match x {
                    0 => {}
                    1 => s.insert(c + 1),
                    other => {
                        return Err(HypergraphError::BadMatrix(format!(
                            "entry ({}, {}) is {other}",
                            r + 1,
                            c + 1
                        )))
                    }
                }
            }
            supports.push(s);
        }
        Ok(IncidenceMatrix {
            cols,
            rows: supports,
        })
    }

    pub fn num_rows(&self) -> usize {
        self.rows.len()
    }

    pub fn num_cols(&self) -> usize {
        self.cols
    }

    /// Support of row `r` (1-based).
    pub fn row(&self, r: usize) -> VertexSet {
        self.rows[r - 1]
    }

    pub fn rows(&self) -> &[VertexSet] {
        &self.rows
    }

    pub fn entry(&self, r: usize, c: usize) -> u8 {
        u8::from(self.rows[r - 1].contains(c))
    }

    pub fn to_dense(&self) -> Vec<Vec<u8>> {
        (1..=self.rows.len())
            .map(|r| (1..=self.cols).map(|c| self.entry(r, c)).collect())
            .collect()
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn set(vs: &[usize]) -> VertexSet {
        vs.iter().copied().collect()
    }

    fn triangle() -> Hypergraph {
        Hypergraph::new(3, vec![vec![1, 2], vec![2, 3], vec![1, 3]]).unwrap()
    }

    #[test]
    fn validate_accepts_path() {
        assert!(Hypergraph::new(3, vec![vec![1, 2], vec![2, 3]]).is_ok());
    }

    #[test]
    fn validate_rejects_duplicates() {
        let err = Hypergraph::new(3, vec![vec![1, 2], vec![2, 1]]).unwrap_err();
        assert_eq!(err, HypergraphError::DuplicateEdge { index: 2, first: 1 });
    }

    #[test]
    fn validate_rejects_out_of_range() {
        let err = Hypergraph::new(2, vec![vec![1, 3]]).unwrap_err();
        assert_eq!(
            err,
            HypergraphError::VertexOutOfRange {
                index: 1,
                vertex: 3,
                n: 2
            }
        );
        let err = Hypergraph::from_sets(2, vec![set(&[1, 3])]).unwrap_err();
        assert!(matches!(
            err,
            HypergraphError::VertexOutOfRange { index: 1, .. }
        ));
    }

    #[test]
    fn validate_rejects_empty_edge() {
        let err = Hypergraph::new(2, vec![vec![1], vec![]]).unwrap_err();
        assert_eq!(err, HypergraphError::EmptyEdge { index: 2 });
    }

    #[test]
    fn covers_of_small_graphs() {
        assert_eq!(
            Hypergraph::path(3).minimal_vertex_covers(),
            vec![set(&[2]), set(&[1, 3])]
        );
        assert_eq!(
            triangle().minimal_vertex_covers(),
            vec![set(&[1, 2]), set(&[1, 3]), set(&[2, 3])]
        );
        assert_eq!(
            Hypergraph::path(2).minimal_vertex_covers(),
            vec![set(&[1]), set(&[2])]
        );
        let empty = Hypergraph::new(3, vec![]).unwrap();
        assert_eq!(empty.minimal_vertex_covers(), vec![VertexSet::EMPTY]);
    }

    #[test]
    fn restrict_examples() {
        let p3 = Hypergraph::path(3);
        let r = p3.restrict(set(&[3]));
        assert_eq!(r.hypergraph, Hypergraph::path(2));
        assert_eq!(r.vertex_map, vec![1, 2]);
        assert_eq!(r.edge_map, vec![1]);

        let r = p3.restrict(set(&[2]));
        assert_eq!(r.hypergraph, Hypergraph::new(2, vec![]).unwrap());
        assert_eq!(r.vertex_map, vec![1, 3]);

        assert_eq!(triangle().restrict(VertexSet::EMPTY).hypergraph, triangle());
    }

    #[test]
    fn json_format_is_canonical() {
        let h: Hypergraph = serde_json::from_str(r#"{"n":3,"edges":[[2,1],[2,3]]}"#).unwrap();
        assert_eq!(
            serde_json::to_string(&h).unwrap(),
            r#"{"n":3,"edges":[[1,2],[2,3]]}"#
        );
        assert!(serde_json::from_str::<Hypergraph>(r#"{"n":2,"edges":[[1,3]]}"#).is_err());
    }

    #[test]
    fn incidence_matrix_rows_are_edges() {
        let a = Hypergraph::path(3).incidence_matrix();
        assert_eq!(a.to_dense(), vec![vec![1, 1, 0], vec![0, 1, 1]]);
        assert!(IncidenceMatrix::from_dense(&[vec![1, 2]]).is_err());
        assert!(IncidenceMatrix::from_dense(&[vec![1, 0], vec![1]]).is_err());
    }
}
