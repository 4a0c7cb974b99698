//! Simplicial complexes given by facets, the Stanley–Reisner dictionary and
//! reduced homology over a field.
//!
//! Two degenerate complexes are kept apart: the void complex (no faces at
//! all, acyclic) and the empty complex `{∅}` whose only face is the empty
//! set (`H̃_{-1} = K`).

use std::collections::HashMap;

use serde::{Deserialize, Serialize};
use thiserror::Error;

use crate::linalg::{self, FieldSpec};
use crate::monomial::{Monomial, MonomialIdeal};
use crate::vertex_set::{maximal_sets, minimal_transversals, VertexSet, MAX_VERTICES};

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum SimplicialError {
    #[error("vertex {vertex} outside 1..={n}")]
    VertexOutOfRange { vertex: usize, n: usize },
    #[error("facets flagged void")]
    VoidWithFacets,
}

#[derive(Clone, PartialEq, Eq, Hash, Debug, Serialize, Deserialize)]
#[serde(try_from = "RawComplex", into = "RawComplex")]
pub struct SimplicialComplex {
    n: usize,
    /// Antichain in canonical order; empty iff the complex is void.
    facets: Vec<VertexSet>,
}

#[derive(Serialize, Deserialize)]
struct RawComplex {
    n: usize,
    facets: Vec<VertexSet>,
    #[serde(rename = "void", default)]
    is_void: bool,
}

impl TryFrom<RawComplex> for SimplicialComplex {
    type Error = SimplicialError;

    fn try_from(raw: RawComplex) -> Result<Self, Self::Error> {
        if raw.is_void && !raw.facets.is_empty() {
            return Err(SimplicialError::VoidWithFacets);
        }
        SimplicialComplex::from_facets(raw.n, raw.facets)
    }
}

impl From<SimplicialComplex> for RawComplex {
    fn from(d: SimplicialComplex) -> Self {
        RawComplex {
            n: d.n,
            is_void: d.is_void(),
            facets: d.facets,
        }
    }
}

impl SimplicialComplex {
    /// `⟨F_1, ..., F_m⟩`: the complex generated by `sets`, dominated sets
    /// absorbed. `[]` gives the void complex, `[∅]` the empty one.
    pub fn from_facets(n: usize, sets: Vec<VertexSet>) -> Result<Self, SimplicialError> {
        let universe = VertexSet::full(n.min(MAX_VERTICES));
        if let Some(bad) = sets.iter().find(|s| !s.is_subset(universe)) {
            return Err(SimplicialError::VertexOutOfRange {
                vertex: bad.difference(universe).max_vertex(),
                n,
            });
        }
        Ok(Self::from_facets_unchecked(n, sets))
    }

    pub(crate) fn from_facets_unchecked(n: usize, sets: Vec<VertexSet>) -> Self {
        SimplicialComplex {
            n,
            facets: maximal_sets(sets),
        }
    }

    pub fn void(n: usize) -> Self {
        SimplicialComplex {
            n,
            facets: Vec::new(),
        }
    }

    pub fn empty(n: usize) -> Self {
        SimplicialComplex {
            n,
            facets: vec![VertexSet::EMPTY],
        }
    }

    pub fn simplex(n: usize) -> Self {
        SimplicialComplex {
            n,
            facets: vec![VertexSet::full(n)],
        }
    }

    pub fn n(&self) -> usize {
        self.n
    }

    pub fn facets(&self) -> &[VertexSet] {
        &self.facets
    }

    pub fn is_void(&self) -> bool {
        self.facets.is_empty()
    }

    pub fn is_empty_complex(&self) -> bool {
        self.facets == [VertexSet::EMPTY]
    }

    /// Dimension, `-1` for `{∅}` and `None` for the void complex.
    pub fn dimension(&self) -> Option<isize> {
        self.facets.iter().map(|f| f.len() as isize - 1).max()
    }

    pub fn contains_face(&self, tau: VertexSet) -> bool {
        self.facets.iter().any(|f| tau.is_subset(*f))
    }

    /// Faces grouped by size: `faces()[k]` holds the `(k-1)`-dimensional
    /// faces in canonical order.
    pub fn faces(&self) -> Vec<Vec<VertexSet>> {
        let Some(dim) = self.dimension() else {
            return Vec::new();
        };
        let mut seen = std::collections::HashSet::new();
        let mut by_size = vec![Vec::new(); (dim + 2) as usize];
        for f in &self.facets {
            for s in f.subsets() {
                if seen.insert(s) {
                    by_size[s.len()].push(s);
                }
            }
        }
        for layer in &mut by_size {
            layer.sort();
        }
        by_size
    }

    /// `f_{-1}, f_0, ..., f_dim`.
    pub fn f_vector(&self) -> Vec<usize> {
        self.faces().iter().map(Vec::len).collect()
    }

    /// `Σ_j (-1)^j f_j` over `j >= -1`.
    pub fn reduced_euler_characteristic(&self) -> i64 {
        self.f_vector()
            .iter()
            .enumerate()
            .map(|(k, &f)| if k % 2 == 1 { f as i64 } else { -(f as i64) })
            .sum()
    }

    /// Cone with apex `n + 1`.
    pub fn cone(&self) -> Self {
        let apex = self.n + 1;
        SimplicialComplex {
            n: apex,
            facets: self.facets.iter().map(|f| f.with(apex)).collect(),
        }
    }

    /// Boundary map `∂_j : C_j → C_{j-1}` as a dense matrix with one row per
    /// `(j-1)`-face, using `faces` from [`SimplicialComplex::faces`].
    pub fn boundary_matrix(faces: &[Vec<VertexSet>], j: usize) -> Vec<Vec<i64>> {
        // faces[j + 1] are the j-faces, faces[j] the (j-1)-faces.
        let (Some(lower), Some(upper)) = (faces.get(j), faces.get(j + 1)) else {
            return Vec::new();
        };
        let index: HashMap<VertexSet, usize> =
            lower.iter().enumerate().map(|(k, &s)| (s, k)).collect();
        let mut m = vec![vec![0i64; upper.len()]; lower.len()];
        for (col, sigma) in upper.iter().enumerate() {
            for (pos, v) in sigma.iter().enumerate() {
                let row = index[&sigma.without(v)];
                m[row][col] = if pos % 2 == 0 { 1 } else { -1 };
            }
        }
        m
    }

    /// `dim_K H̃_j` for `j = -1..=dim`; all zero for the void complex.
    pub fn reduced_betti(&self, field: FieldSpec) -> ReducedBetti {
        let faces = self.faces();
        if faces.is_empty() {
            return ReducedBetti::default();
        }
        let top = faces.len() - 1;
        // ranks[j] = rank ∂_j for j = 0..=top-1 (the map out of j-faces);
        // ∂ out of the (-1)-face is zero.
        let ranks: Vec<usize> = (0..top)
            .map(|j| linalg::rank(&Self::boundary_matrix(&faces, j), field))
            .collect();
        let dims = (0..faces.len())
            .map(|k| {
                let out = if k == 0 { 0 } else { ranks[k - 1] };
                let into = ranks.get(k).copied().unwrap_or(0);
                faces[k].len() - out - into
            })
            .collect();
        ReducedBetti { dims }
    }

    pub fn is_acyclic(&self, field: FieldSpec) -> bool {
        self.reduced_betti(field).is_zero()
    }

    /// `Δ(I) = {τ : x_τ ∉ √I}`. Its facets are the complements of the
    /// minimal transversals of the generator supports.
    pub fn stanley_reisner_complex(i: &MonomialIdeal) -> Self {
        let supports: Vec<VertexSet> = i.generators().iter().map(Monomial::support).collect();
        let universe = VertexSet::full(i.n());
        let facets = minimal_transversals(&supports)
            .into_iter()
            .map(|t| universe.difference(t))
            .collect();
        Self::from_facets_unchecked(i.n(), facets)
    }

    /// `I_Δ = (x_τ : τ ∉ Δ)`, generated by the minimal non-faces, which are
    /// the minimal transversals of the facet complements.
    pub fn stanley_reisner_ideal(&self) -> MonomialIdeal {
        let universe = VertexSet::full(self.n);
        let complements: Vec<VertexSet> = self
            .facets
            .iter()
            .map(|f| universe.difference(*f))
            .collect();
        let gens = minimal_transversals(&complements)
            .into_iter()
            .map(|tau| Monomial::squarefree(tau, self.n))
            .collect();
        MonomialIdeal::minimalize(self.n, gens).expect("same ambient")
    }
}

/// Reduced Betti numbers `dim H̃_j` for `j >= -1`.
#[derive(Debug, Clone, Default, PartialEq, Eq, Hash, Serialize, Deserialize)]
#[serde(transparent)]
pub struct ReducedBetti {
    /// `dims[j + 1] = dim H̃_j`.
    dims: Vec<usize>,
}

impl ReducedBetti {
    pub fn from_dims(dims: Vec<usize>) -> Self {
        ReducedBetti { dims }
    }

    pub fn get(&self, j: isize) -> usize {
        if j < -1 {
            return 0;
        }
        self.dims.get((j + 1) as usize).copied().unwrap_or(0)
    }

    pub fn dims(&self) -> &[usize] {
        &self.dims
    }

    pub fn is_zero(&self) -> bool {
        self.dims.iter().all(|&d| d == 0)
    }

    /// Smallest `j` with `H̃_j ≠ 0`.
    pub fn first_nonzero(&self) -> Option<isize> {
        self.dims
            .iter()
            .position(|&d| d != 0)
            .map(|k| k as isize - 1)
    }

    /// `Σ_j (-1)^j dim H̃_j`.
    pub fn euler_characteristic(&self) -> i64 {
        self.dims
            .iter()
            .enumerate()
            .map(|(k, &d)| if k % 2 == 1 { d as i64 } else { -(d as i64) })
            .sum()
    }
}
