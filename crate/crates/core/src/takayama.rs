//! Degree complexes and depth via Takayama's formula
//!
//! ```text
//! dim_K H^i_m(R/I)_α = dim_K H̃_{i - |G_α| - 1}(Δ_α(I); K),
//! Δ_α(I) = { F ∖ G_α : G_α ⊆ F, x^α ∉ I R_F },   G_α = { i : α_i < 0 }.
//! ```
//!
//! For cover ideals of balanced hypergraphs `J(H)^s = J(H)^(s)`, and for
//! `α ∈ N^n` the degree complex of `J(H)^s` is generated by the complements
//! `V ∖ E` of the edges with `Σ_{i∈E} α_i <= s - 1`. A negative support `F`
//! reduces to the same statement for the restriction of `H` to the edges
//! avoiding `F`, so the depth of `R/J(H)^t` can be found without ever
//! materializing `J(H)^t`.

use std::collections::HashMap;
use std::sync::Arc;

use parking_lot::RwLock;
use rayon::prelude::*;
use serde::{Deserialize, Serialize};
use thiserror::Error;

use crate::hypergraph::{EdgeSet, Hypergraph, HypergraphError};
use crate::linalg::FieldSpec;
use crate::monomial::MonomialIdeal;
use crate::polytope::feasible_splits;
use crate::simplicial::{ReducedBetti, SimplicialComplex};
use crate::vertex_set::VertexSet;

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum TakayamaError {
    #[error("hypergraph is not balanced")]
    NotBalanced,
    #[error("hypergraph has no edges")]
    NoEdges,
    #[error("depth is undefined for the zero and unit ideals")]
    ZeroOrUnitIdeal,
    #[error("degree has negative entry at x{index}; the balanced formula needs α ∈ N^n")]
    NegativeDegree { index: usize },
    #[error("degree has length {got}, ambient ring has {expected} variables")]
    LengthMismatch { expected: usize, got: usize },
    #[error("power must be at least 1")]
    ZeroPower,
    #[error(transparent)]
    Hypergraph(#[from] HypergraphError),
}

/// A degree `α ∈ Z^n`.
#[derive(Debug, Clone, PartialEq, Eq, Hash, Serialize, Deserialize)]
#[serde(transparent)]
pub struct DegreeVector(Vec<i64>);

impl DegreeVector {
    pub fn new(entries: Vec<i64>) -> Self {
        DegreeVector(entries)
    }

    pub fn entries(&self) -> &[i64] {
        &self.0
    }

    pub fn len(&self) -> usize {
        self.0.len()
    }

    pub fn is_empty(&self) -> bool {
        self.0.is_empty()
    }

    /// `G_α = { i : α_i < 0 }`.
    pub fn negative_support(&self) -> VertexSet {
        self.0
            .iter()
            .enumerate()
            .filter(|(_, &a)| a < 0)
            .map(|(i, _)| i + 1)
            .collect()
    }
}

/// Signature determining `Δ_α(J(H)^s)` for a fixed hypergraph: the negative
/// support and the (original) indices of the edges that avoid it and have
/// `Σ_{i∈E} α_i <= s - 1`.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize, Deserialize)]
pub struct DegreeComplexKey {
    pub negative_support: VertexSet,
    pub qualifying_edges: EdgeSet,
}

impl DegreeComplexKey {
    /// `⟨V ∖ (F ∪ E) : E qualifying⟩` on the original vertex labels.
    pub fn complex(&self, h: &Hypergraph) -> SimplicialComplex {
        let rest = h.vertices().difference(self.negative_support);
        let facets = self
            .qualifying_edges
            .iter()
            .map(|j| rest.difference(h.edge(j)))
            .collect();
        SimplicialComplex::from_facets_unchecked(h.n(), facets)
    }
}

/// Storage for reduced Betti numbers of complexes, shared across threads.
pub trait HomologyCache: Send + Sync {
    fn get(&self, complex: &SimplicialComplex, field: FieldSpec) -> Option<ReducedBetti>;
    fn put(&self, complex: &SimplicialComplex, field: FieldSpec, betti: &ReducedBetti);
}

#[derive(Default)]
pub struct MemoryCache {
    map: RwLock<HashMap<(SimplicialComplex, FieldSpec), ReducedBetti>>,
}

impl MemoryCache {
    pub fn new() -> Self {
        Self::default()
    }

    pub fn len(&self) -> usize {
        self.map.read().len()
    }

    pub fn is_empty(&self) -> bool {
        self.map.read().is_empty()
    }
}

impl HomologyCache for MemoryCache {
    fn get(&self, complex: &SimplicialComplex, field: FieldSpec) -> Option<ReducedBetti> {
        self.map.read().get(&(complex.clone(), field)).cloned()
    }

    fn put(&self, complex: &SimplicialComplex, field: FieldSpec, betti: &ReducedBetti) {
        self.map
            .write()
            .insert((complex.clone(), field), betti.clone());
    }
}

/// `Δ_α(I)` straight from the definition: every `F ⊇ G_α` is tested for
/// `x^α ∈ I R_F`.
pub fn degree_complex_generic(
    i: &MonomialIdeal,
    alpha: &DegreeVector,
) -> Result<SimplicialComplex, TakayamaError> {
    if alpha.len() != i.n() {
        return Err(TakayamaError::LengthMismatch {
            expected: i.n(),
            got: alpha.len(),
        });
    }
    let g = alpha.negative_support();
    let rest = VertexSet::full(i.n()).difference(g);
    let faces: Vec<VertexSet> = rest
        .subsets()
        .filter(|&face| !i.contains_localized(alpha.entries(), face.union(g)))
        .collect();
    let complex = SimplicialComplex::from_facets_unchecked(i.n(), faces.clone());
    debug_assert!(
        faces
            .iter()
            .all(|&f| f.subsets().all(|s| faces.contains(&s))),
        "degree complex is not closed under subsets"
    );
    Ok(complex)
}

/// `Δ_α(J(H)^s)` for balanced `H` and `α ∈ N^n`: generated by `V ∖ E` over
/// the edges with `Σ_{i∈E} α_i <= s - 1`.
pub fn degree_complex_balanced(
    h: &Hypergraph,
    alpha: &DegreeVector,
    s: u32,
) -> Result<SimplicialComplex, TakayamaError> {
    if s == 0 {
        return Err(TakayamaError::ZeroPower);
    }
    if alpha.len() != h.n() {
        return Err(TakayamaError::LengthMismatch {
            expected: h.n(),
            got: alpha.len(),
        });
    }
    if let Some(k) = alpha.entries().iter().position(|&a| a < 0) {
        return Err(TakayamaError::NegativeDegree { index: k + 1 });
    }
    if !h.is_balanced()?.is_balanced() {
        return Err(TakayamaError::NotBalanced);
    }
    let qualifying = qualifying_edges(h, alpha.entries(), s);
    Ok(DegreeComplexKey {
        negative_support: VertexSet::EMPTY,
        qualifying_edges: qualifying,
    }
    .complex(h))
}

fn qualifying_edges(h: &Hypergraph, alpha: &[i64], s: u32) -> EdgeSet {
    h.edges()
        .iter()
        .enumerate()
        .filter(|(_, e)| e.iter().map(|i| alpha[i - 1]).sum::<i64>() < i64::from(s))
        .map(|(k, _)| k + 1)
        .collect()
}

/// Smallest cohomological index `d` with `H^d_m(R/I)_α ≠ 0` coming from a
/// degree complex with the given Betti numbers and negative support size.
fn first_index(betti: &ReducedBetti, negative: usize) -> Option<usize> {
    betti
        .first_nonzero()
        .map(|j| (j + negative as isize + 1) as usize)
}

/// Depth computations sharing one homology cache.
#[derive(Clone)]
pub struct TakayamaEngine {
    field: FieldSpec,
    cache: Arc<dyn HomologyCache>,
}

impl TakayamaEngine {
    pub fn new(field: FieldSpec) -> Self {
        Self::with_cache(field, Arc::new(MemoryCache::new()))
    }

    pub fn with_cache(field: FieldSpec, cache: Arc<dyn HomologyCache>) -> Self {
        TakayamaEngine { field, cache }
    }

    pub fn field(&self) -> FieldSpec {
        self.field
    }

    /// Same cache, different coefficient field.
    pub fn with_field(&self, field: FieldSpec) -> Self {
        TakayamaEngine {
            field,
            cache: Arc::clone(&self.cache),
        }
    }

    pub fn reduced_betti(&self, complex: &SimplicialComplex) -> ReducedBetti {
        if complex.is_void() {
            return ReducedBetti::default();
        }
        if let Some(b) = self.cache.get(complex, self.field) {
            return b;
        }
        let b = complex.reduced_betti(self.field);
        self.cache.put(complex, self.field, &b);
        b
    }

    /// `dim_K H^{degree_index}_m(R/I)_α`.
    pub fn local_cohomology_dim(
        &self,
        i: &MonomialIdeal,
        degree_index: usize,
        alpha: &DegreeVector,
    ) -> Result<usize, TakayamaError> {
        let complex = degree_complex_generic(i, alpha)?;
        let g = alpha.negative_support().len() as isize;
        Ok(self
            .reduced_betti(&complex)
            .get(degree_index as isize - g - 1))
    }

    /// `depth R/I` as the least `d` with `H^d_m(R/I)_α ≠ 0` for some `α` in
    /// the box where negative entries are `-1` (only the sign matters) and
    /// `0 <= α_i < ρ_i`, `ρ_i` the largest exponent of `x_i` among the
    /// generators. At `α_i >= ρ_i` the degree complex is a cone over `i`.
    pub fn depth_via_takayama(&self, i: &MonomialIdeal) -> Result<usize, TakayamaError> {
        if i.is_zero() || i.is_unit() {
            return Err(TakayamaError::ZeroOrUnitIdeal);
        }
        let rho = i.lcm_exponents();
        let choices: Vec<Vec<i64>> = rho
            .iter()
            .map(|&r| std::iter::once(-1).chain(0..i64::from(r)).collect())
            .collect();
        let mut best = usize::MAX;
        let mut alpha = vec![0i64; i.n()];
        self.box_search(i, &choices, 0, &mut alpha, &mut best);
        Ok(best)
    }

    fn box_search(
        &self,
        i: &MonomialIdeal,
        choices: &[Vec<i64>],
        k: usize,
        alpha: &mut Vec<i64>,
        best: &mut usize,
    ) {
        if k == choices.len() {
            let a = DegreeVector(alpha.clone());
            let g = a.negative_support().len();
            if g >= *best {
                return;
            }
            let complex = degree_complex_generic(i, &a).expect("length checked");
            if let Some(d) = first_index(&self.reduced_betti(&complex), g) {
                *best = (*best).min(d);
            }
            return;
        }
        for &c in &choices[k] {
            alpha[k] = c;
            self.box_search(i, choices, k + 1, alpha, best);
        }
    }

    /// `depth R/J(H)^t` for balanced `H` without materializing the power.
    ///
    /// For each negative support `F ⊊ V` (in order of size, stopping once
    /// `|F|` cannot beat the best value), the attainable qualifying edge sets
    /// of the restriction to edges avoiding `F` come from
    /// [`feasible_splits`] over `{0..t}^p`; each distinct degree complex is
    /// evaluated once through the cache.
    pub fn depth_power_balanced(&self, h: &Hypergraph, t: u32) -> Result<usize, TakayamaError> {
        if t == 0 {
            return Err(TakayamaError::ZeroPower);
        }
        if h.num_edges() == 0 {
            return Err(TakayamaError::NoEdges);
        }
        if !h.is_balanced()?.is_balanced() {
            return Err(TakayamaError::NotBalanced);
        }
        Ok(self.depth_power_unchecked(h, t))
    }

    /// [`TakayamaEngine::depth_power_balanced`] without the balancedness
    /// check. Computes the depth of `R/J(H)^(t)`, which equals `R/J(H)^t`
    /// exactly when the two powers agree.
    pub fn depth_power_unchecked(&self, h: &Hypergraph, t: u32) -> usize {
        let n = h.n();
        let mut by_size: Vec<Vec<VertexSet>> = vec![Vec::new(); n];
        for f in h.vertices().subsets() {
            if f.len() < n {
                by_size[f.len()].push(f);
            }
        }
        let mut best = usize::MAX;
        for (size, layer) in by_size.iter().enumerate() {
            if size >= best {
                break;
            }
            let layer_best = layer
                .par_iter()
                .filter_map(|&f| self.best_for_negative_support(h, f, t))
                .min();
            if let Some(d) = layer_best {
                best = best.min(d);
            }
        }
        best
    }

    /// Degree-complex keys reachable with negative support `f` at power `t`.
    pub fn keys_for_negative_support(
        &self,
        h: &Hypergraph,
        f: VertexSet,
        t: u32,
    ) -> Vec<DegreeComplexKey> {
        let restriction = h.restrict(f);
        feasible_splits(&restriction.hypergraph, t)
            .into_iter()
            .filter(|q| !q.is_empty())
            .map(|q| DegreeComplexKey {
                negative_support: f,
                qualifying_edges: q.iter().map(|j| restriction.edge_map[j - 1]).collect(),
            })
            .collect()
    }

    fn best_for_negative_support(&self, h: &Hypergraph, f: VertexSet, t: u32) -> Option<usize> {
        self.keys_for_negative_support(h, f, t)
            .into_iter()
            .filter_map(|key| {
                let complex = canonical_complex(h, &key);
                first_index(&self.reduced_betti(&complex), f.len())
            })
            .min()
    }
}

/// The degree complex of `key` relabeled onto `{1..p}`, so that isomorphic
/// situations across negative supports share cache entries.
fn canonical_complex(h: &Hypergraph, key: &DegreeComplexKey) -> SimplicialComplex {
    let rest = h.vertices().difference(key.negative_support);
    let labels: Vec<usize> = rest.to_vec();
    let relabel = |s: VertexSet| -> VertexSet {
        labels
            .iter()
            .enumerate()
            .filter(|(_, &v)| s.contains(v))
            .map(|(k, _)| k + 1)
            .collect()
    };
    let facets = key
        .qualifying_edges
        .iter()
        .map(|j| relabel(rest.difference(h.edge(j))))
        .collect();
    SimplicialComplex::from_facets_unchecked(labels.len(), facets)
}

/// One-shot form of [`TakayamaEngine::local_cohomology_dim`].
pub fn local_cohomology_dim(
    i: &MonomialIdeal,
    degree_index: usize,
    alpha: &DegreeVector,
    field: FieldSpec,
) -> Result<usize, TakayamaError> {
    TakayamaEngine::new(field).local_cohomology_dim(i, degree_index, alpha)
}

/// One-shot form of [`TakayamaEngine::depth_via_takayama`].
pub fn depth_via_takayama(i: &MonomialIdeal, field: FieldSpec) -> Result<usize, TakayamaError> {
    TakayamaEngine::new(field).depth_via_takayama(i)
}

/// One-shot form of [`TakayamaEngine::depth_power_balanced`].
pub fn depth_power_balanced(
    h: &Hypergraph,
    t: u32,
    field: FieldSpec,
) -> Result<usize, TakayamaError> {
    TakayamaEngine::new(field).depth_power_balanced(h, t)
}
