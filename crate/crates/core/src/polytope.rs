//! Exact models of the edge-split inequality systems attached to a
//! hypergraph, with vertex enumeration and integer feasibility.
//!
//! An edge split divides the edges into an upper group `U` and a lower
//! group `L`. For `t >= 1` the three systems on `x ∈ R^p, x >= 0` are
//!
//! * `Ω_t`: `Σ_{i∈E} x_i <= t - 1` for `E ∈ U`, `Σ_{i∈E} x_i >= t` for `E ∈ L`;
//! * `C_t`: the same with `< t` on the upper side;
//! * `C̄_t`: the closure, `<= t` on the upper side.

use std::collections::{BTreeSet, HashSet};
use std::fmt;

use num_rational::Ratio;
use num_traits::{One, Zero};
use serde::{Deserialize, Serialize};
use thiserror::Error;

use crate::hypergraph::{EdgeSet, Hypergraph};
use crate::vertex_set::VertexSet;

pub type Rational = Ratio<i128>;

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum PolytopeError {
    #[error("{what} = {value} exceeds cap {cap}")]
    CapExceeded {
        what: &'static str,
        value: usize,
        cap: usize,
    },
    #[error("edge index {index} outside 1..={m}")]
    EdgeIndexOutOfRange { index: usize, m: usize },
    #[error("t must be at least 1")]
    ZeroT,
    #[error("operation needs a {expected:?} system, got {actual:?}")]
    WrongMode {
        expected: ClosureMode,
        actual: ClosureMode,
    },
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, Serialize, Deserialize)]
#[serde(rename_all = "snake_case")]
pub enum ClosureMode {
    /// `Ω_t`: upper sums `<= t - 1`.
    Omega,
    /// `C_t`: upper sums `< t`.
    Strict,
    /// `C̄_t`: upper sums `<= t`.
    Closed,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize, Deserialize)]
pub struct PolytopeCaps {
    pub max_vertices: usize,
    pub max_t: u32,
}

impl Default for PolytopeCaps {
    fn default() -> Self {
        PolytopeCaps {
            max_vertices: 10,
            max_t: 64,
        }
    }
}

impl PolytopeCaps {
    fn check(&self, p: usize, t: u32) -> Result<(), PolytopeError> {
        if p > self.max_vertices {
            return Err(PolytopeError::CapExceeded {
                what: "vertex count",
                value: p,
                cap: self.max_vertices,
            });
        }
        if t > self.max_t {
            return Err(PolytopeError::CapExceeded {
                what: "t",
                value: t as usize,
                cap: self.max_t as usize,
            });
        }
        Ok(())
    }
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct EdgeSplitSystem {
    hypergraph: Hypergraph,
    upper: EdgeSet,
    t: u32,
    mode: ClosureMode,
}

impl EdgeSplitSystem {
    /// `upper` holds 1-based edge indices; every other edge is lower.
    pub fn new(
        hypergraph: Hypergraph,
        upper: EdgeSet,
        t: u32,
        mode: ClosureMode,
    ) -> Result<Self, PolytopeError> {
        if t == 0 {
            return Err(PolytopeError::ZeroT);
        }
        let m = hypergraph.num_edges();
        if !upper.is_subset(hypergraph.all_edges()) {
            return Err(PolytopeError::EdgeIndexOutOfRange {
                index: upper.max_vertex(),
                m,
            });
        }
        Ok(EdgeSplitSystem {
            hypergraph,
            upper,
            t,
            mode,
        })
    }

    pub fn hypergraph(&self) -> &Hypergraph {
        &self.hypergraph
    }

    pub fn upper(&self) -> EdgeSet {
        self.upper
    }

    pub fn lower(&self) -> EdgeSet {
        self.hypergraph.all_edges().difference(self.upper)
    }

    pub fn t(&self) -> u32 {
        self.t
    }

    pub fn mode(&self) -> ClosureMode {
        self.mode
    }

    pub fn with_t(&self, t: u32) -> Result<Self, PolytopeError> {
        Self::new(self.hypergraph.clone(), self.upper, t, self.mode)
    }

    pub fn with_mode(&self, mode: ClosureMode) -> Self {
        EdgeSplitSystem {
            mode,
            ..self.clone()
        }
    }

    fn edge_sum<T: Clone + Zero>(edge: VertexSet, x: &[T]) -> T {
        edge.iter().fold(T::zero(), |acc, i| acc + x[i - 1].clone())
    }

    /// Exact membership of a rational point.
    pub fn contains_point(&self, x: &RationalPoint) -> bool {
        let coords = &x.0;
        if coords.len() != self.hypergraph.n() || coords.iter().any(|c| *c < Rational::zero()) {
            return false;
        }
        let t = Rational::from_integer(i128::from(self.t));
        self.hypergraph.edges().iter().enumerate().all(|(k, &e)| {
            let s = Self::edge_sum(e, coords);
            if self.upper.contains(k + 1) {
                match self.mode {
                    ClosureMode::Omega => s <= t - Rational::one(),
                    ClosureMode::Strict => s < t,
                    ClosureMode::Closed => s <= t,
                }
            } else {
                s >= t
            }
        })
    }

    /// Membership of a lattice point.
    pub fn contains_lattice_point(&self, x: &[u32]) -> bool {
        let r = RationalPoint(
            x.iter()
                .map(|&c| Rational::from_integer(i128::from(c)))
                .collect(),
        );
        self.contains_point(&r)
    }
}

/// A point with exact rational coordinates, serialized as strings such as
/// `"1/2"`.
#[derive(Clone, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct RationalPoint(pub Vec<Rational>);

impl RationalPoint {
    pub fn from_integers(x: &[i128]) -> Self {
        RationalPoint(x.iter().map(|&c| Rational::from_integer(c)).collect())
    }

    pub fn coords(&self) -> &[Rational] {
        &self.0
    }

    pub fn is_binary(&self) -> bool {
        self.0.iter().all(|c| c.is_zero() || c.is_one())
    }

    pub fn is_integral(&self) -> bool {
        self.0.iter().all(Ratio::is_integer)
    }

    pub fn scale(&self, k: i128) -> Self {
        RationalPoint(self.0.iter().map(|c| c * k).collect())
    }
}

impl fmt::Display for RationalPoint {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str("(")?;
        for (k, c) in self.0.iter().enumerate() {
            if k > 0 {
                f.write_str(",")?;
            }
            write!(f, "{c}")?;
        }
        f.write_str(")")
    }
}

impl fmt::Debug for RationalPoint {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        fmt::Display::fmt(self, f)
    }
}

impl Serialize for RationalPoint {
    fn serialize<S: serde::Serializer>(&self, serializer: S) -> Result<S::Ok, S::Error> {
        serializer.collect_seq(self.0.iter().map(ToString::to_string))
    }
}

/// Unique solutions of every square system made of `n` tight constraints
/// (`Σ_{i∈E} x_i = t` for chosen edges, `x_i = 0` for chosen coordinates),
/// deduplicated and sorted. Feasibility is not checked here: every vertex
/// of every split of the closed system `C̄_t` is among these points, since
/// upper and lower constraints share the hyperplane `Σ = t`.
pub fn basic_solutions(h: &Hypergraph, t: u32) -> Vec<RationalPoint> {
    let p = h.n();
    let rhs = Rational::from_integer(i128::from(t));
    let mut out = BTreeSet::new();
    for free in VertexSet::full(p).subsets() {
        let k = free.len();
        // Rows restricted to the free columns; duplicates give nothing new.
        let mut rows: Vec<VertexSet> = h
            .edges()
            .iter()
            .map(|e| e.intersection(free))
            .filter(|r| !r.is_empty())
            .collect();
        rows.sort();
        rows.dedup();
        if rows.len() < k {
            continue;
        }
        let cols = free.to_vec();
        for chosen in VertexSet::full(rows.len())
            .subsets()
            .filter(|s| s.len() == k)
        {
            let system: Vec<VertexSet> = chosen.iter().map(|r| rows[r - 1]).collect();
            if let Some(sol) = solve_tight(&system, &cols, &rhs) {
                let mut x = vec![Rational::zero(); p];
                for (c, v) in cols.iter().zip(sol) {
                    x[c - 1] = v;
                }
                out.insert(RationalPoint(x));
            }
        }
    }
    out.into_iter().collect()
}

/// Solves `Σ_{i ∈ row ∩ cols} x_i = rhs` for each row; `None` when singular.
fn solve_tight(rows: &[VertexSet], cols: &[usize], rhs: &Rational) -> Option<Vec<Rational>> {
    let k = cols.len();
    let mut a: Vec<Vec<Rational>> = rows
        .iter()
        .map(|r| {
            let mut row: Vec<Rational> = cols
                .iter()
                .map(|&c| {
                    if r.contains(c) {
                        Rational::one()
                    } else {
                        Rational::zero()
                    }
                })
                .collect();
            row.push(*rhs);
            row
        })
        .collect();
    for col in 0..k {
        let pivot = (col..k).find(|&r| !a[r][col].is_zero())?;
        a.swap(col, pivot);
        let inv = a[col][col].recip();
        for v in a[col].iter_mut() {
            *v *= inv;
        }
        let prow = a[col].clone();
        for (r, row) in a.iter_mut().enumerate() {
            if r == col || row[col].is_zero() {
                continue;
            }
            let f = row[col];
            for (v, pv) in row.iter_mut().zip(&prow) {
                *v -= f * pv;
            }
        }
    }
    Some(a.into_iter().map(|row| row[k]).collect())
}

/// Vertices of a closed system `C̄_t`, by filtering the basic solutions.
pub fn vertices_closed(s: &EdgeSplitSystem) -> Result<Vec<RationalPoint>, PolytopeError> {
    vertices_closed_with(s, PolytopeCaps::default())
}

pub fn vertices_closed_with(
    s: &EdgeSplitSystem,
    caps: PolytopeCaps,
) -> Result<Vec<RationalPoint>, PolytopeError> {
    if s.mode != ClosureMode::Closed {
        return Err(PolytopeError::WrongMode {
            expected: ClosureMode::Closed,
            actual: s.mode,
        });
    }
    caps.check(s.hypergraph.n(), s.t)?;
    Ok(filter_vertices(s, &basic_solutions(&s.hypergraph, s.t)))
}

/// Keeps the candidates that satisfy the whole system of `s`.
pub fn filter_vertices(s: &EdgeSplitSystem, candidates: &[RationalPoint]) -> Vec<RationalPoint> {
    candidates
        .iter()
        .filter(|x| s.contains_point(x))
        .cloned()
        .collect()
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
#[serde(tag = "verdict", rename_all = "SCREAMING_SNAKE_CASE")]
pub enum Integrality {
    Integral,
    /// A vertex with a coordinate outside `{0, 1}`.
    Fractional {
        witness: RationalPoint,
    },
}

impl Integrality {
    pub fn is_integral(&self) -> bool {
        matches!(self, Integrality::Integral)
    }
}

/// Whether every vertex of `C̄_1` for the split of `s` is a 0/1 vector.
pub fn check_vertex_integrality(s: &EdgeSplitSystem) -> Result<Integrality, PolytopeError> {
    let closed = EdgeSplitSystem {
        t: 1,
        mode: ClosureMode::Closed,
        ..s.clone()
    };
    let vertices = vertices_closed(&closed)?;
    Ok(integrality_of(&vertices))
}

pub fn integrality_of(vertices: &[RationalPoint]) -> Integrality {
    match vertices.iter().find(|v| !v.is_binary()) {
        Some(w) => Integrality::Fractional { witness: w.clone() },
        None => Integrality::Integral,
    }
}

/// Some `α ∈ N^p` in `Ω_t` (or `C_t`, which has the same lattice points),
/// searching the box `{0..t}^p` in lexicographic order.
///
/// The box loses nothing: lowering a coordinate above `t` to `t` keeps every
/// lower edge through it at sum `>= t`, and an upper edge through it already
/// exceeded `t - 1`.
pub fn integer_point(s: &EdgeSplitSystem) -> Result<Option<Vec<u32>>, PolytopeError> {
    integer_point_with(s, PolytopeCaps::default())
}

pub fn integer_point_with(
    s: &EdgeSplitSystem,
    caps: PolytopeCaps,
) -> Result<Option<Vec<u32>>, PolytopeError> {
    if s.mode == ClosureMode::Closed {
        return Err(PolytopeError::WrongMode {
            expected: ClosureMode::Omega,
            actual: s.mode,
        });
    }
    caps.check(s.hypergraph.n(), s.t)?;
    let p = s.hypergraph.n();
    let mut x = vec![0u32; p];
    let edges = s.hypergraph.edges();
    let mut sums = vec![0u32; edges.len()];
    Ok(search_point(s, 1, &mut x, &mut sums).then_some(x))
}

fn search_point(s: &EdgeSplitSystem, v: usize, x: &mut [u32], sums: &mut [u32]) -> bool {
    let t = s.t;
    let edges = s.hypergraph.edges();
    if v > x.len() {
        return true;
    }
    let through: Vec<usize> = (0..edges.len()).filter(|&k| edges[k].contains(v)).collect();
    let max_value = if through.is_empty() { 0 } else { t };
    for a in 0..=max_value {
        let ok = through.iter().all(|&k| {
            let sum = sums[k] + a;
            if s.upper.contains(k + 1) {
                sum < t
            } else {
                // Later vertices of the edge could still reach t.
                let later = edges[k].iter().any(|u| u > v);
                sum >= t || later
            }
        });
        if !ok {
            continue;
        }
        for &k in &through {
            sums[k] += a;
        }
        x[v - 1] = a;
        if search_point(s, v + 1, x, sums) {
            return true;
        }
        for &k in &through {
            sums[k] -= a;
        }
    }
    x[v - 1] = 0;
    false
}

/// Every upper-edge set `U` for which `Ω_t` of the split `(U, rest)` has a
/// lattice point. Equivalently, the set of `{E : Σ_{i∈E} α_i <= t - 1}`
/// over `α ∈ {0..t}^p`.
///
/// Dynamic programming over vertices with edge sums capped at `t`; an edge
/// whose vertices are all assigned collapses to a single bit.
pub fn feasible_splits(h: &Hypergraph, t: u32) -> BTreeSet<EdgeSet> {
    assert!(t >= 1 && t < u32::from(u16::MAX), "t out of range");
    let cap = t as u16;
    let edges = h.edges();
    let m = edges.len();
    let order = elimination_order(h);
    let mut remaining: Vec<usize> = edges.iter().map(|e| e.len()).collect();
    let mut states: HashSet<Vec<u16>> = HashSet::new();
    states.insert(vec![0; m]);
    for v in order {
        let through: Vec<usize> = (0..m).filter(|&k| edges[k].contains(v)).collect();
        for &k in &through {
            remaining[k] -= 1;
        }
        let mut next = HashSet::with_capacity(states.len() * (t as usize + 1));
        for state in &states {
            for a in 0..=cap {
                let mut s = state.clone();
                for &k in &through {
                    let raised = (s[k] + a).min(cap);
                    s[k] = if remaining[k] == 0 {
                        // Finished edge: only "below t" matters.
                        if raised < cap {
                            0
                        } else {
                            cap
                        }
                    } else {
                        raised
                    };
                }
                next.insert(s);
            }
        }
        states = next;
    }
    states
        .into_iter()
        .map(|s| {
            s.iter()
                .enumerate()
                .filter(|(_, &x)| x < cap)
                .map(|(k, _)| k + 1)
                .collect()
        })
        .collect()
}

/// Vertices on at least one edge, ordered greedily so that few edges are
/// partially assigned at any time.
fn elimination_order(h: &Hypergraph) -> Vec<usize> {
    let edges = h.edges();
    let mut left: Vec<usize> = h
        .vertices()
        .iter()
        .filter(|&v| edges.iter().any(|e| e.contains(v)))
        .collect();
    let mut done = VertexSet::EMPTY;
    let mut order = Vec::with_capacity(left.len());
    while !left.is_empty() {
        let open_after = |v: usize| {
            let d = done.with(v);
            edges
                .iter()
                .filter(|e| e.intersects(d) && !e.is_subset(d))
                .count()
        };
        let (pos, _) = left
            .iter()
            .enumerate()
            .min_by_key(|&(_, &v)| open_after(v))
            .expect("nonempty");
        let v = left.remove(pos);
        done = done.with(v);
        order.push(v);
    }
    order
}

/// Vertex integrality of `C̄_1` at every split, sharing one basic-solution
/// enumeration. Results are in increasing bitmask order of `U`.
pub fn integrality_all_splits(
    h: &Hypergraph,
) -> Result<Vec<(EdgeSet, Integrality)>, PolytopeError> {
    PolytopeCaps::default().check(h.n(), 1)?;
    let candidates = basic_solutions(h, 1);
    h.all_edges()
        .subsets()
        .map(|upper| {
            let s = EdgeSplitSystem::new(h.clone(), upper, 1, ClosureMode::Closed)?;
            Ok((upper, integrality_of(&filter_vertices(&s, &candidates))))
        })
        .collect()
}

/// Lattice feasibility of `Ω_t` for `t = 1..=t_max` at one split.
#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct MonotoneReport {
    pub upper: EdgeSet,
    /// `feasible[t - 1]` for `t = 1..=t_max`.
    pub feasible: Vec<bool>,
    /// Each `t` with `Ω_t` feasible but `Ω_{t+1}` not.
    pub flips: Vec<u32>,
    /// `Ω_p` is feasible whenever some `Ω_s`, `s <= p`, is (vacuous when
    /// `p > t_max`).
    pub reaches_omega_p: bool,
}

impl MonotoneReport {
    pub fn is_monotone(&self) -> bool {
        self.flips.is_empty()
    }

    fn from_feasibility(upper: EdgeSet, p: usize, feasible: Vec<bool>) -> Self {
        let flips = feasible
            .windows(2)
            .enumerate()
            .filter(|(_, w)| w[0] && !w[1])
            .map(|(k, _)| k as u32 + 1)
            .collect();
        let reaches_omega_p = if p >= 1 && p <= feasible.len() {
            !feasible[..p].iter().any(|&f| f) || feasible[p - 1]
        } else {
            true
        };
        MonotoneReport {
            upper,
            feasible,
            flips,
            reaches_omega_p,
        }
    }
}

/// Sweeps `t = 1..=t_max` at the split of `s`, one lattice search per `t`.
pub fn verify_monotone_feasibility(
    s: &EdgeSplitSystem,
    t_max: u32,
) -> Result<MonotoneReport, PolytopeError> {
    let omega = s.with_mode(ClosureMode::Omega);
    let mut feasible = Vec::with_capacity(t_max as usize);
    for t in 1..=t_max {
        feasible.push(integer_point(&omega.with_t(t)?)?.is_some());
    }
    Ok(MonotoneReport::from_feasibility(
        s.upper,
        s.hypergraph.n(),
        feasible,
    ))
}

/// [`verify_monotone_feasibility`] for every split at once, built from
/// [`feasible_splits`]. Reports are in increasing bitmask order of `U`.
pub fn monotone_feasibility_all_splits(
    h: &Hypergraph,
    t_max: u32,
) -> Result<Vec<MonotoneReport>, PolytopeError> {
    PolytopeCaps::default().check(h.n(), t_max)?;
    let per_t: Vec<BTreeSet<EdgeSet>> = (1..=t_max).map(|t| feasible_splits(h, t)).collect();
    Ok(h.all_edges()
        .subsets()
        .map(|upper| {
            let feasible = per_t.iter().map(|f| f.contains(&upper)).collect();
            MonotoneReport::from_feasibility(upper, h.n(), feasible)
        })
        .collect())
}

/// `α + γ`, the step from `Ω_t` to `Ω_{t+1}` along a 0/1 vertex `γ` of `C̄_1`.
pub fn sum_construction(alpha: &[u32], gamma: &RationalPoint) -> Option<Vec<u32>> {
    alpha
        .iter()
        .zip(gamma.coords())
        .map(|(&a, g)| {
            if g.is_integer() && *g >= Rational::zero() {
                u32::try_from(g.to_integer()).ok().map(|g| a + g)
            } else {
                None
            }
        })
        .collect()
}

#[cfg(test)]
mod tests {
    use super::*;

    fn set(vs: &[usize]) -> VertexSet {
        vs.iter().copied().collect()
    }

    fn system(h: Hypergraph, upper: &[usize], t: u32, mode: ClosureMode) -> EdgeSplitSystem {
        EdgeSplitSystem::new(h, set(upper), t, mode).unwrap()
    }

    fn half() -> Rational {
        Rational::new(1, 2)
    }

    #[test]
    fn unit_triangle_vertices() {
        let s = system(Hypergraph::path(2), &[1], 1, ClosureMode::Closed);
        let v = vertices_closed(&s).unwrap();
        let expect: Vec<RationalPoint> = [[0, 0], [0, 1], [1, 0]]
            .iter()
            .map(|p| RationalPoint::from_integers(p))
            .collect();
        assert_eq!(v, expect);
    }

    #[test]
    fn triangle_all_upper_has_half_vertex() {
        let s = system(Hypergraph::cycle(3), &[1, 2, 3], 1, ClosureMode::Closed);
        let v = vertices_closed(&s).unwrap();
        let centre = RationalPoint(vec![half(); 3]);
        assert!(v.contains(&centre));
        assert_eq!(
            check_vertex_integrality(&s).unwrap(),
            Integrality::Fractional { witness: centre }
        );
    }

    #[test]
    fn no_edges_has_only_origin() {
        let h = Hypergraph::new(1, vec![]).unwrap();
        let s = system(h, &[], 1, ClosureMode::Closed);
        assert_eq!(
            vertices_closed(&s).unwrap(),
            vec![RationalPoint::from_integers(&[0])]
        );
        assert!(check_vertex_integrality(&s).unwrap().is_integral());
    }

    #[test]
    fn integer_point_examples() {
        let lower = system(Hypergraph::path(2), &[], 1, ClosureMode::Omega);
        let x = integer_point(&lower).unwrap().unwrap();
        assert!(lower.contains_lattice_point(&x));
        let upper = system(Hypergraph::path(2), &[1], 1, ClosureMode::Omega);
        assert_eq!(integer_point(&upper).unwrap(), Some(vec![0, 0]));
        let tri = system(Hypergraph::cycle(3), &[1], 1, ClosureMode::Omega);
        assert_eq!(integer_point(&tri).unwrap(), Some(vec![0, 0, 1]));
        let squeezed = system(Hypergraph::cycle(3), &[1, 2], 1, ClosureMode::Omega);
        assert_eq!(integer_point(&squeezed).unwrap(), None);
        let closed = system(Hypergraph::cycle(3), &[1, 2], 1, ClosureMode::Closed);
        assert!(matches!(
            integer_point(&closed),
            Err(PolytopeError::WrongMode { .. })
        ));
    }

    #[test]
    fn infeasible_split_has_no_point() {
        // x1 + x2 <= 0 and x1 + x2 >= 1 on the same pair via two edges.
        let h = Hypergraph::new(3, vec![vec![1, 2], vec![1, 2, 3], vec![3]]).unwrap();
        let s = system(h.clone(), &[1, 3], 1, ClosureMode::Omega);
        assert_eq!(integer_point(&s).unwrap(), None);
        assert!(!feasible_splits(&h, 1).contains(&set(&[1, 3])));
    }

    #[test]
    fn monotone_examples() {
        let p3 = Hypergraph::path(3);
        let s = system(p3, &[1, 2], 1, ClosureMode::Omega);
        let r = verify_monotone_feasibility(&s, 4).unwrap();
        assert_eq!(r.feasible, vec![true; 4]);
        assert!(r.is_monotone() && r.reaches_omega_p);

        let single = system(Hypergraph::path(2), &[], 1, ClosureMode::Omega);
        let r = verify_monotone_feasibility(&single, 4).unwrap();
        assert_eq!(r.feasible, vec![true; 4]);

        // Edges {1,2} (upper) and {1},{2} (lower): x1, x2 >= t but
        // x1 + x2 <= t - 1 is never feasible.
        let h = Hypergraph::new(2, vec![vec![1, 2], vec![1], vec![2]]).unwrap();
        let s = system(h, &[1], 1, ClosureMode::Omega);
        let r = verify_monotone_feasibility(&s, 3).unwrap();
        assert_eq!(r.feasible, vec![false; 3]);
    }

    #[test]
    fn contradictory_split_stays_infeasible() {
        // x1 + x3 >= t never fits under x1 + x2 + x3 <= t - 1.
        let h = Hypergraph::new(3, vec![vec![1, 2, 3], vec![1, 3]]).unwrap();
        let s = system(h, &[1], 1, ClosureMode::Omega);
        let r = verify_monotone_feasibility(&s, 4).unwrap();
        assert_eq!(r.feasible, vec![false; 4]);
        assert!(r.is_monotone());
    }

    #[test]
    fn dp_agrees_with_per_split_search() {
        for h in [
            Hypergraph::path(4),
            Hypergraph::cycle(4),
            Hypergraph::cycle(3),
            Hypergraph::complete_bipartite(2, 2),
            Hypergraph::new(4, vec![vec![1, 2, 3], vec![2, 3], vec![3, 4], vec![4]]).unwrap(),
        ] {
            for t in 1..=3 {
                let dp = feasible_splits(&h, t);
                for upper in h.all_edges().subsets() {
                    let s = EdgeSplitSystem::new(h.clone(), upper, t, ClosureMode::Omega).unwrap();
                    let found = integer_point(&s).unwrap();
                    assert_eq!(
                        dp.contains(&upper),
                        found.is_some(),
                        "{h:?} t={t} U={upper}"
                    );
                    if let Some(x) = found {
                        assert!(s.contains_lattice_point(&x));
                    }
                }
            }
        }
    }

    #[test]
    fn scaling_of_closed_vertices() {
        let h = Hypergraph::cycle(3);
        for upper in h.all_edges().subsets() {
            let one = system(h.clone(), &upper.to_vec(), 1, ClosureMode::Closed);
            let three = one.with_t(3).unwrap();
            let v1: BTreeSet<_> = vertices_closed(&one)
                .unwrap()
                .into_iter()
                .map(|v| v.scale(3))
                .collect();
            let v3: BTreeSet<_> = vertices_closed(&three).unwrap().into_iter().collect();
            assert_eq!(v1, v3);
        }
    }

    #[test]
    fn sum_construction_steps_up() {
        let h = Hypergraph::path(3);
        let omega = system(h.clone(), &[1], 2, ClosureMode::Omega);
        let alpha = integer_point(&omega).unwrap().unwrap();
        let closed = system(h, &[1], 1, ClosureMode::Closed);
        for gamma in vertices_closed(&closed).unwrap() {
            if !gamma.is_binary() {
                continue;
            }
            let theta = sum_construction(&alpha, &gamma).unwrap();
            assert!(omega.with_t(3).unwrap().contains_lattice_point(&theta));
        }
    }

    #[test]
    fn serializes_rationals_as_strings() {
        let p = RationalPoint(vec![half(), Rational::from_integer(1)]);
        assert_eq!(serde_json::to_string(&p).unwrap(), r#"["1/2","1"]"#);
    }
}
