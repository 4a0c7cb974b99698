//! Small vertex subsets stored as bitmasks.
//!
//! Vertices are 1-based everywhere in the public API; vertex `v` occupies
//! bit `v - 1`. Ordering of `VertexSet` values is by cardinality first and
//! then lexicographic on the sorted element lists, which is the canonical
//! order used for covers, facets and witnesses.

use std::cmp::Ordering;
use std::fmt;

use serde::{Deserialize, Deserializer, Serialize, Serializer};

/// Largest vertex index representable in a [`VertexSet`].
pub const MAX_VERTICES: usize = 64;

#[derive(Clone, Copy, PartialEq, Eq, Hash, Default)]
pub struct VertexSet(u64);

impl VertexSet {
    pub const EMPTY: VertexSet = VertexSet(0);

    pub fn from_bits(bits: u64) -> Self {
        VertexSet(bits)
    }

    pub fn bits(self) -> u64 {
        self.0
    }

    /// `{1, ..., n}`.
    pub fn full(n: usize) -> Self {
        assert!(n <= MAX_VERTICES, "vertex count {n} exceeds {MAX_VERTICES}");
        if n == MAX_VERTICES {
            VertexSet(u64::MAX)
        } else {
            VertexSet((1u64 << n) - 1)
        }
    }

    pub fn singleton(v: usize) -> Self {
        assert!((1..=MAX_VERTICES).contains(&v), "vertex {v} out of range");
        VertexSet(1u64 << (v - 1))
    }

    pub fn contains(self, v: usize) -> bool {
        (1..=MAX_VERTICES).contains(&v) && self.0 & (1u64 << (v - 1)) != 0
    }

    pub fn insert(&mut self, v: usize) {
        *self = self.with(v);
    }

    pub fn with(self, v: usize) -> Self {
        VertexSet(self.0 | Self::singleton(v).0)
    }

    pub fn without(self, v: usize) -> Self {
        VertexSet(self.0 & !Self::singleton(v).0)
    }

    pub fn len(self) -> usize {
        self.0.count_ones() as usize
    }

    pub fn is_empty(self) -> bool {
        self.0 == 0
    }

    pub fn is_subset(self, other: VertexSet) -> bool {
        self.0 & !other.0 == 0
    }

    pub fn intersects(self, other: VertexSet) -> bool {
        self.0 & other.0 != 0
    }

    pub fn union(self, other: VertexSet) -> Self {
        VertexSet(self.0 | other.0)
    }

    pub fn intersection(self, other: VertexSet) -> Self {
        VertexSet(self.0 & other.0)
    }

    pub fn difference(self, other: VertexSet) -> Self {
        VertexSet(self.0 & !other.0)
    }

    /// Largest element, or 0 for the empty set.
    pub fn max_vertex(self) -> usize {
        64 - self.0.leading_zeros() as usize
    }

    pub fn iter(self) -> Iter {
        Iter(self.0)
    }

    pub fn to_vec(self) -> Vec<usize> {
        self.iter().collect()
    }

    /// All subsets of `self`, in increasing bitmask order.
    pub fn subsets(self) -> Subsets {
        Subsets {
            mask: self.0,
            next: Some(0),
        }
    }
}

impl FromIterator<usize> for VertexSet {
    fn from_iter<I: IntoIterator<Item = usize>>(iter: I) -> Self {
        let mut set = VertexSet::EMPTY;
        for v in iter {
            set.insert(v);
        }
        set
    }
}

impl Ord for VertexSet {
    fn cmp(&self, other: &Self) -> Ordering {
        self.len()
            .cmp(&other.len())
            .then_with(|| self.iter().cmp(other.iter()))
    }
}

impl PartialOrd for VertexSet {
    fn partial_cmp(&self, other: &Self) -> Option<Ordering> {
        Some(self.cmp(other))
    }
}

impl fmt::Debug for VertexSet {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        fmt::Display::fmt(self, f)
    }
}

impl fmt::Display for VertexSet {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str("{")?;
        for (k, v) in self.iter().enumerate() {
            if k > 0 {
                f.write_str(",")?;
            }
            write!(f, "{v}")?;
        }
        f.write_str("}")
    }
}

impl Serialize for VertexSet {
    fn serialize<S: Serializer>(&self, serializer: S) -> Result<S::Ok, S::Error> {
        serializer.collect_seq(self.iter())
    }
}

impl<'de> Deserialize<'de> for VertexSet {
    fn deserialize<D: Deserializer<'de>>(deserializer: D) -> Result<Self, D::Error> {
        let raw = Vec::<usize>::deserialize(deserializer)?;
        if let Some(&v) = raw.iter().find(|&&v| v == 0 || v > MAX_VERTICES) {
            return Err(serde::de::Error::custom(format!(
                "vertex {v} outside 1..={MAX_VERTICES}"
            )));
        }
        Ok(raw.into_iter().collect())
    }
}

pub struct Iter(u64);

impl Iterator for Iter {
    type Item = usize;

    fn next(&mut self) -> Option<usize> {
        if self.0 == 0 {
            return None;
        }
        let low = self.0.trailing_zeros() as usize;
        self.0 &= self.0 - 1;
        Some(low + 1)
    }

    fn size_hint(&self) -> (usize, Option<usize>) {
        let n = self.0.count_ones() as usize;
        (n, Some(n))
    }
}

impl DoubleEndedIterator for Iter {
    fn next_back(&mut self) -> Option<usize> {
        if self.0 == 0 {
            return None;
        }
        let high = 63 - self.0.leading_zeros() as usize;
        self.0 &= !(1u64 << high);
        Some(high + 1)
    }
}

impl ExactSizeIterator for Iter {}

pub struct Subsets {
    mask: u64,
    next: Option<u64>,
}

impl Iterator for Subsets {
    type Item = VertexSet;

    fn next(&mut self) -> Option<VertexSet> {
        let cur = self.next?;
        // Standard submask walk: (cur - mask) & mask enumerates upward.
        let succ = cur.wrapping_sub(self.mask) & self.mask;
        self.next = if succ == 0 { None } else { Some(succ) };
        Some(VertexSet(cur))
    }
}

/// Inclusion-minimal transversals of a family of sets, in canonical order.
///
/// Berge's incremental algorithm: the transversals of `E_1..E_k` are the
/// minimal elements of `{T ∪ {v} : v ∈ E_k}` over transversals `T` of the
/// first `k - 1` sets (sets already met by `T` keep `T` as is). An empty
/// member of the family admits no transversal, so the result is empty; an
/// empty family has the single transversal `∅`.
pub fn minimal_transversals(family: &[VertexSet]) -> Vec<VertexSet> {
    let mut current = vec![VertexSet::EMPTY];
    for &edge in family {
        if edge.is_empty() {
            return Vec::new();
        }
        let mut next: Vec<VertexSet> = Vec::with_capacity(current.len());
        for &t in &current {
            if t.intersects(edge) {
                next.push(t);
            } else {
                next.extend(edge.iter().map(|v| t.with(v)));
            }
        }
        current = minimal_sets(next);
    }
    current.sort();
    current
}

/// Removes duplicates and every set that strictly contains another one.
pub fn minimal_sets(mut sets: Vec<VertexSet>) -> Vec<VertexSet> {
    sets.sort();
    sets.dedup();
    let mut kept: Vec<VertexSet> = Vec::with_capacity(sets.len());
    for s in sets {
        if !kept.iter().any(|k| k.is_subset(s)) {
            kept.push(s);
        }
    }
    kept
}

/// Removes duplicates and every set strictly contained in another one.
pub fn maximal_sets(mut sets: Vec<VertexSet>) -> Vec<VertexSet> {
    sets.sort_by(|a, b| b.cmp(a));
    sets.dedup();
    let mut kept: Vec<VertexSet> = Vec::with_capacity(sets.len());
    for s in sets {
        if !kept.iter().any(|k| s.is_subset(*k)) {
            kept.push(s);
        }
    }
    kept.sort();
    kept
}
