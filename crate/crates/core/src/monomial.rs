//! Exact monomial-ideal arithmetic over `K[x_1, ..., x_n]`.
//!
//! Ideals are always stored by their minimal generators in graded order:
//! total degree ascending, ties broken by descending lexicographic order of
//! the exponent vectors (so `x1^2 < x1x2 < x2^2`).

use std::cmp::Ordering;
use std::fmt;

use serde::{Deserialize, Serialize};
use thiserror::Error;

use crate::hypergraph::Hypergraph;
use crate::vertex_set::VertexSet;

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum AlgebraError {
    #[error("ambient dimensions differ: {left} vs {right}")]
    MixedAmbient { left: usize, right: usize },
    #[error("exponent of x{index} is negative but x{index} is not inverted")]
    NegativeExponentOutsideF { index: usize },
    #[error("exponent overflow")]
    ExponentOverflow,
    #[error("{what} = {value} exceeds cap {cap}")]
    CapExceeded {
        what: &'static str,
        value: usize,
        cap: usize,
    },
    #[error("power exponent must be at least 1")]
    ZeroPower,
}

/// `x^a = x_1^{a_1} ... x_n^{a_n}`.
#[derive(Clone, PartialEq, Eq, Hash, Serialize, Deserialize)]
#[serde(transparent)]
pub struct Monomial(Vec<u32>);

impl Monomial {
    pub fn new(exponents: Vec<u32>) -> Self {
        Monomial(exponents)
    }

    pub fn one(n: usize) -> Self {
        Monomial(vec![0; n])
    }

    /// The variable `x_i` (1-based).
    pub fn var(i: usize, n: usize) -> Self {
        let mut e = vec![0; n];
        e[i - 1] = 1;
        Monomial(e)
    }

    /// The squarefree monomial `x_τ`.
    pub fn squarefree(tau: VertexSet, n: usize) -> Self {
        let mut e = vec![0; n];
        for v in tau.iter() {
            e[v - 1] = 1;
        }
        Monomial(e)
    }

    pub fn n(&self) -> usize {
        self.0.len()
    }

    pub fn exponents(&self) -> &[u32] {
        &self.0
    }

    /// Exponent of `x_i`, 1-based.
    pub fn exponent(&self, i: usize) -> u32 {
        self.0[i - 1]
    }

    pub fn degree(&self) -> u64 {
        self.0.iter().map(|&e| u64::from(e)).sum()
    }

    pub fn is_one(&self) -> bool {
        self.0.iter().all(|&e| e == 0)
    }

    pub fn divides(&self, other: &Monomial) -> bool {
        self.0.iter().zip(&other.0).all(|(a, b)| a <= b)
    }

    pub fn checked_mul(&self, other: &Monomial) -> Option<Monomial> {
        self.0
            .iter()
            .zip(&other.0)
            .map(|(a, b)| a.checked_add(*b))
            .collect::<Option<Vec<_>>>()
            .map(Monomial)
    }

    pub fn lcm(&self, other: &Monomial) -> Monomial {
        Monomial(
            self.0
                .iter()
                .zip(&other.0)
                .map(|(a, b)| *a.max(b))
                .collect(),
        )
    }

    pub fn support(&self) -> VertexSet {
        self.0
            .iter()
            .enumerate()
            .filter(|(_, &e)| e > 0)
            .map(|(i, _)| i + 1)
            .collect()
    }

    pub fn is_squarefree(&self) -> bool {
        self.0.iter().all(|&e| e <= 1)
    }
}

impl Ord for Monomial {
    fn cmp(&self, other: &Self) -> Ordering {
        self.degree()
            .cmp(&other.degree())
            .then_with(|| other.0.cmp(&self.0))
    }
}

impl PartialOrd for Monomial {
    fn partial_cmp(&self, other: &Self) -> Option<Ordering> {
        Some(self.cmp(other))
    }
}

impl fmt::Display for Monomial {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.is_one() {
            return f.write_str("1");
        }
        for (i, &e) in self.0.iter().enumerate() {
            match e {
                0 => {}
                1 => write!(f, "x{}", i + 1)?,
                _ => write!(f, "x{}^{}", i + 1, e)?,
            }
        }
        Ok(())
    }
}

impl fmt::Debug for Monomial {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        fmt::Display::fmt(self, f)
    }
}

/// Monomial ideal given by its minimal generators. The zero ideal has no
/// generators; the unit ideal is generated by `1`.
#[derive(Clone, PartialEq, Eq, Hash)]
pub struct MonomialIdeal {
    n: usize,
    gens: Vec<Monomial>,
}

impl MonomialIdeal {
    pub fn zero(n: usize) -> Self {
        MonomialIdeal {
            n,
            gens: Vec::new(),
        }
    }

    pub fn unit(n: usize) -> Self {
        MonomialIdeal {
            n,
            gens: vec![Monomial::one(n)],
        }
    }

    /// The prime `P = (x_i | i ∈ set)`.
    pub fn prime(set: VertexSet, n: usize) -> Self {
        MonomialIdeal {
            n,
            gens: set.iter().rev().map(|i| Monomial::var(i, n)).collect(),
        }
        .sorted()
    }

    /// Divisibility-minimal subset of `gens`, in canonical order.
    pub fn minimalize(n: usize, gens: Vec<Monomial>) -> Result<Self, AlgebraError> {
        if let Some(g) = gens.iter().find(|g| g.n() != n) {
            return Err(AlgebraError::MixedAmbient {
                left: n,
                right: g.n(),
            });
        }
        Ok(Self::minimalize_unchecked(n, gens))
    }

    fn minimalize_unchecked(n: usize, mut gens: Vec<Monomial>) -> Self {
        gens.sort_unstable();
        gens.dedup();
        // A divisor has degree <= its multiple, so scanning in degree order
        // only needs to look back at already kept generators.
        let mut kept: Vec<Monomial> = Vec::with_capacity(gens.len());
        for g in gens {
            if !kept.iter().any(|k| k.divides(&g)) {
                kept.push(g);
            }
        }
        MonomialIdeal { n, gens: kept }
    }

    /// Parses the list-of-exponent-vectors text form. `n` is required only
    /// to give the zero ideal an ambient ring.
    pub fn from_exponent_lists(
        n: Option<usize>,
        lists: Vec<Vec<u32>>,
    ) -> Result<Self, AlgebraError> {
        let n = n.or_else(|| lists.first().map(Vec::len)).unwrap_or(0);
        Self::minimalize(n, lists.into_iter().map(Monomial).collect())
    }

    pub fn to_exponent_lists(&self) -> Vec<Vec<u32>> {
        self.gens.iter().map(|g| g.0.clone()).collect()
    }

    fn sorted(mut self) -> Self {
        self.gens.sort_unstable();
        self
    }

    pub fn n(&self) -> usize {
        self.n
    }

    pub fn generators(&self) -> &[Monomial] {
        &self.gens
    }

    pub fn is_zero(&self) -> bool {
        self.gens.is_empty()
    }

    pub fn is_unit(&self) -> bool {
        self.gens.len() == 1 && self.gens[0].is_one()
    }

    pub fn is_squarefree(&self) -> bool {
        self.gens.iter().all(Monomial::is_squarefree)
    }

    fn same_ambient(&self, other: &MonomialIdeal) -> Result<(), AlgebraError> {
        if self.n == other.n {
            Ok(())
        } else {
            Err(AlgebraError::MixedAmbient {
                left: self.n,
                right: other.n,
            })
        }
    }

    pub fn product(&self, other: &MonomialIdeal) -> Result<MonomialIdeal, AlgebraError> {
        self.same_ambient(other)?;
        let mut gens = Vec::with_capacity(self.gens.len() * other.gens.len());
        for a in &self.gens {
            for b in &other.gens {
                gens.push(a.checked_mul(b).ok_or(AlgebraError::ExponentOverflow)?);
            }
        }
        Ok(Self::minimalize_unchecked(self.n, gens))
    }

    /// `I^t` for `t >= 1`.
    pub fn power(&self, t: u32) -> Result<MonomialIdeal, AlgebraError> {
        if t == 0 {
            return Err(AlgebraError::ZeroPower);
        }
        let mut acc = self.clone();
        for _ in 1..t {
            acc = acc.product(self)?;
        }
        Ok(acc)
    }

    /// `a ∩ b`, generated by the pairwise least common multiples.
    pub fn intersect(&self, other: &MonomialIdeal) -> Result<MonomialIdeal, AlgebraError> {
        self.same_ambient(other)?;
        let mut gens = Vec::with_capacity(self.gens.len() * other.gens.len());
        for a in &self.gens {
            for b in &other.gens {
                gens.push(a.lcm(b));
            }
        }
        Ok(Self::minimalize_unchecked(self.n, gens))
    }

    pub fn contains_monomial(&self, m: &Monomial) -> bool {
        self.gens.iter().any(|g| g.divides(m))
    }

    /// Localized membership `x^α ∈ I R_F` where `R_F` inverts the variables
    /// in `f`: some generator divides `x^α` once the coordinates in `f` are
    /// ignored. Coordinates outside `f` must be non-negative.
    pub fn contains(&self, alpha: &[i64], f: VertexSet) -> Result<bool, AlgebraError> {
        debug_assert_eq!(alpha.len(), self.n);
        for (k, &a) in alpha.iter().enumerate() {
            if a < 0 && !f.contains(k + 1) {
                return Err(AlgebraError::NegativeExponentOutsideF { index: k + 1 });
            }
        }
        Ok(self.contains_localized(alpha, f))
    }

    /// [`MonomialIdeal::contains`] without the sign check.
    pub(crate) fn contains_localized(&self, alpha: &[i64], f: VertexSet) -> bool {
        self.gens.iter().any(|g| {
            g.0.iter()
                .zip(alpha)
                .enumerate()
                .all(|(k, (&e, &a))| f.contains(k + 1) || i64::from(e) <= a)
        })
    }

    pub fn equals(&self, other: &MonomialIdeal) -> Result<bool, AlgebraError> {
        self.same_ambient(other)?;
        Ok(self.gens == other.gens)
    }

    /// A minimal generator of one ideal that the other does not contain,
    /// searching `other` first. `None` iff the ideals are equal.
    pub fn difference_witness(
        &self,
        other: &MonomialIdeal,
    ) -> Result<Option<Monomial>, AlgebraError> {
        self.same_ambient(other)?;
        let missing = |from: &MonomialIdeal, inside: &MonomialIdeal| {
            from.gens
                .iter()
                .find(|g| !inside.contains_monomial(g))
                .cloned()
        };
        Ok(missing(other, self).or_else(|| missing(self, other)))
    }

    /// `a ⊆ b`.
    pub fn is_subset_of(&self, other: &MonomialIdeal) -> Result<bool, AlgebraError> {
        self.same_ambient(other)?;
        Ok(self.gens.iter().all(|g| other.contains_monomial(g)))
    }

    pub fn radical(&self) -> MonomialIdeal {
        let gens = self
            .gens
            .iter()
            .map(|g| Monomial::squarefree(g.support(), self.n))
            .collect();
        Self::minimalize_unchecked(self.n, gens)
    }

    /// Componentwise maximum of the generator exponents.
    pub fn lcm_exponents(&self) -> Vec<u32> {
        let mut out = vec![0; self.n];
        for g in &self.gens {
            for (o, &e) in out.iter_mut().zip(&g.0) {
                *o = (*o).max(e);
            }
        }
        out
    }

    /// Cover ideal `J(H)`, generated by `x_τ` over the minimal vertex covers.
    pub fn cover_ideal(h: &Hypergraph) -> MonomialIdeal {
        let gens = h
            .minimal_vertex_covers()
            .into_iter()
            .map(|tau| Monomial::squarefree(tau, h.n()))
            .collect();
        Self::minimalize_unchecked(h.n(), gens)
    }

    /// `J(H)` as the intersection of the edge primes `(x_i | i ∈ E)`.
    pub fn cover_ideal_by_intersection(h: &Hypergraph) -> MonomialIdeal {
        h.edges()
            .iter()
            .fold(MonomialIdeal::unit(h.n()), |acc, &e| {
                acc.intersect(&MonomialIdeal::prime(e, h.n()))
                    .expect("same ambient")
            })
    }

    /// `J(H)^(s) = ∩_E (x_i | i ∈ E)^s`, subject to [`SymbolicCaps::default`].
    pub fn symbolic_power(h: &Hypergraph, s: u32) -> Result<MonomialIdeal, AlgebraError> {
        Self::symbolic_power_capped(h, s, SymbolicCaps::default())
    }

    pub fn symbolic_power_capped(
        h: &Hypergraph,
        s: u32,
        caps: SymbolicCaps,
    ) -> Result<MonomialIdeal, AlgebraError> {
        if s == 0 {
            return Err(AlgebraError::ZeroPower);
        }
        caps.check(h.n(), s)?;
        let mut acc = MonomialIdeal::unit(h.n());
        for &e in h.edges() {
            let p = MonomialIdeal::prime(e, h.n()).power(s)?;
            acc = acc.intersect(&p)?;
        }
        Ok(acc)
    }
}

/// Limits on materializing symbolic powers.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize, Deserialize)]
pub struct SymbolicCaps {
    pub max_power: u32,
    pub max_vertices: usize,
}

impl Default for SymbolicCaps {
    fn default() -> Self {
        SymbolicCaps {
            max_power: 6,
            max_vertices: 10,
        }
    }
}

impl SymbolicCaps {
    fn check(&self, n: usize, s: u32) -> Result<(), AlgebraError> {
        if s > self.max_power {
            return Err(AlgebraError::CapExceeded {
                what: "symbolic power",
                value: s as usize,
                cap: self.max_power as usize,
            });
        }
        if n > self.max_vertices {
            return Err(AlgebraError::CapExceeded {
                what: "vertex count",
                value: n,
                cap: self.max_vertices,
            });
        }
        Ok(())
    }
}

impl fmt::Display for MonomialIdeal {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str("(")?;
        for (k, g) in self.gens.iter().enumerate() {
            if k > 0 {
                f.write_str(", ")?;
            }
            write!(f, "{g}")?;
        }
        f.write_str(")")
    }
}

impl fmt::Debug for MonomialIdeal {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{self} in {} variables", self.n)
    }
}

impl Serialize for MonomialIdeal {
    fn serialize<S: serde::Serializer>(&self, serializer: S) -> Result<S::Ok, S::Error> {
        serializer.collect_seq(self.gens.iter())
    }
}
