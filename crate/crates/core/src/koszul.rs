//! Independent depth oracle: multigraded Betti numbers from upper Koszul
//! simplicial complexes, then Auslander–Buchsbaum.
//!
//! `β_{j,α}(I) = dim_K H̃_{j-1}(K^α(I); K)` with
//! `K^α(I) = { τ ⊆ supp(α) squarefree : x^{α - τ} ∈ I }`, and
//! `depth R/I = n - pd(R/I) = n - 1 - max{ j : β_j(I) ≠ 0 }`.
//!
//! Nothing here goes through degree complexes or local cohomology.

use std::collections::BTreeMap;

use serde::Serialize;
use thiserror::Error;

use crate::linalg::FieldSpec;
use crate::monomial::{Monomial, MonomialIdeal};
use crate::simplicial::SimplicialComplex;
use crate::vertex_set::VertexSet;

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum KoszulError {
    #[error("Betti numbers need a nonzero proper ideal")]
    ZeroOrUnitIdeal,
}

/// `K^α(I)`; void when `x^α ∉ I`.
pub fn upper_koszul_complex(i: &MonomialIdeal, alpha: &[u32]) -> SimplicialComplex {
    let m = Monomial::new(alpha.to_vec());
    let support = m.support();
    let faces: Vec<VertexSet> = support
        .subsets()
        .filter(|tau| {
            let mut e = alpha.to_vec();
            for v in tau.iter() {
                e[v - 1] -= 1;
            }
            i.contains_monomial(&Monomial::new(e))
        })
        .collect();
    SimplicialComplex::from_facets_unchecked(i.n(), faces)
}

/// Nonzero `β_{j,α}(I)`, keyed by `(j, α)`.
#[derive(Debug, Clone, Default, PartialEq, Eq, Serialize)]
pub struct BettiTable {
    entries: BTreeMap<(usize, Vec<u32>), usize>,
}

impl BettiTable {
    pub fn get(&self, j: usize, alpha: &[u32]) -> usize {
        self.entries.get(&(j, alpha.to_vec())).copied().unwrap_or(0)
    }

    pub fn entries(&self) -> impl Iterator<Item = (usize, &[u32], usize)> {
        self.entries
            .iter()
            .map(|((j, a), &b)| (*j, a.as_slice(), b))
    }

    /// Total `β_j = Σ_α β_{j,α}`.
    pub fn total(&self, j: usize) -> usize {
        self.entries
            .iter()
            .filter(|((k, _), _)| *k == j)
            .map(|(_, &b)| b)
            .sum()
    }

    pub fn max_homological_index(&self) -> Option<usize> {
        self.entries.keys().map(|(j, _)| *j).max()
    }
}

/// All `β_{j,α}(I)` over the divisors `α` of the lcm of the generators.
/// Along each axis only the exponent values that occur in some generator
/// (and 0) are visited, since only lcms of generators can carry syzygies.
pub fn betti_table(i: &MonomialIdeal, field: FieldSpec) -> Result<BettiTable, KoszulError> {
    if i.is_zero() || i.is_unit() {
        return Err(KoszulError::ZeroOrUnitIdeal);
    }
    let axes: Vec<Vec<u32>> = (0..i.n())
        .map(|k| {
            let mut vals: Vec<u32> = std::iter::once(0)
                .chain(i.generators().iter().map(|g| g.exponents()[k]))
                .collect();
            vals.sort_unstable();
            vals.dedup();
            vals
        })
        .collect();
    let mut table = BettiTable::default();
    let mut alpha = vec![0u32; i.n()];
    walk(i, field, &axes, 0, &mut alpha, &mut table);
    Ok(table)
}

fn walk(
    i: &MonomialIdeal,
    field: FieldSpec,
    axes: &[Vec<u32>],
    k: usize,
    alpha: &mut Vec<u32>,
    table: &mut BettiTable,
) {
    if k == axes.len() {
        if !i.contains_monomial(&Monomial::new(alpha.clone())) {
            return;
        }
        let betti = upper_koszul_complex(i, alpha).reduced_betti(field);
        for (idx, &b) in betti.dims().iter().enumerate() {
            // dims[idx] = H̃_{idx-1} = β_{idx, α}.
            if b > 0 {
                table.entries.insert((idx, alpha.clone()), b);
            }
        }
        return;
    }
    for &v in &axes[k] {
        alpha[k] = v;
        walk(i, field, axes, k + 1, alpha, table);
    }
}

/// `pd(R/I) = 1 + max{ j : β_j(I) ≠ 0 }`.
pub fn projective_dimension(i: &MonomialIdeal, field: FieldSpec) -> Result<usize, KoszulError> {
    let table = betti_table(i, field)?;
    Ok(1 + table.max_homological_index().unwrap_or(0))
}

pub fn depth_via_koszul(i: &MonomialIdeal, field: FieldSpec) -> Result<usize, KoszulError> {
    Ok(i.n() - projective_dimension(i, field)?)
}
