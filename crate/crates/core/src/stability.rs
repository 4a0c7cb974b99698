//! Depth functions `t ↦ depth R/J(H)^t`, the index of depth stability, the
//! analytic spread, and the verdicts checked for each instance.

use std::collections::BTreeMap;
use std::time::Instant;

use serde::{Deserialize, Serialize};
use thiserror::Error;

use crate::hypergraph::{Hypergraph, HypergraphError};
use crate::linalg::{self, FieldSpec};
use crate::lp;
use crate::monomial::{AlgebraError, Monomial, MonomialIdeal, SymbolicCaps};
use crate::takayama::{TakayamaEngine, TakayamaError};

#[derive(Debug, Clone, PartialEq, Error)]
pub enum StabilityError {
    #[error("analytic spread of the zero ideal is undefined")]
    ZeroIdeal,
    #[error("{what} = {value} exceeds cap {cap}")]
    CapExceeded {
        what: &'static str,
        value: usize,
        cap: usize,
    },
    #[error("theorem violation on instance `{}`: {}", .0.instance, .0.violations().join(", "))]
    TheoremViolation(Box<DepthReport>),
    #[error(transparent)]
    Takayama(#[from] TakayamaError),
    #[error(transparent)]
    Algebra(#[from] AlgebraError),
    #[error(transparent)]
    Hypergraph(#[from] HypergraphError),
}

/// `ℓ(I)`: one more than the largest dimension of a compact face of the
/// Newton polyhedron `conv(exponents) + R^n_{>=0}`.
///
/// A set of generators spans a compact face exactly when some strictly
/// positive weight is minimized on all of them at once, which is an exact
/// LP feasibility question. The search runs over affinely independent sets
/// in index order. For ideals generated in one degree the answer is the
/// rank of the exponent vectors each extended by a trailing 1, which also
/// bounds `ℓ` from above in general.
pub fn analytic_spread(i: &MonomialIdeal) -> Result<usize, StabilityError> {
    if i.is_zero() {
        return Err(StabilityError::ZeroIdeal);
    }
    let gens: Vec<Vec<i64>> = i
        .generators()
        .iter()
        .map(|g| g.exponents().iter().map(|&e| i64::from(e)).collect())
        .collect();
    let cap = augmented_exponent_rank(i)?.min(i.n().max(1));
    let min_degree = i
        .generators()
        .iter()
        .map(Monomial::degree)
        .min()
        .unwrap_or(0);
    let lowest: Vec<Vec<i64>> = i
        .generators()
        .iter()
        .zip(&gens)
        .filter(|(g, _)| g.degree() == min_degree)
        .map(|(_, e)| e.clone())
        .collect();
    let mut best = affine_rank(&lowest);
    if best >= cap {
        return Ok(best);
    }
    let mut chosen = Vec::new();
    grow_face(&gens, &mut chosen, 0, 0, cap, &mut best);
    Ok(best)
}

/// Rank over `Q` of the generator exponent vectors, each extended by a
/// trailing 1.
pub fn augmented_exponent_rank(i: &MonomialIdeal) -> Result<usize, StabilityError> {
    if i.is_zero() {
        return Err(StabilityError::ZeroIdeal);
    }
    let rows: Vec<Vec<i64>> = i
        .generators()
        .iter()
        .map(|g| g.exponents().iter().map(|&e| i64::from(e)).collect())
        .collect();
    Ok(affine_rank(&rows))
}

fn affine_rank(points: &[Vec<i64>]) -> usize {
    let rows: Vec<Vec<i64>> = points
        .iter()
        .map(|p| p.iter().copied().chain(std::iter::once(1)).collect())
        .collect();
    linalg::rank_rational(&rows)
}

fn grow_face(
    gens: &[Vec<i64>],
    chosen: &mut Vec<usize>,
    next: usize,
    rank: usize,
    cap: usize,
    best: &mut usize,
) {
    for b in next..gens.len() {
        if *best >= cap || rank + (gens.len() - b) <= *best {
            return;
        }
        chosen.push(b);
        let points: Vec<Vec<i64>> = chosen.iter().map(|&k| gens[k].clone()).collect();
        let r = affine_rank(&points);
        if r > rank && on_compact_face(gens, chosen) {
            *best = (*best).max(r);
            grow_face(gens, chosen, b + 1, r, cap, best);
        }
        chosen.pop();
    }
}

/// Whether some weight `w >= 1` takes its minimum over `gens` on every
/// member of `chosen`. Written in `w' = w - 1 >= 0`.
fn on_compact_face(gens: &[Vec<i64>], chosen: &[usize]) -> bool {
    let a0 = &gens[chosen[0]];
    let n = a0.len();
    let row = |k: usize| -> (Vec<i64>, i64) {
        let d: Vec<i64> = (0..n).map(|j| gens[k][j] - a0[j]).collect();
        let rhs = -d.iter().sum::<i64>();
        (d, rhs)
    };
    let eqs: Vec<_> = chosen[1..].iter().map(|&k| row(k)).collect();
    let ges: Vec<_> = (0..gens.len())
        .filter(|k| !chosen.contains(k))
        .map(row)
        .collect();
    lp::feasible(n, &eqs, &ges)
}

/// Limits for the generic engine on unbalanced inputs, where powers must be
/// materialized.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize, Deserialize)]
pub struct GenericCaps {
    /// Cap on the number of degrees in the Takayama search box.
    pub max_box: usize,
    pub max_vertices: usize,
}

impl Default for GenericCaps {
    fn default() -> Self {
        GenericCaps {
            max_box: 1 << 16,
            max_vertices: 8,
        }
    }
}

/// Depth of `R/J(H)^t` for `t = 1..=t_max`. Balanced inputs use the
/// fast path; others materialize `J(H)^t` and run the generic engine.
pub fn depth_function(
    engine: &TakayamaEngine,
    h: &Hypergraph,
    t_max: u32,
    caps: GenericCaps,
) -> Result<BTreeMap<u32, usize>, StabilityError> {
    if h.num_edges() == 0 {
        return Err(TakayamaError::NoEdges.into());
    }
    if h.is_balanced()?.is_balanced() {
        return Ok((1..=t_max)
            .map(|t| (t, engine.depth_power_unchecked(h, t)))
            .collect());
    }
    check_generic_vertices(h, caps)?;
    let j = MonomialIdeal::cover_ideal(h);
    let mut out = BTreeMap::new();
    let mut power = j.clone();
    for t in 1..=t_max {
        if t > 1 {
            power = power.product(&j)?;
        }
        check_box(&power, caps)?;
        out.insert(t, engine.depth_via_takayama(&power)?);
    }
    Ok(out)
}

/// Depth of `R/J(H)^t` for a single `t`, by the same routes as
/// [`depth_function`].
pub fn depth_power(
    engine: &TakayamaEngine,
    h: &Hypergraph,
    t: u32,
    caps: GenericCaps,
) -> Result<usize, StabilityError> {
    if h.num_edges() == 0 {
        return Err(TakayamaError::NoEdges.into());
    }
    if t == 0 {
        return Err(TakayamaError::ZeroPower.into());
    }
    if h.is_balanced()?.is_balanced() {
        return Ok(engine.depth_power_unchecked(h, t));
    }
    check_generic_vertices(h, caps)?;
    let power = MonomialIdeal::cover_ideal(h).power(t)?;
    check_box(&power, caps)?;
    Ok(engine.depth_via_takayama(&power)?)
}

fn check_generic_vertices(h: &Hypergraph, caps: GenericCaps) -> Result<(), StabilityError> {
    if h.n() > caps.max_vertices {
        return Err(StabilityError::CapExceeded {
            what: "vertex count (generic engine)",
            value: h.n(),
            cap: caps.max_vertices,
        });
    }
    Ok(())
}

fn check_box(power: &MonomialIdeal, caps: GenericCaps) -> Result<(), StabilityError> {
    let size: usize = power
        .lcm_exponents()
        .iter()
        .map(|&r| r as usize + 1)
        .product();
    if size > caps.max_box {
        return Err(StabilityError::CapExceeded {
            what: "Takayama search box",
            value: size,
            cap: caps.max_box,
        });
    }
    Ok(())
}

/// Least `t` with `depth R/J(H)^t = n - ℓ(J(H))` for balanced `H`, searched
/// up to `t = n`. Failing to find one contradicts the stability bound and is
/// reported with the full table.
pub fn dstab(engine: &TakayamaEngine, h: &Hypergraph) -> Result<u32, StabilityError> {
    if h.num_edges() == 0 {
        return Err(TakayamaError::NoEdges.into());
    }
    if !h.is_balanced()?.is_balanced() {
        return Err(TakayamaError::NotBalanced.into());
    }
    let limit = h.n() as i64 - analytic_spread(&MonomialIdeal::cover_ideal(h))? as i64;
    let n = h.n() as u32;
    for t in 1..=n {
        if engine.depth_power_unchecked(h, t) as i64 == limit {
            return Ok(t);
        }
    }
    let report = verify(
        "dstab",
        h,
        &VerifyConfig {
            field: engine.field(),
            t_max: Some(n),
            compare_field: None,
            ..VerifyConfig::default()
        },
        engine,
    )?;
    Err(StabilityError::TheoremViolation(Box::new(report)))
}

/// Index of depth stability read off a finite table.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize, Deserialize)]
#[serde(rename_all = "snake_case")]
pub enum Dstab {
    Resolved(u32),
    /// The last two recorded values still differ.
    Unresolved,
}

impl Dstab {
    pub fn value(self) -> Option<u32> {
        match self {
            Dstab::Resolved(s) => Some(s),
            Dstab::Unresolved => None,
        }
    }

    /// Smallest `s` with `depth(t) = depth(s)` for all recorded `t >= s`.
    pub fn from_table(depths: &BTreeMap<u32, usize>) -> Dstab {
        let Some((&last_t, &last)) = depths.iter().next_back() else {
            return Dstab::Unresolved;
        };
        let s = depths
            .iter()
            .rev()
            .take_while(|(_, &d)| d == last)
            .map(|(&t, _)| t)
            .last()
            .unwrap_or(last_t);
        if s == last_t && last_t > 1 {
            Dstab::Unresolved
        } else {
            Dstab::Resolved(s)
        }
    }
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct Verdicts {
    /// `depth(t) >= depth(t + 1)` across the table.
    pub t1_nonincreasing: bool,
    /// The table reaches `n - ℓ` by `t = n` and stays there.
    pub t2_dstab_le_n: bool,
    /// `depth(t) = n - ℓ` for every recorded `t >= n`.
    pub limit_matches: bool,
    /// `J^s = J^(s)` for `s <= s_ntf_max`.
    pub ntf_holds: bool,
    /// The last recorded depth is at most `n - ℓ`.
    pub brodmann_bound: bool,
}

/// First `s` at which `J^s ≠ J^(s)`, with a generator of `J^(s)` missing
/// from `J^s`.
#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct NtfWitness {
    pub s: u32,
    pub monomial: Vec<u32>,
}

/// Depth table recomputed over a second field. Recorded, never asserted.
#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct FieldComparison {
    pub characteristic: u64,
    pub agrees: bool,
    /// Values where the two tables differ, as `t -> depth`.
    pub differing: BTreeMap<u32, usize>,
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct Timings {
    pub depth_ms: u128,
    pub ntf_ms: u128,
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct DepthReport {
    pub instance: String,
    pub hypergraph: Hypergraph,
    pub n: usize,
    pub m: usize,
    pub balanced: bool,
    pub characteristic: u64,
    pub depth_values: BTreeMap<u32, usize>,
    pub dstab: Dstab,
    pub analytic_spread: usize,
    pub limit_depth: i64,
    pub s_ntf_max: u32,
    pub verdicts: Verdicts,
    pub ntf_witness: Option<NtfWitness>,
    pub field_comparison: Option<FieldComparison>,
    /// Only balanced instances carry theorem expectations.
    pub asserted: bool,
    #[serde(skip_serializing_if = "Option::is_none", default)]
    pub timings: Option<Timings>,
}

impl DepthReport {
    /// Names of asserted verdicts that failed. The Brodmann bound is
    /// asserted for every instance whose table has settled; the rest only
    /// for balanced ones.
    pub fn violations(&self) -> Vec<&'static str> {
        let v = &self.verdicts;
        let mut out = Vec::new();
        if self.asserted {
            for (name, ok) in [
                ("t1_nonincreasing", v.t1_nonincreasing),
                ("t2_dstab_le_n", v.t2_dstab_le_n),
                ("limit_matches", v.limit_matches),
                ("ntf_holds", v.ntf_holds),
            ] {
                if !ok {
                    out.push(name);
                }
            }
        }
        let settled = self.asserted || self.dstab != Dstab::Unresolved;
        if settled && !v.brodmann_bound {
            out.push("brodmann_bound");
        }
        out
    }

    pub fn csv_rows(&self) -> Vec<CsvRow> {
        self.depth_values
            .iter()
            .map(|(&t, &depth)| CsvRow {
                instance: self.instance.clone(),
                n: self.n,
                m: self.m,
                balanced: self.balanced,
                characteristic: self.characteristic,
                t,
                depth,
                dstab: self
                    .dstab
                    .value()
                    .map_or_else(|| "UNRESOLVED".to_string(), |s| s.to_string()),
                analytic_spread: self.analytic_spread,
                limit_depth: self.limit_depth,
                t1_nonincreasing: self.verdicts.t1_nonincreasing,
                t2_dstab_le_n: self.verdicts.t2_dstab_le_n,
                limit_matches: self.verdicts.limit_matches,
                ntf_holds: self.verdicts.ntf_holds,
                brodmann_bound: self.verdicts.brodmann_bound,
            })
            .collect()
    }
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct CsvRow {
    pub instance: String,
    pub n: usize,
    pub m: usize,
    pub balanced: bool,
    pub characteristic: u64,
    pub t: u32,
    pub depth: usize,
    pub dstab: String,
    pub analytic_spread: usize,
    pub limit_depth: i64,
    pub t1_nonincreasing: bool,
    pub t2_dstab_le_n: bool,
    pub limit_matches: bool,
    pub ntf_holds: bool,
    pub brodmann_bound: bool,
}

/// Writes the rows of every report, with a header, in the given order.
pub fn write_csv<W: std::io::Write>(reports: &[DepthReport], out: W) -> csv::Result<()> {
    let mut w = csv::Writer::from_writer(out);
    for r in reports {
        for row in r.csv_rows() {
            w.serialize(row)?;
        }
    }
    w.flush()?;
    Ok(())
}

#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
pub struct VerifyConfig {
    pub field: FieldSpec,
    /// Defaults to `n + 2`.
    pub t_max: Option<u32>,
    /// Defaults to `min(4, n)`.
    pub s_ntf_max: Option<u32>,
    pub symbolic_caps: SymbolicCaps,
    pub generic_caps: GenericCaps,
    /// Second field whose depth table is recorded next to the main one.
    pub compare_field: Option<FieldSpec>,
    pub timings: bool,
}

impl Default for VerifyConfig {
    fn default() -> Self {
        VerifyConfig {
            field: FieldSpec::Rational,
            t_max: None,
            s_ntf_max: None,
            symbolic_caps: SymbolicCaps::default(),
            generic_caps: GenericCaps::default(),
            compare_field: Some(FieldSpec::Prime(2)),
            timings: false,
        }
    }
}

/// Computes the depth table and every verdict for one instance.
pub fn verify(
    instance: &str,
    h: &Hypergraph,
    config: &VerifyConfig,
    engine: &TakayamaEngine,
) -> Result<DepthReport, StabilityError> {
    h.validate()?;
    let n = h.n();
    let balanced = h.is_balanced()?.is_balanced();
    let t_max = config.t_max.unwrap_or(n as u32 + 2).max(1);
    let s_ntf_max = config.s_ntf_max.unwrap_or((n as u32).min(4)).max(1);

    let started = Instant::now();
    let depths = depth_function(engine, h, t_max, config.generic_caps)?;
    let depth_ms = started.elapsed().as_millis();

    let field_comparison = match config.compare_field {
        Some(other) if other != config.field => {
            let table = depth_function(&engine.with_field(other), h, t_max, config.generic_caps)?;
            let differing: BTreeMap<u32, usize> = table
                .into_iter()
                .filter(|(t, d)| depths.get(t) != Some(d))
                .collect();
            Some(FieldComparison {
                characteristic: other.characteristic(),
                agrees: differing.is_empty(),
                differing,
            })
        }
        _ => None,
    };

    let j = MonomialIdeal::cover_ideal(h);
    let ell = analytic_spread(&j)?;
    let limit = n as i64 - ell as i64;

    let started = Instant::now();
    let ntf_witness = ntf_check(h, &j, s_ntf_max, config.symbolic_caps)?;
    let ntf_ms = started.elapsed().as_millis();

    let values: Vec<usize> = depths.values().copied().collect();
    let t1_nonincreasing = values.windows(2).all(|w| w[0] >= w[1]);
    let limit_matches = depths
        .iter()
        .filter(|(&t, _)| t as usize >= n)
        .all(|(_, &d)| d as i64 == limit);
    let reached = depths
        .iter()
        .find(|(_, &d)| d as i64 == limit)
        .map(|(&t, _)| t);
    let dstab = Dstab::from_table(&depths);
    let t2_dstab_le_n = match (reached, dstab) {
        (Some(first), Dstab::Resolved(s)) => first as usize <= n && s == first,
        _ => false,
    };
    let brodmann_bound = values.last().is_some_and(|&d| d as i64 <= limit);

    Ok(DepthReport {
        instance: instance.to_string(),
        hypergraph: h.clone(),
        n,
        m: h.num_edges(),
        balanced,
        characteristic: config.field.characteristic(),
        depth_values: depths,
        dstab,
        analytic_spread: ell,
        limit_depth: limit,
        s_ntf_max,
        verdicts: Verdicts {
            t1_nonincreasing,
            t2_dstab_le_n,
            limit_matches,
            ntf_holds: ntf_witness.is_none(),
            brodmann_bound,
        },
        ntf_witness,
        field_comparison,
        asserted: balanced,
        timings: config.timings.then_some(Timings { depth_ms, ntf_ms }),
    })
}

/// First `s <= s_max` with `J^s ≠ J^(s)`, if any.
pub fn ntf_check(
    h: &Hypergraph,
    j: &MonomialIdeal,
    s_max: u32,
    caps: SymbolicCaps,
) -> Result<Option<NtfWitness>, StabilityError> {
    let mut power = j.clone();
    for s in 1..=s_max {
        if s > 1 {
            power = power.product(j)?;
        }
        let symbolic = MonomialIdeal::symbolic_power_capped(h, s, caps)?;
        if let Some(m) = power.difference_witness(&symbolic)? {
            return Ok(Some(NtfWitness {
                s,
                monomial: m.exponents().to_vec(),
            }));
        }
    }
    Ok(None)
}

impl NtfWitness {
    pub fn monomial(&self) -> Monomial {
        Monomial::new(self.monomial.clone())
    }
}
