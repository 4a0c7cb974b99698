//! `verify --suite ...`: per-instance reports, polytope checks, and the
//! envelope written to disk.

use std::collections::BTreeSet;

use clap::ValueEnum;
use coverdepth::polytope::{integrality_all_splits, monotone_feasibility_all_splits};
use coverdepth::{
    stability, DepthReport, Hypergraph, Integrality, RationalPoint, TakayamaEngine, VerifyConfig,
};
use rayon::prelude::*;
use serde::Serialize;

use crate::input::{Expected, Instance};
use crate::{CliError, RunConfig};

#[derive(Debug, Clone, Copy, PartialEq, Eq, PartialOrd, Ord, Serialize, ValueEnum)]
#[serde(rename_all = "lowercase")]
pub enum Suite {
    T1,
    T2,
    Ntf,
    Polytope,
    All,
}

impl Suite {
    fn covers(self, other: Suite) -> bool {
        self == Suite::All || self == other
    }
}

/// Largest vertex count for which every split's vertices are enumerated.
pub const INTEGRALITY_MAX_VERTICES: usize = 6;

#[derive(Debug, Clone, Serialize)]
pub struct FractionalVertex {
    pub upper: Vec<usize>,
    pub vertex: RationalPoint,
}

#[derive(Debug, Clone, Serialize)]
pub struct IntegralityCheck {
    pub splits: usize,
    pub all_binary: bool,
    pub fractional: Option<FractionalVertex>,
}

#[derive(Debug, Clone, Serialize)]
pub struct Flip {
    pub upper: Vec<usize>,
    pub t: u32,
}

#[derive(Debug, Clone, Serialize)]
pub struct MonotoneCheck {
    pub t_max: u32,
    pub splits: usize,
    pub flips: Vec<Flip>,
}

#[derive(Debug, Clone, Serialize)]
pub struct PolytopeCheck {
    pub instance: String,
    pub n: usize,
    pub m: usize,
    pub balanced: bool,
    pub integrality: Option<IntegralityCheck>,
    pub monotone: MonotoneCheck,
}

impl PolytopeCheck {
    fn violations(&self) -> Vec<&'static str> {
        let mut out = Vec::new();
        if self.balanced {
            if self.integrality.as_ref().is_some_and(|i| !i.all_binary) {
                out.push("vertex_integrality");
            }
            if !self.monotone.flips.is_empty() {
                out.push("monotone_feasibility");
            }
        }
        out
    }
}

pub fn polytope_check(id: &str, h: &Hypergraph, t_max: u32) -> Result<PolytopeCheck, CliError> {
    let balanced = h.is_balanced().map_err(CliError::from_core)?.is_balanced();
    let integrality = if h.n() <= INTEGRALITY_MAX_VERTICES {
        let results = integrality_all_splits(h).map_err(CliError::from_core)?;
        let splits = results.len();
        let fractional = results
            .into_iter()
            .find_map(|(upper, verdict)| match verdict {
                Integrality::Fractional { witness } => Some(FractionalVertex {
                    upper: upper.to_vec(),
                    vertex: witness,
                }),
                Integrality::Integral => None,
            });
        Some(IntegralityCheck {
            splits,
            all_binary: fractional.is_none(),
            fractional,
        })
    } else {
        None
    };
    let reports = monotone_feasibility_all_splits(h, t_max).map_err(CliError::from_core)?;
    let monotone = MonotoneCheck {
        t_max,
        splits: reports.len(),
        flips: reports
            .iter()
            .flat_map(|r| {
                r.flips.iter().map(|&t| Flip {
                    upper: r.upper.to_vec(),
                    t,
                })
            })
            .collect(),
    };
    Ok(PolytopeCheck {
        instance: id.to_string(),
        n: h.n(),
        m: h.num_edges(),
        balanced,
        integrality,
        monotone,
    })
}

#[derive(Debug, Clone, Serialize)]
pub struct Violation {
    pub instance: String,
    pub verdict: String,
}

#[derive(Debug, Clone, Serialize)]
pub struct ManifestMismatch {
    pub instance: String,
    pub verdict: String,
    pub expected: bool,
    pub actual: bool,
}

#[derive(Debug, Clone, Serialize)]
pub struct Summary {
    pub instances: usize,
    pub balanced: usize,
    pub violations: Vec<Violation>,
    pub manifest_mismatches: Vec<ManifestMismatch>,
}

#[derive(Debug, Clone, Serialize)]
pub struct VerifyOutput {
    pub tool: &'static str,
    pub version: &'static str,
    pub config: RunConfig,
    pub input_hash: String,
    pub suite: Suite,
    pub summary: Summary,
    pub reports: Vec<DepthReport>,
    #[serde(skip_serializing_if = "Vec::is_empty")]
    pub polytope: Vec<PolytopeCheck>,
}

fn suite_verdicts(suite: Suite) -> BTreeSet<&'static str> {
    let mut out = BTreeSet::new();
    if suite.covers(Suite::T1) {
        out.insert("t1_nonincreasing");
    }
    if suite.covers(Suite::T2) {
        out.extend(["t2_dstab_le_n", "limit_matches", "brodmann_bound"]);
    }
    if suite.covers(Suite::Ntf) {
        out.insert("ntf_holds");
    }
    out
}

fn mismatches(report: &DepthReport, expected: &Expected) -> Vec<ManifestMismatch> {
    let v = &report.verdicts;
    [
        (
            "t1_nonincreasing",
            expected.t1_nonincreasing,
            v.t1_nonincreasing,
        ),
        ("t2_dstab_le_n", expected.t2_dstab_le_n, v.t2_dstab_le_n),
        ("limit_matches", expected.limit_matches, v.limit_matches),
        ("ntf_holds", expected.ntf_holds, v.ntf_holds),
    ]
    .into_iter()
    .filter_map(|(name, want, got)| {
        want.filter(|&w| w != got).map(|w| ManifestMismatch {
            instance: report.instance.clone(),
            verdict: name.to_string(),
            expected: w,
            actual: got,
        })
    })
    .collect()
}

pub fn run_verify(
    suite: Suite,
    instances: &[Instance],
    verify_config: &VerifyConfig,
    engine: &TakayamaEngine,
    config: RunConfig,
    input_hash: String,
) -> Result<VerifyOutput, CliError> {
    let mut reports: Vec<DepthReport> = instances
        .par_iter()
        .map(|inst| stability::verify(&inst.id, &inst.hypergraph, verify_config, engine))
        .collect::<Result<_, _>>()
        .map_err(CliError::from_core)?;
    reports.sort_by(|a, b| a.instance.cmp(&b.instance));

    let mut polytope: Vec<PolytopeCheck> = if suite.covers(Suite::Polytope) {
        instances
            .par_iter()
            .map(|inst| {
                let t_max = verify_config
                    .t_max
                    .unwrap_or(inst.hypergraph.n() as u32 + 2);
                polytope_check(&inst.id, &inst.hypergraph, t_max)
            })
            .collect::<Result<_, _>>()?
    } else {
        Vec::new()
    };
    polytope.sort_by(|a, b| a.instance.cmp(&b.instance));

    let wanted = suite_verdicts(suite);
    let mut violations: Vec<Violation> = reports
        .iter()
        .flat_map(|r| {
            r.violations()
                .into_iter()
                .filter(|v| wanted.contains(v))
                .map(|v| Violation {
                    instance: r.instance.clone(),
                    verdict: v.to_string(),
                })
        })
        .collect();
    violations.extend(polytope.iter().flat_map(|p| {
        p.violations().into_iter().map(|v| Violation {
            instance: p.instance.clone(),
            verdict: v.to_string(),
        })
    }));

    let manifest_mismatches = reports
        .iter()
        .filter_map(|r| {
            instances
                .iter()
                .find(|i| i.id == r.instance)
                .and_then(|i| i.expected.as_ref())
                .map(|e| mismatches(r, e))
        })
        .flatten()
        .collect();

    Ok(VerifyOutput {
        tool: "coverdepth",
        version: env!("CARGO_PKG_VERSION"),
        config,
        input_hash,
        suite,
        summary: Summary {
            instances: reports.len(),
            balanced: reports.iter().filter(|r| r.balanced).count(),
            violations,
            manifest_mismatches,
        },
        reports,
        polytope,
    })
}
