//! Acceptance suite. Prints one PASS/FAIL line per criterion and exits
//! nonzero if any fails.

use std::collections::BTreeMap;
use std::path::{Path, PathBuf};
use std::process::Command;
use std::time::Instant;

use coverdepth::polytope::{integrality_all_splits, monotone_feasibility_all_splits};
use coverdepth::stability::{self, analytic_spread, DepthReport, Dstab, VerifyConfig};
use coverdepth::{
    depth_via_koszul, depth_via_takayama, vertices_closed, ClosureMode, EdgeSplitSystem, FieldSpec,
    Hypergraph, Monomial, MonomialIdeal, RationalPoint, SimplicialComplex, TakayamaEngine,
    VertexSet,
};
use num_rational::Ratio;
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;
use serde::Deserialize;

const Q: FieldSpec = FieldSpec::Rational;

struct Outcome {
    pass: bool,
    detail: String,
}

fn outcome(pass: bool, detail: impl Into<String>) -> Outcome {
    Outcome {
        pass,
        detail: detail.into(),
    }
}

fn corpus_dir() -> PathBuf {
    Path::new(env!("CARGO_MANIFEST_DIR")).join("../../corpus")
}

#[derive(Deserialize)]
struct Entry {
    id: String,
    file: String,
    balanced: bool,
}

#[derive(Deserialize)]
struct Manifest {
    instances: Vec<Entry>,
}

struct Instance {
    id: String,
    h: Hypergraph,
    balanced: bool,
}

fn load_corpus() -> Vec<Instance> {
    let dir = corpus_dir();
    let manifest: Manifest =
        serde_json::from_str(&std::fs::read_to_string(dir.join("manifest.json")).unwrap()).unwrap();
    manifest
        .instances
        .into_iter()
        .map(|e| {
            let h: Hypergraph =
                serde_json::from_str(&std::fs::read_to_string(dir.join(&e.file)).unwrap()).unwrap();
            Instance {
                id: e.id,
                h,
                balanced: e.balanced,
            }
        })
        .collect()
}

fn random_ideal(rng: &mut ChaCha8Rng) -> MonomialIdeal {
    let n = rng.gen_range(1..=5);
    let k = rng.gen_range(1..=6);
    let rows: Vec<Vec<u32>> = (0..k)
        .map(|_| loop {
            let row: Vec<u32> = (0..n).map(|_| rng.gen_range(0..=3)).collect();
            if row.iter().any(|&e| e > 0) {
                break row;
            }
        })
        .collect();
    MonomialIdeal::from_exponent_lists(Some(n), rows).unwrap()
}

fn oracle_equivalence() -> Outcome {
    let started = Instant::now();
    let mut rng = ChaCha8Rng::seed_from_u64(0x5eed);
    let mut mismatches = Vec::new();
    let mut histogram = BTreeMap::new();
    let count = 200;
    for k in 0..count {
        let i = random_ideal(&mut rng);
        let a = depth_via_takayama(&i, Q).unwrap();
        let b = depth_via_koszul(&i, Q).unwrap();
        *histogram.entry(a).or_insert(0usize) += 1;
        if a != b {
            mismatches.push(format!(
                "#{k}: {:?} takayama {a} koszul {b}",
                i.to_exponent_lists()
            ));
        }
    }
    let secs = started.elapsed().as_secs_f64();
    outcome(
        mismatches.is_empty() && secs <= 300.0,
        format!(
            "{count} ideals, {} mismatches, depth histogram {histogram:?}, {secs:.2}s {}",
            mismatches.len(),
            mismatches.first().cloned().unwrap_or_default()
        ),
    )
}

fn nonincreasing(reports: &[DepthReport]) -> Outcome {
    let bad: Vec<&str> = reports
        .iter()
        .filter(|r| r.balanced)
        .filter(|r| {
            let v: Vec<usize> = r.depth_values.values().copied().collect();
            v.windows(2).any(|w| w[0] < w[1])
        })
        .map(|r| r.instance.as_str())
        .collect();
    let balanced = reports.iter().filter(|r| r.balanced).count();
    outcome(
        balanced >= 50 && bad.is_empty(),
        format!("{balanced} balanced instances, violations {bad:?}"),
    )
}

fn stable_value(reports: &[DepthReport], corpus: &[Instance], engine: &TakayamaEngine) -> Outcome {
    let mut bad = Vec::new();
    let mut checked = 0;
    for r in reports.iter().filter(|r| r.balanced) {
        let n = r.n as u32;
        let h = &corpus.iter().find(|c| c.id == r.instance).unwrap().h;
        let ell = analytic_spread(&MonomialIdeal::cover_ideal(h)).unwrap() as i64;
        let limit = r.n as i64 - ell;
        let tail_ok = (n..=n + 2).all(|t| r.depth_values.get(&t).map(|&d| d as i64) == Some(limit));
        let dstab = stability::dstab(engine, h).ok();
        let dstab_ok = dstab.is_some_and(|s| s <= n) && r.dstab == Dstab::Resolved(dstab.unwrap());
        if !(tail_ok && dstab_ok) {
            bad.push(r.instance.clone());
        }
        checked += 1;
    }
    outcome(
        bad.is_empty(),
        format!("{checked} balanced instances, violations {bad:?}"),
    )
}

fn torsion_free(corpus: &[Instance]) -> Outcome {
    let mut bad = Vec::new();
    let mut checked = 0;
    for inst in corpus.iter().filter(|c| c.balanced) {
        let j = MonomialIdeal::cover_ideal(&inst.h);
        let s_max = (inst.h.n() as u32).min(4);
        let mut power = j.clone();
        for s in 1..=s_max {
            if s > 1 {
                power = power.product(&j).unwrap();
            }
            let symbolic = MonomialIdeal::symbolic_power(&inst.h, s).unwrap();
            if !power.equals(&symbolic).unwrap() {
                bad.push(format!("{} s={s}", inst.id));
            }
        }
        checked += 1;
    }
    let tri = Hypergraph::cycle(3);
    let j = MonomialIdeal::cover_ideal(&tri);
    let j2 = j.power(2).unwrap();
    let sym2 = MonomialIdeal::symbolic_power(&tri, 2).unwrap();
    let x123 = Monomial::new(vec![1, 1, 1]);
    let witness = j2.difference_witness(&sym2).unwrap();
    let control = j
        .equals(&MonomialIdeal::symbolic_power(&tri, 1).unwrap())
        .unwrap()
        && sym2.contains_monomial(&x123)
        && !j2.contains_monomial(&x123)
        && witness == Some(x123);
    outcome(
        bad.is_empty() && control,
        format!(
            "{checked} balanced instances, violations {bad:?}; triangle s=2 witness {}",
            if control { "x1x2x3" } else { "MISSING" }
        ),
    )
}

fn vertex_integrality(corpus: &[Instance]) -> Outcome {
    let mut bad = Vec::new();
    let mut instances = 0;
    let mut splits = 0;
    for inst in corpus.iter().filter(|c| c.balanced && c.h.n() <= 6) {
        for (upper, verdict) in integrality_all_splits(&inst.h).unwrap() {
            splits += 1;
            if !verdict.is_integral() {
                bad.push(format!("{} U={upper}", inst.id));
            }
        }
        instances += 1;
    }
    let tri = Hypergraph::cycle(3);
    let all_upper =
        EdgeSplitSystem::new(tri.clone(), tri.all_edges(), 1, ClosureMode::Closed).unwrap();
    let half = Ratio::new(1, 2);
    let centre = RationalPoint(vec![half; 3]);
    let control = vertices_closed(&all_upper).unwrap().contains(&centre);
    outcome(
        bad.is_empty() && control && instances > 0,
        format!(
            "{instances} instances, {splits} splits, non-binary {bad:?}; triangle all-upper (1/2,1/2,1/2) {}",
            if control { "found" } else { "MISSING" }
        ),
    )
}

fn monotone_feasibility(corpus: &[Instance]) -> Outcome {
    let mut flips = Vec::new();
    let mut splits = 0;
    for inst in corpus.iter().filter(|c| c.balanced) {
        let t_max = inst.h.n() as u32 + 2;
        for r in monotone_feasibility_all_splits(&inst.h, t_max).unwrap() {
            splits += 1;
            for t in &r.flips {
                flips.push(format!("{} U={} t={t}", inst.id, r.upper));
            }
        }
    }
    outcome(
        flips.is_empty(),
        format!("{splits} splits, flips {flips:?}"),
    )
}

fn fixed_points(engine: &TakayamaEngine) -> Outcome {
    let mut notes = Vec::new();
    let mut ok = true;
    for (name, h, depth, ell) in [
        ("single edge", Hypergraph::path(2), 0usize, 2usize),
        ("P3", Hypergraph::path(3), 1, 2),
    ] {
        let j = MonomialIdeal::cover_ideal(&h);
        let table: BTreeMap<u32, usize> = (1..=5)
            .map(|t| (t, engine.depth_power_balanced(&h, t).unwrap()))
            .collect();
        let koszul: Vec<usize> = (1..=3)
            .map(|t| depth_via_koszul(&j.power(t).unwrap(), Q).unwrap())
            .collect();
        let this = table.values().all(|&d| d == depth)
            && koszul.iter().all(|&d| d == depth)
            && stability::dstab(engine, &h).ok() == Some(1)
            && analytic_spread(&j).unwrap() == ell;
        notes.push(format!("{name} {}", if this { "ok" } else { "WRONG" }));
        ok &= this;
    }
    outcome(ok, notes.join(", "))
}

fn random_complex(rng: &mut ChaCha8Rng) -> SimplicialComplex {
    let n = rng.gen_range(1..=7);
    let k = rng.gen_range(0..=6);
    let facets: Vec<VertexSet> = (0..k)
        .map(|_| VertexSet::from_bits(rng.gen_range(0..(1u64 << n))))
        .collect();
    SimplicialComplex::from_facets(n, facets).unwrap()
}

fn homology_sanity() -> Outcome {
    let mut rng = ChaCha8Rng::seed_from_u64(8);
    let mut bad = 0;
    let count = 1000;
    for _ in 0..count {
        let d = random_complex(&mut rng);
        for field in [Q, FieldSpec::Prime(2)] {
            let betti = d.reduced_betti(field);
            if betti.euler_characteristic() != d.reduced_euler_characteristic() {
                bad += 1;
            }
            if !d.is_void() && !d.cone().reduced_betti(field).is_zero() {
                bad += 1;
            }
        }
    }
    outcome(
        bad == 0,
        format!("{count} complexes over Q and F_2, {bad} failures"),
    )
}

fn determinism() -> Outcome {
    let bin = env!("CARGO_BIN_EXE_coverdepth");
    let dir = tempfile::tempdir().unwrap();
    let cache = dir.path().join("cache");
    let runs: Vec<(&str, Vec<String>)> = vec![
        ("jobs1", vec!["--jobs".into(), "1".into()]),
        ("jobs4", vec!["--jobs".into(), "4".into()]),
        (
            "cold",
            vec!["--cache-dir".into(), cache.display().to_string()],
        ),
        (
            "warm",
            vec![
                "--cache-dir".into(),
                cache.display().to_string(),
                "--jobs".into(),
                "3".into(),
            ],
        ),
    ];
    let mut outputs = Vec::new();
    for (name, extra) in &runs {
        let out_dir = dir.path().join(name);
        let status = Command::new(bin)
            .args(["verify", "--suite", "all", "--corpus"])
            .arg(corpus_dir())
            .arg("--out")
            .arg(&out_dir)
            .args(extra)
            .env_remove("COVERDEPTH_CACHE_DIR")
            .output()
            .unwrap();
        if !status.status.success() {
            return outcome(false, format!("run {name} exited with {}", status.status));
        }
        let json = std::fs::read(out_dir.join("report.json")).unwrap();
        let csv = std::fs::read(out_dir.join("report.csv")).unwrap();
        outputs.push((name, json, csv));
    }
    let (_, json0, csv0) = &outputs[0];
    let differing: Vec<&str> = outputs
        .iter()
        .filter(|(_, j, c)| j != json0 || c != csv0)
        .map(|(n, _, _)| **n)
        .collect();
    outcome(
        differing.is_empty(),
        format!(
            "{} runs (jobs 1/4, cold/warm cache), {} bytes json, differing {differing:?}",
            outputs.len(),
            json0.len()
        ),
    )
}

fn main() {
    let engine = TakayamaEngine::new(Q);
    let corpus = load_corpus();
    let reports: Vec<DepthReport> = corpus
        .iter()
        .map(|c| stability::verify(&c.id, &c.h, &VerifyConfig::default(), &engine).unwrap())
        .collect();

    let results = [
        ("1 oracle equivalence", oracle_equivalence()),
        ("2 non-increasing depth", nonincreasing(&reports)),
        (
            "3 stable value and dstab <= n",
            stable_value(&reports, &corpus, &engine),
        ),
        ("4 symbolic equals ordinary powers", torsion_free(&corpus)),
        ("5 binary vertices at t = 1", vertex_integrality(&corpus)),
        (
            "6 monotone lattice feasibility",
            monotone_feasibility(&corpus),
        ),
        ("7 fixed points", fixed_points(&engine)),
        ("8 homology sanity", homology_sanity()),
        ("9 determinism", determinism()),
    ];
    let mut failed = 0;
    for (name, o) in &results {
        println!(
            "{} criterion {name}: {}",
            if o.pass { "PASS" } else { "FAIL" },
            o.detail
        );
        failed += usize::from(!o.pass);
    }
    println!(
        "acceptance: {} passed, {failed} failed",
        results.len() - failed
    );
    if failed > 0 {
        std::process::exit(1);
    }
}
