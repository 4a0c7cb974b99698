//! `coverdepth`: depth functions, balancedness and polytope checks for
//! cover ideals of hypergraphs.

mod cache;
mod input;
mod suite;

use std::io::{self, Write};
use std::path::{Path, PathBuf};
use std::process::ExitCode;
use std::sync::Arc;

use clap::{Args, Parser, Subcommand, ValueEnum};
use coverdepth::polytope::{monotone_feasibility_all_splits, vertices_closed};
use coverdepth::stability::{depth_function, depth_power, Dstab, GenericCaps};
use coverdepth::{
    betti_table, depth_via_koszul, generate, ClosureMode, Family, FamilySpec, FieldSpec,
    HomologyCache, Hypergraph, MemoryCache, MonomialIdeal, StabilityError, TakayamaEngine,
    VerifyConfig,
};
use serde::Serialize;
use thiserror::Error;

use crate::cache::DiskCache;
use crate::suite::{run_verify, Suite};

#[derive(Debug, Error)]
pub enum CliError {
    #[error("{}: {source}", path.display())]
    Io {
        path: PathBuf,
        #[source]
        source: io::Error,
    },
    #[error("parse error: {0}")]
    Parse(String),
    #[error("{what} = {value} exceeds cap {cap}")]
    CapExceeded {
        what: &'static str,
        value: usize,
        cap: usize,
    },
    #[error("{0}")]
    Core(String),
    /// Reports were written; some asserted verdict failed.
    #[error("theorem violation: {0}")]
    TheoremViolation(String),
}

impl CliError {
    pub fn from_core(e: impl std::fmt::Display) -> Self {
        CliError::Core(e.to_string())
    }

    fn exit_code(&self) -> u8 {
        match self {
            CliError::TheoremViolation(_) => 1,
            _ => 2,
        }
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize, ValueEnum)]
#[serde(rename_all = "lowercase")]
pub enum Format {
    Json,
    Csv,
}

#[derive(Debug, Clone, Copy, Serialize)]
pub struct Caps {
    pub n: usize,
    pub m: usize,
    pub t: u32,
}

/// What a report records about its own run. Parallelism and cache location
/// are left out because they must not change any output.
#[derive(Debug, Clone, Serialize)]
pub struct RunConfig {
    pub command: String,
    pub inputs: Vec<String>,
    pub characteristic: u64,
    pub t_max: Option<u32>,
    pub s_ntf_max: Option<u32>,
    pub compare_characteristic: Option<u64>,
    pub caps: Caps,
    pub seed: Option<u64>,
    pub format: Format,
}

#[derive(Parser)]
#[command(
    name = "coverdepth",
    version,
    about = "Depth functions of cover ideals of hypergraphs"
)]
struct Cli {
    #[command(flatten)]
    global: Global,
    #[command(subcommand)]
    command: Command,
}

#[derive(Args)]
struct Global {
    /// Field characteristic: 0 for the rationals, otherwise a prime.
    #[arg(long = "char", default_value_t = 0, global = true)]
    characteristic: u64,
    #[arg(long, value_enum, default_value_t = Format::Json, global = true)]
    format: Format,
    /// Worker threads; defaults to the number of cores.
    #[arg(long, global = true)]
    jobs: Option<usize>,
    /// Directory for cached homology; unset means memory only.
    #[arg(long, env = "COVERDEPTH_CACHE_DIR", global = true)]
    cache_dir: Option<PathBuf>,
    #[arg(long, default_value_t = 12, global = true)]
    max_n: usize,
    #[arg(long, default_value_t = 16, global = true)]
    max_m: usize,
    #[arg(long, default_value_t = 32, global = true)]
    max_t: u32,
}

#[derive(Args)]
#[group(required = true, multiple = false)]
struct Source {
    /// Hypergraph instance file; the ideal is its cover ideal.
    file: Option<PathBuf>,
    /// Exponent vectors such as `[[0,1,0],[1,0,1]]`, inline or as a path.
    #[arg(long)]
    ideal: Option<String>,
}

#[derive(Subcommand)]
enum Command {
    /// Balancedness verdict, with an odd special cycle when unbalanced.
    CheckBalanced { file: PathBuf },
    /// Minimal vertex covers.
    Covers { file: PathBuf },
    /// Generators of the cover ideal as exponent vectors.
    CoverIdeal { file: PathBuf },
    /// depth R/I^t.
    Depth {
        #[arg(long)]
        t: u32,
        #[command(flatten)]
        source: Source,
    },
    /// depth R/J(H)^t for t = 1..=t_max.
    DepthFunction {
        #[arg(long)]
        t_max: u32,
        file: PathBuf,
    },
    /// Index of depth stability.
    Dstab {
        file: PathBuf,
        /// Table length for unbalanced inputs; defaults to n + 2.
        #[arg(long)]
        t_max: Option<u32>,
    },
    /// Multigraded Betti numbers, projective dimension and depth through the
    /// Koszul oracle.
    Betti {
        /// Power of the ideal to resolve.
        #[arg(long, default_value_t = 1)]
        t: u32,
        #[command(flatten)]
        source: Source,
    },
    /// Edge-split systems.
    Polytope {
        #[command(subcommand)]
        action: PolytopeAction,
    },
    /// Run the verification suites over a corpus or instance files.
    Verify {
        #[arg(long, value_enum, default_value_t = Suite::All)]
        suite: Suite,
        /// Corpus directory containing `manifest.json`.
        #[arg(long)]
        corpus: Option<PathBuf>,
        files: Vec<PathBuf>,
        #[arg(long)]
        t_max: Option<u32>,
        #[arg(long)]
        s_ntf_max: Option<u32>,
        /// Write `report.json` and `report.csv` here instead of stdout.
        #[arg(long)]
        out: Option<PathBuf>,
        /// Record wall-clock timings (breaks byte-identical reports).
        #[arg(long)]
        timings: bool,
        /// Second characteristic whose depth table is reported alongside.
        #[arg(long, default_value_t = 2)]
        compare_char: u64,
        /// Skip the second-field depth table.
        #[arg(long)]
        no_compare: bool,
    },
    /// Seeded random instance.
    Gen {
        #[arg(long)]
        family: Family,
        #[arg(long)]
        seed: u64,
        #[arg(long)]
        n: Option<usize>,
        #[arg(long)]
        left: Option<usize>,
        #[arg(long)]
        right: Option<usize>,
        #[arg(long, default_value_t = 0.5)]
        density: f64,
        #[arg(long)]
        edges: Option<usize>,
    },
}

#[derive(Subcommand)]
enum PolytopeAction {
    /// Vertices of the closed system at `t` (from the file, default 1).
    Vertices { file: PathBuf },
    /// Whether every vertex of the closed system at t = 1 is a 0/1 vector.
    Integrality { file: PathBuf },
    /// Lattice feasibility of Ω_t for t = 1..=t_max.
    Feasibility {
        file: PathBuf,
        #[arg(long)]
        t_max: u32,
    },
}

fn main() -> ExitCode {
    let cli = match Cli::try_parse() {
        Ok(cli) => cli,
        Err(e) => {
            let _ = e.print();
            return ExitCode::from(if e.use_stderr() { 2 } else { 0 });
        }
    };
    match run(cli) {
        Ok(()) => ExitCode::SUCCESS,
        Err(e) => {
            eprintln!("error: {e}");
            ExitCode::from(e.exit_code())
        }
    }
}

struct Ctx {
    global: Global,
    field: FieldSpec,
    engine: TakayamaEngine,
}

fn run(cli: Cli) -> Result<(), CliError> {
    let global = cli.global;
    let field = FieldSpec::from_characteristic(global.characteristic)
        .map_err(|e| CliError::Parse(e.to_string()))?;
    let cache: Arc<dyn HomologyCache> = match &global.cache_dir {
        Some(dir) => Arc::new(DiskCache::open(dir).map_err(|e| CliError::Io {
            path: dir.clone(),
            source: e,
        })?),
        None => Arc::new(MemoryCache::new()),
    };
    let mut pool = rayon::ThreadPoolBuilder::new();
    if let Some(jobs) = global.jobs {
        if jobs == 0 {
            return Err(CliError::Parse("--jobs must be positive".into()));
        }
        pool = pool.num_threads(jobs);
    }
    let pool = pool.build().map_err(CliError::from_core)?;
    let ctx = Ctx {
        engine: TakayamaEngine::with_cache(field, cache),
        field,
        global,
    };
    pool.install(|| dispatch(&ctx, cli.command))
}

fn emit_json<T: Serialize>(value: &T) -> Result<(), CliError> {
    let mut out = io::stdout().lock();
    serde_json::to_writer_pretty(&mut out, value).map_err(CliError::from_core)?;
    writeln!(out).map_err(CliError::from_core)
}

fn emit_csv<R: Serialize>(rows: impl IntoIterator<Item = R>) -> Result<(), CliError> {
    let mut w = csv::Writer::from_writer(io::stdout().lock());
    for row in rows {
        w.serialize(row).map_err(CliError::from_core)?;
    }
    w.flush().map_err(CliError::from_core)
}

fn join(xs: impl IntoIterator<Item = impl ToString>) -> String {
    xs.into_iter()
        .map(|x| x.to_string())
        .collect::<Vec<_>>()
        .join(" ")
}

impl Ctx {
    fn caps_check(&self, h: &Hypergraph) -> Result<(), CliError> {
        if h.n() > self.global.max_n {
            return Err(CliError::CapExceeded {
                what: "vertex count",
                value: h.n(),
                cap: self.global.max_n,
            });
        }
        if h.num_edges() > self.global.max_m {
            return Err(CliError::CapExceeded {
                what: "edge count",
                value: h.num_edges(),
                cap: self.global.max_m,
            });
        }
        Ok(())
    }

    fn t_check(&self, t: u32) -> Result<(), CliError> {
        if t == 0 {
            return Err(CliError::Parse("powers start at t = 1".into()));
        }
        if t > self.global.max_t {
            return Err(CliError::CapExceeded {
                what: "power t",
                value: t as usize,
                cap: self.global.max_t as usize,
            });
        }
        Ok(())
    }

    fn hypergraph(&self, path: &Path) -> Result<Hypergraph, CliError> {
        let h = input::load_hypergraph(path)?;
        self.caps_check(&h)?;
        Ok(h)
    }

    fn ideal(&self, source: &Source) -> Result<MonomialIdeal, CliError> {
        match (&source.file, &source.ideal) {
            (Some(path), _) => Ok(MonomialIdeal::cover_ideal(&self.hypergraph(path)?)),
            (None, Some(text)) => {
                let i = input::load_ideal(text)?;
                if i.n() > self.global.max_n {
                    return Err(CliError::CapExceeded {
                        what: "vertex count",
                        value: i.n(),
                        cap: self.global.max_n,
                    });
                }
                Ok(i)
            }
            (None, None) => Err(CliError::Parse("need an instance file or --ideal".into())),
        }
    }

    fn format(&self) -> Format {
        self.global.format
    }

    fn caps(&self) -> Caps {
        Caps {
            n: self.global.max_n,
            m: self.global.max_m,
            t: self.global.max_t,
        }
    }
}

fn dispatch(ctx: &Ctx, command: Command) -> Result<(), CliError> {
    match command {
        Command::CheckBalanced { file } => check_balanced(ctx, &file),
        Command::Covers { file } => {
            let h = ctx.hypergraph(&file)?;
            let covers: Vec<Vec<usize>> = h
                .minimal_vertex_covers()
                .iter()
                .map(|c| c.to_vec())
                .collect();
            match ctx.format() {
                Format::Json => emit_json(&covers),
                Format::Csv => {
                    #[derive(Serialize)]
                    struct Row {
                        cover: String,
                    }
                    emit_csv(covers.iter().map(|c| Row { cover: join(c) }))
                }
            }
        }
        Command::CoverIdeal { file } => {
            let h = ctx.hypergraph(&file)?;
            let gens = MonomialIdeal::cover_ideal(&h).to_exponent_lists();
            match ctx.format() {
                Format::Json => emit_json(&gens),
                Format::Csv => {
                    #[derive(Serialize)]
                    struct Row {
                        exponents: String,
                    }
                    emit_csv(gens.iter().map(|g| Row { exponents: join(g) }))
                }
            }
        }
        Command::Depth { t, source } => depth(ctx, t, &source),
        Command::DepthFunction { t_max, file } => {
            ctx.t_check(t_max)?;
            let h = ctx.hypergraph(&file)?;
            let table = depth_function(&ctx.engine, &h, t_max, GenericCaps::default())
                .map_err(CliError::from_core)?;
            #[derive(Serialize)]
            struct Row {
                t: u32,
                depth: usize,
            }
            let rows: Vec<Row> = table
                .into_iter()
                .map(|(t, depth)| Row { t, depth })
                .collect();
            match ctx.format() {
                Format::Json => emit_json(&rows),
                Format::Csv => emit_csv(rows),
            }
        }
        Command::Dstab { file, t_max } => dstab(ctx, &file, t_max),
        Command::Betti { t, source } => betti(ctx, t, &source),
        Command::Polytope { action } => polytope(ctx, action),
        Command::Verify {
            suite,
            corpus,
            files,
            t_max,
            s_ntf_max,
            out,
            timings,
            compare_char,
            no_compare,
        } => {
            if corpus.is_none() && files.is_empty() {
                return Err(CliError::Parse("need --corpus or instance files".into()));
            }
            if let Some(t) = t_max {
                ctx.t_check(t)?;
            }
            let instances = input::load_instances(corpus.as_deref(), &files)?;
            for inst in &instances {
                ctx.caps_check(&inst.hypergraph)?;
                if t_max.is_none() {
                    ctx.t_check(inst.hypergraph.n() as u32 + 2)?;
                }
            }
            let mut inputs: Vec<String> = corpus.iter().map(|c| c.display().to_string()).collect();
            inputs.extend(files.iter().map(|f| f.display().to_string()));
            let compare_field = if no_compare {
                None
            } else {
                Some(
                    FieldSpec::from_characteristic(compare_char)
                        .map_err(|e| CliError::Parse(e.to_string()))?,
                )
            };
            let config = RunConfig {
                command: format!("verify --suite {}", suite_name(suite)),
                inputs,
                characteristic: ctx.field.characteristic(),
                t_max,
                s_ntf_max,
                compare_characteristic: compare_field.map(|f| f.characteristic()),
                caps: ctx.caps(),
                seed: None,
                format: ctx.format(),
            };
            let verify_config = VerifyConfig {
                field: ctx.field,
                t_max,
                s_ntf_max,
                compare_field,
                timings,
                ..VerifyConfig::default()
            };
            let hash = input::content_hash(&instances);
            let output = run_verify(suite, &instances, &verify_config, &ctx.engine, config, hash)?;
            for m in &output.summary.manifest_mismatches {
                eprintln!(
                    "warning: {}: {} expected {} but got {}",
                    m.instance, m.verdict, m.expected, m.actual
                );
            }
            match &out {
                Some(dir) => write_reports(dir, &output)?,
                None => match ctx.format() {
                    Format::Json => emit_json(&output)?,
                    Format::Csv => {
                        coverdepth::stability::write_csv(&output.reports, io::stdout().lock())
                            .map_err(CliError::from_core)?
                    }
                },
            }
            if output.summary.violations.is_empty() {
                Ok(())
            } else {
                let list: Vec<String> = output
                    .summary
                    .violations
                    .iter()
                    .map(|v| format!("{}:{}", v.instance, v.verdict))
                    .collect();
                Err(CliError::TheoremViolation(list.join(", ")))
            }
        }
        Command::Gen {
            family,
            seed,
            n,
            left,
            right,
            density,
            edges,
        } => {
            let need = |v: Option<usize>, flag: &str| {
                v.ok_or_else(|| CliError::Parse(format!("family {family} needs --{flag}")))
            };
            let spec = match family {
                Family::Bipartite => FamilySpec::Bipartite {
                    left: need(left, "left")?,
                    right: need(right, "right")?,
                    density,
                },
                Family::Tree => FamilySpec::Tree { n: need(n, "n")? },
                Family::EvenCycle => FamilySpec::EvenCycle { n: need(n, "n")? },
                Family::OddCycle => FamilySpec::OddCycle { n: need(n, "n")? },
                Family::Interval => FamilySpec::Interval {
                    n: need(n, "n")?,
                    edges: need(edges, "edges")?,
                },
            };
            let h = generate(&spec, seed).map_err(|e| CliError::Parse(e.to_string()))?;
            println!(
                "{}",
                serde_json::to_string(&h).map_err(CliError::from_core)?
            );
            Ok(())
        }
    }
}

fn suite_name(suite: Suite) -> String {
    suite
        .to_possible_value()
        .map(|v| v.get_name().to_string())
        .unwrap_or_default()
}

fn write_reports(dir: &Path, output: &suite::VerifyOutput) -> Result<(), CliError> {
    let io_err = |path: &Path| {
        let path = path.to_path_buf();
        move |e: io::Error| CliError::Io { path, source: e }
    };
    std::fs::create_dir_all(dir).map_err(io_err(dir))?;
    let json_path = dir.join("report.json");
    let mut text = serde_json::to_string_pretty(output).map_err(CliError::from_core)?;
    text.push('\n');
    std::fs::write(&json_path, text).map_err(io_err(&json_path))?;
    let csv_path = dir.join("report.csv");
    let file = std::fs::File::create(&csv_path).map_err(io_err(&csv_path))?;
    coverdepth::stability::write_csv(&output.reports, file).map_err(CliError::from_core)?;
    println!(
        "{} instances, {} violations",
        output.summary.instances,
        output.summary.violations.len()
    );
    Ok(())
}

fn check_balanced(ctx: &Ctx, file: &Path) -> Result<(), CliError> {
    let h = ctx.hypergraph(file)?;
    let verdict = h.is_balanced().map_err(CliError::from_core)?;
    match ctx.format() {
        Format::Json => emit_json(&verdict),
        Format::Csv => {
            #[derive(Serialize)]
            struct Row {
                verdict: &'static str,
                cycle_vertices: String,
                cycle_edges: String,
            }
            let row = match &verdict {
                coverdepth::Balance::Balanced => Row {
                    verdict: "BALANCED",
                    cycle_vertices: String::new(),
                    cycle_edges: String::new(),
                },
                coverdepth::Balance::Unbalanced { cycle } => Row {
                    verdict: "UNBALANCED",
                    cycle_vertices: join(&cycle.vertices),
                    cycle_edges: join(&cycle.edges),
                },
            };
            emit_csv([row])
        }
    }
}

fn depth(ctx: &Ctx, t: u32, source: &Source) -> Result<(), CliError> {
    ctx.t_check(t)?;
    let d = match &source.file {
        Some(path) => {
            let h = ctx.hypergraph(path)?;
            depth_power(&ctx.engine, &h, t, GenericCaps::default()).map_err(CliError::from_core)?
        }
        None => {
            let power = ctx.ideal(source)?.power(t).map_err(CliError::from_core)?;
            ctx.engine
                .depth_via_takayama(&power)
                .map_err(CliError::from_core)?
        }
    };
    match ctx.format() {
        Format::Json => emit_json(&d),
        Format::Csv => {
            #[derive(Serialize)]
            struct Row {
                t: u32,
                depth: usize,
            }
            emit_csv([Row { t, depth: d }])
        }
    }
}

fn dstab(ctx: &Ctx, file: &Path, t_max: Option<u32>) -> Result<(), CliError> {
    let h = ctx.hypergraph(file)?;
    let balanced = h.is_balanced().map_err(CliError::from_core)?.is_balanced();
    let value = if balanced {
        match coverdepth::dstab(&ctx.engine, &h) {
            Ok(s) => Dstab::Resolved(s),
            Err(StabilityError::TheoremViolation(report)) => {
                emit_json(&report)?;
                return Err(CliError::TheoremViolation(report.violations().join(", ")));
            }
            Err(e) => return Err(CliError::from_core(e)),
        }
    } else {
        let t_max = t_max.unwrap_or(h.n() as u32 + 2);
        ctx.t_check(t_max)?;
        let table = depth_function(&ctx.engine, &h, t_max, GenericCaps::default())
            .map_err(CliError::from_core)?;
        Dstab::from_table(&table)
    };
    let text = value
        .value()
        .map_or_else(|| "UNRESOLVED".to_string(), |s| s.to_string());
    match ctx.format() {
        Format::Json => match value {
            Dstab::Resolved(s) => emit_json(&s),
            Dstab::Unresolved => emit_json(&text),
        },
        Format::Csv => {
            #[derive(Serialize)]
            struct Row {
                dstab: String,
            }
            emit_csv([Row { dstab: text }])
        }
    }
}

fn betti(ctx: &Ctx, t: u32, source: &Source) -> Result<(), CliError> {
    ctx.t_check(t)?;
    let i = ctx.ideal(source)?.power(t).map_err(CliError::from_core)?;
    let table = betti_table(&i, ctx.field).map_err(CliError::from_core)?;
    let depth = depth_via_koszul(&i, ctx.field).map_err(CliError::from_core)?;
    #[derive(Serialize)]
    struct Entry {
        j: usize,
        alpha: Vec<u32>,
        beta: usize,
    }
    let entries: Vec<Entry> = table
        .entries()
        .map(|(j, alpha, beta)| Entry {
            j,
            alpha: alpha.to_vec(),
            beta,
        })
        .collect();
    match ctx.format() {
        Format::Json => {
            #[derive(Serialize)]
            struct Out {
                n: usize,
                projective_dimension: usize,
                depth: usize,
                betti: Vec<Entry>,
            }
            emit_json(&Out {
                n: i.n(),
                projective_dimension: i.n() - depth,
                depth,
                betti: entries,
            })
        }
        Format::Csv => {
            #[derive(Serialize)]
            struct Row {
                j: usize,
                alpha: String,
                beta: usize,
            }
            emit_csv(entries.into_iter().map(|e| Row {
                j: e.j,
                alpha: join(e.alpha),
                beta: e.beta,
            }))
        }
    }
}

fn polytope(ctx: &Ctx, action: PolytopeAction) -> Result<(), CliError> {
    #[derive(Serialize)]
    struct SplitRow<T: Serialize> {
        upper: Vec<usize>,
        #[serde(flatten)]
        value: T,
    }
    match action {
        PolytopeAction::Vertices { file } => {
            let sys = input::load_system(&file)?;
            ctx.caps_check(&sys.hypergraph)?;
            ctx.t_check(sys.t)?;
            #[derive(Serialize)]
            struct V {
                vertices: Vec<coverdepth::RationalPoint>,
            }
            let mut rows = Vec::new();
            for upper in sys.splits() {
                let s = sys.system(upper, ClosureMode::Closed)?;
                let vertices = vertices_closed(&s).map_err(CliError::from_core)?;
                rows.push(SplitRow {
                    upper: upper.to_vec(),
                    value: V { vertices },
                });
            }
            match ctx.format() {
                Format::Json => emit_json(&rows),
                Format::Csv => {
                    #[derive(Serialize)]
                    struct Row {
                        upper: String,
                        vertex: String,
                    }
                    emit_csv(rows.iter().flat_map(|r| {
                        r.value.vertices.iter().map(|v| Row {
                            upper: join(&r.upper),
                            vertex: v.to_string(),
                        })
                    }))
                }
            }
        }
        PolytopeAction::Integrality { file } => {
            let sys = input::load_system(&file)?;
            ctx.caps_check(&sys.hypergraph)?;
            let mut rows = Vec::new();
            for upper in sys.splits() {
                let s = sys.system(upper, ClosureMode::Closed)?;
                let verdict =
                    coverdepth::check_vertex_integrality(&s).map_err(CliError::from_core)?;
                rows.push(SplitRow {
                    upper: upper.to_vec(),
                    value: verdict,
                });
            }
            match ctx.format() {
                Format::Json => emit_json(&rows),
                Format::Csv => {
                    #[derive(Serialize)]
                    struct Row {
                        upper: String,
                        verdict: &'static str,
                        witness: String,
                    }
                    emit_csv(rows.iter().map(|r| match &r.value {
                        coverdepth::Integrality::Integral => Row {
                            upper: join(&r.upper),
                            verdict: "INTEGRAL",
                            witness: String::new(),
                        },
                        coverdepth::Integrality::Fractional { witness } => Row {
                            upper: join(&r.upper),
                            verdict: "FRACTIONAL",
                            witness: witness.to_string(),
                        },
                    }))
                }
            }
        }
        PolytopeAction::Feasibility { file, t_max } => {
            let sys = input::load_system(&file)?;
            ctx.caps_check(&sys.hypergraph)?;
            ctx.t_check(t_max)?;
            let all = monotone_feasibility_all_splits(&sys.hypergraph, t_max)
                .map_err(CliError::from_core)?;
            let reports: Vec<_> = match sys.upper {
                Some(u) => all.into_iter().filter(|r| r.upper == u).collect(),
                None => all,
            };
            match ctx.format() {
                Format::Json => {
                    let rows: Vec<_> = reports
                        .iter()
                        .map(|r| SplitRow {
                            upper: r.upper.to_vec(),
                            value: serde_json::json!({
                                "feasible": r.feasible,
                                "flips": r.flips,
                                "monotone": r.is_monotone(),
                                "reaches_omega_p": r.reaches_omega_p,
                            }),
                        })
                        .collect();
                    emit_json(&rows)
                }
                Format::Csv => {
                    #[derive(Serialize)]
                    struct Row {
                        upper: String,
                        t: u32,
                        feasible: bool,
                    }
                    emit_csv(reports.iter().flat_map(|r| {
                        r.feasible.iter().enumerate().map(|(k, &f)| Row {
                            upper: join(r.upper.iter()),
                            t: k as u32 + 1,
                            feasible: f,
                        })
                    }))
                }
            }
        }
    }
}
