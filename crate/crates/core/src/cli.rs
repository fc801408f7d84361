//! Command-line front end. Every command prints JSON (or DOT/SVG/text when
//! asked) and maps outcomes to exit codes: 0 ok, 1 property violated,
//! 2 input error, 3 budget exceeded.

use std::path::PathBuf;

use clap::{Args, Parser, Subcommand, ValueEnum};
use rand::SeedableRng;
use rand_chacha::ChaCha8Rng;
use serde::Deserialize;
use serde_json::{json, Value};

use crate::cylinder::{self, CanonicalSign, CylindricalDiagram, DiagramTriangle};
use crate::error::{Error, Result};
use crate::graph::{explore, explore_signotopes, ConnectivityMode, Family, FlipGraph};
use crate::pcircle::{self, fixtures, PlanarArrangement, TriangleFlip};
use crate::realize::{self, LineArrangement, SlopeVector};
use crate::shelling;
use crate::signotope::{self, binomial, Signotope, Triple, WiringDiagram};
use crate::svg;

pub const EXIT_OK: i32 = 0;
pub const EXIT_VIOLATED: i32 = 1;
pub const EXIT_INPUT: i32 = 2;
pub const EXIT_BUDGET: i32 = 3;

/// Vertex budget when neither flag, config nor environment sets one.
pub const DEFAULT_BUDGET: usize = 2_000_000;

#[derive(Parser, Debug)]
#[command(name = "fliplab", version, about = "Flip graphs of pseudoline and pseudocircle arrangements")]
pub struct Cli {
    #[command(subcommand)]
    pub command: Command,
    #[command(flatten)]
    pub options: Options,
}

#[derive(Subcommand, Debug, Clone, Copy, PartialEq, Eq)]
pub enum Command {
    /// Flip closure and its vertex and edge counts.
    Enumerate,
    /// Vertex connectivity of the flip graph.
    Connectivity,
    /// Diameter of the flip graph.
    Diameter,
    /// Degree statistics of the flip graph.
    Degrees,
    /// Classes of all triples of a pseudocircle arrangement.
    Classify,
    /// All cylindricity predicates and whether they agree.
    CylindricalCheck,
    /// Flip a cylindrical diagram to the canonical diagram.
    Canonicalize,
    /// Flip an intersecting arrangement to a cylindrical one.
    Cylindrify,
    /// Flip sequence from a signotope to a shellable one.
    PathToShellable,
    /// Intercepts realizing a shellable signotope with the given slopes.
    Realize,
    /// Whether a signotope is realizable with the given slopes.
    Feasible,
    /// Linear intercept motion between two line arrangements.
    Interpolate,
    /// Random walk in the flip graph.
    Walk,
    /// Draw a state as SVG.
    Render,
    /// Run one acceptance check.
    Check,
}

#[derive(ValueEnum, Debug, Clone, Copy, PartialEq, Eq, Deserialize)]
#[serde(rename_all = "kebab-case")]
pub enum FamilyArg {
    Pseudoline,
    Pseudocircle,
    Cylindrical,
}

#[derive(ValueEnum, Debug, Clone, Copy, PartialEq, Eq, Deserialize)]
#[serde(rename_all = "kebab-case")]
pub enum ModeArg {
    Exact,
    Sampled,
}

#[derive(ValueEnum, Debug, Clone, Copy, PartialEq, Eq, Deserialize)]
#[serde(rename_all = "kebab-case")]
pub enum SignArg {
    Minus,
    Plus,
}

#[derive(ValueEnum, Debug, Clone, Copy, PartialEq, Eq, Deserialize)]
#[serde(rename_all = "kebab-case")]
pub enum FormatArg {
    Json,
    Dot,
    Svg,
    Text,
}

#[derive(ValueEnum, Debug, Clone, Copy, PartialEq, Eq, Deserialize)]
#[serde(rename_all = "kebab-case")]
pub enum FixtureArg {
    TwoCircles,
    Krupp,
    Nonkrupp2,
    Nonkrupp3,
    Nonkrupp4,
}

/// Options shared by all commands. Every field may also come from the JSON
/// file given by `--config`; flags take precedence.
#[derive(Args, Debug, Clone, Default, Deserialize)]
#[serde(default, deny_unknown_fields)]
pub struct Options {
    #[arg(long, global = true)]
    pub n: Option<usize>,
    #[arg(long, global = true, value_enum)]
    pub family: Option<FamilyArg>,
    #[arg(long, global = true)]
    pub input: Option<PathBuf>,
    /// Second state for commands that compare two.
    #[arg(long, global = true)]
    pub target: Option<PathBuf>,
    #[arg(long, global = true, value_enum)]
    pub fixture: Option<FixtureArg>,
    #[arg(long, global = true)]
    pub out: Option<PathBuf>,
    /// Vertex budget for graph commands, flip budget for walks.
    #[arg(long, global = true)]
    pub budget: Option<usize>,
    #[arg(long, global = true)]
    pub threads: Option<usize>,
    #[arg(long, global = true)]
    pub seed: Option<u64>,
    #[arg(long, global = true, value_enum)]
    pub mode: Option<ModeArg>,
    /// Sampled pairs for connectivity.
    #[arg(long, global = true)]
    pub samples: Option<usize>,
    /// Steps for walks and random inputs.
    #[arg(long, global = true)]
    pub steps: Option<usize>,
    #[arg(long, global = true, value_enum)]
    pub sign: Option<SignArg>,
    /// Comma-separated increasing rationals.
    #[arg(long, global = true)]
    pub slopes: Option<String>,
    #[arg(long, global = true, value_enum)]
    pub format: Option<FormatArg>,
    /// Acceptance criterion for `check`, 1..=13.
    #[arg(long, global = true)]
    pub criterion: Option<usize>,
    #[arg(long, global = true)]
    #[serde(skip)]
    pub config: Option<PathBuf>,
}

/// Fully resolved settings of one run.
#[derive(Debug, Clone)]
pub struct RunConfig {
    pub command: Command,
    pub n: Option<usize>,
    pub family: FamilyArg,
    pub input: Option<PathBuf>,
    pub target: Option<PathBuf>,
    pub fixture: Option<FixtureArg>,
    pub out: Option<PathBuf>,
    pub budget: usize,
    pub threads: Option<usize>,
    pub seed: u64,
    pub mode: ModeArg,
    pub samples: usize,
    pub steps: usize,
    pub sign: CanonicalSign,
    pub slopes: Option<String>,
    pub format: FormatArg,
    pub criterion: Option<usize>,
}

macro_rules! merge {
    ($flags:expr, $file:expr, $($f:ident),*) => {
        Options { $($f: $flags.$f.or($file.$f),)* config: $flags.config }
    };
}

impl RunConfig {
    /// Resolves flags over the config file over `FLIPLAB_BUDGET` over defaults.
    pub fn resolve(cli: &Cli) -> Result<RunConfig> {
        let file: Options = match &cli.options.config {
            Some(p) => serde_json::from_str(&std::fs::read_to_string(p)?)?,
            None => Options::default(),
        };
        let o = merge!(
            cli.options.clone(),
            file,
            n, family, input, target, fixture, out, budget, threads, seed, mode, samples, steps, sign, slopes, format, criterion
        );
        let env_budget = match std::env::var("FLIPLAB_BUDGET") {
            Ok(v) => Some(v.trim().parse::<usize>().map_err(|_| Error::Malformed("FLIPLAB_BUDGET is not a number".into()))?),
            Err(_) => None,
        };
        let budget = o.budget.or(env_budget).unwrap_or(DEFAULT_BUDGET);
        if budget == 0 {
            return Err(Error::Malformed("budget must be positive".into()));
        }
        let family = o.family.unwrap_or(match o.fixture {
            Some(_) => FamilyArg::Pseudocircle,
            None => FamilyArg::Pseudoline,
        });
        Ok(RunConfig {
            command: cli.command,
            n: o.n,
            family,
            input: o.input,
            target: o.target,
            fixture: o.fixture,
            out: o.out,
            budget,
            threads: o.threads,
            seed: o.seed.unwrap_or(0),
            mode: o.mode.unwrap_or(ModeArg::Exact),
            samples: o.samples.unwrap_or(200),
            steps: o.steps.unwrap_or(100),
            sign: match o.sign {
                Some(SignArg::Plus) => CanonicalSign::Plus,
                _ => CanonicalSign::Minus,
            },
            slopes: o.slopes,
            format: o.format.unwrap_or(match cli.command {
                Command::Render => FormatArg::Svg,
                _ => FormatArg::Json,
            }),
            criterion: o.criterion,
        })
    }

    fn need_n(&self) -> Result<usize> {
        self.n.ok_or_else(|| Error::Malformed("--n is required".into()))
    }

    fn rng(&self) -> ChaCha8Rng {
        ChaCha8Rng::seed_from_u64(self.seed)
    }
}

/// What a command produced.
pub struct Outcome {
    pub exit: i32,
    pub body: String,
}

impl Outcome {
    fn json(v: Value, ok: bool) -> Outcome {
        Outcome { exit: if ok { EXIT_OK } else { EXIT_VIOLATED }, body: serde_json::to_string_pretty(&v).unwrap() + "\n" }
    }
}

pub fn exit_code(e: &Error) -> i32 {
    match e {
        Error::BudgetExceeded(_) | Error::CapExceeded { .. } => EXIT_BUDGET,
        Error::Internal(_) => EXIT_VIOLATED,
        _ => EXIT_INPUT,
    }
}

/// Parses arguments, runs the command and writes its output; returns the
/// process exit code.
pub fn main_with_args<I, T>(args: I) -> i32
where
    I: IntoIterator<Item = T>,
    T: Into<std::ffi::OsString> + Clone,
{
    let cli = match Cli::try_parse_from(args) {
        Ok(c) => c,
        Err(e) => {
            let _ = e.print();
            return if e.use_stderr() { EXIT_INPUT } else { EXIT_OK };
        }
    };
    let result = RunConfig::resolve(&cli).and_then(|cfg| {
        if let Some(t) = cfg.threads {
            let _ = rayon::ThreadPoolBuilder::new().num_threads(t).build_global();
        }
        let out = run(&cfg)?;
        match &cfg.out {
            Some(p) => std::fs::write(p, &out.body)?,
            None => print!("{}", out.body),
        }
        Ok(out.exit)
    });
    match result {
        Ok(code) => code,
        Err(e) => {
            eprintln!("error: {e}");
            exit_code(&e)
        }
    }
}

pub fn run(cfg: &RunConfig) -> Result<Outcome> {
    match cfg.command {
        Command::Enumerate | Command::Connectivity | Command::Diameter | Command::Degrees => graph_command(cfg),
        Command::Classify => classify(cfg),
        Command::CylindricalCheck => cylindrical_check(cfg),
        Command::Canonicalize => canonicalize(cfg),
        Command::Cylindrify => cylindrify(cfg),
        Command::PathToShellable => path_to_shellable(cfg),
        Command::Realize => realize_cmd(cfg),
        Command::Feasible => feasible(cfg),
        Command::Interpolate => interpolate(cfg),
        Command::Walk => walk(cfg),
        Command::Render => render(cfg),
        Command::Check => {
            let id = cfg.criterion.ok_or_else(|| Error::Malformed("--criterion is required".into()))?;
            let report = crate::checks::run(id, cfg.seed)?;
            let pass = report.pass;
            Ok(Outcome::json(serde_json::to_value(report)?, pass))
        }
    }
}

fn read(path: &PathBuf) -> Result<Value> {
    Ok(serde_json::from_str(&std::fs::read_to_string(path)?)?)
}

/// A signotope given by `{"n","signs"}` or by a wiring diagram `{"n","word"}`.
pub fn signotope_from_value(v: Value) -> Result<Signotope> {
    if v.get("word").is_some() {
        let w: WiringDiagram = serde_json::from_value(v)?;
        signotope::wiring_to_signotope(&w)
    } else {
        Ok(serde_json::from_value(v)?)
    }
}

/// An arrangement given by the arrangement codec or by a cylindrical
/// diagram `{"n","word"}`.
pub fn arrangement_from_value(v: Value) -> Result<PlanarArrangement> {
    if v.get("word").is_some() {
        let d: CylindricalDiagram = serde_json::from_value(v)?;
        d.to_planar()
    } else {
        PlanarArrangement::from_json(&v.to_string())
    }
}

fn fixture(f: FixtureArg) -> PlanarArrangement {
    match f {
        FixtureArg::TwoCircles => fixtures::two_circles(),
        FixtureArg::Krupp => fixtures::krupp(),
        FixtureArg::Nonkrupp2 => fixtures::nonkrupp(2),
        FixtureArg::Nonkrupp3 => fixtures::nonkrupp(3),
        FixtureArg::Nonkrupp4 => fixtures::nonkrupp(4),
    }
}

fn input_signotope(cfg: &RunConfig) -> Result<Signotope> {
    match &cfg.input {
        Some(p) => signotope_from_value(read(p)?),
        None => {
            let n = cfg.need_n()?;
            Ok(signotope::random_signotope(&Signotope::all_plus(n)?, cfg.steps, &mut cfg.rng()))
        }
    }
}

fn input_arrangement(cfg: &RunConfig) -> Result<PlanarArrangement> {
    if let Some(f) = cfg.fixture {
        return Ok(fixture(f));
    }
    match &cfg.input {
        Some(p) => arrangement_from_value(read(p)?),
        None => {
            let n = cfg.need_n()?;
            let start = cylinder::canonical_diagram(n, CanonicalSign::Minus).to_planar()?;
            Ok(pcircle::random_flips(&start, cfg.steps, &mut cfg.rng()))
        }
    }
}

fn input_diagram(cfg: &RunConfig) -> Result<CylindricalDiagram> {
    match &cfg.input {
        Some(p) => Ok(serde_json::from_value(read(p)?)?),
        None => Ok(cylinder::random_diagram(cfg.need_n()?, cfg.steps, &mut cfg.rng())),
    }
}

fn slopes(cfg: &RunConfig, n: usize) -> Result<SlopeVector> {
    let v = match &cfg.slopes {
        Some(s) => SlopeVector::parse(&s.split(',').map(str::trim).collect::<Vec<_>>())?,
        None => SlopeVector::standard(n),
    };
    if v.len() != n {
        return Err(Error::InvalidSlopes(format!("{} slopes for {n} lines", v.len())));
    }
    Ok(v)
}

pub fn triple_flip_json(t: Triple) -> Value {
    json!({"kind": "triple", "participants": t})
}

pub fn triangle_flip_json(f: &TriangleFlip) -> Value {
    json!({"kind": "triangle", "participants": f.vertices})
}

pub fn diagram_flip_json(t: &DiagramTriangle) -> Value {
    let p: Vec<[usize; 3]> =
        t.crossings.iter().map(|x| [x.lo + 1, x.hi + 1, x.occurrence as usize + 1]).collect();
    json!({"kind": "diagram-triangle", "participants": p})
}

/// The flip graph of pseudocircle arrangements up to relabeling, seeded at
/// the canonical cylindrical arrangement; `cylindrical_only` keeps the
/// closure inside cylindrical arrangements.
pub fn explore_pseudocircles(n: usize, cylindrical_only: bool, limit: Option<usize>) -> Result<FlipGraph<PlanarArrangement>> {
    if !(2..=8).contains(&n) {
        return Err(Error::OutOfRange(format!("pseudocircle enumeration needs 2 <= n <= 8, got {n}")));
    }
    let seed = cylinder::canonical_diagram(n, CanonicalSign::Minus).to_planar()?;
    let family = if cylindrical_only { Family::CylindricalDiagram } else { Family::PlanarPseudocircle };
    Ok(explore(
        family,
        n,
        seed,
        PlanarArrangement::canonical_code,
        move |a: &PlanarArrangement| {
            let mut next = a.neighbors();
            if cylindrical_only {
                next.retain(PlanarArrangement::is_cylindrical);
            }
            next
        },
        limit,
    ))
}

fn graph_command(cfg: &RunConfig) -> Result<Outcome> {
    let n = cfg.need_n()?;
    let limit = Some(cfg.budget);
    match cfg.family {
        FamilyArg::Pseudoline => graph_report(cfg, &explore_signotopes(n, limit)?),
        FamilyArg::Pseudocircle => graph_report(cfg, &explore_pseudocircles(n, false, limit)?),
        FamilyArg::Cylindrical => graph_report(cfg, &explore_pseudocircles(n, true, limit)?),
    }
}

fn graph_report<S: Sync>(cfg: &RunConfig, g: &FlipGraph<S>) -> Result<Outcome> {
    let base = json!({"family": g.family().tag(), "n": g.n()});
    let with = |extra: Value| {
        let mut v = base.clone();
        v.as_object_mut().unwrap().extend(extra.as_object().unwrap().clone());
        v
    };
    if cfg.command == Command::Enumerate {
        if cfg.format == FormatArg::Dot {
            return Ok(Outcome { exit: if g.is_truncated() { EXIT_BUDGET } else { EXIT_OK }, body: g.to_dot() });
        }
        let out = Outcome::json(
            with(json!({"vertices": g.len(), "edges": g.edge_count(), "truncated": g.is_truncated()})),
            true,
        );
        return Ok(Outcome { exit: if g.is_truncated() { EXIT_BUDGET } else { EXIT_OK }, ..out });
    }
    if g.is_truncated() {
        return Err(Error::BudgetExceeded(format!("flip graph has more than {} vertices", cfg.budget)));
    }
    let v = match cfg.command {
        Command::Degrees => {
            let d = g.degree_stats();
            with(json!({"vertices": g.len(), "min": d.min, "max": d.max, "histogram": d.histogram}))
        }
        Command::Diameter => {
            let d = g.diameter(cfg.budget)?;
            with(json!({"vertices": g.len(), "diameter": d.value, "witness": [d.witness.0, d.witness.1]}))
        }
        _ => {
            let mode = match cfg.mode {
                ModeArg::Exact => ConnectivityMode::Exact,
                ModeArg::Sampled => ConnectivityMode::Sampled { pairs: cfg.samples, seed: cfg.seed },
            };
            let c = g.vertex_connectivity(mode);
            with(json!({
                "vertices": g.len(),
                "connectivity": c.value,
                "exact": c.exact,
                "witness": c.witness.map(|(a, b)| [a, b]),
                "pairs_checked": c.pairs_checked,
            }))
        }
    };
    if cfg.format == FormatArg::Text {
        let key = match cfg.command {
            Command::Degrees => "min",
            Command::Diameter => "diameter",
            _ => "connectivity",
        };
        return Ok(Outcome { exit: EXIT_OK, body: format!("{}\n", v[key]) });
    }
    Ok(Outcome::json(v, true))
}

fn classify(cfg: &RunConfig) -> Result<Outcome> {
    let a = input_arrangement(cfg)?;
    let triples: Vec<Value> = a
        .triple_classes()
        .into_iter()
        .map(|(t, c)| json!({"circles": t.map(|x| x + 1), "class": c.to_string()}))
        .collect();
    let mut counts = std::collections::BTreeMap::<String, usize>::new();
    for t in &triples {
        *counts.entry(t["class"].as_str().unwrap().to_string()).or_default() += 1;
    }
    Ok(Outcome::json(json!({"n": a.n(), "triples": triples, "counts": counts}), true))
}

fn cylindrical_check(cfg: &RunConfig) -> Result<Outcome> {
    let a = input_arrangement(cfg)?;
    let c = a.cylindricity();
    Ok(Outcome::json(
        json!({
            "n": a.n(),
            "has_center": c.has_center,
            "no_nonkrupp3": c.no_nonkrupp3,
            "no_clockwise_cell": c.no_clockwise_cell,
            "unbounded_eccentricity_is_n": c.unbounded_eccentricity_is_n,
            "agree": c.agree(),
        }),
        c.agree(),
    ))
}

fn canonicalize(cfg: &RunConfig) -> Result<Outcome> {
    let d = input_diagram(cfg)?;
    let (flips, end) = cylinder::flip_to_canonical(&d, cfg.sign)?;
    let bound = 2 * binomial(d.n(), 3);
    let within = flips.len() <= bound;
    Ok(Outcome::json(
        json!({
            "n": d.n(),
            "sign": if cfg.sign == CanonicalSign::Plus { "plus" } else { "minus" },
            "flips": flips.len(),
            "bound": bound,
            "within_bound": within,
            "sequence": flips.iter().map(diagram_flip_json).collect::<Vec<_>>(),
            "result": end,
        }),
        within || cfg.sign == CanonicalSign::Plus,
    ))
}

fn cylindrify(cfg: &RunConfig) -> Result<Outcome> {
    let a = input_arrangement(cfg)?;
    let run = cylinder::cylindrify(&a)?;
    let ok = run.result.is_cylindrical();
    Ok(Outcome::json(
        json!({
            "n": a.n(),
            "flips": run.flips.len(),
            "sequence": run.flips.iter().map(triangle_flip_json).collect::<Vec<_>>(),
            "cylindrical": ok,
            "result": run.result,
        }),
        ok,
    ))
}

fn path_to_shellable(cfg: &RunConfig) -> Result<Outcome> {
    let s = input_signotope(cfg)?;
    let mut rng = cfg.rng();
    let (target, seq) = match &cfg.target {
        Some(p) => {
            let t = signotope_from_value(read(p)?)?;
            let seq = shelling::shelling_sequence(&t).ok_or(Error::NotShellable)?;
            (t, seq)
        }
        None => crate::checks::random_shellable(s.n(), &mut rng)?,
    };
    if target.n() != s.n() {
        return Err(Error::Malformed("source and target sizes differ".into()));
    }
    let flips = shelling::path_to_shellable(&s, &target, &seq)?;
    let hamming = s.hamming_distance(&target);
    let mut seen = std::collections::HashSet::new();
    let repeated = !flips.iter().all(|t| seen.insert(*t));
    let ok = !repeated && flips.len() == hamming;
    Ok(Outcome::json(
        json!({
            "n": s.n(),
            "length": flips.len(),
            "hamming": hamming,
            "repeated_triple": repeated,
            "target": target,
            "sequence": flips.iter().map(|&t| triple_flip_json(t)).collect::<Vec<_>>(),
        }),
        ok,
    ))
}

fn realize_cmd(cfg: &RunConfig) -> Result<Outcome> {
    let s = input_signotope(cfg)?;
    let slopes = slopes(cfg, s.n())?;
    match realize::realize_shellable(&s, None, &slopes) {
        Ok(a) => Ok(Outcome::json(json!({"shellable": true, "arrangement": a}), true)),
        Err(Error::NotShellable) => Ok(Outcome::json(json!({"shellable": false, "arrangement": null}), false)),
        Err(e) => Err(e),
    }
}

fn feasible(cfg: &RunConfig) -> Result<Outcome> {
    let s = input_signotope(cfg)?;
    let slopes = slopes(cfg, s.n())?;
    let w = realize::slope_feasibility(&s, &slopes)?;
    let ok = w.is_some();
    Ok(Outcome::json(json!({"feasible": ok, "witness": w}), ok))
}

#[derive(Deserialize)]
struct MotionInput {
    from: LineArrangement,
    to: LineArrangement,
}

fn interpolate(cfg: &RunConfig) -> Result<Outcome> {
    let (from, to) = match (&cfg.input, &cfg.target) {
        (Some(a), Some(b)) => (serde_json::from_value(read(a)?)?, serde_json::from_value(read(b)?)?),
        (Some(a), None) => {
            let m: MotionInput = serde_json::from_value(read(a)?)?;
            (m.from, m.to)
        }
        _ => return Err(Error::Malformed("--input (and optionally --target) required".into())),
    };
    let m = realize::interpolate_motion(&from, &to)?;
    let events: Vec<Value> =
        m.events.iter().map(|e| json!({"time": e.time.to_string(), "triple": e.triple})).collect();
    Ok(Outcome::json(
        json!({
            "events": events,
            "intermediate_types": m.intermediate_types,
            "verdict": m.verdict,
            "flips_at_most_once": m.flips_at_most_once,
        }),
        m.verdict && m.flips_at_most_once,
    ))
}

fn walk(cfg: &RunConfig) -> Result<Outcome> {
    let n = cfg.need_n()?;
    let steps = cfg.steps;
    let (distinct, end) = match cfg.family {
        FamilyArg::Pseudoline => {
            let path = crate::graph::random_walk(&Signotope::all_plus(n)?, Signotope::neighbors, steps, cfg.seed);
            let distinct: std::collections::HashSet<Vec<u8>> = path.iter().map(Signotope::encode).collect();
            (distinct.len(), serde_json::to_value(path.last().unwrap())?)
        }
        FamilyArg::Pseudocircle | FamilyArg::Cylindrical => {
            let start = cylinder::canonical_diagram(n, CanonicalSign::Minus).to_planar()?;
            let only = cfg.family == FamilyArg::Cylindrical;
            let path = crate::graph::random_walk(
                &start,
                |a: &PlanarArrangement| {
                    let mut next = a.neighbors();
                    if only {
                        next.retain(PlanarArrangement::is_cylindrical);
                    }
                    next
                },
                steps,
                cfg.seed,
            );
            let distinct: std::collections::HashSet<Vec<u8>> = path.iter().map(|a| a.canonical_code()).collect();
            (distinct.len(), serde_json::to_value(path.last().unwrap())?)
        }
    };
    Ok(Outcome::json(json!({"n": n, "steps": steps, "distinct_states": distinct, "end": end}), true))
}

fn render(cfg: &RunConfig) -> Result<Outcome> {
    if cfg.format != FormatArg::Svg {
        return Err(Error::Malformed("render only writes svg".into()));
    }
    let body = match cfg.family {
        FamilyArg::Pseudoline => {
            let w = signotope::signotope_to_wiring(&input_signotope(cfg)?);
            svg::wiring_svg(w.n(), w.word())
        }
        FamilyArg::Cylindrical if cfg.fixture.is_none() => svg::cylindrical_svg(&input_diagram(cfg)?),
        _ => svg::arrangement_svg(&input_arrangement(cfg)?),
    };
    Ok(Outcome { exit: EXIT_OK, body })
}
