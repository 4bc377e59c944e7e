//! Search over 𝓕-free hypergraphs at small `n`.
//!
//! Exact enumeration walks edge subsets depth-first in colex order and cuts
//! every branch whose partial hypergraph already contains a member of the
//! family (containment is monotone). Subtrees below a split depth run on a
//! rayon pool; per-subtree tallies merge commutatively, so reports do not
//! depend on the thread count. With isomorphism reduction the search runs
//! level by level over canonical forms instead.
//!
//! Points in a report are attainable at the given `n`; they say nothing
//! about membership in the limit region.

mod algorithm1;
mod branch;
pub mod canon;
mod enumerate;
mod sample;
mod space;

use std::collections::BTreeMap;
use std::fmt;
use std::path::{Path, PathBuf};
use std::str::FromStr;
use std::sync::atomic::{AtomicBool, AtomicU64, Ordering};
use std::time::{Duration, Instant};

use serde::{Deserialize, Serialize};

use crate::density::{exact_densities, fraction, to_f64};
use crate::error::{Error, Result};
use crate::families::ForbiddenFamily;
use crate::hypergraph::{binomial, Hypergraph};
use crate::io;

pub use algorithm1::{algorithm1_reduce, algorithm1_run, in_window, Guard, ReduceResult, Reduction};
pub use branch::{max_edges_given_shadow, ShadowOutcome, ShadowSearch};
pub use canon::{canonical_form, is_isomorphic, Canonizer};
pub use enumerate::Node;
pub use sample::{
    anneal, random_maximal_free, random_maximal_hypergraphs, sample_seed, AnnealResult,
    ANNEAL_RATIO, ANNEAL_T0,
};

use space::EdgeSpace;

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, Serialize, Deserialize)]
#[serde(rename_all = "kebab-case")]
pub enum Mode {
    ExactEnumerate,
    BranchBound,
    RandomMaximal,
    Anneal,
}

impl Mode {
    pub fn is_stochastic(&self) -> bool {
        matches!(self, Mode::RandomMaximal | Mode::Anneal)
    }
}

impl fmt::Display for Mode {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(match self {
            Mode::ExactEnumerate => "exact-enumerate",
            Mode::BranchBound => "branch-bound",
            Mode::RandomMaximal => "random-maximal",
            Mode::Anneal => "anneal",
        })
    }
}

impl FromStr for Mode {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        Ok(match s {
            "exact-enumerate" | "exact" => Mode::ExactEnumerate,
            "branch-bound" => Mode::BranchBound,
            "random-maximal" | "random" => Mode::RandomMaximal,
            "anneal" => Mode::Anneal,
            _ => {
                return Err(Error::Parse {
                    pos: 0,
                    msg: format!(
                        "unknown mode `{s}` (expected exact-enumerate, branch-bound, random-maximal or anneal)"
                    ),
                })
            }
        })
    }
}

#[derive(Clone, Debug, PartialEq)]
pub struct SearchConfig {
    pub mode: Mode,
    pub iso_reduction: bool,
    /// Used by stochastic modes only.
    pub seed: u64,
    pub budget_nodes: Option<u64>,
    pub budget_secs: Option<f64>,
    /// Worker threads; 0 means available parallelism.
    pub threads: usize,
    /// Edge decisions made serially before subtrees go to workers.
    pub split_depth: usize,
    pub samples: usize,
    pub anneal_steps: usize,
    pub target: Option<(f64, f64)>,
}

impl Default for SearchConfig {
    fn default() -> Self {
        SearchConfig {
            mode: Mode::ExactEnumerate,
            iso_reduction: false,
            seed: 0,
            budget_nodes: None,
            budget_secs: None,
            threads: 0,
            split_depth: 2,
            samples: 100,
            anneal_steps: 100_000,
            target: None,
        }
    }
}

impl SearchConfig {
    pub fn exact() -> Self {
        Self::default()
    }

    pub fn with_mode(mode: Mode) -> Self {
        SearchConfig {
            mode,
            ..Self::default()
        }
    }
}

/// Node and time limits shared by all workers of one search.
#[derive(Debug)]
pub(crate) struct Budget {
    nodes: Option<u64>,
    deadline: Option<Instant>,
    used: AtomicU64,
    out: AtomicBool,
}

impl Budget {
    pub fn new(cfg: &SearchConfig) -> Self {
        Budget {
            nodes: cfg.budget_nodes,
            deadline: cfg
                .budget_secs
                .map(|s| Instant::now() + Duration::from_secs_f64(s.max(0.0))),
            used: AtomicU64::new(0),
            out: AtomicBool::new(false),
        }
    }

    /// Claims one node; `false` once either limit is hit.
    pub fn allow(&self) -> bool {
        if self.exhausted() {
            return false;
        }
        let used = self.used.fetch_add(1, Ordering::Relaxed) + 1;
        let over_nodes = self.nodes.is_some_and(|b| used > b);
        let over_time = used % 256 == 0 && self.deadline.is_some_and(|d| Instant::now() >= d);
        if over_nodes || over_time {
            self.out.store(true, Ordering::Relaxed);
            return false;
        }
        true
    }

    pub fn exhausted(&self) -> bool {
        self.out.load(Ordering::Relaxed)
    }
}

#[derive(Clone, Debug, Default, PartialEq, Serialize, Deserialize)]
pub struct SearchStats {
    /// Nodes expanded (hypergraphs, classes or samples, depending on mode).
    pub visited: u64,
    /// Candidate extensions cut because they create a family member or cannot beat the bound.
    pub pruned: u64,
    /// A budget ran out; results cover only part of the search space.
    pub partial: bool,
    /// Left out of serialized reports so they stay byte-identical.
    #[serde(skip)]
    pub wall_secs: f64,
}

#[derive(Clone, Debug, PartialEq, Serialize, Deserialize)]
pub struct ReportPoint {
    pub shadow_size: usize,
    pub edge_count: usize,
    /// Exact `p/q` densities.
    pub x: String,
    pub y: String,
    pub x_decimal: f64,
    pub y_decimal: f64,
}

#[derive(Clone, Debug, PartialEq, Serialize, Deserialize)]
pub struct Extremal {
    pub max_edges: usize,
    pub witness: Hypergraph,
}

#[derive(Clone, Debug, PartialEq, Serialize, Deserialize)]
pub struct ExploreReport {
    pub family: ForbiddenFamily,
    pub n: usize,
    pub r: usize,
    pub mode: Mode,
    pub iso_reduction: bool,
    /// Present for stochastic modes only.
    pub seed: Option<u64>,
    /// Always `"finite-n attainable"`.
    pub points_status: String,
    /// Attained `(shadow, edges)` pairs, sorted.
    pub points: Vec<ReportPoint>,
    /// Shadow size -> largest edge count seen and a witness.
    pub extremal: BTreeMap<usize, Extremal>,
    pub stats: SearchStats,
}

pub const POINTS_STATUS: &str = "finite-n attainable";

impl ExploreReport {
    fn new(n: usize, r: usize, family: ForbiddenFamily, cfg: &SearchConfig) -> Self {
        ExploreReport {
            family,
            n,
            r,
            mode: cfg.mode,
            iso_reduction: cfg.iso_reduction && cfg.mode == Mode::ExactEnumerate,
            seed: cfg.mode.is_stochastic().then_some(cfg.seed),
            points_status: POINTS_STATUS.into(),
            points: Vec::new(),
            extremal: BTreeMap::new(),
            stats: SearchStats::default(),
        }
    }

    fn point(&self, shadow_size: usize, edge_count: usize) -> ReportPoint {
        let (x, y) = exact_densities(self.n, self.r, shadow_size, edge_count);
        ReportPoint {
            shadow_size,
            edge_count,
            x: fraction(&x),
            y: fraction(&y),
            x_decimal: to_f64(&x),
            y_decimal: to_f64(&y),
        }
    }

    /// Largest edge count over all shadow sizes.
    pub fn max_edges(&self) -> Option<usize> {
        self.extremal.values().map(|e| e.max_edges).max()
    }

    /// Witness of [`Self::max_edges`] with the smallest shadow size.
    pub fn overall_witness(&self) -> Option<&Hypergraph> {
        let best = self.max_edges()?;
        self.extremal.values().find(|e| e.max_edges == best).map(|e| &e.witness)
    }

    pub fn to_json(&self) -> String {
        let mut s = serde_json::to_string_pretty(self).expect("report serialization is infallible");
        s.push('\n');
        s
    }

    pub fn points_csv(&self) -> Result<String> {
        let mut w = csv::Writer::from_writer(Vec::new());
        w.write_record(["n", "r", "family", "shadow_size", "edge_count", "x", "y", "x_decimal", "y_decimal"])?;
        let family = self.family.to_string();
        for p in &self.points {
            w.write_record([
                self.n.to_string(),
                self.r.to_string(),
                family.clone(),
                p.shadow_size.to_string(),
                p.edge_count.to_string(),
                p.x.clone(),
                p.y.clone(),
                p.x_decimal.to_string(),
                p.y_decimal.to_string(),
            ])?;
        }
        csv_string(w)
    }

    pub fn extremal_csv(&self) -> Result<String> {
        let mut w = csv::Writer::from_writer(Vec::new());
        w.write_record(["shadow_size", "max_edges", "witness_id"])?;
        for (s, e) in &self.extremal {
            w.write_record([s.to_string(), e.max_edges.to_string(), witness_id(*s)])?;
        }
        csv_string(w)
    }

    /// Writes `report.json`, `points.csv`, `extremal.csv` and
    /// `witnesses/<id>.json` under `dir`; returns the paths written.
    pub fn write_dir(&self, dir: &Path) -> Result<Vec<PathBuf>> {
        std::fs::create_dir_all(dir.join("witnesses"))?;
        let mut written = Vec::new();
        let mut put = |path: PathBuf, body: String| -> Result<()> {
            std::fs::write(&path, body)?;
            written.push(path);
            Ok(())
        };
        put(dir.join("report.json"), self.to_json())?;
        put(dir.join("points.csv"), self.points_csv()?)?;
        put(dir.join("extremal.csv"), self.extremal_csv()?)?;
        for (s, e) in &self.extremal {
            put(
                dir.join("witnesses").join(format!("{}.json", witness_id(*s))),
                io::to_json(&e.witness),
            )?;
        }
        Ok(written)
    }
}

pub fn witness_id(shadow_size: usize) -> String {
    format!("s{shadow_size}")
}

fn csv_string(w: csv::Writer<Vec<u8>>) -> Result<String> {
    let bytes = w.into_inner().map_err(|e| Error::Io(e.into_error()))?;
    Ok(String::from_utf8(bytes).expect("csv output is utf-8"))
}

pub(crate) fn check_family(family: ForbiddenFamily, r: usize) -> Result<()> {
    family.validate()?;
    match family.uniformity() {
        Some(fr) if fr != r => Err(Error::InvalidParameters(format!(
            "family {family} is {fr}-uniform, search asked for r = {r}"
        ))),
        _ => Ok(()),
    }
}

pub(crate) fn in_pool<T: Send>(cfg: &SearchConfig, f: impl FnOnce() -> T + Send) -> Result<T> {
    let pool = rayon::ThreadPoolBuilder::new()
        .num_threads(cfg.threads)
        .build()
        .map_err(|e| Error::InvalidParameters(format!("thread pool: {e}")))?;
    Ok(pool.install(f))
}

fn finish(
    mut report: ExploreReport,
    space: &EdgeSpace,
    tally: enumerate::Tally,
    iso: bool,
    budget: &Budget,
) -> ExploreReport {
    report.points = tally.pairs.iter().map(|&(s, m)| report.point(s, m)).collect();
    report.extremal = tally
        .best
        .into_iter()
        .map(|(s, (m, key))| {
            let witness = if iso {
                Hypergraph::from_sets(
                    space.n,
                    space.r,
                    key.iter().map(|&mask| crate::vset::VertexSet::from_mask(mask)),
                )
                .expect("canonical masks are edges")
            } else {
                let picked: Vec<u32> = key.iter().map(|&j| j as u32).collect();
                space.hypergraph(&picked)
            };
            (s, Extremal { max_edges: m, witness })
        })
        .collect();
    report.stats.visited = tally.visited;
    report.stats.pruned = tally.pruned;
    report.stats.partial = budget.exhausted();
    report
}

/// Exact enumeration calling `visit` on every 𝓕-free hypergraph reached
/// (every labelled one, or one per isomorphism class with `iso_reduction`).
/// `visit` may run on several threads at once and in any order.
pub fn for_each_free<V: Fn(&Node) + Sync>(
    n: usize,
    r: usize,
    family: ForbiddenFamily,
    cfg: &SearchConfig,
    visit: V,
) -> Result<ExploreReport> {
    check_family(family, r)?;
    let started = Instant::now();
    let space = EdgeSpace::new(n, r)?;
    let budget = Budget::new(cfg);
    let mut exact = cfg.clone();
    exact.mode = Mode::ExactEnumerate;
    let tally = in_pool(cfg, || {
        if cfg.iso_reduction {
            enumerate::enumerate_iso(&space, family, &budget, &visit)
        } else {
            enumerate::enumerate_plain(&space, family, cfg, &budget, &visit)
        }
    })??;
    let report = ExploreReport::new(n, r, family, &exact);
    let mut report = finish(report, &space, tally, cfg.iso_reduction, &budget);
    report.stats.wall_secs = started.elapsed().as_secs_f64();
    Ok(report)
}

/// Exact enumeration of 𝓕-free `r`-graphs on `n` vertices.
pub fn enumerate_free(n: usize, r: usize, family: ForbiddenFamily, cfg: &SearchConfig) -> Result<ExploreReport> {
    for_each_free(n, r, family, cfg, |_| {})
}

/// Point cloud in the mode selected by `cfg`: exact enumeration, one
/// branch-and-bound run per shadow size, random maximal samples, or the
/// states visited by an annealing chain. Witnesses are kept for the largest
/// edge count at each shadow size.
pub fn point_cloud(n: usize, r: usize, family: ForbiddenFamily, cfg: &SearchConfig) -> Result<ExploreReport> {
    match cfg.mode {
        Mode::ExactEnumerate => enumerate_free(n, r, family, cfg),
        Mode::BranchBound => branch_bound_cloud(n, r, family, cfg),
        Mode::RandomMaximal | Mode::Anneal => sampled_cloud(n, r, family, cfg),
    }
}

fn branch_bound_cloud(n: usize, r: usize, family: ForbiddenFamily, cfg: &SearchConfig) -> Result<ExploreReport> {
    check_family(family, r)?;
    let started = Instant::now();
    let space = EdgeSpace::new(n, r)?;
    let budget = Budget::new(cfg);
    let mut report = ExploreReport::new(n, r, family, cfg);
    let mut points = Vec::new();
    for s in 0..=binomial(n, r - 1) as usize {
        let run = branch::max_edges_in(&space, family, s, &budget)?;
        report.stats.visited += run.stats.visited;
        report.stats.pruned += run.stats.pruned;
        match run.outcome {
            ShadowOutcome::Feasible { max_edges, witness } => {
                points.push(report.point(s, max_edges));
                report.extremal.insert(s, Extremal { max_edges, witness });
            }
            ShadowOutcome::Infeasible => {}
            ShadowOutcome::BudgetExhausted { best } => {
                report.stats.partial = true;
                if let Some(witness) = best {
                    points.push(report.point(s, witness.len()));
                    report.extremal.insert(
                        s,
                        Extremal {
                            max_edges: witness.len(),
                            witness,
                        },
                    );
                }
                break;
            }
        }
    }
    report.points = points;
    report.stats.wall_secs = started.elapsed().as_secs_f64();
    Ok(report)
}

fn sampled_cloud(n: usize, r: usize, family: ForbiddenFamily, cfg: &SearchConfig) -> Result<ExploreReport> {
    check_family(family, r)?;
    let started = Instant::now();
    let space = EdgeSpace::new(n, r)?;
    let budget = Budget::new(cfg);
    let mut tally = enumerate::Tally::default();
    let mut witnesses: BTreeMap<usize, Hypergraph> = BTreeMap::new();
    let mut note = |h: Hypergraph, tally: &mut enumerate::Tally| {
        let s = h.shadow_size();
        let key = h.edge_masks();
        tally.record(s, h.len(), || key.clone());
        if tally.best.get(&s).is_some_and(|(m, k)| *m == h.len() && *k == key) {
            witnesses.insert(s, h);
        }
    };
    if cfg.mode == Mode::Anneal {
        let target = cfg.target.ok_or_else(|| {
            Error::InvalidParameters("anneal mode needs a target point".into())
        })?;
        let run = sample::anneal_in(&space, family, target, cfg, &budget)?;
        tally.pairs.extend(run.trajectory.iter().copied());
        tally.pruned = run.rejected;
        note(run.best, &mut tally);
        tally.visited = run.steps as u64;
    } else {
        let samples = in_pool(cfg, || sample::maximal_samples(&space, family, cfg, &budget))??;
        for h in samples {
            note(h, &mut tally);
        }
    }
    let mut report = ExploreReport::new(n, r, family, cfg);
    report.points = tally.pairs.iter().map(|&(s, m)| report.point(s, m)).collect();
    report.extremal = witnesses
        .into_iter()
        .map(|(s, witness)| {
            (
                s,
                Extremal {
                    max_edges: witness.len(),
                    witness,
                },
            )
        })
        .collect();
    report.stats.visited = tally.visited;
    report.stats.pruned = tally.pruned;
    report.stats.partial = budget.exhausted();
    report.stats.wall_secs = started.elapsed().as_secs_f64();
    Ok(report)
}
