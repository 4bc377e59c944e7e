//! Seeded samplers: random maximal 𝓕-free hypergraphs and simulated annealing.

use std::collections::BTreeSet;

use rand::seq::SliceRandom;
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;
use rayon::prelude::*;
use serde::{Deserialize, Serialize};

use crate::density::DensityPoint;
use crate::error::{Error, Result};
use crate::families::{FreeTracker, ForbiddenFamily};
use crate::hypergraph::{binomial, Hypergraph};

use super::space::{EdgeSpace, ShadowCounter};
use super::{Budget, SearchConfig};

/// Seed of sample `index`; one stream per sample keeps results independent of thread count.
pub fn sample_seed(seed: u64, index: usize) -> u64 {
    seed ^ index as u64
}

fn maximal(space: &EdgeSpace, family: ForbiddenFamily, seed: u64) -> Result<Hypergraph> {
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    let mut order: Vec<usize> = (0..space.len()).collect();
    order.shuffle(&mut rng);
    let mut t = FreeTracker::new(space.n, space.r, family)?;
    for j in order {
        t.try_insert(space.edges[j].clone())?;
    }
    Ok(t.hypergraph().clone())
}

pub(crate) fn maximal_samples(
    space: &EdgeSpace,
    family: ForbiddenFamily,
    cfg: &SearchConfig,
    budget: &Budget,
) -> Result<Vec<Hypergraph>> {
    let out: Vec<Option<Result<Hypergraph>>> = (0..cfg.samples)
        .into_par_iter()
        .map(|i| budget.allow().then(|| maximal(space, family, sample_seed(cfg.seed, i))))
        .collect();
    out.into_iter().flatten().collect()
}

/// `cfg.samples` maximal 𝓕-free hypergraphs, each grown by inserting edges
/// in a seeded random order and skipping insertions that create a member.
pub fn random_maximal_hypergraphs(
    n: usize,
    r: usize,
    family: ForbiddenFamily,
    cfg: &SearchConfig,
) -> Result<Vec<Hypergraph>> {
    super::check_family(family, r)?;
    let space = EdgeSpace::new(n, r)?;
    let budget = Budget::new(cfg);
    super::in_pool(cfg, || maximal_samples(&space, family, cfg, &budget))?
}

/// Density points of [`random_maximal_hypergraphs`].
pub fn random_maximal_free(
    n: usize,
    r: usize,
    family: ForbiddenFamily,
    cfg: &SearchConfig,
) -> Result<Vec<DensityPoint>> {
    random_maximal_hypergraphs(n, r, family, cfg)?
        .iter()
        .map(|h| DensityPoint::of(h, format!("random-maximal:{family}")))
        .collect()
}

#[derive(Clone, Debug, PartialEq, Serialize, Deserialize)]
pub struct AnnealResult {
    pub target: (f64, f64),
    pub best: Hypergraph,
    pub best_point: DensityPoint,
    /// Euclidean distance from the best point to the target.
    pub distance: f64,
    /// Every `(shadow size, edge count)` pair the chain passed through.
    pub trajectory: BTreeSet<(usize, usize)>,
    pub steps: usize,
    pub rejected: u64,
}

/// Geometric schedule starting temperature.
pub const ANNEAL_T0: f64 = 1.0;
pub const ANNEAL_RATIO: f64 = 0.999;

pub(crate) fn anneal_in(
    space: &EdgeSpace,
    family: ForbiddenFamily,
    target: (f64, f64),
    cfg: &SearchConfig,
    budget: &Budget,
) -> Result<AnnealResult> {
    let (tx, ty) = target;
    if !(0.0..=1.0).contains(&tx) || !(0.0..=1.0).contains(&ty) {
        return Err(Error::InvalidParameters(format!(
            "anneal target ({tx}, {ty}) must lie in [0, 1]^2"
        )));
    }
    let shadow_total = binomial(space.n, space.r - 1) as f64;
    let edge_total = space.len() as f64;
    let energy = |s: usize, m: usize| {
        let dx = s as f64 / shadow_total - tx;
        let dy = m as f64 / edge_total - ty;
        dx * dx + dy * dy
    };
    let mut rng = ChaCha8Rng::seed_from_u64(cfg.seed);
    let mut present = vec![false; space.len()];
    let mut count = 0usize;
    let mut shadow = ShadowCounter::new(space);
    let mut tracker = FreeTracker::new(space.n, space.r, family)?;
    let mut current = energy(0, 0);
    let mut best = (current, Vec::<u32>::new());
    let mut trajectory = BTreeSet::from([(0, 0)]);
    let mut temp = ANNEAL_T0;
    let mut rejected = 0;
    let mut steps = 0;
    for _ in 0..cfg.anneal_steps {
        if !budget.allow() {
            break;
        }
        steps += 1;
        let j = rng.gen_range(0..space.len());
        let e = &space.edges[j];
        let adding = !present[j];
        if adding && tracker.would_create(e) {
            rejected += 1;
            temp *= ANNEAL_RATIO;
            continue;
        }
        if adding {
            shadow.add(space, j as u32);
        } else {
            shadow.remove(space, j as u32);
        }
        let next_count = if adding { count + 1 } else { count - 1 };
        let next = energy(shadow.size, next_count);
        let accept = next <= current || rng.gen::<f64>() < ((current - next) / temp).exp();
        if accept {
            present[j] = adding;
            count = next_count;
            current = next;
            if adding {
                tracker.insert_unchecked(e.clone())?;
            } else {
                tracker.remove(e);
            }
            trajectory.insert((shadow.size, count));
            if current < best.0 {
                let picked = (0..space.len() as u32).filter(|&i| present[i as usize]).collect();
                best = (current, picked);
            }
        } else {
            rejected += 1;
            if adding {
                shadow.remove(space, j as u32);
            } else {
                shadow.add(space, j as u32);
            }
        }
        temp *= ANNEAL_RATIO;
    }
    let h = space.hypergraph(&best.1);
    Ok(AnnealResult {
        target,
        best_point: DensityPoint::of(&h, format!("anneal:{family}"))?,
        best: h,
        distance: best.0.sqrt(),
        trajectory,
        steps,
        rejected,
    })
}

/// Simulated annealing toward the density point `target` with random edge
/// flips that keep the hypergraph 𝓕-free.
pub fn anneal(
    n: usize,
    r: usize,
    family: ForbiddenFamily,
    target: (f64, f64),
    cfg: &SearchConfig,
) -> Result<AnnealResult> {
    super::check_family(family, r)?;
    let space = EdgeSpace::new(n, r)?;
    anneal_in(&space, family, target, cfg, &Budget::new(cfg))
}
