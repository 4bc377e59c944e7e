//! Shadow-preserving edge removal down to a density threshold.

use std::collections::HashMap;

use serde::{Deserialize, Serialize};

use crate::density::to_f64;
use crate::error::{Error, Result};
use crate::hypergraph::{binomial, Hypergraph};
use crate::vset::VertexSet;

#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize, Deserialize)]
#[serde(rename_all = "snake_case")]
pub enum Guard {
    /// `d(H) <= d` already.
    Density,
    /// `|H| <= C(n, r-1)`.
    Size,
}

#[derive(Clone, Debug, PartialEq, Serialize, Deserialize)]
#[serde(rename_all = "snake_case", tag = "branch")]
pub enum Reduction {
    Unchanged { guard: Guard },
    /// Removed `removed` edges in order and landed in the density window.
    Reduced { removed: Vec<Vec<usize>> },
    /// No edge had all its `(r-1)`-subsets covered twice before the window was reached.
    Stuck { removed: Vec<Vec<usize>> },
}

#[derive(Clone, Debug, PartialEq, Serialize, Deserialize)]
pub struct ReduceResult {
    pub hypergraph: Hypergraph,
    pub branch: Reduction,
}

/// Edge-count target: the largest `m` with `m / C(n, r) <= d`.
fn target_edges(total: u128, d: f64) -> usize {
    let fits = |m: u128| m as f64 / total as f64 <= d;
    let mut m = (d * total as f64).floor() as u128;
    while m < total && fits(m + 1) {
        m += 1;
    }
    while m > 0 && !fits(m) {
        m -= 1;
    }
    m as usize
}

/// Removes, one at a time, the lexicographically smallest edge whose every
/// `(r-1)`-subset is covered by another edge, until `d(H') <= d`.
pub fn algorithm1_run(h: &Hypergraph, d: f64) -> Result<ReduceResult> {
    if !(0.0..=1.0).contains(&d) {
        return Err(Error::InvalidParameters(format!("threshold d = {d} must lie in [0, 1]")));
    }
    let total = binomial(h.n(), h.r());
    if h.r() < 2 || total == 0 {
        return Err(Error::DensityUndefined { n: h.n(), need: h.r() });
    }
    let unchanged = |guard| ReduceResult {
        hypergraph: h.clone(),
        branch: Reduction::Unchanged { guard },
    };
    let target = target_edges(total, d);
    if h.len() <= target {
        return Ok(unchanged(Guard::Density));
    }
    if h.len() as u128 <= binomial(h.n(), h.r() - 1) {
        return Ok(unchanged(Guard::Size));
    }
    let mut cover: HashMap<VertexSet, u32> = HashMap::new();
    for e in h.edges() {
        for s in e.subsets(h.r() - 1) {
            *cover.entry(s).or_insert(0) += 1;
        }
    }
    let mut out = h.clone();
    let mut removed = Vec::new();
    while out.len() > target {
        let victim = out
            .edges()
            .find(|e| e.subsets(h.r() - 1).iter().all(|s| cover[s] >= 2))
            .cloned();
        let Some(e) = victim else {
            return Ok(ReduceResult {
                hypergraph: out,
                branch: Reduction::Stuck { removed },
            });
        };
        for s in e.subsets(h.r() - 1) {
            *cover.get_mut(&s).expect("covered") -= 1;
        }
        out.remove_edge(&e);
        removed.push(e.to_vec());
    }
    Ok(ReduceResult {
        hypergraph: out,
        branch: Reduction::Reduced { removed },
    })
}

/// [`algorithm1_run`] without the bookkeeping.
pub fn algorithm1_reduce(h: &Hypergraph, d: f64) -> Result<Hypergraph> {
    Ok(algorithm1_run(h, d)?.hypergraph)
}

/// Whether `h'` lies in the window `d - 1/C(n,r) < d(h') <= d`.
pub fn in_window(h: &Hypergraph, d: f64) -> Result<bool> {
    let y = to_f64(&h.edge_density()?);
    let step = 1.0 / binomial(h.n(), h.r()) as f64;
    Ok(d - step < y + 1e-15 && y <= d + 1e-15)
}
