//! Branch-and-bound for the largest 𝓕-free hypergraph with a prescribed shadow size.

use serde::{Deserialize, Serialize};

use crate::bounds::kruskal_katona_max_edges;
use crate::error::{Error, Result};
use crate::families::{FreeTracker, ForbiddenFamily};
use crate::hypergraph::{binomial, Hypergraph};

use super::space::{EdgeSpace, ShadowCounter};
use super::{Budget, SearchConfig, SearchStats};

#[derive(Clone, Debug, PartialEq, Serialize, Deserialize)]
#[serde(rename_all = "snake_case", tag = "status")]
pub enum ShadowOutcome {
    /// Optimum proved.
    Feasible { max_edges: usize, witness: Hypergraph },
    /// No 𝓕-free hypergraph has exactly this shadow size.
    Infeasible,
    /// Budget ran out; `best` is the best hypergraph found so far, if any.
    BudgetExhausted { best: Option<Hypergraph> },
}

#[derive(Clone, Debug, PartialEq, Serialize, Deserialize)]
pub struct ShadowSearch {
    pub shadow_size: usize,
    pub outcome: ShadowOutcome,
    pub stats: SearchStats,
}

struct Bnb<'a> {
    space: &'a EdgeSpace,
    budget: &'a Budget,
    target: usize,
    /// Kruskal–Katona cap; reaching it ends the search.
    cap: usize,
    picked: Vec<u32>,
    shadow: ShadowCounter,
    tracker: Option<FreeTracker>,
    best: Option<Vec<u32>>,
    visited: u64,
    pruned: u64,
}

impl Bnb<'_> {
    fn best_len(&self) -> Option<usize> {
        self.best.as_ref().map(Vec::len)
    }

    fn done(&self) -> bool {
        self.best_len() == Some(self.cap) || self.budget.exhausted()
    }

    fn search(&mut self) {
        if !self.budget.allow() {
            return;
        }
        self.visited += 1;
        let m = self.picked.len();
        if self.shadow.size == self.target && self.best_len().map_or(true, |b| m > b) {
            self.best = Some(self.picked.clone());
        }
        let start = self.picked.last().map_or(0, |&j| j + 1);
        let room = self.target - self.shadow.size;
        // edges that fit the shadow budget, and the shadow they could still reach
        let mut fits = Vec::new();
        let mut reach = vec![false; self.space.num_subs];
        let mut reachable = 0;
        for j in start..self.space.len() as u32 {
            if self.shadow.fresh(self.space, j) <= room {
                fits.push(j);
                for &s in &self.space.subs[j as usize] {
                    if !self.shadow.is_covered(s) && !reach[s as usize] {
                        reach[s as usize] = true;
                        reachable += 1;
                    }
                }
            }
        }
        if reachable < room {
            self.pruned += 1;
            return;
        }
        let ub = (m + fits.len()).min(self.cap);
        if self.best_len().is_some_and(|b| ub <= b) {
            self.pruned += 1;
            return;
        }
        for j in fits {
            if self.done() {
                return;
            }
            if self
                .tracker
                .as_ref()
                .is_some_and(|t| t.would_create(&self.space.edges[j as usize]))
            {
                self.pruned += 1;
                continue;
            }
            self.picked.push(j);
            self.shadow.add(self.space, j);
            if let Some(t) = &mut self.tracker {
                t.insert_unchecked(self.space.edges[j as usize].clone())
                    .expect("candidate edges are valid");
            }
            self.search();
            self.picked.pop();
            self.shadow.remove(self.space, j);
            if let Some(t) = &mut self.tracker {
                t.remove(&self.space.edges[j as usize]);
            }
        }
    }
}

pub(crate) fn max_edges_in(
    space: &EdgeSpace,
    family: ForbiddenFamily,
    s: usize,
    budget: &Budget,
) -> Result<ShadowSearch> {
    let (n, r) = (space.n, space.r);
    if s as u128 > binomial(n, r - 1) {
        return Err(Error::InvalidParameters(format!(
            "shadow size {s} exceeds C({n}, {})",
            r - 1
        )));
    }
    let cap = if r >= 2 {
        (kruskal_katona_max_edges(s, r, n)? + 1e-9).floor() as usize
    } else {
        space.len()
    };
    let tracker = match family {
        ForbiddenFamily::Empty => None,
        f => Some(FreeTracker::new(n, r, f)?),
    };
    let mut bnb = Bnb {
        space,
        budget,
        target: s,
        cap,
        picked: Vec::new(),
        shadow: ShadowCounter::new(space),
        tracker,
        best: None,
        visited: 0,
        pruned: 0,
    };
    bnb.search();
    let stats = SearchStats {
        visited: bnb.visited,
        pruned: bnb.pruned,
        partial: false,
        wall_secs: 0.0,
    };
    let proved = bnb.best_len() == Some(cap) || !budget.exhausted();
    let outcome = match (bnb.best, proved) {
        (Some(best), true) => ShadowOutcome::Feasible {
            max_edges: best.len(),
            witness: space.hypergraph(&best),
        },
        (None, true) => ShadowOutcome::Infeasible,
        (best, false) => ShadowOutcome::BudgetExhausted {
            best: best.map(|b| space.hypergraph(&b)),
        },
    };
    let partial = matches!(outcome, ShadowOutcome::BudgetExhausted { .. });
    Ok(ShadowSearch {
        shadow_size: s,
        outcome,
        stats: SearchStats { partial, ..stats },
    })
}

/// Largest 𝓕-free `r`-graph on `n` vertices with exactly `s` shadow sets.
pub fn max_edges_given_shadow(
    n: usize,
    r: usize,
    family: ForbiddenFamily,
    s: usize,
    cfg: &SearchConfig,
) -> Result<ShadowSearch> {
    super::check_family(family, r)?;
    let space = EdgeSpace::new(n, r)?;
    let budget = Budget::new(cfg);
    let started = std::time::Instant::now();
    let mut out = max_edges_in(&space, family, s, &budget)?;
    out.stats.wall_secs = started.elapsed().as_secs_f64();
    Ok(out)
}
