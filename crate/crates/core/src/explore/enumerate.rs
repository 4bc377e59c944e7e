//! Exhaustive depth-first enumeration of 𝓕-free hypergraphs.

use std::collections::{BTreeMap, BTreeSet};

use rayon::prelude::*;

use crate::error::Result;
use crate::families::{FreeTracker, ForbiddenFamily};
use crate::hypergraph::Hypergraph;

use super::canon::Canonizer;
use super::space::{EdgeSpace, ShadowCounter};
use super::{Budget, SearchConfig};

/// A visited hypergraph, handed to visitors without materializing it.
pub struct Node<'a> {
    space: &'a EdgeSpace,
    picked: &'a [u32],
    shadow_size: usize,
}

impl Node<'_> {
    pub fn n(&self) -> usize {
        self.space.n
    }

    pub fn edge_count(&self) -> usize {
        self.picked.len()
    }

    pub fn shadow_size(&self) -> usize {
        self.shadow_size
    }

    pub fn hypergraph(&self) -> Hypergraph {
        self.space.hypergraph(self.picked)
    }
}

/// Attained `(shadow, edges)` pairs and per-shadow maxima; merges are
/// associative and commutative, so worker count never changes the result.
#[derive(Default, Debug)]
pub(crate) struct Tally {
    pub pairs: BTreeSet<(usize, usize)>,
    /// shadow size -> (max edges, smallest witness key)
    pub best: BTreeMap<usize, (usize, Vec<u64>)>,
    pub visited: u64,
    pub pruned: u64,
}

impl Tally {
    /// `key` orders witnesses of equal size; the smallest is kept.
    pub fn record(&mut self, shadow: usize, edges: usize, key: impl FnOnce() -> Vec<u64>) {
        self.visited += 1;
        self.pairs.insert((shadow, edges));
        match self.best.get_mut(&shadow) {
            Some(cur) if cur.0 > edges => {}
            Some(cur) if cur.0 == edges => {
                let k = key();
                if k < cur.1 {
                    cur.1 = k;
                }
            }
            _ => {
                self.best.insert(shadow, (edges, key()));
            }
        }
    }

    pub fn merge(&mut self, other: Tally) {
        self.visited += other.visited;
        self.pruned += other.pruned;
        self.pairs.extend(other.pairs);
        for (s, (m, key)) in other.best {
            match self.best.get_mut(&s) {
                Some(cur) if (cur.0, std::cmp::Reverse(&cur.1)) >= (m, std::cmp::Reverse(&key)) => {}
                _ => {
                    self.best.insert(s, (m, key));
                }
            }
        }
    }
}

struct Walker<'a, V> {
    space: &'a EdgeSpace,
    budget: &'a Budget,
    visit: &'a V,
    tally: Tally,
    picked: Vec<u32>,
    shadow: ShadowCounter,
    tracker: Option<FreeTracker>,
}

impl<'a, V: Fn(&Node) + Sync> Walker<'a, V> {
    fn new(space: &'a EdgeSpace, family: ForbiddenFamily, budget: &'a Budget, visit: &'a V) -> Result<Self> {
        let tracker = match family {
            ForbiddenFamily::Empty => None,
            f => Some(FreeTracker::new(space.n, space.r, f)?),
        };
        Ok(Walker {
            space,
            budget,
            visit,
            tally: Tally::default(),
            picked: Vec::new(),
            shadow: ShadowCounter::new(space),
            tracker,
        })
    }

    fn push(&mut self, j: u32) {
        self.picked.push(j);
        self.shadow.add(self.space, j);
        if let Some(t) = &mut self.tracker {
            t.insert_unchecked(self.space.edges[j as usize].clone())
                .expect("candidate edges are valid");
        }
    }

    fn pop(&mut self) {
        let j = self.picked.pop().expect("non-empty stack");
        self.shadow.remove(self.space, j);
        if let Some(t) = &mut self.tracker {
            t.remove(&self.space.edges[j as usize]);
        }
    }

    fn blocked(&mut self, j: u32) -> bool {
        let hit = self
            .tracker
            .as_ref()
            .is_some_and(|t| t.would_create(&self.space.edges[j as usize]));
        if hit {
            self.tally.pruned += 1;
        }
        hit
    }

    fn visit_current(&mut self) -> bool {
        if !self.budget.allow() {
            return false;
        }
        let picked = &self.picked;
        self.tally.record(self.shadow.size, picked.len(), || {
            picked.iter().map(|&j| j as u64).collect()
        });
        (self.visit)(&Node {
            space: self.space,
            picked: &self.picked,
            shadow_size: self.shadow.size,
        });
        true
    }

    fn next_start(&self) -> u32 {
        self.picked.last().map_or(0, |&j| j + 1)
    }

    fn dfs(&mut self) {
        if !self.visit_current() {
            return;
        }
        for j in self.next_start()..self.space.len() as u32 {
            if self.budget.exhausted() {
                return;
            }
            if self.blocked(j) {
                continue;
            }
            self.push(j);
            self.dfs();
            self.pop();
        }
    }

    /// Visits nodes shallower than `depth` and collects the roots at `depth`.
    fn frontier(&mut self, depth: usize, roots: &mut Vec<Vec<u32>>) {
        if self.picked.len() == depth {
            roots.push(self.picked.clone());
            return;
        }
        if !self.visit_current() {
            return;
        }
        for j in self.next_start()..self.space.len() as u32 {
            if self.blocked(j) {
                continue;
            }
            self.push(j);
            self.frontier(depth, roots);
            self.pop();
        }
    }
}

pub(crate) fn enumerate_plain<V: Fn(&Node) + Sync>(
    space: &EdgeSpace,
    family: ForbiddenFamily,
    cfg: &SearchConfig,
    budget: &Budget,
    visit: &V,
) -> Result<Tally> {
    let mut root = Walker::new(space, family, budget, visit)?;
    let mut roots = Vec::new();
    root.frontier(cfg.split_depth, &mut roots);
    let mut tally = std::mem::take(&mut root.tally);
    let parts: Vec<Result<Tally>> = roots
        .par_iter()
        .map(|prefix| {
            let mut w = Walker::new(space, family, budget, visit)?;
            for &j in prefix {
                w.push(j);
            }
            w.dfs();
            Ok(w.tally)
        })
        .collect();
    for part in parts {
        tally.merge(part?);
    }
    Ok(tally)
}

/// Level-by-level search over isomorphism classes: each level holds the
/// canonical forms with a fixed edge count.
pub(crate) fn enumerate_iso<V: Fn(&Node) + Sync>(
    space: &EdgeSpace,
    family: ForbiddenFamily,
    budget: &Budget,
    visit: &V,
) -> Result<Tally> {
    let canon = Canonizer::new(space.n)?;
    let mut tally = Tally::default();
    let mut level: BTreeSet<Vec<u64>> = BTreeSet::from([Vec::new()]);
    while !level.is_empty() && !budget.exhausted() {
        let reps: Vec<Vec<u64>> = level.into_iter().collect();
        let parts: Vec<Result<(Tally, Vec<Vec<u64>>)>> = reps
            .par_iter()
            .map(|rep| expand_class(space, family, &canon, budget, visit, rep))
            .collect();
        let mut next = BTreeSet::new();
        for part in parts {
            let (t, children) = part?;
            tally.merge(t);
            next.extend(children);
        }
        level = next;
    }
    Ok(tally)
}

fn expand_class<V: Fn(&Node) + Sync>(
    space: &EdgeSpace,
    family: ForbiddenFamily,
    canon: &Canonizer,
    budget: &Budget,
    visit: &V,
    rep: &[u64],
) -> Result<(Tally, Vec<Vec<u64>>)> {
    let mut tally = Tally::default();
    if !budget.allow() {
        return Ok((tally, Vec::new()));
    }
    let picked: Vec<u32> = rep
        .iter()
        .map(|&m| space.index_of_mask(m).expect("canonical masks are candidate edges"))
        .collect();
    let mut shadow = ShadowCounter::new(space);
    let mut tracker = match family {
        ForbiddenFamily::Empty => None,
        f => Some(FreeTracker::new(space.n, space.r, f)?),
    };
    for &j in &picked {
        shadow.add(space, j);
        if let Some(t) = &mut tracker {
            t.insert_unchecked(space.edges[j as usize].clone())?;
        }
    }
    tally.record(shadow.size, picked.len(), || rep.to_vec());
    visit(&Node {
        space,
        picked: &picked,
        shadow_size: shadow.size,
    });
    let mut children = BTreeSet::new();
    let mut masks = rep.to_vec();
    for j in 0..space.len() {
        let m = space.masks[j];
        if rep.binary_search(&m).is_ok() {
            continue;
        }
        if tracker.as_ref().is_some_and(|t| t.would_create(&space.edges[j])) {
            tally.pruned += 1;
            continue;
        }
        masks.push(m);
        children.insert(canon.canonical(&masks));
        masks.pop();
    }
    Ok((tally, children.into_iter().collect()))
}
