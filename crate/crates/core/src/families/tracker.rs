//! Incremental freeness checks for growing and shrinking a hypergraph one
//! edge at a time, as the search engine and samplers do.

use std::collections::{HashMap, HashSet};
use std::ops::ControlFlow;

use crate::error::{Error, Result};
use crate::hypergraph::Hypergraph;
use crate::vset::VertexSet;

use super::clique::PairGraph;
use super::{expansion, star_free, ForbiddenFamily};

/// A hypergraph kept free of a family, with the indexes needed to decide
/// cheaply whether one more edge would create a member.
#[derive(Clone, Debug)]
pub struct FreeTracker {
    family: ForbiddenFamily,
    h: Hypergraph,
    pair_count: HashMap<(usize, usize), u32>,
    adj: Vec<VertexSet>,
    // cancellative indexes
    by_key: HashMap<VertexSet, Vec<VertexSet>>,
    cover: HashMap<VertexSet, u32>,
    links: HashMap<VertexSet, HashSet<VertexSet>>,
}

impl FreeTracker {
    pub fn new(n: usize, r: usize, family: ForbiddenFamily) -> Result<Self> {
        family.validate()?;
        if let Some(fr) = family.uniformity() {
            if fr != r {
                return Err(Error::InvalidParameters(format!(
                    "family {family} is {fr}-uniform, tracker asked for r = {r}"
                )));
            }
        }
        Ok(FreeTracker {
            family,
            h: Hypergraph::empty(n, r)?,
            pair_count: HashMap::new(),
            adj: vec![VertexSet::new(); n],
            by_key: HashMap::new(),
            cover: HashMap::new(),
            links: HashMap::new(),
        })
    }

    /// Starts from an existing hypergraph, which must already be free.
    pub fn from_hypergraph(h: &Hypergraph, family: ForbiddenFamily) -> Result<Self> {
        if let Some(w) = super::is_free(h, &family)?.witness() {
            return Err(Error::NotFree(format!("{family} (witness {:?})", w.vertices)));
        }
        let mut t = Self::new(h.n(), h.r(), family)?;
        for e in h.edges() {
            t.insert_unchecked(e.clone())?;
        }
        Ok(t)
    }

    pub fn hypergraph(&self) -> &Hypergraph {
        &self.h
    }

    pub fn family(&self) -> ForbiddenFamily {
        self.family
    }

    fn tracks_pairs(&self) -> bool {
        !matches!(
            self.family,
            ForbiddenFamily::Empty | ForbiddenFamily::Cancellative { .. }
        )
    }

    /// Whether adding `e` (not yet an edge) would create a member of the family.
    pub fn would_create(&self, e: &VertexSet) -> bool {
        if self.h.contains_edge(e) {
            return false;
        }
        match self.family {
            ForbiddenFamily::Empty => false,
            ForbiddenFamily::Cancellative { .. } => self.cancellative_would_create(e),
            ForbiddenFamily::CoveringClique { ell, .. } => self.clique_would_create(e, ell),
            ForbiddenFamily::ExpansionClique { ell, .. } => {
                let mut h = self.h.clone();
                h.insert_edge(e.clone()).expect("validated edge");
                expansion::find_expansion_using(&h, ell, e)
            }
            ForbiddenFamily::D | ForbiddenFamily::Dr { .. } => {
                let mut h = self.h.clone();
                h.insert_edge(e.clone()).expect("validated edge");
                star_free::find_starless_using(&h, e)
            }
        }
    }

    fn cancellative_would_create(&self, e: &VertexSet) -> bool {
        let r = self.h.r();
        // e plays A: a partner B sharing >= ceil(r/2) vertices whose difference is covered
        for key in e.subsets(r.div_ceil(2)) {
            if let Some(bs) = self.by_key.get(&key) {
                for b in bs {
                    let diff = e.symmetric_difference(b);
                    if self.cover.get(&diff).is_some_and(|&c| c > 0) {
                        return true;
                    }
                }
            }
        }
        // e plays C: A = X ∪ S and B = X ∪ T with S ∪ T ⊆ e
        for k in 1..=r / 2 {
            for d in e.subsets(2 * k) {
                let lowest = d.first().expect("non-empty");
                for s in d.subsets(k) {
                    if !s.contains(lowest) {
                        continue;
                    }
                    let t = d.difference(&s);
                    if let (Some(ls), Some(lt)) = (self.links.get(&s), self.links.get(&t)) {
                        let (small, big) = if ls.len() <= lt.len() { (ls, lt) } else { (lt, ls) };
                        if small.iter().any(|x| big.contains(x)) {
                            return true;
                        }
                    }
                }
            }
        }
        false
    }

    fn clique_would_create(&self, e: &VertexSet, ell: usize) -> bool {
        let verts = e.to_vec();
        let mut fresh = Vec::new();
        for (i, &u) in verts.iter().enumerate() {
            for &v in &verts[i + 1..] {
                if !self.adj[u].contains(v) {
                    fresh.push((u, v));
                }
            }
        }
        if fresh.is_empty() {
            return false;
        }
        let mut adj = self.adj.clone();
        for &v in &verts {
            let mut rest = e.clone();
            rest.remove(v);
            adj[v] = adj[v].union(&rest);
        }
        let graph = PairGraph::from_adjacency(adj);
        fresh.iter().any(|&(u, v)| {
            graph
                .for_each_clique_through(ell + 1, u, v, |_| ControlFlow::Break(()))
                .is_some()
        })
    }

    /// Inserts `e` when it keeps the hypergraph free; returns whether it was inserted.
    pub fn try_insert(&mut self, e: VertexSet) -> Result<bool> {
        self.h.validate_edge(&e)?;
        if self.h.contains_edge(&e) || self.would_create(&e) {
            return Ok(false);
        }
        self.insert_unchecked(e)?;
        Ok(true)
    }

    /// Inserts without the family check.
    pub(crate) fn insert_unchecked(&mut self, e: VertexSet) -> Result<()> {
        if !self.h.insert_edge(e.clone())? {
            return Ok(());
        }
        if self.tracks_pairs() {
            self.update_pairs(&e, true);
        }
        if let ForbiddenFamily::Cancellative { .. } = self.family {
            self.update_cancellative(&e, true);
        }
        Ok(())
    }

    pub fn remove(&mut self, e: &VertexSet) -> bool {
        if !self.h.remove_edge(e) {
            return false;
        }
        if self.tracks_pairs() {
            self.update_pairs(e, false);
        }
        if let ForbiddenFamily::Cancellative { .. } = self.family {
            self.update_cancellative(e, false);
        }
        true
    }

    fn update_pairs(&mut self, e: &VertexSet, add: bool) {
        let verts = e.to_vec();
        for (i, &u) in verts.iter().enumerate() {
            for &v in &verts[i + 1..] {
                let c = self.pair_count.entry((u, v)).or_insert(0);
                if add {
                    *c += 1;
                    self.adj[u].insert(v);
                    self.adj[v].insert(u);
                } else {
                    *c -= 1;
                    if *c == 0 {
                        self.pair_count.remove(&(u, v));
                        self.adj[u].remove(v);
                        self.adj[v].remove(u);
                    }
                }
            }
        }
    }

    fn update_cancellative(&mut self, e: &VertexSet, add: bool) {
        let r = self.h.r();
        for key in e.subsets(r.div_ceil(2)) {
            let list = self.by_key.entry(key.clone()).or_default();
            if add {
                list.push(e.clone());
            } else {
                list.retain(|b| b != e);
                if list.is_empty() {
                    self.by_key.remove(&key);
                }
            }
        }
        for d in (2..=r).step_by(2) {
            for s in e.subsets(d) {
                let c = self.cover.entry(s.clone()).or_insert(0);
                if add {
                    *c += 1;
                } else {
                    *c -= 1;
                    if *c == 0 {
                        self.cover.remove(&s);
                    }
                }
            }
        }
        for k in 1..=r / 2 {
            for s in e.subsets(k) {
                let rest = e.difference(&s);
                let set = self.links.entry(s.clone()).or_default();
                if add {
                    set.insert(rest);
                } else {
                    set.remove(&rest);
                    if set.is_empty() {
                        self.links.remove(&s);
                    }
                }
            }
        }
    }
}
