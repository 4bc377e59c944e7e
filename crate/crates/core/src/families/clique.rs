//! Pair-coverage graph and ordered clique search.

use std::ops::ControlFlow;

use crate::hypergraph::Hypergraph;
use crate::vset::VertexSet;

/// Graph on the vertices of `H` joining `u` and `v` when some edge covers both.
#[derive(Clone, Debug)]
pub(crate) struct PairGraph {
    adj: Vec<VertexSet>,
}

impl PairGraph {
    pub fn of(h: &Hypergraph) -> Self {
        let mut adj = vec![VertexSet::new(); h.n()];
        for e in h.edges() {
            for v in e.iter() {
                let mut rest = e.clone();
                rest.remove(v);
                adj[v] = adj[v].union(&rest);
            }
        }
        PairGraph { adj }
    }

    pub fn from_adjacency(adj: Vec<VertexSet>) -> Self {
        PairGraph { adj }
    }

    pub fn covered(&self, u: usize, v: usize) -> bool {
        self.adj[u].contains(v)
    }

    /// Visits every `size`-clique in lexicographic order of its sorted vertex list.
    pub fn for_each_clique<B>(
        &self,
        size: usize,
        mut f: impl FnMut(&[usize]) -> ControlFlow<B>,
    ) -> Option<B> {
        let all = VertexSet::full(self.adj.len());
        let mut chosen = Vec::with_capacity(size);
        match self.extend(&mut chosen, all, size, &mut f) {
            ControlFlow::Break(b) => Some(b),
            ControlFlow::Continue(()) => None,
        }
    }

    /// Visits every `size`-clique containing both `u` and `v` (each once).
    pub fn for_each_clique_through<B>(
        &self,
        size: usize,
        u: usize,
        v: usize,
        mut f: impl FnMut(&[usize]) -> ControlFlow<B>,
    ) -> Option<B> {
        if size < 2 || u == v || !self.covered(u, v) {
            return None;
        }
        let common = self.adj[u].intersection(&self.adj[v]);
        let mut chosen = vec![u.min(v), u.max(v)];
        let mut sink = |c: &[usize]| {
            let mut sorted = c.to_vec();
            sorted.sort_unstable();
            f(&sorted)
        };
        match self.extend(&mut chosen, common, size, &mut sink) {
            ControlFlow::Break(b) => Some(b),
            ControlFlow::Continue(()) => None,
        }
    }

    fn extend<B>(
        &self,
        chosen: &mut Vec<usize>,
        candidates: VertexSet,
        size: usize,
        f: &mut impl FnMut(&[usize]) -> ControlFlow<B>,
    ) -> ControlFlow<B> {
        if chosen.len() == size {
            return f(chosen);
        }
        if chosen.len() + candidates.len() < size {
            return ControlFlow::Continue(());
        }
        let mut remaining = candidates;
        while let Some(v) = remaining.first() {
            remaining.remove(v);
            if chosen.len() + 1 + remaining.len() < size {
                break;
            }
            chosen.push(v);
            let next = remaining.intersection(&self.adj[v]);
            self.extend(chosen, next, size, f)?;
            chosen.pop();
        }
        ControlFlow::Continue(())
    }
}
