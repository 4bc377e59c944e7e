//! Candidate edges in colexicographic order and shadow bookkeeping.

use std::collections::HashMap;

use crate::error::{Error, Result};
use crate::hypergraph::Hypergraph;
use crate::vset::VertexSet;

/// All `r`-subsets of `[n]`, sorted by bitmask (colex order), with the
/// indices of their `(r-1)`-subsets.
#[derive(Debug)]
pub(crate) struct EdgeSpace {
    pub n: usize,
    pub r: usize,
    pub edges: Vec<VertexSet>,
    pub masks: Vec<u64>,
    pub subs: Vec<Vec<u32>>,
    pub num_subs: usize,
}

impl EdgeSpace {
    pub fn new(n: usize, r: usize) -> Result<Self> {
        if r < 1 || n < r || n > 64 {
            return Err(Error::InvalidParameters(format!(
                "search needs 1 <= r <= n <= 64, got n = {n}, r = {r}"
            )));
        }
        let mut edges = VertexSet::full(n).subsets(r);
        edges.sort_by_key(|e| e.low_mask());
        let masks: Vec<u64> = edges.iter().map(|e| e.low_mask()).collect();
        let mut index: HashMap<VertexSet, u32> = HashMap::new();
        let subs = edges
            .iter()
            .map(|e| {
                e.subsets(r - 1)
                    .into_iter()
                    .map(|s| {
                        let next = index.len() as u32;
                        *index.entry(s).or_insert(next)
                    })
                    .collect()
            })
            .collect();
        Ok(EdgeSpace {
            n,
            r,
            num_subs: index.len(),
            edges,
            masks,
            subs,
        })
    }

    pub fn len(&self) -> usize {
        self.edges.len()
    }

    pub fn index_of_mask(&self, mask: u64) -> Option<u32> {
        self.masks.binary_search(&mask).ok().map(|i| i as u32)
    }

    pub fn hypergraph(&self, picked: &[u32]) -> Hypergraph {
        Hypergraph::from_sets(self.n, self.r, picked.iter().map(|&i| self.edges[i as usize].clone()))
            .expect("candidate edges are valid")
    }
}

/// Coverage count of every `(r-1)`-set.
#[derive(Clone, Debug)]
pub(crate) struct ShadowCounter {
    count: Vec<u32>,
    pub size: usize,
}

impl ShadowCounter {
    pub fn new(space: &EdgeSpace) -> Self {
        ShadowCounter {
            count: vec![0; space.num_subs],
            size: 0,
        }
    }

    pub fn add(&mut self, space: &EdgeSpace, edge: u32) {
        for &s in &space.subs[edge as usize] {
            let c = &mut self.count[s as usize];
            if *c == 0 {
                self.size += 1;
            }
            *c += 1;
        }
    }

    pub fn remove(&mut self, space: &EdgeSpace, edge: u32) {
        for &s in &space.subs[edge as usize] {
            let c = &mut self.count[s as usize];
            *c -= 1;
            if *c == 0 {
                self.size -= 1;
            }
        }
    }

    /// Number of `(r-1)`-sets `edge` would add to the shadow.
    pub fn fresh(&self, space: &EdgeSpace, edge: u32) -> usize {
        space.subs[edge as usize]
            .iter()
            .filter(|&&s| self.count[s as usize] == 0)
            .count()
    }

    pub fn is_covered(&self, sub: u32) -> bool {
        self.count[sub as usize] > 0
    }
}
