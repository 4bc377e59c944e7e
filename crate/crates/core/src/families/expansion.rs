//! Expansion `Hʳ_{ℓ+1}`: a core of `ℓ+1` vertices whose `C(ℓ+1, 2)` pairs are
//! each covered by their own edge, the `r-2` extra vertices of those edges
//! pairwise disjoint and disjoint from the core.

use std::ops::ControlFlow;

use crate::hypergraph::Hypergraph;
use crate::vset::VertexSet;

use super::clique::PairGraph;
use super::Witness;

/// Tries to embed an expansion on `core`; returns the edge assigned to each pair.
pub(crate) fn embed_on_core(h: &Hypergraph, core: &[usize]) -> Option<Vec<VertexSet>> {
    let core_set: VertexSet = core.iter().copied().collect();
    let mut slots: Vec<Vec<(VertexSet, VertexSet)>> = Vec::new();
    for (i, &u) in core.iter().enumerate() {
        for &v in &core[i + 1..] {
            let pair: VertexSet = [u, v].into_iter().collect();
            let cands: Vec<(VertexSet, VertexSet)> = h
                .edges()
                .filter(|e| e.intersection(&core_set) == pair)
                .map(|e| (e.clone(), e.difference(&pair)))
                .collect();
            if cands.is_empty() {
                return None;
            }
            slots.push(cands);
        }
    }
    // most constrained pair first; stable sort keeps lexicographic pair order among ties
    let mut order: Vec<usize> = (0..slots.len()).collect();
    order.sort_by_key(|&i| slots[i].len());

    let mut chosen: Vec<Option<usize>> = vec![None; slots.len()];
    if assign(&slots, &order, 0, &VertexSet::new(), &mut chosen) {
        Some(
            chosen
                .iter()
                .enumerate()
                .map(|(i, c)| slots[i][c.expect("assigned")].0.clone())
                .collect(),
        )
    } else {
        None
    }
}

fn assign(
    slots: &[Vec<(VertexSet, VertexSet)>],
    order: &[usize],
    depth: usize,
    used: &VertexSet,
    chosen: &mut [Option<usize>],
) -> bool {
    let Some(&slot) = order.get(depth) else {
        return true;
    };
    for (ci, (_, extra)) in slots[slot].iter().enumerate() {
        if extra.is_disjoint(used) {
            chosen[slot] = Some(ci);
            if assign(slots, order, depth + 1, &used.union(extra), chosen) {
                return true;
            }
        }
    }
    chosen[slot] = None;
    false
}

pub(crate) fn find_expansion(h: &Hypergraph, ell: usize) -> Option<Witness> {
    let core_size = ell + 1;
    // core plus one disjoint (r-2)-set per pair must fit
    let needed = core_size + (core_size * ell / 2) * (h.r() - 2);
    if h.n() < needed {
        return None;
    }
    let graph = PairGraph::of(h);
    graph.for_each_clique(core_size, |core| match embed_on_core(h, core) {
        Some(edges) => ControlFlow::Break(witness(core, edges)),
        None => ControlFlow::Continue(()),
    })
}

/// Search restricted to cores containing two vertices of `e`.
pub(crate) fn find_expansion_using(h: &Hypergraph, ell: usize, e: &VertexSet) -> bool {
    let core_size = ell + 1;
    let needed = core_size + (core_size * ell / 2) * (h.r() - 2);
    if h.n() < needed {
        return false;
    }
    let graph = PairGraph::of(h);
    let verts = e.to_vec();
    for (i, &u) in verts.iter().enumerate() {
        for &v in &verts[i + 1..] {
            let hit = graph.for_each_clique_through(core_size, u, v, |core| {
                match embed_on_core(h, core) {
                    Some(_) => ControlFlow::Break(()),
                    None => ControlFlow::Continue(()),
                }
            });
            if hit.is_some() {
                return true;
            }
        }
    }
    false
}

fn witness(core: &[usize], edges: Vec<VertexSet>) -> Witness {
    Witness {
        family: String::new(),
        vertices: core.to_vec(),
        edges: edges.iter().map(VertexSet::to_vec).collect(),
    }
}
