//! Members of `𝒦ʳ_{r+1}` that fit in no star (the families 𝒟 and 𝒟ʳ).
//!
//! A selection of edges fits inside some star exactly when the selected edges
//! share a common vertex, so we look for an `(r+1)`-set whose pairs admit
//! covering edges with empty total intersection.

use std::ops::ControlFlow;

use crate::hypergraph::Hypergraph;
use crate::vset::VertexSet;

use super::clique::PairGraph;
use super::Witness;

/// Covering edges for each pair of `core` whose common intersection is empty.
pub(crate) fn starless_selection(h: &Hypergraph, core: &[usize]) -> Option<Vec<VertexSet>> {
    let mut slots: Vec<Vec<&VertexSet>> = Vec::new();
    for (i, &u) in core.iter().enumerate() {
        for &v in &core[i + 1..] {
            let cands: Vec<&VertexSet> = h
                .edges()
                .filter(|e| e.contains(u) && e.contains(v))
                .collect();
            if cands.is_empty() {
                return None;
            }
            slots.push(cands);
        }
    }
    let mut picked = Vec::with_capacity(slots.len());
    let start = VertexSet::full(h.n());
    if select(&slots, 0, &start, &mut picked) {
        // fill the untouched tail with first candidates
        for slot in &slots[picked.len()..] {
            picked.push(slot[0]);
        }
        let mut edges: Vec<VertexSet> = picked.into_iter().cloned().collect();
        edges.sort();
        edges.dedup();
        Some(edges)
    } else {
        None
    }
}

fn select<'a>(
    slots: &[Vec<&'a VertexSet>],
    depth: usize,
    common: &VertexSet,
    picked: &mut Vec<&'a VertexSet>,
) -> bool {
    if common.is_empty() {
        return true;
    }
    if depth == slots.len() {
        return false;
    }
    // a vertex lying in every remaining candidate can never be eliminated
    let mut forced = common.clone();
    for slot in &slots[depth..] {
        for e in slot {
            forced = forced.intersection(e);
        }
    }
    if !forced.is_empty() {
        return false;
    }
    for e in &slots[depth] {
        picked.push(e);
        if select(slots, depth + 1, &common.intersection(e), picked) {
            return true;
        }
        picked.pop();
    }
    false
}

pub(crate) fn find_starless(h: &Hypergraph) -> Option<Witness> {
    let graph = PairGraph::of(h);
    graph.for_each_clique(h.r() + 1, |core| match starless_selection(h, core) {
        Some(edges) => ControlFlow::Break(Witness {
            family: String::new(),
            vertices: core.to_vec(),
            edges: edges.iter().map(VertexSet::to_vec).collect(),
        }),
        None => ControlFlow::Continue(()),
    })
}

pub(crate) fn find_starless_using(h: &Hypergraph, e: &VertexSet) -> bool {
    let graph = PairGraph::of(h);
    let verts = e.to_vec();
    for (i, &u) in verts.iter().enumerate() {
        for &v in &verts[i + 1..] {
            let hit = graph.for_each_clique_through(h.r() + 1, u, v, |core| {
                match starless_selection(h, core) {
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
