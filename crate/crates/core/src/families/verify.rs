//! Witness replay, written against the raw definitions rather than the search code.

use crate::hypergraph::Hypergraph;
use crate::vset::VertexSet;

use super::{ForbiddenFamily, Witness};

/// Re-checks `w` against `h`. Returns `true` when the witness certifies that
/// `h` contains a member of `family`.
pub fn verify_witness(h: &Hypergraph, family: &ForbiddenFamily, w: &Witness) -> bool {
    let mut edges = Vec::with_capacity(w.edges.len());
    for e in &w.edges {
        let set: VertexSet = e.iter().copied().collect();
        if set.len() != e.len() || !h.contains_edge(&set) {
            return false;
        }
        edges.push(set);
    }
    let core: VertexSet = w.vertices.iter().copied().collect();
    if core.len() != w.vertices.len() {
        return false;
    }
    match *family {
        ForbiddenFamily::Empty => false,
        ForbiddenFamily::Cancellative { .. } => {
            let [a, b, c] = &edges[..] else {
                return false;
            };
            a != b && a != c && b != c && a.symmetric_difference(b).is_subset(c)
        }
        ForbiddenFamily::CoveringClique { ell, .. } => {
            core.len() == ell + 1 && all_pairs_covered(&core, &edges)
        }
        ForbiddenFamily::ExpansionClique { ell, .. } => {
            if core.len() != ell + 1 || edges.len() != (ell + 1) * ell / 2 {
                return false;
            }
            let mut used = core.clone();
            let mut pairs_hit = Vec::new();
            for e in &edges {
                let on_core = e.intersection(&core);
                if on_core.len() != 2 {
                    return false;
                }
                let extra = e.difference(&core);
                if !extra.is_disjoint(&used) {
                    return false;
                }
                used = used.union(&extra);
                pairs_hit.push(on_core);
            }
            pairs_hit.sort();
            pairs_hit.dedup();
            pairs_hit.len() == edges.len()
        }
        ForbiddenFamily::D | ForbiddenFamily::Dr { .. } => {
            let r = family.uniformity().unwrap_or(3);
            if core.len() != r + 1 || !all_pairs_covered(&core, &edges) {
                return false;
            }
            let common = edges
                .iter()
                .fold(VertexSet::full(h.n()), |acc, e| acc.intersection(e));
            !edges.is_empty() && common.is_empty()
        }
    }
}

fn all_pairs_covered(core: &VertexSet, edges: &[VertexSet]) -> bool {
    let verts = core.to_vec();
    verts.iter().enumerate().all(|(i, &u)| {
        verts[i + 1..]
            .iter()
            .all(|&v| edges.iter().any(|e| e.contains(u) && e.contains(v)))
    })
}
