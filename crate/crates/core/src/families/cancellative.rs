//! Cancellative (𝒯_r-free) detection.
//!
//! A triple of distinct edges with `A △ B ⊆ C` forces `|A △ B| <= r`, i.e.
//! `|A ∩ B| >= r/2`, and then `|A ∪ B ∪ C| <= |A ∪ B| <= 2r - 1`, so the
//! vertex bound in the definition of 𝒯_r holds automatically. It is enough
//! to search pairs of edges sharing at least `ceil(r/2)` vertices.

use std::collections::HashMap;

use crate::hypergraph::Hypergraph;
use crate::vset::VertexSet;

use super::Witness;

/// Lexicographically first `(A, B, C)` with `A < B` in canonical edge order
/// and `A △ B ⊆ C`.
pub(crate) fn find_triple(h: &Hypergraph) -> Option<Witness> {
    let r = h.r();
    let edges: Vec<&VertexSet> = h.edges().collect();
    let key_size = r.div_ceil(2);

    let mut by_key: HashMap<VertexSet, Vec<usize>> = HashMap::new();
    for (i, e) in edges.iter().enumerate() {
        for k in e.subsets(key_size) {
            by_key.entry(k).or_default().push(i);
        }
    }
    // sets of even size 2..=r mapped to the sorted indices of edges covering them
    let mut cover: HashMap<VertexSet, Vec<usize>> = HashMap::new();
    for (i, e) in edges.iter().enumerate() {
        for d in (2..=r).step_by(2) {
            for s in e.subsets(d) {
                cover.entry(s).or_default().push(i);
            }
        }
    }

    for (a, ea) in edges.iter().enumerate() {
        let mut partners: Vec<usize> = ea
            .subsets(key_size)
            .iter()
            .flat_map(|k| by_key[k].iter().copied())
            .filter(|&b| b > a)
            .collect();
        partners.sort_unstable();
        partners.dedup();
        for b in partners {
            let diff = ea.symmetric_difference(edges[b]);
            // A △ B holds vertices outside A and outside B, so any cover is a third edge
            if let Some(&c) = cover.get(&diff).and_then(|cs| cs.first()) {
                return Some(Witness {
                    family: String::new(),
                    vertices: ea.union(edges[b]).union(edges[c]).to_vec(),
                    edges: vec![ea.to_vec(), edges[b].to_vec(), edges[c].to_vec()],
                });
            }
        }
    }
    None
}

/// Plain `O(m^3)` scan over unordered pairs and a third edge; test oracle.
#[cfg(test)]
pub(crate) fn find_triple_naive(h: &Hypergraph) -> Option<[Vec<usize>; 3]> {
    let edges: Vec<&VertexSet> = h.edges().collect();
    for a in 0..edges.len() {
        for b in a + 1..edges.len() {
            let diff = edges[a].symmetric_difference(edges[b]);
            for (c, ec) in edges.iter().enumerate() {
                if c != a && c != b && diff.is_subset(ec) {
                    return Some([edges[a].to_vec(), edges[b].to_vec(), ec.to_vec()]);
                }
            }
        }
    }
    None
}
