//! Minimal-image canonical forms by brute force over all vertex permutations.

use crate::error::{Error, Result};
use crate::hypergraph::Hypergraph;

/// Largest `n` accepted; `8! = 40320` permutations per call.
pub const MAX_CANONICAL_N: usize = 8;

/// Every permutation of `[n]`, precomputed once per search.
#[derive(Debug)]
pub struct Canonizer {
    n: usize,
    perms: Vec<Vec<u8>>,
}

impl Canonizer {
    pub fn new(n: usize) -> Result<Self> {
        if n > MAX_CANONICAL_N {
            return Err(Error::InvalidParameters(format!(
                "canonical forms are limited to n <= {MAX_CANONICAL_N}, got {n}"
            )));
        }
        let mut perms = Vec::new();
        let mut p: Vec<u8> = (0..n as u8).collect();
        loop {
            perms.push(p.clone());
            // next permutation in lexicographic order
            let Some(i) = (1..p.len()).rev().find(|&i| p[i - 1] < p[i]) else {
                break;
            };
            let j = (i..p.len()).rev().find(|&j| p[j] > p[i - 1]).expect("pivot exists");
            p.swap(i - 1, j);
            p[i..].reverse();
        }
        Ok(Canonizer { n, perms })
    }

    pub fn n(&self) -> usize {
        self.n
    }

    /// Lexicographically smallest sorted image of `masks` over all permutations.
    pub fn canonical(&self, masks: &[u64]) -> Vec<u64> {
        let mut best: Option<Vec<u64>> = None;
        let mut image = Vec::with_capacity(masks.len());
        for perm in &self.perms {
            image.clear();
            image.extend(masks.iter().map(|&m| permute(m, perm)));
            image.sort_unstable();
            if best.as_ref().map_or(true, |b| image < *b) {
                best = Some(image.clone());
            }
        }
        best.unwrap_or_default()
    }
}

fn permute(mut mask: u64, perm: &[u8]) -> u64 {
    let mut out = 0;
    while mask != 0 {
        let v = mask.trailing_zeros() as usize;
        out |= 1 << perm[v];
        mask &= mask - 1;
    }
    out
}

/// Canonical form of `h` (sorted edge masks); equal iff isomorphic.
pub fn canonical_form(h: &Hypergraph) -> Result<Vec<u64>> {
    Ok(Canonizer::new(h.n())?.canonical(&h.edge_masks()))
}

pub fn is_isomorphic(a: &Hypergraph, b: &Hypergraph) -> Result<bool> {
    if a.n() != b.n() || a.r() != b.r() || a.len() != b.len() {
        return Ok(false);
    }
    Ok(canonical_form(a)? == canonical_form(b)?)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::constructions::{fano_plane, steiner_triple_system, turan};

    #[test]
    fn permutation_count() {
        assert_eq!(Canonizer::new(5).unwrap().perms.len(), 120);
        assert_eq!(Canonizer::new(0).unwrap().perms.len(), 1);
        assert!(Canonizer::new(9).is_err());
    }

    #[test]
    fn relabelings_agree() {
        let t = turan(6, 3, 3).unwrap();
        let shuffled = t.relabel(&[3, 0, 5, 1, 4, 2], 6).unwrap();
        assert_ne!(t, shuffled);
        assert!(is_isomorphic(&t, &shuffled).unwrap());
        assert!(is_isomorphic(&fano_plane(), &steiner_triple_system(7).unwrap()).unwrap());
        let star = crate::constructions::star(6, 3).unwrap();
        let k = Hypergraph::complete(6, 3).unwrap();
        assert!(!is_isomorphic(&star, &k).unwrap());
    }

    #[test]
    fn non_isomorphic_same_counts() {
        // a 2-edge path sharing two vertices vs sharing one vertex
        let a = Hypergraph::new(5, 3, [[0, 1, 2], [0, 1, 3]]).unwrap();
        let b = Hypergraph::new(5, 3, [[0, 1, 2], [0, 3, 4]]).unwrap();
        assert!(!is_isomorphic(&a, &b).unwrap());
    }
}
