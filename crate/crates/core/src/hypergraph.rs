//! Uniform hypergraphs, shadows, links and exact densities.

use std::collections::{BTreeSet, HashSet};

use num_rational::Ratio;

use crate::error::{Error, Result};
use crate::vset::VertexSet;

/// Exact density value.
pub type Density = Ratio<u128>;

/// Binomial coefficient `C(n, k)`; zero when `k > n`.
pub fn binomial(n: usize, k: usize) -> u128 {
    if k > n {
        return 0;
    }
    let k = k.min(n - k);
    let mut acc: u128 = 1;
    for j in 0..k {
        // exact at every step: acc * (n-j) is divisible by (j+1)
        acc = acc * (n - j) as u128 / (j + 1) as u128;
    }
    acc
}

/// An `r`-uniform hypergraph on the vertex set `{0, ..., n-1}`.
///
/// Edges are kept in lexicographic order of their sorted vertex lists, which
/// is the canonical order used by every serializer and detector.
#[derive(Clone, PartialEq, Eq, Hash, Debug)]
pub struct Hypergraph {
    n: usize,
    r: usize,
    edges: BTreeSet<VertexSet>,
}

impl Hypergraph {
    pub fn empty(n: usize, r: usize) -> Result<Self> {
        if r == 0 {
            return Err(Error::InvalidHypergraph("uniformity must be at least 1".into()));
        }
        Ok(Hypergraph {
            n,
            r,
            edges: BTreeSet::new(),
        })
    }

    /// Builds a hypergraph from explicit vertex lists. Duplicate edges are
    /// rejected, as are edges of the wrong size or with repeated vertices.
    pub fn new<I, E>(n: usize, r: usize, edges: I) -> Result<Self>
    where
        I: IntoIterator<Item = E>,
        E: AsRef<[usize]>,
    {
        let mut h = Self::empty(n, r)?;
        for e in edges {
            let e = e.as_ref();
            let set: VertexSet = e.iter().copied().collect();
            if set.len() != e.len() {
                return Err(Error::InvalidHypergraph(format!(
                    "edge {e:?} repeats a vertex"
                )));
            }
            if !h.insert_edge(set)? {
                return Err(Error::InvalidHypergraph(format!("duplicate edge {e:?}")));
            }
        }
        Ok(h)
    }

    pub fn from_sets<I: IntoIterator<Item = VertexSet>>(n: usize, r: usize, edges: I) -> Result<Self> {
        let mut h = Self::empty(n, r)?;
        for e in edges {
            h.insert_edge(e)?;
        }
        Ok(h)
    }

    /// The complete `r`-graph on `n` vertices.
    pub fn complete(n: usize, r: usize) -> Result<Self> {
        let edges = VertexSet::full(n).subsets(r);
        Self::from_sets(n, r, edges)
    }

    pub fn n(&self) -> usize {
        self.n
    }

    pub fn r(&self) -> usize {
        self.r
    }

    pub fn len(&self) -> usize {
        self.edges.len()
    }

    pub fn is_empty(&self) -> bool {
        self.edges.is_empty()
    }

    /// Edges in canonical order.
    pub fn edges(&self) -> impl Iterator<Item = &VertexSet> + '_ {
        self.edges.iter()
    }

    pub fn edge_lists(&self) -> Vec<Vec<usize>> {
        self.edges.iter().map(VertexSet::to_vec).collect()
    }

    pub fn contains_edge(&self, e: &VertexSet) -> bool {
        self.edges.contains(e)
    }

    /// Adds an edge; returns `false` if it was already present.
    pub fn insert_edge(&mut self, e: VertexSet) -> Result<bool> {
        self.validate_edge(&e)?;
        Ok(self.edges.insert(e))
    }

    pub fn remove_edge(&mut self, e: &VertexSet) -> bool {
        self.edges.remove(e)
    }

    pub fn validate_edge(&self, e: &VertexSet) -> Result<()> {
        if e.len() != self.r {
            return Err(Error::InvalidHypergraph(format!(
                "edge {e:?} has {} vertices, expected {}",
                e.len(),
                self.r
            )));
        }
        if let Some(m) = e.last() {
            if m >= self.n {
                return Err(Error::VertexOutOfRange {
                    vertex: m,
                    n: self.n,
                });
            }
        }
        Ok(())
    }

    fn check_vertex(&self, v: usize) -> Result<()> {
        if v >= self.n {
            return Err(Error::VertexOutOfRange { vertex: v, n: self.n });
        }
        Ok(())
    }

    /// The `i`-th shadow.
    ///
    /// For `i >= 1` this is the `(r-i)`-graph of sets lying inside some edge,
    /// `i = 0` is the hypergraph itself, and for `i <= -1` it is the
    /// `(r-i)`-graph of sets spanning a complete sub-hypergraph.
    pub fn shadow(&self, i: isize) -> Result<Hypergraph> {
        let r = self.r as isize;
        if i >= r {
            return Err(Error::InvalidShadow {
                i,
                r: self.r,
                n: self.n,
                reason: "shadow uniformity would be zero or negative",
            });
        }
        let k = (r - i) as usize;
        if k > self.n {
            return Err(Error::InvalidShadow {
                i,
                r: self.r,
                n: self.n,
                reason: "shadow uniformity exceeds the vertex count",
            });
        }
        if i == 0 {
            return Ok(self.clone());
        }
        let edges = if i > 0 {
            self.edges.iter().flat_map(|e| e.subsets(k)).collect()
        } else {
            self.clique_sets(k)
        };
        Ok(Hypergraph {
            n: self.n,
            r: k,
            edges,
        })
    }

    /// `k`-sets (`k > r`) all of whose `r`-subsets are edges.
    fn clique_sets(&self, k: usize) -> BTreeSet<VertexSet> {
        let mut level: HashSet<VertexSet> = self.edges.iter().cloned().collect();
        for size in self.r..k {
            let mut next = HashSet::new();
            for b in &level {
                let start = b.last().map_or(0, |m| m + 1);
                for v in start..self.n {
                    let mut a = b.clone();
                    a.insert(v);
                    // every size-subset of `a` must already be complete
                    let complete = a.iter().filter(|&u| u != v).all(|u| {
                        let mut sub = a.clone();
                        sub.remove(u);
                        level.contains(&sub)
                    });
                    if complete {
                        next.insert(a);
                    }
                }
            }
            debug_assert!(next.iter().all(|s| s.len() == size + 1));
            level = next;
        }
        level.into_iter().collect()
    }

    /// Number of `(r-1)`-sets covered by edges.
    pub fn shadow_size(&self) -> usize {
        self.edges
            .iter()
            .flat_map(|e| e.subsets(self.r - 1))
            .collect::<HashSet<_>>()
            .len()
    }

    /// `|H| / C(n, r)`.
    pub fn edge_density(&self) -> Result<Density> {
        if self.n < self.r {
            return Err(Error::DensityUndefined {
                n: self.n,
                need: self.r,
            });
        }
        Ok(Ratio::new(self.len() as u128, binomial(self.n, self.r)))
    }

    /// `|∂H| / C(n, r-1)`.
    pub fn shadow_density(&self) -> Result<Density> {
        if self.n + 1 < self.r {
            return Err(Error::DensityUndefined {
                n: self.n,
                need: self.r - 1,
            });
        }
        Ok(Ratio::new(
            self.shadow_size() as u128,
            binomial(self.n, self.r - 1),
        ))
    }

    /// The link of `v`: the `(r-1)`-graph `{E \ {v} : v ∈ E ∈ H}` on the same vertices.
    pub fn link(&self, v: usize) -> Result<Hypergraph> {
        self.check_vertex(v)?;
        if self.r == 1 {
            return Err(Error::InvalidParameters(
                "the link of a 1-graph would be 0-uniform".into(),
            ));
        }
        let edges = self
            .edges
            .iter()
            .filter(|e| e.contains(v))
            .map(|e| {
                let mut l = e.clone();
                l.remove(v);
                l
            })
            .collect();
        Ok(Hypergraph {
            n: self.n,
            r: self.r - 1,
            edges,
        })
    }

    pub fn degree(&self, v: usize) -> Result<usize> {
        self.check_vertex(v)?;
        Ok(self.edges.iter().filter(|e| e.contains(v)).count())
    }

    /// Number of edges containing both `u` and `v`.
    pub fn pair_degree(&self, u: usize, v: usize) -> Result<usize> {
        self.check_vertex(u)?;
        self.check_vertex(v)?;
        if u == v {
            return Err(Error::InvalidParameters(format!(
                "pair degree needs two distinct vertices, got {u} twice"
            )));
        }
        Ok(self
            .edges
            .iter()
            .filter(|e| e.contains(u) && e.contains(v))
            .count())
    }

    /// Sub-hypergraph induced on `vertices`, relabeled order-preservingly to `0..|S|`.
    pub fn induced(&self, vertices: &VertexSet) -> Result<Hypergraph> {
        if let Some(m) = vertices.last() {
            self.check_vertex(m)?;
        }
        let order = vertices.to_vec();
        let mut relabel = vec![usize::MAX; self.n];
        for (new, &old) in order.iter().enumerate() {
            relabel[old] = new;
        }
        let edges = self
            .edges
            .iter()
            .filter(|e| e.is_subset(vertices))
            .map(|e| e.iter().map(|v| relabel[v]).collect())
            .collect();
        Ok(Hypergraph {
            n: order.len(),
            r: self.r,
            edges,
        })
    }

    /// Sum of vertex degrees over `vertices`.
    pub fn sigma(&self, vertices: &VertexSet) -> Result<usize> {
        if let Some(m) = vertices.last() {
            self.check_vertex(m)?;
        }
        Ok(self
            .edges
            .iter()
            .map(|e| e.intersection_len(vertices))
            .sum())
    }

    /// Image under the vertex map `perm[v]`; `perm` must be injective into `0..n_new`.
    pub fn relabel(&self, perm: &[usize], n_new: usize) -> Result<Hypergraph> {
        if perm.len() != self.n {
            return Err(Error::InvalidParameters(format!(
                "relabeling needs {} images, got {}",
                self.n,
                perm.len()
            )));
        }
        Hypergraph::from_sets(
            n_new,
            self.r,
            self.edges.iter().map(|e| e.iter().map(|v| perm[v]).collect()),
        )
    }

    /// Same edges on a larger vertex set (extra vertices isolated).
    pub fn with_vertices(&self, n: usize) -> Result<Hypergraph> {
        if n < self.n && self.edges.iter().any(|e| e.last().is_some_and(|m| m >= n)) {
            return Err(Error::InvalidParameters(format!(
                "cannot shrink to {n} vertices: edges use higher labels"
            )));
        }
        Ok(Hypergraph {
            n,
            r: self.r,
            edges: self.edges.clone(),
        })
    }

    /// Edges as 64-bit masks, for the search engine (`n <= 64`).
    pub fn edge_masks(&self) -> Vec<u64> {
        debug_assert!(self.n <= 64);
        self.edges.iter().map(VertexSet::low_mask).collect()
    }
}
