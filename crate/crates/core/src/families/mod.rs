//! Forbidden families and containment detectors.
//!
//! Containment is always as a (not necessarily induced) subgraph. Every
//! detector is deterministic: cores are scanned in lexicographic order and
//! the first witness found is returned.

mod cancellative;
pub(crate) mod clique;
mod expansion;
mod star_free;
mod tracker;
mod verify;

use std::fmt;
use std::ops::ControlFlow;
use std::str::FromStr;

use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};
use crate::hypergraph::Hypergraph;

pub use tracker::FreeTracker;
pub use verify::verify_witness;

use clique::PairGraph;

/// One of the forbidden families studied here.
///
/// `ell` is the clique parameter `ℓ`; the core of a member has `ℓ + 1`
/// vertices, and the compact string form carries `ℓ + 1` (`"K:3:4"` is `ℓ = 3`).
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash)]
pub enum ForbiddenFamily {
    Empty,
    /// 𝒯_r: three edges with `A △ B ⊆ C`.
    Cancellative { r: usize },
    /// 𝒦ʳ_{ℓ+1}: an `(ℓ+1)`-set with every pair covered.
    CoveringClique { r: usize, ell: usize },
    /// Hʳ_{ℓ+1}: the expansion of `K_{ℓ+1}`.
    ExpansionClique { r: usize, ell: usize },
    /// 𝒟: members of 𝒦³₄ not contained in a star.
    D,
    /// 𝒟ʳ: members of 𝒦ʳ_{r+1} not contained in a star.
    Dr { r: usize },
}

impl ForbiddenFamily {
    /// Uniformity the family lives in; `None` for the empty family.
    pub fn uniformity(&self) -> Option<usize> {
        match *self {
            ForbiddenFamily::Empty => None,
            ForbiddenFamily::Cancellative { r }
            | ForbiddenFamily::CoveringClique { r, .. }
            | ForbiddenFamily::ExpansionClique { r, .. }
            | ForbiddenFamily::Dr { r } => Some(r),
            ForbiddenFamily::D => Some(3),
        }
    }

    pub fn validate(&self) -> Result<()> {
        let bad = |msg: String| Err(Error::InvalidParameters(msg));
        match *self {
            ForbiddenFamily::Empty | ForbiddenFamily::D => Ok(()),
            ForbiddenFamily::Cancellative { r } if r < 2 => {
                bad(format!("cancellative family needs r >= 2, got {r}"))
            }
            ForbiddenFamily::CoveringClique { r, ell }
            | ForbiddenFamily::ExpansionClique { r, ell }
                if r < 2 || ell < r =>
            {
                bad(format!("clique families need l >= r >= 2, got r = {r}, l = {ell}"))
            }
            ForbiddenFamily::Dr { r } if r < 3 => bad(format!("D^r needs r >= 3, got {r}")),
            _ => Ok(()),
        }
    }

    fn check_host(&self, h: &Hypergraph) -> Result<()> {
        self.validate()?;
        match self.uniformity() {
            Some(r) if r != h.r() => Err(Error::InvalidParameters(format!(
                "family {self} is {r}-uniform but the hypergraph is {}-uniform",
                h.r()
            ))),
            _ => Ok(()),
        }
    }
}

impl fmt::Display for ForbiddenFamily {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match *self {
            ForbiddenFamily::Empty => write!(f, "empty"),
            ForbiddenFamily::Cancellative { r } => write!(f, "T:{r}"),
            ForbiddenFamily::CoveringClique { r, ell } => write!(f, "K:{r}:{}", ell + 1),
            ForbiddenFamily::ExpansionClique { r, ell } => write!(f, "H:{r}:{}", ell + 1),
            ForbiddenFamily::D => write!(f, "D"),
            ForbiddenFamily::Dr { r } => write!(f, "Dr:{r}"),
        }
    }
}

impl FromStr for ForbiddenFamily {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        let parts: Vec<&str> = s.trim().split(':').collect();
        let num = |idx: usize| -> Result<usize> {
            let pos = parts[..idx].iter().map(|p| p.len() + 1).sum();
            parts[idx].parse().map_err(|_| Error::Parse {
                pos,
                msg: format!("`{}` is not a non-negative integer", parts[idx]),
            })
        };
        let family = match (parts[0], parts.len()) {
            ("empty", 1) => ForbiddenFamily::Empty,
            ("T", 2) => ForbiddenFamily::Cancellative { r: num(1)? },
            ("K", 3) | ("H", 3) => {
                let r = num(1)?;
                let core = num(2)?;
                if core == 0 {
                    return Err(Error::Parse {
                        pos: parts[0].len() + parts[1].len() + 2,
                        msg: "core size must be positive".into(),
                    });
                }
                if parts[0] == "K" {
                    ForbiddenFamily::CoveringClique { r, ell: core - 1 }
                } else {
                    ForbiddenFamily::ExpansionClique { r, ell: core - 1 }
                }
            }
            ("D", 1) => ForbiddenFamily::D,
            ("Dr", 2) => ForbiddenFamily::Dr { r: num(1)? },
            _ => {
                return Err(Error::Parse {
                    pos: 0,
                    msg: format!(
                        "unknown family `{s}` (expected empty, T:r, K:r:m, H:r:m, D or Dr:r)"
                    ),
                })
            }
        };
        family.validate()?;
        Ok(family)
    }
}

impl Serialize for ForbiddenFamily {
    fn serialize<S: serde::Serializer>(&self, s: S) -> std::result::Result<S::Ok, S::Error> {
        s.collect_str(self)
    }
}

impl<'de> Deserialize<'de> for ForbiddenFamily {
    fn deserialize<D: serde::Deserializer<'de>>(d: D) -> std::result::Result<Self, D::Error> {
        let s = String::deserialize(d)?;
        s.parse().map_err(serde::de::Error::custom)
    }
}

/// Certificate that a hypergraph contains a member of a family.
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct Witness {
    pub family: String,
    /// Core or violating vertex set.
    pub vertices: Vec<usize>,
    /// Edges of the host certifying containment.
    pub edges: Vec<Vec<usize>>,
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub enum Detection {
    Free,
    Contains(Witness),
}

impl Detection {
    pub fn is_free(&self) -> bool {
        matches!(self, Detection::Free)
    }

    pub fn witness(&self) -> Option<&Witness> {
        match self {
            Detection::Free => None,
            Detection::Contains(w) => Some(w),
        }
    }

    fn tagged(found: Option<Witness>, family: ForbiddenFamily) -> Detection {
        match found {
            None => Detection::Free,
            Some(mut w) => {
                w.family = family.to_string();
                Detection::Contains(w)
            }
        }
    }
}

/// `Free` iff no distinct edges `A`, `B`, `C` satisfy `A △ B ⊆ C`.
pub fn is_cancellative(h: &Hypergraph) -> Result<Detection> {
    let family = ForbiddenFamily::Cancellative { r: h.r() };
    family.check_host(h)?;
    Ok(Detection::tagged(cancellative::find_triple(h), family))
}

/// Looks for an `(ℓ+1)`-set with all pairs covered.
pub fn contains_covering_clique(h: &Hypergraph, ell: usize) -> Result<Detection> {
    let family = ForbiddenFamily::CoveringClique { r: h.r(), ell };
    family.check_host(h)?;
    if h.n() < ell + 1 {
        return Ok(Detection::Free);
    }
    let graph = PairGraph::of(h);
    let found = graph.for_each_clique(ell + 1, |core| {
        let mut edges = Vec::new();
        for (i, &u) in core.iter().enumerate() {
            for &v in &core[i + 1..] {
                let e = h
                    .edges()
                    .find(|e| e.contains(u) && e.contains(v))
                    .expect("pair graph edge is covered");
                edges.push(e.clone());
            }
        }
        edges.sort();
        edges.dedup();
        ControlFlow::Break(Witness {
            family: String::new(),
            vertices: core.to_vec(),
            edges: edges.iter().map(|e| e.to_vec()).collect(),
        })
    });
    Ok(Detection::tagged(found, family))
}

/// Looks for a copy of the expansion of `K_{ℓ+1}`.
pub fn contains_expansion(h: &Hypergraph, ell: usize) -> Result<Detection> {
    let family = ForbiddenFamily::ExpansionClique { r: h.r(), ell };
    family.check_host(h)?;
    Ok(Detection::tagged(expansion::find_expansion(h, ell), family))
}

/// Looks for a member of 𝒟 (3-graphs only).
pub fn contains_d_member(h: &Hypergraph) -> Result<Detection> {
    ForbiddenFamily::D.check_host(h)?;
    Ok(Detection::tagged(star_free::find_starless(h), ForbiddenFamily::D))
}

/// Looks for a member of 𝒟ʳ.
pub fn contains_dr_member(h: &Hypergraph, r: usize) -> Result<Detection> {
    let family = ForbiddenFamily::Dr { r };
    family.check_host(h)?;
    Ok(Detection::tagged(star_free::find_starless(h), family))
}

/// Dispatches to the detector for `family`.
pub fn is_free(h: &Hypergraph, family: &ForbiddenFamily) -> Result<Detection> {
    match *family {
        ForbiddenFamily::Empty => Ok(Detection::Free),
        ForbiddenFamily::Cancellative { .. } => {
            family.check_host(h)?;
            is_cancellative(h)
        }
        ForbiddenFamily::CoveringClique { ell, .. } => {
            family.check_host(h)?;
            contains_covering_clique(h, ell)
        }
        ForbiddenFamily::ExpansionClique { ell, .. } => {
            family.check_host(h)?;
            contains_expansion(h, ell)
        }
        ForbiddenFamily::D => contains_d_member(h),
        ForbiddenFamily::Dr { r } => contains_dr_member(h, r),
    }
}

#[cfg(test)]
mod tests;
