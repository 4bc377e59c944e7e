//! Shadow and edge densities of uniform hypergraphs under forbidden families.
//!
//! The crate builds the extremal constructions (generalized Turán
//! hypergraphs, stars, Steiner triple system blow-ups), decides containment
//! of the forbidden families 𝒯_r, 𝒦ʳ_{ℓ+1}, Hʳ_{ℓ+1}, 𝒟 and 𝒟ʳ, evaluates
//! the boundary curves of the (shadow density, edge density) region, and
//! explores that region at small `n` by exact and sampled search.

pub mod bounds;
pub mod cli;
pub mod constructions;
pub mod density;
pub mod error;
pub mod explore;
pub mod families;
pub mod hypergraph;
pub mod io;
pub mod vset;

pub use error::{Error, Result};
pub use families::{Detection, ForbiddenFamily, Witness};
pub use hypergraph::{binomial, Density, Hypergraph};
pub use vset::VertexSet;
