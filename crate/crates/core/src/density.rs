use serde::{Deserialize, Serialize};

use crate::error::Result;
use crate::hypergraph::{binomial, Density, Hypergraph};

/// A point `(x, y)` = (shadow density, edge density).
#[derive(Clone, Debug, PartialEq, Serialize, Deserialize)]
pub struct DensityPoint {
    pub x: f64,
    pub y: f64,
    /// Vertex count that produced the point; 0 for analytic or limit points.
    pub n: usize,
    pub source: String,
}

impl DensityPoint {
    pub fn analytic(x: f64, y: f64, source: impl Into<String>) -> Self {
        DensityPoint {
            x,
            y,
            n: 0,
            source: source.into(),
        }
    }

    pub fn of(h: &Hypergraph, source: impl Into<String>) -> Result<Self> {
        Ok(DensityPoint {
            x: to_f64(&h.shadow_density()?),
            y: to_f64(&h.edge_density()?),
            n: h.n(),
            source: source.into(),
        })
    }

    /// Point of an `r`-graph on `n` vertices with the given shadow and edge counts.
    pub fn from_counts(n: usize, r: usize, shadow: usize, edges: usize, source: impl Into<String>) -> Self {
        let (x, y) = exact_densities(n, r, shadow, edges);
        DensityPoint {
            x: to_f64(&x),
            y: to_f64(&y),
            n,
            source: source.into(),
        }
    }
}

/// Exact `(|∂H| / C(n, r-1), |H| / C(n, r))`. Callers guarantee `n >= r`.
pub fn exact_densities(n: usize, r: usize, shadow: usize, edges: usize) -> (Density, Density) {
    (
        Density::new(shadow as u128, binomial(n, r - 1).max(1)),
        Density::new(edges as u128, binomial(n, r).max(1)),
    )
}

pub fn to_f64(d: &Density) -> f64 {
    *d.numer() as f64 / *d.denom() as f64
}

/// `p/q` rendering used in reports and CSV files.
pub fn fraction(d: &Density) -> String {
    format!("{}/{}", d.numer(), d.denom())
}
