//! Boundary curves of the feasible region and the finite-`n` inequalities
//! behind them.
//!
//! Curves evaluate in `f64`. Evaluating outside a curve's domain is an error;
//! a slack of `1e-12` absorbs rounding in endpoints such as `6/7`.

use std::fmt;
use std::str::FromStr;

use serde::{Deserialize, Serialize};

use crate::density::{to_f64, DensityPoint};
use crate::error::{Error, Result};
use crate::families::{self, ForbiddenFamily};
use crate::hypergraph::{binomial, Hypergraph};

const DOMAIN_SLACK: f64 = 1e-12;

/// Relative tolerance for the monotone chain check.
pub const CHAIN_TOLERANCE: f64 = 1e-12;

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash)]
pub enum CurveId {
    /// `x^{r/(r-1)}`: upper bound for every family, tight for the empty family.
    UniversalKK { r: usize },
    /// `(x^r / r!)^{1/(r-1)}` for cancellative `r`-graphs.
    CancellativeLeft { r: usize },
    /// `x(1-x)` for cancellative 3-graphs.
    CancellativeRightT3,
    /// `(sqrt(2(1-x)x^3) + x^2 - x) / (3x - 1)`, the earlier cancellative bound.
    PriorCancellativeT3,
    /// `(ℓ-r+1) (x^r / (ℓ)_r)^{1/(r-1)}` for 𝒦ʳ_{ℓ+1}.
    CoveringCliqueG { r: usize, ell: usize },
    /// Lower bound traced by Fano plane blow-ups.
    FanoLower,
    /// Lower bound traced by Steiner triple system blow-ups on `k` points.
    GeneralKLower { k: usize },
}

/// Closed (or left-open) x-interval of a curve.
#[derive(Clone, Copy, Debug, PartialEq)]
pub struct Domain {
    pub lo: f64,
    pub hi: f64,
    pub lo_open: bool,
}

impl Domain {
    fn closed(lo: f64, hi: f64) -> Self {
        Domain { lo, hi, lo_open: false }
    }

    pub fn contains(&self, x: f64) -> bool {
        let above = if self.lo_open { x > self.lo } else { x >= self.lo - DOMAIN_SLACK };
        above && x <= self.hi + DOMAIN_SLACK
    }

    /// `points` evenly spaced samples; a left-open domain drops its left end.
    pub fn grid(&self, points: usize) -> Vec<f64> {
        let points = points.max(2);
        if self.lo_open {
            (1..=points)
                .map(|i| self.lo + (self.hi - self.lo) * i as f64 / points as f64)
                .collect()
        } else {
            (0..points)
                .map(|i| self.lo + (self.hi - self.lo) * i as f64 / (points - 1) as f64)
                .collect()
        }
    }
}

fn falling(l: usize, k: usize) -> f64 {
    (0..k).map(|j| (l - j) as f64).product()
}

fn factorial(k: usize) -> f64 {
    (1..=k).map(|j| j as f64).product()
}

impl CurveId {
    pub fn validate(&self) -> Result<()> {
        let bad = |m: String| Err(Error::InvalidParameters(m));
        match *self {
            CurveId::UniversalKK { r } if r < 3 => bad(format!("universal curve needs r >= 3, got {r}")),
            CurveId::CancellativeLeft { r } if r < 2 => {
                bad(format!("cancellative curve needs r >= 2, got {r}"))
            }
            CurveId::CoveringCliqueG { r, ell } if r < 3 || ell < r => bad(format!(
                "covering-clique curve needs l >= r >= 3, got r = {r}, l = {ell}"
            )),
            CurveId::GeneralKLower { k } if k < 7 || !matches!(k % 6, 1 | 3) => bad(format!(
                "general-k curve needs k >= 7 with k ≡ 1 or 3 (mod 6), got {k}"
            )),
            _ => Ok(()),
        }
    }

    pub fn domain(&self) -> Domain {
        match *self {
            CurveId::UniversalKK { .. }
            | CurveId::CancellativeLeft { .. }
            | CurveId::CancellativeRightT3 => Domain::closed(0.0, 1.0),
            CurveId::PriorCancellativeT3 => Domain {
                lo: 1.0 / 3.0,
                hi: 1.0,
                lo_open: true,
            },
            CurveId::CoveringCliqueG { r, ell } => {
                Domain::closed(0.0, falling(ell, r - 1) / (ell as f64).powi(r as i32 - 1))
            }
            CurveId::FanoLower => Domain::closed(2.0 / 3.0, 6.0 / 7.0),
            CurveId::GeneralKLower { k } => Domain::closed(2.0 / 3.0, (k - 1) as f64 / k as f64),
        }
    }

    /// Evaluates the curve at `x`.
    pub fn eval(&self, x: f64) -> Result<f64> {
        self.validate()?;
        let dom = self.domain();
        if !x.is_finite() || !dom.contains(x) {
            return Err(Error::OutsideDomain {
                curve: self.to_string(),
                x,
                lo: dom.lo,
                hi: dom.hi,
            });
        }
        let x = x.clamp(dom.lo, dom.hi);
        Ok(match *self {
            CurveId::UniversalKK { r } => x.powf(r as f64 / (r - 1) as f64),
            CurveId::CancellativeLeft { r } => {
                (x.powi(r as i32) / factorial(r)).powf(1.0 / (r - 1) as f64)
            }
            CurveId::CancellativeRightT3 => x * (1.0 - x),
            CurveId::PriorCancellativeT3 => {
                ((2.0 * (1.0 - x) * x.powi(3)).sqrt() + x * x - x) / (3.0 * x - 1.0)
            }
            CurveId::CoveringCliqueG { r, ell } => {
                (ell - r + 1) as f64
                    * (x.powi(r as i32) / falling(ell, r)).powf(1.0 / (r - 1) as f64)
            }
            CurveId::FanoLower => {
                let a = (18.0 * x * x - 21.0 * x.powi(3)).max(0.0).sqrt();
                let b = (18.0 - 21.0 * x).max(0.0).sqrt();
                (-70.0 * a + 63.0 * x + 60.0 * b - 36.0) / 147.0
            }
            CurveId::GeneralKLower { k } => {
                let kf = k as f64;
                let gap = (kf - 1.0 - kf * x).max(0.0);
                2.0 * 3f64.sqrt() * (kf + 3.0) * gap.powf(1.5) / (3.0 * kf * kf * (kf - 3.0).sqrt())
                    + (3.0 * kf * x - 2.0 * kf + 2.0) / (kf * kf)
            }
        })
    }

    /// Samples `(x, y)` over the domain.
    pub fn sample(&self, points: usize) -> Result<Vec<(f64, f64)>> {
        self.domain()
            .grid(points)
            .into_iter()
            .map(|x| self.eval(x).map(|y| (x, y)))
            .collect()
    }

    /// Whether the curve bounds the edge density from above (as opposed to a construction curve).
    pub fn is_upper_bound(&self) -> bool {
        !matches!(self, CurveId::FanoLower | CurveId::GeneralKLower { .. })
    }
}

impl fmt::Display for CurveId {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match *self {
            CurveId::UniversalKK { r } => write!(f, "universal:{r}"),
            CurveId::CancellativeLeft { r } => write!(f, "cancellative-left:{r}"),
            CurveId::CancellativeRightT3 => write!(f, "cancellative-right"),
            CurveId::PriorCancellativeT3 => write!(f, "prior-cancellative"),
            CurveId::CoveringCliqueG { r, ell } => write!(f, "covering-clique:{r}:{ell}"),
            CurveId::FanoLower => write!(f, "fano-lower"),
            CurveId::GeneralKLower { k } => write!(f, "general-k:{k}"),
        }
    }
}

impl FromStr for CurveId {
    type Err = Error;

    /// `universal:r`, `cancellative-left:r`, `cancellative-right`,
    /// `prior-cancellative`, `covering-clique:r:l`, `fano-lower`, `general-k:k`.
    fn from_str(s: &str) -> Result<Self> {
        let parts: Vec<&str> = s.trim().split(':').collect();
        let num = |i: usize| -> Result<usize> {
            let pos = parts[..i].iter().map(|p| p.len() + 1).sum();
            parts[i].parse().map_err(|_| Error::Parse {
                pos,
                msg: format!("`{}` is not a non-negative integer", parts[i]),
            })
        };
        let id = match (parts[0], parts.len()) {
            ("universal", 2) => CurveId::UniversalKK { r: num(1)? },
            ("cancellative-left", 2) => CurveId::CancellativeLeft { r: num(1)? },
            ("cancellative-right", 1) => CurveId::CancellativeRightT3,
            ("prior-cancellative", 1) => CurveId::PriorCancellativeT3,
            ("covering-clique", 3) => CurveId::CoveringCliqueG {
                r: num(1)?,
                ell: num(2)?,
            },
            ("fano-lower", 1) => CurveId::FanoLower,
            ("general-k", 2) => CurveId::GeneralKLower { k: num(1)? },
            _ => {
                return Err(Error::Parse {
                    pos: 0,
                    msg: format!("unknown curve `{s}`"),
                })
            }
        };
        id.validate()?;
        Ok(id)
    }
}

impl Serialize for CurveId {
    fn serialize<S: serde::Serializer>(&self, s: S) -> std::result::Result<S::Ok, S::Error> {
        s.collect_str(self)
    }
}

impl<'de> Deserialize<'de> for CurveId {
    fn deserialize<D: serde::Deserializer<'de>>(d: D) -> std::result::Result<Self, D::Error> {
        String::deserialize(d)?.parse().map_err(serde::de::Error::custom)
    }
}

/// Which bound a report refers to.
#[derive(Clone, Debug, PartialEq, Serialize, Deserialize)]
#[serde(rename_all = "snake_case", tag = "kind")]
pub enum BoundId {
    Curve { curve: CurveId },
    /// `|H| <= (|∂H| / r)^{r/(r-1)}` for cancellative `r`-graphs.
    CancellativeShadowPower { r: usize },
    /// `|H| <= (n^2 - 2|∂H|)|∂H| / (3n) + 3n^2` for cancellative 3-graphs.
    CancellativeQuadratic,
    /// `|H| <= C(z, r)` where `|∂H| = C(z, r-1)`.
    KruskalKatona { r: usize },
}

#[derive(Clone, Debug, PartialEq, Serialize, Deserialize)]
pub struct BoundReport {
    pub point: DensityPoint,
    pub bound: BoundId,
    /// Left-hand side (density or edge count).
    pub value: f64,
    /// Right-hand side.
    pub limit: f64,
    /// `limit - value`.
    pub slack: f64,
    pub satisfied: bool,
    /// Decided by exact integer arithmetic rather than the float slack.
    pub exact: bool,
}

/// Compares a density point with an upper-bound curve.
pub fn check_point(point: &DensityPoint, curve: CurveId, tolerance: f64) -> Result<BoundReport> {
    let limit = curve.eval(point.x)?;
    let slack = limit - point.y;
    Ok(BoundReport {
        point: point.clone(),
        bound: BoundId::Curve { curve },
        value: point.y,
        limit,
        slack,
        satisfied: slack >= -tolerance,
        exact: false,
    })
}

/// Generalized binomial `z(z-1)...(z-k+1) / k!` for real `z`.
pub fn generalized_binomial(z: f64, k: usize) -> f64 {
    (0..k).map(|j| (z - j as f64) / (j + 1) as f64).product()
}

/// Real `z` in `[r-1, max(n, r)]` with `C(z, r-1) = shadow_size`, by bisection.
pub fn kruskal_katona_z(shadow_size: usize, r: usize, n: usize) -> Result<f64> {
    if r < 2 || n < r {
        return Err(Error::InvalidParameters(format!(
            "Kruskal–Katona bound needs n >= r >= 2, got n = {n}, r = {r}"
        )));
    }
    if shadow_size as u128 > binomial(n, r - 1) {
        return Err(Error::InvalidParameters(format!(
            "shadow size {shadow_size} exceeds C({n}, {})",
            r - 1
        )));
    }
    let target = shadow_size as f64;
    let (mut lo, mut hi) = ((r - 1) as f64, n.max(r) as f64);
    if target <= 1.0 {
        return Ok(lo);
    }
    for _ in 0..100 {
        let mid = 0.5 * (lo + hi);
        if generalized_binomial(mid, r - 1) < target {
            lo = mid;
        } else {
            hi = mid;
        }
        if hi - lo <= 1e-12 * hi {
            break;
        }
    }
    Ok(0.5 * (lo + hi))
}

/// Largest `|H|` allowed by Kruskal–Katona (Lovász form) for `|∂H| = shadow_size`.
pub fn kruskal_katona_max_edges(shadow_size: usize, r: usize, n: usize) -> Result<f64> {
    let z = kruskal_katona_z(shadow_size, r, n)?;
    if shadow_size == 0 {
        return Ok(0.0);
    }
    Ok(generalized_binomial(z, r))
}

/// Values `(|∂_i H| / C(ℓ, r-i))^{1/(r-i)}` for `i = r-ℓ, ..., r-1`.
#[derive(Clone, Debug, PartialEq, Serialize, Deserialize)]
pub struct ChainReport {
    pub ell: usize,
    /// Shadow index `i` of each entry.
    pub indices: Vec<isize>,
    pub sizes: Vec<usize>,
    pub values: Vec<f64>,
    pub non_decreasing: bool,
}

/// Evaluates the shadow chain of a 𝒦ʳ_{ℓ+1}-free hypergraph.
pub fn check_fisher_ryan_chain(h: &Hypergraph, ell: usize) -> Result<ChainReport> {
    let r = h.r();
    let family = ForbiddenFamily::CoveringClique { r, ell };
    if !families::is_free(h, &family)?.is_free() {
        return Err(Error::NotFree(family.to_string()));
    }
    let mut indices = Vec::new();
    let mut sizes = Vec::new();
    let mut values = Vec::new();
    for i in (r as isize - ell as isize)..=(r as isize - 1) {
        let k = (r as isize - i) as usize;
        // no k-sets at all when k > n
        let size = if k > h.n() { 0 } else { h.shadow(i)?.len() };
        let value = (size as f64 / binomial(ell, k) as f64).powf(1.0 / k as f64);
        indices.push(i);
        sizes.push(size);
        values.push(value);
    }
    let non_decreasing = values
        .windows(2)
        .all(|w| w[1] >= w[0] - CHAIN_TOLERANCE * w[0].abs().max(w[1].abs()));
    Ok(ChainReport {
        ell,
        indices,
        sizes,
        values,
        non_decreasing,
    })
}

/// Exact `m <= (s/r)^{r/(r-1)}`, i.e. `m^{r-1} r^r <= s^r`; `None` on overflow.
pub fn shadow_power_holds(edges: usize, shadow: usize, r: usize) -> Option<bool> {
    let m = edges as u128;
    let s = shadow as u128;
    let lhs = m.checked_pow(r as u32 - 1)?.checked_mul((r as u128).checked_pow(r as u32)?)?;
    let rhs = s.checked_pow(r as u32)?;
    Some(lhs <= rhs)
}

/// Exact `3n|H| <= (n^2 - 2s)s + 9n^3`.
pub fn quadratic_holds(edges: usize, shadow: usize, n: usize) -> bool {
    let (m, s, n) = (edges as i128, shadow as i128, n as i128);
    3 * n * m <= (n * n - 2 * s) * s + 9 * n * n * n
}

/// Evaluates the finite-`n` cancellative inequalities on `h`.
pub fn check_cancellative_inequalities(h: &Hypergraph) -> Result<Vec<BoundReport>> {
    let r = h.r();
    if !families::is_cancellative(h)?.is_free() {
        return Err(Error::NotFree(ForbiddenFamily::Cancellative { r }.to_string()));
    }
    let point = DensityPoint::of(h, "input")?;
    let m = h.len();
    let s = h.shadow_size();
    let limit = (s as f64 / r as f64).powf(r as f64 / (r - 1) as f64);
    let exact = shadow_power_holds(m, s, r);
    let mut reports = vec![BoundReport {
        point: point.clone(),
        bound: BoundId::CancellativeShadowPower { r },
        value: m as f64,
        limit,
        slack: limit - m as f64,
        satisfied: exact.unwrap_or(limit - m as f64 >= -1e-9 * limit.max(1.0)),
        exact: exact.is_some(),
    }];
    if r == 3 {
        let n = h.n() as f64;
        let limit = (n * n - 2.0 * s as f64) * s as f64 / (3.0 * n) + 3.0 * n * n;
        reports.push(BoundReport {
            point,
            bound: BoundId::CancellativeQuadratic,
            value: m as f64,
            limit,
            slack: limit - m as f64,
            satisfied: quadratic_holds(m, s, h.n()),
            exact: true,
        });
    }
    Ok(reports)
}

/// Kruskal–Katona report for a single hypergraph.
pub fn check_kruskal_katona(h: &Hypergraph) -> Result<BoundReport> {
    let r = h.r();
    let s = h.shadow_size();
    let limit = kruskal_katona_max_edges(s, r, h.n())?;
    let m = h.len() as f64;
    Ok(BoundReport {
        point: DensityPoint::of(h, "input")?,
        bound: BoundId::KruskalKatona { r },
        value: m,
        limit,
        slack: limit - m,
        satisfied: m <= limit + 1e-9 * limit.max(1.0),
        exact: false,
    })
}

/// Limit densities `(x, y)` of the Fano blow-up with weight `α` on one line.
pub fn fano_blowup_limit(alpha: f64) -> (f64, f64) {
    let x = 0.75 * (1.0 + 2.0 * alpha - 7.0 * alpha * alpha);
    let y = 0.75 * alpha * (3.0 - 18.0 * alpha + 35.0 * alpha * alpha);
    (x, y)
}

/// Exact density of a hypergraph as `f64`, convenient for curve checks.
pub fn densities_f64(h: &Hypergraph) -> Result<(f64, f64)> {
    Ok((to_f64(&h.shadow_density()?), to_f64(&h.edge_density()?)))
}
