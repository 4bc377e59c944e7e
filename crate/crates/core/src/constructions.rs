//! Generators for the extremal constructions.
//!
//! Blow-up classes are laid out contiguously in the vertex order of the base
//! hypergraph, and real-valued part sizes are apportioned by largest
//! remainder so they always sum to `n`.

use std::fmt;
use std::str::FromStr;

use crate::error::{Error, Result};
use crate::hypergraph::Hypergraph;
use crate::vset::VertexSet;

const ALPHA_EPS: f64 = 1e-12;

/// Parsed construction request, e.g. `turan:6:3:3` or `fano-blowup:70:0.142857`.
#[derive(Clone, Debug, PartialEq)]
pub enum ConstructionSpec {
    Turan { n: usize, r: usize, ell: usize },
    Star { n: usize, r: usize },
    Complete { n: usize, r: usize },
    CliquePlusIsolated { n: usize, r: usize, alpha: f64 },
    TuranPlusIsolated { n: usize, r: usize, ell: usize, alpha: f64 },
    Sts { k: usize },
    StsBlowup { n: usize, k: usize },
    FanoBlowup { n: usize, alpha: f64 },
}

impl ConstructionSpec {
    pub fn build(&self) -> Result<Hypergraph> {
        match *self {
            ConstructionSpec::Turan { n, r, ell } => turan(n, r, ell),
            ConstructionSpec::Star { n, r } => star(n, r),
            ConstructionSpec::Complete { n, r } => Hypergraph::complete(n, r),
            ConstructionSpec::CliquePlusIsolated { n, r, alpha } => clique_plus_isolated(n, r, alpha),
            ConstructionSpec::TuranPlusIsolated { n, r, ell, alpha } => {
                turan_plus_isolated(n, r, ell, alpha)
            }
            ConstructionSpec::Sts { k } => steiner_triple_system(k),
            ConstructionSpec::StsBlowup { n, k } => sts_blowup(n, k),
            ConstructionSpec::FanoBlowup { n, alpha } => fano_blowup(n, alpha),
        }
    }
}

impl fmt::Display for ConstructionSpec {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            ConstructionSpec::Turan { n, r, ell } => write!(f, "turan:{n}:{r}:{ell}"),
            ConstructionSpec::Star { n, r } => write!(f, "star:{n}:{r}"),
            ConstructionSpec::Complete { n, r } => write!(f, "complete:{n}:{r}"),
            ConstructionSpec::CliquePlusIsolated { n, r, alpha } => {
                write!(f, "clique+iso:{n}:{r}:{alpha}")
            }
            ConstructionSpec::TuranPlusIsolated { n, r, ell, alpha } => {
                write!(f, "turan+iso:{n}:{r}:{ell}:{alpha}")
            }
            ConstructionSpec::Sts { k } => write!(f, "sts:{k}"),
            ConstructionSpec::StsBlowup { n, k } => write!(f, "sts-blowup:{n}:{k}"),
            ConstructionSpec::FanoBlowup { n, alpha } => write!(f, "fano-blowup:{n}:{alpha}"),
        }
    }
}

impl FromStr for ConstructionSpec {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        let fields: Vec<&str> = s.trim().split(':').collect();
        let offset = |i: usize| -> usize { fields[..i].iter().map(|f| f.len() + 1).sum() };
        let int = |i: usize| -> Result<usize> {
            let f = fields.get(i).ok_or_else(|| Error::Parse {
                pos: s.len(),
                msg: format!("missing field {i} in `{s}`"),
            })?;
            f.parse().map_err(|_| Error::Parse {
                pos: offset(i),
                msg: format!("`{f}` is not a non-negative integer"),
            })
        };
        let real = |i: usize| -> Result<f64> {
            let f = fields.get(i).ok_or_else(|| Error::Parse {
                pos: s.len(),
                msg: format!("missing field {i} in `{s}`"),
            })?;
            parse_real(f).ok_or_else(|| Error::Parse {
                pos: offset(i),
                msg: format!("`{f}` is not a real number (decimal or p/q)"),
            })
        };
        let arity = match fields[0] {
            "turan" => 4,
            "star" | "complete" | "sts-blowup" | "fano-blowup" => 3,
            "sts" => 2,
            "clique+iso" => 4,
            "turan+iso" => 5,
            other => {
                return Err(Error::Parse {
                    pos: 0,
                    msg: format!("unknown construction `{other}`"),
                })
            }
        };
        if fields.len() != arity {
            return Err(Error::Parse {
                pos: if fields.len() > arity { offset(arity) } else { s.len() },
                msg: format!(
                    "`{}` takes {} parameters, got {}",
                    fields[0],
                    arity - 1,
                    fields.len() - 1
                ),
            });
        }
        Ok(match fields[0] {
            "turan" => ConstructionSpec::Turan { n: int(1)?, r: int(2)?, ell: int(3)? },
            "star" => ConstructionSpec::Star { n: int(1)?, r: int(2)? },
            "complete" => ConstructionSpec::Complete { n: int(1)?, r: int(2)? },
            "sts" => ConstructionSpec::Sts { k: int(1)? },
            "sts-blowup" => ConstructionSpec::StsBlowup { n: int(1)?, k: int(2)? },
            "fano-blowup" => ConstructionSpec::FanoBlowup { n: int(1)?, alpha: real(2)? },
            "clique+iso" => ConstructionSpec::CliquePlusIsolated {
                n: int(1)?,
                r: int(2)?,
                alpha: real(3)?,
            },
            _ => ConstructionSpec::TuranPlusIsolated {
                n: int(1)?,
                r: int(2)?,
                ell: int(3)?,
                alpha: real(4)?,
            },
        })
    }
}

/// Accepts `0.25` as well as `1/7`.
pub(crate) fn parse_real(s: &str) -> Option<f64> {
    match s.split_once('/') {
        Some((p, q)) => {
            let (p, q): (f64, f64) = (p.trim().parse().ok()?, q.trim().parse().ok()?);
            (q != 0.0).then(|| p / q)
        }
        None => s.trim().parse().ok(),
    }
}

/// Part sizes of a balanced `parts`-partition of `n`, larger parts first.
pub fn balanced_parts(n: usize, parts: usize) -> Vec<usize> {
    (0..parts)
        .map(|i| n / parts + usize::from(i < n % parts))
        .collect()
}

/// Largest-remainder apportionment of `total` in proportion to `weights`.
/// Ties on the fractional part go to the lower index.
pub fn apportion(weights: &[f64], total: usize) -> Vec<usize> {
    let sum: f64 = weights.iter().sum();
    if weights.is_empty() || sum <= 0.0 {
        return vec![0; weights.len()];
    }
    let quotas: Vec<f64> = weights.iter().map(|w| w / sum * total as f64).collect();
    let mut sizes: Vec<usize> = quotas.iter().map(|q| q.floor() as usize).collect();
    let assigned: usize = sizes.iter().sum();
    let mut order: Vec<usize> = (0..weights.len()).collect();
    order.sort_by(|&a, &b| {
        let fa = quotas[a] - quotas[a].floor();
        let fb = quotas[b] - quotas[b].floor();
        fb.partial_cmp(&fa).unwrap_or(std::cmp::Ordering::Equal).then(a.cmp(&b))
    });
    for &i in order.iter().take(total.saturating_sub(assigned)) {
        sizes[i] += 1;
    }
    sizes
}

/// Generalized Turán hypergraph `T_r(n, ℓ)`: all `r`-sets meeting each part of
/// a balanced `ℓ`-partition in at most one vertex.
pub fn turan(n: usize, r: usize, ell: usize) -> Result<Hypergraph> {
    if r < 2 || ell < r {
        return Err(Error::InvalidParameters(format!(
            "turan needs l >= r >= 2, got r = {r}, l = {ell}"
        )));
    }
    let sizes = balanced_parts(n, ell);
    multipartite(n, r, &sizes)
}

/// All `r`-sets that meet each class of the contiguous partition at most once.
fn multipartite(n: usize, r: usize, sizes: &[usize]) -> Result<Hypergraph> {
    let mut part_of = Vec::with_capacity(n);
    for (p, &s) in sizes.iter().enumerate() {
        part_of.extend(std::iter::repeat(p).take(s));
    }
    debug_assert_eq!(part_of.len(), n);
    let mut edges = Vec::new();
    let mut current = Vec::with_capacity(r);
    transversals(&part_of, r, 0, &mut current, &mut edges);
    Hypergraph::from_sets(n, r, edges)
}

fn transversals(
    part_of: &[usize],
    r: usize,
    start: usize,
    current: &mut Vec<usize>,
    out: &mut Vec<VertexSet>,
) {
    if current.len() == r {
        out.push(current.iter().copied().collect());
        return;
    }
    for v in start..part_of.len() {
        if current.iter().all(|&u| part_of[u] != part_of[v]) {
            current.push(v);
            transversals(part_of, r, v + 1, current, out);
            current.pop();
        }
    }
}

/// Star with center 0: every `r`-set containing vertex 0.
pub fn star(n: usize, r: usize) -> Result<Hypergraph> {
    if r < 2 || n < r {
        return Err(Error::InvalidParameters(format!(
            "star needs n >= r >= 2, got n = {n}, r = {r}"
        )));
    }
    let edges = VertexSet::full(n)
        .difference(&VertexSet::singleton(0))
        .subsets(r - 1)
        .into_iter()
        .map(|mut s| {
            s.insert(0);
            s
        });
    Hypergraph::from_sets(n, r, edges)
}

fn check_alpha(alpha: f64) -> Result<()> {
    if !(0.0..=1.0).contains(&alpha) {
        return Err(Error::InvalidParameters(format!(
            "alpha must lie in [0, 1], got {alpha}"
        )));
    }
    Ok(())
}

/// Complete `r`-graph on `round(αn)` vertices plus isolated vertices.
pub fn clique_plus_isolated(n: usize, r: usize, alpha: f64) -> Result<Hypergraph> {
    check_alpha(alpha)?;
    let m = ((alpha * n as f64).round() as usize).min(n);
    Hypergraph::complete(m, r)?.with_vertices(n)
}

/// `T_r(round(αn), ℓ)` plus isolated vertices.
pub fn turan_plus_isolated(n: usize, r: usize, ell: usize, alpha: f64) -> Result<Hypergraph> {
    check_alpha(alpha)?;
    let m = ((alpha * n as f64).round() as usize).min(n);
    turan(m, r, ell)?.with_vertices(n)
}

/// The Fano plane, lines `{012, 234, 450, 063, 164, 265, 135}`.
pub fn fano_plane() -> Hypergraph {
    Hypergraph::new(
        7,
        3,
        [
            [0, 1, 2],
            [2, 3, 4],
            [4, 5, 0],
            [0, 6, 3],
            [1, 6, 4],
            [2, 6, 5],
            [1, 3, 5],
        ],
    )
    .expect("static edge list")
}

/// A Steiner triple system on `k` points: Bose for `k ≡ 3`, Skolem for `k ≡ 1 (mod 6)`.
pub fn steiner_triple_system(k: usize) -> Result<Hypergraph> {
    match k % 6 {
        3 => bose(k),
        1 if k >= 7 => skolem(k),
        _ => Err(Error::InvalidParameters(format!(
            "a Steiner triple system on {k} points needs k ≡ 1 or 3 (mod 6), k >= 3"
        ))),
    }
}

/// `k = 6t + 3`: points `(x, i)` of `Z_{2t+1} × Z_3`, labeled `x + i(2t+1)`.
fn bose(k: usize) -> Result<Hypergraph> {
    let m = k / 3;
    let label = |x: usize, i: usize| x + (i % 3) * m;
    // idempotent commutative quasigroup x∘y = (x+y)/2 mod m, m odd
    let half = m.div_ceil(2);
    let op = |x: usize, y: usize| (x + y) * half % m;
    let mut edges: Vec<[usize; 3]> = Vec::new();
    for x in 0..m {
        edges.push([label(x, 0), label(x, 1), label(x, 2)]);
    }
    for x in 0..m {
        for y in x + 1..m {
            for i in 0..3 {
                edges.push([label(x, i), label(y, i), label(op(x, y), i + 1)]);
            }
        }
    }
    Hypergraph::new(k, 3, edges)
}

/// `k = 6t + 1`: points `(x, i)` of `Z_{2t} × Z_3` labeled `x + 2t·i`, plus ∞ = `k - 1`.
fn skolem(k: usize) -> Result<Hypergraph> {
    let m = (k - 1) / 3;
    let t = m / 2;
    let inf = k - 1;
    let label = |x: usize, i: usize| x + (i % 3) * m;
    // half-idempotent commutative quasigroup of order 2t
    let op = |x: usize, y: usize| {
        let s = (x + y) % m;
        if s % 2 == 0 {
            s / 2
        } else {
            (s - 1) / 2 + t
        }
    };
    let mut edges: Vec<[usize; 3]> = Vec::new();
    for x in 0..t {
        edges.push([label(x, 0), label(x, 1), label(x, 2)]);
        for i in 0..3 {
            edges.push([inf, label(x + t, i), label(x, i + 1)]);
        }
    }
    for x in 0..m {
        for y in x + 1..m {
            for i in 0..3 {
                edges.push([label(x, i), label(y, i), label(op(x, y), i + 1)]);
            }
        }
    }
    Hypergraph::new(k, 3, edges)
}

/// Replaces vertex `i` by a class of `sizes[i]` vertices; each edge becomes
/// all transversals of its classes.
pub fn blow_up(h: &Hypergraph, sizes: &[usize]) -> Result<Hypergraph> {
    if sizes.len() != h.n() {
        return Err(Error::InvalidParameters(format!(
            "blow-up needs {} class sizes, got {}",
            h.n(),
            sizes.len()
        )));
    }
    let mut starts = Vec::with_capacity(sizes.len());
    let mut total = 0;
    for &s in sizes {
        starts.push(total);
        total += s;
    }
    let mut edges = Vec::new();
    for e in h.edges() {
        let classes: Vec<(usize, usize)> = e.iter().map(|c| (starts[c], sizes[c])).collect();
        class_products(&classes, &mut VertexSet::new(), &mut edges);
    }
    Hypergraph::from_sets(total, h.r(), edges)
}

fn class_products(classes: &[(usize, usize)], current: &mut VertexSet, out: &mut Vec<VertexSet>) {
    let Some((&(start, size), rest)) = classes.split_first() else {
        out.push(current.clone());
        return;
    };
    for v in start..start + size {
        current.insert(v);
        class_products(rest, current, out);
        current.remove(v);
    }
}

/// Balanced blow-up of the Steiner triple system on `k` points to `n` vertices.
pub fn sts_blowup(n: usize, k: usize) -> Result<Hypergraph> {
    let sts = steiner_triple_system(k)?;
    blow_up(&sts, &balanced_parts(n, k))
}

/// Blow-up of the Fano plane: the line `{0,1,2}` gets classes of weight `α`,
/// the other four points weight `β = (1 - 3α)/4`.
pub fn fano_blowup(n: usize, alpha: f64) -> Result<Hypergraph> {
    if !(1.0 / 7.0 - ALPHA_EPS..=1.0 / 3.0 + ALPHA_EPS).contains(&alpha) {
        return Err(Error::InvalidParameters(format!(
            "fano blow-up needs alpha in [1/7, 1/3], got {alpha}"
        )));
    }
    let alpha = alpha.clamp(1.0 / 7.0, 1.0 / 3.0);
    let beta = (1.0 - 3.0 * alpha) / 4.0;
    let weights = [alpha, alpha, alpha, beta, beta, beta, beta];
    blow_up(&fano_plane(), &apportion(&weights, n))
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::families::{is_cancellative, is_free, ForbiddenFamily};
    use crate::hypergraph::binomial;
    use num_rational::Ratio;

    fn pairs_covered_exactly_once(h: &Hypergraph) -> bool {
        (0..h.n()).all(|u| (u + 1..h.n()).all(|v| h.pair_degree(u, v).unwrap() == 1))
    }

    #[test]
    fn turan_counts() {
        assert_eq!(turan(6, 3, 3).unwrap().len(), 8);
        assert!(turan(2, 3, 3).unwrap().is_empty());
        let t = turan(7, 2, 3).unwrap();
        // ordinary Turán graph with parts 3, 2, 2
        assert_eq!(t.len(), 3 * 2 + 3 * 2 + 2 * 2);
        assert!(turan(6, 3, 2).is_err());
        for (n, r, ell) in [(8, 3, 4), (9, 3, 3), (12, 4, 4), (10, 3, 5)] {
            let t = turan(n, r, ell).unwrap();
            if n % ell == 0 {
                let part = (n / ell) as u128;
                assert_eq!(t.len() as u128, binomial(ell, r) * part.pow(r as u32));
            }
        }
    }

    #[test]
    fn turan_parts_larger_first() {
        assert_eq!(balanced_parts(7, 3), vec![3, 2, 2]);
        assert_eq!(balanced_parts(2, 3), vec![1, 1, 0]);
    }

    #[test]
    fn stars() {
        let s = star(5, 3).unwrap();
        assert_eq!(s.len(), 6);
        assert!(s.edges().all(|e| e.contains(0)));
        assert_eq!(star(3, 3).unwrap().len(), 1);
        assert!(star(2, 3).is_err());
        // shadow density (C(n-1,2) + (n-1)) / C(n,2) tends to one
        for n in [10usize, 40] {
            let d = star(n, 3).unwrap().shadow_density().unwrap();
            let expect = Ratio::new(binomial(n - 1, 2) + (n as u128 - 1), binomial(n, 2));
            assert_eq!(d, expect);
        }
        assert_eq!(
            star(40, 3).unwrap().shadow_density().unwrap(),
            Ratio::from_integer(1)
        );
    }

    #[test]
    fn clique_plus_isolated_extremes() {
        assert_eq!(
            clique_plus_isolated(6, 3, 1.0).unwrap(),
            Hypergraph::complete(6, 3).unwrap()
        );
        assert!(clique_plus_isolated(6, 3, 0.0).unwrap().is_empty());
        assert!(clique_plus_isolated(6, 3, 1.5).is_err());
        // (x, x^{3/2}) within O(1/n)
        let x: f64 = 0.49;
        let h = clique_plus_isolated(100, 3, x.sqrt()).unwrap();
        let to_f = |d: Ratio<u128>| *d.numer() as f64 / *d.denom() as f64;
        assert!((to_f(h.shadow_density().unwrap()) - x).abs() < 2.0 / 100.0);
        assert!((to_f(h.edge_density().unwrap()) - x.powf(1.5)).abs() < 3.0 / 100.0);
    }

    #[test]
    fn turan_plus_isolated_full() {
        assert_eq!(
            turan_plus_isolated(6, 3, 3, 1.0).unwrap(),
            turan(6, 3, 3).unwrap()
        );
        let h = turan_plus_isolated(12, 3, 3, 0.5).unwrap();
        assert_eq!(h.n(), 12);
        assert_eq!(h.len(), 8);
    }

    #[test]
    fn steiner_systems() {
        for k in [3usize, 7, 9, 13, 15, 19, 21, 25, 27] {
            let s = steiner_triple_system(k).unwrap();
            assert_eq!(s.len(), k * (k - 1) / 6, "k = {k}");
            assert!(pairs_covered_exactly_once(&s), "k = {k}");
        }
        for k in [1usize, 4, 5, 6, 8, 11] {
            assert!(steiner_triple_system(k).is_err(), "k = {k}");
        }
        assert!(pairs_covered_exactly_once(&fano_plane()));
    }

    #[test]
    fn blow_ups() {
        let f = fano_plane();
        assert_eq!(blow_up(&f, &[1; 7]).unwrap(), f);
        let edge = Hypergraph::new(3, 3, [[0, 1, 2]]).unwrap();
        assert_eq!(blow_up(&edge, &[2, 2, 2]).unwrap(), turan(6, 3, 3).unwrap());
        assert!(blow_up(&edge, &[2, 2]).is_err());
        let with_empty = blow_up(&edge, &[2, 0, 2]).unwrap();
        assert_eq!((with_empty.n(), with_empty.len()), (4, 0));
        for m in 1..=3 {
            let b = blow_up(&f, &[m; 7]).unwrap();
            assert_eq!(b.len(), 7 * m * m * m);
            assert!(is_cancellative(&b).unwrap().is_free());
        }
    }

    #[test]
    fn sts_blowups() {
        assert_eq!(sts_blowup(7, 7).unwrap(), steiner_triple_system(7).unwrap());
        let h = sts_blowup(21, 7).unwrap();
        assert_eq!(h.len(), 7 * 27);
        // shadow = pairs between distinct classes = C(21,2) - 7*C(3,2)
        assert_eq!(h.shadow_size(), 210 - 21);
        assert!(sts_blowup(20, 8).is_err());
    }

    #[test]
    fn fano_blowup_sizes() {
        let h = fano_blowup(70, 1.0 / 7.0).unwrap();
        assert_eq!(h.len(), 7 * 1000);
        let line = fano_blowup(30, 1.0 / 3.0).unwrap();
        // degenerates to the complete 3-partite graph on classes of 10
        assert_eq!(line.len(), 1000);
        assert!(fano_blowup(30, 0.4).is_err());
        assert!(fano_blowup(30, 0.1).is_err());
        assert_eq!(apportion(&[1.0 / 7.0; 7], 70), vec![10; 7]);
        assert_eq!(apportion(&[1.0, 1.0, 1.0], 5), vec![2, 2, 1]);
    }

    #[test]
    fn fano_blowups_stay_cancellative() {
        for n in [7, 14, 21, 28, 35] {
            for alpha in [1.0 / 7.0, 0.2, 0.25, 1.0 / 3.0] {
                let h = fano_blowup(n, alpha).unwrap();
                assert!(is_cancellative(&h).unwrap().is_free(), "n = {n}, alpha = {alpha}");
            }
        }
    }

    #[test]
    fn turan_is_clique_and_expansion_free() {
        for n in 4..=12 {
            for (r, ell) in [(3, 3), (3, 4), (2, 3), (4, 4)] {
                let t = turan(n, r, ell).unwrap();
                let k = ForbiddenFamily::CoveringClique { r, ell };
                let hx = ForbiddenFamily::ExpansionClique { r, ell };
                assert!(is_free(&t, &k).unwrap().is_free(), "K n={n} r={r} l={ell}");
                assert!(is_free(&t, &hx).unwrap().is_free(), "H n={n} r={r} l={ell}");
            }
        }
    }

    #[test]
    fn stars_avoid_expansions_and_d() {
        for n in 3..=9 {
            let s = star(n, 3).unwrap();
            assert!(is_free(&s, &ForbiddenFamily::ExpansionClique { r: 3, ell: 3 }).unwrap().is_free());
            assert!(is_free(&s, &ForbiddenFamily::D).unwrap().is_free());
        }
        for n in 4..=8 {
            let s = star(n, 4).unwrap();
            assert!(is_free(&s, &ForbiddenFamily::Dr { r: 4 }).unwrap().is_free());
            assert!(is_free(&s, &ForbiddenFamily::ExpansionClique { r: 4, ell: 4 }).unwrap().is_free());
        }
    }

    #[test]
    fn spec_strings() {
        for s in [
            "turan:6:3:3",
            "star:5:3",
            "sts:7",
            "sts-blowup:21:7",
            "fano-blowup:70:0.25",
            "clique+iso:10:3:0.5",
            "turan+iso:12:3:3:0.5",
            "complete:5:3",
        ] {
            let spec: ConstructionSpec = s.parse().unwrap();
            assert_eq!(spec.to_string(), s);
        }
        let spec: ConstructionSpec = "fano-blowup:70:1/7".parse().unwrap();
        assert_eq!(spec.build().unwrap().n(), 70);
        match "turan:6:x:3".parse::<ConstructionSpec>() {
            Err(Error::Parse { pos, .. }) => assert_eq!(pos, 8),
            other => panic!("unexpected {other:?}"),
        }
        assert!(matches!(
            "turan:6:3".parse::<ConstructionSpec>(),
            Err(Error::Parse { .. })
        ));
        assert!(matches!(
            "wheel:6".parse::<ConstructionSpec>(),
            Err(Error::Parse { pos: 0, .. })
        ));
    }
}
