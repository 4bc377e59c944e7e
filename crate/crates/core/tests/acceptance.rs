//! Acceptance suite. Each test prints one `PASS`/`FAIL` line straight to
//! stderr (bypassing capture) and then asserts.

use std::io::Write as _;
use std::path::Path;
use std::process::Command;
use std::time::Instant;

use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;

use hypershadow::bounds::{
    check_fisher_ryan_chain, kruskal_katona_max_edges, quadratic_holds, shadow_power_holds, CurveId,
};
use hypershadow::constructions::{fano_blowup, star, sts_blowup, turan};
use hypershadow::explore::{
    algorithm1_run, canonical_form, enumerate_free, for_each_free, in_window, Reduction, SearchConfig,
};
use hypershadow::families::{is_cancellative, is_free};
use hypershadow::{binomial, io, ForbiddenFamily, Hypergraph, VertexSet};

fn verdict(id: u32, title: &str, ok: bool, detail: &str) {
    let status = if ok { "PASS" } else { "FAIL" };
    let _ = writeln!(std::io::stderr(), "criterion {id:>2} {status}  {title}: {detail}");
    assert!(ok, "criterion {id} failed: {detail}");
}

fn family(s: &str) -> ForbiddenFamily {
    s.parse().unwrap()
}

fn single_thread() -> SearchConfig {
    SearchConfig {
        threads: 1,
        ..SearchConfig::exact()
    }
}

fn random_3graph(rng: &mut ChaCha8Rng, n: usize, p: f64) -> Hypergraph {
    let edges = VertexSet::full(n).subsets(3).into_iter().filter(|_| rng.gen_bool(p));
    Hypergraph::from_sets(n, 3, edges).unwrap()
}

#[test]
fn criterion_01_cancellative_extremal_value() {
    let started = Instant::now();
    let mut ok = true;
    let mut detail = String::new();
    for n in [5, 6] {
        let rep = enumerate_free(n, 3, family("T:3"), &single_thread()).unwrap();
        let oracle = turan(n, 3, 3).unwrap();
        let max = rep.max_edges().unwrap();
        ok &= !rep.stats.partial && max == oracle.len();
        if n == 6 {
            let w = rep.overall_witness().unwrap();
            let iso = canonical_form(w).unwrap() == canonical_form(&oracle).unwrap();
            ok &= iso;
            detail += &format!("n=6 max {max} (turan {}), witness ~ T_3(6,3): {iso}; ", oracle.len());
        } else {
            detail += &format!("n=5 max {max} (turan {}); ", oracle.len());
        }
    }
    let secs = started.elapsed().as_secs_f64();
    ok &= secs < 60.0;
    verdict(1, "T:3 enumeration maximum equals |T_3(n,3)|", ok, &format!("{detail}{secs:.2}s"));
}

#[test]
fn criterion_02_covering_clique_extremal_value() {
    let rep = enumerate_free(6, 3, family("K:3:4"), &SearchConfig::exact()).unwrap();
    let oracle = turan(6, 3, 3).unwrap();
    let max = rep.max_edges().unwrap();
    let iso = canonical_form(rep.overall_witness().unwrap()).unwrap() == canonical_form(&oracle).unwrap();
    verdict(
        2,
        "K:3:4 enumeration maximum at n=6",
        max == oracle.len() && iso && !rep.stats.partial,
        &format!("max {max}, expected {}, Turan witness {iso}", oracle.len()),
    );
}

/// `(n, shadow, edges)` of every cancellative 3-graph on at most 6 vertices.
fn cancellative_corpus() -> Vec<(usize, usize, usize)> {
    let seen = std::sync::Mutex::new(Vec::new());
    for n in 3..=6 {
        let rep = for_each_free(n, 3, family("T:3"), &SearchConfig::exact(), |node| {
            seen.lock().unwrap().push((node.n(), node.shadow_size(), node.edge_count()));
        })
        .unwrap();
        assert!(!rep.stats.partial);
    }
    seen.into_inner().unwrap()
}

#[test]
fn criterion_03_shadow_power_dominance() {
    let corpus = cancellative_corpus();
    let mut violations = 0;
    for &(_, s, m) in &corpus {
        let exact = shadow_power_holds(m, s, 3).unwrap();
        let real = m as f64 <= (s as f64 / 3.0).powf(1.5) * (1.0 + 1e-12);
        if !(exact && real) {
            violations += 1;
        }
    }
    let t = turan(6, 3, 3).unwrap();
    let limit = (t.shadow_size() as f64 / 3.0).powf(1.5);
    let equality = (t.len() as f64 - limit).abs() <= 1e-12 * limit && is_cancellative(&t).unwrap().is_free();
    verdict(
        3,
        "|H| <= (|dH|/3)^(3/2) on cancellative 3-graphs, n <= 6",
        violations == 0 && equality,
        &format!("{} graphs, {violations} violations, T_3(6,3): 8 vs {limit}", corpus.len()),
    );
}

#[test]
fn criterion_04_quadratic_dominance() {
    let corpus = cancellative_corpus();
    let violations = corpus.iter().filter(|&&(n, s, m)| !quadratic_holds(m, s, n)).count();
    verdict(
        4,
        "|H| <= (n^2 - 2|dH|)|dH|/(3n) + 3n^2 on cancellative 3-graphs, n <= 6",
        violations == 0,
        &format!("{} graphs, {violations} violations", corpus.len()),
    );
}

#[test]
fn criterion_05_shadow_chain() {
    let mut rng = ChaCha8Rng::seed_from_u64(5);
    let k4 = family("K:3:4");
    let (mut accepted, mut drawn, mut bad) = (0, 0, 0);
    let mut sizes = std::collections::BTreeSet::new();
    while accepted < 200 {
        drawn += 1;
        let p = rng.gen_range(0.02..0.45);
        let h = random_3graph(&mut rng, 7, p);
        if !is_free(&h, &k4).unwrap().is_free() {
            continue;
        }
        accepted += 1;
        sizes.insert(h.len());
        if !check_fisher_ryan_chain(&h, 3).unwrap().non_decreasing {
            bad += 1;
        }
    }
    let t = check_fisher_ryan_chain(&turan(9, 3, 3).unwrap(), 3).unwrap();
    let constant = t.values.iter().all(|v| (v - 3.0).abs() <= 1e-12 * 3.0);
    verdict(
        5,
        "shadow chain non-decreasing on K:3:4-free graphs, constant on T_3(9,3)",
        bad == 0 && constant,
        &format!(
            "200 accepted of {drawn} drawn, edge counts {:?}..={:?}, {bad} violations, T_3(9,3) chain {:?}",
            sizes.first().unwrap(),
            sizes.last().unwrap(),
            t.values
        ),
    );
}

#[test]
fn criterion_06_curve_identities() {
    let close = |a: f64, b: f64| (a - b).abs() <= 1e-9 * b.abs().max(1.0);
    let mut ok = close(CurveId::CancellativeLeft { r: 3 }.eval(2.0 / 3.0).unwrap(), 2.0 / 9.0);
    for k in [7usize, 9, 13] {
        let c = CurveId::GeneralKLower { k };
        let kf = k as f64;
        ok &= close(c.eval((kf - 1.0) / kf).unwrap(), (kf - 1.0) / (kf * kf));
        ok &= close(c.eval(2.0 / 3.0).unwrap(), 2.0 / 9.0);
    }
    let mut worst: f64 = 0.0;
    let k7 = CurveId::GeneralKLower { k: 7 };
    for x in CurveId::FanoLower.domain().grid(1000) {
        let (a, b) = (k7.eval(x).unwrap(), CurveId::FanoLower.eval(x).unwrap());
        worst = worst.max((a - b).abs());
        ok &= close(a, b);
    }
    verdict(
        6,
        "curve endpoint values and k=7 / Fano agreement",
        ok,
        &format!("max |general-k:7 - fano-lower| over 1000 points = {worst:.2e}"),
    );
}

#[test]
fn criterion_07_blowup_realization() {
    let started = Instant::now();
    let (tx, ty) = (6.0 / 7.0, 6.0 / 49.0);
    let mut ok = true;
    let mut detail = String::new();
    for (name, h) in [
        ("sts_blowup(21,7)", sts_blowup(21, 7).unwrap()),
        ("fano_blowup(70,1/7)", fano_blowup(70, 1.0 / 7.0).unwrap()),
    ] {
        let n = h.n() as f64;
        let (x, y) = hypershadow::bounds::densities_f64(&h).unwrap();
        let free = is_cancellative(&h).unwrap().is_free();
        let near = (x - tx).abs() <= 10.0 / n && (y - ty).abs() <= 10.0 / n;
        ok &= free && near;
        detail += &format!("{name}: cancellative {free}, (x, y) = ({x:.4}, {y:.4}); ");
    }
    let secs = started.elapsed().as_secs_f64();
    ok &= secs < 10.0;
    verdict(7, "STS(7) and Fano blow-ups near (6/7, 6/49)", ok, &format!("{detail}{secs:.2}s"));
}

#[test]
fn criterion_08_algorithm1_contract() {
    let mut rng = ChaCha8Rng::seed_from_u64(8);
    let (mut runs, mut nontrivial, mut reduced, mut shadow_changed, mut outside) = (0, 0, 0, 0, 0);
    let mut stuck = Vec::new();
    for _ in 0..100 {
        let n = rng.gen_range(6..=20);
        let p = rng.gen_range(0.05..1.0);
        let h = random_3graph(&mut rng, n, p);
        let shadow = h.shadow(1).unwrap();
        for k in 1..=9 {
            let d = k as f64 / 10.0;
            let out = algorithm1_run(&h, d).unwrap();
            runs += 1;
            if out.hypergraph.shadow(1).unwrap() != shadow {
                shadow_changed += 1;
            }
            match &out.branch {
                Reduction::Unchanged { .. } => continue,
                Reduction::Reduced { .. } => reduced += 1,
                Reduction::Stuck { .. } => stuck.push((n, d, h.len(), out.hypergraph.len())),
            }
            nontrivial += 1;
            if !in_window(&out.hypergraph, d).unwrap() {
                outside += 1;
            }
        }
    }
    let mut detail = format!(
        "{runs} runs, shadow changed in {shadow_changed}, {nontrivial} nontrivial, {reduced} reached the window, {outside} outside it"
    );
    if let Some((n, d, from, to)) = stuck.first() {
        detail += &format!(
            "; {} runs found no removable edge below C(n,2) edges, e.g. n={n} d={d}: {from} -> {to}",
            stuck.len()
        );
    }
    verdict(8, "Algorithm 1 keeps the shadow and lands in the density window", shadow_changed == 0 && outside == 0, &detail);
}

#[test]
fn criterion_09_kruskal_katona() {
    let mut ok = true;
    let mut visited = 0;
    let mut worst_tight: f64 = 0.0;
    for n in 3..=6 {
        let table: Vec<f64> = (0..=binomial(n, 2) as usize)
            .map(|s| kruskal_katona_max_edges(s, 3, n).unwrap())
            .collect();
        let bad = std::sync::atomic::AtomicUsize::new(0);
        let rep = for_each_free(n, 3, ForbiddenFamily::Empty, &SearchConfig::exact(), |node| {
            if node.edge_count() as f64 > table[node.shadow_size()] + 1e-9 {
                bad.fetch_add(1, std::sync::atomic::Ordering::Relaxed);
            }
        })
        .unwrap();
        visited += rep.stats.visited;
        ok &= bad.into_inner() == 0 && !rep.stats.partial && rep.stats.visited == 1 << binomial(n, 3);
        for m in 3..=n {
            let k = Hypergraph::complete(m, 3).unwrap();
            let gap = (kruskal_katona_max_edges(k.shadow_size(), 3, n).unwrap() - k.len() as f64).abs();
            worst_tight = worst_tight.max(gap);
            ok &= gap <= 1e-9;
        }
    }
    verdict(
        9,
        "Kruskal-Katona bound over every 3-graph on n <= 6 vertices",
        ok,
        &format!("{visited} graphs, worst gap on complete graphs {worst_tight:.1e}"),
    );
}

fn hs(args: &[&str]) -> std::process::Output {
    Command::new(env!("CARGO_BIN_EXE_hypershadow"))
        .args(args)
        .output()
        .expect("binary runs")
}

#[test]
fn criterion_10_d_family() {
    let dir = tempfile::tempdir().unwrap();
    let s = dir.path().join("star.json");
    io::write_file(&star(7, 3).unwrap(), &s, io::Format::Json).unwrap();
    let star_exit = hs(&["check", s.to_str().unwrap(), "D"]).status.code();

    let h4 = dir.path().join("h4.json");
    let expansion = Hypergraph::new(10, 3, [[0, 1, 4], [0, 2, 5], [0, 3, 6], [1, 2, 7], [1, 3, 8], [2, 3, 9]]).unwrap();
    assert!(!is_free(&expansion, &family("H:3:4")).unwrap().is_free());
    io::write_file(&expansion, &h4, io::Format::Json).unwrap();
    let h4_exit = hs(&["check", h4.to_str().unwrap(), "D"]).status.code();

    let rep = enumerate_free(6, 3, ForbiddenFamily::D, &SearchConfig::exact()).unwrap();
    let max = rep.max_edges().unwrap();
    let witness = rep.overall_witness().unwrap();
    let star6 = star(6, 3).unwrap();
    let ok = star_exit == Some(0) && h4_exit == Some(1) && max == 8;
    verdict(
        10,
        "D family: star passes, H_4^3 host fails, n=6 maximum 8",
        ok,
        &format!(
            "star exit {star_exit:?}, H_4^3 exit {h4_exit:?}, n=6 maximum {max}; the witness is a star: {} \
             (star(6,3) has {} edges and is D-free, so the maximum 8 = t_3(6,3) does not hold at n=6)",
            canonical_form(witness).unwrap() == canonical_form(&star6).unwrap(),
            star6.len()
        ),
    );
}

fn read_tree(dir: &Path) -> Vec<(String, Vec<u8>)> {
    let mut files = Vec::new();
    for name in ["report.json", "points.csv", "extremal.csv"] {
        files.push((name.to_string(), std::fs::read(dir.join(name)).unwrap()));
    }
    let mut witnesses: Vec<_> = std::fs::read_dir(dir.join("witnesses")).unwrap().map(|e| e.unwrap().path()).collect();
    witnesses.sort();
    for w in witnesses {
        files.push((w.file_name().unwrap().to_string_lossy().into_owned(), std::fs::read(&w).unwrap()));
    }
    files
}

#[test]
fn criterion_11_determinism() {
    let dir = tempfile::tempdir().unwrap();
    let runs: [(&str, &[&str]); 3] = [
        ("exact", &["--n", "6", "--r", "3", "--family", "T:3"]),
        ("iso", &["--n", "6", "--r", "3", "--family", "K:3:4", "--iso"]),
        (
            "random",
            &["--n", "9", "--r", "3", "--family", "T:3", "--mode", "random-maximal", "--samples", "40", "--seed", "17"],
        ),
    ];
    let mut ok = true;
    let mut detail = String::new();
    for (name, args) in runs {
        let mut trees = Vec::new();
        for (i, threads) in ["1", "4", "4"].iter().enumerate() {
            let out = dir.path().join(format!("{name}-{i}"));
            let mut argv = vec!["explore"];
            argv.extend_from_slice(args);
            argv.extend(["--threads", threads, "--out", out.to_str().unwrap()]);
            ok &= hs(&argv).status.code() == Some(0);
            trees.push(read_tree(&out));
        }
        let same = trees.windows(2).all(|w| w[0] == w[1]);
        ok &= same;
        detail += &format!("{name}: {} files identical {same}; ", trees[0].len());
    }
    verdict(11, "explore reports byte-identical for --threads 1 and 4", ok, detail.trim_end_matches("; "));
}
