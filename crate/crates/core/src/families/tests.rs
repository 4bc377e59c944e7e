use proptest::prelude::*;

use super::cancellative::find_triple_naive;
use super::*;
use crate::constructions::{blow_up, fano_plane, star, steiner_triple_system, turan};
use crate::vset::VertexSet;

fn expansion_graph(r: usize, core: usize) -> Hypergraph {
    let mut next = core;
    let mut edges = Vec::new();
    for u in 0..core {
        for v in u + 1..core {
            let mut e = vec![u, v];
            for _ in 0..r - 2 {
                e.push(next);
                next += 1;
            }
            edges.push(e);
        }
    }
    Hypergraph::new(next, r, edges).unwrap()
}

fn k4_minus() -> Hypergraph {
    Hypergraph::new(4, 3, [[0, 1, 2], [0, 1, 3], [0, 2, 3]]).unwrap()
}

fn arb_3graph(max_n: usize) -> impl Strategy<Value = Hypergraph> {
    (4usize..=max_n).prop_flat_map(|n| {
        let all = VertexSet::full(n).subsets(3);
        let m = all.len();
        proptest::collection::vec(proptest::bool::weighted(0.3), m).prop_map(move |pick| {
            Hypergraph::from_sets(
                n,
                3,
                all.iter().zip(pick).filter(|(_, p)| *p).map(|(e, _)| e.clone()),
            )
            .unwrap()
        })
    })
}

#[test]
fn fano_is_cancellative() {
    assert!(is_cancellative(&fano_plane()).unwrap().is_free());
    assert!(find_triple_naive(&fano_plane()).is_none());
}

#[test]
fn k4_minus_witness() {
    let d = is_cancellative(&k4_minus()).unwrap();
    let w = d.witness().unwrap();
    assert_eq!(w.family, "T:3");
    assert_eq!(w.edges, vec![vec![0, 1, 2], vec![0, 1, 3], vec![0, 2, 3]]);
    assert!(verify_witness(&k4_minus(), &ForbiddenFamily::Cancellative { r: 3 }, w));
}

#[test]
fn f5_is_not_cancellative() {
    let f5 = Hypergraph::new(5, 3, [[0, 1, 2], [0, 1, 3], [2, 3, 4]]).unwrap();
    let d = is_cancellative(&f5).unwrap();
    assert!(!d.is_free());
    // {012} △ {013} = {2,3} ⊆ {234}
    assert_eq!(d.witness().unwrap().edges[2], vec![2, 3, 4]);
}

#[test]
fn cancellative_rejects_one_uniform() {
    let h = Hypergraph::new(3, 1, [[0], [1]]).unwrap();
    assert!(is_cancellative(&h).is_err());
}

#[test]
fn covering_clique_examples() {
    assert!(contains_covering_clique(&turan(6, 3, 3).unwrap(), 3).unwrap().is_free());
    let k4 = Hypergraph::complete(4, 3).unwrap();
    let d = contains_covering_clique(&k4, 3).unwrap();
    assert_eq!(d.witness().unwrap().vertices, vec![0, 1, 2, 3]);
    let s5 = star(5, 3).unwrap();
    let d = contains_covering_clique(&s5, 3).unwrap();
    assert_eq!(d.witness().unwrap().vertices, vec![0, 1, 2, 3]);
    assert!(verify_witness(&s5, &ForbiddenFamily::CoveringClique { r: 3, ell: 3 }, d.witness().unwrap()));
    // too few vertices is not an error
    assert!(contains_covering_clique(&Hypergraph::complete(4, 3).unwrap(), 4).unwrap().is_free());
    assert!(contains_covering_clique(&k4, 2).is_err());
}

#[test]
fn expansion_examples() {
    for n in 4..=10 {
        assert!(contains_expansion(&star(n, 3).unwrap(), 3).unwrap().is_free());
    }
    for n in 6..=12 {
        assert!(contains_expansion(&turan(n, 3, 3).unwrap(), 3).unwrap().is_free());
    }
    let k10 = Hypergraph::complete(10, 3).unwrap();
    let d = contains_expansion(&k10, 3).unwrap();
    let w = d.witness().unwrap();
    assert_eq!(w.vertices, vec![0, 1, 2, 3]);
    assert!(verify_witness(&k10, &ForbiddenFamily::ExpansionClique { r: 3, ell: 3 }, w));
    // nine vertices cannot host the ten-vertex expansion
    assert!(contains_expansion(&Hypergraph::complete(9, 3).unwrap(), 3).unwrap().is_free());
    let h43 = expansion_graph(3, 4);
    assert!(!contains_expansion(&h43, 3).unwrap().is_free());
}

#[test]
fn d_family_examples() {
    for n in 3..=9 {
        assert!(contains_d_member(&star(n, 3).unwrap()).unwrap().is_free());
    }
    let h43 = expansion_graph(3, 4);
    let d = contains_d_member(&h43).unwrap();
    assert!(verify_witness(&h43, &ForbiddenFamily::D, d.witness().unwrap()));
    assert!(contains_d_member(&turan(6, 3, 3).unwrap()).unwrap().is_free());
    // complete 3-graph on 4 vertices: the four triples share no vertex
    assert!(!contains_d_member(&Hypergraph::complete(4, 3).unwrap()).unwrap().is_free());
    assert!(contains_d_member(&Hypergraph::complete(5, 4).unwrap()).is_err());
}

#[test]
fn dr_family_examples() {
    for n in 4..=8 {
        assert!(contains_dr_member(&star(n, 4).unwrap(), 4).unwrap().is_free());
    }
    let h54 = expansion_graph(4, 5);
    let d = contains_dr_member(&h54, 4).unwrap();
    assert!(verify_witness(&h54, &ForbiddenFamily::Dr { r: 4 }, d.witness().unwrap()));
    assert!(contains_dr_member(&turan(8, 4, 4).unwrap(), 4).unwrap().is_free());
    assert!(contains_dr_member(&h54, 3).is_err());
}

#[test]
fn is_free_dispatch() {
    let k4 = Hypergraph::complete(4, 3).unwrap();
    assert!(is_free(&k4, &ForbiddenFamily::Empty).unwrap().is_free());
    let edge = Hypergraph::new(3, 3, [[0, 1, 2]]).unwrap();
    let blown = blow_up(&edge, &[4, 4, 4]).unwrap();
    assert_eq!(blown.n(), 12);
    assert!(is_free(&blown, &ForbiddenFamily::Cancellative { r: 3 }).unwrap().is_free());
    let padded = k4_minus().with_vertices(8).unwrap();
    assert!(!is_free(&padded, &ForbiddenFamily::Cancellative { r: 3 }).unwrap().is_free());
    assert!(is_free(&padded, &ForbiddenFamily::Cancellative { r: 4 }).is_err());
}

#[test]
fn family_strings() {
    for s in ["empty", "T:3", "K:3:4", "H:4:6", "D", "Dr:5"] {
        let f: ForbiddenFamily = s.parse().unwrap();
        assert_eq!(f.to_string(), s);
    }
    assert_eq!(
        "K:3:4".parse::<ForbiddenFamily>().unwrap(),
        ForbiddenFamily::CoveringClique { r: 3, ell: 3 }
    );
    assert!("K:3:3".parse::<ForbiddenFamily>().is_err()); // l = 2 < r
    assert!("Dr:2".parse::<ForbiddenFamily>().is_err());
    assert!("T:1".parse::<ForbiddenFamily>().is_err());
    assert!(matches!(
        "K:3:x".parse::<ForbiddenFamily>(),
        Err(Error::Parse { pos: 4, .. })
    ));
    assert!("Q".parse::<ForbiddenFamily>().is_err());
}

#[test]
fn sts_blowups_are_cancellative() {
    for k in [7usize, 9] {
        let sts = steiner_triple_system(k).unwrap();
        for m in 1..=3 {
            let b = blow_up(&sts, &vec![m; k]).unwrap();
            assert!(b.n() <= 3 * k);
            assert!(is_cancellative(&b).unwrap().is_free(), "k = {k}, m = {m}");
        }
    }
}

#[test]
fn tracker_rejects_non_free_start() {
    assert!(FreeTracker::from_hypergraph(&k4_minus(), ForbiddenFamily::Cancellative { r: 3 }).is_err());
    let t = FreeTracker::from_hypergraph(&fano_plane(), ForbiddenFamily::Cancellative { r: 3 }).unwrap();
    assert_eq!(t.hypergraph(), &fano_plane());
}

fn families_for_3graphs() -> Vec<ForbiddenFamily> {
    vec![
        ForbiddenFamily::Empty,
        ForbiddenFamily::Cancellative { r: 3 },
        ForbiddenFamily::CoveringClique { r: 3, ell: 3 },
        ForbiddenFamily::CoveringClique { r: 3, ell: 4 },
        ForbiddenFamily::ExpansionClique { r: 3, ell: 3 },
        ForbiddenFamily::D,
        ForbiddenFamily::Dr { r: 3 },
    ]
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(64))]

    #[test]
    fn indexed_cancellative_matches_naive(h in arb_3graph(8)) {
        let fast = is_cancellative(&h).unwrap();
        let slow = find_triple_naive(&h);
        prop_assert_eq!(fast.witness().map(|w| w.edges.clone()), slow.map(|t| t.to_vec()));
    }

    #[test]
    fn witnesses_replay(h in arb_3graph(10)) {
        for f in families_for_3graphs() {
            if let Some(w) = is_free(&h, &f).unwrap().witness() {
                prop_assert!(verify_witness(&h, &f, w), "family {} witness {:?}", f, w);
            }
        }
    }

    #[test]
    fn cross_family_implications(h in arb_3graph(10)) {
        let hx = !contains_expansion(&h, 3).unwrap().is_free();
        let d = !contains_d_member(&h).unwrap().is_free();
        let k = !contains_covering_clique(&h, 3).unwrap().is_free();
        prop_assert!(!hx || d, "expansion without D member");
        prop_assert!(!d || k, "D member without covering clique");
        prop_assert!(!hx || k);
    }

    #[test]
    fn containment_is_monotone(h in arb_3graph(8), extra in proptest::collection::vec(any::<prop::sample::Index>(), 1..6)) {
        let all = VertexSet::full(h.n()).subsets(3);
        for f in families_for_3graphs() {
            let mut g = h.clone();
            let mut contained = !is_free(&g, &f).unwrap().is_free();
            for idx in &extra {
                g.insert_edge(idx.get(&all).clone()).unwrap();
                let now = !is_free(&g, &f).unwrap().is_free();
                prop_assert!(!contained || now, "family {} lost containment", f);
                contained = now;
            }
        }
    }

    #[test]
    fn tracker_agrees_with_detectors(n in 5usize..=8, order in any::<u64>()) {
        use rand::seq::SliceRandom;
        use rand::SeedableRng;
        let mut rng = rand_chacha::ChaCha8Rng::seed_from_u64(order);
        let mut all = VertexSet::full(n).subsets(3);
        all.shuffle(&mut rng);
        for f in families_for_3graphs() {
            let mut t = FreeTracker::new(n, 3, f).unwrap();
            for e in &all {
                let mut next = t.hypergraph().clone();
                next.insert_edge(e.clone()).unwrap();
                let expect = !is_free(&next, &f).unwrap().is_free();
                prop_assert_eq!(t.would_create(e), expect, "family {} edge {:?}", f, e);
                if !expect {
                    prop_assert!(t.try_insert(e.clone()).unwrap());
                }
            }
            // drop a few edges and recheck the indexes stay consistent
            let present: Vec<VertexSet> = t.hypergraph().edges().cloned().collect();
            for e in present.iter().step_by(2) {
                prop_assert!(t.remove(e));
            }
            for e in &all {
                if t.hypergraph().contains_edge(e) {
                    continue;
                }
                let mut next = t.hypergraph().clone();
                next.insert_edge(e.clone()).unwrap();
                let expect = !is_free(&next, &f).unwrap().is_free();
                prop_assert_eq!(t.would_create(e), expect, "after removal, family {}", f);
            }
        }
    }
}

#[test]
fn tracker_handles_four_uniform_cancellative() {
    use rand::seq::SliceRandom;
    use rand::SeedableRng;
    let f = ForbiddenFamily::Cancellative { r: 4 };
    for seed in 0..4u64 {
        let mut rng = rand_chacha::ChaCha8Rng::seed_from_u64(seed);
        let mut all = VertexSet::full(8).subsets(4);
        all.shuffle(&mut rng);
        let mut t = FreeTracker::new(8, 4, f).unwrap();
        for e in &all {
            let mut next = t.hypergraph().clone();
            next.insert_edge(e.clone()).unwrap();
            let expect = !is_free(&next, &f).unwrap().is_free();
            assert_eq!(t.would_create(e), expect);
            if !expect {
                t.try_insert(e.clone()).unwrap();
            }
        }
    }
}
