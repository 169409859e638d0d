//! Acceptance suite: one test per criterion, each printing a PASS line
//! with its measurements once its assertions hold.

mod common;

use std::time::Instant;

use common::{all_graphs, chi_um_by_definition, connected_graphs, ln_series};
use umcf::coloring::{
    brute_force_verify, path_has_unique_color, path_has_unique_maximum, VerifyKind,
};
use umcf::coloring::{
    cf_coloring_hedgehog, um_coloring_hedgehog, verify_conflict_free, verify_unique_maximum,
};
use umcf::game::{
    exhaustive_adversary_min_length, path_spanning_cycle, translated_maximizer, vcs_value,
    vp_value, Direction, GameKind, QuadrupleMap,
};
use umcf::generate::{complete_binary_tree, gnp, grid_graph, hedgehog, path_graph};
use umcf::graph::{Graph, VertexSubset};
use umcf::reduction::{build_reduction, check_reduction_equivalence};
use umcf::rng::SplitMix64;
use umcf::solve::{chi_cf_exact, chi_exact, chi_um_exact, grid_bounds, CfSolve};

#[test]
fn criterion_01_path_closed_forms() {
    let start = Instant::now();
    for n in 1..=16usize {
        let expected = n.ilog2() as usize + 1;
        let (k, cert) = chi_um_exact(&path_graph(n)).unwrap();
        assert_eq!(k, expected, "chi_um(P_{n})");
        assert!(verify_unique_maximum(&path_graph(n), &cert)
            .unwrap()
            .is_valid());
    }
    for n in 1..=12usize {
        let expected = n.ilog2() as usize + 1;
        let solved = chi_cf_exact(&path_graph(n), 100_000_000).unwrap();
        assert_eq!(solved.exact_k(), Some(expected), "chi_cf(P_{n})");
    }
    let elapsed = start.elapsed();
    assert!(elapsed.as_secs() < 60, "took {elapsed:?}, limit 60 s");
    println!("ACCEPTANCE 01 path closed forms (um n<=16, cf n<=12): PASS in {elapsed:?}");
}

#[test]
fn criterion_02_hedgehog_conflict_free() {
    let start = Instant::now();
    for k in 0..=1u32 {
        let (g, layout) = hedgehog(k).unwrap();
        let coloring = cf_coloring_hedgehog(&layout);
        assert_eq!(
            coloring.k(),
            (1usize << (k + 1)) - 1,
            "color count for k={k}"
        );
        let verdict = verify_conflict_free(&g, &coloring, 10_000_000).unwrap();
        assert!(verdict.is_valid(), "hedgehog {k} coloring must verify");
    }
    let mandatory = start.elapsed();
    assert!(
        mandatory.as_secs() < 10,
        "mandatory part took {mandatory:?}"
    );

    // Stretch: level 2 under a 10^7-path budget. Inconclusive is
    // acceptable; an invalid verdict is not.
    let (g2, layout2) = hedgehog(2).unwrap();
    let coloring2 = cf_coloring_hedgehog(&layout2);
    assert_eq!(coloring2.k(), 7);
    let verdict2 = verify_conflict_free(&g2, &coloring2, 10_000_000).unwrap();
    assert!(
        !verdict2.is_invalid(),
        "hedgehog 2 coloring reported invalid: {:?}",
        verdict2.witness().map(|w| w.vertices().to_vec())
    );
    println!(
        "ACCEPTANCE 02 hedgehog conflict-free colorings (k<=1 mandatory in {mandatory:?}; k=2 {}): PASS",
        if verdict2.is_valid() { "valid" } else { "inconclusive" }
    );
}

#[test]
fn criterion_03_hedgehog_unique_maximum() {
    for k in 0..=2u32 {
        let (g, layout) = hedgehog(k).unwrap();
        let coloring = um_coloring_hedgehog(&layout);
        let bound = (1usize << (k + 2)) - k as usize - 3;
        assert!(
            coloring.k() <= bound,
            "k={k}: {} colors, bound {bound}",
            coloring.k()
        );
        assert!(verify_unique_maximum(&g, &coloring).unwrap().is_valid());
    }
    let (h1, _) = hedgehog(1).unwrap();
    let um = chi_um_exact(&h1).unwrap().0;
    assert!((3..=4).contains(&um), "chi_um(H_1) = {um}, bracket [3, 4]");
    let cf = chi_cf_exact(&h1, 10_000_000).unwrap();
    assert_eq!(cf.exact_k(), Some(3), "chi_cf(H_1)");
    println!(
        "ACCEPTANCE 03 hedgehog unique-maximum colorings (chi_um(H_1)={um}, chi_cf(H_1)=3): PASS"
    );
}

#[test]
fn criterion_04_component_game_equals_um() {
    let start = Instant::now();
    let mut checked = 0usize;
    for n in 1..=5 {
        for g in connected_graphs(n) {
            let vcs = vcs_value(&g).unwrap();
            let oracle = chi_um_by_definition(&g);
            assert_eq!(vcs, oracle, "mismatch on {g:?}");
            checked += 1;
        }
    }
    let elapsed = start.elapsed();
    assert!(elapsed.as_secs() < 300, "took {elapsed:?}, limit 5 min");
    println!(
        "ACCEPTANCE 04 vcs = definition-based chi_um on all {checked} connected graphs n<=5: PASS in {elapsed:?}"
    );
}

#[test]
fn criterion_05_path_game_bound_and_gap() {
    for n in 1..=5 {
        for g in connected_graphs(n) {
            let vp = vp_value(&g, 10_000_000).unwrap().exact().unwrap();
            let cf = chi_cf_exact(&g, 100_000_000).unwrap().exact_k().unwrap();
            assert!(vp <= cf, "vp={vp} > chi_cf={cf} on {g:?}");
        }
    }
    let b4 = complete_binary_tree(4);
    let vp_b4 = vp_value(&b4, 100_000_000).unwrap().exact().unwrap();
    assert_eq!(vp_b4, 3, "vp(B_4)");
    match chi_cf_exact(&b4, 100_000_000).unwrap() {
        CfSolve::Exact { k, nodes, .. } => {
            assert_eq!(k, 4, "chi_cf(B_4)");
            assert!(nodes <= 14_348_907, "refutation nodes {nodes} > 3^15");
        }
        other => panic!("chi_cf(B_4) inconclusive: {other:?}"),
    }
    println!(
        "ACCEPTANCE 05 vp <= chi_cf on n<=5 and the strict gap vp(B_4)=3 < chi_cf(B_4)=4: PASS"
    );
}

#[test]
fn criterion_06_reduction_equivalence() {
    let budget = 10_000_000u64;
    let mut checked = 0usize;
    for n in 2..=4 {
        for g in all_graphs(n) {
            let report = check_reduction_equivalence(&g, budget).unwrap();
            assert_eq!(report.agreement, Some(true), "disagreement on {g:?}");
            if let Some((_, confirmed)) = report.zigzag {
                assert!(confirmed, "zigzag carries a unique color on {g:?}");
            }
            checked += 1;
        }
    }
    let mut rng = SplitMix64::new(0xced0);
    for _ in 0..200 {
        let g = gnp(5, 0.5, &mut rng);
        let report = check_reduction_equivalence(&g, budget).unwrap();
        assert_eq!(report.agreement, Some(true), "disagreement on {g:?}");
        checked += 1;
    }

    // The drawn 4-vertex instance: path v1-v2-v3 plus edge v2-v4.
    let figure = Graph::new(4, &[(0, 1), (1, 2), (1, 3)]).unwrap();
    let art = build_reduction(&figure).unwrap();
    let expected: &[((usize, usize), usize)] = &[
        ((1, 2), 5),
        ((1, 3), 6),
        ((2, 3), 7),
        ((1, 4), 8),
        ((2, 4), 9),
        ((3, 4), 10),
    ];
    for &((i, j), color) in expected {
        assert_eq!(art.coloring.color(art.connectors[&(i, j)]), color);
        assert_eq!(art.coloring.color(art.connectors[&(j, i)]), color);
    }
    println!(
        "ACCEPTANCE 06 reduction equivalence on {checked} instances, figure colors 5..10 exact: PASS"
    );
}

#[test]
fn criterion_07_grid_strategy_translation() {
    // vcs(G_2) = 3, against the definition-based oracle.
    let (g2, _) = grid_graph(2);
    assert_eq!(chi_um_by_definition(&g2), 3);
    assert_eq!(vcs_value(&g2).unwrap(), 3);

    // Translated maximizer on G_4 survives three rounds against every
    // possible adversary.
    let (g4, _) = grid_graph(4);
    let mut strat = translated_maximizer(4).unwrap();
    let worst = exhaustive_adversary_min_length(&g4, GameKind::Path, &mut strat).unwrap();
    assert!(
        worst >= 3,
        "translated maximizer forced only {worst} rounds"
    );

    // vp(G_2) >= vcs(G_1) = 1, and the odd side goes through the
    // (m-1)-subgrid: the translated strategy on G_3 must play legally and
    // meet the same trivial guarantee.
    let (g1, _) = grid_graph(1);
    assert_eq!(vcs_value(&g1).unwrap(), 1);
    let vp_g2 = vp_value(&g2, 10_000_000).unwrap().exact().unwrap();
    assert!(vp_g2 >= 1);
    let (g3, _) = grid_graph(3);
    let mut strat3 = translated_maximizer(3).unwrap();
    let worst3 = exhaustive_adversary_min_length(&g3, GameKind::Path, &mut strat3).unwrap();
    assert!(worst3 >= 1);

    println!(
        "ACCEPTANCE 07 grid translation (vcs(G_2)=3, G_4 worst case {worst}, odd m legal): PASS"
    );
}

#[test]
fn criterion_08a_subgraph_monotonicity() {
    let mut rng = SplitMix64::new(0x5a5a);
    let mut cases = 0;
    while cases < 500 {
        let n = 2 + rng.next_usize(5); // 2..=6
        let g = gnp(n, 0.3 + 0.5 * rng.next_f64(), &mut rng);
        let cf = chi_cf_exact(&g, 100_000_000).unwrap().exact_k().unwrap();
        let um = chi_um_exact(&g).unwrap().0;
        if rng.next_usize(2) == 0 && g.edge_count() > 0 {
            let edges = g.edges();
            let e = edges[rng.next_usize(edges.len())];
            let h = g.delete_edge(e).unwrap();
            let cf_h = chi_cf_exact(&h, 100_000_000).unwrap().exact_k().unwrap();
            let um_h = chi_um_exact(&h).unwrap().0;
            assert!(
                cf_h <= cf && um_h <= um,
                "edge deletion raised a chromatic number"
            );
        } else {
            let v = rng.next_usize(n);
            let (h, _) = g.delete_vertex(v).unwrap();
            let cf_h = chi_cf_exact(&h, 100_000_000).unwrap().exact_k().unwrap();
            let um_h = chi_um_exact(&h).unwrap().0;
            assert!(
                cf_h <= cf && um_h <= um,
                "vertex deletion raised a chromatic number"
            );
        }
        cases += 1;
    }
    println!("ACCEPTANCE 08a subgraph monotonicity over {cases} seeded cases: PASS");
}

#[test]
fn criterion_08b_chromatic_chain() {
    let mut rng = SplitMix64::new(0xc4a1);
    let mut cases = 0;
    while cases < 500 {
        let n = 1 + rng.next_usize(6); // 1..=6
        let g = gnp(n, rng.next_f64(), &mut rng);
        let chi = chi_exact(&g).unwrap().0;
        let cf = chi_cf_exact(&g, 100_000_000).unwrap().exact_k().unwrap();
        let um = chi_um_exact(&g).unwrap().0;
        assert!(
            chi <= cf && cf <= um,
            "chain violated: {chi} {cf} {um} on {g:?}"
        );
        if cf > 0 {
            assert!(um < (1 << cf), "um={um} > 2^{cf}-1 on {g:?}");
        }
        cases += 1;
    }
    println!(
        "ACCEPTANCE 08b chi <= chi_cf <= chi_um <= 2^chi_cf - 1 over {cases} seeded cases: PASS"
    );
}

#[test]
fn criterion_08c_vertex_deletion_lower_bound() {
    let mut graphs = 0usize;
    for n in 1..=6 {
        for g in connected_graphs(n) {
            let um = chi_um_exact(&g).unwrap().0;
            for v in 0..n {
                let (h, _) = g.delete_vertex(v).unwrap();
                let um_h = chi_um_exact(&h).unwrap().0;
                assert!(
                    um_h + 1 >= um,
                    "chi_um dropped by more than one deleting {v} from {g:?}"
                );
            }
            graphs += 1;
        }
    }
    println!(
        "ACCEPTANCE 08c chi_um(G-v) >= chi_um(G)-1 exhaustively on {graphs} connected graphs n<=6: PASS"
    );
}

#[test]
fn criterion_08d_induced_minor_colorings_stay_valid() {
    let mut rng = SplitMix64::new(0x313a);
    let mut cases = 0;
    while cases < 500 {
        let n = 2 + rng.next_usize(6); // 2..=7
        let mut g = gnp(n, 0.3 + 0.5 * rng.next_f64(), &mut rng);
        let (_, mut coloring) = chi_um_exact(&g).unwrap();
        assert!(verify_unique_maximum(&g, &coloring).unwrap().is_valid());
        for _ in 0..3 {
            if g.vertex_count() <= 1 {
                break;
            }
            match rng.next_usize(3) {
                0 if g.edge_count() > 0 => {
                    let edges = g.edges();
                    let e = edges[rng.next_usize(edges.len())];
                    let (h, hc, _) = g.contract_edge(Some(&coloring), e).unwrap();
                    g = h;
                    coloring = hc.unwrap();
                }
                1 if g.edge_count() > 0 => {
                    let edges = g.edges();
                    let e = edges[rng.next_usize(edges.len())];
                    g = g.delete_edge(e).unwrap();
                }
                _ => {
                    let v = rng.next_usize(g.vertex_count());
                    let (h, map) = g.delete_vertex(v).unwrap();
                    coloring = coloring.restrict(&map, h.vertex_count());
                    g = h;
                }
            }
            assert!(
                verify_unique_maximum(&g, &coloring).unwrap().is_valid(),
                "induced coloring stopped being unique-maximum"
            );
        }
        cases += 1;
    }
    println!("ACCEPTANCE 08d induced minor colorings stay unique-maximum over {cases} seeded cases: PASS");
}

/// Random connected subset of the half grid, grown by seeded BFS.
fn random_connected_set(g: &Graph, size: usize, rng: &mut SplitMix64) -> VertexSubset {
    let n = g.vertex_count();
    let mut set = VertexSubset::empty(n);
    let mut frontier = vec![rng.next_usize(n)];
    set.insert(frontier[0]);
    while set.len() < size {
        let grow: Vec<usize> = frontier
            .iter()
            .flat_map(|&v| g.neighbors(v).iter().copied())
            .filter(|&w| !set.contains(w))
            .collect();
        if grow.is_empty() {
            break;
        }
        let pick = grow[rng.next_usize(grow.len())];
        set.insert(pick);
        frontier.push(pick);
    }
    set
}

#[test]
fn criterion_08e_path_spanning_cycles() {
    let mut rng = SplitMix64::new(0x9e37);
    let mut cases = 0;
    while cases < 500 {
        let m = 2 * (1 + rng.next_usize(6)); // even, 2..=12
        let qm = QuadrupleMap::new(m).unwrap();
        let half = qm.small_grid().clone();
        let size = 1 + rng.next_usize(half.vertex_count());
        let s = random_connected_set(&half, size, &mut rng);
        let cycle = path_spanning_cycle(&qm, &s).unwrap();

        let (host, _) = grid_graph(m);
        assert!(umcf::game::is_simple_cycle(&host, &cycle));
        let got = VertexSubset::from_ids(m * m, &cycle);
        assert_eq!(got, qm.tau_set(&s), "cycle does not cover tau(S)");

        for v in s.iter() {
            for d in Direction::ALL {
                if qm.is_open(&s, v, d) {
                    let (a, b) = qm.d_edge(v, d);
                    let len = cycle.len();
                    let on_cycle = (0..len).any(|i| {
                        let pair = (cycle[i], cycle[(i + 1) % len]);
                        pair == (a, b) || pair == (b, a)
                    });
                    assert!(on_cycle, "open {d:?}-edge of {v} missing from cycle");
                }
            }
        }
        cases += 1;
    }
    println!("ACCEPTANCE 08e path-spanning cycle coverage and open-edge invariants over {cases} seeded cases: PASS");
}

#[test]
fn criterion_09_verifier_oracle_equivalence() {
    let mut rng = SplitMix64::new(0x0dd5);
    let mut cases = 0;
    let budget = u64::MAX;
    while cases < 1000 {
        let n = 1 + rng.next_usize(7); // 1..=7
        let g = gnp(n, rng.next_f64(), &mut rng);
        let coloring = if rng.next_usize(4) == 0 {
            // Mix in solver certificates so the valid branches get traffic.
            chi_um_exact(&g).unwrap().1
        } else {
            common::random_coloring(n, 1 + rng.next_usize(n), &mut rng)
        };

        let fast_um = verify_unique_maximum(&g, &coloring).unwrap();
        let slow_um = brute_force_verify(&g, &coloring, VerifyKind::UniqueMaximum, budget).unwrap();
        assert_eq!(
            fast_um.is_valid(),
            slow_um.is_valid(),
            "um disagreement on {g:?}"
        );
        if let Some(w) = fast_um.witness() {
            assert!(!path_has_unique_maximum(&coloring, w.vertices()));
        }

        let fast_cf = verify_conflict_free(&g, &coloring, budget).unwrap();
        let slow_cf = brute_force_verify(&g, &coloring, VerifyKind::ConflictFree, budget).unwrap();
        assert_eq!(
            fast_cf.is_valid(),
            slow_cf.is_valid(),
            "cf disagreement on {g:?}"
        );
        if let Some(w) = fast_cf.witness() {
            assert!(!path_has_unique_color(&coloring, w.vertices()));
        }
        cases += 1;
    }
    println!("ACCEPTANCE 09 verifier/oracle agreement on {cases} seeded (graph, coloring) pairs n<=7: PASS");
}

#[test]
fn criterion_10_bound_evaluator() {
    let bounds = grid_bounds(10);
    let value = |id: &str| bounds.iter().find(|b| b.id == id).unwrap().value.unwrap();
    assert_eq!(value("um_lower_3m_over_2"), 15.0);
    assert!((value("um_upper_2.519m") - 25.19).abs() < 1e-12);

    let independent = 5.0 / 3.0 * 10.0 - ln_series(10.0) / ln_series(2.5);
    let reported = value("um_lower_5m_over_3_minus_log5half");
    assert!(
        (reported - independent).abs() < 1e-6,
        "reported {reported}, series gives {independent}"
    );
    println!(
        "ACCEPTANCE 10 grid bound evaluator (15, 25.19, {reported:.6} vs series {independent:.6}): PASS"
    );
}
