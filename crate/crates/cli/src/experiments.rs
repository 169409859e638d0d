//! Reproducible experiment drivers. Each experiment emits one table per
//! claim (claim id, statement, expected vs. computed rows, status); all
//! randomness is seeded, so reports are deterministic for a given seed.

use std::fmt::Write as _;

use umcf::coloring::{
    brute_force_verify, cf_coloring_hedgehog, um_coloring_hedgehog, verify_conflict_free,
    verify_unique_maximum, Coloring, VerifyKind,
};
use umcf::game::{
    exhaustive_adversary_min_length, translated_maximizer, vcs_value, vp_value, GameKind,
    RandomMin, VpOutcome,
};
use umcf::generate::{complete_binary_tree, gnp, grid_graph, hedgehog, path_graph};
use umcf::graph::Graph;
use umcf::reduction::{build_reduction, check_reduction_equivalence};
use umcf::rng::SplitMix64;
use umcf::solve::{
    chi_cf_exact, chi_um_exact, closed_form, grid_bounds, CfSolve, ClosedForm, Family,
};

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum Level {
    Desk,
    Stretch,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum Status {
    Pass,
    Fail,
    Inconclusive,
}

impl Status {
    fn label(self) -> &'static str {
        match self {
            Status::Pass => "PASS",
            Status::Fail => "FAIL",
            Status::Inconclusive => "INCONCLUSIVE",
        }
    }
}

#[derive(Debug, Clone)]
pub struct Row {
    pub case: String,
    pub expected: String,
    pub computed: String,
    pub status: Status,
}

#[derive(Debug, Clone)]
pub struct ClaimTable {
    pub id: &'static str,
    pub statement: String,
    pub rows: Vec<Row>,
}

impl ClaimTable {
    pub fn status(&self) -> Status {
        if self.rows.iter().any(|r| r.status == Status::Fail) {
            Status::Fail
        } else if self.rows.iter().any(|r| r.status == Status::Inconclusive) {
            Status::Inconclusive
        } else {
            Status::Pass
        }
    }

    pub fn render(&self) -> String {
        let mut out = String::new();
        writeln!(out, "## claim {}", self.id).unwrap();
        writeln!(out, "statement: {}", self.statement).unwrap();
        writeln!(out, "case | expected | computed | status").unwrap();
        for row in &self.rows {
            writeln!(
                out,
                "{} | {} | {} | {}",
                row.case,
                row.expected,
                row.computed,
                row.status.label()
            )
            .unwrap();
        }
        writeln!(out, "=> {} {}", self.id, self.status().label()).unwrap();
        out
    }
}

fn check(
    case: impl Into<String>,
    expected: impl Into<String>,
    computed: impl Into<String>,
    ok: bool,
) -> Row {
    Row {
        case: case.into(),
        expected: expected.into(),
        computed: computed.into(),
        status: if ok { Status::Pass } else { Status::Fail },
    }
}

pub fn run_experiment(
    name: &str,
    level: Level,
    seed: u64,
    budget: u64,
) -> Result<Vec<ClaimTable>, String> {
    match name {
        "paths" => Ok(experiment_paths(level)),
        "hedgehog" => Ok(experiment_hedgehog(level, budget)),
        "grid" => Ok(experiment_grid(level, budget)),
        "reduction" => Ok(experiment_reduction(seed, budget)),
        "games" => Ok(experiment_games(level, seed)),
        other => Err(format!("unknown experiment `{other}`")),
    }
}

// -------------------------------------------------------------------------
// paths
// -------------------------------------------------------------------------

fn experiment_paths(level: Level) -> Vec<ClaimTable> {
    let (um_max, cf_max) = match level {
        Level::Desk => (16, 12),
        Level::Stretch => (18, 13),
    };
    let mut um_rows = Vec::new();
    for n in 1..=um_max {
        let expected = match closed_form(Family::PathUm, n as u64) {
            ClosedForm::Exact(v) => v as usize,
            ClosedForm::Interval(..) => unreachable!(),
        };
        let (k, cert) = chi_um_exact(&path_graph(n)).unwrap();
        let cert_ok = verify_unique_maximum(&path_graph(n), &cert)
            .unwrap()
            .is_valid();
        um_rows.push(check(
            format!("n={n}"),
            expected.to_string(),
            k.to_string(),
            k == expected && cert_ok,
        ));
    }
    let mut cf_rows = Vec::new();
    for n in 1..=cf_max {
        let expected = match closed_form(Family::PathCf, n as u64) {
            ClosedForm::Exact(v) => v as usize,
            ClosedForm::Interval(..) => unreachable!(),
        };
        let solved = chi_cf_exact(&path_graph(n), 100_000_000).unwrap();
        let computed = solved.exact_k();
        cf_rows.push(check(
            format!("n={n}"),
            expected.to_string(),
            computed.map_or("inconclusive".into(), |k| k.to_string()),
            computed == Some(expected),
        ));
    }
    vec![
        ClaimTable {
            id: "path-um-closed-form",
            statement: format!("chi_um(P_n) = floor(log2 n) + 1 for n = 1..{um_max}"),
            rows: um_rows,
        },
        ClaimTable {
            id: "path-cf-closed-form",
            statement: format!("chi_cf(P_n) = floor(log2 n) + 1 for n = 1..{cf_max}"),
            rows: cf_rows,
        },
    ]
}

// -------------------------------------------------------------------------
// hedgehog
// -------------------------------------------------------------------------

fn experiment_hedgehog(level: Level, budget: u64) -> Vec<ClaimTable> {
    let mut cf_rows = Vec::new();
    for k in 0..=1u32 {
        let (g, layout) = hedgehog(k).unwrap();
        let coloring = cf_coloring_hedgehog(&layout);
        let target = (1usize << (k + 1)) - 1;
        let verdict = verify_conflict_free(&g, &coloring, budget).unwrap();
        cf_rows.push(check(
            format!("k={k}"),
            format!("conflict-free with {target} colors"),
            format!(
                "{} with {} colors",
                if verdict.is_valid() {
                    "valid"
                } else {
                    "not valid"
                },
                coloring.k()
            ),
            verdict.is_valid() && coloring.k() == target,
        ));
    }
    if level == Level::Stretch {
        let (g, layout) = hedgehog(2).unwrap();
        let coloring = cf_coloring_hedgehog(&layout);
        let verdict = verify_conflict_free(&g, &coloring, 10_000_000).unwrap();
        let status = if verdict.is_invalid() {
            Status::Fail
        } else if verdict.is_inconclusive() {
            Status::Inconclusive
        } else {
            Status::Pass
        };
        cf_rows.push(Row {
            case: "k=2 (10^7-path budget)".into(),
            expected: "conflict-free with 7 colors (inconclusive acceptable)".into(),
            computed: format!(
                "{:?} colors={} paths={}",
                status,
                coloring.k(),
                verdict.stats().paths_examined
            ),
            status: if coloring.k() == 7 {
                status
            } else {
                Status::Fail
            },
        });
    }

    let mut um_rows = Vec::new();
    for k in 0..=2u32 {
        let (g, layout) = hedgehog(k).unwrap();
        let coloring = um_coloring_hedgehog(&layout);
        let bound = (1usize << (k + 2)) - k as usize - 3;
        let verdict = verify_unique_maximum(&g, &coloring).unwrap();
        um_rows.push(check(
            format!("k={k}"),
            format!("unique-maximum with <= {bound} colors"),
            format!(
                "{} with {} colors",
                if verdict.is_valid() {
                    "valid"
                } else {
                    "not valid"
                },
                coloring.k()
            ),
            verdict.is_valid() && coloring.k() <= bound,
        ));
    }

    let (h1, _) = hedgehog(1).unwrap();
    let um_h1 = chi_um_exact(&h1).unwrap().0;
    let cf_h1 = chi_cf_exact(&h1, budget).unwrap();
    let exact_rows = vec![
        check(
            "chi_um(H_1)",
            "in [3, 4]",
            um_h1.to_string(),
            (3..=4).contains(&um_h1),
        ),
        check(
            "chi_cf(H_1)",
            "3",
            cf_h1
                .exact_k()
                .map_or("inconclusive".into(), |k| k.to_string()),
            cf_h1.exact_k() == Some(3),
        ),
    ];

    let mut ratio_rows = Vec::new();
    for k in 0..=3u64 {
        let cf = match closed_form(Family::HedgehogCf, k) {
            ClosedForm::Exact(v) => v as f64,
            _ => unreachable!(),
        };
        let (lo, hi) = match closed_form(Family::HedgehogUmInterval, k) {
            ClosedForm::Interval(lo, hi) => (lo as f64, hi as f64),
            _ => unreachable!(),
        };
        ratio_rows.push(check(
            format!("k={k}"),
            "ratio bracket below 2, tending to 2".to_string(),
            format!("[{:.4}, {:.4}]", lo / cf, hi / cf),
            lo <= hi && hi / cf <= 2.0,
        ));
    }

    vec![
        ClaimTable {
            id: "hedgehog-cf-coloring",
            statement: "the recursive conflict-free coloring of H_k is valid and uses exactly 2^(k+1)-1 colors".into(),
            rows: cf_rows,
        },
        ClaimTable {
            id: "hedgehog-um-coloring",
            statement: "the recursive unique-maximum coloring of H_k is valid and uses at most 2^(k+2)-k-3 colors".into(),
            rows: um_rows,
        },
        ClaimTable {
            id: "hedgehog-h1-exact",
            statement: "exact solvers on H_1: chi_um in [3,4], chi_cf = 3".into(),
            rows: exact_rows,
        },
        ClaimTable {
            id: "hedgehog-ratio-trend",
            statement: "chi_um(H_k)/chi_cf(H_k) bracket from the closed forms tends to 2".into(),
            rows: ratio_rows,
        },
    ]
}

// -------------------------------------------------------------------------
// grid
// -------------------------------------------------------------------------

/// ln by the atanh series with power-of-two argument reduction; kept free
/// of `f64::ln` so bound tables have an independent logarithm.
pub fn ln_series(x: f64) -> f64 {
    assert!(x > 0.0);
    let mut m = x;
    let mut k = 0i32;
    while m >= 2.0 {
        m /= 2.0;
        k += 1;
    }
    while m < 1.0 {
        m *= 2.0;
        k -= 1;
    }
    fn atanh_ln(y: f64) -> f64 {
        let z = (y - 1.0) / (y + 1.0);
        let zz = z * z;
        let mut term = z;
        let mut sum = 0.0;
        let mut denom = 1.0;
        while term.abs() > 1e-18 {
            sum += term / denom;
            term *= zz;
            denom += 2.0;
        }
        2.0 * sum
    }
    k as f64 * atanh_ln(2.0) + atanh_ln(m)
}

fn experiment_grid(level: Level, budget: u64) -> Vec<ClaimTable> {
    let m = 10usize;
    let mut bound_rows = Vec::new();
    for bound in grid_bounds(m) {
        let (expected, ok) = match bound.id {
            "um_lower_3m_over_2" => {
                let e = 1.5 * m as f64;
                (format!("{e}"), (bound.value.unwrap() - e).abs() < 1e-12)
            }
            "um_upper_2.519m" => {
                let e = 2.519 * m as f64;
                (format!("{e}"), (bound.value.unwrap() - e).abs() < 1e-12)
            }
            "um_lower_5m_over_3_minus_log5half" => {
                let e = 5.0 / 3.0 * m as f64 - ln_series(m as f64) / ln_series(2.5);
                (
                    format!("{e:.6} (series logarithm)"),
                    (bound.value.unwrap() - e).abs() < 1e-6,
                )
            }
            "cf_lower_5m_over_6_minus_10log2" => {
                let e = 5.0 / 6.0 * m as f64 - 10.0 * ln_series(m as f64) / ln_series(2.0);
                (
                    format!("{e:.6} (series logarithm)"),
                    (bound.value.unwrap() - e).abs() < 1e-6,
                )
            }
            _ => ("no numeric form".into(), bound.value.is_none()),
        };
        bound_rows.push(check(
            bound.id.to_string(),
            expected,
            bound.value.map_or("-".to_string(), |v| format!("{v:.6}")),
            ok,
        ));
    }

    let mut vcs_rows = Vec::new();
    let expectations: &[(usize, Option<usize>)] = &[(1, Some(1)), (2, Some(3)), (3, None)];
    for &(side, expected) in expectations {
        let (g, _) = grid_graph(side);
        let v = vcs_value(&g).unwrap();
        vcs_rows.push(check(
            format!("vcs(G_{side})"),
            expected.map_or("report only".into(), |e| e.to_string()),
            v.to_string(),
            expected.is_none_or(|e| v == e),
        ));
    }
    if level == Level::Stretch {
        let (g4, _) = grid_graph(4);
        let v = vcs_value(&g4).unwrap();
        vcs_rows.push(check("vcs(G_4)", "report only", v.to_string(), true));
    }

    let mut relation_rows = Vec::new();
    let relation_sides: &[usize] = match level {
        Level::Desk => &[2, 3],
        Level::Stretch => &[2, 3, 4],
    };
    for &m_big in relation_sides {
        let (big, _) = grid_graph(m_big);
        let (half, _) = grid_graph(m_big / 2);
        let um_half = chi_um_exact(&half).unwrap().0;
        match chi_cf_exact(&big, budget).unwrap() {
            CfSolve::Exact { k, .. } => relation_rows.push(check(
                format!("m={m_big}"),
                format!("chi_cf(G_{m_big}) >= {um_half}"),
                format!("chi_cf(G_{m_big}) = {k}"),
                k >= um_half,
            )),
            CfSolve::Inconclusive { lower, .. } => relation_rows.push(Row {
                case: format!("m={m_big}"),
                expected: format!("chi_cf(G_{m_big}) >= {um_half}"),
                computed: format!("inconclusive, proven chi_cf >= {lower}"),
                status: if lower >= um_half {
                    Status::Pass
                } else {
                    Status::Inconclusive
                },
            }),
        }
    }

    vec![
        ClaimTable {
            id: "grid-bound-table",
            statement: format!("published grid bounds evaluated at m = {m}"),
            rows: bound_rows,
        },
        ClaimTable {
            id: "grid-vcs-small",
            statement: "component game values of small grids".into(),
            rows: vcs_rows,
        },
        ClaimTable {
            id: "grid-halfgrid-relation",
            statement: "chi_cf(G_m) >= chi_um(G_floor(m/2)) on solvable sizes".into(),
            rows: relation_rows,
        },
    ]
}

// -------------------------------------------------------------------------
// reduction
// -------------------------------------------------------------------------

/// All labeled graphs on exactly `n` vertices.
fn all_graphs(n: usize) -> Vec<Graph> {
    let pairs: Vec<(usize, usize)> = (0..n)
        .flat_map(|u| (u + 1..n).map(move |v| (u, v)))
        .collect();
    (0u64..1 << pairs.len())
        .map(|mask| {
            let edges: Vec<(usize, usize)> = pairs
                .iter()
                .enumerate()
                .filter(|(i, _)| mask >> i & 1 == 1)
                .map(|(_, &e)| e)
                .collect();
            Graph::new(n, &edges).unwrap()
        })
        .collect()
}

fn experiment_reduction(seed: u64, budget: u64) -> Vec<ClaimTable> {
    let mut small_rows = Vec::new();
    for n in 2..=4 {
        let mut agreements = 0usize;
        let mut disagreements = 0usize;
        let mut inconclusive = 0usize;
        let graphs = all_graphs(n);
        let total = graphs.len();
        for g in graphs {
            match check_reduction_equivalence(&g, budget).unwrap().agreement {
                Some(true) => agreements += 1,
                Some(false) => disagreements += 1,
                None => inconclusive += 1,
            }
        }
        small_rows.push(check(
            format!("n={n} ({total} graphs)"),
            format!("{total} agreements"),
            format!("{agreements} agree, {disagreements} disagree, {inconclusive} inconclusive"),
            agreements == total,
        ));
    }

    let mut rng = SplitMix64::new(seed);
    let trials = 200;
    let mut agreements = 0usize;
    let mut failures = Vec::new();
    for t in 0..trials {
        let g = gnp(5, 0.5, &mut rng);
        match check_reduction_equivalence(&g, budget).unwrap().agreement {
            Some(true) => agreements += 1,
            other => failures.push(format!("trial {t}: {other:?}")),
        }
    }
    let random_rows = vec![check(
        format!("{trials} seeded G(5, 1/2) samples"),
        format!("{trials} agreements"),
        if failures.is_empty() {
            format!("{agreements} agreements")
        } else {
            failures.join("; ")
        },
        agreements == trials,
    )];

    // The four-vertex instance drawn in the source construction: a path
    // v1-v2-v3 plus the edge v2-v4.
    let g = Graph::new(4, &[(0, 1), (1, 2), (1, 3)]).unwrap();
    let art = build_reduction(&g).unwrap();
    let expected: &[((usize, usize), usize)] = &[
        ((1, 2), 5),
        ((2, 1), 5),
        ((1, 3), 6),
        ((3, 1), 6),
        ((2, 3), 7),
        ((3, 2), 7),
        ((1, 4), 8),
        ((4, 1), 8),
        ((2, 4), 9),
        ((4, 2), 9),
        ((3, 4), 10),
        ((4, 3), 10),
    ];
    let mut figure_rows = Vec::new();
    for &((i, j), color) in expected {
        let got = art.coloring.color(art.connectors[&(i, j)]);
        figure_rows.push(check(
            format!("connector ({i},{j})"),
            color.to_string(),
            got.to_string(),
            got == color,
        ));
    }

    vec![
        ClaimTable {
            id: "reduction-equivalence-exhaustive",
            statement: "Hamiltonian path exists iff the built coloring is not conflict-free, all graphs on 2..=4 vertices".into(),
            rows: small_rows,
        },
        ClaimTable {
            id: "reduction-equivalence-random",
            statement: "same equivalence on seeded random 5-vertex graphs".into(),
            rows: random_rows,
        },
        ClaimTable {
            id: "reduction-figure-colors",
            statement: "the 4-vertex instance reproduces connector colors 5..10".into(),
            rows: figure_rows,
        },
    ]
}

// -------------------------------------------------------------------------
// games
// -------------------------------------------------------------------------

/// Definition-based unique-maximum chromatic number: smallest k admitting a
/// coloring that passes the literal all-paths check. Enumerates every one
/// of the k^n colorings — color symmetry breaking is unsound here because
/// unique-maximum validity depends on the order of the colors. Independent
/// of the game engine it is compared against.
pub fn chi_um_by_definition(g: &Graph) -> usize {
    let n = g.vertex_count();
    if n == 0 {
        return 0;
    }
    for k in 1..=n {
        let mut colors = vec![0usize; n];
        if try_color(g, k, 0, &mut colors) {
            return k;
        }
    }
    unreachable!("n distinct colors are always unique-maximum");
}

fn try_color(g: &Graph, k: usize, v: usize, colors: &mut Vec<usize>) -> bool {
    if v == g.vertex_count() {
        let c = Coloring::new(colors.clone()).unwrap();
        return brute_force_verify(g, &c, VerifyKind::UniqueMaximum, u64::MAX)
            .unwrap()
            .is_valid();
    }
    for col in 1..=k {
        colors[v] = col;
        if try_color(g, k, v + 1, colors) {
            return true;
        }
    }
    colors[v] = 0;
    false
}

fn connected_graphs_up_to(n_max: usize) -> Vec<Graph> {
    let mut out = Vec::new();
    for n in 1..=n_max {
        out.extend(all_graphs(n).into_iter().filter(Graph::is_connected));
    }
    out
}

fn experiment_games(level: Level, seed: u64) -> Vec<ClaimTable> {
    let n_max = match level {
        Level::Desk => 4,
        Level::Stretch => 5,
    };

    let graphs = connected_graphs_up_to(n_max);
    let total = graphs.len();
    let mut mismatches = Vec::new();
    for g in &graphs {
        let vcs = vcs_value(g).unwrap();
        let oracle = chi_um_by_definition(g);
        if vcs != oracle {
            mismatches.push(format!("{g:?}: vcs={vcs} oracle={oracle}"));
        }
    }
    let duality_rows = vec![check(
        format!("all {total} connected graphs, n <= {n_max}"),
        "0 mismatches".to_string(),
        if mismatches.is_empty() {
            "0 mismatches".to_string()
        } else {
            mismatches.join("; ")
        },
        mismatches.is_empty(),
    )];

    let mut violations = Vec::new();
    for g in &graphs {
        let vp = vp_value(g, 10_000_000).unwrap().exact().unwrap();
        let cf = chi_cf_exact(g, 100_000_000)
            .unwrap()
            .exact_k()
            .expect("small graphs solve exactly");
        if vp > cf {
            violations.push(format!("{g:?}: vp={vp} chi_cf={cf}"));
        }
    }
    let vp_rows = vec![check(
        format!("all {total} connected graphs, n <= {n_max}"),
        "vp <= chi_cf everywhere".to_string(),
        if violations.is_empty() {
            "no violations".to_string()
        } else {
            violations.join("; ")
        },
        violations.is_empty(),
    )];

    let b4 = complete_binary_tree(4);
    let vp_b4 = vp_value(&b4, 100_000_000).unwrap();
    let cf_b4 = chi_cf_exact(&b4, 100_000_000).unwrap();
    let gap_rows = vec![
        check(
            "vp(B_4)",
            "3",
            match vp_b4 {
                VpOutcome::Exact(v) => v.to_string(),
                VpOutcome::Inconclusive { .. } => "inconclusive".into(),
            },
            vp_b4.exact() == Some(3),
        ),
        check(
            "chi_cf(B_4)",
            "4",
            cf_b4
                .exact_k()
                .map_or("inconclusive".into(), |k| k.to_string()),
            cf_b4.exact_k() == Some(4),
        ),
    ];

    let mut translation_rows = Vec::new();
    for (m, guarantee) in [(2usize, 1usize), (3, 1), (4, 3)] {
        let (g, _) = grid_graph(m);
        let mut strat = translated_maximizer(m).unwrap();
        let worst = exhaustive_adversary_min_length(&g, GameKind::Path, &mut strat).unwrap();
        translation_rows.push(check(
            format!("m={m} vs exhaustive adversary"),
            format!(">= {guarantee}"),
            worst.to_string(),
            worst >= guarantee,
        ));
    }
    let (g4, _) = grid_graph(4);
    let trials = 100;
    let mut worst_random = usize::MAX;
    for t in 0..trials {
        let mut strat = translated_maximizer(4).unwrap();
        let mut adversary = RandomMin::new(seed.wrapping_add(t));
        let transcript =
            umcf::game::play_game(&g4, GameKind::Path, &mut strat, &mut adversary).unwrap();
        worst_random = worst_random.min(transcript.length());
    }
    translation_rows.push(check(
        format!("m=4 vs {trials} random adversaries"),
        ">= 3".to_string(),
        format!("min length {worst_random}"),
        worst_random >= 3,
    ));

    vec![
        ClaimTable {
            id: "games-vcs-equals-um",
            statement: "the component game value equals the definition-based chi_um oracle".into(),
            rows: duality_rows,
        },
        ClaimTable {
            id: "games-vp-bounded-by-cf",
            statement: "the path game value never exceeds chi_cf".into(),
            rows: vp_rows,
        },
        ClaimTable {
            id: "games-b4-strict-gap",
            statement: "vp(B_4) = 3 strictly below chi_cf(B_4) = 4".into(),
            rows: gap_rows,
        },
        ClaimTable {
            id: "games-grid-translation",
            statement: "the translated maximizer forces at least vcs of the half grid".into(),
            rows: translation_rows,
        },
    ]
}
