//! Shared oracles and generators for the integration suites. Everything
//! here recomputes results from definitions, independent of the library
//! code paths under test.

// Each test binary compiles this module separately and uses its own slice.
#![allow(dead_code)]

use umcf::coloring::{brute_force_verify, Coloring, VerifyKind};
use umcf::graph::Graph;
use umcf::rng::SplitMix64;

/// All labeled graphs on exactly `n` vertices.
pub fn all_graphs(n: usize) -> Vec<Graph> {
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

pub fn connected_graphs(n: usize) -> Vec<Graph> {
    all_graphs(n)
        .into_iter()
        .filter(Graph::is_connected)
        .collect()
}

/// Definition-based unique-maximum chromatic number: the smallest k such
/// that some coloring out of all k^n passes the literal all-paths check.
/// No color symmetry breaking — unique-maximum validity is order-sensitive.
pub fn chi_um_by_definition(g: &Graph) -> usize {
    let n = g.vertex_count();
    if n == 0 {
        return 0;
    }
    for k in 1..=n {
        let mut colors = vec![1usize; n];
        loop {
            let c = Coloring::new(colors.clone()).unwrap();
            if brute_force_verify(g, &c, VerifyKind::UniqueMaximum, u64::MAX)
                .unwrap()
                .is_valid()
            {
                return k;
            }
            // Odometer over base-k digits.
            let mut pos = 0;
            loop {
                if pos == n {
                    break;
                }
                if colors[pos] < k {
                    colors[pos] += 1;
                    break;
                }
                colors[pos] = 1;
                pos += 1;
            }
            if pos == n {
                break;
            }
        }
    }
    unreachable!("n distinct colors are always unique-maximum");
}

/// Random coloring with colors drawn from `1..=k`.
pub fn random_coloring(n: usize, k: usize, rng: &mut SplitMix64) -> Coloring {
    Coloring::new((0..n).map(|_| 1 + rng.next_usize(k)).collect()).unwrap()
}

/// ln without `f64::ln`: atanh series after power-of-two reduction.
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
