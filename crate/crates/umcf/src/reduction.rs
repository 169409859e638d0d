//! Hardness construction tying conflict-free verification to Hamiltonian
//! paths: from any graph G on n >= 2 vertices, build a graph with two
//! copies of G joined by n connecting paths, colored so that every color
//! occurs exactly twice. The coloring is conflict-free exactly when G has
//! no Hamiltonian path, and the equivalence is checked here empirically by
//! running both sides independently.

use std::collections::BTreeMap;

use crate::coloring::{verify_conflict_free, Coloring, Verdict};
use crate::graph::{Graph, PathWitness};
use crate::solve::SolveError;

pub const DEFAULT_HAM_CAP: usize = 12;

#[derive(Debug, Clone, PartialEq, Eq, thiserror::Error)]
pub enum ReductionError {
    #[error("the construction needs at least 2 vertices, got {0}")]
    TooSmall(usize),
    #[error(transparent)]
    Solve(#[from] SolveError),
}

/// The built instance: the doubled graph, its paired coloring, and where
/// every role vertex landed. Role indices are 1-based, matching the colors
/// they induce.
#[derive(Debug, Clone)]
pub struct ReductionArtifact {
    pub gstar: Graph,
    pub coloring: Coloring,
    /// `up[i-1]` is the vertex of role "upper copy of v_i".
    pub up: Vec<usize>,
    /// `down[i-1]` is the vertex of role "lower copy of v_i".
    pub down: Vec<usize>,
    /// `(i, j) -> connector vertex` for `i != j`, both 1-based.
    pub connectors: BTreeMap<(usize, usize), usize>,
    /// Full vertex sequence of each connecting path, upper endpoint first.
    pub connecting_paths: Vec<Vec<usize>>,
}

impl ReductionArtifact {
    /// Source graph size.
    pub fn base_n(&self) -> usize {
        self.up.len()
    }
}

/// Builds the doubled graph and its coloring.
///
/// Vertex numbering: upper copy `0..n`, lower copy `n..2n`, then the
/// connectors grouped by path index i with ascending j. Colors: the two
/// copies of v_i share color i; the connector pair (i,j)/(j,i) with i > j
/// shares color `n + C(i-1, 2) + j`.
pub fn build_reduction(g: &Graph) -> Result<ReductionArtifact, ReductionError> {
    let n = g.vertex_count();
    if n < 2 {
        return Err(ReductionError::TooSmall(n));
    }
    let up: Vec<usize> = (0..n).collect();
    let down: Vec<usize> = (n..2 * n).collect();
    let mut connectors = BTreeMap::new();
    let mut next_id = 2 * n;
    for i in 1..=n {
        for j in (1..=n).filter(|&j| j != i) {
            connectors.insert((i, j), next_id);
            next_id += 1;
        }
    }
    let total = next_id;
    debug_assert_eq!(total, 2 * n + n * (n - 1));

    let mut edges = Vec::new();
    for (a, b) in g.edges() {
        edges.push((up[a], up[b]));
        edges.push((down[a], down[b]));
    }
    let mut connecting_paths = Vec::with_capacity(n);
    for i in 1..=n {
        let mut seq = vec![up[i - 1]];
        seq.extend((1..=n).filter(|&j| j != i).map(|j| connectors[&(i, j)]));
        seq.push(down[i - 1]);
        for pair in seq.windows(2) {
            edges.push((pair[0], pair[1]));
        }
        connecting_paths.push(seq);
    }
    let mut gstar = Graph::new(total, &edges).expect("construction yields a simple graph");

    let binom2 = |x: usize| x * x.saturating_sub(1) / 2;
    let mut colors = vec![0usize; total];
    for i in 1..=n {
        colors[up[i - 1]] = i;
        colors[down[i - 1]] = i;
    }
    for i in 1..=n {
        for j in (1..=n).filter(|&j| j != i) {
            let (hi, lo) = (i.max(j), i.min(j));
            colors[connectors[&(i, j)]] = n + binom2(hi - 1) + lo;
        }
    }
    for i in 1..=n {
        gstar.add_label(up[i - 1], "role", &format!("up:{i}"));
        gstar.add_label(down[i - 1], "role", &format!("down:{i}"));
        for j in (1..=n).filter(|&j| j != i) {
            gstar.add_label(connectors[&(i, j)], "role", &format!("conn:{i},{j}"));
        }
    }
    let coloring = Coloring::new(colors).expect("all roles colored");
    Ok(ReductionArtifact {
        gstar,
        coloring,
        up,
        down,
        connectors,
        connecting_paths,
    })
}

/// Exact Hamiltonian path search by dynamic programming over (vertex
/// subset, endpoint) states.
pub fn hamiltonian_path_exists(g: &Graph) -> Result<Option<PathWitness>, SolveError> {
    hamiltonian_path_capped(g, DEFAULT_HAM_CAP)
}

pub fn hamiltonian_path_capped(g: &Graph, cap: usize) -> Result<Option<PathWitness>, SolveError> {
    let n = g.vertex_count();
    if n > cap {
        return Err(SolveError::CapExceeded { n, cap });
    }
    if n == 0 {
        return Ok(None);
    }
    if n == 1 {
        return Ok(Some(PathWitness::new(g, vec![0]).unwrap()));
    }
    let mut adj = vec![0u64; n];
    for (u, v) in g.edges() {
        adj[u] |= 1 << v;
        adj[v] |= 1 << u;
    }
    let full = (1u64 << n) - 1;
    // parent[mask][end]: predecessor of `end` on a path covering `mask`.
    let mut reach = vec![0u64; 1 << n];
    let mut parent = vec![vec![usize::MAX; n]; 1 << n];
    for v in 0..n {
        reach[1 << v] |= 1 << v;
        parent[1 << v][v] = v;
    }
    for mask in 1..=full {
        let mut ends = reach[mask as usize];
        while ends != 0 {
            let end = ends.trailing_zeros() as usize;
            ends &= ends - 1;
            let mut ext = adj[end] & !mask;
            while ext != 0 {
                let w = ext.trailing_zeros() as usize;
                ext &= ext - 1;
                let next = mask | (1 << w);
                if reach[next as usize] & (1 << w) == 0 {
                    reach[next as usize] |= 1 << w;
                    parent[next as usize][w] = end;
                }
            }
        }
    }
    if reach[full as usize] == 0 {
        return Ok(None);
    }
    let last = reach[full as usize].trailing_zeros() as usize;
    let mut seq = Vec::with_capacity(n);
    let mut mask = full;
    let mut cur = last;
    loop {
        seq.push(cur);
        let prev = parent[mask as usize][cur];
        if prev == cur {
            break;
        }
        mask &= !(1 << cur);
        cur = prev;
    }
    seq.reverse();
    Ok(Some(
        PathWitness::new(g, seq).expect("dp yields a valid path"),
    ))
}

/// The explicit violating path from the equivalence proof: given a
/// Hamiltonian ordering of the base graph, weave through both copies by
/// descending the first connecting path, stepping across the lower copy,
/// ascending the next, and so on. The result covers every vertex, so every
/// color on it occurs exactly twice.
pub fn zigzag_violation_path(art: &ReductionArtifact, ham: &PathWitness) -> PathWitness {
    let mut seq = Vec::with_capacity(art.gstar.vertex_count());
    for (t, &base_v) in ham.vertices().iter().enumerate() {
        let i = base_v + 1;
        let path = &art.connecting_paths[i - 1];
        if t % 2 == 0 {
            seq.extend(path.iter().copied());
        } else {
            seq.extend(path.iter().rev().copied());
        }
    }
    PathWitness::new(&art.gstar, seq).expect("zigzag over a Hamiltonian ordering is a simple path")
}

/// Both sides of the equivalence, computed independently.
#[derive(Debug, Clone)]
pub struct EquivalenceReport {
    pub hamiltonian: Option<PathWitness>,
    pub cf_verdict: Verdict,
    /// The proof path, built whenever a Hamiltonian path exists, together
    /// with whether it indeed carries no uniquely occurring color.
    pub zigzag: Option<(PathWitness, bool)>,
    /// `Some(true)` when the two sides agreed (Hamiltonian path exists iff
    /// the coloring is not conflict-free), `None` when the conflict-free
    /// search was inconclusive.
    pub agreement: Option<bool>,
}

/// Decides Hamiltonicity of `g` and conflict-freeness of the built coloring
/// separately and reports whether they disagree. A budget-starved
/// conflict-free search yields `agreement: None`, never a claimed pass.
pub fn check_reduction_equivalence(
    g: &Graph,
    budget: u64,
) -> Result<EquivalenceReport, ReductionError> {
    let art = build_reduction(g)?;
    let hamiltonian = hamiltonian_path_exists(g)?;
    let cf_verdict = verify_conflict_free(&art.gstar, &art.coloring, budget)
        .expect("construction coloring is total");
    let zigzag = hamiltonian.as_ref().map(|h| {
        let path = zigzag_violation_path(&art, h);
        let confirmed = !crate::coloring::path_has_unique_color(&art.coloring, path.vertices());
        (path, confirmed)
    });
    let agreement = if cf_verdict.is_inconclusive() {
        None
    } else {
        Some(hamiltonian.is_some() == cf_verdict.is_invalid())
    };
    Ok(EquivalenceReport {
        hamiltonian,
        cf_verdict,
        zigzag,
        agreement,
    })
}
