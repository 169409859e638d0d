//! Vertex colorings and the three verifiers.
//!
//! A coloring is valid *unique-maximum* when on every simple path the
//! largest color occurs exactly once, and valid *conflict-free* when every
//! simple path carries some color occurring exactly once. Properness is the
//! two-vertex special case. Unique-maximum validity is decided in polynomial
//! time through separator recursion; conflict-freeness has no such shortcut
//! and is decided by a pruned exhaustive path search under an explicit
//! budget, with a literal brute-force checker alongside as the oracle.

use crate::generate::HedgehogLayout;
use crate::graph::{Graph, PathWitness, VertexSubset};

#[derive(Debug, Clone, PartialEq, Eq, thiserror::Error)]
pub enum ColoringError {
    #[error("color {0} at vertex {1} is not positive")]
    NonPositiveColor(usize, usize),
    #[error("coloring covers {0} vertices but the graph has {1}")]
    SizeMismatch(usize, usize),
}

/// Total assignment of positive colors `1..=k` to the vertices `0..n`,
/// where `k` is the largest color actually used.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Coloring {
    colors: Vec<usize>,
    k: usize,
}

impl Coloring {
    pub fn new(colors: Vec<usize>) -> Result<Coloring, ColoringError> {
        for (v, &c) in colors.iter().enumerate() {
            if c == 0 {
                return Err(ColoringError::NonPositiveColor(c, v));
            }
        }
        let k = colors.iter().copied().max().unwrap_or(0);
        Ok(Coloring { colors, k })
    }

    pub fn color(&self, v: usize) -> usize {
        self.colors[v]
    }

    pub fn colors(&self) -> &[usize] {
        &self.colors
    }

    /// Number of colors, i.e. the maximum color used.
    pub fn k(&self) -> usize {
        self.k
    }

    pub fn len(&self) -> usize {
        self.colors.len()
    }

    pub fn is_empty(&self) -> bool {
        self.colors.is_empty()
    }

    /// Restriction to an induced subgraph given the old-id -> new-id map
    /// returned by the destructive graph operations.
    pub fn restrict(&self, map: &[Option<usize>], new_n: usize) -> Coloring {
        let mut colors = vec![0; new_n];
        for (old, slot) in map.iter().enumerate() {
            if let Some(new) = slot {
                colors[*new] = self.colors[old];
            }
        }
        Coloring::new(colors).expect("restriction of a total coloring is total")
    }
}

/// Search effort counters attached to every verdict.
#[derive(Debug, Clone, Copy, Default, PartialEq, Eq)]
pub struct VerifyStats {
    /// Simple paths the verifier examined. The conflict-free search counts
    /// every DFS-visited path (each traversal direction separately); the
    /// proper check counts edges as two-vertex paths; the unique-maximum
    /// separator recursion only materializes a path for its witness.
    pub paths_examined: u64,
}

/// Outcome of a verification: valid, invalid with a violating path, or
/// inconclusive because the search budget ran out first. Inconclusive is
/// never collapsed into valid.
#[derive(Debug, Clone, PartialEq, Eq)]
pub enum Verdict {
    Valid {
        stats: VerifyStats,
    },
    Invalid {
        witness: PathWitness,
        stats: VerifyStats,
    },
    Inconclusive {
        stats: VerifyStats,
    },
}

impl Verdict {
    pub fn is_valid(&self) -> bool {
        matches!(self, Verdict::Valid { .. })
    }

    pub fn is_invalid(&self) -> bool {
        matches!(self, Verdict::Invalid { .. })
    }

    pub fn is_inconclusive(&self) -> bool {
        matches!(self, Verdict::Inconclusive { .. })
    }

    pub fn witness(&self) -> Option<&PathWitness> {
        match self {
            Verdict::Invalid { witness, .. } => Some(witness),
            _ => None,
        }
    }

    pub fn stats(&self) -> VerifyStats {
        match self {
            Verdict::Valid { stats }
            | Verdict::Invalid { stats, .. }
            | Verdict::Inconclusive { stats } => *stats,
        }
    }
}

fn check_total(g: &Graph, c: &Coloring) -> Result<(), ColoringError> {
    if c.len() != g.vertex_count() {
        return Err(ColoringError::SizeMismatch(c.len(), g.vertex_count()));
    }
    Ok(())
}

/// Valid iff no edge is monochromatic; the witness is the offending edge as
/// a two-vertex path.
pub fn verify_proper(g: &Graph, c: &Coloring) -> Result<Verdict, ColoringError> {
    check_total(g, c)?;
    let mut examined = 0u64;
    for (u, v) in g.edges() {
        examined += 1;
        if c.color(u) == c.color(v) {
            return Ok(Verdict::Invalid {
                witness: PathWitness::new(g, vec![u, v]).unwrap(),
                stats: VerifyStats {
                    paths_examined: examined,
                },
            });
        }
    }
    Ok(Verdict::Valid {
        stats: VerifyStats {
            paths_examined: examined,
        },
    })
}

/// Polynomial unique-maximum check: in every connected component the
/// maximum color must occur exactly once; delete that vertex and recurse.
/// On failure the witness is a concrete path joining two maximum-colored
/// vertices of the offending component.
pub fn verify_unique_maximum(g: &Graph, c: &Coloring) -> Result<Verdict, ColoringError> {
    check_total(g, c)?;
    let mut worklist = g.connected_components(&g.full_set());
    let mut examined = 0u64;
    while let Some(comp) = worklist.pop() {
        let max_color = comp.iter().map(|v| c.color(v)).max().unwrap();
        let mut holders = comp.iter().filter(|&v| c.color(v) == max_color);
        let first = holders.next().unwrap();
        if let Some(second) = holders.next() {
            let path = g
                .bfs_path(&comp, first, second)
                .expect("same component, path exists");
            examined += 1;
            return Ok(Verdict::Invalid {
                witness: PathWitness::new(g, path).unwrap(),
                stats: VerifyStats {
                    paths_examined: examined,
                },
            });
        }
        let rest = comp.without(first);
        if !rest.is_empty() {
            worklist.extend(g.connected_components(&rest));
        }
    }
    Ok(Verdict::Valid {
        stats: VerifyStats {
            paths_examined: examined,
        },
    })
}

/// Exhaustive conflict-free check: searches for a simple path on which
/// every occurring color occurs at least twice. A partial path is extended
/// only while every color occurring exactly once on it can still be doubled
/// by an unvisited vertex of that color; the pruning is exact. Runs out of
/// `budget` examined paths before finishing -> inconclusive.
pub fn verify_conflict_free(
    g: &Graph,
    c: &Coloring,
    budget: u64,
) -> Result<Verdict, ColoringError> {
    check_total(g, c)?;
    verify_conflict_free_within(g, c, &g.full_set(), budget)
}

/// [`verify_conflict_free`] restricted to the subgraph induced by `within`.
pub fn verify_conflict_free_within(
    g: &Graph,
    c: &Coloring,
    within: &VertexSubset,
    budget: u64,
) -> Result<Verdict, ColoringError> {
    check_total(g, c)?;
    let k = c.k();
    // remaining[col] = unvisited vertices of that color inside `within`.
    let mut remaining = vec![0u32; k + 1];
    for v in within.iter() {
        remaining[c.color(v)] += 1;
    }
    let mut search = CfSearch {
        g,
        c,
        within,
        budget,
        examined: 0,
        count_on_path: vec![0u32; k + 1],
        once: 0,
        undoubleable: 0,
        remaining,
        path: Vec::new(),
        visited: VertexSubset::empty(g.vertex_count()),
    };
    for start in within.iter() {
        match search.dfs(start) {
            CfFlow::Continue => {}
            CfFlow::Found(witness) => {
                return Ok(Verdict::Invalid {
                    witness,
                    stats: VerifyStats {
                        paths_examined: search.examined,
                    },
                })
            }
            CfFlow::OutOfBudget => {
                return Ok(Verdict::Inconclusive {
                    stats: VerifyStats {
                        paths_examined: search.examined,
                    },
                })
            }
        }
    }
    Ok(Verdict::Valid {
        stats: VerifyStats {
            paths_examined: search.examined,
        },
    })
}

enum CfFlow {
    Continue,
    Found(PathWitness),
    OutOfBudget,
}

struct CfSearch<'a> {
    g: &'a Graph,
    c: &'a Coloring,
    within: &'a VertexSubset,
    budget: u64,
    examined: u64,
    count_on_path: Vec<u32>,
    /// Colors occurring exactly once on the current path.
    once: u32,
    /// Once-colors with no unvisited vertex left to double them.
    undoubleable: u32,
    remaining: Vec<u32>,
    path: Vec<usize>,
    visited: VertexSubset,
}

impl CfSearch<'_> {
    fn dfs(&mut self, v: usize) -> CfFlow {
        if self.examined == self.budget {
            return CfFlow::OutOfBudget;
        }
        self.examined += 1;

        let col = self.c.color(v);
        self.path.push(v);
        self.visited.insert(v);
        self.remaining[col] -= 1;
        self.count_on_path[col] += 1;
        // A color is "undoubleable" while it occurs exactly once on the path
        // and no unvisited vertex carries it. That state can only be entered
        // when the first occurrence is pushed (a second push would need an
        // unvisited copy), and only left by the matching pop.
        match self.count_on_path[col] {
            1 => {
                self.once += 1;
                if self.remaining[col] == 0 {
                    self.undoubleable += 1;
                }
            }
            2 => self.once -= 1,
            _ => {}
        }

        let mut flow = CfFlow::Continue;
        if self.once == 0 {
            // Every color on the path occurs at least twice: violation.
            let mut seq = self.path.clone();
            if seq.len() >= 2 && seq[0] > *seq.last().unwrap() {
                seq.reverse();
            }
            flow = CfFlow::Found(PathWitness::new(self.g, seq).unwrap());
        } else if self.undoubleable == 0 {
            // Some color is still unique but each unique color can in
            // principle be doubled: keep extending.
            let last = *self.path.last().unwrap();
            for i in 0..self.g.neighbors(last).len() {
                let w = self.g.neighbors(last)[i];
                if self.within.contains(w) && !self.visited.contains(w) {
                    match self.dfs(w) {
                        CfFlow::Continue => {}
                        stop => {
                            flow = stop;
                            break;
                        }
                    }
                }
            }
        }

        match self.count_on_path[col] {
            1 => {
                self.once -= 1;
                if self.remaining[col] == 0 {
                    self.undoubleable -= 1;
                }
            }
            2 => self.once += 1,
            _ => {}
        }
        self.count_on_path[col] -= 1;
        self.remaining[col] += 1;
        self.visited.remove(v);
        self.path.pop();
        flow
    }
}

/// Which of the two path-coloring definitions to check literally.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum VerifyKind {
    UniqueMaximum,
    ConflictFree,
}

/// Literal definition check over every simple path, via the generic path
/// enumerator. Exists purely as an independent oracle for the two real
/// verifiers; exponential, so only sensible for small graphs.
pub fn brute_force_verify(
    g: &Graph,
    c: &Coloring,
    kind: VerifyKind,
    budget: u64,
) -> Result<Verdict, ColoringError> {
    check_total(g, c)?;
    let mut witness: Option<PathWitness> = None;
    let outcome = g.for_each_simple_path(&g.full_set(), budget, |p| {
        if witness.is_some() {
            return;
        }
        let violates = match kind {
            VerifyKind::UniqueMaximum => !path_has_unique_maximum(c, p.vertices()),
            VerifyKind::ConflictFree => !path_has_unique_color(c, p.vertices()),
        };
        if violates {
            witness = Some(p.clone());
        }
    });
    let stats = VerifyStats {
        paths_examined: outcome.emitted(),
    };
    match witness {
        Some(w) => Ok(Verdict::Invalid { witness: w, stats }),
        None if outcome.is_exhausted() => Ok(Verdict::Valid { stats }),
        None => Ok(Verdict::Inconclusive { stats }),
    }
}

/// True when the maximum color on `path` occurs exactly once.
pub fn path_has_unique_maximum(c: &Coloring, path: &[usize]) -> bool {
    let max = path.iter().map(|&v| c.color(v)).max().unwrap();
    path.iter().filter(|&&v| c.color(v) == max).count() == 1
}

/// True when some color on `path` occurs exactly once.
pub fn path_has_unique_color(c: &Coloring, path: &[usize]) -> bool {
    let mut counts = std::collections::HashMap::new();
    for &v in path {
        *counts.entry(c.color(v)).or_insert(0u32) += 1;
    }
    counts.values().any(|&cnt| cnt == 1)
}

/// Binary-ruler coloring of the n-vertex path: the center gets the largest
/// color, then recurse on the halves. Uses floor(log2 n) + 1 colors and is
/// unique-maximum.
pub fn um_coloring_path(n: usize) -> Coloring {
    fn fill(colors: &mut [usize], lo: usize, hi: usize) {
        if lo >= hi {
            return;
        }
        let len = hi - lo;
        let mid = lo + (hi - lo) / 2;
        colors[mid] = (usize::BITS - len.leading_zeros()) as usize;
        fill(colors, lo, mid);
        fill(colors, mid + 1, hi);
    }
    let mut colors = vec![0; n];
    fill(&mut colors, 0, n);
    Coloring::new(colors).unwrap()
}

const fn clique_size(k: u32) -> usize {
    (1usize << (k + 1)) - 1
}

/// Conflict-free coloring of a hedgehog with exactly `2^(k+1) - 1` colors:
/// clique vertex i gets color i; copy i is colored recursively, shifted by
/// i, with colors wrapped into `1..=2^(k+1)-1` (residue 0 becomes the
/// modulus itself).
pub fn cf_coloring_hedgehog(layout: &HedgehogLayout) -> Coloring {
    let mut colors = vec![0usize; layout.span.end];
    fill_cf(layout, &mut colors);
    colors.drain(..layout.span.start);
    Coloring::new(colors).unwrap()
}

fn fill_cf(layout: &HedgehogLayout, colors: &mut [usize]) {
    if layout.k == 0 {
        colors[layout.port] = 1;
        return;
    }
    let modulus = clique_size(layout.k);
    for (i, &v) in layout.clique.iter().enumerate() {
        colors[v] = i + 1;
    }
    for (i, copy) in layout.copies.iter().enumerate() {
        fill_cf(copy, colors);
        for v in copy.span.clone() {
            let shifted = colors[v] + i + 1;
            colors[v] = if shifted > modulus {
                shifted - modulus
            } else {
                shifted
            };
        }
    }
}

/// Unique-maximum coloring of a hedgehog with at most `2^(k+2) - k - 3`
/// colors: every copy reuses one recursive coloring on the low colors and
/// the clique takes the distinct highest colors.
pub fn um_coloring_hedgehog(layout: &HedgehogLayout) -> Coloring {
    let mut colors = vec![0usize; layout.span.end];
    fill_um(layout, &mut colors);
    colors.drain(..layout.span.start);
    Coloring::new(colors).unwrap()
}

fn fill_um(layout: &HedgehogLayout, colors: &mut [usize]) -> usize {
    if layout.k == 0 {
        colors[layout.port] = 1;
        return 1;
    }
    let mut copy_colors = 0;
    for copy in &layout.copies {
        copy_colors = fill_um(copy, colors);
    }
    for (i, &v) in layout.clique.iter().enumerate() {
        colors[v] = copy_colors + i + 1;
    }
    copy_colors + clique_size(layout.k)
}
