//! Deterministic constructors for the graph families used throughout the
//! crate: paths, complete graphs, complete binary trees, square grids, and
//! the recursive hedgehog family, plus the G(n,p) model for test harnesses.

use std::ops::Range;

use crate::graph::Graph;
use crate::rng::SplitMix64;

/// Default ceiling on generated vertex counts; the hedgehog family grows
/// roughly as 2^(k^2/2) and blows past any desk-scale budget quickly.
pub const DEFAULT_VERTEX_CAP: usize = 100_000;

#[derive(Debug, Clone, PartialEq, Eq, thiserror::Error)]
pub enum GenerateError {
    #[error("family instance would have {0} vertices, exceeding the cap of {1}")]
    VertexCapExceeded(usize, usize),
}

/// The path 0 - 1 - ... - (n-1).
pub fn path_graph(n: usize) -> Graph {
    let edges: Vec<(usize, usize)> = (1..n).map(|v| (v - 1, v)).collect();
    Graph::new(n, &edges).unwrap()
}

pub fn complete_graph(n: usize) -> Graph {
    let mut edges = Vec::new();
    for u in 0..n {
        for v in u + 1..n {
            edges.push((u, v));
        }
    }
    Graph::new(n, &edges).unwrap()
}

/// Complete binary tree with `levels` levels, heap-numbered: the children of
/// `i` are `2i+1` and `2i+2`. `levels = 4` gives the 15-vertex tree with 8
/// leaves.
pub fn complete_binary_tree(levels: u32) -> Graph {
    let n = (1usize << levels) - 1;
    let edges: Vec<(usize, usize)> = (1..n).map(|v| ((v - 1) / 2, v)).collect();
    Graph::new(n, &edges).unwrap()
}

/// Coordinate bookkeeping for the m x m grid: `id(x, y) = y * m + x`.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct GridLayout {
    m: usize,
}

impl GridLayout {
    pub fn side(&self) -> usize {
        self.m
    }

    pub fn id(&self, x: usize, y: usize) -> usize {
        debug_assert!(x < self.m && y < self.m);
        y * self.m + x
    }

    pub fn coords(&self, id: usize) -> (usize, usize) {
        (id % self.m, id / self.m)
    }
}

/// The m x m grid graph in row-major numbering, with `x`/`y` labels.
pub fn grid_graph(m: usize) -> (Graph, GridLayout) {
    let layout = GridLayout { m };
    let mut edges = Vec::new();
    for y in 0..m {
        for x in 0..m {
            if x + 1 < m {
                edges.push((layout.id(x, y), layout.id(x + 1, y)));
            }
            if y + 1 < m {
                edges.push((layout.id(x, y), layout.id(x, y + 1)));
            }
        }
    }
    let mut g = Graph::new(m * m, &edges).unwrap();
    for y in 0..m {
        for x in 0..m {
            g.add_label(layout.id(x, y), "x", &x.to_string());
            g.add_label(layout.id(x, y), "y", &y.to_string());
        }
    }
    (g, layout)
}

/// Recursive structure of a hedgehog instance. Level-k hedgehogs consist of
/// a clique on `2^(k+1) - 1` vertices with one level-(k-1) copy hanging off
/// each clique vertex through that copy's port; the level-0 hedgehog is a
/// single vertex serving as its own clique and port.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct HedgehogLayout {
    pub k: u32,
    /// Contiguous id range occupied by this (sub-)hedgehog.
    pub span: Range<usize>,
    /// Clique vertex ids in order; the i-th clique vertex (1-based) attaches
    /// to the i-th copy's port.
    pub clique: Vec<usize>,
    /// Vertex through which this hedgehog attaches to an enclosing clique:
    /// the single vertex at level 0, the first clique vertex otherwise.
    pub port: usize,
    pub copies: Vec<HedgehogLayout>,
}

impl HedgehogLayout {
    pub fn vertex_count(&self) -> usize {
        self.span.len()
    }
}

/// Number of vertices of the level-k hedgehog:
/// `|H_0| = 1`, `|H_k| = (2^(k+1) - 1) * (1 + |H_(k-1)|)`.
pub fn hedgehog_vertex_count(k: u32) -> usize {
    if k == 0 {
        1
    } else {
        ((1usize << (k + 1)) - 1) * (1 + hedgehog_vertex_count(k - 1))
    }
}

pub fn hedgehog(k: u32) -> Result<(Graph, HedgehogLayout), GenerateError> {
    hedgehog_with_cap(k, DEFAULT_VERTEX_CAP)
}

/// Builds the level-k hedgehog. Numbering within each level: clique vertices
/// first, then the copies in clique order, each occupying a contiguous span.
pub fn hedgehog_with_cap(k: u32, cap: usize) -> Result<(Graph, HedgehogLayout), GenerateError> {
    let total = hedgehog_vertex_count(k);
    if total > cap {
        return Err(GenerateError::VertexCapExceeded(total, cap));
    }
    let mut edges = Vec::new();
    let layout = build_hedgehog(k, 0, &mut edges);
    debug_assert_eq!(layout.span, 0..total);
    let mut g = Graph::new(total, &edges).unwrap();
    label_hedgehog(&mut g, &layout);
    Ok((g, layout))
}

fn build_hedgehog(k: u32, base: usize, edges: &mut Vec<(usize, usize)>) -> HedgehogLayout {
    if k == 0 {
        return HedgehogLayout {
            k,
            span: base..base + 1,
            clique: vec![base],
            port: base,
            copies: Vec::new(),
        };
    }
    let clique_size = (1usize << (k + 1)) - 1;
    let clique: Vec<usize> = (base..base + clique_size).collect();
    for i in 0..clique_size {
        for j in i + 1..clique_size {
            edges.push((clique[i], clique[j]));
        }
    }
    let mut next = base + clique_size;
    let mut copies = Vec::with_capacity(clique_size);
    for &cv in &clique {
        let copy = build_hedgehog(k - 1, next, edges);
        next = copy.span.end;
        edges.push((cv, copy.port));
        copies.push(copy);
    }
    HedgehogLayout {
        k,
        span: base..next,
        clique,
        port: base,
        copies,
    }
}

fn label_hedgehog(g: &mut Graph, layout: &HedgehogLayout) {
    for (i, &v) in layout.clique.iter().enumerate() {
        g.add_label(v, "role", &format!("h{}.c{}", layout.k, i + 1));
    }
    for copy in &layout.copies {
        label_hedgehog(g, copy);
    }
}

/// Uniform G(n, p) random graph; the harness model for the property suites.
pub fn gnp(n: usize, p: f64, rng: &mut SplitMix64) -> Graph {
    let mut edges = Vec::new();
    for u in 0..n {
        for v in u + 1..n {
            if rng.next_f64() < p {
                edges.push((u, v));
            }
        }
    }
    Graph::new(n, &edges).unwrap()
}

/// Keeps drawing from G(n, p) until the sample is connected.
pub fn gnp_connected(n: usize, p: f64, rng: &mut SplitMix64) -> Graph {
    loop {
        let g = gnp(n, p, rng);
        if g.is_connected() {
            return g;
        }
    }
}

/// Uniform random labeled tree on `n` vertices (Pruefer decoding).
pub fn random_tree(n: usize, rng: &mut SplitMix64) -> Graph {
    if n <= 1 {
        return path_graph(n);
    }
    if n == 2 {
        return path_graph(2);
    }
    let seq: Vec<usize> = (0..n - 2).map(|_| rng.next_usize(n)).collect();
    let mut degree = vec![1usize; n];
    for &v in &seq {
        degree[v] += 1;
    }
    let mut edges = Vec::new();
    let mut used = vec![false; n];
    for &v in &seq {
        let leaf = (0..n).find(|&u| degree[u] == 1 && !used[u]).unwrap();
        edges.push((leaf.min(v), leaf.max(v)));
        used[leaf] = true;
        degree[leaf] -= 1;
        degree[v] -= 1;
    }
    let rest: Vec<usize> = (0..n).filter(|&u| degree[u] == 1 && !used[u]).collect();
    edges.push((rest[0], rest[1]));
    Graph::new(n, &edges).unwrap()
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn small_families() {
        assert_eq!(path_graph(3).edges(), vec![(0, 1), (1, 2)]);
        assert_eq!(complete_graph(4).edge_count(), 6);
        let b4 = complete_binary_tree(4);
        assert_eq!(b4.vertex_count(), 15);
        let leaves = b4.vertices().filter(|&v| b4.degree(v) == 1).count();
        assert_eq!(leaves, 8);
    }

    #[test]
    fn grids() {
        let (g2, _) = grid_graph(2);
        assert_eq!(g2.vertex_count(), 4);
        assert_eq!(g2.edge_count(), 4);
        assert!(g2.vertices().all(|v| g2.degree(v) == 2));

        let (g3, layout) = grid_graph(3);
        assert_eq!(g3.vertex_count(), 9);
        assert_eq!(g3.edge_count(), 12);
        assert_eq!(layout.id(2, 1), 5);
        assert_eq!(layout.coords(5), (2, 1));

        let (g1, _) = grid_graph(1);
        assert_eq!(g1.vertex_count(), 1);
        assert_eq!(g1.edge_count(), 0);
    }

    #[test]
    fn grid_degree_spectrum() {
        let (g, layout) = grid_graph(5);
        for y in 0..5 {
            for x in 0..5 {
                let corner = (x == 0 || x == 4) && (y == 0 || y == 4);
                let boundary = x == 0 || x == 4 || y == 0 || y == 4;
                let expect = if corner {
                    2
                } else if boundary {
                    3
                } else {
                    4
                };
                assert_eq!(g.degree(layout.id(x, y)), expect);
            }
        }
    }

    #[test]
    fn hedgehog_structure() {
        let (h0, l0) = hedgehog(0).unwrap();
        assert_eq!(h0.vertex_count(), 1);
        assert_eq!(l0.port, 0);

        let (h1, l1) = hedgehog(1).unwrap();
        assert_eq!(h1.vertex_count(), 6);
        assert_eq!(l1.clique, vec![0, 1, 2]);
        // K_3 plus one pendant per clique vertex.
        for (i, copy) in l1.copies.iter().enumerate() {
            assert!(h1.has_edge(l1.clique[i], copy.port));
            assert_eq!(copy.vertex_count(), 1);
        }

        let (h2, l2) = hedgehog(2).unwrap();
        assert_eq!(h2.vertex_count(), 49);
        assert_eq!(hedgehog_vertex_count(2), 49);
        assert_eq!(l2.clique.len(), 7);
        // Clique is a clique; each copy attaches to exactly one clique
        // vertex, through its port only.
        for i in 0..7 {
            for j in i + 1..7 {
                assert!(h2.has_edge(l2.clique[i], l2.clique[j]));
            }
        }
        for (i, copy) in l2.copies.iter().enumerate() {
            let mut cross = 0;
            for v in copy.span.clone() {
                for &w in h2.neighbors(v) {
                    if !copy.span.contains(&w) {
                        cross += 1;
                        assert_eq!(w, l2.clique[i]);
                        assert_eq!(v, copy.port);
                    }
                }
            }
            assert_eq!(cross, 1);
        }

        assert!(matches!(
            hedgehog_with_cap(3, 100),
            Err(GenerateError::VertexCapExceeded(750, 100))
        ));
    }

    #[test]
    fn vertex_count_recurrence() {
        assert_eq!(hedgehog_vertex_count(0), 1);
        assert_eq!(hedgehog_vertex_count(1), 6);
        assert_eq!(hedgehog_vertex_count(2), 49);
        assert_eq!(hedgehog_vertex_count(3), 750);
        let (h3, l3) = hedgehog_with_cap(3, 1000).unwrap();
        assert_eq!(h3.vertex_count(), 750);
        assert_eq!(l3.clique.len(), 15);
        for levels in 1..=6 {
            assert_eq!(
                complete_binary_tree(levels).vertex_count(),
                (1 << levels) - 1
            );
        }
    }

    #[test]
    fn tree_generator_yields_trees() {
        let mut rng = SplitMix64::new(7);
        for n in 1..10 {
            let t = random_tree(n, &mut rng);
            assert_eq!(t.edge_count(), n.saturating_sub(1));
            assert!(t.is_connected());
        }
    }
}
