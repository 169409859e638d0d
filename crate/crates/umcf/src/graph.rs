//! Immutable undirected simple graphs with the subset, separator, minor,
//! and path-enumeration machinery the rest of the crate is built on.

use std::fmt;

use crate::coloring::Coloring;

/// Errors raised by graph construction and the structural operations.
#[derive(Debug, Clone, PartialEq, Eq, thiserror::Error)]
pub enum GraphError {
    #[error("vertex {0} out of range (graph has {1} vertices)")]
    VertexOutOfRange(usize, usize),
    #[error("self-loop on vertex {0}")]
    SelfLoop(usize),
    #[error("duplicate edge ({0}, {1})")]
    DuplicateEdge(usize, usize),
    #[error("({0}, {1}) is not an edge")]
    NotAnEdge(usize, usize),
    #[error("operation requires a connected graph")]
    Disconnected,
    #[error("operation requires a nonempty vertex set")]
    EmptySet,
    #[error("vertex sequence is not a simple path: {0}")]
    NotAPath(String),
}

/// Immutable undirected simple graph on vertices `0..n`.
///
/// Neighbor lists are kept sorted, so every traversal in the crate is
/// deterministic. Labels are opaque per-vertex `key=value` metadata used by
/// the file format and the generators; no algorithm reads them.
#[derive(Clone, PartialEq, Eq)]
pub struct Graph {
    n: usize,
    adj: Vec<Vec<usize>>,
    edge_count: usize,
    labels: Vec<Vec<(String, String)>>,
}

impl fmt::Debug for Graph {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "Graph(n={}, edges={:?})", self.n, self.edges())
    }
}

impl Graph {
    /// Builds a graph from an edge list, rejecting self-loops, duplicate
    /// edges, and out-of-range endpoints.
    pub fn new(n: usize, edges: &[(usize, usize)]) -> Result<Graph, GraphError> {
        let mut adj = vec![Vec::new(); n];
        for &(u, v) in edges {
            if u >= n {
                return Err(GraphError::VertexOutOfRange(u, n));
            }
            if v >= n {
                return Err(GraphError::VertexOutOfRange(v, n));
            }
            if u == v {
                return Err(GraphError::SelfLoop(u));
            }
            if adj[u].contains(&v) {
                return Err(GraphError::DuplicateEdge(u.min(v), u.max(v)));
            }
            adj[u].push(v);
            adj[v].push(u);
        }
        for list in &mut adj {
            list.sort_unstable();
        }
        Ok(Graph {
            n,
            adj,
            edge_count: edges.len(),
            labels: vec![Vec::new(); n],
        })
    }

    /// Graph with no vertices.
    pub fn empty() -> Graph {
        Graph::new(0, &[]).unwrap()
    }

    pub fn vertex_count(&self) -> usize {
        self.n
    }

    pub fn edge_count(&self) -> usize {
        self.edge_count
    }

    pub fn vertices(&self) -> impl Iterator<Item = usize> {
        0..self.n
    }

    /// Edges as `(u, v)` with `u < v`, in lexicographic order.
    pub fn edges(&self) -> Vec<(usize, usize)> {
        let mut out = Vec::with_capacity(self.edge_count);
        for u in 0..self.n {
            for &v in &self.adj[u] {
                if u < v {
                    out.push((u, v));
                }
            }
        }
        out
    }

    pub fn neighbors(&self, v: usize) -> &[usize] {
        &self.adj[v]
    }

    pub fn degree(&self, v: usize) -> usize {
        self.adj[v].len()
    }

    pub fn has_edge(&self, u: usize, v: usize) -> bool {
        u < self.n && v < self.n && self.adj[u].binary_search(&v).is_ok()
    }

    pub fn full_set(&self) -> VertexSubset {
        VertexSubset::full(self.n)
    }

    /// Attaches a `key=value` label to `v`. Labels are inert metadata.
    pub fn add_label(&mut self, v: usize, key: &str, value: &str) {
        assert!(v < self.n, "label vertex out of range");
        self.labels[v].push((key.to_string(), value.to_string()));
    }

    pub fn labels(&self, v: usize) -> &[(String, String)] {
        &self.labels[v]
    }

    pub fn has_labels(&self) -> bool {
        self.labels.iter().any(|l| !l.is_empty())
    }

    /// True when the whole graph is connected (vacuously for `n <= 1`).
    pub fn is_connected(&self) -> bool {
        self.connected_components(&self.full_set()).len() <= 1
    }

    /// Partitions `within` into the maximal connected sets of the induced
    /// subgraph, ordered by smallest contained vertex id.
    pub fn connected_components(&self, within: &VertexSubset) -> Vec<VertexSubset> {
        let mut seen = VertexSubset::empty(self.n);
        let mut out = Vec::new();
        for start in within.iter() {
            if seen.contains(start) {
                continue;
            }
            let mut comp = VertexSubset::empty(self.n);
            let mut stack = vec![start];
            comp.insert(start);
            seen.insert(start);
            while let Some(u) = stack.pop() {
                for &w in &self.adj[u] {
                    if within.contains(w) && !comp.contains(w) {
                        comp.insert(w);
                        seen.insert(w);
                        stack.push(w);
                    }
                }
            }
            out.push(comp);
        }
        out
    }

    /// True iff removing `S` leaves the graph disconnected or empty.
    /// Defined for connected graphs only.
    pub fn is_separator(&self, s: &VertexSubset) -> Result<bool, GraphError> {
        if !self.is_connected() {
            return Err(GraphError::Disconnected);
        }
        let rest = self.full_set().minus(s);
        if rest.is_empty() {
            return Ok(true);
        }
        Ok(self.connected_components(&rest).len() != 1)
    }

    /// Contracts edge `e`, merging its endpoints into one vertex adjacent to
    /// the union of the former neighborhoods. When a coloring is supplied the
    /// merged vertex receives the larger of the two colors. Returns the new
    /// graph, the transported coloring, and the old-id -> new-id map.
    ///
    /// The merged vertex keeps the smaller endpoint's slot; ids above the
    /// larger endpoint shift down by one. Labels of the larger endpoint are
    /// dropped (the merged vertex is a new vertex).
    pub fn contract_edge(
        &self,
        coloring: Option<&Coloring>,
        e: (usize, usize),
    ) -> Result<(Graph, Option<Coloring>, Vec<usize>), GraphError> {
        let (u, v) = (e.0.min(e.1), e.0.max(e.1));
        if !self.has_edge(u, v) {
            return Err(GraphError::NotAnEdge(e.0, e.1));
        }
        let map: Vec<usize> = (0..self.n)
            .map(|w| {
                if w == v {
                    u
                } else if w > v {
                    w - 1
                } else {
                    w
                }
            })
            .collect();
        let mut edges = std::collections::BTreeSet::new();
        for (a, b) in self.edges() {
            let (a, b) = (map[a], map[b]);
            if a != b {
                edges.insert((a.min(b), a.max(b)));
            }
        }
        let edge_list: Vec<(usize, usize)> = edges.into_iter().collect();
        let mut g = Graph::new(self.n - 1, &edge_list)?;
        for (w, labels) in self.labels.iter().enumerate() {
            if w != u && w != v {
                for (k, val) in labels {
                    g.add_label(map[w], k, val);
                }
            }
        }
        let transported = match coloring {
            Some(c) => {
                let mut colors = vec![0usize; self.n - 1];
                for w in 0..self.n {
                    if w != u && w != v {
                        colors[map[w]] = c.color(w);
                    }
                }
                colors[u] = c.color(u).max(c.color(v));
                Some(Coloring::new(colors).expect("transported coloring total and positive"))
            }
            None => None,
        };
        Ok((g, transported, map))
    }

    /// Deletes vertex `v`; remaining vertices are renumbered downward.
    /// Returns the new graph and the old-id -> new-id map (`None` for `v`).
    pub fn delete_vertex(&self, v: usize) -> Result<(Graph, Vec<Option<usize>>), GraphError> {
        if v >= self.n {
            return Err(GraphError::VertexOutOfRange(v, self.n));
        }
        let map: Vec<Option<usize>> = (0..self.n)
            .map(|w| {
                if w == v {
                    None
                } else if w > v {
                    Some(w - 1)
                } else {
                    Some(w)
                }
            })
            .collect();
        let edges: Vec<(usize, usize)> = self
            .edges()
            .into_iter()
            .filter(|&(a, b)| a != v && b != v)
            .map(|(a, b)| (map[a].unwrap(), map[b].unwrap()))
            .collect();
        let mut g = Graph::new(self.n - 1, &edges)?;
        for (w, labels) in self.labels.iter().enumerate() {
            if let Some(nw) = map[w] {
                for (k, val) in labels {
                    g.add_label(nw, k, val);
                }
            }
        }
        Ok((g, map))
    }

    /// Deletes edge `e` (vertex set unchanged).
    pub fn delete_edge(&self, e: (usize, usize)) -> Result<Graph, GraphError> {
        let (u, v) = (e.0.min(e.1), e.0.max(e.1));
        if !self.has_edge(u, v) {
            return Err(GraphError::NotAnEdge(e.0, e.1));
        }
        let edges: Vec<(usize, usize)> = self
            .edges()
            .into_iter()
            .filter(|&(a, b)| (a, b) != (u, v))
            .collect();
        let mut g = Graph::new(self.n, &edges)?;
        for w in 0..self.n {
            for (k, val) in &self.labels[w] {
                g.add_label(w, k, val);
            }
        }
        Ok(g)
    }

    /// Subgraph induced by `within`, with the old-id -> new-id map.
    pub fn induced(&self, within: &VertexSubset) -> (Graph, Vec<Option<usize>>) {
        let mut map = vec![None; self.n];
        for (new, old) in within.iter().enumerate() {
            map[old] = Some(new);
        }
        let edges: Vec<(usize, usize)> = self
            .edges()
            .into_iter()
            .filter(|&(a, b)| within.contains(a) && within.contains(b))
            .map(|(a, b)| (map[a].unwrap(), map[b].unwrap()))
            .collect();
        let mut g = Graph::new(within.len(), &edges).unwrap();
        for (w, labels) in self.labels.iter().enumerate() {
            if let Some(nw) = map[w] {
                for (k, val) in labels {
                    g.add_label(nw, k, val);
                }
            }
        }
        (g, map)
    }

    /// Shortest path between `from` and `to` inside `within`, if any.
    pub fn bfs_path(&self, within: &VertexSubset, from: usize, to: usize) -> Option<Vec<usize>> {
        if !within.contains(from) || !within.contains(to) {
            return None;
        }
        let mut prev = vec![usize::MAX; self.n];
        let mut queue = std::collections::VecDeque::new();
        prev[from] = from;
        queue.push_back(from);
        while let Some(u) = queue.pop_front() {
            if u == to {
                let mut path = vec![to];
                let mut cur = to;
                while cur != from {
                    cur = prev[cur];
                    path.push(cur);
                }
                path.reverse();
                return Some(path);
            }
            for &w in &self.adj[u] {
                if within.contains(w) && prev[w] == usize::MAX {
                    prev[w] = u;
                    queue.push_back(w);
                }
            }
        }
        None
    }

    /// Ordering of `within` whose every prefix induces a connected subgraph:
    /// start at the smallest id, repeatedly append the smallest id adjacent
    /// to the prefix. Errors when `within` is empty or induces a
    /// disconnected subgraph.
    pub fn always_connected_ordering(
        &self,
        within: &VertexSubset,
    ) -> Result<Vec<usize>, GraphError> {
        let start = within.smallest().ok_or(GraphError::EmptySet)?;
        let mut order = vec![start];
        let mut in_prefix = VertexSubset::empty(self.n);
        in_prefix.insert(start);
        while order.len() < within.len() {
            let mut next = None;
            for v in within.iter() {
                if !in_prefix.contains(v) && self.adj[v].iter().any(|&w| in_prefix.contains(w)) {
                    next = Some(v);
                    break;
                }
            }
            match next {
                Some(v) => {
                    in_prefix.insert(v);
                    order.push(v);
                }
                None => return Err(GraphError::Disconnected),
            }
        }
        Ok(order)
    }

    /// Enumerates every simple path of the subgraph induced by `within`,
    /// each exactly once in canonical orientation, in DFS order from each
    /// start vertex (ascending ids, ascending neighbor extension). Stops
    /// with [`PathEnumeration::BudgetExceeded`] once `budget` paths have
    /// been emitted and more remain.
    pub fn for_each_simple_path<F>(
        &self,
        within: &VertexSubset,
        budget: u64,
        mut emit: F,
    ) -> PathEnumeration
    where
        F: FnMut(&PathWitness),
    {
        let mut emitted = 0u64;
        let mut stack: Vec<usize> = Vec::new();
        let mut visited = VertexSubset::empty(self.n);
        for start in within.iter() {
            stack.push(start);
            visited.insert(start);
            if !self.path_dfs(
                within,
                budget,
                &mut emitted,
                &mut stack,
                &mut visited,
                &mut emit,
            ) {
                return PathEnumeration::BudgetExceeded { emitted };
            }
            visited.remove(start);
            stack.pop();
        }
        PathEnumeration::Exhausted { emitted }
    }

    fn path_dfs<F>(
        &self,
        within: &VertexSubset,
        budget: u64,
        emitted: &mut u64,
        stack: &mut Vec<usize>,
        visited: &mut VertexSubset,
        emit: &mut F,
    ) -> bool
    where
        F: FnMut(&PathWitness),
    {
        if stack[0] <= *stack.last().unwrap() {
            if *emitted == budget {
                return false;
            }
            *emitted += 1;
            emit(&PathWitness::from_canonical(stack.clone()));
        }
        let last = *stack.last().unwrap();
        for &w in &self.adj[last] {
            if within.contains(w) && !visited.contains(w) {
                stack.push(w);
                visited.insert(w);
                let ok = self.path_dfs(within, budget, emitted, stack, visited, emit);
                visited.remove(w);
                stack.pop();
                if !ok {
                    return false;
                }
            }
        }
        true
    }

    /// Collects the full enumeration of [`Graph::for_each_simple_path`].
    pub fn simple_paths(
        &self,
        within: &VertexSubset,
        budget: u64,
    ) -> (Vec<PathWitness>, PathEnumeration) {
        let mut out = Vec::new();
        let outcome = self.for_each_simple_path(within, budget, |p| out.push(p.clone()));
        (out, outcome)
    }
}

/// Terminal state of a path enumeration: either the stream ran dry or the
/// emission budget was hit with paths still unexplored.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum PathEnumeration {
    Exhausted { emitted: u64 },
    BudgetExceeded { emitted: u64 },
}

impl PathEnumeration {
    pub fn emitted(&self) -> u64 {
        match *self {
            PathEnumeration::Exhausted { emitted } => emitted,
            PathEnumeration::BudgetExceeded { emitted } => emitted,
        }
    }

    pub fn is_exhausted(&self) -> bool {
        matches!(self, PathEnumeration::Exhausted { .. })
    }
}

/// Bitset over the vertices `0..n` of a host graph.
#[derive(Clone, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct VertexSubset {
    n: usize,
    blocks: Vec<u64>,
}

impl fmt::Debug for VertexSubset {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.debug_set().entries(self.iter()).finish()
    }
}

impl VertexSubset {
    pub fn empty(n: usize) -> VertexSubset {
        VertexSubset {
            n,
            blocks: vec![0; n.div_ceil(64)],
        }
    }

    pub fn full(n: usize) -> VertexSubset {
        let mut s = VertexSubset::empty(n);
        for v in 0..n {
            s.insert(v);
        }
        s
    }

    pub fn from_ids(n: usize, ids: &[usize]) -> VertexSubset {
        let mut s = VertexSubset::empty(n);
        for &v in ids {
            s.insert(v);
        }
        s
    }

    pub fn universe(&self) -> usize {
        self.n
    }

    pub fn insert(&mut self, v: usize) {
        assert!(v < self.n, "vertex {v} outside universe 0..{}", self.n);
        self.blocks[v / 64] |= 1 << (v % 64);
    }

    pub fn remove(&mut self, v: usize) {
        assert!(v < self.n, "vertex {v} outside universe 0..{}", self.n);
        self.blocks[v / 64] &= !(1 << (v % 64));
    }

    pub fn contains(&self, v: usize) -> bool {
        v < self.n && self.blocks[v / 64] & (1 << (v % 64)) != 0
    }

    pub fn len(&self) -> usize {
        self.blocks.iter().map(|b| b.count_ones() as usize).sum()
    }

    pub fn is_empty(&self) -> bool {
        self.blocks.iter().all(|&b| b == 0)
    }

    pub fn smallest(&self) -> Option<usize> {
        self.iter().next()
    }

    pub fn iter(&self) -> impl Iterator<Item = usize> + '_ {
        self.blocks.iter().enumerate().flat_map(|(i, &block)| {
            let mut b = block;
            std::iter::from_fn(move || {
                if b == 0 {
                    None
                } else {
                    let bit = b.trailing_zeros() as usize;
                    b &= b - 1;
                    Some(i * 64 + bit)
                }
            })
        })
    }

    pub fn to_vec(&self) -> Vec<usize> {
        self.iter().collect()
    }

    pub fn minus(&self, other: &VertexSubset) -> VertexSubset {
        assert_eq!(self.n, other.n);
        VertexSubset {
            n: self.n,
            blocks: self
                .blocks
                .iter()
                .zip(&other.blocks)
                .map(|(a, b)| a & !b)
                .collect(),
        }
    }

    pub fn without(&self, v: usize) -> VertexSubset {
        let mut s = self.clone();
        s.remove(v);
        s
    }

    pub fn union(&self, other: &VertexSubset) -> VertexSubset {
        assert_eq!(self.n, other.n);
        VertexSubset {
            n: self.n,
            blocks: self
                .blocks
                .iter()
                .zip(&other.blocks)
                .map(|(a, b)| a | b)
                .collect(),
        }
    }

    pub fn intersect(&self, other: &VertexSubset) -> VertexSubset {
        assert_eq!(self.n, other.n);
        VertexSubset {
            n: self.n,
            blocks: self
                .blocks
                .iter()
                .zip(&other.blocks)
                .map(|(a, b)| a & b)
                .collect(),
        }
    }

    pub fn is_subset_of(&self, other: &VertexSubset) -> bool {
        self.n == other.n
            && self
                .blocks
                .iter()
                .zip(&other.blocks)
                .all(|(a, b)| a & !b == 0)
    }
}

/// A simple path, stored as its vertex sequence in canonical orientation:
/// for two or more vertices the first endpoint id is smaller than the last.
#[derive(Clone, PartialEq, Eq, Hash)]
pub struct PathWitness {
    vertices: Vec<usize>,
}

impl fmt::Debug for PathWitness {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "PathWitness({:?})", self.vertices)
    }
}

impl PathWitness {
    /// Validates that `vertices` is a nonempty simple path of `g` and
    /// normalizes its orientation.
    pub fn new(g: &Graph, mut vertices: Vec<usize>) -> Result<PathWitness, GraphError> {
        if vertices.is_empty() {
            return Err(GraphError::NotAPath("empty sequence".into()));
        }
        let mut seen = VertexSubset::empty(g.vertex_count());
        for &v in &vertices {
            if v >= g.vertex_count() {
                return Err(GraphError::VertexOutOfRange(v, g.vertex_count()));
            }
            if seen.contains(v) {
                return Err(GraphError::NotAPath(format!("vertex {v} repeats")));
            }
            seen.insert(v);
        }
        for pair in vertices.windows(2) {
            if !g.has_edge(pair[0], pair[1]) {
                return Err(GraphError::NotAPath(format!(
                    "({}, {}) is not an edge",
                    pair[0], pair[1]
                )));
            }
        }
        if vertices.len() >= 2 && vertices[0] > *vertices.last().unwrap() {
            vertices.reverse();
        }
        Ok(PathWitness { vertices })
    }

    pub(crate) fn from_canonical(vertices: Vec<usize>) -> PathWitness {
        debug_assert!(!vertices.is_empty());
        debug_assert!(vertices.len() < 2 || vertices[0] < *vertices.last().unwrap());
        PathWitness { vertices }
    }

    pub fn vertices(&self) -> &[usize] {
        &self.vertices
    }

    /// Number of vertices on the path.
    pub fn len(&self) -> usize {
        self.vertices.len()
    }

    pub fn is_empty(&self) -> bool {
        false
    }

    pub fn to_subset(&self, n: usize) -> VertexSubset {
        VertexSubset::from_ids(n, &self.vertices)
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::generate::{complete_graph, grid_graph, path_graph};

    #[test]
    fn components_of_path() {
        let g = path_graph(3);
        let all = g.full_set();
        assert_eq!(g.connected_components(&all), vec![all.clone()]);
        let ends = VertexSubset::from_ids(3, &[0, 2]);
        let comps = g.connected_components(&ends);
        assert_eq!(
            comps,
            vec![
                VertexSubset::from_ids(3, &[0]),
                VertexSubset::from_ids(3, &[2])
            ]
        );
        let (g2, _) = grid_graph(2);
        assert_eq!(g2.connected_components(&g2.full_set()).len(), 1);
        assert!(path_graph(0)
            .connected_components(&VertexSubset::empty(0))
            .is_empty());
    }

    #[test]
    fn separators() {
        let g = path_graph(3);
        assert!(g.is_separator(&VertexSubset::from_ids(3, &[1])).unwrap());
        assert!(!g.is_separator(&VertexSubset::from_ids(3, &[0])).unwrap());
        let k4 = complete_graph(4);
        assert!(k4.is_separator(&k4.full_set()).unwrap());
        let disconnected = Graph::new(4, &[(0, 1), (2, 3)]).unwrap();
        assert_eq!(
            disconnected.is_separator(&VertexSubset::empty(4)),
            Err(GraphError::Disconnected)
        );
    }

    #[test]
    fn contract_edge_merges_neighborhoods() {
        // P_3 colored (1,2,1): contracting {0,1} keeps the larger color.
        let g = path_graph(3);
        let c = Coloring::new(vec![1, 2, 1]).unwrap();
        let (h, hc, map) = g.contract_edge(Some(&c), (0, 1)).unwrap();
        assert_eq!(h, path_graph(2));
        assert_eq!(hc.unwrap().colors(), &[2, 1]);
        assert_eq!(map, vec![0, 0, 1]);

        let k3 = complete_graph(3);
        let (h, _, _) = k3.contract_edge(None, (1, 2)).unwrap();
        assert_eq!(h, complete_graph(2));

        // Triangle with a pendant: contracting the pendant edge gives K_3.
        let g = Graph::new(4, &[(0, 1), (1, 2), (0, 2), (2, 3)]).unwrap();
        let (h, _, _) = g.contract_edge(None, (2, 3)).unwrap();
        assert_eq!(h, complete_graph(3));

        assert_eq!(
            path_graph(3).contract_edge(None, (0, 2)),
            Err(GraphError::NotAnEdge(0, 2))
        );
    }

    #[test]
    fn deletions() {
        let (h, map) = path_graph(3).delete_vertex(1).unwrap();
        assert_eq!(h, Graph::new(2, &[]).unwrap());
        assert_eq!(map, vec![Some(0), None, Some(1)]);

        let h = complete_graph(3).delete_edge((0, 2)).unwrap();
        assert_eq!(h, Graph::new(3, &[(0, 1), (1, 2)]).unwrap());

        let (h, _) = path_graph(1).delete_vertex(0).unwrap();
        assert_eq!(h.vertex_count(), 0);

        assert!(path_graph(2).delete_vertex(5).is_err());
        assert!(path_graph(2).delete_edge((0, 5)).is_err());
    }

    #[test]
    fn path_enumeration_small_cases() {
        let g = path_graph(2);
        let (paths, outcome) = g.simple_paths(&g.full_set(), 1000);
        let got: Vec<Vec<usize>> = paths.iter().map(|p| p.vertices().to_vec()).collect();
        assert_eq!(got, vec![vec![0], vec![0, 1], vec![1]]);
        assert!(outcome.is_exhausted());

        let k3 = complete_graph(3);
        let (paths, _) = k3.simple_paths(&k3.full_set(), 1000);
        assert_eq!(paths.len(), 9);

        let g = path_graph(3);
        let (paths, outcome) = g.simple_paths(&g.full_set(), 2);
        assert_eq!(paths.len(), 2);
        assert_eq!(outcome, PathEnumeration::BudgetExceeded { emitted: 2 });

        // Exactly-fitting budget is normal exhaustion, not overflow.
        let (paths, outcome) = g.simple_paths(&g.full_set(), 6);
        assert_eq!(paths.len(), 6);
        assert!(outcome.is_exhausted());
    }

    #[test]
    fn always_connected_orderings() {
        let g = path_graph(3);
        assert_eq!(
            g.always_connected_ordering(&g.full_set()).unwrap(),
            vec![0, 1, 2]
        );
        let star = Graph::new(4, &[(0, 1), (0, 2), (0, 3)]).unwrap();
        assert_eq!(
            star.always_connected_ordering(&star.full_set()).unwrap(),
            vec![0, 1, 2, 3]
        );
        assert_eq!(
            g.always_connected_ordering(&VertexSubset::from_ids(3, &[2]))
                .unwrap(),
            vec![2]
        );
        assert_eq!(
            g.always_connected_ordering(&VertexSubset::from_ids(3, &[0, 2])),
            Err(GraphError::Disconnected)
        );
        assert_eq!(
            g.always_connected_ordering(&VertexSubset::empty(3)),
            Err(GraphError::EmptySet)
        );
    }

    #[test]
    fn witness_canonicalization() {
        let g = path_graph(3);
        let p = PathWitness::new(&g, vec![2, 1, 0]).unwrap();
        assert_eq!(p.vertices(), &[0, 1, 2]);
        assert!(PathWitness::new(&g, vec![0, 2]).is_err());
        assert!(PathWitness::new(&g, vec![0, 1, 0]).is_err());
        assert!(PathWitness::new(&g, vec![]).is_err());
    }

    #[test]
    fn subset_basics() {
        let mut s = VertexSubset::empty(130);
        s.insert(0);
        s.insert(64);
        s.insert(129);
        assert_eq!(s.len(), 3);
        assert_eq!(s.to_vec(), vec![0, 64, 129]);
        assert!(s.contains(64));
        s.remove(64);
        assert!(!s.contains(64));
        let full = VertexSubset::full(130);
        assert!(s.is_subset_of(&full));
        assert_eq!(full.minus(&s).len(), 128);
    }

    #[test]
    fn enumeration_order_is_dfs_from_each_start() {
        let g = path_graph(3);
        let (paths, _) = g.simple_paths(&g.full_set(), 100);
        let got: Vec<Vec<usize>> = paths.iter().map(|p| p.vertices().to_vec()).collect();
        assert_eq!(
            got,
            vec![vec![0], vec![0, 1], vec![0, 1, 2], vec![1], vec![1, 2], vec![2]]
        );
    }

    #[test]
    fn shared_read_types_are_send_and_sync() {
        fn assert_send_sync<T: Send + Sync>() {}
        assert_send_sync::<Graph>();
        assert_send_sync::<VertexSubset>();
        assert_send_sync::<PathWitness>();
        assert_send_sync::<Coloring>();
    }
}
