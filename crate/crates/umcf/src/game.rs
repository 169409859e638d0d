//! The two vertex-deletion games and the grid strategy translation.
//!
//! Both games share one loop: while vertices survive, the maximizer names a
//! vertex set of the current graph (a connected component in the component
//! game, the vertex set of a simple path in the path game), the minimizer
//! deletes one vertex of it, and play continues on the chosen set minus
//! that vertex. The component game value equals the unique-maximum
//! chromatic number; the path game value is a lower bound for the
//! conflict-free chromatic number. On square grids a component-game
//! maximizer strategy for the half grid translates into a path-game
//! maximizer strategy via quadruples and path-spanned cycles.

use std::collections::{HashMap, HashSet};

use crate::generate::grid_graph;
use crate::graph::{Graph, GraphError, PathWitness, VertexSubset};
use crate::rng::SplitMix64;
use crate::solve::{ranking_value, RankingEngine, SolveError, DEFAULT_UM_CAP};

pub const DEFAULT_VP_CAP: usize = 16;

#[derive(Debug, Clone, PartialEq, Eq, thiserror::Error)]
pub enum GameError {
    #[error("illegal move in round {round}: {rule}")]
    IllegalMove { round: usize, rule: String },
    #[error("quadruples need a grid of side at least 2, got {0}")]
    GridTooSmall(usize),
    #[error(transparent)]
    Graph(#[from] GraphError),
}

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum GameKind {
    Component,
    Path,
}

/// Surviving vertex set at the start of a round, with the 1-based round
/// index about to be played.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct GamePosition {
    pub round: usize,
    pub surviving: VertexSubset,
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Round {
    pub set: VertexSubset,
    pub vertex: usize,
}

/// Full record of a played game: the chosen set and deleted vertex of every
/// round. The game length is the number of rounds.
#[derive(Debug, Clone, Default, PartialEq, Eq)]
pub struct GameTranscript {
    pub rounds: Vec<Round>,
}

impl GameTranscript {
    pub fn new() -> GameTranscript {
        GameTranscript { rounds: Vec::new() }
    }

    pub fn length(&self) -> usize {
        self.rounds.len()
    }

    /// Line-based log, one round per line: `i|sorted,set,ids|vertex`.
    pub fn to_log(&self) -> String {
        let mut out = String::new();
        for (i, round) in self.rounds.iter().enumerate() {
            let ids: Vec<String> = round.set.iter().map(|v| v.to_string()).collect();
            out.push_str(&format!("{}|{}|{}\n", i + 1, ids.join(","), round.vertex));
        }
        out
    }
}

/// A maximizer move: the component it claims, or a concrete simple path
/// witnessing that the claimed set is path-spanned.
#[derive(Debug, Clone)]
pub enum MaxMove {
    Component(VertexSubset),
    Path(PathWitness),
}

/// Maximizer strategies see the whole transcript plus the current position
/// and return a move; they must be deterministic functions of those inputs
/// (plus any owned RNG) so that one instance can replay itself.
pub trait Maximizer {
    fn choose_set(
        &mut self,
        g: &Graph,
        kind: GameKind,
        transcript: &GameTranscript,
        position: &GamePosition,
    ) -> MaxMove;
}

pub trait Minimizer {
    fn choose_vertex(
        &mut self,
        g: &Graph,
        kind: GameKind,
        transcript: &GameTranscript,
        position: &GamePosition,
        chosen: &VertexSubset,
    ) -> usize;
}

fn validate_max_move(
    g: &Graph,
    kind: GameKind,
    surviving: &VertexSubset,
    mv: &MaxMove,
    round: usize,
) -> Result<VertexSubset, GameError> {
    match (kind, mv) {
        (GameKind::Component, MaxMove::Component(set)) => {
            let components = g.connected_components(surviving);
            if components.iter().any(|c| c == set) {
                Ok(set.clone())
            } else {
                Err(GameError::IllegalMove {
                    round,
                    rule: "chosen set is not a connected component of the surviving graph".into(),
                })
            }
        }
        (GameKind::Path, MaxMove::Path(path)) => {
            for &v in path.vertices() {
                if !surviving.contains(v) {
                    return Err(GameError::IllegalMove {
                        round,
                        rule: format!("path vertex {v} is not in the surviving graph"),
                    });
                }
            }
            // PathWitness construction already guarantees simplicity and
            // adjacency in g; within an induced subgraph that is enough.
            Ok(path.to_subset(g.vertex_count()))
        }
        _ => Err(GameError::IllegalMove {
            round,
            rule: "move variant does not match the game kind".into(),
        }),
    }
}

/// Runs one game to completion, validating every move.
pub fn play_game(
    g: &Graph,
    kind: GameKind,
    maximizer: &mut dyn Maximizer,
    minimizer: &mut dyn Minimizer,
) -> Result<GameTranscript, GameError> {
    let mut surviving = g.full_set();
    let mut transcript = GameTranscript::new();
    while !surviving.is_empty() {
        let round = transcript.length() + 1;
        let position = GamePosition {
            round,
            surviving: surviving.clone(),
        };
        let mv = maximizer.choose_set(g, kind, &transcript, &position);
        let set = validate_max_move(g, kind, &surviving, &mv, round)?;
        let v = minimizer.choose_vertex(g, kind, &transcript, &position, &set);
        if !set.contains(v) {
            return Err(GameError::IllegalMove {
                round,
                rule: format!("deleted vertex {v} is not in the chosen set"),
            });
        }
        transcript.rounds.push(Round {
            set: set.clone(),
            vertex: v,
        });
        surviving = set.without(v);
    }
    Ok(transcript)
}

/// Minimum game length the maximizer can guarantee against *every*
/// adversary: walks the full tree of minimizer replies under the given
/// maximizer strategy.
pub fn exhaustive_adversary_min_length(
    g: &Graph,
    kind: GameKind,
    maximizer: &mut dyn Maximizer,
) -> Result<usize, GameError> {
    fn walk(
        g: &Graph,
        kind: GameKind,
        maximizer: &mut dyn Maximizer,
        transcript: &mut GameTranscript,
        surviving: VertexSubset,
    ) -> Result<usize, GameError> {
        if surviving.is_empty() {
            return Ok(transcript.length());
        }
        let round = transcript.length() + 1;
        let position = GamePosition {
            round,
            surviving: surviving.clone(),
        };
        let mv = maximizer.choose_set(g, kind, transcript, &position);
        let set = validate_max_move(g, kind, &surviving, &mv, round)?;
        let mut best = usize::MAX;
        for v in set.iter() {
            transcript.rounds.push(Round {
                set: set.clone(),
                vertex: v,
            });
            let len = walk(g, kind, maximizer, transcript, set.without(v))?;
            transcript.rounds.pop();
            best = best.min(len);
        }
        Ok(best)
    }
    walk(g, kind, maximizer, &mut GameTranscript::new(), g.full_set())
}

/// Optimal value of the connected component game; shares the subset-minimax
/// engine with the unique-maximum solver.
pub fn vcs_value(g: &Graph) -> Result<usize, SolveError> {
    vcs_value_capped(g, DEFAULT_UM_CAP)
}

pub fn vcs_value_capped(g: &Graph, cap: usize) -> Result<usize, SolveError> {
    if g.vertex_count() > cap {
        return Err(SolveError::CapExceeded {
            n: g.vertex_count(),
            cap,
        });
    }
    Ok(ranking_value(g))
}

/// Result of the path-game solver under a work budget.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum VpOutcome {
    Exact(usize),
    Inconclusive { lower: usize, upper: usize },
}

impl VpOutcome {
    pub fn exact(&self) -> Option<usize> {
        match self {
            VpOutcome::Exact(v) => Some(*v),
            VpOutcome::Inconclusive { .. } => None,
        }
    }
}

/// Optimal value of the path game: over every distinct path vertex set S of
/// the surviving graph, the maximizer earns `1 + min over v of value(S-v)`.
/// Path vertex sets are deduplicated before recursion (distinct paths with
/// equal vertex sets are game-equivalent) and values memoized per subset.
pub fn vp_value(g: &Graph, budget: u64) -> Result<VpOutcome, SolveError> {
    vp_value_capped(g, budget, DEFAULT_VP_CAP)
}

pub fn vp_value_capped(g: &Graph, budget: u64, cap: usize) -> Result<VpOutcome, SolveError> {
    let n = g.vertex_count();
    if n > cap {
        return Err(SolveError::CapExceeded { n, cap });
    }
    if n == 0 {
        return Ok(VpOutcome::Exact(0));
    }
    let mut engine = VpEngine::new(g, budget);
    let full = if n == 64 { u64::MAX } else { (1u64 << n) - 1 };
    let roots = match engine.path_sets(full) {
        Some(r) => r,
        None => {
            return Ok(VpOutcome::Inconclusive { lower: 0, upper: n });
        }
    };
    let mut best = 0usize;
    for s in roots {
        match engine.set_value(s) {
            Some(v) => best = best.max(v as usize),
            None => {
                return Ok(VpOutcome::Inconclusive {
                    lower: best,
                    upper: n,
                });
            }
        }
    }
    Ok(VpOutcome::Exact(best))
}

/// Subset-memoized path game solver. All methods return `None` once the
/// node budget is exhausted.
struct VpEngine {
    adj: Vec<u64>,
    memo: HashMap<u64, u32>,
    /// First enumerated path realizing each path vertex set.
    repr: HashMap<u64, Vec<usize>>,
    nodes: u64,
    budget: u64,
}

impl VpEngine {
    fn new(g: &Graph, budget: u64) -> VpEngine {
        let mut adj = vec![0u64; g.vertex_count()];
        for (u, v) in g.edges() {
            adj[u] |= 1 << v;
            adj[v] |= 1 << u;
        }
        VpEngine {
            adj,
            memo: HashMap::new(),
            repr: HashMap::new(),
            nodes: 0,
            budget,
        }
    }

    fn spend(&mut self) -> bool {
        if self.nodes >= self.budget {
            return false;
        }
        self.nodes += 1;
        true
    }

    /// Distinct vertex sets of simple paths inside `mask`, ascending.
    fn path_sets(&mut self, mask: u64) -> Option<Vec<u64>> {
        let mut sets = HashSet::new();
        let mut scan = mask;
        while scan != 0 {
            let start = scan.trailing_zeros() as usize;
            scan &= scan - 1;
            if !self.dfs_sets(mask, start, 1 << start, &mut sets) {
                return None;
            }
        }
        let mut out: Vec<u64> = sets.into_iter().collect();
        out.sort_unstable();
        Some(out)
    }

    fn dfs_sets(&mut self, mask: u64, last: usize, used: u64, sets: &mut HashSet<u64>) -> bool {
        if !self.spend() {
            return false;
        }
        sets.insert(used);
        let mut ext = self.adj[last] & mask & !used;
        while ext != 0 {
            let w = ext.trailing_zeros() as usize;
            ext &= ext - 1;
            if !self.dfs_sets(mask, w, used | (1 << w), sets) {
                return false;
            }
        }
        true
    }

    /// Like `path_sets` but also records one witness path per set.
    fn path_sets_with_repr(&mut self, mask: u64) -> Option<Vec<u64>> {
        let mut sets = Vec::new();
        let mut stack = Vec::new();
        let mut scan = mask;
        while scan != 0 {
            let start = scan.trailing_zeros() as usize;
            scan &= scan - 1;
            stack.push(start);
            if !self.dfs_repr(mask, start, 1 << start, &mut stack, &mut sets) {
                return None;
            }
            stack.pop();
        }
        sets.sort_unstable();
        sets.dedup();
        Some(sets)
    }

    fn dfs_repr(
        &mut self,
        mask: u64,
        last: usize,
        used: u64,
        stack: &mut Vec<usize>,
        sets: &mut Vec<u64>,
    ) -> bool {
        if !self.spend() {
            return false;
        }
        if let std::collections::hash_map::Entry::Vacant(slot) = self.repr.entry(used) {
            slot.insert(stack.clone());
            sets.push(used);
        }
        let mut ext = self.adj[last] & mask & !used;
        while ext != 0 {
            let w = ext.trailing_zeros() as usize;
            ext &= ext - 1;
            stack.push(w);
            let ok = self.dfs_repr(mask, w, used | (1 << w), stack, sets);
            stack.pop();
            if !ok {
                return false;
            }
        }
        true
    }

    /// Game value of surviving set `mask`.
    fn value(&mut self, mask: u64) -> Option<u32> {
        if mask == 0 {
            return Some(0);
        }
        if let Some(&v) = self.memo.get(&mask) {
            return Some(v);
        }
        let sets = self.path_sets(mask)?;
        let mut best = 0u32;
        for s in sets {
            best = best.max(self.set_value(s)?);
        }
        self.memo.insert(mask, best);
        Some(best)
    }

    /// Value of playing the path set `s`: one round plus the worst reply.
    fn set_value(&mut self, s: u64) -> Option<u32> {
        let mut worst = u32::MAX;
        let mut scan = s;
        while scan != 0 {
            let v = scan.trailing_zeros() as usize;
            scan &= scan - 1;
            worst = worst.min(self.value(s & !(1 << v))?);
            if worst == 0 {
                break;
            }
        }
        Some(1 + worst)
    }
}

// ---------------------------------------------------------------------------
// Strategies
// ---------------------------------------------------------------------------

/// Component-game maximizer: claims the component with the highest game
/// value (ties to the component containing the smallest vertex).
pub struct OptimalComponentMax;

impl Maximizer for OptimalComponentMax {
    fn choose_set(
        &mut self,
        g: &Graph,
        _kind: GameKind,
        _transcript: &GameTranscript,
        position: &GamePosition,
    ) -> MaxMove {
        let mut engine = RankingEngine::new(g);
        let components = g.connected_components(&position.surviving);
        let best = components
            .iter()
            .max_by_key(|c| engine.value(subset_to_mask(c)))
            .expect("surviving graph is nonempty")
            .clone();
        MaxMove::Component(best)
    }
}

/// Component-game minimizer: deletes the vertex realizing the minimax
/// value of the chosen component.
pub struct OptimalComponentMin;

impl Minimizer for OptimalComponentMin {
    fn choose_vertex(
        &mut self,
        g: &Graph,
        _kind: GameKind,
        _transcript: &GameTranscript,
        _position: &GamePosition,
        chosen: &VertexSubset,
    ) -> usize {
        let mut engine = RankingEngine::new(g);
        engine.best_vertex(subset_to_mask(chosen))
    }
}

/// Path-game maximizer playing the minimax-optimal path set, found by the
/// same engine as [`vp_value`]. Falls back to the longest known path if the
/// internal budget runs out.
pub struct OptimalPathMax {
    pub budget: u64,
}

impl Default for OptimalPathMax {
    fn default() -> Self {
        OptimalPathMax { budget: 50_000_000 }
    }
}

impl Maximizer for OptimalPathMax {
    fn choose_set(
        &mut self,
        g: &Graph,
        _kind: GameKind,
        _transcript: &GameTranscript,
        position: &GamePosition,
    ) -> MaxMove {
        let mut engine = VpEngine::new(g, self.budget);
        let mask = subset_to_mask(&position.surviving);
        if let Some(sets) = engine.path_sets_with_repr(mask) {
            let mut best: Option<(u32, u64)> = None;
            let mut complete = true;
            for s in sets {
                match engine.set_value(s) {
                    Some(val) => {
                        if best.is_none_or(|(bv, _)| val > bv) {
                            best = Some((val, s));
                        }
                    }
                    None => {
                        complete = false;
                        break;
                    }
                }
            }
            if complete {
                let (_, s) = best.expect("surviving graph is nonempty");
                let path = engine.repr[&s].clone();
                return MaxMove::Path(PathWitness::new(g, path).expect("enumerated path is valid"));
            }
        }
        MaxMove::Path(longest_path_found(g, &position.surviving, 200_000))
    }
}

/// Path-game minimizer deleting the vertex that minimizes the value of the
/// remainder of the chosen path set.
pub struct OptimalPathMin {
    pub budget: u64,
}

impl Default for OptimalPathMin {
    fn default() -> Self {
        OptimalPathMin { budget: 50_000_000 }
    }
}

impl Minimizer for OptimalPathMin {
    fn choose_vertex(
        &mut self,
        g: &Graph,
        kind: GameKind,
        transcript: &GameTranscript,
        position: &GamePosition,
        chosen: &VertexSubset,
    ) -> usize {
        let mut engine = VpEngine::new(g, self.budget);
        let mask = subset_to_mask(chosen);
        let mut best = (u32::MAX, usize::MAX);
        for v in chosen.iter() {
            match engine.value(mask & !(1 << v)) {
                Some(val) if val < best.0 => best = (val, v),
                Some(_) => {}
                None => return GreedyMin.choose_vertex(g, kind, transcript, position, chosen),
            }
        }
        best.1
    }
}

/// Maximizer that grabs the largest legal set it can see: the biggest
/// component, or the longest path found within its enumeration budget.
pub struct GreedyMax {
    pub path_budget: u64,
}

impl Default for GreedyMax {
    fn default() -> Self {
        GreedyMax {
            path_budget: 200_000,
        }
    }
}

impl Maximizer for GreedyMax {
    fn choose_set(
        &mut self,
        g: &Graph,
        kind: GameKind,
        _transcript: &GameTranscript,
        position: &GamePosition,
    ) -> MaxMove {
        match kind {
            GameKind::Component => {
                let components = g.connected_components(&position.surviving);
                MaxMove::Component(
                    components
                        .iter()
                        .max_by_key(|c| c.len())
                        .expect("nonempty")
                        .clone(),
                )
            }
            GameKind::Path => {
                MaxMove::Path(longest_path_found(g, &position.surviving, self.path_budget))
            }
        }
    }
}

/// First longest path discovered by canonical enumeration under a budget.
fn longest_path_found(g: &Graph, within: &VertexSubset, budget: u64) -> PathWitness {
    let mut best: Option<PathWitness> = None;
    g.for_each_simple_path(within, budget, |p| {
        if best.as_ref().is_none_or(|b| p.len() > b.len()) {
            best = Some(p.clone());
        }
    });
    best.expect("nonempty surviving set has at least a one-vertex path")
}

/// Minimizer that deletes the vertex leaving the smallest largest
/// component (ties to the smallest id).
pub struct GreedyMin;

impl Minimizer for GreedyMin {
    fn choose_vertex(
        &mut self,
        g: &Graph,
        _kind: GameKind,
        _transcript: &GameTranscript,
        _position: &GamePosition,
        chosen: &VertexSubset,
    ) -> usize {
        chosen
            .iter()
            .min_by_key(|&v| {
                let rest = chosen.without(v);
                g.connected_components(&rest)
                    .iter()
                    .map(|c| c.len())
                    .max()
                    .unwrap_or(0)
            })
            .expect("chosen set is nonempty")
    }
}

/// Seeded random maximizer: a uniform component, or a random maximal path
/// grown by a self-avoiding walk.
pub struct RandomMax {
    rng: SplitMix64,
}

impl RandomMax {
    pub fn new(seed: u64) -> RandomMax {
        RandomMax {
            rng: SplitMix64::new(seed),
        }
    }
}

impl Maximizer for RandomMax {
    fn choose_set(
        &mut self,
        g: &Graph,
        kind: GameKind,
        _transcript: &GameTranscript,
        position: &GamePosition,
    ) -> MaxMove {
        match kind {
            GameKind::Component => {
                let components = g.connected_components(&position.surviving);
                let i = self.rng.next_usize(components.len());
                MaxMove::Component(components[i].clone())
            }
            GameKind::Path => {
                let ids = position.surviving.to_vec();
                let mut path = vec![ids[self.rng.next_usize(ids.len())]];
                let mut visited = VertexSubset::empty(g.vertex_count());
                visited.insert(path[0]);
                loop {
                    let last = *path.last().unwrap();
                    let options: Vec<usize> = g
                        .neighbors(last)
                        .iter()
                        .copied()
                        .filter(|&w| position.surviving.contains(w) && !visited.contains(w))
                        .collect();
                    if options.is_empty() {
                        break;
                    }
                    let next = options[self.rng.next_usize(options.len())];
                    visited.insert(next);
                    path.push(next);
                }
                MaxMove::Path(PathWitness::new(g, path).expect("walk is a simple path"))
            }
        }
    }
}

/// Seeded random minimizer: deletes a uniform vertex of the chosen set.
pub struct RandomMin {
    rng: SplitMix64,
}

impl RandomMin {
    pub fn new(seed: u64) -> RandomMin {
        RandomMin {
            rng: SplitMix64::new(seed),
        }
    }
}

impl Minimizer for RandomMin {
    fn choose_vertex(
        &mut self,
        _g: &Graph,
        _kind: GameKind,
        _transcript: &GameTranscript,
        _position: &GamePosition,
        chosen: &VertexSubset,
    ) -> usize {
        let ids = chosen.to_vec();
        ids[self.rng.next_usize(ids.len())]
    }
}

fn subset_to_mask(s: &VertexSubset) -> u64 {
    assert!(s.universe() <= 64);
    let mut mask = 0u64;
    for v in s.iter() {
        mask |= 1 << v;
    }
    mask
}

// ---------------------------------------------------------------------------
// Quadruples and the grid strategy translation
// ---------------------------------------------------------------------------

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum Direction {
    Up,
    Down,
    Left,
    Right,
}

impl Direction {
    pub const ALL: [Direction; 4] = [
        Direction::Up,
        Direction::Down,
        Direction::Left,
        Direction::Right,
    ];

    /// Coordinate offset, with up = +y.
    pub fn delta(self) -> (isize, isize) {
        match self {
            Direction::Up => (0, 1),
            Direction::Down => (0, -1),
            Direction::Left => (-1, 0),
            Direction::Right => (1, 0),
        }
    }
}

/// The quadruple decomposition of an m x m grid (m even), together with the
/// projection onto the half grid. When the host side is odd, play happens
/// inside the even subgrid of side m-1; host vertex ids always use the host
/// row stride.
#[derive(Debug, Clone)]
pub struct QuadrupleMap {
    host_side: usize,
    even_side: usize,
    small: Graph,
}

impl QuadrupleMap {
    pub fn new(host_side: usize) -> Result<QuadrupleMap, GameError> {
        if host_side < 2 {
            return Err(GameError::GridTooSmall(host_side));
        }
        let even_side = host_side - host_side % 2;
        let (small, _) = grid_graph(even_side / 2);
        Ok(QuadrupleMap {
            host_side,
            even_side,
            small,
        })
    }

    pub fn host_side(&self) -> usize {
        self.host_side
    }

    pub fn even_side(&self) -> usize {
        self.even_side
    }

    pub fn small_side(&self) -> usize {
        self.even_side / 2
    }

    /// The half grid the simulated component game is played on.
    pub fn small_grid(&self) -> &Graph {
        &self.small
    }

    fn host_id(&self, x: usize, y: usize) -> usize {
        debug_assert!(x < self.even_side && y < self.even_side);
        y * self.host_side + x
    }

    fn host_coords(&self, id: usize) -> (usize, usize) {
        (id % self.host_side, id / self.host_side)
    }

    fn small_coords(&self, small_id: usize) -> (usize, usize) {
        (small_id % self.small_side(), small_id / self.small_side())
    }

    /// Host vertices of the quadruple of a small-grid vertex, as
    /// bottom-left, bottom-right, top-left, top-right.
    pub fn quadruple(&self, small_id: usize) -> [usize; 4] {
        let (x, y) = self.small_coords(small_id);
        [
            self.host_id(2 * x, 2 * y),
            self.host_id(2 * x + 1, 2 * y),
            self.host_id(2 * x, 2 * y + 1),
            self.host_id(2 * x + 1, 2 * y + 1),
        ]
    }

    /// Lifts a small-grid vertex set to the union of its quadruples.
    pub fn tau_set(&self, s: &VertexSubset) -> VertexSubset {
        let mut out = VertexSubset::empty(self.host_side * self.host_side);
        for v in s.iter() {
            for id in self.quadruple(v) {
                out.insert(id);
            }
        }
        out
    }

    /// Projects a host vertex back to its quadruple's small-grid vertex.
    pub fn tau_prime(&self, host_id: usize) -> usize {
        let (x, y) = self.host_coords(host_id);
        debug_assert!(x < self.even_side && y < self.even_side);
        (y / 2) * self.small_side() + x / 2
    }

    /// The host edge of a quadruple facing direction `d`.
    pub fn d_edge(&self, small_id: usize, d: Direction) -> (usize, usize) {
        let [bl, br, tl, tr] = self.quadruple(small_id);
        match d {
            Direction::Up => (tl, tr),
            Direction::Down => (bl, br),
            Direction::Left => (bl, tl),
            Direction::Right => (br, tr),
        }
    }

    /// Small-grid neighbor of `small_id` in direction `d`, if on the grid.
    pub fn small_neighbor(&self, small_id: usize, d: Direction) -> Option<usize> {
        let (x, y) = self.small_coords(small_id);
        let (dx, dy) = d.delta();
        let nx = x as isize + dx;
        let ny = y as isize + dy;
        let side = self.small_side() as isize;
        if nx < 0 || ny < 0 || nx >= side || ny >= side {
            None
        } else {
            Some(ny as usize * self.small_side() + nx as usize)
        }
    }

    /// True when the `d`-neighbor of `v` is missing or outside `s`.
    pub fn is_open(&self, s: &VertexSubset, v: usize, d: Direction) -> bool {
        match self.small_neighbor(v, d) {
            Some(w) => !s.contains(w),
            None => true,
        }
    }
}

/// Builds a cycle of the host grid whose vertex set is exactly the union of
/// the quadruples of the connected small-grid set `s`, containing the
/// `d`-edge of every quadruple open in direction `d`. Construction follows
/// the inductive argument: one quadruple contributes its four edges; each
/// later quadruple (in always-connected order) splices in through a
/// five-edge detour across the facing edge.
pub fn path_spanning_cycle(qm: &QuadrupleMap, s: &VertexSubset) -> Result<Vec<usize>, GameError> {
    let ordering = qm.small_grid().always_connected_ordering(s)?;
    let [bl, br, tl, tr] = qm.quadruple(ordering[0]);
    let mut cycle = vec![bl, tl, tr, br];
    let mut placed = VertexSubset::empty(qm.small_side() * qm.small_side());
    placed.insert(ordering[0]);
    for &vk in &ordering[1..] {
        let (vi, d) = Direction::ALL
            .iter()
            .filter_map(|&d| {
                // vk is the d-neighbor of vi, i.e. vi sits opposite.
                qm.small_neighbor(vk, d)
                    .filter(|w| placed.contains(*w))
                    .map(|w| {
                        let back = match d {
                            Direction::Up => Direction::Down,
                            Direction::Down => Direction::Up,
                            Direction::Left => Direction::Right,
                            Direction::Right => Direction::Left,
                        };
                        (w, back)
                    })
            })
            .min_by_key(|&(w, _)| w)
            .expect("always-connected ordering attaches every vertex");
        let (a, b) = qm.d_edge(vi, d);
        splice_quadruple(qm, &mut cycle, a, b, vk);
        placed.insert(vk);
    }
    Ok(cycle)
}

/// Replaces cycle edge (a, b) by the five-edge detour through all four
/// vertices of `vk`'s quadruple.
fn splice_quadruple(qm: &QuadrupleMap, cycle: &mut Vec<usize>, a: usize, b: usize, vk: usize) {
    let corners = qm.quadruple(vk);
    let host_adjacent = |p: usize, q: usize| {
        let (px, py) = qm.host_coords(p);
        let (qx, qy) = qm.host_coords(q);
        px.abs_diff(qx) + py.abs_diff(qy) == 1
    };
    let neighbor_of = |x: usize| {
        corners
            .iter()
            .copied()
            .find(|&c| host_adjacent(c, x))
            .expect("facing corner exists")
    };
    let na = neighbor_of(a);
    let nb = neighbor_of(b);
    let ra = corners
        .iter()
        .copied()
        .find(|&c| c != na && c != nb && host_adjacent(c, na))
        .expect("quadruple induces a 4-cycle");
    let rb = corners
        .iter()
        .copied()
        .find(|&c| c != na && c != nb && c != ra)
        .expect("four distinct corners");
    debug_assert!(host_adjacent(ra, rb) && host_adjacent(rb, nb));
    let len = cycle.len();
    let pos = (0..len)
        .find(|&i| {
            let pair = (cycle[i], cycle[(i + 1) % len]);
            pair == (a, b) || pair == (b, a)
        })
        .expect("open d-edge is on the cycle");
    let detour = if (cycle[pos], cycle[(pos + 1) % len]) == (a, b) {
        [na, ra, rb, nb]
    } else {
        [nb, rb, ra, na]
    };
    cycle.splice(pos + 1..pos + 1, detour);
}

/// True when `seq` is a simple cycle of `g` (wrapping edge included).
pub fn is_simple_cycle(g: &Graph, seq: &[usize]) -> bool {
    if seq.len() < 3 {
        return false;
    }
    let mut seen = VertexSubset::empty(g.vertex_count());
    for &v in seq {
        if seen.contains(v) {
            return false;
        }
        seen.insert(v);
    }
    (0..seq.len()).all(|i| g.has_edge(seq[i], seq[(i + 1) % seq.len()]))
}

/// Path-game maximizer for the m x m grid that simulates an optimal
/// component game on the half grid: each round it lifts the simulated
/// component through the quadruple map, plays the spanning cycle as a path,
/// and feeds the adversary's deletion back down through the projection.
/// Guarantees game length at least vcs of the half grid against every
/// adversary; once the simulation is exhausted it keeps playing the longest
/// path it can find.
pub struct TranslatedGridMax {
    qm: QuadrupleMap,
    engine: RankingEngine,
    fallback_budget: u64,
}

/// Builds the translated maximizer for the path game on the m x m grid
/// (odd m plays inside the (m-1)-subgrid).
pub fn translated_maximizer(m: usize) -> Result<TranslatedGridMax, GameError> {
    let qm = QuadrupleMap::new(m)?;
    let small_n = qm.small_side() * qm.small_side();
    if small_n > DEFAULT_UM_CAP {
        return Err(GameError::IllegalMove {
            round: 0,
            rule: format!("half grid has {small_n} vertices, over the minimax cap"),
        });
    }
    let engine = RankingEngine::new(qm.small_grid());
    Ok(TranslatedGridMax {
        qm,
        engine,
        fallback_budget: 500_000,
    })
}

impl TranslatedGridMax {
    /// Replays the transcript through the projection to recover the
    /// simulated game's surviving set; `None` once the simulation is over.
    fn replay_simulation(&mut self, transcript: &GameTranscript) -> Option<VertexSubset> {
        let small_n = self.qm.small_side() * self.qm.small_side();
        let mut sim = VertexSubset::full(small_n);
        for round in &transcript.rounds {
            if sim.is_empty() {
                return None;
            }
            let chosen = self.pick_component(&sim);
            let v_hat = self.qm.tau_prime(round.vertex);
            debug_assert!(chosen.contains(v_hat));
            sim = chosen.without(v_hat);
        }
        if sim.is_empty() {
            None
        } else {
            Some(sim)
        }
    }

    fn pick_component(&mut self, sim: &VertexSubset) -> VertexSubset {
        let components = self.qm.small_grid().connected_components(sim);
        components
            .iter()
            .max_by_key(|c| self.engine.value(subset_to_mask(c)))
            .expect("simulation set is nonempty")
            .clone()
    }
}

impl Maximizer for TranslatedGridMax {
    fn choose_set(
        &mut self,
        g: &Graph,
        _kind: GameKind,
        transcript: &GameTranscript,
        position: &GamePosition,
    ) -> MaxMove {
        debug_assert_eq!(g.vertex_count(), self.qm.host_side() * self.qm.host_side());
        match self.replay_simulation(transcript) {
            Some(sim) => {
                let s_hat = self.pick_component(&sim);
                let cycle = path_spanning_cycle(&self.qm, &s_hat)
                    .expect("simulated component is connected");
                debug_assert!(cycle.iter().all(|&v| position.surviving.contains(v)));
                // Cycle minus its closing edge, played as a path.
                MaxMove::Path(PathWitness::new(g, cycle).expect("cycle is a simple path"))
            }
            None => MaxMove::Path(longest_path_found(
                g,
                &position.surviving,
                self.fallback_budget,
            )),
        }
    }
}
