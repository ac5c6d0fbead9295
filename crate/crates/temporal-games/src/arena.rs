//! Static game arenas and the attractor-based solvers built on them.
//!
//! An arena is a finite directed graph whose vertices are partitioned between
//! the two players. Dead ends are allowed everywhere: a play that gets stuck
//! halts, and the objective is evaluated on the finite visited prefix. The
//! start vertex counts as visited at time 0.

use std::collections::{HashMap, VecDeque};

use crate::{Error, Limits, Result};

/// Index of a vertex inside its arena or graph.
#[derive(Debug, Clone, Copy, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub struct VertexId(pub u32);

impl VertexId {
    pub fn index(self) -> usize {
        self.0 as usize
    }
}

/// The two players. Player 1 pursues the objective, Player 2 opposes it.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub enum Player {
    One,
    Two,
}

impl Player {
    pub fn opponent(self) -> Player {
        match self {
            Player::One => Player::Two,
            Player::Two => Player::One,
        }
    }
}

impl std::fmt::Display for Player {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        match self {
            Player::One => write!(f, "1"),
            Player::Two => write!(f, "2"),
        }
    }
}

/// A finite directed game arena with a two-player vertex partition.
///
/// Adjacency lists are deduplicated and sorted by vertex index. Predecessor
/// lists are kept alongside so attractor computations run without extra
/// passes.
#[derive(Debug, Clone)]
pub struct StaticArena {
    names: Vec<String>,
    owners: Vec<Player>,
    succ: Vec<Vec<VertexId>>,
    pred: Vec<Vec<VertexId>>,
}

impl StaticArena {
    /// Validates and normalizes a raw arena description. Duplicate edges are
    /// collapsed; edges to undeclared vertices and repeated vertex names are
    /// rejected.
    pub fn build<V, E>(vertices: V, edges: E) -> Result<StaticArena>
    where
        V: IntoIterator<Item = (String, Player)>,
        E: IntoIterator<Item = (String, String)>,
    {
        let mut names = Vec::new();
        let mut owners = Vec::new();
        let mut index = HashMap::new();
        for (name, owner) in vertices {
            if index.contains_key(&name) {
                return Err(Error::DuplicateVertex(name));
            }
            index.insert(name.clone(), VertexId(names.len() as u32));
            names.push(name);
            owners.push(owner);
        }
        let mut pairs = Vec::new();
        for (src, dst) in edges {
            let u = *index
                .get(&src)
                .ok_or_else(|| Error::UnknownVertex(src.clone()))?;
            let v = *index
                .get(&dst)
                .ok_or_else(|| Error::UnknownVertex(dst.clone()))?;
            pairs.push((u, v));
        }
        Ok(Self::assemble(names, owners, pairs))
    }

    /// Builds an arena over vertices `v0..v{n-1}` from index pairs. Intended
    /// for generated instances; out-of-range indices are rejected.
    pub fn from_indexed(owners: Vec<Player>, edges: &[(u32, u32)]) -> Result<StaticArena> {
        let n = owners.len() as u32;
        let names = (0..n).map(|i| format!("v{i}")).collect();
        let mut pairs = Vec::with_capacity(edges.len());
        for &(u, v) in edges {
            if u >= n || v >= n {
                return Err(Error::UnknownVertex(format!("v{}", u.max(v))));
            }
            pairs.push((VertexId(u), VertexId(v)));
        }
        Ok(Self::assemble(names, owners, pairs))
    }

    pub(crate) fn assemble(
        names: Vec<String>,
        owners: Vec<Player>,
        mut pairs: Vec<(VertexId, VertexId)>,
    ) -> StaticArena {
        let n = names.len();
        pairs.sort_unstable();
        pairs.dedup();
        let mut succ = vec![Vec::new(); n];
        let mut pred = vec![Vec::new(); n];
        for (u, v) in pairs {
            succ[u.index()].push(v);
            pred[v.index()].push(u);
        }
        StaticArena {
            names,
            owners,
            succ,
            pred,
        }
    }

    pub fn vertex_count(&self) -> usize {
        self.names.len()
    }

    pub fn vertices(&self) -> impl Iterator<Item = VertexId> {
        (0..self.names.len() as u32).map(VertexId)
    }

    pub fn owner(&self, v: VertexId) -> Player {
        self.owners[v.index()]
    }

    pub fn name(&self, v: VertexId) -> &str {
        &self.names[v.index()]
    }

    pub fn index_of(&self, name: &str) -> Option<VertexId> {
        self.names
            .iter()
            .position(|n| n == name)
            .map(|i| VertexId(i as u32))
    }

    pub fn successors(&self, v: VertexId) -> &[VertexId] {
        &self.succ[v.index()]
    }

    pub fn predecessors(&self, v: VertexId) -> &[VertexId] {
        &self.pred[v.index()]
    }

    pub fn edge_exists(&self, u: VertexId, v: VertexId) -> bool {
        self.succ[u.index()].binary_search(&v).is_ok()
    }

    pub fn edge_count(&self) -> usize {
        self.succ.iter().map(Vec::len).sum()
    }

    pub fn is_one_player(&self) -> bool {
        self.owners.iter().all(|&o| o == Player::One)
    }

    pub fn contains(&self, v: VertexId) -> bool {
        v.index() < self.names.len()
    }
}

/// Winning condition for Player 1.
///
/// `Reach` with several targets means "reach any member". `GenReach` requires
/// hitting at least one vertex of every listed set. `Explore` requires
/// visiting every vertex of the graph.
#[derive(Debug, Clone, PartialEq, Eq)]
pub enum Objective {
    Reach(Vec<VertexId>),
    GenReach(Vec<Vec<VertexId>>),
    Explore,
}

pub(crate) fn validate_targets(n: usize, targets: &[VertexId]) -> Result<()> {
    if targets.is_empty() {
        return Err(Error::EmptyTargetSet);
    }
    for &t in targets {
        if t.index() >= n {
            return Err(Error::UnknownVertex(format!("#{}", t.0)));
        }
    }
    Ok(())
}

/// Attractor region together with backward-induction ranks.
///
/// Rank 0 is exactly the target set; the rank of any other region vertex is
/// the least number of moves within which the forcing player can guarantee a
/// visit to the targets.
#[derive(Debug, Clone)]
pub struct RankedRegion {
    ranks: Vec<Option<u32>>,
}

impl RankedRegion {
    pub fn contains(&self, v: VertexId) -> bool {
        self.ranks[v.index()].is_some()
    }

    pub fn rank(&self, v: VertexId) -> Option<u32> {
        self.ranks[v.index()]
    }

    pub fn vertices(&self) -> Vec<VertexId> {
        (0..self.ranks.len() as u32)
            .map(VertexId)
            .filter(|&v| self.contains(v))
            .collect()
    }

    pub fn len(&self) -> usize {
        self.ranks.iter().filter(|r| r.is_some()).count()
    }

    pub fn is_empty(&self) -> bool {
        self.len() == 0
    }
}

/// Result of an attractor computation: the ranked region and a positional
/// strategy for the forcing player, defined exactly on its region vertices of
/// positive rank.
#[derive(Debug, Clone)]
pub struct AttractorResult {
    pub region: RankedRegion,
    pub strategy: Vec<Option<VertexId>>,
}

/// Backward induction on raw indices, shared between plain arenas and the
/// product games. Returns per-state ranks and the forcing player's strategy.
pub(crate) fn attractor_core(
    owners: &[Player],
    succ: &[Vec<VertexId>],
    pred: &[Vec<VertexId>],
    targets: &[VertexId],
    for_player: Player,
) -> (Vec<Option<u32>>, Vec<Option<VertexId>>) {
    let n = owners.len();
    let mut ranks: Vec<Option<u32>> = vec![None; n];
    let mut remaining: Vec<usize> = succ.iter().map(Vec::len).collect();
    let mut queue = VecDeque::new();
    for &t in targets {
        if ranks[t.index()].is_none() {
            ranks[t.index()] = Some(0);
            queue.push_back(t);
        }
    }
    while let Some(u) = queue.pop_front() {
        let next_rank = ranks[u.index()].unwrap() + 1;
        for &v in &pred[u.index()] {
            if ranks[v.index()].is_some() {
                continue;
            }
            if owners[v.index()] == for_player {
                ranks[v.index()] = Some(next_rank);
                queue.push_back(v);
            } else {
                remaining[v.index()] -= 1;
                // A dead end never joins: the play halts there and the
                // forcing player gains nothing.
                if remaining[v.index()] == 0 {
                    ranks[v.index()] = Some(next_rank);
                    queue.push_back(v);
                }
            }
        }
    }
    // Deterministic strategy: among successors of minimal rank, pick the
    // lowest vertex index.
    let mut strategy = vec![None; n];
    for v in 0..n {
        let Some(r) = ranks[v] else { continue };
        if r == 0 || owners[v] != for_player {
            continue;
        }
        let best = succ[v]
            .iter()
            .copied()
            .min_by_key(|u| (ranks[u.index()].unwrap_or(u32::MAX), u.0))
            .expect("ranked vertex of the forcing player has a successor");
        debug_assert_eq!(ranks[best.index()], Some(r - 1));
        strategy[v] = Some(best);
    }
    (ranks, strategy)
}

/// Computes the set of vertices from which `for_player` can force a visit to
/// `targets`, with ranks and a positional strategy. An empty target slice
/// yields an empty region.
pub fn attractor(arena: &StaticArena, targets: &[VertexId], for_player: Player) -> AttractorResult {
    let (ranks, strategy) =
        attractor_core(&arena.owners, &arena.succ, &arena.pred, targets, for_player);
    AttractorResult {
        region: RankedRegion { ranks },
        strategy,
    }
}

/// A visit of a vertex at a discrete time. On static arenas the time is the
/// step index of the walk.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct TimedVisit {
    pub vertex: VertexId,
    pub time: u64,
}

/// Time component of a product state: either a real time or a time wrapped
/// into the periodic window of a symbolic product.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub enum TimeStamp {
    Real(u64),
    Wrapped(u64),
}

/// A state of a product game: the arena vertex, an optional time component
/// and an optional progress bitmask. For generalized reachability the mask
/// tracks which target sets have been hit; for exploration-style products it
/// tracks the visited vertices.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub struct ProductState {
    pub vertex: VertexId,
    pub time: Option<TimeStamp>,
    pub visited: Option<u64>,
}

/// Winning certificate attached to a solved game.
#[derive(Debug, Clone, PartialEq, Eq)]
pub enum Certificate {
    /// A concrete walk witnessing the objective (one-player instances).
    WitnessPath(Vec<TimedVisit>),
    /// Positional strategy on the product game (two-player wins).
    ProductStrategy(Vec<(ProductState, ProductState)>),
    /// Exploration order `v1 ⪯ v2 ⪯ …` certifying a static explorability win.
    Linearization(Vec<VertexId>),
}

/// Winner of a game plus a checkable certificate.
#[derive(Debug, Clone)]
pub struct SolveOutcome {
    pub winner: Player,
    pub certificate: Option<Certificate>,
    pub states_explored: usize,
}

impl SolveOutcome {
    pub fn witness(&self) -> Option<&[TimedVisit]> {
        match &self.certificate {
            Some(Certificate::WitnessPath(w)) => Some(w),
            _ => None,
        }
    }
}

/// Solves the plain reachability game from `start`: Player 1 wins iff she can
/// force a visit to any member of `targets`.
pub fn solve_reachability(
    arena: &StaticArena,
    start: VertexId,
    targets: &[VertexId],
) -> Result<SolveOutcome> {
    solve_reachability_with(arena, start, targets, arena.is_one_player())
}

/// As [`solve_reachability`], but the caller decides whether a winning
/// Player 1 gets a walk or a strategy. Expansions of one-player temporal
/// graphs carry a Player 2 sink that winning walks never touch, so their
/// solves still want walk certificates.
pub(crate) fn solve_reachability_with(
    arena: &StaticArena,
    start: VertexId,
    targets: &[VertexId],
    emit_walk: bool,
) -> Result<SolveOutcome> {
    validate_targets(arena.vertex_count(), targets)?;
    if !arena.contains(start) {
        return Err(Error::UnknownVertex(format!("#{}", start.0)));
    }
    let att = attractor(arena, targets, Player::One);
    let states = arena.vertex_count();
    if !att.region.contains(start) {
        return Ok(SolveOutcome {
            winner: Player::Two,
            certificate: None,
            states_explored: states,
        });
    }
    let certificate = if emit_walk {
        let mut walk = vec![TimedVisit {
            vertex: start,
            time: 0,
        }];
        let mut cur = start;
        while att.region.rank(cur) != Some(0) {
            cur = att.strategy[cur.index()].expect("walk stays on forced Player 1 states");
            walk.push(TimedVisit {
                vertex: cur,
                time: walk.len() as u64,
            });
        }
        Certificate::WitnessPath(walk)
    } else {
        let entries = att
            .strategy
            .iter()
            .enumerate()
            .filter_map(|(v, s)| {
                s.map(|next| {
                    (
                        ProductState {
                            vertex: VertexId(v as u32),
                            time: None,
                            visited: None,
                        },
                        ProductState {
                            vertex: next,
                            time: None,
                            visited: None,
                        },
                    )
                })
            })
            .collect();
        Certificate::ProductStrategy(entries)
    };
    Ok(SolveOutcome {
        winner: Player::One,
        certificate: Some(certificate),
        states_explored: states,
    })
}

/// The product of an arena with the lattice of hit target sets, restricted to
/// the states reachable from the start.
pub(crate) struct GenReachProduct {
    /// Per product state: arena vertex and progress mask.
    pub states: Vec<(VertexId, u64)>,
    pub owners: Vec<Player>,
    pub succ: Vec<Vec<VertexId>>,
    pub pred: Vec<Vec<VertexId>>,
    pub targets: Vec<VertexId>,
    pub start: VertexId,
}

pub(crate) fn build_genreach_product(
    arena: &StaticArena,
    start: VertexId,
    target_sets: &[Vec<VertexId>],
    limits: &Limits,
) -> Result<GenReachProduct> {
    let n = arena.vertex_count();
    if target_sets.is_empty() {
        return Err(Error::EmptyTargetSet);
    }
    if target_sets.len() > 63 {
        return Err(Error::TooLarge(format!(
            "{} target sets exceed the 63-set progress mask",
            target_sets.len()
        )));
    }
    for set in target_sets {
        validate_targets(n, set)?;
    }
    if !arena.contains(start) {
        return Err(Error::UnknownVertex(format!("#{}", start.0)));
    }
    let mut hits = vec![0u64; n];
    for (i, set) in target_sets.iter().enumerate() {
        for &v in set {
            hits[v.index()] |= 1 << i;
        }
    }
    let full: u64 = (1 << target_sets.len()) - 1;

    let mut states: Vec<(VertexId, u64)> = Vec::new();
    let mut index: HashMap<(VertexId, u64), u32> = HashMap::new();
    let mut succ: Vec<Vec<VertexId>> = Vec::new();
    let mut owners = Vec::new();
    let mut targets = Vec::new();
    let mut queue = VecDeque::new();

    let start_mask = hits[start.index()];
    index.insert((start, start_mask), 0);
    states.push((start, start_mask));
    owners.push(arena.owner(start));
    succ.push(Vec::new());
    if start_mask == full {
        targets.push(VertexId(0));
    } else {
        queue.push_back(0u32);
    }

    while let Some(id) = queue.pop_front() {
        let (v, mask) = states[id as usize];
        let mut out = Vec::new();
        for &u in arena.successors(v) {
            let next = (u, mask | hits[u.index()]);
            let next_id = match index.get(&next) {
                Some(&i) => i,
                None => {
                    let i = states.len() as u32;
                    if states.len() as u64 >= limits.state_cap {
                        return Err(Error::StateSpaceLimit {
                            needed: states.len() as u128 + 1,
                            cap: limits.state_cap as u128,
                        });
                    }
                    index.insert(next, i);
                    states.push(next);
                    owners.push(arena.owner(u));
                    succ.push(Vec::new());
                    if next.1 == full {
                        // Completed states are terminal targets; there is no
                        // need to expand past them.
                        targets.push(VertexId(i));
                    } else {
                        queue.push_back(i);
                    }
                    i
                }
            };
            out.push(VertexId(next_id));
        }
        out.sort_unstable();
        out.dedup();
        succ[id as usize] = out;
    }

    let mut pred = vec![Vec::new(); states.len()];
    for (id, out) in succ.iter().enumerate() {
        for &t in out {
            pred[t.index()].push(VertexId(id as u32));
        }
    }
    Ok(GenReachProduct {
        states,
        owners,
        succ,
        pred,
        targets,
        start: VertexId(0),
    })
}

/// Solves the generalized reachability game: Player 1 wins iff she forces a
/// visit to at least one member of every target set. The start vertex counts
/// as visited.
///
/// Internally this is an attractor computation on the product of the arena
/// with the set of already-hit targets, built lazily from the start state.
pub fn solve_generalized_reachability(
    arena: &StaticArena,
    start: VertexId,
    target_sets: &[Vec<VertexId>],
    limits: &Limits,
) -> Result<SolveOutcome> {
    solve_generalized_reachability_with(arena, start, target_sets, limits, arena.is_one_player())
}

/// See [`solve_reachability_with`] for the role of `emit_walk`.
pub(crate) fn solve_generalized_reachability_with(
    arena: &StaticArena,
    start: VertexId,
    target_sets: &[Vec<VertexId>],
    limits: &Limits,
    emit_walk: bool,
) -> Result<SolveOutcome> {
    let product = build_genreach_product(arena, start, target_sets, limits)?;
    let (ranks, strategy) = attractor_core(
        &product.owners,
        &product.succ,
        &product.pred,
        &product.targets,
        Player::One,
    );
    let states_explored = product.states.len();
    if ranks[product.start.index()].is_none() {
        return Ok(SolveOutcome {
            winner: Player::Two,
            certificate: None,
            states_explored,
        });
    }
    let certificate = if emit_walk {
        let mut walk = Vec::new();
        let mut cur = product.start;
        let mut time = 0u64;
        walk.push(TimedVisit {
            vertex: product.states[cur.index()].0,
            time,
        });
        while ranks[cur.index()] != Some(0) {
            cur = strategy[cur.index()].expect("walk stays on forced Player 1 states");
            time += 1;
            walk.push(TimedVisit {
                vertex: product.states[cur.index()].0,
                time,
            });
        }
        Certificate::WitnessPath(walk)
    } else {
        let entries = strategy
            .iter()
            .enumerate()
            .filter_map(|(id, s)| {
                s.map(|next| {
                    let (v, mask) = product.states[id];
                    let (nv, nmask) = product.states[next.index()];
                    (
                        ProductState {
                            vertex: v,
                            time: None,
                            visited: Some(mask),
                        },
                        ProductState {
                            vertex: nv,
                            time: None,
                            visited: Some(nmask),
                        },
                    )
                })
            })
            .collect();
        Certificate::ProductStrategy(entries)
    };
    Ok(SolveOutcome {
        winner: Player::One,
        certificate: Some(certificate),
        states_explored,
    })
}

/// The reach preorder `⪯`: entry `(u, v)` holds iff Player 1 wins the
/// reachability game from `u` with target `v`.
#[derive(Debug, Clone)]
pub struct ReachPreorder {
    n: usize,
    rel: Vec<bool>,
}

impl ReachPreorder {
    pub fn holds(&self, u: VertexId, v: VertexId) -> bool {
        self.rel[u.index() * self.n + v.index()]
    }

    /// Whether every pair of vertices is comparable.
    pub fn is_total(&self) -> bool {
        for u in 0..self.n {
            for v in 0..self.n {
                if !self.rel[u * self.n + v] && !self.rel[v * self.n + u] {
                    return false;
                }
            }
        }
        true
    }

    pub fn vertex_count(&self) -> usize {
        self.n
    }
}

/// Computes the reach preorder with one attractor call per target vertex.
pub fn reach_preorder(arena: &StaticArena) -> ReachPreorder {
    let n = arena.vertex_count();
    let mut rel = vec![false; n * n];
    for v in arena.vertices() {
        let att = attractor(arena, &[v], Player::One);
        for u in arena.vertices() {
            rel[u.index() * n + v.index()] = att.region.contains(u);
        }
    }
    ReachPreorder { n, rel }
}

/// Solves the static explorability game from `start`.
///
/// Player 1 wins iff the reach preorder is total and `start ⪯ u` for every
/// vertex `u`. The winning certificate is a linearization
/// `start = v1 ⪯ v2 ⪯ … ⪯ vn`: Player 1 explores by running the reachability
/// strategies one after the other.
pub fn solve_static_explorability(arena: &StaticArena, start: VertexId) -> SolveOutcome {
    assert!(arena.contains(start), "start vertex must be declared");
    let pre = reach_preorder(arena);
    let n = arena.vertex_count();
    let states_explored = n * n;
    let covers = arena.vertices().all(|u| pre.holds(start, u));
    if !covers || !pre.is_total() {
        return SolveOutcome {
            winner: Player::Two,
            certificate: None,
            states_explored,
        };
    }
    // In a total reach preorder, a larger down-set means earlier in the
    // linearization; the start has the full down-set by the cover condition.
    let mut order: Vec<VertexId> = arena.vertices().collect();
    let count = |u: VertexId| arena.vertices().filter(|&v| pre.holds(u, v)).count();
    let counts: Vec<usize> = order.iter().map(|&u| count(u)).collect();
    order.sort_by_key(|&u| (std::cmp::Reverse(counts[u.index()]), u != start, u.0));
    debug_assert!(order
        .windows(2)
        .all(|w| pre.holds(w[0], w[1])));
    SolveOutcome {
        winner: Player::One,
        certificate: Some(Certificate::Linearization(order)),
        states_explored,
    }
}
