//! Explicit temporal graphs: finite edge-availability sets, the time
//! expansion into a static arena, objective lifting, waiting semantics and a
//! dedicated one-player exploration search.
//!
//! Traversing an edge at time `θ` lands at time `θ + 1`. No edge is available
//! past the horizon, so plays halt there and the objective is evaluated on
//! the visited prefix.

use std::collections::{BTreeMap, HashSet};

use crate::arena::{
    solve_generalized_reachability_with, solve_reachability_with, Certificate, Objective, Player,
    ProductState, SolveOutcome, StaticArena, TimeStamp, TimedVisit, VertexId,
};
use crate::{Error, Limits, Result};

/// A finite set of discrete times kept as sorted, disjoint, merged closed
/// intervals.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct TimeSet {
    intervals: Vec<(u64, u64)>,
}

impl TimeSet {
    /// Normalizes arbitrary closed intervals: sorts, merges overlapping and
    /// adjacent ranges. Intervals with `lo > hi` are rejected.
    pub fn new<I: IntoIterator<Item = (u64, u64)>>(intervals: I) -> Result<TimeSet> {
        let mut raw: Vec<(u64, u64)> = Vec::new();
        for (lo, hi) in intervals {
            if lo > hi {
                return Err(Error::Invalid(format!("interval [{lo},{hi}] is empty")));
            }
            raw.push((lo, hi));
        }
        raw.sort_unstable();
        let mut merged: Vec<(u64, u64)> = Vec::new();
        for (lo, hi) in raw {
            match merged.last_mut() {
                Some((_, last_hi)) if lo <= last_hi.saturating_add(1) => {
                    *last_hi = (*last_hi).max(hi);
                }
                _ => merged.push((lo, hi)),
            }
        }
        Ok(TimeSet { intervals: merged })
    }

    pub fn empty() -> TimeSet {
        TimeSet {
            intervals: Vec::new(),
        }
    }

    pub fn singleton(t: u64) -> TimeSet {
        TimeSet {
            intervals: vec![(t, t)],
        }
    }

    pub fn interval(lo: u64, hi: u64) -> TimeSet {
        assert!(lo <= hi, "interval [{lo},{hi}] is empty");
        TimeSet {
            intervals: vec![(lo, hi)],
        }
    }

    pub fn contains(&self, t: u64) -> bool {
        self.intervals
            .binary_search_by(|&(lo, hi)| {
                if t < lo {
                    std::cmp::Ordering::Greater
                } else if t > hi {
                    std::cmp::Ordering::Less
                } else {
                    std::cmp::Ordering::Equal
                }
            })
            .is_ok()
    }

    pub fn is_empty(&self) -> bool {
        self.intervals.is_empty()
    }

    /// Largest member, or `None` for the empty set.
    pub fn max(&self) -> Option<u64> {
        self.intervals.last().map(|&(_, hi)| hi)
    }

    pub fn union(&self, other: &TimeSet) -> TimeSet {
        TimeSet::new(
            self.intervals
                .iter()
                .chain(other.intervals.iter())
                .copied(),
        )
        .expect("canonical inputs")
    }

    pub fn intervals(&self) -> &[(u64, u64)] {
        &self.intervals
    }
}

/// A directed graph whose edges carry explicit availability sets.
///
/// Edges with an empty availability are simply absent. The `waiting` flag
/// records that self-loops covering the whole horizon have been installed.
#[derive(Debug, Clone)]
pub struct TemporalGraph {
    names: Vec<String>,
    owners: Vec<Player>,
    avail: BTreeMap<(VertexId, VertexId), TimeSet>,
    waiting: bool,
}

impl TemporalGraph {
    pub fn new<V: IntoIterator<Item = (String, Player)>>(vertices: V) -> Result<TemporalGraph> {
        let mut names = Vec::new();
        let mut owners = Vec::new();
        let mut seen = HashSet::new();
        for (name, owner) in vertices {
            if !seen.insert(name.clone()) {
                return Err(Error::DuplicateVertex(name));
            }
            names.push(name);
            owners.push(owner);
        }
        Ok(TemporalGraph {
            names,
            owners,
            avail: BTreeMap::new(),
            waiting: false,
        })
    }

    /// Adds (or widens) an edge. An empty time set is a no-op.
    pub fn add_edge(&mut self, u: VertexId, v: VertexId, times: TimeSet) -> Result<()> {
        if u.index() >= self.names.len() || v.index() >= self.names.len() {
            return Err(Error::UnknownVertex(format!("#{}", u.0.max(v.0))));
        }
        if times.is_empty() {
            return Ok(());
        }
        self.avail
            .entry((u, v))
            .and_modify(|t| *t = t.union(&times))
            .or_insert(times);
        Ok(())
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

    pub fn edges(&self) -> impl Iterator<Item = (VertexId, VertexId, &TimeSet)> {
        self.avail.iter().map(|(&(u, v), t)| (u, v, t))
    }

    pub fn edges_from(&self, v: VertexId) -> impl Iterator<Item = (VertexId, &TimeSet)> {
        self.avail
            .range((v, VertexId(0))..=(v, VertexId(u32::MAX)))
            .map(|(&(_, u), t)| (u, t))
    }

    pub fn avail(&self, u: VertexId, v: VertexId) -> Option<&TimeSet> {
        self.avail.get(&(u, v))
    }

    pub fn is_one_player(&self) -> bool {
        self.owners.iter().all(|&o| o == Player::One)
    }

    pub fn waiting(&self) -> bool {
        self.waiting
    }

    pub fn edge_count(&self) -> usize {
        self.avail.len()
    }
}

/// Largest time at which any edge is available; 0 for an edgeless graph.
pub fn horizon(graph: &TemporalGraph) -> u64 {
    graph
        .avail
        .values()
        .filter_map(TimeSet::max)
        .max()
        .unwrap_or(0)
}

/// Installs waiting semantics: a self-loop available on `[0, horizon]` on
/// every vertex. Idempotent, and marks the graph as waiting.
pub fn apply_waiting(graph: &TemporalGraph) -> TemporalGraph {
    let h = horizon(graph);
    let mut out = graph.clone();
    for v in graph.vertices() {
        out.add_edge(v, v, TimeSet::interval(0, h))
            .expect("vertices are declared");
    }
    out.waiting = true;
    out
}

/// A state of the time expansion: a vertex at a layer time, or the absorbing
/// sink reached when a play gets stuck.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum ExpandedState {
    At { vertex: VertexId, time: u64 },
    Sink,
}

/// The static arena over `(vertex, time)` pairs encoding a temporal graph's
/// timed moves, plus the back-map from expanded states to the original graph.
///
/// Layers run from 0 to `horizon + 1` so that a final traversal at the
/// horizon lands in a real state; every state without an available move
/// routes to a Player 2 sink with a self-loop.
#[derive(Debug)]
pub struct ExpandedArena {
    pub arena: StaticArena,
    back: Vec<ExpandedState>,
    pub horizon: u64,
    base: usize,
}

impl ExpandedArena {
    pub fn state(&self, id: VertexId) -> ExpandedState {
        self.back[id.index()]
    }

    pub fn id_of(&self, vertex: VertexId, time: u64) -> VertexId {
        debug_assert!(time <= self.horizon + 1);
        VertexId(time as u32 * self.base as u32 + vertex.0)
    }

    pub fn sink(&self) -> VertexId {
        VertexId((self.base as u64 * (self.horizon + 2)) as u32)
    }
}

/// Builds the time expansion. The result has exactly
/// `|V| * (horizon + 2) + 1` states.
pub fn expand(graph: &TemporalGraph, limits: &Limits) -> Result<ExpandedArena> {
    let n = graph.vertex_count() as u64;
    if n == 0 {
        return Err(Error::Invalid("cannot expand an empty graph".into()));
    }
    let h = horizon(graph);
    let layers = h + 2;
    let states = n
        .checked_mul(layers)
        .and_then(|s| s.checked_add(1))
        .filter(|&s| s <= limits.state_cap && s <= u32::MAX as u64)
        .ok_or(Error::StateSpaceLimit {
            needed: n as u128 * (layers as u128) + 1,
            cap: limits.state_cap as u128,
        })?;

    let mut names = Vec::with_capacity(states as usize);
    let mut owners = Vec::with_capacity(states as usize);
    let mut back = Vec::with_capacity(states as usize);
    for theta in 0..layers {
        for v in graph.vertices() {
            names.push(format!("{}@{}", graph.name(v), theta));
            owners.push(graph.owner(v));
            back.push(ExpandedState::At {
                vertex: v,
                time: theta,
            });
        }
    }
    let sink = VertexId((states - 1) as u32);
    names.push("_bot".to_string());
    owners.push(Player::Two);
    back.push(ExpandedState::Sink);

    let id = |v: VertexId, theta: u64| VertexId((theta * n) as u32 + v.0);
    let mut edges = Vec::new();
    for theta in 0..layers {
        for v in graph.vertices() {
            let mut any = false;
            if theta <= h {
                for (u, times) in graph.edges_from(v) {
                    if times.contains(theta) {
                        edges.push((id(v, theta), id(u, theta + 1)));
                        any = true;
                    }
                }
            }
            if !any {
                edges.push((id(v, theta), sink));
            }
        }
    }
    edges.push((sink, sink));

    Ok(ExpandedArena {
        arena: StaticArena::assemble(names, owners, edges),
        back,
        horizon: h,
        base: graph.vertex_count(),
    })
}

/// Lifts an objective of the temporal game onto its expansion.
///
/// Reach targets become `(v, θ)` for every layer θ; generalized reachability
/// is lifted setwise; exploration becomes generalized reachability with one
/// lifted singleton-origin set per vertex.
pub fn lift_objective(objective: &Objective, expansion: &ExpandedArena) -> Objective {
    let layers = 0..=expansion.horizon + 1;
    let lift_set = |set: &[VertexId]| -> Vec<VertexId> {
        set.iter()
            .flat_map(|&v| layers.clone().map(move |theta| expansion.id_of(v, theta)))
            .collect()
    };
    match objective {
        Objective::Reach(targets) => Objective::Reach(lift_set(targets)),
        Objective::GenReach(sets) => {
            Objective::GenReach(sets.iter().map(|s| lift_set(s)).collect())
        }
        Objective::Explore => Objective::GenReach(
            (0..expansion.base as u32)
                .map(|v| lift_set(&[VertexId(v)]))
                .collect(),
        ),
    }
}

fn remap_witness(expansion: &ExpandedArena, walk: &[TimedVisit]) -> Vec<TimedVisit> {
    walk.iter()
        .map(|visit| match expansion.state(visit.vertex) {
            ExpandedState::At { vertex, time } => {
                debug_assert_eq!(time, visit.time);
                TimedVisit { vertex, time }
            }
            ExpandedState::Sink => unreachable!("winning walks never visit the sink"),
        })
        .collect()
}

fn remap_product_state(expansion: &ExpandedArena, state: ProductState) -> ProductState {
    match expansion.state(state.vertex) {
        ExpandedState::At { vertex, time } => ProductState {
            vertex,
            time: Some(TimeStamp::Real(time)),
            visited: state.visited,
        },
        ExpandedState::Sink => ProductState {
            vertex: VertexId(u32::MAX),
            time: None,
            visited: state.visited,
        },
    }
}

/// Solves a game on a temporal graph by solving the lifted game on its
/// expansion from `(start, 0)` and mapping the outcome back.
pub fn solve_temporal(
    graph: &TemporalGraph,
    start: VertexId,
    objective: &Objective,
    limits: &Limits,
) -> Result<SolveOutcome> {
    if start.index() >= graph.vertex_count() {
        return Err(Error::UnknownVertex(format!("#{}", start.0)));
    }
    let expansion = expand(graph, limits)?;
    let lifted = lift_objective(objective, &expansion);
    let start_id = expansion.id_of(start, 0);
    // The sink is Player 2's, so walk certificates are decided by the
    // original graph, not the expansion.
    let emit_walk = graph.is_one_player();
    let outcome = match &lifted {
        Objective::Reach(targets) => {
            solve_reachability_with(&expansion.arena, start_id, targets, emit_walk)?
        }
        Objective::GenReach(sets) => solve_generalized_reachability_with(
            &expansion.arena,
            start_id,
            sets,
            limits,
            emit_walk,
        )?,
        Objective::Explore => unreachable!("lifting eliminates Explore"),
    };
    let certificate = outcome.certificate.map(|certificate| match certificate {
        Certificate::WitnessPath(walk) => {
            Certificate::WitnessPath(remap_witness(&expansion, &walk))
        }
        Certificate::ProductStrategy(entries) => Certificate::ProductStrategy(
            entries
                .into_iter()
                .map(|(from, to)| {
                    (
                        remap_product_state(&expansion, from),
                        remap_product_state(&expansion, to),
                    )
                })
                .collect(),
        ),
        Certificate::Linearization(order) => Certificate::Linearization(order),
    });
    Ok(SolveOutcome {
        winner: outcome.winner,
        certificate,
        states_explored: outcome.states_explored,
    })
}

/// Depth-first search for an exploring walk in a one-player temporal graph.
///
/// Walks over `(vertex, time, visited)` with memoization of failed states;
/// Player 1 wins iff some walk from `(start, 0)` of length at most
/// `horizon + 1` visits all vertices.
pub fn enumerate_explorations(
    graph: &TemporalGraph,
    start: VertexId,
    limits: &Limits,
) -> Result<SolveOutcome> {
    if let Some(v) = graph.vertices().find(|&v| graph.owner(v) == Player::Two) {
        return Err(Error::OnePlayerOnly(graph.name(v).to_string()));
    }
    if start.index() >= graph.vertex_count() {
        return Err(Error::UnknownVertex(format!("#{}", start.0)));
    }
    let n = graph.vertex_count();
    if n > 63 {
        return Err(Error::TooLarge(format!(
            "{n} vertices exceed the 63-vertex visited mask"
        )));
    }
    let h = horizon(graph);
    let full: u64 = (1 << n) - 1;
    let adjacency: Vec<Vec<(VertexId, &TimeSet)>> = graph
        .vertices()
        .map(|v| graph.edges_from(v).collect())
        .collect();

    struct Frame {
        vertex: VertexId,
        time: u64,
        visited: u64,
        next_edge: usize,
    }

    let mut failed: HashSet<(VertexId, u64, u64)> = HashSet::new();
    let mut stack = vec![Frame {
        vertex: start,
        time: 0,
        visited: 1 << start.0,
        next_edge: 0,
    }];
    let mut won = stack[0].visited == full;

    while !won {
        let Some(frame) = stack.last_mut() else { break };
        let out = &adjacency[frame.vertex.index()];
        let mut pushed = false;
        while frame.next_edge < out.len() {
            let (u, times) = out[frame.next_edge];
            frame.next_edge += 1;
            if frame.time > h || !times.contains(frame.time) {
                continue;
            }
            let visited = frame.visited | (1 << u.0);
            let time = frame.time + 1;
            if visited != full && failed.contains(&(u, time, visited)) {
                continue;
            }
            stack.push(Frame {
                vertex: u,
                time,
                visited,
                next_edge: 0,
            });
            if visited == full {
                won = true;
            }
            pushed = true;
            break;
        }
        if !pushed && !won {
            let dead = stack.pop().expect("non-empty stack");
            failed.insert((dead.vertex, dead.time, dead.visited));
            if failed.len() as u64 > limits.state_cap {
                return Err(Error::StateSpaceLimit {
                    needed: failed.len() as u128,
                    cap: limits.state_cap as u128,
                });
            }
        }
    }

    let states_explored = failed.len() + stack.len();
    if won {
        let walk = stack
            .iter()
            .map(|frame| TimedVisit {
                vertex: frame.vertex,
                time: frame.time,
            })
            .collect();
        Ok(SolveOutcome {
            winner: Player::One,
            certificate: Some(Certificate::WitnessPath(walk)),
            states_explored,
        })
    } else {
        Ok(SolveOutcome {
            winner: Player::Two,
            certificate: None,
            states_explored,
        })
    }
}
