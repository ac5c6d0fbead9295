//! Independent oracles and certificate checkers.
//!
//! Nothing here shares code with the attractor-based solvers: the minimax
//! oracle is a depth-bounded game-tree search, and the witness/strategy
//! checkers replay certificates directly against the game definition. They
//! exist to be obviously correct, not fast.

use std::collections::HashMap;

use crate::arena::{AttractorResult, Objective, Player, StaticArena, TimedVisit, VertexId};
pub use crate::arena::{ProductState, TimeStamp};
use crate::symbolic::SymbolicTemporalGraph;
use crate::temporal::TemporalGraph;
use crate::{Error, Limits, Result};

/// A uniform read-only view of the three game forms, sufficient to replay
/// walks.
#[derive(Clone, Copy)]
pub enum GameRef<'a> {
    Static(&'a StaticArena),
    Temporal(&'a TemporalGraph),
    Symbolic(&'a SymbolicTemporalGraph),
}

impl<'a> GameRef<'a> {
    pub fn vertex_count(&self) -> usize {
        match self {
            GameRef::Static(a) => a.vertex_count(),
            GameRef::Temporal(g) => g.vertex_count(),
            GameRef::Symbolic(g) => g.vertex_count(),
        }
    }

    /// Whether the edge `(u, v)` can be traversed at time `theta`. Static
    /// edges are available at all times.
    pub fn edge_available(&self, u: VertexId, v: VertexId, theta: u64) -> bool {
        match self {
            GameRef::Static(a) => a.edge_exists(u, v),
            GameRef::Temporal(g) => g.avail(u, v).is_some_and(|t| t.contains(theta)),
            GameRef::Symbolic(g) => g.avail(u, v).is_some_and(|f| f.eval(theta)),
        }
    }
}

fn progress_masks(
    n: usize,
    objective: &Objective,
) -> Result<(Vec<u64>, u64)> {
    let mut hits = vec![0u64; n];
    let full: u64;
    match objective {
        Objective::Reach(targets) => {
            crate::arena::validate_targets(n, targets)?;
            for &t in targets {
                hits[t.index()] |= 1;
            }
            full = 1;
        }
        Objective::GenReach(sets) => {
            if sets.is_empty() {
                return Err(Error::EmptyTargetSet);
            }
            if sets.len() > 63 {
                return Err(Error::TooLarge(format!(
                    "{} target sets exceed the 63-set progress mask",
                    sets.len()
                )));
            }
            for (i, set) in sets.iter().enumerate() {
                crate::arena::validate_targets(n, set)?;
                for &v in set {
                    hits[v.index()] |= 1 << i;
                }
            }
            full = (1 << sets.len()) - 1;
        }
        Objective::Explore => {
            if n > 63 {
                return Err(Error::TooLarge(format!(
                    "{n} vertices exceed the 63-vertex visited mask"
                )));
            }
            for (v, h) in hits.iter_mut().enumerate() {
                *h = 1 << v;
            }
            full = (1 << n) - 1;
        }
    }
    Ok((hits, full))
}

/// Naive game-tree evaluation: can Player 1 force completing the objective
/// within `depth_cap` moves?
///
/// Search runs over `(vertex, progress signature, remaining depth)` with
/// memoization. Progress signatures are monotone and bounded, so any play
/// that makes no progress for `|V| * |signatures|` moves is losing for
/// Player 1; a `depth_cap` of at least that product yields the true winner.
pub fn minimax_oracle(
    arena: &StaticArena,
    start: VertexId,
    objective: &Objective,
    depth_cap: u32,
    limits: &Limits,
) -> Result<Player> {
    let n = arena.vertex_count();
    if start.index() >= n {
        return Err(Error::UnknownVertex(format!("#{}", start.0)));
    }
    let (hits, full) = progress_masks(n, objective)?;
    let signatures = (full as u128) + 1;
    if (n as u128) * signatures > limits.state_cap as u128 {
        return Err(Error::StateSpaceLimit {
            needed: n as u128 * signatures,
            cap: limits.state_cap as u128,
        });
    }

    struct Search<'a> {
        arena: &'a StaticArena,
        hits: Vec<u64>,
        full: u64,
        memo: HashMap<(VertexId, u64, u32), bool>,
    }

    impl Search<'_> {
        fn wins(&mut self, v: VertexId, sig: u64, depth: u32) -> bool {
            if sig == self.full {
                return true;
            }
            if depth == 0 {
                return false;
            }
            if let Some(&known) = self.memo.get(&(v, sig, depth)) {
                return known;
            }
            let succ = self.arena.successors(v);
            let result = if succ.is_empty() {
                // The play halts; the objective stays unmet.
                false
            } else {
                let mine = self.arena.owner(v) == Player::One;
                let mut result = !mine;
                for &u in succ {
                    let wins = self.wins(u, sig | self.hits[u.index()], depth - 1);
                    if wins == mine {
                        result = mine;
                        break;
                    }
                }
                result
            };
            self.memo.insert((v, sig, depth), result);
            result
        }
    }

    let mut search = Search {
        arena,
        hits,
        full,
        memo: HashMap::new(),
    };
    let sig0 = search.hits[start.index()];
    Ok(if search.wins(start, sig0, depth_cap) {
        Player::One
    } else {
        Player::Two
    })
}

/// Depth cap sufficient for [`minimax_oracle`] to compute the true winner.
pub fn sufficient_depth(arena: &StaticArena, objective: &Objective) -> u32 {
    let n = arena.vertex_count() as u64;
    let signatures = match objective {
        Objective::Reach(_) => 2,
        Objective::GenReach(sets) => 1u64 << sets.len(),
        Objective::Explore => 1u64 << n.min(63),
    };
    n.saturating_mul(signatures).min(u32::MAX as u64) as u32
}

/// Replays a timed walk against a game and its objective.
///
/// The walk must start at `(start, 0)`, advance time by one per step, only
/// use edges available at the departure time, and its visited vertices must
/// satisfy the objective. Ownership is irrelevant: a walk certifies wins of
/// one-player games or a claimed Player 1 line. Returns `false` on any
/// violation.
pub fn check_witness(
    game: GameRef<'_>,
    start: VertexId,
    objective: &Objective,
    witness: &[TimedVisit],
) -> bool {
    let n = game.vertex_count();
    let Some(first) = witness.first() else {
        return false;
    };
    if first.vertex != start || first.time != 0 {
        return false;
    }
    if witness.iter().any(|w| w.vertex.index() >= n) {
        return false;
    }
    for (i, pair) in witness.windows(2).enumerate() {
        if pair[1].time != i as u64 + 1 {
            return false;
        }
        if !game.edge_available(pair[0].vertex, pair[1].vertex, pair[0].time) {
            return false;
        }
    }
    let mut visited = vec![false; n];
    for w in witness {
        visited[w.vertex.index()] = true;
    }
    match objective {
        Objective::Reach(targets) => targets.iter().any(|t| visited[t.index()]),
        Objective::GenReach(sets) => sets
            .iter()
            .all(|set| set.iter().any(|t| visited[t.index()])),
        Objective::Explore => visited.iter().all(|&v| v),
    }
}

/// Validates an attractor's rank certificate.
///
/// Checks that rank 0 is exactly the target set inside the region, that the
/// strategy is defined exactly on the forcing player's region vertices of
/// positive rank and strictly decreases the rank, and that all successors of
/// the opponent's ranked vertices stay in the region with smaller rank.
pub fn check_strategy(
    arena: &StaticArena,
    result: &AttractorResult,
    targets: &[VertexId],
    for_player: Player,
) -> bool {
    let n = arena.vertex_count();
    if result.strategy.len() != n {
        return false;
    }
    let mut is_target = vec![false; n];
    for &t in targets {
        if t.index() >= n {
            return false;
        }
        is_target[t.index()] = true;
    }
    for v in arena.vertices() {
        let rank = result.region.rank(v);
        match rank {
            None => {
                if result.strategy[v.index()].is_some() {
                    return false;
                }
            }
            Some(0) => {
                if !is_target[v.index()] || result.strategy[v.index()].is_some() {
                    return false;
                }
            }
            Some(r) => {
                if is_target[v.index()] {
                    return false;
                }
                if arena.owner(v) == for_player {
                    let Some(next) = result.strategy[v.index()] else {
                        return false;
                    };
                    if !arena.edge_exists(v, next) {
                        return false;
                    }
                    match result.region.rank(next) {
                        Some(nr) if nr < r => {}
                        _ => return false,
                    }
                } else {
                    if result.strategy[v.index()].is_some() {
                        return false;
                    }
                    if arena.successors(v).is_empty() {
                        return false;
                    }
                    for &u in arena.successors(v) {
                        match result.region.rank(u) {
                            Some(nr) if nr < r => {}
                            _ => return false,
                        }
                    }
                }
            }
        }
    }
    true
}
