//! Symbolic temporal graphs: edge availability given as a formula over time.
//!
//! The formula language covers intervals, arithmetic progressions, bit tests
//! on the binary expansion of the time, and boolean combinations. Every
//! formula denotes an ultimately periodic set of times, and a period bound
//! `(b, p)` is computed compositionally, so games reduce to a reachability
//! game on a product whose time component is wrapped into `[0, b + p)`.

use std::collections::{BTreeMap, HashMap, HashSet, VecDeque};

use crate::arena::{
    attractor, Certificate, Objective, Player, ProductState, SolveOutcome, StaticArena, TimeStamp,
    TimedVisit, VertexId,
};
use crate::{Error, Limits, Result};

/// A formula over a single time variable.
///
/// `ArithProg { base, period }` denotes `{ base + i * period : i ≥ 0 }`;
/// `BitEq { bit, value }` tests one bit of the binary expansion of the time.
/// Evaluation is total over the naturals.
#[derive(Debug, Clone, PartialEq, Eq)]
pub enum AvailFormula {
    Interval(u64, u64),
    ArithProg { base: u64, period: u64 },
    BitEq { bit: u32, value: bool },
    Always,
    Never,
    And(Vec<AvailFormula>),
    Or(Vec<AvailFormula>),
    Not(Box<AvailFormula>),
}

impl AvailFormula {
    pub fn bit_eq(bit: u32, value: bool) -> AvailFormula {
        AvailFormula::BitEq { bit, value }
    }

    pub fn arith_prog(base: u64, period: u64) -> Result<AvailFormula> {
        if period == 0 {
            return Err(Error::Invalid("arithmetic progression needs period >= 1".into()));
        }
        Ok(AvailFormula::ArithProg { base, period })
    }

    pub fn interval(lo: u64, hi: u64) -> Result<AvailFormula> {
        if lo > hi {
            return Err(Error::Invalid(format!("interval [{lo},{hi}] is empty")));
        }
        Ok(AvailFormula::Interval(lo, hi))
    }

    /// Conjunction collapsing the empty and singleton cases.
    pub fn and(mut parts: Vec<AvailFormula>) -> AvailFormula {
        match parts.len() {
            0 => AvailFormula::Always,
            1 => parts.pop().unwrap(),
            _ => AvailFormula::And(parts),
        }
    }

    /// Disjunction collapsing the empty and singleton cases.
    pub fn or(mut parts: Vec<AvailFormula>) -> AvailFormula {
        match parts.len() {
            0 => AvailFormula::Never,
            1 => parts.pop().unwrap(),
            _ => AvailFormula::Or(parts),
        }
    }

    /// Standard semantics at time `theta`.
    pub fn eval(&self, theta: u64) -> bool {
        match self {
            AvailFormula::Interval(lo, hi) => *lo <= theta && theta <= *hi,
            AvailFormula::ArithProg { base, period } => {
                theta >= *base && (theta - base) % period == 0
            }
            AvailFormula::BitEq { bit, value } => {
                let b = theta.checked_shr(*bit).map_or(0, |x| x & 1);
                (b == 1) == *value
            }
            AvailFormula::Always => true,
            AvailFormula::Never => false,
            AvailFormula::And(children) => children.iter().all(|c| c.eval(theta)),
            AvailFormula::Or(children) => children.iter().any(|c| c.eval(theta)),
            AvailFormula::Not(child) => !child.eval(theta),
        }
    }

    /// Largest bit index referenced by any bit test, if any.
    pub fn max_bit(&self) -> Option<u32> {
        match self {
            AvailFormula::BitEq { bit, .. } => Some(*bit),
            AvailFormula::And(children) | AvailFormula::Or(children) => {
                children.iter().filter_map(AvailFormula::max_bit).max()
            }
            AvailFormula::Not(child) => child.max_bit(),
            _ => None,
        }
    }
}

/// Evaluates a formula at a time. Thin wrapper around [`AvailFormula::eval`].
pub fn eval_avail(formula: &AvailFormula, theta: u64) -> bool {
    formula.eval(theta)
}

/// An ultimate-periodicity bound: membership at `θ ≥ base` is invariant
/// under shifting by `period`.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct PeriodBound {
    pub base: u64,
    pub period: u64,
}

fn gcd(a: u64, b: u64) -> u64 {
    if b == 0 {
        a
    } else {
        gcd(b, a % b)
    }
}

fn lcm_capped(a: u64, b: u64, cap: u64) -> Result<u64> {
    let g = gcd(a, b);
    (a / g)
        .checked_mul(b)
        .filter(|&l| l <= cap)
        .ok_or(Error::PeriodOverflow)
}

/// Compositional period bound of a formula.
///
/// Interval `[lo,hi]` is constant past `hi + 1`; a progression repeats with
/// its own period; a bit test on bit `k` has period `2^(k+1)`; conjunctions
/// and disjunctions take the max base and the lcm of the periods; negation
/// keeps its child's bound. The bound is sound but not necessarily minimal.
pub fn period_bounds(formula: &AvailFormula, limits: &Limits) -> Result<PeriodBound> {
    let bound = match formula {
        AvailFormula::Interval(_, hi) => PeriodBound {
            base: hi.checked_add(1).ok_or(Error::PeriodOverflow)?,
            period: 1,
        },
        AvailFormula::ArithProg { base, period } => PeriodBound {
            base: *base,
            period: *period,
        },
        AvailFormula::BitEq { bit, .. } => PeriodBound {
            base: 0,
            period: 1u64
                .checked_shl(bit + 1)
                .filter(|&p| p <= limits.period_cap)
                .ok_or(Error::PeriodOverflow)?,
        },
        AvailFormula::Always | AvailFormula::Never => PeriodBound { base: 0, period: 1 },
        AvailFormula::And(children) | AvailFormula::Or(children) => {
            let mut base = 0;
            let mut period = 1;
            for child in children {
                let b = period_bounds(child, limits)?;
                base = base.max(b.base);
                period = lcm_capped(period, b.period, limits.period_cap)?;
            }
            PeriodBound { base, period }
        }
        AvailFormula::Not(child) => period_bounds(child, limits)?,
    };
    if bound.period > limits.period_cap {
        return Err(Error::PeriodOverflow);
    }
    Ok(bound)
}

/// A directed graph whose edges carry availability formulas.
#[derive(Debug, Clone)]
pub struct SymbolicTemporalGraph {
    names: Vec<String>,
    owners: Vec<Player>,
    avail: BTreeMap<(VertexId, VertexId), AvailFormula>,
}

impl SymbolicTemporalGraph {
    pub fn new<V: IntoIterator<Item = (String, Player)>>(
        vertices: V,
    ) -> Result<SymbolicTemporalGraph> {
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
        Ok(SymbolicTemporalGraph {
            names,
            owners,
            avail: BTreeMap::new(),
        })
    }

    /// Adds an edge; a repeated pair widens the old formula with a disjunction.
    pub fn add_edge(&mut self, u: VertexId, v: VertexId, formula: AvailFormula) -> Result<()> {
        if u.index() >= self.names.len() || v.index() >= self.names.len() {
            return Err(Error::UnknownVertex(format!("#{}", u.0.max(v.0))));
        }
        self.avail
            .entry((u, v))
            .and_modify(|f| *f = AvailFormula::Or(vec![f.clone(), formula.clone()]))
            .or_insert(formula);
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

    pub fn edges(&self) -> impl Iterator<Item = (VertexId, VertexId, &AvailFormula)> {
        self.avail.iter().map(|(&(u, v), f)| (u, v, f))
    }

    pub fn edges_from(&self, v: VertexId) -> impl Iterator<Item = (VertexId, &AvailFormula)> {
        self.avail
            .range((v, VertexId(0))..=(v, VertexId(u32::MAX)))
            .map(|(&(_, u), f)| (u, f))
    }

    pub fn avail(&self, u: VertexId, v: VertexId) -> Option<&AvailFormula> {
        self.avail.get(&(u, v))
    }

    pub fn is_one_player(&self) -> bool {
        self.owners.iter().all(|&o| o == Player::One)
    }

    pub fn edge_count(&self) -> usize {
        self.avail.len()
    }

    /// Number of edges whose availability is restricted, i.e. not `always`.
    pub fn temporal_edge_count(&self) -> usize {
        self.avail
            .values()
            .filter(|f| !matches!(f, AvailFormula::Always))
            .count()
    }
}

/// Joint period bound of all edges: max of the bases and lcm of the periods.
pub fn graph_period(graph: &SymbolicTemporalGraph, limits: &Limits) -> Result<PeriodBound> {
    let mut base = 0;
    let mut period = 1;
    for formula in graph.avail.values() {
        let b = period_bounds(formula, limits)?;
        base = base.max(b.base);
        period = lcm_capped(period, b.period, limits.period_cap)?;
    }
    Ok(PeriodBound { base, period })
}

/// The reachable fragment of the wrapped product game, with the lifted
/// reachability objective over its states.
#[derive(Debug)]
pub struct PeriodicProduct {
    pub arena: StaticArena,
    /// Back-map from product state to `(vertex, wrapped time, visited set)`.
    pub nodes: Vec<ProductState>,
    pub start: VertexId,
    /// Product states satisfying the original objective.
    pub targets: Vec<VertexId>,
    pub bound: PeriodBound,
    /// `|V| * 2^|V| * (b + p)` (the visited component is dropped for plain
    /// reachability), before pruning unreachable states.
    pub conceptual_states: u128,
}

/// Builds the periodic product of a symbolic game, exploring forward from
/// `(start, {start}, 0)`.
///
/// States are `(v, S, θ)` with `S` the visited vertex set and `θ` wrapped
/// into `[0, b + p)`: an edge available at `θ` advances to `θ + 1`, except at
/// `θ = b + p - 1` where it wraps back to `b`. For plain reachability the
/// visited component is omitted.
pub fn periodic_product(
    graph: &SymbolicTemporalGraph,
    start: VertexId,
    objective: &Objective,
    limits: &Limits,
) -> Result<PeriodicProduct> {
    let n = graph.vertex_count();
    if start.index() >= n {
        return Err(Error::UnknownVertex(format!("#{}", start.0)));
    }
    let bound = graph_period(graph, limits)?;
    let window = bound
        .base
        .checked_add(bound.period)
        .ok_or(Error::PeriodOverflow)?;
    let track_visited = !matches!(objective, Objective::Reach(_));
    if track_visited && n > 63 {
        return Err(Error::TooLarge(format!(
            "{n} vertices exceed the 63-vertex visited mask"
        )));
    }
    let conceptual_states = (n as u128)
        * (if track_visited { 1u128 << n } else { 1 })
        * (window as u128);
    if conceptual_states > limits.state_cap as u128 {
        return Err(Error::StateSpaceLimit {
            needed: conceptual_states,
            cap: limits.state_cap as u128,
        });
    }

    // Per-objective target test over (vertex, visited-set).
    let mut reach_target = vec![false; n];
    let mut set_masks: Vec<u64> = Vec::new();
    match objective {
        Objective::Reach(targets) => {
            crate::arena::validate_targets(n, targets)?;
            for &t in targets {
                reach_target[t.index()] = true;
            }
        }
        Objective::GenReach(sets) => {
            if sets.is_empty() {
                return Err(Error::EmptyTargetSet);
            }
            for set in sets {
                crate::arena::validate_targets(n, set)?;
                let mut mask = 0u64;
                for &v in set {
                    mask |= 1 << v.0;
                }
                set_masks.push(mask);
            }
        }
        Objective::Explore => {}
    }
    let full: u64 = if n == 64 { u64::MAX } else { (1u64 << n) - 1 };
    let is_target = |v: VertexId, visited: u64| -> bool {
        match objective {
            Objective::Reach(_) => reach_target[v.index()],
            Objective::GenReach(_) => set_masks.iter().all(|&m| visited & m != 0),
            Objective::Explore => visited == full,
        }
    };

    type Key = (VertexId, u64, u64); // (vertex, visited, wrapped time)
    let mut index: HashMap<Key, u32> = HashMap::new();
    let mut nodes: Vec<Key> = Vec::new();
    let mut owners: Vec<Player> = Vec::new();
    let mut succ: Vec<Vec<VertexId>> = Vec::new();
    let mut targets: Vec<VertexId> = Vec::new();
    let mut queue = VecDeque::new();

    let start_visited = if track_visited { 1u64 << start.0 } else { 0 };
    let start_key = (start, start_visited, 0u64);
    index.insert(start_key, 0);
    nodes.push(start_key);
    owners.push(graph.owner(start));
    succ.push(Vec::new());
    if is_target(start, start_visited) {
        targets.push(VertexId(0));
    } else {
        queue.push_back(0u32);
    }

    while let Some(id) = queue.pop_front() {
        let (v, visited, theta) = nodes[id as usize];
        let next_theta = if theta == window - 1 { bound.base } else { theta + 1 };
        let mut out = Vec::new();
        for (u, formula) in graph.edges_from(v) {
            if !formula.eval(theta) {
                continue;
            }
            let next_visited = if track_visited {
                visited | (1 << u.0)
            } else {
                0
            };
            let key = (u, next_visited, next_theta);
            let next_id = match index.get(&key) {
                Some(&i) => i,
                None => {
                    let i = nodes.len() as u32;
                    if nodes.len() as u64 >= limits.state_cap {
                        return Err(Error::StateSpaceLimit {
                            needed: nodes.len() as u128 + 1,
                            cap: limits.state_cap as u128,
                        });
                    }
                    index.insert(key, i);
                    nodes.push(key);
                    owners.push(graph.owner(u));
                    succ.push(Vec::new());
                    if is_target(u, next_visited) {
                        // Target states are absorbing for the solver.
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

    let names = nodes
        .iter()
        .map(|&(v, visited, theta)| {
            if track_visited {
                format!("{}.{:x}.{}", graph.name(v), visited, theta)
            } else {
                format!("{}.{}", graph.name(v), theta)
            }
        })
        .collect();
    let mut pairs = Vec::new();
    for (id, out) in succ.iter().enumerate() {
        for &t in out {
            pairs.push((VertexId(id as u32), t));
        }
    }
    let arena = StaticArena::assemble(names, owners, pairs);
    let product_nodes = nodes
        .iter()
        .map(|&(v, visited, theta)| ProductState {
            vertex: v,
            time: Some(TimeStamp::Wrapped(theta)),
            visited: track_visited.then_some(visited),
        })
        .collect();
    Ok(PeriodicProduct {
        arena,
        nodes: product_nodes,
        start: VertexId(0),
        targets,
        bound,
        conceptual_states,
    })
}

/// Solves a game on a symbolic temporal graph via its periodic product.
///
/// Witnesses report real times, reconstructed from the step counter of the
/// walk rather than the wrapped time component.
pub fn solve_symbolic(
    graph: &SymbolicTemporalGraph,
    start: VertexId,
    objective: &Objective,
    limits: &Limits,
) -> Result<SolveOutcome> {
    let product = periodic_product(graph, start, objective, limits)?;
    let att = attractor(&product.arena, &product.targets, Player::One);
    let states_explored = product.arena.vertex_count();
    if !att.region.contains(product.start) {
        return Ok(SolveOutcome {
            winner: Player::Two,
            certificate: None,
            states_explored,
        });
    }
    let certificate = if graph.is_one_player() {
        let mut walk = Vec::new();
        let mut cur = product.start;
        let mut step = 0u64;
        walk.push(TimedVisit {
            vertex: product.nodes[cur.index()].vertex,
            time: step,
        });
        while att.region.rank(cur) != Some(0) {
            cur = att.strategy[cur.index()].expect("strategy covers ranked vertices");
            step += 1;
            walk.push(TimedVisit {
                vertex: product.nodes[cur.index()].vertex,
                time: step,
            });
        }
        Certificate::WitnessPath(walk)
    } else {
        let entries = att
            .strategy
            .iter()
            .enumerate()
            .filter_map(|(id, s)| {
                s.map(|next| (product.nodes[id], product.nodes[next.index()]))
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

/// Least time `θ ≥ t` at which the formula holds, scanning at most to
/// `max(t, base) + period`; `None` when the formula never holds from `t` on.
pub fn earliest_available(
    formula: &AvailFormula,
    t: u64,
    limits: &Limits,
) -> Result<Option<u64>> {
    let bound = period_bounds(formula, limits)?;
    let end = t
        .max(bound.base)
        .checked_add(bound.period)
        .ok_or(Error::PeriodOverflow)?;
    for theta in t..=end {
        if formula.eval(theta) {
            return Ok(Some(theta));
        }
    }
    Ok(None)
}
