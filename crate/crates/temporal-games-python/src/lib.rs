//! Python bindings for the game solvers: parse game files, solve them,
//! run the QBF oracle and generate reduction games from Python.

use pyo3::exceptions::PyValueError;
use pyo3::prelude::*;

use temporal_games::arena::{Certificate, Objective, Player};
use temporal_games::gamefile::{
    emit_game_file, parse_game_file, solve_game_file, verify_witness_against, GameFile, GameForm,
    SolveMethod,
};
use temporal_games::reductions as red;
use temporal_games::{Error, Limits};

fn pyerr(err: Error) -> PyErr {
    PyValueError::new_err(err.to_string())
}

/// Outcome of a solve call.
#[pyclass(name = "SolveResult")]
struct SolveResult {
    /// 1 if Player 1 wins, 2 otherwise.
    #[pyo3(get)]
    winner: u8,
    /// Method that ran: static, expand, search or product.
    #[pyo3(get)]
    method: String,
    #[pyo3(get)]
    states_explored: usize,
    /// Witness walk as (vertex, time) pairs, when one exists.
    #[pyo3(get)]
    witness: Option<Vec<(String, u64)>>,
    /// Exploration order certifying a static explorability win.
    #[pyo3(get)]
    order: Option<Vec<String>>,
}

#[pymethods]
impl SolveResult {
    fn __repr__(&self) -> String {
        format!(
            "SolveResult(winner={}, method='{}', states_explored={})",
            self.winner, self.method, self.states_explored
        )
    }
}

/// A parsed game file: the game graph, start vertex and objective.
#[pyclass(name = "Game")]
struct Game {
    inner: GameFile,
}

#[pymethods]
impl Game {
    /// Parses the game file format.
    #[staticmethod]
    fn parse(text: &str) -> PyResult<Game> {
        Ok(Game {
            inner: parse_game_file(text).map_err(pyerr)?,
        })
    }

    /// Serializes back to the game file format.
    fn emit(&self) -> String {
        emit_game_file(&self.inner)
    }

    #[getter]
    fn kind(&self) -> &'static str {
        self.inner.game.kind().as_str()
    }

    #[getter]
    fn start(&self) -> String {
        self.inner.game.name(self.inner.start).to_string()
    }

    #[getter]
    fn vertices(&self) -> Vec<String> {
        (0..self.inner.game.vertex_count())
            .map(|i| {
                self.inner
                    .game
                    .name(temporal_games::arena::VertexId(i as u32))
                    .to_string()
            })
            .collect()
    }

    #[getter]
    fn one_player(&self) -> bool {
        self.inner.game.is_one_player()
    }

    /// Solves the game. `method` is auto, expand, search or product;
    /// `waiting` solves the waiting transform of an explicit temporal game.
    #[pyo3(signature = (method = "auto", waiting = false))]
    fn solve(&self, method: &str, waiting: bool) -> PyResult<SolveResult> {
        let method: SolveMethod = method.parse().map_err(pyerr)?;
        let limits = Limits::default();
        let (outcome, used) =
            solve_game_file(&self.inner, method, waiting, &limits).map_err(pyerr)?;
        let witness = match &outcome.certificate {
            Some(Certificate::WitnessPath(walk)) => Some(
                walk.iter()
                    .map(|w| (self.inner.game.name(w.vertex).to_string(), w.time))
                    .collect(),
            ),
            _ => None,
        };
        let order = match &outcome.certificate {
            Some(Certificate::Linearization(order)) => Some(
                order
                    .iter()
                    .map(|&v| self.inner.game.name(v).to_string())
                    .collect(),
            ),
            _ => None,
        };
        Ok(SolveResult {
            winner: match outcome.winner {
                Player::One => 1,
                Player::Two => 2,
            },
            method: used.to_string(),
            states_explored: outcome.states_explored,
            witness,
            order,
        })
    }

    /// Replays a witness walk of (vertex, time) pairs against this game.
    #[pyo3(signature = (witness, waiting = false))]
    fn check_witness(&self, witness: Vec<(String, u64)>, waiting: bool) -> PyResult<bool> {
        verify_witness_against(&self.inner, &witness, waiting, &Limits::default()).map_err(pyerr)
    }
}

/// A prenex CNF quantified boolean formula.
#[pyclass(name = "Qbf")]
struct Qbf {
    inner: red::QbfFormula,
}

#[pymethods]
impl Qbf {
    /// Parses the QDIMACS subset.
    #[staticmethod]
    fn parse(text: &str) -> PyResult<Qbf> {
        Ok(Qbf {
            inner: red::parse_qdimacs(text).map_err(pyerr)?,
        })
    }

    fn emit(&self) -> String {
        red::write_qdimacs(&self.inner)
    }

    #[getter]
    fn num_vars(&self) -> usize {
        self.inner.num_vars()
    }

    #[getter]
    fn num_clauses(&self) -> usize {
        self.inner.num_clauses()
    }

    /// Repairs the prefix to strict ∃∀…∃ alternation with dummy variables.
    fn normalize(&self) -> Qbf {
        Qbf {
            inner: red::normalize_qbf(&self.inner),
        }
    }

    /// Exhaustive truth evaluation.
    fn brute_force(&self) -> PyResult<bool> {
        red::qbf_brute_force(&self.inner, &Limits::default()).map_err(pyerr)
    }

    /// Two-player explorability game on an explicit temporal graph; Player 1
    /// wins iff the formula is true. Normalizes first.
    fn to_temporal_game(&self) -> PyResult<Game> {
        let normalized = red::normalize_qbf(&self.inner);
        let (graph, start) = red::qbf_to_temporal_explorability(&normalized).map_err(pyerr)?;
        Ok(Game {
            inner: GameFile {
                game: GameForm::Temporal(graph),
                start,
                objective: Objective::Explore,
                waiting: false,
            },
        })
    }

    /// One-player symbolic reachability game; the target is reachable iff
    /// the formula is true. Normalizes first.
    fn to_symbolic_game(&self) -> PyResult<Game> {
        let normalized = red::normalize_qbf(&self.inner);
        let (graph, start, target) =
            red::qbf_to_symbolic_reachability(&normalized, &Limits::default()).map_err(pyerr)?;
        Ok(Game {
            inner: GameFile {
                game: GameForm::Symbolic(graph),
                start,
                objective: Objective::Reach(vec![target]),
                waiting: false,
            },
        })
    }
}

/// Exploration game encoding the Hamiltonian-path problem of a digraph
/// given as a vertex count and (u, v) index pairs.
#[pyfunction]
fn hamiltonian_game(vertex_count: usize, edges: Vec<(u32, u32)>) -> PyResult<Game> {
    let (graph, start) = red::hamiltonian_to_exploration(vertex_count, &edges).map_err(pyerr)?;
    Ok(Game {
        inner: GameFile {
            game: GameForm::Temporal(graph),
            start,
            objective: Objective::Explore,
            waiting: false,
        },
    })
}

/// Static explorability game won by Player 1 iff she wins the reachability
/// game on `game` (kind static) from `source` to `target`.
#[pyfunction]
fn reach_to_explore_game(game: &Game, source: &str, target: &str) -> PyResult<Game> {
    let GameForm::Static(arena) = &game.inner.game else {
        return Err(PyValueError::new_err(
            "reach_to_explore_game needs a static game",
        ));
    };
    let s = arena
        .index_of(source)
        .ok_or_else(|| PyValueError::new_err(format!("unknown vertex `{source}`")))?;
    let t = arena
        .index_of(target)
        .ok_or_else(|| PyValueError::new_err(format!("unknown vertex `{target}`")))?;
    let (explore, start) = red::reach_to_explore(arena, s, t).map_err(pyerr)?;
    Ok(Game {
        inner: GameFile {
            game: GameForm::Static(explore),
            start,
            objective: Objective::Explore,
            waiting: false,
        },
    })
}

#[pymodule]
fn temporal_games_py(m: &Bound<'_, PyModule>) -> PyResult<()> {
    m.add_class::<Game>()?;
    m.add_class::<Qbf>()?;
    m.add_class::<SolveResult>()?;
    m.add_function(wrap_pyfunction!(hamiltonian_game, m)?)?;
    m.add_function(wrap_pyfunction!(reach_to_explore_game, m)?)?;
    Ok(())
}
