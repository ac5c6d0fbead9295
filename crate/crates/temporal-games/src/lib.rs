//! Game solving on static, temporal and symbolically timed graphs.
//!
//! The crate is organised around three graph representations and the
//! objectives played on them:
//!
//! - [`arena`]: finite two-player arenas, attractor computation, generalized
//!   reachability via a visited-target product, and exploration games solved
//!   through the reach preorder.
//! - [`temporal`]: graphs whose edges carry explicit, finite availability
//!   sets. Games are solved on the time expansion; one-player exploration has
//!   a dedicated memoized search.
//! - [`symbolic`]: graphs whose edge availability is a formula over time
//!   (intervals, arithmetic progressions, bit tests and boolean combinations).
//!   Games are solved on a wrapped periodic product.
//! - [`reductions`]: generators translating QBF instances, Hamiltonian-path
//!   instances and plain reachability games into the game classes above,
//!   together with a QDIMACS parser and a brute-force QBF evaluator.
//! - [`verify`]: independent oracles (bounded minimax) and certificate
//!   checkers used to cross-validate every solver.
//! - [`gamefile`]: the line-oriented game file format, the availability
//!   expression grammar, and the solve dispatcher shared by the CLI and the
//!   Python bindings.

pub mod arena;
mod error;
pub mod gamefile;
pub mod reductions;
pub mod symbolic;
pub mod temporal;
pub mod verify;

pub use error::{Error, Result};

/// Resource limits shared by the solvers.
///
/// Every operation that can materialize a large state space takes a
/// `&Limits` and fails with [`Error::StateSpaceLimit`] or
/// [`Error::PeriodOverflow`] instead of exhausting memory.
#[derive(Debug, Clone)]
pub struct Limits {
    /// Cap on constructed states (expansions and products).
    pub state_cap: u64,
    /// Cap on the period `p` of a period bound.
    pub period_cap: u64,
    /// Number of bits a time value may address in bit-test formulas.
    pub word_width: u32,
    /// Cap on the variable count accepted by the brute-force QBF evaluator.
    pub max_brute_force_vars: u32,
}

impl Default for Limits {
    fn default() -> Self {
        Limits {
            state_cap: 50_000_000,
            period_cap: 1 << 32,
            word_width: 64,
            max_brute_force_vars: 20,
        }
    }
}
