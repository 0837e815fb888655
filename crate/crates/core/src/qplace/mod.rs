//! Annealed Q-learning placement of the aerial station on a cubic lattice.
//!
//! States are lattice cells, actions move one cell toward a cube face, and the
//! table is stored sparsely because a session touches only a few thousand of
//! the cells.

mod lattice;
mod policy;
mod qtable;
mod session;

pub use lattice::{apply_action, Action, Cell, Lattice};
pub use policy::{
    metropolis_accept, q_update, select_action_epsilon, select_action_metropolis, Annealer,
    Decision,
};
pub use qtable::{QEntry, QTable, HEADER as QTABLE_HEADER};
pub use session::{greedy_rollout, run_session, LatticeEnv, PlacementEnv, SessionOutcome};
