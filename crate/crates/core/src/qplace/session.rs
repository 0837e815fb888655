//! One placement session: episodes of annealed Q-learning on a frozen user
//! snapshot, followed by a greedy rollout that picks the placement.

use std::collections::HashMap;

use rand::Rng;

use super::lattice::{apply_action, Cell, Lattice};
use super::policy::{q_update, select_action_epsilon, select_action_metropolis, Annealer};
use super::qtable::QTable;
use crate::config::{LearnParams, PolicyKind};
use crate::error::{Error, Result};
use crate::evaluate::{Evaluator, Observation};
use crate::objective::{reward, RewardTerms};

/// What the agent can measure about a lattice cell.
pub trait PlacementEnv {
    fn observe(&mut self, cell: Cell) -> Result<Observation>;
}

/// Environment backed by the radio model on a fixed user snapshot. Users do
/// not move during a session, so observations are cached per cell.
pub struct LatticeEnv<'a> {
    evaluator: Evaluator<'a>,
    lattice: Lattice,
    cache: HashMap<Cell, Observation>,
}

impl<'a> LatticeEnv<'a> {
    pub fn new(evaluator: Evaluator<'a>, lattice: Lattice) -> Self {
        Self {
            evaluator,
            lattice,
            cache: HashMap::new(),
        }
    }

    pub fn evaluator(&self) -> &Evaluator<'a> {
        &self.evaluator
    }

    /// Distinct cells evaluated so far.
    pub fn evaluated(&self) -> usize {
        self.cache.len()
    }
}

impl PlacementEnv for LatticeEnv<'_> {
    fn observe(&mut self, cell: Cell) -> Result<Observation> {
        if let Some(o) = self.cache.get(&cell) {
            return Ok(*o);
        }
        let o = self.evaluator.observe(Some(self.lattice.center(cell)))?;
        self.cache.insert(cell, o);
        Ok(o)
    }
}

#[derive(Debug, Clone)]
pub struct SessionOutcome {
    /// Placement chosen by the greedy rollout.
    pub best_cell: Cell,
    pub best: Observation,
    /// Cells visited by the rollout, starting with the start cell.
    pub rollout: Vec<Cell>,
    /// Undiscounted reward collected in each episode.
    pub episode_returns: Vec<f64>,
    /// Reward terms of the last learning step.
    pub last_terms: RewardTerms,
    pub final_psi: f64,
    pub updates: u64,
}

/// Runs `params.episodes` episodes of `params.steps_per_episode` steps, each
/// starting at `start`, then extracts a placement by greedy rollout.
///
/// The temperature starts at `psi0` and decays by `lambda` after every
/// update. The rollout follows argmax actions for at most `2·(nx+ny+nz)`
/// moves, stopping at a fixed point or when it revisits a cell, and returns
/// the best visited cell (feasible first, then fairness).
pub fn run_session<E, R>(
    q: &mut QTable,
    env: &mut E,
    start: Cell,
    params: &LearnParams,
    delta1: f64,
    rng: &mut R,
) -> Result<SessionOutcome>
where
    E: PlacementEnv,
    R: Rng + ?Sized,
{
    params.validate()?;
    let lattice = *q.lattice();
    if !lattice.contains(start) {
        return Err(Error::State(format!(
            "start cell {start} is outside the lattice"
        )));
    }

    let mut annealer = Annealer::new(params.psi0, params.lambda);
    let mut episode_returns = Vec::with_capacity(params.episodes);
    let start_obs = env.observe(start)?;
    let mut last_terms = RewardTerms::baseline(start_obs.terms);

    for _ in 0..params.episodes {
        let mut cell = start;
        let mut prev = RewardTerms::baseline(start_obs.terms);
        let mut ret = 0.0;
        for _ in 0..params.steps_per_episode {
            let decision = match params.policy {
                PolicyKind::Metropolis => select_action_metropolis(q, cell, annealer.psi(), rng),
                PolicyKind::EpsilonGreedy => select_action_epsilon(q, cell, params.epsilon, rng),
            };
            let next = apply_action(&lattice, cell, decision.action);
            let obs = env.observe(next)?;
            let terms = reward(&prev, obs.terms, delta1);
            let alpha = params.learning_rate(q.visits(cell, decision.action));
            q_update(
                q,
                cell,
                decision.action,
                terms.r,
                next,
                alpha,
                params.eta,
                params.update_form,
            )?;
            annealer.step();
            ret += terms.r;
            prev = terms;
            cell = next;
        }
        last_terms = prev;
        episode_returns.push(ret);
    }

    let (best_cell, best, rollout) = greedy_rollout(q, env, start)?;
    Ok(SessionOutcome {
        best_cell,
        best,
        rollout,
        episode_returns,
        last_terms,
        final_psi: annealer.psi(),
        updates: annealer.updates(),
    })
}

/// Follows argmax actions from `start`; see [`run_session`].
pub fn greedy_rollout<E: PlacementEnv>(
    q: &QTable,
    env: &mut E,
    start: Cell,
) -> Result<(Cell, Observation, Vec<Cell>)> {
    let lattice = *q.lattice();
    let budget = 2 * lattice.dims.iter().map(|d| *d as usize).sum::<usize>();
    let mut path = vec![start];
    let mut cell = start;
    let mut best_cell = start;
    let mut best = env.observe(start)?;
    for _ in 0..budget {
        let next = apply_action(&lattice, cell, q.greedy_action(cell));
        if next == cell || path.contains(&next) {
            break;
        }
        path.push(next);
        let obs = env.observe(next)?;
        if obs.outranks(&best) {
            best = obs;
            best_cell = next;
        }
        cell = next;
    }
    Ok((best_cell, best, path))
}
