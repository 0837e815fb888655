//! Action selection and the temporal-difference update.

use rand::distributions::Open01;
use rand::Rng;

use super::lattice::{Action, Cell};
use super::qtable::QTable;
use crate::config::QUpdateForm;
use crate::error::{Error, Result};

/// Outcome of one selection, with the candidates that were compared.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct Decision {
    pub action: Action,
    /// Uniformly drawn candidate.
    pub random: Action,
    /// Argmax candidate.
    pub greedy: Action,
}

impl Decision {
    pub fn explored(&self) -> bool {
        self.action == self.random
    }
}

/// Metropolis test: accept the random candidate when `ε < exp(ΔQ/ψ)` with
/// `ε` drawn from the open interval (0, 1).
pub fn metropolis_accept<R: Rng + ?Sized>(
    q_random: f64,
    q_greedy: f64,
    psi: f64,
    rng: &mut R,
) -> bool {
    let eps: f64 = rng.sample(Open01);
    eps < ((q_random - q_greedy) / psi).exp()
}

/// Simulated-annealing selection between a uniform random action and the
/// greedy one.
pub fn select_action_metropolis<R: Rng + ?Sized>(
    q: &QTable,
    cell: Cell,
    psi: f64,
    rng: &mut R,
) -> Decision {
    debug_assert!(psi > 0.0);
    let random = Action::ALL[rng.gen_range(0..Action::ALL.len())];
    let greedy = q.greedy_action(cell);
    let action = if metropolis_accept(q.get(cell, random), q.get(cell, greedy), psi, rng) {
        random
    } else {
        greedy
    };
    Decision {
        action,
        random,
        greedy,
    }
}

/// ε-greedy selection.
pub fn select_action_epsilon<R: Rng + ?Sized>(
    q: &QTable,
    cell: Cell,
    epsilon: f64,
    rng: &mut R,
) -> Decision {
    let greedy = q.greedy_action(cell);
    let explore = rng.gen::<f64>() < epsilon;
    let random = if explore {
        Action::ALL[rng.gen_range(0..Action::ALL.len())]
    } else {
        greedy
    };
    Decision {
        action: random,
        random,
        greedy,
    }
}

/// Geometric temperature schedule `ψ_n = ψ_0·λⁿ`.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct Annealer {
    psi0: f64,
    lambda: f64,
    updates: u64,
    psi: f64,
}

impl Annealer {
    pub fn new(psi0: f64, lambda: f64) -> Self {
        Self {
            psi0,
            lambda,
            updates: 0,
            psi: psi0,
        }
    }

    pub fn psi(&self) -> f64 {
        self.psi
    }

    pub fn updates(&self) -> u64 {
        self.updates
    }

    /// Applies one decay step and returns the new temperature. The value is
    /// recomputed from the closed form so it does not drift. Once the
    /// temperature underflows it is held at the smallest positive float.
    pub fn step(&mut self) -> f64 {
        self.updates += 1;
        let exp = i32::try_from(self.updates).unwrap_or(i32::MAX);
        self.psi = (self.psi0 * self.lambda.powi(exp)).max(f64::MIN_POSITIVE);
        self.psi
    }

    pub fn reset(&mut self) {
        self.updates = 0;
        self.psi = self.psi0;
    }
}

/// One temporal-difference update of `Q(cell, action)`. Returns the new value.
#[allow(clippy::too_many_arguments)]
pub fn q_update(
    q: &mut QTable,
    cell: Cell,
    action: Action,
    reward: f64,
    next: Cell,
    alpha: f64,
    eta: f64,
    form: QUpdateForm,
) -> Result<f64> {
    if !reward.is_finite() {
        return Err(Error::State(format!("non-finite reward {reward}")));
    }
    let current = q.get(cell, action);
    let td = reward + eta * q.max_value(next) - current;
    let value = match form {
        QUpdateForm::Standard => current + alpha * td,
        QUpdateForm::Printed => alpha * td,
    };
    q.record(cell, action, value)?;
    Ok(value)
}
