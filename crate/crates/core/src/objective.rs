//! Proportional fairness, constraint checks and the shaped reward.

use crate::channel::{LinkReport, ServerId};
use crate::config::ScenarioConfig;

/// Reward magnitude substituted when fairness is undefined (a served user
/// with zero rate).
pub const REWARD_CLAMP: f64 = 1e6;

/// Sum of natural-log rates over served users. Any non-positive rate yields
/// `f64::NEG_INFINITY`.
pub fn proportional_fairness(links: &[LinkReport]) -> f64 {
    let mut theta = 0.0;
    for l in links {
        if !(l.rate_bps > 0.0) {
            return f64::NEG_INFINITY;
        }
        theta += l.rate_bps.ln();
    }
    theta
}

/// Step function with `H[0] = 0`.
#[inline]
pub fn step(x: f64) -> f64 {
    if x > 0.0 {
        1.0
    } else {
        0.0
    }
}

/// Status of the backhaul, minimum-rate and power constraints.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct Feasibility {
    pub backhaul_load_bps: f64,
    pub backhaul_cap_bps: f64,
    pub aerial_users: usize,
    /// Lowest served rate (`+∞` with no users).
    pub min_rate_bps: f64,
    pub r_min_bps: f64,
    /// Aerial transmit power headroom. Zero because the aerial station always
    /// radiates exactly its power budget.
    pub power_margin_db: f64,
}

impl Feasibility {
    pub fn backhaul_ok(&self) -> bool {
        self.backhaul_load_bps <= self.backhaul_cap_bps
    }

    pub fn rate_ok(&self) -> bool {
        self.min_rate_bps >= self.r_min_bps
    }

    pub fn power_ok(&self) -> bool {
        self.power_margin_db >= 0.0
    }

    pub fn feasible(&self) -> bool {
        self.backhaul_ok() && self.rate_ok() && self.power_ok()
    }

    pub fn backhaul_margin_bps(&self) -> f64 {
        self.backhaul_cap_bps - self.backhaul_load_bps
    }
}

pub fn constraint_report(links: &[LinkReport], config: &ScenarioConfig) -> Feasibility {
    let mut load = 0.0;
    let mut aerial_users = 0;
    for l in links.iter().filter(|l| l.serving == ServerId::Aerial) {
        load += l.rate_bps;
        aerial_users += 1;
    }
    Feasibility {
        backhaul_load_bps: load,
        backhaul_cap_bps: config.backhaul_cap_bps,
        aerial_users,
        min_rate_bps: links
            .iter()
            .map(|l| l.rate_bps)
            .fold(f64::INFINITY, f64::min),
        r_min_bps: config.r_min_bps,
        power_margin_db: 0.0,
    }
}

/// Per-placement quantities the reward is built from.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct ObjectiveTerms {
    /// Proportional fairness, nats.
    pub theta: f64,
    /// Sum of linear SINRs of users meeting the minimum rate.
    pub omega: f64,
    /// Backhaul penalty: 0 or `eta1`.
    pub beta: f64,
}

impl ObjectiveTerms {
    pub fn from_links(links: &[LinkReport], config: &ScenarioConfig) -> Self {
        let omega = links
            .iter()
            .map(|l| l.sinr * step(l.rate_bps - config.r_min_bps))
            .sum();
        let load: f64 = links
            .iter()
            .filter(|l| l.serving == ServerId::Aerial)
            .map(|l| l.rate_bps)
            .sum();
        Self {
            theta: proportional_fairness(links),
            omega,
            beta: config.eta1 * step(load - config.backhaul_cap_bps),
        }
    }
}

/// Reward components at one step.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct RewardTerms {
    pub theta: f64,
    pub omega: f64,
    pub beta: f64,
    pub r_plus: f64,
    pub r_minus: f64,
    pub r: f64,
}

impl RewardTerms {
    /// Starting point of a trajectory: the terms with zero reward.
    pub fn baseline(t: ObjectiveTerms) -> Self {
        Self {
            theta: t.theta,
            omega: t.omega,
            beta: t.beta,
            r_plus: 0.0,
            r_minus: 0.0,
            r: 0.0,
        }
    }

    pub fn objective(&self) -> ObjectiveTerms {
        ObjectiveTerms {
            theta: self.theta,
            omega: self.omega,
            beta: self.beta,
        }
    }
}

/// Shaped reward for moving from `prev` to `current`:
/// `r⁺ = ΔΘ + Δω`, `r⁻ = δ₁·Δβ`, `r = r⁺ − r⁻`.
///
/// An undefined fairness on either side clamps `r⁺` to `±REWARD_CLAMP`
/// (negative when the new placement is the undefined one), keeping every
/// reward finite.
pub fn reward(prev: &RewardTerms, current: ObjectiveTerms, delta1: f64) -> RewardTerms {
    let d_theta = match (prev.theta.is_finite(), current.theta.is_finite()) {
        (true, true) => current.theta - prev.theta,
        (_, false) => -REWARD_CLAMP,
        (false, true) => REWARD_CLAMP,
    };
    let mut r_plus = d_theta + (current.omega - prev.omega);
    if !r_plus.is_finite() {
        r_plus = REWARD_CLAMP.copysign(r_plus);
    }
    let r_minus = delta1 * (current.beta - prev.beta);
    RewardTerms {
        theta: current.theta,
        omega: current.omega,
        beta: current.beta,
        r_plus,
        r_minus,
        r: r_plus - r_minus,
    }
}

/// Convenience: reward for `links` given the previous terms.
pub fn reward_from_links(
    prev: &RewardTerms,
    links: &[LinkReport],
    config: &ScenarioConfig,
) -> RewardTerms {
    reward(
        prev,
        ObjectiveTerms::from_links(links, config),
        config.delta1,
    )
}
