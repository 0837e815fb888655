//! Run configuration: defaults, presets, validation, and the `key = value`
//! text format.
//!
//! Every knob of the simulator has exactly one key. Unknown keys, malformed
//! values and duplicate keys are configuration errors naming the key.

use std::fmt::Write as _;
use std::str::FromStr;

use crate::error::{Error, Result};
use crate::simkit::Arm;

/// Aerial flight zone. The horizontal extent doubles as the service footprint.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct Region {
    pub x_min: f64,
    pub x_max: f64,
    pub y_min: f64,
    pub y_max: f64,
    pub h_min: f64,
    pub h_max: f64,
}

impl Region {
    pub fn validate(&self) -> Result<()> {
        if !(self.x_min < self.x_max) {
            return Err(Error::config("x_max_m", "must exceed x_min_m"));
        }
        if !(self.y_min < self.y_max) {
            return Err(Error::config("y_max_m", "must exceed y_min_m"));
        }
        if !(self.h_min > 0.0) {
            return Err(Error::config("h_min_m", "must be positive"));
        }
        if !(self.h_min < self.h_max) {
            return Err(Error::config("h_max_m", "must exceed h_min_m"));
        }
        Ok(())
    }

    pub fn width(&self) -> f64 {
        self.x_max - self.x_min
    }

    pub fn depth(&self) -> f64 {
        self.y_max - self.y_min
    }

    pub fn height_span(&self) -> f64 {
        self.h_max - self.h_min
    }

    pub fn contains_xy(&self, x: f64, y: f64) -> bool {
        x >= self.x_min && x <= self.x_max && y >= self.y_min && y <= self.y_max
    }

    pub fn centroid_xy(&self) -> (f64, f64) {
        (
            0.5 * (self.x_min + self.x_max),
            0.5 * (self.y_min + self.y_max),
        )
    }
}

/// Action-selection rule used while learning.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum PolicyKind {
    Metropolis,
    EpsilonGreedy,
}

impl FromStr for PolicyKind {
    type Err = String;

    fn from_str(s: &str) -> std::result::Result<Self, Self::Err> {
        match s {
            "metropolis" => Ok(PolicyKind::Metropolis),
            "epsilon_greedy" => Ok(PolicyKind::EpsilonGreedy),
            other => Err(format!(
                "unknown policy `{other}` (expected metropolis or epsilon_greedy)"
            )),
        }
    }
}

impl PolicyKind {
    pub fn as_str(&self) -> &'static str {
        match self {
            PolicyKind::Metropolis => "metropolis",
            PolicyKind::EpsilonGreedy => "epsilon_greedy",
        }
    }
}

/// Which temporal-difference update to apply.
///
/// `Standard` is `Q += α(r + η·maxQ' − Q)`. `Printed` is the variant without
/// the leading `Q` term, `Q = α(r + η·maxQ' − Q)`, kept for fidelity runs.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum QUpdateForm {
    Standard,
    Printed,
}

impl FromStr for QUpdateForm {
    type Err = String;

    fn from_str(s: &str) -> std::result::Result<Self, Self::Err> {
        match s {
            "standard" => Ok(QUpdateForm::Standard),
            "printed" => Ok(QUpdateForm::Printed),
            other => Err(format!(
                "unknown update form `{other}` (expected standard or printed)"
            )),
        }
    }
}

impl QUpdateForm {
    pub fn as_str(&self) -> &'static str {
        match self {
            QUpdateForm::Standard => "standard",
            QUpdateForm::Printed => "printed",
        }
    }
}

/// Learning constants for the placement agent.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct LearnParams {
    /// Learning-rate scale; the rate is `alpha0 / (1 + visits)^alpha_exponent`.
    pub alpha0: f64,
    pub alpha_exponent: f64,
    /// Discount factor.
    pub eta: f64,
    /// Initial annealing temperature.
    pub psi0: f64,
    /// Per-update temperature decay.
    pub lambda: f64,
    pub episodes: usize,
    pub steps_per_episode: usize,
    pub policy: PolicyKind,
    /// Exploration probability for [`PolicyKind::EpsilonGreedy`].
    pub epsilon: f64,
    pub update_form: QUpdateForm,
}

impl Default for LearnParams {
    fn default() -> Self {
        Self {
            alpha0: 1.0,
            alpha_exponent: 0.85,
            eta: 0.9,
            psi0: 10.0,
            lambda: 0.99,
            episodes: 50,
            steps_per_episode: 100,
            policy: PolicyKind::Metropolis,
            epsilon: 0.1,
            update_form: QUpdateForm::Standard,
        }
    }
}

impl LearnParams {
    pub fn validate(&self) -> Result<()> {
        if !(self.alpha0 > 0.0 && self.alpha0 <= 1.0) {
            return Err(Error::config("alpha0", "must lie in (0, 1]"));
        }
        if !(self.alpha_exponent >= 0.0) {
            return Err(Error::config("alpha_exponent", "must be non-negative"));
        }
        if !(self.eta >= 0.0 && self.eta < 1.0) {
            return Err(Error::config("eta", "discount must lie in [0, 1)"));
        }
        if !(self.psi0 > 0.0) {
            return Err(Error::config("psi0", "temperature must be positive"));
        }
        if !(self.lambda > 0.0 && self.lambda < 1.0) {
            return Err(Error::config("lambda", "decay must lie in (0, 1)"));
        }
        if self.episodes == 0 {
            return Err(Error::config("episodes", "must be at least 1"));
        }
        if self.steps_per_episode == 0 {
            return Err(Error::config("steps", "must be at least 1"));
        }
        if !(0.0..=1.0).contains(&self.epsilon) {
            return Err(Error::config("epsilon", "must lie in [0, 1]"));
        }
        Ok(())
    }

    /// Learning rate for a pair that has been updated `visits` times before.
    pub fn learning_rate(&self, visits: u64) -> f64 {
        self.alpha0 / (1.0 + visits as f64).powf(self.alpha_exponent)
    }
}

/// Global-best particle swarm settings.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct PsoParams {
    pub swarm: usize,
    pub iterations: usize,
    pub inertia: f64,
    pub cognitive: f64,
    pub social: f64,
    /// Velocity cap per axis as a fraction of that axis' extent.
    pub velocity_fraction: f64,
}

impl Default for PsoParams {
    fn default() -> Self {
        Self {
            swarm: 30,
            iterations: 100,
            inertia: 0.72,
            cognitive: 1.49,
            social: 1.49,
            velocity_fraction: 0.2,
        }
    }
}

impl PsoParams {
    pub fn validate(&self) -> Result<()> {
        if self.swarm < 2 {
            return Err(Error::config("pso_swarm", "need at least 2 particles"));
        }
        if self.iterations == 0 {
            return Err(Error::config("pso_iters", "need at least 1 iteration"));
        }
        if !(self.velocity_fraction > 0.0) {
            return Err(Error::config("pso_velocity_fraction", "must be positive"));
        }
        Ok(())
    }
}

/// Static world and radio constants.
#[derive(Debug, Clone, PartialEq)]
pub struct ScenarioConfig {
    pub region: Region,
    /// Ground base stations, including the one that becomes the aerial backhaul.
    pub num_ground_bs: usize,
    pub users_min: usize,
    pub users_max: usize,
    /// Number of attraction points.
    pub nu: usize,
    pub carrier_hz: f64,
    pub bandwidth_hz: f64,
    pub p_max_dbm: f64,
    pub r_min_bps: f64,
    /// Aerial backhaul capacity.
    pub backhaul_cap_bps: f64,
    pub eta_los_db: f64,
    pub eta_nlos_db: f64,
    pub los_a: f64,
    pub los_b: f64,
    pub noise_psd_dbm_hz: f64,
    pub noise_figure_db: f64,
    pub ground_height_m: f64,
    pub ground_pl_intercept_db: f64,
    pub ground_pl_slope_db: f64,
    /// Placement session cadence.
    pub t_min_s: f64,
    /// Lattice pitch.
    pub upsilon_m: f64,
    /// Backhaul penalty magnitude.
    pub eta1: f64,
    /// Penalty weight in the reward.
    pub delta1: f64,
    pub learn: LearnParams,
    pub seed: u64,
}

impl Default for ScenarioConfig {
    fn default() -> Self {
        Self {
            region: Region {
                x_min: -2000.0,
                x_max: 2000.0,
                y_min: -2000.0,
                y_max: 2000.0,
                h_min: 25.0,
                h_max: 525.0,
            },
            num_ground_bs: 18,
            users_min: 200,
            users_max: 300,
            nu: 5,
            carrier_hz: 2e9,
            bandwidth_hz: 20e6,
            p_max_dbm: 49.0,
            r_min_bps: 0.0,
            backhaul_cap_bps: 100e6,
            eta_los_db: 1.0,
            eta_nlos_db: 20.0,
            los_a: 9.61,
            los_b: 0.16,
            noise_psd_dbm_hz: -174.0,
            noise_figure_db: 9.0,
            ground_height_m: 25.0,
            ground_pl_intercept_db: 128.1,
            ground_pl_slope_db: 37.6,
            t_min_s: 150.0,
            upsilon_m: 10.0,
            eta1: 1000.0,
            delta1: 100.0,
            learn: LearnParams::default(),
            seed: 1,
        }
    }
}

impl ScenarioConfig {
    /// 1 km × 1 km region, 6 ground BSs, 50 users, two attractors, 50 m lattice.
    pub fn desk() -> Self {
        Self {
            region: Region {
                x_min: -500.0,
                x_max: 500.0,
                y_min: -500.0,
                y_max: 500.0,
                h_min: 25.0,
                h_max: 525.0,
            },
            num_ground_bs: 6,
            users_min: 50,
            users_max: 50,
            nu: 2,
            upsilon_m: 50.0,
            ..Self::default()
        }
    }

    pub fn validate(&self) -> Result<()> {
        self.region.validate()?;
        if self.num_ground_bs == 0 {
            return Err(Error::config(
                "num_ground_bs",
                "need at least one ground BS",
            ));
        }
        if self.users_min > self.users_max {
            return Err(Error::config("m_max", "must be at least m_min"));
        }
        positive("f_hz", self.carrier_hz)?;
        positive("bw_hz", self.bandwidth_hz)?;
        finite("p_max_dbm", self.p_max_dbm)?;
        if !(self.r_min_bps >= 0.0) {
            return Err(Error::config("r_min_bps", "must be non-negative"));
        }
        positive("c_zeta_bps", self.backhaul_cap_bps)?;
        if !(self.eta_los_db >= 0.0) {
            return Err(Error::config("eta_los_db", "must be non-negative"));
        }
        if !(self.eta_nlos_db >= self.eta_los_db) {
            return Err(Error::config("eta_nlos_db", "must be at least eta_los_db"));
        }
        positive("los_a", self.los_a)?;
        positive("los_b", self.los_b)?;
        finite("noise_psd_dbm_hz", self.noise_psd_dbm_hz)?;
        finite("noise_figure_db", self.noise_figure_db)?;
        if !(self.ground_height_m >= 0.0) {
            return Err(Error::config("ground_height_m", "must be non-negative"));
        }
        finite("ground_pl_intercept_db", self.ground_pl_intercept_db)?;
        positive("ground_pl_slope_db", self.ground_pl_slope_db)?;
        positive("t_min_s", self.t_min_s)?;
        positive("upsilon_m", self.upsilon_m)?;
        for (extent, axis) in [
            (self.region.width(), "x"),
            (self.region.depth(), "y"),
            (self.region.height_span(), "h"),
        ] {
            let cells = extent / self.upsilon_m;
            if (cells - cells.round()).abs() > 1e-9 * cells.max(1.0) || cells.round() < 1.0 {
                return Err(Error::config(
                    "upsilon_m",
                    format!(
                        "{} does not evenly divide the {axis} extent {extent}",
                        self.upsilon_m
                    ),
                ));
            }
        }
        if !(self.eta1 >= 0.0) {
            return Err(Error::config("eta1", "must be non-negative"));
        }
        if !(self.delta1 >= 0.0) {
            return Err(Error::config("delta1", "must be non-negative"));
        }
        self.learn.validate()
    }

    /// Transmit power spectral density shared by every base station, dBm/Hz.
    pub fn tx_psd_dbm_hz(&self) -> f64 {
        self.p_max_dbm - crate::units::hz_to_db(self.bandwidth_hz)
    }
}

fn positive(field: &str, v: f64) -> Result<()> {
    if v > 0.0 && v.is_finite() {
        Ok(())
    } else {
        Err(Error::config(
            field,
            format!("must be positive and finite, got {v}"),
        ))
    }
}

fn finite(field: &str, v: f64) -> Result<()> {
    if v.is_finite() {
        Ok(())
    } else {
        Err(Error::config(field, format!("must be finite, got {v}")))
    }
}

/// Named starting points for a configuration.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum Preset {
    /// Full-scale defaults (4 km region, 18 BSs, 200–300 users).
    Table1,
    /// Small instance where exhaustive search is exact and cheap.
    Desk,
}

impl FromStr for Preset {
    type Err = String;

    fn from_str(s: &str) -> std::result::Result<Self, Self::Err> {
        match s {
            "table1" | "full" => Ok(Preset::Table1),
            "desk" => Ok(Preset::Desk),
            other => Err(format!(
                "unknown preset `{other}` (expected desk or table1)"
            )),
        }
    }
}

impl Preset {
    pub fn as_str(&self) -> &'static str {
        match self {
            Preset::Table1 => "table1",
            Preset::Desk => "desk",
        }
    }
}

/// Everything needed to run an experiment.
#[derive(Debug, Clone, PartialEq)]
pub struct ExperimentConfig {
    pub scenario: ScenarioConfig,
    pub pso: PsoParams,
    /// Lattice stride for exhaustive search; `None` picks the finest stride
    /// that keeps the candidate count at or below [`MAX_DEFAULT_CANDIDATES`].
    pub exhaustive_stride: Option<usize>,
    pub arms: Vec<Arm>,
    pub duration_s: f64,
}

/// Candidate budget for the automatic exhaustive-search stride.
pub const MAX_DEFAULT_CANDIDATES: usize = 100_000;

impl Default for ExperimentConfig {
    fn default() -> Self {
        Self::preset(Preset::Table1)
    }
}

/// Keys understood by [`ExperimentConfig::set`], in manifest order.
pub const KEYS: &[&str] = &[
    "x_min_m",
    "x_max_m",
    "y_min_m",
    "y_max_m",
    "h_min_m",
    "h_max_m",
    "num_ground_bs",
    "m_min",
    "m_max",
    "nu",
    "f_hz",
    "bw_hz",
    "p_max_dbm",
    "r_min_bps",
    "c_zeta_bps",
    "eta_los_db",
    "eta_nlos_db",
    "los_a",
    "los_b",
    "noise_psd_dbm_hz",
    "noise_figure_db",
    "ground_height_m",
    "ground_pl_intercept_db",
    "ground_pl_slope_db",
    "t_min_s",
    "upsilon_m",
    "eta1",
    "delta1",
    "alpha0",
    "alpha_exponent",
    "eta",
    "psi0",
    "lambda",
    "episodes",
    "steps",
    "policy",
    "epsilon",
    "q_update_form",
    "pso_swarm",
    "pso_iters",
    "pso_inertia",
    "pso_cognitive",
    "pso_social",
    "pso_velocity_fraction",
    "exhaustive_stride",
    "arms",
    "duration_s",
    "seed",
];

impl ExperimentConfig {
    pub fn preset(preset: Preset) -> Self {
        let scenario = match preset {
            Preset::Table1 => ScenarioConfig::default(),
            Preset::Desk => ScenarioConfig::desk(),
        };
        Self {
            scenario,
            pso: PsoParams::default(),
            exhaustive_stride: None,
            arms: vec![Arm::Traditional, Arm::Saq],
            duration_s: 1500.0,
        }
    }

    pub fn validate(&self) -> Result<()> {
        self.scenario.validate()?;
        self.pso.validate()?;
        if self.exhaustive_stride == Some(0) {
            return Err(Error::config("exhaustive_stride", "must be at least 1"));
        }
        if self.arms.is_empty() {
            return Err(Error::config("arms", "need at least one arm"));
        }
        if !(self.duration_s >= self.scenario.t_min_s) || !self.duration_s.is_finite() {
            return Err(Error::config("duration_s", "must be at least t_min_s"));
        }
        Ok(())
    }

    /// Applies one `key = value` pair. Returns `Ok(false)` for keys this type
    /// does not own so callers can layer their own keys on top.
    pub fn set(&mut self, key: &str, value: &str) -> Result<bool> {
        let s = &mut self.scenario;
        match key {
            "x_min_m" => s.region.x_min = parse(key, value)?,
            "x_max_m" => s.region.x_max = parse(key, value)?,
            "y_min_m" => s.region.y_min = parse(key, value)?,
            "y_max_m" => s.region.y_max = parse(key, value)?,
            "h_min_m" => s.region.h_min = parse(key, value)?,
            "h_max_m" => s.region.h_max = parse(key, value)?,
            "num_ground_bs" => s.num_ground_bs = parse(key, value)?,
            "m_min" => s.users_min = parse(key, value)?,
            "m_max" => s.users_max = parse(key, value)?,
            "nu" => s.nu = parse(key, value)?,
            "f_hz" => s.carrier_hz = parse(key, value)?,
            "bw_hz" => s.bandwidth_hz = parse(key, value)?,
            "p_max_dbm" => s.p_max_dbm = parse(key, value)?,
            "r_min_bps" => s.r_min_bps = parse(key, value)?,
            "c_zeta_bps" => s.backhaul_cap_bps = parse(key, value)?,
            "eta_los_db" => s.eta_los_db = parse(key, value)?,
            "eta_nlos_db" => s.eta_nlos_db = parse(key, value)?,
            "los_a" => s.los_a = parse(key, value)?,
            "los_b" => s.los_b = parse(key, value)?,
            "noise_psd_dbm_hz" => s.noise_psd_dbm_hz = parse(key, value)?,
            "noise_figure_db" => s.noise_figure_db = parse(key, value)?,
            "ground_height_m" => s.ground_height_m = parse(key, value)?,
            "ground_pl_intercept_db" => s.ground_pl_intercept_db = parse(key, value)?,
            "ground_pl_slope_db" => s.ground_pl_slope_db = parse(key, value)?,
            "t_min_s" => s.t_min_s = parse(key, value)?,
            "upsilon_m" => s.upsilon_m = parse(key, value)?,
            "eta1" => s.eta1 = parse(key, value)?,
            "delta1" => s.delta1 = parse(key, value)?,
            "alpha0" => s.learn.alpha0 = parse(key, value)?,
            "alpha_exponent" => s.learn.alpha_exponent = parse(key, value)?,
            "eta" => s.learn.eta = parse(key, value)?,
            "psi0" => s.learn.psi0 = parse(key, value)?,
            "lambda" => s.learn.lambda = parse(key, value)?,
            "episodes" => s.learn.episodes = parse(key, value)?,
            "steps" => s.learn.steps_per_episode = parse(key, value)?,
            "policy" => s.learn.policy = parse(key, value)?,
            "epsilon" => s.learn.epsilon = parse(key, value)?,
            "q_update_form" => s.learn.update_form = parse(key, value)?,
            "seed" => s.seed = parse(key, value)?,
            "pso_swarm" => self.pso.swarm = parse(key, value)?,
            "pso_iters" => self.pso.iterations = parse(key, value)?,
            "pso_inertia" => self.pso.inertia = parse(key, value)?,
            "pso_cognitive" => self.pso.cognitive = parse(key, value)?,
            "pso_social" => self.pso.social = parse(key, value)?,
            "pso_velocity_fraction" => self.pso.velocity_fraction = parse(key, value)?,
            "exhaustive_stride" => {
                self.exhaustive_stride = if value == "auto" {
                    None
                } else {
                    Some(parse(key, value)?)
                }
            }
            "arms" => self.arms = Arm::parse_list(value)?,
            "duration_s" => self.duration_s = parse(key, value)?,
            _ => return Ok(false),
        }
        Ok(true)
    }

    /// Parses a complete configuration document on top of `self`, rejecting
    /// any key not in [`KEYS`].
    pub fn apply_document(&mut self, text: &str) -> Result<()> {
        for entry in parse_document(text)? {
            if !self.set(&entry.key, &entry.value)? {
                return Err(Error::config(
                    entry.key,
                    format!("unknown key (line {})", entry.line),
                ));
            }
        }
        Ok(())
    }

    /// Serializes every key in [`KEYS`] order. Feeding the output back through
    /// [`ExperimentConfig::apply_document`] reproduces `self` exactly.
    pub fn to_document(&self) -> String {
        let s = &self.scenario;
        let l = &s.learn;
        let mut out = String::new();
        let mut put = |k: &str, v: String| {
            let _ = writeln!(out, "{k} = {v}");
        };
        put("x_min_m", s.region.x_min.to_string());
        put("x_max_m", s.region.x_max.to_string());
        put("y_min_m", s.region.y_min.to_string());
        put("y_max_m", s.region.y_max.to_string());
        put("h_min_m", s.region.h_min.to_string());
        put("h_max_m", s.region.h_max.to_string());
        put("num_ground_bs", s.num_ground_bs.to_string());
        put("m_min", s.users_min.to_string());
        put("m_max", s.users_max.to_string());
        put("nu", s.nu.to_string());
        put("f_hz", s.carrier_hz.to_string());
        put("bw_hz", s.bandwidth_hz.to_string());
        put("p_max_dbm", s.p_max_dbm.to_string());
        put("r_min_bps", s.r_min_bps.to_string());
        put("c_zeta_bps", s.backhaul_cap_bps.to_string());
        put("eta_los_db", s.eta_los_db.to_string());
        put("eta_nlos_db", s.eta_nlos_db.to_string());
        put("los_a", s.los_a.to_string());
        put("los_b", s.los_b.to_string());
        put("noise_psd_dbm_hz", s.noise_psd_dbm_hz.to_string());
        put("noise_figure_db", s.noise_figure_db.to_string());
        put("ground_height_m", s.ground_height_m.to_string());
        put(
            "ground_pl_intercept_db",
            s.ground_pl_intercept_db.to_string(),
        );
        put("ground_pl_slope_db", s.ground_pl_slope_db.to_string());
        put("t_min_s", s.t_min_s.to_string());
        put("upsilon_m", s.upsilon_m.to_string());
        put("eta1", s.eta1.to_string());
        put("delta1", s.delta1.to_string());
        put("alpha0", l.alpha0.to_string());
        put("alpha_exponent", l.alpha_exponent.to_string());
        put("eta", l.eta.to_string());
        put("psi0", l.psi0.to_string());
        put("lambda", l.lambda.to_string());
        put("episodes", l.episodes.to_string());
        put("steps", l.steps_per_episode.to_string());
        put("policy", l.policy.as_str().to_string());
        put("epsilon", l.epsilon.to_string());
        put("q_update_form", l.update_form.as_str().to_string());
        put("pso_swarm", self.pso.swarm.to_string());
        put("pso_iters", self.pso.iterations.to_string());
        put("pso_inertia", self.pso.inertia.to_string());
        put("pso_cognitive", self.pso.cognitive.to_string());
        put("pso_social", self.pso.social.to_string());
        put(
            "pso_velocity_fraction",
            self.pso.velocity_fraction.to_string(),
        );
        put(
            "exhaustive_stride",
            self.exhaustive_stride
                .map_or_else(|| "auto".to_string(), |v| v.to_string()),
        );
        put("arms", Arm::format_list(&self.arms));
        put("duration_s", self.duration_s.to_string());
        put("seed", s.seed.to_string());
        out
    }
}

/// One `key = value` line.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Entry {
    pub key: String,
    pub value: String,
    pub line: usize,
}

/// Splits a configuration document into entries. `#` starts a comment.
/// Duplicate keys are rejected.
pub fn parse_document(text: &str) -> Result<Vec<Entry>> {
    let mut entries: Vec<Entry> = Vec::new();
    for (idx, raw) in text.lines().enumerate() {
        let line = idx + 1;
        let content = raw.split('#').next().unwrap_or("").trim();
        if content.is_empty() {
            continue;
        }
        let Some((key, value)) = content.split_once('=') else {
            return Err(Error::Parse {
                line,
                reason: format!("expected `key = value`, got `{content}`"),
            });
        };
        let key = key.trim();
        let value = value.trim();
        if key.is_empty() {
            return Err(Error::Parse {
                line,
                reason: "empty key".into(),
            });
        }
        if let Some(prev) = entries.iter().find(|e| e.key == key) {
            return Err(Error::config(
                key,
                format!("duplicate key (lines {} and {line})", prev.line),
            ));
        }
        entries.push(Entry {
            key: key.to_string(),
            value: value.to_string(),
            line,
        });
    }
    Ok(entries)
}

fn parse<T: FromStr>(key: &str, value: &str) -> Result<T>
where
    T::Err: std::fmt::Display,
{
    value
        .parse::<T>()
        .map_err(|e| Error::config(key, format!("cannot parse `{value}`: {e}")))
}
