//! Fairness-driven 3D placement of an aerial base station over a cellular
//! network of ground stations and moving users.
//!
//! The pieces, bottom up: [`scenario`] draws the world, [`channel`] and
//! [`association`] turn positions into SINR and rates, [`objective`] scores
//! them, [`qplace`] learns placements with annealed Q-learning,
//! [`baselines`] provides exhaustive search and PSO, and [`simkit`] runs the
//! whole timeline.

// Validation guards use `!(x > 0.0)` on purpose so NaN is rejected too.
#![allow(clippy::neg_cmp_op_on_partial_ord)]

pub mod association;
pub mod baselines;
pub mod channel;
pub mod config;
pub mod error;
pub mod evaluate;
pub mod exec;
pub mod geometry;
pub mod mobility;
pub mod objective;
pub mod qplace;
pub mod rng;
pub mod scenario;
pub mod simkit;
pub mod units;

pub use config::{ExperimentConfig, LearnParams, Preset, PsoParams, Region, ScenarioConfig};
pub use error::{Error, Result};
pub use evaluate::{Evaluation, Evaluator, Observation};
pub use exec::Exec;
pub use geometry::{Point2, Point3};
pub use rng::{SimRng, Streams};
pub use scenario::{generate_scenario, Scenario};
pub use simkit::{run_experiment, Arm, MetricsLog, RunOptions, RunOutput};
