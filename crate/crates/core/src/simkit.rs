//! Experiment timeline: users move, every arm re-places its aerial station,
//! and the resulting fairness and SINR are logged.

use std::fmt::Write as _;
use std::io::Write;
use std::str::FromStr;

use crate::baselines::{exhaustive_search, pso_search};
use crate::config::{ExperimentConfig, MAX_DEFAULT_CANDIDATES};
use crate::error::{Error, Result};
use crate::evaluate::{Evaluation, Evaluator};
use crate::exec::Exec;
use crate::geometry::{Point2, Point3};
use crate::mobility::{advance, NetworkState};
use crate::objective::ObjectiveTerms;
use crate::qplace::{run_session, Cell, Lattice, LatticeEnv, QTable};
use crate::rng::{SimRng, Streams};
use crate::scenario::{generate_scenario, Scenario};

/// One way of running the network.
#[derive(Debug, Clone, Copy, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub enum Arm {
    /// All ground stations serve users; no aerial station.
    Traditional,
    /// Aerial station placed by annealed Q-learning.
    Saq,
    Pso,
    Exhaustive,
}

impl Arm {
    pub const ALL: [Arm; 4] = [Arm::Traditional, Arm::Saq, Arm::Pso, Arm::Exhaustive];

    pub fn as_str(self) -> &'static str {
        match self {
            Arm::Traditional => "traditional",
            Arm::Saq => "saq",
            Arm::Pso => "pso",
            Arm::Exhaustive => "exhaustive",
        }
    }

    pub fn has_aerial(self) -> bool {
        self != Arm::Traditional
    }

    /// Parses a comma-separated list. Duplicates are rejected.
    pub fn parse_list(s: &str) -> Result<Vec<Arm>> {
        let mut out: Vec<Arm> = Vec::new();
        for part in s.split(',').map(str::trim).filter(|p| !p.is_empty()) {
            let arm: Arm = part.parse()?;
            if out.contains(&arm) {
                return Err(Error::config("arms", format!("duplicate arm '{part}'")));
            }
            out.push(arm);
        }
        if out.is_empty() {
            return Err(Error::config("arms", "need at least one arm"));
        }
        Ok(out)
    }

    pub fn format_list(arms: &[Arm]) -> String {
        arms.iter()
            .map(|a| a.as_str())
            .collect::<Vec<_>>()
            .join(",")
    }
}

impl FromStr for Arm {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        Arm::ALL
            .into_iter()
            .find(|a| a.as_str() == s)
            .ok_or_else(|| Error::config("arms", format!("unknown arm '{s}'")))
    }
}

impl std::fmt::Display for Arm {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        f.write_str(self.as_str())
    }
}

/// `(Σr)² / (n·Σr²)`.
pub fn jain_index(rates: &[f64]) -> Result<f64> {
    if rates.is_empty() {
        return Err(Error::Domain("Jain's index of an empty rate set".into()));
    }
    if rates.iter().any(|r| !(*r >= 0.0) || !r.is_finite()) {
        return Err(Error::Domain(
            "rates must be finite and non-negative".into(),
        ));
    }
    let sum: f64 = rates.iter().sum();
    let sq: f64 = rates.iter().map(|r| r * r).sum();
    if sum <= 0.0 {
        return Err(Error::Domain(
            "Jain's index needs a positive total rate".into(),
        ));
    }
    Ok(sum * sum / (rates.len() as f64 * sq))
}

/// Empirical CDF of per-user values.
#[derive(Debug, Clone, PartialEq)]
pub struct SinrCdf {
    sorted: Vec<f64>,
}

impl SinrCdf {
    pub fn new(samples: &[f64]) -> Result<Self> {
        if samples.is_empty() {
            return Err(Error::Domain("CDF of an empty sample".into()));
        }
        if samples.iter().any(|s| s.is_nan()) {
            return Err(Error::Domain("CDF sample contains NaN".into()));
        }
        let mut sorted = samples.to_vec();
        sorted.sort_by(f64::total_cmp);
        Ok(Self { sorted })
    }

    /// `(value, fraction ≤ value)` at each distinct value.
    pub fn points(&self) -> Vec<(f64, f64)> {
        let n = self.sorted.len() as f64;
        let mut out: Vec<(f64, f64)> = Vec::new();
        for (i, v) in self.sorted.iter().enumerate() {
            let frac = (i + 1) as f64 / n;
            match out.last_mut() {
                Some(last) if last.0 == *v => last.1 = frac,
                _ => out.push((*v, frac)),
            }
        }
        out
    }

    /// Nearest-rank percentile, `p` in `[0, 100]`.
    pub fn percentile(&self, p: f64) -> f64 {
        let n = self.sorted.len();
        let rank = ((p.clamp(0.0, 100.0) / 100.0) * n as f64).ceil() as usize;
        self.sorted[rank.clamp(1, n) - 1]
    }
}

/// One (session, arm) measurement.
#[derive(Debug, Clone, PartialEq)]
pub struct ArmRecord {
    pub t_s: f64,
    pub arm: Arm,
    pub terms: ObjectiveTerms,
    pub jain: f64,
    pub feasible: bool,
    pub aerial: Option<Point3>,
}

#[derive(Debug, Clone, PartialEq)]
pub struct MetricsLog {
    pub arms: Vec<Arm>,
    pub rows: Vec<ArmRecord>,
    /// Per arm (in `arms` order), per user: sum of per-session SINR in dB.
    sinr_db_sums: Vec<Vec<f64>>,
    sessions: usize,
}

impl MetricsLog {
    fn new(arms: &[Arm], users: usize) -> Self {
        Self {
            arms: arms.to_vec(),
            rows: Vec::new(),
            sinr_db_sums: vec![vec![0.0; users]; arms.len()],
            sessions: 0,
        }
    }

    pub fn sessions(&self) -> usize {
        self.sessions
    }

    /// Rows of one arm in time order.
    pub fn series(&self, arm: Arm) -> Vec<&ArmRecord> {
        self.rows.iter().filter(|r| r.arm == arm).collect()
    }

    /// Time-averaged SINR in dB for each user under `arm`.
    pub fn avg_sinr_db(&self, arm: Arm) -> Option<Vec<f64>> {
        let k = self.arms.iter().position(|a| *a == arm)?;
        let n = self.sessions.max(1) as f64;
        Some(self.sinr_db_sums[k].iter().map(|s| s / n).collect())
    }

    pub fn sinr_cdf(&self, arm: Arm) -> Result<SinrCdf> {
        let avg = self
            .avg_sinr_db(arm)
            .ok_or_else(|| Error::State(format!("arm {arm} was not run")))?;
        SinrCdf::new(&avg)
    }

    pub fn write_timeseries_csv<W: Write>(&self, out: &mut W) -> std::io::Result<()> {
        writeln!(out, "t_s,arm,theta,omega,beta,jain")?;
        for r in &self.rows {
            writeln!(
                out,
                "{},{},{},{},{},{}",
                r.t_s, r.arm, r.terms.theta, r.terms.omega, r.terms.beta, r.jain
            )?;
        }
        Ok(())
    }

    pub fn write_sinr_csv<W: Write>(&self, out: &mut W) -> std::io::Result<()> {
        writeln!(out, "arm,user_id,avg_sinr_db")?;
        for arm in &self.arms {
            for (i, v) in self
                .avg_sinr_db(*arm)
                .unwrap_or_default()
                .iter()
                .enumerate()
            {
                writeln!(out, "{arm},{i},{v}")?;
            }
        }
        Ok(())
    }
}

/// Knobs that are not part of the experiment definition.
#[derive(Debug, Clone, Default)]
pub struct RunOptions {
    /// Q-table to continue learning from.
    pub warm_start: Option<QTable>,
    /// Keep the user positions of every session.
    pub record_trajectory: bool,
    pub exec: Exec,
}

#[derive(Debug, Clone)]
pub struct RunOutput {
    pub scenario: Scenario,
    pub lattice: Lattice,
    pub log: MetricsLog,
    /// Final Q-table of the SA-Q arm.
    pub qtable: Option<QTable>,
    /// User positions at each session, when recorded (t = 0 first).
    pub trajectory: Vec<(f64, Vec<Point2>)>,
    /// Users at the last session.
    pub final_users: Vec<Point2>,
}

impl RunOutput {
    /// `kind,id,x_m,y_m,h_m` rows: ground stations, attraction points, users
    /// at the last session and each arm's last aerial position.
    pub fn positions_csv(&self) -> String {
        let mut s = String::from("kind,id,x_m,y_m,h_m\n");
        for bs in &self.scenario.ground {
            let kind = if bs.is_backhaul_anchor {
                "anchor_bs"
            } else {
                "ground_bs"
            };
            let h = self.scenario.config.ground_height_m;
            let _ = writeln!(
                s,
                "{kind},{},{},{},{h}",
                bs.id, bs.position.x, bs.position.y
            );
        }
        for (i, p) in self.scenario.attractors.iter().enumerate() {
            let _ = writeln!(s, "attractor,{i},{},{},0", p.x, p.y);
        }
        for (i, p) in self.final_users.iter().enumerate() {
            let _ = writeln!(s, "user,{i},{},{},0", p.x, p.y);
        }
        for arm in &self.log.arms {
            if let Some(p) = self.log.series(*arm).last().and_then(|r| r.aerial) {
                let _ = writeln!(s, "aerial_{arm},0,{},{},{}", p.x, p.y, p.z);
            }
        }
        s
    }
}

/// Per-arm state carried across sessions.
struct ArmState {
    arm: Arm,
    rng: Option<SimRng>,
    qtable: Option<QTable>,
    cell: Cell,
}

struct Measured {
    record: ArmRecord,
    sinr_db: Vec<f64>,
}

/// Runs `config.arms` over `config.duration_s` seconds.
///
/// Sessions happen at `t = k·t_min` for `k = 1..⌊duration/t_min⌋`. The user
/// trace comes from its own stream and is advanced once per session before
/// the arms run, so every arm sees identical users and an arm's results do
/// not depend on which other arms are enabled.
pub fn run_experiment(config: &ExperimentConfig, options: RunOptions) -> Result<RunOutput> {
    config.validate()?;
    let sc = &config.scenario;
    let streams = Streams::new(sc.seed);
    let scenario = generate_scenario(sc, &streams)?;
    let traditional = scenario.to_traditional();
    let lattice = Lattice::from_region(&sc.region, sc.upsilon_m)?;
    let stride = match config.exhaustive_stride {
        Some(s) => u32::try_from(s).map_err(|_| Error::config("exhaustive_stride", "too large"))?,
        None => lattice.stride_for_budget(MAX_DEFAULT_CANDIDATES),
    };

    let qtable = match options.warm_start {
        Some(q) if q.lattice() != &lattice => {
            return Err(Error::Incompatible(
                "warm-start Q-table was built for a different lattice".into(),
            ))
        }
        Some(q) => q,
        None => QTable::new(lattice),
    };
    let start = lattice.central_cell();
    let mut states: Vec<ArmState> = config
        .arms
        .iter()
        .map(|arm| ArmState {
            arm: *arm,
            rng: match arm {
                Arm::Saq => Some(streams.stream("saq.learning")),
                Arm::Pso => Some(streams.stream("pso")),
                _ => None,
            },
            qtable: (*arm == Arm::Saq).then(|| qtable.clone()),
            cell: start,
        })
        .collect();

    let mut mobility = streams.stream("mobility");
    let mut state = NetworkState::new(&scenario, &mut mobility);
    let mut log = MetricsLog::new(&config.arms, state.users.len());
    let mut trajectory = Vec::new();
    if options.record_trajectory {
        trajectory.push((0.0, state.positions()));
    }

    let sessions = (config.duration_s / sc.t_min_s + 1e-9).floor() as usize;
    for k in 1..=sessions {
        let t_s = k as f64 * sc.t_min_s;
        advance(
            &mut state,
            sc.t_min_s,
            &scenario.attractors,
            &sc.region,
            &mut mobility,
        );
        let users = state.positions();
        if options.record_trajectory {
            trajectory.push((t_s, users.clone()));
        }
        let aerial_eval = Evaluator::new(&scenario, &users)?;
        let ground_eval = Evaluator::new(&traditional, &users)?;
        let exec = options.exec;
        let measured: Vec<Result<Measured>> = exec.map_mut(&mut states, |st| {
            run_arm(
                st,
                t_s,
                &aerial_eval,
                &ground_eval,
                &lattice,
                config,
                stride,
                exec,
            )
        });
        for (k, m) in measured.into_iter().enumerate() {
            let m = m?;
            for (sum, v) in log.sinr_db_sums[k].iter_mut().zip(&m.sinr_db) {
                *sum += v;
            }
            log.rows.push(m.record);
        }
        log.sessions += 1;
    }

    let qtable = states.into_iter().find_map(|s| s.qtable);
    Ok(RunOutput {
        scenario,
        lattice,
        log,
        qtable,
        trajectory,
        final_users: state.positions(),
    })
}

#[allow(clippy::too_many_arguments)]
fn run_arm(
    st: &mut ArmState,
    t_s: f64,
    aerial_eval: &Evaluator<'_>,
    ground_eval: &Evaluator<'_>,
    lattice: &Lattice,
    config: &ExperimentConfig,
    stride: u32,
    exec: Exec,
) -> Result<Measured> {
    let sc = &config.scenario;
    let aerial = match st.arm {
        Arm::Traditional => None,
        Arm::Saq => {
            let q = st.qtable.as_mut().expect("saq arm owns a Q-table");
            let rng = st.rng.as_mut().expect("saq arm owns a stream");
            let mut env = LatticeEnv::new(
                Evaluator::new(aerial_eval.scenario(), aerial_eval.users())?,
                *lattice,
            );
            let out = run_session(q, &mut env, st.cell, &sc.learn, sc.delta1, rng)?;
            st.cell = out.best_cell;
            Some(lattice.center(out.best_cell))
        }
        Arm::Pso => {
            let rng = st.rng.as_mut().expect("pso arm owns a stream");
            let placed = pso_search(aerial_eval, lattice, &config.pso, rng, exec)?;
            st.cell = placed.candidate.cell;
            Some(placed.candidate.position)
        }
        Arm::Exhaustive => {
            let best = exhaustive_search(aerial_eval, lattice, stride, exec)?;
            st.cell = best.cell;
            Some(best.position)
        }
    };
    let eval: Evaluation = match aerial {
        None => ground_eval.evaluate(None)?,
        Some(p) => aerial_eval.evaluate(Some(p))?,
    };
    let rates: Vec<f64> = eval.links.iter().map(|l| l.rate_bps).collect();
    Ok(Measured {
        record: ArmRecord {
            t_s,
            arm: st.arm,
            terms: eval.terms,
            jain: jain_index(&rates).unwrap_or(0.0),
            feasible: eval.feasibility.feasible(),
            aerial,
        },
        sinr_db: eval.links.iter().map(|l| l.sinr_db()).collect(),
    })
}
