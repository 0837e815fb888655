//! Reference optimizers for the placement objective: exhaustive lattice
//! search and global-best particle swarm.

use rand::Rng;

use crate::config::PsoParams;
use crate::error::{Error, Result};
use crate::evaluate::{Evaluator, Observation};
use crate::exec::Exec;
use crate::geometry::Point3;
use crate::objective::ObjectiveTerms;
use crate::qplace::{Cell, Lattice};

/// A scored placement.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct CandidateEvaluation {
    pub cell: Cell,
    pub position: Point3,
    pub terms: ObjectiveTerms,
    pub feasible: bool,
    /// `c_ζ − aerial load`; negative when the backhaul is overloaded.
    pub backhaul_margin_bps: f64,
    /// Lowest served rate minus `R_min`.
    pub min_rate_margin_bps: f64,
}

impl CandidateEvaluation {
    pub fn theta(&self) -> f64 {
        self.terms.theta
    }

    pub fn observation(&self) -> Observation {
        Observation {
            terms: self.terms,
            feasible: self.feasible,
        }
    }

    /// Feasible first, then fairness.
    pub fn outranks(&self, other: &CandidateEvaluation) -> bool {
        self.observation().outranks(&other.observation())
    }
}

/// Scores the aerial station at the center of `cell`.
pub fn evaluate_cell(
    evaluator: &Evaluator<'_>,
    lattice: &Lattice,
    cell: Cell,
) -> Result<CandidateEvaluation> {
    let position = lattice.center(cell);
    let e = evaluator.evaluate(Some(position))?;
    Ok(CandidateEvaluation {
        cell,
        position,
        terms: e.terms,
        feasible: e.feasibility.feasible(),
        backhaul_margin_bps: e.feasibility.backhaul_margin_bps(),
        min_rate_margin_bps: e.feasibility.min_rate_bps - e.feasibility.r_min_bps,
    })
}

/// Scores every cell in `cells`, preserving order.
pub fn evaluate_cells(
    evaluator: &Evaluator<'_>,
    lattice: &Lattice,
    cells: &[Cell],
    exec: Exec,
) -> Result<Vec<CandidateEvaluation>> {
    exec.map(cells, |c| evaluate_cell(evaluator, lattice, *c))
        .into_iter()
        .collect()
}

/// Best of `candidates` (feasible first, then fairness). The first maximal
/// candidate wins ties, so a lexicographically sorted input yields the
/// smallest cell index among equals.
pub fn best_of(candidates: &[CandidateEvaluation]) -> Option<CandidateEvaluation> {
    let mut it = candidates.iter();
    let mut best = *it.next()?;
    for c in it {
        if c.outranks(&best) {
            best = *c;
        }
    }
    Some(best)
}

/// Evaluates every `stride`-th lattice cell and returns the best. When no
/// candidate is feasible the best infeasible one is returned, flagged.
pub fn exhaustive_search(
    evaluator: &Evaluator<'_>,
    lattice: &Lattice,
    stride: u32,
    exec: Exec,
) -> Result<CandidateEvaluation> {
    if stride == 0 {
        return Err(Error::config("exhaustive_stride", "must be at least 1"));
    }
    let cells = lattice.cells_strided(stride);
    let scored = evaluate_cells(evaluator, lattice, &cells, exec)?;
    best_of(&scored).ok_or_else(|| Error::State("lattice has no cells".into()))
}

/// Result of a swarm run.
#[derive(Debug, Clone, PartialEq)]
pub struct PsoOutcome {
    pub best_position: Point3,
    pub best_fitness: f64,
    /// Global-best fitness after each iteration.
    pub history: Vec<f64>,
}

#[derive(Debug, Clone, Copy)]
struct Particle {
    pos: [f64; 3],
    vel: [f64; 3],
    best_pos: [f64; 3],
    best_fit: f64,
}

fn sanitize(f: f64) -> f64 {
    if f.is_nan() {
        f64::NEG_INFINITY
    } else {
        f
    }
}

/// Global-best PSO maximizing `fitness` over an axis-aligned box.
///
/// Iteration 1 evaluates the initial swarm; every later iteration moves the
/// particles and re-evaluates them. Velocities are clamped per axis to
/// `velocity_fraction` of that axis' extent and positions to the box. All
/// random draws happen on the calling thread, so the result depends only on
/// the generator state, not on `exec`.
pub fn pso_maximize<F, R>(
    bounds: [(f64, f64); 3],
    params: &PsoParams,
    fitness: F,
    rng: &mut R,
    exec: Exec,
) -> Result<PsoOutcome>
where
    F: Fn(Point3) -> f64 + Sync + Send,
    R: Rng + ?Sized,
{
    params.validate()?;
    let vmax: [f64; 3] =
        std::array::from_fn(|d| params.velocity_fraction * (bounds[d].1 - bounds[d].0));
    let to_point = |p: &[f64; 3]| Point3::new(p[0], p[1], p[2]);

    let mut swarm: Vec<Particle> = (0..params.swarm)
        .map(|_| {
            let pos: [f64; 3] = std::array::from_fn(|d| rng.gen_range(bounds[d].0..=bounds[d].1));
            let vel: [f64; 3] = std::array::from_fn(|d| rng.gen_range(-vmax[d]..=vmax[d]));
            Particle {
                pos,
                vel,
                best_pos: pos,
                best_fit: f64::NEG_INFINITY,
            }
        })
        .collect();

    let mut g_pos = swarm[0].pos;
    let mut g_fit = f64::NEG_INFINITY;
    let mut history = Vec::with_capacity(params.iterations);

    for iter in 0..params.iterations {
        if iter > 0 {
            for p in &mut swarm {
                for d in 0..3 {
                    let r1: f64 = rng.gen();
                    let r2: f64 = rng.gen();
                    let v = params.inertia * p.vel[d]
                        + params.cognitive * r1 * (p.best_pos[d] - p.pos[d])
                        + params.social * r2 * (g_pos[d] - p.pos[d]);
                    p.vel[d] = v.clamp(-vmax[d], vmax[d]);
                    p.pos[d] = (p.pos[d] + p.vel[d]).clamp(bounds[d].0, bounds[d].1);
                }
            }
        }
        let scores = exec.map(&swarm, |p| sanitize(fitness(to_point(&p.pos))));
        for (p, f) in swarm.iter_mut().zip(scores) {
            if f > p.best_fit {
                p.best_fit = f;
                p.best_pos = p.pos;
            }
            if f > g_fit {
                g_fit = f;
                g_pos = p.pos;
            }
        }
        history.push(g_fit);
    }

    Ok(PsoOutcome {
        best_position: to_point(&g_pos),
        best_fitness: g_fit,
        history,
    })
}

/// PSO placement in the continuous flight zone, snapped to the lattice.
#[derive(Debug, Clone, PartialEq)]
pub struct PsoPlacement {
    pub candidate: CandidateEvaluation,
    pub outcome: PsoOutcome,
}

/// Runs PSO on `Θ − δ₁·β` over the flight zone and scores the lattice cell
/// nearest to the best particle.
pub fn pso_search<R: Rng + ?Sized>(
    evaluator: &Evaluator<'_>,
    lattice: &Lattice,
    params: &PsoParams,
    rng: &mut R,
    exec: Exec,
) -> Result<PsoPlacement> {
    let config = &evaluator.scenario().config;
    let region = config.region;
    let delta1 = config.delta1;
    let fitness = |p: Point3| match evaluator.evaluate(Some(p)) {
        Ok(e) => e.terms.theta - delta1 * e.terms.beta,
        Err(_) => f64::NEG_INFINITY,
    };
    let outcome = pso_maximize(
        [
            (region.x_min, region.x_max),
            (region.y_min, region.y_max),
            (region.h_min, region.h_max),
        ],
        params,
        fitness,
        rng,
        exec,
    )?;
    let cell = lattice.nearest_cell(outcome.best_position);
    let candidate = evaluate_cell(evaluator, lattice, cell)?;
    Ok(PsoPlacement { candidate, outcome })
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::config::ScenarioConfig;
    use crate::geometry::Point2;
    use crate::rng::{SimRng, Streams};
    use crate::scenario::{generate_scenario, GroundBs, Mode, Scenario};
    use rand::SeedableRng;

    fn one_user_scenario(user: Point2) -> Scenario {
        let mut config = ScenarioConfig::desk();
        config.region.x_min = -150.0;
        config.region.x_max = 150.0;
        config.region.y_min = -150.0;
        config.region.y_max = 150.0;
        config.region.h_min = 25.0;
        config.region.h_max = 125.0;
        config.upsilon_m = 100.0;
        Scenario {
            ground: vec![
                GroundBs {
                    id: 0,
                    position: Point2::new(-2000.0, -2000.0),
                    tx_power_dbm: config.p_max_dbm,
                    is_backhaul_anchor: false,
                },
                GroundBs {
                    id: 1,
                    position: Point2::new(0.0, 0.0),
                    tx_power_dbm: config.p_max_dbm,
                    is_backhaul_anchor: true,
                },
            ],
            config,
            attractors: vec![],
            initial_users: vec![user],
            mode: Mode::Aerial,
        }
    }

    #[test]
    fn single_cell_lattice() {
        let s = generate_scenario(&ScenarioConfig::desk(), &Streams::new(1)).unwrap();
        let ev = Evaluator::new(&s, &s.initial_users).unwrap();
        let l = Lattice::new(Point3::new(-500.0, -500.0, 25.0), 1000.0, [1, 1, 1]).unwrap();
        let best = exhaustive_search(&ev, &l, 1, Exec::Sequential).unwrap();
        assert_eq!(best.cell, Cell::new(0, 0, 0));
        assert!(exhaustive_search(&ev, &l, 0, Exec::Sequential).is_err());
    }

    #[test]
    fn three_by_three_single_user() {
        // A lone user far from the only serving ground BS: fairness is its
        // log-rate, maximized by the aerial cell closest to it. The user is
        // the only aerial user, so the cap is lifted to keep every cell feasible.
        let user = Point2::new(90.0, -110.0);
        let mut s = one_user_scenario(user);
        s.config.backhaul_cap_bps = 1e12;
        let l = Lattice::from_region(&s.config.region, s.config.upsilon_m).unwrap();
        assert_eq!(l.dims, [3, 3, 1]);
        let ev = Evaluator::new(&s, &s.initial_users).unwrap();
        let best = exhaustive_search(&ev, &l, 1, Exec::Sequential).unwrap();
        assert_eq!(best.cell, Cell::new(2, 0, 0));

        // Recompute the nine Θ values from the link budget directly.
        let budget = crate::channel::LinkBudget::from_config(&s.config);
        let ground_pl = budget
            .ground
            .path_loss(Point2::new(-2000.0, -2000.0), user)
            .unwrap();
        let mut hand: Vec<(Cell, f64)> = l
            .cells()
            .into_iter()
            .map(|c| {
                let pl = budget.a2g.path_loss(l.center(c), user).unwrap();
                let (serving, other) = if pl < ground_pl {
                    (pl, ground_pl)
                } else {
                    (ground_pl, pl)
                };
                let g = budget.sinr(serving, &[other], 20e6);
                (c, (20e6 * (1.0 + g).log2()).ln())
            })
            .collect();
        hand.sort_by(|a, b| b.1.total_cmp(&a.1));
        assert_eq!(hand[0].0, best.cell);
        assert!((hand[0].1 - best.theta()).abs() < 1e-9);
    }

    #[test]
    fn coarser_stride_never_beats_full_search() {
        let s = generate_scenario(&ScenarioConfig::desk(), &Streams::new(2)).unwrap();
        let ev = Evaluator::new(&s, &s.initial_users).unwrap();
        let l = Lattice::from_region(&s.config.region, 100.0).unwrap();
        let full = exhaustive_search(&ev, &l, 1, Exec::default()).unwrap();
        let coarse = exhaustive_search(&ev, &l, 2, Exec::default()).unwrap();
        assert!(!coarse.outranks(&full));
    }

    #[test]
    fn parallel_and_serial_agree() {
        let s = generate_scenario(&ScenarioConfig::desk(), &Streams::new(3)).unwrap();
        let ev = Evaluator::new(&s, &s.initial_users).unwrap();
        let l = Lattice::from_region(&s.config.region, 100.0).unwrap();
        let a = exhaustive_search(&ev, &l, 1, Exec::Sequential).unwrap();
        let b = exhaustive_search(&ev, &l, 1, Exec::Parallel).unwrap();
        assert_eq!(a, b);
        let pa = pso_search(
            &ev,
            &l,
            &PsoParams {
                iterations: 10,
                ..PsoParams::default()
            },
            &mut SimRng::seed_from_u64(4),
            Exec::Sequential,
        )
        .unwrap();
        let pb = pso_search(
            &ev,
            &l,
            &PsoParams {
                iterations: 10,
                ..PsoParams::default()
            },
            &mut SimRng::seed_from_u64(4),
            Exec::Parallel,
        )
        .unwrap();
        assert_eq!(pa, pb);
    }

    #[test]
    fn pso_finds_a_quadratic_optimum() {
        let bounds = [(-500.0, 500.0), (-500.0, 500.0), (25.0, 525.0)];
        let diag = (1000f64.powi(2) * 2.0 + 500f64.powi(2)).sqrt();
        for seed in 0..20 {
            let mut rng = SimRng::seed_from_u64(seed);
            let target = Point3::new(
                rng.gen_range(-400.0..400.0),
                rng.gen_range(-400.0..400.0),
                rng.gen_range(50.0..500.0),
            );
            let f = |p: Point3| -(p.distance(&target).powi(2));
            let out =
                pso_maximize(bounds, &PsoParams::default(), f, &mut rng, Exec::Sequential).unwrap();
            assert!(
                out.best_position.distance(&target) < 0.01 * diag,
                "seed {seed}"
            );
            assert!(out.history.windows(2).all(|w| w[1] >= w[0]));
            assert_eq!(out.history.len(), 100);
        }
    }

    #[test]
    fn two_particles_one_iteration() {
        let bounds = [(0.0, 1.0), (0.0, 1.0), (0.0, 1.0)];
        let params = PsoParams {
            swarm: 2,
            iterations: 1,
            ..PsoParams::default()
        };
        let f = |p: Point3| p.x + p.y + p.z;
        let mut rng = SimRng::seed_from_u64(9);
        let out = pso_maximize(bounds, &params, f, &mut rng, Exec::Sequential).unwrap();
        // Replay the two initial draws.
        let mut replay = SimRng::seed_from_u64(9);
        let mut samples = Vec::new();
        for _ in 0..2 {
            let p: [f64; 3] = std::array::from_fn(|_| replay.gen_range(0.0..=1.0));
            let _v: [f64; 3] = std::array::from_fn(|_| replay.gen_range(-0.2..=0.2));
            samples.push(f(Point3::new(p[0], p[1], p[2])));
        }
        assert_eq!(out.best_fitness, samples[0].max(samples[1]));
        assert!(pso_maximize(
            bounds,
            &PsoParams { swarm: 1, ..params },
            f,
            &mut rng,
            Exec::Sequential
        )
        .is_err());
    }
}
