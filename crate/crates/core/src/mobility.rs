//! Destination-driven pedestrian mobility.
//!
//! Each user walks in a straight line toward a destination at a speed drawn
//! once per leg. Destinations are one of the attraction points or a fresh
//! uniform point, all `ν + 1` options equally likely. On arrival a new leg
//! starts immediately.

use std::io::Write;

use rand::Rng;

use crate::config::Region;
use crate::geometry::Point2;
use crate::scenario::{uniform_point, Scenario};

/// Top pedestrian speed, m/s.
pub const MAX_SPEED: f64 = 1.3;

/// Where a leg is headed.
#[derive(Debug, Clone, Copy, PartialEq)]
pub enum Destination {
    Attractor(usize),
    Random,
}

#[derive(Debug, Clone, Copy, PartialEq)]
pub struct UserMotion {
    pub position: Point2,
    pub destination: Point2,
    pub target: Destination,
    pub speed: f64,
    /// Set when the user reached its destination during the last step.
    pub arrived: bool,
}

/// Draws the next leg: destination and walking speed in `(0, MAX_SPEED]`.
pub fn choose_destination<R: Rng + ?Sized>(
    attractors: &[Point2],
    region: &Region,
    rng: &mut R,
) -> (Point2, Destination, f64) {
    let k = rng.gen_range(0..=attractors.len());
    let (point, target) = if k < attractors.len() {
        (attractors[k], Destination::Attractor(k))
    } else {
        (uniform_point(region, rng), Destination::Random)
    };
    let speed = MAX_SPEED * (1.0 - rng.gen::<f64>());
    (point, target, speed)
}

/// Users and the simulation clock.
#[derive(Debug, Clone, PartialEq)]
pub struct NetworkState {
    pub users: Vec<UserMotion>,
    pub time_s: f64,
}

impl NetworkState {
    /// Places users at the scenario's initial positions and draws a first leg
    /// for each.
    pub fn new<R: Rng + ?Sized>(scenario: &Scenario, rng: &mut R) -> Self {
        let users = scenario
            .initial_users
            .iter()
            .map(|p| {
                let (destination, target, speed) =
                    choose_destination(&scenario.attractors, &scenario.config.region, rng);
                UserMotion {
                    position: *p,
                    destination,
                    target,
                    speed,
                    arrived: false,
                }
            })
            .collect();
        Self { users, time_s: 0.0 }
    }

    pub fn positions(&self) -> Vec<Point2> {
        self.users.iter().map(|u| u.position).collect()
    }
}

/// Advances every user by `dt` seconds. Returns the number of legs that
/// finished during this step.
pub fn step_users<R: Rng + ?Sized>(
    state: &mut NetworkState,
    dt: f64,
    attractors: &[Point2],
    region: &Region,
    rng: &mut R,
) -> usize {
    assert!(dt > 0.0, "time step must be positive");
    let mut arrivals = 0;
    for u in &mut state.users {
        u.arrived = false;
        let remaining = u.position.distance(&u.destination);
        let reach = u.speed * dt;
        if reach >= remaining {
            u.position = u.destination;
            u.arrived = true;
            arrivals += 1;
            let (destination, target, speed) = choose_destination(attractors, region, rng);
            u.destination = destination;
            u.target = target;
            u.speed = speed;
        } else {
            let f = reach / remaining;
            u.position.x += (u.destination.x - u.position.x) * f;
            u.position.y += (u.destination.y - u.position.y) * f;
        }
    }
    state.time_s += dt;
    arrivals
}

/// Advances `state` by `duration` seconds in 1 s ticks (the last tick is
/// shortened if `duration` is fractional).
pub fn advance<R: Rng + ?Sized>(
    state: &mut NetworkState,
    duration: f64,
    attractors: &[Point2],
    region: &Region,
    rng: &mut R,
) {
    let mut left = duration;
    while left > 1e-12 {
        let dt = left.min(1.0);
        step_users(state, dt, attractors, region, rng);
        left -= dt;
    }
}

/// Writes `t_s,user_id,x_m,y_m` rows for every snapshot.
pub fn write_trajectory_csv<W: Write>(
    out: &mut W,
    snapshots: &[(f64, Vec<Point2>)],
) -> std::io::Result<()> {
    writeln!(out, "t_s,user_id,x_m,y_m")?;
    for (t, positions) in snapshots {
        for (i, p) in positions.iter().enumerate() {
            writeln!(out, "{t},{i},{},{}", p.x, p.y)?;
        }
    }
    Ok(())
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::config::ScenarioConfig;
    use crate::rng::{SimRng, Streams};
    use crate::scenario::generate_scenario;
    use rand::SeedableRng;

    fn user(pos: Point2, dest: Point2, speed: f64) -> NetworkState {
        NetworkState {
            users: vec![UserMotion {
                position: pos,
                destination: dest,
                target: Destination::Random,
                speed,
                arrived: false,
            }],
            time_s: 0.0,
        }
    }

    #[test]
    fn partial_leg() {
        let region = ScenarioConfig::desk().region;
        let mut s = user(Point2::new(0.0, 0.0), Point2::new(10.0, 0.0), 1.0);
        let mut rng = SimRng::seed_from_u64(1);
        step_users(&mut s, 5.0, &[], &region, &mut rng);
        assert!((s.users[0].position.x - 5.0).abs() < 1e-12);
        assert!(!s.users[0].arrived);
        assert_eq!(s.time_s, 5.0);
    }

    #[test]
    fn clamps_at_destination_and_redraws() {
        let region = ScenarioConfig::desk().region;
        let attractors = [Point2::new(200.0, 200.0)];
        let mut s = user(Point2::new(0.0, 0.0), Point2::new(1.0, 0.0), 1.3);
        let mut rng = SimRng::seed_from_u64(1);
        let n = step_users(&mut s, 10.0, &attractors, &region, &mut rng);
        assert_eq!(n, 1);
        let u = &s.users[0];
        assert_eq!(u.position, Point2::new(1.0, 0.0));
        assert!(u.arrived);
        assert!(u.speed > 0.0 && u.speed <= MAX_SPEED);
        assert!(region.contains_xy(u.destination.x, u.destination.y));
    }

    #[test]
    fn no_attractors_means_random_points() {
        let region = ScenarioConfig::desk().region;
        let mut rng = SimRng::seed_from_u64(9);
        for _ in 0..1000 {
            let (p, kind, speed) = choose_destination(&[], &region, &mut rng);
            assert_eq!(kind, Destination::Random);
            assert!(region.contains_xy(p.x, p.y));
            assert!(speed > 0.0 && speed <= MAX_SPEED);
        }
    }

    #[test]
    fn destination_frequencies_are_uniform_over_choices() {
        let region = ScenarioConfig::default().region;
        let attractors: Vec<Point2> = (0..5).map(|i| Point2::new(i as f64, 0.0)).collect();
        let mut rng = SimRng::seed_from_u64(2024);
        let n = 100_000;
        let mut counts = [0usize; 6];
        for _ in 0..n {
            match choose_destination(&attractors, &region, &mut rng).1 {
                Destination::Attractor(k) => counts[k] += 1,
                Destination::Random => counts[5] += 1,
            }
        }
        for c in counts {
            let f = c as f64 / n as f64;
            assert!((f - 1.0 / 6.0).abs() < 0.01, "{counts:?}");
        }
    }

    #[test]
    fn displacement_is_bounded_and_deterministic() {
        let s = generate_scenario(&ScenarioConfig::desk(), &Streams::new(5)).unwrap();
        let run = || {
            let mut rng = Streams::new(5).stream("mobility");
            let mut st = NetworkState::new(&s, &mut rng);
            let mut trace = vec![st.positions()];
            for _ in 0..600 {
                let before = st.positions();
                step_users(&mut st, 1.0, &s.attractors, &s.config.region, &mut rng);
                for (a, b) in before.iter().zip(st.positions()) {
                    assert!(a.distance(&b) <= MAX_SPEED * 1.0 + 1e-9);
                    assert!(s.config.region.contains_xy(b.x, b.y));
                }
                trace.push(st.positions());
            }
            trace
        };
        assert_eq!(run(), run());
    }

    #[test]
    fn trajectory_csv_shape() {
        let mut buf = Vec::new();
        write_trajectory_csv(
            &mut buf,
            &[
                (0.0, vec![Point2::new(1.0, 2.5)]),
                (150.0, vec![Point2::new(-3.0, 4.0)]),
            ],
        )
        .unwrap();
        let text = String::from_utf8(buf).unwrap();
        assert_eq!(text, "t_s,user_id,x_m,y_m\n0,0,1,2.5\n150,0,-3,4\n");
    }
}
