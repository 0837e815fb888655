//! Max-SINR user association.
//!
//! SINR does not depend on a user's bandwidth share, so the max-SINR server is
//! fixed by geometry alone and no load iteration is needed. Under full reuse
//! it is also the strongest received station: `S_j / (N + T − S_j)` grows
//! with `S_j` at fixed total `T`.

use crate::channel::{LinkBudget, RadioMap, ServerId};
use crate::error::{Error, Result};
use crate::geometry::{Point2, Point3};
use crate::scenario::Scenario;

/// Sparse form of the binary association matrix: one server per user.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct AssociationMatrix {
    servers: Vec<ServerId>,
}

impl AssociationMatrix {
    pub fn from_servers(servers: Vec<ServerId>) -> Self {
        Self { servers }
    }

    pub fn len(&self) -> usize {
        self.servers.len()
    }

    pub fn is_empty(&self) -> bool {
        self.servers.is_empty()
    }

    pub fn server_of(&self, user: usize) -> ServerId {
        self.servers[user]
    }

    pub fn iter(&self) -> impl Iterator<Item = ServerId> + '_ {
        self.servers.iter().copied()
    }

    /// Users attached to `id`.
    pub fn load(&self, id: ServerId) -> usize {
        self.servers.iter().filter(|s| **s == id).count()
    }

    /// Dense `U_ij` entry.
    pub fn indicator(&self, user: usize, id: ServerId) -> u8 {
        u8::from(self.servers[user] == id)
    }
}

/// Picks, for each user, the column with the highest SINR. Ties go to the
/// lowest server id.
pub fn associate_from_map(map: &RadioMap) -> Result<AssociationMatrix> {
    if map.server_count() == 0 {
        return Err(Error::config(
            "num_ground_bs",
            "no user-serving base station exists",
        ));
    }
    let servers = (0..map.users)
        .map(|u| {
            let mut best = 0;
            let mut best_sinr = map.sinr(u, 0);
            for col in 1..map.server_count() {
                let g = map.sinr(u, col);
                if g > best_sinr || (g == best_sinr && map.servers[col].id < map.servers[best].id) {
                    best = col;
                    best_sinr = g;
                }
            }
            map.servers[best].id
        })
        .collect();
    Ok(AssociationMatrix { servers })
}

/// Associates every user at `users` to its max-SINR station.
pub fn associate_max_sinr(
    scenario: &Scenario,
    users: &[Point2],
    aerial: Option<Point3>,
) -> Result<AssociationMatrix> {
    let budget = LinkBudget::from_config(&scenario.config);
    let map = RadioMap::build(scenario, &budget, users, aerial)?;
    associate_from_map(&map)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::channel::{compute_links, serving_stations};
    use crate::config::ScenarioConfig;
    use crate::rng::Streams;
    use crate::scenario::{generate_scenario, GroundBs, Mode};
    use proptest::prelude::*;

    fn scenario_with(ground: &[Point2]) -> Scenario {
        let config = ScenarioConfig::desk();
        Scenario {
            ground: ground
                .iter()
                .enumerate()
                .map(|(id, p)| GroundBs {
                    id,
                    position: *p,
                    tx_power_dbm: config.p_max_dbm,
                    is_backhaul_anchor: false,
                })
                .collect(),
            config,
            attractors: vec![],
            initial_users: vec![],
            mode: Mode::Traditional,
        }
    }

    /// Brute-force SINR of `user` under every candidate station, recomputed
    /// from the link-budget formula rather than the radio map.
    fn brute_force_sinrs(
        s: &Scenario,
        user: Point2,
        aerial: Option<Point3>,
    ) -> Vec<(ServerId, f64)> {
        let budget = LinkBudget::from_config(&s.config);
        let servers = serving_stations(s, aerial).unwrap();
        let pls: Vec<f64> = servers
            .iter()
            .map(|srv| budget.path_loss(&srv.site, user).unwrap())
            .collect();
        servers
            .iter()
            .enumerate()
            .map(|(j, srv)| {
                let others: Vec<f64> = pls
                    .iter()
                    .enumerate()
                    .filter(|(k, _)| *k != j)
                    .map(|(_, p)| *p)
                    .collect();
                (srv.id, budget.sinr(pls[j], &others, 1.0))
            })
            .collect()
    }

    #[test]
    fn single_station_takes_everyone() {
        let s = scenario_with(&[Point2::new(0.0, 0.0)]);
        let users = [Point2::new(10.0, 0.0), Point2::new(-400.0, 300.0)];
        let a = associate_max_sinr(&s, &users, None).unwrap();
        assert!(a.iter().all(|id| id == ServerId::Ground(0)));
    }

    #[test]
    fn tie_goes_to_lower_id() {
        let s = scenario_with(&[Point2::new(100.0, 0.0), Point2::new(-100.0, 0.0)]);
        let a = associate_max_sinr(&s, &[Point2::new(0.0, 0.0)], None).unwrap();
        assert_eq!(a.server_of(0), ServerId::Ground(0));
    }

    #[test]
    fn nearest_of_three_matches_brute_force() {
        let s = scenario_with(&[
            Point2::new(-300.0, 0.0),
            Point2::new(300.0, 0.0),
            Point2::new(0.0, 250.0),
        ]);
        let user = Point2::new(20.0, 200.0);
        let a = associate_max_sinr(&s, &[user], None).unwrap();
        assert_eq!(a.server_of(0), ServerId::Ground(2));
        let sinrs = brute_force_sinrs(&s, user, None);
        let best = sinrs
            .iter()
            .fold(sinrs[0], |acc, x| if x.1 > acc.1 { *x } else { acc });
        assert_eq!(best.0, ServerId::Ground(2));
    }

    #[test]
    fn no_server_is_a_config_error() {
        let s = scenario_with(&[]);
        let err = associate_max_sinr(&s, &[Point2::new(0.0, 0.0)], None).unwrap_err();
        assert!(matches!(err, Error::Config { .. }));
    }

    proptest! {
        #![proptest_config(ProptestConfig::with_cases(64))]

        #[test]
        fn chosen_server_is_sinr_optimal(seed in 0u64..10_000, ax in -500.0f64..500.0, ay in -500.0f64..500.0, h in 25.0f64..525.0) {
            let s = generate_scenario(&ScenarioConfig::desk(), &Streams::new(seed)).unwrap();
            let aerial = Some(Point3::new(ax, ay, h));
            let a = associate_max_sinr(&s, &s.initial_users, aerial).unwrap();
            prop_assert_eq!(a.len(), s.initial_users.len());
            for (i, u) in s.initial_users.iter().enumerate() {
                let sinrs = brute_force_sinrs(&s, *u, aerial);
                let chosen = sinrs.iter().find(|(id, _)| *id == a.server_of(i)).unwrap().1;
                for (_, g) in &sinrs {
                    // The brute force evaluates over a 1 Hz share; allow rounding.
                    prop_assert!(chosen >= g * (1.0 - 1e-12));
                }
                let row_sum: u8 = sinrs.iter().map(|(id, _)| a.indicator(i, *id)).sum();
                prop_assert_eq!(row_sum, 1);
                prop_assert!(a.server_of(i) != ServerId::Ground(s.backhaul_anchor().unwrap().id));
            }
            let again = associate_max_sinr(&s, &s.initial_users, aerial).unwrap();
            prop_assert_eq!(&a, &again);
            let links = compute_links(&s, &s.initial_users, aerial, &a).unwrap();
            prop_assert!(links.iter().all(|l| l.sinr >= 0.0));
        }
    }
}
