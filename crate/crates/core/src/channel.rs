//! Radio propagation and link quality.
//!
//! Every base station radiates the same power spectral density across the
//! whole band (full reuse between stations, orthogonal users inside one), so a
//! user's SINR does not depend on the bandwidth share it receives.

use std::f64::consts::PI;

use crate::config::ScenarioConfig;
use crate::error::{Error, Result};
use crate::geometry::{Point2, Point3};
use crate::scenario::Scenario;
use crate::units::{db_to_linear, dbm_to_mw, hz_to_db};

/// Speed of light in vacuum, m/s.
pub const SPEED_OF_LIGHT: f64 = 299_792_458.0;

/// Free-space path loss in dB at distance `d` meters and carrier `f` Hz.
pub fn free_space_path_loss(d: f64, f: f64) -> Result<f64> {
    if !(d > 0.0) || !d.is_finite() {
        return Err(Error::Domain(format!("distance must be positive, got {d}")));
    }
    if !(f > 0.0) || !f.is_finite() {
        return Err(Error::Domain(format!(
            "frequency must be positive, got {f}"
        )));
    }
    Ok(20.0 * d.log10() + 20.0 * f.log10() + 20.0 * (4.0 * PI / SPEED_OF_LIGHT).log10())
}

/// Line-of-sight probability for elevation angle `theta_deg` under the
/// sigmoid `1 / (1 + a·exp(−b(θ − a)))`.
pub fn los_probability(theta_deg: f64, a: f64, b: f64) -> Result<f64> {
    if !(0.0..=90.0).contains(&theta_deg) {
        return Err(Error::Domain(format!(
            "elevation angle must lie in [0, 90] degrees, got {theta_deg}"
        )));
    }
    Ok(1.0 / (1.0 + a * (-b * (theta_deg - a)).exp()))
}

/// Air-to-ground channel constants.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct A2gParams {
    pub carrier_hz: f64,
    pub eta_los_db: f64,
    pub eta_nlos_db: f64,
    pub a: f64,
    pub b: f64,
}

impl A2gParams {
    /// Urban sigmoid constants with the given excess losses.
    pub fn urban(carrier_hz: f64, eta_los_db: f64, eta_nlos_db: f64) -> Self {
        Self {
            carrier_hz,
            eta_los_db,
            eta_nlos_db,
            a: 9.61,
            b: 0.16,
        }
    }

    pub fn from_config(c: &ScenarioConfig) -> Self {
        Self {
            carrier_hz: c.carrier_hz,
            eta_los_db: c.eta_los_db,
            eta_nlos_db: c.eta_nlos_db,
            a: c.los_a,
            b: c.los_b,
        }
    }

    pub fn los_probability(&self, theta_deg: f64) -> Result<f64> {
        los_probability(theta_deg, self.a, self.b)
    }

    /// Mean excess loss for elevation `theta_deg`: LoS and NLoS losses
    /// weighted by their probabilities.
    pub fn excess_loss(&self, theta_deg: f64) -> Result<f64> {
        let p = self.los_probability(theta_deg)?;
        Ok(p * self.eta_los_db + (1.0 - p) * self.eta_nlos_db)
    }

    /// Average path loss in dB between an aerial station and a ground user.
    pub fn path_loss(&self, aerial: Point3, user: Point2) -> Result<f64> {
        if !(aerial.z >= 0.0) {
            return Err(Error::Domain(format!(
                "aerial height must be non-negative, got {}",
                aerial.z
            )));
        }
        let d = aerial.distance(&user.with_height(0.0));
        if !(d > 0.0) {
            return Err(Error::Domain(
                "aerial station and user are coincident".into(),
            ));
        }
        let theta = (aerial.z / d).clamp(0.0, 1.0).asin().to_degrees();
        Ok(free_space_path_loss(d, self.carrier_hz)? + self.excess_loss(theta)?)
    }
}

/// Log-distance terrestrial model `intercept + slope·log10(d_km)`.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct GroundModel {
    pub intercept_db: f64,
    pub slope_db: f64,
    pub antenna_height_m: f64,
}

impl Default for GroundModel {
    fn default() -> Self {
        Self {
            intercept_db: 128.1,
            slope_db: 37.6,
            antenna_height_m: 25.0,
        }
    }
}

impl GroundModel {
    pub fn from_config(c: &ScenarioConfig) -> Self {
        Self {
            intercept_db: c.ground_pl_intercept_db,
            slope_db: c.ground_pl_slope_db,
            antenna_height_m: c.ground_height_m,
        }
    }

    /// Path loss at distance `d` meters.
    pub fn path_loss_at(&self, d: f64) -> Result<f64> {
        if !(d > 0.0) || !d.is_finite() {
            return Err(Error::Domain(format!("distance must be positive, got {d}")));
        }
        Ok(self.intercept_db + self.slope_db * (d / 1000.0).log10())
    }

    /// Path loss between a ground BS site and a user, using the slant range
    /// from the antenna.
    pub fn path_loss(&self, bs: Point2, user: Point2) -> Result<f64> {
        let d = bs
            .with_height(self.antenna_height_m)
            .distance(&user.with_height(0.0));
        self.path_loss_at(d)
    }
}

/// Default urban-macro terrestrial path loss at distance `d` meters.
pub fn ground_path_loss(d: f64) -> Result<f64> {
    GroundModel::default().path_loss_at(d)
}

/// Identifies a user-serving base station. Ground stations order before the
/// aerial station, which acts as the highest id for tie-breaking.
#[derive(Debug, Clone, Copy, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub enum ServerId {
    Ground(usize),
    Aerial,
}

impl std::fmt::Display for ServerId {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        match self {
            ServerId::Ground(id) => write!(f, "g{id}"),
            ServerId::Aerial => write!(f, "aerial"),
        }
    }
}

#[derive(Debug, Clone, Copy, PartialEq)]
pub enum Site {
    Ground(Point2),
    Aerial(Point3),
}

/// A station that serves users and interferes with everyone else.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct Server {
    pub id: ServerId,
    pub site: Site,
}

/// Everything needed to turn geometry into link quality.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct LinkBudget {
    pub a2g: A2gParams,
    pub ground: GroundModel,
    pub tx_psd_dbm_hz: f64,
    /// Thermal noise density including the receiver noise figure.
    pub noise_dbm_hz: f64,
    pub bandwidth_hz: f64,
}

impl LinkBudget {
    pub fn from_config(c: &ScenarioConfig) -> Self {
        Self {
            a2g: A2gParams::from_config(c),
            ground: GroundModel::from_config(c),
            tx_psd_dbm_hz: c.tx_psd_dbm_hz(),
            noise_dbm_hz: c.noise_psd_dbm_hz + c.noise_figure_db,
            bandwidth_hz: c.bandwidth_hz,
        }
    }

    pub fn path_loss(&self, site: &Site, user: Point2) -> Result<f64> {
        match site {
            Site::Ground(p) => self.ground.path_loss(*p, user),
            Site::Aerial(p) => self.a2g.path_loss(*p, user),
        }
    }

    /// Noise power over `b` Hz, dBm.
    pub fn noise_dbm(&self, b: f64) -> f64 {
        self.noise_dbm_hz + hz_to_db(b)
    }

    /// SINR over a `b`-Hz share given the serving path loss and the path
    /// losses of every interfering station.
    pub fn sinr(&self, serving_pl_db: f64, interferer_pl_db: &[f64], b: f64) -> f64 {
        let per_b = self.tx_psd_dbm_hz + hz_to_db(b);
        let signal = dbm_to_mw(per_b - serving_pl_db);
        let interference: f64 = interferer_pl_db
            .iter()
            .map(|pl| dbm_to_mw(per_b - pl))
            .sum();
        signal / (dbm_to_mw(self.noise_dbm(b)) + interference)
    }
}

/// Stations that serve users for a given aerial placement (`None` in
/// traditional mode). The backhaul anchor is excluded: it neither serves nor
/// interferes.
pub fn serving_stations(scenario: &Scenario, aerial: Option<Point3>) -> Result<Vec<Server>> {
    let mut out: Vec<Server> = scenario
        .serving_ground()
        .map(|b| Server {
            id: ServerId::Ground(b.id),
            site: Site::Ground(b.position),
        })
        .collect();
    match (scenario.has_aerial(), aerial) {
        (true, Some(p)) => out.push(Server {
            id: ServerId::Aerial,
            site: Site::Aerial(p),
        }),
        (true, None) => {
            return Err(Error::State(
                "aerial-mode scenario evaluated without an aerial position".into(),
            ))
        }
        (false, Some(_)) => {
            return Err(Error::State(
                "traditional-mode scenario has no aerial station".into(),
            ))
        }
        (false, None) => {}
    }
    Ok(out)
}

/// Path losses from every serving station to every user, plus the per-Hz
/// received powers derived from them.
#[derive(Debug, Clone)]
pub struct RadioMap {
    pub servers: Vec<Server>,
    /// Row-major `[user][server]` path loss, dB.
    pub path_loss_db: Vec<f64>,
    /// Row-major `[user][server]` received power density, mW/Hz.
    pub rx_mw_hz: Vec<f64>,
    pub noise_mw_hz: f64,
    pub users: usize,
}

impl RadioMap {
    pub fn build(
        scenario: &Scenario,
        budget: &LinkBudget,
        users: &[Point2],
        aerial: Option<Point3>,
    ) -> Result<Self> {
        let servers = serving_stations(scenario, aerial)?;
        let k = servers.len();
        let mut path_loss_db = Vec::with_capacity(users.len() * k);
        let mut rx_mw_hz = Vec::with_capacity(users.len() * k);
        for u in users {
            for s in &servers {
                let pl = budget.path_loss(&s.site, *u)?;
                path_loss_db.push(pl);
                rx_mw_hz.push(dbm_to_mw(budget.tx_psd_dbm_hz - pl));
            }
        }
        Ok(Self {
            servers,
            path_loss_db,
            rx_mw_hz,
            noise_mw_hz: db_to_linear(budget.noise_dbm_hz),
            users: users.len(),
        })
    }

    /// Map over the serving ground stations only, ignoring any aerial station.
    pub fn build_ground(
        scenario: &Scenario,
        budget: &LinkBudget,
        users: &[Point2],
    ) -> Result<Self> {
        let mut ground_only = scenario.clone();
        ground_only.mode = crate::scenario::Mode::Traditional;
        ground_only.ground.retain(|b| !b.is_backhaul_anchor);
        Self::build(&ground_only, budget, users, None)
    }

    /// Copy of `self` with an aerial station appended as the last column.
    pub fn with_aerial(
        &self,
        budget: &LinkBudget,
        users: &[Point2],
        aerial: Point3,
    ) -> Result<Self> {
        if users.len() != self.users {
            return Err(Error::State(format!(
                "radio map has {} users, got {}",
                self.users,
                users.len()
            )));
        }
        let k = self.servers.len();
        let mut servers = self.servers.clone();
        servers.push(Server {
            id: ServerId::Aerial,
            site: Site::Aerial(aerial),
        });
        let mut path_loss_db = Vec::with_capacity(self.users * (k + 1));
        let mut rx_mw_hz = Vec::with_capacity(self.users * (k + 1));
        for (u, p) in users.iter().enumerate() {
            path_loss_db.extend_from_slice(self.path_loss_row(u));
            rx_mw_hz.extend_from_slice(self.rx_row(u));
            let pl = budget.a2g.path_loss(aerial, *p)?;
            path_loss_db.push(pl);
            rx_mw_hz.push(dbm_to_mw(budget.tx_psd_dbm_hz - pl));
        }
        Ok(Self {
            servers,
            path_loss_db,
            rx_mw_hz,
            noise_mw_hz: self.noise_mw_hz,
            users: self.users,
        })
    }

    pub fn server_count(&self) -> usize {
        self.servers.len()
    }

    pub fn rx_row(&self, user: usize) -> &[f64] {
        let k = self.servers.len();
        &self.rx_mw_hz[user * k..(user + 1) * k]
    }

    pub fn path_loss_row(&self, user: usize) -> &[f64] {
        let k = self.servers.len();
        &self.path_loss_db[user * k..(user + 1) * k]
    }

    /// SINR of `user` if served by the station at column `server`.
    pub fn sinr(&self, user: usize, server: usize) -> f64 {
        let row = self.rx_row(user);
        let interference: f64 = row
            .iter()
            .enumerate()
            .filter(|(k, _)| *k != server)
            .map(|(_, p)| p)
            .sum();
        row[server] / (self.noise_mw_hz + interference)
    }

    pub fn column_of(&self, id: ServerId) -> Option<usize> {
        self.servers.iter().position(|s| s.id == id)
    }
}

/// Per-user outcome of a placement.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct LinkReport {
    pub user_id: usize,
    pub serving: ServerId,
    pub path_loss_db: f64,
    pub rx_power_dbm: f64,
    /// Linear SINR.
    pub sinr: f64,
    pub rate_bps: f64,
    pub bandwidth_hz: f64,
}

impl LinkReport {
    pub fn sinr_db(&self) -> f64 {
        crate::units::linear_to_db(self.sinr)
    }
}

/// Shannon rate over `b` Hz.
#[inline]
pub fn rate(b: f64, sinr: f64) -> f64 {
    b * (1.0 + sinr).log2()
}

/// Link reports for every user under a given association.
///
/// Each station splits the band equally among its users. Received signal,
/// interference and noise are all evaluated over the user's share.
pub fn links_from_map(
    map: &RadioMap,
    budget: &LinkBudget,
    association: &crate::association::AssociationMatrix,
) -> Result<Vec<LinkReport>> {
    if association.len() != map.users {
        return Err(Error::State(format!(
            "association covers {} users, radio map has {}",
            association.len(),
            map.users
        )));
    }
    let k = map.server_count();
    let mut load = vec![0usize; k];
    let mut columns = Vec::with_capacity(map.users);
    for (user, id) in association.iter().enumerate() {
        let col = map.column_of(id).ok_or_else(|| {
            Error::State(format!(
                "user {user} is associated to non-serving station {id}"
            ))
        })?;
        load[col] += 1;
        columns.push(col);
    }

    let mut out = Vec::with_capacity(map.users);
    let mut interferers = Vec::with_capacity(k.saturating_sub(1));
    for (user, &col) in columns.iter().enumerate() {
        let b = budget.bandwidth_hz / load[col] as f64;
        let pl_row = map.path_loss_row(user);
        interferers.clear();
        interferers.extend(
            pl_row
                .iter()
                .enumerate()
                .filter(|(c, _)| *c != col)
                .map(|(_, pl)| *pl),
        );
        let sinr = budget.sinr(pl_row[col], &interferers, b);
        out.push(LinkReport {
            user_id: user,
            serving: map.servers[col].id,
            path_loss_db: pl_row[col],
            rx_power_dbm: budget.tx_psd_dbm_hz + hz_to_db(b) - pl_row[col],
            sinr,
            rate_bps: rate(b, sinr),
            bandwidth_hz: b,
        });
    }
    Ok(out)
}

/// Link reports for `users` at their current positions.
pub fn compute_links(
    scenario: &Scenario,
    users: &[Point2],
    aerial: Option<Point3>,
    association: &crate::association::AssociationMatrix,
) -> Result<Vec<LinkReport>> {
    let budget = LinkBudget::from_config(&scenario.config);
    let map = RadioMap::build(scenario, &budget, users, aerial)?;
    links_from_map(&map, &budget, association)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::association::AssociationMatrix;
    use crate::config::ScenarioConfig;
    use crate::scenario::{GroundBs, Mode};
    use proptest::prelude::*;

    /// Independent arrangement of the free-space formula.
    fn fspl_oracle(d: f64, f: f64) -> f64 {
        20.0 * (4.0 * PI * d * f / SPEED_OF_LIGHT).log10()
    }

    #[test]
    fn fspl_spot_values() {
        let v = free_space_path_loss(1000.0, 2e9).unwrap();
        assert!((v - 98.47).abs() <= 0.01, "{v}");
        let d0 = SPEED_OF_LIGHT / (4.0 * PI * 2e9);
        assert!(free_space_path_loss(d0, 2e9).unwrap().abs() < 1e-9);
        assert!(free_space_path_loss(0.0, 2e9).is_err());
        assert!(free_space_path_loss(-1.0, 2e9).is_err());
    }

    proptest! {
        #[test]
        fn fspl_doubling_adds_six_db(d in 1.0f64..1e5, f in 1e8f64..1e11) {
            let a = free_space_path_loss(d, f).unwrap();
            let b = free_space_path_loss(2.0 * d, f).unwrap();
            prop_assert!((b - a - 20.0 * 2f64.log10()).abs() < 1e-9);
            prop_assert!((a - fspl_oracle(d, f)).abs() < 1e-9);
        }

        #[test]
        fn los_probability_is_increasing(t1 in 0.0f64..90.0, dt in 1e-3f64..10.0) {
            let t2 = (t1 + dt).min(90.0);
            prop_assume!(t2 > t1);
            let p1 = los_probability(t1, 9.61, 0.16).unwrap();
            let p2 = los_probability(t2, 9.61, 0.16).unwrap();
            prop_assert!(p1 < p2);
            prop_assert!(p1 > 0.0 && p2 < 1.0);
        }

        #[test]
        fn raising_the_aerial_never_adds_excess_loss(r in 0.0f64..2000.0, h in 25.0f64..500.0, dh in 0.1f64..100.0) {
            let p = A2gParams::urban(2e9, 1.0, 20.0);
            let theta = |h: f64| (h / (h * h + r * r).sqrt()).asin().to_degrees();
            let lo = p.excess_loss(theta(h)).unwrap();
            let hi = p.excess_loss(theta(h + dh)).unwrap();
            prop_assert!(hi <= lo + 1e-12);
        }

        #[test]
        fn rate_is_monotone(b in 1.0f64..1e7, g in 0.0f64..1e6, k in 1.0001f64..10.0) {
            prop_assert!(rate(b, g * k + 1e-9) > rate(b, g));
            prop_assert!(rate(b * k, g + 1e-9) > rate(b, g + 1e-9));
        }
    }

    #[test]
    fn los_probability_spot_values() {
        let p = los_probability(9.61, 9.61, 0.16).unwrap();
        assert!((p - 1.0 / 10.61).abs() < 1e-12);
        assert!((p - 0.0943).abs() < 1e-4);
        assert!(los_probability(90.0, 9.61, 0.16).unwrap() >= 0.9999);
        assert!(los_probability(-0.1, 9.61, 0.16).is_err());
        assert!(los_probability(90.1, 9.61, 0.16).is_err());
    }

    #[test]
    fn a2g_excess_at_even_odds() {
        // With Pr(LoS) = 0.5 the excess term is the midpoint of 1 dB and 20 dB.
        let p = A2gParams::urban(2e9, 1.0, 20.0);
        let theta = p.a + p.a.ln() / p.b; // a·exp(−b(θ−a)) = 1
        assert!((p.los_probability(theta).unwrap() - 0.5).abs() < 1e-12);
        assert!((p.excess_loss(theta).unwrap() - 10.5).abs() < 1e-12);
    }

    #[test]
    fn a2g_user_directly_below() {
        let p = A2gParams::urban(2e9, 1.0, 20.0);
        let pl = p
            .path_loss(Point3::new(0.0, 0.0, 1000.0), Point2::new(0.0, 0.0))
            .unwrap();
        let pr = los_probability(90.0, 9.61, 0.16).unwrap();
        let expected = free_space_path_loss(1000.0, 2e9).unwrap() + pr * 1.0 + (1.0 - pr) * 20.0;
        assert!((pl - expected).abs() < 1e-12);
        assert!((pl - (98.47 + 1.0)).abs() < 0.02, "{pl}");
        assert!(p
            .path_loss(Point3::new(1.0, 2.0, 0.0), Point2::new(1.0, 2.0))
            .is_err());
    }

    #[test]
    fn ground_model_spot_values() {
        assert!((ground_path_loss(1000.0).unwrap() - 128.1).abs() < 1e-12);
        assert!((ground_path_loss(100.0).unwrap() - 90.5).abs() < 1e-12);
        let d = ground_path_loss(5000.0).unwrap() - ground_path_loss(500.0).unwrap();
        assert!((d - 37.6).abs() < 1e-12);
        assert!(ground_path_loss(0.0).is_err());
        let flat = GroundModel {
            antenna_height_m: 0.0,
            ..GroundModel::default()
        };
        assert!(flat
            .path_loss(Point2::new(3.0, 4.0), Point2::new(3.0, 4.0))
            .is_err());
    }

    #[test]
    fn shannon_arithmetic() {
        assert!((rate(1.0, 1.0) - 1.0).abs() < 1e-15);
        assert!((rate(20e6 / 200.0, 3.0) - 200e3).abs() < 1e-9);
    }

    fn two_station_scenario(a: Point2, b: Point2) -> Scenario {
        let config = ScenarioConfig::desk();
        Scenario {
            ground: vec![
                GroundBs {
                    id: 0,
                    position: a,
                    tx_power_dbm: config.p_max_dbm,
                    is_backhaul_anchor: false,
                },
                GroundBs {
                    id: 1,
                    position: b,
                    tx_power_dbm: config.p_max_dbm,
                    is_backhaul_anchor: false,
                },
            ],
            config,
            attractors: vec![],
            initial_users: vec![],
            mode: Mode::Traditional,
        }
    }

    #[test]
    fn single_station_is_noise_limited() {
        let mut s = two_station_scenario(Point2::new(0.0, 0.0), Point2::new(400.0, 0.0));
        s.ground.truncate(1);
        let users = [Point2::new(100.0, 0.0)];
        let assoc = AssociationMatrix::from_servers(vec![ServerId::Ground(0)]);
        let links = compute_links(&s, &users, None, &assoc).unwrap();
        let budget = LinkBudget::from_config(&s.config);
        let pl = budget
            .ground
            .path_loss(Point2::new(0.0, 0.0), users[0])
            .unwrap();
        let snr = dbm_to_mw(s.config.p_max_dbm - pl) / dbm_to_mw(budget.noise_dbm(20e6));
        assert!((links[0].sinr / snr - 1.0).abs() < 1e-9);
        assert_eq!(links[0].bandwidth_hz, 20e6);
    }

    #[test]
    fn equidistant_stations_give_sub_unity_sinr() {
        let s = two_station_scenario(Point2::new(-200.0, 0.0), Point2::new(200.0, 0.0));
        let users = [Point2::new(0.0, 0.0)];
        let assoc = AssociationMatrix::from_servers(vec![ServerId::Ground(0)]);
        let links = compute_links(&s, &users, None, &assoc).unwrap();
        assert!(links[0].sinr < 1.0);
        assert!(
            links[0].sinr > 0.99,
            "noise should be negligible: {}",
            links[0].sinr
        );
    }

    #[test]
    fn sinr_ignores_bandwidth_share() {
        let budget = LinkBudget::from_config(&ScenarioConfig::default());
        for b in [1.0, 1e3, 12_345.0, 1e5] {
            let g1 = budget.sinr(100.0, &[110.0, 118.5], b);
            let g2 = budget.sinr(100.0, &[110.0, 118.5], 2.0 * b);
            assert!((g1 / g2 - 1.0).abs() < 1e-12);
        }
    }

    #[test]
    fn anchor_neither_serves_nor_interferes() {
        let mut s = two_station_scenario(Point2::new(-200.0, 0.0), Point2::new(10.0, 0.0));
        s.mode = Mode::Aerial;
        s.ground[1].is_backhaul_anchor = true;
        let servers = serving_stations(&s, Some(Point3::new(0.0, 0.0, 100.0))).unwrap();
        assert_eq!(
            servers.iter().map(|s| s.id).collect::<Vec<_>>(),
            vec![ServerId::Ground(0), ServerId::Aerial]
        );
        assert!(serving_stations(&s, None).is_err());
        let assoc = AssociationMatrix::from_servers(vec![ServerId::Ground(1)]);
        let err = compute_links(
            &s,
            &[Point2::new(0.0, 0.0)],
            Some(Point3::new(0.0, 0.0, 100.0)),
            &assoc,
        );
        assert!(matches!(err, Err(Error::State(_))));
    }

    #[test]
    fn path_losses_positive_beyond_a_meter() {
        let s = crate::scenario::generate_scenario(
            &ScenarioConfig::desk(),
            &crate::rng::Streams::new(4),
        )
        .unwrap();
        let budget = LinkBudget::from_config(&s.config);
        let map = RadioMap::build(
            &s,
            &budget,
            &s.initial_users,
            Some(Point3::new(0.0, 0.0, 25.0)),
        )
        .unwrap();
        assert!(map
            .path_loss_db
            .iter()
            .all(|pl| pl.is_finite() && *pl > 0.0));
    }
}
