//! The static world: ground base stations, attraction points and initial
//! user positions, all drawn from a seed.

use rand::Rng;

pub use crate::config::{Region, ScenarioConfig};
use crate::error::Result;
use crate::geometry::Point2;
use crate::rng::Streams;

/// A fixed terrestrial base station.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct GroundBs {
    pub id: usize,
    pub position: Point2,
    pub tx_power_dbm: f64,
    /// When set, the station only carries the aerial backhaul and serves no users.
    pub is_backhaul_anchor: bool,
}

/// Whether the network includes the aerial base station.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum Mode {
    /// One ground BS is repurposed as backhaul; an aerial BS serves users.
    Aerial,
    /// Every ground BS serves users; there is no aerial BS.
    Traditional,
}

#[derive(Debug, Clone, PartialEq)]
pub struct Scenario {
    pub config: ScenarioConfig,
    pub ground: Vec<GroundBs>,
    pub attractors: Vec<Point2>,
    pub initial_users: Vec<Point2>,
    pub mode: Mode,
}

/// Draws a point uniformly on the region footprint.
pub fn uniform_point<R: Rng + ?Sized>(region: &Region, rng: &mut R) -> Point2 {
    Point2::new(
        rng.gen_range(region.x_min..=region.x_max),
        rng.gen_range(region.y_min..=region.y_max),
    )
}

/// Builds an aerial-mode scenario. Base stations, attractors and users come
/// from three separate streams derived from `streams`, so the three point
/// sets are independent of each other.
pub fn generate_scenario(config: &ScenarioConfig, streams: &Streams) -> Result<Scenario> {
    config.validate()?;
    let region = &config.region;

    let mut bs_rng = streams.stream("scenario.ground_bs");
    let ground_positions: Vec<Point2> = (0..config.num_ground_bs)
        .map(|_| uniform_point(region, &mut bs_rng))
        .collect();

    let mut attr_rng = streams.stream("scenario.attractors");
    let attractors = (0..config.nu)
        .map(|_| uniform_point(region, &mut attr_rng))
        .collect();

    let mut user_rng = streams.stream("scenario.users");
    let count = user_rng.gen_range(config.users_min..=config.users_max);
    let initial_users = (0..count)
        .map(|_| uniform_point(region, &mut user_rng))
        .collect();

    let anchor = backhaul_anchor(region, &ground_positions);
    let ground = ground_positions
        .into_iter()
        .enumerate()
        .map(|(id, position)| GroundBs {
            id,
            position,
            tx_power_dbm: config.p_max_dbm,
            is_backhaul_anchor: id == anchor,
        })
        .collect();

    Ok(Scenario {
        config: config.clone(),
        ground,
        attractors,
        initial_users,
        mode: Mode::Aerial,
    })
}

/// Index of the ground BS closest to the region centroid (lowest id on ties).
fn backhaul_anchor(region: &Region, positions: &[Point2]) -> usize {
    let (cx, cy) = region.centroid_xy();
    let centre = Point2::new(cx, cy);
    let mut best = 0;
    let mut best_d = f64::INFINITY;
    for (i, p) in positions.iter().enumerate() {
        let d = p.distance(&centre);
        if d < best_d {
            best = i;
            best_d = d;
        }
    }
    best
}

impl Scenario {
    /// Same world with the anchor back in user-serving duty and no aerial BS.
    pub fn to_traditional(&self) -> Scenario {
        let mut out = self.clone();
        out.mode = Mode::Traditional;
        for bs in &mut out.ground {
            bs.is_backhaul_anchor = false;
        }
        out
    }

    /// Ground stations that serve users in the current mode.
    pub fn serving_ground(&self) -> impl Iterator<Item = &GroundBs> {
        self.ground.iter().filter(|b| !b.is_backhaul_anchor)
    }

    pub fn backhaul_anchor(&self) -> Option<&GroundBs> {
        self.ground.iter().find(|b| b.is_backhaul_anchor)
    }

    pub fn has_aerial(&self) -> bool {
        self.mode == Mode::Aerial
    }

    /// Number of user-serving base stations, aerial included.
    pub fn serving_count(&self) -> usize {
        self.serving_ground().count() + usize::from(self.has_aerial())
    }
}
