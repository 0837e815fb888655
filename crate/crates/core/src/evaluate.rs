//! Objective evaluation for a frozen user snapshot.
//!
//! The ground part of the radio map does not depend on the aerial placement,
//! so it is computed once and each candidate only adds the aerial column.

use std::cmp::Ordering;

use crate::association::{associate_from_map, AssociationMatrix};
use crate::channel::{links_from_map, LinkBudget, LinkReport, RadioMap};
use crate::error::{Error, Result};
use crate::geometry::{Point2, Point3};
use crate::objective::{constraint_report, Feasibility, ObjectiveTerms};
use crate::scenario::Scenario;

/// Full outcome of one placement.
#[derive(Debug, Clone)]
pub struct Evaluation {
    pub association: AssociationMatrix,
    pub links: Vec<LinkReport>,
    pub terms: ObjectiveTerms,
    pub feasibility: Feasibility,
}

/// The part of an evaluation the optimizers rank on.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct Observation {
    pub terms: ObjectiveTerms,
    pub feasible: bool,
}

impl Observation {
    /// Feasible placements first, then higher fairness.
    pub fn rank(&self, other: &Observation) -> Ordering {
        self.feasible
            .cmp(&other.feasible)
            .then_with(|| self.terms.theta.total_cmp(&other.terms.theta))
    }

    pub fn outranks(&self, other: &Observation) -> bool {
        self.rank(other) == Ordering::Greater
    }
}

impl Evaluation {
    pub fn observation(&self) -> Observation {
        Observation {
            terms: self.terms,
            feasible: self.feasibility.feasible(),
        }
    }
}

pub struct Evaluator<'a> {
    scenario: &'a Scenario,
    users: &'a [Point2],
    budget: LinkBudget,
    ground: RadioMap,
}

impl<'a> Evaluator<'a> {
    pub fn new(scenario: &'a Scenario, users: &'a [Point2]) -> Result<Self> {
        let budget = LinkBudget::from_config(&scenario.config);
        let ground = RadioMap::build_ground(scenario, &budget, users)?;
        Ok(Self {
            scenario,
            users,
            budget,
            ground,
        })
    }

    pub fn scenario(&self) -> &Scenario {
        self.scenario
    }

    pub fn users(&self) -> &[Point2] {
        self.users
    }

    fn map_for(&self, aerial: Option<Point3>) -> Result<RadioMap> {
        match (self.scenario.has_aerial(), aerial) {
            (true, Some(p)) => self.ground.with_aerial(&self.budget, self.users, p),
            (false, None) => Ok(self.ground.clone()),
            (true, None) => Err(Error::State(
                "aerial-mode scenario evaluated without an aerial position".into(),
            )),
            (false, Some(_)) => Err(Error::State(
                "traditional-mode scenario has no aerial station".into(),
            )),
        }
    }

    /// Associates users by max SINR and evaluates every link.
    pub fn evaluate(&self, aerial: Option<Point3>) -> Result<Evaluation> {
        let map = self.map_for(aerial)?;
        let association = associate_from_map(&map)?;
        let links = links_from_map(&map, &self.budget, &association)?;
        let config = &self.scenario.config;
        Ok(Evaluation {
            terms: ObjectiveTerms::from_links(&links, config),
            feasibility: constraint_report(&links, config),
            association,
            links,
        })
    }

    pub fn observe(&self, aerial: Option<Point3>) -> Result<Observation> {
        self.evaluate(aerial).map(|e| e.observation())
    }
}
