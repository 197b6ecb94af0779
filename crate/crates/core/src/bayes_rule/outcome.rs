use serde::Serialize;

use crate::distributions::{ClassId, ClassModel};
use crate::mi_classifier::{joint_from_regions, ni, JointDistribution};

use super::costs::{CostMatrix, RejectThresholds};
use super::regions::{Decision, DecisionRegions};

/// Error, reject and correct-recognition rates of a classifier, with its
/// information measures and (when costs are known) Bayesian risk.
#[derive(Debug, Clone, PartialEq, Serialize)]
pub struct OutcomeReport {
    pub e1: f64,
    pub e2: f64,
    pub rej1: f64,
    pub rej2: f64,
    pub cr1: f64,
    pub cr2: f64,
    pub e: f64,
    pub rej: f64,
    pub cr: f64,
    /// `CR / (CR + E)`; absent when everything is rejected.
    pub accuracy: Option<f64>,
    pub risk: Option<f64>,
    /// Absent only for joints whose target entropy is zero.
    pub ni: Option<f64>,
    pub h_t_given_y: Option<f64>,
    pub thresholds: Option<RejectThresholds>,
    pub regions: Option<DecisionRegions>,
    pub joint: JointDistribution,
}

impl OutcomeReport {
    /// Rates read off a joint distribution `p(ti, yj)`.
    pub fn from_joint(joint: JointDistribution, costs: Option<&CostMatrix>) -> Self {
        use ClassId::{One, Two};
        use Decision::{Class1, Class2, Reject};
        let cr1 = joint.get(One, Class1);
        let cr2 = joint.get(Two, Class2);
        let e1 = joint.get(One, Class2);
        let e2 = joint.get(Two, Class1);
        let rej1 = joint.get(One, Reject);
        let rej2 = joint.get(Two, Reject);
        let (e, rej, cr) = (e1 + e2, rej1 + rej2, cr1 + cr2);
        let risk = costs.map(|c| {
            ClassId::BOTH
                .iter()
                .flat_map(|&i| Decision::ALL.iter().map(move |&j| (i, j)))
                .map(|(i, j)| c.get(i, j) * joint.get(i, j))
                .sum()
        });
        let info = ni(&joint).ok();
        Self {
            e1,
            e2,
            rej1,
            rej2,
            cr1,
            cr2,
            e,
            rej,
            cr,
            accuracy: (cr + e > 0.0).then(|| cr / (cr + e)),
            risk,
            ni: info.map(|r| r.ni),
            h_t_given_y: info.map(|r| r.h_t_given_y),
            thresholds: None,
            regions: None,
            joint,
        }
    }

    /// `E2 / p(t2)`, the miss rate of class 2.
    pub fn fnr(&self) -> f64 {
        self.e2 / self.joint.prior(ClassId::Two)
    }

    /// Sorted boundary points of the attached regions (empty if none).
    pub fn boundary_points(&self) -> Vec<f64> {
        self.regions
            .as_ref()
            .map(DecisionRegions::boundary_points)
            .unwrap_or_default()
    }

    /// `CR + E + Rej`, which is 1 for every valid joint.
    pub fn total_mass(&self) -> f64 {
        self.cr1 + self.cr2 + self.e1 + self.e2 + self.rej1 + self.rej2
    }
}

/// Outcome of `regions` on `model`, with risk when `costs` is given.
pub fn evaluate(
    model: &ClassModel,
    regions: &DecisionRegions,
    costs: Option<&CostMatrix>,
) -> OutcomeReport {
    let mut report = OutcomeReport::from_joint(joint_from_regions(model, regions), costs);
    report.regions = Some(regions.clone());
    report
}
