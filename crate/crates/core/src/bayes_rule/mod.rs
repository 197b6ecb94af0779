//! Bayesian decision rules with and without a reject option.
//!
//! Every policy is reduced to a pair of rejection thresholds and applied in
//! posterior form: `y1` if `p(t1|x) > 1 - Tr1`, `y2` if `p(t2|x) >= 1 - Tr2`,
//! otherwise reject. Internally the same rule is evaluated as likelihood-ratio
//! cuts `δ1 = (1-Tr1)/Tr1` and `δ2 = Tr2/(1-Tr2)`.

pub mod costs;
pub mod gaussian;
pub mod outcome;
pub mod regions;
pub mod sweep;
pub mod taxonomy;
pub mod uniform;

pub use costs::{
    costs_from_thresholds, demonstrate_redundancy, thresholds_from_costs, unit_reject_costs,
    ConstraintCheck, ConstraintGroup, CostMatrix, Policy, RejectThresholds,
};
pub use gaussian::{
    alpha, crossover_points, gaussian_boundaries, gaussian_regions, CrossoverAnalysis,
};
pub use outcome::{evaluate, OutcomeReport};
pub use regions::{Decision, DecisionRegions, Segment};
pub use sweep::{bayes_at_ratio, imbalance_sweep, SweepRow};
pub use taxonomy::{predict_structure, RegionStructure, Scenario};
pub use uniform::{closed_form_rates, uniform_bayes_decide, uniform_regions};

use crate::distributions::ClassModel;
use crate::error::Result;

/// Regions of the likelihood-ratio cuts `(δ1, δ2)` on any model.
pub fn regions_from_cuts(model: &ClassModel, delta1: f64, delta2: f64) -> DecisionRegions {
    match model {
        ClassModel::Gaussian(m) => gaussian_regions(m, delta1, delta2),
        ClassModel::Uniform(m) => uniform_regions(m, delta1, delta2),
    }
}

/// Regions of the posterior-form rule with thresholds `tr`.
pub fn regions_for_thresholds(model: &ClassModel, tr: &RejectThresholds) -> DecisionRegions {
    let (d1, d2) = tr.cut_points();
    regions_from_cuts(model, d1, d2)
}

/// Bayes decision regions for a cost or threshold policy.
pub fn bayes_regions(
    model: &ClassModel,
    policy: &Policy,
    reject_option: bool,
) -> Result<DecisionRegions> {
    let tr = policy.resolve(reject_option)?;
    Ok(regions_for_thresholds(model, &tr))
}

/// Bayes regions plus their outcome; risk is reported for cost policies.
pub fn bayes_outcome(
    model: &ClassModel,
    policy: &Policy,
    reject_option: bool,
) -> Result<OutcomeReport> {
    let tr = policy.resolve(reject_option)?;
    let regions = regions_for_thresholds(model, &tr);
    let costs = match policy {
        Policy::Costs(c) => Some(*c),
        Policy::Thresholds(_) => None,
    };
    let mut report = evaluate(model, &regions, costs.as_ref());
    report.thresholds = Some(tr);
    Ok(report)
}
