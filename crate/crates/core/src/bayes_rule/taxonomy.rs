//! Region structure predicted from thresholds and posterior extrema alone.
//!
//! For Gaussian models `ln LR(x)` is a parabola (or a line when the
//! variances match), so the class-1 posterior has a single extremum at
//! the stationary point `x* = (μ2 σ1² - μ1 σ2²)/(σ1² - σ2²)`. Comparing the
//! thresholds against that extremum fixes how many reject intervals exist
//! and which class labels appear, without solving for boundary points.
//! Comparisons are strict, so a threshold sitting exactly on an extremum
//! (a measure-zero case) predicts no region of positive length there.

use serde::Serialize;

use crate::distributions::GaussianClassModel;

use super::costs::RejectThresholds;
use super::regions::{Decision, DecisionRegions};

/// Coarse shape of a decision-region set.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize)]
pub struct RegionStructure {
    pub reject_intervals: usize,
    pub has_y1: bool,
    pub has_y2: bool,
}

impl RegionStructure {
    pub fn of(regions: &DecisionRegions) -> Self {
        Self {
            reject_intervals: regions.reject_interval_count(),
            has_y1: regions.contains_label(Decision::Class1),
            has_y2: regions.contains_label(Decision::Class2),
        }
    }
}

/// Named rows of the rejection-settings taxonomy.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize)]
pub enum Scenario {
    NoRejection,
    /// Both classes and reject all appear.
    GeneralRejection,
    /// Only class 1 and reject.
    Class1AndReject,
    /// Only class 2 and reject.
    Class2AndReject,
    /// A single class label everywhere.
    OneClassTakesAll,
    RejectAll,
}

/// Posterior extremum `p(t1|x*)` with its kind, or `None` when the
/// posterior has no interior extremum (equal variances).
#[derive(Debug, Clone, Copy, PartialEq, Serialize)]
pub enum PosteriorExtremum {
    /// `σ1 > σ2`: `p(t1|x)` dips to this minimum and tends to 1 in both tails.
    Min(f64),
    /// `σ1 < σ2`: `p(t1|x)` peaks at this maximum and tends to 0 in both tails.
    Max(f64),
    /// `σ1 = σ2`, `μ1 ≠ μ2`: monotone from 0 to 1.
    Monotone,
    /// Identical class densities: the posterior is the prior everywhere.
    Constant(f64),
}

pub fn posterior_extremum(model: &GaussianClassModel) -> PosteriorExtremum {
    let (v1, v2) = (model.sigma1 * model.sigma1, model.sigma2 * model.sigma2);
    if model.equal_sigmas() {
        return if model.mu1 == model.mu2 {
            PosteriorExtremum::Constant(model.prior.p1())
        } else {
            PosteriorExtremum::Monotone
        };
    }
    let x_star = (model.mu2 * v1 - model.mu1 * v2) / (v1 - v2);
    let p = model.posterior(x_star).pt1_given_x;
    if v1 > v2 {
        PosteriorExtremum::Min(p)
    } else {
        PosteriorExtremum::Max(p)
    }
}

/// Structure that `tr` induces on `model`, derived from the extremum only.
pub fn predict_structure(model: &GaussianClassModel, tr: &RejectThresholds) -> RegionStructure {
    let (tr1, tr2) = (tr.tr1(), tr.tr2());
    let rejects = tr.rejects();
    // y1 needs p1 > 1 - tr1, y2 needs p2 >= 1 - tr2 (positive length: p2 > 1 - tr2).
    let (reject_intervals, has_y1, has_y2) = match posterior_extremum(model) {
        PosteriorExtremum::Constant(p1) => {
            let d = tr.decide(p1, 1.0 - p1);
            (
                usize::from(d == Decision::Reject),
                d == Decision::Class1,
                d == Decision::Class2,
            )
        }
        PosteriorExtremum::Monotone => (usize::from(rejects), tr1 > 0.0, tr2 > 0.0),
        PosteriorExtremum::Min(p1_min) => {
            let p2_max = 1.0 - p1_min;
            let all_y1 = p1_min > 1.0 - tr1;
            let has_y1 = tr1 > 0.0;
            let has_y2 = !all_y1 && p2_max > 1.0 - tr2;
            let n = if all_y1 {
                0
            } else if !has_y2 {
                1
            } else if rejects {
                2
            } else {
                0
            };
            (n, has_y1, has_y2)
        }
        PosteriorExtremum::Max(p1_max) => {
            let p2_min = 1.0 - p1_max;
            let all_y2 = p2_min > 1.0 - tr2;
            let has_y2 = tr2 > 0.0;
            let has_y1 = !all_y2 && p1_max > 1.0 - tr1;
            let n = if all_y2 {
                0
            } else if !has_y1 {
                // reject around the peak, or everywhere when y2 is disabled
                1
            } else if rejects {
                2
            } else {
                0
            };
            (n, has_y1, has_y2)
        }
    };
    RegionStructure {
        reject_intervals,
        has_y1,
        has_y2,
    }
}

/// Taxonomy row for a predicted structure.
pub fn scenario(structure: &RegionStructure) -> Scenario {
    match (
        structure.reject_intervals > 0,
        structure.has_y1,
        structure.has_y2,
    ) {
        (false, true, true) => Scenario::NoRejection,
        (false, _, _) => Scenario::OneClassTakesAll,
        (true, true, true) => Scenario::GeneralRejection,
        (true, true, false) => Scenario::Class1AndReject,
        (true, false, true) => Scenario::Class2AndReject,
        (true, false, false) => Scenario::RejectAll,
    }
}
