//! Decisions for two uniform class densities.
//!
//! The posterior is piecewise constant: certain outside the overlap of the
//! supports and constant inside it. Only the overlap needs a decision.

use crate::distributions::{ClassId, ClassModel, OverlapCase, UniformClassModel};
use crate::error::Result;

use super::costs::{CostMatrix, Policy, RejectThresholds};
use super::gaussian::label_for_log_lr;
use super::outcome::{evaluate, OutcomeReport};
use super::regions::{Decision, DecisionRegions, Segment};

fn log_lr_on_piece(model: &UniformClassModel, x: f64) -> Option<f64> {
    let in1 = model.in_support(ClassId::One, x);
    let in2 = model.in_support(ClassId::Two, x);
    match (in1, in2) {
        (false, false) => None,
        (true, false) => Some(f64::INFINITY),
        (false, true) => Some(f64::NEG_INFINITY),
        (true, true) => {
            let p = model.overlap_posterior();
            Some(p.pt1_given_x.ln() - p.pt2_given_x.ln())
        }
    }
}

/// Regions of the likelihood-ratio rule over the union of the supports.
/// Disjoint supports leave an unlabeled gap.
pub fn uniform_regions(model: &UniformClassModel, delta1: f64, delta2: f64) -> DecisionRegions {
    let mut ends = vec![model.a1, model.b1, model.a2, model.b2];
    ends.sort_by(f64::total_cmp);
    ends.dedup();
    let (ln_d1, ln_d2) = (delta1.ln(), delta2.ln());
    let segments = ends
        .windows(2)
        .filter_map(|w| {
            let l = log_lr_on_piece(model, 0.5 * (w[0] + w[1]))?;
            Some(Segment {
                lo: w[0],
                hi: w[1],
                label: label_for_log_lr(l, ln_d1, ln_d2),
            })
        })
        .collect();
    DecisionRegions::new(segments).expect("pieces are sorted and disjoint")
}

/// Label the rule assigns to the overlap, or `None` for disjoint supports.
pub fn overlap_decision(model: &UniformClassModel, tr: &RejectThresholds) -> Option<Decision> {
    model.overlap().filter(|(lo, hi)| lo < hi).map(|_| {
        let p = model.overlap_posterior();
        tr.decide(p.pt1_given_x, p.pt2_given_x)
    })
}

/// `(E, Rej)` from the closed forms for an overlap labeled `label`,
/// computed from the support endpoints alone.
pub fn closed_form_rates(model: &UniformClassModel, label: Decision) -> (f64, f64) {
    // Canonical order puts class 1's support first; otherwise swap classes.
    let swap = model.a2 < model.a1 || (model.a2 == model.a1 && model.b2 > model.b1);
    let (p1, p2, x1, x2, x3, x4) = if swap {
        (
            model.prior.p2(),
            model.prior.p1(),
            model.a2,
            model.b2,
            model.a1,
            model.b1,
        )
    } else {
        (
            model.prior.p1(),
            model.prior.p2(),
            model.a1,
            model.b1,
            model.a2,
            model.b2,
        )
    };
    let label = match (swap, label) {
        (true, Decision::Class1) => Decision::Class2,
        (true, Decision::Class2) => Decision::Class1,
        (_, l) => l,
    };
    let (to_y1, to_y2) = if x2 < x3 {
        return (0.0, 0.0);
    } else if x4 <= x2 {
        // class 2 lies inside class 1
        (p2, p1 * (x4 - x3) / (x2 - x1))
    } else {
        (p2 * (x2 - x3) / (x4 - x3), p1 * (x2 - x3) / (x2 - x1))
    };
    match label {
        Decision::Class1 => (to_y1, 0.0),
        Decision::Class2 => (to_y2, 0.0),
        Decision::Reject => (0.0, to_y1 + to_y2),
    }
}

/// Bayes decision for a uniform model: regions plus full outcome.
pub fn uniform_bayes_decide(
    model: &UniformClassModel,
    policy: &Policy,
    reject_option: bool,
) -> Result<(DecisionRegions, OutcomeReport)> {
    let tr = policy.resolve(reject_option)?;
    let (d1, d2) = tr.cut_points();
    let regions = uniform_regions(model, d1, d2);
    let costs: Option<CostMatrix> = match policy {
        Policy::Costs(c) => Some(*c),
        Policy::Thresholds(_) => None,
    };
    let mut report = evaluate(&ClassModel::Uniform(*model), &regions, costs.as_ref());
    report.thresholds = Some(tr);
    Ok((regions, report))
}

/// True when the supports share a set of positive length.
pub fn has_overlap(model: &UniformClassModel) -> bool {
    model.overlap_case() != OverlapCase::Separated
        && model.overlap().is_some_and(|(lo, hi)| lo < hi)
}
