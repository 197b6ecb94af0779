//! Cost-matrix validation, parameter redundancy and degenerate risk targets.
//!
//! With a reject option the six cost terms reduce to two thresholds, so
//! many matrices induce one classifier. This module checks matrices,
//! enumerates such equivalence classes, and evaluates two risk-style
//! objectives whose minimizers collapse to "reject everything".

use serde::Serialize;

use crate::bayes_rule::{
    costs_from_thresholds, evaluate, regions_for_thresholds, unit_reject_costs, ConstraintCheck,
    ConstraintGroup, CostMatrix, RejectThresholds,
};
use crate::distributions::{ClassModel, GaussianClassModel};
use crate::error::{Error, Result};

/// Every checked inequality with its outcome.
#[derive(Debug, Clone, PartialEq, Serialize)]
pub struct CostVerdict {
    pub checks: Vec<ConstraintCheck>,
}

impl CostVerdict {
    pub fn passed(&self) -> bool {
        self.checks.iter().all(|c| c.passed)
    }

    /// Name of the first failed inequality.
    pub fn first_violation(&self) -> Option<&'static str> {
        self.checks.iter().find(|c| !c.passed).map(|c| c.name)
    }
}

/// Checks `costs` for the chosen mode: the ordering and ratio-chain
/// inequalities with rejection, the 2x2 requirements without.
pub fn validate_costs(costs: &CostMatrix, reject_option: bool) -> CostVerdict {
    CostVerdict {
        checks: costs.checks(reject_option),
    }
}

/// [`validate_costs`] plus, when asked, the equal-reject-cost bound
/// `λ13 = λ23 < λ12 λ21 / (λ12 + λ21)`.
pub fn validate_costs_with(
    costs: &CostMatrix,
    reject_option: bool,
    pietraszek: bool,
) -> CostVerdict {
    let mut verdict = validate_costs(costs, reject_option);
    if pietraszek {
        let (l12, l21) = (costs.l12(), costs.l21());
        verdict.checks.push(ConstraintCheck {
            group: ConstraintGroup::Pietraszek,
            name: "λ13 = λ23",
            passed: costs.l13() == costs.l23(),
        });
        verdict.checks.push(ConstraintCheck {
            group: ConstraintGroup::Pietraszek,
            name: "λ13 < λ12 λ21 / (λ12 + λ21)",
            passed: costs.l13() < l12 * l21 / (l12 + l21),
        });
    }
    verdict
}

/// Upper bound on the number of independent cost parameters: two with a
/// reject option, one (the error-cost ratio) without.
pub fn independent_parameter_count(reject_option: bool) -> usize {
    if reject_option {
        2
    } else {
        1
    }
}

#[derive(Debug, Clone, PartialEq, Serialize)]
pub struct RedundancyReport {
    pub n_ip_bound: usize,
    pub thresholds: RejectThresholds,
    /// `(λ12 - λ11)/(λ21 - λ22)` of the first member.
    pub canonical_no_reject_ratio: f64,
    pub equivalent_sets: Vec<CostMatrix>,
}

/// `count` distinct cost matrices that all induce `tr`.
///
/// Order: the `λ12 = 1` matrix with the given `λ21`; the unit-reject matrix
/// (`λ13 = λ23 = 1`); then members with `λ21` spaced geometrically inside
/// the feasible band `(δ2, δ1)` and `λ12` scaled by successive powers of 2.
pub fn equivalence_class(
    tr: &RejectThresholds,
    lambda21: f64,
    count: usize,
) -> Result<RedundancyReport> {
    let first = costs_from_thresholds(tr, lambda21)?;
    if let Some(bad) = first.checks(true).into_iter().find(|c| !c.passed) {
        return Err(Error::violation(format!(
            "λ21 = {lambda21} outside ({}, {}): {}",
            tr.delta2(),
            tr.delta1(),
            bad.name
        )));
    }
    let mut sets = vec![first];
    let unit_reject = unit_reject_costs(tr)?;
    if sets.len() < count && unit_reject != first {
        sets.push(unit_reject);
    }
    let (lo, hi) = (tr.delta2().ln(), tr.delta1().ln());
    let extra = count.saturating_sub(sets.len());
    for k in 1..=extra {
        let t = k as f64 / (extra + 1) as f64;
        let l21 = (lo + t * (hi - lo)).exp();
        let scale = f64::powi(2.0, k as i32);
        sets.push(costs_from_thresholds(tr, l21)?.scaled(scale)?);
    }
    sets.truncate(count);
    Ok(RedundancyReport {
        n_ip_bound: independent_parameter_count(true),
        thresholds: *tr,
        canonical_no_reject_ratio: (first.l12() - first.l11()) / (first.l21() - first.l22()),
        equivalent_sets: sets,
    })
}

#[derive(Debug, Clone, Copy, PartialEq, Serialize)]
pub struct DegenerateTargetRow {
    pub tr: f64,
    pub e: f64,
    pub rej: f64,
    /// `E + Tr · Rej`.
    pub chow_risk: f64,
    /// `E / Rej`; infinite when nothing is rejected.
    pub ha_ratio: f64,
}

/// Both objectives over symmetric thresholds `tr1 = tr2 = tr`, `0 < tr <= 0.5`.
pub fn degenerate_risk_targets(
    model: &GaussianClassModel,
    tr_grid: &[f64],
) -> Result<Vec<DegenerateTargetRow>> {
    let cm = ClassModel::Gaussian(*model);
    tr_grid
        .iter()
        .map(|&t| {
            if !(t > 0.0 && t <= 0.5) {
                return Err(Error::violation(format!(
                    "symmetric threshold in (0, 0.5], got {t}"
                )));
            }
            let tr = RejectThresholds::new(t, t)?;
            let r = evaluate(&cm, &regions_for_thresholds(&cm, &tr), None);
            Ok(DegenerateTargetRow {
                tr: t,
                e: r.e,
                rej: r.rej,
                chow_risk: r.e + t * r.rej,
                ha_ratio: if r.rej > 0.0 {
                    r.e / r.rej
                } else {
                    f64::INFINITY
                },
            })
        })
        .collect()
}
