//! Zero-one Bayes classifiers across prior ratios `p(t1)/p(t2)`.

use rayon::prelude::*;
use serde::Serialize;

use crate::distributions::{ClassPrior, GaussianClassModel};
use crate::error::{Error, Result};

use super::costs::RejectThresholds;
use super::gaussian::gaussian_regions;
use super::outcome::{evaluate, OutcomeReport};

/// One row of an imbalance sweep.
#[derive(Debug, Clone, PartialEq, Serialize)]
pub struct SweepRow {
    pub ratio: f64,
    pub e1: f64,
    pub e2: f64,
    /// `E2 / p(t2)`.
    pub fnr: f64,
    pub xb: Option<f64>,
    pub ni: f64,
    pub h_t_given_y: f64,
}

impl SweepRow {
    pub(crate) fn from_report(ratio: f64, report: &OutcomeReport) -> Self {
        Self {
            ratio,
            e1: report.e1,
            e2: report.e2,
            fnr: report.fnr(),
            xb: report.boundary_points().first().copied(),
            ni: report.ni.expect("valid priors"),
            h_t_given_y: report.h_t_given_y.expect("valid priors"),
        }
    }

    /// The row at ratio `1/r` on a model mirrored about `(μ1+μ2)/2`:
    /// class roles swap, so `E1 ↔ E2` and the boundary reflects.
    pub(crate) fn mirrored(&self, ratio: f64, base: &GaussianClassModel) -> Self {
        let p1 = ratio / (1.0 + ratio);
        Self {
            ratio,
            e1: self.e2,
            e2: self.e1,
            fnr: self.e1 / (1.0 - p1),
            xb: self.xb.map(|x| base.mu1 + base.mu2 - x),
            ni: self.ni,
            h_t_given_y: self.h_t_given_y,
        }
    }
}

pub(crate) fn check_sweep_input(base: &GaussianClassModel, ratios: &[f64]) -> Result<()> {
    if !base.equal_sigmas() {
        return Err(Error::InvalidModel(
            "imbalance sweeps need equal class variances".into(),
        ));
    }
    if let Some(r) = ratios.iter().find(|r| !(**r > 0.0 && r.is_finite())) {
        return Err(Error::InconsistentInput(format!(
            "ratio must be positive, got {r}"
        )));
    }
    Ok(())
}

/// Zero-one Bayes outcome for one prior ratio `p(t1)/p(t2) >= 1`.
pub fn bayes_at_ratio(base: &GaussianClassModel, ratio: f64) -> Result<OutcomeReport> {
    let model = base.with_prior(ClassPrior::from_ratio(ratio)?);
    let tr = RejectThresholds::no_reject();
    let (d1, d2) = tr.cut_points();
    let mut report = evaluate(&model.into(), &gaussian_regions(&model, d1, d2), None);
    report.thresholds = Some(tr);
    Ok(report)
}

/// Miss rate, boundary and information measures of the zero-one Bayes
/// classifier at each ratio. Rows keep the input order. Ratios below 1
/// come from the reciprocal ratio with the class roles swapped.
pub fn imbalance_sweep(base: &GaussianClassModel, ratios: &[f64]) -> Result<Vec<SweepRow>> {
    check_sweep_input(base, ratios)?;
    ratios
        .par_iter()
        .map(|&r| {
            if r >= 1.0 {
                Ok(SweepRow::from_report(r, &bayes_at_ratio(base, r)?))
            } else {
                let direct = SweepRow::from_report(1.0 / r, &bayes_at_ratio(base, 1.0 / r)?);
                Ok(direct.mirrored(r, base))
            }
        })
        .collect()
}
