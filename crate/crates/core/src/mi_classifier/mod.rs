//! Normalized mutual information and the classifier that maximizes it.

pub mod equivalence;
pub mod joint;
pub mod search;

pub use equivalence::equivalent_thresholds;
pub use joint::{
    entropy_prior, joint_from_confusion, joint_from_regions, ni, AugmentedConfusionMatrix,
    JointDistribution, NiReport,
};
pub use search::{mi_optimize, mi_optimize_with, MISolution, Objective, SearchConfig};

use rayon::prelude::*;

use crate::bayes_rule::sweep::check_sweep_input;
use crate::bayes_rule::SweepRow;
use crate::distributions::{ClassModel, ClassPrior, GaussianClassModel};
use crate::error::Result;

/// No-reject MI classifier at prior ratio `p(t1)/p(t2) = ratio`.
pub fn mi_at_ratio(base: &GaussianClassModel, ratio: f64) -> Result<MISolution> {
    let model = base.with_prior(ClassPrior::from_ratio(ratio)?);
    Ok(mi_optimize(&ClassModel::Gaussian(model), false))
}

/// MI counterpart of [`crate::bayes_rule::imbalance_sweep`], same row
/// layout and the same mirror convention for ratios below 1.
pub fn mi_imbalance_sweep(base: &GaussianClassModel, ratios: &[f64]) -> Result<Vec<SweepRow>> {
    check_sweep_input(base, ratios)?;
    ratios
        .par_iter()
        .map(|&r| {
            let at = r.max(1.0 / r);
            let row = SweepRow::from_report(at, &mi_at_ratio(base, at)?.report);
            Ok(if r >= 1.0 { row } else { row.mirrored(r, base) })
        })
        .collect()
}
