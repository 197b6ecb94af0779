//! The four worked examples as ready-made models and policies.

use crate::bayes_rule::{CostMatrix, Policy, RejectThresholds};
use crate::distributions::{ClassModel, ClassPrior, GaussianClassModel, UniformClassModel};

/// Prior ratios `p(t1)/p(t2)` of the imbalance study.
pub const EXAMPLE2_RATIOS: [f64; 7] = [1.0, 2.0, 4.0, 9.0, 99.0, 999.0, 9999.0];

/// A named model with its Bayes policies.
#[derive(Debug, Clone, PartialEq)]
pub struct Preset {
    pub name: &'static str,
    pub model: ClassModel,
    pub no_reject_policy: Policy,
    /// Absent when the example defines no rejection costs.
    pub reject_policy: Option<Policy>,
}

pub const NAMES: [&str; 4] = ["example1", "example2", "example3", "example4"];

/// Example 1 costs with a reject option.
pub fn example1_reject_costs() -> CostMatrix {
    CostMatrix::new([[0.0, 1.2, 0.2], [1.0, 0.0, 0.6]]).expect("valid costs")
}

pub fn example1_model() -> GaussianClassModel {
    gaussian(0.5, -1.0, 2.0, 1.0, 1.0)
}

/// Example 2 at `p(t1)/p(t2) = 1`; sweeps change the prior.
pub fn example2_model() -> GaussianClassModel {
    gaussian(0.5, -1.0, 1.0, 1.0, 1.0)
}

pub fn example2_at_ratio(ratio: f64) -> GaussianClassModel {
    example2_model().with_prior(ClassPrior::from_ratio(ratio).expect("positive ratio"))
}

pub fn example3_model() -> GaussianClassModel {
    gaussian(0.8, 0.0, 2.0, 0.0, 1.0)
}

pub fn example4_model() -> UniformClassModel {
    UniformClassModel::new(
        ClassPrior::new(0.5, 0.5).expect("valid prior"),
        0.0,
        1.0,
        0.5,
        2.5,
    )
    .expect("valid supports")
}

fn gaussian(p1: f64, mu1: f64, s1: f64, mu2: f64, s2: f64) -> GaussianClassModel {
    GaussianClassModel::new(
        ClassPrior::from_p1(p1).expect("valid prior"),
        mu1,
        s1,
        mu2,
        s2,
    )
    .expect("valid model")
}

pub fn preset(name: &str) -> Option<Preset> {
    let zero_one = Policy::Costs(CostMatrix::zero_one());
    let p = match name {
        "example1" => Preset {
            name: "example1",
            model: example1_model().into(),
            no_reject_policy: zero_one,
            reject_policy: Some(Policy::Costs(example1_reject_costs())),
        },
        "example2" => Preset {
            name: "example2",
            model: example2_model().into(),
            no_reject_policy: zero_one,
            reject_policy: None,
        },
        "example3" => Preset {
            name: "example3",
            model: example3_model().into(),
            no_reject_policy: zero_one,
            reject_policy: None,
        },
        "example4" => Preset {
            name: "example4",
            model: example4_model().into(),
            no_reject_policy: zero_one,
            reject_policy: Some(Policy::Thresholds(
                RejectThresholds::new(0.25, 0.25).expect("valid thresholds"),
            )),
        },
        _ => return None,
    };
    Some(p)
}
