//! Joint distributions `p(ti, yj)` and the information measures derived from them.

use std::f64::consts::LN_2;

use serde::{Deserialize, Serialize};

use crate::bayes_rule::{Decision, DecisionRegions};
use crate::distributions::{ClassId, ClassModel, ClassPrior};
use crate::error::{Error, Result};

const SUM_TOL: f64 = 1e-10;
/// Joint entries below this are treated as exactly zero.
const ZERO_MASS: f64 = 1e-300;

/// The 2x3 joint distribution of true class and decision.
#[derive(Debug, Clone, Copy, PartialEq, Serialize, Deserialize)]
pub struct JointDistribution {
    p: [[f64; 3]; 2],
}

impl JointDistribution {
    /// Number of classes.
    pub const M: usize = 2;

    pub fn new(p: [[f64; 3]; 2]) -> Result<Self> {
        if p.iter().flatten().any(|v| !(v.is_finite() && *v >= 0.0)) {
            return Err(Error::InconsistentInput(format!(
                "joint entries must be finite and nonnegative: {p:?}"
            )));
        }
        let total: f64 = p.iter().flatten().sum();
        if (total - 1.0).abs() > SUM_TOL {
            return Err(Error::InconsistentInput(format!(
                "joint must sum to 1, got {total}"
            )));
        }
        Ok(Self { p })
    }

    pub fn entries(&self) -> [[f64; 3]; 2] {
        self.p
    }

    pub fn get(&self, class: ClassId, decision: Decision) -> f64 {
        self.p[class.index()][decision.index()]
    }

    /// Row sum `p(ti)`.
    pub fn prior(&self, class: ClassId) -> f64 {
        self.p[class.index()].iter().sum()
    }

    /// Column sum `p(yj)`.
    pub fn decision_marginal(&self, decision: Decision) -> f64 {
        let j = decision.index();
        self.p[0][j] + self.p[1][j]
    }

    pub fn error(&self) -> f64 {
        self.p[0][1] + self.p[1][0]
    }

    pub fn reject(&self) -> f64 {
        self.p[0][2] + self.p[1][2]
    }
}

/// Confusion counts with a reject column; `c[i][j]` counts true class
/// `i` decided as `j`.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize, Deserialize)]
pub struct AugmentedConfusionMatrix {
    c: [[u64; 3]; 2],
}

impl AugmentedConfusionMatrix {
    /// Requires every class to be represented.
    pub fn new(c: [[u64; 3]; 2]) -> Result<Self> {
        let m = Self { c };
        if m.row_total(ClassId::One) == 0 || m.row_total(ClassId::Two) == 0 {
            return Err(Error::InconsistentInput(
                "each class needs at least one pattern".into(),
            ));
        }
        Ok(m)
    }

    /// Counts as observed, possibly with an empty class row.
    pub(crate) fn from_counts(c: [[u64; 3]; 2]) -> Self {
        Self { c }
    }

    pub fn counts(&self) -> [[u64; 3]; 2] {
        self.c
    }

    pub fn get(&self, class: ClassId, decision: Decision) -> u64 {
        self.c[class.index()][decision.index()]
    }

    pub fn row_total(&self, class: ClassId) -> u64 {
        self.c[class.index()].iter().sum()
    }

    pub fn n(&self) -> u64 {
        self.c.iter().flatten().sum()
    }
}

/// Empirical joint `c[i][j] / n`.
pub fn joint_from_confusion(cm: &AugmentedConfusionMatrix) -> JointDistribution {
    let n = cm.n() as f64;
    let mut p = [[0.0; 3]; 2];
    for (row, counts) in p.iter_mut().zip(cm.c.iter()) {
        for (v, &k) in row.iter_mut().zip(counts) {
            *v = k as f64 / n;
        }
    }
    JointDistribution::new(p).expect("counts normalize to 1")
}

/// Joint of `model` under `regions`: class mass over each label's intervals.
pub fn joint_from_regions(model: &ClassModel, regions: &DecisionRegions) -> JointDistribution {
    let mut p = [[0.0; 3]; 2];
    for class in ClassId::BOTH {
        for d in Decision::ALL {
            p[class.index()][d.index()] = regions.mass(model, class, d);
        }
    }
    JointDistribution::new(p).expect("regions cover the support")
}

fn plogp_bits(p: f64) -> f64 {
    if p < ZERO_MASS {
        0.0
    } else {
        -p * p.log2()
    }
}

/// Shannon entropy in bits of the class prior.
pub fn entropy_prior(prior: &ClassPrior) -> f64 {
    plogp_bits(prior.p1()) + plogp_bits(prior.p2())
}

/// Mutual information and its normalizations, all in bits.
#[derive(Debug, Clone, Copy, PartialEq, Serialize)]
pub struct NiReport {
    pub mutual_information: f64,
    pub h_t: f64,
    pub h_t_given_y: f64,
    /// `I(T, Y) / H(T)`.
    pub ni: f64,
}

/// Normalized mutual information of a joint.
pub fn ni(joint: &JointDistribution) -> Result<NiReport> {
    let rows = [joint.prior(ClassId::One), joint.prior(ClassId::Two)];
    let h_t = plogp_bits(rows[0]) + plogp_bits(rows[1]);
    if h_t <= 0.0 {
        return Err(Error::DegenerateTarget);
    }
    let cols = Decision::ALL.map(|d| joint.decision_marginal(d));
    let mut mi = 0.0;
    for (i, row) in joint.p.iter().enumerate() {
        for (j, &pij) in row.iter().enumerate() {
            if pij >= ZERO_MASS {
                mi += pij * (pij.ln() - rows[i].ln() - cols[j].ln());
            }
        }
    }
    let mutual_information = (mi / LN_2).clamp(0.0, h_t);
    Ok(NiReport {
        mutual_information,
        h_t,
        h_t_given_y: h_t - mutual_information,
        ni: mutual_information / h_t,
    })
}

#[cfg(test)]
mod tests {
    use super::*;
    use approx::assert_abs_diff_eq;

    #[test]
    fn prior_entropy() {
        assert_eq!(entropy_prior(&ClassPrior::new(0.5, 0.5).unwrap()), 1.0);
        assert_abs_diff_eq!(
            entropy_prior(&ClassPrior::new(0.8, 0.2).unwrap()),
            0.7219,
            epsilon = 1e-4
        );
        assert_abs_diff_eq!(
            entropy_prior(&ClassPrior::new(0.99, 0.01).unwrap()),
            0.0808,
            epsilon = 1e-4
        );
    }

    #[test]
    fn ni_examples() {
        let y1 = JointDistribution::new([[0.5, 0.0, 0.0], [0.125, 0.375, 0.0]]).unwrap();
        assert_abs_diff_eq!(ni(&y1).unwrap().ni, 0.549, epsilon = 1e-3);
        let majority = JointDistribution::new([[0.8, 0.0, 0.0], [0.2, 0.0, 0.0]]).unwrap();
        assert_eq!(ni(&majority).unwrap().ni, 0.0);
        let product = JointDistribution::new([[0.12, 0.18, 0.1], [0.18, 0.27, 0.15]]).unwrap();
        assert_abs_diff_eq!(ni(&product).unwrap().ni, 0.0, epsilon = 1e-15);
    }

    #[test]
    fn confusion_joints() {
        let perfect = AugmentedConfusionMatrix::new([[50, 0, 0], [0, 50, 0]]).unwrap();
        assert_eq!(ni(&joint_from_confusion(&perfect)).unwrap().ni, 1.0);
        let coin = AugmentedConfusionMatrix::new([[25, 25, 0], [25, 25, 0]]).unwrap();
        assert_eq!(ni(&joint_from_confusion(&coin)).unwrap().ni, 0.0);
        assert!(AugmentedConfusionMatrix::new([[5, 0, 0], [0, 0, 0]]).is_err());
    }

    #[test]
    fn degenerate_target() {
        let one_class = JointDistribution::new([[0.6, 0.4, 0.0], [0.0, 0.0, 0.0]]).unwrap();
        assert_eq!(ni(&one_class), Err(Error::DegenerateTarget));
    }
}
