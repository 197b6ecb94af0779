//! Cost matrices, rejection thresholds and the algebra between them.

use serde::{Deserialize, Serialize};

use crate::distributions::ClassId;
use crate::error::{Error, Result};

use super::regions::Decision;

/// Slack on `tr1 + tr2 <= 1` for thresholds produced by floating-point algebra.
const THRESHOLD_SUM_SLACK: f64 = 1e-12;

/// The 2x3 cost matrix `λij`: true class `i`, decision `j` (column 3 = reject).
#[derive(Debug, Clone, Copy, PartialEq, Serialize, Deserialize)]
pub struct CostMatrix {
    lambda: [[f64; 3]; 2],
}

impl CostMatrix {
    pub fn new(lambda: [[f64; 3]; 2]) -> Result<Self> {
        for row in &lambda {
            for &v in row {
                if !(v >= 0.0 && v.is_finite()) {
                    return Err(Error::violation(format!(
                        "cost terms must be finite and nonnegative, got {v}"
                    )));
                }
            }
        }
        Ok(Self { lambda })
    }

    /// Zero-one error costs. The reject column holds 0.5; it is ignored
    /// without rejection.
    pub fn zero_one() -> Self {
        Self {
            lambda: [[0.0, 1.0, 0.5], [1.0, 0.0, 0.5]],
        }
    }

    pub fn lambda(&self) -> [[f64; 3]; 2] {
        self.lambda
    }

    pub fn get(&self, class: ClassId, decision: Decision) -> f64 {
        self.lambda[class.index()][decision.index()]
    }

    pub fn l11(&self) -> f64 {
        self.lambda[0][0]
    }
    pub fn l12(&self) -> f64 {
        self.lambda[0][1]
    }
    pub fn l13(&self) -> f64 {
        self.lambda[0][2]
    }
    pub fn l21(&self) -> f64 {
        self.lambda[1][0]
    }
    pub fn l22(&self) -> f64 {
        self.lambda[1][1]
    }
    pub fn l23(&self) -> f64 {
        self.lambda[1][2]
    }

    pub fn scaled(&self, c: f64) -> Result<Self> {
        let mut lambda = self.lambda;
        lambda.iter_mut().flatten().for_each(|v| *v *= c);
        Self::new(lambda)
    }

    /// `(λ21 - λ22) / (λ12 - λ11)`, the single free parameter without rejection.
    pub fn no_reject_ratio(&self) -> f64 {
        (self.l21() - self.l22()) / (self.l12() - self.l11())
    }

    /// The three likelihood-ratio cut points of the rejection chain:
    /// `(λ23-λ22)/(λ12-λ13)`, `(λ21-λ22)/(λ12-λ11)`, `(λ21-λ23)/(λ13-λ11)`.
    pub fn chain_ratios(&self) -> [f64; 3] {
        [
            (self.l23() - self.l22()) / (self.l12() - self.l13()),
            self.no_reject_ratio(),
            (self.l21() - self.l23()) / (self.l13() - self.l11()),
        ]
    }

    /// Named pass/fail checks on this matrix.
    pub fn checks(&self, reject_option: bool) -> Vec<ConstraintCheck> {
        let (l11, l12, l13) = (self.l11(), self.l12(), self.l13());
        let (l21, l22, l23) = (self.l21(), self.l22(), self.l23());
        if !reject_option {
            return vec![
                ConstraintCheck::new(ConstraintGroup::TwoByTwo, "λ12 > λ11", l12 > l11),
                ConstraintCheck::new(ConstraintGroup::TwoByTwo, "λ11 ≥ 0", l11 >= 0.0),
                ConstraintCheck::new(ConstraintGroup::TwoByTwo, "λ21 > λ22", l21 > l22),
                ConstraintCheck::new(ConstraintGroup::TwoByTwo, "λ22 ≥ 0", l22 >= 0.0),
            ];
        }
        let [ra, rb, rc] = self.chain_ratios();
        let den_ok = l12 - l13 > 0.0 && l12 - l11 > 0.0 && l13 - l11 > 0.0;
        vec![
            ConstraintCheck::new(ConstraintGroup::Chow, "λ12 > λ13", l12 > l13),
            ConstraintCheck::new(ConstraintGroup::Chow, "λ13 > λ11", l13 > l11),
            ConstraintCheck::new(ConstraintGroup::Chow, "λ11 ≥ 0", l11 >= 0.0),
            ConstraintCheck::new(ConstraintGroup::Chow, "λ21 > λ23", l21 > l23),
            ConstraintCheck::new(ConstraintGroup::Chow, "λ23 > λ22", l23 > l22),
            ConstraintCheck::new(ConstraintGroup::Chow, "λ22 ≥ 0", l22 >= 0.0),
            ConstraintCheck::new(ConstraintGroup::Chain, "λ12 - λ13 > 0", l12 - l13 > 0.0),
            ConstraintCheck::new(ConstraintGroup::Chain, "λ12 - λ11 > 0", l12 - l11 > 0.0),
            ConstraintCheck::new(ConstraintGroup::Chain, "λ13 - λ11 > 0", l13 - l11 > 0.0),
            ConstraintCheck::new(
                ConstraintGroup::Chain,
                "0 < (λ23-λ22)/(λ12-λ13)",
                den_ok && ra > 0.0,
            ),
            ConstraintCheck::new(
                ConstraintGroup::Chain,
                "(λ23-λ22)/(λ12-λ13) < (λ21-λ22)/(λ12-λ11)",
                den_ok && ra < rb,
            ),
            ConstraintCheck::new(
                ConstraintGroup::Chain,
                "(λ21-λ22)/(λ12-λ11) < (λ21-λ23)/(λ13-λ11)",
                den_ok && rb < rc,
            ),
        ]
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize)]
pub enum ConstraintGroup {
    /// `λik > λi3 > λii ≥ 0`.
    Chow,
    /// The ordered likelihood-ratio chain required for a reject option.
    Chain,
    /// Requirements on the 2x2 sub-matrix when rejection is off.
    TwoByTwo,
    /// Equal reject costs bounded by `λ12 λ21 / (λ12 + λ21)`; opt-in only.
    Pietraszek,
}

#[derive(Debug, Clone, PartialEq, Serialize)]
pub struct ConstraintCheck {
    pub group: ConstraintGroup,
    pub name: &'static str,
    pub passed: bool,
}

impl ConstraintCheck {
    fn new(group: ConstraintGroup, name: &'static str, passed: bool) -> Self {
        Self {
            group,
            name,
            passed,
        }
    }
}

/// Rejection thresholds `(Tr1, Tr2)`: decide `y1` when `p(t1|x) > 1 - Tr1`,
/// `y2` when `p(t2|x) >= 1 - Tr2`, reject otherwise.
///
/// Without rejection the pair satisfies `tr1 + tr2 = 1`; zero-one costs
/// give `(0.5, 0.5)`.
#[derive(Debug, Clone, Copy, PartialEq, Serialize, Deserialize)]
pub struct RejectThresholds {
    tr1: f64,
    tr2: f64,
}

impl RejectThresholds {
    /// Strict validation: `tr1 > 0`, `tr2 > 0`, `tr1 + tr2 <= 1`.
    pub fn new(tr1: f64, tr2: f64) -> Result<Self> {
        if !(tr1 > 0.0 && tr2 > 0.0) {
            return Err(Error::violation(format!(
                "0 < tr1 and 0 < tr2 (got tr1 = {tr1}, tr2 = {tr2}; zero thresholds need relaxed mode)"
            )));
        }
        Self::relaxed(tr1, tr2)
    }

    /// Relaxed validation admitting zero thresholds ("reject all" and
    /// one-class-and-reject settings): `tr1, tr2 >= 0`, `tr1 + tr2 <= 1`.
    pub fn relaxed(tr1: f64, tr2: f64) -> Result<Self> {
        if !(tr1 >= 0.0 && tr2 >= 0.0 && tr1.is_finite() && tr2.is_finite()) {
            return Err(Error::violation(format!(
                "tr1 ≥ 0 and tr2 ≥ 0 (got tr1 = {tr1}, tr2 = {tr2})"
            )));
        }
        if tr1 + tr2 > 1.0 + THRESHOLD_SUM_SLACK {
            return Err(Error::violation(format!(
                "tr1 + tr2 ≤ 1 (got {tr1} + {tr2} = {})",
                tr1 + tr2
            )));
        }
        Ok(Self { tr1, tr2 })
    }

    pub fn no_reject() -> Self {
        Self { tr1: 0.5, tr2: 0.5 }
    }

    /// No-rejection thresholds for a cost ratio `(λ21-λ22)/(λ12-λ11) = ratio`.
    pub fn from_no_reject_ratio(ratio: f64) -> Result<Self> {
        Self::from_deltas(ratio, ratio)
    }

    /// Thresholds whose likelihood-ratio cut points are `delta1` (for `y1`)
    /// and `delta2` (for `y2`), `delta2 <= delta1`.
    pub fn from_deltas(delta1: f64, delta2: f64) -> Result<Self> {
        if !(delta1 > 0.0 && delta2 > 0.0) || delta2 > delta1 {
            return Err(Error::violation(format!(
                "0 < δ2 ≤ δ1 (got δ1 = {delta1}, δ2 = {delta2})"
            )));
        }
        let tr1 = 1.0 / (1.0 + delta1);
        let tr2 = if delta2.is_infinite() {
            1.0
        } else {
            delta2 / (1.0 + delta2)
        };
        Self::relaxed(tr1, tr2)
    }

    pub fn tr1(&self) -> f64 {
        self.tr1
    }

    pub fn tr2(&self) -> f64 {
        self.tr2
    }

    /// Likelihood-ratio cut for `y1`: `(1 - Tr1) / Tr1` (`+inf` at `Tr1 = 0`).
    pub fn delta1(&self) -> f64 {
        if self.tr1 == 0.0 {
            f64::INFINITY
        } else {
            (1.0 - self.tr1) / self.tr1
        }
    }

    /// Likelihood-ratio cut for `y2`: `Tr2 / (1 - Tr2)` (`+inf` at `Tr2 = 1`).
    pub fn delta2(&self) -> f64 {
        if self.tr2 == 1.0 {
            f64::INFINITY
        } else {
            self.tr2 / (1.0 - self.tr2)
        }
    }

    /// `(δ1, δ2)` as used by region construction; without rejection both are
    /// the same cut so rounding cannot open a sliver of reject region.
    pub fn cut_points(&self) -> (f64, f64) {
        let d1 = self.delta1();
        if self.rejects() {
            (d1, self.delta2().min(d1))
        } else {
            (d1, d1)
        }
    }

    /// True when the rule can emit a reject decision.
    pub fn rejects(&self) -> bool {
        self.tr1 + self.tr2 < 1.0 - THRESHOLD_SUM_SLACK
    }

    /// Decision for a posterior pair under the three-rule form.
    pub fn decide(&self, pt1: f64, pt2: f64) -> Decision {
        if pt1 > 1.0 - self.tr1 {
            Decision::Class1
        } else if pt2 >= 1.0 - self.tr2 {
            Decision::Class2
        } else {
            Decision::Reject
        }
    }
}

/// A decision policy as supplied by a user.
#[derive(Debug, Clone, Copy, PartialEq, Serialize, Deserialize)]
pub enum Policy {
    Costs(CostMatrix),
    Thresholds(RejectThresholds),
}

impl Policy {
    /// Canonical thresholds for the chosen mode.
    pub fn resolve(&self, reject_option: bool) -> Result<RejectThresholds> {
        match (self, reject_option) {
            (Policy::Costs(c), true) => thresholds_from_costs(c),
            (Policy::Costs(c), false) => {
                if let Some(bad) = c.checks(false).into_iter().find(|k| !k.passed) {
                    return Err(Error::violation(bad.name));
                }
                RejectThresholds::from_no_reject_ratio(c.no_reject_ratio())
            }
            (Policy::Thresholds(t), true) => Ok(*t),
            (Policy::Thresholds(t), false) => {
                if (t.tr1 + t.tr2 - 1.0).abs() > THRESHOLD_SUM_SLACK {
                    return Err(Error::violation(format!(
                        "no rejection requires tr1 + tr2 = 1 (got {} + {})",
                        t.tr1, t.tr2
                    )));
                }
                Ok(*t)
            }
        }
    }
}

/// `Tr1 = (λ13-λ11)/(λ13-λ11+λ21-λ23)`, `Tr2 = (λ23-λ22)/(λ12-λ13+λ23-λ22)`.
///
/// Fails with the first broken inequality of the rejection chain.
pub fn thresholds_from_costs(costs: &CostMatrix) -> Result<RejectThresholds> {
    if let Some(bad) = costs
        .checks(true)
        .into_iter()
        .find(|k| k.group == ConstraintGroup::Chain && !k.passed)
    {
        return Err(Error::violation(bad.name));
    }
    let (l11, l12, l13) = (costs.l11(), costs.l12(), costs.l13());
    let (l21, l22, l23) = (costs.l21(), costs.l22(), costs.l23());
    let tr1 = (l13 - l11) / (l13 - l11 + l21 - l23);
    let tr2 = (l23 - l22) / (l12 - l13 + l23 - l22);
    RejectThresholds::new(tr1, tr2)
}

fn check_interior(tr: &RejectThresholds) -> Result<()> {
    let (tr1, tr2) = (tr.tr1(), tr.tr2());
    let reason = if tr1 <= 0.0 || tr2 <= 0.0 {
        Some("thresholds must be positive")
    } else if (tr1 + tr2 - 1.0).abs() <= THRESHOLD_SUM_SLACK || tr1 + tr2 > 1.0 {
        Some("tr1 + tr2 must be strictly below 1")
    } else {
        None
    };
    match reason {
        Some(r) => Err(Error::DegenerateThresholds {
            tr1,
            tr2,
            reason: r.into(),
        }),
        None => Ok(()),
    }
}

/// Cost matrix with `λ11 = λ22 = 0`, `λ12 = 1` and the given `λ21` that
/// reproduces `tr`.
///
/// `λ13 = tr1(tr2 λ21 + tr2 - λ21)/(tr1 + tr2 - 1)` and
/// `λ23 = tr2(tr1 λ21 + tr1 - 1)/(tr1 + tr2 - 1)`. The result satisfies the
/// rejection chain iff `tr2/(1-tr2) < λ21 < (1-tr1)/tr1`.
pub fn costs_from_thresholds(tr: &RejectThresholds, lambda21: f64) -> Result<CostMatrix> {
    check_interior(tr)?;
    if !(lambda21 > 0.0 && lambda21.is_finite()) {
        return Err(Error::violation(format!("λ21 > 0 (got {lambda21})")));
    }
    let (tr1, tr2) = (tr.tr1(), tr.tr2());
    let d = tr1 + tr2 - 1.0;
    let l13 = tr1 * (tr2 * lambda21 + tr2 - lambda21) / d;
    let l23 = tr2 * (tr1 * lambda21 + tr1 - 1.0) / d;
    CostMatrix::new([[0.0, 1.0, l13], [lambda21, 0.0, l23]])
}

/// Two cost matrices with different meanings that induce the same
/// classifier: unit error costs (`λ12 = λ21 = 1`, unequal reject costs) and
/// unit reject costs (`λ13 = λ23 = 1`, unequal error costs).
///
/// The unit-error form exists only for `tr1, tr2 < 0.5`; otherwise it
/// breaks the middle inequality of the chain and this fails.
pub fn demonstrate_redundancy(tr: &RejectThresholds) -> Result<(CostMatrix, CostMatrix)> {
    check_interior(tr)?;
    let unit_error = costs_from_thresholds(tr, 1.0)?;
    if let Some(bad) = unit_error.checks(true).into_iter().find(|k| !k.passed) {
        return Err(Error::violation(format!(
            "unit error costs cannot reproduce (tr1 = {}, tr2 = {}): {}",
            tr.tr1(),
            tr.tr2(),
            bad.name
        )));
    }
    Ok((unit_error, unit_reject_costs(tr)?))
}

/// `λ13 = λ23 = 1`, `λ12 = 1/Tr2`, `λ21 = 1/Tr1`; valid for every interior pair.
pub fn unit_reject_costs(tr: &RejectThresholds) -> Result<CostMatrix> {
    check_interior(tr)?;
    CostMatrix::new([[0.0, 1.0 / tr.tr2(), 1.0], [1.0 / tr.tr1(), 0.0, 1.0]])
}
