//! Error bounds in terms of the conditional entropy `H(T|Y)`.
//!
//! For two classes the general Fano bound degenerates (its denominator is
//! `log2(m-1) = 0`), so the binary form `H(E) >= H(T|Y)` is used as the
//! lower bound, inverted numerically. Upper bounds are Kovalevskij's
//! `H(T|Y)/2` and the tightened `min(p(t1), p(t2), H(T|Y)/2)`.

use serde::Serialize;

use crate::distributions::{ClassId, ClassPrior};
use crate::error::{Error, Result};
use crate::mi_classifier::{ni, JointDistribution};

const CONSISTENCY_TOL: f64 = 1e-10;
const BISECTION_STEPS: usize = 60;

/// `-e log2 e - (1-e) log2 (1-e)`, zero at both ends.
pub fn binary_entropy(e: f64) -> f64 {
    let h = |p: f64| if p <= 0.0 { 0.0 } else { -p * p.log2() };
    h(e) + h(1.0 - e)
}

/// Smallest `E` in `[0, 0.5]` with `H(E) >= h`; `h >= 1` gives 0.5.
pub fn inverse_binary_entropy(h: f64) -> f64 {
    if h <= 0.0 {
        return 0.0;
    }
    if h >= 1.0 {
        return 0.5;
    }
    let (mut lo, mut hi) = (0.0_f64, 0.5_f64);
    for _ in 0..BISECTION_STEPS {
        let mid = 0.5 * (lo + hi);
        if binary_entropy(mid) < h {
            lo = mid;
        } else {
            hi = mid;
        }
    }
    0.5 * (lo + hi)
}

/// General Fano lower bound `(H(T|Y) - H(E)) / log2(m - 1)` solved for the
/// error; undefined for `m = 2`, where the binary form must be used.
pub fn fano_general(h_t_given_y: f64, m: usize) -> Result<f64> {
    if m < 3 {
        return Err(Error::InconsistentInput(format!(
            "general Fano bound needs m >= 3 classes, got {m}"
        )));
    }
    // H(T|Y) <= H(E) + E log2(m-1) <= 1 + E log2(m-1)
    Ok(((h_t_given_y - 1.0) / ((m - 1) as f64).log2()).max(0.0))
}

#[derive(Debug, Clone, Copy, PartialEq, Serialize)]
pub struct BoundFlags {
    /// `E >= modified_lb`.
    pub lb_ok: bool,
    /// `E <= modified_ub`.
    pub ub_ok: bool,
    /// `E <= kovalevskij_ub`.
    pub kovalevskij_ok: bool,
    /// `E <= 0.5`.
    pub half_ok: bool,
}

#[derive(Debug, Clone, Copy, PartialEq, Serialize)]
pub struct BoundReport {
    pub h_t_given_y: f64,
    pub e: f64,
    /// Binary Fano lower bound (same as `modified_lb` for two classes).
    pub fano_lb: f64,
    pub kovalevskij_ub: f64,
    pub modified_lb: f64,
    pub modified_ub: f64,
    pub p_min: f64,
    pub satisfies: BoundFlags,
}

/// Slack for the bound checks; the bounds themselves are exact.
pub const BOUND_SLACK: f64 = 1e-9;

/// Bounds for a classifier with joint `joint` and total error `e`.
pub fn bounds(prior: &ClassPrior, joint: &JointDistribution, e: f64) -> Result<BoundReport> {
    if (joint.error() - e).abs() > CONSISTENCY_TOL {
        return Err(Error::InconsistentInput(format!(
            "error {e} disagrees with the joint ({})",
            joint.error()
        )));
    }
    for class in ClassId::BOTH {
        if (joint.prior(class) - prior.get(class)).abs() > CONSISTENCY_TOL {
            return Err(Error::InconsistentInput(
                "joint rows do not match the priors".into(),
            ));
        }
    }
    let h = ni(joint)?.h_t_given_y;
    Ok(bounds_from_entropy(prior, h, e))
}

/// Bounds from `H(T|Y)` and `E` directly.
pub fn bounds_from_entropy(prior: &ClassPrior, h_t_given_y: f64, e: f64) -> BoundReport {
    let lb = inverse_binary_entropy(h_t_given_y);
    let kovalevskij_ub = h_t_given_y / 2.0;
    let p_min = prior.min();
    let modified_ub = p_min.min(kovalevskij_ub);
    BoundReport {
        h_t_given_y,
        e,
        fano_lb: lb,
        kovalevskij_ub,
        modified_lb: lb,
        modified_ub,
        p_min,
        satisfies: BoundFlags {
            lb_ok: e >= lb - BOUND_SLACK,
            ub_ok: e <= modified_ub + BOUND_SLACK,
            kovalevskij_ok: e <= kovalevskij_ub + BOUND_SLACK,
            half_ok: e <= 0.5 + BOUND_SLACK,
        },
    }
}

/// One point of the bound scatter.
#[derive(Debug, Clone, PartialEq, Serialize)]
pub struct ScatterRow {
    pub label: String,
    pub report: BoundReport,
}

/// Bound reports for labeled `(prior, joint)` pairs, in input order.
pub fn bounds_scatter(
    points: &[(String, ClassPrior, JointDistribution)],
) -> Result<Vec<ScatterRow>> {
    points
        .iter()
        .map(|(label, prior, joint)| {
            Ok(ScatterRow {
                label: label.clone(),
                report: bounds(prior, joint, joint.error())?,
            })
        })
        .collect()
}
