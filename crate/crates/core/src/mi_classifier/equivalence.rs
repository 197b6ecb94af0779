//! Rejection thresholds equivalent to a given set of boundary points.
//!
//! A boundary point on the `y1` cut satisfies `p(t1|x) = 1 - Tr1`, one on the
//! `y2` cut `p(t2|x) = 1 - Tr2`. Which points belong to which cut follows
//! from the shape of the likelihood ratio.

use crate::bayes_rule::RejectThresholds;
use crate::distributions::GaussianClassModel;
use crate::error::{Error, Result};

const PAIR_TOL: f64 = 1e-6;

fn agree(a: f64, b: f64) -> Result<f64> {
    if (a - b).abs() > PAIR_TOL {
        Err(Error::InconsistentPair {
            first: a,
            second: b,
        })
    } else {
        Ok(0.5 * (a + b))
    }
}

/// Thresholds reproducing sorted `points` on `model`.
///
/// * Four points: when `σ1 > σ2` the outer pair lies on the `y1` cut and the
///   inner pair on the `y2` cut; when `σ1 < σ2` the roles swap.
/// * Two points with unequal variances: one cut with no reject band, so
///   both thresholds come from that pair and sum to 1.
/// * Two points with equal variances: the side facing class 1's mean is
///   the `y1` cut.
/// * One point: no rejection.
pub fn equivalent_thresholds(
    model: &GaussianClassModel,
    points: &[f64],
) -> Result<RejectThresholds> {
    let p1 = |x: f64| model.posterior(x).pt1_given_x;
    let p2 = |x: f64| model.posterior(x).pt2_given_x;
    if points
        .windows(2)
        .any(|w| w[0].partial_cmp(&w[1]) != Some(std::cmp::Ordering::Less))
    {
        return Err(Error::InconsistentInput(
            "boundary points must be strictly increasing".into(),
        ));
    }
    let (tr1, tr2) = match points.len() {
        1 => (1.0 - p1(points[0]), 1.0 - p2(points[0])),
        2 if !model.equal_sigmas() => {
            let tr1 = agree(1.0 - p1(points[0]), 1.0 - p1(points[1]))?;
            (tr1, 1.0 - tr1)
        }
        2 => {
            let (y1_side, y2_side) = if model.mu1 < model.mu2 {
                (points[0], points[1])
            } else {
                (points[1], points[0])
            };
            (1.0 - p1(y1_side), 1.0 - p2(y2_side))
        }
        4 => {
            let (outer, inner) = ((points[0], points[3]), (points[1], points[2]));
            let (cut1, cut2) = if model.sigma1 > model.sigma2 {
                (outer, inner)
            } else {
                (inner, outer)
            };
            (
                agree(1.0 - p1(cut1.0), 1.0 - p1(cut1.1))?,
                agree(1.0 - p2(cut2.0), 1.0 - p2(cut2.1))?,
            )
        }
        n => {
            return Err(Error::InconsistentInput(format!(
                "expected 1, 2 or 4 boundary points, got {n}"
            )))
        }
    };
    RejectThresholds::relaxed(tr1, tr2)
}
