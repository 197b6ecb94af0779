//! Closed-form boundary points for two univariate Gaussians.
//!
//! `ln LR(x) = ln δ` is a quadratic in `x`. With `K = p1 σ2 / (p2 σ1 δ)`
//! its reduced discriminant is `σ1² σ2² α` where
//! `α = (μ1-μ2)² - 2(σ1²-σ2²) ln K`, and the roots are
//! `[(σ1² μ2 - σ2² μ1) ± σ1 σ2 √α] / (σ1² - σ2²)`.

use serde::Serialize;

use crate::distributions::GaussianClassModel;

use super::regions::{Decision, DecisionRegions};

/// Real solutions of `LR(x) = 1`.
#[derive(Debug, Clone, PartialEq, Serialize)]
pub struct CrossoverAnalysis {
    pub count: usize,
    pub points: Vec<f64>,
    pub alpha: f64,
}

fn log_k(model: &GaussianClassModel, delta: f64) -> f64 {
    (model.prior.p1() / model.prior.p2()).ln() + (model.sigma2 / model.sigma1).ln() - delta.ln()
}

/// `α(δ)`; its sign decides whether `LR(x) = δ` has two real roots when
/// the variances differ.
pub fn alpha(model: &GaussianClassModel, delta: f64) -> f64 {
    let dm = model.mu1 - model.mu2;
    let ds = model.sigma1 * model.sigma1 - model.sigma2 * model.sigma2;
    dm * dm - 2.0 * ds * log_k(model, delta)
}

/// Sorted solutions of `LR(x) = delta`: two when the variances differ and
/// `α > 0`, one when they are equal (and the means differ), none otherwise.
/// A tangency (`α = 0`) touches `δ` without crossing it and yields nothing.
pub fn gaussian_boundaries(model: &GaussianClassModel, delta: f64) -> Vec<f64> {
    if !(delta > 0.0 && delta.is_finite()) {
        return Vec::new();
    }
    let (m1, m2) = (model.mu1, model.mu2);
    let (s1, s2) = (model.sigma1, model.sigma2);
    let lk = log_k(model, delta);
    if model.equal_sigmas() {
        if m1 == m2 {
            return Vec::new();
        }
        let x = 0.5 * (m1 + m2) + s1 * s1 / (m2 - m1) * lk;
        return if x.is_finite() { vec![x] } else { Vec::new() };
    }
    let a = alpha(model, delta);
    if !a.is_finite() || a <= 0.0 {
        return Vec::new();
    }
    let (v1, v2) = (s1 * s1, s2 * s2);
    let lead = v1 - v2;
    let h = v1 * m2 - v2 * m1;
    let root = s1 * s2 * a.sqrt();
    // q = h + sign(h)·root avoids cancellation; the other root is c/q.
    let q = if h >= 0.0 { h + root } else { h - root };
    let c = v1 * m2 * m2 - v2 * m1 * m1 + 2.0 * v1 * v2 * lk;
    let mut pts = if q == 0.0 {
        vec![h / lead, h / lead]
    } else {
        vec![q / lead, c / q]
    };
    pts.sort_by(f64::total_cmp);
    pts
}

/// Cross-over points (`δ = 1`), where the two posteriors are equal.
pub fn crossover_points(model: &GaussianClassModel) -> CrossoverAnalysis {
    let points = gaussian_boundaries(model, 1.0);
    CrossoverAnalysis {
        count: points.len(),
        alpha: alpha(model, 1.0),
        points,
    }
}

/// Label for a natural-log likelihood ratio under cuts `ln δ1 >= ln δ2`.
pub(crate) fn label_for_log_lr(log_lr: f64, ln_d1: f64, ln_d2: f64) -> Decision {
    if log_lr > ln_d1 {
        Decision::Class1
    } else if log_lr <= ln_d2 {
        Decision::Class2
    } else {
        Decision::Reject
    }
}

/// Regions of the likelihood-ratio rule `y1: LR > δ1`, `y2: LR <= δ2`,
/// reject otherwise, with `0 <= δ2 <= δ1 <= ∞`.
pub fn gaussian_regions(model: &GaussianClassModel, delta1: f64, delta2: f64) -> DecisionRegions {
    let mut breaks: Vec<f64> = gaussian_boundaries(model, delta1);
    breaks.extend(gaussian_boundaries(model, delta2));
    breaks.sort_by(f64::total_cmp);
    breaks.dedup();
    let (ln_d1, ln_d2) = (delta1.ln(), delta2.ln());
    let probe = |lo: f64, hi: f64| match (lo.is_finite(), hi.is_finite()) {
        (true, true) => 0.5 * (lo + hi),
        (true, false) => lo + 1.0,
        (false, true) => hi - 1.0,
        (false, false) => 0.5 * (model.mu1 + model.mu2),
    };
    let mut edges = Vec::with_capacity(breaks.len() + 2);
    edges.push(f64::NEG_INFINITY);
    edges.extend(breaks.iter().copied());
    edges.push(f64::INFINITY);
    let labels: Vec<Decision> = edges
        .windows(2)
        .map(|w| label_for_log_lr(model.log_likelihood_ratio(probe(w[0], w[1])), ln_d1, ln_d2))
        .collect();
    DecisionRegions::from_partition(&breaks, &labels).expect("breaks are sorted and distinct")
}
