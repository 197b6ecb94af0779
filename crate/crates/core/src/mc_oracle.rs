//! Monte-Carlo oracle: labeled samples from a model, classified by any
//! region set, tallied into augmented confusion matrices.
//!
//! The stream is ChaCha20 (`rand_chacha`, seeded with `seed_from_u64`).
//! Point `i` consumes the two `u64` words at word position `4i`: the first
//! picks the class (`u < p(t1)` gives class 1), the second is pushed through
//! the class's inverse CDF. A `u64` maps to `((v >> 11) + 0.5) / 2^53`, which
//! lies strictly inside `(0, 1)`. Work is split by counter ranges, so
//! results do not depend on the number of worker threads.

use std::f64::consts::SQRT_2;

use rand_chacha::ChaCha20Rng;
use rand_core::{RngCore, SeedableRng};
use rayon::prelude::*;
use serde::Serialize;
use statrs::function::erf::erfc_inv;

use crate::bayes_rule::{CostMatrix, Decision, DecisionRegions, OutcomeReport};
use crate::distributions::{ClassId, ClassModel};
use crate::mi_classifier::{joint_from_confusion, AugmentedConfusionMatrix};

/// Sample size used for acceptance runs.
pub const DEFAULT_N: u64 = 10_000_000;
const CHUNK: u64 = 1 << 16;

/// Labeled points drawn from a model.
#[derive(Debug, Clone, PartialEq, Serialize)]
pub struct SampleBatch {
    pub n: u64,
    pub seed: u64,
    pub points: Vec<(f64, ClassId)>,
}

fn unit(v: u64) -> f64 {
    ((v >> 11) as f64 + 0.5) * (1.0 / (1u64 << 53) as f64)
}

/// Standard normal quantile.
fn normal_quantile(u: f64) -> f64 {
    -SQRT_2 * erfc_inv(2.0 * u)
}

fn draw(model: &ClassModel, rng: &mut ChaCha20Rng) -> (f64, ClassId) {
    let class = if unit(rng.next_u64()) < model.prior().p1() {
        ClassId::One
    } else {
        ClassId::Two
    };
    let u = unit(rng.next_u64());
    let x = match model {
        ClassModel::Gaussian(m) => m.mean(class) + m.sigma(class) * normal_quantile(u),
        ClassModel::Uniform(m) => {
            let (a, b) = m.support(class);
            a + u * (b - a)
        }
    };
    (x, class)
}

/// Calls `f` on every point of chunk `k`, in counter order.
fn for_chunk(model: &ClassModel, seed: u64, n: u64, k: u64, mut f: impl FnMut(f64, ClassId)) {
    let start = k * CHUNK;
    let end = (start + CHUNK).min(n);
    let mut rng = ChaCha20Rng::seed_from_u64(seed);
    rng.set_word_pos(4 * start as u128);
    for _ in start..end {
        let (x, c) = draw(model, &mut rng);
        f(x, c);
    }
}

fn chunks(n: u64) -> u64 {
    n.div_ceil(CHUNK)
}

/// `n` labeled points; identical for identical `(model, n, seed)`.
pub fn sample(model: &ClassModel, n: u64, seed: u64) -> SampleBatch {
    let points = (0..chunks(n))
        .into_par_iter()
        .flat_map_iter(|k| {
            let mut out = Vec::with_capacity(CHUNK as usize);
            for_chunk(model, seed, n, k, |x, c| out.push((x, c)));
            out
        })
        .collect();
    SampleBatch { n, seed, points }
}

fn decide(regions: &DecisionRegions, x: f64) -> Decision {
    // Region sets cover the support, so every drawn point has a label.
    regions
        .label_at(x)
        .expect("sampled point outside all regions")
}

fn tally(counts: &mut [[u64; 3]; 2], class: ClassId, d: Decision) {
    counts[class.index()][d.index()] += 1;
}

fn report_from_counts(
    counts: [[u64; 3]; 2],
    regions: &DecisionRegions,
    costs: Option<&CostMatrix>,
) -> (AugmentedConfusionMatrix, OutcomeReport) {
    let cm = AugmentedConfusionMatrix::from_counts(counts);
    let mut report = OutcomeReport::from_joint(joint_from_confusion(&cm), costs);
    report.regions = Some(regions.clone());
    (cm, report)
}

/// Empirical confusion matrix and rates of `regions` on a stored batch.
pub fn empirical_outcome(
    batch: &SampleBatch,
    regions: &DecisionRegions,
    costs: Option<&CostMatrix>,
) -> (AugmentedConfusionMatrix, OutcomeReport) {
    let mut counts = [[0u64; 3]; 2];
    for &(x, c) in &batch.points {
        tally(&mut counts, c, decide(regions, x));
    }
    report_from_counts(counts, regions, costs)
}

/// Like [`empirical_outcome`] for several region sets at once, drawing the
/// same `n` points as [`sample`] without storing them.
pub fn empirical_outcomes(
    model: &ClassModel,
    region_sets: &[&DecisionRegions],
    n: u64,
    seed: u64,
    costs: Option<&CostMatrix>,
) -> Vec<(AugmentedConfusionMatrix, OutcomeReport)> {
    let zero = || vec![[[0u64; 3]; 2]; region_sets.len()];
    let counts = (0..chunks(n))
        .into_par_iter()
        .map(|k| {
            let mut acc = zero();
            for_chunk(model, seed, n, k, |x, c| {
                for (slot, regions) in acc.iter_mut().zip(region_sets) {
                    tally(slot, c, decide(regions, x));
                }
            });
            acc
        })
        .reduce(zero, |mut a, b| {
            for (sa, sb) in a.iter_mut().zip(&b) {
                for (ra, rb) in sa.iter_mut().zip(sb) {
                    for (va, vb) in ra.iter_mut().zip(rb) {
                        *va += vb;
                    }
                }
            }
            a
        });
    counts
        .into_iter()
        .zip(region_sets)
        .map(|(c, r)| report_from_counts(c, r, costs))
        .collect()
}

/// Binomial standard error of a frequency estimate of `p` from `n` draws.
pub fn binomial_se(p: f64, n: u64) -> f64 {
    (p * (1.0 - p) / n as f64).sqrt()
}
