//! The mutual-information classifier: maximize NI over decision rules.
//!
//! Gaussian models are searched in likelihood-ratio threshold space,
//! `u = ln δ` without rejection and `(u1, u2) = (ln δ1, ln δ2)`, `u2 <= u1`,
//! with rejection. Every probe maps to regions through the closed-form
//! boundary points, so each probe is a structurally valid classifier.
//! A log-spaced grid locates the basin; a compass search polishes it.
//!
//! Uniform models have a constant posterior on the overlap, so the only
//! choice is that region's label; the candidates are enumerated exactly.

use rayon::prelude::*;
use serde::Serialize;

use crate::bayes_rule::uniform::has_overlap;
use crate::bayes_rule::{
    demonstrate_redundancy, evaluate, regions_from_cuts, uniform_regions, unit_reject_costs,
    CostMatrix, Decision, DecisionRegions, OutcomeReport, RejectThresholds,
};
use crate::distributions::{ClassModel, GaussianClassModel, UniformClassModel};

use super::equivalence::equivalent_thresholds;
use super::joint::{joint_from_regions, ni, JointDistribution};

/// What the search optimizes. Both pick the same classifier; the second
/// exists to check `max I = H(T) - min H(T|Y)` with separate bookkeeping.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize)]
pub enum Objective {
    MaxNi,
    MinConditionalEntropy,
}

/// Grid and refinement schedule.
#[derive(Debug, Clone, Copy, PartialEq, Serialize)]
pub struct SearchConfig {
    pub delta_min: f64,
    pub delta_max: f64,
    /// Grid size without rejection.
    pub grid_1d: usize,
    /// Grid size per axis with rejection (triangle `δ2 <= δ1`).
    pub grid_2d: usize,
    /// Refinement stops once the step in `ln δ` falls below this.
    pub min_step: f64,
    /// Moves must gain more than this; smaller gains are rounding noise.
    pub min_gain: f64,
}

impl Default for SearchConfig {
    fn default() -> Self {
        Self {
            delta_min: 1e-6,
            delta_max: 1e6,
            grid_1d: 2001,
            grid_2d: 201,
            min_step: 1e-9,
            min_gain: 1e-15,
        }
    }
}

/// An MI-optimal classifier and its equivalent Bayes parameters.
#[derive(Debug, Clone, PartialEq, Serialize)]
pub struct MISolution {
    pub regions: DecisionRegions,
    pub ni: f64,
    pub h_t_given_y: f64,
    /// Equivalent rejection thresholds; `tr1 + tr2 = 1` without rejection.
    pub thresholds: RejectThresholds,
    /// Likelihood-ratio cuts `(δ1, δ2)` of the solution.
    pub deltas: (f64, f64),
    /// Equivalent cost ratio `λ21/λ12` without rejection: the likelihood
    /// ratio at the boundary.
    pub cost_ratio_lambda21: Option<f64>,
    /// With rejection: cost matrices that reproduce the thresholds. There is
    /// never a unique one; the unit-reject form is always listed, the
    /// unit-error form when it exists.
    pub equivalent_costs: Vec<CostMatrix>,
    pub joint: JointDistribution,
    pub report: OutcomeReport,
}

#[derive(Debug, Clone, Copy)]
struct Probe {
    u1: f64,
    u2: f64,
    score: f64,
}

impl Probe {
    /// Higher score wins; ties go to the lexicographically smaller `(u1, u2)`.
    fn beats(&self, other: &Probe) -> bool {
        self.score > other.score
            || (self.score == other.score && (self.u1, self.u2) < (other.u1, other.u2))
    }
}

fn best_of(probes: impl IntoIterator<Item = Probe>) -> Probe {
    probes
        .into_iter()
        .reduce(|best, p| if p.beats(&best) { p } else { best })
        .expect("at least one probe")
}

struct Searcher<'a> {
    model: &'a ClassModel,
    objective: Objective,
    config: SearchConfig,
}

impl Searcher<'_> {
    fn score(&self, u1: f64, u2: f64) -> f64 {
        let regions = regions_from_cuts(self.model, u1.exp(), u2.exp());
        let info = ni(&joint_from_regions(self.model, &regions)).expect("valid priors");
        match self.objective {
            Objective::MaxNi => info.ni,
            Objective::MinConditionalEntropy => -info.h_t_given_y,
        }
    }

    fn probe(&self, u1: f64, u2: f64) -> Probe {
        Probe {
            u1,
            u2,
            score: self.score(u1, u2),
        }
    }

    fn axis(&self, n: usize) -> Vec<f64> {
        let (lo, hi) = (self.config.delta_min.ln(), self.config.delta_max.ln());
        (0..n)
            .map(|k| lo + (hi - lo) * k as f64 / (n - 1) as f64)
            .collect()
    }

    fn step0(&self, n: usize) -> f64 {
        (self.config.delta_max.ln() - self.config.delta_min.ln()) / (n - 1) as f64
    }

    /// Compass search from `start`; `tied` keeps `u2 = u1` (no rejection).
    fn refine(&self, start: Probe, mut step: f64, tied: bool) -> Probe {
        const DIRS: [(f64, f64); 8] = [
            (1.0, 0.0),
            (-1.0, 0.0),
            (0.0, 1.0),
            (0.0, -1.0),
            (1.0, 1.0),
            (-1.0, -1.0),
            (1.0, -1.0),
            (-1.0, 1.0),
        ];
        let mut best = start;
        let mut moves = 0usize;
        while step >= self.config.min_step && moves < 100_000 {
            let neighbors: Vec<Probe> = if tied {
                [step, -step]
                    .iter()
                    .map(|d| self.probe(best.u1 + d, best.u1 + d))
                    .collect()
            } else {
                DIRS.iter()
                    .map(|(a, b)| {
                        let u1 = best.u1 + a * step;
                        let u2 = (best.u2 + b * step).min(u1);
                        self.probe(u1, u2)
                    })
                    .collect()
            };
            let cand = best_of(neighbors);
            if cand.score - best.score > self.config.min_gain {
                best = cand;
                moves += 1;
            } else {
                step *= 0.5;
            }
        }
        best
    }

    fn no_reject(&self) -> Probe {
        let grid: Vec<Probe> = self
            .axis(self.config.grid_1d)
            .par_iter()
            .map(|&u| self.probe(u, u))
            .collect();
        let start = best_of(grid.into_iter().chain([self.probe(0.0, 0.0)]));
        self.refine(start, self.step0(self.config.grid_1d), true)
    }

    fn with_reject(&self, no_reject: &Probe) -> Probe {
        let axis = self.axis(self.config.grid_2d);
        let pairs: Vec<(f64, f64)> = axis
            .iter()
            .flat_map(|&u1| {
                axis.iter()
                    .filter(move |&&u2| u2 <= u1)
                    .map(move |&u2| (u1, u2))
            })
            .collect();
        let grid: Vec<Probe> = pairs
            .par_iter()
            .map(|&(u1, u2)| self.probe(u1, u2))
            .collect();
        let extra = [self.probe(0.0, 0.0), self.probe(no_reject.u1, no_reject.u2)];
        let start = best_of(grid.into_iter().chain(extra));
        self.refine(start, self.step0(self.config.grid_2d), false)
    }
}

/// MI-optimal classifier with the default schedule.
pub fn mi_optimize(model: &ClassModel, reject_option: bool) -> MISolution {
    mi_optimize_with(
        model,
        reject_option,
        &SearchConfig::default(),
        Objective::MaxNi,
    )
}

pub fn mi_optimize_with(
    model: &ClassModel,
    reject_option: bool,
    config: &SearchConfig,
    objective: Objective,
) -> MISolution {
    match model {
        ClassModel::Gaussian(g) => {
            let searcher = Searcher {
                model,
                objective,
                config: *config,
            };
            let best = searcher.no_reject();
            let best = if reject_option {
                searcher.with_reject(&best)
            } else {
                best
            };
            gaussian_solution(g, best.u1.exp(), best.u2.exp(), reject_option)
        }
        ClassModel::Uniform(u) => uniform_solution(u, reject_option),
    }
}

fn finish(
    model: &ClassModel,
    regions: DecisionRegions,
    thresholds: RejectThresholds,
    deltas: (f64, f64),
    cost_ratio_lambda21: Option<f64>,
) -> MISolution {
    let mut report = evaluate(model, &regions, None);
    report.thresholds = Some(thresholds);
    let joint = report.joint;
    let info = ni(&joint).expect("valid priors");
    let equivalent_costs =
        if thresholds.rejects() && thresholds.tr1() > 0.0 && thresholds.tr2() > 0.0 {
            match demonstrate_redundancy(&thresholds) {
                Ok((unit_error, unit_reject)) => vec![unit_error, unit_reject],
                Err(_) => unit_reject_costs(&thresholds).into_iter().collect(),
            }
        } else {
            Vec::new()
        };
    MISolution {
        regions,
        ni: info.ni,
        h_t_given_y: info.h_t_given_y,
        thresholds,
        deltas,
        cost_ratio_lambda21,
        equivalent_costs,
        joint,
        report,
    }
}

fn gaussian_solution(
    model: &GaussianClassModel,
    delta1: f64,
    delta2: f64,
    reject_option: bool,
) -> MISolution {
    let cm = ClassModel::Gaussian(*model);
    let delta2 = if reject_option { delta2 } else { delta1 };
    let regions = regions_from_cuts(&cm, delta1, delta2);
    let from_cuts = RejectThresholds::from_deltas(delta1, delta2).expect("δ2 <= δ1");
    let points = regions.boundary_points();
    // With four boundary points both thresholds can be read back from the
    // posteriors there; otherwise the cuts are the only source.
    let thresholds = if reject_option && points.len() == 4 {
        equivalent_thresholds(model, &points).unwrap_or(from_cuts)
    } else {
        from_cuts
    };
    let lambda21 = (!reject_option).then(|| {
        points
            .first()
            .map_or(delta1, |&x| model.log_likelihood_ratio(x).exp())
    });
    finish(&cm, regions, thresholds, (delta1, delta2), lambda21)
}

/// Thresholds that put the overlap into `label`, for overlap posterior `p1*`.
fn representative_thresholds(p1: f64, label: Decision) -> RejectThresholds {
    let p2 = 1.0 - p1;
    let (tr1, tr2) = match label {
        Decision::Class1 => {
            let tr1 = 0.5 * (p2 + 1.0);
            (tr1, 1.0 - tr1)
        }
        Decision::Class2 => {
            let tr2 = 0.5 * (p1 + 1.0);
            (1.0 - tr2, tr2)
        }
        Decision::Reject => (0.5 * p2, 0.5 * p1),
    };
    RejectThresholds::new(tr1, tr2).expect("representative thresholds are valid")
}

fn uniform_solution(model: &UniformClassModel, reject_option: bool) -> MISolution {
    let cm = ClassModel::Uniform(*model);
    if !has_overlap(model) {
        let tr = RejectThresholds::no_reject();
        let (d1, d2) = tr.cut_points();
        return finish(
            &cm,
            uniform_regions(model, d1, d2),
            tr,
            (d1, d2),
            (!reject_option).then_some(1.0),
        );
    }
    let p1 = model.overlap_posterior().pt1_given_x;
    let labels: &[Decision] = if reject_option {
        &Decision::ALL
    } else {
        &[Decision::Class1, Decision::Class2]
    };
    let mut best: Option<(f64, MISolution)> = None;
    for &label in labels {
        let tr = representative_thresholds(p1, label);
        let (d1, d2) = tr.cut_points();
        let lambda21 = (!reject_option).then_some(d1);
        let sol = finish(&cm, uniform_regions(model, d1, d2), tr, (d1, d2), lambda21);
        if best.as_ref().is_none_or(|(score, _)| sol.ni > *score) {
            best = Some((sol.ni, sol));
        }
    }
    best.expect("at least two candidates").1
}
