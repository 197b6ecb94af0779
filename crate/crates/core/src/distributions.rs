//! Exactly known binary class models.
//!
//! A [`ClassModel`] is a pair of priors plus one univariate conditional
//! density per class, either Gaussian or uniform. Everything downstream
//! (decision rules, joint distributions, the sampling oracle) talks to the
//! model only through [`ClassModel::posterior`],
//! [`ClassModel::likelihood_ratio`], [`ClassModel::class_mass`] and the
//! support queries.
//!
//! Gaussian interval masses go through `erf`/`erfc` (statrs, double
//! precision), never through quadrature.

use std::f64::consts::SQRT_2;

use serde::{Deserialize, Serialize};
use statrs::function::erf::erfc;

use crate::error::{Error, Result};

const PRIOR_SUM_TOL: f64 = 1e-12;

/// One of the two classes `t1`, `t2`.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, Serialize, Deserialize)]
pub enum ClassId {
    One,
    Two,
}

impl ClassId {
    pub const BOTH: [ClassId; 2] = [ClassId::One, ClassId::Two];

    /// Zero-based row index.
    pub fn index(self) -> usize {
        match self {
            ClassId::One => 0,
            ClassId::Two => 1,
        }
    }

    pub fn other(self) -> ClassId {
        match self {
            ClassId::One => ClassId::Two,
            ClassId::Two => ClassId::One,
        }
    }
}

/// Prior probabilities `p(t1)`, `p(t2)`.
#[derive(Debug, Clone, Copy, PartialEq, Serialize, Deserialize)]
pub struct ClassPrior {
    p1: f64,
    p2: f64,
}

impl ClassPrior {
    pub fn new(p1: f64, p2: f64) -> Result<Self> {
        if !(p1 > 0.0 && p1 < 1.0 && p2 > 0.0 && p2 < 1.0) {
            return Err(Error::InvalidModel(format!(
                "priors must lie strictly inside (0, 1), got ({p1}, {p2})"
            )));
        }
        if (p1 + p2 - 1.0).abs() > PRIOR_SUM_TOL {
            return Err(Error::InvalidModel(format!(
                "priors must sum to 1, got {p1} + {p2} = {}",
                p1 + p2
            )));
        }
        Ok(Self { p1, p2 })
    }

    /// Prior pair `(p1, 1 - p1)`.
    pub fn from_p1(p1: f64) -> Result<Self> {
        Self::new(p1, 1.0 - p1)
    }

    /// Priors with `p(t1) / p(t2) = ratio`.
    pub fn from_ratio(ratio: f64) -> Result<Self> {
        if !(ratio > 0.0 && ratio.is_finite()) {
            return Err(Error::InvalidModel(format!(
                "prior ratio must be positive and finite, got {ratio}"
            )));
        }
        Self::new(ratio / (1.0 + ratio), 1.0 / (1.0 + ratio))
    }

    pub fn p1(&self) -> f64 {
        self.p1
    }

    pub fn p2(&self) -> f64 {
        self.p2
    }

    pub fn get(&self, class: ClassId) -> f64 {
        match class {
            ClassId::One => self.p1,
            ClassId::Two => self.p2,
        }
    }

    pub fn min(&self) -> f64 {
        self.p1.min(self.p2)
    }

    pub fn swapped(&self) -> Self {
        Self {
            p1: self.p2,
            p2: self.p1,
        }
    }
}

/// Posterior pair `p(t1|x)`, `p(t2|x)`.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct Posterior {
    pub pt1_given_x: f64,
    pub pt2_given_x: f64,
}

impl Posterior {
    pub fn get(&self, class: ClassId) -> f64 {
        match class {
            ClassId::One => self.pt1_given_x,
            ClassId::Two => self.pt2_given_x,
        }
    }

    /// Posterior from a natural-log likelihood ratio; stable for large `|ln LR|`.
    pub(crate) fn from_log_ratio(log_ratio: f64) -> Self {
        if log_ratio >= 0.0 {
            let r = (-log_ratio).exp();
            let pt2 = r / (1.0 + r);
            Self {
                pt1_given_x: 1.0 - pt2,
                pt2_given_x: pt2,
            }
        } else {
            let r = log_ratio.exp();
            let pt1 = r / (1.0 + r);
            Self {
                pt1_given_x: pt1,
                pt2_given_x: 1.0 - pt1,
            }
        }
    }
}

/// Standard normal CDF.
pub fn normal_cdf(z: f64) -> f64 {
    0.5 * erfc(-z / SQRT_2)
}

/// Standard normal upper tail `1 - Φ(z)`.
pub fn normal_sf(z: f64) -> f64 {
    0.5 * erfc(z / SQRT_2)
}

/// `Φ(b) - Φ(a)` for `a <= b`, choosing the tail that keeps precision.
pub fn normal_interval_prob(a: f64, b: f64) -> f64 {
    debug_assert!(a <= b);
    if a >= 0.0 {
        normal_sf(a) - normal_sf(b)
    } else if b <= 0.0 {
        normal_cdf(b) - normal_cdf(a)
    } else {
        1.0 - normal_cdf(a) - normal_sf(b)
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Serialize, Deserialize)]
pub struct GaussianClassModel {
    pub prior: ClassPrior,
    pub mu1: f64,
    pub sigma1: f64,
    pub mu2: f64,
    pub sigma2: f64,
}

impl GaussianClassModel {
    pub fn new(prior: ClassPrior, mu1: f64, sigma1: f64, mu2: f64, sigma2: f64) -> Result<Self> {
        for (name, s) in [("sigma1", sigma1), ("sigma2", sigma2)] {
            if !(s > 0.0 && s.is_finite()) {
                return Err(Error::InvalidModel(format!(
                    "{name} must be positive and finite, got {s}"
                )));
            }
        }
        if !(mu1.is_finite() && mu2.is_finite()) {
            return Err(Error::InvalidModel("means must be finite".into()));
        }
        Ok(Self {
            prior,
            mu1,
            sigma1,
            mu2,
            sigma2,
        })
    }

    pub fn mean(&self, class: ClassId) -> f64 {
        match class {
            ClassId::One => self.mu1,
            ClassId::Two => self.mu2,
        }
    }

    pub fn sigma(&self, class: ClassId) -> f64 {
        match class {
            ClassId::One => self.sigma1,
            ClassId::Two => self.sigma2,
        }
    }

    pub fn with_prior(&self, prior: ClassPrior) -> Self {
        Self { prior, ..*self }
    }

    /// The same model with class labels exchanged.
    pub fn swapped(&self) -> Self {
        Self {
            prior: self.prior.swapped(),
            mu1: self.mu2,
            sigma1: self.sigma2,
            mu2: self.mu1,
            sigma2: self.sigma1,
        }
    }

    pub fn equal_sigmas(&self) -> bool {
        self.sigma1 == self.sigma2
    }

    pub fn density(&self, class: ClassId, x: f64) -> f64 {
        let (mu, s) = (self.mean(class), self.sigma(class));
        let z = (x - mu) / s;
        (-0.5 * z * z).exp() / (s * (2.0 * std::f64::consts::PI).sqrt())
    }

    /// `ln[p(x|t1)p(t1) / (p(x|t2)p(t2))]`, finite everywhere.
    pub fn log_likelihood_ratio(&self, x: f64) -> f64 {
        let z1 = (x - self.mu1) / self.sigma1;
        let z2 = (x - self.mu2) / self.sigma2;
        (self.prior.p1() / self.prior.p2()).ln() + (self.sigma2 / self.sigma1).ln() - 0.5 * z1 * z1
            + 0.5 * z2 * z2
    }

    pub fn posterior(&self, x: f64) -> Posterior {
        Posterior::from_log_ratio(self.log_likelihood_ratio(x))
    }

    /// `p(ti) * P(lo <= X <= hi | ti)`.
    pub fn class_mass(&self, class: ClassId, lo: f64, hi: f64) -> f64 {
        let (mu, s) = (self.mean(class), self.sigma(class));
        self.prior.get(class) * normal_interval_prob((lo - mu) / s, (hi - mu) / s)
    }
}

/// Geometric relation between the two uniform supports.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize, Deserialize)]
pub enum OverlapCase {
    /// Supports overlap on a proper sub-interval of each.
    PartialOverlap,
    /// Class 2's support lies inside class 1's.
    FullOverlapByClass1,
    /// Class 1's support lies inside class 2's.
    FullOverlapByClass2,
    /// Supports are disjoint.
    Separated,
}

#[derive(Debug, Clone, Copy, PartialEq, Serialize, Deserialize)]
pub struct UniformClassModel {
    pub prior: ClassPrior,
    pub a1: f64,
    pub b1: f64,
    pub a2: f64,
    pub b2: f64,
    overlap_case: OverlapCase,
}

impl UniformClassModel {
    pub fn new(prior: ClassPrior, a1: f64, b1: f64, a2: f64, b2: f64) -> Result<Self> {
        if !(a1.is_finite() && b1.is_finite() && a2.is_finite() && b2.is_finite()) {
            return Err(Error::InvalidModel(
                "support endpoints must be finite".into(),
            ));
        }
        if !(a1 < b1 && a2 < b2) {
            return Err(Error::InvalidModel(format!(
                "supports must satisfy a < b, got [{a1}, {b1}] and [{a2}, {b2}]"
            )));
        }
        let overlap_case = if b1 < a2 || b2 < a1 {
            OverlapCase::Separated
        } else if a1 <= a2 && b2 <= b1 {
            OverlapCase::FullOverlapByClass1
        } else if a2 <= a1 && b1 <= b2 {
            OverlapCase::FullOverlapByClass2
        } else {
            OverlapCase::PartialOverlap
        };
        Ok(Self {
            prior,
            a1,
            b1,
            a2,
            b2,
            overlap_case,
        })
    }

    pub fn overlap_case(&self) -> OverlapCase {
        self.overlap_case
    }

    pub fn support(&self, class: ClassId) -> (f64, f64) {
        match class {
            ClassId::One => (self.a1, self.b1),
            ClassId::Two => (self.a2, self.b2),
        }
    }

    pub fn width(&self, class: ClassId) -> f64 {
        let (a, b) = self.support(class);
        b - a
    }

    /// Common part of the two supports, if any.
    pub fn overlap(&self) -> Option<(f64, f64)> {
        let lo = self.a1.max(self.a2);
        let hi = self.b1.min(self.b2);
        (lo <= hi).then_some((lo, hi))
    }

    /// Supports are closed on both ends.
    pub fn in_support(&self, class: ClassId, x: f64) -> bool {
        let (a, b) = self.support(class);
        a <= x && x <= b
    }

    pub fn density(&self, class: ClassId, x: f64) -> f64 {
        if self.in_support(class, x) {
            1.0 / self.width(class)
        } else {
            0.0
        }
    }

    /// Posterior on the overlap, where it is constant.
    pub fn overlap_posterior(&self) -> Posterior {
        let w1 = self.prior.p1() * self.width(ClassId::Two);
        let w2 = self.prior.p2() * self.width(ClassId::One);
        Posterior {
            pt1_given_x: w1 / (w1 + w2),
            pt2_given_x: w2 / (w1 + w2),
        }
    }

    pub fn posterior(&self, x: f64) -> Result<Posterior> {
        match (
            self.in_support(ClassId::One, x),
            self.in_support(ClassId::Two, x),
        ) {
            (true, true) => Ok(self.overlap_posterior()),
            (true, false) => Ok(Posterior {
                pt1_given_x: 1.0,
                pt2_given_x: 0.0,
            }),
            (false, true) => Ok(Posterior {
                pt1_given_x: 0.0,
                pt2_given_x: 1.0,
            }),
            (false, false) => Err(Error::ZeroMixtureDensity { x }),
        }
    }

    pub fn class_mass(&self, class: ClassId, lo: f64, hi: f64) -> f64 {
        let (a, b) = self.support(class);
        let len = (hi.min(b) - lo.max(a)).max(0.0);
        self.prior.get(class) * len / (b - a)
    }
}

/// An exactly known binary class model.
#[derive(Debug, Clone, Copy, PartialEq, Serialize, Deserialize)]
pub enum ClassModel {
    Gaussian(GaussianClassModel),
    Uniform(UniformClassModel),
}

impl From<GaussianClassModel> for ClassModel {
    fn from(m: GaussianClassModel) -> Self {
        ClassModel::Gaussian(m)
    }
}

impl From<UniformClassModel> for ClassModel {
    fn from(m: UniformClassModel) -> Self {
        ClassModel::Uniform(m)
    }
}

impl ClassModel {
    pub fn prior(&self) -> ClassPrior {
        match self {
            ClassModel::Gaussian(m) => m.prior,
            ClassModel::Uniform(m) => m.prior,
        }
    }

    pub fn density(&self, class: ClassId, x: f64) -> f64 {
        match self {
            ClassModel::Gaussian(m) => m.density(class, x),
            ClassModel::Uniform(m) => m.density(class, x),
        }
    }

    pub fn mixture_density(&self, x: f64) -> f64 {
        let prior = self.prior();
        ClassId::BOTH
            .iter()
            .map(|&c| prior.get(c) * self.density(c, x))
            .sum()
    }

    pub fn posterior(&self, x: f64) -> Result<Posterior> {
        match self {
            ClassModel::Gaussian(m) => Ok(m.posterior(x)),
            ClassModel::Uniform(m) => m.posterior(x),
        }
    }

    /// `p(x|t1)p(t1) / (p(x|t2)p(t2))`; `+inf` where only class 1 has density.
    pub fn likelihood_ratio(&self, x: f64) -> Result<f64> {
        match self {
            ClassModel::Gaussian(m) => Ok(m.log_likelihood_ratio(x).exp()),
            ClassModel::Uniform(m) => {
                let num = m.prior.p1() * m.density(ClassId::One, x);
                let den = m.prior.p2() * m.density(ClassId::Two, x);
                match (num > 0.0, den > 0.0) {
                    (_, true) => Ok(num / den),
                    (true, false) => Ok(f64::INFINITY),
                    (false, false) => Err(Error::ZeroMixtureDensity { x }),
                }
            }
        }
    }

    /// `p(ti) * ∫ p(x|ti) dx` over `[lo, hi]`; either end may be infinite.
    pub fn class_mass(&self, class: ClassId, lo: f64, hi: f64) -> Result<f64> {
        if lo.is_nan() || hi.is_nan() || lo > hi {
            return Err(Error::InvalidInterval { lo, hi });
        }
        Ok(match self {
            ClassModel::Gaussian(m) => m.class_mass(class, lo, hi),
            ClassModel::Uniform(m) => m.class_mass(class, lo, hi),
        })
    }

    /// Closed support of a class (infinite for Gaussians).
    pub fn support(&self, class: ClassId) -> (f64, f64) {
        match self {
            ClassModel::Gaussian(_) => (f64::NEG_INFINITY, f64::INFINITY),
            ClassModel::Uniform(m) => m.support(class),
        }
    }
}
