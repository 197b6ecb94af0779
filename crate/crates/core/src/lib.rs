//! Abstaining binary classifiers over exactly known univariate class models.
//!
//! * [`distributions`]: Gaussian and uniform class models.
//! * [`bayes_rule`]: minimum-risk decision rules with an optional reject
//!   option, threshold/cost conversions and closed-form boundaries.
//! * [`mi_classifier`]: normalized mutual information and its maximizer.
//! * [`info_bounds`]: conditional-entropy bounds on the error rate.
//! * [`mc_oracle`]: seeded Monte-Carlo validation.
//! * [`cost_analysis`]: cost validation and redundancy demonstrations.

pub mod bayes_rule;
pub mod cost_analysis;
pub mod distributions;
pub mod error;
pub mod info_bounds;
pub mod mc_oracle;
pub mod mi_classifier;
pub mod presets;

pub use error::{Error, Result};
