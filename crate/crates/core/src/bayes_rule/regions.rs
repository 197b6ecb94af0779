use serde::{Deserialize, Serialize};

use crate::distributions::{ClassId, ClassModel};
use crate::error::{Error, Result};

/// Decision output: `y1`, `y2`, or `y3` (reject).
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize, Deserialize)]
pub enum Decision {
    Class1,
    Class2,
    Reject,
}

impl Decision {
    pub const ALL: [Decision; 3] = [Decision::Class1, Decision::Class2, Decision::Reject];

    /// Zero-based column index.
    pub fn index(self) -> usize {
        match self {
            Decision::Class1 => 0,
            Decision::Class2 => 1,
            Decision::Reject => 2,
        }
    }

    pub fn name(self) -> &'static str {
        match self {
            Decision::Class1 => "y1",
            Decision::Class2 => "y2",
            Decision::Reject => "y3",
        }
    }

    /// Ownership rank of a point shared by two segments. `y2` is decided
    /// with `<=` and `y1` with a strict `>`, so a boundary point goes to
    /// `y2` first, then reject, then `y1`.
    fn tie_rank(self) -> u8 {
        match self {
            Decision::Class2 => 2,
            Decision::Reject => 1,
            Decision::Class1 => 0,
        }
    }
}

/// One labeled interval with ends `lo < hi` (either may be infinite).
#[derive(Debug, Clone, Copy, PartialEq, Serialize, Deserialize)]
pub struct Segment {
    pub lo: f64,
    pub hi: f64,
    pub label: Decision,
}

/// Ordered, disjoint labeled intervals covering the model's support.
///
/// Where two segments touch, the shared point belongs to the segment with
/// the higher tie rank (`y2`, then reject, then `y1`); every other finite
/// end is closed.
#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
pub struct DecisionRegions {
    segments: Vec<Segment>,
}

impl DecisionRegions {
    /// Validates ordering and disjointness and merges touching segments
    /// that carry the same label.
    pub fn new(segments: Vec<Segment>) -> Result<Self> {
        if segments.is_empty() {
            return Err(Error::InconsistentInput("no segments".into()));
        }
        let mut merged: Vec<Segment> = Vec::with_capacity(segments.len());
        for s in segments {
            if s.lo.is_nan() || s.hi.is_nan() || s.lo >= s.hi {
                return Err(Error::InvalidInterval { lo: s.lo, hi: s.hi });
            }
            if let Some(last) = merged.last_mut() {
                if s.lo < last.hi {
                    return Err(Error::InconsistentInput(format!(
                        "segments overlap at {} < {}",
                        s.lo, last.hi
                    )));
                }
                if s.lo == last.hi && s.label == last.label {
                    last.hi = s.hi;
                    continue;
                }
            }
            merged.push(s);
        }
        Ok(Self { segments: merged })
    }

    /// A single segment over all of ℝ.
    pub fn everywhere(label: Decision) -> Self {
        Self {
            segments: vec![Segment {
                lo: f64::NEG_INFINITY,
                hi: f64::INFINITY,
                label,
            }],
        }
    }

    /// Labels consecutive intervals of the partition of ℝ defined by the
    /// sorted `breaks`. `labels.len()` must be `breaks.len() + 1`.
    pub fn from_partition(breaks: &[f64], labels: &[Decision]) -> Result<Self> {
        if labels.len() != breaks.len() + 1 {
            return Err(Error::InconsistentInput(format!(
                "{} breaks need {} labels, got {}",
                breaks.len(),
                breaks.len() + 1,
                labels.len()
            )));
        }
        let mut edges = Vec::with_capacity(breaks.len() + 2);
        edges.push(f64::NEG_INFINITY);
        edges.extend_from_slice(breaks);
        edges.push(f64::INFINITY);
        let segments = edges
            .windows(2)
            .zip(labels)
            .map(|(w, &label)| Segment {
                lo: w[0],
                hi: w[1],
                label,
            })
            .collect();
        Self::new(segments)
    }

    pub fn segments(&self) -> &[Segment] {
        &self.segments
    }

    /// Points where two adjacent segments meet, sorted.
    pub fn boundary_points(&self) -> Vec<f64> {
        self.segments
            .windows(2)
            .filter(|w| w[0].hi == w[1].lo)
            .map(|w| w[0].hi)
            .collect()
    }

    /// Segments carrying `label`.
    pub fn intervals(&self, label: Decision) -> impl Iterator<Item = &Segment> {
        self.segments.iter().filter(move |s| s.label == label)
    }

    pub fn contains_label(&self, label: Decision) -> bool {
        self.intervals(label).next().is_some()
    }

    /// Number of maximal reject intervals.
    pub fn reject_interval_count(&self) -> usize {
        self.intervals(Decision::Reject).count()
    }

    /// Label of the point `x`, or `None` outside every segment.
    pub fn label_at(&self, x: f64) -> Option<Decision> {
        let i = self.segments.partition_point(|s| s.hi < x);
        let s = self.segments.get(i)?;
        if x < s.lo {
            return None;
        }
        if x == s.hi {
            if let Some(next) = self.segments.get(i + 1) {
                if next.lo == x && next.label.tie_rank() > s.label.tie_rank() {
                    return Some(next.label);
                }
            }
        }
        Some(s.label)
    }

    /// `p(ti, yj)`: class mass over every segment labeled `label`.
    pub fn mass(&self, model: &ClassModel, class: ClassId, label: Decision) -> f64 {
        self.intervals(label)
            .map(|s| {
                model
                    .class_mass(class, s.lo, s.hi)
                    .expect("segments are ordered")
            })
            .sum::<f64>()
            .max(0.0)
    }
}
