//! JSON plan files.
//!
//! ```json
//! {
//!   "version": 1,
//!   "n": 3,
//!   "d": "2/3",
//!   "method": "odd_full",
//!   "j": 3,
//!   "count": 14,
//!   "placements": [{ "o": "U", "x": "0", "y": "11/3" }, ...]
//! }
//! ```
//!
//! Every rational is a string in lowest terms (`p/q` or an integer), never a
//! JSON number.

use serde::{Deserialize, Serialize};
use thiserror::Error;

use crate::geometry::{CoveringPlan, Method, Orientation, Placement, Point2, TargetTriangle};
use crate::rational::Rational;

pub const PLAN_VERSION: u32 = 1;

#[derive(Debug, Error)]
pub enum DocumentError {
    #[error("malformed plan JSON: {0}")]
    Json(#[from] serde_json::Error),
    #[error("unsupported plan version {0}")]
    Version(u32),
    #[error("count {count} does not match {actual} placements")]
    CountMismatch { count: usize, actual: usize },
    #[error("invalid plan: {0}")]
    Invalid(String),
}

#[derive(Clone, PartialEq, Eq, Debug, Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct PlacementRecord {
    pub o: Orientation,
    pub x: Rational,
    pub y: Rational,
}

#[derive(Clone, PartialEq, Eq, Debug, Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct PlanDocument {
    pub version: u32,
    pub n: u32,
    pub d: Rational,
    pub method: Method,
    #[serde(default)]
    pub j: Option<u32>,
    pub count: usize,
    pub placements: Vec<PlacementRecord>,
}

impl PlanDocument {
    pub fn from_plan(plan: &CoveringPlan) -> Self {
        PlanDocument {
            version: PLAN_VERSION,
            n: plan.n,
            d: plan.d.clone(),
            method: plan.method,
            j: plan.j,
            count: plan.count(),
            placements: plan
                .placements
                .iter()
                .map(|p| PlacementRecord {
                    o: p.orientation,
                    x: p.anchor.x.clone(),
                    y: p.anchor.y.clone(),
                })
                .collect(),
        }
    }

    pub fn into_plan(self) -> Result<CoveringPlan, DocumentError> {
        if self.version != PLAN_VERSION {
            return Err(DocumentError::Version(self.version));
        }
        if self.count != self.placements.len() {
            return Err(DocumentError::CountMismatch {
                count: self.count,
                actual: self.placements.len(),
            });
        }
        TargetTriangle::new(self.n, self.d.clone())
            .map_err(|e| DocumentError::Invalid(e.to_string()))?;
        Ok(CoveringPlan {
            n: self.n,
            d: self.d,
            method: self.method,
            j: self.j,
            placements: self
                .placements
                .into_iter()
                .map(|r| Placement {
                    orientation: r.o,
                    anchor: Point2::new(r.x, r.y),
                })
                .collect(),
        })
    }

    pub fn to_json(&self) -> String {
        let mut text = serde_json::to_string_pretty(self).expect("plan documents always serialize");
        text.push('\n');
        text
    }

    pub fn from_json(text: &str) -> Result<Self, DocumentError> {
        Ok(serde_json::from_str(text)?)
    }
}

pub fn plan_to_json(plan: &CoveringPlan) -> String {
    PlanDocument::from_plan(plan).to_json()
}

pub fn plan_from_json(text: &str) -> Result<CoveringPlan, DocumentError> {
    PlanDocument::from_json(text)?.into_plan()
}
