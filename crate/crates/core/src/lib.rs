//! Coverings of a triangle of side `n + d` by homothetic unit triangles.
//!
//! The crate builds the known covering families (grid, naive, the first
//! Conway–Soifer method and its generalization, the Baek–Lee `n^2 + 3`
//! method, and the even/odd slide constructions with their consolidated
//! selector), decides coverage exactly with rational arithmetic, and
//! evaluates the tight thresholds `p/(n+1)` and `p/n`.
//!
//! All work happens in a canonical frame where the target is the right
//! isosceles triangle `(0,0), (L,0), (0,L)`; see [`geometry`].
//!
//! ```
//! use tricover::{consolidated_cover, verify_coverage, Rational};
//!
//! let d: Rational = "2/3".parse().unwrap();
//! let plan = consolidated_cover(3, &d).unwrap();
//! assert_eq!(plan.count(), 14);
//! assert!(verify_coverage(&plan, &plan.target()).covered);
//! ```

pub mod bounds;
pub mod error;
pub mod geometry;
pub mod io;
pub mod methods;
pub mod rational;
pub mod verify;
pub mod width;

pub use bounds::{
    infeasibility_delta, k_min, reference_thresholds_intermediate, select_j_even, select_j_odd,
    threshold_even, threshold_odd, BoundsRecord, KMin, Parity,
};
pub use error::CoverError;
pub use geometry::{
    AffineMap, CoveringPlan, Interval, Method, Orientation, Placement, Point2, TargetTriangle,
};
pub use methods::{
    bl3_cover, build_row, consolidated_cover, cs1_cover, cs1_generalized_cover, even_cover,
    even_cover_auto, grid_cover, naive_cover, odd_cover, odd_cover_auto, plan_threshold, RowSpec,
    SlideKind,
};
pub use rational::Rational;
pub use verify::{sample_check, verify_coverage, verify_placements, CheckMethod, CoverageReport};
pub use width::{pointwise_necessity_check, width_identity_check, WidthFunction, WidthTerm};
