//! File formats: plan JSON, SVG figures and CSV tables.

pub mod document;
pub mod svg;
pub mod tables;

pub use document::{plan_from_json, plan_to_json, DocumentError, PlacementRecord, PlanDocument};
pub use svg::{render_svg, Frame, RenderOptions};
pub use tables::{bounds_table, format_bounds_table, sweep, write_sweep_csv, BoundsRow, SweepRow};
