//! Threshold tables and the `k_min` sweep.

use std::io::Write;

use rayon::prelude::*;
use serde::Serialize;

use crate::bounds::{k_min, threshold_even, threshold_odd};
use crate::error::CoverError;
use crate::methods::consolidated_cover;
use crate::rational::Rational;
use crate::verify::verify_coverage;

#[derive(Clone, PartialEq, Eq, Debug)]
pub struct BoundsRow {
    pub p: u32,
    pub even: Rational,
    pub odd: Option<Rational>,
}

/// One row per `p = 1..=n`: `p/(n+1)` and, for `p < n`, `p/n`.
pub fn bounds_table(n: u32) -> Result<Vec<BoundsRow>, CoverError> {
    if n == 0 {
        return Err(CoverError::InvalidParameter("n must be at least 1".into()));
    }
    (1..=n)
        .map(|p| {
            Ok(BoundsRow {
                p,
                even: threshold_even(n, p)?,
                odd: threshold_odd(n, p).ok(),
            })
        })
        .collect()
}

pub fn format_bounds_table(n: u32, rows: &[BoundsRow]) -> String {
    let mut out = format!("n={n}\np,even=p/(n+1),odd=p/n\n");
    for row in rows {
        let odd = row
            .odd
            .as_ref()
            .map_or_else(|| "-".to_string(), |r| r.to_string());
        out.push_str(&format!("{},{},{}\n", row.p, row.even, odd));
    }
    out
}

#[derive(Clone, PartialEq, Eq, Debug, Serialize)]
pub struct SweepRow {
    pub n: u32,
    pub d: Rational,
    pub k_min: u64,
    pub method: String,
    pub verified: bool,
}

/// Interior grid `d = i / (points + 1)` for `i = 1..=points`.
pub fn sweep_grid(points: u32) -> Vec<Rational> {
    (1..=points)
        .map(|i| Rational::new(i64::from(i), i64::from(points) + 1))
        .collect()
}

/// For each `n` and grid `d`: the minimal count and whether the exact
/// verifier accepts the consolidated plan. Rows are ordered by `n`, then `d`.
pub fn sweep(n_min: u32, n_max: u32, points: u32) -> Result<Vec<SweepRow>, CoverError> {
    if n_min == 0 || n_min > n_max || points == 0 {
        return Err(CoverError::InvalidParameter(format!(
            "need 1 <= n_min <= n_max and grid_points >= 1, got {n_min}..{n_max}, {points}"
        )));
    }
    let grid = sweep_grid(points);
    let cases: Vec<(u32, Rational)> = (n_min..=n_max)
        .flat_map(|n| grid.iter().map(move |d| (n, d.clone())))
        .collect();
    cases
        .par_iter()
        .map(|(n, d)| {
            let best = k_min(*n, d)?;
            let plan = consolidated_cover(*n, d)?;
            let verified =
                plan.count() as u64 == best.count && verify_coverage(&plan, &plan.target()).covered;
            Ok(SweepRow {
                n: *n,
                d: d.clone(),
                k_min: best.count,
                method: best.method.to_string(),
                verified,
            })
        })
        .collect()
}

/// CSV with header `n,d,k_min,method,verified`.
pub fn write_sweep_csv<W: Write>(rows: &[SweepRow], writer: W) -> csv::Result<()> {
    let mut csv = csv::Writer::from_writer(writer);
    for row in rows {
        csv.serialize(row)?;
    }
    csv.flush()?;
    Ok(())
}
