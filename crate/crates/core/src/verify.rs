//! Exact coverage decisions.
//!
//! [`verify_coverage`] is a decision procedure. Every triangle edge in the
//! canonical frame is horizontal, vertical (`x = a`) or anti-diagonal
//! (`x + y = c`), so each horizontal cross-section endpoint is either
//! constant or `c - y`. Critical levels are every vertex height plus every
//! height where a vertical and an anti-diagonal edge cross within both
//! spans. Between two consecutive critical levels the order relation of all
//! endpoints (target included) is fixed, so coverage on the open slab is
//! decided by any interior height. We check each critical level and each
//! slab midpoint with exact 1D closed-interval union containment.
//!
//! [`sample_check`] is an independent one-sided oracle: it can only find
//! gaps, never certify coverage.

use std::collections::BTreeSet;

use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;
use rayon::prelude::*;

use crate::geometry::{CoveringPlan, Interval, Orientation, Placement, Point2, TargetTriangle};
use crate::rational::Rational;

#[derive(Clone, Copy, PartialEq, Eq, Debug)]
pub enum CheckMethod {
    ExactSlab,
    Sampling,
}

#[derive(Clone, PartialEq, Eq, Debug)]
pub struct CoverageReport {
    pub covered: bool,
    /// A target point lying in no placement.
    pub witness: Option<Point2>,
    /// Distinct critical levels found (0 for sampling).
    pub critical_levels: usize,
    pub checked_method: CheckMethod,
}

struct Edge {
    value: Rational,
    lo: Rational,
    hi: Rational,
}

fn spans_contain(edge: &Edge, y: &Rational) -> bool {
    &edge.lo <= y && y <= &edge.hi
}

/// Vertical edges `x = value` and anti-diagonal edges `x + y = value`.
fn edges(placements: &[Placement], target: &TargetTriangle) -> (Vec<Edge>, Vec<Edge>) {
    let l = target.side();
    let mut verticals = vec![Edge {
        value: Rational::zero(),
        lo: Rational::zero(),
        hi: l.clone(),
    }];
    let mut diagonals = vec![Edge {
        value: l.clone(),
        lo: Rational::zero(),
        hi: l,
    }];
    for p in placements {
        let (lo, hi) = p.y_extent();
        let Point2 { x, y } = &p.anchor;
        let (vx, c) = match p.orientation {
            Orientation::Up => (x.clone(), x + y + Rational::one()),
            Orientation::Down => (x + Rational::one(), x + y),
        };
        verticals.push(Edge {
            value: vx,
            lo: lo.clone(),
            hi: hi.clone(),
        });
        diagonals.push(Edge { value: c, lo, hi });
    }
    (verticals, diagonals)
}

/// Sorted, deduplicated critical heights within `[0, L]`.
pub fn critical_levels(placements: &[Placement], target: &TargetTriangle) -> Vec<Rational> {
    let l = target.side();
    let zero = Rational::zero();
    let in_range = |y: &Rational| y >= &zero && y <= &l;
    let mut levels = BTreeSet::new();
    levels.insert(zero.clone());
    levels.insert(l.clone());
    for p in placements {
        let (lo, hi) = p.y_extent();
        for y in [lo, hi] {
            if in_range(&y) {
                levels.insert(y);
            }
        }
    }
    let (verticals, diagonals) = edges(placements, target);
    for v in &verticals {
        for g in &diagonals {
            if v.hi < g.lo || g.hi < v.lo {
                continue;
            }
            let y = &g.value - &v.value;
            if in_range(&y) && spans_contain(v, &y) && spans_contain(g, &y) {
                levels.insert(y);
            }
        }
    }
    levels.into_iter().collect()
}

/// First uncovered x of `target` at height `y`, if any.
fn gap_at(placements: &[Placement], target: &Interval, y: &Rational) -> Option<Rational> {
    let mut pieces: Vec<Interval> = placements
        .iter()
        .filter_map(|p| p.cross_section(y))
        .filter(|iv| iv.hi >= target.lo && iv.lo <= target.hi)
        .collect();
    pieces.sort_by(|a, b| a.lo.cmp(&b.lo));
    let (tlo, thi) = (&target.lo, &target.hi);
    let mut reach: Option<Rational> = None;
    for iv in pieces {
        match &reach {
            None => {
                if &iv.lo > tlo {
                    return Some(tlo.midpoint(&iv.lo.min(thi.clone())));
                }
                reach = Some(iv.hi);
            }
            Some(r) => {
                if r >= thi {
                    return None;
                }
                if &iv.lo > r {
                    return Some(r.midpoint(&iv.lo.min(thi.clone())));
                }
                if &iv.hi > r {
                    reach = Some(iv.hi);
                }
            }
        }
    }
    match reach {
        None => Some(tlo.midpoint(thi)),
        Some(r) if &r < thi => Some(r.midpoint(thi)),
        Some(_) => None,
    }
}

/// Exact verdict on whether the closed placements cover the closed target.
pub fn verify_placements(placements: &[Placement], target: &TargetTriangle) -> CoverageReport {
    let levels = critical_levels(placements, target);
    let mut probes = Vec::with_capacity(2 * levels.len());
    for (i, y) in levels.iter().enumerate() {
        probes.push(y.clone());
        if let Some(next) = levels.get(i + 1) {
            probes.push(y.midpoint(next));
        }
    }
    let witness = probes.par_iter().find_map_first(|y| {
        let span = target.cross_section(y)?;
        gap_at(placements, &span, y).map(|x| Point2::new(x, y.clone()))
    });
    CoverageReport {
        covered: witness.is_none(),
        witness,
        critical_levels: levels.len(),
        checked_method: CheckMethod::ExactSlab,
    }
}

pub fn verify_coverage(plan: &CoveringPlan, target: &TargetTriangle) -> CoverageReport {
    verify_placements(&plan.placements, target)
}

/// Grid resolution for sampling: points are `(L i / G, L k / G)`.
pub const SAMPLE_GRID: i64 = 1 << 20;

/// Randomized gap search on a fine rational grid inside the target.
///
/// Deterministic for a given seed. Reports the first sampled point that no
/// placement contains.
pub fn sample_check(
    plan: &CoveringPlan,
    target: &TargetTriangle,
    seed: u64,
    count: usize,
) -> CoverageReport {
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    let step = target.side() / Rational::from_int(SAMPLE_GRID);
    let mut witness = None;
    for _ in 0..count.max(1) {
        let (i, k) = loop {
            let i = rng.gen_range(0..=SAMPLE_GRID);
            let k = rng.gen_range(0..=SAMPLE_GRID);
            if i + k <= SAMPLE_GRID {
                break (i, k);
            }
        };
        let point = Point2::new(&step * Rational::from_int(i), &step * Rational::from_int(k));
        if !plan.placements.iter().any(|p| p.contains(&point)) {
            witness = Some(point);
            break;
        }
    }
    CoverageReport {
        covered: witness.is_none(),
        witness,
        critical_levels: 0,
        checked_method: CheckMethod::Sampling,
    }
}

/// True iff `witness` lies in the target and in no placement.
pub fn witness_is_valid(
    placements: &[Placement],
    target: &TargetTriangle,
    witness: &Point2,
) -> bool {
    target.contains(witness) && !placements.iter().any(|p| p.contains(witness))
}
