//! Covering constructions built from two row-level slide operations.
//!
//! A row is an alternating strip `Up, Down, Up, ..., Up`. Rows are stacked
//! from the apex `(0, L)` downward with their leftmost up-triangle on the
//! vertical leg `x = 0`; bottom rows may reach below `y = 0` when a method
//! has slack, and triangles may spill past the hypotenuse.
//!
//! * Up-left slide by `s`: each down-triangle moves by `s` along `(-1, +1)`
//!   and every later triangle shifts left by `s`. The row gets taller
//!   (`1 + s`) and its base narrower (`m - (m-1)s` for `m` ups).
//! * Down-right slide by `s`: each down-triangle moves by `s` along
//!   `(+1, -1)` and pushes later triangles right by `s`. The row gets
//!   shorter (`1 - s`) and its base wider (`m + (m-1)s`).
//!
//! In both cases a down-triangle's hypotenuse stays on the same line as the
//! hypotenuse of the up-triangle before it, and its vertical leg coincides
//! with the left leg of the up-triangle after it, so the strip has no holes.

use crate::bounds::{
    even_method_threshold, even_slide, odd_method_threshold, odd_slide, p_even, p_odd,
    select_j_even, select_j_odd,
};
use crate::error::CoverError;
use crate::geometry::{CoveringPlan, Method, Placement, Point2};
use crate::rational::Rational;

#[derive(Clone, Copy, PartialEq, Eq, Debug)]
pub enum SlideKind {
    None,
    UpLeft,
    DownRight,
}

#[derive(Clone, PartialEq, Eq, Debug)]
pub struct RowSpec {
    pub index: u32,
    pub up_count: u32,
    pub slide: Rational,
    pub slide_kind: SlideKind,
    pub base_y: Rational,
    pub left_x: Rational,
}

impl RowSpec {
    pub fn down_count(&self) -> u32 {
        self.up_count.saturating_sub(1)
    }

    /// Width of the row along its base line.
    pub fn base_width(&self) -> Rational {
        let m = Rational::from(self.up_count);
        let gaps = Rational::from(self.down_count());
        match self.slide_kind {
            SlideKind::None => m,
            SlideKind::UpLeft => m - gaps * &self.slide,
            SlideKind::DownRight => m + gaps * &self.slide,
        }
    }

    pub fn height(&self) -> Rational {
        match self.slide_kind {
            SlideKind::None => Rational::one(),
            SlideKind::UpLeft => Rational::one() + &self.slide,
            SlideKind::DownRight => Rational::one() - &self.slide,
        }
    }
}

/// Placements of one row, in left-to-right order.
pub fn build_row(spec: &RowSpec) -> Result<Vec<Placement>, CoverError> {
    let s = &spec.slide;
    if spec.up_count == 0 {
        return Err(CoverError::InvalidParameter(
            "a row needs at least one up-triangle".into(),
        ));
    }
    if s.is_negative() || s >= &Rational::one() {
        return Err(CoverError::InvalidParameter(format!(
            "slide {s} must satisfy 0 <= s < 1"
        )));
    }
    if spec.slide_kind == SlideKind::None && !s.is_zero() {
        return Err(CoverError::InvalidParameter(
            "an unslid row has slide 0".into(),
        ));
    }
    let one = Rational::one();
    let (pitch, down_dx, down_y) = match spec.slide_kind {
        SlideKind::None => (one.clone(), Rational::zero(), &spec.base_y + &one),
        SlideKind::UpLeft => (&one - s, -s, &spec.base_y + &one + s),
        SlideKind::DownRight => (&one + s, s.clone(), &spec.base_y + &one - s),
    };
    let mut row = Vec::with_capacity(2 * spec.up_count as usize - 1);
    let mut x = spec.left_x.clone();
    for i in 0..spec.up_count {
        row.push(Placement::up(x.clone(), spec.base_y.clone()));
        if i + 1 < spec.up_count {
            row.push(Placement::down(&x + &down_dx, down_y.clone()));
        }
        x += &pitch;
    }
    Ok(row)
}

/// Grid covering of `T_size` with its apex at `apex`.
fn grid_block(size: u32, apex: &Point2) -> Vec<Placement> {
    let mut out = Vec::with_capacity((size * size) as usize);
    for k in 1..=size {
        let spec = RowSpec {
            index: k,
            up_count: k,
            slide: Rational::zero(),
            slide_kind: SlideKind::None,
            base_y: &apex.y - Rational::from(k),
            left_x: apex.x.clone(),
        };
        out.extend(build_row(&spec).expect("unslid rows are always valid"));
    }
    out
}

fn apex(n: u32, d: &Rational) -> Point2 {
    Point2::new(Rational::zero(), Rational::from(n) + d)
}

fn check_open_d(d: &Rational) -> Result<(), CoverError> {
    if !d.is_positive() || d >= &Rational::one() {
        return Err(CoverError::InvalidParameter(format!(
            "d = {d} must satisfy 0 < d < 1"
        )));
    }
    Ok(())
}

fn check_n(n: u32, min: u32) -> Result<(), CoverError> {
    if n < min {
        return Err(CoverError::InvalidParameter(format!(
            "n must be at least {min}, got {n}"
        )));
    }
    Ok(())
}

fn check_threshold(
    method: Method,
    d: &Rational,
    threshold: Rational,
    force: bool,
) -> Result<(), CoverError> {
    if !force && d > &threshold {
        return Err(CoverError::ThresholdExceeded {
            method,
            threshold: Box::new(threshold),
            d: Box::new(d.clone()),
        });
    }
    Ok(())
}

/// The `n^2` grid covering of `T_n`.
pub fn grid_cover(n: u32) -> Result<CoveringPlan, CoverError> {
    check_n(n, 1)?;
    Ok(CoveringPlan {
        n,
        d: Rational::zero(),
        method: Method::Grid,
        j: None,
        placements: grid_block(n, &apex(n, &Rational::zero())),
    })
}

/// A `T_{n+1}` grid hung from the apex: `(n+1)^2` triangles, always covers.
pub fn naive_cover(n: u32, d: &Rational) -> Result<CoveringPlan, CoverError> {
    check_n(n, 1)?;
    check_open_d(d)?;
    Ok(CoveringPlan {
        n,
        d: d.clone(),
        method: Method::Naive,
        j: None,
        placements: grid_block(n + 1, &apex(n, d)),
    })
}

/// `T_{n-1}` grid above a bottom row of `n + q` ups slid up-left by `d`.
fn conway_soifer_rows(n: u32, d: &Rational, q: u32) -> Vec<Placement> {
    let mut placements = grid_block(n - 1, &apex(n, d));
    let bottom = RowSpec {
        index: n,
        up_count: n + q,
        slide: d.clone(),
        slide_kind: SlideKind::UpLeft,
        base_y: Rational::zero(),
        left_x: Rational::zero(),
    };
    placements.extend(build_row(&bottom).expect("0 < d < 1 checked by caller"));
    placements
}

/// First Conway–Soifer method: `n^2 + 2`, covers iff `d <= 1/(n+1)`.
pub fn cs1_cover(n: u32, d: &Rational, force: bool) -> Result<CoveringPlan, CoverError> {
    check_n(n, 1)?;
    check_open_d(d)?;
    check_threshold(Method::Cs1, d, Rational::new(1, i64::from(n) + 1), force)?;
    Ok(CoveringPlan {
        n,
        d: d.clone(),
        method: Method::Cs1,
        j: None,
        placements: conway_soifer_rows(n, d, 1),
    })
}

/// Least `q >= 1` with `d <= q/(n+q)`, i.e. `ceil(nd/(1-d))`.
pub fn cs1_generalized_pairs(n: u32, d: &Rational) -> Result<u32, CoverError> {
    check_n(n, 1)?;
    check_open_d(d)?;
    let bound = Rational::from(n) * d / (Rational::one() - d);
    let q = bound.ceil_i64().max(1);
    Ok(u32::try_from(q).unwrap_or(u32::MAX))
}

/// Generalized first Conway–Soifer method: `n^2 + 2q` with the least
/// workable `q`, falling back to [`naive_cover`] once `q > n` (`d > 1/2`).
pub fn cs1_generalized_cover(n: u32, d: &Rational) -> Result<CoveringPlan, CoverError> {
    let q = cs1_generalized_pairs(n, d)?;
    if q > n {
        return naive_cover(n, d);
    }
    Ok(CoveringPlan {
        n,
        d: d.clone(),
        method: Method::Cs1Generalized,
        j: None,
        placements: conway_soifer_rows(n, d, q),
    })
}

/// Basic even method: rows `1..j-1` form a `T_{j-1}` grid; each row
/// `k >= j` gets one extra pair and an up-left slide of `j/(k(k+1))`.
/// Uses `n^2 + 2(n - j + 1)` triangles and covers iff `d <= 1 - j/(n+1)`.
pub fn even_cover(n: u32, d: &Rational, j: u32, force: bool) -> Result<CoveringPlan, CoverError> {
    check_n(n, 1)?;
    check_open_d(d)?;
    if j == 0 || j > n {
        return Err(CoverError::InvalidParameter(format!(
            "even method needs 1 <= j <= n, got j = {j}, n = {n}"
        )));
    }
    check_threshold(Method::EvenBasic, d, even_method_threshold(n, j), force)?;
    let top = apex(n, d);
    let mut placements = grid_block(j - 1, &top);
    // Each row's height is 1 + s_k; its base sits k + S_k below the apex.
    let mut slid_total = Rational::zero();
    for k in j..=n {
        let s = even_slide(j, k);
        slid_total += &s;
        let spec = RowSpec {
            index: k,
            up_count: k + 1,
            slide: s,
            slide_kind: SlideKind::UpLeft,
            base_y: &top.y - Rational::from(k) - &slid_total,
            left_x: Rational::zero(),
        };
        placements.extend(build_row(&spec)?);
    }
    Ok(CoveringPlan {
        n,
        d: d.clone(),
        method: Method::EvenBasic,
        j: Some(j),
        placements,
    })
}

/// Full even method: `j = floor((1-d)(n+1))`, naive when that is 0.
pub fn even_cover_auto(n: u32, d: &Rational) -> Result<CoveringPlan, CoverError> {
    let j = select_j_even(n, d)?;
    if j == 0 {
        return naive_cover(n, d);
    }
    let mut plan = even_cover(n, d, j, false)?;
    plan.method = Method::EvenFull;
    Ok(plan)
}

/// Baek–Lee `n^2 + 3` method, covers iff `d <= 1/n`.
///
/// The bottom row has `n` ups with the first `n - 1` downs slid up-left by
/// `1/n`; the last slid up, one unslid down and two extra ups form a `T_2`
/// block at its right end. A `T_{n-1}` grid hangs from the apex and rests on
/// the slid downs.
pub fn bl3_cover(n: u32, d: &Rational, force: bool) -> Result<CoveringPlan, CoverError> {
    check_n(n, 2)?;
    check_open_d(d)?;
    check_threshold(Method::Bl3, d, Rational::new(1, i64::from(n)), force)?;
    let s = Rational::new(1, i64::from(n));
    let one = Rational::one();
    let base_y = d - &s;
    let mut placements = grid_block(n - 1, &apex(n, d));
    let slid = RowSpec {
        index: n,
        up_count: n,
        slide: s.clone(),
        slide_kind: SlideKind::UpLeft,
        base_y: base_y.clone(),
        left_x: Rational::zero(),
    };
    placements.extend(build_row(&slid)?);
    let last_x = Rational::from(n - 1) * (&one - &s);
    placements.push(Placement::down(last_x.clone(), &base_y + &one));
    placements.push(Placement::up(&last_x + &one, base_y.clone()));
    placements.push(Placement::up(last_x, &base_y + &one));
    Ok(CoveringPlan {
        n,
        d: d.clone(),
        method: Method::Bl3,
        j: None,
        placements,
    })
}

/// Basic odd method: rows `1..j-1` (a `T_2` top row plus one extra pair on
/// each of rows `2..j-1`) together form a `T_j` grid; rows `k >= j` keep
/// their `k` ups and take a down-right slide of `(j-1)/(k(k-1))`.
/// Uses `n^2 + 2(j-1) + 1` triangles and covers iff `d <= (j-1)/n`.
pub fn odd_cover(n: u32, d: &Rational, j: u32, force: bool) -> Result<CoveringPlan, CoverError> {
    check_n(n, 2)?;
    check_open_d(d)?;
    if j < 2 || j > n {
        return Err(CoverError::InvalidParameter(format!(
            "odd method needs 2 <= j <= n, got j = {j}, n = {n}"
        )));
    }
    check_threshold(Method::OddBasic, d, odd_method_threshold(n, j), force)?;
    let top = apex(n, d);
    let mut placements = grid_block(j, &top);
    let mut depth = Rational::from(j);
    for k in j..=n {
        let s = odd_slide(j, k);
        depth += Rational::one() - &s;
        let spec = RowSpec {
            index: k,
            up_count: k,
            slide: s,
            slide_kind: SlideKind::DownRight,
            base_y: &top.y - &depth,
            left_x: Rational::zero(),
        };
        placements.extend(build_row(&spec)?);
    }
    Ok(CoveringPlan {
        n,
        d: d.clone(),
        method: Method::OddBasic,
        j: Some(j),
        placements,
    })
}

/// Full odd method: `j = ceil(dn + 1)`, naive when that is `n + 1`.
pub fn odd_cover_auto(n: u32, d: &Rational) -> Result<CoveringPlan, CoverError> {
    let j = select_j_odd(n, d)?;
    if j == n + 1 {
        return naive_cover(n, d);
    }
    let mut plan = odd_cover(n, d, j, false)?;
    plan.method = Method::OddFull;
    Ok(plan)
}

/// Uses the full odd method when `p_odd < p_even`, the full even method otherwise.
pub fn consolidated_cover(n: u32, d: &Rational) -> Result<CoveringPlan, CoverError> {
    if p_odd(n, d)? < p_even(n, d)? {
        odd_cover_auto(n, d)
    } else {
        even_cover_auto(n, d)
    }
}

/// Largest `d` the given plan's construction is designed to cover.
pub fn plan_threshold(plan: &CoveringPlan) -> Rational {
    let n = plan.n;
    match (plan.method, plan.j) {
        (Method::Grid, _) => Rational::zero(),
        (Method::Naive, _) => Rational::one(),
        (Method::Cs1, _) => Rational::new(1, i64::from(n) + 1),
        (Method::Cs1Generalized, _) => {
            let q = i64::from(cs1_generalized_pairs(n, &plan.d).unwrap_or(1));
            Rational::new(q, i64::from(n) + q)
        }
        (Method::EvenBasic | Method::EvenFull, Some(j)) => even_method_threshold(n, j),
        (Method::OddBasic | Method::OddFull, Some(j)) => odd_method_threshold(n, j),
        (Method::Bl3, _) => Rational::new(1, i64::from(n)),
        _ => Rational::zero(),
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::rational::q;

    fn r(v: i64) -> Rational {
        Rational::from_int(v)
    }

    #[test]
    fn unslid_row() {
        let spec = RowSpec {
            index: 3,
            up_count: 3,
            slide: r(0),
            slide_kind: SlideKind::None,
            base_y: r(0),
            left_x: r(0),
        };
        assert_eq!(
            build_row(&spec).unwrap(),
            vec![
                Placement::up(r(0), r(0)),
                Placement::down(r(0), r(1)),
                Placement::up(r(1), r(0)),
                Placement::down(r(1), r(1)),
                Placement::up(r(2), r(0)),
            ]
        );
    }

    #[test]
    fn up_left_row_example() {
        let spec = RowSpec {
            index: 1,
            up_count: 2,
            slide: q(1, 2),
            slide_kind: SlideKind::UpLeft,
            base_y: q(7, 6),
            left_x: r(0),
        };
        assert_eq!(
            build_row(&spec).unwrap(),
            vec![
                Placement::up(r(0), q(7, 6)),
                Placement::down(q(-1, 2), q(8, 3)),
                Placement::up(q(1, 2), q(7, 6)),
            ]
        );
        assert_eq!(spec.base_width(), q(3, 2));
    }

    #[test]
    fn down_right_row_example() {
        let spec = RowSpec {
            index: 3,
            up_count: 3,
            slide: q(1, 3),
            slide_kind: SlideKind::DownRight,
            base_y: r(0),
            left_x: r(0),
        };
        let row = build_row(&spec).unwrap();
        assert_eq!(
            row,
            vec![
                Placement::up(r(0), r(0)),
                Placement::down(q(1, 3), q(2, 3)),
                Placement::up(q(4, 3), r(0)),
                Placement::down(q(5, 3), q(2, 3)),
                Placement::up(q(8, 3), r(0)),
            ]
        );
        assert_eq!(&row[4].anchor.x + r(1), q(11, 3));
        assert_eq!(spec.base_width(), q(11, 3));
    }

    #[test]
    fn build_row_rejects_bad_specs() {
        let mut spec = RowSpec {
            index: 1,
            up_count: 2,
            slide: r(1),
            slide_kind: SlideKind::UpLeft,
            base_y: r(0),
            left_x: r(0),
        };
        assert!(build_row(&spec).is_err());
        spec.slide = q(1, 2);
        spec.slide_kind = SlideKind::None;
        assert!(build_row(&spec).is_err());
        spec.slide_kind = SlideKind::UpLeft;
        spec.up_count = 0;
        assert!(build_row(&spec).is_err());
    }

    #[test]
    fn counts_for_examples() {
        assert_eq!(
            grid_cover(1).unwrap().placements,
            vec![Placement::up(r(0), r(0))]
        );
        assert_eq!(grid_cover(3).unwrap().count(), 9);
        assert_eq!(naive_cover(2, &q(9, 10)).unwrap().count(), 9);
        assert_eq!(naive_cover(4, &q(1, 2)).unwrap().count(), 25);
        assert_eq!(cs1_cover(2, &q(1, 3), false).unwrap().count(), 6);
        assert_eq!(cs1_cover(8, &q(1, 10), false).unwrap().count(), 66);
        assert_eq!(cs1_generalized_cover(4, &q(1, 3)).unwrap().count(), 20);
        assert_eq!(cs1_generalized_cover(4, &q(1, 5)).unwrap().count(), 18);
        let reverted = cs1_generalized_cover(3, &q(3, 5)).unwrap();
        assert_eq!((reverted.count(), reverted.method), (16, Method::Naive));
        assert_eq!(even_cover(2, &q(2, 3), 1, false).unwrap().count(), 8);
        assert_eq!(even_cover(2, &q(1, 3), 2, false).unwrap().count(), 6);
        let full = even_cover_auto(4, &q(3, 10)).unwrap();
        assert_eq!((full.j, full.count()), (Some(3), 20));
        assert_eq!(even_cover_auto(1, &q(99, 100)).unwrap().count(), 4);
        assert_eq!(even_cover_auto(5, &q(1, 2)).unwrap().count(), 31);
        assert_eq!(bl3_cover(3, &q(1, 3), false).unwrap().count(), 12);
        assert_eq!(bl3_cover(5, &q(1, 5), false).unwrap().count(), 28);
        assert_eq!(odd_cover(3, &q(2, 3), 3, false).unwrap().count(), 14);
        assert_eq!(odd_cover(4, &q(1, 4), 2, false).unwrap().count(), 19);
        assert_eq!(odd_cover_auto(4, &q(9, 20)).unwrap().count(), 21);
        assert_eq!(odd_cover_auto(2, &q(99, 100)).unwrap().count(), 9);
    }

    #[test]
    fn threshold_refusals_carry_the_bound() {
        let err = cs1_cover(2, &q(1, 2), false).unwrap_err();
        assert!(
            matches!(err, CoverError::ThresholdExceeded { ref threshold, .. } if **threshold == q(1, 3))
        );
        let err = even_cover(2, &q(2, 3), 2, false).unwrap_err();
        assert!(
            matches!(err, CoverError::ThresholdExceeded { ref threshold, .. } if **threshold == q(1, 3))
        );
        let err = odd_cover(3, &q(3, 4), 3, false).unwrap_err();
        assert!(
            matches!(err, CoverError::ThresholdExceeded { ref threshold, .. } if **threshold == q(2, 3))
        );
        let err = bl3_cover(3, &q(1, 2), false).unwrap_err();
        assert!(
            matches!(err, CoverError::ThresholdExceeded { ref threshold, .. } if **threshold == q(1, 3))
        );
        assert!(cs1_cover(2, &q(1, 2), true).is_ok());
    }

    #[test]
    fn parameter_validation() {
        assert!(grid_cover(0).is_err());
        assert!(naive_cover(2, &r(0)).is_err());
        assert!(even_cover(3, &q(1, 2), 0, false).is_err());
        assert!(even_cover(3, &q(1, 2), 4, false).is_err());
        assert!(odd_cover(3, &q(1, 2), 1, false).is_err());
        assert!(odd_cover(3, &q(1, 2), 4, false).is_err());
        assert!(bl3_cover(1, &q(1, 2), false).is_err());
    }

    #[test]
    fn consolidated_picks_by_rule() {
        let a = consolidated_cover(4, &q(3, 10)).unwrap();
        assert_eq!((a.method, a.count()), (Method::EvenFull, 20));
        let b = consolidated_cover(4, &q(9, 20)).unwrap();
        assert_eq!((b.method, b.count()), (Method::OddFull, 21));
        let c = consolidated_cover(3, &q(2, 3)).unwrap();
        assert_eq!((c.method, c.count()), (Method::OddFull, 14));
    }

    #[test]
    fn odd_rows_interface_widths_match() {
        // Bottom of row k equals top of row k+1: k + (j-1)/k.
        for n in 2..=12u32 {
            for j in 2..=n {
                for k in j..n {
                    let sk = odd_slide(j, k);
                    let sk1 = odd_slide(j, k + 1);
                    let bottom = Rational::from(k) + Rational::from(k - 1) * &sk;
                    let top = Rational::from(k) + Rational::from(k + 1) * &sk1;
                    let want = Rational::from(k) + Rational::new(i64::from(j) - 1, i64::from(k));
                    assert_eq!(bottom, want);
                    assert_eq!(top, want);
                }
            }
        }
    }
}
