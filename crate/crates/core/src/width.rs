//! Folded width functions.
//!
//! For a triangle `T` with a horizontal leg, `f_T(t)` for `t` in `[0, 1)` is
//! the total width of `T` along the lines `y = t + k`, `k` an integer. A
//! unit up-triangle with leg at height `y` contributes `1 - {t - a}` and a
//! unit down-triangle contributes `{t - a}`, where `a = {y}` and `{x}` is
//! `x` modulo 1. Sums of these generators have an integer slope `m` and a
//! half-integer integral `b/2` with `b - m` even.
//!
//! Targets of non-integer side are not sums of generators: their function
//! also carries a constant and a clipped ramp `max(0, d - t)`.

use crate::error::CoverError;
use crate::geometry::{CoveringPlan, Orientation, Placement, TargetTriangle};
use crate::methods::grid_cover;
use crate::rational::Rational;

/// One generator: `sign = +1` is `t -> {t - a}` (down-triangle, slope +1),
/// `sign = -1` is `t -> 1 - {t - a}` (up-triangle, slope -1).
#[derive(Clone, PartialEq, Eq, Debug)]
pub struct WidthTerm {
    pub sign: i8,
    pub offset: Rational,
}

impl WidthTerm {
    fn eval(&self, t: &Rational) -> Rational {
        let phase = (t - &self.offset).fract_mod1();
        if self.sign > 0 {
            phase
        } else {
            Rational::one() - phase
        }
    }

    /// Value for the closed triangle: a down-triangle's top leg counts at `t = a`.
    fn eval_closed(&self, t: &Rational) -> Rational {
        if self.sign > 0 {
            Rational::one() - (&self.offset - t).fract_mod1()
        } else {
            self.eval(t)
        }
    }
}

#[derive(Clone, PartialEq, Eq, Debug, Default)]
pub struct WidthFunction {
    pub terms: Vec<WidthTerm>,
    pub constant: Rational,
    /// Breakpoints `c` of clipped ramps `t -> max(0, c - t)`.
    pub ramps: Vec<Rational>,
}

impl WidthFunction {
    pub fn of_placement(p: &Placement) -> WidthFunction {
        let sign = match p.orientation {
            Orientation::Up => -1,
            Orientation::Down => 1,
        };
        WidthFunction {
            terms: vec![WidthTerm {
                sign,
                offset: p.leg_y().fract_mod1(),
            }],
            ..WidthFunction::default()
        }
    }

    pub fn of_placements(placements: &[Placement]) -> WidthFunction {
        WidthFunction {
            terms: placements
                .iter()
                .flat_map(|p| WidthFunction::of_placement(p).terms)
                .collect(),
            ..WidthFunction::default()
        }
    }

    pub fn of_plan(plan: &CoveringPlan) -> WidthFunction {
        WidthFunction::of_placements(&plan.placements)
    }

    /// `T_{n+d}` with its base on the x-axis:
    /// `n (1 - {t}) + (n(n+d) - n(n+1)/2) + max(0, d - t)`.
    pub fn of_target(target: &TargetTriangle) -> WidthFunction {
        let n = Rational::from(target.n());
        let d = target.d();
        let terms = (0..target.n())
            .map(|_| WidthTerm {
                sign: -1,
                offset: Rational::zero(),
            })
            .collect();
        let constant = &n * (&n + d) - &n * (&n + Rational::one()) / Rational::from_int(2);
        let ramps = if d.is_positive() {
            vec![d.clone()]
        } else {
            Vec::new()
        };
        WidthFunction {
            terms,
            constant,
            ramps,
        }
    }

    pub fn eval(&self, t: &Rational) -> Rational {
        let generators: Rational = self.terms.iter().map(|term| term.eval(t)).sum();
        generators + &self.constant + self.ramp_sum(t)
    }

    /// Like [`eval`](Self::eval) but counting closed down-triangle legs at
    /// their breakpoint, so it never undercounts a closed set's width.
    pub fn eval_closed(&self, t: &Rational) -> Rational {
        let generators: Rational = self.terms.iter().map(|term| term.eval_closed(t)).sum();
        generators + &self.constant + self.ramp_sum(t)
    }

    fn ramp_sum(&self, t: &Rational) -> Rational {
        self.ramps
            .iter()
            .map(|c| (c - t).max(Rational::zero()))
            .sum()
    }

    /// Slope of the generator part: `#down - #up`.
    pub fn slope(&self) -> i64 {
        self.terms.iter().map(|t| i64::from(t.sign)).sum()
    }

    /// Exact area under the function on `[0, 1)`.
    pub fn integral(&self) -> Rational {
        let half = Rational::new(1, 2);
        let generators = Rational::from_int(self.terms.len() as i64) * &half;
        let ramps: Rational = self.ramps.iter().map(|c| c * c * &half).sum();
        generators + &self.constant + ramps
    }

    /// Whether this is a finite sum of generators (plus an integer constant).
    pub fn is_generator_sum(&self) -> bool {
        self.ramps.is_empty() && self.constant.is_integer()
    }

    /// `integral = b/2` with `b` an integer and `b - m` even.
    pub fn half_integer_parity_holds(&self) -> bool {
        let b = self.integral() * Rational::from_int(2);
        if !b.is_integer() {
            return false;
        }
        let diff = b - Rational::from_int(self.slope());
        (diff / Rational::from_int(2)).is_integer()
    }

    /// Breakpoints of the piecewise-linear function, sorted and deduplicated.
    pub fn breakpoints(&self) -> Vec<Rational> {
        let mut pts: Vec<Rational> = self
            .terms
            .iter()
            .map(|t| t.offset.clone())
            .chain(self.ramps.iter().cloned())
            .collect();
        pts.sort();
        pts.dedup();
        pts
    }
}

/// `sum_k width(T_{n+d} at y = t + k)` by direct summation of cross-sections.
pub fn target_width_sum(target: &TargetTriangle, t: &Rational) -> Rational {
    let mut total = Rational::zero();
    let mut y = t.clone();
    while let Some(iv) = target.cross_section(&y) {
        total += iv.width();
        y += Rational::one();
    }
    total
}

fn check_t(t: &Rational) -> Result<(), CoverError> {
    if t.is_negative() || t >= &Rational::one() {
        return Err(CoverError::InvalidParameter(format!(
            "t = {t} must lie in [0, 1)"
        )));
    }
    Ok(())
}

/// Checks `f_{T_{n+d}}(t) = f_{T_n}(t) + nd + max(0, d - t)`.
///
/// The left side sums the target's cross-sections directly; `f_{T_n}` comes
/// from the generator terms of the `n^2` grid covering.
pub fn width_identity_check(n: u32, d: &Rational, t: &Rational) -> Result<bool, CoverError> {
    check_t(t)?;
    if !d.is_positive() {
        return Err(CoverError::InvalidParameter(format!(
            "d = {d} must be positive"
        )));
    }
    let big = TargetTriangle::new(n, d.clone())?;
    let lhs = target_width_sum(&big, t);
    let grid = WidthFunction::of_plan(&grid_cover(n)?);
    let rhs = grid.eval(t) + Rational::from(n) * d + (d - t).max(Rational::zero());
    Ok(lhs == rhs)
}

/// `sum_i f_{S_i}(t) >= f_target(t)`; `false` proves the plan does not cover.
pub fn pointwise_necessity_check(
    placements: &[Placement],
    target: &TargetTriangle,
    t: &Rational,
) -> Result<bool, CoverError> {
    check_t(t)?;
    let supply = WidthFunction::of_placements(placements).eval_closed(t);
    Ok(supply >= target_width_sum(target, t))
}
