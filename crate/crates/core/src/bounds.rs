//! Closed-form feasibility thresholds and parameter selection.
//!
//! With `n^2 + 2p` triangles a `T_{n+d}` can be covered exactly when
//! `d <= p/(n+1)` (`1 <= p <= n`); with `n^2 + 2p + 1` exactly when
//! `d <= p/n` (`1 <= p < n`). The two families interleave:
//!
//! ```text
//! 1/(n+1) < 1/n < 2/(n+1) < 2/n < ... < (n-1)/n < n/(n+1)
//! ```
//!
//! so the minimal count steps up by one at each of these values.

use crate::error::CoverError;
use crate::geometry::Method;
use crate::rational::Rational;

#[derive(Clone, Copy, PartialEq, Eq, Debug)]
pub enum Parity {
    Even,
    Odd,
}

fn check_d(d: &Rational) -> Result<(), CoverError> {
    if !d.is_positive() || d >= &Rational::one() {
        return Err(CoverError::InvalidParameter(format!(
            "d = {d} must satisfy 0 < d < 1"
        )));
    }
    Ok(())
}

fn check_n(n: u32) -> Result<(), CoverError> {
    if n == 0 {
        return Err(CoverError::InvalidParameter("n must be at least 1".into()));
    }
    Ok(())
}

/// Up-left slide for row `k` when extra pairs start on row `j`: `j / (k(k+1))`.
pub fn even_slide(j: u32, k: u32) -> Rational {
    let k = i64::from(k);
    Rational::new(i64::from(j), k * (k + 1))
}

/// Down-right slide for row `k` when sliding starts on row `j`: `(j-1) / (k(k-1))`.
pub fn odd_slide(j: u32, k: u32) -> Rational {
    assert!(k >= 2, "odd slides start at row 2");
    let k = i64::from(k);
    Rational::new(i64::from(j) - 1, k * (k - 1))
}

/// Largest `d` the even construction started at row `j` handles: `1 - j/(n+1)`.
pub fn even_method_threshold(n: u32, j: u32) -> Rational {
    Rational::one() - Rational::new(i64::from(j), i64::from(n) + 1)
}

/// Largest `d` the odd construction started at row `j` handles: `(j-1)/n`.
pub fn odd_method_threshold(n: u32, j: u32) -> Rational {
    Rational::new(i64::from(j) - 1, i64::from(n))
}

/// `p/(n+1)`, the tight bound for `n^2 + 2p` triangles.
pub fn threshold_even(n: u32, p: u32) -> Result<Rational, CoverError> {
    if p == 0 || p > n {
        return Err(CoverError::InvalidParameter(format!(
            "even threshold needs 1 <= p <= n, got p = {p}, n = {n}"
        )));
    }
    Ok(Rational::new(i64::from(p), i64::from(n) + 1))
}

/// `p/n`, the tight bound for `n^2 + 2p + 1` triangles.
pub fn threshold_odd(n: u32, p: u32) -> Result<Rational, CoverError> {
    if p == 0 || p >= n {
        return Err(CoverError::InvalidParameter(format!(
            "odd threshold needs 1 <= p < n, got p = {p}, n = {n}"
        )));
    }
    Ok(Rational::new(i64::from(p), i64::from(n)))
}

/// `floor((1 - d)(n + 1))`; 0 means the even method must fall back to naive.
pub fn select_j_even(n: u32, d: &Rational) -> Result<u32, CoverError> {
    check_n(n)?;
    check_d(d)?;
    let j = ((Rational::one() - d) * Rational::from(n + 1)).floor_i64();
    Ok(u32::try_from(j).expect("floor of a value in (0, n+1)"))
}

/// `ceil(d n + 1)`; `n + 1` means the odd method must fall back to naive.
pub fn select_j_odd(n: u32, d: &Rational) -> Result<u32, CoverError> {
    check_n(n)?;
    check_d(d)?;
    let j = (d * Rational::from(n) + Rational::one()).ceil_i64();
    Ok(u32::try_from(j).expect("ceiling of a value in (1, n+1)"))
}

/// Extra pairs used by the full even method (`n + 1` signals naive fallback).
pub fn p_even(n: u32, d: &Rational) -> Result<u32, CoverError> {
    Ok(n - select_j_even(n, d)? + 1)
}

/// Pairs used by the full odd method beyond its single extra triangle.
pub fn p_odd(n: u32, d: &Rational) -> Result<u32, CoverError> {
    Ok(select_j_odd(n, d)? - 1)
}

#[derive(Clone, Copy, PartialEq, Eq, Debug)]
pub struct KMin {
    pub count: u64,
    /// `EvenFull`, `OddFull`, or `Naive` when the winning branch falls back.
    pub method: Method,
}

/// Fewest homothetic unit triangles that can cover `T_{n+d}`.
///
/// The odd branch wins only when `p_odd < p_even`; ties go to even because
/// `2 p_even < 2 p_odd + 1` then.
pub fn k_min(n: u32, d: &Rational) -> Result<KMin, CoverError> {
    let j_even = select_j_even(n, d)?;
    let j_odd = select_j_odd(n, d)?;
    let pe = u64::from(n - j_even + 1);
    let po = u64::from(j_odd - 1);
    let n2 = u64::from(n) * u64::from(n);
    let naive = n2 + 2 * u64::from(n) + 1;
    let (extra, method, reverts) = if po < pe {
        (2 * po + 1, Method::OddFull, j_odd == n + 1)
    } else {
        (2 * pe, Method::EvenFull, j_even == 0)
    };
    if reverts {
        return Ok(KMin {
            count: naive,
            method: Method::Naive,
        });
    }
    Ok(KMin {
        count: n2 + extra,
        method,
    })
}

/// Thresholds of the two intermediate odd constructions:
/// `p/n - (p-1)/n^2` (three extras on the last row, pairs above) and
/// `p/(n+1) + 1/((n+1)(n-p+1))` (three extras on the first widened row).
/// Both are dominated by [`threshold_odd`] for `p >= 2`.
pub fn reference_thresholds_intermediate(
    n: u32,
    p: u32,
) -> Result<(Rational, Rational), CoverError> {
    let tight = threshold_odd(n, p)?;
    let (n, p) = (i64::from(n), i64::from(p));
    let last_row = tight - Rational::new(p - 1, n * n);
    let first_row = Rational::new(p, n + 1) + Rational::new(1, (n + 1) * (n - p + 1));
    Ok((last_row, first_row))
}

/// `(n+1)d - p` (even) or `nd - p` (odd): positive exactly when `n^2 + 2p`
/// (resp. `n^2 + 2p + 1`) triangles cannot cover `T_{n+d}`.
pub fn infeasibility_delta(
    n: u32,
    d: &Rational,
    p: u32,
    parity: Parity,
) -> Result<Rational, CoverError> {
    if p == 0 {
        return Err(CoverError::InvalidParameter("p must be at least 1".into()));
    }
    let scale = match parity {
        Parity::Even => Rational::from(n + 1),
        Parity::Odd => Rational::from(n),
    };
    Ok(scale * d - Rational::from(p))
}

/// Thresholds for one `p`, and the feasibility gaps at a given `d`.
#[derive(Clone, PartialEq, Eq, Debug)]
pub struct BoundsRecord {
    pub n: u32,
    pub p: u32,
    pub threshold_even: Rational,
    /// Only defined for `p < n`.
    pub threshold_odd: Option<Rational>,
    pub delta_even: Rational,
    pub delta_odd: Rational,
}

impl BoundsRecord {
    pub fn at(n: u32, p: u32, d: &Rational) -> Result<Self, CoverError> {
        Ok(BoundsRecord {
            n,
            p,
            threshold_even: threshold_even(n, p)?,
            threshold_odd: threshold_odd(n, p).ok(),
            delta_even: infeasibility_delta(n, d, p, Parity::Even)?,
            delta_odd: infeasibility_delta(n, d, p, Parity::Odd)?,
        })
    }
}

/// The interleaved step points of [`k_min`] for fixed `n`, ascending.
pub fn step_points(n: u32) -> Vec<Rational> {
    let mut points = Vec::with_capacity(2 * n as usize);
    for p in 1..=n {
        points.push(Rational::new(i64::from(p), i64::from(n) + 1));
        if p < n {
            points.push(Rational::new(i64::from(p), i64::from(n)));
        }
    }
    points
}
