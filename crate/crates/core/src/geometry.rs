//! Canonical frame, unit-triangle placements and affine maps.
//!
//! Everything is built in a right isosceles frame: the target of side
//! `L = n + d` is the closed triangle `(0,0), (L,0), (0,L)`. Its left side
//! is the vertical leg `x = 0`, its right side the hypotenuse `x + y = L`,
//! and rows are horizontal bands. An equilateral picture is recovered with
//! the shear `(x, y) -> (x + y/2, y * sqrt(3)/2)`, which only the renderer
//! uses.
//!
//! Unit triangles come in two orientations:
//!
//! * `Up` anchored at `(x, y)`: vertices `(x,y), (x+1,y), (x,y+1)`.
//! * `Down` anchored at its top-left vertex `(x, y)`: vertices
//!   `(x,y), (x+1,y), (x+1,y-1)`.
//!
//! Both have a horizontal leg of length 1 and height 1.

use std::fmt;
use std::str::FromStr;

use serde::{Deserialize, Serialize};

use crate::error::CoverError;
use crate::rational::Rational;

#[derive(Clone, PartialEq, Eq, PartialOrd, Ord, Hash, Debug)]
pub struct Point2 {
    pub x: Rational,
    pub y: Rational,
}

impl Point2 {
    pub fn new(x: Rational, y: Rational) -> Self {
        Point2 { x, y }
    }

    pub fn origin() -> Self {
        Point2::new(Rational::zero(), Rational::zero())
    }
}

impl fmt::Display for Point2 {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "({}, {})", self.x, self.y)
    }
}

/// Twice the signed area of `a, b, c`; positive for counterclockwise order.
pub fn orient2d(a: &Point2, b: &Point2, c: &Point2) -> Rational {
    (&b.x - &a.x) * (&c.y - &a.y) - (&b.y - &a.y) * (&c.x - &a.x)
}

/// Closed interval `[lo, hi]` with `lo <= hi`.
#[derive(Clone, PartialEq, Eq, Debug)]
pub struct Interval {
    pub lo: Rational,
    pub hi: Rational,
}

impl Interval {
    pub fn new(lo: Rational, hi: Rational) -> Self {
        debug_assert!(lo <= hi);
        Interval { lo, hi }
    }

    pub fn width(&self) -> Rational {
        &self.hi - &self.lo
    }

    pub fn contains(&self, x: &Rational) -> bool {
        &self.lo <= x && x <= &self.hi
    }
}

#[derive(Clone, Copy, PartialEq, Eq, Hash, Debug, Serialize, Deserialize)]
pub enum Orientation {
    #[serde(rename = "U")]
    Up,
    #[serde(rename = "D")]
    Down,
}

/// One unit triangle in the canonical frame.
#[derive(Clone, PartialEq, Eq, Hash, Debug)]
pub struct Placement {
    pub orientation: Orientation,
    pub anchor: Point2,
}

impl Placement {
    pub fn up(x: Rational, y: Rational) -> Self {
        Placement {
            orientation: Orientation::Up,
            anchor: Point2::new(x, y),
        }
    }

    pub fn down(x: Rational, y: Rational) -> Self {
        Placement {
            orientation: Orientation::Down,
            anchor: Point2::new(x, y),
        }
    }

    pub fn is_up(&self) -> bool {
        self.orientation == Orientation::Up
    }

    /// Vertices in counterclockwise order, starting at the anchor.
    pub fn vertices(&self) -> [Point2; 3] {
        let Point2 { x, y } = &self.anchor;
        let one = Rational::one();
        match self.orientation {
            Orientation::Up => [
                self.anchor.clone(),
                Point2::new(x + &one, y.clone()),
                Point2::new(x.clone(), y + &one),
            ],
            Orientation::Down => [
                self.anchor.clone(),
                Point2::new(x + &one, y - &one),
                Point2::new(x + &one, y.clone()),
            ],
        }
    }

    /// y-coordinate of the horizontal leg.
    pub fn leg_y(&self) -> &Rational {
        &self.anchor.y
    }

    /// `[y_min, y_max]` spanned by the triangle.
    pub fn y_extent(&self) -> (Rational, Rational) {
        let y = &self.anchor.y;
        match self.orientation {
            Orientation::Up => (y.clone(), y + Rational::one()),
            Orientation::Down => (y - Rational::one(), y.clone()),
        }
    }

    /// Closed-set membership.
    pub fn contains(&self, q: &Point2) -> bool {
        let dx = &q.x - &self.anchor.x;
        let dy = &q.y - &self.anchor.y;
        match self.orientation {
            Orientation::Up => !dx.is_negative() && !dy.is_negative() && dx + dy <= Rational::one(),
            Orientation::Down => {
                !dy.is_positive() && dx <= Rational::one() && !(dx + dy).is_negative()
            }
        }
    }

    /// The x-interval cut out by the horizontal line at height `y`.
    pub fn cross_section(&self, y: &Rational) -> Option<Interval> {
        let Point2 { x: ax, y: ay } = &self.anchor;
        let one = Rational::one();
        match self.orientation {
            Orientation::Up => {
                let h = y - ay;
                if h.is_negative() || h > one {
                    return None;
                }
                Some(Interval::new(ax.clone(), ax + one - h))
            }
            Orientation::Down => {
                let depth = ay - y;
                if depth.is_negative() || depth > one {
                    return None;
                }
                Some(Interval::new(ax + depth, ax + one))
            }
        }
    }

    pub fn translated(&self, dx: &Rational, dy: &Rational) -> Placement {
        Placement {
            orientation: self.orientation,
            anchor: Point2::new(&self.anchor.x + dx, &self.anchor.y + dy),
        }
    }
}

/// The triangle `T_{n+d}` to be covered: `(0,0), (L,0), (0,L)` with `L = n + d`.
#[derive(Clone, PartialEq, Eq, Debug)]
pub struct TargetTriangle {
    n: u32,
    d: Rational,
}

impl TargetTriangle {
    pub fn new(n: u32, d: Rational) -> Result<Self, CoverError> {
        if n == 0 {
            return Err(CoverError::InvalidParameter("n must be at least 1".into()));
        }
        if d.is_negative() || d >= Rational::one() {
            return Err(CoverError::InvalidParameter(format!(
                "d = {d} must satisfy 0 <= d < 1"
            )));
        }
        Ok(TargetTriangle { n, d })
    }

    pub fn n(&self) -> u32 {
        self.n
    }

    pub fn d(&self) -> &Rational {
        &self.d
    }

    pub fn side(&self) -> Rational {
        Rational::from(self.n) + &self.d
    }

    pub fn vertices(&self) -> [Point2; 3] {
        let l = self.side();
        [
            Point2::origin(),
            Point2::new(l.clone(), Rational::zero()),
            Point2::new(Rational::zero(), l),
        ]
    }

    pub fn contains(&self, q: &Point2) -> bool {
        !q.x.is_negative() && !q.y.is_negative() && &q.x + &q.y <= self.side()
    }

    pub fn cross_section(&self, y: &Rational) -> Option<Interval> {
        let l = self.side();
        if y.is_negative() || y > &l {
            return None;
        }
        Some(Interval::new(Rational::zero(), l - y))
    }
}

/// Covering constructions, as recorded in plans and plan files.
#[derive(Clone, Copy, PartialEq, Eq, Hash, Debug, Serialize, Deserialize)]
#[serde(rename_all = "snake_case")]
pub enum Method {
    Grid,
    Naive,
    Cs1,
    Cs1Generalized,
    EvenBasic,
    EvenFull,
    Bl3,
    OddBasic,
    OddFull,
    /// The selection rule itself; plans it produces carry the chosen branch.
    Consolidated,
}

impl Method {
    pub const ALL: [Method; 10] = [
        Method::Grid,
        Method::Naive,
        Method::Cs1,
        Method::Cs1Generalized,
        Method::EvenBasic,
        Method::EvenFull,
        Method::Bl3,
        Method::OddBasic,
        Method::OddFull,
        Method::Consolidated,
    ];

    pub fn as_str(self) -> &'static str {
        match self {
            Method::Grid => "grid",
            Method::Naive => "naive",
            Method::Cs1 => "cs1",
            Method::Cs1Generalized => "cs1_generalized",
            Method::EvenBasic => "even_basic",
            Method::EvenFull => "even_full",
            Method::Bl3 => "bl3",
            Method::OddBasic => "odd_basic",
            Method::OddFull => "odd_full",
            Method::Consolidated => "consolidated",
        }
    }
}

impl fmt::Display for Method {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.as_str())
    }
}

impl FromStr for Method {
    type Err = CoverError;

    fn from_str(s: &str) -> Result<Self, Self::Err> {
        Method::ALL
            .into_iter()
            .find(|m| m.as_str() == s)
            .ok_or_else(|| CoverError::InvalidParameter(format!("unknown method `{s}`")))
    }
}

/// An ordered list of unit triangles meant to cover `T_{n+d}`.
#[derive(Clone, PartialEq, Eq, Debug)]
pub struct CoveringPlan {
    pub n: u32,
    pub d: Rational,
    pub method: Method,
    pub j: Option<u32>,
    pub placements: Vec<Placement>,
}

impl CoveringPlan {
    pub fn count(&self) -> usize {
        self.placements.len()
    }

    pub fn target(&self) -> TargetTriangle {
        TargetTriangle::new(self.n, self.d.clone())
            .expect("plan parameters validated on construction")
    }

    pub fn up_count(&self) -> usize {
        self.placements.iter().filter(|p| p.is_up()).count()
    }

    pub fn down_count(&self) -> usize {
        self.count() - self.up_count()
    }
}

/// `p -> A p + t` with rational entries.
#[derive(Clone, PartialEq, Eq, Debug)]
pub struct AffineMap {
    m: [[Rational; 2]; 2],
    t: [Rational; 2],
}

impl AffineMap {
    /// Rejects singular linear parts.
    pub fn new(m: [[Rational; 2]; 2], t: [Rational; 2]) -> Result<Self, CoverError> {
        let map = AffineMap { m, t };
        if map.determinant().is_zero() {
            return Err(CoverError::NonInvertible);
        }
        Ok(map)
    }

    pub fn identity() -> Self {
        AffineMap {
            m: [
                [Rational::one(), Rational::zero()],
                [Rational::zero(), Rational::one()],
            ],
            t: [Rational::zero(), Rational::zero()],
        }
    }

    pub fn scale(sx: Rational, sy: Rational) -> Result<Self, CoverError> {
        AffineMap::new(
            [[sx, Rational::zero()], [Rational::zero(), sy]],
            [Rational::zero(), Rational::zero()],
        )
    }

    pub fn translation(tx: Rational, ty: Rational) -> Self {
        AffineMap {
            t: [tx, ty],
            ..AffineMap::identity()
        }
    }

    pub fn determinant(&self) -> Rational {
        &self.m[0][0] * &self.m[1][1] - &self.m[0][1] * &self.m[1][0]
    }

    pub fn apply(&self, p: &Point2) -> Point2 {
        Point2::new(
            &self.m[0][0] * &p.x + &self.m[0][1] * &p.y + &self.t[0],
            &self.m[1][0] * &p.x + &self.m[1][1] * &p.y + &self.t[1],
        )
    }

    pub fn inverse(&self) -> AffineMap {
        let det = self.determinant();
        let [[a, b], [c, d]] = &self.m;
        let inv = [[d / &det, -(b / &det)], [-(c / &det), a / &det]];
        let t = [
            -(&inv[0][0] * &self.t[0] + &inv[0][1] * &self.t[1]),
            -(&inv[1][0] * &self.t[0] + &inv[1][1] * &self.t[1]),
        ];
        AffineMap { m: inv, t }
    }

    /// `self ∘ other`: apply `other` first.
    pub fn compose(&self, other: &AffineMap) -> AffineMap {
        let mut m: [[Rational; 2]; 2] = Default::default();
        for (i, row) in m.iter_mut().enumerate() {
            for (j, cell) in row.iter_mut().enumerate() {
                *cell = &self.m[i][0] * &other.m[0][j] + &self.m[i][1] * &other.m[1][j];
            }
        }
        let moved = self.apply(&Point2::new(other.t[0].clone(), other.t[1].clone()));
        AffineMap {
            m,
            t: [moved.x, moved.y],
        }
    }

    pub fn apply_triangle(&self, tri: &[Point2; 3]) -> [Point2; 3] {
        [
            self.apply(&tri[0]),
            self.apply(&tri[1]),
            self.apply(&tri[2]),
        ]
    }

    /// Image of every placement of a plan, as explicit vertex triples.
    pub fn apply_plan(&self, plan: &CoveringPlan) -> Vec<[Point2; 3]> {
        plan.placements
            .iter()
            .map(|p| self.apply_triangle(&p.vertices()))
            .collect()
    }

    pub fn apply_target(&self, target: &TargetTriangle) -> [Point2; 3] {
        self.apply_triangle(&target.vertices())
    }
}
