//! Euclidean triangle reflection groups acting on the plane.
//!
//! Three families, one per Euclidean triangle type: the side
//! reflections of the base triangle generate the group, and the open
//! triangle is the base chamber. All coordinates live in the exact
//! field `Q(sqrt(3))`; the (2,4,4) family happens to stay rational.

use crate::error::Result;
use crate::model::SpaceModel;
use crate::scalar::{rat, Rational, Scalar};
use coxeter_core::{Caps, CoxeterMatrix, ReflectionElement};
use std::fmt;

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum TriangleKind {
    /// Right isosceles triangle, angles (90, 45, 45).
    T244,
    /// Equilateral triangle, angles (60, 60, 60).
    T333,
    /// Half-equilateral triangle, angles (90, 60, 30).
    T236,
}

impl TriangleKind {
    pub fn parse(text: &str) -> Option<Self> {
        match text {
            "244" | "2,4,4" => Some(TriangleKind::T244),
            "333" | "3,3,3" => Some(TriangleKind::T333),
            "236" | "2,3,6" => Some(TriangleKind::T236),
            _ => None,
        }
    }

    pub fn label(self) -> &'static str {
        match self {
            TriangleKind::T244 => "244",
            TriangleKind::T333 => "333",
            TriangleKind::T236 => "236",
        }
    }
}

#[derive(Debug, Clone, PartialEq, Eq, Hash, serde::Serialize, serde::Deserialize)]
pub struct Point2 {
    pub x: Scalar,
    pub y: Scalar,
}

impl Point2 {
    pub fn new(x: Scalar, y: Scalar) -> Self {
        Point2 { x, y }
    }

    pub fn from_ints(x: i64, y: i64) -> Self {
        Point2::new(Scalar::from_int(x), Scalar::from_int(y))
    }
}

impl fmt::Display for Point2 {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{} , {}", self.x, self.y)
    }
}

/// An affine isometry `p -> M p + t` with exact entries.
#[derive(Debug, Clone)]
struct AffineMap {
    m: [[Scalar; 2]; 2],
    t: [Scalar; 2],
}

impl AffineMap {
    fn apply(&self, p: &Point2) -> Point2 {
        Point2::new(
            &(&(&self.m[0][0] * &p.x) + &(&self.m[0][1] * &p.y)) + &self.t[0],
            &(&(&self.m[1][0] * &p.x) + &(&self.m[1][1] * &p.y)) + &self.t[1],
        )
    }

    /// Reflection across the line through `a` and `b`.
    fn reflection_across(a: &Point2, b: &Point2) -> AffineMap {
        let dx = &b.x - &a.x;
        let dy = &b.y - &a.y;
        let n2 = &(&dx * &dx) + &(&dy * &dy);
        // Householder form relative to the direction (dx, dy).
        let m00 = &(&(&dx * &dx) - &(&dy * &dy)) / &n2;
        let m01 = &(&Scalar::from_int(2) * &(&dx * &dy)) / &n2;
        let m = [[m00.clone(), m01.clone()], [m01, Scalar::zero() - m00]];
        // Translation chosen so that `a` is fixed.
        let ax = &(&m[0][0] * &a.x) + &(&m[0][1] * &a.y);
        let ay = &(&m[1][0] * &a.x) + &(&m[1][1] * &a.y);
        let t = [&a.x - &ax, &a.y - &ay];
        AffineMap { m, t }
    }
}

pub struct PlaneTriangleModel {
    kind: TriangleKind,
    matrix: CoxeterMatrix,
    vertices: [Point2; 3],
    reflections: [AffineMap; 3],
    base: Point2,
}

impl PlaneTriangleModel {
    pub fn new(kind: TriangleKind) -> Self {
        let half = Scalar::from_ratio(1, 2);
        let r3 = Scalar::sqrt3();
        let (matrix, vertices, base) = match kind {
            TriangleKind::T244 => (
                CoxeterMatrix::from_table(&[&[1, 4, 4], &[4, 1, 2], &[4, 2, 1]]).unwrap(),
                [
                    Point2::from_ints(0, 0),
                    Point2::from_ints(1, 0),
                    Point2::new(half.clone(), half.clone()),
                ],
                // Interior rational point near the incenter.
                Point2::new(Scalar::from_ratio(1, 2), Scalar::from_ratio(1, 5)),
            ),
            TriangleKind::T333 => (
                CoxeterMatrix::from_table(&[&[1, 3, 3], &[3, 1, 3], &[3, 3, 1]]).unwrap(),
                [
                    Point2::from_ints(0, 0),
                    Point2::from_ints(1, 0),
                    Point2::new(half.clone(), &half * &r3),
                ],
                // Exact incenter (1/2, sqrt(3)/6).
                Point2::new(
                    Scalar::from_ratio(1, 2),
                    Scalar::new(rat(0, 1), rat(1, 6)),
                ),
            ),
            TriangleKind::T236 => (
                CoxeterMatrix::from_table(&[&[1, 2, 3], &[2, 1, 6], &[3, 6, 1]]).unwrap(),
                [
                    Point2::from_ints(0, 0),
                    Point2::from_ints(1, 0),
                    Point2::new(Scalar::zero(), r3.clone()),
                ],
                // Exact incenter ((sqrt(3)-1)/2, (sqrt(3)-1)/2).
                Point2::new(
                    Scalar::new(rat(-1, 2), rat(1, 2)),
                    Scalar::new(rat(-1, 2), rat(1, 2)),
                ),
            ),
        };
        // g0 reflects across side (v0,v1), g1 across (v0,v2), g2
        // across (v1,v2); the bond order of a generator pair is
        // pi / (angle at their shared vertex), matching `matrix`.
        let reflections = [
            AffineMap::reflection_across(&vertices[0], &vertices[1]),
            AffineMap::reflection_across(&vertices[0], &vertices[2]),
            AffineMap::reflection_across(&vertices[1], &vertices[2]),
        ];
        PlaneTriangleModel { kind, matrix, vertices, reflections, base }
    }

    pub fn kind(&self) -> TriangleKind {
        self.kind
    }

    pub fn vertices(&self) -> &[Point2; 3] {
        &self.vertices
    }
}

impl SpaceModel for PlaneTriangleModel {
    type Point = Point2;

    fn matrix(&self) -> &CoxeterMatrix {
        &self.matrix
    }

    fn base_point(&self) -> Point2 {
        self.base.clone()
    }

    fn apply_gen(&self, s: usize, p: &Point2) -> Point2 {
        self.reflections[s].apply(p)
    }

    fn dist_sq(&self, p: &Point2, q: &Point2) -> Scalar {
        let dx = &p.x - &q.x;
        let dy = &p.y - &q.y;
        &(&dx * &dx) + &(&dy * &dy)
    }

    fn wall_foot(&self, r: &ReflectionElement, caps: &Caps) -> Result<Point2> {
        self.check_reflection(r)?;
        // Midpoint of x0 and its mirror image lies on the wall and is
        // the nearest wall point in a Euclidean plane.
        let gamma = r.element(self.matrix(), caps)?;
        let x0 = self.base_point();
        let image = self.apply(&gamma, &x0);
        self.point_between(&x0, &image, &rat(1, 2))
    }

    fn point_between(&self, a: &Point2, b: &Point2, t: &Rational) -> Result<Point2> {
        let t = Scalar::from_rational(t.clone());
        Ok(Point2::new(
            &a.x + &(&t * &(&b.x - &a.x)),
            &a.y + &(&t * &(&b.y - &a.y)),
        ))
    }

    fn sample_points(&self, count: usize) -> Vec<Point2> {
        // Deterministic spray around the base chamber: images of points
        // near x0 shifted by small exact offsets. Offsets use prime
        // denominators so samples never land on the wall lines of the
        // arrangement (walls here have equations with small
        // denominators; a 1/97-grid misses them).
        let x0 = self.base_point();
        (0..count)
            .map(|i| {
                let i = i as i64;
                let dx = rat((i * 13) % 41 - 20, 97);
                let dy = rat((i * 29) % 37 - 18, 89);
                Point2::new(
                    &x0.x + &Scalar::from_rational(dx),
                    &x0.y + &Scalar::from_rational(dy),
                )
            })
            .collect()
    }
}
