//! The geodesic-space model contract.
//!
//! A model provides points, an exact squared metric, an isometric
//! action of its Coxeter group, and a base point inside the open base
//! chamber. Squared distances are enough everywhere: every operation
//! only ever compares distances, and squaring is monotone.

use crate::error::{Result, SpaceError};
use crate::scalar::{Rational, Scalar};
use coxeter_core::{Caps, CoxeterMatrix, GroupElement, ReflectionElement};
use std::fmt::{Debug, Display};

/// Which side of a wall a point lies on, as seen from the base chamber.
#[derive(Debug, Clone, Copy, PartialEq, Eq, serde::Serialize, serde::Deserialize)]
pub enum Side {
    Plus,
    Wall,
    Minus,
}

/// Location of a point relative to the closed base chamber.
#[derive(Debug, Clone, Copy, PartialEq, Eq, serde::Serialize, serde::Deserialize)]
pub enum Membership {
    Interior,
    Boundary,
    Outside,
}

pub trait SpaceModel {
    type Point: Clone + PartialEq + Debug + Display;

    /// The Coxeter matrix of the acting group, one generator per wall
    /// of the base chamber.
    fn matrix(&self) -> &CoxeterMatrix;

    /// The fixed base point, strictly inside the base chamber.
    fn base_point(&self) -> Self::Point;

    /// Action of a single generator.
    fn apply_gen(&self, s: usize, p: &Self::Point) -> Self::Point;

    /// Action of a group element: letters act right to left, so the
    /// last letter of the word is applied first.
    fn apply(&self, gamma: &GroupElement, p: &Self::Point) -> Self::Point {
        gamma
            .normal()
            .letters()
            .iter()
            .rev()
            .fold(p.clone(), |q, &s| self.apply_gen(s.into(), &q))
    }

    /// Exact squared distance.
    fn dist_sq(&self, p: &Self::Point, q: &Self::Point) -> Scalar;

    /// The point of the wall of `r` nearest to the base point, used as
    /// a foot for redundancy tests and wall-neighborhood witnesses.
    fn wall_foot(&self, r: &ReflectionElement, caps: &Caps) -> Result<Self::Point>;

    /// Point at parameter `t` in [0, 1] along a geodesic from `a` to
    /// `b`. Models may support only the segments their operations
    /// need; unsupported pairs return `NoGeodesicSegment`.
    fn point_between(&self, a: &Self::Point, b: &Self::Point, t: &Rational)
        -> Result<Self::Point>;

    /// Deterministic sample points for the sampled verifications,
    /// spread around the base chamber and close enough that a
    /// moderate reflection ball sees all their separating walls.
    fn sample_points(&self, count: usize) -> Vec<Self::Point>;

    /// Guard that a reflection's data is meaningful for this model.
    fn check_reflection(&self, r: &ReflectionElement) -> Result<()> {
        let rank = self.matrix().rank();
        let ok = usize::from(r.core()) < rank
            && r.conjugator().normal().letters().iter().all(|&l| usize::from(l) < rank);
        if ok {
            Ok(())
        } else {
            Err(SpaceError::UnknownReflection(r.to_string()))
        }
    }
}
