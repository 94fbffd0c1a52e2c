//! The real line with walls at the integers: the infinite dihedral
//! group acting by `x -> -x` and `x -> 2 - x`, base chamber (0, 1).

use crate::error::Result;
use crate::model::SpaceModel;
use crate::scalar::{rat, Rational, Scalar};
use coxeter_core::{Caps, CoxeterMatrix, ReflectionElement};

pub struct LineModel {
    matrix: CoxeterMatrix,
}

impl LineModel {
    pub fn new() -> Self {
        LineModel { matrix: CoxeterMatrix::dihedral(None) }
    }

    /// The group is { x -> x + 2k, x -> 2k - x }; reflections are the
    /// maps with a fixed point, i.e. x -> 2k - x with wall {k}.
    pub fn reflect_at(center: &Rational, p: &Rational) -> Rational {
        center * rat(2, 1) - p
    }
}

impl Default for LineModel {
    fn default() -> Self {
        Self::new()
    }
}

impl SpaceModel for LineModel {
    type Point = Rational;

    fn matrix(&self) -> &CoxeterMatrix {
        &self.matrix
    }

    fn base_point(&self) -> Rational {
        rat(1, 2)
    }

    fn apply_gen(&self, s: usize, p: &Rational) -> Rational {
        match s {
            0 => -p.clone(),
            1 => rat(2, 1) - p,
            _ => panic!("generator index {s} out of range for the line model"),
        }
    }

    fn dist_sq(&self, p: &Rational, q: &Rational) -> Scalar {
        let d = p - q;
        Scalar::from_rational(&d * &d)
    }

    fn wall_foot(&self, r: &ReflectionElement, caps: &Caps) -> Result<Rational> {
        self.check_reflection(r)?;
        // The image of the base point determines the wall: the fixed
        // point of x -> 2k - x is the midpoint of x0 and its image.
        let gamma = r.element(self.matrix(), caps)?;
        let x0 = self.base_point();
        let image = self.apply(&gamma, &x0);
        Ok((x0 + image) / rat(2, 1))
    }

    fn point_between(&self, a: &Rational, b: &Rational, t: &Rational) -> Result<Rational> {
        Ok(a + (b - a) * t)
    }

    fn sample_points(&self, count: usize) -> Vec<Rational> {
        // Off-integer rationals sweeping roughly (-3, 3): n/3 + 1/7
        // is never an integer since 7 never divides 7n + 3.
        (0..count)
            .map(|i| {
                let n = (i as i64 * 5) % 19 - 9;
                rat(n, 3) + rat(1, 7)
            })
            .collect()
    }
}
