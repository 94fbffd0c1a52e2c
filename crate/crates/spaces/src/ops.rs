//! Wall-and-chamber operations generic over any space model: side
//! tests, chamber membership, descent to the base chamber, wall
//! counting, minimal wall sets, and the verification scans.

use crate::error::{Result, SpaceError};
use crate::model::{Membership, Side, SpaceModel};
use crate::scalar::{rat, Rational, Scalar};
use coxeter_core::{left_mul, normal_form, reflections_in_ball};
use coxeter_core::{Ball, Caps, CoxeterMatrix, GroupElement, ReflectionElement, Word};
use num_traits::One;
use std::cmp::Ordering;
use std::collections::BTreeMap;

fn gen_element(m: &CoxeterMatrix, s: usize, caps: &Caps) -> Result<GroupElement> {
    Ok(normal_form(m, &Word(vec![s as u8]), caps)?)
}

/// Side of the wall of `r` that `p` lies on, seen from the base
/// chamber: reflecting a far-side point moves it strictly closer to
/// the base point, a near-side point strictly farther, and a wall
/// point not at all.
pub fn side<M: SpaceModel>(
    model: &M,
    p: &M::Point,
    r: &ReflectionElement,
    caps: &Caps,
) -> Result<Side> {
    model.check_reflection(r)?;
    let gamma = r.element(model.matrix(), caps)?;
    Ok(side_of_element(model, p, &gamma))
}

fn side_of_element<M: SpaceModel>(model: &M, p: &M::Point, gamma: &GroupElement) -> Side {
    let x0 = model.base_point();
    let image = model.apply(gamma, p);
    match model.dist_sq(&x0, &image).cmp(&model.dist_sq(&x0, p)) {
        Ordering::Less => Side::Minus,
        Ordering::Equal => Side::Wall,
        Ordering::Greater => Side::Plus,
    }
}

/// Side with respect to a single generator's wall.
pub fn generator_side<M: SpaceModel>(model: &M, p: &M::Point, s: usize) -> Side {
    let x0 = model.base_point();
    let image = model.apply_gen(s, p);
    match model.dist_sq(&x0, &image).cmp(&model.dist_sq(&x0, p)) {
        Ordering::Less => Side::Minus,
        Ordering::Equal => Side::Wall,
        Ordering::Greater => Side::Plus,
    }
}

/// Location of `p` relative to the closed base chamber, which is the
/// intersection of the generator half-spaces.
pub fn chamber_membership<M: SpaceModel>(model: &M, p: &M::Point) -> Membership {
    let mut boundary = false;
    for s in 0..model.matrix().rank() {
        match generator_side(model, p, s) {
            Side::Minus => return Membership::Outside,
            Side::Wall => boundary = true,
            Side::Plus => {}
        }
    }
    if boundary {
        Membership::Boundary
    } else {
        Membership::Interior
    }
}

#[derive(Debug, Clone)]
pub struct Descent<P> {
    /// Product of the reflecting generators in application order, so
    /// `apply(gamma, q) = p`.
    pub gamma: GroupElement,
    /// The image of `p` in the closed base chamber.
    pub q: P,
    pub steps: usize,
}

/// Walk `p` into the closed base chamber by repeatedly reflecting with
/// the least-index generator whose wall separates the current point
/// from the chamber. Each step strictly decreases the distance to the
/// base point, so the walk terminates.
pub fn descend<M: SpaceModel>(model: &M, p: &M::Point, caps: &Caps) -> Result<Descent<M::Point>> {
    let rank = model.matrix().rank();
    let mut current = p.clone();
    let mut letters: Vec<u8> = Vec::new();
    loop {
        if letters.len() > caps.descend_cap {
            return Err(SpaceError::IterationCapExceeded { cap: caps.descend_cap });
        }
        let next = (0..rank).find(|&s| generator_side(model, &current, s) == Side::Minus);
        match next {
            Some(s) => {
                current = model.apply_gen(s, &current);
                letters.push(s as u8);
            }
            None => {
                let steps = letters.len();
                let gamma = normal_form(model.matrix(), &Word(letters), caps)?;
                return Ok(Descent { gamma, q: current, steps });
            }
        }
    }
}

/// Number of walls strictly separating `p` from the base chamber,
/// counted over the reflections of a group ball.
pub fn gallery_distance<M: SpaceModel>(
    model: &M,
    p: &M::Point,
    ball_radius: usize,
    caps: &Caps,
) -> Result<usize> {
    let mut count = 0;
    for r in reflections_in_ball(model.matrix(), ball_radius, caps)? {
        if side(model, p, &r, caps)? == Side::Minus {
            count += 1;
        }
    }
    Ok(count)
}

/// Shrink a set of candidate walls to a minimal set with the same
/// half-space intersection. A wall is kept exactly when its nearest
/// point to the base point is strictly on the chamber side of every
/// other candidate wall; redundant walls are screened off by the rest.
///
/// The candidates must cut out the base chamber in the first place,
/// which for these models means every generator wall is present.
pub fn minimal_wall_set<M: SpaceModel>(
    model: &M,
    candidates: &[ReflectionElement],
    caps: &Caps,
) -> Result<Vec<ReflectionElement>> {
    let m = model.matrix();
    let mut by_element: BTreeMap<GroupElement, ReflectionElement> = BTreeMap::new();
    for r in candidates {
        model.check_reflection(r)?;
        by_element.entry(r.element(m, caps)?).or_insert_with(|| r.clone());
    }
    for s in 0..m.rank() {
        if !by_element.contains_key(&gen_element(m, s, caps)?) {
            return Err(SpaceError::NotEnclosing { missing: s });
        }
    }
    let mut kept = Vec::new();
    for (elem, r) in &by_element {
        let foot = model.wall_foot(r, caps)?;
        let needed = by_element
            .iter()
            .filter(|(other, _)| *other != elem)
            .all(|(other, _)| side_of_element(model, &foot, other) == Side::Plus);
        if needed {
            kept.push(r.clone());
        }
    }
    Ok(kept)
}

/// A point of the base chamber so close to one wall that a metric ball
/// around it touches no other wall of the whole arrangement.
#[derive(Debug, Clone)]
pub struct WallNeighborhoodWitness<P> {
    pub generator: usize,
    /// Nearest point of the wall to the base point.
    pub foot: P,
    /// Ball radius around `point` that separates the walls.
    pub epsilon: Rational,
    /// The witness point itself, inside the base chamber.
    pub point: P,
    /// Squared distance from the witness to its own-generator image.
    pub wall_gap_sq: Scalar,
    /// Minimum squared displacement under every other nonidentity
    /// group element of the scanned ball.
    pub other_gap_sq: Scalar,
}

/// Find a witness point for generator `s0`: a chamber point `w` with
/// `d(w, s0 w) <= 2 eps` while every other nonidentity element of the
/// scanned ball moves `w` by more than `2 eps`. The search shrinks the
/// segment from the wall foot toward the base point until the gap
/// opens up.
pub fn wall_neighborhood_witness<M: SpaceModel>(
    model: &M,
    s0: usize,
    ball_radius: usize,
    caps: &Caps,
) -> Result<WallNeighborhoodWitness<M::Point>> {
    let m = model.matrix();
    let foot = model.wall_foot(&ReflectionElement::generator(s0 as u8), caps)?;
    let x0 = model.base_point();
    let ball = Ball::enumerate(m, ball_radius, caps)?;
    let s0_elem = gen_element(m, s0, caps)?;
    let four = Scalar::from_int(4);
    let mut delta = rat(1, 4);
    for _ in 0..16 {
        let w = model.point_between(&foot, &x0, &delta)?;
        let wall_gap = model.dist_sq(&w, &model.apply_gen(s0, &w));
        let other_gap = ball
            .elements()
            .iter()
            .filter(|g| g.length() > 0 && **g != s0_elem)
            .map(|g| model.dist_sq(&w, &model.apply(g, &w)))
            .min();
        let Some(other_gap) = other_gap else { break };
        if !wall_gap.is_zero() && wall_gap < other_gap {
            // Halve eps until 4 eps^2 drops below the other-wall gap,
            // then confirm it still dominates the own-wall gap and the
            // distance back to the foot.
            let mut eps = Rational::one();
            for _ in 0..64 {
                let eps_sq = Scalar::from_rational(&eps * &eps);
                if &four * &eps_sq < other_gap {
                    break;
                }
                eps /= rat(2, 1);
            }
            let eps_sq = Scalar::from_rational(&eps * &eps);
            let fits =
                wall_gap <= &four * &eps_sq && model.dist_sq(&w, &foot) < eps_sq;
            if fits {
                return Ok(WallNeighborhoodWitness {
                    generator: s0,
                    foot,
                    epsilon: eps,
                    point: w,
                    wall_gap_sq: wall_gap,
                    other_gap_sq: other_gap,
                });
            }
        }
        delta /= rat(2, 1);
    }
    Err(SpaceError::WitnessNotFound { generator: s0 })
}

/// Outcome of a verification scan: how many cases were checked and a
/// description of each violation (expected empty).
#[derive(Debug, Clone, serde::Serialize)]
pub struct ScanReport {
    pub name: String,
    pub checks: usize,
    pub violations: Vec<String>,
}

impl ScanReport {
    pub fn passed(&self) -> bool {
        self.violations.is_empty()
    }
}

/// Check the side-test trichotomy on sampled points: the reflected
/// image is strictly nearer the base point, strictly farther, or the
/// point is fixed — and the equality case coincides exactly with being
/// fixed by the reflection.
pub fn check_side_trichotomy<M: SpaceModel>(
    model: &M,
    ball_radius: usize,
    sample_count: usize,
    caps: &Caps,
) -> Result<ScanReport> {
    let m = model.matrix();
    let x0 = model.base_point();
    let mut samples = model.sample_points(sample_count);
    samples.push(x0.clone());
    let mut report =
        ScanReport { name: "side-trichotomy".into(), checks: 0, violations: Vec::new() };
    for r in reflections_in_ball(m, ball_radius, caps)? {
        let gamma = r.element(m, caps)?;
        for p in &samples {
            report.checks += 1;
            let image = model.apply(&gamma, p);
            let fixed = image == *p;
            let on_wall = model.dist_sq(&x0, &image) == model.dist_sq(&x0, p);
            if fixed != on_wall {
                report.violations.push(format!(
                    "p = {p}, wall of {gamma}: fixed = {fixed} but distance tie = {on_wall}"
                ));
            }
        }
    }
    Ok(report)
}

/// Check that membership in the open base chamber is equivalent both
/// to being on the plus side of every generator wall and to being on
/// the plus side of every wall of the scanned ball.
pub fn check_chamber_sides<M: SpaceModel>(
    model: &M,
    ball_radius: usize,
    sample_count: usize,
    caps: &Caps,
) -> Result<ScanReport> {
    let m = model.matrix();
    let reflections = reflections_in_ball(m, ball_radius, caps)?;
    let mut samples = model.sample_points(sample_count);
    samples.push(model.base_point());
    let mut report =
        ScanReport { name: "chamber-sides".into(), checks: 0, violations: Vec::new() };
    for p in &samples {
        report.checks += 1;
        let interior = chamber_membership(model, p) == Membership::Interior;
        let gens_plus = (0..m.rank()).all(|s| generator_side(model, p, s) == Side::Plus);
        let mut all_plus = true;
        for r in &reflections {
            if side(model, p, r, caps)? != Side::Plus {
                all_plus = false;
                break;
            }
        }
        if interior != gens_plus || interior != all_plus {
            report.violations.push(format!(
                "p = {p}: interior = {interior}, generator sides plus = {gens_plus}, \
                 all wall sides plus = {all_plus}"
            ));
        }
    }
    Ok(report)
}

/// Check that the only wall swallowing a reflected chamber is the
/// reflecting generator's own: if every sampled point of `s C` lies on
/// the minus side of a wall, that wall belongs to `s` itself.
pub fn check_wall_separation<M: SpaceModel>(
    model: &M,
    ball_radius: usize,
    caps: &Caps,
) -> Result<ScanReport> {
    let m = model.matrix();
    let x0 = model.base_point();
    // Chamber samples: the base point plus a point near each wall.
    let mut chamber = vec![x0.clone()];
    for t in 0..m.rank() {
        let foot = model.wall_foot(&ReflectionElement::generator(t as u8), caps)?;
        chamber.push(model.point_between(&foot, &x0, &rat(1, 4))?);
    }
    let mut report =
        ScanReport { name: "wall-separation".into(), checks: 0, violations: Vec::new() };
    for r in reflections_in_ball(m, ball_radius, caps)? {
        let r_elem = r.element(m, caps)?;
        for s in 0..m.rank() {
            report.checks += 1;
            let all_minus = chamber
                .iter()
                .map(|p| model.apply_gen(s, p))
                .all(|q| side_of_element(model, &q, &r_elem) == Side::Minus);
            if all_minus && r_elem != gen_element(m, s, caps)? {
                report.violations.push(format!(
                    "image of the chamber under s{s} lies beyond the wall of {r_elem}"
                ));
            }
        }
    }
    Ok(report)
}

/// Check the length law for chamber images: the chamber of `gamma` is
/// on the plus side of a generator wall exactly when left
/// multiplication by the generator does not shorten `gamma`.
pub fn check_length_side<M: SpaceModel>(
    model: &M,
    ball_radius: usize,
    caps: &Caps,
) -> Result<ScanReport> {
    let m = model.matrix();
    let x0 = model.base_point();
    let ball = Ball::enumerate(m, ball_radius, caps)?;
    let mut report =
        ScanReport { name: "length-side".into(), checks: 0, violations: Vec::new() };
    for gamma in ball.elements() {
        let image = model.apply(gamma, &x0);
        for s in 0..m.rank() {
            report.checks += 1;
            let shortens = left_mul(m, s as u8, gamma, caps)?.length() < gamma.length();
            let expected = if shortens { Side::Minus } else { Side::Plus };
            let got = generator_side(model, &image, s);
            if got != expected {
                report.violations.push(format!(
                    "gamma = {gamma}, s{s}: expected side {expected:?}, got {got:?}"
                ));
            }
        }
    }
    Ok(report)
}

/// Number of ball elements moving `p` by strictly less than `bound`
/// (compared on squares, so `bound` must be nonnegative). Finite for
/// any bound because the action is proper.
pub fn properness_count<M: SpaceModel>(
    model: &M,
    p: &M::Point,
    bound: &Scalar,
    ball_radius: usize,
    caps: &Caps,
) -> Result<usize> {
    let ball = Ball::enumerate(model.matrix(), ball_radius, caps)?;
    let bound_sq = bound * bound;
    Ok(ball
        .elements()
        .iter()
        .filter(|g| model.dist_sq(&model.apply(g, p), p) < bound_sq)
        .count())
}

/// Check that no nonidentity element of the ball maps the base point
/// back into the base chamber, so the chamber stabilizer is trivial.
pub fn check_chamber_stabilizer<M: SpaceModel>(
    model: &M,
    ball_radius: usize,
    caps: &Caps,
) -> Result<ScanReport> {
    let x0 = model.base_point();
    let ball = Ball::enumerate(model.matrix(), ball_radius, caps)?;
    let mut report =
        ScanReport { name: "chamber-stabilizer".into(), checks: 0, violations: Vec::new() };
    for gamma in ball.elements() {
        if gamma.length() == 0 {
            continue;
        }
        report.checks += 1;
        let membership = chamber_membership(model, &model.apply(gamma, &x0));
        if membership != Membership::Outside {
            report.violations.push(format!(
                "gamma = {gamma} keeps the base point in the chamber ({membership:?})"
            ));
        }
    }
    Ok(report)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::cayley::CayleyModel;
    use crate::line::LineModel;
    use crate::triangle::{PlaneTriangleModel, TriangleKind};
    use coxeter_core::CoxeterMatrix;

    fn caps() -> Caps {
        Caps::default()
    }

    #[test]
    fn line_side_examples() {
        let m = LineModel::new();
        let r0 = ReflectionElement::generator(0);
        assert_eq!(side(&m, &rat(1, 2), &r0, &caps()).unwrap(), Side::Plus);
        assert_eq!(side(&m, &rat(-1, 4), &r0, &caps()).unwrap(), Side::Minus);
        assert_eq!(side(&m, &rat(0, 1), &r0, &caps()).unwrap(), Side::Wall);
    }

    #[test]
    fn line_membership_examples() {
        let m = LineModel::new();
        assert_eq!(chamber_membership(&m, &rat(1, 2)), Membership::Interior);
        assert_eq!(chamber_membership(&m, &rat(1, 1)), Membership::Boundary);
        assert_eq!(chamber_membership(&m, &rat(-1, 2)), Membership::Outside);
    }

    #[test]
    fn triangle_reflected_base_point_is_outside() {
        for kind in [TriangleKind::T244, TriangleKind::T333, TriangleKind::T236] {
            let m = PlaneTriangleModel::new(kind);
            let x0 = m.base_point();
            assert_eq!(chamber_membership(&m, &x0), Membership::Interior);
            for s in 0..3 {
                assert_eq!(
                    chamber_membership(&m, &m.apply_gen(s, &x0)),
                    Membership::Outside
                );
            }
        }
    }

    #[test]
    fn line_descent_example() {
        let m = LineModel::new();
        let d = descend(&m, &rat(23, 10), &caps()).unwrap();
        assert_eq!(d.steps, 2);
        assert_eq!(d.q, rat(3, 10));
        assert_eq!(d.gamma.normal().letters(), &[1, 0]);
        assert_eq!(m.apply(&d.gamma, &d.q), rat(23, 10));
        assert_eq!(gallery_distance(&m, &rat(23, 10), 8, &caps()).unwrap(), 2);
    }

    #[test]
    fn descent_of_interior_point_is_trivial() {
        let m = LineModel::new();
        let d = descend(&m, &rat(1, 2), &caps()).unwrap();
        assert_eq!(d.steps, 0);
        assert_eq!(d.gamma, GroupElement::identity());
    }

    #[test]
    fn cayley_descent_strips_to_the_identity() {
        let model = CayleyModel::new(
            CoxeterMatrix::from_table(&[&[1, 3], &[3, 1]]).unwrap(),
        );
        let w = Word(vec![0, 1, 0]);
        let g = normal_form(model.matrix(), &w, &caps()).unwrap();
        let p = crate::cayley::CayleyPoint::Vertex(g.clone());
        let d = descend(&model, &p, &caps()).unwrap();
        assert_eq!(d.steps, 3);
        assert_eq!(d.gamma, g);
        assert_eq!(d.q, model.base_point());
        assert_eq!(gallery_distance(&model, &p, 5, &caps()).unwrap(), 3);
    }

    #[test]
    fn minimal_wall_set_drops_the_far_wall() {
        let m = LineModel::new();
        // Wall at 2 is the conjugate r1 r0 r1.
        let far = reflections_in_ball(m.matrix(), 3, &caps())
            .unwrap()
            .into_iter()
            .find(|r| r.element(m.matrix(), &caps()).unwrap().length() == 3)
            .unwrap();
        let candidates = vec![
            ReflectionElement::generator(0),
            ReflectionElement::generator(1),
            far,
        ];
        let kept = minimal_wall_set(&m, &candidates, &caps()).unwrap();
        let kept_elems: Vec<usize> = kept
            .iter()
            .map(|r| r.element(m.matrix(), &caps()).unwrap().length())
            .collect();
        assert_eq!(kept_elems, vec![1, 1]);
        // Missing generator walls are rejected.
        let bad = minimal_wall_set(&m, &candidates[1..], &caps());
        assert!(matches!(bad, Err(SpaceError::NotEnclosing { missing: 0 })));
    }

    #[test]
    fn minimal_wall_set_keeps_all_triangle_sides() {
        let m = PlaneTriangleModel::new(TriangleKind::T244);
        let candidates: Vec<_> = (0..3).map(|s| ReflectionElement::generator(s)).collect();
        assert_eq!(minimal_wall_set(&m, &candidates, &caps()).unwrap().len(), 3);
    }

    #[test]
    fn line_wall_witness_matches_hand_computation() {
        let m = LineModel::new();
        let w = wall_neighborhood_witness(&m, 0, 6, &caps()).unwrap();
        assert_eq!(w.point, rat(1, 8));
        assert_eq!(w.foot, rat(0, 1));
        assert_eq!(w.epsilon, rat(1, 2));
        assert_eq!(w.wall_gap_sq, Scalar::from_ratio(1, 16));
        assert!(chamber_membership(&m, &w.point) == Membership::Interior);
    }

    #[test]
    fn witnesses_exist_for_every_generator() {
        let tri = PlaneTriangleModel::new(TriangleKind::T236);
        for s in 0..3 {
            let w = wall_neighborhood_witness(&tri, s, 5, &caps()).unwrap();
            assert!(w.wall_gap_sq < w.other_gap_sq);
            assert_eq!(chamber_membership(&tri, &w.point), Membership::Interior);
        }
        let cay = CayleyModel::new(CoxeterMatrix::from_table(&[&[1, 3], &[3, 1]]).unwrap());
        for s in 0..2 {
            let w = wall_neighborhood_witness(&cay, s, 3, &caps()).unwrap();
            assert!(w.wall_gap_sq < w.other_gap_sq);
        }
    }

    #[test]
    fn scans_pass_on_small_models() {
        let line = LineModel::new();
        assert!(check_side_trichotomy(&line, 5, 10, &caps()).unwrap().passed());
        assert!(check_chamber_sides(&line, 5, 10, &caps()).unwrap().passed());
        assert!(check_wall_separation(&line, 5, &caps()).unwrap().passed());
        assert!(check_length_side(&line, 5, &caps()).unwrap().passed());
        assert!(check_chamber_stabilizer(&line, 5, &caps()).unwrap().passed());

        let cay = CayleyModel::new(CoxeterMatrix::from_table(&[&[1, 3], &[3, 1]]).unwrap());
        let r = check_length_side(&cay, 3, &caps()).unwrap();
        assert_eq!(r.checks, 12);
        assert!(r.passed());
        assert!(check_wall_separation(&cay, 3, &caps()).unwrap().passed());
        assert!(check_chamber_stabilizer(&cay, 3, &caps()).unwrap().passed());
    }

    #[test]
    fn properness_counts_the_nearby_elements() {
        let m = LineModel::new();
        let count =
            properness_count(&m, &rat(1, 2), &Scalar::from_int(2), 8, &caps()).unwrap();
        assert_eq!(count, 3); // identity and the two adjacent reflections
        let only_identity =
            properness_count(&m, &rat(1, 2), &Scalar::from_ratio(1, 2), 8, &caps()).unwrap();
        assert_eq!(only_identity, 1);
    }
}
