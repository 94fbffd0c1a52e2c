//! A Coxeter group acting on its own Cayley graph.
//!
//! Points are vertices (group elements) and interior points of the
//! unit-length edges `{g, gs}`. The metric is the graph path metric,
//! the group acts by left multiplication, and the base chamber is the
//! open star of the identity vertex cut at the edge midpoints.

use crate::error::{Result, SpaceError};
use crate::model::SpaceModel;
use crate::scalar::{rat, Rational, Scalar};
use coxeter_core::{invert, left_mul, multiply, normal_form, right_mul};
use coxeter_core::{Ball, Caps, CoxeterMatrix, GroupElement, ReflectionElement, Word};
use num_traits::{One, Signed, ToPrimitive, Zero};
use std::fmt;

#[derive(Debug, Clone, PartialEq, Eq)]
pub enum CayleyPoint {
    Vertex(GroupElement),
    /// Interior point of the edge from `base` to `base * gen` at
    /// parameter `t` in (0, 1). Canonical form keeps `base` as the
    /// shorter endpoint, so `t < 1/2` means "nearer the identity side
    /// of the edge".
    Edge { base: GroupElement, gen: u8, t: Rational },
}

impl fmt::Display for CayleyPoint {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            CayleyPoint::Vertex(g) => write!(f, "vertex {}", g.normal()),
            CayleyPoint::Edge { base, gen, t } => {
                write!(f, "edge {} s{} {}/{}", base.normal(), gen, t.numer(), t.denom())
            }
        }
    }
}

pub struct CayleyModel {
    matrix: CoxeterMatrix,
    caps: Caps,
}

impl CayleyModel {
    pub fn new(matrix: CoxeterMatrix) -> Self {
        CayleyModel { matrix, caps: Caps::default() }
    }

    pub fn with_caps(matrix: CoxeterMatrix, caps: Caps) -> Self {
        CayleyModel { matrix, caps }
    }

    pub fn caps(&self) -> &Caps {
        &self.caps
    }

    /// Point on the edge `{base, base*gen}` at parameter `t` in
    /// [0, 1], canonicalized: endpoints collapse to vertices and the
    /// base is always the shorter endpoint.
    pub fn edge_point(&self, base: &GroupElement, gen: u8, t: Rational) -> Result<CayleyPoint> {
        if t.is_negative() || &t > &Rational::one() {
            return Err(SpaceError::PointParse(format!(
                "edge parameter {t} outside [0, 1]"
            )));
        }
        let other = right_mul(&self.matrix, base, gen, &self.caps)?;
        if t.is_zero() {
            return Ok(CayleyPoint::Vertex(base.clone()));
        }
        if t == Rational::one() {
            return Ok(CayleyPoint::Vertex(other));
        }
        if base.length() < other.length() {
            Ok(CayleyPoint::Edge { base: base.clone(), gen, t })
        } else {
            Ok(CayleyPoint::Edge { base: other, gen, t: Rational::one() - t })
        }
    }

    /// Word-metric distance between vertices.
    fn vdist(&self, a: &GroupElement, b: &GroupElement) -> Result<Rational> {
        let ai = invert(&self.matrix, a, &self.caps)?;
        let d = multiply(&self.matrix, &ai, b, &self.caps)?.length();
        Ok(rat(d as i64, 1))
    }

    /// Candidate (exit vertex, offset along the carrying edge) pairs.
    fn ends(&self, p: &CayleyPoint) -> Result<Vec<(GroupElement, Rational)>> {
        match p {
            CayleyPoint::Vertex(g) => Ok(vec![(g.clone(), Rational::zero())]),
            CayleyPoint::Edge { base, gen, t } => {
                let other = right_mul(&self.matrix, base, *gen, &self.caps)?;
                Ok(vec![(base.clone(), t.clone()), (other, Rational::one() - t)])
            }
        }
    }

    /// Exact path-metric distance.
    pub fn dist(&self, p: &CayleyPoint, q: &CayleyPoint) -> Result<Rational> {
        if let (
            CayleyPoint::Edge { base: b1, gen: g1, t: t1 },
            CayleyPoint::Edge { base: b2, gen: g2, t: t2 },
        ) = (p, q)
        {
            if b1 == b2 && g1 == g2 {
                return Ok((t1 - t2).abs());
            }
        }
        let mut best: Option<Rational> = None;
        for (pv, po) in self.ends(p)? {
            for (qv, qo) in self.ends(q)? {
                let d = &po + self.vdist(&pv, &qv)? + &qo;
                if best.as_ref().is_none_or(|b| &d < b) {
                    best = Some(d);
                }
            }
        }
        Ok(best.expect("ends are never empty"))
    }

    /// Parse `vertex <word>`, `edge <word> <gen> <num>/<den>`, or
    /// `mid <word> <gen>` (the edge midpoint).
    pub fn parse_point(&self, text: &str) -> Result<CayleyPoint> {
        let bad = |msg: &str| SpaceError::PointParse(format!("{msg}: {text:?}"));
        let mut tokens: Vec<&str> = text.split_whitespace().collect();
        if tokens.is_empty() {
            return Err(bad("empty point"));
        }
        let kind = tokens.remove(0);
        let parse_elem = |toks: &[&str]| -> Result<GroupElement> {
            let w = Word::parse(&self.matrix, &toks.join(" "))?;
            Ok(normal_form(&self.matrix, &w, &self.caps)?)
        };
        match kind {
            "vertex" => Ok(CayleyPoint::Vertex(parse_elem(&tokens)?)),
            "mid" => {
                let gen_tok = tokens.pop().ok_or_else(|| bad("missing generator"))?;
                let gen = self
                    .matrix
                    .generator_index(gen_tok)
                    .ok_or_else(|| bad("unknown generator"))?;
                self.edge_point(&parse_elem(&tokens)?, gen as u8, rat(1, 2))
            }
            "edge" => {
                let t_tok = tokens.pop().ok_or_else(|| bad("missing parameter"))?;
                let t: Rational =
                    t_tok.parse().map_err(|_| bad("bad edge parameter"))?;
                let gen_tok = tokens.pop().ok_or_else(|| bad("missing generator"))?;
                let gen = self
                    .matrix
                    .generator_index(gen_tok)
                    .ok_or_else(|| bad("unknown generator"))?;
                self.edge_point(&parse_elem(&tokens)?, gen as u8, t)
            }
            _ => Err(bad("expected vertex/edge/mid")),
        }
    }
}

impl SpaceModel for CayleyModel {
    type Point = CayleyPoint;

    fn matrix(&self) -> &CoxeterMatrix {
        &self.matrix
    }

    fn base_point(&self) -> CayleyPoint {
        CayleyPoint::Vertex(GroupElement::identity())
    }

    fn apply_gen(&self, s: usize, p: &CayleyPoint) -> CayleyPoint {
        let shift = |g: &GroupElement| {
            left_mul(&self.matrix, s as u8, g, &self.caps)
                .expect("left multiplication within caps")
        };
        match p {
            CayleyPoint::Vertex(g) => CayleyPoint::Vertex(shift(g)),
            CayleyPoint::Edge { base, gen, t } => self
                .edge_point(&shift(base), *gen, t.clone())
                .expect("edge image stays a valid edge point"),
        }
    }

    fn dist_sq(&self, p: &CayleyPoint, q: &CayleyPoint) -> Scalar {
        let d = self.dist(p, q).expect("distance within caps");
        Scalar::from_rational(&d * &d)
    }

    fn wall_foot(&self, r: &ReflectionElement, _caps: &Caps) -> Result<CayleyPoint> {
        self.check_reflection(r)?;
        // The fixed set of u s u^-1 consists of edge midpoints; the one
        // nearest the identity sits on the edge {u, u s} since the
        // conjugator has minimal length.
        self.edge_point(r.conjugator(), r.core(), rat(1, 2))
    }

    fn point_between(&self, a: &CayleyPoint, b: &CayleyPoint, t: &Rational) -> Result<CayleyPoint> {
        if t.is_negative() || t > &Rational::one() {
            return Err(SpaceError::NoGeodesicSegment);
        }
        // Same carrying edge: interpolate the parameters directly.
        if let (
            CayleyPoint::Edge { base: b1, gen: g1, t: t1 },
            CayleyPoint::Edge { base: b2, gen: g2, t: t2 },
        ) = (a, b)
        {
            if b1 == b2 && g1 == g2 {
                return self.edge_point(b1, *g1, t1 + t * (t2 - t1));
            }
        }
        // Otherwise the geodesic leaves a through one endpoint of its
        // edge and enters b through one; pick the combination with the
        // smallest total length.
        let mut best: Option<(Rational, GroupElement, Rational, GroupElement, Rational)> = None;
        for (av, ao) in self.ends(a)? {
            for (bv, bo) in self.ends(b)? {
                let mid = self.vdist(&av, &bv)?;
                let total = &ao + &mid + &bo;
                if best.as_ref().is_none_or(|(l, ..)| &total < l) {
                    best = Some((total, av.clone(), ao.clone(), bv, bo));
                }
            }
        }
        let (total, av, ao, bv, bo) = best.expect("ends are never empty");
        if total.is_zero() {
            return Ok(a.clone());
        }
        let target = t * &total;
        if target < ao {
            // Still on a's edge, moving toward the exit vertex `av`.
            let CayleyPoint::Edge { base, gen, t: ta } = a else { unreachable!() };
            let toward_base = av == *base;
            let nt = if toward_base { ta - &target } else { ta + &target };
            return self.edge_point(base, *gen, nt);
        }
        let after_mid = &total - &bo;
        if target > after_mid {
            // Inside b's edge, entered through `bv`.
            let CayleyPoint::Edge { base, gen, t: tb } = b else { unreachable!() };
            let remaining = &bo - (&target - &after_mid);
            let from_base = bv == *base;
            let nt = if from_base { tb - &remaining } else { tb + &remaining };
            return self.edge_point(base, *gen, nt);
        }
        // On the vertex path from av to bv: walk the normal form of
        // av^-1 bv letter by letter.
        let along = &target - &ao;
        let k = along.floor();
        let frac = &along - &k;
        let k = k.to_integer().to_usize().ok_or(SpaceError::NoGeodesicSegment)?;
        let avi = invert(&self.matrix, &av, &self.caps)?;
        let path = multiply(&self.matrix, &avi, &bv, &self.caps)?;
        let letters = path.normal().letters();
        let mut at = av;
        for &s in &letters[..k] {
            at = right_mul(&self.matrix, &at, s, &self.caps)?;
        }
        if frac.is_zero() {
            Ok(CayleyPoint::Vertex(at))
        } else {
            self.edge_point(&at, letters[k], frac)
        }
    }

    fn sample_points(&self, count: usize) -> Vec<CayleyPoint> {
        // Vertices of a small ball plus off-midpoint edge points; no
        // sample parameter is 1/2, so none lies on a wall.
        let ball = Ball::enumerate(&self.matrix, 2, &self.caps)
            .expect("radius-2 ball within caps");
        let params = [rat(1, 4), rat(1, 3), rat(2, 5), rat(2, 3), rat(3, 4), rat(4, 7)];
        let rank = self.matrix.rank();
        (0..count)
            .map(|i| {
                let g = &ball.elements()[i % ball.len()];
                if i % 3 == 0 {
                    CayleyPoint::Vertex(g.clone())
                } else {
                    self.edge_point(g, ((i / 3) % rank) as u8, params[i % params.len()].clone())
                        .expect("sample parameters lie in (0, 1)")
                }
            })
            .collect()
    }
}
