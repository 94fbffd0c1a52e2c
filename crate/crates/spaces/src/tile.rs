//! Tilings of the plane by chamber images of a triangle model, with
//! exact overlap predicates and SVG / JSON renderings.

use crate::error::Result;
use crate::model::SpaceModel;
use crate::scalar::Scalar;
use crate::triangle::{PlaneTriangleModel, Point2};
use coxeter_core::{Ball, Caps, GroupElement};
use serde::Serialize;
use std::fmt::Write as _;

#[derive(Debug, Clone)]
pub struct Chamber {
    pub element: GroupElement,
    pub vertices: [Point2; 3],
}

/// The chamber images `gamma * base` for every `gamma` in the group
/// ball, in ball (ShortLex) order.
pub fn tile(model: &PlaneTriangleModel, graph_radius: usize, caps: &Caps) -> Result<Vec<Chamber>> {
    let ball = Ball::enumerate(model.matrix(), graph_radius, caps)?;
    Ok(ball
        .elements()
        .iter()
        .map(|gamma| {
            let vs = model.vertices();
            Chamber {
                element: gamma.clone(),
                vertices: [
                    model.apply(gamma, &vs[0]),
                    model.apply(gamma, &vs[1]),
                    model.apply(gamma, &vs[2]),
                ],
            }
        })
        .collect())
}

/// Twice the signed area of the triangle `(a, b, c)`.
fn orientation(a: &Point2, b: &Point2, c: &Point2) -> Scalar {
    let abx = &b.x - &a.x;
    let aby = &b.y - &a.y;
    let acx = &c.x - &a.x;
    let acy = &c.y - &a.y;
    &(&abx * &acy) - &(&aby * &acx)
}

/// Exact separating-axis test: the open interiors of two triangles are
/// disjoint exactly when some edge line of either triangle has one
/// triangle entirely on its closed near side and the other on the
/// closed far side.
pub fn interiors_disjoint(t1: &[Point2; 3], t2: &[Point2; 3]) -> bool {
    separated_by_edges(t1, t2) || separated_by_edges(t2, t1)
}

fn separated_by_edges(edges_of: &[Point2; 3], other: &[Point2; 3]) -> bool {
    (0..3).any(|i| {
        let a = &edges_of[i];
        let b = &edges_of[(i + 1) % 3];
        let c = &edges_of[(i + 2) % 3];
        let own = orientation(a, b, c).signum();
        // Degenerate triangles never occur here; all chambers have the
        // base triangle's area.
        debug_assert!(own != 0);
        (0..3).all(|j| orientation(a, b, &other[j]).signum() != own)
    })
}

/// Vertices shared exactly (counted with equality, not tolerance).
pub fn shared_vertices(t1: &[Point2; 3], t2: &[Point2; 3]) -> usize {
    t1.iter().filter(|v| t2.contains(v)).count()
}

#[derive(Debug, Serialize)]
struct ChamberJson {
    word: String,
    vertices: [[String; 2]; 3],
}

/// JSON rendering with exact coordinates serialized as scalar strings.
pub fn render_json(model: &PlaneTriangleModel, chambers: &[Chamber]) -> String {
    let m = model.matrix();
    let rows: Vec<ChamberJson> = chambers
        .iter()
        .map(|c| ChamberJson {
            word: c.element.to_text(m),
            vertices: [
                [c.vertices[0].x.to_string(), c.vertices[0].y.to_string()],
                [c.vertices[1].x.to_string(), c.vertices[1].y.to_string()],
                [c.vertices[2].x.to_string(), c.vertices[2].y.to_string()],
            ],
        })
        .collect();
    let mut out = serde_json::to_string_pretty(&rows).expect("chamber rows serialize");
    out.push('\n');
    out
}

/// SVG rendering: one polygon per chamber, the normal-form word as its
/// title. Coordinates are approximated only here, at the drawing
/// boundary; the y axis is flipped so the picture matches the usual
/// orientation.
pub fn render_svg(model: &PlaneTriangleModel, chambers: &[Chamber]) -> String {
    let m = model.matrix();
    // Flush negative zero so identical geometry always prints
    // identical bytes.
    let fix = |v: f64| if v == 0.0 { 0.0 } else { v };
    let coords: Vec<[(f64, f64); 3]> = chambers
        .iter()
        .map(|c| {
            [
                (fix(c.vertices[0].x.to_f64()), fix(-c.vertices[0].y.to_f64())),
                (fix(c.vertices[1].x.to_f64()), fix(-c.vertices[1].y.to_f64())),
                (fix(c.vertices[2].x.to_f64()), fix(-c.vertices[2].y.to_f64())),
            ]
        })
        .collect();
    let xs = coords.iter().flatten().map(|p| p.0);
    let ys = coords.iter().flatten().map(|p| p.1);
    let min_x = xs.clone().fold(f64::INFINITY, f64::min);
    let max_x = xs.fold(f64::NEG_INFINITY, f64::max);
    let min_y = ys.clone().fold(f64::INFINITY, f64::min);
    let max_y = ys.fold(f64::NEG_INFINITY, f64::max);
    let pad = 0.1;
    let mut out = String::new();
    let _ = writeln!(
        out,
        "<svg xmlns=\"http://www.w3.org/2000/svg\" viewBox=\"{:.4} {:.4} {:.4} {:.4}\">",
        min_x - pad,
        min_y - pad,
        (max_x - min_x) + 2.0 * pad,
        (max_y - min_y) + 2.0 * pad
    );
    for (chamber, tri) in chambers.iter().zip(&coords) {
        let points = tri
            .iter()
            .map(|(x, y)| format!("{x:.6},{y:.6}"))
            .collect::<Vec<_>>()
            .join(" ");
        let fill = if chamber.element.length() % 2 == 0 { "#c8d8f0" } else { "#f0e0c8" };
        let _ = writeln!(
            out,
            "  <polygon points=\"{points}\" fill=\"{fill}\" stroke=\"#303030\" \
             stroke-width=\"0.01\"><title>{}</title></polygon>",
            chamber.element.to_text(m)
        );
    }
    out.push_str("</svg>\n");
    out
}
