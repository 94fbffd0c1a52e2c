//! Geodesic-space models with isometric reflection-group actions:
//! exact scalars, three concrete models (line, planar triangle, Cayley
//! graph), and the generic wall/chamber operations over them.

pub mod cayley;
pub mod error;
pub mod line;
pub mod model;
pub mod ops;
pub mod scalar;
pub mod tile;
pub mod triangle;

pub use cayley::{CayleyModel, CayleyPoint};
pub use error::{Result, SpaceError};
pub use line::LineModel;
pub use model::{Membership, Side, SpaceModel};
pub use ops::{
    chamber_membership, check_chamber_sides, check_chamber_stabilizer, check_length_side,
    check_side_trichotomy, check_wall_separation, descend, gallery_distance, generator_side,
    minimal_wall_set, properness_count, side, wall_neighborhood_witness, Descent, ScanReport,
    WallNeighborhoodWitness,
};
pub use scalar::{rat, Rational, Scalar};
pub use tile::{interiors_disjoint, render_json, render_svg, shared_vertices, tile, Chamber};
pub use triangle::{PlaneTriangleModel, Point2, TriangleKind};
