//! Geometric primitives: points, lines, planes, circles, solid tori, tubes,
//! similarity transforms, distances, and linking numbers.
//!
//! Everything is immutable after construction and every operation is pure,
//! so values may be shared freely across threads.

mod dist;
mod linking;
mod plane;
mod shapes;
mod similarity;
mod vec;

pub use dist::{
    circle_distance, circle_distance_oracle, circle_line_distance, line_line_distance,
    torus_separation,
};
pub use linking::{gauss_integral, linking_number, linking_number_detailed};
pub use plane::Plane3;
pub use shapes::{ApplySimilarity, Circle3, Line3, SolidTorus, Strip2, Tube};
pub use similarity::{Rot3, Similarity3};
pub use vec::{Dir3, Point3, Vec3};

use thiserror::Error;

#[derive(Debug, Error)]
pub enum GeomError {
    #[error("cannot normalize a zero vector")]
    ZeroVector,
    #[error("basis vector {axis} is not orthonormal")]
    NotOrthonormal { axis: usize },
    #[error("frame is not right-handed (det = {det})")]
    NotRightHanded { det: f64 },
    #[error("scale must be positive, got {scale}")]
    NonPositiveScale { scale: f64 },
    #[error("radius must be positive, got {radius}")]
    NonPositiveRadius { radius: f64 },
    #[error("solid torus requires 0 < minor < major, got major {major}, minor {minor}")]
    BadTorusRadii { major: f64, minor: f64 },
    #[error("spanning vectors are linearly dependent")]
    DegenerateSpan,
    #[error("circles intersect; the linking number is undefined")]
    CirclesIntersect,
    #[error("linking quadrature did not converge (residual {residual})")]
    LinkingNonConvergent { residual: f64 },
}
