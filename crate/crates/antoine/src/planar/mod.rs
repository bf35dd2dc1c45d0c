//! Planar Cantor sets inside polygons with exactly matching line shadows.
//!
//! Everything here is closed-form interval arithmetic on polygon vertices;
//! no rasterization. The shadow-cover predicate is the load-bearing piece:
//! a pattern of affine hexagon copies is accepted only if, for every tested
//! direction, the union of the copies' shadows covers the parent's shadow
//! with no gap.

mod cantor;
mod cover;
mod ifs;
mod poly;
pub mod search;

pub use cantor::{build_planar_cantor, pieces_min_separation, triangle_union_cantor, CollarCantor};
pub use cover::{
    critical_angles, degree_grid, shadow_cover_check, union_cover_check, CoverVerdict, CoverWitness,
};
pub use ifs::{builtin_hexagon_pattern, validate_pattern, AffineMap2, PatternFile, PlanarIFS};
pub use poly::ConvexPoly2;

use thiserror::Error;

#[derive(Debug, Error)]
pub enum PlanarError {
    #[error("polygon needs at least 3 vertices, got {got}")]
    TooFewVertices { got: usize },
    #[error("polygon is degenerate (area {area})")]
    DegeneratePolygon { area: f64 },
    #[error("vertices are not in strictly convex counterclockwise order (vertex {vertex})")]
    NotConvexCcw { vertex: usize },
    #[error("iterated function system has no maps")]
    EmptyIfs,
    #[error("affine map is singular")]
    SingularMap,
    #[error("maps are not contractions (lambda = {lambda})")]
    NotContracting { lambda: f64 },
    #[error("piece {index} is not contained in the root")]
    PieceOutsideRoot { index: usize },
    #[error("pieces {i} and {j} overlap")]
    PiecesOverlap { i: usize, j: usize },
    #[error("shadow cover broken at level {level}: gap {gap} at angle {angle}")]
    CoverBroken { level: usize, angle: f64, gap: f64 },
    #[error("boundary collar failed near ({}, {})", witness[0], witness[1])]
    CollarFail { witness: [f64; 2] },
    #[error("expected a triangle, got {vertices} vertices")]
    NotATriangle { vertices: usize },
    #[error("empty input")]
    EmptyInput,
}
