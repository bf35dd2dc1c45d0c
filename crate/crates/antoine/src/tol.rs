//! Comparison tolerances and solver knobs, all in one place.
//!
//! Every numeric threshold used by the library is a named constant here so
//! that accuracy claims in the verifiers are auditable. Nothing in the crate
//! compares floats against inline literals.

/// Unit-norm and pairwise-orthogonality tolerance for direction vectors and
/// frames. f64 normalization lands well inside this.
pub const ORTHONORMAL_TOL: f64 = 1e-12;

/// Treat squared norms below this as the zero vector.
pub const ZERO_VECTOR_TOL: f64 = 1e-30;

/// Target accuracy for the circle-to-circle minimum distance refinement.
pub const CIRCLE_DISTANCE_TOL: f64 = 1e-9;

/// Seed grid resolution per parameter for circle-to-circle distance
/// (grid seeding followed by damped Newton refinement).
pub const CIRCLE_DISTANCE_GRID: usize = 64;

/// Newton iteration cap for distance refinement.
pub const DISTANCE_NEWTON_MAX_ITERS: usize = 60;

/// Coarse scan resolution for circle-to-line distance (rasterizer inner loop).
pub const CIRCLE_LINE_SCAN: usize = 32;

/// Relative accuracy of the circle-to-line distance refinement.
pub const CIRCLE_LINE_REFINE_TOL: f64 = 1e-12;

/// Gauss linking integral: accept the rounded integer once the residual from
/// the nearest integer drops below this.
pub const LINKING_ACCEPT_RESIDUAL: f64 = 0.05;

/// Gauss linking integral: past the segment budget, a residual at or above
/// this is a hard failure rather than a silent rounding.
pub const LINKING_FAIL_RESIDUAL: f64 = 0.1;

/// Segment-pair budget for the linking quadrature (product of the two
/// per-circle segment counts). Doubling stops once the next refinement
/// would exceed this.
pub const LINKING_MAX_SEGMENT_PAIRS: u64 = 1 << 20;

/// Initial per-circle segment count for the linking quadrature.
pub const LINKING_INITIAL_SEGMENTS: usize = 64;

/// Circles closer than this (relative to their scale) are treated as
/// intersecting for the purposes of the linking integral.
pub const CIRCLES_INTERSECT_TOL: f64 = 1e-9;

/// Distances under similarity transforms must scale exactly up to this.
pub const SIMILARITY_METRIC_TOL: f64 = 1e-9;

/// Composition of similarities vs. sequential application.
pub const SIMILARITY_COMPOSE_TOL: f64 = 1e-10;

/// Strict-interior containment margin for nested tori, as a fraction of the
/// parent minor radius. Gives "child inside the open interior" a testable
/// quantitative meaning.
pub const CONTAINMENT_MARGIN_FACTOR: f64 = 1e-6;

/// Thinning fails as degenerate when the required minor radius falls below
/// this fraction of the parent scale.
pub const DEGENERATE_MINOR_FACTOR: f64 = 1e-9;

/// When a torus is shrunk to fit a tube cover, the new minor radius is this
/// fraction of the tube radius. The slack (1/2 - 3/8 = 1/8 of the tube
/// radius) absorbs both the coverage-margin requirement and the sampling
/// granularity of the coverage check; see `necklace::thin`.
pub const THIN_FIT_FRACTION: f64 = 0.375;

/// Coverage evidence: boundary/core samples are spaced at most
/// (min tube radius) / COVER_SAMPLE_DIVISOR apart.
pub const COVER_SAMPLE_DIVISOR: f64 = 8.0;

/// Coverage evidence: required clearance inside a covering tube, at least
/// (min tube radius) / COVER_MARGIN_DIVISOR.
pub const COVER_MARGIN_DIVISOR: f64 = 16.0;

/// Boundary sampling step (radians) when verifying chain containment.
pub const CHAIN_BOUNDARY_SAMPLES: usize = 96;

/// Tube angle samples when verifying chain containment on the torus surface.
pub const CHAIN_TUBE_SAMPLES: usize = 24;

/// Positions on a regular q-gon must match the chain layout to this
/// relative accuracy for the `regular_polygon` flag.
pub const POLYGON_LAYOUT_TOL: f64 = 1e-9;

/// Default gap-scan resolution for line projection intervals.
pub const GAP_RESOLUTION: f64 = 1e-3;

/// Degenerate-fit residual bound for the box-counting slope. A least-squares
/// fit with RMS residual above this is reported as an error rather than a
/// dimension estimate.
pub const BOXDIM_MAX_RESIDUAL: f64 = 0.5;

/// Zero-area cutoff for planar polygons.
pub const PLANAR_AREA_TOL: f64 = 1e-12;

/// Default direction grid step (degrees) for planar shadow-cover checks,
/// used on top of the exact critical angles.
pub const PLANAR_GRID_STEP_DEG: f64 = 1.0;
