//! Constructive engine for Antoine necklaces with certified shadow control.
//!
//! The crate builds defining sequences of nested, cyclically linked solid
//! tori in R³, verifies the chain axioms (disjointness, containment, regular
//! placement, linking pattern), thins stages into tube covers whose total
//! width certifies — via the plank theorem — that no orthogonal shadow of the
//! stage contains a disk of a given radius, and rasterizes shadows to check
//! connectivity and inscribed-disk bounds numerically. A separate planar
//! module builds Cantor sets inside polygons whose line shadows coincide with
//! the polygon's, by iterating an exact-cover hexagon pattern.
//!
//! Modules
//! - [`geom`]: exact-as-possible primitives and numeric kernels.
//! - [`necklace`]: simple chains, defining sequences, tube covers, thinning.
//! - [`shadow`]: conservative shadow rasters and their analysis.
//! - [`certify`]: plank certificates and their machine checking.
//! - [`planar`]: polygon Cantor sets with exact line-shadow covers.

pub mod certify;
pub(crate) mod exec;
pub mod geom;
pub mod necklace;
pub mod planar;
pub mod shadow;
pub mod tol;

pub use exec::execution_mode;
