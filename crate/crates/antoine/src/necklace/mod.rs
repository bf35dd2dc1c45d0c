//! Simple chains, defining sequences, tube covers, and thinning.
//!
//! The construction realizes finite stages of an Antoine necklace: a seed
//! solid torus, a simple chain of interlocked children inside it, chains
//! inside each child, and so on. Placements come from shipped defaults (or
//! a live feasibility search); every constructed chain is verified against
//! the chain axioms rather than trusted.

mod chain;
mod cover;
pub mod defaults;
mod sequence;
mod thin;

pub use chain::{
    build_simple_chain, make_standard_torus, verify_chain, verify_chain_with, Chain, ChainParams,
    ChainReport, ChainViolation, OrientationPattern, VerifyOptions,
};
pub use cover::{circle_tube_cover, cover_total_width, minimal_cover_size};
pub use defaults::{chain_params_for, default_chain_params, search_chain_params};
pub use sequence::{build_necklace, BuildOutcome, DefiningSequence, LevelParams, Stage};
pub use thin::{thin_to_tubes, ThinOutcome};

use thiserror::Error;

use crate::geom::GeomError;

#[derive(Debug, Error)]
pub enum NecklaceError {
    #[error("torus radii must satisfy 0 < minor < major, got major {major}, minor {minor}")]
    BadRadii { major: f64, minor: f64 },
    #[error("torus center does not lie in the given plane")]
    CenterOffPlane,
    #[error("bad chain parameters: {reason}")]
    BadParams { reason: String },
    #[error("no shipped default parameters for ratio {ratio}; run the feasibility search")]
    NoDefaultParams { ratio: f64 },
    #[error("chain construction infeasible at level {level}")]
    Infeasible { level: usize, report: Box<ChainReport> },
    #[error("thinning degenerate at level {level}: required minor radius {required}")]
    Degenerate { level: usize, required: f64 },
    #[error(transparent)]
    Geometry(#[from] GeomError),
}

impl NecklaceError {
    pub(crate) fn at_level(self, level: usize) -> NecklaceError {
        match self {
            NecklaceError::Infeasible { report, .. } => NecklaceError::Infeasible { level, report },
            other => other,
        }
    }
}
