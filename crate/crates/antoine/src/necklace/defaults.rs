//! Shipped chain-placement defaults, found by feasibility search.
//!
//! The construction only pins down placement qualitatively (enough children,
//! thin enough, interlocking); the concrete numbers below were found by
//! [`search_chain_params`] — a coarse grid scan over the minimal feasible
//! even q and the two shape ratios, validated by `verify_chain` and scored by
//! the worst geometric margin — and then frozen here. They are
//! implementation-derived defaults, not canonical values.

use crate::geom::SolidTorus;
use crate::necklace::chain::{place_chain, verify_chain, ChainParams, OrientationPattern};
use crate::necklace::NecklaceError;

/// Table rows: parent minor/major ratio range `[lo, hi)` mapped to the
/// placement found at the range's lower edge (feasibility is monotone in
/// the ratio: a fatter parent only gains clearance). Child minor ratio is
/// 0.12 throughout, so every level after the first lands in the
/// `[0.12, 0.15)` bucket and the construction becomes self-similar. Ratios
/// outside the table fall back to a live search.
const DEFAULTS: &[(f64, f64, ChainParams)] = &[
    (
        0.0607,
        0.1,
        ChainParams {
            q: 68,
            child_major_scale: 1.16,
            child_minor_ratio: 0.12,
            orientation_pattern: OrientationPattern::Alternating,
        },
    ),
    (
        0.1,
        0.12,
        ChainParams {
            q: 42,
            child_major_scale: 1.16,
            child_minor_ratio: 0.12,
            orientation_pattern: OrientationPattern::Alternating,
        },
    ),
    (
        0.12,
        0.15,
        ChainParams {
            q: 36,
            child_major_scale: 1.2,
            child_minor_ratio: 0.12,
            orientation_pattern: OrientationPattern::Alternating,
        },
    ),
    (
        0.15,
        0.2,
        ChainParams {
            q: 28,
            child_major_scale: 1.16,
            child_minor_ratio: 0.12,
            orientation_pattern: OrientationPattern::Alternating,
        },
    ),
    (
        0.2,
        0.25,
        ChainParams {
            q: 22,
            child_major_scale: 1.2,
            child_minor_ratio: 0.12,
            orientation_pattern: OrientationPattern::Alternating,
        },
    ),
    (
        0.25,
        0.3,
        ChainParams {
            q: 18,
            child_major_scale: 1.2,
            child_minor_ratio: 0.12,
            orientation_pattern: OrientationPattern::Alternating,
        },
    ),
    (
        0.3,
        0.34,
        ChainParams {
            q: 16,
            child_major_scale: 1.24,
            child_minor_ratio: 0.12,
            orientation_pattern: OrientationPattern::Alternating,
        },
    ),
];

/// Default placement for a parent with the given minor/major ratio.
pub fn default_chain_params(ratio: f64) -> Result<ChainParams, NecklaceError> {
    if !(ratio > 0.0 && ratio < 1.0) {
        return Err(NecklaceError::BadParams { reason: format!("torus ratio out of range: {ratio}") });
    }
    for &(lo, hi, params) in DEFAULTS {
        if ratio >= lo && ratio < hi {
            return Ok(params);
        }
    }
    Err(NecklaceError::NoDefaultParams { ratio })
}

/// Defaults when available, otherwise a live feasibility search.
pub fn chain_params_for(parent: &SolidTorus) -> Result<ChainParams, NecklaceError> {
    let ratio = parent.minor_radius / parent.major_radius();
    match default_chain_params(ratio) {
        Ok(p) => Ok(p),
        Err(NecklaceError::NoDefaultParams { .. }) => search_chain_params(parent)
            .ok_or(NecklaceError::Infeasible { level: 0, report: Box::new(empty_report()) }),
        Err(e) => Err(e),
    }
}

fn empty_report() -> crate::necklace::chain::ChainReport {
    crate::necklace::chain::ChainReport {
        disjoint: false,
        contained: false,
        regular_polygon: false,
        linking_pattern: false,
        null_homotopy_proxy: false,
        min_separation: f64::NEG_INFINITY,
        min_containment_margin: f64::NEG_INFINITY,
        max_linking_residual: f64::INFINITY,
        first_violation: None,
    }
}

/// Minimal normalized margin (separation and containment over the parent
/// minor radius) a search candidate must clear. Razor-thin placements pass
/// the verifier but leave nothing for thinning or perturbation.
const SEARCH_SCORE_FLOOR: f64 = 0.005;

/// Scans for feasible chain parameters: the minimal feasible even q whose
/// best candidate clears the robustness floor (candidates are pre-filtered
/// by cheap containment/separation margins, then the best-scoring few run
/// the full verifier including the linking pass). Returns the best-margin
/// parameters at that q.
pub fn search_chain_params(parent: &SolidTorus) -> Option<ChainParams> {
    let ratio = parent.minor_radius / parent.major_radius();
    // Interlocking needs child_major > half-chord and containment needs
    // child_major(1 + minor_ratio) < parent minor, so sin(π/q) has to be
    // comfortably below the ratio.
    let q_min = {
        let bound = (std::f64::consts::PI / ratio.asin()).ceil() as usize;
        let q = bound.max(4);
        if q % 2 == 0 {
            q
        } else {
            q + 1
        }
    };

    for q in (q_min..q_min + 60).step_by(2) {
        let mut scored: Vec<(f64, ChainParams)> = Vec::new();
        for &ms in &[1.08, 1.12, 1.16, 1.2, 1.24, 1.28, 1.32] {
            for &mr in &[0.12, 0.16, 0.2, 0.24] {
                let params = ChainParams {
                    q,
                    child_major_scale: ms,
                    child_minor_ratio: mr,
                    orientation_pattern: OrientationPattern::Alternating,
                };
                if let Some(score) = cheap_margin_score(parent, &params) {
                    if score >= SEARCH_SCORE_FLOOR {
                        scored.push((score, params));
                    }
                }
            }
        }
        scored.sort_by(|a, b| b.0.total_cmp(&a.0));
        for (_, params) in scored.into_iter().take(3) {
            let chain = match place_chain(parent, &params) {
                Ok(c) => c,
                Err(_) => continue,
            };
            if verify_chain(&chain).all_ok() {
                return Some(params);
            }
        }
    }
    None
}

/// Margin score without the linking pass: min of the separation and
/// containment margins, normalized by the parent minor radius. `None` if any
/// cheap axiom already fails.
fn cheap_margin_score(parent: &SolidTorus, params: &ChainParams) -> Option<f64> {
    let chain = place_chain(parent, params).ok()?;
    let opts = crate::necklace::chain::VerifyOptions { check_linking: false };
    let report = crate::necklace::chain::verify_chain_with(&chain, opts);
    if !(report.disjoint && report.contained && report.null_homotopy_proxy) {
        return None;
    }
    // Interlocking prerequisite for the linking pass: child cores must reach
    // past the midpoint between neighbors.
    if params.child_major_scale <= 1.0 {
        return None;
    }
    Some(report.min_separation.min(report.min_containment_margin) / parent.minor_radius)
}
