//! Simple chains of linked solid tori and their verification.
//!
//! A simple chain in a solid torus `T` is a family of q ≥ 3 pairwise
//! disjoint congruent solid tori inside the interior of `T`, centered at the
//! vertices of a regular q-gon inscribed in the central circle of `T`,
//! consecutively linked in a cycle and unlinked otherwise, with each child
//! core null-homotopic in `T`.

use serde::{Deserialize, Serialize};

use crate::exec;
use crate::geom::{
    circle_distance, linking_number_detailed, Circle3, Dir3, Plane3, Point3, SolidTorus,
};
use crate::necklace::NecklaceError;
use crate::tol;

/// How child core planes are oriented around the parent core circle.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize, Deserialize)]
#[serde(rename_all = "snake_case")]
pub enum OrientationPattern {
    /// Core planes alternate between (tangent, parent-normal) and
    /// (tangent, radial) spans, like the links of a physical chain.
    /// Requires an even q.
    Alternating,
}

/// Placement parameters for one chain subdivision.
#[derive(Debug, Clone, Copy, PartialEq, Serialize, Deserialize)]
pub struct ChainParams {
    /// Number of children; at least 3, and even for the alternating pattern.
    pub q: usize,
    /// Child core radius as a multiple of the inter-center half-chord
    /// R·sin(π/q). Values above 1 make consecutive cores interlock.
    pub child_major_scale: f64,
    /// Child minor radius as a fraction of the child core radius.
    pub child_minor_ratio: f64,
    pub orientation_pattern: OrientationPattern,
}

impl ChainParams {
    pub fn validate(&self) -> Result<(), NecklaceError> {
        if self.q < 3 {
            return Err(NecklaceError::BadParams { reason: format!("q must be >= 3, got {}", self.q) });
        }
        if self.orientation_pattern == OrientationPattern::Alternating && self.q % 2 != 0 {
            return Err(NecklaceError::BadParams {
                reason: format!("alternating pattern requires even q, got {}", self.q),
            });
        }
        if !(self.child_minor_ratio > 0.0 && self.child_minor_ratio < 1.0) {
            return Err(NecklaceError::BadParams {
                reason: format!("child_minor_ratio must be in (0,1), got {}", self.child_minor_ratio),
            });
        }
        if !(self.child_major_scale > 0.0) {
            return Err(NecklaceError::BadParams {
                reason: format!("child_major_scale must be positive, got {}", self.child_major_scale),
            });
        }
        Ok(())
    }
}

/// A parent torus with its chain of children.
#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
pub struct Chain {
    pub parent: SolidTorus,
    pub children: Vec<SolidTorus>,
}

/// Outcome of checking the chain axioms, one flag per condition. The report
/// carries the first violating pair (or torus) for each failed flag.
#[derive(Debug, Clone, Serialize, Deserialize)]
pub struct ChainReport {
    pub disjoint: bool,
    pub contained: bool,
    pub regular_polygon: bool,
    pub linking_pattern: bool,
    pub null_homotopy_proxy: bool,
    /// Smallest pairwise separation lower bound over all child pairs.
    pub min_separation: f64,
    /// Smallest clearance of child boundary samples inside the parent.
    pub min_containment_margin: f64,
    /// Largest residual of the Gauss integral from its integer over all pairs.
    pub max_linking_residual: f64,
    /// First failing pair per category, if any.
    pub first_violation: Option<ChainViolation>,
}

#[derive(Debug, Clone, Serialize, Deserialize)]
pub enum ChainViolation {
    Overlap { i: usize, j: usize, separation: f64 },
    NotContained { i: usize, margin: f64 },
    OffPolygon { i: usize },
    WrongLinking { i: usize, j: usize, expected: i32, got: i32 },
    LinkingFailed { i: usize, j: usize, reason: String },
    NotNullHomotopic { i: usize },
}

impl ChainReport {
    pub fn all_ok(&self) -> bool {
        self.disjoint
            && self.contained
            && self.regular_polygon
            && self.linking_pattern
            && self.null_homotopy_proxy
    }
}

/// Builds a standard solid torus of revolution: the disk of radius `r`
/// centered at `center` revolved about an axis in `plane` at distance `R`.
///
/// The core circle lies in `plane`, centered at the foot of the rotation
/// axis, which is `center` here since the caller gives the core center
/// directly.
pub fn make_standard_torus(
    plane: &Plane3,
    center: Point3,
    major_radius: f64,
    minor_radius: f64,
) -> Result<SolidTorus, NecklaceError> {
    if plane.dim() != 2 {
        return Err(NecklaceError::BadParams { reason: "torus plane must be 2-dimensional".into() });
    }
    if !(major_radius > minor_radius && minor_radius > 0.0) {
        return Err(NecklaceError::BadRadii { major: major_radius, minor: minor_radius });
    }
    if plane.project_embedded(center).distance(center) > tol::ORTHONORMAL_TOL.sqrt() {
        return Err(NecklaceError::CenterOffPlane);
    }
    let (u, v) = (plane.basis()[0], plane.basis()[1]);
    let core = Circle3::with_frame(center, major_radius, u, v).map_err(NecklaceError::Geometry)?;
    SolidTorus::new(core, minor_radius).map_err(NecklaceError::Geometry)
}

/// Places a simple chain of `params.q` congruent children inside `parent`.
///
/// Child k sits at angle 2πk/q on the parent core circle. Its core plane is
/// spanned by the local tangent and, alternating with k, either the parent
/// plane normal or the outward radial direction. The construction is
/// validated with [`verify_chain`] and rejected as infeasible if any axiom
/// fails, which happens when the children are too few or too fat for the
/// parent's r/R ratio.
pub fn build_simple_chain(parent: &SolidTorus, params: &ChainParams) -> Result<Chain, NecklaceError> {
    let chain = place_chain(parent, params)?;
    let report = verify_chain(&chain);
    if !report.all_ok() {
        return Err(NecklaceError::Infeasible { level: 0, report: Box::new(report) });
    }
    Ok(chain)
}

/// Chain placement without verification. Used by the feasibility search.
pub(crate) fn place_chain(parent: &SolidTorus, params: &ChainParams) -> Result<Chain, NecklaceError> {
    params.validate()?;
    let q = params.q;
    let core = &parent.core;
    let (u, v) = core.frame();
    let normal = core.normal;

    let half_chord = core.radius * (std::f64::consts::PI / q as f64).sin();
    let child_major = params.child_major_scale * half_chord;
    let child_minor = params.child_minor_ratio * child_major;

    let mut children = Vec::with_capacity(q);
    for k in 0..q {
        let alpha = std::f64::consts::TAU * k as f64 / q as f64;
        let (sa, ca) = alpha.sin_cos();
        let center = core.point_at(alpha);
        let radial = Dir3::new(u.scaled(ca) + v.scaled(sa)).expect("unit radial");
        let tangent = Dir3::new(u.scaled(-sa) + v.scaled(ca)).expect("unit tangent");
        let second = if k % 2 == 0 { normal } else { radial };
        let child_core = Circle3::with_frame(center, child_major, tangent, second)
            .map_err(NecklaceError::Geometry)?;
        children.push(SolidTorus::new(child_core, child_minor).map_err(NecklaceError::Geometry)?);
    }
    Ok(Chain { parent: *parent, children })
}

/// Options for [`verify_chain_with`]. Thinning re-verification skips the
/// linking pass: cores are unchanged by construction, so the pattern is
/// preserved exactly and only the radius-dependent flags need recomputing.
#[derive(Debug, Clone, Copy)]
pub struct VerifyOptions {
    pub check_linking: bool,
}

impl Default for VerifyOptions {
    fn default() -> Self {
        VerifyOptions { check_linking: true }
    }
}

/// Checks all chain axioms and reports each flag independently.
pub fn verify_chain(chain: &Chain) -> ChainReport {
    verify_chain_with(chain, VerifyOptions::default())
}

pub fn verify_chain_with(chain: &Chain, opts: VerifyOptions) -> ChainReport {
    let q = chain.children.len();
    let mut report = ChainReport {
        disjoint: true,
        contained: true,
        regular_polygon: true,
        linking_pattern: true,
        null_homotopy_proxy: true,
        min_separation: f64::INFINITY,
        min_containment_margin: f64::INFINITY,
        max_linking_residual: 0.0,
        first_violation: None,
    };

    // Pairwise disjointness via the core-distance lower bound.
    let pairs: Vec<(usize, usize)> =
        (0..q).flat_map(|i| ((i + 1)..q).map(move |j| (i, j))).collect();
    let seps = exec::map_collect(&pairs, |&(i, j)| {
        let a = &chain.children[i];
        let b = &chain.children[j];
        circle_distance(&a.core, &b.core) - a.minor_radius - b.minor_radius
    });
    for (&(i, j), &sep) in pairs.iter().zip(&seps) {
        report.min_separation = report.min_separation.min(sep);
        if sep <= 0.0 && report.disjoint {
            report.disjoint = false;
            report.first_violation.get_or_insert(ChainViolation::Overlap { i, j, separation: sep });
        }
    }

    // Containment: boundary samples of each child strictly interior to the
    // parent, with the quantified margin.
    let margin_required = tol::CONTAINMENT_MARGIN_FACTOR * chain.parent.minor_radius;
    let margins = exec::map_collect(&chain.children, |child| containment_margin(&chain.parent, child));
    for (i, &margin) in margins.iter().enumerate() {
        report.min_containment_margin = report.min_containment_margin.min(margin);
        if margin <= margin_required && report.contained {
            report.contained = false;
            report.first_violation.get_or_insert(ChainViolation::NotContained { i, margin });
        }
    }

    // Regular q-gon layout on the parent core circle.
    let core = &chain.parent.core;
    let polygon_tol = tol::POLYGON_LAYOUT_TOL * core.radius;
    for (k, child) in chain.children.iter().enumerate() {
        let alpha = std::f64::consts::TAU * k as f64 / q as f64;
        if child.core.center.distance(core.point_at(alpha)) > polygon_tol {
            report.regular_polygon = false;
            report.first_violation.get_or_insert(ChainViolation::OffPolygon { i: k });
            break;
        }
    }

    // Cyclic linking pattern: ±1 for |i − j| ≡ 1 (mod q), 0 otherwise.
    if opts.check_linking {
        let links = exec::map_collect(&pairs, |&(i, j)| {
            linking_number_detailed(&chain.children[i].core, &chain.children[j].core)
        });
        for (&(i, j), lk) in pairs.iter().zip(links) {
            let adjacent = (i + 1 == j) || (i == 0 && j == q - 1);
            match lk {
                Ok((value, residual)) => {
                    report.max_linking_residual = report.max_linking_residual.max(residual);
                    let ok = if adjacent { value.abs() == 1 } else { value == 0 };
                    if !ok && report.linking_pattern {
                        report.linking_pattern = false;
                        report.first_violation.get_or_insert(ChainViolation::WrongLinking {
                            i,
                            j,
                            expected: if adjacent { 1 } else { 0 },
                            got: value,
                        });
                    }
                }
                Err(e) => {
                    report.max_linking_residual = 1.0;
                    if report.linking_pattern {
                        report.linking_pattern = false;
                        report.first_violation.get_or_insert(ChainViolation::LinkingFailed {
                            i,
                            j,
                            reason: e.to_string(),
                        });
                    }
                }
            }
        }
    }

    // Null-homotopy proxy: the child core fits in a round ball that fits in
    // the parent's interior. A ball centered on the parent core circle stays
    // inside the parent iff its radius is below the parent minor radius, so
    // the check reduces to child major radius < parent minor radius (with
    // the placement pinning child centers to the parent core). Sufficient,
    // not necessary.
    for (i, child) in chain.children.iter().enumerate() {
        let center_on_core = chain.parent.core.distance_to_point(child.core.center);
        let ball_fits = center_on_core + child.core.radius < chain.parent.minor_radius;
        if !ball_fits {
            report.null_homotopy_proxy = false;
            report.first_violation.get_or_insert(ChainViolation::NotNullHomotopic { i });
            break;
        }
    }

    report
}

/// Worst-case clearance of the child inside the parent, sampled over the
/// child's boundary surface. Positive means strictly interior.
pub(crate) fn containment_margin(parent: &SolidTorus, child: &SolidTorus) -> f64 {
    let nt = tol::CHAIN_BOUNDARY_SAMPLES;
    let np = tol::CHAIN_TUBE_SAMPLES;
    let mut worst = f64::INFINITY;
    for it in 0..nt {
        let theta = std::f64::consts::TAU * it as f64 / nt as f64;
        for ip in 0..np {
            let psi = std::f64::consts::TAU * ip as f64 / np as f64;
            let p = child.surface_point(theta, psi);
            worst = worst.min(-parent.signed_distance(p));
            if worst < 0.0 {
                return worst;
            }
        }
    }
    worst
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::geom::{linking_number, ApplySimilarity, Rot3, Similarity3, Vec3};
    use crate::necklace::defaults::default_chain_params;

    #[test]
    fn standard_torus_definition_unrolled() {
        let t = make_standard_torus(&Plane3::xy(), Point3::ORIGIN, 2.0, 0.5).unwrap();
        // Membership (√(x²+y²) − 2)² + z² ≤ 0.25.
        let inside = |x: f64, y: f64, z: f64| {
            let rho = (x * x + y * y).sqrt();
            (rho - 2.0) * (rho - 2.0) + z * z <= 0.25
        };
        for p in [
            Point3::new(2.0, 0.0, 0.3),
            Point3::new(-1.6, 0.0, 0.0),
            Point3::new(0.0, 2.5, 0.01),
            Point3::new(1.0, 1.0, 0.2),
        ] {
            assert_eq!(t.contains(p), inside(p.x, p.y, p.z), "at {p:?}");
        }
    }

    #[test]
    fn equal_radii_rejected() {
        let err = make_standard_torus(&Plane3::xy(), Point3::ORIGIN, 1.0, 1.0);
        assert!(matches!(err, Err(NecklaceError::BadRadii { .. })));
    }

    #[test]
    fn off_plane_center_rejected() {
        let err = make_standard_torus(&Plane3::xy(), Point3::new(0.0, 0.0, 1.0), 2.0, 0.5);
        assert!(matches!(err, Err(NecklaceError::CenterOffPlane)));
    }

    #[test]
    fn scaled_copy_matches_direct_construction() {
        let direct = make_standard_torus(&Plane3::xy(), Point3::ORIGIN, 1.0, 0.25).unwrap();
        let big = make_standard_torus(&Plane3::xy(), Point3::ORIGIN, 2.0, 0.5).unwrap();
        let s = Similarity3::new(0.5, Rot3::identity(), Vec3::ZERO).unwrap();
        let scaled = big.apply_similarity(&s);
        assert!((scaled.major_radius() - direct.major_radius()).abs() < 1e-15);
        assert!((scaled.minor_radius - direct.minor_radius).abs() < 1e-15);
        assert!(scaled.core.center.distance(direct.core.center) < 1e-15);
    }

    #[test]
    fn q_two_rejected() {
        let parent = make_standard_torus(&Plane3::xy(), Point3::ORIGIN, 1.0, 0.2).unwrap();
        let params = ChainParams {
            q: 2,
            child_major_scale: 1.1,
            child_minor_ratio: 0.2,
            orientation_pattern: OrientationPattern::Alternating,
        };
        assert!(matches!(
            build_simple_chain(&parent, &params),
            Err(NecklaceError::BadParams { .. })
        ));
    }

    #[test]
    fn default_chain_passes_verification() {
        let parent = make_standard_torus(&Plane3::xy(), Point3::ORIGIN, 1.0, 0.2).unwrap();
        let params = default_chain_params(0.2).unwrap();
        let chain = build_simple_chain(&parent, &params).unwrap();
        let report = verify_chain(&chain);
        assert!(report.all_ok(), "{report:?}");
        assert!(report.min_separation > 0.0);
        assert!(report.min_containment_margin > 0.0);
    }

    #[test]
    fn consecutive_children_link_once() {
        let parent = make_standard_torus(&Plane3::xy(), Point3::ORIGIN, 1.0, 0.2).unwrap();
        let params = default_chain_params(0.2).unwrap();
        let chain = build_simple_chain(&parent, &params).unwrap();
        let lk = linking_number(&chain.children[0].core, &chain.children[1].core).unwrap();
        assert_eq!(lk.abs(), 1);
        // Non-adjacent pair is unlinked.
        let lk02 = linking_number(&chain.children[0].core, &chain.children[2].core).unwrap();
        assert_eq!(lk02, 0);
    }

    #[test]
    fn translated_child_breaks_containment() {
        let parent = make_standard_torus(&Plane3::xy(), Point3::ORIGIN, 1.0, 0.2).unwrap();
        let params = default_chain_params(0.2).unwrap();
        let mut chain = build_simple_chain(&parent, &params).unwrap();
        let shift = Similarity3::translation(Vec3::new(5.0, 0.0, 0.0));
        chain.children[0] = chain.children[0].apply_similarity(&shift);
        let report = verify_chain_with(&chain, VerifyOptions { check_linking: false });
        assert!(!report.contained);
        assert!(!report.regular_polygon);
    }

    #[test]
    fn reordered_children_break_linking_pattern() {
        let parent = make_standard_torus(&Plane3::xy(), Point3::ORIGIN, 1.0, 0.2).unwrap();
        let params = default_chain_params(0.2).unwrap();
        let mut chain = build_simple_chain(&parent, &params).unwrap();
        // Swap two non-adjacent children: the cyclic pattern is order
        // dependent, so the pattern flag must drop.
        chain.children.swap(1, 4);
        let report = verify_chain(&chain);
        assert!(!report.linking_pattern);
    }
}
