//! Plank-theorem bookkeeping: widths, tube-cover certificates, and their
//! machine checking.
//!
//! The plank theorem (Bang, 1951) is trusted as an axiom: a disk of radius ε
//! cannot be covered by strips of total width below 2ε. What the code checks
//! are the hypotheses — that a recorded tube family really covers a set and
//! that its total width is strictly below 2ε. A `VALID` certificate then
//! grants the claim that no 2-plane shadow of the covered set contains a
//! disk of radius `claimed_eps`, because every tube projects into a strip of
//! width equal to the tube's width.

mod crosscheck;

pub use crosscheck::{empirical_cross_check, CrossCheckReport};

use serde::{Deserialize, Serialize};
use thiserror::Error;

use crate::exec;
use crate::geom::{Point3, SolidTorus, Strip2, Tube};
use crate::shadow::{project_tube, ShadowItem, TubeShadow};
use crate::tol;
use crate::geom::Plane3;

#[derive(Debug, Error)]
pub enum CertifyError {
    #[error("width is undefined for this shape")]
    Unsupported,
    #[error("coverage failed: witness point ({0:?}) clears every tube by less than the required margin", witness)]
    CoverageFail { witness: Point3 },
    #[error("total width {total} is not strictly below 2·claimed_eps = {limit}")]
    WidthFail { total: f64, limit: f64 },
    #[error("certificate contradicted empirically: plane {plane} has inscribed radius {observed}, allowed {allowed}")]
    Contradiction { plane: usize, observed: f64, allowed: f64 },
    #[error("empirical cross-check requires a valid certificate: {0}")]
    InvalidCertificate(String),
    #[error(transparent)]
    Shadow(#[from] crate::shadow::ShadowError),
}

/// Shapes with a well-defined width (smallest slab containing them).
#[derive(Debug, Clone, Copy)]
pub enum Widthable {
    Tube(Tube),
    Strip(Strip2),
    Torus(SolidTorus),
}

/// Width of a supported shape: the infimum over slab directions of the slab
/// thickness needed to contain it.
///
/// - tube: 2·radius;
/// - strip: 2·half-width;
/// - solid torus of revolution: the directional extent is 2(R·sin γ + r) for
///   a direction at angle γ to the core normal, minimized at γ = 0, so the
///   width is 2·minor_radius, measured normal to the core plane.
pub fn width(shape: &Widthable) -> f64 {
    match shape {
        Widthable::Tube(t) => 2.0 * t.radius,
        Widthable::Strip(s) => 2.0 * s.half_width,
        Widthable::Torus(t) => 2.0 * t.minor_radius,
    }
}

/// Sampling evidence recorded with a certificate: core samples of covered
/// items are spaced at most `sample_spacing` apart, and every sample must
/// clear some tube by `margin` plus the item's own thickness.
#[derive(Debug, Clone, Copy, PartialEq, Serialize, Deserialize)]
pub struct CoverageEvidence {
    pub sample_spacing: f64,
    pub margin: f64,
}

/// A finite tube family covering a stage of a defining sequence, with the
/// width arithmetic that certifies a no-disk radius for every shadow.
#[derive(Debug, Clone, Serialize, Deserialize)]
pub struct PlankCertificate {
    pub tubes: Vec<Tube>,
    /// 1-based stage index this certificate covers.
    pub covered_level: usize,
    /// Σ 2·radius over the tubes, recomputed on construction.
    pub total_width: f64,
    /// The certified no-disk radius: validity requires total_width < 2·claimed_eps.
    pub claimed_eps: f64,
    pub coverage_evidence: CoverageEvidence,
}

impl PlankCertificate {
    pub fn new(
        tubes: Vec<Tube>,
        covered_level: usize,
        claimed_eps: f64,
        coverage_evidence: CoverageEvidence,
    ) -> PlankCertificate {
        let total_width = tubes.iter().map(|t| 2.0 * t.radius).sum();
        PlankCertificate { tubes, covered_level, total_width, claimed_eps, coverage_evidence }
    }
}

/// Result of a successful certificate check.
#[derive(Debug, Clone, Serialize, Deserialize)]
pub struct CoverageReport {
    /// Worst clearance observed over all item samples (beyond the item's
    /// own thickness).
    pub min_clearance: f64,
    pub samples_checked: u64,
    pub verdict: String,
}

/// Verifies a certificate against the items it claims to cover.
///
/// (a) every item must lie in the union of tube interiors with the recorded
/// margin, witnessed by sampling at the recorded density (a failure returns
/// the witness point); (b) the total width must be strictly below
/// 2·claimed_eps. The check is deterministic given the recorded evidence
/// parameters.
pub fn check_certificate(
    cert: &PlankCertificate,
    items: &[ShadowItem],
) -> Result<CoverageReport, CertifyError> {
    let total: f64 = cert.tubes.iter().map(|t| 2.0 * t.radius).sum();
    let limit = 2.0 * cert.claimed_eps;
    if !(total < limit) {
        return Err(CertifyError::WidthFail { total, limit });
    }

    let spacing = cert.coverage_evidence.sample_spacing;
    let margin = cert.coverage_evidence.margin;

    let results = exec::map_collect(items, |item| check_item(cert, item, spacing, margin));
    let mut min_clearance = f64::INFINITY;
    let mut samples = 0u64;
    for r in results {
        let (clear, n) = r?;
        min_clearance = min_clearance.min(clear);
        samples += n;
    }
    Ok(CoverageReport {
        min_clearance,
        samples_checked: samples,
        verdict: "VALID".to_string(),
    })
}

/// Coverage of one item. Returns the worst observed clearance and the
/// sample count, or the witness point on failure.
fn check_item(
    cert: &PlankCertificate,
    item: &ShadowItem,
    spacing: f64,
    margin: f64,
) -> Result<(f64, u64), CertifyError> {
    match item {
        ShadowItem::Torus(t) => {
            // A torus is the union of balls of its minor radius centered on
            // the core, and clearance-to-a-tube is 1-Lipschitz along the
            // core, so sampling the core at `spacing` with a spacing/2 slack
            // certifies the whole solid.
            let needed = t.minor_radius + margin + spacing / 2.0;
            let count = ((t.core.circumference() / spacing).ceil() as u64).max(8);
            let mut worst = f64::INFINITY;
            let mut hint = 0usize;
            for k in 0..count {
                let theta = std::f64::consts::TAU * k as f64 / count as f64;
                let p = t.core.point_at(theta);
                match deepest_tube(&cert.tubes, p, needed, hint) {
                    Some((depth, idx)) => {
                        hint = idx;
                        worst = worst.min(depth - needed + margin);
                    }
                    None => return Err(CertifyError::CoverageFail { witness: p }),
                }
            }
            Ok((worst, count))
        }
        ShadowItem::Tube(inner) => {
            // A tube is unbounded; it can only be covered by a coaxial tube
            // of at least its radius. Check the axis direction and clearance
            // directly. Equality (a tube covering itself) counts as covered
            // with zero clearance.
            for outer in &cert.tubes {
                let parallel = inner.axis.direction.dot(outer.axis.direction).abs()
                    > 1.0 - tol::ORTHONORMAL_TOL;
                if parallel {
                    let axis_gap = outer.axis.distance_to_point(inner.axis.base);
                    let clearance = outer.radius - inner.radius - axis_gap;
                    if clearance >= 0.0 {
                        return Ok((clearance, 1));
                    }
                }
            }
            Err(CertifyError::CoverageFail { witness: inner.axis.base })
        }
    }
}

/// Largest clearance over the tube family at `p`, requiring at least
/// `needed`. Starts from a hint index (consecutive core samples almost
/// always live in the same or a neighboring tube) before scanning.
fn deepest_tube(tubes: &[Tube], p: Point3, needed: f64, hint: usize) -> Option<(f64, usize)> {
    let n = tubes.len();
    for probe in [hint, hint + 1, hint + n - 1] {
        let idx = probe % n;
        let d = tubes[idx].depth(p);
        if d >= needed {
            return Some((d, idx));
        }
    }
    let mut best = f64::MIN;
    let mut best_idx = 0;
    for (idx, t) in tubes.iter().enumerate() {
        let d = t.depth(p);
        if d > best {
            best = d;
            best_idx = idx;
        }
    }
    if best >= needed {
        Some((best, best_idx))
    } else {
        None
    }
}

/// Strip family covering the shadows of a certificate's tubes on a plane.
/// Each tube projects into a strip (or disk) coverable by a strip of the
/// tube's width, so the family's total width equals the certificate's.
pub fn shadow_strips(cert: &PlankCertificate, plane: &Plane3) -> Vec<Strip2> {
    cert.tubes
        .iter()
        .map(|t| match project_tube(t, plane) {
            TubeShadow::Strip(s) => s,
            TubeShadow::Disk { center, radius } => {
                // Any strip of the same width through the disk center.
                Strip2::new(center, [1.0, 0.0], radius).expect("positive radius")
            }
        })
        .collect()
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::geom::{Circle3, Dir3, Line3, Point3, Vec3};

    fn tube(base: [f64; 3], dir: [f64; 3], radius: f64) -> Tube {
        Tube::new(
            Line3::new(Point3::from(base), Dir3::new(Vec3::from(dir)).unwrap()),
            radius,
        )
        .unwrap()
    }

    #[test]
    fn widths_of_basic_shapes() {
        assert!((width(&Widthable::Tube(tube([0.0; 3], [1.0, 0.0, 0.0], 0.3))) - 0.6).abs() < 1e-15);
        let s = Strip2::new([0.0, 0.0], [1.0, 0.0], 1.0).unwrap();
        assert!((width(&Widthable::Strip(s)) - 2.0).abs() < 1e-15);
        let t = SolidTorus::new(Circle3::new(Point3::ORIGIN, 2.0, Dir3::z()).unwrap(), 0.5).unwrap();
        assert!((width(&Widthable::Torus(t)) - 1.0).abs() < 1e-15);
    }

    #[test]
    fn torus_width_matches_directional_extent_oracle() {
        // Minimize the directional extent numerically over directions: the
        // extent along a direction d is 2(R·|d_inplane| + r).
        let t = SolidTorus::new(Circle3::new(Point3::ORIGIN, 2.0, Dir3::z()).unwrap(), 0.5).unwrap();
        let mut best = f64::INFINITY;
        let n = 400;
        for i in 0..n {
            for j in 0..n / 2 {
                let phi = std::f64::consts::TAU * i as f64 / n as f64;
                let theta = std::f64::consts::PI * j as f64 / (n / 2) as f64;
                let d = Vec3::new(theta.sin() * phi.cos(), theta.sin() * phi.sin(), theta.cos());
                let in_plane = (d.x * d.x + d.y * d.y).sqrt();
                best = best.min(2.0 * (t.major_radius() * in_plane + t.minor_radius));
            }
        }
        assert!((best - width(&Widthable::Torus(t))).abs() < 1e-6, "oracle {best}");
    }

    #[test]
    fn self_cover_is_valid() {
        // A width-0.8 tube family cannot shadow a disk of radius 0.5:
        // 0.8 < 1.0.
        let t = tube([0.0; 3], [0.0, 0.0, 1.0], 0.4);
        let cert = PlankCertificate::new(
            vec![t],
            1,
            0.5,
            CoverageEvidence { sample_spacing: 0.05, margin: 0.0 },
        );
        let report = check_certificate(&cert, &[ShadowItem::Tube(t)]).unwrap();
        assert_eq!(report.verdict, "VALID");
    }

    #[test]
    fn width_boundary_case_fails() {
        // Total width exactly 2·claimed_eps needs strict inequality.
        let t = tube([0.0; 3], [0.0, 0.0, 1.0], 0.5);
        let cert = PlankCertificate::new(
            vec![t],
            1,
            0.5,
            CoverageEvidence { sample_spacing: 0.05, margin: 0.0 },
        );
        let err = check_certificate(&cert, &[ShadowItem::Tube(t)]);
        assert!(matches!(err, Err(CertifyError::WidthFail { .. })));
    }

    #[test]
    fn uncovered_item_yields_witness() {
        let cover = tube([0.0; 3], [0.0, 0.0, 1.0], 0.2);
        let stray = tube([5.0, 0.0, 0.0], [0.0, 0.0, 1.0], 0.1);
        let cert = PlankCertificate::new(
            vec![cover],
            1,
            10.0,
            CoverageEvidence { sample_spacing: 0.05, margin: 0.01 },
        );
        let err = check_certificate(&cert, &[ShadowItem::Tube(stray)]);
        assert!(matches!(err, Err(CertifyError::CoverageFail { .. })));
    }

    #[test]
    fn certificate_roundtrips_bit_exactly() {
        let cert = PlankCertificate::new(
            vec![tube([0.1, -0.2, 0.3], [1.0, 2.0, -0.5], 0.125)],
            2,
            0.25,
            CoverageEvidence { sample_spacing: 1.0 / 3.0, margin: 0.0625 },
        );
        let json = serde_json::to_string(&cert).unwrap();
        let back: PlankCertificate = serde_json::from_str(&json).unwrap();
        assert_eq!(back.total_width.to_bits(), cert.total_width.to_bits());
        assert_eq!(back.claimed_eps.to_bits(), cert.claimed_eps.to_bits());
        assert_eq!(
            back.coverage_evidence.sample_spacing.to_bits(),
            cert.coverage_evidence.sample_spacing.to_bits()
        );
        assert_eq!(back.tubes[0].radius.to_bits(), cert.tubes[0].radius.to_bits());
        assert_eq!(serde_json::to_string(&back).unwrap(), json);
    }
}
