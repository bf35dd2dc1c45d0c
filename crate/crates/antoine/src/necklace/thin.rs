//! Thinning a stage of a defining sequence into a certified tube cover.
//!
//! The central circles of the chosen stage are covered by side-line tubes
//! of total width strictly below the budget `eps`, splitting the budget
//! equally across circles. Each torus of the stage is then shrunk — its
//! core is untouched — until it fits inside its circle's tube union with
//! quantified clearance. The tube family becomes a plank certificate: no
//! 2-plane shadow of the thinned stage contains a disk of radius `eps/2`.
//!
//! Stages above the thinned one are kept as they are (their tori only
//! gained clearance). Stages below are shrunk to stay nested where the
//! geometry allows it; a deeper stage whose fixed core circles no longer
//! fit inside the thinned tori cannot be rescued by any minor-radius choice
//! — interlocked child cores necessarily stick out of a sufficiently thin
//! parent — so the returned sequence is truncated there. The paper-style
//! schedule avoids this by thinning each stage before building the next;
//! as a post-hoc operation on an existing sequence, truncation is the
//! honest outcome, and it is reported explicitly.

use crate::certify::{CoverageEvidence, PlankCertificate};
use crate::exec;
use crate::geom::{SolidTorus, Tube};
use crate::necklace::chain::{verify_chain_with, ChainReport, VerifyOptions};
use crate::necklace::cover::circle_tube_cover;
use crate::necklace::sequence::{DefiningSequence, Stage};
use crate::necklace::NecklaceError;
use crate::tol;

/// Thinning result: the modified sequence, the certificate for the thinned
/// stage, how many deeper stages had to be dropped, and the re-verification
/// reports of all surviving chains (linking skipped: cores are unchanged).
#[derive(Debug, Clone)]
pub struct ThinOutcome {
    pub sequence: DefiningSequence,
    pub certificate: PlankCertificate,
    pub dropped_stages: usize,
    pub reports: Vec<Vec<ChainReport>>,
}

/// Shrinks stage `level` (1-based) of `seq` into a tube cover of total
/// width < `eps` and certifies the no-disk radius `eps/2`.
pub fn thin_to_tubes(
    seq: &DefiningSequence,
    level: usize,
    eps: f64,
) -> Result<ThinOutcome, NecklaceError> {
    if level < 1 || level > seq.depth() {
        return Err(NecklaceError::BadParams {
            reason: format!("level {level} out of range 1..={}", seq.depth()),
        });
    }
    if !(eps > 0.0) {
        return Err(NecklaceError::BadParams { reason: format!("eps must be positive, got {eps}") });
    }

    let stage = seq.stage(level);
    let count = stage.tori.len();
    let budget = eps / count as f64;

    // Cover every core at this level; each circle's cover has one uniform
    // tube radius.
    let covers: Vec<Result<Vec<Tube>, NecklaceError>> =
        exec::map_collect(&stage.tori, |t| circle_tube_cover(&t.core, budget));
    let mut all_tubes = Vec::new();
    let mut fitted = Vec::with_capacity(count);
    for (torus, cover) in stage.tori.iter().zip(covers) {
        let tubes = cover?;
        let tube_radius = tubes[0].radius;
        // Fit strictly below the 3/8·tube_radius bound at which the
        // coverage evidence (spacing/8, margin/16, Lipschitz slack) becomes
        // tight at the arc midpoints.
        let fit = tol::THIN_FIT_FRACTION * tube_radius;
        let new_minor = fit.min(torus.minor_radius);
        if new_minor < tol::DEGENERATE_MINOR_FACTOR * torus.core.radius {
            return Err(NecklaceError::Degenerate { level, required: new_minor });
        }
        fitted.push(SolidTorus::new(torus.core, new_minor).map_err(NecklaceError::Geometry)?);
        all_tubes.extend(tubes);
    }

    // Rebuild the stage list: stages above unchanged, the thinned stage,
    // then deeper stages shrunk to stay nested while their cores allow it.
    let mut stages: Vec<Stage> = seq.stages()[..level - 1].to_vec();
    stages.push(Stage { tori: fitted, parents: stage.parents.clone() });

    let mut dropped = 0usize;
    for deeper in &seq.stages()[level..] {
        let parent_stage = stages.last().unwrap();
        let shrunk = reshrink_stage(deeper, parent_stage);
        match shrunk {
            Some(stage) => stages.push(stage),
            None => {
                dropped = seq.depth() - stages.len();
                break;
            }
        }
    }

    let thinned = DefiningSequence::from_stages(stages);

    // Re-verify every surviving chain. Cores are untouched, so the linking
    // pattern and polygon layout are preserved exactly; the radius-dependent
    // flags are recomputed.
    let mut reports = Vec::new();
    for (_, chains) in thinned.all_chains() {
        let level_reports =
            exec::map_collect(&chains, |c| verify_chain_with(c, VerifyOptions { check_linking: false }));
        for r in &level_reports {
            if !(r.disjoint && r.contained && r.null_homotopy_proxy) {
                return Err(NecklaceError::Infeasible { level, report: Box::new(r.clone()) });
            }
        }
        reports.push(level_reports);
    }

    let min_tube_radius = all_tubes.iter().map(|t| t.radius).fold(f64::INFINITY, f64::min);
    let certificate = PlankCertificate::new(
        all_tubes,
        level,
        eps / 2.0,
        CoverageEvidence {
            sample_spacing: min_tube_radius / tol::COVER_SAMPLE_DIVISOR,
            margin: min_tube_radius / tol::COVER_MARGIN_DIVISOR,
        },
    );

    Ok(ThinOutcome { sequence: thinned, certificate, dropped_stages: dropped, reports })
}

/// Shrinks one deeper stage so each torus stays strictly inside its (already
/// thinned) parent. Returns `None` when some core cannot fit at any radius.
fn reshrink_stage(stage: &Stage, parents: &Stage) -> Option<Stage> {
    let shrunk: Vec<Option<SolidTorus>> = exec::map_indices(stage.tori.len(), |k| {
        let torus = &stage.tori[k];
        let parent = &parents.tori[stage.parents[k]];
        // Worst distance from the child core to the parent core, sampled
        // with a Lipschitz slack of half the arc step.
        let samples = 512;
        let arc_step = torus.core.circumference() / samples as f64;
        let mut worst = 0.0f64;
        for i in 0..samples {
            let p = torus.core.point_at(std::f64::consts::TAU * i as f64 / samples as f64);
            worst = worst.max(parent.core.distance_to_point(p));
        }
        worst += arc_step / 2.0;
        let margin = tol::CONTAINMENT_MARGIN_FACTOR * parent.minor_radius;
        let bound = parent.minor_radius - worst - margin;
        if bound <= tol::DEGENERATE_MINOR_FACTOR * torus.core.radius {
            return None;
        }
        let new_minor = bound.min(torus.minor_radius);
        SolidTorus::new(torus.core, new_minor).ok()
    });
    let mut tori = Vec::with_capacity(shrunk.len());
    for t in shrunk {
        tori.push(t?);
    }
    Some(Stage { tori, parents: stage.parents.clone() })
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::certify::check_certificate;
    use crate::geom::{Plane3, Point3};
    use crate::necklace::chain::{make_standard_torus, verify_chain};
    use crate::necklace::sequence::build_necklace;
    use crate::shadow::ShadowItem;

    fn seed() -> SolidTorus {
        make_standard_torus(&Plane3::xy(), Point3::ORIGIN, 1.0, 0.2).unwrap()
    }

    #[test]
    fn depth_one_thinning_is_certified() {
        let seq = DefiningSequence::seed(seed());
        let out = thin_to_tubes(&seq, 1, 1.0).unwrap();
        assert_eq!(out.sequence.depth(), 1);
        assert_eq!(out.dropped_stages, 0);
        // eps = 1 certifies no shadow disk of radius 0.5.
        assert!((out.certificate.claimed_eps - 0.5).abs() < 1e-15);
        assert!(out.certificate.total_width < 1.0);
        let items: Vec<ShadowItem> =
            out.sequence.stage(1).tori.iter().map(|t| ShadowItem::Torus(*t)).collect();
        let report = check_certificate(&out.certificate, &items).unwrap();
        assert_eq!(report.verdict, "VALID");
        assert!(report.min_clearance >= 0.0);
    }

    #[test]
    fn cores_are_preserved_exactly() {
        let seq = DefiningSequence::seed(seed());
        let out = thin_to_tubes(&seq, 1, 0.25).unwrap();
        let before = &seq.stage(1).tori[0].core;
        let after = &out.sequence.stage(1).tori[0].core;
        assert_eq!(before, after);
        assert!(out.sequence.stage(1).tori[0].minor_radius < 0.2);
    }

    #[test]
    fn thinned_depth_two_reverifies() {
        let built = build_necklace(&seed(), &[], 2).unwrap();
        // Thin the leaf stage: nothing deeper to drop, chains must stay legal.
        let out = thin_to_tubes(&built.sequence, 2, 1.0).unwrap();
        assert_eq!(out.dropped_stages, 0);
        assert_eq!(out.sequence.depth(), 2);
        for chains in out.sequence.all_chains() {
            for c in &chains.1 {
                let report = verify_chain(&c.clone());
                assert!(report.all_ok(), "{report:?}");
            }
        }
    }

    #[test]
    fn aggressive_parent_thinning_truncates_fixed_children() {
        let built = build_necklace(&seed(), &[], 2).unwrap();
        // Thinning stage 1 hard makes the stage-2 cores (which reach about
        // a child major radius away from the seed core) stick out; the
        // result must be truncated to the thinned stage, not silently
        // unnested.
        let out = thin_to_tubes(&built.sequence, 1, 0.5).unwrap();
        assert_eq!(out.sequence.depth(), 1);
        assert_eq!(out.dropped_stages, 1);
    }

    #[test]
    fn zero_budget_rejected() {
        let seq = DefiningSequence::seed(seed());
        assert!(thin_to_tubes(&seq, 1, 0.0).is_err());
        assert!(thin_to_tubes(&seq, 2, 1.0).is_err());
    }
}
