//! Defining sequences: nested stages of solid tori, each component of a
//! stage carrying a simple chain of the next stage in its interior.

use serde::{Deserialize, Serialize};

use crate::exec;
use crate::geom::SolidTorus;
use crate::necklace::chain::{place_chain, verify_chain, Chain, ChainParams, ChainReport};
use crate::necklace::defaults::chain_params_for;
use crate::necklace::NecklaceError;

/// Per-level parameter choice for [`build_necklace`].
#[derive(Debug, Clone, Copy, PartialEq, Serialize, Deserialize)]
#[serde(rename_all = "snake_case")]
pub enum LevelParams {
    /// Use the shipped defaults table (or a live search) for each parent.
    Auto,
    Explicit(ChainParams),
}

/// One stage of a defining sequence. Stage 0 is the seed torus alone; at
/// stage s > 0, torus k is a child of `parents[k]` in stage s−1.
#[derive(Debug, Clone, Serialize, Deserialize)]
pub struct Stage {
    pub tori: Vec<SolidTorus>,
    pub parents: Vec<usize>,
}

impl Stage {
    pub fn max_component_diameter(&self) -> f64 {
        self.tori.iter().map(|t| t.diameter()).fold(0.0, f64::max)
    }

    pub fn min_minor_radius(&self) -> f64 {
        self.tori.iter().map(|t| t.minor_radius).fold(f64::INFINITY, f64::min)
    }
}

/// Nested stages M₁ ⊃ M₂ ⊃ … of unions of solid tori, with the
/// parent-child tree and the recorded diameter decay ratio.
#[derive(Debug, Clone, Serialize, Deserialize)]
pub struct DefiningSequence {
    stages: Vec<Stage>,
    /// Max over consecutive stages of the component-diameter ratio; < 1 for
    /// any verified build.
    lambda: f64,
}

impl DefiningSequence {
    pub(crate) fn from_stages(stages: Vec<Stage>) -> DefiningSequence {
        let lambda = lambda_of(&stages);
        DefiningSequence { stages, lambda }
    }

    pub fn seed(seed: SolidTorus) -> DefiningSequence {
        DefiningSequence {
            stages: vec![Stage { tori: vec![seed], parents: vec![0] }],
            lambda: 0.0,
        }
    }

    /// Number of stages.
    pub fn depth(&self) -> usize {
        self.stages.len()
    }

    pub fn stages(&self) -> &[Stage] {
        &self.stages
    }

    /// Tori of the 1-based stage `level`.
    pub fn stage(&self, level: usize) -> &Stage {
        &self.stages[level - 1]
    }

    pub fn lambda(&self) -> f64 {
        self.lambda
    }

    /// Chains joining stage `level` to stage `level + 1` (1-based), one per
    /// stage-`level` torus.
    pub fn chains_below(&self, level: usize) -> Vec<Chain> {
        let parent_stage = &self.stages[level - 1];
        let child_stage = &self.stages[level];
        let mut chains: Vec<Chain> = parent_stage
            .tori
            .iter()
            .map(|t| Chain { parent: *t, children: Vec::new() })
            .collect();
        for (child, &p) in child_stage.tori.iter().zip(&child_stage.parents) {
            chains[p].children.push(*child);
        }
        chains
    }

    /// All parent-child chains in the sequence, grouped by level.
    pub fn all_chains(&self) -> Vec<(usize, Vec<Chain>)> {
        (1..self.depth()).map(|level| (level, self.chains_below(level))).collect()
    }
}

fn lambda_of(stages: &[Stage]) -> f64 {
    let mut lambda: f64 = 0.0;
    for w in stages.windows(2) {
        let d0 = w[0].max_component_diameter();
        let d1 = w[1].max_component_diameter();
        if d0 > 0.0 {
            lambda = lambda.max(d1 / d0);
        }
    }
    lambda
}

/// Result of [`build_necklace`]: the sequence plus the verification report of
/// every constructed chain, grouped by level.
#[derive(Debug, Clone, Serialize, Deserialize)]
pub struct BuildOutcome {
    pub sequence: DefiningSequence,
    /// reports[l][k] is the report of the chain under stage-(l+1) torus k.
    pub reports: Vec<Vec<ChainReport>>,
}

/// Builds a defining sequence of the given depth (number of stages; depth 1
/// is the seed alone). Level i of `params_per_level` configures the chains
/// from stage i+1 to stage i+2; missing entries mean `Auto`.
///
/// Every constructed chain is verified; any failed axiom aborts with the
/// offending level.
pub fn build_necklace(
    seed: &SolidTorus,
    params_per_level: &[LevelParams],
    depth: usize,
) -> Result<BuildOutcome, NecklaceError> {
    if depth < 1 {
        return Err(NecklaceError::BadParams { reason: format!("depth must be >= 1, got {depth}") });
    }
    let mut stages = vec![Stage { tori: vec![*seed], parents: vec![0] }];
    let mut reports: Vec<Vec<ChainReport>> = Vec::new();

    for level in 1..depth {
        let choice = params_per_level.get(level - 1).copied().unwrap_or(LevelParams::Auto);
        let current: &Stage = &stages[level - 1];

        let built: Vec<Result<(Chain, ChainReport), NecklaceError>> =
            exec::map_collect(&current.tori, |parent| {
                let params = match choice {
                    LevelParams::Auto => chain_params_for(parent)?,
                    LevelParams::Explicit(p) => p,
                };
                let chain = place_chain(parent, &params)?;
                let report = verify_chain(&chain);
                Ok((chain, report))
            });

        let mut tori = Vec::new();
        let mut parents = Vec::new();
        let mut level_reports = Vec::new();
        for (parent_idx, item) in built.into_iter().enumerate() {
            let (chain, report) = item.map_err(|e| e.at_level(level))?;
            if !report.all_ok() {
                return Err(NecklaceError::Infeasible { level, report: Box::new(report) });
            }
            for child in &chain.children {
                tori.push(*child);
                parents.push(parent_idx);
            }
            level_reports.push(report);
        }
        stages.push(Stage { tori, parents });
        reports.push(level_reports);
    }

    Ok(BuildOutcome { sequence: DefiningSequence::from_stages(stages), reports })
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::geom::{Plane3, Point3};
    use crate::necklace::chain::make_standard_torus;

    fn seed() -> SolidTorus {
        make_standard_torus(&Plane3::xy(), Point3::ORIGIN, 1.0, 0.2).unwrap()
    }

    #[test]
    fn depth_one_is_seed_alone() {
        let out = build_necklace(&seed(), &[], 1).unwrap();
        assert_eq!(out.sequence.depth(), 1);
        assert_eq!(out.sequence.stage(1).tori.len(), 1);
        assert!(out.reports.is_empty());
    }

    #[test]
    fn depth_two_counts_and_verifies() {
        let out = build_necklace(&seed(), &[], 2).unwrap();
        let q = out.sequence.stage(2).tori.len();
        assert!(q >= 3);
        assert_eq!(out.sequence.stage(2).parents.len(), q);
        for r in &out.reports[0] {
            assert!(r.all_ok());
        }
        // One chain per stage-1 torus, q children apiece.
        let chains = out.sequence.chains_below(1);
        assert_eq!(chains.len(), 1);
        assert_eq!(chains[0].children.len(), q);
    }

    #[test]
    fn diameter_decay_is_geometric() {
        let out = build_necklace(&seed(), &[], 2).unwrap();
        let l = out.sequence.lambda();
        assert!(l > 0.0 && l < 1.0, "lambda {l}");
    }

    #[test]
    fn infeasible_params_report_level() {
        // Four fat children cannot fit a thin parent: containment fails and
        // the error names the level.
        let params = LevelParams::Explicit(crate::necklace::chain::ChainParams {
            q: 4,
            child_major_scale: 1.1,
            child_minor_ratio: 0.2,
            orientation_pattern: crate::necklace::chain::OrientationPattern::Alternating,
        });
        match build_necklace(&seed(), &[params], 2) {
            Err(NecklaceError::Infeasible { level, .. }) => assert_eq!(level, 1),
            other => panic!("expected Infeasible, got {other:?}"),
        }
    }
}
