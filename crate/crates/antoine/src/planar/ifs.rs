//! Planar iterated function systems over convex pieces, and the pattern
//! file format.

use serde::{Deserialize, Serialize};

use crate::planar::cover::{critical_angles, degree_grid, shadow_cover_check};
use crate::planar::poly::ConvexPoly2;
use crate::planar::PlanarError;
use crate::tol;

/// Injective affine map of the plane: `x ↦ A x + t`.
#[derive(Debug, Clone, Copy, PartialEq, Serialize, Deserialize)]
pub struct AffineMap2 {
    /// Row-major 2×2 linear part.
    pub a: [[f64; 2]; 2],
    pub t: [f64; 2],
}

impl AffineMap2 {
    pub fn apply(&self, p: [f64; 2]) -> [f64; 2] {
        [
            self.a[0][0] * p[0] + self.a[0][1] * p[1] + self.t[0],
            self.a[1][0] * p[0] + self.a[1][1] * p[1] + self.t[1],
        ]
    }

    /// `self ∘ inner`.
    pub fn compose(&self, inner: &AffineMap2) -> AffineMap2 {
        let a = &self.a;
        let b = &inner.a;
        AffineMap2 {
            a: [
                [a[0][0] * b[0][0] + a[0][1] * b[1][0], a[0][0] * b[0][1] + a[0][1] * b[1][1]],
                [a[1][0] * b[0][0] + a[1][1] * b[1][0], a[1][0] * b[0][1] + a[1][1] * b[1][1]],
            ],
            t: self.apply(inner.t),
        }
    }

    /// Uniform scaling about a fixed point. The translation is chosen so
    /// that the fixed point reproduces exactly in floating point
    /// (`apply(anchor) = s·anchor + (anchor − s·anchor)`).
    pub fn scaling_about(anchor: [f64; 2], s: f64) -> AffineMap2 {
        let sx = s * anchor[0];
        let sy = s * anchor[1];
        AffineMap2 { a: [[s, 0.0], [0.0, s]], t: [anchor[0] - sx, anchor[1] - sy] }
    }

    pub fn determinant(&self) -> f64 {
        self.a[0][0] * self.a[1][1] - self.a[0][1] * self.a[1][0]
    }

    /// Largest singular value of the linear part: the Lipschitz constant.
    pub fn max_singular_value(&self) -> f64 {
        let [[a, b], [c, d]] = self.a;
        let q = a * a + b * b + c * c + d * d;
        let det = a * d - b * c;
        let half = q / 2.0;
        let disc = (half * half - det * det).max(0.0).sqrt();
        (half + disc).sqrt()
    }

    pub fn map_poly(&self, p: &ConvexPoly2) -> Result<ConvexPoly2, PlanarError> {
        let mut verts: Vec<[f64; 2]> = p.vertices().iter().map(|&v| self.apply(v)).collect();
        if self.determinant() < 0.0 {
            verts.reverse();
        }
        ConvexPoly2::new(verts)
    }
}

/// An IFS on a convex root: injective affine contractions whose images are
/// pairwise disjoint subsets of the root.
#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
pub struct PlanarIFS {
    pub root: ConvexPoly2,
    pub maps: Vec<AffineMap2>,
    /// Contraction factor: the largest singular value over the maps.
    pub lambda: f64,
}

impl PlanarIFS {
    pub fn new(root: ConvexPoly2, maps: Vec<AffineMap2>) -> Result<PlanarIFS, PlanarError> {
        if maps.is_empty() {
            return Err(PlanarError::EmptyIfs);
        }
        let mut lambda = 0.0f64;
        for m in &maps {
            if m.determinant().abs() < tol::PLANAR_AREA_TOL {
                return Err(PlanarError::SingularMap);
            }
            lambda = lambda.max(m.max_singular_value());
        }
        if lambda >= 1.0 {
            return Err(PlanarError::NotContracting { lambda });
        }
        let pieces: Vec<ConvexPoly2> =
            maps.iter().map(|m| m.map_poly(&root)).collect::<Result<_, _>>()?;
        for (i, p) in pieces.iter().enumerate() {
            if !root.contains_poly(p) {
                return Err(PlanarError::PieceOutsideRoot { index: i });
            }
            for (j, q) in pieces.iter().enumerate().skip(i + 1) {
                if p.overlaps(q) {
                    return Err(PlanarError::PiecesOverlap { i, j });
                }
            }
        }
        Ok(PlanarIFS { root, maps, lambda })
    }

    pub fn level_one_pieces(&self) -> Vec<ConvexPoly2> {
        self.maps.iter().map(|m| m.map_poly(&self.root).expect("validated maps")).collect()
    }

    /// Smallest pairwise distance between level-one pieces.
    pub fn separation_margin(&self) -> f64 {
        let pieces = self.level_one_pieces();
        let mut best = f64::INFINITY;
        for (i, p) in pieces.iter().enumerate() {
            for q in &pieces[i + 1..] {
                best = best.min(p.distance_to(q));
            }
        }
        best
    }
}

/// On-disk pattern: root vertices plus per-map 2×3 affine coefficients.
#[derive(Debug, Clone, Serialize, Deserialize)]
pub struct PatternFile {
    pub version: u32,
    /// How the pattern was produced; informational.
    pub provenance: String,
    pub root: Vec<[f64; 2]>,
    pub maps: Vec<AffineMap2>,
}

impl PatternFile {
    pub fn to_ifs(&self) -> Result<PlanarIFS, PlanarError> {
        PlanarIFS::new(ConvexPoly2::new(self.root.clone())?, self.maps.clone())
    }

    pub fn from_ifs(ifs: &PlanarIFS, provenance: &str) -> PatternFile {
        PatternFile {
            version: 1,
            provenance: provenance.to_string(),
            root: ifs.root.vertices().to_vec(),
            maps: ifs.maps.clone(),
        }
    }
}

/// The committed hexagon pattern: found by grid search over vertex-anchored
/// scalings of a regular hexagon, accepted on exact shadow cover plus
/// pairwise disjointness. An independently found witness, not a
/// reconstruction of any particular historical figure.
pub fn builtin_hexagon_pattern() -> PlanarIFS {
    let file: PatternFile = serde_json::from_str(include_str!("../../data/hexagon_ifs.json"))
        .expect("builtin pattern parses");
    file.to_ifs().expect("builtin pattern is valid")
}

/// Check that the builtin pattern still covers at the full angle policy.
/// Used by tests and the pattern regeneration tool.
pub fn validate_pattern(ifs: &PlanarIFS, slack: f64) -> Result<(), PlanarError> {
    let pieces = ifs.level_one_pieces();
    let mut polys: Vec<&ConvexPoly2> = vec![&ifs.root];
    polys.extend(pieces.iter());
    let mut angles = critical_angles(&polys);
    angles.extend(degree_grid(tol::PLANAR_GRID_STEP_DEG));
    let verdict = shadow_cover_check(&ifs.root, &pieces, &angles, slack);
    if let Some(w) = verdict.witness {
        return Err(PlanarError::CoverBroken { level: 1, angle: w.angle, gap: w.gap.length() });
    }
    Ok(())
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn scaling_about_anchor_is_exact() {
        let hex = ConvexPoly2::regular_hexagon(1.0);
        for &v in hex.vertices() {
            let m = AffineMap2::scaling_about(v, 0.35);
            let w = m.apply(v);
            assert_eq!(w[0].to_bits(), v[0].to_bits(), "anchor x drifted");
            assert_eq!(w[1].to_bits(), v[1].to_bits(), "anchor y drifted");
        }
    }

    #[test]
    fn singular_values_of_scaling() {
        let m = AffineMap2::scaling_about([0.0, 0.0], 0.4);
        assert!((m.max_singular_value() - 0.4).abs() < 1e-12);
    }

    #[test]
    fn overlapping_maps_rejected() {
        let root = ConvexPoly2::regular_hexagon(1.0);
        let maps = vec![
            AffineMap2::scaling_about([1.0, 0.0], 0.6),
            AffineMap2::scaling_about([-1.0, 0.0], 0.6),
        ];
        assert!(matches!(PlanarIFS::new(root, maps), Err(PlanarError::PiecesOverlap { .. })));
    }

    #[test]
    fn builtin_pattern_loads_and_covers() {
        let ifs = builtin_hexagon_pattern();
        assert!(ifs.lambda < 1.0);
        assert!(ifs.separation_margin() > 0.0);
        validate_pattern(&ifs, 0.0).unwrap();
    }
}
