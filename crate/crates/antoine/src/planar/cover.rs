//! The exact shadow-cover predicate.
//!
//! Shadows of polygons on a line are intervals of vertex dot products, so
//! the endpoints of every interval move only when the supporting vertex
//! changes. Checking coverage at the critical angles (edge normals and
//! vertex-pair directions of every polygon involved) plus a coarse degree
//! grid makes the predicate effectively exact for polygonal data.

use serde::{Deserialize, Serialize};

use crate::exec;
use crate::planar::poly::ConvexPoly2;
use crate::shadow::Interval1;

/// Witness of a cover failure: the direction and the uncovered subinterval.
#[derive(Debug, Clone, Copy, Serialize, Deserialize)]
pub struct CoverWitness {
    pub angle: f64,
    pub gap: Interval1,
}

#[derive(Debug, Clone, Serialize, Deserialize)]
pub struct CoverVerdict {
    pub covered: bool,
    pub witness: Option<CoverWitness>,
    pub angles_checked: usize,
    /// Largest gap found anywhere (0 when covered).
    pub max_gap: f64,
}

/// Critical angles of a polygon family, reduced mod π: edge normals and
/// directions between vertex pairs of each polygon.
pub fn critical_angles(polys: &[&ConvexPoly2]) -> Vec<f64> {
    let mut angles = Vec::new();
    for p in polys {
        let vs = p.vertices();
        let n = vs.len();
        for i in 0..n {
            for j in (i + 1)..n {
                let d = [vs[j][0] - vs[i][0], vs[j][1] - vs[i][1]];
                // The projection extremum switches where the direction is
                // orthogonal to a vertex pair; record that normal angle.
                let a = d[1].atan2(d[0]) + std::f64::consts::FRAC_PI_2;
                angles.push(a.rem_euclid(std::f64::consts::PI));
                // Edge normals are vertex-pair normals of consecutive
                // vertices, already included; the pair direction itself is
                // also a breakpoint of gap endpoints.
                let b = d[1].atan2(d[0]);
                angles.push(b.rem_euclid(std::f64::consts::PI));
            }
        }
    }
    angles.sort_by(f64::total_cmp);
    angles.dedup_by(|a, b| (*a - *b).abs() < 1e-14);
    angles
}

/// Uniform grid of directions in degrees, mod π.
pub fn degree_grid(step_deg: f64) -> Vec<f64> {
    let mut angles = Vec::new();
    let mut a = 0.0f64;
    while a < 180.0 {
        angles.push(a.to_radians());
        a += step_deg;
    }
    angles
}

/// Checks that the union of piece shadows covers the parent shadow at every
/// given angle. `slack` is the acceptable endpoint mismatch: 0 demands
/// bitwise-exact attachment (the committed patterns anchor parent vertices
/// exactly, so 0 is attainable); collar constructions pass a last-bits
/// rounding allowance instead.
pub fn shadow_cover_check(
    parent: &ConvexPoly2,
    pieces: &[ConvexPoly2],
    angles: &[f64],
    slack: f64,
) -> CoverVerdict {
    let per_angle = exec::map_collect(&angles.to_vec(), |&angle| {
        let target = parent.interval(angle);
        let mut intervals: Vec<Interval1> = pieces.iter().map(|p| p.interval(angle)).collect();
        gap_in_cover(target, &mut intervals, slack).map(|gap| CoverWitness { angle, gap })
    });
    summarize(per_angle, angles.len())
}

/// Union-against-union variant: the merged components of the parents'
/// shadows must each be covered by the pieces.
pub fn union_cover_check(
    parents: &[ConvexPoly2],
    pieces: &[ConvexPoly2],
    angles: &[f64],
    slack: f64,
) -> CoverVerdict {
    let per_angle = exec::map_collect(&angles.to_vec(), |&angle| {
        let mut targets: Vec<Interval1> = parents.iter().map(|p| p.interval(angle)).collect();
        merge_intervals(&mut targets);
        let piece_ivs: Vec<Interval1> = pieces.iter().map(|p| p.interval(angle)).collect();
        for target in targets {
            let mut ivs = piece_ivs.clone();
            if let Some(gap) = gap_in_cover(target, &mut ivs, slack) {
                return Some(CoverWitness { angle, gap });
            }
        }
        None
    });
    summarize(per_angle, angles.len())
}

fn summarize(per_angle: Vec<Option<CoverWitness>>, angles_checked: usize) -> CoverVerdict {
    let mut witness: Option<CoverWitness> = None;
    let mut max_gap = 0.0f64;
    for w in per_angle.into_iter().flatten() {
        max_gap = max_gap.max(w.gap.length());
        if witness.is_none() {
            witness = Some(w);
        }
    }
    CoverVerdict { covered: witness.is_none(), witness, angles_checked, max_gap }
}

/// First uncovered subinterval of `target`, sweeping the pieces in place.
fn gap_in_cover(target: Interval1, pieces: &mut Vec<Interval1>, slack: f64) -> Option<Interval1> {
    pieces.sort_by(|a, b| a.min.total_cmp(&b.min));
    let mut covered_to = target.min;
    for iv in pieces.iter() {
        if iv.min > covered_to + slack {
            if covered_to >= target.max - slack {
                return None;
            }
            return Some(Interval1 { min: covered_to, max: iv.min.min(target.max) });
        }
        covered_to = covered_to.max(iv.max);
        if covered_to >= target.max {
            return None;
        }
    }
    if covered_to >= target.max - slack {
        None
    } else {
        Some(Interval1 { min: covered_to, max: target.max })
    }
}

fn merge_intervals(ivs: &mut Vec<Interval1>) {
    ivs.sort_by(|a, b| a.min.total_cmp(&b.min));
    let mut merged: Vec<Interval1> = Vec::with_capacity(ivs.len());
    for iv in ivs.iter() {
        match merged.last_mut() {
            Some(last) if iv.min <= last.max => last.max = last.max.max(iv.max),
            _ => merged.push(*iv),
        }
    }
    *ivs = merged;
}
