//! Line projections as exact interval unions.

use serde::{Deserialize, Serialize};

use crate::geom::Plane3;
use crate::shadow::{ShadowError, ShadowItem};

/// Closed interval on an oriented line.
#[derive(Debug, Clone, Copy, PartialEq, Serialize, Deserialize)]
pub struct Interval1 {
    pub min: f64,
    pub max: f64,
}

impl Interval1 {
    pub fn new(min: f64, max: f64) -> Interval1 {
        debug_assert!(min <= max);
        Interval1 { min, max }
    }

    pub fn length(&self) -> f64 {
        self.max - self.min
    }
}

/// Line-projection report: per-item analytic intervals, their merged hull,
/// gaps inside the hull, and a sampled hull as an independent cross-check.
#[derive(Debug, Clone, Serialize, Deserialize)]
pub struct IntervalReport {
    pub hull: Interval1,
    pub intervals: Vec<Interval1>,
    /// Uncovered subintervals of the hull, in increasing order.
    pub gaps: Vec<Interval1>,
    /// Hull recomputed from projected sample points of the items.
    pub sampled_hull: Interval1,
    /// Scan resolution the gap report is quoted at.
    pub resolution: f64,
}

/// Projects items onto a line (1-dimensional [`Plane3`]) and reports the
/// interval union exactly.
///
/// Per-torus extremes are closed-form: the projection of a solid torus is
/// `c ± (R·w + r)` where `c` is the projected core center and `w` the norm
/// of the direction's component in the core plane. Gaps smaller than
/// `resolution` are dropped from the report; the chains built here overlap
/// on every line, so their reports come back gap-free.
pub fn line_projection_interval(
    items: &[ShadowItem],
    line: &Plane3,
    resolution: f64,
) -> Result<IntervalReport, ShadowError> {
    if items.is_empty() {
        return Err(ShadowError::EmptyItems);
    }
    if line.dim() != 1 {
        return Err(ShadowError::WrongTargetDim { expected: 1 });
    }
    let dir = line.basis()[0].as_vec();

    let mut intervals = Vec::with_capacity(items.len());
    let mut sampled_min = f64::INFINITY;
    let mut sampled_max = f64::NEG_INFINITY;
    for item in items {
        match item {
            ShadowItem::Torus(t) => {
                let c = line.project1(t.core.center);
                let n = t.core.normal.as_vec();
                let in_plane = (dir - n * n.dot(dir)).norm();
                let extent = t.core.radius * in_plane + t.minor_radius;
                intervals.push(Interval1::new(c - extent, c + extent));
                // Sampled cross-check on the core circle.
                for k in 0..64 {
                    let th = std::f64::consts::TAU * k as f64 / 64.0;
                    let v = line.project1(t.core.point_at(th));
                    sampled_min = sampled_min.min(v - t.minor_radius);
                    sampled_max = sampled_max.max(v + t.minor_radius);
                }
            }
            ShadowItem::Tube(tube) => {
                let along = tube.axis.direction.as_vec().dot(dir).abs();
                if along > 1e-12 {
                    return Err(ShadowError::UnboundedProjection);
                }
                let c = line.project1(tube.axis.base);
                intervals.push(Interval1::new(c - tube.radius, c + tube.radius));
                sampled_min = sampled_min.min(c - tube.radius);
                sampled_max = sampled_max.max(c + tube.radius);
            }
        }
    }

    let mut sorted = intervals.clone();
    sorted.sort_by(|a, b| a.min.total_cmp(&b.min));
    let hull = Interval1::new(
        sorted.first().unwrap().min,
        sorted.iter().map(|i| i.max).fold(f64::NEG_INFINITY, f64::max),
    );

    let mut gaps = Vec::new();
    let mut covered_to = sorted[0].max;
    for iv in &sorted[1..] {
        if iv.min > covered_to {
            let gap = Interval1::new(covered_to, iv.min);
            if gap.length() >= resolution {
                gaps.push(gap);
            }
        }
        covered_to = covered_to.max(iv.max);
    }

    Ok(IntervalReport {
        hull,
        intervals,
        gaps,
        sampled_hull: Interval1::new(sampled_min, sampled_max),
        resolution,
    })
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::geom::{Circle3, Dir3, Point3, SolidTorus};

    fn torus_xy(center: Point3, major: f64, minor: f64) -> SolidTorus {
        SolidTorus::new(Circle3::new(center, major, Dir3::z()).unwrap(), minor).unwrap()
    }

    #[test]
    fn single_torus_own_plane_axis() {
        // Projection onto an in-plane axis is [−(R+r), R+r].
        let t = torus_xy(Point3::ORIGIN, 2.0, 0.5);
        let line = Plane3::line(Point3::ORIGIN, Dir3::x());
        let rep = line_projection_interval(&[t.into()], &line, 1e-3).unwrap();
        assert!((rep.hull.min + 2.5).abs() < 1e-12);
        assert!((rep.hull.max - 2.5).abs() < 1e-12);
        assert!(rep.gaps.is_empty());
        // The sampled hull agrees to sampling accuracy.
        assert!((rep.sampled_hull.min - rep.hull.min).abs() < 1e-2);
        assert!((rep.sampled_hull.max - rep.hull.max).abs() < 1e-2);
    }

    #[test]
    fn separated_tori_leave_one_gap() {
        let a = torus_xy(Point3::ORIGIN, 1.0, 0.2);
        let b = torus_xy(Point3::new(10.0, 0.0, 0.0), 1.0, 0.2);
        let line = Plane3::line(Point3::ORIGIN, Dir3::x());
        let rep = line_projection_interval(&[a.into(), b.into()], &line, 1e-3).unwrap();
        assert_eq!(rep.gaps.len(), 1);
        assert!((rep.gaps[0].min - 1.2).abs() < 1e-12);
        assert!((rep.gaps[0].max - 8.8).abs() < 1e-12);
    }

    #[test]
    fn normal_projection_is_thin() {
        // Projecting along the torus normal: interval is just ±r around c.
        let t = torus_xy(Point3::ORIGIN, 2.0, 0.5);
        let line = Plane3::line(Point3::ORIGIN, Dir3::z());
        let rep = line_projection_interval(&[t.into()], &line, 1e-3).unwrap();
        assert!((rep.hull.min + 0.5).abs() < 1e-12);
        assert!((rep.hull.max - 0.5).abs() < 1e-12);
    }
}
