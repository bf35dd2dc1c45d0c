//! Covering a circle by thin tubes of small total width.
//!
//! Around each side-line of a regular N-gon inscribed in a circle of radius
//! r, put a tube of width 4r(1 − cos(π/N)) (twice the sagitta of the arc
//! over the side). The N tube interiors cover the circle, and the total
//! width 4Nr(1 − cos(π/N)) tends to zero as N grows, so any positive width
//! budget is reachable.

use crate::geom::{Circle3, Line3, Tube};
use crate::necklace::NecklaceError;

/// Total width of the N-gon side-tube cover of a circle of radius `r`:
/// 4Nr(1 − cos(π/N)), evaluated as 8Nr·sin²(π/2N) so large N does not
/// cancel (the naive form loses all precision near N ~ 10⁶).
pub fn cover_total_width(n: usize, radius: f64) -> f64 {
    let half = std::f64::consts::PI / (2.0 * n as f64);
    let s = half.sin();
    8.0 * n as f64 * radius * s * s
}

/// Radius of each covering tube: twice the sagitta 2r(1 − cos(π/N)).
pub fn cover_tube_radius(n: usize, radius: f64) -> f64 {
    let half = std::f64::consts::PI / (2.0 * n as f64);
    let s = half.sin();
    4.0 * radius * s * s
}

/// Minimal N ≥ 3 whose cover width is strictly below `eps`.
pub fn minimal_cover_size(radius: f64, eps: f64) -> usize {
    let mut n = 3;
    while cover_total_width(n, radius) >= eps {
        n += 1;
    }
    n
}

/// Tube cover of a circle with total width strictly below `eps`.
///
/// Returns one tube per side of the inscribed regular N-gon for the minimal
/// feasible N ≥ 3; each tube has radius 2r(1 − cos(π/N)), twice the sagitta,
/// so the circle runs strictly inside the union of interiors.
pub fn circle_tube_cover(circle: &Circle3, eps: f64) -> Result<Vec<Tube>, NecklaceError> {
    if !(eps > 0.0) {
        return Err(NecklaceError::BadParams { reason: format!("cover budget must be positive, got {eps}") });
    }
    let n = minimal_cover_size(circle.radius, eps);
    let tube_radius = cover_tube_radius(n, circle.radius);
    let mut tubes = Vec::with_capacity(n);
    for j in 0..n {
        let a = circle.point_at(std::f64::consts::TAU * j as f64 / n as f64);
        let b = circle.point_at(std::f64::consts::TAU * (j + 1) as f64 / n as f64);
        let direction = (b - a).normalized().map_err(NecklaceError::Geometry)?;
        tubes.push(Tube::new(Line3::new(a, direction), tube_radius).map_err(NecklaceError::Geometry)?);
    }
    Ok(tubes)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::geom::{Dir3, Point3};

    fn unit_circle() -> Circle3 {
        Circle3::new(Point3::ORIGIN, 1.0, Dir3::z()).unwrap()
    }

    #[test]
    fn minimal_cover_for_tight_budget() {
        // Monotone-scan oracle: check the bracketing inequalities directly.
        assert!(cover_total_width(197, 1.0) > 0.1);
        assert!(cover_total_width(198, 1.0) < 0.1);
        let tubes = circle_tube_cover(&unit_circle(), 0.1).unwrap();
        assert_eq!(tubes.len(), 198);
        let total: f64 = tubes.iter().map(|t| 2.0 * t.radius).sum();
        assert!(total > 0.0995 && total < 0.1, "total {total}");
    }

    #[test]
    fn loose_budget_gives_triangle_cover() {
        // cos(π/3) = 1/2 makes the width exactly 6.
        let tubes = circle_tube_cover(&unit_circle(), 6.5).unwrap();
        assert_eq!(tubes.len(), 3);
        let total: f64 = tubes.iter().map(|t| 2.0 * t.radius).sum();
        assert!((total - 6.0).abs() <= 1e-12);
    }

    #[test]
    fn width_is_linear_in_radius() {
        for n in [3, 10, 57] {
            let w1 = cover_total_width(n, 1.0);
            let w2 = cover_total_width(n, 2.0);
            assert!((w2 - 2.0 * w1).abs() < 1e-12);
        }
    }

    #[test]
    fn width_strictly_decreasing_in_n() {
        // Checkable range per the module contract: N in [3, 10^6].
        let mut prev = cover_total_width(3, 1.0);
        for n in 4..=1_000_000usize {
            let w = cover_total_width(n, 1.0);
            assert!(w < prev, "width not decreasing at N={n}");
            prev = w;
        }
    }

    #[test]
    fn interiors_cover_the_circle() {
        let c = unit_circle();
        for eps in [6.5, 1.0, 0.1] {
            let tubes = circle_tube_cover(&c, eps).unwrap();
            for k in 0..10_000 {
                let p = c.point_at(std::f64::consts::TAU * k as f64 / 10_000.0);
                let depth = tubes.iter().map(|t| t.depth(p)).fold(f64::MIN, f64::max);
                assert!(depth > 0.0, "uncovered point at sample {k} for eps {eps}");
            }
        }
    }
}
