//! Minimum distances between circles, lines, and tori.
//!
//! There is no closed form for the distance between two circles in general
//! position, so `circle_distance` seeds a parameter grid and polishes the
//! best cells with a damped Newton iteration on the squared distance.

use crate::geom::{Circle3, Line3, Point3, SolidTorus};
use crate::tol;

/// Minimum distance between two circles (as curves).
///
/// Symmetric, zero iff the circles intersect, accurate to
/// [`tol::CIRCLE_DISTANCE_TOL`] on well-scaled inputs.
pub fn circle_distance(a: &Circle3, b: &Circle3) -> f64 {
    let n = tol::CIRCLE_DISTANCE_GRID;
    let step = std::f64::consts::TAU / n as f64;

    // Squared distance between parameter points.
    let f = |s: f64, t: f64| (a.point_at(s) - b.point_at(t)).norm_squared();

    // Grid seeding: keep the few best cells, they may straddle distinct
    // local minima on linked or nearly touching configurations.
    let mut seeds: Vec<(f64, f64, f64)> = Vec::with_capacity(4);
    for i in 0..n {
        let s = i as f64 * step;
        for j in 0..n {
            let t = j as f64 * step;
            let val = f(s, t);
            if seeds.len() < 4 {
                seeds.push((val, s, t));
                seeds.sort_by(|x, y| x.0.total_cmp(&y.0));
            } else if val < seeds[3].0 {
                seeds[3] = (val, s, t);
                seeds.sort_by(|x, y| x.0.total_cmp(&y.0));
            }
        }
    }

    let mut best = seeds[0].0;
    for &(_, s0, t0) in &seeds {
        best = best.min(refine_pair(a, b, s0, t0));
    }
    best.max(0.0).sqrt()
}

/// Damped Newton on g(s,t) = |a(s) − b(t)|², returning the refined minimum.
fn refine_pair(a: &Circle3, b: &Circle3, mut s: f64, mut t: f64) -> f64 {
    let g = |s: f64, t: f64| (a.point_at(s) - b.point_at(t)).norm_squared();
    let mut val = g(s, t);
    let mut damping = 0.0;
    for _ in 0..tol::DISTANCE_NEWTON_MAX_ITERS {
        let pa = a.point_at(s);
        let pb = b.point_at(t);
        let d = pa - pb;
        let das = a.tangent_at(s);
        let dbt = b.tangent_at(t);
        // Second derivatives of the circle parametrizations are the negated
        // radial offsets.
        let d2as = a.center - pa;
        let d2bt = b.center - pb;

        let gs = 2.0 * d.dot(das);
        let gt = -2.0 * d.dot(dbt);
        let gss = 2.0 * (das.dot(das) + d.dot(d2as));
        let gtt = 2.0 * (dbt.dot(dbt) - d.dot(d2bt));
        let gst = -2.0 * das.dot(dbt);

        let grad_norm = (gs * gs + gt * gt).sqrt();
        if grad_norm < tol::CIRCLE_DISTANCE_TOL * tol::CIRCLE_DISTANCE_TOL {
            break;
        }

        // Levenberg-style damping keeps steps sane near singular Hessians
        // (coaxial and concentric families have flat valleys).
        let (h11, h22) = (gss + damping, gtt + damping);
        let det = h11 * h22 - gst * gst;
        let (ds, dt) = if det.abs() > 1e-300 {
            ((-gs * h22 + gt * gst) / det, (-gt * h11 + gs * gst) / det)
        } else {
            (-gs * 1e-3, -gt * 1e-3)
        };

        let (ns, nt) = (s + ds, t + dt);
        let nval = g(ns, nt);
        if nval <= val {
            s = ns;
            t = nt;
            if (val - nval).abs() < tol::CIRCLE_DISTANCE_TOL * tol::CIRCLE_DISTANCE_TOL {
                val = nval;
                break;
            }
            val = nval;
            damping *= 0.5;
        } else {
            damping = (damping * 4.0).max(1e-6);
        }
    }
    val
}

/// Minimum distance between a circle and a straight line.
///
/// Coarse angular scan plus golden-section refinement of the best brackets;
/// this is the rasterizer's fiber-to-core primitive.
pub fn circle_line_distance(c: &Circle3, line: &Line3) -> f64 {
    let n = tol::CIRCLE_LINE_SCAN;
    let step = std::f64::consts::TAU / n as f64;
    let f = |th: f64| line.distance_to_point(c.point_at(th));

    let vals: Vec<f64> = (0..n).map(|i| f(i as f64 * step)).collect();
    let mut best = f64::INFINITY;
    // Refine every local minimum of the scan; there are at most a few.
    for i in 0..n {
        let prev = vals[(i + n - 1) % n];
        let next = vals[(i + 1) % n];
        if vals[i] <= prev && vals[i] <= next {
            let lo = (i as f64 - 1.0) * step;
            let hi = (i as f64 + 1.0) * step;
            best = best.min(golden_min(&f, lo, hi));
        }
    }
    best
}

fn golden_min(f: &dyn Fn(f64) -> f64, mut lo: f64, mut hi: f64) -> f64 {
    const INV_PHI: f64 = 0.618_033_988_749_894_9;
    let mut x1 = hi - INV_PHI * (hi - lo);
    let mut x2 = lo + INV_PHI * (hi - lo);
    let mut f1 = f(x1);
    let mut f2 = f(x2);
    while hi - lo > tol::CIRCLE_LINE_REFINE_TOL {
        if f1 < f2 {
            hi = x2;
            x2 = x1;
            f2 = f1;
            x1 = hi - INV_PHI * (hi - lo);
            f1 = f(x1);
        } else {
            lo = x1;
            x1 = x2;
            f1 = f2;
            x2 = lo + INV_PHI * (hi - lo);
            f2 = f(x2);
        }
    }
    f1.min(f2)
}

/// Minimum distance between two straight lines (closed form).
pub fn line_line_distance(a: &Line3, b: &Line3) -> f64 {
    let u = a.direction.as_vec();
    let v = b.direction.as_vec();
    let w = a.base - b.base;
    let cross = u.cross(v);
    let c2 = cross.norm_squared();
    if c2 < tol::ZERO_VECTOR_TOL {
        // Parallel lines.
        return (w - u * u.dot(w)).norm();
    }
    (w.dot(cross)).abs() / c2.sqrt()
}

/// Lower bound on the gap between two solid tori:
/// `circle_distance(core_a, core_b) − r_a − r_b`.
///
/// Positive implies the solids are disjoint. The converse does not hold (the
/// bound ignores how the tubes wind), so this is a sufficient disjointness
/// test, not a distance.
pub fn torus_separation(a: &SolidTorus, b: &SolidTorus) -> f64 {
    circle_distance(&a.core, &b.core) - a.minor_radius - b.minor_radius
}

/// Brute-force circle distance used as a test oracle: dense scan on one
/// parameter with the exact point-to-circle distance on the other side.
pub fn circle_distance_oracle(a: &Circle3, b: &Circle3, samples: usize) -> f64 {
    let mut best = f64::INFINITY;
    for i in 0..samples {
        let th = std::f64::consts::TAU * i as f64 / samples as f64;
        best = best.min(b.distance_to_point(a.point_at(th)));
    }
    best
}

#[allow(unused)]
pub(crate) fn point_segment_distance(p: Point3, a: Point3, b: Point3) -> f64 {
    let ab = b - a;
    let t = ((p - a).dot(ab) / ab.norm_squared()).clamp(0.0, 1.0);
    (a + ab * t).distance(p)
}
