//! Conservative shadow rasterization.
//!
//! Pixel membership is decided by exact signed distances from the pixel
//! center to the shadow, never by point sampling of the solid. For a torus,
//! the distance from a plane point `y` to the shadow equals
//! `max(0, d(fiber_y, core) − r)` where `fiber_y` is the projection fiber
//! through `y`: the solid is exactly the r-neighborhood of its core circle
//! and projection is 1-Lipschitz.
//!
//! Outer mode marks a pixel when the shadow comes within the cell
//! circumradius of the pixel center, so the outer raster contains every cell
//! that can intersect the shadow. Inner mode marks a pixel only when a full
//! cell-circumradius disk around the center lies inside the shadow. Hence
//! inner ⊆ true shadow ⊆ outer at pixel level, with boundary error at most
//! pixel·√2 on each side.

use std::io::Write;

use serde::{Deserialize, Serialize};

use crate::exec;
use crate::geom::{circle_line_distance, Line3, Plane3, SolidTorus};
use crate::shadow::{project_tube, ShadowError, ShadowItem, TubeShadow};

/// Occupancy semantics of a raster.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize, Deserialize)]
#[serde(rename_all = "snake_case")]
pub enum RasterMode {
    /// Pixel set if its cell MAY intersect the shadow (superset).
    Outer,
    /// Pixel set only if its cell MUST lie inside the shadow (subset).
    Inner,
}

/// Pixel frame on a target plane: lower corner in plane coordinates, pixel
/// size, and grid dimensions.
#[derive(Debug, Clone, Copy, PartialEq, Serialize, Deserialize)]
pub struct Frame {
    pub lower: [f64; 2],
    pub pixel: f64,
    pub width: usize,
    pub height: usize,
}

impl Frame {
    pub fn center_of(&self, x: usize, y: usize) -> [f64; 2] {
        [
            self.lower[0] + (x as f64 + 0.5) * self.pixel,
            self.lower[1] + (y as f64 + 0.5) * self.pixel,
        ]
    }
}

/// Occupancy bitmap of a shadow on a 2-plane.
#[derive(Debug, Clone, Serialize, Deserialize)]
pub struct ShadowRaster {
    pub plane: Plane3,
    pub frame: Frame,
    pub mode: RasterMode,
    /// Row-major occupancy, 1 = occupied.
    pub bits: Vec<u8>,
}

impl ShadowRaster {
    pub fn get(&self, x: usize, y: usize) -> bool {
        self.bits[y * self.frame.width + x] != 0
    }

    pub fn occupied_count(&self) -> usize {
        self.bits.iter().filter(|&&b| b != 0).count()
    }

    /// Binary PGM (P5) export: 255 = occupied, 0 = empty. Header comments
    /// carry the plane origin and basis, the pixel size, and any extra
    /// caller lines (one `#` comment each).
    pub fn write_pgm<W: Write>(&self, out: &mut W, extra_comments: &[String]) -> std::io::Result<()> {
        writeln!(out, "P5")?;
        let o = self.plane.origin();
        writeln!(out, "# plane origin {} {} {}", o.x, o.y, o.z)?;
        for (i, b) in self.plane.basis().iter().enumerate() {
            let v = b.as_vec();
            writeln!(out, "# plane basis{} {} {} {}", i, v.x, v.y, v.z)?;
        }
        writeln!(out, "# pixel {}", self.frame.pixel)?;
        writeln!(out, "# lower {} {}", self.frame.lower[0], self.frame.lower[1])?;
        for line in extra_comments {
            writeln!(out, "# {line}")?;
        }
        writeln!(out, "{} {}", self.frame.width, self.frame.height)?;
        writeln!(out, "255")?;
        // PGM rows run top-to-bottom; emit high y first so viewers show the
        // plane's v-axis pointing up.
        for y in (0..self.frame.height).rev() {
            let row = &self.bits[y * self.frame.width..(y + 1) * self.frame.width];
            let bytes: Vec<u8> = row.iter().map(|&b| if b != 0 { 255 } else { 0 }).collect();
            out.write_all(&bytes)?;
        }
        Ok(())
    }
}

/// Precomputed per-item projection data.
enum Prepared {
    Torus { core: crate::geom::Circle3, minor: f64 },
    Tube(TubeShadow),
}

impl Prepared {
    /// Signed distance from a plane point to the item's shadow
    /// (negative inside), exact up to the distance solver tolerance.
    fn signed_distance(&self, plane: &Plane3, p: [f64; 2]) -> f64 {
        match self {
            Prepared::Torus { core, minor } => {
                let fiber = Line3::new(plane.embed2(p), plane.normal2());
                circle_line_distance(core, &fiber) - minor
            }
            Prepared::Tube(shadow) => shadow.signed_distance(p),
        }
    }

    /// Bounding disk of the shadow in plane coordinates, if bounded.
    fn bound(&self, plane: &Plane3) -> Option<([f64; 2], f64)> {
        match self {
            Prepared::Torus { core, minor } => {
                let c = plane.project2(core.center);
                Some((c, core.radius + minor))
            }
            Prepared::Tube(TubeShadow::Disk { center, radius }) => Some((*center, *radius)),
            Prepared::Tube(TubeShadow::Strip(_)) => None,
        }
    }
}

fn min_feature_radius(items: &[ShadowItem]) -> f64 {
    items
        .iter()
        .map(|i| match i {
            ShadowItem::Torus(t) => t.minor_radius,
            ShadowItem::Tube(t) => t.radius,
        })
        .fold(f64::INFINITY, f64::min)
}

/// Default frame: bounding box of the projected bounding disks, padded by
/// two pixels so no shadow is clipped and the frame border stays empty in
/// the exact-membership sense.
fn default_frame(items: &[ShadowItem], plane: &Plane3, pixel: f64) -> Frame {
    let mut lo = [f64::INFINITY; 2];
    let mut hi = [f64::NEG_INFINITY; 2];
    let mut grow = |c: [f64; 2], r: f64| {
        lo[0] = lo[0].min(c[0] - r);
        lo[1] = lo[1].min(c[1] - r);
        hi[0] = hi[0].max(c[0] + r);
        hi[1] = hi[1].max(c[1] + r);
    };
    for item in items {
        match item {
            ShadowItem::Torus(t) => grow(plane.project2(t.core.center), t.bounding_radius()),
            ShadowItem::Tube(t) => match project_tube(t, plane) {
                TubeShadow::Disk { center, radius } => grow(center, radius),
                TubeShadow::Strip(s) => {
                    // Unbounded strip: give it a window of a few widths
                    // around its base point unless tori set the frame.
                    let w = 16.0 * s.half_width.max(pixel);
                    grow(s.point, w);
                }
            },
        }
    }
    let pad = 2.0 * pixel;
    let lower = [lo[0] - pad, lo[1] - pad];
    let width = (((hi[0] - lo[0]) + 2.0 * pad) / pixel).ceil() as usize + 1;
    let height = (((hi[1] - lo[1]) + 2.0 * pad) / pixel).ceil() as usize + 1;
    Frame { lower, pixel, width, height }
}

/// Rasterizes the union shadow of `items` on `target` with the default
/// frame. See [`union_shadow_in_frame`].
pub fn union_shadow(
    items: &[ShadowItem],
    target: &Plane3,
    pixel: f64,
    mode: RasterMode,
) -> Result<ShadowRaster, ShadowError> {
    if items.is_empty() {
        return Err(ShadowError::EmptyItems);
    }
    let frame = default_frame(items, target, pixel);
    union_shadow_in_frame(items, target, frame, mode)
}

/// Rasterizes the union shadow into an explicit frame (shared frames make
/// stage shadows comparable pixel-by-pixel).
///
/// Inner mode insists on pixels at most a quarter of the smallest feature
/// radius, since an inner raster of unresolved features is vacuously empty
/// and useless as a lower bound. Outer mode accepts any positive pixel: its
/// superset guarantee is resolution-independent.
pub fn union_shadow_in_frame(
    items: &[ShadowItem],
    target: &Plane3,
    frame: Frame,
    mode: RasterMode,
) -> Result<ShadowRaster, ShadowError> {
    if items.is_empty() {
        return Err(ShadowError::EmptyItems);
    }
    if target.dim() != 2 {
        return Err(ShadowError::WrongTargetDim { expected: 2 });
    }
    let pixel = frame.pixel;
    if !(pixel > 0.0) {
        return Err(ShadowError::ResolutionTooCoarse { pixel, required: f64::INFINITY });
    }
    if mode == RasterMode::Inner {
        let required = min_feature_radius(items) / 4.0;
        if pixel > required {
            return Err(ShadowError::ResolutionTooCoarse { pixel, required });
        }
    }

    let prepared: Vec<Prepared> = items
        .iter()
        .map(|i| match i {
            ShadowItem::Torus(t) => Prepared::Torus { core: t.core, minor: t.minor_radius },
            ShadowItem::Tube(t) => Prepared::Tube(project_tube(t, target)),
        })
        .collect();

    let half_diag = pixel * std::f64::consts::SQRT_2 / 2.0;
    // Outer: signed distance ≤ +half_diag. Inner: ≤ −half_diag.
    let threshold = match mode {
        RasterMode::Outer => half_diag,
        RasterMode::Inner => -half_diag,
    };

    // Pixel-range pruning per item from its bounding disk.
    let ranges: Vec<Option<(usize, usize, usize, usize)>> = prepared
        .iter()
        .map(|p| {
            p.bound(target).map(|(c, r)| {
                let slack = r + half_diag + pixel;
                let x0 = (((c[0] - slack) - frame.lower[0]) / pixel).floor().max(0.0) as usize;
                let y0 = (((c[1] - slack) - frame.lower[1]) / pixel).floor().max(0.0) as usize;
                let x1 = ((((c[0] + slack) - frame.lower[0]) / pixel).ceil() as usize)
                    .min(frame.width.saturating_sub(1));
                let y1 = ((((c[1] + slack) - frame.lower[1]) / pixel).ceil() as usize)
                    .min(frame.height.saturating_sub(1));
                (x0, x1, y0, y1)
            })
        })
        .collect();

    let mut bits = vec![0u8; frame.width * frame.height];
    exec::for_each_row(&mut bits, frame.width, |y, row| {
        for (item, range) in prepared.iter().zip(&ranges) {
            let (x0, x1) = match range {
                Some((x0, x1, y0, y1)) => {
                    if y < *y0 || y > *y1 {
                        continue;
                    }
                    (*x0, *x1)
                }
                None => (0, frame.width - 1),
            };
            for x in x0..=x1 {
                if row[x] != 0 {
                    continue;
                }
                let p = frame.center_of(x, y);
                if item.signed_distance(target, p) <= threshold {
                    row[x] = 1;
                }
            }
        }
    });

    Ok(ShadowRaster { plane: target.clone(), frame, mode, bits })
}

/// Shadow raster of a single solid torus.
pub fn project_torus(
    torus: &SolidTorus,
    target: &Plane3,
    pixel: f64,
    mode: RasterMode,
) -> Result<ShadowRaster, ShadowError> {
    union_shadow(&[ShadowItem::Torus(*torus)], target, pixel, mode)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::geom::{Circle3, Dir3, Point3};

    fn torus_xy(major: f64, minor: f64) -> SolidTorus {
        SolidTorus::new(Circle3::new(Point3::ORIGIN, major, Dir3::z()).unwrap(), minor).unwrap()
    }

    #[test]
    fn annulus_shadow_brackets_closed_form() {
        // Torus (R=2, r=0.5) onto its own plane: annulus with radii 1.5/2.5.
        let t = torus_xy(2.0, 0.5);
        let pixel = 0.02;
        let outer = project_torus(&t, &Plane3::xy(), pixel, RasterMode::Outer).unwrap();
        let inner = project_torus(&t, &Plane3::xy(), pixel, RasterMode::Inner).unwrap();
        let truth = |p: [f64; 2]| {
            let rho = (p[0] * p[0] + p[1] * p[1]).sqrt();
            rho >= 1.5 && rho <= 2.5
        };
        for y in 0..outer.frame.height {
            for x in 0..outer.frame.width {
                let p = outer.frame.center_of(x, y);
                if truth(p) {
                    assert!(outer.get(x, y), "outer missed true point {p:?}");
                }
                if inner.get(x, y) {
                    assert!(truth(p), "inner marked outside truth at {p:?}");
                }
            }
        }
        // inner ⊆ outer.
        for (a, b) in inner.bits.iter().zip(&outer.bits) {
            assert!(*a == 0 || *b != 0);
        }
    }

    #[test]
    fn stadium_shadow_matches_brute_force_3d_grid() {
        // Torus (R=2, r=0.5) in the xy-plane projected to xz: the
        // 0.5-neighborhood of the segment [-2,2]×{0}. Oracle: rasterize by
        // scanning the membership inequality over a 3-D grid.
        let t = torus_xy(2.0, 0.5);
        let pixel = 0.05;
        let outer = project_torus(&t, &Plane3::xz(), pixel, RasterMode::Outer).unwrap();
        let stadium = |p: [f64; 2]| {
            let x = p[0].clamp(-2.0, 2.0);
            let dx = p[0] - x;
            (dx * dx + p[1] * p[1]).sqrt() <= 0.5
        };
        // Brute force: y-fiber sampling of the implicit solid.
        let brute_inside = |p: [f64; 2]| {
            let n = 600;
            (0..=n).any(|k| {
                let y = -3.0 + 6.0 * k as f64 / n as f64;
                t.contains(Point3::new(p[0], y, p[1]))
            })
        };
        let mut checked = 0;
        for y in (0..outer.frame.height).step_by(3) {
            for x in (0..outer.frame.width).step_by(3) {
                let p = outer.frame.center_of(x, y);
                let truth = stadium(p);
                // The brute-force oracle agrees with the closed form away
                // from the boundary.
                let d_boundary = ((p[0].clamp(-2.0, 2.0) - p[0]).powi(2) + p[1] * p[1]).sqrt() - 0.5;
                if d_boundary.abs() > 0.02 {
                    assert_eq!(brute_inside(p), truth, "oracle disagrees at {p:?}");
                }
                if truth {
                    assert!(outer.get(x, y), "outer missed stadium point {p:?}");
                }
                checked += 1;
            }
        }
        assert!(checked > 1000);
    }

    #[test]
    fn shadow_stays_in_bounding_disk() {
        let t = torus_xy(1.0, 0.2);
        let plane = Plane3::from_normal(
            Point3::ORIGIN,
            Dir3::new(crate::geom::Vec3::new(0.3, 0.5, 0.8)).unwrap(),
        );
        let outer = project_torus(&t, &plane, 0.04, RasterMode::Outer).unwrap();
        let c = plane.project2(t.core.center);
        let bound = t.bounding_radius() + 0.04 * 2.0;
        for y in 0..outer.frame.height {
            for x in 0..outer.frame.width {
                if outer.get(x, y) {
                    let p = outer.frame.center_of(x, y);
                    let d = ((p[0] - c[0]).powi(2) + (p[1] - c[1]).powi(2)).sqrt();
                    assert!(d <= bound, "marked pixel outside bounding disk");
                }
            }
        }
    }

    #[test]
    fn single_item_union_equals_project_torus() {
        let t = torus_xy(1.0, 0.2);
        let a = project_torus(&t, &Plane3::xy(), 0.03, RasterMode::Outer).unwrap();
        let b = union_shadow(&[t.into()], &Plane3::xy(), 0.03, RasterMode::Outer).unwrap();
        assert_eq!(a.bits, b.bits);
    }

    #[test]
    fn inner_mode_rejects_coarse_pixels() {
        let t = torus_xy(1.0, 0.2);
        let err = project_torus(&t, &Plane3::xy(), 0.06, RasterMode::Inner);
        assert!(matches!(err, Err(ShadowError::ResolutionTooCoarse { .. })));
    }
}
