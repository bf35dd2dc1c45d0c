//! Orthogonal shadows of tori, tubes, and their unions on 2-planes and
//! lines: conservative rasters, connectivity, inscribed disks, interval
//! hulls, and a box-counting estimator.

mod analyze;
mod interval;
mod raster;

pub use analyze::{box_counting_dimension, connected_components, max_inscribed_disk, BoxDim, InscribedDisk};
pub use interval::{line_projection_interval, Interval1, IntervalReport};
pub use raster::{project_torus, union_shadow, union_shadow_in_frame, Frame, RasterMode, ShadowRaster};

use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;
use serde::{Deserialize, Serialize};
use thiserror::Error;

use crate::geom::{Dir3, Plane3, Point3, SolidTorus, Strip2, Tube, Vec3};

#[derive(Debug, Error)]
pub enum ShadowError {
    #[error("pixel size {pixel} too coarse for inner-mode fidelity; need at most {required}")]
    ResolutionTooCoarse { pixel: f64, required: f64 },
    #[error("no items to project")]
    EmptyItems,
    #[error("projection target must be {expected}-dimensional")]
    WrongTargetDim { expected: usize },
    #[error("tube axis is not perpendicular to the target line; its projection is unbounded")]
    UnboundedProjection,
    #[error("box-counting fit is degenerate: {reason}")]
    DegenerateFit { reason: String },
}

/// Anything whose shadow the rasterizer understands.
#[derive(Debug, Clone, Copy, PartialEq, Serialize, Deserialize)]
pub enum ShadowItem {
    Torus(SolidTorus),
    Tube(Tube),
}

impl From<SolidTorus> for ShadowItem {
    fn from(t: SolidTorus) -> Self {
        ShadowItem::Torus(t)
    }
}

impl From<Tube> for ShadowItem {
    fn from(t: Tube) -> Self {
        ShadowItem::Tube(t)
    }
}

/// Shadow of a tube on a 2-plane: a disk when the axis is perpendicular to
/// the plane, otherwise a strip of half-width equal to the tube radius
/// around the projected axis. Either way it fits in a strip of width 2r,
/// because orthogonal projection is 1-Lipschitz.
#[derive(Debug, Clone, Copy, PartialEq)]
pub enum TubeShadow {
    Disk { center: [f64; 2], radius: f64 },
    Strip(Strip2),
}

/// Exact shadow descriptor of a tube on a 2-plane.
pub fn project_tube(tube: &Tube, target: &Plane3) -> TubeShadow {
    assert_eq!(target.dim(), 2, "tube shadows are taken on 2-planes");
    let n = target.normal2();
    let d = tube.axis.direction.as_vec();
    let in_plane = d - n.scaled(n.as_vec().dot(d));
    let len = in_plane.norm();
    let base2 = target.project2(tube.axis.base);
    if len < 1e-12 {
        return TubeShadow::Disk { center: base2, radius: tube.radius };
    }
    // Direction of the projected axis in plane coordinates.
    let u = target.basis()[0].as_vec();
    let v = target.basis()[1].as_vec();
    let dir2 = [u.dot(in_plane) / len, v.dot(in_plane) / len];
    TubeShadow::Strip(Strip2::new(base2, dir2, tube.radius).expect("positive tube radius"))
}

impl TubeShadow {
    /// Signed distance to the shadow (negative inside). 1-Lipschitz.
    pub fn signed_distance(&self, p: [f64; 2]) -> f64 {
        match self {
            TubeShadow::Disk { center, radius } => {
                let dx = p[0] - center[0];
                let dy = p[1] - center[1];
                (dx * dx + dy * dy).sqrt() - radius
            }
            TubeShadow::Strip(s) => s.offset(p).abs() - s.half_width,
        }
    }
}

/// Uniform random unit vector (rejection sampling from the cube).
fn random_dir<R: Rng>(rng: &mut R) -> Dir3 {
    loop {
        let v = Vec3::new(
            rng.gen_range(-1.0..1.0),
            rng.gen_range(-1.0..1.0),
            rng.gen_range(-1.0..1.0),
        );
        let n2 = v.norm_squared();
        if n2 > 1e-4 && n2 <= 1.0 {
            return Dir3::new(v).expect("nonzero sample");
        }
    }
}

/// Deterministic random 2-planes through `center`: plane k is drawn from a
/// dedicated ChaCha stream, so the set is stable under reordering and
/// parallel generation.
pub fn sample_planes(seed: u64, count: usize, center: Point3) -> Vec<Plane3> {
    (0..count)
        .map(|k| {
            let mut rng = ChaCha8Rng::seed_from_u64(seed);
            rng.set_stream(k as u64);
            let n = random_dir(&mut rng);
            Plane3::from_normal(center, n)
        })
        .collect()
}

/// Deterministic random lines through `center` (1-dimensional targets).
pub fn sample_lines(seed: u64, count: usize, center: Point3) -> Vec<Plane3> {
    (0..count)
        .map(|k| {
            let mut rng = ChaCha8Rng::seed_from_u64(seed);
            // Offset the stream space so lines differ from planes of the
            // same seed.
            rng.set_stream(0x8000_0000_0000_0000u64 | k as u64);
            Plane3::line(center, random_dir(&mut rng))
        })
        .collect()
}
