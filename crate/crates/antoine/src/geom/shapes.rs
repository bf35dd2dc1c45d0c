//! Lines, circles, solid tori of revolution, tubes, and planar strips.

use serde::{Deserialize, Serialize};

use crate::geom::{Dir3, GeomError, Plane3, Point3, Similarity3, Vec3};
use crate::tol;

/// Straight line given by a base point and a unit direction.
#[derive(Debug, Clone, Copy, PartialEq, Serialize, Deserialize)]
pub struct Line3 {
    pub base: Point3,
    pub direction: Dir3,
}

impl Line3 {
    pub fn new(base: Point3, direction: Dir3) -> Line3 {
        Line3 { base, direction }
    }

    pub fn distance_to_point(&self, p: Point3) -> f64 {
        let w = p - self.base;
        let along = self.direction.as_vec().dot(w);
        (w - self.direction.scaled(along)).norm()
    }

    pub fn point_at(&self, t: f64) -> Point3 {
        self.base + self.direction.scaled(t)
    }
}

/// Round circle in R³: the orbit of a point under rotation about an axis.
/// Carries an explicit in-plane frame `(u, v)` so that parametrizations and
/// child placements are reproducible; `normal = u × v`.
#[derive(Debug, Clone, Copy, PartialEq, Serialize, Deserialize)]
pub struct Circle3 {
    pub center: Point3,
    pub radius: f64,
    pub normal: Dir3,
    u: Dir3,
    v: Dir3,
}

impl Circle3 {
    /// Circle with a deterministically chosen in-plane frame.
    pub fn new(center: Point3, radius: f64, normal: Dir3) -> Result<Circle3, GeomError> {
        if !(radius > 0.0) {
            return Err(GeomError::NonPositiveRadius { radius });
        }
        let u = normal.any_orthonormal();
        let v = Dir3::new(normal.cross(u)).expect("cross of orthonormal pair");
        Ok(Circle3 { center, radius, normal, u, v })
    }

    /// Circle with an explicit orthonormal in-plane frame.
    pub fn with_frame(center: Point3, radius: f64, u: Dir3, v: Dir3) -> Result<Circle3, GeomError> {
        if !(radius > 0.0) {
            return Err(GeomError::NonPositiveRadius { radius });
        }
        if u.dot(v).abs() > tol::ORTHONORMAL_TOL {
            return Err(GeomError::NotOrthonormal { axis: 1 });
        }
        let normal = Dir3::new(u.cross(v)).expect("cross of orthonormal pair");
        Ok(Circle3 { center, radius, normal, u, v })
    }

    pub fn frame(&self) -> (Dir3, Dir3) {
        (self.u, self.v)
    }

    pub fn point_at(&self, theta: f64) -> Point3 {
        let (s, c) = theta.sin_cos();
        self.center + self.u.scaled(self.radius * c) + self.v.scaled(self.radius * s)
    }

    /// d(point)/dθ at `theta`.
    pub fn tangent_at(&self, theta: f64) -> Vec3 {
        let (s, c) = theta.sin_cos();
        self.u.scaled(-self.radius * s) + self.v.scaled(self.radius * c)
    }

    pub fn circumference(&self) -> f64 {
        std::f64::consts::TAU * self.radius
    }

    /// Exact distance from a point to the circle (the curve, not the disk).
    pub fn distance_to_point(&self, p: Point3) -> f64 {
        let w = p - self.center;
        let h = self.normal.as_vec().dot(w);
        let in_plane = w - self.normal.scaled(h);
        let rho = in_plane.norm();
        let dr = rho - self.radius;
        (dr * dr + h * h).sqrt()
    }
}

/// Solid torus of revolution: all points within `minor_radius` of the core
/// circle. Requires `0 < minor_radius < core.radius` so the solid is an
/// embedded torus rather than a horn or spindle shape.
#[derive(Debug, Clone, Copy, PartialEq, Serialize, Deserialize)]
pub struct SolidTorus {
    pub core: Circle3,
    pub minor_radius: f64,
}

impl SolidTorus {
    pub fn new(core: Circle3, minor_radius: f64) -> Result<SolidTorus, GeomError> {
        if !(minor_radius > 0.0) || minor_radius >= core.radius {
            return Err(GeomError::BadTorusRadii { major: core.radius, minor: minor_radius });
        }
        Ok(SolidTorus { core, minor_radius })
    }

    pub fn major_radius(&self) -> f64 {
        self.core.radius
    }

    /// Membership: (√(x²+y²) − R)² + z² ≤ r² in core-adapted coordinates,
    /// i.e. distance to the core circle at most the minor radius.
    pub fn contains(&self, p: Point3) -> bool {
        self.core.distance_to_point(p) <= self.minor_radius
    }

    /// Signed clearance of a point: negative inside, positive outside.
    pub fn signed_distance(&self, p: Point3) -> f64 {
        self.core.distance_to_point(p) - self.minor_radius
    }

    /// Radius of the bounding sphere around the core center.
    pub fn bounding_radius(&self) -> f64 {
        self.core.radius + self.minor_radius
    }

    /// Diameter of the solid as a subset of R³.
    pub fn diameter(&self) -> f64 {
        2.0 * self.bounding_radius()
    }

    /// Point on the boundary surface at core angle `theta`, tube angle `psi`.
    pub fn surface_point(&self, theta: f64, psi: f64) -> Point3 {
        let (u, v) = self.core.frame();
        let (st, ct) = theta.sin_cos();
        let (sp, cp) = psi.sin_cos();
        let radial = u.scaled(ct) + v.scaled(st);
        self.core.center
            + radial * (self.core.radius + self.minor_radius * cp)
            + self.core.normal.scaled(self.minor_radius * sp)
    }
}

/// Tube of radius `radius` about the axis line: `{P | d(P, axis) ≤ radius}`.
/// Its width (smallest slab containing it) is `2·radius`.
#[derive(Debug, Clone, Copy, PartialEq, Serialize, Deserialize)]
pub struct Tube {
    pub axis: Line3,
    pub radius: f64,
}

impl Tube {
    pub fn new(axis: Line3, radius: f64) -> Result<Tube, GeomError> {
        if !(radius > 0.0) {
            return Err(GeomError::NonPositiveRadius { radius });
        }
        Ok(Tube { axis, radius })
    }

    pub fn contains(&self, p: Point3) -> bool {
        self.axis.distance_to_point(p) <= self.radius
    }

    /// Clearance of `p` inside the tube: radius − d(p, axis). Positive means
    /// strictly interior.
    pub fn depth(&self, p: Point3) -> f64 {
        self.radius - self.axis.distance_to_point(p)
    }
}

/// Region of a 2-plane between two parallel lines, described in the plane's
/// own coordinates: points within `half_width` of the line through `point`
/// with direction `direction`.
#[derive(Debug, Clone, Copy, PartialEq, Serialize, Deserialize)]
pub struct Strip2 {
    pub point: [f64; 2],
    pub direction: [f64; 2],
    pub half_width: f64,
}

impl Strip2 {
    pub fn new(point: [f64; 2], direction: [f64; 2], half_width: f64) -> Result<Strip2, GeomError> {
        let n = (direction[0] * direction[0] + direction[1] * direction[1]).sqrt();
        if n < tol::ZERO_VECTOR_TOL.sqrt() {
            return Err(GeomError::ZeroVector);
        }
        if !(half_width > 0.0) {
            return Err(GeomError::NonPositiveRadius { radius: half_width });
        }
        Ok(Strip2 { point, direction: [direction[0] / n, direction[1] / n], half_width })
    }

    /// Signed distance from the strip's center line.
    pub fn offset(&self, p: [f64; 2]) -> f64 {
        let w = [p[0] - self.point[0], p[1] - self.point[1]];
        // Perpendicular of the unit direction.
        w[0] * (-self.direction[1]) + w[1] * self.direction[0]
    }

    pub fn contains(&self, p: [f64; 2]) -> bool {
        self.offset(p).abs() <= self.half_width
    }
}

/// Applies a similarity to any of the geometric carriers. Distances scale by
/// `s.scale`; tori map to tori with both radii scaled.
pub trait ApplySimilarity {
    fn apply_similarity(&self, s: &Similarity3) -> Self;
}

impl ApplySimilarity for Point3 {
    fn apply_similarity(&self, s: &Similarity3) -> Point3 {
        s.apply_point(*self)
    }
}

impl ApplySimilarity for Vec3 {
    fn apply_similarity(&self, s: &Similarity3) -> Vec3 {
        s.apply_vec(*self)
    }
}

impl ApplySimilarity for Line3 {
    fn apply_similarity(&self, s: &Similarity3) -> Line3 {
        Line3 { base: s.apply_point(self.base), direction: s.apply_dir(self.direction) }
    }
}

impl ApplySimilarity for Circle3 {
    fn apply_similarity(&self, s: &Similarity3) -> Circle3 {
        Circle3 {
            center: s.apply_point(self.center),
            radius: self.radius * s.scale,
            normal: s.apply_dir(self.normal),
            u: s.apply_dir(self.u),
            v: s.apply_dir(self.v),
        }
    }
}

impl ApplySimilarity for SolidTorus {
    fn apply_similarity(&self, s: &Similarity3) -> SolidTorus {
        SolidTorus {
            core: self.core.apply_similarity(s),
            minor_radius: self.minor_radius * s.scale,
        }
    }
}

impl ApplySimilarity for Tube {
    fn apply_similarity(&self, s: &Similarity3) -> Tube {
        Tube { axis: self.axis.apply_similarity(s), radius: self.radius * s.scale }
    }
}

impl ApplySimilarity for Plane3 {
    fn apply_similarity(&self, s: &Similarity3) -> Plane3 {
        match self.basis() {
            [d] => Plane3::line(s.apply_point(self.origin()), s.apply_dir(*d)),
            [u, v] => Plane3::new_2d(s.apply_point(self.origin()), s.apply_dir(*u), s.apply_dir(*v))
                .expect("rotation preserves orthonormality"),
            _ => unreachable!("plane basis is 1- or 2-dimensional"),
        }
    }
}
