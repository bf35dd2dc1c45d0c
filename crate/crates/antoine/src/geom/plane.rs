//! Affine m-planes (m = 1 or 2) and orthogonal projection onto them.

use serde::{Deserialize, Serialize};

use crate::geom::{Dir3, GeomError, Point3, Vec3};
use crate::tol;

/// Affine subspace of dimension 1 (a line used as a projection target) or 2
/// (an ordinary plane), given by an origin and an orthonormal basis.
#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
pub struct Plane3 {
    origin: Point3,
    basis: Vec<Dir3>,
}

impl Plane3 {
    /// 1-dimensional target: an oriented line.
    pub fn line(origin: Point3, direction: Dir3) -> Plane3 {
        Plane3 { origin, basis: vec![direction] }
    }

    /// 2-dimensional target from an orthonormal pair.
    pub fn new_2d(origin: Point3, u: Dir3, v: Dir3) -> Result<Plane3, GeomError> {
        if u.dot(v).abs() > tol::ORTHONORMAL_TOL {
            return Err(GeomError::NotOrthonormal { axis: 1 });
        }
        Ok(Plane3 { origin, basis: vec![u, v] })
    }

    /// 2-dimensional target spanned by two independent vectors
    /// (Gram-Schmidt orthonormalization).
    pub fn spanned_by(origin: Point3, a: Vec3, b: Vec3) -> Result<Plane3, GeomError> {
        let u = a.normalized()?;
        let b_perp = b - u.scaled(u.as_vec().dot(b));
        let v = b_perp.normalized().map_err(|_| GeomError::DegenerateSpan)?;
        Plane3::new_2d(origin, u, v)
    }

    /// Plane through `origin` orthogonal to `normal`, with a deterministic
    /// in-plane basis.
    pub fn from_normal(origin: Point3, normal: Dir3) -> Plane3 {
        let u = normal.any_orthonormal();
        let v = Dir3::new(normal.cross(u)).expect("cross of orthonormal pair");
        Plane3 { origin, basis: vec![u, v] }
    }

    pub fn xy() -> Plane3 {
        Plane3 { origin: Point3::ORIGIN, basis: vec![Dir3::x(), Dir3::y()] }
    }

    pub fn xz() -> Plane3 {
        Plane3 { origin: Point3::ORIGIN, basis: vec![Dir3::x(), Dir3::z()] }
    }

    pub fn dim(&self) -> usize {
        self.basis.len()
    }

    pub fn origin(&self) -> Point3 {
        self.origin
    }

    pub fn basis(&self) -> &[Dir3] {
        &self.basis
    }

    /// Coordinates of the orthogonal projection of `p` in the plane basis.
    pub fn project(&self, p: Point3) -> Vec<f64> {
        let w = p - self.origin;
        self.basis.iter().map(|e| e.as_vec().dot(w)).collect()
    }

    /// Projection of `p` as a point of R³.
    pub fn project_embedded(&self, p: Point3) -> Point3 {
        let w = p - self.origin;
        let mut out = self.origin;
        for e in &self.basis {
            out = out + e.scaled(e.as_vec().dot(w));
        }
        out
    }

    /// Fast path for 2-planes.
    pub fn project2(&self, p: Point3) -> [f64; 2] {
        debug_assert_eq!(self.dim(), 2);
        let w = p - self.origin;
        [self.basis[0].as_vec().dot(w), self.basis[1].as_vec().dot(w)]
    }

    /// Fast path for line targets.
    pub fn project1(&self, p: Point3) -> f64 {
        debug_assert_eq!(self.dim(), 1);
        self.basis[0].as_vec().dot(p - self.origin)
    }

    /// Point of R³ with the given in-plane coordinates (2-planes).
    pub fn embed2(&self, c: [f64; 2]) -> Point3 {
        debug_assert_eq!(self.dim(), 2);
        self.origin + self.basis[0].scaled(c[0]) + self.basis[1].scaled(c[1])
    }

    /// Unit normal of a 2-plane.
    pub fn normal2(&self) -> Dir3 {
        debug_assert_eq!(self.dim(), 2);
        Dir3::new(self.basis[0].cross(self.basis[1])).expect("normal of orthonormal basis")
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn axis_aligned_projection() {
        // (0,0,5) onto z=0 lands at in-plane coordinates (0,0).
        let p = Plane3::xy();
        assert_eq!(p.project(Point3::new(0.0, 0.0, 5.0)), vec![0.0, 0.0]);
    }

    #[test]
    fn projection_is_idempotent() {
        let p = Plane3::spanned_by(
            Point3::new(0.5, -1.0, 2.0),
            Vec3::new(1.0, 2.0, 0.0),
            Vec3::new(0.0, 1.0, 1.0),
        )
        .unwrap();
        let x = Point3::new(3.0, 0.25, -4.0);
        let once = p.project_embedded(x);
        let twice = p.project_embedded(once);
        assert!(once.distance(twice) < 1e-12);
    }

    #[test]
    fn oblique_plane_matches_closed_form() {
        // Projection of (1,2,3) onto the plane x+y+z=0 is v - (v.n)n = (-1,0,1).
        let n = Dir3::new(Vec3::new(1.0, 1.0, 1.0)).unwrap();
        let plane = Plane3::from_normal(Point3::ORIGIN, n);
        let prj = plane.project_embedded(Point3::new(1.0, 2.0, 3.0));
        assert!(prj.distance(Point3::new(-1.0, 0.0, 1.0)) < 1e-12);
    }

    #[test]
    fn oblique_plane_matches_least_squares_oracle() {
        // Independent route: minimize |origin + a·u + b·v - p|² via the
        // 2x2 normal equations and compare with the closed-form projection.
        let plane = Plane3::spanned_by(
            Point3::new(0.2, 0.1, -0.3),
            Vec3::new(1.0, 1.0, -2.0),
            Vec3::new(0.5, -1.0, 0.0),
        )
        .unwrap();
        let p = Point3::new(1.0, 2.0, 3.0);

        let (u, v) = (plane.basis()[0].as_vec(), plane.basis()[1].as_vec());
        let w = p - plane.origin();
        // Normal equations: [[u.u, u.v], [u.v, v.v]] [a, b]^T = [u.w, v.w]^T.
        let (a11, a12, a22) = (u.dot(u), u.dot(v), v.dot(v));
        let (b1, b2) = (u.dot(w), v.dot(w));
        let det = a11 * a22 - a12 * a12;
        let a = (b1 * a22 - b2 * a12) / det;
        let b = (a11 * b2 - a12 * b1) / det;
        let ls = plane.origin() + u * a + v * b;

        assert!(plane.project_embedded(p).distance(ls) < 1e-10);
    }

    #[test]
    fn projection_is_1_lipschitz() {
        let plane = Plane3::from_normal(
            Point3::new(1.0, 0.0, 0.0),
            Dir3::new(Vec3::new(0.3, -0.4, 0.866)).unwrap(),
        );
        let pts = [
            (Point3::new(0.0, 0.0, 0.0), Point3::new(1.0, 2.0, 3.0)),
            (Point3::new(-5.0, 1.0, 2.0), Point3::new(-5.0, 1.0, 2.5)),
            (Point3::new(0.1, 0.2, 0.3), Point3::new(0.1, 0.2, 0.3)),
        ];
        for (x, y) in pts {
            let dp = plane.project_embedded(x).distance(plane.project_embedded(y));
            assert!(dp <= x.distance(y) + 1e-12);
        }
    }
}
