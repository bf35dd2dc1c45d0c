//! Rotations and similarity transforms of R³.

use serde::{Deserialize, Serialize};

use crate::geom::{Dir3, GeomError, Point3, Vec3};
use crate::tol;

/// Proper rotation, stored as the images of the coordinate axes (columns).
#[derive(Debug, Clone, Copy, PartialEq, Serialize, Deserialize)]
#[serde(try_from = "[[f64; 3]; 3]", into = "[[f64; 3]; 3]")]
pub struct Rot3 {
    cols: [Vec3; 3],
}

impl Rot3 {
    pub fn identity() -> Rot3 {
        Rot3 {
            cols: [
                Vec3::new(1.0, 0.0, 0.0),
                Vec3::new(0.0, 1.0, 0.0),
                Vec3::new(0.0, 0.0, 1.0),
            ],
        }
    }

    /// Builds a rotation from three column vectors, checking orthonormality
    /// and positive orientation.
    pub fn from_cols(c0: Vec3, c1: Vec3, c2: Vec3) -> Result<Rot3, GeomError> {
        let cols = [c0, c1, c2];
        for (i, c) in cols.iter().enumerate() {
            if (c.norm() - 1.0).abs() > tol::ORTHONORMAL_TOL {
                return Err(GeomError::NotOrthonormal { axis: i });
            }
        }
        for (i, j) in [(0usize, 1usize), (0, 2), (1, 2)] {
            if cols[i].dot(cols[j]).abs() > tol::ORTHONORMAL_TOL {
                return Err(GeomError::NotOrthonormal { axis: j });
            }
        }
        let det = c0.cross(c1).dot(c2);
        if (det - 1.0).abs() > 1e-9 {
            return Err(GeomError::NotRightHanded { det });
        }
        Ok(Rot3 { cols })
    }

    /// Rodrigues rotation about `axis` by `angle` radians.
    pub fn axis_angle(axis: Dir3, angle: f64) -> Rot3 {
        let (s, c) = angle.sin_cos();
        let k = axis.as_vec();
        let col = |e: Vec3| e * c + k.cross(e) * s + k * (k.dot(e) * (1.0 - c));
        Rot3 {
            cols: [
                col(Vec3::new(1.0, 0.0, 0.0)),
                col(Vec3::new(0.0, 1.0, 0.0)),
                col(Vec3::new(0.0, 0.0, 1.0)),
            ],
        }
    }

    /// Rotation carrying the orthonormal frame `from` onto `to`.
    pub fn between_frames(from: (Dir3, Dir3, Dir3), to: (Dir3, Dir3, Dir3)) -> Rot3 {
        // to_matrix * from_matrix^T, columns evaluated directly.
        let f = [from.0.as_vec(), from.1.as_vec(), from.2.as_vec()];
        let t = [to.0.as_vec(), to.1.as_vec(), to.2.as_vec()];
        let col = |e: Vec3| {
            // from^T e gives coordinates of e in the `from` frame.
            let coords = Vec3::new(f[0].dot(e), f[1].dot(e), f[2].dot(e));
            t[0] * coords.x + t[1] * coords.y + t[2] * coords.z
        };
        Rot3 {
            cols: [
                col(Vec3::new(1.0, 0.0, 0.0)),
                col(Vec3::new(0.0, 1.0, 0.0)),
                col(Vec3::new(0.0, 0.0, 1.0)),
            ],
        }
    }

    pub fn apply(self, v: Vec3) -> Vec3 {
        self.cols[0] * v.x + self.cols[1] * v.y + self.cols[2] * v.z
    }

    pub fn apply_dir(self, d: Dir3) -> Dir3 {
        Dir3::new(self.apply(d.as_vec())).expect("rotation of a unit vector")
    }

    pub fn compose(self, inner: Rot3) -> Rot3 {
        Rot3 {
            cols: [
                self.apply(inner.cols[0]),
                self.apply(inner.cols[1]),
                self.apply(inner.cols[2]),
            ],
        }
    }
}

impl TryFrom<[[f64; 3]; 3]> for Rot3 {
    type Error = GeomError;
    fn try_from(m: [[f64; 3]; 3]) -> Result<Self, Self::Error> {
        Rot3::from_cols(m[0].into(), m[1].into(), m[2].into())
    }
}

impl From<Rot3> for [[f64; 3]; 3] {
    fn from(r: Rot3) -> Self {
        [r.cols[0].into(), r.cols[1].into(), r.cols[2].into()]
    }
}

/// Orientation-preserving similarity: `x ↦ scale · R x + t`.
#[derive(Debug, Clone, Copy, PartialEq, Serialize, Deserialize)]
pub struct Similarity3 {
    pub scale: f64,
    pub rotation: Rot3,
    pub translation: Vec3,
}

impl Similarity3 {
    pub fn new(scale: f64, rotation: Rot3, translation: Vec3) -> Result<Similarity3, GeomError> {
        if !(scale > 0.0) {
            return Err(GeomError::NonPositiveScale { scale });
        }
        Ok(Similarity3 { scale, rotation, translation })
    }

    pub fn identity() -> Similarity3 {
        Similarity3 { scale: 1.0, rotation: Rot3::identity(), translation: Vec3::ZERO }
    }

    pub fn scaling(scale: f64) -> Result<Similarity3, GeomError> {
        Similarity3::new(scale, Rot3::identity(), Vec3::ZERO)
    }

    pub fn translation(t: Vec3) -> Similarity3 {
        Similarity3 { scale: 1.0, rotation: Rot3::identity(), translation: t }
    }

    pub fn apply_point(&self, p: Point3) -> Point3 {
        Point3::ORIGIN + self.rotation.apply(p.to_vec()) * self.scale + self.translation
    }

    pub fn apply_vec(&self, v: Vec3) -> Vec3 {
        self.rotation.apply(v) * self.scale
    }

    pub fn apply_dir(&self, d: Dir3) -> Dir3 {
        self.rotation.apply_dir(d)
    }

    /// `self ∘ inner`: apply `inner` first.
    pub fn compose(&self, inner: &Similarity3) -> Similarity3 {
        Similarity3 {
            scale: self.scale * inner.scale,
            rotation: self.rotation.compose(inner.rotation),
            translation: self.rotation.apply(inner.translation) * self.scale + self.translation,
        }
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn axis_angle_rotates_quarter_turn() {
        let r = Rot3::axis_angle(Dir3::z(), std::f64::consts::FRAC_PI_2);
        let v = r.apply(Vec3::new(1.0, 0.0, 0.0));
        assert!((v - Vec3::new(0.0, 1.0, 0.0)).norm() < 1e-12);
    }

    #[test]
    fn between_frames_maps_frame() {
        let from = (Dir3::x(), Dir3::y(), Dir3::z());
        let u = Dir3::new(Vec3::new(1.0, 1.0, 0.0)).unwrap();
        let v = Dir3::new(Vec3::new(-1.0, 1.0, 0.0)).unwrap();
        let to = (u, v, Dir3::z());
        let r = Rot3::between_frames(from, to);
        assert!((r.apply(Vec3::new(1.0, 0.0, 0.0)) - u.as_vec()).norm() < 1e-12);
        assert!((r.apply(Vec3::new(0.0, 1.0, 0.0)) - v.as_vec()).norm() < 1e-12);
    }

    #[test]
    fn identity_similarity_fixes_points() {
        let s = Similarity3::identity();
        let p = Point3::new(0.3, -1.0, 2.5);
        assert_eq!(s.apply_point(p), p);
    }
}
