//! Points, vectors, and unit directions in R³.

use std::ops::{Add, Div, Mul, Neg, Sub};

use serde::{Deserialize, Serialize};

use crate::geom::GeomError;
use crate::tol;

/// Free vector in R³.
#[derive(Debug, Clone, Copy, PartialEq, Serialize, Deserialize)]
#[serde(from = "[f64; 3]", into = "[f64; 3]")]
pub struct Vec3 {
    pub x: f64,
    pub y: f64,
    pub z: f64,
}

impl Vec3 {
    pub const ZERO: Vec3 = Vec3 { x: 0.0, y: 0.0, z: 0.0 };

    pub fn new(x: f64, y: f64, z: f64) -> Self {
        Vec3 { x, y, z }
    }

    pub fn dot(self, rhs: Vec3) -> f64 {
        self.x * rhs.x + self.y * rhs.y + self.z * rhs.z
    }

    pub fn cross(self, rhs: Vec3) -> Vec3 {
        Vec3 {
            x: self.y * rhs.z - self.z * rhs.y,
            y: self.z * rhs.x - self.x * rhs.z,
            z: self.x * rhs.y - self.y * rhs.x,
        }
    }

    pub fn norm_squared(self) -> f64 {
        self.dot(self)
    }

    pub fn norm(self) -> f64 {
        self.norm_squared().sqrt()
    }

    /// Unit vector in this direction, or an error for (near-)zero input.
    pub fn normalized(self) -> Result<Dir3, GeomError> {
        Dir3::new(self)
    }
}

impl From<[f64; 3]> for Vec3 {
    fn from(a: [f64; 3]) -> Self {
        Vec3::new(a[0], a[1], a[2])
    }
}

impl From<Vec3> for [f64; 3] {
    fn from(v: Vec3) -> Self {
        [v.x, v.y, v.z]
    }
}

impl Add for Vec3 {
    type Output = Vec3;
    fn add(self, rhs: Vec3) -> Vec3 {
        Vec3::new(self.x + rhs.x, self.y + rhs.y, self.z + rhs.z)
    }
}

impl Sub for Vec3 {
    type Output = Vec3;
    fn sub(self, rhs: Vec3) -> Vec3 {
        Vec3::new(self.x - rhs.x, self.y - rhs.y, self.z - rhs.z)
    }
}

impl Neg for Vec3 {
    type Output = Vec3;
    fn neg(self) -> Vec3 {
        Vec3::new(-self.x, -self.y, -self.z)
    }
}

impl Mul<f64> for Vec3 {
    type Output = Vec3;
    fn mul(self, s: f64) -> Vec3 {
        Vec3::new(self.x * s, self.y * s, self.z * s)
    }
}

impl Div<f64> for Vec3 {
    type Output = Vec3;
    fn div(self, s: f64) -> Vec3 {
        Vec3::new(self.x / s, self.y / s, self.z / s)
    }
}

/// Position in R³.
#[derive(Debug, Clone, Copy, PartialEq, Serialize, Deserialize)]
#[serde(from = "[f64; 3]", into = "[f64; 3]")]
pub struct Point3 {
    pub x: f64,
    pub y: f64,
    pub z: f64,
}

impl Point3 {
    pub const ORIGIN: Point3 = Point3 { x: 0.0, y: 0.0, z: 0.0 };

    pub fn new(x: f64, y: f64, z: f64) -> Self {
        Point3 { x, y, z }
    }

    pub fn to_vec(self) -> Vec3 {
        Vec3::new(self.x, self.y, self.z)
    }

    pub fn distance(self, rhs: Point3) -> f64 {
        (self - rhs).norm()
    }
}

impl From<[f64; 3]> for Point3 {
    fn from(a: [f64; 3]) -> Self {
        Point3::new(a[0], a[1], a[2])
    }
}

impl From<Point3> for [f64; 3] {
    fn from(p: Point3) -> Self {
        [p.x, p.y, p.z]
    }
}

impl Sub for Point3 {
    type Output = Vec3;
    fn sub(self, rhs: Point3) -> Vec3 {
        Vec3::new(self.x - rhs.x, self.y - rhs.y, self.z - rhs.z)
    }
}

impl Add<Vec3> for Point3 {
    type Output = Point3;
    fn add(self, rhs: Vec3) -> Point3 {
        Point3::new(self.x + rhs.x, self.y + rhs.y, self.z + rhs.z)
    }
}

impl Sub<Vec3> for Point3 {
    type Output = Point3;
    fn sub(self, rhs: Vec3) -> Point3 {
        Point3::new(self.x - rhs.x, self.y - rhs.y, self.z - rhs.z)
    }
}

/// Unit vector. Constructors normalize and reject near-zero input, so a
/// `Dir3` carries its invariant (norm 1 within [`tol::ORTHONORMAL_TOL`]).
#[derive(Debug, Clone, Copy, PartialEq, Serialize, Deserialize)]
#[serde(try_from = "[f64; 3]", into = "[f64; 3]")]
pub struct Dir3(Vec3);

impl Dir3 {
    pub fn new(v: Vec3) -> Result<Dir3, GeomError> {
        let n2 = v.norm_squared();
        if n2 < tol::ZERO_VECTOR_TOL {
            return Err(GeomError::ZeroVector);
        }
        let n = n2.sqrt();
        Ok(Dir3(v / n))
    }

    pub fn x() -> Dir3 {
        Dir3(Vec3::new(1.0, 0.0, 0.0))
    }

    pub fn y() -> Dir3 {
        Dir3(Vec3::new(0.0, 1.0, 0.0))
    }

    pub fn z() -> Dir3 {
        Dir3(Vec3::new(0.0, 0.0, 1.0))
    }

    pub fn as_vec(self) -> Vec3 {
        self.0
    }

    pub fn dot(self, rhs: Dir3) -> f64 {
        self.0.dot(rhs.0)
    }

    pub fn cross(self, rhs: Dir3) -> Vec3 {
        self.0.cross(rhs.0)
    }

    pub fn scaled(self, s: f64) -> Vec3 {
        self.0 * s
    }

    pub fn flipped(self) -> Dir3 {
        Dir3(-self.0)
    }

    /// Any unit vector orthogonal to this one, chosen deterministically:
    /// cross against the coordinate axis with the smallest component.
    pub fn any_orthonormal(self) -> Dir3 {
        let v = self.0;
        let other = if v.x.abs() < v.y.abs() && v.x.abs() < v.z.abs() {
            Vec3::new(1.0, 0.0, 0.0)
        } else if v.y.abs() < v.z.abs() {
            Vec3::new(0.0, 1.0, 0.0)
        } else {
            Vec3::new(0.0, 0.0, 1.0)
        };
        Dir3::new(v.cross(other)).expect("orthogonal completion of a unit vector")
    }

    pub fn is_unit(self) -> bool {
        (self.0.norm() - 1.0).abs() <= tol::ORTHONORMAL_TOL
    }
}

impl TryFrom<[f64; 3]> for Dir3 {
    type Error = GeomError;
    fn try_from(a: [f64; 3]) -> Result<Self, Self::Error> {
        Dir3::new(Vec3::from(a))
    }
}

impl From<Dir3> for [f64; 3] {
    fn from(d: Dir3) -> Self {
        d.0.into()
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn cross_is_orthogonal() {
        let a = Vec3::new(1.0, 2.0, 3.0);
        let b = Vec3::new(-0.5, 4.0, 1.5);
        let c = a.cross(b);
        assert!(c.dot(a).abs() < 1e-12);
        assert!(c.dot(b).abs() < 1e-12);
    }

    #[test]
    fn dir_rejects_zero() {
        assert!(Dir3::new(Vec3::ZERO).is_err());
    }

    #[test]
    fn any_orthonormal_is_orthonormal() {
        for v in [
            Vec3::new(1.0, 0.0, 0.0),
            Vec3::new(0.3, -2.0, 0.1),
            Vec3::new(0.0, 0.0, -5.0),
        ] {
            let d = Dir3::new(v).unwrap();
            let o = d.any_orthonormal();
            assert!(o.is_unit());
            assert!(d.dot(o).abs() < 1e-12);
        }
    }
}
