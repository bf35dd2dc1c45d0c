//! Convex polygons in the plane with exact shadow intervals.

use serde::{Deserialize, Serialize};

use crate::planar::PlanarError;
use crate::shadow::Interval1;
use crate::tol;

/// Convex polygon, vertices counterclockwise, nonempty interior.
#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
#[serde(try_from = "Vec<[f64; 2]>", into = "Vec<[f64; 2]>")]
pub struct ConvexPoly2 {
    vertices: Vec<[f64; 2]>,
}

fn cross(o: [f64; 2], a: [f64; 2], b: [f64; 2]) -> f64 {
    (a[0] - o[0]) * (b[1] - o[1]) - (a[1] - o[1]) * (b[0] - o[0])
}

impl ConvexPoly2 {
    pub fn new(vertices: Vec<[f64; 2]>) -> Result<ConvexPoly2, PlanarError> {
        if vertices.len() < 3 {
            return Err(PlanarError::TooFewVertices { got: vertices.len() });
        }
        let n = vertices.len();
        for i in 0..n {
            let c = cross(vertices[i], vertices[(i + 1) % n], vertices[(i + 2) % n]);
            if c <= 0.0 {
                return Err(PlanarError::NotConvexCcw { vertex: (i + 1) % n });
            }
        }
        let mut area2 = 0.0;
        for i in 0..n {
            let j = (i + 1) % n;
            area2 += vertices[i][0] * vertices[j][1] - vertices[j][0] * vertices[i][1];
        }
        if area2 <= 2.0 * tol::PLANAR_AREA_TOL {
            return Err(PlanarError::DegeneratePolygon { area: area2 / 2.0 });
        }
        Ok(ConvexPoly2 { vertices })
    }

    /// Regular hexagon of the given circumradius, vertices at angles 60k°,
    /// written with exact halves so derived patterns stay reproducible.
    pub fn regular_hexagon(circumradius: f64) -> ConvexPoly2 {
        let h = 0.866_025_403_784_438_6 * circumradius;
        let r = circumradius;
        let half = 0.5 * circumradius;
        ConvexPoly2 {
            vertices: vec![[r, 0.0], [half, h], [-half, h], [-r, 0.0], [-half, -h], [half, -h]],
        }
    }

    pub fn triangle(a: [f64; 2], b: [f64; 2], c: [f64; 2]) -> Result<ConvexPoly2, PlanarError> {
        ConvexPoly2::new(vec![a, b, c])
    }

    pub fn vertices(&self) -> &[[f64; 2]] {
        &self.vertices
    }

    pub fn area(&self) -> f64 {
        let n = self.vertices.len();
        let mut area2 = 0.0;
        for i in 0..n {
            let j = (i + 1) % n;
            area2 += self.vertices[i][0] * self.vertices[j][1]
                - self.vertices[j][0] * self.vertices[i][1];
        }
        area2 / 2.0
    }

    pub fn centroid(&self) -> [f64; 2] {
        let n = self.vertices.len() as f64;
        let mut c = [0.0, 0.0];
        for v in &self.vertices {
            c[0] += v[0];
            c[1] += v[1];
        }
        [c[0] / n, c[1] / n]
    }

    pub fn diameter(&self) -> f64 {
        let mut best = 0.0f64;
        for (i, a) in self.vertices.iter().enumerate() {
            for b in &self.vertices[i + 1..] {
                let d = ((a[0] - b[0]).powi(2) + (a[1] - b[1]).powi(2)).sqrt();
                best = best.max(d);
            }
        }
        best
    }

    /// Clearance of `p` inside the polygon: min over edges of the inward
    /// perpendicular distance. Positive strictly inside, negative outside.
    pub fn inner_margin(&self, p: [f64; 2]) -> f64 {
        let n = self.vertices.len();
        let mut worst = f64::INFINITY;
        for i in 0..n {
            let a = self.vertices[i];
            let b = self.vertices[(i + 1) % n];
            let e = [b[0] - a[0], b[1] - a[1]];
            let len = (e[0] * e[0] + e[1] * e[1]).sqrt();
            // Inward normal of a ccw edge is the left perpendicular.
            let signed = (e[0] * (p[1] - a[1]) - e[1] * (p[0] - a[0])) / len;
            worst = worst.min(signed);
        }
        worst
    }

    pub fn contains(&self, p: [f64; 2]) -> bool {
        self.inner_margin(p) >= 0.0
    }

    /// Whether every vertex of `other` lies inside this polygon (for convex
    /// `other`, containment of the whole polygon).
    pub fn contains_poly(&self, other: &ConvexPoly2) -> bool {
        other.vertices.iter().all(|&v| self.inner_margin(v) >= -tol::PLANAR_AREA_TOL)
    }

    /// Exact shadow on the line direction `(cos angle, sin angle)`: the
    /// interval of vertex dot products.
    pub fn interval(&self, angle: f64) -> Interval1 {
        let (s, c) = angle.sin_cos();
        self.interval_dir([c, s])
    }

    pub fn interval_dir(&self, dir: [f64; 2]) -> Interval1 {
        let mut lo = f64::INFINITY;
        let mut hi = f64::NEG_INFINITY;
        for v in &self.vertices {
            let d = v[0] * dir[0] + v[1] * dir[1];
            lo = lo.min(d);
            hi = hi.max(d);
        }
        Interval1 { min: lo, max: hi }
    }

    /// Minimum distance to another convex polygon; zero when they overlap
    /// or touch.
    pub fn distance_to(&self, other: &ConvexPoly2) -> f64 {
        if self.overlaps(other) {
            return 0.0;
        }
        let mut best = f64::INFINITY;
        let n = self.vertices.len();
        let m = other.vertices.len();
        for i in 0..n {
            let a0 = self.vertices[i];
            let a1 = self.vertices[(i + 1) % n];
            for j in 0..m {
                let b0 = other.vertices[j];
                let b1 = other.vertices[(j + 1) % m];
                best = best.min(segment_distance(a0, a1, b0, b1));
            }
        }
        best
    }

    /// Separating-axis overlap test (closed polygons: touching counts).
    pub fn overlaps(&self, other: &ConvexPoly2) -> bool {
        !self.separated_by_some_edge(other) && !other.separated_by_some_edge(self)
    }

    fn separated_by_some_edge(&self, other: &ConvexPoly2) -> bool {
        let n = self.vertices.len();
        for i in 0..n {
            let a = self.vertices[i];
            let b = self.vertices[(i + 1) % n];
            let normal = [-(b[1] - a[1]), b[0] - a[0]];
            let own = self.interval_dir(normal);
            let their = other.interval_dir(normal);
            if their.min > own.max || their.max < own.min {
                return true;
            }
        }
        false
    }
}

impl TryFrom<Vec<[f64; 2]>> for ConvexPoly2 {
    type Error = PlanarError;
    fn try_from(v: Vec<[f64; 2]>) -> Result<Self, Self::Error> {
        ConvexPoly2::new(v)
    }
}

impl From<ConvexPoly2> for Vec<[f64; 2]> {
    fn from(p: ConvexPoly2) -> Self {
        p.vertices
    }
}

fn segment_distance(a0: [f64; 2], a1: [f64; 2], b0: [f64; 2], b1: [f64; 2]) -> f64 {
    fn point_seg(p: [f64; 2], a: [f64; 2], b: [f64; 2]) -> f64 {
        let ab = [b[0] - a[0], b[1] - a[1]];
        let len2 = ab[0] * ab[0] + ab[1] * ab[1];
        let t = if len2 > 0.0 {
            (((p[0] - a[0]) * ab[0] + (p[1] - a[1]) * ab[1]) / len2).clamp(0.0, 1.0)
        } else {
            0.0
        };
        let q = [a[0] + ab[0] * t, a[1] + ab[1] * t];
        ((p[0] - q[0]).powi(2) + (p[1] - q[1]).powi(2)).sqrt()
    }
    point_seg(a0, b0, b1)
        .min(point_seg(a1, b0, b1))
        .min(point_seg(b0, a0, a1))
        .min(point_seg(b1, a0, a1))
}
