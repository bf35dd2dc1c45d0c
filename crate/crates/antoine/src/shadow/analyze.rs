//! Raster analysis: connected components, largest inscribed disk, and a
//! box-counting dimension estimate.

use serde::{Deserialize, Serialize};

use crate::shadow::{RasterMode, ShadowError, ShadowRaster};
use crate::tol;

/// 4-connectivity labeling of the occupied set.
///
/// Returns the component count and a label per pixel (0 = empty,
/// 1..=count = component id). On outer-mode rasters nearby true components
/// can merge, so the count is a lower bound for the true shadow's component
/// count.
pub fn connected_components(raster: &ShadowRaster) -> (usize, Vec<u32>) {
    let w = raster.frame.width;
    let h = raster.frame.height;
    let mut labels = vec![0u32; w * h];
    let mut count = 0u32;
    let mut queue = Vec::new();
    for start in 0..w * h {
        if raster.bits[start] == 0 || labels[start] != 0 {
            continue;
        }
        count += 1;
        labels[start] = count;
        queue.push(start);
        while let Some(idx) = queue.pop() {
            let (x, y) = (idx % w, idx / w);
            let mut visit = |nx: usize, ny: usize| {
                let nidx = ny * w + nx;
                if raster.bits[nidx] != 0 && labels[nidx] == 0 {
                    labels[nidx] = count;
                    queue.push(nidx);
                }
            };
            if x > 0 {
                visit(x - 1, y);
            }
            if x + 1 < w {
                visit(x + 1, y);
            }
            if y > 0 {
                visit(x, y - 1);
            }
            if y + 1 < h {
                visit(x, y + 1);
            }
        }
    }
    (count as usize, labels)
}

/// Largest inscribed disk of the occupied set.
#[derive(Debug, Clone, Copy, Serialize, Deserialize)]
pub struct InscribedDisk {
    /// Radius in length units (pixel distance to the nearest empty pixel
    /// center, maximized over occupied pixels).
    pub radius: f64,
    /// Center in plane coordinates.
    pub center: [f64; 2],
    /// On outer-mode rasters the estimate can exceed the true inscribed
    /// radius by at most this much (pixel·√2).
    pub overestimate_bound: f64,
}

/// Exact Euclidean distance transform of the occupied set against its
/// complement (pixels outside the frame count as empty), maximized to find
/// the largest inscribed disk.
pub fn max_inscribed_disk(raster: &ShadowRaster) -> InscribedDisk {
    let w = raster.frame.width;
    let h = raster.frame.height;
    let pixel = raster.frame.pixel;
    let inf = ((w + h) * (w + h)) as f64;

    // Squared-distance transform, two-pass parabola method: first along
    // columns, then along rows. Seed 0 on empty pixels; the frame border is
    // padded empty by construction of the frames, and the column pass also
    // clamps with the virtual border at -1 and h.
    let mut col_pass = vec![0.0f64; w * h];
    for x in 0..w {
        // 1-D distance to the nearest empty pixel in this column, counting
        // the virtual empties just outside.
        let mut dist = vec![inf; h];
        let mut last_empty: i64 = -1;
        for y in 0..h {
            if raster.bits[y * w + x] == 0 {
                dist[y] = 0.0;
                last_empty = y as i64;
            } else {
                dist[y] = (y as i64 - last_empty) as f64;
            }
        }
        let mut next_empty: i64 = h as i64;
        for y in (0..h).rev() {
            if raster.bits[y * w + x] == 0 {
                next_empty = y as i64;
            } else {
                dist[y] = dist[y].min((next_empty - y as i64) as f64);
            }
        }
        for y in 0..h {
            col_pass[y * w + x] = dist[y] * dist[y];
        }
    }

    // Row pass: lower envelope of parabolas f(q) = col_pass[q] + (p-q)².
    let mut best = (0.0f64, 0usize, 0usize);
    let mut v = vec![0usize; w];
    let mut z = vec![0.0f64; w + 1];
    let mut out_row = vec![0.0f64; w];
    for y in 0..h {
        let f = |q: usize| col_pass[y * w + q];
        let mut k = 0usize;
        v[0] = 0;
        z[0] = f64::NEG_INFINITY;
        z[1] = f64::INFINITY;
        for q in 1..w {
            loop {
                let p = v[k];
                let s = ((f(q) + (q * q) as f64) - (f(p) + (p * p) as f64))
                    / (2.0 * q as f64 - 2.0 * p as f64);
                if s <= z[k] {
                    if k == 0 {
                        v[0] = q;
                        z[0] = f64::NEG_INFINITY;
                        z[1] = f64::INFINITY;
                        break;
                    }
                    k -= 1;
                } else {
                    k += 1;
                    v[k] = q;
                    z[k] = s;
                    z[k + 1] = f64::INFINITY;
                    break;
                }
            }
        }
        let mut k = 0usize;
        for q in 0..w {
            while z[k + 1] < q as f64 {
                k += 1;
            }
            let p = v[k];
            let dq = q as f64 - p as f64;
            out_row[q] = dq * dq + f(p);
        }
        for x in 0..w {
            if raster.bits[y * w + x] != 0 && out_row[x] > best.0 {
                best = (out_row[x], x, y);
            }
        }
    }

    InscribedDisk {
        radius: best.0.sqrt() * pixel,
        center: raster.frame.center_of(best.1, best.2),
        overestimate_bound: if raster.mode == RasterMode::Outer {
            pixel * std::f64::consts::SQRT_2
        } else {
            0.0
        },
    }
}

/// Box-counting slope estimate.
#[derive(Debug, Clone, Serialize, Deserialize)]
pub struct BoxDim {
    /// Least-squares slope of log N(s) against log(1/s): the dimension
    /// estimate. A heuristic companion to topological-dimension statements,
    /// not a certificate.
    pub slope: f64,
    /// RMS residual of the fit in log-count units.
    pub residual_rms: f64,
    /// (box size in pixels, box count) pairs used.
    pub points: Vec<(usize, usize)>,
}

/// Box-counting dimension of the occupied set over the given box sizes (in
/// pixels). Needs at least four scales spanning at least two octaves.
pub fn box_counting_dimension(raster: &ShadowRaster, scales: &[usize]) -> Result<BoxDim, ShadowError> {
    if scales.len() < 4 {
        return Err(ShadowError::DegenerateFit { reason: "need at least 4 scales".into() });
    }
    let min_s = *scales.iter().min().unwrap();
    let max_s = *scales.iter().max().unwrap();
    if min_s == 0 || max_s / min_s < 4 {
        return Err(ShadowError::DegenerateFit { reason: "scales must span at least two octaves".into() });
    }

    let w = raster.frame.width;
    let h = raster.frame.height;
    let mut points = Vec::with_capacity(scales.len());
    for &s in scales {
        let bw = w.div_ceil(s);
        let bh = h.div_ceil(s);
        let mut occupied = vec![false; bw * bh];
        for y in 0..h {
            for x in 0..w {
                if raster.bits[y * w + x] != 0 {
                    occupied[(y / s) * bw + (x / s)] = true;
                }
            }
        }
        let count = occupied.iter().filter(|&&b| b).count();
        if count == 0 {
            return Err(ShadowError::DegenerateFit { reason: "empty raster".into() });
        }
        points.push((s, count));
    }

    // Least squares of log(count) on log(1/s).
    let n = points.len() as f64;
    let xs: Vec<f64> = points.iter().map(|&(s, _)| -(s as f64).ln()).collect();
    let ys: Vec<f64> = points.iter().map(|&(_, c)| (c as f64).ln()).collect();
    let mx = xs.iter().sum::<f64>() / n;
    let my = ys.iter().sum::<f64>() / n;
    let sxx: f64 = xs.iter().map(|x| (x - mx) * (x - mx)).sum();
    let sxy: f64 = xs.iter().zip(&ys).map(|(x, y)| (x - mx) * (y - my)).sum();
    if sxx <= 0.0 {
        return Err(ShadowError::DegenerateFit { reason: "no scale spread".into() });
    }
    let slope = sxy / sxx;
    let residual_rms = (xs
        .iter()
        .zip(&ys)
        .map(|(x, y)| {
            let pred = my + slope * (x - mx);
            (y - pred) * (y - pred)
        })
        .sum::<f64>()
        / n)
        .sqrt();
    if residual_rms > tol::BOXDIM_MAX_RESIDUAL {
        return Err(ShadowError::DegenerateFit {
            reason: format!("fit residual {residual_rms} exceeds {}", tol::BOXDIM_MAX_RESIDUAL),
        });
    }
    Ok(BoxDim { slope, residual_rms, points })
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::geom::Plane3;
    use crate::shadow::Frame;

    fn raster_from_fn(w: usize, h: usize, pixel: f64, f: impl Fn([f64; 2]) -> bool) -> ShadowRaster {
        let frame = Frame { lower: [0.0, 0.0], pixel, width: w, height: h };
        let mut bits = vec![0u8; w * h];
        for y in 0..h {
            for x in 0..w {
                if f(frame.center_of(x, y)) {
                    bits[y * w + x] = 1;
                }
            }
        }
        ShadowRaster { plane: Plane3::xy(), frame, mode: RasterMode::Outer, bits }
    }

    #[test]
    fn empty_and_full_component_counts() {
        let empty = raster_from_fn(16, 16, 1.0, |_| false);
        assert_eq!(connected_components(&empty).0, 0);
        let full = raster_from_fn(16, 16, 1.0, |_| true);
        assert_eq!(connected_components(&full).0, 1);
    }

    #[test]
    fn two_blobs_two_components() {
        let r = raster_from_fn(32, 16, 1.0, |p| p[0] < 8.0 || p[0] > 24.0);
        assert_eq!(connected_components(&r).0, 2);
    }

    #[test]
    fn inscribed_disk_of_rasterized_disk() {
        // Disk of radius 1 at pixel 0.01: estimate within ±0.02.
        let pixel = 0.01;
        let n = (2.4 / pixel) as usize;
        let r = raster_from_fn(n, n, pixel, |p| {
            let (dx, dy) = (p[0] - 1.2, p[1] - 1.2);
            (dx * dx + dy * dy).sqrt() <= 1.0
        });
        let disk = max_inscribed_disk(&r);
        assert!((disk.radius - 1.0).abs() <= 2.0 * pixel, "radius {}", disk.radius);
        let (cx, cy) = (disk.center[0] - 1.2, disk.center[1] - 1.2);
        assert!((cx * cx + cy * cy).sqrt() < 0.05);
    }

    #[test]
    fn inscribed_disk_of_strip() {
        // Strip of width 0.8: inscribed radius 0.4 within pixel·√2.
        let pixel = 0.01;
        let r = raster_from_fn(200, 120, pixel, |p| (p[1] - 0.6).abs() <= 0.4);
        let disk = max_inscribed_disk(&r);
        assert!((disk.radius - 0.4).abs() <= pixel * std::f64::consts::SQRT_2);
    }

    #[test]
    fn box_dim_of_segment_and_disk() {
        let pixel = 1.0;
        let seg = raster_from_fn(512, 64, pixel, |p| (p[1] - 32.25).abs() < 0.5);
        let scales = [1, 2, 4, 8, 16, 32];
        let d = box_counting_dimension(&seg, &scales).unwrap();
        assert!((d.slope - 1.0).abs() <= 0.15, "segment slope {}", d.slope);

        let disk = raster_from_fn(512, 512, pixel, |p| {
            let (dx, dy) = (p[0] - 256.0, p[1] - 256.0);
            dx * dx + dy * dy < 200.0 * 200.0
        });
        let d = box_counting_dimension(&disk, &scales).unwrap();
        assert!((d.slope - 2.0).abs() <= 0.15, "disk slope {}", d.slope);
    }

    #[test]
    fn box_dim_rejects_thin_scale_sets() {
        let r = raster_from_fn(64, 64, 1.0, |_| true);
        assert!(box_counting_dimension(&r, &[1, 2]).is_err());
        assert!(box_counting_dimension(&r, &[4, 5, 6, 7]).is_err());
    }
}
