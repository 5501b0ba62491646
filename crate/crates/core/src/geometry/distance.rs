use super::{cross, dot2, ConvexRegion};
use crate::error::{Error, Result};
use crate::linalg::C64;

fn point_segment(z: C64, a: C64, b: C64) -> f64 {
    let d = b - a;
    let len2 = d.norm_sqr();
    if len2 == 0.0 {
        return (z - a).norm();
    }
    let s = (dot2(z - a, d) / len2).clamp(0.0, 1.0);
    (z - (a + d * s)).norm()
}

/// Euclidean distance from `z` to a non-empty region (`+∞` for `Empty`).
pub fn distance_to_region(z: C64, region: &ConvexRegion) -> f64 {
    match region {
        ConvexRegion::Empty => f64::INFINITY,
        ConvexRegion::Point(p) => (z - p).norm(),
        ConvexRegion::Segment(a, b) => point_segment(z, *a, *b),
        ConvexRegion::Polygon(v) => {
            let n = v.len();
            let inside = (0..n).all(|i| cross(v[(i + 1) % n] - v[i], z - v[i]) >= 0.0);
            if inside {
                return 0.0;
            }
            (0..n).map(|i| point_segment(z, v[i], v[(i + 1) % n])).fold(f64::INFINITY, f64::min)
        }
    }
}

/// Symmetric Hausdorff distance between two non-empty convex regions.
///
/// The distance to a convex set is a convex function, so its maximum over
/// the other region is attained at a vertex.
pub fn hausdorff_distance(a: &ConvexRegion, b: &ConvexRegion) -> Result<f64> {
    if a.is_empty() || b.is_empty() {
        return Err(Error::EmptyRegion);
    }
    let one_way = |x: &ConvexRegion, y: &ConvexRegion| {
        x.vertices().into_iter().map(|v| distance_to_region(v, y)).fold(0.0, f64::max)
    };
    Ok(one_way(a, b).max(one_way(b, a)))
}
