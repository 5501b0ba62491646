use super::cross;
use super::intersect::classify;
use super::ConvexRegion;
use crate::linalg::C64;

/// Convex hull of a point set (monotone chain), collapsed to a point or
/// segment when thinner than `collapse_tol`.
pub fn convex_hull(points: &[C64], collapse_tol: f64) -> ConvexRegion {
    if points.is_empty() {
        return ConvexRegion::Empty;
    }
    let mut pts: Vec<C64> = points.to_vec();
    pts.sort_by(|a, b| a.re.partial_cmp(&b.re).unwrap().then(a.im.partial_cmp(&b.im).unwrap()));
    pts.dedup();
    if pts.len() < 3 {
        return classify(pts, collapse_tol, 0.0);
    }
    let mut lower: Vec<C64> = Vec::new();
    for &p in &pts {
        while lower.len() >= 2 && cross(lower[lower.len() - 1] - lower[lower.len() - 2], p - lower[lower.len() - 2]) <= 0.0 {
            lower.pop();
        }
        lower.push(p);
    }
    let mut upper: Vec<C64> = Vec::new();
    for &p in pts.iter().rev() {
        while upper.len() >= 2 && cross(upper[upper.len() - 1] - upper[upper.len() - 2], p - upper[upper.len() - 2]) <= 0.0 {
            upper.pop();
        }
        upper.push(p);
    }
    lower.pop();
    upper.pop();
    lower.extend(upper);
    let scale = 1.0 + points.iter().map(|p| p.norm()).fold(0.0, f64::max);
    classify(lower, collapse_tol, 1e-13 * scale)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::geometry::RegionKind;
    use crate::linalg::c;

    #[test]
    fn square_with_interior_point() {
        let h = convex_hull(&[c(1.0, 0.0), c(0.0, 1.0), c(-1.0, 0.0), c(0.0, -1.0), c(0.1, 0.1)], 1e-9);
        assert_eq!(h.kind(), RegionKind::Polygon);
        assert_eq!(h.vertices().len(), 4);
        assert!((h.area() - 2.0).abs() < 1e-15);
    }

    #[test]
    fn collinear_points_give_segment() {
        let h = convex_hull(&[c(0.0, 0.0), c(1.0, 1.0), c(2.0, 2.0)], 1e-9);
        assert_eq!(h.kind(), RegionKind::Segment);
        assert!((h.diameter() - 8f64.sqrt()).abs() < 1e-15);
    }

    #[test]
    fn coincident_points_give_point() {
        let h = convex_hull(&[c(0.5, 0.5); 3], 1e-9);
        assert_eq!(h, ConvexRegion::Point(c(0.5, 0.5)));
    }
}
