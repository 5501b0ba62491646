//! Convex geometry of finite half-plane families in the complex plane.
//!
//! Points are complex numbers `x + iy`. A [`HalfPlane`] with angle `t` and
//! offset `h` is the set `{μ : 2 Re(e^{it} μ) ≤ h}`, whose outward unit
//! normal is `(cos t, −sin t)`.

mod chebyshev;
mod distance;
mod hull;
mod intersect;

pub use chebyshev::{chebyshev_center, ChebyshevResult};
pub use distance::{distance_to_region, hausdorff_distance};
pub use hull::convex_hull;
pub use intersect::{intersect_halfplanes, intersect_halfplanes_with, DEFAULT_COLLAPSE};

use std::f64::consts::TAU;

use serde::{Deserialize, Serialize};

use crate::linalg::C64;

/// Reduces an angle into `[0, 2π)`.
pub fn reduce_angle(t: f64) -> f64 {
    let r = t.rem_euclid(TAU);
    if r >= TAU {
        0.0
    } else {
        r
    }
}

#[inline]
pub(crate) fn cross(a: C64, b: C64) -> f64 {
    a.re * b.im - a.im * b.re
}

#[inline]
pub(crate) fn dot2(a: C64, b: C64) -> f64 {
    a.re * b.re + a.im * b.im
}

/// `{μ : 2 Re(e^{it} μ) ≤ offset}`.
#[derive(Debug, Clone, Copy, PartialEq, Serialize, Deserialize)]
pub struct HalfPlane {
    angle: f64,
    offset: f64,
}

impl HalfPlane {
    pub fn new(angle: f64, offset: f64) -> Self {
        HalfPlane { angle: reduce_angle(angle), offset }
    }

    /// `{z : n·z ≤ bound}` for a nonzero normal `n` given as a complex number.
    pub fn from_normal(normal: C64, bound: f64) -> Self {
        let len = normal.norm();
        let angle = (-normal.im).atan2(normal.re);
        HalfPlane::new(angle, 2.0 * bound / len)
    }

    pub fn angle(&self) -> f64 {
        self.angle
    }

    pub fn offset(&self) -> f64 {
        self.offset
    }

    /// Outward unit normal `(cos t, −sin t)`.
    pub fn normal(&self) -> C64 {
        C64::new(self.angle.cos(), -self.angle.sin())
    }

    /// `2 Re(e^{it} z)`.
    pub fn evaluate(&self, z: C64) -> f64 {
        2.0 * dot2(self.normal(), z)
    }

    /// Euclidean distance of `z` past the boundary line (negative inside).
    pub fn signed_distance(&self, z: C64) -> f64 {
        dot2(self.normal(), z) - 0.5 * self.offset
    }

    pub fn contains(&self, z: C64, slack: f64) -> bool {
        self.evaluate(z) <= self.offset + slack
    }

    /// The same constraint expressed for the image of the plane under `z ↦ αz + β`.
    pub fn transformed(&self, alpha: C64, beta: C64) -> HalfPlane {
        // n·z = Re(conj(n) z) with z = (w − β)/α
        let n = self.normal();
        let m = n * alpha.conj().inv();
        let s = m.norm();
        let shift = dot2(m, beta);
        HalfPlane::from_normal(m / s, (0.5 * self.offset + shift) / s)
    }
}

/// Closed convex region of the plane.
#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
#[serde(tag = "kind", content = "vertices")]
pub enum ConvexRegion {
    Empty,
    Point(C64),
    Segment(C64, C64),
    /// Strictly convex, counterclockwise.
    Polygon(Vec<C64>),
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize, Deserialize)]
pub enum RegionKind {
    Empty,
    Point,
    Segment,
    Polygon,
}

impl RegionKind {
    pub fn name(&self) -> &'static str {
        match self {
            RegionKind::Empty => "Empty",
            RegionKind::Point => "Point",
            RegionKind::Segment => "Segment",
            RegionKind::Polygon => "Polygon",
        }
    }

    pub fn parse(s: &str) -> Option<Self> {
        match s {
            "Empty" => Some(RegionKind::Empty),
            "Point" => Some(RegionKind::Point),
            "Segment" => Some(RegionKind::Segment),
            "Polygon" => Some(RegionKind::Polygon),
            _ => None,
        }
    }
}

impl ConvexRegion {
    pub fn kind(&self) -> RegionKind {
        match self {
            ConvexRegion::Empty => RegionKind::Empty,
            ConvexRegion::Point(_) => RegionKind::Point,
            ConvexRegion::Segment(..) => RegionKind::Segment,
            ConvexRegion::Polygon(_) => RegionKind::Polygon,
        }
    }

    pub fn is_empty(&self) -> bool {
        matches!(self, ConvexRegion::Empty)
    }

    pub fn vertices(&self) -> Vec<C64> {
        match self {
            ConvexRegion::Empty => vec![],
            ConvexRegion::Point(p) => vec![*p],
            ConvexRegion::Segment(a, b) => vec![*a, *b],
            ConvexRegion::Polygon(v) => v.clone(),
        }
    }

    /// Rebuilds a region from its kind and vertex list.
    pub fn from_parts(kind: RegionKind, vertices: &[C64]) -> Option<Self> {
        match (kind, vertices) {
            (RegionKind::Empty, []) => Some(ConvexRegion::Empty),
            (RegionKind::Point, [p]) => Some(ConvexRegion::Point(*p)),
            (RegionKind::Segment, [a, b]) => Some(ConvexRegion::Segment(*a, *b)),
            (RegionKind::Polygon, v) if v.len() >= 3 => Some(ConvexRegion::Polygon(v.to_vec())),
            _ => None,
        }
    }

    pub fn diameter(&self) -> f64 {
        let v = self.vertices();
        let mut d: f64 = 0.0;
        for i in 0..v.len() {
            for j in i + 1..v.len() {
                d = d.max((v[i] - v[j]).norm());
            }
        }
        d
    }

    /// Signed area (positive for counterclockwise polygons, zero otherwise).
    pub fn area(&self) -> f64 {
        match self {
            ConvexRegion::Polygon(v) => polygon_area(v),
            _ => 0.0,
        }
    }

    /// Vertex average (not the area centroid).
    pub fn vertex_mean(&self) -> Option<C64> {
        let v = self.vertices();
        if v.is_empty() {
            None
        } else {
            Some(v.iter().sum::<C64>() / v.len() as f64)
        }
    }

    /// Whether `z` lies in the region up to distance `tol`.
    pub fn contains(&self, z: C64, tol: f64) -> bool {
        !self.is_empty() && distance_to_region(z, self) <= tol
    }

    /// Image under `z ↦ αz + β`; `α ≠ 0` keeps orientation.
    pub fn map_affine(&self, alpha: C64, beta: C64) -> ConvexRegion {
        let f = |z: &C64| alpha * z + beta;
        match self {
            ConvexRegion::Empty => ConvexRegion::Empty,
            ConvexRegion::Point(p) => ConvexRegion::Point(f(p)),
            ConvexRegion::Segment(a, b) => ConvexRegion::Segment(f(a), f(b)),
            ConvexRegion::Polygon(v) => ConvexRegion::Polygon(v.iter().map(f).collect()),
        }
    }

    /// Half-plane description: polygon edges, four planes for a segment
    /// (two through its line, two end caps), four axis planes for a point.
    pub fn to_halfplanes(&self) -> Vec<HalfPlane> {
        match self {
            ConvexRegion::Empty => vec![],
            ConvexRegion::Point(p) => [C64::new(1.0, 0.0), C64::new(0.0, 1.0), C64::new(-1.0, 0.0), C64::new(0.0, -1.0)]
                .iter()
                .map(|&n| HalfPlane::from_normal(n, dot2(n, *p)))
                .collect(),
            ConvexRegion::Segment(a, b) => {
                let d = (b - a) / (b - a).norm();
                let u = C64::new(-d.im, d.re);
                vec![
                    HalfPlane::from_normal(u, dot2(u, *a)),
                    HalfPlane::from_normal(-u, -dot2(u, *a)),
                    HalfPlane::from_normal(d, dot2(d, *b)),
                    HalfPlane::from_normal(-d, -dot2(d, *a)),
                ]
            }
            ConvexRegion::Polygon(v) => (0..v.len())
                .map(|i| {
                    let p = v[i];
                    let q = v[(i + 1) % v.len()];
                    let e = q - p;
                    // outward normal of a counterclockwise edge points right
                    let n = C64::new(e.im, -e.re);
                    HalfPlane::from_normal(n, dot2(n, p))
                })
                .collect(),
        }
    }
}

pub(crate) fn polygon_area(v: &[C64]) -> f64 {
    let n = v.len();
    let mut s = 0.0;
    for i in 0..n {
        s += cross(v[i], v[(i + 1) % n]);
    }
    0.5 * s
}
