use std::f64::consts::{PI, TAU};

use super::{cross, dot2, polygon_area, ConvexRegion, HalfPlane};
use crate::error::{Error, Result};
use crate::linalg::C64;

/// Angles closer than this are treated as the same direction.
const ANGLE_MERGE: f64 = 1e-12;
pub const DEFAULT_COLLAPSE: f64 = 1e-9;

/// Constraint `n·z ≤ b` with unit normal, remembering its input index.
#[derive(Debug, Clone, Copy)]
pub(crate) struct Line {
    pub angle: f64,
    pub normal: C64,
    pub bound: f64,
    pub index: usize,
}

impl Line {
    #[inline]
    pub fn violation(&self, z: C64) -> f64 {
        dot2(self.normal, z) - self.bound
    }
}

/// Sorts by angle and keeps the tightest plane among (near-)parallel ones.
pub(crate) fn canonical_lines(planes: &[HalfPlane]) -> Result<Vec<Line>> {
    if planes.iter().any(|p| !p.angle().is_finite() || !p.offset().is_finite()) {
        return Err(Error::NonFinite);
    }
    let mut lines: Vec<Line> = planes
        .iter()
        .enumerate()
        .map(|(index, p)| Line { angle: p.angle(), normal: p.normal(), bound: 0.5 * p.offset(), index })
        .collect();
    lines.sort_by(|a, b| {
        a.angle
            .partial_cmp(&b.angle)
            .unwrap()
            .then(a.bound.partial_cmp(&b.bound).unwrap())
            .then(a.index.cmp(&b.index))
    });
    let mut out: Vec<Line> = Vec::with_capacity(lines.len());
    for l in lines {
        match out.last() {
            Some(prev) if l.angle - prev.angle <= ANGLE_MERGE => {}
            _ => out.push(l),
        }
    }
    // wrap-around: an angle just below 2π duplicates one at 0
    if out.len() > 1 {
        let last = *out.last().unwrap();
        if out[0].angle + TAU - last.angle <= ANGLE_MERGE {
            out.pop();
            if last.bound < out[0].bound {
                out[0] = last;
            }
        }
    }
    Ok(out)
}

/// Whether the normals positively span the plane (largest angular gap below π).
pub(crate) fn is_bounded(lines: &[Line]) -> bool {
    if lines.len() < 3 {
        return false;
    }
    let mut gap: f64 = 0.0;
    for w in lines.windows(2) {
        gap = gap.max(w[1].angle - w[0].angle);
    }
    gap = gap.max(lines[0].angle + TAU - lines[lines.len() - 1].angle);
    gap < PI - 1e-12
}

/// Weights `λ ≥ 0` with `Σ λ_i n_i = 0`, `Σ λ_i = 1`, when the three
/// normals surround the origin. With `strict`, all weights must be positive;
/// otherwise one may vanish (an antiparallel pair plus any third normal).
pub(crate) fn spanning_weights(a: C64, b: C64, c: C64, strict: bool) -> Option<[f64; 3]> {
    let w = [cross(b, c), cross(c, a), cross(a, b)];
    let s: f64 = w.iter().sum();
    let eps = 1e-12;
    if s.abs() <= eps {
        return None;
    }
    let w = [w[0] / s, w[1] / s, w[2] / s];
    let ok = if strict { w.iter().all(|&x| x > eps) } else { w.iter().all(|&x| x >= -eps) };
    ok.then(|| w.map(|x| x.max(0.0)))
}

fn nearest_angle(lines: &[Line], target: f64) -> usize {
    let target = target.rem_euclid(TAU);
    let pos = lines.partition_point(|l| l.angle < target);
    let cand = [pos % lines.len(), (pos + lines.len() - 1) % lines.len()];
    let dist = |i: usize| {
        let d = (lines[i].angle - target).abs();
        d.min(TAU - d)
    };
    if dist(cand[0]) <= dist(cand[1]) {
        cand[0]
    } else {
        cand[1]
    }
}

/// A triple of lines whose normals surround the origin (weakly), preferring
/// directions about 120° apart.
pub(crate) fn spanning_triple(lines: &[Line]) -> Option<[usize; 3]> {
    let m = lines.len();
    let ok = |i: usize, j: usize, l: usize| spanning_weights(lines[i].normal, lines[j].normal, lines[l].normal, false).is_some();
    for i in 0..m {
        let t = lines[i].angle;
        let j = nearest_angle(lines, t + TAU / 3.0);
        let l = nearest_angle(lines, t + 2.0 * TAU / 3.0);
        if i != j && j != l && i != l && ok(i, j, l) {
            return Some([i, j, l]);
        }
    }
    for i in 0..m {
        for j in i + 1..m {
            for l in j + 1..m {
                if ok(i, j, l) {
                    return Some([i, j, l]);
                }
            }
        }
    }
    None
}

/// Which line an edge lies on: an input line or one side of the seed box.
#[derive(Debug, Clone, Copy, PartialEq)]
enum EdgeLine {
    Input(usize),
    Box(usize),
}

fn meet(a: &Line, b: &Line) -> Option<C64> {
    let det = cross(a.normal, b.normal);
    if det.abs() < 1e-15 {
        return None;
    }
    let x = (a.bound * b.normal.im - b.bound * a.normal.im) / det;
    let y = (a.normal.re * b.bound - b.normal.re * a.bound) / det;
    Some(C64::new(x, y))
}

/// Convex polygon whose edge `i` runs from `verts[i]` to `verts[i + 1]` along `edges[i]`.
struct Clipper<'a> {
    lines: &'a [Line],
    boxes: [Line; 4],
    verts: Vec<C64>,
    edges: Vec<EdgeLine>,
}

impl<'a> Clipper<'a> {
    fn new(lines: &'a [Line], center: C64, half: f64) -> Self {
        let dirs = [C64::new(1.0, 0.0), C64::new(0.0, 1.0), C64::new(-1.0, 0.0), C64::new(0.0, -1.0)];
        let boxes = dirs.map(|n| Line { angle: 0.0, normal: n, bound: dot2(n, center) + half, index: usize::MAX });
        // counterclockwise corners; edge i lies on box side (i + 1) % 4
        let verts = vec![
            center + C64::new(half, -half),
            center + C64::new(half, half),
            center + C64::new(-half, half),
            center + C64::new(-half, -half),
        ];
        let edges = vec![EdgeLine::Box(0), EdgeLine::Box(1), EdgeLine::Box(2), EdgeLine::Box(3)];
        Clipper { lines, boxes, verts, edges }
    }

    fn line(&self, e: EdgeLine) -> &Line {
        match e {
            EdgeLine::Input(i) => &self.lines[i],
            EdgeLine::Box(i) => &self.boxes[i],
        }
    }

    fn clip(&mut self, li: usize, tau: f64) {
        let cut = self.lines[li];
        let n = self.verts.len();
        let mut verts = Vec::with_capacity(n + 1);
        let mut edges = Vec::with_capacity(n + 1);
        for i in 0..n {
            let p = self.verts[i];
            let q = self.verts[(i + 1) % n];
            let e = self.edges[i];
            let dp = cut.violation(p);
            let dq = cut.violation(q);
            let (p_in, q_in) = (dp <= tau, dq <= tau);
            let crossing = || {
                let along = || {
                    let s = if dp != dq { (dp / (dp - dq)).clamp(0.0, 1.0) } else { 0.0 };
                    p + (q - p) * s
                };
                // nearly parallel lines meet ill-conditioned; interpolate instead
                let line = self.line(e);
                if cross(line.normal, cut.normal).abs() < 1e-6 {
                    along()
                } else {
                    meet(line, &cut).unwrap_or_else(along)
                }
            };
            match (p_in, q_in) {
                (true, true) => {
                    verts.push(p);
                    edges.push(e);
                }
                (true, false) => {
                    verts.push(p);
                    edges.push(e);
                    verts.push(crossing());
                    edges.push(EdgeLine::Input(li));
                }
                (false, true) => {
                    verts.push(crossing());
                    edges.push(e);
                }
                (false, false) => {}
            }
        }
        // merge coincident consecutive vertices, keeping the later outgoing edge
        let mut out_v: Vec<C64> = Vec::with_capacity(verts.len());
        let mut out_e: Vec<EdgeLine> = Vec::with_capacity(verts.len());
        for (v, e) in verts.into_iter().zip(edges) {
            if let Some(last) = out_v.last() {
                if (v - last).norm() <= tau {
                    out_v.pop();
                    out_e.pop();
                }
            }
            out_v.push(v);
            out_e.push(e);
        }
        while out_v.len() > 1 && (out_v[0] - out_v[out_v.len() - 1]).norm() <= tau {
            out_v.pop();
            out_e.pop();
        }
        self.verts = out_v;
        self.edges = out_e;
    }

    fn touches_box(&self) -> bool {
        self.verts.len() > 1 && self.edges.iter().any(|e| matches!(e, EdgeLine::Box(_)))
    }
}

fn remove_collinear(mut v: Vec<C64>, eps: f64) -> Vec<C64> {
    loop {
        let n = v.len();
        if n < 3 {
            return v;
        }
        let mut removed = false;
        for i in 0..n {
            let a = v[(i + n - 1) % n];
            let b = v[i];
            let c = v[(i + 1) % n];
            let base = (c - a).norm();
            let height = if base > 0.0 { cross(c - a, b - a).abs() / base } else { (b - a).norm() };
            if height <= eps {
                v.remove(i);
                removed = true;
                break;
            }
        }
        if !removed {
            return v;
        }
    }
}

/// Classifies a clipped vertex list as Point / Segment / Polygon.
pub(crate) fn classify(vertices: Vec<C64>, collapse_tol: f64, eps: f64) -> ConvexRegion {
    if vertices.is_empty() {
        return ConvexRegion::Empty;
    }
    let n = vertices.len();
    let (mut ia, mut ib, mut diam) = (0, 0, 0.0);
    for i in 0..n {
        for j in i + 1..n {
            let d = (vertices[i] - vertices[j]).norm();
            if d > diam {
                (ia, ib, diam) = (i, j, d);
            }
        }
    }
    if diam < collapse_tol {
        let mean = vertices.iter().sum::<C64>() / n as f64;
        return ConvexRegion::Point(mean);
    }
    let (a, b) = (vertices[ia], vertices[ib]);
    let dir = (b - a) / diam;
    let width = vertices.iter().map(|&v| cross(dir, v - a).abs()).fold(0.0, f64::max);
    if width < collapse_tol {
        return ConvexRegion::Segment(a, b);
    }
    let mut poly = remove_collinear(vertices, eps);
    if polygon_area(&poly) < 0.0 {
        poly.reverse();
    }
    ConvexRegion::Polygon(poly)
}

/// Intersection of a finite half-plane family (collapse tolerance 1e-9).
pub fn intersect_halfplanes(planes: &[HalfPlane]) -> Result<ConvexRegion> {
    intersect_halfplanes_with(planes, DEFAULT_COLLAPSE)
}

/// Intersection of a finite half-plane family.
///
/// The family must be bounded (normals positively spanning the plane).
/// Regions with diameter below `collapse_tol` are reported as points and
/// regions thinner than `collapse_tol` as segments.
pub fn intersect_halfplanes_with(planes: &[HalfPlane], collapse_tol: f64) -> Result<ConvexRegion> {
    let lines = canonical_lines(planes)?;
    if !is_bounded(&lines) {
        return Err(Error::Unbounded);
    }
    let scale = 1.0 + lines.iter().map(|l| l.bound.abs()).fold(0.0, f64::max);
    let tau = 1e-12 * scale;
    let mut half = 1e3 * scale;
    for _ in 0..8 {
        let mut clipper = Clipper::new(&lines, C64::new(0.0, 0.0), half);
        for li in 0..lines.len() {
            clipper.clip(li, tau);
            if clipper.verts.is_empty() {
                return Ok(ConvexRegion::Empty);
            }
        }
        if !clipper.touches_box() {
            return Ok(classify(clipper.verts, collapse_tol, tau));
        }
        half *= 1e3;
    }
    Err(Error::Unbounded)
}
