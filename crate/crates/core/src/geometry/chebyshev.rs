//! Largest inscribed disk of a half-plane family.
//!
//! Maximizes `r` subject to `n_j·p + r ≤ b_j`. The solver works on the dual
//! `min Σ λ_j b_j` s.t. `Σ λ_j (n_j, 1) = (0, 0, 1)`, `λ ≥ 0`, whose bases are
//! triples of constraints: each pivot swaps one active constraint of the
//! current triple for the most violated one. At the optimum the basis is the
//! active triple and its positive weights certify the radius.

use super::intersect::{canonical_lines, is_bounded, spanning_triple, Line};
#[cfg(test)]
use super::intersect::spanning_weights;
use super::HalfPlane;
use crate::error::{Error, Result};
use crate::linalg::C64;

#[derive(Debug, Clone, PartialEq)]
pub struct ChebyshevResult {
    pub center: C64,
    /// Negative when the family has empty intersection.
    pub radius: f64,
    /// Input indices of the tight constraints carrying positive dual weight
    /// (at most three; they alone reproduce `radius`).
    pub active_constraints: Vec<usize>,
}

type Mat3 = [[f64; 3]; 3];

fn det3(m: &Mat3) -> f64 {
    m[0][0] * (m[1][1] * m[2][2] - m[1][2] * m[2][1]) - m[0][1] * (m[1][0] * m[2][2] - m[1][2] * m[2][0])
        + m[0][2] * (m[1][0] * m[2][1] - m[1][1] * m[2][0])
}

/// Cramer's rule for a 3x3 system.
fn solve3(m: &Mat3, rhs: [f64; 3]) -> Option<[f64; 3]> {
    let d = det3(m);
    if d.abs() < 1e-300 {
        return None;
    }
    let mut out = [0.0; 3];
    for (col, o) in out.iter_mut().enumerate() {
        let mut mm = *m;
        for row in 0..3 {
            mm[row][col] = rhs[row];
        }
        *o = det3(&mm) / d;
    }
    Some(out)
}

/// Column matrix of the basis: column `i` is `(n_x, n_y, 1)` of line `basis[i]`.
fn basis_matrix(lines: &[Line], basis: &[usize; 3]) -> Mat3 {
    let mut m = [[0.0; 3]; 3];
    for (col, &b) in basis.iter().enumerate() {
        m[0][col] = lines[b].normal.re;
        m[1][col] = lines[b].normal.im;
        m[2][col] = 1.0;
    }
    m
}

fn transpose(m: &Mat3) -> Mat3 {
    let mut t = [[0.0; 3]; 3];
    for i in 0..3 {
        for j in 0..3 {
            t[i][j] = m[j][i];
        }
    }
    t
}

/// Chebyshev center of a bounded half-plane family.
pub fn chebyshev_center(planes: &[HalfPlane]) -> Result<ChebyshevResult> {
    let lines = canonical_lines(planes)?;
    if !is_bounded(&lines) {
        return Err(Error::Unbounded);
    }
    let mut basis = spanning_triple(&lines).ok_or(Error::Unbounded)?;
    let m = lines.len();
    let scale = 1.0 + lines.iter().map(|l| l.bound.abs()).fold(0.0, f64::max);
    let eps = 1e-13 * scale;

    let mut best_r = f64::INFINITY;
    let mut stalled = 0usize;
    let max_iter = 50 * m + 1000;
    for _ in 0..max_iter {
        let bm = basis_matrix(&lines, &basis);
        let weights = solve3(&bm, [0.0, 0.0, 1.0]).ok_or(Error::Singular)?;
        let bb = [lines[basis[0]].bound, lines[basis[1]].bound, lines[basis[2]].bound];
        let y = solve3(&transpose(&bm), bb).ok_or(Error::Singular)?;
        let center = C64::new(y[0], y[1]);
        let r = y[2];

        if r < best_r - eps * 1e-3 {
            best_r = r;
            stalled = 0;
        } else {
            stalled += 1;
        }
        let bland = stalled > 30;

        // entering constraint: most violated, or lowest index once stalling
        let mut entering: Option<(usize, f64)> = None;
        for (j, line) in lines.iter().enumerate() {
            if basis.contains(&j) {
                continue;
            }
            let slack = line.bound - (super::dot2(line.normal, center) + r);
            if slack < -eps {
                match entering {
                    None => entering = Some((j, slack)),
                    Some((_, s)) if !bland && slack < s => entering = Some((j, slack)),
                    _ => {}
                }
            }
        }
        let Some((e, _)) = entering else {
            let mut active: Vec<usize> = basis
                .iter()
                .zip(weights)
                .filter(|(_, w)| *w > 1e-14)
                .map(|(&b, _)| lines[b].index)
                .collect();
            active.sort_unstable();
            return Ok(ChebyshevResult { center, radius: r, active_constraints: active });
        };

        let col = [lines[e].normal.re, lines[e].normal.im, 1.0];
        let d = solve3(&bm, col).ok_or(Error::Singular)?;
        let mut leave: Option<(usize, f64)> = None;
        for i in 0..3 {
            if d[i] > 1e-12 {
                let ratio = weights[i].max(0.0) / d[i];
                match leave {
                    None => leave = Some((i, ratio)),
                    Some((li, lr)) => {
                        if ratio < lr - 1e-15 || (ratio <= lr + 1e-15 && basis[i] < basis[li]) {
                            leave = Some((i, ratio));
                        }
                    }
                }
            }
        }
        let Some((li, _)) = leave else {
            // cannot happen for a bounded family: the primal is always feasible
            return Err(Error::NoConvergence { residual: r });
        };
        basis[li] = e;
    }
    Err(Error::NoConvergence { residual: best_r })
}

#[cfg(test)]
/// Chebyshev radius of exactly three planes whose normals surround the origin.
pub(crate) fn triple_radius(planes: &[HalfPlane; 3]) -> Option<f64> {
    let n: Vec<C64> = planes.iter().map(|p| p.normal()).collect();
    let w = spanning_weights(n[0], n[1], n[2], false)?;
    Some(w.iter().zip(planes).map(|(w, p)| w * 0.5 * p.offset()).sum())
}
