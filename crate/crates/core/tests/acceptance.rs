mod common;

use std::f64::consts::{PI, TAU};
use std::time::Instant;

use common::*;
use rand::Rng;
use rankrange::counterexample::{build_counterexample, CounterexampleSpec};
use rankrange::engine::{
    boundary_region_on_grid, emptiness_check, support_value, Certificate, Emptiness, RankRangeQuery, SpectralGrid,
};
use rankrange::geometry::{chebyshev_center, ConvexRegion, HalfPlane};
use rankrange::linalg::hermitian_eigenvalues;
use rankrange::normal::{normal_exact_region, NormalSpectrum};
use rankrange::witness::{
    compression_residual, helly_witness, riccati_residual, riccati_solve, scalar_roots, unexpanded_residual,
    RiccatiProblem,
};
use rankrange::{ComplexMatrix, Error, Settings, C64};

struct Outcome {
    ok: bool,
    detail: String,
}

fn outcome(ok: bool, detail: String) -> Outcome {
    Outcome { ok, detail }
}

fn emptiness_reproduction() -> Outcome {
    let start = Instant::now();
    let mut failures = Vec::new();
    match CounterexampleSpec::new(4, 2) {
        Err(Error::ThresholdViolated { .. }) => {}
        other => failures.push(format!("(4,2) not rejected: {other:?}")),
    }
    let mut worst_radius = f64::NEG_INFINITY;
    for (n, k) in [(3, 2), (5, 3), (6, 3), (9, 4), (12, 5)] {
        let a = build_counterexample(&CounterexampleSpec::new(n, k).unwrap()).unwrap();
        let verdict = emptiness_check(&RankRangeQuery::new(a.clone(), k).unwrap()).unwrap();
        if !matches!(verdict, Emptiness::ProvablyEmpty { .. }) {
            failures.push(format!("({n},{k}) {}", verdict.name()));
        }
        if 3 * k == n + 3 {
            let planes: Vec<HalfPlane> = [0.0, TAU / 3.0, 2.0 * TAU / 3.0]
                .iter()
                .map(|&t| HalfPlane::new(t, support_value(&a, k, t).unwrap()))
                .collect();
            let r = chebyshev_center(&planes).unwrap().radius;
            worst_radius = worst_radius.max(r);
            if !(r < -0.1) {
                failures.push(format!("({n},{k}) three-angle radius {r}"));
            }
        }
    }
    let secs = start.elapsed().as_secs_f64();
    if secs >= 5.0 {
        failures.push(format!("runtime {secs:.1}s"));
    }
    outcome(
        failures.is_empty(),
        format!("largest three-angle radius {worst_radius:.3}, {secs:.2}s {}", failures.join("; ")),
    )
}

fn guaranteed_nonemptiness() -> Outcome {
    let start = Instant::now();
    let settings = Settings::default();
    let (mut total, mut worst) = (0usize, 0.0f64);
    let mut failures = Vec::new();
    for n in 4..=10usize {
        for s in 0..200u64 {
            let a = gaussian(n, 0xC0FFEE + 1000 * n as u64 + s);
            let grid = SpectralGrid::new(&a, settings.grid_size).unwrap();
            for k in (1..=n).take_while(|&k| 3 * (k - 1) < n) {
                total += 1;
                let q = RankRangeQuery::new(a.clone(), k).unwrap();
                let r = boundary_region_on_grid(&q, &grid, &settings, true).unwrap();
                match &r.certificate {
                    Certificate::NonEmptyWitness { mu, isometry } => {
                        let res = compression_residual(&a, isometry.matrix(), *mu).unwrap();
                        worst = worst.max(res);
                        if res > 1e-8 {
                            failures.push(format!("n={n} k={k} seed={s} residual {res:.2e}"));
                        }
                    }
                    other => failures.push(format!("n={n} k={k} seed={s} {}", other.name())),
                }
            }
        }
    }
    let secs = start.elapsed().as_secs_f64();
    if secs >= 300.0 {
        failures.push(format!("runtime {secs:.0}s"));
    }
    let shown: Vec<&String> = failures.iter().take(5).collect();
    outcome(
        failures.is_empty(),
        format!("{total} queries, {} failures, worst residual {worst:.2e}, {secs:.1}s {shown:?}", failures.len()),
    )
}

fn helly_dimension() -> Outcome {
    let mut failures = Vec::new();
    let (mut min_dim, mut min_slack) = (usize::MAX, f64::INFINITY);
    for s in 0..100u64 {
        let a = gaussian(7, 0x4E11 + s);
        let mut r = rng(0x7A + s);
        let mut t: Vec<f64> = (0..3).map(|_| r.gen_range(0.0..TAU)).collect();
        t.sort_by(|x, y| x.partial_cmp(y).unwrap());
        match helly_witness(&a, 2, [t[0], t[1], t[2]], 1e-8) {
            Ok(w) => {
                min_dim = min_dim.min(w.dimension);
                let slack = w.slacks.iter().cloned().fold(f64::INFINITY, f64::min);
                min_slack = min_slack.min(slack);
                if w.dimension < 4 || slack < -1e-8 {
                    failures.push(format!("seed {s}: dim {} slack {slack:.2e}", w.dimension));
                }
            }
            Err(e) => failures.push(format!("seed {s}: {e}")),
        }
    }
    outcome(failures.is_empty(), format!("min dimension {min_dim}, min slack {min_slack:.3e} {failures:?}"))
}

fn normal_oracle() -> Outcome {
    let start = Instant::now();
    let mut failures = Vec::new();
    let (mut cases, mut worst_ratio) = (0, 0.0f64);
    for s in 0..50u64 {
        let n = 3 + (s as usize % 6);
        let (a, eig) = random_normal(n, 1.0 + (s % 3) as f64, 0x90 + s);
        let spec = NormalSpectrum::new(eig).unwrap();
        let rho = spec.spectral_radius();
        for k in 1..=n {
            cases += 1;
            let exact = normal_exact_region(&spec, k).unwrap();
            let engine = outer_region(&a, k, 1440, true);
            let gap = region_gap(&exact, &engine);
            let bound = 5e-3 * (1.0 + rho);
            worst_ratio = worst_ratio.max(gap / bound);
            if gap > bound {
                failures.push(format!("seed {s} n={n} k={k}: {} vs {} gap {gap:.2e}", exact.kind().name(), engine.kind().name()));
            }
        }
    }
    let secs = start.elapsed().as_secs_f64();
    if secs >= 120.0 {
        failures.push(format!("runtime {secs:.0}s"));
    }
    outcome(
        failures.is_empty(),
        format!("{cases} (matrix, k) pairs, worst gap/bound {worst_ratio:.3}, {secs:.1}s {failures:?}"),
    )
}

fn riccati() -> Outcome {
    let mut failures = Vec::new();
    let (mut worst_res, mut worst_diff) = (0.0f64, 0.0f64);
    for k in [1usize, 2, 3, 5] {
        for s in 0..100u64 {
            let mut r = rng(0x41CC + 1000 * k as u64 + s);
            let m = ComplexMatrix::random_gaussian(k, k, &mut r);
            let g = ComplexMatrix::random_gaussian(k, k, &mut r);
            let p = g.adjoint_mul(&g).shift(C64::new(0.1, 0.0)).hermitian_part();
            let prob = RiccatiProblem::new(m, p).unwrap();
            match riccati_solve(&prob) {
                Ok(h) => {
                    let r2 = riccati_residual(&h, &prob);
                    let r1 = unexpanded_residual(&h, &prob);
                    worst_res = worst_res.max(r2.max_abs());
                    worst_diff = worst_diff.max(r1.max_abs_diff(&r2));
                    if r2.max_abs() > 1e-8 || r1.max_abs_diff(&r2) > 1e-10 {
                        failures.push(format!("k={k} seed={s}"));
                    }
                }
                Err(e) => failures.push(format!("k={k} seed={s}: {e}")),
            }
        }
    }
    let mut worst_scalar = 0.0f64;
    let mut r = rng(0x5CA1);
    for _ in 0..100 {
        let m = C64::new(r.gen_range(-3.0..3.0), r.gen_range(-3.0..3.0));
        let p: f64 = r.gen_range(0.1..4.0);
        let b = m.re - 0.5;
        let disc = (b * b + p).sqrt();
        let (q1, q2) = ((b + disc) / p, (b - disc) / p);
        let (r1, r2) = scalar_roots(m, p);
        worst_scalar = worst_scalar.max((r1 - q1).abs().max((r2 - q2).abs()) / (1.0 + q1.abs().max(q2.abs())));
        let prob = RiccatiProblem::new(ComplexMatrix::from_diag(&[m]), ComplexMatrix::from_real_diag(&[p])).unwrap();
        let h = riccati_solve(&prob).unwrap()[(0, 0)].re;
        worst_scalar = worst_scalar.max((h - q1).abs().min((h - q2).abs()) / (1.0 + h.abs()));
    }
    if worst_scalar > 1e-12 {
        failures.push(format!("scalar error {worst_scalar:.2e}"));
    }
    outcome(
        failures.is_empty(),
        format!(
            "worst residual {worst_res:.2e}, worst form difference {worst_diff:.2e}, scalar error {worst_scalar:.2e} {failures:?}"
        ),
    )
}

fn invariance() -> Outcome {
    let mut failures = Vec::new();
    let mut worst = [0.0f64; 5];
    for s in 0..50u64 {
        let n = 2 + (s as usize % 5);
        let a = gaussian(n, 0x1A + s);
        let mut r = rng(0x2B + s);
        let u = ComplexMatrix::random_unitary(n, &mut r);
        let b = u.adjoint_mul(&(&a * &u));
        let j = r.gen_range(0..720);
        let alpha_rot = C64::from_polar(1.0, TAU * j as f64 / 720.0);
        let alpha_real = r.gen_range(0.2..5.0);
        let beta = C64::new(r.gen_range(-3.0..3.0), r.gen_range(-3.0..3.0));
        let m = r.gen_range(16..360);
        for k in 1..=n {
            let base = outer_region(&a, k, 720, true);
            let gap = region_gap(&base, &outer_region(&b, k, 720, true));
            worst[0] = worst[0].max(gap);
            if gap > 1e-7 {
                failures.push(format!("unitary seed {s} k {k}: {gap:.2e}"));
            }
            let plain = outer_region(&a, k, 720, false);
            for alpha in [alpha_rot, C64::new(alpha_real, 0.0)] {
                let image = outer_region(&a.scale(alpha).shift(beta), k, 720, false);
                let gap = region_gap(&plain.map_affine(alpha, beta), &image);
                worst[1] = worst[1].max(gap / alpha.norm().max(1.0));
                if gap > 1e-7 * alpha.norm().max(1.0) {
                    failures.push(format!("affine seed {s} k {k} alpha {alpha:.3}: {gap:.2e}"));
                }
            }
            if k < n {
                let inner = outer_region(&a, k + 1, 720, true);
                if !vertices_inside(&inner, &base, 1e-9) {
                    failures.push(format!("nesting seed {s} k {k}"));
                    worst[2] = f64::INFINITY;
                }
            }
            for t in [0.0, 0.7, 2.0, 4.5] {
                let d = (support_value(&a, k, t + PI).unwrap() + support_value(&a, n - k + 1, t).unwrap()).abs();
                worst[3] = worst[3].max(d);
                if d > 1e-9 {
                    failures.push(format!("periodicity seed {s} k {k} t {t}: {d:.2e}"));
                }
            }
            let coarse = outer_region(&a, k, m, false);
            let fine = outer_region(&a, k, 2 * m, false);
            if (coarse.is_empty() && !fine.is_empty()) || !vertices_inside(&fine, &coarse, 1e-9) {
                failures.push(format!("monotonicity seed {s} k {k} m {m}"));
                worst[4] = f64::INFINITY;
            }
        }
    }
    outcome(
        failures.is_empty(),
        format!(
            "50 instances each; unitary {:.1e}, affine {:.1e}, periodicity {:.1e}, nesting and monotonicity {} {:?}",
            worst[0],
            worst[1],
            worst[3],
            if worst[2].is_finite() && worst[4].is_finite() { "exact" } else { "violated" },
            failures.iter().take(5).collect::<Vec<_>>()
        ),
    )
}

fn known_points() -> Outcome {
    let mut failures = Vec::new();
    let d = [C64::new(1.0, 0.0), C64::new(0.0, 1.0), C64::new(-1.0, 0.0), C64::new(0.0, -1.0)];
    let a = ComplexMatrix::from_diag(&d);
    let engine = outer_region(&a, 2, 720, true);
    let exact = normal_exact_region(&NormalSpectrum::new(d.to_vec()).unwrap(), 2).unwrap();
    let point_detail = format!("engine {:?}, oracle {:?}", engine, exact);
    match (&engine, &exact) {
        (ConvexRegion::Point(p), ConvexRegion::Point(q)) if p.norm() < 1e-3 && q.norm() < 1e-3 => {}
        _ => failures.push(point_detail.clone()),
    }
    let mut worst = 0.0f64;
    for s in 0..50u64 {
        let n = 2 + (s as usize % 7);
        let h = ComplexMatrix::random_hermitian(n, &mut rng(0x4E + s));
        let ev = hermitian_eigenvalues(&h, 1e-14).unwrap();
        for k in 1..=n {
            let region = outer_region(&h, k, 720, true);
            let (lo, hi) = (ev[n - k], ev[k - 1]);
            if lo > hi {
                if !region.is_empty() {
                    failures.push(format!("seed {s} k {k}: expected Empty, got {}", region.kind().name()));
                }
                continue;
            }
            let v = region.vertices();
            if v.is_empty() {
                failures.push(format!("seed {s} k {k}: Empty, expected [{lo}, {hi}]"));
                continue;
            }
            let xmin = v.iter().map(|z| z.re).fold(f64::INFINITY, f64::min);
            let xmax = v.iter().map(|z| z.re).fold(f64::NEG_INFINITY, f64::max);
            let ymax = v.iter().map(|z| z.im.abs()).fold(0.0, f64::max);
            let err = (xmin - lo).abs().max((xmax - hi).abs()).max(ymax);
            worst = worst.max(err);
            if err > 1e-6 {
                failures.push(format!("seed {s} k {k}: endpoint error {err:.2e}"));
            }
        }
    }
    outcome(failures.is_empty(), format!("{point_detail}; worst Hermitian endpoint error {worst:.2e} {failures:?}"))
}

fn main() {
    let criteria: [(&str, fn() -> Outcome); 7] = [
        ("empty rank-k ranges of rotated identity sums", emptiness_reproduction),
        ("nonempty rank-k ranges below the 3(k-1) < n threshold", guaranteed_nonemptiness),
        ("eigenspace triple intersection dimension", helly_dimension),
        ("engine agrees with the normal-matrix oracle", normal_oracle),
        ("Riccati solutions and residual forms", riccati),
        ("invariance suite", invariance),
        ("known regions", known_points),
    ];
    let mut failed = 0;
    for (i, (name, check)) in criteria.iter().enumerate() {
        let start = Instant::now();
        let o = check();
        let verdict = if o.ok { "PASS" } else { "FAIL" };
        if !o.ok {
            failed += 1;
        }
        println!("{verdict} criterion {}: {name} [{:.1}s] {}", i + 1, start.elapsed().as_secs_f64(), o.detail);
    }
    println!("{} of {} criteria passed", criteria.len() - failed, criteria.len());
    if failed > 0 {
        std::process::exit(1);
    }
}
