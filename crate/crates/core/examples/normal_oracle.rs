// Exact Λ_k of a normal matrix from hull intersections, compared with
// the sampled outer region.

use rand::SeedableRng;
use rand_chacha::ChaCha8Rng;
use rankrange::engine::{boundary_region, RankRangeQuery};
use rankrange::geometry::hausdorff_distance;
use rankrange::normal::{normal_exact_region, normal_spectrum};
use rankrange::{ComplexMatrix, C64};

pub fn run_example() -> Result<(), Box<dyn std::error::Error>> {
    let mut rng = ChaCha8Rng::seed_from_u64(7);
    let eig: Vec<C64> = (0..6).map(|j| C64::from_polar(1.0 + 0.1 * j as f64, 1.1 * j as f64)).collect();
    let u = ComplexMatrix::random_unitary(6, &mut rng);
    let a = &(&u * &ComplexMatrix::from_diag(&eig)) * &u.adjoint();
    let spec = normal_spectrum(&a, 1e-10)?;
    for k in 1..=3 {
        let exact = normal_exact_region(&spec, k)?;
        let outer = boundary_region(&RankRangeQuery::new(a.clone(), k)?.with_grid(1440)?)?.region;
        let gap = match (exact.is_empty(), outer.is_empty()) {
            (true, true) => "both empty".to_string(),
            (false, false) => format!("Hausdorff gap {:.2e}", hausdorff_distance(&exact, &outer)?),
            _ => "emptiness mismatch".to_string(),
        };
        println!("k = {k}: exact {}, engine {}, {gap}", exact.kind().name(), outer.kind().name());
    }
    Ok(())
}

fn main() {
    run_example().expect("normal oracle example");
}
