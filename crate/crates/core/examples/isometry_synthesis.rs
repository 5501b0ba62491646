// Searching for an isometry X with X*AX = μI at a point of Λ_2.

use rand::SeedableRng;
use rand_chacha::ChaCha8Rng;
use rankrange::engine::{boundary_region, RankRangeQuery};
use rankrange::witness::{compression_residual, isometry_defect, synthesize_isometry, verify_compression};
use rankrange::ComplexMatrix;

pub fn run_example() -> Result<(), Box<dyn std::error::Error>> {
    let mut rng = ChaCha8Rng::seed_from_u64(11);
    let a = ComplexMatrix::random_gaussian(6, 6, &mut rng);
    let center = boundary_region(&RankRangeQuery::new(a.clone(), 2)?)?.chebyshev.center;
    let x = synthesize_isometry(&a, 2, center)?;
    println!("mu = {center:.6}");
    println!("compression residual {:.2e}", compression_residual(&a, x.matrix(), center)?);
    println!("isometry defect {:.2e}", isometry_defect(x.matrix()));
    println!("verified: {}", verify_compression(&a, &x, center, 1e-8)?);
    Ok(())
}

fn main() {
    run_example().expect("isometry synthesis example");
}
