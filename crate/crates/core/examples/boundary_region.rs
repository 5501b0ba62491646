// Outer region of Λ_2 for a seeded random 5×5 matrix, with its witness.

use rand::SeedableRng;
use rand_chacha::ChaCha8Rng;
use rankrange::engine::{boundary_region, Certificate, RankRangeQuery};
use rankrange::witness::compression_residual;
use rankrange::ComplexMatrix;

pub fn run_example() -> Result<(), Box<dyn std::error::Error>> {
    let mut rng = ChaCha8Rng::seed_from_u64(2024);
    let a = ComplexMatrix::random_gaussian(5, 5, &mut rng);
    let q = RankRangeQuery::new(a.clone(), 2)?;
    let r = boundary_region(&q)?;
    println!("Λ_2(A): {} with {} vertices", r.region.kind().name(), r.region.vertices().len());
    println!("Chebyshev radius {:.4}", r.chebyshev.radius);
    match &r.certificate {
        Certificate::NonEmptyWitness { mu, isometry } => {
            let res = compression_residual(&a, isometry.matrix(), *mu)?;
            println!("witness at {mu:.4}, residual {res:.2e}");
        }
        other => println!("certificate {}", other.name()),
    }
    Ok(())
}

fn main() {
    run_example().expect("boundary region example");
}
