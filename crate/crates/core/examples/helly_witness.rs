// A point satisfying three support constraints of Λ_2 for a 7×7 matrix,
// from the intersection of three eigenspaces.

use std::f64::consts::TAU;

use rand::SeedableRng;
use rand_chacha::ChaCha8Rng;
use rankrange::witness::helly_witness;
use rankrange::ComplexMatrix;

pub fn run_example() -> Result<(), Box<dyn std::error::Error>> {
    let mut rng = ChaCha8Rng::seed_from_u64(3);
    let a = ComplexMatrix::random_gaussian(7, 7, &mut rng);
    let w = helly_witness(&a, 2, [0.3, 0.3 + TAU / 3.0, 0.3 + 2.0 * TAU / 3.0], 1e-8)?;
    println!("intersection dimension {}", w.dimension);
    println!("mu = {:.6}", w.mu);
    println!("slacks {:?}", w.slacks);
    Ok(())
}

fn main() {
    run_example().expect("helly witness example");
}
