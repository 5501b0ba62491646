// Matrices I ⊕ wI ⊕ w²I with empty rank-k range, and how far a
// non-normal perturbation keeps them empty.

use rankrange::counterexample::{build_counterexample, perturb_nonnormal, CounterexampleSpec};
use rankrange::engine::{emptiness_check, Emptiness, RankRangeQuery};
use rankrange::Error;

pub fn run_example() -> Result<(), Box<dyn std::error::Error>> {
    for (n, k) in [(3, 2), (6, 3), (9, 4)] {
        let a = build_counterexample(&CounterexampleSpec::new(n, k)?)?;
        match emptiness_check(&RankRangeQuery::new(a, k)?)? {
            Emptiness::ProvablyEmpty { angles } => println!("n = {n}, k = {k}: empty, certified by angles {angles:.4?}"),
            other => println!("n = {n}, k = {k}: {}", other.name()),
        }
    }
    let a = build_counterexample(&CounterexampleSpec::new(6, 3)?)?;
    for eps in [0.1, 10.0] {
        match perturb_nonnormal(&a, 3, eps, 0) {
            Ok(_) => println!("epsilon {eps}: still empty"),
            Err(Error::EmptinessLost { largest_preserving }) => {
                println!("epsilon {eps}: emptiness lost, holds up to {largest_preserving:.4}")
            }
            Err(e) => return Err(e.into()),
        }
    }
    Ok(())
}

fn main() {
    run_example().expect("counterexample example");
}
