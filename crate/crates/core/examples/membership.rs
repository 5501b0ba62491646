// Membership queries against Λ_1 of a diagonal matrix, with the violated
// angle for outside points.

use rankrange::engine::{membership, Membership, RankRangeQuery};
use rankrange::{ComplexMatrix, C64};

pub fn run_example() -> Result<(), Box<dyn std::error::Error>> {
    let a = ComplexMatrix::from_diag(&[C64::new(1.0, 0.0), C64::new(0.0, 1.0), C64::new(-1.0, 0.0), C64::new(0.0, -1.0)]);
    let q = RankRangeQuery::new(a, 1)?;
    for mu in [C64::new(0.0, 0.0), C64::new(0.5, 0.5), C64::new(0.9, 0.9)] {
        match membership(&q, mu)? {
            Membership::Outside { angle, slack } => println!("{mu}: Outside (angle {angle:.4}, slack {slack:.3})"),
            m => println!("{mu}: {}", m.name()),
        }
    }
    Ok(())
}

fn main() {
    run_example().expect("membership example");
}
