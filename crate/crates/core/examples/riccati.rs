// Hermitian solution of HPH − H(M* − I/2) − (M − I/2)H = I and the
// zero-compression isometry it yields for [[I, X], [Y, −I]].

use rand::SeedableRng;
use rand_chacha::ChaCha8Rng;
use rankrange::witness::{
    block_matrix, canonical_zero_witness, compression_residual, riccati_residual, riccati_solve, scalar_roots,
    unexpanded_residual, RiccatiProblem,
};
use rankrange::{ComplexMatrix, C64};

pub fn run_example() -> Result<(), Box<dyn std::error::Error>> {
    let mut rng = ChaCha8Rng::seed_from_u64(5);
    let m = ComplexMatrix::random_gaussian(3, 3, &mut rng);
    let g = ComplexMatrix::random_gaussian(3, 3, &mut rng);
    let p = g.adjoint_mul(&g).shift(C64::new(0.1, 0.0)).hermitian_part();
    let prob = RiccatiProblem::new(m, p)?;
    let h = riccati_solve(&prob)?;
    println!("expanded residual {:.2e}", riccati_residual(&h, &prob).max_abs());
    println!("unexpanded residual {:.2e}", unexpanded_residual(&h, &prob).max_abs());

    let (r1, r2) = scalar_roots(C64::new(1.0, 0.0), 1.0);
    println!("scalar roots for m = p = 1: {r1:.12}, {r2:.12}");

    let x = ComplexMatrix::random_gaussian(2, 2, &mut rng);
    let y = ComplexMatrix::random_gaussian(2, 2, &mut rng);
    let w = canonical_zero_witness(&x, &y)?;
    let a = block_matrix(&x, &y)?;
    println!("W*AW residual {:.2e}", compression_residual(&a, w.matrix(), C64::new(0.0, 0.0))?);
    Ok(())
}

fn main() {
    run_example().expect("riccati example");
}
