//! Eigenvalue analysis brackets the dimension of C(A,a) without building
//! the n²-dimensional system: geometric multiplicities of the matched
//! eigenvalue pairs (λ, aλ) give a lower bound, algebraic multiplicities an
//! upper bound, and an empty matching certifies the zero code.
//!
//! ```bash
//! cargo run --example spectral_bounds
//! ```

use rand::SeedableRng;
use rand_chacha::ChaCha8Rng;
use twistcode::bounds::{spectral_bounds, zero_code_check};
use twistcode::code::code_build;
use twistcode::field::{field_of_order, Field};
use twistcode::matrix::Mat;

fn main() -> Result<(), Box<dyn std::error::Error>> {
    // A diagonalizable example over GF(7): A = diag-like with spectrum
    // {1, 2, 4}; the twist a = 2 matches pairs (2,1), (4,2), (1,4)... when
    // they exist, so the bounds are often tight.
    let f = Field::prime(7)?;
    let mut rng = ChaCha8Rng::seed_from_u64(11);
    println!("random 3×3 matrices over GF(7), all twists:");
    for trial in 0..3 {
        let a_mat = Mat::sample(&f, 3, 3, &mut rng);
        print!("  A{trial}:");
        for a_code in 1..7 {
            let a = f.elt(a_code)?;
            let (lo, hi) = spectral_bounds(&a_mat, a)?;
            let dim = code_build(&a_mat, a)?.dim();
            assert!(lo <= dim && dim <= hi);
            print!("  a={a_code}: {lo}≤{dim}≤{hi}");
        }
        println!();
    }
    println!();

    // Nilpotent matrices have spectrum {0} only, so any nonzero twist with
    // a ≠ 1 still matches 0 against 0 — the bounds stay open — but a shift
    // makes the spectrum twist-free and forces the zero code.
    let shift = Mat::from_rows(&f, &[vec![1, 1, 0], vec![0, 1, 1], vec![0, 0, 1]])?;
    let a = f.elt(3)?;
    println!("unipotent A (spectrum {{1}}), twist a=3 (spectrum would need 3):");
    println!("  zero code certified: {}", zero_code_check(&shift, a)?);
    println!("  actual dimension:    {}", code_build(&shift, a)?.dim());
    println!();

    // The analysis runs inside splitting fields when the characteristic
    // polynomial has irreducible factors of higher degree.
    let f4 = field_of_order(4)?;
    let m = Mat::from_rows(&f4, &[vec![0, 1], vec![1, 1]])?;
    for a_code in 1..4 {
        let a = f4.elt(a_code)?;
        let (lo, hi) = spectral_bounds(&m, a)?;
        let dim = code_build(&m, a)?.dim();
        println!("GF(4) companion matrix, a={a_code}: bounds [{lo}, {hi}], dim {dim}");
    }
    Ok(())
}
