//! Sylvester–Hadamard matrices give the nicest twisted centralizer codes:
//! at twist a = ±1 the order-4 matrix yields a [16, 8, 4] code over GF(3)
//! and GF(5), and the order-8 matrix a [64, 32, ≤8] code whose exact
//! distance is out of exhaustive reach (3³² codewords).
//!
//! ```bash
//! cargo run --example hadamard_isodual
//! ```

use twistcode::code::{code_build, DEFAULT_DISTANCE_BUDGET};
use twistcode::families::sylvester;
use twistcode::field::Field;
use twistcode::matrix::Mat;
use twistcode::symmetry::transposition_invariance;

fn main() -> Result<(), Box<dyn std::error::Error>> {
    for q in [3u64, 5] {
        let f = Field::prime(q)?;
        let h4 = sylvester(&f, 2)?;
        println!("H4 over GF({q}):");
        for row in h4.row_codes() {
            println!("  {row:?}");
        }
        for code_twist in 1..q {
            let a = f.elt(code_twist)?;
            let code = code_build(&h4, a)?;
            let params = code.min_distance(DEFAULT_DISTANCE_BUDGET);
            println!(
                "  a = {code_twist}: [{}, {}, {}] ({:?})",
                params.length, params.k, params.d, params.status
            );
        }
        // H is symmetric and (−1)⁻¹ = −1, so transposing maps C(H,−1) onto
        // itself: the code equals its own transpose-dual image.
        let code = code_build(&h4, f.from_int(-1))?;
        println!("  C(H4,−1) closed under transposition: {}", transposition_invariance(&code)?);
        println!();
    }

    // Order 8 = H2 ⊗ H4 over GF(3).
    let f = Field::prime(3)?;
    let h4 = sylvester(&f, 2)?;
    let h8 = sylvester(&f, 3)?;
    let c8 = code_build(&h8, f.from_int(-1))?;
    let p8 = c8.min_distance(DEFAULT_DISTANCE_BUDGET);
    println!("C(H8,−1) over GF(3): length {}, dimension {}", c8.length(), c8.dim());
    println!("distance after budgeted search: ≤ {} ({:?})", p8.d, p8.status);

    // A weight-4 word W of C(H4,−1) lifts to the weight-8 word I2 ⊗ W of
    // C(H8,−1), because H8 (I2⊗W) = H2 ⊗ H4·W = −(I2⊗W) H8.
    let c4 = code_build(&h4, f.from_int(-1))?;
    let (p4, w4) = c4.min_distance_with_witness(DEFAULT_DISTANCE_BUDGET);
    let w4 = w4.expect("nonzero code has a minimum-weight witness");
    assert_eq!(p4.d, 4);
    let w8 = Mat::identity(&f, 2).kron(&w4)?;
    println!(
        "lifted codeword I2 ⊗ W: weight {}, member = {}",
        w8.hamming_weight(),
        c8.contains(&w8)?
    );
    Ok(())
}
