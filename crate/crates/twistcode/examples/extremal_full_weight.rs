//! Codes meeting the Singleton bound with full-length distance: [n², 1, n²].
//! Two constructions produce them — J+I when the characteristic divides n+1,
//! and the sparse circulant-like A_n at twist −1 whenever the characteristic
//! avoids a finite set of bad primes.
//!
//! ```bash
//! cargo run --example extremal_full_weight
//! ```

use twistcode::code::{code_build, DEFAULT_DISTANCE_BUDGET};
use twistcode::families::{an_matrix, bad_prime_scan, bn_matrix, ones_plus_id};
use twistcode::field::Field;

fn main() -> Result<(), Box<dyn std::error::Error>> {
    // J+I over GF(5), n = 4 (5 divides n+1): the code is the line through J.
    let f = Field::prime(5)?;
    let code = code_build(&ones_plus_id(&f, 4), f.elt(3)?)?;
    let params = code.min_distance(DEFAULT_DISTANCE_BUDGET);
    println!(
        "C(J+I, 3) over GF(5), n=4: [{}, {}, {}] ({:?})",
        params.length, params.k, params.d, params.status
    );
    println!("basis generator:");
    for row in code.basis()[0].row_codes() {
        println!("  {row:?}");
    }
    println!();

    // The A_n construction at a = −1, for n = 5.  First find which
    // characteristics break it.
    let scan = bad_prime_scan(5, 1000)?;
    println!("bad primes for n=5 below 1000: {:?}", scan.bad_primes);

    let good = Field::prime(7)?;
    let a5 = an_matrix(&good, 5)?;
    println!("A_5 over GF(7):");
    for row in a5.row_codes() {
        println!("  {row:?}");
    }
    let code = code_build(&a5, good.from_int(-1))?;
    let params = code.min_distance(DEFAULT_DISTANCE_BUDGET);
    println!(
        "C(A_5, −1) over GF(7): [{}, {}, {}] ({:?})",
        params.length, params.k, params.d, params.status
    );
    let b5 = bn_matrix(&good, 5)?;
    let gen = &code.basis()[0];
    let lam = gen.get(0, 0);
    println!("basis spans the full-weight partner B_5: {}", *gen == b5.scalar_mul(lam));
    println!();

    // At a bad prime the solution space grows and the distance collapses.
    let bad_p = scan.bad_primes[0];
    let bad = Field::prime(bad_p)?;
    let code = code_build(&an_matrix(&bad, 5)?, bad.from_int(-1))?;
    let params = code.min_distance(DEFAULT_DISTANCE_BUDGET);
    println!(
        "same construction over GF({bad_p}): [{}, {}, {}] — no longer extremal",
        params.length, params.k, params.d
    );
    Ok(())
}
