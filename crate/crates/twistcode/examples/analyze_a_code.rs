//! Build a twisted centralizer code from scratch and inspect everything the
//! library computes for it: parameters, parity-check rank, a basis, syndrome
//! behaviour, and the dimension/distance bounds.
//!
//! ```bash
//! cargo run --example analyze_a_code
//! ```

use twistcode::bounds::bounds_report;
use twistcode::code::{code_build, DEFAULT_DISTANCE_BUDGET};
use twistcode::field::Field;
use twistcode::matrix::Mat;

fn main() -> Result<(), Box<dyn std::error::Error>> {
    let f = Field::prime(3)?;
    let a_mat = Mat::from_rows(
        &f,
        &[vec![0, 0, 1, 1], vec![0, 1, 1, 2], vec![2, 2, 1, 1], vec![1, 0, 0, 2]],
    )?;
    let a = f.from_int(-1);

    // C(A,a) = {B : AB = aBA}, a linear code of length n² under
    // column-major vectorization.
    let code = code_build(&a_mat, a)?;
    println!("code over GF(3), twist a = -1, matrix:");
    for row in a_mat.row_codes() {
        println!("  {row:?}");
    }
    println!();
    println!("length      {}", code.length());
    println!("dimension   {}", code.dim());
    println!("H rank      {}", code.h_rank());

    let params = code.min_distance(DEFAULT_DISTANCE_BUDGET);
    println!("distance    {} ({:?})", params.d, params.status);
    println!();

    println!("basis matrices:");
    for (i, b) in code.basis().iter().enumerate() {
        println!("  generator {}:", i + 1);
        for row in b.row_codes() {
            println!("    {row:?}");
        }
    }
    println!();

    // Membership is a syndrome question: Synd(B) = AB − aBA.
    let member = &code.basis()[0];
    let outsider = Mat::identity(&f, 4);
    println!("syndrome of a basis element is zero: {}", code.syndrome(member)?.is_zero());
    println!("identity matrix is a codeword:       {}", code.contains(&outsider)?);
    println!();

    // Eigenvalue and product-code bounds bracket the dimension without
    // building the code; rank-one and Singleton caps bound the distance.
    let report = bounds_report(&a_mat, a)?;
    println!("bounds report:");
    println!("{}", serde_json::to_string_pretty(&report)?);
    Ok(())
}
