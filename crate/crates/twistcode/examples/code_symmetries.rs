//! Permutations commuting with A act on C(A,a) and expose structure: a
//! semiregular commuting σ makes the code equivalent to a quasicyclic code,
//! with an explicit coordinate reordering realizing the equivalence.
//!
//! ```bash
//! cargo run --example code_symmetries
//! ```

use twistcode::code::code_build;
use twistcode::families::all_ones;
use twistcode::field::Field;
use twistcode::symmetry::{
    apply_product_action, commuting_permutations, format_cycles, parse_cycles,
    product_action_invariance, quasicyclic_report, transposition_invariance, ActionSide,
};

fn main() -> Result<(), Box<dyn std::error::Error>> {
    // The all-ones matrix commutes with every permutation, so C(J,a) has
    // the full symmetric group acting on it.
    let f = Field::prime(5)?;
    let j = all_ones(&f, 3);
    let a = f.elt(2)?;
    let code = code_build(&j, a)?;
    println!(
        "C(J, 2) over GF(5), n = 3: length {}, dimension {}",
        code.length(),
        code.dim()
    );

    let perms = commuting_permutations(&j, 8)?;
    println!("\npermutations commuting with J (expect all of S_3 = 6):");
    for p in &perms {
        println!("  {}", format_cycles(p));
    }

    // A 3-cycle is semiregular (one cycle of length 3), so it certifies a
    // quasicyclic structure: in reordered coordinates the code is closed
    // under the shift by ell = n²/3.
    let sigma = parse_cycles("(1 2 3)", 3)?;
    println!("\nσ = {} (parsed back from its cycle form)", format_cycles(&sigma));
    let report = quasicyclic_report(&code, &sigma, ActionSide::Rows)?;
    println!(
        "quasicyclic: ell = {}, cycle length = {}, acting on {:?}",
        report.ell, report.cycle_len, report.side
    );
    println!("coordinate reordering: {:?}", report.reordering);

    // The product action B ↦ P_σ⁻¹ B P_τ maps codewords to codewords
    // whenever both permutations commute with A.
    let tau = parse_cycles("(2 3)", 3)?;
    let invariant = product_action_invariance(&code, &sigma, &tau)?;
    println!("\nproduct action by (σ, τ = (2 3)) preserves the code: {invariant}");
    let moved = apply_product_action(&code.basis()[0], &sigma, &tau);
    println!(
        "image of the first basis codeword under (σ, τ) is a codeword: {}",
        code.contains(&moved)?
    );

    // J is symmetric, so the code is closed under transposition as well.
    println!(
        "closed under B ↦ Bᵗ: {}",
        transposition_invariance(&code)?
    );

    // Most matrices admit no symmetry beyond the identity.
    let lopsided =
        twistcode::matrix::Mat::from_rows(&f, &[vec![1, 2, 0], vec![0, 3, 1], vec![0, 0, 4]])?;
    let only = commuting_permutations(&lopsided, 8)?;
    println!(
        "\na generic triangular matrix commutes with {} permutation(s): {}",
        only.len(),
        format_cycles(&only[0])
    );
    Ok(())
}
