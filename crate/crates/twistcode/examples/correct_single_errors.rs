//! Encode a message into a twisted centralizer codeword, corrupt it, and
//! decode it back — first with the syndrome-table single-error decoder, then
//! with the full coset-leader decoder for a two-symbol error.
//!
//! ```bash
//! cargo run --example correct_single_errors
//! ```

use twistcode::code::{code_build, SingleErrorOutcome, DEFAULT_DISTANCE_BUDGET};
use twistcode::families::all_ones;
use twistcode::field::Field;
use twistcode::matrix::VecN;

fn main() -> Result<(), Box<dyn std::error::Error>> {
    // C(J,2) over GF(5) with n = 3 is a [9, 4, 4] code: it corrects any
    // single symbol error.
    let f = Field::prime(5)?;
    let code = code_build(&all_ones(&f, 3), f.elt(2)?)?;
    let params = code.min_distance(DEFAULT_DISTANCE_BUDGET);
    println!("[{}, {}, {}] code", params.length, params.k, params.d);

    let message = VecN::from_codes(&f, &[1, 2, 0, 3])?;
    let word = code.encode(&message)?;
    println!("codeword for message {:?}:", message.codes());
    for row in word.row_codes() {
        println!("  {row:?}");
    }

    // Flip one entry.
    let mut received = word.clone();
    received.set(1, 2, f.add(received.get(1, 2), f.elt(3)?));

    let decoder = match code.single_error_decoder() {
        SingleErrorOutcome::Decoder(d) => d,
        SingleErrorOutcome::Refusal(r) => panic!("decoder refused: collision at {}", r.first),
    };
    let (decoded, pattern) = decoder.decode(&received)?;
    println!("single-error decoder removed: {}", pattern.expect("one error"));
    println!("decoded == sent: {}", decoded == word);
    println!("message recovered: {:?}", code.decode_to_message(&decoded)?.codes());
    println!();

    // Two errors exceed the single-error radius; the coset-leader table
    // (5⁵ = 3125 syndromes here) still finds a nearest codeword.
    let mut two_errors = word.clone();
    two_errors.set(0, 0, f.add(two_errors.get(0, 0), f.elt(1)?));
    two_errors.set(2, 1, f.add(two_errors.get(2, 1), f.elt(4)?));
    match decoder.decode(&two_errors) {
        Err(e) => println!("single-error decoder on a two-error word: {e}"),
        Ok(_) => unreachable!("distance 4 cannot absorb two errors silently"),
    }
    let coset = code.coset_decoder()?;
    let (decoded, leader) = coset.decode(&two_errors)?;
    println!(
        "coset decoder: leader weight {}, decoded == sent: {}",
        leader.hamming_weight(),
        decoded == word
    );
    Ok(())
}
