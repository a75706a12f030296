//! Computational laboratory for twisted centralizer codes.
//!
//! For a fixed square matrix `A` over a finite field and a scalar `a`, the
//! matrices `B` satisfying `AB = aBA` form a linear code of length n² once
//! flattened column-by-column.  This crate builds those codes, measures
//! them (dimension, minimum distance, weight distribution), bounds them
//! spectrally, decodes them, hunts for extremal examples by exhaustive
//! census, and exposes their permutation symmetries.
//!
//! The `examples/` directory is the guided tour; each one runs standalone:
//!
//! - `cargo run --example analyze_a_code` — build a code from an explicit
//!   matrix, inspect its basis, syndromes, and bound report.
//! - `cargo run --example spectral_bounds` — bracket the dimension by
//!   eigenvalue analysis, certify zero codes without building H.
//! - `cargo run --example correct_single_errors` — encode a message,
//!   corrupt it, and decode with the single-error and coset decoders.
//! - `cargo run --example hadamard_isodual` — Hadamard matrices give
//!   half-dimension codes; lift a low-weight codeword through a Kronecker
//!   product.
//! - `cargo run --example extremal_full_weight` — codes meeting the
//!   dimension-one/full-distance extreme, and the characteristics where a
//!   circulant family degenerates.
//! - `cargo run --example census_f3` — exhaustively classify all 2×2
//!   matrices over GF(3) by their code parameters, with witnesses.
//! - `cargo run --example code_symmetries` — commuting permutations,
//!   quasicyclic structure, and transposition invariance.

pub mod bounds;
pub mod census;
pub mod cli;
pub mod code;
pub mod error;
pub mod families;
pub mod field;
pub mod formats;
pub mod matrix;
pub mod symmetry;

pub use census::{run_census, verify_named_examples, verify_theorem_suite, CensusReport};
pub use code::{code_build, CodeParams, DistanceStatus, TwistedCode};
pub use error::{Error, Result};
pub use families::{bad_prime_scan, BadPrimeReport};
pub use field::{ext_field, field_make, field_of_order, Elt, Field};
pub use field::poly::{factor, root_multiplicity, Factorization, Poly};
pub use matrix::{Mat, Rref, VecN};
