//! Command-line entry point: analyze / construct / census / symmetry /
//! encode / decode / verify / badprimes.
//!
//! Conventions shared by every subcommand:
//! * matrix files are the plain text or JSON formats of [`crate::formats`];
//! * `--a` takes a field element code when nonnegative and an integer
//!   image when negative (`--a -1` means the field's −1);
//! * JSON payloads have a fixed key order (struct order), so identical
//!   invocations are byte-identical;
//! * the env var `TWISTCODE_BUDGET` overrides the distance enumeration
//!   budget;
//! * exit codes: 0 success, 1 domain error, 2 usage/malformed input.

use std::path::PathBuf;
use std::process::ExitCode;

use clap::{Args, Parser, Subcommand, ValueEnum};
use serde::Serialize;

use crate::bounds::{bounds_report, BoundsReport};
use crate::census::{
    census_to_csv, run_census, verify_named_examples, verify_theorem_suite,
    CensusOptions, NamedCheck,
};
use crate::code::{code_build, DistanceStatus, SingleErrorOutcome, DEFAULT_DISTANCE_BUDGET};
use crate::error::{Error, Result};
use crate::families::{
    all_ones, an_matrix, bad_prime_scan, bn_matrix, cycle_perm, ones_plus_id, sylvester,
    unit,
};
use crate::field::{field_of_order, Elt, Field};
use crate::formats::{
    parse_message_text, read_matrix_file, write_matrix_text, write_message_text,
};
use crate::matrix::Mat;
use crate::symmetry::{
    commuting_permutations, parse_cycles, quasicyclic_report, transposition_invariance,
    ActionSide,
};

#[derive(Parser)]
#[command(
    name = "twistcode",
    version,
    about = "Twisted centralizer codes: construction, analysis, decoding, censuses"
)]
struct Cli {
    #[command(subcommand)]
    command: Command,
}

#[derive(Subcommand)]
enum Command {
    /// Build C(A,a) and report parameters, rank data, and dimension bounds as JSON
    Analyze(AnalyzeArgs),
    /// Write a named family matrix as a matrix file
    Construct(ConstructArgs),
    /// Scan every matrix of a space and tally (dimension, distance) pairs
    Census(CensusArgs),
    /// Permutation symmetries of a code: commuting scan, quasicyclic witness, transposes
    Symmetry(SymmetryArgs),
    /// Encode a message file into a codeword matrix
    Encode(EncodeArgs),
    /// Correct a received matrix (single-error or coset-leader decoding)
    Decode(DecodeArgs),
    /// Run the named-example table and the cross-module property suite
    Verify(VerifyArgs),
    /// Scan characteristics where the full-weight construction degenerates
    Badprimes(BadPrimesArgs),
}

#[derive(Clone, Copy, ValueEnum)]
enum FamilyName {
    /// All-ones matrix
    #[value(name = "J", alias = "j")]
    AllOnes,
    /// Single-entry matrix (needs --i, --j)
    #[value(name = "E", alias = "e")]
    Unit,
    /// All-ones plus identity
    #[value(name = "JI", alias = "ji")]
    OnesPlusId,
    /// Sylvester matrix of order n (n a power of two)
    #[value(name = "H", alias = "h")]
    Sylvester,
    /// Sparse full-weight-partner matrix
    #[value(name = "An", alias = "an")]
    An,
    /// Full-weight partner of An
    #[value(name = "Bn", alias = "bn")]
    Bn,
    /// Cyclic shift permutation matrix
    #[value(name = "cycle")]
    Cycle,
}

/// Where the matrix A comes from: a file, or a family recipe.
#[derive(Args)]
struct MatrixSource {
    /// Matrix file (text or JSON)
    #[arg(long, value_name = "FILE", required_unless_present = "family", conflicts_with = "family")]
    input: Option<PathBuf>,
    /// Named family instead of a file
    #[arg(long, value_enum)]
    family: Option<FamilyName>,
    /// Field order (required with --family; cross-checked against --input)
    #[arg(long)]
    q: Option<u64>,
    /// Matrix size for --family
    #[arg(long)]
    n: Option<usize>,
    /// Row index for --family E (1-based)
    #[arg(long)]
    i: Option<usize>,
    /// Column index for --family E (1-based)
    #[arg(long)]
    j: Option<usize>,
}

impl MatrixSource {
    fn load(&self) -> Result<Mat> {
        let m = match (&self.input, self.family) {
            (Some(path), None) => read_matrix_file(path)?,
            (None, Some(family)) => {
                let q = self.q.ok_or_else(|| {
                    Error::Precondition("--family needs --q".into())
                })?;
                let n = self.n.ok_or_else(|| {
                    Error::Precondition("--family needs --n".into())
                })?;
                let field = field_of_order(q)?;
                build_family(&field, family, n, self.i, self.j)?
            }
            _ => unreachable!("clap enforces exactly one source"),
        };
        if let Some(q) = self.q {
            if m.field().order() != q {
                return Err(Error::Precondition(format!(
                    "--q {q} does not match the file's field of order {}",
                    m.field().order()
                )));
            }
        }
        Ok(m)
    }
}

fn build_family(
    field: &Field,
    family: FamilyName,
    n: usize,
    i: Option<usize>,
    j: Option<usize>,
) -> Result<Mat> {
    match family {
        FamilyName::AllOnes => Ok(all_ones(field, n)),
        FamilyName::OnesPlusId => Ok(ones_plus_id(field, n)),
        FamilyName::Unit => {
            let i = i.ok_or_else(|| Error::Precondition("--family E needs --i".into()))?;
            let j = j.ok_or_else(|| Error::Precondition("--family E needs --j".into()))?;
            unit(field, i, j, n)
        }
        FamilyName::Sylvester => {
            if n < 2 || !n.is_power_of_two() {
                return Err(Error::Precondition(format!(
                    "--family H needs --n a power of two >= 2, got {n}"
                )));
            }
            sylvester(field, n.trailing_zeros())
        }
        FamilyName::An => an_matrix(field, n),
        FamilyName::Bn => bn_matrix(field, n),
        FamilyName::Cycle => Ok(cycle_perm(field, n)),
    }
}

/// `--a` convention: nonnegative values are element codes, negative values
/// go through the integer image (so `-1` works in every characteristic).
fn twist(field: &Field, a: i64) -> Result<Elt> {
    if a < 0 {
        Ok(field.from_int(a))
    } else {
        field.elt(a as u64)
    }
}

/// Distance enumeration budget, overridable via TWISTCODE_BUDGET.
fn distance_budget() -> Result<u64> {
    match std::env::var("TWISTCODE_BUDGET") {
        Err(_) => Ok(DEFAULT_DISTANCE_BUDGET),
        Ok(raw) => raw.parse().map_err(|_| {
            Error::BadEnv { var: "TWISTCODE_BUDGET".into(), value: raw }
        }),
    }
}

fn emit(out: &Option<PathBuf>, payload: &str) -> Result<()> {
    match out {
        Some(path) => std::fs::write(path, payload)?,
        None => print!("{payload}"),
    }
    Ok(())
}

fn to_json_line<T: Serialize>(value: &T) -> Result<String> {
    Ok(serde_json::to_string_pretty(value)? + "\n")
}

#[derive(Args)]
struct AnalyzeArgs {
    #[command(flatten)]
    src: MatrixSource,
    /// Twist element (negative = integer image)
    #[arg(long, allow_negative_numbers = true)]
    a: i64,
    /// Include the basis matrices in the JSON
    #[arg(long)]
    basis: bool,
    /// Write the JSON here instead of stdout
    #[arg(long, value_name = "FILE")]
    out: Option<PathBuf>,
}

#[derive(Serialize)]
struct AnalyzeOut {
    q: u64,
    n: usize,
    a: u64,
    dim: usize,
    d: usize,
    d_status: DistanceStatus,
    #[serde(skip_serializing_if = "Option::is_none")]
    basis: Option<Vec<Vec<Vec<u64>>>>,
    #[serde(rename = "H_rank")]
    h_rank: usize,
    bounds: BoundsReport,
}

fn cmd_analyze(args: &AnalyzeArgs) -> Result<()> {
    let a_mat = args.src.load()?;
    let field = a_mat.field().clone();
    let a = twist(&field, args.a)?;
    let code = code_build(&a_mat, a)?;
    let params = code.min_distance(distance_budget()?);
    let bounds = bounds_report(&a_mat, a)?;
    let out = AnalyzeOut {
        q: field.order(),
        n: code.n(),
        a: a.0,
        dim: params.k,
        d: params.d,
        d_status: params.status,
        basis: args
            .basis
            .then(|| code.basis().iter().map(|b| b.row_codes()).collect()),
        h_rank: code.h_rank(),
        bounds,
    };
    emit(&args.out, &to_json_line(&out)?)
}

#[derive(Args)]
struct ConstructArgs {
    /// Named family to build
    #[arg(long, value_enum)]
    family: FamilyName,
    /// Field order
    #[arg(long)]
    q: u64,
    /// Matrix size
    #[arg(long)]
    n: usize,
    /// Row index for --family E (1-based)
    #[arg(long)]
    i: Option<usize>,
    /// Column index for --family E (1-based)
    #[arg(long)]
    j: Option<usize>,
    /// Write the matrix file here instead of stdout
    #[arg(long, value_name = "FILE")]
    out: Option<PathBuf>,
}

fn cmd_construct(args: &ConstructArgs) -> Result<()> {
    let field = field_of_order(args.q)?;
    let m = build_family(&field, args.family, args.n, args.i, args.j)?;
    emit(&args.out, &write_matrix_text(&m))
}

#[derive(Args)]
struct CensusArgs {
    /// Field order
    #[arg(long)]
    q: u64,
    /// Matrix size
    #[arg(long)]
    n: usize,
    /// Twist element (negative = integer image)
    #[arg(long, allow_negative_numbers = true)]
    a: i64,
    /// Worker threads
    #[arg(long)]
    jobs: Option<usize>,
    /// Run even when q^(n^2) exceeds the census budget (hours-scale!)
    #[arg(long)]
    force: bool,
    /// Write the JSON report here instead of stdout
    #[arg(long, value_name = "FILE")]
    out: Option<PathBuf>,
    /// Also write a CSV mirror of the bucket table
    #[arg(long, value_name = "FILE")]
    csv: Option<PathBuf>,
}

fn cmd_census(args: &CensusArgs) -> Result<()> {
    let field = field_of_order(args.q)?;
    let a = twist(&field, args.a)?;
    let opts = CensusOptions {
        force: args.force,
        jobs: args.jobs,
        distance_budget: distance_budget()?,
        ..CensusOptions::default()
    };
    let report = run_census(&field, args.n, a, &opts)?;
    eprintln!(
        "census: scanned {} matrices in {} ms",
        report.meta.total, report.elapsed_ms
    );
    if let Some(path) = &args.csv {
        std::fs::write(path, census_to_csv(&report))?;
    }
    emit(&args.out, &to_json_line(&report)?)
}

#[derive(Clone, Copy, ValueEnum)]
enum SideArg {
    Rows,
    Cols,
}

#[derive(Args)]
struct SymmetryArgs {
    #[command(flatten)]
    src: MatrixSource,
    /// Twist element (negative = integer image)
    #[arg(long, allow_negative_numbers = true)]
    a: i64,
    /// Semiregular permutation in 1-based cycle notation, e.g. "(1 2)(3 4)"
    #[arg(long, value_name = "CYCLES")]
    sigma: Option<String>,
    /// Which side of B the permutation acts on
    #[arg(long, value_enum, default_value = "rows")]
    side: SideArg,
    /// Largest n for the brute-force commuting scan
    #[arg(long, default_value_t = 8)]
    cap: usize,
    /// Write the JSON here instead of stdout
    #[arg(long, value_name = "FILE")]
    out: Option<PathBuf>,
}

#[derive(Serialize)]
struct QuasicyclicOut {
    ell: usize,
    reordering: Vec<usize>,
}

#[derive(Serialize)]
struct SymmetryOut {
    commuting_count: usize,
    #[serde(skip_serializing_if = "Option::is_none")]
    quasicyclic: Option<QuasicyclicOut>,
    transpose_invariant: bool,
}

fn cmd_symmetry(args: &SymmetryArgs) -> Result<()> {
    let a_mat = args.src.load()?;
    let field = a_mat.field().clone();
    let a = twist(&field, args.a)?;
    let code = code_build(&a_mat, a)?;
    let commuting = commuting_permutations(&a_mat, args.cap)?;
    let quasicyclic = match &args.sigma {
        None => None,
        Some(cycles) => {
            let sigma = parse_cycles(cycles, code.n())?;
            let side = match args.side {
                SideArg::Rows => ActionSide::Rows,
                SideArg::Cols => ActionSide::Cols,
            };
            let report = quasicyclic_report(&code, &sigma, side)?;
            Some(QuasicyclicOut { ell: report.ell, reordering: report.reordering })
        }
    };
    let out = SymmetryOut {
        commuting_count: commuting.len(),
        quasicyclic,
        transpose_invariant: transposition_invariance(&code)?,
    };
    emit(&args.out, &to_json_line(&out)?)
}

#[derive(Args)]
struct EncodeArgs {
    #[command(flatten)]
    src: MatrixSource,
    /// Twist element (negative = integer image)
    #[arg(long, allow_negative_numbers = true)]
    a: i64,
    /// Message file (text: `q 1 k` header plus one row)
    #[arg(long, value_name = "FILE")]
    message: PathBuf,
    /// Write the codeword matrix here instead of stdout
    #[arg(long, value_name = "FILE")]
    out: Option<PathBuf>,
}

fn cmd_encode(args: &EncodeArgs) -> Result<()> {
    let a_mat = args.src.load()?;
    let field = a_mat.field().clone();
    let a = twist(&field, args.a)?;
    let code = code_build(&a_mat, a)?;
    let raw = std::fs::read_to_string(&args.message)?;
    let message = parse_message_text(&raw)?;
    let word = code.encode(&message)?;
    emit(&args.out, &write_matrix_text(&word))
}

#[derive(Args)]
struct DecodeArgs {
    #[command(flatten)]
    src: MatrixSource,
    /// Twist element (negative = integer image)
    #[arg(long, allow_negative_numbers = true)]
    a: i64,
    /// Received matrix file
    #[arg(long, value_name = "FILE")]
    received: PathBuf,
    /// Use the coset-leader table instead of the single-error decoder
    #[arg(long)]
    coset: bool,
    /// Output the decoded message row instead of the corrected codeword
    #[arg(long)]
    emit_message: bool,
    /// Write the result here instead of stdout
    #[arg(long, value_name = "FILE")]
    out: Option<PathBuf>,
}

fn cmd_decode(args: &DecodeArgs) -> Result<()> {
    let a_mat = args.src.load()?;
    let field = a_mat.field().clone();
    let a = twist(&field, args.a)?;
    let code = code_build(&a_mat, a)?;
    let received = read_matrix_file(&args.received)?;
    let corrected = if args.coset {
        let decoder = code.coset_decoder()?;
        let (word, leader) = decoder.decode(&received)?;
        eprintln!("decode: coset leader of weight {}", leader.hamming_weight());
        word
    } else {
        match code.single_error_decoder() {
            SingleErrorOutcome::Decoder(decoder) => {
                let (word, pattern) = decoder.decode(&received)?;
                match pattern {
                    Some(p) => eprintln!("decode: corrected {p}"),
                    None => eprintln!("decode: received word was already a codeword"),
                }
                word
            }
            SingleErrorOutcome::Refusal(collision) => {
                return Err(Error::Precondition(format!(
                    "single-error decoding unavailable: {} {}",
                    collision.first,
                    match &collision.second {
                        Some(other) => format!("collides with {other}"),
                        None => "has zero syndrome".into(),
                    }
                )));
            }
        }
    };
    if args.emit_message {
        let message = code.decode_to_message(&corrected)?;
        emit(&args.out, &write_message_text(&message))
    } else {
        emit(&args.out, &write_matrix_text(&corrected))
    }
}

#[derive(Args)]
struct VerifyArgs {
    /// Sampling seed for the property suite
    #[arg(long, default_value_t = 0)]
    seed: u64,
    /// Trial count for the randomized checks
    #[arg(long, default_value_t = 1000)]
    trials: usize,
    /// Run only the named-example table
    #[arg(long, conflicts_with = "suite_only")]
    examples_only: bool,
    /// Run only the property suite
    #[arg(long)]
    suite_only: bool,
    /// Emit JSON instead of the text table
    #[arg(long)]
    json: bool,
    /// Write the output here instead of stdout
    #[arg(long, value_name = "FILE")]
    out: Option<PathBuf>,
}

#[derive(Serialize)]
struct VerifyOut {
    #[serde(skip_serializing_if = "Option::is_none")]
    named_examples: Option<Vec<NamedCheck>>,
    #[serde(skip_serializing_if = "Option::is_none")]
    suite: Option<crate::census::SuiteReport>,
}

fn render_rows(title: &str, rows: &[NamedCheck], text: &mut String) {
    text.push_str(title);
    text.push('\n');
    for row in rows {
        text.push_str(&format!(
            "  {} {:<55} expected {:<12} got {}\n",
            if row.pass { "PASS" } else { "FAIL" },
            row.name,
            row.expected,
            row.got
        ));
    }
}

fn cmd_verify(args: &VerifyArgs) -> Result<()> {
    let named = if args.suite_only { None } else { Some(verify_named_examples()?) };
    let suite = if args.examples_only {
        None
    } else {
        Some(verify_theorem_suite(args.seed, args.trials)?)
    };
    let mut failures = 0usize;
    if let Some(rows) = &named {
        failures += rows.iter().filter(|r| !r.pass).count();
    }
    if let Some(report) = &suite {
        failures += report.failed;
    }
    if args.json {
        let out = VerifyOut { named_examples: named, suite };
        emit(&args.out, &to_json_line(&out)?)?;
    } else {
        let mut text = String::new();
        if let Some(rows) = &named {
            render_rows("named examples:", rows, &mut text);
        }
        if let Some(report) = &suite {
            render_rows(
                &format!("property suite (seed {}, {} trials):", report.seed, report.trials),
                &report.checks,
                &mut text,
            );
        }
        text.push_str(&format!(
            "verify: {}\n",
            if failures == 0 { "all checks passed".into() } else { format!("{failures} FAILED") }
        ));
        emit(&args.out, &text)?;
    }
    if failures > 0 {
        return Err(Error::Precondition(format!("{failures} verification rows failed")));
    }
    Ok(())
}

#[derive(Args)]
struct BadPrimesArgs {
    /// Matrix size of the construction
    #[arg(long)]
    n: usize,
    /// Scan all primes up to this bound
    #[arg(long)]
    bound: u64,
    /// Worker threads
    #[arg(long)]
    jobs: Option<usize>,
    /// Write the JSON here instead of stdout
    #[arg(long, value_name = "FILE")]
    out: Option<PathBuf>,
}

fn cmd_badprimes(args: &BadPrimesArgs) -> Result<()> {
    let scan = || bad_prime_scan(args.n, args.bound);
    let report = match args.jobs {
        None => scan()?,
        Some(jobs) => rayon::ThreadPoolBuilder::new()
            .num_threads(jobs)
            .build()
            .map_err(|e| Error::Precondition(format!("thread pool: {e}")))?
            .install(scan)?,
    };
    emit(&args.out, &to_json_line(&report)?)
}

/// Parse argv, dispatch, and map errors onto exit codes.
pub fn run() -> ExitCode {
    let cli = Cli::parse();
    let result = match &cli.command {
        Command::Analyze(args) => cmd_analyze(args),
        Command::Construct(args) => cmd_construct(args),
        Command::Census(args) => cmd_census(args),
        Command::Symmetry(args) => cmd_symmetry(args),
        Command::Encode(args) => cmd_encode(args),
        Command::Decode(args) => cmd_decode(args),
        Command::Verify(args) => cmd_verify(args),
        Command::Badprimes(args) => cmd_badprimes(args),
    };
    match result {
        Ok(()) => ExitCode::SUCCESS,
        Err(e) => {
            eprintln!("error: {e}");
            ExitCode::from(e.exit_code() as u8)
        }
    }
}
