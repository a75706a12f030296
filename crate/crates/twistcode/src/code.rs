//! The twisted centralizer code C(A,a) = {B : AB = aBA}, viewed as a linear
//! code of length n² under column-major vectorization, with parameter
//! computation, encoding, and syndrome decoding.

use std::collections::{BTreeMap, HashMap};
use std::sync::OnceLock;

use serde::Serialize;

use crate::error::{Error, Result};
use crate::field::{Elt, Field};
use crate::matrix::{kernel_from_rref, Mat, VecN};

/// Default cap on the number of scalar classes enumerated for an exact
/// minimum distance.
pub const DEFAULT_DISTANCE_BUDGET: u64 = 1 << 24;

/// When a code is over budget, the reported upper bound is the lowest
/// weight among the basis matrices and this many leading scalar classes.
const BOUNDS_ONLY_PREFIX: u64 = 1 << 12;

/// Hard cap on general coset-leader tables (entries = q^{n²−k}).
pub const COSET_TABLE_CAP: u64 = 1 << 16;

/// Safety cap on error patterns examined while filling a coset table.
const COSET_PATTERN_CAP: u64 = 1 << 24;

/// q^k saturating at u128::MAX, for budget comparisons.
pub(crate) fn sat_pow(q: u64, k: usize) -> u128 {
    let mut acc: u128 = 1;
    for _ in 0..k {
        match acc.checked_mul(q as u128) {
            Some(v) => acc = v,
            None => return u128::MAX,
        }
    }
    acc
}

/// Number of scalar classes of nonzero messages: (q^k − 1)/(q − 1).
pub(crate) fn projective_classes(q: u64, k: usize) -> u128 {
    let qk = sat_pow(q, k);
    if qk == u128::MAX {
        u128::MAX // saturated; exact value no longer representable but surely huge
    } else {
        (qk - 1) / (q as u128 - 1)
    }
}

/// Whether a reported minimum distance is exact or only an upper bound
/// (with trivial lower bound 1) because enumeration exceeded its budget.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize)]
#[serde(rename_all = "kebab-case")]
pub enum DistanceStatus {
    Exact,
    BoundsOnly,
}

/// The [N, k, d] parameter triple, N = n².
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub struct CodeParams {
    pub length: usize,
    pub k: usize,
    pub d: usize,
    pub status: DistanceStatus,
}

/// A weight-1 error `value·E_{row,col}` (row/col are 1-based, matching the
/// usual E_ij subscripts).
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub struct ErrorPattern {
    pub value: Elt,
    pub row: usize,
    pub col: usize,
}

impl ErrorPattern {
    pub fn to_mat(&self, field: &Field, n: usize) -> Mat {
        let mut m = Mat::zero(field, n, n);
        m.set(self.row - 1, self.col - 1, self.value);
        m
    }
}

impl std::fmt::Display for ErrorPattern {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        write!(f, "{}·E_{{{},{}}}", self.value.0, self.row, self.col)
    }
}

/// Why single-error decoding is unavailable: either a weight-1 matrix is
/// itself a codeword (`second` is None) or two distinct weight-1 errors
/// share a syndrome.
#[derive(Clone, Debug)]
pub struct SyndromeCollision {
    pub first: ErrorPattern,
    pub second: Option<ErrorPattern>,
}

/// Outcome of asking for a single-error decoder; refusal is a value, not an
/// error.
pub enum SingleErrorOutcome {
    Decoder(SingleErrorDecoder),
    Refusal(SyndromeCollision),
}

/// Lookup decoder correcting any single symbol error.
pub struct SingleErrorDecoder {
    a_mat: Mat,
    a: Elt,
    table: HashMap<Vec<u64>, ErrorPattern>,
}

impl SingleErrorDecoder {
    /// Decode a received matrix, returning the nearest codeword and the
    /// error pattern removed (None if the input was already a codeword).
    pub fn decode(&self, received: &Mat) -> Result<(Mat, Option<ErrorPattern>)> {
        let s = syndrome_of(&self.a_mat, self.a, received)?;
        if s.is_zero() {
            return Ok((received.clone(), None));
        }
        match self.table.get(&s.codes()) {
            Some(&pat) => {
                let e = pat.to_mat(received.field(), received.rows());
                Ok((received.sub(&e)?, Some(pat)))
            }
            None => Err(Error::BeyondSingleError),
        }
    }
}

/// Full coset-leader decoder (minimum-weight error of any shape).
pub struct CosetDecoder {
    a_mat: Mat,
    a: Elt,
    table: HashMap<Vec<u64>, Mat>,
}

impl CosetDecoder {
    pub fn table_len(&self) -> usize {
        self.table.len()
    }

    /// Decode to the nearest codeword; the removed error is a coset leader.
    pub fn decode(&self, received: &Mat) -> Result<(Mat, Mat)> {
        let s = syndrome_of(&self.a_mat, self.a, received)?;
        let leader = self.table.get(&s.codes()).expect("coset table is complete");
        Ok((received.sub(leader)?, leader.clone()))
    }
}

fn syndrome_of(a_mat: &Mat, a: Elt, b: &Mat) -> Result<Mat> {
    let ab = a_mat.mul(b)?;
    let ba = b.mul(a_mat)?;
    ab.sub(&ba.scalar_mul(a))
}

/// Lowest Hamming weight over the span of `gens`, one representative per
/// scalar class (first nonzero coefficient normalized to 1), visiting at
/// most `max_classes` classes.  Returns the weight and the first vector
/// attaining it; (usize::MAX, None) for an empty span.
pub(crate) fn min_weight_of_span(
    field: &Field,
    gens: &[VecN],
    max_classes: u128,
) -> (usize, Option<VecN>) {
    let q = field.order();
    let k = gens.len();
    let mut best_w = usize::MAX;
    let mut best: Option<VecN> = None;
    let mut scanned: u128 = 0;
    'outer: for p in 0..k {
        // coefficient block: c_p = 1, coefficients p+1..k free
        let mut c = gens[p].clone();
        let mut counters = vec![0u64; k];
        loop {
            let w = c.hamming_weight();
            if w < best_w {
                best_w = w;
                best = Some(c.clone());
                if w == 1 {
                    break 'outer;
                }
            }
            scanned += 1;
            if scanned >= max_classes {
                break 'outer;
            }
            // odometer step: each digit bump adds one generator row; a wrap
            // has added it q times, a net zero in characteristic p
            let mut advanced = false;
            for d in (p + 1..k).rev() {
                counters[d] += 1;
                c = c.add(&gens[d]).expect("same field");
                if counters[d] == q {
                    counters[d] = 0;
                    continue;
                }
                advanced = true;
                break;
            }
            if !advanced {
                break;
            }
        }
    }
    (best_w, best)
}

/// The code C(A,a) with its parity-check machinery.
///
/// Coordinates are indexed column-major: coordinate j·n + i of a codeword
/// is entry (i,j) of the matrix.
pub struct TwistedCode {
    field: Field,
    n: usize,
    a: Elt,
    a_mat: Mat,
    h: Mat,
    h_rank: usize,
    basis: Vec<Mat>,
    gen: Vec<VecN>,
    free_coords: Vec<usize>,
    distance: OnceLock<(usize, Option<Mat>)>,
}

/// Build C(A,a): assemble the parity check H = I⊗A − a·(Aᵗ⊗I), row-reduce
/// once, and keep the canonical kernel basis as the code basis A_1..A_k.
pub fn code_build(a_mat: &Mat, a: Elt) -> Result<TwistedCode> {
    if !a_mat.is_square() {
        return Err(Error::ShapeMismatch(format!(
            "code from a {}x{} matrix",
            a_mat.rows(),
            a_mat.cols()
        )));
    }
    let field = a_mat.field().clone();
    field.elt(a.0)?; // validate the twist against this field
    let n = a_mat.rows();
    let id = Mat::identity(&field, n);
    let h = id.kron(a_mat)?.sub(&a_mat.transpose().kron(&id)?.scalar_mul(a))?;
    let rref = h.rref();
    let h_rank = rref.rank;
    let gen = kernel_from_rref(&rref);
    let basis: Vec<Mat> = gen.iter().map(|v| Mat::unvec(v, n)).collect::<Result<_>>()?;
    let mut is_pivot = vec![false; n * n];
    for &p in &rref.pivots {
        is_pivot[p] = true;
    }
    let free_coords: Vec<usize> = (0..n * n).filter(|&c| !is_pivot[c]).collect();
    Ok(TwistedCode {
        field,
        n,
        a,
        a_mat: a_mat.clone(),
        h,
        h_rank,
        basis,
        gen,
        free_coords,
        distance: OnceLock::new(),
    })
}

impl TwistedCode {
    pub fn field(&self) -> &Field {
        &self.field
    }

    pub fn n(&self) -> usize {
        self.n
    }

    /// Code length N = n².
    pub fn length(&self) -> usize {
        self.n * self.n
    }

    pub fn a(&self) -> Elt {
        self.a
    }

    pub fn a_mat(&self) -> &Mat {
        &self.a_mat
    }

    /// The n²×n² parity-check matrix.
    pub fn parity_check(&self) -> &Mat {
        &self.h
    }

    pub fn h_rank(&self) -> usize {
        self.h_rank
    }

    /// Dimension k = n² − rank(H).
    pub fn dim(&self) -> usize {
        self.basis.len()
    }

    /// The basis matrices A_1..A_k.
    pub fn basis(&self) -> &[Mat] {
        &self.basis
    }

    /// Synd(B) = AB − aBA; zero exactly on codewords.
    pub fn syndrome(&self, b: &Mat) -> Result<Mat> {
        self.check_member_shape(b)?;
        syndrome_of(&self.a_mat, self.a, b)
    }

    pub fn contains(&self, b: &Mat) -> Result<bool> {
        Ok(self.syndrome(b)?.is_zero())
    }

    fn check_member_shape(&self, b: &Mat) -> Result<()> {
        if b.field() != &self.field {
            return Err(Error::FieldMismatch);
        }
        if b.rows() != self.n || b.cols() != self.n {
            return Err(Error::ShapeMismatch(format!(
                "{}x{} matrix against a degree-{} code",
                b.rows(),
                b.cols(),
                self.n
            )));
        }
        Ok(())
    }

    /// m ↦ m₁A₁ + … + m_kA_k.
    pub fn encode(&self, message: &VecN) -> Result<Mat> {
        if message.field() != &self.field {
            return Err(Error::FieldMismatch);
        }
        if message.len() != self.dim() {
            return Err(Error::MessageLength { expected: self.dim(), got: message.len() });
        }
        let f = &self.field;
        let mut acc = VecN::zero(f, self.length());
        for (i, g) in self.gen.iter().enumerate() {
            let c = message.get(i);
            if !c.is_zero() {
                acc = acc.add(&g.scalar_mul(c))?;
            }
        }
        Mat::unvec(&acc, self.n)
    }

    /// Recover the coordinates of a codeword in the basis A_1..A_k.  The
    /// canonical kernel basis has vec(A_i) equal to 1 at the i-th free
    /// coordinate of H and 0 at the others, so the message can be read off
    /// directly once membership is confirmed.
    pub fn decode_to_message(&self, b: &Mat) -> Result<VecN> {
        let s = self.syndrome(b)?;
        if !s.is_zero() {
            return Err(Error::NotACodeword { syndrome: Box::new(s) });
        }
        let v = b.vec();
        let coords: Vec<Elt> = self.free_coords.iter().map(|&c| v.get(c)).collect();
        Ok(VecN::from_elts(&self.field, coords))
    }

    /// Minimum distance under the given enumeration budget (in scalar
    /// classes).  Exact when (q^k − 1)/(q − 1) ≤ budget; otherwise
    /// bounds-only with d the lowest weight seen.  The zero code has d = n²
    /// by convention.
    pub fn min_distance(&self, budget: u64) -> CodeParams {
        self.min_distance_with_witness(budget).0
    }

    /// Like [`Self::min_distance`], also returning a codeword attaining the
    /// reported weight (None for the zero code).
    pub fn min_distance_with_witness(&self, budget: u64) -> (CodeParams, Option<Mat>) {
        let k = self.dim();
        let length = self.length();
        if k == 0 {
            let params =
                CodeParams { length, k, d: length, status: DistanceStatus::Exact };
            return (params, None);
        }
        if let Some((d, witness)) = self.distance.get() {
            let params = CodeParams { length, k, d: *d, status: DistanceStatus::Exact };
            return (params, witness.clone());
        }
        let q = self.field.order();
        let classes = projective_classes(q, k);
        if classes <= budget as u128 {
            let (d, witness) = self.scan_classes(u128::MAX);
            let witness = witness.map(|w| Mat::unvec(&w, self.n).expect("square"));
            let (d, witness) =
                self.distance.get_or_init(|| (d, witness)).clone();
            let params = CodeParams { length, k, d, status: DistanceStatus::Exact };
            (params, witness)
        } else {
            // Over budget: lowest weight among the basis matrices and a
            // short prefix of the enumeration.
            let (mut d, mut witness) = self.scan_classes(BOUNDS_ONLY_PREFIX.min(budget) as u128);
            for b in &self.basis {
                let w = b.hamming_weight();
                if w < d {
                    d = w;
                    witness = Some(b.vec());
                }
            }
            let witness = witness.map(|w| Mat::unvec(&w, self.n).expect("square"));
            if d == 1 {
                // a weight-1 codeword settles the distance exactly
                let (d, witness) = self.distance.get_or_init(|| (d, witness)).clone();
                let params = CodeParams { length, k, d, status: DistanceStatus::Exact };
                return (params, witness);
            }
            let params = CodeParams { length, k, d, status: DistanceStatus::BoundsOnly };
            (params, witness)
        }
    }

    /// Enumerate scalar classes of nonzero codewords (first nonzero message
    /// coordinate normalized to 1), returning the lowest weight seen within
    /// `max_classes` and the first codeword attaining it.
    fn scan_classes(&self, max_classes: u128) -> (usize, Option<VecN>) {
        min_weight_of_span(&self.field, &self.gen, max_classes)
    }

    /// Full weight enumerator over all q^k codewords.
    pub fn weight_distribution(&self, budget: u64) -> Result<BTreeMap<usize, u64>> {
        let q = self.field.order();
        let k = self.dim();
        let total = sat_pow(q, k);
        if total > budget as u128 {
            return Err(Error::BudgetExceeded { needed: total, budget: budget as u128 });
        }
        let mut counts: BTreeMap<usize, u64> = BTreeMap::new();
        let mut c = VecN::zero(&self.field, self.length());
        let mut counters = vec![0u64; k];
        loop {
            *counts.entry(c.hamming_weight()).or_insert(0) += 1;
            let mut advanced = false;
            for d in (0..k).rev() {
                counters[d] += 1;
                c = c.add(&self.gen[d]).expect("same field");
                if counters[d] == q {
                    counters[d] = 0;
                    continue;
                }
                advanced = true;
                break;
            }
            if !advanced {
                break;
            }
        }
        Ok(counts)
    }

    /// Precompute syndromes of all (q−1)·n² weight-1 matrices.  If any is
    /// zero or two coincide, single-error decoding is impossible and the
    /// offending pair is reported; otherwise a lookup decoder is returned.
    pub fn single_error_decoder(&self) -> SingleErrorOutcome {
        let f = &self.field;
        let n = self.n;
        let mut table: HashMap<Vec<u64>, ErrorPattern> = HashMap::new();
        for row in 1..=n {
            for col in 1..=n {
                for code in 1..f.order() {
                    let value = Elt(code);
                    let pat = ErrorPattern { value, row, col };
                    let e = pat.to_mat(f, n);
                    let s = syndrome_of(&self.a_mat, self.a, &e).expect("shapes agree");
                    if s.is_zero() {
                        return SingleErrorOutcome::Refusal(SyndromeCollision {
                            first: pat,
                            second: None,
                        });
                    }
                    if let Some(prev) = table.insert(s.codes(), pat) {
                        return SingleErrorOutcome::Refusal(SyndromeCollision {
                            first: prev,
                            second: Some(pat),
                        });
                    }
                }
            }
        }
        SingleErrorOutcome::Decoder(SingleErrorDecoder {
            a_mat: self.a_mat.clone(),
            a: self.a,
            table,
        })
    }

    /// General syndrome decoder: a coset-leader table of q^{n²−k} entries,
    /// filled in weight order so every leader has minimum weight in its
    /// coset.  Refused (as a budget error) beyond [`COSET_TABLE_CAP`].
    pub fn coset_decoder(&self) -> Result<CosetDecoder> {
        let q = self.field.order();
        let n = self.n;
        let nn = self.length();
        let cosets = sat_pow(q, nn - self.dim());
        if cosets > COSET_TABLE_CAP as u128 {
            return Err(Error::BudgetExceeded {
                needed: cosets,
                budget: COSET_TABLE_CAP as u128,
            });
        }
        let cosets = cosets as usize;
        let f = &self.field;
        let mut table: HashMap<Vec<u64>, Mat> = HashMap::with_capacity(cosets);
        table.insert(Mat::zero(f, n, n).codes(), Mat::zero(f, n, n));
        let nonzero: Vec<Elt> = (1..q).map(Elt).collect();
        let mut examined: u64 = 0;
        for weight in 1..=nn {
            if table.len() == cosets {
                break;
            }
            // all position subsets of this size, positions in coordinate order
            let mut positions: Vec<usize> = (0..weight).collect();
            loop {
                // all nonzero value assignments via odometer
                let mut values = vec![0usize; weight];
                loop {
                    examined += 1;
                    if examined > COSET_PATTERN_CAP {
                        return Err(Error::BudgetExceeded {
                            needed: examined as u128,
                            budget: COSET_PATTERN_CAP as u128,
                        });
                    }
                    let mut e = Mat::zero(f, n, n);
                    for (slot, &coord) in positions.iter().enumerate() {
                        // coordinate c is entry (c mod n, c div n), column-major
                        e.set(coord % n, coord / n, nonzero[values[slot]]);
                    }
                    let s = syndrome_of(&self.a_mat, self.a, &e).expect("shapes agree");
                    table.entry(s.codes()).or_insert(e);
                    if table.len() == cosets {
                        break;
                    }
                    // next value assignment
                    let mut slot = 0;
                    loop {
                        if slot == weight {
                            break;
                        }
                        values[slot] += 1;
                        if values[slot] == nonzero.len() {
                            values[slot] = 0;
                            slot += 1;
                        } else {
                            break;
                        }
                    }
                    if slot == weight {
                        break;
                    }
                }
                if table.len() == cosets {
                    break;
                }
                // next position subset (lexicographic successor)
                let mut i = weight;
                while i > 0 {
                    i -= 1;
                    if positions[i] != i + nn - weight {
                        positions[i] += 1;
                        for j in i + 1..weight {
                            positions[j] = positions[j - 1] + 1;
                        }
                        break;
                    }
                    if i == 0 {
                        positions.clear();
                    }
                }
                if positions.is_empty() {
                    break;
                }
            }
        }
        debug_assert_eq!(table.len(), cosets);
        Ok(CosetDecoder { a_mat: self.a_mat.clone(), a: self.a, table })
    }
}
