//! Deterministic constructors for the named matrix families, plus the
//! bad-characteristic scan for the A_n family.

use rayon::prelude::*;
use serde::Serialize;

use crate::error::{Error, Result};
use crate::field::{Elt, Field};
use crate::matrix::{Mat, VecN};

/// J_n: every entry 1.
pub fn all_ones(field: &Field, n: usize) -> Mat {
    Mat::from_codes(field, n, n, &vec![1; n * n]).expect("1 is a field element")
}

/// E_{i,j}: single 1 in the (i,j) position, 1-based.
pub fn unit(field: &Field, i: usize, j: usize, n: usize) -> Result<Mat> {
    if i < 1 || i > n || j < 1 || j > n {
        return Err(Error::IndexOutOfRange { i, j, n });
    }
    let mut m = Mat::zero(field, n, n);
    m.set(i - 1, j - 1, Elt::ONE);
    Ok(m)
}

/// J_n + I_n.
pub fn ones_plus_id(field: &Field, n: usize) -> Mat {
    let mut m = all_ones(field, n);
    for i in 0..n {
        m.set(i, i, field.add(m.get(i, i), Elt::ONE));
    }
    m
}

/// Sylvester–Hadamard H_{2^k}: the k-fold Kronecker power of [[1,1],[1,−1]].
/// Needs odd characteristic so that 1 and −1 differ.
pub fn sylvester(field: &Field, k: u32) -> Result<Mat> {
    if field.characteristic() == 2 {
        return Err(Error::CharacteristicTwo);
    }
    if k < 1 {
        return Err(Error::Precondition("sylvester order 2^k needs k ≥ 1".into()));
    }
    let h2 = Mat::from_rows(field, &[vec![1, 1], vec![1, field.neg(Elt::ONE).0]])?;
    let mut h = h2.clone();
    for _ in 1..k {
        h = h.kron(&h2)?;
    }
    Ok(h)
}

/// A_n = E_{n,1} − E_{n,n} + Σ_{i=1}^{n−1} (E_{i,i} − E_{i,i+1}):
/// 1 on the diagonal and −1 on the superdiagonal of the first n−1 rows;
/// last row 1 in column 1 and −1 in column n.
pub fn an_matrix(field: &Field, n: usize) -> Result<Mat> {
    if n < 2 {
        return Err(Error::Precondition("A_n needs n ≥ 2".into()));
    }
    let neg1 = field.neg(Elt::ONE);
    let mut m = Mat::zero(field, n, n);
    for i in 0..n - 1 {
        m.set(i, i, Elt::ONE);
        m.set(i, i + 1, neg1);
    }
    m.set(n - 1, 0, Elt::ONE);
    m.set(n - 1, n - 1, neg1);
    Ok(m)
}

/// B_n = J_n − 2·Σ_i E_{i,n}: all ones except the last column, which is −1.
pub fn bn_matrix(field: &Field, n: usize) -> Result<Mat> {
    if n < 2 {
        return Err(Error::Precondition("B_n needs n ≥ 2".into()));
    }
    let neg1 = field.neg(Elt::ONE);
    let mut m = all_ones(field, n);
    for i in 0..n {
        m.set(i, n - 1, neg1);
    }
    Ok(m)
}

/// Permutation matrix of the n-cycle (1 2 … n): maps e_j to e_{j+1 mod n}.
pub fn cycle_perm(field: &Field, n: usize) -> Mat {
    let mut m = Mat::zero(field, n, n);
    for j in 0..n {
        m.set((j + 1) % n, j, Elt::ONE);
    }
    m
}

/// Reinterpret an adjacency matrix (symmetric, zero-diagonal, entries 0/1)
/// over the target field.
pub fn from_graph(field: &Field, adjacency: &Mat) -> Result<Mat> {
    if !adjacency.is_square() {
        return Err(Error::BadAdjacency("adjacency matrix must be square".into()));
    }
    let n = adjacency.rows();
    for i in 0..n {
        for j in 0..n {
            let c = adjacency.get(i, j).0;
            if c > 1 {
                return Err(Error::BadAdjacency(format!(
                    "entry ({},{}) is {c}, not 0/1",
                    i + 1,
                    j + 1
                )));
            }
            if adjacency.get(i, j) != adjacency.get(j, i) {
                return Err(Error::BadAdjacency(format!(
                    "asymmetric at ({},{})",
                    i + 1,
                    j + 1
                )));
            }
        }
        if !adjacency.get(i, i).is_zero() {
            return Err(Error::BadAdjacency(format!("nonzero diagonal at {}", i + 1)));
        }
    }
    Mat::from_codes(field, n, n, &adjacency.codes())
}

/// Result of scanning characteristics for the A_n construction.  Primes
/// above `prime_bound` are unexamined.
#[derive(Clone, Debug, Serialize)]
pub struct BadPrimeReport {
    pub n: usize,
    pub prime_bound: u64,
    pub bad_primes: Vec<u64>,
}

fn primes_up_to(bound: u64) -> Vec<u64> {
    if bound < 2 {
        return Vec::new();
    }
    let bound = bound as usize;
    let mut sieve = vec![true; bound + 1];
    sieve[0] = false;
    sieve[1] = false;
    let mut p = 2;
    while p * p <= bound {
        if sieve[p] {
            let mut m = p * p;
            while m <= bound {
                sieve[m] = false;
                m += p;
            }
        }
        p += 1;
    }
    (2..=bound).filter(|&i| sieve[i]).map(|i| i as u64).collect()
}

/// The n×n reduction of the n²-dimensional membership system for
/// C(A_n,−1).  Writing a solution B column-wise as b_1..b_n, the sparse
/// columns of A_n turn AB + BA = 0 into
///   b_{j−1} = (A+I)·b_j  (2 ≤ j ≤ n−1),   b_{n−1} = (A−I)·b_n,
///   b_n = −(A+I)·b_1,
/// so b_n determines B and ranges over ker(I + (A+I)^{n−1}(A−I)).
fn an_membership_kernel(field: &Field, n: usize) -> Result<Mat> {
    let a = an_matrix(field, n)?;
    let id = Mat::identity(field, n);
    let a_plus = a.add(&id)?;
    let a_minus = a.sub(&id)?;
    id.add(&a_plus.pow((n - 1) as u64)?.mul(&a_minus)?)
}

/// Rebuild the full matrix B from its last column using the column
/// recurrences above.
fn an_solution_from_last_column(field: &Field, n: usize, b_n: &VecN) -> Result<Mat> {
    let a = an_matrix(field, n)?;
    let id = Mat::identity(field, n);
    let a_plus = a.add(&id)?;
    let a_minus = a.sub(&id)?;
    let mut cols = vec![VecN::zero(field, n); n];
    cols[n - 1] = b_n.clone();
    if n >= 2 {
        cols[n - 2] = a_minus.mul_vec(b_n)?;
    }
    for j in (0..n.saturating_sub(2)).rev() {
        cols[j] = a_plus.mul_vec(&cols[j + 1])?;
    }
    let mut b = Mat::zero(field, n, n);
    for (j, col) in cols.iter().enumerate() {
        for i in 0..n {
            b.set(i, j, col.get(i));
        }
    }
    Ok(b)
}

/// dim C(A_n, −1) over GF(p), via the n×n reduction.
pub fn an_code_dimension(field: &Field, n: usize) -> Result<usize> {
    let m = an_membership_kernel(field, n)?;
    Ok(n - m.rank())
}

/// Scan all primes p ≤ prime_bound and report those where
/// dim C(A_n, −1) over GF(p) exceeds 1 (breaking the [n²,1,n²] design).
/// For good primes the solution line is verified to be spanned by B_n.
pub fn bad_prime_scan(n: usize, prime_bound: u64) -> Result<BadPrimeReport> {
    if n < 2 {
        return Err(Error::Precondition("A_n needs n ≥ 2".into()));
    }
    if prime_bound < 2 {
        return Err(Error::Precondition("prime bound must be at least 2".into()));
    }
    let primes = primes_up_to(prime_bound);
    let flagged: Result<Vec<(u64, bool)>> = primes
        .par_iter()
        .map(|&p| {
            let field = Field::prime(p)?;
            let m = an_membership_kernel(&field, n)?;
            let kernel = m.kernel_basis();
            if kernel.len() != 1 {
                return Ok((p, true));
            }
            // good prime: the unique solution line must be ⟨B_n⟩
            let b = an_solution_from_last_column(&field, n, &kernel[0])?;
            let bn = bn_matrix(&field, n)?;
            let scale = b.get(0, 0);
            if scale.is_zero() || b != bn.scalar_mul(scale) {
                return Err(Error::Precondition(format!(
                    "good prime {p} does not reproduce B_{n}"
                )));
            }
            Ok((p, false))
        })
        .collect();
    let mut bad_primes: Vec<u64> =
        flagged?.into_iter().filter(|&(_, bad)| bad).map(|(p, _)| p).collect();
    bad_primes.sort_unstable();
    Ok(BadPrimeReport { n, prime_bound, bad_primes })
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::code::{code_build, DEFAULT_DISTANCE_BUDGET};

    #[test]
    fn small_named_matrices() {
        let f3 = Field::prime(3).unwrap();
        assert_eq!(all_ones(&f3, 2).row_codes(), vec![vec![1, 1], vec![1, 1]]);
        assert_eq!(ones_plus_id(&f3, 2).row_codes(), vec![vec![2, 1], vec![1, 2]]);
        let e12 = unit(&f3, 1, 2, 3).unwrap();
        assert_eq!(e12.hamming_weight(), 1);
        assert_eq!(e12.get(0, 1), Elt::ONE);
        assert!(matches!(
            unit(&f3, 0, 1, 3),
            Err(Error::IndexOutOfRange { .. })
        ));
        assert!(matches!(
            unit(&f3, 1, 4, 3),
            Err(Error::IndexOutOfRange { .. })
        ));
    }

    #[test]
    fn sylvester_properties() {
        let f3 = Field::prime(3).unwrap();
        let f5 = Field::prime(5).unwrap();
        assert_eq!(sylvester(&f3, 1).unwrap().row_codes(), vec![vec![1, 1], vec![1, 2]]);
        // H_4 H_4ᵗ = 4I over GF(5)
        let h4 = sylvester(&f5, 2).unwrap();
        let prod = h4.mul(&h4.transpose()).unwrap();
        assert_eq!(prod, Mat::identity(&f5, 4).scalar_mul(Elt(4)));
        for k in 1..4u32 {
            let h = sylvester(&f5, k).unwrap();
            let order = 1usize << k;
            assert_eq!(h.rows(), order);
            assert_eq!(h, h.transpose());
            assert!(h.trace().unwrap().is_zero());
            // H² = 2^k · I
            let scale = f5.from_int(order as i64);
            assert_eq!(h.mul(&h).unwrap(), Mat::identity(&f5, order).scalar_mul(scale));
        }
        let f2 = Field::prime(2).unwrap();
        assert!(matches!(sylvester(&f2, 2), Err(Error::CharacteristicTwo)));
        let f4 = crate::field::field_make(2, 2, None).unwrap();
        assert!(matches!(sylvester(&f4, 2), Err(Error::CharacteristicTwo)));
    }

    #[test]
    fn an_bn_displays() {
        let f7 = Field::prime(7).unwrap();
        let a4 = an_matrix(&f7, 4).unwrap();
        assert_eq!(
            a4.row_codes(),
            vec![
                vec![1, 6, 0, 0],
                vec![0, 1, 6, 0],
                vec![0, 0, 1, 6],
                vec![1, 0, 0, 6],
            ]
        );
        let b4 = bn_matrix(&f7, 4).unwrap();
        assert_eq!(
            b4.row_codes(),
            vec![
                vec![1, 1, 1, 6],
                vec![1, 1, 1, 6],
                vec![1, 1, 1, 6],
                vec![1, 1, 1, 6],
            ]
        );
        let f5 = Field::prime(5).unwrap();
        let a3 = an_matrix(&f5, 3).unwrap();
        assert_eq!(a3.row_codes(), vec![vec![1, 4, 0], vec![0, 1, 4], vec![1, 0, 4]]);
        assert!(an_matrix(&f5, 1).is_err());
        assert!(bn_matrix(&f5, 1).is_err());
    }

    #[test]
    fn cycle_and_graph_constructors() {
        let f5 = Field::prime(5).unwrap();
        let c3 = cycle_perm(&f5, 3);
        assert_eq!(c3.pow(3).unwrap(), Mat::identity(&f5, 3));
        assert_ne!(c3.pow(2).unwrap(), Mat::identity(&f5, 3));
        assert_eq!(c3.hamming_weight(), 3);
        // complete graph K_n maps to J_n − I_n
        let f2 = Field::prime(2).unwrap();
        for n in 2..5 {
            let mut adj = all_ones(&f2, n);
            for i in 0..n {
                adj.set(i, i, Elt::ZERO);
            }
            let k = from_graph(&f5, &adj).unwrap();
            let expected = all_ones(&f5, n).sub(&Mat::identity(&f5, n)).unwrap();
            assert_eq!(k, expected);
        }
        // path P_3
        let p3 = Mat::from_rows(&f2, &[vec![0, 1, 0], vec![1, 0, 1], vec![0, 1, 0]]).unwrap();
        assert!(from_graph(&f5, &p3).is_ok());
        // rejections
        let asym = Mat::from_rows(&f2, &[vec![0, 1], vec![0, 0]]).unwrap();
        assert!(matches!(from_graph(&f5, &asym), Err(Error::BadAdjacency(_))));
        let loops = Mat::from_rows(&f2, &[vec![1, 0], vec![0, 0]]).unwrap();
        assert!(matches!(from_graph(&f5, &loops), Err(Error::BadAdjacency(_))));
        let f3 = Field::prime(3).unwrap();
        let vals = Mat::from_rows(&f3, &[vec![0, 2], vec![2, 0]]).unwrap();
        assert!(matches!(from_graph(&f5, &vals), Err(Error::BadAdjacency(_))));
    }

    #[test]
    fn ones_family_identities() {
        // J² = nJ; (J+I)J = J(J+I) = (n+1)J = 0 when char | n+1
        for (q, n) in [(3u64, 2usize), (5, 4), (7, 6), (3, 5)] {
            let field = Field::prime(q).unwrap();
            let j = all_ones(&field, n);
            assert_eq!(j.mul(&j).unwrap(), j.scalar_mul(field.from_int(n as i64)));
            if (n as u64 + 1) % q == 0 {
                let ji = ones_plus_id(&field, n);
                assert!(ji.mul(&j).unwrap().is_zero());
                assert!(j.mul(&ji).unwrap().is_zero());
            }
        }
    }

    #[test]
    fn an_reduction_matches_generic_build() {
        for n in 2..=6usize {
            for p in [2u64, 3, 5, 7, 11, 13] {
                let field = Field::prime(p).unwrap();
                let a = an_matrix(&field, n).unwrap();
                let code = code_build(&a, field.neg(Elt::ONE)).unwrap();
                assert_eq!(
                    an_code_dimension(&field, n).unwrap(),
                    code.dim(),
                    "n={n} p={p}"
                );
            }
        }
    }

    #[test]
    fn an_bn_anticommute_and_good_prime_shape() {
        let f5 = Field::prime(5).unwrap();
        for n in 2..=6usize {
            let a = an_matrix(&f5, n).unwrap();
            let b = bn_matrix(&f5, n).unwrap();
            let anti = a.mul(&b).unwrap().add(&b.mul(&a).unwrap()).unwrap();
            assert!(anti.is_zero(), "A_n B_n + B_n A_n ≠ 0 at n={n}");
        }
        // good prime: dim 1 and basis proportional to B_n
        let a3 = an_matrix(&f5, 3).unwrap();
        let code = code_build(&a3, Elt(4)).unwrap();
        assert_eq!(code.dim(), 1);
        let basis = &code.basis()[0];
        let bn = bn_matrix(&f5, 3).unwrap();
        let scale = f5.div(basis.get(0, 0), bn.get(0, 0)).unwrap();
        assert_eq!(basis, &bn.scalar_mul(scale));
        // and the [n²,1,n²] parameters hold
        let p = code.min_distance(DEFAULT_DISTANCE_BUDGET);
        assert_eq!((p.length, p.k, p.d), (9, 1, 9));
    }

    #[test]
    fn bad_primes_for_small_n() {
        let report = bad_prime_scan(3, 100).unwrap();
        assert_eq!(report.bad_primes, vec![2]);
        assert_eq!(report.prime_bound, 100);
        // n = 2 degenerates: A_2² = 0 makes every characteristic bad
        let report = bad_prime_scan(2, 20).unwrap();
        assert_eq!(report.bad_primes, vec![2, 3, 5, 7, 11, 13, 17, 19]);
    }

    #[test]
    fn prime_sieve() {
        assert_eq!(primes_up_to(1), Vec::<u64>::new());
        assert_eq!(primes_up_to(2), vec![2]);
        assert_eq!(primes_up_to(30), vec![2, 3, 5, 7, 11, 13, 17, 19, 23, 29]);
        assert_eq!(primes_up_to(10_000).len(), 1229);
    }
}
