//! Dimension and distance bounds for C(A,a), computed independently of the
//! parity-check construction so the two can be cross-checked.
//!
//! The spectral machinery never builds one global splitting field: each
//! irreducible factor g of the characteristic polynomial gets its own
//! GF(q^deg g) = F_q[x]/(g), which already contains a·μ for every root μ of
//! g because a lies in the base field.

use serde::Serialize;

use crate::code::min_weight_of_span;
use crate::error::{Error, Result};
use crate::field::poly::{factor, root_multiplicity, Poly};
use crate::field::{Elt, Field};
use crate::matrix::{Mat, VecN};

/// Spectrum of one irreducible factor of the characteristic polynomial.
/// All `degree` conjugate roots share the same multiplicities, so a single
/// (alg_mult, geo_mult) pair is stored.
pub struct FactorSpectrum {
    /// Irreducible factor over the base field.
    pub factor: Poly,
    pub degree: usize,
    /// Multiplicity of the factor in the characteristic polynomial.
    pub multiplicity: usize,
    /// GF(q^degree) containing the roots (the base field itself when
    /// degree = 1).
    pub field: Field,
    /// The Frobenius orbit μ, μ^q, …, μ^{q^{degree−1}}.
    pub roots: Vec<Elt>,
    /// M(A,μ): multiplicity of μ as a root of the characteristic polynomial.
    pub alg_mult: usize,
    /// K(A,μ) = n − rank(A − μI) over `field`.
    pub geo_mult: usize,
}

/// Factored spectrum of a matrix.
pub struct EigenData {
    pub charpoly: Poly,
    pub factors: Vec<FactorSpectrum>,
}

/// A − μI over μ's field (A is lifted from the base field).
fn shifted(a_mat: &Mat, mu: Elt, field: &Field) -> Result<Mat> {
    let mut m = a_mat.lift(field)?;
    let f = field;
    for i in 0..m.rows() {
        m.set(i, i, f.sub(m.get(i, i), mu));
    }
    Ok(m)
}

/// K(A,μ) = n − rank(A − μI), computed over the given extension of A's
/// field.
pub fn geometric_multiplicity(a_mat: &Mat, mu: Elt, field: &Field) -> Result<usize> {
    Ok(a_mat.rows() - shifted(a_mat, mu, field)?.rank())
}

/// Factor the characteristic polynomial and compute (M, K) for one root of
/// each irreducible factor, with the full Frobenius orbit recorded.
pub fn eigen_data(a_mat: &Mat) -> Result<EigenData> {
    if !a_mat.is_square() {
        return Err(Error::ShapeMismatch("eigen data of a non-square matrix".into()));
    }
    let base = a_mat.field().clone();
    let q = base.order();
    let charpoly = a_mat.charpoly()?;
    let factorization = factor(&charpoly)?;
    let mut factors = Vec::new();
    for (g, multiplicity) in factorization.factors {
        let degree = g.degree().expect("irreducible factors are nonzero");
        let (field, mu) = if degree == 1 {
            // monic x − c has root c
            (base.clone(), base.neg(g.coeff(0)))
        } else {
            let ext = Field::extension(&base, &g)?;
            let mu = ext.generator()?;
            (ext, mu)
        };
        let mut roots = Vec::with_capacity(degree);
        let mut r = mu;
        for _ in 0..degree {
            roots.push(r);
            r = field.pow(r, q);
        }
        let lifted = Poly::from_codes(&field, &charpoly.codes())?;
        let alg_mult = root_multiplicity(&lifted, mu)?;
        let geo_mult = geometric_multiplicity(a_mat, mu, &field)?;
        factors.push(FactorSpectrum {
            factor: g,
            degree,
            multiplicity,
            field,
            roots,
            alg_mult,
            geo_mult,
        });
    }
    Ok(EigenData { charpoly, factors })
}

/// Σ_{μ ∈ S(A)} K(A,aμ)·K(Aᵗ,μ) ≤ dim C(A,a) ≤ Σ M(A,aμ)·M(Aᵗ,μ).
///
/// The sum runs over all eigenvalues of Aᵗ in a splitting field; conjugate
/// roots contribute identical terms (A and a are fixed by Frobenius), each
/// counted separately.  Terms with aμ outside the spectrum vanish.
pub fn spectral_bounds(a_mat: &Mat, a: Elt) -> Result<(usize, usize)> {
    let at = a_mat.transpose();
    let data = eigen_data(&at)?;
    let mut lower = 0;
    let mut upper = 0;
    for fs in &data.factors {
        let f = &fs.field;
        let lifted = Poly::from_codes(f, &data.charpoly.codes())?;
        for &mu in &fs.roots {
            let amu = f.mul(Elt(a.0), mu);
            // charpoly(A) = charpoly(Aᵗ), so M and K of A use the same poly
            let m_at = fs.alg_mult;
            let k_at = fs.geo_mult;
            let m_a = root_multiplicity(&lifted, amu)?;
            if m_a == 0 {
                continue; // aμ not an eigenvalue: K = 0 too
            }
            let k_a = geometric_multiplicity(a_mat, amu, f)?;
            lower += k_a * k_at;
            upper += m_a * m_at;
        }
    }
    Ok((lower, upper))
}

/// True iff no eigenvalue λ of A has λ·a also an eigenvalue — which forces
/// dim C(A,a) = 0.
pub fn zero_code_check(a_mat: &Mat, a: Elt) -> Result<bool> {
    let data = eigen_data(a_mat)?;
    for fs in &data.factors {
        let f = &fs.field;
        let lifted = Poly::from_codes(f, &data.charpoly.codes())?;
        for &lambda in &fs.roots {
            let la = f.mul(lambda, Elt(a.0));
            if lifted.eval(la).is_zero() {
                return Ok(false);
            }
        }
    }
    Ok(true)
}

/// The product code Ker(A)·Ker(Aᵗ)ᵗ ⊆ C(A,a): outer products of kernel
/// basis vectors, a dimension lower bound k₀·k₀′, and the distance upper
/// bound d(Ker A)·d(Ker Aᵗ) (None when a kernel is trivial).
pub struct ProductCode {
    pub generators: Vec<Mat>,
    pub dim_lower: usize,
    pub dist_upper: Option<usize>,
}

/// Exact minimum weight of the (short, length-n) code spanned by `basis`.
fn span_distance(field: &Field, basis: &[VecN]) -> Option<usize> {
    if basis.is_empty() {
        return None;
    }
    let (w, _) = min_weight_of_span(field, basis, u128::MAX);
    Some(w)
}

pub fn product_code(a_mat: &Mat, _a: Elt) -> Result<ProductCode> {
    let field = a_mat.field().clone();
    let ker_a = a_mat.kernel_basis();
    let ker_at = a_mat.transpose().kernel_basis();
    let mut generators = Vec::with_capacity(ker_a.len() * ker_at.len());
    for u in &ker_a {
        for v in &ker_at {
            generators.push(u.outer(v)?);
        }
    }
    let dim_lower = ker_a.len() * ker_at.len();
    let dist_upper = match (span_distance(&field, &ker_a), span_distance(&field, &ker_at)) {
        (Some(d1), Some(d2)) => Some(d1 * d2),
        _ => None,
    };
    Ok(ProductCode { generators, dim_lower, dist_upper })
}

/// dim C(A,a) for rank-1 A and a ∉ {0,1}: (n−1)², plus 1 exactly when A is
/// nilpotent (Aⁿ = 0).
pub fn rank1_dim(a_mat: &Mat, a: Elt) -> Result<usize> {
    if !a_mat.is_square() {
        return Err(Error::ShapeMismatch("rank1_dim of a non-square matrix".into()));
    }
    if a_mat.rank() != 1 {
        return Err(Error::Precondition("rank1_dim requires rank(A) = 1".into()));
    }
    if a.is_zero() || a == Elt::ONE {
        return Err(Error::Precondition("rank1_dim requires a ∉ {0, 1}".into()));
    }
    let n = a_mat.rows();
    let delta = if a_mat.pow(n as u64)?.is_zero() { 1 } else { 0 };
    Ok((n - 1) * (n - 1) + delta)
}

/// Evaluation of the two generic dimension caps (n²−1, proven whenever
/// A ≠ 0 and a ≠ 1, and the stronger n²−n) against an actual dimension.
/// Violations are reported, not asserted — the stronger cap is quoted from
/// the literature without its full hypotheses.
#[derive(Clone, Copy, Debug, Serialize)]
pub struct CapsReport {
    pub dim: usize,
    pub cap_nsq_minus_one: usize,
    pub cap_nsq_minus_one_ok: bool,
    pub cap_nsq_minus_n: usize,
    pub cap_nsq_minus_n_ok: bool,
}

pub fn dim_caps_check(a_mat: &Mat, a: Elt, dim: usize) -> Result<CapsReport> {
    if a_mat.is_zero() {
        return Err(Error::Precondition("dimension caps require A ≠ 0".into()));
    }
    if a == Elt::ONE {
        return Err(Error::Precondition("dimension caps require a ≠ 1".into()));
    }
    let nn = a_mat.rows() * a_mat.rows();
    let n = a_mat.rows();
    Ok(CapsReport {
        dim,
        cap_nsq_minus_one: nn - 1,
        cap_nsq_minus_one_ok: dim <= nn - 1,
        cap_nsq_minus_n: nn - n,
        cap_nsq_minus_n_ok: dim <= nn - n,
    })
}

/// q-ary entropy H_q(x) = x·log_q(q−1) − x·log_q(x) − (1−x)·log_q(1−x) on
/// 0 < x ≤ (q−1)/q (the right endpoint is where the entropy peaks at 1).
pub fn q_ary_entropy(x: f64, q: u64) -> Result<f64> {
    let top = (q as f64 - 1.0) / q as f64;
    if !(x > 0.0 && x <= top) {
        return Err(Error::Domain { x, domain: format!("(0, {}/{}]", q - 1, q) });
    }
    let logq = |y: f64| y.ln() / (q as f64).ln();
    Ok(x * logq(q as f64 - 1.0) - x * logq(x) - (1.0 - x) * logq(1.0 - x))
}

/// Everything the `analyze` output reports under "bounds".  Optional fields
/// are null when their hypotheses fail (caps need A ≠ 0 and a ≠ 1; the
/// distance caps need a nontrivial kernel; rank1_dim needs rank 1 and
/// a ∉ {0,1}).
#[derive(Clone, Debug, Serialize)]
pub struct BoundsReport {
    pub spectral_lower: usize,
    pub spectral_upper: usize,
    pub kernel_sq: usize,
    pub zero_forced: bool,
    pub cap_nsq_minus_one: Option<usize>,
    pub cap_nsq_minus_n: Option<usize>,
    pub product_dim_lower: usize,
    pub product_dist_upper: Option<usize>,
    pub singleton_sq: Option<usize>,
    pub rank1_dim: Option<usize>,
}

pub fn bounds_report(a_mat: &Mat, a: Elt) -> Result<BoundsReport> {
    let n = a_mat.rows();
    let (spectral_lower, spectral_upper) = spectral_bounds(a_mat, a)?;
    let k0 = n - a_mat.rank();
    let caps_apply = !a_mat.is_zero() && a != Elt::ONE;
    let product = product_code(a_mat, a)?;
    let rank1 = if a_mat.rank() == 1 && !a.is_zero() && a != Elt::ONE {
        Some(rank1_dim(a_mat, a)?)
    } else {
        None
    };
    Ok(BoundsReport {
        spectral_lower,
        spectral_upper,
        kernel_sq: k0 * k0,
        zero_forced: zero_code_check(a_mat, a)?,
        cap_nsq_minus_one: caps_apply.then(|| n * n - 1),
        cap_nsq_minus_n: caps_apply.then(|| n * n - n),
        product_dim_lower: product.dim_lower,
        product_dist_upper: product.dist_upper,
        singleton_sq: (k0 >= 1).then(|| (n - k0 + 1) * (n - k0 + 1)),
        rank1_dim: rank1,
    })
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::code::{code_build, DEFAULT_DISTANCE_BUDGET};
    use rand::{Rng, SeedableRng};
    use rand_chacha::ChaCha8Rng;

    fn mat(field: &Field, rows: &[&[u64]]) -> Mat {
        let rows: Vec<Vec<u64>> = rows.iter().map(|r| r.to_vec()).collect();
        Mat::from_rows(field, &rows).unwrap()
    }

    fn all_ones(field: &Field, n: usize) -> Mat {
        Mat::from_codes(field, n, n, &vec![1; n * n]).unwrap()
    }

    /// Sylvester H_4 written out by hand (−1 as q−1).
    fn h4(field: &Field) -> Mat {
        let m = field.order() - 1;
        Mat::from_rows(
            field,
            &[
                vec![1, 1, 1, 1],
                vec![1, m, 1, m],
                vec![1, 1, m, m],
                vec![1, m, m, 1],
            ],
        )
        .unwrap()
    }

    #[test]
    fn eigen_all_ones_over_gf5() {
        let f5 = Field::prime(5).unwrap();
        let data = eigen_data(&all_ones(&f5, 3)).unwrap();
        // charpoly x³ − 3x² = x²(x − 3)
        assert_eq!(data.charpoly.codes(), vec![0, 0, 2, 1]);
        assert_eq!(data.factors.len(), 2);
        // canonical factor order: x before x − 3
        let f0 = &data.factors[0];
        assert_eq!(f0.factor.codes(), vec![0, 1]);
        assert_eq!(f0.roots, vec![Elt::ZERO]);
        assert_eq!((f0.alg_mult, f0.geo_mult), (2, 2));
        let f1 = &data.factors[1];
        assert_eq!(f1.factor.codes(), vec![2, 1]); // x − 3 = x + 2
        assert_eq!(f1.roots, vec![Elt(3)]);
        assert_eq!((f1.alg_mult, f1.geo_mult), (1, 1));
    }

    #[test]
    fn eigen_hadamard_and_identity() {
        let f3 = Field::prime(3).unwrap();
        let data = eigen_data(&h4(&f3)).unwrap();
        // eigenvalues ±2 = {2, 1} over GF(3), each M = K = 2
        assert_eq!(data.factors.len(), 2);
        let mut roots: Vec<u64> = data.factors.iter().map(|f| f.roots[0].0).collect();
        roots.sort();
        assert_eq!(roots, vec![1, 2]);
        for fs in &data.factors {
            assert_eq!((fs.alg_mult, fs.geo_mult), (2, 2));
        }
        // identity: single root 1 with M = K = n
        for n in 1..5 {
            let data = eigen_data(&Mat::identity(&f3, n)).unwrap();
            assert_eq!(data.factors.len(), 1);
            assert_eq!(data.factors[0].roots, vec![Elt::ONE]);
            assert_eq!(data.factors[0].alg_mult, n);
            assert_eq!(data.factors[0].geo_mult, n);
        }
    }

    #[test]
    fn eigen_irreducible_factor_gets_extension_roots() {
        let f3 = Field::prime(3).unwrap();
        // companion matrix of x² + 1, irreducible over GF(3)
        let c = mat(&f3, &[&[0, 2], &[1, 0]]);
        let data = eigen_data(&c).unwrap();
        assert_eq!(data.factors.len(), 1);
        let fs = &data.factors[0];
        assert_eq!(fs.degree, 2);
        assert_eq!(fs.field.order(), 9);
        assert_eq!(fs.roots.len(), 2);
        assert_ne!(fs.roots[0], fs.roots[1]);
        let lifted = Poly::from_codes(&fs.field, &data.charpoly.codes()).unwrap();
        for &r in &fs.roots {
            assert!(lifted.eval(r).is_zero());
            // conjugates share (M, K)
            assert_eq!(root_multiplicity(&lifted, r).unwrap(), fs.alg_mult);
            assert_eq!(geometric_multiplicity(&c, r, &fs.field).unwrap(), fs.geo_mult);
        }
        assert_eq!((fs.alg_mult, fs.geo_mult), (1, 1));
    }

    #[test]
    fn eigen_invariants_on_random_matrices() {
        let mut rng = ChaCha8Rng::seed_from_u64(53);
        for q in [2u64, 3, 4, 5] {
            let field = Field::of_order(q).unwrap();
            for _ in 0..25 {
                let n = rng.gen_range(1..5);
                let a_mat = Mat::sample(&field, n, n, &mut rng);
                let data = eigen_data(&a_mat).unwrap();
                // Σ over all roots (with conjugates) of M = n
                let total: usize =
                    data.factors.iter().map(|f| f.degree * f.alg_mult).sum();
                assert_eq!(total, n);
                for fs in &data.factors {
                    assert!(fs.geo_mult >= 1 && fs.geo_mult <= fs.alg_mult);
                    assert_eq!(fs.alg_mult, fs.multiplicity);
                    assert_eq!(fs.roots.len(), fs.degree);
                }
            }
        }
    }

    #[test]
    fn spectral_bounds_fixed_examples() {
        let f3 = Field::prime(3).unwrap();
        let f5 = Field::prime(5).unwrap();
        // H_4, a = −1: lower = upper = 8 = dim
        assert_eq!(spectral_bounds(&h4(&f3), Elt(2)).unwrap(), (8, 8));
        assert_eq!(spectral_bounds(&h4(&f5), Elt(4)).unwrap(), (8, 8));
        assert_eq!(spectral_bounds(&h4(&f5), Elt(1)).unwrap(), (8, 8));
        // H_4 over GF(5), a ∉ {1,−1}: upper = 0 forces the zero code
        for a in [2u64, 3] {
            let (lo, up) = spectral_bounds(&h4(&f5), Elt(a)).unwrap();
            assert_eq!((lo, up), (0, 0));
            assert_eq!(code_build(&h4(&f5), Elt(a)).unwrap().dim(), 0);
        }
        // J_3 over GF(5), a = 2: only μ = 0 survives
        let (lo, up) = spectral_bounds(&all_ones(&f5, 3), Elt(2)).unwrap();
        assert_eq!((lo, up), (4, 4));
        assert_eq!(code_build(&all_ones(&f5, 3), Elt(2)).unwrap().dim(), 4);
    }

    #[test]
    fn sandwich_on_random_codes() {
        let mut rng = ChaCha8Rng::seed_from_u64(59);
        for q in [3u64, 4, 5] {
            let field = Field::of_order(q).unwrap();
            for _ in 0..60 {
                let n = rng.gen_range(1..5);
                let a_mat = Mat::sample(&field, n, n, &mut rng);
                let a = field.sample(&mut rng);
                let dim = code_build(&a_mat, a).unwrap().dim();
                let (lo, up) = spectral_bounds(&a_mat, a).unwrap();
                assert!(lo <= up);
                assert!(lo <= dim && dim <= up, "q={q} n={n} dim={dim} ∉ [{lo},{up}]");
                // the μ = 0 term alone
                let k0 = n - a_mat.rank();
                assert!(k0 * k0 <= lo || a.is_zero());
                if !a.is_zero() {
                    assert!(dim >= k0 * k0);
                }
                if zero_code_check(&a_mat, a).unwrap() {
                    assert_eq!(dim, 0);
                }
            }
        }
    }

    #[test]
    fn sandwich_exhaustive_gf3_n2() {
        let f3 = Field::prime(3).unwrap();
        for idx in 0..81u64 {
            let codes: Vec<u64> = (0..4).map(|i| (idx / 3u64.pow(i)) % 3).collect();
            let a_mat = Mat::from_codes(&f3, 2, 2, &codes).unwrap();
            for a in 1..3u64 {
                let dim = code_build(&a_mat, Elt(a)).unwrap().dim();
                let (lo, up) = spectral_bounds(&a_mat, Elt(a)).unwrap();
                assert!(lo <= dim && dim <= up, "A={codes:?} a={a}");
            }
        }
    }

    #[test]
    fn zero_code_examples() {
        let f5 = Field::prime(5).unwrap();
        // S(I) = {1}, 2·1 ∉ S → forced zero
        assert!(zero_code_check(&Mat::identity(&f5, 3), Elt(2)).unwrap());
        // Hadamard with a = −1 is not forced to zero
        assert!(!zero_code_check(&h4(&f5), Elt(4)).unwrap());
        // nilpotent A has 0 ∈ S, and 0·a = 0 ∈ S for every a
        let e12 = mat(&f5, &[&[0, 1], &[0, 0]]);
        for a in 0..5u64 {
            assert!(!zero_code_check(&e12, Elt(a)).unwrap());
        }
    }

    #[test]
    fn product_code_examples() {
        let f5 = Field::prime(5).unwrap();
        // invertible A: nothing to say
        let p = product_code(&Mat::identity(&f5, 3), Elt(2)).unwrap();
        assert!(p.generators.is_empty());
        assert_eq!(p.dim_lower, 0);
        assert_eq!(p.dist_upper, None);
        // J_n: kernels of dimension n−1 contain weight-2 vectors e_i − e_j
        for n in [3usize, 4] {
            let a_mat = all_ones(&f5, n);
            let code = code_build(&a_mat, Elt(2)).unwrap();
            let p = product_code(&a_mat, Elt(2)).unwrap();
            assert_eq!(p.dim_lower, (n - 1) * (n - 1));
            assert_eq!(p.dist_upper, Some(4));
            assert_eq!(p.generators.len(), (n - 1) * (n - 1));
            for g in &p.generators {
                assert!(code.contains(g).unwrap());
            }
            // generators really span dim_lower dimensions
            let vecs: Vec<VecN> = p.generators.iter().map(|g| g.vec()).collect();
            let mut stack = Mat::zero(&f5, vecs.len(), n * n);
            for (i, v) in vecs.iter().enumerate() {
                for j in 0..n * n {
                    stack.set(i, j, v.get(j));
                }
            }
            assert_eq!(stack.rank(), p.dim_lower);
            // and the true distance respects the product bound
            let d = code.min_distance(DEFAULT_DISTANCE_BUDGET);
            assert!(d.d <= 4);
        }
    }

    #[test]
    fn rank1_dimension_formula() {
        let f5 = Field::prime(5).unwrap();
        // E_11 idempotent: (n−1)² + 0
        let e11 = mat(&f5, &[&[1, 0, 0], &[0, 0, 0], &[0, 0, 0]]);
        assert_eq!(rank1_dim(&e11, Elt(2)).unwrap(), 4);
        assert_eq!(code_build(&e11, Elt(2)).unwrap().dim(), 4);
        // E_12 nilpotent: (n−1)² + 1
        let e12 = mat(&f5, &[&[0, 1], &[0, 0]]);
        assert_eq!(rank1_dim(&e12, Elt(2)).unwrap(), 2);
        assert_eq!(code_build(&e12, Elt(2)).unwrap().dim(), 2);
        // J_3 over GF(3) is nilpotent (J² = 3J = 0): (n−1)² + 1
        let f3 = Field::prime(3).unwrap();
        let j3 = all_ones(&f3, 3);
        assert_eq!(rank1_dim(&j3, Elt(2)).unwrap(), 5);
        assert_eq!(code_build(&j3, Elt(2)).unwrap().dim(), 5);
        // preconditions
        assert!(matches!(
            rank1_dim(&Mat::identity(&f5, 2), Elt(2)),
            Err(Error::Precondition(_))
        ));
        assert!(matches!(rank1_dim(&e11, Elt::ONE), Err(Error::Precondition(_))));
        assert!(matches!(rank1_dim(&e11, Elt::ZERO), Err(Error::Precondition(_))));
    }

    #[test]
    fn rank1_matches_code_build_exhaustively() {
        // every rank-1 matrix over GF(3), n ∈ {2,3}, is u·vᵗ with u, v ≠ 0
        let f3 = Field::prime(3).unwrap();
        for n in [2usize, 3] {
            let mut seen = std::collections::HashSet::new();
            let total = 3u64.pow(n as u32);
            for ui in 1..total {
                for vi in 1..total {
                    let digits = |mut x: u64| -> Vec<u64> {
                        (0..n)
                            .map(|_| {
                                let d = x % 3;
                                x /= 3;
                                d
                            })
                            .collect()
                    };
                    let u = VecN::from_codes(&f3, &digits(ui)).unwrap();
                    let v = VecN::from_codes(&f3, &digits(vi)).unwrap();
                    let a_mat = u.outer(&v).unwrap();
                    if !seen.insert(a_mat.codes()) {
                        continue;
                    }
                    assert_eq!(a_mat.rank(), 1);
                    assert_eq!(
                        rank1_dim(&a_mat, Elt(2)).unwrap(),
                        code_build(&a_mat, Elt(2)).unwrap().dim()
                    );
                }
            }
        }
    }

    #[test]
    fn caps_hold_on_random_codes() {
        let mut rng = ChaCha8Rng::seed_from_u64(61);
        let f3 = Field::prime(3).unwrap();
        for _ in 0..100 {
            let n = rng.gen_range(2..4);
            let a_mat = Mat::sample(&f3, n, n, &mut rng);
            if a_mat.is_zero() {
                continue;
            }
            let dim = code_build(&a_mat, Elt(2)).unwrap().dim();
            let report = dim_caps_check(&a_mat, Elt(2), dim).unwrap();
            assert!(report.cap_nsq_minus_one_ok);
            assert!(report.cap_nsq_minus_n_ok);
        }
        // preconditions
        assert!(dim_caps_check(&Mat::zero(&f3, 2, 2), Elt(2), 4).is_err());
        assert!(dim_caps_check(&Mat::identity(&f3, 2), Elt::ONE, 4).is_err());
    }

    #[test]
    fn entropy_values() {
        // peaks of exactly 1 at x = (q−1)/q
        assert!((q_ary_entropy(0.5, 2).unwrap() - 1.0).abs() < 1e-12);
        assert!((q_ary_entropy(2.0 / 3.0, 3).unwrap() - 1.0).abs() < 1e-12);
        assert!(q_ary_entropy(1e-6, 3).unwrap() < 1e-4);
        assert!(q_ary_entropy(1e-6, 3).unwrap() > 0.0);
        assert!(matches!(q_ary_entropy(0.0, 2), Err(Error::Domain { .. })));
        assert!(matches!(q_ary_entropy(0.51, 2), Err(Error::Domain { .. })));
        assert!(matches!(q_ary_entropy(-0.1, 5), Err(Error::Domain { .. })));
    }

    #[test]
    fn report_assembles_every_bound() {
        let f5 = Field::prime(5).unwrap();
        let j3 = all_ones(&f5, 3);
        let r = bounds_report(&j3, Elt(2)).unwrap();
        assert_eq!((r.spectral_lower, r.spectral_upper), (4, 4));
        assert_eq!(r.kernel_sq, 4);
        assert!(!r.zero_forced);
        assert_eq!(r.cap_nsq_minus_one, Some(8));
        assert_eq!(r.cap_nsq_minus_n, Some(6));
        assert_eq!(r.product_dim_lower, 4);
        assert_eq!(r.product_dist_upper, Some(4));
        assert_eq!(r.singleton_sq, Some(4)); // k₀ = 2 → (3−2+1)²
        assert_eq!(r.rank1_dim, Some(4));
        // caps vanish when A = 0 or a = 1
        let r0 = bounds_report(&Mat::zero(&f5, 2, 2), Elt(2)).unwrap();
        assert_eq!(r0.cap_nsq_minus_one, None);
        assert_eq!(r0.rank1_dim, None);
        let r1 = bounds_report(&j3, Elt::ONE).unwrap();
        assert_eq!(r1.cap_nsq_minus_one, None);
        // invertible A: no kernel-based caps
        let ri = bounds_report(&Mat::identity(&f5, 3), Elt(2)).unwrap();
        assert_eq!(ri.product_dist_upper, None);
        assert_eq!(ri.singleton_sq, None);
        assert_eq!(ri.kernel_sq, 0);
        assert!(ri.zero_forced);
    }
}
