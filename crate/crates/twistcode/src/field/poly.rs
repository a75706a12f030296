//! Univariate polynomials over a [`Field`], with factorization into
//! irreducibles.
//!
//! Factorization runs squarefree decomposition (including the char-p
//! perfect-power case), then distinct-degree splitting, then equal-degree
//! splitting.  Equal-degree splitting draws candidates from a ChaCha stream
//! seeded with [`FACTOR_SEED`] and the output is sorted canonically, so the
//! factor list is identical on every run.

use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;

use super::{Elt, Field};
use crate::error::{Error, Result};

/// Fixed seed for the equal-degree splitting randomness; reproducibility is
/// worth more here than average-case speed.
pub const FACTOR_SEED: u64 = 0x74776973;

/// Polynomial with coefficients in one field; constant term first, no
/// trailing zeros (the zero polynomial has an empty coefficient list).
#[derive(Clone, PartialEq, Eq, Debug)]
pub struct Poly {
    field: Field,
    coeffs: Vec<Elt>,
}

impl Poly {
    pub fn zero(field: &Field) -> Poly {
        Poly { field: field.clone(), coeffs: vec![] }
    }

    pub fn one(field: &Field) -> Poly {
        Poly { field: field.clone(), coeffs: vec![Elt::ONE] }
    }

    pub fn constant(field: &Field, c: Elt) -> Poly {
        Poly::from_coeffs(field, vec![c])
    }

    pub fn x(field: &Field) -> Poly {
        Poly { field: field.clone(), coeffs: vec![Elt::ZERO, Elt::ONE] }
    }

    /// `c * x^d`.
    pub fn monomial(field: &Field, c: Elt, d: usize) -> Poly {
        let mut coeffs = vec![Elt::ZERO; d + 1];
        coeffs[d] = c;
        Poly::from_coeffs(field, coeffs)
    }

    pub fn from_coeffs(field: &Field, mut coeffs: Vec<Elt>) -> Poly {
        while coeffs.last() == Some(&Elt::ZERO) {
            coeffs.pop();
        }
        Poly { field: field.clone(), coeffs }
    }

    /// Coefficients given as integer codes, constant term first.
    pub fn from_codes(field: &Field, codes: &[u64]) -> Result<Poly> {
        let coeffs = codes.iter().map(|&c| field.elt(c)).collect::<Result<Vec<_>>>()?;
        Ok(Poly::from_coeffs(field, coeffs))
    }

    pub fn field(&self) -> &Field {
        &self.field
    }

    pub fn coeffs(&self) -> &[Elt] {
        &self.coeffs
    }

    pub fn codes(&self) -> Vec<u64> {
        self.coeffs.iter().map(|e| e.0).collect()
    }

    pub fn is_zero(&self) -> bool {
        self.coeffs.is_empty()
    }

    /// `None` for the zero polynomial.
    pub fn degree(&self) -> Option<usize> {
        self.coeffs.len().checked_sub(1)
    }

    /// Leading coefficient; zero for the zero polynomial.
    pub fn lead(&self) -> Elt {
        self.coeffs.last().copied().unwrap_or(Elt::ZERO)
    }

    /// Coefficient of x^i (zero beyond the degree).
    pub fn coeff(&self, i: usize) -> Elt {
        self.coeffs.get(i).copied().unwrap_or(Elt::ZERO)
    }

    pub fn add(&self, other: &Poly) -> Poly {
        debug_assert_eq!(self.field, other.field);
        let f = &self.field;
        let n = self.coeffs.len().max(other.coeffs.len());
        let coeffs = (0..n).map(|i| f.add(self.coeff(i), other.coeff(i))).collect();
        Poly::from_coeffs(f, coeffs)
    }

    pub fn neg(&self) -> Poly {
        let coeffs = self.coeffs.iter().map(|&c| self.field.neg(c)).collect();
        Poly::from_coeffs(&self.field, coeffs)
    }

    pub fn sub(&self, other: &Poly) -> Poly {
        self.add(&other.neg())
    }

    pub fn mul(&self, other: &Poly) -> Poly {
        debug_assert_eq!(self.field, other.field);
        let f = &self.field;
        if self.is_zero() || other.is_zero() {
            return Poly::zero(f);
        }
        let mut coeffs = vec![Elt::ZERO; self.coeffs.len() + other.coeffs.len() - 1];
        for (i, &a) in self.coeffs.iter().enumerate() {
            if a.is_zero() {
                continue;
            }
            for (j, &b) in other.coeffs.iter().enumerate() {
                coeffs[i + j] = f.add(coeffs[i + j], f.mul(a, b));
            }
        }
        Poly::from_coeffs(f, coeffs)
    }

    pub fn mul_scalar(&self, c: Elt) -> Poly {
        let coeffs = self.coeffs.iter().map(|&a| self.field.mul(a, c)).collect();
        Poly::from_coeffs(&self.field, coeffs)
    }

    /// Quotient and remainder; errors on a zero divisor.
    pub fn divrem(&self, divisor: &Poly) -> Result<(Poly, Poly)> {
        debug_assert_eq!(self.field, divisor.field);
        let f = &self.field;
        let dd = divisor.degree().ok_or(Error::DivisionByZero)?;
        if self.coeffs.len() < divisor.coeffs.len() {
            return Ok((Poly::zero(f), self.clone()));
        }
        let lead_inv = f.inv(divisor.lead())?;
        let mut rem = self.coeffs.clone();
        let mut quo = vec![Elt::ZERO; rem.len() - dd];
        for i in (dd..rem.len()).rev() {
            let c = f.mul(rem[i], lead_inv);
            if c.is_zero() {
                continue;
            }
            quo[i - dd] = c;
            for (j, &m) in divisor.coeffs.iter().enumerate() {
                rem[i - dd + j] = f.sub(rem[i - dd + j], f.mul(c, m));
            }
        }
        Ok((Poly::from_coeffs(f, quo), Poly::from_coeffs(f, rem)))
    }

    pub fn rem(&self, divisor: &Poly) -> Result<Poly> {
        Ok(self.divrem(divisor)?.1)
    }

    /// Synthetic division by (x - lambda): returns (quotient, remainder);
    /// the remainder equals `self(lambda)`.
    pub fn divrem_linear(&self, lambda: Elt) -> (Poly, Elt) {
        let f = &self.field;
        if self.is_zero() {
            return (Poly::zero(f), Elt::ZERO);
        }
        let mut quo = vec![Elt::ZERO; self.coeffs.len() - 1];
        let mut acc = Elt::ZERO;
        for i in (0..self.coeffs.len()).rev() {
            acc = f.add(self.coeffs[i], f.mul(acc, lambda));
            if i > 0 {
                quo[i - 1] = acc;
            }
        }
        (Poly::from_coeffs(f, quo), acc)
    }

    pub fn eval(&self, x: Elt) -> Elt {
        let f = &self.field;
        let mut acc = Elt::ZERO;
        for &c in self.coeffs.iter().rev() {
            acc = f.add(f.mul(acc, x), c);
        }
        acc
    }

    pub fn derivative(&self) -> Poly {
        let f = &self.field;
        if self.coeffs.len() <= 1 {
            return Poly::zero(f);
        }
        let coeffs = self.coeffs[1..]
            .iter()
            .enumerate()
            .map(|(i, &c)| {
                // multiply by the integer i+1 in the field
                f.mul(f.from_int((i + 1) as i64), c)
            })
            .collect();
        Poly::from_coeffs(f, coeffs)
    }

    pub fn monic(&self) -> Result<Poly> {
        if self.is_zero() {
            return Err(Error::ZeroPolynomial);
        }
        Ok(self.mul_scalar(self.field.inv(self.lead())?))
    }

    /// Monic gcd; gcd(0, 0) = 0.
    pub fn gcd(&self, other: &Poly) -> Poly {
        let mut a = self.clone();
        let mut b = other.clone();
        while !b.is_zero() {
            let r = a.rem(&b).expect("nonzero divisor");
            a = b;
            b = r;
        }
        if a.is_zero() {
            a
        } else {
            a.monic().expect("nonzero")
        }
    }

    /// `self^e mod m` by square-and-multiply.
    pub fn pow_mod(&self, e: u64, m: &Poly) -> Result<Poly> {
        let mut result = Poly::one(&self.field).rem(m)?;
        let mut base = self.rem(m)?;
        let mut e = e;
        while e > 0 {
            if e & 1 == 1 {
                result = result.mul(&base).rem(m)?;
            }
            base = base.mul(&base).rem(m)?;
            e >>= 1;
        }
        Ok(result)
    }

    /// Human-readable form like `x^3 + 2x + 1` (codes as coefficients).
    pub fn display(&self) -> String {
        if self.is_zero() {
            return "0".into();
        }
        let mut terms = Vec::new();
        for (i, &c) in self.coeffs.iter().enumerate().rev() {
            if c.is_zero() {
                continue;
            }
            let t = match (i, c.0) {
                (0, v) => format!("{v}"),
                (1, 1) => "x".into(),
                (1, v) => format!("{v}x"),
                (d, 1) => format!("x^{d}"),
                (d, v) => format!("{v}x^{d}"),
            };
            terms.push(t);
        }
        terms.join(" + ")
    }
}

/// `x^(q^k) mod f` via iterated q-power maps (exponents stay within u64).
fn frobenius_power(f: &Poly, k: usize) -> Result<Poly> {
    let q = f.field().order();
    let mut h = Poly::x(f.field()).rem(f)?;
    for _ in 0..k {
        h = h.pow_mod(q, f)?;
    }
    Ok(h)
}

/// Irreducibility over the coefficient field: f of degree n is irreducible
/// iff x^(q^n) = x mod f and gcd(x^(q^(n/l)) - x, f) = 1 for each prime l | n.
pub fn is_irreducible(f: &Poly) -> bool {
    let Some(n) = f.degree() else { return false };
    if n == 0 {
        return false;
    }
    if n == 1 {
        return true;
    }
    let x = Poly::x(f.field());
    let full = match frobenius_power(f, n) {
        Ok(h) => h,
        Err(_) => return false, // non-invertible lead never happens for monic use
    };
    if full != x.rem(f).expect("deg >= 2") {
        return false;
    }
    let mut rest = n;
    let mut l = 2;
    let mut prime_divisors = vec![];
    while l * l <= rest {
        if rest % l == 0 {
            prime_divisors.push(l);
            while rest % l == 0 {
                rest /= l;
            }
        }
        l += 1;
    }
    if rest > 1 {
        prime_divisors.push(rest);
    }
    for l in prime_divisors {
        let h = frobenius_power(f, n / l).expect("monic modulus");
        if h.sub(&x).gcd(f).degree() != Some(0) {
            return false;
        }
    }
    true
}

/// Coefficient-wise p-th root of a polynomial of the form g(x^p);
/// valid because x -> x^p is bijective on GF(q).
fn pth_root(f: &Poly) -> Poly {
    let field = f.field();
    let p = field.characteristic() as usize;
    let q = field.order();
    let root_exp = q / p as u64; // x^(q/p) inverts x -> x^p
    let deg = f.degree().expect("nonzero");
    debug_assert_eq!(deg % p, 0);
    let coeffs = (0..=deg / p)
        .map(|i| {
            let c = f.coeff(i * p);
            field.pow(c, root_exp)
        })
        .collect();
    Poly::from_coeffs(field, coeffs)
}

/// Squarefree decomposition of a monic polynomial: pairwise-coprime monic
/// squarefree parts with their multiplicities.
fn squarefree_parts(f: &Poly) -> Vec<(Poly, usize)> {
    debug_assert_eq!(f.lead(), Elt::ONE);
    if f.degree() == Some(0) {
        return vec![];
    }
    let p = f.field().characteristic() as usize;
    let df = f.derivative();
    if df.is_zero() {
        // f = h(x)^p
        let h = pth_root(f);
        return squarefree_parts(&h).into_iter().map(|(s, e)| (s, e * p)).collect();
    }
    let mut parts = vec![];
    let mut c = f.gcd(&df);
    let mut w = f.divrem(&c).expect("nonzero gcd").0;
    let mut i = 1;
    while w.degree() != Some(0) {
        let y = w.gcd(&c);
        let part = w.divrem(&y).expect("nonzero gcd").0;
        if part.degree().unwrap_or(0) > 0 {
            parts.push((part, i));
        }
        c = c.divrem(&y).expect("nonzero gcd").0;
        w = y;
        i += 1;
    }
    if c.degree().unwrap_or(0) > 0 {
        // remaining factors all have multiplicity divisible by p
        let h = pth_root(&c);
        for (s, e) in squarefree_parts(&h) {
            parts.push((s, e * p));
        }
    }
    parts
}

/// Distinct-degree stage: split a monic squarefree polynomial into products
/// of irreducibles of equal degree, returned as (product, degree).
fn distinct_degree(f: &Poly) -> Vec<(Poly, usize)> {
    let q = f.field().order();
    let mut out = vec![];
    let mut rest = f.clone();
    let mut h = Poly::x(f.field());
    let mut d = 0;
    while rest.degree().map_or(false, |deg| deg >= 1) {
        d += 1;
        if 2 * d > rest.degree().unwrap() {
            out.push((rest.clone(), rest.degree().unwrap()));
            break;
        }
        h = h.pow_mod(q, &rest).expect("nonzero rest");
        let g = h.sub(&Poly::x(f.field())).gcd(&rest);
        if g.degree().unwrap_or(0) > 0 {
            out.push((g.clone(), d));
            rest = rest.divrem(&g).expect("nonzero gcd").0;
            h = h.rem(&rest).expect("degree checked");
        }
    }
    out
}

/// h^((q^d - 1)/2) mod g without big-integer exponents, using
/// (q^d - 1)/2 = ((q-1)/2) * (1 + q + ... + q^(d-1)).
fn half_order_power(h: &Poly, d: usize, g: &Poly) -> Result<Poly> {
    let q = h.field().order();
    debug_assert!(q % 2 == 1);
    let mut acc = Poly::one(h.field());
    let mut frob = h.rem(g)?; // h^(q^i) mod g
    for i in 0..d {
        if i > 0 {
            frob = frob.pow_mod(q, g)?;
        }
        acc = acc.mul(&frob.pow_mod((q - 1) / 2, g)?).rem(g)?;
    }
    Ok(acc)
}

/// Trace map for even q: h + h^2 + h^4 + ... over GF(2), totalling
/// extension-degree(q^d over GF(2)) terms.
fn trace_map(h: &Poly, d: usize, g: &Poly) -> Result<Poly> {
    let m = h.field().extension_degree() as usize;
    let mut acc = h.rem(g)?;
    let mut t = acc.clone();
    for _ in 1..(d * m) {
        t = t.mul(&t).rem(g)?;
        acc = acc.add(&t);
    }
    Ok(acc)
}

/// Equal-degree splitting (Cantor–Zassenhaus) of a monic squarefree product
/// of irreducibles all of degree d.
fn equal_degree(g: &Poly, d: usize, rng: &mut ChaCha8Rng) -> Vec<Poly> {
    let deg = g.degree().expect("nonzero");
    if deg == d {
        return vec![g.clone()];
    }
    let field = g.field().clone();
    let q = field.order();
    loop {
        let codes: Vec<Elt> = (0..deg).map(|_| Elt(rng.gen_range(0..q))).collect();
        let h = Poly::from_coeffs(&field, codes);
        if h.is_zero() {
            continue;
        }
        let shared = h.gcd(g);
        let candidate = if shared.degree().unwrap_or(0) > 0 && shared.degree() != g.degree() {
            shared
        } else {
            let w = if q % 2 == 1 {
                let w = half_order_power(&h, d, g).expect("monic modulus");
                w.sub(&Poly::one(&field))
            } else {
                trace_map(&h, d, g).expect("monic modulus")
            };
            let u = w.gcd(g);
            if u.degree().unwrap_or(0) == 0 || u.degree() == g.degree() {
                continue;
            }
            u
        };
        let rest = g.divrem(&candidate).expect("nonzero factor").0;
        let mut out = equal_degree(&candidate, d, rng);
        out.extend(equal_degree(&rest, d, rng));
        return out;
    }
}

/// A full factorization: `unit * prod(factor^multiplicity)` reproduces the
/// input exactly; factors are monic, irreducible, pairwise distinct, and
/// listed in a canonical order (by degree, then by coefficient codes with
/// the leading term most significant).
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Factorization {
    pub unit: Elt,
    pub factors: Vec<(Poly, usize)>,
}

impl Factorization {
    /// Re-multiply everything (used by tests and assertions).
    pub fn product(&self, field: &Field) -> Poly {
        let mut acc = Poly::constant(field, self.unit);
        for (f, e) in &self.factors {
            for _ in 0..*e {
                acc = acc.mul(f);
            }
        }
        acc
    }
}

/// Factor a nonzero polynomial into monic irreducibles.
pub fn factor(f: &Poly) -> Result<Factorization> {
    if f.is_zero() {
        return Err(Error::ZeroPolynomial);
    }
    let unit = f.lead();
    let monic = f.monic()?;
    let mut rng = ChaCha8Rng::seed_from_u64(FACTOR_SEED);
    let mut factors: Vec<(Poly, usize)> = vec![];
    for (part, mult) in squarefree_parts(&monic) {
        for (prod, d) in distinct_degree(&part) {
            for irr in equal_degree(&prod, d, &mut rng) {
                factors.push((irr, mult));
            }
        }
    }
    factors.sort_by(|(a, _), (b, _)| {
        let da = a.degree().unwrap_or(0);
        let db = b.degree().unwrap_or(0);
        da.cmp(&db).then_with(|| {
            let ca = a.codes();
            let cb = b.codes();
            ca.iter().rev().cmp(cb.iter().rev())
        })
    });
    Ok(Factorization { unit, factors })
}

/// Largest e with (x - lambda)^e dividing f, by repeated synthetic division.
pub fn root_multiplicity(f: &Poly, lambda: Elt) -> Result<usize> {
    if f.is_zero() {
        return Err(Error::ZeroPolynomial);
    }
    let mut e = 0;
    let mut g = f.clone();
    while !g.is_zero() {
        let (quo, rem) = g.divrem_linear(lambda);
        if !rem.is_zero() {
            break;
        }
        e += 1;
        g = quo;
    }
    Ok(e)
}
