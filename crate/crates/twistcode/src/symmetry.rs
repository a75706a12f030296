//! Permutation symmetries of C(A,a): the product action of permutations
//! commuting with A, the quasicyclic structure induced by a semiregular
//! such permutation, and transposition invariance.
//!
//! Permutations are `Vec<usize>` of 0-based images (σ[i] is the image of
//! i); the CLI-facing cycle notation is 1-based.

use serde::Serialize;

use crate::code::TwistedCode;
use crate::error::{Error, Result};
use crate::field::Elt;
use crate::matrix::{Mat, VecN};

pub type Perm = Vec<usize>;

/// P_σ with P_σ·e_j = e_{σ(j)}.
pub fn perm_matrix(field: &crate::field::Field, sigma: &Perm) -> Mat {
    let n = sigma.len();
    let mut m = Mat::zero(field, n, n);
    for j in 0..n {
        m.set(sigma[j], j, Elt::ONE);
    }
    m
}

/// (σ∘τ)(i) = σ(τ(i)), so that P_{σ∘τ} = P_σ·P_τ.
pub fn compose(sigma: &Perm, tau: &Perm) -> Perm {
    tau.iter().map(|&i| sigma[i]).collect()
}

pub fn identity_perm(n: usize) -> Perm {
    (0..n).collect()
}

/// P_σ·A = A·P_σ, equivalently A[σ(i)][σ(j)] = A[i][j] for all i, j.
pub fn is_commuting(a_mat: &Mat, sigma: &Perm) -> bool {
    let n = a_mat.rows();
    if sigma.len() != n {
        return false;
    }
    for i in 0..n {
        for j in 0..n {
            if a_mat.get(sigma[i], sigma[j]) != a_mat.get(i, j) {
                return false;
            }
        }
    }
    true
}

fn next_permutation(p: &mut Perm) -> bool {
    let n = p.len();
    if n < 2 {
        return false;
    }
    let mut i = n - 1;
    while i > 0 && p[i - 1] >= p[i] {
        i -= 1;
    }
    if i == 0 {
        return false;
    }
    let mut j = n - 1;
    while p[j] <= p[i - 1] {
        j -= 1;
    }
    p.swap(i - 1, j);
    p[i..].reverse();
    true
}

/// All permutations commuting with A, in lexicographic order, by brute
/// force over S_n (refused above `n_cap`).
pub fn commuting_permutations(a_mat: &Mat, n_cap: usize) -> Result<Vec<Perm>> {
    if !a_mat.is_square() {
        return Err(Error::ShapeMismatch("permutation scan of a non-square matrix".into()));
    }
    let n = a_mat.rows();
    if n > n_cap {
        return Err(Error::Precondition(format!(
            "brute-force scan of S_{n} refused (cap {n_cap})"
        )));
    }
    let mut result = Vec::new();
    let mut p = identity_perm(n);
    loop {
        if is_commuting(a_mat, &p) {
            result.push(p.clone());
        }
        if !next_permutation(&mut p) {
            break;
        }
    }
    Ok(result)
}

/// The induced permutation of the n² column-major coordinates: the
/// transformed codeword reads old index `map[c]` at index c, matching
/// B ↦ P_σ⁻¹·B·P_τ whose (i,j) entry is B(σ(i), τ(j)).
pub fn coordinate_perm(sigma: &Perm, tau: &Perm, n: usize) -> Vec<usize> {
    let mut map = vec![0usize; n * n];
    for j in 0..n {
        for i in 0..n {
            map[j * n + i] = tau[j] * n + sigma[i];
        }
    }
    map
}

/// Apply the product action B ↦ P_σ⁻¹·B·P_τ entry-wise.
pub fn apply_product_action(b: &Mat, sigma: &Perm, tau: &Perm) -> Mat {
    let n = b.rows();
    let mut out = Mat::zero(b.field(), n, n);
    for i in 0..n {
        for j in 0..n {
            out.set(i, j, b.get(sigma[i], tau[j]));
        }
    }
    out
}

/// True iff P⁻¹BQ stays in the code for every basis element B, where P, Q
/// are the permutation matrices of σ, τ.  Both must commute with A.
pub fn product_action_invariance(
    code: &TwistedCode,
    sigma: &Perm,
    tau: &Perm,
) -> Result<bool> {
    if !is_commuting(code.a_mat(), sigma) || !is_commuting(code.a_mat(), tau) {
        return Err(Error::NotCommuting);
    }
    for b in code.basis() {
        if !code.contains(&apply_product_action(b, sigma, tau))? {
            return Ok(false);
        }
    }
    Ok(true)
}

/// Cycles of a permutation, each starting at its minimum element, sorted
/// by those minima.
pub fn cycles_of(sigma: &Perm) -> Vec<Vec<usize>> {
    let n = sigma.len();
    let mut seen = vec![false; n];
    let mut cycles = Vec::new();
    for start in 0..n {
        if seen[start] {
            continue;
        }
        let mut cycle = vec![start];
        seen[start] = true;
        let mut x = sigma[start];
        while x != start {
            seen[x] = true;
            cycle.push(x);
            x = sigma[x];
        }
        cycles.push(cycle);
    }
    cycles
}

/// Non-identity with all cycles of one common length.
pub fn is_semiregular(sigma: &Perm) -> bool {
    let cycles = cycles_of(sigma);
    let len = cycles[0].len();
    len > 1 && cycles.iter().all(|c| c.len() == len)
}

/// Which side of B the permutation acts on when inducing the coordinate
/// permutation for the quasicyclic report.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize)]
#[serde(rename_all = "lowercase")]
pub enum ActionSide {
    Rows,
    Cols,
}

/// The quasicyclic structure exposed by a semiregular σ commuting with A:
/// in the reordered coordinates, the induced action is the cyclic shift by
/// `ell`, and the code is closed under it.
#[derive(Clone, Debug, Serialize)]
pub struct QuasicyclicReport {
    pub ell: usize,
    pub cycle_len: usize,
    pub side: ActionSide,
    /// Old coordinate c ends up at position `reordering[c]`.
    pub reordering: Vec<usize>,
}

/// Verify σ (semiregular, commuting with A) makes C(A,a) equivalent to an
/// ℓ-quasicyclic code with ℓ = n²/L, L the common cycle length, and
/// produce the explicit coordinate reordering realizing the equivalence.
pub fn quasicyclic_report(
    code: &TwistedCode,
    sigma: &Perm,
    side: ActionSide,
) -> Result<QuasicyclicReport> {
    if !is_commuting(code.a_mat(), sigma) {
        return Err(Error::NotCommuting);
    }
    if !is_semiregular(sigma) {
        return Err(Error::NotSemiregular);
    }
    let n = code.n();
    let nn = n * n;
    // induced coordinate source map: acting on rows is (i,j) → (σ(i), j)
    let id = identity_perm(n);
    let map = match side {
        ActionSide::Rows => coordinate_perm(sigma, &id, n),
        ActionSide::Cols => coordinate_perm(&id, sigma, n),
    };
    // the action must preserve the code (it always does, since σ commutes
    // with A; verified rather than assumed)
    for b in code.basis() {
        let w = b.vec();
        let permuted: Vec<Elt> = (0..nn).map(|c| w.get(map[c])).collect();
        let pb = Mat::unvec(&VecN::from_elts(code.field(), permuted), n)?;
        if !code.contains(&pb)? {
            return Err(Error::Precondition(
                "induced coordinate action does not preserve the code".into(),
            ));
        }
    }
    let cycles = cycles_of(&map);
    let cycle_len = cycles[0].len();
    debug_assert!(cycles.iter().all(|c| c.len() == cycle_len));
    let ell = nn / cycle_len;
    debug_assert_eq!(ell, cycles.len());
    // cycle u, offset v ↦ u + ℓ·v turns `map` into the shift by ℓ
    let mut reordering = vec![0usize; nn];
    for (u, cycle) in cycles.iter().enumerate() {
        for (v, &c) in cycle.iter().enumerate() {
            reordering[c] = u + ell * v;
        }
    }
    for c in 0..nn {
        debug_assert_eq!(reordering[map[c]], (reordering[c] + ell) % nn);
    }
    // shift-closure of the reordered code, checked literally on the basis
    for b in code.basis() {
        let w = b.vec();
        let mut reordered = vec![Elt::ZERO; nn];
        for c in 0..nn {
            reordered[reordering[c]] = w.get(c);
        }
        let shifted: Vec<Elt> = (0..nn).map(|c| reordered[(c + ell) % nn]).collect();
        let mut back = vec![Elt::ZERO; nn];
        for c in 0..nn {
            back[c] = shifted[reordering[c]];
        }
        let candidate = Mat::unvec(&VecN::from_elts(code.field(), back), n)?;
        if !code.contains(&candidate)? {
            return Err(Error::Precondition(
                "reordered code is not closed under the shift".into(),
            ));
        }
    }
    Ok(QuasicyclicReport { ell, cycle_len, side, reordering })
}

/// True iff Bᵗ stays in the code for every basis element.
pub fn transposition_invariance(code: &TwistedCode) -> Result<bool> {
    for b in code.basis() {
        if !code.contains(&b.transpose())? {
            return Ok(false);
        }
    }
    Ok(true)
}

/// Parse 1-based cycle notation like "(1 3 2)(4 5)"; unmentioned points are
/// fixed.  Commas or spaces separate entries.
pub fn parse_cycles(s: &str, n: usize) -> Result<Perm> {
    let mut sigma = identity_perm(n);
    let mut mentioned = vec![false; n];
    let body = s.trim();
    let mut rest = body;
    while !rest.is_empty() {
        let Some(open) = rest.find('(') else {
            return Err(Error::BadPermutation(format!(
                "expected '(' at {rest:?}"
            )));
        };
        if !rest[..open].trim().is_empty() {
            return Err(Error::BadPermutation(format!(
                "unexpected text before cycle: {:?}",
                &rest[..open]
            )));
        }
        let Some(close) = rest.find(')') else {
            return Err(Error::BadPermutation("unclosed cycle".into()));
        };
        if close < open {
            return Err(Error::BadPermutation("')' before '('".into()));
        }
        let inner = &rest[open + 1..close];
        let mut cycle = Vec::new();
        for tok in inner.split(|c: char| c == ',' || c.is_whitespace()) {
            if tok.is_empty() {
                continue;
            }
            let v: usize = tok
                .parse()
                .map_err(|_| Error::BadPermutation(format!("bad entry {tok:?}")))?;
            if v < 1 || v > n {
                return Err(Error::BadPermutation(format!(
                    "entry {v} outside 1..={n}"
                )));
            }
            if mentioned[v - 1] {
                return Err(Error::BadPermutation(format!("entry {v} repeated")));
            }
            mentioned[v - 1] = true;
            cycle.push(v - 1);
        }
        for w in 0..cycle.len() {
            sigma[cycle[w]] = cycle[(w + 1) % cycle.len()];
        }
        rest = &rest[close + 1..];
        rest = rest.trim_start();
    }
    Ok(sigma)
}

/// Render in 1-based cycle notation; "()" for the identity.
pub fn format_cycles(sigma: &Perm) -> String {
    let cycles: Vec<Vec<usize>> =
        cycles_of(sigma).into_iter().filter(|c| c.len() > 1).collect();
    if cycles.is_empty() {
        return "()".into();
    }
    cycles
        .iter()
        .map(|c| {
            let inner: Vec<String> = c.iter().map(|&x| (x + 1).to_string()).collect();
            format!("({})", inner.join(" "))
        })
        .collect()
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::code::code_build;
    use crate::families::{all_ones, cycle_perm, sylvester};
    use crate::field::Field;
    use rand::{Rng, SeedableRng};
    use rand_chacha::ChaCha8Rng;

    fn mat(field: &Field, rows: &[&[u64]]) -> Mat {
        let rows: Vec<Vec<u64>> = rows.iter().map(|r| r.to_vec()).collect();
        Mat::from_rows(field, &rows).unwrap()
    }

    #[test]
    fn commuting_groups() {
        let f5 = Field::prime(5).unwrap();
        // J_n commutes with everything
        assert_eq!(commuting_permutations(&all_ones(&f5, 3), 8).unwrap().len(), 6);
        assert_eq!(commuting_permutations(&all_ones(&f5, 4), 8).unwrap().len(), 24);
        // path P_3: identity and the end-swap
        let p3 = mat(&f5, &[&[0, 1, 0], &[1, 0, 1], &[0, 1, 0]]);
        let g = commuting_permutations(&p3, 8).unwrap();
        assert_eq!(g, vec![vec![0, 1, 2], vec![2, 1, 0]]);
        // distinct diagonal: only the identity
        let d = mat(&f5, &[&[1, 0, 0], &[0, 2, 0], &[0, 0, 3]]);
        assert_eq!(commuting_permutations(&d, 8).unwrap(), vec![vec![0, 1, 2]]);
        // cap respected
        let big = Mat::identity(&f5, 9);
        assert!(commuting_permutations(&big, 8).is_err());
    }

    #[test]
    fn commuting_set_is_a_group() {
        let mut rng = ChaCha8Rng::seed_from_u64(67);
        let f3 = Field::prime(3).unwrap();
        for _ in 0..10 {
            let a = Mat::sample(&f3, 4, 4, &mut rng);
            let g = commuting_permutations(&a, 8).unwrap();
            assert!(g.contains(&identity_perm(4)));
            for s in &g {
                for t in &g {
                    assert!(g.contains(&compose(s, t)));
                }
            }
            // matrix-level check of the defining condition
            for s in &g {
                let p = perm_matrix(&f3, s);
                assert_eq!(p.mul(&a).unwrap(), a.mul(&p).unwrap());
            }
        }
    }

    #[test]
    fn product_action_preserves_all_ones_code() {
        let f5 = Field::prime(5).unwrap();
        let code = code_build(&all_ones(&f5, 3), Elt(2)).unwrap();
        let g = commuting_permutations(code.a_mat(), 8).unwrap();
        assert_eq!(g.len(), 6);
        for s in &g {
            for t in &g {
                assert!(product_action_invariance(&code, s, t).unwrap());
            }
        }
    }

    #[test]
    fn product_action_rejects_noncommuting() {
        let f5 = Field::prime(5).unwrap();
        let d = mat(&f5, &[&[1, 0, 0], &[0, 2, 0], &[0, 0, 3]]);
        let code = code_build(&d, Elt(2)).unwrap();
        let swap = vec![1, 0, 2];
        assert!(matches!(
            product_action_invariance(&code, &swap, &identity_perm(3)),
            Err(Error::NotCommuting)
        ));
        assert!(product_action_invariance(&code, &identity_perm(3), &identity_perm(3)).unwrap());
    }

    #[test]
    fn action_composition_law() {
        let mut rng = ChaCha8Rng::seed_from_u64(71);
        let f5 = Field::prime(5).unwrap();
        for _ in 0..40 {
            let b = Mat::sample(&f5, 4, 4, &mut rng);
            let random_perm = |rng: &mut ChaCha8Rng| {
                let mut p = identity_perm(4);
                for i in (1..4).rev() {
                    p.swap(i, rng.gen_range(0..=i));
                }
                p
            };
            let (s1, t1) = (random_perm(&mut rng), random_perm(&mut rng));
            let (s2, t2) = (random_perm(&mut rng), random_perm(&mut rng));
            let step = apply_product_action(&apply_product_action(&b, &s1, &t1), &s2, &t2);
            let joint = apply_product_action(&b, &compose(&s1, &s2), &compose(&t1, &t2));
            assert_eq!(step, joint);
        }
    }

    #[test]
    fn coordinate_perm_matches_entry_action() {
        let mut rng = ChaCha8Rng::seed_from_u64(73);
        let f3 = Field::prime(3).unwrap();
        let n = 3;
        let sigma = vec![1, 2, 0];
        let tau = vec![2, 0, 1];
        let map = coordinate_perm(&sigma, &tau, n);
        for _ in 0..20 {
            let b = Mat::sample(&f3, n, n, &mut rng);
            let w = b.vec();
            let acted = apply_product_action(&b, &sigma, &tau).vec();
            for c in 0..n * n {
                assert_eq!(acted.get(c), w.get(map[c]));
            }
        }
        // cycle type of the coordinate permutation from the grid action:
        // σ-cycle of length c₁ × τ-cycle of length c₂ splits into
        // gcd(c₁,c₂) cycles of length lcm(c₁,c₂)
        fn gcd(a: usize, b: usize) -> usize {
            if b == 0 { a } else { gcd(b, a % b) }
        }
        let mut expected: Vec<usize> = Vec::new();
        for cs in cycles_of(&sigma) {
            for ct in cycles_of(&tau) {
                let (c1, c2) = (cs.len(), ct.len());
                let l = c1 / gcd(c1, c2) * c2;
                for _ in 0..gcd(c1, c2) {
                    expected.push(l);
                }
            }
        }
        expected.sort_unstable();
        let mut got: Vec<usize> = cycles_of(&map).iter().map(|c| c.len()).collect();
        got.sort_unstable();
        assert_eq!(got, expected);
    }

    #[test]
    fn quasicyclic_for_cycle_matrices() {
        let f5 = Field::prime(5).unwrap();
        for n in [3usize, 4, 5] {
            let a = cycle_perm(&f5, n);
            let code = code_build(&a, Elt(2)).unwrap();
            let sigma: Perm = (0..n).map(|i| (i + 1) % n).collect();
            let report = quasicyclic_report(&code, &sigma, ActionSide::Rows).unwrap();
            assert_eq!(report.ell, n);
            assert_eq!(report.cycle_len, n);
            // the reordering is a genuine permutation of 0..n²
            let mut sorted = report.reordering.clone();
            sorted.sort_unstable();
            assert_eq!(sorted, (0..n * n).collect::<Vec<_>>());
            // column side works too
            let report = quasicyclic_report(&code, &sigma, ActionSide::Cols).unwrap();
            assert_eq!(report.ell, n);
        }
    }

    #[test]
    fn quasicyclic_for_double_transposition() {
        let f3 = Field::prime(3).unwrap();
        let code = code_build(&all_ones(&f3, 4), Elt(2)).unwrap();
        let sigma = parse_cycles("(1 2)(3 4)", 4).unwrap();
        let report = quasicyclic_report(&code, &sigma, ActionSide::Rows).unwrap();
        assert_eq!(report.ell, 8);
        assert_eq!(report.cycle_len, 2);
    }

    #[test]
    fn quasicyclic_rejections() {
        let f3 = Field::prime(3).unwrap();
        let code = code_build(&all_ones(&f3, 4), Elt(2)).unwrap();
        assert!(matches!(
            quasicyclic_report(&code, &identity_perm(4), ActionSide::Rows),
            Err(Error::NotSemiregular)
        ));
        // mixed cycle lengths (2,1,1)
        let sigma = parse_cycles("(1 2)", 4).unwrap();
        assert!(matches!(
            quasicyclic_report(&code, &sigma, ActionSide::Rows),
            Err(Error::NotSemiregular)
        ));
        // non-commuting σ
        let f5 = Field::prime(5).unwrap();
        let d = mat(&f5, &[&[1, 0], &[0, 2]]);
        let code = code_build(&d, Elt(2)).unwrap();
        let swap = vec![1, 0];
        assert!(matches!(
            quasicyclic_report(&code, &swap, ActionSide::Rows),
            Err(Error::NotCommuting)
        ));
    }

    #[test]
    fn transposition_invariance_cases() {
        let f3 = Field::prime(3).unwrap();
        // H_4 symmetric, a = −1
        let h4 = sylvester(&f3, 2).unwrap();
        let code = code_build(&h4, Elt(2)).unwrap();
        assert!(transposition_invariance(&code).unwrap());
        // skew-symmetric A, a = ±1
        let f5 = Field::prime(5).unwrap();
        let skew = mat(&f5, &[&[0, 1], &[4, 0]]);
        for a in [1u64, 4] {
            let code = code_build(&skew, Elt(a)).unwrap();
            assert!(transposition_invariance(&code).unwrap());
        }
        // random symmetric A, a = ±1
        let mut rng = ChaCha8Rng::seed_from_u64(79);
        for _ in 0..20 {
            let mut a_mat = Mat::sample(&f5, 3, 3, &mut rng);
            for i in 0..3 {
                for j in 0..i {
                    a_mat.set(i, j, a_mat.get(j, i));
                }
            }
            for a in [1u64, 4] {
                let code = code_build(&a_mat, Elt(a)).unwrap();
                assert!(transposition_invariance(&code).unwrap());
            }
        }
    }

    #[test]
    fn transposition_maps_between_twisted_pairs() {
        // B ↦ Bᵗ carries C(A,a) onto C(Aᵗ, a⁻¹)
        let mut rng = ChaCha8Rng::seed_from_u64(83);
        let f5 = Field::prime(5).unwrap();
        for _ in 0..20 {
            let a_mat = Mat::sample(&f5, 3, 3, &mut rng);
            let a = f5.sample_nonzero(&mut rng);
            let code = code_build(&a_mat, a).unwrap();
            let twin = code_build(&a_mat.transpose(), f5.inv(a).unwrap()).unwrap();
            assert_eq!(code.dim(), twin.dim());
            for b in code.basis() {
                assert!(twin.contains(&b.transpose()).unwrap());
            }
        }
    }

    #[test]
    fn cycle_notation_round_trips() {
        assert_eq!(parse_cycles("(1 2)(3 4)", 4).unwrap(), vec![1, 0, 3, 2]);
        assert_eq!(parse_cycles("(1 2 3)", 5).unwrap(), vec![1, 2, 0, 3, 4]);
        assert_eq!(parse_cycles("(1,3,2)", 3).unwrap(), vec![2, 0, 1]);
        assert_eq!(parse_cycles("", 3).unwrap(), identity_perm(3));
        assert_eq!(parse_cycles("(2)", 3).unwrap(), identity_perm(3));
        assert_eq!(format_cycles(&vec![1, 0, 3, 2]), "(1 2)(3 4)");
        assert_eq!(format_cycles(&identity_perm(4)), "()");
        let round = |s: &str, n: usize| {
            let p = parse_cycles(s, n).unwrap();
            assert_eq!(parse_cycles(&format_cycles(&p), n).unwrap(), p);
        };
        round("(1 4)(2 5)(3 6)", 6);
        round("(1 2 3 4 5)", 5);
        // rejections
        assert!(matches!(parse_cycles("(1 2", 3), Err(Error::BadPermutation(_))));
        assert!(matches!(parse_cycles("(0 1)", 3), Err(Error::BadPermutation(_))));
        assert!(matches!(parse_cycles("(4)", 3), Err(Error::BadPermutation(_))));
        assert!(matches!(parse_cycles("(1 1)", 3), Err(Error::BadPermutation(_))));
        assert!(matches!(parse_cycles("(1 2)(2 3)", 3), Err(Error::BadPermutation(_))));
        assert!(matches!(parse_cycles("x(1 2)", 3), Err(Error::BadPermutation(_))));
    }
}
