//! Dense matrix algebra over a [`Field`]: products, row reduction, kernels,
//! characteristic polynomials, Kronecker products, and the column-major
//! vectorization identifying n×n matrices with length-n² vectors.

use rand::Rng;

use crate::error::{Error, Result};
use crate::field::poly::Poly;
use crate::field::{Elt, Field};

/// Dense row-major matrix over one field.
#[derive(Clone, PartialEq, Eq, Debug)]
pub struct Mat {
    field: Field,
    rows: usize,
    cols: usize,
    entries: Vec<Elt>,
}

/// Column vector over one field.
#[derive(Clone, PartialEq, Eq, Debug)]
pub struct VecN {
    field: Field,
    entries: Vec<Elt>,
}

/// Result of row reduction: the reduced matrix, its rank, and the pivot
/// columns in order.
pub struct Rref {
    pub mat: Mat,
    pub rank: usize,
    pub pivots: Vec<usize>,
}

impl Mat {
    pub fn zero(field: &Field, rows: usize, cols: usize) -> Mat {
        Mat { field: field.clone(), rows, cols, entries: vec![Elt::ZERO; rows * cols] }
    }

    pub fn identity(field: &Field, n: usize) -> Mat {
        let mut m = Mat::zero(field, n, n);
        for i in 0..n {
            m.set(i, i, Elt::ONE);
        }
        m
    }

    /// Row-major entries as validated integer codes.
    pub fn from_codes(field: &Field, rows: usize, cols: usize, codes: &[u64]) -> Result<Mat> {
        if codes.len() != rows * cols {
            return Err(Error::ShapeMismatch(format!(
                "{} entries for a {rows}x{cols} matrix",
                codes.len()
            )));
        }
        let entries = codes.iter().map(|&c| field.elt(c)).collect::<Result<Vec<_>>>()?;
        Ok(Mat { field: field.clone(), rows, cols, entries })
    }

    pub fn from_rows(field: &Field, rows: &[Vec<u64>]) -> Result<Mat> {
        let r = rows.len();
        let c = rows.first().map_or(0, |row| row.len());
        if r == 0 || c == 0 || rows.iter().any(|row| row.len() != c) {
            return Err(Error::ShapeMismatch("ragged or empty row list".into()));
        }
        let flat: Vec<u64> = rows.iter().flatten().copied().collect();
        Mat::from_codes(field, r, c, &flat)
    }

    /// Matrix with entries drawn uniformly.
    pub fn sample<R: Rng + ?Sized>(field: &Field, rows: usize, cols: usize, rng: &mut R) -> Mat {
        let entries = (0..rows * cols).map(|_| field.sample(rng)).collect();
        Mat { field: field.clone(), rows, cols, entries }
    }

    pub fn field(&self) -> &Field {
        &self.field
    }

    pub fn rows(&self) -> usize {
        self.rows
    }

    pub fn cols(&self) -> usize {
        self.cols
    }

    pub fn is_square(&self) -> bool {
        self.rows == self.cols
    }

    #[inline]
    pub fn get(&self, i: usize, j: usize) -> Elt {
        self.entries[i * self.cols + j]
    }

    #[inline]
    pub fn set(&mut self, i: usize, j: usize, v: Elt) {
        self.entries[i * self.cols + j] = v;
    }

    pub fn entries(&self) -> &[Elt] {
        &self.entries
    }

    pub fn codes(&self) -> Vec<u64> {
        self.entries.iter().map(|e| e.0).collect()
    }

    pub fn row_codes(&self) -> Vec<Vec<u64>> {
        (0..self.rows)
            .map(|i| (0..self.cols).map(|j| self.get(i, j).0).collect())
            .collect()
    }

    pub fn is_zero(&self) -> bool {
        self.entries.iter().all(|e| e.is_zero())
    }

    /// Number of nonzero entries.
    pub fn hamming_weight(&self) -> usize {
        self.entries.iter().filter(|e| !e.is_zero()).count()
    }

    fn check_same_field(&self, other: &Mat) -> Result<()> {
        if self.field != other.field {
            return Err(Error::FieldMismatch);
        }
        Ok(())
    }

    pub fn add(&self, other: &Mat) -> Result<Mat> {
        self.check_same_field(other)?;
        if self.rows != other.rows || self.cols != other.cols {
            return Err(Error::ShapeMismatch(format!(
                "add {}x{} to {}x{}",
                self.rows, self.cols, other.rows, other.cols
            )));
        }
        let f = &self.field;
        let entries =
            self.entries.iter().zip(&other.entries).map(|(&a, &b)| f.add(a, b)).collect();
        Ok(Mat { field: f.clone(), rows: self.rows, cols: self.cols, entries })
    }

    pub fn sub(&self, other: &Mat) -> Result<Mat> {
        self.add(&other.neg())
    }

    pub fn neg(&self) -> Mat {
        let f = &self.field;
        let entries = self.entries.iter().map(|&a| f.neg(a)).collect();
        Mat { field: f.clone(), rows: self.rows, cols: self.cols, entries }
    }

    pub fn scalar_mul(&self, c: Elt) -> Mat {
        let f = &self.field;
        let entries = self.entries.iter().map(|&a| f.mul(a, c)).collect();
        Mat { field: f.clone(), rows: self.rows, cols: self.cols, entries }
    }

    /// Naive O(n^3) product.
    pub fn mul(&self, other: &Mat) -> Result<Mat> {
        self.check_same_field(other)?;
        if self.cols != other.rows {
            return Err(Error::ShapeMismatch(format!(
                "multiply {}x{} by {}x{}",
                self.rows, self.cols, other.rows, other.cols
            )));
        }
        let f = &self.field;
        let mut out = Mat::zero(f, self.rows, other.cols);
        for i in 0..self.rows {
            for k in 0..self.cols {
                let a = self.get(i, k);
                if a.is_zero() {
                    continue;
                }
                for j in 0..other.cols {
                    let v = f.add(out.get(i, j), f.mul(a, other.get(k, j)));
                    out.set(i, j, v);
                }
            }
        }
        Ok(out)
    }

    pub fn mul_vec(&self, v: &VecN) -> Result<VecN> {
        if self.field != v.field {
            return Err(Error::FieldMismatch);
        }
        if self.cols != v.len() {
            return Err(Error::ShapeMismatch(format!(
                "multiply {}x{} by a length-{} vector",
                self.rows,
                self.cols,
                v.len()
            )));
        }
        let f = &self.field;
        let entries = (0..self.rows)
            .map(|i| {
                let mut acc = Elt::ZERO;
                for j in 0..self.cols {
                    acc = f.add(acc, f.mul(self.get(i, j), v.entries[j]));
                }
                acc
            })
            .collect();
        Ok(VecN { field: f.clone(), entries })
    }

    pub fn transpose(&self) -> Mat {
        let mut out = Mat::zero(&self.field, self.cols, self.rows);
        for i in 0..self.rows {
            for j in 0..self.cols {
                out.set(j, i, self.get(i, j));
            }
        }
        out
    }

    pub fn trace(&self) -> Result<Elt> {
        if !self.is_square() {
            return Err(Error::ShapeMismatch("trace of a non-square matrix".into()));
        }
        let f = &self.field;
        let mut acc = Elt::ZERO;
        for i in 0..self.rows {
            acc = f.add(acc, self.get(i, i));
        }
        Ok(acc)
    }

    pub fn pow(&self, e: u64) -> Result<Mat> {
        if !self.is_square() {
            return Err(Error::ShapeMismatch("power of a non-square matrix".into()));
        }
        let mut result = Mat::identity(&self.field, self.rows);
        let mut base = self.clone();
        let mut e = e;
        while e > 0 {
            if e & 1 == 1 {
                result = result.mul(&base)?;
            }
            base = base.mul(&base)?;
            e >>= 1;
        }
        Ok(result)
    }

    /// Kronecker product: block matrix with (i,j) block self[i][j] * other.
    pub fn kron(&self, other: &Mat) -> Result<Mat> {
        self.check_same_field(other)?;
        let f = &self.field;
        let mut out = Mat::zero(f, self.rows * other.rows, self.cols * other.cols);
        for i1 in 0..self.rows {
            for j1 in 0..self.cols {
                let a = self.get(i1, j1);
                if a.is_zero() {
                    continue;
                }
                for i2 in 0..other.rows {
                    for j2 in 0..other.cols {
                        out.set(
                            i1 * other.rows + i2,
                            j1 * other.cols + j2,
                            f.mul(a, other.get(i2, j2)),
                        );
                    }
                }
            }
        }
        Ok(out)
    }

    /// Column-major flattening of a square matrix: coordinate j*n + i holds
    /// entry (i, j), i.e. the matrix is read column by column.
    pub fn vec(&self) -> VecN {
        let mut entries = Vec::with_capacity(self.rows * self.cols);
        for j in 0..self.cols {
            for i in 0..self.rows {
                entries.push(self.get(i, j));
            }
        }
        VecN { field: self.field.clone(), entries }
    }

    /// Inverse of [`Mat::vec`].
    pub fn unvec(v: &VecN, n: usize) -> Result<Mat> {
        if v.len() != n * n {
            return Err(Error::ShapeMismatch(format!(
                "unvec of a length-{} vector into {n}x{n}",
                v.len()
            )));
        }
        let mut out = Mat::zero(&v.field, n, n);
        for j in 0..n {
            for i in 0..n {
                out.set(i, j, v.entries[j * n + i]);
            }
        }
        Ok(out)
    }

    fn swap_rows(&mut self, a: usize, b: usize) {
        if a == b {
            return;
        }
        for j in 0..self.cols {
            self.entries.swap(a * self.cols + j, b * self.cols + j);
        }
    }

    /// Reduced row echelon form with deterministic pivoting (first nonzero
    /// entry in column order).
    pub fn rref(&self) -> Rref {
        let f = self.field.clone();
        let mut m = self.clone();
        let mut pivots = Vec::new();
        let mut r = 0;
        for c in 0..m.cols {
            let Some(pr) = (r..m.rows).find(|&i| !m.get(i, c).is_zero()) else {
                continue;
            };
            m.swap_rows(r, pr);
            let inv = f.inv(m.get(r, c)).expect("nonzero pivot");
            if inv != Elt::ONE {
                for j in c..m.cols {
                    m.set(r, j, f.mul(m.get(r, j), inv));
                }
            }
            for i in 0..m.rows {
                if i == r {
                    continue;
                }
                let factor = m.get(i, c);
                if factor.is_zero() {
                    continue;
                }
                for j in c..m.cols {
                    let v = f.sub(m.get(i, j), f.mul(factor, m.get(r, j)));
                    m.set(i, j, v);
                }
            }
            pivots.push(c);
            r += 1;
            if r == m.rows {
                break;
            }
        }
        Rref { mat: m, rank: r, pivots }
    }

    pub fn rank(&self) -> usize {
        self.rref().rank
    }

    /// Canonical basis of the right null space, derived from the rref free
    /// columns (free variable set to 1, other free variables 0), in
    /// ascending free-column order.
    pub fn kernel_basis(&self) -> Vec<VecN> {
        kernel_from_rref(&self.rref())
    }

    /// Characteristic polynomial det(xI - A), monic of degree n, via
    /// Hessenberg reduction (similarity transforms are division-safe over a
    /// field) and the leading-minor recurrence.
    pub fn charpoly(&self) -> Result<Poly> {
        if !self.is_square() {
            return Err(Error::ShapeMismatch("charpoly of a non-square matrix".into()));
        }
        let f = &self.field;
        let n = self.rows;
        if n == 0 {
            return Ok(Poly::one(f));
        }
        let mut h = self.clone();
        // reduce to upper Hessenberg form by similarity transforms
        for j in 0..n.saturating_sub(2) {
            let Some(pr) = ((j + 1)..n).find(|&i| !h.get(i, j).is_zero()) else {
                continue;
            };
            if pr != j + 1 {
                h.swap_rows(j + 1, pr);
                for rr in 0..n {
                    let tmp = h.get(rr, j + 1);
                    h.set(rr, j + 1, h.get(rr, pr));
                    h.set(rr, pr, tmp);
                }
            }
            let pinv = f.inv(h.get(j + 1, j)).expect("nonzero pivot");
            for i in (j + 2)..n {
                let factor = f.mul(h.get(i, j), pinv);
                if factor.is_zero() {
                    continue;
                }
                // row_i -= factor * row_{j+1}; col_{j+1} += factor * col_i
                for c in 0..n {
                    let v = f.sub(h.get(i, c), f.mul(factor, h.get(j + 1, c)));
                    h.set(i, c, v);
                }
                for rr in 0..n {
                    let v = f.add(h.get(rr, j + 1), f.mul(factor, h.get(rr, i)));
                    h.set(rr, j + 1, v);
                }
            }
        }
        // p_k = (x - h_kk) p_{k-1} - sum_{i<k} h_{i,k} (prod_{j=i+1..=k} h_{j,j-1}) p_{i-1}
        // (1-based indices; p_k is the charpoly of the leading k x k block)
        let mut ps = vec![Poly::one(f)];
        for k in 1..=n {
            let hkk = h.get(k - 1, k - 1);
            let lin = Poly::from_coeffs(f, vec![f.neg(hkk), Elt::ONE]);
            let mut pk = lin.mul(&ps[k - 1]);
            let mut beta = Elt::ONE;
            for i in (1..k).rev() {
                beta = f.mul(beta, h.get(i, i - 1));
                if beta.is_zero() {
                    break;
                }
                let coeff = f.mul(h.get(i - 1, k - 1), beta);
                if !coeff.is_zero() {
                    pk = pk.sub(&ps[i - 1].mul_scalar(coeff));
                }
            }
            ps.push(pk);
        }
        Ok(ps.pop().expect("n >= 1"))
    }

    /// Evaluate a polynomial at this (square) matrix.
    pub fn poly_eval(&self, p: &Poly) -> Result<Mat> {
        if !self.is_square() {
            return Err(Error::ShapeMismatch("polynomial of a non-square matrix".into()));
        }
        let f = &self.field;
        let n = self.rows;
        let mut acc = Mat::zero(f, n, n);
        for &c in p.coeffs().iter().rev() {
            acc = acc.mul(self)?;
            for i in 0..n {
                acc.set(i, i, f.add(acc.get(i, i), c));
            }
        }
        Ok(acc)
    }

    /// Reinterpret this matrix in an extension field.  Packed codes of a
    /// base field are valid codes of any extension built over it, so the
    /// entries carry over unchanged.
    pub fn lift(&self, to: &Field) -> Result<Mat> {
        if !to.extends(&self.field) {
            return Err(Error::Precondition(format!("{to} does not extend {}", self.field)));
        }
        Ok(Mat { field: to.clone(), rows: self.rows, cols: self.cols, entries: self.entries.clone() })
    }
}

/// Kernel basis computed from an existing row reduction (shared by
/// [`Mat::kernel_basis`] and the code constructor, which also needs the
/// pivot data).
pub fn kernel_from_rref(rref: &Rref) -> Vec<VecN> {
    let m = &rref.mat;
    let f = m.field().clone();
    let pivot_set: Vec<bool> = {
        let mut v = vec![false; m.cols()];
        for &c in &rref.pivots {
            v[c] = true;
        }
        v
    };
    let mut basis = Vec::with_capacity(m.cols() - rref.rank);
    for free in 0..m.cols() {
        if pivot_set[free] {
            continue;
        }
        let mut v = vec![Elt::ZERO; m.cols()];
        v[free] = Elt::ONE;
        for (r, &pc) in rref.pivots.iter().enumerate() {
            v[pc] = f.neg(m.get(r, free));
        }
        basis.push(VecN { field: f.clone(), entries: v });
    }
    basis
}

impl VecN {
    pub fn zero(field: &Field, n: usize) -> VecN {
        VecN { field: field.clone(), entries: vec![Elt::ZERO; n] }
    }

    pub fn from_codes(field: &Field, codes: &[u64]) -> Result<VecN> {
        let entries = codes.iter().map(|&c| field.elt(c)).collect::<Result<Vec<_>>>()?;
        Ok(VecN { field: field.clone(), entries })
    }

    pub fn from_elts(field: &Field, entries: Vec<Elt>) -> VecN {
        VecN { field: field.clone(), entries }
    }

    pub fn field(&self) -> &Field {
        &self.field
    }

    pub fn len(&self) -> usize {
        self.entries.len()
    }

    pub fn is_empty(&self) -> bool {
        self.entries.is_empty()
    }

    pub fn get(&self, i: usize) -> Elt {
        self.entries[i]
    }

    pub fn entries(&self) -> &[Elt] {
        &self.entries
    }

    pub fn codes(&self) -> Vec<u64> {
        self.entries.iter().map(|e| e.0).collect()
    }

    pub fn is_zero(&self) -> bool {
        self.entries.iter().all(|e| e.is_zero())
    }

    pub fn hamming_weight(&self) -> usize {
        self.entries.iter().filter(|e| !e.is_zero()).count()
    }

    pub fn add(&self, other: &VecN) -> Result<VecN> {
        if self.field != other.field {
            return Err(Error::FieldMismatch);
        }
        if self.len() != other.len() {
            return Err(Error::ShapeMismatch(format!(
                "add vectors of lengths {} and {}",
                self.len(),
                other.len()
            )));
        }
        let f = &self.field;
        let entries = self.entries.iter().zip(&other.entries).map(|(&a, &b)| f.add(a, b)).collect();
        Ok(VecN { field: f.clone(), entries })
    }

    pub fn scalar_mul(&self, c: Elt) -> VecN {
        let f = &self.field;
        let entries = self.entries.iter().map(|&a| f.mul(a, c)).collect();
        VecN { field: f.clone(), entries }
    }

    /// Outer product u * v^t.
    pub fn outer(&self, other: &VecN) -> Result<Mat> {
        if self.field != other.field {
            return Err(Error::FieldMismatch);
        }
        let f = &self.field;
        let mut out = Mat::zero(f, self.len(), other.len());
        for i in 0..self.len() {
            for j in 0..other.len() {
                out.set(i, j, f.mul(self.entries[i], other.entries[j]));
            }
        }
        Ok(out)
    }
}
