//! Dense matrices over a [`Field`].
//!
//! Rows are stored packed (see [`crate::packed`]) so that the row operations
//! driving elimination and products run word-parallel. Vectors are row vectors
//! and matrices act on the right.
//!
//! Elimination is deterministic: pivot on the leftmost column that still has a
//! nonzero entry, take the topmost such row, scale the pivot to 1.

use std::cmp::Ordering;
use std::fmt;

use crate::error::{Error, Result};
use crate::gf::{Field, GfElement};
use crate::packed::RowKernel;
use rand::Rng;

#[derive(Clone, PartialEq, Eq, Hash)]
pub struct GfMatrix {
    field: Field,
    rows: usize,
    cols: usize,
    stride: usize,
    data: Vec<u64>,
}

/// Reduced row echelon form together with the row operations that produced it.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct RrefResult {
    pub rref: GfMatrix,
    pub rank: usize,
    pub pivot_cols: Vec<usize>,
    /// Invertible `rows x rows` matrix with `transform * input == rref`.
    pub transform: GfMatrix,
}

struct Elimination {
    rank: usize,
    pivot_cols: Vec<usize>,
    /// Determinant of the eliminated square matrix; meaningless otherwise.
    det: u8,
}

impl GfMatrix {
    pub fn zeros(field: Field, rows: usize, cols: usize) -> GfMatrix {
        let stride = RowKernel::new(field).stride(cols);
        GfMatrix { field, rows, cols, stride, data: vec![0; rows * stride] }
    }

    pub fn identity(field: Field, n: usize) -> GfMatrix {
        let mut m = GfMatrix::zeros(field, n, n);
        for i in 0..n {
            m.set(i, i, 1);
        }
        m
    }

    /// Builds a matrix from row vectors of element indices. All rows must have
    /// length `cols` and every entry must lie in the field.
    pub fn from_rows<R: AsRef<[u8]>>(field: Field, cols: usize, rows: &[R]) -> Result<GfMatrix> {
        let mut m = GfMatrix::zeros(field, rows.len(), cols);
        for (i, r) in rows.iter().enumerate() {
            let r = r.as_ref();
            if r.len() != cols {
                return Err(Error::DimensionMismatch {
                    op: "from_rows",
                    left: (rows.len(), cols),
                    right: (i, r.len()),
                });
            }
            for (j, &v) in r.iter().enumerate() {
                if !field.contains(v) {
                    return Err(Error::ElementOutOfRange { value: v as u32, order: field.order() });
                }
                m.set(i, j, v);
            }
        }
        Ok(m)
    }

    /// Uniformly random matrix.
    pub fn random<R: Rng + ?Sized>(rng: &mut R, field: Field, rows: usize, cols: usize) -> GfMatrix {
        let q = field.order() as u8;
        GfMatrix::from_fn(field, rows, cols, |_, _| rng.gen_range(0..q))
    }

    /// Uniformly random invertible `n x n` matrix, by rejection sampling.
    pub fn random_invertible<R: Rng + ?Sized>(rng: &mut R, field: Field, n: usize) -> GfMatrix {
        loop {
            let m = GfMatrix::random(rng, field, n, n);
            if m.rank() == n {
                return m;
            }
        }
    }

    pub fn from_fn(field: Field, rows: usize, cols: usize, mut f: impl FnMut(usize, usize) -> u8) -> GfMatrix {
        let mut m = GfMatrix::zeros(field, rows, cols);
        for i in 0..rows {
            for j in 0..cols {
                let v = f(i, j);
                debug_assert!(field.contains(v));
                m.set(i, j, v);
            }
        }
        m
    }

    #[inline]
    pub fn field(&self) -> Field {
        self.field
    }

    #[inline]
    pub fn rows(&self) -> usize {
        self.rows
    }

    #[inline]
    pub fn cols(&self) -> usize {
        self.cols
    }

    pub fn shape(&self) -> (usize, usize) {
        (self.rows, self.cols)
    }

    pub fn is_square(&self) -> bool {
        self.rows == self.cols
    }

    #[inline]
    pub(crate) fn kernel(&self) -> RowKernel {
        RowKernel::new(self.field)
    }

    #[inline]
    pub(crate) fn row_words(&self, i: usize) -> &[u64] {
        &self.data[i * self.stride..(i + 1) * self.stride]
    }

    #[inline]
    fn row_words_mut(&mut self, i: usize) -> &mut [u64] {
        &mut self.data[i * self.stride..(i + 1) * self.stride]
    }

    #[inline]
    pub fn get(&self, i: usize, j: usize) -> u8 {
        assert!(i < self.rows && j < self.cols, "index ({i}, {j}) out of bounds");
        self.kernel().get(self.row_words(i), j)
    }

    pub fn element(&self, i: usize, j: usize) -> GfElement {
        GfElement::new(self.field, self.get(i, j)).expect("entries are valid")
    }

    #[inline]
    pub fn set(&mut self, i: usize, j: usize, v: u8) {
        assert!(i < self.rows && j < self.cols, "index ({i}, {j}) out of bounds");
        assert!(self.field.contains(v), "value {v} not in {}", self.field);
        let k = self.kernel();
        k.set(self.row_words_mut(i), j, v);
    }

    pub fn row(&self, i: usize) -> Vec<u8> {
        self.kernel().unpack(self.row_words(i), self.cols)
    }

    pub fn to_rows(&self) -> Vec<Vec<u8>> {
        (0..self.rows).map(|i| self.row(i)).collect()
    }

    pub fn is_zero(&self) -> bool {
        self.data.iter().all(|&w| w == 0)
    }

    pub fn row_is_zero(&self, i: usize) -> bool {
        self.row_words(i).iter().all(|&w| w == 0)
    }

    pub fn row_weight(&self, i: usize) -> usize {
        self.kernel().weight(self.row_words(i))
    }

    /// `row[dst] += c * row[src]`.
    pub(crate) fn add_row_multiple(&mut self, dst: usize, src: usize, c: u8) {
        if c == 0 {
            return;
        }
        assert_ne!(dst, src);
        let k = self.kernel();
        let s = self.stride;
        if dst < src {
            let (a, b) = self.data.split_at_mut(src * s);
            k.add_scaled(&mut a[dst * s..(dst + 1) * s], &b[..s], c);
        } else {
            let (a, b) = self.data.split_at_mut(dst * s);
            k.add_scaled(&mut b[..s], &a[src * s..(src + 1) * s], c);
        }
    }

    pub(crate) fn scale_row(&mut self, i: usize, c: u8) {
        let k = self.kernel();
        k.scale(self.row_words_mut(i), c);
    }

    pub(crate) fn swap_rows(&mut self, a: usize, b: usize) {
        if a == b {
            return;
        }
        let s = self.stride;
        let (lo, hi) = (a.min(b), a.max(b));
        let (x, y) = self.data.split_at_mut(hi * s);
        x[lo * s..(lo + 1) * s].swap_with_slice(&mut y[..s]);
    }

    /// Appends a packed row of matching stride.
    pub(crate) fn push_row_words(&mut self, words: &[u64]) {
        debug_assert_eq!(words.len(), self.stride);
        self.data.extend_from_slice(words);
        self.rows += 1;
    }

    pub fn push_row(&mut self, entries: &[u8]) -> Result<()> {
        if entries.len() != self.cols {
            return Err(Error::DimensionMismatch {
                op: "push_row",
                left: self.shape(),
                right: (1, entries.len()),
            });
        }
        if let Some(&bad) = entries.iter().find(|&&v| !self.field.contains(v)) {
            return Err(Error::ElementOutOfRange { value: bad as u32, order: self.field.order() });
        }
        let words = self.kernel().pack(entries);
        self.push_row_words(&words);
        Ok(())
    }

    fn check_field(&self, other: &GfMatrix) -> Result<()> {
        if self.field == other.field {
            Ok(())
        } else {
            Err(Error::FieldMismatch)
        }
    }

    pub fn transpose(&self) -> GfMatrix {
        GfMatrix::from_fn(self.field, self.cols, self.rows, |i, j| self.get(j, i))
    }

    /// Entrywise conjugation (identity except on GF(4)).
    pub fn conj(&self) -> GfMatrix {
        if !self.field.is_gf4() {
            return self.clone();
        }
        let mut out = self.clone();
        // conj swaps w and w^2: (lo, hi) -> (lo ^ hi, hi)
        for pair in out.data.chunks_exact_mut(2) {
            pair[0] ^= pair[1];
        }
        out
    }

    /// Conjugate transpose.
    pub fn conj_transpose(&self) -> GfMatrix {
        let f = self.field;
        GfMatrix::from_fn(f, self.cols, self.rows, |i, j| f.conj(self.get(j, i)))
    }

    /// `G*`: the transpose over prime fields, the conjugate transpose over GF(4).
    pub fn star(&self) -> GfMatrix {
        if self.field.is_gf4() {
            self.conj_transpose()
        } else {
            self.transpose()
        }
    }

    pub fn matmul(&self, other: &GfMatrix) -> Result<GfMatrix> {
        self.check_field(other)?;
        if self.cols != other.rows {
            return Err(Error::DimensionMismatch {
                op: "matmul",
                left: self.shape(),
                right: other.shape(),
            });
        }
        let k = self.kernel();
        let mut out = GfMatrix::zeros(self.field, self.rows, other.cols);
        let s = out.stride;
        for i in 0..self.rows {
            let dst = &mut out.data[i * s..(i + 1) * s];
            let lhs = self.row_words(i);
            for j in 0..self.cols {
                let c = k.get(lhs, j);
                if c != 0 {
                    k.add_scaled(dst, other.row_words(j), c);
                }
            }
        }
        Ok(out)
    }

    fn zip_with(&self, other: &GfMatrix, op: &'static str, c: u8) -> Result<GfMatrix> {
        self.check_field(other)?;
        if self.shape() != other.shape() {
            return Err(Error::DimensionMismatch { op, left: self.shape(), right: other.shape() });
        }
        let mut out = self.clone();
        let k = self.kernel();
        for i in 0..self.rows {
            let s = self.stride;
            k.add_scaled(&mut out.data[i * s..(i + 1) * s], other.row_words(i), c);
        }
        Ok(out)
    }

    pub fn add(&self, other: &GfMatrix) -> Result<GfMatrix> {
        self.zip_with(other, "add", 1)
    }

    pub fn sub(&self, other: &GfMatrix) -> Result<GfMatrix> {
        self.zip_with(other, "sub", self.field.neg(1))
    }

    pub fn scale(&self, c: u8) -> GfMatrix {
        let mut out = self.clone();
        for i in 0..out.rows {
            out.scale_row(i, c);
        }
        out
    }

    /// `[self | other]`.
    pub fn hstack(&self, other: &GfMatrix) -> Result<GfMatrix> {
        self.check_field(other)?;
        if self.rows != other.rows {
            return Err(Error::DimensionMismatch { op: "hstack", left: self.shape(), right: other.shape() });
        }
        let n = self.cols;
        Ok(GfMatrix::from_fn(self.field, self.rows, n + other.cols, |i, j| {
            if j < n {
                self.get(i, j)
            } else {
                other.get(i, j - n)
            }
        }))
    }

    /// `[self; other]`.
    pub fn vstack(&self, other: &GfMatrix) -> Result<GfMatrix> {
        self.check_field(other)?;
        if self.cols != other.cols {
            return Err(Error::DimensionMismatch { op: "vstack", left: self.shape(), right: other.shape() });
        }
        let mut out = self.clone();
        out.data.extend_from_slice(&other.data);
        out.rows += other.rows;
        Ok(out)
    }

    pub fn select_rows(&self, idx: &[usize]) -> GfMatrix {
        let mut out = GfMatrix::zeros(self.field, 0, self.cols);
        for &i in idx {
            out.push_row_words(self.row_words(i));
        }
        out
    }

    pub fn row_range(&self, range: std::ops::Range<usize>) -> GfMatrix {
        let idx: Vec<usize> = range.collect();
        self.select_rows(&idx)
    }

    pub fn select_columns(&self, idx: &[usize]) -> GfMatrix {
        GfMatrix::from_fn(self.field, self.rows, idx.len(), |i, j| self.get(i, idx[j]))
    }

    pub fn column_range(&self, range: std::ops::Range<usize>) -> GfMatrix {
        let idx: Vec<usize> = range.collect();
        self.select_columns(&idx)
    }

    /// Drops the listed columns (duplicates allowed, order irrelevant).
    pub fn delete_columns(&self, idx: &[usize]) -> Result<GfMatrix> {
        let mut drop = vec![false; self.cols];
        for &j in idx {
            if j >= self.cols {
                return Err(Error::ColumnOutOfRange { index: j, len: self.cols });
            }
            drop[j] = true;
        }
        let keep: Vec<usize> = (0..self.cols).filter(|&j| !drop[j]).collect();
        Ok(self.select_columns(&keep))
    }

    /// Gauss-Jordan elimination in place, mirroring every row operation onto
    /// `companion` (which must have the same number of rows).
    fn eliminate(&mut self, mut companion: Option<&mut GfMatrix>, reduce_above: bool) -> Elimination {
        let f = self.field;
        let k = self.kernel();
        let mut det = 1u8;
        let mut pivot_cols = Vec::new();
        let mut r = 0;
        for col in 0..self.cols {
            if r == self.rows {
                break;
            }
            let Some(p) = (r..self.rows).find(|&i| k.get(self.row_words(i), col) != 0) else {
                continue;
            };
            if p != r {
                self.swap_rows(p, r);
                if let Some(c) = companion.as_deref_mut() {
                    c.swap_rows(p, r);
                }
                det = f.neg(det);
            }
            let pivot = k.get(self.row_words(r), col);
            det = f.mul(det, pivot);
            let inv = f.inv(pivot).expect("pivot is nonzero");
            self.scale_row(r, inv);
            if let Some(c) = companion.as_deref_mut() {
                c.scale_row(r, inv);
            }
            let start = if reduce_above { 0 } else { r + 1 };
            for i in start..self.rows {
                if i == r {
                    continue;
                }
                let e = k.get(self.row_words(i), col);
                if e != 0 {
                    let m = f.neg(e);
                    self.add_row_multiple(i, r, m);
                    if let Some(c) = companion.as_deref_mut() {
                        c.add_row_multiple(i, r, m);
                    }
                }
            }
            pivot_cols.push(col);
            r += 1;
        }
        Elimination { rank: r, pivot_cols, det }
    }

    pub fn rref(&self) -> RrefResult {
        let mut rref = self.clone();
        let mut transform = GfMatrix::identity(self.field, self.rows);
        let e = rref.eliminate(Some(&mut transform), true);
        debug_assert_eq!(transform.matmul(self).as_ref(), Ok(&rref), "transform * input != rref");
        RrefResult { rref, rank: e.rank, pivot_cols: e.pivot_cols, transform }
    }

    /// Reduced row echelon form with zero rows removed.
    pub fn row_basis(&self) -> GfMatrix {
        let mut m = self.clone();
        let e = m.eliminate(None, true);
        m.data.truncate(e.rank * m.stride);
        m.rows = e.rank;
        m
    }

    pub fn rank(&self) -> usize {
        let mut m = self.clone();
        m.eliminate(None, false).rank
    }

    pub fn inverse(&self) -> Result<GfMatrix> {
        if !self.is_square() {
            return Err(Error::NotSquare(self.rows, self.cols));
        }
        let r = self.rref();
        if r.rank < self.rows {
            return Err(Error::Singular);
        }
        Ok(r.transform)
    }

    pub fn determinant(&self) -> Result<u8> {
        if !self.is_square() {
            return Err(Error::NotSquare(self.rows, self.cols));
        }
        let mut m = self.clone();
        let e = m.eliminate(None, false);
        Ok(if e.rank == self.rows { e.det } else { 0 })
    }

    /// Basis (as rows) of `{x : x * self = 0}`; it has `rows - rank` rows.
    pub fn left_kernel(&self) -> GfMatrix {
        let r = self.rref();
        r.transform.row_range(r.rank..self.rows)
    }

    /// Whether every row of `other` lies in the row space of `self`.
    pub fn row_space_contains(&self, other: &GfMatrix) -> Result<bool> {
        self.check_field(other)?;
        if self.cols != other.cols {
            return Err(Error::DimensionMismatch { op: "row_space_contains", left: self.shape(), right: other.shape() });
        }
        let r = self.rank();
        Ok(self.vstack(other)?.rank() == r)
    }

    pub fn same_row_space(&self, other: &GfMatrix) -> bool {
        self.field == other.field && self.cols == other.cols && self.row_basis() == other.row_basis()
    }

    /// Row-major lexicographic order on entries; shapes compare first.
    pub fn lex_cmp(&self, other: &GfMatrix) -> Ordering {
        self.shape().cmp(&other.shape()).then_with(|| {
            for i in 0..self.rows {
                for j in 0..self.cols {
                    match self.get(i, j).cmp(&other.get(i, j)) {
                        Ordering::Equal => {}
                        o => return o,
                    }
                }
            }
            Ordering::Equal
        })
    }
}

/// `det(a) * det(d - c a^-1 b)`, the determinant of `[[a, b], [c, d]]` for
/// invertible `a`.
pub fn schur_det(a: &GfMatrix, b: &GfMatrix, c: &GfMatrix, d: &GfMatrix) -> Result<u8> {
    let (n, m) = (a.rows(), d.rows());
    let shapes_ok = a.is_square()
        && d.is_square()
        && b.shape() == (n, m)
        && c.shape() == (m, n);
    if !shapes_ok {
        return Err(Error::DimensionMismatch { op: "schur_det", left: a.shape(), right: d.shape() });
    }
    let a_inv = a.inverse().map_err(|e| match e {
        Error::Singular => Error::SchurPivotSingular,
        other => other,
    })?;
    let complement = d.sub(&c.matmul(&a_inv)?.matmul(b)?)?;
    let f = a.field();
    Ok(f.mul(a.determinant()?, complement.determinant()?))
}

/// Assembles `[[a, b], [c, d]]`.
pub fn block_matrix(a: &GfMatrix, b: &GfMatrix, c: &GfMatrix, d: &GfMatrix) -> Result<GfMatrix> {
    a.hstack(b)?.vstack(&c.hstack(d)?)
}

impl fmt::Debug for GfMatrix {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        writeln!(f, "GfMatrix over {} ({}x{}) [", self.field, self.rows, self.cols)?;
        for i in 0..self.rows {
            let row: Vec<String> = self.row(i).into_iter().map(|v| self.field.symbol(v)).collect();
            writeln!(f, "  {}", row.join(" "))?;
        }
        write!(f, "]")
    }
}
