//! Dense matrices over a catalogued ring.

use std::fmt;
use std::ops::{Add, Mul, Neg, Sub};

use crate::error::{Error, Result};
use crate::ring::{Elem, RingSpec};

/// A dense row-major matrix over one [`RingSpec`].
///
/// Zero-row and zero-column matrices are legal and stand for zero maps
/// between free modules, one of which has rank zero.
#[derive(Clone, PartialEq, Eq, Hash)]
pub struct IntMatrix {
    ring: RingSpec,
    rows: usize,
    cols: usize,
    entries: Vec<Elem>,
}

impl IntMatrix {
    pub fn new(ring: RingSpec, rows: usize, cols: usize, entries: Vec<Elem>) -> Result<IntMatrix> {
        if entries.len() != rows * cols {
            return Err(Error::Dimension(format!("{} entries for a {rows}x{cols} matrix", entries.len())));
        }
        if let Some(e) = entries.iter().find(|e| e.ring() != ring) {
            return Err(Error::RingMismatch(ring, e.ring()));
        }
        Ok(IntMatrix { ring, rows, cols, entries })
    }

    pub fn zeros(ring: RingSpec, rows: usize, cols: usize) -> IntMatrix {
        IntMatrix { ring, rows, cols, entries: vec![ring.zero(); rows * cols] }
    }

    pub fn identity(ring: RingSpec, n: usize) -> IntMatrix {
        let mut m = IntMatrix::zeros(ring, n, n);
        for i in 0..n {
            m.entries[i * n + i] = ring.one();
        }
        m
    }

    pub fn diagonal(ring: RingSpec, rows: usize, cols: usize, diag: &[Elem]) -> IntMatrix {
        let mut m = IntMatrix::zeros(ring, rows, cols);
        for (i, d) in diag.iter().enumerate() {
            m.set(i, i, d.clone());
        }
        m
    }

    /// Integer matrix from literal rows. Panics on ragged input.
    pub fn from_i64(rows: &[&[i64]]) -> IntMatrix {
        let r = rows.len();
        let c = rows.first().map_or(0, |row| row.len());
        assert!(rows.iter().all(|row| row.len() == c), "ragged matrix literal");
        let entries = rows.iter().flat_map(|row| row.iter().map(|&x| Elem::from(x))).collect();
        IntMatrix { ring: RingSpec::Integers, rows: r, cols: c, entries }
    }

    /// Integer matrix with the given shape from row-major values.
    pub fn from_i64_shape(rows: usize, cols: usize, values: &[i64]) -> IntMatrix {
        assert_eq!(values.len(), rows * cols);
        IntMatrix { ring: RingSpec::Integers, rows, cols, entries: values.iter().map(|&x| Elem::from(x)).collect() }
    }

    pub fn from_rows(ring: RingSpec, rows: Vec<Vec<Elem>>) -> Result<IntMatrix> {
        let r = rows.len();
        let c = rows.first().map_or(0, Vec::len);
        if rows.iter().any(|row| row.len() != c) {
            return Err(Error::Dimension("ragged rows".into()));
        }
        IntMatrix::new(ring, r, c, rows.into_iter().flatten().collect())
    }

    /// Column vector.
    pub fn column_vector(ring: RingSpec, values: Vec<Elem>) -> IntMatrix {
        let n = values.len();
        IntMatrix { ring, rows: n, cols: 1, entries: values }
    }

    pub fn ring(&self) -> RingSpec {
        self.ring
    }

    pub fn rows(&self) -> usize {
        self.rows
    }

    pub fn cols(&self) -> usize {
        self.cols
    }

    pub fn shape(&self) -> (usize, usize) {
        (self.rows, self.cols)
    }

    pub fn entries(&self) -> &[Elem] {
        &self.entries
    }

    pub fn get(&self, i: usize, j: usize) -> &Elem {
        &self.entries[i * self.cols + j]
    }

    pub fn set(&mut self, i: usize, j: usize, value: Elem) {
        debug_assert_eq!(value.ring(), self.ring);
        self.entries[i * self.cols + j] = value;
    }

    pub fn is_zero(&self) -> bool {
        self.entries.iter().all(Elem::is_zero)
    }

    pub fn is_square(&self) -> bool {
        self.rows == self.cols
    }

    pub fn check_ring(&self, other: &IntMatrix) -> Result<()> {
        if self.ring != other.ring {
            return Err(Error::RingMismatch(self.ring, other.ring));
        }
        Ok(())
    }

    pub fn checked_mul(&self, other: &IntMatrix) -> Result<IntMatrix> {
        self.check_ring(other)?;
        if self.cols != other.rows {
            return Err(Error::Dimension(format!(
                "cannot multiply {}x{} by {}x{}",
                self.rows, self.cols, other.rows, other.cols
            )));
        }
        let mut out = IntMatrix::zeros(self.ring, self.rows, other.cols);
        for i in 0..self.rows {
            for k in 0..self.cols {
                let a = self.get(i, k);
                if a.is_zero() {
                    continue;
                }
                for j in 0..other.cols {
                    let b = other.get(k, j);
                    if b.is_zero() {
                        continue;
                    }
                    let idx = i * other.cols + j;
                    out.entries[idx] = out.entries[idx].add(&a.mul(b));
                }
            }
        }
        Ok(out)
    }

    pub fn checked_add(&self, other: &IntMatrix) -> Result<IntMatrix> {
        self.check_ring(other)?;
        if self.shape() != other.shape() {
            return Err(Error::Dimension(format!(
                "cannot add {}x{} and {}x{}",
                self.rows, self.cols, other.rows, other.cols
            )));
        }
        let entries = self.entries.iter().zip(&other.entries).map(|(a, b)| a.add(b)).collect();
        Ok(IntMatrix { entries, ..self.clone_shape() })
    }

    fn clone_shape(&self) -> IntMatrix {
        IntMatrix { ring: self.ring, rows: self.rows, cols: self.cols, entries: Vec::new() }
    }

    pub fn scale(&self, c: &Elem) -> IntMatrix {
        let entries = self.entries.iter().map(|a| a.mul(c)).collect();
        IntMatrix { entries, ..self.clone_shape() }
    }

    pub fn transpose(&self) -> IntMatrix {
        let mut out = IntMatrix::zeros(self.ring, self.cols, self.rows);
        for i in 0..self.rows {
            for j in 0..self.cols {
                out.set(j, i, self.get(i, j).clone());
            }
        }
        out
    }

    /// Horizontal concatenation `[A | B | ...]`.
    pub fn hstack(ring: RingSpec, rows: usize, blocks: &[&IntMatrix]) -> IntMatrix {
        let cols = blocks.iter().map(|b| b.cols).sum();
        let mut out = IntMatrix::zeros(ring, rows, cols);
        let mut offset = 0;
        for b in blocks {
            assert_eq!(b.rows, rows, "hstack row mismatch");
            assert_eq!(b.ring, ring, "hstack ring mismatch");
            out.paste(0, offset, b);
            offset += b.cols;
        }
        out
    }

    /// Vertical concatenation.
    pub fn vstack(ring: RingSpec, cols: usize, blocks: &[&IntMatrix]) -> IntMatrix {
        let rows = blocks.iter().map(|b| b.rows).sum();
        let mut out = IntMatrix::zeros(ring, rows, cols);
        let mut offset = 0;
        for b in blocks {
            assert_eq!(b.cols, cols, "vstack column mismatch");
            assert_eq!(b.ring, ring, "vstack ring mismatch");
            out.paste(offset, 0, b);
            offset += b.rows;
        }
        out
    }

    pub fn block_diag(ring: RingSpec, blocks: &[&IntMatrix]) -> IntMatrix {
        let rows = blocks.iter().map(|b| b.rows).sum();
        let cols = blocks.iter().map(|b| b.cols).sum();
        let mut out = IntMatrix::zeros(ring, rows, cols);
        let (mut r, mut c) = (0, 0);
        for b in blocks {
            out.paste(r, c, b);
            r += b.rows;
            c += b.cols;
        }
        out
    }

    /// Overwrites the block starting at `(row, col)` with `block`.
    pub fn paste(&mut self, row: usize, col: usize, block: &IntMatrix) {
        assert!(row + block.rows <= self.rows && col + block.cols <= self.cols, "paste out of range");
        for i in 0..block.rows {
            for j in 0..block.cols {
                self.set(row + i, col + j, block.get(i, j).clone());
            }
        }
    }

    pub fn block(&self, rows: std::ops::Range<usize>, cols: std::ops::Range<usize>) -> IntMatrix {
        let mut out = IntMatrix::zeros(self.ring, rows.len(), cols.len());
        for (oi, i) in rows.clone().enumerate() {
            for (oj, j) in cols.clone().enumerate() {
                out.set(oi, oj, self.get(i, j).clone());
            }
        }
        out
    }

    pub fn select_rows(&self, idx: &[usize]) -> IntMatrix {
        let mut out = IntMatrix::zeros(self.ring, idx.len(), self.cols);
        for (oi, &i) in idx.iter().enumerate() {
            for j in 0..self.cols {
                out.set(oi, j, self.get(i, j).clone());
            }
        }
        out
    }

    pub fn select_cols(&self, idx: &[usize]) -> IntMatrix {
        let mut out = IntMatrix::zeros(self.ring, self.rows, idx.len());
        for i in 0..self.rows {
            for (oj, &j) in idx.iter().enumerate() {
                out.set(i, oj, self.get(i, j).clone());
            }
        }
        out
    }

    pub fn column(&self, j: usize) -> IntMatrix {
        self.select_cols(&[j])
    }

    /// Column-major vectorisation.
    pub fn vectorize(&self) -> IntMatrix {
        let mut values = Vec::with_capacity(self.rows * self.cols);
        for j in 0..self.cols {
            for i in 0..self.rows {
                values.push(self.get(i, j).clone());
            }
        }
        IntMatrix::column_vector(self.ring, values)
    }

    /// Inverse of [`vectorize`](Self::vectorize) applied to a slice of values.
    pub fn unvectorize(ring: RingSpec, rows: usize, cols: usize, values: &[Elem]) -> IntMatrix {
        assert_eq!(values.len(), rows * cols);
        let mut out = IntMatrix::zeros(ring, rows, cols);
        for j in 0..cols {
            for i in 0..rows {
                out.set(i, j, values[j * rows + i].clone());
            }
        }
        out
    }

    /// Kronecker product `self ⊗ other`.
    pub fn kron(&self, other: &IntMatrix) -> IntMatrix {
        let mut out = IntMatrix::zeros(self.ring, self.rows * other.rows, self.cols * other.cols);
        for i in 0..self.rows {
            for j in 0..self.cols {
                let a = self.get(i, j);
                if a.is_zero() {
                    continue;
                }
                for k in 0..other.rows {
                    for l in 0..other.cols {
                        let b = other.get(k, l);
                        if !b.is_zero() {
                            out.set(i * other.rows + k, j * other.cols + l, a.mul(b));
                        }
                    }
                }
            }
        }
        out
    }

    pub(crate) fn swap_rows(&mut self, a: usize, b: usize) {
        if a == b {
            return;
        }
        for j in 0..self.cols {
            self.entries.swap(a * self.cols + j, b * self.cols + j);
        }
    }

    pub(crate) fn swap_cols(&mut self, a: usize, b: usize) {
        if a == b {
            return;
        }
        for i in 0..self.rows {
            self.entries.swap(i * self.cols + a, i * self.cols + b);
        }
    }

    /// `row[target] += factor * row[source]`.
    pub(crate) fn add_row_multiple(&mut self, target: usize, source: usize, factor: &Elem) {
        if factor.is_zero() {
            return;
        }
        for j in 0..self.cols {
            let s = self.get(source, j);
            if s.is_zero() {
                continue;
            }
            let v = self.get(target, j).add(&factor.mul(s));
            self.set(target, j, v);
        }
    }

    /// `col[target] += factor * col[source]`.
    pub(crate) fn add_col_multiple(&mut self, target: usize, source: usize, factor: &Elem) {
        if factor.is_zero() {
            return;
        }
        for i in 0..self.rows {
            let s = self.get(i, source);
            if s.is_zero() {
                continue;
            }
            let v = self.get(i, target).add(&factor.mul(s));
            self.set(i, target, v);
        }
    }

    pub(crate) fn scale_row(&mut self, i: usize, factor: &Elem) {
        for j in 0..self.cols {
            let v = self.get(i, j).mul(factor);
            self.set(i, j, v);
        }
    }

    pub(crate) fn scale_col(&mut self, j: usize, factor: &Elem) {
        for i in 0..self.rows {
            let v = self.get(i, j).mul(factor);
            self.set(i, j, v);
        }
    }

    /// Determinant by fraction-free (Bareiss) elimination.
    pub fn determinant(&self) -> Result<Elem> {
        if !self.is_square() {
            return Err(Error::Dimension(format!("determinant of {}x{} matrix", self.rows, self.cols)));
        }
        let n = self.rows;
        let mut a = self.clone();
        let mut sign_flip = false;
        let mut prev = self.ring.one();
        for k in 0..n {
            if a.get(k, k).is_zero() {
                match (k + 1..n).find(|&i| !a.get(i, k).is_zero()) {
                    Some(i) => {
                        a.swap_rows(k, i);
                        sign_flip = !sign_flip;
                    }
                    None => return Ok(self.ring.zero()),
                }
            }
            for i in k + 1..n {
                for j in k + 1..n {
                    let num = a.get(i, j).mul(a.get(k, k)).sub(&a.get(i, k).mul(a.get(k, j)));
                    let v = prev.divides(&num).expect("Bareiss division is exact");
                    a.set(i, j, v);
                }
            }
            prev = a.get(k, k).clone();
        }
        let det = if n == 0 { self.ring.one() } else { a.get(n - 1, n - 1).clone() };
        Ok(if sign_flip { det.neg() } else { det })
    }
}

impl Mul for &IntMatrix {
    type Output = IntMatrix;

    fn mul(self, rhs: &IntMatrix) -> IntMatrix {
        self.checked_mul(rhs).unwrap_or_else(|e| panic!("{e}"))
    }
}

impl Add for &IntMatrix {
    type Output = IntMatrix;

    fn add(self, rhs: &IntMatrix) -> IntMatrix {
        self.checked_add(rhs).unwrap_or_else(|e| panic!("{e}"))
    }
}

impl Sub for &IntMatrix {
    type Output = IntMatrix;

    fn sub(self, rhs: &IntMatrix) -> IntMatrix {
        self + &(-rhs)
    }
}

impl Neg for &IntMatrix {
    type Output = IntMatrix;

    fn neg(self) -> IntMatrix {
        let entries = self.entries.iter().map(Elem::neg).collect();
        IntMatrix { entries, ..self.clone_shape() }
    }
}

impl fmt::Debug for IntMatrix {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "IntMatrix<{}>{}x{}", self.ring, self.rows, self.cols)?;
        fmt::Display::fmt(self, f)
    }
}

impl fmt::Display for IntMatrix {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str("[")?;
        for i in 0..self.rows {
            if i > 0 {
                f.write_str(", ")?;
            }
            f.write_str("[")?;
            for j in 0..self.cols {
                if j > 0 {
                    f.write_str(", ")?;
                }
                write!(f, "{}", self.get(i, j))?;
            }
            f.write_str("]")?;
        }
        f.write_str("]")
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn multiply_and_transpose() {
        let a = IntMatrix::from_i64(&[&[1, 2], &[3, 4]]);
        let b = IntMatrix::from_i64(&[&[0, 1], &[1, 0]]);
        assert_eq!(&a * &b, IntMatrix::from_i64(&[&[2, 1], &[4, 3]]));
        assert_eq!(a.transpose(), IntMatrix::from_i64(&[&[1, 3], &[2, 4]]));
        assert!(a.checked_mul(&IntMatrix::zeros(RingSpec::Integers, 3, 1)).is_err());
    }

    #[test]
    fn empty_shapes_compose() {
        let a = IntMatrix::zeros(RingSpec::Integers, 2, 0);
        let b = IntMatrix::zeros(RingSpec::Integers, 0, 3);
        let c = &a * &b;
        assert_eq!(c.shape(), (2, 3));
        assert!(c.is_zero());
    }

    #[test]
    fn ring_mismatch_is_rejected() {
        let a = IntMatrix::identity(RingSpec::Integers, 2);
        let b = IntMatrix::identity(RingSpec::RationalPolynomials, 2);
        assert_eq!(a.checked_mul(&b), Err(Error::RingMismatch(RingSpec::Integers, RingSpec::RationalPolynomials)));
    }

    #[test]
    fn kron_matches_vectorisation_identity() {
        // vec(A X B) = (B^T ⊗ A) vec(X)
        let a = IntMatrix::from_i64(&[&[1, 2, 0], &[-1, 3, 1]]);
        let x = IntMatrix::from_i64(&[&[2, 0], &[1, -1], &[4, 5]]);
        let b = IntMatrix::from_i64(&[&[1, 1, 0, 2], &[0, 3, -2, 1]]);
        let lhs = (&(&a * &x) * &b).vectorize();
        let rhs = &b.transpose().kron(&a) * &x.vectorize();
        assert_eq!(lhs, rhs);
        let back = IntMatrix::unvectorize(RingSpec::Integers, 3, 2, x.vectorize().entries());
        assert_eq!(back, x);
    }

    #[test]
    fn bareiss_determinant() {
        let a = IntMatrix::from_i64(&[&[0, 2, 1], &[3, 1, 4], &[1, 0, 2]]);
        // 0*(2-0) - 2*(6-4) + 1*(0-1) = -5
        assert_eq!(a.determinant().unwrap(), Elem::from(-5));
        assert_eq!(IntMatrix::identity(RingSpec::Integers, 0).determinant().unwrap(), Elem::from(1));
    }
}
