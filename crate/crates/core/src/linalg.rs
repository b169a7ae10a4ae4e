//! Smith normal form and everything built on it: linear solving, kernels,
//! image bases, and a small block-equation assembler used wherever a
//! problem is a system of matrix equations `Σ Aᵢ·Xᵢ·Bᵢ = C`.

use std::cmp::Ordering;

use crate::error::{Error, Result};
use crate::matrix::IntMatrix;
use crate::ring::{Elem, RingSpec};

/// Output of [`smith_normal_form`]: `u · m · v = d`.
///
/// The inverses of both transforms are tracked alongside so that callers
/// can move between the original and the diagonal coordinates without
/// solving further systems.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Smith {
    pub u: IntMatrix,
    pub u_inv: IntMatrix,
    pub d: IntMatrix,
    pub v: IntMatrix,
    pub v_inv: IntMatrix,
    pub rank: usize,
}

impl Smith {
    /// Nonzero diagonal entries `d₁ | d₂ | … | d_rank`, in canonical form.
    pub fn invariant_factors(&self) -> Vec<Elem> {
        (0..self.rank).map(|i| self.d.get(i, i).clone()).collect()
    }
}

struct Reducer {
    a: IntMatrix,
    u: IntMatrix,
    u_inv: IntMatrix,
    v: IntMatrix,
    v_inv: IntMatrix,
}

impl Reducer {
    fn swap_rows(&mut self, i: usize, j: usize) {
        self.a.swap_rows(i, j);
        self.u.swap_rows(i, j);
        self.u_inv.swap_cols(i, j);
    }

    fn swap_cols(&mut self, i: usize, j: usize) {
        self.a.swap_cols(i, j);
        self.v.swap_cols(i, j);
        self.v_inv.swap_rows(i, j);
    }

    /// row[t] += c·row[s]
    fn row_op(&mut self, t: usize, s: usize, c: &Elem) {
        self.a.add_row_multiple(t, s, c);
        self.u.add_row_multiple(t, s, c);
        self.u_inv.add_col_multiple(s, t, &c.neg());
    }

    /// col[t] += c·col[s]
    fn col_op(&mut self, t: usize, s: usize, c: &Elem) {
        self.a.add_col_multiple(t, s, c);
        self.v.add_col_multiple(t, s, c);
        self.v_inv.add_row_multiple(s, t, &c.neg());
    }

    fn scale_row(&mut self, i: usize, unit: &Elem) {
        let inv = unit.unit_inverse().expect("scaling by a unit");
        self.a.scale_row(i, unit);
        self.u.scale_row(i, unit);
        self.u_inv.scale_col(i, &inv);
    }

    /// First entry of minimal norm in the trailing block, row-major.
    fn pivot(&self, t: usize) -> Option<(usize, usize)> {
        let mut best: Option<(usize, usize)> = None;
        for i in t..self.a.rows() {
            for j in t..self.a.cols() {
                let e = self.a.get(i, j);
                if e.is_zero() {
                    continue;
                }
                match best {
                    Some((bi, bj)) if e.cmp_norm(self.a.get(bi, bj)) != Ordering::Less => {}
                    _ => best = Some((i, j)),
                }
            }
        }
        best
    }
}

/// Smith normal form with unimodular transforms.
///
/// Pivots are the minimal-norm nonzero entries of the trailing block, found
/// by a row-major scan, so transforms are reproducible.
pub fn smith_normal_form(m: &IntMatrix) -> Smith {
    let ring = m.ring();
    let (rows, cols) = m.shape();
    let mut r = Reducer {
        a: m.clone(),
        u: IntMatrix::identity(ring, rows),
        u_inv: IntMatrix::identity(ring, rows),
        v: IntMatrix::identity(ring, cols),
        v_inv: IntMatrix::identity(ring, cols),
    };
    let mut t = 0;
    'outer: while t < rows.min(cols) {
        loop {
            let Some((pi, pj)) = r.pivot(t) else { break 'outer };
            r.swap_rows(t, pi);
            r.swap_cols(t, pj);
            let pivot = r.a.get(t, t).clone();
            let mut dirty = false;
            for i in t + 1..rows {
                let e = r.a.get(i, t);
                if e.is_zero() {
                    continue;
                }
                let (q, rem) = e.div_rem(&pivot);
                r.row_op(i, t, &q.neg());
                dirty |= !rem.is_zero();
            }
            for j in t + 1..cols {
                let e = r.a.get(t, j);
                if e.is_zero() {
                    continue;
                }
                let (q, rem) = e.div_rem(&pivot);
                r.col_op(j, t, &q.neg());
                dirty |= !rem.is_zero();
            }
            if dirty {
                continue;
            }
            let offender = (t + 1..rows)
                .flat_map(|i| (t + 1..cols).map(move |j| (i, j)))
                .find(|&(i, j)| pivot.divides(r.a.get(i, j)).is_none());
            if let Some((i, _)) = offender {
                r.row_op(t, i, &ring.one());
                continue;
            }
            let unit = pivot.canonical_unit();
            if !unit.is_one() {
                r.scale_row(t, &unit);
            }
            t += 1;
            break;
        }
    }
    Smith { u: r.u, u_inv: r.u_inv, d: r.a, v: r.v, v_inv: r.v_inv, rank: t }
}

/// Solves `a · x = b`, returning `None` when no solution exists over the ring.
pub fn solve_lift(a: &IntMatrix, b: &IntMatrix) -> Result<Option<IntMatrix>> {
    a.check_ring(b)?;
    if a.rows() != b.rows() {
        return Err(Error::Dimension(format!(
            "solve_lift: {}x{} system with {}x{} right-hand side",
            a.rows(),
            a.cols(),
            b.rows(),
            b.cols()
        )));
    }
    Ok(solve_with(&smith_normal_form(a), b))
}

/// Solves against a precomputed Smith form of the coefficient matrix.
pub fn solve_with(snf: &Smith, b: &IntMatrix) -> Option<IntMatrix> {
    let ring = b.ring();
    let c = &snf.u * b;
    let n = snf.v.rows();
    let mut y = IntMatrix::zeros(ring, n, b.cols());
    for k in 0..b.cols() {
        for i in 0..c.rows() {
            let rhs = c.get(i, k);
            if i < snf.rank {
                let q = snf.d.get(i, i).divides(rhs)?;
                y.set(i, k, q);
            } else if !rhs.is_zero() {
                return None;
            }
        }
    }
    Some(&snf.v * &y)
}

/// Columns generate `{x : a·x = 0}`; the kernel is free and the result has
/// full column rank (possibly zero columns).
pub fn kernel_matrix(a: &IntMatrix) -> IntMatrix {
    let snf = smith_normal_form(a);
    let idx: Vec<usize> = (snf.rank..a.cols()).collect();
    snf.v.select_cols(&idx)
}

/// An injective matrix with the same column span as `a`.
pub fn image_basis(a: &IntMatrix) -> IntMatrix {
    let snf = smith_normal_form(a);
    let idx: Vec<usize> = (0..snf.rank).collect();
    a * &snf.v.select_cols(&idx)
}

pub fn rank(a: &IntMatrix) -> usize {
    smith_normal_form(a).rank
}

/// Assembles block matrix equations `Σ left·X·right = rhs` into a single
/// vectorised linear system.
#[derive(Clone, Debug)]
pub struct LinearSystem {
    ring: RingSpec,
    unknowns: Vec<(usize, usize)>,
    equations: Vec<(usize, usize)>,
    terms: Vec<(usize, usize, IntMatrix, IntMatrix)>,
    rhs: Vec<Option<IntMatrix>>,
}

impl LinearSystem {
    pub fn new(ring: RingSpec) -> LinearSystem {
        LinearSystem { ring, unknowns: Vec::new(), equations: Vec::new(), terms: Vec::new(), rhs: Vec::new() }
    }

    pub fn unknown(&mut self, rows: usize, cols: usize) -> usize {
        self.unknowns.push((rows, cols));
        self.unknowns.len() - 1
    }

    pub fn equation(&mut self, rows: usize, cols: usize) -> usize {
        self.equations.push((rows, cols));
        self.rhs.push(None);
        self.equations.len() - 1
    }

    /// Adds `left · X_unknown · right` to the given equation.
    pub fn term(&mut self, eq: usize, unknown: usize, left: IntMatrix, right: IntMatrix) {
        let (er, ec) = self.equations[eq];
        let (ur, uc) = self.unknowns[unknown];
        assert_eq!((left.rows(), left.cols()), (er, ur), "left factor shape");
        assert_eq!((right.rows(), right.cols()), (uc, ec), "right factor shape");
        self.terms.push((eq, unknown, left, right));
    }

    pub fn rhs(&mut self, eq: usize, value: IntMatrix) {
        assert_eq!(value.shape(), self.equations[eq], "right-hand side shape");
        self.rhs[eq] = Some(value);
    }

    fn offsets(shapes: &[(usize, usize)]) -> Vec<usize> {
        let mut acc = 0;
        shapes
            .iter()
            .map(|&(r, c)| {
                let o = acc;
                acc += r * c;
                o
            })
            .chain(std::iter::once(0))
            .collect()
    }

    pub fn unknown_count(&self) -> usize {
        self.unknowns.iter().map(|&(r, c)| r * c).sum()
    }

    pub fn equation_count(&self) -> usize {
        self.equations.iter().map(|&(r, c)| r * c).sum()
    }

    pub fn coefficient_matrix(&self) -> IntMatrix {
        let uo = Self::offsets(&self.unknowns);
        let eo = Self::offsets(&self.equations);
        let mut out = IntMatrix::zeros(self.ring, self.equation_count(), self.unknown_count());
        for (eq, unk, left, right) in &self.terms {
            let block = right.transpose().kron(left);
            for i in 0..block.rows() {
                for j in 0..block.cols() {
                    let b = block.get(i, j);
                    if b.is_zero() {
                        continue;
                    }
                    let (r, c) = (eo[*eq] + i, uo[*unk] + j);
                    let v = out.get(r, c).add(b);
                    out.set(r, c, v);
                }
            }
        }
        out
    }

    pub fn rhs_vector(&self) -> IntMatrix {
        let mut values = Vec::with_capacity(self.equation_count());
        for (k, &(r, c)) in self.equations.iter().enumerate() {
            match &self.rhs[k] {
                Some(m) => values.extend(m.vectorize().entries().iter().cloned()),
                None => values.extend(std::iter::repeat_n(self.ring.zero(), r * c)),
            }
        }
        IntMatrix::column_vector(self.ring, values)
    }

    /// Splits a stacked unknown vector back into its matrix blocks.
    pub fn split(&self, column: &[Elem]) -> Vec<IntMatrix> {
        let uo = Self::offsets(&self.unknowns);
        self.unknowns
            .iter()
            .enumerate()
            .map(|(k, &(r, c))| IntMatrix::unvectorize(self.ring, r, c, &column[uo[k]..uo[k] + r * c]))
            .collect()
    }

    pub fn solve(&self) -> Option<Vec<IntMatrix>> {
        let a = self.coefficient_matrix();
        let x = solve_with(&smith_normal_form(&a), &self.rhs_vector())?;
        Some(self.split(x.entries()))
    }

    /// Generators of the homogeneous solution space, one column per generator.
    pub fn kernel(&self) -> IntMatrix {
        kernel_matrix(&self.coefficient_matrix())
    }
}
