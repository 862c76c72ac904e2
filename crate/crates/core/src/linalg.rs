//! Dense exact matrices and exact elimination.

use std::fmt;

use crate::scalar::{int, Scalar};

/// Row-major dense matrix.
#[derive(Clone, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct Matrix<S> {
    rows: usize,
    cols: usize,
    data: Vec<S>,
}

impl<S: Scalar> Matrix<S> {
    pub fn zeros(rows: usize, cols: usize) -> Self {
        Matrix {
            rows,
            cols,
            data: vec![S::zero(); rows * cols],
        }
    }

    pub fn identity(n: usize) -> Self {
        let mut m = Self::zeros(n, n);
        for i in 0..n {
            m.set(i, i, S::one());
        }
        m
    }

    pub fn from_rows(rows: Vec<Vec<S>>) -> Self {
        let r = rows.len();
        let c = rows.first().map_or(0, Vec::len);
        assert!(rows.iter().all(|row| row.len() == c), "ragged matrix");
        Matrix {
            rows: r,
            cols: c,
            data: rows.into_iter().flatten().collect(),
        }
    }

    /// Matrix whose columns are the given vectors (all of length `rows`).
    pub fn from_columns(rows: usize, columns: &[Vec<S>]) -> Self {
        let mut m = Self::zeros(rows, columns.len());
        for (j, col) in columns.iter().enumerate() {
            assert_eq!(col.len(), rows, "column {j} has wrong length");
            for (i, v) in col.iter().enumerate() {
                m.set(i, j, v.clone());
            }
        }
        m
    }

    pub fn rows(&self) -> usize {
        self.rows
    }

    pub fn cols(&self) -> usize {
        self.cols
    }

    pub fn get(&self, i: usize, j: usize) -> &S {
        &self.data[i * self.cols + j]
    }

    pub fn set(&mut self, i: usize, j: usize, v: S) {
        self.data[i * self.cols + j] = v;
    }

    pub fn row(&self, i: usize) -> &[S] {
        &self.data[i * self.cols..(i + 1) * self.cols]
    }

    pub fn transpose(&self) -> Self {
        let mut t = Self::zeros(self.cols, self.rows);
        for i in 0..self.rows {
            for j in 0..self.cols {
                t.set(j, i, self.get(i, j).clone());
            }
        }
        t
    }

    pub fn mul(&self, other: &Self) -> Self {
        assert_eq!(self.cols, other.rows, "matrix shapes do not compose");
        let mut out = Self::zeros(self.rows, other.cols);
        for i in 0..self.rows {
            for k in 0..self.cols {
                let a = self.get(i, k);
                if a.is_zero() {
                    continue;
                }
                for j in 0..other.cols {
                    let b = other.get(k, j);
                    if !b.is_zero() {
                        let v = out.get(i, j).clone() + a.clone() * b.clone();
                        out.set(i, j, v);
                    }
                }
            }
        }
        out
    }

    pub fn mul_vec(&self, v: &[S]) -> Vec<S> {
        assert_eq!(self.cols, v.len());
        (0..self.rows)
            .map(|i| {
                self.row(i)
                    .iter()
                    .zip(v)
                    .fold(S::zero(), |acc, (a, b)| acc + a.clone() * b.clone())
            })
            .collect()
    }

    pub fn is_orthogonal(&self) -> bool {
        self.rows == self.cols && self.transpose().mul(self) == Self::identity(self.rows)
    }

    /// If every row and column has a single nonzero entry equal to `±1`,
    /// returns `(column, negated)` per row.
    pub fn as_signed_permutation(&self) -> Option<Vec<(usize, bool)>> {
        let one = S::one();
        let mut seen = vec![false; self.cols];
        let mut out = Vec::with_capacity(self.rows);
        for i in 0..self.rows {
            let mut hit = None;
            for j in 0..self.cols {
                let v = self.get(i, j);
                if v.is_zero() {
                    continue;
                }
                if hit.is_some() || seen[j] || v.abs() != one {
                    return None;
                }
                hit = Some((j, v.is_negative()));
                seen[j] = true;
            }
            out.push(hit?);
        }
        Some(out)
    }

    pub fn rank(&self) -> usize {
        let mut m = self.clone();
        reduced_echelon(&mut m).len()
    }

    fn swap_rows(&mut self, a: usize, b: usize) {
        if a != b {
            for j in 0..self.cols {
                self.data.swap(a * self.cols + j, b * self.cols + j);
            }
        }
    }

    fn row_weight(&self, i: usize) -> usize {
        self.row(i).iter().filter(|v| !v.is_zero()).count()
    }
}

impl<S: Scalar> fmt::Debug for Matrix<S> {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str("[")?;
        for i in 0..self.rows {
            if i > 0 {
                f.write_str("; ")?;
            }
            let row: Vec<String> = self.row(i).iter().map(|v| v.to_string()).collect();
            f.write_str(&row.join(" "))?;
        }
        f.write_str("]")
    }
}

/// Bareiss elimination to row echelon form, in place. Returns pivot columns.
///
/// Each update is `(p·a_ij − a_ic·a_rj) / p_prev`, where the division is
/// exact, so integer inputs stay integer throughout.
pub fn fraction_free_echelon<S: Scalar>(m: &mut Matrix<S>) -> Vec<usize> {
    let mut pivots = Vec::new();
    let mut prev = S::one();
    let mut r = 0;
    for c in 0..m.cols {
        if r == m.rows {
            break;
        }
        let Some(p) = (r..m.rows).find(|&i| !m.get(i, c).is_zero()) else {
            continue;
        };
        if p != r {
            for j in 0..m.cols {
                m.data.swap(p * m.cols + j, r * m.cols + j);
            }
        }
        let piv = m.get(r, c).clone();
        for i in r + 1..m.rows {
            let lead = m.get(i, c).clone();
            for j in c + 1..m.cols {
                let v = (piv.clone() * m.get(i, j).clone() - lead.clone() * m.get(r, j).clone()) / prev.clone();
                m.set(i, j, v);
            }
            m.set(i, c, S::zero());
        }
        prev = piv;
        pivots.push(c);
        r += 1;
    }
    pivots
}

/// Gauss-Jordan over the field to reduced row echelon form, in place.
/// Returns pivot columns.
///
/// Pivots are the candidate rows with fewest nonzeros and zero entries are
/// skipped; inputs here are sparse and this keeps fill-in low. The result is
/// independent of pivot choice since the reduced form is unique.
pub fn reduced_echelon<S: Scalar>(m: &mut Matrix<S>) -> Vec<usize> {
    let mut pivots = Vec::new();
    let mut r = 0;
    for c in 0..m.cols {
        if r == m.rows {
            break;
        }
        let Some(p) = (r..m.rows)
            .filter(|&i| !m.get(i, c).is_zero())
            .min_by_key(|&i| m.row_weight(i))
        else {
            continue;
        };
        m.swap_rows(p, r);
        let inv = S::one() / m.get(r, c).clone();
        for j in c..m.cols {
            let v = m.get(r, j).clone() * inv.clone();
            m.set(r, j, v);
        }
        let support: Vec<usize> = (c + 1..m.cols).filter(|&j| !m.get(r, j).is_zero()).collect();
        for i in 0..m.rows {
            if i == r || m.get(i, c).is_zero() {
                continue;
            }
            let f = m.get(i, c).clone();
            for &j in &support {
                let v = m.get(i, j).clone() - f.clone() * m.get(r, j).clone();
                m.set(i, j, v);
            }
            m.set(i, c, S::zero());
        }
        pivots.push(c);
        r += 1;
    }
    pivots
}

/// Basis of the right nullspace `{v : M v = 0}`, each vector rescaled to
/// integer-primitive form. One vector per free column, in column order.
pub fn nullspace<S: Scalar>(m: &Matrix<S>) -> Vec<Vec<S>> {
    let mut work = m.clone();
    let pivots = reduced_echelon(&mut work);
    let mut is_pivot = vec![false; m.cols];
    for &c in &pivots {
        is_pivot[c] = true;
    }
    let mut basis = Vec::new();
    for free in (0..m.cols).filter(|&c| !is_pivot[c]) {
        let mut v = vec![S::zero(); m.cols];
        v[free] = S::one();
        for (r, &c) in pivots.iter().enumerate() {
            v[c] = -work.get(r, free).clone();
        }
        S::make_primitive(&mut v);
        basis.push(v);
    }
    basis
}

/// Solves `A x = b`. Returns `None` when inconsistent; free variables are
/// set to zero when the solution is not unique.
pub fn solve<S: Scalar>(a: &Matrix<S>, b: &[S]) -> Option<Vec<S>> {
    assert_eq!(a.rows, b.len(), "right-hand side has wrong length");
    let mut aug = Matrix::zeros(a.rows, a.cols + 1);
    for i in 0..a.rows {
        for j in 0..a.cols {
            aug.set(i, j, a.get(i, j).clone());
        }
        aug.set(i, a.cols, b[i].clone());
    }
    let pivots = reduced_echelon(&mut aug);
    if pivots.last() == Some(&a.cols) {
        return None;
    }
    let mut x = vec![S::zero(); a.cols];
    for (r, &c) in pivots.iter().enumerate() {
        x[c] = aug.get(r, a.cols).clone();
    }
    Some(x)
}

/// Integer matrix helper for tests and literals.
pub fn int_matrix<S: Scalar>(rows: &[&[i64]]) -> Matrix<S> {
    Matrix::from_rows(rows.iter().map(|r| r.iter().map(|&v| int(v)).collect()).collect())
}
