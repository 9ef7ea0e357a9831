//! Small dense matrices and rank-3/4 component arrays.
//!
//! Every object in this crate lives in at most 2n+1 = 7 dimensions, so the
//! implementations favour clarity over asymptotics: Gauss-Jordan elimination
//! with partial pivoting for inverses and cyclic Jacobi rotations for
//! symmetric eigenvalues.

use crate::error::{Error, Result};
use crate::scalar::{lit, Real};

/// Dense row-major matrix.
#[derive(Debug, Clone, PartialEq)]
pub struct Mat<T> {
    rows: usize,
    cols: usize,
    data: Vec<T>,
}

impl<T: Real> Mat<T> {
    pub fn zeros(rows: usize, cols: usize) -> Self {
        Mat {
            rows,
            cols,
            data: vec![T::zero(); rows * cols],
        }
    }

    pub fn identity(n: usize) -> Self {
        let mut m = Self::zeros(n, n);
        for i in 0..n {
            m[(i, i)] = T::one();
        }
        m
    }

    pub fn from_rows(rows: &[Vec<T>]) -> Self {
        let r = rows.len();
        let c = if r == 0 { 0 } else { rows[0].len() };
        assert!(rows.iter().all(|row| row.len() == c), "ragged rows");
        Mat {
            rows: r,
            cols: c,
            data: rows.concat(),
        }
    }

    pub fn from_fn(rows: usize, cols: usize, mut f: impl FnMut(usize, usize) -> T) -> Self {
        let mut m = Self::zeros(rows, cols);
        for i in 0..rows {
            for j in 0..cols {
                m[(i, j)] = f(i, j);
            }
        }
        m
    }

    pub fn diagonal(entries: &[T]) -> Self {
        let mut m = Self::zeros(entries.len(), entries.len());
        for (i, &e) in entries.iter().enumerate() {
            m[(i, i)] = e;
        }
        m
    }

    pub fn n_rows(&self) -> usize {
        self.rows
    }

    pub fn n_cols(&self) -> usize {
        self.cols
    }

    pub fn row(&self, i: usize) -> &[T] {
        &self.data[i * self.cols..(i + 1) * self.cols]
    }

    pub fn column(&self, j: usize) -> Vec<T> {
        (0..self.rows).map(|i| self[(i, j)]).collect()
    }

    pub fn transpose(&self) -> Self {
        Self::from_fn(self.cols, self.rows, |i, j| self[(j, i)])
    }

    pub fn mul(&self, rhs: &Self) -> Self {
        assert_eq!(self.cols, rhs.rows, "inner dimensions must match");
        let mut out = Self::zeros(self.rows, rhs.cols);
        for i in 0..self.rows {
            for k in 0..self.cols {
                let a = self[(i, k)];
                if a == T::zero() {
                    continue;
                }
                for j in 0..rhs.cols {
                    out[(i, j)] += a * rhs[(k, j)];
                }
            }
        }
        out
    }

    pub fn mul_vec(&self, v: &[T]) -> Vec<T> {
        assert_eq!(self.cols, v.len());
        (0..self.rows)
            .map(|i| (0..self.cols).map(|j| self[(i, j)] * v[j]).sum())
            .collect()
    }

    pub fn scale(&self, s: T) -> Self {
        Self::from_fn(self.rows, self.cols, |i, j| self[(i, j)] * s)
    }

    pub fn add(&self, rhs: &Self) -> Self {
        assert_eq!((self.rows, self.cols), (rhs.rows, rhs.cols));
        Self::from_fn(self.rows, self.cols, |i, j| self[(i, j)] + rhs[(i, j)])
    }

    pub fn sub(&self, rhs: &Self) -> Self {
        assert_eq!((self.rows, self.cols), (rhs.rows, rhs.cols));
        Self::from_fn(self.rows, self.cols, |i, j| self[(i, j)] - rhs[(i, j)])
    }

    /// Largest absolute entry.
    pub fn max_abs(&self) -> T {
        self.data.iter().fold(T::zero(), |m, &x| m.max(x.abs()))
    }

    /// Largest absolute difference against `rhs`.
    pub fn max_abs_diff(&self, rhs: &Self) -> T {
        self.sub(rhs).max_abs()
    }

    pub fn is_symmetric(&self, tol: T) -> bool {
        if self.rows != self.cols {
            return false;
        }
        for i in 0..self.rows {
            for j in (i + 1)..self.cols {
                if (self[(i, j)] - self[(j, i)]).abs() > tol {
                    return false;
                }
            }
        }
        true
    }

    /// Plain (unweighted) Frobenius inner product.
    pub fn frobenius_dot(&self, rhs: &Self) -> T {
        assert_eq!((self.rows, self.cols), (rhs.rows, rhs.cols));
        self.data.iter().zip(&rhs.data).map(|(&a, &b)| a * b).sum()
    }

    /// Determinant by LU with partial pivoting.
    pub fn det(&self) -> T {
        assert_eq!(self.rows, self.cols, "determinant needs a square matrix");
        let n = self.rows;
        let mut a = self.clone();
        let mut det = T::one();
        for col in 0..n {
            let mut piv = col;
            for r in (col + 1)..n {
                if a[(r, col)].abs() > a[(piv, col)].abs() {
                    piv = r;
                }
            }
            if a[(piv, col)] == T::zero() {
                return T::zero();
            }
            if piv != col {
                for j in 0..n {
                    let tmp = a[(col, j)];
                    a[(col, j)] = a[(piv, j)];
                    a[(piv, j)] = tmp;
                }
                det = -det;
            }
            det *= a[(col, col)];
            for r in (col + 1)..n {
                let factor = a[(r, col)] / a[(col, col)];
                for j in col..n {
                    let s = a[(col, j)];
                    a[(r, j)] -= factor * s;
                }
            }
        }
        det
    }

    /// Inverse by Gauss-Jordan with partial pivoting.
    pub fn inverse(&self) -> Result<Self> {
        assert_eq!(self.rows, self.cols, "inverse needs a square matrix");
        let n = self.rows;
        let mut a = self.clone();
        let mut inv = Self::identity(n);
        for col in 0..n {
            let mut piv = col;
            for r in (col + 1)..n {
                if a[(r, col)].abs() > a[(piv, col)].abs() {
                    piv = r;
                }
            }
            let pivot = a[(piv, col)];
            if pivot.abs() < lit(1e-300) {
                return Err(Error::SingularFrame { det: 0.0 });
            }
            if piv != col {
                for j in 0..n {
                    a.data.swap(col * n + j, piv * n + j);
                    inv.data.swap(col * n + j, piv * n + j);
                }
            }
            let pivot = a[(col, col)];
            for j in 0..n {
                a[(col, j)] /= pivot;
                inv[(col, j)] /= pivot;
            }
            for r in 0..n {
                if r == col {
                    continue;
                }
                let factor = a[(r, col)];
                if factor == T::zero() {
                    continue;
                }
                for j in 0..n {
                    let s = a[(col, j)];
                    let t = inv[(col, j)];
                    a[(r, j)] -= factor * s;
                    inv[(r, j)] -= factor * t;
                }
            }
        }
        Ok(inv)
    }

    /// Solves `self * x = b`.
    pub fn solve(&self, b: &[T]) -> Result<Vec<T>> {
        Ok(self.inverse()?.mul_vec(b))
    }

    /// Eigenvalues of a symmetric matrix by the cyclic Jacobi method.
    pub fn symmetric_eigenvalues(&self) -> Vec<T> {
        assert_eq!(self.rows, self.cols);
        let n = self.rows;
        let mut a = self.clone();
        let eps = T::epsilon() * lit::<T>(64.0);
        for _sweep in 0..100 {
            let mut off = T::zero();
            for i in 0..n {
                for j in (i + 1)..n {
                    off = off.max(a[(i, j)].abs());
                }
            }
            let scale = a.max_abs().max(T::one());
            if off <= eps * scale {
                break;
            }
            for p in 0..n {
                for q in (p + 1)..n {
                    let apq = a[(p, q)];
                    if apq.abs() <= eps * scale {
                        continue;
                    }
                    let theta = (a[(q, q)] - a[(p, p)]) / (two_t::<T>() * apq);
                    let t = {
                        let sign = if theta >= T::zero() {
                            T::one()
                        } else {
                            -T::one()
                        };
                        sign / (theta.abs() + (theta * theta + T::one()).sqrt())
                    };
                    let c = T::one() / (t * t + T::one()).sqrt();
                    let s = t * c;
                    for k in 0..n {
                        let akp = a[(k, p)];
                        let akq = a[(k, q)];
                        a[(k, p)] = c * akp - s * akq;
                        a[(k, q)] = s * akp + c * akq;
                    }
                    for k in 0..n {
                        let apk = a[(p, k)];
                        let aqk = a[(q, k)];
                        a[(p, k)] = c * apk - s * aqk;
                        a[(q, k)] = s * apk + c * aqk;
                    }
                }
            }
        }
        (0..n).map(|i| a[(i, i)]).collect()
    }
}

fn two_t<T: Real>() -> T {
    T::one() + T::one()
}

impl<T> std::ops::Index<(usize, usize)> for Mat<T> {
    type Output = T;
    #[inline]
    fn index(&self, (i, j): (usize, usize)) -> &T {
        &self.data[i * self.cols + j]
    }
}

impl<T> std::ops::IndexMut<(usize, usize)> for Mat<T> {
    #[inline]
    fn index_mut(&mut self, (i, j): (usize, usize)) -> &mut T {
        &mut self.data[i * self.cols + j]
    }
}

/// Cubic component array, indexed `[i][j][k]` with a common extent.
#[derive(Debug, Clone, PartialEq)]
pub struct Tensor3<T> {
    dim: usize,
    data: Vec<T>,
}

impl<T: Real> Tensor3<T> {
    pub fn zeros(dim: usize) -> Self {
        Tensor3 {
            dim,
            data: vec![T::zero(); dim * dim * dim],
        }
    }

    #[inline]
    pub fn dim(&self) -> usize {
        self.dim
    }

    #[inline]
    pub fn get(&self, i: usize, j: usize, k: usize) -> T {
        self.data[(i * self.dim + j) * self.dim + k]
    }

    #[inline]
    pub fn set(&mut self, i: usize, j: usize, k: usize, v: T) {
        self.data[(i * self.dim + j) * self.dim + k] = v;
    }

    #[inline]
    pub fn add_to(&mut self, i: usize, j: usize, k: usize, v: T) {
        self.data[(i * self.dim + j) * self.dim + k] += v;
    }

    pub fn max_abs(&self) -> T {
        self.data.iter().fold(T::zero(), |m, &x| m.max(x.abs()))
    }

    pub fn max_abs_diff(&self, rhs: &Self) -> T {
        assert_eq!(self.dim, rhs.dim);
        self.data
            .iter()
            .zip(&rhs.data)
            .fold(T::zero(), |m, (&a, &b)| m.max((a - b).abs()))
    }
}

/// Quartic component array, indexed `[i][j][k][l]` with a common extent.
#[derive(Debug, Clone, PartialEq)]
pub struct Tensor4<T> {
    dim: usize,
    data: Vec<T>,
}

impl<T: Real> Tensor4<T> {
    pub fn zeros(dim: usize) -> Self {
        Tensor4 {
            dim,
            data: vec![T::zero(); dim * dim * dim * dim],
        }
    }

    #[inline]
    pub fn dim(&self) -> usize {
        self.dim
    }

    #[inline]
    pub fn get(&self, i: usize, j: usize, k: usize, l: usize) -> T {
        self.data[((i * self.dim + j) * self.dim + k) * self.dim + l]
    }

    #[inline]
    pub fn set(&mut self, i: usize, j: usize, k: usize, l: usize, v: T) {
        self.data[((i * self.dim + j) * self.dim + k) * self.dim + l] = v;
    }

    pub fn max_abs(&self) -> T {
        self.data.iter().fold(T::zero(), |m, &x| m.max(x.abs()))
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn inverse_recovers_identity() {
        let m = Mat::from_rows(&[
            vec![2.0, 1.0, 0.0],
            vec![1.0, 3.0, 1.0],
            vec![0.0, 1.0, 4.0],
        ]);
        let inv = m.inverse().unwrap();
        let prod = m.mul(&inv);
        assert!(prod.max_abs_diff(&Mat::identity(3)) < 1e-14);
    }

    #[test]
    fn determinant_of_triangular_product() {
        let m = Mat::<f64>::from_rows(&[vec![2.0, 5.0], vec![0.0, 3.0]]);
        assert!((m.det() - 6.0).abs() < 1e-14);
    }

    #[test]
    fn jacobi_eigenvalues_of_known_matrix() {
        // eigenvalues of [[2,1],[1,2]] are 1 and 3
        let m = Mat::<f64>::from_rows(&[vec![2.0, 1.0], vec![1.0, 2.0]]);
        let mut ev = m.symmetric_eigenvalues();
        ev.sort_by(|a, b| a.partial_cmp(b).unwrap());
        assert!((ev[0] - 1.0).abs() < 1e-12);
        assert!((ev[1] - 3.0).abs() < 1e-12);
    }

    #[test]
    fn singular_matrix_reports_error() {
        let m = Mat::from_rows(&[vec![1.0, 2.0], vec![2.0, 4.0]]);
        assert!(m.inverse().is_err());
        assert_eq!(m.det(), 0.0);
    }
}
