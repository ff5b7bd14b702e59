//! Small dense linear algebra for the ambient space ℝ^M.
//!
//! Matrices here are tiny (M is 1, 2 or 3 in practice) so everything is a
//! flat row-major `Vec<f64>` with naive loops.

use alloc::vec;
use alloc::vec::Vec;

#[inline]
pub(crate) fn powi(base: f64, exponent: i32) -> f64 {
    libm::pow(base, f64::from(exponent))
}

#[inline]
pub(crate) fn abs(x: f64) -> f64 {
    libm::fabs(x)
}

pub(crate) fn norm(v: &[f64]) -> f64 {
    libm::sqrt(v.iter().map(|x| x * x).sum())
}

pub(crate) fn distance(a: &[f64], b: &[f64]) -> f64 {
    libm::sqrt(a.iter().zip(b).map(|(x, y)| (x - y) * (x - y)).sum())
}

pub(crate) fn max_abs_diff(a: &[f64], b: &[f64]) -> f64 {
    a.iter().zip(b).map(|(x, y)| abs(x - y)).fold(0.0, f64::max)
}

/// Square row-major matrix.
#[derive(Clone, Debug, PartialEq)]
pub struct Matrix {
    n: usize,
    data: Vec<f64>,
}

impl Matrix {
    pub fn identity(n: usize) -> Self {
        let mut data = vec![0.0; n * n];
        for i in 0..n {
            data[i * n + i] = 1.0;
        }
        Matrix { n, data }
    }

    /// Builds a matrix from row-major entries; `None` when the length is not a square.
    pub fn from_row_major(n: usize, data: Vec<f64>) -> Option<Self> {
        (data.len() == n * n).then_some(Matrix { n, data })
    }

    pub fn dim(&self) -> usize {
        self.n
    }

    pub fn entries(&self) -> &[f64] {
        &self.data
    }

    #[inline]
    pub fn get(&self, row: usize, col: usize) -> f64 {
        self.data[row * self.n + col]
    }

    pub fn mul(&self, other: &Matrix) -> Matrix {
        let n = self.n;
        let mut data = vec![0.0; n * n];
        for i in 0..n {
            for k in 0..n {
                let a = self.data[i * n + k];
                if a == 0.0 {
                    continue;
                }
                for j in 0..n {
                    data[i * n + j] += a * other.data[k * n + j];
                }
            }
        }
        Matrix { n, data }
    }

    pub fn transpose(&self) -> Matrix {
        let n = self.n;
        let mut data = vec![0.0; n * n];
        for i in 0..n {
            for j in 0..n {
                data[j * n + i] = self.data[i * n + j];
            }
        }
        Matrix { n, data }
    }

    pub fn mul_vec(&self, v: &[f64]) -> Vec<f64> {
        let mut out = vec![0.0; self.n];
        self.mul_vec_into(v, &mut out);
        out
    }

    pub(crate) fn mul_vec_into(&self, v: &[f64], out: &mut [f64]) {
        let n = self.n;
        for (i, o) in out.iter_mut().enumerate().take(n) {
            *o = (0..n).map(|j| self.data[i * n + j] * v[j]).sum();
        }
    }

    pub fn scaled(&self, factor: f64) -> Matrix {
        Matrix { n: self.n, data: self.data.iter().map(|x| x * factor).collect() }
    }

    pub fn max_abs_diff(&self, other: &Matrix) -> f64 {
        max_abs_diff(&self.data, &other.data)
    }

    /// `‖OᵀO − I‖_max`.
    pub fn orthogonality_defect(&self) -> f64 {
        self.transpose().mul(self).max_abs_diff(&Matrix::identity(self.n))
    }

    pub fn is_identity(&self, tol: f64) -> bool {
        self.max_abs_diff(&Matrix::identity(self.n)) <= tol
    }
}

/// Solves `a x = b` by Gaussian elimination with partial pivoting.
pub(crate) fn solve(a: &Matrix, b: &[f64]) -> Option<Vec<f64>> {
    let n = a.n;
    let mut m = a.data.clone();
    let mut rhs = b.to_vec();
    for col in 0..n {
        let pivot = (col..n).max_by(|&i, &j| abs(m[i * n + col]).total_cmp(&abs(m[j * n + col])))?;
        if abs(m[pivot * n + col]) < 1e-300 {
            return None;
        }
        if pivot != col {
            for j in 0..n {
                m.swap(col * n + j, pivot * n + j);
            }
            rhs.swap(col, pivot);
        }
        for row in col + 1..n {
            let factor = m[row * n + col] / m[col * n + col];
            for j in col..n {
                m[row * n + j] -= factor * m[col * n + j];
            }
            rhs[row] -= factor * rhs[col];
        }
    }
    let mut x = vec![0.0; n];
    for row in (0..n).rev() {
        let tail: f64 = (row + 1..n).map(|j| m[row * n + j] * x[j]).sum();
        x[row] = (rhs[row] - tail) / m[row * n + row];
    }
    Some(x)
}

pub(crate) fn gcd(mut a: u32, mut b: u32) -> u32 {
    while b != 0 {
        let r = a % b;
        a = b;
        b = r;
    }
    a
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn solve_small_system() {
        let a = Matrix::from_row_major(2, vec![2.0, 1.0, 1.0, 3.0]).unwrap();
        let x = solve(&a, &[3.0, 5.0]).unwrap();
        assert!(max_abs_diff(&x, &[0.8, 1.4]) < 1e-14);
    }

    #[test]
    fn rotation_is_orthogonal() {
        let (s, c) = (libm::sin(0.3), libm::cos(0.3));
        let r = Matrix::from_row_major(2, vec![c, -s, s, c]).unwrap();
        assert!(r.orthogonality_defect() < 1e-15);
        let skew = Matrix::from_row_major(2, vec![1.0, 0.5, 0.0, 1.0]).unwrap();
        assert!(skew.orthogonality_defect() > 0.1);
    }

    #[test]
    fn gcd_basics() {
        assert_eq!(gcd(2, 2), 2);
        assert_eq!(gcd(1, 2), 1);
        assert_eq!(gcd(6, 9), 3);
    }
}
