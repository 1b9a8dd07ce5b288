//! Dense exact linear algebra over rationals.
//!
//! Small matrices only; everything here is O(n^3)-ish with arbitrary-precision
//! entries. Determinants clear denominators and run fraction-free Bareiss
//! elimination over integers, which keeps intermediate entries to the size of
//! minors instead of the products a naive rational elimination accumulates.

use num_bigint::BigInt;
use num_integer::Integer;
use num_traits::{One, Signed, Zero};

use crate::rational::Rat;

/// Dense row-major matrix of rationals.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Matrix {
    rows: usize,
    cols: usize,
    data: Vec<Rat>,
}

impl Matrix {
    pub fn zeros(rows: usize, cols: usize) -> Self {
        Matrix {
            rows,
            cols,
            data: vec![Rat::zero(); rows * cols],
        }
    }

    pub fn identity(n: usize) -> Self {
        let mut m = Matrix::zeros(n, n);
        for i in 0..n {
            m[(i, i)] = Rat::one();
        }
        m
    }

    pub fn from_fn(rows: usize, cols: usize, mut f: impl FnMut(usize, usize) -> Rat) -> Self {
        let mut data = Vec::with_capacity(rows * cols);
        for i in 0..rows {
            for j in 0..cols {
                data.push(f(i, j));
            }
        }
        Matrix { rows, cols, data }
    }

    pub fn rows(&self) -> usize {
        self.rows
    }

    pub fn cols(&self) -> usize {
        self.cols
    }

    pub fn is_symmetric(&self) -> bool {
        if self.rows != self.cols {
            return false;
        }
        for i in 0..self.rows {
            for j in 0..i {
                if self[(i, j)] != self[(j, i)] {
                    return false;
                }
            }
        }
        true
    }

    pub fn mul(&self, rhs: &Matrix) -> Matrix {
        assert_eq!(self.cols, rhs.rows, "dimension mismatch");
        Matrix::from_fn(self.rows, rhs.cols, |i, j| {
            let mut acc = Rat::zero();
            for k in 0..self.cols {
                acc += &self[(i, k)] * &rhs[(k, j)];
            }
            acc
        })
    }

    /// Leading principal submatrix of the given size.
    pub fn leading(&self, size: usize) -> Matrix {
        assert!(size <= self.rows && size <= self.cols);
        Matrix::from_fn(size, size, |i, j| self[(i, j)].clone())
    }

    /// Determinant by fraction-free Bareiss elimination with row pivoting.
    pub fn det(&self) -> Rat {
        assert_eq!(self.rows, self.cols, "determinant of non-square matrix");
        let n = self.rows;
        if n == 0 {
            return Rat::one();
        }
        // clear denominators: row i scaled by l_i, det scales by prod l_i
        let mut scale = BigInt::one();
        let mut m: Vec<Vec<BigInt>> = Vec::with_capacity(n);
        for i in 0..n {
            let mut l = BigInt::one();
            for j in 0..n {
                l = l.lcm(self[(i, j)].denom());
            }
            m.push(
                (0..n)
                    .map(|j| {
                        let e = &self[(i, j)];
                        e.numer() * (&l / e.denom())
                    })
                    .collect(),
            );
            scale *= l;
        }
        let mut sign = 1i8;
        let mut prev = BigInt::one();
        for k in 0..n - 1 {
            if m[k][k].is_zero() {
                match (k + 1..n).find(|&r| !m[r][k].is_zero()) {
                    Some(r) => {
                        m.swap(k, r);
                        sign = -sign;
                    }
                    None => return Rat::zero(),
                }
            }
            for i in k + 1..n {
                for j in k + 1..n {
                    let t = &m[i][j] * &m[k][k] - &m[i][k] * &m[k][j];
                    m[i][j] = &t / &prev;
                }
                m[i][k] = BigInt::zero();
            }
            prev = m[k][k].clone();
        }
        let mut det = Rat::new(m[n - 1][n - 1].clone(), scale);
        if sign < 0 {
            det = -det;
        }
        det
    }

    /// Rank by rational Gaussian elimination.
    pub fn rank(&self) -> usize {
        let mut m = self.data.clone();
        let (rows, cols) = (self.rows, self.cols);
        let at = |m: &[Rat], i: usize, j: usize| -> Rat { m[i * cols + j].clone() };
        let mut rank = 0;
        let mut pivot_row = 0;
        for col in 0..cols {
            let Some(r) = (pivot_row..rows).find(|&r| !at(&m, r, col).is_zero()) else {
                continue;
            };
            for j in 0..cols {
                m.swap(pivot_row * cols + j, r * cols + j);
            }
            let inv = Rat::one() / at(&m, pivot_row, col);
            for i in pivot_row + 1..rows {
                let factor = at(&m, i, col) * &inv;
                if factor.is_zero() {
                    continue;
                }
                for j in col..cols {
                    let t = at(&m, pivot_row, j) * &factor;
                    m[i * cols + j] = at(&m, i, j) - t;
                }
            }
            rank += 1;
            pivot_row += 1;
            if pivot_row == rows {
                break;
            }
        }
        rank
    }

    /// Solves `self * x = b`; `None` when inconsistent. Free variables are
    /// set to zero.
    pub fn solve(&self, b: &[Rat]) -> Option<Vec<Rat>> {
        assert_eq!(b.len(), self.rows);
        let (rows, cols) = (self.rows, self.cols);
        // augmented rational elimination
        let width = cols + 1;
        let mut m: Vec<Rat> = Vec::with_capacity(rows * width);
        for i in 0..rows {
            for j in 0..cols {
                m.push(self[(i, j)].clone());
            }
            m.push(b[i].clone());
        }
        let at = |m: &[Rat], i: usize, j: usize| -> Rat { m[i * width + j].clone() };
        let mut pivots: Vec<(usize, usize)> = Vec::new();
        let mut pivot_row = 0;
        for col in 0..cols {
            let Some(r) = (pivot_row..rows).find(|&r| !at(&m, r, col).is_zero()) else {
                continue;
            };
            for j in 0..width {
                m.swap(pivot_row * width + j, r * width + j);
            }
            let inv = Rat::one() / at(&m, pivot_row, col);
            for j in 0..width {
                m[pivot_row * width + j] = at(&m, pivot_row, j) * &inv;
            }
            for i in 0..rows {
                if i == pivot_row {
                    continue;
                }
                let factor = at(&m, i, col);
                if factor.is_zero() {
                    continue;
                }
                for j in 0..width {
                    let t = at(&m, pivot_row, j) * &factor;
                    m[i * width + j] = at(&m, i, j) - t;
                }
            }
            pivots.push((pivot_row, col));
            pivot_row += 1;
            if pivot_row == rows {
                break;
            }
        }
        for i in pivot_row..rows {
            if !at(&m, i, cols).is_zero() {
                return None;
            }
        }
        let mut x = vec![Rat::zero(); cols];
        for (r, c) in pivots {
            x[c] = at(&m, r, cols);
        }
        Some(x)
    }

    /// Inertia (nu_plus, nu_zero, nu_minus) of a symmetric matrix by exact
    /// congruence elimination with 1x1 and 2x2 pivots. A 2x2 pivot covers the
    /// all-zero-diagonal situation where no 1x1 pivot exists; its block
    /// [[0, q], [q, d]] with q != 0 always contributes one positive and one
    /// negative square.
    pub fn inertia(&self) -> (usize, usize, usize) {
        assert!(self.is_symmetric(), "inertia requires a symmetric matrix");
        let n = self.rows;
        let mut a: Vec<Vec<Rat>> = (0..n)
            .map(|i| (0..n).map(|j| self[(i, j)].clone()).collect())
            .collect();
        let mut active: Vec<usize> = (0..n).collect();
        let (mut plus, mut minus) = (0usize, 0usize);
        while !active.is_empty() {
            if let Some(pos) = active.iter().position(|&i| !a[i][i].is_zero()) {
                let p = active[pos];
                if a[p][p].is_positive() {
                    plus += 1;
                } else {
                    minus += 1;
                }
                active.remove(pos);
                let pivot = a[p][p].clone();
                for &i in &active {
                    if a[i][p].is_zero() {
                        continue;
                    }
                    let factor = &a[i][p] / &pivot;
                    for &j in &active {
                        let t = &factor * &a[p][j];
                        a[i][j] = &a[i][j] - t;
                    }
                }
                continue;
            }
            // all remaining diagonal entries vanish
            let mut off = None;
            'search: for (pi, &i) in active.iter().enumerate() {
                for (pj, &j) in active.iter().enumerate().skip(pi + 1) {
                    if !a[i][j].is_zero() {
                        off = Some((pi, pj));
                        break 'search;
                    }
                }
            }
            let Some((pi, pj)) = off else {
                // remaining block is zero
                break;
            };
            let (p, q) = (active[pi], active[pj]);
            plus += 1;
            minus += 1;
            active.remove(pj);
            active.remove(pi);
            // Schur complement with respect to the block [[0, b], [b, d]]
            let b = a[p][q].clone();
            let d = a[q][q].clone();
            let binv = Rat::one() / &b;
            for &i in &active {
                let (ri, si) = (a[i][p].clone(), a[i][q].clone());
                if ri.is_zero() && si.is_zero() {
                    continue;
                }
                for &j in &active {
                    let (rj, sj) = (a[p][j].clone(), a[q][j].clone());
                    // [ri si] * inv([[0,b],[b,d]]) * [rj sj]^T
                    // inv = (1/b^2) * [[-d, b], [b, 0]]
                    let t = (&ri * &sj + &si * &rj - &ri * &rj * &d * &binv) * &binv;
                    a[i][j] = &a[i][j] - t;
                }
            }
        }
        (plus, n - plus - minus, minus)
    }
}

impl std::ops::Index<(usize, usize)> for Matrix {
    type Output = Rat;
    fn index(&self, (i, j): (usize, usize)) -> &Rat {
        &self.data[i * self.cols + j]
    }
}

impl std::ops::IndexMut<(usize, usize)> for Matrix {
    fn index_mut(&mut self, (i, j): (usize, usize)) -> &mut Rat {
        &mut self.data[i * self.cols + j]
    }
}
