//! Exact determinant and rank over arbitrary-precision rationals.
//!
//! This is the ground truth the other engines are tested against. Integer
//! matrices go through fraction-free (Bareiss) elimination; general rational
//! matrices through exact Gaussian elimination. Pivots are chosen as the first
//! nonzero entry in column order, with row swaps tracked for the sign.
//! "Nullity" is defined through exact rank, which for a real symmetric matrix
//! equals the number of zero eigenvalues; no eigenvalue computation happens
//! anywhere.

use num::{BigInt, BigRational, One, Zero};
use thiserror::Error;

use crate::graph::LoopWeightedGraph;

#[derive(Debug, Error, PartialEq, Eq)]
pub enum LinalgError {
    #[error("determinant requires a square matrix, got {rows}x{cols}")]
    NotSquare { rows: usize, cols: usize },
}

/// Dense row-major matrix of exact rationals.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct RationalMatrix {
    rows: usize,
    cols: usize,
    entries: Vec<BigRational>,
}

impl RationalMatrix {
    pub fn zeros(rows: usize, cols: usize) -> Self {
        RationalMatrix { rows, cols, entries: vec![BigRational::zero(); rows * cols] }
    }

    pub fn from_fn(rows: usize, cols: usize, mut f: impl FnMut(usize, usize) -> BigRational) -> Self {
        let mut entries = Vec::with_capacity(rows * cols);
        for i in 0..rows {
            for j in 0..cols {
                entries.push(f(i, j));
            }
        }
        RationalMatrix { rows, cols, entries }
    }

    pub fn rows(&self) -> usize {
        self.rows
    }

    pub fn cols(&self) -> usize {
        self.cols
    }

    pub fn get(&self, i: usize, j: usize) -> &BigRational {
        &self.entries[i * self.cols + j]
    }

    pub fn set(&mut self, i: usize, j: usize, value: BigRational) {
        self.entries[i * self.cols + j] = value;
    }

    pub fn transpose(&self) -> Self {
        RationalMatrix::from_fn(self.cols, self.rows, |i, j| self.get(j, i).clone())
    }

    pub fn is_square(&self) -> bool {
        self.rows == self.cols
    }

    pub fn is_integral(&self) -> bool {
        self.entries.iter().all(|e| e.denom().is_one())
    }

    pub fn is_symmetric(&self) -> bool {
        self.is_square()
            && (0..self.rows).all(|i| (0..i).all(|j| self.get(i, j) == self.get(j, i)))
    }

    /// Simultaneous row/column permutation: entry (i, j) of the result is
    /// entry (perm[i], perm[j]) of self.
    pub fn permuted(&self, perm: &[usize]) -> Self {
        assert!(self.is_square() && perm.len() == self.rows);
        RationalMatrix::from_fn(self.rows, self.cols, |i, j| self.get(perm[i], perm[j]).clone())
    }

    /// Exact determinant. Dispatches to Bareiss for integer matrices and to
    /// rational Gaussian elimination otherwise; the 0x0 determinant is 1.
    pub fn det_exact(&self) -> Result<BigRational, LinalgError> {
        if !self.is_square() {
            return Err(LinalgError::NotSquare { rows: self.rows, cols: self.cols });
        }
        if self.is_integral() {
            Ok(BigRational::from_integer(self.det_bareiss_integer()))
        } else {
            Ok(self.det_gauss_rational())
        }
    }

    /// Fraction-free elimination on the integer part; caller guarantees the
    /// matrix is square and integral.
    pub fn det_bareiss_integer(&self) -> BigInt {
        debug_assert!(self.is_square() && self.is_integral());
        let n = self.rows;
        if n == 0 {
            return BigInt::one();
        }
        let mut m: Vec<Vec<BigInt>> = (0..n)
            .map(|i| (0..n).map(|j| self.get(i, j).numer().clone()).collect())
            .collect();
        let mut sign = 1i64;
        let mut prev = BigInt::one();
        for k in 0..n - 1 {
            if m[k][k].is_zero() {
                match (k + 1..n).find(|&r| !m[r][k].is_zero()) {
                    Some(r) => {
                        m.swap(k, r);
                        sign = -sign;
                    }
                    None => return BigInt::zero(),
                }
            }
            for i in k + 1..n {
                for j in k + 1..n {
                    let num = &m[k][k] * &m[i][j] - &m[i][k] * &m[k][j];
                    // Exact by the Bareiss identity: prev divides num.
                    debug_assert!((&num % &prev).is_zero());
                    m[i][j] = num / &prev;
                }
                m[i][k] = BigInt::zero();
            }
            prev = m[k][k].clone();
        }
        let last = std::mem::take(&mut m[n - 1][n - 1]);
        if sign < 0 {
            -last
        } else {
            last
        }
    }

    /// Exact Gaussian elimination over the rationals; caller guarantees the
    /// matrix is square.
    #[allow(clippy::needless_range_loop)] // two rows of `m` are live at once
    pub fn det_gauss_rational(&self) -> BigRational {
        debug_assert!(self.is_square());
        let n = self.rows;
        if n == 0 {
            return BigRational::one();
        }
        let mut m: Vec<Vec<BigRational>> = (0..n)
            .map(|i| (0..n).map(|j| self.get(i, j).clone()).collect())
            .collect();
        let mut det = BigRational::one();
        for k in 0..n {
            match (k..n).find(|&r| !m[r][k].is_zero()) {
                Some(r) => {
                    if r != k {
                        m.swap(k, r);
                        det = -det;
                    }
                }
                None => return BigRational::zero(),
            }
            det *= &m[k][k].clone();
            for i in k + 1..n {
                if m[i][k].is_zero() {
                    continue;
                }
                let factor = &m[i][k] / &m[k][k];
                for j in k..n {
                    let delta = &factor * &m[k][j];
                    m[i][j] -= delta;
                }
            }
        }
        det
    }

    /// Exact row rank over the rationals.
    #[allow(clippy::needless_range_loop)] // two rows of `m` are live at once
    pub fn rank_exact(&self) -> usize {
        let mut m: Vec<Vec<BigRational>> = (0..self.rows)
            .map(|i| (0..self.cols).map(|j| self.get(i, j).clone()).collect())
            .collect();
        let mut rank = 0;
        for col in 0..self.cols {
            let Some(r) = (rank..self.rows).find(|&r| !m[r][col].is_zero()) else {
                continue;
            };
            m.swap(rank, r);
            for i in rank + 1..self.rows {
                if m[i][col].is_zero() {
                    continue;
                }
                let factor = &m[i][col] / &m[rank][col];
                for j in col..self.cols {
                    let delta = &factor * &m[rank][j];
                    m[i][j] -= delta;
                }
            }
            rank += 1;
            if rank == self.rows {
                break;
            }
        }
        rank
    }
}

/// Adjacency matrix of a loop-weighted graph: symmetric, 1 for edges, loop
/// weights on the diagonal.
pub fn adjacency_matrix(g: &LoopWeightedGraph) -> RationalMatrix {
    let mut m = RationalMatrix::zeros(g.n(), g.n());
    for (u, v) in g.edges() {
        m.set(u, v, BigRational::one());
        m.set(v, u, BigRational::one());
    }
    for (&v, w) in g.loops() {
        m.set(v, v, w.clone());
    }
    m
}

/// Determinant of the adjacency matrix.
pub fn det_graph(g: &LoopWeightedGraph) -> BigRational {
    adjacency_matrix(g).det_exact().expect("adjacency matrices are square")
}

/// Rank of the adjacency matrix.
pub fn rank_graph(g: &LoopWeightedGraph) -> usize {
    adjacency_matrix(g).rank_exact()
}

/// n minus the exact rank of the adjacency matrix.
pub fn nullity(g: &LoopWeightedGraph) -> usize {
    g.n() - rank_graph(g)
}
