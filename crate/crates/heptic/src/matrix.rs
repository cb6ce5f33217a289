//! Exact matrices and fraction-free linear algebra.

use crate::error::AlgebraError;
use crate::field::Coeff;
use std::fmt;

#[derive(Clone, PartialEq, Eq, Hash)]
pub struct Mat<K: Coeff> {
    pub rows: usize,
    pub cols: usize,
    pub data: Vec<K>,
}

impl<K: Coeff> Mat<K> {
    pub fn new(rows: usize, cols: usize, data: Vec<K>) -> Self {
        assert_eq!(rows * cols, data.len());
        Mat { rows, cols, data }
    }

    pub fn zero(rows: usize, cols: usize) -> Self {
        Mat { rows, cols, data: vec![K::zero(); rows * cols] }
    }

    pub fn identity(n: usize) -> Self {
        let mut m = Self::zero(n, n);
        for i in 0..n {
            *m.at_mut(i, i) = K::one();
        }
        m
    }

    /// 3×3 from row arrays.
    pub fn from_rows3(rows: [[K; 3]; 3]) -> Self {
        Mat { rows: 3, cols: 3, data: rows.into_iter().flatten().collect() }
    }

    pub fn at(&self, r: usize, c: usize) -> &K {
        &self.data[r * self.cols + c]
    }

    pub fn at_mut(&mut self, r: usize, c: usize) -> &mut K {
        &mut self.data[r * self.cols + c]
    }

    pub fn row(&self, r: usize) -> &[K] {
        &self.data[r * self.cols..(r + 1) * self.cols]
    }

    pub fn mul(&self, rhs: &Self) -> Self {
        assert_eq!(self.cols, rhs.rows);
        let mut out = Self::zero(self.rows, rhs.cols);
        for i in 0..self.rows {
            for k in 0..self.cols {
                let a = self.at(i, k);
                if a.is_zero() {
                    continue;
                }
                for j in 0..rhs.cols {
                    let prod = a.mul(rhs.at(k, j));
                    let cur = out.at(i, j).add(&prod);
                    *out.at_mut(i, j) = cur;
                }
            }
        }
        out
    }

    pub fn mul_vec(&self, v: &[K]) -> Vec<K> {
        assert_eq!(self.cols, v.len());
        (0..self.rows)
            .map(|i| {
                let mut acc = K::zero();
                for j in 0..self.cols {
                    acc = acc.add(&self.at(i, j).mul(&v[j]));
                }
                acc
            })
            .collect()
    }

    pub fn transpose(&self) -> Self {
        let mut out = Self::zero(self.cols, self.rows);
        for i in 0..self.rows {
            for j in 0..self.cols {
                *out.at_mut(j, i) = self.at(i, j).clone();
            }
        }
        out
    }

    pub fn scale(&self, c: &K) -> Self {
        Mat {
            rows: self.rows,
            cols: self.cols,
            data: self.data.iter().map(|x| x.mul(c)).collect(),
        }
    }

    pub fn neg(&self) -> Self {
        Mat { rows: self.rows, cols: self.cols, data: self.data.iter().map(K::neg).collect() }
    }

    /// Determinant by fraction-free (Bareiss) elimination. Every division is
    /// exact, which keeps intermediate entries from exploding into deep
    /// fractions when the inputs are integral.
    pub fn det(&self) -> K {
        assert_eq!(self.rows, self.cols);
        let n = self.rows;
        if n == 0 {
            return K::one();
        }
        let mut a = self.clone();
        let mut sign = false;
        let mut prev = K::one();
        for k in 0..n - 1 {
            if a.at(k, k).is_zero() {
                match (k + 1..n).find(|&r| !a.at(r, k).is_zero()) {
                    None => return K::zero(),
                    Some(r) => {
                        a.swap_rows(k, r);
                        sign = !sign;
                    }
                }
            }
            let pivot = a.at(k, k).clone();
            for i in k + 1..n {
                for j in k + 1..n {
                    let num = pivot.mul(a.at(i, j)).sub(&a.at(i, k).mul(a.at(k, j)));
                    *a.at_mut(i, j) = num.div(&prev);
                }
                *a.at_mut(i, k) = K::zero();
            }
            prev = pivot;
        }
        let d = a.at(n - 1, n - 1).clone();
        if sign {
            d.neg()
        } else {
            d
        }
    }

    fn swap_rows(&mut self, r1: usize, r2: usize) {
        if r1 == r2 {
            return;
        }
        for j in 0..self.cols {
            self.data.swap(r1 * self.cols + j, r2 * self.cols + j);
        }
    }

    /// Inverse by Gauss–Jordan elimination (exact over a field).
    pub fn inverse(&self) -> Result<Self, AlgebraError> {
        assert_eq!(self.rows, self.cols);
        let n = self.rows;
        let mut a = self.clone();
        let mut inv = Self::identity(n);
        for col in 0..n {
            let pivot_row = (col..n)
                .find(|&r| !a.at(r, col).is_zero())
                .ok_or(AlgebraError::SingularSystem)?;
            a.swap_rows(col, pivot_row);
            inv.swap_rows(col, pivot_row);
            let pinv = a.at(col, col).inv().unwrap();
            for j in 0..n {
                *a.at_mut(col, j) = a.at(col, j).mul(&pinv);
                *inv.at_mut(col, j) = inv.at(col, j).mul(&pinv);
            }
            for r in 0..n {
                if r == col || a.at(r, col).is_zero() {
                    continue;
                }
                let f = a.at(r, col).clone();
                for j in 0..n {
                    let na = a.at(r, j).sub(&f.mul(a.at(col, j)));
                    *a.at_mut(r, j) = na;
                    let ni = inv.at(r, j).sub(&f.mul(inv.at(col, j)));
                    *inv.at_mut(r, j) = ni;
                }
            }
        }
        Ok(inv)
    }

    /// Solves A·X = B exactly with multiple right-hand sides. A may be square
    /// or overdetermined; extra rows are verified consistent.
    pub fn solve_multi(&self, b: &Mat<K>) -> Result<Mat<K>, AlgebraError> {
        assert_eq!(self.rows, b.rows);
        let n = self.cols;
        if self.rows < n {
            return Err(AlgebraError::SingularSystem);
        }
        // Forward elimination (fraction-free) on the augmented matrix.
        let mut aug = Mat::zero(self.rows, n + b.cols);
        for i in 0..self.rows {
            for j in 0..n {
                *aug.at_mut(i, j) = self.at(i, j).clone();
            }
            for j in 0..b.cols {
                *aug.at_mut(i, n + j) = b.at(i, j).clone();
            }
        }
        let mut prev = K::one();
        for k in 0..n {
            let pivot_row = (k..self.rows)
                .find(|&r| !aug.at(r, k).is_zero())
                .ok_or(AlgebraError::SingularSystem)?;
            aug.swap_rows(k, pivot_row);
            let pivot = aug.at(k, k).clone();
            for i in k + 1..self.rows {
                for j in k + 1..aug.cols {
                    let num = pivot.mul(aug.at(i, j)).sub(&aug.at(i, k).mul(aug.at(k, j)));
                    *aug.at_mut(i, j) = num.div(&prev);
                }
                *aug.at_mut(i, k) = K::zero();
            }
            prev = pivot;
        }
        // Extra rows must have vanished entirely.
        for r in n..self.rows {
            for j in 0..aug.cols {
                if !aug.at(r, j).is_zero() {
                    return Err(AlgebraError::InconsistentSystem);
                }
            }
        }
        // Back substitution on the triangular block.
        let mut x = Mat::zero(n, b.cols);
        for col in 0..b.cols {
            for i in (0..n).rev() {
                let mut acc = aug.at(i, n + col).clone();
                for j in i + 1..n {
                    acc = acc.sub(&aug.at(i, j).mul(x.at(j, col)));
                }
                *x.at_mut(i, col) = acc.div(aug.at(i, i));
            }
        }
        Ok(x)
    }

    pub fn solve(&self, b: &[K]) -> Result<Vec<K>, AlgebraError> {
        let bm = Mat::new(b.len(), 1, b.to_vec());
        let x = self.solve_multi(&bm)?;
        Ok(x.data)
    }

    /// Basis of the right kernel.
    pub fn nullspace(&self) -> Vec<Vec<K>> {
        let mut a = self.clone();
        let n = self.cols;
        let mut pivot_cols = Vec::new();
        let mut r = 0;
        for c in 0..n {
            let Some(pr) = (r..a.rows).find(|&i| !a.at(i, c).is_zero()) else {
                continue;
            };
            a.swap_rows(r, pr);
            let pinv = a.at(r, c).inv().unwrap();
            for j in 0..n {
                *a.at_mut(r, j) = a.at(r, j).mul(&pinv);
            }
            for i in 0..a.rows {
                if i == r || a.at(i, c).is_zero() {
                    continue;
                }
                let f = a.at(i, c).clone();
                for j in 0..n {
                    let v = a.at(i, j).sub(&f.mul(a.at(r, j)));
                    *a.at_mut(i, j) = v;
                }
            }
            pivot_cols.push(c);
            r += 1;
            if r == a.rows {
                break;
            }
        }
        let free_cols: Vec<usize> = (0..n).filter(|c| !pivot_cols.contains(c)).collect();
        free_cols
            .iter()
            .map(|&fc| {
                let mut v = vec![K::zero(); n];
                v[fc] = K::one();
                for (ri, &pc) in pivot_cols.iter().enumerate() {
                    v[pc] = a.at(ri, fc).neg();
                }
                v
            })
            .collect()
    }
}

impl<K: Coeff> fmt::Debug for Mat<K> {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        writeln!(f, "Mat {}x{} [", self.rows, self.cols)?;
        for i in 0..self.rows {
            write!(f, "  ")?;
            for j in 0..self.cols {
                write!(f, "{}, ", self.at(i, j))?;
            }
            writeln!(f)?;
        }
        write!(f, "]")
    }
}
