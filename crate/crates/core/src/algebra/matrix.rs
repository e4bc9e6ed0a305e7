//! Dense square matrices: small integer matrices and symmetric matrices over
//! a [`Field`].

use std::fmt;

use num_rational::BigRational;

use super::field::Field;

/// Square integer matrix, row-major.
#[derive(Clone, PartialEq, Eq, Hash)]
pub struct IntMatrix {
    n: usize,
    data: Vec<i64>,
}

impl IntMatrix {
    pub fn zeros(n: usize) -> Self {
        IntMatrix { n, data: vec![0; n * n] }
    }

    pub fn from_fn(n: usize, mut f: impl FnMut(usize, usize) -> i64) -> Self {
        let mut m = Self::zeros(n);
        for i in 0..n {
            for j in 0..n {
                m.data[i * n + j] = f(i, j);
            }
        }
        m
    }

    pub fn from_rows(rows: &[Vec<i64>]) -> Self {
        let n = rows.len();
        assert!(rows.iter().all(|r| r.len() == n), "matrix must be square");
        Self::from_fn(n, |i, j| rows[i][j])
    }

    pub fn order(&self) -> usize {
        self.n
    }

    pub fn get(&self, i: usize, j: usize) -> i64 {
        self.data[i * self.n + j]
    }

    pub fn set(&mut self, i: usize, j: usize, v: i64) {
        self.data[i * self.n + j] = v;
    }

    pub fn is_symmetric(&self) -> bool {
        (0..self.n).all(|i| (0..i).all(|j| self.get(i, j) == self.get(j, i)))
    }

    pub fn rows(&self) -> Vec<Vec<i64>> {
        self.data.chunks(self.n.max(1)).take(self.n).map(|r| r.to_vec()).collect()
    }

    /// `self + c·I`.
    pub fn shift(&self, c: i64) -> IntMatrix {
        let mut m = self.clone();
        for i in 0..self.n {
            m.data[i * self.n + i] += c;
        }
        m
    }

    /// Principal submatrix on `idx`, in the given order.
    pub fn principal(&self, idx: &[usize]) -> IntMatrix {
        IntMatrix::from_fn(idx.len(), |i, j| self.get(idx[i], idx[j]))
    }

    /// Symmetric copy over `T`; only the lower triangle is read.
    pub fn to_field<T: Field>(&self) -> SymMatrix<T> {
        SymMatrix::from_fn(self.n, |i, j| T::from_i64(self.get(i, j)))
    }
}

impl fmt::Debug for IntMatrix {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.debug_list().entries(self.rows()).finish()
    }
}

/// Symmetric matrix stored as its packed lower triangle.
#[derive(Clone, Debug, PartialEq)]
pub struct SymMatrix<T> {
    n: usize,
    data: Vec<T>,
}

#[inline]
fn packed(i: usize, j: usize) -> usize {
    let (i, j) = if i >= j { (i, j) } else { (j, i) };
    i * (i + 1) / 2 + j
}

impl<T: Field> SymMatrix<T> {
    pub fn zeros(n: usize) -> Self {
        SymMatrix { n, data: vec![T::zero(); n * (n + 1) / 2] }
    }

    pub fn identity(n: usize) -> Self {
        let mut m = Self::zeros(n);
        for i in 0..n {
            m.set(i, i, T::one());
        }
        m
    }

    /// Builds from `f(i, j)` evaluated for `j ≤ i`.
    pub fn from_fn(n: usize, mut f: impl FnMut(usize, usize) -> T) -> Self {
        let mut data = Vec::with_capacity(n * (n + 1) / 2);
        for i in 0..n {
            for j in 0..=i {
                data.push(f(i, j));
            }
        }
        SymMatrix { n, data }
    }

    pub fn order(&self) -> usize {
        self.n
    }

    pub fn get(&self, i: usize, j: usize) -> &T {
        &self.data[packed(i, j)]
    }

    pub fn set(&mut self, i: usize, j: usize, v: T) {
        self.data[packed(i, j)] = v;
    }

    pub fn entries(&self) -> impl Iterator<Item = &T> {
        self.data.iter()
    }

    /// `self + c·I`.
    pub fn shift(&self, c: &T) -> Self {
        let mut m = self.clone();
        for i in 0..self.n {
            let v = m.get(i, i).clone() + c;
            m.set(i, i, v);
        }
        m
    }

    pub fn scale(&self, c: &T) -> Self {
        SymMatrix { n: self.n, data: self.data.iter().map(|x| x.clone() * c).collect() }
    }

    /// `[[self, col], [colᵀ, corner]]`.
    pub fn bordered(&self, col: &[T], corner: T) -> Self {
        assert_eq!(col.len(), self.n);
        let n = self.n;
        SymMatrix::from_fn(n + 1, |i, j| {
            if i < n {
                self.get(i, j).clone()
            } else if j < n {
                col[j].clone()
            } else {
                corner.clone()
            }
        })
    }

    pub fn principal(&self, idx: &[usize]) -> Self {
        SymMatrix::from_fn(idx.len(), |i, j| self.get(idx[i], idx[j]).clone())
    }

    pub fn mul_vec(&self, x: &[T]) -> Vec<T> {
        (0..self.n)
            .map(|i| {
                (0..self.n).fold(T::zero(), |acc, j| acc + &(self.get(i, j).clone() * &x[j]))
            })
            .collect()
    }

    /// `xᵀ·self·x`.
    pub fn quad_form(&self, x: &[T]) -> T {
        dot(x, &self.mul_vec(x))
    }

    pub fn to_dense(&self) -> Vec<Vec<T>> {
        (0..self.n).map(|i| (0..self.n).map(|j| self.get(i, j).clone()).collect()).collect()
    }

    pub fn rank(&self) -> usize {
        rank(self.to_dense())
    }

    pub fn map<U: Field>(&self, f: impl Fn(&T) -> U) -> SymMatrix<U> {
        SymMatrix { n: self.n, data: self.data.iter().map(f).collect() }
    }
}

impl SymMatrix<BigRational> {
    /// Lifts a rational matrix into any field containing `Q`.
    pub fn embed<U: Field>(&self) -> SymMatrix<U> {
        self.map(U::from_rational)
    }
}

pub fn dot<T: Field>(x: &[T], y: &[T]) -> T {
    x.iter().zip(y).fold(T::zero(), |acc, (a, b)| acc + &(a.clone() * b))
}

/// Reduced row echelon form in place; returns the pivot columns.
pub fn rref<T: Field>(m: &mut [Vec<T>]) -> Vec<usize> {
    let rows = m.len();
    let cols = m.first().map_or(0, |r| r.len());
    let mut pivots = Vec::new();
    let mut r = 0;
    for c in 0..cols {
        if r == rows {
            break;
        }
        let Some(p) = (r..rows).find(|&i| !m[i][c].is_zero_exact()) else {
            continue;
        };
        m.swap(r, p);
        let inv = T::one() / &m[r][c];
        for x in m[r].iter_mut() {
            *x = x.clone() * &inv;
        }
        for i in 0..rows {
            if i != r && !m[i][c].is_zero_exact() {
                let f = m[i][c].clone();
                for k in c..cols {
                    let v = m[i][k].clone() - &(f.clone() * &m[r][k]);
                    m[i][k] = v;
                }
            }
        }
        pivots.push(c);
        r += 1;
    }
    pivots
}

pub fn rank<T: Field>(mut m: Vec<Vec<T>>) -> usize {
    rref(&mut m).len()
}

/// Some `x` with `a·x = b`, or `None` when `b` is outside the column space.
pub fn solve<T: Field>(a: &[Vec<T>], b: &[T]) -> Option<Vec<T>> {
    let cols = a.first().map_or(0, |r| r.len());
    let mut aug: Vec<Vec<T>> = a
        .iter()
        .zip(b)
        .map(|(row, bi)| {
            let mut r = row.clone();
            r.push(bi.clone());
            r
        })
        .collect();
    let pivots = rref(&mut aug);
    if pivots.last() == Some(&cols) {
        return None;
    }
    let mut x = vec![T::zero(); cols];
    for (r, &c) in pivots.iter().enumerate() {
        x[c] = aug[r][cols].clone();
    }
    Some(x)
}

/// Basis of the right null space of `a` with `ncols` columns.
pub fn kernel<T: Field>(a: &[Vec<T>], ncols: usize) -> Vec<Vec<T>> {
    let mut m = a.to_vec();
    let pivots = rref(&mut m);
    let free: Vec<usize> = (0..ncols).filter(|c| !pivots.contains(c)).collect();
    free.iter()
        .map(|&f| {
            let mut v = vec![T::zero(); ncols];
            v[f] = T::one();
            for (r, &c) in pivots.iter().enumerate() {
                v[c] = -m[r][f].clone();
            }
            v
        })
        .collect()
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::algebra::field::{rat, ratio};

    fn q(rows: &[&[i64]]) -> Vec<Vec<BigRational>> {
        rows.iter().map(|r| r.iter().map(|&x| rat(x)).collect()).collect()
    }

    #[test]
    fn packed_symmetry() {
        let mut m: SymMatrix<BigRational> = SymMatrix::zeros(3);
        m.set(0, 2, rat(5));
        assert_eq!(m.get(2, 0), &rat(5));
        assert_eq!(m.quad_form(&[rat(1), rat(0), rat(1)]), rat(10));
    }

    #[test]
    fn rank_and_kernel() {
        let a = q(&[&[1, 2, 3], &[2, 4, 6], &[1, 0, 1]]);
        assert_eq!(rank(a.clone()), 2);
        let ker = kernel(&a, 3);
        assert_eq!(ker.len(), 1);
        for row in &a {
            assert_eq!(dot(row, &ker[0]), rat(0));
        }
    }

    #[test]
    fn solve_consistent_and_not() {
        let a = q(&[&[2, 0], &[0, 0]]);
        assert_eq!(solve(&a, &[rat(1), rat(0)]), Some(vec![ratio(1, 2), rat(0)]));
        assert_eq!(solve(&a, &[rat(1), rat(1)]), None);
    }

    #[test]
    fn bordered_layout() {
        let m: SymMatrix<BigRational> = SymMatrix::identity(1);
        let b = m.bordered(&[rat(1)], rat(2));
        assert_eq!(b.to_dense(), q(&[&[1, 1], &[1, 2]]));
    }
}
