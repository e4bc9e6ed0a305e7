//! Positive-semidefiniteness certificates by symmetric pivoted LDLᵀ.
//!
//! Pivots are always taken on the largest remaining diagonal entry, first
//! index on ties, so certificates are deterministic.

use std::cmp::Ordering;

use super::field::Field;
use super::matrix::{self, SymMatrix};

/// Outcome of [`psd_status`].
#[derive(Clone, Debug, PartialEq)]
pub enum PsdCertificate<T> {
    Psd { rank: usize },
    NotPsd { witness: Vec<T> },
}

impl<T> PsdCertificate<T> {
    pub fn is_psd(&self) -> bool {
        matches!(self, PsdCertificate::Psd { .. })
    }

    pub fn rank(&self) -> Option<usize> {
        match self {
            PsdCertificate::Psd { rank } => Some(*rank),
            PsdCertificate::NotPsd { .. } => None,
        }
    }
}

/// Partial factorization `M = L·D·Lᵀ ⊕ W`.
///
/// `pivots[k]` is the row eliminated at step `k` with pivot value `d[k] > 0`;
/// `l[i][k]` is the multiplier of row `i` in column `k` (`l[pivots[k]][k] = 1`,
/// zero for rows eliminated before step `k`).
#[derive(Clone, Debug)]
pub struct Ldl<T> {
    pub pivots: Vec<usize>,
    pub d: Vec<T>,
    pub l: Vec<Vec<T>>,
    pub witness: Option<Vec<T>>,
}

impl<T: Field> Ldl<T> {
    pub fn rank(&self) -> usize {
        self.pivots.len()
    }

    pub fn certificate(&self) -> PsdCertificate<T> {
        match &self.witness {
            Some(w) => PsdCertificate::NotPsd { witness: w.clone() },
            None => PsdCertificate::Psd { rank: self.rank() },
        }
    }
}

/// Pivoted LDLᵀ that stops at the first proof of indefiniteness.
pub fn ldl<T: Field>(m: &SymMatrix<T>) -> Ldl<T> {
    let n = m.order();
    let mut w = m.to_dense();
    let mut active: Vec<usize> = (0..n).collect();
    let mut out = Ldl { pivots: Vec::new(), d: Vec::new(), l: vec![Vec::new(); n], witness: None };

    while !active.is_empty() {
        let k = out.pivots.len();
        if let Some(&p) = active.iter().find(|&&i| w[i][i].is_neg()) {
            let mut x = vec![T::zero(); n];
            x[p] = T::one();
            out.witness = Some(lift(&out, &active, x));
            return out;
        }
        let mut p = active[0];
        for &i in &active[1..] {
            if w[i][i].cmp_field(&w[p][p]) == Ordering::Greater {
                p = i;
            }
        }
        if w[p][p].is_zero_exact() {
            for &i in &active {
                for &j in &active {
                    if i != j && !w[i][j].is_zero_exact() {
                        let mut x = vec![T::zero(); n];
                        x[i] = -w[i][j].clone();
                        x[j] = T::one();
                        out.witness = Some(lift(&out, &active, x));
                        return out;
                    }
                }
            }
            return out;
        }
        let dk = w[p][p].clone();
        active.retain(|&i| i != p);
        for row in out.l.iter_mut() {
            row.push(T::zero());
        }
        out.l[p][k] = T::one();
        for &i in &active {
            out.l[i][k] = w[i][p].clone() / &dk;
        }
        for &i in &active {
            if out.l[i][k].is_zero_exact() {
                continue;
            }
            for &j in &active {
                let v = w[i][j].clone() - &(out.l[i][k].clone() * &w[p][j]);
                w[i][j] = v;
            }
        }
        out.pivots.push(p);
        out.d.push(dk);
    }
    out
}

/// Extends a vector supported on the Schur complement to one on the full
/// matrix with the same quadratic form value.
fn lift<T: Field>(f: &Ldl<T>, active: &[usize], mut x: Vec<T>) -> Vec<T> {
    for k in (0..f.pivots.len()).rev() {
        let mut s = T::zero();
        for &i in active {
            s = s + &(f.l[i][k].clone() * &x[i]);
        }
        for j in k + 1..f.pivots.len() {
            let pj = f.pivots[j];
            s = s + &(f.l[pj][k].clone() * &x[pj]);
        }
        x[f.pivots[k]] = -s;
    }
    x
}

pub fn psd_status<T: Field>(m: &SymMatrix<T>) -> PsdCertificate<T> {
    ldl(m).certificate()
}

/// Some `x` with `M·x = b` when `b` lies in the column space of `M`.
pub fn solve_symmetric<T: Field>(m: &SymMatrix<T>, b: &[T]) -> Option<Vec<T>> {
    matrix::solve(&m.to_dense(), b)
}
