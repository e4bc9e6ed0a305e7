//! Root lattices `A_n`, `D_n`, `E_6`, `E_7`, `E_8`; the lattice `Λ(G)`
//! spanned by vectors with Gram matrix `A(cone G) + 2I`; root enumeration
//! and classification; switching-class representatives.

use std::collections::BTreeSet;
use std::fmt;
use std::str::FromStr;

use num_bigint::BigInt;
use num_integer::Integer;
use num_traits::{One, Signed, ToPrimitive, Zero};
use serde::{Serialize, Serializer};

use crate::algebra::psd::ldl;
use crate::algebra::{rat, ratio, Field, IntMatrix};
use crate::error::{Error, Result};
use crate::graph::Graph;
use crate::{Rational, RationalMatrix};

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub enum Family {
    A,
    D,
    E,
}

/// Irreducible root lattice type.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct RootLatticeType {
    pub family: Family,
    pub rank: usize,
}

impl RootLatticeType {
    pub fn new(family: Family, rank: usize) -> Result<Self> {
        let ok = match family {
            Family::A => rank >= 1,
            Family::D => rank >= 4,
            Family::E => (6..=8).contains(&rank),
        };
        if ok {
            Ok(RootLatticeType { family, rank })
        } else {
            Err(Error::InvalidType(format!("{family:?}{rank}")))
        }
    }

    pub fn a(n: usize) -> Self {
        Self::new(Family::A, n).expect("valid A rank")
    }

    pub fn d(n: usize) -> Self {
        Self::new(Family::D, n).expect("valid D rank")
    }

    pub fn e(n: usize) -> Self {
        Self::new(Family::E, n).expect("valid E rank")
    }

    /// Number of roots.
    pub fn root_count(&self) -> usize {
        let n = self.rank;
        match (self.family, n) {
            (Family::A, _) => n * n + n,
            (Family::D, _) => 2 * n * n - 2 * n,
            (Family::E, 6) => 72,
            (Family::E, 7) => 126,
            (Family::E, _) => 240,
        }
    }
}

impl fmt::Display for RootLatticeType {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{:?}{}", self.family, self.rank)
    }
}

impl FromStr for RootLatticeType {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        let s = s.trim().replace('_', "");
        let (head, tail) = s.split_at(s.len().min(1));
        let family = match head {
            "A" | "a" => Family::A,
            "D" | "d" => Family::D,
            "E" | "e" => Family::E,
            _ => return Err(Error::InvalidType(s.to_string())),
        };
        let rank = tail.parse().map_err(|_| Error::InvalidType(s.to_string()))?;
        Self::new(family, rank)
    }
}

impl Serialize for RootLatticeType {
    fn serialize<S: Serializer>(&self, s: S) -> std::result::Result<S::Ok, S::Error> {
        s.serialize_str(&self.to_string())
    }
}

/// Integer Gram matrix of a generating set, with the rank of the lattice.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct GramLattice {
    pub gram: IntMatrix,
    pub rank: usize,
}

impl GramLattice {
    pub fn from_gram(gram: IntMatrix) -> Result<Self> {
        let f = ldl(&gram.to_field::<Rational>());
        if f.witness.is_some() {
            return Err(Error::PreconditionViolated("Gram matrix is not positive semidefinite".into()));
        }
        Ok(GramLattice { rank: f.rank(), gram })
    }

    pub fn generators(&self) -> usize {
        self.gram.order()
    }
}

impl Serialize for GramLattice {
    fn serialize<S: Serializer>(&self, s: S) -> std::result::Result<S::Ok, S::Error> {
        serde_json::json!({ "gram": self.gram.rows(), "rank": self.rank }).serialize(s)
    }
}

/// Roots as coordinate vectors, with the inner product of the coordinates.
#[derive(Clone, Debug, PartialEq)]
pub struct RootSystem {
    pub roots: Vec<Vec<Rational>>,
    pub form: Vec<Vec<Rational>>,
}

impl RootSystem {
    pub fn len(&self) -> usize {
        self.roots.len()
    }

    pub fn is_empty(&self) -> bool {
        self.roots.is_empty()
    }

    pub fn inner(&self, x: &[Rational], y: &[Rational]) -> Rational {
        let mut s = Rational::zero();
        for (i, xi) in x.iter().enumerate() {
            if xi.is_zero() {
                continue;
            }
            for (j, yj) in y.iter().enumerate() {
                if !yj.is_zero() && !self.form[i][j].is_zero() {
                    s += xi * yj * &self.form[i][j];
                }
            }
        }
        s
    }

    /// Whether the graph on roots joined by nonzero inner products is
    /// connected.
    pub fn is_connected(&self) -> bool {
        let n = self.roots.len();
        if n == 0 {
            return true;
        }
        let mut seen = vec![false; n];
        let mut stack = vec![0];
        seen[0] = true;
        while let Some(i) = stack.pop() {
            for j in 0..n {
                if !seen[j] && !self.inner(&self.roots[i], &self.roots[j]).is_zero() {
                    seen[j] = true;
                    stack.push(j);
                }
            }
        }
        seen.into_iter().all(|s| s)
    }

    /// One vector per line, entries separated by spaces.
    pub fn to_text(&self) -> String {
        let mut out = String::new();
        for r in &self.roots {
            let parts: Vec<String> = r.iter().map(crate::algebra::fmt_rational).collect();
            out.push_str(&parts.join(" "));
            out.push('\n');
        }
        out
    }
}

fn unit(n: usize, i: usize) -> Vec<Rational> {
    let mut v = vec![Rational::zero(); n];
    v[i] = Rational::one();
    v
}

fn identity_form(n: usize) -> Vec<Vec<Rational>> {
    (0..n).map(|i| unit(n, i)).collect()
}

fn add(x: &[Rational], y: &[Rational]) -> Vec<Rational> {
    x.iter().zip(y).map(|(a, b)| a + b).collect()
}

fn sub(x: &[Rational], y: &[Rational]) -> Vec<Rational> {
    x.iter().zip(y).map(|(a, b)| a - b).collect()
}

fn euclid(x: &[Rational], y: &[Rational]) -> Rational {
    x.iter().zip(y).map(|(a, b)| a * b).sum()
}

fn d_roots(n: usize) -> Vec<Vec<Rational>> {
    let mut out = Vec::new();
    for i in 0..n {
        for j in i + 1..n {
            for (si, sj) in [(1, 1), (1, -1), (-1, 1), (-1, -1)] {
                let mut v = vec![Rational::zero(); n];
                v[i] = rat(si);
                v[j] = rat(sj);
                out.push(v);
            }
        }
    }
    out
}

fn e8_roots() -> Vec<Vec<Rational>> {
    let mut out = d_roots(8);
    for mask in 0u32..256 {
        if mask.count_ones() % 2 == 0 {
            out.push((0..8).map(|i| if mask >> i & 1 == 1 { ratio(-1, 2) } else { ratio(1, 2) }).collect());
        }
    }
    out
}

/// Roots in the usual coordinates: `A_n` in `Z^{n+1}`, `D_n` in `Z^n`, and
/// the `E` family inside `E_8 = D_8 ⊔ (j/2 + D_8)` cut by orthogonality to
/// `e_1 − e_2` (`E_7`) and also `e_2 − e_3` (`E_6`).
pub fn standard_roots(t: RootLatticeType) -> Result<RootSystem> {
    let t = RootLatticeType::new(t.family, t.rank)?;
    let (mut roots, dim) = match t.family {
        Family::A => {
            let m = t.rank + 1;
            let mut out = Vec::new();
            for i in 0..m {
                for j in 0..m {
                    if i != j {
                        out.push(sub(&unit(m, i), &unit(m, j)));
                    }
                }
            }
            (out, m)
        }
        Family::D => (d_roots(t.rank), t.rank),
        Family::E => {
            let c1 = sub(&unit(8, 0), &unit(8, 1));
            let c2 = sub(&unit(8, 1), &unit(8, 2));
            let keep = |v: &Vec<Rational>| match t.rank {
                8 => true,
                7 => euclid(v, &c1).is_zero(),
                _ => euclid(v, &c1).is_zero() && euclid(v, &c2).is_zero(),
            };
            (e8_roots().into_iter().filter(keep).collect(), 8)
        }
    };
    roots.sort();
    Ok(RootSystem { roots, form: identity_form(dim) })
}

/// Gram matrix of a Z-basis of the standard lattice.
pub fn standard_lattice(t: RootLatticeType) -> Result<GramLattice> {
    let sys = standard_roots(t)?;
    let den = sys
        .roots
        .iter()
        .flatten()
        .fold(BigInt::one(), |acc, x| acc.lcm(x.denom()));
    let rows: Vec<Vec<BigInt>> = sys
        .roots
        .iter()
        .map(|r| r.iter().map(|x| (x * Rational::from_integer(den.clone())).to_integer()).collect())
        .collect();
    let hnf = Hnf::new(rows);
    let basis: Vec<Vec<Rational>> = hnf.basis().iter()
        .map(|b| b.iter().map(|x| Rational::new(x.clone(), den.clone())).collect())
        .collect();
    let r = basis.len();
    let gram = IntMatrix::from_fn(r, |i, j| {
        let v = euclid(&basis[i], &basis[j]);
        assert!(v.is_integer(), "standard lattice must be integral");
        v.to_integer().to_i64().expect("small Gram entry")
    });
    GramLattice::from_gram(gram)
}

/// `Λ(G)`: Gram matrix `A(cone G) + 2I`.
pub fn lambda_lattice(g: &Graph) -> Result<GramLattice> {
    let gram = g.cone().adjacency().shift(2);
    GramLattice::from_gram(gram).map_err(|_| Error::EigenvalueTooLarge)
}

/// Row-style Hermite normal form with the unimodular transform `U·A = H`.
struct Hnf {
    h: Vec<Vec<BigInt>>,
    u: Vec<Vec<BigInt>>,
    rank: usize,
}

fn ext_gcd(a: &BigInt, b: &BigInt) -> (BigInt, BigInt, BigInt) {
    let e = a.extended_gcd(b);
    (e.gcd, e.x, e.y)
}

impl Hnf {
    fn new(a: Vec<Vec<BigInt>>) -> Self {
        let m = a.len();
        let cols = a.first().map_or(0, |r| r.len());
        let mut h = a;
        let mut u: Vec<Vec<BigInt>> = (0..m)
            .map(|i| (0..m).map(|j| BigInt::from((i == j) as i64)).collect())
            .collect();
        let mut row = 0;
        for col in 0..cols {
            if row == m {
                break;
            }
            for i in row + 1..m {
                if h[i][col].is_zero() {
                    continue;
                }
                if h[row][col].is_zero() {
                    h.swap(row, i);
                    u.swap(row, i);
                    continue;
                }
                let (g, x, y) = ext_gcd(&h[row][col], &h[i][col]);
                let a = &h[row][col] / &g;
                let b = &h[i][col] / &g;
                combine(&mut h, row, i, &x, &y, &a, &b);
                combine(&mut u, row, i, &x, &y, &a, &b);
            }
            if h[row][col].is_zero() {
                continue;
            }
            if h[row][col].is_negative() {
                negate(&mut h[row]);
                negate(&mut u[row]);
            }
            for k in 0..row {
                let q = h[k][col].div_floor(&h[row][col]);
                if !q.is_zero() {
                    axpy(&mut h, k, row, &q);
                    axpy(&mut u, k, row, &q);
                }
            }
            row += 1;
        }
        Hnf { h, u, rank: row }
    }

    fn basis(&self) -> &[Vec<BigInt>] {
        &self.h[..self.rank]
    }
}

/// `(r_i, r_j) ← (x r_i + y r_j, −b r_i + a r_j)`, a unimodular step.
fn combine(m: &mut [Vec<BigInt>], i: usize, j: usize, x: &BigInt, y: &BigInt, a: &BigInt, b: &BigInt) {
    for k in 0..m[i].len() {
        let (ri, rj) = (m[i][k].clone(), m[j][k].clone());
        m[i][k] = x * &ri + y * &rj;
        m[j][k] = a * &rj - b * &ri;
    }
}

fn negate(r: &mut [BigInt]) {
    for x in r.iter_mut() {
        *x = -x.clone();
    }
}

/// `row_k ← row_k − q·row_r`.
fn axpy(m: &mut [Vec<BigInt>], k: usize, r: usize, q: &BigInt) {
    for c in 0..m[k].len() {
        let v = q * &m[r][c];
        m[k][c] -= v;
    }
}

/// Gram–Schmidt data from a Gram matrix: `mu[i][j]` for `j < i` and the
/// squared lengths `b[i]`.
fn gso(q: &[Vec<Rational>]) -> (Vec<Vec<Rational>>, Vec<Rational>) {
    let n = q.len();
    let mut mu = vec![vec![Rational::zero(); n]; n];
    let mut b = vec![Rational::zero(); n];
    for i in 0..n {
        for j in 0..i {
            let mut s = q[i][j].clone();
            for k in 0..j {
                s -= &mu[j][k] * &mu[i][k] * &b[k];
            }
            mu[i][j] = s / &b[j];
        }
        let mut s = q[i][i].clone();
        for k in 0..i {
            s -= &mu[i][k] * &mu[i][k] * &b[k];
        }
        b[i] = s;
    }
    (mu, b)
}

fn round_half_up(x: &Rational) -> BigInt {
    (x + ratio(1, 2)).floor().to_integer()
}

/// Exact LLL reduction (δ = 3/4) of a positive definite Gram matrix.
/// Returns the reduced Gram matrix and `T` with reduced_i = Σ T_ik b_k.
fn lll(q0: &[Vec<Rational>]) -> (Vec<Vec<Rational>>, Vec<Vec<BigInt>>) {
    let n = q0.len();
    let mut q = q0.to_vec();
    let mut t: Vec<Vec<BigInt>> =
        (0..n).map(|i| (0..n).map(|j| BigInt::from((i == j) as i64)).collect()).collect();
    let delta = ratio(3, 4);
    let mut k = 1;
    while k < n {
        for j in (0..k).rev() {
            let (mu, _) = gso(&q);
            let r = round_half_up(&mu[k][j]);
            if r.is_zero() {
                continue;
            }
            // b_k ← b_k − r b_j
            for c in 0..n {
                let v = &r * &t[j][c];
                t[k][c] -= v;
            }
            q = gram_from(&t, q0);
        }
        let (mu, b) = gso(&q);
        if b[k] >= (&delta - &mu[k][k - 1] * &mu[k][k - 1]) * &b[k - 1] {
            k += 1;
        } else {
            t.swap(k, k - 1);
            q = gram_from(&t, q0);
            k = (k - 1).max(1);
        }
    }
    (q, t)
}

/// `T·Q0·Tᵀ`.
fn gram_from(t: &[Vec<BigInt>], q0: &[Vec<Rational>]) -> Vec<Vec<Rational>> {
    let n = t.len();
    let tr: Vec<Vec<Rational>> =
        t.iter().map(|r| r.iter().map(|x| Rational::from_integer(x.clone())).collect()).collect();
    let mut tq = vec![vec![Rational::zero(); n]; n];
    for i in 0..n {
        for k in 0..n {
            if tr[i][k].is_zero() {
                continue;
            }
            for j in 0..n {
                tq[i][j] += &tr[i][k] * &q0[k][j];
            }
        }
    }
    let mut out = vec![vec![Rational::zero(); n]; n];
    for i in 0..n {
        for j in 0..n {
            let mut s = Rational::zero();
            for k in 0..n {
                if !tr[j][k].is_zero() {
                    s += &tq[i][k] * &tr[j][k];
                }
            }
            out[i][j] = s;
        }
    }
    out
}

/// All integer `x ≠ 0` with `xᵀ Q x = target`, by Fincke–Pohst on the
/// Gram–Schmidt data of a positive definite `Q`.
fn short_vectors(q: &[Vec<Rational>], target: &Rational) -> Vec<Vec<BigInt>> {
    let n = q.len();
    let (mu, b) = gso(q);
    let mut out = Vec::new();
    let mut x = vec![BigInt::zero(); n];
    fp_rec(n, &mu, &b, target.clone(), &mut x, &mut out);
    out
}

fn fp_rec(
    level: usize,
    mu: &[Vec<Rational>],
    b: &[Rational],
    remaining: Rational,
    x: &mut Vec<BigInt>,
    out: &mut Vec<Vec<BigInt>>,
) {
    if level == 0 {
        if remaining.is_zero() && x.iter().any(|c| !c.is_zero()) {
            out.push(x.clone());
        }
        return;
    }
    let i = level - 1;
    let n = x.len();
    // centre c = −Σ_{j>i} mu[j][i] x_j
    let mut c = Rational::zero();
    for j in i + 1..n {
        if !x[j].is_zero() {
            c -= &mu[j][i] * Rational::from_integer(x[j].clone());
        }
    }
    let radius = (remaining.clone() / &b[i]).to_float().max(0.0).sqrt();
    let cf = c.to_float();
    let lo = BigInt::from((cf - radius).floor() as i64 - 1);
    let hi = BigInt::from((cf + radius).ceil() as i64 + 1);
    let mut v = lo;
    while v <= hi {
        let d = Rational::from_integer(v.clone()) - &c;
        let used = &b[i] * &d * &d;
        if used <= remaining {
            x[i] = v.clone();
            fp_rec(i, mu, b, &remaining - &used, x, out);
        }
        v += 1;
    }
    x[i] = BigInt::zero();
}

/// Reduced basis data for a Gram lattice.
struct Reduced {
    /// Gram matrix of the LLL-reduced Z-basis.
    q: Vec<Vec<Rational>>,
    /// Generator coordinates of each reduced basis vector.
    to_generators: Vec<Vec<BigInt>>,
}

fn reduce(l: &GramLattice) -> Reduced {
    let m = l.generators();
    let g: RationalMatrix = l.gram.to_field();
    let f = ldl(&g);
    let piv = f.pivots.clone();
    let r = piv.len();
    if r == 0 {
        return Reduced { q: Vec::new(), to_generators: Vec::new() };
    }
    // coordinates of every generator in the basis given by the pivots
    let gpp: Vec<Vec<Rational>> =
        piv.iter().map(|&a| piv.iter().map(|&b| g.get(a, b).clone()).collect()).collect();
    let coords: Vec<Vec<Rational>> = (0..m)
        .map(|i| {
            let rhs: Vec<Rational> = piv.iter().map(|&a| g.get(a, i).clone()).collect();
            crate::algebra::matrix::solve(&gpp, &rhs).expect("generator lies in the span")
        })
        .collect();
    let den = coords.iter().flatten().fold(BigInt::one(), |acc, x| acc.lcm(x.denom()));
    let scaled: Vec<Vec<BigInt>> = coords
        .iter()
        .map(|c| c.iter().map(|x| (x * Rational::from_integer(den.clone())).to_integer()).collect())
        .collect();
    let hnf = Hnf::new(scaled);
    assert_eq!(hnf.rank, r);
    let basis: Vec<Vec<Rational>> = hnf
        .basis()
        .iter()
        .map(|b| b.iter().map(|x| Rational::new(x.clone(), den.clone())).collect())
        .collect();
    let q0: Vec<Vec<Rational>> = (0..r)
        .map(|i| {
            (0..r)
                .map(|j| {
                    let mut s = Rational::zero();
                    for a in 0..r {
                        for b in 0..r {
                            s += &basis[i][a] * &gpp[a][b] * &basis[j][b];
                        }
                    }
                    s
                })
                .collect()
        })
        .collect();
    let (q, t) = lll(&q0);
    let to_generators = t
        .iter()
        .map(|row| {
            let mut v = vec![BigInt::zero(); m];
            for (k, coef) in row.iter().enumerate() {
                if coef.is_zero() {
                    continue;
                }
                for (gi, u) in hnf.u[k].iter().enumerate() {
                    v[gi] += coef * u;
                }
            }
            v
        })
        .collect();
    Reduced { q, to_generators }
}

/// All roots of the lattice, in generator coordinates (a canonical
/// representative modulo the relation module), sorted.
pub fn enumerate_roots(l: &GramLattice) -> RootSystem {
    let red = reduce(l);
    let roots = roots_in_basis(&red);
    let m = l.generators();
    let mut gen: Vec<Vec<Rational>> = roots
        .iter()
        .map(|x| {
            let mut v = vec![BigInt::zero(); m];
            for (k, c) in x.iter().enumerate() {
                if c.is_zero() {
                    continue;
                }
                for gi in 0..m {
                    v[gi] += c * &red.to_generators[k][gi];
                }
            }
            v.into_iter().map(Rational::from_integer).collect()
        })
        .collect();
    gen.sort();
    let form = (0..m).map(|i| (0..m).map(|j| rat(l.gram.get(i, j))).collect()).collect();
    RootSystem { roots: gen, form }
}

fn roots_in_basis(red: &Reduced) -> Vec<Vec<BigInt>> {
    if red.q.is_empty() {
        return Vec::new();
    }
    short_vectors(&red.q, &rat(2))
}

/// Determines the irreducible type from the rank and the number of roots.
pub fn classify(l: &GramLattice) -> Result<RootLatticeType> {
    let red = reduce(l);
    let roots = roots_in_basis(&red);
    let r = red.q.len();
    if r == 0 {
        return Err(Error::NotRootGenerated);
    }
    // roots generate iff their HNF in basis coordinates is unimodular
    let hnf = Hnf::new(roots.clone());
    let det = (0..hnf.rank).fold(BigInt::one(), |acc, i| {
        let col = hnf.h[i].iter().position(|x| !x.is_zero()).unwrap();
        acc * &hnf.h[i][col]
    });
    if hnf.rank != r || !det.is_one() {
        return Err(Error::NotRootGenerated);
    }
    let sys = RootSystem {
        roots: roots.iter().map(|x| x.iter().cloned().map(Rational::from_integer).collect()).collect(),
        form: red.q.clone(),
    };
    if !sys.is_connected() {
        return Err(Error::NotIrreducible);
    }
    type_from_counts(r, roots.len()).ok_or(Error::NotRootGenerated)
}

/// The unique irreducible type with this rank and root count.
pub fn type_from_counts(rank: usize, count: usize) -> Option<RootLatticeType> {
    let mut candidates = vec![RootLatticeType::a(rank)];
    if rank >= 4 {
        candidates.push(RootLatticeType::d(rank));
    }
    if (6..=8).contains(&rank) {
        candidates.push(RootLatticeType::e(rank));
    }
    candidates.into_iter().find(|t| t.root_count() == count)
}

/// The graph whose `A + 2I` is the Gram matrix of `x`.
fn graph_from_roots(x: &[Vec<Rational>]) -> Result<Graph> {
    let n = x.len();
    let mut g = Graph::empty(n);
    for i in 0..n {
        for j in i + 1..n {
            let v = euclid(&x[i], &x[j]);
            if v == rat(1) {
                g.add_edge(i, j);
            } else if !v.is_zero() {
                return Err(Error::PreconditionViolated(format!("inner product {v} in X")));
            }
        }
    }
    Ok(g)
}

/// Fixed switching root `r` and admissible set `X` for each type.
pub fn class_rep_data(t: RootLatticeType) -> Result<(Vec<Rational>, Vec<Vec<Rational>>)> {
    let t = RootLatticeType::new(t.family, t.rank)?;
    let n = t.rank;
    Ok(match t.family {
        Family::A => {
            let e = |i: usize| unit(n + 1, i - 1);
            (sub(&e(1), &e(2)), (3..=n + 1).map(|i| sub(&e(1), &e(i))).collect())
        }
        Family::D => {
            let e = |i: usize| unit(n, i - 1);
            let x = [1, 2].iter().flat_map(|&i| (3..=n).map(move |j| (i, j))).map(|(i, j)| add(&e(i), &e(j)));
            (add(&e(1), &e(2)), x.collect())
        }
        Family::E => {
            let e = |i: usize| unit(8, i - 1);
            let half = vec![ratio(1, 2); 8];
            let mut x = Vec::new();
            if n == 7 {
                x.push(add(&e(1), &e(2)));
            }
            let from = match n {
                8 => 1,
                7 => 3,
                _ => 4,
            };
            for i in from..=8 {
                for j in i + 1..=8 {
                    x.push(add(&e(i), &e(j)));
                }
            }
            (half, x)
        }
    })
}

/// A graph in the switching class `[L]` of the standard lattice of type `t`.
pub fn switching_class_rep(t: RootLatticeType) -> Result<Graph> {
    let (_, x) = class_rep_data(t)?;
    graph_from_roots(&x)
}

/// A representative from an arbitrary admissible `X`: one root from each
/// pair `{v, r − v}` of roots with `(r, v) = 1`, the choice given by `pick`.
pub fn switching_class_rep_with(t: RootLatticeType, mut pick: impl FnMut(usize) -> bool) -> Result<Graph> {
    let (r, _) = class_rep_data(t)?;
    let sys = standard_roots(t)?;
    let pairs = admissible_pairs(&sys, &r);
    let x: Vec<Vec<Rational>> =
        pairs.into_iter().enumerate().map(|(k, (a, b))| if pick(k) { a } else { b }).collect();
    graph_from_roots(&x)
}

/// Roots `v` with `(r, v) = 1`, paired as `{v, r − v}`.
pub fn admissible_pairs(sys: &RootSystem, r: &[Rational]) -> Vec<(Vec<Rational>, Vec<Rational>)> {
    let n: Vec<&Vec<Rational>> = sys.roots.iter().filter(|v| sys.inner(v, r) == rat(1)).collect();
    let mut seen = BTreeSet::new();
    let mut out = Vec::new();
    for v in n {
        if seen.contains(v) {
            continue;
        }
        let w = sub(r, v);
        seen.insert(v.clone());
        seen.insert(w.clone());
        out.push((v.clone(), w));
    }
    out
}

/// Proper-or-equal containment between type `D`/`E` lattices, as listed
/// for the maximality classification.
pub fn lattice_inclusion(s: RootLatticeType, t: RootLatticeType) -> Result<bool> {
    for x in [s, t] {
        if x.family == Family::A {
            return Err(Error::UnsupportedFamily(x.to_string()));
        }
    }
    Ok(match (s.family, t.family) {
        (Family::D, Family::D) => s.rank <= t.rank,
        (Family::E, Family::E) => s.rank <= t.rank,
        (Family::D, Family::E) => match t.rank {
            6 => s.rank <= 5,
            7 => s.rank <= 6,
            _ => s.rank <= 8,
        },
        _ => false,
    })
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::graph::{is_switching_equivalent, GraphSpec};

    fn g(s: &str) -> Graph {
        s.parse::<GraphSpec>().unwrap().build().unwrap()
    }

    #[test]
    fn standard_counts() {
        assert_eq!(standard_roots(RootLatticeType::a(2)).unwrap().len(), 6);
        assert_eq!(standard_roots(RootLatticeType::d(4)).unwrap().len(), 24);
        for (n, c) in [(6, 72), (7, 126), (8, 240)] {
            let sys = standard_roots(RootLatticeType::e(n)).unwrap();
            assert_eq!(sys.len(), c);
            assert!(sys.roots.iter().all(|v| euclid(v, v) == rat(2)));
        }
        assert!(RootLatticeType::new(Family::D, 3).is_err());
        assert!(RootLatticeType::new(Family::E, 9).is_err());
    }

    #[test]
    fn parse_type() {
        assert_eq!("E8".parse::<RootLatticeType>().unwrap(), RootLatticeType::e(8));
        assert_eq!("D_5".parse::<RootLatticeType>().unwrap(), RootLatticeType::d(5));
        assert!("E5".parse::<RootLatticeType>().is_err());
    }

    #[test]
    fn lambda_lattice_ranks() {
        assert_eq!(lambda_lattice(&g("L(K8)")).unwrap().rank, 8);
        assert_eq!(lambda_lattice(&g("C4")).unwrap().rank, 4);
        assert_eq!(lambda_lattice(&g("K4")).unwrap().rank, 5);
        assert_eq!(lambda_lattice(&g("Kbar5")), Err(Error::EigenvalueTooLarge));
    }

    #[test]
    fn enumerate_and_classify_small() {
        let l = lambda_lattice(&g("K4")).unwrap();
        let sys = enumerate_roots(&l);
        assert_eq!(sys.len(), 30);
        assert!(sys.roots.iter().all(|x| sys.inner(x, x) == rat(2)));
        assert_eq!(classify(&l).unwrap(), RootLatticeType::a(5));

        let l = lambda_lattice(&g("C4")).unwrap();
        assert_eq!(enumerate_roots(&l).len(), 24);
        assert_eq!(classify(&l).unwrap(), RootLatticeType::d(4));
    }

    #[test]
    fn classify_exceptional() {
        assert_eq!(classify(&lambda_lattice(&g("L(K8)")).unwrap()).unwrap(), RootLatticeType::e(8));
        assert_eq!(classify(&lambda_lattice(&g("L(K6)+K1")).unwrap()).unwrap(), RootLatticeType::e(7));
        assert_eq!(classify(&lambda_lattice(&g("L(K5)")).unwrap()).unwrap(), RootLatticeType::e(6));
        assert_eq!(enumerate_roots(&lambda_lattice(&g("L(K8)")).unwrap()).len(), 240);
    }

    #[test]
    fn standard_gram_enumeration() {
        for t in [RootLatticeType::a(3), RootLatticeType::d(5), RootLatticeType::e(6), RootLatticeType::e(8)] {
            let l = standard_lattice(t).unwrap();
            assert_eq!(l.rank, t.rank);
            assert_eq!(enumerate_roots(&l).len(), t.root_count(), "{t}");
            assert_eq!(classify(&l).unwrap(), t);
        }
    }

    #[test]
    fn reducible_and_non_root_generated() {
        // A1 ⊕ A1
        let l = GramLattice::from_gram(IntMatrix::from_rows(&[vec![2, 0], vec![0, 2]])).unwrap();
        assert_eq!(classify(&l), Err(Error::NotIrreducible));
        // 2·Z^1 has no roots
        let l = GramLattice::from_gram(IntMatrix::from_rows(&[vec![4]])).unwrap();
        assert_eq!(classify(&l), Err(Error::NotRootGenerated));
    }

    #[test]
    fn class_reps() {
        assert!(is_switching_equivalent(&switching_class_rep(RootLatticeType::a(5)).unwrap(), &g("K4")).unwrap().is_some());
        assert!(is_switching_equivalent(&switching_class_rep(RootLatticeType::d(6)).unwrap(), &g("L(K2,4)")).unwrap().is_some());
        assert!(is_switching_equivalent(&switching_class_rep(RootLatticeType::e(8)).unwrap(), &g("L(K8)")).unwrap().is_some());
        assert!(is_switching_equivalent(&switching_class_rep(RootLatticeType::e(7)).unwrap(), &g("L(K6)+K1")).unwrap().is_some());
        assert!(is_switching_equivalent(&switching_class_rep(RootLatticeType::e(6)).unwrap(), &g("L(K5)")).unwrap().is_some());
    }

    #[test]
    fn e8_pairs() {
        let sys = standard_roots(RootLatticeType::e(8)).unwrap();
        let pairs = admissible_pairs(&sys, &vec![ratio(1, 2); 8]);
        assert_eq!(pairs.len(), 28);
        let members: BTreeSet<_> = pairs.iter().flat_map(|(a, b)| [a.clone(), b.clone()]).collect();
        assert_eq!(members.len(), 56);
    }

    #[test]
    fn inclusion_table() {
        let t = |s: &str| s.parse::<RootLatticeType>().unwrap();
        assert!(lattice_inclusion(t("D8"), t("E8")).unwrap());
        assert!(!lattice_inclusion(t("D7"), t("E7")).unwrap());
        assert!(!lattice_inclusion(t("D6"), t("E6")).unwrap());
        assert!(!lattice_inclusion(t("E6"), t("D9")).unwrap());
        assert!(lattice_inclusion(t("E6"), t("E7")).unwrap());
        assert!(matches!(lattice_inclusion(t("A3"), t("E8")), Err(Error::UnsupportedFamily(_))));
    }
}
