//! Seidel matrices, exact spectra, the bordered matrices `B_θ^{(t)}` and the
//! quantity `p(G)`, switching roots, and two-eigenvalue structure.

use std::cmp::Ordering;
use std::fmt;

use num_traits::One;
use serde::{Serialize, Serializer};
use serde_json::json;

use crate::algebra::matrix::{dot, kernel, rank};
use crate::algebra::poly::{poly_mul, AlgebraicReal};
use crate::algebra::psd::ldl;
use crate::algebra::{char_poly, fmt_rational, rat, Field, IntMatrix, IntPoly, QuadraticNumber};
use crate::check::CheckReport;
use crate::error::{Error, Result};
use crate::graph::Graph;
use crate::{FieldSymMatrix, Rational};

/// Symmetric ±1 matrix with zero diagonal.
#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub struct SeidelMatrix {
    m: IntMatrix,
}

impl SeidelMatrix {
    /// Rows are read from the upper triangle, `(0,1), (0,2), …, (1,2), …`.
    pub fn from_signs(n: usize, upper: &[i8]) -> Result<Self> {
        if upper.len() != n * n.saturating_sub(1) / 2 {
            return Err(Error::Parse(format!("order {n} needs {} signs", n * n.saturating_sub(1) / 2)));
        }
        if upper.iter().any(|&s| s != 1 && s != -1) {
            return Err(Error::Parse("Seidel signs must be +1 or -1".into()));
        }
        let mut m = IntMatrix::zeros(n);
        let mut k = 0;
        for i in 0..n {
            for j in i + 1..n {
                m.set(i, j, upper[k] as i64);
                m.set(j, i, upper[k] as i64);
                k += 1;
            }
        }
        Ok(SeidelMatrix { m })
    }

    /// Parses the `+`/`-` upper-triangle string used in the JSON form.
    pub fn from_sign_string(n: usize, s: &str) -> Result<Self> {
        let signs: Vec<i8> = s
            .chars()
            .map(|c| match c {
                '+' => Ok(1),
                '-' => Ok(-1),
                _ => Err(Error::Parse(format!("unexpected sign character {c:?}"))),
            })
            .collect::<Result<_>>()?;
        Self::from_signs(n, &signs)
    }

    pub fn from_json(text: &str) -> Result<Self> {
        let v: serde_json::Value =
            serde_json::from_str(text).map_err(|e| Error::Parse(e.to_string()))?;
        let n = v["order"].as_u64().ok_or_else(|| Error::Parse("missing order".into()))? as usize;
        let s = v["signs"].as_str().ok_or_else(|| Error::Parse("missing signs".into()))?;
        Self::from_sign_string(n, s)
    }

    pub fn order(&self) -> usize {
        self.m.order()
    }

    pub fn entry(&self, i: usize, j: usize) -> i64 {
        self.m.get(i, j)
    }

    pub fn as_int(&self) -> &IntMatrix {
        &self.m
    }

    /// The graph with an edge wherever the sign is −1.
    pub fn to_graph(&self) -> Graph {
        Graph::from_fn(self.order(), |i, j| self.entry(i, j) == -1)
    }

    pub fn sign_string(&self) -> String {
        let n = self.order();
        let mut s = String::new();
        for i in 0..n {
            for j in i + 1..n {
                s.push(if self.entry(i, j) == 1 { '+' } else { '-' });
            }
        }
        s
    }

    /// `[[S, s], [sᵀ, 0]]`, the new vertex last.
    pub fn bordered(&self, s: &[i8]) -> SeidelMatrix {
        let n = self.order();
        assert_eq!(s.len(), n);
        let m = IntMatrix::from_fn(n + 1, |i, j| match (i == n, j == n) {
            (false, false) => self.entry(i, j),
            (true, true) => 0,
            (true, false) => s[j] as i64,
            (false, true) => s[i] as i64,
        });
        SeidelMatrix { m }
    }

    pub fn principal(&self, idx: &[usize]) -> SeidelMatrix {
        SeidelMatrix { m: self.m.principal(idx) }
    }

    pub fn char_poly(&self) -> IntPoly {
        char_poly(&self.m)
    }

    /// `t·I − S` over the field of `t`.
    pub fn shifted(&self, t: &QuadraticNumber) -> FieldSymMatrix {
        FieldSymMatrix::from_fn(self.order(), |i, j| {
            if i == j {
                t.clone()
            } else {
                QuadraticNumber::int(-self.entry(i, j))
            }
        })
    }
}

impl Serialize for SeidelMatrix {
    fn serialize<S: Serializer>(&self, s: S) -> std::result::Result<S::Ok, S::Error> {
        json!({ "order": self.order(), "signs": self.sign_string() }).serialize(s)
    }
}

pub fn seidel_of(g: &Graph) -> SeidelMatrix {
    SeidelMatrix { m: g.seidel_int() }
}

/// An eigenvalue given exactly when it is rational or quadratic, otherwise
/// by a square-free polynomial and an isolating interval.
#[derive(Clone, Debug, PartialEq)]
pub enum Eigenvalue {
    Exact(QuadraticNumber),
    Algebraic { poly: IntPoly, lo: Rational, hi: Rational },
}

impl Eigenvalue {
    fn from_root(root: &AlgebraicReal) -> Self {
        match root.as_quadratic() {
            Some(q) => Eigenvalue::Exact(q),
            None => {
                let (lo, hi) = root.interval();
                Eigenvalue::Algebraic { poly: root.poly().clone(), lo: lo.clone(), hi: hi.clone() }
            }
        }
    }

    pub fn exact(&self) -> Option<&QuadraticNumber> {
        match self {
            Eigenvalue::Exact(q) => Some(q),
            Eigenvalue::Algebraic { .. } => None,
        }
    }
}

impl fmt::Display for Eigenvalue {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            Eigenvalue::Exact(q) => write!(f, "{q}"),
            Eigenvalue::Algebraic { poly, lo, hi } => {
                write!(f, "root of {poly} in ({}, {})", fmt_rational(lo), fmt_rational(hi))
            }
        }
    }
}

/// Exact characteristic polynomial and largest eigenvalue.
#[derive(Clone, Debug)]
pub struct SpectrumSummary {
    pub charpoly: IntPoly,
    pub largest: Eigenvalue,
    pub largest_multiplicity: usize,
    pub root: AlgebraicReal,
}

impl SpectrumSummary {
    pub fn approx(&self) -> f64 {
        self.root.approx()
    }

    pub fn interval(&self) -> (&Rational, &Rational) {
        self.root.interval()
    }
}

impl Serialize for SpectrumSummary {
    fn serialize<S: Serializer>(&self, s: S) -> std::result::Result<S::Ok, S::Error> {
        let (lo, hi) = self.interval();
        json!({
            "charpoly": self.charpoly.to_string(),
            "largest": self.largest.to_string(),
            "largest_approx": self.approx(),
            "interval": [fmt_rational(lo), fmt_rational(hi)],
            "largest_multiplicity": self.largest_multiplicity,
        })
        .serialize(s)
    }
}

pub fn seidel_spectrum(s: &SeidelMatrix) -> Result<SpectrumSummary> {
    if s.order() == 0 {
        return Err(Error::NoSpectrum);
    }
    let charpoly = s.char_poly();
    let lr = charpoly.largest_root()?;
    Ok(SpectrumSummary {
        largest: Eigenvalue::from_root(&lr.root),
        largest_multiplicity: lr.multiplicity,
        root: lr.root,
        charpoly,
    })
}

/// All roots of a characteristic polynomial with multiplicity, largest first.
pub fn eigenvalues_desc(p: &IntPoly) -> Vec<AlgebraicReal> {
    let mut out = Vec::new();
    for (f, m) in p.squarefree_decomposition() {
        for r in f.real_roots() {
            out.extend(std::iter::repeat_n(r, m));
        }
    }
    out.sort_by(|a, b| b.cmp_exact(a));
    out
}

/// Largest eigenvalue as an exact rational or quadratic number.
pub fn largest_eigenvalue(s: &SeidelMatrix) -> Result<QuadraticNumber> {
    let spec = seidel_spectrum(s)?;
    match spec.largest {
        Eigenvalue::Exact(q) => Ok(q),
        other => Err(Error::NotApplicable(format!("largest eigenvalue {other} is not quadratic"))),
    }
}

/// Sign of `λ_max(S) − t`, decided by the inertia of `t·I − S`.
pub fn compare_largest(s: &SeidelMatrix, t: &QuadraticNumber) -> Ordering {
    let f = ldl(&s.shifted(t));
    if f.witness.is_some() {
        Ordering::Greater
    } else if f.rank() == s.order() {
        Ordering::Less
    } else {
        Ordering::Equal
    }
}

pub fn rank_at(s: &SeidelMatrix, t: &QuadraticNumber) -> usize {
    rank(s.shifted(t).to_dense())
}

/// `A(G) + θ·I`.
pub fn adjacency_shift(g: &Graph, theta: &QuadraticNumber) -> FieldSymMatrix {
    FieldSymMatrix::from_fn(g.order(), |i, j| {
        if i == j {
            theta.clone()
        } else {
            QuadraticNumber::int(g.has_edge(i, j) as i64)
        }
    })
}

/// `[[A + θI, j], [jᵀ, t]]`.
pub fn b_matrix(g: &Graph, theta: &QuadraticNumber, t: &QuadraticNumber) -> FieldSymMatrix {
    adjacency_shift(g, theta).bordered(&vec![QuadraticNumber::one(); g.order()], t.clone())
}

/// `min{t : B_θ^{(t)}(G) ⪰ 0}`; `None` when `j` is outside the column space
/// of `A + θI` and no `t` works.
pub fn p_value(g: &Graph, theta: &QuadraticNumber) -> Result<Option<QuadraticNumber>> {
    let m = adjacency_shift(g, theta);
    if ldl(&m).witness.is_some() {
        return Err(Error::ThetaTooSmall(theta.to_string()));
    }
    let j = vec![QuadraticNumber::one(); g.order()];
    Ok(crate::algebra::solve_symmetric(&m, &j).map(|x| dot(&x, &j)))
}

/// Verifies that an eigenvector of `S` for `2θ − 1` that is not orthogonal
/// to `j` produces a switching root, at the level of Gram identities.
pub fn switching_root_check(g: &Graph, theta: &QuadraticNumber) -> Result<CheckReport> {
    let lambda = theta.clone() * &QuadraticNumber::int(2) - &QuadraticNumber::one();
    let s = seidel_of(g);
    if compare_largest(&s, &lambda) != Ordering::Equal {
        return Err(Error::WrongTheta(lambda.to_string()));
    }
    let mut rep = CheckReport::new(
        "switching-root",
        "an eigenvector for 2θ−1 not orthogonal to j gives a switching root",
    );
    rep.record("graph", g).record("theta", theta);
    let n = g.order();
    let eig = kernel(&s.shifted(&lambda).to_dense(), n);
    let j = vec![QuadraticNumber::one(); n];
    let m = adjacency_shift(g, theta);
    let rk_a = m.rank();
    let rk_b = b_matrix(g, theta, &QuadraticNumber::int(2)).rank();
    rep.record("rank_a_plus_theta", rk_a).record("rank_b_theta", rk_b);
    let Some(v) = eig.iter().find(|v| !dot(v, &j).is_zero_exact()) else {
        rep.record("outcome", "no-main-eigenvector");
        return Ok(rep);
    };
    rep.record("outcome", "identities-checked");
    let c = dot(v, &j);
    let two = QuadraticNumber::int(2);
    let mv = m.mul_vec(v);
    let norm = QuadraticNumber::int(4) * &dot(v, &mv) / &(c.clone() * &c);
    rep.record("root_norm", &norm);
    rep.require("root_norm_is_2", norm == two);
    let all_one = mv.iter().all(|x| two.clone() * x / &c == QuadraticNumber::one());
    rep.require("inner_products_are_1", all_one);
    rep.require("rank_b_equals_rank_a", rk_a == rk_b);
    Ok(rep)
}

/// Spectrum data of a Seidel matrix with exactly two eigenvalues.
#[derive(Clone, Debug, PartialEq, Serialize)]
pub struct TwoEigenvalueParams {
    pub lambda: QuadraticNumber,
    pub mu: QuadraticNumber,
    pub m_lambda: usize,
    pub m_mu: usize,
}

pub fn two_eigenvalue_params(s: &SeidelMatrix) -> Option<TwoEigenvalueParams> {
    if s.order() < 2 {
        return None;
    }
    let roots = s.char_poly().real_roots();
    if roots.len() != 2 {
        return None;
    }
    let mu = roots[0].as_quadratic()?;
    let lambda = roots[1].as_quadratic()?;
    let n = s.order();
    Some(TwoEigenvalueParams {
        m_lambda: n - rank_at(s, &lambda),
        m_mu: n - rank_at(s, &mu),
        lambda,
        mu,
    })
}

/// Strongly regular parameters `(n, k, a, c)`.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize)]
pub struct SrgParams {
    pub n: usize,
    pub k: usize,
    pub a: usize,
    pub c: usize,
}

/// Parameters of a connected, non-complete strongly regular graph.
pub fn srg_params(g: &Graph) -> Option<SrgParams> {
    let n = g.order();
    if n < 3 || !g.is_connected() {
        return None;
    }
    let k = g.regular_degree()?;
    let (mut a, mut c) = (None, None);
    for i in 0..n {
        for j in i + 1..n {
            let common = (g.neighbor_mask(i) & g.neighbor_mask(j)).count_ones() as usize;
            let slot = if g.has_edge(i, j) { &mut a } else { &mut c };
            match *slot {
                None => *slot = Some(common),
                Some(x) if x != common => return None,
                _ => {}
            }
        }
    }
    Some(SrgParams { n, k, a: a.unwrap_or(0), c: c? })
}

/// `I − S/λ`, the Gram matrix of unit vectors spanning the line system.
pub fn lines_gram(s: &SeidelMatrix, lambda: &QuadraticNumber) -> Result<FieldSymMatrix> {
    if compare_largest(s, lambda) != Ordering::Equal {
        return Err(Error::NotLargestEigenvalue(lambda.to_string()));
    }
    Ok(s.shifted(lambda).scale(&(QuadraticNumber::one() / lambda)))
}

/// Whether the characteristic polynomial reduces mod 2 to that of `J − I`.
pub fn parity_check(s: &SeidelMatrix) -> bool {
    let n = s.order();
    let x_plus_1 = IntPoly::from_i64(&[1, 1]);
    let expect = if n % 2 == 0 {
        x_plus_1.pow(n)
    } else {
        IntPoly::from_i64(&[0, 1]).mul(&x_plus_1.pow(n - 1))
    };
    s.char_poly().mod2() == expect.mod2()
}

/// Sign of `λ_min(A(cone G)) + 2` mirrored to match [`compare_largest`]:
/// Less when positive definite, Equal when singular, Greater when indefinite.
fn cone_side(g: &Graph) -> (Ordering, usize) {
    let cone = g.cone();
    let m = adjacency_shift(&cone, &QuadraticNumber::int(2));
    let f = ldl(&m);
    let ord = if f.witness.is_some() {
        Ordering::Greater
    } else if f.rank() == cone.order() {
        Ordering::Less
    } else {
        Ordering::Equal
    };
    (ord, f.rank())
}

fn ordering_name(o: Ordering) -> &'static str {
    match o {
        Ordering::Less => "less",
        Ordering::Equal => "equal",
        Ordering::Greater => "greater",
    }
}

/// `λ_max(S(G)) ≤ 3 ⇔ λ_min(A(cone G)) ≥ −2`, with equality cases paired
/// and `rk(3I − S) + 1 = rk(A(cone G) + 2I)`.
pub fn cone_equivalence_check(g: &Graph) -> CheckReport {
    let mut rep = CheckReport::new(
        "cone-equivalence",
        "largest Seidel eigenvalue at most 3 iff the cone has smallest eigenvalue at least -2",
    );
    let three = QuadraticNumber::int(3);
    let s = seidel_of(g);
    let left = compare_largest(&s, &three);
    let (right, cone_rank) = cone_side(g);
    rep.record("graph", g)
        .record("seidel_vs_3", ordering_name(left))
        .record("cone_min_vs_minus_2", ordering_name(right));
    rep.require("sides_agree", left == right);
    if left != Ordering::Greater {
        let r = rank_at(&s, &three);
        rep.record("rank_3i_minus_s", r).record("rank_cone_plus_2i", cone_rank);
        rep.require("rank_identity", r + 1 == cone_rank);
    }
    rep
}

/// Spectrum of a one-vertex extension of a two-eigenvalue Seidel matrix
/// that keeps the largest eigenvalue.
pub fn extension_spectrum_check(s: &SeidelMatrix, signs: &[i8]) -> Result<CheckReport> {
    let params = two_eigenvalue_params(s)
        .ok_or_else(|| Error::PreconditionViolated("S must have exactly two eigenvalues".into()))?;
    let ext = s.bordered(signs);
    if compare_largest(&ext, &params.lambda) == Ordering::Greater {
        return Err(Error::PreconditionViolated(format!(
            "the extension has largest eigenvalue above {}",
            params.lambda
        )));
    }
    let n = s.order() as i64;
    let mut rep = CheckReport::new(
        "extension-spectrum",
        "an extension keeping λ has spectrum λ, μ (one fewer), θ, τ with θ+τ = μ and θτ = −n",
    );
    rep.record("order", n).record("params", &params).record("signs", signs);
    let lin = |c: &QuadraticNumber| vec![-c.clone(), QuadraticNumber::one()];
    let mut expect = vec![QuadraticNumber::one()];
    for _ in 0..params.m_lambda {
        expect = poly_mul(&expect, &lin(&params.lambda));
    }
    for _ in 0..params.m_mu - 1 {
        expect = poly_mul(&expect, &lin(&params.mu));
    }
    let extra = vec![QuadraticNumber::int(-n), -params.mu.clone(), QuadraticNumber::one()];
    expect = poly_mul(&expect, &extra);
    let actual: Vec<QuadraticNumber> = ext.char_poly().to_field();
    rep.require("charpoly_factorization", actual == expect);
    if let Some(mu) = params.mu.as_rational() {
        let q = IntPoly::from_rational_primitive(&[rat(-n), -mu.clone(), Rational::one()]);
        rep.record("extra_factor", q.to_string());
        let roots: Vec<String> = q
            .real_roots()
            .iter()
            .map(|r| r.as_quadratic().map_or_else(|| format!("~{}", r.approx()), |v| v.to_string()))
            .collect();
        rep.record("theta_tau", roots);
    }
    Ok(rep)
}

/// `n ≤ r(r+1)/2` with `r = rk(λI − S)` at the largest eigenvalue.
pub fn absolute_bound_holds(n: usize, r: usize) -> bool {
    n <= r * (r + 1) / 2
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::algebra::ratio;
    use crate::graph::GraphSpec;

    fn g(s: &str) -> Graph {
        s.parse::<GraphSpec>().unwrap().build().unwrap()
    }

    fn q(n: i64) -> QuadraticNumber {
        QuadraticNumber::int(n)
    }

    #[test]
    fn seidel_basic_forms() {
        let s = seidel_of(&g("Kbar3"));
        assert!((0..3).all(|i| (0..3).all(|j| s.entry(i, j) == if i == j { 0 } else { 1 })));
        let s = seidel_of(&g("K3"));
        assert_eq!(s.entry(0, 1), -1);
        let c4 = seidel_of(&g("C4"));
        assert_eq!((c4.entry(0, 1), c4.entry(0, 2), c4.entry(1, 3)), (-1, 1, 1));
    }

    #[test]
    fn json_round_trip() {
        let s = seidel_of(&g("C5"));
        let text = serde_json::to_string(&s).unwrap();
        assert_eq!(SeidelMatrix::from_json(&text).unwrap(), s);
        assert_eq!(s.to_graph(), g("C5"));
    }

    #[test]
    fn spectrum_examples() {
        let sp = seidel_spectrum(&seidel_of(&g("Kbar5"))).unwrap();
        assert_eq!(sp.largest, Eigenvalue::Exact(q(4)));
        assert_eq!(sp.largest_multiplicity, 1);
        assert_eq!(sp.charpoly, IntPoly::linear(-1).pow(4).mul(&IntPoly::linear(4)));

        let sp = seidel_spectrum(&seidel_of(&g("Paley(13)+K1"))).unwrap();
        assert_eq!(sp.largest, Eigenvalue::Exact(QuadraticNumber::sqrt(13)));
        assert_eq!(sp.largest_multiplicity, 7);

        assert_eq!(seidel_spectrum(&seidel_of(&Graph::empty(0))).unwrap_err(), Error::NoSpectrum);
    }

    #[test]
    fn compare_and_rank() {
        assert_eq!(compare_largest(&seidel_of(&g("K5")), &q(3)), Ordering::Less);
        assert_eq!(compare_largest(&seidel_of(&g("L(K8)")), &q(3)), Ordering::Equal);
        assert_eq!(compare_largest(&seidel_of(&g("Kbar3")), &q(2)), Ordering::Equal);
        assert_eq!(compare_largest(&seidel_of(&g("Kbar3")), &q(1)), Ordering::Greater);
        assert_eq!(rank_at(&seidel_of(&g("L(K8)")), &q(3)), 7);
        assert_eq!(rank_at(&seidel_of(&g("L(K5)")), &q(3)), 5);
        assert_eq!(rank_at(&seidel_of(&g("Kbar6")), &q(5)), 5);
    }

    #[test]
    fn b_matrix_examples() {
        let b = b_matrix(&g("K1"), &q(1), &q(2));
        assert_eq!(b.to_dense(), vec![vec![q(1), q(1)], vec![q(1), q(2)]]);
        let b = b_matrix(&g("C5"), &q(2), &q(2));
        assert_eq!(b.order(), 6);
        assert!(crate::algebra::psd_status(&b).is_psd());
    }

    #[test]
    fn block_diagonalization() {
        // congruence by [[I, -j/t],[0, 1]] gives (A + θI − J/t) ⊕ (t)
        let gr = g("P4");
        let (theta, t) = (q(2), q(3));
        let b = b_matrix(&gr, &theta, &t).to_dense();
        let n = gr.order();
        let inv_t = QuadraticNumber::one() / &t;
        let mut c = b.clone();
        for i in 0..=n {
            for k in 0..=n {
                let mut v = b[i][k].clone();
                if i < n {
                    v = v - &(inv_t.clone() * &b[n][k]);
                }
                if k < n {
                    v = v - &(inv_t.clone() * &b[i][n]);
                }
                if i < n && k < n {
                    v = v + &(inv_t.clone() * &inv_t * &b[n][n]);
                }
                c[i][k] = v;
            }
        }
        let a = adjacency_shift(&gr, &theta);
        for i in 0..n {
            assert_eq!(c[i][n], q(0));
            for k in 0..n {
                assert_eq!(c[i][k], a.get(i, k).clone() - &inv_t);
            }
        }
        assert_eq!(c[n][n], t);
    }

    #[test]
    fn p_value_examples() {
        assert_eq!(p_value(&g("T(7)"), &q(2)).unwrap(), Some(QuadraticNumber::rational(ratio(7, 4))));
        for t in 2..5 {
            let kt = GraphSpec::CompleteBipartite(t, t).build().unwrap();
            assert_eq!(p_value(&kt, &q(t as i64)).unwrap(), Some(q(1)));
        }
        // a k-regular graph has p = n / (k + θ)
        assert_eq!(p_value(&g("C5"), &q(2)).unwrap(), Some(QuadraticNumber::rational(ratio(5, 4))));
        assert!(matches!(p_value(&g("K2,2"), &q(1)), Err(Error::ThetaTooSmall(_))));
        // A + θI singular with j outside the column space
        assert_eq!(p_value(&g("K2"), &q(1)).unwrap(), Some(QuadraticNumber::rational(ratio(1, 1))));
        assert_eq!(p_value(&g("K1,2"), &QuadraticNumber::sqrt(2)).unwrap(), None);
    }

    #[test]
    fn switching_root_examples() {
        let rep = switching_root_check(&g("Kbar3"), &QuadraticNumber::rational(ratio(3, 2))).unwrap();
        assert!(rep.passed());
        assert_eq!(rep.get("outcome").unwrap(), "identities-checked");

        let phi: QuadraticNumber = "(1+sqrt(5))/2".parse().unwrap();
        let rep = switching_root_check(&g("C5+K1"), &phi).unwrap();
        assert!(rep.passed(), "{rep:?}");
        assert_eq!(rep.get("outcome").unwrap(), "identities-checked");

        let rep = switching_root_check(&g("T(5)"), &q(2)).unwrap();
        assert_eq!(rep.get("outcome").unwrap(), "no-main-eigenvector");

        assert!(matches!(switching_root_check(&g("T(5)"), &q(3)), Err(Error::WrongTheta(_))));
    }

    #[test]
    fn two_eigenvalue_examples() {
        let p = two_eigenvalue_params(&seidel_of(&g("C5+K1"))).unwrap();
        assert_eq!(
            p,
            TwoEigenvalueParams {
                lambda: QuadraticNumber::sqrt(5),
                mu: -QuadraticNumber::sqrt(5),
                m_lambda: 3,
                m_mu: 3
            }
        );
        let p = two_eigenvalue_params(&seidel_of(&g("L(K8)"))).unwrap();
        assert_eq!((p.lambda, p.mu, p.m_lambda, p.m_mu), (q(3), q(-9), 21, 7));
        assert_eq!(two_eigenvalue_params(&seidel_of(&g("P4"))), None);
    }

    #[test]
    fn srg_examples() {
        assert_eq!(srg_params(&g("T(7)")), Some(SrgParams { n: 21, k: 10, a: 5, c: 4 }));
        assert_eq!(srg_params(&g("C5")), Some(SrgParams { n: 5, k: 2, a: 0, c: 1 }));
        assert_eq!(srg_params(&g("P4")), None);
    }

    #[test]
    fn lines_gram_examples() {
        let s = seidel_of(&g("Kbar4"));
        let gram = lines_gram(&s, &q(3)).unwrap();
        assert_eq!(gram.get(0, 1), &QuadraticNumber::rational(ratio(-1, 3)));
        assert_eq!(gram.rank(), 3);
        let u: [[i64; 6]; 4] =
            [[1, 1, 1, 0, 0, 0], [-1, 0, 0, 1, 1, 0], [0, -1, 0, -1, 0, 1], [0, 0, -1, 0, -1, -1]];
        for i in 0..4 {
            for j in 0..4 {
                let ip: i64 = (0..6).map(|k| u[i][k] * u[j][k]).sum();
                assert_eq!(gram.get(i, j), &QuadraticNumber::rational(ratio(ip, 3)));
            }
        }
        let gram = lines_gram(&seidel_of(&g("L(K8)")), &q(3)).unwrap();
        assert_eq!((gram.order(), gram.rank()), (28, 7));
        let gram = lines_gram(&seidel_of(&g("Kbar2")), &q(1)).unwrap();
        assert_eq!(gram.rank(), 1);
        assert!(lines_gram(&seidel_of(&g("Kbar4")), &q(4)).is_err());
    }

    #[test]
    fn parity_examples() {
        assert!(parity_check(&seidel_of(&g("K3"))));
        assert!(parity_check(&seidel_of(&g("K1"))));
        for mask in 0u32..64 {
            let signs: Vec<i8> = (0..6).map(|b| if mask >> b & 1 == 1 { -1 } else { 1 }).collect();
            assert!(parity_check(&SeidelMatrix::from_signs(4, &signs).unwrap()));
        }
    }

    #[test]
    fn cone_examples() {
        for s in ["C5", "L(K8)", "K3", "K2,7", "Kbar5"] {
            let rep = cone_equivalence_check(&g(s));
            assert!(rep.passed(), "{s}: {rep:?}");
        }
        assert_eq!(cone_equivalence_check(&g("C5")).get("seidel_vs_3").unwrap(), "less");
        assert_eq!(cone_equivalence_check(&g("L(K8)")).get("seidel_vs_3").unwrap(), "equal");
    }

    #[test]
    fn extension_spectrum_examples() {
        // K̄_4 plus a vertex joined to two of them: largest eigenvalue stays 3
        let s = seidel_of(&g("Kbar4"));
        let rep = extension_spectrum_check(&s, &[1, 1, -1, -1]).unwrap();
        assert!(rep.passed(), "{rep:?}");
        assert_eq!(rep.get("extra_factor").unwrap(), "x^2 + x - 4");

        let s = seidel_of(&g("Kbar2"));
        // triangle sign product −1 puts the extension in the class of K_3
        let rep = extension_spectrum_check(&s, &[1, -1]).unwrap();
        assert!(rep.passed());
        assert_eq!(rep.get("extra_factor").unwrap(), "x^2 + x - 2");

        let s = seidel_of(&g("C5+K1"));
        for mask in 0..32u32 {
            let signs: Vec<i8> =
                (0..6).map(|b| if b > 0 && mask >> (b - 1) & 1 == 1 { -1 } else { 1 }).collect();
            assert!(matches!(extension_spectrum_check(&s, &signs), Err(Error::PreconditionViolated(_))));
        }
    }

    #[test]
    fn eigenvalues_with_multiplicity() {
        let ev = eigenvalues_desc(&seidel_of(&g("Kbar4")).char_poly());
        let v: Vec<_> = ev.iter().map(|r| r.as_quadratic().unwrap()).collect();
        assert_eq!(v, vec![q(3), q(-1), q(-1), q(-1)]);
        let ev = eigenvalues_desc(&seidel_of(&g("C5+K1")).char_poly());
        assert_eq!(ev.len(), 6);
        assert_eq!(ev[2].as_quadratic(), Some(QuadraticNumber::sqrt(5)));
        assert_eq!(ev[3].as_quadratic(), Some(-QuadraticNumber::sqrt(5)));
    }
}
