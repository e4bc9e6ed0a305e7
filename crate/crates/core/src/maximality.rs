//! One-vertex Seidel extensions: maximal, strongly maximal and extendable
//! matrices; the `λ(n)` table; extremal constructions and the checks that
//! rest on them.
//!
//! `S' = [[S, s], [sᵀ, 0]]` keeps the largest eigenvalue `λ` exactly when
//! `λI − S' = [[M, −s], [−sᵀ, λ]]` is positive semidefinite, `M = λI − S`.
//! With `M = L·D·Lᵀ` (natural order), this holds iff `−s = L·c` and
//! `Σ c_k² / d_k ≤ λ`; the rank is preserved iff equality holds. The search
//! assigns `s` in index order: pivot rows branch on `±1` and fix one more
//! `c_k`, non-pivot rows have their sign forced by the earlier `c`.

use std::cmp::Ordering;
use std::collections::HashMap;
use std::sync::atomic::{AtomicU64, AtomicUsize, Ordering as AtomicOrdering};
use std::time::{Duration, Instant};

use num_traits::One;
use rand::seq::SliceRandom;
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;
use rayon::prelude::*;
use serde::{Serialize, Serializer};
use serde_json::json;

use crate::algebra::{fmt_rational, rat, ratio, AlgebraicReal, Field, IntPoly, QuadraticNumber, SymMatrix};
use crate::check::CheckReport;
use crate::error::{Error, Result};
use crate::graph::{is_switching_equivalent, Graph, GraphSpec};
use crate::lattice::{classify, lambda_lattice, lattice_inclusion, Family, RootLatticeType};
use crate::seidel::{
    b_matrix, compare_largest, extension_spectrum_check, largest_eigenvalue, p_value, rank_at, seidel_of,
    seidel_spectrum, srg_params, two_eigenvalue_params, Eigenvalue, SeidelMatrix,
};
use crate::Rational;

pub const DEFAULT_BUDGET: u64 = 1 << 28;
pub const BUDGET_ENV: &str = "SEIDELKIT_BUDGET";

/// Node budget from `SEIDELKIT_BUDGET`, else [`DEFAULT_BUDGET`].
pub fn budget_from_env() -> u64 {
    std::env::var(BUDGET_ENV).ok().and_then(|v| v.trim().parse().ok()).unwrap_or(DEFAULT_BUDGET)
}

#[derive(Clone, Debug)]
pub struct SearchConfig {
    pub budget: u64,
    /// The sign tree is split into about `2^split_depth` subtrees.
    pub split_depth: u32,
}

impl Default for SearchConfig {
    fn default() -> Self {
        SearchConfig { budget: budget_from_env(), split_depth: 6 }
    }
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
#[serde(tag = "kind", rename_all = "lowercase")]
pub enum Outcome {
    Witness { signs: Vec<i8> },
    Exhausted { nodes_explored: u64, pruned: u64 },
}

#[derive(Clone, Debug)]
pub struct ExtensionVerdict {
    pub matrix: SeidelMatrix,
    pub lambda: QuadraticNumber,
    pub preserve_rank: bool,
    pub outcome: Outcome,
    pub nodes: u64,
    pub pruned: u64,
    pub elapsed: Duration,
}

impl ExtensionVerdict {
    pub fn witness(&self) -> Option<&[i8]> {
        match &self.outcome {
            Outcome::Witness { signs } => Some(signs),
            Outcome::Exhausted { .. } => None,
        }
    }

    pub fn is_exhausted(&self) -> bool {
        matches!(self.outcome, Outcome::Exhausted { .. })
    }

    /// The extended matrix, when a witness was found.
    pub fn extension(&self) -> Option<SeidelMatrix> {
        self.witness().map(|s| self.matrix.bordered(s))
    }

    /// Everything but the timing, for deterministic reports.
    pub fn summary(&self) -> serde_json::Value {
        json!({
            "order": self.matrix.order(),
            "lambda": self.lambda.to_string(),
            "preserve_rank": self.preserve_rank,
            "outcome": self.outcome,
            "nodes": self.nodes,
        })
    }
}

impl Serialize for ExtensionVerdict {
    fn serialize<S: Serializer>(&self, s: S) -> std::result::Result<S::Ok, S::Error> {
        json!({
            "query": { "matrix": self.matrix, "lambda": self.lambda.to_string(), "preserve_rank": self.preserve_rank },
            "outcome": self.outcome,
            "nodes": self.nodes,
            "elapsed": self.elapsed.as_secs_f64(),
        })
        .serialize(s)
    }
}

/// `M = L·D·Lᵀ` without pivoting; `None` unless `M ⪰ 0`.
struct Factor<T> {
    pivot: Vec<Option<usize>>,
    rows: Vec<Vec<(usize, T)>>,
    inv_d: Vec<T>,
}

fn natural_ldl<T: Field>(m: &SymMatrix<T>) -> Option<Factor<T>> {
    let n = m.order();
    let mut w = m.to_dense();
    let mut f = Factor { pivot: vec![None; n], rows: vec![Vec::new(); n], inv_d: Vec::new() };
    for i in 0..n {
        match w[i][i].sign() {
            Ordering::Less => return None,
            Ordering::Equal => {
                if (i + 1..n).any(|j| !w[i][j].is_zero_exact()) {
                    return None;
                }
            }
            Ordering::Greater => {
                let k = f.inv_d.len();
                let inv = T::one() / &w[i][i];
                let l: Vec<T> = (0..n).map(|j| if j > i { w[j][i].clone() * &inv } else { T::zero() }).collect();
                for j in i + 1..n {
                    if l[j].is_zero_exact() {
                        continue;
                    }
                    f.rows[j].push((k, l[j].clone()));
                    for jj in i + 1..n {
                        let v = w[j][jj].clone() - &(l[j].clone() * &w[i][jj]);
                        w[j][jj] = v;
                    }
                }
                f.pivot[i] = Some(k);
                f.inv_d.push(inv);
            }
        }
    }
    Some(f)
}

#[derive(Clone)]
struct State<T> {
    s: Vec<i8>,
    c: Vec<T>,
    norm: T,
}

#[derive(Default)]
struct Counters {
    nodes: u64,
    pruned: u64,
}

enum Halt {
    Budget,
    Cancelled,
}

struct Search<'a, T> {
    f: &'a Factor<T>,
    n: usize,
    lambda: T,
    exact: bool,
    budget: u64,
    used: &'a AtomicU64,
}

impl<T: Field + Send + Sync> Search<'_, T> {
    fn tick(&self, cnt: &mut Counters) -> std::result::Result<(), Halt> {
        cnt.nodes += 1;
        if self.used.fetch_add(1, AtomicOrdering::Relaxed) >= self.budget {
            return Err(Halt::Budget);
        }
        Ok(())
    }

    fn expand(&self, st: &State<T>, cnt: &mut Counters) -> std::result::Result<Vec<State<T>>, Halt> {
        let i = st.s.len();
        let mut acc = T::zero();
        for (k, l) in &self.f.rows[i] {
            acc = acc + &(l.clone() * &st.c[*k]);
        }
        let mut out = Vec::new();
        match self.f.pivot[i] {
            Some(k) => {
                let choices: &[i8] = if i == 0 { &[1] } else { &[-1, 1] };
                for &v in choices {
                    self.tick(cnt)?;
                    let ck = T::from_i64(-(v as i64)) - &acc;
                    let norm = st.norm.clone() + &(ck.clone() * &ck * &self.f.inv_d[k]);
                    if norm.cmp_field(&self.lambda) == Ordering::Greater {
                        cnt.pruned += 1;
                        continue;
                    }
                    let mut child = st.clone();
                    child.s.push(v);
                    child.c.push(ck);
                    child.norm = norm;
                    out.push(child);
                }
            }
            None => {
                self.tick(cnt)?;
                let forced = -acc;
                let v = if forced == T::one() {
                    1
                } else if forced == -T::one() {
                    -1
                } else {
                    0
                };
                if v == 0 || (i == 0 && v != 1) {
                    cnt.pruned += 1;
                } else {
                    let mut child = st.clone();
                    child.s.push(v);
                    out.push(child);
                }
            }
        }
        Ok(out)
    }

    fn accepts(&self, st: &State<T>) -> bool {
        !self.exact || st.norm == self.lambda
    }

    fn dfs(
        &self,
        st: State<T>,
        cnt: &mut Counters,
        idx: usize,
        best: &AtomicUsize,
    ) -> std::result::Result<Option<Vec<i8>>, Halt> {
        if best.load(AtomicOrdering::Relaxed) < idx {
            return Err(Halt::Cancelled);
        }
        if st.s.len() == self.n {
            if self.accepts(&st) {
                return Ok(Some(st.s));
            }
            cnt.pruned += 1;
            return Ok(None);
        }
        for child in self.expand(&st, cnt)? {
            if let Some(w) = self.dfs(child, cnt, idx, best)? {
                return Ok(Some(w));
            }
        }
        Ok(None)
    }

    /// Lexicographically least witness (−1 before +1), or exhaustion.
    fn run(&self, split_depth: u32) -> Result<(Option<Vec<i8>>, Counters)> {
        let mut total = Counters::default();
        let root = State { s: Vec::new(), c: Vec::new(), norm: T::zero() };
        let mut frontier = vec![root];
        let target = 1usize << split_depth;
        while frontier.len() < target && frontier.iter().any(|st| st.s.len() < self.n) {
            let mut next = Vec::new();
            for st in frontier {
                if st.s.len() == self.n {
                    next.push(st);
                    continue;
                }
                next.extend(self.expand(&st, &mut total).map_err(|_| Error::OutOfBudget(self.budget))?);
            }
            frontier = next;
        }
        let best = AtomicUsize::new(usize::MAX);
        let results: Vec<(Counters, std::result::Result<Option<Vec<i8>>, Halt>)> = frontier
            .into_par_iter()
            .enumerate()
            .map(|(idx, st)| {
                let mut cnt = Counters::default();
                let r = self.dfs(st, &mut cnt, idx, &best);
                if let Ok(Some(_)) = r {
                    best.fetch_min(idx, AtomicOrdering::Relaxed);
                }
                (cnt, r)
            })
            .collect();
        for (cnt, r) in results {
            total.nodes += cnt.nodes;
            total.pruned += cnt.pruned;
            match r {
                Ok(Some(w)) => return Ok((Some(w), total)),
                Ok(None) => {}
                Err(Halt::Budget) => return Err(Error::OutOfBudget(self.budget)),
                Err(Halt::Cancelled) => unreachable!("only subtrees after a witness are cancelled"),
            }
        }
        Ok((None, total))
    }
}

fn shifted_as<T: Field>(s: &SeidelMatrix, lambda: &T) -> SymMatrix<T> {
    SymMatrix::from_fn(s.order(), |i, j| if i == j { lambda.clone() } else { T::from_i64(-s.entry(i, j)) })
}

fn search_in<T: Field + Send + Sync>(
    s: &SeidelMatrix,
    lambda: T,
    exact: bool,
    cfg: &SearchConfig,
) -> Result<(Option<Vec<i8>>, Counters)> {
    let m = shifted_as(s, &lambda);
    let f = natural_ldl(&m)
        .ok_or_else(|| Error::PreconditionViolated("λI − S is not positive semidefinite".into()))?;
    let used = AtomicU64::new(0);
    let search = Search { f: &f, n: s.order(), lambda, exact, budget: cfg.budget, used: &used };
    search.run(cfg.split_depth)
}

pub fn find_extension(s: &SeidelMatrix, lambda: &QuadraticNumber, preserve_rank: bool) -> Result<ExtensionVerdict> {
    find_extension_with(s, lambda, preserve_rank, &SearchConfig::default())
}

pub fn find_extension_with(
    s: &SeidelMatrix,
    lambda: &QuadraticNumber,
    preserve_rank: bool,
    cfg: &SearchConfig,
) -> Result<ExtensionVerdict> {
    if s.order() == 0 || compare_largest(s, lambda) != Ordering::Equal {
        return Err(Error::PreconditionViolated(format!("{lambda} is not the largest eigenvalue of S")));
    }
    let start = Instant::now();
    let (found, cnt) = match lambda.as_rational() {
        Some(r) => search_in::<Rational>(s, r.clone(), preserve_rank, cfg)?,
        None => search_in::<QuadraticNumber>(s, lambda.clone(), preserve_rank, cfg)?,
    };
    let outcome = match found {
        Some(w) => {
            let ext = s.bordered(&w);
            assert_eq!(compare_largest(&ext, lambda), Ordering::Equal, "witness failed verification");
            if preserve_rank {
                assert_eq!(rank_at(&ext, lambda), rank_at(s, lambda), "witness changed the rank");
            }
            Outcome::Witness { signs: w }
        }
        None => Outcome::Exhausted { nodes_explored: cnt.nodes, pruned: cnt.pruned },
    };
    Ok(ExtensionVerdict {
        matrix: s.clone(),
        lambda: lambda.clone(),
        preserve_rank,
        outcome,
        nodes: cnt.nodes,
        pruned: cnt.pruned,
        elapsed: start.elapsed(),
    })
}

fn decide(g: &Graph, preserve_rank: bool) -> Result<(bool, ExtensionVerdict)> {
    let s = seidel_of(g);
    let lambda = largest_eigenvalue(&s)?;
    let v = find_extension(&s, &lambda, preserve_rank)?;
    Ok((v.is_exhausted(), v))
}

pub fn is_maximal(g: &Graph) -> Result<(bool, ExtensionVerdict)> {
    decide(g, true)
}

pub fn is_strongly_maximal(g: &Graph) -> Result<(bool, ExtensionVerdict)> {
    decide(g, false)
}

/// Two eigenvalues, one of them irrational: strongly maximal without search.
pub fn irrational_two_eigenvalue(s: &SeidelMatrix) -> bool {
    two_eigenvalue_params(s).is_some_and(|p| !p.lambda.is_rational())
}

fn types_above(t: RootLatticeType, same_rank: bool) -> Vec<RootLatticeType> {
    let mut out = Vec::new();
    let top = if same_rank { t.rank } else { t.rank.max(8) + 1 };
    for r in 4..=top {
        if same_rank && r != t.rank {
            continue;
        }
        out.push(RootLatticeType::d(r));
        if (6..=8).contains(&r) {
            out.push(RootLatticeType::e(r));
        }
    }
    out
}

/// Cross-check of the search verdicts against root lattice containment.
pub fn strong_maximality_via_lattice(g: &Graph) -> Result<CheckReport> {
    let three = QuadraticNumber::int(3);
    let s = seidel_of(g);
    if compare_largest(&s, &three) != Ordering::Equal {
        return Err(Error::NotApplicable("largest Seidel eigenvalue is not 3".into()));
    }
    let mut rep = CheckReport::new(
        "lattice-route",
        "maximal and strongly maximal graphs at eigenvalue 3 via containment of D/E root lattices",
    );
    rep.record("graph", g);
    let t = classify(&lambda_lattice(g)?)?;
    rep.record("lattice", t);
    if t.family == Family::A {
        rep.skip("type A lattices are outside the inclusion table");
        return Ok(rep);
    }
    let properly_in = |u: &RootLatticeType| *u != t && lattice_inclusion(t, *u).unwrap_or(false);
    let equal_rank: Vec<String> = types_above(t, true).iter().filter(|u| properly_in(u)).map(|u| u.to_string()).collect();
    let any_rank: Vec<String> = types_above(t, false).iter().filter(|u| properly_in(u)).map(|u| u.to_string()).collect();
    let lattice_maximal = equal_rank.is_empty();
    let lattice_strong = any_rank.is_empty();
    rep.record("contained_in_equal_rank", &equal_rank).record("contained_in_some_rank", &any_rank);
    let (maximal, v1) = is_maximal(g)?;
    let (strong, v2) = is_strongly_maximal(g)?;
    rep.record("search_maximal", maximal)
        .record("search_strongly_maximal", strong)
        .record("lattice_maximal", lattice_maximal)
        .record("lattice_strongly_maximal", lattice_strong)
        .record("maximal_search", v1.summary())
        .record("strong_search", v2.summary());
    rep.require("maximal_routes_agree", maximal == lattice_maximal);
    rep.require("strong_routes_agree", strong == lattice_strong);
    Ok(rep)
}

/// Switching class members: all `2^{n−1}` switches (vertex `n − 1` fixed)
/// up to `exhaustive_limit`, otherwise `samples` seeded random switches.
pub fn class_members(g: &Graph, exhaustive_limit: usize, samples: usize, seed: u64) -> (Vec<Graph>, bool) {
    let n = g.order();
    if n == 0 {
        return (vec![g.clone()], true);
    }
    if n <= exhaustive_limit {
        let members = (0u64..1 << (n - 1)).map(|u| g.switch_mask(u)).collect();
        return (members, true);
    }
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    let mut members = vec![g.clone()];
    for _ in 1..samples {
        let u: u64 = rng.gen::<u64>() & ((1u64 << (n - 1)) - 1);
        members.push(g.switch_mask(u));
    }
    (members, false)
}

pub const SCAN_EXHAUSTIVE_LIMIT: usize = 14;
pub const SCAN_SAMPLES: usize = 256;

/// Extendability through `p(H) ≤ 2 − 1/θ` over the switching class, against
/// the search; the regular-member sufficient condition; and, for two
/// eigenvalues, the chain of equivalent conditions.
pub fn extendability_criterion(g: &Graph) -> CheckReport {
    let mut rep = CheckReport::new(
        "extendability-criterion",
        "extendable iff some H in the switching class has p(H) <= 2 - 1/θ",
    );
    rep.record("graph", g);
    let s = seidel_of(g);
    let n = g.order();
    let lambda = match largest_eigenvalue(&s) {
        Ok(l) => l,
        Err(e) => {
            rep.skip(e.to_string());
            return rep;
        }
    };
    let one = QuadraticNumber::one();
    let two = QuadraticNumber::int(2);
    let theta = (lambda.clone() + &one) / &two;
    let bound = two.clone() - &(one.clone() / &theta);
    rep.record("lambda", &lambda).record("theta", &theta).record("bound", &bound);

    let search = match find_extension(&s, &lambda, false) {
        Ok(v) => v,
        Err(e) => {
            rep.fail(e.to_string());
            return rep;
        }
    };
    let extendable = !search.is_exhausted();
    rep.record("search", search.summary()).record("extendable", extendable);

    let (members, exhaustive) = class_members(g, SCAN_EXHAUSTIVE_LIMIT, SCAN_SAMPLES, 0x5eed);
    rep.record("scan", if exhaustive { "exhaustive" } else { "sampled" }).record("members_scanned", members.len());
    let two_eig = two_eigenvalue_params(&s);
    let mut best_p: Option<QuadraticNumber> = None;
    let mut scan_hit = false;
    let mut p_below_2 = false;
    let mut rank_gap = false;
    let mut srg_member = false;
    let mut regular_seen = 0usize;
    let mut lemma_fires = 0usize;
    let mut regular_p_ok = true;
    let tau = two_eig.as_ref().map(|p| (p.mu.clone() + &one) / &two);
    for h in &members {
        let p = match p_value(h, &theta) {
            Ok(p) => p,
            Err(e) => {
                rep.fail(format!("p(H) failed: {e}"));
                return rep;
            }
        };
        if let Some(p) = &p {
            if *p <= bound {
                scan_hit = true;
            }
            if *p < two {
                p_below_2 = true;
            }
            if best_p.as_ref().is_none_or(|b| p < b) {
                best_p = Some(p.clone());
            }
        }
        if let Some(k) = h.regular_degree() {
            regular_seen += 1;
            let q = QuadraticNumber::int(n as i64) / &(QuadraticNumber::int(k as i64) + &theta);
            if p.as_ref() != Some(&q) {
                regular_p_ok = false;
            }
            if q <= bound {
                lemma_fires += 1;
            }
        }
        if let Some(tau) = &tau {
            let rk_a = crate::seidel::adjacency_shift(h, &theta).rank();
            let rk_b = b_matrix(h, &theta, &two).rank();
            if rk_a != rk_b {
                rank_gap = true;
            }
            if let Some(sp) = srg_params(h) {
                let k = (QuadraticNumber::int(n as i64) - &(two.clone() * tau)) / &two;
                if QuadraticNumber::int(sp.k as i64) == k {
                    srg_member = true;
                }
            }
        }
    }
    rep.record("min_p", best_p.as_ref().map(|p| p.to_string()));
    rep.record("scan_finds_p_below_bound", scan_hit);
    if exhaustive {
        rep.require("scan_matches_search", scan_hit == extendable);
    } else {
        rep.require("scan_implies_search", !scan_hit || extendable);
    }
    rep.record("regular_members", regular_seen);
    rep.require("regular_p_formula", regular_p_ok);
    rep.record("regular_condition_fires", lemma_fires);
    rep.require("regular_condition_sound", lemma_fires == 0 || extendable);
    if let Some(params) = &two_eig {
        rep.record("two_eigenvalues", params);
        let chain = [extendable, p_below_2, rank_gap, srg_member];
        rep.record("two_eigenvalue_chain", chain);
        if exhaustive {
            rep.require("two_eigenvalue_chain_equal", chain.iter().all(|&b| b == extendable));
        } else {
            rep.require("two_eigenvalue_chain_sound", !(p_below_2 || rank_gap || srg_member) || extendable);
        }
    }
    rep
}

/// One row of the `λ(n)` table.
#[derive(Clone, Debug)]
pub struct LambdaEntry {
    pub n: usize,
    pub value: Eigenvalue,
    pub root: AlgebraicReal,
    pub minimal_polynomial: IntPoly,
    pub witness_graph: Graph,
}

impl Serialize for LambdaEntry {
    fn serialize<S: Serializer>(&self, s: S) -> std::result::Result<S::Ok, S::Error> {
        json!({
            "n": self.n,
            "value": self.value.to_string(),
            "approx": self.root.approx(),
            "minimal_polynomial": self.minimal_polynomial.to_string(),
            "witness_graph": self.witness_graph.to_graph6(),
        })
        .serialize(s)
    }
}

/// Minimal polynomial of an exact eigenvalue, or the square-free defining
/// polynomial otherwise.
pub fn minimal_polynomial(value: &Eigenvalue) -> IntPoly {
    match value {
        Eigenvalue::Exact(q) => match q.minimal_quadratic() {
            Some((tr, nm)) => IntPoly::from_rational_primitive(&[nm, -tr, Rational::from_integer(1.into())]),
            None => IntPoly::from_rational_primitive(&[-q.a().clone(), Rational::from_integer(1.into())]),
        },
        Eigenvalue::Algebraic { poly, .. } => poly.clone(),
    }
}

/// One class per distinct Seidel characteristic polynomial among
/// `H + K_1`, `H` on `n − 1` vertices; the witness is the first `H` by
/// edge mask.
pub fn switching_spectra(n: usize) -> Vec<(IntPoly, Graph)> {
    let m = n - 1;
    let pairs: Vec<(usize, usize)> = (0..m).flat_map(|i| (i + 1..m).map(move |j| (i, j))).collect();
    let total: u64 = 1 << pairs.len();
    let found: HashMap<IntPoly, u64> = (0..total)
        .into_par_iter()
        .fold(HashMap::new, |mut acc: HashMap<IntPoly, u64>, mask| {
            let g = graph_from_mask(n, &pairs, mask);
            let e = acc.entry(g.seidel_char_poly()).or_insert(mask);
            *e = (*e).min(mask);
            acc
        })
        .reduce(HashMap::new, |mut a, b| {
            for (k, v) in b {
                let e = a.entry(k).or_insert(v);
                *e = (*e).min(v);
            }
            a
        });
    let mut out: Vec<(IntPoly, Graph)> =
        found.into_iter().map(|(p, mask)| (p, graph_from_mask(n, &pairs, mask))).collect();
    out.sort_by(|a, b| a.0.cmp(&b.0));
    out
}

fn graph_from_mask(n: usize, pairs: &[(usize, usize)], mask: u64) -> Graph {
    let mut g = Graph::empty(n);
    for (b, &(i, j)) in pairs.iter().enumerate() {
        if mask >> b & 1 == 1 {
            g.add_edge(i, j);
        }
    }
    g
}

/// Seidel characteristic polynomial of the switching class of `K_n`.
pub fn complete_class_poly(n: usize) -> IntPoly {
    Graph::complete(n).seidel_char_poly()
}

pub fn lambda_entry(n: usize) -> Result<LambdaEntry> {
    let kn = complete_class_poly(n);
    let mut best: Option<(AlgebraicReal, IntPoly, Graph)> = None;
    for (poly, g) in switching_spectra(n) {
        if poly == kn {
            continue;
        }
        let root = poly.largest_root()?.root;
        let better = match &best {
            None => true,
            Some((b, _, bg)) => match root.cmp_exact(b) {
                Ordering::Less => true,
                Ordering::Equal => g.to_graph6() < bg.to_graph6(),
                Ordering::Greater => false,
            },
        };
        if better {
            best = Some((root, poly, g));
        }
    }
    let (root, _, witness_graph) = best.ok_or(Error::NoSpectrum)?;
    let spec = seidel_spectrum(&seidel_of(&witness_graph))?;
    let value = spec.largest;
    Ok(LambdaEntry { n, minimal_polynomial: minimal_polynomial(&value), value, root, witness_graph })
}

pub const LAMBDA_MAX_N: usize = 8;

/// `λ(n)` for `3 ≤ n ≤ n_max` by exhaustive enumeration.
pub fn lambda_table(n_max: usize) -> Result<Vec<LambdaEntry>> {
    if n_max > LAMBDA_MAX_N {
        let m = n_max - 1;
        return Err(Error::OutOfBudget(1u64.checked_shl((m * (m - 1) / 2) as u32).unwrap_or(u64::MAX)));
    }
    if n_max < 3 {
        return Err(Error::PreconditionViolated("λ(n) needs n ≥ 3".into()));
    }
    let entries: Vec<LambdaEntry> = (3..=n_max).map(lambda_entry).collect::<Result<_>>()?;
    for w in entries.windows(2) {
        if w[0].root.cmp_exact(&w[1].root) == Ordering::Greater {
            return Err(Error::PreconditionViolated(format!("λ({}) > λ({})", w[0].n, w[1].n)));
        }
    }
    Ok(entries)
}

/// `N*_{1/3}(r)`: 10, 16, 28 for `r = 5, 6, 7`, else `2(r − 1)`.
pub fn n_star(r: usize) -> usize {
    match r {
        5 => 10,
        6 => 16,
        7 => 28,
        _ => 2 * (r - 1),
    }
}

pub fn extremal_spec(r: usize) -> Result<GraphSpec> {
    use GraphSpec::*;
    Ok(match r {
        0..=2 => return Err(Error::InvalidRank(r)),
        5 => LineGraph(Box::new(Complete(5))),
        6 => DisjointUnion(vec![LineGraph(Box::new(Complete(6))), Complete(1)]),
        7 => LineGraph(Box::new(Complete(8))),
        _ => LineGraph(Box::new(CompleteBipartite(2, r - 1))),
    })
}

/// The largest Seidel matrix with eigenvalue 3 and rank `r`, verified.
pub fn extremal_construction(r: usize) -> Result<(Graph, CheckReport)> {
    let spec = extremal_spec(r)?;
    let g = spec.build()?;
    let mut rep = CheckReport::new(
        "extremal-construction",
        "largest order of a Seidel matrix with eigenvalue 3 and rank r",
    );
    let three = QuadraticNumber::int(3);
    let s = seidel_of(&g);
    rep.record("rank", r).record("construction", spec.to_string()).record("graph", &g);
    rep.record("order", g.order()).record("expected_order", n_star(r));
    rep.require("order_matches", g.order() == n_star(r));
    rep.require("largest_is_3", compare_largest(&s, &three) == Ordering::Equal);
    let rk = rank_at(&s, &three);
    rep.record("rank_at_3", rk);
    rep.require("rank_matches", rk == r);
    let (maximal, v) = is_maximal(&g)?;
    rep.record("search", v.summary());
    rep.require("maximal", maximal);
    let columns: Vec<serde_json::Value> = (3..=r)
        .map(|d| json!({ "d": d, "n_star": n_star(d), "n_max": (3..=d).map(n_star).max() }))
        .collect();
    rep.record("dimension_columns", columns);
    Ok((g, rep))
}

/// The factorization `(x−1)^{n−2}(x+1)·g(x)` of the Seidel characteristic
/// polynomial of `K̂_n`, `g(x) = x² + (n−3)x − 3n + 4`, and the location of
/// its largest root. The form `x² + (n−2)x − 3n + 1` (which is `g` at
/// `n + 1`) is recorded alongside as `shifted_factor_divides`.
pub fn hatk_eigenvalue_check(n: usize) -> Result<CheckReport> {
    if n < 2 {
        return Err(Error::PreconditionViolated("K̂_n needs n ≥ 2".into()));
    }
    let mut rep = CheckReport::new(
        "hatk-eigenvalue",
        "the largest Seidel eigenvalue of K_n plus one pendant edge lies in (3 - 4/n, 3)",
    );
    let g = GraphSpec::HatK(n).build()?;
    let ni = n as i64;
    let quad = IntPoly::from_i64(&[4 - 3 * ni, ni - 3, 1]);
    let shifted = IntPoly::from_i64(&[1 - 3 * ni, ni - 2, 1]);
    let cp = g.seidel_char_poly();
    rep.record("n", n).record("charpoly", cp.to_string()).record("quadratic_factor", quad.to_string());
    let cofactor = IntPoly::linear(1).pow(n - 2).mul(&IntPoly::linear(-1));
    let quotient = cp.div_exact(&cofactor);
    rep.require("factorization", quotient.as_ref() == Some(&quad));
    rep.record("shifted_factor", shifted.to_string())
        .record("shifted_factor_divides", quotient.as_ref() == Some(&shifted));
    let lo = Rational::from_integer(3.into()) - ratio(4, ni);
    rep.record("lower_end", fmt_rational(&lo));
    rep.require("factor_negative_at_lower_end", quad.sign_at(&lo) == Ordering::Less);
    rep.require("factor_positive_at_3", quad.sign_at(&rat(3)) == Ordering::Greater);
    let largest = cp.largest_root()?.root;
    rep.record("largest_approx", largest.approx());
    let inside = largest.cmp_exact(&AlgebraicReal::rational(&lo)) == Ordering::Greater
        && largest.cmp_exact(&AlgebraicReal::rational(&rat(3))) == Ordering::Less;
    rep.require("largest_in_interval", inside);
    if let Some(q) = largest.as_quadratic() {
        rep.record("largest", q.to_string());
    }
    Ok(rep)
}

fn subsets(n: usize, k: usize) -> Vec<Vec<usize>> {
    let mut out = Vec::new();
    let mut cur = Vec::with_capacity(k);
    fn rec(start: usize, n: usize, k: usize, cur: &mut Vec<usize>, out: &mut Vec<Vec<usize>>) {
        if cur.len() == k {
            out.push(cur.clone());
            return;
        }
        for v in start..n {
            if n - v < k - cur.len() {
                break;
            }
            cur.push(v);
            rec(v + 1, n, k, cur, out);
            cur.pop();
        }
    }
    rec(0, n, k, &mut cur, &mut out);
    out
}

/// Whether some member of the switching class of `g` has `h` as an
/// induced subgraph.
pub fn contains_up_to_switching(g: &Graph, h: &Graph) -> bool {
    subsets(g.order(), h.order())
        .iter()
        .any(|w| matches!(is_switching_equivalent(&g.induced(w), h), Ok(Some(_))))
}

fn in_open_1_3(g: &Graph) -> bool {
    let s = seidel_of(g);
    compare_largest(&s, &QuadraticNumber::int(1)) == Ordering::Greater
        && compare_largest(&s, &QuadraticNumber::int(3)) == Ordering::Less
}

/// Graphs of order `n ∈ {8, 9}` with largest Seidel eigenvalue in `(1, 3)`
/// contain `K̂_{⌈n/2⌉}` up to switching. For `n = 8` every induced 8-vertex
/// subgraph of `L(K_{2,7})` is tested; `samples` further graphs come from
/// random subsets (for `n = 9`) and from rejection-sampled random graphs.
pub fn containment_spotcheck(n: usize, samples: usize) -> Result<CheckReport> {
    if !(8..=9).contains(&n) {
        return Err(Error::PreconditionViolated("containment spot-check needs n ∈ {8, 9}".into()));
    }
    let mut rep = CheckReport::new(
        "hatk-containment",
        "a graph of order n with largest Seidel eigenvalue in (1,3) contains the switching class of K-hat of order ceil(n/2)",
    );
    let target = GraphSpec::HatK(n.div_ceil(2)).build()?;
    let host = GraphSpec::LineGraph(Box::new(GraphSpec::CompleteBipartite(2, n - 1))).build()?;
    let mut rng = ChaCha8Rng::seed_from_u64(0xc0ffee + n as u64);
    let mut candidates: Vec<Graph> = Vec::new();
    let all = subsets(host.order(), n);
    let exhaustive = n == 8;
    if exhaustive {
        candidates.extend(all.iter().map(|w| host.induced(w)));
    } else {
        for _ in 0..samples {
            candidates.push(host.induced(all.choose(&mut rng).expect("nonempty")));
        }
    }
    let mut random_accepted = 0usize;
    let cap = samples.saturating_mul(2000).max(1);
    let mut attempts = 0usize;
    while random_accepted < samples && attempts < cap {
        attempts += 1;
        let g = Graph::from_fn(n, |_, _| rng.gen_bool(0.5));
        if in_open_1_3(&g) {
            random_accepted += 1;
            candidates.push(g);
        }
    }
    let mut tested = 0usize;
    let mut skipped = 0usize;
    let mut failures: Vec<String> = Vec::new();
    let verdicts: Vec<Option<bool>> = candidates
        .par_iter()
        .map(|g| in_open_1_3(g).then(|| contains_up_to_switching(g, &target)))
        .collect();
    for (g, v) in candidates.iter().zip(verdicts) {
        match v {
            None => skipped += 1,
            Some(true) => tested += 1,
            Some(false) => {
                tested += 1;
                failures.push(g.to_graph6());
            }
        }
    }
    rep.record("n", n)
        .record("target", target.to_graph6())
        .record("subsets_exhaustive", exhaustive)
        .record("random_graphs_accepted", random_accepted)
        .record("random_attempts", attempts)
        .record("tested", tested)
        .record("skipped_outside_interval", skipped)
        .record("failures", &failures);
    rep.require("all_contain_target", failures.is_empty());
    rep.require("nonempty", tested > 0);
    Ok(rep)
}

/// For each witness of a two-eigenvalue matrix, the spectrum of the
/// extension obeys `θ + τ = μ`, `θτ = −n`.
pub fn extension_relations(v: &ExtensionVerdict) -> Option<Result<CheckReport>> {
    let w = v.witness()?;
    two_eigenvalue_params(&v.matrix)?;
    Some(extension_spectrum_check(&v.matrix, w))
}

/// Lexicographically least sign vectors (`−1 < +1`, `s_0 = +1`) whose
/// extension keeps `λ`, without and with rank preservation, found by a
/// full PSD check of all `2^{n−1}` candidates.
pub fn brute_force_extensions(s: &SeidelMatrix, lambda: &QuadraticNumber) -> (Option<Vec<i8>>, Option<Vec<i8>>) {
    let n = s.order();
    if n == 0 {
        return (None, None);
    }
    let base = rank_at(s, lambda);
    let (mut any, mut keep) = (None, None);
    for bits in 0u64..1 << (n - 1) {
        let signs: Vec<i8> =
            std::iter::once(1).chain((1..n).map(|i| if bits >> (n - 1 - i) & 1 == 1 { 1 } else { -1 })).collect();
        let f = crate::algebra::psd::ldl(&s.bordered(&signs).shifted(lambda));
        if f.witness.is_some() {
            continue;
        }
        if any.is_none() {
            any = Some(signs.clone());
        }
        if keep.is_none() && f.rank() == base {
            keep = Some(signs);
            break;
        }
    }
    (any, keep)
}

#[cfg(test)]
mod tests {
    use super::*;

    fn g(s: &str) -> Graph {
        s.parse::<GraphSpec>().unwrap().build().unwrap()
    }

    fn q(n: i64) -> QuadraticNumber {
        QuadraticNumber::int(n)
    }

    #[test]
    fn examples() {
        let s = seidel_of(&g("Kbar3"));
        assert!(find_extension(&s, &q(2), false).unwrap().is_exhausted());
        let s = seidel_of(&g("L(K6)+K1"));
        assert!(find_extension(&s, &q(3), true).unwrap().is_exhausted());
        assert!(!find_extension(&s, &q(3), false).unwrap().is_exhausted());
        let v = find_extension(&seidel_of(&g("Kbar4")), &q(3), false).unwrap();
        assert_eq!(v.witness().unwrap()[0], 1);
    }

    #[test]
    fn precondition() {
        let s = seidel_of(&g("Kbar3"));
        assert!(matches!(find_extension(&s, &q(3), false), Err(Error::PreconditionViolated(_))));
    }

    #[test]
    fn agrees_with_brute_force_small() {
        for n in 1..=4usize {
            let pairs: Vec<(usize, usize)> = (0..n).flat_map(|i| (i + 1..n).map(move |j| (i, j))).collect();
            for mask in 0u64..1 << pairs.len() {
                let gr = graph_from_mask(n, &pairs, mask);
                let s = seidel_of(&gr);
                let Ok(lambda) = largest_eigenvalue(&s) else { continue };
                let (any, keep) = brute_force_extensions(&s, &lambda);
                for (pr, want) in [(false, any), (true, keep)] {
                    let v = find_extension(&s, &lambda, pr).unwrap();
                    assert_eq!(v.witness().map(|w| w.to_vec()), want, "{gr:?} {pr}");
                }
            }
        }
    }

    /// Two-vertex extensions exist only when one-vertex ones do.
    #[test]
    fn one_vertex_reduction_small() {
        for n in 1..=4usize {
            let pairs: Vec<(usize, usize)> = (0..n).flat_map(|i| (i + 1..n).map(move |j| (i, j))).collect();
            for mask in 0u64..1 << pairs.len() {
                let gr = graph_from_mask(n, &pairs, mask);
                let s = seidel_of(&gr);
                let Ok(lambda) = largest_eigenvalue(&s) else { continue };
                let base = rank_at(&s, &lambda);
                for pr in [false, true] {
                    let one = find_extension(&s, &lambda, pr).unwrap().witness().is_some();
                    let mut two = false;
                    for a in 0u32..1 << n {
                        let sa: Vec<i8> = (0..n).map(|i| if a >> i & 1 == 1 { 1 } else { -1 }).collect();
                        let ext1 = s.bordered(&sa);
                        for b in 0u32..1 << (n + 1) {
                            let sb: Vec<i8> = (0..=n).map(|i| if b >> i & 1 == 1 { 1 } else { -1 }).collect();
                            let ext2 = ext1.bordered(&sb);
                            if compare_largest(&ext2, &lambda) == Ordering::Equal
                                && (!pr || rank_at(&ext2, &lambda) == base)
                            {
                                two = true;
                            }
                        }
                    }
                    assert!(!two || one, "{gr:?} {pr}");
                }
            }
        }
    }

    #[test]
    fn maximal_examples() {
        for spec in ["L(K2,4)", "L(K5)", "L(K2,3)", "Kbar4"] {
            assert!(is_maximal(&g(spec)).unwrap().0, "{spec}");
        }
        assert!(is_strongly_maximal(&g("C5+K1")).unwrap().0);
        assert!(is_strongly_maximal(&g("Kbar5")).unwrap().0);
        assert!(!is_strongly_maximal(&g("Kbar6")).unwrap().0);
    }

    #[test]
    fn budget_exhaustion() {
        let s = seidel_of(&g("L(K2,5)"));
        let cfg = SearchConfig { budget: 3, split_depth: 2 };
        assert_eq!(find_extension_with(&s, &q(3), true, &cfg).unwrap_err(), Error::OutOfBudget(3));
    }

    #[test]
    fn split_depth_does_not_change_verdict() {
        let s = seidel_of(&g("Kbar8"));
        let a = find_extension_with(&s, &q(7), false, &SearchConfig { budget: 1 << 20, split_depth: 0 }).unwrap();
        let b = find_extension_with(&s, &q(7), false, &SearchConfig { budget: 1 << 20, split_depth: 5 }).unwrap();
        assert_eq!(a.outcome, b.outcome);
    }

    #[test]
    fn lattice_route() {
        let rep = strong_maximality_via_lattice(&g("L(K2,6)")).unwrap();
        assert!(rep.passed(), "{rep:?}");
        assert_eq!(rep.get("search_maximal"), Some(&json!(false)));
        let rep = strong_maximality_via_lattice(&g("L(K2,7)")).unwrap();
        assert!(rep.passed(), "{rep:?}");
        assert_eq!(rep.get("lattice_maximal"), Some(&json!(true)));
        assert_eq!(rep.get("lattice_strongly_maximal"), Some(&json!(false)));
        assert!(matches!(strong_maximality_via_lattice(&g("C5+K1")), Err(Error::NotApplicable(_))));
    }

    #[test]
    fn criterion_examples() {
        let rep = extendability_criterion(&g("C5+K1"));
        assert!(rep.passed(), "{rep:?}");
        assert_eq!(rep.get("extendable"), Some(&json!(false)));
        for t in [2, 3] {
            let rep = extendability_criterion(&g(&format!("K{t},{t}")));
            assert!(rep.passed(), "{rep:?}");
            assert!(rep.get("regular_condition_fires").unwrap().as_u64().unwrap() > 0);
        }
    }

    #[test]
    fn small_lambda_values() {
        let t = lambda_table(6).unwrap();
        assert_eq!(t[0].value, Eigenvalue::Exact(q(2)));
        for e in &t[1..] {
            assert_eq!(e.value, Eigenvalue::Exact(QuadraticNumber::sqrt(5)));
        }
        assert!(matches!(lambda_table(9), Err(Error::OutOfBudget(_))));
    }

    #[test]
    fn extremal_small() {
        assert_eq!(extremal_construction(2).unwrap_err(), Error::InvalidRank(2));
        let (gr, rep) = extremal_construction(5).unwrap();
        assert_eq!(gr.order(), 10);
        assert!(rep.passed(), "{rep:?}");
    }

    #[test]
    fn hatk() {
        for n in 2..=12 {
            assert!(hatk_eigenvalue_check(n).unwrap().passed(), "{n}");
        }
        let rep = hatk_eigenvalue_check(6).unwrap();
        assert_eq!(rep.get("quadratic_factor"), Some(&json!("x^2 + 3*x - 14")));
        assert_eq!(rep.get("shifted_factor_divides"), Some(&json!(false)));
        let rep = hatk_eigenvalue_check(2).unwrap();
        assert_eq!(rep.get("largest"), Some(&json!("2")));
    }

    #[test]
    fn subsets_count() {
        assert_eq!(subsets(6, 3).len(), 20);
        assert_eq!(subsets(4, 0).len(), 1);
    }
}
