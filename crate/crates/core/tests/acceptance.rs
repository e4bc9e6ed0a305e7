//! The ten acceptance criteria. Each runs its suite and then an oracle
//! written here, independent of the library's exact arithmetic: Jacobi
//! eigenvalues in f64, direct counting, or direct enumeration.

use seidelkit::lattice::{enumerate_roots, standard_lattice, RootLatticeType};
use seidelkit::maximality::{find_extension, is_maximal, is_strongly_maximal};
use seidelkit::seidel::{largest_eigenvalue, seidel_of};
use seidelkit::{run_suite, Graph, GraphSpec, SuiteReport};

const TOL: f64 = 1e-7;

fn g(spec: &str) -> Graph {
    spec.parse::<GraphSpec>().unwrap().build().unwrap()
}

fn seidel_f64(gr: &Graph) -> Vec<Vec<f64>> {
    let n = gr.order();
    (0..n)
        .map(|i| {
            (0..n)
                .map(|j| match (i == j, gr.has_edge(i, j)) {
                    (true, _) => 0.0,
                    (false, true) => -1.0,
                    (false, false) => 1.0,
                })
                .collect()
        })
        .collect()
}

/// Cyclic Jacobi rotations; eigenvalues in decreasing order.
fn eigenvalues(mut a: Vec<Vec<f64>>) -> Vec<f64> {
    let n = a.len();
    for _ in 0..100 {
        let off: f64 = (0..n).flat_map(|i| (0..n).filter(move |&j| j != i).map(move |j| (i, j))).map(|(i, j)| a[i][j] * a[i][j]).sum();
        if off < 1e-22 {
            break;
        }
        for p in 0..n {
            for q in p + 1..n {
                if a[p][q].abs() < 1e-300 {
                    continue;
                }
                let theta = (a[q][q] - a[p][p]) / (2.0 * a[p][q]);
                let t = theta.signum() / (theta.abs() + (theta * theta + 1.0).sqrt());
                let t = if theta == 0.0 { 1.0 } else { t };
                let c = 1.0 / (t * t + 1.0).sqrt();
                let s = t * c;
                for k in 0..n {
                    let (akp, akq) = (a[k][p], a[k][q]);
                    a[k][p] = c * akp - s * akq;
                    a[k][q] = s * akp + c * akq;
                }
                for k in 0..n {
                    let (apk, aqk) = (a[p][k], a[q][k]);
                    a[p][k] = c * apk - s * aqk;
                    a[q][k] = s * apk + c * aqk;
                }
            }
        }
    }
    let mut ev: Vec<f64> = (0..n).map(|i| a[i][i]).collect();
    ev.sort_by(|x, y| y.partial_cmp(x).unwrap());
    ev
}

fn largest(gr: &Graph) -> f64 {
    eigenvalues(seidel_f64(gr))[0]
}

/// Number of eigenvalues of `S` within `TOL` of `x`.
fn multiplicity(gr: &Graph, x: f64) -> usize {
    eigenvalues(seidel_f64(gr)).iter().filter(|e| (*e - x).abs() < 1e-6).count()
}

fn bordered(gr: &Graph, signs: &[i8]) -> Graph {
    let n = gr.order();
    Graph::from_fn(n + 1, |i, j| if j == n { signs[i] < 0 } else { gr.has_edge(i, j) })
}

fn suite(name: &str) -> Result<SuiteReport, String> {
    let r = run_suite(name).map_err(|e| e.to_string())?;
    if r.passed() {
        Ok(r)
    } else {
        let failed: Vec<&str> = r.failures().iter().map(|c| c.claim.as_str()).collect();
        Err(format!("suite {name} failed: {failed:?}"))
    }
}

fn ensure(ok: bool, msg: impl Into<String>) -> Result<(), String> {
    if ok {
        Ok(())
    } else {
        Err(msg.into())
    }
}

fn lambda_table() -> Result<(), String> {
    let r = suite("lambda-table")?;
    let want = [
        (3, 2.0),
        (4, 5f64.sqrt()),
        (5, 5f64.sqrt()),
        (6, 5f64.sqrt()),
        (7, (-3.0 + 65f64.sqrt()) / 2.0),
    ];
    for (n, x) in want {
        let c = r.checks.iter().find(|c| c.claim == format!("lambda/n={n}")).ok_or("missing entry")?;
        let g6 = c.data["entry"]["witness_graph"].as_str().ok_or("no witness")?;
        let w = Graph::from_graph6(g6).map_err(|e| e.to_string())?;
        ensure((largest(&w) - x).abs() < TOL, format!("lambda({n}) witness has {} not {x}", largest(&w)))?;
    }
    // x^2 + 3x - 14 at the value
    let l7: f64 = (-3.0 + 65f64.sqrt()) / 2.0;
    ensure((l7 * l7 + 3.0 * l7 - 14.0).abs() < 1e-9, "minimal polynomial")
}

const MAXIMAL: [(&str, bool, usize); 10] = [
    ("L(K5)", true, 5),
    ("L(K2,4)", true, 5),
    ("L(K6)+K1", true, 6),
    ("L(K2,5)", true, 6),
    ("L(K8)", true, 7),
    ("L(K2,2)", true, 3),
    ("L(K2,3)", true, 4),
    ("L(K2,7)", true, 8),
    ("L(K2,8)", true, 9),
    ("L(K2,6)", false, 7),
];

fn maximal_list() -> Result<(), String> {
    let r = suite("theorem3")?;
    for (spec, expected, rank) in MAXIMAL {
        let c = r.checks.iter().find(|c| c.claim == format!("maximal/{spec}")).ok_or("missing case")?;
        ensure(c.data["maximal"] == serde_json::json!(expected), format!("{spec} verdict"))?;
        let gr = g(spec);
        ensure((largest(&gr) - 3.0).abs() < TOL, format!("{spec} largest"))?;
        ensure(gr.order() - multiplicity(&gr, 3.0) == rank, format!("{spec} rank"))?;
        let (m, v) = is_maximal(&gr).map_err(|e| e.to_string())?;
        ensure(m == expected, format!("{spec} direct verdict"))?;
        if let Some(w) = v.witness() {
            let ext = bordered(&gr, w);
            ensure((largest(&ext) - 3.0).abs() < TOL, format!("{spec} witness keeps 3"))?;
            ensure(ext.order() - multiplicity(&ext, 3.0) == rank, format!("{spec} witness keeps rank"))?;
        }
    }
    Ok(())
}

fn strong_maximality() -> Result<(), String> {
    let r = suite("theorem3")?;
    let mut cases = vec![("L(K8)".to_string(), true), ("L(K5)".into(), false), ("L(K6)+K1".into(), false)];
    cases.extend((1..=8).map(|m| (format!("L(K2,{m})"), false)));
    for (spec, expected) in cases {
        let c = r.checks.iter().find(|c| c.claim == format!("strongly-maximal/{spec}")).ok_or("missing case")?;
        ensure(c.data["strongly_maximal"] == serde_json::json!(expected), format!("{spec} verdict"))?;
        let gr = g(&spec);
        let (s, v) = is_strongly_maximal(&gr).map_err(|e| e.to_string())?;
        ensure(s == expected, format!("{spec} direct verdict"))?;
        if let Some(w) = v.witness() {
            let l = largest(&gr);
            ensure((largest(&bordered(&gr, w)) - l).abs() < TOL, format!("{spec} witness keeps λ"))?;
        }
    }
    Ok(())
}

fn extremal_orders() -> Result<(), String> {
    let r = suite("corollary13")?;
    for (rank, n) in [(3, 4), (4, 6), (5, 10), (6, 16), (7, 28), (8, 14), (9, 16)] {
        let c = r.checks.iter().find(|c| c.claim == format!("extremal/r={rank}")).ok_or("missing rank")?;
        let g6 = c.data["graph"].as_str().ok_or("no graph")?;
        let gr = Graph::from_graph6(g6).map_err(|e| e.to_string())?;
        ensure(gr.order() == n, format!("r={rank}: order {}", gr.order()))?;
        ensure((largest(&gr) - 3.0).abs() < TOL, format!("r={rank}: largest"))?;
        ensure(n - multiplicity(&gr, 3.0) == rank, format!("r={rank}: rank"))?;
    }
    Ok(())
}

/// E8 roots, doubled to integer coordinates: `±2e_i ± 2e_j` and `(±1)^8`
/// with an even number of minus signs.
fn e8_roots() -> Vec<[i32; 8]> {
    let mut out = Vec::new();
    for i in 0..8 {
        for j in i + 1..8 {
            for (a, b) in [(2, 2), (2, -2), (-2, 2), (-2, -2)] {
                let mut v = [0; 8];
                v[i] = a;
                v[j] = b;
                out.push(v);
            }
        }
    }
    for m in 0u32..256 {
        if m.count_ones() % 2 == 0 {
            out.push(std::array::from_fn(|i| if m >> i & 1 == 1 { -1 } else { 1 }));
        }
    }
    out
}

fn dot(x: &[i32; 8], y: &[i32; 8]) -> i32 {
    x.iter().zip(y).map(|(a, b)| a * b).sum()
}

fn switching_classes() -> Result<(), String> {
    suite("lattice-sc")?;
    let roots = e8_roots();
    let r1 = [2, -2, 0, 0, 0, 0, 0, 0];
    let r2 = [0, 2, -2, 0, 0, 0, 0, 0];
    let e7 = roots.iter().filter(|v| dot(v, &r1) == 0).count();
    let e6 = roots.iter().filter(|v| dot(v, &r1) == 0 && dot(v, &r2) == 0).count();
    for (n, count) in [(8, roots.len()), (7, e7), (6, e6)] {
        let l = standard_lattice(RootLatticeType::e(n)).map_err(|e| e.to_string())?;
        let got = enumerate_roots(&l).len();
        ensure(got == count, format!("E{n}: {got} roots, oracle {count}"))?;
    }
    ensure((roots.len(), e7, e6) == (240, 126, 72), "root counts")
}

fn theta_equivalence() -> Result<(), String> {
    suite("section4")?;
    // λ_max(S) ≤ 3 iff the cone has λ_min(A) ≥ −2, on all graphs of order 4
    for mask in 0u32..64 {
        let pairs = [(0, 1), (0, 2), (0, 3), (1, 2), (1, 3), (2, 3)];
        let gr = Graph::from_edges(4, &pairs.iter().enumerate().filter(|(b, _)| mask >> b & 1 == 1).map(|(_, &p)| p).collect::<Vec<_>>());
        let cone = gr.cone();
        let n = cone.order();
        let a: Vec<Vec<f64>> = (0..n).map(|i| (0..n).map(|j| if cone.has_edge(i, j) { 1.0 } else { 0.0 }).collect()).collect();
        let amin = *eigenvalues(a).last().unwrap();
        let left = largest(&gr) <= 3.0 + TOL;
        let right = amin >= -2.0 - TOL;
        ensure(left == right, format!("mask {mask}"))?;
    }
    Ok(())
}

fn absolute_bound() -> Result<(), String> {
    suite("absolute-bound")?;
    for (spec, r) in [("Kbar3", 2usize), ("C5+K1", 3), ("L(K8)", 7)] {
        let gr = g(spec);
        let l = largest(&gr);
        let rank = gr.order() - multiplicity(&gr, l);
        ensure(rank == r && gr.order() == r * (r + 1) / 2, format!("{spec}: n = {}, r = {rank}", gr.order()))?;
    }
    Ok(())
}

/// `jᵀ M⁻¹ j` by Gaussian elimination in f64.
fn quad_form_inverse(mut m: Vec<Vec<f64>>) -> f64 {
    let n = m.len();
    let mut b = vec![1.0; n];
    for c in 0..n {
        let p = (c..n).max_by(|&x, &y| m[x][c].abs().partial_cmp(&m[y][c].abs()).unwrap()).unwrap();
        m.swap(c, p);
        b.swap(c, p);
        for r in c + 1..n {
            let f = m[r][c] / m[c][c];
            for k in c..n {
                m[r][k] -= f * m[c][k];
            }
            b[r] -= f * b[c];
        }
    }
    let mut x = vec![0.0; n];
    for c in (0..n).rev() {
        let s: f64 = (c + 1..n).map(|k| m[c][k] * x[k]).sum();
        x[c] = (b[c] - s) / m[c][c];
    }
    x.iter().sum()
}

fn section5_quantities() -> Result<(), String> {
    suite("section5")?;
    let t7 = g("T(7)");
    let n = t7.order();
    let m: Vec<Vec<f64>> = (0..n)
        .map(|i| (0..n).map(|j| if i == j { 2.0 } else if t7.has_edge(i, j) { 1.0 } else { 0.0 }).collect())
        .collect();
    let p = quad_form_inverse(m);
    ensure((p - 1.75).abs() < TOL, format!("p(T(7)) = {p}"))?;
    ensure(p > 2.0 - 0.5, "p above 2 - 1/θ")?;
    let k = t7.degree(0);
    let mut a = None;
    let mut c = None;
    for i in 0..n {
        ensure(t7.degree(i) == k, "regular")?;
        for j in i + 1..n {
            let common = (0..n).filter(|&v| t7.has_edge(i, v) && t7.has_edge(j, v)).count();
            let slot = if t7.has_edge(i, j) { &mut a } else { &mut c };
            ensure(slot.is_none_or(|x| x == common), "srg")?;
            *slot = Some(common);
        }
    }
    ensure((n, k, a, c) == (21, 10, Some(5), Some(4)), format!("srg ({n},{k},{a:?},{c:?})"))?;
    let (strong, v) = is_strongly_maximal(&t7).map_err(|e| e.to_string())?;
    ensure(!strong, "T(7) extendable")?;
    let w = v.witness().ok_or("no witness")?;
    ensure((largest(&bordered(&t7, w)) - 3.0).abs() < TOL, "T(7) witness keeps 3")?;
    for spec in ["Kbar3", "C5+K1"] {
        ensure(is_strongly_maximal(&g(spec)).map_err(|e| e.to_string())?.0, format!("{spec} strongly maximal"))?;
    }
    Ok(())
}

fn section6_results() -> Result<(), String> {
    suite("section6")?;
    for n in 2..=9usize {
        let gr = Graph::empty(n);
        let s = seidel_of(&gr);
        let l = largest_eigenvalue(&s).map_err(|e| e.to_string())?;
        let v = find_extension(&s, &l, false).map_err(|e| e.to_string())?;
        ensure(v.witness().is_some() == (n % 2 == 0), format!("Kbar{n}"))?;
        if let Some(w) = v.witness() {
            let ext = bordered(&gr, w);
            let ev = eigenvalues(seidel_f64(&ext));
            ensure((ev[0] - (n as f64 - 1.0)).abs() < TOL, format!("Kbar{n} witness"))?;
        }
    }
    for q in [5usize, 13] {
        let gr = g(&format!("Paley({q})+K1"));
        let ev = eigenvalues(seidel_f64(&gr));
        let r = (q as f64).sqrt();
        let h = (q + 1) / 2;
        ensure(ev[..h].iter().all(|x| (x - r).abs() < TOL) && ev[h..].iter().all(|x| (x + r).abs() < TOL), format!("Paley({q})"))?;
    }
    for n in 2..=12usize {
        let l = largest(&g(&format!("hatK({n})")));
        ensure(l > 3.0 - 4.0 / n as f64 && l < 3.0, format!("hatK({n}) = {l}"))?;
    }
    Ok(())
}

/// Any extension keeping the largest eigenvalue, by f64 eigenvalues of
/// every bordered matrix.
fn float_extendable(gr: &Graph) -> bool {
    let n = gr.order();
    let l = largest(gr);
    (0u32..1 << n).any(|m| {
        let signs: Vec<i8> = (0..n).map(|i| if m >> i & 1 == 1 { -1 } else { 1 }).collect();
        largest(&bordered(gr, &signs)) < l + 1e-9
    })
}

fn property_suites() -> Result<(), String> {
    suite("parity")?;
    for n in 1..=4usize {
        let pairs: Vec<(usize, usize)> = (0..n).flat_map(|i| (i + 1..n).map(move |j| (i, j))).collect();
        for mask in 0u32..1 << pairs.len() {
            let edges: Vec<(usize, usize)> =
                pairs.iter().enumerate().filter(|(b, _)| mask >> b & 1 == 1).map(|(_, &p)| p).collect();
            let gr = Graph::from_edges(n, &edges);
            let s = seidel_of(&gr);
            let Ok(l) = largest_eigenvalue(&s) else { continue };
            let found = find_extension(&s, &l, false).map_err(|e| e.to_string())?.witness().is_some();
            ensure(found == float_extendable(&gr), format!("order {n} mask {mask}"))?;
        }
    }
    Ok(())
}

#[test]
fn acceptance() {
    let criteria: [(&str, fn() -> Result<(), String>); 10] = [
        ("lambda(n) table for n = 3..7", lambda_table),
        ("maximal graphs at eigenvalue 3", maximal_list),
        ("strong maximality at eigenvalue 3", strong_maximality),
        ("extremal orders for r = 3..9", extremal_orders),
        ("root lattice switching classes", switching_classes),
        ("theta = 2 equivalence up to order 5", theta_equivalence),
        ("absolute bound and rank identity", absolute_bound),
        ("p-values, T(7), uniqueness", section5_quantities),
        ("empty graphs, Paley, K-hat, containment", section6_results),
        ("parity, interlacing, oracle, switching", property_suites),
    ];
    let mut failed = Vec::new();
    for (i, (name, run)) in criteria.iter().enumerate() {
        match run() {
            Ok(()) => println!("PASS {:>2} {name}", i + 1),
            Err(e) => {
                println!("FAIL {:>2} {name}: {e}", i + 1);
                failed.push(i + 1);
            }
        }
    }
    assert!(failed.is_empty(), "failed criteria: {failed:?}");
}
