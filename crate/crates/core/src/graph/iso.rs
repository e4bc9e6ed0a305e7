//! Switching equivalence up to relabelling.
//!
//! After cheap invariants agree, vertex 0 of `G` is matched against every
//! vertex `w` of `H`, and the descendants in which those vertices are
//! isolated are compared by individualization–refinement backtracking.

use std::collections::BTreeMap;

use serde::Serialize;

use super::{mask_of, mask_vertices, Graph};
use crate::error::{Error, Result};

/// `H = perm(switch(G, U))`, where vertex `i` of `G` becomes `perm[i]`.
#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct SwitchingCertificate {
    pub perm: Vec<usize>,
    pub switch_set: Vec<usize>,
}

impl SwitchingCertificate {
    pub fn verify(&self, g: &Graph, h: &Graph) -> bool {
        g.switch(&self.switch_set).relabel(&self.perm) == *h
    }
}

fn descendant_profile(g: &Graph) -> Vec<Vec<usize>> {
    let mut out: Vec<Vec<usize>> = (0..g.order())
        .map(|v| {
            let mut d = g.descendant(v).degrees();
            d.sort_unstable();
            d
        })
        .collect();
    out.sort();
    out
}

pub fn is_switching_equivalent(g: &Graph, h: &Graph) -> Result<Option<SwitchingCertificate>> {
    let n = g.order();
    if n != h.order() {
        return Err(Error::OrderMismatch(n, h.order()));
    }
    if n == 0 {
        return Ok(Some(SwitchingCertificate { perm: vec![], switch_set: vec![] }));
    }
    if g.seidel_char_poly() != h.seidel_char_poly() {
        return Ok(None);
    }
    if descendant_profile(g) != descendant_profile(h) {
        return Ok(None);
    }
    let g0 = g.descendant(0);
    let mut g0_degs = g0.degrees();
    g0_degs.sort_unstable();
    for w in 0..n {
        let hw = h.descendant(w);
        let mut d = hw.degrees();
        d.sort_unstable();
        if d != g0_degs {
            continue;
        }
        if let Some(perm) = isomorphism_fixing(&g0, 0, &hw, w) {
            let back: Vec<usize> = {
                let mut inv = vec![0; n];
                for (i, &p) in perm.iter().enumerate() {
                    inv[p] = i;
                }
                h.neighbors(w).into_iter().map(|x| inv[x]).collect()
            };
            let u = g.neighbor_mask(0) ^ mask_of(&back);
            let cert = SwitchingCertificate { perm, switch_set: mask_vertices(u) };
            debug_assert!(cert.verify(g, h));
            return Ok(Some(cert));
        }
    }
    Ok(None)
}

/// Isomorphism `g → h` sending `a` to `b`, as a vertex map.
pub(crate) fn isomorphism_fixing(g: &Graph, a: usize, h: &Graph, b: usize) -> Option<Vec<usize>> {
    let n = g.order();
    let mut cg: Vec<usize> = g.degrees().iter().map(|d| d + 1).collect();
    let mut ch: Vec<usize> = h.degrees().iter().map(|d| d + 1).collect();
    cg[a] = 0;
    ch[b] = 0;
    if !refine(g, h, &mut cg, &mut ch) {
        return None;
    }
    search(g, h, cg, ch, n)
}

/// Joint colour refinement; false as soon as the colourings disagree.
fn refine(g: &Graph, h: &Graph, cg: &mut Vec<usize>, ch: &mut Vec<usize>) -> bool {
    let n = g.order();
    let mut classes = count_classes(cg);
    loop {
        let sig = |gr: &Graph, c: &[usize], v: usize| {
            let mut nb: Vec<usize> = gr.neighbors(v).into_iter().map(|x| c[x]).collect();
            nb.sort_unstable();
            (c[v], nb)
        };
        let sg: Vec<_> = (0..n).map(|v| sig(g, cg, v)).collect();
        let sh: Vec<_> = (0..n).map(|v| sig(h, ch, v)).collect();
        let mut ids = BTreeMap::new();
        for s in sg.iter().chain(sh.iter()) {
            let next = ids.len();
            ids.entry(s.clone()).or_insert(next);
        }
        // renumber by sorted signature so both sides agree
        for (k, v) in ids.values_mut().enumerate() {
            *v = k;
        }
        *cg = sg.iter().map(|s| ids[s]).collect();
        *ch = sh.iter().map(|s| ids[s]).collect();
        if histogram(cg) != histogram(ch) {
            return false;
        }
        let now = count_classes(cg);
        if now == classes {
            return true;
        }
        classes = now;
    }
}

fn histogram(c: &[usize]) -> BTreeMap<usize, usize> {
    let mut m = BTreeMap::new();
    for &x in c {
        *m.entry(x).or_insert(0) += 1;
    }
    m
}

fn count_classes(c: &[usize]) -> usize {
    histogram(c).len()
}

fn search(g: &Graph, h: &Graph, cg: Vec<usize>, ch: Vec<usize>, n: usize) -> Option<Vec<usize>> {
    let hist = histogram(&cg);
    let target = hist.iter().filter(|(_, &k)| k > 1).min_by_key(|(_, &k)| k).map(|(&c, _)| c);
    let Some(color) = target else {
        let mut perm = vec![0; n];
        for v in 0..n {
            perm[v] = (0..n).find(|&x| ch[x] == cg[v])?;
        }
        return g.edges().iter().all(|&(i, j)| h.has_edge(perm[i], perm[j])).then_some(perm)
            .filter(|_| g.edge_count() == h.edge_count());
    };
    let u = (0..n).find(|&v| cg[v] == color)?;
    let fresh = n + 1 + hist.len();
    for x in (0..n).filter(|&x| ch[x] == color) {
        let mut g2 = cg.clone();
        let mut h2 = ch.clone();
        g2[u] = fresh;
        h2[x] = fresh;
        if refine(g, h, &mut g2, &mut h2) {
            if let Some(p) = search(g, h, g2, h2, n) {
                return Some(p);
            }
        }
    }
    None
}

#[cfg(test)]
mod tests {
    use super::*;

    fn kbip(a: usize, b: usize) -> Graph {
        Graph::from_fn(a + b, |i, j| (i < a) != (j < a))
    }

    #[test]
    fn switched_copy_found() {
        let g = Graph::from_edges(6, &[(0, 1), (1, 2), (2, 3), (4, 5), (0, 5)]);
        let h = g.switch(&[1, 4]);
        let cert = is_switching_equivalent(&g, &h).unwrap().unwrap();
        assert!(cert.verify(&g, &h));
    }

    #[test]
    fn empty_vs_bipartite() {
        let cert = is_switching_equivalent(&Graph::empty(4), &kbip(2, 2)).unwrap().unwrap();
        assert!(cert.verify(&Graph::empty(4), &kbip(2, 2)));
    }

    #[test]
    fn triangle_vs_empty() {
        assert_eq!(is_switching_equivalent(&Graph::complete(3), &Graph::empty(3)).unwrap(), None);
    }

    #[test]
    fn order_mismatch() {
        assert_eq!(
            is_switching_equivalent(&Graph::empty(3), &Graph::empty(4)),
            Err(Error::OrderMismatch(3, 4))
        );
    }

    #[test]
    fn relabelled_and_switched() {
        let g = Graph::complete(8).line_graph();
        let n = g.order();
        let perm: Vec<usize> = (0..n).map(|i| (i * 11 + 5) % n).collect();
        let h = g.switch(&[0, 3, 7, 19, 20]).relabel(&perm);
        let cert = is_switching_equivalent(&g, &h).unwrap().unwrap();
        assert!(cert.verify(&g, &h));
    }
}
