//! Simple graphs on at most 64 labelled vertices, switching, and the named
//! constructions used throughout the crate.

mod graph6;
mod iso;
mod spec;

use std::fmt;

use serde::{Serialize, Serializer};

use crate::algebra::{char_poly, IntMatrix, IntPoly};

pub use iso::{is_switching_equivalent, SwitchingCertificate};
pub use spec::GraphSpec;

/// Hard cap on the order; adjacency rows are single `u64` masks.
pub const MAX_ORDER: usize = 64;

/// Undirected loopless graph on `0..order`.
#[derive(Clone, PartialEq, Eq, Hash)]
pub struct Graph {
    n: usize,
    adj: Vec<u64>,
}

#[inline]
fn bit(i: usize) -> u64 {
    1u64 << i
}

/// Mask with the given vertices set.
pub fn mask_of(vs: &[usize]) -> u64 {
    vs.iter().fold(0, |m, &v| m | bit(v))
}

/// Vertices of a mask in increasing order.
pub fn mask_vertices(m: u64) -> Vec<usize> {
    (0..64).filter(|&i| m & bit(i) != 0).collect()
}

impl Graph {
    pub fn empty(n: usize) -> Self {
        assert!(n <= MAX_ORDER, "graph order {n} exceeds {MAX_ORDER}");
        Graph { n, adj: vec![0; n] }
    }

    pub fn complete(n: usize) -> Self {
        Self::empty(n).complement()
    }

    pub fn from_edges(n: usize, edges: &[(usize, usize)]) -> Self {
        let mut g = Self::empty(n);
        for &(i, j) in edges {
            g.add_edge(i, j);
        }
        g
    }

    /// Builds from a symmetric predicate evaluated on `i < j`.
    pub fn from_fn(n: usize, mut f: impl FnMut(usize, usize) -> bool) -> Self {
        let mut g = Self::empty(n);
        for j in 0..n {
            for i in 0..j {
                if f(i, j) {
                    g.add_edge(i, j);
                }
            }
        }
        g
    }

    pub fn order(&self) -> usize {
        self.n
    }

    fn full_mask(&self) -> u64 {
        if self.n == 64 {
            u64::MAX
        } else {
            bit(self.n) - 1
        }
    }

    pub fn has_edge(&self, i: usize, j: usize) -> bool {
        self.adj[i] & bit(j) != 0
    }

    pub fn add_edge(&mut self, i: usize, j: usize) {
        assert!(i != j && i < self.n && j < self.n, "bad edge {i}-{j}");
        self.adj[i] |= bit(j);
        self.adj[j] |= bit(i);
    }

    pub fn remove_edge(&mut self, i: usize, j: usize) {
        self.adj[i] &= !bit(j);
        self.adj[j] &= !bit(i);
    }

    pub fn neighbor_mask(&self, v: usize) -> u64 {
        self.adj[v]
    }

    pub fn neighbors(&self, v: usize) -> Vec<usize> {
        mask_vertices(self.adj[v])
    }

    pub fn degree(&self, v: usize) -> usize {
        self.adj[v].count_ones() as usize
    }

    pub fn degrees(&self) -> Vec<usize> {
        (0..self.n).map(|v| self.degree(v)).collect()
    }

    pub fn edges(&self) -> Vec<(usize, usize)> {
        let mut out = Vec::new();
        for i in 0..self.n {
            out.extend(mask_vertices(self.adj[i]).into_iter().filter(|&j| j > i).map(|j| (i, j)));
        }
        out
    }

    pub fn edge_count(&self) -> usize {
        self.adj.iter().map(|m| m.count_ones() as usize).sum::<usize>() / 2
    }

    /// Common degree when the graph is regular.
    pub fn regular_degree(&self) -> Option<usize> {
        let d = self.degrees();
        match d.first() {
            None => Some(0),
            Some(&k) => d.iter().all(|&x| x == k).then_some(k),
        }
    }

    pub fn is_connected(&self) -> bool {
        if self.n == 0 {
            return true;
        }
        let mut seen = bit(0);
        let mut frontier = bit(0);
        while frontier != 0 {
            let mut next = 0;
            for v in mask_vertices(frontier) {
                next |= self.adj[v];
            }
            frontier = next & !seen;
            seen |= next;
        }
        seen == self.full_mask()
    }

    pub fn complement(&self) -> Graph {
        let full = self.full_mask();
        Graph { n: self.n, adj: (0..self.n).map(|i| !self.adj[i] & full & !bit(i)).collect() }
    }

    /// Complements adjacency across the cut `(U, V∖U)`.
    pub fn switch(&self, u: &[usize]) -> Graph {
        self.switch_mask(mask_of(u))
    }

    pub fn switch_mask(&self, u: u64) -> Graph {
        let u = u & self.full_mask();
        let rest = self.full_mask() & !u;
        let adj = (0..self.n)
            .map(|i| {
                let cross = if u & bit(i) != 0 { rest } else { u };
                self.adj[i] ^ cross
            })
            .collect();
        Graph { n: self.n, adj }
    }

    /// The member of the switching class in which `v` is isolated.
    pub fn descendant(&self, v: usize) -> Graph {
        self.switch_mask(self.adj[v])
    }

    /// Vertices of `other` are shifted by `self.order()`.
    pub fn disjoint_union(&self, other: &Graph) -> Graph {
        let n = self.n + other.n;
        let mut g = Graph::empty(n);
        g.adj[..self.n].copy_from_slice(&self.adj);
        for (i, m) in other.adj.iter().enumerate() {
            g.adj[self.n + i] = m << self.n;
        }
        g
    }

    /// Adds an apex adjacent to every vertex; the apex is the last vertex.
    pub fn cone(&self) -> Graph {
        let mut g = self.disjoint_union(&Graph::empty(1));
        for v in 0..self.n {
            g.add_edge(v, self.n);
        }
        g
    }

    /// Vertices are the edges `(i, j)`, `i < j`, in lexicographic order.
    pub fn line_graph(&self) -> Graph {
        let e = self.edges();
        Graph::from_fn(e.len(), |a, b| {
            let (x, y) = (e[a], e[b]);
            x.0 == y.0 || x.0 == y.1 || x.1 == y.0 || x.1 == y.1
        })
    }

    /// Induced subgraph on `vs`, relabelled `0..vs.len()` in the given order.
    pub fn induced(&self, vs: &[usize]) -> Graph {
        Graph::from_fn(vs.len(), |i, j| self.has_edge(vs[i], vs[j]))
    }

    /// Relabels vertex `i` as `perm[i]`.
    pub fn relabel(&self, perm: &[usize]) -> Graph {
        assert_eq!(perm.len(), self.n);
        let mut g = Graph::empty(self.n);
        for (i, j) in self.edges() {
            g.add_edge(perm[i], perm[j]);
        }
        g
    }

    pub fn adjacency(&self) -> IntMatrix {
        IntMatrix::from_fn(self.n, |i, j| self.has_edge(i, j) as i64)
    }

    /// `S = J − I − 2A`.
    pub fn seidel_int(&self) -> IntMatrix {
        IntMatrix::from_fn(self.n, |i, j| {
            if i == j {
                0
            } else if self.has_edge(i, j) {
                -1
            } else {
                1
            }
        })
    }

    pub fn seidel_char_poly(&self) -> IntPoly {
        char_poly(&self.seidel_int())
    }

    pub fn to_graph6(&self) -> String {
        graph6::encode(self)
    }

    pub fn from_graph6(s: &str) -> crate::Result<Graph> {
        graph6::decode(s)
    }
}

impl fmt::Debug for Graph {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "Graph({}, {:?})", self.n, self.edges())
    }
}

impl fmt::Display for Graph {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(&self.to_graph6())
    }
}

impl Serialize for Graph {
    fn serialize<S: Serializer>(&self, s: S) -> Result<S::Ok, S::Error> {
        s.serialize_str(&self.to_graph6())
    }
}
