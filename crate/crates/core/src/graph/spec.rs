//! Named graph constructions and their compact string form.
//!
//! Grammar (whitespace ignored):
//!
//! ```text
//! spec := term ('+' term)*
//! term := 'K' n | 'K' a ',' b | 'Kbar' n | 'Empty(' n ')' | 'C' n | 'P' n
//!       | 'L(' spec ')' | 'cone(' spec ')' | 'co(' spec ')' | '(' spec ')'
//!       | 'T(' n ')' | 'Paley(' q ')' | 'hatK(' n ')' | 'Tn(' n ')' | 'McLaughlin'
//! ```
//!
//! Labelling: `K_{a,b}` puts the first part on `0..a`; cycles and paths run
//! `0, 1, 2, …`; line-graph vertices are edges in lexicographic order; the
//! cone apex is last; unions concatenate left to right; `hatK(n)` is `K_n`
//! on `0..n` with vertex `n` joined to `n − 1`; `Tn(n)` is the claw with
//! centre 0 and leaves `1..=n`, plus vertex `n + 1` joined to leaf `n`.

use std::fmt;
use std::str::FromStr;

use serde::{Serialize, Serializer};

use super::{Graph, MAX_ORDER};
use crate::error::{Error, Result};

#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub enum GraphSpec {
    Complete(usize),
    Empty(usize),
    CompleteBipartite(usize, usize),
    Cycle(usize),
    Path(usize),
    LineGraph(Box<GraphSpec>),
    Cone(Box<GraphSpec>),
    DisjointUnion(Vec<GraphSpec>),
    Complement(Box<GraphSpec>),
    Triangular(usize),
    Paley(usize),
    HatK(usize),
    Tn(usize),
    McLaughlin,
}

fn is_prime(q: usize) -> bool {
    q >= 2 && (2..).take_while(|d| d * d <= q).all(|d| q % d != 0)
}

fn invalid(msg: impl Into<String>) -> Error {
    Error::InvalidSpec(msg.into())
}

fn checked(n: usize) -> Result<usize> {
    if n > MAX_ORDER {
        Err(invalid(format!("order {n} exceeds {MAX_ORDER}")))
    } else {
        Ok(n)
    }
}

impl GraphSpec {
    pub fn build(&self) -> Result<Graph> {
        use GraphSpec::*;
        Ok(match self {
            Complete(n) => Graph::complete(checked(*n)?),
            Empty(n) => Graph::empty(checked(*n)?),
            CompleteBipartite(a, b) => {
                let a = *a;
                Graph::from_fn(checked(a + b)?, |i, j| (i < a) != (j < a))
            }
            Cycle(n) => {
                if *n < 3 {
                    return Err(invalid(format!("cycle needs at least 3 vertices, got {n}")));
                }
                let n = checked(*n)?;
                Graph::from_fn(n, |i, j| j - i == 1 || j - i == n - 1)
            }
            Path(n) => Graph::from_fn(checked(*n)?, |i, j| j - i == 1),
            LineGraph(inner) => {
                let g = inner.build()?;
                checked(g.edge_count())?;
                g.line_graph()
            }
            Cone(inner) => {
                let g = inner.build()?;
                checked(g.order() + 1)?;
                g.cone()
            }
            DisjointUnion(parts) => {
                let mut g = Graph::empty(0);
                for p in parts {
                    let h = p.build()?;
                    checked(g.order() + h.order())?;
                    g = g.disjoint_union(&h);
                }
                g
            }
            Complement(inner) => inner.build()?.complement(),
            Triangular(n) => {
                checked(n * n.saturating_sub(1) / 2)?;
                Graph::complete(*n).line_graph()
            }
            Paley(q) => {
                let q = *q;
                if !is_prime(q) || q % 4 != 1 {
                    return Err(invalid(format!("Paley needs a prime q = 1 mod 4, got {q}")));
                }
                let q = checked(q)?;
                let residues: Vec<bool> = {
                    let mut r = vec![false; q];
                    for x in 1..q {
                        r[x * x % q] = true;
                    }
                    r
                };
                Graph::from_fn(q, |i, j| residues[j - i])
            }
            HatK(n) => {
                let n = *n;
                if n < 2 {
                    return Err(invalid(format!("hatK needs n >= 2, got {n}")));
                }
                let mut g = Graph::complete(checked(n)?).disjoint_union(&Graph::empty(1));
                g.add_edge(n - 1, n);
                g
            }
            Tn(n) => {
                let n = *n;
                if n < 1 {
                    return Err(invalid("Tn needs n >= 1"));
                }
                let mut g = Graph::empty(checked(n + 2)?);
                for leaf in 1..=n {
                    g.add_edge(0, leaf);
                }
                g.add_edge(n, n + 1);
                g
            }
            McLaughlin => return Err(invalid("the McLaughlin graph is not implemented")),
        })
    }
}

impl fmt::Display for GraphSpec {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        use GraphSpec::*;
        match self {
            Complete(n) => write!(f, "K{n}"),
            Empty(n) => write!(f, "Kbar{n}"),
            CompleteBipartite(a, b) => write!(f, "K{a},{b}"),
            Cycle(n) => write!(f, "C{n}"),
            Path(n) => write!(f, "P{n}"),
            LineGraph(g) => write!(f, "L({g})"),
            Cone(g) => write!(f, "cone({g})"),
            Complement(g) => write!(f, "co({g})"),
            DisjointUnion(parts) => {
                let s: Vec<String> = parts.iter().map(|p| p.to_string()).collect();
                write!(f, "{}", s.join("+"))
            }
            Triangular(n) => write!(f, "T({n})"),
            Paley(q) => write!(f, "Paley({q})"),
            HatK(n) => write!(f, "hatK({n})"),
            Tn(n) => write!(f, "Tn({n})"),
            McLaughlin => write!(f, "McLaughlin"),
        }
    }
}

impl Serialize for GraphSpec {
    fn serialize<S: Serializer>(&self, s: S) -> std::result::Result<S::Ok, S::Error> {
        s.serialize_str(&self.to_string())
    }
}

struct Parser<'a> {
    s: &'a [u8],
    pos: usize,
}

impl<'a> Parser<'a> {
    fn err(&self, msg: &str) -> Error {
        Error::Parse(format!("{msg} at offset {} in graph spec", self.pos))
    }

    fn peek(&self) -> Option<u8> {
        self.s.get(self.pos).copied()
    }

    fn eat(&mut self, lit: &str) -> bool {
        if self.s[self.pos..].starts_with(lit.as_bytes()) {
            self.pos += lit.len();
            true
        } else {
            false
        }
    }

    fn expect(&mut self, lit: &str) -> Result<()> {
        if self.eat(lit) {
            Ok(())
        } else {
            Err(self.err(&format!("expected '{lit}'")))
        }
    }

    fn number(&mut self) -> Result<usize> {
        let start = self.pos;
        while self.peek().is_some_and(|c| c.is_ascii_digit()) {
            self.pos += 1;
        }
        std::str::from_utf8(&self.s[start..self.pos])
            .unwrap()
            .parse()
            .map_err(|_| self.err("expected a number"))
    }

    fn paren_number(&mut self) -> Result<usize> {
        self.expect("(")?;
        let n = self.number()?;
        self.expect(")")?;
        Ok(n)
    }

    fn paren_spec(&mut self) -> Result<Box<GraphSpec>> {
        self.expect("(")?;
        let g = self.spec()?;
        self.expect(")")?;
        Ok(Box::new(g))
    }

    fn spec(&mut self) -> Result<GraphSpec> {
        let mut parts = vec![self.term()?];
        while self.eat("+") {
            parts.push(self.term()?);
        }
        Ok(if parts.len() == 1 { parts.pop().unwrap() } else { GraphSpec::DisjointUnion(parts) })
    }

    fn term(&mut self) -> Result<GraphSpec> {
        use GraphSpec::*;
        if self.eat("McLaughlin") {
            return Ok(McLaughlin);
        }
        if self.eat("Paley") {
            return Ok(Paley(self.paren_number()?));
        }
        if self.eat("hatK") {
            return Ok(HatK(self.paren_number()?));
        }
        if self.eat("Tn") {
            return Ok(Tn(self.paren_number()?));
        }
        if self.eat("Empty") {
            return Ok(Empty(self.paren_number()?));
        }
        if self.eat("Kbar") {
            return Ok(Empty(self.number()?));
        }
        if self.eat("cone") {
            return Ok(Cone(self.paren_spec()?));
        }
        if self.eat("co") {
            return Ok(Complement(self.paren_spec()?));
        }
        if self.eat("L") {
            return Ok(LineGraph(self.paren_spec()?));
        }
        if self.eat("T") {
            return Ok(Triangular(self.paren_number()?));
        }
        if self.eat("K") {
            let a = self.number()?;
            if self.peek() == Some(b',') && self.s.get(self.pos + 1).is_some_and(|c| c.is_ascii_digit()) {
                self.pos += 1;
                return Ok(CompleteBipartite(a, self.number()?));
            }
            return Ok(Complete(a));
        }
        if self.eat("C") {
            return Ok(Cycle(self.number()?));
        }
        if self.eat("P") {
            if self.peek() == Some(b'(') {
                return Ok(Paley(self.paren_number()?));
            }
            return Ok(Path(self.number()?));
        }
        if self.peek() == Some(b'(') {
            return Ok(*self.paren_spec()?);
        }
        Err(self.err("unknown graph constructor"))
    }
}

impl FromStr for GraphSpec {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        let compact: String = s.chars().filter(|c| !c.is_whitespace()).collect();
        let mut p = Parser { s: compact.as_bytes(), pos: 0 };
        let spec = p.spec()?;
        if p.pos != compact.len() {
            return Err(p.err("trailing input"));
        }
        Ok(spec)
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::graph::is_switching_equivalent;

    fn g(s: &str) -> Graph {
        s.parse::<GraphSpec>().unwrap().build().unwrap()
    }

    #[test]
    fn parse_round_trip() {
        for s in ["L(K8)", "L(K2,5)+K1", "Paley(13)", "hatK(6)", "cone(C5)", "co(P4)", "Kbar3", "T(7)", "Tn(4)"] {
            let spec: GraphSpec = s.parse().unwrap();
            assert_eq!(spec.to_string(), s);
        }
        assert_eq!("P(5)".parse::<GraphSpec>().unwrap(), GraphSpec::Paley(5));
        assert_eq!("Empty(4)".parse::<GraphSpec>().unwrap(), GraphSpec::Empty(4));
    }

    #[test]
    fn parse_errors() {
        assert!(matches!("Q5".parse::<GraphSpec>(), Err(Error::Parse(_))));
        assert!(matches!("K5)".parse::<GraphSpec>(), Err(Error::Parse(_))));
    }

    #[test]
    fn documented_examples() {
        let c4 = g("C4");
        assert_eq!(is_switching_equivalent(&g("L(K2,2)"), &c4).unwrap().is_some(), true);
        assert_eq!(g("L(K2,2)").regular_degree(), Some(2));
        assert!(g("L(K2,2)").is_connected());
        assert_eq!(g("Paley(5)"), g("C5"));
        assert_eq!(g("hatK(2)"), g("P3"));
    }

    #[test]
    fn invalid_specs() {
        for s in ["Paley(8)", "Paley(7)", "hatK(1)", "McLaughlin", "C2", "K70"] {
            let r = s.parse::<GraphSpec>().unwrap().build();
            assert!(matches!(r, Err(Error::InvalidSpec(_))), "{s}");
        }
    }

    #[test]
    fn line_graph_of_tree_is_hatk() {
        for n in 2..7 {
            let lt = g(&format!("L(Tn({n}))"));
            let hk = g(&format!("hatK({n})"));
            assert_eq!(lt.order(), hk.order());
            assert!(crate::graph::iso::isomorphism_fixing(&lt.cone(), n + 1, &hk.cone(), n + 1).is_some());
        }
    }

    #[test]
    fn union_and_cone_labelling() {
        let u = g("K2+K1");
        assert_eq!(u.edges(), vec![(0, 1)]);
        assert_eq!(g("cone(Kbar2)").edges(), vec![(0, 2), (1, 2)]);
    }
}
