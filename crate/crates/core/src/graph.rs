//! Simple undirected graphs.
//!
//! A [`Graph`] is immutable once built; generators and [`Graph::add_isolated`]
//! return fresh values. Vertices are labelled `0..n`.

use std::collections::VecDeque;
use std::fmt::Write as _;
use std::path::Path;

use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;

use crate::{Error, Result};

/// Simple undirected graph stored as a dense symmetric boolean matrix.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Graph {
    n: usize,
    adj: Vec<bool>,
    edge_count: usize,
}

/// Degree sequence with its extremes.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct DegreeProfile {
    pub degrees: Vec<u32>,
    pub max_degree: u32,
    pub min_degree: u32,
}

impl Graph {
    /// The graph on `n` vertices with no edges.
    pub fn empty(n: usize) -> Self {
        Graph {
            n,
            adj: vec![false; n * n],
            edge_count: 0,
        }
    }

    /// Builds a graph from undirected edges. Duplicates (in either
    /// orientation) collapse to a single edge.
    pub fn from_edge_list(n: usize, edges: &[(usize, usize)]) -> Result<Self> {
        let mut g = Graph::empty(n);
        for &(u, v) in edges {
            if u >= n || v >= n {
                return Err(Error::input(format!(
                    "edge ({u}, {v}) has an endpoint outside 0..{n}"
                )));
            }
            if u == v {
                return Err(Error::input(format!("self-loop at vertex {u}")));
            }
            g.insert(u, v);
        }
        Ok(g)
    }

    fn insert(&mut self, u: usize, v: usize) {
        debug_assert!(u != v && u < self.n && v < self.n);
        if !self.adj[u * self.n + v] {
            self.adj[u * self.n + v] = true;
            self.adj[v * self.n + u] = true;
            self.edge_count += 1;
        }
    }

    pub fn n(&self) -> usize {
        self.n
    }

    pub fn edge_count(&self) -> usize {
        self.edge_count
    }

    pub fn has_edge(&self, u: usize, v: usize) -> bool {
        u < self.n && v < self.n && self.adj[u * self.n + v]
    }

    pub fn neighbors(&self, u: usize) -> impl Iterator<Item = usize> + '_ {
        let row = &self.adj[u * self.n..(u + 1) * self.n];
        row.iter().enumerate().filter(|(_, &b)| b).map(|(v, _)| v)
    }

    pub fn degree(&self, u: usize) -> usize {
        self.adj[u * self.n..(u + 1) * self.n]
            .iter()
            .filter(|&&b| b)
            .count()
    }

    /// Edges as `(u, v)` pairs with `u < v`, in lexicographic order.
    pub fn edges(&self) -> impl Iterator<Item = (usize, usize)> + '_ {
        (0..self.n).flat_map(move |u| {
            (u + 1..self.n)
                .filter(move |&v| self.adj[u * self.n + v])
                .map(move |v| (u, v))
        })
    }

    /// A copy of `self` with the edge `uv` added.
    pub fn with_edge(&self, u: usize, v: usize) -> Result<Self> {
        let mut g = self.clone();
        if u >= g.n || v >= g.n || u == v {
            return Err(Error::input(format!(
                "cannot add edge ({u}, {v}) to a graph on {} vertices",
                g.n
            )));
        }
        g.insert(u, v);
        Ok(g)
    }

    pub fn degree_profile(&self) -> Result<DegreeProfile> {
        if self.n == 0 {
            return Err(Error::input(
                "degree profile of the empty graph is undefined",
            ));
        }
        let degrees: Vec<u32> = (0..self.n).map(|u| self.degree(u) as u32).collect();
        let max_degree = *degrees.iter().max().expect("n >= 1");
        let min_degree = *degrees.iter().min().expect("n >= 1");
        Ok(DegreeProfile {
            degrees,
            max_degree,
            min_degree,
        })
    }

    /// `K_{1,n-1}`: vertex 0 joined to every other vertex.
    pub fn star(n: usize) -> Result<Self> {
        if n < 2 {
            return Err(Error::input(format!("star needs n >= 2, got {n}")));
        }
        let mut g = Graph::empty(n);
        for v in 1..n {
            g.insert(0, v);
        }
        Ok(g)
    }

    pub fn complete(n: usize) -> Result<Self> {
        if n < 1 {
            return Err(Error::input("complete graph needs n >= 1"));
        }
        let mut g = Graph::empty(n);
        for u in 0..n {
            for v in u + 1..n {
                g.insert(u, v);
            }
        }
        Ok(g)
    }

    pub fn cycle(n: usize) -> Result<Self> {
        if n < 3 {
            return Err(Error::input(format!("cycle needs n >= 3, got {n}")));
        }
        let mut g = Graph::empty(n);
        for u in 0..n {
            g.insert(u, (u + 1) % n);
        }
        Ok(g)
    }

    /// Path `P_n` on `n >= 1` vertices.
    pub fn path(n: usize) -> Result<Self> {
        if n < 1 {
            return Err(Error::input("path needs n >= 1"));
        }
        let mut g = Graph::empty(n);
        for u in 1..n {
            g.insert(u - 1, u);
        }
        Ok(g)
    }

    /// `K_{a,b}` with parts `0..a` and `a..a+b`.
    pub fn complete_bipartite(a: usize, b: usize) -> Result<Self> {
        if a + b < 1 {
            return Err(Error::input("complete bipartite graph needs a + b >= 1"));
        }
        let mut g = Graph::empty(a + b);
        for u in 0..a {
            for v in a..a + b {
                g.insert(u, v);
            }
        }
        Ok(g)
    }

    /// Circulant graph: `u ~ u ± k (mod n)` for each offset `k`.
    /// Offsets must lie in `[1, n/2]`.
    pub fn circulant(n: usize, offsets: &[usize]) -> Result<Self> {
        if offsets.is_empty() {
            return Err(Error::input("circulant needs at least one offset"));
        }
        if let Some(&k) = offsets.iter().find(|&&k| k < 1 || k > n / 2) {
            return Err(Error::input(format!(
                "circulant offset {k} outside [1, {}]",
                n / 2
            )));
        }
        let mut g = Graph::empty(n);
        for u in 0..n {
            for &k in offsets {
                g.insert(u, (u + k) % n);
            }
        }
        Ok(g)
    }

    /// Erdős–Rényi `G(n, p)`.
    ///
    /// Pairs `(i, j)`, `i < j`, are visited in lexicographic order and each
    /// consumes exactly one uniform `f64` in `[0, 1)` from a `ChaCha8Rng`
    /// seeded with `seed_from_u64(seed)`; the pair is an edge when the draw is
    /// below `p`.
    pub fn random(n: usize, p: f64, seed: u64) -> Result<Self> {
        if !(0.0..=1.0).contains(&p) {
            return Err(Error::input(format!("edge probability {p} outside [0, 1]")));
        }
        let mut rng = ChaCha8Rng::seed_from_u64(seed);
        let mut g = Graph::empty(n);
        for u in 0..n {
            for v in u + 1..n {
                let draw: f64 = rng.random();
                if draw < p {
                    g.insert(u, v);
                }
            }
        }
        Ok(g)
    }

    /// Appends `k` isolated vertices labelled `n..n+k`.
    pub fn add_isolated(&self, k: usize) -> Self {
        let mut g = Graph::empty(self.n + k);
        for (u, v) in self.edges() {
            g.insert(u, v);
        }
        g
    }

    /// Breadth-first reachability from vertex 0.
    pub fn is_connected(&self) -> Result<bool> {
        if self.n == 0 {
            return Err(Error::input("connectivity of the empty graph is undefined"));
        }
        let mut seen = vec![false; self.n];
        let mut queue = VecDeque::from([0]);
        seen[0] = true;
        let mut reached = 1;
        while let Some(u) = queue.pop_front() {
            for v in self.neighbors(u) {
                if !seen[v] {
                    seen[v] = true;
                    reached += 1;
                    queue.push_back(v);
                }
            }
        }
        Ok(reached == self.n)
    }

    /// `K_{1,n-1}` up to isomorphism (`K2` counts as `K_{1,1}`).
    pub fn is_star(&self) -> bool {
        self.n >= 2
            && self.edge_count == self.n - 1
            && (0..self.n).any(|u| self.degree(u) == self.n - 1)
            && self.is_connected().unwrap_or(false)
    }

    /// Reads the edge-list format: a `n m` line followed by `m` lines `u v`.
    /// Blank lines and `#` comments are ignored.
    pub fn parse_edge_list(text: &str) -> Result<Self> {
        let mut lines = text
            .lines()
            .enumerate()
            .map(|(i, l)| (i + 1, l.split('#').next().unwrap_or("").trim()))
            .filter(|(_, l)| !l.is_empty());

        let parse_pair = |line: usize, l: &str| -> Result<(usize, usize)> {
            let fields: Vec<&str> = l.split_whitespace().collect();
            let [a, b] = fields[..] else {
                return Err(Error::EdgeList {
                    line,
                    message: format!("expected two integers, got {:?}", l),
                });
            };
            let num = |s: &str| {
                s.parse::<usize>().map_err(|e| Error::EdgeList {
                    line,
                    message: format!("{s:?}: {e}"),
                })
            };
            Ok((num(a)?, num(b)?))
        };

        let (line, header) = lines.next().ok_or(Error::EdgeList {
            line: 0,
            message: "missing \"n m\" header".into(),
        })?;
        let (n, m) = parse_pair(line, header)?;
        let mut edges = Vec::with_capacity(m);
        for (line, l) in lines.by_ref().take(m) {
            edges.push(parse_pair(line, l)?);
        }
        if edges.len() != m {
            return Err(Error::EdgeList {
                line: text.lines().count(),
                message: format!("header promises {m} edges, found {}", edges.len()),
            });
        }
        if let Some((line, _)) = lines.next() {
            return Err(Error::EdgeList {
                line,
                message: format!("more than the {m} edges announced in the header"),
            });
        }
        Graph::from_edge_list(n, &edges).map_err(|e| Error::EdgeList {
            line,
            message: e.to_string(),
        })
    }

    pub fn read_edge_list(path: &Path) -> Result<Self> {
        let text = std::fs::read_to_string(path).map_err(|source| Error::Io {
            path: path.to_path_buf(),
            source,
        })?;
        Graph::parse_edge_list(&text)
    }

    pub fn to_edge_list(&self) -> String {
        let mut out = format!("{} {}\n", self.n, self.edge_count);
        for (u, v) in self.edges() {
            writeln!(out, "{u} {v}").expect("writing to a String");
        }
        out
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn assert_simple(g: &Graph) {
        for u in 0..g.n() {
            assert!(!g.has_edge(u, u));
            for v in 0..g.n() {
                assert_eq!(g.has_edge(u, v), g.has_edge(v, u));
            }
        }
        let p = match g.degree_profile() {
            Ok(p) => p,
            Err(_) => return,
        };
        let total: u32 = p.degrees.iter().sum();
        assert_eq!(total as usize, 2 * g.edge_count());
    }

    #[test]
    fn edge_list_construction() {
        let k2 = Graph::from_edge_list(2, &[(0, 1)]).unwrap();
        assert_eq!(k2.edge_count(), 1);
        assert!(k2.has_edge(1, 0));

        let dup = Graph::from_edge_list(3, &[(0, 1), (1, 0)]).unwrap();
        assert_eq!(dup.edge_count(), 1);

        let star = Graph::from_edge_list(4, &[(0, 1), (0, 2), (0, 3)]).unwrap();
        assert_eq!(star, Graph::star(4).unwrap());
        assert!(star.is_star());
    }

    #[test]
    fn edge_list_rejects_bad_endpoints() {
        assert!(matches!(
            Graph::from_edge_list(2, &[(0, 2)]),
            Err(Error::Input(_))
        ));
        assert!(matches!(
            Graph::from_edge_list(2, &[(1, 1)]),
            Err(Error::Input(_))
        ));
    }

    #[test]
    fn degree_profiles() {
        let star = Graph::star(4).unwrap();
        let p = star.degree_profile().unwrap();
        assert_eq!(p.degrees, vec![3, 1, 1, 1]);
        assert_eq!((p.max_degree, p.min_degree), (3, 1));

        let c5 = Graph::cycle(5).unwrap();
        let p = c5.degree_profile().unwrap();
        assert!(p.degrees.iter().all(|&d| d == 2));

        let p = star.add_isolated(1).degree_profile().unwrap();
        assert_eq!((p.max_degree, p.min_degree), (3, 0));

        assert!(Graph::empty(0).degree_profile().is_err());
    }

    #[test]
    fn generators() {
        for n in [2, 4, 5] {
            let s = Graph::star(n).unwrap();
            let p = s.degree_profile().unwrap();
            assert_eq!(p.max_degree as usize, n - 1);
            assert_eq!(p.min_degree, 1);
            assert!(s.is_star());
            assert_simple(&s);
        }
        assert!(Graph::star(1).is_err());

        let k4 = Graph::complete(4).unwrap();
        assert_eq!(k4.edge_count(), 6);
        assert!(k4.degree_profile().unwrap().degrees.iter().all(|&d| d == 3));

        let c5 = Graph::cycle(5).unwrap();
        assert_eq!(c5.edge_count(), 5);
        assert!(Graph::cycle(2).is_err());

        let circ = Graph::circulant(6, &[1, 3]).unwrap();
        let p = circ.degree_profile().unwrap();
        assert_eq!((p.max_degree, p.min_degree), (3, 3));
        assert!(Graph::circulant(6, &[4]).is_err());
        assert!(Graph::circulant(6, &[0]).is_err());
        assert!(Graph::circulant(6, &[]).is_err());

        for g in [
            &k4,
            &c5,
            &circ,
            &Graph::path(4).unwrap(),
            &Graph::complete_bipartite(2, 3).unwrap(),
        ] {
            assert_simple(g);
        }
    }

    #[test]
    fn random_graphs() {
        assert_eq!(Graph::random(10, 0.0, 7).unwrap().edge_count(), 0);
        assert_eq!(
            Graph::random(10, 1.0, 7).unwrap(),
            Graph::complete(10).unwrap()
        );
        assert_eq!(
            Graph::random(8, 0.5, 42).unwrap(),
            Graph::random(8, 0.5, 42).unwrap()
        );
        assert!(Graph::random(8, 1.5, 0).is_err());
        assert!(Graph::random(8, -0.1, 0).is_err());
        assert_simple(&Graph::random(12, 0.5, 3).unwrap());
    }

    #[test]
    fn isolated_vertices() {
        let star = Graph::star(4).unwrap();
        let g = star.add_isolated(1);
        assert_eq!(g.n(), 5);
        assert_eq!(g.edge_count(), 3);
        assert_eq!(star.add_isolated(0), star);
        assert_eq!(Graph::empty(0).add_isolated(3), Graph::empty(3));
        assert!(!g.is_connected().unwrap());
        assert!(!g.is_star());
    }

    #[test]
    fn connectivity_and_star_predicate() {
        assert!(Graph::star(4).unwrap().is_connected().unwrap());
        assert!(Graph::empty(1).is_connected().unwrap());
        assert!(Graph::empty(0).is_connected().is_err());
        assert!(!Graph::cycle(4).unwrap().is_star());
        assert!(Graph::star(2).unwrap().is_star());
        assert!(!Graph::empty(1).is_star());
        // n - 1 edges and a vertex of degree n - 1 force a star; a triangle
        // plus a pendant has the edge count but no universal vertex
        let paw = Graph::from_edge_list(4, &[(0, 1), (1, 2), (0, 2), (2, 3)]).unwrap();
        assert!(!paw.is_star());
    }

    #[test]
    fn edge_list_format() {
        let text = "# a star\n4 3\n0 1\n0 2 # spoke\n\n0 3\n";
        let g = Graph::parse_edge_list(text).unwrap();
        assert_eq!(g, Graph::star(4).unwrap());
        assert_eq!(Graph::parse_edge_list(&g.to_edge_list()).unwrap(), g);

        assert!(matches!(
            Graph::parse_edge_list("3 2\n0 1\n"),
            Err(Error::EdgeList { .. })
        ));
        assert!(matches!(
            Graph::parse_edge_list("3 1\n0 1\n1 2\n"),
            Err(Error::EdgeList { line: 3, .. })
        ));
        assert!(matches!(
            Graph::parse_edge_list("3 1\n0 x\n"),
            Err(Error::EdgeList { line: 2, .. })
        ));
        assert!(matches!(
            Graph::parse_edge_list("3 1\n0 3\n"),
            Err(Error::EdgeList { .. })
        ));
        assert!(Graph::parse_edge_list("").is_err());
    }

    #[test]
    fn with_edge_is_persistent() {
        let g = Graph::empty(3);
        let h = g.with_edge(0, 2).unwrap();
        assert_eq!(g.edge_count(), 0);
        assert!(h.has_edge(2, 0));
        assert!(g.with_edge(1, 1).is_err());
    }
}
