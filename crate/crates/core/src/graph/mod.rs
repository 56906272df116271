//! Exact graph algorithms on small simple graphs: distances, girth, holes,
//! induced-copy census, isomorphism and automorphism search, and the
//! reference graphs used throughout the crate.

mod copies;
mod holes;
mod iso;
mod metrics;
pub mod reference;

pub use copies::{induced_copies, SubgraphCopy};
pub use holes::{holes, Hole};
pub use iso::{
    automorphism_group, automorphism_group_colored, isomorphism, isomorphism_colored,
    AutomorphismGroup, SearchOptions, DEFAULT_ELEMENT_CAP,
};
pub use metrics::{
    bfs_distances, diameter, distance_distribution, eccentricity, girth,
    lex_smallest_geodesics, DistanceDistribution,
};

use std::fmt;

use crate::error::{Error, Result};

/// Simple undirected graph on `0..n` with sorted adjacency lists.
#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub struct Graph {
    adj: Vec<Vec<usize>>,
    edges: usize,
}

impl Graph {
    pub fn empty(n: usize) -> Self {
        Graph {
            adj: vec![Vec::new(); n],
            edges: 0,
        }
    }

    /// Builds a simple graph; loops and repeated edges are rejected.
    pub fn from_edges<I>(n: usize, edges: I) -> Result<Self>
    where
        I: IntoIterator<Item = (usize, usize)>,
    {
        let mut adj = vec![Vec::new(); n];
        for (u, v) in edges {
            for x in [u, v] {
                if x >= n {
                    return Err(Error::VertexOutOfRange { vertex: x, order: n });
                }
            }
            if u == v {
                return Err(Error::Unsupported(format!("self-loop at vertex {u}")));
            }
            adj[u].push(v);
            adj[v].push(u);
        }
        let mut count = 0;
        for (u, list) in adj.iter_mut().enumerate() {
            list.sort_unstable();
            if let Some(w) = list.windows(2).find(|w| w[0] == w[1]) {
                let v = w[0];
                let mult = list.iter().filter(|&&x| x == v).count();
                return Err(Error::Multigraph(u.min(v), u.max(v), mult));
            }
            count += list.len();
        }
        Ok(Graph {
            adj,
            edges: count / 2,
        })
    }

    /// Builds the graph whose edges are the pairs `u < v` with `adjacent(u, v)`.
    pub fn from_fn(n: usize, mut adjacent: impl FnMut(usize, usize) -> bool) -> Self {
        let mut adj = vec![Vec::new(); n];
        let mut edges = 0;
        for u in 0..n {
            for v in u + 1..n {
                if adjacent(u, v) {
                    adj[u].push(v);
                    adj[v].push(u);
                    edges += 1;
                }
            }
        }
        for list in &mut adj {
            list.sort_unstable();
        }
        Graph { adj, edges }
    }

    pub fn order(&self) -> usize {
        self.adj.len()
    }

    pub fn size(&self) -> usize {
        self.edges
    }

    pub fn neighbors(&self, v: usize) -> &[usize] {
        &self.adj[v]
    }

    pub fn degree(&self, v: usize) -> usize {
        self.adj[v].len()
    }

    pub fn has_edge(&self, u: usize, v: usize) -> bool {
        self.adj
            .get(u)
            .is_some_and(|list| list.binary_search(&v).is_ok())
    }

    /// Edges `(u, v)` with `u < v` in lexicographic order.
    pub fn edges(&self) -> impl Iterator<Item = (usize, usize)> + '_ {
        self.adj.iter().enumerate().flat_map(|(u, list)| {
            list.iter()
                .copied()
                .filter(move |&v| v > u)
                .map(move |v| (u, v))
        })
    }

    pub fn degree_sequence(&self) -> Vec<usize> {
        let mut d: Vec<usize> = self.adj.iter().map(Vec::len).collect();
        d.sort_unstable_by(|a, b| b.cmp(a));
        d
    }

    /// The common degree, if the graph is regular.
    pub fn regular_degree(&self) -> Option<usize> {
        let first = self.adj.first().map_or(0, Vec::len);
        self.adj.iter().all(|l| l.len() == first).then_some(first)
    }

    pub fn is_connected(&self) -> bool {
        self.order() == 0 || bfs_distances(self, 0).iter().all(Option::is_some)
    }

    /// Two-colouring of the vertices, if one exists.
    pub fn bipartition(&self) -> Option<Vec<bool>> {
        let n = self.order();
        let mut side: Vec<Option<bool>> = vec![None; n];
        for s in 0..n {
            if side[s].is_some() {
                continue;
            }
            side[s] = Some(false);
            let mut stack = vec![s];
            while let Some(u) = stack.pop() {
                let su = side[u].unwrap();
                for &v in &self.adj[u] {
                    match side[v] {
                        None => {
                            side[v] = Some(!su);
                            stack.push(v);
                        }
                        Some(sv) if sv == su => return None,
                        _ => {}
                    }
                }
            }
        }
        Some(side.into_iter().map(Option::unwrap).collect())
    }

    /// Subgraph induced on `vertices`; vertex `i` of the result is `vertices[i]`.
    pub fn induced_subgraph(&self, vertices: &[usize]) -> Graph {
        Graph::from_fn(vertices.len(), |i, j| self.has_edge(vertices[i], vertices[j]))
    }

    /// Edge-induced subgraph on the given vertex list.
    pub fn edge_subgraph(vertices: &[usize], edges: &[(usize, usize)]) -> Result<Graph> {
        let pos = |x: usize| {
            vertices
                .binary_search(&x)
                .map_err(|_| Error::VertexOutOfRange {
                    vertex: x,
                    order: vertices.len(),
                })
        };
        let mapped: Result<Vec<(usize, usize)>> =
            edges.iter().map(|&(u, v)| Ok((pos(u)?, pos(v)?))).collect();
        Graph::from_edges(vertices.len(), mapped?)
    }

    /// Whether `p` maps edges onto edges.
    pub fn is_automorphism(&self, p: &Permutation) -> bool {
        p.degree() == self.order()
            && self
                .edges()
                .all(|(u, v)| self.has_edge(p.apply(u), p.apply(v)))
    }

    /// Whether `map` (indexed by vertices of `self`) is an isomorphism onto `other`.
    pub fn is_isomorphism_to(&self, other: &Graph, map: &[usize]) -> bool {
        if self.order() != other.order() || self.size() != other.size() || map.len() != self.order() {
            return false;
        }
        let mut hit = vec![false; other.order()];
        for &x in map {
            if x >= other.order() || std::mem::replace(&mut hit[x], true) {
                return false;
            }
        }
        self.edges().all(|(u, v)| other.has_edge(map[u], map[v]))
    }
}

/// Undirected multigraph without loops, stored as a multiplicity matrix.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct MultiGraph {
    mult: Vec<Vec<usize>>,
}

impl MultiGraph {
    pub fn new(n: usize) -> Self {
        MultiGraph {
            mult: vec![vec![0; n]; n],
        }
    }

    pub fn add_edge(&mut self, u: usize, v: usize, times: usize) -> Result<()> {
        let n = self.order();
        for x in [u, v] {
            if x >= n {
                return Err(Error::VertexOutOfRange { vertex: x, order: n });
            }
        }
        if u == v {
            return Err(Error::Unsupported(format!("self-loop at vertex {u}")));
        }
        self.mult[u][v] += times;
        self.mult[v][u] += times;
        Ok(())
    }

    pub fn order(&self) -> usize {
        self.mult.len()
    }

    pub fn multiplicity(&self, u: usize, v: usize) -> usize {
        self.mult[u][v]
    }

    /// Number of edge-ends at `v`, counting multiplicity.
    pub fn edge_ends(&self, v: usize) -> usize {
        self.mult[v].iter().sum()
    }

    /// Total number of edges counted with multiplicity.
    pub fn size(&self) -> usize {
        (0..self.order()).map(|v| self.edge_ends(v)).sum::<usize>() / 2
    }

    /// The underlying simple graph; fails if any multiplicity exceeds one.
    pub fn to_simple(&self) -> Result<Graph> {
        let n = self.order();
        for u in 0..n {
            for v in u + 1..n {
                if self.mult[u][v] > 1 {
                    return Err(Error::Multigraph(u, v, self.mult[u][v]));
                }
            }
        }
        Ok(Graph::from_fn(n, |u, v| self.mult[u][v] == 1))
    }

    /// The simple graph with an edge wherever the multiplicity is positive.
    pub fn support(&self) -> Graph {
        Graph::from_fn(self.order(), |u, v| self.mult[u][v] > 0)
    }
}

/// A bijection of `0..n`. Composition follows function notation:
/// `a.compose(&b)` maps `x` to `a(b(x))`.
#[derive(Clone, Debug, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub struct Permutation {
    images: Vec<usize>,
}

impl Permutation {
    pub fn identity(n: usize) -> Self {
        Permutation {
            images: (0..n).collect(),
        }
    }

    pub fn from_images(images: Vec<usize>) -> Result<Self> {
        let n = images.len();
        let mut seen = vec![false; n];
        for &x in &images {
            if x >= n || std::mem::replace(&mut seen[x], true) {
                return Err(Error::Unsupported(format!("not a permutation: {images:?}")));
            }
        }
        Ok(Permutation { images })
    }

    pub fn degree(&self) -> usize {
        self.images.len()
    }

    pub fn apply(&self, x: usize) -> usize {
        self.images[x]
    }

    pub fn images(&self) -> &[usize] {
        &self.images
    }

    pub fn compose(&self, other: &Permutation) -> Permutation {
        Permutation {
            images: other.images.iter().map(|&x| self.images[x]).collect(),
        }
    }

    pub fn inverse(&self) -> Permutation {
        let mut inv = vec![0; self.images.len()];
        for (x, &y) in self.images.iter().enumerate() {
            inv[y] = x;
        }
        Permutation { images: inv }
    }

    pub fn is_identity(&self) -> bool {
        self.images.iter().enumerate().all(|(i, &x)| i == x)
    }

    /// Non-trivial cycles, each starting at its smallest element.
    pub fn cycles(&self) -> Vec<Vec<usize>> {
        let mut seen = vec![false; self.degree()];
        let mut out = Vec::new();
        for s in 0..self.degree() {
            if seen[s] {
                continue;
            }
            let mut cycle = vec![s];
            seen[s] = true;
            let mut x = self.images[s];
            while x != s {
                seen[x] = true;
                cycle.push(x);
                x = self.images[x];
            }
            if cycle.len() > 1 {
                out.push(cycle);
            }
        }
        out
    }

    fn cycle_lengths(&self) -> Vec<usize> {
        let mut seen = vec![false; self.degree()];
        let mut out = Vec::new();
        for s in 0..self.degree() {
            if seen[s] {
                continue;
            }
            let mut len = 0;
            let mut x = s;
            loop {
                seen[x] = true;
                len += 1;
                x = self.images[x];
                if x == s {
                    break;
                }
            }
            out.push(len);
        }
        out
    }

    pub fn order(&self) -> usize {
        fn gcd(a: usize, b: usize) -> usize {
            if b == 0 {
                a
            } else {
                gcd(b, a % b)
            }
        }
        self.cycle_lengths()
            .into_iter()
            .fold(1, |acc, l| acc / gcd(acc, l) * l)
    }

    /// All cycles (fixed points included) have the same length.
    pub fn is_semiregular(&self) -> bool {
        let lens = self.cycle_lengths();
        lens.windows(2).all(|w| w[0] == w[1])
    }

    pub fn fixed_points(&self) -> usize {
        self.images
            .iter()
            .enumerate()
            .filter(|(i, &x)| *i == x)
            .count()
    }
}

impl fmt::Display for Permutation {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let cycles = self.cycles();
        if cycles.is_empty() {
            return write!(f, "()");
        }
        for c in cycles {
            write!(f, "(")?;
            for (i, x) in c.iter().enumerate() {
                if i > 0 {
                    write!(f, " ")?;
                }
                write!(f, "{x}")?;
            }
            write!(f, ")")?;
        }
        Ok(())
    }
}

/// Closes a generating set under composition. Returns `None` once more than
/// `cap` elements have been produced.
pub fn close_group(n: usize, generators: &[Permutation], cap: usize) -> Option<Vec<Permutation>> {
    use std::collections::HashSet;
    let id = Permutation::identity(n);
    let mut seen: HashSet<Permutation> = HashSet::new();
    seen.insert(id.clone());
    let mut out = vec![id];
    let mut i = 0;
    while i < out.len() {
        for g in generators {
            let h = g.compose(&out[i]);
            if !seen.contains(&h) {
                if out.len() >= cap {
                    return None;
                }
                seen.insert(h.clone());
                out.push(h);
            }
        }
        i += 1;
    }
    out.sort();
    Some(out)
}

/// Orbit of `x` under the group generated by `generators`, sorted.
pub fn orbit(x: usize, generators: &[Permutation]) -> Vec<usize> {
    let n = generators.first().map_or(x + 1, Permutation::degree);
    let mut seen = vec![false; n];
    seen[x] = true;
    let mut stack = vec![x];
    let mut out = vec![x];
    while let Some(y) = stack.pop() {
        for g in generators {
            let z = g.apply(y);
            if !seen[z] {
                seen[z] = true;
                out.push(z);
                stack.push(z);
            }
        }
    }
    out.sort_unstable();
    out
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn rejects_loops_and_multi_edges() {
        assert!(Graph::from_edges(3, [(0, 0)]).is_err());
        assert!(matches!(
            Graph::from_edges(3, [(0, 1), (1, 0)]),
            Err(Error::Multigraph(0, 1, 2))
        ));
        assert!(Graph::from_edges(2, [(0, 2)]).is_err());
    }

    #[test]
    fn multigraph_to_simple() {
        let mut m = MultiGraph::new(3);
        m.add_edge(0, 1, 1).unwrap();
        assert_eq!(m.to_simple().unwrap().size(), 1);
        m.add_edge(1, 2, 2).unwrap();
        assert!(matches!(m.to_simple(), Err(Error::Multigraph(1, 2, 2))));
        assert_eq!(m.size(), 3);
        assert_eq!(m.edge_ends(1), 3);
    }

    #[test]
    fn permutation_algebra() {
        let a = Permutation::from_images(vec![1, 2, 0, 3]).unwrap();
        let b = Permutation::from_images(vec![0, 1, 3, 2]).unwrap();
        assert_eq!(a.compose(&b).apply(2), a.apply(b.apply(2)));
        assert!(a.compose(&a.inverse()).is_identity());
        assert_eq!(a.order(), 3);
        assert_eq!(a.compose(&b).order(), 4);
        assert_eq!(a.to_string(), "(0 1 2)");
        assert!(!a.is_semiregular());
        assert!(Permutation::from_images(vec![0, 0]).is_err());
        let group = close_group(4, &[a, b], 100).unwrap();
        assert_eq!(group.len(), 24);
    }

    #[test]
    fn bipartition_of_even_and_odd_cycles() {
        assert!(reference::cycle(6).bipartition().is_some());
        assert!(reference::cycle(5).bipartition().is_none());
    }
}
