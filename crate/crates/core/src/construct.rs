//! The graph G on the 42 ordered pencils with its strong and weak edge
//! colourings, the dual presentation on ordered lines, and the projection
//! onto the doubled K7.

use std::fmt;
use std::str::FromStr;
use std::sync::OnceLock;

use serde::{Serialize, Serializer};

use crate::error::{ensure, Error, Result};
use crate::fano::{phi_inv, Line, OrderedLine, OrderedPencil, Point, Position};
use crate::graph::{self, Graph, MultiGraph};

/// Number of vertices of G.
pub const ORDER: usize = 42;

/// Adjacency of ordered pencils: distinct base points, and at every position
/// the two pairs share exactly one point.
pub fn adjacent(u: OrderedPencil, v: OrderedPencil) -> bool {
    u.point() != v.point()
        && Position::ALL
            .iter()
            .all(|&j| u.pair(j).meet(v.pair(j)).is_some())
}

/// Edge colour `(q, j)`: a point and a position.
#[derive(Clone, Copy, Debug, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub struct WeakColor {
    pub point: Point,
    pub position: Position,
}

impl WeakColor {
    /// Compact form without the underscore, e.g. `3a`.
    pub fn compact(self) -> String {
        format!("{}{}", self.point, self.position)
    }
}

impl fmt::Display for WeakColor {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{}_{}", self.point, self.position)
    }
}

impl FromStr for WeakColor {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        let err = || Error::Parse {
            kind: "weak color",
            input: s.to_string(),
        };
        let chars: Vec<char> = s.trim().chars().filter(|&c| c != '_').collect();
        let [d, j] = chars[..] else {
            return Err(err());
        };
        let point = d
            .to_digit(10)
            .and_then(|x| Point::new(x as u8).ok())
            .ok_or_else(err)?;
        let position = Position::from_letter(j).ok_or_else(err)?;
        Ok(WeakColor { point, position })
    }
}

impl Serialize for WeakColor {
    fn serialize<S: Serializer>(&self, s: S) -> std::result::Result<S::Ok, S::Error> {
        s.collect_str(self)
    }
}

/// Positionwise intersection points of two adjacent ordered pencils.
pub fn strong_color(u: OrderedPencil, v: OrderedPencil) -> Result<OrderedLine> {
    if !adjacent(u, v) {
        return Err(Error::NotAdjacent(u.short_name(), v.short_name()));
    }
    let [a, b, c] = Position::ALL.map(|j| u.pair(j).meet(v.pair(j)).unwrap());
    OrderedLine::new(a, b, c)
}

/// The position `j` at which each base point lies in the other's pair, with
/// the third point of the line through both base points.
pub fn weak_color(u: OrderedPencil, v: OrderedPencil) -> Result<WeakColor> {
    if !adjacent(u, v) {
        return Err(Error::NotAdjacent(u.short_name(), v.short_name()));
    }
    let (p, q) = (u.point(), v.point());
    let hits: Vec<Position> = Position::ALL
        .into_iter()
        .filter(|&j| u.pair(j).contains(q) && v.pair(j).contains(p))
        .collect();
    let [j] = hits[..] else {
        return Err(Error::verification(
            "weak_color_unique",
            format!("{u} and {v} admit positions {hits:?}"),
        ));
    };
    let third = Line::through(p, q).and_then(|l| l.third(p, q)).unwrap();
    let meet = u.pair(j).meet(v.pair(j));
    ensure(meet == Some(third), "weak_color_point", || {
        format!("{u} and {v}: pair meet {meet:?} is not the third point {third}")
    })?;
    Ok(WeakColor {
        point: third,
        position: j,
    })
}

/// An edge of G with both colours.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize)]
pub struct ColoredEdge {
    pub u: usize,
    pub v: usize,
    pub strong: OrderedLine,
    pub weak: WeakColor,
}

/// G with per-edge strong and weak colours.
#[derive(Clone, Debug)]
pub struct ColoredGraph {
    graph: Graph,
    edges: Vec<ColoredEdge>,
}

/// Builds G from first principles.
pub fn build_g() -> Result<ColoredGraph> {
    let verts = OrderedPencil::all();
    let graph = Graph::from_fn(verts.len(), |i, j| adjacent(verts[i], verts[j]));
    let mut edges = Vec::with_capacity(graph.size());
    for (u, v) in graph.edges() {
        let (a, b) = (verts[u], verts[v]);
        let strong = strong_color(a, b)?;
        let weak = weak_color(a, b)?;
        ensure(strong_color(b, a)? == strong, "strong_color_symmetric", || {
            format!("{a} {b}")
        })?;
        ensure(weak_color(b, a)? == weak, "weak_color_symmetric", || {
            format!("{a} {b}")
        })?;
        edges.push(ColoredEdge { u, v, strong, weak });
    }
    Ok(ColoredGraph { graph, edges })
}

/// Shared instance of G, built on first use.
pub fn g() -> &'static ColoredGraph {
    static G: OnceLock<ColoredGraph> = OnceLock::new();
    G.get_or_init(|| build_g().expect("G is well defined"))
}

impl ColoredGraph {
    pub fn graph(&self) -> &Graph {
        &self.graph
    }

    pub fn order(&self) -> usize {
        self.graph.order()
    }

    pub fn vertex(&self, id: usize) -> OrderedPencil {
        OrderedPencil::all()[id]
    }

    pub fn name(&self, id: usize) -> String {
        self.vertex(id).short_name()
    }

    pub fn names(&self) -> Vec<String> {
        (0..self.order()).map(|i| self.name(i)).collect()
    }

    /// Vertex id from a short (`7^f`) or long (`(7,34,25,16)`) name.
    pub fn parse_vertex(&self, s: &str) -> Result<usize> {
        Ok(s.parse::<OrderedPencil>()?.id())
    }

    /// All edges sorted by `(u, v)` with `u < v`.
    pub fn edges(&self) -> &[ColoredEdge] {
        &self.edges
    }

    pub fn edge(&self, u: usize, v: usize) -> Result<&ColoredEdge> {
        let key = (u.min(v), u.max(v));
        self.edges
            .binary_search_by(|e| (e.u, e.v).cmp(&key))
            .map(|i| &self.edges[i])
            .map_err(|_| Error::NotAdjacent(self.name(u), self.name(v)))
    }

    pub fn strong(&self, u: usize, v: usize) -> Result<OrderedLine> {
        Ok(self.edge(u, v)?.strong)
    }

    pub fn weak(&self, u: usize, v: usize) -> Result<WeakColor> {
        Ok(self.edge(u, v)?.weak)
    }

    pub fn neighbors(&self, v: usize) -> &[usize] {
        self.graph.neighbors(v)
    }
}

/// Sends an ordered pencil to the ordered line of the duals of its lines.
pub fn pencil_to_ordered_line(v: OrderedPencil) -> OrderedLine {
    let [a, b, c] = v.lines().map(phi_inv);
    OrderedLine::new(a, b, c).expect("duals of concurrent lines are collinear")
}

/// Adjacency of the dual presentation: different underlying lines that
/// agree in exactly one position.
pub fn dual_adjacent(x: OrderedLine, y: OrderedLine) -> bool {
    x.line() != y.line() && x.agreements(y) == 1
}

/// The rule "agree in exactly one position" on its own, without the
/// different-line requirement.
pub fn agree_once(x: OrderedLine, y: OrderedLine) -> bool {
    x.agreements(y) == 1
}

/// The graph on ordered lines with a verified isomorphism from G.
#[derive(Clone, Debug)]
pub struct DualPresentation {
    pub graph: Graph,
    /// `map[v]` is the ordered-line index of vertex `v` of G.
    pub map: Vec<usize>,
    /// Edge count and regularity of the graph given by [`agree_once`].
    pub agree_once_size: usize,
    pub agree_once_degree: Option<usize>,
}

pub fn build_g_dual(g: &ColoredGraph) -> Result<DualPresentation> {
    let lines = OrderedLine::all();
    let graph = Graph::from_fn(lines.len(), |i, j| dual_adjacent(lines[i], lines[j]));
    let map: Vec<usize> = (0..g.order())
        .map(|v| pencil_to_ordered_line(g.vertex(v)).index())
        .collect();
    ensure(
        g.graph().is_isomorphism_to(&graph, &map),
        "dual_isomorphism",
        || "the duality map does not carry G onto the ordered-line graph".into(),
    )?;
    let loose = Graph::from_fn(lines.len(), |i, j| agree_once(lines[i], lines[j]));
    Ok(DualPresentation {
        graph,
        map,
        agree_once_size: loose.size(),
        agree_once_degree: loose.regular_degree(),
    })
}

/// Projection of G onto the base points, certified as a 6-fold cover of 2K7.
#[derive(Clone, Debug, Serialize)]
pub struct QuotientCertificate {
    #[serde(skip)]
    pub multigraph: MultiGraph,
    /// Vertex ids over each point `1..=7`.
    pub fibers: Vec<Vec<usize>>,
    pub is_two_k7: bool,
    pub fibers_have_size_six: bool,
    /// At every vertex the 12 edges hit the 12 edge-ends of its image once each.
    pub local_bijection: bool,
}

impl QuotientCertificate {
    pub fn passes(&self) -> bool {
        self.is_two_k7 && self.fibers_have_size_six && self.local_bijection
    }
}

/// The image of edge `uv` in the quotient: the pair of base points together
/// with the line of its strong colour, which avoids both base points.
fn quotient_edge(g: &ColoredGraph, e: &ColoredEdge) -> (usize, usize, Line) {
    let p = g.vertex(e.u).point().value() as usize - 1;
    let q = g.vertex(e.v).point().value() as usize - 1;
    (p.min(q), p.max(q), e.strong.line())
}

pub fn quotient_unordered(g: &ColoredGraph) -> Result<QuotientCertificate> {
    let mut bundles: Vec<(usize, usize, Line)> = g.edges().iter().map(|e| quotient_edge(g, e)).collect();
    bundles.sort();
    bundles.dedup();
    let mut multigraph = MultiGraph::new(7);
    for &(p, q, line) in &bundles {
        ensure(
            !line.contains(Point::new(p as u8 + 1)?) && !line.contains(Point::new(q as u8 + 1)?),
            "quotient_edge_label",
            || format!("line {line} meets {p}/{q}"),
        )?;
        multigraph.add_edge(p, q, 1)?;
    }
    let two = graph::reference::two_k7();
    let is_two_k7 = (0..7).all(|p| (0..7).all(|q| multigraph.multiplicity(p, q) == two.multiplicity(p, q)));
    let mut fibers = vec![Vec::new(); 7];
    for v in 0..g.order() {
        fibers[g.vertex(v).point().value() as usize - 1].push(v);
    }
    let fibers_have_size_six = fibers.iter().all(|f| f.len() == 6);
    let local_bijection = (0..g.order()).all(|v| {
        let mut ends: Vec<(usize, usize, Line)> = g
            .neighbors(v)
            .iter()
            .map(|&w| quotient_edge(g, g.edge(v, w).unwrap()))
            .collect();
        let p = g.vertex(v).point().value() as usize - 1;
        let expected: Vec<(usize, usize, Line)> = bundles
            .iter()
            .copied()
            .filter(|&(a, b, _)| a == p || b == p)
            .collect();
        ends.sort();
        ends == expected
    });
    Ok(QuotientCertificate {
        multigraph,
        fibers,
        is_two_k7,
        fibers_have_size_six,
        local_bijection,
    })
}

/// The lexicographically smallest geodesic from `1^a` to the first vertex
/// at maximum distance from it.
pub fn diameter_witness(g: &ColoredGraph) -> Result<Vec<usize>> {
    let paths = graph::lex_smallest_geodesics(g.graph(), 0, |v| v)?;
    paths.into_iter().next().ok_or(Error::Disconnected)
}

#[cfg(test)]
mod tests {
    use super::*;

    fn v(s: &str) -> OrderedPencil {
        s.parse().unwrap()
    }

    #[test]
    fn neighbours_of_first_vertex() {
        let g = g();
        let mut names: Vec<String> = g.neighbors(0).iter().map(|&w| g.name(w)).collect();
        names.sort();
        assert_eq!(
            names,
            ["2^a", "2^b", "3^a", "3^b", "4^c", "4^e", "5^c", "5^e", "6^d", "6^f", "7^d", "7^f"]
        );
    }

    #[test]
    fn colours_of_sample_edges() {
        assert_eq!(strong_color(v("1^a"), v("2^a")).unwrap().to_string(), "347");
        assert_eq!(weak_color(v("1^a"), v("2^a")).unwrap().to_string(), "3_a");
        assert_eq!(strong_color(v("7^f"), v("5^a")).unwrap().to_string(), "426");
        assert_eq!(weak_color(v("7^f"), v("5^a")).unwrap().compact(), "2b");
        assert!(strong_color(v("1^a"), v("1^b")).is_err());
    }

    #[test]
    fn weak_color_parsing() {
        let w: WeakColor = "3_a".parse().unwrap();
        assert_eq!(w, "3a".parse().unwrap());
        assert!("8a".parse::<WeakColor>().is_err());
        assert!("3".parse::<WeakColor>().is_err());
    }

    #[test]
    fn basic_counts() {
        let g = g();
        assert_eq!(g.graph().size(), 252);
        assert_eq!(g.graph().regular_degree(), Some(12));
    }

    #[test]
    fn dual_and_quotient() {
        let g = g();
        let d = build_g_dual(g).unwrap();
        assert_eq!(d.graph.size(), 252);
        assert_eq!(d.agree_once_degree, Some(15));
        assert!(quotient_unordered(g).unwrap().passes());
    }
}
