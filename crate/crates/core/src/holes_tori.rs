//! The 84 six-holes of G spanned by a Fano line, their labels, the toroidal
//! subgraphs `[w]_d` and `[xyz]`, their induced closures, and the charts of
//! octahedral triangles.

use std::collections::{BTreeMap, BTreeSet};
use std::fmt;

use serde::Serialize;

use crate::census::Census;
use crate::construct::{ColoredGraph, WeakColor};
use crate::error::{ensure, Error, Result};
use crate::fano::{Line, OrderedLine, Point, Position};
use crate::graph::{holes, isomorphism, reference, Graph, Hole, SearchOptions};

/// A label `xyz_d^w`: the hole's weak colours use the points of line `xyz`
/// at the two positions other than `d`, and `w` is the centre of its
/// flanking triangles.
#[derive(Clone, Copy, Debug, PartialEq, Eq, PartialOrd, Ord, Hash, Serialize)]
pub struct SixHoleLabel {
    pub line: Line,
    pub position: Position,
    pub center: Point,
}

impl fmt::Display for SixHoleLabel {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{}_{}^{}", self.line, self.position, self.center)
    }
}

/// Centre of an octahedral triangle: the unique point `p` and position `i`
/// with `p` in the `i`-th pair of all three vertices.
pub fn triangle_center(g: &ColoredGraph, t: [usize; 3]) -> Result<(Point, Position)> {
    let mut found = Vec::new();
    for i in Position::ALL {
        for p in Point::all() {
            if t.iter().all(|&v| g.vertex(v).pair(i).contains(p)) {
                found.push((p, i));
            }
        }
    }
    match found.as_slice() {
        [c] => Ok(*c),
        _ => Err(Error::verification(
            "triangle_center",
            format!("{:?} has {} candidate centres", t.map(|v| g.name(v)), found.len()),
        )),
    }
}

/// Per-triangle data for drawing an octahedral triangle.
#[derive(Clone, Debug, Serialize)]
pub struct TriangleChart {
    pub triangle: [usize; 3],
    pub center: (Point, Position),
    /// Edge `(u, v)` to the point of its weak colour.
    pub midpoints: Vec<((usize, usize), Point)>,
    /// Edge `(u, v)` to the line of its strong colour.
    pub external_lines: Vec<((usize, usize), Line)>,
}

pub fn triangle_chart(g: &ColoredGraph, t: [usize; 3]) -> Result<TriangleChart> {
    let center = triangle_center(g, t)?;
    let mut midpoints = Vec::new();
    let mut external_lines = Vec::new();
    for (i, j) in [(0, 1), (1, 2), (0, 2)] {
        let (u, v) = (t[i].min(t[j]), t[i].max(t[j]));
        midpoints.push(((u, v), g.weak(u, v)?.point));
        external_lines.push(((u, v), g.strong(u, v)?.line()));
    }
    Ok(TriangleChart {
        triangle: t,
        center,
        midpoints,
        external_lines,
    })
}

/// All octahedral triangles, sorted.
pub fn octahedral_triangles(g: &ColoredGraph, census: &Census) -> Vec<[usize; 3]> {
    let mut out: Vec<[usize; 3]> = census
        .octahedra
        .iter()
        .flat_map(|o| o.triangles(g.graph()))
        .collect();
    out.sort_unstable();
    out
}

/// A six-hole with the label it receives.
#[derive(Clone, Debug, Serialize)]
pub struct LabeledHole {
    pub label: SixHoleLabel,
    pub hole: Hole,
    /// Weak colours of the hole's edges in cycle order.
    pub weak_cycle: Vec<WeakColor>,
}

/// The six-holes whose six weak colours are distinct, use exactly the
/// points of one line and exactly two positions, with their labels.
#[derive(Clone, Debug)]
pub struct SixHoles {
    pub holes: Vec<LabeledHole>,
    pub total_six_holes: usize,
    by_label: BTreeMap<SixHoleLabel, usize>,
}

impl SixHoles {
    pub fn get(&self, label: SixHoleLabel) -> &LabeledHole {
        &self.holes[self.by_label[&label]]
    }

    pub fn len(&self) -> usize {
        self.holes.len()
    }

    pub fn is_empty(&self) -> bool {
        self.holes.is_empty()
    }
}

fn weak_cycle(g: &ColoredGraph, h: &Hole) -> Result<Vec<WeakColor>> {
    let c = h.vertices();
    (0..c.len())
        .map(|i| g.weak(c[i], c[(i + 1) % c.len()]))
        .collect()
}

/// Enumerates the six-holes of G, keeps those spanned by a line and labels
/// them; the labelling must be a bijection onto all `(line, d, w)` with
/// `w` off the line.
pub fn label_six_holes(g: &ColoredGraph, census: &Census) -> Result<SixHoles> {
    let all = holes(g.graph(), 6);
    let triangles = octahedral_triangles(g, census);
    let mut centers_of_edge: BTreeMap<(usize, usize), Vec<(Point, Position)>> = BTreeMap::new();
    for &t in &triangles {
        let c = triangle_center(g, t)?;
        for (i, j) in [(0, 1), (1, 2), (0, 2)] {
            centers_of_edge
                .entry((t[i].min(t[j]), t[i].max(t[j])))
                .or_default()
                .push(c);
        }
    }
    let mut out = Vec::new();
    for h in &all {
        let weak = weak_cycle(g, h)?;
        let distinct: BTreeSet<WeakColor> = weak.iter().copied().collect();
        let points: BTreeSet<Point> = weak.iter().map(|w| w.point).collect();
        let positions: BTreeSet<Position> = weak.iter().map(|w| w.position).collect();
        if distinct.len() != 6 || points.len() != 3 || positions.len() != 2 {
            continue;
        }
        let pts: Vec<Point> = points.into_iter().collect();
        let Ok(line) = Line::from_points(pts[0], pts[1], pts[2]) else {
            continue;
        };
        let position = Position::ALL
            .into_iter()
            .find(|p| !positions.contains(p))
            .expect("two of three positions used");
        let mut common: Option<BTreeSet<(Point, Position)>> = None;
        for e in h.edges() {
            let here: BTreeSet<(Point, Position)> = centers_of_edge
                .get(&e)
                .map(|v| v.iter().copied().collect())
                .unwrap_or_default();
            common = Some(match common {
                None => here,
                Some(c) => c.intersection(&here).copied().collect(),
            });
        }
        let common: Vec<(Point, Position)> = common.unwrap_or_default().into_iter().collect();
        ensure(common.len() == 1, "hole_center", || {
            format!("{h} has flanking centres {common:?}")
        })?;
        let (center, cpos) = common[0];
        ensure(cpos == position && !line.contains(center), "hole_center", || {
            format!("{h}: centre {center}_{cpos} against line {line} position {position}")
        })?;
        out.push(LabeledHole {
            label: SixHoleLabel {
                line,
                position,
                center,
            },
            hole: h.clone(),
            weak_cycle: weak,
        });
    }
    out.sort_by_key(|h| h.label);
    let by_label: BTreeMap<SixHoleLabel, usize> =
        out.iter().enumerate().map(|(i, h)| (h.label, i)).collect();
    ensure(by_label.len() == out.len() && out.len() == 84, "hole_labels", || {
        format!("{} holes with {} distinct labels", out.len(), by_label.len())
    })?;
    Ok(SixHoles {
        holes: out,
        total_six_holes: all.len(),
        by_label,
    })
}

fn sorted_edges(edges: impl IntoIterator<Item = (usize, usize)>) -> Vec<(usize, usize)> {
    let set: BTreeSet<(usize, usize)> = edges.into_iter().map(|(u, v)| (u.min(v), u.max(v))).collect();
    set.into_iter().collect()
}

fn vertices_of(edges: &[(usize, usize)]) -> Vec<usize> {
    let set: BTreeSet<usize> = edges.iter().flat_map(|&(u, v)| [u, v]).collect();
    set.into_iter().collect()
}

/// The subgraph `[w]_d`: four holes `ℓ_d^w` for `ℓ` avoiding `w`, and the
/// eight octahedral triangles centred at `w_d`.
#[derive(Clone, Debug, Serialize)]
pub struct Torus {
    pub center: Point,
    pub position: Position,
    pub holes: Vec<SixHoleLabel>,
    pub triangles: Vec<[usize; 3]>,
    pub vertices: Vec<usize>,
    pub edges: Vec<(usize, usize)>,
}

impl Torus {
    pub fn name(&self) -> String {
        format!("[{}]_{}", self.center, self.position)
    }
}

pub fn torus(
    g: &ColoredGraph,
    census: &Census,
    six: &SixHoles,
    w: Point,
    d: Position,
) -> Result<Torus> {
    let lines: Vec<Line> = Line::all().into_iter().filter(|l| !l.contains(w)).collect();
    let hole_labels: Vec<SixHoleLabel> = lines
        .iter()
        .map(|&line| SixHoleLabel {
            line,
            position: d,
            center: w,
        })
        .collect();
    let edges = sorted_edges(hole_labels.iter().flat_map(|&l| six.get(l).hole.edges()));
    let edge_set: BTreeSet<(usize, usize)> = edges.iter().copied().collect();
    let mut triangles = Vec::new();
    for t in octahedral_triangles(g, census) {
        if triangle_center(g, t)? == (w, d) {
            triangles.push(t);
        }
    }
    ensure(triangles.len() == 8, "torus_triangles", || {
        format!("[{w}]_{d} has {} triangles", triangles.len())
    })?;
    for t in &triangles {
        for (i, j) in [(0, 1), (1, 2), (0, 2)] {
            ensure(edge_set.contains(&(t[i], t[j])), "torus_triangles", || {
                format!("triangle {t:?} of [{w}]_{d} leaves the holes")
            })?;
        }
    }
    Ok(Torus {
        center: w,
        position: d,
        holes: hole_labels,
        triangles,
        vertices: vertices_of(&edges),
        edges,
    })
}

pub fn all_tori(g: &ColoredGraph, census: &Census, six: &SixHoles) -> Result<Vec<Torus>> {
    let mut out = Vec::new();
    for w in Point::all() {
        for d in Position::ALL {
            out.push(torus(g, census, six, w, d)?);
        }
    }
    Ok(out)
}

/// An induced closure: the induced subgraph on a toroidal subgraph's
/// vertices, split into the subgraph itself and attached tetrahedra.
#[derive(Clone, Debug, Serialize)]
pub struct Closure {
    pub name: String,
    pub induced_edges: usize,
    pub base_edges: usize,
    /// Attached tetrahedra.
    pub tetrahedra: Vec<OrderedLine>,
    /// Edges of each attached tetrahedron shared with the base.
    pub shared_with_base: Vec<usize>,
    /// Whether the shared edges of each tetrahedron form a 4-cycle.
    pub shares_four_cycles: bool,
    pub decomposes: bool,
}

fn closure(
    g: &ColoredGraph,
    census: &Census,
    name: String,
    vertices: &[usize],
    base: &[(usize, usize)],
    tetrahedra: Vec<OrderedLine>,
    disjoint: bool,
) -> Closure {
    let induced = sorted_edges(
        g.graph()
            .edges()
            .filter(|&(u, v)| vertices.binary_search(&u).is_ok() && vertices.binary_search(&v).is_ok()),
    );
    let base_set: BTreeSet<(usize, usize)> = base.iter().copied().collect();
    let mut union = base_set.clone();
    let mut shared_with_base = Vec::new();
    let mut shares_four_cycles = true;
    for &t in &tetrahedra {
        let tet = census.tetrahedron(t);
        let shared: Vec<(usize, usize)> = tet.edges().into_iter().filter(|e| base_set.contains(e)).collect();
        shared_with_base.push(shared.len());
        let sub = Graph::edge_subgraph(&vertices_of(&shared), &shared);
        shares_four_cycles &= sub.is_ok_and(|s| {
            s.order() == 4 && s.regular_degree() == Some(2) && s.is_connected()
        });
        union.extend(tet.edges());
    }
    let induced_set: BTreeSet<(usize, usize)> = induced.iter().copied().collect();
    let counted = base.len()
        + tetrahedra.len() * 6
        - shared_with_base.iter().sum::<usize>();
    let decomposes = union == induced_set
        && (!disjoint || shared_with_base.iter().all(|&s| s == 0))
        && counted == induced.len();
    Closure {
        name,
        induced_edges: induced.len(),
        base_edges: base.len(),
        tetrahedra,
        shared_with_base,
        shares_four_cycles: shares_four_cycles && !disjoint,
        decomposes,
    }
}

/// `[[w]]_d`: `[w]_d` plus the six tetrahedra `⟨x_a x_b x_c⟩` with `x_d = w`,
/// each sharing a 4-cycle with `[w]_d`.
pub fn torus_closure(g: &ColoredGraph, census: &Census, t: &Torus) -> Closure {
    let tets: Vec<OrderedLine> = OrderedLine::all()
        .iter()
        .copied()
        .filter(|o| o.entry(t.position) == t.center)
        .collect();
    closure(g, census, format!("[{}]", t.name()), &t.vertices, &t.edges, tets, false)
}

/// The subgraph `[xyz]`: the twelve holes `xyz_d^w`.
#[derive(Clone, Debug, Serialize)]
pub struct Star {
    pub line: Line,
    pub holes: Vec<SixHoleLabel>,
    pub vertices: Vec<usize>,
    pub edges: Vec<(usize, usize)>,
    /// Vertex map from the star Cayley graph on S4 (in
    /// [`reference::st4_permutations`] order).
    pub st4_isomorphism: Vec<usize>,
}

impl Star {
    pub fn name(&self) -> String {
        format!("[{}]", self.line)
    }
}

pub fn star(six: &SixHoles, line: Line) -> Result<Star> {
    let labels: Vec<SixHoleLabel> = Position::ALL
        .into_iter()
        .flat_map(|position| {
            Point::all()
                .filter(move |&w| !line.contains(w))
                .map(move |center| SixHoleLabel {
                    line,
                    position,
                    center,
                })
        })
        .collect();
    let edges = sorted_edges(labels.iter().flat_map(|&l| six.get(l).hole.edges()));
    let vertices = vertices_of(&edges);
    let local: Vec<(usize, usize)> = edges
        .iter()
        .map(|&(u, v)| {
            (
                vertices.binary_search(&u).unwrap(),
                vertices.binary_search(&v).unwrap(),
            )
        })
        .collect();
    let sub = Graph::from_edges(vertices.len(), local)?;
    let map = isomorphism(&reference::st4(), &sub, &SearchOptions::default())?.ok_or_else(|| {
        Error::verification("star_st4", format!("[{line}] is not the star graph on S4"))
    })?;
    Ok(Star {
        line,
        holes: labels,
        st4_isomorphism: map.into_iter().map(|i| vertices[i]).collect(),
        vertices,
        edges,
    })
}

pub fn all_stars(six: &SixHoles) -> Result<Vec<Star>> {
    Line::all().into_iter().map(|l| star(six, l)).collect()
}

/// `[[xyz]]`: `[xyz]` together with the six tetrahedra on orderings of
/// `xyz`, edge-disjointly.
pub fn star_closure(g: &ColoredGraph, census: &Census, s: &Star) -> Closure {
    let tets: Vec<OrderedLine> = OrderedLine::all()
        .iter()
        .copied()
        .filter(|o| o.line() == s.line)
        .collect();
    closure(g, census, format!("[{}]", s.name()), &s.vertices, &s.edges, tets, true)
}

/// Whether each 2-face lies on exactly two of the octahedra, tori and stars.
#[derive(Clone, Debug, Serialize)]
pub struct FacePairing {
    pub solids: usize,
    pub triangle_faces: usize,
    pub hexagon_faces: usize,
    /// Faces lying on a number of solids other than two.
    pub unpaired: Vec<String>,
}

impl FacePairing {
    pub fn passes(&self) -> bool {
        self.unpaired.is_empty()
    }
}

pub fn face_pairing_census(
    census: &Census,
    g: &ColoredGraph,
    six: &SixHoles,
    tori: &[Torus],
    stars: &[Star],
) -> FacePairing {
    let mut tri: BTreeMap<[usize; 3], usize> = BTreeMap::new();
    let mut hex: BTreeMap<SixHoleLabel, usize> = BTreeMap::new();
    for o in &census.octahedra {
        for t in o.triangles(g.graph()) {
            *tri.entry(t).or_default() += 1;
        }
    }
    for t in tori {
        for &x in &t.triangles {
            *tri.entry(x).or_default() += 1;
        }
        for &h in &t.holes {
            *hex.entry(h).or_default() += 1;
        }
    }
    for s in stars {
        for &h in &s.holes {
            *hex.entry(h).or_default() += 1;
        }
    }
    let mut unpaired: Vec<String> = tri
        .iter()
        .filter(|(_, &k)| k != 2)
        .map(|(t, k)| format!("{} on {k}", t.map(|v| g.name(v)).join(",")))
        .collect();
    unpaired.extend(six.holes.iter().filter_map(|h| {
        let k = hex.get(&h.label).copied().unwrap_or(0);
        (k != 2).then(|| format!("{} on {k}", h.label))
    }));
    FacePairing {
        solids: census.octahedra.len() + tori.len() + stars.len(),
        triangle_faces: tri.len(),
        hexagon_faces: hex.len(),
        unpaired,
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::construct::g;

    fn setup() -> (&'static ColoredGraph, Census, SixHoles) {
        let g = g();
        let census = Census::build(g).unwrap();
        let six = label_six_holes(g, &census).unwrap();
        (g, census, six)
    }

    fn label(s: &str) -> SixHoleLabel {
        let (line, rest) = s.split_once('_').unwrap();
        let (d, w) = rest.split_once('^').unwrap();
        SixHoleLabel {
            line: line.parse().unwrap(),
            position: Position::from_letter(d.chars().next().unwrap()).unwrap(),
            center: w.parse::<u8>().map(|x| Point::new(x).unwrap()).unwrap(),
        }
    }

    #[test]
    fn eighty_four_labeled_holes() {
        let (_, _, six) = setup();
        assert_eq!(six.len(), 84);
        assert!(six.holes.iter().all(|h| !h.label.line.contains(h.label.center)));
    }

    #[test]
    fn worked_example_label() {
        let (_, _, six) = setup();
        let h = six.get(label("123_c^5"));
        let want: Vec<String> = ["2_a", "3_b", "1_a", "2_b", "3_a", "1_b"].map(String::from).to_vec();
        let got: Vec<String> = h.weak_cycle.iter().map(|w| w.to_string()).collect();
        let matches = (0..6).any(|r| {
            let rot: Vec<&String> = (0..6).map(|i| &got[(i + r) % 6]).collect();
            let rev: Vec<&String> = (0..6).map(|i| &got[(r + 6 - i) % 6]).collect();
            rot.iter().zip(&want).all(|(a, b)| *a == b) || rev.iter().zip(&want).all(|(a, b)| *a == b)
        });
        assert!(matches, "{got:?}");
    }

    #[test]
    fn torus_five_c() {
        let (g, census, six) = setup();
        let t = torus(g, &census, &six, Point::new(5).unwrap(), Position::C).unwrap();
        let names: BTreeSet<String> = t.holes.iter().map(|h| h.to_string()).collect();
        let want: BTreeSet<String> =
            ["123_c^5", "246_c^5", "347_c^5", "167_c^5"].map(String::from).into();
        assert_eq!(names, want);
        assert_eq!(t.vertices.len(), 12);
        assert_eq!(t.edges.len(), 24);
        for extra in [["1^b", "2^a", "3^a"], ["1^e", "2^c", "3^c"]] {
            let mut tri = extra.map(|s| g.parse_vertex(s).unwrap());
            tri.sort_unstable();
            assert!(t.triangles.contains(&tri), "{extra:?}");
        }
        let c = torus_closure(g, &census, &t);
        assert_eq!(c.induced_edges, 36);
        assert!(c.decomposes && c.shares_four_cycles);
        let names: Vec<String> = c.tetrahedra.iter().map(|o| o.to_string()).collect();
        assert_eq!(names.len(), 6);
        assert!(c.tetrahedra.iter().all(|o| o.entry(Position::C) == Point::new(5).unwrap()));
    }

    #[test]
    fn tori_stars_and_pairing() {
        let (g, census, six) = setup();
        let tori = all_tori(g, &census, &six).unwrap();
        assert_eq!(tori.len(), 21);
        for t in &tori {
            let c = torus_closure(g, &census, t);
            assert!(c.decomposes && c.shares_four_cycles, "{}", t.name());
            assert_eq!((t.vertices.len(), t.edges.len(), c.induced_edges), (12, 24, 36));
        }
        let stars = all_stars(&six).unwrap();
        assert_eq!(stars.len(), 7);
        for s in &stars {
            assert_eq!((s.vertices.len(), s.edges.len()), (24, 36));
            let c = star_closure(g, &census, s);
            assert!(c.decomposes, "{}", s.name());
            assert_eq!(c.induced_edges, 72);
        }
        let fp = face_pairing_census(&census, g, &six, &tori, &stars);
        assert!(fp.passes(), "{:?}", fp.unpaired);
        assert_eq!(fp.solids, 49);
    }

    #[test]
    fn charts_of_246_a() {
        let (g, census, _) = setup();
        let o = census.octahedron("246".parse().unwrap(), Position::A);
        let mut centers = BTreeSet::new();
        for t in o.triangles(g.graph()) {
            let c = triangle_chart(g, t).unwrap();
            assert_eq!(c.midpoints.len(), 3);
            centers.insert(c.center);
        }
        let pts: BTreeSet<u8> = centers.iter().map(|c| c.0.value()).collect();
        let pos: BTreeSet<Position> = centers.iter().map(|c| c.1).collect();
        assert_eq!(pts, BTreeSet::from([1, 3, 5, 7]));
        assert_eq!(pos, BTreeSet::from([Position::B, Position::C]));
        assert_eq!(octahedral_triangles(g, &census).len(), 168);
    }
}
