//! Named copies of K4 and K_{2,2,2} in G, the fastened pairing of edges,
//! the structure of vertex neighbourhoods, and ordered Pasch configurations.

use std::collections::BTreeSet;
use std::fmt;

use serde::Serialize;

use crate::construct::ColoredGraph;
use crate::error::{ensure, Error, Result};
use crate::fano::{Line, OrderedLine, OrderedPencil, Point, Position};
use crate::graph::{
    self, automorphism_group, holes, induced_copies, isomorphism, reference, Graph, Hole,
    Permutation, SearchOptions,
};
use crate::construct::WeakColor;

/// Labels `a0..c3` of the hemi-rhombicuboctahedron graph and the vertices
/// of the neighbourhood of `1^a` they are sent to.
pub const LAMBDA_TABLE: [(&str, &str); 12] = [
    ("a0", "5^c"),
    ("a1", "4^c"),
    ("a2", "5^e"),
    ("a3", "4^e"),
    ("b0", "6^d"),
    ("b1", "7^d"),
    ("b2", "7^f"),
    ("b3", "6^f"),
    ("c0", "2^b"),
    ("c1", "2^a"),
    ("c2", "3^b"),
    ("c3", "3^a"),
];

pub fn lambda_table() -> [OrderedPencil; 12] {
    LAMBDA_TABLE.map(|(_, v)| v.parse().expect("table names are valid"))
}

/// Three automorphisms of the hemi-rhombicuboctahedron graph in cycle
/// notation on its labels, with their images in S4 acting on `0..4`.
pub const LAMBDA_GENERATORS: [(&str, &str); 3] = [
    ("(a1 b2 c3)(b1 c2 a3)(c1 a2 b3)(a0 b0 c0)", "(1 2 3)"),
    ("(a0 a1)(a2 a3)(b0 b1)(b2 b3)(c0 c1)(c2 c3)", "(0 1)(2 3)"),
    ("(a0 a1 a2 a3)(c0 b1 c2 b3)(b0 c1 b2 c3)", "(0 1 2 3)"),
];

/// Parses cycle notation over the given labels into a permutation.
pub fn parse_cycles(s: &str, labels: &[String]) -> Result<Permutation> {
    let bad = || Error::Parse {
        kind: "cycle notation",
        input: s.to_string(),
    };
    let mut images: Vec<usize> = (0..labels.len()).collect();
    for chunk in s.split(')') {
        let chunk = chunk.trim();
        if chunk.is_empty() {
            continue;
        }
        let body = chunk.strip_prefix('(').ok_or_else(bad)?;
        let cycle: Vec<usize> = body
            .split_whitespace()
            .map(|t| labels.iter().position(|l| l == t).ok_or_else(bad))
            .collect::<Result<_>>()?;
        for (i, &x) in cycle.iter().enumerate() {
            images[x] = cycle[(i + 1) % cycle.len()];
        }
    }
    Permutation::from_images(images)
}

/// The copy of K4 named by an ordered line.
#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct Tetrahedron {
    pub name: OrderedLine,
    /// Sorted vertex ids.
    pub vertices: [usize; 4],
}

impl Tetrahedron {
    pub fn edges(&self) -> Vec<(usize, usize)> {
        pairs_of(&self.vertices)
    }

    pub fn label(&self) -> String {
        format!("⟨{}⟩", self.name)
    }
}

/// A 4-hole of an octahedron with the weak colour of its edges and the two
/// points shared by its opposite vertices.
#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct Square {
    pub cycle: Hole,
    pub weak: WeakColor,
    pub diagonal_points: [Point; 2],
}

/// The copy of K_{2,2,2} named by a line and a position.
#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct Octahedron {
    pub line: Line,
    pub position: Position,
    /// Sorted vertex ids.
    pub vertices: [usize; 6],
    pub squares: Vec<Square>,
}

impl Octahedron {
    pub fn edges(&self, g: &Graph) -> Vec<(usize, usize)> {
        pairs_of(&self.vertices)
            .into_iter()
            .filter(|&(u, v)| g.has_edge(u, v))
            .collect()
    }

    /// The 8 triangles, each as sorted vertex ids, sorted.
    pub fn triangles(&self, g: &Graph) -> Vec<[usize; 3]> {
        let v = &self.vertices;
        let mut out = Vec::with_capacity(8);
        for i in 0..6 {
            for j in i + 1..6 {
                for k in j + 1..6 {
                    if g.has_edge(v[i], v[j]) && g.has_edge(v[i], v[k]) && g.has_edge(v[j], v[k]) {
                        out.push([v[i], v[j], v[k]]);
                    }
                }
            }
        }
        out
    }

    pub fn label(&self) -> String {
        format!("[{}]_{}", self.line, self.position)
    }
}

impl fmt::Display for Tetrahedron {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(&self.label())
    }
}

impl fmt::Display for Octahedron {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(&self.label())
    }
}

fn pairs_of(v: &[usize]) -> Vec<(usize, usize)> {
    let mut out = Vec::new();
    for i in 0..v.len() {
        for j in i + 1..v.len() {
            out.push((v[i], v[j]));
        }
    }
    out
}

/// Both families of named copies, checked against the generic census.
#[derive(Clone, Debug)]
pub struct Census {
    pub tetrahedra: Vec<Tetrahedron>,
    pub octahedra: Vec<Octahedron>,
}

/// The four vertices `(p, ..)` with `x, y, z` in the pairs at positions
/// `a, b, c`.
pub fn tetrahedron_vertices(g: &ColoredGraph, name: OrderedLine) -> Vec<usize> {
    let [x, y, z] = name.entries();
    (0..g.order())
        .filter(|&v| {
            let p = g.vertex(v);
            p.pair(Position::A).contains(x) && p.pair(Position::B).contains(y) && p.pair(Position::C).contains(z)
        })
        .collect()
}

pub fn tetrahedra(g: &ColoredGraph) -> Result<Vec<Tetrahedron>> {
    let mut out = Vec::with_capacity(42);
    for &name in OrderedLine::all() {
        let vs = tetrahedron_vertices(g, name);
        let points: BTreeSet<Point> = vs.iter().map(|&v| g.vertex(v).point()).collect();
        ensure(
            vs.len() == 4 && points.len() == 4 && points.iter().all(|&p| !name.line().contains(p)),
            "tetrahedron_vertices",
            || format!("⟨{name}⟩ has vertices {vs:?}"),
        )?;
        for (u, v) in pairs_of(&vs) {
            let e = g.edge(u, v)?;
            ensure(e.strong == name, "tetrahedron_strong_color", || {
                format!("⟨{name}⟩ edge {}{} has strong colour {}", g.name(u), g.name(v), e.strong)
            })?;
        }
        out.push(Tetrahedron {
            name,
            vertices: [vs[0], vs[1], vs[2], vs[3]],
        });
    }
    let generic: BTreeSet<Vec<usize>> = induced_copies(g.graph(), &reference::k4())
        .into_iter()
        .map(|c| c.vertices)
        .collect();
    let named: BTreeSet<Vec<usize>> = out.iter().map(|t| t.vertices.to_vec()).collect();
    ensure(generic == named, "tetrahedra_match_census", || {
        format!("{} induced K4 versus {} named", generic.len(), named.len())
    })?;
    Ok(out)
}

/// Vertices of `[xyz]_j`: endpoints of the edges with weak position `j`
/// whose base points lie on `xyz`.
pub fn octahedron_vertices(g: &ColoredGraph, line: Line, j: Position) -> Vec<usize> {
    let mut vs = BTreeSet::new();
    for e in g.edges() {
        if e.weak.position == j
            && line.contains(g.vertex(e.u).point())
            && line.contains(g.vertex(e.v).point())
        {
            vs.insert(e.u);
            vs.insert(e.v);
        }
    }
    vs.into_iter().collect()
}

pub fn octahedra(g: &ColoredGraph) -> Result<Vec<Octahedron>> {
    let k222 = reference::k222();
    let opts = SearchOptions::default();
    let mut out = Vec::with_capacity(21);
    for line in Line::all() {
        for j in Position::ALL {
            let vs = octahedron_vertices(g, line, j);
            let label = format!("[{line}]_{j}");
            ensure(vs.len() == 6, "octahedron_vertices", || format!("{label} has {vs:?}"))?;
            let sub = g.graph().induced_subgraph(&vs);
            ensure(isomorphism(&sub, &k222, &opts)?.is_some(), "octahedron_shape", || {
                format!("{label} does not induce K_{{2,2,2}}")
            })?;
            let expected: BTreeSet<WeakColor> = line
                .points()
                .iter()
                .map(|&point| WeakColor { point, position: j })
                .collect();
            let mut squares = Vec::with_capacity(3);
            for &wc in &expected {
                let edges: Vec<(usize, usize)> = pairs_of(&vs)
                    .into_iter()
                    .filter(|&(u, v)| g.edge(u, v).is_ok_and(|e| e.weak == wc))
                    .collect();
                let square = square_from_edges(&edges).ok_or_else(|| {
                    Error::verification("octahedron_square", format!("{label}: colour {wc} edges {edges:?}"))
                })?;
                let c = square.vertices();
                let pa = g.vertex(c[0]).point();
                let pb = g.vertex(c[1]).point();
                ensure(
                    g.vertex(c[2]).point() == pa && g.vertex(c[3]).point() == pb && pa != pb,
                    "octahedron_square_diagonals",
                    || format!("{label}: square {square} has diagonals on different points"),
                )?;
                squares.push(Square {
                    cycle: square,
                    weak: wc,
                    diagonal_points: [pa.min(pb), pa.max(pb)],
                });
            }
            let found: BTreeSet<WeakColor> = pairs_of(&vs)
                .into_iter()
                .filter_map(|(u, v)| g.edge(u, v).ok().map(|e| e.weak))
                .collect();
            ensure(found == expected, "octahedron_weak_colors", || {
                format!("{label} carries weak colours {found:?}")
            })?;
            out.push(Octahedron {
                line,
                position: j,
                vertices: vs.try_into().unwrap(),
                squares,
            });
        }
    }
    let generic: BTreeSet<Vec<usize>> = induced_copies(g.graph(), &k222)
        .into_iter()
        .map(|c| c.vertices)
        .collect();
    let named: BTreeSet<Vec<usize>> = out.iter().map(|o| o.vertices.to_vec()).collect();
    ensure(generic == named, "octahedra_match_census", || {
        format!("{} induced K_{{2,2,2}} versus {} named", generic.len(), named.len())
    })?;
    Ok(out)
}

/// The 4-cycle formed by exactly four edges, if they form one.
fn square_from_edges(edges: &[(usize, usize)]) -> Option<Hole> {
    if edges.len() != 4 {
        return None;
    }
    let mut vs: Vec<usize> = edges.iter().flat_map(|&(u, v)| [u, v]).collect();
    vs.sort_unstable();
    vs.dedup();
    if vs.len() != 4 {
        return None;
    }
    let adj = |a: usize, b: usize| edges.contains(&(a.min(b), a.max(b)));
    let start = vs[0];
    let nbrs: Vec<usize> = vs.iter().copied().filter(|&x| adj(start, x)).collect();
    let [n1, n2] = nbrs[..] else { return None };
    let opposite = vs.iter().copied().find(|&x| x != start && x != n1 && x != n2)?;
    (adj(n1, opposite) && adj(n2, opposite)).then(|| Hole::from_cycle(&[start, n1, opposite, n2]))
}

impl Census {
    pub fn build(g: &ColoredGraph) -> Result<Census> {
        let census = Census {
            tetrahedra: tetrahedra(g)?,
            octahedra: octahedra(g)?,
        };
        census.check_partitions(g)?;
        Ok(census)
    }

    fn check_partitions(&self, g: &ColoredGraph) -> Result<()> {
        let all: Vec<(usize, usize)> = g.graph().edges().collect();
        let mut t: Vec<(usize, usize)> = self.tetrahedra.iter().flat_map(Tetrahedron::edges).collect();
        t.sort_unstable();
        ensure(t == all, "tetrahedra_partition_edges", || {
            format!("{} tetrahedron edges for {} edges", t.len(), all.len())
        })?;
        let mut o: Vec<(usize, usize)> = self
            .octahedra
            .iter()
            .flat_map(|o| o.edges(g.graph()))
            .collect();
        o.sort_unstable();
        ensure(o == all, "octahedra_partition_edges", || {
            format!("{} octahedron edges for {} edges", o.len(), all.len())
        })?;
        for v in 0..g.order() {
            let nt = self.tetrahedra.iter().filter(|t| t.vertices.contains(&v)).count();
            let no = self.octahedra.iter().filter(|o| o.vertices.contains(&v)).count();
            ensure(nt == 4 && no == 3, "copies_per_vertex", || {
                format!("{} lies in {nt} tetrahedra and {no} octahedra", g.name(v))
            })?;
        }
        Ok(())
    }

    pub fn tetrahedron(&self, name: OrderedLine) -> &Tetrahedron {
        &self.tetrahedra[name.index()]
    }

    pub fn octahedron(&self, line: Line, j: Position) -> &Octahedron {
        &self.octahedra[line.index() * 3 + j.index()]
    }

    pub fn tetrahedron_of_edge(&self, u: usize, v: usize) -> Option<usize> {
        self.tetrahedra
            .iter()
            .position(|t| t.vertices.contains(&u) && t.vertices.contains(&v))
    }

    pub fn octahedron_of_edge(&self, g: &Graph, u: usize, v: usize) -> Option<usize> {
        if !g.has_edge(u, v) {
            return None;
        }
        self.octahedra
            .iter()
            .position(|o| o.vertices.contains(&u) && o.vertices.contains(&v))
    }
}

/// The seven copies through one vertex.
#[derive(Clone, Debug, Serialize)]
pub struct IncidentCopies {
    pub vertex: String,
    /// Ordered lines of the four tetrahedra, sorted.
    pub tetrahedra: Vec<OrderedLine>,
    /// `(line, position)` of the three octahedra in position order.
    pub octahedra: Vec<(Line, Position)>,
    /// Number of the 8 ways of writing each pair as `(q, r)` for which the
    /// four ordered lines `q_a q_b q_c, q_a r_b r_c, r_a q_b r_c, r_a r_b q_c`
    /// name exactly the tetrahedra at the vertex.
    pub valid_labelings: usize,
}

// Copies of one family through the vertex meet only there; a tetrahedron and
// an octahedron through it share at most one edge, and the twelve edges at the
// vertex are the twelve such shared edges.

pub fn incident_copies(g: &ColoredGraph, census: &Census, v: usize) -> Result<IncidentCopies> {
    let pencil = g.vertex(v);
    let tets: Vec<OrderedLine> = census
        .tetrahedra
        .iter()
        .filter(|t| t.vertices.contains(&v))
        .map(|t| t.name)
        .collect();
    let octs: Vec<(Line, Position)> = Position::ALL
        .iter()
        .map(|&j| (pencil.line(j), j))
        .collect();
    for &(l, j) in &octs {
        ensure(census.octahedron(l, j).vertices.contains(&v), "incident_octahedra", || {
            format!("{} not in [{l}]_{j}", g.name(v))
        })?;
    }
    let mut valid_labelings = 0;
    for mask in 0..8u8 {
        let qr = Position::ALL.map(|j| {
            let [lo, hi] = pencil.pair(j).points();
            if mask & (1 << j.index()) == 0 {
                (lo, hi)
            } else {
                (hi, lo)
            }
        });
        let [(qa, ra), (qb, rb), (qc, rc)] = qr;
        let names = [[qa, qb, qc], [qa, rb, rc], [ra, qb, rc], [ra, rb, qc]];
        let lines: Option<BTreeSet<OrderedLine>> = names
            .iter()
            .map(|&[x, y, z]| OrderedLine::new(x, y, z).ok())
            .collect();
        if lines.is_some_and(|s| s.into_iter().collect::<Vec<_>>() == tets) {
            valid_labelings += 1;
        }
    }
    let tet_sets: Vec<Vec<usize>> = tets
        .iter()
        .map(|&t| census.tetrahedron(t).vertices.to_vec())
        .collect();
    let oct_sets: Vec<Vec<usize>> = octs
        .iter()
        .map(|&(l, j)| census.octahedron(l, j).vertices.to_vec())
        .collect();
    let meet = |a: &[usize], b: &[usize]| -> Vec<usize> { a.iter().copied().filter(|x| b.contains(x)).collect() };
    for family in [&tet_sets, &oct_sets] {
        for i in 0..family.len() {
            for k in i + 1..family.len() {
                let common = meet(&family[i], &family[k]);
                ensure(common == [v], "incident_copies_meet_in_vertex", || {
                    format!("copies at {} share {common:?}", g.name(v))
                })?;
            }
        }
    }
    let mut tet_oct_edges = 0;
    for t in &tet_sets {
        for o in &oct_sets {
            let common = meet(t, o);
            ensure(common.len() <= 2, "incident_copies_mixed_meet", || {
                format!("copies at {} share {common:?}", g.name(v))
            })?;
            tet_oct_edges += usize::from(common.len() == 2);
        }
    }
    let all_seven = tet_sets
        .iter()
        .chain(&oct_sets)
        .fold(tet_sets[0].clone(), |acc, s| meet(&acc, s));
    ensure(all_seven == [v] && tet_oct_edges == 12, "incident_copies_common_vertex", || {
        format!("copies at {} meet in {all_seven:?} with {tet_oct_edges} shared edges", g.name(v))
    })?;
    Ok(IncidentCopies {
        vertex: g.name(v),
        tetrahedra: tets,
        octahedra: octs,
        valid_labelings,
    })
}

/// The octahedron and tetrahedron through one edge.
#[derive(Clone, Debug, Serialize)]
pub struct FastenedPair {
    pub edge: (usize, usize),
    pub octahedron: usize,
    pub tetrahedron: usize,
}

/// Checks that every edge lies in exactly one octahedron and one tetrahedron,
/// that these share only that edge, and that they are the ones named by the
/// edge's weak and strong colours.
pub fn fastened_certificate(g: &ColoredGraph, census: &Census) -> Result<Vec<FastenedPair>> {
    let mut out = Vec::with_capacity(g.graph().size());
    for e in g.edges() {
        let (u, v) = (e.u, e.v);
        let octs: Vec<usize> = (0..census.octahedra.len())
            .filter(|&i| {
                let o = &census.octahedra[i].vertices;
                o.contains(&u) && o.contains(&v)
            })
            .collect();
        let tets: Vec<usize> = (0..census.tetrahedra.len())
            .filter(|&i| {
                let t = &census.tetrahedra[i].vertices;
                t.contains(&u) && t.contains(&v)
            })
            .collect();
        let (&[o], &[t]) = (&octs[..], &tets[..]) else {
            return Err(Error::verification(
                "fastened_counts",
                format!(
                    "edge {}{} lies in {} octahedra and {} tetrahedra",
                    g.name(u),
                    g.name(v),
                    octs.len(),
                    tets.len()
                ),
            ));
        };
        let oct = &census.octahedra[o];
        let tet = &census.tetrahedra[t];
        let shared: Vec<(usize, usize)> = tet
            .edges()
            .into_iter()
            .filter(|&(a, b)| oct.vertices.contains(&a) && oct.vertices.contains(&b))
            .collect();
        ensure(shared == [(u, v)], "fastened_single_edge", || {
            format!("{} and {} share edges {shared:?}", oct.label(), tet.label())
        })?;
        let third = Line::through(g.vertex(u).point(), g.vertex(v).point()).unwrap();
        ensure(
            oct.line == third && oct.position == e.weak.position && tet.name == e.strong,
            "fastened_recipe",
            || format!("edge {}{}: {} / {}", g.name(u), g.name(v), oct.label(), tet.label()),
        )?;
        out.push(FastenedPair {
            edge: (u, v),
            octahedron: o,
            tetrahedron: t,
        });
    }
    Ok(out)
}

/// Structure of one open neighbourhood.
#[derive(Clone, Debug, Serialize)]
pub struct NeighborhoodReport {
    pub vertex: String,
    /// Neighbour ids, sorted; the subgraph below is indexed by position here.
    pub neighbors: Vec<usize>,
    /// `iso_to_lambda[i]` is the neighbour playing label `i` of the
    /// hemi-rhombicuboctahedron graph.
    pub iso_to_lambda: Vec<usize>,
    pub triangles: Vec<[usize; 3]>,
    /// 4-holes with two opposite sides on triangles.
    pub four_holes_touching: Vec<Hole>,
    /// 4-holes sharing only vertices with the triangles.
    pub four_holes_apart: Vec<Hole>,
    /// Image in K4 of every neighbour.
    pub homomorphism_to_k4: Vec<usize>,
    pub automorphism_order: u128,
}

fn four_cycle_sides(h: &Hole) -> [(usize, usize); 4] {
    let e = h.edges();
    [e[0], e[1], e[2], e[3]]
}

pub fn neighborhood_analysis(g: &ColoredGraph, v: usize) -> Result<NeighborhoodReport> {
    let opts = SearchOptions::default();
    let name = g.name(v);
    let nbrs = g.neighbors(v).to_vec();
    let sub = g.graph().induced_subgraph(&nbrs);
    ensure(
        sub.order() == 12 && sub.regular_degree() == Some(4),
        "neighborhood_regular",
        || format!("neighbourhood of {name} is not 4-regular on 12 vertices"),
    )?;
    let lambda = reference::lambda_hemi();
    let iso = isomorphism(&lambda, &sub, &opts)?.ok_or_else(|| {
        Error::verification("neighborhood_lambda", format!("neighbourhood of {name} is not Λ"))
    })?;
    let tri_holes = holes(&sub, 3);
    let triangles: Vec<[usize; 3]> = tri_holes
        .iter()
        .map(|h| {
            let s = h.vertex_set();
            [nbrs[s[0]], nbrs[s[1]], nbrs[s[2]]]
        })
        .collect();
    let covered: BTreeSet<usize> = tri_holes.iter().flat_map(|h| h.vertex_set()).collect();
    ensure(
        tri_holes.len() == 4 && covered.len() == 12,
        "neighborhood_triangles",
        || format!("neighbourhood of {name} has {} triangles", tri_holes.len()),
    )?;
    let tri_edges: BTreeSet<(usize, usize)> = tri_holes.iter().flat_map(|h| h.edges()).collect();
    let mut touching = Vec::new();
    let mut apart = Vec::new();
    for h in holes(&sub, 4) {
        let sides = four_cycle_sides(&h);
        let on: Vec<bool> = sides.iter().map(|e| tri_edges.contains(e)).collect();
        let mapped = Hole::from_cycle(&h.vertices().iter().map(|&i| nbrs[i]).collect::<Vec<_>>());
        match on[..] {
            [true, false, true, false] | [false, true, false, true] => touching.push(mapped),
            [false, false, false, false] => apart.push(mapped),
            _ => {
                return Err(Error::verification(
                    "neighborhood_four_holes",
                    format!("neighbourhood of {name}: 4-hole {mapped} has sides {on:?} on triangles"),
                ))
            }
        }
    }
    ensure(
        touching.len() == 6 && apart.len() == 3,
        "neighborhood_four_holes",
        || format!("neighbourhood of {name}: {} + {} four-holes", touching.len(), apart.len()),
    )?;
    let mut decomposition: Vec<(usize, usize)> = tri_edges.iter().copied().collect();
    for h in &apart {
        for (a, b) in h.edges() {
            let (x, y) = (nbrs.binary_search(&a).unwrap(), nbrs.binary_search(&b).unwrap());
            decomposition.push((x.min(y), x.max(y)));
        }
    }
    decomposition.sort_unstable();
    let all: Vec<(usize, usize)> = sub.edges().collect();
    ensure(decomposition == all, "neighborhood_cycle_decomposition", || {
        format!("neighbourhood of {name}: triangles and 4-holes do not decompose the edges")
    })?;
    let mut hom = vec![0; 12];
    for (label, &local) in iso.iter().enumerate() {
        hom[local] = label % 4;
    }
    for (a, b) in sub.edges() {
        ensure(hom[a] != hom[b], "neighborhood_homomorphism", || {
            format!("neighbourhood of {name}: edge inside a fibre")
        })?;
    }
    ensure(
        (0..4).all(|i| hom.iter().filter(|&&x| x == i).count() == 3),
        "neighborhood_homomorphism_fibres",
        || format!("neighbourhood of {name}: fibres not of size 3"),
    )?;
    let automorphism_order = automorphism_group(&sub, &opts)?.order();
    Ok(NeighborhoodReport {
        vertex: name,
        iso_to_lambda: iso.iter().map(|&i| nbrs[i]).collect(),
        neighbors: nbrs,
        triangles,
        four_holes_touching: touching,
        four_holes_apart: apart,
        homomorphism_to_k4: hom,
        automorphism_order,
    })
}

/// Whether the printed labelling table is an isomorphism onto the
/// neighbourhood of `1^a`, checked edge by edge in both directions.
pub fn lambda_table_is_isomorphism(g: &ColoredGraph) -> bool {
    let table: Vec<usize> = lambda_table().iter().map(|p| p.id()).collect();
    let nbrs = g.neighbors(0);
    let mut sorted = table.clone();
    sorted.sort_unstable();
    sorted == nbrs
        && (0..12).all(|i| (0..12).all(|j| {
            i == j || reference::lambda_hemi().has_edge(i, j) == g.graph().has_edge(table[i], table[j])
        }))
}

/// Checks the three printed automorphisms of Λ and their images in S4.
/// Returns the order of the group they generate.
pub fn check_lambda_generators() -> Result<usize> {
    let lambda = reference::lambda_hemi();
    let labels = reference::lambda_labels();
    let k4_labels: Vec<String> = (0..4).map(|i| i.to_string()).collect();
    let mut gens = Vec::new();
    for (cyc, image) in LAMBDA_GENERATORS {
        let p = parse_cycles(cyc, &labels)?;
        ensure(lambda.is_automorphism(&p), "lambda_generator", || {
            format!("{cyc} is not an automorphism")
        })?;
        let s = parse_cycles(image, &k4_labels)?;
        ensure(
            (0..12).all(|x| p.apply(x) % 4 == s.apply(x % 4)),
            "lambda_generator_image",
            || format!("{cyc} does not induce {image}"),
        )?;
        gens.push(p);
    }
    let group = graph::close_group(12, &gens, 1000).ok_or_else(|| {
        Error::verification("lambda_generators_order", "more than 1000 elements")
    })?;
    Ok(group.len())
}

/// The four ordered lines naming the tetrahedra at `v`; their lines are the
/// Pasch configuration of the base point.
pub fn pasch_of_vertex(census: &Census, v: usize) -> Vec<OrderedLine> {
    census
        .tetrahedra
        .iter()
        .filter(|t| t.vertices.contains(&v))
        .map(|t| t.name)
        .collect()
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::construct::g;

    fn id(s: &str) -> usize {
        s.parse::<OrderedPencil>().unwrap().id()
    }

    #[test]
    fn census_of_copies() {
        let g = g();
        let c = Census::build(g).unwrap();
        assert_eq!(c.tetrahedra.len(), 42);
        assert_eq!(c.octahedra.len(), 21);
        let t347 = c.tetrahedron("347".parse().unwrap());
        assert!(t347.vertices.contains(&0));
    }

    #[test]
    fn copies_at_seven_f() {
        let g = g();
        let c = Census::build(g).unwrap();
        let inc = incident_copies(g, &c, id("7^f")).unwrap();
        let names: Vec<String> = inc.tetrahedra.iter().map(|t| t.to_string()).collect();
        assert_eq!(names, ["321", "356", "426", "451"]);
        let octs: Vec<String> = inc.octahedra.iter().map(|(l, j)| format!("[{l}]_{j}")).collect();
        assert_eq!(octs, ["[347]_a", "[257]_b", "[167]_c"]);
    }

    #[test]
    fn lambda_generators() {
        assert_eq!(check_lambda_generators().unwrap(), 24);
        assert!(lambda_table_is_isomorphism(g()));
    }
}
