//! Point-block configurations built from G, their Levi and Menger graphs,
//! and transitivity and self-duality predicates decided by orbit
//! computation.

use std::collections::{BTreeMap, BTreeSet, HashMap, HashSet, VecDeque};
use std::hash::Hash;

use serde::Serialize;

use crate::census::Census;
use crate::construct::{pencil_to_ordered_line, ColoredGraph};
use crate::error::{Error, Result};
use crate::fano::{phi, phi_inv, Line, OrderedLine, OrderedPencil};
use crate::graph::{
    automorphism_group, automorphism_group_colored, diameter, distance_distribution, girth,
    isomorphism, isomorphism_colored, lex_smallest_geodesics, Graph, Permutation, SearchOptions,
};
use crate::holes_tori::{Star, Torus};

/// Points, blocks and the incidences between them.
#[derive(Clone, Debug, Serialize)]
pub struct Configuration {
    pub name: String,
    pub points: Vec<String>,
    pub blocks: Vec<String>,
    /// Sorted `(point, block)` pairs without repeats.
    pub flags: Vec<(usize, usize)>,
}

impl Configuration {
    pub fn new(
        name: &str,
        points: Vec<String>,
        blocks: Vec<String>,
        flags: impl IntoIterator<Item = (usize, usize)>,
    ) -> Result<Self> {
        let set: BTreeSet<(usize, usize)> = flags.into_iter().collect();
        if let Some(&(p, b)) = set.iter().find(|(p, b)| *p >= points.len() || *b >= blocks.len()) {
            return Err(Error::Unsupported(format!("flag ({p}, {b}) out of range")));
        }
        Ok(Configuration {
            name: name.to_string(),
            points,
            blocks,
            flags: set.into_iter().collect(),
        })
    }

    /// A configuration whose flags are the pairs satisfying `incident`.
    pub fn custom<P, B>(
        name: &str,
        points: &[P],
        blocks: &[B],
        point_name: impl Fn(&P) -> String,
        block_name: impl Fn(&B) -> String,
        incident: impl Fn(&P, &B) -> bool,
    ) -> Configuration {
        let flags: Vec<(usize, usize)> = points
            .iter()
            .enumerate()
            .flat_map(|(i, p)| {
                blocks
                    .iter()
                    .enumerate()
                    .filter(|(_, b)| incident(p, b))
                    .map(move |(j, _)| (i, j))
                    .collect::<Vec<_>>()
            })
            .collect();
        Configuration {
            name: name.to_string(),
            points: points.iter().map(point_name).collect(),
            blocks: blocks.iter().map(block_name).collect(),
            flags,
        }
    }

    pub fn point_degrees(&self) -> Vec<usize> {
        let mut d = vec![0; self.points.len()];
        for &(p, _) in &self.flags {
            d[p] += 1;
        }
        d
    }

    pub fn block_degrees(&self) -> Vec<usize> {
        let mut d = vec![0; self.blocks.len()];
        for &(_, b) in &self.flags {
            d[b] += 1;
        }
        d
    }

    /// Common point and block degrees, where constant.
    pub fn degrees(&self) -> (Option<usize>, Option<usize>) {
        fn common(d: &[usize]) -> Option<usize> {
            let first = *d.first()?;
            d.iter().all(|&x| x == first).then_some(first)
        }
        (common(&self.point_degrees()), common(&self.block_degrees()))
    }

    pub fn is_incident(&self, p: usize, b: usize) -> bool {
        self.flags.binary_search(&(p, b)).is_ok()
    }

    /// Bipartite graph on points followed by blocks, one edge per flag.
    pub fn levi(&self) -> Graph {
        let n = self.points.len();
        Graph::from_edges(
            n + self.blocks.len(),
            self.flags.iter().map(|&(p, b)| (p, n + b)),
        )
        .expect("flags are distinct and in range")
    }

    /// Part labels of the Levi graph: 0 for points, 1 for blocks.
    pub fn levi_parts(&self) -> Vec<usize> {
        let mut parts = vec![0; self.points.len()];
        parts.resize(self.points.len() + self.blocks.len(), 1);
        parts
    }

    pub fn levi_names(&self) -> Vec<String> {
        self.points.iter().chain(&self.blocks).cloned().collect()
    }

    /// Points adjacent when they share a block.
    pub fn menger(&self) -> Graph {
        let mut by_block: Vec<Vec<usize>> = vec![Vec::new(); self.blocks.len()];
        for &(p, b) in &self.flags {
            by_block[b].push(p);
        }
        let mut edges = BTreeSet::new();
        for ps in &by_block {
            for (i, &u) in ps.iter().enumerate() {
                for &v in &ps[i + 1..] {
                    edges.insert((u.min(v), u.max(v)));
                }
            }
        }
        Graph::from_edges(self.points.len(), edges).expect("simple by construction")
    }

    /// Blocks adjacent when they share a point.
    pub fn dual_menger(&self) -> Graph {
        self.dual().menger()
    }

    pub fn dual(&self) -> Configuration {
        Configuration {
            name: format!("dual of {}", self.name),
            points: self.blocks.clone(),
            blocks: self.points.clone(),
            flags: {
                let mut f: Vec<(usize, usize)> = self.flags.iter().map(|&(p, b)| (b, p)).collect();
                f.sort_unstable();
                f
            },
        }
    }
}

/// The orbit of `start` under the group generated by `gens`.
pub fn orbit_of<T: Clone + Eq + Hash>(
    start: T,
    gens: &[Permutation],
    act: impl Fn(&Permutation, &T) -> T,
) -> HashSet<T> {
    let mut seen = HashSet::from([start.clone()]);
    let mut queue = VecDeque::from([start]);
    while let Some(x) = queue.pop_front() {
        for g in gens {
            let y = act(g, &x);
            if seen.insert(y.clone()) {
                queue.push_back(y);
            }
        }
    }
    seen
}

pub fn vertex_transitive(g: &Graph, gens: &[Permutation]) -> bool {
    g.order() == 0 || orbit_of(0, gens, |p, &x| p.apply(x)).len() == g.order()
}

pub fn edge_transitive(g: &Graph, gens: &[Permutation]) -> bool {
    let Some(e) = g.edges().next() else { return true };
    orbit_of(e, gens, |p, &(u, v)| {
        let (a, b) = (p.apply(u), p.apply(v));
        (a.min(b), a.max(b))
    })
    .len()
        == g.size()
}

pub fn arc_transitive(g: &Graph, gens: &[Permutation]) -> bool {
    let Some(e) = g.edges().next() else { return true };
    orbit_of(e, gens, |p, &(u, v)| (p.apply(u), p.apply(v))).len() == 2 * g.size()
}

/// A single orbit on paths `(u, v, w)` with `u != w`.
pub fn two_arc_transitive(g: &Graph, gens: &[Permutation]) -> bool {
    let total: usize = (0..g.order())
        .map(|v| g.degree(v) * g.degree(v).saturating_sub(1))
        .sum();
    let start = (0..g.order()).find_map(|v| match g.neighbors(v) {
        [u, w, ..] => Some((*u, v, *w)),
        _ => None,
    });
    let Some(start) = start else { return true };
    orbit_of(start, gens, |p, &(u, v, w)| (p.apply(u), p.apply(v), p.apply(w))).len() == total
}

/// Regular, edge-transitive and not vertex-transitive.
pub fn semisymmetric(g: &Graph, gens: &[Permutation]) -> bool {
    g.regular_degree().is_some() && edge_transitive(g, gens) && !vertex_transitive(g, gens)
}

/// A single orbit on flags, for permutations of the Levi vertices that
/// preserve the flags.
pub fn flag_transitive(c: &Configuration, levi_gens: &[Permutation]) -> bool {
    let n = c.points.len();
    let levi = c.levi();
    if !levi_gens.iter().all(|p| levi.is_automorphism(p)) {
        return false;
    }
    let Some(&start) = c.flags.first() else { return true };
    orbit_of(start, levi_gens, |p, &(pt, b)| {
        let (x, y) = (p.apply(pt), p.apply(n + b));
        if x < n {
            (x, y - n)
        } else {
            (y, x - n)
        }
    })
    .len()
        == c.flags.len()
}

/// A bijection sending points to blocks and blocks to points that reverses
/// incidence, found by an isomorphism search, if any.
#[derive(Clone, Debug, Serialize)]
pub struct Duality {
    pub point_to_block: Vec<usize>,
    pub block_to_point: Vec<usize>,
}

impl Duality {
    /// `p` on `b` exactly when `block_to_point[b]` is on `point_to_block[p]`.
    pub fn verify(&self, c: &Configuration) -> bool {
        self.point_to_block.len() == c.points.len()
            && self.block_to_point.len() == c.blocks.len()
            && (0..c.points.len()).all(|p| {
                (0..c.blocks.len()).all(|b| {
                    c.is_incident(p, b)
                        == c.is_incident(self.block_to_point[b], self.point_to_block[p])
                })
            })
    }
}

pub fn self_duality(c: &Configuration, opts: &SearchOptions) -> Result<Option<Duality>> {
    if c.points.len() != c.blocks.len() {
        return Ok(None);
    }
    let d = c.dual();
    let Some(map) = isomorphism_colored(&c.levi(), &c.levi_parts(), &d.levi(), &d.levi_parts(), opts)?
    else {
        return Ok(None);
    };
    let n = c.points.len();
    let duality = Duality {
        point_to_block: map[..n].to_vec(),
        block_to_point: map[n..].iter().map(|&x| x - n).collect(),
    };
    Ok(duality.verify(c).then_some(duality))
}

/// One distinct distance distribution with how many points and blocks
/// realize it.
#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct DistributionClass {
    pub counts: Vec<usize>,
    pub points: usize,
    pub blocks: usize,
}

#[derive(Clone, Debug, Serialize)]
pub struct LeviReport {
    pub order: usize,
    pub size: usize,
    pub regular_degree: Option<usize>,
    pub bipartite: bool,
    pub diameter: Option<usize>,
    pub girth: Option<usize>,
    pub distributions: Vec<DistributionClass>,
    pub automorphism_order: u128,
    pub vertex_transitive: bool,
    pub edge_transitive: bool,
    pub arc_transitive: bool,
    pub two_arc_transitive: bool,
    pub semisymmetric: bool,
}

#[derive(Clone, Debug, Serialize)]
pub struct MengerReport {
    pub order: usize,
    pub size: usize,
    pub regular_degree: Option<usize>,
    pub diameter: Option<usize>,
    pub girth: Option<usize>,
    pub automorphism_order: u128,
}

pub fn distance_classes(g: &Graph, parts: &[usize]) -> Vec<DistributionClass> {
    let mut classes: BTreeMap<Vec<usize>, (usize, usize)> = BTreeMap::new();
    for v in 0..g.order() {
        let Ok(d) = distance_distribution(g, v) else { continue };
        let e = classes.entry(d.counts).or_default();
        if parts[v] == 0 {
            e.0 += 1;
        } else {
            e.1 += 1;
        }
    }
    classes
        .into_iter()
        .map(|(counts, (points, blocks))| DistributionClass {
            counts,
            points,
            blocks,
        })
        .collect()
}

pub fn levi_report(c: &Configuration, opts: &SearchOptions) -> Result<LeviReport> {
    let g = c.levi();
    let aut = automorphism_group(&g, opts)?;
    let gens = aut.generators();
    Ok(LeviReport {
        order: g.order(),
        size: g.size(),
        regular_degree: g.regular_degree(),
        bipartite: g.bipartition().is_some(),
        diameter: diameter(&g).ok(),
        girth: girth(&g).ok(),
        distributions: distance_classes(&g, &c.levi_parts()),
        automorphism_order: aut.order(),
        vertex_transitive: vertex_transitive(&g, gens),
        edge_transitive: edge_transitive(&g, gens),
        arc_transitive: arc_transitive(&g, gens),
        two_arc_transitive: two_arc_transitive(&g, gens),
        semisymmetric: semisymmetric(&g, gens),
    })
}

pub fn menger_report(g: &Graph, opts: &SearchOptions) -> Result<MengerReport> {
    Ok(MengerReport {
        order: g.order(),
        size: g.size(),
        regular_degree: g.regular_degree(),
        diameter: diameter(g).ok(),
        girth: girth(g).ok(),
        automorphism_order: automorphism_group(g, opts)?.order(),
    })
}

/// Degrees, Levi and Menger statistics of a configuration.
#[derive(Clone, Debug, Serialize)]
pub struct ConfigurationReport {
    pub name: String,
    pub points: usize,
    pub blocks: usize,
    pub flags: usize,
    pub point_degree: Option<usize>,
    pub block_degree: Option<usize>,
    pub levi: LeviReport,
    pub menger: MengerReport,
    pub dual_menger: MengerReport,
    pub self_dual: bool,
}

pub fn configuration_report(c: &Configuration, opts: &SearchOptions) -> Result<ConfigurationReport> {
    let (point_degree, block_degree) = c.degrees();
    Ok(ConfigurationReport {
        name: c.name.clone(),
        points: c.points.len(),
        blocks: c.blocks.len(),
        flags: c.flags.len(),
        point_degree,
        block_degree,
        levi: levi_report(c, opts)?,
        menger: menger_report(&c.menger(), opts)?,
        dual_menger: menger_report(&c.dual_menger(), opts)?,
        self_dual: self_duality(c, opts)?.is_some(),
    })
}

/// Sort key of a Levi vertex name: the digits in order, preceded for a
/// tetrahedron `⟨xyz⟩` by the digits of its underlying line.
fn path_key(s: &str) -> Vec<u32> {
    let d: Vec<u32> = s.chars().filter_map(|c| c.to_digit(10)).collect();
    if s.starts_with('⟨') {
        let mut line = d.clone();
        line.sort_unstable();
        line.extend(d);
        line
    } else {
        d
    }
}

/// The diameter-realizing geodesics from `source` in the Levi graph, one per
/// far endpoint (lexicographically smallest under the digits of the
/// names), listed in lexicographic order of the whole path.
pub fn levi_diameter_paths(c: &Configuration, source: usize) -> Result<Vec<Vec<String>>> {
    let g = c.levi();
    let names = c.levi_names();
    let keys: Vec<Vec<u32>> = names.iter().map(|s| path_key(s)).collect();
    let mut paths = lex_smallest_geodesics(&g, source, |v| keys[v].clone())?;
    paths.sort_by_key(|p| p.iter().map(|&v| keys[v].clone()).collect::<Vec<_>>());
    Ok(paths
        .into_iter()
        .map(|p| p.into_iter().map(|v| names[v].clone()).collect())
        .collect())
}

/// Vertices of G against the tetrahedra containing them.
pub fn config_42_4(g: &ColoredGraph, census: &Census) -> Configuration {
    let points: Vec<String> = (0..g.order()).map(|v| g.vertex(v).to_string()).collect();
    let blocks: Vec<String> = census.tetrahedra.iter().map(|t| t.label()).collect();
    let flags = census
        .tetrahedra
        .iter()
        .enumerate()
        .flat_map(|(b, t)| t.vertices.map(|v| (v, b)));
    Configuration::new("(42_4)", points, blocks, flags).expect("in range")
}

/// The duality of the (42_4) configuration given by the line-point
/// correspondence: a vertex goes to the tetrahedron named by the points
/// corresponding to its lines, and `⟨xyz⟩` goes to the pencil at the point
/// corresponding to line `xyz` with lines corresponding to `x, y, z`.
pub fn phi_duality(g: &ColoredGraph, census: &Census) -> Result<Duality> {
    let tet_index: HashMap<OrderedLine, usize> = census
        .tetrahedra
        .iter()
        .enumerate()
        .map(|(i, t)| (t.name, i))
        .collect();
    let point_to_block = (0..g.order())
        .map(|v| tet_index[&pencil_to_ordered_line(g.vertex(v))])
        .collect();
    let block_to_point = census
        .tetrahedra
        .iter()
        .map(|t| {
            let [x, y, z] = t.name.entries();
            OrderedPencil::from_lines(phi_inv(t.name.line()), [phi(x), phi(y), phi(z)])
                .map(OrderedPencil::id)
        })
        .collect::<Result<Vec<_>>>()?;
    Ok(Duality {
        point_to_block,
        block_to_point,
    })
}

/// Full report on the (42_4) configuration.
#[derive(Clone, Debug, Serialize)]
pub struct Config42Report {
    pub report: ConfigurationReport,
    pub menger_isomorphic_to_g: bool,
    pub phi_duality_verified: bool,
    /// Two diameter paths from `(1,23,45,67)` and two from `⟨123⟩`.
    pub diameter_paths: Vec<Vec<String>>,
    /// Automorphism counts printed for this Levi graph in different places.
    pub printed_levi_orders: [u128; 2],
    pub levi_order_divisible_by_flags: bool,
}

pub fn report_42_4(g: &ColoredGraph, census: &Census, opts: &SearchOptions) -> Result<Config42Report> {
    let c = config_42_4(g, census);
    let report = configuration_report(&c, opts)?;
    let menger_isomorphic_to_g = isomorphism(&c.menger(), g.graph(), opts)?.is_some();
    let phi_duality_verified = phi_duality(g, census)?.verify(&c);
    let start_block = census.tetrahedra.iter().position(|t| t.label() == "⟨123⟩").unwrap_or(0);
    let mut diameter_paths = levi_diameter_paths(&c, 0)?;
    diameter_paths.extend(levi_diameter_paths(&c, c.points.len() + start_block)?);
    let levi_order_divisible_by_flags = report.levi.automorphism_order % c.flags.len() as u128 == 0;
    Ok(Config42Report {
        report,
        menger_isomorphic_to_g,
        phi_duality_verified,
        diameter_paths,
        printed_levi_orders: [1008, 2016],
        levi_order_divisible_by_flags,
    })
}

fn triangle_name(g: &ColoredGraph, t: &[usize]) -> String {
    format!("{{{}}}", t.iter().map(|&v| g.name(v)).collect::<Vec<_>>().join(","))
}

/// Tetrahedral triangles against octahedral triangles sharing an edge.
pub fn config_168_6(g: &ColoredGraph, census: &Census) -> Configuration {
    let tet: Vec<[usize; 3]> = census
        .tetrahedra
        .iter()
        .flat_map(|t| {
            let v = t.vertices;
            [[v[0], v[1], v[2]], [v[0], v[1], v[3]], [v[0], v[2], v[3]], [v[1], v[2], v[3]]]
        })
        .collect();
    let oct = crate::holes_tori::octahedral_triangles(g, census);
    let edges = |t: &[usize; 3]| [(t[0], t[1]), (t[0], t[2]), (t[1], t[2])];
    let mut by_edge: HashMap<(usize, usize), Vec<usize>> = HashMap::new();
    for (b, t) in oct.iter().enumerate() {
        for e in edges(t) {
            by_edge.entry(e).or_default().push(b);
        }
    }
    let flags: Vec<(usize, usize)> = tet
        .iter()
        .enumerate()
        .flat_map(|(p, t)| {
            let mut t = *t;
            t.sort_unstable();
            edges(&t)
                .into_iter()
                .flat_map(|e| by_edge.get(&e).cloned().unwrap_or_default())
                .map(move |b| (p, b))
                .collect::<Vec<_>>()
        })
        .collect();
    Configuration::new(
        "(168_6)",
        tet.iter().map(|t| triangle_name(g, t)).collect(),
        oct.iter().map(|t| triangle_name(g, t)).collect(),
        flags,
    )
    .expect("in range")
}

/// Tetrahedra against octahedra sharing an edge.
pub fn config_tetra_octa(g: &ColoredGraph, census: &Census) -> Configuration {
    let flags: Vec<(usize, usize)> = census
        .tetrahedra
        .iter()
        .enumerate()
        .flat_map(|(p, t)| {
            t.edges()
                .into_iter()
                .filter_map(|(u, v)| census.octahedron_of_edge(g.graph(), u, v))
                .map(move |b| (p, b))
                .collect::<Vec<_>>()
        })
        .collect();
    Configuration::new(
        "(42_6,21_12)",
        census.tetrahedra.iter().map(|t| t.label()).collect(),
        census.octahedra.iter().map(|o| o.label()).collect(),
        flags,
    )
    .expect("in range")
}

/// Tetrahedra against the tori `[w]_d` whose closure attaches them, i.e.
/// `⟨x_a x_b x_c⟩` on `[x_d]_d`.
pub fn config_tetra_torus(census: &Census, tori: &[Torus]) -> Configuration {
    let flags: Vec<(usize, usize)> = census
        .tetrahedra
        .iter()
        .enumerate()
        .flat_map(|(p, t)| {
            tori.iter()
                .enumerate()
                .filter(|(_, x)| t.name.entry(x.position) == x.center)
                .map(move |(b, _)| (p, b))
                .collect::<Vec<_>>()
        })
        .collect();
    Configuration::new(
        "(42_3,21_6)",
        census.tetrahedra.iter().map(|t| t.label()).collect(),
        tori.iter().map(Torus::name).collect(),
        flags,
    )
    .expect("in range")
}

/// Tori against stars sharing a six-hole.
pub fn config_torus_star(tori: &[Torus], stars: &[Star]) -> Configuration {
    let flags: Vec<(usize, usize)> = tori
        .iter()
        .enumerate()
        .flat_map(|(p, t)| {
            stars
                .iter()
                .enumerate()
                .filter(|(_, s)| t.holes.iter().any(|h| s.holes.contains(h)))
                .map(move |(b, _)| (p, b))
                .collect::<Vec<_>>()
        })
        .collect();
    Configuration::new(
        "(21_4,7_12)",
        tori.iter().map(Torus::name).collect(),
        stars.iter().map(Star::name).collect(),
        flags,
    )
    .expect("in range")
}

fn act_on_set(p: &Permutation, set: &[usize]) -> Vec<usize> {
    let mut out: Vec<usize> = set.iter().map(|&x| p.apply(x)).collect();
    out.sort_unstable();
    out
}

fn act_on_edges(p: &Permutation, edges: &[(usize, usize)]) -> Vec<(usize, usize)> {
    let mut out: Vec<(usize, usize)> = edges
        .iter()
        .map(|&(u, v)| {
            let (a, b) = (p.apply(u), p.apply(v));
            (a.min(b), a.max(b))
        })
        .collect();
    out.sort_unstable();
    out
}

/// The permutation of objects induced by a vertex permutation of G, where
/// objects are given by their sorted keys; `None` if some image is not an
/// object.
pub fn induced_permutation<K: Eq + Hash + Clone>(
    keys: &[K],
    image: impl Fn(&K) -> K,
) -> Option<Permutation> {
    let index: HashMap<&K, usize> = keys.iter().enumerate().map(|(i, k)| (k, i)).collect();
    let images: Option<Vec<usize>> = keys.iter().map(|k| index.get(&image(k)).copied()).collect();
    Permutation::from_images(images?).ok()
}

/// How a permutation of G acts on the points and blocks of a configuration.
pub enum ObjectKeys<'a> {
    Vertices(&'a [Vec<usize>]),
    Edges(&'a [Vec<(usize, usize)>]),
}

fn induced(keys: &ObjectKeys<'_>, p: &Permutation) -> Option<Permutation> {
    match keys {
        ObjectKeys::Vertices(k) => induced_permutation(k, |s| act_on_set(p, s)),
        ObjectKeys::Edges(k) => induced_permutation(k, |s| act_on_edges(p, s)),
    }
}

/// Lifts permutations of G to permutations of the Levi vertices.
pub fn levi_action(
    gens: &[Permutation],
    points: ObjectKeys<'_>,
    blocks: ObjectKeys<'_>,
) -> Option<Vec<Permutation>> {
    gens.iter()
        .map(|p| {
            let a = induced(&points, p)?;
            let b = induced(&blocks, p)?;
            let n = a.degree();
            let images: Vec<usize> = a
                .images()
                .iter()
                .copied()
                .chain(b.images().iter().map(|&x| x + n))
                .collect();
            Permutation::from_images(images).ok()
        })
        .collect()
}

/// Summary of a configuration whose flag-transitivity is decided under
/// the action of the automorphisms of G.
#[derive(Clone, Debug, Serialize)]
pub struct FlagReport {
    pub name: String,
    pub points: usize,
    pub blocks: usize,
    pub flags: usize,
    pub point_degree: Option<usize>,
    pub block_degree: Option<usize>,
    pub flag_transitive: bool,
}

pub fn flag_report(c: &Configuration, levi_gens: &[Permutation]) -> FlagReport {
    let (point_degree, block_degree) = c.degrees();
    FlagReport {
        name: c.name.clone(),
        points: c.points.len(),
        blocks: c.blocks.len(),
        flags: c.flags.len(),
        point_degree,
        block_degree,
        flag_transitive: flag_transitive(c, levi_gens),
    }
}

pub fn tetrahedron_keys(census: &Census) -> Vec<Vec<usize>> {
    census.tetrahedra.iter().map(|t| t.vertices.to_vec()).collect()
}

pub fn octahedron_keys(census: &Census) -> Vec<Vec<usize>> {
    census
        .octahedra
        .iter()
        .map(|o| {
            let mut v = o.vertices.to_vec();
            v.sort_unstable();
            v
        })
        .collect()
}

pub fn torus_keys(tori: &[Torus]) -> Vec<Vec<(usize, usize)>> {
    tori.iter().map(|t| t.edges.clone()).collect()
}

pub fn star_keys(stars: &[Star]) -> Vec<Vec<(usize, usize)>> {
    stars.iter().map(|s| s.edges.clone()).collect()
}

/// The Levi graph's automorphism group restricted to part-preserving
/// elements, for predicates on configurations that are not self-dual.
pub fn part_preserving_generators(c: &Configuration, opts: &SearchOptions) -> Result<Vec<Permutation>> {
    Ok(automorphism_group_colored(&c.levi(), &c.levi_parts(), opts)?
        .generators()
        .to_vec())
}

/// Lines of the Fano plane named as in the configuration tables.
pub fn line_names() -> Vec<String> {
    Line::all().iter().map(|l| l.to_string()).collect()
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::construct::g;
    use crate::graph::reference;

    #[test]
    fn small_predicates() {
        let c6 = reference::cycle(6);
        let gens = automorphism_group(&c6, &SearchOptions::default()).unwrap();
        let gens = gens.generators();
        assert!(vertex_transitive(&c6, gens));
        assert!(arc_transitive(&c6, gens));
        assert!(two_arc_transitive(&c6, gens));
        assert!(!semisymmetric(&c6, gens));
        let k4 = reference::k4();
        let a = automorphism_group(&k4, &SearchOptions::default()).unwrap();
        assert!(two_arc_transitive(&k4, a.generators()));
        let path = Graph::from_edges(3, [(0, 1), (1, 2)]).unwrap();
        let a = automorphism_group(&path, &SearchOptions::default()).unwrap();
        assert!(!vertex_transitive(&path, a.generators()));
    }

    #[test]
    fn fano_plane_is_self_dual() {
        let lines = Line::all();
        let pts: Vec<crate::fano::Point> = crate::fano::Point::all().collect();
        let c = Configuration::custom(
            "Fano",
            &pts,
            &lines,
            |p| p.to_string(),
            |l| l.to_string(),
            |p, l| l.contains(*p),
        );
        assert_eq!(c.degrees(), (Some(3), Some(3)));
        let d = self_duality(&c, &SearchOptions::default()).unwrap().unwrap();
        assert!(d.verify(&c));
        let levi = c.levi();
        assert_eq!(girth(&levi).unwrap(), 6);
        assert_eq!(levi.size(), 21);
    }

    #[test]
    fn empty_incidence() {
        let c = Configuration::new("empty", vec!["p".into()], vec!["b".into()], []).unwrap();
        assert_eq!(c.degrees(), (Some(0), Some(0)));
        assert_eq!(c.menger().size(), 0);
    }

    #[test]
    fn forty_two_four() {
        let g = g();
        let census = Census::build(g).unwrap();
        let c = config_42_4(g, &census);
        assert_eq!(c.degrees(), (Some(4), Some(4)));
        assert!(phi_duality(g, &census).unwrap().verify(&c));
        let paths = levi_diameter_paths(&c, 0).unwrap();
        assert_eq!(
            paths[0],
            ["(1,23,45,67)", "⟨246⟩", "(3,12,47,56)", "⟨145⟩", "(6,17,24,35)", "⟨725⟩", "(1,67,23,45)"]
        );
        assert_eq!(
            paths[1],
            ["(1,23,45,67)", "⟨246⟩", "(3,12,47,56)", "⟨176⟩", "(4,15,37,26)", "⟨572⟩", "(1,45,67,23)"]
        );
        let levi = c.levi();
        let classes = distance_classes(&levi, &c.levi_parts());
        assert_eq!(classes.len(), 1);
        assert_eq!(classes[0].counts, vec![1, 4, 12, 24, 27, 14, 2]);
    }

    #[test]
    fn tetra_octa_is_flag_transitive() {
        let g = g();
        let census = Census::build(g).unwrap();
        let c = config_tetra_octa(g, &census);
        assert_eq!(c.degrees(), (Some(6), Some(12)));
        assert_eq!(c.flags.len(), 252);
        let gens: Vec<Permutation> = crate::symmetry::involution_generators(g)
            .unwrap()
            .into_iter()
            .map(|e| e.perm)
            .collect();
        let t = tetrahedron_keys(&census);
        let o = octahedron_keys(&census);
        let lg = levi_action(&gens, ObjectKeys::Vertices(&t), ObjectKeys::Vertices(&o)).unwrap();
        assert!(flag_transitive(&c, &lg));
    }
}
