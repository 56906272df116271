//! Automorphisms of G: the sixteen generators acting on ordered pencils,
//! the full group table, stabilizers and cosets, ultrahomogeneity and
//! {H}_n^m certificates, and the search for a regular subgroup.

use std::collections::{BTreeSet, HashMap};
use std::fmt;

use serde::Serialize;

use crate::construct::ColoredGraph;
use crate::error::{ensure, Error, Result};
use crate::fano::{OrderedPencil, Pair, Point, Position};
use crate::graph::{
    automorphism_group, close_group, induced_copies, orbit, AutomorphismGroup, Graph,
    Permutation, SearchOptions, DEFAULT_ELEMENT_CAP,
};

/// The point permutations of the first fourteen generators, as pairs of
/// transpositions.
pub const PHI_TRANSPOSITIONS: [[(u8, u8); 2]; 14] = [
    [(2, 3), (6, 7)],
    [(4, 5), (6, 7)],
    [(1, 3), (5, 7)],
    [(4, 6), (5, 7)],
    [(1, 2), (5, 6)],
    [(4, 7), (5, 6)],
    [(1, 5), (3, 7)],
    [(2, 6), (3, 7)],
    [(1, 4), (2, 7)],
    [(2, 7), (3, 6)],
    [(1, 7), (3, 5)],
    [(2, 4), (3, 5)],
    [(1, 6), (3, 4)],
    [(2, 5), (3, 4)],
];

/// A collineation of the Fano plane together with a permutation of the
/// positions `a, b, c`.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct Decomposition {
    /// `points[i]` is the image of point `i + 1`.
    pub points: [u8; 7],
    /// `positions[j]` is the image of position `j`.
    pub positions: [usize; 3],
}

impl Decomposition {
    pub fn identity() -> Self {
        Decomposition {
            points: [1, 2, 3, 4, 5, 6, 7],
            positions: [0, 1, 2],
        }
    }

    pub fn from_transpositions(ts: &[(u8, u8)]) -> Self {
        let mut d = Decomposition::identity();
        for &(a, b) in ts {
            d.points.swap(a as usize - 1, b as usize - 1);
        }
        d
    }

    pub fn swap_positions(i: usize, j: usize) -> Self {
        let mut d = Decomposition::identity();
        d.positions.swap(i, j);
        d
    }

    fn point(&self, p: Point) -> Point {
        Point::new(self.points[p.value() as usize - 1]).unwrap()
    }

    /// Whether the point map sends lines to lines.
    pub fn is_collineation(&self) -> bool {
        crate::fano::lines().iter().all(|l| {
            let [a, b, c] = l.points().map(|p| self.point(p));
            crate::fano::Line::from_points(a, b, c).is_ok()
        })
    }

    /// Image of an ordered pencil: points are moved by the collineation and
    /// the pair at position `j` is moved to position `positions[j]`.
    pub fn act(&self, v: OrderedPencil) -> Result<OrderedPencil> {
        let mut pairs = [v.pairs()[0]; 3];
        for j in 0..3 {
            let [x, y] = v.pairs()[j].points();
            pairs[self.positions[j]] = Pair::new(self.point(x), self.point(y)).unwrap();
        }
        OrderedPencil::new(self.point(v.point()), pairs)
    }

    /// The induced permutation of vertex ids.
    pub fn to_permutation(&self) -> Result<Permutation> {
        let images = OrderedPencil::all()
            .iter()
            .map(|&v| self.act(v).map(OrderedPencil::id))
            .collect::<Result<Vec<_>>>()?;
        Permutation::from_images(images)
    }

    /// `self` after `other`.
    pub fn compose(&self, other: &Decomposition) -> Decomposition {
        Decomposition {
            points: other.points.map(|p| self.points[p as usize - 1]),
            positions: other.positions.map(|j| self.positions[j]),
        }
    }
}

impl fmt::Display for Decomposition {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let pts = Permutation::from_images(self.points.iter().map(|&p| p as usize - 1).collect()).unwrap();
        let cycles = pts.cycles();
        if cycles.is_empty() {
            write!(f, "()")?;
        }
        for c in cycles {
            write!(f, "(")?;
            for x in c {
                write!(f, "{}", x + 1)?;
            }
            write!(f, ")")?;
        }
        let pos = Permutation::from_images(self.positions.to_vec()).unwrap();
        for c in pos.cycles() {
            write!(f, "(")?;
            for j in c {
                write!(f, "{}", Position::from_index(j).unwrap())?;
            }
            write!(f, ")")?;
        }
        Ok(())
    }
}

/// An automorphism of G as a vertex permutation with its decomposition.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct GroupElement {
    pub perm: Permutation,
    pub decomposition: Option<Decomposition>,
}

/// The sixteen generators `τ_1..τ_16`, each checked to be an automorphism.
pub fn involution_generators(g: &ColoredGraph) -> Result<Vec<GroupElement>> {
    let mut decs: Vec<Decomposition> = PHI_TRANSPOSITIONS
        .iter()
        .map(|ts| Decomposition::from_transpositions(ts))
        .collect();
    decs.push(Decomposition::swap_positions(0, 2));
    decs.push(Decomposition::swap_positions(1, 2));
    let mut out = Vec::with_capacity(16);
    for (i, d) in decs.into_iter().enumerate() {
        ensure(d.is_collineation(), "generator_collineation", || format!("τ_{} = {d}", i + 1))?;
        let perm = d.to_permutation()?;
        ensure(g.graph().is_automorphism(&perm), "generator_automorphism", || {
            format!("τ_{} = {d} does not preserve adjacency", i + 1)
        })?;
        out.push(GroupElement {
            perm,
            decomposition: Some(d),
        });
    }
    Ok(out)
}

/// Recovers `(φ, ψ)` from a vertex permutation of G, if it has that form.
pub fn decompose(perm: &Permutation) -> Option<Decomposition> {
    let all = OrderedPencil::all();
    let mut points = [0u8; 7];
    for fibre in 0..7 {
        let image = all[perm.apply(fibre * 6)].point().value();
        points[fibre] = image;
    }
    let base = all[0];
    let img = all[perm.apply(0)];
    let mut positions = [0usize; 3];
    let d0 = Decomposition {
        points,
        positions: [0, 1, 2],
    };
    for j in 0..3 {
        let [x, y] = base.pairs()[j].points();
        let target = Pair::new(d0.point(x), d0.point(y))?;
        positions[j] = (0..3).find(|&k| img.pairs()[k] == target)?;
    }
    let d = Decomposition { points, positions };
    (d.is_collineation() && d.to_permutation().ok().as_ref() == Some(perm)).then_some(d)
}

/// Every element of a group of automorphisms of G, with lookup.
#[derive(Clone, Debug)]
pub struct GroupTable {
    elements: Vec<GroupElement>,
    index: HashMap<Permutation, usize>,
}

impl GroupTable {
    /// Closes a set of vertex permutations under composition.
    pub fn from_generators(n: usize, gens: &[Permutation]) -> Result<GroupTable> {
        let perms = close_group(n, gens, DEFAULT_ELEMENT_CAP)
            .ok_or_else(|| Error::verification("group_closure", "more elements than the cap"))?;
        Ok(GroupTable::from_elements(perms))
    }

    pub fn from_elements(mut perms: Vec<Permutation>) -> GroupTable {
        perms.sort();
        perms.dedup();
        let elements: Vec<GroupElement> = perms
            .into_iter()
            .map(|perm| GroupElement {
                decomposition: (perm.degree() == crate::construct::ORDER).then(|| decompose(&perm)).flatten(),
                perm,
            })
            .collect();
        let index = elements
            .iter()
            .enumerate()
            .map(|(i, e)| (e.perm.clone(), i))
            .collect();
        GroupTable { elements, index }
    }

    pub fn order(&self) -> usize {
        self.elements.len()
    }

    pub fn elements(&self) -> &[GroupElement] {
        &self.elements
    }

    pub fn perms(&self) -> impl Iterator<Item = &Permutation> {
        self.elements.iter().map(|e| &e.perm)
    }

    pub fn index_of(&self, p: &Permutation) -> Option<usize> {
        self.index.get(p).copied()
    }

    /// Closed under composition and inverses, with the identity.
    pub fn is_group(&self) -> bool {
        let n = self.elements.first().map_or(0, |e| e.perm.degree());
        self.index.contains_key(&Permutation::identity(n))
            && self.perms().all(|a| self.index.contains_key(&a.inverse()))
            && self.perms().all(|a| self.perms().all(|b| self.index.contains_key(&a.compose(b))))
    }

    /// Ids of the elements satisfying `keep`.
    pub fn subgroup_where(&self, keep: impl Fn(&Permutation) -> bool) -> Vec<usize> {
        (0..self.order()).filter(|&i| keep(&self.elements[i].perm)).collect()
    }

    pub fn vertex_stabilizer(&self, v: usize) -> Vec<usize> {
        self.subgroup_where(|p| p.apply(v) == v)
    }

    /// Elements mapping the set onto itself.
    pub fn setwise_stabilizer(&self, set: &[usize]) -> Vec<usize> {
        let s: BTreeSet<usize> = set.iter().copied().collect();
        self.subgroup_where(|p| set.iter().all(|x| s.contains(&p.apply(*x))))
    }

    /// Elements fixing both ends of an arc.
    pub fn arc_stabilizer(&self, u: usize, v: usize) -> Vec<usize> {
        self.subgroup_where(|p| p.apply(u) == u && p.apply(v) == v)
    }

    /// Left cosets `gH` of the subgroup `h` (element ids), each sorted, in
    /// order of their smallest element.
    pub fn left_cosets(&self, h: &[usize]) -> Vec<Vec<usize>> {
        let mut seen = vec![false; self.order()];
        let mut out = Vec::new();
        for g in 0..self.order() {
            if seen[g] {
                continue;
            }
            let mut coset: Vec<usize> = h
                .iter()
                .map(|&x| self.index[&self.elements[g].perm.compose(&self.elements[x].perm)])
                .collect();
            coset.sort_unstable();
            for &c in &coset {
                seen[c] = true;
            }
            out.push(coset);
        }
        out
    }
}

/// The group generated by the sixteen generators, checked against an
/// independent automorphism search.
#[derive(Clone, Debug)]
pub struct SymmetryReport {
    pub table: GroupTable,
    pub generators: Vec<GroupElement>,
    pub searched: AutomorphismGroup,
    pub matches_search: bool,
    pub all_decompose: bool,
}

pub fn group(g: &ColoredGraph) -> Result<SymmetryReport> {
    let generators = involution_generators(g)?;
    let gens: Vec<Permutation> = generators.iter().map(|e| e.perm.clone()).collect();
    let table = GroupTable::from_generators(g.order(), &gens)?;
    let searched = automorphism_group(g.graph(), &SearchOptions::default())?;
    let found = searched
        .elements(DEFAULT_ELEMENT_CAP)
        .ok_or_else(|| Error::verification("automorphism_search", "group too large to list"))?;
    let mine: Vec<Permutation> = table.perms().cloned().collect();
    let matches_search = found == mine;
    let all_decompose = table.elements().iter().all(|e| e.decomposition.is_some());
    Ok(SymmetryReport {
        table,
        generators,
        searched,
        matches_search,
        all_decompose,
    })
}

/// The decomposition map is a homomorphism: identity goes to identity and
/// `decompose(a ∘ t) = decompose(a) ∘ decompose(t)` for every element `a`
/// and every generator `t`.
pub fn decomposition_is_action(table: &GroupTable, generators: &[GroupElement]) -> bool {
    let id_ok = table
        .elements()
        .iter()
        .filter(|e| e.perm.is_identity())
        .all(|e| e.decomposition == Some(Decomposition::identity()));
    id_ok
        && table.elements().iter().all(|a| {
            generators.iter().all(|t| match (a.decomposition, t.decomposition) {
                (Some(da), Some(dt)) => {
                    decompose(&a.perm.compose(&t.perm)) == Some(da.compose(&dt))
                }
                _ => false,
            })
        })
}

/// A stabilizer computed from the table, compared with a printed
/// generating set.
#[derive(Clone, Debug, Serialize)]
pub struct StabilizerReport {
    pub name: String,
    pub order: usize,
    pub cosets: usize,
    pub printed_generators: Vec<String>,
    pub printed_generators_inside: bool,
    /// Printed words that do not lie in the stabilizer.
    pub printed_outside: Vec<String>,
    pub printed_generated_order: usize,
    pub printed_generate_it: bool,
}

/// A word like `[6, 16]` means `τ_6 ∘ τ_16`.
fn word_perm(gens: &[GroupElement], word: &[usize]) -> Permutation {
    let n = gens[0].perm.degree();
    word.iter()
        .fold(Permutation::identity(n), |acc, &i| acc.compose(&gens[i - 1].perm))
}

fn word_name(word: &[usize]) -> String {
    word.iter()
        .map(|i| format!("τ{i}"))
        .collect::<Vec<_>>()
        .join("∘")
}

pub fn stabilizer_report(
    table: &GroupTable,
    gens: &[GroupElement],
    name: &str,
    members: &[usize],
    printed: &[&[usize]],
) -> StabilizerReport {
    let set: BTreeSet<usize> = members.iter().copied().collect();
    let perms: Vec<Permutation> = printed.iter().map(|w| word_perm(gens, w)).collect();
    let printed_outside: Vec<String> = printed
        .iter()
        .zip(&perms)
        .filter(|(_, p)| !table.index_of(p).is_some_and(|i| set.contains(&i)))
        .map(|(w, _)| word_name(w))
        .collect();
    let inside = printed_outside.is_empty();
    let n = gens[0].perm.degree();
    let generated = close_group(n, &perms, DEFAULT_ELEMENT_CAP).map_or(0, |g| g.len());
    StabilizerReport {
        name: name.to_string(),
        order: members.len(),
        cosets: table.left_cosets(members).len(),
        printed_generators: printed.iter().map(|w| word_name(w)).collect(),
        printed_generators_inside: inside,
        printed_outside,
        printed_generated_order: generated,
        printed_generate_it: inside && generated == members.len(),
    }
}

/// The stabilizers named in the symmetry discussion of G: the vertex `1^a`,
/// the edge `{1^a, 2^a}`, the octahedron `[123]_a` and the union of the
/// three octahedra on line `123`.
pub fn printed_stabilizers(
    g: &ColoredGraph,
    census: &crate::census::Census,
    table: &GroupTable,
    gens: &[GroupElement],
) -> Result<Vec<StabilizerReport>> {
    let v = g.parse_vertex("1^a")?;
    let w = g.parse_vertex("2^a")?;
    let line: crate::fano::Line = "123".parse()?;
    let oct_a = census.octahedron(line, Position::A).vertices.to_vec();
    let union: Vec<usize> = Position::ALL
        .iter()
        .flat_map(|&j| census.octahedron(line, j).vertices)
        .collect();
    Ok(vec![
        stabilizer_report(
            table,
            gens,
            "vertex 1^a",
            &table.vertex_stabilizer(v),
            &[&[1], &[2], &[4, 16], &[6, 16], &[8, 15], &[10, 15], &[12, 15, 16], &[14, 15, 16]],
        ),
        stabilizer_report(
            table,
            gens,
            "edge {1^a, 2^a}",
            &table.setwise_stabilizer(&[v, w]),
            &[&[6, 16], &[5]],
        ),
        stabilizer_report(
            table,
            gens,
            "octahedron [123]_a",
            &table.setwise_stabilizer(&oct_a),
            &[&[1], &[2], &[5], &[6], &[16]],
        ),
        stabilizer_report(
            table,
            gens,
            "octahedra [123]_a ∪ [123]_b ∪ [123]_c",
            &table.setwise_stabilizer(&union),
            &[&[1], &[2], &[5], &[6], &[15], &[16]],
        ),
    ])
}

/// Generators (1-based) not in `skip` that nevertheless lie in the
/// stabilizer, i.e. do not move it to a non-trivial coset.
pub fn generators_inside(
    table: &GroupTable,
    gens: &[GroupElement],
    stabilizer: &[usize],
    skip: &[usize],
) -> Vec<usize> {
    let set: BTreeSet<usize> = stabilizer.iter().copied().collect();
    (1..=gens.len())
        .filter(|i| !skip.contains(i))
        .filter(|&i| table.index_of(&gens[i - 1].perm).is_some_and(|e| set.contains(&e)))
        .collect()
}

/// The group generated by all generators except those listed (1-based).
pub fn mutated_group(g: &ColoredGraph, drop: &[usize]) -> Result<GroupTable> {
    let gens = involution_generators(g)?;
    let kept: Vec<Permutation> = gens
        .iter()
        .enumerate()
        .filter(|(i, _)| !drop.contains(&(i + 1)))
        .map(|(_, e)| e.perm.clone())
        .collect();
    GroupTable::from_generators(g.order(), &kept)
}

/// For each coset `hΓ`, the image of `{1^a, 2^a}` under its members, which
/// must be the same edge for the whole coset and distinct across cosets.
pub fn coset_images(table: &GroupTable, cosets: &[Vec<usize>], set: &[usize]) -> Option<Vec<Vec<usize>>> {
    let mut out = Vec::with_capacity(cosets.len());
    for c in cosets {
        let image = |e: usize| {
            let mut im: Vec<usize> = set.iter().map(|&x| table.elements()[e].perm.apply(x)).collect();
            im.sort_unstable();
            im
        };
        let first = image(c[0]);
        if c.iter().any(|&e| image(e) != first) {
            return None;
        }
        out.push(first);
    }
    let distinct: BTreeSet<&Vec<usize>> = out.iter().collect();
    (distinct.len() == out.len()).then_some(out)
}

/// Result of checking that isomorphisms between induced copies extend.
#[derive(Clone, Debug, Serialize)]
pub struct UhCertificate {
    pub template: String,
    pub copies: usize,
    pub template_automorphisms: usize,
    pub isomorphisms_checked: usize,
    pub failures: usize,
    /// Up to five `(source copy, target copy, vertex map)` that do not extend.
    pub counterexamples: Vec<(Vec<usize>, Vec<usize>, Vec<usize>)>,
    /// One extending element for the first checked isomorphism.
    pub sample_witness: Option<Vec<usize>>,
}

impl UhCertificate {
    pub fn passes(&self) -> bool {
        self.failures == 0 && self.copies > 0
    }
}

/// Checks every isomorphism between every ordered pair of induced copies of
/// `template` in `g` against the elements of `group`.
pub fn uh_certify(
    g: &Graph,
    template: &Graph,
    template_name: &str,
    group: &[Permutation],
) -> Result<UhCertificate> {
    let copies: Vec<Vec<usize>> = induced_copies(g, template)
        .into_iter()
        .map(|c| c.embedding)
        .collect();
    uh_certify_family(g, template, template_name, &copies, group)
}

/// As [`uh_certify`], over a given family of embeddings of `template`.
pub fn uh_certify_family(
    g: &Graph,
    template: &Graph,
    template_name: &str,
    copies: &[Vec<usize>],
    group: &[Permutation],
) -> Result<UhCertificate> {
    let t_auts = automorphism_group(template, &SearchOptions::default())?
        .elements(DEFAULT_ELEMENT_CAP)
        .ok_or_else(|| Error::Unsupported("template group too large".into()))?;
    for c in copies {
        ensure(
            c.len() == template.order()
                && template.edges().all(|(i, j)| g.has_edge(c[i], c[j])),
            "copy_embedding",
            || format!("{c:?} is not a copy of {template_name}"),
        )?;
    }
    let n = g.order();
    let mut by_image: Vec<Vec<Vec<usize>>> = vec![vec![Vec::new(); n]; n];
    for (i, p) in group.iter().enumerate() {
        for x in 0..n {
            by_image[x][p.apply(x)].push(i);
        }
    }
    let mut cert = UhCertificate {
        template: template_name.to_string(),
        copies: copies.len(),
        template_automorphisms: t_auts.len(),
        isomorphisms_checked: 0,
        failures: 0,
        counterexamples: Vec::new(),
        sample_witness: None,
    };
    let k = template.order();
    for a in copies {
        for b in copies {
            for sigma in &t_auts {
                let target: Vec<usize> = (0..k).map(|i| b[sigma.apply(i)]).collect();
                cert.isomorphisms_checked += 1;
                let witness = by_image[a[0]][target[0]]
                    .iter()
                    .find(|&&e| (0..k).all(|i| group[e].apply(a[i]) == target[i]));
                match witness {
                    Some(&e) => {
                        if cert.sample_witness.is_none() {
                            cert.sample_witness = Some(group[e].images().to_vec());
                        }
                    }
                    None => {
                        cert.failures += 1;
                        if cert.counterexamples.len() < 5 {
                            cert.counterexamples.push((a.clone(), b.clone(), target));
                        }
                    }
                }
            }
        }
    }
    Ok(cert)
}

/// Checks of the {H}_n^m axioms for one template.
#[derive(Clone, Debug, Serialize)]
pub struct HnmReport {
    pub template: String,
    pub n: usize,
    /// Common number of copies per vertex, if constant.
    pub m: Option<usize>,
    pub edge_disjoint: bool,
    pub covers_edges: bool,
    pub incident_copies_meet_in_one_vertex: bool,
    pub connected: bool,
}

impl HnmReport {
    pub fn violations(&self) -> Vec<&'static str> {
        let mut v = Vec::new();
        if !self.connected {
            v.push("connected");
        }
        if !(self.edge_disjoint && self.covers_edges) {
            v.push("edge-disjoint union");
        }
        if self.m.is_none() {
            v.push("constant copies per vertex");
        }
        if !self.incident_copies_meet_in_one_vertex {
            v.push("incident copies share at most one vertex");
        }
        v
    }

    pub fn passes(&self) -> bool {
        self.violations().is_empty()
    }
}

pub fn h_n_m_certify(g: &Graph, template: &Graph, template_name: &str) -> HnmReport {
    let copies = induced_copies(g, template);
    let mut edge_count: HashMap<(usize, usize), usize> = HashMap::new();
    for c in &copies {
        for (i, j) in template.edges() {
            let (u, v) = (c.embedding[i], c.embedding[j]);
            *edge_count.entry((u.min(v), u.max(v))).or_default() += 1;
        }
    }
    let edge_disjoint = edge_count.values().all(|&k| k == 1);
    let covers_edges = g.edges().all(|e| edge_count.contains_key(&e));
    let per_vertex: Vec<Vec<usize>> = (0..g.order())
        .map(|v| (0..copies.len()).filter(|&i| copies[i].vertices.contains(&v)).collect())
        .collect();
    let m = per_vertex
        .first()
        .map(Vec::len)
        .filter(|&m0| per_vertex.iter().all(|p| p.len() == m0));
    let incident_copies_meet_in_one_vertex = per_vertex.iter().all(|ids| {
        ids.iter().enumerate().all(|(k, &i)| {
            ids[k + 1..].iter().all(|&j| {
                copies[i]
                    .vertices
                    .iter()
                    .filter(|x| copies[j].vertices.contains(x))
                    .count()
                    <= 1
            })
        })
    });
    HnmReport {
        template: template_name.to_string(),
        n: copies.len(),
        m,
        edge_disjoint,
        covers_edges,
        incident_copies_meet_in_one_vertex,
        connected: g.is_connected(),
    }
}

/// Verdict on line-graphicality from two {H}_n^m reports.
#[derive(Clone, Debug, Serialize)]
pub struct LineGraphicalReport {
    pub m_values: [usize; 2],
    pub min_m: usize,
    pub line_graphical: bool,
}

/// Line-graphical when `min(m_1, m_2) = 2` is attained by a complete template.
pub fn line_graphical_report(
    first: (&HnmReport, bool),
    second: (&HnmReport, bool),
) -> Option<LineGraphicalReport> {
    let (m1, m2) = (first.0.m?, second.0.m?);
    let min_m = m1.min(m2);
    let line_graphical =
        min_m == 2 && ((m1 == 2 && first.1) || (m2 == 2 && second.1));
    Some(LineGraphicalReport {
        m_values: [m1, m2],
        min_m,
        line_graphical,
    })
}

/// Outcome of the search for a regular subgroup of order 42.
#[derive(Clone, Debug, Serialize)]
pub struct CayleySearch {
    /// Elements that act semiregularly with order dividing 42.
    pub candidates: usize,
    /// Cyclic subgroups generated by the candidates.
    pub cyclic_subgroups: usize,
    pub subsets_closed: u64,
    pub budget: u64,
    pub budget_exhausted: bool,
    /// Generators of a regular subgroup, if one was found.
    pub witness_generators: Option<Vec<Vec<usize>>>,
    /// Element order to count, for the witness subgroup.
    pub witness_element_orders: Option<std::collections::BTreeMap<usize, usize>>,
    pub witness_abelian: Option<bool>,
    /// Isomorphism type of the witness, read off its element orders.
    pub witness_structure: Option<String>,
}

impl CayleySearch {
    pub fn verdict(&self) -> String {
        match (&self.witness_generators, self.budget_exhausted) {
            (Some(_), _) => "regular subgroup of order 42 found".into(),
            (None, true) => "none found before the budget ran out".into(),
            (None, false) => "none found by bounded search".into(),
        }
    }
}

/// Looks for a subgroup of order 42 acting regularly, by closing subsets of
/// one to three generators of distinct cyclic subgroups.
pub fn cayley_search(table: &GroupTable, budget: u64) -> CayleySearch {
    let n = table.elements().first().map_or(0, |e| e.perm.degree());
    let candidates: Vec<&Permutation> = table
        .perms()
        .filter(|p| !p.is_identity() && 42 % p.order() == 0 && p.is_semiregular())
        .collect();
    let mut reps: Vec<Permutation> = Vec::new();
    let mut seen_cyclic: BTreeSet<Vec<Permutation>> = BTreeSet::new();
    for p in &candidates {
        let c = close_group(n, &[(*p).clone()], 43).unwrap_or_default();
        if seen_cyclic.insert(c) {
            reps.push((*p).clone());
        }
    }
    let mut out = CayleySearch {
        candidates: candidates.len(),
        cyclic_subgroups: reps.len(),
        subsets_closed: 0,
        budget,
        budget_exhausted: false,
        witness_generators: None,
        witness_element_orders: None,
        witness_abelian: None,
        witness_structure: None,
    };
    let try_close = |gens: &[Permutation], out: &mut CayleySearch| -> bool {
        out.subsets_closed += 1;
        match close_group(n, gens, 42) {
            Some(h) if h.len() == 42 && is_regular(&h, n) => {
                out.witness_generators = Some(gens.iter().map(|g| g.images().to_vec()).collect());
                let mut orders = std::collections::BTreeMap::new();
                for x in &h {
                    *orders.entry(x.order()).or_insert(0) += 1;
                }
                out.witness_structure = Some(order_42_structure(&orders).to_string());
                out.witness_element_orders = Some(orders);
                out.witness_abelian = Some(gens.iter().all(|a| gens.iter().all(|b| a.compose(b) == b.compose(a))));
                true
            }
            _ => false,
        }
    };
    let k = reps.len();
    for i in 0..k {
        if out.subsets_closed >= budget {
            out.budget_exhausted = true;
            return out;
        }
        if try_close(&[reps[i].clone()], &mut out) {
            return out;
        }
    }
    for i in 0..k {
        for j in i + 1..k {
            if out.subsets_closed >= budget {
                out.budget_exhausted = true;
                return out;
            }
            if try_close(&[reps[i].clone(), reps[j].clone()], &mut out) {
                return out;
            }
        }
    }
    for i in 0..k {
        for j in i + 1..k {
            for l in j + 1..k {
                if out.subsets_closed >= budget {
                    out.budget_exhausted = true;
                    return out;
                }
                if try_close(&[reps[i].clone(), reps[j].clone(), reps[l].clone()], &mut out) {
                    return out;
                }
            }
        }
    }
    out
}

/// Names a group of order 42 from its element-order counts; the six groups
/// of that order have distinct profiles.
pub fn order_42_structure(orders: &std::collections::BTreeMap<usize, usize>) -> &'static str {
    let profile: Vec<(usize, usize)> = orders.iter().map(|(&k, &v)| (k, v)).collect();
    match profile.as_slice() {
        [(1, 1), (2, 1), (3, 2), (6, 2), (7, 6), (14, 6), (21, 12), (42, 12)] => "C42",
        [(1, 1), (2, 21), (3, 2), (7, 6), (21, 12)] => "D42",
        [(1, 1), (2, 7), (3, 14), (6, 14), (7, 6)] => "C7 ⋊ C6",
        [(1, 1), (2, 1), (3, 14), (6, 14), (7, 6), (14, 6)] => "C2 × (C7 ⋊ C3)",
        [(1, 1), (2, 7), (3, 2), (6, 14), (7, 6), (21, 12)] => "C3 × D14",
        [(1, 1), (2, 3), (3, 2), (7, 6), (14, 18), (21, 12)] => "C7 × S3",
        _ => "unknown",
    }
}

fn is_regular(h: &[Permutation], n: usize) -> bool {
    let gens: Vec<Permutation> = h.to_vec();
    h.len() == n
        && orbit(0, &gens).len() == n
        && h.iter().filter(|p| p.apply(0) == 0).count() == 1
}

/// Order of the group generated by the given table elements.
pub fn generated_order(table: &GroupTable, ids: &[usize]) -> Option<usize> {
    let n = table.elements().first()?.perm.degree();
    let gens: Vec<Permutation> = ids.iter().map(|&i| table.elements()[i].perm.clone()).collect();
    close_group(n, &gens, DEFAULT_ELEMENT_CAP).map(|g| g.len())
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::construct::g;
    use crate::graph::reference;

    #[test]
    fn generators_and_group() {
        let g = g();
        let r = group(g).unwrap();
        assert_eq!(r.table.order(), 1008);
        assert_eq!(r.searched.order(), 1008);
        assert!(r.matches_search);
        assert!(r.all_decompose);
    }

    #[test]
    fn decomposition_round_trip() {
        let d = Decomposition::from_transpositions(&[(2, 3), (6, 7)]).compose(&Decomposition::swap_positions(0, 2));
        let p = d.to_permutation().unwrap();
        assert_eq!(decompose(&p), Some(d));
    }

    #[test]
    fn action_and_printed_stabilizers() {
        let g = g();
        let r = group(g).unwrap();
        assert!(decomposition_is_action(&r.table, &r.generators));
        let census = crate::census::Census::build(g).unwrap();
        let reps = printed_stabilizers(g, &census, &r.table, &r.generators).unwrap();
        let orders: Vec<usize> = reps.iter().map(|s| s.order).collect();
        assert_eq!(orders, vec![24, 4, 48, 144]);
        assert_eq!(reps[0].printed_outside, vec!["τ12∘τ15∘τ16", "τ14∘τ15∘τ16"]);
        assert!(reps[1].printed_generate_it);
        assert!(reps[2].printed_generate_it);
        assert!(reps[3].printed_generate_it);
        let l: crate::fano::Line = "123".parse().unwrap();
        let union: Vec<usize> =
            Position::ALL.iter().flat_map(|&j| census.octahedron(l, j).vertices).collect();
        let stab = r.table.setwise_stabilizer(&union);
        assert_eq!(generators_inside(&r.table, &r.generators, &stab, &[1, 2, 5, 6, 15, 16]), vec![3, 4]);
    }

    #[test]
    fn corrected_vertex_stabilizer_words() {
        let g = g();
        let r = group(g).unwrap();
        let stab = r.table.vertex_stabilizer(0);
        let rep = stabilizer_report(
            &r.table,
            &r.generators,
            "vertex 1^a",
            &stab,
            &[&[1], &[2], &[4, 16], &[6, 16], &[8, 15], &[10, 15], &[12, 15, 16, 15], &[14, 15, 16, 15]],
        );
        assert!(rep.printed_generate_it);
    }

    #[test]
    fn edge_cosets_biject_with_edges() {
        let g = g();
        let r = group(g).unwrap();
        let e = [g.parse_vertex("1^a").unwrap(), g.parse_vertex("2^a").unwrap()];
        let gamma = r.table.setwise_stabilizer(&e);
        let cosets = r.table.left_cosets(&gamma);
        let images = coset_images(&r.table, &cosets, &e).unwrap();
        assert_eq!(images.len(), 252);
        assert!(images.iter().all(|e| g.graph().has_edge(e[0], e[1])));
        assert_eq!(gamma.len() * cosets.len(), 1008);
    }

    #[test]
    fn ultrahomogeneity_and_negative_control() {
        let g = g();
        let r = group(g).unwrap();
        let perms: Vec<Permutation> = r.table.perms().cloned().collect();
        let k4 = uh_certify(g.graph(), &reference::k4(), "K4", &perms).unwrap();
        assert!(k4.passes());
        assert_eq!(k4.isomorphisms_checked, 42 * 42 * 24);
        let oct = uh_certify(g.graph(), &reference::k222(), "K222", &perms).unwrap();
        assert!(oct.passes());
        assert_eq!(oct.isomorphisms_checked, 21 * 21 * 48);
        let k2 = uh_certify(g.graph(), &reference::complete(2), "K2", &perms).unwrap();
        assert!(k2.passes());
        let broken = mutated_group(g, &[15, 16]).unwrap();
        assert_eq!(broken.order(), 168);
        let bp: Vec<Permutation> = broken.perms().cloned().collect();
        let bad = uh_certify(g.graph(), &reference::k4(), "K4", &bp).unwrap();
        assert!(!bad.passes());
        assert!(!bad.counterexamples.is_empty());
    }

    #[test]
    fn cuboctahedron_is_ultrahomogeneous() {
        let l = reference::line_graph_of_cube(3);
        let perms = automorphism_group(&l, &SearchOptions::default())
            .unwrap()
            .elements(DEFAULT_ELEMENT_CAP)
            .unwrap();
        assert_eq!(perms.len(), 48);
        for (t, name, copies) in [(reference::complete(3), "K3", 8), (reference::k22(), "K22", 6)] {
            let c = uh_certify(&l, &t, name, &perms).unwrap();
            assert!(c.passes(), "{name}");
            assert_eq!(c.copies, copies, "{name}");
        }
        let all_hexagons = uh_certify(&l, &reference::cycle(6), "C6", &perms).unwrap();
        assert_eq!(all_hexagons.copies, 16);
        assert!(!all_hexagons.passes());
        let great = reference::cuboctahedron_great_hexagons();
        assert_eq!(great.len(), 4);
        let c = uh_certify_family(&l, &reference::cycle(6), "C6", &great, &perms).unwrap();
        assert!(c.passes());
        assert_eq!(c.isomorphisms_checked, 4 * 4 * 12);
    }

    #[test]
    fn hnm_counts_and_line_graphicality() {
        let g = g();
        let k4 = h_n_m_certify(g.graph(), &reference::k4(), "K4");
        let oct = h_n_m_certify(g.graph(), &reference::k222(), "K222");
        assert!(k4.passes() && oct.passes());
        assert_eq!((k4.n, k4.m), (42, Some(4)));
        assert_eq!((oct.n, oct.m), (21, Some(3)));
        let v = line_graphical_report((&k4, true), (&oct, false)).unwrap();
        assert_eq!(v.min_m, 3);
        assert!(!v.line_graphical);
        for d in [3, 4] {
            let l = reference::line_graph_of_cube(d);
            let kd = h_n_m_certify(&l, &reference::complete(d), "Kd");
            let sq = h_n_m_certify(&l, &reference::k22(), "K22");
            assert_eq!((kd.n, kd.m), (1 << d, Some(2)));
            assert_eq!((sq.n, sq.m), (d * (d - 1) * (1 << d) / 8, Some(d - 1)));
            assert!(line_graphical_report((&kd, true), (&sq, false)).unwrap().line_graphical);
        }
    }

    #[test]
    fn cayley_witness_is_regular() {
        let r = group(g()).unwrap();
        let c = cayley_search(&r.table, 1_000_000);
        let gens: Vec<Permutation> = c
            .witness_generators
            .unwrap()
            .into_iter()
            .map(|im| Permutation::from_images(im).unwrap())
            .collect();
        let h = close_group(42, &gens, 100).unwrap();
        assert_eq!(h.len(), 42);
        assert_eq!(orbit(0, &gens).len(), 42);
        assert_eq!(h.iter().filter(|p| p.apply(0) == 0).count(), 1);
        assert!(h.iter().all(|p| r.table.index_of(p).is_some()));
        assert_eq!(c.witness_structure.as_deref(), Some("C7 × S3"));
    }

    #[test]
    fn stabilizer_orders() {
        let r = group(g()).unwrap();
        assert_eq!(r.table.vertex_stabilizer(0).len(), 24);
        let a2 = "2^a".parse::<OrderedPencil>().unwrap().id();
        assert_eq!(r.table.setwise_stabilizer(&[0, a2]).len(), 4);
        assert_eq!(r.table.left_cosets(&r.table.vertex_stabilizer(0)).len(), 42);
    }
}
