//! Brute-force oracles and property tests for the search routines.

use std::collections::{BTreeSet, VecDeque};

use proptest::prelude::*;

use crate::construct;
use crate::fano::{OrderedLine, OrderedPencil};
use crate::graph::{
    automorphism_group, diameter, girth, holes, induced_copies, isomorphism, reference, Graph,
    Permutation, SearchOptions,
};
use crate::holes_tori::SixHoleLabel;
use crate::query::parse_hole_label;
use crate::symmetry::{self, decompose};

fn arb_graph(max_n: usize) -> impl Strategy<Value = Graph> {
    (1..=max_n).prop_flat_map(|n| {
        prop::collection::vec(any::<bool>(), n * (n - 1) / 2).prop_map(move |bits| {
            let mut k = 0;
            let mut edges = Vec::new();
            for u in 0..n {
                for v in u + 1..n {
                    if bits[k] {
                        edges.push((u, v));
                    }
                    k += 1;
                }
            }
            Graph::from_edges(n, edges).unwrap()
        })
    })
}

fn arb_perm(n: usize) -> impl Strategy<Value = Permutation> {
    Just((0..n).collect::<Vec<usize>>())
        .prop_shuffle()
        .prop_map(|v| Permutation::from_images(v).unwrap())
}

fn subsets(n: usize, k: usize) -> Vec<Vec<usize>> {
    (0u32..1 << n)
        .filter(|m| m.count_ones() as usize == k)
        .map(|m| (0..n).filter(|&i| m & (1 << i) != 0).collect())
        .collect()
}

fn permutations(n: usize) -> Vec<Vec<usize>> {
    fn go(rest: &mut Vec<usize>, acc: &mut Vec<usize>, out: &mut Vec<Vec<usize>>) {
        if rest.is_empty() {
            out.push(acc.clone());
            return;
        }
        for i in 0..rest.len() {
            let x = rest.remove(i);
            acc.push(x);
            go(rest, acc, out);
            acc.pop();
            rest.insert(i, x);
        }
    }
    let mut out = Vec::new();
    go(&mut (0..n).collect(), &mut Vec::new(), &mut out);
    out
}

fn induced_is_cycle(g: &Graph, s: &[usize]) -> bool {
    let h = g.induced_subgraph(s);
    s.len() >= 3 && h.regular_degree() == Some(2) && h.is_connected()
}

fn brute_isomorphic(a: &Graph, b: &Graph) -> bool {
    a.order() == b.order()
        && a.size() == b.size()
        && permutations(a.order()).iter().any(|p| a.is_isomorphism_to(b, p))
}

fn all_pairs(g: &Graph) -> Vec<Vec<Option<usize>>> {
    let n = g.order();
    let mut d = vec![vec![None; n]; n];
    for (s, row) in d.iter_mut().enumerate() {
        row[s] = Some(0);
        let mut q = VecDeque::from([s]);
        while let Some(u) = q.pop_front() {
            for &w in g.neighbors(u) {
                if row[w].is_none() {
                    row[w] = Some(row[u].unwrap() + 1);
                    q.push_back(w);
                }
            }
        }
    }
    d
}

fn brute_girth(g: &Graph) -> Option<usize> {
    g.edges()
        .filter_map(|(u, v)| {
            let rest: Vec<(usize, usize)> = g.edges().filter(|&e| e != (u, v)).collect();
            let h = Graph::from_edges(g.order(), rest).unwrap();
            all_pairs(&h)[u][v].map(|d| d + 1)
        })
        .min()
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(64))]

    #[test]
    fn compose_is_associative_with_inverses(
        (a, b, c) in (1usize..12).prop_flat_map(|n| (arb_perm(n), arb_perm(n), arb_perm(n)))
    ) {
        prop_assert_eq!(a.compose(&b).compose(&c), a.compose(&b.compose(&c)));
        prop_assert!(a.compose(&a.inverse()).is_identity());
        prop_assert_eq!(a.compose(&b).inverse(), b.inverse().compose(&a.inverse()));
        prop_assert_eq!(a.compose(&b).apply(b.inverse().apply(0)), a.apply(0));
    }

    #[test]
    fn order_matches_powers(p in (1usize..10).prop_flat_map(arb_perm)) {
        let k = p.order();
        let mut q = Permutation::identity(p.degree());
        for i in 1..=k {
            q = q.compose(&p);
            prop_assert_eq!(q.is_identity(), i == k);
        }
    }

    #[test]
    fn graph_invariants(g in arb_graph(10)) {
        let degree_sum: usize = g.degree_sequence().iter().sum();
        prop_assert_eq!(degree_sum, 2 * g.size());
        let edges: Vec<(usize, usize)> = g.edges().collect();
        prop_assert!(edges.windows(2).all(|w| w[0] < w[1]));
        prop_assert!(edges.iter().all(|&(u, v)| u < v && g.has_edge(v, u)));
        let all: Vec<usize> = (0..g.order()).collect();
        prop_assert_eq!(g.induced_subgraph(&all).edges().collect::<Vec<_>>(), edges);
    }

    #[test]
    fn holes_match_subset_enumeration(g in arb_graph(9)) {
        for k in 3..=g.order() {
            let found: BTreeSet<Vec<usize>> = holes(&g, k).iter().map(|h| h.vertex_set()).collect();
            prop_assert_eq!(found.len(), holes(&g, k).len());
            let brute: BTreeSet<Vec<usize>> =
                subsets(g.order(), k).into_iter().filter(|s| induced_is_cycle(&g, s)).collect();
            prop_assert_eq!(found, brute);
        }
    }

    #[test]
    fn copies_match_subset_enumeration(g in arb_graph(8)) {
        for t in [reference::complete(3), reference::k4(), reference::k22(), reference::cycle(5)] {
            let found: BTreeSet<Vec<usize>> =
                induced_copies(&g, &t).into_iter().map(|c| c.vertices).collect();
            let brute: BTreeSet<Vec<usize>> = subsets(g.order(), t.order())
                .into_iter()
                .filter(|s| brute_isomorphic(&t, &g.induced_subgraph(s)))
                .collect();
            prop_assert_eq!(found, brute);
        }
    }

    #[test]
    fn automorphism_order_matches_brute_force(g in arb_graph(7)) {
        let brute = permutations(g.order())
            .into_iter()
            .filter(|p| g.is_isomorphism_to(&g, p))
            .count() as u128;
        let group = automorphism_group(&g, &SearchOptions::default()).unwrap();
        prop_assert_eq!(group.order(), brute);
        for p in group.generators() {
            prop_assert!(g.is_automorphism(p));
        }
    }

    #[test]
    fn isomorphism_recovers_relabelling((g, p) in arb_graph(12).prop_flat_map(|g| {
        let n = g.order();
        (Just(g), arb_perm(n))
    })) {
        let edges: Vec<(usize, usize)> = g.edges().map(|(u, v)| (p.apply(u), p.apply(v))).collect();
        let h = Graph::from_edges(g.order(), edges).unwrap();
        let map = isomorphism(&g, &h, &SearchOptions::default()).unwrap();
        prop_assert!(map.is_some_and(|m| g.is_isomorphism_to(&h, &m)));
    }

    #[test]
    fn metrics_match_all_pairs(g in arb_graph(10)) {
        let d = all_pairs(&g);
        let connected = d.iter().flatten().all(Option::is_some);
        let brute_diameter = d.iter().flatten().flatten().max().copied();
        match diameter(&g) {
            Ok(x) => prop_assert_eq!(Some(x), brute_diameter.filter(|_| connected)),
            Err(_) => prop_assert!(!connected),
        }
        prop_assert_eq!(girth(&g).ok(), brute_girth(&g));
    }

    #[test]
    fn decomposition_is_a_homomorphism(i in 0usize..1008, j in 0usize..1008) {
        let table = &symmetry::group(construct::g()).unwrap().table;
        let (a, b) = (&table.elements()[i], &table.elements()[j]);
        let ab = a.perm.compose(&b.perm);
        let (da, db) = (a.decomposition.unwrap(), b.decomposition.unwrap());
        prop_assert_eq!(da.compose(&db).to_permutation().unwrap(), ab.clone());
        prop_assert_eq!(decompose(&ab), Some(da.compose(&db)));
        prop_assert!(construct::g().graph().is_automorphism(&ab));
    }

    #[test]
    fn vertex_labels_round_trip(v in 0usize..42) {
        let g = construct::g();
        prop_assert_eq!(g.parse_vertex(&g.name(v)).unwrap(), v);
        let p = g.vertex(v);
        prop_assert_eq!(p.to_string().parse::<OrderedPencil>().unwrap(), p);
        prop_assert_eq!(OrderedPencil::parse_short(&g.name(v)).unwrap(), p);
    }

    #[test]
    fn ordered_lines_round_trip(i in 0usize..42) {
        let o = OrderedLine::all()[i];
        prop_assert_eq!(o.to_string().parse::<OrderedLine>().unwrap(), o);
        prop_assert_eq!(o.index(), i);
    }

    #[test]
    fn six_hole_labels_round_trip(line in 0usize..7, d in 0usize..3, w in 1u8..=7) {
        let line = crate::fano::Line::all()[line];
        let center = crate::fano::Point::new(w).unwrap();
        prop_assume!(!line.contains(center));
        let label = SixHoleLabel { line, position: crate::fano::Position::ALL[d], center };
        prop_assert_eq!(parse_hole_label(&label.to_string()).unwrap(), label);
    }
}

/// The hemi-rhombicuboctahedron from coordinates: the rhombicuboctahedron
/// has vertices at all permutations of (±1, ±1, ±(1+√2)) with edges of
/// length 2; antipodal vertices are identified.
fn geometric_hemi_rhombicuboctahedron() -> Graph {
    let s = 1.0 + 2f64.sqrt();
    let mut verts: Vec<[f64; 3]> = Vec::new();
    for perm in [[0, 1, 2], [1, 2, 0], [2, 0, 1]] {
        for signs in 0..8 {
            let base = [1.0, 1.0, s];
            let mut v = [0.0; 3];
            for k in 0..3 {
                let sign = if signs & (1 << k) != 0 { -1.0 } else { 1.0 };
                v[perm[k]] = sign * base[k];
            }
            verts.push(v);
        }
    }
    assert_eq!(verts.len(), 24);
    let close = |a: [f64; 3], b: [f64; 3]| -> f64 { (0..3).map(|k| (a[k] - b[k]).powi(2)).sum() };
    let mut class = [usize::MAX; 24];
    let mut reps = Vec::new();
    for i in 0..24 {
        if class[i] == usize::MAX {
            let neg = [-verts[i][0], -verts[i][1], -verts[i][2]];
            let j = (0..24).find(|&j| close(verts[j], neg) < 1e-9).unwrap();
            class[i] = reps.len();
            class[j] = reps.len();
            reps.push(i);
        }
    }
    let mut edges = BTreeSet::new();
    for i in 0..24 {
        for j in i + 1..24 {
            if (close(verts[i], verts[j]) - 4.0).abs() < 1e-9 {
                let (a, b) = (class[i], class[j]);
                assert_ne!(a, b);
                edges.insert((a.min(b), a.max(b)));
            }
        }
    }
    Graph::from_edges(reps.len(), edges).unwrap()
}

#[test]
fn lambda_matches_geometric_model() {
    let geo = geometric_hemi_rhombicuboctahedron();
    assert_eq!((geo.order(), geo.size(), geo.regular_degree()), (12, 24, Some(4)));
    let lam = reference::lambda_hemi();
    let map = isomorphism(&geo, &lam, &SearchOptions::default()).unwrap();
    assert!(map.is_some_and(|m| geo.is_isomorphism_to(&lam, &m)));
}

#[test]
fn lambda_subscripts_map_onto_k4() {
    let lam = reference::lambda_hemi();
    let mut image = BTreeSet::new();
    for (u, v) in lam.edges() {
        let (i, j) = (u % 4, v % 4);
        assert_ne!(i, j, "edge inside a fibre of the subscript map");
        image.insert((i.min(j), i.max(j)));
    }
    assert_eq!(image.len(), 6);
}

#[test]
fn printed_triangles_at_1a() {
    // {1^a} ∪ each printed triangle of the neighbourhood is a tetrahedron.
    let g = construct::g();
    let census = crate::census::Census::build(g).unwrap();
    let labels = reference::lambda_labels();
    let table = crate::census::lambda_table();
    let at = |n: &str| table[labels.iter().position(|l| l == n).unwrap()].id();
    let a = g.parse_vertex("1^a").unwrap();
    for (tri, tet) in [
        (["c3", "a0", "b1"], "246"),
        (["c2", "a1", "b0"], "257"),
        (["c1", "a2", "b3"], "347"),
        (["c0", "a3", "b2"], "356"),
    ] {
        let t = census.tetrahedron(tet.parse().unwrap());
        for n in tri {
            assert!(t.vertices.contains(&at(n)), "{n} not in ⟨{tet}⟩");
        }
        assert!(t.vertices.contains(&a));
    }
}

#[test]
fn small_graph_oracles_on_named_graphs() {
    for (g, h) in [
        (reference::cuboctahedron(), 4usize),
        (reference::line_graph_of_cube(3), 4),
        (reference::k222(), 4),
    ] {
        let found: BTreeSet<Vec<usize>> = holes(&g, h).iter().map(|x| x.vertex_set()).collect();
        let brute: BTreeSet<Vec<usize>> =
            subsets(g.order(), h).into_iter().filter(|s| induced_is_cycle(&g, s)).collect();
        assert_eq!(found, brute);
    }
    let co = reference::cuboctahedron();
    let c6 = subsets(12, 6).into_iter().filter(|s| induced_is_cycle(&co, s)).count();
    assert_eq!(c6, 16);
}
