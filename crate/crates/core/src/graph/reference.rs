//! Small named graphs used as templates and comparison targets.

use super::{Graph, MultiGraph};

pub fn complete(n: usize) -> Graph {
    Graph::from_fn(n, |_, _| true)
}

pub fn k4() -> Graph {
    complete(4)
}

/// The octahedron K_{2,2,2}; vertices `2i` and `2i + 1` form part `i`.
pub fn k222() -> Graph {
    Graph::from_fn(6, |u, v| u / 2 != v / 2)
}

/// The 4-cycle K_{2,2} as the square 0-1-2-3.
pub fn k22() -> Graph {
    cycle(4)
}

pub fn cycle(k: usize) -> Graph {
    Graph::from_fn(k, |u, v| v == u + 1 || (u == 0 && v == k - 1))
}

/// Edges of the `d`-cube as `(u, bit)` with bit `bit` clear in `u`, sorted.
pub fn cube_edges(d: usize) -> Vec<(usize, usize)> {
    let mut out = Vec::new();
    for u in 0..1usize << d {
        for bit in 0..d {
            if u & (1 << bit) == 0 {
                out.push((u, bit));
            }
        }
    }
    out
}

/// Line graph of the `d`-cube; vertex `i` is `cube_edges(d)[i]`.
pub fn line_graph_of_cube(d: usize) -> Graph {
    let edges = cube_edges(d);
    let ends = |(u, bit): (usize, usize)| [u, u | (1 << bit)];
    Graph::from_fn(edges.len(), |i, j| {
        let (a, b) = (ends(edges[i]), ends(edges[j]));
        a.iter().any(|x| b.contains(x))
    })
}

pub fn line_graph_of_cube_labels(d: usize) -> Vec<String> {
    cube_edges(d)
        .into_iter()
        .map(|(u, bit)| format!("{:0d$b}-{:0d$b}", u, u | (1 << bit)))
        .collect()
}

/// The four great hexagons of `line_graph_of_cube(3)`, in cycle order: for
/// each main diagonal of the cube, the six edges meeting neither end.
pub fn cuboctahedron_great_hexagons() -> Vec<Vec<usize>> {
    let edges = cube_edges(3);
    let lg = line_graph_of_cube(3);
    let mut out = Vec::new();
    for u in 0..4usize {
        let w = u ^ 7;
        let set: Vec<usize> = (0..edges.len())
            .filter(|&i| {
                let (a, bit) = edges[i];
                let b = a | (1 << bit);
                ![a, b].iter().any(|&x| x == u || x == w)
            })
            .collect();
        let mut cycle = vec![set[0]];
        while cycle.len() < set.len() {
            let last = *cycle.last().unwrap();
            let next = set
                .iter()
                .copied()
                .find(|&x| lg.has_edge(last, x) && !cycle.contains(&x))
                .expect("hexagon is a cycle");
            cycle.push(next);
        }
        out.push(cycle);
    }
    out
}

/// Vertices of the cuboctahedron: the 12 integer vectors with one zero
/// coordinate and the others ±1, sorted.
pub fn cuboctahedron_coordinates() -> Vec<[i32; 3]> {
    let mut out = Vec::new();
    for zero in 0..3 {
        for s in [-1, 1] {
            for t in [-1, 1] {
                let mut v = [0; 3];
                let others: Vec<usize> = (0..3).filter(|&i| i != zero).collect();
                v[others[0]] = s;
                v[others[1]] = t;
                out.push(v);
            }
        }
    }
    out.sort();
    out
}

/// The cuboctahedron skeleton: vertices at squared distance 2 are adjacent.
pub fn cuboctahedron() -> Graph {
    let pts = cuboctahedron_coordinates();
    Graph::from_fn(pts.len(), |i, j| {
        (0..3).map(|k| (pts[i][k] - pts[j][k]).pow(2)).sum::<i32>() == 2
    })
}

/// Permutations of `0..4` in lexicographic order.
pub fn st4_permutations() -> Vec<[u8; 4]> {
    let mut out = Vec::with_capacity(24);
    for a in 0..4u8 {
        for b in 0..4u8 {
            for c in 0..4u8 {
                for d in 0..4u8 {
                    let p = [a, b, c, d];
                    if (0..4).all(|i| (i + 1..4).all(|j| p[i] != p[j])) {
                        out.push(p);
                    }
                }
            }
        }
    }
    out
}

/// Star Cayley graph on S4: swap position 0 with position 1, 2 or 3.
pub fn st4() -> Graph {
    let perms = st4_permutations();
    Graph::from_fn(24, |i, j| {
        (1..4).any(|k| {
            let mut p = perms[i];
            p.swap(0, k);
            p == perms[j]
        })
    })
}

pub fn st4_labels() -> Vec<String> {
    st4_permutations()
        .into_iter()
        .map(|p| p.iter().map(|x| char::from(b'0' + x)).collect())
        .collect()
}

/// K7 with every edge doubled.
pub fn two_k7() -> MultiGraph {
    let mut m = MultiGraph::new(7);
    for u in 0..7 {
        for v in u + 1..7 {
            m.add_edge(u, v, 2).expect("vertices in range");
        }
    }
    m
}

/// Labels `a0..a3, b0..b3, c0..c3` of the hemi-rhombicuboctahedron graph.
pub fn lambda_labels() -> Vec<String> {
    ["a", "b", "c"]
        .iter()
        .flat_map(|j| (0..4).map(move |i| format!("{j}{i}")))
        .collect()
}

/// The hemi-rhombicuboctahedron graph on `a0..a3, b0..b3, c0..c3`
/// (vertex `4j + i` is `j_i`), obtained by pulling back the neighbourhood
/// of `1^a` along [`crate::census::LAMBDA_TABLE`].
pub fn lambda_hemi() -> Graph {
    let table = crate::census::lambda_table();
    Graph::from_fn(12, |u, v| crate::construct::adjacent(table[u], table[v]))
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::graph::{isomorphism, SearchOptions};

    #[test]
    fn sizes() {
        assert_eq!(k222().size(), 12);
        assert_eq!(cuboctahedron().regular_degree(), Some(4));
        assert_eq!(cuboctahedron().size(), 24);
        let lq4 = line_graph_of_cube(4);
        assert_eq!(lq4.order(), 32);
        assert_eq!(lq4.regular_degree(), Some(6));
        let st = st4();
        assert_eq!(st.order(), 24);
        assert_eq!(st.regular_degree(), Some(3));
        let m = two_k7();
        assert!((0..7).all(|v| m.edge_ends(v) == 12));
        assert_eq!(m.size(), 42);
    }

    #[test]
    fn lambda_is_four_regular_on_twelve() {
        let l = lambda_hemi();
        assert_eq!(l.order(), 12);
        assert_eq!(l.regular_degree(), Some(4));
    }

    #[test]
    fn cube_line_graph_is_cuboctahedron() {
        let opts = SearchOptions::default();
        assert!(isomorphism(&line_graph_of_cube(3), &cuboctahedron(), &opts)
            .unwrap()
            .is_some());
    }
}
