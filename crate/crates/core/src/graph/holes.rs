use std::fmt;

use serde::Serialize;

use super::Graph;

/// A chordless cycle, stored in canonical rotation and reflection: it starts
/// at its smallest vertex and the second entry is smaller than the last.
#[derive(Clone, Debug, PartialEq, Eq, PartialOrd, Ord, Hash, Serialize)]
pub struct Hole {
    cycle: Vec<usize>,
}

impl Hole {
    /// Canonical form of a cyclic vertex sequence. The sequence is not checked
    /// against any graph.
    pub fn from_cycle(seq: &[usize]) -> Hole {
        let k = seq.len();
        if k < 3 {
            return Hole { cycle: seq.to_vec() };
        }
        let start = (0..k).min_by_key(|&i| seq[i]).unwrap();
        let forward: Vec<usize> = (0..k).map(|i| seq[(start + i) % k]).collect();
        let backward: Vec<usize> = (0..k).map(|i| seq[(start + k - i) % k]).collect();
        Hole {
            cycle: forward.min(backward),
        }
    }

    pub fn vertices(&self) -> &[usize] {
        &self.cycle
    }

    pub fn len(&self) -> usize {
        self.cycle.len()
    }

    pub fn is_empty(&self) -> bool {
        self.cycle.is_empty()
    }

    pub fn vertex_set(&self) -> Vec<usize> {
        let mut v = self.cycle.clone();
        v.sort_unstable();
        v
    }

    /// Cycle edges as `(min, max)` pairs, in cycle order.
    pub fn edges(&self) -> Vec<(usize, usize)> {
        let k = self.cycle.len();
        (0..k)
            .map(|i| {
                let (a, b) = (self.cycle[i], self.cycle[(i + 1) % k]);
                (a.min(b), a.max(b))
            })
            .collect()
    }

    /// Whether this is a chordless cycle of `g`.
    pub fn is_hole_of(&self, g: &Graph) -> bool {
        let k = self.cycle.len();
        if k < 3 || self.vertex_set().windows(2).any(|w| w[0] == w[1]) {
            return false;
        }
        for i in 0..k {
            for j in i + 1..k {
                let consecutive = j == i + 1 || (i == 0 && j == k - 1);
                if g.has_edge(self.cycle[i], self.cycle[j]) != consecutive {
                    return false;
                }
            }
        }
        true
    }
}

impl fmt::Display for Hole {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "(")?;
        for (i, v) in self.cycle.iter().enumerate() {
            if i > 0 {
                write!(f, " ")?;
            }
            write!(f, "{v}")?;
        }
        write!(f, ")")
    }
}

/// All chordless cycles of length `k` (triangles when `k == 3`), sorted.
pub fn holes(g: &Graph, k: usize) -> Vec<Hole> {
    let mut out = Vec::new();
    if k < 3 {
        return out;
    }
    let mut path = Vec::with_capacity(k);
    for s in 0..g.order() {
        path.clear();
        path.push(s);
        extend(g, k, &mut path, &mut out);
    }
    out.sort();
    out
}

fn extend(g: &Graph, k: usize, path: &mut Vec<usize>, out: &mut Vec<Hole>) {
    let s = path[0];
    let last = *path.last().unwrap();
    let j = path.len();
    for &w in g.neighbors(last) {
        if w <= s || path.contains(&w) {
            continue;
        }
        if j == k - 1 && w <= path[1] {
            continue;
        }
        let closes = j == k - 1;
        if j >= 2 && g.has_edge(w, s) != closes {
            continue;
        }
        if j >= 2 && path[1..j - 1].iter().any(|&x| g.has_edge(w, x)) {
            continue;
        }
        path.push(w);
        if closes {
            out.push(Hole { cycle: path.clone() });
        } else {
            extend(g, k, path, out);
        }
        path.pop();
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::graph::reference;

    #[test]
    fn canonical_form() {
        let h = Hole::from_cycle(&[5, 2, 9, 7]);
        assert_eq!(h.vertices(), &[2, 5, 7, 9]);
        let h = Hole::from_cycle(&[5, 9, 2, 7]);
        assert_eq!(h.vertices(), &[2, 7, 5, 9]);
    }

    #[test]
    fn counts_on_small_graphs() {
        assert_eq!(holes(&reference::cycle(6), 6).len(), 1);
        assert_eq!(holes(&reference::cycle(6), 4).len(), 0);
        assert_eq!(holes(&reference::complete(5), 3).len(), 10);
        assert_eq!(holes(&reference::complete(5), 4).len(), 0);
        // 2x2x2 cube: six faces are the only induced 4-cycles.
        let cube = Graph::from_fn(8, |u, v| (u ^ v).count_ones() == 1);
        assert_eq!(holes(&cube, 4).len(), 6);
        assert_eq!(holes(&cube, 6).len(), 4);
    }

    #[test]
    fn found_holes_are_holes() {
        let g = reference::cuboctahedron();
        for k in 3..=6 {
            for h in holes(&g, k) {
                assert!(h.is_hole_of(&g));
                assert_eq!(Hole::from_cycle(h.vertices()), h);
            }
        }
    }
}
