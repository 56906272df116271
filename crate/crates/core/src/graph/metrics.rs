use std::collections::VecDeque;

use serde::Serialize;

use super::Graph;
use crate::error::{Error, Result};

/// Breadth-first distances from `source`; `None` marks unreachable vertices.
pub fn bfs_distances(g: &Graph, source: usize) -> Vec<Option<usize>> {
    let mut dist = vec![None; g.order()];
    dist[source] = Some(0);
    let mut queue = VecDeque::from([source]);
    while let Some(u) = queue.pop_front() {
        let du = dist[u].unwrap();
        for &v in g.neighbors(u) {
            if dist[v].is_none() {
                dist[v] = Some(du + 1);
                queue.push_back(v);
            }
        }
    }
    dist
}

/// Number of vertices at each distance from a fixed vertex.
#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct DistanceDistribution {
    pub counts: Vec<usize>,
}

impl DistanceDistribution {
    pub fn eccentricity(&self) -> usize {
        self.counts.len() - 1
    }

    pub fn total(&self) -> usize {
        self.counts.iter().sum()
    }
}

pub fn distance_distribution(g: &Graph, v: usize) -> Result<DistanceDistribution> {
    if v >= g.order() {
        return Err(Error::VertexOutOfRange {
            vertex: v,
            order: g.order(),
        });
    }
    let mut counts = Vec::new();
    for d in bfs_distances(g, v) {
        let d = d.ok_or(Error::Disconnected)?;
        if counts.len() <= d {
            counts.resize(d + 1, 0);
        }
        counts[d] += 1;
    }
    Ok(DistanceDistribution { counts })
}

pub fn eccentricity(g: &Graph, v: usize) -> Result<usize> {
    Ok(distance_distribution(g, v)?.eccentricity())
}

pub fn diameter(g: &Graph) -> Result<usize> {
    (0..g.order()).try_fold(0, |acc, v| Ok(acc.max(eccentricity(g, v)?)))
}

/// Length of a shortest cycle.
pub fn girth(g: &Graph) -> Result<usize> {
    let n = g.order();
    let mut best = usize::MAX;
    for s in 0..n {
        let mut dist = vec![usize::MAX; n];
        let mut parent = vec![usize::MAX; n];
        dist[s] = 0;
        let mut queue = VecDeque::from([s]);
        while let Some(u) = queue.pop_front() {
            if 2 * dist[u] + 1 >= best {
                break;
            }
            for &v in g.neighbors(u) {
                if dist[v] == usize::MAX {
                    dist[v] = dist[u] + 1;
                    parent[v] = u;
                    queue.push_back(v);
                } else if parent[u] != v {
                    best = best.min(dist[u] + dist[v] + 1);
                }
            }
        }
    }
    if best == usize::MAX {
        Err(Error::Acyclic)
    } else {
        Ok(best)
    }
}

/// For every vertex at maximum distance from `source`, the geodesic from
/// `source` to it that is lexicographically smallest under `key`. Paths are
/// returned in increasing key order of their endpoints.
pub fn lex_smallest_geodesics<K: Ord>(
    g: &Graph,
    source: usize,
    key: impl Fn(usize) -> K,
) -> Result<Vec<Vec<usize>>> {
    let from_source = bfs_distances(g, source);
    let ecc = from_source
        .iter()
        .map(|d| d.ok_or(Error::Disconnected))
        .try_fold(0, |acc, d| d.map(|d| acc.max(d)))?;
    let mut ends: Vec<usize> = (0..g.order())
        .filter(|&v| from_source[v] == Some(ecc))
        .collect();
    ends.sort_by_key(|&v| key(v));
    let mut paths = Vec::with_capacity(ends.len());
    for t in ends {
        let to_target = bfs_distances(g, t);
        let mut path = vec![source];
        let mut cur = source;
        while cur != t {
            let want = to_target[cur].unwrap() - 1;
            cur = g
                .neighbors(cur)
                .iter()
                .copied()
                .filter(|&w| to_target[w] == Some(want))
                .min_by_key(|&w| key(w))
                .unwrap();
            path.push(cur);
        }
        paths.push(path);
    }
    Ok(paths)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::graph::reference;

    #[test]
    fn cycle_metrics() {
        let c7 = reference::cycle(7);
        assert_eq!(girth(&c7).unwrap(), 7);
        assert_eq!(diameter(&c7).unwrap(), 3);
        assert_eq!(distance_distribution(&c7, 0).unwrap().counts, vec![1, 2, 2, 2]);
        let c8 = reference::cycle(8);
        assert_eq!(girth(&c8).unwrap(), 8);
    }

    #[test]
    fn girth_of_petersen_like_cases() {
        assert_eq!(girth(&reference::complete(4)).unwrap(), 3);
        assert_eq!(girth(&reference::line_graph_of_cube(3)).unwrap(), 3);
        let path = Graph::from_edges(3, [(0, 1), (1, 2)]).unwrap();
        assert!(matches!(girth(&path), Err(Error::Acyclic)));
    }

    #[test]
    fn disconnected_is_reported() {
        let g = Graph::from_edges(3, [(0, 1)]).unwrap();
        assert!(matches!(diameter(&g), Err(Error::Disconnected)));
    }

    #[test]
    fn lex_geodesics_on_cycle() {
        let c6 = reference::cycle(6);
        let paths = lex_smallest_geodesics(&c6, 0, |v| v).unwrap();
        assert_eq!(paths, vec![vec![0, 1, 2, 3]]);
    }
}
