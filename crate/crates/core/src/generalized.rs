//! Ordered pencils of σ-dimensional subspaces of the binary projective
//! space P(r−1, 2), with adjacency generalizing that of G.

use std::collections::{BTreeMap, BTreeSet, HashMap, VecDeque};

use serde::Serialize;

use crate::error::{Error, Result};
use crate::graph::{diameter, Graph};

/// Default bound on the size of the explored component.
pub const DEFAULT_COMPONENT_CAP: usize = 200_000;

fn rank(vs: &[u32]) -> usize {
    let mut basis: Vec<u32> = Vec::new();
    for &v in vs {
        let mut v = v;
        for &b in &basis {
            v = v.min(v ^ b);
        }
        if v != 0 {
            basis.push(v);
        }
    }
    basis.len()
}

fn span(vs: &[u32]) -> BTreeSet<u32> {
    let mut s = BTreeSet::from([0u32]);
    for &v in vs {
        let shifted: Vec<u32> = s.iter().map(|x| x ^ v).collect();
        s.extend(shifted);
    }
    s.remove(&0);
    s
}

/// The binary projective space P(r−1, 2) with its σ-dimensional subspaces.
#[derive(Clone, Debug)]
pub struct ProjectiveSpace {
    pub r: usize,
    pub sigma: usize,
    /// Each subspace as a sorted list of nonzero vectors.
    pub subspaces: Vec<Vec<u32>>,
    through: Vec<Vec<usize>>,
}

impl ProjectiveSpace {
    pub fn new(r: usize, sigma: usize) -> Result<Self> {
        if !(3..=5).contains(&r) || sigma == 0 || sigma + 1 >= r {
            return Err(Error::Unsupported(format!(
                "(r, sigma) = ({r}, {sigma}): need 3 <= r <= 5 and 0 < sigma < r - 1"
            )));
        }
        let n = (1u32 << r) - 1;
        let mut set: BTreeSet<Vec<u32>> = BTreeSet::new();
        let pts: Vec<u32> = (1..=n).collect();
        let mut chosen = Vec::with_capacity(sigma + 1);
        fn choose(
            pts: &[u32],
            k: usize,
            start: usize,
            chosen: &mut Vec<u32>,
            out: &mut BTreeSet<Vec<u32>>,
        ) {
            if chosen.len() == k {
                if rank(chosen) == k {
                    out.insert(span(chosen).into_iter().collect());
                }
                return;
            }
            for i in start..pts.len() {
                chosen.push(pts[i]);
                choose(pts, k, i + 1, chosen, out);
                chosen.pop();
            }
        }
        choose(&pts, sigma + 1, 0, &mut chosen, &mut set);
        let subspaces: Vec<Vec<u32>> = set.into_iter().collect();
        let through = (0..=n)
            .map(|p| {
                (0..subspaces.len())
                    .filter(|&i| p != 0 && subspaces[i].contains(&p))
                    .collect()
            })
            .collect();
        Ok(ProjectiveSpace {
            r,
            sigma,
            subspaces,
            through,
        })
    }

    pub fn points(&self) -> impl Iterator<Item = u32> {
        1..(1u32 << self.r)
    }

    pub fn through(&self, p: u32) -> &[usize] {
        &self.through[p as usize]
    }

    /// Number of ordered pencils, if it fits.
    pub fn pencil_count(&self) -> Option<u128> {
        let k = self.through(1).len() as u128;
        (1..=k)
            .try_fold(1u128, |acc, i| acc.checked_mul(i))
            .and_then(|f| f.checked_mul((1u128 << self.r) - 1))
    }

    fn meet_without(&self, s: usize, p: u32, t: usize, q: u32) -> Vec<u32> {
        self.subspaces[s]
            .iter()
            .copied()
            .filter(|&x| x != p && x != q && self.subspaces[t].contains(&x))
            .collect()
    }

    /// Neighbours of an ordered pencil `(p, order)`.
    pub fn neighbors(&self, v: &Pencil) -> Vec<Pencil> {
        let mut out = Vec::new();
        for q in self.points().filter(|&q| q != v.point) {
            let cand: Vec<Vec<(usize, u32)>> = v
                .order
                .iter()
                .map(|&s| {
                    self.through(q)
                        .iter()
                        .filter_map(|&t| {
                            let m = self.meet_without(s, v.point, t, q);
                            (m.len() == 1).then(|| (t, m[0]))
                        })
                        .collect()
                })
                .collect();
            let mut acc = Vec::with_capacity(v.order.len());
            let mut inter = Vec::with_capacity(v.order.len());
            self.extend(q, &cand, &mut acc, &mut inter, &mut out);
        }
        out
    }

    fn extend(
        &self,
        q: u32,
        cand: &[Vec<(usize, u32)>],
        acc: &mut Vec<usize>,
        inter: &mut Vec<u32>,
        out: &mut Vec<Pencil>,
    ) {
        let k = acc.len();
        if k == cand.len() {
            let distinct: BTreeSet<u32> = inter.iter().copied().collect();
            if rank(inter) == self.r - 1 && distinct == span(inter) {
                out.push(Pencil {
                    point: q,
                    order: acc.clone(),
                });
            }
            return;
        }
        for &(t, x) in &cand[k] {
            if acc.contains(&t) {
                continue;
            }
            acc.push(t);
            inter.push(x);
            self.extend(q, cand, acc, inter, out);
            acc.pop();
            inter.pop();
        }
    }

    /// The lexicographically smallest ordered pencil.
    pub fn first_pencil(&self) -> Pencil {
        Pencil {
            point: 1,
            order: self.through(1).to_vec(),
        }
    }

    pub fn pencil_name(&self, v: &Pencil) -> String {
        let parts: Vec<String> = v
            .order
            .iter()
            .map(|&s| {
                let pts: Vec<String> = self.subspaces[s]
                    .iter()
                    .filter(|&&x| x != v.point)
                    .map(u32::to_string)
                    .collect();
                pts.join(",")
            })
            .collect();
        format!("{}:({})", v.point, parts.join(" | "))
    }
}

/// A base point with an ordering of the subspaces through it (by index).
#[derive(Clone, Debug, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct Pencil {
    pub point: u32,
    pub order: Vec<usize>,
}

/// Statistics of the explored component.
#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct GeneralizedReport {
    pub r: usize,
    pub sigma: usize,
    pub subspaces: usize,
    pub subspaces_per_point: usize,
    pub ordered_pencils: Option<u128>,
    pub component_order: usize,
    pub component_size: usize,
    /// Degree to number of vertices with that degree.
    pub degree_counts: BTreeMap<usize, usize>,
    pub diameter: Option<usize>,
    pub truncated: bool,
}

/// The component of the smallest ordered pencil.
#[derive(Clone, Debug)]
pub struct GeneralizedGraph {
    pub graph: Graph,
    pub names: Vec<String>,
    pub report: GeneralizedReport,
}

/// Explores the component of the smallest ordered pencil breadth first,
/// stopping once more than `cap` vertices are found.
pub fn generalized_build(r: usize, sigma: usize, cap: usize) -> Result<GeneralizedGraph> {
    let space = ProjectiveSpace::new(r, sigma)?;
    let start = space.first_pencil();
    let mut ids: HashMap<Pencil, usize> = HashMap::from([(start.clone(), 0)]);
    let mut verts = vec![start];
    let mut edges = Vec::new();
    let mut queue = VecDeque::from([0usize]);
    let mut truncated = false;
    while let Some(u) = queue.pop_front() {
        if truncated {
            break;
        }
        for w in space.neighbors(&verts[u].clone()) {
            let id = match ids.get(&w) {
                Some(&id) => id,
                None => {
                    if verts.len() >= cap {
                        truncated = true;
                        break;
                    }
                    let id = verts.len();
                    ids.insert(w.clone(), id);
                    verts.push(w);
                    queue.push_back(id);
                    id
                }
            };
            if u < id {
                edges.push((u, id));
            }
        }
    }
    if truncated {
        edges.retain(|&(a, b)| a < verts.len() && b < verts.len());
    }
    let graph = Graph::from_edges(verts.len(), edges)?;
    let mut degree_counts = BTreeMap::new();
    for d in graph.degree_sequence() {
        *degree_counts.entry(d).or_insert(0) += 1;
    }
    let diameter = (!truncated && graph.order() <= 5000)
        .then(|| diameter(&graph).ok())
        .flatten();
    let report = GeneralizedReport {
        r,
        sigma,
        subspaces: space.subspaces.len(),
        subspaces_per_point: space.through(1).len(),
        ordered_pencils: space.pencil_count(),
        component_order: graph.order(),
        component_size: graph.size(),
        degree_counts,
        diameter,
        truncated,
    };
    let names = verts.iter().map(|v| space.pencil_name(v)).collect();
    Ok(GeneralizedGraph {
        graph,
        names,
        report,
    })
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn fano_case_matches_g() {
        let out = generalized_build(3, 1, DEFAULT_COMPONENT_CAP).unwrap();
        assert_eq!(out.report.component_order, 42);
        assert_eq!(out.report.component_size, 252);
        assert_eq!(out.report.degree_counts, BTreeMap::from([(12, 42)]));
        assert_eq!(out.report.diameter, Some(3));
        assert_eq!(out.report.ordered_pencils, Some(42));
    }

    #[test]
    fn rejects_unsupported_parameters() {
        assert!(generalized_build(2, 1, 10).is_err());
        assert!(generalized_build(4, 3, 10).is_err());
        assert!(generalized_build(6, 1, 10).is_err());
        assert!(generalized_build(4, 0, 10).is_err());
    }

    #[test]
    fn subspace_counts() {
        let s = ProjectiveSpace::new(4, 1).unwrap();
        assert_eq!(s.subspaces.len(), 35);
        assert_eq!(s.through(1).len(), 7);
        let s = ProjectiveSpace::new(4, 2).unwrap();
        assert_eq!(s.subspaces.len(), 15);
        assert_eq!(s.through(1).len(), 7);
    }

    #[test]
    fn cap_truncates() {
        let out = generalized_build(4, 1, 100).unwrap();
        assert!(out.report.truncated);
        assert_eq!(out.report.component_order, 100);
    }
}
