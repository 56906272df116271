use std::collections::hash_map::DefaultHasher;
use std::collections::{BTreeMap, BTreeSet};
use std::hash::{Hash, Hasher};

use serde::Serialize;

use super::{orbit, Graph, Permutation};
use crate::error::{Error, Result};

/// Largest group that [`AutomorphismGroup::elements`] will list by default.
pub const DEFAULT_ELEMENT_CAP: usize = 1_000_000;

/// Limits for the backtracking searches.
#[derive(Clone, Copy, Debug)]
pub struct SearchOptions {
    /// Maximum number of search-tree nodes before giving up.
    pub node_budget: u64,
}

impl Default for SearchOptions {
    fn default() -> Self {
        SearchOptions {
            node_budget: 20_000_000,
        }
    }
}

/// A permutation group on graph vertices, held as a stabilizer chain.
#[derive(Clone, Debug)]
pub struct AutomorphismGroup {
    degree: usize,
    generators: Vec<Permutation>,
    base: Vec<usize>,
    transversals: Vec<BTreeMap<usize, Permutation>>,
}

#[derive(Serialize)]
struct GroupSummary<'a> {
    order: String,
    base: &'a [usize],
    basic_orbit_sizes: Vec<usize>,
    generators: Vec<&'a [usize]>,
}

impl AutomorphismGroup {
    fn from_chain(degree: usize, base: Vec<usize>, levels: Vec<Vec<Permutation>>) -> Self {
        let mut transversals = Vec::with_capacity(base.len());
        for (i, &b) in base.iter().enumerate() {
            let gens: Vec<&Permutation> = levels[i..].iter().flatten().collect();
            let mut t = BTreeMap::new();
            t.insert(b, Permutation::identity(degree));
            let mut queue = vec![b];
            while let Some(x) = queue.pop() {
                let ux = t[&x].clone();
                for g in &gens {
                    let y = g.apply(x);
                    if let std::collections::btree_map::Entry::Vacant(e) = t.entry(y) {
                        e.insert(g.compose(&ux));
                        queue.push(y);
                    }
                }
            }
            transversals.push(t);
        }
        let generators = levels.into_iter().flatten().collect();
        AutomorphismGroup {
            degree,
            generators,
            base,
            transversals,
        }
    }

    pub fn degree(&self) -> usize {
        self.degree
    }

    pub fn generators(&self) -> &[Permutation] {
        &self.generators
    }

    pub fn base(&self) -> &[usize] {
        &self.base
    }

    pub fn basic_orbit_sizes(&self) -> Vec<usize> {
        self.transversals.iter().map(BTreeMap::len).collect()
    }

    pub fn order(&self) -> u128 {
        self.transversals.iter().map(|t| t.len() as u128).product()
    }

    /// Membership test by sifting through the stabilizer chain.
    pub fn contains(&self, p: &Permutation) -> bool {
        if p.degree() != self.degree {
            return false;
        }
        let mut g = p.clone();
        for (b, t) in self.base.iter().zip(&self.transversals) {
            match t.get(&g.apply(*b)) {
                Some(u) => g = u.inverse().compose(&g),
                None => return false,
            }
        }
        g.is_identity()
    }

    /// Every element, sorted, or `None` if the order exceeds `cap`.
    pub fn elements(&self, cap: usize) -> Option<Vec<Permutation>> {
        if self.order() > cap as u128 {
            return None;
        }
        let mut out = vec![Permutation::identity(self.degree)];
        for t in self.transversals.iter().rev() {
            let mut next = Vec::with_capacity(out.len() * t.len());
            for u in t.values() {
                for g in &out {
                    next.push(u.compose(g));
                }
            }
            out = next;
        }
        out.sort();
        Some(out)
    }

    /// Vertex orbits of the whole group, each sorted, ordered by first element.
    pub fn orbits(&self) -> Vec<Vec<usize>> {
        let mut seen = vec![false; self.degree];
        let mut out = Vec::new();
        for v in 0..self.degree {
            if seen[v] {
                continue;
            }
            let o = if self.generators.is_empty() {
                vec![v]
            } else {
                orbit(v, &self.generators)
            };
            for &x in &o {
                seen[x] = true;
            }
            out.push(o);
        }
        out
    }

    pub fn is_transitive(&self) -> bool {
        self.orbits().len() <= 1
    }

    pub fn to_json(&self) -> serde_json::Value {
        serde_json::to_value(GroupSummary {
            order: self.order().to_string(),
            base: &self.base,
            basic_orbit_sizes: self.basic_orbit_sizes(),
            generators: self.generators.iter().map(Permutation::images).collect(),
        })
        .expect("group summary serializes")
    }
}

/// Replaces arbitrary labels by their ranks among `all`.
fn rank_labels(labels: &[usize], all: &BTreeSet<usize>) -> Vec<usize> {
    let index: BTreeMap<usize, usize> = all.iter().enumerate().map(|(i, &c)| (c, i)).collect();
    labels.iter().map(|c| index[c]).collect()
}

/// Equitable refinement with canonical class numbering. Returns a hash of the
/// refinement history that is invariant under relabelling of the vertices.
fn refine(g: &Graph, colors: &mut Vec<usize>) -> u64 {
    let mut hasher = DefaultHasher::new();
    let mut classes = colors.iter().collect::<BTreeSet<_>>().len();
    let n = g.order();
    loop {
        let sigs: Vec<(usize, Vec<usize>)> = (0..n)
            .map(|v| {
                let mut nb: Vec<usize> = g.neighbors(v).iter().map(|&w| colors[w]).collect();
                nb.sort_unstable();
                (colors[v], nb)
            })
            .collect();
        let mut counts: BTreeMap<&(usize, Vec<usize>), usize> = BTreeMap::new();
        for s in &sigs {
            *counts.entry(s).or_default() += 1;
        }
        for (s, c) in &counts {
            s.hash(&mut hasher);
            c.hash(&mut hasher);
        }
        let rank: BTreeMap<&(usize, Vec<usize>), usize> =
            counts.keys().enumerate().map(|(i, &s)| (s, i)).collect();
        let next: Vec<usize> = sigs.iter().map(|s| rank[s]).collect();
        let stable = counts.len() == classes;
        classes = counts.len();
        *colors = next;
        if stable {
            break;
        }
    }
    classes.hash(&mut hasher);
    hasher.finish()
}

fn individualize(colors: &[usize], v: usize) -> Vec<usize> {
    colors
        .iter()
        .enumerate()
        .map(|(w, &c)| 2 * c + usize::from(w != v))
        .collect()
}

/// First non-singleton colour class, sorted.
fn target_cell(colors: &[usize]) -> Option<Vec<usize>> {
    let mut sizes = vec![0usize; colors.len()];
    for &c in colors {
        sizes[c] += 1;
    }
    let c = sizes.iter().position(|&s| s > 1)?;
    Some((0..colors.len()).filter(|&v| colors[v] == c).collect())
}

struct Level {
    colors: Vec<usize>,
    cell: Vec<usize>,
}

/// The leftmost branch of the search tree of the reference graph.
struct Path {
    traces: Vec<u64>,
    levels: Vec<Level>,
    leaf: Vec<usize>,
}

impl Path {
    fn build(g: &Graph, init: &[usize]) -> Path {
        let mut colors = init.to_vec();
        let mut traces = vec![refine(g, &mut colors)];
        let mut levels = Vec::new();
        while let Some(cell) = target_cell(&colors) {
            let mut child = individualize(&colors, cell[0]);
            traces.push(refine(g, &mut child));
            levels.push(Level { colors, cell });
            colors = child;
        }
        Path {
            traces,
            levels,
            leaf: colors,
        }
    }

    fn base(&self) -> Vec<usize> {
        self.levels.iter().map(|l| l.cell[0]).collect()
    }

    /// Map from reference vertices to target vertices given a target leaf.
    fn map_to(&self, leaf: &[usize]) -> Vec<usize> {
        let mut inv = vec![0; leaf.len()];
        for (v, &c) in leaf.iter().enumerate() {
            inv[c] = v;
        }
        self.leaf.iter().map(|&c| inv[c]).collect()
    }
}

struct Search<'a> {
    reference: &'a Graph,
    ref_init: &'a [usize],
    target: &'a Graph,
    target_init: &'a [usize],
    path: &'a Path,
    nodes: u64,
    budget: u64,
}

impl Search<'_> {
    fn tick(&mut self) -> Result<()> {
        self.nodes += 1;
        if self.nodes > self.budget {
            Err(Error::SearchBudget(self.budget))
        } else {
            Ok(())
        }
    }

    fn accept(&self, map: &[usize]) -> bool {
        self.reference.is_isomorphism_to(self.target, map)
            && (0..map.len()).all(|v| self.ref_init[v] == self.target_init[map[v]])
    }

    /// Looks for a leaf below `colors` (at `depth`) that yields an isomorphism.
    fn find_leaf(&mut self, colors: Vec<usize>, depth: usize) -> Result<Option<Vec<usize>>> {
        let Some(cell) = target_cell(&colors) else {
            let map = self.path.map_to(&colors);
            return Ok(self.accept(&map).then_some(map));
        };
        if depth >= self.path.levels.len() {
            return Ok(None);
        }
        for v in cell {
            self.tick()?;
            let mut child = individualize(&colors, v);
            if refine(self.target, &mut child) != self.path.traces[depth + 1] {
                continue;
            }
            if let Some(map) = self.find_leaf(child, depth + 1)? {
                return Ok(Some(map));
            }
        }
        Ok(None)
    }
}

pub fn automorphism_group(g: &Graph, opts: &SearchOptions) -> Result<AutomorphismGroup> {
    automorphism_group_colored(g, &vec![0; g.order()], opts)
}

/// Automorphisms preserving the vertex colouring `colors` (any labels).
pub fn automorphism_group_colored(
    g: &Graph,
    colors: &[usize],
    opts: &SearchOptions,
) -> Result<AutomorphismGroup> {
    let n = g.order();
    if colors.len() != n {
        return Err(Error::Unsupported(format!(
            "{} colours for {n} vertices",
            colors.len()
        )));
    }
    let init = rank_labels(colors, &colors.iter().copied().collect());
    let path = Path::build(g, &init);
    let base = path.base();
    let mut search = Search {
        reference: g,
        ref_init: &init,
        target: g,
        target_init: &init,
        path: &path,
        nodes: 0,
        budget: opts.node_budget,
    };
    let mut levels: Vec<Vec<Permutation>> = vec![Vec::new(); base.len()];
    for i in (0..base.len()).rev() {
        let mut gens: Vec<Permutation> = levels[i..].iter().flatten().cloned().collect();
        let mut known: BTreeSet<usize> = orbit_or_point(base[i], &gens);
        for &w in &path.levels[i].cell {
            if known.contains(&w) {
                continue;
            }
            search.tick()?;
            let mut child = individualize(&path.levels[i].colors, w);
            if refine(g, &mut child) != path.traces[i + 1] {
                continue;
            }
            if let Some(map) = search.find_leaf(child, i + 1)? {
                let p = Permutation::from_images(map)?;
                gens.push(p.clone());
                levels[i].push(p);
                known = orbit_or_point(base[i], &gens);
            }
        }
    }
    Ok(AutomorphismGroup::from_chain(n, base, levels))
}

fn orbit_or_point(x: usize, gens: &[Permutation]) -> BTreeSet<usize> {
    if gens.is_empty() {
        BTreeSet::from([x])
    } else {
        orbit(x, gens).into_iter().collect()
    }
}

/// An isomorphism from `a` to `b`, if one exists.
pub fn isomorphism(a: &Graph, b: &Graph, opts: &SearchOptions) -> Result<Option<Vec<usize>>> {
    isomorphism_colored(a, &vec![0; a.order()], b, &vec![0; b.order()], opts)
}

/// A colour-preserving isomorphism from `a` to `b`; colours are compared by label.
pub fn isomorphism_colored(
    a: &Graph,
    colors_a: &[usize],
    b: &Graph,
    colors_b: &[usize],
    opts: &SearchOptions,
) -> Result<Option<Vec<usize>>> {
    if a.order() != b.order() || a.size() != b.size() || a.degree_sequence() != b.degree_sequence()
    {
        return Ok(None);
    }
    let mut ca = colors_a.to_vec();
    let mut cb = colors_b.to_vec();
    ca.sort_unstable();
    cb.sort_unstable();
    if ca != cb {
        return Ok(None);
    }
    let labels: BTreeSet<usize> = colors_a.iter().copied().collect();
    let init_a = rank_labels(colors_a, &labels);
    let init_b = rank_labels(colors_b, &labels);
    let path = Path::build(a, &init_a);
    let mut root = init_b.clone();
    if refine(b, &mut root) != path.traces[0] {
        return Ok(None);
    }
    let mut search = Search {
        reference: a,
        ref_init: &init_a,
        target: b,
        target_init: &init_b,
        path: &path,
        nodes: 0,
        budget: opts.node_budget,
    };
    search.find_leaf(root, 0)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::graph::reference;

    fn order(g: &Graph) -> u128 {
        automorphism_group(g, &SearchOptions::default())
            .unwrap()
            .order()
    }

    #[test]
    fn classical_orders() {
        assert_eq!(order(&reference::complete(4)), 24);
        assert_eq!(order(&reference::cycle(7)), 14);
        assert_eq!(order(&reference::k222()), 48);
        assert_eq!(order(&reference::cuboctahedron()), 48);
        let petersen = Graph::from_fn(10, |u, v| {
            let s = |x: usize| {
                let mut k = 0;
                let mut pair = (0, 0);
                for a in 0..5 {
                    for b in a + 1..5 {
                        if k == x {
                            pair = (a, b);
                        }
                        k += 1;
                    }
                }
                pair
            };
            let (a, b) = s(u);
            let (c, d) = s(v);
            a != c && a != d && b != c && b != d
        });
        assert_eq!(order(&petersen), 120);
    }

    #[test]
    fn elements_match_order_and_membership() {
        let g = reference::cycle(6);
        let grp = automorphism_group(&g, &SearchOptions::default()).unwrap();
        let els = grp.elements(100).unwrap();
        assert_eq!(els.len(), 12);
        assert!(els.iter().all(|p| g.is_automorphism(p) && grp.contains(p)));
        let bad = Permutation::from_images(vec![1, 0, 2, 3, 4, 5]).unwrap();
        assert!(!grp.contains(&bad));
    }

    #[test]
    fn colored_stabilizer() {
        let g = reference::complete(4);
        let grp =
            automorphism_group_colored(&g, &[1, 0, 0, 0], &SearchOptions::default()).unwrap();
        assert_eq!(grp.order(), 6);
    }

    #[test]
    fn isomorphism_between_relabelled_graphs() {
        let g = reference::cuboctahedron();
        let perm: Vec<usize> = (0..12).map(|i| (i * 5) % 12).collect();
        let h = Graph::from_fn(12, |u, v| g.has_edge(perm[u], perm[v]));
        let map = isomorphism(&g, &h, &SearchOptions::default())
            .unwrap()
            .unwrap();
        assert!(g.is_isomorphism_to(&h, &map));
        assert!(isomorphism(&g, &reference::line_graph_of_cube(3), &SearchOptions::default())
            .unwrap()
            .is_some());
        assert!(isomorphism(&reference::cycle(6), &reference::complete(3), &SearchOptions::default())
            .unwrap()
            .is_none());
    }
}
