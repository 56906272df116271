use std::collections::BTreeMap;

use serde::Serialize;

use super::Graph;

/// An induced copy of a template graph inside a host graph.
#[derive(Clone, Debug, PartialEq, Eq, PartialOrd, Ord, Hash, Serialize)]
pub struct SubgraphCopy {
    /// Host vertices of the copy, sorted.
    pub vertices: Vec<usize>,
    /// `embedding[i]` is the host vertex playing template vertex `i`; the
    /// lexicographically smallest such embedding is kept.
    pub embedding: Vec<usize>,
}

/// All induced copies of `template` in `host`, one per vertex set, sorted.
pub fn induced_copies(host: &Graph, template: &Graph) -> Vec<SubgraphCopy> {
    let t = template.order();
    if t == 0 || t > host.order() {
        return Vec::new();
    }
    let order = search_order(template);
    let mut anchor = vec![None; t];
    for (pos, &tv) in order.iter().enumerate() {
        anchor[tv] = order[..pos]
            .iter()
            .copied()
            .find(|&u| template.has_edge(u, tv));
    }
    let mut found: BTreeMap<Vec<usize>, Vec<usize>> = BTreeMap::new();
    let mut image = vec![usize::MAX; t];
    let mut used = vec![false; host.order()];
    place(host, template, &order, &anchor, 0, &mut image, &mut used, &mut found);
    found
        .into_iter()
        .map(|(vertices, embedding)| SubgraphCopy {
            vertices,
            embedding,
        })
        .collect()
}

fn search_order(template: &Graph) -> Vec<usize> {
    let t = template.order();
    let mut seen = vec![false; t];
    let mut order = Vec::with_capacity(t);
    while order.len() < t {
        let start = (0..t).find(|&v| !seen[v]).unwrap();
        seen[start] = true;
        let mut i = order.len();
        order.push(start);
        while i < order.len() {
            for &w in template.neighbors(order[i]) {
                if !seen[w] {
                    seen[w] = true;
                    order.push(w);
                }
            }
            i += 1;
        }
    }
    order
}

#[allow(clippy::too_many_arguments)]
fn place(
    host: &Graph,
    template: &Graph,
    order: &[usize],
    anchor: &[Option<usize>],
    pos: usize,
    image: &mut [usize],
    used: &mut [bool],
    found: &mut BTreeMap<Vec<usize>, Vec<usize>>,
) {
    if pos == order.len() {
        let mut key = image.to_vec();
        key.sort_unstable();
        let entry = found.entry(key).or_insert_with(|| image.to_vec());
        if image[..] < entry[..] {
            entry.copy_from_slice(image);
        }
        return;
    }
    let tv = order[pos];
    let candidates: Vec<usize> = match anchor[tv] {
        Some(a) => host.neighbors(image[a]).to_vec(),
        None => (0..host.order()).collect(),
    };
    for c in candidates {
        if used[c] || host.degree(c) < template.degree(tv) {
            continue;
        }
        let consistent = order[..pos]
            .iter()
            .all(|&u| host.has_edge(image[u], c) == template.has_edge(u, tv));
        if !consistent {
            continue;
        }
        image[tv] = c;
        used[c] = true;
        place(host, template, order, anchor, pos + 1, image, used, found);
        used[c] = false;
    }
    image[tv] = usize::MAX;
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::graph::reference;

    #[test]
    fn triangles_in_k5() {
        let copies = induced_copies(&reference::complete(5), &reference::complete(3));
        assert_eq!(copies.len(), 10);
        assert_eq!(copies[0].embedding, vec![0, 1, 2]);
    }

    #[test]
    fn induced_paths_in_cycle() {
        let path = Graph::from_edges(3, [(0, 1), (1, 2)]).unwrap();
        assert_eq!(induced_copies(&reference::cycle(6), &path).len(), 6);
        assert_eq!(induced_copies(&reference::complete(4), &path).len(), 0);
    }
}
