//! Canonical forms for small graphs.
//!
//! The search is the classic individualization/refinement tree: color
//! refinement produces an isomorphism-invariant ordered partition, the first
//! non-singleton cell is split by individualizing each of its vertices in
//! turn, and every discrete leaf is scored by its packed upper-triangular
//! adjacency matrix. The smallest leaf code is the canonical form.
//!
//! Branches that are images of already-explored branches under a known
//! automorphism fixing the current prefix are skipped. Twin transpositions
//! (vertices with the same open or closed neighborhood) seed the generator
//! list, which is what keeps stars and brooms cheap; further generators are
//! harvested whenever two leaves produce the same code.

use alloc::vec;
use alloc::vec::Vec;

use crate::error::{Error, Result};
use crate::graph::Graph;

/// Default order bound for [`canonical_form`].
pub const CANON_LIMIT: usize = 16;

// Neighborhoods are packed into `u32` masks during the twin scan.
const HARD_LIMIT: usize = 32;

/// Canonical byte encoding; equal exactly for isomorphic graphs.
pub fn canonical_form(g: &Graph) -> Result<Vec<u8>> {
    canonical_form_bounded(g, CANON_LIMIT)
}

pub fn canonical_form_bounded(g: &Graph, limit: usize) -> Result<Vec<u8>> {
    Ok(canonical_labeling_bounded(g, limit)?.1)
}

/// Returns `(order, code)` where `order[i]` is the vertex placed at canonical
/// position `i`.
pub fn canonical_labeling(g: &Graph) -> Result<(Vec<usize>, Vec<u8>)> {
    canonical_labeling_bounded(g, CANON_LIMIT)
}

pub fn canonical_labeling_bounded(g: &Graph, limit: usize) -> Result<(Vec<usize>, Vec<u8>)> {
    let n = g.order();
    let limit = limit.min(HARD_LIMIT);
    if n > limit {
        return Err(Error::SizeBound {
            what: "graph order",
            size: n,
            limit,
        });
    }
    let mut search = Search::new(g);
    let unit = vec![(0..n).collect::<Vec<_>>()];
    let root = search.refine(unit);
    let mut prefix = Vec::new();
    search.explore(root, &mut prefix);
    let best = search.best.unwrap_or_else(|| (Vec::new(), encode(g, &[])));
    Ok(best)
}

/// The canonically relabeled copy of `g` together with its code.
pub fn canonical_graph(g: &Graph) -> Result<(Graph, Vec<u8>)> {
    canonical_graph_bounded(g, CANON_LIMIT)
}

pub fn canonical_graph_bounded(g: &Graph, limit: usize) -> Result<(Graph, Vec<u8>)> {
    let (order, code) = canonical_labeling_bounded(g, limit)?;
    let mut perm = vec![0; order.len()];
    for (pos, &v) in order.iter().enumerate() {
        perm[v] = pos;
    }
    Ok((g.relabel(&perm)?, code))
}

pub fn is_isomorphic(a: &Graph, b: &Graph) -> Result<bool> {
    if a.order() != b.order() || a.size() != b.size() {
        return Ok(false);
    }
    let mut da = a.degrees();
    let mut db = b.degrees();
    da.sort_unstable();
    db.sort_unstable();
    if da != db {
        return Ok(false);
    }
    Ok(canonical_form(a)? == canonical_form(b)?)
}

fn encode(g: &Graph, order: &[usize]) -> Vec<u8> {
    let n = order.len();
    let bits = n * n.saturating_sub(1) / 2;
    let mut out = vec![0u8; 1 + bits.div_ceil(8)];
    out[0] = n as u8;
    let mut k = 0;
    for i in 0..n {
        for j in (i + 1)..n {
            if g.has_edge(order[i], order[j]) {
                out[1 + k / 8] |= 0x80 >> (k % 8);
            }
            k += 1;
        }
    }
    out
}

type Partition = Vec<Vec<usize>>;

struct Search<'a> {
    g: &'a Graph,
    generators: Vec<Vec<usize>>,
    best: Option<(Vec<usize>, Vec<u8>)>,
}

impl<'a> Search<'a> {
    fn new(g: &'a Graph) -> Self {
        let n = g.order();
        let nbr_masks: Vec<u32> = (0..n)
            .map(|v| g.neighbors(v).iter().fold(0u32, |m, &w| m | (1 << w)))
            .collect();
        let mut generators = Vec::new();
        for u in 0..n {
            for v in (u + 1)..n {
                let strip = !((1u32 << u) | (1u32 << v));
                if nbr_masks[u] & strip == nbr_masks[v] & strip {
                    let mut perm: Vec<usize> = (0..n).collect();
                    perm.swap(u, v);
                    generators.push(perm);
                }
            }
        }
        Search {
            g,
            generators,
            best: None,
        }
    }

    /// Color refinement to the coarsest equitable partition finer than `p`,
    /// keeping cell order invariant under isomorphism.
    fn refine(&self, mut p: Partition) -> Partition {
        let n = self.g.order();
        let mut cell_of = vec![0usize; n];
        loop {
            for (ci, cell) in p.iter().enumerate() {
                for &v in cell {
                    cell_of[v] = ci;
                }
            }
            let cells = p.len();
            let mut next: Partition = Vec::with_capacity(cells);
            for cell in &p {
                if cell.len() == 1 {
                    next.push(cell.clone());
                    continue;
                }
                let mut keyed: Vec<(Vec<u8>, usize)> = cell
                    .iter()
                    .map(|&v| {
                        let mut counts = vec![0u8; cells];
                        for &w in self.g.neighbors(v) {
                            counts[cell_of[w]] += 1;
                        }
                        (counts, v)
                    })
                    .collect();
                keyed.sort();
                let mut start = 0;
                for i in 1..=keyed.len() {
                    if i == keyed.len() || keyed[i].0 != keyed[start].0 {
                        next.push(keyed[start..i].iter().map(|x| x.1).collect());
                        start = i;
                    }
                }
            }
            if next.len() == cells {
                return next;
            }
            p = next;
        }
    }

    fn explore(&mut self, p: Partition, prefix: &mut Vec<usize>) {
        let Some(target) = p.iter().position(|c| c.len() > 1) else {
            let order: Vec<usize> = p.iter().map(|c| c[0]).collect();
            self.visit_leaf(order);
            return;
        };
        let mut candidates = p[target].clone();
        candidates.sort_unstable();
        let mut tried: Vec<usize> = Vec::new();
        for &w in &candidates {
            if !tried.is_empty() && self.same_orbit_as_tried(prefix, &tried, w) {
                continue;
            }
            let mut child = Vec::with_capacity(p.len() + 1);
            child.extend_from_slice(&p[..target]);
            child.push(vec![w]);
            child.push(p[target].iter().copied().filter(|&x| x != w).collect());
            child.extend_from_slice(&p[target + 1..]);
            let child = self.refine(child);
            prefix.push(w);
            self.explore(child, prefix);
            prefix.pop();
            tried.push(w);
        }
    }

    fn visit_leaf(&mut self, order: Vec<usize>) {
        let code = encode(self.g, &order);
        match &self.best {
            None => self.best = Some((order, code)),
            Some((best_order, best_code)) => {
                if code == *best_code {
                    let mut gamma = vec![0; order.len()];
                    for (i, &v) in best_order.iter().enumerate() {
                        gamma[v] = order[i];
                    }
                    debug_assert!(self.is_automorphism(&gamma));
                    self.generators.push(gamma);
                } else if code < *best_code {
                    self.best = Some((order, code));
                }
            }
        }
    }

    fn is_automorphism(&self, gamma: &[usize]) -> bool {
        self.g.edges().iter().all(|&(u, v)| self.g.has_edge(gamma[u], gamma[v]))
    }

    /// Is `w` in the orbit of an already-tried vertex under the subgroup
    /// generated by known automorphisms that fix `prefix` pointwise?
    fn same_orbit_as_tried(&self, prefix: &[usize], tried: &[usize], w: usize) -> bool {
        let n = self.g.order();
        let mut parent: Vec<usize> = (0..n).collect();
        fn find(parent: &mut [usize], mut x: usize) -> usize {
            while parent[x] != x {
                parent[x] = parent[parent[x]];
                x = parent[x];
            }
            x
        }
        for gamma in &self.generators {
            if prefix.iter().any(|&x| gamma[x] != x) {
                continue;
            }
            for (v, &image) in gamma.iter().enumerate() {
                let (a, b) = (find(&mut parent, v), find(&mut parent, image));
                if a != b {
                    parent[a] = b;
                }
            }
        }
        let root = find(&mut parent, w);
        tried.iter().any(|&t| find(&mut parent, t) == root)
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn relabeled_paths_agree() {
        let a = Graph::path(4);
        let b = Graph::from_edges(4, &[(2, 0), (0, 3), (3, 1)]).unwrap();
        assert_eq!(canonical_form(&a).unwrap(), canonical_form(&b).unwrap());
    }

    #[test]
    fn path_and_star_differ() {
        assert_ne!(
            canonical_form(&Graph::path(4)).unwrap(),
            canonical_form(&Graph::star(4)).unwrap()
        );
    }

    #[test]
    fn canonical_graph_has_the_code() {
        let g = Graph::from_edges(5, &[(0, 4), (4, 2), (2, 1), (2, 3)]).unwrap();
        let (h, code) = canonical_graph(&g).unwrap();
        let identity: Vec<usize> = (0..5).collect();
        assert_eq!(encode(&h, &identity), code);
    }

    #[test]
    fn size_bound() {
        assert!(matches!(canonical_form(&Graph::path(17)), Err(Error::SizeBound { .. })));
        assert!(canonical_form_bounded(&Graph::path(17), 20).is_ok());
    }

    #[test]
    fn regular_graphs_are_distinguished() {
        // C6 versus two disjoint triangles: both 2-regular on six vertices.
        let c6 = Graph::cycle(6);
        let tt = Graph::from_edges(6, &[(0, 1), (1, 2), (2, 0), (3, 4), (4, 5), (5, 3)]).unwrap();
        assert_ne!(canonical_form(&c6).unwrap(), canonical_form(&tt).unwrap());
    }

    #[test]
    fn empty_and_single() {
        assert_eq!(canonical_form(&Graph::empty(0)).unwrap(), vec![0]);
        assert_eq!(canonical_form(&Graph::empty(1)).unwrap(), vec![1]);
    }
}
