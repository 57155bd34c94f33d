//! Labeled simple undirected graphs and the structural queries the rest of
//! the crate is built on.
//!
//! Vertices are dense labels `0..n`. Adjacency is stored as sorted neighbor
//! lists; the edge set is derived from them, so the two views can never
//! disagree.

use alloc::collections::VecDeque;
use alloc::format;
use alloc::vec;
use alloc::vec::Vec;

use crate::error::{Error, Result};

/// Largest graph accepted by [`Graph::matching_number`].
pub const MATCHING_LIMIT: usize = 20;

#[derive(Clone, Debug, Default, PartialEq, Eq, Hash)]
pub struct Graph {
    adj: Vec<Vec<usize>>,
    edges: usize,
}

/// Coarse classification of a connected graph by its cyclomatic number.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash)]
pub enum GraphKind {
    Tree,
    Unicyclic,
    Other,
}

/// A two-coloring normalized so that `class_a` is the smaller class.
///
/// When both classes have the same size, `class_a` is the one holding the
/// smallest vertex label.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Bipartition {
    pub class_a: Vec<usize>,
    pub class_b: Vec<usize>,
}

impl Bipartition {
    pub fn p(&self) -> usize {
        self.class_a.len()
    }

    pub fn q(&self) -> usize {
        self.class_b.len()
    }

    pub fn sizes(&self) -> (usize, usize) {
        (self.p(), self.q())
    }
}

impl Graph {
    /// The edgeless graph on `n` vertices.
    pub fn empty(n: usize) -> Self {
        Graph {
            adj: vec![Vec::new(); n],
            edges: 0,
        }
    }

    pub fn from_edges(n: usize, edges: &[(usize, usize)]) -> Result<Self> {
        let mut g = Graph::empty(n);
        for &(u, v) in edges {
            g.add_edge(u, v)?;
        }
        Ok(g)
    }

    pub fn path(n: usize) -> Self {
        let mut g = Graph::empty(n);
        for v in 1..n {
            g.insert(v - 1, v);
        }
        g
    }

    pub fn cycle(n: usize) -> Self {
        let mut g = Graph::path(n);
        if n >= 3 {
            g.insert(n - 1, 0);
        }
        g
    }

    pub fn star(n: usize) -> Self {
        let mut g = Graph::empty(n);
        for v in 1..n {
            g.insert(0, v);
        }
        g
    }

    pub fn order(&self) -> usize {
        self.adj.len()
    }

    pub fn size(&self) -> usize {
        self.edges
    }

    pub fn degree(&self, v: usize) -> usize {
        self.adj[v].len()
    }

    pub fn degrees(&self) -> Vec<usize> {
        self.adj.iter().map(Vec::len).collect()
    }

    pub fn neighbors(&self, v: usize) -> &[usize] {
        &self.adj[v]
    }

    pub fn has_edge(&self, u: usize, v: usize) -> bool {
        u < self.order() && self.adj[u].binary_search(&v).is_ok()
    }

    /// Edges as `(u, v)` pairs with `u < v`, in lexicographic order.
    pub fn edges(&self) -> Vec<(usize, usize)> {
        let mut out = Vec::with_capacity(self.edges);
        for (u, nbrs) in self.adj.iter().enumerate() {
            out.extend(nbrs.iter().filter(|&&v| v > u).map(|&v| (u, v)));
        }
        out
    }

    pub fn add_vertex(&mut self) -> usize {
        self.adj.push(Vec::new());
        self.adj.len() - 1
    }

    pub fn add_edge(&mut self, u: usize, v: usize) -> Result<()> {
        let n = self.order();
        if u >= n || v >= n {
            return Err(Error::InvalidGraph(format!(
                "edge ({u}, {v}) uses a label outside 0..{n}"
            )));
        }
        if u == v {
            return Err(Error::InvalidGraph(format!("loop at vertex {u}")));
        }
        if self.has_edge(u, v) {
            return Err(Error::InvalidGraph(format!("duplicate edge ({u}, {v})")));
        }
        self.insert(u, v);
        Ok(())
    }

    pub fn remove_edge(&mut self, u: usize, v: usize) -> Result<()> {
        if !self.has_edge(u, v) {
            return Err(Error::InvalidGraph(format!("no edge ({u}, {v})")));
        }
        let i = self.adj[u].binary_search(&v).unwrap();
        self.adj[u].remove(i);
        let j = self.adj[v].binary_search(&u).unwrap();
        self.adj[v].remove(j);
        self.edges -= 1;
        Ok(())
    }

    // Callers guarantee a fresh, in-range, loop-free edge.
    pub(crate) fn insert(&mut self, u: usize, v: usize) {
        let i = self.adj[u].binary_search(&v).unwrap_err();
        self.adj[u].insert(i, v);
        let j = self.adj[v].binary_search(&u).unwrap_err();
        self.adj[v].insert(j, u);
        self.edges += 1;
    }

    /// Attaches `count` new pendant vertices to `v`.
    pub(crate) fn attach_pendants(&mut self, v: usize, count: usize) {
        for _ in 0..count {
            let x = self.add_vertex();
            self.insert(v, x);
        }
    }

    /// The graph obtained by sending vertex `v` to `perm[v]`.
    pub fn relabel(&self, perm: &[usize]) -> Result<Graph> {
        let n = self.order();
        let mut seen = vec![false; n];
        if perm.len() != n || perm.iter().any(|&x| x >= n || core::mem::replace(&mut seen[x], true)) {
            return Err(Error::InvalidParameters(format!(
                "relabeling is not a permutation of 0..{n}"
            )));
        }
        let mut g = Graph::empty(n);
        for (u, v) in self.edges() {
            g.insert(perm[u], perm[v]);
        }
        Ok(g)
    }

    /// Breadth-first distances from `src`; `None` marks unreachable vertices.
    pub fn bfs_distances(&self, src: usize) -> Vec<Option<usize>> {
        let mut dist = vec![None; self.order()];
        let mut queue = VecDeque::new();
        dist[src] = Some(0);
        queue.push_back(src);
        while let Some(v) = queue.pop_front() {
            let d = dist[v].unwrap();
            for &w in &self.adj[v] {
                if dist[w].is_none() {
                    dist[w] = Some(d + 1);
                    queue.push_back(w);
                }
            }
        }
        dist
    }

    pub fn is_connected(&self) -> bool {
        self.order() == 0 || self.bfs_distances(0).iter().all(Option::is_some)
    }

    pub(crate) fn require_connected(&self) -> Result<()> {
        if self.is_connected() {
            Ok(())
        } else {
            Err(Error::DisconnectedInput)
        }
    }

    pub fn classify(&self) -> Result<GraphKind> {
        self.require_connected()?;
        let n = self.order();
        Ok(if self.edges + 1 == n {
            GraphKind::Tree
        } else if self.edges == n {
            GraphKind::Unicyclic
        } else {
            GraphKind::Other
        })
    }

    pub fn is_tree(&self) -> bool {
        matches!(self.classify(), Ok(GraphKind::Tree))
    }

    pub fn is_unicyclic(&self) -> bool {
        matches!(self.classify(), Ok(GraphKind::Unicyclic))
    }

    /// Proper 2-coloring by BFS (`false`/`true` per vertex), if one exists.
    /// Works component by component, so it is also defined for forests.
    pub fn two_coloring(&self) -> Option<Vec<bool>> {
        let n = self.order();
        let mut color: Vec<Option<bool>> = vec![None; n];
        let mut queue = VecDeque::new();
        for s in 0..n {
            if color[s].is_some() {
                continue;
            }
            color[s] = Some(false);
            queue.push_back(s);
            while let Some(v) = queue.pop_front() {
                let c = color[v].unwrap();
                for &w in &self.adj[v] {
                    match color[w] {
                        None => {
                            color[w] = Some(!c);
                            queue.push_back(w);
                        }
                        Some(cw) if cw == c => return None,
                        Some(_) => {}
                    }
                }
            }
        }
        Some(color.into_iter().map(Option::unwrap).collect())
    }

    pub fn is_bipartite(&self) -> bool {
        self.two_coloring().is_some()
    }

    /// The unique 2-coloring of a connected graph, or `None` on an odd cycle.
    pub fn bipartition(&self) -> Result<Option<Bipartition>> {
        self.require_connected()?;
        let Some(color) = self.two_coloring() else {
            return Ok(None);
        };
        let (mut a, mut b): (Vec<usize>, Vec<usize>) = (0..self.order()).partition(|&v| !color[v]);
        if b.len() < a.len() {
            core::mem::swap(&mut a, &mut b);
        }
        Ok(Some(Bipartition { class_a: a, class_b: b }))
    }

    pub fn pendant_vertices(&self) -> Vec<usize> {
        (0..self.order()).filter(|&v| self.degree(v) == 1).collect()
    }

    /// Shortest-path edge count between `u` and `v`, `None` when unreachable.
    pub fn distance(&self, u: usize, v: usize) -> Option<usize> {
        self.bfs_distances(u)[v]
    }

    /// Largest distance over all connected pairs.
    pub fn diameter(&self) -> usize {
        (0..self.order())
            .map(|v| self.bfs_distances(v).into_iter().flatten().max().unwrap_or(0))
            .max()
            .unwrap_or(0)
    }

    /// Vertices of the unique cycle in traversal order, starting from the
    /// smallest cycle label and continuing towards its smaller cycle neighbor.
    pub fn unique_cycle(&self) -> Result<Vec<usize>> {
        if self.classify()? != GraphKind::Unicyclic {
            return Err(Error::NotUnicyclic);
        }
        // Peel leaves until only the cycle remains.
        let n = self.order();
        let mut deg = self.degrees();
        let mut removed = vec![false; n];
        let mut stack: Vec<usize> = (0..n).filter(|&v| deg[v] == 1).collect();
        while let Some(v) = stack.pop() {
            removed[v] = true;
            for &w in &self.adj[v] {
                if !removed[w] {
                    deg[w] -= 1;
                    if deg[w] == 1 {
                        stack.push(w);
                    }
                }
            }
        }
        let start = (0..n).find(|&v| !removed[v]).unwrap();
        let mut cycle = vec![start];
        let mut prev = start;
        let mut cur = *self.adj[start].iter().find(|&&w| !removed[w]).unwrap();
        while cur != start {
            cycle.push(cur);
            let next = *self.adj[cur].iter().find(|&&w| !removed[w] && w != prev).unwrap();
            prev = cur;
            cur = next;
        }
        Ok(cycle)
    }

    /// Maximum matching size: greedy leaf matching on forests, dynamic
    /// programming over vertex subsets otherwise.
    pub fn matching_number(&self) -> Result<usize> {
        let n = self.order();
        if self.size() + self.components() == n {
            return Ok(self.forest_matching());
        }
        if n > MATCHING_LIMIT {
            return Err(Error::SizeBound {
                what: "graph order",
                size: n,
                limit: MATCHING_LIMIT,
            });
        }
        let masks: Vec<u32> = (0..n)
            .map(|v| self.adj[v].iter().fold(0u32, |m, &w| m | (1 << w)))
            .collect();
        let mut best = vec![0u8; 1 << n];
        for mask in 1usize..(1 << n) {
            let v = mask.trailing_zeros() as usize;
            let rest = mask & !(1 << v);
            let mut b = best[rest];
            let mut cand = masks[v] & rest as u32;
            while cand != 0 {
                let w = cand.trailing_zeros() as usize;
                cand &= cand - 1;
                b = b.max(best[rest & !(1 << w)] + 1);
            }
            best[mask] = b;
        }
        Ok(best[(1 << n) - 1] as usize)
    }

    fn components(&self) -> usize {
        let mut seen = vec![false; self.order()];
        let mut count = 0;
        for s in 0..self.order() {
            if seen[s] {
                continue;
            }
            count += 1;
            seen[s] = true;
            let mut stack = vec![s];
            while let Some(v) = stack.pop() {
                for &w in &self.adj[v] {
                    if !core::mem::replace(&mut seen[w], true) {
                        stack.push(w);
                    }
                }
            }
        }
        count
    }

    // Matching a leaf to its neighbor is always part of some maximum matching.
    fn forest_matching(&self) -> usize {
        let n = self.order();
        let mut deg = self.degrees();
        let mut gone = vec![false; n];
        let mut stack: Vec<usize> = (0..n).filter(|&v| deg[v] == 1).collect();
        let mut size = 0;
        while let Some(v) = stack.pop() {
            if gone[v] || deg[v] != 1 {
                continue;
            }
            let w = *self.adj[v].iter().find(|&&w| !gone[w]).unwrap();
            gone[v] = true;
            gone[w] = true;
            size += 1;
            for &x in &self.adj[w] {
                if !gone[x] {
                    deg[x] -= 1;
                    if deg[x] == 1 {
                        stack.push(x);
                    }
                }
            }
        }
        size
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn two_edges() -> Graph {
        Graph::from_edges(4, &[(0, 1), (2, 3)]).unwrap()
    }

    #[test]
    fn connectivity() {
        assert!(Graph::path(4).is_connected());
        assert!(!two_edges().is_connected());
        assert!(Graph::empty(1).is_connected());
        assert!(Graph::empty(0).is_connected());
    }

    #[test]
    fn classify_kinds() {
        assert_eq!(Graph::cycle(6).classify(), Ok(GraphKind::Unicyclic));
        assert_eq!(Graph::star(5).classify(), Ok(GraphKind::Tree));
        let k4 = Graph::from_edges(4, &[(0, 1), (0, 2), (0, 3), (1, 2), (1, 3), (2, 3)]).unwrap();
        assert_eq!(k4.classify(), Ok(GraphKind::Other));
        assert_eq!(two_edges().classify(), Err(Error::DisconnectedInput));
    }

    #[test]
    fn bipartitions() {
        assert_eq!(Graph::path(4).bipartition().unwrap().unwrap().sizes(), (2, 2));
        assert_eq!(Graph::cycle(5).bipartition().unwrap(), None);
        assert_eq!(Graph::star(5).bipartition().unwrap().unwrap().sizes(), (1, 4));
        assert_eq!(two_edges().bipartition(), Err(Error::DisconnectedInput));
    }

    #[test]
    fn pendants_and_distances() {
        assert_eq!(Graph::star(5).pendant_vertices(), vec![1, 2, 3, 4]);
        assert!(Graph::cycle(4).pendant_vertices().is_empty());
        assert_eq!(Graph::path(5).distance(0, 4), Some(4));
        assert_eq!(two_edges().distance(0, 3), None);
        assert_eq!(Graph::star(7).diameter(), 2);
        assert_eq!(Graph::path(6).diameter(), 5);
    }

    #[test]
    fn cycles() {
        assert_eq!(Graph::cycle(6).unique_cycle().unwrap(), vec![0, 1, 2, 3, 4, 5]);
        let mut g = Graph::cycle(4);
        g.attach_pendants(2, 3);
        let mut c = g.unique_cycle().unwrap();
        c.sort();
        assert_eq!(c, vec![0, 1, 2, 3]);
        assert_eq!(Graph::path(3).unique_cycle(), Err(Error::NotUnicyclic));
    }

    #[test]
    fn matchings() {
        assert_eq!(Graph::path(4).matching_number(), Ok(2));
        assert_eq!(Graph::star(5).matching_number(), Ok(1));
        assert_eq!(Graph::cycle(7).matching_number(), Ok(3));
        assert_eq!(Graph::path(21).matching_number(), Ok(10));
        assert_eq!(Graph::star(30).matching_number(), Ok(1));
        assert!(matches!(
            Graph::cycle(21).matching_number(),
            Err(Error::SizeBound { .. })
        ));
    }

    #[test]
    fn rejects_bad_edges() {
        assert!(Graph::from_edges(3, &[(0, 0)]).is_err());
        assert!(Graph::from_edges(3, &[(0, 1), (1, 0)]).is_err());
        assert!(Graph::from_edges(3, &[(0, 3)]).is_err());
    }

    #[test]
    fn degree_sum_is_twice_size() {
        let mut g = Graph::cycle(5);
        g.attach_pendants(0, 2);
        g.attach_pendants(3, 1);
        assert_eq!(g.degrees().iter().sum::<usize>(), 2 * g.size());
        assert_eq!(g.edges().len(), g.size());
    }
}
