//! Isomorphism-free generation of trees and bipartite unicyclic graphs, and
//! ranking of a class by Laplacian permanent.
//!
//! Free trees come from canonical level sequences of rooted trees
//! (successor rule of Beyer and Hedetniemi). A tree with a single centroid is
//! produced once, rooted at that centroid; a tree with two centroids is
//! produced as an unordered pair of rooted halves joined by the centroid edge.
//!
//! Bipartite unicyclic graphs are obtained by closing an even cycle in every
//! tree and keeping one representative per canonical form.

use alloc::boxed::Box;
use alloc::collections::BTreeMap;
use alloc::string::String;
use alloc::vec;
use alloc::vec::Vec;
use core::fmt;
use core::str::FromStr;

use num_bigint::BigInt;

use crate::canon::{canonical_form_bounded, canonical_graph_bounded, CANON_LIMIT};
use crate::closed_forms::Candidate;
use crate::error::{invalid, Error, Result};
use crate::families::{build, FamilySpec};
use crate::graph::Graph;
use crate::permanent::laplacian_permanent;

/// Default order bound for tree classes.
pub const TREE_LIMIT: usize = 16;
/// Default order bound for bipartite unicyclic classes.
pub const UNICYCLIC_LIMIT: usize = 13;

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub enum ClassKind {
    Trees,
    BipartiteUnicyclic,
}

impl ClassKind {
    pub fn default_limit(self) -> usize {
        match self {
            ClassKind::Trees => TREE_LIMIT,
            ClassKind::BipartiteUnicyclic => UNICYCLIC_LIMIT,
        }
    }

    pub fn as_str(self) -> &'static str {
        match self {
            ClassKind::Trees => "trees",
            ClassKind::BipartiteUnicyclic => "unicyclic",
        }
    }
}

impl fmt::Display for ClassKind {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.as_str())
    }
}

impl FromStr for ClassKind {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        match s.trim().to_ascii_lowercase().as_str() {
            "trees" | "tree" => Ok(ClassKind::Trees),
            "unicyclic" | "bipartite-unicyclic" => Ok(ClassKind::BipartiteUnicyclic),
            other => Err(Error::Parse(alloc::format!("unknown class kind `{other}`"))),
        }
    }
}

/// A class of graphs to enumerate, with optional filters.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct ClassQuery {
    pub kind: ClassKind,
    pub n: usize,
    /// `(p, q)` with `p <= q` and `p + q = n`.
    pub bipartition: Option<(usize, usize)>,
    pub diameter_at_least: Option<usize>,
    pub matching_number: Option<usize>,
    /// Replaces the default order bound of the kind.
    pub max_order: Option<usize>,
}

impl ClassQuery {
    pub fn new(kind: ClassKind, n: usize) -> Self {
        ClassQuery {
            kind,
            n,
            bipartition: None,
            diameter_at_least: None,
            matching_number: None,
            max_order: None,
        }
    }

    pub fn trees(n: usize) -> Self {
        Self::new(ClassKind::Trees, n)
    }

    pub fn unicyclic(n: usize) -> Self {
        Self::new(ClassKind::BipartiteUnicyclic, n)
    }

    pub fn with_bipartition(mut self, p: usize, q: usize) -> Self {
        self.bipartition = Some((p.min(q), p.max(q)));
        self
    }

    pub fn with_diameter_at_least(mut self, d: usize) -> Self {
        self.diameter_at_least = Some(d);
        self
    }

    pub fn with_matching_number(mut self, m: usize) -> Self {
        self.matching_number = Some(m);
        self
    }

    pub fn with_max_order(mut self, limit: Option<usize>) -> Self {
        self.max_order = limit;
        self
    }

    /// The order bound in force.
    pub fn limit(&self) -> usize {
        self.max_order.unwrap_or_else(|| self.kind.default_limit())
    }

    pub fn validate(&self) -> Result<()> {
        if self.n == 0 {
            return Err(invalid("n >= 1"));
        }
        if self.n > self.limit() {
            return Err(Error::SizeBound {
                what: match self.kind {
                    ClassKind::Trees => "tree order",
                    ClassKind::BipartiteUnicyclic => "unicyclic order",
                },
                size: self.n,
                limit: self.limit(),
            });
        }
        if let Some((p, q)) = self.bipartition {
            if p == 0 || p > q || p + q != self.n {
                return Err(invalid("bipartition must satisfy 1 <= p <= q and p + q = n"));
            }
        }
        Ok(())
    }

    fn accepts(&self, g: &Graph) -> Result<bool> {
        if let Some((p, q)) = self.bipartition {
            match g.bipartition()? {
                Some(b) if b.sizes() == (p, q) => {}
                _ => return Ok(false),
            }
        }
        if let Some(d) = self.diameter_at_least {
            if g.diameter() < d {
                return Ok(false);
            }
        }
        if let Some(m) = self.matching_number {
            if g.matching_number()? != m {
                return Ok(false);
            }
        }
        Ok(true)
    }

    fn canon_limit(&self) -> usize {
        self.limit().max(CANON_LIMIT)
    }
}

impl fmt::Display for ClassQuery {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{} n={}", self.kind, self.n)?;
        if let Some((p, q)) = self.bipartition {
            write!(f, " (p,q)=({p},{q})")?;
        }
        if let Some(d) = self.diameter_at_least {
            write!(f, " diameter>={d}")?;
        }
        if let Some(m) = self.matching_number {
            write!(f, " matching={m}")?;
        }
        Ok(())
    }
}

/// Canonical level sequences of rooted trees on `n` vertices, root at level
/// 1, in decreasing lexicographic order.
#[derive(Clone, Debug)]
pub struct RootedTrees {
    levels: Vec<usize>,
    done: bool,
}

impl RootedTrees {
    pub fn new(n: usize) -> Self {
        RootedTrees {
            levels: (1..=n).collect(),
            done: n == 0,
        }
    }
}

impl Iterator for RootedTrees {
    type Item = Vec<usize>;

    fn next(&mut self) -> Option<Vec<usize>> {
        if self.done {
            return None;
        }
        let out = self.levels.clone();
        let l = &mut self.levels;
        match l.iter().rposition(|&x| x > 2) {
            None => self.done = true,
            Some(p) => {
                let q = l[..p].iter().rposition(|&x| x == l[p] - 1).unwrap();
                let shift = p - q;
                for i in p..l.len() {
                    l[i] = l[i - shift];
                }
            }
        }
        Some(out)
    }
}

/// Sizes of the subtrees hanging from the root of a level sequence.
fn root_branch_sizes(levels: &[usize]) -> Vec<usize> {
    let starts: Vec<usize> = (1..levels.len()).filter(|&i| levels[i] == 2).collect();
    starts
        .iter()
        .enumerate()
        .map(|(k, &s)| starts.get(k + 1).copied().unwrap_or(levels.len()) - s)
        .collect()
}

/// Appends the tree of `levels` to `g`, labels starting at `offset`.
fn add_level_tree(g: &mut Graph, levels: &[usize], offset: usize) {
    let mut last_at = vec![0usize; levels.len() + 2];
    for (i, &l) in levels.iter().enumerate() {
        if i > 0 {
            g.insert(offset + last_at[l - 1], offset + i);
        }
        last_at[l] = i;
    }
}

/// The tree described by a level sequence (vertex `i` at position `i`).
pub fn tree_from_levels(levels: &[usize]) -> Graph {
    let mut g = Graph::empty(levels.len());
    add_level_tree(&mut g, levels, 0);
    g
}

/// Every free tree on `n` vertices exactly once.
pub struct FreeTrees {
    n: usize,
    rooted: RootedTrees,
    halves: Vec<Vec<usize>>,
    pair: (usize, usize),
}

impl FreeTrees {
    pub fn new(n: usize) -> Self {
        let halves = if n >= 2 && n.is_multiple_of(2) {
            RootedTrees::new(n / 2).collect()
        } else {
            Vec::new()
        };
        FreeTrees {
            n,
            rooted: RootedTrees::new(n),
            halves,
            pair: (0, 0),
        }
    }
}

impl Iterator for FreeTrees {
    type Item = Graph;

    fn next(&mut self) -> Option<Graph> {
        for levels in self.rooted.by_ref() {
            if root_branch_sizes(&levels).iter().all(|&s| 2 * s < self.n) {
                return Some(tree_from_levels(&levels));
            }
        }
        let (i, j) = self.pair;
        if i >= self.halves.len() {
            return None;
        }
        self.pair = if j + 1 < self.halves.len() {
            (i, j + 1)
        } else {
            (i + 1, i + 1)
        };
        let h = self.n / 2;
        let mut g = Graph::empty(self.n);
        add_level_tree(&mut g, &self.halves[i], 0);
        add_level_tree(&mut g, &self.halves[j], h);
        g.insert(0, h);
        Some(g)
    }
}

/// Bipartite unicyclic graphs on `n` vertices, optionally restricted to one
/// bipartition, keyed and ordered by canonical form.
pub fn unicyclic_class(
    n: usize,
    bipartition: Option<(usize, usize)>,
    canon_limit: usize,
) -> Result<BTreeMap<Vec<u8>, Graph>> {
    let mut out = BTreeMap::new();
    if n < 4 {
        return Ok(out);
    }
    for tree in FreeTrees::new(n) {
        let colors = tree.two_coloring().expect("trees are bipartite");
        if let Some((p, _)) = bipartition {
            let ones = colors.iter().filter(|&&c| c).count();
            if ones.min(n - ones) != p {
                continue;
            }
        }
        for u in 0..n {
            for v in u + 1..n {
                if colors[u] == colors[v] || tree.has_edge(u, v) {
                    continue;
                }
                let mut g = tree.clone();
                g.insert(u, v);
                let code = canonical_form_bounded(&g, canon_limit)?;
                out.entry(code).or_insert(g);
            }
        }
    }
    Ok(out)
}

/// Streams one representative per isomorphism class of the query.
pub fn enumerate(query: &ClassQuery) -> Result<Box<dyn Iterator<Item = Result<Graph>>>> {
    query.validate()?;
    let q = query.clone();
    let filter = move |g: Graph| match q.accepts(&g) {
        Ok(true) => Some(Ok(g)),
        Ok(false) => None,
        Err(e) => Some(Err(e)),
    };
    Ok(match query.kind {
        ClassKind::Trees => Box::new(FreeTrees::new(query.n).filter_map(filter)),
        ClassKind::BipartiteUnicyclic => {
            let class = unicyclic_class(query.n, query.bipartition, query.canon_limit())?;
            Box::new(class.into_values().filter_map(filter))
        }
    })
}

/// The whole class, collected.
pub fn enumerate_all(query: &ClassQuery) -> Result<Vec<Graph>> {
    enumerate(query)?.collect()
}

/// Laplacian permanents of a batch of graphs, one at a time.
pub fn sequential_permanents(graphs: &[Graph]) -> Result<Vec<BigInt>> {
    graphs.iter().map(laplacian_permanent).collect()
}

/// Batch evaluator of Laplacian permanents. Callers may parallelize; the
/// output must line up with the input.
pub type Evaluator<'a> = &'a dyn Fn(&[Graph]) -> Result<Vec<BigInt>>;

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct RankedGraph {
    /// Canonically relabeled representative.
    pub graph: Graph,
    pub code: Vec<u8>,
    pub value: BigInt,
    pub family: Option<FamilySpec>,
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct RankedResult {
    pub entries: Vec<RankedGraph>,
    pub class_size: usize,
}

/// Sorts a scored class by `(value, canonical code)`.
pub fn rank_graphs(graphs: &[Graph], values: Vec<BigInt>, canon_limit: usize) -> Result<Vec<RankedGraph>> {
    if graphs.len() != values.len() {
        return Err(invalid("one value per graph"));
    }
    let mut out = graphs
        .iter()
        .zip(values)
        .map(|(g, value)| {
            let (graph, code) = canonical_graph_bounded(g, canon_limit)?;
            Ok(RankedGraph {
                graph,
                code,
                value,
                family: None,
            })
        })
        .collect::<Result<Vec<_>>>()?;
    out.sort_by(|a, b| a.value.cmp(&b.value).then_with(|| a.code.cmp(&b.code)));
    Ok(out)
}

/// The full class of the query in ranked order, without recognition.
pub fn ranked_class(query: &ClassQuery, eval: Evaluator<'_>) -> Result<Vec<RankedGraph>> {
    let graphs = enumerate_all(query)?;
    let values = eval(&graphs)?;
    rank_graphs(&graphs, values, query.canon_limit())
}

/// Bottom `k` of the class by Laplacian permanent, ties broken by canonical
/// form, with family recognition.
pub fn rank_by_permanent(query: &ClassQuery, k: usize) -> Result<RankedResult> {
    rank_by_permanent_with(query, k, &sequential_permanents)
}

pub fn rank_by_permanent_with(query: &ClassQuery, k: usize, eval: Evaluator<'_>) -> Result<RankedResult> {
    let mut entries = ranked_class(query, eval)?;
    let class_size = entries.len();
    entries.truncate(k);
    let index = FamilyIndex::for_kind(query.kind, query.n, query.canon_limit())?;
    for e in &mut entries {
        e.family = index.recognize(&e.code).cloned();
    }
    Ok(RankedResult { entries, class_size })
}

/// Canonical codes of the named families of one order, for recognition.
/// The first spec inserted for a code is the name it is reported under.
#[derive(Clone, Debug)]
pub struct FamilyIndex {
    n: usize,
    canon_limit: usize,
    map: BTreeMap<Vec<u8>, FamilySpec>,
}

impl FamilyIndex {
    pub fn empty(n: usize, canon_limit: usize) -> Self {
        FamilyIndex {
            n,
            canon_limit,
            map: BTreeMap::new(),
        }
    }

    pub fn for_kind(kind: ClassKind, n: usize, canon_limit: usize) -> Result<Self> {
        let mut index = Self::empty(n, canon_limit);
        match kind {
            ClassKind::Trees => index.add_tree_families()?,
            ClassKind::BipartiteUnicyclic => index.add_unicyclic_families()?,
        }
        Ok(index)
    }

    pub fn trees(n: usize) -> Result<Self> {
        Self::for_kind(ClassKind::Trees, n, CANON_LIMIT)
    }

    pub fn unicyclic(n: usize) -> Result<Self> {
        Self::for_kind(ClassKind::BipartiteUnicyclic, n, CANON_LIMIT)
    }

    pub fn len(&self) -> usize {
        self.map.len()
    }

    pub fn is_empty(&self) -> bool {
        self.map.is_empty()
    }

    /// Adds `spec` if it is valid and has the index's order.
    pub fn insert(&mut self, spec: FamilySpec) -> Result<()> {
        if spec.validate().is_err() || spec.order()? != self.n {
            return Ok(());
        }
        let g = build(&spec)?;
        let code = canonical_form_bounded(&g, self.canon_limit)?;
        self.map.entry(code).or_insert(spec);
        Ok(())
    }

    pub fn recognize(&self, code: &[u8]) -> Option<&FamilySpec> {
        self.map.get(code)
    }

    pub fn recognize_graph(&self, g: &Graph) -> Result<Option<&FamilySpec>> {
        if g.order() != self.n {
            return Ok(None);
        }
        Ok(self.recognize(&canonical_form_bounded(g, self.canon_limit)?))
    }

    fn add_tree_families(&mut self) -> Result<()> {
        use FamilySpec::*;
        let n = self.n;
        self.insert(Path(n))?;
        self.insert(Star(n))?;
        for p in 1..=n / 2 {
            self.insert(DoubleStar { p, q: n - p })?;
        }
        for p in 2..=n / 2 {
            self.insert(DPrime { p, q: n - p })?;
            self.insert(DDoublePrime { p, q: n - p })?;
        }
        for a in 0..=n.saturating_sub(3) / 2 {
            self.insert(TEndAttach { n, k: 3, a })?;
        }
        for d in 2..n {
            self.insert(Broom { n, d, i: 2 })?;
        }
        for d in 6..n {
            self.insert(Caterpillar { n, d })?;
        }
        for d in 3..n {
            for i in 3..=d / 2 + 1 {
                self.insert(Broom { n, d, i })?;
            }
        }
        for m in 1..=n / 2 {
            self.insert(MatchingTree { n, m })?;
        }
        for k in 4..=n {
            for a in 0..=(n - k) / 2 {
                self.insert(TEndAttach { n, k, a })?;
            }
        }
        Ok(())
    }

    fn add_unicyclic_families(&mut self) -> Result<()> {
        use FamilySpec::*;
        let n = self.n;
        if n < 4 {
            return Ok(());
        }
        for p in 2..=n / 2 {
            self.insert(Bpq { p, q: n - p })?;
        }
        for i in 0..=(n - 4) / 2 {
            self.insert(FamilySpec::c4([(i, 0), (0, 0), (n - 4 - i, 0), (0, 0)]))?;
        }
        for index in 1..=8 {
            self.insert(GHat { index, n })?;
        }
        for p in 2..=n / 2 {
            for c in Candidate::ALL {
                if let Some(deco) = c.decorations(p, n - p) {
                    self.insert(FamilySpec::c4(deco))?;
                }
            }
        }
        for p in 3..=n / 2 {
            self.insert(G1 { p, q: n - p })?;
            self.insert(G2 { p, q: n - p })?;
        }
        if n.is_multiple_of(2) {
            self.insert(Cycle(n))?;
        }
        // Every square carrying pendants only.
        let rest = n - 4;
        for a in 0..=rest {
            for b in 0..=rest - a {
                for c in 0..=rest - a - b {
                    self.insert(FamilySpec::c4([(a, 0), (b, 0), (c, 0), (rest - a - b - c, 0)]))?;
                }
            }
        }
        Ok(())
    }
}

/// Human-readable family name or a placeholder.
pub fn family_label(family: Option<&FamilySpec>) -> String {
    match family {
        Some(f) => alloc::format!("{f}"),
        None => String::from("unrecognized"),
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    const FREE_TREES: [usize; 17] = [0, 1, 1, 1, 2, 3, 6, 11, 23, 47, 106, 235, 551, 1301, 3159, 7741, 19320];

    #[test]
    fn free_tree_counts() {
        for (n, &count) in FREE_TREES.iter().enumerate().take(14).skip(1) {
            assert_eq!(FreeTrees::new(n).count(), count, "n = {n}");
        }
    }

    #[test]
    fn rooted_tree_counts() {
        let rooted = [1, 1, 2, 4, 9, 20, 48, 115, 286];
        for (i, &c) in rooted.iter().enumerate() {
            assert_eq!(RootedTrees::new(i + 1).count(), c);
        }
    }

    #[test]
    fn small_classes() {
        let q = ClassQuery::trees(5).with_bipartition(2, 3);
        assert_eq!(enumerate_all(&q).unwrap().len(), 2);
        let c4 = enumerate_all(&ClassQuery::unicyclic(4)).unwrap();
        assert_eq!(c4.len(), 1);
        assert_eq!(c4[0].unique_cycle().unwrap().len(), 4);
    }

    #[test]
    fn size_bounds() {
        assert!(matches!(
            enumerate(&ClassQuery::unicyclic(14)),
            Err(Error::SizeBound { .. })
        ));
        assert!(enumerate(&ClassQuery::trees(6).with_bipartition(2, 3)).is_err());
    }

    #[test]
    fn ranking_recognizes_families() {
        let r = rank_by_permanent(&ClassQuery::trees(4).with_bipartition(2, 2), 1).unwrap();
        assert_eq!(r.entries[0].value, BigInt::from(10));
        assert_eq!(r.entries[0].family, Some(FamilySpec::Path(4)));
    }
}
