//! Random subjects shared by the integration tests.

#![allow(dead_code)]

use laperm_core::Graph;
use rand::seq::SliceRandom;
use rand::Rng;

/// Decodes a Prüfer sequence over `0..seq.len() + 2`.
pub fn prufer_tree(seq: &[usize]) -> Graph {
    let n = seq.len() + 2;
    let mut degree = vec![1usize; n];
    for &x in seq {
        degree[x] += 1;
    }
    let mut g = Graph::empty(n);
    for &x in seq {
        let leaf = (0..n).find(|&v| degree[v] == 1).expect("a leaf remains");
        g.add_edge(leaf, x).unwrap();
        degree[leaf] -= 1;
        degree[x] -= 1;
    }
    let rest: Vec<usize> = (0..n).filter(|&v| degree[v] == 1).collect();
    g.add_edge(rest[0], rest[1]).unwrap();
    g
}

/// Uniform labeled tree on `n >= 2` vertices.
pub fn random_tree<R: Rng>(rng: &mut R, n: usize) -> Graph {
    let seq: Vec<usize> = (0..n - 2).map(|_| rng.gen_range(0..n)).collect();
    prufer_tree(&seq)
}

/// A random tree plus one edge between opposite colour classes, so the
/// result is bipartite with an even cycle. `None` for stars with `n < 4`
/// and other trees without such a non-edge.
pub fn random_unicyclic<R: Rng>(rng: &mut R, n: usize) -> Option<Graph> {
    let t = random_tree(rng, n);
    let colour = t.two_coloring().expect("trees are bipartite");
    let mut options = Vec::new();
    for u in 0..n {
        for v in u + 1..n {
            if colour[u] != colour[v] && !t.has_edge(u, v) {
                options.push((u, v));
            }
        }
    }
    let &(u, v) = options.choose(rng)?;
    let mut g = t;
    g.add_edge(u, v).unwrap();
    Some(g)
}

pub fn random_permutation<R: Rng>(rng: &mut R, n: usize) -> Vec<usize> {
    let mut perm: Vec<usize> = (0..n).collect();
    perm.shuffle(rng);
    perm
}

pub fn shuffled<R: Rng>(rng: &mut R, g: &Graph) -> Graph {
    g.relabel(&random_permutation(rng, g.order())).unwrap()
}

/// An even cycle of length at least six with leaves on at most two cycle
/// vertices, leaving four consecutive cycle vertices bare, randomly
/// relabeled. Total order at most `max_n`.
pub fn random_op3_subject<R: Rng>(rng: &mut R, max_n: usize) -> Graph {
    let len = 2 * rng.gen_range(3..=max_n / 2);
    let spare = max_n - len;
    let mut g = Graph::cycle(len);
    // Positions 4.. in the cycle order keep 0..=3 free of leaves.
    let hubs = [rng.gen_range(4..len), rng.gen_range(4..len)];
    let leaves = rng.gen_range(0..=spare);
    for _ in 0..leaves {
        let hub = hubs[rng.gen_range(0..2)];
        let x = g.add_vertex();
        g.add_edge(hub, x).unwrap();
    }
    shuffled(rng, &g)
}

/// Isomorphism by degree-refined backtracking, independent of the crate's
/// canonical forms.
pub fn brute_isomorphic(a: &Graph, b: &Graph) -> bool {
    let n = a.order();
    if n != b.order() || a.size() != b.size() {
        return false;
    }
    let mut da = a.degrees();
    let mut db = b.degrees();
    da.sort_unstable();
    db.sort_unstable();
    if da != db {
        return false;
    }
    let mut map = vec![usize::MAX; n];
    let mut used = vec![false; n];
    extend(a, b, 0, &mut map, &mut used)
}

fn extend(a: &Graph, b: &Graph, v: usize, map: &mut [usize], used: &mut [bool]) -> bool {
    if v == a.order() {
        return true;
    }
    for t in 0..b.order() {
        if used[t] || a.degree(v) != b.degree(t) {
            continue;
        }
        let consistent = (0..v).all(|x| a.has_edge(x, v) == b.has_edge(map[x], t));
        if !consistent {
            continue;
        }
        map[v] = t;
        used[t] = true;
        if extend(a, b, v + 1, map, used) {
            return true;
        }
        used[t] = false;
    }
    map[v] = usize::MAX;
    false
}

/// Every valid family spec of order at most `max_n`, with square
/// decorations capped at two per slot.
pub fn small_specs(max_n: usize) -> Vec<laperm_core::families::FamilySpec> {
    use laperm_core::families::FamilySpec::*;
    let mut specs = Vec::new();
    for n in 1..=max_n {
        specs.extend([Path(n), Star(n), Cycle(n)]);
        for k in 0..=n {
            for a in 0..=n {
                specs.push(TEndAttach { n, k, a });
                specs.push(TwoCenter { n, r: k, s: a });
                specs.push(Broom { n, d: k, i: a });
            }
            specs.push(Caterpillar { n, d: k });
            specs.push(MatchingTree { n, m: k });
        }
        for index in 1..=8 {
            specs.push(GHat { index, n });
        }
        for p in 1..n {
            let q = n - p;
            specs.extend([
                DoubleStar { p, q },
                DPrime { p, q },
                DDoublePrime { p, q },
                Bpq { p, q },
                G1 { p, q },
                G2 { p, q },
            ]);
        }
    }
    let slot: Vec<(usize, usize)> = (0..=2).flat_map(|s| (0..=2).map(move |k| (s, k))).collect();
    for &a in &slot {
        for &b in &slot {
            for &c in &slot {
                for &d in &slot {
                    specs.push(laperm_core::families::FamilySpec::c4([a, b, c, d]));
                }
            }
        }
    }
    specs
        .into_iter()
        .filter(|s| s.order().is_ok_and(|n| n <= max_n))
        .collect()
}
