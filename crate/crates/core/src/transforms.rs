//! Edge-grafting moves.
//!
//! Each move validates its preconditions and returns a new graph on the same
//! labels. None of them checks that the Laplacian permanent actually drops;
//! that is what the test suites are for.

use alloc::format;
use alloc::vec::Vec;
use core::fmt;
use core::str::FromStr;

use crate::error::{invalid, Error, Result};
use crate::families::parse_call;
use crate::graph::Graph;

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash)]
pub enum GraftMove {
    /// Move the pendant `u` from `v` to `w`.
    OpI { u: usize, v: usize, w: usize },
    /// Move the leaves of the star centered at `u` (hanging off `v`) to `w`.
    OpII { u: usize, v: usize, w: usize },
    /// Replace the cycle edge `v1 v2` by `v1 v4`.
    OpIII { v1: usize, v2: usize, v4: usize },
    /// Move every leaf of `v` to its only non-pendant neighbor `u`.
    Lemma35 { v: usize, u: usize },
}

impl GraftMove {
    pub fn apply(&self, g: &Graph) -> Result<Graph> {
        match *self {
            GraftMove::OpI { u, v, w } => apply_op1(g, u, v, w),
            GraftMove::OpII { u, v, w } => apply_op2(g, u, v, w),
            GraftMove::OpIII { v1, v2, v4 } => apply_op3_at(g, v1, v2, v4),
            GraftMove::Lemma35 { v, u } => apply_lemma35(g, v, u),
        }
    }
}

impl fmt::Display for GraftMove {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match *self {
            GraftMove::OpI { u, v, w } => write!(f, "op1(u={u},v={v},w={w})"),
            GraftMove::OpII { u, v, w } => write!(f, "op2(u={u},v={v},w={w})"),
            GraftMove::OpIII { v1, v2, v4 } => write!(f, "op3(v1={v1},v2={v2},v4={v4})"),
            GraftMove::Lemma35 { v, u } => write!(f, "lemma35(v={v},u={u})"),
        }
    }
}

impl FromStr for GraftMove {
    type Err = Error;

    fn from_str(text: &str) -> Result<Self> {
        let call = parse_call(text)?;
        Ok(match call.name {
            "op1" | "op2" => {
                let x = call.numbers(&["u", "v", "w"])?;
                let (u, v, w) = (x[0], x[1], x[2]);
                if call.name == "op1" {
                    GraftMove::OpI { u, v, w }
                } else {
                    GraftMove::OpII { u, v, w }
                }
            }
            "op3" => {
                let x = call.numbers(&["v1", "v2", "v4"])?;
                GraftMove::OpIII {
                    v1: x[0],
                    v2: x[1],
                    v4: x[2],
                }
            }
            "lemma35" => {
                let x = call.numbers(&["v", "u"])?;
                GraftMove::Lemma35 { v: x[0], u: x[1] }
            }
            other => return Err(Error::Parse(format!("unknown move `{other}`"))),
        })
    }
}

fn check_vertices(g: &Graph, vs: &[usize]) -> Result<()> {
    match vs.iter().find(|&&v| v >= g.order()) {
        Some(v) => Err(invalid(format!("vertex {v} out of range 0..{}", g.order()))),
        None => Ok(()),
    }
}

fn check_bipartite_connected(g: &Graph) -> Result<()> {
    if !g.is_connected() {
        return Err(Error::DisconnectedInput);
    }
    if !g.is_bipartite() {
        return Err(Error::NotBipartite);
    }
    Ok(())
}

fn require(cond: bool, clause: &'static str) -> Result<()> {
    if cond {
        Ok(())
    } else {
        Err(Error::PreconditionViolated(clause))
    }
}

fn move_edges(g: &Graph, from: usize, to: usize, moved: &[usize]) -> Graph {
    let mut h = g.clone();
    for &z in moved {
        h.remove_edge(from, z).expect("edge present");
        h.insert(to, z);
    }
    h
}

/// `G - uv + uw` for a pendant edge `uv` and `d(w) >= d(v)`.
pub fn apply_op1(g: &Graph, u: usize, v: usize, w: usize) -> Result<Graph> {
    check_vertices(g, &[u, v, w])?;
    check_bipartite_connected(g)?;
    require(g.order() >= 3, "n >= 3")?;
    require(g.has_edge(u, v), "uv is an edge")?;
    require(g.degree(u) == 1, "u is pendant")?;
    require(w != u && w != v, "w differs from u and v")?;
    require(g.degree(w) >= g.degree(v), "d(w) >= d(v)")?;
    Ok(move_edges(g, v, w, &[u]))
}

/// Moves `W = N(u) \ {v}` (all pendants) from `u` to `w`, where `vw` is an
/// edge and `d(w) >= 2`.
pub fn apply_op2(g: &Graph, u: usize, v: usize, w: usize) -> Result<Graph> {
    check_vertices(g, &[u, v, w])?;
    check_bipartite_connected(g)?;
    require(g.has_edge(u, v), "uv is an edge")?;
    require(g.has_edge(v, w), "vw is an edge")?;
    require(w != u, "w differs from u")?;
    require(g.degree(w) >= 2, "d(w) >= 2")?;
    let leaves: Vec<usize> = g.neighbors(u).iter().copied().filter(|&z| z != v).collect();
    require(!leaves.is_empty(), "u has a neighbor besides v")?;
    require(
        leaves.iter().all(|&z| g.degree(z) == 1),
        "every neighbor of u besides v is pendant",
    )?;
    Ok(move_edges(g, u, w, &leaves))
}

/// Moves all pendant neighbors of `v` onto `u`, the only non-pendant
/// neighbor of `v`, in a tree.
pub fn apply_lemma35(g: &Graph, v: usize, u: usize) -> Result<Graph> {
    check_vertices(g, &[u, v])?;
    if !g.is_tree() {
        return Err(Error::NotATree);
    }
    require(g.has_edge(u, v), "uv is an edge")?;
    require(g.degree(u) >= 2, "u is not pendant")?;
    let moved: Vec<usize> = g.neighbors(v).iter().copied().filter(|&z| z != u).collect();
    require(!moved.is_empty(), "v has a neighbor besides u")?;
    require(
        moved.iter().all(|&z| g.degree(z) == 1),
        "u is the only non-pendant neighbor of v",
    )?;
    Ok(move_edges(g, v, u, &moved))
}

/// Cycle in traversal order, after checking the shape the third move needs:
/// an even cycle of length at least six where every other vertex is a leaf
/// on the cycle and at most two cycle vertices carry leaves.
fn op3_cycle(g: &Graph) -> Result<Vec<usize>> {
    if !g.is_connected() {
        return Err(Error::DisconnectedInput);
    }
    if !g.is_unicyclic() {
        return Err(Error::NotUnicyclic);
    }
    if !g.is_bipartite() {
        return Err(Error::NotBipartite);
    }
    let cycle = g.unique_cycle()?;
    require(cycle.len() >= 6, "cycle length at least 6")?;
    let mut on_cycle = alloc::vec![false; g.order()];
    for &c in &cycle {
        on_cycle[c] = true;
    }
    let off_ok = (0..g.order())
        .filter(|&x| !on_cycle[x])
        .all(|x| g.degree(x) == 1 && on_cycle[g.neighbors(x)[0]]);
    require(off_ok, "every vertex off the cycle is a leaf on the cycle")?;
    let hubs = cycle.iter().filter(|&&c| g.degree(c) > 2).count();
    require(hubs <= 2, "at most two cycle vertices carry leaves")?;
    Ok(cycle)
}

/// The lexicographically smallest labeling `v_1..v_{2k}` of the cycle whose
/// first four vertices carry no leaves.
pub fn op3_labeling(g: &Graph) -> Result<Vec<usize>> {
    let cycle = op3_cycle(g)?;
    let len = cycle.len();
    let mut best: Option<Vec<usize>> = None;
    for start in 0..len {
        for step in [1, len - 1] {
            let labeling: Vec<usize> = (0..len).map(|t| cycle[(start + t * step) % len]).collect();
            if labeling[..4].iter().all(|&x| g.degree(x) == 2) && best.as_ref().is_none_or(|b| labeling < *b) {
                best = Some(labeling);
            }
        }
    }
    best.ok_or(Error::PreconditionViolated("no valid labeling"))
}

/// The third move under [`op3_labeling`]: `G - v1 v2 + v1 v4`.
pub fn apply_op3(g: &Graph) -> Result<Graph> {
    let l = op3_labeling(g)?;
    Ok(shorten(g, l[0], l[1], l[3]))
}

/// The third move with an explicit choice of `v1`, `v2` and `v4`.
pub fn apply_op3_at(g: &Graph, v1: usize, v2: usize, v4: usize) -> Result<Graph> {
    check_vertices(g, &[v1, v2, v4])?;
    let cycle = op3_cycle(g)?;
    let len = cycle.len();
    let pos = |x: usize| cycle.iter().position(|&c| c == x);
    let (Some(a), Some(b)) = (pos(v1), pos(v2)) else {
        return Err(Error::PreconditionViolated("v1 and v2 lie on the cycle"));
    };
    let step = if (a + 1) % len == b {
        1
    } else if (b + 1) % len == a {
        len - 1
    } else {
        return Err(Error::PreconditionViolated("v1 v2 is a cycle edge"));
    };
    let run: Vec<usize> = (0..4).map(|t| cycle[(a + t * step) % len]).collect();
    require(run[3] == v4, "v4 is two steps past v2 along the cycle")?;
    require(run.iter().all(|&x| g.degree(x) == 2), "v1 to v4 carry no leaves")?;
    Ok(shorten(g, v1, v2, v4))
}

fn shorten(g: &Graph, v1: usize, v2: usize, v4: usize) -> Graph {
    let mut h = g.clone();
    h.remove_edge(v1, v2).expect("cycle edge");
    h.insert(v1, v4);
    h
}

/// Every valid first-move triple `(u, v, w)` of `g`.
pub fn op1_moves(g: &Graph) -> Vec<GraftMove> {
    let mut out = Vec::new();
    if g.order() < 3 || !g.is_connected() || !g.is_bipartite() {
        return out;
    }
    for u in 0..g.order() {
        if g.degree(u) != 1 {
            continue;
        }
        let v = g.neighbors(u)[0];
        for w in 0..g.order() {
            if w != u && w != v && g.degree(w) >= g.degree(v) {
                out.push(GraftMove::OpI { u, v, w });
            }
        }
    }
    out
}

/// Every valid second-move triple `(u, v, w)` of `g`.
pub fn op2_moves(g: &Graph) -> Vec<GraftMove> {
    let mut out = Vec::new();
    if !g.is_connected() || !g.is_bipartite() {
        return out;
    }
    for u in 0..g.order() {
        for &v in g.neighbors(u) {
            let others = g.neighbors(u).iter().filter(|&&z| z != v);
            if g.degree(u) < 2 || !others.clone().all(|&z| g.degree(z) == 1) {
                continue;
            }
            for &w in g.neighbors(v) {
                if w != u && g.degree(w) >= 2 {
                    out.push(GraftMove::OpII { u, v, w });
                }
            }
        }
    }
    out
}

/// Every valid `(v, u)` pair for the leaf-collapse move on a tree.
pub fn lemma35_moves(g: &Graph) -> Vec<GraftMove> {
    let mut out = Vec::new();
    if !g.is_tree() {
        return out;
    }
    for v in 0..g.order() {
        let inner: Vec<usize> = g.neighbors(v).iter().copied().filter(|&z| g.degree(z) >= 2).collect();
        if inner.len() == 1 && g.degree(v) >= 2 {
            out.push(GraftMove::Lemma35 { v, u: inner[0] });
        }
    }
    out
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::canon::is_isomorphic;
    use crate::families::{build, FamilySpec};
    use crate::permanent::laplacian_permanent;
    use alloc::string::ToString;
    use num_bigint::BigInt;

    fn perm(g: &Graph) -> BigInt {
        laplacian_permanent(g).unwrap()
    }

    #[test]
    fn op1_path_to_star() {
        let p4 = Graph::path(4);
        let s = apply_op1(&p4, 0, 1, 2).unwrap();
        assert!(is_isomorphic(&s, &Graph::star(4)).unwrap());
        assert_eq!((perm(&p4), perm(&s)), (BigInt::from(10), BigInt::from(6)));
        assert_eq!(
            apply_op1(&Graph::star(4).relabel(&[1, 0, 2, 3]).unwrap(), 0, 1, 2),
            Err(Error::PreconditionViolated("d(w) >= d(v)"))
        );
        assert_eq!(
            apply_op1(&p4, 1, 2, 3),
            Err(Error::PreconditionViolated("u is pendant"))
        );
    }

    #[test]
    fn op2_path_to_broom() {
        // w' - w - v - u - u1 as 0 - 1 - 2 - 3 - 4
        let p5 = Graph::path(5);
        let h = apply_op2(&p5, 3, 2, 1).unwrap();
        let broom = build(&FamilySpec::Broom { n: 5, d: 3, i: 2 }).unwrap();
        assert!(is_isomorphic(&h, &broom).unwrap());
        assert_eq!((perm(&p5), perm(&h)), (BigInt::from(24), BigInt::from(16)));
        assert!(apply_op2(&p5, 4, 3, 2).is_err());
        let g = Graph::from_edges(6, &[(0, 1), (1, 2), (2, 3), (3, 4), (4, 5)]).unwrap();
        assert_eq!(
            apply_op2(&g, 3, 2, 1),
            Err(Error::PreconditionViolated("every neighbor of u besides v is pendant"))
        );
    }

    #[test]
    fn op3_on_hexagon() {
        let c6 = Graph::cycle(6);
        let h = apply_op3(&c6).unwrap();
        let tail = build(&FamilySpec::c4([(0, 2), (0, 0), (0, 0), (0, 0)])).unwrap();
        assert!(is_isomorphic(&h, &tail).unwrap());
        assert!(perm(&h) < perm(&c6));
        assert!(apply_op3(&Graph::cycle(4)).is_err());
    }

    #[test]
    fn op3_on_g2() {
        for (p, q) in [(3, 3), (3, 5), (4, 6)] {
            let g = build(&FamilySpec::G2 { p, q }).unwrap();
            assert_eq!(op3_labeling(&g).unwrap(), alloc::vec![0, 1, 2, 3, 4, 5]);
            let h = apply_op3(&g).unwrap();
            let target = build(&FamilySpec::c4([(0, 2), (q - 3, 0), (p - 3, 0), (0, 0)])).unwrap();
            assert!(is_isomorphic(&h, &target).unwrap());
        }
    }

    #[test]
    fn op3_explicit_labeling() {
        let c6 = Graph::cycle(6);
        assert_eq!(apply_op3_at(&c6, 0, 1, 3).unwrap(), apply_op3(&c6).unwrap());
        assert!(apply_op3_at(&c6, 0, 1, 4).is_err());
        assert!(apply_op3_at(&c6, 0, 2, 3).is_err());
    }

    #[test]
    fn lemma35_collapse() {
        // T(7,4,2): leaves 4,5 on label 0, leaf 6 on label 3.
        let g = build(&FamilySpec::TEndAttach { n: 7, k: 4, a: 2 }).unwrap();
        let h = apply_lemma35(&g, 0, 1).unwrap();
        assert!(perm(&h) < perm(&g));
        assert!(apply_lemma35(&g, 1, 2).is_err());
        assert_eq!(
            apply_lemma35(&Graph::path(5), 2, 3),
            Err(Error::PreconditionViolated("u is the only non-pendant neighbor of v"))
        );
    }

    #[test]
    fn move_syntax() {
        for text in [
            "op1(u=0,v=1,w=2)",
            "op2(u=3,v=2,w=1)",
            "op3(v1=0,v2=1,v4=3)",
            "lemma35(v=0,u=1)",
        ] {
            let m: GraftMove = text.parse().unwrap();
            assert_eq!(m.to_string(), text);
        }
        assert_eq!(
            "op1(0,1,2)".parse::<GraftMove>().unwrap(),
            GraftMove::OpI { u: 0, v: 1, w: 2 }
        );
    }

    #[test]
    fn enumerated_moves_are_valid() {
        let g = build(&FamilySpec::TEndAttach { n: 8, k: 4, a: 2 }).unwrap();
        for mv in op1_moves(&g).iter().chain(&op2_moves(&g)).chain(&lemma35_moves(&g)) {
            assert!(mv.apply(&g).is_ok(), "{mv}");
        }
    }
}
