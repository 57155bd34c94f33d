//! Named graph families and their text syntax.
//!
//! Every constructor is deterministic. Labelings put the spine first (the
//! path, the cycle, or the pair of centers) and then the attachments in the
//! order the parameters list them, so named vertices can be looked up with
//! [`vertex_roles`].
//!
//! Text syntax, one form per family:
//!
//! ```text
//! P(n)  S(n)  C(n)  D(p,q)  D'(a,b)  D''(a,b)  T(n,k,a)
//! T(n=..,d=..,i=..)  Cat(n=..,d=..)  Tm(n=..,m=..)  T2(n=..,r=..,s=..)
//! B(p,q)  C4(1^s k, 1^s k, 1^s k, 1^s k)  G1(p,q)  G2(p,q)  Ghat(i,n=..)
//! ```
//!
//! `D'(a,b)` and `D''(a,b)` use the double-star arguments of the underlying
//! `D(a,b)`, so the bipartition is `(a+1, b+1)`.

use alloc::collections::BTreeMap;
use alloc::format;
use alloc::string::{String, ToString};
use alloc::vec::Vec;
use core::fmt;
use core::str::FromStr;

use crate::error::{invalid, Error, Result};
use crate::graph::{Graph, GraphKind};

/// Largest order any constructor will materialize.
pub const BUILD_LIMIT: usize = 1 << 16;

/// One cycle vertex decoration of `C4(1^s k, ...)`: `pendants` leaves on the
/// cycle vertex, and for `star > 0` an extra neighbor carrying `star - 1`
/// leaves of its own.
#[derive(Clone, Copy, Debug, Default, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct Attachment {
    pub pendants: usize,
    pub star: usize,
}

impl Attachment {
    pub const fn new(pendants: usize, star: usize) -> Self {
        Attachment { pendants, star }
    }
}

#[derive(Clone, Debug, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub enum FamilySpec {
    /// Labels `0..n` along the path.
    Path(usize),
    /// Center `0`.
    Star(usize),
    Cycle(usize),
    /// Centers `v = 0` (with `p - 1` leaves) and `w = 1` (with `q - 1`).
    DoubleStar {
        p: usize,
        q: usize,
    },
    /// `D(p-1, q-1)` plus a pendant path of length two on `w`.
    DPrime {
        p: usize,
        q: usize,
    },
    /// `D(p-1, q-1)` plus a pendant path of length two on `v`.
    DDoublePrime {
        p: usize,
        q: usize,
    },
    /// Path on `k` vertices with `a` leaves on label `0` and `n - k - a` on
    /// label `k - 1`.
    TEndAttach {
        n: usize,
        k: usize,
        a: usize,
    },
    /// Path `v_1..v_{d+1}` (labels `0..=d`) with `n - d - 1` leaves on `v_i`.
    Broom {
        n: usize,
        d: usize,
        i: usize,
    },
    /// The broom with its leaves on the middle vertex `v_{floor(d/2)}`.
    Caterpillar {
        n: usize,
        d: usize,
    },
    /// Star on `n - m + 1` vertices with a pendant edge on `m - 1` leaves.
    MatchingTree {
        n: usize,
        m: usize,
    },
    /// `T(n, 2r, s)`: the end-attach tree on a path of `2r` vertices.
    TwoCenter {
        n: usize,
        r: usize,
        s: usize,
    },
    /// `C4(1^{p-2}0, 1^{q-2}0, 1^0 0, 1^0 0)`.
    Bpq {
        p: usize,
        q: usize,
    },
    /// Square `v_1..v_4` (labels `0..4`) with per-vertex decorations.
    C4(Attachment, Attachment, Attachment, Attachment),
    /// Hexagon with `q - 3` leaves on label `0` and `p - 3` on the opposite
    /// label `3`.
    G1 {
        p: usize,
        q: usize,
    },
    /// Hexagon with `q - 3` leaves on label `4` and `p - 3` on the adjacent
    /// label `5`.
    G2 {
        p: usize,
        q: usize,
    },
    /// The eight small-bipartition candidates, bipartition `(3, n - 3)`.
    GHat {
        index: usize,
        n: usize,
    },
}

fn need(cond: bool, msg: &str) -> Result<()> {
    if cond {
        Ok(())
    } else {
        Err(invalid(msg))
    }
}

impl FamilySpec {
    pub fn c4(decorations: [(usize, usize); 4]) -> Self {
        let [a, b, c, d] = decorations.map(|(s, k)| Attachment::new(s, k));
        FamilySpec::C4(a, b, c, d)
    }

    /// Checks the parameter constraints without building anything.
    pub fn validate(&self) -> Result<()> {
        use FamilySpec::*;
        match *self {
            Path(n) | Star(n) => need(n >= 1, "n >= 1")?,
            Cycle(n) => need(n >= 3, "n >= 3")?,
            DoubleStar { p, q } => need(p >= 1 && q >= 1, "p >= 1 and q >= 1")?,
            DPrime { p, q } | DDoublePrime { p, q } => need(p >= 2 && q >= 2, "p >= 2 and q >= 2")?,
            TEndAttach { n, k, a } => {
                need(k >= 2, "k >= 2")?;
                need(k.checked_add(a).is_some_and(|x| x <= n), "k + a <= n")?;
            }
            Broom { n, d, i } => {
                need(d >= 2, "d >= 2")?;
                need((2..=d).contains(&i), "2 <= i <= d")?;
                need(n > d, "n >= d + 1")?;
            }
            Caterpillar { n, d } => {
                need(d >= 4, "d >= 4")?;
                need(n > d, "n >= d + 1")?;
            }
            MatchingTree { n, m } => {
                need(m >= 1, "m >= 1")?;
                need(m.checked_mul(2).is_some_and(|x| x <= n), "n >= 2m")?;
            }
            TwoCenter { n, r, s } => {
                need(r >= 1, "r >= 1")?;
                need(
                    r.checked_mul(2).and_then(|x| x.checked_add(s)).is_some_and(|x| x <= n),
                    "2r + s <= n",
                )?;
            }
            Bpq { p, q } => need(p >= 2 && q >= 2, "p >= 2 and q >= 2")?,
            C4(..) => {}
            G1 { p, q } | G2 { p, q } => need(p >= 3 && q >= 3, "p >= 3 and q >= 3")?,
            GHat { index, n } => {
                need((1..=8).contains(&index), "index in 1..=8")?;
                need(n >= 7, "n >= 7")?;
            }
        }
        match self.checked_order() {
            Some(n) if n <= BUILD_LIMIT => Ok(()),
            _ => Err(invalid(format!("order exceeds {BUILD_LIMIT}"))),
        }
    }

    fn checked_order(&self) -> Option<usize> {
        use FamilySpec::*;
        match *self {
            Path(n) | Star(n) | Cycle(n) => Some(n),
            DoubleStar { p, q } | DPrime { p, q } | DDoublePrime { p, q } => p.checked_add(q),
            TEndAttach { n, .. }
            | Broom { n, .. }
            | Caterpillar { n, .. }
            | MatchingTree { n, .. }
            | TwoCenter { n, .. }
            | GHat { n, .. } => Some(n),
            Bpq { p, q } | G1 { p, q } | G2 { p, q } => p.checked_add(q),
            C4(a, b, c, d) => [a, b, c, d]
                .iter()
                .try_fold(4usize, |acc, x| acc.checked_add(x.pendants)?.checked_add(x.star)),
        }
    }

    /// Vertex count of the built graph.
    pub fn order(&self) -> Result<usize> {
        self.validate()?;
        Ok(self.checked_order().unwrap_or(0))
    }

    /// The structural class every member of the family belongs to.
    pub fn declared_kind(&self) -> GraphKind {
        use FamilySpec::*;
        match self {
            Cycle(_) | Bpq { .. } | C4(..) | G1 { .. } | G2 { .. } | GHat { .. } => GraphKind::Unicyclic,
            _ => GraphKind::Tree,
        }
    }

    /// The `(p, q)` bipartition the family is defined to have, where the
    /// parameters fix it.
    pub fn declared_bipartition(&self) -> Option<(usize, usize)> {
        use FamilySpec::*;
        let sorted = |a: usize, b: usize| (a.min(b), a.max(b));
        match *self {
            DoubleStar { p, q }
            | DPrime { p, q }
            | DDoublePrime { p, q }
            | Bpq { p, q }
            | G1 { p, q }
            | G2 { p, q } => Some(sorted(p, q)),
            GHat { n, .. } => Some((3, n.saturating_sub(3))),
            _ => None,
        }
    }

    fn build_with_roles(&self) -> Result<(Graph, BTreeMap<String, usize>)> {
        self.validate()?;
        let mut roles = BTreeMap::new();
        let name = |roles: &mut BTreeMap<String, usize>, key: String, v: usize| {
            roles.insert(key, v);
        };
        let path_roles = |roles: &mut BTreeMap<String, usize>, len: usize| {
            for i in 0..len {
                roles.insert(format!("v{}", i + 1), i);
            }
        };
        use FamilySpec::*;
        let g = match *self {
            Path(n) => {
                path_roles(&mut roles, n);
                Graph::path(n)
            }
            Star(n) => {
                name(&mut roles, "center".into(), 0);
                Graph::star(n)
            }
            Cycle(n) => {
                path_roles(&mut roles, n);
                Graph::cycle(n)
            }
            DoubleStar { p, q } => {
                name(&mut roles, "v".into(), 0);
                name(&mut roles, "w".into(), 1);
                double_star(p, q)
            }
            DPrime { p, q } | DDoublePrime { p, q } => {
                let mut g = double_star(p - 1, q - 1);
                let hub = usize::from(matches!(self, DPrime { .. }));
                let x = g.add_vertex();
                let y = g.add_vertex();
                g.insert(hub, x);
                g.insert(x, y);
                name(&mut roles, "v".into(), 0);
                name(&mut roles, "w".into(), 1);
                name(&mut roles, "x".into(), x);
                name(&mut roles, "y".into(), y);
                g
            }
            TEndAttach { n, k, a } => {
                path_roles(&mut roles, k);
                end_attach(n, k, a)
            }
            TwoCenter { n, r, s } => {
                let k = 2 * r;
                name(&mut roles, "v0".into(), 0);
                name(&mut roles, "u0".into(), k - 1);
                for j in 1..r {
                    name(&mut roles, format!("u{j}"), 2 * j - 1);
                    name(&mut roles, format!("v{j}"), 2 * j);
                }
                end_attach(n, k, s)
            }
            Broom { n, d, i } => {
                path_roles(&mut roles, d + 1);
                broom(n, d, i)
            }
            Caterpillar { n, d } => {
                path_roles(&mut roles, d + 1);
                broom(n, d, d / 2)
            }
            MatchingTree { n, m } => {
                name(&mut roles, "center".into(), 0);
                let mut g = Graph::star(n - m + 1);
                for leaf in 1..m {
                    g.attach_pendants(leaf, 1);
                }
                g
            }
            Bpq { p, q } => {
                c4_roles(&mut roles, [p - 2, q - 2, 0, 0].map(|s| Attachment::new(s, 0)));
                c4_graph([p - 2, q - 2, 0, 0].map(|s| Attachment::new(s, 0)))
            }
            C4(a, b, c, d) => {
                c4_roles(&mut roles, [a, b, c, d]);
                c4_graph([a, b, c, d])
            }
            G1 { p, q } | G2 { p, q } => {
                let (v0, u0) = if matches!(self, G1 { .. }) { (0, 3) } else { (4, 5) };
                let mut g = Graph::cycle(6);
                g.attach_pendants(v0, q - 3);
                g.attach_pendants(u0, p - 3);
                for j in 0..6 {
                    name(&mut roles, format!("h{}", j + 1), j);
                }
                name(&mut roles, "v0".into(), v0);
                name(&mut roles, "u0".into(), u0);
                g
            }
            GHat { index, n } => {
                let g = ghat(index, n, &mut roles);
                for j in 0..4 {
                    roles.insert(format!("v{}", j + 1), j);
                }
                g
            }
        };
        Ok((g, roles))
    }
}

fn double_star(p: usize, q: usize) -> Graph {
    let mut g = Graph::path(2);
    g.attach_pendants(0, p - 1);
    g.attach_pendants(1, q - 1);
    g
}

fn end_attach(n: usize, k: usize, a: usize) -> Graph {
    let mut g = Graph::path(k);
    g.attach_pendants(0, a);
    g.attach_pendants(k - 1, n - k - a);
    g
}

fn broom(n: usize, d: usize, i: usize) -> Graph {
    let mut g = Graph::path(d + 1);
    g.attach_pendants(i - 1, n - d - 1);
    g
}

fn c4_graph(deco: [Attachment; 4]) -> Graph {
    let mut g = Graph::cycle(4);
    for (v, a) in deco.iter().enumerate() {
        g.attach_pendants(v, a.pendants);
        if a.star > 0 {
            let c = g.add_vertex();
            g.insert(v, c);
            g.attach_pendants(c, a.star - 1);
        }
    }
    g
}

fn c4_roles(roles: &mut BTreeMap<String, usize>, deco: [Attachment; 4]) {
    let mut next = 4;
    for (v, a) in deco.iter().enumerate() {
        roles.insert(format!("v{}", v + 1), v);
        next += a.pendants;
        if a.star > 0 {
            roles.insert(format!("c{}", v + 1), next);
            next += a.star;
        }
    }
}

// Decorations on the square `0..4`; vertex `0` is the hub in every case.
fn ghat(index: usize, n: usize, roles: &mut BTreeMap<String, usize>) -> Graph {
    let c4 = |d: [(usize, usize); 4]| c4_graph(d.map(|(s, k)| Attachment::new(s, k)));
    match index {
        1 => c4([(n - 6, 2), (0, 0), (0, 0), (0, 0)]),
        2 => c4([(1, 0), (1, 0), (n - 6, 0), (0, 0)]),
        3 => {
            let mut g = c4([(n - 7, 0), (0, 0), (0, 0), (0, 0)]);
            let mut prev = 0;
            for _ in 0..3 {
                let x = g.add_vertex();
                g.insert(prev, x);
                prev = x;
            }
            g
        }
        4 => c4([(n - 6, 0), (0, 2), (0, 0), (0, 0)]),
        5 => c4([(0, n - 4), (0, 0), (0, 0), (0, 0)]),
        6 => c4([(n - 7, 2), (0, 0), (1, 0), (0, 0)]),
        7 => {
            let mut g = Graph::cycle(4);
            let w = g.add_vertex();
            let c = g.add_vertex();
            g.insert(0, w);
            g.insert(w, c);
            g.attach_pendants(c, n - 6);
            roles.insert("c".into(), c);
            g
        }
        _ => c4([(0, n - 5), (1, 0), (0, 0), (0, 0)]),
    }
}

/// The labeled graph of a family member.
pub fn build(spec: &FamilySpec) -> Result<Graph> {
    Ok(spec.build_with_roles()?.0)
}

/// Names of distinguished vertices (`v`, `w`, `v1`, `u0`, ...) in [`build`]'s labeling.
pub fn vertex_roles(spec: &FamilySpec) -> Result<BTreeMap<String, usize>> {
    Ok(spec.build_with_roles()?.1)
}

impl fmt::Display for Attachment {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "1^{} {}", self.pendants, self.star)
    }
}

impl fmt::Display for FamilySpec {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        use FamilySpec::*;
        match self {
            Path(n) => write!(f, "P({n})"),
            Star(n) => write!(f, "S({n})"),
            Cycle(n) => write!(f, "C({n})"),
            DoubleStar { p, q } => write!(f, "D({p},{q})"),
            DPrime { p, q } => write!(f, "D'({},{})", p - 1, q - 1),
            DDoublePrime { p, q } => write!(f, "D''({},{})", p - 1, q - 1),
            TEndAttach { n, k, a } => write!(f, "T({n},{k},{a})"),
            Broom { n, d, i } => write!(f, "T(n={n},d={d},i={i})"),
            Caterpillar { n, d } => write!(f, "Cat(n={n},d={d})"),
            MatchingTree { n, m } => write!(f, "Tm(n={n},m={m})"),
            TwoCenter { n, r, s } => write!(f, "T2(n={n},r={r},s={s})"),
            Bpq { p, q } => write!(f, "B({p},{q})"),
            C4(a, b, c, d) => write!(f, "C4({a}, {b}, {c}, {d})"),
            G1 { p, q } => write!(f, "G1({p},{q})"),
            G2 { p, q } => write!(f, "G2({p},{q})"),
            GHat { index, n } => write!(f, "Ghat({index},n={n})"),
        }
    }
}

/// A parsed `name(arg, key=arg, ...)` call.
pub(crate) struct Call<'a> {
    pub name: &'a str,
    pub args: Vec<(Option<&'a str>, &'a str)>,
}

pub(crate) fn parse_call(text: &str) -> Result<Call<'_>> {
    let text = text.trim();
    let open = text
        .find('(')
        .ok_or_else(|| Error::Parse(format!("expected `name(...)`, got `{text}`")))?;
    let body = text[open + 1..]
        .strip_suffix(')')
        .ok_or_else(|| Error::Parse(format!("missing closing `)` in `{text}`")))?;
    let name = text[..open].trim();
    if name.is_empty() {
        return Err(Error::Parse(format!("missing name in `{text}`")));
    }
    let mut args = Vec::new();
    if !body.trim().is_empty() {
        for part in body.split(',') {
            let part = part.trim();
            match part.split_once('=') {
                Some((k, v)) => args.push((Some(k.trim()), v.trim())),
                None => args.push((None, part)),
            }
        }
    }
    Ok(Call { name, args })
}

impl<'a> Call<'a> {
    /// Resolves the arguments against `keys`, accepting positional and
    /// keyword forms, each key exactly once.
    pub fn numbers(&self, keys: &[&str]) -> Result<Vec<usize>> {
        if self.args.len() != keys.len() {
            return Err(Error::Parse(format!(
                "`{}` takes {} arguments, got {}",
                self.name,
                keys.len(),
                self.args.len()
            )));
        }
        let mut out: Vec<Option<usize>> = alloc::vec![None; keys.len()];
        for (pos, (key, value)) in self.args.iter().enumerate() {
            let slot = match key {
                None => pos,
                Some(k) => keys
                    .iter()
                    .position(|x| x == k)
                    .ok_or_else(|| Error::Parse(format!("`{}` has no argument `{k}`", self.name)))?,
            };
            if out[slot].is_some() {
                return Err(Error::Parse(format!("argument `{}` given twice", keys[slot])));
            }
            out[slot] = Some(number(value)?);
        }
        Ok(out.into_iter().map(|x| x.unwrap_or(0)).collect())
    }

    pub fn has_keywords(&self) -> bool {
        self.args.iter().any(|(k, _)| k.is_some())
    }
}

pub(crate) fn number(text: &str) -> Result<usize> {
    let t = text.trim();
    let t = t.strip_prefix('{').and_then(|x| x.strip_suffix('}')).unwrap_or(t);
    t.parse()
        .map_err(|_| Error::Parse(format!("expected a non-negative integer, got `{text}`")))
}

fn attachment(text: &str) -> Result<Attachment> {
    let bad = || Error::Parse(format!("expected `1^s k`, got `{text}`"));
    let rest = text.trim().strip_prefix("1^").ok_or_else(bad)?;
    let (s, k) = if let Some(inner) = rest.strip_prefix('{') {
        let close = inner.find('}').ok_or_else(bad)?;
        (&inner[..close], &inner[close + 1..])
    } else {
        rest.split_once(char::is_whitespace).ok_or_else(bad)?
    };
    Ok(Attachment::new(number(s)?, number(k)?))
}

impl FromStr for FamilySpec {
    type Err = Error;

    fn from_str(text: &str) -> Result<Self> {
        let call = parse_call(text)?;
        use FamilySpec::*;
        let spec = match call.name {
            "P" => Path(call.numbers(&["n"])?[0]),
            "S" => Star(call.numbers(&["n"])?[0]),
            "C" => Cycle(call.numbers(&["n"])?[0]),
            "D" => {
                let v = call.numbers(&["p", "q"])?;
                DoubleStar { p: v[0], q: v[1] }
            }
            "D'" | "D''" => {
                let v = call.numbers(&["a", "b"])?;
                let (p, q) = (v[0] + 1, v[1] + 1);
                if call.name == "D'" {
                    DPrime { p, q }
                } else {
                    DDoublePrime { p, q }
                }
            }
            "T" if call.has_keywords() => {
                let v = call.numbers(&["n", "d", "i"])?;
                Broom {
                    n: v[0],
                    d: v[1],
                    i: v[2],
                }
            }
            "T" => {
                let v = call.numbers(&["n", "k", "a"])?;
                TEndAttach {
                    n: v[0],
                    k: v[1],
                    a: v[2],
                }
            }
            "Cat" => {
                let v = call.numbers(&["n", "d"])?;
                Caterpillar { n: v[0], d: v[1] }
            }
            "Tm" => {
                let v = call.numbers(&["n", "m"])?;
                MatchingTree { n: v[0], m: v[1] }
            }
            "T2" => {
                let v = call.numbers(&["n", "r", "s"])?;
                TwoCenter {
                    n: v[0],
                    r: v[1],
                    s: v[2],
                }
            }
            "B" => {
                let v = call.numbers(&["p", "q"])?;
                Bpq { p: v[0], q: v[1] }
            }
            "C4" => {
                if call.args.len() != 4 || call.has_keywords() {
                    return Err(Error::Parse("`C4` takes four `1^s k` arguments".to_string()));
                }
                let mut deco = [Attachment::default(); 4];
                for (slot, (_, value)) in deco.iter_mut().zip(&call.args) {
                    *slot = attachment(value)?;
                }
                C4(deco[0], deco[1], deco[2], deco[3])
            }
            "G1" | "G2" => {
                let v = call.numbers(&["p", "q"])?;
                if call.name == "G1" {
                    G1 { p: v[0], q: v[1] }
                } else {
                    G2 { p: v[0], q: v[1] }
                }
            }
            "Ghat" => {
                let v = call.numbers(&["i", "n"])?;
                GHat { index: v[0], n: v[1] }
            }
            other => return Err(Error::Parse(format!("unknown family `{other}`"))),
        };
        spec.validate()?;
        Ok(spec)
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::canon::is_isomorphic;
    use crate::permanent::laplacian_permanent;
    use num_bigint::BigInt;

    fn perm(spec: &FamilySpec) -> BigInt {
        laplacian_permanent(&build(spec).unwrap()).unwrap()
    }

    #[test]
    fn double_star_two_two_is_p4() {
        let g = build(&FamilySpec::DoubleStar { p: 2, q: 2 }).unwrap();
        assert!(is_isomorphic(&g, &Graph::path(4)).unwrap());
    }

    #[test]
    fn bpq_two_two_is_c4() {
        let g = build(&FamilySpec::Bpq { p: 2, q: 2 }).unwrap();
        assert!(is_isomorphic(&g, &Graph::cycle(4)).unwrap());
        let h = build(&FamilySpec::c4([(0, 0); 4])).unwrap();
        assert_eq!(g, h);
    }

    #[test]
    fn broom_5_3_2_is_double_star() {
        let b = FamilySpec::Broom { n: 5, d: 3, i: 2 };
        let g = build(&b).unwrap();
        assert!(is_isomorphic(&g, &build(&FamilySpec::DoubleStar { p: 2, q: 3 }).unwrap()).unwrap());
        assert_eq!(perm(&b), BigInt::from(16));
    }

    #[test]
    fn c4_star_reading() {
        // `1^0 2` hangs a path of length two off the cycle vertex.
        let g = build(&FamilySpec::c4([(0, 2), (0, 0), (0, 0), (0, 0)])).unwrap();
        assert_eq!(g.order(), 6);
        assert_eq!(g.degree(4), 2);
        assert_eq!(g.degree(5), 1);
    }

    #[test]
    fn roles() {
        let r = vertex_roles(&FamilySpec::DoubleStar { p: 3, q: 4 }).unwrap();
        assert_eq!((r["v"], r["w"]), (0, 1));
        let r = vertex_roles(&FamilySpec::Bpq { p: 3, q: 4 }).unwrap();
        assert_eq!(r.len(), 4);
        let r = vertex_roles(&FamilySpec::Path(5)).unwrap();
        assert_eq!(r["v5"], 4);
    }

    #[test]
    fn invalid_parameters_are_named() {
        let err = build(&FamilySpec::Broom { n: 9, d: 4, i: 1 }).unwrap_err();
        assert_eq!(err, Error::InvalidParameters("2 <= i <= d".into()));
        assert!(build(&FamilySpec::G1 { p: 2, q: 5 }).is_err());
        assert!(build(&FamilySpec::MatchingTree { n: 5, m: 3 }).is_err());
    }

    #[test]
    fn syntax_round_trips() {
        for text in [
            "P(5)",
            "S(4)",
            "C(6)",
            "D(3,5)",
            "D'(2,4)",
            "D''(2,4)",
            "T(9,3,1)",
            "T(n=9,d=4,i=2)",
            "Cat(n=10,d=6)",
            "Tm(n=8,m=3)",
            "T2(n=9,r=2,s=1)",
            "B(3,7)",
            "C4(1^2 0, 1^0 2, 1^0 0, 1^1 0)",
            "G1(3,4)",
            "G2(4,4)",
            "Ghat(4,n=12)",
        ] {
            let spec: FamilySpec = text.parse().unwrap();
            assert_eq!(spec.to_string(), text);
        }
        let loose: FamilySpec = "T(i=2, n=9, d=4)".parse().unwrap();
        assert_eq!(loose, FamilySpec::Broom { n: 9, d: 4, i: 2 });
        let braces: FamilySpec = "C4(1^{2}0,1^0 2,1^0 0,1^{1} 0)".parse().unwrap();
        assert_eq!(braces.to_string(), "C4(1^2 0, 1^0 2, 1^0 0, 1^1 0)");
        assert!("Q(3)".parse::<FamilySpec>().is_err());
        assert!("D(3,5".parse::<FamilySpec>().is_err());
        assert!("D(3)".parse::<FamilySpec>().is_err());
    }
}
