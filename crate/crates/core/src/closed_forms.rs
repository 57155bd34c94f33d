//! Exact evaluation of closed-form permanent formulas.
//!
//! The irrational forms in powers of `1 ± √2` are evaluated through their
//! integer recurrences:
//!
//! - `q_n = 2 q_{n-1} + q_{n-2}`, `q_0 = q_1 = 1` (the permanent of `Q_n`),
//! - `s_n = 2 s_{n-1} + s_{n-2}`, `s_0 = 0`, `s_1 = 1`,
//! - `p_n = 2 p_{n-1} + p_{n-2}`, `p_1 = 0`, `p_2 = 2` (the path permanent),
//!
//! and the broom value `(n-d+√2/2)(1+√2)^{d-1} + (n-d-√2/2)(1-√2)^{d-1}`
//! becomes `2(n-d) q_{d-1} + 2 s_{d-1}`.
//!
//! The unicyclic formulas are all of the shape `a·pq + b·p + c·q + d·n + e`
//! with `n = p + q`, so they are stored as coefficient rows.

use alloc::format;
use alloc::rc::Rc;
use alloc::string::ToString;
use alloc::vec::Vec;
use core::fmt;
use core::str::FromStr;

use num_bigint::BigInt;
use num_traits::One;

use crate::error::{invalid, Error, Result};
use crate::families::{parse_call, FamilySpec};

/// Upper end of the index range `lemma34_gap` and the Pell helpers accept.
pub const PELL_LIMIT: usize = 100_000;

/// The thirteen bipartite unicyclic candidates for second and third place
/// in a `(p, q)` class with `q > p >= 4`.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub enum Candidate {
    /// `C4(1^{q-2}0, 1^{p-3}0, 1^0 0, 1^1 0)`.
    SecondA,
    /// `C4(1^{q-3}0, 1^{p-2}0, 1^1 0, 1^0 0)`.
    SecondB,
    /// `C4(1^{q-3}2, 1^{p-3}0, 1^0 0, 1^0 0)`.
    PathQ,
    /// `C4(1^{q-3}0, 1^{p-3}2, 1^0 0, 1^0 0)`.
    PathP,
    /// `C4(1^{q-3}(p-1), 1^0 0, 1^0 0, 1^0 0)`.
    StarQ,
    /// `C4(1^0 0, 1^{p-3}(q-1), 1^0 0, 1^0 0)`.
    StarP,
    /// `C4(1^{q-3}0, 1^{p-4}2, 1^0 0, 1^1 0)`.
    Third1,
    /// `C4(1^{q-3}2, 1^{p-4}0, 1^0 0, 1^1 0)`.
    Third2,
    /// `C4(1^{q-3}0, 1^{p-3}0, 1^0 0, 1^0 2)`.
    Third3,
    /// `C4(1^{q-3}0, 1^{p-3}0, 1^1 0, 1^1 0)`.
    Third4,
    /// `C4(1^0 0, 1^{p-4}(q-1), 1^0 0, 1^1 0)`.
    Third5,
    /// `C4(1^{q-3}(p-2), 1^0 0, 1^0 0, 1^1 0)`.
    Third6,
    /// `C4(1^0 0, 1^{p-3}0, 1^0 0, 1^0(q-1))`.
    Third7,
}

impl Candidate {
    pub const ALL: [Candidate; 13] = [
        Candidate::SecondA,
        Candidate::SecondB,
        Candidate::PathQ,
        Candidate::PathP,
        Candidate::StarQ,
        Candidate::StarP,
        Candidate::Third1,
        Candidate::Third2,
        Candidate::Third3,
        Candidate::Third4,
        Candidate::Third5,
        Candidate::Third6,
        Candidate::Third7,
    ];

    /// Candidates considered for second place.
    pub const SECOND: [Candidate; 6] = [
        Candidate::SecondA,
        Candidate::SecondB,
        Candidate::PathQ,
        Candidate::PathP,
        Candidate::StarP,
        Candidate::StarQ,
    ];

    /// Candidates considered for third place.
    pub const THIRD: [Candidate; 9] = [
        Candidate::SecondB,
        Candidate::PathQ,
        Candidate::Third1,
        Candidate::Third2,
        Candidate::Third3,
        Candidate::Third4,
        Candidate::Third5,
        Candidate::Third6,
        Candidate::Third7,
    ];

    pub fn name(self) -> &'static str {
        use Candidate::*;
        match self {
            SecondA => "sec_a",
            SecondB => "sec_b",
            PathQ => "path_q",
            PathP => "path_p",
            StarQ => "star_q",
            StarP => "star_p",
            Third1 => "third1",
            Third2 => "third2",
            Third3 => "third3",
            Third4 => "third4",
            Third5 => "third5",
            Third6 => "third6",
            Third7 => "third7",
        }
    }

    fn from_name(name: &str) -> Option<Candidate> {
        Candidate::ALL.into_iter().find(|c| c.name() == name)
    }

    // (pq, p, q, n, constant)
    fn coefficients(self) -> [i64; 5] {
        use Candidate::*;
        match self {
            SecondA => [36, 0, -32, -32, 68],
            SecondB => [36, -32, 0, -32, 68],
            PathQ => [60, 0, -40, -68, 144],
            PathP => [60, -40, 0, -68, 144],
            StarQ => [48, 24, 0, -72, 84],
            StarP => [48, 0, 24, -72, 84],
            Third1 => [108, 0, -24, -204, 464],
            Third2 => [108, 0, -168, -132, 400],
            Third3 => [92, 0, 8, -172, 336],
            Third4 => [68, 0, 0, -128, 260],
            Third5 => [80, 0, -40, -120, 260],
            Third6 => [88, 0, -120, -100, 272],
            Third7 => [64, 8, 0, -96, 132],
        }
    }

    /// The square decorations, or `None` when a count would go negative.
    pub fn decorations(self, p: usize, q: usize) -> Option<[(usize, usize); 4]> {
        use Candidate::*;
        let p1 = p.checked_sub(1)?;
        let q1 = q.checked_sub(1)?;
        let p2 = p.checked_sub(2)?;
        let q2 = q.checked_sub(2)?;
        let q3 = q.checked_sub(3)?;
        let p3 = p.checked_sub(3)?;
        let p4 = p.checked_sub(4);
        Some(match self {
            SecondA => [(q2, 0), (p3, 0), (0, 0), (1, 0)],
            SecondB => [(q3, 0), (p2, 0), (1, 0), (0, 0)],
            PathQ => [(q3, 2), (p3, 0), (0, 0), (0, 0)],
            PathP => [(q3, 0), (p3, 2), (0, 0), (0, 0)],
            StarQ => [(q3, p1), (0, 0), (0, 0), (0, 0)],
            StarP => [(0, 0), (p3, q1), (0, 0), (0, 0)],
            Third1 => [(q3, 0), (p4?, 2), (0, 0), (1, 0)],
            Third2 => [(q3, 2), (p4?, 0), (0, 0), (1, 0)],
            Third3 => [(q3, 0), (p3, 0), (0, 0), (0, 2)],
            Third4 => [(q3, 0), (p3, 0), (1, 0), (1, 0)],
            Third5 => [(0, 0), (p4?, q1), (0, 0), (1, 0)],
            Third6 => [(q3, p2), (0, 0), (0, 0), (1, 0)],
            Third7 => [(0, 0), (p3, 0), (0, 0), (0, q1)],
        })
    }
}

/// Key into the formula table.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub enum FormulaId {
    /// `2(n-1)`, the star.
    StarLowerBound(usize),
    /// `p_n`, the path.
    PathPermanent(usize),
    /// `q_n`.
    QPermanent(usize),
    /// `s_n`.
    PellS(usize),
    /// `(2p-1)(2q-1)+1`.
    DStar {
        p: usize,
        q: usize,
    },
    /// `(2p-3)(6q-5)+3`.
    DPrime {
        p: usize,
        q: usize,
    },
    /// `(2q-3)(6p-5)+3`.
    DDoublePrime {
        p: usize,
        q: usize,
    },
    /// `-8(i-(n-3)/2)^2 + 2(n-3)^2 + 6n - 14`.
    T3i {
        n: usize,
        i: usize,
    },
    /// `2(n-d) q_{d-1} + 2 s_{d-1}`.
    Broom {
        n: usize,
        d: usize,
    },
    /// `p_{d+1} + 2(n-d-1) q_{i-1} q_{d-i+1}`.
    BroomGeneral {
        n: usize,
        d: usize,
        i: usize,
    },
    /// `20(p-1)(q-1)+4n`.
    Bpq {
        p: usize,
        q: usize,
    },
    /// `100(p-2)(q-2)+40n-140`.
    G1 {
        p: usize,
        q: usize,
    },
    /// `-16(i-(n-4)/2)^2 + 4(n-1)^2`.
    C4Quad {
        n: usize,
        i: usize,
    },
    C4Candidate {
        which: Candidate,
        p: usize,
        q: usize,
    },
    /// `24n-60`, `40n-140`, `44n-160`, `56n-252` for ranks 1 to 4.
    UnicyclicLine {
        rank: usize,
        n: usize,
    },
    /// `72n-276`, `76n-352`, `168n-804`, `112n-516`, `96n-420`, `120n-580`,
    /// `216n-1140`.
    GHatLinear {
        index: usize,
        n: usize,
    },
    /// `(-1)^k (q_{j-1} q_{n-j} - q_{k-1} q_{n-k})`.
    Lemma34 {
        n: usize,
        k: usize,
        j: usize,
    },
}

const UNICYCLIC_LINES: [(i64, i64); 4] = [(24, -60), (40, -140), (44, -160), (56, -252)];
const GHAT_LINES: [(i64, i64); 7] = [
    (72, -276),
    (76, -352),
    (168, -804),
    (112, -516),
    (96, -420),
    (120, -580),
    (216, -1140),
];

fn big(x: usize) -> BigInt {
    BigInt::from(x)
}

fn linear(n: usize, (a, b): (i64, i64)) -> BigInt {
    BigInt::from(a) * big(n) + b
}

fn bilinear(p: usize, q: usize, [a, b, c, d, e]: [i64; 5]) -> BigInt {
    let (p, q) = (big(p), big(q));
    let n = &p + &q;
    BigInt::from(a) * &p * &q + BigInt::from(b) * p + BigInt::from(c) * q + BigInt::from(d) * n + e
}

fn pell_check(n: usize) -> Result<()> {
    if n > PELL_LIMIT {
        return Err(invalid(format!("index {n} exceeds {PELL_LIMIT}")));
    }
    Ok(())
}

/// Terms `x_0..=x_n` of `x_k = 2x_{k-1} + x_{k-2}`.
fn pell_terms(x0: i64, x1: i64, n: usize) -> Vec<BigInt> {
    let mut out = Vec::with_capacity(n + 2);
    out.push(BigInt::from(x0));
    out.push(BigInt::from(x1));
    while out.len() <= n {
        let k = out.len();
        let next = &out[k - 1] * 2u32 + &out[k - 2];
        out.push(next);
    }
    out.truncate(n + 1);
    out
}

fn pell(x0: i64, x1: i64, n: usize) -> BigInt {
    let (mut a, mut b) = (BigInt::from(x0), BigInt::from(x1));
    for _ in 0..n {
        let next = &b * 2u32 + &a;
        a = core::mem::replace(&mut b, next);
    }
    a
}

/// `per Q_n`.
pub fn q_value(n: usize) -> BigInt {
    pell(1, 1, n)
}

/// `s_n`.
pub fn s_value(n: usize) -> BigInt {
    pell(0, 1, n)
}

/// `per L(P_n)` for `n >= 1`.
pub fn path_value(n: usize) -> BigInt {
    // p_0 = 2 continues the sequence backwards: p_2 = 2 p_1 + p_0.
    pell(2, 0, n)
}

/// `per Q_0 ..= per Q_n`.
pub fn q_values(n: usize) -> Vec<BigInt> {
    pell_terms(1, 1, n)
}

impl FormulaId {
    /// Exact value of the formula.
    pub fn eval(&self) -> Result<BigInt> {
        use FormulaId::*;
        Ok(match *self {
            StarLowerBound(n) => {
                if n == 0 {
                    return Err(invalid("n >= 1"));
                }
                big(2 * (n - 1))
            }
            PathPermanent(n) => {
                pell_check(n)?;
                if n == 0 {
                    return Err(invalid("n >= 1"));
                }
                path_value(n)
            }
            QPermanent(n) => {
                pell_check(n)?;
                q_value(n)
            }
            PellS(n) => {
                pell_check(n)?;
                s_value(n)
            }
            DStar { p, q } => bilinear(p, q, [4, -2, -2, 0, 2]),
            DPrime { p, q } => bilinear(p, q, [12, -10, -18, 0, 18]),
            DDoublePrime { p, q } => bilinear(p, q, [12, -18, -10, 0, 18]),
            T3i { n, i } => {
                let (n, i) = (big(n), big(i));
                -8 * &i * &i + 8 * &i * (&n - 3) + 6 * n - 14
            }
            Broom { n, d } => {
                pell_check(d)?;
                if d == 0 {
                    return Err(invalid("d >= 1"));
                }
                2 * (big(n) - big(d)) * q_value(d - 1) + 2 * s_value(d - 1)
            }
            BroomGeneral { n, d, i } => {
                pell_check(d)?;
                if d == 0 || i == 0 || i > d + 1 {
                    return Err(invalid("d >= 1 and 1 <= i <= d + 1"));
                }
                path_value(d + 1) + 2 * (big(n) - big(d) - 1) * q_value(i - 1) * q_value(d - i + 1)
            }
            Bpq { p, q } => bilinear(p, q, [20, -20, -20, 4, 20]),
            G1 { p, q } => bilinear(p, q, [100, -200, -200, 40, 260]),
            C4Quad { n, i } => {
                let (n, i) = (big(n), big(i));
                -16 * &i * &i + 16 * &i * (&n - 4) + 24 * n - 60
            }
            C4Candidate { which, p, q } => bilinear(p, q, which.coefficients()),
            UnicyclicLine { rank, n } => match rank {
                1..=4 => linear(n, UNICYCLIC_LINES[rank - 1]),
                _ => return Err(invalid("rank in 1..=4")),
            },
            GHatLinear { index, n } => match index {
                1..=7 => linear(n, GHAT_LINES[index - 1]),
                _ => return Err(invalid("index in 1..=7")),
            },
            Lemma34 { n, k, j } => lemma34_gap(n, k, j)?,
        })
    }

    /// The family whose Laplacian permanent the formula claims to give.
    /// `Ok(None)` for formulas with no graph behind them; `Err` when the
    /// parameters do not describe a constructible member.
    pub fn family(&self) -> Result<Option<FamilySpec>> {
        use FormulaId::*;
        let sub = |a: usize, b: usize| a.checked_sub(b).ok_or_else(|| invalid("parameters too small"));
        let spec = match *self {
            StarLowerBound(n) => FamilySpec::Star(n),
            PathPermanent(n) => FamilySpec::Path(n),
            QPermanent(_) | PellS(_) | Lemma34 { .. } => return Ok(None),
            DStar { p, q } => FamilySpec::DoubleStar { p, q },
            DPrime { p, q } => FamilySpec::DPrime { p, q },
            DDoublePrime { p, q } => FamilySpec::DDoublePrime { p, q },
            T3i { n, i } => FamilySpec::TEndAttach { n, k: 3, a: i },
            Broom { n, d } => FamilySpec::Broom { n, d, i: 2 },
            BroomGeneral { n, d, i } => FamilySpec::Broom { n, d, i },
            Bpq { p, q } => FamilySpec::Bpq { p, q },
            G1 { p, q } => FamilySpec::G1 { p, q },
            C4Quad { n, i } => FamilySpec::c4([(i, 0), (0, 0), (sub(sub(n, 4)?, i)?, 0), (0, 0)]),
            C4Candidate { which, p, q } => {
                let deco = which.decorations(p, q).ok_or_else(|| invalid("parameters too small"))?;
                FamilySpec::c4(deco)
            }
            UnicyclicLine { rank, n } => match rank {
                1 => FamilySpec::Bpq { p: 2, q: sub(n, 2)? },
                2 => FamilySpec::c4([(1, 0), (0, 0), (sub(n, 5)?, 0), (0, 0)]),
                3 => FamilySpec::Bpq { p: 3, q: sub(n, 3)? },
                4 => FamilySpec::c4([(2, 0), (0, 0), (sub(n, 6)?, 0), (0, 0)]),
                _ => return Err(invalid("rank in 1..=4")),
            },
            GHatLinear { index, n } => {
                if !(1..=7).contains(&index) {
                    return Err(invalid("index in 1..=7"));
                }
                FamilySpec::GHat { index, n }
            }
        };
        spec.validate()?;
        Ok(Some(spec))
    }
}

impl FormulaId {
    /// The closed form that evaluates the permanent of `spec`, if one exists.
    pub fn for_family(spec: &FamilySpec) -> Option<FormulaId> {
        use FamilySpec as F;
        use FormulaId::*;
        Some(match *spec {
            F::Path(n) => PathPermanent(n),
            F::Star(n) => StarLowerBound(n),
            F::DoubleStar { p, q } => DStar { p, q },
            F::DPrime { p, q } => DPrime { p, q },
            F::DDoublePrime { p, q } => DDoublePrime { p, q },
            F::TEndAttach { n, k: 3, a } => T3i { n, i: a },
            F::Broom { n, d, i: 2 } => Broom { n, d },
            F::Broom { n, d, i } => BroomGeneral { n, d, i },
            F::Caterpillar { n, d } => BroomGeneral { n, d, i: d / 2 },
            F::Bpq { p, q } => Bpq { p, q },
            F::G1 { p, q } => G1 { p, q },
            F::GHat { index, n } if index <= 7 => GHatLinear { index, n },
            F::C4(a, b, c, d) => {
                let deco = [a, b, c, d].map(|x| (x.pendants, x.star));
                let n = spec.order().ok()?;
                if deco.iter().all(|&(_, k)| k == 0) && deco[1].0 == 0 && deco[3].0 == 0 {
                    return Some(C4Quad { n, i: deco[0].0 });
                }
                return (2..=n / 2).find_map(|p| {
                    let q = n - p;
                    Candidate::ALL
                        .into_iter()
                        .find(|c| c.decorations(p, q) == Some(deco))
                        .map(|which| C4Candidate { which, p, q })
                });
            }
            _ => return None,
        })
    }
}

/// `(-1)^k (per Q_{j-1} per Q_{n-j} - per Q_{k-1} per Q_{n-k})` for
/// `1 <= k < j <= (n+1)/2`.
pub fn lemma34_gap(n: usize, k: usize, j: usize) -> Result<BigInt> {
    pell_check(n)?;
    if !(1 <= k && k < j && 2 * j <= n + 1) {
        return Err(invalid("1 <= k < j <= (n+1)/2"));
    }
    Ok(gap_from(&q_values(n), n, k, j))
}

fn gap_from(q: &[BigInt], n: usize, k: usize, j: usize) -> BigInt {
    let diff = &q[j - 1] * &q[n - j] - &q[k - 1] * &q[n - k];
    if k % 2 == 1 {
        -diff
    } else {
        diff
    }
}

/// Every `((k, j), gap)` at order `n`, sharing one table of `per Q` values.
pub fn lemma34_gaps(n: usize) -> Result<impl Iterator<Item = ((usize, usize), BigInt)>> {
    pell_check(n)?;
    let q = Rc::new(q_values(n));
    let top = n.div_ceil(2);
    Ok((2..=top).flat_map(move |j| {
        let q = Rc::clone(&q);
        (1..j).map(move |k| ((k, j), gap_from(&q, n, k, j)))
    }))
}

/// Lower and upper bounds on the Laplacian permanent of an `n`-vertex tree:
/// the star value and the path value.
pub fn theorem11_bounds(n: usize) -> Result<(BigInt, BigInt)> {
    if n < 2 {
        return Err(invalid("n >= 2"));
    }
    pell_check(n)?;
    Ok((big(2 * (n - 1)), path_value(n)))
}

/// `q_n^2 - 2 s_n^2 = (-1)^n`, the norm identity behind the closed forms.
pub fn pell_norm_holds(n: usize) -> bool {
    let (q, s) = (q_value(n), s_value(n));
    let lhs = &q * &q - 2 * &s * &s;
    let rhs = if n.is_multiple_of(2) {
        BigInt::one()
    } else {
        -BigInt::one()
    };
    lhs == rhs
}

impl fmt::Display for FormulaId {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        use FormulaId::*;
        match *self {
            StarLowerBound(n) => write!(f, "S({n})"),
            PathPermanent(n) => write!(f, "P({n})"),
            QPermanent(n) => write!(f, "Q({n})"),
            PellS(n) => write!(f, "Pell({n})"),
            DStar { p, q } => write!(f, "D({p},{q})"),
            DPrime { p, q } => write!(f, "D'({},{})", p as i64 - 1, q as i64 - 1),
            DDoublePrime { p, q } => write!(f, "D''({},{})", p as i64 - 1, q as i64 - 1),
            T3i { n, i } => write!(f, "T({n},3,{i})"),
            Broom { n, d } => write!(f, "Broom({n},{d})"),
            BroomGeneral { n, d, i } => write!(f, "T(n={n},d={d},i={i})"),
            Bpq { p, q } => write!(f, "B({p},{q})"),
            G1 { p, q } => write!(f, "G1({p},{q})"),
            C4Quad { n, i } => write!(f, "C4quad({n},{i})"),
            C4Candidate { which, p, q } => write!(f, "{}({p},{q})", which.name()),
            UnicyclicLine { rank, n } => write!(f, "U({rank},{n})"),
            GHatLinear { index, n } => write!(f, "Ghat({index},n={n})"),
            Lemma34 { n, k, j } => write!(f, "lemma34({n},{k},{j})"),
        }
    }
}

impl FromStr for FormulaId {
    type Err = Error;

    fn from_str(text: &str) -> Result<Self> {
        let call = parse_call(text)?;
        use FormulaId::*;
        let one = |key: &str| -> Result<usize> { Ok(call.numbers(&[key])?[0]) };
        let two = |a: &str, b: &str| -> Result<(usize, usize)> {
            let v = call.numbers(&[a, b])?;
            Ok((v[0], v[1]))
        };
        Ok(match call.name {
            "S" => StarLowerBound(one("n")?),
            "P" => PathPermanent(one("n")?),
            "Q" => QPermanent(one("n")?),
            "Pell" => PellS(one("n")?),
            "D" => {
                let (p, q) = two("p", "q")?;
                DStar { p, q }
            }
            "D'" => {
                let (a, b) = two("a", "b")?;
                DPrime { p: a + 1, q: b + 1 }
            }
            "D''" => {
                let (a, b) = two("a", "b")?;
                DDoublePrime { p: a + 1, q: b + 1 }
            }
            "T" if call.has_keywords() => {
                let v = call.numbers(&["n", "d", "i"])?;
                BroomGeneral {
                    n: v[0],
                    d: v[1],
                    i: v[2],
                }
            }
            "T" => {
                let v = call.numbers(&["n", "k", "i"])?;
                if v[1] != 3 {
                    return Err(Error::Parse("only `T(n,3,i)` has a closed form".to_string()));
                }
                T3i { n: v[0], i: v[2] }
            }
            "Broom" => {
                let (n, d) = two("n", "d")?;
                Broom { n, d }
            }
            "B" => {
                let (p, q) = two("p", "q")?;
                Bpq { p, q }
            }
            "G1" => {
                let (p, q) = two("p", "q")?;
                G1 { p, q }
            }
            "C4quad" => {
                let (n, i) = two("n", "i")?;
                C4Quad { n, i }
            }
            "U" => {
                let (rank, n) = two("rank", "n")?;
                UnicyclicLine { rank, n }
            }
            "Ghat" => {
                let (index, n) = two("i", "n")?;
                GHatLinear { index, n }
            }
            "lemma34" => {
                let v = call.numbers(&["n", "k", "j"])?;
                Lemma34 {
                    n: v[0],
                    k: v[1],
                    j: v[2],
                }
            }
            name => match Candidate::from_name(name) {
                Some(which) => {
                    let (p, q) = two("p", "q")?;
                    C4Candidate { which, p, q }
                }
                None => return Err(Error::Parse(format!("unknown formula `{name}`"))),
            },
        })
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use num_traits::Zero;

    fn v(id: FormulaId) -> i64 {
        i64::try_from(id.eval().unwrap()).unwrap()
    }

    #[test]
    fn sequences() {
        let q: Vec<i64> = (0..7).map(|n| v(FormulaId::QPermanent(n))).collect();
        assert_eq!(q, [1, 1, 3, 7, 17, 41, 99]);
        let p: Vec<i64> = (1..12).map(|n| v(FormulaId::PathPermanent(n))).collect();
        assert_eq!(p, [0, 2, 4, 10, 24, 58, 140, 338, 816, 1970, 4756]);
        assert_eq!(v(FormulaId::PellS(3)), 5);
        assert!(FormulaId::PathPermanent(0).eval().is_err());
    }

    #[test]
    fn displayed_values() {
        use FormulaId::*;
        assert_eq!(v(DStar { p: 2, q: 2 }), 10);
        assert_eq!(v(DStar { p: 3, q: 5 }), 46);
        assert_eq!(v(Broom { n: 5, d: 3 }), 16);
        assert_eq!(v(BroomGeneral { n: 5, d: 3, i: 2 }), 16);
        assert_eq!(v(Bpq { p: 2, q: 2 }), 36);
        assert_eq!(v(PathPermanent(5)), 24);
        assert_eq!(v(UnicyclicLine { rank: 1, n: 6 }), 84);
        assert_eq!(v(UnicyclicLine { rank: 2, n: 6 }), 100);
        assert_eq!(v(UnicyclicLine { rank: 3, n: 6 }), 104);
        assert_eq!(v(G1 { p: 3, q: 7 }), 140 * 10 - 640);
    }

    #[test]
    fn internal_consistency() {
        use FormulaId::*;
        for q in 1..40 {
            assert_eq!(v(DStar { p: 2, q }), v(T3i { n: q + 2, i: 0 }));
            assert_eq!(v(Bpq { p: 2, q }), v(C4Quad { n: q + 2, i: 0 }));
        }
        for n in 6..60 {
            assert_eq!(v(UnicyclicLine { rank: 3, n }), v(Bpq { p: 3, q: n - 3 }));
            assert_eq!(v(UnicyclicLine { rank: 2, n }), v(C4Quad { n, i: 1 }));
            assert_eq!(v(UnicyclicLine { rank: 1, n }), v(Bpq { p: 2, q: n - 2 }));
        }
        for d in 2..30 {
            for n in d + 1..d + 6 {
                assert_eq!(v(Broom { n, d }), v(BroomGeneral { n, d, i: 2 }));
            }
        }
    }

    #[test]
    fn second_minimizer_forms() {
        // 36(p-2)(q-1)+4p+8q-4 and 36(q-2)(p-1)+4q+8p-4
        for p in 4..20 {
            for q in p + 1..25 {
                let a = 36 * (p as i64 - 2) * (q as i64 - 1) + 4 * p as i64 + 8 * q as i64 - 4;
                let b = 36 * (q as i64 - 2) * (p as i64 - 1) + 4 * q as i64 + 8 * p as i64 - 4;
                let id = |which| FormulaId::C4Candidate { which, p, q };
                assert_eq!(v(id(Candidate::SecondA)), a);
                assert_eq!(v(id(Candidate::SecondB)), b);
            }
        }
    }

    #[test]
    fn lemma34() {
        assert_eq!(lemma34_gap(5, 1, 2).unwrap(), BigInt::from(10));
        assert!(lemma34_gap(7, 2, 3).unwrap() > BigInt::zero());
        assert!(lemma34_gap(7, 3, 3).is_err());
        assert!(lemma34_gap(5, 1, 4).is_err());
    }

    #[test]
    fn bounds() {
        let b = |n| {
            let (lo, hi) = theorem11_bounds(n).unwrap();
            (i64::try_from(lo).unwrap(), i64::try_from(hi).unwrap())
        };
        assert_eq!(b(2), (2, 2));
        assert_eq!(b(4), (6, 10));
        assert_eq!(b(5), (8, 24));
        assert!(theorem11_bounds(1).is_err());
    }

    #[test]
    fn pell_norm() {
        assert!((0..200).all(pell_norm_holds));
    }

    #[test]
    fn syntax_round_trips() {
        for text in [
            "S(5)",
            "P(7)",
            "Q(4)",
            "Pell(6)",
            "D(3,5)",
            "D'(2,4)",
            "D''(2,4)",
            "T(9,3,2)",
            "Broom(10,6)",
            "T(n=10,d=6,i=3)",
            "B(3,7)",
            "G1(3,5)",
            "C4quad(10,2)",
            "sec_a(4,6)",
            "third7(5,6)",
            "U(2,9)",
            "Ghat(3,n=11)",
            "lemma34(15,2,5)",
        ] {
            let id: FormulaId = text.parse().unwrap();
            assert_eq!(id.to_string(), text);
        }
        assert!("T(9,4,2)".parse::<FormulaId>().is_err());
        assert!("nope(1)".parse::<FormulaId>().is_err());
    }
}
