//! Laplacian characteristic polynomials, spanning-tree counts and the
//! coefficient-wise dominance order.

use alloc::vec;
use alloc::vec::Vec;
use core::cmp::Ordering;

use num_bigint::BigInt;
use num_integer::Integer;
use num_traits::{One, Signed, Zero};

use crate::error::{Error, Result};
use crate::graph::Graph;
use crate::matrix::laplacian;

pub const CHARPOLY_LIMIT: usize = 16;

/// Coefficients `c_0..c_n` of `det(λI − L) = Σ_k (−1)^k c_k λ^{n−k}`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct CharPoly {
    coeffs: Vec<BigInt>,
}

impl CharPoly {
    pub fn from_coefficients(coeffs: Vec<BigInt>) -> Self {
        CharPoly { coeffs }
    }

    /// Polynomial degree `n` (one less than the number of coefficients).
    pub fn order(&self) -> usize {
        self.coeffs.len().saturating_sub(1)
    }

    pub fn coefficients(&self) -> &[BigInt] {
        &self.coeffs
    }

    pub fn c(&self, k: usize) -> &BigInt {
        &self.coeffs[k]
    }
}

fn size_check(g: &Graph) -> Result<()> {
    if g.order() > CHARPOLY_LIMIT {
        return Err(Error::SizeBound {
            what: "graph order",
            size: g.order(),
            limit: CHARPOLY_LIMIT,
        });
    }
    Ok(())
}

/// Exact Laplacian characteristic polynomial.
///
/// `det(xI − L)` is evaluated at `x = 0..=n` with Bareiss elimination, the
/// values are converted to Newton forward differences, and the result is
/// expanded from the falling-factorial basis into monomials. Every division
/// on the way is exact.
pub fn char_poly(g: &Graph) -> Result<CharPoly> {
    size_check(g)?;
    let n = g.order();
    let l = laplacian(g);
    let mut diffs: Vec<BigInt> = (0..=n)
        .map(|x| l.shifted_negation(&BigInt::from(x)).determinant())
        .collect();
    // In place: diffs[k] becomes Δ^k f(0).
    for k in 1..=n {
        for i in (k..=n).rev() {
            diffs[i] = &diffs[i] - &diffs[i - 1];
        }
    }
    // f(x) = Σ_k (Δ^k f(0) / k!) · x(x−1)…(x−k+1)
    let mut mono = vec![BigInt::zero(); n + 1];
    let mut falling = vec![BigInt::one()]; // coefficients of x^(k falling), low degree first
    let mut factorial = BigInt::one();
    for (k, d) in diffs.iter().enumerate() {
        if k > 0 {
            factorial *= k;
            // multiply falling by (x − (k−1))
            let shift = BigInt::from(k - 1);
            let mut next = vec![BigInt::zero(); falling.len() + 1];
            for (i, c) in falling.iter().enumerate() {
                next[i + 1] += c;
                next[i] -= c * &shift;
            }
            falling = next;
        }
        let (b, r) = d.div_rem(&factorial);
        debug_assert!(r.is_zero(), "Newton coefficient must be integral");
        for (i, c) in falling.iter().enumerate() {
            mono[i] += &b * c;
        }
    }
    // mono[i] is the coefficient of λ^i; c_k = (−1)^k · [λ^{n−k}]
    let coeffs = (0..=n)
        .map(|k| {
            let c = mono[n - k].clone();
            if k % 2 == 1 {
                -c
            } else {
                c
            }
        })
        .collect();
    Ok(CharPoly { coeffs })
}

/// Number of spanning trees via the Matrix-Tree theorem.
pub fn spanning_tree_count(g: &Graph) -> Result<BigInt> {
    g.require_connected()?;
    size_check(g)?;
    if g.order() <= 1 {
        return Ok(BigInt::one());
    }
    Ok(laplacian(g).principal_minor(&[0]).determinant())
}

/// Outcome of comparing two coefficient vectors entry by entry.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash)]
pub enum Dominance {
    Equal,
    /// `a ≺ b`: every `c_k(a) ≤ c_k(b)`, at least one strictly.
    StrictlyADominated,
    /// `b ≺ a`.
    StrictlyBDominated,
    Incomparable,
}

impl Dominance {
    /// `a ⪯ b`.
    pub fn a_dominated(self) -> bool {
        matches!(self, Dominance::Equal | Dominance::StrictlyADominated)
    }

    /// `b ⪯ a`.
    pub fn b_dominated(self) -> bool {
        matches!(self, Dominance::Equal | Dominance::StrictlyBDominated)
    }

    pub fn as_str(self) -> &'static str {
        match self {
            Dominance::Equal => "equal",
            Dominance::StrictlyADominated => "first strictly dominated",
            Dominance::StrictlyBDominated => "second strictly dominated",
            Dominance::Incomparable => "incomparable",
        }
    }
}

pub fn dominance_compare(a: &CharPoly, b: &CharPoly) -> Result<Dominance> {
    if a.order() != b.order() {
        return Err(Error::OrderMismatch(a.order(), b.order()));
    }
    let (mut less, mut greater) = (false, false);
    for (x, y) in a.coeffs.iter().zip(&b.coeffs) {
        match x.cmp(y) {
            Ordering::Less => less = true,
            Ordering::Greater => greater = true,
            Ordering::Equal => {}
        }
    }
    Ok(match (less, greater) {
        (false, false) => Dominance::Equal,
        (true, false) => Dominance::StrictlyADominated,
        (false, true) => Dominance::StrictlyBDominated,
        (true, true) => Dominance::Incomparable,
    })
}

/// Sanity relations every connected graph satisfies:
/// `c_0 = 1`, `c_1 = 2|E|`, `c_n = 0`, `c_{n−1} = n·τ(G)` and `c_k ≥ 0`.
pub fn coefficient_identities_hold(g: &Graph, poly: &CharPoly) -> Result<bool> {
    let n = g.order();
    if n == 0 {
        return Ok(poly.coefficients() == [BigInt::one()]);
    }
    let tau = spanning_tree_count(g)?;
    Ok(poly.order() == n
        && poly.c(0).is_one()
        && *poly.c(1) == BigInt::from(2 * g.size())
        && poly.c(n).is_zero()
        && *poly.c(n - 1) == BigInt::from(n) * tau
        && poly.coefficients().iter().all(|c| !c.is_negative()))
}

#[cfg(test)]
mod tests {
    use super::*;

    fn ints(v: &[i64]) -> CharPoly {
        CharPoly::from_coefficients(v.iter().map(|&x| BigInt::from(x)).collect())
    }

    #[test]
    fn path_on_three() {
        // λ(λ−1)(λ−3) = λ³ − 4λ² + 3λ
        assert_eq!(char_poly(&Graph::path(3)).unwrap(), ints(&[1, 4, 3, 0]));
    }

    #[test]
    fn cycle_on_four() {
        // eigenvalues 0, 2, 2, 4: λ(λ−2)²(λ−4) = λ⁴ − 8λ³ + 20λ² − 16λ
        assert_eq!(char_poly(&Graph::cycle(4)).unwrap(), ints(&[1, 8, 20, 16, 0]));
    }

    #[test]
    fn spanning_trees() {
        assert_eq!(spanning_tree_count(&Graph::path(6)).unwrap(), BigInt::one());
        for n in 3..9 {
            assert_eq!(spanning_tree_count(&Graph::cycle(n)).unwrap(), BigInt::from(n));
        }
        let disconnected = Graph::from_edges(4, &[(0, 1), (2, 3)]).unwrap();
        assert_eq!(spanning_tree_count(&disconnected), Err(Error::DisconnectedInput));
    }

    #[test]
    fn identities_on_small_graphs() {
        for g in [Graph::path(5), Graph::cycle(6), Graph::star(7)] {
            let p = char_poly(&g).unwrap();
            assert!(coefficient_identities_hold(&g, &p).unwrap());
        }
    }

    #[test]
    fn dominance() {
        let a = ints(&[1, 4, 3, 0]);
        let b = ints(&[1, 4, 4, 0]);
        assert_eq!(dominance_compare(&a, &a).unwrap(), Dominance::Equal);
        assert_eq!(dominance_compare(&a, &b).unwrap(), Dominance::StrictlyADominated);
        assert_eq!(dominance_compare(&b, &a).unwrap(), Dominance::StrictlyBDominated);
        let c = ints(&[1, 5, 2, 0]);
        assert_eq!(dominance_compare(&a, &c).unwrap(), Dominance::Incomparable);
        assert_eq!(dominance_compare(&a, &ints(&[1, 2])), Err(Error::OrderMismatch(3, 1)));
    }

    #[test]
    fn size_bound() {
        assert!(matches!(char_poly(&Graph::path(17)), Err(Error::SizeBound { .. })));
    }
}
