//! Dense square integer matrices and exact determinants.

use alloc::vec;
use alloc::vec::Vec;

use num_bigint::BigInt;
use num_traits::{One, Signed, Zero};

use crate::graph::Graph;

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct SquareMatrix {
    order: usize,
    entries: Vec<BigInt>,
}

impl SquareMatrix {
    pub fn zeros(order: usize) -> Self {
        SquareMatrix {
            order,
            entries: vec![BigInt::zero(); order * order],
        }
    }

    pub fn identity(order: usize) -> Self {
        let mut m = SquareMatrix::zeros(order);
        for i in 0..order {
            m.set(i, i, BigInt::one());
        }
        m
    }

    /// Builds a matrix from rows; `None` unless every row has `rows.len()` entries.
    pub fn from_rows<T: Into<BigInt> + Clone>(rows: &[Vec<T>]) -> Option<Self> {
        let order = rows.len();
        if rows.iter().any(|r| r.len() != order) {
            return None;
        }
        let entries = rows.iter().flat_map(|r| r.iter().cloned().map(Into::into)).collect();
        Some(SquareMatrix { order, entries })
    }

    pub fn order(&self) -> usize {
        self.order
    }

    pub fn get(&self, i: usize, j: usize) -> &BigInt {
        &self.entries[i * self.order + j]
    }

    pub fn set(&mut self, i: usize, j: usize, value: BigInt) {
        self.entries[i * self.order + j] = value;
    }

    pub fn rows(&self) -> impl Iterator<Item = &[BigInt]> {
        self.entries.chunks(self.order.max(1)).take(self.order)
    }

    pub fn is_symmetric(&self) -> bool {
        (0..self.order).all(|i| (0..i).all(|j| self.get(i, j) == self.get(j, i)))
    }

    /// Deletes the listed rows and the same-indexed columns.
    pub fn principal_minor(&self, drop: &[usize]) -> SquareMatrix {
        let keep: Vec<usize> = (0..self.order).filter(|i| !drop.contains(i)).collect();
        let mut m = SquareMatrix::zeros(keep.len());
        for (a, &i) in keep.iter().enumerate() {
            for (b, &j) in keep.iter().enumerate() {
                m.set(a, b, self.get(i, j).clone());
            }
        }
        m
    }

    /// `x·I − self`.
    pub fn shifted_negation(&self, x: &BigInt) -> SquareMatrix {
        let mut m = SquareMatrix::zeros(self.order);
        for i in 0..self.order {
            for j in 0..self.order {
                let e = -self.get(i, j);
                m.set(i, j, if i == j { e + x } else { e });
            }
        }
        m
    }

    /// Entries as `i64` when every entry fits.
    pub(crate) fn to_i64_rows(&self) -> Option<Vec<Vec<i64>>> {
        self.rows()
            .map(|r| r.iter().map(|e| i64::try_from(e).ok()).collect())
            .collect()
    }

    pub(crate) fn max_abs_entry(&self) -> BigInt {
        self.entries.iter().map(Signed::abs).max().unwrap_or_default()
    }

    /// Exact determinant by fraction-free (Bareiss) elimination.
    pub fn determinant(&self) -> BigInt {
        let n = self.order;
        if n == 0 {
            return BigInt::one();
        }
        let mut a: Vec<Vec<BigInt>> = self.rows().map(<[BigInt]>::to_vec).collect();
        let mut sign = false;
        let mut prev = BigInt::one();
        for k in 0..n - 1 {
            if a[k][k].is_zero() {
                let Some(r) = (k + 1..n).find(|&r| !a[r][k].is_zero()) else {
                    return BigInt::zero();
                };
                a.swap(k, r);
                sign = !sign;
            }
            for i in k + 1..n {
                for j in k + 1..n {
                    let t = &a[i][j] * &a[k][k] - &a[i][k] * &a[k][j];
                    a[i][j] = t / &prev;
                }
            }
            prev = a[k][k].clone();
        }
        let det = a[n - 1][n - 1].clone();
        if sign {
            -det
        } else {
            det
        }
    }
}

/// `L(G) = D(G) − A(G)` in label order.
pub fn laplacian(g: &Graph) -> SquareMatrix {
    let n = g.order();
    let mut m = SquareMatrix::zeros(n);
    for v in 0..n {
        m.set(v, v, BigInt::from(g.degree(v)));
        for &w in g.neighbors(v) {
            m.set(v, w, BigInt::from(-1));
        }
    }
    m
}

#[cfg(test)]
mod tests {
    use super::*;

    fn m(rows: &[&[i64]]) -> SquareMatrix {
        SquareMatrix::from_rows(&rows.iter().map(|r| r.to_vec()).collect::<Vec<_>>()).unwrap()
    }

    #[test]
    fn laplacian_shapes() {
        assert_eq!(laplacian(&Graph::path(2)), m(&[&[1, -1], &[-1, 1]]));
        assert_eq!(laplacian(&Graph::path(3)), m(&[&[1, -1, 0], &[-1, 2, -1], &[0, -1, 1]]));
        let c4 = laplacian(&Graph::cycle(4));
        assert!(c4.is_symmetric());
        assert!((0..4).all(|i| *c4.get(i, i) == BigInt::from(2)));
    }

    #[test]
    fn determinants() {
        assert_eq!(m(&[&[2, 1], &[1, 3]]).determinant(), BigInt::from(5));
        assert_eq!(m(&[&[0, 1], &[1, 0]]).determinant(), BigInt::from(-1));
        assert_eq!(m(&[&[0, 2, 1], &[3, 0, 4], &[1, 1, 0]]).determinant(), BigInt::from(11));
        assert_eq!(m(&[&[1, 2], &[2, 4]]).determinant(), BigInt::zero());
        assert_eq!(SquareMatrix::zeros(0).determinant(), BigInt::one());
    }

    #[test]
    fn ragged_rows_rejected() {
        assert!(SquareMatrix::from_rows(&[vec![1, 2], vec![3]]).is_none());
    }
}
