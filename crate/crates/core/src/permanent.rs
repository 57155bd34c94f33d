//! Exact matrix permanents.
//!
//! Four evaluators live here:
//! - [`permanent_naive`]: the defining sum over all permutations, kept as an
//!   oracle for small orders;
//! - [`permanent_ryser`]: Ryser's inclusion-exclusion formula walked in Gray
//!   code order, one column-sum update per subset;
//! - [`permanent_sparse`]: row-by-row dynamic programming over the set of
//!   still-open columns, fast on tree-like sparsity patterns;
//! - [`tree_permanent`]: a linear-time recurrence for Laplacians of trees.
//!
//! All results are exact. Machine integers are used only when an a-priori
//! bound proves they cannot overflow; otherwise the work is done in `BigInt`.

use alloc::collections::BTreeMap;
use alloc::vec;
use alloc::vec::Vec;

use num_bigint::BigInt;
use num_traits::{One, ToPrimitive, Zero};

use crate::error::{Error, Result};
use crate::graph::{Graph, GraphKind};
use crate::matrix::{laplacian, SquareMatrix};

pub const NAIVE_LIMIT: usize = 9;
pub const RYSER_LIMIT: usize = 28;
/// Above this order [`laplacian_permanent`] switches from Ryser to the
/// sparse evaluator for non-tree graphs.
pub const DENSE_CUTOFF: usize = 16;
const SPARSE_LIMIT: usize = 64;

fn check_order(m: &SquareMatrix, limit: usize) -> Result<()> {
    if m.order() > limit {
        return Err(Error::SizeBound {
            what: "matrix order",
            size: m.order(),
            limit,
        });
    }
    Ok(())
}

/// Sum over all permutations of the entry products.
pub fn permanent_naive(m: &SquareMatrix) -> Result<BigInt> {
    check_order(m, NAIVE_LIMIT)?;
    let n = m.order();
    // |sum| <= n! * max|entry|^n; stay in i128 when that is far below 2^127.
    let mut bound = m.max_abs_entry().pow(n as u32);
    for k in 2..=n {
        bound *= k;
    }
    if let (true, Some(rows)) = (bound.bits() < 120, m.to_i64_rows()) {
        fn go(rows: &[Vec<i64>], row: usize, used: u32, acc: i128) -> i128 {
            if row == rows.len() {
                return acc;
            }
            let mut s = 0;
            for (j, &e) in rows[row].iter().enumerate() {
                if used & (1 << j) == 0 && e != 0 {
                    s += go(rows, row + 1, used | (1 << j), acc * e as i128);
                }
            }
            s
        }
        return Ok(BigInt::from(go(&rows, 0, 0, 1)));
    }
    fn go(m: &SquareMatrix, row: usize, used: u32, acc: &BigInt) -> BigInt {
        if row == m.order() {
            return acc.clone();
        }
        let mut s = BigInt::zero();
        for j in 0..m.order() {
            let e = m.get(row, j);
            if used & (1 << j) == 0 && !e.is_zero() {
                s += go(m, row + 1, used | (1 << j), &(acc * e));
            }
        }
        s
    }
    Ok(go(m, 0, 0, &BigInt::one()))
}

pub fn permanent_ryser(m: &SquareMatrix) -> Result<BigInt> {
    permanent_ryser_bounded(m, RYSER_LIMIT)
}

/// Ryser's formula `per A = (−1)^n Σ_S (−1)^{|S|} Π_i Σ_{j∈S} a_ij`, visiting
/// column subsets in Gray-code order.
pub fn permanent_ryser_bounded(m: &SquareMatrix, limit: usize) -> Result<BigInt> {
    check_order(m, limit.min(63))?;
    let n = m.order();
    if n == 0 {
        return Ok(BigInt::one());
    }
    let Some(rows) = m.to_i64_rows() else {
        return Ok(ryser_big(m));
    };
    // Every row-sum product is bounded by the product of absolute row sums;
    // 2^n of them are accumulated.
    let mut bound = BigInt::one();
    for r in &rows {
        bound *= r.iter().map(|e| e.unsigned_abs() as u128).sum::<u128>().max(1);
    }
    let row_sums_fit = rows
        .iter()
        .all(|r| r.iter().map(|e| e.unsigned_abs() as u128).sum::<u128>() < (1 << 62));
    if bound.bits() + n as u64 >= 126 || !row_sums_fit {
        return Ok(ryser_big(m));
    }
    let mut sums = vec![0i64; n];
    let mut total: i128 = 0;
    let mut gray: u64 = 0;
    for k in 1u64..(1u64 << n) {
        let j = k.trailing_zeros() as usize;
        gray ^= 1 << j;
        if gray & (1 << j) != 0 {
            for (s, r) in sums.iter_mut().zip(&rows) {
                *s += r[j];
            }
        } else {
            for (s, r) in sums.iter_mut().zip(&rows) {
                *s -= r[j];
            }
        }
        let mut prod: i128 = 1;
        for &s in &sums {
            prod *= s as i128;
            if prod == 0 {
                break;
            }
        }
        if gray.count_ones() % 2 == 1 {
            total -= prod;
        } else {
            total += prod;
        }
    }
    if n % 2 == 1 {
        total = -total;
    }
    Ok(BigInt::from(total))
}

fn ryser_big(m: &SquareMatrix) -> BigInt {
    let n = m.order();
    let mut sums = vec![BigInt::zero(); n];
    let mut total = BigInt::zero();
    let mut gray: u64 = 0;
    for k in 1u64..(1u64 << n) {
        let j = k.trailing_zeros() as usize;
        gray ^= 1 << j;
        let adding = gray & (1 << j) != 0;
        for (i, s) in sums.iter_mut().enumerate() {
            if adding {
                *s += m.get(i, j);
            } else {
                *s -= m.get(i, j);
            }
        }
        let mut prod = BigInt::one();
        for s in &sums {
            if s.is_zero() {
                prod = BigInt::zero();
                break;
            }
            prod *= s;
        }
        if gray.count_ones() % 2 == 1 {
            total -= prod;
        } else {
            total += prod;
        }
    }
    if n % 2 == 1 {
        -total
    } else {
        total
    }
}

/// Permanent by dynamic programming over rows in `row_order`.
///
/// The state after each row is the set of columns already used that some
/// later row could still reach; a column whose last possible row has been
/// processed must be used by then. Cost depends on how many such partial
/// assignments survive, which is small for trees and graphs close to them.
pub fn permanent_sparse_ordered(m: &SquareMatrix, row_order: &[usize]) -> Result<BigInt> {
    check_order(m, SPARSE_LIMIT)?;
    let n = m.order();
    if row_order.len() != n {
        return Err(Error::InvalidParameters("row order must list every row once".into()));
    }
    let nonzeros: Vec<Vec<(usize, &BigInt)>> = row_order
        .iter()
        .map(|&i| (0..n).map(|j| (j, m.get(i, j))).filter(|(_, e)| !e.is_zero()).collect())
        .collect();
    let mut last_row = vec![None; n];
    for (step, row) in nonzeros.iter().enumerate() {
        for &(j, _) in row {
            last_row[j] = Some(step);
        }
    }
    if last_row.iter().any(Option::is_none) {
        return Ok(BigInt::zero());
    }
    let mut closing: Vec<u64> = vec![0; n];
    for (j, step) in last_row.iter().enumerate() {
        closing[step.unwrap()] |= 1 << j;
    }
    let mut states: BTreeMap<u64, BigInt> = BTreeMap::new();
    states.insert(0, BigInt::one());
    for (step, row) in nonzeros.iter().enumerate() {
        let mut next: BTreeMap<u64, BigInt> = BTreeMap::new();
        for (used, weight) in &states {
            for &(j, e) in row {
                if used & (1 << j) != 0 {
                    continue;
                }
                let mask = used | (1 << j);
                if mask & closing[step] != closing[step] {
                    continue;
                }
                let entry = next.entry(mask & !closing[step]).or_default();
                *entry += weight * e;
            }
        }
        next.retain(|_, w| !w.is_zero());
        states = next;
        if states.is_empty() {
            return Ok(BigInt::zero());
        }
    }
    Ok(states.remove(&0).unwrap_or_default())
}

/// [`permanent_sparse_ordered`] with a breadth-first row order started at a
/// row with the most nonzeros.
pub fn permanent_sparse(m: &SquareMatrix) -> Result<BigInt> {
    check_order(m, SPARSE_LIMIT)?;
    let n = m.order();
    let support: Vec<Vec<usize>> = (0..n)
        .map(|i| {
            (0..n)
                .filter(|&j| j != i && (!m.get(i, j).is_zero() || !m.get(j, i).is_zero()))
                .collect()
        })
        .collect();
    let mut order = Vec::with_capacity(n);
    let mut seen = vec![false; n];
    while order.len() < n {
        let start = (0..n)
            .filter(|&i| !seen[i])
            .max_by_key(|&i| (support[i].len(), core::cmp::Reverse(i)))
            .unwrap();
        seen[start] = true;
        let mut head = order.len();
        order.push(start);
        while head < order.len() {
            let v = order[head];
            head += 1;
            for &w in &support[v] {
                if !seen[w] {
                    seen[w] = true;
                    order.push(w);
                }
            }
        }
    }
    permanent_sparse_ordered(m, &order)
}

/// `per L(T)` for a tree by the bottom-up two-value recurrence.
///
/// For each vertex `v` with children `c_1..c_k` (degrees taken in the whole
/// tree) let `b_v = Π a_{c_i}` and
/// `a_v = d_v·b_v + Σ_i b_{c_i} Π_{j≠i} a_{c_j}`; a leaf has `a = d_v`,
/// `b = 1`. The permanent is `a_root`.
pub fn tree_permanent(g: &Graph, root: usize) -> Result<BigInt> {
    if g.classify()? != GraphKind::Tree {
        return Err(Error::NotATree);
    }
    let n = g.order();
    if root >= n {
        return Err(Error::InvalidParameters("root is not a vertex".into()));
    }
    // Iterative DFS order; parents precede children.
    let mut parent = vec![usize::MAX; n];
    let mut order = Vec::with_capacity(n);
    let mut stack = vec![root];
    parent[root] = root;
    while let Some(v) = stack.pop() {
        order.push(v);
        for &w in g.neighbors(v) {
            if parent[w] == usize::MAX {
                parent[w] = v;
                stack.push(w);
            }
        }
    }
    let mut a = vec![BigInt::zero(); n];
    let mut b = vec![BigInt::one(); n];
    for &v in order.iter().rev() {
        let children: Vec<usize> = g.neighbors(v).iter().copied().filter(|&w| parent[w] == v).collect();
        let k = children.len();
        // prefix/suffix products of the children's a-values
        let mut prefix = vec![BigInt::one(); k + 1];
        for (i, &c) in children.iter().enumerate() {
            prefix[i + 1] = &prefix[i] * &a[c];
        }
        let mut suffix = BigInt::one();
        let mut cross = BigInt::zero();
        for (i, &c) in children.iter().enumerate().rev() {
            cross += &b[c] * &prefix[i] * &suffix;
            suffix *= &a[c];
        }
        let bv = prefix[k].clone();
        a[v] = BigInt::from(g.degree(v)) * &bv + cross;
        b[v] = bv;
    }
    Ok(a[root].clone())
}

/// `Q_n`: the Laplacian of the path `P_{n+1}` with its first row and column
/// removed.
pub fn q_matrix(n: usize) -> SquareMatrix {
    laplacian(&Graph::path(n + 1)).principal_minor(&[0])
}

/// `per Q_n` via `q_n = 2q_{n−1} + q_{n−2}`, `q_0 = q_1 = 1`.
pub fn q_permanent(n: usize) -> BigInt {
    let (mut prev, mut cur) = (BigInt::one(), BigInt::one());
    for _ in 1..n {
        let next = &cur * 2u32 + &prev;
        prev = core::mem::replace(&mut cur, next);
    }
    cur
}

/// `per L(G)`: the tree recurrence for trees, Ryser up to
/// [`DENSE_CUTOFF`] vertices, the sparse evaluator beyond.
pub fn laplacian_permanent(g: &Graph) -> Result<BigInt> {
    if g.is_tree() {
        return tree_permanent(g, 0);
    }
    let l = laplacian(g);
    if g.order() <= DENSE_CUTOFF {
        permanent_ryser(&l)
    } else {
        permanent_sparse(&l)
    }
}

/// Convenience for tests and reports: a permanent that fits in `i64`.
pub fn to_i64(x: &BigInt) -> Option<i64> {
    x.to_i64()
}
