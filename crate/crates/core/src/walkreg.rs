//! 1- and 2-walk-regularity.
//!
//! A graph is 1-walk-regular when every power `A^l` has constant diagonal and
//! is constant on the edges; 2-walk-regular when in addition each `A^l` is
//! constant on pairs at distance two. If `A` has `m` distinct eigenvalues its
//! minimal polynomial has degree `m`, so every power lies in the span of
//! `A^0 .. A^(m-1)` and checking those `m` powers decides all of them.

use num_bigint::BigInt;
use num_traits::{CheckedAdd, Zero};

use crate::exact::{charpoly, IntMatrix};
use crate::graph::{Edge, Graph};

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub struct WalkRegularity {
    pub one_walk: bool,
    pub two_walk: bool,
    pub distinct_eigenvalue_count: usize,
}

/// Number of distinct eigenvalues of the adjacency matrix, as the degree of
/// the squarefree part of the characteristic polynomial.
pub fn distinct_eigenvalue_count(g: &Graph) -> usize {
    let phi = charpoly(&IntMatrix::adjacency(g)).expect("adjacency matrices are square");
    phi.squarefree().degree().unwrap_or(0)
}

pub fn walk_regularity(g: &Graph) -> WalkRegularity {
    let m = distinct_eigenvalue_count(g);
    let (one_walk, two_walk) = walk_regularity_up_to(g, m);
    WalkRegularity {
        one_walk,
        two_walk,
        distinct_eigenvalue_count: m,
    }
}

pub fn is_one_walk_regular(g: &Graph) -> bool {
    walk_regularity(g).one_walk
}

pub fn is_two_walk_regular(g: &Graph) -> bool {
    walk_regularity(g).two_walk
}

/// Checks constancy for the powers `A^0 .. A^(powers-1)`; returns
/// `(one_walk, two_walk)`. Edgeless graphs are reported as neither.
pub fn walk_regularity_up_to(g: &Graph, powers: usize) -> (bool, bool) {
    if g.edge_count() == 0 {
        return (false, false);
    }
    let d2 = g.distance_two_graph().edges();
    if let Some(v) = check_powers::<u128>(g, &d2, powers) {
        return v;
    }
    check_powers::<BigInt>(g, &d2, powers).expect("big integers do not overflow")
}

fn all_equal<T: PartialEq>(mut it: impl Iterator<Item = T>) -> bool {
    match it.next() {
        None => true,
        Some(first) => it.all(|x| x == first),
    }
}

/// `None` if a walk count overflows `T`.
fn check_powers<T>(g: &Graph, d2: &[Edge], powers: usize) -> Option<(bool, bool)>
where
    T: Clone + Zero + PartialEq + CheckedAdd + From<u8>,
{
    let n = g.n();
    let nbrs = g.neighbor_lists();
    let edges = g.edges();
    let mut p: Vec<T> = (0..n * n)
        .map(|x| T::from((x / n == x % n) as u8))
        .collect();
    let mut two = true;
    for l in 0..powers {
        if !all_equal((0..n).map(|i| &p[i * n + i])) || !all_equal(edges.iter().map(|e| &p[e.i * n + e.j])) {
            return Some((false, false));
        }
        if two && !all_equal(d2.iter().map(|e| &p[e.i * n + e.j])) {
            two = false;
        }
        if l + 1 == powers {
            break;
        }
        let mut next = vec![T::zero(); n * n];
        for i in 0..n {
            let row = &p[i * n..(i + 1) * n];
            for j in 0..n {
                let mut acc = T::zero();
                for &l in &nbrs[j] {
                    acc = acc.checked_add(&row[l])?;
                }
                next[i * n + j] = acc;
            }
        }
        p = next;
    }
    Some((true, two))
}
