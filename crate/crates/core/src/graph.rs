//! Simple undirected graphs stored as packed adjacency bit rows.

use std::collections::VecDeque;
use std::fmt;

use crate::error::{Error, Result};

/// A simple undirected graph on vertices `0..n`.
///
/// Each vertex owns one row of `stride` 64-bit words; bit `j` of row `i` is set
/// iff `i ~ j`. Rows are kept symmetric and loop-free by every constructor.
#[derive(Clone, PartialEq, Eq, Hash)]
pub struct Graph {
    n: usize,
    stride: usize,
    bits: Vec<u64>,
}

/// An edge `{i, j}` with `i < j`.
#[derive(Clone, Copy, Debug, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub struct Edge {
    pub i: usize,
    pub j: usize,
}

impl Edge {
    pub fn new(a: usize, b: usize) -> Self {
        if a < b {
            Edge { i: a, j: b }
        } else {
            Edge { i: b, j: a }
        }
    }
}

impl Graph {
    /// The edgeless graph on `n` vertices.
    pub fn empty(n: usize) -> Self {
        let stride = n.div_ceil(64).max(1);
        Graph {
            n,
            stride,
            bits: vec![0; stride * n],
        }
    }

    pub fn complete(n: usize) -> Self {
        Self::from_fn(n, |_, _| true)
    }

    pub fn cycle(n: usize) -> Self {
        Self::from_fn(n, |i, j| (i + 1) % n == j || (j + 1) % n == i)
    }

    pub fn path(n: usize) -> Self {
        Self::from_fn(n, |i, j| i + 1 == j || j + 1 == i)
    }

    /// Builds a graph from a symmetric predicate evaluated on pairs `i < j`.
    pub fn from_fn(n: usize, mut adjacent: impl FnMut(usize, usize) -> bool) -> Self {
        let mut g = Self::empty(n);
        for j in 1..n {
            for i in 0..j {
                if adjacent(i, j) {
                    g.set(i, j);
                }
            }
        }
        g
    }

    pub fn from_edges(n: usize, edges: &[(usize, usize)]) -> Result<Self> {
        let mut g = Self::empty(n);
        for &(a, b) in edges {
            if a >= n || b >= n {
                return Err(Error::OutOfRange(format!(
                    "edge ({a}, {b}) in a graph on {n} vertices"
                )));
            }
            if a == b {
                return Err(Error::InvalidParameter(format!("loop at vertex {a}")));
            }
            g.set(a, b);
        }
        Ok(g)
    }

    pub(crate) fn set(&mut self, a: usize, b: usize) {
        debug_assert!(a != b);
        self.bits[a * self.stride + b / 64] |= 1 << (b % 64);
        self.bits[b * self.stride + a / 64] |= 1 << (a % 64);
    }

    pub(crate) fn clear(&mut self, a: usize, b: usize) {
        self.bits[a * self.stride + b / 64] &= !(1 << (b % 64));
        self.bits[b * self.stride + a / 64] &= !(1 << (a % 64));
    }

    /// Returns a copy with the edge `{a, b}` added.
    pub fn with_edge(&self, a: usize, b: usize) -> Result<Self> {
        if a >= self.n || b >= self.n || a == b {
            return Err(Error::OutOfRange(format!("edge ({a}, {b})")));
        }
        let mut g = self.clone();
        g.set(a, b);
        Ok(g)
    }

    /// Returns a copy with the edge `{a, b}` removed (no-op if absent).
    pub fn without_edge(&self, a: usize, b: usize) -> Result<Self> {
        if a >= self.n || b >= self.n {
            return Err(Error::OutOfRange(format!("edge ({a}, {b})")));
        }
        let mut g = self.clone();
        if a != b {
            g.clear(a, b);
        }
        Ok(g)
    }

    /// Induced subgraph on `keep`, relabelled `0..keep.len()` in the given order.
    pub fn induced_subgraph(&self, keep: &[usize]) -> Result<Self> {
        if let Some(&v) = keep.iter().find(|&&v| v >= self.n) {
            return Err(Error::OutOfRange(format!("vertex {v}")));
        }
        Ok(Self::from_fn(keep.len(), |a, b| self.has_edge(keep[a], keep[b])))
    }

    /// Deletes vertex `v`; remaining vertices keep their relative order.
    pub fn remove_vertex(&self, v: usize) -> Result<Self> {
        let keep: Vec<usize> = (0..self.n).filter(|&u| u != v).collect();
        if v >= self.n {
            return Err(Error::OutOfRange(format!("vertex {v}")));
        }
        self.induced_subgraph(&keep)
    }

    #[inline]
    pub fn n(&self) -> usize {
        self.n
    }

    #[inline]
    pub fn has_edge(&self, i: usize, j: usize) -> bool {
        self.bits[i * self.stride + j / 64] >> (j % 64) & 1 == 1
    }

    #[inline]
    pub(crate) fn row(&self, i: usize) -> &[u64] {
        &self.bits[i * self.stride..(i + 1) * self.stride]
    }

    pub fn degree(&self, i: usize) -> usize {
        self.row(i).iter().map(|w| w.count_ones() as usize).sum()
    }

    pub fn neighbors(&self, i: usize) -> impl Iterator<Item = usize> + '_ {
        self.row(i).iter().enumerate().flat_map(|(w, &word)| {
            let mut rest = word;
            std::iter::from_fn(move || {
                if rest == 0 {
                    None
                } else {
                    let b = rest.trailing_zeros() as usize;
                    rest &= rest - 1;
                    Some(w * 64 + b)
                }
            })
        })
    }

    pub fn neighbor_lists(&self) -> Vec<Vec<usize>> {
        (0..self.n).map(|i| self.neighbors(i).collect()).collect()
    }

    /// Number of common neighbours of `i` and `j`.
    pub fn common_neighbors(&self, i: usize, j: usize) -> usize {
        self.row(i)
            .iter()
            .zip(self.row(j))
            .map(|(a, b)| (a & b).count_ones() as usize)
            .sum()
    }

    pub fn edge_count(&self) -> usize {
        (0..self.n).map(|i| self.degree(i)).sum::<usize>() / 2
    }

    /// Edges in lexicographic order of `(i, j)`, `i < j`.
    pub fn edges(&self) -> Vec<Edge> {
        let mut out = Vec::with_capacity(self.edge_count());
        for i in 0..self.n {
            for j in self.neighbors(i) {
                if i < j {
                    out.push(Edge { i, j });
                }
            }
        }
        out
    }

    pub fn complement(&self) -> Graph {
        Graph::from_fn(self.n, |i, j| !self.has_edge(i, j))
    }

    /// Breadth-first distances from `src`; `None` marks unreachable vertices.
    pub fn bfs(&self, src: usize) -> Vec<Option<u32>> {
        let mut dist = vec![None; self.n];
        let mut queue = VecDeque::new();
        dist[src] = Some(0);
        queue.push_back(src);
        while let Some(u) = queue.pop_front() {
            let du = dist[u].unwrap_or(0);
            for w in self.neighbors(u) {
                if dist[w].is_none() {
                    dist[w] = Some(du + 1);
                    queue.push_back(w);
                }
            }
        }
        dist
    }

    pub fn distance_matrix(&self) -> DistanceMatrix {
        let mut d = Vec::with_capacity(self.n * self.n);
        for i in 0..self.n {
            d.extend(self.bfs(i));
        }
        DistanceMatrix { n: self.n, d }
    }

    /// Vertices at distance exactly two become adjacent; nothing else is.
    pub fn distance_two_graph(&self) -> Graph {
        let mut out = Graph::empty(self.n);
        let mut reach = vec![0u64; self.stride];
        for i in 0..self.n {
            reach.iter_mut().for_each(|w| *w = 0);
            for u in self.neighbors(i) {
                for (r, w) in reach.iter_mut().zip(self.row(u)) {
                    *r |= w;
                }
            }
            for (idx, r) in reach.iter().enumerate() {
                let mut word = r & !self.row(i)[idx];
                while word != 0 {
                    let j = idx * 64 + word.trailing_zeros() as usize;
                    word &= word - 1;
                    if j != i && j > i {
                        out.set(i, j);
                    }
                }
            }
        }
        out
    }

    /// Connected components, each sorted, listed by smallest member.
    pub fn components(&self) -> Vec<Vec<usize>> {
        let mut seen = vec![false; self.n];
        let mut out = Vec::new();
        for s in 0..self.n {
            if seen[s] {
                continue;
            }
            let mut comp = vec![s];
            seen[s] = true;
            let mut head = 0;
            while head < comp.len() {
                let u = comp[head];
                head += 1;
                for w in self.neighbors(u) {
                    if !seen[w] {
                        seen[w] = true;
                        comp.push(w);
                    }
                }
            }
            comp.sort_unstable();
            out.push(comp);
        }
        out
    }

    pub fn is_connected(&self) -> bool {
        self.n <= 1 || self.components().len() == 1
    }

    pub fn is_bipartite(&self) -> bool {
        let mut side: Vec<Option<bool>> = vec![None; self.n];
        for s in 0..self.n {
            if side[s].is_some() {
                continue;
            }
            side[s] = Some(false);
            let mut stack = vec![s];
            while let Some(u) = stack.pop() {
                let su = side[u] == Some(true);
                for w in self.neighbors(u) {
                    match side[w] {
                        None => {
                            side[w] = Some(!su);
                            stack.push(w);
                        }
                        Some(sw) if sw == su => return false,
                        Some(_) => {}
                    }
                }
            }
        }
        true
    }

    /// True iff non-adjacency (with the diagonal) is transitive, i.e. the
    /// graph is complete multipartite. Edgeless graphs count as 1-partite.
    pub fn is_complete_multipartite(&self) -> bool {
        let non = self.complement();
        for i in 0..self.n {
            for j in non.neighbors(i) {
                for k in non.neighbors(j) {
                    if k != i && !non.has_edge(i, k) {
                        return false;
                    }
                }
            }
        }
        true
    }

    /// The common degree if the graph is regular.
    pub fn regular_degree(&self) -> Option<usize> {
        let k = if self.n == 0 { 0 } else { self.degree(0) };
        (0..self.n).all(|i| self.degree(i) == k).then_some(k)
    }

    /// `(v, k, a, c)` if the graph is strongly regular.
    ///
    /// Complete and edgeless graphs are excluded: one of the two
    /// common-neighbour conditions is vacuous for them.
    pub fn srg_params(&self) -> Option<(usize, usize, usize, usize)> {
        let k = self.regular_degree()?;
        let mut on_edges = None;
        let mut off_edges = None;
        for i in 0..self.n {
            for j in i + 1..self.n {
                let slot = if self.has_edge(i, j) {
                    &mut on_edges
                } else {
                    &mut off_edges
                };
                let cn = self.common_neighbors(i, j);
                match *slot {
                    None => *slot = Some(cn),
                    Some(v) if v != cn => return None,
                    Some(_) => {}
                }
            }
        }
        Some((self.n, k, on_edges?, off_edges?))
    }

    /// True iff every edge of `self` is an edge of `other` (same labelling).
    pub fn is_spanning_subgraph_of(&self, other: &Graph) -> Result<bool> {
        if self.n != other.n {
            return Err(Error::DimensionMismatch {
                expected: self.n,
                found: other.n,
            });
        }
        Ok(self
            .bits
            .iter()
            .zip(&other.bits)
            .all(|(a, b)| a & !b == 0))
    }
}

/// `h ⊆ g` on a shared vertex set.
pub fn is_spanning_subgraph(h: &Graph, g: &Graph) -> Result<bool> {
    h.is_spanning_subgraph_of(g)
}

impl fmt::Debug for Graph {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let edges: Vec<(usize, usize)> = self.edges().iter().map(|e| (e.i, e.j)).collect();
        f.debug_struct("Graph")
            .field("n", &self.n)
            .field("edges", &edges)
            .finish()
    }
}

/// All-pairs shortest path lengths.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct DistanceMatrix {
    n: usize,
    d: Vec<Option<u32>>,
}

impl DistanceMatrix {
    pub fn n(&self) -> usize {
        self.n
    }

    /// `None` when `i` and `j` lie in different components.
    pub fn get(&self, i: usize, j: usize) -> Option<u32> {
        self.d[i * self.n + j]
    }

    pub fn to_rows(&self) -> Vec<Vec<Option<u32>>> {
        self.d.chunks(self.n.max(1)).map(|r| r.to_vec()).collect()
    }
}
