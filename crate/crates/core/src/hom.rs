//! Homomorphisms between family members with equal vector chromatic number.
//!
//! Vertex orders follow [`crate::families`]: Kneser vertices are colex-ordered
//! subsets, and vertex `i` of `hamming_h(n, k)` is the even-weight word whose
//! low `n - 1` bits equal `i`.
//!
//! Kneser maps flatten `[m] × [n]` to `[mn]` by copy index,
//! `(a, b) ↦ (a - 1)n + b`.

use num_bigint::BigInt;
use num_rational::BigRational;
use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};
use crate::families::{binomial, kneser_index, q_bracket};
use crate::graph::Graph;

/// A map from the vertices of one graph to those of another.
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct VertexMap {
    source_n: usize,
    target_n: usize,
    image: Vec<usize>,
}

impl VertexMap {
    pub fn new(target_n: usize, image: Vec<usize>) -> Result<Self> {
        if let Some(&bad) = image.iter().find(|&&x| x >= target_n) {
            return Err(Error::OutOfRange(format!(
                "image vertex {bad} not below target size {target_n}"
            )));
        }
        Ok(VertexMap {
            source_n: image.len(),
            target_n,
            image,
        })
    }

    pub fn identity(n: usize) -> Self {
        VertexMap {
            source_n: n,
            target_n: n,
            image: (0..n).collect(),
        }
    }

    pub fn source_n(&self) -> usize {
        self.source_n
    }

    pub fn target_n(&self) -> usize {
        self.target_n
    }

    pub fn image(&self) -> &[usize] {
        &self.image
    }

    pub fn apply(&self, v: usize) -> usize {
        self.image[v]
    }

    /// `other ∘ self`: first `self`, then `other`.
    pub fn then(&self, other: &VertexMap) -> Result<VertexMap> {
        if self.target_n != other.source_n {
            return Err(Error::DimensionMismatch {
                expected: self.target_n,
                found: other.source_n,
            });
        }
        Ok(VertexMap {
            source_n: self.source_n,
            target_n: other.target_n,
            image: self.image.iter().map(|&x| other.image[x]).collect(),
        })
    }
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct HomVerdict {
    pub is_hom: bool,
    pub is_injective: bool,
    pub is_induced_embedding: bool,
}

pub fn verify_homomorphism(g: &Graph, h: &Graph, m: &VertexMap) -> Result<HomVerdict> {
    if m.source_n != g.n() {
        return Err(Error::DimensionMismatch {
            expected: g.n(),
            found: m.source_n,
        });
    }
    if m.target_n != h.n() {
        return Err(Error::DimensionMismatch {
            expected: h.n(),
            found: m.target_n,
        });
    }
    let f = &m.image;
    let is_hom = g.edges().iter().all(|e| h.has_edge(f[e.i], f[e.j]));
    let mut seen = vec![false; h.n()];
    let is_injective = f.iter().all(|&x| !std::mem::replace(&mut seen[x], true));
    let is_induced_embedding = is_hom
        && is_injective
        && (0..g.n()).all(|u| (u + 1..g.n()).all(|v| g.has_edge(u, v) || !h.has_edge(f[u], f[v])));
    Ok(HomVerdict {
        is_hom,
        is_injective,
        is_induced_embedding,
    })
}

fn ratio(a: BigInt, b: BigInt) -> BigRational {
    BigRational::new(a, b)
}

fn kneser_preconditions(n: u32, r: u32) -> Result<()> {
    if r == 0 || n <= 2 * r {
        return Err(Error::DegenerateRange(format!(
            "requires n > 2r with r >= 1, got n = {n}, r = {r}"
        )));
    }
    Ok(())
}

/// Whether `K_{n:r} → K_{n2:r2}` exists when both have ratio `n/r`.
pub fn kneser_hom_exists(n: u32, r: u32, n2: u32, r2: u32) -> Result<bool> {
    kneser_preconditions(n, r)?;
    kneser_preconditions(n2, r2)?;
    if n as u64 * r2 as u64 != n2 as u64 * r as u64 {
        return Err(Error::RatioMismatch(format!("{n}/{r} != {n2}/{r2}")));
    }
    Ok(n2 % n == 0)
}

/// `S ↦ [m] × S` from `kneser(n, r)` to `kneser(mn, mr)`.
pub fn kneser_hom_map(n: u32, r: u32, m: u32) -> Result<VertexMap> {
    kneser_preconditions(n, r)?;
    if m == 0 {
        return Err(Error::OutOfRange("m must be at least 1".into()));
    }
    let big_n = n as u64 * m as u64;
    if big_n > 128 {
        return Err(Error::OutOfRange(format!("mn = {big_n} exceeds 128")));
    }
    let target = usize::try_from(binomial(big_n, r as u64 * m as u64))
        .map_err(|_| Error::OutOfRange("target vertex count overflows".into()))?;
    let image = crate::families::kneser_vertices(n, r)
        .into_iter()
        .map(|mask| {
            let elems: Vec<u32> = (0..m)
                .flat_map(|a| (0..n).filter(move |b| mask >> b & 1 == 1).map(move |b| a * n + b + 1))
                .collect();
            kneser_index(&elems)
        })
        .collect();
    VertexMap::new(target, image)
}

fn q_ratio_set(q: u64, r: u32) -> Vec<BigRational> {
    let denom = q_bracket(r, q);
    (1..=r).map(|k| ratio(q_bracket(k, q), denom.clone())).collect()
}

/// Necessary condition for `qK_{n:r} → q2K_{n2:r2}` at equal ratio
/// `[n]_q/[r]_q`: every `[k]_q/[r]_q` must occur among `[k']_{q2}/[r2]_{q2}`.
/// `false` rules the homomorphism out; `true` decides nothing.
pub fn q_kneser_necessary(q: u64, n: u32, r: u32, q2: u64, n2: u32, r2: u32) -> Result<bool> {
    kneser_preconditions(n, r)?;
    kneser_preconditions(n2, r2)?;
    if q < 2 || q2 < 2 {
        return Err(Error::OutOfRange("q must be at least 2".into()));
    }
    let a = ratio(q_bracket(n, q), q_bracket(r, q));
    let b = ratio(q_bracket(n2, q2), q_bracket(r2, q2));
    if a != b {
        return Err(Error::RatioMismatch(format!("{a} != {b}")));
    }
    let target = q_ratio_set(q2, r2);
    Ok(q_ratio_set(q, r).iter().all(|x| target.contains(x)))
}

fn hamming_preconditions(n: u32, k: u32) -> Result<()> {
    if k % 2 == 1 {
        return Err(Error::BadParity(format!("k = {k} must be even")));
    }
    if !(k < n && n + 1 < 2 * k) {
        return Err(Error::DegenerateRange(format!(
            "requires k < n < 2k - 1, got n = {n}, k = {k}"
        )));
    }
    Ok(())
}

/// Whether `H_{n,k} → H_{n2,k2}` exists at equal ratio `n/k`.
pub fn hamming_hom_exists(n: u32, k: u32, n2: u32, k2: u32) -> Result<bool> {
    hamming_preconditions(n, k)?;
    hamming_preconditions(n2, k2)?;
    if n as u64 * k2 as u64 != n2 as u64 * k as u64 {
        return Err(Error::RatioMismatch(format!("{n}/{k} != {n2}/{k2}")));
    }
    Ok(n2 % n == 0)
}

/// `x ↦ x‖x‖…‖x` (`m` copies) from `hamming_h(n, k)` to `hamming_h(mn, mk)`.
pub fn hamming_hom_map(n: u32, k: u32, m: u32) -> Result<VertexMap> {
    hamming_preconditions(n, k)?;
    if m == 0 {
        return Err(Error::OutOfRange("m must be at least 1".into()));
    }
    let big_n = n as u64 * m as u64;
    if big_n > 63 {
        return Err(Error::OutOfRange(format!("mn = {big_n} exceeds 63")));
    }
    let source = 1usize << (n - 1);
    let target = 1usize << (big_n - 1);
    let low = (1u64 << (big_n - 1)) - 1;
    let image = (0..source)
        .map(|i| {
            let w = crate::families::hamming_h_word(n, i);
            let word = (0..m).fold(0u64, |acc, a| acc | w << (a * n));
            (word & low) as usize
        })
        .collect();
    VertexMap::new(target, image)
}

/// Core structure of `Q_{n/k}` for `k < n < 2k`.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub enum QCubeCase {
    /// `k` odd: `Q_{n/k}` is a core.
    Case1,
    /// `k` even and `n < 2k - 1`: the core is `Q_{(n-1)/(k-1)}`.
    Case2,
    /// `k` even and `n = 2k - 1`: homomorphically equivalent to `Q_{(n-1)/(k-1)}`.
    Case3,
}

pub fn q_cube_core_classification(n: u32, k: u32) -> Result<QCubeCase> {
    if !(k < n && n < 2 * k) {
        return Err(Error::OutOfRange(format!(
            "requires k < n < 2k, got n = {n}, k = {k}"
        )));
    }
    Ok(if k % 2 == 1 {
        QCubeCase::Case1
    } else if n + 1 < 2 * k {
        QCubeCase::Case2
    } else {
        QCubeCase::Case3
    })
}

struct Search<'a> {
    h: &'a Graph,
    order: Vec<usize>,
    nbrs: Vec<Vec<usize>>,
    image: Vec<Option<usize>>,
    nodes: u64,
    budget: u64,
}

impl Search<'_> {
    /// `domains[v]` is the candidate set for `v`, as a bitset over `V(h)`.
    fn extend(&mut self, depth: usize, domains: &[Vec<u64>]) -> Result<bool> {
        let Some(&u) = self.order.get(depth) else {
            return Ok(true);
        };
        let dom = &domains[u];
        let candidates: Vec<usize> = (0..self.h.n())
            .filter(|&x| dom[x / 64] >> (x % 64) & 1 == 1)
            .collect();
        for x in candidates {
            self.nodes += 1;
            if self.nodes > self.budget {
                return Err(Error::BudgetExceeded(self.budget));
            }
            let hx = self.h.row(x);
            let mut next = domains.to_vec();
            let mut dead = false;
            for &w in &self.nbrs[u] {
                if self.image[w].is_some() {
                    continue;
                }
                let mut any = 0u64;
                for (d, &r) in next[w].iter_mut().zip(hx) {
                    *d &= r;
                    any |= *d;
                }
                if any == 0 {
                    dead = true;
                    break;
                }
            }
            if dead {
                continue;
            }
            self.image[u] = Some(x);
            if self.extend(depth + 1, &next)? {
                return Ok(true);
            }
            self.image[u] = None;
        }
        Ok(false)
    }
}

/// Exhaustive homomorphism search.
///
/// Vertices of `g` are assigned in a fixed order: repeatedly the unassigned
/// vertex with the most assigned neighbours, ties broken by higher degree and
/// then lower index. Each assignment narrows the candidate sets of unassigned
/// neighbours to the neighbourhood of the chosen image, and a branch dies as
/// soon as some candidate set is empty. Every tried assignment counts as one
/// node; exceeding `budget` nodes is an error, distinct from `Ok(None)`.
pub fn brute_force_hom(g: &Graph, h: &Graph, budget: u64) -> Result<Option<VertexMap>> {
    let n = g.n();
    if n == 0 {
        return Ok(Some(VertexMap::new(h.n(), Vec::new())?));
    }
    if h.n() == 0 {
        return Ok(None);
    }
    let nbrs = g.neighbor_lists();
    let mut placed = vec![false; n];
    let mut links = vec![0usize; n];
    let mut order = Vec::with_capacity(n);
    for _ in 0..n {
        let u = (0..n)
            .filter(|&v| !placed[v])
            .max_by_key(|&v| (links[v], nbrs[v].len(), std::cmp::Reverse(v)))
            .expect("an unplaced vertex remains");
        placed[u] = true;
        order.push(u);
        for &w in &nbrs[u] {
            links[w] += 1;
        }
    }
    let words = h.n().div_ceil(64);
    let mut full = vec![u64::MAX; words];
    if h.n() % 64 != 0 {
        full[words - 1] = (1u64 << (h.n() % 64)) - 1;
    }
    // a vertex with a neighbour can only go to a non-isolated vertex
    let mut non_isolated = vec![0u64; words];
    for x in 0..h.n() {
        if h.degree(x) > 0 {
            non_isolated[x / 64] |= 1 << (x % 64);
        }
    }
    let domains: Vec<Vec<u64>> = (0..n)
        .map(|v| if nbrs[v].is_empty() { full.clone() } else { non_isolated.clone() })
        .collect();
    let mut search = Search {
        h,
        order,
        nbrs,
        image: vec![None; n],
        nodes: 0,
        budget,
    };
    if search.extend(0, &domains)? {
        let image = search.image.into_iter().map(|x| x.expect("all assigned")).collect();
        Ok(Some(VertexMap::new(h.n(), image)?))
    } else {
        Ok(None)
    }
}
