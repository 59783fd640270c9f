//! Deterministic generators for the graph families used throughout the crate.
//!
//! Vertex orders are part of each generator's contract:
//!
//! * [`kneser`]: `r`-subsets of `{1..n}` in colexicographic order, which is
//!   the increasing order of their characteristic bitmasks (bit `i` for
//!   element `i + 1`).
//! * [`q_kneser`]: `r`-dimensional subspaces of `F_q^n`, each written as its
//!   reduced row-echelon basis, ordered lexicographically by the row-major
//!   entry sequence of that basis.
//! * [`hamming_h`], [`hamming_h_prime`]: vertex `i < 2^(n-1)` is the word
//!   whose low `n - 1` bits are `i` and whose bit `n - 1` is the parity of `i`.
//! * [`cayley_z2`], [`q_cube`]: vertex `x` is the word with integer value `x`.
//!
//! With these conventions `q_cube(n - 1, k - 1)` and `hamming_h_prime(n, k)`
//! produce identical graphs.

use num_bigint::BigInt;
use num_traits::{One, Zero};

use crate::error::{Error, Result};
use crate::graph::Graph;

/// Hard limits on generated graph size.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub struct SizeBudget {
    pub max_vertices: usize,
    pub max_edges: usize,
}

impl Default for SizeBudget {
    fn default() -> Self {
        SizeBudget {
            max_vertices: 20_000,
            max_edges: 200_000,
        }
    }
}

impl SizeBudget {
    pub fn unlimited() -> Self {
        SizeBudget {
            max_vertices: usize::MAX,
            max_edges: usize::MAX,
        }
    }

    /// Checks an already built graph against the budget.
    pub fn check_graph(&self, g: &Graph) -> Result<()> {
        for (what, value, limit) in [
            ("vertices", g.n(), self.max_vertices),
            ("edges", g.edge_count(), self.max_edges),
        ] {
            if value > limit {
                return Err(Error::SizeBudgetExceeded {
                    what,
                    value: value as u128,
                    limit: limit as u128,
                });
            }
        }
        Ok(())
    }

    fn check(&self, vertices: u128, degree: u128) -> Result<()> {
        if vertices > self.max_vertices as u128 {
            return Err(Error::SizeBudgetExceeded {
                what: "vertices",
                value: vertices,
                limit: self.max_vertices as u128,
            });
        }
        let edges = vertices * degree / 2;
        if edges > self.max_edges as u128 {
            return Err(Error::SizeBudgetExceeded {
                what: "edges",
                value: edges,
                limit: self.max_edges as u128,
            });
        }
        Ok(())
    }
}

/// Exact binomial coefficient.
pub fn binomial(n: u64, k: u64) -> u128 {
    if k > n {
        return 0;
    }
    let k = k.min(n - k);
    let mut acc: u128 = 1;
    for i in 0..k {
        acc = acc * (n - i) as u128 / (i + 1) as u128;
    }
    acc
}

/// `[k]_q = 1 + q + ... + q^(k-1)`.
pub fn q_bracket(k: u32, q: u64) -> BigInt {
    let q = BigInt::from(q);
    let mut acc = BigInt::zero();
    let mut pw = BigInt::one();
    for _ in 0..k {
        acc += &pw;
        pw *= &q;
    }
    acc
}

/// Gaussian binomial coefficient: the number of `k`-dimensional subspaces
/// of `F_q^n` when `q` is a prime power.
pub fn gaussian_binomial(n: u32, k: u32, q: u64) -> BigInt {
    if k > n {
        return BigInt::zero();
    }
    let q = BigInt::from(q);
    let mut num = BigInt::one();
    let mut den = BigInt::one();
    for i in 0..k {
        num *= num_traits::pow(q.clone(), (n - i) as usize) - 1u32;
        den *= num_traits::pow(q.clone(), (i + 1) as usize) - 1u32;
    }
    num / den
}

fn to_u128(x: &BigInt) -> u128 {
    u128::try_from(x).unwrap_or(u128::MAX)
}

pub fn is_small_prime(q: u64) -> bool {
    q >= 2 && (2..).take_while(|d| d * d <= q).all(|d| q % d != 0)
}

/// Kneser graph `K_{n:r}` within the default [`SizeBudget`].
pub fn kneser(n: u32, r: u32) -> Result<Graph> {
    kneser_within(n, r, &SizeBudget::default())
}

/// The `r`-subsets of `{1..n}` as bitmasks in colex order.
pub fn kneser_vertices(n: u32, r: u32) -> Vec<u128> {
    let mut out = Vec::with_capacity(binomial(n as u64, r as u64) as usize);
    if r == 0 {
        out.push(0);
        return out;
    }
    let limit: u128 = if n == 128 { u128::MAX } else { (1u128 << n) - 1 };
    if r > n {
        return out;
    }
    let mut s: u128 = if r == 128 { u128::MAX } else { (1u128 << r) - 1 };
    loop {
        out.push(s);
        // Gosper's hack: next mask with the same popcount
        let c = s & s.wrapping_neg();
        let Some(rr) = s.checked_add(c) else { break };
        let next = (((rr ^ s) >> 2) / c) | rr;
        if next > limit || next == 0 {
            break;
        }
        s = next;
    }
    out
}

/// Colex rank of an `r`-subset of `{1..n}` given as its elements.
pub fn kneser_index(subset: &[u32]) -> usize {
    let mut sorted = subset.to_vec();
    sorted.sort_unstable();
    sorted
        .iter()
        .enumerate()
        .map(|(i, &s)| binomial(s as u64 - 1, i as u64 + 1) as usize)
        .sum()
}

pub fn kneser_within(n: u32, r: u32, budget: &SizeBudget) -> Result<Graph> {
    if r < 1 || n < r {
        return Err(Error::OutOfRange(format!(
            "kneser requires n >= r >= 1, got n = {n}, r = {r}"
        )));
    }
    if n > 128 {
        return Err(Error::OutOfRange(format!("kneser supports n <= 128, got {n}")));
    }
    let v = binomial(n as u64, r as u64);
    let deg = binomial((n - r) as u64, r as u64);
    budget.check(v, deg)?;
    let sets = kneser_vertices(n, r);
    Ok(Graph::from_fn(sets.len(), |i, j| sets[i] & sets[j] == 0))
}

/// A subspace in reduced row-echelon form: `r` rows of `n` entries in `0..q`.
pub type Rref = Vec<Vec<u32>>;

fn rank_mod(rows: &mut [Vec<u32>], q: u32) -> usize {
    let n = rows.first().map_or(0, Vec::len);
    let m = rows.len();
    let inv = |a: u32| -> u32 {
        // q is prime and small: Fermat
        let mut r = 1u64;
        let mut b = a as u64;
        let mut e = q - 2;
        while e > 0 {
            if e & 1 == 1 {
                r = r * b % q as u64;
            }
            b = b * b % q as u64;
            e >>= 1;
        }
        r as u32
    };
    let mut rank = 0;
    for c in 0..n {
        let Some(p) = (rank..m).find(|&i| rows[i][c] != 0) else {
            continue;
        };
        rows.swap(rank, p);
        let iv = inv(rows[rank][c]) as u64;
        for i in rank + 1..m {
            let f = rows[i][c] as u64 * iv % q as u64;
            if f == 0 {
                continue;
            }
            for j in c..n {
                let sub = f * rows[rank][j] as u64 % q as u64;
                rows[i][j] = ((rows[i][j] as u64 + q as u64 - sub) % q as u64) as u32;
            }
        }
        rank += 1;
    }
    rank
}

/// All `r`-dimensional subspaces of `F_q^n` in the generator's vertex order.
pub fn q_kneser_vertices(q: u32, n: u32, r: u32) -> Vec<Rref> {
    let (n, r) = (n as usize, r as usize);
    let mut out = Vec::new();
    for mask in kneser_vertices(n as u32, r as u32) {
        let pivots: Vec<usize> = (0..n).filter(|&c| mask >> c & 1 == 1).collect();
        let free: Vec<(usize, usize)> = (0..r)
            .flat_map(|i| {
                let pv = &pivots;
                (pv[i] + 1..n)
                    .filter(move |c| !pv.contains(c))
                    .map(move |c| (i, c))
            })
            .collect();
        let total = (q as u64).pow(free.len() as u32);
        for mut code in 0..total {
            let mut m = vec![vec![0u32; n]; r];
            for (i, &p) in pivots.iter().enumerate() {
                m[i][p] = 1;
            }
            for &(i, c) in &free {
                m[i][c] = (code % q as u64) as u32;
                code /= q as u64;
            }
            out.push(m);
        }
    }
    out.sort();
    out
}

/// q-Kneser graph `qK_{n:r}` within the default [`SizeBudget`].
pub fn q_kneser(q: u32, n: u32, r: u32) -> Result<Graph> {
    q_kneser_within(q, n, r, &SizeBudget::default())
}

pub fn q_kneser_within(q: u32, n: u32, r: u32, budget: &SizeBudget) -> Result<Graph> {
    if !is_small_prime(q as u64) {
        return Err(Error::InvalidParameter(format!(
            "q-Kneser graphs are generated for prime q only, got {q}"
        )));
    }
    if r < 1 || n < r {
        return Err(Error::OutOfRange(format!(
            "q-kneser requires n >= r >= 1, got n = {n}, r = {r}"
        )));
    }
    let v = gaussian_binomial(n, r, q as u64);
    let deg = if n >= 2 * r {
        num_traits::pow(BigInt::from(q), (r * r) as usize) * gaussian_binomial(n - r, r, q as u64)
    } else {
        BigInt::zero()
    };
    budget.check(to_u128(&v), to_u128(&deg))?;
    let subspaces = q_kneser_vertices(q, n, r);
    let two_r = 2 * r as usize;
    Ok(Graph::from_fn(subspaces.len(), |i, j| {
        let mut stacked: Vec<Vec<u32>> = subspaces[i].iter().chain(&subspaces[j]).cloned().collect();
        rank_mod(&mut stacked, q) == two_r
    }))
}

fn parity(x: u64) -> u64 {
    (x.count_ones() & 1) as u64
}

/// Word of `Z_2^n` for vertex `i` of [`hamming_h`].
pub fn hamming_h_word(n: u32, i: usize) -> u64 {
    let low = i as u64;
    low | (parity(low) << (n - 1))
}

fn check_hamming(n: u32, k: u32) -> Result<()> {
    if k % 2 == 1 {
        return Err(Error::BadParity(format!("k = {k} must be even")));
    }
    if k < 1 || k + 1 > n {
        return Err(Error::OutOfRange(format!(
            "requires 1 <= k <= n - 1, got n = {n}, k = {k}"
        )));
    }
    if n > 63 {
        return Err(Error::OutOfRange(format!("n = {n} exceeds 63")));
    }
    Ok(())
}

/// Even-weight words of length `n` with weight satisfying `keep`.
fn even_connection_set(n: u32, keep: impl Fn(u32) -> bool) -> Vec<u64> {
    (0..=n)
        .filter(|&w| w % 2 == 0 && w > 0 && keep(w))
        .flat_map(|w| kneser_vertices(n, w))
        .map(|m| m as u64)
        .collect()
}

fn hamming_component(n: u32, conn: &[u64], budget: &SizeBudget) -> Result<Graph> {
    let v = 1usize << (n - 1);
    budget.check(v as u128, conn.len() as u128)?;
    let mask = (1u64 << (n - 1)) - 1;
    let mut g = Graph::empty(v);
    for a in 0..v {
        let wa = hamming_h_word(n, a);
        for &c in conn {
            let b = ((wa ^ c) & mask) as usize;
            if a < b {
                g.set(a, b);
            }
        }
    }
    Ok(g)
}

/// `H_{n,k}`: the even-weight half of the distance-`k` graph of the `n`-cube.
pub fn hamming_h(n: u32, k: u32) -> Result<Graph> {
    hamming_h_within(n, k, &SizeBudget::default())
}

pub fn hamming_h_within(n: u32, k: u32, budget: &SizeBudget) -> Result<Graph> {
    check_hamming(n, k)?;
    hamming_component(n, &even_connection_set(n, |w| w == k), budget)
}

/// `H'_{n,k}`: same vertices as [`hamming_h`], edges at Hamming distance `>= k`.
pub fn hamming_h_prime(n: u32, k: u32) -> Result<Graph> {
    hamming_h_prime_within(n, k, &SizeBudget::default())
}

pub fn hamming_h_prime_within(n: u32, k: u32, budget: &SizeBudget) -> Result<Graph> {
    check_hamming(n, k)?;
    hamming_component(n, &even_connection_set(n, |w| w >= k), budget)
}

/// `Cay(Z_2^n, {x : wt(x) in weights})`.
pub fn cayley_z2(n: u32, weights: &[u32]) -> Result<Graph> {
    cayley_z2_within(n, weights, &SizeBudget::default())
}

pub fn cayley_z2_within(n: u32, weights: &[u32], budget: &SizeBudget) -> Result<Graph> {
    if n > 63 {
        return Err(Error::OutOfRange(format!("n = {n} exceeds 63")));
    }
    if let Some(w) = weights.iter().find(|&&w| w < 1 || w > n) {
        return Err(Error::OutOfRange(format!("weight {w} outside [1, {n}]")));
    }
    let mut ws: Vec<u32> = weights.to_vec();
    ws.sort_unstable();
    ws.dedup();
    let conn: Vec<u64> = ws
        .iter()
        .flat_map(|&w| kneser_vertices(n, w))
        .map(|m| m as u64)
        .collect();
    let v = 1usize << n;
    budget.check(v as u128, conn.len() as u128)?;
    let mut g = Graph::empty(v);
    for a in 0..v {
        for &c in &conn {
            let b = a ^ c as usize;
            if a < b {
                g.set(a, b);
            }
        }
    }
    Ok(g)
}

/// `Q_{m/j} = Cay(Z_2^m, {x : wt(x) >= j})`.
pub fn q_cube(m: u32, j: u32) -> Result<Graph> {
    q_cube_within(m, j, &SizeBudget::default())
}

pub fn q_cube_within(m: u32, j: u32, budget: &SizeBudget) -> Result<Graph> {
    if j < 1 || j > m {
        return Err(Error::OutOfRange(format!(
            "q_cube requires 1 <= j <= m, got m = {m}, j = {j}"
        )));
    }
    let weights: Vec<u32> = (j..=m).collect();
    cayley_z2_within(m, &weights, budget)
}
