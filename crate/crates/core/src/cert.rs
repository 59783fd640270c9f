//! Canonical vector colorings, the unique-vector-colorability rank test and
//! core certificates.
//!
//! For a connected regular graph with integral least eigenvalue `τ` of
//! multiplicity `d`, the canonical vector coloring has Gram matrix
//! `(n/d)·E_τ`, where `E_τ` projects onto the `τ`-eigenspace. Every nonzero
//! integer multiple of `E_τ` is computed exactly from the characteristic
//! polynomial; the vectors themselves (which carry square roots) are never
//! formed.
//!
//! The graph is uniquely vector colorable iff the matrices
//! `p_e = p_i p_j^T + p_j p_i^T` over the edges span all symmetric `d × d`
//! matrices. Their Gram matrix has entries
//! `M_ef = 2(B_jl B_ki + B_jk B_li)` for `e = {i,j}`, `f = {k,l}`, and its rank
//! is compared against `d(d+1)/2`.

use std::time::Instant;

use num_bigint::BigInt;
use num_integer::Integer;
use num_traits::{One, Signed, ToPrimitive, Zero};
use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};
use crate::exact::modular::{primes_below_2_62, ModP};
use crate::exact::{
    bareiss_rank, charpoly, independent_rows_mod_p, rank_exact, sturm_root_count, IntMatrix, IntPoly, Rat,
};
use crate::graph::Graph;
use crate::walkreg::{walk_regularity, WalkRegularity};

/// Spectral facts about a connected regular graph with integral least
/// eigenvalue.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct SpectralData {
    /// `det(xI - A)`.
    pub phi: IntPoly,
    /// Squarefree part of `phi`: the minimal polynomial of `A`.
    pub min_poly: IntPoly,
    /// Least eigenvalue.
    pub tau: BigInt,
    /// Multiplicity of `tau`.
    pub d: usize,
    /// `phi / (x - tau)^d`.
    pub phi_tau: IntPoly,
    /// `phi_tau(tau)`, the product of `tau - λ` over the other eigenvalues.
    pub c: BigInt,
    pub degree: usize,
}

impl SpectralData {
    pub fn distinct_eigenvalue_count(&self) -> usize {
        self.min_poly.degree().unwrap_or(0)
    }

    pub fn tau_i64(&self) -> i64 {
        self.tau.to_i64().expect("least eigenvalue is bounded by the degree")
    }
}

pub fn spectral_data(g: &Graph) -> Result<SpectralData> {
    if g.edge_count() == 0 {
        return Err(Error::Edgeless);
    }
    let degree = g.regular_degree().ok_or(Error::NotRegular)?;
    if !g.is_connected() {
        return Err(Error::NotConnected);
    }
    let phi = charpoly(&IntMatrix::adjacency(g))?;
    let min_poly = phi.squarefree();
    // all eigenvalues lie in [-degree, degree]
    let low = -BigInt::from(degree);
    let tau = min_poly
        .integer_roots()
        .into_iter()
        .map(|(r, _)| r)
        .find(|r| *r >= low)
        .ok_or(Error::NonIntegerLeastEigenvalue)?;
    let (_, rest) = min_poly.strip_root(&tau);
    if rest.degree().unwrap_or(0) > 0 {
        let below = sturm_root_count(
            &rest,
            &Rat::from_integer(low - 1u32),
            &Rat::from_integer(tau.clone()),
        )?;
        if below > 0 {
            return Err(Error::NonIntegerLeastEigenvalue);
        }
    }
    let (d, phi_tau) = phi.strip_root(&tau);
    let c = phi_tau.eval(&tau);
    Ok(SpectralData {
        phi,
        min_poly,
        tau,
        d,
        phi_tau,
        c,
        degree,
    })
}

/// The canonical vector coloring, held as an integer multiple `B` of the
/// least-eigenspace projection.
///
/// `B` is the primitive integer matrix proportional to `phi_tau(A)` with
/// positive diagonal, so `B = c·E_τ` with `c > 0` and
/// `phi_tau(A) = phi_tau_factor · B`. The Gram matrix of the coloring is
/// `(n / (d·c))·B`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct CanonicalGram {
    pub b: IntMatrix,
    pub c: BigInt,
    pub phi_tau_factor: BigInt,
    pub n: usize,
    pub d: usize,
    pub tau: BigInt,
    pub degree: usize,
}

impl CanonicalGram {
    /// `<p_i, p_j>` as an exact rational.
    pub fn gram_entry(&self, i: usize, j: usize) -> Rat {
        Rat::new(
            self.b.get(i, j) * BigInt::from(self.n),
            &self.c * BigInt::from(self.d),
        )
    }

    /// The inner product shared by all edges: `τ / k`.
    pub fn edge_inner_product(&self) -> Rat {
        Rat::new(self.tau.clone(), BigInt::from(self.degree))
    }

    /// `phi_tau(A)` itself.
    pub fn phi_tau_matrix(&self) -> IntMatrix {
        self.b.scale(&self.phi_tau_factor)
    }

    /// `u ~ v` in `G'(p)`: `<p_u, p_v> <= τ/k`, compared as
    /// `n·B_uv·k <= τ·d·c` (both denominators are positive).
    fn meets_edge_threshold(&self, u: usize, v: usize) -> bool {
        let lhs = self.b.get(u, v) * BigInt::from(self.n * self.degree);
        let rhs = &self.tau * BigInt::from(self.d) * &self.c;
        lhs <= rhs
    }
}

/// `p(A)` for a 0/1 adjacency, using neighbour sums for each Horner step.
fn eval_at_adjacency(p: &IntPoly, g: &Graph) -> IntMatrix {
    let n = g.n();
    let nbrs = g.neighbor_lists();
    let mut acc = IntMatrix::zeros(n, n);
    for (step, c) in p.coeffs().iter().rev().enumerate() {
        if step > 0 {
            let mut next = IntMatrix::zeros(n, n);
            for i in 0..n {
                let row = acc.row(i);
                for (j, nb) in nbrs.iter().enumerate() {
                    let mut s = BigInt::zero();
                    for &l in nb {
                        s += &row[l];
                    }
                    *next.get_mut(i, j) = s;
                }
            }
            acc = next;
        }
        acc.add_scalar_diagonal(c);
    }
    acc
}

pub fn canonical_gram(g: &Graph) -> Result<CanonicalGram> {
    let sd = spectral_data(g)?;
    if !walk_regularity(g).one_walk {
        return Err(Error::NotOneWalkRegular);
    }
    Ok(canonical_gram_from(g, &sd))
}

/// Builds the canonical Gram matrix from already computed spectral data.
/// Does not re-check 1-walk-regularity.
pub fn canonical_gram_from(g: &Graph, sd: &SpectralData) -> CanonicalGram {
    // A is diagonalizable, so with psi = min_poly / (x - tau):
    // psi(A) = psi(tau)·E_tau and phi_tau(A) = (phi_tau/psi)(tau)·psi(A).
    let (_, psi) = sd.min_poly.strip_root(&sd.tau);
    let psi_a = eval_at_adjacency(&psi, g);
    let mut content = psi_a.content();
    if psi_a.get(0, 0).is_negative() {
        content = -content;
    }
    let b = psi_a.div_exact(&content);
    let chi = sd
        .phi_tau
        .div_exact(&psi)
        .expect("the minimal-polynomial cofactor divides phi_tau");
    let phi_tau_factor = chi.eval(&sd.tau) * &content;
    let (c, rem) = b.trace().div_rem(&BigInt::from(sd.d));
    debug_assert!(rem.is_zero());
    CanonicalGram {
        b,
        c,
        phi_tau_factor,
        n: g.n(),
        d: sd.d,
        tau: sd.tau.clone(),
        degree: sd.degree,
    }
}

/// `χ_v = 1 - k/τ` for a 1-walk-regular graph.
pub fn vector_chromatic(g: &Graph) -> Result<Rat> {
    let sd = spectral_data(g)?;
    if !walk_regularity(g).one_walk {
        return Err(Error::NotOneWalkRegular);
    }
    Ok(Rat::one() - Rat::new(BigInt::from(sd.degree), sd.tau))
}

/// Gram matrix of the `p_e`, edges in lexicographic order.
pub fn edge_gram_matrix(cg: &CanonicalGram, g: &Graph) -> IntMatrix {
    let edges = g.edges();
    let b = &cg.b;
    let m = edges.len();
    let mut out = IntMatrix::zeros(m, m);
    for (x, e) in edges.iter().enumerate() {
        for (y, f) in edges.iter().enumerate().skip(x) {
            let (i, j, k, l) = (e.i, e.j, f.i, f.j);
            let v = (b.get(j, l) * b.get(k, i) + b.get(j, k) * b.get(l, i)) * 2u32;
            *out.get_mut(y, x) = v.clone();
            *out.get_mut(x, y) = v;
        }
    }
    out
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize, Deserialize)]
#[serde(rename_all = "lowercase")]
pub enum Verdict {
    Tight,
    Loose,
}

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub struct UvcOutcome {
    pub rank: usize,
    pub target: usize,
    pub edges: usize,
    pub verdict: Verdict,
}

/// Integer coordinates for the canonical coloring: `z_i = B[S, i]` for a set
/// `S` of `d` linearly independent rows of `B`.
///
/// Since `B` has rank `d`, `B = B[:, S] B[S, S]^{-1} B[S, :]`, so the `z_i` are
/// the `p_i` up to one invertible linear map. The same map acts by congruence
/// on the `p_e`, which leaves the dimension of their span unchanged.
pub fn tau_coordinates(cg: &CanonicalGram) -> IntMatrix {
    let rows = independent_row_basis(&cg.b, cg.d);
    IntMatrix::from_fn(cg.d, cg.n, |a, i| cg.b.get(rows[a], i).clone())
}

fn independent_row_basis(b: &IntMatrix, d: usize) -> Vec<usize> {
    for p in primes_below_2_62(4) {
        let rows = independent_rows_mod_p(b, ModP::new(p));
        if rows.len() == d {
            return rows;
        }
    }
    // every prime tried divides some minor; fall back to exact growth
    let mut rows: Vec<usize> = Vec::with_capacity(d);
    for i in 0..b.rows() {
        rows.push(i);
        let sub = IntMatrix::from_fn(rows.len(), b.cols(), |a, j| b.get(rows[a], j).clone());
        if bareiss_rank(&sub) < rows.len() {
            rows.pop();
        } else if rows.len() == d {
            break;
        }
    }
    rows
}

/// One row per edge `{i, j}`: the upper triangle of `z_i z_j^T + z_j z_i^T`.
pub fn edge_coordinate_matrix(cg: &CanonicalGram, g: &Graph) -> IntMatrix {
    let z = tau_coordinates(cg);
    let d = cg.d;
    let edges = g.edges();
    let mut out = IntMatrix::zeros(edges.len(), d * (d + 1) / 2);
    for (x, e) in edges.iter().enumerate() {
        let mut col = 0;
        for a in 0..d {
            for b in a..d {
                *out.get_mut(x, col) = z.get(a, e.i) * z.get(b, e.j) + z.get(a, e.j) * z.get(b, e.i);
                col += 1;
            }
        }
    }
    out
}

/// Rank test on an already built canonical Gram matrix.
///
/// The rank of the edge Gram matrix equals the rank of
/// [`edge_coordinate_matrix`], which has only `d(d+1)/2` columns.
pub fn uvc_test_from(cg: &CanonicalGram, g: &Graph) -> UvcOutcome {
    let target = cg.d * (cg.d + 1) / 2;
    let m = edge_coordinate_matrix(cg, g);
    let rank = rank_exact(&m);
    UvcOutcome {
        rank,
        target,
        edges: g.edge_count(),
        verdict: if rank == target {
            Verdict::Tight
        } else {
            Verdict::Loose
        },
    }
}

/// Rank test computed directly on the `|E| × |E|` edge Gram matrix. Slow;
/// kept as a cross-check for [`uvc_test_from`].
pub fn uvc_test_gram(cg: &CanonicalGram, g: &Graph) -> UvcOutcome {
    let m = edge_gram_matrix(cg, g);
    let content = m.content();
    let rank = if content.is_zero() {
        0
    } else {
        bareiss_rank(&m.div_exact(&content))
    };
    let target = cg.d * (cg.d + 1) / 2;
    UvcOutcome {
        rank,
        target,
        edges: g.edge_count(),
        verdict: if rank == target {
            Verdict::Tight
        } else {
            Verdict::Loose
        },
    }
}

pub fn uvc_test(g: &Graph) -> Result<UvcOutcome> {
    let cg = canonical_gram(g)?;
    Ok(uvc_test_from(&cg, g))
}

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub struct Injectivity {
    pub injective: bool,
    pub locally_injective: bool,
}

/// `p_i = p_j` iff `B_ij = B_ii` (unit vectors with inner product one).
pub fn is_locally_injective_gram(cg: &CanonicalGram, g: &Graph) -> Injectivity {
    let n = g.n();
    let dist2 = g.distance_two_graph();
    let mut injective = true;
    let mut locally_injective = true;
    for i in 0..n {
        for j in i + 1..n {
            if cg.b.get(i, j) == cg.b.get(i, i) {
                injective = false;
                if dist2.has_edge(i, j) {
                    locally_injective = false;
                }
            }
        }
    }
    Injectivity {
        injective,
        locally_injective,
    }
}

/// `G'(p)`: pairs whose inner product meets the edge value `τ/k`.
pub fn augmented_graph(g: &Graph) -> Result<Graph> {
    let cg = canonical_gram(g)?;
    Ok(augmented_graph_from(&cg))
}

pub fn augmented_graph_from(cg: &CanonicalGram) -> Graph {
    Graph::from_fn(cg.n, |u, v| cg.meets_edge_threshold(u, v))
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize, Deserialize)]
#[serde(rename_all = "lowercase")]
pub enum CoreConclusion {
    Certified,
    Inconclusive,
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, Serialize, Deserialize)]
#[serde(rename_all = "snake_case")]
pub enum Reason {
    /// Certified: tight, 2-walk-regular, neither bipartite nor complete multipartite.
    PathTwoWalkRegular,
    /// Certified: tight with a locally injective canonical coloring.
    PathLocallyInjective,
    Loose,
    NotRegular,
    NonIntegerLeastEigenvalue,
    NotOneWalkRegular,
    NotTwoWalkRegular,
    Bipartite,
    CompleteMultipartite,
    NotLocallyInjective,
}

/// One certification result.
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct CertReport {
    pub id: usize,
    pub n: usize,
    pub degree: Option<usize>,
    pub srg: Option<[usize; 4]>,
    pub tau: Option<i64>,
    pub d: Option<usize>,
    pub edges: usize,
    pub rank: Option<usize>,
    pub target: Option<usize>,
    pub verdict: Option<Verdict>,
    pub core: CoreConclusion,
    pub reasons: Vec<Reason>,
    pub ms: Option<u64>,
}

impl CertReport {
    pub fn is_certified(&self) -> bool {
        self.core == CoreConclusion::Certified
    }
}

/// One-sided core certificate. Never concludes that a graph is not a core.
///
/// Edgeless and disconnected inputs are errors; graphs that fall outside the
/// method (irregular, not 1-walk-regular, irrational least eigenvalue) yield
/// an inconclusive report carrying the reason.
pub fn core_certificate(g: &Graph) -> Result<CertReport> {
    let start = Instant::now();
    if g.edge_count() == 0 {
        return Err(Error::Edgeless);
    }
    if !g.is_connected() {
        return Err(Error::NotConnected);
    }
    let mut report = CertReport {
        id: 0,
        n: g.n(),
        degree: g.regular_degree(),
        srg: g.srg_params().map(|(v, k, a, c)| [v, k, a, c]),
        tau: None,
        d: None,
        edges: g.edge_count(),
        rank: None,
        target: None,
        verdict: None,
        core: CoreConclusion::Inconclusive,
        reasons: Vec::new(),
        ms: None,
    };
    let finish = |mut r: CertReport| {
        r.ms = Some(start.elapsed().as_millis() as u64);
        Ok(r)
    };

    let sd = match spectral_data(g) {
        Ok(sd) => sd,
        Err(Error::NotRegular) => {
            report.reasons.push(Reason::NotRegular);
            return finish(report);
        }
        Err(Error::NonIntegerLeastEigenvalue) => {
            report.reasons.push(Reason::NonIntegerLeastEigenvalue);
            return finish(report);
        }
        Err(e) => return Err(e),
    };
    report.tau = Some(sd.tau_i64());
    report.d = Some(sd.d);

    let walk: WalkRegularity = walk_regularity(g);
    if !walk.one_walk {
        report.reasons.push(Reason::NotOneWalkRegular);
        return finish(report);
    }
    let cg = canonical_gram_from(g, &sd);
    let outcome = uvc_test_from(&cg, g);
    report.rank = Some(outcome.rank);
    report.target = Some(outcome.target);
    report.verdict = Some(outcome.verdict);
    if outcome.verdict == Verdict::Loose {
        report.reasons.push(Reason::Loose);
        return finish(report);
    }

    let bipartite = g.is_bipartite();
    let multipartite = g.is_complete_multipartite();
    if walk.two_walk && !bipartite && !multipartite {
        report.reasons.push(Reason::PathTwoWalkRegular);
    }
    let inj = is_locally_injective_gram(&cg, g);
    if inj.locally_injective {
        report.reasons.push(Reason::PathLocallyInjective);
    }
    if report.reasons.is_empty() {
        if !walk.two_walk {
            report.reasons.push(Reason::NotTwoWalkRegular);
        }
        if bipartite {
            report.reasons.push(Reason::Bipartite);
        }
        if multipartite {
            report.reasons.push(Reason::CompleteMultipartite);
        }
        report.reasons.push(Reason::NotLocallyInjective);
    } else {
        report.core = CoreConclusion::Certified;
    }
    finish(report)
}

/// Sandwich certificate: every connected `G` with `H ⊆ G ⊆ H'(p)` is a core
/// when `H` is uniquely vector colorable with an injective coloring.
pub fn sandwich_core_certificate(h: &Graph, g: &Graph) -> Result<CoreConclusion> {
    if h.n() != g.n() {
        return Err(Error::DimensionMismatch {
            expected: h.n(),
            found: g.n(),
        });
    }
    if !g.is_connected() {
        return Err(Error::NotConnected);
    }
    let cg = canonical_gram(h)?;
    if uvc_test_from(&cg, h).verdict != Verdict::Tight {
        return Err(Error::NotUniquelyVectorColorable);
    }
    if !is_locally_injective_gram(&cg, h).injective {
        return Err(Error::NotInjective);
    }
    let upper = augmented_graph_from(&cg);
    if h.is_spanning_subgraph_of(g)? && g.is_spanning_subgraph_of(&upper)? {
        Ok(CoreConclusion::Certified)
    } else {
        Ok(CoreConclusion::Inconclusive)
    }
}
