//! Independent oracles and fixtures shared by the integration tests.
#![allow(dead_code)]

use num_bigint::BigInt;
use num_rational::BigRational;
use num_traits::{One, Signed, Zero};
use rand::seq::SliceRandom;
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;

use uvc::exact::{IntMatrix, IntPoly};
use uvc::families::{hamming_h, hamming_h_prime, kneser, q_kneser};
use uvc::Graph;

/// `det(xI - A)` by Laplace expansion along the first row.
pub fn charpoly_cofactor(a: &IntMatrix) -> IntPoly {
    let n = a.rows();
    let entry = |i: usize, j: usize| {
        let c = IntPoly::constant(-a.get(i, j).clone());
        if i == j {
            c.add(&IntPoly::x())
        } else {
            c
        }
    };
    let m: Vec<Vec<IntPoly>> = (0..n).map(|i| (0..n).map(|j| entry(i, j)).collect()).collect();
    let rows: Vec<usize> = (0..n).collect();
    let cols: Vec<usize> = (0..n).collect();
    det_poly(&m, &rows, &cols)
}

fn det_poly(m: &[Vec<IntPoly>], rows: &[usize], cols: &[usize]) -> IntPoly {
    if rows.is_empty() {
        return IntPoly::one();
    }
    let r = rows[0];
    let mut acc = IntPoly::zero();
    for (k, &c) in cols.iter().enumerate() {
        if m[r][c].is_zero() {
            continue;
        }
        let rest: Vec<usize> = cols.iter().copied().filter(|&x| x != c).collect();
        let term = m[r][c].mul(&det_poly(m, &rows[1..], &rest));
        acc = if k % 2 == 0 { acc.add(&term) } else { acc.sub(&term) };
    }
    acc
}

/// Rank by Gaussian elimination over the rationals.
pub fn rank_rational(a: &IntMatrix) -> usize {
    let mut m: Vec<Vec<BigRational>> = (0..a.rows())
        .map(|i| a.row(i).iter().map(|x| BigRational::from_integer(x.clone())).collect())
        .collect();
    let mut rank = 0;
    for c in 0..a.cols() {
        let Some(p) = (rank..m.len()).find(|&i| !m[i][c].is_zero()) else {
            continue;
        };
        m.swap(rank, p);
        let pivot = m[rank][c].clone();
        for i in rank + 1..m.len() {
            if m[i][c].is_zero() {
                continue;
            }
            let f = &m[i][c] / &pivot;
            for j in c..a.cols() {
                let t = &f * &m[rank][j];
                m[i][j] -= t;
            }
        }
        rank += 1;
    }
    rank
}

pub fn rng(seed: u64) -> ChaCha8Rng {
    ChaCha8Rng::seed_from_u64(seed)
}

pub fn random_matrix(rng: &mut impl Rng, rows: usize, cols: usize, lo: i64, hi: i64) -> IntMatrix {
    IntMatrix::from_fn(rows, cols, |_, _| BigInt::from(rng.gen_range(lo..=hi)))
}

/// Random `rows × cols` matrix of rank at most `k`, as a product of two random factors.
pub fn random_low_rank(rng: &mut impl Rng, rows: usize, cols: usize, k: usize) -> IntMatrix {
    let a = random_matrix(rng, rows, k, -3, 3);
    let b = random_matrix(rng, k, cols, -3, 3);
    a.mul(&b).unwrap()
}

pub fn petersen() -> Graph {
    kneser(5, 2).unwrap()
}

/// `K_3 □ K_3`, the 3×3 rook graph, SRG(9,4,1,2).
pub fn rook3() -> Graph {
    Graph::from_fn(9, |a, b| a / 3 == b / 3 || a % 3 == b % 3)
}

pub fn prism() -> Graph {
    Graph::from_fn(6, |a, b| a / 3 == b / 3 || a % 3 == b % 3)
}

pub fn complete_bipartite(a: usize, b: usize) -> Graph {
    Graph::from_fn(a + b, |x, y| (x < a) != (y < a))
}

/// A Latin square of order `n` by randomized backtracking with a fixed seed.
pub fn latin_square(n: usize, seed: u64) -> Vec<Vec<usize>> {
    fn fill(sq: &mut Vec<Vec<usize>>, cell: usize, n: usize, rng: &mut ChaCha8Rng) -> bool {
        if cell == n * n {
            return true;
        }
        let (r, c) = (cell / n, cell % n);
        let mut symbols: Vec<usize> = (0..n).collect();
        symbols.shuffle(rng);
        for s in symbols {
            if (0..c).any(|j| sq[r][j] == s) || (0..r).any(|i| sq[i][c] == s) {
                continue;
            }
            sq[r][c] = s;
            if fill(sq, cell + 1, n, rng) {
                return true;
            }
        }
        sq[r][c] = usize::MAX;
        false
    }
    let mut sq = vec![vec![usize::MAX; n]; n];
    let mut r = rng(seed);
    assert!(fill(&mut sq, 0, n, &mut r));
    sq
}

/// Latin square graph: cells adjacent when they share a row, column or symbol.
/// For order 6 this is SRG(36,15,6,6).
pub fn latin_square_graph(sq: &[Vec<usize>]) -> Graph {
    let n = sq.len();
    Graph::from_fn(n * n, |a, b| {
        let (ra, ca, rb, cb) = (a / n, a % n, b / n, b % n);
        ra == rb || ca == cb || sq[ra][ca] == sq[rb][cb]
    })
}

pub fn srg36_fixtures(count: usize) -> Vec<Graph> {
    (0..count as u64).map(|s| latin_square_graph(&latin_square(6, s))).collect()
}

/// Connected regular graphs, most of them 1-walk-regular with integral least
/// eigenvalue.
pub fn corpus() -> Vec<(String, Graph)> {
    let mut v: Vec<(String, Graph)> = Vec::new();
    for m in 2..=7 {
        v.push((format!("K{m}"), Graph::complete(m)));
    }
    for m in [4, 6, 8] {
        v.push((format!("C{m}"), Graph::cycle(m)));
    }
    v.push(("petersen".into(), petersen()));
    v.push(("petersen-complement".into(), petersen().complement()));
    v.push(("rook3".into(), rook3()));
    v.push(("K3,3".into(), complete_bipartite(3, 3)));
    v.push(("K4,4".into(), complete_bipartite(4, 4)));
    v.push(("kneser(7,2)".into(), kneser(7, 2).unwrap()));
    v.push(("kneser(7,3)".into(), kneser(7, 3).unwrap()));
    v.push(("kneser(6,2)".into(), kneser(6, 2).unwrap()));
    v.push(("hamming_h(5,4)".into(), hamming_h(5, 4).unwrap()));
    v.push(("hamming_h(6,4)".into(), hamming_h(6, 4).unwrap()));
    v.push(("hamming_h_prime(6,4)".into(), hamming_h_prime(6, 4).unwrap()));
    v.push(("q_kneser(2,4,2)".into(), q_kneser(2, 4, 2).unwrap()));
    v.push(("cube3".into(), Graph::from_fn(8, |a, b| (a ^ b).count_ones() == 1)));
    v.push(("latin6".into(), latin_square_graph(&latin_square(6, 0))));
    v.push(("prism".into(), prism()));
    v
}

pub fn is_positive(x: &BigInt) -> bool {
    x.is_positive()
}

pub fn rat(a: i64, b: i64) -> BigRational {
    BigRational::new(BigInt::from(a), BigInt::from(b))
}

pub fn one() -> BigRational {
    BigRational::one()
}
