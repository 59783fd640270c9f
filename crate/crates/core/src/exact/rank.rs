use num_bigint::BigInt;
use num_integer::Integer;
use num_traits::{One, Zero};

use super::modular::{primes_below_2_62, rational_reconstruct, Crt, ModP};
use super::IntMatrix;

/// Most primes combined before falling back to [`bareiss_rank`].
const MAX_CERT_PRIMES: usize = 32;

/// Exact rank over the rationals.
///
/// The rank modulo a prime is a lower bound. For the upper bound the kernel
/// basis read off the reduced echelon form modulo primes is lifted by Chinese
/// remaindering and rational reconstruction, then checked to be annihilated by
/// the matrix in exact integer arithmetic. Those vectors are independent, so a
/// successful check pins the rank. If no lift checks out within
/// `MAX_CERT_PRIMES` primes, [`bareiss_rank`] decides.
pub fn rank_exact(m: &IntMatrix) -> usize {
    let primes = primes_below_2_62(MAX_CERT_PRIMES);
    let p0 = ModP::new(primes[0]);
    let (pivots, pivot_rows, rref) = rref_mod_p(m, p0);
    let r = pivots.len();
    if r == m.cols() {
        return r;
    }
    // these rows are independent, so later primes only need this submatrix
    let rows_sub = IntMatrix::from_fn(r, m.cols(), |t, j| m.get(pivot_rows[t], j).clone());
    let free: Vec<usize> = (0..m.cols()).filter(|j| !pivots.contains(j)).collect();
    let residues = |rref: &[Vec<u64>]| -> Vec<u64> {
        free.iter().flat_map(|&f| rref.iter().map(move |row| row[f])).collect()
    };
    let mut crt = Crt::new(r * free.len());
    crt.push(p0, &residues(&rref));
    let mut next_check = 1;
    for (used, &p) in primes.iter().enumerate().skip(1) {
        if used >= next_check {
            next_check *= 2;
            if kernel_lift_checks(m, &crt, &pivots, &free) == Some(true) {
                return r;
            }
        }
        let p = ModP::new(p);
        let (piv2, _, rref2) = rref_mod_p(&rows_sub, p);
        if piv2 == pivots {
            crt.push(p, &residues(&rref2));
        }
    }
    if kernel_lift_checks(m, &crt, &pivots, &free) == Some(true) {
        return r;
    }
    // only reachable if the first prime lost rank or the kernel has huge entries
    bareiss_rank(m)
}

/// `None` when some entry has no small rational lift yet.
fn kernel_lift_checks(m: &IntMatrix, crt: &Crt, pivots: &[usize], free: &[usize]) -> Option<bool> {
    let r = pivots.len();
    for (fi, &f) in free.iter().enumerate() {
        let mut fracs = Vec::with_capacity(r);
        for t in 0..r {
            fracs.push(rational_reconstruct(&crt.values()[fi * r + t], crt.modulus())?);
        }
        let den = fracs.iter().fold(BigInt::one(), |acc, (_, b)| acc.lcm(b));
        // v[f] = den, v[pivot t] = -den·(rref entry)
        let mut v: Vec<(usize, BigInt)> = vec![(f, den.clone())];
        for (t, (a, b)) in fracs.into_iter().enumerate() {
            if !a.is_zero() {
                v.push((pivots[t], -(a * (&den / b))));
            }
        }
        for i in 0..m.rows() {
            let row = m.row(i);
            let mut s = BigInt::zero();
            for (j, x) in &v {
                if !row[*j].is_zero() {
                    s += &row[*j] * x;
                }
            }
            if !s.is_zero() {
                return Some(false);
            }
        }
    }
    Some(true)
}

/// Reduced row echelon form modulo `p`: pivot columns, the input rows that
/// produced them, and the `rank × cols` reduced rows.
fn rref_mod_p(m: &IntMatrix, p: ModP) -> (Vec<usize>, Vec<usize>, Vec<Vec<u64>>) {
    let cols = m.cols();
    let mut a: Vec<(usize, Vec<u64>)> = (0..m.rows())
        .map(|i| (i, m.row(i).iter().map(|x| p.reduce(x)).collect()))
        .collect();
    let mut pivots = Vec::new();
    let mut rank = 0;
    for c in 0..cols {
        let Some(piv) = (rank..a.len()).find(|&i| a[i].1[c] != 0) else {
            continue;
        };
        a.swap(rank, piv);
        let inv = p.inv(a[rank].1[c]);
        for x in a[rank].1[c..].iter_mut() {
            *x = p.mul(*x, inv);
        }
        let prow = a[rank].1.clone();
        for (i, (_, row)) in a.iter_mut().enumerate() {
            if i == rank || row[c] == 0 {
                continue;
            }
            let f = row[c];
            for j in c..cols {
                if prow[j] != 0 {
                    row[j] = p.sub(row[j], p.mul(f, prow[j]));
                }
            }
        }
        pivots.push(c);
        rank += 1;
        if rank == a.len() {
            break;
        }
    }
    a.truncate(rank);
    let (pivot_rows, rref) = a.into_iter().unzip();
    (pivots, pivot_rows, rref)
}

/// Rank over the rationals by fraction-free (Bareiss) elimination.
///
/// Full pivoting picks the nonzero entry of smallest magnitude in the active
/// submatrix at each step. Every intermediate entry is a minor of the
/// permuted input, so all divisions are exact.
pub fn bareiss_rank(m: &IntMatrix) -> usize {
    let rows = m.rows();
    let cols = m.cols();
    let mut a: Vec<Vec<BigInt>> = m.clone().into_rows();
    if cols == 0 {
        return 0;
    }
    let mut prev = BigInt::from(1);
    let mut rank = 0;
    for k in 0..rows.min(cols) {
        let mut best: Option<(usize, usize)> = None;
        for (i, row) in a.iter().enumerate().skip(k) {
            for (j, x) in row.iter().enumerate().skip(k) {
                if x.is_zero() {
                    continue;
                }
                let better = match best {
                    None => true,
                    Some((bi, bj)) => x.magnitude() < a[bi][bj].magnitude(),
                };
                if better {
                    best = Some((i, j));
                }
            }
        }
        let Some((pi, pj)) = best else { break };
        a.swap(k, pi);
        if pj != k {
            for row in a.iter_mut().skip(k) {
                row.swap(k, pj);
            }
        }
        rank += 1;
        let (top, rest) = a.split_at_mut(k + 1);
        let pivot_row = &top[k];
        let pivot = pivot_row[k].clone();
        for row in rest.iter_mut() {
            let factor = std::mem::take(&mut row[k]);
            for j in k + 1..cols {
                let x = &mut row[j];
                *x *= &pivot;
                if !factor.is_zero() && !pivot_row[j].is_zero() {
                    *x -= &factor * &pivot_row[j];
                }
                if !x.is_zero() {
                    *x /= &prev;
                }
            }
        }
        prev = pivot;
    }
    rank
}

/// Rank modulo a prime. Never exceeds the rational rank.
pub fn rank_mod_p(m: &IntMatrix, p: ModP) -> usize {
    let rows = m.rows();
    let cols = m.cols();
    let mut a: Vec<Vec<u64>> = (0..rows)
        .map(|i| m.row(i).iter().map(|x| p.reduce(x)).collect())
        .collect();
    let mut rank = 0;
    for c in 0..cols {
        let Some(piv) = (rank..rows).find(|&i| a[i][c] != 0) else {
            continue;
        };
        a.swap(rank, piv);
        let inv = p.inv(a[rank][c]);
        let (top, rest) = a.split_at_mut(rank + 1);
        let prow = &top[rank];
        for row in rest.iter_mut() {
            if row[c] == 0 {
                continue;
            }
            let f = p.mul(row[c], inv);
            for j in c..cols {
                if prow[j] != 0 {
                    row[j] = p.sub(row[j], p.mul(f, prow[j]));
                }
            }
        }
        rank += 1;
        if rank == rows {
            break;
        }
    }
    rank
}

/// Indices of rows that are linearly independent modulo `p`, chosen greedily
/// in order. Rows independent modulo a prime are independent over the
/// rationals.
pub fn independent_rows_mod_p(m: &IntMatrix, p: ModP) -> Vec<usize> {
    let cols = m.cols();
    // reduced basis rows with their pivot columns
    let mut basis: Vec<(usize, Vec<u64>)> = Vec::new();
    let mut picked = Vec::new();
    for i in 0..m.rows() {
        let mut v: Vec<u64> = m.row(i).iter().map(|x| p.reduce(x)).collect();
        for (c, b) in &basis {
            if v[*c] != 0 {
                let f = v[*c];
                for j in 0..cols {
                    if b[j] != 0 {
                        v[j] = p.sub(v[j], p.mul(f, b[j]));
                    }
                }
            }
        }
        if let Some(c) = v.iter().position(|&x| x != 0) {
            let inv = p.inv(v[c]);
            for x in v.iter_mut() {
                *x = p.mul(*x, inv);
            }
            basis.push((c, v));
            picked.push(i);
            if picked.len() == cols {
                break;
            }
        }
    }
    picked
}
