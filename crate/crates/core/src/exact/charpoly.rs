//! Characteristic polynomials `det(xI - A)`.
//!
//! Two independent routes: Berkowitz's division-free recurrence over the
//! integers, and Hessenberg reduction modulo 62-bit primes recombined by CRT
//! under a rigorous coefficient bound. [`charpoly`] uses Berkowitz for small
//! matrices, where its `O(n^4)` cost is negligible, and the modular route
//! above [`BERKOWITZ_MAX_N`].

use num_bigint::BigInt;
use num_traits::{One, Zero};

use crate::error::Result;

use super::modular::{crt_bound_primes, Crt, ModP};
use super::{IntMatrix, IntPoly};

/// Largest dimension handled by Berkowitz in [`charpoly`].
pub const BERKOWITZ_MAX_N: usize = 40;

pub fn charpoly(a: &IntMatrix) -> Result<IntPoly> {
    let n = a.require_square()?;
    if n <= BERKOWITZ_MAX_N {
        charpoly_berkowitz(a)
    } else {
        charpoly_multimodular(a)
    }
}

/// Berkowitz's algorithm. Returns the monic `det(xI - A)`.
pub fn charpoly_berkowitz(a: &IntMatrix) -> Result<IntPoly> {
    let n = a.require_square()?;
    // descending coefficients of the characteristic polynomial of the
    // leading r x r block
    let mut vect: Vec<BigInt> = vec![BigInt::one()];
    for r in 0..n {
        // block [[M, C], [R, a_rr]] with M the leading r x r part
        let mut toeplitz = Vec::with_capacity(r + 2);
        toeplitz.push(BigInt::one());
        toeplitz.push(-a.get(r, r));
        let mut v: Vec<BigInt> = (0..r).map(|i| a.get(i, r).clone()).collect();
        for _ in 0..r {
            let rv: BigInt = (0..r).map(|j| a.get(r, j) * &v[j]).sum();
            toeplitz.push(-rv);
            v = (0..r)
                .map(|i| (0..r).map(|j| a.get(i, j) * &v[j]).sum())
                .collect();
        }
        let mut next = vec![BigInt::zero(); r + 2];
        for (i, slot) in next.iter_mut().enumerate() {
            for (j, vj) in vect.iter().enumerate().take(i + 1) {
                let t = &toeplitz[i - j];
                if !t.is_zero() && !vj.is_zero() {
                    *slot += t * vj;
                }
            }
        }
        vect = next;
    }
    vect.reverse();
    Ok(IntPoly::new(vect))
}

/// Characteristic polynomial modulo `p` via reduction to Hessenberg form.
/// Coefficients ascending, length `n + 1`.
pub fn charpoly_mod_p(a: &IntMatrix, p: ModP) -> Result<Vec<u64>> {
    let n = a.require_square()?;
    let mut h: Vec<Vec<u64>> = (0..n)
        .map(|i| a.row(i).iter().map(|x| p.reduce(x)).collect())
        .collect();

    for c in 0..n.saturating_sub(2) {
        let Some(piv) = (c + 1..n).find(|&i| h[i][c] != 0) else {
            continue;
        };
        if piv != c + 1 {
            h.swap(piv, c + 1);
            for row in h.iter_mut() {
                row.swap(piv, c + 1);
            }
        }
        let inv = p.inv(h[c + 1][c]);
        for i in c + 2..n {
            if h[i][c] == 0 {
                continue;
            }
            let u = p.mul(h[i][c], inv);
            for j in 0..n {
                let t = p.mul(u, h[c + 1][j]);
                h[i][j] = p.sub(h[i][j], t);
            }
            for row in h.iter_mut() {
                let t = p.mul(u, row[i]);
                row[c + 1] = p.add(row[c + 1], t);
            }
        }
    }

    // p_m = (x - h_mm) p_{m-1} - sum_{i<m} h_im (prod_{j=i+1..m} h_{j,j-1}) p_{i-1}
    let mut polys: Vec<Vec<u64>> = vec![vec![1]];
    for m in 1..=n {
        let prev = &polys[m - 1];
        let mut cur = vec![0u64; m + 1];
        let hmm = h[m - 1][m - 1];
        for (k, &c) in prev.iter().enumerate() {
            cur[k + 1] = p.add(cur[k + 1], c);
            cur[k] = p.sub(cur[k], p.mul(hmm, c));
        }
        let mut t = 1u64;
        for i in (1..m).rev() {
            t = p.mul(t, h[i][i - 1]);
            if t == 0 {
                break;
            }
            let coef = p.mul(h[i - 1][m - 1], t);
            if coef == 0 {
                continue;
            }
            for (k, &c) in polys[i - 1].iter().enumerate() {
                cur[k] = p.sub(cur[k], p.mul(coef, c));
            }
        }
        polys.push(cur);
    }
    Ok(polys.pop().unwrap_or_else(|| vec![1]))
}

/// Multi-modular characteristic polynomial.
///
/// Every eigenvalue satisfies `|λ| <= ρ` with `ρ` the largest absolute row
/// sum, so the coefficient of `x^(n-j)` is at most `C(n, j) ρ^j <= (1+ρ)^n`.
/// Enough primes are used to exceed twice that bound.
pub fn charpoly_multimodular(a: &IntMatrix) -> Result<IntPoly> {
    let n = a.require_square()?;
    let rho = a.max_abs_row_sum();
    let bound = num_traits::pow(BigInt::one() + rho, n);
    let mut crt = Crt::new(n + 1);
    for p in crt_bound_primes(&(bound * 2u32 + 1u32)) {
        let residues = charpoly_mod_p(a, p)?;
        crt.push(p, &residues);
    }
    Ok(IntPoly::new(crt.finish_symmetric()))
}
