use crate::error::{Error, Result};

use super::{IntPoly, Rat};

/// Sturm sequence of the squarefree part of `p`, each term made primitive
/// (positive rescaling keeps the sign pattern intact).
pub fn sturm_sequence(p: &IntPoly) -> Vec<IntPoly> {
    let p0 = p.squarefree();
    if p0.degree().unwrap_or(0) == 0 {
        return vec![p0];
    }
    let p1 = p0.derivative().primitive();
    let mut seq = vec![p0, p1];
    loop {
        let n = seq.len();
        let r = seq[n - 2].pseudo_rem(&seq[n - 1]);
        if r.is_zero() {
            break;
        }
        let r = r.neg();
        let c = r.content();
        seq.push(IntPoly::new(r.coeffs().iter().map(|x| x / &c).collect()));
    }
    seq
}

fn sign_changes(seq: &[IntPoly], x: &Rat) -> usize {
    let mut last = 0i8;
    let mut changes = 0;
    for s in seq.iter().map(|q| q.sign_at(x)) {
        if s == 0 {
            continue;
        }
        if last != 0 && s != last {
            changes += 1;
        }
        last = s;
    }
    changes
}

/// Number of distinct real roots of `p` in the open interval `(lo, hi)`.
pub fn sturm_root_count(p: &IntPoly, lo: &Rat, hi: &Rat) -> Result<usize> {
    if p.is_zero() {
        return Err(Error::InvalidParameter("zero polynomial".into()));
    }
    if lo >= hi {
        return Err(Error::InvalidParameter(format!(
            "empty interval ({lo}, {hi})"
        )));
    }
    let seq = sturm_sequence(p);
    for end in [lo, hi] {
        if seq[0].sign_at(end) == 0 {
            return Err(Error::EndpointIsRoot(end.to_string()));
        }
    }
    let (a, b) = (sign_changes(&seq, lo), sign_changes(&seq, hi));
    debug_assert!(a >= b);
    Ok(a - b)
}

/// Number of distinct real roots, using the integer root bound as the
/// interval radius.
pub fn real_root_count(p: &IntPoly) -> usize {
    let r = Rat::from_integer(p.root_bound() + 1u32);
    if p.degree().unwrap_or(0) == 0 {
        return 0;
    }
    sturm_root_count(p, &-r.clone(), &r).expect("bound exceeds every root")
}
