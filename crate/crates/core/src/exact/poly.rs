use std::fmt;

use num_bigint::BigInt;
use num_integer::Integer;
use num_traits::{One, Signed, Zero};

use super::Rat;

/// Univariate polynomial with big-integer coefficients, ascending degree.
///
/// The coefficient vector never ends in a zero; the zero polynomial has no
/// coefficients at all.
#[derive(Clone, PartialEq, Eq, Hash, Default)]
pub struct IntPoly {
    coeffs: Vec<BigInt>,
}

impl IntPoly {
    pub fn new(mut coeffs: Vec<BigInt>) -> Self {
        while coeffs.last().is_some_and(Zero::is_zero) {
            coeffs.pop();
        }
        IntPoly { coeffs }
    }

    pub fn from_i64(coeffs: &[i64]) -> Self {
        Self::new(coeffs.iter().map(|&c| BigInt::from(c)).collect())
    }

    pub fn zero() -> Self {
        IntPoly { coeffs: Vec::new() }
    }

    pub fn one() -> Self {
        Self::constant(BigInt::one())
    }

    pub fn constant(c: BigInt) -> Self {
        Self::new(vec![c])
    }

    /// `x - t`.
    pub fn linear_root(t: &BigInt) -> Self {
        Self::new(vec![-t, BigInt::one()])
    }

    pub fn x() -> Self {
        Self::from_i64(&[0, 1])
    }

    pub fn coeffs(&self) -> &[BigInt] {
        &self.coeffs
    }

    pub fn is_zero(&self) -> bool {
        self.coeffs.is_empty()
    }

    /// Degree; `None` for the zero polynomial.
    pub fn degree(&self) -> Option<usize> {
        self.coeffs.len().checked_sub(1)
    }

    pub fn leading(&self) -> Option<&BigInt> {
        self.coeffs.last()
    }

    pub fn is_monic(&self) -> bool {
        self.leading().is_some_and(One::is_one)
    }

    pub fn coeff(&self, i: usize) -> BigInt {
        self.coeffs.get(i).cloned().unwrap_or_default()
    }

    pub fn eval(&self, t: &BigInt) -> BigInt {
        let mut acc = BigInt::zero();
        for c in self.coeffs.iter().rev() {
            acc *= t;
            acc += c;
        }
        acc
    }

    /// Sign of `p(num/den)` for `den > 0`, computed on the homogenised
    /// integer form.
    pub fn sign_at(&self, x: &Rat) -> i8 {
        let (num, den) = (x.numer(), x.denom());
        if self.is_zero() {
            return 0;
        }
        let mut acc = BigInt::zero();
        let mut den_pow = BigInt::one();
        // sum c_i num^i den^(deg - i), Horner on num with den powers
        for (i, c) in self.coeffs.iter().enumerate().rev() {
            acc *= num;
            acc += c * &den_pow;
            if i > 0 {
                den_pow *= den;
            }
        }
        match acc.sign() {
            num_bigint::Sign::Minus => -1,
            num_bigint::Sign::NoSign => 0,
            num_bigint::Sign::Plus => 1,
        }
    }

    pub fn derivative(&self) -> Self {
        Self::new(
            self.coeffs
                .iter()
                .enumerate()
                .skip(1)
                .map(|(i, c)| c * BigInt::from(i))
                .collect(),
        )
    }

    pub fn mul(&self, other: &Self) -> Self {
        if self.is_zero() || other.is_zero() {
            return Self::zero();
        }
        let mut out = vec![BigInt::zero(); self.coeffs.len() + other.coeffs.len() - 1];
        for (i, a) in self.coeffs.iter().enumerate() {
            if a.is_zero() {
                continue;
            }
            for (j, b) in other.coeffs.iter().enumerate() {
                out[i + j] += a * b;
            }
        }
        Self::new(out)
    }

    pub fn add(&self, other: &Self) -> Self {
        let len = self.coeffs.len().max(other.coeffs.len());
        Self::new((0..len).map(|i| self.coeff(i) + other.coeff(i)).collect())
    }

    pub fn neg(&self) -> Self {
        Self::new(self.coeffs.iter().map(|c| -c).collect())
    }

    pub fn sub(&self, other: &Self) -> Self {
        self.add(&other.neg())
    }

    pub fn scale(&self, k: &BigInt) -> Self {
        Self::new(self.coeffs.iter().map(|c| c * k).collect())
    }

    /// `(x - t)^e`.
    pub fn root_power(t: &BigInt, e: usize) -> Self {
        let lin = Self::linear_root(t);
        (0..e).fold(Self::one(), |acc, _| acc.mul(&lin))
    }

    /// Synthetic division by `x - t`: `self = q·(x - t) + r`.
    pub fn divide_out_root(&self, t: &BigInt) -> (IntPoly, BigInt) {
        let Some(deg) = self.degree() else {
            return (Self::zero(), BigInt::zero());
        };
        if deg == 0 {
            return (Self::zero(), self.coeffs[0].clone());
        }
        let mut q = vec![BigInt::zero(); deg];
        let mut carry = BigInt::zero();
        for i in (0..=deg).rev() {
            let v = &self.coeffs[i] + &carry * t;
            if i == 0 {
                return (Self::new(q), v);
            }
            q[i - 1] = v.clone();
            carry = v;
        }
        unreachable!()
    }

    /// Multiplicity of `t` as a root and the cofactor `self / (x - t)^m`.
    pub fn strip_root(&self, t: &BigInt) -> (usize, IntPoly) {
        let mut cur = self.clone();
        let mut m = 0;
        while !cur.is_zero() {
            let (q, r) = cur.divide_out_root(t);
            if !r.is_zero() {
                break;
            }
            cur = q;
            m += 1;
        }
        (m, cur)
    }

    /// gcd of the coefficients (nonnegative; zero for the zero polynomial).
    pub fn content(&self) -> BigInt {
        self.coeffs
            .iter()
            .fold(BigInt::zero(), |g, c| g.gcd(c))
    }

    /// Primitive part with a positive leading coefficient.
    pub fn primitive(&self) -> Self {
        if self.is_zero() {
            return Self::zero();
        }
        let mut g = self.content();
        if self.leading().is_some_and(|l| l.is_negative()) {
            g = -g;
        }
        Self::new(self.coeffs.iter().map(|c| c / &g).collect())
    }

    /// Remainder of `self` by `b` scaled by a positive integer
    /// (a power of `|lc(b)|`), so signs match the true remainder.
    pub fn pseudo_rem(&self, b: &Self) -> Self {
        let db = b.degree().expect("pseudo-division by zero polynomial");
        let lead = b.leading().cloned().unwrap_or_default();
        let lb = lead.abs();
        let flip = lead.is_negative();
        let mut r = self.coeffs.clone();
        while r.len() > db && r.iter().any(|c| !c.is_zero()) {
            while r.last().is_some_and(Zero::is_zero) {
                r.pop();
            }
            if r.len() <= db {
                break;
            }
            let shift = r.len() - 1 - db;
            let mut lr = r.last().cloned().unwrap_or_default();
            if flip {
                lr = -lr;
            }
            for c in r.iter_mut() {
                *c *= &lb;
            }
            for (i, bc) in b.coeffs.iter().enumerate() {
                r[i + shift] -= &lr * bc;
            }
            r.pop();
        }
        Self::new(r)
    }

    /// Exact division over the integers; `None` if `divisor` does not divide.
    pub fn div_exact(&self, divisor: &Self) -> Option<Self> {
        let dd = divisor.degree()?;
        let ld = divisor.leading()?.clone();
        let mut r = self.coeffs.clone();
        if r.len() <= dd {
            return r.iter().all(Zero::is_zero).then(Self::zero);
        }
        let mut q = vec![BigInt::zero(); r.len() - dd];
        for s in (0..r.len() - dd).rev() {
            let top = r[s + dd].clone();
            if top.is_zero() {
                continue;
            }
            let (qc, rem) = top.div_rem(&ld);
            if !rem.is_zero() {
                return None;
            }
            for (i, dc) in divisor.coeffs.iter().enumerate() {
                r[s + i] -= &qc * dc;
            }
            q[s] = qc;
        }
        r.iter().all(Zero::is_zero).then(|| Self::new(q))
    }

    /// Primitive gcd via the primitive polynomial remainder sequence.
    pub fn gcd(&self, other: &Self) -> Self {
        let mut a = self.primitive();
        let mut b = other.primitive();
        if a.degree() < b.degree() {
            std::mem::swap(&mut a, &mut b);
        }
        while !b.is_zero() {
            let r = a.pseudo_rem(&b).primitive();
            a = b;
            b = r;
        }
        a
    }

    /// Squarefree part `p / gcd(p, p')`, primitive with positive leading
    /// coefficient.
    pub fn squarefree(&self) -> Self {
        if self.degree().unwrap_or(0) == 0 {
            return self.primitive();
        }
        let g = self.gcd(&self.derivative());
        self.primitive()
            .div_exact(&g)
            .expect("gcd divides the polynomial")
            .primitive()
    }

    /// A bound `B` with every complex root satisfying `|z| <= B`
    /// (Fujiwara's bound rounded up to an integer).
    pub fn root_bound(&self) -> BigInt {
        let Some(deg) = self.degree() else {
            return BigInt::zero();
        };
        let lead = self.coeffs[deg].abs();
        let mut best = BigInt::zero();
        for i in 1..=deg {
            let c = self.coeffs[deg - i].abs();
            if c.is_zero() {
                continue;
            }
            let ratio = c.div_ceil(&lead);
            let root = ratio.nth_root(i as u32) + 1u32;
            if root > best {
                best = root;
            }
        }
        best * 2u32
    }

    /// Integer roots with multiplicities, in ascending order of the root.
    ///
    /// Candidates are the divisors of the trailing nonzero coefficient that
    /// lie inside [`IntPoly::root_bound`].
    pub fn integer_roots(&self) -> Vec<(BigInt, usize)> {
        assert!(!self.is_zero(), "integer_roots of the zero polynomial");
        let mut out = Vec::new();
        let zeros = self.coeffs.iter().take_while(|c| c.is_zero()).count();
        let core = Self::new(self.coeffs[zeros..].to_vec());
        if zeros > 0 {
            out.push((BigInt::zero(), zeros));
        }
        if core.degree() == Some(0) {
            return out;
        }
        let sf = core.squarefree();
        let trailing = sf.coeffs[0].abs();
        let limit = sf.root_bound().min(trailing.clone());
        let mut t = BigInt::one();
        while t <= limit {
            if (&trailing % &t).is_zero() {
                for cand in [-t.clone(), t.clone()] {
                    if sf.eval(&cand).is_zero() {
                        let (m, _) = core.strip_root(&cand);
                        out.push((cand, m));
                    }
                }
            }
            t += 1u32;
        }
        out.sort();
        out
    }
}

impl fmt::Debug for IntPoly {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{self}")
    }
}

impl fmt::Display for IntPoly {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.is_zero() {
            return write!(f, "0");
        }
        let mut first = true;
        for (i, c) in self.coeffs.iter().enumerate().rev() {
            if c.is_zero() {
                continue;
            }
            let neg = c.is_negative();
            let mag = c.abs();
            if first {
                if neg {
                    write!(f, "-")?;
                }
            } else {
                write!(f, " {} ", if neg { '-' } else { '+' })?;
            }
            first = false;
            match (i, mag.is_one()) {
                (0, _) => write!(f, "{mag}")?,
                (1, true) => write!(f, "x")?,
                (1, false) => write!(f, "{mag}x")?,
                (_, true) => write!(f, "x^{i}")?,
                (_, false) => write!(f, "{mag}x^{i}")?,
            }
        }
        Ok(())
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use proptest::prelude::*;

    fn p(c: &[i64]) -> IntPoly {
        IntPoly::from_i64(c)
    }

    #[test]
    fn divide_out_root_examples() {
        // x^3 - 3x - 2 = (x + 1)(x^2 - x - 2)
        let (q, r) = p(&[-2, -3, 0, 1]).divide_out_root(&BigInt::from(-1));
        assert_eq!(q, p(&[-2, -1, 1]));
        assert_eq!(r, BigInt::zero());
        let (q, r) = p(&[0, 0, 1]).divide_out_root(&BigInt::zero());
        assert_eq!(q, p(&[0, 1]));
        assert!(r.is_zero());
        let (q, r) = p(&[1, 0, 1]).divide_out_root(&BigInt::one());
        assert_eq!(q, p(&[1, 1]));
        assert_eq!(r, BigInt::from(2));
    }

    #[test]
    fn integer_roots_examples() {
        assert_eq!(
            p(&[-2, -3, 0, 1]).integer_roots(),
            vec![(BigInt::from(-1), 2), (BigInt::from(2), 1)]
        );
        assert!(p(&[1, 0, 1]).integer_roots().is_empty());
        assert_eq!(p(&[0, 0, 0, 5]).integer_roots(), vec![(BigInt::zero(), 3)]);
    }

    #[test]
    fn eval_examples() {
        assert!(p(&[-2, -1, 1]).eval(&BigInt::from(-1)).is_zero());
        assert_eq!(p(&[0, 1]).eval(&BigInt::from(7)), BigInt::from(7));
    }

    #[test]
    fn squarefree_and_gcd() {
        // (x+1)^2 (x-2)
        let f = p(&[-2, -3, 0, 1]);
        assert_eq!(f.squarefree(), p(&[-2, -1, 1]));
        assert_eq!(f.gcd(&f.derivative()), p(&[1, 1]));
        assert_eq!(p(&[6]).squarefree(), p(&[1]));
    }

    #[test]
    fn display() {
        assert_eq!(p(&[-2, -3, 0, 1]).to_string(), "x^3 - 3x - 2");
        assert_eq!(IntPoly::zero().to_string(), "0");
    }

    #[test]
    fn sign_at_rational() {
        let f = p(&[-2, 0, 1]);
        assert_eq!(f.sign_at(&Rat::new(3.into(), 2.into())), 1);
        assert_eq!(f.sign_at(&Rat::new(4.into(), 3.into())), -1);
        assert_eq!(p(&[-1, 2]).sign_at(&Rat::new(1.into(), 2.into())), 0);
    }

    proptest! {
        #[test]
        fn divide_then_multiply_back(c in proptest::collection::vec(-50i64..50, 0..8), t in -6i64..6) {
            let f = p(&c);
            let t = BigInt::from(t);
            let (q, r) = f.divide_out_root(&t);
            let back = q.mul(&IntPoly::linear_root(&t)).add(&IntPoly::constant(r));
            prop_assert_eq!(back, f);
        }

        #[test]
        fn roots_of_products(roots in proptest::collection::vec(-5i64..5, 1..7), extra in 1i64..4) {
            let mut f = IntPoly::constant(BigInt::from(extra));
            for &r in &roots {
                f = f.mul(&IntPoly::linear_root(&BigInt::from(r)));
            }
            let found = f.integer_roots();
            let total: usize = found.iter().map(|(_, m)| m).sum();
            prop_assert_eq!(total, roots.len());
            for (r, m) in found {
                let expect = roots.iter().filter(|&&x| BigInt::from(x) == r).count();
                prop_assert_eq!(m, expect);
            }
        }

        #[test]
        fn root_multiplicities_bounded_by_degree(c in proptest::collection::vec(-20i64..20, 2..7)) {
            let f = p(&c);
            prop_assume!(!f.is_zero());
            let total: usize = f.integer_roots().iter().map(|(_, m)| m).sum();
            prop_assert!(total <= f.degree().unwrap());
        }
    }
}
