//! Word-size prime field arithmetic and Chinese remaindering.

use std::sync::OnceLock;

use num_bigint::{BigInt, BigUint};
use num_integer::Integer;
use num_traits::{One, ToPrimitive, Zero};

/// Arithmetic modulo a prime below `2^63`.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub struct ModP(u64);

impl ModP {
    pub fn new(p: u64) -> Self {
        debug_assert!(is_prime_u64(p));
        ModP(p)
    }

    pub fn modulus(self) -> u64 {
        self.0
    }

    pub fn reduce(self, x: &BigInt) -> u64 {
        let r = x.mod_floor(&BigInt::from(self.0));
        r.to_u64().unwrap_or(0)
    }

    #[inline]
    pub fn add(self, a: u64, b: u64) -> u64 {
        let s = a + b;
        if s >= self.0 {
            s - self.0
        } else {
            s
        }
    }

    #[inline]
    pub fn sub(self, a: u64, b: u64) -> u64 {
        if a >= b {
            a - b
        } else {
            a + self.0 - b
        }
    }

    #[inline]
    pub fn mul(self, a: u64, b: u64) -> u64 {
        ((a as u128 * b as u128) % self.0 as u128) as u64
    }

    pub fn pow(self, mut a: u64, mut e: u64) -> u64 {
        let mut r = 1u64;
        while e > 0 {
            if e & 1 == 1 {
                r = self.mul(r, a);
            }
            a = self.mul(a, a);
            e >>= 1;
        }
        r
    }

    pub fn inv(self, a: u64) -> u64 {
        debug_assert!(a != 0);
        self.pow(a, self.0 - 2)
    }
}

fn mulmod(a: u64, b: u64, m: u64) -> u64 {
    ((a as u128 * b as u128) % m as u128) as u64
}

fn powmod(mut a: u64, mut e: u64, m: u64) -> u64 {
    let mut r = 1u64;
    a %= m;
    while e > 0 {
        if e & 1 == 1 {
            r = mulmod(r, a, m);
        }
        a = mulmod(a, a, m);
        e >>= 1;
    }
    r
}

/// Deterministic Miller–Rabin for all 64-bit inputs.
pub fn is_prime_u64(n: u64) -> bool {
    if n < 2 {
        return false;
    }
    const BASES: [u64; 12] = [2, 3, 5, 7, 11, 13, 17, 19, 23, 29, 31, 37];
    for &b in &BASES {
        if n % b == 0 {
            return n == b;
        }
    }
    let s = (n - 1).trailing_zeros();
    let d = (n - 1) >> s;
    'witness: for &a in &BASES {
        let mut x = powmod(a, d, n);
        if x == 1 || x == n - 1 {
            continue;
        }
        for _ in 1..s {
            x = mulmod(x, x, n);
            if x == n - 1 {
                continue 'witness;
            }
        }
        return false;
    }
    true
}

/// The `count` largest primes below `2^62`, descending.
pub fn primes_below_2_62(count: usize) -> Vec<u64> {
    static CACHE: OnceLock<std::sync::Mutex<Vec<u64>>> = OnceLock::new();
    let cache = CACHE.get_or_init(|| std::sync::Mutex::new(Vec::new()));
    let mut guard = cache.lock().unwrap_or_else(|e| e.into_inner());
    let mut cand = guard.last().map_or((1u64 << 62) - 1, |&p| p - 2);
    while guard.len() < count {
        if is_prime_u64(cand) {
            guard.push(cand);
        }
        cand -= 2;
    }
    guard[..count].to_vec()
}

/// Distinct primes whose product exceeds `bound`.
pub fn crt_bound_primes(bound: &BigInt) -> Vec<ModP> {
    let bits = bound.bits() as usize;
    // each prime contributes more than 61 bits
    let count = bits / 61 + 1;
    primes_below_2_62(count).into_iter().map(ModP::new).collect()
}

/// Incremental Chinese remaindering of a vector of residues.
pub struct Crt {
    modulus: BigUint,
    values: Vec<BigUint>,
}

impl Crt {
    pub fn new(len: usize) -> Self {
        Crt {
            modulus: BigUint::one(),
            values: vec![BigUint::zero(); len],
        }
    }

    pub fn push(&mut self, p: ModP, residues: &[u64]) {
        let pm = p.modulus();
        let m_mod_p = (&self.modulus % pm).to_u64().unwrap_or(0);
        let inv = p.inv(m_mod_p);
        for (v, &r) in self.values.iter_mut().zip(residues) {
            let v_mod_p = (&*v % pm).to_u64().unwrap_or(0);
            let t = p.mul(p.sub(r, v_mod_p), inv);
            *v += &self.modulus * t;
        }
        self.modulus *= pm;
    }

    pub fn modulus(&self) -> &BigUint {
        &self.modulus
    }

    /// Values in `[0, M)`.
    pub fn values(&self) -> &[BigUint] {
        &self.values
    }

    /// Values mapped into `(-M/2, M/2]`.
    pub fn finish_symmetric(self) -> Vec<BigInt> {
        let half = &self.modulus >> 1;
        let m = BigInt::from(self.modulus.clone());
        self.values
            .into_iter()
            .map(|v| {
                if v > half {
                    BigInt::from(v) - &m
                } else {
                    BigInt::from(v)
                }
            })
            .collect()
    }
}

/// The fraction `a/b` with `|a|, |b| <= sqrt(m/2)` and `a ≡ b·x (mod m)`, if
/// one exists. Such a fraction is unique.
pub fn rational_reconstruct(x: &BigUint, m: &BigUint) -> Option<(BigInt, BigInt)> {
    let bound = BigInt::from((m >> 1u32).sqrt());
    let (mut r0, mut r1) = (BigInt::from(m.clone()), BigInt::from(x % m));
    let (mut t0, mut t1) = (BigInt::zero(), BigInt::one());
    while r1 > bound {
        let q = &r0 / &r1;
        let r2 = &r0 - &q * &r1;
        let t2 = &t0 - &q * &t1;
        r0 = std::mem::replace(&mut r1, r2);
        t0 = std::mem::replace(&mut t1, t2);
    }
    if t1.is_zero() || t1.magnitude() > bound.magnitude() || !r1.gcd(&t1).is_one() {
        return None;
    }
    if t1 < BigInt::zero() {
        Some((-r1, -t1))
    } else {
        Some((r1, t1))
    }
}
