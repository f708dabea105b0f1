//! Exact modular arithmetic over an odd prime modulus.
//!
//! Everything here works in 64-bit integers. Moduli are capped at `2^31`, so
//! a product of two reduced residues always fits in an `i64`.

use std::fmt;

use crate::Error;

/// Largest accepted modulus (exclusive).
pub const MAX_PRIME: u64 = 1 << 31;

/// An odd prime `P` with `3 <= P < 2^31`.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct Prime(i64);

impl Prime {
    pub fn new(value: u64) -> Result<Self, Error> {
        if value >= MAX_PRIME {
            return Err(Error::PrimeTooLarge(value));
        }
        if value < 3 || !is_prime(value) {
            return Err(Error::NotPrime(value));
        }
        Ok(Prime(value as i64))
    }

    #[inline]
    pub fn get(self) -> i64 {
        self.0
    }

    #[inline]
    pub fn as_usize(self) -> usize {
        self.0 as usize
    }

    /// `(P - 1) / 2`, the largest centered residue.
    #[inline]
    pub fn half(self) -> i64 {
        (self.0 - 1) / 2
    }

    /// `(P + 1) / 2`, the inverse of 2 modulo `P`.
    #[inline]
    pub fn inv2(self) -> i64 {
        (self.0 + 1) / 2
    }

    /// Reduces `x` into `[0, P)`.
    #[inline]
    pub fn reduce(self, x: i64) -> i64 {
        x.rem_euclid(self.0)
    }

    /// `a * b mod P` for arbitrary `a`, `b`.
    #[inline]
    pub fn mul(self, a: i64, b: i64) -> i64 {
        self.reduce(a) * self.reduce(b) % self.0
    }
}

impl fmt::Display for Prime {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{}", self.0)
    }
}

/// A residue in the symmetric range `[-(P-1)/2, (P-1)/2]`.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub struct CenteredResidue {
    value: i64,
    modulus: Prime,
}

impl CenteredResidue {
    #[inline]
    pub fn value(self) -> i64 {
        self.value
    }

    #[inline]
    pub fn modulus(self) -> Prime {
        self.modulus
    }

    /// The representative in `[0, P)`.
    #[inline]
    pub fn decentered(self) -> i64 {
        self.modulus.reduce(self.value)
    }
}

impl From<CenteredResidue> for i64 {
    fn from(r: CenteredResidue) -> i64 {
        r.value
    }
}

/// Primality test, deterministic for every `u64`.
///
/// Trial division for small inputs, Miller-Rabin with the first twelve prime
/// bases otherwise (sufficient for all 64-bit integers).
pub fn is_prime(n: u64) -> bool {
    const SMALL: [u64; 12] = [2, 3, 5, 7, 11, 13, 17, 19, 23, 29, 31, 37];
    if n < 2 {
        return false;
    }
    for &p in &SMALL {
        if n % p == 0 {
            return n == p;
        }
    }
    if n < 41 * 41 {
        return true;
    }
    let mut d = n - 1;
    let mut s = 0;
    while d % 2 == 0 {
        d /= 2;
        s += 1;
    }
    'bases: for &a in &SMALL {
        let mut x = pow_mod_u64(a, d, n);
        if x == 1 || x == n - 1 {
            continue;
        }
        for _ in 1..s {
            x = mul_mod_u64(x, x, n);
            if x == n - 1 {
                continue 'bases;
            }
        }
        return false;
    }
    true
}

#[inline]
fn mul_mod_u64(a: u64, b: u64, m: u64) -> u64 {
    ((a as u128 * b as u128) % m as u128) as u64
}

fn pow_mod_u64(mut base: u64, mut exp: u64, m: u64) -> u64 {
    let mut acc = 1 % m;
    base %= m;
    while exp > 0 {
        if exp & 1 == 1 {
            acc = mul_mod_u64(acc, base, m);
        }
        base = mul_mod_u64(base, base, m);
        exp >>= 1;
    }
    acc
}

/// `base^exp mod P` by square-and-multiply.
pub fn pow_mod(base: i64, exp: u64, p: Prime) -> i64 {
    pow_mod_u64(p.reduce(base) as u64, exp, p.get() as u64) as i64
}

/// Multiplicative inverse of `a` modulo `p`, in `[1, P-1]`.
///
/// Extended Euclid; fails when `a ≡ 0 (mod P)`.
pub fn mod_inverse(a: i64, p: Prime) -> Result<i64, Error> {
    let a = p.reduce(a);
    if a == 0 {
        return Err(Error::NoInverse { a, p: p.get() });
    }
    let (mut r0, mut r1) = (p.get(), a);
    let (mut s0, mut s1) = (0i64, 1i64);
    while r1 != 0 {
        let q = r0 / r1;
        (r0, r1) = (r1, r0 - q * r1);
        (s0, s1) = (s1, s0 - q * s1);
    }
    debug_assert_eq!(r0, 1);
    Ok(p.reduce(s0))
}

/// Legendre symbol `(a / P)` via Euler's criterion.
pub fn legendre(a: i64, p: Prime) -> i8 {
    let a = p.reduce(a);
    if a == 0 {
        return 0;
    }
    match pow_mod(a, (p.get() as u64 - 1) / 2, p) {
        1 => 1,
        r => {
            debug_assert_eq!(r, p.get() - 1);
            -1
        }
    }
}

/// Maps `x` to its representative in `[-(P-1)/2, (P-1)/2]`.
pub fn centered(x: i64, p: Prime) -> CenteredResidue {
    let r = p.reduce(x);
    let value = if r > p.half() { r - p.get() } else { r };
    CenteredResidue { value, modulus: p }
}

/// Per-root lookup tables for one prime.
///
/// Entry `u - 1` holds the data for root `u`.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Tables {
    pub prime: Prime,
    pub inverses: Vec<i64>,
    pub legendre2u: Vec<i8>,
}

impl Tables {
    pub fn inverse(&self, u: i64) -> i64 {
        self.inverses[(self.prime.reduce(u) - 1) as usize]
    }

    pub fn legendre_2u(&self, u: i64) -> i8 {
        self.legendre2u[(self.prime.reduce(u) - 1) as usize]
    }
}

/// Builds inverse and `(2u / P)` tables for every root `u` in `[1, P-1]`.
///
/// Inverses come from the recurrence `inv(u) = -(P / u) * inv(P mod u)`,
/// so the whole table costs `O(P)`.
pub fn build_tables(p: Prime) -> Tables {
    let n = p.as_usize() - 1;
    let pv = p.get();
    let mut inverses = vec![0i64; n];
    inverses[0] = 1;
    for u in 2..pv {
        let q = pv / u;
        let r = pv % u;
        let inv_r = inverses[(r - 1) as usize];
        inverses[(u - 1) as usize] = p.reduce(-(q * inv_r % pv));
    }

    // (2u / P) = (2 / P)(u / P); fill (u / P) by marking the squares.
    let two = legendre(2, p);
    let mut legendre2u = vec![-two; n];
    for x in 1..=p.half() {
        let sq = x * x % pv;
        legendre2u[(sq - 1) as usize] = two;
    }
    Tables {
        prime: p,
        inverses,
        legendre2u,
    }
}
