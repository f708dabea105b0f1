//! Time-domain Zadoff-Chu sequences and lmFH symbols.
//!
//! Two independent routes produce the same waveform: [`zc_time`] evaluates the
//! quadratic phase directly, [`lmfh_symbol`] accumulates integer frequency
//! points. A ZC sequence with root `u` is the lmFH symbol with slope `-u`.

use std::f64::consts::PI;
use std::ops::{Deref, DerefMut};

use num_complex::Complex64;

use crate::numtheory::{centered, CenteredResidue, Prime};
use crate::Error;

/// A prime-length ZC instance: length `P`, root `u`, cyclic shift `Ts`.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub struct ZcParams {
    prime: Prime,
    root: i64,
    shift: i64,
}

impl ZcParams {
    pub fn new(p: u64, u: i64, ts: i64) -> Result<Self, Error> {
        Self::with_prime(Prime::new(p)?, u, ts)
    }

    pub fn with_prime(prime: Prime, u: i64, ts: i64) -> Result<Self, Error> {
        let p = prime.get();
        if !(1..p).contains(&u) {
            return Err(Error::RootOutOfRange { u, p });
        }
        if !(0..p).contains(&ts) {
            return Err(Error::ShiftOutOfRange { ts, p });
        }
        Ok(ZcParams {
            prime,
            root: u,
            shift: ts,
        })
    }

    #[inline]
    pub fn prime(&self) -> Prime {
        self.prime
    }

    #[inline]
    pub fn p(&self) -> i64 {
        self.prime.get()
    }

    #[inline]
    pub fn u(&self) -> i64 {
        self.root
    }

    #[inline]
    pub fn ts(&self) -> i64 {
        self.shift
    }

    /// Same root and length, different cyclic shift.
    pub fn with_shift(&self, ts: i64) -> Result<Self, Error> {
        Self::with_prime(self.prime, self.root, ts)
    }
}

/// Parameters of an lmFH symbol: slope `s`, frequency shift `Fs` (in bins)
/// and phase offset `Po` (in radians).
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct LmfhParams {
    pub prime: Prime,
    pub slope: i64,
    pub freq_shift: i64,
    pub phase_offset: f64,
}

impl LmfhParams {
    pub fn new(prime: Prime, slope: i64) -> Self {
        LmfhParams {
            prime,
            slope,
            freq_shift: 0,
            phase_offset: 0.0,
        }
    }
}

/// A length-`P` block of complex samples.
#[derive(Debug, Clone, PartialEq, Default)]
pub struct ComplexSequence(Vec<Complex64>);

impl ComplexSequence {
    pub fn new(samples: Vec<Complex64>) -> Self {
        ComplexSequence(samples)
    }

    pub fn into_vec(self) -> Vec<Complex64> {
        self.0
    }

    pub fn conj(&self) -> Self {
        self.0.iter().map(|z| z.conj()).collect()
    }

    pub fn scale(&self, k: f64) -> Self {
        self.0.iter().map(|z| z * k).collect()
    }

    /// `out[k] = self[(k + n) mod len]`.
    pub fn rotated_left(&self, n: usize) -> Self {
        let mut v = self.0.clone();
        if !v.is_empty() {
            v.rotate_left(n % self.0.len());
        }
        ComplexSequence(v)
    }

    /// Largest elementwise distance `max_k |self[k] - other[k]|`.
    ///
    /// Infinite when the lengths differ.
    pub fn max_abs_diff(&self, other: &ComplexSequence) -> f64 {
        if self.len() != other.len() {
            return f64::INFINITY;
        }
        self.iter()
            .zip(other.iter())
            .map(|(a, b)| (a - b).norm())
            .fold(0.0, f64::max)
    }
}

impl Deref for ComplexSequence {
    type Target = [Complex64];
    fn deref(&self) -> &[Complex64] {
        &self.0
    }
}

impl DerefMut for ComplexSequence {
    fn deref_mut(&mut self) -> &mut [Complex64] {
        &mut self.0
    }
}

impl From<Vec<Complex64>> for ComplexSequence {
    fn from(v: Vec<Complex64>) -> Self {
        ComplexSequence(v)
    }
}

impl FromIterator<Complex64> for ComplexSequence {
    fn from_iter<I: IntoIterator<Item = Complex64>>(iter: I) -> Self {
        ComplexSequence(iter.into_iter().collect())
    }
}

/// `exp(i·2π·num/den)` with `num` reduced to the symmetric range first.
#[inline]
pub(crate) fn unit_phasor(num: i64, den: i64) -> Complex64 {
    let mut r = num.rem_euclid(den);
    if 2 * r > den {
        r -= den;
    }
    Complex64::from_polar(1.0, 2.0 * PI * r as f64 / den as f64)
}

/// `Z_u(m) = exp(-iπ·u·m(m+1)/P)` for any integer index `m`.
///
/// The numerator `u·m(m+1)` is reduced modulo `2P` in exact arithmetic, so
/// indices congruent mod `P` give bit-identical samples.
pub fn zc_sample(p: Prime, u: i64, m: i64) -> Complex64 {
    let pv = p.get();
    let two_p = 2 * pv as i128;
    let m = p.reduce(m) as i128;
    let tri = (m * (m + 1)).rem_euclid(two_p);
    let num = (tri * p.reduce(u) as i128).rem_euclid(two_p) as i64;
    // exp(-iπ·num/P) = exp(i·2π·(-num)/(2P))
    unit_phasor(-num, 2 * pv)
}

/// `Z(k) = exp(-iπ·u·(k+Ts)(k+Ts+1)/P)` for `k = 0..P-1`.
pub fn zc_time(params: ZcParams) -> ComplexSequence {
    let p = params.prime();
    (0..p.get())
        .map(|k| zc_sample(p, params.u(), k + params.ts()))
        .collect()
}

/// lmFH symbol by cumulative frequency-point summation.
///
/// `L(k) = exp(i(2π·Σ_{t=0}^{k}(s·t + Fs')/P + Po))` where `Fs' = 0` at
/// `t = 0` and `Fs` afterwards. The running sum is kept as an integer mod `P`.
pub fn lmfh_symbol(params: LmfhParams) -> Result<ComplexSequence, Error> {
    let p = params.prime;
    let pv = p.get();
    let s = p.reduce(params.slope);
    if s == 0 {
        return Err(Error::ZeroSlope {
            s: params.slope,
            p: pv,
        });
    }
    let fs = p.reduce(params.freq_shift);
    let offset = Complex64::from_polar(1.0, params.phase_offset);
    let mut out = Vec::with_capacity(p.as_usize());
    let mut phase = 0i64;
    let mut freq = 0i64;
    out.push(offset);
    for _ in 1..pv {
        freq = (freq + s) % pv;
        phase = (phase + freq + fs) % pv;
        out.push(unit_phasor(phase, pv) * offset);
    }
    Ok(ComplexSequence(out))
}

/// Instantaneous frequency `f(t) = centered(-u·(t+Ts))` for `t = 0..P-1`.
pub fn frequency_track(params: ZcParams) -> Vec<CenteredResidue> {
    let p = params.prime();
    (0..p.get())
        .map(|t| centered(-p.mul(params.u(), t + params.ts()), p))
        .collect()
}
