//! lmFH patterns: the `(t, f)` point sets behind the time-frequency pictures
//! of a ZC sequence and its spectra.
//!
//! Time indices run over `[0, P)` and frequencies over the centered range
//! `[-c, c]` with `c = (P-1)/2`. The two axes are the same length, so the
//! transposition that maps a time-domain pattern to its DFT pattern is a
//! reflection that swaps them with an offset of `c`:
//!
//! * DFT flip: `(t, f) -> (f + c, t - c)`
//! * IDFT flip: `(t, f) -> (c - f, c - t)`
//! * conjugation flip: `(t, f) -> (-t mod P, f)`
//!
//! Each flip has determinant `-1` and toggles [`Orientation`]. Orientation is
//! bookkeeping only; it never moves a point.

use std::fmt::{self, Write as _};

use crate::numtheory::{centered, Prime};
use crate::Error;

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub enum Orientation {
    Obverse,
    Reverse,
}

impl Orientation {
    pub fn toggled(self) -> Self {
        match self {
            Orientation::Obverse => Orientation::Reverse,
            Orientation::Reverse => Orientation::Obverse,
        }
    }

    pub fn as_str(self) -> &'static str {
        match self {
            Orientation::Obverse => "obverse",
            Orientation::Reverse => "reverse",
        }
    }
}

impl fmt::Display for Orientation {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.as_str())
    }
}

/// One of the three pattern reflections.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub enum Flip {
    Dft,
    Idft,
    Conj,
}

/// `P` points, one per time index, with pairwise distinct frequencies.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct LmfhPattern {
    prime: Prime,
    /// `freqs[t]` is the centered frequency at time `t`.
    freqs: Vec<i64>,
    orientation: Orientation,
}

impl LmfhPattern {
    /// Builds a pattern from arbitrary points, checking the bijection
    /// invariant. Points may come in any order.
    pub fn from_points(
        prime: Prime,
        points: impl IntoIterator<Item = (i64, i64)>,
        orientation: Orientation,
    ) -> Result<Self, Error> {
        let n = prime.as_usize();
        let half = prime.half();
        let mut freqs = vec![None; n];
        let mut seen = vec![false; n];
        let mut count = 0usize;
        for (t, f) in points {
            count += 1;
            if !(0..prime.get()).contains(&t) || !(-half..=half).contains(&f) {
                return Err(Error::Parse {
                    line: count,
                    msg: format!("point ({t}, {f}) outside the grid for P = {prime}"),
                });
            }
            let slot = &mut freqs[t as usize];
            let used = &mut seen[(f + half) as usize];
            if slot.is_some() || *used {
                return Err(Error::Parse {
                    line: count,
                    msg: format!("point ({t}, {f}) repeats a time or frequency"),
                });
            }
            *slot = Some(f);
            *used = true;
        }
        if count != n {
            return Err(Error::LengthMismatch {
                expected: n,
                got: count,
            });
        }
        Ok(LmfhPattern {
            prime,
            freqs: freqs.into_iter().map(|f| f.expect("all slots filled")).collect(),
            orientation,
        })
    }

    fn remap(&self, map: impl Fn(i64, i64) -> (i64, i64)) -> Self {
        let mut freqs = vec![0i64; self.freqs.len()];
        for (t, &f) in self.freqs.iter().enumerate() {
            let (nt, nf) = map(t as i64, f);
            freqs[nt as usize] = nf;
        }
        LmfhPattern {
            prime: self.prime,
            freqs,
            orientation: self.orientation.toggled(),
        }
    }

    pub fn prime(&self) -> Prime {
        self.prime
    }

    pub fn orientation(&self) -> Orientation {
        self.orientation
    }

    /// Points `(t, f)` in increasing `t`.
    pub fn points(&self) -> impl Iterator<Item = (i64, i64)> + '_ {
        self.freqs.iter().enumerate().map(|(t, &f)| (t as i64, f))
    }

    pub fn frequency_at(&self, t: i64) -> i64 {
        self.freqs[self.prime.reduce(t) as usize]
    }

    /// The frequency sitting on the frequency axis (`t = 0`).
    pub fn first_frequency(&self) -> i64 {
        self.freqs[0]
    }

    pub fn flip(&self, which: Flip) -> Self {
        match which {
            Flip::Dft => self.flip_dft(),
            Flip::Idft => self.flip_idft(),
            Flip::Conj => self.flip_conjugate(),
        }
    }

    /// Reflection across `f = t`.
    pub fn flip_dft(&self) -> Self {
        let c = self.prime.half();
        self.remap(|t, f| (f + c, t - c))
    }

    /// Reflection across `f = -t`.
    pub fn flip_idft(&self) -> Self {
        let c = self.prime.half();
        self.remap(|t, f| (c - f, c - t))
    }

    /// Reflection across the frequency axis; the `t = 0` point stays put.
    pub fn flip_conjugate(&self) -> Self {
        let p = self.prime;
        self.remap(|t, f| (p.reduce(-t), f))
    }

    /// Point reflection through the grid centre: `(t, f) -> (P-1-t, -f)`.
    /// Orientation is unchanged (determinant `+1`).
    pub fn negate_axes(&self) -> Self {
        let last = self.prime.get() - 1;
        let mut out = self.remap(|t, f| (last - t, -f));
        out.orientation = self.orientation;
        out
    }

    /// Slope `s` with `f(t) ≡ f(0) + s·t (mod P)` for every point, in `[0, P)`.
    pub fn read_slope(&self) -> Result<i64, Error> {
        let p = self.prime;
        // t0 = 0 and t1 = 1, so (t1 - t0)⁻¹ = 1.
        let f0 = self.freqs[0];
        let s = p.reduce(self.freqs[1] - f0);
        for (t, &f) in self.freqs.iter().enumerate() {
            if p.reduce(f - f0 - s * t as i64) != 0 {
                return Err(Error::NonAffinePattern { t: t as i64 });
            }
        }
        Ok(s)
    }

    /// CSV with header `t,f,orientation`, one row per point, sorted by `t`.
    pub fn to_csv(&self) -> String {
        let mut out = String::with_capacity(16 * self.freqs.len() + 20);
        out.push_str("t,f,orientation\n");
        for (t, f) in self.points() {
            let _ = writeln!(out, "{t},{f},{}", self.orientation);
        }
        out
    }
}

/// Pattern of `f(t) = centered(s·(t + Ts) + Fs)`, obverse.
///
/// `Fs` is a plain frequency offset applied at every `t`; the phase-level
/// convention that drops it at `t = 0` lives in
/// [`lmfh_symbol`](crate::sequences::lmfh_symbol).
pub fn make_pattern(p: Prime, slope: i64, fs: i64, ts: i64) -> Result<LmfhPattern, Error> {
    if p.reduce(slope) == 0 {
        return Err(Error::ZeroSlope { s: slope, p: p.get() });
    }
    let freqs = (0..p.get())
        .map(|t| centered(p.mul(slope, t + ts) + fs, p).value())
        .collect();
    Ok(LmfhPattern {
        prime: p,
        freqs,
        orientation: Orientation::Obverse,
    })
}

/// The time-domain pattern of the ZC sequence with root `u` (slope `-u`).
pub fn zc_pattern(p: Prime, u: i64, ts: i64) -> Result<LmfhPattern, Error> {
    make_pattern(p, -u, 0, ts)
}

/// `u⁻¹` read off the DFT-flipped pattern: the slope of
/// `flip_dft(pattern(-u))` is `-u⁻¹`.
pub fn inverse_by_flip(p: Prime, u: i64) -> Result<i64, Error> {
    let s = zc_pattern(p, u, 0)?.flip_dft().read_slope()?;
    Ok(p.reduce(-s))
}
