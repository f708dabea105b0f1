//! `O(P)` DFT and IDFT of prime-length ZC sequences.
//!
//! The spectrum of a ZC sequence is itself an lmFH symbol with slope `-u⁻¹`
//! (conjugated), a frequency shift `Fs` and a constant `√P·exp(i2π·QP_o/P)`:
//!
//! ```text
//! F(k) = √P · exp(-i2π·(Σ_{t=0}^{k}(-u⁻¹·t + Fs') - QP_o) / P)
//! ```
//!
//! [`TransformPlan::execute`] walks that sum with two integer accumulators
//! modulo `P` and one table lookup per output sample. The `QP_o` term and
//! `√P` are folded into a single complex constant, which keeps the loop free
//! of the quarter-integer part of `QP_o`.
//!
//! Conventions: forward kernel `exp(-i2πnk/P)`, inverse kernel
//! `exp(+i2πnk/P)`, both unnormalized.

use num_complex::Complex64;

use crate::gauss::{gauss_sum_closed, phase_constant};
use crate::numtheory::{legendre, mod_inverse, Prime, Tables};
use crate::sequences::{unit_phasor, zc_sample, ComplexSequence, ZcParams};

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub enum Direction {
    Forward,
    Inverse,
}

/// Tallies of the integer and table work done by [`TransformPlan::execute`].
#[derive(Debug, Clone, Copy, Default, PartialEq, Eq)]
pub struct OpCounters {
    pub additions: u64,
    pub modulo_reductions: u64,
    pub exp_evaluations: u64,
}

/// Everything the accumulation loop needs for one `(P, u, Ts, direction)`.
///
/// Immutable once built; share it freely between threads.
#[derive(Debug, Clone, PartialEq)]
pub struct TransformPlan {
    params: ZcParams,
    direction: Direction,
    iu: i64,
    ell: i8,
    fs: i64,
    qpo_times4: i128,
    const_factor: Complex64,
    twiddles: Vec<Complex64>,
}

/// Builds a plan, computing `u⁻¹` and `(2u/P)` directly.
pub fn plan(params: ZcParams, direction: Direction) -> TransformPlan {
    let p = params.prime();
    let iu = mod_inverse(params.u(), p).expect("1 <= u < P is a unit");
    let ell = legendre(2 * params.u(), p);
    TransformPlan::build(params, direction, iu, ell)
}

/// Builds a plan taking `u⁻¹` and `(2u/P)` from precomputed tables.
///
/// # Panics
///
/// If `tables` were built for a different prime.
pub fn plan_with_tables(params: ZcParams, direction: Direction, tables: &Tables) -> TransformPlan {
    assert_eq!(tables.prime, params.prime(), "tables built for another prime");
    let u = params.u();
    TransformPlan::build(params, direction, tables.inverse(u), tables.legendre_2u(u))
}

/// Frequency shift of the accumulation loop.
///
/// Forward: `(P+1)/2·(u⁻¹ - 1) - Ts`. Inverse: `(P+1)/2·(u⁻¹ + 1) + Ts`.
pub fn loop_frequency_shift(p: Prime, iu: i64, ts: i64, direction: Direction) -> i64 {
    match direction {
        Direction::Forward => p.reduce(p.mul(p.inv2(), iu - 1) - ts),
        Direction::Inverse => p.reduce(p.mul(p.inv2(), iu + 1) + ts),
    }
}

/// Linear-phase shift of the DFT written as `Z_{-u⁻¹}(k)·exp(i2π·s·k/P)·F(0)`:
/// `s = (P+1)/2·(1 - u⁻¹) + Ts`.
pub fn dft_ramp_shift(p: Prime, iu: i64, ts: i64) -> i64 {
    p.reduce(p.mul(p.inv2(), 1 - iu) + ts)
}

/// Linear-phase shift of the IDFT written as `conj(Z_{u⁻¹}(k))·exp(i2π·s·k/P)·F(0)`:
/// `s = (P-1)/2·(u⁻¹ + 1) - Ts`.
pub fn idft_ramp_shift(p: Prime, iu: i64, ts: i64) -> i64 {
    p.reduce(p.mul(p.half(), iu + 1) - ts)
}

impl TransformPlan {
    fn build(params: ZcParams, direction: Direction, iu: i64, ell: i8) -> Self {
        let p = params.prime();
        let pv = p.get();
        let gauss = gauss_sum_closed(p, params.u());
        let twiddles = (0..pv).map(|j| unit_phasor(-j, pv)).collect();
        TransformPlan {
            params,
            direction,
            iu,
            ell,
            fs: loop_frequency_shift(p, iu, params.ts(), direction),
            qpo_times4: gauss.qpo_times4,
            const_factor: phase_constant(p, gauss.qpo_times4),
            twiddles,
        }
    }

    pub fn params(&self) -> ZcParams {
        self.params
    }

    pub fn direction(&self) -> Direction {
        self.direction
    }

    /// `u⁻¹ mod P`.
    pub fn inverse_root(&self) -> i64 {
        self.iu
    }

    /// `(2u / P)`.
    pub fn legendre_2u(&self) -> i8 {
        self.ell
    }

    /// Loop frequency shift `Fs` in `[0, P)`.
    pub fn freq_shift(&self) -> i64 {
        self.fs
    }

    pub fn qpo_times4(&self) -> i128 {
        self.qpo_times4
    }

    /// `√P · exp(i2π·QP_o/P)`.
    pub fn const_factor(&self) -> Complex64 {
        self.const_factor
    }

    /// `twiddles[j] = exp(-i2πj/P)`.
    pub fn twiddles(&self) -> &[Complex64] {
        &self.twiddles
    }

    /// Copy with `Fs` moved by `fs_delta`; used to check that verification
    /// notices a wrong shift.
    pub(crate) fn perturbed(&self, fs_delta: i64) -> Self {
        let mut out = self.clone();
        out.fs = self.params.prime().reduce(self.fs + fs_delta);
        out
    }

    /// Runs the accumulation loop.
    pub fn execute(&self, counters: Option<&mut OpCounters>) -> ComplexSequence {
        let mut out = vec![Complex64::new(0.0, 0.0); self.twiddles.len()];
        self.execute_into(&mut out, counters);
        out.into()
    }

    /// As [`execute`](Self::execute), writing into `out` (length `P`).
    pub fn execute_into(&self, out: &mut [Complex64], counters: Option<&mut OpCounters>) {
        assert_eq!(out.len(), self.twiddles.len(), "output length must equal P");
        match counters {
            Some(ops) => self.accumulate(out, ops),
            None => self.accumulate(out, &mut NoCount),
        }
    }

    fn accumulate<C: Count>(&self, out: &mut [Complex64], ops: &mut C) {
        let pv = self.params.p();
        let c = self.const_factor;
        let mut phase = 0i64;
        let mut freq = self.fs;
        let last = out.len() - 1;
        for (k, slot) in out.iter_mut().enumerate() {
            *slot = c * self.twiddles[phase as usize];
            ops.exp();
            if k == last {
                break;
            }
            freq -= self.iu;
            ops.add();
            if freq < 0 {
                freq += pv;
            }
            ops.modulo();
            phase += freq;
            ops.add();
            if phase >= pv {
                phase -= pv;
            }
            ops.modulo();
        }
    }
}

trait Count {
    fn add(&mut self);
    fn modulo(&mut self);
    fn exp(&mut self);
}

struct NoCount;

impl Count for NoCount {
    #[inline(always)]
    fn add(&mut self) {}
    #[inline(always)]
    fn modulo(&mut self) {}
    #[inline(always)]
    fn exp(&mut self) {}
}

impl Count for OpCounters {
    #[inline(always)]
    fn add(&mut self) {
        self.additions += 1;
    }
    #[inline(always)]
    fn modulo(&mut self) {
        self.modulo_reductions += 1;
    }
    #[inline(always)]
    fn exp(&mut self) {
        self.exp_evaluations += 1;
    }
}

/// DFT as `Z_{-u⁻¹}(k) · exp(i2π·((P+1)/2·(1-u⁻¹) + Ts)·k/P) · F_u(0)`,
/// evaluated sample by sample.
pub fn dft_reference(params: ZcParams) -> ComplexSequence {
    let p = params.prime();
    let iu = mod_inverse(params.u(), p).expect("1 <= u < P is a unit");
    let shift = dft_ramp_shift(p, iu, params.ts());
    let f0 = gauss_sum_closed(p, params.u()).value;
    (0..p.get())
        .map(|k| zc_sample(p, -iu, k) * unit_phasor(p.mul(shift, k), p.get()) * f0)
        .collect()
}

/// Unnormalized IDFT as
/// `conj(Z_{u⁻¹}(k)) · exp(i2π·((P-1)/2·(u⁻¹+1) - Ts)·k/P) · F_u(0)`.
pub fn idft_reference(params: ZcParams) -> ComplexSequence {
    let p = params.prime();
    let iu = mod_inverse(params.u(), p).expect("1 <= u < P is a unit");
    let shift = idft_ramp_shift(p, iu, params.ts());
    let f0 = gauss_sum_closed(p, params.u()).value;
    (0..p.get())
        .map(|k| zc_sample(p, iu, k).conj() * unit_phasor(p.mul(shift, k), p.get()) * f0)
        .collect()
}
