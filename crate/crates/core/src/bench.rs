//! Wall-clock comparison of the fast path, the closed-form reference and the
//! naive oracle, plus the fast path's operation counts.

use std::hint::black_box;
use std::time::Instant;

use serde::Serialize;

use crate::oracle::naive_dft;
use crate::sequences::{zc_time, ZcParams};
use crate::transform::{dft_reference, plan, Direction, OpCounters};

#[derive(Debug, Clone, PartialEq, Serialize)]
pub struct BenchReport {
    pub p: u64,
    pub u: i64,
    pub reps: usize,
    pub fast_ns: u64,
    pub reference_ns: u64,
    pub naive_ns: u64,
    pub additions: u64,
    pub modulo_reductions: u64,
    pub exp_evaluations: u64,
    /// `naive_ns / fast_ns`.
    pub naive_over_fast: f64,
}

fn median_ns(reps: usize, mut f: impl FnMut()) -> u64 {
    let mut samples: Vec<u64> = (0..reps.max(1))
        .map(|_| {
            let start = Instant::now();
            f();
            start.elapsed().as_nanos() as u64
        })
        .collect();
    samples.sort_unstable();
    samples[samples.len() / 2].max(1)
}

/// Times each route `reps` times and reports medians.
///
/// The fast path is timed on a prebuilt plan: `u⁻¹`, the Legendre symbol,
/// the Gauss-sum constant and the twiddle table are one-off setup.
pub fn run(params: ZcParams, reps: usize) -> BenchReport {
    let fast_plan = plan(params, Direction::Forward);
    let mut ops = OpCounters::default();
    fast_plan.execute(Some(&mut ops));

    let fast_ns = median_ns(reps, || {
        black_box(fast_plan.execute(None));
    });
    let reference_ns = median_ns(reps, || {
        black_box(dft_reference(black_box(params)));
    });
    let naive_ns = median_ns(reps, || {
        black_box(naive_dft(&zc_time(black_box(params))));
    });
    BenchReport {
        p: params.p() as u64,
        u: params.u(),
        reps,
        fast_ns,
        reference_ns,
        naive_ns,
        additions: ops.additions,
        modulo_reductions: ops.modulo_reductions,
        exp_evaluations: ops.exp_evaluations,
        naive_over_fast: naive_ns as f64 / fast_ns as f64,
    }
}
