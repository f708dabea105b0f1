//! The invariant suite behind `zcdft verify`.
//!
//! Each property family runs over a grid of `(P, u, Ts)` cases in parallel
//! and records the worst error seen. Results do not depend on scheduling
//! order.

use std::fmt;

use num_complex::Complex64;
use rayon::prelude::*;

use crate::gauss::{gauss_sum_closed, phase_constant};
use crate::numtheory::{build_tables, centered, is_prime, legendre, mod_inverse, Prime};
use crate::oracle::{shift_identity_dft, brute_gauss_sum, naive_dft, naive_idft};
use crate::pattern::{inverse_by_flip, zc_pattern};
use crate::sequences::{lmfh_symbol, zc_time, ComplexSequence, LmfhParams, ZcParams};
use crate::transform::{
    dft_ramp_shift, dft_reference, idft_ramp_shift, idft_reference, loop_frequency_shift, plan,
    Direction, OpCounters,
};

/// Deliberate defects, for checking that the suite can fail.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum Fault {
    /// Fast-path plans use `Fs + 1`.
    FreqShiftOffByOne,
}

#[derive(Debug, Clone)]
pub struct VerifyConfig {
    pub pmax: u64,
    pub include_839: bool,
    pub fault: Option<Fault>,
}

impl Default for VerifyConfig {
    fn default() -> Self {
        VerifyConfig {
            pmax: 199,
            include_839: false,
            fault: None,
        }
    }
}

#[derive(Debug, Clone)]
pub struct PropertyResult {
    pub name: &'static str,
    pub cases: usize,
    pub failures: usize,
    /// Worst absolute error for numeric properties, mismatch count for exact ones.
    pub max_error: f64,
    pub tolerance: &'static str,
}

impl PropertyResult {
    pub fn passed(&self) -> bool {
        self.failures == 0 && self.cases > 0
    }
}

impl fmt::Display for PropertyResult {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(
            f,
            "{} {:<36} cases={:<7} failures={:<5} max_err={:.3e} (tol {})",
            if self.passed() { "PASS" } else { "FAIL" },
            self.name,
            self.cases,
            self.failures,
            self.max_error,
            self.tolerance
        )
    }
}

#[derive(Debug, Clone, Default)]
pub struct Report {
    pub properties: Vec<PropertyResult>,
}

impl Report {
    pub fn passed(&self) -> bool {
        self.properties.iter().all(PropertyResult::passed)
    }
}

impl fmt::Display for Report {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        for p in &self.properties {
            writeln!(f, "{p}")?;
        }
        let failed = self.properties.iter().filter(|p| !p.passed()).count();
        write!(
            f,
            "{} properties, {} failed",
            self.properties.len(),
            failed
        )
    }
}

/// Accumulates `(error, tolerance)` pairs.
#[derive(Debug, Clone, Copy, Default)]
struct Tally {
    cases: usize,
    failures: usize,
    max_error: f64,
}

impl Tally {
    fn one(err: f64, tol: f64) -> Self {
        Tally {
            cases: 1,
            failures: usize::from(!(err <= tol)),
            max_error: if err.is_nan() { f64::INFINITY } else { err },
        }
    }

    fn exact(ok: bool) -> Self {
        Tally::one(if ok { 0.0 } else { 1.0 }, 0.0)
    }

    fn merge(self, o: Tally) -> Tally {
        Tally {
            cases: self.cases + o.cases,
            failures: self.failures + o.failures,
            max_error: self.max_error.max(o.max_error),
        }
    }

    fn finish(self, name: &'static str, tolerance: &'static str) -> PropertyResult {
        PropertyResult {
            name,
            cases: self.cases,
            failures: self.failures,
            max_error: self.max_error,
            tolerance,
        }
    }
}

fn family<T, F>(cases: &[T], check: F) -> Tally
where
    T: Sync,
    F: Fn(&T) -> Tally + Sync + Send,
{
    cases
        .par_iter()
        .map(check)
        .reduce(Tally::default, Tally::merge)
}

pub fn primes_upto(pmax: u64) -> Vec<Prime> {
    (3..=pmax)
        .filter(|&n| is_prime(n))
        .map(|n| Prime::new(n).expect("checked prime"))
        .collect()
}

/// 32 roots spread evenly over `[1, P-1]` (all of them when `P <= 33`).
pub fn sampled_roots(p: Prime) -> Vec<i64> {
    let n = p.get() - 1;
    if n <= 32 {
        return (1..=n).collect();
    }
    (0..32).map(|j| 1 + j * n / 32).collect()
}

fn sqrt_p(p: Prime) -> f64 {
    (p.get() as f64).sqrt()
}

/// Per-case errors of the three transform routes against each other.
#[derive(Debug, Clone, Copy)]
struct TransformCase {
    p: Prime,
    dft_vs_naive: f64,
    idft_vs_naive: f64,
    reference_vs_fast: f64,
    reference_vs_naive: f64,
    magnitude: f64,
    round_trip: Option<f64>,
}

fn transform_case(params: ZcParams, fault: Option<Fault>, with_round_trip: bool) -> TransformCase {
    let p = params.prime();
    let delta = match fault {
        Some(Fault::FreqShiftOffByOne) => 1,
        None => 0,
    };
    let z = zc_time(params);
    let fwd = plan(params, Direction::Forward).perturbed(delta).execute(None);
    let inv = plan(params, Direction::Inverse).perturbed(delta).execute(None);
    let naive_f = naive_dft(&z);
    let naive_i = naive_idft(&z);
    let ref_f = dft_reference(params);
    let ref_i = idft_reference(params);
    let root_p = sqrt_p(p);
    let magnitude = fwd
        .iter()
        .chain(inv.iter())
        .map(|v| (v.norm() - root_p).abs())
        .fold(0.0, f64::max);
    let round_trip = with_round_trip.then(|| {
        let back = naive_idft(&fwd);
        back.max_abs_diff(&z.scale(p.get() as f64))
    });
    TransformCase {
        p,
        dft_vs_naive: fwd.max_abs_diff(&naive_f),
        idft_vs_naive: inv.max_abs_diff(&naive_i),
        reference_vs_fast: ref_f.max_abs_diff(&fwd).max(ref_i.max_abs_diff(&inv)),
        reference_vs_naive: ref_f.max_abs_diff(&naive_f).max(ref_i.max_abs_diff(&naive_i)),
        magnitude,
        round_trip,
    }
}

/// Runs every property family.
pub fn run(config: &VerifyConfig) -> Report {
    let primes = primes_upto(config.pmax.max(3));
    let small: Vec<Prime> = primes.iter().copied().filter(|p| p.get() <= 61).collect();
    let roots: Vec<(Prime, i64)> = primes
        .iter()
        .flat_map(|&p| (1..p.get()).map(move |u| (p, u)))
        .collect();
    let small_roots: Vec<(Prime, i64)> = roots.iter().copied().filter(|(p, _)| p.get() <= 61).collect();
    let mut props = Vec::new();

    // numtheory
    props.push(
        family(&roots, |&(p, a)| {
            let x = mod_inverse(a, p).ok();
            Tally::exact(x.is_some_and(|x| (1..p.get()).contains(&x) && p.mul(a, x) == 1))
        })
        .finish("numtheory.inverse", "exact"),
    );
    props.push(
        family(&primes, |&p| {
            let squares: Vec<bool> = {
                let mut s = vec![false; p.as_usize()];
                for x in 1..p.get() {
                    s[(x * x % p.get()) as usize] = true;
                }
                s
            };
            let ok = (1..p.get()).all(|a| legendre(a, p) == if squares[a as usize] { 1 } else { -1 })
                && legendre(0, p) == 0
                && (1..p.get()).filter(|&a| legendre(a, p) == 1).count() as i64 == p.half();
            Tally::exact(ok)
        })
        .finish("numtheory.legendre_vs_enumeration", "exact"),
    );
    props.push(
        family(&primes, |&p| {
            let ok = (-3 * p.get()..3 * p.get()).all(|x| {
                let c = centered(x, p).value();
                c.abs() <= p.half() && (c - x).rem_euclid(p.get()) == 0
            });
            Tally::exact(ok)
        })
        .finish("numtheory.centered", "exact"),
    );
    props.push(
        family(&primes, |&p| {
            let t = build_tables(p);
            let ok = (1..p.get()).all(|u| {
                t.inverse(u) == mod_inverse(u, p).expect("unit") && t.legendre_2u(u) == legendre(2 * u, p)
            });
            Tally::exact(ok)
        })
        .finish("numtheory.lookup_tables", "exact"),
    );

    // sequences
    props.push(
        family(&roots, |&(p, u)| {
            let z = zc_time(ZcParams::with_prime(p, u, 0).expect("valid"));
            let minus = lmfh_symbol(LmfhParams::new(p, -u)).expect("nonzero slope");
            let plus = lmfh_symbol(LmfhParams::new(p, u)).expect("nonzero slope");
            Tally::one(minus.max_abs_diff(&z).max(plus.max_abs_diff(&z.conj())), 1e-12)
        })
        .finish("sequences.lmfh_zc_conjugacy", "1e-12"),
    );
    props.push(
        family(&roots, |&(p, u)| {
            let z = zc_time(ZcParams::with_prime(p, u, p.half()).expect("valid"));
            Tally::one(z.iter().map(|s| (s.norm() - 1.0).abs()).fold(0.0, f64::max), 1e-12)
        })
        .finish("sequences.constant_amplitude", "1e-12"),
    );
    props.push(
        family(&roots, |&(p, u)| {
            let z = zc_time(ZcParams::with_prime(p, u, 0).expect("valid"));
            let n = p.as_usize();
            let worst = (1..n)
                .map(|d| {
                    (0..n)
                        .map(|k| z[k] * z[(k + d) % n].conj())
                        .sum::<Complex64>()
                        .norm()
                })
                .fold(0.0, f64::max);
            Tally::one(worst, 1e-9 * p.get() as f64)
        })
        .finish("sequences.zero_autocorrelation", "1e-9*P"),
    );
    props.push(
        family(&roots, |&(p, u)| {
            let base = zc_time(ZcParams::with_prime(p, u, 0).expect("valid"));
            let ok = [1, 2, p.half(), p.get() - 1].into_iter().all(|ts| {
                zc_time(ZcParams::with_prime(p, u, ts).expect("valid")) == base.rotated_left(ts as usize)
            });
            Tally::exact(ok)
        })
        .finish("sequences.cyclic_shift_rotation", "bit-exact"),
    );

    // gauss
    props.push(
        family(&roots, |&(p, u)| {
            let closed = gauss_sum_closed(p, u).value;
            let brute = brute_gauss_sum(ZcParams::with_prime(p, u, 0).expect("valid"));
            Tally::one((closed - brute).norm(), 1e-9 * sqrt_p(p))
        })
        .finish("gauss.closed_vs_brute", "1e-9*sqrt(P)"),
    );
    props.push(
        family(&roots, |&(p, u)| {
            let g = gauss_sum_closed(p, u);
            let err = (g.value - phase_constant(p, g.qpo_times4))
                .norm()
                .max((g.value.norm() - sqrt_p(p)).abs());
            let coef = 3 - 2 * legendre(2 * u, p) as i64 - p.get() % 4;
            let coef_ok = if p.get() % 4 == 1 {
                coef == 0 || coef == 4
            } else {
                coef == -2 || coef == 2
            };
            if coef_ok {
                Tally::one(err, 1e-12)
            } else {
                Tally::exact(false)
            }
        })
        .finish("gauss.quasi_phase_offset", "1e-12"),
    );

    // transform
    let mut grid: Vec<(ZcParams, bool)> = Vec::new();
    for &(p, u) in &roots {
        let rt = matches!(p.get(), 13 | 139) && sampled_roots(p).contains(&u);
        for ts in [0, 1, p.half()] {
            grid.push((ZcParams::with_prime(p, u, ts).expect("valid"), rt && ts == 0));
        }
    }
    if config.include_839 {
        let p = Prime::new(839).expect("prime");
        for u in sampled_roots(p) {
            for ts in [0, 1, p.half()] {
                grid.push((ZcParams::with_prime(p, u, ts).expect("valid"), ts == 0));
            }
        }
    }
    let cases: Vec<TransformCase> = grid
        .par_iter()
        .map(|&(params, rt)| transform_case(params, config.fault, rt))
        .collect();
    let agg = |f: &dyn Fn(&TransformCase) -> Option<Tally>| {
        cases.iter().filter_map(f).fold(Tally::default(), Tally::merge)
    };
    props.push(
        agg(&|c| Some(Tally::one(c.dft_vs_naive, 1e-9 * sqrt_p(c.p))))
            .finish("transform.fast_dft_vs_naive", "1e-9*sqrt(P)"),
    );
    props.push(
        agg(&|c| Some(Tally::one(c.idft_vs_naive, 1e-9 * sqrt_p(c.p))))
            .finish("transform.fast_idft_vs_naive", "1e-9*sqrt(P)"),
    );
    props.push(
        agg(&|c| Some(Tally::one(c.reference_vs_fast, 1e-10 * sqrt_p(c.p))))
            .finish("transform.reference_vs_fast", "1e-10*sqrt(P)"),
    );
    props.push(
        agg(&|c| Some(Tally::one(c.reference_vs_naive, 1e-9 * sqrt_p(c.p))))
            .finish("transform.reference_vs_naive", "1e-9*sqrt(P)"),
    );
    props.push(
        agg(&|c| Some(Tally::one(c.magnitude, 1e-9))).finish("transform.constant_magnitude", "1e-9"),
    );
    props.push(
        agg(&|c| c.round_trip.map(|e| Tally::one(e, 1e-8 * c.p.get() as f64)))
            .finish("transform.round_trip", "1e-8*P"),
    );
    props.push(
        family(&roots, |&(p, u)| {
            let params = ZcParams::with_prime(p, u, 0).expect("valid");
            let f = plan(params, Direction::Forward);
            let i = plan(params, Direction::Inverse);
            let iu = f.inverse_root();
            let ok = p.reduce(i.freq_shift() - f.freq_shift()) == 1
                && p.reduce(dft_ramp_shift(p, iu, 0) - idft_ramp_shift(p, iu, 0)) == 1
                && f.const_factor() == i.const_factor()
                && f.qpo_times4() == i.qpo_times4();
            Tally::exact(ok)
        })
        .finish("transform.dft_idft_shift_relation", "exact"),
    );
    let mut count_primes: Vec<Prime> = primes.clone();
    if config.include_839 {
        count_primes.push(Prime::new(839).expect("prime"));
    }
    props.push(
        family(&count_primes, |&p| {
            let mut ops = OpCounters::default();
            plan(ZcParams::with_prime(p, 1, 0).expect("valid"), Direction::Forward).execute(Some(&mut ops));
            let n = p.get() as u64 - 1;
            Tally::exact(
                ops.additions == 2 * n && ops.modulo_reductions == 2 * n && ops.exp_evaluations == n + 1,
            )
        })
        .finish("transform.operation_counts", "exact"),
    );

    // oracle
    let shift_grid: Vec<ZcParams> = small_roots
        .iter()
        .flat_map(|&(p, u)| {
            let mut shifts = vec![0, 1, 2, p.half()];
            shifts.dedup();
            shifts
                .into_iter()
                .filter(move |&ts| ts < p.get())
                .map(move |ts| ZcParams::with_prime(p, u, ts).expect("valid"))
        })
        .collect();
    props.push(
        family(&shift_grid, |&params| {
            let p = params.prime();
            let identity = shift_identity_dft(params);
            let naive = naive_dft(&zc_time(params));
            let delta = match config.fault {
                Some(Fault::FreqShiftOffByOne) => 1,
                None => 0,
            };
            let fast = plan(params, Direction::Forward).perturbed(delta).execute(None);
            Tally::one(identity.max_abs_diff(&naive).max(identity.max_abs_diff(&fast)), 1e-9 * sqrt_p(p))
        })
        .finish("oracle.shift_identity_dft", "1e-9*sqrt(P)"),
    );
    props.push(
        family(&small, |&p| {
            // Deterministic unit-norm probes.
            let n = p.as_usize();
            let probe = |seed: f64| -> ComplexSequence {
                let v: Vec<Complex64> = (0..n)
                    .map(|j| Complex64::new((seed * (j as f64 + 1.0)).sin(), (seed * 0.7 * (j as f64 + 2.0)).cos()))
                    .collect();
                let norm = v.iter().map(|z| z.norm_sqr()).sum::<f64>().sqrt();
                v.into_iter().map(|z| z / norm).collect()
            };
            let x = probe(1.3);
            let y = probe(2.9);
            let lhs: Complex64 = naive_dft(&x).iter().zip(y.iter()).map(|(a, b)| a * b.conj()).sum();
            let rhs: Complex64 = x.iter().zip(naive_idft(&y).iter()).map(|(a, b)| a * b.conj()).sum();
            Tally::one((lhs - rhs).norm(), 1e-9 * p.get() as f64)
        })
        .finish("oracle.adjoint", "1e-9*P"),
    );

    // pattern
    props.push(
        family(&small_roots, |&(p, u)| {
            let pat = zc_pattern(p, u, 0).expect("valid");
            let ok = pat.flip_dft().flip_dft() == pat
                && pat.flip_idft().flip_idft() == pat
                && pat.flip_conjugate().flip_conjugate() == pat
                && pat.flip_dft().orientation() != pat.orientation()
                && pat.flip_idft() == pat.flip_dft().negate_axes();
            Tally::exact(ok)
        })
        .finish("pattern.flip_involutions", "exact"),
    );
    props.push(
        family(&small_roots, |&(p, u)| {
            Tally::exact(inverse_by_flip(p, u).ok() == mod_inverse(u, p).ok())
        })
        .finish("pattern.inverse_by_flip", "exact"),
    );
    props.push(
        family(&small_roots, |&(p, u)| {
            let base = zc_pattern(p, u, 0).expect("valid").flip_dft();
            let ok = (0..p.get()).all(|ts| {
                let shifted = zc_pattern(p, u, ts).expect("valid").flip_dft();
                (0..p.get()).all(|t| shifted.frequency_at(t) == centered(base.frequency_at(t) - ts, p).value())
            });
            Tally::exact(ok)
        })
        .finish("pattern.time_shift_to_frequency_shift", "exact"),
    );
    props.push(
        family(&small_roots, |&(p, u)| {
            let iu = mod_inverse(u, p).expect("unit");
            let ok = [0, 1, p.half()].into_iter().all(|ts| {
                let delayed = zc_pattern(p, u, -ts).expect("valid");
                loop_frequency_shift(p, iu, ts, Direction::Forward) == p.reduce(-delayed.flip_dft().first_frequency())
                    && loop_frequency_shift(p, iu, ts, Direction::Inverse)
                        == p.reduce(-delayed.flip_idft().first_frequency())
            });
            Tally::exact(ok)
        })
        .finish("pattern.shift_matches_plan", "exact"),
    );

    Report { properties: props }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn small_run_passes() {
        let report = run(&VerifyConfig {
            pmax: 31,
            ..Default::default()
        });
        assert!(report.passed(), "{report}");
        assert!(report.properties.len() >= 12);
    }

    #[test]
    fn injected_fault_is_caught() {
        let report = run(&VerifyConfig {
            pmax: 13,
            fault: Some(Fault::FreqShiftOffByOne),
            ..Default::default()
        });
        assert!(!report.passed());
        let failed: Vec<_> = report.properties.iter().filter(|p| !p.passed()).map(|p| p.name).collect();
        assert!(failed.contains(&"transform.fast_dft_vs_naive"), "{failed:?}");
    }

    #[test]
    fn sampled_roots_are_distinct_and_in_range() {
        let p = Prime::new(839).unwrap();
        let r = sampled_roots(p);
        assert_eq!(r.len(), 32);
        assert!(r.windows(2).all(|w| w[0] < w[1]));
        assert!(r.iter().all(|&u| (1..839).contains(&u)));
        assert_eq!(sampled_roots(Prime::new(13).unwrap()).len(), 12);
    }
}
