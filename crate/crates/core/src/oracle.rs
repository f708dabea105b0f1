//! Brute-force ground truth for the fast paths.
//!
//! Nothing here is fast. The naive transforms are `O(N²)` with compensated
//! summation so that their own rounding error stays below the tolerances the
//! fast paths are held to.

use std::f64::consts::PI;

use num_complex::Complex64;

use crate::numtheory::mod_inverse;
use crate::sequences::{zc_sample, zc_time, ComplexSequence, ZcParams};

/// Kahan summation over complex values, compensating each component.
#[derive(Debug, Default, Clone, Copy)]
pub struct KahanSum {
    sum: Complex64,
    carry: Complex64,
}

impl KahanSum {
    #[inline]
    pub fn add(&mut self, x: Complex64) {
        let y_re = x.re - self.carry.re;
        let t_re = self.sum.re + y_re;
        self.carry.re = (t_re - self.sum.re) - y_re;
        self.sum.re = t_re;

        let y_im = x.im - self.carry.im;
        let t_im = self.sum.im + y_im;
        self.carry.im = (t_im - self.sum.im) - y_im;
        self.sum.im = t_im;
    }

    pub fn total(&self) -> Complex64 {
        self.sum
    }
}

fn naive_transform(x: &[Complex64], sign: f64) -> ComplexSequence {
    let n = x.len();
    if n == 0 {
        return ComplexSequence::default();
    }
    // roots[j] = exp(sign·i2πj/N); index by (n·k) mod N so every kernel value
    // is one of N exactly computed roots.
    let roots: Vec<Complex64> = (0..n)
        .map(|j| Complex64::from_polar(1.0, sign * 2.0 * PI * j as f64 / n as f64))
        .collect();
    (0..n)
        .map(|k| {
            let mut acc = KahanSum::default();
            let mut idx = 0usize;
            for v in x {
                acc.add(v * roots[idx]);
                idx += k;
                if idx >= n {
                    idx -= n;
                }
            }
            acc.total()
        })
        .collect()
}

/// `X[k] = Σ_n x[n]·exp(-i2πnk/N)`.
pub fn naive_dft(x: &[Complex64]) -> ComplexSequence {
    naive_transform(x, -1.0)
}

/// `X[k] = Σ_n x[n]·exp(+i2πnk/N)`, unnormalized.
pub fn naive_idft(x: &[Complex64]) -> ComplexSequence {
    naive_transform(x, 1.0)
}

/// `Σ_n Z_u(n)` by direct summation. The shift in `params` is ignored: a
/// cyclic rotation does not change the sum.
pub fn brute_gauss_sum(params: ZcParams) -> Complex64 {
    let mut acc = KahanSum::default();
    for z in zc_time(params).iter() {
        acc.add(*z);
    }
    acc.total()
}

/// `F(k) = conj(Z_u(u⁻¹k + Ts)) · Z_u(Ts) · F_u(0)`, the DFT of the shifted
/// sequence written through the unshifted one.
pub fn shift_identity_dft(params: ZcParams) -> ComplexSequence {
    let p = params.prime();
    let u = params.u();
    let ts = params.ts();
    let iu = mod_inverse(u, p).expect("1 <= u < P is a unit");
    let f0 = brute_gauss_sum(params.with_shift(0).expect("0 is a valid shift"));
    let anchor = zc_sample(p, u, ts);
    (0..p.get())
        .map(|k| zc_sample(p, u, p.mul(iu, k) + ts).conj() * anchor * f0)
        .collect()
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::numtheory::Prime;
    use crate::transform::{dft_reference, idft_reference};
    use rand::{Rng, SeedableRng};

    fn c(re: f64, im: f64) -> Complex64 {
        Complex64::new(re, im)
    }

    fn random_unit(n: usize, rng: &mut impl Rng) -> Vec<Complex64> {
        let v: Vec<Complex64> = (0..n).map(|_| c(rng.gen_range(-1.0..1.0), rng.gen_range(-1.0..1.0))).collect();
        let norm = v.iter().map(|z| z.norm_sqr()).sum::<f64>().sqrt();
        v.into_iter().map(|z| z / norm).collect()
    }

    #[test]
    fn constant_and_delta() {
        let ones = vec![c(1.0, 0.0); 5];
        let x = naive_dft(&ones);
        assert!((x[0] - c(5.0, 0.0)).norm() < 1e-12);
        assert!(x[1..].iter().all(|z| z.norm() < 1e-12));

        let mut delta = vec![c(0.0, 0.0); 7];
        delta[0] = c(1.0, 0.0);
        for y in [naive_dft(&delta), naive_idft(&delta)] {
            assert!(y.iter().all(|z| (z - c(1.0, 0.0)).norm() < 1e-15));
        }
    }

    #[test]
    fn zc_bin_zero_is_the_gauss_sum() {
        let params = ZcParams::new(13, 3, 0).unwrap();
        let x = naive_dft(&zc_time(params));
        let frozen = c(-2.048_186_572_122_655, -2.967_310_527_359_17);
        assert!((x[0] - frozen).norm() < 1e-12);
        assert!((brute_gauss_sum(params) - frozen).norm() < 1e-12);
        let seven = brute_gauss_sum(ZcParams::new(7, 1, 0).unwrap());
        assert!((seven - c(2.068_531_669_771_364, -1.649_598_960_703_144)).norm() < 1e-12);
    }

    #[test]
    fn gauss_sum_magnitude() {
        for p in [5u64, 7, 11, 13, 97, 199] {
            for u in 1..p as i64 {
                let g = brute_gauss_sum(ZcParams::new(p, u, 0).unwrap());
                assert!((g.norm() - (p as f64).sqrt()).abs() < 1e-9);
            }
        }
    }

    #[test]
    fn round_trip_random() {
        let mut rng = rand_chacha::ChaCha8Rng::seed_from_u64(13);
        let x = random_unit(13, &mut rng);
        let back = naive_idft(&naive_dft(&x));
        for (a, b) in back.iter().zip(&x) {
            assert!((a - b * 13.0).norm() < 1e-8 * 13.0);
        }
    }

    #[test]
    fn transforms_are_adjoint() {
        let mut rng = rand_chacha::ChaCha8Rng::seed_from_u64(7);
        for n in [5usize, 13, 61, 139] {
            let x = random_unit(n, &mut rng);
            let y = random_unit(n, &mut rng);
            let fx = naive_dft(&x);
            let gy = naive_idft(&y);
            let lhs: Complex64 = fx.iter().zip(&y).map(|(a, b)| a * b.conj()).sum();
            let rhs: Complex64 = x.iter().zip(gy.iter()).map(|(a, b)| a * b.conj()).sum();
            assert!((lhs - rhs).norm() < 1e-9 * n as f64);
        }
    }

    #[test]
    fn idft_of_zc_matches_reference() {
        let params = ZcParams::new(13, 3, 0).unwrap();
        let got = naive_idft(&zc_time(params));
        assert!(got.max_abs_diff(&idft_reference(params)) < 1e-9 * 13f64.sqrt());
    }

    #[test]
    fn shift_identity_examples() {
        let base = ZcParams::new(13, 3, 0).unwrap();
        assert!(shift_identity_dft(base).max_abs_diff(&dft_reference(base)) < 1e-10 * 13f64.sqrt());
        let shifted = ZcParams::new(13, 3, 5).unwrap();
        let naive = naive_dft(&zc_time(shifted));
        assert!(shift_identity_dft(shifted).max_abs_diff(&naive) < 1e-9 * 13f64.sqrt());
        let pr = Prime::new(13).unwrap();
        for ts in 0..13 {
            let prm = ZcParams::with_prime(pr, 3, ts).unwrap();
            let f = shift_identity_dft(prm);
            assert!((f[0] - brute_gauss_sum(prm)).norm() < 1e-12);
        }
    }
}
