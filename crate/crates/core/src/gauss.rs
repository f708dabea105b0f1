//! Closed form of the cumulative sum `F_u(0) = Σ_n Z_u(n)`.
//!
//! `F_u(0) = √P · (2u/P) · η_P · exp(i2π·u·(2⁻¹)³/P)` with `η_P = 1` for
//! `P ≡ 1 (mod 4)` and `-i` for `P ≡ 3 (mod 4)`. Folding all three unit
//! factors into one phase gives the quasi phase offset
//! `QP_o = ((3 - 2ℓ - P mod 4)·P + u(P+1)³) / 8`, a multiple of 1/4.

use num_complex::Complex64;

use crate::numtheory::{legendre, pow_mod, Prime};
use crate::sequences::unit_phasor;

#[derive(Debug, Clone, Copy, PartialEq)]
pub struct GaussSumResult {
    pub magnitude: f64,
    /// `4·QP_o`, exact.
    pub qpo_times4: i128,
    pub value: Complex64,
}

impl GaussSumResult {
    /// `4·QP_o mod 4P`; the phase of `value` is `2π·qpo_times4_reduced / (4P)`.
    pub fn qpo_times4_reduced(&self, p: Prime) -> i64 {
        self.qpo_times4.rem_euclid(4 * p.get() as i128) as i64
    }
}

/// Evaluates the Gauss-sum constant from the Legendre symbol, `η_P` and the
/// cubed inverse of two.
pub fn gauss_sum_closed(p: Prime, u: i64) -> GaussSumResult {
    let pv = p.get();
    let ell = legendre(2 * u, p);
    let eta = if pv % 4 == 1 {
        Complex64::new(1.0, 0.0)
    } else {
        Complex64::new(0.0, -1.0)
    };
    let cube = pow_mod(p.inv2(), 3, p);
    let magnitude = (pv as f64).sqrt();
    let value = unit_phasor(p.mul(u, cube), pv) * eta * (ell as f64) * magnitude;
    GaussSumResult {
        magnitude,
        qpo_times4: quasi_phase_offset4(p, u),
        value,
    }
}

/// `4·QP_o = ((3 - 2ℓ_{2u} - P mod 4)·P + u(P+1)³) / 2`.
///
/// Computed in 128-bit integers: for `P < 2^31`, `u(P+1)³ < 2^125`.
pub fn quasi_phase_offset4(p: Prime, u: i64) -> i128 {
    let pv = p.get() as i128;
    let ell = legendre(2 * u, p) as i128;
    let numerator = (3 - 2 * ell - pv % 4) * pv + u as i128 * (pv + 1).pow(3);
    // (P+1)³ ≡ 0 (mod 8) and the first term is ≡ 0 (mod 2P), so the
    // numerator is always even.
    assert_eq!(numerator % 2, 0, "4·QP_o must be an integer");
    numerator / 2
}

/// `√P · exp(i2π·QP_o/P)` from the integer `4·QP_o`.
pub fn phase_constant(p: Prime, qpo_times4: i128) -> Complex64 {
    let den = 4 * p.get();
    let r = qpo_times4.rem_euclid(den as i128) as i64;
    unit_phasor(r, den) * (p.get() as f64).sqrt()
}

/// `QP_o` as a float, for display only.
pub fn quasi_phase_offset(p: Prime, u: i64) -> f64 {
    let r = quasi_phase_offset4(p, u).rem_euclid(4 * p.get() as i128) as f64;
    r / 4.0
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::numtheory::is_prime;
    use std::f64::consts::PI;

    fn brute(p: u64, u: i64) -> Complex64 {
        // Plain float evaluation of Σ exp(-iπ·u·n(n+1)/P).
        (0..p)
            .map(|n| {
                let n = n as f64;
                Complex64::from_polar(1.0, -PI * u as f64 * n * (n + 1.0) / p as f64)
            })
            .sum()
    }

    fn pr(n: u64) -> Prime {
        Prime::new(n).unwrap()
    }

    #[test]
    fn p13_u3() {
        let g = gauss_sum_closed(pr(13), 3);
        let frozen = Complex64::new(-2.048_186_572_122_655, -2.967_310_527_359_17);
        assert!((g.value - brute(13, 3)).norm() < 1e-12);
        assert!((g.value - frozen).norm() < 1e-12);
        let expected = -(13f64).sqrt() * Complex64::from_polar(1.0, 4.0 * PI / 13.0);
        assert!((g.value - expected).norm() < 1e-12);
        assert_eq!(g.qpo_times4, 4142);
        assert_eq!(g.qpo_times4_reduced(pr(13)), 34);
        assert_eq!(quasi_phase_offset(pr(13), 3), 8.5);
    }

    #[test]
    fn p7_u1() {
        let g = gauss_sum_closed(pr(7), 1);
        assert!((g.value - brute(7, 1)).norm() < 1e-12);
        assert!((g.value - Complex64::new(2.068_531_669_771_364, -1.649_598_960_703_144)).norm() < 1e-12);
        assert_eq!(quasi_phase_offset4(pr(7), 1), 249);
    }

    #[test]
    fn closed_form_agrees_with_phase_form() {
        for p in (3..=199u64).filter(|&n| is_prime(n)) {
            let prime = pr(p);
            for u in 1..p as i64 {
                let g = gauss_sum_closed(prime, u);
                assert!((g.value.norm() - g.magnitude).abs() < 1e-12);
                assert!((g.magnitude - (p as f64).sqrt()).abs() < 1e-12);
                let from_phase = phase_constant(prime, g.qpo_times4);
                assert!((g.value - from_phase).norm() < 1e-12, "P={p} u={u}");
                assert!((g.value - brute(p, u)).norm() < 1e-9 * (p as f64).sqrt());
            }
        }
    }

    #[test]
    fn leading_coefficient_takes_documented_values() {
        for p in (3..=199u64).filter(|&n| is_prime(n)) {
            let prime = pr(p);
            for u in 1..p as i64 {
                let ell = legendre(2 * u, prime) as i64;
                let c = 3 - 2 * ell - (p as i64 % 4);
                if p % 4 == 1 {
                    assert!(c == 0 || c == 4);
                } else {
                    assert!(c == -2 || c == 2);
                }
            }
        }
    }

    #[test]
    fn no_overflow_near_the_cap() {
        let p = pr(2_147_483_647);
        let u = p.get() - 1;
        let q4 = quasi_phase_offset4(p, u);
        assert!(q4 > 0);
        let g = gauss_sum_closed(p, u);
        assert!((g.value - phase_constant(p, q4)).norm() < 1e-6 * g.magnitude);
    }
}
