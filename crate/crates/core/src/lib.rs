//! Zadoff-Chu sequences viewed as linear micro-frequency-hopping (lmFH)
//! symbols, with an `O(P)` DFT/IDFT built from integer frequency-point
//! accumulation and a closed-form quadratic Gauss sum.
//!
//! ```
//! use zcdft::{plan, Direction, ZcParams};
//!
//! let params = ZcParams::new(13, 3, 0).unwrap();
//! let spectrum = plan(params, Direction::Forward).execute(None);
//! assert_eq!(spectrum.len(), 13);
//! ```

pub mod bench;
pub mod format;
pub mod gauss;
pub mod numtheory;
pub mod oracle;
pub mod pattern;
pub mod sequences;
pub mod transform;
pub mod verify;

pub use num_complex::Complex64;

pub use gauss::{gauss_sum_closed, quasi_phase_offset4, GaussSumResult};
pub use numtheory::{centered, is_prime, legendre, mod_inverse, CenteredResidue, Prime};
pub use pattern::{LmfhPattern, Orientation};
pub use sequences::{lmfh_symbol, zc_time, ComplexSequence, LmfhParams, ZcParams};
pub use transform::{dft_reference, idft_reference, plan, Direction, OpCounters, TransformPlan};

#[derive(Debug, Clone, PartialEq, thiserror::Error)]
pub enum Error {
    #[error("{0} is not an odd prime")]
    NotPrime(u64),
    #[error("modulus {0} exceeds 2^31")]
    PrimeTooLarge(u64),
    #[error("{a} has no inverse modulo {p}")]
    NoInverse { a: i64, p: i64 },
    #[error("root {u} outside [1, {}]", p - 1)]
    RootOutOfRange { u: i64, p: i64 },
    #[error("cyclic shift {ts} outside [0, {}]", p - 1)]
    ShiftOutOfRange { ts: i64, p: i64 },
    #[error("slope {s} is zero modulo {p}")]
    ZeroSlope { s: i64, p: i64 },
    #[error("pattern is not affine modulo P (first mismatch at t = {t})")]
    NonAffinePattern { t: i64 },
    #[error("expected {expected} samples, got {got}")]
    LengthMismatch { expected: usize, got: usize },
    #[error("parse error at line {line}: {msg}")]
    Parse { line: usize, msg: String },
}
