//! End-to-end checks through the public API only.

use zcdft::format::{parse_pattern_csv, parse_sequence_csv, parse_sequence_json, sequence_to_csv, sequence_to_json};
use zcdft::numtheory::build_tables;
use zcdft::oracle::{naive_dft, naive_idft};
use zcdft::pattern::{inverse_by_flip, zc_pattern};
use zcdft::transform::plan_with_tables;
use zcdft::{lmfh_symbol, mod_inverse, plan, zc_time, Direction, Error, LmfhParams, Prime, ZcParams};

#[test]
fn shared_tables_match_per_plan_setup() {
    let p = Prime::new(139).unwrap();
    let tables = build_tables(p);
    for u in 1..139 {
        for dir in [Direction::Forward, Direction::Inverse] {
            let params = ZcParams::with_prime(p, u, u % 11).unwrap();
            let a = plan(params, dir).execute(None);
            let b = plan_with_tables(params, dir, &tables).execute(None);
            assert_eq!(a, b);
        }
    }
}

#[test]
fn spectrum_survives_csv_and_json() {
    let params = ZcParams::new(61, 17, 30).unwrap();
    let spectrum = plan(params, Direction::Forward).execute(None);
    assert_eq!(parse_sequence_csv(&sequence_to_csv(&spectrum)).unwrap(), spectrum);
    let (back_params, back) = parse_sequence_json(&sequence_to_json(params, &spectrum)).unwrap();
    assert_eq!(back_params, params);
    assert_eq!(back, spectrum);
}

#[test]
fn forward_then_inverse_is_p_times_identity() {
    let params = ZcParams::new(31, 7, 4).unwrap();
    let z = zc_time(params);
    let round = naive_idft(&naive_dft(&z));
    assert!(round.max_abs_diff(&z.scale(31.0)) < 1e-11);
}

#[test]
fn lmfh_symbol_with_negated_root_is_zc() {
    let p = Prime::new(13).unwrap();
    let z = zc_time(ZcParams::with_prime(p, 3, 0).unwrap());
    let down = lmfh_symbol(LmfhParams::new(p, -3)).unwrap();
    let up = lmfh_symbol(LmfhParams::new(p, 3)).unwrap();
    assert!(down.max_abs_diff(&z) < 1e-14);
    assert!(up.max_abs_diff(&z.conj()) < 1e-14);
}

#[test]
fn pattern_export_reads_back_and_inverts() {
    let p = Prime::new(13).unwrap();
    let pattern = zc_pattern(p, 3, 0).unwrap();
    assert_eq!(parse_pattern_csv(&pattern.to_csv()).unwrap(), pattern);
    assert_eq!(inverse_by_flip(p, 3).unwrap(), mod_inverse(3, p).unwrap());
    assert_eq!(mod_inverse(3, p).unwrap(), 9);
}

#[test]
fn rejects_bad_parameters() {
    assert_eq!(ZcParams::new(1, 1, 0), Err(Error::NotPrime(1)));
    assert_eq!(ZcParams::new(2, 1, 0), Err(Error::NotPrime(2)));
    assert_eq!(ZcParams::new(91, 1, 0), Err(Error::NotPrime(91)));
    assert!(matches!(ZcParams::new(13, 13, 0), Err(Error::RootOutOfRange { .. })));
    assert!(matches!(ZcParams::new(13, 3, -1), Err(Error::ShiftOutOfRange { .. })));
}
