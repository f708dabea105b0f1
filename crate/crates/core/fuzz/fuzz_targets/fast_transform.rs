#![no_main]

use libfuzzer_sys::fuzz_target;
use zcdft::oracle::naive_dft;
use zcdft::{plan, zc_time, Direction, ZcParams};

// Small (P, u, Ts) triples: the fast DFT must match the naive one whenever
// the parameters are accepted, and rejection must never panic.
fuzz_target!(|data: [u16; 3]| {
    let p = u64::from(data[0] % 1024);
    let Ok(params) = ZcParams::new(p, i64::from(data[1]), i64::from(data[2])) else { return };
    let fast = plan(params, Direction::Forward).execute(None);
    let naive = naive_dft(&zc_time(params));
    assert!(fast.max_abs_diff(&naive) <= 1e-9 * (p as f64).sqrt());
});
