#![no_main]

use libfuzzer_sys::fuzz_target;
use zcdft::format::parse_pattern_csv;

fuzz_target!(|data: &[u8]| {
    let Ok(text) = std::str::from_utf8(data) else { return };
    if let Ok(pattern) = parse_pattern_csv(text) {
        assert_eq!(parse_pattern_csv(&pattern.to_csv()).expect("re-parse"), pattern);
        // Flips are total on any accepted pattern.
        let _ = pattern.flip_dft().flip_conjugate().negate_axes().read_slope();
    }
});
