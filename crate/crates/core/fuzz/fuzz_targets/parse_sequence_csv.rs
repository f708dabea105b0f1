#![no_main]

use libfuzzer_sys::fuzz_target;
use zcdft::format::{parse_sequence_csv, sequence_to_csv};

fuzz_target!(|data: &[u8]| {
    let Ok(text) = std::str::from_utf8(data) else { return };
    if let Ok(seq) = parse_sequence_csv(text) {
        // Whatever parses must survive a write/read cycle unchanged.
        let again = parse_sequence_csv(&sequence_to_csv(&seq)).expect("re-parse");
        assert_eq!(seq, again);
    }
});
