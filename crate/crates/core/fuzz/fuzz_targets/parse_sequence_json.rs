#![no_main]

use libfuzzer_sys::fuzz_target;
use zcdft::format::{parse_sequence_json, sequence_to_json};

fuzz_target!(|data: &[u8]| {
    let Ok(text) = std::str::from_utf8(data) else { return };
    if let Ok((params, seq)) = parse_sequence_json(text) {
        let (p2, again) = parse_sequence_json(&sequence_to_json(params, &seq)).expect("re-parse");
        assert_eq!(params, p2);
        assert_eq!(seq, again);
    }
});
