#![no_main]

use libfuzzer_sys::fuzz_target;
use zcdft::format::parse_flip_list;

fuzz_target!(|data: &[u8]| {
    if let Ok(text) = std::str::from_utf8(data) {
        let _ = parse_flip_list(text);
    }
});
