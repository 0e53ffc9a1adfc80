#![no_main]

use humbert_core::rational::parse_index_list;
use libfuzzer_sys::fuzz_target;

fuzz_target!(|data: &[u8]| {
    let Ok(s) = std::str::from_utf8(data) else { return };
    if let Ok(v) = parse_index_list(s) {
        assert!(!v.is_empty() && v.iter().all(|&i| i >= 1));
    }
});
