#![no_main]

use humbert_core::rational::{parse_rational, ExtendedRational};
use libfuzzer_sys::fuzz_target;

fuzz_target!(|data: &[u8]| {
    let Ok(s) = std::str::from_utf8(data) else { return };
    if let Ok(q) = parse_rational(s) {
        let back = parse_rational(&q.to_string()).expect("rendered rationals reparse");
        assert_eq!(q, back);
    }
    if let Ok(v) = s.parse::<ExtendedRational>() {
        assert_eq!(v.to_string().parse::<ExtendedRational>().ok(), Some(v));
    }
});
