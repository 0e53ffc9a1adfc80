#![no_main]

use humbert_core::equations::HyperellipticEquation;
use libfuzzer_sys::fuzz_target;

fuzz_target!(|data: &[u8]| {
    let Ok(s) = std::str::from_utf8(data) else { return };
    if let Ok(eq) = HyperellipticEquation::from_json(s) {
        assert_eq!(eq.branch_count() as i64, 2 * eq.genus() + 2);
        let text = serde_json::to_string(&eq.to_record()).expect("records serialize");
        assert_eq!(HyperellipticEquation::from_json(&text).ok(), Some(eq));
    }
});
