#![no_main]

use humbert_core::moduli::ParameterTuple;
use libfuzzer_sys::fuzz_target;

fuzz_target!(|data: &[u8]| {
    let Ok(s) = std::str::from_utf8(data) else { return };
    if let Ok(p) = s.parse::<ParameterTuple>() {
        assert_eq!(p.to_string().parse::<ParameterTuple>().ok(), Some(p.clone()));
        let _ = ParameterTuple::parse_for(p.n(), s).expect("length matches");
    }
});
