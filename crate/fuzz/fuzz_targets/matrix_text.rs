#![no_main]

use gspin_core::nilpotent::ExactMatrix;
use libfuzzer_sys::fuzz_target;

fuzz_target!(|data: &[u8]| {
    let Ok(s) = std::str::from_utf8(data) else { return };
    if let Ok(m) = ExactMatrix::parse_text(s) {
        assert_eq!(ExactMatrix::parse_text(&m.to_text()).unwrap(), m);
    }
});
