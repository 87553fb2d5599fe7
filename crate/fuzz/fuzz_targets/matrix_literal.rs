#![no_main]

use gspin_core::dsl::{format_matrix, parse_matrix};
use libfuzzer_sys::fuzz_target;

fuzz_target!(|data: &[u8]| {
    let Ok(s) = std::str::from_utf8(data) else { return };
    if let Ok(m) = parse_matrix(s) {
        assert_eq!(parse_matrix(&format_matrix(&m)).unwrap(), m);
    }
});
