#![no_main]

use gspin_core::dsl::parse_char_expr;
use libfuzzer_sys::fuzz_target;

fuzz_target!(|data: &[u8]| {
    if let Ok(s) = std::str::from_utf8(data) {
        let _ = parse_char_expr(s);
    }
});
