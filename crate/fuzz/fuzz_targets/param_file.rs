#![no_main]

use gspin_core::dsl::{format_param_file, parse_param_file};
use libfuzzer_sys::fuzz_target;

fuzz_target!(|data: &[u8]| {
    let Ok(s) = std::str::from_utf8(data) else { return };
    if let Ok(p) = parse_param_file(s) {
        // anything accepted must survive a format/parse cycle
        let again = parse_param_file(&format_param_file(&p)).expect("formatted file reparses");
        assert_eq!(again, p);
    }
});
