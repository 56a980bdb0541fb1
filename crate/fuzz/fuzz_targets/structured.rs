#![no_main]

use libfuzzer_sys::fuzz_target;
use raag::io::{parse_structured, write_structured};

fuzz_target!(|data: &[u8]| {
    let Ok(text) = std::str::from_utf8(data) else { return };
    if let Ok(g) = parse_structured(text) {
        assert_eq!(parse_structured(&write_structured(&g)).unwrap(), g);
    }
});
