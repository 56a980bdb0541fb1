#![no_main]

use libfuzzer_sys::fuzz_target;
use raag::io::{parse_edgelist, write_edgelist};

fuzz_target!(|data: &[u8]| {
    let Ok(text) = std::str::from_utf8(data) else { return };
    if let Ok(g) = parse_edgelist(text) {
        // labels never contain whitespace, so the written form parses back
        assert_eq!(parse_edgelist(&write_edgelist(&g)).unwrap(), g);
    }
});
