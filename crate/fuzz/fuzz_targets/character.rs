#![no_main]

use libfuzzer_sys::fuzz_target;
use raag::io::parse_character;
use raag::resonance::{resonance_contains_linear, sigma1_contains};
use raag::Graph;

fuzz_target!(|data: &[u8]| {
    let Ok(text) = std::str::from_utf8(data) else { return };
    let g = Graph::family("triforce6").unwrap();
    if let Ok(chi) = parse_character(&g, text) {
        if !chi.is_zero() {
            assert_eq!(sigma1_contains(&g, &chi).unwrap(), !resonance_contains_linear(&g, &chi).unwrap());
        }
    }
});
