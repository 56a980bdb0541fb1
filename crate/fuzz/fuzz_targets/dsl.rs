#![no_main]

use libfuzzer_sys::fuzz_target;
use raag::invariants::clique_polynomial;
use raag::io::parse_dsl;

fuzz_target!(|data: &[u8]| {
    let Ok(text) = std::str::from_utf8(data) else { return };
    if let Ok(g) = parse_dsl(text) {
        assert!(g.n() <= 64);
        // clique enumeration is exponential on dense graphs
        if g.n() <= 16 {
            let p = clique_polynomial(&g);
            assert_eq!(p.coeff(1), g.n().into());
        }
    }
});
