#![no_main]

use libfuzzer_sys::fuzz_target;
use raag::io::InvariantReport;

fuzz_target!(|data: &[u8]| {
    let Ok(text) = std::str::from_utf8(data) else { return };
    if let Ok(report) = InvariantReport::from_canonical_str(text) {
        let canonical = report.to_canonical_string();
        assert_eq!(InvariantReport::from_canonical_str(&canonical).unwrap(), report);
    }
});
