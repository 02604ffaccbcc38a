#![no_main]

use clifford_cones::FiniteSemigroup;
use libfuzzer_sys::fuzz_target;

fuzz_target!(|data: &[u8]| {
    let Ok(text) = std::str::from_utf8(data) else {
        return;
    };
    if let Ok(s) = FiniteSemigroup::parse_text(text) {
        let again = FiniteSemigroup::parse_text(&s.to_text()).expect("printed tables parse");
        assert_eq!(s, again);
    }
});
