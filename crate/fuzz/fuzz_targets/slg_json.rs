#![no_main]

use clifford_cones::builders::strong_semilattice_of_groups;
use clifford_cones::SlgSpec;
use libfuzzer_sys::fuzz_target;

fuzz_target!(|data: &[u8]| {
    let Ok(text) = std::str::from_utf8(data) else {
        return;
    };
    let Ok(spec) = SlgSpec::from_json(text) else {
        return;
    };
    // keep the product table small
    if spec.groups.iter().map(|g| g.order()).sum::<usize>() > 64 {
        return;
    }
    if spec.validate().is_ok() {
        let s = strong_semilattice_of_groups(&spec).expect("validated specs build");
        assert!(s.is_clifford());
    }
});
