//! Fuzz the sphere-table parser and exercise the lookup rules on
//! whatever validates.

#![no_main]

use libfuzzer_sys::fuzz_target;
use nestcob::SphereTable;

fuzz_target!(|data: &[u8]| {
    let Ok(text) = std::str::from_utf8(data) else {
        return;
    };
    let Ok(table) = SphereTable::parse(text) else {
        return;
    };
    for (m, n) in [(0, 1), (3, 2), (5, 5), (9, 1), (7, 4), (12, 9)] {
        let _ = table.lookup_pi(m, n);
    }
    for k in table.stems().take(16) {
        let _ = table.lookup_stem(k);
    }
});
