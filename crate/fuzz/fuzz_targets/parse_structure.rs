//! Fuzz the CLI structure syntax and the Thom-space construction behind it.

#![no_main]

use libfuzzer_sys::fuzz_target;
use nestcob::{connectivity, parse_structure, thom_space, Connectivity};

fuzz_target!(|data: &[u8]| {
    let Ok(text) = std::str::from_utf8(data) else {
        return;
    };
    let Ok(structure) = parse_structure(text) else {
        return;
    };
    assert!(structure.framed_directions() <= structure.rank());
    match thom_space(&structure) {
        Ok(space) => {
            // a rank-d Thom space is (d-1)-connected
            assert_eq!(
                connectivity(&space),
                Connectivity::Finite(structure.rank() as i64 - 1)
            );
        }
        Err(_) => assert_eq!(structure.rank(), 0),
    }
});
