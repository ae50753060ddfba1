//! Fuzz the term-grammar parser, and push accepted terms through the
//! rewriter: round-trip, strategy agreement, connectivity preservation.

#![no_main]

use libfuzzer_sys::fuzz_target;
use nestcob::space::{normalize_with, Strategy};
use nestcob::{connectivity, normalize, parse_space};

fuzz_target!(|data: &[u8]| {
    let Ok(text) = std::str::from_utf8(data) else {
        return;
    };
    let Ok(term) = parse_space(text) else {
        return;
    };
    // the canonical rendering must parse back to the same tree
    let reparsed = parse_space(&term.to_string()).expect("canonical form parses");
    assert_eq!(reparsed, term);

    // keep the rewriter off pathological blowups; the budget matches the
    // cargo-fuzz default timeout comfortably
    if term.node_count() > 300 {
        return;
    }
    let inner = normalize_with(&term, Strategy::InnermostFirst);
    let outer = normalize_with(&term, Strategy::OutermostFirst);
    assert_eq!(inner, outer, "strategies disagree on {term}");
    assert_eq!(normalize(&inner), inner, "normal form not a fixed point");
    assert_eq!(
        connectivity(&inner),
        connectivity(&term),
        "connectivity changed for {term}"
    );
});
