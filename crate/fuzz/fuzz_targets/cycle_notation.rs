#![no_main]

use libfuzzer_sys::fuzz_target;

fuzz_target!(|data: &[u8]| {
    let Ok(text) = std::str::from_utf8(data) else { return };
    let _ = equichar::format::parse_cycle_names(text);
    let points: Vec<String> = (1..=8).map(|i| i.to_string()).collect();
    let _ = equichar::format::parse_cycle_notation(text, &points);
});
