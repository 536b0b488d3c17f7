#![no_main]

use libfuzzer_sys::fuzz_target;

fuzz_target!(|data: &[u8]| {
    if let Ok(text) = std::str::from_utf8(data) {
        if let Ok((_, x)) = equichar::format::parse_complex_file(text) {
            let _ = x.f_vector();
        }
    }
});
