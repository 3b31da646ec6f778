#![no_main]

use libfuzzer_sys::fuzz_target;
use orrforge::Presentation;

fuzz_target!(|data: &[u8]| {
    if let Ok(text) = std::str::from_utf8(data) {
        if let Ok(p) = Presentation::parse(text) {
            // Keep enumeration cheap; running out of cosets is an error, not a crash.
            let _ = p.compile(256);
        }
    }
});
