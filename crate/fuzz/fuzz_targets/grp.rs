#![no_main]

use libfuzzer_sys::fuzz_target;
use orrforge::group::io::{parse_grp, write_grp};

fuzz_target!(|data: &[u8]| {
    if let Ok(text) = std::str::from_utf8(data) {
        if let Ok(g) = parse_grp(text) {
            let again = parse_grp(&write_grp(&g)).expect("written tables parse");
            assert_eq!(again.order(), g.order());
        }
    }
});
