#![no_main]

use libfuzzer_sys::fuzz_target;
use orrforge::digraph::io::{parse_connection_set, parse_edge_list, to_edge_list};

fuzz_target!(|data: &[u8]| {
    if let Ok(text) = std::str::from_utf8(data) {
        if let Ok(d) = parse_edge_list(text) {
            let again = parse_edge_list(&to_edge_list(&d)).expect("written lists parse");
            assert_eq!(again.arc_count(), d.arc_count());
        }
        let _ = parse_connection_set(text);
    }
});
