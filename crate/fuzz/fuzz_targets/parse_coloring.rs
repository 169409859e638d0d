#![no_main]

use libfuzzer_sys::fuzz_target;
use umcf_cli::format::{parse_coloring, serialize_coloring};

fuzz_target!(|data: &[u8]| {
    if let Ok(doc) = parse_coloring(data) {
        let bytes = serialize_coloring(&doc);
        let again = parse_coloring(&bytes).expect("serialized coloring reparses");
        assert_eq!(again, doc);
    }
});
