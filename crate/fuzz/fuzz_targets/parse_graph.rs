#![no_main]

use libfuzzer_sys::fuzz_target;
use umcf_cli::format::{parse_graph, serialize_graph};

fuzz_target!(|data: &[u8]| {
    // The parser must never panic on arbitrary input, and every accepted
    // document must survive a serialize/parse round trip unchanged.
    if let Ok(graph) = parse_graph(data) {
        let bytes = serialize_graph(&graph);
        let again = parse_graph(&bytes).expect("serialized graph reparses");
        assert_eq!(again, graph);
    }
});
