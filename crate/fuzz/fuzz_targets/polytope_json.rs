#![no_main]

use libfuzzer_sys::fuzz_target;
use toruskit::io::{parse, PolytopeJson};

fuzz_target!(|data: &[u8]| {
    let Ok(text) = std::str::from_utf8(data) else { return };
    let Ok(doc) = parse::<PolytopeJson>(text) else { return };
    if let Ok(value) = doc.to_polytope() {
        let again = PolytopeJson::from_polytope(&value);
        let text = serde_json::to_string(&again).unwrap();
        let back = parse::<PolytopeJson>(&text).unwrap().to_polytope().unwrap();
        assert_eq!(back, value);
    }
});
