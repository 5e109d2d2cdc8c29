#![no_main]

use libfuzzer_sys::fuzz_target;
use toruskit::io::{parse, PointJson};

fuzz_target!(|data: &[u8]| {
    let Ok(text) = std::str::from_utf8(data) else { return };
    let Ok(doc) = parse::<PointJson>(text) else { return };
    if let Ok(value) = doc.to_point() {
        let again = PointJson::from_point(&value);
        let text = serde_json::to_string(&again).unwrap();
        let back = parse::<PointJson>(&text).unwrap().to_point().unwrap();
        assert_eq!(back, value);
    }
});
