#![no_main]

use libfuzzer_sys::fuzz_target;
use toruskit::io::{parse, DivisorJson};

fuzz_target!(|data: &[u8]| {
    let Ok(text) = std::str::from_utf8(data) else { return };
    let Ok(doc) = parse::<DivisorJson>(text) else { return };
    if let Ok(value) = doc.to_divisor() {
        let again = DivisorJson::from_divisor(&value);
        let text = serde_json::to_string(&again).unwrap();
        let back = parse::<DivisorJson>(&text).unwrap().to_divisor().unwrap();
        assert_eq!(back, value);
    }
});
