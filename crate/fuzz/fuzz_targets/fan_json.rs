#![no_main]

use libfuzzer_sys::fuzz_target;
use toruskit::io::{parse, FanJson};

fuzz_target!(|data: &[u8]| {
    let Ok(text) = std::str::from_utf8(data) else { return };
    let Ok(doc) = parse::<FanJson>(text) else { return };
    if let Ok(value) = doc.to_fan() {
        let again = FanJson::from_fan(&value);
        let text = serde_json::to_string(&again).unwrap();
        let back = parse::<FanJson>(&text).unwrap().to_fan().unwrap();
        assert_eq!(back, value);
    }
});
