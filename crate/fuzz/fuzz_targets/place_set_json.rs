#![no_main]

use libfuzzer_sys::fuzz_target;
use toruskit::io::{parse, PlaceSetJson};

fuzz_target!(|data: &[u8]| {
    let Ok(text) = std::str::from_utf8(data) else { return };
    let Ok(doc) = parse::<PlaceSetJson>(text) else { return };
    if let Ok(value) = doc.to_places() {
        let again = PlaceSetJson::from_places(&value);
        let text = serde_json::to_string(&again).unwrap();
        let back = parse::<PlaceSetJson>(&text).unwrap().to_places().unwrap();
        assert_eq!(back, value);
    }
});
