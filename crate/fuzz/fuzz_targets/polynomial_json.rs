#![no_main]

use libfuzzer_sys::fuzz_target;
use toruskit::io::{parse, PolynomialJson};

fuzz_target!(|data: &[u8]| {
    let Ok(text) = std::str::from_utf8(data) else { return };
    let Ok(doc) = parse::<PolynomialJson>(text) else { return };
    if let Ok(value) = doc.to_polynomial() {
        let again = PolynomialJson::from_polynomial(&value);
        let text = serde_json::to_string(&again).unwrap();
        let back = parse::<PolynomialJson>(&text).unwrap().to_polynomial().unwrap();
        assert_eq!(back, value);
    }
});
