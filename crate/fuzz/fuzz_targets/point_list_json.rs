#![no_main]

use libfuzzer_sys::fuzz_target;
use toruskit::io::{parse, PointJson, PointListJson};

fuzz_target!(|data: &[u8]| {
    let Ok(text) = std::str::from_utf8(data) else { return };
    let Ok(doc) = parse::<PointListJson>(text) else { return };
    if let Ok(points) = doc.to_points() {
        let again = PointListJson { schema: doc.schema.clone(), points: points.iter().map(PointJson::from_point).collect() };
        let text = serde_json::to_string(&again).unwrap();
        assert_eq!(parse::<PointListJson>(&text).unwrap().to_points().unwrap(), points);
    }
});
