#![no_main]

use libfuzzer_sys::fuzz_target;
use toruskit_cli::JobSpec;

fuzz_target!(|data: &[u8]| {
    let Ok(text) = std::str::from_utf8(data) else { return };
    let items: Vec<String> = text.lines().map(str::to_owned).collect();
    if let Ok(options) = JobSpec::parse_options(&items) {
        assert_eq!(options.len(), items.len());
        assert!(options.keys().all(|k| !k.is_empty()));
    }
});
