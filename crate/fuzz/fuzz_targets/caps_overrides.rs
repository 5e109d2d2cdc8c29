#![no_main]

use libfuzzer_sys::fuzz_target;
use toruskit::Caps;

fuzz_target!(|data: &[u8]| {
    let Ok(text) = std::str::from_utf8(data) else { return };
    if let Ok(caps) = Caps::from_overrides(text) {
        assert!(caps.saturation > 0 && caps.resolution > 0 && caps.m_max > 0 && caps.exponent > 0);
    }
});
