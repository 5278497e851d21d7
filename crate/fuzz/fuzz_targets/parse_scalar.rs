#![no_main]

use libfuzzer_sys::fuzz_target;
use poncelet_workbench::scalar::parse_scalar;

fuzz_target!(|data: &[u8]| {
    if let Ok(text) = std::str::from_utf8(data) {
        let _ = parse_scalar(text);
    }
});
