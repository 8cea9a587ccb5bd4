//! Polygon JSON parsing, with a measurement smoke test on small inputs.

#![no_main]

use libfuzzer_sys::fuzz_target;

fuzz_target!(|data: &[u8]| {
    if data.len() > 8192 {
        return;
    }
    let Ok(s) = std::str::from_utf8(data) else { return };
    if let Ok(p) = serde_json::from_str::<frieze::Polygon>(s) {
        if p.n() <= 12 {
            let _ = frieze::geometry::measure_all(&p);
        }
    }
});
