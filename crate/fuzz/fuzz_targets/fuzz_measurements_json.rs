//! Measurement-set JSON parsing and exact lookups.

#![no_main]

use libfuzzer_sys::fuzz_target;

fuzz_target!(|data: &[u8]| {
    if data.len() > 8192 {
        return;
    }
    let Ok(s) = std::str::from_utf8(data) else { return };
    if let Ok(m) = serde_json::from_str::<frieze::MeasurementSet>(s) {
        let n = m.n().min(16);
        for i in 1..=n {
            for j in i..=n {
                let _ = m.x(i, j);
                let _ = m.s(i, j, (j % n) + 1);
            }
        }
    }
});
