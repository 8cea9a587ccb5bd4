//! Frieze JSON parsing for both kinds, with verification smoke tests.

#![no_main]

use libfuzzer_sys::fuzz_target;

fuzz_target!(|data: &[u8]| {
    if data.len() > 16384 {
        return;
    }
    let Ok(s) = std::str::from_utf8(data) else { return };
    if let Ok(z) = serde_json::from_str::<frieze::HeronianFrieze>(s) {
        if z.n() <= 16 && z.window().width() <= 64 {
            let _ = frieze::frieze::verify_heronian(&z);
            let _ = z.check_glide();
            let _ = z.check_period();
        }
    }
    if let Ok(z) = serde_json::from_str::<frieze::CMFrieze>(s) {
        if z.n() <= 16 && z.window().width() <= 64 {
            let _ = frieze::frieze::verify_cm(&z);
            let _ = frieze::frieze::verify_coherence(&z);
        }
    }
});
