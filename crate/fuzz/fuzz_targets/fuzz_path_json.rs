//! Path JSON parsing and validation for both frieze kinds, plus a bounded
//! propagation smoke test on inputs that pass validation.

#![no_main]

use frieze::frieze::{propagate_cm, propagate_heronian, CMPath, HTraversingPath, Window};
use libfuzzer_sys::fuzz_target;

fuzz_target!(|data: &[u8]| {
    if data.len() > 2048 {
        return;
    }
    let Ok(s) = std::str::from_utf8(data) else { return };
    let Ok(raw) = serde_json::from_str::<frieze::frieze::PathJson>(s) else { return };
    let window = Window::new(-3, 3).unwrap();
    for n in 4..=8u32 {
        if let Ok((path, values)) = HTraversingPath::from_json(n, &raw) {
            let _ = propagate_heronian(&path, &values, window);
        }
        if let Ok((path, values)) = CMPath::from_json(n, &raw) {
            let _ = propagate_cm(&path, &values, window);
        }
    }
});
