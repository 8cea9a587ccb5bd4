//! Scalar parsers: rationals, node and line indices, measurement symbols.
//! None of them may panic on arbitrary input.

#![no_main]

use libfuzzer_sys::fuzz_target;
use std::str::FromStr;

fuzz_target!(|data: &[u8]| {
    if data.len() > 4096 {
        return;
    }
    if let Ok(s) = std::str::from_utf8(data) {
        let _ = frieze::Rat::from_str(s);
        let _ = frieze::NodeIdx::from_str(s);
        let _ = frieze::LineIdx::from_str(s);
        let _ = frieze::MeasSym::from_str(s);
    }
});
