//! Laurent polynomial JSON parsing, with evaluation and denominator
//! certification smoke tests.

#![no_main]

use libfuzzer_sys::fuzz_target;

fuzz_target!(|data: &[u8]| {
    if data.len() > 16384 {
        return;
    }
    let Ok(s) = std::str::from_utf8(data) else { return };
    let Ok(p) = serde_json::from_str::<frieze::LaurentPoly>(s) else { return };
    let _ = p.denominator_monomial();
    let exponents_small = p
        .terms()
        .all(|(ev, _)| ev.values().all(|e| e.abs() <= 64));
    if p.num_terms() <= 64 && exponents_small {
        // evaluate against the unit square's full measurement set
        let square = frieze::Polygon::new(vec![
            frieze::Point::from_ints(0, 0),
            frieze::Point::from_ints(1, 0),
            frieze::Point::from_ints(1, 1),
            frieze::Point::from_ints(0, 1),
        ])
        .unwrap();
        let m = frieze::geometry::measure_all(&square);
        let _ = p.evaluate(&m);
    }
});
