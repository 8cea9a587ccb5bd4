//! Triangulation JSON parsing; valid inputs exercise the combinatorics.

#![no_main]

use libfuzzer_sys::fuzz_target;

fuzz_target!(|data: &[u8]| {
    if data.len() > 4096 {
        return;
    }
    let Ok(s) = std::str::from_utf8(data) else { return };
    if let Ok(g) = serde_json::from_str::<frieze::TriCycle>(s) {
        if g.n() > 16 {
            return;
        }
        let _ = g.triangles();
        let _ = g.is_thin();
        let _ = g.trimmed_diagonal();
        for d in g.diagonals().collect::<Vec<_>>() {
            let _ = g.flip(d);
        }
        for i in 1..=g.n() {
            for j in (i + 2)..=g.n() {
                let _ = g.trim_diag((i, j));
            }
        }
    }
});
