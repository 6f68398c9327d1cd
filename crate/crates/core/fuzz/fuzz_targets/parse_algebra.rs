#![no_main]

use libfuzzer_sys::fuzz_target;

fuzz_target!(|data: &[u8]| {
    let Ok(src) = std::str::from_utf8(data) else {
        return;
    };
    match cdga::parse_algebra(src) {
        Ok(doc) => {
            if let Ok(c) = doc.to_cdga() {
                // Printed sources re-parse to the same algebra.
                let again = cdga::parse_algebra(&c.to_source(&doc.name))
                    .expect("printed source parses")
                    .to_cdga()
                    .expect("printed source validates");
                assert_eq!(again, c);
            }
        }
        Err(diags) => {
            for d in diags.iter() {
                assert!(d.line >= 1 && d.column >= 1);
                assert!(d.span.start <= src.len());
            }
        }
    }
});
