#![no_main]

use std::sync::OnceLock;

use libfuzzer_sys::fuzz_target;

fn algebras() -> &'static [cdga::Cdga] {
    static CELL: OnceLock<Vec<cdga::Cdga>> = OnceLock::new();
    CELL.get_or_init(|| {
        ["g6_15_m1", "s2_model"]
            .into_iter()
            .map(|n| cdga::catalog(n).expect("catalog entry"))
            .collect()
    })
}

fuzz_target!(|data: &[u8]| {
    let Ok(src) = std::str::from_utf8(data) else {
        return;
    };
    for c in algebras() {
        if let Ok(e) = cdga::parse_element(src, c) {
            let again = cdga::parse_element(&e.to_string(), c).expect("printed element parses");
            assert_eq!(again, e);
        }
    }
});
