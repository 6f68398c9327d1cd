//! Higher-degree differentials of g6.15^-1 derived by the Leibniz rule.

mod common;

use common::{el, g6, x};

/// Values that agree with the printed tables.
const AGREEING: &[(&str, &str)] = &[
    ("12", "x1*x2*x6"),
    ("13", "-x1*x3*x6"),
    ("14", "x1*x2*x6 + x1*x4*x6 - x2*x3*x4"),
    ("15", "x1*x3*x6 - x1*x5*x6 - x2*x3*x5"),
    ("16", "-x2*x3*x6"),
    ("24", "2*x2*x4*x6"),
    ("25", "x2*x3*x6"),
    ("34", "-x2*x3*x6"),
    ("35", "-2*x3*x5*x6"),
    ("45", "x2*x5*x6 - x3*x4*x6"),
    ("123", "0"),
    ("256", "0"),
    ("346", "0"),
    ("456", "0"),
    ("124", "-2*x1*x2*x4*x6"),
    ("125", "-x1*x2*x3*x6"),
    ("134", "x1*x2*x3*x6"),
    ("135", "2*x1*x3*x5*x6"),
    ("146", "-x2*x3*x4*x6"),
    ("234", "-x2*x3*x4*x6"),
    ("235", "x2*x3*x5*x6"),
    ("345", "x2*x3*x5*x6 + x3*x4*x5*x6"),
    ("1234", "x1*x2*x3*x4*x6"),
    ("1245", "-x1*x2*x3*x4*x6 + x1*x2*x4*x5*x6"),
    ("1256", "0"),
    ("1346", "0"),
    ("1456", "-x2*x3*x4*x5*x6"),
    ("2345", "0"),
    ("12345", "0"),
];

#[test]
fn leibniz_matches_agreeing_table_entries() {
    let g = g6();
    for (form, expected) in AGREEING {
        assert_eq!(g.d(&x(&g, form)), el(&g, expected), "d x{form}");
    }
}

#[test]
fn corrected_sign_on_x16() {
    let g = g6();
    assert_eq!(g.d(&x(&g, "16")), el(&g, "-x2*x3*x6"));
    assert_ne!(g.d(&x(&g, "16")), el(&g, "x2*x3*x6"));
}

// Hand-expanded by the Leibniz rule; each differs from its printed value.
#[test]
fn entries_where_print_and_leibniz_differ() {
    let g = g6();
    let cases = [
        ("145", "-x1*x2*x5*x6 + x1*x3*x4*x6 - x2*x3*x4*x5", "-x1*x2*x5*x6 + x1*x3*x4*x6 - x2*x3*x4*x6"),
        ("156", "-x2*x3*x5*x6", "-x2*x3*x4*x6"),
        ("245", "x2*x3*x4*x6 - x2*x4*x5*x6", "x2*x3*x4*x6 - x2*x3*x5*x6"),
        ("1235", "-x1*x2*x3*x5*x6", "-2*x1*x2*x3*x5*x6"),
        ("1345", "-x1*x2*x3*x5*x6 - x1*x3*x4*x5*x6", "x1*x2*x3*x5*x6 - x1*x3*x4*x5*x6"),
    ];
    for (form, derived, printed) in cases {
        let d = g.d(&x(&g, form));
        assert_eq!(d, el(&g, derived), "d x{form}");
        assert_ne!(d, el(&g, printed), "d x{form}");
    }
}

#[test]
fn every_table_value_is_closed() {
    let g = g6();
    for (form, _) in AGREEING {
        assert!(g.d(&g.d(&x(&g, form))).is_zero());
    }
}
