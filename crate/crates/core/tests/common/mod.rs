#![allow(dead_code)]

use cdga::{catalog, parse_element, Cdga, Cohomology, CohomologyClass, Element};

pub const OMEGA: &str = "2*x1*x6 + x2*x5 - x3*x4";

pub fn g6() -> Cdga {
    catalog("g6_15_m1").unwrap()
}

pub fn el(cdga: &Cdga, src: &str) -> Element {
    parse_element(src, cdga).unwrap_or_else(|d| panic!("{src}: {d}"))
}

/// Parses `x<digits>` shorthand such as `x1236` into a product of generators.
pub fn x(cdga: &Cdga, indices: &str) -> Element {
    let names: Vec<String> = indices.chars().map(|c| format!("x{c}")).collect();
    cdga.word(&names).unwrap()
}

pub fn class(h: &Cohomology, src: &str) -> CohomologyClass {
    h.class_of(&el(h.cdga(), src)).unwrap()
}
