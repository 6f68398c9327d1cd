//! Built-in algebras, stored as DSL source.

use crate::algebra::FreeAlgebra;
use crate::cdga::Cdga;
use crate::dsl;
use crate::error::{Error, Result};

const G6_15_M1: &str = include_str!("../catalog/g6_15_m1.alg");
const HEISENBERG3: &str = include_str!("../catalog/heisenberg3.alg");
const S2_MODEL: &str = include_str!("../catalog/s2_model.alg");
const CIRCLE: &str = include_str!("../catalog/circle.alg");
const POINT: &str = include_str!("../catalog/point.alg");

/// Names accepted by [`catalog`]; `abelianN` works for any `N ≥ 1`.
pub const NAMES: &[&str] = &["g6_15_m1", "abelianN", "heisenberg3", "s2_model", "circle", "point"];

/// Largest `N` accepted for `abelianN`.
pub const MAX_ABELIAN: usize = 32;

/// DSL source of a catalog entry.
pub fn source(name: &str) -> Result<String> {
    let fixed = match name {
        "g6_15_m1" => Some(G6_15_M1),
        "heisenberg3" => Some(HEISENBERG3),
        "s2_model" => Some(S2_MODEL),
        "circle" => Some(CIRCLE),
        "point" => Some(POINT),
        _ => None,
    };
    if let Some(src) = fixed {
        return Ok(src.to_string());
    }
    match abelian_rank(name) {
        Some(n) => Ok(abelian_source(n)),
        None => Err(Error::UnknownCatalog(name.to_string())),
    }
}

fn abelian_rank(name: &str) -> Option<usize> {
    let digits = name.strip_prefix("abelian")?;
    if digits.starts_with('0') || !digits.chars().all(|c| c.is_ascii_digit()) {
        return None;
    }
    let n: usize = digits.parse().ok()?;
    (1..=MAX_ABELIAN).contains(&n).then_some(n)
}

fn abelian_source(n: usize) -> String {
    let gens = (1..=n)
        .map(|i| format!("x{i}:1"))
        .collect::<Vec<_>>()
        .join(", ");
    format!("# Abelian Lie algebra of dimension {n}.\nalgebra abelian{n} {{\n  generators: {gens}\n}}\n")
}

pub fn catalog(name: &str) -> Result<Cdga> {
    let src = source(name)?;
    let doc = dsl::parse_algebra(&src).unwrap_or_else(|d| panic!("catalog entry {name}: {d:?}"));
    doc.to_cdga()
}

/// `x1..xn` of degree one with zero differential.
pub fn abelian(n: usize) -> Cdga {
    Cdga::formal(&FreeAlgebra::exterior(n))
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::algebra::Element;

    #[test]
    fn g6_table_as_printed() {
        let g = catalog("g6_15_m1").unwrap();
        let expected = &g.word(&["x5", "x6"]).unwrap() - &g.word(&["x3", "x6"]).unwrap();
        assert_eq!(g.generator_differential(4), &expected);
    }

    #[test]
    fn abelian_is_formal() {
        let a = catalog("abelian3").unwrap();
        assert_eq!(a.algebra().len(), 3);
        assert!(a.has_zero_differential());
        assert!(catalog("abelian0").is_err());
        assert!(catalog("abelian03").is_err());
        assert!(catalog("abelian").is_err());
    }

    #[test]
    fn s2_model_differentials() {
        let s2 = catalog("s2_model").unwrap();
        let u = s2.gen("u").unwrap();
        assert_eq!(s2.d(&s2.gen("v").unwrap()), u.pow(2));
        assert!(s2.d(&u.pow(2)).is_zero());
    }

    #[test]
    fn circle_and_point() {
        let c = catalog("circle").unwrap();
        assert_eq!(c.algebra().len(), 1);
        assert!(c.has_zero_differential());
        let p = catalog("point").unwrap();
        assert!(p.algebra().is_empty());
        assert!(p.d(&Element::one(p.algebra())).is_zero());
    }

    #[test]
    fn unknown_name() {
        assert!(matches!(catalog("torus"), Err(Error::UnknownCatalog(_))));
    }
}
