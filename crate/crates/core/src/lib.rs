//! Exact computations in commutative differential graded algebras:
//! cohomology, triple and a-Massey products, tensor products and
//! circle-bundle extensions, with a small text format and CLI.
//!
//! ```
//! use cdga::{catalog, parse_element, triple_massey, Cohomology};
//!
//! let g = catalog("g6_15_m1")?;
//! let h = Cohomology::new(&g, 6);
//! let class = |s: &str| h.class_of(&parse_element(s, &g).unwrap());
//! let m = triple_massey(&h, &class("x6")?, &class("x6")?, &class("2*x1*x6 + x2*x5 - x3*x4")?)?;
//! assert!(!m.vanishes);
//! assert_eq!(m.representative.to_string(), "x4*x5*x6");
//! # Ok::<(), cdga::Error>(())
//! ```

pub mod algebra;
pub mod catalog;
pub mod cdga;
pub mod cli;
pub mod cohomology;
pub mod constructions;
pub mod dsl;
pub mod error;
pub mod linalg;
pub mod massey;
pub mod report;

pub use algebra::{linear_combine, ratio, scalar, Element, FreeAlgebra, Generator, Monomial, Scalar};
pub use catalog::catalog;
pub use cdga::{chevalley_eilenberg, Cdga, StructureConstants, ValidationIssue};
pub use cohomology::{cohomology, Cohomology, CohomologyClass, CohomologySpace};
pub use constructions::{
    circle_extension, gysin_report, symplectic_check, tensor, GysinReport, SymplecticClassChoice,
};
pub use dsl::{parse_algebra, parse_element, AlgebraDocument, Diagnostic, Diagnostics};
pub use error::{Error, Result};
pub use massey::{a_massey, massey_scan, triple_massey, AMasseyResult, MasseyResult, ScanOptions};
