use thiserror::Error;

use crate::algebra::Element;
use crate::cdga::ValidationIssue;

pub type Result<T, E = Error> = std::result::Result<T, E>;

#[derive(Debug, Error)]
pub enum Error {
    #[error("elements belong to different algebras")]
    MixedAlgebras,
    #[error("unknown generator `{0}`")]
    UnknownGenerator(String),
    #[error("duplicate generator `{0}`")]
    DuplicateGenerator(String),
    #[error("generator `{0}` must have positive degree")]
    ZeroDegreeGenerator(String),
    #[error("element is not homogeneous")]
    NotHomogeneous,
    #[error("expected an element of degree {expected}, found degree {found}")]
    WrongDegree { expected: u32, found: u32 },
    #[error("element {0} is not closed")]
    NotClosed(Element),
    #[error("degree {degree} exceeds the computed range (max degree {cap})")]
    DegreeOverflow { degree: u32, cap: u32 },
    #[error("differential fails validation: {}", format_issues(.0))]
    Invalid(Vec<ValidationIssue>),
    #[error("structure constants are not antisymmetric at ({i}, {j}, {k})")]
    NotAntisymmetric { i: usize, j: usize, k: usize },
    #[error("Jacobi identity fails for ({i}, {j}, {k})")]
    Jacobi { i: usize, j: usize, k: usize },
    #[error("precondition failed: {0}")]
    Precondition(String),
    #[error("divisor is not contained in the numerator")]
    NotSubspace,
    #[error("vector is not in the space")]
    NotInSpace,
    #[error("dimension mismatch: expected {expected}, found {found}")]
    Dimension { expected: usize, found: usize },
    #[error("internal consistency check failed: {0}")]
    Inconsistent(String),
    #[error("unknown catalog entry `{0}`")]
    UnknownCatalog(String),
}

fn format_issues(issues: &[ValidationIssue]) -> String {
    issues
        .iter()
        .map(ToString::to_string)
        .collect::<Vec<_>>()
        .join("; ")
}
