//! Text format for algebras and elements.
//!
//! ```text
//! # comment
//! algebra heisenberg3 {
//!   generators: x1:1, x2:1, x3:1
//!   d x3 = -x1*x2
//! }
//! ```
//!
//! Instead of `d` lines an algebra with degree-one generators may list
//! brackets, `[x1, x2] = x3`, which are dualized into the
//! Chevalley–Eilenberg differential. Expressions use rational literals
//! (`3`, `-1/2`), generator names, `*`, `+`, `-`, `^` with a natural
//! exponent, and parentheses.

mod lexer;
mod parser;

use std::fmt;
use std::sync::Arc;

use serde::Serialize;

use crate::algebra::{Element, FreeAlgebra};
use crate::cdga::{chevalley_eilenberg_on, Cdga, StructureConstants};
use crate::error::Result;

pub use parser::{parse_algebra, parse_element, parse_element_in};

/// Byte range plus the 1-based line and column of its start.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct Span {
    pub start: usize,
    pub end: usize,
    pub line: usize,
    pub column: usize,
}

impl Span {
    pub fn new(start: usize, end: usize, line: usize, column: usize) -> Self {
        Self {
            start,
            end,
            line,
            column,
        }
    }

    pub(crate) fn to(self, other: Span) -> Span {
        Span {
            end: other.end.max(self.end),
            ..self
        }
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize)]
#[serde(rename_all = "lowercase")]
pub enum Severity {
    Error,
    Warning,
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct Diagnostic {
    pub severity: Severity,
    pub message: String,
    pub line: usize,
    pub column: usize,
    /// The source line the diagnostic points into.
    pub excerpt: String,
    #[serde(skip)]
    pub span: Span,
}

impl Diagnostic {
    pub(crate) fn error(message: impl Into<String>, span: Span) -> Self {
        Self {
            severity: Severity::Error,
            message: message.into(),
            line: span.line,
            column: span.column,
            excerpt: String::new(),
            span,
        }
    }
}

impl fmt::Display for Diagnostic {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let severity = match self.severity {
            Severity::Error => "error",
            Severity::Warning => "warning",
        };
        writeln!(f, "{severity}: {}", self.message)?;
        writeln!(f, " --> {}:{}", self.line, self.column)?;
        writeln!(f, "  | {}", self.excerpt)?;
        let pad: String = self
            .excerpt
            .chars()
            .take(self.column.saturating_sub(1))
            .map(|c| if c == '\t' { '\t' } else { ' ' })
            .collect();
        write!(f, "  | {pad}^")
    }
}

/// Every problem found in one input.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Diagnostics(pub Vec<Diagnostic>);

impl Diagnostics {
    pub fn iter(&self) -> impl Iterator<Item = &Diagnostic> {
        self.0.iter()
    }

    pub fn len(&self) -> usize {
        self.0.len()
    }

    pub fn is_empty(&self) -> bool {
        self.0.is_empty()
    }
}

impl fmt::Display for Diagnostics {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        for (i, d) in self.0.iter().enumerate() {
            if i > 0 {
                writeln!(f)?;
            }
            write!(f, "{d}")?;
        }
        Ok(())
    }
}

impl std::error::Error for Diagnostics {}

#[derive(Debug, Clone, PartialEq)]
pub struct GeneratorDecl {
    pub name: String,
    pub degree: u32,
    pub span: Span,
}

#[derive(Debug, Clone, PartialEq)]
pub struct DifferentialLine {
    pub generator: usize,
    pub value: Element,
    pub span: Span,
}

#[derive(Debug, Clone, PartialEq)]
pub struct BracketLine {
    pub left: usize,
    pub right: usize,
    pub value: Element,
    pub span: Span,
}

#[derive(Debug, Clone, PartialEq)]
pub enum Body {
    Differential(Vec<DifferentialLine>),
    Brackets(Vec<BracketLine>),
}

/// A parsed algebra definition whose names and degrees have been checked.
#[derive(Debug, Clone, PartialEq)]
pub struct AlgebraDocument {
    pub name: String,
    pub generators: Vec<GeneratorDecl>,
    pub algebra: Arc<FreeAlgebra>,
    pub body: Body,
}

impl AlgebraDocument {
    /// Validates the differential (`d∘d = 0`, or Jacobi for brackets).
    pub fn to_cdga(&self) -> Result<Cdga> {
        match &self.body {
            Body::Differential(lines) => {
                let mut differential = vec![Element::zero(&self.algebra); self.algebra.len()];
                for line in lines {
                    differential[line.generator] = line.value.clone();
                }
                Cdga::validate(Arc::clone(&self.algebra), differential)
            }
            Body::Brackets(lines) => {
                let mut sc = StructureConstants::zero(self.algebra.len());
                for line in lines {
                    for (m, c) in line.value.terms() {
                        let k = m
                            .exponents()
                            .iter()
                            .position(|&e| e == 1)
                            .expect("bracket values are linear");
                        sc.set_bracket(line.left, line.right, k, c.clone());
                    }
                }
                chevalley_eilenberg_on(Arc::clone(&self.algebra), &sc)
            }
        }
    }
}

pub(crate) fn attach_excerpts(src: &str, diags: &mut [Diagnostic]) {
    let lines: Vec<&str> = src.lines().collect();
    for d in diags {
        d.excerpt = lines.get(d.line.wrapping_sub(1)).copied().unwrap_or("").to_string();
    }
}
