//! Differential graded algebras built from a differential on generators.

use std::fmt;
use std::sync::Arc;

use num_traits::Zero;

use crate::algebra::{scalar, Element, FreeAlgebra, Monomial, Scalar};
use crate::error::{Error, Result};

/// One reason a differential on generators was rejected.
#[derive(Debug, Clone, PartialEq)]
pub enum ValidationIssue {
    /// `d(g)` is not homogeneous of degree `|g| + 1`.
    Degree { generator: String, expected: u32, found: Option<u32> },
    /// `d(d(g))` is the nonzero `residue`.
    SquareNonZero { generator: String, residue: Element },
    /// `d(g)` lives in another algebra.
    ForeignElement { generator: String },
}

impl fmt::Display for ValidationIssue {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            Self::Degree {
                generator,
                expected,
                found: Some(found),
            } => write!(f, "d {generator} has degree {found}, expected {expected}"),
            Self::Degree {
                generator, expected, ..
            } => write!(f, "d {generator} is not homogeneous of degree {expected}"),
            Self::SquareNonZero { generator, residue } => {
                write!(f, "d(d {generator}) = {residue} is not zero")
            }
            Self::ForeignElement { generator } => {
                write!(f, "d {generator} refers to another algebra")
            }
        }
    }
}

/// A validated commutative differential graded algebra.
///
/// Holds `d` on each generator; `d` on everything else follows from
/// linearity and the graded Leibniz rule.
#[derive(Debug, Clone, PartialEq)]
pub struct Cdga {
    algebra: Arc<FreeAlgebra>,
    differential: Vec<Element>,
}

impl Cdga {
    /// Checks degrees and `d∘d = 0` on every generator.
    pub fn validate(algebra: Arc<FreeAlgebra>, differential: Vec<Element>) -> Result<Self> {
        if differential.len() != algebra.len() {
            return Err(Error::Dimension {
                expected: algebra.len(),
                found: differential.len(),
            });
        }
        let mut issues = Vec::new();
        for (g, dg) in algebra.generators().iter().zip(&differential) {
            if !crate::algebra::same_algebra(dg.algebra(), &algebra) {
                issues.push(ValidationIssue::ForeignElement {
                    generator: g.name.clone(),
                });
            } else if !dg.is_homogeneous_of(g.degree + 1) {
                issues.push(ValidationIssue::Degree {
                    generator: g.name.clone(),
                    expected: g.degree + 1,
                    found: dg.degree(),
                });
            }
        }
        if !issues.is_empty() {
            return Err(Error::Invalid(issues));
        }
        let cdga = Self {
            algebra,
            differential,
        };
        for (g, dg) in cdga.algebra.generators().iter().zip(&cdga.differential) {
            let residue = cdga.d(dg);
            if !residue.is_zero() {
                issues.push(ValidationIssue::SquareNonZero {
                    generator: g.name.clone(),
                    residue,
                });
            }
        }
        if issues.is_empty() {
            Ok(cdga)
        } else {
            Err(Error::Invalid(issues))
        }
    }

    /// Builds from `(generator name, d(generator))` pairs; unnamed generators are closed.
    pub fn from_named(
        algebra: &Arc<FreeAlgebra>,
        entries: &[(&str, Element)],
    ) -> Result<Self> {
        let mut differential = vec![Element::zero(algebra); algebra.len()];
        for (name, value) in entries {
            differential[algebra.index_of(name)?] = value.clone();
        }
        Self::validate(Arc::clone(algebra), differential)
    }

    /// The algebra with zero differential.
    pub fn formal(algebra: &Arc<FreeAlgebra>) -> Self {
        Self {
            algebra: Arc::clone(algebra),
            differential: vec![Element::zero(algebra); algebra.len()],
        }
    }

    pub fn algebra(&self) -> &Arc<FreeAlgebra> {
        &self.algebra
    }

    pub fn generator_differential(&self, i: usize) -> &Element {
        &self.differential[i]
    }

    pub fn differentials(&self) -> &[Element] {
        &self.differential
    }

    pub fn has_zero_differential(&self) -> bool {
        self.differential.iter().all(Element::is_zero)
    }

    /// Generator `name` as an element.
    pub fn gen(&self, name: &str) -> Result<Element> {
        Element::named(&self.algebra, name)
    }

    /// Product of named generators, e.g. `["x4", "x5"]`.
    pub fn word<S: AsRef<str>>(&self, word: &[S]) -> Result<Element> {
        Element::word(&self.algebra, word)
    }

    /// Leibniz extension of the differential to an arbitrary element.
    ///
    /// Panics if `a` belongs to a different algebra; see [`Cdga::try_d`].
    pub fn d(&self, a: &Element) -> Element {
        self.try_d(a).expect("element from this algebra")
    }

    pub fn try_d(&self, a: &Element) -> Result<Element> {
        if !crate::algebra::same_algebra(a.algebra(), &self.algebra) {
            return Err(Error::MixedAlgebras);
        }
        let mut out = Element::zero(&self.algebra);
        for (m, c) in a.terms() {
            out = &out + &self.d_monomial(m).scale(c);
        }
        Ok(out)
    }

    /// `d(g₁⋯gₘ) = Σ (−1)^{|g₁⋯gᵢ₋₁|} g₁⋯gᵢ₋₁ · d(gᵢ) · gᵢ₊₁⋯gₘ`
    pub fn d_monomial(&self, m: &Monomial) -> Element {
        let word = m.word();
        let mut out = Element::zero(&self.algebra);
        let mut prefix_degree = 0;
        for (pos, &g) in word.iter().enumerate() {
            let dg = &self.differential[g];
            if !dg.is_zero() {
                let prefix = self.word_element(&word[..pos]);
                let suffix = self.word_element(&word[pos + 1..]);
                let mut term = &(&prefix * dg) * &suffix;
                if prefix_degree % 2 == 1 {
                    term = -term;
                }
                out = &out + &term;
            }
            prefix_degree += self.algebra.generators()[g].degree;
        }
        out
    }

    fn word_element(&self, word: &[usize]) -> Element {
        match self.algebra.normalize_indices(word) {
            None => Element::zero(&self.algebra),
            Some((sign, m)) => Element::from_monomial(&self.algebra, m, scalar(i64::from(sign))),
        }
    }

    pub fn is_closed(&self, a: &Element) -> bool {
        self.d(a).is_zero()
    }

    /// DSL source describing this algebra.
    pub fn to_source(&self, name: &str) -> String {
        let gens = self
            .algebra
            .generators()
            .iter()
            .map(|g| format!("{}:{}", g.name, g.degree))
            .collect::<Vec<_>>()
            .join(", ");
        let mut out = format!("algebra {name} {{\n  generators: {gens}\n");
        for (g, dg) in self.algebra.generators().iter().zip(&self.differential) {
            if !dg.is_zero() {
                out.push_str(&format!("  d {} = {dg}\n", g.name));
            }
        }
        out.push_str("}\n");
        out
    }
}

/// Structure constants `[eᵢ, eⱼ] = Σₖ c[i][j][k] eₖ` of a Lie algebra.
#[derive(Debug, Clone, PartialEq)]
pub struct StructureConstants {
    dim: usize,
    c: Vec<Scalar>,
}

impl StructureConstants {
    pub fn zero(dim: usize) -> Self {
        Self {
            dim,
            c: vec![Scalar::zero(); dim * dim * dim],
        }
    }

    pub fn dim(&self) -> usize {
        self.dim
    }

    fn idx(&self, i: usize, j: usize, k: usize) -> usize {
        (i * self.dim + j) * self.dim + k
    }

    pub fn get(&self, i: usize, j: usize, k: usize) -> &Scalar {
        &self.c[self.idx(i, j, k)]
    }

    /// Sets `c_{ij}^k` and, antisymmetrically, `c_{ji}^k` (0-based indices).
    pub fn set_bracket(&mut self, i: usize, j: usize, k: usize, value: Scalar) {
        let a = self.idx(i, j, k);
        let b = self.idx(j, i, k);
        self.c[b] = -value.clone();
        self.c[a] = value;
    }

    /// Sets a single entry without touching its transpose.
    pub fn set_raw(&mut self, i: usize, j: usize, k: usize, value: Scalar) {
        let a = self.idx(i, j, k);
        self.c[a] = value;
    }

    pub fn check_antisymmetry(&self) -> Result<()> {
        let n = self.dim;
        for i in 0..n {
            for j in i..n {
                for k in 0..n {
                    if *self.get(i, j, k) != -self.get(j, i, k) {
                        return Err(Error::NotAntisymmetric { i, j, k });
                    }
                }
            }
        }
        Ok(())
    }

    /// `[[eᵢ,eⱼ],eₖ] + [[eⱼ,eₖ],eᵢ] + [[eₖ,eᵢ],eⱼ] = 0` for all `i < j < k`.
    pub fn check_jacobi(&self) -> Result<()> {
        let n = self.dim;
        for i in 0..n {
            for j in i + 1..n {
                for k in j + 1..n {
                    for l in 0..n {
                        let mut sum = Scalar::zero();
                        for m in 0..n {
                            sum += self.get(i, j, m) * self.get(m, k, l);
                            sum += self.get(j, k, m) * self.get(m, i, l);
                            sum += self.get(k, i, m) * self.get(m, j, l);
                        }
                        if !sum.is_zero() {
                            return Err(Error::Jacobi { i, j, k });
                        }
                    }
                }
            }
        }
        Ok(())
    }
}

/// Chevalley–Eilenberg algebra on generators `x1..xn` with
/// `d xᵏ = −Σ_{i<j} c_{ij}^k xⁱ xʲ`.
pub fn chevalley_eilenberg(sc: &StructureConstants) -> Result<Cdga> {
    chevalley_eilenberg_on(FreeAlgebra::exterior(sc.dim()), sc)
}

/// As [`chevalley_eilenberg`], on caller-named degree-one generators.
pub fn chevalley_eilenberg_on(algebra: Arc<FreeAlgebra>, sc: &StructureConstants) -> Result<Cdga> {
    sc.check_antisymmetry()?;
    sc.check_jacobi()?;
    let n = sc.dim();
    if algebra.len() != n || algebra.generators().iter().any(|g| g.degree != 1) {
        return Err(Error::Precondition(format!(
            "structure constants need {n} generators of degree 1"
        )));
    }
    let mut differential = Vec::with_capacity(n);
    for k in 0..n {
        let mut dk = Element::zero(&algebra);
        for i in 0..n {
            for j in i + 1..n {
                let c = sc.get(i, j, k);
                if !c.is_zero() {
                    let mut exps = vec![0; n];
                    exps[i] = 1;
                    exps[j] = 1;
                    let m = algebra.monomial(exps)?;
                    dk = &dk - &Element::from_monomial(&algebra, m, c.clone());
                }
            }
        }
        differential.push(dk);
    }
    Cdga::validate(algebra, differential)
}
