//! Free graded-commutative algebras over the rationals.
//!
//! An [`Element`] is a finite rational combination of [`Monomial`]s. Odd
//! generators anticommute and square to zero, even generators commute
//! freely. A monomial stands for the product of its generators taken in
//! declaration order, so every sign is fixed once a word is sorted.

use std::cmp::Ordering;
use std::collections::{BTreeMap, HashMap};
use std::fmt;
use std::ops::{Add, Mul, Neg, Sub};
use std::sync::Arc;

use num_bigint::BigInt;
use num_rational::BigRational;
use num_traits::{One, Signed, Zero};

use crate::error::{Error, Result};

/// Exact rational coefficient.
pub type Scalar = BigRational;

pub fn scalar(n: i64) -> Scalar {
    BigRational::from_integer(BigInt::from(n))
}

pub fn ratio(n: i64, d: i64) -> Scalar {
    BigRational::new(BigInt::from(n), BigInt::from(d))
}

#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub struct Generator {
    pub name: String,
    pub degree: u32,
}

impl Generator {
    pub fn new(name: impl Into<String>, degree: u32) -> Self {
        Self {
            name: name.into(),
            degree,
        }
    }

    pub fn is_odd(&self) -> bool {
        self.degree % 2 == 1
    }
}

/// The free graded-commutative algebra on an ordered list of generators.
#[derive(Debug)]
pub struct FreeAlgebra {
    generators: Vec<Generator>,
    index: HashMap<String, usize>,
}

impl PartialEq for FreeAlgebra {
    fn eq(&self, other: &Self) -> bool {
        self.generators == other.generators
    }
}

impl Eq for FreeAlgebra {}

impl FreeAlgebra {
    pub fn new(generators: Vec<Generator>) -> Result<Arc<Self>> {
        let mut index = HashMap::with_capacity(generators.len());
        for (i, g) in generators.iter().enumerate() {
            if g.degree == 0 {
                return Err(Error::ZeroDegreeGenerator(g.name.clone()));
            }
            if index.insert(g.name.clone(), i).is_some() {
                return Err(Error::DuplicateGenerator(g.name.clone()));
            }
        }
        Ok(Arc::new(Self { generators, index }))
    }

    /// `n` generators `x1..xn` of degree one.
    pub fn exterior(n: usize) -> Arc<Self> {
        let gens = (1..=n).map(|i| Generator::new(format!("x{i}"), 1)).collect();
        Self::new(gens).expect("distinct names of positive degree")
    }

    pub fn generators(&self) -> &[Generator] {
        &self.generators
    }

    pub fn len(&self) -> usize {
        self.generators.len()
    }

    pub fn is_empty(&self) -> bool {
        self.generators.is_empty()
    }

    pub fn index_of(&self, name: &str) -> Result<usize> {
        self.index
            .get(name)
            .copied()
            .ok_or_else(|| Error::UnknownGenerator(name.to_string()))
    }

    /// True when every generator is odd, i.e. the algebra is finite dimensional.
    pub fn is_exterior(&self) -> bool {
        self.generators.iter().all(Generator::is_odd)
    }

    /// Top nonzero degree, if the algebra is finite dimensional.
    pub fn top_degree(&self) -> Option<u32> {
        self.is_exterior()
            .then(|| self.generators.iter().map(|g| g.degree).sum())
    }

    pub fn unit_monomial(&self) -> Monomial {
        Monomial {
            degree: 0,
            exps: vec![0; self.len()],
        }
    }

    pub fn generator_monomial(&self, i: usize) -> Monomial {
        let mut exps = vec![0; self.len()];
        exps[i] = 1;
        Monomial {
            degree: self.generators[i].degree,
            exps,
        }
    }

    pub fn monomial(&self, exps: Vec<u32>) -> Result<Monomial> {
        if exps.len() != self.len() {
            return Err(Error::Dimension {
                expected: self.len(),
                found: exps.len(),
            });
        }
        let mut degree = 0;
        for (g, &e) in self.generators.iter().zip(&exps) {
            if g.is_odd() && e > 1 {
                return Err(Error::Precondition(format!(
                    "odd generator `{}` with exponent {e}",
                    g.name
                )));
            }
            degree += g.degree * e;
        }
        Ok(Monomial { degree, exps })
    }

    /// Sorts a word of generator indices into a monomial.
    ///
    /// Returns `None` when an odd generator repeats, otherwise the sign of
    /// the sorting permutation restricted to odd entries.
    pub fn normalize_indices(&self, word: &[usize]) -> Option<(i8, Monomial)> {
        let mut exps = vec![0u32; self.len()];
        let mut degree = 0;
        let mut inversions = 0usize;
        for (pos, &i) in word.iter().enumerate() {
            let g = &self.generators[i];
            if g.is_odd() {
                if exps[i] > 0 {
                    return None;
                }
                inversions += word[..pos]
                    .iter()
                    .filter(|&&j| j > i && self.generators[j].is_odd())
                    .count();
            }
            exps[i] += 1;
            degree += g.degree;
        }
        let sign = if inversions.is_multiple_of(2) { 1 } else { -1 };
        Some((sign, Monomial { degree, exps }))
    }

    pub fn normalize_word<S: AsRef<str>>(&self, word: &[S]) -> Result<Option<(i8, Monomial)>> {
        let indices = word
            .iter()
            .map(|name| self.index_of(name.as_ref()))
            .collect::<Result<Vec<_>>>()?;
        Ok(self.normalize_indices(&indices))
    }

    /// All monomials of total degree `k`, in canonical order.
    pub fn basis_of_degree(&self, k: u32) -> Vec<Monomial> {
        let mut out = Vec::new();
        let mut exps = vec![0u32; self.len()];
        self.fill_basis(0, k, &mut exps, &mut out);
        out.sort();
        out
    }

    fn fill_basis(&self, i: usize, remaining: u32, exps: &mut Vec<u32>, out: &mut Vec<Monomial>) {
        if i == self.len() {
            if remaining == 0 {
                let degree = self
                    .generators
                    .iter()
                    .zip(exps.iter())
                    .map(|(g, &e)| g.degree * e)
                    .sum();
                out.push(Monomial {
                    degree,
                    exps: exps.clone(),
                });
            }
            return;
        }
        let g = &self.generators[i];
        let max = if g.is_odd() {
            1.min(remaining / g.degree)
        } else {
            remaining / g.degree
        };
        for e in 0..=max {
            exps[i] = e;
            self.fill_basis(i + 1, remaining - e * g.degree, exps, out);
        }
        exps[i] = 0;
    }

    /// Product of two monomials with its Koszul sign, or `None` if it vanishes.
    pub fn multiply_monomials(&self, a: &Monomial, b: &Monomial) -> Option<(bool, Monomial)> {
        let mut negative = false;
        let mut odd_in_a_above = 0usize;
        for i in (0..self.len()).rev() {
            if !self.generators[i].is_odd() {
                continue;
            }
            if b.exps[i] > 0 {
                if a.exps[i] > 0 {
                    return None;
                }
                if odd_in_a_above % 2 == 1 {
                    negative = !negative;
                }
            }
            if a.exps[i] > 0 {
                odd_in_a_above += 1;
            }
        }
        let exps = a.exps.iter().zip(&b.exps).map(|(x, y)| x + y).collect();
        Some((
            negative,
            Monomial {
                degree: a.degree + b.degree,
                exps,
            },
        ))
    }

    pub fn format_monomial(&self, m: &Monomial) -> String {
        if m.degree == 0 {
            return "1".to_string();
        }
        let mut parts = Vec::new();
        for (g, &e) in self.generators.iter().zip(&m.exps) {
            match e {
                0 => {}
                1 => parts.push(g.name.clone()),
                _ => parts.push(format!("{}^{e}", g.name)),
            }
        }
        parts.join("*")
    }
}

/// Exponent vector over the generators of a [`FreeAlgebra`].
///
/// Ordered by total degree, then so that earlier generators come first
/// (`x1*x2 < x1*x3 < x2*x3`).
#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub struct Monomial {
    degree: u32,
    exps: Vec<u32>,
}

impl Monomial {
    pub fn degree(&self) -> u32 {
        self.degree
    }

    pub fn exponents(&self) -> &[u32] {
        &self.exps
    }

    pub fn is_unit(&self) -> bool {
        self.degree == 0
    }

    /// Generator indices with multiplicity, in declaration order.
    pub fn word(&self) -> Vec<usize> {
        self.exps
            .iter()
            .enumerate()
            .flat_map(|(i, &e)| std::iter::repeat_n(i, e as usize))
            .collect()
    }

    /// Re-indexes into a larger algebra whose generators contain these at `offset`.
    pub(crate) fn embed(&self, offset: usize, len: usize) -> Monomial {
        let mut exps = vec![0; len];
        exps[offset..offset + self.exps.len()].copy_from_slice(&self.exps);
        Monomial {
            degree: self.degree,
            exps,
        }
    }
}

impl Ord for Monomial {
    fn cmp(&self, other: &Self) -> Ordering {
        self.degree
            .cmp(&other.degree)
            .then_with(|| other.exps.cmp(&self.exps))
    }
}

impl PartialOrd for Monomial {
    fn partial_cmp(&self, other: &Self) -> Option<Ordering> {
        Some(self.cmp(other))
    }
}

/// A rational linear combination of monomials.
#[derive(Clone)]
pub struct Element {
    algebra: Arc<FreeAlgebra>,
    terms: BTreeMap<Monomial, Scalar>,
}

impl PartialEq for Element {
    fn eq(&self, other: &Self) -> bool {
        same_algebra(&self.algebra, &other.algebra) && self.terms == other.terms
    }
}

impl Eq for Element {}

pub(crate) fn same_algebra(a: &Arc<FreeAlgebra>, b: &Arc<FreeAlgebra>) -> bool {
    Arc::ptr_eq(a, b) || **a == **b
}

impl Element {
    pub fn zero(algebra: &Arc<FreeAlgebra>) -> Self {
        Self {
            algebra: Arc::clone(algebra),
            terms: BTreeMap::new(),
        }
    }

    pub fn one(algebra: &Arc<FreeAlgebra>) -> Self {
        Self::from_monomial(algebra, algebra.unit_monomial(), Scalar::one())
    }

    pub fn constant(algebra: &Arc<FreeAlgebra>, c: Scalar) -> Self {
        Self::from_monomial(algebra, algebra.unit_monomial(), c)
    }

    pub fn generator(algebra: &Arc<FreeAlgebra>, i: usize) -> Self {
        Self::from_monomial(algebra, algebra.generator_monomial(i), Scalar::one())
    }

    pub fn named(algebra: &Arc<FreeAlgebra>, name: &str) -> Result<Self> {
        Ok(Self::generator(algebra, algebra.index_of(name)?))
    }

    /// Product of the named generators in the given order, e.g. `["x2", "x5", "x6"]`.
    pub fn word<S: AsRef<str>>(algebra: &Arc<FreeAlgebra>, word: &[S]) -> Result<Self> {
        Ok(match algebra.normalize_word(word)? {
            None => Self::zero(algebra),
            Some((sign, m)) => Self::from_monomial(algebra, m, scalar(i64::from(sign))),
        })
    }

    pub fn from_monomial(algebra: &Arc<FreeAlgebra>, m: Monomial, c: Scalar) -> Self {
        let mut terms = BTreeMap::new();
        if !c.is_zero() {
            terms.insert(m, c);
        }
        Self {
            algebra: Arc::clone(algebra),
            terms,
        }
    }

    pub fn from_terms(
        algebra: &Arc<FreeAlgebra>,
        terms: impl IntoIterator<Item = (Monomial, Scalar)>,
    ) -> Self {
        let mut e = Self::zero(algebra);
        for (m, c) in terms {
            e.add_term(m, c);
        }
        e
    }

    pub fn algebra(&self) -> &Arc<FreeAlgebra> {
        &self.algebra
    }

    pub fn terms(&self) -> impl Iterator<Item = (&Monomial, &Scalar)> {
        self.terms.iter()
    }

    pub fn num_terms(&self) -> usize {
        self.terms.len()
    }

    pub fn is_zero(&self) -> bool {
        self.terms.is_empty()
    }

    pub fn coefficient(&self, m: &Monomial) -> Scalar {
        self.terms.get(m).cloned().unwrap_or_else(Scalar::zero)
    }

    /// Degree of a nonzero homogeneous element.
    pub fn degree(&self) -> Option<u32> {
        let mut degrees = self.terms.keys().map(Monomial::degree);
        let first = degrees.next()?;
        degrees.all(|d| d == first).then_some(first)
    }

    /// True for zero and for elements whose monomials share one degree.
    pub fn is_homogeneous(&self) -> bool {
        self.is_zero() || self.degree().is_some()
    }

    pub fn is_homogeneous_of(&self, k: u32) -> bool {
        self.terms.keys().all(|m| m.degree == k)
    }

    pub fn max_degree(&self) -> Option<u32> {
        self.terms.keys().map(Monomial::degree).max()
    }

    fn add_term(&mut self, m: Monomial, c: Scalar) {
        if c.is_zero() {
            return;
        }
        match self.terms.entry(m) {
            std::collections::btree_map::Entry::Vacant(v) => {
                v.insert(c);
            }
            std::collections::btree_map::Entry::Occupied(mut o) => {
                *o.get_mut() += c;
                if o.get().is_zero() {
                    o.remove();
                }
            }
        }
    }

    fn check(&self, other: &Self) -> Result<()> {
        if same_algebra(&self.algebra, &other.algebra) {
            Ok(())
        } else {
            Err(Error::MixedAlgebras)
        }
    }

    pub fn try_add(&self, other: &Self) -> Result<Self> {
        self.check(other)?;
        let mut out = self.clone();
        for (m, c) in &other.terms {
            out.add_term(m.clone(), c.clone());
        }
        Ok(out)
    }

    pub fn try_sub(&self, other: &Self) -> Result<Self> {
        self.try_add(&other.scale(&-Scalar::one()))
    }

    pub fn try_mul(&self, other: &Self) -> Result<Self> {
        self.check(other)?;
        let mut out = Self::zero(&self.algebra);
        for (ma, ca) in &self.terms {
            for (mb, cb) in &other.terms {
                if let Some((negative, m)) = self.algebra.multiply_monomials(ma, mb) {
                    let c = ca * cb;
                    out.add_term(m, if negative { -c } else { c });
                }
            }
        }
        Ok(out)
    }

    pub fn scale(&self, c: &Scalar) -> Self {
        if c.is_zero() {
            return Self::zero(&self.algebra);
        }
        Self {
            algebra: Arc::clone(&self.algebra),
            terms: self
                .terms
                .iter()
                .map(|(m, x)| (m.clone(), x * c))
                .collect(),
        }
    }

    pub fn pow(&self, n: u32) -> Self {
        let mut out = Self::one(&self.algebra);
        for _ in 0..n {
            out = &out * self;
        }
        out
    }

    /// Restriction to the monomials of degree `k`.
    pub fn component(&self, k: u32) -> Self {
        Self {
            algebra: Arc::clone(&self.algebra),
            terms: self
                .terms
                .iter()
                .filter(|(m, _)| m.degree == k)
                .map(|(m, c)| (m.clone(), c.clone()))
                .collect(),
        }
    }

    /// Transports the element into `target`, whose generators contain
    /// this algebra's generators consecutively starting at `offset`.
    pub(crate) fn embed(&self, target: &Arc<FreeAlgebra>, offset: usize) -> Self {
        Self {
            algebra: Arc::clone(target),
            terms: self
                .terms
                .iter()
                .map(|(m, c)| (m.embed(offset, target.len()), c.clone()))
                .collect(),
        }
    }
}

/// Exact linear combination `Σ cᵢ·eᵢ`.
pub fn linear_combine(algebra: &Arc<FreeAlgebra>, terms: &[(Scalar, Element)]) -> Result<Element> {
    let mut out = Element::zero(algebra);
    for (c, e) in terms {
        out = out.try_add(&e.scale(c))?;
    }
    Ok(out)
}

impl fmt::Debug for Element {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "Element({self})")
    }
}

impl fmt::Display for Element {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.terms.is_empty() {
            return f.write_str("0");
        }
        for (i, (m, c)) in self.terms.iter().enumerate() {
            let negative = c.is_negative();
            let abs = c.abs();
            match (i, negative) {
                (0, true) => f.write_str("-")?,
                (0, false) => {}
                (_, true) => f.write_str(" - ")?,
                (_, false) => f.write_str(" + ")?,
            }
            if m.is_unit() {
                write!(f, "{abs}")?;
            } else if abs.is_one() {
                f.write_str(&self.algebra.format_monomial(m))?;
            } else {
                write!(f, "{abs}*{}", self.algebra.format_monomial(m))?;
            }
        }
        Ok(())
    }
}

macro_rules! binop {
    ($trait:ident, $method:ident, $checked:ident) => {
        impl $trait<&Element> for &Element {
            type Output = Element;

            /// Panics if the operands belong to different algebras.
            fn $method(self, rhs: &Element) -> Element {
                self.$checked(rhs).expect("operands from the same algebra")
            }
        }

        impl $trait<Element> for Element {
            type Output = Element;

            fn $method(self, rhs: Element) -> Element {
                (&self).$method(&rhs)
            }
        }
    };
}

binop!(Add, add, try_add);
binop!(Sub, sub, try_sub);
binop!(Mul, mul, try_mul);

impl Neg for &Element {
    type Output = Element;

    fn neg(self) -> Element {
        self.scale(&-Scalar::one())
    }
}

impl Neg for Element {
    type Output = Element;

    fn neg(self) -> Element {
        -&self
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn six() -> Arc<FreeAlgebra> {
        FreeAlgebra::exterior(6)
    }

    fn w(alg: &Arc<FreeAlgebra>, word: &[&str]) -> Element {
        Element::word(alg, word).unwrap()
    }

    #[test]
    fn normalize_word_signs() {
        let alg = six();
        let (sign, m) = alg.normalize_word(&["x6", "x2", "x5"]).unwrap().unwrap();
        assert_eq!(sign, 1);
        assert_eq!(alg.format_monomial(&m), "x2*x5*x6");

        assert!(alg.normalize_word(&["x1", "x1"]).unwrap().is_none());

        let (sign, m) = alg.normalize_word(&["x2", "x1"]).unwrap().unwrap();
        assert_eq!(sign, -1);
        assert_eq!(alg.format_monomial(&m), "x1*x2");

        assert!(matches!(
            alg.normalize_word(&["x1", "x9"]),
            Err(Error::UnknownGenerator(name)) if name == "x9"
        ));
    }

    #[test]
    fn even_generators_commute() {
        let alg = FreeAlgebra::new(vec![Generator::new("u", 2), Generator::new("v", 3)]).unwrap();
        let (sign, m) = alg.normalize_word(&["v", "u", "u"]).unwrap().unwrap();
        assert_eq!(sign, 1);
        assert_eq!(alg.format_monomial(&m), "u^2*v");
        assert!(alg.normalize_word(&["v", "u", "v"]).unwrap().is_none());
    }

    #[test]
    fn wedge_examples() {
        let alg = six();
        let x6 = w(&alg, &["x6"]);
        assert_eq!(&x6 * &w(&alg, &["x4", "x5"]), w(&alg, &["x4", "x5", "x6"]));

        let omega = w(&alg, &["x1", "x6"]).scale(&scalar(2)) + w(&alg, &["x2", "x5"])
            - w(&alg, &["x3", "x4"]);
        assert_eq!(
            &x6 * &omega,
            w(&alg, &["x2", "x5", "x6"]) - w(&alg, &["x3", "x4", "x6"])
        );
        assert_eq!(&Element::one(&alg) * &omega, omega);
    }

    #[test]
    fn linear_combinations() {
        let alg = six();
        let a = w(&alg, &["x1", "x6"]) + w(&alg, &["x2", "x5"]);
        let b = w(&alg, &["x1", "x6"]) - w(&alg, &["x3", "x4"]);
        let omega = linear_combine(&alg, &[(scalar(1), a.clone()), (scalar(1), b)]).unwrap();
        assert_eq!(omega.to_string(), "2*x1*x6 + x2*x5 - x3*x4");

        let zero = linear_combine(&alg, &[(scalar(1), a.clone()), (scalar(-1), a)]).unwrap();
        assert!(zero.is_zero());

        let half = linear_combine(&alg, &[(ratio(1, 2), w(&alg, &["x1", "x6"]).scale(&scalar(2)))])
            .unwrap();
        assert_eq!(half, w(&alg, &["x1", "x6"]));
    }

    #[test]
    fn mixed_algebras_are_rejected() {
        let a = Element::generator(&six(), 0);
        let b = Element::generator(&FreeAlgebra::exterior(3), 0);
        assert!(matches!(a.try_mul(&b), Err(Error::MixedAlgebras)));
        assert!(matches!(a.try_add(&b), Err(Error::MixedAlgebras)));
        // Structurally equal algebras are interchangeable.
        let c = Element::generator(&six(), 1);
        assert!(a.try_mul(&c).is_ok());
    }

    #[test]
    fn basis_counts() {
        let alg = six();
        assert_eq!(alg.basis_of_degree(2).len(), 15);
        let top = alg.basis_of_degree(6);
        assert_eq!(top.len(), 1);
        assert_eq!(alg.format_monomial(&top[0]), "x1*x2*x3*x4*x5*x6");

        let s2 = FreeAlgebra::new(vec![Generator::new("u", 2), Generator::new("v", 3)]).unwrap();
        let b4: Vec<_> = s2
            .basis_of_degree(4)
            .iter()
            .map(|m| s2.format_monomial(m))
            .collect();
        assert_eq!(b4, ["u^2"]);
        assert!(s2.basis_of_degree(6).iter().all(|m| s2.format_monomial(m) != "v^2"));
    }

    #[test]
    fn canonical_order_lists_earlier_generators_first() {
        let alg = six();
        let names: Vec<_> = alg
            .basis_of_degree(2)
            .iter()
            .take(6)
            .map(|m| alg.format_monomial(m))
            .collect();
        assert_eq!(names, ["x1*x2", "x1*x3", "x1*x4", "x1*x5", "x1*x6", "x2*x3"]);
    }

    #[test]
    fn display_formats() {
        let alg = six();
        assert_eq!(Element::zero(&alg).to_string(), "0");
        assert_eq!(Element::one(&alg).to_string(), "1");
        let e = w(&alg, &["x1"]).scale(&ratio(-3, 4)) + Element::constant(&alg, scalar(2));
        assert_eq!(e.to_string(), "2 - 3/4*x1");
    }

    #[test]
    fn degrees() {
        let alg = six();
        let e = w(&alg, &["x1"]) + w(&alg, &["x2", "x3"]);
        assert_eq!(e.degree(), None);
        assert!(!e.is_homogeneous());
        assert!(Element::zero(&alg).is_homogeneous());
        assert_eq!(w(&alg, &["x2", "x3"]).degree(), Some(2));
    }
}
