//! Triple Massey products and a-Massey products.
//!
//! Every product is returned as a coset: a representative class plus the
//! subspace it is defined modulo. A product vanishes when the
//! representative lies in that subspace.

use std::collections::BTreeSet;

use crate::algebra::{Element, Scalar};
use crate::cohomology::{CohomologyClass, Cohomology};
use crate::error::{Error, Result};
use crate::linalg::{self, SparseMatrix, Subspace};

#[derive(Debug, Clone, PartialEq)]
pub struct MasseyResult {
    /// Degrees `(p₁, p₂, p₃)` of the arguments.
    pub degrees: [u32; 3],
    /// Cocycles `α₁, α₂, α₃` used for the arguments.
    pub arguments: [Element; 3],
    /// `d ξ₁₂ = α₁α₂`.
    pub xi12: Element,
    /// `d ξ₂₃ = α₂α₃`.
    pub xi23: Element,
    /// `α₁ξ₂₃ + (−1)^{p₁+1} ξ₁₂α₃`.
    pub representative: Element,
    /// Class of the representative in `H^{p₁+p₂+p₃−1}`.
    pub class: CohomologyClass,
    /// `a₁·H^{p₂+p₃−1} + H^{p₁+p₂−1}·a₃`, in coordinates of the target space.
    pub indeterminacy: Subspace,
    pub vanishes: bool,
}

impl MasseyResult {
    pub fn degree(&self) -> u32 {
        self.class.degree()
    }

    /// Representative class reduced modulo the indeterminacy.
    pub fn reduced_coordinates(&self) -> Vec<Scalar> {
        linalg::dense_from_sparse(
            &self.indeterminacy.reduce(&self.class.coordinate_vector()),
            self.indeterminacy.ambient(),
        )
    }
}

#[derive(Debug, Clone, PartialEq)]
pub struct AMasseyResult {
    /// Cocycles `α, β₁, β₂, β₃`.
    pub arguments: [Element; 4],
    /// `d ξᵢ = α·βᵢ`.
    pub primitives: [Element; 3],
    /// `ξ₁ξ₂β₃ + ξ₂ξ₃β₁ + ξ₃ξ₁β₂`.
    pub representative: Element,
    pub class: CohomologyClass,
    /// `Σ_{i<j} ⟨bᵢ, a, bⱼ⟩·H³`, in coordinates of `H⁸`.
    pub denominator: Subspace,
    pub vanishes: bool,
}

fn check_vanishing_product(h: &Cohomology, a: &CohomologyClass, b: &CohomologyClass, what: &str) -> Result<()> {
    if h.cup(a, b)?.is_zero() {
        Ok(())
    } else {
        Err(Error::Precondition(format!("{what} is not zero in cohomology")))
    }
}

fn require_primitive(h: &Cohomology, k: u32, e: &Element, what: &str) -> Result<Element> {
    h.primitive(k, e)?
        .ok_or_else(|| Error::Precondition(format!("{what} = {e} is not exact")))
}

fn check_primitive(h: &Cohomology, xi: &Element, target: &Element, what: &str) -> Result<()> {
    if h.cdga().try_d(xi)? == *target {
        Ok(())
    } else {
        Err(Error::Precondition(format!("d {what} does not equal {target}")))
    }
}

fn positive_degree(c: &CohomologyClass) -> Result<u32> {
    match c.degree() {
        0 => Err(Error::Precondition("Massey product arguments need positive degree".into())),
        p => Ok(p),
    }
}

/// `⟨a₁, a₂, a₃⟩` with canonical primitives.
pub fn triple_massey(
    h: &Cohomology,
    a1: &CohomologyClass,
    a2: &CohomologyClass,
    a3: &CohomologyClass,
) -> Result<MasseyResult> {
    let [p1, p2, p3] = [positive_degree(a1)?, positive_degree(a2)?, positive_degree(a3)?];
    let target = p1 + p2 + p3 - 1;
    if target > h.cap() {
        return Err(Error::DegreeOverflow { degree: target, cap: h.cap() });
    }
    check_vanishing_product(h, a1, a2, "a1·a2")?;
    check_vanishing_product(h, a2, a3, "a2·a3")?;
    let (x1, x2, x3) = (a1.representative(), a2.representative(), a3.representative());
    let xi12 = require_primitive(h, p1 + p2, &(x1 * x2), "α1·α2")?;
    let xi23 = require_primitive(h, p2 + p3, &(x2 * x3), "α2·α3")?;
    triple_massey_with(h, a1, a2, a3, &xi12, &xi23)
}

/// `⟨a₁, a₂, a₃⟩` with caller-chosen primitives `ξ₁₂`, `ξ₂₃`.
pub fn triple_massey_with(
    h: &Cohomology,
    a1: &CohomologyClass,
    a2: &CohomologyClass,
    a3: &CohomologyClass,
    xi12: &Element,
    xi23: &Element,
) -> Result<MasseyResult> {
    let [p1, p2, p3] = [positive_degree(a1)?, positive_degree(a2)?, positive_degree(a3)?];
    let target = p1 + p2 + p3 - 1;
    if target > h.cap() {
        return Err(Error::DegreeOverflow { degree: target, cap: h.cap() });
    }
    let (x1, x2, x3) = (a1.representative(), a2.representative(), a3.representative());
    check_primitive(h, xi12, &(x1 * x2), "ξ12")?;
    check_primitive(h, xi23, &(x2 * x3), "ξ23")?;

    let tail = xi12 * x3;
    let representative = if p1 % 2 == 1 {
        &(x1 * xi23) + &tail
    } else {
        &(x1 * xi23) - &tail
    };
    assert!(
        h.cdga().is_closed(&representative),
        "Massey representative must be closed"
    );
    let class = h.class_in(target, &representative)?;
    let indeterminacy = h
        .left_multiples(a1, p2 + p3 - 1)?
        .sum(&h.right_multiples(a3, p1 + p2 - 1)?);
    let vanishes = indeterminacy.contains(&class.coordinate_vector());
    Ok(MasseyResult {
        degrees: [p1, p2, p3],
        arguments: [x1.clone(), x2.clone(), x3.clone()],
        xi12: xi12.clone(),
        xi23: xi23.clone(),
        representative,
        class,
        indeterminacy,
        vanishes,
    })
}

const A_MASSEY_DEGREE: u32 = 8;

fn check_a_massey_args(h: &Cohomology, classes: [&CohomologyClass; 4]) -> Result<()> {
    if h.cap() < A_MASSEY_DEGREE {
        return Err(Error::DegreeOverflow {
            degree: A_MASSEY_DEGREE,
            cap: h.cap(),
        });
    }
    for c in classes {
        if c.degree() != 2 {
            return Err(Error::Precondition(format!(
                "a-Massey arguments must have degree 2, found {}",
                c.degree()
            )));
        }
    }
    Ok(())
}

/// `⟨a; b₁, b₂, b₃⟩` with canonical primitives.
pub fn a_massey(
    h: &Cohomology,
    a: &CohomologyClass,
    b1: &CohomologyClass,
    b2: &CohomologyClass,
    b3: &CohomologyClass,
) -> Result<AMasseyResult> {
    check_a_massey_args(h, [a, b1, b2, b3])?;
    let alpha = a.representative();
    let mut primitives = Vec::with_capacity(3);
    for (i, b) in [b1, b2, b3].into_iter().enumerate() {
        check_vanishing_product(h, a, b, &format!("a·b{}", i + 1))?;
        primitives.push(require_primitive(
            h,
            4,
            &(alpha * b.representative()),
            &format!("α·β{}", i + 1),
        )?);
    }
    let primitives: [Element; 3] = primitives.try_into().expect("three primitives");
    a_massey_with(h, a, b1, b2, b3, &primitives)
}

/// `⟨a; b₁, b₂, b₃⟩` with caller-chosen primitives `ξᵢ`.
pub fn a_massey_with(
    h: &Cohomology,
    a: &CohomologyClass,
    b1: &CohomologyClass,
    b2: &CohomologyClass,
    b3: &CohomologyClass,
    primitives: &[Element; 3],
) -> Result<AMasseyResult> {
    check_a_massey_args(h, [a, b1, b2, b3])?;
    let alpha = a.representative();
    let betas = [b1.representative(), b2.representative(), b3.representative()];
    for (i, (xi, beta)) in primitives.iter().zip(betas).enumerate() {
        check_primitive(h, xi, &(alpha * beta), &format!("ξ{}", i + 1))?;
    }
    let [xi1, xi2, xi3] = primitives;
    let representative = &(&(&(xi1 * xi2) * betas[2]) + &(&(xi2 * xi3) * betas[0]))
        + &(&(xi3 * xi1) * betas[1]);
    assert!(
        h.cdga().is_closed(&representative),
        "a-Massey representative must be closed"
    );
    let class = h.class_in(A_MASSEY_DEGREE, &representative)?;

    let bs = [b1, b2, b3];
    let h3_dim = h.space(3)?.dim();
    let h8_dim = h.space(A_MASSEY_DEGREE)?.dim();
    let mut vectors = Vec::new();
    for (i, j) in [(0, 1), (0, 2), (1, 2)] {
        let inner = triple_massey(h, bs[i], a, bs[j])?;
        let mut values = vec![inner.class.clone()];
        for s in inner.indeterminacy.basis() {
            let coords = linalg::dense_from_sparse(s, inner.indeterminacy.ambient());
            values.push(h.class_from_coordinates(inner.degree(), &coords)?);
        }
        for value in &values {
            for k in 0..h3_dim {
                vectors.push(h.cup(value, &h.basis_class(3, k)?)?.coordinate_vector());
            }
        }
    }
    let denominator = Subspace::from_vectors(h8_dim, vectors);
    let vanishes = denominator.contains(&class.coordinate_vector());
    Ok(AMasseyResult {
        arguments: [alpha.clone(), betas[0].clone(), betas[1].clone(), betas[2].clone()],
        primitives: primitives.clone(),
        representative,
        class,
        denominator,
        vanishes,
    })
}

#[derive(Debug, Clone, Copy, Default, PartialEq, Eq)]
pub struct ScanOptions {
    /// Keep triples that are mirror images `⟨a₃, a₂, a₁⟩` of ones already reported.
    pub full: bool,
}

fn classes_of(h: &Cohomology, k: u32, m: &SparseMatrix) -> Result<Vec<CohomologyClass>> {
    linalg::kernel_basis(m)
        .basis()
        .iter()
        .map(|v| h.class_from_coordinates(k, &linalg::dense_from_sparse(v, m.cols())))
        .collect()
}

/// Searches for non-vanishing triple Massey products in degrees `(p, q, r)`.
///
/// `a₂` runs over the canonical basis of `H^q`, `a₁` over a basis of
/// `{y ∈ Hᵖ : y·a₂ = 0}` and `a₃` over a basis of `{z ∈ Hʳ : a₂·z = 0}`.
/// A clean scan is not a proof of formality.
pub fn massey_scan(h: &Cohomology, degrees: [u32; 3], options: ScanOptions) -> Result<Vec<MasseyResult>> {
    let [p, q, r] = degrees;
    if p == 0 || q == 0 || r == 0 {
        return Err(Error::Precondition("scan degrees must be positive".into()));
    }
    let target = p + q + r - 1;
    if target > h.cap() {
        return Err(Error::DegreeOverflow { degree: target, cap: h.cap() });
    }
    let mut seen = BTreeSet::new();
    let mut out = Vec::new();
    for i in 0..h.space(q)?.dim() {
        let a2 = h.basis_class(q, i)?;
        let lefts = classes_of(h, p, &h.cup_map_matrix(&a2, p)?)?;
        let rights = classes_of(h, r, &h.cup_map_matrix_left(&a2, r)?)?;
        for a1 in &lefts {
            for a3 in &rights {
                let result = triple_massey(h, a1, &a2, a3)?;
                if result.vanishes {
                    continue;
                }
                let key = scan_key(a1, &a2, a3, options.full);
                if seen.insert(key) {
                    out.push(result);
                }
            }
        }
    }
    Ok(out)
}

type ScanKey = ([u32; 3], Vec<String>, Vec<String>, Vec<String>);

fn scan_key(a1: &CohomologyClass, a2: &CohomologyClass, a3: &CohomologyClass, full: bool) -> ScanKey {
    let coords = |c: &CohomologyClass| c.coordinates().iter().map(ToString::to_string).collect::<Vec<_>>();
    let (mut first, second, mut third) = (coords(a1), coords(a2), coords(a3));
    let mut degrees = [a1.degree(), a2.degree(), a3.degree()];
    if !full && (a3.degree(), &third) < (a1.degree(), &first) {
        std::mem::swap(&mut first, &mut third);
        degrees.swap(0, 2);
    }
    (degrees, first, second, third)
}

impl Cohomology {
    /// Matrix of `y ↦ x ∪ y` from `H^q` to `H^{|x|+q}`.
    pub fn cup_map_matrix_left(&self, x: &CohomologyClass, q: u32) -> Result<SparseMatrix> {
        let target = x.degree() + q;
        let dim_target = self.space(target)?.dim();
        let columns = (0..self.space(q)?.dim())
            .map(|i| Ok(self.cup(x, &self.basis_class(q, i)?)?.coordinate_vector()))
            .collect::<Result<Vec<_>>>()?;
        Ok(SparseMatrix::from_columns(dim_target, &columns))
    }
}
