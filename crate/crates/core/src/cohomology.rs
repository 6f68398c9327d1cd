//! Cohomology of a [`Cdga`] degree by degree, up to a fixed cap.

use std::collections::HashMap;

use num_traits::Zero;

use crate::algebra::{Element, Monomial, Scalar};
use crate::cdga::Cdga;
use crate::error::{Error, Result};
use crate::linalg::{self, QuotientSpace, SparseMatrix, SparseVec, Subspace};

/// Monomial basis of one degree with a reverse index.
#[derive(Debug, Clone)]
pub struct DegreeBasis {
    monomials: Vec<Monomial>,
    index: HashMap<Monomial, usize>,
}

impl DegreeBasis {
    fn new(monomials: Vec<Monomial>) -> Self {
        let index = monomials
            .iter()
            .enumerate()
            .map(|(i, m)| (m.clone(), i))
            .collect();
        Self { monomials, index }
    }

    pub fn len(&self) -> usize {
        self.monomials.len()
    }

    pub fn is_empty(&self) -> bool {
        self.monomials.is_empty()
    }

    pub fn monomials(&self) -> &[Monomial] {
        &self.monomials
    }

    /// Coordinates of an element whose monomials all lie in this basis.
    pub fn coordinates(&self, e: &Element) -> Result<SparseVec> {
        e.terms()
            .map(|(m, c)| {
                self.index
                    .get(m)
                    .map(|&i| (i, c.clone()))
                    .ok_or(Error::NotHomogeneous)
            })
            .collect()
    }

    pub fn element(&self, template: &Element, v: &SparseVec) -> Element {
        Element::from_terms(
            template.algebra(),
            v.iter().map(|(&i, c)| (self.monomials[i].clone(), c.clone())),
        )
    }
}

/// `Hᵏ` with canonical representative cocycles.
#[derive(Debug, Clone)]
pub struct CohomologySpace {
    degree: u32,
    cocycles: Subspace,
    boundaries: Subspace,
    quotient: QuotientSpace,
    representatives: Vec<Element>,
}

impl CohomologySpace {
    pub fn degree(&self) -> u32 {
        self.degree
    }

    pub fn dim(&self) -> usize {
        self.quotient.dim()
    }

    pub fn representatives(&self) -> &[Element] {
        &self.representatives
    }

    pub fn cocycles(&self) -> &Subspace {
        &self.cocycles
    }

    pub fn boundaries(&self) -> &Subspace {
        &self.boundaries
    }

    pub fn quotient(&self) -> &QuotientSpace {
        &self.quotient
    }
}

/// A cohomology class: coordinates in the canonical basis plus the cocycle it came from.
#[derive(Debug, Clone, PartialEq)]
pub struct CohomologyClass {
    degree: u32,
    coordinates: Vec<Scalar>,
    representative: Element,
}

impl CohomologyClass {
    pub fn degree(&self) -> u32 {
        self.degree
    }

    pub fn coordinates(&self) -> &[Scalar] {
        &self.coordinates
    }

    pub fn representative(&self) -> &Element {
        &self.representative
    }

    pub fn is_zero(&self) -> bool {
        self.coordinates.iter().all(Zero::is_zero)
    }

    pub fn coordinate_vector(&self) -> SparseVec {
        linalg::sparse_from_dense(&self.coordinates)
    }

    /// Same class (ignores which cocycle represents it).
    pub fn same_class(&self, other: &CohomologyClass) -> bool {
        self.degree == other.degree && self.coordinates == other.coordinates
    }
}

/// Cochains, differentials and cohomology of a [`Cdga`] in degrees `0..=cap`.
#[derive(Debug, Clone)]
pub struct Cohomology {
    cdga: Cdga,
    cap: u32,
    // Degrees 0..=cap+1.
    bases: Vec<DegreeBasis>,
    // d: degree k → k+1, for k in 0..=cap.
    differentials: Vec<SparseMatrix>,
    spaces: Vec<CohomologySpace>,
}

impl Cohomology {
    pub fn new(cdga: &Cdga, cap: u32) -> Self {
        let algebra = cdga.algebra();
        let bases: Vec<DegreeBasis> = (0..=cap + 1)
            .map(|k| DegreeBasis::new(algebra.basis_of_degree(k)))
            .collect();
        let differentials: Vec<SparseMatrix> = (0..=cap as usize)
            .map(|k| {
                let columns: Vec<SparseVec> = bases[k]
                    .monomials
                    .iter()
                    .map(|m| {
                        bases[k + 1]
                            .coordinates(&cdga.d_monomial(m))
                            .expect("d raises degree by one")
                    })
                    .collect();
                SparseMatrix::from_columns(bases[k + 1].len(), &columns)
            })
            .collect();
        let zero = Element::zero(algebra);
        let spaces = (0..=cap as usize)
            .map(|k| {
                let cocycles = linalg::kernel_basis(&differentials[k]);
                let boundaries = if k == 0 {
                    Subspace::zero(bases[0].len())
                } else {
                    linalg::image_basis(&differentials[k - 1])
                };
                let quotient =
                    linalg::quotient(&cocycles, &boundaries).expect("d∘d = 0 on a validated cdga");
                let representatives = quotient
                    .representatives()
                    .iter()
                    .map(|v| bases[k].element(&zero, v))
                    .collect();
                CohomologySpace {
                    degree: k as u32,
                    cocycles,
                    boundaries,
                    quotient,
                    representatives,
                }
            })
            .collect();
        Self {
            cdga: cdga.clone(),
            cap,
            bases,
            differentials,
            spaces,
        }
    }

    pub fn cdga(&self) -> &Cdga {
        &self.cdga
    }

    pub fn cap(&self) -> u32 {
        self.cap
    }

    fn check_degree(&self, k: u32) -> Result<()> {
        if k > self.cap {
            Err(Error::DegreeOverflow {
                degree: k,
                cap: self.cap,
            })
        } else {
            Ok(())
        }
    }

    pub fn space(&self, k: u32) -> Result<&CohomologySpace> {
        self.check_degree(k)?;
        Ok(&self.spaces[k as usize])
    }

    pub fn basis(&self, k: u32) -> Result<&DegreeBasis> {
        self.check_degree(k)?;
        Ok(&self.bases[k as usize])
    }

    /// Matrix of `d` from degree `k` to degree `k+1`.
    pub fn differential_matrix(&self, k: u32) -> Result<&SparseMatrix> {
        self.check_degree(k)?;
        Ok(&self.differentials[k as usize])
    }

    pub fn betti(&self) -> Vec<usize> {
        self.spaces.iter().map(CohomologySpace::dim).collect()
    }

    pub fn betti_number(&self, k: u32) -> Result<usize> {
        Ok(self.space(k)?.dim())
    }

    /// `Σ (−1)ᵏ dim Λᵏ` over `0..=cap`.
    pub fn cochain_euler_characteristic(&self) -> i64 {
        (0..=self.cap as usize)
            .map(|k| sign(k) * self.bases[k].len() as i64)
            .sum()
    }

    pub fn euler_characteristic(&self) -> i64 {
        self.betti()
            .iter()
            .enumerate()
            .map(|(k, &b)| sign(k) * b as i64)
            .sum()
    }

    /// Class of a closed element known to have degree `k` (needed for zero).
    pub fn class_in(&self, k: u32, e: &Element) -> Result<CohomologyClass> {
        self.check_degree(k)?;
        if !e.is_homogeneous_of(k) {
            return Err(match e.degree() {
                Some(found) => Error::WrongDegree { expected: k, found },
                None => Error::NotHomogeneous,
            });
        }
        let v = self.bases[k as usize].coordinates(e)?;
        let coordinates = self.spaces[k as usize]
            .quotient
            .coordinates(&v)
            .map_err(|_| Error::NotClosed(e.clone()))?;
        Ok(CohomologyClass {
            degree: k,
            coordinates,
            representative: e.clone(),
        })
    }

    /// Class of a nonzero homogeneous closed element.
    pub fn class_of(&self, e: &Element) -> Result<CohomologyClass> {
        let k = e.degree().ok_or(Error::NotHomogeneous)?;
        self.class_in(k, e)
    }

    pub fn zero_class(&self, k: u32) -> Result<CohomologyClass> {
        self.class_in(k, &Element::zero(self.cdga.algebra()))
    }

    /// The `i`-th canonical basis class of `Hᵏ`.
    pub fn basis_class(&self, k: u32, i: usize) -> Result<CohomologyClass> {
        let space = self.space(k)?;
        let rep = space
            .representatives
            .get(i)
            .ok_or(Error::NotInSpace)?
            .clone();
        let mut coordinates = vec![Scalar::zero(); space.dim()];
        coordinates[i] = Scalar::from_integer(1.into());
        Ok(CohomologyClass {
            degree: k,
            coordinates,
            representative: rep,
        })
    }

    pub fn class_from_coordinates(&self, k: u32, coordinates: &[Scalar]) -> Result<CohomologyClass> {
        let space = self.space(k)?;
        if coordinates.len() != space.dim() {
            return Err(Error::Dimension {
                expected: space.dim(),
                found: coordinates.len(),
            });
        }
        let v = space.quotient.lift(coordinates);
        Ok(CohomologyClass {
            degree: k,
            coordinates: coordinates.to_vec(),
            representative: self.bases[k as usize].element(&Element::zero(self.cdga.algebra()), &v),
        })
    }

    /// Canonical cocycle for a coordinate vector in `Hᵏ`.
    pub fn cocycle_from_coordinates(&self, k: u32, coordinates: &SparseVec) -> Result<Element> {
        let space = self.space(k)?;
        let dense = linalg::dense_from_sparse(coordinates, space.dim());
        Ok(self.class_from_coordinates(k, &dense)?.representative)
    }

    /// Primitive of a closed element: `Some(p)` with `d p = e`, or `None` if `e` is not exact.
    ///
    /// `p` is the canonical solution, free coordinates set to zero.
    pub fn is_exact(&self, e: &Element) -> Result<Option<Element>> {
        let zero = Element::zero(self.cdga.algebra());
        if e.is_zero() {
            return Ok(Some(zero));
        }
        let k = e.degree().ok_or(Error::NotHomogeneous)?;
        self.check_degree(k)?;
        if !self.cdga.is_closed(e) {
            return Err(Error::NotClosed(e.clone()));
        }
        self.primitive(k, e)
    }

    pub(crate) fn primitive(&self, k: u32, e: &Element) -> Result<Option<Element>> {
        let zero = Element::zero(self.cdga.algebra());
        if e.is_zero() {
            return Ok(Some(zero));
        }
        if k == 0 {
            return Ok(None);
        }
        let target = self.bases[k as usize].coordinates(e)?;
        Ok(
            linalg::solve_in_image(&self.differentials[k as usize - 1], &target)
                .map(|x| self.bases[k as usize - 1].element(&zero, &x)),
        )
    }

    pub fn cup(&self, a: &CohomologyClass, b: &CohomologyClass) -> Result<CohomologyClass> {
        let k = a.degree + b.degree;
        self.check_degree(k)?;
        let product = a.representative.try_mul(&b.representative)?;
        self.class_in(k, &product)
    }

    /// Matrix of `x ↦ x ∪ c` from `Hᵖ` to `Hᵖ⁺|c|` in canonical coordinates.
    pub fn cup_map_matrix(&self, c: &CohomologyClass, p: u32) -> Result<SparseMatrix> {
        let target = p + c.degree;
        self.check_degree(target)?;
        let dim_p = self.space(p)?.dim();
        let columns = (0..dim_p)
            .map(|i| {
                let x = self.basis_class(p, i)?;
                Ok(self.cup(&x, c)?.coordinate_vector())
            })
            .collect::<Result<Vec<_>>>()?;
        Ok(SparseMatrix::from_columns(self.space(target)?.dim(), &columns))
    }

    pub fn cup_map_rank(&self, c: &CohomologyClass, p: u32) -> Result<usize> {
        Ok(self.cup_map_matrix(c, p)?.rank())
    }

    /// Span of `{a ∪ h : h ∈ Hᵠ}` inside `Hᵖ⁺ᵠ`, in coordinates.
    pub fn left_multiples(&self, a: &CohomologyClass, q: u32) -> Result<Subspace> {
        let target = a.degree + q;
        let dim_target = self.space(target)?.dim();
        let vectors = (0..self.space(q)?.dim())
            .map(|i| Ok(self.cup(a, &self.basis_class(q, i)?)?.coordinate_vector()))
            .collect::<Result<Vec<_>>>()?;
        Ok(Subspace::from_vectors(dim_target, vectors))
    }

    /// Span of `{h ∪ a : h ∈ Hᵠ}` inside `Hᵠ⁺ᵖ`, in coordinates.
    pub fn right_multiples(&self, a: &CohomologyClass, q: u32) -> Result<Subspace> {
        let target = a.degree + q;
        let dim_target = self.space(target)?.dim();
        let vectors = (0..self.space(q)?.dim())
            .map(|i| Ok(self.cup(&self.basis_class(q, i)?, a)?.coordinate_vector()))
            .collect::<Result<Vec<_>>>()?;
        Ok(Subspace::from_vectors(dim_target, vectors))
    }
}

fn sign(k: usize) -> i64 {
    if k.is_multiple_of(2) {
        1
    } else {
        -1
    }
}

/// `Hᵏ` alone; prefer [`Cohomology::new`] when several degrees are needed.
pub fn cohomology(cdga: &Cdga, k: u32, cap: u32) -> Result<CohomologySpace> {
    if k > cap {
        return Err(Error::DegreeOverflow { degree: k, cap });
    }
    Ok(Cohomology::new(cdga, k).spaces.swap_remove(k as usize))
}
