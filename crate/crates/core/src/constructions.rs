//! Tensor products and circle-bundle extensions of CDGAs.

use std::collections::HashSet;

use num_traits::{One, Zero};

use crate::algebra::{Element, FreeAlgebra, Generator, Scalar};
use crate::cdga::Cdga;
use crate::cohomology::{CohomologyClass, Cohomology};
use crate::error::{Error, Result};
use crate::linalg::{self, SparseMatrix, Subspace};

/// Name of the generator adjoined by [`circle_extension`].
pub const CONNECTION_GENERATOR: &str = "t";

fn fresh_name(base: &str, taken: &HashSet<String>) -> String {
    if !taken.contains(base) {
        return base.to_string();
    }
    (2..)
        .map(|i| format!("{base}_{i}"))
        .find(|n| !taken.contains(n))
        .expect("unbounded supply of names")
}

/// `A ⊗ B`: generators of `A` then those of `B`, renamed on collision.
pub fn tensor(a: &Cdga, b: &Cdga) -> Cdga {
    let mut taken: HashSet<String> = a.algebra().generators().iter().map(|g| g.name.clone()).collect();
    let mut gens = a.algebra().generators().to_vec();
    for g in b.algebra().generators() {
        let name = fresh_name(&g.name, &taken);
        taken.insert(name.clone());
        gens.push(Generator::new(name, g.degree));
    }
    let algebra = FreeAlgebra::new(gens).expect("names made unique");
    let offset = a.algebra().len();
    let differential = a
        .differentials()
        .iter()
        .map(|e| e.embed(&algebra, 0))
        .chain(b.differentials().iter().map(|e| e.embed(&algebra, offset)))
        .collect();
    Cdga::validate(algebra, differential).expect("tensor of validated algebras")
}

/// Image of `A`'s element in `A ⊗ B` (or in a circle extension of `A`).
pub fn include_left(e: &Element, target: &Cdga) -> Element {
    e.embed(target.algebra(), 0)
}

/// Image of `B`'s element in `A ⊗ B`.
pub fn include_right(e: &Element, a: &Cdga, target: &Cdga) -> Element {
    e.embed(target.algebra(), a.algebra().len())
}

fn check_degree_two_cocycle(a: &Cdga, omega: &Element) -> Result<()> {
    if !crate::algebra::same_algebra(omega.algebra(), a.algebra()) {
        return Err(Error::MixedAlgebras);
    }
    if !omega.is_homogeneous_of(2) {
        return Err(match omega.degree() {
            Some(found) => Error::WrongDegree { expected: 2, found },
            None => Error::NotHomogeneous,
        });
    }
    if !a.is_closed(omega) {
        return Err(Error::NotClosed(omega.clone()));
    }
    Ok(())
}

/// Adjoins a degree-one generator `t` with `d t = ω`.
pub fn circle_extension(a: &Cdga, omega: &Element) -> Result<Cdga> {
    check_degree_two_cocycle(a, omega)?;
    let taken = a.algebra().generators().iter().map(|g| g.name.clone()).collect();
    let mut gens = a.algebra().generators().to_vec();
    gens.push(Generator::new(fresh_name(CONNECTION_GENERATOR, &taken), 1));
    let algebra = FreeAlgebra::new(gens)?;
    let mut differential: Vec<Element> = a.differentials().iter().map(|e| e.embed(&algebra, 0)).collect();
    differential.push(omega.embed(&algebra, 0));
    Cdga::validate(algebra, differential)
}

/// `dω = 0` and `ωⁿ ≠ 0`.
pub fn symplectic_check(a: &Cdga, omega: &Element, n: u32) -> Result<bool> {
    if !omega.is_homogeneous_of(2) {
        return Err(match omega.degree() {
            Some(found) => Error::WrongDegree { expected: 2, found },
            None => Error::NotHomogeneous,
        });
    }
    Ok(a.try_d(omega)?.is_zero() && !omega.pow(n).is_zero())
}

/// The class `λ[x₁₆+x₂₅] + μ[x₁₆−x₃₄]` on `g₆.₁₅⁻¹` for `λ, μ ≠ 0`, `λ ≠ −μ`.
///
/// `[x₆]·[ω] = (λ−μ)[x₂₅₆]`, so cup with `[ω]` is injective on `H¹` only
/// when `λ ≠ μ`. The default `λ = μ = 1` gives `2x₁₆ + x₂₅ − x₃₄`.
#[derive(Debug, Clone, PartialEq)]
pub struct SymplecticClassChoice {
    lambda: Scalar,
    mu: Scalar,
}

impl Default for SymplecticClassChoice {
    fn default() -> Self {
        Self {
            lambda: Scalar::one(),
            mu: Scalar::one(),
        }
    }
}

impl SymplecticClassChoice {
    pub fn new(lambda: Scalar, mu: Scalar) -> Result<Self> {
        if lambda.is_zero() || mu.is_zero() || (&lambda + &mu).is_zero() {
            return Err(Error::Precondition(
                "need λ ≠ 0, μ ≠ 0 and λ ≠ −μ".into(),
            ));
        }
        Ok(Self { lambda, mu })
    }

    pub fn lambda(&self) -> &Scalar {
        &self.lambda
    }

    pub fn mu(&self) -> &Scalar {
        &self.mu
    }

    /// The cocycle `λ(x₁₆+x₂₅) + μ(x₁₆−x₃₄)` in an algebra with generators `x1..x6`.
    pub fn form(&self, g: &Cdga) -> Result<Element> {
        let first = &g.word(&["x1", "x6"])? + &g.word(&["x2", "x5"])?;
        let second = &g.word(&["x1", "x6"])? - &g.word(&["x3", "x4"])?;
        Ok(&first.scale(&self.lambda) + &second.scale(&self.mu))
    }
}

/// Long-exact-sequence bookkeeping for a circle extension, checked against
/// the directly computed cohomology of the extension.
#[derive(Debug, Clone, PartialEq)]
pub struct GysinReport {
    pub max_degree: u32,
    /// `bₖ` of the base for `k = 0..=max_degree+2`.
    pub base_betti: Vec<usize>,
    /// Rank of `∪[ω]: Hᵏ → Hᵏ⁺²` of the base, `k = 0..=max_degree`.
    pub cup_ranks: Vec<usize>,
    /// `bₖ` of the extension predicted by the Gysin sequence.
    pub predicted_betti: Vec<usize>,
    /// `bₖ` of the extension computed directly.
    pub extension_betti: Vec<usize>,
    /// Kernel of the pullback `Hᵏ(A) → Hᵏ(E)` in base coordinates.
    pub pullback_kernels: Vec<Subspace>,
    /// Same kernels as cocycles of the base.
    pub pullback_kernel_cocycles: Vec<Vec<Element>>,
    pub consistent: bool,
}

impl GysinReport {
    /// `∪[ω]` is injective on `Hᵏ` of the base.
    pub fn cup_injective(&self, k: u32) -> bool {
        self.cup_ranks[k as usize] == self.base_betti[k as usize]
    }
}

/// Matrix of the inclusion `Hᵏ(A) → Hᵏ(E)` in canonical coordinates.
pub fn pullback_matrix(base: &Cohomology, ext: &Cohomology, k: u32) -> Result<SparseMatrix> {
    let columns = (0..base.space(k)?.dim())
        .map(|i| {
            let rep = base.basis_class(k, i)?.representative().embed(ext.cdga().algebra(), 0);
            Ok(ext.class_in(k, &rep)?.coordinate_vector())
        })
        .collect::<Result<Vec<_>>>()?;
    Ok(SparseMatrix::from_columns(ext.space(k)?.dim(), &columns))
}

/// Pulls a base class back to the extension.
pub fn pull_back(ext: &Cohomology, c: &CohomologyClass) -> Result<CohomologyClass> {
    ext.class_in(c.degree(), &c.representative().embed(ext.cdga().algebra(), 0))
}

pub fn gysin_report(a: &Cdga, omega: &Element, max_degree: u32) -> Result<GysinReport> {
    let ext = circle_extension(a, omega)?;
    let base_h = Cohomology::new(a, max_degree + 2);
    let ext_h = Cohomology::new(&ext, max_degree);
    let omega_class = base_h.class_in(2, omega)?;

    let base_betti = base_h.betti();
    let cup_ranks = (0..=max_degree)
        .map(|k| base_h.cup_map_rank(&omega_class, k))
        .collect::<Result<Vec<_>>>()?;

    // dim Hᵏ(E) = dim coker(∪ω: Hᵏ⁻² → Hᵏ) + dim ker(∪ω: Hᵏ⁻¹ → Hᵏ⁺¹)
    let predicted_betti: Vec<usize> = (0..=max_degree as usize)
        .map(|k| {
            let coker = base_betti[k] - if k >= 2 { cup_ranks[k - 2] } else { 0 };
            let ker = if k >= 1 { base_betti[k - 1] - cup_ranks[k - 1] } else { 0 };
            coker + ker
        })
        .collect();
    let extension_betti = ext_h.betti();

    let mut pullback_kernels = Vec::new();
    let mut pullback_kernel_cocycles = Vec::new();
    for k in 0..=max_degree {
        let kernel = linalg::kernel_basis(&pullback_matrix(&base_h, &ext_h, k)?);
        let cocycles = kernel
            .basis()
            .iter()
            .map(|v| base_h.cocycle_from_coordinates(k, v))
            .collect::<Result<Vec<_>>>()?;
        pullback_kernels.push(kernel);
        pullback_kernel_cocycles.push(cocycles);
    }

    let consistent = predicted_betti == extension_betti;
    Ok(GysinReport {
        max_degree,
        base_betti,
        cup_ranks,
        predicted_betti,
        extension_betti,
        pullback_kernels,
        pullback_kernel_cocycles,
        consistent,
    })
}

/// `gysin_report` that treats a failed cross-check as an error.
pub fn checked_gysin_report(a: &Cdga, omega: &Element, max_degree: u32) -> Result<GysinReport> {
    let report = gysin_report(a, omega, max_degree)?;
    if report.consistent {
        Ok(report)
    } else {
        Err(Error::Inconsistent(format!(
            "Gysin bookkeeping {:?} disagrees with direct computation {:?}",
            report.predicted_betti, report.extension_betti
        )))
    }
}

/// `Σ_{i+j=k} aᵢ bⱼ` for `k = 0..len`.
pub fn betti_convolution(a: &[usize], b: &[usize], len: usize) -> Vec<usize> {
    (0..len)
        .map(|k| {
            (0..=k)
                .filter_map(|i| Some(a.get(i)? * b.get(k - i)?))
                .sum()
        })
        .collect()
}
