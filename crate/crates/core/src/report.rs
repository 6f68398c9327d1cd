//! Serializable reports emitted by the CLI.
//!
//! Field order is fixed by the struct definitions and every list is in
//! canonical order, so identical inputs give byte-identical JSON.

use std::fmt::Write as _;

use serde::Serialize;

use crate::algebra::{Element, Scalar};
use crate::cdga::Cdga;
use crate::cohomology::Cohomology;
use crate::constructions::GysinReport;
use crate::linalg::Subspace;
use crate::massey::{AMasseyResult, MasseyResult};

pub const ENGINE_NAME: &str = env!("CARGO_PKG_NAME");
pub const ENGINE_VERSION: &str = env!("CARGO_PKG_VERSION");

/// How monomials, bases and representatives are ordered in every report.
pub const ORDERING: &str = "monomials by degree, then earlier generators first; \
     cohomology representatives in reduced echelon form over that order";

#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct EngineInfo {
    pub name: &'static str,
    pub version: &'static str,
}

impl Default for EngineInfo {
    fn default() -> Self {
        Self {
            name: ENGINE_NAME,
            version: ENGINE_VERSION,
        }
    }
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct GeneratorEntry {
    pub name: String,
    pub degree: u32,
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct MasseyPrimitives {
    pub xi12: String,
    pub xi23: String,
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct MasseyReport {
    pub degrees: [u32; 3],
    pub degree: u32,
    pub arguments: Vec<String>,
    pub representative: String,
    /// Coordinates of the representative's class over `cohomology_basis`.
    pub class_coordinates: Vec<String>,
    pub cohomology_basis: Vec<String>,
    pub indeterminacy_basis: Vec<String>,
    pub indeterminacy_dimension: usize,
    /// Canonical cocycle of the class reduced modulo the indeterminacy.
    pub reduced_class: String,
    pub vanishes: bool,
    pub primitives: MasseyPrimitives,
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct AMasseyPrimitives {
    pub xi1: String,
    pub xi2: String,
    pub xi3: String,
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct AMasseyReport {
    pub arguments: Vec<String>,
    pub representative: String,
    pub class_coordinates: Vec<String>,
    pub cohomology_basis: Vec<String>,
    pub denominator_basis: Vec<String>,
    pub denominator_dimension: usize,
    pub vanishes: bool,
    pub primitives: AMasseyPrimitives,
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct ScanReport {
    pub degrees: [u32; 3],
    pub full: bool,
    pub findings: Vec<MasseyReport>,
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct GysinJson {
    pub omega: String,
    pub extension_generator: String,
    pub max_degree: u32,
    pub base_betti: Vec<usize>,
    pub cup_ranks: Vec<usize>,
    pub predicted_betti: Vec<usize>,
    pub extension_betti: Vec<usize>,
    /// Kernel of the pullback in each degree, as base cocycles.
    pub pullback_kernels: Vec<Vec<String>>,
    pub consistent: bool,
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct TensorReport {
    pub factors: [String; 2],
    pub factor_betti: [Vec<usize>; 2],
    pub kunneth_betti: Vec<usize>,
    pub consistent: bool,
}

/// Everything one CLI invocation reports.
#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct AlgebraReport {
    pub engine: EngineInfo,
    pub command: String,
    pub algebra: String,
    pub ordering: &'static str,
    pub generators: Vec<GeneratorEntry>,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub valid: Option<bool>,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub max_degree: Option<u32>,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub betti: Option<Vec<usize>>,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub representatives: Option<Vec<Vec<String>>>,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub massey: Option<MasseyReport>,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub amassey: Option<AMasseyReport>,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub scan: Option<ScanReport>,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub gysin: Option<GysinJson>,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub tensor: Option<TensorReport>,
}

impl AlgebraReport {
    pub fn new(command: &str, algebra: &str, cdga: &Cdga) -> Self {
        Self {
            engine: EngineInfo::default(),
            command: command.to_string(),
            algebra: algebra.to_string(),
            ordering: ORDERING,
            generators: cdga
                .algebra()
                .generators()
                .iter()
                .map(|g| GeneratorEntry {
                    name: g.name.clone(),
                    degree: g.degree,
                })
                .collect(),
            valid: None,
            max_degree: None,
            betti: None,
            representatives: None,
            massey: None,
            amassey: None,
            scan: None,
            gysin: None,
            tensor: None,
        }
    }

    pub fn with_cohomology(mut self, h: &Cohomology) -> Self {
        self.max_degree = Some(h.cap());
        self.betti = Some(h.betti());
        self.representatives = Some(
            (0..=h.cap())
                .map(|k| {
                    h.space(k)
                        .expect("k within cap")
                        .representatives()
                        .iter()
                        .map(ToString::to_string)
                        .collect()
                })
                .collect(),
        );
        self
    }

    pub fn to_json(&self) -> String {
        let mut s = serde_json::to_string_pretty(self).expect("report serializes");
        s.push('\n');
        s
    }

    pub fn to_text(&self) -> String {
        let mut out = String::new();
        let _ = writeln!(out, "{} ({}): {}", self.algebra, self.command, generator_line(&self.generators));
        if let Some(valid) = self.valid {
            let _ = writeln!(out, "valid: {valid}");
        }
        if let Some(betti) = &self.betti {
            let _ = writeln!(out, "betti: {}", join(betti));
        }
        if let Some(reps) = &self.representatives {
            for (k, r) in reps.iter().enumerate() {
                if !r.is_empty() {
                    let _ = writeln!(out, "H^{k}: {}", bracket_list(r));
                }
            }
        }
        if let Some(m) = &self.massey {
            write_massey(&mut out, m, "");
        }
        if let Some(a) = &self.amassey {
            let _ = writeln!(out, "a-Massey product of degree 8");
            let _ = writeln!(out, "  representative: {}", a.representative);
            let _ = writeln!(out, "  denominator: {}", bracket_list(&a.denominator_basis));
            let _ = writeln!(out, "  vanishes: {}", a.vanishes);
            let _ = writeln!(out, "  primitives: xi1 = {}, xi2 = {}, xi3 = {}", a.primitives.xi1, a.primitives.xi2, a.primitives.xi3);
        }
        if let Some(s) = &self.scan {
            let _ = writeln!(
                out,
                "scan in degrees {}: {} non-vanishing product(s)",
                join(&s.degrees),
                s.findings.len()
            );
            for f in &s.findings {
                write_massey(&mut out, f, "  ");
            }
        }
        if let Some(g) = &self.gysin {
            let _ = writeln!(out, "circle extension by {} (generator {})", g.omega, g.extension_generator);
            let _ = writeln!(out, "base betti: {}", join(&g.base_betti));
            let _ = writeln!(out, "cup ranks: {}", join(&g.cup_ranks));
            let _ = writeln!(out, "predicted betti: {}", join(&g.predicted_betti));
            let _ = writeln!(out, "extension betti: {}", join(&g.extension_betti));
            for (k, kernel) in g.pullback_kernels.iter().enumerate() {
                if !kernel.is_empty() {
                    let _ = writeln!(out, "pullback kernel in degree {k}: {}", bracket_list(kernel));
                }
            }
            let _ = writeln!(out, "consistent: {}", g.consistent);
        }
        if let Some(t) = &self.tensor {
            let _ = writeln!(out, "factors: {} (betti {}) and {} (betti {})", t.factors[0], join(&t.factor_betti[0]), t.factors[1], join(&t.factor_betti[1]));
            let _ = writeln!(out, "kunneth betti: {}", join(&t.kunneth_betti));
            let _ = writeln!(out, "consistent: {}", t.consistent);
        }
        out
    }
}

fn write_massey(out: &mut String, m: &MasseyReport, indent: &str) {
    let _ = writeln!(out, "{indent}<{}> in degree {}", m.arguments.join(", "), m.degree);
    let _ = writeln!(out, "{indent}  representative: {}", m.representative);
    let _ = writeln!(out, "{indent}  indeterminacy: {}", bracket_list(&m.indeterminacy_basis));
    let _ = writeln!(out, "{indent}  vanishes: {}", m.vanishes);
    let _ = writeln!(out, "{indent}  primitives: xi12 = {}, xi23 = {}", m.primitives.xi12, m.primitives.xi23);
}

fn generator_line(gens: &[GeneratorEntry]) -> String {
    gens.iter()
        .map(|g| format!("{}:{}", g.name, g.degree))
        .collect::<Vec<_>>()
        .join(", ")
}

fn join<T: ToString>(xs: &[T]) -> String {
    xs.iter().map(ToString::to_string).collect::<Vec<_>>().join(",")
}

fn bracket_list(xs: &[String]) -> String {
    if xs.is_empty() {
        return "{0}".to_string();
    }
    format!(
        "span{{{}}}",
        xs.iter().map(|x| format!("[{x}]")).collect::<Vec<_>>().join(", ")
    )
}

fn strings(xs: &[Scalar]) -> Vec<String> {
    xs.iter().map(ToString::to_string).collect()
}

fn subspace_cocycles(h: &Cohomology, k: u32, s: &Subspace) -> Vec<String> {
    s.basis()
        .iter()
        .map(|v| {
            h.cocycle_from_coordinates(k, v)
                .expect("coordinates within the space")
                .to_string()
        })
        .collect()
}

fn representatives(h: &Cohomology, k: u32) -> Vec<String> {
    h.space(k)
        .expect("k within cap")
        .representatives()
        .iter()
        .map(ToString::to_string)
        .collect()
}

pub fn massey_report(h: &Cohomology, m: &MasseyResult) -> MasseyReport {
    let k = m.degree();
    let reduced = h
        .class_from_coordinates(k, &m.reduced_coordinates())
        .expect("coordinates within the space");
    MasseyReport {
        degrees: m.degrees,
        degree: k,
        arguments: m.arguments.iter().map(Element::to_string).collect(),
        representative: m.representative.to_string(),
        class_coordinates: strings(m.class.coordinates()),
        cohomology_basis: representatives(h, k),
        indeterminacy_basis: subspace_cocycles(h, k, &m.indeterminacy),
        indeterminacy_dimension: m.indeterminacy.dim(),
        reduced_class: reduced.representative().to_string(),
        vanishes: m.vanishes,
        primitives: MasseyPrimitives {
            xi12: m.xi12.to_string(),
            xi23: m.xi23.to_string(),
        },
    }
}

pub fn a_massey_report(h: &Cohomology, a: &AMasseyResult) -> AMasseyReport {
    AMasseyReport {
        arguments: a.arguments.iter().map(Element::to_string).collect(),
        representative: a.representative.to_string(),
        class_coordinates: strings(a.class.coordinates()),
        cohomology_basis: representatives(h, 8),
        denominator_basis: subspace_cocycles(h, 8, &a.denominator),
        denominator_dimension: a.denominator.dim(),
        vanishes: a.vanishes,
        primitives: AMasseyPrimitives {
            xi1: a.primitives[0].to_string(),
            xi2: a.primitives[1].to_string(),
            xi3: a.primitives[2].to_string(),
        },
    }
}

pub fn gysin_json(omega: &Element, generator: &str, g: &GysinReport) -> GysinJson {
    GysinJson {
        omega: omega.to_string(),
        extension_generator: generator.to_string(),
        max_degree: g.max_degree,
        base_betti: g.base_betti.clone(),
        cup_ranks: g.cup_ranks.clone(),
        predicted_betti: g.predicted_betti.clone(),
        extension_betti: g.extension_betti.clone(),
        pullback_kernels: g
            .pullback_kernel_cocycles
            .iter()
            .map(|ks| ks.iter().map(ToString::to_string).collect())
            .collect(),
        consistent: g.consistent,
    }
}
