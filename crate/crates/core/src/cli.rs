//! Command-line driver.
//!
//! Exit codes: 0 success, 1 validation or precondition failure, 2 parse
//! or input error, 3 internal consistency failure.

use std::io::Write;
use std::path::Path;

use clap::{Args, Parser, Subcommand};

use crate::catalog;
use crate::cdga::Cdga;
use crate::cohomology::{Cohomology, CohomologyClass};
use crate::constructions::{self, betti_convolution};
use crate::dsl::{self, Diagnostics};
use crate::error::Error;
use crate::massey::{self, ScanOptions};
use crate::report::{self, AlgebraReport, ScanReport, TensorReport};

/// Default degree cap for algebras with even generators.
const DEFAULT_CAP: u32 = 8;

#[derive(Debug, Parser)]
#[command(name = "cdga", version, about = "Cohomology and Massey products of commutative differential graded algebras")]
struct Cli {
    /// Emit a JSON report (default).
    #[arg(long, global = true, conflicts_with = "text")]
    json: bool,
    /// Emit a human-readable report.
    #[arg(long, global = true)]
    text: bool,
    /// Only parse and validate the algebra.
    #[arg(long, global = true)]
    validate_only: bool,
    #[command(subcommand)]
    command: Command,
}

#[derive(Debug, Args)]
struct Cap {
    /// Highest degree to compute.
    #[arg(long = "max-degree", value_name = "N")]
    max_degree: Option<u32>,
}

#[derive(Debug, Subcommand)]
enum Command {
    /// Betti numbers and representative cocycles.
    Cohomology {
        /// Algebra file or catalog name.
        file: String,
        #[command(flatten)]
        cap: Cap,
    },
    /// Triple Massey product of three cocycles.
    Massey {
        file: String,
        a1: String,
        a2: String,
        a3: String,
        #[command(flatten)]
        cap: Cap,
    },
    /// a-Massey product of four degree-2 cocycles.
    Amassey {
        file: String,
        a: String,
        b1: String,
        b2: String,
        b3: String,
        #[command(flatten)]
        cap: Cap,
    },
    /// Search for non-vanishing triple Massey products.
    Scan {
        file: String,
        /// Degrees p,q,r of the arguments.
        #[arg(long, value_delimiter = ',', num_args = 1, required = true)]
        degrees: Vec<u32>,
        #[command(flatten)]
        cap: Cap,
        /// Also report mirror-image triples.
        #[arg(long)]
        full: bool,
    },
    /// Circle extension by a closed 2-form, checked against the Gysin sequence.
    Gysin {
        file: String,
        #[arg(long)]
        omega: String,
        #[command(flatten)]
        cap: Cap,
    },
    /// Tensor product, checked against the Künneth formula.
    Tensor {
        file_a: String,
        file_b: String,
        #[command(flatten)]
        cap: Cap,
    },
    /// Print the source of a built-in algebra.
    Catalog { name: String },
}

enum Failure {
    Validation(String),
    Parse(String),
    Inconsistent(String),
}

impl Failure {
    fn code(&self) -> i32 {
        match self {
            Failure::Validation(_) => 1,
            Failure::Parse(_) => 2,
            Failure::Inconsistent(_) => 3,
        }
    }

    fn message(&self) -> &str {
        match self {
            Failure::Validation(m) | Failure::Parse(m) | Failure::Inconsistent(m) => m,
        }
    }
}

impl From<Error> for Failure {
    fn from(e: Error) -> Self {
        match e {
            Error::Inconsistent(m) => Failure::Inconsistent(m),
            other => Failure::Validation(other.to_string()),
        }
    }
}

fn parse_failure(origin: &str, diags: &Diagnostics) -> Failure {
    Failure::Parse(format!("{origin}: {} problem(s)\n{diags}", diags.len()))
}

struct Loaded {
    name: String,
    cdga: Cdga,
}

fn load(arg: &str) -> Result<Loaded, Failure> {
    let src = if Path::new(arg).is_file() {
        std::fs::read_to_string(arg).map_err(|e| Failure::Parse(format!("{arg}: {e}")))?
    } else {
        catalog::source(arg)
            .map_err(|_| Failure::Parse(format!("{arg}: no such file or catalog entry")))?
    };
    let doc = dsl::parse_algebra(&src).map_err(|d| parse_failure(arg, &d))?;
    let cdga = doc
        .to_cdga()
        .map_err(|e| Failure::Validation(format!("{arg}: {e}")))?;
    Ok(Loaded {
        name: doc.name,
        cdga,
    })
}

fn parse_class(h: &Cohomology, text: &str) -> Result<CohomologyClass, Failure> {
    let e = dsl::parse_element(text, h.cdga()).map_err(|d| parse_failure(&format!("`{text}`"), &d))?;
    if e.is_zero() {
        return Err(Failure::Validation(format!(
            "`{text}` is zero; class arguments must be nonzero homogeneous cocycles"
        )));
    }
    let Some(k) = e.degree() else {
        return Err(Failure::Validation(format!("`{text}` is not homogeneous")));
    };
    if k > h.cap() {
        return Err(Error::DegreeOverflow { degree: k, cap: h.cap() }.into());
    }
    if !h.cdga().is_closed(&e) {
        return Err(Failure::Validation(format!(
            "`{text}` is not closed: d({e}) = {}",
            h.cdga().d(&e)
        )));
    }
    Ok(h.class_in(k, &e)?)
}

fn default_cap(cdga: &Cdga) -> u32 {
    cdga.algebra().top_degree().unwrap_or(DEFAULT_CAP)
}

fn element_degree(cdga: &Cdga, text: &str) -> Result<u32, Failure> {
    let e = dsl::parse_element(text, cdga).map_err(|d| parse_failure(&format!("`{text}`"), &d))?;
    Ok(e.degree().unwrap_or(0))
}

fn execute(cli: &Cli) -> Result<AlgebraReport, Failure> {
    if let Command::Catalog { .. } = cli.command {
        unreachable!("handled before execute");
    }
    let primary = match &cli.command {
        Command::Cohomology { file, .. }
        | Command::Massey { file, .. }
        | Command::Amassey { file, .. }
        | Command::Scan { file, .. }
        | Command::Gysin { file, .. } => file,
        Command::Tensor { file_a, .. } => file_a,
        Command::Catalog { .. } => unreachable!(),
    };
    let loaded = load(primary)?;
    let cdga = &loaded.cdga;
    let command_name = match &cli.command {
        Command::Cohomology { .. } => "cohomology",
        Command::Massey { .. } => "massey",
        Command::Amassey { .. } => "amassey",
        Command::Scan { .. } => "scan",
        Command::Gysin { .. } => "gysin",
        Command::Tensor { .. } => "tensor",
        Command::Catalog { .. } => "catalog",
    };

    if cli.validate_only {
        let mut r = AlgebraReport::new("validate", &loaded.name, cdga);
        r.valid = Some(true);
        if let Command::Tensor { file_b, .. } = &cli.command {
            load(file_b)?;
        }
        return Ok(r);
    }

    let mut r = AlgebraReport::new(command_name, &loaded.name, cdga);
    match &cli.command {
        Command::Cohomology { cap, .. } => {
            let h = Cohomology::new(cdga, cap.max_degree.unwrap_or_else(|| default_cap(cdga)));
            r = r.with_cohomology(&h);
        }
        Command::Massey { a1, a2, a3, cap, .. } => {
            let needed = [a1, a2, a3]
                .into_iter()
                .map(|t| element_degree(cdga, t))
                .sum::<Result<u32, _>>()?
                .saturating_sub(1);
            let h = Cohomology::new(cdga, cap.max_degree.unwrap_or(needed));
            let classes = [parse_class(&h, a1)?, parse_class(&h, a2)?, parse_class(&h, a3)?];
            let m = massey::triple_massey(&h, &classes[0], &classes[1], &classes[2])?;
            r.max_degree = Some(h.cap());
            r.massey = Some(report::massey_report(&h, &m));
        }
        Command::Amassey { a, b1, b2, b3, cap, .. } => {
            let h = Cohomology::new(cdga, cap.max_degree.unwrap_or(DEFAULT_CAP));
            let c = [parse_class(&h, a)?, parse_class(&h, b1)?, parse_class(&h, b2)?, parse_class(&h, b3)?];
            let m = massey::a_massey(&h, &c[0], &c[1], &c[2], &c[3])?;
            r.max_degree = Some(h.cap());
            r.amassey = Some(report::a_massey_report(&h, &m));
        }
        Command::Scan {
            degrees, cap, full, ..
        } => {
            let [p, q, s] = <[u32; 3]>::try_from(degrees.as_slice()).map_err(|_| {
                Failure::Validation(format!("--degrees needs exactly three values, got {}", degrees.len()))
            })?;
            let needed = (p + q + s).saturating_sub(1);
            let h = Cohomology::new(cdga, cap.max_degree.unwrap_or(needed));
            let findings = massey::massey_scan(&h, [p, q, s], ScanOptions { full: *full })?;
            r.max_degree = Some(h.cap());
            r.scan = Some(ScanReport {
                degrees: [p, q, s],
                full: *full,
                findings: findings.iter().map(|m| report::massey_report(&h, m)).collect(),
            });
        }
        Command::Gysin { omega, cap, .. } => {
            let omega = dsl::parse_element(omega, cdga).map_err(|d| parse_failure(&format!("`{omega}`"), &d))?;
            let max = cap
                .max_degree
                .unwrap_or_else(|| cdga.algebra().top_degree().map_or(DEFAULT_CAP, |t| t + 1));
            let ext = constructions::circle_extension(cdga, &omega)?;
            let generator = ext.algebra().generators().last().expect("adjoined generator").name.clone();
            let g = constructions::gysin_report(cdga, &omega, max)?;
            r.max_degree = Some(max);
            r.gysin = Some(report::gysin_json(&omega, &generator, &g));
            if !g.consistent {
                return Err(Failure::Inconsistent(format!(
                    "Gysin prediction {:?} disagrees with direct computation {:?}\n{}",
                    g.predicted_betti,
                    g.extension_betti,
                    r.to_json()
                )));
            }
        }
        Command::Tensor { file_b, cap, .. } => {
            let other = load(file_b)?;
            let product = constructions::tensor(cdga, &other.cdga);
            let max = cap.max_degree.unwrap_or_else(|| default_cap(&product));
            let h = Cohomology::new(&product, max);
            let fa = Cohomology::new(cdga, max).betti();
            let fb = Cohomology::new(&other.cdga, max).betti();
            let kunneth = betti_convolution(&fa, &fb, max as usize + 1);
            r = AlgebraReport::new("tensor", &format!("{}_x_{}", loaded.name, other.name), &product)
                .with_cohomology(&h);
            let consistent = r.betti.as_ref() == Some(&kunneth);
            r.tensor = Some(TensorReport {
                factors: [loaded.name.clone(), other.name.clone()],
                factor_betti: [fa, fb],
                kunneth_betti: kunneth,
                consistent,
            });
            if !consistent {
                return Err(Failure::Inconsistent(format!(
                    "Künneth prediction disagrees with direct computation\n{}",
                    r.to_json()
                )));
            }
        }
        Command::Catalog { .. } => unreachable!(),
    }
    Ok(r)
}

/// Runs the CLI on `args` (including the program name); returns the exit code.
pub fn run<I, T>(args: I, out: &mut dyn Write, err: &mut dyn Write) -> i32
where
    I: IntoIterator<Item = T>,
    T: Into<std::ffi::OsString> + Clone,
{
    run_with(args, out, err, false)
}

pub fn run_with<I, T>(args: I, out: &mut dyn Write, err: &mut dyn Write, color: bool) -> i32
where
    I: IntoIterator<Item = T>,
    T: Into<std::ffi::OsString> + Clone,
{
    let cli = match Cli::try_parse_from(args) {
        Ok(cli) => cli,
        Err(e) => {
            let code = if e.use_stderr() { 2 } else { 0 };
            let rendered = e.render().to_string();
            if code == 0 {
                let _ = write!(out, "{rendered}");
            } else {
                let _ = write!(err, "{rendered}");
            }
            return code;
        }
    };

    if let Command::Catalog { name } = &cli.command {
        return match catalog::source(name) {
            Ok(src) => {
                let _ = write!(out, "{src}");
                0
            }
            Err(e) => {
                let _ = writeln!(err, "{}: {e}; known: {}", label(color), catalog::NAMES.join(", "));
                2
            }
        };
    }

    match execute(&cli) {
        Ok(report) => {
            let text = if cli.text { report.to_text() } else { report.to_json() };
            let _ = write!(out, "{text}");
            0
        }
        Err(f) => {
            let _ = writeln!(err, "{}: {}", label(color), f.message());
            f.code()
        }
    }
}

fn label(color: bool) -> &'static str {
    if color {
        "\x1b[1;31merror\x1b[0m"
    } else {
        "error"
    }
}
