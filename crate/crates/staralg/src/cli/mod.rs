//! Command-line front end: six subcommands over the exact engine, each
//! emitting one [`report::Report`] as JSON or text.
//!
//! Exit codes: 0 — ran and every check passed; 1 — ran but at least one
//! check failed (or an internal cross-check tripped); 2 — the job itself
//! was invalid (syntax, unknown variables, out-of-range parameters).

pub mod parse;
pub mod report;

use std::path::PathBuf;

use clap::{Parser as ClapParser, Subcommand, ValueEnum};
use serde_json::{json, Value};

use crate::error::{Error, Result};
use crate::matrixrep::{matrix_units_in_basis, module_basis, psi, verify_isomorphism};
use crate::phasepoly::PhasePolynomial;
use crate::quantize::{
    closed_form_basis, lambda_duality_report, normalizer_kernel_basis, quotient_algebra,
    quotient_truncated, x_commutation_residual,
};
use crate::reduction::IdealSlice;
use crate::sample::Sampler;
use crate::scalar::RationalFunction;
use parse::{parse_base_polynomial, parse_phase_polynomial, parse_rational};
use report::{Check, Report};

/// Degree cap applied when the STARALG_MAX_DEGREE environment variable is
/// not set.
pub const DEFAULT_MAX_DEGREE: u32 = 24;

#[derive(Debug, Clone, Copy, PartialEq, Eq, ValueEnum)]
pub enum Format {
    Text,
    Json,
}

#[derive(Debug, ClapParser)]
#[command(
    name = "staralg",
    version,
    about = "Exact star-product quantization of singular loci: quotient algebras, structure constants, matrix models"
)]
pub struct Cli {
    #[command(subcommand)]
    pub command: Command,

    /// Report format.
    #[arg(long, global = true, value_enum, default_value_t = Format::Text)]
    pub format: Format,

    /// Write the report to this file instead of stdout.
    #[arg(long, global = true)]
    pub out: Option<PathBuf>,
}

#[derive(Debug, Subcommand)]
pub enum Command {
    /// Star-multiply two phase-space polynomials.
    Star {
        /// Left operand, e.g. "x^2 + l*p".
        #[arg(long)]
        f: String,
        /// Right operand.
        #[arg(long)]
        g: String,
        /// Base dimension (1: variables x, p; 2: x1, x2, p1, p2).
        #[arg(long, default_value_t = 1)]
        m: usize,
    },
    /// Quotient observable algebra of the multiplicity-n point on the line.
    Quantize {
        /// Multiplicity of the point (ideal generated by x^n).
        #[arg(long)]
        n: usize,
    },
    /// Matrix realization of the quotient algebra.
    Matrix {
        #[arg(long)]
        n: usize,
        /// Optional numeric value for l (a nonzero rational, e.g. "1/2"):
        /// adds evaluated matrices and the matrix-unit change of basis.
        #[arg(long)]
        lambda: Option<String>,
    },
    /// Structure constants of the quotient algebra over its canonical basis.
    Structure {
        #[arg(long)]
        n: usize,
    },
    /// Run the self-verification suites.
    Verify {
        /// Largest multiplicity to cover.
        #[arg(long, default_value_t = 3)]
        n: usize,
        /// Randomized cases per suite.
        #[arg(long, default_value_t = 25)]
        cases: usize,
        /// Seed for the randomized suites.
        #[arg(long, default_value_t = 0)]
        seed: u64,
        /// Degree bound for sampled polynomials.
        #[arg(long, default_value_t = 6)]
        max_degree: u32,
        /// Integer coefficients are drawn from [-max-coeff, max-coeff].
        #[arg(long, default_value_t = 9)]
        max_coeff: i64,
    },
    /// Degree-truncated quotient for an arbitrary ideal of defining equations.
    Explore {
        /// Base dimension.
        #[arg(long, default_value_t = 1)]
        m: usize,
        /// Ideal generators: repeat the flag or separate expressions with
        /// commas, e.g. --ideal "x1*x2,x2^2".
        #[arg(long, required = true, value_delimiter = ',')]
        ideal: Vec<String>,
        /// Total-degree truncation bound.
        #[arg(long)]
        degree: u32,
        /// Extra construction degree for the ideal slice.
        #[arg(long, default_value_t = 1)]
        slack: u32,
    },
}

/// Smallest l-adic order among the coefficients of `f` (0 for the zero
/// polynomial); used to state order bounds relative to the inputs.
fn min_coefficient_order(f: &PhasePolynomial) -> i64 {
    f.terms()
        .filter_map(|(_, c)| c.pole_order_at_zero().ok())
        .min()
        .unwrap_or(0)
}

fn max_degree_cap() -> Result<u32> {
    match std::env::var("STARALG_MAX_DEGREE") {
        Ok(raw) => raw.trim().parse::<u32>().map_err(|_| {
            Error::InvalidJob(format!("STARALG_MAX_DEGREE must be an integer, got `{raw}`"))
        }),
        Err(std::env::VarError::NotPresent) => Ok(DEFAULT_MAX_DEGREE),
        Err(e) => Err(Error::InvalidJob(format!("STARALG_MAX_DEGREE: {e}"))),
    }
}

fn check_degree_cap(degree: u32, what: &str) -> Result<()> {
    let cap = max_degree_cap()?;
    if degree > cap {
        return Err(Error::InvalidJob(format!(
            "{what} degree {degree} exceeds the cap {cap} (raise STARALG_MAX_DEGREE to override)"
        )));
    }
    Ok(())
}

fn run_star(f_src: &str, g_src: &str, m: usize) -> Result<Report> {
    let f = parse_phase_polynomial(f_src, m)?;
    let g = parse_phase_polynomial(g_src, m)?;
    check_degree_cap(f.degree().unwrap_or(0), "operand")?;
    check_degree_cap(g.degree().unwrap_or(0), "operand")?;
    let product = f.moyal_star(&g)?;
    let opposite = g.moyal_star(&f)?;
    let commutator = &product - &opposite;
    let bracket = f.poisson_bracket(&g)?;
    let mirror_ok = f.moyal_star_negated(&g)? == opposite;
    let leading = &commutator - &bracket.scale(&RationalFunction::two_lambda_pow(1));
    let shift = min_coefficient_order(&f) + min_coefficient_order(&g);
    let leading_ok = leading
        .terms()
        .all(|(_, c)| c.pole_order_at_zero().map_or(false, |o| o >= shift + 3));
    let checks = vec![
        Check::new(
            "opposite-product-is-lambda-mirror",
            mirror_ok,
            "g * f agrees with the l -> -l mirror of f * g",
        ),
        Check::new(
            "commutator-leading-order",
            leading_ok,
            "f*g - g*f matches 2l{f,g} up to l-order >= 3",
        ),
    ];
    Ok(Report::new(
        "star",
        json!({"m": m, "f": f_src, "g": g_src}),
        json!({
            "f": f.to_string(),
            "g": g.to_string(),
            "product": product.to_string(),
            "opposite_product": opposite.to_string(),
            "commutator": commutator.to_string(),
            "poisson_bracket": bracket.to_string(),
            "product_degree": product.degree(),
        }),
        checks,
    ))
}

fn basis_entries(q: &crate::quantize::QuotientAlgebra) -> Value {
    let n = q.multiplicity();
    let mut entries = Vec::new();
    for i in 0..n {
        for k in 0..n {
            let nf = q.basis_element(i, k);
            entries.push(json!({
                "index": i * n + k,
                "i": i,
                "k": k,
                "components": nf
                    .components()
                    .iter()
                    .map(|h| h.to_string())
                    .collect::<Vec<_>>(),
                "representative": nf.expand().to_string(),
            }));
        }
    }
    Value::Array(entries)
}

fn run_quantize(n: usize) -> Result<Report> {
    if n == 0 {
        return Err(Error::InvalidMultiplicity);
    }
    let closed_dim = closed_form_basis(n)?.len();
    let kernel_dim = normalizer_kernel_basis(n)?.len();
    match quotient_algebra(n) {
        Ok(q) => {
            let checks = vec![
                Check::new(
                    "closed-form-dimension",
                    closed_dim == n * n,
                    format!("closed-form family has dimension {closed_dim}; expected {}", n * n),
                ),
                Check::new(
                    "kernel-dimension",
                    kernel_dim == n * n,
                    format!("kernel method finds dimension {kernel_dim}; expected {}", n * n),
                ),
                Check::new(
                    "closed-form-matches-kernel",
                    true,
                    "the two normalizer computations span the same space",
                ),
            ];
            Ok(Report::new(
                "quantize",
                json!({"n": n}),
                json!({
                    "dimension": q.dimension(),
                    "basis": basis_entries(&q),
                }),
                checks,
            ))
        }
        Err(Error::Inconsistent(msg)) => Ok(Report::new(
            "quantize",
            json!({"n": n}),
            json!({
                "closed_form_dimension": closed_dim,
                "kernel_dimension": kernel_dim,
            }),
            vec![Check::new("closed-form-matches-kernel", false, msg)],
        )),
        Err(e) => Err(e),
    }
}

fn run_matrix(n: usize, lambda: Option<&str>) -> Result<Report> {
    if n == 0 {
        return Err(Error::InvalidMultiplicity);
    }
    let numeric = lambda.map(parse_rational).transpose()?;
    if let Some(value) = &numeric {
        if num_traits::Zero::is_zero(value) {
            return Err(Error::LambdaZero);
        }
    }
    let iso = match verify_isomorphism(n) {
        Ok(r) => r,
        Err(Error::Inconsistent(msg)) => {
            return Ok(Report::new(
                "matrix",
                json!({"n": n, "lambda": lambda}),
                json!({}),
                vec![Check::new("matrix-realization", false, msg)],
            ))
        }
        Err(e) => return Err(e),
    };
    let q = quotient_algebra(n)?;
    let module = module_basis(n)?;
    let images: Vec<Value> = q
        .basis()
        .iter()
        .enumerate()
        .map(|(u, h)| {
            let m = psi(&q, h, iso.convention)?;
            Ok(json!({
                "index": u,
                "i": u / n,
                "k": u % n,
                "rows": m.to_strings(),
            }))
        })
        .collect::<Result<_>>()?;
    let mut results = json!({
        "convention": iso.convention.as_str(),
        "module_basis": module.iter().map(|e| e.to_string()).collect::<Vec<_>>(),
        "images": images,
    });
    let mut checks = vec![
        Check::new(
            "homomorphism",
            iso.homomorphism,
            format!(
                "products preserved over {} basis pairs ({})",
                iso.pairs_checked,
                iso.convention.as_str()
            ),
        ),
        Check::new(
            "injective",
            iso.injective,
            format!("matrix images span dimension {}", n * n),
        ),
        Check::new(
            "surjective",
            iso.surjective,
            "dimension count: image dimension equals dim Mat(n)",
        ),
        Check::new(
            "unit-to-identity",
            iso.unit_maps_to_identity,
            "the class of 1 maps to the identity matrix",
        ),
    ];
    if let Some(value) = numeric {
        let units = matrix_units_in_basis(&q, iso.convention, &value)?;
        let mut evaluated = Vec::new();
        for (u, h) in q.basis().iter().enumerate() {
            let img = psi(&q, h, iso.convention)?.evaluate(&value)?;
            evaluated.push(json!({
                "index": u,
                "rows": img
                    .iter()
                    .map(|row| row.iter().map(|v| v.to_string()).collect::<Vec<_>>())
                    .collect::<Vec<_>>(),
            }));
        }
        let unit_entries: Vec<Value> = units
            .iter()
            .enumerate()
            .map(|(slot, coords)| {
                json!({
                    "row": slot / n,
                    "col": slot % n,
                    "coordinates": coords.iter().map(|c| c.to_string()).collect::<Vec<_>>(),
                })
            })
            .collect();
        results["evaluation"] = json!({
            "lambda": value.to_string(),
            "images": evaluated,
            "matrix_units": unit_entries,
        });
        checks.push(Check::new(
            "matrix-units-change-of-basis",
            true,
            format!("all {} matrix units expressed in the quotient basis", n * n),
        ));
    }
    Ok(Report::new(
        "matrix",
        json!({"n": n, "lambda": lambda}),
        results,
        checks,
    ))
}

fn run_structure(n: usize) -> Result<Report> {
    if n == 0 {
        return Err(Error::InvalidMultiplicity);
    }
    let q = quotient_algebra(n)?;
    let constants = q.structure_constants()?;
    let dim = constants.dimension();
    let labels: Vec<String> = (0..dim)
        .map(|u| {
            let (i, k) = constants.label(u);
            format!("e({i},{k})")
        })
        .collect();
    let nonzero = constants.nonzero_entries();
    let entries: Vec<Value> = nonzero
        .iter()
        .map(|(u, v, w, value)| {
            json!({"u": u, "v": v, "w": w, "value": value.to_string()})
        })
        .collect();
    let mut unit_ok = true;
    for v in 0..dim {
        for w in 0..dim {
            let expected = if v == w {
                RationalFunction::one()
            } else {
                RationalFunction::zero()
            };
            if constants.component(constants.unit_index(), v, w) != &expected
                || constants.component(v, constants.unit_index(), w) != &expected
            {
                unit_ok = false;
            }
        }
    }
    let associative = constants.is_associative();
    Ok(Report::new(
        "structure",
        json!({"n": n}),
        json!({
            "dimension": dim,
            "labels": labels,
            "nonzero_count": nonzero.len(),
            "entries": entries,
        }),
        vec![
            Check::new(
                "associativity",
                associative,
                format!("full contraction over {dim}^4 index tuples"),
            ),
            Check::new(
                "unit-element",
                unit_ok,
                "e(0,0) multiplies as the identity on both sides",
            ),
        ],
    ))
}

fn run_verify(
    n: usize,
    cases: usize,
    seed: u64,
    max_degree: u32,
    max_coeff: i64,
) -> Result<Report> {
    if n == 0 {
        return Err(Error::InvalidMultiplicity);
    }
    check_degree_cap(max_degree, "sampled")?;
    if max_coeff < 1 {
        return Err(Error::InvalidJob(
            "max-coeff must be at least 1".to_string(),
        ));
    }
    let mut checks = Vec::new();
    let mut sampler = Sampler::with_coefficient_bound(seed, max_coeff);

    let mut dims_ok = true;
    let mut dim_detail = Vec::new();
    for k in 1..=n {
        let dim = quotient_algebra(k)?.dimension();
        dims_ok &= dim == k * k;
        dim_detail.push(format!("n={k}: {dim}"));
    }
    checks.push(Check::new(
        "dimension-law",
        dims_ok,
        format!("quotient dimensions [{}] match n^2", dim_detail.join(", ")),
    ));

    let mut iso_ok = true;
    for k in 2..=n {
        iso_ok &= verify_isomorphism(k)?.holds();
    }
    checks.push(Check::new(
        "matrix-isomorphism",
        iso_ok,
        format!("isomorphism verified for n = 2..={n}"),
    ));

    let scrutiny = crate::matrixrep::n2_closed_map_report()?;
    checks.push(Check::new(
        "n2-closed-form-scrutiny",
        scrutiny.holds(),
        "displayed n=2 product components sum to the product; corrected map is multiplicative",
    ));

    let mut commutation_passed = 0usize;
    for case in 0..cases {
        let i = (case % 6) as u32;
        let g = sampler.fibre_polynomial(max_degree, 4);
        if x_commutation_residual(i, &g)?.is_zero() {
            commutation_passed += 1;
        }
    }
    checks.push(Check::new(
        "x-power-commutation",
        commutation_passed == cases,
        format!("{commutation_passed}/{cases} randomized identities hold"),
    ));

    let mut mirror_passed = 0usize;
    for case in 0..cases {
        let m = 1 + (case % 2);
        let q = sampler.base_polynomial(m, max_degree, 3);
        let g = sampler.phase_polynomial(m, max_degree, 4);
        let lifted = crate::phasepoly::pullback(&q);
        let left = lifted.moyal_star(&g)?;
        let right = g.moyal_star_negated(&lifted)?;
        if left == right {
            mirror_passed += 1;
        }
    }
    checks.push(Check::new(
        "pullback-mirror",
        mirror_passed == cases,
        format!("{mirror_passed}/{cases} pullback products match their l -> -l mirrors"),
    ));

    let mut duality_ok = true;
    for k in 2..=n.min(3) {
        let samples: Vec<_> = (0..cases.min(10))
            .map(|_| sampler.constants_matrix(k))
            .collect();
        duality_ok &= lambda_duality_report(k, &samples)?.holds();
    }
    checks.push(Check::new(
        "two-sided-duality",
        duality_ok,
        format!("right-sided normalizers are l-mirrors of left-sided ones up to n = {}", n.min(3)),
    ));

    let mut kernel_passed = 0usize;
    for case in 0..cases {
        let m = 1 + (case % 2);
        let f = sampler.phase_polynomial(m, max_degree, 3);
        let g = sampler.phase_polynomial(m, max_degree, 3);
        let h = sampler.phase_polynomial(m, max_degree, 3);
        let assoc = f.moyal_star(&g)?.moyal_star(&h)? == f.moyal_star(&g.moyal_star(&h)?)?;
        let one = PhasePolynomial::one(m);
        let unit = one.moyal_star(&f)? == f && f.moyal_star(&one)? == f;
        let product = f.moyal_star(&g)?;
        let degree_ok = match (f.degree(), g.degree(), product.degree()) {
            (Some(df), Some(dg), Some(dp)) => dp <= df + dg,
            _ => true,
        };
        let classical = &product - &f.classical_mul(&g)?;
        let shift = min_coefficient_order(&f) + min_coefficient_order(&g);
        let limit_ok = classical
            .terms()
            .all(|(_, c)| c.pole_order_at_zero().map_or(false, |o| o >= shift + 1));
        if assoc && unit && degree_ok && limit_ok {
            kernel_passed += 1;
        }
    }
    checks.push(Check::new(
        "star-kernel-properties",
        kernel_passed == cases,
        format!("{kernel_passed}/{cases} cases: associativity, unit law, degree bound, classical limit"),
    ));

    Ok(Report::new(
        "verify",
        json!({
            "n": n,
            "cases": cases,
            "seed": seed,
            "max_degree": max_degree,
            "max_coeff": max_coeff,
        }),
        json!({
            "suites": checks.len(),
            "max_multiplicity": n,
            "cases_per_suite": cases,
            "seed": seed,
        }),
        checks,
    ))
}

fn run_explore(m: usize, ideal: &[String], degree: u32, slack: u32) -> Result<Report> {
    if m == 0 {
        return Err(Error::InvalidJob("m must be at least 1".to_string()));
    }
    let cap = max_degree_cap()?;
    let total = degree.checked_add(slack).ok_or_else(|| {
        Error::InvalidJob("degree plus slack overflows the degree range".to_string())
    })?;
    if total > cap {
        return Err(Error::InvalidJob(format!(
            "degree {degree} plus slack {slack} exceeds the cap {cap} (raise STARALG_MAX_DEGREE to override)"
        )));
    }
    let mut generators = Vec::new();
    for src in ideal {
        let g = parse_base_polynomial(src, m)?;
        if g.is_zero() {
            return Err(Error::InvalidJob(format!("ideal generator `{src}` is zero")));
        }
        generators.push(g);
    }
    let tq = quotient_truncated(m, &generators, degree, slack)?;
    let slice = IdealSlice::build(m, &generators, degree, slack)?;
    let summary = tq.summary();
    let checks = vec![
        Check::new(
            "slice-stabilized",
            slice.stabilized(),
            "raising the construction slack adds no ideal elements below the bound",
        ),
        Check::new(
            "quotient-stabilized",
            tq.stabilized(),
            "the truncated quotient is unchanged under extra slack",
        ),
        Check::new(
            "closure",
            tq.closure_ok(),
            format!(
                "all {} in-bound products of representatives stay in the span",
                tq.closure_pairs()
            ),
        ),
    ];
    Ok(Report::new(
        "explore",
        json!({
            "m": m,
            "ideal": ideal,
            "degree": degree,
            "slack": slack,
        }),
        json!({
            "quotient": serde_json::to_value(&summary).expect("serializable"),
            "slice": serde_json::to_value(slice.summary()).expect("serializable"),
        }),
        checks,
    ))
}

pub fn execute(command: &Command) -> Result<Report> {
    match command {
        Command::Star { f, g, m } => run_star(f, g, *m),
        Command::Quantize { n } => run_quantize(*n),
        Command::Matrix { n, lambda } => run_matrix(*n, lambda.as_deref()),
        Command::Structure { n } => run_structure(*n),
        Command::Verify {
            n,
            cases,
            seed,
            max_degree,
            max_coeff,
        } => run_verify(*n, *cases, *seed, *max_degree, *max_coeff),
        Command::Explore {
            m,
            ideal,
            degree,
            slack,
        } => run_explore(*m, ideal, *degree, *slack),
    }
}

fn exit_code_for(error: &Error) -> i32 {
    match error {
        Error::Parse { .. }
        | Error::InvalidJob(_)
        | Error::UnknownVariable(_)
        | Error::InvalidMultiplicity
        | Error::LambdaZero
        | Error::DimensionMismatch { .. }
        | Error::DegreeExceedsSlice { .. } => 2,
        _ => 1,
    }
}

/// Run a parsed command line to completion; returns the process exit code.
pub fn run(cli: Cli) -> i32 {
    match execute(&cli.command) {
        Ok(report) => {
            let rendered = match cli.format {
                Format::Json => report.to_json(),
                Format::Text => report.to_text(),
            };
            if let Some(path) = &cli.out {
                if let Err(e) = std::fs::write(path, rendered.as_bytes()) {
                    eprintln!("error: cannot write {}: {e}", path.display());
                    return 2;
                }
            } else {
                use std::io::Write;
                // Tolerate a closed pipe (e.g. piping into `head`).
                if let Err(e) = writeln!(std::io::stdout(), "{rendered}") {
                    if e.kind() != std::io::ErrorKind::BrokenPipe {
                        eprintln!("error: cannot write report: {e}");
                        return 2;
                    }
                }
            }
            if report.all_pass() {
                0
            } else {
                1
            }
        }
        Err(e) => {
            eprintln!("error: {e}");
            exit_code_for(&e)
        }
    }
}
