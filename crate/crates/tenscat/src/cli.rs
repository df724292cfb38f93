//! Command-line surface: one subcommand per operation, JSON files in,
//! deterministic JSON reports out. Exit codes: 0 success/true, 1 a checked
//! property fails, 2 invalid input, 3 a resource cap was hit.

use crate::algnum::AlgNumError;
use crate::catalog::{self, CatalogError, GroupSpec};
use crate::functors::{EmbedJson, FunctorData, FunctorError, FunctorJson};
use crate::nimrep::{self, NimrepError};
use crate::poly::PolyError;
use crate::report::{Report, Severity};
use crate::ring::GrVector;
use crate::simplecheck::{self, AlgebraSpecJson};
use crate::tensorcat::{TcError, TensorCatData, TensorCatJson};
use clap::{Parser, Subcommand};
use std::path::{Path, PathBuf};

pub const EXIT_OK: i32 = 0;
pub const EXIT_PROPERTY_FAILS: i32 = 1;
pub const EXIT_INVALID_INPUT: i32 = 2;
pub const EXIT_RESOURCE_CAP: i32 = 3;

#[derive(Parser)]
#[command(
    name = "tenscat",
    version,
    about = "Exact Grothendieck-level computations for finite tensor categories"
)]
struct Cli {
    /// Echo findings to standard error in human-readable form.
    #[arg(long, global = true)]
    verbose: bool,
    #[command(subcommand)]
    command: Command,
}

#[derive(Subcommand)]
enum Command {
    /// Check the based-ring and Cartan invariants of a category file.
    Validate { file: PathBuf },
    /// Frobenius-Perron dimensions of the simples and of the category, or
    /// of one Grothendieck class.
    Fpdim {
        file: PathBuf,
        /// Comma-separated integer coefficients in label order.
        #[arg(long)]
        object: Option<String>,
    },
    /// Coefficients of the regular object over the projectives.
    Regular { file: PathBuf },
    /// The distinguished invertible object and the duality map on
    /// projectives.
    Distinguished { file: PathBuf },
    /// Exact Cartan ranks and the degeneracy diagnostic.
    Cartan { file: PathBuf },
    /// Decomposition of P_i (x) P_j over the projectives.
    ProjFusion { file: PathBuf, i: usize, j: usize },
    /// Validate quasi-tensor functor data.
    FunctorCheck { file: PathBuf },
    /// The freeness identity F(R_src) = ratio * R_tgt for a surjective
    /// functor.
    Freeness { file: PathBuf },
    /// Divisibility certificate for a tensor subcategory embedding.
    Lagrange {
        sub: PathBuf,
        amb: PathBuf,
        map: PathBuf,
    },
    /// Complete census of irreducible integer-matrix modules up to the
    /// given rank.
    Nimrep {
        file: PathBuf,
        #[arg(long)]
        max_rank: usize,
        #[arg(long)]
        no_duality: bool,
    },
    /// Emit a bundled example category as JSON (taft:L, modular-cyclic:P^N,
    /// group:S3, pointed:2x2, fibonacci).
    Example { name: String },
    /// Module-category censuses: taft:L or repg:SPEC[:CHAR].
    Census { what: String },
    /// Certify that an algebra described by a spec file is simple from the
    /// right.
    Simplecheck { file: PathBuf },
    /// Compute the derivation filtration of an algebra spec and verify its
    /// properties.
    Filtration { file: PathBuf },
}

pub fn run_from_env() -> i32 {
    let cli = Cli::parse();
    let (output, code) = dispatch(&cli);
    println!("{output}");
    code
}

fn dispatch(cli: &Cli) -> (String, i32) {
    match run_command(&cli.command) {
        Ok((mut report, code)) => {
            if cli.verbose {
                report.print_verbose();
            }
            (report.render(), code)
        }
        Err(CliFailure::Raw(text, code)) => (text, code),
        Err(CliFailure::Message(msg, code)) => {
            let mut report = Report::new("error", &[msg.as_bytes()]);
            report.add_finding(Severity::Error, "error", msg, None);
            if cli.verbose {
                report.print_verbose();
            }
            (report.render(), code)
        }
    }
}

enum CliFailure {
    Message(String, i32),
    /// Pre-rendered output (used by `example`, which emits a data file).
    Raw(String, i32),
}

fn invalid(msg: String) -> CliFailure {
    CliFailure::Message(msg, EXIT_INVALID_INPUT)
}

impl From<std::io::Error> for CliFailure {
    fn from(e: std::io::Error) -> Self {
        invalid(format!("io error: {e}"))
    }
}

impl From<serde_json::Error> for CliFailure {
    fn from(e: serde_json::Error) -> Self {
        invalid(format!(
            "malformed JSON at line {}, column {}: {e}",
            e.line(),
            e.column()
        ))
    }
}

impl From<CatalogError> for CliFailure {
    fn from(e: CatalogError) -> Self {
        invalid(e.to_string())
    }
}

impl From<TcError> for CliFailure {
    fn from(e: TcError) -> Self {
        match &e {
            TcError::AlgNum(AlgNumError::Degree(PolyError::DegreeTooLarge(_, _))) => {
                CliFailure::Message(e.to_string(), EXIT_RESOURCE_CAP)
            }
            TcError::Ambiguous(_) => CliFailure::Message(e.to_string(), EXIT_PROPERTY_FAILS),
            _ => invalid(e.to_string()),
        }
    }
}

impl From<FunctorError> for CliFailure {
    fn from(e: FunctorError) -> Self {
        match &e {
            FunctorError::NotSurjective => {
                CliFailure::Message(e.to_string(), EXIT_PROPERTY_FAILS)
            }
            FunctorError::Tc(TcError::AlgNum(AlgNumError::Degree(
                PolyError::DegreeTooLarge(_, _),
            ))) => CliFailure::Message(e.to_string(), EXIT_RESOURCE_CAP),
            _ => invalid(e.to_string()),
        }
    }
}

impl From<NimrepError> for CliFailure {
    fn from(e: NimrepError) -> Self {
        match &e {
            NimrepError::RankTooLarge(_, _) => {
                CliFailure::Message(e.to_string(), EXIT_RESOURCE_CAP)
            }
            _ => invalid(e.to_string()),
        }
    }
}

impl From<simplecheck::SimpleCheckError> for CliFailure {
    fn from(e: simplecheck::SimpleCheckError) -> Self {
        match &e {
            simplecheck::SimpleCheckError::DimensionOverflow { .. } => {
                CliFailure::Message(e.to_string(), EXIT_RESOURCE_CAP)
            }
            _ => invalid(e.to_string()),
        }
    }
}

fn load_cat(path: &Path) -> Result<(TensorCatData, Vec<u8>), CliFailure> {
    let bytes = std::fs::read(path)?;
    let json: TensorCatJson = serde_json::from_slice(&bytes)?;
    let cat = json.to_cat().map_err(|e| invalid(e.to_string()))?;
    Ok((cat, bytes))
}

fn parse_object(cat: &TensorCatData, s: &str) -> Result<GrVector, CliFailure> {
    let coeffs: Result<Vec<i64>, _> = s.split(',').map(|p| p.trim().parse::<i64>()).collect();
    let coeffs = coeffs.map_err(|e| invalid(format!("bad object vector: {e}")))?;
    if coeffs.len() != cat.rank() {
        return Err(invalid(format!(
            "object vector has {} entries, category has {} simples",
            coeffs.len(),
            cat.rank()
        )));
    }
    Ok(GrVector(coeffs))
}

fn run_command(cmd: &Command) -> Result<(Report, i32), CliFailure> {
    match cmd {
        Command::Validate { file } => {
            let (cat, bytes) = load_cat(file)?;
            let mut report = Report::new("validate", &[&bytes]);
            let violations = cat.validate();
            report.add_violations(&violations);
            let code = if violations.is_empty() {
                EXIT_OK
            } else {
                EXIT_INVALID_INPUT
            };
            Ok((report, code))
        }
        Command::Fpdim { file, object } => {
            let (cat, bytes) = load_cat(file)?;
            let mut report = Report::new("fpdim", &[&bytes]);
            reject_invalid(&cat)?;
            match object {
                Some(s) => {
                    let x = parse_object(&cat, s)?;
                    let v = cat.fpdim_object(&x)?.to_real().map_err(TcError::from)?;
                    report.add_value("object", &v, 4);
                }
                None => {
                    let fp = cat.fpdims()?;
                    for (i, d) in fp.dims.iter().enumerate() {
                        let v = d.to_real().map_err(TcError::from)?;
                        report.add_value(&format!("simple:{}", cat.ring.labels[i]), &v, 4);
                    }
                    let total = cat.fpdim_category()?.to_real().map_err(TcError::from)?;
                    report.add_value("category", &total, 4);
                }
            }
            Ok((report, EXIT_OK))
        }
        Command::Regular { file } => {
            let (cat, bytes) = load_cat(file)?;
            let mut report = Report::new("regular", &[&bytes]);
            reject_invalid(&cat)?;
            let reg = cat.regular_object()?;
            for (i, c) in reg.iter().enumerate() {
                let v = c.to_real().map_err(TcError::from)?;
                report.add_value(&format!("P:{}", cat.ring.labels[i]), &v, 4);
            }
            Ok((report, EXIT_OK))
        }
        Command::Distinguished { file } => {
            let (cat, bytes) = load_cat(file)?;
            let mut report = Report::new("distinguished", &[&bytes]);
            reject_invalid(&cat)?;
            match cat.distinguished() {
                Ok(d) => {
                    report.add_data(
                        "rho",
                        serde_json::json!(cat.ring.labels[d.rho].clone()),
                    );
                    report.add_data(
                        "D",
                        serde_json::json!(d
                            .d_map
                            .iter()
                            .enumerate()
                            .map(|(i, &v)| (
                                cat.ring.labels[i].clone(),
                                cat.ring.labels[v].clone()
                            ))
                            .collect::<std::collections::BTreeMap<_, _>>()),
                    );
                    report.add_data(
                        "unimodular",
                        serde_json::json!(d.rho == cat.ring.unit),
                    );
                    Ok((report, EXIT_OK))
                }
                Err(TcError::Ambiguous(cands)) => {
                    report.add_finding(
                        Severity::Warning,
                        "ambiguous",
                        format!("{} consistent pairs without socle data", cands.len()),
                        None,
                    );
                    report.add_data(
                        "candidates",
                        serde_json::json!(cands
                            .iter()
                            .map(|c| cat.ring.labels[c.rho].clone())
                            .collect::<Vec<_>>()),
                    );
                    Ok((report, EXIT_PROPERTY_FAILS))
                }
                Err(e) => Err(e.into()),
            }
        }
        Command::Cartan { file } => {
            let (cat, bytes) = load_cat(file)?;
            let mut report = Report::new("cartan", &[&bytes]);
            reject_invalid(&cat)?;
            let r = cat.cartan_rank();
            report.add_data("rank_over_q", serde_json::json!(r.over_q));
            if let Some(p) = r.over_fp {
                report.add_data("rank_over_fp", serde_json::json!(p));
            }
            report.add_data("rank_ground", serde_json::json!(r.ground));
            report.add_data("simples", serde_json::json!(cat.rank()));
            if r.lorentz_violation {
                report.add_finding(
                    Severity::Error,
                    "lorentz_violation",
                    "nonsemisimple pivotal data with a nondegenerate Cartan matrix".into(),
                    None,
                );
                Ok((report, EXIT_PROPERTY_FAILS))
            } else {
                Ok((report, EXIT_OK))
            }
        }
        Command::ProjFusion { file, i, j } => {
            let (cat, bytes) = load_cat(file)?;
            let mut report = Report::new("proj-fusion", &[&bytes]);
            reject_invalid(&cat)?;
            let b = cat.proj_fusion(*i, *j)?;
            report.add_data(
                "decomposition",
                serde_json::json!(cat
                    .ring
                    .labels
                    .iter()
                    .zip(&b)
                    .map(|(l, &c)| (l.clone(), c))
                    .collect::<std::collections::BTreeMap<_, _>>()),
            );
            Ok((report, EXIT_OK))
        }
        Command::FunctorCheck { file } => {
            let (f, bytes) = load_functor(file)?;
            let mut report = Report::new("functor-check", &[&bytes]);
            let violations = f.validate()?;
            report.add_violations(&violations);
            let code = if violations.is_empty() {
                if let Ok(s) = f.is_surjective() {
                    report.add_data("surjective", serde_json::json!(s));
                }
                if let Ok(i) = f.is_injective() {
                    report.add_data("injective", serde_json::json!(i));
                }
                EXIT_OK
            } else {
                EXIT_INVALID_INPUT
            };
            Ok((report, code))
        }
        Command::Freeness { file } => {
            let (f, bytes) = load_functor(file)?;
            let mut report = Report::new("freeness", &[&bytes]);
            let fr = f.freeness_check()?;
            let ratio = fr.ratio.to_real().map_err(TcError::from)?;
            report.add_value("ratio", &ratio, 4);
            report.add_data("identity_holds", serde_json::json!(fr.ok));
            if let Ok((int_ok, rank)) = f.integer_freeness() {
                report.add_data("integer_rank", serde_json::json!(rank.map(|r| r.to_string())));
                report.add_data("integer_freeness", serde_json::json!(int_ok));
            }
            if fr.ok {
                Ok((report, EXIT_OK))
            } else {
                report.add_finding(
                    Severity::Error,
                    "freeness_identity",
                    "F(R_src) differs from ratio * R_tgt".into(),
                    None,
                );
                Ok((report, EXIT_PROPERTY_FAILS))
            }
        }
        Command::Lagrange { sub, amb, map } => {
            let (sub_cat, sb) = load_cat(sub)?;
            let (amb_cat, ab) = load_cat(amb)?;
            let map_bytes = std::fs::read(map)?;
            let embed_json: EmbedJson = serde_json::from_slice(&map_bytes)?;
            let mut report = Report::new("lagrange", &[&sb, &ab, &map_bytes]);
            let embed = embed_json.resolve(&sub_cat, &amb_cat)?;
            let result = crate::functors::lagrange(&sub_cat, &amb_cat, &embed)?;
            let q = result.quotient.to_real().map_err(TcError::from)?;
            report.add_value("quotient", &q, 4);
            report.add_data("integral", serde_json::json!(result.integral));
            if result.integral {
                Ok((report, EXIT_OK))
            } else {
                report.add_finding(
                    Severity::Error,
                    "lagrange_counterexample",
                    "quotient is not an algebraic integer; the input cannot come from a tensor subcategory".into(),
                    None,
                );
                Ok((report, EXIT_PROPERTY_FAILS))
            }
        }
        Command::Nimrep {
            file,
            max_rank,
            no_duality,
        } => {
            let (cat, bytes) = load_cat(file)?;
            let mut report = Report::new("nimrep", &[&bytes]);
            let modules = nimrep::enumerate(&cat.ring, *max_rank, !no_duality)?;
            report.add_data(
                "modules",
                serde_json::json!(modules
                    .iter()
                    .map(|m| serde_json::json!({
                        "rank": m.rank,
                        "matrices": m.action,
                    }))
                    .collect::<Vec<_>>()),
            );
            report.add_data("count", serde_json::json!(modules.len()));
            Ok((report, EXIT_OK))
        }
        Command::Example { name } => {
            let cat = build_example(name)?;
            let json = TensorCatJson::from_cat(&cat);
            Err(CliFailure::Raw(
                serde_json::to_string_pretty(&json).expect("serialization is infallible"),
                EXIT_OK,
            ))
        }
        Command::Census { what } => run_census(what),
        Command::Simplecheck { file } => {
            let bytes = std::fs::read(file)?;
            let spec: AlgebraSpecJson = serde_json::from_slice(&bytes)?;
            let algebra = simplecheck::build_from_spec(&spec)?;
            let mut report = Report::new("simplecheck", &[&bytes]);
            let result = simplecheck::is_simple_from_right(&algebra);
            report.add_data("dimension", serde_json::json!(algebra.dim));
            report.add_data("closure_dimension", serde_json::json!(result.closure_dimension));
            report.add_data("simple_from_right", serde_json::json!(result.simple));
            if result.simple {
                Ok((report, EXIT_OK))
            } else {
                match &result.witness {
                    Some(basis) => report.add_finding(
                        Severity::Error,
                        "invariant_ideal",
                        format!("invariant right ideal of dimension {}", basis.len()),
                        Some(witness_string(&algebra, basis)),
                    ),
                    None => report.add_finding(
                        Severity::Error,
                        "reducible_over_closure",
                        "reducible over the algebraic closure, no rational witness found".into(),
                        None,
                    ),
                }
                Ok((report, EXIT_PROPERTY_FAILS))
            }
        }
        Command::Filtration { file } => {
            let bytes = std::fs::read(file)?;
            let spec: AlgebraSpecJson = serde_json::from_slice(&bytes)?;
            let algebra = simplecheck::build_from_spec(&spec)?;
            let mut report = Report::new("filtration", &[&bytes]);
            let rep = simplecheck::compute_filtration(&algebra);
            report.add_data(
                "layer_dimensions",
                serde_json::json!(rep.chain.iter().map(|b| b.len()).collect::<Vec<_>>()),
            );
            report.add_data(
                "properties",
                serde_json::json!(rep
                    .properties
                    .iter()
                    .map(|(k, v)| (k.clone(), *v))
                    .collect::<std::collections::BTreeMap<_, _>>()),
            );
            let ok = rep.all_hold();
            if !ok {
                for (label, holds) in &rep.properties {
                    if !holds {
                        report.add_finding(
                            Severity::Error,
                            "filtration_property",
                            format!("property fails: {label}"),
                            None,
                        );
                    }
                }
            }
            Ok((report, if ok { EXIT_OK } else { EXIT_PROPERTY_FAILS }))
        }
    }
}

fn witness_string(
    algebra: &simplecheck::EquivariantAlgebra,
    basis: &[Vec<crate::field::FieldElem>],
) -> String {
    basis
        .iter()
        .map(|v| {
            v.iter()
                .enumerate()
                .filter(|(_, c)| !crate::linalg::ExactScalar::is_zero(*c))
                .map(|(i, c)| format!("{}*{}", c, algebra.basis_names[i]))
                .collect::<Vec<_>>()
                .join(" + ")
        })
        .collect::<Vec<_>>()
        .join("; ")
}

fn reject_invalid(cat: &TensorCatData) -> Result<(), CliFailure> {
    let violations = cat.validate();
    if violations.is_empty() {
        Ok(())
    } else {
        Err(invalid(format!(
            "category data is invalid: {} ({} violations)",
            violations[0].message,
            violations.len()
        )))
    }
}

fn load_functor(path: &Path) -> Result<(FunctorData, Vec<u8>), CliFailure> {
    let bytes = std::fs::read(path)?;
    let json: FunctorJson = serde_json::from_slice(&bytes)?;
    let base = path.parent().unwrap_or_else(|| Path::new("."));
    let (source, sb) = load_cat(&base.join(&json.source))?;
    let (target, tb) = load_cat(&base.join(&json.target))?;
    let mut all = bytes.clone();
    all.extend(sb);
    all.extend(tb);
    Ok((
        FunctorData {
            source,
            target,
            a: json.a.clone(),
            b: json.b.clone(),
            image: json.image_spec(),
        },
        all,
    ))
}

/// Builds a bundled example category from its CLI name.
fn build_example(name: &str) -> Result<TensorCatData, CliFailure> {
    let parts: Vec<&str> = name.split(':').collect();
    match parts.as_slice() {
        ["fibonacci"] => Ok(catalog::build_fibonacci()),
        ["taft", l] => {
            let l: u64 = l.parse().map_err(|_| invalid(format!("bad parameter in {name:?}")))?;
            Ok(catalog::build_taft(l)?)
        }
        ["modular-cyclic", pn] => {
            let (p, n) = match pn.split_once('^') {
                Some((p, n)) => (
                    p.parse().map_err(|_| invalid(format!("bad prime in {name:?}")))?,
                    n.parse().map_err(|_| invalid(format!("bad power in {name:?}")))?,
                ),
                None => (
                    pn.parse().map_err(|_| invalid(format!("bad prime in {name:?}")))?,
                    1,
                ),
            };
            Ok(catalog::build_modular_cyclic(p, n)?)
        }
        ["group", "S3"] => Ok(catalog::build_group_semisimple(&GroupSpec::S3)?),
        ["pointed", spec] => {
            Ok(catalog::build_pointed(&parse_abelian(spec)?, 0)?)
        }
        ["pointed", spec, ch] => {
            let ch: u64 = ch.parse().map_err(|_| invalid(format!("bad characteristic in {name:?}")))?;
            Ok(catalog::build_pointed(&parse_abelian(spec)?, ch)?)
        }
        _ => Err(invalid(format!(
            "unknown example {name:?}; try taft:2, modular-cyclic:3, group:S3, pointed:2x2, fibonacci"
        ))),
    }
}

fn parse_abelian(spec: &str) -> Result<GroupSpec, CliFailure> {
    let factors: Result<Vec<u64>, _> = spec.split('x').map(|p| p.parse::<u64>()).collect();
    let factors = factors.map_err(|_| invalid(format!("bad group spec {spec:?}")))?;
    // trivial factors are dropped, so pointed:1 is the trivial category
    Ok(GroupSpec::Abelian(
        factors.into_iter().filter(|&f| f > 1).collect(),
    ))
}

fn run_census(what: &str) -> Result<(Report, i32), CliFailure> {
    let parts: Vec<&str> = what.split(':').collect();
    let mut report = Report::new("census", &[what.as_bytes()]);
    match parts.as_slice() {
        ["taft", l] => {
            let l: u64 = l
                .parse()
                .map_err(|_| invalid(format!("bad parameter in {what:?}")))?;
            let census = catalog::taft_module_census(l)?;
            report.add_data(
                "entries",
                serde_json::json!(census
                    .entries
                    .iter()
                    .map(|e| serde_json::json!({
                        "description": e.description,
                        "simple_count": e.simple_count,
                        "parameter_dimension": e.parameter_dimension,
                    }))
                    .collect::<Vec<_>>()),
            );
            report.add_data("total", serde_json::json!(census.entries.len()));
            Ok((report, EXIT_OK))
        }
        ["repg", spec] | ["repg", spec, _] => {
            let ch: u64 = if parts.len() == 3 {
                parts[2]
                    .parse()
                    .map_err(|_| invalid(format!("bad characteristic in {what:?}")))?
            } else {
                0
            };
            let g = parse_abelian(spec)?;
            let (total, items) = catalog::count_repg_module_cats(&g, ch)?;
            report.add_data("total", serde_json::json!(total));
            report.add_data(
                "by_subgroup",
                serde_json::json!(items
                    .iter()
                    .map(|(d, c)| serde_json::json!({"subgroup": d, "classes": c}))
                    .collect::<Vec<_>>()),
            );
            Ok((report, EXIT_OK))
        }
        _ => Err(invalid(format!(
            "unknown census {what:?}; try taft:4 or repg:2x2:2"
        ))),
    }
}
