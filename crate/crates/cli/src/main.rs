use std::fmt::Write as _;
use std::fs;
use std::path::{Path, PathBuf};
use std::process::ExitCode;

use clap::{Args, Parser, Subcommand};
use rayon::prelude::*;
use serde_json::{json, Value};

use charvar::family::{enumerate_alpha, enumerate_alpha_par, hp_invariants, FamilyError, FamilySpec};
use charvar::homology::{clean_model_sheaf, milnor_brieskorn_pham, Catalog};
use charvar::presentation::{parse_presentation, Presentation};
use charvar::rep::{
    build_poly_system, rep_report, trace_coordinates, trace_subsets, PolySystemError, RepError, Representation,
    RepresentationJson, TraceError,
};
use charvar::selfcheck::{corrupt_entry, run_self_check};

#[derive(Parser)]
#[command(name = "charvar", version, about = "SL(2,C) character varieties and Casson-type invariants")]
struct Cli {
    #[command(subcommand)]
    command: Command,
    /// Write output here instead of stdout.
    #[arg(long, global = true)]
    out: Option<PathBuf>,
    /// Pretty-print JSON.
    #[arg(long, global = true)]
    pretty: bool,
    /// Worker threads for batch and enumeration work.
    #[arg(long, global = true, value_name = "N")]
    jobs: Option<usize>,
}

#[derive(Args)]
struct RepArgs {
    /// Presentation file; overrides any presentation embedded in the representation files.
    #[arg(long)]
    presentation: Option<PathBuf>,
    /// Representation JSON file (repeat for a batch).
    #[arg(long = "rep", required = true)]
    reps: Vec<PathBuf>,
}

#[derive(Subcommand)]
enum Command {
    /// Classification, cocycles, regularity and trace coordinates of representations.
    RepReport(RepArgs),
    /// Polynomial equations cutting out the representation variety.
    PolySystem {
        #[arg(long)]
        presentation: PathBuf,
    },
    /// Trace coordinates on subset products of generators.
    Traces(RepArgs),
    /// HP, HP#, and Casson-type invariants of a family member.
    Family {
        /// S3, connsum:k, lens:p,q, brieskorn:p,q,r or seifert:a1,...,an
        #[arg(long)]
        family: String,
    },
    /// List the alpha-tuples of a Seifert fibered homology sphere.
    AlphaEnum {
        /// brieskorn:p,q,r or seifert:a1,...,an
        #[arg(long)]
        family: String,
    },
    /// Milnor number of a Brieskorn-Pham singularity, or a clean local model.
    Milnor {
        /// Exponents a1,...,an of x1^a1 + ... + xn^an.
        #[arg(long, value_delimiter = ',', conflicts_with = "clean", required_unless_present = "clean")]
        exponents: Vec<u64>,
        /// n,k for the function x_{k+1}^2 + ... + x_n^2 on C^n.
        #[arg(long, value_delimiter = ',', num_args = 1)]
        clean: Option<Vec<u32>>,
    },
    /// Run the built-in check battery.
    SelfCheck {
        /// Replace a catalog entry by a broken one (for testing the checks).
        #[arg(long, hide = true)]
        corrupt_catalog: Option<String>,
    },
}

struct CliError {
    kind: &'static str,
    message: String,
    code: u8,
}

impl CliError {
    fn input(message: impl Into<String>) -> Self {
        CliError {
            kind: "input",
            message: message.into(),
            code: 2,
        }
    }

    fn semantic(message: impl Into<String>) -> Self {
        CliError {
            kind: "semantic",
            message: message.into(),
            code: 3,
        }
    }

    fn internal(message: impl Into<String>) -> Self {
        CliError {
            kind: "internal",
            message: message.into(),
            code: 4,
        }
    }
}

impl From<RepError> for CliError {
    fn from(e: RepError) -> Self {
        match e {
            RepError::Parse(_) | RepError::Malformed(_) | RepError::Field(_) | RepError::ContextMismatch => {
                CliError::input(e.to_string())
            }
            RepError::ImageCount { .. } | RepError::DeterminantNotOne { .. } | RepError::RelatorNotSatisfied { .. } => {
                CliError {
                    kind: "invalid_representation",
                    message: e.to_string(),
                    code: 3,
                }
            }
        }
    }
}

impl From<FamilyError> for CliError {
    fn from(e: FamilyError) -> Self {
        CliError::input(e.to_string())
    }
}

impl From<TraceError> for CliError {
    fn from(e: TraceError) -> Self {
        CliError::semantic(e.to_string())
    }
}

impl From<PolySystemError> for CliError {
    fn from(e: PolySystemError) -> Self {
        CliError::internal(e.to_string())
    }
}

fn read(path: &Path) -> Result<String, CliError> {
    fs::read_to_string(path).map_err(|e| CliError {
        kind: "io",
        message: format!("{}: {e}", path.display()),
        code: 2,
    })
}

fn load_presentation(path: &Path) -> Result<Presentation, CliError> {
    parse_presentation(&read(path)?).map_err(|e| CliError::input(format!("{}: {e}", path.display())))
}

fn load_rep(path: &Path, presentation: Option<&Presentation>) -> Result<Representation, CliError> {
    let j: RepresentationJson =
        serde_json::from_str(&read(path)?).map_err(|e| CliError::input(format!("{}: {e}", path.display())))?;
    if presentation.is_none() && j.presentation.trim().is_empty() {
        return Err(CliError::input(format!(
            "{}: no presentation embedded and none given with --presentation",
            path.display()
        )));
    }
    Representation::from_json(&j, presentation).map_err(|e| {
        let mut err = CliError::from(e);
        err.message = format!("{}: {}", path.display(), err.message);
        err
    })
}

/// Applies `f` to every representation file, in parallel, keeping input
/// order. A single file yields its value directly, several yield an array.
fn over_reps(args: &RepArgs, f: impl Fn(&Representation) -> Result<Value, CliError> + Sync) -> Result<Value, CliError> {
    let pres = args.presentation.as_deref().map(load_presentation).transpose()?;
    let results: Vec<Result<Value, CliError>> = args
        .reps
        .par_iter()
        .map(|path| {
            let rho = load_rep(path, pres.as_ref())?;
            f(&rho).map_err(|mut e| {
                e.message = format!("{}: {}", path.display(), e.message);
                e
            })
        })
        .collect();
    let mut values = Vec::with_capacity(results.len());
    for r in results {
        values.push(r?);
    }
    if values.len() == 1 {
        return Ok(values.pop().expect("one value"));
    }
    Ok(Value::Array(
        args.reps
            .iter()
            .zip(values)
            .map(|(p, v)| json!({"rep": p.display().to_string(), "result": v}))
            .collect(),
    ))
}

fn rep_report_value(rho: &Representation) -> Result<Value, CliError> {
    let report = rep_report(rho)?;
    if !report.jacobian_check.passed() {
        return Err(CliError::internal(format!(
            "Jacobian nullity {} disagrees with Fox-calculus dim Z1 {}",
            report.jacobian_check.jacobian_nullity, report.jacobian_check.fox_dim_z1
        )));
    }
    Ok(serde_json::to_value(report).expect("report serializes"))
}

fn traces_value(rho: &Representation) -> Result<Value, CliError> {
    let traces = trace_coordinates(rho)?;
    let names = rho.presentation().names();
    let entries: Vec<Value> = trace_subsets(rho.num_generators())
        .into_iter()
        .zip(traces)
        .map(|(s, t)| {
            let word: String = s.iter().map(|&i| names[i].as_str()).collect::<Vec<_>>().join("*");
            json!({"word": word, "value": t.to_string(), "exact": t.to_json()})
        })
        .collect();
    Ok(Value::Array(entries))
}

fn poly_system_value(p: &Presentation) -> Value {
    let sys = build_poly_system(p);
    let polys: Vec<Value> = sys
        .polynomials
        .iter()
        .zip(&sys.origins)
        .map(|(poly, origin)| json!({"polynomial": poly.display_with(&sys.var_names), "origin": origin}))
        .collect();
    json!({"variables": sys.var_names, "equations": polys})
}

fn seifert_exponents(spec: &str) -> Result<Vec<u64>, CliError> {
    match spec.parse::<FamilySpec>()? {
        FamilySpec::Brieskorn(a) => Ok(a.to_vec()),
        FamilySpec::Seifert(a) => Ok(a),
        other => Err(CliError::input(format!("alpha-enum needs a brieskorn or seifert family, got {other}"))),
    }
}

fn self_check_table(corrupt: Option<&str>) -> Result<(String, bool), CliError> {
    let mut catalog = Catalog::standard();
    if let Some(name) = corrupt {
        let space = Catalog::listed_spaces()
            .into_iter()
            .find(|s| s.name() == name)
            .ok_or_else(|| CliError::input(format!("unknown catalog entry {name:?}")))?;
        let bad = corrupt_entry(catalog.entry(space));
        catalog = catalog.with_override(bad);
    }
    let results = run_self_check(&catalog);
    let mut out = String::new();
    for r in &results {
        let status = if r.passed { "PASS" } else { "FAIL" };
        writeln!(out, "{:>2}  {status}  {:<34} {}", r.id, r.name, r.detail).expect("string write");
    }
    let passed = results.iter().filter(|r| r.passed).count();
    writeln!(out, "{passed}/{} checks passed", results.len()).expect("string write");
    Ok((out, passed == results.len()))
}

fn run(cli: &Cli) -> Result<(String, u8), CliError> {
    let value = match &cli.command {
        Command::RepReport(args) => over_reps(args, rep_report_value)?,
        Command::Traces(args) => over_reps(args, traces_value)?,
        Command::PolySystem { presentation } => poly_system_value(&load_presentation(presentation)?),
        Command::Family { family } => {
            let spec: FamilySpec = family.parse()?;
            let report = hp_invariants(&spec, &Catalog::standard(), cli.jobs != Some(1))?;
            if !report.consistent() {
                let failed: Vec<&str> = report.checks.iter().filter(|c| !c.passed).map(|c| c.name.as_str()).collect();
                return Err(CliError::internal(format!("consistency checks failed: {}", failed.join(", "))));
            }
            serde_json::to_value(report).expect("report serializes")
        }
        Command::AlphaEnum { family } => {
            let a = seifert_exponents(family)?;
            let tuples = if cli.jobs == Some(1) {
                enumerate_alpha(&a)?
            } else {
                enumerate_alpha_par(&a)?
            };
            let mut counts = std::collections::BTreeMap::new();
            for t in &tuples {
                *counts.entry(t.m()).or_insert(0u64) += 1;
            }
            json!({"exponents": charvar::family::arrange_exponents(&a)?, "m_counts": counts, "tuples": tuples})
        }
        Command::Milnor { exponents, clean } => match clean {
            Some(nk) => {
                let [n, k] = nk[..] else {
                    return Err(CliError::input("--clean takes n,k"));
                };
                let model = clean_model_sheaf(n, k, &Catalog::standard()).map_err(|e| CliError::input(e.to_string()))?;
                serde_json::to_value(model).expect("model serializes")
            }
            None => {
                let (mu, stalk) = milnor_brieskorn_pham(exponents).map_err(|e| CliError::input(e.to_string()))?;
                json!({"exponents": exponents, "mu": mu, "stalk": stalk})
            }
        },
        Command::SelfCheck { corrupt_catalog } => {
            let (table, ok) = self_check_table(corrupt_catalog.as_deref())?;
            return Ok((table, if ok { 0 } else { 1 }));
        }
    };
    let mut text = if cli.pretty {
        serde_json::to_string_pretty(&value)
    } else {
        serde_json::to_string(&value)
    }
    .expect("JSON values serialize");
    text.push('\n');
    Ok((text, 0))
}

fn main() -> ExitCode {
    let cli = Cli::parse();
    if let Some(n) = cli.jobs {
        if n == 0 {
            eprintln!("{}", json!({"error": {"kind": "input", "message": "--jobs must be at least 1"}}));
            return ExitCode::from(2);
        }
        rayon::ThreadPoolBuilder::new().num_threads(n).build_global().ok();
    }
    match run(&cli) {
        Ok((text, code)) => {
            let written = match &cli.out {
                Some(path) => fs::write(path, &text).map_err(|e| format!("{}: {e}", path.display())),
                None => {
                    print!("{text}");
                    Ok(())
                }
            };
            match written {
                Ok(()) => ExitCode::from(code),
                Err(message) => {
                    eprintln!("{}", json!({"error": {"kind": "io", "message": message}}));
                    ExitCode::from(2)
                }
            }
        }
        Err(e) => {
            eprintln!("{}", json!({"error": {"kind": e.kind, "message": e.message}}));
            ExitCode::from(e.code)
        }
    }
}
