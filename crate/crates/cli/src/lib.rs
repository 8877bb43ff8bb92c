//! Commands behind the `derivscope` binary. Each returns a JSON document
//! and whether every check in it passed.

pub mod format;
pub mod report;

use std::path::{Path, PathBuf};

use derivscope::catalog::{self, CatalogEntry};
use derivscope::derivations::{derivation_space, is_excluded_parameter, omega_space, phi};
use derivscope::linalg::{int, ratio};
use derivscope::verifier::{self, check_constancy, VerifyConfig};
use derivscope::{Algebra, DerivationParams, Rational};
use serde_json::{json, Map, Value};
use thiserror::Error;

pub use format::{parse, parse_rational, parse_rational_list, serialize, ParseError};

/// Input problems; all of them map to exit code 2.
#[derive(Debug, Error)]
pub enum CliError {
    #[error("{path}: {source}")]
    Io {
        path: PathBuf,
        source: std::io::Error,
    },
    #[error("{path}: {source}")]
    Parse { path: PathBuf, source: ParseError },
    #[error("{0}")]
    Catalog(#[from] catalog::CatalogError),
    #[error("`{value}` is not a valid {what}")]
    BadValue { what: &'static str, value: String },
    #[error("{0}")]
    Usage(String),
}

pub struct Outcome {
    pub document: Value,
    pub pass: bool,
}

pub fn default_t_set() -> Vec<Rational> {
    vec![int(-2), int(-1), ratio(1, 2), int(2), int(3)]
}

pub fn default_s_samples() -> Vec<Rational> {
    vec![int(1), int(2), int(3)]
}

pub fn read_algebra(path: &Path) -> Result<Algebra, CliError> {
    let text = std::fs::read_to_string(path).map_err(|source| CliError::Io {
        path: path.to_path_buf(),
        source,
    })?;
    format::parse(&text).map_err(|source| CliError::Parse {
        path: path.to_path_buf(),
        source,
    })
}

fn subject(a: &Algebra, path: &Path) -> String {
    a.name().map_or_else(|| path.display().to_string(), str::to_string)
}

pub fn cmd_info(path: &Path) -> Result<Outcome, CliError> {
    let a = read_algebra(path)?;
    let derived = a.derived_algebra();
    let center = a.center();
    let center_derived = center.intersect(&derived).expect("same ambient space");
    let results = vec![json!({
        "n": a.dim(),
        "is_lie": a.is_lie(),
        "is_perfect": a.is_perfect(),
        "derived": derived.dim(),
        "center": center.dim(),
        "center_derived": center_derived.dim(),
        "lower_central": a.lower_central_second().dim(),
        "omega": omega_space(&a).dim(),
    })];
    Ok(Outcome {
        document: report::document(&subject(&a, path), "info", Map::new(), results, true),
        pass: true,
    })
}

pub fn cmd_derive(path: &Path, p: &DerivationParams) -> Result<Outcome, CliError> {
    let a = read_algebra(path)?;
    let space = derivation_space(&a, p);
    let mut params = Map::new();
    params.insert("alpha".into(), report::rational(&p.alpha));
    params.insert("beta".into(), report::rational(&p.beta));
    params.insert("gamma".into(), report::rational(&p.gamma));
    let basis: Vec<Value> = space.basis().iter().map(|d| report::matrix(d.matrix())).collect();
    let results = vec![json!({ "dimension": space.dim(), "basis": basis })];
    Ok(Outcome {
        document: report::document(&subject(&a, path), "derive", params, results, true),
        pass: true,
    })
}

pub fn cmd_phi(path: &Path, t_set: &[Rational]) -> Result<Outcome, CliError> {
    let a = read_algebra(path)?;
    let mut params = Map::new();
    params.insert("t_set".into(), report::rationals(t_set));
    let mut results: Vec<Value> = t_set
        .iter()
        .map(|t| json!({ "t": report::rational(t), "phi": phi(&a, t) }))
        .collect();
    let mut pass = true;
    if !t_set.is_empty() && a.is_lie() && !t_set.iter().any(is_excluded_parameter) {
        let constancy = check_constancy(&a, t_set);
        pass = constancy.passed();
        results.push(report::check(&constancy));
    }
    Ok(Outcome {
        document: report::document(&subject(&a, path), "phi", params, results, pass),
        pass,
    })
}

pub enum VerifyTarget<'a> {
    File(&'a Path),
    Catalog,
}

pub fn cmd_verify(target: VerifyTarget<'_>, config: &VerifyConfig) -> Result<Outcome, CliError> {
    let (subject, reports) = match target {
        VerifyTarget::File(path) => {
            let a = read_algebra(path)?;
            let subject = subject(&a, path);
            let entry = CatalogEntry::new(a.with_name(subject.clone()), Vec::new());
            (subject, verifier::run_on(&[entry], config))
        }
        VerifyTarget::Catalog => ("catalog".to_string(), verifier::run_all(config)),
    };
    let pass = verifier::overall_pass(&reports);
    let mut params = Map::new();
    params.insert("t_set".into(), report::rationals(&config.t_set));
    params.insert("s_samples".into(), report::rationals(&config.s_samples));
    params.insert("seed".into(), config.seed.into());
    let results = reports.iter().map(report::check).collect();
    Ok(Outcome {
        document: report::document(&subject, "verify", params, results, pass),
        pass,
    })
}

/// `name params...` from the catalog, as file text.
pub fn cmd_catalog(name: &str, params: &[String]) -> Result<String, CliError> {
    let values = params
        .iter()
        .map(|s| {
            format::parse_rational(s).ok_or_else(|| CliError::BadValue {
                what: "rational parameter",
                value: s.clone(),
            })
        })
        .collect::<Result<Vec<_>, _>>()?;
    Ok(format::serialize(&catalog::by_name(name, &values)?))
}

pub fn catalog_listing() -> String {
    catalog::NAMES
        .iter()
        .map(|(name, args)| if args.is_empty() { format!("{name}\n") } else { format!("{name} {args}\n") })
        .collect()
}

/// `DERIVSCOPE_THREADS`: a thread cap, `0` for sequential.
pub fn threads_from_env(value: Option<&str>) -> Result<Option<usize>, CliError> {
    match value {
        None => Ok(None),
        Some(v) => v.trim().parse::<usize>().map(Some).map_err(|_| CliError::BadValue {
            what: "DERIVSCOPE_THREADS value",
            value: v.to_string(),
        }),
    }
}
