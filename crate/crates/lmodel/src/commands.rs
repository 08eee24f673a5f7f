//! Subcommand implementations. Each returns the JSON document to emit and its status.

use std::fs;
use std::path::{Path, PathBuf};

use charts::{chart_generators, ChartSpec, Level};
use charts::{Case, OrthExample};
use exactalg::{AnyIdeal, Field, Ideal, IdealJson, PrimeField, Rationals};
use serde_json::{json, Value};
use weyl::adm::{admissible_cosets, admissible_set, extreme_elements};
use weyl::parahoric::parse_label;
use weyl::svg::emit_alcove_svg;
use weyl::{parahoric_classify, AffineGroup, ParahoricIndex, WeylError};

use crate::config::{FieldChoice, RunConfig};
use crate::error::{CheckError, CliError};
use crate::report::Status;
use crate::suites::flatness;

/// A command's JSON output and the status deciding the exit code.
pub struct Output {
    pub json: Value,
    pub status: Status,
}

fn weyl_usage(e: WeylError) -> CliError {
    CliError::usage(e.to_string())
}

/// Parses a comma-separated list of parahoric labels (`0,1`, `3'`, …); `None` is Iwahori.
pub fn parse_index(n: usize, raw: Option<&str>) -> Result<ParahoricIndex, CliError> {
    let Some(raw) = raw else {
        if n < 3 {
            return Err(weyl_usage(WeylError::RankTooSmall(n)));
        }
        return Ok(ParahoricIndex::iwahori(n));
    };
    let labels = raw
        .split(',')
        .filter(|s| !s.trim().is_empty())
        .map(|s| parse_label(s.trim(), n / 2))
        .collect::<weyl::Result<Vec<_>>>()
        .map_err(weyl_usage)?;
    Ok(parahoric_classify(n, &labels).map_err(weyl_usage)?.index)
}

/// Adm^I(μ_{r,s}) as minimal double-coset representatives with lengths and extreme markers,
/// and optionally the alcove picture written to `svg_path`.
pub fn admissible(n: usize, r: usize, s: usize, index: Option<&str>, svg_path: Option<&Path>) -> Result<Output, CliError> {
    let idx = parse_index(n, index)?;
    let g = AffineGroup::new(n).map_err(weyl_usage)?;
    let vertices = idx.vertices();
    let adm = admissible_set(&g, r, s).map_err(weyl_usage)?;
    let cosets = admissible_cosets(&g, &adm, &vertices);
    let extremes = admissible_cosets(&g, &extreme_elements(&g, r, s).map_err(weyl_usage)?, &vertices);
    let elements: Vec<Value> = cosets
        .iter()
        .map(|w| json!({ "element": g.to_json(w), "length": g.length(w), "extreme": extremes.contains(w) }))
        .collect();
    let mut out = json!({
        "n": n,
        "r": r,
        "s": s,
        "index": idx.set,
        "count": cosets.len(),
        "elements": elements,
    });
    if let Some(path) = svg_path {
        let svg = emit_alcove_svg(&g, r, s, &vertices).map_err(weyl_usage)?;
        write_file(path, &svg)?;
        out["svg"] = json!(path.display().to_string());
    }
    Ok(Output { json: out, status: Status::Pass })
}

pub fn svg(n: usize, r: usize, s: usize, index: Option<&str>) -> Result<String, CliError> {
    let idx = parse_index(n, index)?;
    let g = AffineGroup::new(n).map_err(weyl_usage)?;
    emit_alcove_svg(&g, r, s, &idx.vertices()).map_err(weyl_usage)
}

/// Fills in the fixed signatures of the Picard and orthogonal charts.
pub fn chart_spec(case: Case, n: Option<usize>, r: Option<usize>, s: Option<usize>, level: Level) -> Result<ChartSpec, CliError> {
    let fixed = match case {
        Case::PicardI1 => Some((3, 2, 1)),
        Case::Orth(OrthExample::Example1) => Some((1, 1, 0)),
        Case::Orth(OrthExample::Example2) => Some((2, 1, 1)),
        _ => None,
    };
    let (n, r, s) = match (fixed, n, r, s) {
        (Some(d), None, None, None) => d,
        (_, Some(n), Some(r), Some(s)) => (n, r, s),
        (_, Some(n), Some(r), None) if r <= n => (n, r, n - r),
        _ => return Err(CliError::usage("--n and --r (and optionally --s) are required for this case")),
    };
    ChartSpec::new(case, n, r, s, level).map_err(|e| CliError::usage(e.to_string()))
}

fn chart_in<F: Field>(field: &F, spec: &ChartSpec) -> Result<Value, CliError> {
    let (ring, gens) = chart_generators(field, spec).map_err(|e| CliError::usage(e.to_string()))?;
    let structured = gens.len();
    let ideal =
        Ideal::from_nonzero(&ring, gens).ok_or_else(|| CliError::usage("all chart generators vanish"))?;
    Ok(json!({ "spec": spec, "structured_generators": structured, "ideal": IdealJson::from_ideal(&ideal) }))
}

/// The chart ideal as interchange JSON under `ideal`, with the spec and the number of
/// generators produced by the construction before zero generators are dropped.
pub fn chart(cfg: &RunConfig, spec: &ChartSpec) -> Result<Output, CliError> {
    let json = match cfg.field {
        FieldChoice::Prime(p) => chart_in(&PrimeField::new(p).map_err(CheckError::from)?, spec)?,
        FieldChoice::Rationals => chart_in(&Rationals, spec)?,
    };
    Ok(Output { json, status: Status::Pass })
}

/// Reads an ideal document: bare interchange JSON or a `chart` output with an `ideal` field.
pub fn read_ideal(path: &Path) -> Result<AnyIdeal, CliError> {
    let text = fs::read_to_string(path)?;
    let value: Value = serde_json::from_str(&text).map_err(|e| CliError::usage(format!("{}: {e}", path.display())))?;
    let body = value.get("ideal").cloned().unwrap_or(value);
    let j: IdealJson = serde_json::from_value(body).map_err(|e| CliError::usage(format!("{}: {e}", path.display())))?;
    j.to_ideal().map_err(|e| CliError::usage(e.to_string()))
}

fn flatness_in<F: Field>(ideal: Ideal<F>, cfg: &RunConfig, u: &str) -> Result<Output, CliError> {
    if ideal.ring().var_index(u).is_err() {
        return Err(CliError::usage(format!("unknown variable `{u}`")));
    }
    match flatness(&ideal.with_budget(cfg.budget), u) {
        Ok((_, w)) => Ok(Output { json: w, status: Status::Pass }),
        Err(e) if e.is_budget() => {
            Ok(Output { json: json!({ "status": Status::Inconclusive, "error": e.to_string() }), status: Status::Inconclusive })
        }
        Err(e) => Err(e.into()),
    }
}

pub fn flatness_file(cfg: &RunConfig, path: &Path, u: &str) -> Result<Output, CliError> {
    match read_ideal(path)? {
        AnyIdeal::Q(i) => flatness_in(i, cfg, u),
        AnyIdeal::Fp(i) => flatness_in(i, cfg, u),
    }
}

pub fn write_file(path: &Path, contents: &str) -> Result<(), CliError> {
    if let Some(dir) = path.parent() {
        if !dir.as_os_str().is_empty() {
            fs::create_dir_all(dir)?;
        }
    }
    fs::write(path, contents)?;
    Ok(())
}

/// `dir/name`, or `name` in the working directory.
pub fn out_path(dir: Option<&Path>, name: &str) -> PathBuf {
    dir.map(|d| d.join(name)).unwrap_or_else(|| PathBuf::from(name))
}
