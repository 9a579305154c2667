//! Subcommands of the `orbitcompat` binary.
//!
//! Every command renders to a string; `main` decides where it goes. Commands
//! that produce ideals print ideal files in pretty mode, so their output can be
//! fed to the next command.

use std::fmt;
use std::path::{Path, PathBuf};

use clap::{Args, Parser, Subcommand, ValueEnum};
use num_rational::BigRational;
use orbitcompat::groebner::{
    gb_json, hilbert, hilbert_json, homogenise_naive, ideal_json, parse_ideal_file, write_ideal_file, GbConfig,
    Groebner, HilbertData, IdealFile, IdealPresentation,
};
use orbitcompat::hodge::{lefschetz_restrict, render_diamond, resolve_diamond};
use orbitcompat::intersect::{chern_series, degree_product, euler_report, expected_euler, CompleteIntersectionSpec};
use orbitcompat::orbit::{
    generic_matrix, orbit_ideal_charvalues, orbit_ideal_minpoly, potential, weyl_critical, DiagSpec,
    OrbitIdeal,
};
use orbitcompat::polyalg::{format_rational, parse_rational, rational_json, MonomialOrder, MultiPoly};
use serde_json::{json, Value};

#[derive(Debug, Parser)]
#[command(name = "orbitcompat", version, about = "Compactifications of adjoint orbits of sl(n+1)")]
pub struct Cli {
    /// Emit JSON instead of text.
    #[arg(long, global = true)]
    pub json: bool,

    /// Write the output to a file instead of stdout.
    #[arg(long, global = true, value_name = "FILE")]
    pub out: Option<PathBuf>,

    #[command(subcommand)]
    pub command: Command,
}

#[derive(Debug, Subcommand)]
pub enum Command {
    /// Ideal of the adjoint orbit of diag(H0).
    Orbit(OrbitArgs),
    /// Add the equation f_H = c to an orbit ideal.
    Fibre(FibreArgs),
    /// Homogenise an ideal with a new last variable.
    Homogenise(HomogeniseArgs),
    /// Reduced Groebner basis, optionally with Hilbert data.
    Gb(GbArgs),
    /// Expected Euler characteristic of a complete intersection.
    Euler(EulerArgs),
    /// Render a Hodge diamond.
    Diamond(DiamondArgs),
    /// Critical points and values of f_H on the orbit of H0.
    Critical(CriticalArgs),
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, ValueEnum)]
pub enum Style {
    Minpoly,
    Charvalues,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, ValueEnum)]
pub enum Mode {
    Naive,
    Saturated,
}

/// Comma-separated rationals such as `2,-1,-1` or `1/2,-1/2`.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Rationals(pub Vec<BigRational>);

/// Comma-separated naturals such as `3,3,1`.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Naturals(pub Vec<u64>);

fn rational_list(text: &str) -> Result<Rationals, String> {
    text.split(',')
        .map(|s| parse_rational(s).ok_or_else(|| format!("`{}` is not a rational number", s.trim())))
        .collect::<Result<_, _>>()
        .map(Rationals)
}

fn natural_list(text: &str) -> Result<Naturals, String> {
    text.split(',')
        .map(|s| s.trim().parse().map_err(|_| format!("`{}` is not a natural number", s.trim())))
        .collect::<Result<_, _>>()
        .map(Naturals)
}

fn rational(text: &str) -> Result<BigRational, String> {
    parse_rational(text).ok_or_else(|| format!("`{text}` is not a rational number"))
}

fn order(text: &str) -> Result<MonomialOrder, String> {
    text.parse().map_err(|e: orbitcompat::Error| e.to_string())
}

#[derive(Debug, Args)]
pub struct OrbitArgs {
    /// Rank: the orbit lives in sl(n+1).
    #[arg(long)]
    pub n: usize,
    /// Diagonal of H0, e.g. 2,-1,-1.
    #[arg(long, allow_hyphen_values = true, value_parser = rational_list)]
    pub h0: Rationals,
    #[arg(long, value_enum, default_value = "minpoly")]
    pub style: Style,
    /// Shifts s with generators det(A + s id); charvalues style only.
    #[arg(long, allow_hyphen_values = true, value_parser = rational_list)]
    pub shifts: Option<Rationals>,
}

#[derive(Debug, Args)]
pub struct FibreArgs {
    /// Orbit ideal file.
    #[arg(long, value_name = "FILE")]
    pub orbit: PathBuf,
    /// Diagonal of H.
    #[arg(long, allow_hyphen_values = true, value_parser = rational_list)]
    pub h: Rationals,
    /// Value c of the potential.
    #[arg(long, allow_hyphen_values = true, value_parser = rational, default_value = "0")]
    pub value: BigRational,
}

#[derive(Debug, Args)]
pub struct HomogeniseArgs {
    #[arg(long, value_name = "FILE")]
    pub ideal: PathBuf,
    #[arg(long, value_enum, default_value = "naive")]
    pub mode: Mode,
    /// Name of the homogenising variable.
    #[arg(long, default_value = "t")]
    pub tvar: String,
}

#[derive(Debug, Args)]
pub struct GbArgs {
    #[arg(long, value_name = "FILE")]
    pub ideal: PathBuf,
    /// grevlex, lex or elim:k.
    #[arg(long, value_parser = order, default_value = "grevlex")]
    pub order: MonomialOrder,
    /// Also report the Hilbert series data (homogeneous ideals only).
    #[arg(long)]
    pub hilbert: bool,
}

#[derive(Debug, Args)]
pub struct EulerArgs {
    /// Dimension N of the ambient projective space.
    #[arg(long)]
    pub ambient: usize,
    /// Degrees of the hypersurfaces, e.g. 3,3,1.
    #[arg(long, value_parser = natural_list)]
    pub degrees: Naturals,
}

#[derive(Debug, Args)]
#[group(required = true, multiple = false)]
pub struct DiamondArgs {
    /// A stored diamond (see `--name list`).
    #[arg(long)]
    pub name: Option<String>,
    /// The diamond of P^n x (P^n)^*.
    #[arg(long)]
    pub pnpn: Option<usize>,
    /// Lefschetz restriction of a named diamond (fixture name or pnpnN).
    #[arg(long, value_name = "NAME")]
    pub lefschetz_from: Option<String>,
}

#[derive(Debug, Args)]
pub struct CriticalArgs {
    #[arg(long)]
    pub n: usize,
    /// Diagonal of H.
    #[arg(long, allow_hyphen_values = true, value_parser = rational_list)]
    pub h: Rationals,
    /// Diagonal of H0.
    #[arg(long, allow_hyphen_values = true, value_parser = rational_list)]
    pub h0: Rationals,
}

/// Failures, split by exit code.
#[derive(Debug)]
pub enum CliError {
    /// Bad flags or configuration (exit code 2).
    Usage(String),
    /// The computation itself failed (exit code 1).
    Domain(String),
}

impl CliError {
    pub fn exit_code(&self) -> u8 {
        match self {
            CliError::Usage(_) => 2,
            CliError::Domain(_) => 1,
        }
    }
}

impl fmt::Display for CliError {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            CliError::Usage(m) | CliError::Domain(m) => f.write_str(m),
        }
    }
}

impl From<orbitcompat::Error> for CliError {
    fn from(e: orbitcompat::Error) -> Self {
        CliError::Domain(e.to_string())
    }
}

type CliResult<T> = Result<T, CliError>;

fn usage(msg: impl Into<String>) -> CliError {
    CliError::Usage(msg.into())
}

fn diag_spec(values: &[BigRational], n: usize, flag: &str) -> CliResult<DiagSpec> {
    if values.len() != n + 1 {
        return Err(usage(format!("--{flag} needs {} entries for sl({}), got {}", n + 1, n + 1, values.len())));
    }
    Ok(DiagSpec::new(values.to_vec())?)
}

/// Reads an ideal file, or the JSON `{vars, generators}` form.
pub fn read_ideal(path: &Path) -> CliResult<IdealFile> {
    let text = std::fs::read_to_string(path).map_err(|e| CliError::Domain(format!("{}: {e}", path.display())))?;
    let located = |e: orbitcompat::Error| CliError::Domain(format!("{}: {e}", path.display()));
    if !text.trim_start().starts_with('{') {
        return parse_ideal_file(&text).map_err(located);
    }
    let v: Value = serde_json::from_str(&text).map_err(|e| CliError::Domain(format!("{}: {e}", path.display())))?;
    let strings = |key: &str| -> CliResult<Vec<String>> {
        v[key]
            .as_array()
            .and_then(|a| a.iter().map(|s| s.as_str().map(String::from)).collect::<Option<Vec<_>>>())
            .ok_or_else(|| CliError::Domain(format!("{}: `{key}` must be an array of strings", path.display())))
    };
    let mut lines = Vec::new();
    if let Some(meta) = v.get("metadata") {
        lines.push(format!("# orbit: {meta}"));
    }
    lines.push(format!("vars: {}", strings("vars")?.join(",")));
    lines.extend(strings("generators")?);
    parse_ideal_file(&(lines.join("\n") + "\n")).map_err(located)
}

fn ideal_output(json_mode: bool, ideal: &IdealPresentation, comments: &[String], extra: Option<(&str, Value)>) -> String {
    if json_mode {
        let mut v = ideal_json(ideal);
        if let Some((k, x)) = extra {
            v[k] = x;
        }
        format!("{v}\n")
    } else {
        write_ideal_file(ideal, comments)
    }
}

fn orbit_cmd(json_mode: bool, a: &OrbitArgs) -> CliResult<String> {
    let spec = diag_spec(&a.h0.0, a.n, "h0")?;
    let orbit = match (a.style, &a.shifts) {
        (Style::Minpoly, None) => orbit_ideal_minpoly(&spec)?,
        (Style::Minpoly, Some(_)) => return Err(usage("--shifts only applies to --style charvalues")),
        (Style::Charvalues, Some(shifts)) => orbit_ideal_charvalues(&spec, &shifts.0)?,
        (Style::Charvalues, None) => return Err(usage("--style charvalues needs --shifts")),
    };
    if json_mode {
        return Ok(ideal_output(true, &orbit.presentation, &[], Some(("metadata", orbit.metadata()))));
    }
    Ok(orbit.to_ideal_file())
}

fn fibre_cmd(json_mode: bool, a: &FibreArgs) -> CliResult<String> {
    let file = read_ideal(&a.orbit)?;
    let n = a.h.0.len().checked_sub(1).filter(|&n| n >= 1).ok_or_else(|| usage("--h needs at least two entries"))?;
    let h = diag_spec(&a.h.0, n, "h")?;
    let expected = generic_matrix(n)?;
    if file.ideal.context() != expected.context() {
        return Err(CliError::Domain(format!(
            "orbit variables `{}` are not the sl({}) coordinates `{}`",
            file.ideal.context(),
            n + 1,
            expected.context()
        )));
    }
    if let Ok(orbit) = OrbitIdeal::from_ideal_file(&file) {
        if orbit.n() != n {
            return Err(CliError::Domain(format!("orbit is in sl({}) but H has {} entries", orbit.n() + 1, h.len())));
        }
    }
    let pot = potential(&h, n)?;
    let shifted = &pot.poly - &MultiPoly::constant(pot.poly.context(), a.value.clone());
    let fibre = file.ideal.with_generator(shifted)?;
    let meta = json!({"h": h.to_json(), "value": rational_json(&a.value)});
    Ok(ideal_output(json_mode, &fibre, &[format!("fibre: {meta}")], Some(("fibre", meta.clone()))))
}

fn config() -> CliResult<GbConfig> {
    GbConfig::from_env().map_err(|e| usage(e.to_string()))
}

fn homogenise_cmd(json_mode: bool, a: &HomogeniseArgs) -> CliResult<String> {
    let file = read_ideal(&a.ideal)?;
    let out = match a.mode {
        Mode::Naive => homogenise_naive(&file.ideal, &a.tvar)?,
        Mode::Saturated => Groebner::new(config()?).homogenise_ideal(&file.ideal, &a.tvar)?,
    };
    let mode = match a.mode {
        Mode::Naive => "naive",
        Mode::Saturated => "saturated",
    };
    Ok(ideal_output(json_mode, &out, &[format!("homogenised: {mode}")], Some(("homogenised", json!(mode)))))
}

/// `1 + 2*s + s^2` style rendering of an integer coefficient list.
fn univariate(coeffs: &[String], var: &str) -> String {
    let mut out = String::new();
    for (k, c) in coeffs.iter().enumerate() {
        if c == "0" {
            continue;
        }
        let (neg, abs) = match c.strip_prefix('-') {
            Some(rest) => (true, rest),
            None => (false, c.as_str()),
        };
        let mono = match k {
            0 => String::new(),
            1 => var.to_string(),
            _ => format!("{var}^{k}"),
        };
        let body = match (abs, mono.is_empty()) {
            (_, true) => abs.to_string(),
            ("1", false) => mono,
            (_, false) => format!("{abs}*{mono}"),
        };
        if out.is_empty() {
            out = if neg { format!("-{body}") } else { body };
        } else {
            out.push_str(if neg { " - " } else { " + " });
            out.push_str(&body);
        }
    }
    if out.is_empty() {
        "0".into()
    } else {
        out
    }
}

fn hilbert_lines(h: &HilbertData) -> Vec<String> {
    let numer: Vec<String> = h.numerator.iter().map(|c| c.to_string()).collect();
    vec![
        format!("krull_dim: {}", h.krull_dim),
        format!("proj_dim: {}", h.proj_dim),
        format!("degree: {}", h.degree),
        format!("hilbert series: ({}) / (1 - s)^{}", univariate(&numer, "s"), h.krull_dim),
    ]
}

fn gb_cmd(json_mode: bool, a: &GbArgs) -> CliResult<String> {
    let file = read_ideal(&a.ideal)?;
    let gb = Groebner::new(config()?).basis(&file.ideal, a.order)?;
    let h = if a.hilbert { Some(hilbert(&gb)?) } else { None };
    if json_mode {
        let mut v = gb_json(&gb);
        if let Some(h) = &h {
            v["hilbert"] = hilbert_json(h);
        }
        return Ok(format!("{v}\n"));
    }
    let mut comments = vec![format!("reduced groebner basis, order {}", gb.order())];
    if let Some(h) = &h {
        comments.extend(hilbert_lines(h));
    }
    let mut out = String::new();
    for c in &comments {
        out.push_str(&format!("# {c}\n"));
    }
    out.push_str(&format!("vars: {}\n", gb.context()));
    for g in gb.basis_strings() {
        out.push_str(&g);
        out.push('\n');
    }
    Ok(out)
}

fn euler_cmd(json_mode: bool, a: &EulerArgs) -> CliResult<String> {
    let spec = CompleteIntersectionSpec::new(a.ambient, a.degrees.0.clone())?;
    if json_mode {
        return Ok(format!("{}\n", euler_report(&spec)?));
    }
    let series = chern_series(&spec);
    let coeffs: Vec<String> = series.coeffs().iter().map(format_rational).collect();
    let degrees: Vec<String> = a.degrees.0.iter().map(u64::to_string).collect();
    let n = spec.dim();
    let chi = expected_euler(&spec)?;
    Ok(format!(
        "X in P^{} cut out by degrees {}, dim {n}\nc(X) = {} + O(a^{})\ndeg X = {}\nchi(X) = {} * {} = {chi}\n",
        a.ambient,
        degrees.join(","),
        univariate(&coeffs, "a"),
        n + 1,
        degree_product(&spec),
        coeffs[n],
        degree_product(&spec),
    ))
}

fn diamond_cmd(json_mode: bool, a: &DiamondArgs) -> CliResult<String> {
    let d = match (&a.name, a.pnpn, &a.lefschetz_from) {
        (Some(name), _, _) => resolve_diamond(name)?,
        (_, Some(n), _) => resolve_diamond(&format!("pnpn{n}"))?,
        (_, _, Some(name)) => lefschetz_restrict(&resolve_diamond(name)?)?,
        _ => return Err(usage("one of --name, --pnpn, --lefschetz-from is required")),
    };
    if json_mode {
        return Ok(format!("{}\n", d.to_json()));
    }
    Ok(render_diamond(&d))
}

fn critical_cmd(json_mode: bool, a: &CriticalArgs) -> CliResult<String> {
    let h = diag_spec(&a.h.0, a.n, "h")?;
    let h0 = diag_spec(&a.h0.0, a.n, "h0")?;
    let c = weyl_critical(&h, &h0)?;
    if json_mode {
        let points: Vec<Value> = c.points.iter().map(|p| Value::Array(p.iter().map(rational_json).collect())).collect();
        let values: Vec<Value> = c.values.iter().map(rational_json).collect();
        return Ok(format!("{}\n", json!({"points": points, "values": values})));
    }
    let mut out = format!("{} critical points of f_H, H = {h}:\n", c.points.len());
    for p in &c.points {
        let entries: Vec<String> = p.iter().map(format_rational).collect();
        let value: BigRational = h.eigenvalues().iter().zip(p).map(|(a, b)| a * b).sum();
        out.push_str(&format!("  diag({})  f_H = {}\n", entries.join(","), format_rational(&value)));
    }
    let values: Vec<String> = c.values.iter().map(format_rational).collect();
    out.push_str(&format!("critical values: {}\n", values.join(", ")));
    Ok(out)
}

/// Runs one command and returns its rendered output.
pub fn run(cli: &Cli) -> CliResult<String> {
    let j = cli.json;
    match &cli.command {
        Command::Orbit(a) => orbit_cmd(j, a),
        Command::Fibre(a) => fibre_cmd(j, a),
        Command::Homogenise(a) => homogenise_cmd(j, a),
        Command::Gb(a) => gb_cmd(j, a),
        Command::Euler(a) => euler_cmd(j, a),
        Command::Diamond(a) => diamond_cmd(j, a),
        Command::Critical(a) => critical_cmd(j, a),
    }
}

/// Parses `args`, runs the command and delivers the output. Returns the
/// process exit code.
pub fn main_with(args: impl IntoIterator<Item = String>) -> u8 {
    let cli = match Cli::try_parse_from(args) {
        Ok(cli) => cli,
        Err(e) => {
            let code = if e.use_stderr() { 2 } else { 0 };
            let _ = e.print();
            return code;
        }
    };
    let result = run(&cli).and_then(|text| match &cli.out {
        Some(path) => std::fs::write(path, text).map_err(|e| CliError::Domain(format!("{}: {e}", path.display()))),
        None => {
            print!("{text}");
            Ok(())
        }
    });
    match result {
        Ok(()) => 0,
        Err(e) => {
            eprintln!("error: {e}");
            e.exit_code()
        }
    }
}
