//! Batch runner behind the `cesaro-lab` binary.
//!
//! Every command produces one table (CSV) or report (JSON). With `--assert`
//! the documented tolerances of the command become pass/fail gates and any
//! failure maps to exit status 2.

use std::fmt::Write as _;
use std::path::PathBuf;

use clap::{Parser, ValueEnum};
use num_complex::Complex64;
use serde::Serialize;
use serde_json::json;

use crate::algebras::{annihilator_polynomial, q_bar_norm, q_norm, q_norm_split};
use crate::calculus::{
    calculus_consistency_residual, ergodic_growth_report, functional_calculus, h_sequence,
    kt_decay_curve, mean_difference_curve, mean_shift_identity_residual,
    mean_step_identity_residual, polynomial_in, Grid, PERIPHERAL_TOL,
};
use crate::error::{Error, Result};
use crate::fracdiff::{
    convolve, weyl_combined, weyl_diff_plus_at, weyl_diff_plus_via_composition, ZSeq,
};
use crate::kernels::{convolve_tables, kernel_table};
use crate::operators::{
    fixtures, operator_norm, peripheral_spectrum, spectral_radius, CMatrix, CesaroTransform,
    GrowthProbe, NON_GROWING_FACTOR,
};

pub const EXIT_OK: i32 = 0;
pub const EXIT_CONFIG: i32 = 1;
pub const EXIT_ASSERT: i32 = 2;
pub const EXIT_NUMERIC: i32 = 3;

/// Tolerance for the exact algebraic identities.
pub const IDENTITY_TOL: f64 = 1e-9;

#[derive(Debug, Clone, Copy, PartialEq, Eq, ValueEnum)]
pub enum Command {
    /// Cesàro kernel values k^α(0..=N).
    Kernel,
    /// Combined Weyl difference W^α of a coefficient sequence.
    Weyl,
    /// Algebra norms of a coefficient sequence.
    Norm,
    /// ‖M_T^α(n)‖ along a grid.
    Cesaro,
    /// ‖M_T^α(n) θ_α(f)‖ along a grid.
    KtDecay,
    /// ‖M_T^α(n+1) − M_T^α(n)‖ along a grid.
    MeanDiff,
    /// ‖M^{α−1}(n)‖/n and ‖T^n‖/n^α along a grid.
    Ergodic,
    /// Residuals of the exact functional-calculus and mean identities.
    Identities,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, ValueEnum)]
pub enum GridKind {
    Linear,
    Dyadic,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, ValueEnum)]
pub enum Format {
    Csv,
    Json,
}

/// Source of the coefficient sequence `f`.
#[derive(Debug, Clone, PartialEq)]
pub enum FnSpec {
    /// `∏_λ (e^{it} − λ)` over the fixture's peripheral spectrum.
    Annihilator,
    /// A `ZSeq` JSON file.
    Coeffs(PathBuf),
}

impl std::str::FromStr for FnSpec {
    type Err = String;
    fn from_str(s: &str) -> std::result::Result<Self, String> {
        if s == "annihilator" {
            Ok(FnSpec::Annihilator)
        } else if let Some(path) = s.strip_prefix("coeffs:") {
            Ok(FnSpec::Coeffs(PathBuf::from(path)))
        } else {
            Err(format!(
                "expected 'annihilator' or 'coeffs:<path>', got '{s}'"
            ))
        }
    }
}

#[derive(Debug, Clone, Parser)]
#[command(
    name = "cesaro-lab",
    version,
    about = "Cesàro means, fractional differences and decay experiments"
)]
pub struct RunConfig {
    #[arg(value_enum)]
    pub command: Command,
    /// Built-in fixture name or path to a matrix JSON file.
    #[arg(long, default_value = "assani")]
    pub fixture: String,
    #[arg(long, default_value_t = 1.0, allow_negative_numbers = true)]
    pub alpha: f64,
    #[arg(long = "n-max", default_value_t = 1000)]
    pub n_max: usize,
    #[arg(long = "fn", default_value = "annihilator")]
    pub func: FnSpec,
    #[arg(long, value_enum, default_value_t = GridKind::Linear)]
    pub grid: GridKind,
    /// Output file; standard output when omitted.
    #[arg(long)]
    pub out: Option<PathBuf>,
    #[arg(long, value_enum, default_value_t = Format::Csv)]
    pub format: Format,
    /// Turn documented tolerances into pass/fail gates (exit 2 on failure).
    #[arg(long = "assert")]
    pub assert_mode: bool,
}

impl RunConfig {
    pub fn validate(&self) -> Result<()> {
        let negative_ok = matches!(self.command, Command::Kernel | Command::Weyl);
        if !self.alpha.is_finite() || (!negative_ok && self.alpha < 0.0) {
            return Err(Error::invalid(format!(
                "--alpha must be finite and >= 0, got {}",
                self.alpha
            )));
        }
        if self.n_max < 1 {
            return Err(Error::invalid("--n-max must be at least 1"));
        }
        if matches!(self.command, Command::Ergodic) && self.alpha < 1.0 {
            return Err(Error::invalid("ergodic needs --alpha >= 1"));
        }
        Ok(())
    }

    fn grid_points(&self) -> Vec<usize> {
        match self.grid {
            GridKind::Linear => Grid::Linear.points(self.n_max),
            GridKind::Dyadic => Grid::Dyadic.points(self.n_max),
        }
    }
}

/// One gated check.
#[derive(Debug, Clone, Serialize)]
pub struct Check {
    pub name: String,
    pub value: f64,
    pub limit: f64,
    pub passed: bool,
}

impl Check {
    fn at_most(name: impl Into<String>, value: f64, limit: f64) -> Self {
        Check {
            name: name.into(),
            value,
            limit,
            passed: value <= limit,
        }
    }

    fn below(name: impl Into<String>, value: f64, limit: f64) -> Self {
        Check {
            name: name.into(),
            value,
            limit,
            passed: value < limit,
        }
    }
}

/// The rendered artifact plus the checks evaluated along the way.
#[derive(Debug, Clone)]
pub struct RunOutput {
    pub text: String,
    pub checks: Vec<Check>,
}

impl RunOutput {
    pub fn failures(&self) -> impl Iterator<Item = &Check> {
        self.checks.iter().filter(|c| !c.passed)
    }
}

/// Maps a library error to the documented exit status.
pub fn exit_code_for(err: &Error) -> i32 {
    if err.is_numeric() {
        EXIT_NUMERIC
    } else {
        EXIT_CONFIG
    }
}

fn fmt_f64(v: f64) -> String {
    format!("{v:.16e}")
}

fn curve_csv(rows: &[(usize, f64)]) -> String {
    let mut s = String::from("n,value\n");
    for (n, v) in rows {
        let _ = writeln!(s, "{n},{}", fmt_f64(*v));
    }
    s
}

fn to_json<T: Serialize>(value: &T) -> Result<String> {
    Ok(serde_json::to_string_pretty(value)? + "\n")
}

fn load_fn(config: &RunConfig, matrix: Option<&CMatrix>) -> Result<ZSeq> {
    match &config.func {
        FnSpec::Coeffs(path) => {
            let text = std::fs::read_to_string(path)
                .map_err(|e| Error::Fixture(format!("{}: {e}", path.display())))?;
            serde_json::from_str(&text)
                .map_err(|e| Error::Fixture(format!("{}: {e}", path.display())))
        }
        FnSpec::Annihilator => {
            let t = matrix.ok_or_else(|| Error::invalid("--fn annihilator needs a fixture"))?;
            Ok(annihilator_polynomial(&peripheral_spectrum(t, PERIPHERAL_TOL)?)?.coeffs)
        }
    }
}

fn fn_label(config: &RunConfig) -> String {
    match &config.func {
        FnSpec::Annihilator => "annihilator".into(),
        FnSpec::Coeffs(p) => format!("coeffs:{}", p.display()),
    }
}

/// Executes one configured run.
pub fn run(config: &RunConfig) -> Result<RunOutput> {
    config.validate()?;
    match config.command {
        Command::Kernel => run_kernel(config),
        Command::Weyl => run_weyl(config),
        Command::Norm => run_norm(config),
        Command::Cesaro => run_cesaro(config),
        Command::KtDecay => run_kt_decay(config),
        Command::MeanDiff => run_mean_diff(config),
        Command::Ergodic => run_ergodic(config),
        Command::Identities => run_identities(config),
    }
}

fn run_kernel(config: &RunConfig) -> Result<RunOutput> {
    let table = kernel_table(config.alpha, config.n_max);
    let inverse = kernel_table(-config.alpha, config.n_max);
    let delta_err = convolve_tables(&table, &inverse)
        .iter()
        .enumerate()
        .map(|(n, v)| (v - if n == 0 { 1.0 } else { 0.0 }).abs())
        .fold(0.0, f64::max);
    let checks = vec![Check::at_most("k^a * k^-a = delta", delta_err, 1e-10)];
    let rows: Vec<(usize, f64)> = table.values().iter().copied().enumerate().collect();
    let text = match config.format {
        Format::Csv => curve_csv(&rows),
        Format::Json => to_json(&json!({ "meta": { "alpha": config.alpha }, "rows": rows }))?,
    };
    Ok(RunOutput { text, checks })
}

fn run_weyl(config: &RunConfig) -> Result<RunOutput> {
    let f = load_fn(config, None)?;
    let w = weyl_combined(&f, config.alpha);
    let mut checks = Vec::new();
    if config.alpha > 0.0 && config.alpha.fract() != 0.0 {
        if let Some((_, hi)) = f.support() {
            let mut worst: f64 = 0.0;
            for n in 0..=hi.max(0) {
                let direct = weyl_diff_plus_at(&f, config.alpha, n);
                let composed = weyl_diff_plus_via_composition(&f, config.alpha, n)?;
                worst = worst.max((direct - composed).norm() / direct.norm().max(1.0));
            }
            checks.push(Check::at_most("series vs composition", worst, 1e-10));
        }
    }
    if f.lo() >= 0 {
        let back = weyl_combined(&w, -config.alpha);
        checks.push(Check::at_most(
            "W^-a W^a f = f",
            back.max_abs_diff(&f),
            IDENTITY_TOL * (1.0 + f.l1_norm()),
        ));
    }
    let text = match config.format {
        Format::Json => to_json(&w)?,
        Format::Csv => {
            let mut s = String::from("n,re,im\n");
            for (n, v) in w.iter() {
                let _ = writeln!(s, "{n},{},{}", fmt_f64(v.re), fmt_f64(v.im));
            }
            s
        }
    };
    Ok(RunOutput { text, checks })
}

fn run_norm(config: &RunConfig) -> Result<RunOutput> {
    let matrix = match config.func {
        FnSpec::Annihilator => Some(fixtures::resolve(&config.fixture)?),
        FnSpec::Coeffs(_) => None,
    };
    let f = load_fn(config, matrix.as_ref())?;
    let a = config.alpha;
    let q = q_norm(&f, a);
    let (minus, plus) = q_norm_split(&f, a);
    let l1 = f.l1_norm();
    let mut quantities = vec![
        ("q_alpha", q),
        ("q_minus", minus),
        ("q_plus", plus),
        ("l1", l1),
    ];
    if a > 0.0 {
        quantities.push(("q_bar", q_bar_norm(&f, a)));
    }
    let checks = vec![
        Check::at_most(
            "q split sums to q",
            (minus + plus - q).abs(),
            1e-12 * (1.0 + q),
        ),
        Check::at_most("l1 <= q_alpha", l1 - q, 1e-10 * q),
    ];
    let text = match config.format {
        Format::Csv => {
            let mut s = String::from("quantity,value\n");
            for (name, v) in &quantities {
                let _ = writeln!(s, "{name},{}", fmt_f64(*v));
            }
            s
        }
        Format::Json => {
            let map: serde_json::Map<String, serde_json::Value> = quantities
                .iter()
                .map(|(k, v)| (k.to_string(), json!(v)))
                .collect();
            to_json(&json!({
                "meta": { "alpha": a, "function": fn_label(config), "analytic": f.lo() >= 0 },
                "norms": map,
                "coeffs": f,
            }))?
        }
    };
    Ok(RunOutput { text, checks })
}

fn probe_json(config: &RunConfig, probe: &GrowthProbe, radius: f64) -> serde_json::Value {
    json!({
        "meta": {
            "fixture": config.fixture,
            "alpha": config.alpha,
            "spectral_radius": radius,
            "sup": probe.sup,
            "lower_max": probe.lower_max,
            "upper_max": probe.upper_max,
            "non_growing": probe.non_growing,
            "non_growing_rule": format!("upper-half max <= {NON_GROWING_FACTOR} x lower-half max"),
        },
        "rows": probe.rows,
    })
}

fn run_cesaro(config: &RunConfig) -> Result<RunOutput> {
    let t = fixtures::resolve(&config.fixture)?;
    let grid = config.grid_points();
    let ct = CesaroTransform::new(&t, config.alpha, config.n_max)?;
    let rows = grid
        .iter()
        .map(|&n| Ok((n, operator_norm(&ct.mean(n))?)))
        .collect::<Result<Vec<_>>>()?;
    let values: Vec<f64> = rows.iter().map(|r| r.1).collect();
    let (lower_max, upper_max) = crate::operators::window_trend(&values);
    let probe = GrowthProbe {
        sup: lower_max.max(upper_max),
        non_growing: upper_max <= NON_GROWING_FACTOR * lower_max,
        lower_max,
        upper_max,
        rows,
    };
    let radius = spectral_radius(&t)?;
    let mut checks = Vec::new();
    if probe.non_growing {
        checks.push(Check::at_most(
            "bounded means imply r(T) <= 1",
            radius,
            1.0 + 1e-6,
        ));
    }
    let text = match config.format {
        Format::Csv => curve_csv(&probe.rows),
        Format::Json => to_json(&probe_json(config, &probe, radius))?,
    };
    Ok(RunOutput { text, checks })
}

fn run_kt_decay(config: &RunConfig) -> Result<RunOutput> {
    let t = fixtures::resolve(&config.fixture)?;
    let f = load_fn(config, Some(&t))?;
    let grid = config.grid_points();
    let hi = f.hi().unwrap_or(0).max(0) as usize;
    let ct = CesaroTransform::new(&t, config.alpha, config.n_max.max(hi))?;
    let mut curve = kt_decay_curve(&ct, &f, &grid)?;
    curve.meta.fixture = config.fixture.clone();
    curve.meta.function = fn_label(config);
    let (lower, upper) = curve.trend();
    let mut checks = Vec::new();
    if curve.meta.vanishes_on_peripheral == Some(true) && lower > 0.0 {
        checks.push(Check::below(
            "decay: upper-half max < lower-half max",
            upper,
            lower,
        ));
    }
    let text = match config.format {
        Format::Csv => curve_csv(&curve.rows),
        Format::Json => to_json(&json!({
            "meta": curve.meta,
            "lower_max": lower,
            "upper_max": upper,
            "decaying": upper < lower || upper == 0.0,
            "rows": curve.rows,
        }))?,
    };
    Ok(RunOutput { text, checks })
}

fn run_mean_diff(config: &RunConfig) -> Result<RunOutput> {
    let t = fixtures::resolve(&config.fixture)?;
    let grid = config.grid_points();
    let ct = CesaroTransform::new(&t, config.alpha, config.n_max + 1)?;
    let mut curve = mean_difference_curve(&ct, &grid)?;
    curve.meta.fixture = config.fixture.clone();
    let (lower, upper) = curve.trend();
    let mut checks = Vec::new();
    if curve.meta.peripheral_in_one == Some(true) && lower > 0.0 {
        checks.push(Check::below(
            "mean differences: upper-half max < lower-half max",
            upper,
            lower,
        ));
    }
    let text = match config.format {
        Format::Csv => curve_csv(&curve.rows),
        Format::Json => to_json(&json!({
            "meta": curve.meta,
            "lower_max": lower,
            "upper_max": upper,
            "rows": curve.rows,
        }))?,
    };
    Ok(RunOutput { text, checks })
}

fn run_ergodic(config: &RunConfig) -> Result<RunOutput> {
    let t = fixtures::resolve(&config.fixture)?;
    let grid = config.grid_points();
    let ct = CesaroTransform::new(&t, config.alpha, config.n_max)?;
    let mut report = ergodic_growth_report(&ct, &grid)?;
    report.meta.fixture = config.fixture.clone();
    let mut checks = Vec::new();
    if report.meta.peripheral_in_one == Some(true) {
        let pass = |name: &str, ok: bool| Check {
            name: name.into(),
            value: if ok { 1.0 } else { 0.0 },
            limit: 1.0,
            passed: ok,
        };
        checks.push(pass(
            "|M^(a-1)(n)|/n decreasing",
            report.mean_ratio_decreasing,
        ));
        checks.push(pass("|T^n|/n^a decreasing", report.power_ratio_decreasing));
    }
    let text = match config.format {
        Format::Json => to_json(&report)?,
        Format::Csv => {
            let mut s = String::from("n,mean_ratio,power_ratio\n");
            for ((n, m), (_, p)) in report.mean_ratio.iter().zip(&report.power_ratio) {
                let _ = writeln!(s, "{n},{},{}", fmt_f64(*m), fmt_f64(*p));
            }
            s
        }
    };
    Ok(RunOutput { text, checks })
}

fn random_nonneg_seq(len: usize, seed: u64) -> ZSeq {
    use rand::{Rng, SeedableRng};
    let mut rng = rand_chacha::ChaCha8Rng::seed_from_u64(seed);
    ZSeq::new(
        0,
        (0..len)
            .map(|_| Complex64::new(rng.random_range(-1.0..1.0), rng.random_range(-1.0..1.0)))
            .collect(),
    )
}

fn run_identities(config: &RunConfig) -> Result<RunOutput> {
    let t = fixtures::resolve(&config.fixture)?;
    let alpha = config.alpha;
    let n_max = config.n_max;
    let ct = CesaroTransform::new(&t, alpha, n_max + 1)?;
    let mut rows: Vec<(String, usize, f64, f64)> = Vec::new();

    for n in 0..=n_max {
        let sum = ct.sum(n);
        let scale = 1.0 + operator_norm(sum)?;
        let theta_h = functional_calculus(&ct, &h_sequence(alpha, n))?;
        rows.push((
            "theta(h_n) = sum(n)".into(),
            n,
            operator_norm(&(&theta_h - sum))?,
            IDENTITY_TOL * scale,
        ));

        let e_n = ZSeq::delta(n as i64);
        let theta_e = functional_calculus(&ct, &e_n)?;
        let scale = 1.0 + operator_norm(&theta_e)?;
        rows.push((
            "theta(e_n) = T^n".into(),
            n,
            calculus_consistency_residual(&ct, &e_n)?,
            IDENTITY_TOL * scale,
        ));

        if alpha >= 1.0 {
            let mean_scale = 1.0 + operator_norm(&ct.mean(n))?;
            rows.push((
                "mean step".into(),
                n,
                mean_step_identity_residual(&ct, n)?,
                IDENTITY_TOL * mean_scale,
            ));
            let t_scale = 1.0 + operator_norm(&t)?;
            rows.push((
                "mean shift".into(),
                n,
                mean_shift_identity_residual(&ct, n)?,
                IDENTITY_TOL * t_scale,
            ));
        }
    }

    // homomorphism and factorization on seeded pairs whose product stays in range
    let half = (n_max / 2).max(1);
    for seed in 0..8u64 {
        let f = random_nonneg_seq(1 + (seed as usize * 7) % half, seed);
        let g = random_nonneg_seq(1 + (seed as usize * 5 + 3) % half, seed + 100);
        let tf = functional_calculus(&ct, &f)?;
        let tg = functional_calculus(&ct, &g)?;
        let tfg = functional_calculus(&ct, &convolve(&f, &g))?;
        let scale = 1.0 + operator_norm(&tf)? * operator_norm(&tg)?;
        rows.push((
            "homomorphism".into(),
            seed as usize,
            operator_norm(&(&tfg - &tf.matmul(&tg)))?,
            IDENTITY_TOL * scale,
        ));

        let n = half.min(n_max - f.hi().unwrap_or(0) as usize);
        let hf = convolve(&h_sequence(alpha, n), &f);
        let lhs = ct.sum(n).matmul(&tf);
        let rhs = functional_calculus(&ct, &hf)?;
        let scale = 1.0 + operator_norm(&lhs)?;
        rows.push((
            "sum(n) theta(f) = theta(h_n * f)".into(),
            n,
            operator_norm(&(&lhs - &rhs))?,
            IDENTITY_TOL * scale,
        ));

        let poly = polynomial_in(&ct, &f)?;
        let scale = 1.0 + operator_norm(&tf)?;
        rows.push((
            "theta(f) = sum f(j) T^j".into(),
            seed as usize,
            operator_norm(&(&tf - &poly))?,
            IDENTITY_TOL * scale,
        ));
    }

    let checks: Vec<Check> = rows
        .iter()
        .map(|(name, n, r, tol)| Check::at_most(format!("{name} @ {n}"), *r, *tol))
        .collect();
    let text = match config.format {
        Format::Csv => {
            let mut s = String::from("identity,n,residual,tolerance\n");
            for (name, n, r, tol) in &rows {
                let _ = writeln!(s, "{name},{n},{},{}", fmt_f64(*r), fmt_f64(*tol));
            }
            s
        }
        Format::Json => to_json(&json!({
            "meta": { "fixture": config.fixture, "alpha": alpha, "n_max": n_max },
            "all_passed": checks.iter().all(|c| c.passed),
            "rows": rows.iter().map(|(name, n, r, tol)| json!({
                "identity": name, "n": n, "residual": r, "tolerance": tol
            })).collect::<Vec<_>>(),
        }))?,
    };
    Ok(RunOutput { text, checks })
}

/// Runs a configuration end to end (including writing `--out`) and returns the
/// process exit status.
pub fn execute(config: &RunConfig) -> i32 {
    let output = match run(config) {
        Ok(o) => o,
        Err(e) => {
            eprintln!("error: {e}");
            return exit_code_for(&e);
        }
    };
    let written = match &config.out {
        Some(path) => std::fs::write(path, &output.text),
        None => {
            use std::io::Write;
            std::io::stdout().write_all(output.text.as_bytes())
        }
    };
    if let Err(e) = written {
        eprintln!("error: {e}");
        return EXIT_CONFIG;
    }
    if config.assert_mode {
        let failures: Vec<&Check> = output.failures().collect();
        for c in &failures {
            eprintln!(
                "assertion failed: {} = {:e} (limit {:e})",
                c.name, c.value, c.limit
            );
        }
        if !failures.is_empty() {
            return EXIT_ASSERT;
        }
        eprintln!("{} checks passed", output.checks.len());
    }
    EXIT_OK
}

#[cfg(test)]
mod tests {
    use super::*;

    fn parse(args: &[&str]) -> RunConfig {
        let mut full = vec!["cesaro-lab"];
        full.extend_from_slice(args);
        RunConfig::try_parse_from(full).unwrap()
    }

    #[test]
    fn parses_flags() {
        let c = parse(&[
            "kt-decay",
            "--fixture",
            "assani",
            "--alpha",
            "1",
            "--fn",
            "annihilator",
            "--n-max",
            "10",
        ]);
        assert_eq!(c.command, Command::KtDecay);
        assert_eq!(c.func, FnSpec::Annihilator);
        let c = parse(&[
            "weyl",
            "--fn",
            "coeffs:/tmp/f.json",
            "--alpha",
            "-0.5",
            "--grid",
            "dyadic",
        ]);
        assert_eq!(c.func, FnSpec::Coeffs(PathBuf::from("/tmp/f.json")));
        assert_eq!(c.alpha, -0.5);
        assert_eq!(c.grid, GridKind::Dyadic);
        assert!(RunConfig::try_parse_from(["cesaro-lab", "kernel", "--fn", "bogus"]).is_err());
    }

    #[test]
    fn kernel_csv_all_ones() {
        let out = run(&parse(&["kernel", "--alpha", "1", "--n-max", "5"])).unwrap();
        let lines: Vec<&str> = out.text.lines().collect();
        assert_eq!(lines[0], "n,value");
        assert_eq!(lines.len(), 7);
        for l in &lines[1..] {
            let v: f64 = l.split(',').nth(1).unwrap().parse().unwrap();
            assert_eq!(v, 1.0);
        }
        assert!(out.checks.iter().all(|c| c.passed));
    }

    #[test]
    fn float_format_has_17_digits() {
        assert_eq!(fmt_f64(2.0 / 11.0), "1.8181818181818182e-1");
        assert_eq!(fmt_f64(2.0 / 11.0).parse::<f64>().unwrap(), 2.0 / 11.0);
    }

    #[test]
    fn config_errors() {
        let e = run(&parse(&["cesaro", "--alpha", "-1"])).unwrap_err();
        assert_eq!(exit_code_for(&e), EXIT_CONFIG);
        let e = run(&parse(&["cesaro", "--fixture", "nope"])).unwrap_err();
        assert_eq!(exit_code_for(&e), EXIT_CONFIG);
        let e = run(&parse(&["ergodic", "--alpha", "0.5"])).unwrap_err();
        assert_eq!(exit_code_for(&e), EXIT_CONFIG);
    }
}
