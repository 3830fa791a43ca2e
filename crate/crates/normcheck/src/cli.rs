//! Command-line front end.
//!
//! Every run loads a norm spec from JSON, builds a deterministic sample
//! configuration, executes one of the probe commands, and writes a manifest
//! echo next to the artifacts so the run is reproducible from the output
//! directory alone. Artifacts contain no timestamps or environment state;
//! reruns with the same manifest produce byte-identical files regardless of
//! worker count.
//!
//! Exit codes: 0 success (and, for classify/analyze, a consistent verdict),
//! 2 a falsified verdict, 1 any error.

use crate::diagnostics::{
    classify, degenerate_zero_probe, homogeneity_defect, identity_defect, parallelogram_scan,
    scaling_tension_probe, ScalingTension,
};
use crate::error::Error;
use crate::norm::{axiom_scan, norm_eval, NormSpec};
use crate::pfunc::{sandwich_check, PContext};
use crate::polarization::{form_axiom_scan, gram_reconstruct, FormAxiomScan, GramRecon};
use crate::report::{DefectReport, Outcome, Verdict};
use crate::sample::SampleConfig;
use crate::scalar::{Scalar, ScalarField};
use crate::tol;
use crate::vector::Vector;
use anyhow::Context;
use clap::{Args, Parser, Subcommand, ValueEnum};
use serde::{Deserialize, Serialize};
use std::fmt::Write as _;
use std::fs;
use std::path::{Path, PathBuf};

#[derive(Parser, Debug)]
#[command(
    name = "normcheck",
    version,
    about = "Numerical diagnostics that decide whether a norm behaves like an inner-product norm"
)]
pub struct Cli {
    #[command(subcommand)]
    command: Command,
}

#[derive(Subcommand, Debug)]
enum Command {
    /// Run every probe family and produce a verdict plus all artifacts
    Analyze {
        #[command(flatten)]
        common: CommonOpts,
        /// Verdict threshold on normalized defect sups
        #[arg(long)]
        threshold: Option<f64>,
        /// Anchor vector, comma-separated coordinates (normalized before use)
        #[arg(long)]
        y: Option<String>,
    },
    /// Classify the norm as inner-product consistent or falsified
    Classify {
        #[command(flatten)]
        common: CommonOpts,
        /// Verdict threshold on normalized defect sups
        #[arg(long)]
        threshold: Option<f64>,
    },
    /// Run defect scans and report sup defects with witnesses
    Scan {
        #[command(flatten)]
        common: CommonOpts,
        /// Probe to run (repeatable); default: sandwich, homogeneity,
        /// identity, parallelogram
        #[arg(long = "probe")]
        probes: Vec<String>,
        /// Anchor vector, comma-separated coordinates (normalized before use)
        #[arg(long)]
        y: Option<String>,
    },
    /// Profile p along a ray t -> t*x and check the drift bound
    Ray {
        #[command(flatten)]
        common: CommonOpts,
        /// Ray direction, comma-separated coordinates (normalized before use)
        #[arg(long)]
        direction: Option<String>,
        /// Anchor vector, comma-separated coordinates (normalized before use)
        #[arg(long)]
        y: Option<String>,
        /// Largest ray parameter, as a power-of-two exponent: the schedule
        /// is 1, 2, 4, ..., 2^T_MAX
        #[arg(long)]
        t_max: Option<u32>,
        /// Explicit comma-separated ray parameters (overrides --t-max)
        #[arg(long)]
        ts: Option<String>,
    },
    /// Reconstruct the polarization Gram matrix and measure its residual
    Polarize {
        #[command(flatten)]
        common: CommonOpts,
    },
}

#[derive(Args, Debug, Clone)]
struct CommonOpts {
    /// Path to a norm spec JSON file
    #[arg(long)]
    spec: PathBuf,
    /// Output directory for artifacts and the manifest
    #[arg(long, default_value = "normcheck-out")]
    out: PathBuf,
    /// Artifact format; JSON artifacts are always written, csv/text add to them
    #[arg(long, value_enum, default_value_t = OutputFormat::Json)]
    format: OutputFormat,
    /// Samples per probe
    #[arg(long)]
    samples: Option<u64>,
    /// Seed for the deterministic sample streams
    #[arg(long)]
    seed: Option<u64>,
    /// Override the spec's dimension
    #[arg(long)]
    dim: Option<usize>,
    /// Override the spec's scalar field
    #[arg(long, value_enum)]
    field: Option<FieldArg>,
    /// Worker threads for the scans (default: all cores)
    #[arg(long)]
    workers: Option<usize>,
}

#[derive(ValueEnum, Debug, Clone, Copy, PartialEq, Eq, Serialize, Deserialize)]
#[serde(rename_all = "lowercase")]
pub enum OutputFormat {
    Json,
    Csv,
    Text,
}

#[derive(ValueEnum, Debug, Clone, Copy)]
enum FieldArg {
    Real,
    Complex,
}

impl From<FieldArg> for ScalarField {
    fn from(f: FieldArg) -> Self {
        match f {
            FieldArg::Real => ScalarField::Real,
            FieldArg::Complex => ScalarField::Complex,
        }
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize, Deserialize)]
#[serde(rename_all = "lowercase")]
pub enum CommandKind {
    Analyze,
    Classify,
    Scan,
    Ray,
    Polarize,
}

/// Echo of everything a run depends on, written as `manifest.json` next to
/// the artifacts. The spec is inlined so reproduction does not require the
/// original spec file.
#[derive(Debug, Clone, Serialize, Deserialize)]
pub struct RunManifest {
    pub tool_version: String,
    pub command: CommandKind,
    pub spec_path: String,
    pub spec: NormSpec,
    pub cfg: SampleConfig,
    pub output_dir: String,
    pub format: OutputFormat,
    #[serde(skip_serializing_if = "Option::is_none", default)]
    pub threshold: Option<f64>,
    #[serde(skip_serializing_if = "Vec::is_empty", default)]
    pub probes: Vec<String>,
    #[serde(skip_serializing_if = "Option::is_none", default)]
    pub anchor: Option<Vector>,
    #[serde(skip_serializing_if = "Option::is_none", default)]
    pub direction: Option<Vector>,
    #[serde(skip_serializing_if = "Option::is_none", default)]
    pub ts: Option<Vec<f64>>,
}

/// Scan artifact: the defect reports in canonical probe order.
#[derive(Debug, Clone, Serialize, Deserialize)]
pub struct ScanArtifact {
    pub reports: Vec<DefectReport>,
}

/// Polarize artifact: axiom scans plus the Gram reconstruction.
#[derive(Debug, Clone, Serialize, Deserialize)]
pub struct PolarizationArtifact {
    pub form_axioms: FormAxiomScan,
    pub gram_recon: GramRecon,
}

/// Ray artifact: the anchor used and the profiled drift.
#[derive(Debug, Clone, Serialize, Deserialize)]
pub struct RayArtifact {
    pub anchor: Vector,
    pub tension: ScalingTension,
}

const SCAN_PROBES: &[&str] = &[
    "norm_axioms",
    "sandwich",
    "homogeneity",
    "identity",
    "parallelogram",
    "degenerate_zero",
];
const DEFAULT_SCAN_PROBES: &[&str] = &["sandwich", "homogeneity", "identity", "parallelogram"];

fn validate_probes(requested: &[String]) -> anyhow::Result<Vec<String>> {
    if requested.is_empty() {
        return Ok(DEFAULT_SCAN_PROBES.iter().map(|s| s.to_string()).collect());
    }
    for name in requested {
        if !SCAN_PROBES.contains(&name.as_str()) {
            anyhow::bail!(
                "unknown probe {name:?}; valid probes: {}",
                SCAN_PROBES.join(", ")
            );
        }
    }
    // canonical order regardless of flag order, duplicates collapsed
    Ok(SCAN_PROBES
        .iter()
        .filter(|p| requested.iter().any(|r| r == *p))
        .map(|s| s.to_string())
        .collect())
}

fn parse_coords(s: &str, what: &str) -> anyhow::Result<Vec<f64>> {
    s.split(',')
        .map(|t| {
            t.trim()
                .parse::<f64>()
                .with_context(|| format!("{what} must be comma-separated numbers, got {t:?}"))
        })
        .collect()
}

/// Parses a vector flag and normalizes it to unit norm under the spec.
fn parse_unit_vector(spec: &NormSpec, s: &str, what: &str) -> anyhow::Result<Vector> {
    let v = Vector::new(spec.field(), parse_coords(s, what)?)?;
    spec.check_vector(&v)?;
    let n = norm_eval(spec, &v)?;
    if n == 0.0 {
        return Err(Error::ZeroVector).with_context(|| format!("{what} must be nonzero"));
    }
    Ok(v.scale(Scalar::Real(1.0 / n))?)
}

/// Default anchor: the first canonical basis direction, normalized.
fn default_anchor(spec: &NormSpec) -> anyhow::Result<Vector> {
    let e = Vector::basis(spec.field(), spec.dim(), 0);
    let n = norm_eval(spec, &e)?;
    Ok(e.scale(Scalar::Real(1.0 / n))?)
}

/// Default ray direction: the second basis direction when it exists (so the
/// ray is transversal to the default anchor), normalized.
fn default_direction(spec: &NormSpec) -> anyhow::Result<Vector> {
    let index = if spec.dim() > 1 { 1 } else { 0 };
    let e = Vector::basis(spec.field(), spec.dim(), index);
    let n = norm_eval(spec, &e)?;
    Ok(e.scale(Scalar::Real(1.0 / n))?)
}

struct Prepared {
    spec: NormSpec,
    cfg: SampleConfig,
    out: PathBuf,
    format: OutputFormat,
    spec_path: String,
}

fn prepare(common: &CommonOpts) -> anyhow::Result<Prepared> {
    if let Some(workers) = common.workers {
        if workers == 0 {
            anyhow::bail!("workers must be positive");
        }
        // ignore the error if a pool already exists (e.g. repeated calls in
        // one process); the configured pool then stays in effect
        let _ = rayon::ThreadPoolBuilder::new()
            .num_threads(workers)
            .build_global();
    }

    let text = fs::read_to_string(&common.spec)
        .with_context(|| format!("failed to read spec file {}", common.spec.display()))?;
    let mut spec = NormSpec::from_json(&text)
        .with_context(|| format!("invalid spec file {}", common.spec.display()))?;
    if let Some(dim) = common.dim {
        spec = spec.with_dim(dim)?;
    }
    if let Some(field) = common.field {
        spec = spec.with_field(field.into())?;
    }

    let mut cfg = SampleConfig::new(spec.dim(), spec.field());
    if let Some(n) = common.samples {
        cfg = cfg.with_samples(n);
    }
    if let Some(seed) = common.seed {
        cfg = cfg.with_seed(seed);
    }
    cfg.validate()?;

    fs::create_dir_all(&common.out)
        .with_context(|| format!("failed to create output dir {}", common.out.display()))?;

    Ok(Prepared {
        spec,
        cfg,
        out: common.out.clone(),
        format: common.format,
        spec_path: common.spec.display().to_string(),
    })
}

fn manifest_for(p: &Prepared, command: CommandKind) -> RunManifest {
    RunManifest {
        tool_version: env!("CARGO_PKG_VERSION").to_string(),
        command,
        spec_path: p.spec_path.clone(),
        spec: p.spec.clone(),
        cfg: p.cfg.clone(),
        output_dir: p.out.display().to_string(),
        format: p.format,
        threshold: None,
        probes: Vec::new(),
        anchor: None,
        direction: None,
        ts: None,
    }
}

fn write_json<T: Serialize>(dir: &Path, name: &str, value: &T) -> anyhow::Result<()> {
    let mut s = serde_json::to_string_pretty(value).context("failed to serialize artifact")?;
    s.push('\n');
    let path = dir.join(name);
    fs::write(&path, s).with_context(|| format!("failed to write {}", path.display()))?;
    Ok(())
}

fn write_text(dir: &Path, name: &str, content: &str) -> anyhow::Result<()> {
    let path = dir.join(name);
    fs::write(&path, content).with_context(|| format!("failed to write {}", path.display()))?;
    Ok(())
}

fn csv_opt(v: Option<f64>) -> String {
    v.map(|v| v.to_string()).unwrap_or_default()
}

fn reports_csv(reports: &[DefectReport]) -> String {
    let mut out =
        String::from("probe_name,sup_defect,sup_defect_raw,n_samples,tolerance,seed,witness_defect,min_ratio\n");
    for r in reports {
        let _ = writeln!(
            out,
            "{},{},{},{},{},{},{},{}",
            r.probe_name,
            r.sup_defect,
            r.sup_defect_raw,
            r.n_samples,
            r.tolerance,
            r.seed,
            csv_opt(r.witness.as_ref().map(|w| w.defect)),
            csv_opt(r.min_ratio),
        );
    }
    out
}

fn verdict_csv(verdict: &Verdict) -> String {
    let mut out = String::from(
        "outcome,threshold,probe_name,sup_defect,sup_defect_raw,n_samples,witness_defect\n",
    );
    let outcome = match verdict.outcome {
        Outcome::InnerProductConsistent => "inner_product_consistent",
        Outcome::NotInnerProduct => "not_inner_product",
    };
    for r in &verdict.evidence {
        let _ = writeln!(
            out,
            "{},{},{},{},{},{},{}",
            outcome,
            verdict.threshold,
            r.probe_name,
            r.sup_defect,
            r.sup_defect_raw,
            r.n_samples,
            csv_opt(r.witness.as_ref().map(|w| w.defect)),
        );
    }
    out
}

fn ray_csv(t: &ScalingTension) -> String {
    let mut out = String::from("t,p_value,ratio,defect\n");
    for e in &t.profile.entries {
        let _ = writeln!(out, "{},{},{},{}", e.t, e.p_value, e.ratio, e.defect);
    }
    out
}

fn polarization_csv(art: &PolarizationArtifact) -> String {
    let mut out = String::from("record,i,j,value_re,value_im\n");
    let gram = &art.gram_recon.gram;
    for i in 0..gram.dim() {
        for j in 0..gram.dim() {
            let v = gram.entry(i, j);
            let _ = writeln!(out, "gram,{i},{j},{},{}", v.re, v.im);
        }
    }
    let _ = writeln!(out, "residual_sup,,,{},0", art.gram_recon.residual_sup);
    let _ = writeln!(out, "spd_margin,,,{},0", art.gram_recon.spd_margin);
    for r in [
        &art.form_axioms.additivity,
        &art.form_axioms.scalar,
        &art.form_axioms.symmetry,
    ] {
        let _ = writeln!(out, "{},,,{},0", r.probe_name, r.sup_defect);
    }
    out
}

fn report_line(r: &DefectReport) -> String {
    let mut line = format!(
        "  {:<22} sup {:>12.6e} (raw {:.6e}) over {} samples",
        r.probe_name, r.sup_defect, r.sup_defect_raw, r.n_samples
    );
    if let Some(ratio) = r.min_ratio {
        let _ = write!(line, ", min ratio {ratio:.3e}");
    }
    if r.witness.is_some() {
        line.push_str(", witness recorded");
    }
    line
}

fn verdict_text(verdict: &Verdict) -> String {
    let mut out = format!(
        "verdict: {} (threshold {:e})\n",
        verdict.outcome, verdict.threshold
    );
    for r in &verdict.evidence {
        out.push_str(&report_line(r));
        out.push('\n');
    }
    out
}

fn exit_code(outcome: Outcome) -> i32 {
    match outcome {
        Outcome::InnerProductConsistent => 0,
        Outcome::NotInnerProduct => 2,
    }
}

fn run_scan_probes(
    spec: &NormSpec,
    cfg: &SampleConfig,
    anchor: &Vector,
    probes: &[String],
) -> anyhow::Result<Vec<DefectReport>> {
    let ctx = PContext::new(spec, anchor)?;
    let mut reports = Vec::new();
    for probe in probes {
        match probe.as_str() {
            "norm_axioms" => reports.push(axiom_scan(spec, cfg)?),
            "sandwich" => {
                let s = sandwich_check(&ctx, cfg)?;
                reports.push(s.all);
                reports.push(s.norm_ge_one);
            }
            "homogeneity" => reports.push(homogeneity_defect(&ctx, cfg)?),
            "identity" => reports.push(identity_defect(&ctx, cfg)?),
            "parallelogram" => reports.push(parallelogram_scan(spec, cfg)?),
            "degenerate_zero" => reports.push(degenerate_zero_probe(&ctx, cfg)?),
            other => anyhow::bail!("unknown probe {other:?}"),
        }
    }
    Ok(reports)
}

fn cmd_classify(p: &Prepared, threshold: f64) -> anyhow::Result<i32> {
    let mut manifest = manifest_for(p, CommandKind::Classify);
    manifest.threshold = Some(threshold);
    write_json(&p.out, "manifest.json", &manifest)?;

    let verdict = classify(&p.spec, &p.cfg, threshold)?;
    write_json(&p.out, "verdict.json", &verdict)?;
    match p.format {
        OutputFormat::Csv => write_text(&p.out, "verdict.csv", &verdict_csv(&verdict))?,
        OutputFormat::Text => print!("{}", verdict_text(&verdict)),
        OutputFormat::Json => {}
    }
    if p.format != OutputFormat::Text {
        println!("verdict: {}", verdict.outcome);
    }
    Ok(exit_code(verdict.outcome))
}

fn cmd_scan(p: &Prepared, probes: &[String], anchor: &Vector) -> anyhow::Result<i32> {
    let mut manifest = manifest_for(p, CommandKind::Scan);
    manifest.probes = probes.to_vec();
    manifest.anchor = Some(anchor.clone());
    write_json(&p.out, "manifest.json", &manifest)?;

    let reports = run_scan_probes(&p.spec, &p.cfg, anchor, probes)?;
    let artifact = ScanArtifact { reports };
    write_json(&p.out, "scan.json", &artifact)?;
    match p.format {
        OutputFormat::Csv => write_text(&p.out, "scan.csv", &reports_csv(&artifact.reports))?,
        OutputFormat::Text => {
            println!("scan of {}:", p.spec.describe());
            for r in &artifact.reports {
                println!("{}", report_line(r));
            }
        }
        OutputFormat::Json => {}
    }
    Ok(0)
}

fn cmd_ray(
    p: &Prepared,
    anchor: &Vector,
    direction: &Vector,
    ts: &[f64],
) -> anyhow::Result<i32> {
    let mut manifest = manifest_for(p, CommandKind::Ray);
    manifest.anchor = Some(anchor.clone());
    manifest.direction = Some(direction.clone());
    manifest.ts = Some(ts.to_vec());
    write_json(&p.out, "manifest.json", &manifest)?;

    let ctx = PContext::new(&p.spec, anchor)?;
    let tension = scaling_tension_probe(&ctx, direction, ts)?;
    let artifact = RayArtifact {
        anchor: anchor.clone(),
        tension,
    };
    write_text(&p.out, "ray.csv", &ray_csv(&artifact.tension))?;
    match p.format {
        OutputFormat::Json => write_json(&p.out, "ray.json", &artifact)?,
        OutputFormat::Text => {
            let t = &artifact.tension;
            println!(
                "ray drift: sup |d| = {:.6e}, final defect {:.6}, final ratio deviation {:.3e}",
                t.sup_abs_defect, t.final_defect, t.final_ratio_deviation
            );
        }
        OutputFormat::Csv => {}
    }
    Ok(0)
}

fn cmd_polarize(p: &Prepared) -> anyhow::Result<i32> {
    let manifest = manifest_for(p, CommandKind::Polarize);
    write_json(&p.out, "manifest.json", &manifest)?;

    let artifact = PolarizationArtifact {
        form_axioms: form_axiom_scan(&p.spec, &p.cfg)?,
        gram_recon: gram_reconstruct(&p.spec, &p.cfg)?,
    };
    write_json(&p.out, "polarization.json", &artifact)?;
    match p.format {
        OutputFormat::Csv => {
            write_text(&p.out, "polarization.csv", &polarization_csv(&artifact))?
        }
        OutputFormat::Text => {
            println!("polarization of {}:", p.spec.describe());
            for r in [
                &artifact.form_axioms.additivity,
                &artifact.form_axioms.scalar,
                &artifact.form_axioms.symmetry,
            ] {
                println!("{}", report_line(r));
            }
            println!(
                "  residual_sup {:.6e}, spd_margin {:.6e}",
                artifact.gram_recon.residual_sup, artifact.gram_recon.spd_margin
            );
        }
        OutputFormat::Json => {}
    }
    Ok(0)
}

fn cmd_analyze(p: &Prepared, threshold: f64, anchor: &Vector) -> anyhow::Result<i32> {
    let probes: Vec<String> = SCAN_PROBES.iter().map(|s| s.to_string()).collect();
    let direction = default_direction(&p.spec)?;
    let ts = crate::pfunc::default_ray_schedule();

    let mut manifest = manifest_for(p, CommandKind::Analyze);
    manifest.threshold = Some(threshold);
    manifest.probes = probes.clone();
    manifest.anchor = Some(anchor.clone());
    manifest.direction = Some(direction.clone());
    manifest.ts = Some(ts.clone());
    write_json(&p.out, "manifest.json", &manifest)?;

    let verdict = classify(&p.spec, &p.cfg, threshold)?;
    write_json(&p.out, "verdict.json", &verdict)?;

    let reports = run_scan_probes(&p.spec, &p.cfg, anchor, &probes)?;
    let scan_artifact = ScanArtifact { reports };
    write_json(&p.out, "scan.json", &scan_artifact)?;

    let polar_artifact = PolarizationArtifact {
        form_axioms: form_axiom_scan(&p.spec, &p.cfg)?,
        gram_recon: gram_reconstruct(&p.spec, &p.cfg)?,
    };
    write_json(&p.out, "polarization.json", &polar_artifact)?;

    let ctx = PContext::new(&p.spec, anchor)?;
    let tension = scaling_tension_probe(&ctx, &direction, &ts)?;
    let ray_artifact = RayArtifact {
        anchor: anchor.clone(),
        tension,
    };
    write_text(&p.out, "ray.csv", &ray_csv(&ray_artifact.tension))?;
    write_json(&p.out, "ray.json", &ray_artifact)?;

    match p.format {
        OutputFormat::Csv => {
            write_text(&p.out, "verdict.csv", &verdict_csv(&verdict))?;
            write_text(&p.out, "scan.csv", &reports_csv(&scan_artifact.reports))?;
            write_text(&p.out, "polarization.csv", &polarization_csv(&polar_artifact))?;
        }
        OutputFormat::Text => {
            print!("{}", verdict_text(&verdict));
            for r in &scan_artifact.reports {
                println!("{}", report_line(r));
            }
            println!(
                "  residual_sup {:.6e}, spd_margin {:.6e}",
                polar_artifact.gram_recon.residual_sup, polar_artifact.gram_recon.spd_margin
            );
        }
        OutputFormat::Json => {}
    }
    if p.format != OutputFormat::Text {
        println!("verdict: {}", verdict.outcome);
    }
    Ok(exit_code(verdict.outcome))
}

fn dispatch(cli: Cli) -> anyhow::Result<i32> {
    match cli.command {
        Command::Analyze {
            common,
            threshold,
            y,
        } => {
            let p = prepare(&common)?;
            let anchor = match y {
                Some(s) => parse_unit_vector(&p.spec, &s, "--y")?,
                None => default_anchor(&p.spec)?,
            };
            cmd_analyze(&p, threshold.unwrap_or(tol::CLASSIFY_THRESHOLD), &anchor)
        }
        Command::Classify { common, threshold } => {
            let p = prepare(&common)?;
            cmd_classify(&p, threshold.unwrap_or(tol::CLASSIFY_THRESHOLD))
        }
        Command::Scan { common, probes, y } => {
            let p = prepare(&common)?;
            let probes = validate_probes(&probes)?;
            let anchor = match y {
                Some(s) => parse_unit_vector(&p.spec, &s, "--y")?,
                None => default_anchor(&p.spec)?,
            };
            cmd_scan(&p, &probes, &anchor)
        }
        Command::Ray {
            common,
            direction,
            y,
            t_max,
            ts,
        } => {
            let p = prepare(&common)?;
            let anchor = match y {
                Some(s) => parse_unit_vector(&p.spec, &s, "--y")?,
                None => default_anchor(&p.spec)?,
            };
            let direction = match direction {
                Some(s) => parse_unit_vector(&p.spec, &s, "--direction")?,
                None => default_direction(&p.spec)?,
            };
            let ts = match ts {
                Some(s) => parse_coords(&s, "--ts")?,
                None => {
                    let max_exp = t_max.unwrap_or(tol::defaults::RAY_MAX_EXP);
                    (0..=max_exp).map(|k| (1u64 << k) as f64).collect()
                }
            };
            cmd_ray(&p, &anchor, &direction, &ts)
        }
        Command::Polarize { common } => {
            let p = prepare(&common)?;
            cmd_polarize(&p)
        }
    }
}

/// Entry point used by the binary: parses arguments, runs the command, and
/// maps the outcome to the exit-code contract (0 success/consistent, 2
/// falsified, 1 error).
pub fn main_entry() -> i32 {
    let cli = match Cli::try_parse() {
        Ok(cli) => cli,
        Err(e) => {
            // help/version are successful exits; anything else is an error
            let code = if e.use_stderr() { 1 } else { 0 };
            let _ = e.print();
            return code;
        }
    };
    match dispatch(cli) {
        Ok(code) => code,
        Err(e) => {
            eprintln!("error: {e:#}");
            1
        }
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn probe_validation_accepts_known_names_in_canonical_order() {
        let got = validate_probes(&["degenerate_zero".into(), "sandwich".into()]).unwrap();
        assert_eq!(got, vec!["sandwich".to_string(), "degenerate_zero".to_string()]);
        let default = validate_probes(&[]).unwrap();
        assert_eq!(
            default,
            vec!["sandwich", "homogeneity", "identity", "parallelogram"]
        );
        assert!(validate_probes(&["bogus".into()]).is_err());
    }

    #[test]
    fn coords_parse_and_reject_garbage() {
        assert_eq!(parse_coords("0, 1.5 ,2", "--y").unwrap(), vec![0.0, 1.5, 2.0]);
        assert!(parse_coords("1,zzz", "--y").is_err());
    }

    #[test]
    fn cli_args_parse() {
        let cli = Cli::try_parse_from([
            "normcheck", "classify", "--spec", "s.json", "--samples", "100", "--seed", "7",
            "--threshold", "1e-5",
        ])
        .unwrap();
        match cli.command {
            Command::Classify { common, threshold } => {
                assert_eq!(common.samples, Some(100));
                assert_eq!(common.seed, Some(7));
                assert_eq!(threshold, Some(1e-5));
            }
            other => panic!("unexpected command {other:?}"),
        }
    }
}
