//! The `rankrange` command line.
//!
//! Exit codes: 0 success or nonempty, 2 empty or outside, 3 synthesis
//! failure, 1 usage or parse error.

use std::fs;
use std::io::Write;
use std::path::{Path, PathBuf};

use clap::{Args, Parser, Subcommand};

use crate::counterexample::{build_perturbed, CounterexampleSpec};
use crate::engine::{boundary_region_with, membership, Certificate, Membership, RankRangeQuery};
use crate::error::{Error, Result};
use crate::geometry::{ConvexRegion, HalfPlane};
use crate::io::{
    read_matrix, rect_matrix_to_json, region_svg, spectral_radius_estimate, write_matrix, CertificatePayload,
    RegionExport,
};
use crate::linalg::C64;
use crate::normal::{normal_exact_region_with, normal_spectrum};
use crate::settings::Settings;
use crate::witness::{compression_residual, isometry_defect, synthesize_isometry_with, SynthesisOptions};

pub const EXIT_OK: i32 = 0;
pub const EXIT_ERROR: i32 = 1;
pub const EXIT_EMPTY: i32 = 2;
pub const EXIT_SYNTHESIS: i32 = 3;

#[derive(Debug, Parser)]
#[command(name = "rankrange", version, about = "Rank-k numerical ranges of complex matrices")]
pub struct Cli {
    #[command(subcommand)]
    pub command: Command,
}

#[derive(Debug, Subcommand)]
pub enum Command {
    /// Outer region of Λ_k(A) with its certificate.
    Range(RangeArgs),
    /// Whether a point lies in Λ_k(A).
    Member(PointArgs),
    /// Isometry X with X*AX = μI.
    Witness(WitnessArgs),
    /// Direct sum of rotated identities with empty Λ_k.
    Counterexample(CounterexampleArgs),
    /// Exact Λ_k of a normal matrix from its spectrum.
    NormalExact(NormalArgs),
}

#[derive(Debug, Args)]
pub struct RangeArgs {
    #[arg(long)]
    pub matrix: PathBuf,
    #[arg(long)]
    pub k: usize,
    #[arg(long)]
    pub grid: Option<usize>,
    /// Region export, JSON for `.json` and CSV otherwise.
    #[arg(long)]
    pub out: Option<PathBuf>,
    /// Also write an SVG plot next to `--out`.
    #[arg(long)]
    pub svg: bool,
}

#[derive(Debug, Args)]
pub struct PointArgs {
    #[arg(long)]
    pub matrix: PathBuf,
    #[arg(long)]
    pub k: usize,
    #[arg(long, allow_negative_numbers = true)]
    pub re: f64,
    #[arg(long, allow_negative_numbers = true, default_value_t = 0.0)]
    pub im: f64,
    #[arg(long)]
    pub grid: Option<usize>,
}

#[derive(Debug, Args)]
pub struct WitnessArgs {
    #[arg(long)]
    pub matrix: PathBuf,
    #[arg(long)]
    pub k: usize,
    #[arg(long, allow_negative_numbers = true)]
    pub re: f64,
    #[arg(long, allow_negative_numbers = true, default_value_t = 0.0)]
    pub im: f64,
    /// Isometry JSON; printed to stdout when omitted.
    #[arg(long)]
    pub out: Option<PathBuf>,
    #[arg(long)]
    pub seed: Option<u64>,
}

#[derive(Debug, Args)]
pub struct CounterexampleArgs {
    #[arg(long)]
    pub n: usize,
    #[arg(long)]
    pub k: usize,
    #[arg(long, default_value_t = 0.0)]
    pub epsilon: f64,
    #[arg(long, default_value_t = 0)]
    pub seed: u64,
    /// Matrix file, JSON or CSV by extension; JSON on stdout when omitted.
    #[arg(long)]
    pub out: Option<PathBuf>,
}

#[derive(Debug, Args)]
pub struct NormalArgs {
    #[arg(long)]
    pub matrix: PathBuf,
    #[arg(long)]
    pub k: usize,
    #[arg(long)]
    pub out: Option<PathBuf>,
    #[arg(long)]
    pub svg: bool,
}

/// Parses `args` and runs the command, printing to `out` and `err`.
pub fn run_from<I, T>(args: I, out: &mut dyn Write, err: &mut dyn Write) -> i32
where
    I: IntoIterator<Item = T>,
    T: Into<std::ffi::OsString> + Clone,
{
    match Cli::try_parse_from(args) {
        Ok(cli) => run(&cli, &Settings::from_env(), out, err),
        Err(e) => {
            if e.use_stderr() {
                let _ = write!(err, "{e}");
                EXIT_ERROR
            } else {
                let _ = write!(out, "{e}");
                EXIT_OK
            }
        }
    }
}

pub fn run(cli: &Cli, settings: &Settings, out: &mut dyn Write, err: &mut dyn Write) -> i32 {
    let result = match &cli.command {
        Command::Range(a) => cmd_range(a, settings, out),
        Command::Member(a) => cmd_member(a, settings, out),
        Command::Witness(a) => cmd_witness(a, settings, out),
        Command::Counterexample(a) => cmd_counterexample(a, out),
        Command::NormalExact(a) => cmd_normal_exact(a, settings, out),
    };
    match result {
        Ok(code) => code,
        Err(e) => {
            let _ = writeln!(err, "error: {e}");
            match e {
                Error::SynthesisFailed { .. } => EXIT_SYNTHESIS,
                _ => EXIT_ERROR,
            }
        }
    }
}

fn io_err(e: std::io::Error) -> Error {
    Error::Io(e.to_string())
}

fn svg_path(out: &Option<PathBuf>) -> Result<PathBuf> {
    out.as_ref()
        .map(|p| p.with_extension("svg"))
        .ok_or_else(|| Error::InvalidArgument("--svg requires --out".into()))
}

fn write_export(export: &RegionExport, path: &Path) -> Result<()> {
    let text = match path.extension().and_then(|e| e.to_str()) {
        Some("json") => export.to_json()?,
        _ => export.to_csv(),
    };
    fs::write(path, text)?;
    Ok(())
}

fn print_region(region: &ConvexRegion, out: &mut dyn Write) -> Result<()> {
    writeln!(out, "{}", region.kind().name().to_uppercase()).map_err(io_err)?;
    for v in region.vertices() {
        writeln!(out, "vertex {:.16e} {:.16e}", v.re, v.im).map_err(io_err)?;
    }
    Ok(())
}

fn query(matrix: &Path, k: usize, grid: Option<usize>, settings: &Settings) -> Result<RankRangeQuery> {
    let a = read_matrix(matrix)?;
    let q = RankRangeQuery::from_settings(a, k, settings)?;
    match grid {
        Some(m) => q.with_grid(m),
        None => Ok(q),
    }
}

pub fn cmd_range(args: &RangeArgs, settings: &Settings, out: &mut dyn Write) -> Result<i32> {
    let svg = if args.svg { Some(svg_path(&args.out)?) } else { None };
    let q = query(&args.matrix, args.k, args.grid, settings)?;
    let a = q.matrix().clone();
    let r = boundary_region_with(&q, settings)?;
    print_region(&r.region, out)?;
    match &r.certificate {
        Certificate::EmptyCertificate { angles } => {
            let list: Vec<String> = angles.iter().map(|t| format!("{t:.6}")).collect();
            writeln!(out, "certificate EmptyCertificate angles {}", list.join(" ")).map_err(io_err)?;
        }
        Certificate::NonEmptyWitness { mu, isometry } => {
            let res = compression_residual(&a, isometry.matrix(), *mu)?;
            writeln!(out, "certificate NonEmptyWitness mu {:.16e} {:.16e} residual {res:.3e}", mu.re, mu.im)
                .map_err(io_err)?;
        }
        Certificate::Approximate => writeln!(out, "certificate Approximate").map_err(io_err)?,
    }
    if let Some(path) = &args.out {
        write_export(&RegionExport::from_result(&r), path)?;
    }
    if let Some(path) = svg {
        fs::write(path, region_svg(&r.region, spectral_radius_estimate(&a) <= 5.0))?;
    }
    Ok(if r.region.is_empty() { EXIT_EMPTY } else { EXIT_OK })
}

pub fn cmd_member(args: &PointArgs, settings: &Settings, out: &mut dyn Write) -> Result<i32> {
    let q = query(&args.matrix, args.k, args.grid, settings)?;
    let m = membership(&q, C64::new(args.re, args.im))?;
    match m {
        Membership::Outside { angle, slack } => {
            writeln!(out, "Outside angle {angle:.16e} slack {slack:.3e}").map_err(io_err)?;
            Ok(EXIT_EMPTY)
        }
        _ => {
            writeln!(out, "{}", m.name()).map_err(io_err)?;
            Ok(EXIT_OK)
        }
    }
}

pub fn cmd_witness(args: &WitnessArgs, settings: &Settings, out: &mut dyn Write) -> Result<i32> {
    let a = read_matrix(&args.matrix)?;
    RankRangeQuery::from_settings(a.clone(), args.k, settings)?;
    let mu = C64::new(args.re, args.im);
    let mut opts = SynthesisOptions::from_settings(settings);
    if let Some(seed) = args.seed {
        opts.seed = seed;
    }
    let x = match synthesize_isometry_with(&a, args.k, mu, &opts) {
        Ok(x) => x,
        Err(Error::SynthesisFailed { best_residual }) => {
            writeln!(out, "synthesis failed, best residual {best_residual:.3e}").map_err(io_err)?;
            return Ok(EXIT_SYNTHESIS);
        }
        Err(e) => return Err(e),
    };
    let json = rect_matrix_to_json(x.matrix())?;
    match &args.out {
        Some(path) => fs::write(path, json)?,
        None => writeln!(out, "{json}").map_err(io_err)?,
    }
    writeln!(out, "compression residual {:.3e}", compression_residual(&a, x.matrix(), mu)?).map_err(io_err)?;
    writeln!(out, "isometry defect {:.3e}", isometry_defect(x.matrix())).map_err(io_err)?;
    Ok(EXIT_OK)
}

pub fn cmd_counterexample(args: &CounterexampleArgs, out: &mut dyn Write) -> Result<i32> {
    let spec = CounterexampleSpec::new(args.n, args.k)?.with_perturbation(args.epsilon, args.seed)?;
    let a = build_perturbed(&spec)?;
    match &args.out {
        Some(path) => write_matrix(path, &a)?,
        None => writeln!(out, "{}", crate::io::matrix_to_json(&a)?).map_err(io_err)?,
    }
    Ok(EXIT_OK)
}

pub fn cmd_normal_exact(args: &NormalArgs, settings: &Settings, out: &mut dyn Write) -> Result<i32> {
    let svg = if args.svg { Some(svg_path(&args.out)?) } else { None };
    let a = read_matrix(&args.matrix)?;
    let spec = normal_spectrum(&a, settings.normal_tol)?;
    let region = normal_exact_region_with(&spec, args.k, settings.combinatorial_limit, settings.collapse_tol)?;
    print_region(&region, out)?;
    if let Some(path) = &args.out {
        let planes: Vec<HalfPlane> = region.to_halfplanes();
        write_export(&RegionExport::new(&region, &planes, CertificatePayload::Approximate), path)?;
    }
    if let Some(path) = svg {
        fs::write(path, region_svg(&region, spec.spectral_radius() <= 5.0))?;
    }
    Ok(if region.is_empty() { EXIT_EMPTY } else { EXIT_OK })
}
