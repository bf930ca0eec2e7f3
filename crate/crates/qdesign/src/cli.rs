//! The `qdesign` command line.
//!
//! Exit codes: 0 on success or a passing check, 2 when a verification or inequality check
//! fails, 1 for usage and input errors (including orders with no available bound).

use std::ffi::OsString;
use std::fs;
use std::io::Write;
use std::path::{Path, PathBuf};

use anyhow::{bail, Context};
use clap::{ArgGroup, Args, Parser, Subcommand};
use qdesign_core::combinatorics::{sym_dim_inverse, to_f64};
use qdesign_core::designs::{partition_into_povms, single_povm, verify_design, DesignSet, DEFAULT_TOL};
use qdesign_core::entropy::EntropyOrder;
use qdesign_core::eur::{assembly_bound, f_t_rho, lhs_entropy_sum};
use qdesign_core::haar::DEFAULT_SAMPLES;
use qdesign_core::linalg::{DensityMatrix, PureState};
use qdesign_core::measurements::MeasurementAssembly;
use qdesign_core::steering::{scan_threshold, SteeringScenario, DEFAULT_RESOLUTION};
use serde_json::{Map, Value};

use crate::figures::{generate, FigureId};
use crate::io::{load_state, resolve_design, save_design, FileError};
use crate::manifest::{sidecar_path, RunManifest};
use crate::parallel::haar_moment_estimate;

pub const EXIT_OK: i32 = 0;
pub const EXIT_USAGE: i32 = 1;
pub const EXIT_FAILED: i32 = 2;

/// Slack allowed when checking an entropy sum against its bound.
const INEQUALITY_SLACK: f64 = 1e-10;

/// Haar estimates must land within this many standard errors of the target.
const Z_LIMIT: f64 = 4.0;

#[derive(Debug, Parser)]
#[command(
    name = "qdesign",
    version,
    about = "Quantum design verification, entropic uncertainty bounds and steering thresholds"
)]
pub struct Cli {
    /// Print the report as JSON.
    #[arg(long, global = true)]
    json: bool,

    #[command(subcommand)]
    command: Command,
}

#[derive(Debug, Subcommand)]
enum Command {
    /// Check a design at strength t by its frame potential.
    Verify(VerifyArgs),
    /// Evaluate the Rényi or Tsallis uncertainty bound of a design's measurements.
    Bound(BoundArgs),
    /// Write the CSV data of a figure (fig2a, fig2b, fig2c, fig3a, fig3b or all).
    Figure(FigureArgs),
    /// Locate the noise threshold of the entropic steering inequality.
    Steering(SteeringArgs),
    /// Monte Carlo check of the Haar moment against D_t F_t(ρ).
    Haar(HaarArgs),
    /// Write a design to a canonical design file.
    Export(ExportArgs),
}

#[derive(Debug, Args)]
struct VerifyArgs {
    /// Catalog name or design file.
    #[arg(long)]
    design: String,
    #[arg(long)]
    t: usize,
    /// Tolerance on the frame-potential deviation.
    #[arg(long, default_value_t = DEFAULT_TOL)]
    tol: f64,
}

#[derive(Debug, Args)]
#[command(group(ArgGroup::new("family").required(true).args(["renyi", "tsallis"])))]
struct BoundArgs {
    /// Catalog name or design file.
    #[arg(long)]
    design: String,
    /// Rényi order α (`inf` allowed).
    #[arg(long, value_name = "ALPHA")]
    renyi: Option<f64>,
    /// Tsallis order q.
    #[arg(long, value_name = "Q")]
    tsallis: Option<f64>,
    /// Fix t' instead of optimizing it.
    #[arg(long, value_name = "T")]
    tprime: Option<usize>,
    /// State file for the state-dependent bound.
    #[arg(long, value_name = "FILE")]
    state: Option<PathBuf>,
    /// Treat the whole design as one POVM.
    #[arg(long)]
    single_povm: bool,
}

#[derive(Debug, Args)]
struct FigureArgs {
    /// Figure id, or `all`.
    id: String,
    /// Output CSV file or directory (default: `<id>.csv` in the working directory).
    #[arg(long)]
    out: Option<PathBuf>,
}

#[derive(Debug, Args)]
struct SteeringArgs {
    /// `pauli`, a catalog name or a design file.
    #[arg(long)]
    set: String,
    #[arg(long)]
    alpha: f64,
    #[arg(long, default_value_t = DEFAULT_RESOLUTION)]
    resolution: f64,
}

#[derive(Debug, Args)]
struct HaarArgs {
    #[arg(long)]
    d: usize,
    #[arg(long)]
    t: usize,
    #[arg(long, default_value_t = DEFAULT_SAMPLES)]
    samples: usize,
    #[arg(long, env = "QDESIGN_SEED", default_value_t = 0)]
    seed: u64,
    /// State file; otherwise `(1 - p)|0⟩⟨0| + p·1/d` with `p` from `--mixing`.
    #[arg(long, value_name = "FILE")]
    state: Option<PathBuf>,
    #[arg(long, default_value_t = 0.0)]
    mixing: f64,
}

#[derive(Debug, Args)]
struct ExportArgs {
    #[arg(long)]
    design: String,
    #[arg(long)]
    out: PathBuf,
}

enum Status {
    Pass,
    Fail,
}

/// Ordered report fields, rendered as `key: value` lines or a JSON object.
#[derive(Default)]
struct Report {
    fields: Vec<(&'static str, Value)>,
}

impl Report {
    fn add(&mut self, key: &'static str, value: impl Into<Value>) -> &mut Self {
        self.fields.push((key, value.into()));
        self
    }

    fn real(&mut self, key: &'static str, x: f64) -> &mut Self {
        // JSON has no infinities
        let v = serde_json::Number::from_f64(x)
            .map(Value::Number)
            .unwrap_or_else(|| Value::String(x.to_string()));
        self.add(key, v)
    }

    fn emit(&self, json: bool, out: &mut dyn Write) -> std::io::Result<()> {
        if json {
            let map: Map<String, Value> = self.fields.iter().map(|(k, v)| (k.to_string(), v.clone())).collect();
            writeln!(out, "{}", Value::Object(map))
        } else {
            for (k, v) in &self.fields {
                match v {
                    Value::String(s) => writeln!(out, "{k}: {s}")?,
                    Value::Number(n) if n.is_f64() => writeln!(out, "{k}: {:.10}", n.as_f64().unwrap_or_default())?,
                    other => writeln!(out, "{k}: {other}")?,
                }
            }
            Ok(())
        }
    }
}

/// Runs the command line and returns the process exit code.
pub fn run<I, T>(args: I) -> i32
where
    I: IntoIterator<Item = T>,
    T: Into<OsString> + Clone,
{
    let stdout = std::io::stdout();
    run_with(args, &mut stdout.lock())
}

/// [`run`] writing reports to `out`; diagnostics still go to stderr.
pub fn run_with<I, T>(args: I, out: &mut dyn Write) -> i32
where
    I: IntoIterator<Item = T>,
    T: Into<OsString> + Clone,
{
    let cli = match Cli::try_parse_from(args) {
        Ok(cli) => cli,
        Err(e) => {
            let _ = e.print();
            return if e.use_stderr() { EXIT_USAGE } else { EXIT_OK };
        }
    };
    match dispatch(cli, out) {
        Ok(Status::Pass) => EXIT_OK,
        Ok(Status::Fail) => EXIT_FAILED,
        Err(e) => {
            eprintln!("error: {e:#}");
            exit_code(&e)
        }
    }
}

fn exit_code(e: &anyhow::Error) -> i32 {
    let is_failure = |err: &qdesign_core::Error| {
        matches!(
            err,
            qdesign_core::Error::VerificationFailed { .. } | qdesign_core::Error::NoCrossing(_)
        )
    };
    for cause in e.chain() {
        if let Some(err) = cause.downcast_ref::<qdesign_core::Error>() {
            if is_failure(err) {
                return EXIT_FAILED;
            }
        }
        if let Some(err) = cause.downcast_ref::<FileError>().and_then(FileError::core_error) {
            if is_failure(err) {
                return EXIT_FAILED;
            }
        }
    }
    EXIT_USAGE
}

fn dispatch(cli: Cli, out: &mut dyn Write) -> anyhow::Result<Status> {
    let json = cli.json;
    let mut report = Report::default();
    let status = match cli.command {
        Command::Verify(args) => verify(args, &mut report)?,
        Command::Bound(args) => bound(args, &mut report)?,
        Command::Figure(args) => figure(args, &mut report)?,
        Command::Steering(args) => steering(args, &mut report)?,
        Command::Haar(args) => haar(args, &mut report)?,
        Command::Export(args) => export(args, &mut report)?,
    };
    report.emit(json, out)?;
    Ok(status)
}

fn verify(args: VerifyArgs, report: &mut Report) -> anyhow::Result<Status> {
    let design = resolve_design(&args.design)?;
    let r = verify_design(&design, args.t, args.tol)?;
    report
        .add("design", design.name())
        .add("dim", design.dim())
        .add("vectors", design.len())
        .add("t", r.t_tested)
        .real("frame_potential", r.frame_potential)
        .real("target", r.target)
        .add("deviation", format!("{:.4e}", r.deviation))
        .add("tolerance", format!("{:e}", args.tol));
    Ok(if r.passed {
        report.add("result", "PASS");
        Status::Pass
    } else {
        report.add(
            "result",
            format!(
                "FAIL: verification failed, deviation {:.4e} at t={}",
                r.deviation, r.t_tested
            ),
        );
        Status::Fail
    })
}

fn assembly_for(design: &DesignSet, single: bool) -> anyhow::Result<MeasurementAssembly> {
    if single {
        return Ok(single_povm(design)?);
    }
    partition_into_povms(design).with_context(|| {
        format!(
            "cannot split '{}' into projective measurements; pass --single-povm to use it as one POVM",
            design.name()
        )
    })
}

fn bound(args: BoundArgs, report: &mut Report) -> anyhow::Result<Status> {
    let design = resolve_design(&args.design)?;
    let assembly = assembly_for(&design, args.single_povm)?;
    let (order, family, value) = match (args.renyi, args.tsallis) {
        (Some(a), _) => (EntropyOrder::renyi(a)?, "renyi", a),
        (_, Some(q)) => (EntropyOrder::tsallis(q)?, "tsallis", q),
        _ => bail!("one of --renyi or --tsallis is required"),
    };
    let independent = assembly_bound(&assembly, order, args.tprime, None)?;
    report
        .add("design", design.name())
        .add("measurements", independent.m)
        .add("outcomes", independent.n)
        .add("dim", independent.d)
        .add("family", family)
        .real("order", value)
        .add("t_prime", independent.t_prime)
        .real("bound", independent.bound);

    let Some(path) = args.state else {
        return Ok(Status::Pass);
    };
    let rho = load_state(&path)?;
    let dependent = assembly_bound(&assembly, order, Some(independent.t_prime), Some(&rho))?;
    let lhs = lhs_entropy_sum(&assembly, &rho, order)?;
    report
        .real("f_t", dependent.f_t_value)
        .real("state_bound", dependent.bound)
        .real("entropy_sum", lhs)
        .real("slack", lhs - dependent.bound);
    Ok(if lhs >= dependent.bound - INEQUALITY_SLACK {
        report.add("result", "PASS");
        Status::Pass
    } else {
        report.add("result", "FAIL: entropy sum below the state-dependent bound");
        Status::Fail
    })
}

fn write_figure(id: FigureId, path: &Path, report: &mut Report) -> anyhow::Result<()> {
    let table = generate(id)?;
    fs::write(path, table.to_csv()).with_context(|| format!("cannot write {}", path.display()))?;
    let manifest_path = sidecar_path(path);
    RunManifest::new("figure")
        .parameter("id", id.as_str())
        .output(path)
        .write(&manifest_path)
        .with_context(|| format!("cannot write {}", manifest_path.display()))?;
    report.add(id.as_str(), format!("{} ({} rows)", path.display(), table.rows.len()));
    Ok(())
}

fn figure(args: FigureArgs, report: &mut Report) -> anyhow::Result<Status> {
    if args.id == "all" {
        let dir = args.out.unwrap_or_else(|| PathBuf::from("."));
        fs::create_dir_all(&dir).with_context(|| format!("cannot create {}", dir.display()))?;
        for id in FigureId::ALL {
            write_figure(id, &dir.join(format!("{id}.csv")), report)?;
        }
        return Ok(Status::Pass);
    }
    let id: FigureId = args.id.parse()?;
    let path = match args.out {
        None => PathBuf::from(format!("{id}.csv")),
        Some(p) if p.is_dir() => p.join(format!("{id}.csv")),
        Some(p) => p,
    };
    write_figure(id, &path, report)?;
    Ok(Status::Pass)
}

fn steering(args: SteeringArgs, report: &mut Report) -> anyhow::Result<Status> {
    let name = if args.set == "pauli" {
        "octahedron"
    } else {
        args.set.as_str()
    };
    let design = resolve_design(name)?;
    let assembly = assembly_for(&design, false)?;
    let (m, n, d) = (assembly.len(), assembly.outcomes(), assembly.dim());
    let scenario = SteeringScenario::maximally_entangled(assembly, args.alpha)?;
    let r = scan_threshold(&scenario, args.resolution)?;
    report
        .add("set", args.set.as_str())
        .add("measurements", m)
        .add("outcomes", n)
        .add("dim", d)
        .real("alpha", r.alpha)
        .add("t_prime", r.t_prime)
        .real("bound", r.bound_used)
        .real("eta_star", r.eta_star)
        .real("resolution", r.resolution)
        .add("method", if r.bisected { "bisection" } else { "grid" });
    Ok(Status::Pass)
}

fn haar(args: HaarArgs, report: &mut Report) -> anyhow::Result<Status> {
    let rho = match &args.state {
        Some(path) => {
            let rho = load_state(path)?;
            if rho.dim() != args.d {
                bail!(
                    "state in {} has dimension {}, expected --d {}",
                    path.display(),
                    rho.dim(),
                    args.d
                );
            }
            rho
        }
        None => {
            if args.d == 0 {
                bail!("--d must be at least 1");
            }
            DensityMatrix::from_pure(&PureState::basis(args.d, 0)?)
                .mix(&DensityMatrix::maximally_mixed(args.d), args.mixing)?
        }
    };
    let target = to_f64(&sym_dim_inverse(args.t, args.d)?) * f_t_rho(&rho, args.t)?;
    let estimate = haar_moment_estimate(&rho, args.t, args.samples, args.seed)?;
    let z = estimate.z_score(target);
    report
        .add("d", args.d)
        .add("t", args.t)
        .add("samples", estimate.samples)
        .add("seed", estimate.seed)
        .real("mean", estimate.mean)
        .real("stderr", estimate.stderr)
        .real("target", target)
        .real("z", z);
    Ok(if z <= Z_LIMIT {
        report.add("result", "PASS");
        Status::Pass
    } else {
        report.add(
            "result",
            format!("FAIL: estimate {z:.2} standard errors from the target"),
        );
        Status::Fail
    })
}

fn export(args: ExportArgs, report: &mut Report) -> anyhow::Result<Status> {
    let design = resolve_design(&args.design)?;
    save_design(&design, &args.out)?;
    let manifest_path = sidecar_path(&args.out);
    RunManifest::new("export")
        .parameter("design", args.design.as_str())
        .output(&args.out)
        .write(&manifest_path)
        .with_context(|| format!("cannot write {}", manifest_path.display()))?;
    report
        .add("design", design.name())
        .add("written", args.out.display().to_string());
    Ok(Status::Pass)
}
