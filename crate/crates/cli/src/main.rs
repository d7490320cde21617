mod input;
mod suite;
mod verify;

use std::fs;
use std::io::{self, Write};
use std::path::PathBuf;
use std::process::ExitCode;

use circsurf::analysis::theorem1_check;
use circsurf::implicitize::{implicitize, implicitize_symbolic, ImplicitSurface};
use circsurf::mesh::{mesh, mesh_closed, write_obj, MeshOptions};
use circsurf::poly::rational::to_f64;
use circsurf::Error;
use clap::{Args, Parser, Subcommand};
use serde::Serialize;

use suite::{run_suite, summary_table, SuiteConfig, MEMBERS};

#[derive(Parser, Debug)]
#[command(name = "circsurf", version, about = "Circular surfaces of circle congruences: meshing, implicitization and analysis")]
struct Cli {
    #[command(subcommand)]
    command: Command,
    /// Worker threads (0 = all cores).
    #[arg(long, global = true, default_value_t = 0)]
    jobs: usize,
}

#[derive(Subcommand, Debug)]
enum Command {
    /// Tessellate the surface and write a Wavefront OBJ mesh.
    Sample(SampleArgs),
    /// Compute the implicit equation as JSON.
    Implicitize(ImplicitArgs),
    /// Compare predicted and computed order and multiplicities.
    Analyze(CurveArgs),
    /// Sampled membership, exact membership, orthogonality and inversion checks.
    Verify(VerifyArgs),
    /// Run the built-in verification battery and print a summary table.
    Suite(SuiteArgs),
}

#[derive(Args, Debug)]
struct CurveArgs {
    /// Curve-spec JSON file or catalog name.
    #[arg(long)]
    curve: String,
    /// Congruence parameter q = p² as a rational, e.g. 1, -4, 9/4.
    #[arg(long, default_value = "1", allow_hyphen_values = true)]
    q: String,
    /// Output file (stdout when omitted).
    #[arg(long)]
    out: Option<PathBuf>,
}

#[derive(Args, Debug)]
struct SampleArgs {
    #[command(flatten)]
    curve: CurveArgs,
    /// Parameter range start; without --t0/--t1 the whole curve is meshed in two charts.
    #[arg(long, allow_hyphen_values = true)]
    t0: Option<String>,
    #[arg(long, allow_hyphen_values = true)]
    t1: Option<String>,
    #[arg(long, default_value_t = 64)]
    nt: usize,
    #[arg(long, default_value_t = 48)]
    ntheta: usize,
}

#[derive(Args, Debug)]
struct ImplicitArgs {
    #[command(flatten)]
    curve: CurveArgs,
    /// Keep q as a fourth variable.
    #[arg(long, default_value_t = false, num_args = 0..=1, default_missing_value = "true")]
    symbolic_q: bool,
}

#[derive(Args, Debug)]
struct VerifyArgs {
    #[command(flatten)]
    curve: CurveArgs,
    #[arg(long, default_value_t = 100)]
    samples: usize,
    #[arg(long, default_value_t = 1)]
    seed: u64,
    #[arg(long, default_value_t = 1e-9)]
    tol: f64,
}

#[derive(Args, Debug)]
struct SuiteArgs {
    /// Members to run (default: all).
    #[arg(long, value_delimiter = ',')]
    only: Vec<String>,
    #[arg(long, default_value_t = 100)]
    samples: usize,
    #[arg(long, default_value_t = 1)]
    seed: u64,
    #[arg(long, default_value_t = 1e-9)]
    tol: f64,
    #[arg(long, default_value_t = 16)]
    nt: usize,
    #[arg(long, default_value_t = 16)]
    ntheta: usize,
    /// Also write the per-check results as JSON.
    #[arg(long)]
    out: Option<PathBuf>,
}

enum Failure {
    Check(String),
    Input(Error),
}

impl From<Error> for Failure {
    fn from(e: Error) -> Self {
        Failure::Input(e)
    }
}

type Outcome = std::result::Result<(), Failure>;

fn emit(out: &Option<PathBuf>, text: &str) -> Outcome {
    match out {
        Some(p) => fs::write(p, text).map_err(|e| Failure::Input(Error::Parse(format!("{}: {e}", p.display())))),
        None => {
            let mut so = io::stdout().lock();
            so.write_all(text.as_bytes()).and_then(|_| so.write_all(b"\n")).map_err(|e| Failure::Input(Error::Parse(e.to_string())))
        }
    }
}

fn to_json<T: Serialize>(v: &T) -> String {
    serde_json::to_string_pretty(v).expect("plain data serializes")
}

fn surface_for(args: &CurveArgs, symbolic: bool) -> std::result::Result<(circsurf::RationalCurve, circsurf::CongruenceParam, ImplicitSurface), Failure> {
    let c = input::load_curve(&args.curve)?;
    let q = input::parse_q(&args.q)?;
    let s = if symbolic { implicitize_symbolic(&c)? } else { implicitize(&c, &q)? };
    Ok((c, q, s))
}

fn sample(a: &SampleArgs) -> Outcome {
    let c = input::load_curve(&a.curve.curve)?;
    let q = input::parse_q(&a.curve.q)?;
    let opts = MeshOptions {
        n_t: input::check_grid(a.nt, "--nt")?,
        n_theta: input::check_grid(a.ntheta, "--ntheta")?,
        ..MeshOptions::default()
    };
    let m = match (&a.t0, &a.t1) {
        (Some(t0), Some(t1)) => {
            let range = (to_f64(&input::parse_param(t0)?), to_f64(&input::parse_param(t1)?));
            mesh(&c, &q, range, &opts)?
        }
        (None, None) => mesh_closed(&c, &q, &opts)?,
        _ => return Err(Failure::Input(Error::Parse("--t0 and --t1 must be given together".into()))),
    };
    let mut buf = Vec::new();
    write_obj(&m, &mut buf).expect("writing to memory");
    let text = String::from_utf8(buf).expect("ascii output");
    emit(&a.curve.out, text.trim_end())?;
    log::info!("{} vertices, {} faces, {} pinch vertices", m.vertices.len(), m.faces.len(), m.pinch_vertices.len());
    Ok(())
}

fn implicit(a: &ImplicitArgs) -> Outcome {
    let (_, _, s) = surface_for(&a.curve, a.symbolic_q)?;
    emit(&a.curve.out, &to_json(&s.to_json()?))?;
    if s.degree_matches() {
        Ok(())
    } else {
        Err(Failure::Check(format!("order {} differs from the predicted {}", s.computed_order, s.predicted_order)))
    }
}

fn analyze(a: &CurveArgs) -> Outcome {
    let (c, q, s) = surface_for(a, false)?;
    let report = theorem1_check(&c, &q, &s)?;
    emit(&a.out, &to_json(&report))?;
    if report.passed() {
        Ok(())
    } else {
        Err(Failure::Check("predicted and computed counts differ".into()))
    }
}

fn verify_cmd(a: &VerifyArgs) -> Outcome {
    let tol = input::check_tol(a.tol)?;
    let (c, q, s) = surface_for(&a.curve, false)?;
    let report = verify::verify(&c, &q, &s, a.samples, a.seed, tol)?;
    emit(&a.curve.out, &to_json(&report))?;
    if report.pass {
        Ok(())
    } else {
        Err(Failure::Check("verification failed".into()))
    }
}

fn suite_cmd(a: &SuiteArgs) -> Outcome {
    let cfg = SuiteConfig {
        samples: a.samples,
        seed: a.seed,
        tol: input::check_tol(a.tol)?,
        mesh: MeshOptions {
            n_t: input::check_grid(a.nt, "--nt")?,
            n_theta: input::check_grid(a.ntheta, "--ntheta")?,
            ..MeshOptions::default()
        },
    };
    let members: Vec<&str> = if a.only.is_empty() { MEMBERS.to_vec() } else { a.only.iter().map(String::as_str).collect() };
    let rows = run_suite(&members, &cfg);
    print!("{}", summary_table(&rows));
    if let Some(p) = &a.out {
        emit(&Some(p.clone()), &to_json(&rows))?;
    }
    if rows.iter().all(|r| r.pass) {
        Ok(())
    } else {
        Err(Failure::Check("suite has failing members".into()))
    }
}

fn main() -> ExitCode {
    env_logger::Builder::from_env(env_logger::Env::default().default_filter_or("warn")).init();
    let cli = Cli::parse();
    if cli.jobs > 0 {
        if let Err(e) = rayon::ThreadPoolBuilder::new().num_threads(cli.jobs).build_global() {
            log::warn!("could not size the worker pool: {e}");
        }
    }
    let outcome = match &cli.command {
        Command::Sample(a) => sample(a),
        Command::Implicitize(a) => implicit(a),
        Command::Analyze(a) => analyze(a),
        Command::Verify(a) => verify_cmd(a),
        Command::Suite(a) => suite_cmd(a),
    };
    match outcome {
        Ok(()) => ExitCode::SUCCESS,
        Err(Failure::Check(msg)) => {
            eprintln!("check failed: {msg}");
            ExitCode::from(1)
        }
        Err(Failure::Input(e)) => {
            eprintln!("error: {e}");
            ExitCode::from(2)
        }
    }
}
