//! The `gwgr` command line.
//!
//! Exit codes: 0 success, 1 usage error, 2 a query outside the domain of the
//! requested computation, 3 a numerical or cross-check failure.

mod output;

use std::ffi::OsString;
use std::io::Write;

use clap::error::ErrorKind;
use clap::{Parser, Subcommand, ValueEnum};
use serde::Serialize;

pub use output::{OutputRecord, TableRow};

use crate::critical::enumerate_critical_points;
use crate::error::Error;
use crate::invariants::{invariant, run_pipeline, InvariantQuery, Pipeline};
use crate::numerics::PRECISION_BUDGET_KD;
use crate::sympoly::GrassmannianRing;
use crate::verify::{self, Bounds, Suite};

pub const DEFAULT_TOL: f64 = 1e-9;
pub const TOL_ENV: &str = "GWGR_TOL";

#[derive(Debug, Parser)]
#[command(name = "gwgr", version, about = "Gromov invariants of maps from Riemann surfaces to Grassmannians")]
struct Cli {
    #[command(subcommand)]
    command: Command,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, ValueEnum)]
enum Format {
    Text,
    Json,
    Csv,
}

#[derive(Debug, Subcommand)]
enum Command {
    /// Compute <X1^s1 ... Xr^sr> by every applicable pipeline and compare.
    Invariant {
        #[arg(long)]
        genus: u32,
        #[arg(long)]
        degree: u32,
        #[arg(long = "r")]
        r: u32,
        #[arg(long = "k")]
        k: u32,
        /// Comma-separated exponents s1,...,sr.
        #[arg(long, value_delimiter = ',', required = true)]
        exponents: Vec<u32>,
        /// vi, oracle, closed, flip, projective or all; comma-separated.
        #[arg(long, value_delimiter = ',', default_value = "all")]
        pipeline: Vec<String>,
        #[arg(long, value_enum, default_value_t = Format::Text)]
        format: Format,
        #[arg(long)]
        tol: Option<f64>,
    },
    /// Tabulate <X1^(kd-2n) X2^n> on G(2,k) for every n.
    Table {
        #[arg(long, default_value_t = 1)]
        genus: u32,
        #[arg(long = "r", default_value_t = 2)]
        r: u32,
        #[arg(long = "k")]
        k: u32,
        #[arg(long)]
        degree: u32,
        #[arg(long, value_enum, default_value_t = Format::Text)]
        format: Format,
        #[arg(long)]
        tol: Option<f64>,
    },
    /// Print the potential W, the ideal generators and the Hessian class.
    Ring {
        #[arg(long = "r")]
        r: u32,
        #[arg(long = "k")]
        k: u32,
    },
    /// List the critical points of W1.
    Critical {
        #[arg(long = "r")]
        r: u32,
        #[arg(long = "k")]
        k: u32,
        #[arg(long, value_enum, default_value_t = Format::Text)]
        format: Format,
    },
    /// Run the built-in consistency checks.
    Verify {
        #[arg(long, value_enum, default_value_t = Suite::All)]
        suite: Suite,
        #[arg(long)]
        max_k: Option<u32>,
        #[arg(long)]
        max_d: Option<u32>,
        #[arg(long)]
        tol: Option<f64>,
    },
}

enum Failure {
    Usage(String),
    Domain(Error),
    /// Output was written; report `msg` and exit with `code`.
    Exit { code: i32, msg: Option<String> },
}

impl From<Error> for Failure {
    fn from(e: Error) -> Self {
        Failure::Domain(e)
    }
}

impl From<std::io::Error> for Failure {
    fn from(e: std::io::Error) -> Self {
        Failure::Usage(format!("write failed: {e}"))
    }
}

pub fn exit_code(e: &Error) -> i32 {
    match e {
        Error::DimensionMismatch { .. }
        | Error::ExponentLength { .. }
        | Error::IndexOutOfRange { .. }
        | Error::PipelineNotApplicable { .. }
        | Error::InvalidGrassmannian { .. }
        | Error::PrecisionBudgetExceeded { .. } => 2,
        Error::CrossCheckMismatch { .. } | Error::NonIntegerResult { .. } | Error::ValidationFailure { .. } => 3,
        _ => 1,
    }
}

/// Parses `args` (including the program name), runs the command and returns the exit code.
pub fn run<I, T>(args: I, out: &mut dyn Write, err: &mut dyn Write) -> i32
where
    I: IntoIterator<Item = T>,
    T: Into<OsString> + Clone,
{
    let cli = match Cli::try_parse_from(args) {
        Ok(cli) => cli,
        Err(e) => {
            let text = e.render().to_string();
            return match e.kind() {
                ErrorKind::DisplayHelp | ErrorKind::DisplayVersion => {
                    let _ = write!(out, "{text}");
                    0
                }
                _ => {
                    let _ = write!(err, "{text}");
                    1
                }
            };
        }
    };
    match dispatch(cli.command, out) {
        Ok(()) => 0,
        Err(Failure::Exit { code, msg }) => {
            if let Some(msg) = msg {
                let _ = writeln!(err, "error: {msg}");
            }
            code
        }
        Err(Failure::Usage(msg)) => {
            let _ = writeln!(err, "error: {msg}");
            1
        }
        Err(Failure::Domain(e)) => {
            let _ = writeln!(err, "error: {e}");
            exit_code(&e)
        }
    }
}

fn tolerance(flag: Option<f64>) -> Result<f64, Failure> {
    let tol = match flag {
        Some(t) => t,
        None => match std::env::var(TOL_ENV) {
            Ok(v) => v.trim().parse().map_err(|_| Failure::Usage(format!("{TOL_ENV}={v} is not a number")))?,
            Err(_) => DEFAULT_TOL,
        },
    };
    if !(tol.is_finite() && tol > 0.0) {
        return Err(Failure::Usage(format!("tolerance must be positive, got {tol}")));
    }
    Ok(tol)
}

fn parse_pipelines(names: &[String]) -> Result<Option<Vec<Pipeline>>, Failure> {
    if names.iter().any(|n| n == "all") {
        if names.len() > 1 {
            return Err(Failure::Usage("'all' cannot be combined with other pipelines".into()));
        }
        return Ok(None);
    }
    let mut list = Vec::new();
    for n in names {
        let p: Pipeline = n.parse().map_err(Failure::Usage)?;
        if !list.contains(&p) {
            list.push(p);
        }
    }
    Ok(Some(list))
}

fn json<T: Serialize>(v: &T) -> String {
    serde_json::to_string_pretty(v).expect("records serialize") + "\n"
}

fn dispatch(cmd: Command, out: &mut dyn Write) -> Result<(), Failure> {
    match cmd {
        Command::Invariant { genus, degree, r, k, exponents, pipeline, format, tol } => {
            let tol = tolerance(tol)?;
            let pipelines = parse_pipelines(&pipeline)?;
            let query = InvariantQuery::new(genus, degree, r, k, exponents)?;
            let results = invariant(&query, pipelines.as_deref(), tol)?;
            let rec = OutputRecord::new(query, results);
            let text = match format {
                Format::Text => output::render_text(&rec, tol, PRECISION_BUDGET_KD),
                Format::Json => json(&rec),
                Format::Csv => output::render_csv(&rec),
            };
            out.write_all(text.as_bytes())?;
        }
        Command::Table { genus, r, k, degree, format, tol } => {
            let tol = tolerance(tol)?;
            let rows = table(genus, r, k, degree, tol)?;
            let text = match format {
                Format::Text => output::render_table_text(&rows, k, degree),
                Format::Json => json(&rows),
                Format::Csv => output::render_table_csv(&rows),
            };
            out.write_all(text.as_bytes())?;
            if let Some(bad) = rows.iter().find(|row| !row.record.agree) {
                let vals: Vec<String> =
                    bad.record.results.iter().map(|r| format!("{}={}", r.pipeline, r.value)).collect();
                let msg = format!("pipelines disagree at n = {}: {}", bad.n, vals.join(" "));
                return Err(Failure::Exit { code: 3, msg: Some(msg) });
            }
        }
        Command::Ring { r, k } => {
            let ring = GrassmannianRing::new(r, k)?;
            writeln!(out, "W = {}", ring.potential)?;
            for (i, y) in ring.ideal_generators().iter().enumerate() {
                writeln!(out, "Y{} = {}", k - r + 1 + i as u32, y)?;
            }
            writeln!(out, "h = {}", ring.hessian)?;
        }
        Command::Critical { r, k, format } => {
            let points = enumerate_critical_points(r, k)?;
            match format {
                Format::Json => {
                    #[derive(Serialize)]
                    struct Point {
                        angles: Vec<String>,
                        z: Vec<[f64; 2]>,
                    }
                    let list: Vec<Point> = points
                        .iter()
                        .map(|p| Point { angles: p.angles(), z: p.z.iter().map(|z| [z.re, z.im]).collect() })
                        .collect();
                    out.write_all(json(&list).as_bytes())?;
                }
                Format::Csv => {
                    let zs: Vec<String> = (1..=r).flat_map(|i| [format!("re_z{i}"), format!("im_z{i}")]).collect();
                    writeln!(out, "index,angles,{}", zs.join(","))?;
                    for (i, p) in points.iter().enumerate() {
                        let z: Vec<String> = p.z.iter().flat_map(|z| [format!("{:e}", z.re), format!("{:e}", z.im)]).collect();
                        writeln!(out, "{},{},{}", i + 1, p.angles().join(" "), z.join(","))?;
                    }
                }
                Format::Text => {
                    writeln!(out, "G({r},{k}): {} critical points, roots q = exp(2 pi i a)", points.len())?;
                    for (i, p) in points.iter().enumerate() {
                        let z: Vec<String> = p.z.iter().enumerate().map(|(j, z)| format!("Z{} = {z}", j + 1)).collect();
                        writeln!(out, "{:>4}  a = [{}]  {}", i + 1, p.angles().join(", "), z.join("  "))?;
                    }
                }
            }
        }
        Command::Verify { suite, max_k, max_d, tol } => {
            let tol = tolerance(tol)?;
            let checks = verify::run(suite, Bounds { max_k, max_d }, tol);
            for c in &checks {
                let status = if c.pass { "PASS" } else { "FAIL" };
                writeln!(out, "{status} [{}] {}: {}", c.suite, c.name, c.detail)?;
                if !c.pass {
                    writeln!(out, "    reproduce: {}", c.repro)?;
                }
            }
            let (pass, fail) = verify::summarize(&checks);
            writeln!(out, "{pass} passed, {fail} failed")?;
            if fail > 0 {
                return Err(Failure::Exit { code: 3, msg: Some(format!("{fail} checks failed")) });
            }
        }
    }
    Ok(())
}

fn table(genus: u32, r: u32, k: u32, d: u32, tol: f64) -> Result<Vec<TableRow>, Error> {
    if genus != 1 || r != 2 {
        return Err(Error::PipelineNotApplicable {
            pipeline: Pipeline::Closed,
            reason: format!("tables are defined for genus 1 and r = 2, got genus {genus}, r = {r}"),
        });
    }
    crate::sympoly::check_grassmannian(2, k)?;
    let mut rows = Vec::new();
    for n in 0..=k * d / 2 {
        let query = InvariantQuery::rank_two(1, d, k, n)?;
        let results = output::TABLE_PIPELINES
            .iter()
            .filter(|p| !p.is_floating() || query.kd() <= PRECISION_BUDGET_KD)
            .map(|&p| run_pipeline(p, &query, tol))
            .collect::<Result<Vec<_>, _>>()?;
        rows.push(TableRow { n, m: k * d - 2 * n, record: OutputRecord::new(query, results) });
    }
    Ok(rows)
}
