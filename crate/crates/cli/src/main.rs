//! `epalg`: root listings, Magic Star charts, Clifford reports, EP Jacobi
//! reports and T-algebra evaluations, all as JSON on standard output.

use std::path::{Path, PathBuf};
use std::process::ExitCode;

use clap::{Parser, Subcommand, ValueEnum};
use serde::Serialize;
use serde_json::json;

use epalg::clifford::{all_conjugations, build_rep, summary, Signature};
use epalg::ep::{ep_report, JacobiStatus, Level, Polarization};
use epalg::roots::{generate_roots, AlgebraLabel};
use epalg::star::{emit_chart, find_a2, ChartFormat};
use epalg::talg::{TElement, TSpace};

#[derive(Parser)]
#[command(name = "epalg", version, about = "Exact exceptional-algebra toolkit")]
struct Cli {
    #[command(subcommand)]
    command: Command,
}

#[derive(Subcommand)]
enum Command {
    /// List the roots of a simple Lie algebra (A2, G2, F4, E6, E7, E8, ...).
    Roots {
        label: String,
        /// Print only the number of roots.
        #[arg(long)]
        count: bool,
    },
    /// Magic Star bucket counts for a root system.
    Star {
        label: String,
        #[arg(long, value_name = "PATH")]
        svg: Option<PathBuf>,
        #[arg(long, value_name = "PATH")]
        csv: Option<PathBuf>,
    },
    /// Summary of the real Clifford representation of signature (p, q).
    Clifford {
        p: usize,
        q: usize,
        /// Re-verify every defining relation; exit 2 on failure.
        #[arg(long)]
        check: bool,
        /// Write the gamma matrices as `mu,row,col,sign` triplets.
        #[arg(long, value_name = "PATH")]
        emit: Option<PathBuf>,
    },
    /// Calibration and Jacobi report for one level of the series.
    Ep {
        #[arg(long, value_enum)]
        level: LevelArg,
        #[arg(long)]
        n: usize,
        #[arg(long, default_value_t = 50)]
        samples: usize,
        #[arg(long, default_value_t = 7)]
        seed: u64,
        #[arg(long, value_enum, default_value_t = PolarizationArg::Unprimed)]
        polarization: PolarizationArg,
    },
    /// Evaluate a T-algebra element read from a JSON file.
    Talg {
        #[arg(long)]
        q: usize,
        #[arg(long)]
        n: usize,
        #[arg(value_enum)]
        op: TalgOp,
        #[arg(long, value_name = "FILE")]
        input: PathBuf,
    },
}

#[derive(Clone, Copy, ValueEnum)]
enum LevelArg {
    Der,
    Str0,
    Conf,
    Qconf,
}

impl From<LevelArg> for Level {
    fn from(l: LevelArg) -> Level {
        match l {
            LevelArg::Der => Level::Der,
            LevelArg::Str0 => Level::Str0,
            LevelArg::Conf => Level::Conf,
            LevelArg::Qconf => Level::Qconf,
        }
    }
}

#[derive(Clone, Copy, ValueEnum)]
enum PolarizationArg {
    Unprimed,
    Primed,
}

#[derive(Clone, Copy, ValueEnum)]
enum TalgOp {
    Norm,
    Rank,
    Entropy,
    Grad,
}

enum Failure {
    Usage(String),
    Mismatch(String),
    Io(String),
}

impl From<epalg::Error> for Failure {
    fn from(e: epalg::Error) -> Failure {
        Failure::Usage(e.to_string())
    }
}

type Outcome = Result<(), Failure>;

fn print_json<T: Serialize>(v: &T) {
    println!("{}", serde_json::to_string(v).expect("serializable"));
}

fn write_file(path: &Path, contents: &str) -> Outcome {
    std::fs::write(path, contents).map_err(|e| Failure::Io(format!("{}: {e}", path.display())))
}

fn label(s: &str) -> Result<AlgebraLabel, Failure> {
    Ok(s.parse::<AlgebraLabel>()?)
}

fn roots(name: &str, count: bool) -> Outcome {
    let rs = generate_roots(label(name)?);
    if count {
        println!("{}", rs.roots().len());
    } else {
        print_json(&json!({ "label": rs.label().to_string(), "count": rs.roots().len(), "roots": rs.roots() }));
    }
    Ok(())
}

fn star(name: &str, svg: Option<&Path>, csv: Option<&Path>) -> Outcome {
    let search = find_a2(&generate_roots(label(name)?))?;
    let chart = &search.chart;
    if let Some(p) = svg {
        write_file(p, &emit_chart(chart, ChartFormat::Svg))?;
    }
    if let Some(p) = csv {
        write_file(p, &emit_chart(chart, ChartFormat::Csv))?;
    }
    let c = chart.counts();
    print_json(&json!({ "center": c.center, "hexagon": c.hexagon, "tips": c.tips }));
    Ok(())
}

fn clifford(p: usize, q: usize, check: bool, emit: Option<&Path>) -> Outcome {
    let rep = build_rep(Signature::new(p, q)?)?;
    if check {
        rep.verify().map_err(|e| Failure::Mismatch(e.to_string()))?;
        if let Some(f) = all_conjugations(&rep).iter().find(|f| !f.check(&rep)) {
            return Err(Failure::Mismatch(format!("conjugation with transpose sign {} fails", f.transpose_sign)));
        }
    }
    if let Some(path) = emit {
        write_file(path, &rep.triplets())?;
    }
    print_json(&summary(&rep));
    Ok(())
}

fn ep(level: Level, n: usize, samples: usize, seed: u64, pol: PolarizationArg) -> Outcome {
    let pol = match pol {
        PolarizationArg::Unprimed => Polarization::Unprimed,
        PolarizationArg::Primed => Polarization::Primed,
    };
    let report = ep_report(level, n, samples, seed, pol)?;
    print_json(&report);
    let expected = if n == 0 { JacobiStatus::Holds } else { JacobiStatus::Violated };
    if report.jacobi_status != expected {
        return Err(Failure::Mismatch(format!("{level} at n = {n}: {:?}", report.jacobi_status)));
    }
    Ok(())
}

#[derive(Serialize)]
struct TalgOutput {
    #[serde(rename = "N")]
    norm: String,
    rank: u8,
    entropy: f64,
    #[serde(skip_serializing_if = "Option::is_none")]
    gradient: Option<Vec<String>>,
}

fn talg(q: usize, n: usize, op: TalgOp, input: &Path) -> Outcome {
    let text = std::fs::read_to_string(input).map_err(|e| Failure::Io(format!("{}: {e}", input.display())))?;
    let t: TElement = serde_json::from_str(&text).map_err(|e| Failure::Usage(format!("{}: {e}", input.display())))?;
    if (t.q, t.n) != (q, n) {
        return Err(Failure::Usage(format!("element is for q = {}, n = {}", t.q, t.n)));
    }
    let space = TSpace::standard(q, n)?;
    let gradient = match op {
        TalgOp::Grad => Some(space.norm_gradient(&t)?.iter().map(ToString::to_string).collect()),
        _ => None,
    };
    print_json(&TalgOutput {
        norm: space.cubic_norm(&t)?.to_string(),
        rank: space.rank(&t)?,
        entropy: space.entropy(&t)?.value,
        gradient,
    });
    Ok(())
}

fn run(cli: Cli) -> Outcome {
    match cli.command {
        Command::Roots { label, count } => roots(&label, count),
        Command::Star { label, svg, csv } => star(&label, svg.as_deref(), csv.as_deref()),
        Command::Clifford { p, q, check, emit } => clifford(p, q, check, emit.as_deref()),
        Command::Ep { level, n, samples, seed, polarization } => ep(level.into(), n, samples, seed, polarization),
        Command::Talg { q, n, op, input } => talg(q, n, op, &input),
    }
}

fn main() -> ExitCode {
    let cli = match Cli::try_parse() {
        Ok(c) => c,
        Err(e) => {
            let _ = e.print();
            return if e.use_stderr() { ExitCode::from(1) } else { ExitCode::SUCCESS };
        }
    };
    match run(cli) {
        Ok(()) => ExitCode::SUCCESS,
        Err(Failure::Usage(m)) => {
            eprintln!("error: {m}");
            ExitCode::from(1)
        }
        Err(Failure::Mismatch(m)) => {
            eprintln!("claim mismatch: {m}");
            ExitCode::from(2)
        }
        Err(Failure::Io(m)) => {
            eprintln!("i/o error: {m}");
            ExitCode::from(3)
        }
    }
}
