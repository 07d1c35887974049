use std::fs;
use std::io::{self, Read, Write};
use std::path::{Path, PathBuf};

use anyhow::{bail, Context, Result};
use clap::{Args, Parser, Subcommand, ValueEnum};
use rayon::prelude::*;

use noncrossing::enumerate::{enumerate_dyck, enumerate_ncp, enumerate_pair};
use noncrossing::experiment::{convergence, sample_one, uniformity, Sampler};
use noncrossing::growth::{grow_path, GrowthRng, GrowthTrajectory, Model};
use noncrossing::lamination::{lamination_of, DEFAULT_DELTA};
use noncrossing::svg::{render_layers, Layer, SvgOptions};
use noncrossing::{decode, decode_pair, encode, encode_pair, DyckPath, NoncrossingPartition};

/// Noncrossing partitions, their Dyck-path codes and random growth.
#[derive(Parser)]
#[command(name = "noncrossing", version)]
struct Cli {
    #[command(subcommand)]
    command: Command,
}

#[derive(Subcommand)]
enum Command {
    /// Draw uniform partitions, one line per object.
    Sample(SampleArgs),
    /// Run a growth chain; write its trajectory and print the final partition.
    Grow(GrowArgs),
    /// Rebuild partitions from a trajectory file.
    Replay(ReplayArgs),
    /// Partition lines to U/D path lines.
    Encode(CodecArgs),
    /// U/D path lines to partition lines.
    Decode(CodecArgs),
    /// Kreweras complement of every partition line.
    Kreweras(Io),
    /// Draw one partition as an SVG lamination.
    Render(RenderArgs),
    /// Hausdorff distances from intermediate sizes to the final one.
    Converge(ConvergeArgs),
    /// Chi-square test of a sampler against the uniform law.
    Uniformity(UniformityArgs),
    /// All objects of a given size, in canonical order.
    Enumerate(EnumerateArgs),
}

#[derive(Clone, Copy, ValueEnum)]
enum ModelArg {
    Ncp,
    Pair,
}

impl From<ModelArg> for Model {
    fn from(m: ModelArg) -> Model {
        match m {
            ModelArg::Ncp => Model::Ncp,
            ModelArg::Pair => Model::Pair,
        }
    }
}

#[derive(Clone, Copy, ValueEnum)]
enum Algorithm {
    Marchal,
    Direct,
}

impl From<Algorithm> for Sampler {
    fn from(a: Algorithm) -> Sampler {
        match a {
            Algorithm::Marchal => Sampler::Marchal,
            Algorithm::Direct => Sampler::Direct,
        }
    }
}

#[derive(Clone, Copy, ValueEnum)]
enum Kind {
    Ncp,
    Pair,
    Dyck,
}

#[derive(Args)]
struct Io {
    /// Input file; standard input when absent.
    #[arg(long = "in")]
    input: Option<PathBuf>,
    /// Output file; standard output when absent.
    #[arg(long)]
    out: Option<PathBuf>,
}

#[derive(Args)]
struct SampleArgs {
    #[arg(long, value_enum)]
    model: ModelArg,
    /// Vertex count for ncp, number of pairs for pair.
    #[arg(long)]
    n: usize,
    #[arg(long)]
    seed: u64,
    #[arg(long, default_value_t = 1)]
    count: u64,
    #[arg(long, value_enum, default_value = "marchal")]
    algorithm: Algorithm,
    #[arg(long)]
    out: Option<PathBuf>,
    /// Also render the first sample.
    #[arg(long)]
    svg: Option<PathBuf>,
}

#[derive(Args)]
struct GrowArgs {
    #[arg(long, value_enum)]
    model: ModelArg,
    #[arg(long)]
    n: usize,
    #[arg(long)]
    seed: u64,
    /// Trajectory file.
    #[arg(long)]
    out: PathBuf,
}

#[derive(Args)]
struct ReplayArgs {
    #[command(flatten)]
    io: Io,
    /// Print every intermediate partition, not only the last.
    #[arg(long)]
    all: bool,
}

#[derive(Args)]
struct CodecArgs {
    #[arg(long, value_enum, default_value = "ncp")]
    model: ModelArg,
    #[command(flatten)]
    io: Io,
}

#[derive(Args)]
struct RenderArgs {
    #[arg(long = "in")]
    input: PathBuf,
    #[arg(long)]
    out: PathBuf,
    #[arg(long, default_value_t = 800)]
    size: u32,
    /// Draw the complement on top.
    #[arg(long)]
    overlay_kreweras: bool,
}

#[derive(Args)]
struct ConvergeArgs {
    #[arg(long, value_enum)]
    model: ModelArg,
    /// First seed; trajectories use consecutive seeds.
    #[arg(long)]
    seed: u64,
    #[arg(long, default_value_t = 20)]
    runs: u64,
    /// Comma-separated intermediate sizes.
    #[arg(long, value_delimiter = ',', default_value = "16,64,256,1024")]
    sizes: Vec<usize>,
    #[arg(long, default_value_t = 4096)]
    target: usize,
    #[arg(long, default_value_t = DEFAULT_DELTA)]
    delta: f64,
}

#[derive(Args)]
struct UniformityArgs {
    #[arg(long, value_enum)]
    model: ModelArg,
    #[arg(long)]
    n: usize,
    #[arg(long)]
    seed: u64,
    #[arg(long, default_value_t = 100_000)]
    runs: u64,
    #[arg(long, value_enum, default_value = "marchal")]
    algorithm: Algorithm,
}

#[derive(Args)]
struct EnumerateArgs {
    #[arg(long, value_enum)]
    kind: Kind,
    /// Vertex count for ncp, number of pairs for pair, semilength for dyck.
    #[arg(long)]
    n: usize,
    #[arg(long)]
    out: Option<PathBuf>,
}

fn read_input(path: Option<&Path>) -> Result<String> {
    match path {
        Some(p) => fs::read_to_string(p).with_context(|| format!("reading {}", p.display())),
        None => {
            let mut s = String::new();
            io::stdin().read_to_string(&mut s).context("reading standard input")?;
            Ok(s)
        }
    }
}

fn write_output(path: Option<&Path>, text: &str) -> Result<()> {
    match path {
        Some(p) => fs::write(p, text).with_context(|| format!("writing {}", p.display())),
        None => io::stdout().lock().write_all(text.as_bytes()).context("writing standard output"),
    }
}

/// Applies `f` to every non-blank input line, one output line each.
fn map_lines(io: &Io, f: impl Fn(&str) -> Result<String>) -> Result<()> {
    let input = read_input(io.input.as_deref())?;
    let mut out = String::new();
    for (i, line) in input.lines().enumerate().filter(|(_, l)| !l.trim().is_empty()) {
        out.push_str(&f(line.trim()).with_context(|| format!("line {}", i + 1))?);
        out.push('\n');
    }
    write_output(io.out.as_deref(), &out)
}

fn lines<T: ToString>(items: impl IntoIterator<Item = T>) -> String {
    items.into_iter().map(|x| x.to_string() + "\n").collect()
}

fn svg_of(p: &NoncrossingPartition, size: u32, overlay: bool) -> String {
    let lp = lamination_of(p);
    let lk = lamination_of(&p.kreweras());
    let mut layers = vec![Layer { lamination: &lp, color: "#c0392b" }];
    if overlay {
        layers.push(Layer { lamination: &lk, color: "#2471a3" });
    }
    render_layers(&layers, &SvgOptions { size, ..SvgOptions::default() })
}

fn run(cli: Cli) -> Result<()> {
    match cli.command {
        Command::Sample(a) => {
            if a.n == 0 {
                bail!("--n must be at least 1");
            }
            let samples: Vec<NoncrossingPartition> = (0..a.count)
                .into_par_iter()
                .map(|stream| sample_one(a.model.into(), a.algorithm.into(), a.n, a.seed, stream))
                .collect();
            if let (Some(svg), Some(first)) = (&a.svg, samples.first()) {
                write_output(Some(svg), &svg_of(first, SvgOptions::default().size, false))?;
            }
            write_output(a.out.as_deref(), &lines(&samples))
        }
        Command::Grow(a) => {
            if a.n == 0 {
                bail!("--n must be at least 1");
            }
            let model: Model = a.model.into();
            let (path, trajectory) = grow_path(model, a.n, &mut GrowthRng::new(a.seed));
            write_output(Some(&a.out), &trajectory.to_string())?;
            write_output(None, &lines([model.decode(&path)]))
        }
        Command::Replay(a) => {
            let trajectory: GrowthTrajectory = read_input(a.io.input.as_deref())?.parse()?;
            let text = if a.all {
                lines(noncrossing::replay(&trajectory)?)
            } else {
                lines([trajectory.replay_final()?])
            };
            write_output(a.io.out.as_deref(), &text)
        }
        Command::Encode(a) => match a.model {
            ModelArg::Ncp => map_lines(&a.io, |l| Ok(encode(&l.parse()?).to_string())),
            ModelArg::Pair => map_lines(&a.io, |l| Ok(encode_pair(&l.parse()?)?.to_string())),
        },
        Command::Decode(a) => match a.model {
            ModelArg::Ncp => map_lines(&a.io, |l| Ok(decode(&l.parse::<DyckPath>()?).0.to_string())),
            ModelArg::Pair => map_lines(&a.io, |l| Ok(decode_pair(&l.parse::<DyckPath>()?).to_string())),
        },
        Command::Kreweras(io) => map_lines(&io, |l| Ok(l.parse::<NoncrossingPartition>()?.kreweras().to_string())),
        Command::Render(a) => {
            let text = read_input(Some(&a.input))?;
            let mut parts = text.lines().filter(|l| !l.trim().is_empty());
            let (Some(line), None) = (parts.next(), parts.next()) else {
                bail!("{} must hold exactly one partition line", a.input.display());
            };
            let p: NoncrossingPartition = line.trim().parse()?;
            write_output(Some(&a.out), &svg_of(&p, a.size, a.overlay_kreweras))
        }
        Command::Converge(a) => {
            if a.sizes.iter().any(|&m| m == 0 || m > a.target) {
                bail!("every size must lie in 1..={}", a.target);
            }
            if a.delta.is_nan() || a.delta <= 0.0 {
                bail!("--delta must be positive");
            }
            let seeds: Vec<u64> = (0..a.runs).map(|i| a.seed + i).collect();
            let report = convergence(a.model.into(), &seeds, &a.sizes, a.target, a.delta)?;
            let mut out = String::new();
            for run in &report.runs {
                for (m, d) in report.sizes.iter().zip(&run.distances) {
                    out += &format!("seed={} m={m} M={} d_H={d} delta={}\n", run.seed, report.target, report.delta);
                }
            }
            for (m, d) in report.sizes.iter().zip(report.medians()) {
                out += &format!("median m={m} M={} d_H={d} delta={}\n", report.target, report.delta);
            }
            write_output(None, &out)
        }
        Command::Uniformity(a) => {
            let report = uniformity(a.model.into(), a.algorithm.into(), a.n, a.runs, a.seed)?;
            write_output(
                None,
                &format!(
                    "categories={} runs={} chi2={} critical={} pass={}\n",
                    report.categories,
                    report.runs,
                    report.statistic,
                    report.critical,
                    report.passes()
                ),
            )
        }
        Command::Enumerate(a) => {
            let text = match a.kind {
                Kind::Ncp => lines(&enumerate_ncp(a.n)?),
                Kind::Pair => lines(&enumerate_pair(2 * a.n)?),
                Kind::Dyck => lines(&enumerate_dyck(2 * a.n)?),
            };
            write_output(a.out.as_deref(), &text)
        }
    }
}

fn main() -> std::process::ExitCode {
    let cli = Cli::parse();
    match run(cli) {
        Ok(()) => std::process::ExitCode::SUCCESS,
        Err(e) => {
            eprintln!("error: {e:#}");
            std::process::ExitCode::FAILURE
        }
    }
}
