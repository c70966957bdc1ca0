mod commands;
mod input;

use std::path::PathBuf;
use std::process::ExitCode;

use clap::{Args, Parser, Subcommand, ValueEnum};

/// Vertex-frequency analysis on graphs.
///
/// Graphs are read from an edge list (first line `N`, then `u v` per line) or
/// JSON (`{"n": N, "edges": [[u, v], ...]}`), chosen by file extension
/// unless `--input-format` is given; `-` reads stdin. Reports are JSON with
/// sorted keys and numbers printed to 12 decimal places.
#[derive(Parser, Debug)]
#[command(name = "vertexfreq", version)]
struct Cli {
    #[command(subcommand)]
    command: Command,
}

#[derive(Subcommand, Debug)]
enum Command {
    /// Generate a graph from a named family.
    Generate(GenerateArgs),
    /// Laplacian eigenvalues (and optionally eigenvectors).
    Spectrum(SpectrumArgs),
    /// Graph Fourier transform of a signal.
    Gft(GftArgs),
    /// Translate a signal to a vertex.
    Translate(TranslateArgs),
    /// Rank, null space and invertibility of translation operators.
    AnalyzeTranslation(AnalyzeArgs),
    /// Search for a semigroup law on the translations of an eigenbasis.
    Semigroup(SemigroupArgs),
    /// Fiedler vector, sign partition and partition checks.
    Fiedler(FiedlerArgs),
    /// Radius-1 balls inside the zero set of the Fiedler vector.
    ScanZeros(FiedlerArgs),
    /// Check the barren graph against its closed-form spectrum.
    VerifyBarren(BarrenArgs),
    /// Build an eigenvector of a larger graph from a JSON spec.
    Lift(LiftArgs),
    /// Zero-set ball scan over planar-by-construction graph families.
    HarnessPlanar(HarnessArgs),
}

#[derive(Args, Debug)]
struct GraphInput {
    /// Graph file, or `-` for stdin.
    graph: PathBuf,
    /// Override the format detected from the file extension.
    #[arg(long, value_enum)]
    input_format: Option<InputFormat>,
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, ValueEnum)]
enum InputFormat {
    Edgelist,
    Json,
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, ValueEnum)]
enum GraphFormat {
    Edgelist,
    Json,
    Dot,
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, ValueEnum)]
enum SignalFormat {
    Csv,
    Json,
}

#[derive(Args, Debug)]
struct GenerateArgs {
    /// path, cycle, complete, bipartite, star, ladder, grid, dmp, tree or barren.
    family: String,
    /// Family parameters, e.g. `ladder 3 3` or `barren 4`.
    params: Vec<usize>,
    /// Seed for `tree`.
    #[arg(long, default_value_t = 0)]
    seed: u64,
    #[arg(long, value_enum, default_value = "edgelist")]
    format: GraphFormat,
}

#[derive(Args, Debug)]
struct SpectrumArgs {
    #[command(flatten)]
    input: GraphInput,
    /// Include the eigenvector matrix (JSON only; columns are eigenvectors).
    #[arg(long)]
    vectors: bool,
    #[arg(long, value_enum, default_value = "json")]
    format: SignalFormat,
}

#[derive(Args, Debug)]
struct GftArgs {
    #[command(flatten)]
    input: GraphInput,
    /// Signal CSV: one value per line, `re,im` for complex entries.
    signal: PathBuf,
    /// Treat the signal as spectral coefficients and synthesize.
    #[arg(long)]
    inverse: bool,
    #[arg(long, value_enum, default_value = "csv")]
    format: SignalFormat,
}

#[derive(Args, Debug)]
struct TranslateArgs {
    #[command(flatten)]
    input: GraphInput,
    signal: PathBuf,
    #[arg(long)]
    vertex: usize,
    #[arg(long, value_enum, default_value = "csv")]
    format: SignalFormat,
}

#[derive(Args, Debug)]
struct AnalyzeArgs {
    #[command(flatten)]
    input: GraphInput,
    /// Vertex to analyze; all vertices when omitted.
    #[arg(long)]
    vertex: Option<usize>,
    /// Zero tolerance for `|φ_k(i)|`; default `1e-8·√N`.
    #[arg(long, value_parser = positive)]
    tol: Option<f64>,
    /// Also emit the explicit inverse; fails when not invertible.
    #[arg(long, requires = "vertex")]
    inverse: bool,
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, ValueEnum)]
enum BasisKind {
    /// Laplacian eigenbasis of the input graph.
    Laplacian,
    /// Fourier basis of the cycle of length `--n`.
    Dft,
    /// Sylvester–Hadamard basis of order `2^n`.
    Sylvester,
    /// Explicit matrix from `--matrix` (JSON rows; column k is vector k).
    Matrix,
}

#[derive(Args, Debug)]
struct SemigroupArgs {
    /// Graph file for `--basis laplacian`.
    graph: Option<PathBuf>,
    #[arg(long, value_enum)]
    input_format: Option<InputFormat>,
    #[arg(long, value_enum, default_value = "laplacian")]
    basis: BasisKind,
    #[arg(long)]
    n: Option<usize>,
    #[arg(long)]
    matrix: Option<PathBuf>,
    #[arg(long, value_parser = positive)]
    tol: Option<f64>,
}

#[derive(Args, Debug)]
struct FiedlerArgs {
    #[command(flatten)]
    input: GraphInput,
    /// Partition zero tolerance; default `1e-8·‖φ_1‖_∞`.
    #[arg(long, value_parser = positive)]
    tol: Option<f64>,
}

#[derive(Args, Debug)]
struct BarrenArgs {
    #[arg(long)]
    n: usize,
    /// Spectrum matching tolerance.
    #[arg(long, value_parser = positive, default_value_t = 1e-8)]
    tol: f64,
    /// Emit the full report as JSON instead of a summary.
    #[arg(long)]
    json: bool,
}

#[derive(Args, Debug)]
struct LiftArgs {
    /// JSON spec; see the README for the two accepted shapes.
    #[arg(long)]
    spec: PathBuf,
}

#[derive(Args, Debug)]
struct HarnessArgs {
    /// Family to sweep (path, cycle, tree, ladder, grid, barren); all when omitted.
    #[arg(long)]
    family: Vec<String>,
    /// Partition zero tolerance; default `1e-8·‖φ_1‖_∞`.
    #[arg(long, value_parser = positive)]
    tol: Option<f64>,
}

fn positive(s: &str) -> Result<f64, String> {
    match s.parse::<f64>() {
        Ok(x) if x > 0.0 && x.is_finite() => Ok(x),
        Ok(_) => Err("tolerance must be positive and finite".into()),
        Err(e) => Err(e.to_string()),
    }
}

/// Failure kinds, mapped to exit codes 2 and 1.
#[derive(Debug)]
enum Failure {
    Usage(String),
    Domain(String),
}

impl From<vertexfreq::Error> for Failure {
    fn from(e: vertexfreq::Error) -> Self {
        Failure::Domain(e.to_string())
    }
}

fn configure_threads() -> Result<(), Failure> {
    let Ok(raw) = std::env::var("VERTEXFREQ_THREADS") else {
        return Ok(());
    };
    let threads: usize = raw
        .trim()
        .parse()
        .ok()
        .filter(|&t| t > 0)
        .ok_or_else(|| Failure::Usage(format!("VERTEXFREQ_THREADS must be a positive integer, got '{raw}'")))?;
    rayon::ThreadPoolBuilder::new()
        .num_threads(threads)
        .build_global()
        .map_err(|e| Failure::Domain(e.to_string()))
}

fn main() -> ExitCode {
    let cli = Cli::parse();
    let result = configure_threads().and_then(|()| commands::run(cli.command));
    match result {
        Ok(out) => {
            print!("{}", out.stdout);
            ExitCode::from(out.code)
        }
        Err(Failure::Usage(msg)) => {
            eprintln!("error: {msg}");
            ExitCode::from(2)
        }
        Err(Failure::Domain(msg)) => {
            eprintln!("error: {msg}");
            ExitCode::from(1)
        }
    }
}
