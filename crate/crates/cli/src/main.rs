use std::env;
use std::fs;
use std::io::{self, BufWriter, Write};
use std::path::{Path, PathBuf};
use std::process::ExitCode;

use clap::{Args, Parser, Subcommand};
use rootstem::config::RunConfig;
use rootstem::cooccurrence::{ContextMatrix, MeasureKind};
use rootstem::corpus::{load_corpus, CorpusFormat, StopwordList};
use rootstem::disambiguation::{ContextMode, Disambiguator};
use rootstem::error::Error;
use rootstem::evaluation::load_gold_rows;
use rootstem::morphology::Resources;
use rootstem::pipeline;

const RESOURCES_ENV: &str = "CBAS_RESOURCES";

/// Context-based Arabic root extraction.
///
/// Settings come from built-in defaults, then the --config file, then flags.
#[derive(Debug, Parser)]
#[command(name = "rootstem", version)]
struct Cli {
    /// key = value file (window, measure, alpha, context, resources, stopwords, matrix)
    #[arg(long, global = true, value_name = "PATH")]
    config: Option<PathBuf>,

    /// Worker threads [default: all cores]
    #[arg(long, global = true, value_name = "N")]
    threads: Option<usize>,

    #[command(subcommand)]
    command: Command,
}

#[derive(Debug, Subcommand)]
enum Command {
    /// Count word co-occurrences in a corpus and save the matrix
    BuildMatrix(BuildArgs),
    /// Extract the root of every word in a text, one JSON record per token
    Stem(StemArgs),
    /// Stem a gold file and print accuracy, classification and clustering metrics
    Evaluate(EvaluateArgs),
}

#[derive(Debug, Args)]
struct BuildArgs {
    /// Directory with one document per file, or a file with one document per line
    #[arg(long, value_name = "PATH")]
    corpus: PathBuf,
    /// Window size n; words closer than n positions co-occur [default: 3]
    #[arg(long, value_name = "N")]
    window: Option<usize>,
    /// Stopword list [default: bundled list]
    #[arg(long, value_name = "PATH")]
    stopwords: Option<PathBuf>,
    /// Output matrix file [default: `matrix` from --config]
    #[arg(long, value_name = "PATH")]
    out: Option<PathBuf>,
}

#[derive(Debug, Args)]
struct ScoringArgs {
    /// Matrix file written by build-matrix [default: `matrix` from --config]
    #[arg(long, value_name = "PATH")]
    matrix: Option<PathBuf>,
    /// Directory holding prefixes.txt, suffixes.txt, patterns.txt, roots.txt [default: $CBAS_RESOURCES]
    #[arg(long, value_name = "DIR")]
    resources: Option<PathBuf>,
    /// Stopword list [default: bundled list]
    #[arg(long, value_name = "PATH")]
    stopwords: Option<PathBuf>,
    /// Association measure: pmi, ppmi or spmi [default: spmi]
    #[arg(long, value_name = "NAME")]
    measure: Option<MeasureKind>,
    /// Smoothing exponent for spmi, in (0, 1] [default: 0.75]
    #[arg(long, value_name = "F")]
    alpha: Option<f64>,
    /// Context scored against: previous (word) or window [default: previous]
    #[arg(long, value_name = "MODE")]
    context: Option<ContextMode>,
}

#[derive(Debug, Args)]
#[command(group = clap::ArgGroup::new("input").required(true))]
struct StemArgs {
    #[command(flatten)]
    scoring: ScoringArgs,
    /// Text to stem
    #[arg(long, value_name = "STR", group = "input")]
    text: Option<String>,
    /// File to stem
    #[arg(long, value_name = "PATH", group = "input")]
    file: Option<PathBuf>,
}

#[derive(Debug, Args)]
struct EvaluateArgs {
    #[command(flatten)]
    scoring: ScoringArgs,
    /// Gold file: word<TAB>root per line, root may be empty
    #[arg(long, value_name = "PATH")]
    gold: PathBuf,
}

enum Failure {
    Usage(String),
    Run(Error),
}

impl From<Error> for Failure {
    fn from(e: Error) -> Self {
        Failure::Run(e)
    }
}

fn io_failure(path: &Path, e: io::Error) -> Failure {
    Failure::Run(Error::Io {
        path: path.to_path_buf(),
        source: e,
    })
}

fn stdout_failure(e: io::Error) -> Failure {
    io_failure(Path::new("<stdout>"), e)
}

fn main() -> ExitCode {
    let cli = match Cli::try_parse() {
        Ok(cli) => cli,
        Err(e) => {
            let _ = e.print();
            return if e.use_stderr() { ExitCode::from(1) } else { ExitCode::SUCCESS };
        }
    };
    match run(cli) {
        Ok(()) => ExitCode::SUCCESS,
        Err(Failure::Usage(message)) => {
            eprintln!("error: {message}");
            ExitCode::from(1)
        }
        Err(Failure::Run(e)) => {
            eprintln!("error: {e}");
            ExitCode::from(2)
        }
    }
}

fn run(cli: Cli) -> Result<(), Failure> {
    if let Some(threads) = cli.threads {
        if threads == 0 {
            return Err(Failure::Usage("--threads must be at least 1".into()));
        }
        rayon::ThreadPoolBuilder::new()
            .num_threads(threads)
            .build_global()
            .map_err(|e| Failure::Usage(e.to_string()))?;
    }
    let config = match &cli.config {
        Some(path) => RunConfig::load(path)?,
        None => RunConfig::default(),
    };
    match cli.command {
        Command::BuildMatrix(args) => build_matrix(config, args),
        Command::Stem(args) => stem(config, args),
        Command::Evaluate(args) => evaluate(config, args),
    }
}

fn stopwords(path: Option<&Path>) -> Result<StopwordList, Failure> {
    match path {
        Some(p) => Ok(StopwordList::load(p)?),
        None => Ok(StopwordList::bundled()),
    }
}

fn build_matrix(mut config: RunConfig, args: BuildArgs) -> Result<(), Failure> {
    if let Some(n) = args.window {
        config.window_n = n;
    }
    if config.window_n < 2 {
        return Err(Failure::Usage(Error::InvalidWindow(config.window_n).to_string()));
    }
    if args.stopwords.is_some() {
        config.stopword_path = args.stopwords;
    }
    let out = args
        .out
        .or(config.matrix_path.clone())
        .ok_or_else(|| Failure::Usage("no output path; pass --out".into()))?;

    let stopwords = stopwords(config.stopword_path.as_deref())?;
    let documents = load_corpus(&args.corpus, CorpusFormat::detect(&args.corpus))?;
    let (matrix, summary) = pipeline::build(&documents, &stopwords, config.window_n)?;
    matrix.save_to(&out)?;
    pipeline::write_build_summary(&summary, io::stdout().lock()).map_err(stdout_failure)
}

/// Flags over config, checked before anything is loaded.
fn merge_scoring(config: &mut RunConfig, args: &ScoringArgs) -> Result<(PathBuf, PathBuf), Failure> {
    if let Some(m) = args.measure {
        config.measure = m;
    }
    if let Some(a) = args.alpha {
        config.alpha = a;
    }
    if let Some(c) = args.context {
        config.context_mode = c;
    }
    if let Some(s) = &args.stopwords {
        config.stopword_path = Some(s.clone());
    }
    config
        .association_measure()
        .map_err(|e| Failure::Usage(e.to_string()))?;
    let matrix = args
        .matrix
        .clone()
        .or(config.matrix_path.clone())
        .ok_or_else(|| Failure::Usage("no matrix; pass --matrix".into()))?;
    let resources = args
        .resources
        .clone()
        .or(config.resource_dir.clone())
        .or_else(|| env::var_os(RESOURCES_ENV).map(PathBuf::from))
        .ok_or_else(|| Failure::Usage(format!("no resource directory; pass --resources or set {RESOURCES_ENV}")))?;
    Ok((matrix, resources))
}

struct Loaded {
    resources: Resources,
    matrix: ContextMatrix,
    stopwords: StopwordList,
}

fn load(config: &RunConfig, matrix_path: &Path, resource_dir: &Path) -> Result<Loaded, Failure> {
    Ok(Loaded {
        resources: Resources::load(resource_dir)?,
        matrix: ContextMatrix::load_from(matrix_path)?,
        stopwords: stopwords(config.stopword_path.as_deref())?,
    })
}

fn stem(mut config: RunConfig, args: StemArgs) -> Result<(), Failure> {
    let (matrix_path, resource_dir) = merge_scoring(&mut config, &args.scoring)?;
    let text = match (&args.text, &args.file) {
        (Some(t), _) => t.clone(),
        (None, Some(f)) => fs::read_to_string(f).map_err(|e| io_failure(f, e))?,
        (None, None) => unreachable!("clap requires one input"),
    };
    let loaded = load(&config, &matrix_path, &resource_dir)?;
    let disambiguator = Disambiguator::new(
        &loaded.resources,
        &loaded.matrix,
        config.association_measure()?,
        config.context_mode,
    )?;
    let records = pipeline::stem_text(&disambiguator, &text, &loaded.stopwords);
    let mut out = BufWriter::new(io::stdout().lock());
    pipeline::write_records(&records, &mut out).map_err(stdout_failure)?;
    out.flush().map_err(stdout_failure)
}

fn evaluate(mut config: RunConfig, args: EvaluateArgs) -> Result<(), Failure> {
    let (matrix_path, resource_dir) = merge_scoring(&mut config, &args.scoring)?;
    let rows = load_gold_rows(&args.gold)?;
    let loaded = load(&config, &matrix_path, &resource_dir)?;
    let disambiguator = Disambiguator::new(
        &loaded.resources,
        &loaded.matrix,
        config.association_measure()?,
        config.context_mode,
    )?;
    let report = pipeline::evaluate(&disambiguator, &rows, &loaded.stopwords)?;
    let mut out = BufWriter::new(io::stdout().lock());
    pipeline::write_report(&report, &mut out).map_err(stdout_failure)?;
    out.flush().map_err(stdout_failure)
}
