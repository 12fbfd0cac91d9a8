use std::fs;
use std::io::{self, Read, Write};
use std::path::{Path, PathBuf};
use std::process::ExitCode;

use clap::{Args, Parser, Subcommand, ValueEnum};

use cip_core::export::{to_dot, to_graphml};
use cip_core::render::{self, OutputFormat, DISPLAY_DECIMALS};
use cip_core::{
    analyze, generate_ba, generate_er, parse_edge_list, parse_graphml, Analysis, AnalysisOptions,
    CipError, Graph, PowerIteration, Result,
};

/// Core / intermediate / peripheral node classification from centrality
/// factor analysis.
#[derive(Parser, Debug)]
#[command(name = "cip", version)]
struct Cli {
    #[command(subcommand)]
    command: Command,
}

#[derive(Subcommand, Debug)]
enum Command {
    /// Full report: network summary and ranked nodes
    Analyze(AnalyzeArgs),
    /// Ranked per-node records only
    Rank(AnalyzeArgs),
    /// Centrality table (DEG, EVC, BWC, CLC) only
    Metrics(InputArgs),
    /// Colored DOT (or GraphML) for external layout tools
    ExportDot(ExportArgs),
    /// Generate a random graph as an edge list
    Gen(GenArgs),
}

#[derive(Copy, Clone, Debug, PartialEq, Eq, ValueEnum)]
enum InputFormat {
    EdgeList,
    Graphml,
}

#[derive(Copy, Clone, Debug, PartialEq, Eq, ValueEnum)]
enum Format {
    Json,
    Csv,
    Table,
}

impl From<Format> for OutputFormat {
    fn from(f: Format) -> Self {
        match f {
            Format::Json => OutputFormat::Json,
            Format::Csv => OutputFormat::Csv,
            Format::Table => OutputFormat::Table,
        }
    }
}

#[derive(Args, Debug)]
struct InputArgs {
    /// Input graph file, or "-" for stdin
    input: PathBuf,

    /// Input format; inferred from the file extension when omitted
    #[arg(long, value_enum)]
    input_format: Option<InputFormat>,

    /// Output format
    #[arg(long, value_enum, default_value = "table")]
    format: Format,

    /// Write output here instead of stdout
    #[arg(short, long)]
    output: Option<PathBuf>,

    /// Power-iteration tolerance for EVC and the spectral radius
    #[arg(long, default_value_t = 1e-10)]
    tol: f64,

    /// Power-iteration cap
    #[arg(long, default_value_t = 10_000)]
    max_iter: usize,

    /// Analyze only the largest connected component
    #[arg(long)]
    largest_component: bool,

    /// Print full precision instead of 4 decimals
    #[arg(long)]
    full_precision: bool,
}

#[derive(Args, Debug)]
struct AnalyzeArgs {
    #[command(flatten)]
    input: InputArgs,

    /// Kaiser row normalization during varimax (default)
    #[arg(long, overrides_with = "no_kaiser")]
    kaiser: bool,

    /// Rotate raw loadings without Kaiser normalization
    #[arg(long, overrides_with = "kaiser")]
    no_kaiser: bool,

    /// Also write the factor-stage audit CSV to this path
    #[arg(long)]
    audit: Option<PathBuf>,
}

#[derive(Args, Debug)]
struct ExportArgs {
    #[command(flatten)]
    analyze: AnalyzeArgs,

    /// Emit GraphML instead of DOT
    #[arg(long)]
    graphml: bool,
}

#[derive(Subcommand, Debug, Clone, Copy)]
enum GenKind {
    /// Erdős–Rényi G(n, p)
    Er {
        #[arg(long)]
        n: usize,
        #[arg(long)]
        p: f64,
    },
    /// Barabási–Albert preferential attachment
    Ba {
        #[arg(long)]
        n: usize,
        /// Edges added per new node
        #[arg(long)]
        m: usize,
    },
}

#[derive(Args, Debug)]
struct GenArgs {
    #[command(subcommand)]
    kind: GenKind,

    /// RNG seed; equal seeds give identical output
    #[arg(long, default_value_t = 0, global = true)]
    seed: u64,

    /// Write the edge list here instead of stdout
    #[arg(short, long, global = true)]
    output: Option<PathBuf>,
}

fn main() -> ExitCode {
    env_logger::Builder::from_env(env_logger::Env::default().default_filter_or("warn")).init();
    let cli = match Cli::try_parse() {
        Ok(cli) => cli,
        Err(e) if !e.use_stderr() => {
            let _ = e.print();
            return ExitCode::SUCCESS;
        }
        Err(e) => {
            let msg = e.to_string();
            let first = msg
                .lines()
                .next()
                .unwrap_or("")
                .trim_start_matches("error: ");
            return fail(&CipError::Validation(first.to_string()));
        }
    };
    match run(cli) {
        Ok(()) => ExitCode::SUCCESS,
        Err(e) => fail(&e),
    }
}

fn fail(e: &CipError) -> ExitCode {
    let msg = e.to_string().replace('\n', " ");
    eprintln!(
        "error: code={} kind={} msg={}",
        e.exit_code(),
        e.kind(),
        msg
    );
    ExitCode::from(e.exit_code() as u8)
}

fn run(cli: Cli) -> Result<()> {
    match cli.command {
        Command::Analyze(args) => {
            let a = run_analysis(&args)?;
            emit(&args.input, |w, fmt, prec| {
                render::write_report(&a, fmt, prec, w)
            })
        }
        Command::Rank(args) => {
            let a = run_analysis(&args)?;
            emit(&args.input, |w, fmt, prec| {
                render::write_nodes(&a, fmt, prec, w)
            })
        }
        Command::Metrics(input) => {
            let g = load_graph(&input)?;
            let params = power_params(&input)?;
            let table = cip_core::centrality_table(&g, params)?;
            emit(&input, |w, fmt, prec| {
                render::write_centrality(&table, g.labels(), fmt, prec, w)
            })
        }
        Command::ExportDot(args) => {
            let g = load_graph(&args.analyze.input)?;
            let a = analyze(&g, &analysis_options(&args.analyze)?)?;
            let text = if args.graphml {
                to_graphml(&a.report, &g)?
            } else {
                to_dot(&a.report, &g)?
            };
            write_output(args.analyze.input.output.as_deref(), text.as_bytes())
        }
        Command::Gen(args) => {
            let g = match args.kind {
                GenKind::Er { n, p } => generate_er(n, p, args.seed)?,
                GenKind::Ba { n, m } => generate_ba(n, m, args.seed)?,
            };
            write_output(args.output.as_deref(), g.to_edge_list().as_bytes())
        }
    }
}

fn power_params(input: &InputArgs) -> Result<PowerIteration> {
    if input.tol.is_nan() || input.tol <= 0.0 {
        return Err(CipError::Validation(format!(
            "--tol must be positive, got {}",
            input.tol
        )));
    }
    Ok(PowerIteration {
        tol: input.tol,
        max_iter: input.max_iter,
    })
}

fn analysis_options(args: &AnalyzeArgs) -> Result<AnalysisOptions> {
    Ok(AnalysisOptions {
        power: power_params(&args.input)?,
        kaiser: !args.no_kaiser,
    })
}

fn run_analysis(args: &AnalyzeArgs) -> Result<Analysis> {
    let g = load_graph(&args.input)?;
    let a = analyze(&g, &analysis_options(args)?)?;
    if let Some(path) = &args.audit {
        let prec = precision(&args.input);
        let file = fs::File::create(path)?;
        a.factor
            .write_audit_csv(&a.labels, prec, io::BufWriter::new(file))?;
    }
    Ok(a)
}

fn precision(input: &InputArgs) -> Option<usize> {
    (!input.full_precision).then_some(DISPLAY_DECIMALS)
}

fn load_graph(input: &InputArgs) -> Result<Graph> {
    let is_stdin = input.input.as_os_str() == "-";
    let text = if is_stdin {
        let mut s = String::new();
        io::stdin().read_to_string(&mut s)?;
        s
    } else {
        fs::read_to_string(&input.input)?
    };
    let format = input.input_format.unwrap_or_else(|| {
        let ext = input.input.extension().and_then(|e| e.to_str());
        match ext.map(str::to_ascii_lowercase).as_deref() {
            Some("graphml") | Some("xml") => InputFormat::Graphml,
            _ => InputFormat::EdgeList,
        }
    });
    let g = match format {
        InputFormat::EdgeList => parse_edge_list(&text)?,
        InputFormat::Graphml => parse_graphml(&text)?,
    };
    Ok(if input.largest_component {
        g.largest_component()
    } else {
        g
    })
}

fn emit<F>(input: &InputArgs, render: F) -> Result<()>
where
    F: FnOnce(&mut Vec<u8>, OutputFormat, Option<usize>) -> Result<()>,
{
    let mut buf = Vec::new();
    render(&mut buf, input.format.into(), precision(input))?;
    write_output(input.output.as_deref(), &buf)
}

fn write_output(path: Option<&Path>, bytes: &[u8]) -> Result<()> {
    match path {
        Some(p) if p.as_os_str() != "-" => fs::write(p, bytes)?,
        _ => {
            let mut out = io::stdout().lock();
            out.write_all(bytes)?;
            out.flush()?;
        }
    }
    Ok(())
}
