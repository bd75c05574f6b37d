//! `nefcert`: command-line front end.

mod output;

use std::fs;
use std::path::{Path, PathBuf};
use std::process::ExitCode;

use anyhow::{anyhow, bail, Context};
use clap::{Parser, Subcommand, ValueEnum};
use rayon::prelude::*;

use nefcert::certify::{certify_edge, certify_matrix, CertificateReport, CertifyOptions, Pipeline, Verdict};
use nefcert::config::as_configuration;
use nefcert::graphs::{parse_family_spec, reduced_edge_configuration, Graph, DEFAULT_CYCLE_CAP};
use nefcert::io::{format_graph, format_matrix, format_points, parse_graph, parse_matrix, parse_points};
use nefcert::toric::{conform_azero, conform_cayley, conform_pm};
use nefcert::{corpus, Error, IntMatrix, LatticePolytope};

use output::{AnalyzeOutput, GbOutput, GraphOutput, PolytopeOutput};

#[derive(Parser, Debug)]
#[command(name = "nefcert", version, about = "Certify Gorenstein Cayley sums, reflexive sums and nef-partitions of unimodular configurations")]
struct Cli {
    /// Output format.
    #[arg(long, global = true, value_enum, default_value_t = Format::Text)]
    format: Format,
    /// Write the built-in instance files into DIR and exit.
    #[arg(long, value_name = "DIR")]
    seed_corpus: Option<PathBuf>,
    #[command(subcommand)]
    command: Option<Command>,
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, ValueEnum)]
enum Format {
    Text,
    Json,
}

#[derive(Subcommand, Debug)]
enum Command {
    /// Configuration, unimodularity and minor profile of a matrix file.
    Analyze {
        #[command(subcommand)]
        what: AnalyzeTarget,
    },
    /// Lattice polytope queries on a `dim d` point file.
    Polytope {
        file: PathBuf,
        #[arg(long)]
        hstar: bool,
        #[arg(long)]
        reflexive: bool,
        #[arg(long)]
        gorenstein: bool,
        #[arg(long)]
        spanning: bool,
    },
    /// Reduced Groebner basis in one of the three structure-theorem settings.
    Gb {
        file: PathBuf,
        #[arg(long, value_enum)]
        mode: GbMode,
    },
    /// Run a certification pipeline.
    Certify {
        #[arg(value_enum)]
        pipeline: PipelineArg,
        /// Matrix file, graph file (edge) or family shorthand such as `cycle:4`.
        input: Option<String>,
        /// Certify every built-in graph (edge only).
        #[arg(long)]
        all_corpus: bool,
        /// Check the nef-partition for every lattice point, not just one.
        #[arg(long)]
        all_translates: bool,
        /// Bound for the bounded IDP check.
        #[arg(long, default_value_t = 2)]
        k_max: u32,
        /// Odd-cycle enumeration budget; defaults to NEFCERT_CYCLE_CAP or 10000.
        #[arg(long)]
        cycle_cap: Option<usize>,
        /// Record per-stage wall-clock times in the report.
        #[arg(long)]
        timings: bool,
    },
    /// Inspect a graph given by shorthand or file.
    Graph { spec: String },
}

#[derive(Subcommand, Debug)]
enum AnalyzeTarget {
    Matrix { file: PathBuf },
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, ValueEnum)]
enum GbMode {
    Pm,
    Cayley,
    Azero,
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, ValueEnum)]
enum PipelineArg {
    Main1,
    Main2,
    Corollary,
    Edge,
    Identities,
}

fn main() -> ExitCode {
    let cli = match Cli::try_parse() {
        Ok(cli) => cli,
        Err(e) => {
            let code = if e.use_stderr() { 1 } else { 0 };
            let _ = e.print();
            return ExitCode::from(code);
        }
    };
    match run(cli) {
        Ok(code) => ExitCode::from(code),
        Err(e) => {
            eprintln!("error: {e:#}");
            ExitCode::from(1)
        }
    }
}

fn run(cli: Cli) -> anyhow::Result<u8> {
    if let Some(dir) = &cli.seed_corpus {
        seed_corpus(dir)?;
        println!("wrote corpus to {}", dir.display());
        return Ok(0);
    }
    let Some(command) = cli.command else {
        bail!("no subcommand given (try --help)");
    };
    let fmt = cli.format;
    match command {
        Command::Analyze {
            what: AnalyzeTarget::Matrix { file },
        } => {
            let m = parse_matrix(&read(&file)?).with_context(|| format!("parsing {}", file.display()))?;
            emit(fmt, &AnalyzeOutput::new(&m))?;
            Ok(0)
        }
        Command::Polytope {
            file,
            hstar,
            reflexive,
            gorenstein,
            spanning,
        } => {
            let pts = parse_points(&read(&file)?).with_context(|| format!("parsing {}", file.display()))?;
            let p = LatticePolytope::from_points(&pts)?;
            let all = !(hstar || reflexive || gorenstein || spanning);
            let out = PolytopeOutput::new(&p, all || hstar, all || reflexive, all || gorenstein, all || spanning)?;
            emit(fmt, &out)?;
            Ok(0)
        }
        Command::Gb { file, mode } => gb(fmt, &file, mode),
        Command::Certify {
            pipeline,
            input,
            all_corpus,
            all_translates,
            k_max,
            cycle_cap,
            timings,
        } => {
            let opts = CertifyOptions {
                k_max,
                all_translates,
                cycle_cap: match cycle_cap {
                    Some(c) => c,
                    None => env_cycle_cap()?,
                },
                timings,
                ..CertifyOptions::default()
            };
            certify(fmt, pipeline, input, all_corpus, &opts)
        }
        Command::Graph { spec } => {
            let g = load_graph(&spec)?;
            emit(fmt, &GraphOutput::new(&g, env_cycle_cap()?))?;
            Ok(0)
        }
    }
}

fn read(path: &Path) -> anyhow::Result<String> {
    fs::read_to_string(path).with_context(|| format!("reading {}", path.display()))
}

fn env_cycle_cap() -> anyhow::Result<usize> {
    match std::env::var("NEFCERT_CYCLE_CAP") {
        Ok(v) => v.trim().parse().map_err(|_| anyhow!("NEFCERT_CYCLE_CAP='{v}' is not a count")),
        Err(_) => Ok(DEFAULT_CYCLE_CAP),
    }
}

/// Graph file if the path exists, otherwise a family shorthand.
fn load_graph(spec: &str) -> anyhow::Result<Graph> {
    let path = Path::new(spec);
    if path.is_file() {
        return parse_graph(&read(path)?).with_context(|| format!("parsing {spec}"));
    }
    parse_family_spec(spec).with_context(|| format!("'{spec}' is neither a graph file nor a family shorthand"))
}

/// Matrix file if the path exists, otherwise the (row-reduced) edge
/// configuration of a family shorthand.
fn load_matrix(spec: &str) -> anyhow::Result<IntMatrix> {
    let path = Path::new(spec);
    if path.is_file() {
        return parse_matrix(&read(path)?).with_context(|| format!("parsing {spec}"));
    }
    let g = parse_family_spec(spec).with_context(|| format!("'{spec}' is neither a matrix file nor a family shorthand"))?;
    Ok(reduced_edge_configuration(&g)?.matrix().clone())
}

trait Render: serde::Serialize {
    fn text(&self) -> String;
}

fn emit<T: Render>(fmt: Format, value: &T) -> anyhow::Result<()> {
    match fmt {
        Format::Text => print!("{}", value.text()),
        Format::Json => println!("{}", serde_json::to_string_pretty(value)?),
    }
    Ok(())
}

fn gb(fmt: Format, file: &Path, mode: GbMode) -> anyhow::Result<u8> {
    let m = parse_matrix(&read(file)?).with_context(|| format!("parsing {}", file.display()))?;
    let a = match as_configuration(&m) {
        Ok(a) => a,
        Err(e) => {
            eprintln!("hypothesis not met: {e}");
            return Ok(2);
        }
    };
    let conf = match mode {
        GbMode::Pm => conform_pm(&a),
        GbMode::Cayley => conform_cayley(&a),
        GbMode::Azero => conform_azero(&a),
    };
    let conf = match conf {
        Ok(c) => c,
        Err(e @ (Error::NotUnimodular | Error::HypothesisFailed(_))) => {
            eprintln!("hypothesis not met: {e}");
            return Ok(2);
        }
        Err(e) => return Err(e.into()),
    };
    let mode_name = match mode {
        GbMode::Pm => "pm",
        GbMode::Cayley => "cayley",
        GbMode::Azero => "azero",
    };
    let out = GbOutput::new(mode_name, &conf)?;
    emit(fmt, &out)?;
    Ok(if conf.conforms() { 0 } else { 3 })
}

fn certify(
    fmt: Format,
    pipeline: PipelineArg,
    input: Option<String>,
    all_corpus: bool,
    opts: &CertifyOptions,
) -> anyhow::Result<u8> {
    if all_corpus {
        if pipeline != PipelineArg::Edge {
            bail!("--all-corpus is only available for `certify edge`");
        }
        if input.is_some() {
            bail!("give either an input or --all-corpus, not both");
        }
        let graphs = corpus::graphs();
        let reports: Vec<(String, nefcert::Result<CertificateReport>)> =
            graphs.par_iter().map(|(name, g)| (name.clone(), certify_edge(g, opts))).collect();
        let mut out = Vec::with_capacity(reports.len());
        for (name, r) in reports {
            out.push(r.with_context(|| format!("certifying {name}"))?);
        }
        match fmt {
            Format::Json => println!("{}", serde_json::to_string_pretty(&out)?),
            Format::Text => {
                for r in &out {
                    print!("{}", output::report_text(r));
                    println!();
                }
            }
        }
        let discrepancy = out.iter().any(|r| r.verdict == Verdict::Discrepancy);
        return Ok(if discrepancy { 3 } else { 0 });
    }
    let Some(input) = input else {
        bail!("missing input (a file or family shorthand)");
    };
    let report = match pipeline {
        PipelineArg::Edge => certify_edge(&load_graph(&input)?, opts)?,
        PipelineArg::Main1 => certify_matrix(Pipeline::Main1, &load_matrix(&input)?, opts),
        PipelineArg::Main2 => certify_matrix(Pipeline::Main2, &load_matrix(&input)?, opts),
        PipelineArg::Corollary => certify_matrix(Pipeline::Corollary, &load_matrix(&input)?, opts),
        PipelineArg::Identities => certify_matrix(Pipeline::Identities, &load_matrix(&input)?, opts),
    };
    match fmt {
        Format::Json => println!("{}", report.to_json()),
        Format::Text => print!("{}", output::report_text(&report)),
    }
    Ok(report.verdict.exit_code() as u8)
}

fn seed_corpus(dir: &Path) -> anyhow::Result<()> {
    let write = |name: String, text: String| -> anyhow::Result<()> {
        let path = dir.join(name);
        fs::write(&path, text).with_context(|| format!("writing {}", path.display()))
    };
    fs::create_dir_all(dir).with_context(|| format!("creating {}", dir.display()))?;
    for (spec, g) in corpus::graphs() {
        let slug = corpus::slug(&spec);
        write(format!("{slug}.graph"), format_graph(&g))?;
        let a = reduced_edge_configuration(&g)?;
        write(format!("{slug}.mat"), format_matrix(a.matrix()))?;
    }
    for d in 1..=4 {
        write(format!("identity_{d}.mat"), format_matrix(corpus::identity(d).matrix()))?;
    }
    let hexagon = vec![
        vec![1.into(), 0.into()],
        vec![0.into(), 1.into()],
        vec![(-1).into(), 1.into()],
        vec![(-1).into(), 0.into()],
        vec![0.into(), (-1).into()],
        vec![1.into(), (-1).into()],
    ];
    write("hexagon.pts".to_string(), format_points(&hexagon))?;
    Ok(())
}
