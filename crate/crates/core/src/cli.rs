//! Command-line front end. [`run`] parses arguments, dispatches to the
//! library and returns the process exit status: 0 when every record is
//! consistent, 2 when any is indeterminate, 3 when any is a counterexample,
//! and 1 for usage or input errors.

use std::fs;
use std::io::{self, BufRead, BufReader, Read, Write};
use std::path::PathBuf;

use clap::{Args, Parser, Subcommand, ValueEnum};
use serde::Serialize;

use crate::apps::{body_bar_rigid, flow_implications, surface_rigid, SurfaceKind};
use crate::error::{Error, Result};
use crate::extremal::{
    book_graph, complete_graph, enumerate_family, family_graph, join_candidate, CrossPattern,
};
use crate::graph::{edge_connectivity, parse_edge_list, parse_graph6, write_edge_list, write_graph6, Graph};
use crate::packing::{arboricity, has_k_trees, stp_number, PackingDecision};
use crate::spectral::{spectral_report, spanning_tree_count};
use crate::verify::{
    exit_code, run_sweep, search_minimal_packing, StatementId, SweepConfig, SweepMode,
    VerificationRecord,
};

#[derive(Parser, Debug)]
#[command(name = "treepack", version, about = "Spanning-tree packing, spectra and extremal checks")]
struct Cli {
    #[command(subcommand)]
    command: Command,
}

#[derive(Subcommand, Debug)]
enum Command {
    /// Degree, connectivity and spectral summary of each input graph.
    Analyze {
        #[command(flatten)]
        input: InputArgs,
        #[command(flatten)]
        output: OutputArgs,
    },
    /// Emit a graph from one of the built-in constructions.
    Construct {
        #[command(subcommand)]
        family: ConstructCommand,
        /// Output encoding.
        #[arg(long, value_enum, default_value_t = GraphFormat::Graph6, global = true)]
        format: GraphFormat,
    },
    /// Spanning-tree packing number and arboricity with certificates.
    Pack {
        #[command(flatten)]
        input: InputArgs,
        /// Decide whether this many disjoint spanning trees exist.
        #[arg(long)]
        k: Option<usize>,
        #[command(flatten)]
        output: OutputArgs,
    },
    /// Check one parameter point of a statement; CSV on standard output.
    Verify {
        #[command(flatten)]
        point: PointArgs,
        #[arg(long)]
        n: usize,
        #[arg(long, default_value_t = 0)]
        delta: usize,
        /// k, or the edge connectivity for connectivity statements.
        #[arg(long)]
        k: usize,
    },
    /// Check a grid of parameter points.
    Sweep {
        #[command(flatten)]
        point: PointArgs,
        /// Values of n: `11..16`, `11..=16`, `11,13` or `12`.
        #[arg(long, value_parser = parse_list)]
        n: IntList,
        #[arg(long, value_parser = parse_list, default_value = "0")]
        delta: IntList,
        #[arg(long, value_parser = parse_list)]
        k: IntList,
        /// CSV destination instead of standard output.
        #[arg(long)]
        output: Option<PathBuf>,
        /// Directory for witness files.
        #[arg(long)]
        witness_dir: Option<PathBuf>,
        /// Worker threads.
        #[arg(long, default_value_t = 1)]
        jobs: usize,
    },
    /// Search for exact k-tree graphs of large spectral radius.
    Hunt {
        #[arg(long, value_parser = parse_list)]
        n: IntList,
        #[arg(long)]
        k: usize,
        /// Evaluation budget per n.
        #[arg(long, default_value_t = 10_000)]
        budget: u64,
        #[arg(long)]
        seed: u64,
        #[arg(long, default_value_t = 1)]
        jobs: usize,
        #[command(flatten)]
        output: OutputArgs,
    },
    /// Rigidity decisions and flow bounds.
    Rigidity {
        #[command(flatten)]
        input: InputArgs,
        /// Body-bar dimension.
        #[arg(long, conflicts_with = "surface")]
        body_bar: Option<usize>,
        #[arg(long, value_enum)]
        surface: Option<SurfaceArg>,
        /// Also report flow-index bounds.
        #[arg(long)]
        flow: bool,
        #[arg(long)]
        json: bool,
    },
}

#[derive(Subcommand, Debug)]
enum ConstructCommand {
    Complete {
        #[arg(long)]
        n: usize,
    },
    /// Two cliques on `0..n1` and `n1..n` plus cross edges. Without
    /// `--links`, every orbit representative with `--i` cross edges.
    Family {
        #[arg(long)]
        n: usize,
        #[arg(long)]
        n1: usize,
        /// Cross edges as `a-b` pairs, `a` indexing the left clique and `b`
        /// the right one, comma separated.
        #[arg(long, conflicts_with = "i")]
        links: Option<String>,
        #[arg(long)]
        i: Option<usize>,
    },
    Book {
        #[arg(long)]
        n: usize,
        #[arg(long)]
        delta: usize,
        #[arg(long)]
        i: usize,
    },
    JoinCandidate {
        #[arg(long)]
        n: usize,
        #[arg(long)]
        k: usize,
    },
}

#[derive(Args, Debug)]
struct InputArgs {
    /// File path, `-` for standard input, or an inline graph6 string.
    input: String,
    #[arg(long, value_enum, default_value_t = InputFormat::Auto)]
    format: InputFormat,
}

#[derive(Args, Debug)]
struct OutputArgs {
    #[arg(long, conflicts_with = "json")]
    csv: bool,
    #[arg(long)]
    json: bool,
}

#[derive(Args, Debug)]
struct PointArgs {
    #[arg(long)]
    statement: StatementId,
    #[arg(long, value_enum, default_value_t = ModeArg::Family)]
    mode: ModeArg,
    /// Random graphs per point, or the hunt budget.
    #[arg(long, default_value_t = 1000)]
    samples: usize,
    /// Required for random mode and the hunt statements.
    #[arg(long)]
    seed: Option<u64>,
    /// graph6 file for stream mode.
    #[arg(long)]
    input: Option<PathBuf>,
    /// One JSON record per line instead of CSV.
    #[arg(long)]
    json: bool,
}

#[derive(Clone, Copy, Debug, ValueEnum)]
enum InputFormat {
    Auto,
    Graph6,
    Edgelist,
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, ValueEnum)]
enum GraphFormat {
    Graph6,
    Edgelist,
}

#[derive(Clone, Copy, Debug, ValueEnum)]
enum ModeArg {
    #[value(alias = "family-exhaustive")]
    Family,
    #[value(alias = "random-sample")]
    Random,
    #[value(alias = "graph6-stream")]
    Stream,
}

#[derive(Clone, Copy, Debug, ValueEnum)]
enum SurfaceArg {
    Cylinder,
    Sphere,
    Other,
}

/// Integer list argument.
#[derive(Clone, Debug, PartialEq, Eq)]
struct IntList(Vec<usize>);

fn parse_list(s: &str) -> std::result::Result<IntList, String> {
    parse_ints(s).map(IntList)
}

fn parse_ints(s: &str) -> std::result::Result<Vec<usize>, String> {
    let s = s.trim();
    if s.is_empty() {
        return Ok(Vec::new());
    }
    let num = |t: &str| t.trim().parse::<usize>().map_err(|e| format!("{t:?}: {e}"));
    if let Some((a, b)) = s.split_once("..") {
        let (lo, hi) = (num(a)?, num(b.trim_start_matches('='))?);
        if lo > hi {
            return Err(format!("empty range {s}"));
        }
        return Ok((lo..=hi).collect());
    }
    s.split(',').map(num).collect()
}

/// Graphs from an input argument. graph6 text is read one line at a time.
struct GraphSource {
    reader: Box<dyn BufRead>,
    format: InputFormat,
    line: usize,
    done: bool,
}

impl GraphSource {
    fn open(args: &InputArgs) -> Result<Self> {
        let path = PathBuf::from(&args.input);
        let reader: Box<dyn BufRead> = if args.input == "-" {
            Box::new(BufReader::new(io::stdin()))
        } else if path.exists() {
            let file = fs::File::open(&path).map_err(|source| Error::Io { path, source })?;
            Box::new(BufReader::new(file))
        } else {
            Box::new(io::Cursor::new(args.input.clone().into_bytes()))
        };
        Ok(GraphSource {
            reader,
            format: args.format,
            line: 0,
            done: false,
        })
    }

    fn next_graph(&mut self) -> Result<Option<Graph>> {
        if self.done {
            return Ok(None);
        }
        if let InputFormat::Auto = self.format {
            let buf = self.reader.fill_buf().map_err(stdin_error)?;
            let first = buf.iter().find(|b| !b.is_ascii_whitespace()).copied();
            self.format = match first {
                Some(b) if b.is_ascii_digit() || b == b'#' => InputFormat::Edgelist,
                _ => InputFormat::Graph6,
            };
        }
        if let InputFormat::Edgelist = self.format {
            self.done = true;
            let mut text = String::new();
            self.reader.read_to_string(&mut text).map_err(stdin_error)?;
            return parse_edge_list(&text).map(Some);
        }
        loop {
            let mut text = String::new();
            if self.reader.read_line(&mut text).map_err(stdin_error)? == 0 {
                self.done = true;
                return Ok(None);
            }
            self.line += 1;
            let trimmed = text.trim();
            if trimmed.is_empty() {
                continue;
            }
            return parse_graph6(trimmed).map(Some).map_err(|e| match e {
                Error::Graph6 { offset, message } => Error::Graph6 {
                    offset,
                    message: format!("line {}: {message}", self.line),
                },
                other => other,
            });
        }
    }
}

fn stdin_error(source: io::Error) -> Error {
    Error::Io {
        path: PathBuf::from("<input>"),
        source,
    }
}

#[derive(Serialize)]
struct Analysis {
    graph6: String,
    n: usize,
    m: usize,
    min_degree: usize,
    max_degree: usize,
    connected: bool,
    components: usize,
    edge_connectivity: Option<usize>,
    rho: f64,
    lambda2: Option<f64>,
    mu1: f64,
    residual: f64,
    spanning_trees: String,
}

impl Analysis {
    const CSV_HEADER: &'static str =
        "graph6,n,m,min_degree,max_degree,connected,edge_connectivity,rho,lambda2,mu1,spanning_trees";

    fn of(g: &Graph) -> Self {
        let profile = g.degree_profile();
        let spectra = spectral_report(g);
        Analysis {
            graph6: write_graph6(g),
            n: g.n(),
            m: g.m(),
            min_degree: profile.delta,
            max_degree: profile.max_degree,
            connected: g.is_connected(),
            components: g.component_count(),
            edge_connectivity: (g.n() >= 2).then(|| edge_connectivity(g).map(|c| c.0)).transpose().ok().flatten(),
            rho: spectra.rho,
            lambda2: spectra.lambda2,
            mu1: spectra.mu1(),
            residual: spectra.residual,
            spanning_trees: spanning_tree_count(g).count.to_string(),
        }
    }

    fn csv_row(&self) -> String {
        format!(
            "{},{},{},{},{},{},{},{:.12},{},{:.12},{}",
            crate::verify::csv_field(&self.graph6),
            self.n,
            self.m,
            self.min_degree,
            self.max_degree,
            self.connected,
            self.edge_connectivity.map(|k| k.to_string()).unwrap_or_default(),
            self.rho,
            self.lambda2.map(|l| format!("{l:.12}")).unwrap_or_default(),
            self.mu1,
            self.spanning_trees
        )
    }

    fn text(&self) -> String {
        format!(
            "graph6={}\nn={} m={}\nmin_degree={} max_degree={}\nconnected={} components={}\nedge_connectivity={}\nrho={:.12}\nlambda2={}\nmu1={:.12}\nresidual={:.3e}\nspanning_trees={}\n",
            self.graph6,
            self.n,
            self.m,
            self.min_degree,
            self.max_degree,
            self.connected,
            self.components,
            self.edge_connectivity.map(|k| k.to_string()).unwrap_or_else(|| "-".into()),
            self.rho,
            self.lambda2.map(|l| format!("{l:.12}")).unwrap_or_else(|| "-".into()),
            self.mu1,
            self.residual,
            self.spanning_trees
        )
    }
}

fn json_line<T: Serialize>(out: &mut dyn Write, value: &T) -> Result<()> {
    let text = serde_json::to_string(value).map_err(|e| Error::InvalidParameter(format!("json: {e}")))?;
    writeln!(out, "{text}").map_err(stdout_error)
}

fn stdout_error(source: io::Error) -> Error {
    Error::Io {
        path: PathBuf::from("<output>"),
        source,
    }
}

fn write_graph(out: &mut dyn Write, g: &Graph, format: GraphFormat) -> Result<()> {
    match format {
        GraphFormat::Graph6 => writeln!(out, "{}", write_graph6(g)),
        GraphFormat::Edgelist => write!(out, "{}", write_edge_list(g)),
    }
    .map_err(stdout_error)
}

fn parse_links(text: &str) -> Result<Vec<(usize, usize)>> {
    text.split(',')
        .filter(|t| !t.trim().is_empty())
        .map(|t| {
            let (a, b) = t
                .trim()
                .split_once('-')
                .ok_or_else(|| Error::InvalidParameter(format!("link {t:?} is not of the form a-b")))?;
            let num = |s: &str| {
                s.trim()
                    .parse::<usize>()
                    .map_err(|e| Error::InvalidParameter(format!("link {t:?}: {e}")))
            };
            Ok((num(a)?, num(b)?))
        })
        .collect()
}

fn construct(out: &mut dyn Write, family: &ConstructCommand, format: GraphFormat) -> Result<i32> {
    let graphs = match family {
        ConstructCommand::Complete { n } => vec![complete_graph(*n)?],
        ConstructCommand::Book { n, delta, i } => vec![book_graph(*n, *delta, *i)?],
        ConstructCommand::JoinCandidate { n, k } => vec![join_candidate(*n, *k)?],
        ConstructCommand::Family { n, n1, links, i } => match (links, i) {
            (Some(text), _) => {
                if *n1 == 0 || n1 >= n {
                    return Err(Error::InvalidParameter(format!("split n1={n1} invalid for n={n}")));
                }
                let pattern = CrossPattern::new(*n1, n - n1, parse_links(text)?)?;
                vec![family_graph(*n, *n1, pattern)?.graph]
            }
            (None, Some(i)) => enumerate_family(*n, *n1, *i)?.into_iter().map(|m| m.graph).collect(),
            (None, None) => {
                return Err(Error::InvalidParameter("family needs --links or --i".into()));
            }
        },
    };
    for g in &graphs {
        write_graph(out, g, format)?;
    }
    Ok(0)
}

fn analyze(out: &mut dyn Write, input: &InputArgs, output: &OutputArgs) -> Result<i32> {
    let mut source = GraphSource::open(input)?;
    if output.csv {
        writeln!(out, "{}", Analysis::CSV_HEADER).map_err(stdout_error)?;
    }
    let mut first = true;
    while let Some(g) = source.next_graph()? {
        let a = Analysis::of(&g);
        if output.json {
            json_line(out, &a)?;
        } else if output.csv {
            writeln!(out, "{}", a.csv_row()).map_err(stdout_error)?;
        } else {
            if !first {
                writeln!(out).map_err(stdout_error)?;
            }
            write!(out, "{}", a.text()).map_err(stdout_error)?;
        }
        first = false;
    }
    Ok(0)
}

#[derive(Serialize)]
struct PackOutput {
    graph6: String,
    packing: crate::packing::PackingCertificate,
    cover: crate::packing::ForestCover,
    decision: Option<PackingDecision>,
}

fn pack(out: &mut dyn Write, input: &InputArgs, k: Option<usize>, output: &OutputArgs) -> Result<i32> {
    let mut source = GraphSource::open(input)?;
    if output.csv {
        writeln!(out, "graph6,n,m,tau,arboricity{}", if k.is_some() { ",has_k" } else { "" })
            .map_err(stdout_error)?;
    }
    let mut first = true;
    while let Some(g) = source.next_graph()? {
        let decision = k.map(|k| has_k_trees(&g, k)).transpose()?;
        let result = PackOutput {
            graph6: write_graph6(&g),
            packing: stp_number(&g),
            cover: arboricity(&g),
            decision,
        };
        if output.json {
            json_line(out, &result)?;
        } else if output.csv {
            let has_k = match &result.decision {
                Some(d) => format!(",{}", d.is_yes()),
                None => String::new(),
            };
            writeln!(
                out,
                "{},{},{},{},{}{}",
                crate::verify::csv_field(&result.graph6),
                g.n(),
                g.m(),
                result.packing.tau,
                result.cover.arboricity,
                has_k
            )
            .map_err(stdout_error)?;
        } else {
            if !first {
                writeln!(out).map_err(stdout_error)?;
            }
            let mut text = result.packing.to_string();
            if let (Some(k), Some(d)) = (k, &result.decision) {
                text.push_str(&match d {
                    PackingDecision::Yes { .. } => format!("k={k}: yes\n"),
                    PackingDecision::No { witness } => format!("k={k}: no, {witness}\n"),
                });
            }
            text.push_str(&result.cover.to_string());
            write!(out, "{text}").map_err(stdout_error)?;
        }
        first = false;
    }
    Ok(0)
}

fn sweep_config(point: &PointArgs, ns: Vec<usize>, deltas: Vec<usize>, ks: Vec<usize>) -> Result<SweepConfig> {
    let mode = match point.mode {
        ModeArg::Family => SweepMode::FamilyExhaustive,
        ModeArg::Random => SweepMode::RandomSample,
        ModeArg::Stream => SweepMode::Graph6Stream,
    };
    let randomized = mode == SweepMode::RandomSample
        || matches!(point.statement, StatementId::P5_2 | StatementId::P5_3);
    if randomized && point.seed.is_none() {
        return Err(Error::InvalidParameter(format!(
            "--seed is required for {} in {:?} mode",
            point.statement, point.mode
        )));
    }
    let mut config = SweepConfig::new(point.statement, mode);
    config.ns = ns;
    config.deltas = deltas;
    config.ks = ks;
    config.sample_count = point.samples;
    config.seed = point.seed.unwrap_or(0);
    config.input = point.input.clone();
    Ok(config)
}

fn emit_records(out: &mut dyn Write, csv: &str, records: &[VerificationRecord], json: bool) -> Result<()> {
    if json {
        for r in records {
            json_line(out, r)?;
        }
        Ok(())
    } else {
        out.write_all(csv.as_bytes()).map_err(stdout_error)
    }
}

fn hunt(
    out: &mut dyn Write,
    ns: &[usize],
    k: usize,
    budget: u64,
    seed: u64,
    jobs: usize,
    output: &OutputArgs,
) -> Result<i32> {
    use rayon::prelude::*;
    let pool = rayon::ThreadPoolBuilder::new()
        .num_threads(jobs)
        .build()
        .map_err(|e| Error::InvalidParameter(format!("worker pool: {e}")))?;
    let reports: Vec<_> = pool.install(|| {
        ns.par_iter()
            .map(|&n| search_minimal_packing(n, k, budget, crate::verify::point_seed(seed, n, 0, k)))
            .collect::<Result<Vec<_>>>()
    })?;
    let records: Vec<VerificationRecord> = reports.iter().flat_map(|r| [r.record(), r.arboricity_record()]).collect();
    if output.json {
        for r in &reports {
            json_line(out, r)?;
        }
    } else if output.csv {
        let paths = vec![None; records.len()];
        out.write_all(crate::verify::render_csv(&records, &paths).as_bytes())
            .map_err(stdout_error)?;
    } else {
        for r in &reports {
            writeln!(
                out,
                "n={} k={} mode={} evaluated={} qualifying={}\nbest rho={:.12} arboricity={} graph6={}\ncandidate rho={:.12} arboricity={} graph6={}\ncandidate_unbeaten={}",
                r.n,
                r.k,
                if r.exhaustive { "exhaustive" } else { "partial" },
                r.evaluated,
                r.qualifying,
                r.best_rho,
                r.best_arboricity,
                r.best_graph6,
                r.candidate_rho,
                r.candidate_arboricity,
                r.candidate_graph6,
                r.candidate_unbeaten
            )
            .map_err(stdout_error)?;
        }
    }
    Ok(exit_code(&records))
}

fn rigidity(
    out: &mut dyn Write,
    input: &InputArgs,
    body_bar: Option<usize>,
    surface: Option<SurfaceArg>,
    flow: bool,
    json: bool,
) -> Result<i32> {
    if body_bar.is_none() && surface.is_none() && !flow {
        return Err(Error::InvalidParameter(
            "rigidity needs --body-bar, --surface or --flow".into(),
        ));
    }
    let mut source = GraphSource::open(input)?;
    while let Some(g) = source.next_graph()? {
        let report = match (body_bar, surface) {
            (Some(d), _) => Some(body_bar_rigid(&g, d)?),
            (None, Some(kind)) => Some(surface_rigid(
                &g,
                match kind {
                    SurfaceArg::Cylinder => SurfaceKind::Cylinder,
                    SurfaceArg::Sphere => SurfaceKind::Sphere,
                    SurfaceArg::Other => SurfaceKind::OtherRevolution,
                },
            )),
            (None, None) => None,
        };
        let flow_report = flow.then(|| flow_implications(&g));
        if json {
            #[derive(Serialize)]
            struct Out<'a> {
                graph6: String,
                rigidity: &'a Option<crate::apps::RigidityReport>,
                flow: &'a Option<crate::apps::FlowReport>,
            }
            json_line(
                out,
                &Out {
                    graph6: write_graph6(&g),
                    rigidity: &report,
                    flow: &flow_report,
                },
            )?;
        } else {
            let mut text = format!("graph6={}\n", write_graph6(&g));
            if let Some(r) = &report {
                text.push_str(&r.to_string());
            }
            if let Some(f) = &flow_report {
                text.push_str(&f.to_string());
            }
            write!(out, "{text}").map_err(stdout_error)?;
        }
    }
    Ok(0)
}

fn dispatch(cli: Cli, out: &mut dyn Write) -> Result<i32> {
    match cli.command {
        Command::Analyze { input, output } => analyze(out, &input, &output),
        Command::Construct { family, format } => construct(out, &family, format),
        Command::Pack { input, k, output } => pack(out, &input, k, &output),
        Command::Verify { point, n, delta, k } => {
            let config = sweep_config(&point, vec![n], vec![delta], vec![k])?;
            let report = run_sweep(&config)?;
            emit_records(out, &report.csv, &report.records, point.json)?;
            Ok(exit_code(&report.records))
        }
        Command::Sweep {
            point,
            n,
            delta,
            k,
            output,
            witness_dir,
            jobs,
        } => {
            let mut config = sweep_config(&point, n.0, delta.0, k.0)?;
            config.jobs = jobs;
            config.witness_dir = witness_dir;
            config.output = output.clone();
            let report = run_sweep(&config)?;
            if output.is_none() {
                emit_records(out, &report.csv, &report.records, point.json)?;
            }
            Ok(exit_code(&report.records))
        }
        Command::Hunt {
            n,
            k,
            budget,
            seed,
            jobs,
            output,
        } => hunt(out, &n.0, k, budget, seed, jobs, &output),
        Command::Rigidity {
            input,
            body_bar,
            surface,
            flow,
            json,
        } => rigidity(out, &input, body_bar, surface, flow, json),
    }
}

/// Runs the command line `args` (program name first), writing results to
/// `out` and diagnostics to `err`. Returns the exit status.
pub fn run<I, T>(args: I, out: &mut dyn Write, err: &mut dyn Write) -> i32
where
    I: IntoIterator<Item = T>,
    T: Into<std::ffi::OsString> + Clone,
{
    let cli = match Cli::try_parse_from(args) {
        Ok(cli) => cli,
        Err(e) => {
            let code = if e.use_stderr() { 1 } else { 0 };
            let target: &mut dyn Write = if e.use_stderr() { err } else { out };
            let _ = write!(target, "{}", e.render());
            return code;
        }
    };
    match dispatch(cli, out) {
        Ok(code) => code,
        Err(e) => {
            let _ = writeln!(err, "error: {e}");
            1
        }
    }
}
