//! Command-line front end: `classify`, `invariants`, `verify` and `generate`.
//!
//! Exit codes: 0 success, 1 property failure, 2 input error, 3 oracle cap hit
//! where the answer depends on it.

use std::ffi::OsString;
use std::io::{Read, Write};
use std::time::Instant;

use clap::{Parser, Subcommand, ValueEnum};
use serde::Serialize;

use crate::classify::classify;
use crate::complexes::ShellingLimits;
use crate::error::Error;
use crate::generators::{
    bipartite_from_poset, enumerate_vwc, random_graph_batch, random_vwc, random_vwc_batch, whisker, GeneratorConfig, Mode,
};
use crate::graph::Graph;
use crate::homology::{Field, DEFAULT_CAP};
use crate::io::{digest, parse_edge_list, write_edge_list};
use crate::report::{build_report, ReportOptions, SCHEMA};
use crate::verify::{run_suite, CheckOptions, Suite, SuiteSummary};

pub const EXIT_OK: i32 = 0;
pub const EXIT_PROPERTY: i32 = 1;
pub const EXIT_INPUT: i32 = 2;
pub const EXIT_CAP: i32 = 3;

#[derive(Debug, Parser)]
#[command(name = "vwc", version, about = "Edge ideals of very well-covered graphs")]
pub struct Cli {
    #[command(subcommand)]
    pub command: Command,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, ValueEnum)]
pub enum FieldArg {
    Gf2,
    Q,
    Both,
}

impl FieldArg {
    pub fn fields(self) -> Vec<Field> {
        match self {
            FieldArg::Gf2 => vec![Field::Gf2],
            FieldArg::Q => vec![Field::Rationals],
            FieldArg::Both => Field::BOTH.to_vec(),
        }
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, ValueEnum)]
pub enum Format {
    Text,
    Json,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, ValueEnum)]
pub enum SuiteArg {
    TheoremA,
    TheoremB,
    Terai,
    Katzman,
    Ass,
    Reduction,
    Splitting,
}

impl From<SuiteArg> for Suite {
    fn from(s: SuiteArg) -> Suite {
        match s {
            SuiteArg::TheoremA => Suite::TheoremA,
            SuiteArg::TheoremB => Suite::TheoremB,
            SuiteArg::Terai => Suite::Terai,
            SuiteArg::Katzman => Suite::Katzman,
            SuiteArg::Ass => Suite::Ass,
            SuiteArg::Reduction => Suite::Reduction,
            SuiteArg::Splitting => Suite::Splitting,
        }
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, ValueEnum)]
pub enum ModeArg {
    Exhaustive,
    Random,
    Whisker,
    Poset,
}

#[derive(Debug, Subcommand)]
pub enum Command {
    /// Classify a graph: well-covered, very well-covered, unmixed, Cohen–Macaulay.
    Classify {
        /// Edge-list file, or `-` for standard input.
        input: String,
        #[arg(long, value_enum, default_value = "text")]
        format: Format,
    },
    /// Full invariants report.
    Invariants {
        input: String,
        #[arg(long, value_enum, default_value = "both")]
        field: FieldArg,
        #[arg(long, default_value_t = DEFAULT_CAP)]
        cap: usize,
        #[arg(long, value_enum, default_value = "json")]
        format: Format,
        /// Include wall-clock time (makes output run-dependent).
        #[arg(long)]
        timing: bool,
    },
    /// Run a property suite over generated corpora.
    Verify {
        #[arg(value_enum)]
        suite: SuiteArg,
        /// Largest pair count of random very well-covered graphs, or vertex
        /// count of arbitrary graphs with `--random-any-graph`.
        #[arg(long, default_value_t = 4)]
        n: usize,
        #[arg(long, default_value_t = 100)]
        count: usize,
        #[arg(long, default_value_t = 0)]
        seed: u64,
        /// Enumerate every labeled graph with up to this many pairs.
        #[arg(long, default_value_t = 2)]
        exhaustive: usize,
        /// Use arbitrary random graphs instead of very well-covered ones.
        #[arg(long)]
        random_any_graph: bool,
        #[arg(long, value_enum, default_value = "both")]
        field: FieldArg,
        #[arg(long, default_value_t = DEFAULT_CAP)]
        cap: usize,
        /// Facet limit of the shellability search.
        #[arg(long, default_value_t = ShellingLimits::default().max_facets)]
        max_facets: usize,
        #[arg(long, value_enum, default_value = "text")]
        format: Format,
    },
    /// Emit graphs in edge-list format.
    Generate {
        #[arg(long, value_enum)]
        mode: ModeArg,
        #[arg(long, default_value_t = 2)]
        n: usize,
        #[arg(long, default_value_t = 0)]
        seed: u64,
        #[arg(long, default_value_t = 0.5)]
        density: f64,
        #[arg(long, default_value_t = 1)]
        count: usize,
        /// Input graph for `whisker`.
        #[arg(long)]
        input: Option<String>,
        /// Strict order for `poset`, e.g. `1<2,2<3,1<3`.
        #[arg(long, default_value = "")]
        relation: String,
    },
}

/// Everything a command needs from the process.
pub struct Io<'a> {
    pub stdin: &'a mut dyn Read,
    pub stdout: &'a mut dyn Write,
    pub stderr: &'a mut dyn Write,
}

/// Why a command could not finish.
#[derive(Debug)]
pub enum CliError {
    Input(String),
    Lib(Error),
}

impl From<Error> for CliError {
    fn from(e: Error) -> Self {
        CliError::Lib(e)
    }
}

impl From<std::io::Error> for CliError {
    fn from(e: std::io::Error) -> Self {
        CliError::Input(e.to_string())
    }
}

pub type CmdResult = std::result::Result<i32, CliError>;

fn exit_code(e: &Error) -> i32 {
    match e {
        Error::OracleLimit { .. } => EXIT_CAP,
        Error::Invariant(_) => EXIT_PROPERTY,
        _ => EXIT_INPUT,
    }
}

/// Parses `args` (including the program name) and runs the command.
pub fn run<I, T>(args: I, io: &mut Io<'_>) -> i32
where
    I: IntoIterator<Item = T>,
    T: Into<OsString> + Clone,
{
    let cli = match Cli::try_parse_from(args) {
        Ok(c) => c,
        Err(e) => {
            let code = if e.use_stderr() { EXIT_INPUT } else { EXIT_OK };
            let text = e.render().to_string();
            let _ = if e.use_stderr() { io.stderr.write_all(text.as_bytes()) } else { io.stdout.write_all(text.as_bytes()) };
            return code;
        }
    };
    match dispatch(cli.command, io) {
        Ok(code) => code,
        Err(CliError::Input(msg)) => {
            let _ = writeln!(io.stderr, "error: {msg}");
            EXIT_INPUT
        }
        Err(CliError::Lib(e)) => {
            let _ = writeln!(io.stderr, "error: {e}");
            exit_code(&e)
        }
    }
}

fn dispatch(cmd: Command, io: &mut Io<'_>) -> CmdResult {
    match cmd {
        Command::Classify { input, format } => cmd_classify(&read_graph(&input, io)?, format, io),
        Command::Invariants { input, field, cap, format, timing } => {
            let g = read_graph(&input, io)?;
            warn_cap(cap, io);
            cmd_invariants(&g, &ReportOptions { fields: field.fields(), cap }, format, timing, io)
        }
        Command::Verify { suite, n, count, seed, exhaustive, random_any_graph, field, cap, max_facets, format } => {
            warn_cap(cap, io);
            let corpus = if random_any_graph {
                random_graph_batch(n, count, seed)?
            } else {
                let mut c: Vec<Graph> = Vec::new();
                for k in 1..=exhaustive {
                    c.extend(enumerate_vwc(k)?);
                }
                c.extend(random_vwc_batch(n, count, seed)?);
                c
            };
            let shelling = ShellingLimits { max_facets, ..ShellingLimits::default() };
            let opts = CheckOptions { fields: field.fields(), cap, shelling };
            cmd_verify(suite.into(), &corpus, &opts, format, io)
        }
        Command::Generate { mode, n, seed, density, count, input, relation } => {
            let graphs = match mode {
                ModeArg::Exhaustive => {
                    GeneratorConfig { n, seed, density, mode: Mode::Exhaustive }.validate()?;
                    enumerate_vwc(n)?.collect()
                }
                ModeArg::Random => (0..count as u64)
                    .map(|k| random_vwc(&GeneratorConfig::random(n, seed.wrapping_add(k), density)))
                    .collect::<crate::error::Result<Vec<_>>>()?,
                ModeArg::Whisker => {
                    let path = input.ok_or_else(|| CliError::Input("whisker mode needs --input".into()))?;
                    vec![whisker(&read_graph(&path, io)?)?]
                }
                ModeArg::Poset => vec![bipartite_from_poset(n, &parse_relation(&relation)?)?],
            };
            write_graphs(&graphs, io)?;
            Ok(EXIT_OK)
        }
    }
}

fn warn_cap(cap: usize, io: &mut Io<'_>) {
    if cap != DEFAULT_CAP {
        let _ = writeln!(io.stderr, "warning: homology cap set to {cap} vertices (default {DEFAULT_CAP})");
    }
}

fn read_graph(input: &str, io: &mut Io<'_>) -> std::result::Result<Graph, CliError> {
    let text = if input == "-" {
        let mut s = String::new();
        io.stdin.read_to_string(&mut s)?;
        s
    } else {
        std::fs::read_to_string(input).map_err(|e| CliError::Input(format!("{input}: {e}")))?
    };
    Ok(parse_edge_list(&text)?)
}

fn parse_relation(text: &str) -> std::result::Result<Vec<(usize, usize)>, CliError> {
    text.split(',')
        .map(str::trim)
        .filter(|s| !s.is_empty())
        .map(|pair| {
            let (a, b) = pair.split_once('<').ok_or_else(|| CliError::Input(format!("expected `i<j`, got `{pair}`")))?;
            let parse = |s: &str| s.trim().parse::<usize>().map_err(|e| CliError::Input(format!("`{pair}`: {e}")));
            Ok((parse(a)?, parse(b)?))
        })
        .collect()
}

fn write_graphs(graphs: &[Graph], io: &mut Io<'_>) -> std::io::Result<()> {
    if let [g] = graphs {
        return io.stdout.write_all(write_edge_list(g).as_bytes());
    }
    for (k, g) in graphs.iter().enumerate() {
        writeln!(io.stdout, "# graph {} {}", k + 1, digest(g))?;
        io.stdout.write_all(write_edge_list(g).as_bytes())?;
        writeln!(io.stdout)?;
    }
    Ok(())
}

#[derive(Serialize)]
struct ClassifyOutput<'a> {
    schema: u32,
    input_digest: String,
    #[serde(flatten)]
    classification: &'a crate::classify::Classification,
    labels: Option<Vec<(String, String)>>,
}

pub fn cmd_classify(g: &Graph, format: Format, io: &mut Io<'_>) -> CmdResult {
    let c = classify(g);
    let labels = c.labeling.as_ref().map(|l| l.label_pairs(g));
    match format {
        Format::Json => {
            let out = ClassifyOutput { schema: SCHEMA, input_digest: digest(g), classification: &c, labels };
            writeln!(io.stdout, "{}", serde_json::to_string_pretty(&out).expect("serializable"))?;
        }
        Format::Text => {
            writeln!(io.stdout, "status {:?}", c.status)?;
            writeln!(io.stdout, "height {}", c.height)?;
            if let Some(pairs) = labels {
                let pairs: Vec<String> = pairs.iter().map(|(x, y)| format!("({x},{y})")).collect();
                writeln!(io.stdout, "labeling {}", pairs.join(" "))?;
            }
            for v in &c.violations {
                writeln!(io.stdout, "violation {v:?}")?;
            }
        }
    }
    Ok(EXIT_OK)
}

pub fn cmd_invariants(g: &Graph, opts: &ReportOptions, format: Format, timing: bool, io: &mut Io<'_>) -> CmdResult {
    let start = Instant::now();
    let mut report = build_report(g, opts)?;
    if timing {
        report.timing_ms = Some(start.elapsed().as_millis());
    }
    let text = match format {
        Format::Json => report.to_json(),
        Format::Text => report.to_text(),
    };
    io.stdout.write_all(text.as_bytes())?;
    Ok(if report.all_pass() { EXIT_OK } else { EXIT_PROPERTY })
}

#[derive(Serialize)]
struct VerifyOutput<'a> {
    schema: u32,
    #[serde(flatten)]
    summary: &'a SuiteSummary,
}

pub fn cmd_verify(suite: Suite, corpus: &[Graph], opts: &CheckOptions, format: Format, io: &mut Io<'_>) -> CmdResult {
    let s = run_suite(suite, corpus, opts);
    match format {
        Format::Json => {
            let out = VerifyOutput { schema: SCHEMA, summary: &s };
            writeln!(io.stdout, "{}", serde_json::to_string_pretty(&out).expect("serializable"))?;
        }
        Format::Text => {
            writeln!(
                io.stdout,
                "{}: {} checked, {} passed, {} skipped, {} at oracle limit, {} failed",
                s.suite,
                s.checked,
                s.passed,
                s.skipped,
                s.limited.len(),
                s.failures.len()
            )?;
            for f in &s.failures {
                writeln!(io.stdout, "counterexample {}\n{}# {}", f.digest, f.graph, f.detail)?;
            }
            for f in &s.limited {
                writeln!(io.stdout, "limit {}: {}", f.digest, f.detail)?;
            }
        }
    }
    Ok(if !s.failures.is_empty() {
        EXIT_PROPERTY
    } else if !s.limited.is_empty() {
        EXIT_CAP
    } else {
        EXIT_OK
    })
}
