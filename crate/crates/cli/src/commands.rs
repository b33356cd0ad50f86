use std::fmt::Write as _;
use std::time::Instant;

use mullineux::engine::{
    cross_validate_with, mullineux_conjectural_with, sweep_conjecture, BucketSummary,
    Counterexample, CounterexampleKind, MullineuxError, MullineuxOptions, MullineuxTrace,
    SweepKind, SweepReport, SweepStatus,
};
use mullineux::isomorphism::{
    minimal_padding, psi_inverse_stage, psi_stage, psi_tilde_inverse_traced, psi_tilde_traced,
    LabeledSymbol, PsiStage, StopReason,
};
use mullineux::level1::{crystal_graph_export, mullineux_kleshchev};
use mullineux::level2::{is_uglov, Bicharge};
use serde::Serialize;

use crate::args::{
    ConjectureArgs, CrossArgs, ExportArgs, GraphFormat, Method, MullArgs, PsiArgs, SweepOptions,
};
use crate::report::{CsvRow, ReportDocument, Timing};
use crate::wire::{format_bipartition, format_partition};

pub const EXIT_OK: u8 = 0;
pub const EXIT_USAGE: u8 = 1;
pub const EXIT_COUNTEREXAMPLE: u8 = 2;
pub const EXIT_VIOLATION: u8 = 3;

/// What a command prints and how the process exits.
pub struct Output {
    pub stdout: String,
    pub code: u8,
}

pub type CommandResult = Result<Output, String>;

fn list(values: impl IntoIterator<Item = impl ToString>) -> String {
    values
        .into_iter()
        .map(|v| v.to_string())
        .collect::<Vec<_>>()
        .join(",")
}

// ------------------------------------------------------------------- mull

#[derive(Serialize)]
struct MullParameters {
    method: &'static str,
    e: usize,
    lambda: String,
    depth_limit: usize,
    fallback: bool,
}

#[derive(Serialize)]
struct MullResults {
    lambda: String,
    #[serde(skip_serializing_if = "Option::is_none")]
    result: Option<String>,
    #[serde(skip_serializing_if = "Option::is_none")]
    kleshchev: Option<String>,
    #[serde(skip_serializing_if = "Option::is_none")]
    recursive: Option<String>,
    #[serde(skip_serializing_if = "Option::is_none")]
    agreement: Option<bool>,
    #[serde(skip_serializing_if = "Option::is_none")]
    max_depth: Option<usize>,
    #[serde(skip_serializing_if = "Option::is_none")]
    trace: Option<MullineuxTrace>,
}

fn method_name(method: Method) -> &'static str {
    match method {
        Method::Kleshchev => "kleshchev",
        Method::Recursive => "recursive",
        Method::Both => "both",
    }
}

pub fn mull(args: &MullArgs) -> CommandResult {
    let e = args.e;
    let lambda = &args.lambda;
    if !lambda.is_e_regular(e) {
        return Err(format!("{lambda} is not {e}-regular"));
    }
    let mut command = format!(
        "mull --method {} --e {e} --lambda {}",
        method_name(args.method),
        format_partition(lambda)
    );
    if args.trace {
        command.push_str(" --trace");
    }
    if args.depth_limit != mullineux::engine::DEFAULT_DEPTH_LIMIT {
        let _ = write!(command, " --depth-limit {}", args.depth_limit);
    }
    if args.fallback {
        command.push_str(" --fallback");
    }
    let parameters = MullParameters {
        method: method_name(args.method),
        e: e.get(),
        lambda: format_partition(lambda),
        depth_limit: args.depth_limit,
        fallback: args.fallback,
    };
    let mut results = MullResults {
        lambda: format_partition(lambda),
        result: None,
        kleshchev: None,
        recursive: None,
        agreement: None,
        max_depth: None,
        trace: None,
    };
    let mut counterexamples = Vec::new();
    let violation = |kind, details: String| Counterexample {
        kind,
        e: e.get(),
        partition: lambda.clone(),
        regular: true,
        beta_set: None,
        k: None,
        details,
    };

    let oracle = match args.method {
        Method::Kleshchev | Method::Both => {
            Some(mullineux_kleshchev(lambda, e).map_err(|err| err.to_string())?)
        }
        Method::Recursive => None,
    };
    results.kleshchev = oracle.as_ref().map(format_partition);

    if args.method != Method::Kleshchev {
        let options = MullineuxOptions {
            depth_limit: args.depth_limit,
            oracle_fallback: args.fallback,
        };
        match mullineux_conjectural_with(lambda, e, &options) {
            Ok((image, trace)) => {
                results.recursive = Some(format_partition(&image));
                results.max_depth = Some(trace.max_depth());
                if args.trace {
                    results.trace = Some(trace);
                }
                if let Some(oracle) = &oracle {
                    results.agreement = Some(*oracle == image);
                    if *oracle != image {
                        counterexamples.push(violation(
                            CounterexampleKind::MullineuxMismatch,
                            format!("recursive {image} but Kleshchev {oracle}"),
                        ));
                    }
                }
            }
            Err(MullineuxError::Input(err)) => return Err(err.to_string()),
            Err(err) => {
                let kind = match err {
                    MullineuxError::DepthExceeded { .. } => CounterexampleKind::DepthExceeded,
                    _ => CounterexampleKind::ConjectureViolation,
                };
                counterexamples.push(violation(kind, err.to_string()));
                results.trace = err.trace().cloned();
                eprintln!("error: {err}");
                if kind == CounterexampleKind::DepthExceeded {
                    eprintln!("hint: raise --depth-limit or pass --fallback");
                }
            }
        }
    }

    results.result = match args.method {
        Method::Kleshchev => results.kleshchev.clone(),
        _ if counterexamples.is_empty() => results.recursive.clone(),
        _ => None,
    };
    let code = if counterexamples.is_empty() {
        EXIT_OK
    } else {
        EXIT_VIOLATION
    };
    let mut doc = ReportDocument::new(command, parameters, results);
    doc.counterexamples = counterexamples;
    Ok(Output {
        stdout: doc.to_json(),
        code,
    })
}

// ----------------------------------------------------------------- sweeps

#[derive(Serialize)]
struct SweepParametersView {
    e_list: Vec<usize>,
    max_n: usize,
    #[serde(skip_serializing_if = "Option::is_none")]
    max_k: Option<usize>,
    #[serde(skip_serializing_if = "Option::is_none")]
    regular_only: Option<bool>,
    #[serde(skip_serializing_if = "Option::is_none")]
    depth_limit: Option<usize>,
    #[serde(skip_serializing_if = "Option::is_none")]
    fallback: Option<bool>,
}

#[derive(Serialize)]
struct SweepResults {
    kind: SweepKind,
    status: SweepStatus,
    cases_checked: usize,
    buckets: Vec<BucketSummary>,
}

fn run_in_pool<T: Send>(jobs: usize, job: impl FnOnce() -> T + Send) -> Result<T, String> {
    let pool = rayon::ThreadPoolBuilder::new()
        .num_threads(jobs)
        .build()
        .map_err(|err| format!("cannot start {jobs} worker threads: {err}"))?;
    Ok(pool.install(job))
}

fn write_csv(path: &std::path::Path, buckets: &[BucketSummary]) -> Result<(), String> {
    let mut writer =
        csv::Writer::from_path(path).map_err(|err| format!("{}: {err}", path.display()))?;
    for bucket in buckets {
        writer
            .serialize(CsvRow::from(bucket))
            .map_err(|err| err.to_string())?;
    }
    writer.flush().map_err(|err| err.to_string())
}

fn sweep_output(
    command: String,
    parameters: SweepParametersView,
    options: &SweepOptions,
    report: SweepReport,
    seconds: f64,
) -> CommandResult {
    if let Some(path) = &options.csv {
        write_csv(path, &report.buckets)?;
    }
    let code = if report.is_verified() {
        EXIT_OK
    } else {
        EXIT_COUNTEREXAMPLE
    };
    if !report.is_verified() {
        eprintln!("found {} counterexample(s)", report.counterexamples.len());
    }
    let timing = options.timings.then(|| Timing {
        total_seconds: seconds,
        buckets: report.timings.clone().unwrap_or_default(),
    });
    let results = SweepResults {
        kind: report.kind,
        status: report.status,
        cases_checked: report.cases_checked,
        buckets: report.buckets,
    };
    let mut doc = ReportDocument::new(command, parameters, results);
    doc.counterexamples = report.counterexamples;
    doc.timing = timing;
    Ok(Output {
        stdout: doc.to_json(),
        code,
    })
}

fn sweep_command(name: &str, options: &SweepOptions) -> String {
    let mut command = format!("{name} --e {} --max-n {}", list(&options.e), options.max_n);
    if options.timings {
        command.push_str(" --timings");
    }
    command
}

pub fn verify_conjecture(args: &ConjectureArgs) -> CommandResult {
    let options = &args.sweep;
    let mut command = sweep_command("verify-conjecture", options);
    let _ = write!(command, " --max-k {}", args.max_k);
    if args.regular_only {
        command.push_str(" --regular-only");
    }
    let start = Instant::now();
    let report = run_in_pool(options.jobs, || {
        sweep_conjecture(&options.e, options.max_n, args.max_k, args.regular_only)
    })?;
    let parameters = SweepParametersView {
        e_list: report.parameters.e_list.clone(),
        max_n: options.max_n,
        max_k: Some(args.max_k),
        regular_only: Some(args.regular_only),
        depth_limit: None,
        fallback: None,
    };
    sweep_output(
        command,
        parameters,
        options,
        report,
        start.elapsed().as_secs_f64(),
    )
}

pub fn cross_validate(args: &CrossArgs) -> CommandResult {
    let options = &args.sweep;
    let mut command = sweep_command("cross-validate", options);
    let _ = write!(command, " --depth-limit {}", args.depth_limit);
    if args.fallback {
        command.push_str(" --fallback");
    }
    let engine_options = MullineuxOptions {
        depth_limit: args.depth_limit,
        oracle_fallback: args.fallback,
    };
    let start = Instant::now();
    let report = run_in_pool(options.jobs, || {
        cross_validate_with(&options.e, options.max_n, &engine_options)
    })?;
    let parameters = SweepParametersView {
        e_list: report.parameters.e_list.clone(),
        max_n: options.max_n,
        max_k: None,
        regular_only: None,
        depth_limit: Some(args.depth_limit),
        fallback: Some(args.fallback),
    };
    sweep_output(
        command,
        parameters,
        options,
        report,
        start.elapsed().as_secs_f64(),
    )
}

// -------------------------------------------------------------------- psi

#[derive(Serialize)]
struct PsiParameters {
    e: usize,
    charges: Bicharge,
    bipartition: String,
    inverse: bool,
    to_dominant: bool,
}

#[derive(Serialize)]
struct StageView {
    charge: Bicharge,
    padding: i64,
    before: String,
    after: String,
    source_symbol: LabeledSymbol,
    image_symbol: LabeledSymbol,
}

impl From<PsiStage> for StageView {
    fn from(stage: PsiStage) -> Self {
        StageView {
            charge: stage.charge,
            padding: stage.padding,
            before: format_bipartition(&stage.before),
            after: format_bipartition(&stage.after),
            source_symbol: stage.source_symbol,
            image_symbol: stage.image_symbol,
        }
    }
}

#[derive(Serialize)]
struct PsiResults {
    input: String,
    output: String,
    #[serde(skip_serializing_if = "Option::is_none")]
    stable_charge: Option<Bicharge>,
    #[serde(skip_serializing_if = "Option::is_none")]
    stop: Option<StopReason>,
    stages: Vec<StageView>,
}

pub fn psi(args: &PsiArgs) -> CommandResult {
    let (e, s, b) = (args.e, args.charges, &args.bipartition);
    let mut command = format!(
        "psi --e {e} --charges {},{} --bipartition {}",
        s.s1,
        s.s2,
        format_bipartition(b)
    );
    if args.inverse {
        command.push_str(" --inverse");
    }
    if args.to_dominant {
        command.push_str(" --to-dominant");
    }
    let results = if args.to_dominant {
        let trace = if args.inverse {
            psi_tilde_inverse_traced(e, s, b)
        } else {
            psi_tilde_traced(e, s, b)
        }
        .map_err(|err| err.to_string())?;
        PsiResults {
            input: format_bipartition(&trace.input),
            output: format_bipartition(&trace.output),
            stable_charge: Some(trace.stable_charge),
            stop: Some(trace.stop),
            stages: trace.stages.into_iter().map(StageView::from).collect(),
        }
    } else {
        let stage = if args.inverse {
            psi_inverse_stage(e, s, b, minimal_padding(b, s))
        } else {
            if !is_uglov(b, e, s) {
                eprintln!("warning: {b} is not an Uglov bipartition for e = {e}, s = {s}");
            }
            psi_stage(e, s, b, minimal_padding(b, s))
        }
        .map_err(|err| err.to_string())?;
        let output = if args.inverse {
            &stage.before
        } else {
            &stage.after
        };
        PsiResults {
            input: format_bipartition(b),
            output: format_bipartition(output),
            stable_charge: None,
            stop: None,
            stages: vec![StageView::from(stage)],
        }
    };
    let parameters = PsiParameters {
        e: e.get(),
        charges: s,
        bipartition: format_bipartition(b),
        inverse: args.inverse,
        to_dominant: args.to_dominant,
    };
    Ok(Output {
        stdout: ReportDocument::new(command, parameters, results).to_json(),
        code: EXIT_OK,
    })
}

// ---------------------------------------------------------- crystal export

#[derive(Serialize)]
struct ExportParameters {
    e: usize,
    max_n: usize,
}

#[derive(Serialize)]
struct EdgeView {
    source: usize,
    target: usize,
    residue: usize,
    tree: bool,
}

#[derive(Serialize)]
struct GraphResults {
    vertex_count: usize,
    edge_count: usize,
    vertices: Vec<String>,
    edges: Vec<EdgeView>,
}

fn dot_escape(label: &str) -> String {
    label.replace('\\', "\\\\").replace('"', "\\\"")
}

pub fn crystal_export(args: &ExportArgs) -> CommandResult {
    let graph = crystal_graph_export(args.e, args.max_n);
    let edges: Vec<EdgeView> = graph
        .edges
        .iter()
        .map(|edge| EdgeView {
            source: edge.source,
            target: edge.target,
            residue: edge.residue,
            tree: graph.parent[edge.target] == Some(edge.source),
        })
        .collect();
    let vertices: Vec<String> = graph.vertices.iter().map(format_partition).collect();

    let stdout = match args.format {
        GraphFormat::Json => {
            let command = format!(
                "crystal-export --e {} --max-n {} --format json",
                args.e, args.max_n
            );
            let parameters = ExportParameters {
                e: args.e.get(),
                max_n: args.max_n,
            };
            let results = GraphResults {
                vertex_count: vertices.len(),
                edge_count: edges.len(),
                vertices,
                edges,
            };
            ReportDocument::new(command, parameters, results).to_json()
        }
        GraphFormat::Dot => {
            let mut out = String::new();
            let _ = writeln!(out, "digraph crystal {{");
            let _ = writeln!(
                out,
                "  // e = {}, rank <= {}; bold arrows form the stripping tree",
                args.e, args.max_n
            );
            for (i, v) in vertices.iter().enumerate() {
                let _ = writeln!(out, "  v{i} [label=\"{}\"];", dot_escape(v));
            }
            for edge in &edges {
                let style = if edge.tree { ", style=bold" } else { "" };
                let _ = writeln!(
                    out,
                    "  v{} -> v{} [label=\"{}\"{style}];",
                    edge.source, edge.target, edge.residue
                );
            }
            out.push('}');
            out
        }
    };
    Ok(Output {
        stdout,
        code: EXIT_OK,
    })
}
