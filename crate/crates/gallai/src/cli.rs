//! Command-line front end. Every subcommand parses a graph, delegates to
//! the library, and renders a `CommandResult` either as aligned text or as
//! a single JSON document. Exit codes: 0 = ok, 1 = a requested property
//! failed (no coloring, Correct loses, internal assertion), 2 = input or
//! capacity error.

use std::fmt::Write as _;
use std::path::PathBuf;

use clap::{Args, Parser, Subcommand};
use serde::Serialize;

use crate::at::{self, EulerianCensus, OrientationReport};
use crate::coloring::{self, ListAssignment, ListSizeMode, TrialReport};
use crate::error::Error;
use crate::graph::{self, Format, Graph};
use crate::paint::{self, SolveMode};
use crate::structure::{self, BlockKind, CycleWitness, VertexOrdering};

#[derive(Debug, Parser)]
#[command(name = "gallai", version, about = "Block structure, certifying orientations, list coloring and paintability checks for small graphs")]
pub struct Cli {
    #[command(subcommand)]
    command: Command,
}

#[derive(Debug, Args)]
struct Common {
    /// Graph input file
    #[arg(long)]
    input: PathBuf,
    /// Input format: edgelist or dimacs
    #[arg(long, default_value = "edgelist")]
    format: String,
    /// Emit the result as a single JSON document
    #[arg(long)]
    json: bool,
}

#[derive(Debug, Subcommand)]
enum Command {
    /// Report block structure and whether the graph is a Gallai tree
    Classify {
        #[command(flatten)]
        common: Common,
    },
    /// List blocks and cut vertices
    Blocks {
        #[command(flatten)]
        common: Common,
    },
    /// Find an induced even cycle with at most one chord
    Witness {
        #[command(flatten)]
        common: Common,
    },
    /// Predecessor ordering of the vertices from a root
    Order {
        #[command(flatten)]
        common: Common,
        #[arg(long, default_value_t = 0)]
        root: usize,
    },
    /// Build the certifying orientation and its full report
    Orient {
        #[command(flatten)]
        common: Common,
    },
    /// Eulerian subgraph parity census of the certifying orientation
    Census {
        #[command(flatten)]
        common: Common,
    },
    /// Graph-polynomial coefficient oracle, cross-checked with the census
    Coeff {
        #[command(flatten)]
        common: Common,
    },
    /// Color the graph from lists given in a file
    Color {
        #[command(flatten)]
        common: Common,
        /// Lists file: one line per vertex, "v: c1,c2,..."
        #[arg(long)]
        lists: PathBuf,
    },
    /// Exhaustive choosability check (tiny graphs only)
    Choosable {
        #[command(flatten)]
        common: Common,
        /// List sizes: "degree" or a fixed integer
        #[arg(long, default_value = "degree")]
        sizes: String,
        /// Disable symmetry pruning (audit mode, much slower)
        #[arg(long)]
        audit: bool,
    },
    /// Exact paint-game solve
    Paint {
        #[command(flatten)]
        common: Common,
        /// Eraser setup: "degree" (degree - 1 erasers) or a fixed k
        #[arg(long, default_value = "degree")]
        sizes: String,
        /// Paintability number k (overrides --sizes)
        #[arg(long)]
        k: Option<i64>,
        /// Unrestricted move enumeration for Mrs. Correct
        #[arg(long)]
        audit: bool,
    },
    /// Full run: classify, witness, order, orient, census, random trials,
    /// degree paintability
    Pipeline {
        #[command(flatten)]
        common: Common,
        #[arg(long, default_value_t = 100)]
        trials: u64,
        /// RNG seed; required with --json
        #[arg(long)]
        seed: Option<u64>,
    },
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize)]
#[serde(rename_all = "snake_case")]
pub enum Status {
    Ok,
    PropertyFailed,
    InputError,
    CapacityError,
}

impl Status {
    pub fn exit_code(self) -> i32 {
        match self {
            Status::Ok => 0,
            Status::PropertyFailed => 1,
            Status::InputError | Status::CapacityError => 2,
        }
    }
}

#[derive(Debug, Serialize)]
pub struct CommandResult {
    pub status: Status,
    pub payload: Payload,
}

#[derive(Debug, Serialize)]
#[serde(rename_all = "snake_case")]
pub enum Payload {
    Error {
        message: String,
    },
    Classify(ClassifyPayload),
    Blocks(BlocksPayload),
    Witness(WitnessPayload),
    Order(OrderPayload),
    Orient(OrientPayload),
    Census(CensusPayload),
    Coeff(CoeffPayload),
    Color(ColorPayload),
    Choosable(ChoosablePayload),
    Paint(PaintPayload),
    Pipeline(PipelinePayload),
}

#[derive(Debug, Serialize)]
pub struct BlockInfo {
    pub vertices: Vec<usize>,
    pub kind: BlockKind,
}

#[derive(Debug, Serialize)]
pub struct ClassifyPayload {
    pub vertex_count: usize,
    pub edge_count: usize,
    pub max_degree: usize,
    pub connected: bool,
    pub blocks: Vec<BlockInfo>,
    pub cut_vertices: Vec<usize>,
    /// None when the graph is disconnected.
    pub gallai_tree: Option<bool>,
}

#[derive(Debug, Serialize)]
pub struct BlocksPayload {
    pub blocks: Vec<BlockInfo>,
    pub cut_vertices: Vec<usize>,
}

#[derive(Debug, Serialize)]
pub struct WitnessPayload {
    pub cycle: Vec<usize>,
    pub chord: Option<(usize, usize)>,
}

#[derive(Debug, Serialize)]
pub struct OrderPayload {
    pub root: usize,
    pub order: Vec<usize>,
}

#[derive(Debug, Serialize)]
pub struct OrientPayload {
    pub directed_edges: Vec<(u32, u32)>,
    pub in_degrees: Vec<usize>,
    pub min_out_degree: usize,
    pub census: EulerianCensus,
    pub witness: WitnessPayload,
    pub ordering: OrderPayload,
}

#[derive(Debug, Serialize)]
pub struct CensusPayload {
    pub directed_edges: Vec<(u32, u32)>,
    pub census: EulerianCensus,
}

#[derive(Debug, Serialize)]
pub struct CoeffPayload {
    pub coefficient: i64,
    pub census_difference: i64,
    pub absolute_values_match: bool,
}

#[derive(Debug, Serialize)]
pub struct ColorPayload {
    pub lists: Vec<Vec<u32>>,
    pub coloring: Option<Vec<u32>>,
}

#[derive(Debug, Serialize)]
pub struct ChoosablePayload {
    pub sizes: Vec<usize>,
    pub audit: bool,
    pub choosable: bool,
}

#[derive(Debug, Serialize)]
pub struct PaintPayload {
    pub erasers: Vec<i64>,
    pub audit: bool,
    pub paintable: bool,
}

#[derive(Debug, Serialize)]
pub struct PipelinePayload {
    pub classify: ClassifyPayload,
    pub orient: OrientPayload,
    pub census_shape_ok: bool,
    pub trials: TrialReport,
    /// None when the graph exceeds the game solver capacity.
    pub degree_paintable: Option<bool>,
    pub assertions: Vec<Assertion>,
}

#[derive(Debug, Serialize)]
pub struct Assertion {
    pub name: String,
    pub passed: bool,
}

fn error_result(err: &Error) -> CommandResult {
    let status = match err {
        Error::Capacity(_) => Status::CapacityError,
        Error::Logic(_) => Status::PropertyFailed,
        _ => Status::InputError,
    };
    CommandResult {
        status,
        payload: Payload::Error {
            message: err.to_string(),
        },
    }
}

fn load_graph(common: &Common) -> Result<Graph, Error> {
    let format: Format = common.format.parse()?;
    let text = std::fs::read_to_string(&common.input).map_err(|e| {
        Error::Validation(format!("cannot read {}: {e}", common.input.display()))
    })?;
    graph::parse(&text, format)
}

fn classify_payload(g: &Graph) -> Result<ClassifyPayload, Error> {
    let decomposition = structure::block_decomposition(g);
    let blocks = decomposition
        .blocks
        .iter()
        .map(|b| {
            Ok(BlockInfo {
                vertices: b.clone(),
                kind: structure::classify_block(g, b)?,
            })
        })
        .collect::<Result<Vec<_>, Error>>()?;
    let connected = g.is_connected();
    let gallai_tree = if connected {
        Some(blocks.iter().all(|b| b.kind != BlockKind::Other))
    } else {
        None
    };
    Ok(ClassifyPayload {
        vertex_count: g.vertex_count(),
        edge_count: g.edge_count(),
        max_degree: g.max_degree(),
        connected,
        blocks,
        cut_vertices: decomposition.cut_vertices,
        gallai_tree,
    })
}

fn witness_payload(w: &CycleWitness) -> WitnessPayload {
    WitnessPayload {
        cycle: w.cycle.clone(),
        chord: w.chord,
    }
}

fn order_payload(o: &VertexOrdering) -> OrderPayload {
    OrderPayload {
        root: o.root,
        order: o.order.clone(),
    }
}

fn orient_payload(report: &OrientationReport) -> OrientPayload {
    OrientPayload {
        directed_edges: report.orientation.directed_edges().to_vec(),
        in_degrees: report.in_degree_per_vertex.clone(),
        min_out_degree: report.min_out_degree,
        census: report.census,
        witness: witness_payload(&report.witness),
        ordering: order_payload(&report.ordering),
    }
}

fn census_shape_ok(report: &OrientationReport) -> bool {
    let counts = (report.census.even_count, report.census.odd_count);
    if report.witness.chord.is_none() {
        counts == (2, 0)
    } else {
        counts == (3, 0) || counts == (2, 1)
    }
}

fn parse_lists_file(path: &PathBuf, g: &Graph) -> Result<Vec<Vec<u32>>, Error> {
    let text = std::fs::read_to_string(path)
        .map_err(|e| Error::Validation(format!("cannot read {}: {e}", path.display())))?;
    let mut lists: Vec<Option<Vec<u32>>> = vec![None; g.vertex_count()];
    for (lineno, raw) in text.lines().enumerate() {
        let line = raw.trim();
        if line.is_empty() || line.starts_with('#') {
            continue;
        }
        let (name, colors) = line.split_once(':').ok_or(Error::Parse {
            line: lineno + 1,
            msg: "expected 'vertex: c1,c2,...'".into(),
        })?;
        let name = name.trim();
        let v = match name.parse::<usize>() {
            Ok(v) if v < g.vertex_count() => v,
            _ => g
                .labels()
                .and_then(|labels| labels.iter().position(|l| l == name))
                .ok_or(Error::Parse {
                    line: lineno + 1,
                    msg: format!("unknown vertex '{name}'"),
                })?,
        };
        let parsed: Result<Vec<u32>, _> = colors
            .split(',')
            .map(|c| c.trim().parse::<u32>())
            .collect();
        let parsed = parsed.map_err(|_| Error::Parse {
            line: lineno + 1,
            msg: "bad color list".into(),
        })?;
        lists[v] = Some(parsed);
    }
    lists
        .into_iter()
        .enumerate()
        .map(|(v, l)| l.ok_or(Error::Validation(format!("no list given for vertex {v}"))))
        .collect()
}

fn size_function(spec: &str, g: &Graph) -> Result<Vec<usize>, Error> {
    match spec {
        "degree" => Ok(g.degrees()),
        other => {
            let k: usize = other.parse().map_err(|_| {
                Error::Validation(format!("--sizes must be 'degree' or an integer, got '{other}'"))
            })?;
            Ok(vec![k; g.vertex_count()])
        }
    }
}

fn execute(command: &Command) -> CommandResult {
    match try_execute(command) {
        Ok(result) => result,
        Err(err) => error_result(&err),
    }
}

fn ok(payload: Payload) -> CommandResult {
    CommandResult {
        status: Status::Ok,
        payload,
    }
}

fn try_execute(command: &Command) -> Result<CommandResult, Error> {
    match command {
        Command::Classify { common } => {
            let g = load_graph(common)?;
            Ok(ok(Payload::Classify(classify_payload(&g)?)))
        }
        Command::Blocks { common } => {
            let g = load_graph(common)?;
            let payload = classify_payload(&g)?;
            Ok(ok(Payload::Blocks(BlocksPayload {
                blocks: payload.blocks,
                cut_vertices: payload.cut_vertices,
            })))
        }
        Command::Witness { common } => {
            let g = load_graph(common)?;
            let w = structure::find_witness_cycle(&g)?;
            Ok(ok(Payload::Witness(witness_payload(&w))))
        }
        Command::Order { common, root } => {
            let g = load_graph(common)?;
            let o = structure::spanning_ordering(&g, *root)?;
            Ok(ok(Payload::Order(order_payload(&o))))
        }
        Command::Orient { common } => {
            let g = load_graph(common)?;
            let report = at::build_brooks_orientation(&g)?;
            Ok(ok(Payload::Orient(orient_payload(&report))))
        }
        Command::Census { common } => {
            let g = load_graph(common)?;
            let report = at::build_brooks_orientation(&g)?;
            Ok(ok(Payload::Census(CensusPayload {
                directed_edges: report.orientation.directed_edges().to_vec(),
                census: report.census,
            })))
        }
        Command::Coeff { common } => {
            let g = load_graph(common)?;
            let report = at::build_brooks_orientation(&g)?;
            let coefficient = at::polynomial_coefficient(&report.orientation)?;
            let matches = coefficient.unsigned_abs() == report.census.difference.unsigned_abs();
            Ok(CommandResult {
                status: if matches {
                    Status::Ok
                } else {
                    Status::PropertyFailed
                },
                payload: Payload::Coeff(CoeffPayload {
                    coefficient,
                    census_difference: report.census.difference,
                    absolute_values_match: matches,
                }),
            })
        }
        Command::Color { common, lists } => {
            let g = load_graph(common)?;
            let lists = parse_lists_file(lists, &g)?;
            let assignment = ListAssignment::from_colors(lists.clone())?;
            let coloring = coloring::find_list_coloring(&g, &assignment)?;
            Ok(CommandResult {
                status: if coloring.is_some() {
                    Status::Ok
                } else {
                    Status::PropertyFailed
                },
                payload: Payload::Color(ColorPayload { lists, coloring }),
            })
        }
        Command::Choosable {
            common,
            sizes,
            audit,
        } => {
            let g = load_graph(common)?;
            let f = size_function(sizes, &g)?;
            let opts = coloring::ChoosabilityOptions {
                symmetry_pruning: !audit,
            };
            let choosable = coloring::is_f_choosable_with(&g, &f, opts)?;
            Ok(CommandResult {
                status: if choosable {
                    Status::Ok
                } else {
                    Status::PropertyFailed
                },
                payload: Payload::Choosable(ChoosablePayload {
                    sizes: f,
                    audit: *audit,
                    choosable,
                }),
            })
        }
        Command::Paint {
            common,
            sizes,
            k,
            audit,
        } => {
            let g = load_graph(common)?;
            let mode = if *audit {
                SolveMode::Audit
            } else {
                SolveMode::Restricted
            };
            let (erasers, paintable) = match k {
                Some(k) => (
                    vec![*k - 1; g.vertex_count()],
                    paint::is_k_paintable_with_mode(&g, *k, mode)?,
                ),
                None => match sizes.as_str() {
                    "degree" => (
                        g.degrees().iter().map(|&d| d as i64 - 1).collect(),
                        paint::is_degree_paintable_with_mode(&g, mode)?,
                    ),
                    other => {
                        let k: i64 = other.parse().map_err(|_| {
                            Error::Validation(format!(
                                "--sizes must be 'degree' or an integer, got '{other}'"
                            ))
                        })?;
                        (
                            vec![k - 1; g.vertex_count()],
                            paint::is_k_paintable_with_mode(&g, k, mode)?,
                        )
                    }
                },
            };
            Ok(CommandResult {
                status: if paintable {
                    Status::Ok
                } else {
                    Status::PropertyFailed
                },
                payload: Payload::Paint(PaintPayload {
                    erasers,
                    audit: *audit,
                    paintable,
                }),
            })
        }
        Command::Pipeline {
            common,
            trials,
            seed,
        } => {
            if common.json && seed.is_none() {
                return Err(Error::Validation(
                    "--seed is required with --json so reports are reproducible".into(),
                ));
            }
            let seed = seed.unwrap_or(0);
            let g = load_graph(common)?;
            let classify = classify_payload(&g)?;
            if !classify.connected {
                return Err(Error::Domain(
                    "pipeline requires a connected graph".into(),
                ));
            }
            if classify.gallai_tree == Some(true) {
                return Err(Error::Domain(
                    "graph is a Gallai tree; the certifying orientation does not exist".into(),
                ));
            }
            let report = at::build_brooks_orientation(&g)?;
            let shape_ok = census_shape_ok(&report);
            let trial_report = coloring::random_degree_list_trial(
                &g,
                ListSizeMode::Degree,
                (g.max_degree() + 2) as u32,
                *trials,
                seed,
            )?;
            let degree_paintable = if g.vertex_count() <= paint::SOLVER_MAX_VERTICES {
                Some(paint::is_degree_paintable(&g)?)
            } else {
                None
            };
            let assertions = vec![
                Assertion {
                    name: "every vertex has an out-going edge".into(),
                    passed: report.min_out_degree >= 1,
                },
                Assertion {
                    name: "even and odd Eulerian counts differ".into(),
                    passed: report.census.difference != 0,
                },
                Assertion {
                    name: "census matches the expected shape".into(),
                    passed: shape_ok,
                },
                Assertion {
                    name: "no random degree-list trial failed".into(),
                    passed: trial_report.failure_count == 0,
                },
                Assertion {
                    name: "degree paintable (skipped counts as pass)".into(),
                    passed: degree_paintable.unwrap_or(true),
                },
            ];
            let all_passed = assertions.iter().all(|a| a.passed);
            Ok(CommandResult {
                status: if all_passed {
                    Status::Ok
                } else {
                    Status::PropertyFailed
                },
                payload: Payload::Pipeline(PipelinePayload {
                    classify,
                    orient: orient_payload(&report),
                    census_shape_ok: shape_ok,
                    trials: trial_report,
                    degree_paintable,
                    assertions,
                }),
            })
        }
    }
}

fn fmt_vec<T: std::fmt::Display>(items: &[T]) -> String {
    let strs: Vec<String> = items.iter().map(|x| x.to_string()).collect();
    format!("[{}]", strs.join(", "))
}

fn render_classify(out: &mut String, p: &ClassifyPayload) {
    let _ = writeln!(out, "vertices:      {}", p.vertex_count);
    let _ = writeln!(out, "edges:         {}", p.edge_count);
    let _ = writeln!(out, "max degree:    {}", p.max_degree);
    let _ = writeln!(out, "connected:     {}", p.connected);
    for b in &p.blocks {
        let _ = writeln!(out, "block:         {} ({:?})", fmt_vec(&b.vertices), b.kind);
    }
    let _ = writeln!(out, "cut vertices:  {}", fmt_vec(&p.cut_vertices));
    match p.gallai_tree {
        Some(g) => {
            let _ = writeln!(out, "gallai tree:   {g}");
        }
        None => {
            let _ = writeln!(out, "gallai tree:   n/a (disconnected)");
        }
    }
}

fn render_witness(out: &mut String, p: &WitnessPayload) {
    let _ = writeln!(out, "witness cycle: {}", fmt_vec(&p.cycle));
    match p.chord {
        Some((a, b)) => {
            let _ = writeln!(out, "chord:         ({a}, {b})");
        }
        None => {
            let _ = writeln!(out, "chord:         none");
        }
    }
}

fn render_order(out: &mut String, p: &OrderPayload) {
    let _ = writeln!(out, "root:          {}", p.root);
    let _ = writeln!(out, "order:         {}", fmt_vec(&p.order));
}

fn render_census(out: &mut String, c: &EulerianCensus) {
    let _ = writeln!(out, "even eulerian: {}", c.even_count);
    let _ = writeln!(out, "odd eulerian:  {}", c.odd_count);
    let _ = writeln!(out, "difference:    {}", c.difference);
    let _ = writeln!(out, "subsets:       {}", c.edge_subsets_examined);
}

fn render_orient(out: &mut String, p: &OrientPayload) {
    let arcs: Vec<String> = p
        .directed_edges
        .iter()
        .map(|(t, h)| format!("{t}->{h}"))
        .collect();
    let _ = writeln!(out, "orientation:   [{}]", arcs.join(", "));
    let _ = writeln!(out, "in-degrees:    {}", fmt_vec(&p.in_degrees));
    let _ = writeln!(out, "min out-deg:   {}", p.min_out_degree);
    render_witness(out, &p.witness);
    render_order(out, &p.ordering);
    render_census(out, &p.census);
}

fn render_trials(out: &mut String, t: &TrialReport) {
    let _ = writeln!(out, "trials:        {}", t.trials);
    let _ = writeln!(out, "failures:      {}", t.failure_count);
    let _ = writeln!(out, "seed:          {}", t.seed);
    let _ = writeln!(out, "palette:       {}", t.palette_size);
    let _ = writeln!(out, "fatal:         {}", t.fatal);
    for f in &t.failures {
        let _ = writeln!(out, "failed trial:  {} lists {:?}", f.trial, f.lists);
    }
}

fn render(result: &CommandResult) -> String {
    let mut out = String::new();
    let status = match result.status {
        Status::Ok => "ok",
        Status::PropertyFailed => "property_failed",
        Status::InputError => "input_error",
        Status::CapacityError => "capacity_error",
    };
    match &result.payload {
        Payload::Error { message } => {
            let _ = writeln!(out, "error:         {message}");
        }
        Payload::Classify(p) => render_classify(&mut out, p),
        Payload::Blocks(p) => {
            for b in &p.blocks {
                let _ = writeln!(out, "block:         {} ({:?})", fmt_vec(&b.vertices), b.kind);
            }
            let _ = writeln!(out, "cut vertices:  {}", fmt_vec(&p.cut_vertices));
        }
        Payload::Witness(p) => render_witness(&mut out, p),
        Payload::Order(p) => render_order(&mut out, p),
        Payload::Orient(p) => render_orient(&mut out, p),
        Payload::Census(p) => {
            let arcs: Vec<String> = p
                .directed_edges
                .iter()
                .map(|(t, h)| format!("{t}->{h}"))
                .collect();
            let _ = writeln!(out, "orientation:   [{}]", arcs.join(", "));
            render_census(&mut out, &p.census);
        }
        Payload::Coeff(p) => {
            let _ = writeln!(out, "coefficient:   {}", p.coefficient);
            let _ = writeln!(out, "census diff:   {}", p.census_difference);
            let _ = writeln!(out, "abs match:     {}", p.absolute_values_match);
        }
        Payload::Color(p) => {
            for (v, l) in p.lists.iter().enumerate() {
                let _ = writeln!(out, "list {v}:       {}", fmt_vec(l));
            }
            match &p.coloring {
                Some(c) => {
                    let _ = writeln!(out, "coloring:      {}", fmt_vec(c));
                }
                None => {
                    let _ = writeln!(out, "coloring:      none exists");
                }
            }
        }
        Payload::Choosable(p) => {
            let _ = writeln!(out, "sizes:         {}", fmt_vec(&p.sizes));
            let _ = writeln!(out, "audit:         {}", p.audit);
            let _ = writeln!(out, "choosable:     {}", p.choosable);
        }
        Payload::Paint(p) => {
            let _ = writeln!(out, "erasers:       {}", fmt_vec(&p.erasers));
            let _ = writeln!(out, "audit:         {}", p.audit);
            let _ = writeln!(out, "paintable:     {}", p.paintable);
        }
        Payload::Pipeline(p) => {
            render_classify(&mut out, &p.classify);
            render_orient(&mut out, &p.orient);
            let _ = writeln!(out, "census shape:  {}", p.census_shape_ok);
            render_trials(&mut out, &p.trials);
            match p.degree_paintable {
                Some(v) => {
                    let _ = writeln!(out, "deg paintable: {v}");
                }
                None => {
                    let _ = writeln!(out, "deg paintable: skipped (capacity)");
                }
            }
            for a in &p.assertions {
                let _ = writeln!(
                    out,
                    "{} {}",
                    if a.passed { "PASS" } else { "FAIL" },
                    a.name
                );
            }
        }
    }
    let _ = writeln!(out, "status:        {status}");
    out
}

/// Runs a full command line (excluding argv[0]) and returns the exit code
/// and the text that would be printed.
pub fn run(args: &[&str]) -> (i32, String) {
    let mut argv = vec!["gallai"];
    argv.extend_from_slice(args);
    let cli = match Cli::try_parse_from(argv) {
        Ok(cli) => cli,
        Err(e) => {
            // clap handles --help/--version with exit code 0
            let code = if e.use_stderr() { 2 } else { 0 };
            return (code, e.to_string());
        }
    };
    let json = match &cli.command {
        Command::Classify { common }
        | Command::Blocks { common }
        | Command::Witness { common }
        | Command::Order { common, .. }
        | Command::Orient { common }
        | Command::Census { common }
        | Command::Coeff { common }
        | Command::Color { common, .. }
        | Command::Choosable { common, .. }
        | Command::Paint { common, .. }
        | Command::Pipeline { common, .. } => common.json,
    };
    let result = execute(&cli.command);
    let output = if json {
        let mut s = serde_json::to_string(&result).expect("report serialization cannot fail");
        s.push('\n');
        s
    } else {
        render(&result)
    };
    (result.status.exit_code(), output)
}
