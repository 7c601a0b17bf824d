//! Command-line frontend: argument grammar, dispatch and exit codes.
//!
//! Exit codes: 0 success, 1 verification or covering failure (or a
//! non-exhaustive search), 2 usage error, 3 I/O or parse error.

use std::collections::BTreeSet;
use std::ffi::OsString;
use std::fmt::Write as _;
use std::io::Write;
use std::path::{Path, PathBuf};
use std::time::Duration;

use clap::{Args, Parser, Subcommand, ValueEnum};
use hypercover::constructions::{self, ClaimReport, ConstructionId};
use hypercover::cover::{self, CoverReport};
use hypercover::format::{self, EdgeList};
use hypercover::koenig::{self, EdgeColoring};
use hypercover::oracle::{self, Budget, SearchResult, SpotCheckReport};
use hypercover::{Error, Graph, Pattern, TriGraph, Vertex};
use serde_json::json;

pub const EXIT_OK: i32 = 0;
pub const EXIT_FAILURE: i32 = 1;
pub const EXIT_USAGE: i32 = 2;
pub const EXIT_IO: i32 = 3;

#[derive(Debug, Parser)]
#[command(name = "hypercover", version, about = "Codegree covering thresholds for 3-graphs")]
struct Cli {
    #[command(subcommand)]
    command: Command,
}

#[derive(Debug, Subcommand)]
enum Command {
    /// Build a construction and write it in edge-list format.
    Construct {
        #[command(flatten)]
        family: FamilyArgs,
        #[arg(long)]
        out: PathBuf,
    },
    /// Check a construction's claimed properties.
    Verify {
        #[command(flatten)]
        family: FamilyArgs,
        /// Verify this file instead of a freshly built construction.
        #[arg(long = "in")]
        input: Option<PathBuf>,
        #[arg(long, value_enum, default_value_t = OutputFormat::Text)]
        format: OutputFormat,
    },
    /// Decide which vertices lie in a copy of a pattern.
    Covering {
        #[arg(long = "in")]
        input: PathBuf,
        #[arg(long)]
        pattern: String,
        /// Vertex index, or `x` for the file's distinguished vertex.
        #[arg(long, conflicts_with = "all")]
        vertex: Option<String>,
        #[arg(long)]
        all: bool,
        #[arg(long)]
        threads: Option<usize>,
        #[arg(long, value_enum, default_value_t = OutputFormat::Text)]
        format: OutputFormat,
    },
    /// Split a bipartite graph's edges into maximum-degree many matchings.
    Koenig {
        #[arg(long = "in")]
        input: PathBuf,
        /// File with one `A v...` line and one `B v...` line.
        #[arg(long)]
        sides: PathBuf,
        #[arg(long, value_enum, default_value_t = OutputFormat::Text)]
        format: OutputFormat,
    },
    /// Exhaustive search for the largest minimum codegree with an uncovered vertex.
    Oracle {
        #[arg(long)]
        n: usize,
        #[arg(long)]
        pattern: String,
        #[arg(long)]
        budget_nodes: Option<u64>,
        #[arg(long)]
        budget_seconds: Option<f64>,
        #[arg(long, default_value_t = 1)]
        threads: usize,
        /// Disable copy-completion pruning.
        #[arg(long)]
        no_prune: bool,
        /// Largest n accepted.
        #[arg(long, default_value_t = oracle::DEFAULT_HARD_CAP)]
        cap: usize,
        #[arg(long, value_enum, default_value_t = OutputFormat::Text)]
        format: OutputFormat,
    },
    /// Sample random 3-graphs with minimum codegree above t and look for uncovered vertices.
    Spotcheck {
        #[arg(long)]
        n: usize,
        #[arg(long)]
        pattern: String,
        #[arg(long)]
        t: usize,
        #[arg(long, default_value_t = 1000)]
        samples: usize,
        #[arg(long, default_value_t = oracle::DEFAULT_SEED)]
        seed: u64,
        #[arg(long, value_enum, default_value_t = OutputFormat::Text)]
        format: OutputFormat,
    },
    /// Convert between the edge-list and JSON formats.
    Export {
        #[arg(long = "in")]
        input: PathBuf,
        #[arg(long, value_enum)]
        format: ExportFormat,
        /// Write here instead of standard output.
        #[arg(long)]
        out: Option<PathBuf>,
    },
}

#[derive(Debug, Args)]
struct FamilyArgs {
    #[arg(long, value_enum)]
    family: Family,
    #[arg(long)]
    m: Option<usize>,
    #[arg(long)]
    n: Option<usize>,
    /// Part sizes `a,b,c` for T.
    #[arg(long, value_delimiter = ',')]
    sizes: Option<Vec<usize>>,
}

#[derive(Clone, Copy, Debug, ValueEnum)]
#[value(rename_all = "verbatim")]
enum Family {
    G1,
    G2,
    G3,
    H1,
    H2,
    H3,
    T,
    H4,
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, ValueEnum)]
enum OutputFormat {
    Text,
    Json,
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, ValueEnum)]
enum ExportFormat {
    Json,
    Hg,
}

/// A failure with its exit code.
#[derive(Debug)]
struct Failure {
    code: i32,
    msg: String,
}

impl Failure {
    fn usage(msg: impl Into<String>) -> Self {
        Self {
            code: EXIT_USAGE,
            msg: msg.into(),
        }
    }

    fn io(msg: impl Into<String>) -> Self {
        Self {
            code: EXIT_IO,
            msg: msg.into(),
        }
    }
}

impl From<Error> for Failure {
    fn from(e: Error) -> Self {
        let code = match e {
            Error::InvalidArgument(_) | Error::UnsupportedResidue { .. } => EXIT_USAGE,
            Error::Parse { .. } | Error::Io(_) | Error::Json(_) => EXIT_IO,
        };
        Self {
            code,
            msg: e.to_string(),
        }
    }
}

type Outcome = std::result::Result<i32, Failure>;

/// Runs one invocation. `args` includes the program name.
pub fn run<I, T>(args: I, out: &mut dyn Write, err: &mut dyn Write) -> i32
where
    I: IntoIterator<Item = T>,
    T: Into<OsString> + Clone,
{
    let cli = match Cli::try_parse_from(args) {
        Ok(cli) => cli,
        Err(e) => {
            use clap::error::ErrorKind;
            return match e.kind() {
                ErrorKind::DisplayHelp | ErrorKind::DisplayVersion => {
                    let _ = write!(out, "{e}");
                    EXIT_OK
                }
                _ => {
                    let _ = write!(err, "{e}");
                    EXIT_USAGE
                }
            };
        }
    };
    match dispatch(cli.command, out) {
        Ok(code) => code,
        Err(f) => {
            let _ = writeln!(err, "error: {}", f.msg);
            f.code
        }
    }
}

fn dispatch(command: Command, out: &mut dyn Write) -> Outcome {
    match command {
        Command::Construct { family, out: path } => construct(&family, &path, out),
        Command::Verify { family, input, format } => verify(&family, input.as_deref(), format, out),
        Command::Covering {
            input,
            pattern,
            vertex,
            all,
            threads,
            format,
        } => covering(&input, &pattern, vertex.as_deref(), all, threads, format, out),
        Command::Koenig { input, sides, format } => koenig_cmd(&input, &sides, format, out),
        Command::Oracle {
            n,
            pattern,
            budget_nodes,
            budget_seconds,
            threads,
            no_prune,
            cap,
            format,
        } => {
            let budget_time = match budget_seconds {
                Some(s) if !(s.is_finite() && s >= 0.0) => {
                    return Err(Failure::usage(format!(
                        "--budget-seconds must be a non-negative number, got {s}"
                    )))
                }
                s => s.map(Duration::from_secs_f64),
            };
            let budget = Budget {
                max_nodes: budget_nodes,
                max_time: budget_time,
                threads: threads.max(1),
                prune: !no_prune,
                hard_cap: cap,
            };
            oracle_cmd(n, &pattern, &budget, format, out)
        }
        Command::Spotcheck {
            n,
            pattern,
            t,
            samples,
            seed,
            format,
        } => spotcheck(n, &pattern, t, samples, seed, format, out),
        Command::Export {
            input,
            format,
            out: path,
        } => export(&input, format, path.as_deref(), out),
    }
}

fn emit(out: &mut dyn Write, text: &str) -> std::result::Result<(), Failure> {
    out.write_all(text.as_bytes())
        .map_err(|e| Failure::io(format!("writing output: {e}")))
}

fn read_file(path: &Path) -> std::result::Result<String, Failure> {
    std::fs::read_to_string(path).map_err(|e| Failure::io(format!("{}: {e}", path.display())))
}

/// Reads an edge-list or JSON file, chosen by the first non-blank character.
fn read_object(path: &Path) -> std::result::Result<EdgeList, Failure> {
    let text = read_file(path)?;
    let parsed = if text.trim_start().starts_with('{') {
        format::from_json(&text)
    } else {
        format::parse(&text)
    };
    parsed.map_err(|e| Failure::io(format!("{}: {e}", path.display())))
}

fn read_trigraph(path: &Path) -> std::result::Result<TriGraph, Failure> {
    match read_object(path)? {
        EdgeList::TriGraph(h) => Ok(h),
        EdgeList::Graph(_) => Err(Failure::io(format!(
            "{}: expected a 3-graph, found a graph",
            path.display()
        ))),
    }
}

fn read_graph(path: &Path) -> std::result::Result<Graph, Failure> {
    match read_object(path)? {
        EdgeList::Graph(g) => Ok(g),
        EdgeList::TriGraph(_) => Err(Failure::io(format!(
            "{}: expected a graph, found a 3-graph",
            path.display()
        ))),
    }
}

fn pattern(name: &str) -> std::result::Result<Pattern, Failure> {
    Pattern::builtin(name).map_err(Failure::from)
}

fn construction_id(args: &FamilyArgs) -> std::result::Result<ConstructionId, Failure> {
    let uses = match args.family {
        Family::G1 | Family::G2 | Family::G3 => "",
        Family::H1 | Family::H2 | Family::H3 => "m",
        Family::T => "sizes",
        Family::H4 => "n",
    };
    for (flag, given) in [
        ("m", args.m.is_some()),
        ("n", args.n.is_some()),
        ("sizes", args.sizes.is_some()),
    ] {
        if given && flag != uses {
            return Err(Failure::usage(format!(
                "--{flag} does not apply to family {:?}",
                args.family
            )));
        }
    }
    let need = |v: Option<usize>, flag: &str| {
        v.ok_or_else(|| Failure::usage(format!("family {:?} requires --{flag}", args.family)))
    };
    Ok(match args.family {
        Family::G1 => ConstructionId::G1,
        Family::G2 => ConstructionId::G2,
        Family::G3 => ConstructionId::G3,
        Family::H1 => ConstructionId::H1(need(args.m, "m")?),
        Family::H2 => ConstructionId::H2(need(args.m, "m")?),
        Family::H3 => ConstructionId::H3(need(args.m, "m")?),
        Family::H4 => ConstructionId::H4(need(args.n, "n")?),
        Family::T => {
            let s = args
                .sizes
                .as_ref()
                .ok_or_else(|| Failure::usage("family T requires --sizes a,b,c"))?;
            if s.len() != 3 {
                return Err(Failure::usage(format!("--sizes takes three values, got {}", s.len())));
            }
            ConstructionId::T([s[0], s[1], s[2]])
        }
    })
}

fn construct(args: &FamilyArgs, path: &Path, out: &mut dyn Write) -> Outcome {
    let id = construction_id(args)?;
    let built = constructions::build(id)?;
    let text = format::write(&built.object);
    std::fs::write(path, &text).map_err(|e| Failure::io(format!("{}: {e}", path.display())))?;
    let (n, m) = match &built.object {
        EdgeList::Graph(g) => (g.n(), g.edge_count()),
        EdgeList::TriGraph(h) => (h.n(), h.edge_count()),
    };
    emit(out, &format!("wrote {id}: n = {n}, {m} edges to {}\n", path.display()))?;
    Ok(EXIT_OK)
}

fn verify(args: &FamilyArgs, input: Option<&Path>, fmt: OutputFormat, out: &mut dyn Write) -> Outcome {
    let id = construction_id(args)?;
    let report = match input {
        Some(path) => constructions::verify_object(id, &read_object(path)?)?,
        None => constructions::verify_claim(id)?,
    };
    let text = match fmt {
        OutputFormat::Json => to_sorted_json(&report)?,
        OutputFormat::Text => claim_text(&report),
    };
    emit(out, &text)?;
    Ok(if report.pass { EXIT_OK } else { EXIT_FAILURE })
}

/// Pretty JSON with object keys in sorted order.
fn to_sorted_json<T: serde::Serialize>(value: &T) -> std::result::Result<String, Failure> {
    // serde_json's default map is a BTreeMap, so going through Value sorts keys.
    let v = serde_json::to_value(value).map_err(|e| Failure::io(e.to_string()))?;
    let mut s = serde_json::to_string_pretty(&v).map_err(|e| Failure::io(e.to_string()))?;
    s.push('\n');
    Ok(s)
}

fn opt<T: std::fmt::Display>(v: &Option<T>) -> String {
    v.as_ref().map_or_else(|| "-".to_string(), T::to_string)
}

fn claim_text(r: &ClaimReport) -> String {
    let mut s = String::new();
    let _ = writeln!(s, "construction: {}", r.construction);
    let _ = writeln!(s, "expected_delta2: {}", opt(&r.expected_delta2));
    let profile = r
        .link_degree_profile
        .as_ref()
        .map(|p| p.iter().map(|(d, c)| format!("{d}x{c}")).collect::<Vec<_>>().join(" "));
    let _ = writeln!(s, "link_degree_profile: {}", opt(&profile));
    let _ = writeln!(s, "link_triangle_free: {}", opt(&r.link_triangle_free));
    let _ = writeln!(s, "measured_delta2: {}", opt(&r.measured_delta2));
    let _ = writeln!(s, "n: {}", r.n);
    let _ = writeln!(s, "observation1: {}", opt(&r.observation1));
    let _ = writeln!(s, "pattern: {}", opt(&r.pattern));
    let _ = writeln!(s, "x_uncovered: {}", opt(&r.x_uncovered));
    for c in &r.checks {
        let verdict = if c.pass { "PASS" } else { "FAIL" };
        let _ = writeln!(s, "check {}: {verdict} ({})", c.name, c.detail);
    }
    for l in &r.labeling {
        let _ = writeln!(s, "label {}: {}", l.label, l.vertex);
    }
    let _ = writeln!(s, "result: {}", if r.pass { "PASS" } else { "FAIL" });
    s
}

fn resolve_vertex(h: &TriGraph, spec: &str) -> std::result::Result<Vertex, Failure> {
    let v = if spec == "x" {
        h.distinguished()
            .ok_or_else(|| Failure::usage("--vertex x needs an X line in the input file"))?
    } else {
        spec.parse::<Vertex>()
            .map_err(|_| Failure::usage(format!("--vertex expects an index or x, got {spec:?}")))?
    };
    if v >= h.n() {
        return Err(Failure::usage(format!("vertex {v} out of range for n = {}", h.n())));
    }
    Ok(v)
}

fn with_threads<R: Send>(threads: Option<usize>, f: impl FnOnce() -> R + Send) -> std::result::Result<R, Failure> {
    match threads {
        None => Ok(f()),
        Some(t) => {
            let pool = rayon_pool(t)?;
            Ok(pool.install(f))
        }
    }
}

fn rayon_pool(threads: usize) -> std::result::Result<rayon::ThreadPool, Failure> {
    rayon::ThreadPoolBuilder::new()
        .num_threads(threads.max(1))
        .build()
        .map_err(|e| Failure::usage(format!("cannot start {threads} threads: {e}")))
}

fn embedding_text(phi: &[Vertex]) -> String {
    phi.iter().map(Vertex::to_string).collect::<Vec<_>>().join(" ")
}

fn covering(
    input: &Path,
    pattern_name: &str,
    vertex: Option<&str>,
    all: bool,
    threads: Option<usize>,
    fmt: OutputFormat,
    out: &mut dyn Write,
) -> Outcome {
    let h = read_trigraph(input)?;
    let f = pattern(pattern_name)?;
    match vertex {
        Some(spec) => {
            let v = resolve_vertex(&h, spec)?;
            let witness = with_threads(threads, || cover::covered_at(&h, v, &f))??;
            let text = match fmt {
                OutputFormat::Json => to_sorted_json(&json!({
                    "pattern": f.name(),
                    "vertex": v,
                    "covered": witness.is_some(),
                    "witness": witness,
                }))?,
                OutputFormat::Text => {
                    let name = if h.distinguished() == Some(v) {
                        format!("x ({v})")
                    } else {
                        v.to_string()
                    };
                    match &witness {
                        Some(phi) => format!(
                            "pattern: {}\nvertex {name}: covered by {}\n",
                            f.name(),
                            embedding_text(phi)
                        ),
                        None => format!("pattern: {}\nvertex {name}: uncovered\n", f.name()),
                    }
                }
            };
            emit(out, &text)?;
            Ok(if witness.is_some() { EXIT_OK } else { EXIT_FAILURE })
        }
        None => {
            // `--all` is the default.
            let _ = all;
            let report = with_threads(threads, || cover::covering_report(&h, &f))?;
            let text = match fmt {
                OutputFormat::Json => to_sorted_json(&report)?,
                OutputFormat::Text => cover_text(&report, h.n()),
            };
            emit(out, &text)?;
            Ok(if report.has_covering() { EXIT_OK } else { EXIT_FAILURE })
        }
    }
}

fn cover_text(r: &CoverReport, n: usize) -> String {
    let mut s = format!("pattern: {}\n", r.pattern);
    let uncovered: Vec<String> = r.uncovered.iter().map(Vertex::to_string).collect();
    let _ = writeln!(s, "uncovered: [{}]", uncovered.join(" "));
    for v in 0..n {
        match r.witness_embeddings.get(&v) {
            Some(phi) => {
                let _ = writeln!(s, "vertex {v}: covered by {}", embedding_text(phi));
            }
            None => {
                let _ = writeln!(s, "vertex {v}: uncovered");
            }
        }
    }
    let _ = writeln!(s, "has_covering: {}", r.has_covering());
    s
}

/// Parses a sides file: one line `A v...` and one line `B v...`; `#` starts
/// a comment line.
fn parse_sides(text: &str) -> std::result::Result<(BTreeSet<Vertex>, BTreeSet<Vertex>), Failure> {
    let mut a = None;
    let mut b = None;
    for (i, line) in text.lines().enumerate() {
        let line = line.trim();
        if line.is_empty() || line.starts_with('#') {
            continue;
        }
        let mut words = line.split_whitespace();
        let slot = match words.next() {
            Some("A") => &mut a,
            Some("B") => &mut b,
            Some(w) => return Err(Failure::io(format!("sides line {}: expected A or B, got {w:?}", i + 1))),
            None => unreachable!(),
        };
        if slot.is_some() {
            return Err(Failure::io(format!("sides line {}: side given twice", i + 1)));
        }
        let set = words
            .map(|w| w.parse::<Vertex>())
            .collect::<std::result::Result<BTreeSet<_>, _>>()
            .map_err(|e| Failure::io(format!("sides line {}: {e}", i + 1)))?;
        *slot = Some(set);
    }
    match (a, b) {
        (Some(a), Some(b)) => Ok((a, b)),
        _ => Err(Failure::io("sides file needs both an A line and a B line")),
    }
}

fn koenig_cmd(input: &Path, sides: &Path, fmt: OutputFormat, out: &mut dyn Write) -> Outcome {
    let g = read_graph(input)?;
    let (a, b) = parse_sides(&read_file(sides)?)?;
    let coloring = koenig::bipartite_edge_coloring(&g, &a, &b)?;
    if let Err(e) = koenig::check_coloring(&g, &coloring) {
        return Err(Failure {
            code: EXIT_FAILURE,
            msg: format!("internal colouring check failed: {e}"),
        });
    }
    let text = match fmt {
        OutputFormat::Json => to_sorted_json(&coloring)?,
        OutputFormat::Text => coloring_text(&coloring, g.n()),
    };
    emit(out, &text)?;
    Ok(EXIT_OK)
}

/// The edge-list header followed by one `M <i>` section per class.
fn coloring_text(c: &EdgeColoring, n: usize) -> String {
    let mut s = format!("HG 2 {n} {}\n", c.edge_count());
    for (i, class) in c.classes.iter().enumerate() {
        let _ = writeln!(s, "M {}", i + 1);
        for (a, b) in class {
            let _ = writeln!(s, "{a} {b}");
        }
    }
    s
}

fn oracle_cmd(n: usize, pattern_name: &str, budget: &Budget, fmt: OutputFormat, out: &mut dyn Write) -> Outcome {
    let f = pattern(pattern_name)?;
    let result = oracle::exact_c2(n, &f, budget)?;
    let text = match fmt {
        OutputFormat::Json => to_sorted_json(&result)?,
        OutputFormat::Text => search_text(&result),
    };
    emit(out, &text)?;
    Ok(if result.exhaustive { EXIT_OK } else { EXIT_FAILURE })
}

fn search_text(r: &SearchResult) -> String {
    let mut s = String::new();
    let _ = writeln!(s, "elapsed_seconds: {:.3}", r.elapsed.as_secs_f64());
    let _ = writeln!(s, "exhaustive: {}", r.exhaustive);
    let _ = writeln!(s, "link_classes: {}", r.link_classes);
    let _ = writeln!(s, "n: {}", r.n);
    let _ = writeln!(s, "nodes_explored: {}", r.nodes_explored);
    let _ = writeln!(s, "pattern: {}", r.pattern);
    let _ = writeln!(s, "value: {}", r.value);
    s.push_str("witness:\n");
    s.push_str(&format::write_trigraph(&r.witness));
    s
}

fn spotcheck(
    n: usize,
    pattern_name: &str,
    t: usize,
    samples: usize,
    seed: u64,
    fmt: OutputFormat,
    out: &mut dyn Write,
) -> Outcome {
    let f = pattern(pattern_name)?;
    let report = oracle::certify_upper_behavior(n, &f, t, samples, seed)?;
    let text = match fmt {
        OutputFormat::Json => to_sorted_json(&report)?,
        OutputFormat::Text => spot_text(&report),
    };
    emit(out, &text)?;
    Ok(if report.counterexample_count == 0 {
        EXIT_OK
    } else {
        EXIT_FAILURE
    })
}

fn spot_text(r: &SpotCheckReport) -> String {
    let mut s = String::new();
    let _ = writeln!(s, "counterexample_count: {}", r.counterexample_count);
    let _ = writeln!(s, "n: {}", r.n);
    let _ = writeln!(s, "pattern: {}", r.pattern);
    let _ = writeln!(s, "samples: {}", r.samples);
    let _ = writeln!(s, "seed: {}", r.seed);
    let _ = writeln!(s, "t: {}", r.t);
    for (i, c) in r.counterexamples.iter().enumerate() {
        let _ = writeln!(s, "counterexample {i}:");
        s.push_str(c);
    }
    s
}

fn export(input: &Path, fmt: ExportFormat, path: Option<&Path>, out: &mut dyn Write) -> Outcome {
    let object = read_object(input)?;
    let text = match fmt {
        ExportFormat::Json => format::to_json(&object),
        ExportFormat::Hg => format::write(&object),
    };
    match path {
        Some(p) => std::fs::write(p, &text).map_err(|e| Failure::io(format!("{}: {e}", p.display())))?,
        None => emit(out, &text)?,
    }
    Ok(EXIT_OK)
}
