//! Command-line front end. [`run`] does all the work and returns what the
//! binary should print, so tests can drive it without spawning processes.

use std::ffi::OsString;
use std::fmt::Write as _;
use std::path::PathBuf;
use std::time::Instant;

use clap::{Args, Parser, Subcommand, ValueEnum};
use kempe_core::{
    brute_force_quasimatching, build_auxiliary_graph, builtin, canonical_representative, compute_ranks,
    compute_ranks_observed, AuxiliaryGraph, ColorPair, FrontierColoring, Pattern, RankObserver, Verdict, BRUTE_FORCE_LIMIT,
    BUILTIN_NAMES,
};
use serde::Serialize;

use crate::format::parse_pattern;
use crate::report::{classes_csv, classes_text, dump_auxiliary_graph, rank_histogram_table, PatternReport};

pub const EXIT_OK: i32 = 0;
pub const EXIT_NOT_REDUCIBLE: i32 = 1;
pub const EXIT_INPUT: i32 = 2;
pub const EXIT_PARTIAL: i32 = 3;
pub const EXIT_ORACLE: i32 = 4;

#[derive(Debug, Parser)]
#[command(name = "kempe-check", version, about = "Kempe-chain reducibility checker for subcubic patterns")]
pub struct Cli {
    /// Output format.
    #[arg(long, global = true, value_enum, default_value_t = Format::Text)]
    pub format: Format,
    /// Write the report here instead of stdout.
    #[arg(long, global = true, value_name = "PATH")]
    pub out: Option<PathBuf>,
    /// Timings and extra detail on stderr.
    #[arg(short, long, global = true)]
    pub verbose: bool,
    #[command(subcommand)]
    pub command: Command,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, ValueEnum)]
pub enum Format {
    Text,
    Csv,
    Json,
}

#[derive(Debug, Subcommand)]
pub enum Command {
    /// Compute ranks and the reducibility verdict.
    Check {
        #[command(flatten)]
        inputs: Inputs,
        /// Compare the matching DP against brute force on every auxiliary graph.
        #[arg(long)]
        oracle_check: bool,
        /// Print classes ranked at each stage to stderr.
        #[arg(long)]
        stage_trace: bool,
    },
    /// List every equivalence class with its orbit size, rank and witness pair.
    Classes {
        #[command(flatten)]
        inputs: Inputs,
    },
    /// Validate pattern files without ranking.
    Validate {
        #[command(flatten)]
        inputs: Inputs,
    },
    /// Dump the auxiliary graph of one coloring.
    Aux {
        #[command(flatten)]
        inputs: Inputs,
        /// Frontier coloring as digits, e.g. 121.
        #[arg(long)]
        coloring: String,
        /// Kempe pair, e.g. 1,2.
        #[arg(long, value_parser = parse_pair)]
        pair: ColorPair,
        /// Target is every class of rank at most this.
        #[arg(long, default_value_t = 0)]
        target: u32,
    },
}

#[derive(Debug, Args)]
pub struct Inputs {
    /// Built-in pattern name, or `all`.
    #[arg(long = "builtin", value_name = "NAME")]
    pub builtins: Vec<String>,
    /// Pattern files.
    pub paths: Vec<PathBuf>,
}

fn parse_pair(s: &str) -> Result<ColorPair, String> {
    let digits: Vec<u8> = s
        .split(|c: char| c == ',' || c.is_whitespace())
        .filter(|t| !t.is_empty())
        .map(|t| t.trim_matches(|c| c == '(' || c == ')').parse::<u8>().map_err(|_| format!("bad color {t:?}")))
        .collect::<Result<_, _>>()?;
    match digits[..] {
        [a, b] => ColorPair::new(a, b).ok_or_else(|| format!("{s:?} is not a pair of distinct colors in 1..=3")),
        _ => Err(format!("expected two colors like 1,2, found {s:?}")),
    }
}

/// What the process should print and exit with.
#[derive(Debug, Clone, PartialEq, Eq, Default)]
pub struct Outcome {
    pub code: i32,
    pub stdout: String,
    pub stderr: String,
}

struct Loaded {
    label: String,
    pattern: Result<Pattern, String>,
}

fn load(inputs: &Inputs) -> Vec<Loaded> {
    let mut out = Vec::new();
    for name in &inputs.builtins {
        if name.eq_ignore_ascii_case("all") {
            out.extend(BUILTIN_NAMES.iter().map(|n| Loaded { label: n.to_string(), pattern: Ok(builtin(n).unwrap()) }));
        } else {
            out.push(Loaded { label: name.clone(), pattern: builtin(name).map_err(|e| e.to_string()) });
        }
    }
    for path in &inputs.paths {
        let pattern = std::fs::read_to_string(path)
            .map_err(|e| e.to_string())
            .and_then(|text| parse_pattern(&text).map_err(|e| e.to_string()));
        out.push(Loaded { label: path.display().to_string(), pattern });
    }
    out
}

/// Splits inputs into valid patterns and error messages; `None` if nothing was given.
fn split(loaded: Vec<Loaded>, stderr: &mut String) -> Option<(Vec<Pattern>, usize)> {
    if loaded.is_empty() {
        stderr.push_str("error: no patterns given; use --builtin <NAME|all> or pass pattern files\n");
        return None;
    }
    let mut patterns = Vec::new();
    let mut failed = 0;
    for l in loaded {
        match l.pattern {
            Ok(p) => patterns.push(p),
            Err(e) => {
                failed += 1;
                writeln!(stderr, "error: {}: {e}", l.label).unwrap();
            }
        }
    }
    Some((patterns, failed))
}

fn input_code(ok: usize, failed: usize) -> Option<i32> {
    match (ok, failed) {
        (_, 0) => None,
        (0, _) => Some(EXIT_INPUT),
        _ => Some(EXIT_PARTIAL),
    }
}

#[derive(Default)]
struct Probe {
    oracle: bool,
    trace: bool,
    checked: usize,
    skipped: usize,
    mismatches: Vec<String>,
    stages: Vec<(u32, usize)>,
}

impl RankObserver for Probe {
    fn auxiliary_graph(&mut self, stage: u32, rep: &FrontierColoring, pair: ColorPair, graph: &AuxiliaryGraph, dp: bool) {
        if !self.oracle {
            return;
        }
        match brute_force_quasimatching(graph) {
            Ok(brute) => {
                self.checked += 1;
                if brute != dp {
                    self.mismatches.push(format!("stage {stage}, class {rep}, pair {pair}: dp {dp}, brute force {brute}"));
                }
            }
            Err(_) => self.skipped += 1,
        }
    }

    fn stage_complete(&mut self, stage: u32, newly: usize) {
        if self.trace {
            self.stages.push((stage, newly));
        }
    }
}

struct Checked {
    report: PatternReport,
    verdict: Verdict,
    probe: Probe,
    millis: f64,
}

fn check_all(patterns: &[Pattern], oracle: bool, trace: bool) -> Vec<Checked> {
    std::thread::scope(|scope| {
        let handles: Vec<_> = patterns
            .iter()
            .map(|p| {
                scope.spawn(move || {
                    let start = Instant::now();
                    let mut probe = Probe { oracle, trace, ..Probe::default() };
                    let table = compute_ranks_observed(p, &mut probe);
                    Checked {
                        report: PatternReport::new(p, &table),
                        verdict: Verdict::from_table(p, &table),
                        probe,
                        millis: start.elapsed().as_secs_f64() * 1e3,
                    }
                })
            })
            .collect();
        handles.into_iter().map(|h| h.join().expect("rank worker panicked")).collect()
    })
}

fn json<T: Serialize + ?Sized>(value: &T) -> String {
    let mut s = serde_json::to_string_pretty(value).expect("reports serialize");
    s.push('\n');
    s
}

fn cmd_check(cli: &Cli, inputs: &Inputs, oracle: bool, trace: bool, out: &mut Outcome) {
    let Some((patterns, failed)) = split(load(inputs), &mut out.stderr) else {
        out.code = EXIT_INPUT;
        return;
    };
    let results = check_all(&patterns, oracle, trace);
    let mut mismatches = 0;
    for r in &results {
        let name = &r.report.pattern;
        if cli.verbose {
            writeln!(out.stderr, "{name}: {} classes in {:.1} ms", r.report.total_classes, r.millis).unwrap();
        }
        for (stage, newly) in &r.probe.stages {
            writeln!(out.stderr, "{name}: stage {stage} ranked {newly}").unwrap();
        }
        if oracle {
            writeln!(
                out.stderr,
                "{name}: oracle agreed on {} auxiliary graphs ({} mismatches, {} above the {BRUTE_FORCE_LIMIT}-vertex limit)",
                r.probe.checked - r.probe.mismatches.len(),
                r.probe.mismatches.len(),
                r.probe.skipped
            )
            .unwrap();
            for m in &r.probe.mismatches {
                writeln!(out.stderr, "{name}: oracle mismatch at {m}").unwrap();
            }
        }
        mismatches += r.probe.mismatches.len();
    }

    if !results.is_empty() {
        let verdicts: Vec<Verdict> = results.iter().map(|r| r.verdict.clone()).collect();
        match cli.format {
            Format::Csv => out.stdout = rank_histogram_table(&verdicts).to_csv(),
            Format::Json => out.stdout = json(&results.iter().map(|r| &r.report).collect::<Vec<_>>()),
            Format::Text => {
                out.stdout = rank_histogram_table(&verdicts).to_text();
                out.stdout.push('\n');
                for r in &results {
                    let rep = &r.report;
                    if rep.reducible {
                        writeln!(out.stdout, "{}: reducible, k0 = {}", rep.pattern, rep.k0).unwrap();
                    } else {
                        let reps: Vec<&str> = rep.unranked().map(|c| c.rep.as_str()).collect();
                        writeln!(
                            out.stdout,
                            "{}: not reducible, {} unranked classes after k0 = {}: {}",
                            rep.pattern,
                            reps.len(),
                            rep.k0,
                            reps.join(" ")
                        )
                        .unwrap();
                    }
                }
            }
        }
    }

    let all_reducible = results.iter().all(|r| r.report.reducible);
    out.code = if mismatches > 0 {
        EXIT_ORACLE
    } else if let Some(code) = input_code(patterns.len(), failed) {
        code
    } else if all_reducible {
        EXIT_OK
    } else {
        EXIT_NOT_REDUCIBLE
    };
}

fn cmd_classes(cli: &Cli, inputs: &Inputs, out: &mut Outcome) {
    let Some((patterns, failed)) = split(load(inputs), &mut out.stderr) else {
        out.code = EXIT_INPUT;
        return;
    };
    let reports: Vec<PatternReport> = check_all(&patterns, false, false).into_iter().map(|c| c.report).collect();
    out.stdout = match cli.format {
        Format::Csv => classes_csv(&reports),
        Format::Json => json(&reports),
        Format::Text => reports.iter().map(classes_text).collect::<Vec<_>>().join("\n"),
    };
    out.code = input_code(patterns.len(), failed).unwrap_or(EXIT_OK);
}

#[derive(Serialize)]
struct Summary {
    pattern: String,
    vertices: usize,
    internal_edges: usize,
    half_edges: usize,
    symmetry_order: usize,
    reflections: usize,
    line_graph_adjacencies: usize,
}

impl Summary {
    fn new(p: &Pattern) -> Summary {
        let lg = p.line_graph();
        Summary {
            pattern: p.name().to_string(),
            vertices: p.vertex_count(),
            internal_edges: p.internal_edges().len(),
            half_edges: p.frontier_len(),
            symmetry_order: p.symmetries().len(),
            reflections: p.symmetries().iter().filter(|s| s.is_reflection()).count(),
            line_graph_adjacencies: lg.adjacency_count(),
        }
    }
}

fn cmd_validate(cli: &Cli, inputs: &Inputs, out: &mut Outcome) {
    let Some((patterns, failed)) = split(load(inputs), &mut out.stderr) else {
        out.code = EXIT_INPUT;
        return;
    };
    let summaries: Vec<Summary> = patterns.iter().map(Summary::new).collect();
    out.stdout = match cli.format {
        Format::Json => json(&summaries),
        Format::Csv => {
            let mut s = String::from("pattern,vertices,internal_edges,half_edges,symmetry_order,reflections,line_graph_adjacencies\n");
            for v in &summaries {
                writeln!(
                    s,
                    "{},{},{},{},{},{},{}",
                    v.pattern, v.vertices, v.internal_edges, v.half_edges, v.symmetry_order, v.reflections, v.line_graph_adjacencies
                )
                .unwrap();
            }
            s
        }
        Format::Text => {
            let mut s = String::new();
            for v in &summaries {
                writeln!(
                    s,
                    "{}: ok: {} vertices, {} internal edges, {} half-edges, symmetry order {} ({} reflections)",
                    v.pattern, v.vertices, v.internal_edges, v.half_edges, v.symmetry_order, v.reflections
                )
                .unwrap();
                writeln!(
                    s,
                    "  line graph: {} edge ids, {} adjacent pairs",
                    v.internal_edges + v.half_edges,
                    v.line_graph_adjacencies
                )
                .unwrap();
            }
            s
        }
    };
    out.code = input_code(patterns.len(), failed).unwrap_or(EXIT_OK);
}

fn cmd_aux(cli: &Cli, inputs: &Inputs, coloring: &str, pair: ColorPair, target: u32, out: &mut Outcome) {
    let Some((patterns, failed)) = split(load(inputs), &mut out.stderr) else {
        out.code = EXIT_INPUT;
        return;
    };
    if failed > 0 {
        out.code = EXIT_INPUT;
        return;
    }
    let [p] = &patterns[..] else {
        out.stderr.push_str("error: aux takes exactly one pattern\n");
        out.code = EXIT_INPUT;
        return;
    };
    let c = match FrontierColoring::from_digits(coloring) {
        Ok(c) if c.len() == p.frontier_len() => c,
        Ok(c) => {
            writeln!(out.stderr, "error: coloring has {} digits, {} has {} half-edges", c.len(), p.name(), p.frontier_len())
                .unwrap();
            out.code = EXIT_INPUT;
            return;
        }
        Err(e) => {
            writeln!(out.stderr, "error: {e}").unwrap();
            out.code = EXIT_INPUT;
            return;
        }
    };
    let table = compute_ranks(p);
    let in_target = |g: &FrontierColoring| {
        let rep = canonical_representative(p, g).expect("length checked");
        table.rank_of(&rep).flatten().is_some_and(|r| r <= target)
    };
    let graph = build_auxiliary_graph(&c, pair, in_target);
    let matched = kempe_core::has_noncrossing_perfect_quasimatching(&graph);
    out.stdout = match cli.format {
        Format::Json => json(&serde_json::json!({
            "pattern": p.name(),
            "coloring": c.to_string(),
            "pair": pair.to_string(),
            "target_rank": target,
            "circle": graph.circle(),
            "loops": graph.loops().collect::<Vec<_>>(),
            "chords": graph.chords().map(|(a, b)| [a, b]).collect::<Vec<_>>(),
            "has_matching": matched,
        })),
        Format::Text | Format::Csv => {
            let mut s = format!("# {} coloring {c} pair {pair} target rank <= {target}\n", p.name());
            writeln!(s, "# {} vertices, {} loops, {} chords, matching: {matched}", graph.len(), graph.loop_count(), graph.chord_count())
                .unwrap();
            s.push_str(&dump_auxiliary_graph(&graph));
            s
        }
    };
    out.code = EXIT_OK;
}

/// Parses `args` (including the program name) and runs the command.
pub fn run<I, T>(args: I) -> Outcome
where
    I: IntoIterator<Item = T>,
    T: Into<OsString> + Clone,
{
    let cli = match Cli::try_parse_from(args) {
        Ok(cli) => cli,
        Err(e) => {
            let text = e.render().to_string();
            return if e.use_stderr() {
                Outcome { code: EXIT_INPUT, stdout: String::new(), stderr: text }
            } else {
                Outcome { code: EXIT_OK, stdout: text, stderr: String::new() }
            };
        }
    };
    let mut out = Outcome::default();
    match &cli.command {
        Command::Check { inputs, oracle_check, stage_trace } => cmd_check(&cli, inputs, *oracle_check, *stage_trace, &mut out),
        Command::Classes { inputs } => cmd_classes(&cli, inputs, &mut out),
        Command::Validate { inputs } => cmd_validate(&cli, inputs, &mut out),
        Command::Aux { inputs, coloring, pair, target } => cmd_aux(&cli, inputs, coloring, *pair, *target, &mut out),
    }
    if let Some(path) = &cli.out {
        if let Err(e) = std::fs::write(path, &out.stdout) {
            writeln!(out.stderr, "error: cannot write {}: {e}", path.display()).unwrap();
            out.code = EXIT_INPUT;
        }
        out.stdout.clear();
    }
    out
}
