//! Command-line front end.
//!
//! Exit codes: 0 success, 1 invalid input, 2 unproven optimum or invalid
//! certificate, 3 internal assertion failure.

use std::ffi::OsString;
use std::fmt::Write as _;
use std::fs;
use std::io::Write;
use std::path::{Path as FsPath, PathBuf};

use clap::{Args, Parser, Subcommand};
use rayon::prelude::*;

use crate::constructors::{cover_hamming, cover_multipartite};
use crate::cover::{verify_cover, verify_cover_normal_form, Cover, VerifyReport};
use crate::error::Error;
use crate::formulas::{ip_hamming, ip_multipartite};
use crate::graph::{
    all_pairs_distances, make_augmented_multipartite, make_complete_multipartite, make_hamming,
    Graph, HammingSpec, PartiteSpec,
};
use crate::solver::{enumerate_isometric_paths, solve_min_cover};

pub const EXIT_OK: i32 = 0;
pub const EXIT_INVALID_INPUT: i32 = 1;
pub const EXIT_UNPROVEN: i32 = 2;
pub const EXIT_INTERNAL: i32 = 3;

#[derive(Debug, Parser)]
#[command(name = "isopath", version, about = "Isometric path covers of multipartite and Hamming graphs")]
pub struct Cli {
    #[command(subcommand)]
    pub command: Command,
}

#[derive(Debug, Subcommand)]
pub enum Command {
    /// Write a family graph in the text graph format.
    Gen {
        #[command(flatten)]
        family: GenFamily,
        /// Non-adjacent pairs per part for --augmented, e.g. "0-1,2-3;0-1".
        #[arg(long)]
        pairs: Option<String>,
        #[arg(short, long)]
        output: Option<PathBuf>,
        /// Also write a Graphviz rendering.
        #[arg(long)]
        dot: Option<PathBuf>,
    },
    /// Print the closed-form isometric path number.
    Formula {
        #[command(flatten)]
        family: FamilyArgs,
    },
    /// Build an optimal cover, verify it, and write it.
    Construct {
        #[command(flatten)]
        family: FamilyArgs,
        #[arg(short, long)]
        output: Option<PathBuf>,
        /// Write coordinate tuples instead of vertex indices (Hamming only).
        #[arg(long)]
        labeled: bool,
    },
    /// Check a cover against a graph.
    Verify {
        #[arg(short, long)]
        graph: PathBuf,
        #[arg(short, long)]
        cover: PathBuf,
        /// Also require multipartite normal form.
        #[arg(long)]
        strict: bool,
        /// Hamming factors for reading coordinate tuples, when the graph
        /// file does not record them.
        #[arg(long, value_parser = parse_size_list)]
        hamming: Option<SizeList>,
        #[arg(long)]
        dot: Option<PathBuf>,
    },
    /// Find a minimum cover with the exact solver.
    Solve {
        #[arg(short, long)]
        graph: PathBuf,
        /// Branch-and-bound node limit.
        #[arg(long)]
        budget: Option<u64>,
        #[arg(short, long)]
        output: Option<PathBuf>,
    },
    /// List every isometric path of a graph.
    Paths {
        #[arg(short, long)]
        graph: PathBuf,
        #[arg(long)]
        count_only: bool,
    },
    /// Compare formulas with the exact solver on small instances.
    Selftest {
        #[arg(long, default_value_t = 8)]
        max_n: usize,
    },
}

#[derive(Debug, Args)]
#[group(required = true, multiple = false)]
pub struct FamilyArgs {
    #[arg(long, value_parser = parse_size_list)]
    pub multipartite: Option<SizeList>,
    #[arg(long, value_parser = parse_size_list)]
    pub hamming: Option<SizeList>,
}

#[derive(Debug, Args)]
#[group(required = true, multiple = false)]
pub struct GenFamily {
    #[arg(long, value_parser = parse_size_list)]
    pub multipartite: Option<SizeList>,
    #[arg(long, value_parser = parse_size_list)]
    pub hamming: Option<SizeList>,
    #[arg(long, value_parser = parse_size_list)]
    pub augmented: Option<SizeList>,
}

/// A parsed `--multipartite`/`--hamming` value. A bare `Vec` would make
/// clap expect one integer per occurrence.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct SizeList(pub Vec<usize>);

impl std::ops::Deref for SizeList {
    type Target = Vec<usize>;

    fn deref(&self) -> &Vec<usize> {
        &self.0
    }
}

fn parse_size_list(s: &str) -> Result<SizeList, String> {
    parse_spec(s).map(SizeList)
}

/// Comma-separated positive integers.
pub fn parse_spec(s: &str) -> Result<Vec<usize>, String> {
    s.split(',')
        .map(|t| match t.trim().parse::<usize>() {
            Ok(0) | Err(_) => Err(format!("expected a positive integer, got {t:?}")),
            Ok(v) => Ok(v),
        })
        .collect()
}

/// `"0-1,2-3;0-1"`: parts separated by `;`, pairs by `,`.
pub fn parse_pairs(s: &str) -> Result<Vec<Vec<(usize, usize)>>, Error> {
    s.split(';')
        .map(|part| {
            part.split(',')
                .map(str::trim)
                .filter(|p| !p.is_empty())
                .map(|p| {
                    let (a, b) = p
                        .split_once('-')
                        .ok_or_else(|| Error::InvalidPairing(format!("expected x-y, got {p:?}")))?;
                    let num = |t: &str| {
                        t.trim()
                            .parse::<usize>()
                            .map_err(|_| Error::InvalidPairing(format!("bad index {t:?}")))
                    };
                    Ok((num(a)?, num(b)?))
                })
                .collect()
        })
        .collect()
}

fn exit_code(e: &Error) -> i32 {
    match e {
        Error::Internal(_) | Error::FormulaConflict { .. } => EXIT_INTERNAL,
        Error::PoolBudget(_) => EXIT_UNPROVEN,
        _ => EXIT_INVALID_INPUT,
    }
}

/// Family recorded in a graph's comment lines by `gen`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub enum RecordedFamily {
    Multipartite(Vec<usize>),
    Hamming(Vec<usize>),
}

pub fn recorded_family(g: &Graph) -> Option<RecordedFamily> {
    g.comments().iter().find_map(|c| {
        let mut words = c.split_whitespace();
        let kind = words.next()?;
        let spec = parse_spec(words.next()?).ok()?;
        match kind {
            "multipartite" | "augmented" => Some(RecordedFamily::Multipartite(spec)),
            "hamming" => Some(RecordedFamily::Hamming(spec)),
            _ => None,
        }
    })
}

/// Graphviz rendering; edges of `cover`'s paths are coloured per path.
pub fn to_dot(g: &Graph, cover: Option<&Cover>) -> String {
    const PALETTE: &[&str] = &["red", "blue", "darkgreen", "orange", "purple", "brown", "magenta", "teal"];
    let mut colored = std::collections::BTreeMap::new();
    if let Some(c) = cover {
        for (i, p) in c.paths().iter().enumerate() {
            for w in p.vertices().windows(2) {
                let e = (w[0].min(w[1]), w[0].max(w[1]));
                colored.entry(e).or_insert(PALETTE[i % PALETTE.len()]);
            }
        }
    }
    let mut out = String::from("graph G {\n");
    for v in 0..g.vertex_count() {
        let _ = writeln!(out, "  {v} [label=\"{}\"];", g.label(v));
    }
    for (u, v) in g.edges() {
        match colored.get(&(u, v)) {
            Some(color) => {
                let _ = writeln!(out, "  {u} -- {v} [color={color}, penwidth=3];");
            }
            None => {
                let _ = writeln!(out, "  {u} -- {v} [color=gray];");
            }
        }
    }
    out.push_str("}\n");
    out
}

fn read_graph(path: &FsPath) -> Result<Graph, Error> {
    Graph::from_text(&fs::read_to_string(path)?)
}

fn emit(output: Option<&PathBuf>, text: &str, out: &mut dyn Write) -> Result<(), Error> {
    match output {
        Some(p) => fs::write(p, text)?,
        None => out.write_all(text.as_bytes())?,
    }
    Ok(())
}

/// Parses `args` (including the program name) and runs the command.
pub fn run<I, T>(args: I, out: &mut dyn Write, err: &mut dyn Write) -> i32
where
    I: IntoIterator<Item = T>,
    T: Into<OsString> + Clone,
{
    let cli = match Cli::try_parse_from(args) {
        Ok(cli) => cli,
        Err(e) => {
            let _ = write!(err, "{}", e.render());
            return if e.use_stderr() { EXIT_INVALID_INPUT } else { EXIT_OK };
        }
    };
    match execute(cli.command, out, err) {
        Ok(code) => code,
        Err(e) => {
            let _ = writeln!(err, "error: {e}");
            exit_code(&e)
        }
    }
}

fn execute(command: Command, out: &mut dyn Write, err: &mut dyn Write) -> Result<i32, Error> {
    match command {
        Command::Gen {
            family,
            pairs,
            output,
            dot,
        } => {
            let g = if let Some(sizes) = family.multipartite {
                make_complete_multipartite(&PartiteSpec::new(&sizes)?)
            } else if let Some(factors) = family.hamming {
                make_hamming(&HammingSpec::new(&factors)?)
            } else {
                let sizes = family.augmented.expect("clap enforces one family");
                let pairs = pairs
                    .ok_or_else(|| Error::InvalidPairing("--augmented needs --pairs".into()))?;
                make_augmented_multipartite(&PartiteSpec::new(&sizes)?, &parse_pairs(&pairs)?)?
            };
            emit(output.as_ref(), &g.to_text(), out)?;
            if let Some(p) = dot {
                fs::write(p, to_dot(&g, None))?;
            }
            Ok(EXIT_OK)
        }
        Command::Formula { family } => {
            let result = match (family.multipartite, family.hamming) {
                (Some(sizes), _) => ip_multipartite(&PartiteSpec::new(&sizes)?)?,
                (_, Some(factors)) => ip_hamming(&HammingSpec::new(&factors)?)?,
                _ => unreachable!("clap enforces one family"),
            };
            writeln!(out, "{result}")?;
            Ok(EXIT_OK)
        }
        Command::Construct {
            family,
            output,
            labeled,
        } => {
            let (graph, cover, hamming) = match (family.multipartite, family.hamming) {
                (Some(sizes), _) => {
                    if labeled {
                        return Err(Error::InvalidSpec("--labeled applies to Hamming graphs".into()));
                    }
                    let spec = PartiteSpec::new(&sizes)?;
                    (make_complete_multipartite(&spec), cover_multipartite(&spec)?, None)
                }
                (_, Some(factors)) => {
                    let spec = HammingSpec::new(&factors)?;
                    (make_hamming(&spec), cover_hamming(&spec)?, Some(spec))
                }
                _ => unreachable!("clap enforces one family"),
            };
            let report = verify_cover(&graph, &cover);
            if !report.valid {
                return Err(Error::Internal(format!("constructed cover fails: {}", report.summary())));
            }
            let text = match (&hamming, labeled) {
                (Some(spec), true) => cover.to_labeled_text(spec)?,
                _ => cover.to_text(),
            };
            match &output {
                Some(p) => {
                    fs::write(p, text)?;
                    writeln!(out, "size={}", cover.size())?;
                }
                None => out.write_all(text.as_bytes())?,
            }
            Ok(EXIT_OK)
        }
        Command::Verify {
            graph,
            cover,
            strict,
            hamming,
            dot,
        } => {
            let g = read_graph(&graph)?;
            let family = recorded_family(&g);
            let factors = hamming.or(match &family {
                Some(RecordedFamily::Hamming(f)) => Some(SizeList(f.clone())),
                _ => None,
            });
            let spec = factors.map(|f| HammingSpec::new(&f)).transpose()?;
            let c = Cover::from_text(&fs::read_to_string(&cover)?, spec.as_ref())?;
            let report = if strict {
                let Some(RecordedFamily::Multipartite(sizes)) = family else {
                    return Err(Error::InvalidSpec(
                        "--strict needs a graph written by `gen --multipartite`".into(),
                    ));
                };
                verify_cover_normal_form(&g, &PartiteSpec::new(&sizes)?, &c)
            } else {
                verify_cover(&g, &c)
            };
            write_report(&report, out)?;
            if let Some(p) = dot {
                fs::write(p, to_dot(&g, Some(&c)))?;
            }
            Ok(if report.valid { EXIT_OK } else { EXIT_UNPROVEN })
        }
        Command::Solve {
            graph,
            budget,
            output,
        } => {
            let g = read_graph(&graph)?;
            let result = solve_min_cover(&g, budget)?;
            writeln!(
                out,
                "size={} optimal={} nodes={}",
                result.size, result.proof_of_optimality, result.nodes_explored
            )?;
            if let Some(p) = output {
                fs::write(p, result.optimum.to_text())?;
            }
            if !result.proof_of_optimality {
                writeln!(err, "node budget exhausted; size is an upper bound")?;
                return Ok(EXIT_UNPROVEN);
            }
            Ok(EXIT_OK)
        }
        Command::Paths { graph, count_only } => {
            let g = read_graph(&graph)?;
            let pool = enumerate_isometric_paths(&g, &all_pairs_distances(&g))?;
            if !count_only {
                for p in pool.paths() {
                    let line: Vec<String> = p.vertices().iter().map(usize::to_string).collect();
                    writeln!(out, "{}", line.join(" "))?;
                }
            }
            writeln!(out, "count={}", pool.len())?;
            Ok(EXIT_OK)
        }
        Command::Selftest { max_n } => {
            let rows = selftest_rows(max_n);
            let mut failed = 0;
            for row in &rows {
                writeln!(out, "{row}")?;
                failed += usize::from(!row.passed());
            }
            writeln!(out, "selftest passed={} failed={failed}", rows.len() - failed)?;
            Ok(if failed == 0 { EXIT_OK } else { EXIT_INTERNAL })
        }
    }
}

fn write_report(report: &VerifyReport, out: &mut dyn Write) -> std::io::Result<()> {
    writeln!(out, "{}", report.summary())?;
    for (i, v) in report.path_verdicts.iter().enumerate() {
        match v {
            None => writeln!(out, "path {i} out-of-range")?,
            Some(v) if !v.is_ok() => writeln!(
                out,
                "path {i} simple={} walk={} isometric={}",
                v.simple, v.walk, v.isometric
            )?,
            Some(_) => {}
        }
    }
    if !report.uncovered.is_empty() {
        let list: Vec<String> = report.uncovered.iter().map(usize::to_string).collect();
        writeln!(out, "uncovered {}", list.join(" "))?;
    }
    for v in &report.normal_form_violations {
        writeln!(out, "normal-form {v}")?;
    }
    Ok(())
}

/// One formula-versus-solver comparison.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct SelftestRow {
    pub family: &'static str,
    pub spec: Vec<usize>,
    pub formula: Option<usize>,
    pub solver: Option<usize>,
    pub proven: bool,
}

impl SelftestRow {
    pub fn passed(&self) -> bool {
        self.proven && self.formula.is_some() && self.formula == self.solver
    }
}

impl std::fmt::Display for SelftestRow {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        let show = |v: Option<usize>| v.map_or("error".to_string(), |v| v.to_string());
        let spec: Vec<String> = self.spec.iter().map(usize::to_string).collect();
        write!(
            f,
            "{} {} formula={} solver={}{} {}",
            self.family,
            spec.join(","),
            show(self.formula),
            show(self.solver),
            if self.proven { "" } else { " (unproven)" },
            if self.passed() { "PASS" } else { "FAIL" }
        )
    }
}

/// Non-increasing integer vectors with at least `min_parts` parts summing
/// to at most `max_n`, in lexicographic order.
pub fn partitions_up_to(max_n: usize, min_parts: usize) -> Vec<Vec<usize>> {
    fn rec(remaining: usize, cap: usize, cur: &mut Vec<usize>, out: &mut Vec<Vec<usize>>, min_parts: usize) {
        if cur.len() >= min_parts {
            out.push(cur.clone());
        }
        for s in (1..=cap.min(remaining)).rev() {
            cur.push(s);
            rec(remaining - s, s, cur, out, min_parts);
            cur.pop();
        }
    }
    let mut out = Vec::new();
    rec(max_n, max_n, &mut Vec::new(), &mut out, min_parts);
    out.sort();
    out
}

/// Hamming factor tuples (2 or 3 factors, sorted) with at most `max_n` vertices.
pub fn hamming_specs_up_to(max_n: usize) -> Vec<Vec<usize>> {
    let mut out = Vec::new();
    for a in 2..=max_n / 2 {
        for b in a..=max_n / a {
            out.push(vec![a, b]);
            for c in b..=max_n / (a * b) {
                out.push(vec![a, b, c]);
            }
        }
    }
    out.sort();
    out
}

pub fn selftest_rows(max_n: usize) -> Vec<SelftestRow> {
    let mut jobs: Vec<(&'static str, Vec<usize>)> = partitions_up_to(max_n, 2)
        .into_iter()
        .map(|s| ("multipartite", s))
        .collect();
    jobs.extend(hamming_specs_up_to(max_n).into_iter().map(|f| ("hamming", f)));
    jobs.par_iter()
        .map(|(family, spec)| {
            let (formula, graph) = if *family == "multipartite" {
                let p = PartiteSpec::new(spec).expect("generated sizes are positive");
                (ip_multipartite(&p).ok().map(|r| r.value), make_complete_multipartite(&p))
            } else {
                let h = HammingSpec::new(spec).expect("generated factors are at least 2");
                (ip_hamming(&h).ok().map(|r| r.value), make_hamming(&h))
            };
            let solved = solve_min_cover(&graph, None).ok();
            SelftestRow {
                family,
                spec: spec.clone(),
                formula,
                solver: solved.as_ref().map(|s| s.size),
                proven: solved.is_some_and(|s| s.proof_of_optimality),
            }
        })
        .collect()
}
