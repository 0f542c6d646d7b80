//! Paths, covers, and certificate verification.

use std::collections::BTreeSet;
use std::fmt;
use std::fmt::Write as _;
use std::str::FromStr;

use crate::error::{Error, Result};
use crate::graph::{all_pairs_distances, format_coords, DistanceMatrix, Graph, HammingSpec, PartiteSpec};

/// Ordered vertex sequence. Adjacency and isometry are checked against a
/// host graph by [`is_isometric_path`], not at construction.
#[derive(Clone, Debug, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct Path(Vec<usize>);

impl Path {
    pub fn new(vertices: Vec<usize>) -> Self {
        assert!(!vertices.is_empty(), "a path has at least one vertex");
        Path(vertices)
    }

    pub fn vertices(&self) -> &[usize] {
        &self.0
    }

    pub fn len(&self) -> usize {
        self.0.len()
    }

    pub fn is_empty(&self) -> bool {
        self.0.is_empty()
    }

    pub fn first(&self) -> usize {
        self.0[0]
    }

    pub fn last(&self) -> usize {
        self.0[self.0.len() - 1]
    }

    pub fn reversed(&self) -> Path {
        Path(self.0.iter().rev().copied().collect())
    }

    /// Same path stored with the smaller endpoint first.
    pub fn canonical(&self) -> Path {
        if self.last() < self.first() {
            self.reversed()
        } else {
            self.clone()
        }
    }
}

impl From<Vec<usize>> for Path {
    fn from(v: Vec<usize>) -> Self {
        Path::new(v)
    }
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash)]
pub enum Provenance {
    FormulaConstruction,
    ExactSolver,
    File,
    BaseTable,
}

impl Provenance {
    pub fn as_str(self) -> &'static str {
        match self {
            Provenance::FormulaConstruction => "formula-construction",
            Provenance::ExactSolver => "exact-solver",
            Provenance::File => "file",
            Provenance::BaseTable => "base-table",
        }
    }
}

impl fmt::Display for Provenance {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.as_str())
    }
}

impl FromStr for Provenance {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        match s {
            "formula-construction" => Ok(Provenance::FormulaConstruction),
            "exact-solver" => Ok(Provenance::ExactSolver),
            "file" => Ok(Provenance::File),
            "base-table" => Ok(Provenance::BaseTable),
            other => Err(Error::Parse {
                line: 0,
                msg: format!("unknown provenance {other:?}"),
            }),
        }
    }
}

/// A list of paths meant to cover every vertex. Paths may overlap.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Cover {
    paths: Vec<Path>,
    provenance: Provenance,
    note: String,
}

impl Cover {
    pub fn new(provenance: Provenance, note: impl Into<String>) -> Self {
        Self {
            paths: Vec::new(),
            provenance,
            note: note.into(),
        }
    }

    pub fn from_paths(paths: Vec<Path>, provenance: Provenance, note: impl Into<String>) -> Self {
        Self {
            paths,
            provenance,
            note: note.into(),
        }
    }

    pub fn push(&mut self, path: Path) {
        self.paths.push(path);
    }

    pub fn extend(&mut self, other: Cover) {
        self.paths.extend(other.paths);
    }

    pub fn paths(&self) -> &[Path] {
        &self.paths
    }

    pub fn into_paths(self) -> Vec<Path> {
        self.paths
    }

    pub fn size(&self) -> usize {
        self.paths.len()
    }

    pub fn provenance(&self) -> Provenance {
        self.provenance
    }

    pub fn note(&self) -> &str {
        &self.note
    }

    pub fn with_provenance(mut self, provenance: Provenance, note: impl Into<String>) -> Self {
        self.provenance = provenance;
        self.note = note.into();
        self
    }

    /// Union of the vertex sets of all paths.
    pub fn covered_set(&self) -> BTreeSet<usize> {
        self.paths.iter().flat_map(|p| p.vertices().iter().copied()).collect()
    }

    /// Canonical paths in sorted order, for comparing covers irrespective
    /// of path direction and order.
    pub fn canonical_form(&self) -> Vec<Path> {
        let mut out: Vec<Path> = self.paths.iter().map(Path::canonical).collect();
        out.sort();
        out
    }

    fn header(&self, out: &mut String) {
        let _ = writeln!(out, "# provenance: {}", self.provenance);
        for line in self.note.lines() {
            let _ = writeln!(out, "# note: {line}");
        }
    }

    /// One path per line, space-separated vertex indices.
    pub fn to_text(&self) -> String {
        let mut out = String::new();
        self.header(&mut out);
        for p in &self.paths {
            let line: Vec<String> = p.vertices().iter().map(usize::to_string).collect();
            out.push_str(&line.join(" "));
            out.push('\n');
        }
        out
    }

    /// Same as [`Cover::to_text`] but with coordinate tuples `(x1,x2,x3)`.
    pub fn to_labeled_text(&self, spec: &HammingSpec) -> Result<String> {
        let mut out = String::new();
        self.header(&mut out);
        for p in &self.paths {
            let line = p
                .vertices()
                .iter()
                .map(|&v| spec.decode(v).map(|c| format_coords(&c)))
                .collect::<Result<Vec<_>>>()?;
            out.push_str(&line.join(" "));
            out.push('\n');
        }
        Ok(out)
    }

    /// Parses the plain format. Lines of coordinate tuples are accepted
    /// when `spec` is given.
    pub fn from_text(text: &str, spec: Option<&HammingSpec>) -> Result<Self> {
        let mut cover = Cover::new(Provenance::File, "");
        let mut notes = Vec::new();
        for (i, raw) in text.lines().enumerate() {
            let line_no = i + 1;
            let line = raw.trim();
            if line.is_empty() {
                continue;
            }
            if let Some(comment) = line.strip_prefix('#') {
                let comment = comment.trim_start();
                if let Some(p) = comment.strip_prefix("provenance:") {
                    cover.provenance = p.trim().parse().map_err(|_| Error::Parse {
                        line: line_no,
                        msg: format!("unknown provenance {:?}", p.trim()),
                    })?;
                } else if let Some(n) = comment.strip_prefix("note:") {
                    notes.push(n.trim().to_string());
                }
                continue;
            }
            let vertices = if line.starts_with('(') {
                let spec = spec.ok_or(Error::Parse {
                    line: line_no,
                    msg: "coordinate tuples need Hamming factors".into(),
                })?;
                parse_tuples(line, line_no)?
                    .iter()
                    .map(|c| spec.encode(c))
                    .collect::<Result<Vec<_>>>()?
            } else {
                line.split_ascii_whitespace()
                    .map(|t| {
                        t.parse::<usize>().map_err(|_| Error::Parse {
                            line: line_no,
                            msg: format!("not a vertex index: {t:?}"),
                        })
                    })
                    .collect::<Result<Vec<_>>>()?
            };
            cover.push(Path::new(vertices));
        }
        cover.note = notes.join("\n");
        Ok(cover)
    }
}

/// Parses `(a,b,c)(d,e,f) (g,h,i)`; whitespace between tuples is optional.
pub fn parse_tuples(line: &str, line_no: usize) -> Result<Vec<Vec<usize>>> {
    let err = |msg: String| Error::Parse { line: line_no, msg };
    let mut out = Vec::new();
    let mut rest = line.trim();
    while !rest.is_empty() {
        let body = rest
            .strip_prefix('(')
            .ok_or_else(|| err(format!("expected '(' at {rest:?}")))?;
        let close = body.find(')').ok_or_else(|| err("unclosed tuple".into()))?;
        let coords = body[..close]
            .split(',')
            .map(|t| {
                t.trim()
                    .parse::<usize>()
                    .map_err(|_| err(format!("bad coordinate {t:?}")))
            })
            .collect::<Result<Vec<_>>>()?;
        out.push(coords);
        rest = body[close + 1..].trim_start();
    }
    Ok(out)
}

/// True iff `p` is simple, walks along edges, and its edge length equals
/// the distance between its endpoints. Single vertices count as isometric.
pub fn is_isometric_path(g: &Graph, d: &DistanceMatrix, p: &Path) -> Result<bool> {
    Ok(path_verdict(g, d, p)?.is_ok())
}

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub struct PathVerdict {
    pub simple: bool,
    pub walk: bool,
    pub isometric: bool,
}

impl PathVerdict {
    pub fn is_ok(&self) -> bool {
        self.simple && self.walk && self.isometric
    }
}

fn path_verdict(g: &Graph, d: &DistanceMatrix, p: &Path) -> Result<PathVerdict> {
    let n = g.vertex_count();
    if let Some(&v) = p.vertices().iter().find(|&&v| v >= n) {
        return Err(Error::OutOfRange {
            what: "vertex",
            value: v,
            limit: n,
        });
    }
    let distinct: BTreeSet<usize> = p.vertices().iter().copied().collect();
    let simple = distinct.len() == p.len();
    let walk = p.vertices().windows(2).all(|w| g.is_adjacent(w[0], w[1]));
    let isometric = d.get(p.first(), p.last()) as usize == p.len() - 1;
    Ok(PathVerdict {
        simple,
        walk,
        isometric,
    })
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct VerifyReport {
    pub valid: bool,
    /// `None` for paths that mention a vertex outside the graph.
    pub path_verdicts: Vec<Option<PathVerdict>>,
    pub uncovered: Vec<usize>,
    pub size: usize,
    /// Vertex incidences beyond the first, summed over all vertices.
    pub overlap: usize,
    /// Filled only by [`verify_cover_normal_form`].
    pub normal_form_violations: Vec<String>,
}

impl VerifyReport {
    pub fn summary(&self) -> String {
        let bad = self
            .path_verdicts
            .iter()
            .filter(|v| !v.is_some_and(|v| v.is_ok()))
            .count();
        format!(
            "valid={} size={} uncovered={} bad_paths={} overlap={}",
            self.valid,
            self.size,
            self.uncovered.len(),
            bad,
            self.overlap
        )
    }
}

pub fn verify_cover(g: &Graph, c: &Cover) -> VerifyReport {
    verify_cover_with(g, &all_pairs_distances(g), c)
}

pub fn verify_cover_with(g: &Graph, d: &DistanceMatrix, c: &Cover) -> VerifyReport {
    let n = g.vertex_count();
    let mut hits = vec![0usize; n];
    let mut path_verdicts = Vec::with_capacity(c.size());
    for p in c.paths() {
        let verdict = path_verdict(g, d, p).ok();
        if verdict.is_some() {
            for &v in p.vertices() {
                hits[v] += 1;
            }
        }
        path_verdicts.push(verdict);
    }
    let uncovered: Vec<usize> = (0..n).filter(|&v| hits[v] == 0).collect();
    let overlap = hits.iter().map(|&h| h.saturating_sub(1)).sum();
    let valid = uncovered.is_empty() && path_verdicts.iter().all(|v| v.is_some_and(|v| v.is_ok()));
    VerifyReport {
        valid,
        path_verdicts,
        uncovered,
        size: c.size(),
        overlap,
        normal_form_violations: Vec::new(),
    }
}

/// Strict verification for complete multipartite graphs laid out by
/// `spec`: on top of [`verify_cover`], every path must have 2 or 3
/// vertices, every 3-path must have both ends in one part and its centre in
/// another, and no two 3-paths may share an end vertex.
pub fn verify_cover_normal_form(g: &Graph, spec: &PartiteSpec, c: &Cover) -> VerifyReport {
    let mut report = verify_cover(g, c);
    report.normal_form_violations = normal_form_violations(spec, c);
    report.valid &= report.normal_form_violations.is_empty();
    report
}

pub fn normal_form_violations(spec: &PartiteSpec, c: &Cover) -> Vec<String> {
    let mut out = Vec::new();
    let mut ends = BTreeSet::new();
    for (i, p) in c.paths().iter().enumerate() {
        if p.vertices().iter().any(|&v| v >= spec.n()) {
            out.push(format!("path {i} leaves the graph"));
            continue;
        }
        match p.vertices() {
            [_, _] => {}
            &[a, b, c] => {
                if spec.part_of(a) != spec.part_of(c) || spec.part_of(a) == spec.part_of(b) {
                    out.push(format!("path {i} is not end-end in one part, centre in another"));
                }
                for end in [a, c] {
                    if !ends.insert(end) {
                        out.push(format!("path {i} shares end vertex {end} with another 3-path"));
                    }
                }
            }
            other => out.push(format!("path {i} has {} vertices", other.len())),
        }
    }
    out
}
