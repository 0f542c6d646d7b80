//! Simple undirected graphs, the two graph families, and BFS distances.
//!
//! Vertex numbering is canonical so that covers written by one run can be
//! checked by another:
//!
//! * complete multipartite graphs place the parts in non-increasing size
//!   order, each part on a contiguous block of indices;
//! * Hamming graphs use the mixed-radix index
//!   `((x1 * n2) + x2) * n3 + x3` (first coordinate most significant).

use std::collections::VecDeque;
use std::fmt::Write as _;

use crate::error::{Error, Result};

/// Immutable simple undirected graph.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Graph {
    adjacency: Vec<Vec<usize>>,
    labels: Option<Vec<String>>,
    comments: Vec<String>,
}

impl Graph {
    /// Builds a graph from an edge list. Self-loops, duplicate edges and
    /// out-of-range endpoints are rejected.
    pub fn from_edges(vertex_count: usize, edges: &[(usize, usize)]) -> Result<Self> {
        let mut adjacency = vec![Vec::new(); vertex_count];
        for &(u, v) in edges {
            for w in [u, v] {
                if w >= vertex_count {
                    return Err(Error::OutOfRange {
                        what: "vertex",
                        value: w,
                        limit: vertex_count,
                    });
                }
            }
            if u == v {
                return Err(Error::InvalidSpec(format!("self-loop at vertex {u}")));
            }
            adjacency[u].push(v);
            adjacency[v].push(u);
        }
        for (v, list) in adjacency.iter_mut().enumerate() {
            list.sort_unstable();
            if list.windows(2).any(|w| w[0] == w[1]) {
                return Err(Error::InvalidSpec(format!("duplicate edge at vertex {v}")));
            }
        }
        Ok(Self {
            adjacency,
            labels: None,
            comments: Vec::new(),
        })
    }

    pub fn with_labels(mut self, labels: Vec<String>) -> Self {
        assert_eq!(labels.len(), self.vertex_count(), "one label per vertex");
        self.labels = Some(labels);
        self
    }

    pub fn with_comment(mut self, comment: impl Into<String>) -> Self {
        self.comments.push(comment.into());
        self
    }

    pub fn vertex_count(&self) -> usize {
        self.adjacency.len()
    }

    pub fn edge_count(&self) -> usize {
        self.adjacency.iter().map(Vec::len).sum::<usize>() / 2
    }

    pub fn neighbors(&self, v: usize) -> &[usize] {
        &self.adjacency[v]
    }

    pub fn is_adjacent(&self, u: usize, v: usize) -> bool {
        self.adjacency[u].binary_search(&v).is_ok()
    }

    /// Edges as `(u, v)` with `u < v`, in lexicographic order.
    pub fn edges(&self) -> impl Iterator<Item = (usize, usize)> + '_ {
        self.adjacency
            .iter()
            .enumerate()
            .flat_map(|(u, list)| list.iter().filter(move |&&v| v > u).map(move |&v| (u, v)))
    }

    pub fn labels(&self) -> Option<&[String]> {
        self.labels.as_deref()
    }

    /// Display label of `v`, falling back to its index.
    pub fn label(&self, v: usize) -> String {
        match &self.labels {
            Some(labels) => labels[v].clone(),
            None => v.to_string(),
        }
    }

    pub fn comments(&self) -> &[String] {
        &self.comments
    }

    pub fn is_connected(&self) -> bool {
        let n = self.vertex_count();
        if n == 0 {
            return true;
        }
        bfs(self, 0).iter().all(|&d| d != UNREACHABLE)
    }

    /// Serializes to the `p`/`c`/`e` text format. Comments follow the
    /// header line, edges follow in lexicographic order.
    pub fn to_text(&self) -> String {
        let mut out = String::new();
        let _ = writeln!(out, "p {} {}", self.vertex_count(), self.edge_count());
        for c in &self.comments {
            if c.is_empty() {
                out.push_str("c\n");
            } else {
                let _ = writeln!(out, "c {c}");
            }
        }
        for (u, v) in self.edges() {
            let _ = writeln!(out, "e {u} {v}");
        }
        out
    }

    pub fn from_text(text: &str) -> Result<Self> {
        let mut header: Option<(usize, usize)> = None;
        let mut edges = Vec::new();
        let mut comments = Vec::new();
        for (i, raw) in text.lines().enumerate() {
            let line_no = i + 1;
            let line = raw.trim_end();
            let err = |msg: &str| Error::Parse {
                line: line_no,
                msg: msg.to_string(),
            };
            if line.is_empty() {
                continue;
            }
            let mut fields = line.split_ascii_whitespace();
            let kind = fields.next().unwrap_or_default();
            match (kind, header) {
                ("p", None) => {
                    let n = parse_field(fields.next(), line_no)?;
                    let m = parse_field(fields.next(), line_no)?;
                    if fields.next().is_some() {
                        return Err(err("trailing fields after `p n m`"));
                    }
                    header = Some((n, m));
                }
                ("p", Some(_)) => return Err(err("duplicate `p` line")),
                (_, None) => return Err(err("first line must be `p <n> <m>`")),
                ("c", Some(_)) => {
                    let rest = line[1..].strip_prefix(' ').unwrap_or(&line[1..]);
                    comments.push(rest.to_string());
                }
                ("e", Some(_)) => {
                    let u = parse_field(fields.next(), line_no)?;
                    let v = parse_field(fields.next(), line_no)?;
                    if fields.next().is_some() {
                        return Err(err("trailing fields after `e u v`"));
                    }
                    edges.push((u, v));
                }
                _ => return Err(err("unknown line kind")),
            }
        }
        let (n, m) = header.ok_or(Error::Parse {
            line: 0,
            msg: "missing `p` line".into(),
        })?;
        if edges.len() != m {
            return Err(Error::Parse {
                line: 0,
                msg: format!("header declares {m} edges, found {}", edges.len()),
            });
        }
        let mut g = Graph::from_edges(n, &edges)?;
        g.comments = comments;
        Ok(g)
    }
}

fn parse_field(field: Option<&str>, line: usize) -> Result<usize> {
    let field = field.ok_or(Error::Parse {
        line,
        msg: "missing field".into(),
    })?;
    field.parse().map_err(|_| Error::Parse {
        line,
        msg: format!("not a nonnegative integer: {field:?}"),
    })
}

/// Part sizes of a complete multipartite graph, sorted non-increasing.
#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub struct PartiteSpec {
    sizes: Vec<usize>,
    // input_order[i] is the caller's index of sorted part i.
    input_order: Vec<usize>,
}

impl PartiteSpec {
    pub fn new(sizes: &[usize]) -> Result<Self> {
        if sizes.is_empty() {
            return Err(Error::InvalidSpec("no parts given".into()));
        }
        if let Some(pos) = sizes.iter().position(|&s| s == 0) {
            return Err(Error::InvalidSpec(format!("part {pos} has size 0")));
        }
        let mut input_order: Vec<usize> = (0..sizes.len()).collect();
        input_order.sort_by(|&a, &b| sizes[b].cmp(&sizes[a]));
        let sorted = input_order.iter().map(|&i| sizes[i]).collect();
        Ok(Self {
            sizes: sorted,
            input_order,
        })
    }

    pub fn sizes(&self) -> &[usize] {
        &self.sizes
    }

    /// Sizes in the order they were given to [`PartiteSpec::new`].
    pub fn input_sizes(&self) -> Vec<usize> {
        let mut out = vec![0; self.sizes.len()];
        for (sorted, &orig) in self.input_order.iter().enumerate() {
            out[orig] = self.sizes[sorted];
        }
        out
    }

    pub fn input_order(&self) -> &[usize] {
        &self.input_order
    }

    pub fn n(&self) -> usize {
        self.sizes.iter().sum()
    }

    pub fn r(&self) -> usize {
        self.sizes.len()
    }

    /// Number of parts of odd size.
    pub fn odd_count(&self) -> usize {
        self.sizes.iter().filter(|&&s| s % 2 == 1).count()
    }

    pub fn largest(&self) -> usize {
        self.sizes[0]
    }

    /// First vertex index of sorted part `i`.
    pub fn block_start(&self, i: usize) -> usize {
        self.sizes[..i].iter().sum()
    }

    /// Index ranges of the parts, in sorted order.
    pub fn blocks(&self) -> Vec<std::ops::Range<usize>> {
        let mut start = 0;
        self.sizes
            .iter()
            .map(|&s| {
                let r = start..start + s;
                start += s;
                r
            })
            .collect()
    }

    /// Sorted part index containing vertex `v`.
    pub fn part_of(&self, v: usize) -> usize {
        let mut start = 0;
        for (i, &s) in self.sizes.iter().enumerate() {
            if v < start + s {
                return i;
            }
            start += s;
        }
        panic!("vertex {v} out of range for {} vertices", self.n());
    }
}

/// Factor sizes of a Hamming graph `K_{n1} □ … □ K_{nr}`, with `1 <= r <= 3`.
#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub struct HammingSpec {
    factors: Vec<usize>,
}

impl HammingSpec {
    pub fn new(factors: &[usize]) -> Result<Self> {
        if factors.is_empty() || factors.len() > 3 {
            return Err(Error::InvalidSpec(format!(
                "Hamming graphs need 1 to 3 factors, got {}",
                factors.len()
            )));
        }
        if let Some(&f) = factors.iter().find(|&&f| f < 2) {
            return Err(Error::InvalidSpec(format!("factor {f} is below 2")));
        }
        Ok(Self {
            factors: factors.to_vec(),
        })
    }

    pub fn factors(&self) -> &[usize] {
        &self.factors
    }

    pub fn n(&self) -> usize {
        self.factors.iter().product()
    }

    pub fn r(&self) -> usize {
        self.factors.len()
    }

    pub fn encode(&self, coords: &[usize]) -> Result<usize> {
        if coords.len() != self.r() {
            return Err(Error::InvalidSpec(format!(
                "expected {} coordinates, got {}",
                self.r(),
                coords.len()
            )));
        }
        let mut index = 0;
        for (&x, &n) in coords.iter().zip(&self.factors) {
            if x >= n {
                return Err(Error::OutOfRange {
                    what: "coordinate",
                    value: x,
                    limit: n,
                });
            }
            index = index * n + x;
        }
        Ok(index)
    }

    pub fn decode(&self, index: usize) -> Result<Vec<usize>> {
        if index >= self.n() {
            return Err(Error::OutOfRange {
                what: "vertex",
                value: index,
                limit: self.n(),
            });
        }
        let mut coords = vec![0; self.r()];
        let mut rest = index;
        for (slot, &n) in coords.iter_mut().zip(&self.factors).rev() {
            *slot = rest % n;
            rest /= n;
        }
        Ok(coords)
    }
}

pub fn format_coords(coords: &[usize]) -> String {
    let inner: Vec<String> = coords.iter().map(usize::to_string).collect();
    format!("({})", inner.join(","))
}

pub fn make_complete_multipartite(spec: &PartiteSpec) -> Graph {
    let blocks = spec.blocks();
    let mut edges = Vec::new();
    for (i, a) in blocks.iter().enumerate() {
        for b in &blocks[i + 1..] {
            for u in a.clone() {
                for v in b.clone() {
                    edges.push((u, v));
                }
            }
        }
    }
    let input_sizes = spec.input_sizes();
    Graph::from_edges(spec.n(), &edges)
        .expect("generated edges are valid")
        .with_labels(multipartite_labels(spec))
        .with_comment(format!("multipartite {}", join(&input_sizes)))
}

fn multipartite_labels(spec: &PartiteSpec) -> Vec<String> {
    spec.sizes()
        .iter()
        .zip(spec.input_order())
        .flat_map(|(&s, &orig)| (0..s).map(move |k| format!("{orig}:{k}")))
        .collect()
}

/// Complete multipartite graph where each part is additionally turned into
/// a complete graph minus the given near-perfect matching.
///
/// `pairings[k]` lists the non-adjacent pairs (offsets within the part) of
/// the `k`-th part in the caller's original size order.
pub fn make_augmented_multipartite(
    spec: &PartiteSpec,
    pairings: &[Vec<(usize, usize)>],
) -> Result<Graph> {
    if pairings.len() != spec.r() {
        return Err(Error::InvalidPairing(format!(
            "expected pairings for {} parts, got {}",
            spec.r(),
            pairings.len()
        )));
    }
    let blocks = spec.blocks();
    let mut edges = Vec::new();
    for (i, a) in blocks.iter().enumerate() {
        for b in &blocks[i + 1..] {
            for u in a.clone() {
                for v in b.clone() {
                    edges.push((u, v));
                }
            }
        }
    }
    for (sorted, &orig) in spec.input_order().iter().enumerate() {
        let size = spec.sizes()[sorted];
        let pairs = &pairings[orig];
        if pairs.len() != size / 2 {
            return Err(Error::InvalidPairing(format!(
                "part {orig} of size {size} needs {} pairs, got {}",
                size / 2,
                pairs.len()
            )));
        }
        let mut mate = vec![None; size];
        for &(x, y) in pairs {
            if x >= size || y >= size || x == y {
                return Err(Error::InvalidPairing(format!(
                    "pair ({x},{y}) invalid for part {orig} of size {size}"
                )));
            }
            if mate[x].is_some() || mate[y].is_some() {
                return Err(Error::InvalidPairing(format!(
                    "pair ({x},{y}) overlaps another pair in part {orig}"
                )));
            }
            mate[x] = Some(y);
            mate[y] = Some(x);
        }
        let start = blocks[sorted].start;
        for (x, m) in mate.iter().enumerate() {
            for y in x + 1..size {
                if *m != Some(y) {
                    edges.push((start + x, start + y));
                }
            }
        }
    }
    let pair_text: Vec<String> = pairings
        .iter()
        .map(|ps| {
            ps.iter()
                .map(|(x, y)| format!("{x}-{y}"))
                .collect::<Vec<_>>()
                .join(",")
        })
        .collect();
    Ok(Graph::from_edges(spec.n(), &edges)?
        .with_labels(multipartite_labels(spec))
        .with_comment(format!(
            "augmented {} pairs {}",
            join(&spec.input_sizes()),
            pair_text.join(";")
        )))
}

pub fn make_hamming(spec: &HammingSpec) -> Graph {
    let n = spec.n();
    let coords: Vec<Vec<usize>> = (0..n).map(|v| spec.decode(v).unwrap()).collect();
    let mut edges = Vec::new();
    for u in 0..n {
        for v in u + 1..n {
            let diff = coords[u].iter().zip(&coords[v]).filter(|(a, b)| a != b).count();
            if diff == 1 {
                edges.push((u, v));
            }
        }
    }
    Graph::from_edges(n, &edges)
        .expect("generated edges are valid")
        .with_labels(coords.iter().map(|c| format_coords(c)).collect())
        .with_comment(format!("hamming {}", join(spec.factors())))
}

fn join(values: &[usize]) -> String {
    values
        .iter()
        .map(usize::to_string)
        .collect::<Vec<_>>()
        .join(",")
}

/// Distance between disconnected vertices.
pub const UNREACHABLE: u32 = u32::MAX;

/// All-pairs shortest path lengths.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct DistanceMatrix {
    n: usize,
    data: Vec<u32>,
}

impl DistanceMatrix {
    pub fn len(&self) -> usize {
        self.n
    }

    pub fn is_empty(&self) -> bool {
        self.n == 0
    }

    pub fn get(&self, u: usize, v: usize) -> u32 {
        self.data[u * self.n + v]
    }

    pub fn row(&self, u: usize) -> &[u32] {
        &self.data[u * self.n..(u + 1) * self.n]
    }

    pub fn is_connected(&self) -> bool {
        self.data.iter().all(|&d| d != UNREACHABLE)
    }

    /// Largest finite distance.
    pub fn diameter(&self) -> u32 {
        self.data
            .iter()
            .copied()
            .filter(|&d| d != UNREACHABLE)
            .max()
            .unwrap_or(0)
    }
}

fn bfs(g: &Graph, source: usize) -> Vec<u32> {
    let mut dist = vec![UNREACHABLE; g.vertex_count()];
    let mut queue = VecDeque::new();
    dist[source] = 0;
    queue.push_back(source);
    while let Some(u) = queue.pop_front() {
        for &w in g.neighbors(u) {
            if dist[w] == UNREACHABLE {
                dist[w] = dist[u] + 1;
                queue.push_back(w);
            }
        }
    }
    dist
}

pub fn all_pairs_distances(g: &Graph) -> DistanceMatrix {
    let n = g.vertex_count();
    let mut data = Vec::with_capacity(n * n);
    for s in 0..n {
        data.extend(bfs(g, s));
    }
    DistanceMatrix { n, data }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn partite(sizes: &[usize]) -> Graph {
        make_complete_multipartite(&PartiteSpec::new(sizes).unwrap())
    }

    #[test]
    fn multipartite_edge_counts() {
        assert_eq!(partite(&[1, 1]).edge_count(), 1);
        let c4 = partite(&[2, 2]);
        assert_eq!((c4.vertex_count(), c4.edge_count()), (4, 4));
        let g = partite(&[3, 3, 2]);
        assert_eq!((g.vertex_count(), g.edge_count()), (8, 21));
    }

    #[test]
    fn multipartite_rejects_empty_and_zero() {
        assert!(matches!(PartiteSpec::new(&[]), Err(Error::InvalidSpec(_))));
        assert!(matches!(PartiteSpec::new(&[2, 0]), Err(Error::InvalidSpec(_))));
    }

    #[test]
    fn partite_spec_sorts_and_remembers_input_order() {
        let spec = PartiteSpec::new(&[1, 3, 2]).unwrap();
        assert_eq!(spec.sizes(), &[3, 2, 1]);
        assert_eq!(spec.input_order(), &[1, 2, 0]);
        assert_eq!(spec.input_sizes(), vec![1, 3, 2]);
        assert_eq!(spec.odd_count(), 2);
        let g = make_complete_multipartite(&spec);
        assert_eq!(g.label(0), "1:0");
        assert_eq!(g.label(5), "0:0");
        assert_eq!(spec.part_of(4), 1);
    }

    #[test]
    fn augmented_examples() {
        let spec = PartiteSpec::new(&[2, 2]).unwrap();
        let g = make_augmented_multipartite(&spec, &[vec![(0, 1)], vec![(0, 1)]]).unwrap();
        assert_eq!(g.edge_count(), 4);
        assert_eq!(g.edges().collect::<Vec<_>>(), partite(&[2, 2]).edges().collect::<Vec<_>>());

        let spec = PartiteSpec::new(&[4, 2]).unwrap();
        let g =
            make_augmented_multipartite(&spec, &[vec![(0, 1), (2, 3)], vec![(0, 1)]]).unwrap();
        assert_eq!(g.edge_count(), 12);
        for (u, v) in [(0, 2), (0, 3), (1, 2), (1, 3)] {
            assert!(g.is_adjacent(u, v));
        }
        assert!(!g.is_adjacent(0, 1));
        assert!(!g.is_adjacent(2, 3));

        let spec = PartiteSpec::new(&[3, 2]).unwrap();
        let g = make_augmented_multipartite(&spec, &[vec![(0, 1)], vec![(0, 1)]]).unwrap();
        assert_eq!(g.edge_count(), 6 + 2);
        assert!(g.is_adjacent(0, 2) && g.is_adjacent(1, 2) && !g.is_adjacent(0, 1));
    }

    #[test]
    fn augmented_pairings_follow_input_order() {
        // Input order (2, 4): the 4-part is listed second but is block 0.
        let spec = PartiteSpec::new(&[2, 4]).unwrap();
        let g =
            make_augmented_multipartite(&spec, &[vec![(0, 1)], vec![(0, 2), (1, 3)]]).unwrap();
        assert!(!g.is_adjacent(0, 2) && !g.is_adjacent(1, 3));
        assert!(g.is_adjacent(0, 1));
    }

    #[test]
    fn augmented_rejects_bad_pairings() {
        let spec = PartiteSpec::new(&[4, 2]).unwrap();
        let overlap = make_augmented_multipartite(&spec, &[vec![(0, 1), (1, 2)], vec![(0, 1)]]);
        assert!(matches!(overlap, Err(Error::InvalidPairing(_))));
        let range = make_augmented_multipartite(&spec, &[vec![(0, 1), (2, 4)], vec![(0, 1)]]);
        assert!(matches!(range, Err(Error::InvalidPairing(_))));
        let count = make_augmented_multipartite(&spec, &[vec![(0, 1)], vec![(0, 1)]]);
        assert!(matches!(count, Err(Error::InvalidPairing(_))));
    }

    #[test]
    fn hamming_examples() {
        let g = make_hamming(&HammingSpec::new(&[2, 2]).unwrap());
        assert_eq!(g.edge_count(), 4);
        let g = make_hamming(&HammingSpec::new(&[2, 2, 2]).unwrap());
        assert_eq!(g.edge_count(), 12);
        let g = make_hamming(&HammingSpec::new(&[3, 3]).unwrap());
        assert_eq!((g.vertex_count(), g.edge_count()), (9, 18));
        assert!((0..9).all(|v| g.neighbors(v).len() == 4));
        assert_eq!(g.label(5), "(1,2)");
    }

    #[test]
    fn hamming_rejects_small_factors() {
        assert!(matches!(HammingSpec::new(&[2, 1]), Err(Error::InvalidSpec(_))));
        assert!(matches!(HammingSpec::new(&[]), Err(Error::InvalidSpec(_))));
        assert!(HammingSpec::new(&[2, 2, 2, 2]).is_err());
    }

    #[test]
    fn coordinate_encoding() {
        let spec = HammingSpec::new(&[2, 3, 5]).unwrap();
        assert_eq!(spec.encode(&[0, 0, 0]).unwrap(), 0);
        assert_eq!(spec.encode(&[1, 2, 4]).unwrap(), 29);
        assert_eq!(spec.encode(&[0, 1, 2]).unwrap(), 7);
        assert_eq!(spec.decode(7).unwrap(), vec![0, 1, 2]);
        assert!(matches!(spec.encode(&[0, 3, 0]), Err(Error::OutOfRange { .. })));
        assert!(spec.decode(30).is_err());
    }

    #[test]
    fn distance_examples() {
        let g = partite(&[3, 3, 2]);
        let d = all_pairs_distances(&g);
        assert_eq!(d.get(0, 1), 2);
        assert_eq!(d.get(0, 3), 1);
        assert_eq!(d.get(6, 7), 2);
        assert_eq!(d.diameter(), 2);

        let spec = HammingSpec::new(&[2, 2, 2]).unwrap();
        let d = all_pairs_distances(&make_hamming(&spec));
        let u = spec.encode(&[0, 0, 0]).unwrap();
        let v = spec.encode(&[1, 1, 0]).unwrap();
        assert_eq!(d.get(u, v), 2);

        let single = Graph::from_edges(1, &[]).unwrap();
        assert_eq!(all_pairs_distances(&single).get(0, 0), 0);
    }

    #[test]
    fn disconnected_pairs_are_unreachable() {
        let g = Graph::from_edges(3, &[(0, 1)]).unwrap();
        let d = all_pairs_distances(&g);
        assert_eq!(d.get(0, 2), UNREACHABLE);
        assert!(!d.is_connected());
        assert!(!g.is_connected());
    }

    #[test]
    fn text_format_is_exact() {
        let g = partite(&[2, 1]);
        let text = g.to_text();
        assert_eq!(text, "p 3 2\nc multipartite 2,1\ne 0 2\ne 1 2\n");
        let back = Graph::from_text(&text).unwrap();
        assert_eq!(back.to_text(), text);
    }

    #[test]
    fn text_format_errors() {
        assert!(Graph::from_text("e 0 1\n").is_err());
        assert!(Graph::from_text("p 2 2\ne 0 1\n").is_err());
        assert!(Graph::from_text("p 2 1\ne 0 2\n").is_err());
        assert!(Graph::from_text("p 2 1\ne 1 1\n").is_err());
        assert!(Graph::from_text("p 2 1\nx\n").is_err());
    }
}
