//! Exact minimum isometric path cover by exhaustive path enumeration and
//! branch-and-bound set cover. Intended for graphs of a few dozen vertices.

use crate::cover::{Cover, Path, Provenance};
use crate::error::{Error, Result};
use crate::formulas::div_ceil;
use crate::graph::{all_pairs_distances, DistanceMatrix, Graph};

pub const DEFAULT_POOL_CAP: usize = 10_000_000;
pub const DEFAULT_NODE_BUDGET: u64 = 100_000_000;
/// Vertex sets are `u128` masks.
pub const MAX_VERTICES: usize = 128;

type Mask = u128;

/// Every isometric path of a graph, each stored once with its smaller
/// endpoint first, in lexicographic order of vertex sequences.
#[derive(Clone, Debug)]
pub struct PathPool {
    paths: Vec<Path>,
    masks: Vec<Mask>,
    max_len: usize,
}

impl PathPool {
    pub fn paths(&self) -> &[Path] {
        &self.paths
    }

    pub fn masks(&self) -> &[Mask] {
        &self.masks
    }

    pub fn len(&self) -> usize {
        self.paths.len()
    }

    pub fn is_empty(&self) -> bool {
        self.paths.is_empty()
    }

    /// Vertex count of the longest path in the pool.
    pub fn max_path_len(&self) -> usize {
        self.max_len
    }
}

fn mask_of(vertices: &[usize]) -> Mask {
    vertices.iter().fold(0, |m, &v| m | (1 << v))
}

pub fn enumerate_isometric_paths(g: &Graph, d: &DistanceMatrix) -> Result<PathPool> {
    enumerate_isometric_paths_capped(g, d, DEFAULT_POOL_CAP)
}

pub fn enumerate_isometric_paths_capped(
    g: &Graph,
    d: &DistanceMatrix,
    cap: usize,
) -> Result<PathPool> {
    let n = g.vertex_count();
    if n > MAX_VERTICES {
        return Err(Error::TooLarge(n));
    }
    if !d.is_connected() {
        return Err(Error::Disconnected);
    }
    let mut paths = Vec::new();
    let mut stack = Vec::new();
    for s in 0..n {
        paths.push(vec![s]);
        for t in s + 1..n {
            stack.clear();
            stack.push(s);
            extend_towards(g, d, t, &mut stack, &mut paths, cap)?;
        }
        if paths.len() > cap {
            return Err(Error::PoolBudget(cap));
        }
    }
    paths.sort_unstable();
    let masks = paths.iter().map(|p| mask_of(p)).collect();
    let max_len = paths.iter().map(Vec::len).max().unwrap_or(0);
    Ok(PathPool {
        paths: paths.into_iter().map(Path::new).collect(),
        masks,
        max_len,
    })
}

// Depth-first extension of `stack` (which starts at its source) along
// vertices that stay on a geodesic to `target`.
fn extend_towards(
    g: &Graph,
    d: &DistanceMatrix,
    target: usize,
    stack: &mut Vec<usize>,
    out: &mut Vec<Vec<usize>>,
    cap: usize,
) -> Result<()> {
    let source = stack[0];
    let last = *stack.last().unwrap();
    if last == target {
        if out.len() >= cap {
            return Err(Error::PoolBudget(cap));
        }
        out.push(stack.clone());
        return Ok(());
    }
    let step = stack.len() as u32;
    let total = d.get(source, target);
    for &w in g.neighbors(last) {
        if d.get(source, w) == step && d.get(w, target) == total - step {
            stack.push(w);
            extend_towards(g, d, target, stack, out, cap)?;
            stack.pop();
        }
    }
    Ok(())
}

/// Repeatedly takes the first pool path (in canonical order) covering the
/// most still-uncovered vertices.
pub fn greedy_cover(g: &Graph, pool: &PathPool) -> Cover {
    let n = g.vertex_count();
    let mut uncovered: Mask = if n == 0 { 0 } else { Mask::MAX >> (MAX_VERTICES - n) };
    let mut cover = Cover::new(Provenance::ExactSolver, "greedy");
    while uncovered != 0 {
        let mut best = None;
        let mut best_gain = 0;
        for (i, &m) in pool.masks.iter().enumerate() {
            let gain = (m & uncovered).count_ones();
            if gain > best_gain {
                best_gain = gain;
                best = Some(i);
            }
        }
        let i = best.expect("pool covers every vertex");
        uncovered &= !pool.masks[i];
        cover.push(pool.paths[i].clone());
    }
    cover
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct SolveResult {
    pub optimum: Cover,
    pub size: usize,
    pub nodes_explored: u64,
    /// False when the node budget ran out before the search finished.
    pub proof_of_optimality: bool,
}

struct Search<'a> {
    pool: &'a PathPool,
    // Pool indices of the paths through each vertex, canonical order.
    through: Vec<Vec<usize>>,
    max_len: usize,
    budget: u64,
    nodes: u64,
    exhausted: bool,
    bound: usize,
    best: Option<Vec<usize>>,
    chosen: Vec<usize>,
}

impl Search<'_> {
    fn run(&mut self, uncovered: Mask) {
        if self.nodes >= self.budget {
            self.exhausted = true;
            return;
        }
        self.nodes += 1;
        if uncovered == 0 {
            if self.chosen.len() < self.bound {
                self.bound = self.chosen.len();
                self.best = Some(self.chosen.clone());
            }
            return;
        }
        let remaining = uncovered.count_ones() as usize;
        if self.chosen.len() + div_ceil(remaining, self.max_len) >= self.bound {
            return;
        }
        let v = uncovered.trailing_zeros() as usize;
        for k in 0..self.through[v].len() {
            let i = self.through[v][k];
            self.chosen.push(i);
            self.run(uncovered & !self.pool.masks[i]);
            self.chosen.pop();
            if self.exhausted {
                return;
            }
        }
    }
}

/// Minimum isometric path cover of a connected graph.
///
/// Branches on the lowest uncovered vertex, trying every pool path through
/// it in canonical order, and prunes when the chosen count plus
/// `ceil(uncovered / longest pool path)` cannot beat the incumbent. The
/// greedy cover is the fallback incumbent; the search accepts any cover up
/// to its size, so the result is the first optimum in search order.
pub fn solve_min_cover(g: &Graph, budget: Option<u64>) -> Result<SolveResult> {
    let d = all_pairs_distances(g);
    let pool = enumerate_isometric_paths(g, &d)?;
    let n = g.vertex_count();
    if n == 0 {
        return Ok(SolveResult {
            optimum: Cover::new(Provenance::ExactSolver, "empty graph"),
            size: 0,
            nodes_explored: 0,
            proof_of_optimality: true,
        });
    }
    let greedy = greedy_cover(g, &pool);

    let mut through = vec![Vec::new(); n];
    for (i, p) in pool.paths.iter().enumerate() {
        for &v in p.vertices() {
            through[v].push(i);
        }
    }
    // Singletons only matter when nothing longer passes through the vertex.
    for list in &mut through {
        if list.iter().any(|&i| pool.paths[i].len() > 1) {
            list.retain(|&i| pool.paths[i].len() > 1);
        }
    }

    let mut search = Search {
        pool: &pool,
        through,
        max_len: pool.max_len,
        budget: budget.unwrap_or(DEFAULT_NODE_BUDGET),
        nodes: 0,
        exhausted: false,
        bound: greedy.size() + 1,
        best: None,
        chosen: Vec::new(),
    };
    search.run(Mask::MAX >> (MAX_VERTICES - n));

    let optimum = match &search.best {
        Some(ids) => Cover::from_paths(
            ids.iter().map(|&i| pool.paths[i].clone()).collect(),
            Provenance::ExactSolver,
            "branch-and-bound",
        ),
        None => greedy,
    };
    Ok(SolveResult {
        size: optimum.size(),
        optimum,
        nodes_explored: search.nodes,
        proof_of_optimality: !search.exhausted,
    })
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::cover::verify_cover;
    use crate::graph::{make_complete_multipartite, make_hamming, HammingSpec, PartiteSpec};

    fn pool_of(g: &Graph) -> PathPool {
        enumerate_isometric_paths(g, &all_pairs_distances(g)).unwrap()
    }

    fn cycle(n: usize) -> Graph {
        let edges: Vec<_> = (0..n).map(|i| (i, (i + 1) % n)).collect();
        Graph::from_edges(n, &edges).unwrap()
    }

    #[test]
    fn pool_examples() {
        let k2 = Graph::from_edges(2, &[(0, 1)]).unwrap();
        assert_eq!(pool_of(&k2).len(), 3);

        let p3 = Graph::from_edges(3, &[(0, 1), (1, 2)]).unwrap();
        let pool = pool_of(&p3);
        assert_eq!(pool.len(), 6);
        assert!(pool.paths().contains(&Path::new(vec![0, 1, 2])));

        let k3 = Graph::from_edges(3, &[(0, 1), (0, 2), (1, 2)]).unwrap();
        let pool = pool_of(&k3);
        assert_eq!(pool.len(), 6);
        assert_eq!(pool.max_path_len(), 2);
    }

    #[test]
    fn pool_is_sorted_and_canonical() {
        let g = make_hamming(&HammingSpec::new(&[2, 3]).unwrap());
        let pool = pool_of(&g);
        assert!(pool.paths().windows(2).all(|w| w[0] < w[1]));
        assert!(pool.paths().iter().all(|p| p.first() <= p.last()));
    }

    #[test]
    fn disconnected_and_capped_inputs_fail() {
        let g = Graph::from_edges(3, &[(0, 1)]).unwrap();
        assert!(matches!(solve_min_cover(&g, None), Err(Error::Disconnected)));
        let g = make_hamming(&HammingSpec::new(&[3, 3]).unwrap());
        let d = all_pairs_distances(&g);
        assert!(matches!(
            enumerate_isometric_paths_capped(&g, &d, 5),
            Err(Error::PoolBudget(5))
        ));
    }

    #[test]
    fn greedy_examples() {
        let cube = make_hamming(&HammingSpec::new(&[2, 2, 2]).unwrap());
        let c = greedy_cover(&cube, &pool_of(&cube));
        assert!(c.size() <= 3);
        assert!(verify_cover(&cube, &c).valid);

        let k1 = Graph::from_edges(1, &[]).unwrap();
        let c = greedy_cover(&k1, &pool_of(&k1));
        assert_eq!(c.paths(), &[Path::new(vec![0])]);

        let k21 = make_complete_multipartite(&PartiteSpec::new(&[2, 1]).unwrap());
        let c = greedy_cover(&k21, &pool_of(&k21));
        assert_eq!(c.size(), 1);
        assert_eq!(c.paths()[0].len(), 3);
    }

    #[test]
    fn solver_examples() {
        let g = make_complete_multipartite(&PartiteSpec::new(&[2, 2, 1]).unwrap());
        let r = solve_min_cover(&g, None).unwrap();
        assert_eq!(r.size, 2);
        assert!(r.proof_of_optimality);
        assert!(verify_cover(&g, &r.optimum).valid);

        let r = solve_min_cover(&cycle(5), None).unwrap();
        assert_eq!(r.size, 2);

        let k1 = Graph::from_edges(1, &[]).unwrap();
        assert_eq!(solve_min_cover(&k1, None).unwrap().size, 1);
    }

    #[test]
    fn solver_is_deterministic() {
        let g = make_hamming(&HammingSpec::new(&[3, 3]).unwrap());
        let a = solve_min_cover(&g, None).unwrap();
        let b = solve_min_cover(&g, None).unwrap();
        assert_eq!(a, b);
        assert_eq!(a.size, 3);
    }

    #[test]
    fn exhausted_budget_is_reported() {
        let g = make_hamming(&HammingSpec::new(&[2, 2, 3]).unwrap());
        let r = solve_min_cover(&g, Some(10)).unwrap();
        assert!(!r.proof_of_optimality);
        assert!(verify_cover(&g, &r.optimum).valid);
        assert_eq!(r.nodes_explored, 10);
    }
}
