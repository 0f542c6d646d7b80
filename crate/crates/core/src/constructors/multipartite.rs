//! Optimal covers of complete multipartite graphs.
//!
//! Each step removes a 3-path made of two vertices of the largest part and
//! one vertex of another part, then recurses on what is left. Which other
//! part, and where the recursion stops, depends on the case of the
//! remaining graph.

use std::collections::BTreeSet;

use crate::cover::{Cover, Path, Provenance};
use crate::error::{Error, Result};
use crate::formulas::{ip_multipartite, is_dominant_part, is_many_odd, CaseTag};
use crate::graph::PartiteSpec;

use super::base::{base_cover_lookup, Family};

/// Remaining vertices of one part, ascending.
#[derive(Clone, Debug)]
struct Part {
    vertices: Vec<usize>,
}

impl Part {
    fn len(&self) -> usize {
        self.vertices.len()
    }

    fn take_lowest(&mut self) -> usize {
        self.vertices.remove(0)
    }
}

pub fn cover_multipartite(spec: &PartiteSpec) -> Result<Cover> {
    let target = ip_multipartite(spec)?;
    let mut parts: Vec<Part> = spec
        .blocks()
        .into_iter()
        .map(|b| Part {
            vertices: b.collect(),
        })
        .collect();
    let mut cover = Cover::new(
        Provenance::FormulaConstruction,
        format!("multipartite {}", join(spec.sizes())),
    );
    let mut expected: Option<usize> = None;
    // Hypothesis that the last step promised to preserve.
    let mut carried: Option<CaseTag> = None;

    loop {
        parts.retain(|p| p.len() > 0);
        // Stable: equal sizes keep their original block order.
        parts.sort_by_key(|p| std::cmp::Reverse(p.len()));
        let sizes: Vec<usize> = parts.iter().map(Part::len).collect();
        let current = PartiteSpec::new(&sizes)?;
        let formula = ip_multipartite(&current)?;
        if let Some(e) = expected {
            if formula.value != e {
                return Err(Error::Internal(format!(
                    "after a step the remaining graph {sizes:?} needs {} paths, expected {e}",
                    formula.value
                )));
            }
        }
        if let Some(case) = carried {
            let holds = match case {
                CaseTag::DominantPart => is_dominant_part(&current),
                CaseTag::ManyOdd => is_many_odd(&current),
                _ => !is_dominant_part(&current) && !is_many_odd(&current),
            };
            if !holds {
                return Err(Error::Internal(format!(
                    "step did not preserve the {case} condition, remaining {sizes:?}"
                )));
            }
        }

        let n = current.n();
        let j = match formula.case {
            CaseTag::DominantPart if n - sizes[0] == 1 => {
                star_base(&parts, &mut cover);
                break;
            }
            CaseTag::DominantPart => 1,
            CaseTag::ManyOdd if n == current.odd_count() => {
                complete_base(&parts, &mut cover);
                break;
            }
            CaseTag::ManyOdd if sizes == [2, 1, 1] => {
                let (a1, a2) = (parts[0].vertices[0], parts[0].vertices[1]);
                let (b, c) = (parts[1].vertices[0], parts[2].vertices[0]);
                cover.push(Path::new(vec![a1, b, a2]));
                cover.push(Path::new(vec![b, c]));
                break;
            }
            CaseTag::ManyOdd => last_odd_part(&sizes).ok_or_else(|| {
                Error::Internal(format!("no odd part besides the largest in {sizes:?}"))
            })?,
            CaseTag::Balanced if n <= 8 => {
                table_base(&current, &parts, &mut cover)?;
                break;
            }
            CaseTag::Balanced => last_odd_part(&sizes).unwrap_or(sizes.len() - 1),
            other => return Err(Error::Internal(format!("unexpected case {other}"))),
        };

        let a = parts[0].take_lowest();
        let a2 = parts[0].take_lowest();
        let centre = parts[j].take_lowest();
        cover.push(Path::new(vec![a, centre, a2]));
        expected = Some(formula.value - 1);
        carried = Some(formula.case);
    }

    if cover.size() != target.value {
        return Err(Error::Internal(format!(
            "constructed {} paths for {:?}, formula says {}",
            cover.size(),
            spec.sizes(),
            target.value
        )));
    }
    Ok(cover)
}

/// Largest index `j >= 1` with an odd part size.
fn last_odd_part(sizes: &[usize]) -> Option<usize> {
    (1..sizes.len()).rev().find(|&j| sizes[j] % 2 == 1)
}

// K_{m,1}: pair up the big part through the hub, one 2-path for a leftover.
fn star_base(parts: &[Part], cover: &mut Cover) {
    let hub = parts[1].vertices[0];
    for pair in parts[0].vertices.chunks(2) {
        match *pair {
            [a, b] => cover.push(Path::new(vec![a, hub, b])),
            [a] => cover.push(Path::new(vec![a, hub])),
            _ => unreachable!(),
        }
    }
}

// Every part is a single vertex: consecutive pairs, the last pair reusing
// the second-to-last vertex when the count is odd.
fn complete_base(parts: &[Part], cover: &mut Cover) {
    let mut vs: Vec<usize> = parts.iter().flat_map(|p| p.vertices.iter().copied()).collect();
    vs.sort_unstable();
    for pair in vs.chunks(2) {
        match *pair {
            [a, b] => cover.push(Path::new(vec![a, b])),
            [b] => cover.push(Path::new(vec![vs[vs.len() - 2], b])),
            _ => unreachable!(),
        }
    }
}

// Relabels the frozen cover of `current` onto the remaining vertices.
fn table_base(current: &PartiteSpec, parts: &[Part], cover: &mut Cover) -> Result<()> {
    let base = base_cover_lookup(Family::Multipartite, current.sizes())?;
    let relabel: Vec<usize> = parts.iter().flat_map(|p| p.vertices.iter().copied()).collect();
    for p in base.paths() {
        cover.push(Path::new(p.vertices().iter().map(|&v| relabel[v]).collect()));
    }
    Ok(())
}

/// Rewrites a cover of `K_{n1,…,nr}` into normal form without growing it:
/// single vertices become edges, and a 3-path sharing an end vertex with an
/// earlier 3-path drops that end.
pub fn normalize_multipartite_cover(spec: &PartiteSpec, cover: &Cover) -> Cover {
    let mut ends = BTreeSet::new();
    let mut out = Cover::new(cover.provenance(), cover.note());
    for p in cover.paths() {
        let path = match *p.vertices() {
            [v] => {
                let part = spec.part_of(v);
                let other = (0..spec.n()).find(|&u| spec.part_of(u) != part).expect("r >= 2");
                Path::new(vec![v, other])
            }
            [a, b, c] => {
                let a_free = !ends.contains(&a);
                let c_free = !ends.contains(&c);
                match (a_free, c_free) {
                    (true, true) => {
                        ends.insert(a);
                        ends.insert(c);
                        p.clone()
                    }
                    (false, true) => Path::new(vec![b, c]),
                    _ => Path::new(vec![a, b]),
                }
            }
            _ => p.clone(),
        };
        out.push(path);
    }
    out
}

fn join(values: &[usize]) -> String {
    values.iter().map(usize::to_string).collect::<Vec<_>>().join(",")
}
