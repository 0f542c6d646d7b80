//! Optimal covers of `K_{n1} □ K_{n2}` and `K_{n1} □ K_{n2} □ K_{n3}`.
//!
//! Factors are sorted ascending, a cover is assembled from base covers on
//! coordinate boxes, and the result is mapped back to the caller's factor
//! order.

use crate::cover::{Cover, Provenance};
use crate::error::{Error, Result};
use crate::formulas::ip_hamming;
use crate::graph::HammingSpec;

use super::base::{base_cover_lookup, base_cover_table, Family};
use super::embed::{embed_cover, SliceEmbedding};

pub fn cover_hamming2(n1: usize, n2: usize) -> Result<Cover> {
    cover_hamming(&HammingSpec::new(&[n1, n2])?)
}

pub fn cover_hamming3(n1: usize, n2: usize, n3: usize) -> Result<Cover> {
    cover_hamming(&HammingSpec::new(&[n1, n2, n3])?)
}

/// Cover of a product of 2 or 3 complete graphs, sized by the formula.
pub fn cover_hamming(spec: &HammingSpec) -> Result<Cover> {
    let expected = ip_hamming(spec)?.value;
    let cover = build(spec.factors())?;
    if cover.size() != expected {
        return Err(Error::Internal(format!(
            "constructed {} paths for {:?}, formula says {expected}",
            cover.size(),
            spec.factors()
        )));
    }
    let note = spec
        .factors()
        .iter()
        .map(usize::to_string)
        .collect::<Vec<_>>()
        .join(",");
    Ok(cover.with_provenance(Provenance::FormulaConstruction, format!("hamming {note}")))
}

// Cover in the caller's axis order.
fn build(factors: &[usize]) -> Result<Cover> {
    let mut order: Vec<usize> = (0..factors.len()).collect();
    order.sort_by_key(|&i| factors[i]);
    let sorted: Vec<usize> = order.iter().map(|&i| factors[i]).collect();
    let cover = build_sorted(&sorted)?;
    if sorted == factors {
        return Ok(cover);
    }
    let e = SliceEmbedding::new(
        HammingSpec::new(&sorted)?,
        HammingSpec::new(factors)?,
        order,
        vec![0; factors.len()],
    )?;
    embed_cover(&cover, &e)
}

// Splits `axis` into `[0, first)` and `[first, n)` and covers both boxes.
fn split(factors: &[usize], axis: usize, first: usize) -> Result<Cover> {
    let target = HammingSpec::new(factors)?;
    let mut out = Cover::new(Provenance::FormulaConstruction, "");
    for (len, offset) in [(first, 0), (factors[axis] - first, first)] {
        let mut sub = factors.to_vec();
        sub[axis] = len;
        let mut offsets = vec![0; factors.len()];
        offsets[axis] = offset;
        let e = SliceEmbedding::shifted(HammingSpec::new(&sub)?, target.clone(), offsets)?;
        out.extend(embed_cover(&build(&sub)?, &e)?);
    }
    Ok(out)
}

// Copies of the 2x2x2 cover at the given block origins.
fn tile_cubes(factors: &[usize], origins: impl IntoIterator<Item = [usize; 3]>) -> Result<Cover> {
    let cube = base_cover_lookup(Family::Hamming3, &[2, 2, 2])?;
    let source = HammingSpec::new(&[2, 2, 2])?;
    let target = HammingSpec::new(factors)?;
    let mut out = Cover::new(Provenance::FormulaConstruction, "");
    for origin in origins {
        let e = SliceEmbedding::shifted(source.clone(), target.clone(), origin.to_vec())?;
        out.extend(embed_cover(&cube, &e)?);
    }
    Ok(out)
}

/// Composite entries: (factors, axis to split, size of the first slice).
const COMPOSITES: &[([usize; 3], usize, usize)] = &[
    ([2, 5, 6], 1, 3),
    ([3, 3, 5], 2, 2),
    ([5, 5, 5], 2, 3),
];

fn build_sorted(f: &[usize]) -> Result<Cover> {
    let family = match f.len() {
        2 => Family::Hamming2,
        3 => Family::Hamming3,
        r => return Err(Error::InvalidSpec(format!("no construction for {r} factors"))),
    };
    if let Some(c) = base_cover_table()?.get(family, f) {
        return Ok(c.clone());
    }
    if let [_, b] = *f {
        return if b <= 4 { split(f, 1, 2) } else { split(f, 1, 3) };
    }
    let [a, b, c] = [f[0], f[1], f[2]];
    if f.iter().all(|x| x % 2 == 0) {
        let origins = (0..a).step_by(2).flat_map(|x| {
            (0..b)
                .step_by(2)
                .flat_map(move |y| (0..c).step_by(2).map(move |z| [x, y, z]))
        });
        return tile_cubes(f, origins);
    }
    if a == 2 && b == 2 && c % 2 == 1 {
        // Layer pairs (0,1), (2,3), …, (c-3,c-2), then (c-2,c-1).
        let starts = (0..c - 1).step_by(2).chain(std::iter::once(c - 2));
        return tile_cubes(f, starts.map(|z| [0, 0, z]));
    }
    if let Some(&(_, axis, first)) = COMPOSITES.iter().find(|(k, _, _)| k == f) {
        return split(f, axis, first);
    }
    if c >= 7 || (c == 6 && a >= 3) {
        return split(f, 2, 4);
    }
    if f.contains(&4) {
        return split(f, 2, 2);
    }
    Err(Error::Internal(format!("no construction rule for factors {f:?}")))
}
