use crate::cover::{Cover, Path};
use crate::error::{Error, Result};
use crate::graph::HammingSpec;

/// Maps a small Hamming graph onto a coordinate box of a larger one.
///
/// Source axis `i` lands on target axis `axis_map[i]`, shifted by
/// `offsets[i]`. Coordinate boxes are isometric subgraphs, so isometric
/// paths stay isometric under the map.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct SliceEmbedding {
    source: HammingSpec,
    target: HammingSpec,
    axis_map: Vec<usize>,
    offsets: Vec<usize>,
}

impl SliceEmbedding {
    pub fn new(
        source: HammingSpec,
        target: HammingSpec,
        axis_map: Vec<usize>,
        offsets: Vec<usize>,
    ) -> Result<Self> {
        let r = source.r();
        if target.r() != r || axis_map.len() != r || offsets.len() != r {
            return Err(Error::InvalidSpec(
                "embedding needs one axis target and offset per source axis".into(),
            ));
        }
        let mut seen = vec![false; r];
        for (i, &t) in axis_map.iter().enumerate() {
            if t >= r || std::mem::replace(&mut seen[t], true) {
                return Err(Error::InvalidSpec(format!("axis map {axis_map:?} is not a permutation")));
            }
            let reach = source.factors()[i] + offsets[i];
            if reach > target.factors()[t] {
                return Err(Error::OutOfRange {
                    what: "embedded coordinate",
                    value: reach - 1,
                    limit: target.factors()[t],
                });
            }
        }
        Ok(Self {
            source,
            target,
            axis_map,
            offsets,
        })
    }

    /// Same axis order, shifted by `offsets`.
    pub fn shifted(source: HammingSpec, target: HammingSpec, offsets: Vec<usize>) -> Result<Self> {
        let axis_map = (0..source.r()).collect();
        Self::new(source, target, axis_map, offsets)
    }

    pub fn source(&self) -> &HammingSpec {
        &self.source
    }

    pub fn target(&self) -> &HammingSpec {
        &self.target
    }

    pub fn map_vertex(&self, v: usize) -> Result<usize> {
        let coords = self.source.decode(v)?;
        let mut out = vec![0; coords.len()];
        for (i, x) in coords.into_iter().enumerate() {
            out[self.axis_map[i]] = x + self.offsets[i];
        }
        self.target.encode(&out)
    }
}

pub fn embed_cover(c: &Cover, e: &SliceEmbedding) -> Result<Cover> {
    let paths = c
        .paths()
        .iter()
        .map(|p| {
            p.vertices()
                .iter()
                .map(|&v| e.map_vertex(v))
                .collect::<Result<Vec<_>>>()
                .map(Path::new)
        })
        .collect::<Result<Vec<_>>>()?;
    Ok(Cover::from_paths(paths, c.provenance(), c.note()))
}
