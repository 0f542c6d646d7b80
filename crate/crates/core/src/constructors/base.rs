//! Base covers the recursive constructions bottom out on.
//!
//! Hamming covers are entered exactly as listed in the source tables, one
//! `|`-separated path per entry, in coordinates of the graph whose factors
//! are sorted ascending. Covers that the source defines as edits of an
//! earlier cover (remove some paths, add others) are built the same way
//! here. Multipartite covers for the balanced graphs on at most 8 vertices
//! were produced by the exact solver, normalized, and frozen under
//! `fixtures/`.

use std::collections::BTreeMap;
use std::fmt;
use std::sync::OnceLock;

use crate::cover::{parse_tuples, verify_cover, verify_cover_normal_form, Cover, Path, Provenance};
use crate::error::{Error, Result};
use crate::formulas::{ip_hamming, ip_multipartite};
use crate::graph::{make_complete_multipartite, make_hamming, HammingSpec, PartiteSpec};

#[derive(Clone, Copy, Debug, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub enum Family {
    Multipartite,
    Hamming2,
    Hamming3,
}

impl Family {
    pub fn as_str(self) -> &'static str {
        match self {
            Family::Multipartite => "multipartite",
            Family::Hamming2 => "hamming2",
            Family::Hamming3 => "hamming3",
        }
    }

    /// Canonical key order: non-increasing for parts, ascending for factors.
    pub fn canonical_key(self, key: &[usize]) -> Vec<usize> {
        let mut k = key.to_vec();
        match self {
            Family::Multipartite => k.sort_unstable_by(|a, b| b.cmp(a)),
            Family::Hamming2 | Family::Hamming3 => k.sort_unstable(),
        }
        k
    }

    /// Fixture file name, e.g. `hamming3_2-3-3.cover`.
    pub fn fixture_name(self, key: &[usize]) -> String {
        let parts: Vec<String> = self.canonical_key(key).iter().map(usize::to_string).collect();
        format!("{}_{}.cover", self.as_str(), parts.join("-"))
    }
}

impl fmt::Display for Family {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.as_str())
    }
}

type CoordPath = Vec<Vec<usize>>;

fn paths(listing: &str) -> Vec<CoordPath> {
    listing
        .split('|')
        .map(|p| parse_tuples(p, 0).expect("well-formed transcription"))
        .collect()
}

fn edit(base: &[CoordPath], remove: &str, add: &str) -> Vec<CoordPath> {
    let remove = paths(remove);
    for r in &remove {
        assert!(base.contains(r), "edit removes a path that is not present: {r:?}");
    }
    let mut out: Vec<CoordPath> = base.iter().filter(|p| !remove.contains(p)).cloned().collect();
    out.extend(paths(add));
    out
}

const C_2_2: &str = "(0,0)(0,1)|(1,0)(1,1)";
const C_2_3: &str = "(0,0)(0,1)(1,1)|(0,2)(1,2)(1,0)";
const C_2_4: &str = "(0,0)(0,1)(1,1)|(0,2)(1,2)(1,0)|(0,3)(1,3)";
const C_3_3: &str = "(0,0)(2,0)(2,2)|(0,1)(0,2)(1,2)|(1,0)(1,1)(2,1)";

const C_2_2_2: &str = "(0,0,0)(0,0,1)(0,1,1)(1,1,1)|(1,0,1)(1,0,0)(1,1,0)(0,1,0)";

const C_2_3_3: &str = "(0,1,1)(0,1,0)(0,0,0)(1,0,0)|(0,2,2)(0,2,0)(1,2,0)(1,1,0)|\
(0,2,1)(1,2,1)(1,1,1)|(0,0,2)(0,1,2)(1,1,2)|(0,0,1)(1,0,1)(1,0,2)(1,2,2)";

// Two 3-paths of C_2_3_3 extended into layers 3 and 4; needs n3 >= 5.
const STAR_REMOVE: &str = "(0,2,1)(1,2,1)(1,1,1)|(0,0,2)(0,1,2)(1,1,2)";
const STAR_ADD: &str = "(0,2,1)(1,2,1)(1,1,1)(1,1,3)|(0,0,2)(0,1,2)(1,1,2)(1,1,4)";

const C_2_3_4: &str = "(0,1,1)(0,1,0)(0,0,0)(1,0,0)|(0,2,1)(0,2,0)(1,2,0)(1,1,0)|\
(0,2,3)(0,2,2)(1,2,2)(1,1,2)|(0,1,3)(0,1,2)(0,0,2)(1,0,2)|\
(0,0,1)(1,0,1)(1,1,1)(1,1,3)|(1,2,1)(1,2,3)(1,0,3)(0,0,3)";

const C_2_3_5_ADD: &str = "(0,1,4)(0,1,3)(0,2,3)(1,2,3)|(0,0,3)(0,0,4)(0,2,4)(1,2,4)|(1,0,3)(1,0,4)";

const C_3_3_3: &str = "(0,0,0)(0,2,0)(1,2,0)(1,2,1)|(1,1,0)(2,1,0)(2,2,0)(2,2,1)|\
(0,2,1)(0,1,1)(1,1,1)(1,1,2)|(1,0,1)(2,0,1)(2,1,1)(2,1,2)|\
(0,1,0)(0,1,2)(0,2,2)(1,2,2)|(0,0,1)(0,0,2)(2,0,2)(2,2,2)|(1,0,2)(1,0,0)(2,0,0)";

const C_3_3_4: &str = "(0,0,0)(0,2,0)(1,2,0)(1,2,1)|(1,1,0)(2,1,0)(2,2,0)(2,2,1)|\
(0,2,1)(0,1,1)(1,1,1)(1,1,2)|(1,0,1)(2,0,1)(2,1,1)(2,1,2)|\
(0,1,0)(0,1,2)(0,2,2)(1,2,2)|(0,0,2)(2,0,2)(2,2,2)(2,2,3)|\
(0,1,3)(1,1,3)(1,0,3)(1,0,2)|(1,0,0)(2,0,0)(2,0,3)(2,1,3)|(0,0,1)(0,0,3)(0,2,3)(1,2,3)";

const C_2_3_6_ADD: &str = "(0,0,4)(0,0,3)(1,0,3)(1,2,3)|(0,1,3)(0,1,4)(0,2,4)(1,2,4)|\
(0,2,3)(0,2,5)(1,2,5)(1,1,5)|(0,1,5)(0,0,5)(1,0,5)(1,0,4)";

const C_X_5_5_REMOVE: &str = "(1,0,3)(1,0,4)";

const C_2_5_5_ADD: &str = "(0,4,1)(0,4,0)(0,3,0)(1,3,0)|(1,4,0)(1,4,1)(1,3,1)(0,3,1)|\
(0,4,3)(0,4,2)(0,3,2)(1,3,2)|(1,4,2)(1,4,3)(1,3,3)(0,3,3)|\
(1,0,3)(1,0,4)(1,4,4)|(0,4,4)(0,3,4)(1,3,4)";

const C_3_5_5_ADD: &str = "(0,4,0)(2,4,0)(2,0,0)(2,0,1)|(0,3,0)(2,3,0)(2,1,0)(2,1,1)|\
(0,4,1)(0,3,1)(1,3,1)(1,3,0)|(1,4,0)(1,4,1)(2,4,1)(2,2,1)|\
(1,0,3)(2,0,3)(2,2,3)(2,2,0)|(1,0,4)(2,0,4)(2,3,4)(2,3,1)|\
(0,3,2)(2,3,2)(2,1,2)(2,1,3)|(0,4,4)(0,4,2)(2,4,2)(2,0,2)|\
(0,4,3)(1,4,3)(1,3,3)(1,3,2)|(0,3,3)(2,3,3)(2,4,3)(2,4,4)|\
(0,3,4)(1,3,4)(1,4,4)(1,4,2)|(2,2,2)(2,2,4)(2,1,4)";

/// Paths of the modified 2x3x3 cover, in coordinates of a host with
/// factors `(2, 3, m)`, `m >= 5`.
fn star_2_3_3() -> Vec<CoordPath> {
    edit(&paths(C_2_3_3), STAR_REMOVE, STAR_ADD)
}

fn c_2_3_5() -> Vec<CoordPath> {
    let mut out = star_2_3_3();
    out.extend(paths(C_2_3_5_ADD));
    out
}

/// The transcribed Hamming covers with a note on how each was assembled.
/// Keys are ascending factor tuples; the covers for `(2,5,5)` and `(3,5,5)`
/// keep the `(2,3,5)` cover at identity coordinates (first factor, second
/// factor `0..3`, third factor as is).
pub fn transcribed_hamming_covers() -> Vec<(Vec<usize>, &'static str, Vec<CoordPath>)> {
    vec![
        (vec![2, 2], "as listed", paths(C_2_2)),
        (vec![2, 3], "as listed", paths(C_2_3)),
        (vec![2, 4], "as listed", paths(C_2_4)),
        (vec![3, 3], "as listed", paths(C_3_3)),
        (vec![2, 2, 2], "as listed", paths(C_2_2_2)),
        (vec![2, 3, 3], "as listed", paths(C_2_3_3)),
        (vec![2, 3, 4], "as listed", paths(C_2_3_4)),
        (vec![2, 3, 5], "modified 2x3x3 cover plus three paths", c_2_3_5()),
        (vec![3, 3, 3], "as listed", paths(C_3_3_3)),
        (vec![3, 3, 4], "as listed", paths(C_3_3_4)),
        (vec![2, 3, 6], "modified 2x3x3 cover plus four paths", {
            let mut out = star_2_3_3();
            out.extend(paths(C_2_3_6_ADD));
            out
        }),
        (
            vec![2, 5, 5],
            "2x3x5 cover at identity coordinates, one path replaced, six added",
            edit(&c_2_3_5(), C_X_5_5_REMOVE, C_2_5_5_ADD),
        ),
        (
            vec![3, 5, 5],
            "2x3x5 cover at identity coordinates, one path replaced, twelve added",
            edit(&c_2_3_5(), C_X_5_5_REMOVE, C_3_5_5_ADD),
        ),
    ]
}

/// Frozen exact-solver covers of the balanced multipartite graphs with at
/// most 8 vertices.
const MULTIPARTITE_FIXTURES: &[(&[usize], &str)] = &[
    (&[2, 1], include_str!("../../fixtures/multipartite_2-1.cover")),
    (&[2, 2], include_str!("../../fixtures/multipartite_2-2.cover")),
    (&[3, 2], include_str!("../../fixtures/multipartite_3-2.cover")),
    (&[2, 2, 1], include_str!("../../fixtures/multipartite_2-2-1.cover")),
    (&[4, 2], include_str!("../../fixtures/multipartite_4-2.cover")),
    (&[4, 1, 1], include_str!("../../fixtures/multipartite_4-1-1.cover")),
    (&[3, 3], include_str!("../../fixtures/multipartite_3-3.cover")),
    (&[3, 2, 1], include_str!("../../fixtures/multipartite_3-2-1.cover")),
    (&[2, 2, 2], include_str!("../../fixtures/multipartite_2-2-2.cover")),
    (&[2, 2, 1, 1], include_str!("../../fixtures/multipartite_2-2-1-1.cover")),
    (&[4, 3], include_str!("../../fixtures/multipartite_4-3.cover")),
    (&[4, 2, 1], include_str!("../../fixtures/multipartite_4-2-1.cover")),
    (&[3, 2, 2], include_str!("../../fixtures/multipartite_3-2-2.cover")),
    (&[2, 2, 2, 1], include_str!("../../fixtures/multipartite_2-2-2-1.cover")),
    (&[5, 3], include_str!("../../fixtures/multipartite_5-3.cover")),
    (&[5, 2, 1], include_str!("../../fixtures/multipartite_5-2-1.cover")),
    (&[4, 4], include_str!("../../fixtures/multipartite_4-4.cover")),
    (&[4, 3, 1], include_str!("../../fixtures/multipartite_4-3-1.cover")),
    (&[4, 2, 2], include_str!("../../fixtures/multipartite_4-2-2.cover")),
    (&[4, 2, 1, 1], include_str!("../../fixtures/multipartite_4-2-1-1.cover")),
    (&[3, 3, 2], include_str!("../../fixtures/multipartite_3-3-2.cover")),
    (&[3, 2, 2, 1], include_str!("../../fixtures/multipartite_3-2-2-1.cover")),
    (&[2, 2, 2, 2], include_str!("../../fixtures/multipartite_2-2-2-2.cover")),
    (&[2, 2, 2, 1, 1], include_str!("../../fixtures/multipartite_2-2-2-1-1.cover")),
];

pub fn multipartite_fixture_keys() -> impl Iterator<Item = &'static [usize]> {
    MULTIPARTITE_FIXTURES.iter().map(|(k, _)| *k)
}

/// Read-only table of base covers, verified when first loaded.
#[derive(Debug)]
pub struct BaseCoverTable {
    entries: BTreeMap<(Family, Vec<usize>), Cover>,
}

impl BaseCoverTable {
    fn load() -> Result<Self> {
        let mut entries = BTreeMap::new();
        for (key, note, coord_paths) in transcribed_hamming_covers() {
            let spec = HammingSpec::new(&key)?;
            let paths = coord_paths
                .iter()
                .map(|p| p.iter().map(|c| spec.encode(c)).collect::<Result<Vec<_>>>().map(Path::new))
                .collect::<Result<Vec<_>>>()?;
            let cover = Cover::from_paths(paths, Provenance::BaseTable, note);
            let report = verify_cover(&make_hamming(&spec), &cover);
            let expected = ip_hamming(&spec)?.value;
            if !report.valid || cover.size() != expected {
                return Err(Error::Internal(format!(
                    "base cover {key:?} fails verification ({}, formula {expected})",
                    report.summary()
                )));
            }
            let family = if key.len() == 2 { Family::Hamming2 } else { Family::Hamming3 };
            entries.insert((family, key), cover);
        }
        for (key, text) in MULTIPARTITE_FIXTURES {
            let spec = PartiteSpec::new(key)?;
            let cover = Cover::from_text(text, None)?;
            let report = verify_cover_normal_form(&make_complete_multipartite(&spec), &spec, &cover);
            let expected = ip_multipartite(&spec)?.value;
            if !report.valid || cover.size() != expected {
                return Err(Error::Internal(format!(
                    "fixture {} fails verification ({}, formula {expected})",
                    Family::Multipartite.fixture_name(key),
                    report.summary()
                )));
            }
            entries.insert((Family::Multipartite, key.to_vec()), cover);
        }
        Ok(Self { entries })
    }

    pub fn get(&self, family: Family, key: &[usize]) -> Option<&Cover> {
        self.entries.get(&(family, family.canonical_key(key)))
    }

    pub fn keys(&self) -> impl Iterator<Item = (Family, &[usize])> {
        self.entries.keys().map(|(f, k)| (*f, k.as_slice()))
    }

    pub fn len(&self) -> usize {
        self.entries.len()
    }

    pub fn is_empty(&self) -> bool {
        self.entries.is_empty()
    }
}

pub fn base_cover_table() -> Result<&'static BaseCoverTable> {
    static TABLE: OnceLock<std::result::Result<BaseCoverTable, String>> = OnceLock::new();
    TABLE
        .get_or_init(|| BaseCoverTable::load().map_err(|e| e.to_string()))
        .as_ref()
        .map_err(|e| Error::Internal(e.clone()))
}

/// Copy of the stored cover for `key`, which is sorted internally.
/// Hamming covers are returned in coordinates of the ascending factor order.
pub fn base_cover_lookup(family: Family, key: &[usize]) -> Result<Cover> {
    base_cover_table()?
        .get(family, key)
        .cloned()
        .ok_or_else(|| Error::UnknownKey {
            family: family.as_str(),
            key: key.to_vec(),
        })
}
