//! Closed-form isometric path numbers and counting lower bounds.

use std::fmt;

use crate::error::{Error, Result};
use crate::graph::{HammingSpec, PartiteSpec};

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub enum CaseTag {
    /// `3 n1 > 2 n`: one part holds more than two thirds of the vertices.
    DominantPart,
    /// `3 alpha > n`: many parts of odd size.
    ManyOdd,
    /// Neither of the above; the counting bound `ceil(n/3)` is tight.
    Balanced,
    Hamming2,
    Hamming3Main,
    /// Two factors equal 2 and the third is odd.
    Hamming3Exceptional,
}

impl CaseTag {
    pub fn as_str(self) -> &'static str {
        match self {
            CaseTag::DominantPart => "DOMINANT_PART",
            CaseTag::ManyOdd => "MANY_ODD",
            CaseTag::Balanced => "BALANCED",
            CaseTag::Hamming2 => "HAMMING2",
            CaseTag::Hamming3Main => "HAMMING3_MAIN",
            CaseTag::Hamming3Exceptional => "HAMMING3_EXCEPTIONAL",
        }
    }
}

impl fmt::Display for CaseTag {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.as_str())
    }
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct FormulaResult {
    pub value: usize,
    pub case: CaseTag,
    /// Sizes or factors the value was computed from (sorted for multipartite).
    pub inputs: Vec<usize>,
}

impl fmt::Display for FormulaResult {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "ip={} case={}", self.value, self.case)
    }
}

pub fn div_ceil(a: usize, b: usize) -> usize {
    a.div_ceil(b)
}

pub fn odd_part_count(spec: &PartiteSpec) -> usize {
    spec.odd_count()
}

pub fn is_dominant_part(spec: &PartiteSpec) -> bool {
    3 * spec.largest() > 2 * spec.n()
}

pub fn is_many_odd(spec: &PartiteSpec) -> bool {
    3 * spec.odd_count() > spec.n()
}

/// Isometric path number of `K_{n1,…,nr}`, `r >= 2`.
///
/// The dominant-part test is applied first. Where both the dominant-part
/// and many-odd conditions hold the two formulas must agree; a disagreement
/// is reported as [`Error::FormulaConflict`].
pub fn ip_multipartite(spec: &PartiteSpec) -> Result<FormulaResult> {
    if spec.r() < 2 {
        return Err(Error::InvalidSpec(format!(
            "complete multipartite formula needs at least 2 parts, got {}",
            spec.r()
        )));
    }
    let n = spec.n();
    let alpha = spec.odd_count();
    let dominant = div_ceil(spec.largest(), 2);
    let many_odd = div_ceil(n + alpha, 4);
    let inputs = spec.sizes().to_vec();
    let (value, case) = match (is_dominant_part(spec), is_many_odd(spec)) {
        (true, true) if dominant != many_odd => {
            return Err(Error::FormulaConflict {
                sizes: inputs,
                dominant,
                many_odd,
            })
        }
        (true, _) => (dominant, CaseTag::DominantPart),
        (false, true) => (many_odd, CaseTag::ManyOdd),
        (false, false) => (div_ceil(n, 3), CaseTag::Balanced),
    };
    Ok(FormulaResult { value, case, inputs })
}

/// Isometric path number of the complete graph `K_n`.
pub fn ip_complete(n: usize) -> usize {
    div_ceil(n, 2)
}

fn check_factors(factors: &[usize]) -> Result<()> {
    match factors.iter().find(|&&f| f < 2) {
        Some(f) => Err(Error::InvalidSpec(format!("factor {f} is below 2"))),
        None => Ok(()),
    }
}

pub fn ip_hamming2(n1: usize, n2: usize) -> Result<FormulaResult> {
    check_factors(&[n1, n2])?;
    Ok(FormulaResult {
        value: div_ceil(n1 * n2, 3),
        case: CaseTag::Hamming2,
        inputs: vec![n1, n2],
    })
}

pub fn is_hamming3_exceptional(factors: [usize; 3]) -> bool {
    let twos = factors.iter().filter(|&&f| f == 2).count();
    twos == 2 && factors.iter().any(|&f| f != 2 && f % 2 == 1)
}

pub fn ip_hamming3(n1: usize, n2: usize, n3: usize) -> Result<FormulaResult> {
    check_factors(&[n1, n2, n3])?;
    let n = n1 * n2 * n3;
    let (value, case) = if is_hamming3_exceptional([n1, n2, n3]) {
        (n / 4 + 1, CaseTag::Hamming3Exceptional)
    } else {
        (div_ceil(n, 4), CaseTag::Hamming3Main)
    };
    Ok(FormulaResult {
        value,
        case,
        inputs: vec![n1, n2, n3],
    })
}

/// Dispatches on the number of factors; only products of 2 or 3 complete
/// graphs have a formula here.
pub fn ip_hamming(spec: &HammingSpec) -> Result<FormulaResult> {
    match *spec.factors() {
        [a, b] => ip_hamming2(a, b),
        [a, b, c] => ip_hamming3(a, b, c),
        _ => Err(Error::InvalidSpec(format!(
            "formula needs 2 or 3 factors, got {}",
            spec.r()
        ))),
    }
}

/// `ceil(n / (r + 1))`: an isometric path visits at most `r + 1` vertices.
pub fn ip_lower_bound_hamming(spec: &HammingSpec) -> usize {
    div_ceil(spec.n(), spec.r() + 1)
}

/// `ceil(n / 3)`: an isometric path visits at most 3 vertices.
pub fn ip_lower_bound_multipartite(spec: &PartiteSpec) -> usize {
    div_ceil(spec.n(), 3)
}
