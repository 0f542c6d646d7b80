//! Regenerates `fixtures/`: exact-solver covers of the balanced complete
//! multipartite graphs on at most 8 vertices (normalized), and the
//! transcribed Hamming base covers in coordinate form.
//!
//! cargo run --example freeze_fixtures

use std::fs;
use std::path::Path;

use isopath::cli::partitions_up_to;
use isopath::constructors::base::transcribed_hamming_covers;
use isopath::constructors::{normalize_multipartite_cover, Family};
use isopath::cover::{verify_cover_normal_form, Cover, Path as CoverPath, Provenance};
use isopath::formulas::{ip_multipartite, CaseTag};
use isopath::graph::{make_complete_multipartite, HammingSpec, PartiteSpec};
use isopath::solver::solve_min_cover;

fn main() {
    let dir = Path::new(env!("CARGO_MANIFEST_DIR")).join("fixtures");
    fs::create_dir_all(&dir).unwrap();

    let mut balanced = 0;
    for sizes in partitions_up_to(8, 2) {
        let spec = PartiteSpec::new(&sizes).unwrap();
        let formula = ip_multipartite(&spec).unwrap();
        if formula.case != CaseTag::Balanced {
            continue;
        }
        balanced += 1;
        let g = make_complete_multipartite(&spec);
        let solved = solve_min_cover(&g, None).unwrap();
        assert!(solved.proof_of_optimality);
        assert_eq!(solved.size, formula.value, "{sizes:?}");
        let cover = normalize_multipartite_cover(&spec, &solved.optimum)
            .with_provenance(Provenance::BaseTable, "exact-solver optimum, normalized");
        assert!(verify_cover_normal_form(&g, &spec, &cover).valid);
        fs::write(dir.join(Family::Multipartite.fixture_name(&sizes)), cover.to_text()).unwrap();
    }
    assert_eq!(balanced, 24);

    for (key, note, paths) in transcribed_hamming_covers() {
        let spec = HammingSpec::new(&key).unwrap();
        let family = if key.len() == 2 { Family::Hamming2 } else { Family::Hamming3 };
        let cover = Cover::from_paths(
            paths
                .iter()
                .map(|p| CoverPath::new(p.iter().map(|c| spec.encode(c).unwrap()).collect()))
                .collect(),
            Provenance::BaseTable,
            note,
        );
        let text = cover.to_labeled_text(&spec).unwrap();
        fs::write(dir.join(family.fixture_name(&key)), text).unwrap();
    }
    println!("wrote {} multipartite and 13 Hamming fixtures", balanced);
}
