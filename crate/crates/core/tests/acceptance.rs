//! Exit criteria. Each test prints one `[PASS]`/`[FAIL]` line; run with
//! `cargo test --release --test acceptance -- --nocapture --test-threads 1`
//! to see them in order.

use std::time::{Duration, Instant};

use rayon::prelude::*;

use isopath::cli::partitions_up_to;
use isopath::constructors::base::transcribed_hamming_covers;
use isopath::constructors::{base_cover_lookup, cover_hamming2, cover_hamming3, cover_multipartite, Family};
use isopath::cover::{verify_cover, verify_cover_normal_form, Cover};
use isopath::formulas::{
    div_ceil, ip_hamming, ip_hamming2, ip_hamming3, ip_lower_bound_hamming, ip_lower_bound_multipartite,
    ip_multipartite,
};
use isopath::graph::{make_augmented_multipartite, make_complete_multipartite, make_hamming, HammingSpec, PartiteSpec};
use isopath::solver::solve_min_cover;

fn report(id: u32, name: &str, failures: &[String], elapsed: Duration, limit: Duration) {
    let ok = failures.is_empty() && elapsed <= limit;
    println!(
        "[{}] AC{id} {name}: {} failures, {:.2}s (limit {}s)",
        if ok { "PASS" } else { "FAIL" },
        failures.len(),
        elapsed.as_secs_f64(),
        limit.as_secs()
    );
    for f in failures.iter().take(40) {
        println!("    {f}");
    }
    assert!(failures.is_empty(), "AC{id} failures: {failures:?}");
    assert!(elapsed <= limit, "AC{id} took {elapsed:?}, limit {limit:?}");
}

#[test]
fn ac1_multipartite_formula_matches_solver() {
    let start = Instant::now();
    let specs = partitions_up_to(8, 2);
    let failures: Vec<String> = specs
        .par_iter()
        .filter_map(|sizes| {
            let spec = PartiteSpec::new(sizes).unwrap();
            let formula = ip_multipartite(&spec).unwrap().value;
            let solved = solve_min_cover(&make_complete_multipartite(&spec), None).unwrap();
            (!solved.proof_of_optimality || solved.size != formula)
                .then(|| format!("{sizes:?}: formula {formula}, solver {}", solved.size))
        })
        .collect();
    assert!(specs.len() > 24);
    report(1, "multipartite formula = exact optimum, n <= 8", &failures, start.elapsed(), Duration::from_secs(60));
}

#[test]
fn ac2_hamming_formula_matches_solver() {
    let start = Instant::now();
    let cases: [(&[usize], usize); 6] = [
        (&[2, 2], 2),
        (&[2, 3], 2),
        (&[2, 4], 3),
        (&[3, 3], 3),
        (&[2, 2, 2], 2),
        (&[2, 2, 3], 4),
    ];
    let mut failures = Vec::new();
    for (factors, expected) in cases {
        let spec = HammingSpec::new(factors).unwrap();
        let formula = ip_hamming(&spec).unwrap().value;
        let solved = solve_min_cover(&make_hamming(&spec), None).unwrap();
        if formula != expected || solved.size != expected || !solved.proof_of_optimality {
            failures.push(format!("{factors:?}: expected {expected}, formula {formula}, solver {}", solved.size));
        }
    }
    let lb = ip_lower_bound_hamming(&HammingSpec::new(&[2, 2, 3]).unwrap());
    if lb != 3 {
        failures.push(format!("2x2x3 counting bound is {lb}, expected 3"));
    }
    report(2, "Hamming formula = exact optimum on small products", &failures, start.elapsed(), Duration::from_secs(120));
}

#[test]
fn ac2_hamming_2x2x5_exceptional() {
    let start = Instant::now();
    let spec = HammingSpec::new(&[2, 2, 5]).unwrap();
    let g = make_hamming(&spec);
    let solved = solve_min_cover(&g, None).unwrap();
    let mut failures = Vec::new();
    if !verify_cover(&g, &solved.optimum).valid || !solved.proof_of_optimality || solved.size != 6 {
        failures.push(format!(
            "2x2x5: best {} after {} nodes, proven={}",
            solved.size, solved.nodes_explored, solved.proof_of_optimality
        ));
    }
    report(2, "exceptional 2x2x5 optimum is 6", &failures, start.elapsed(), Duration::from_secs(120));
}

#[test]
fn ac3_multipartite_constructions() {
    let start = Instant::now();
    let specs: Vec<Vec<usize>> = partitions_up_to(15, 2).into_iter().filter(|s| s.len() <= 5).collect();
    let failures: Vec<String> = specs
        .par_iter()
        .filter_map(|sizes| {
            let spec = PartiteSpec::new(sizes).unwrap();
            let g = make_complete_multipartite(&spec);
            let formula = ip_multipartite(&spec).unwrap().value;
            match cover_multipartite(&spec) {
                Err(e) => Some(format!("{sizes:?}: {e}")),
                Ok(c) => {
                    let r = verify_cover_normal_form(&g, &spec, &c);
                    (!r.valid || c.size() != formula)
                        .then(|| format!("{sizes:?}: {} formula {formula}", r.summary()))
                }
            }
        })
        .collect();
    report(3, "multipartite covers valid, optimal, normal form (r <= 5, n <= 15)", &failures, start.elapsed(), Duration::from_secs(10));
}

#[test]
fn ac4_hamming2_constructions() {
    let start = Instant::now();
    let mut failures = Vec::new();
    for n1 in 2..=12 {
        for n2 in 2..=12 {
            let g = make_hamming(&HammingSpec::new(&[n1, n2]).unwrap());
            let want = div_ceil(n1 * n2, 3);
            match cover_hamming2(n1, n2) {
                Err(e) => failures.push(format!("({n1},{n2}): {e}")),
                Ok(c) => {
                    let r = verify_cover(&g, &c);
                    if !r.valid || c.size() != want || ip_hamming2(n1, n2).unwrap().value != want {
                        failures.push(format!("({n1},{n2}): {} want {want}", r.summary()));
                    }
                }
            }
        }
    }
    report(4, "K_n1 x K_n2 covers valid with ceil(n1 n2 / 3) paths, 2..=12", &failures, start.elapsed(), Duration::from_secs(10));
}

#[test]
fn ac5_hamming3_constructions() {
    let start = Instant::now();
    let triples: Vec<[usize; 3]> = (2..=8)
        .flat_map(|a| (2..=8).flat_map(move |b| (2..=8).map(move |c| [a, b, c])))
        .collect();
    let failures: Vec<String> = triples
        .par_iter()
        .filter_map(|&[a, b, c]| {
            let n = a * b * c;
            let twos = [a, b, c].iter().filter(|&&x| x == 2).count();
            let odd_third = [a, b, c].iter().any(|&x| x != 2 && x % 2 == 1);
            let want = if twos == 2 && odd_third {
                n / 4 + 1
            } else if [a, b, c].iter().all(|x| x % 2 == 0) {
                n / 4
            } else {
                div_ceil(n, 4)
            };
            let formula = ip_hamming3(a, b, c).unwrap().value;
            let g = make_hamming(&HammingSpec::new(&[a, b, c]).unwrap());
            match cover_hamming3(a, b, c) {
                Err(e) => Some(format!("({a},{b},{c}): {e}")),
                Ok(cover) => {
                    let r = verify_cover(&g, &cover);
                    (!r.valid || cover.size() != want || formula != want)
                        .then(|| format!("({a},{b},{c}): {} formula {formula} want {want}", r.summary()))
                }
            }
        })
        .collect();
    report(5, "K_n1 x K_n2 x K_n3 covers valid and formula-sized, 2..=8", &failures, start.elapsed(), Duration::from_secs(60));
}

#[test]
fn ac6_transcribed_covers() {
    let start = Instant::now();
    // Path counts of the printed listings. The 2x3x5 listing is the
    // modified 2x3x3 cover (5 paths) plus three more.
    let expected: [(&[usize], usize); 13] = [
        (&[2, 2], 2),
        (&[2, 3], 2),
        (&[2, 4], 3),
        (&[3, 3], 3),
        (&[2, 2, 2], 2),
        (&[2, 3, 3], 5),
        (&[2, 3, 4], 6),
        (&[2, 3, 5], 8),
        (&[3, 3, 3], 7),
        (&[3, 3, 4], 9),
        (&[2, 3, 6], 9),
        (&[2, 5, 5], 13),
        (&[3, 5, 5], 19),
    ];
    let transcribed = transcribed_hamming_covers();
    let mut failures = Vec::new();
    for (key, count) in expected {
        let family = if key.len() == 2 { Family::Hamming2 } else { Family::Hamming3 };
        let Some((_, note, raw)) = transcribed.iter().find(|(k, _, _)| k == key) else {
            failures.push(format!("{key:?}: not transcribed"));
            continue;
        };
        let spec = HammingSpec::new(key).unwrap();
        let g = make_hamming(&spec);
        let d = isopath::graph::all_pairs_distances(&g);
        // Check each printed path on its own so a typo is named, not hidden.
        for (i, p) in raw.iter().enumerate() {
            let path = isopath::Path::new(p.iter().map(|c| spec.encode(c).unwrap()).collect());
            if !isopath::cover::is_isometric_path(&g, &d, &path).unwrap() {
                failures.push(format!("{key:?} path {i} {p:?} is not isometric"));
            }
        }
        let stored: Cover = base_cover_lookup(family, key).unwrap();
        let r = verify_cover(&g, &stored);
        if !r.valid || stored.size() != count || raw.len() != count {
            failures.push(format!("{key:?} ({note}): {} expected {count}", r.summary()));
        }
    }
    report(6, "transcribed covers verify with their printed path counts", &failures, start.elapsed(), Duration::from_secs(10));
}

/// All partitions of `0..k` into `k / 2` disjoint pairs (one vertex left
/// over when `k` is odd).
fn near_perfect_matchings(k: usize) -> Vec<Vec<(usize, usize)>> {
    fn rec(free: Vec<usize>, skip_left: bool, cur: &mut Vec<(usize, usize)>, out: &mut Vec<Vec<(usize, usize)>>) {
        if free.len() < 2 {
            out.push(cur.clone());
            return;
        }
        let first = free[0];
        if skip_left {
            rec(free[1..].to_vec(), false, cur, out);
        }
        for idx in 1..free.len() {
            let rest: Vec<usize> = free[1..].iter().copied().filter(|&v| v != free[idx]).collect();
            cur.push((first, free[idx]));
            rec(rest, skip_left, cur, out);
            cur.pop();
        }
    }
    let mut out = Vec::new();
    rec((0..k).collect(), k % 2 == 1, &mut Vec::new(), &mut out);
    out
}

fn pairings(sizes: &[usize], limit: usize) -> Vec<Vec<Vec<(usize, usize)>>> {
    let mut acc: Vec<Vec<Vec<(usize, usize)>>> = vec![vec![]];
    for &s in sizes {
        let options = near_perfect_matchings(s);
        acc = acc
            .into_iter()
            .flat_map(|prefix| {
                options.iter().map(move |m| {
                    let mut p = prefix.clone();
                    p.push(m.clone());
                    p
                })
            })
            .collect();
    }
    acc.truncate(limit);
    acc
}

#[test]
fn ac7_augmented_multipartite() {
    let start = Instant::now();
    assert_eq!(near_perfect_matchings(3).len(), 3);
    assert_eq!(near_perfect_matchings(4).len(), 3);
    assert_eq!(near_perfect_matchings(5).len(), 15);
    let specs: Vec<Vec<usize>> = partitions_up_to(8, 2).into_iter().filter(|s| s[0] >= 3).collect();
    let failures: Vec<String> = specs
        .par_iter()
        .flat_map_iter(|sizes| {
            let spec = PartiteSpec::new(sizes).unwrap();
            let formula = ip_multipartite(&spec).unwrap().value;
            let choices = pairings(sizes, 3);
            let mut fails = Vec::new();
            if choices.len() != 3 {
                fails.push(format!("{sizes:?}: only {} pairings", choices.len()));
            }
            for p in choices {
                let g = make_augmented_multipartite(&spec, &p).unwrap();
                let solved = solve_min_cover(&g, None).unwrap();
                if !solved.proof_of_optimality || solved.size != formula {
                    fails.push(format!("{sizes:?} pairs {p:?}: formula {formula}, solver {}", solved.size));
                }
            }
            fails
        })
        .collect();
    report(7, "augmented multipartite optimum = formula, 3 pairings each", &failures, start.elapsed(), Duration::from_secs(120));
}

#[test]
fn ac8_lower_bounds_and_permutations() {
    let start = Instant::now();
    let mut failures = Vec::new();
    let partitions = partitions_up_to(14, 2);
    let step = partitions.len() / 100;
    let multipartite: Vec<&Vec<usize>> = partitions.iter().step_by(step).take(100).collect();
    let triples: Vec<[usize; 3]> = (2..=9)
        .flat_map(|a| (2..=9).flat_map(move |b| (2..=9).map(move |c| [a, b, c])))
        .collect();
    let hamming: Vec<&[usize; 3]> = triples.iter().step_by(triples.len() / 100).take(100).collect();
    assert_eq!(multipartite.len() + hamming.len(), 200);

    for sizes in multipartite {
        let spec = PartiteSpec::new(sizes).unwrap();
        let v = ip_multipartite(&spec).unwrap().value;
        if v < ip_lower_bound_multipartite(&spec) {
            failures.push(format!("{sizes:?}: {v} below ceil(n/3)"));
        }
    }
    for &&[a, b, c] in &hamming {
        let v = ip_hamming3(a, b, c).unwrap().value;
        if v < ip_lower_bound_hamming(&HammingSpec::new(&[a, b, c]).unwrap()) {
            failures.push(format!("({a},{b},{c}): {v} below ceil(n/4)"));
        }
        let two = ip_hamming2(a, b).unwrap().value;
        if two < ip_lower_bound_hamming(&HammingSpec::new(&[a, b]).unwrap()) {
            failures.push(format!("({a},{b}): {two} below ceil(n/3)"));
        }
        for [x, y, z] in [[a, b, c], [a, c, b], [b, a, c], [b, c, a], [c, a, b], [c, b, a]] {
            if ip_hamming3(x, y, z).unwrap() .value != v {
                failures.push(format!("({x},{y},{z}) differs from ({a},{b},{c})"));
            }
        }
    }
    report(8, "lower bounds and permutation invariance on 200 specs", &failures, start.elapsed(), Duration::from_secs(1));
}
