use std::path::PathBuf;

use saotf_core::probe::{aggregate, check_prefix, scan_file, scan_file_with, Checker};

fn corpus() -> Vec<(String, String)> {
    let dir = PathBuf::from(env!("CARGO_MANIFEST_DIR")).join("../../data/minicorpus");
    let mut paths: Vec<PathBuf> = std::fs::read_dir(&dir)
        .unwrap()
        .map(|e| e.unwrap().path())
        .filter(|p| p.extension().is_some_and(|e| e == "py"))
        .collect();
    paths.sort();
    paths
        .into_iter()
        .map(|p| (p.file_name().unwrap().to_string_lossy().into_owned(), std::fs::read_to_string(&p).unwrap()))
        .collect()
}

#[test]
fn grammar_accepts_every_bundled_file() {
    let files = corpus();
    assert_eq!(files.len(), 200);
    for (name, src) in &files {
        let status = check_prefix(src, Checker::GrammarSubset);
        assert!(status.is_parsable(), "{name}: {:?}", status.reason);
    }
}

#[test]
fn grammar_acceptance_implies_token_level_pass() {
    for (name, src) in corpus().iter().step_by(10) {
        let mut token_level = Vec::new();
        scan_file_with(name, src, Checker::TokenLevel, |_, s| token_level.push(s));
        scan_file_with(name, src, Checker::GrammarSubset, |n, s| {
            if s.is_parsable() {
                assert!(token_level[n - 1].is_parsable(), "{name} prefix {n}");
            }
        });
    }
}

#[test]
fn corpus_failure_fraction_is_strictly_between_zero_and_one() {
    let reports: Vec<_> = corpus()
        .iter()
        .map(|(name, src)| scan_file(name, src, Checker::GrammarSubset))
        .collect();
    for r in &reports {
        assert_eq!(r.parsable + r.failed, r.total_chars);
    }
    let summary = aggregate(&reports).unwrap();
    let failure = summary.failed as f64 / summary.total_chars as f64;
    assert!(failure > 0.0 && failure < 1.0, "{failure}");
}

#[test]
fn file_of_bare_names_is_almost_always_parsable() {
    let src: String = (0..200).map(|i| format!("name_{i}\n")).collect();
    let summary = aggregate(&[scan_file("names.py", &src, Checker::GrammarSubset)]).unwrap();
    assert!(summary.success_pct > 99.0, "{}", summary.success_pct);
}
