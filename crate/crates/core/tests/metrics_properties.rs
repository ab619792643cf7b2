use proptest::prelude::*;
use saotf_core::metrics::{edit_similarity, levenshtein, mrr, reciprocal_rank, MRR_CUTOFF};
use serde::Deserialize;

/// Textbook recursion on suffixes `a[i..]`, `b[j..]`, memoized so the full
/// enumeration stays tractable.
fn recursive_distance(a: &[u8], b: &[u8]) -> usize {
    fn go(a: &[u8], b: &[u8], i: usize, j: usize, memo: &mut [[u8; 9]; 9]) -> usize {
        if i == a.len() {
            return b.len() - j;
        }
        if j == b.len() {
            return a.len() - i;
        }
        if memo[i][j] != u8::MAX {
            return memo[i][j] as usize;
        }
        let d = if a[i] == b[j] {
            go(a, b, i + 1, j + 1, memo)
        } else {
            1 + go(a, b, i + 1, j, memo)
                .min(go(a, b, i, j + 1, memo))
                .min(go(a, b, i + 1, j + 1, memo))
        };
        memo[i][j] = d as u8;
        d
    }
    go(a, b, 0, 0, &mut [[u8::MAX; 9]; 9])
}

fn all_strings(max_len: usize) -> Vec<String> {
    let mut out = vec![String::new()];
    let mut frontier = vec![String::new()];
    for _ in 0..max_len {
        frontier = frontier
            .iter()
            .flat_map(|s| ['a', 'b', 'c'].map(|c| format!("{s}{c}")))
            .collect();
        out.extend(frontier.iter().cloned());
    }
    out
}

#[test]
fn levenshtein_matches_recursive_oracle_on_all_pairs_up_to_length_five() {
    let strings = all_strings(5);
    assert_eq!(strings.len(), 364);
    let mut checked = 0u64;
    for a in &strings {
        for b in &strings {
            let expected = recursive_distance(a.as_bytes(), b.as_bytes());
            assert_eq!(levenshtein(a, b), expected, "{a:?} {b:?}");
            checked += 1;
        }
    }
    assert_eq!(checked, 364 * 364);
}

fn short_string() -> impl Strategy<Value = String> {
    "[abcé ]{0,10}"
}

proptest! {
    #[test]
    fn levenshtein_is_symmetric(a in short_string(), b in short_string()) {
        prop_assert_eq!(levenshtein(&a, &b), levenshtein(&b, &a));
    }

    #[test]
    fn levenshtein_zero_iff_equal(a in short_string(), b in short_string()) {
        prop_assert_eq!(levenshtein(&a, &b) == 0, a == b);
        prop_assert_eq!(levenshtein(&a, &a), 0);
    }

    #[test]
    fn levenshtein_triangle_inequality(a in short_string(), b in short_string(), c in short_string()) {
        prop_assert!(levenshtein(&a, &c) <= levenshtein(&a, &b) + levenshtein(&b, &c));
    }

    #[test]
    fn levenshtein_bounded_by_lengths(a in short_string(), b in short_string()) {
        let (la, lb) = (a.chars().count(), b.chars().count());
        let d = levenshtein(&a, &b);
        prop_assert!(d >= la.abs_diff(lb) && d <= la.max(lb));
    }

    #[test]
    fn edit_similarity_in_range(a in short_string(), b in short_string()) {
        let s = edit_similarity(&a, &b);
        prop_assert!((0.0..=100.0).contains(&s));
    }

    #[test]
    fn shared_suffix_never_lowers_similarity(
        (a, b) in (1usize..8).prop_flat_map(|n| (
            proptest::collection::vec(prop::sample::select(vec!['a', 'b', 'c']), n),
            proptest::collection::vec(prop::sample::select(vec!['a', 'b', 'c']), n),
        )),
        suffix in "[abc]{0,6}",
    ) {
        let a: String = a.into_iter().collect();
        let b: String = b.into_iter().collect();
        let before = edit_similarity(&a, &b);
        let after = edit_similarity(&format!("{a}{suffix}"), &format!("{b}{suffix}"));
        prop_assert!(after >= before - 1e-9, "{} -> {}", before, after);
    }

    #[test]
    fn rank_ignores_candidates_below_gold(
        mut cands in proptest::collection::vec(0u32..20, 0..5),
        gold in 0u32..20,
        tail in proptest::collection::vec(0u32..20, 0..5),
    ) {
        let before = reciprocal_rank(&cands, &gold);
        if let Some(pos) = cands.iter().position(|c| *c == gold) {
            cands.truncate(pos + 1);
            let base = reciprocal_rank(&cands, &gold);
            cands.extend(tail);
            cands.truncate(MRR_CUTOFF);
            prop_assert_eq!(base, before);
            prop_assert_eq!(reciprocal_rank(&cands, &gold), before);
        }
    }
}

#[derive(Deserialize)]
struct MrrFixture {
    cutoff: usize,
    cases: Vec<MrrCase>,
    mean_numerator: u32,
    mean_denominator: u32,
}

#[derive(Deserialize)]
struct MrrCase {
    candidates: Vec<String>,
    gold: String,
    rr: f64,
}

#[test]
fn mrr_matches_hand_computed_fixture() {
    let text = std::fs::read_to_string(concat!(env!("CARGO_MANIFEST_DIR"), "/tests/fixtures/mrr_cases.json")).unwrap();
    let fx: MrrFixture = serde_json::from_str(&text).unwrap();
    assert_eq!(fx.cutoff, MRR_CUTOFF);
    assert_eq!(fx.cases.len(), 20);
    for c in &fx.cases {
        assert!((reciprocal_rank(&c.candidates, &c.gold) - c.rr).abs() < 1e-12, "{:?}", c.candidates);
    }
    let pairs: Vec<(Vec<String>, String)> = fx.cases.iter().map(|c| (c.candidates.clone(), c.gold.clone())).collect();
    let expected = fx.mean_numerator as f64 / fx.mean_denominator as f64;
    assert!((mrr(&pairs) - expected).abs() < 1e-12);
}
