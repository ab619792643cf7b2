use std::collections::hash_map::DefaultHasher;
use std::hash::{Hash, Hasher};

use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;
use saotf_core::decode::{
    beam_search, complete_ids, nucleus, pick, Candidate, DecodeConfig, LanguageModel, Method,
};
use saotf_core::model::{Model, ModelConfig};
use saotf_core::Result;

/// Context-dependent toy model: each context hashes to its own random
/// distribution over `vocab` tokens.
struct Toy {
    vocab: usize,
    seed: u64,
}

impl LanguageModel for Toy {
    fn vocab_size(&self) -> usize {
        self.vocab
    }
    fn context_limit(&self) -> usize {
        usize::MAX
    }
    fn next_distribution(&self, ctx: &[u32]) -> Result<Vec<f64>> {
        let mut h = DefaultHasher::new();
        (self.seed, ctx).hash(&mut h);
        let mut rng = ChaCha8Rng::seed_from_u64(h.finish());
        let raw: Vec<f64> = (0..self.vocab).map(|_| rng.gen::<f64>() + 0.05).collect();
        let total: f64 = raw.iter().sum();
        Ok(raw.into_iter().map(|x| x / total).collect())
    }
}

fn seq_logprob(m: &dyn LanguageModel, ctx: &[u32], ids: &[u32]) -> f64 {
    let mut seq = ctx.to_vec();
    let mut lp = 0.0;
    for &t in ids {
        lp += m.next_distribution(&seq).unwrap()[t as usize].ln();
        seq.push(t);
    }
    lp
}

/// Best sequence by brute force: every id string that contains `eol` only as
/// its last element and has length ≤ `max_new`. EOL-terminated strings win
/// over unterminated ones; ties go to the lexicographically smaller string.
fn exhaustive(m: &dyn LanguageModel, ctx: &[u32], eol: u32, max_new: usize) -> (Vec<u32>, f64, bool) {
    let v = m.vocab_size() as u32;
    let mut best_done: Option<(Vec<u32>, f64)> = None;
    let mut best_open: Option<(Vec<u32>, f64)> = None;
    let mut stack: Vec<Vec<u32>> = (0..v).map(|t| vec![t]).collect();
    let better = |cand: &(Vec<u32>, f64), cur: &Option<(Vec<u32>, f64)>| match cur {
        None => true,
        Some((ids, lp)) => cand.1 > *lp || (cand.1 == *lp && cand.0 < *ids),
    };
    while let Some(ids) = stack.pop() {
        let lp = seq_logprob(m, ctx, &ids);
        let entry = (ids.clone(), lp);
        if *ids.last().unwrap() == eol {
            if better(&entry, &best_done) {
                best_done = Some(entry);
            }
        } else if ids.len() == max_new {
            if better(&entry, &best_open) {
                best_open = Some(entry);
            }
        } else {
            stack.extend((0..v).map(|t| {
                let mut next = ids.clone();
                next.push(t);
                next
            }));
        }
    }
    match best_done {
        Some((ids, lp)) => (ids, lp, true),
        None => {
            let (ids, lp) = best_open.unwrap();
            (ids, lp, false)
        }
    }
}

fn beam(b: usize, max_new: usize) -> DecodeConfig {
    DecodeConfig { b, max_new, ..DecodeConfig::with_method(Method::Beam) }
}

#[test]
fn unpruned_beam_equals_exhaustive_enumeration() {
    for seed in 0..20 {
        let toy = Toy { vocab: 3, seed };
        for max_new in 1..=6 {
            let got: Candidate = beam_search(&toy, &[0], &beam(3usize.pow(max_new as u32), max_new), 2).unwrap();
            let (ids, lp, done) = exhaustive(&toy, &[0], 2, max_new);
            assert_eq!(got.ids, ids, "seed {seed} max_new {max_new}");
            assert_eq!(got.finished, done);
            assert!((got.logprob - lp).abs() < 1e-9);
        }
    }
}

#[test]
fn beam_of_one_is_greedy() {
    let mut rng = ChaCha8Rng::seed_from_u64(0);
    for seed in 0..50 {
        let toy = Toy { vocab: 5, seed };
        let greedy = complete_ids(&toy, &[1], &DecodeConfig { max_new: 12, ..Default::default() }, 4, &mut rng).unwrap();
        let b1 = complete_ids(&toy, &[1], &beam(1, 12), 4, &mut rng).unwrap();
        assert_eq!(greedy, b1, "seed {seed}");
    }
}

#[test]
fn beam_of_one_is_greedy_on_transformer() {
    let cfg = ModelConfig {
        n_layer: 2,
        n_head: 2,
        n_embd: 16,
        block_size: 32,
        vocab_size: 12,
        dropout: 0.0,
    };
    let mut rng = ChaCha8Rng::seed_from_u64(0);
    for seed in 0..5 {
        let m = Model::<f32>::init(cfg, seed).unwrap();
        let ctx = [3, 1, 4, 1, 5];
        let greedy = complete_ids(&m, &ctx, &DecodeConfig { max_new: 10, ..Default::default() }, 11, &mut rng).unwrap();
        let b1 = complete_ids(&m, &ctx, &beam(1, 10), 11, &mut rng).unwrap();
        assert_eq!(greedy, b1);
    }
}

#[test]
fn top_k_one_is_greedy_for_whole_lines() {
    for seed in 0..50 {
        let toy = Toy { vocab: 6, seed };
        let mut rng = ChaCha8Rng::seed_from_u64(seed);
        let greedy = complete_ids(&toy, &[0], &DecodeConfig { max_new: 15, ..Default::default() }, 5, &mut rng).unwrap();
        let topk = DecodeConfig { k: 1, max_new: 15, ..DecodeConfig::with_method(Method::TopK) };
        assert_eq!(complete_ids(&toy, &[0], &topk, 5, &mut rng).unwrap(), greedy);
    }
}

#[test]
fn wider_beam_scores_at_least_greedy_on_toys() {
    for seed in 0..30 {
        let toy = Toy { vocab: 4, seed };
        let g = beam_search(&toy, &[0], &beam(1, 8), 3).unwrap();
        let w = beam_search(&toy, &[0], &beam(4, 8), 3).unwrap();
        if g.finished && w.finished {
            assert!(w.logprob >= g.logprob - 1e-12, "seed {seed}");
        }
    }
}

fn random_distribution(rng: &mut impl Rng) -> Vec<f64> {
    let n = rng.gen_range(1..40);
    let raw: Vec<f64> = (0..n).map(|_| rng.gen::<f64>().powi(3)).collect();
    let total: f64 = raw.iter().sum();
    raw.into_iter().map(|x| x / total).collect()
}

#[test]
fn nucleus_is_minimal_and_covers_p() {
    let mut rng = ChaCha8Rng::seed_from_u64(11);
    for _ in 0..100 {
        let d = random_distribution(&mut rng);
        let p = rng.gen_range(0.01..=1.0);
        let set = nucleus(&d, p);
        let mass: f64 = set.iter().map(|&i| d[i as usize]).sum();
        let total: f64 = d.iter().sum();
        assert!(mass >= p || set.len() == d.len() && mass >= total - 1e-12);
        let smallest = set.iter().map(|&i| d[i as usize]).fold(f64::INFINITY, f64::min);
        assert!(mass - smallest < p, "not minimal: p {p} mass {mass}");
        for i in 0..d.len() as u32 {
            if !set.contains(&i) {
                assert!(d[i as usize] <= smallest);
            }
        }
    }
}

/// Upper 0.001 critical values of the chi-square distribution.
fn chi2_critical(df: usize) -> f64 {
    match df {
        1 => 10.828,
        2 => 13.816,
        3 => 16.266,
        4 => 18.467,
        _ => panic!("no table entry for df {df}"),
    }
}

fn chi_square(dist: &[f64], expected: &[f64], cfg: &DecodeConfig) -> (f64, usize) {
    const DRAWS: usize = 10_000;
    let mut rng = ChaCha8Rng::seed_from_u64(cfg.seed);
    let mut counts = vec![0usize; dist.len()];
    for _ in 0..DRAWS {
        counts[pick(dist, cfg, &mut rng).unwrap() as usize] += 1;
    }
    let mut stat = 0.0;
    let mut cells = 0;
    for (c, e) in counts.iter().zip(expected) {
        if *e == 0.0 {
            assert_eq!(*c, 0, "drew a token with zero target probability");
            continue;
        }
        let exp = e * DRAWS as f64;
        stat += (*c as f64 - exp).powi(2) / exp;
        cells += 1;
    }
    (stat, cells - 1)
}

#[test]
fn samplers_match_their_target_distributions() {
    let d = [0.1, 0.2, 0.3, 0.4, 0.0];
    let sq: f64 = d.iter().map(|x| x * x).sum();
    let cases: Vec<(DecodeConfig, Vec<f64>)> = vec![
        (DecodeConfig::with_method(Method::Sample), d.to_vec()),
        (
            DecodeConfig { temp: 0.5, ..DecodeConfig::with_method(Method::Temperature) },
            d.iter().map(|x| x * x / sq).collect(),
        ),
        (
            DecodeConfig { k: 2, ..DecodeConfig::with_method(Method::TopK) },
            vec![0.0, 0.0, 3.0 / 7.0, 4.0 / 7.0, 0.0],
        ),
        (
            DecodeConfig { p: 0.8, ..DecodeConfig::with_method(Method::TopP) },
            vec![0.0, 2.0 / 9.0, 3.0 / 9.0, 4.0 / 9.0, 0.0],
        ),
    ];
    for (cfg, expected) in cases {
        let (stat, df) = chi_square(&d, &expected, &cfg);
        assert!(stat < chi2_critical(df), "{}: chi2 {stat} df {df}", cfg.label());
    }
}
