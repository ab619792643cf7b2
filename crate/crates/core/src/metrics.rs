//! Token accuracy, exact match, edit similarity and mean reciprocal rank.

use std::collections::{BTreeMap, BTreeSet};

use serde::{Deserialize, Serialize};

use crate::bpe::Vocab;
use crate::corpus::{BOS, EOS, NUM_LIT, PAD, STR_LIT};
use crate::{Error, Result};

/// Rank cutoff for MRR.
pub const MRR_CUTOFF: usize = 5;

/// Percentage of matching positions, skipping positions whose gold id is in
/// `excluded`. Returns 0 when no position is scored.
pub fn token_accuracy(pred: &[u32], gold: &[u32], excluded: &BTreeSet<u32>) -> Result<f64> {
    let (hits, total) = count_matches(pred, gold, excluded)?;
    Ok(percent(hits, total))
}

fn count_matches(pred: &[u32], gold: &[u32], excluded: &BTreeSet<u32>) -> Result<(usize, usize)> {
    if pred.len() != gold.len() {
        return Err(Error::Contract(format!(
            "token_accuracy: {} predictions vs {} gold ids",
            pred.len(),
            gold.len()
        )));
    }
    let mut hits = 0;
    let mut total = 0;
    for (p, g) in pred.iter().zip(gold) {
        if excluded.contains(g) {
            continue;
        }
        total += 1;
        hits += usize::from(p == g);
    }
    Ok((hits, total))
}

fn percent(num: usize, den: usize) -> f64 {
    if den == 0 {
        0.0
    } else {
        100.0 * num as f64 / den as f64
    }
}

pub fn exact_match(pred_line: &str, gold_line: &str) -> bool {
    pred_line.trim_end() == gold_line.trim_end()
}

/// Unit-cost character edit distance.
pub fn levenshtein(a: &str, b: &str) -> usize {
    if a.is_ascii() && b.is_ascii() {
        return distance(a.as_bytes(), b.as_bytes());
    }
    let a: Vec<char> = a.chars().collect();
    let b: Vec<char> = b.chars().collect();
    distance(&a, &b)
}

fn distance<T: PartialEq>(a: &[T], b: &[T]) -> usize {
    const STACK: usize = 64;
    let mut stack = [0usize; STACK];
    let mut heap = Vec::new();
    let row: &mut [usize] = if b.len() < STACK {
        &mut stack[..=b.len()]
    } else {
        heap.resize(b.len() + 1, 0);
        &mut heap
    };
    for (j, r) in row.iter_mut().enumerate() {
        *r = j;
    }
    for (i, ca) in a.iter().enumerate() {
        let mut diag = row[0];
        row[0] = i + 1;
        for (j, cb) in b.iter().enumerate() {
            let next = (diag + usize::from(ca != cb)).min(row[j] + 1).min(row[j + 1] + 1);
            diag = row[j + 1];
            row[j + 1] = next;
        }
    }
    row[b.len()]
}

/// `100 · (1 − distance / max(len, 1))` with lengths in characters.
pub fn edit_similarity(pred: &str, gold: &str) -> f64 {
    let longest = pred.chars().count().max(gold.chars().count()).max(1);
    100.0 * (1.0 - levenshtein(pred, gold) as f64 / longest as f64)
}

/// Reciprocal rank of `gold` within the first [`MRR_CUTOFF`] candidates,
/// 0 when absent.
pub fn reciprocal_rank<T: PartialEq>(candidates: &[T], gold: &T) -> f64 {
    candidates
        .iter()
        .take(MRR_CUTOFF)
        .position(|c| c == gold)
        .map_or(0.0, |i| 1.0 / (i + 1) as f64)
}

/// Mean reciprocal rank over `(candidates, gold)` cases; 0 for no cases.
pub fn mrr<T: PartialEq>(cases: &[(Vec<T>, T)]) -> f64 {
    if cases.is_empty() {
        return 0.0;
    }
    cases.iter().map(|(c, g)| reciprocal_rank(c, g)).sum::<f64>() / cases.len() as f64
}

/// Which gold ids token accuracy skips and which count as literal
/// placeholders for the secondary accuracy figure.
#[derive(Debug, Clone, Default, PartialEq, Eq)]
pub struct TokenClasses {
    pub excluded: BTreeSet<u32>,
    pub literals: BTreeSet<u32>,
}

impl TokenClasses {
    /// Padding and sentinels are excluded; `<STR_LIT…>` and `<NUM_LIT…>`
    /// placeholders are literals.
    pub fn for_vocab(vocab: &Vocab) -> TokenClasses {
        let excluded = [PAD, BOS, EOS].iter().filter_map(|t| vocab.id(t)).collect();
        let str_prefix = STR_LIT.trim_end_matches('>');
        let num_prefix = NUM_LIT.trim_end_matches('>');
        let literals = vocab
            .tokens()
            .iter()
            .enumerate()
            .filter(|(_, t)| t.starts_with(str_prefix) || t.starts_with(num_prefix))
            .map(|(i, _)| i as u32)
            .collect();
        TokenClasses { excluded, literals }
    }
}

#[derive(Debug, Clone, Default, PartialEq, Serialize, Deserialize)]
pub struct EvalCounts {
    pub token_positions: usize,
    pub token_hits: usize,
    pub non_literal_positions: usize,
    pub non_literal_hits: usize,
    pub lines: usize,
    pub exact_matches: usize,
    pub ranked_cases: usize,
}

#[derive(Debug, Clone, Default, PartialEq, Serialize, Deserialize)]
pub struct EvalReport {
    pub token_accuracy: f64,
    /// Token accuracy over positions whose gold id is not a literal
    /// placeholder.
    pub token_accuracy_excluding_literals: f64,
    pub em: f64,
    pub es: f64,
    pub mrr: f64,
    /// Accuracy keyed by the type token aligned with each scored position.
    pub per_type_accuracy: BTreeMap<String, f64>,
    pub counts: EvalCounts,
}

/// Accumulates predictions and produces an [`EvalReport`].
#[derive(Debug, Clone, Default)]
pub struct Evaluator {
    classes: TokenClasses,
    counts: EvalCounts,
    es_sum: f64,
    rr_sum: f64,
    per_type: BTreeMap<String, (usize, usize)>,
}

impl Evaluator {
    pub fn new(classes: TokenClasses) -> Self {
        Evaluator {
            classes,
            ..Default::default()
        }
    }

    /// Scores next-token predictions. `types[i]` names the type aligned with
    /// `gold[i]`.
    pub fn add_tokens(&mut self, pred: &[u32], gold: &[u32], types: &[&str]) -> Result<()> {
        if types.len() != gold.len() {
            return Err(Error::Contract(format!(
                "{} type labels for {} gold ids",
                types.len(),
                gold.len()
            )));
        }
        let (hits, total) = count_matches(pred, gold, &self.classes.excluded)?;
        self.counts.token_hits += hits;
        self.counts.token_positions += total;
        for ((p, g), t) in pred.iter().zip(gold).zip(types) {
            if self.classes.excluded.contains(g) {
                continue;
            }
            let hit = usize::from(p == g);
            if !self.classes.literals.contains(g) {
                self.counts.non_literal_positions += 1;
                self.counts.non_literal_hits += hit;
            }
            let entry = self.per_type.entry((*t).to_string()).or_default();
            entry.0 += hit;
            entry.1 += 1;
        }
        Ok(())
    }

    pub fn add_line(&mut self, pred: &str, gold: &str) {
        let (pred, gold) = (pred.trim_end(), gold.trim_end());
        self.counts.lines += 1;
        self.counts.exact_matches += usize::from(exact_match(pred, gold));
        self.es_sum += edit_similarity(pred, gold);
    }

    pub fn add_ranking<T: PartialEq>(&mut self, candidates: &[T], gold: &T) {
        self.counts.ranked_cases += 1;
        self.rr_sum += reciprocal_rank(candidates, gold);
    }

    pub fn report(&self) -> EvalReport {
        let c = &self.counts;
        let mean = |sum: f64, n: usize| if n == 0 { 0.0 } else { sum / n as f64 };
        EvalReport {
            token_accuracy: percent(c.token_hits, c.token_positions),
            token_accuracy_excluding_literals: percent(c.non_literal_hits, c.non_literal_positions),
            em: percent(c.exact_matches, c.lines),
            es: mean(self.es_sum, c.lines),
            mrr: mean(self.rr_sum, c.ranked_cases),
            per_type_accuracy: self
                .per_type
                .iter()
                .map(|(k, &(h, n))| (k.clone(), percent(h, n)))
                .collect(),
            counts: c.clone(),
        }
    }
}
