//! Scoring a trained model on held-out data: next-token accuracy and MRR
//! over aligned windows, and line completion (EM, ES) on sampled cuts.

use rand::SeedableRng;
use rand_chacha::ChaCha8Rng;
use serde::{Deserialize, Serialize};

use crate::align::AlignedSample;
use crate::autodiff::Scalar;
use crate::bpe::Vocab;
use crate::corpus::{line_sample, LiteralTables, Sample, DEDENT, EOS};
use crate::decode::{complete_line, ranked, DecodeConfig};
use crate::lexer::tokenize;
use crate::metrics::{EvalReport, Evaluator, TokenClasses, MRR_CUTOFF};
use crate::model::Model;
use crate::{Error, Result};

#[derive(Debug, Clone, Copy, PartialEq, Serialize, Deserialize)]
pub struct EvalOptions {
    pub decode: DecodeConfig,
    /// Number of line-completion cases; 0 skips line-level metrics.
    pub lines: usize,
    /// Seed for choosing line cut points.
    pub seed: u64,
}

impl Default for EvalOptions {
    fn default() -> Self {
        EvalOptions {
            decode: DecodeConfig::default(),
            lines: 50,
            seed: 0,
        }
    }
}

/// Subword ids for a sequence of corpus words.
pub fn encode_words(vocab: &Vocab, words: &[String]) -> Vec<u32> {
    words.iter().flat_map(|w| vocab.encode(w)).collect()
}

/// Ids for raw source text used as a completion context: lexed, literals
/// masked, with the end sentinel and the closing dedents dropped so the
/// model continues where the text stops.
pub fn source_context(source: &str, tables: &LiteralTables, vocab: &Vocab) -> Vec<u32> {
    let mut words = Sample::from_tokens(&tokenize(source), tables).code_tokens;
    while words.last().is_some_and(|w| w == EOS || w == DEDENT) {
        words.pop();
    }
    encode_words(vocab, &words)
}

/// Predictions, top-ranked candidates and type labels for one window.
struct WindowScore {
    pred: Vec<u32>,
    gold: Vec<u32>,
    top: Vec<Vec<u32>>,
    types: Vec<String>,
}

fn score_window<T: Scalar>(model: &Model<T>, vocab: &Vocab, window: &AlignedSample) -> Result<WindowScore> {
    let v = model.config().vocab_size;
    let logits = model.forward(&window.code_ids)?;
    let rows = logits.data();
    let n = window.len() - 1;
    let mut out = WindowScore {
        pred: Vec::with_capacity(n),
        gold: window.code_ids[1..].to_vec(),
        top: Vec::with_capacity(n),
        types: Vec::with_capacity(n),
    };
    for i in 0..n {
        let row: Vec<f64> = rows[i * v..(i + 1) * v].iter().map(|x| x.to_f64()).collect();
        let mut top = ranked(&row);
        out.pred.push(top[0]);
        top.truncate(MRR_CUTOFF);
        out.top.push(top);
        let ty = window.type_ids[i + 1];
        let name = vocab
            .token(ty)
            .ok_or_else(|| Error::Vocab(format!("type id {ty} outside the vocabulary")))?;
        out.types.push(name.to_string());
    }
    Ok(out)
}

/// Adds next-token accuracy, per-type accuracy and MRR for every window of
/// every sample. Windows are scored on worker threads and merged in order,
/// so the result does not depend on the thread count.
pub fn score_tokens<T: Scalar + Sync>(
    model: &Model<T>,
    vocab: &Vocab,
    samples: &[AlignedSample],
    ev: &mut Evaluator,
) -> Result<()> {
    let block = model.config().block_size;
    let windows: Vec<AlignedSample> = samples
        .iter()
        .flat_map(|s| s.chunks(block))
        .filter(|w| w.len() >= 2)
        .collect();
    if windows.is_empty() {
        return Ok(());
    }
    let workers = std::thread::available_parallelism().map_or(1, |n| n.get()).min(windows.len());
    let per = windows.len().div_ceil(workers);
    let scored: Vec<Result<Vec<WindowScore>>> = std::thread::scope(|scope| {
        let handles: Vec<_> = windows
            .chunks(per)
            .map(|part| scope.spawn(move || part.iter().map(|w| score_window(model, vocab, w)).collect()))
            .collect();
        handles.into_iter().map(|h| h.join().expect("scoring worker panicked")).collect()
    });
    for part in scored {
        for w in part? {
            for (top, gold) in w.top.iter().zip(&w.gold) {
                ev.add_ranking(top, gold);
            }
            let types: Vec<&str> = w.types.iter().map(String::as_str).collect();
            ev.add_tokens(&w.pred, &w.gold, &types)?;
        }
    }
    Ok(())
}

/// Completes `opts.lines` sampled lines, cycling through `samples`. Each
/// completion gets its own seed derived from `opts.decode.seed`.
pub fn score_lines<T: Scalar>(
    model: &Model<T>,
    vocab: &Vocab,
    samples: &[Sample],
    opts: &EvalOptions,
    ev: &mut Evaluator,
) -> Result<()> {
    if opts.lines == 0 || samples.is_empty() {
        return Ok(());
    }
    let mut rng = ChaCha8Rng::seed_from_u64(opts.seed);
    let mut done = 0;
    let mut misses = 0;
    let mut i = 0;
    while done < opts.lines && misses < samples.len() {
        let sample = &samples[i % samples.len()];
        i += 1;
        let Some(case) = line_sample(sample, &mut rng) else {
            misses += 1;
            continue;
        };
        misses = 0;
        let ctx = encode_words(vocab, &case.context);
        let cfg = DecodeConfig {
            seed: opts.decode.seed.wrapping_add(done as u64),
            ..opts.decode
        };
        let completion = complete_line(model, vocab, &ctx, &cfg)?;
        ev.add_line(&completion.text, &case.gold_line());
        done += 1;
    }
    Ok(())
}

/// Token-level and line-level evaluation in one report.
pub fn evaluate<T: Scalar + Sync>(
    model: &Model<T>,
    vocab: &Vocab,
    aligned: &[AlignedSample],
    samples: &[Sample],
    opts: &EvalOptions,
) -> Result<EvalReport> {
    opts.decode.validate()?;
    let mut ev = Evaluator::new(TokenClasses::for_vocab(vocab));
    score_tokens(model, vocab, aligned, &mut ev)?;
    score_lines(model, vocab, samples, opts, &mut ev)?;
    Ok(ev.report())
}
