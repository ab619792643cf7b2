//! Next-token and line-level generation: greedy, beam search, plain
//! sampling, temperature, top-k and top-p (nucleus).

use std::cmp::Ordering;
use std::fmt;
use std::str::FromStr;

use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;
use serde::{Deserialize, Serialize};

use crate::autodiff::{softmax_in_place, Scalar};
use crate::bpe::Vocab;
use crate::corpus::EOL;
use crate::model::Model;
use crate::{Error, Result};

pub const DEFAULT_MAX_NEW: usize = 100;
/// Smallest effective temperature.
pub const MIN_TEMPERATURE: f64 = 1e-4;

pub const BEAM_GRID: [usize; 5] = [3, 5, 10, 16, 50];
pub const TEMPERATURE_GRID: [f64; 6] = [0.05, 0.1, 0.3, 0.5, 0.7, 0.9];
pub const TOP_K_GRID: [usize; 5] = [3, 5, 10, 50, 100];
pub const TOP_P_GRID: [f64; 6] = [0.05, 0.1, 0.3, 0.5, 0.7, 0.9];

/// Anything that yields a next-token distribution for a context.
pub trait LanguageModel {
    fn vocab_size(&self) -> usize;

    /// Longest context the model accepts.
    fn context_limit(&self) -> usize;

    /// Probabilities over the vocabulary for the token after `ctx`.
    fn next_distribution(&self, ctx: &[u32]) -> Result<Vec<f64>>;
}

impl<T: Scalar> LanguageModel for Model<T> {
    fn vocab_size(&self) -> usize {
        self.config().vocab_size
    }

    fn context_limit(&self) -> usize {
        self.config().block_size
    }

    /// Softmax of the final-position logits; contexts longer than the block
    /// keep their trailing `block_size` ids.
    fn next_distribution(&self, ctx: &[u32]) -> Result<Vec<f64>> {
        if ctx.is_empty() {
            return Err(Error::Contract("next_distribution needs a non-empty context".into()));
        }
        let start = ctx.len().saturating_sub(self.config().block_size);
        let mut p: Vec<f64> = self.next_logits(&ctx[start..])?.into_iter().map(Scalar::to_f64).collect();
        softmax_in_place(&mut p);
        Ok(p)
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize, Deserialize)]
#[serde(rename_all = "snake_case")]
pub enum Method {
    Greedy,
    Beam,
    Sample,
    Temperature,
    TopK,
    TopP,
}

impl Method {
    pub const ALL: [Method; 6] = [
        Method::Greedy,
        Method::Beam,
        Method::Sample,
        Method::Temperature,
        Method::TopK,
        Method::TopP,
    ];

    pub fn name(self) -> &'static str {
        match self {
            Method::Greedy => "greedy",
            Method::Beam => "beam",
            Method::Sample => "sample",
            Method::Temperature => "temperature",
            Method::TopK => "top_k",
            Method::TopP => "top_p",
        }
    }

    pub fn is_stochastic(self) -> bool {
        !matches!(self, Method::Greedy | Method::Beam)
    }
}

impl fmt::Display for Method {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.name())
    }
}

impl FromStr for Method {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        let norm = s.trim().to_ascii_lowercase().replace('-', "_");
        Method::ALL
            .into_iter()
            .find(|m| m.name() == norm)
            .ok_or_else(|| Error::Config(format!("unknown decoding method {s:?}")))
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Serialize, Deserialize)]
pub struct DecodeConfig {
    pub method: Method,
    pub b: usize,
    pub temp: f64,
    pub k: usize,
    pub p: f64,
    pub seed: u64,
    pub max_new: usize,
}

impl Default for DecodeConfig {
    fn default() -> Self {
        DecodeConfig {
            method: Method::Greedy,
            b: 5,
            temp: 1.0,
            k: 10,
            p: 0.9,
            seed: 0,
            max_new: DEFAULT_MAX_NEW,
        }
    }
}

impl DecodeConfig {
    pub fn with_method(method: Method) -> Self {
        DecodeConfig {
            method,
            ..Default::default()
        }
    }

    /// Checks `max_new` and the fields the chosen method reads.
    pub fn validate(&self) -> Result<()> {
        let bad = |m: String| Err(Error::Config(m));
        if self.max_new == 0 {
            return bad("max_new must be at least 1".into());
        }
        match self.method {
            Method::Beam if self.b == 0 => bad("beam size b must be at least 1".into()),
            Method::Temperature if !(self.temp > 0.0 && self.temp <= 1.0) => {
                bad(format!("temperature {} outside (0, 1]", self.temp))
            }
            Method::TopK if self.k == 0 => bad("k must be at least 1".into()),
            Method::TopP if !(self.p > 0.0 && self.p <= 1.0) => bad(format!("p {} outside (0, 1]", self.p)),
            _ => Ok(()),
        }
    }

    /// Short label naming the method and its parameter, e.g. `top_p(p=0.5)`.
    pub fn label(&self) -> String {
        match self.method {
            Method::Greedy | Method::Sample => self.method.to_string(),
            Method::Beam => format!("beam(b={})", self.b),
            Method::Temperature => format!("temperature(temp={})", self.temp),
            Method::TopK => format!("top_k(k={})", self.k),
            Method::TopP => format!("top_p(p={})", self.p),
        }
    }
}

/// Every decoding configuration of the sweep: greedy, plain sampling and
/// each point of the beam, temperature, top-k and top-p grids.
pub fn decode_grid(base: &DecodeConfig) -> Vec<DecodeConfig> {
    let with = |method| DecodeConfig { method, ..*base };
    let mut out = vec![with(Method::Greedy), with(Method::Sample)];
    out.extend(BEAM_GRID.iter().map(|&b| DecodeConfig { b, ..with(Method::Beam) }));
    out.extend(TEMPERATURE_GRID.iter().map(|&temp| DecodeConfig { temp, ..with(Method::Temperature) }));
    out.extend(TOP_K_GRID.iter().map(|&k| DecodeConfig { k, ..with(Method::TopK) }));
    out.extend(TOP_P_GRID.iter().map(|&p| DecodeConfig { p, ..with(Method::TopP) }));
    out
}

/// Index of the largest probability; the lowest id wins exact ties.
pub fn argmax(dist: &[f64]) -> u32 {
    let mut best = 0;
    for (i, &p) in dist.iter().enumerate() {
        if p > dist[best] {
            best = i;
        }
    }
    best as u32
}

/// Ids ordered by probability descending, then id ascending.
pub fn ranked(dist: &[f64]) -> Vec<u32> {
    let mut ids: Vec<u32> = (0..dist.len() as u32).collect();
    ids.sort_by(|&a, &b| {
        dist[b as usize]
            .partial_cmp(&dist[a as usize])
            .unwrap_or(Ordering::Equal)
            .then(a.cmp(&b))
    });
    ids
}

/// `softmax(log dist / temp)` with the temperature clamped at
/// [`MIN_TEMPERATURE`].
pub fn apply_temperature(dist: &[f64], temp: f64) -> Vec<f64> {
    let t = temp.max(MIN_TEMPERATURE);
    let mut logits: Vec<f64> = dist.iter().map(|&p| p.ln() / t).collect();
    if logits.iter().all(|l| *l == f64::NEG_INFINITY) {
        return dist.to_vec();
    }
    softmax_in_place(&mut logits);
    logits
}

/// The `k` most probable ids renormalized; other ids get 0.
pub fn top_k_distribution(dist: &[f64], k: usize) -> Vec<f64> {
    let keep = &ranked(dist)[..k.min(dist.len())];
    restrict(dist, keep)
}

/// Smallest probability-sorted prefix whose mass reaches `p`.
pub fn nucleus(dist: &[f64], p: f64) -> Vec<u32> {
    let order = ranked(dist);
    let mut mass = 0.0;
    let mut out = Vec::new();
    for id in order {
        out.push(id);
        mass += dist[id as usize];
        if mass >= p {
            break;
        }
    }
    out
}

pub fn top_p_distribution(dist: &[f64], p: f64) -> Vec<f64> {
    restrict(dist, &nucleus(dist, p))
}

fn restrict(dist: &[f64], keep: &[u32]) -> Vec<f64> {
    let total: f64 = keep.iter().map(|&i| dist[i as usize]).sum();
    let mut out = vec![0.0; dist.len()];
    for &i in keep {
        out[i as usize] = if total > 0.0 { dist[i as usize] / total } else { 1.0 / keep.len() as f64 };
    }
    out
}

/// Draws an index with probability proportional to `weights`.
pub fn sample_index(weights: &[f64], rng: &mut impl Rng) -> u32 {
    let total: f64 = weights.iter().sum();
    let mut u = rng.gen::<f64>() * total;
    let mut last = 0;
    for (i, &w) in weights.iter().enumerate() {
        if w <= 0.0 {
            continue;
        }
        last = i;
        if u < w {
            return i as u32;
        }
        u -= w;
    }
    last as u32
}

/// The distribution a stochastic method draws from (greedy and beam use
/// the model distribution unchanged).
pub fn sampling_distribution(dist: &[f64], cfg: &DecodeConfig) -> Vec<f64> {
    match cfg.method {
        Method::Temperature => apply_temperature(dist, cfg.temp),
        Method::TopK => top_k_distribution(dist, cfg.k),
        Method::TopP => top_p_distribution(dist, cfg.p),
        _ => dist.to_vec(),
    }
}

/// Chooses the next token. Beam search picks greedily here; full beam
/// search lives in [`beam_search`].
pub fn pick(dist: &[f64], cfg: &DecodeConfig, rng: &mut impl Rng) -> Result<u32> {
    cfg.validate()?;
    if dist.is_empty() {
        return Err(Error::Contract("empty distribution".into()));
    }
    Ok(match cfg.method {
        Method::Greedy | Method::Beam => argmax(dist),
        _ => sample_index(&sampling_distribution(dist, cfg), rng),
    })
}

/// A partial or finished generation.
#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
pub struct Candidate {
    pub ids: Vec<u32>,
    pub logprob: f64,
    pub finished: bool,
}

fn better(a: &Candidate, b: &Candidate) -> Ordering {
    b.logprob
        .partial_cmp(&a.logprob)
        .unwrap_or(Ordering::Equal)
        .then_with(|| a.ids.cmp(&b.ids))
}

fn joined(ctx: &[u32], ids: &[u32]) -> Vec<u32> {
    ctx.iter().chain(ids).copied().collect()
}

/// Beam search without length normalization. Each round expands every live
/// candidate by every token, keeps the best `b` expansions, and moves those
/// ending in `eol` to the finished pool. Stops when no live candidate
/// remains, when `max_new` tokens have been generated, or when the best
/// finished candidate already outscores every live one. Returns the best
/// finished candidate, else the best live one; ties go to the
/// lexicographically smaller id sequence.
pub fn beam_search(model: &dyn LanguageModel, ctx: &[u32], cfg: &DecodeConfig, eol: u32) -> Result<Candidate> {
    cfg.validate()?;
    let b = cfg.b.max(1);
    let mut live = vec![Candidate {
        ids: Vec::new(),
        logprob: 0.0,
        finished: false,
    }];
    let mut finished: Vec<Candidate> = Vec::new();
    for _ in 0..cfg.max_new {
        let mut expansions = Vec::new();
        for c in &live {
            let dist = model.next_distribution(&joined(ctx, &c.ids))?;
            for (tok, &p) in dist.iter().enumerate() {
                if p > 0.0 {
                    let mut ids = c.ids.clone();
                    ids.push(tok as u32);
                    expansions.push(Candidate {
                        ids,
                        logprob: c.logprob + p.ln(),
                        finished: tok as u32 == eol,
                    });
                }
            }
        }
        expansions.sort_by(better);
        expansions.truncate(b);
        let (done, rest): (Vec<_>, Vec<_>) = expansions.into_iter().partition(|c| c.finished);
        finished.extend(done);
        live = rest;
        if live.is_empty() {
            break;
        }
        let best_finished = finished.iter().map(|c| c.logprob).fold(f64::NEG_INFINITY, f64::max);
        if live.iter().all(|c| c.logprob < best_finished) {
            break;
        }
    }
    let pool = if finished.is_empty() { live } else { finished };
    pool.into_iter()
        .min_by(better)
        .ok_or_else(|| Error::Contract("beam search produced no candidate".into()))
}

/// Trailing context window that leaves room for `max_new` generated ids.
pub fn trim_context(ctx: &[u32], limit: usize, max_new: usize) -> &[u32] {
    let keep = if limit > max_new { limit - max_new } else { limit };
    &ctx[ctx.len().saturating_sub(keep)..]
}

/// Generates ids after `ctx` until `eol` (excluded from the result) or
/// `max_new` ids. `rng` drives the stochastic methods.
pub fn complete_ids(
    model: &dyn LanguageModel,
    ctx: &[u32],
    cfg: &DecodeConfig,
    eol: u32,
    rng: &mut impl Rng,
) -> Result<Vec<u32>> {
    cfg.validate()?;
    if ctx.is_empty() {
        return Err(Error::Contract("completion needs a non-empty context".into()));
    }
    let ctx = trim_context(ctx, model.context_limit(), cfg.max_new);
    if cfg.method == Method::Beam {
        let mut best = beam_search(model, ctx, cfg, eol)?;
        if best.finished {
            best.ids.pop();
        }
        return Ok(best.ids);
    }
    let mut seq = ctx.to_vec();
    let mut out = Vec::new();
    for _ in 0..cfg.max_new {
        let dist = model.next_distribution(&seq)?;
        let tok = pick(&dist, cfg, rng)?;
        if tok == eol {
            break;
        }
        out.push(tok);
        seq.push(tok);
    }
    Ok(out)
}

/// A decoded line completion.
#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
pub struct Completion {
    pub ids: Vec<u32>,
    pub text: String,
}

/// Completes the line after `ctx` with an RNG seeded from `cfg.seed` and
/// renders the ids as space-joined words.
pub fn complete_line(model: &dyn LanguageModel, vocab: &Vocab, ctx: &[u32], cfg: &DecodeConfig) -> Result<Completion> {
    let eol = vocab
        .id(EOL)
        .ok_or_else(|| Error::Vocab(format!("vocabulary has no {EOL}")))?;
    let mut rng = ChaCha8Rng::seed_from_u64(cfg.seed);
    let ids = complete_ids(model, ctx, cfg, eol, &mut rng)?;
    let text = vocab.decode(&ids)?;
    Ok(Completion { ids, text })
}

/// The `r` most probable next tokens, descending, ties by id.
pub fn topk_ranks(model: &dyn LanguageModel, ctx: &[u32], r: usize) -> Result<Vec<u32>> {
    if r == 0 {
        return Err(Error::Config("rank list length must be at least 1".into()));
    }
    let dist = model.next_distribution(trim_context(ctx, model.context_limit(), 0))?;
    let mut ids = ranked(&dist);
    ids.truncate(r);
    Ok(ids)
}

/// Mean and sample standard deviation over repeated seeded runs.
#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
pub struct SeedStats {
    pub seeds: Vec<u64>,
    pub values: Vec<f64>,
    pub mean: f64,
    pub std: f64,
}

impl SeedStats {
    /// Mean and sample standard deviation (zero for a single value).
    pub fn from_values(seeds: Vec<u64>, values: Vec<f64>) -> SeedStats {
        let n = values.len() as f64;
        let mean = if values.is_empty() { 0.0 } else { values.iter().sum::<f64>() / n };
        let std = if values.len() > 1 {
            (values.iter().map(|v| (v - mean).powi(2)).sum::<f64>() / (n - 1.0)).sqrt()
        } else {
            0.0
        };
        SeedStats { seeds, values, mean, std }
    }
}

pub const REPEAT_SEEDS: [u64; 5] = [0, 1, 2, 3, 4];

/// Runs `f` once per seed (deterministic methods run once and are
/// reported with zero spread).
pub fn repeat_seeds(cfg: &DecodeConfig, seeds: &[u64], mut f: impl FnMut(&DecodeConfig) -> Result<f64>) -> Result<SeedStats> {
    let seeds: Vec<u64> = if cfg.method.is_stochastic() {
        seeds.to_vec()
    } else {
        vec![cfg.seed]
    };
    let values = seeds
        .iter()
        .map(|&seed| f(&DecodeConfig { seed, ..*cfg }))
        .collect::<Result<Vec<f64>>>()?;
    Ok(SeedStats::from_values(seeds, values))
}

#[cfg(test)]
mod tests {
    use super::*;

    /// Fixed distribution regardless of context.
    struct Fixed(Vec<f64>);

    impl LanguageModel for Fixed {
        fn vocab_size(&self) -> usize {
            self.0.len()
        }
        fn context_limit(&self) -> usize {
            usize::MAX
        }
        fn next_distribution(&self, _: &[u32]) -> Result<Vec<f64>> {
            Ok(self.0.clone())
        }
    }

    #[test]
    fn method_names_parse() {
        for m in Method::ALL {
            assert_eq!(m.name().parse::<Method>().unwrap(), m);
        }
        assert_eq!("top-p".parse::<Method>().unwrap(), Method::TopP);
        assert!("nucleus".parse::<Method>().is_err());
    }

    #[test]
    fn config_validation() {
        let bad = [
            DecodeConfig { max_new: 0, ..Default::default() },
            DecodeConfig { b: 0, ..DecodeConfig::with_method(Method::Beam) },
            DecodeConfig { temp: 0.0, ..DecodeConfig::with_method(Method::Temperature) },
            DecodeConfig { temp: 1.5, ..DecodeConfig::with_method(Method::Temperature) },
            DecodeConfig { k: 0, ..DecodeConfig::with_method(Method::TopK) },
            DecodeConfig { p: 0.0, ..DecodeConfig::with_method(Method::TopP) },
        ];
        for c in bad {
            assert!(matches!(c.validate(), Err(Error::Config(_))), "{c:?}");
        }
        // Fields other methods read are not checked.
        assert!(DecodeConfig { k: 0, ..Default::default() }.validate().is_ok());
    }

    #[test]
    fn nucleus_example() {
        let d = [0.5, 0.3, 0.15, 0.05];
        assert_eq!(nucleus(&d, 0.7), vec![0, 1]);
        assert_eq!(nucleus(&d, 0.5), vec![0]);
        assert_eq!(nucleus(&d, 1.0), vec![0, 1, 2, 3]);
        let q = top_p_distribution(&d, 0.7);
        assert!((q[0] - 0.625).abs() < 1e-12 && (q[1] - 0.375).abs() < 1e-12 && q[2] == 0.0);
    }

    #[test]
    fn greedy_ties_go_to_lowest_id() {
        assert_eq!(argmax(&[0.2, 0.4, 0.4]), 1);
        assert_eq!(ranked(&[0.2, 0.4, 0.4, 0.0]), vec![1, 2, 0, 3]);
    }

    #[test]
    fn temperature_one_is_identity_and_tiny_is_argmax() {
        let d = [0.1, 0.6, 0.3];
        let t1 = apply_temperature(&d, 1.0);
        for (a, b) in t1.iter().zip(&d) {
            assert!((a - b).abs() < 1e-12);
        }
        let t0 = apply_temperature(&d, 1e-9);
        assert!(t0[1] >= 1.0 - 1e-6);
    }

    #[test]
    fn top_k_one_is_greedy() {
        let mut rng = ChaCha8Rng::seed_from_u64(0);
        let d = [0.1, 0.2, 0.45, 0.25];
        let cfg = DecodeConfig { k: 1, ..DecodeConfig::with_method(Method::TopK) };
        for _ in 0..50 {
            assert_eq!(pick(&d, &cfg, &mut rng).unwrap(), 2);
        }
    }

    #[test]
    fn beam_prefers_finished_and_scores_raw_logprob() {
        // EOL = 2 has probability 0.3 every step.
        let m = Fixed(vec![0.5, 0.2, 0.3]);
        let cfg = DecodeConfig { b: 3, max_new: 4, ..DecodeConfig::with_method(Method::Beam) };
        let best = beam_search(&m, &[0], &cfg, 2).unwrap();
        assert!(best.finished);
        assert_eq!(best.ids, vec![2]);
        assert!((best.logprob - 0.3f64.ln()).abs() < 1e-12);
    }

    #[test]
    fn completion_respects_max_new_and_eol() {
        let m = Fixed(vec![0.9, 0.1]);
        let mut rng = ChaCha8Rng::seed_from_u64(0);
        let out = complete_ids(&m, &[0], &DecodeConfig { max_new: 7, ..Default::default() }, 1, &mut rng).unwrap();
        assert_eq!(out, vec![0; 7]);
        let m = Fixed(vec![0.1, 0.9]);
        let out = complete_ids(&m, &[0], &DecodeConfig::default(), 1, &mut rng).unwrap();
        assert!(out.is_empty());
    }

    #[test]
    fn context_trimming_reserves_generation_room() {
        let ctx: Vec<u32> = (0..50).collect();
        assert_eq!(trim_context(&ctx, 30, 10), &ctx[30..]);
        assert_eq!(trim_context(&ctx, 100, 10), &ctx[..]);
        assert_eq!(trim_context(&ctx, 8, 10), &ctx[42..]);
    }

    #[test]
    fn repeat_harness_statistics() {
        let cfg = DecodeConfig::with_method(Method::Sample);
        let s = repeat_seeds(&cfg, &REPEAT_SEEDS, |c| Ok(c.seed as f64)).unwrap();
        assert_eq!(s.values, vec![0.0, 1.0, 2.0, 3.0, 4.0]);
        assert!((s.mean - 2.0).abs() < 1e-12);
        assert!((s.std - 2.5f64.sqrt()).abs() < 1e-12);
        let g = repeat_seeds(&DecodeConfig::default(), &REPEAT_SEEDS, |_| Ok(1.0)).unwrap();
        assert_eq!(g.values.len(), 1);
        assert_eq!(g.std, 0.0);
    }

    #[test]
    fn grid_covers_all_sweep_points() {
        let grid = decode_grid(&DecodeConfig::default());
        assert_eq!(grid.len(), 2 + 5 + 6 + 5 + 6);
        let labels: Vec<String> = grid.iter().map(DecodeConfig::label).collect();
        assert!(labels.contains(&"beam(b=5)".to_string()));
        assert!(labels.contains(&"top_p(p=0.05)".to_string()));
        assert!(grid.iter().all(|c| c.validate().is_ok()));
    }
}
