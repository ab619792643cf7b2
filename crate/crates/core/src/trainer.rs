//! Multi-task training: hard parameter sharing, soft parameter sharing and
//! intermediate fine-tuning, all driven by one Adam loop.

use std::fmt;
use std::fs;
use std::io::{BufWriter, Write};
use std::path::Path;
use std::str::FromStr;

use rand::seq::SliceRandom;
use rand::SeedableRng;
use rand_chacha::ChaCha8Rng;
use serde::{Deserialize, Serialize};

use crate::align::AlignedSample;
use crate::autodiff::{Graph, Scalar, Tensor, Var};
use crate::model::{Batch, CheckpointMeta, Model};
use crate::{Error, Result};

pub const ADAM_BETA1: f64 = 0.9;
pub const ADAM_BETA2: f64 = 0.999;
pub const ADAM_EPS: f64 = 1e-8;
pub const SHARING_EPS: f64 = 1e-12;

/// Loss coefficients for the type and code tasks.
#[derive(Debug, Clone, Copy, PartialEq, Serialize, Deserialize)]
pub struct TaskWeights {
    pub alpha_type: f64,
    pub alpha_code: f64,
}

impl TaskWeights {
    pub fn new(alpha_type: f64, alpha_code: f64) -> Result<Self> {
        if !(alpha_type >= 0.0 && alpha_code >= 0.0) || !alpha_type.is_finite() || !alpha_code.is_finite() {
            return Err(Error::Config(format!(
                "task weights must be finite and non-negative, got {alpha_type}:{alpha_code}"
            )));
        }
        if alpha_type == 0.0 && alpha_code == 0.0 {
            return Err(Error::Config("task weights cannot both be zero".into()));
        }
        Ok(TaskWeights { alpha_type, alpha_code })
    }

    /// Ratio `a:b` (type:code) normalized to `(a/(a+b), b/(a+b))`.
    pub fn ratio(a: f64, b: f64) -> Result<Self> {
        let total = a + b;
        if !(total > 0.0) {
            return Err(Error::Config(format!("invalid weight ratio {a}:{b}")));
        }
        Self::new(a / total, b / total)
    }

    /// Unweighted sum of both losses.
    pub fn no_weight() -> Self {
        TaskWeights {
            alpha_type: 1.0,
            alpha_code: 1.0,
        }
    }

    /// The weight grid swept for task weighting: no-weight, then 1:9 … 9:1.
    pub fn sweep_grid() -> Vec<(String, TaskWeights)> {
        let mut out = vec![("no-weight".to_string(), Self::no_weight())];
        for a in 1..=9 {
            let w = Self::ratio(a as f64, (10 - a) as f64).expect("valid ratio");
            out.push((format!("{a}:{}", 10 - a), w));
        }
        out
    }
}

impl FromStr for TaskWeights {
    type Err = Error;

    /// Accepts `none` / `no-weight` or a `type:code` ratio such as `1:9`.
    fn from_str(s: &str) -> Result<Self> {
        let s = s.trim();
        if s.eq_ignore_ascii_case("none") || s.eq_ignore_ascii_case("no-weight") {
            return Ok(Self::no_weight());
        }
        let (a, b) = s
            .split_once(':')
            .ok_or_else(|| Error::Config(format!("weights must be 'none' or 'a:b', got {s:?}")))?;
        let parse = |v: &str| {
            v.trim()
                .parse::<f64>()
                .map_err(|_| Error::Config(format!("bad weight {v:?}")))
        };
        Self::ratio(parse(a)?, parse(b)?)
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Serialize, Deserialize)]
pub struct TrainConfig {
    pub learning_rate: f64,
    pub weight_decay: f64,
    pub batch_size: usize,
    pub grad_accum_steps: usize,
    pub max_steps: usize,
    pub seed: u64,
}

impl Default for TrainConfig {
    /// Desk-scale defaults.
    fn default() -> Self {
        TrainConfig {
            learning_rate: 1e-3,
            weight_decay: 0.01,
            batch_size: 8,
            grad_accum_steps: 1,
            max_steps: 1000,
            seed: 0,
        }
    }
}

impl TrainConfig {
    pub fn validate(&self) -> Result<()> {
        if !(self.learning_rate > 0.0) || !(self.weight_decay >= 0.0) {
            return Err(Error::Config(format!(
                "learning_rate must be positive and weight_decay non-negative: {self:?}"
            )));
        }
        if self.batch_size == 0 || self.grad_accum_steps == 0 || self.max_steps == 0 {
            return Err(Error::Config(format!(
                "batch_size, grad_accum_steps and max_steps must be positive: {self:?}"
            )));
        }
        Ok(())
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize, Deserialize)]
#[serde(rename_all = "lowercase")]
pub enum Role {
    Code,
    Type,
}

impl fmt::Display for Role {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(match self {
            Role::Code => "code",
            Role::Type => "type",
        })
    }
}

/// Shuffled, endlessly repeating windows of one id role.
#[derive(Debug, Clone)]
pub struct CorpusStream {
    role: Role,
    windows: Vec<Vec<u32>>,
    order: Vec<usize>,
    pos: usize,
    rng: ChaCha8Rng,
}

impl CorpusStream {
    /// Cuts every sample into `block`-sized windows of its code or type ids;
    /// windows shorter than 2 ids carry no target and are dropped.
    pub fn new(samples: &[AlignedSample], role: Role, block: usize, seed: u64) -> Result<Self> {
        if block < 2 {
            return Err(Error::Config(format!("block size {block} must be at least 2")));
        }
        let windows: Vec<Vec<u32>> = samples
            .iter()
            .flat_map(|s| {
                let ids = match role {
                    Role::Code => &s.code_ids,
                    Role::Type => &s.type_ids,
                };
                ids.chunks(block).map(<[u32]>::to_vec).collect::<Vec<_>>()
            })
            .filter(|w| w.len() >= 2)
            .collect();
        Self::from_windows(windows, role, seed)
    }

    pub fn from_windows(windows: Vec<Vec<u32>>, role: Role, seed: u64) -> Result<Self> {
        if windows.is_empty() {
            return Err(Error::Config(format!("{role} stream is empty")));
        }
        let salt = match role {
            Role::Code => 0x00c0de,
            Role::Type => 0x0071fe,
        };
        let mut s = CorpusStream {
            role,
            order: (0..windows.len()).collect(),
            windows,
            pos: 0,
            rng: ChaCha8Rng::seed_from_u64(seed ^ salt),
        };
        s.order.shuffle(&mut s.rng);
        Ok(s)
    }

    pub fn role(&self) -> Role {
        self.role
    }

    pub fn windows(&self) -> &[Vec<u32>] {
        &self.windows
    }

    pub fn len(&self) -> usize {
        self.windows.len()
    }

    pub fn is_empty(&self) -> bool {
        self.windows.is_empty()
    }

    /// Next `n` windows, reshuffling at each epoch boundary.
    pub fn next_batch(&mut self, n: usize) -> Result<Batch> {
        let mut picked = Vec::with_capacity(n);
        for _ in 0..n {
            if self.pos == self.order.len() {
                self.order.shuffle(&mut self.rng);
                self.pos = 0;
            }
            picked.push(self.order[self.pos]);
            self.pos += 1;
        }
        let refs: Vec<&[u32]> = picked.iter().map(|&i| self.windows[i].as_slice()).collect();
        Batch::from_windows(&refs)
    }
}

/// Per-parameter first and second moment estimates.
#[derive(Debug, Clone, PartialEq)]
pub struct AdamState<T> {
    pub m: Vec<Vec<T>>,
    pub v: Vec<Vec<T>>,
    pub t: u64,
}

impl<T: Scalar> AdamState<T> {
    pub fn new(params: &[Tensor<T>]) -> Self {
        AdamState {
            m: params.iter().map(|p| vec![T::ZERO; p.len()]).collect(),
            v: params.iter().map(|p| vec![T::ZERO; p.len()]).collect(),
            t: 0,
        }
    }
}

/// One bias-corrected Adam update with decoupled weight decay
/// (`p ← p − lr·wd·p − lr·m̂/(√v̂ + ε)`).
pub fn adam_step<T: Scalar>(params: &mut [Tensor<T>], grads: &[Vec<T>], state: &mut AdamState<T>, cfg: &TrainConfig) -> Result<()> {
    if params.len() != grads.len() || params.len() != state.m.len() {
        return Err(Error::Contract(format!(
            "adam: {} params, {} grads, {} state slots",
            params.len(),
            grads.len(),
            state.m.len()
        )));
    }
    state.t += 1;
    let t = state.t as i32;
    let (b1, b2) = (T::from_f64(ADAM_BETA1), T::from_f64(ADAM_BETA2));
    let c1 = T::from_f64(1.0 / (1.0 - ADAM_BETA1.powi(t)));
    let c2 = T::from_f64(1.0 / (1.0 - ADAM_BETA2.powi(t)));
    let lr = T::from_f64(cfg.learning_rate);
    let decay = T::from_f64(cfg.learning_rate * cfg.weight_decay);
    let eps = T::from_f64(ADAM_EPS);
    for (((p, g), m), v) in params.iter_mut().zip(grads).zip(&mut state.m).zip(&mut state.v) {
        if p.len() != g.len() || p.len() != m.len() {
            return Err(Error::shape("adam_step", p.shape(), &[g.len()]));
        }
        for (((w, &gi), mi), vi) in p.data_mut().iter_mut().zip(g).zip(m.iter_mut()).zip(v.iter_mut()) {
            *mi = b1 * *mi + (T::ONE - b1) * gi;
            *vi = b2 * *vi + (T::ONE - b2) * gi * gi;
            let mhat = *mi * c1;
            let vhat = *vi * c2;
            *w = *w - decay * *w - lr * mhat / (vhat.sqrt() + eps);
        }
    }
    Ok(())
}

/// `sqrt(Σ |a − b|² + ε)` over matched parameter pairs, as a graph node.
pub fn sharing_loss<T: Scalar>(g: &mut Graph<T>, a: &[Var], b: &[Var]) -> Result<Var> {
    if a.len() != b.len() || a.is_empty() {
        return Err(Error::Contract(format!(
            "sharing loss over {} vs {} parameters",
            a.len(),
            b.len()
        )));
    }
    let mut total: Option<Var> = None;
    for (&x, &y) in a.iter().zip(b) {
        if g.shape(x) != g.shape(y) {
            return Err(Error::Contract(format!(
                "sharing loss shape mismatch: {:?} vs {:?}",
                g.shape(x),
                g.shape(y)
            )));
        }
        let d = g.sub(x, y)?;
        let sq = g.mul(d, d)?;
        let s = g.sum(sq);
        total = Some(match total {
            None => s,
            Some(t) => g.add(t, s)?,
        });
    }
    let total = g.add_scalar(total.expect("nonempty"), T::from_f64(SHARING_EPS));
    Ok(g.sqrt(total))
}

/// Plain-valued [`sharing_loss`].
pub fn parameter_distance<T: Scalar>(a: &[Tensor<T>], b: &[Tensor<T>]) -> Result<f64> {
    if a.len() != b.len() {
        return Err(Error::Contract(format!("{} vs {} parameter tensors", a.len(), b.len())));
    }
    let mut total = 0.0;
    for (x, y) in a.iter().zip(b) {
        if x.shape() != y.shape() {
            return Err(Error::Contract(format!("shape mismatch: {:?} vs {:?}", x.shape(), y.shape())));
        }
        total += x
            .data()
            .iter()
            .zip(y.data())
            .map(|(p, q)| (p.to_f64() - q.to_f64()).powi(2))
            .sum::<f64>();
    }
    Ok((total + SHARING_EPS).sqrt())
}

/// One line of `history.jsonl`. Losses are the mean over the step's
/// accumulated micro-batches, measured before the update.
#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
pub struct StepRecord {
    pub step: usize,
    #[serde(skip_serializing_if = "Option::is_none", default)]
    pub l_code: Option<f64>,
    #[serde(skip_serializing_if = "Option::is_none", default)]
    pub l_type: Option<f64>,
    #[serde(skip_serializing_if = "Option::is_none", default)]
    pub l_sharing: Option<f64>,
}

pub fn write_history(path: &Path, records: &[StepRecord]) -> Result<()> {
    let mut w = BufWriter::new(fs::File::create(path)?);
    for r in records {
        serde_json::to_writer(&mut w, r)?;
        w.write_all(b"\n")?;
    }
    w.flush()?;
    Ok(())
}

pub fn read_history(path: &Path) -> Result<Vec<StepRecord>> {
    fs::read_to_string(path)?
        .lines()
        .filter(|l| !l.trim().is_empty())
        .map(|l| serde_json::from_str(l).map_err(Error::from))
        .collect()
}

/// Mean of `values` over a trailing window ending at `index` (inclusive).
pub fn smoothed(values: &[f64], index: usize, window: usize) -> f64 {
    let start = (index + 1).saturating_sub(window.max(1));
    let slice = &values[start..=index];
    slice.iter().sum::<f64>() / slice.len() as f64
}

/// Whether training should continue after a step.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum Flow {
    Continue,
    Stop,
}

/// Called after every optimizer step with the record and the model used for
/// inference (the code model under soft sharing).
pub trait StepHook {
    fn on_step(&mut self, record: &StepRecord, model: &Model<f32>) -> Flow;
}

impl<F: FnMut(&StepRecord, &Model<f32>) -> Flow> StepHook for F {
    fn on_step(&mut self, record: &StepRecord, model: &Model<f32>) -> Flow {
        self(record, model)
    }
}

/// Hook that never stops training.
pub fn no_hook(_: &StepRecord, _: &Model<f32>) -> Flow {
    Flow::Continue
}

fn dropout_rng(seed: u64, role: Role) -> ChaCha8Rng {
    ChaCha8Rng::seed_from_u64(seed.wrapping_mul(0x9e37_79b9_7f4a_7c15) ^ (role as u64 + 1))
}

fn collect_grads(g: &Graph<f32>, vars: &[Var], model: &Model<f32>, acc: &mut [Vec<f32>]) {
    for ((&v, p), a) in vars.iter().zip(model.params()).zip(acc.iter_mut()) {
        if a.is_empty() {
            a.resize(p.len(), 0.0);
        }
        if let Some(gr) = g.grad(v) {
            for (x, &y) in a.iter_mut().zip(gr) {
                *x += y;
            }
        }
    }
}

fn scale_grads(acc: &mut [Vec<f32>], k: f32) {
    if k != 1.0 {
        acc.iter_mut().flatten().for_each(|x| *x *= k);
    }
}

/// Single-task causal LM training on one stream. `first_step` offsets the
/// recorded step numbers (used when resuming).
pub fn train_lm(
    model: &mut Model<f32>,
    stream: &mut CorpusStream,
    cfg: &TrainConfig,
    first_step: usize,
    hook: &mut dyn StepHook,
) -> Result<Vec<StepRecord>> {
    cfg.validate()?;
    let role = stream.role();
    let mut state = AdamState::new(model.params());
    let mut drop_rng = dropout_rng(cfg.seed, role);
    let mut history = Vec::new();
    for step in first_step..cfg.max_steps {
        let mut grads = vec![Vec::new(); model.params().len()];
        let mut loss_sum = 0.0;
        for _ in 0..cfg.grad_accum_steps {
            let batch = stream.next_batch(cfg.batch_size)?;
            let mut g = Graph::new();
            let vars = model.bind(&mut g, true);
            let loss = model.batch_loss(&mut g, &vars, &batch, Some(&mut drop_rng))?;
            loss_sum += g.value(loss).data()[0] as f64;
            g.backward(loss)?;
            collect_grads(&g, &vars, model, &mut grads);
        }
        scale_grads(&mut grads, 1.0 / cfg.grad_accum_steps as f32);
        adam_step(model.params_mut(), &grads, &mut state, cfg)?;
        let mean = loss_sum / cfg.grad_accum_steps as f64;
        let record = StepRecord {
            step,
            l_code: (role == Role::Code).then_some(mean),
            l_type: (role == Role::Type).then_some(mean),
            l_sharing: None,
        };
        let flow = hook.on_step(&record, model);
        history.push(record);
        if flow == Flow::Stop {
            break;
        }
    }
    Ok(history)
}

/// Hard parameter sharing: one model, `α_code·L_code + α_type·L_type` per
/// micro-batch, one code batch and one type batch each.
pub fn train_hard(
    model: &mut Model<f32>,
    d_code: &mut CorpusStream,
    d_type: &mut CorpusStream,
    weights: TaskWeights,
    cfg: &TrainConfig,
    hook: &mut dyn StepHook,
) -> Result<Vec<StepRecord>> {
    cfg.validate()?;
    let mut state = AdamState::new(model.params());
    let mut code_rng = dropout_rng(cfg.seed, Role::Code);
    let mut type_rng = dropout_rng(cfg.seed, Role::Type);
    let mut history = Vec::new();
    for step in 0..cfg.max_steps {
        let mut grads = vec![Vec::new(); model.params().len()];
        let (mut lc_sum, mut lt_sum) = (0.0, 0.0);
        for _ in 0..cfg.grad_accum_steps {
            let code_batch = d_code.next_batch(cfg.batch_size)?;
            let type_batch = d_type.next_batch(cfg.batch_size)?;
            let mut g = Graph::new();
            let vars = model.bind(&mut g, true);
            let lc = model.batch_loss(&mut g, &vars, &code_batch, Some(&mut code_rng))?;
            let lt = model.batch_loss(&mut g, &vars, &type_batch, Some(&mut type_rng))?;
            lc_sum += g.value(lc).data()[0] as f64;
            lt_sum += g.value(lt).data()[0] as f64;
            let wc = g.scale(lc, weights.alpha_code as f32);
            let wt = g.scale(lt, weights.alpha_type as f32);
            let total = g.add(wc, wt)?;
            g.backward(total)?;
            collect_grads(&g, &vars, model, &mut grads);
        }
        scale_grads(&mut grads, 1.0 / cfg.grad_accum_steps as f32);
        adam_step(model.params_mut(), &grads, &mut state, cfg)?;
        let n = cfg.grad_accum_steps as f64;
        let record = StepRecord {
            step,
            l_code: Some(lc_sum / n),
            l_type: Some(lt_sum / n),
            l_sharing: None,
        };
        let flow = hook.on_step(&record, model);
        history.push(record);
        if flow == Flow::Stop {
            break;
        }
    }
    Ok(history)
}

/// Soft parameter sharing: the code model learns the code task, the type
/// model the type task, and `sharing_loss` couples their parameters. With
/// `couple == false` the two models train independently.
#[allow(clippy::too_many_arguments)]
pub fn train_soft(
    model_code: &mut Model<f32>,
    model_type: &mut Model<f32>,
    d_code: &mut CorpusStream,
    d_type: &mut CorpusStream,
    weights: TaskWeights,
    cfg: &TrainConfig,
    couple: bool,
    hook: &mut dyn StepHook,
) -> Result<Vec<StepRecord>> {
    cfg.validate()?;
    if model_code.config() != model_type.config() {
        return Err(Error::Config(format!(
            "soft sharing needs identical model configs: {:?} vs {:?}",
            model_code.config(),
            model_type.config()
        )));
    }
    let mut state_code = AdamState::new(model_code.params());
    let mut state_type = AdamState::new(model_type.params());
    let mut code_rng = dropout_rng(cfg.seed, Role::Code);
    let mut type_rng = dropout_rng(cfg.seed, Role::Type);
    let mut history = Vec::new();
    for step in 0..cfg.max_steps {
        let mut grads_code = vec![Vec::new(); model_code.params().len()];
        let mut grads_type = vec![Vec::new(); model_type.params().len()];
        let (mut lc_sum, mut lt_sum, mut ls_sum) = (0.0, 0.0, 0.0);
        for _ in 0..cfg.grad_accum_steps {
            let code_batch = d_code.next_batch(cfg.batch_size)?;
            let type_batch = d_type.next_batch(cfg.batch_size)?;
            let mut g = Graph::new();
            let vc = model_code.bind(&mut g, true);
            let vt = model_type.bind(&mut g, true);
            let lc = model_code.batch_loss(&mut g, &vc, &code_batch, Some(&mut code_rng))?;
            let lt = model_type.batch_loss(&mut g, &vt, &type_batch, Some(&mut type_rng))?;
            lc_sum += g.value(lc).data()[0] as f64;
            lt_sum += g.value(lt).data()[0] as f64;
            let wc = g.scale(lc, weights.alpha_code as f32);
            let wt = g.scale(lt, weights.alpha_type as f32);
            let mut total = g.add(wc, wt)?;
            if couple {
                let ls = sharing_loss(&mut g, &vt, &vc)?;
                ls_sum += g.value(ls).data()[0] as f64;
                total = g.add(total, ls)?;
            }
            g.backward(total)?;
            collect_grads(&g, &vc, model_code, &mut grads_code);
            collect_grads(&g, &vt, model_type, &mut grads_type);
        }
        let k = 1.0 / cfg.grad_accum_steps as f32;
        scale_grads(&mut grads_code, k);
        scale_grads(&mut grads_type, k);
        adam_step(model_code.params_mut(), &grads_code, &mut state_code, cfg)?;
        adam_step(model_type.params_mut(), &grads_type, &mut state_type, cfg)?;
        let n = cfg.grad_accum_steps as f64;
        let record = StepRecord {
            step,
            l_code: Some(lc_sum / n),
            l_type: Some(lt_sum / n),
            l_sharing: couple.then_some(ls_sum / n),
        };
        let flow = hook.on_step(&record, model_code);
        history.push(record);
        if flow == Flow::Stop {
            break;
        }
    }
    Ok(history)
}

/// Intermediate fine-tuning: the type task for the first half of
/// `max_steps`, then the code task for the rest. The model after phase one
/// is written to `checkpoint` when given; each phase starts with fresh Adam
/// moments.
pub fn train_ift(
    model: &mut Model<f32>,
    d_type: &mut CorpusStream,
    d_code: &mut CorpusStream,
    cfg: &TrainConfig,
    checkpoint: Option<(&Path, &str)>,
    hook: &mut dyn StepHook,
) -> Result<Vec<StepRecord>> {
    cfg.validate()?;
    let phase_one = cfg.max_steps / 2;
    let mut history = Vec::new();
    if phase_one > 0 {
        let first = TrainConfig {
            max_steps: phase_one,
            ..*cfg
        };
        history = train_lm(model, d_type, &first, 0, hook)?;
    }
    if let Some((path, vocab_hash)) = checkpoint {
        model.save(
            path,
            &CheckpointMeta {
                vocab_hash: vocab_hash.to_string(),
                step: phase_one as u64,
                seed: cfg.seed,
            },
        )?;
    }
    history.extend(train_lm(model, d_code, cfg, phase_one, hook)?);
    Ok(history)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::autodiff::grad_check;
    use crate::model::ModelConfig;

    fn tiny_cfg() -> ModelConfig {
        ModelConfig {
            n_layer: 1,
            n_head: 2,
            n_embd: 8,
            block_size: 8,
            vocab_size: 12,
            dropout: 0.0,
        }
    }

    fn stream(role: Role, seed: u64) -> CorpusStream {
        let windows: Vec<Vec<u32>> = (0..6u32)
            .map(|i| (0..8u32).map(|j| (i * 3 + j * (1 + i % 2)) % 12).collect())
            .collect();
        let windows = match role {
            Role::Code => windows,
            Role::Type => windows.into_iter().map(|w| w.iter().map(|x| x % 4).collect()).collect(),
        };
        CorpusStream::from_windows(windows, role, seed).unwrap()
    }

    fn train_cfg(steps: usize) -> TrainConfig {
        TrainConfig {
            learning_rate: 1e-2,
            weight_decay: 0.0,
            batch_size: 2,
            grad_accum_steps: 1,
            max_steps: steps,
            seed: 3,
        }
    }

    #[test]
    fn weight_ratio_semantics() {
        let w: TaskWeights = "1:9".parse().unwrap();
        assert!((w.alpha_type - 0.1).abs() < 1e-12 && (w.alpha_code - 0.9).abs() < 1e-12);
        assert_eq!("none".parse::<TaskWeights>().unwrap(), TaskWeights::no_weight());
        assert!("0:0".parse::<TaskWeights>().is_err());
        assert!("x".parse::<TaskWeights>().is_err());
        assert!(TaskWeights::new(-1.0, 1.0).is_err());
        let grid = TaskWeights::sweep_grid();
        assert_eq!(grid.len(), 10);
        assert_eq!(grid[0].0, "no-weight");
        assert_eq!(grid[9].0, "9:1");
    }

    #[test]
    fn train_config_validation() {
        assert!(TrainConfig::default().validate().is_ok());
        for bad in [
            TrainConfig { learning_rate: 0.0, ..Default::default() },
            TrainConfig { batch_size: 0, ..Default::default() },
            TrainConfig { grad_accum_steps: 0, ..Default::default() },
            TrainConfig { max_steps: 0, ..Default::default() },
            TrainConfig { weight_decay: -1.0, ..Default::default() },
        ] {
            assert!(matches!(bad.validate(), Err(Error::Config(_))));
        }
    }

    #[test]
    fn stream_is_deterministic_and_cycles() {
        let mut a = stream(Role::Code, 1);
        let mut b = stream(Role::Code, 1);
        for _ in 0..10 {
            assert_eq!(a.next_batch(4).unwrap(), b.next_batch(4).unwrap());
        }
        assert!(matches!(
            CorpusStream::from_windows(vec![], Role::Type, 0),
            Err(Error::Config(_))
        ));
        let short = AlignedSample {
            code_ids: vec![1],
            type_ids: vec![2],
            boundaries: vec![(0, 1)],
        };
        assert!(CorpusStream::new(&[short], Role::Code, 4, 0).is_err());
    }

    #[test]
    fn adam_zero_gradient_leaves_params() {
        let mut p = vec![Tensor::new(vec![3], vec![1.0f64, -2.0, 0.5]).unwrap()];
        let before = p.clone();
        let mut st = AdamState::new(&p);
        let cfg = TrainConfig { weight_decay: 0.0, ..Default::default() };
        for _ in 0..5 {
            adam_step(&mut p, &[vec![0.0; 3]], &mut st, &cfg).unwrap();
        }
        assert_eq!(p, before);
    }

    #[test]
    fn adam_constant_gradient_steps_by_lr() {
        let mut p = vec![Tensor::new(vec![2], vec![0.0f64, 0.0]).unwrap()];
        let mut st = AdamState::new(&p);
        let cfg = TrainConfig { learning_rate: 1e-3, weight_decay: 0.0, ..Default::default() };
        let g = vec![vec![0.3, -7.0]];
        let mut prev = p[0].data().to_vec();
        for _ in 0..200 {
            adam_step(&mut p, &g, &mut st, &cfg).unwrap();
            let cur = p[0].data().to_vec();
            let steps: Vec<f64> = cur.iter().zip(&prev).map(|(c, q)| c - q).collect();
            // Bias-corrected moments of a constant gradient are exact, so
            // each step is lr · g/(|g| + ε) = ∓lr up to ε.
            assert!((steps[0] + 1e-3).abs() < 1e-9, "{steps:?}");
            assert!((steps[1] - 1e-3).abs() < 1e-9, "{steps:?}");
            prev = cur;
        }
    }

    #[test]
    fn adam_weight_decay_is_geometric() {
        let mut p = vec![Tensor::new(vec![2], vec![2.0f64, -4.0]).unwrap()];
        let mut st = AdamState::new(&p);
        let cfg = TrainConfig { learning_rate: 0.1, weight_decay: 0.5, ..Default::default() };
        for _ in 0..10 {
            adam_step(&mut p, &[vec![0.0; 2]], &mut st, &cfg).unwrap();
        }
        let f = (1.0f64 - 0.05).powi(10);
        assert!((p[0].data()[0] - 2.0 * f).abs() < 1e-12);
        assert!((p[0].data()[1] + 4.0 * f).abs() < 1e-12);
    }

    #[test]
    fn sharing_loss_values_and_gradient() {
        let mut g = Graph::<f64>::new();
        let a = g.param(Tensor::new(vec![2], vec![1.0, 2.0]).unwrap());
        let b = g.param(Tensor::new(vec![2], vec![1.0, 0.0]).unwrap());
        let l = sharing_loss(&mut g, &[a], &[b]).unwrap();
        assert!((g.value(l).data()[0] - 2.0).abs() < 1e-9);
        let l0 = sharing_loss(&mut g, &[a], &[a]).unwrap();
        assert!(g.value(l0).data()[0] <= 1e-6);
        let c = g.param(Tensor::new(vec![3], vec![0.0; 3]).unwrap());
        assert!(matches!(sharing_loss(&mut g, &[a], &[c]), Err(Error::Contract(_))));

        let pa = Tensor::new(vec![2, 2], vec![0.3, -0.2, 1.5, 0.7]).unwrap();
        let pb = Tensor::new(vec![2, 2], vec![-0.1, 0.4, 1.0, 0.2]).unwrap();
        let pc = Tensor::new(vec![3], vec![0.5, 0.1, -0.3]).unwrap();
        let pd = Tensor::new(vec![3], vec![0.0, 0.6, 0.2]).unwrap();
        let report = grad_check(
            |g, p| sharing_loss(g, &[p[0], p[2]], &[p[1], p[3]]),
            &[pa.clone(), pb.clone(), pc.clone(), pd.clone()],
            1e-3,
            1e-4,
            None,
            0,
        )
        .unwrap();
        assert!(report.passed(), "{report:?}");
        let dist = parameter_distance(&[pa, pc], &[pb, pd]).unwrap();
        let expected = (0.16f64 + 0.36 + 0.25 + 0.25 + 0.25 + 0.25 + 0.25 + SHARING_EPS).sqrt();
        assert!((dist - expected).abs() < 1e-12);
    }

    #[test]
    fn hard_sharing_without_type_weight_equals_single_task() {
        let cfg = train_cfg(15);
        let mut single = Model::<f32>::init(tiny_cfg(), 4).unwrap();
        let mut hard = single.clone();
        let h1 = train_lm(&mut single, &mut stream(Role::Code, 2), &cfg, 0, &mut no_hook).unwrap();
        let w = TaskWeights::new(0.0, 1.0).unwrap();
        let h2 = train_hard(&mut hard, &mut stream(Role::Code, 2), &mut stream(Role::Type, 2), w, &cfg, &mut no_hook).unwrap();
        assert_eq!(single, hard);
        for (a, b) in h1.iter().zip(&h2) {
            assert_eq!(a.l_code.unwrap().to_bits(), b.l_code.unwrap().to_bits());
        }
    }

    #[test]
    fn training_is_reproducible_and_reduces_loss() {
        let run = || {
            let mut m = Model::<f32>::init(tiny_cfg(), 5).unwrap();
            let w = TaskWeights::no_weight();
            train_hard(&mut m, &mut stream(Role::Code, 1), &mut stream(Role::Type, 1), w, &train_cfg(60), &mut no_hook).unwrap()
        };
        let (a, b) = (run(), run());
        assert_eq!(a, b);
        let lt: Vec<f64> = a.iter().map(|r| r.l_type.unwrap()).collect();
        assert!(smoothed(&lt, 59, 10) < smoothed(&lt, 0, 10));
    }

    #[test]
    fn scaling_both_weights_keeps_gradient_direction() {
        let m = Model::<f32>::init(tiny_cfg(), 6).unwrap();
        let code = stream(Role::Code, 0).next_batch(2).unwrap();
        let types = stream(Role::Type, 0).next_batch(2).unwrap();
        let grad_for = |w: TaskWeights| {
            let mut g = Graph::new();
            let vars = m.bind(&mut g, true);
            let lc = m.batch_loss(&mut g, &vars, &code, None).unwrap();
            let lt = m.batch_loss(&mut g, &vars, &types, None).unwrap();
            let a = g.scale(lc, w.alpha_code as f32);
            let b = g.scale(lt, w.alpha_type as f32);
            let t = g.add(a, b).unwrap();
            g.backward(t).unwrap();
            let flat: Vec<f64> = vars.iter().flat_map(|&v| g.grad(v).unwrap().iter().map(|&x| x as f64).collect::<Vec<_>>()).collect();
            let norm = flat.iter().map(|x| x * x).sum::<f64>().sqrt();
            flat.into_iter().map(|x| x / norm).collect::<Vec<_>>()
        };
        let a = grad_for(TaskWeights::new(0.5, 0.5).unwrap());
        let b = grad_for(TaskWeights::no_weight());
        let cos: f64 = a.iter().zip(&b).map(|(x, y)| x * y).sum();
        assert!((cos - 1.0).abs() < 1e-5, "cosine {cos}");
    }

    #[test]
    fn soft_sharing_pulls_models_together() {
        let cfg = train_cfg(40);
        let mut mc = Model::<f32>::init(tiny_cfg(), 10).unwrap();
        let mut mt = Model::<f32>::init(tiny_cfg(), 11).unwrap();
        let d0 = parameter_distance(mc.params(), mt.params()).unwrap();
        let h = train_soft(&mut mc, &mut mt, &mut stream(Role::Code, 0), &mut stream(Role::Type, 0), TaskWeights::no_weight(), &cfg, true, &mut no_hook).unwrap();
        let d1 = parameter_distance(mc.params(), mt.params()).unwrap();
        assert!(d1 < d0, "{d1} vs {d0}");
        assert!(h.iter().all(|r| r.l_code.unwrap().is_finite() && r.l_type.unwrap().is_finite() && r.l_sharing.is_some()));

        let mut narrow = Model::<f32>::init(ModelConfig { n_embd: 4, ..tiny_cfg() }, 0).unwrap();
        let mismatch = train_soft(
            &mut mc,
            &mut narrow,
            &mut stream(Role::Code, 0),
            &mut stream(Role::Type, 0),
            TaskWeights::no_weight(),
            &cfg,
            true,
            &mut no_hook,
        );
        assert!(matches!(mismatch, Err(Error::Config(_))));
    }

    #[test]
    fn ift_checkpoint_resumes_identically() {
        let dir = std::env::temp_dir().join(format!("saotf-ift-{}", std::process::id()));
        fs::create_dir_all(&dir).unwrap();
        let ckpt = dir.join("phase1.ckpt");
        let cfg = train_cfg(12);
        let mut full = Model::<f32>::init(tiny_cfg(), 7).unwrap();
        let h = train_ift(&mut full, &mut stream(Role::Type, 0), &mut stream(Role::Code, 0), &cfg, Some((&ckpt, "hash")), &mut no_hook).unwrap();
        assert_eq!(h.len(), 12);
        assert!(h[..6].iter().all(|r| r.l_type.is_some() && r.l_code.is_none()));
        assert!(h[6..].iter().all(|r| r.l_code.is_some()));
        let (mut resumed, meta) = Model::<f32>::load(&ckpt).unwrap();
        assert_eq!(meta.step, 6);
        let h2 = train_lm(&mut resumed, &mut stream(Role::Code, 0), &cfg, 6, &mut no_hook).unwrap();
        assert_eq!(resumed, full);
        assert_eq!(h2, h[6..].to_vec());
        fs::remove_dir_all(&dir).ok();
    }

    #[test]
    fn history_round_trip_and_early_stop() {
        let mut m = Model::<f32>::init(tiny_cfg(), 8).unwrap();
        let mut calls = 0;
        let mut hook = |_: &StepRecord, _: &Model<f32>| {
            calls += 1;
            if calls == 3 { Flow::Stop } else { Flow::Continue }
        };
        let h = train_lm(&mut m, &mut stream(Role::Code, 0), &train_cfg(10), 0, &mut hook).unwrap();
        assert_eq!(h.len(), 3);
        let path = std::env::temp_dir().join(format!("saotf-history-{}.jsonl", std::process::id()));
        write_history(&path, &h).unwrap();
        assert_eq!(read_history(&path).unwrap(), h);
        let text = fs::read_to_string(&path).unwrap();
        assert!(!text.contains("l_type"));
        fs::remove_file(&path).ok();
    }
}
