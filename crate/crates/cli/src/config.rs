//! Flat `key = value` run configuration with command-line overrides.

use std::fmt::Write as _;
use std::path::Path;
use std::str::FromStr;

use saotf_core::bpe::DEFAULT_VOCAB_SIZE;
use saotf_core::corpus::SplitRatios;
use saotf_core::decode::{DecodeConfig, Method};
use saotf_core::evaluate::EvalOptions;
use saotf_core::model::ModelConfig;
use saotf_core::probe::Checker;
use saotf_core::trainer::{TaskWeights, TrainConfig};
use saotf_core::{Error, Result};
use sha2::{Digest, Sha256};

/// Training strategy selected by `strategy =`.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum Strategy {
    Hard,
    Soft,
    Ift,
    /// Single-task code model (the baseline of the weight sweep).
    Code,
}

impl Strategy {
    pub fn name(self) -> &'static str {
        match self {
            Strategy::Hard => "hard",
            Strategy::Soft => "soft",
            Strategy::Ift => "ift",
            Strategy::Code => "code",
        }
    }
}

impl FromStr for Strategy {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        match s.trim() {
            "hard" => Ok(Strategy::Hard),
            "soft" => Ok(Strategy::Soft),
            "ift" => Ok(Strategy::Ift),
            "code" => Ok(Strategy::Code),
            other => Err(Error::Config(format!(
                "invalid strategy {other:?} (expected hard, soft, ift or code)"
            ))),
        }
    }
}

#[derive(Debug, Clone, PartialEq)]
pub struct RunConfig {
    pub seed: u64,
    pub train_ratio: f64,
    pub valid_ratio: f64,
    pub vocab_size: usize,
    pub n_layer: usize,
    pub n_head: usize,
    pub n_embd: usize,
    pub block_size: usize,
    pub dropout: f64,
    pub learning_rate: f64,
    pub weight_decay: f64,
    pub batch_size: usize,
    pub grad_accum_steps: usize,
    pub max_steps: usize,
    pub checkpoint_every: usize,
    pub strategy: Strategy,
    pub weights: TaskWeights,
    pub weights_label: String,
    pub method: Method,
    pub b: usize,
    pub temp: f64,
    pub k: usize,
    pub p: f64,
    pub max_new: usize,
    pub eval_lines: usize,
    pub checker: Checker,
}

impl Default for RunConfig {
    fn default() -> Self {
        let model = ModelConfig::desk(0);
        let train = TrainConfig::default();
        let decode = DecodeConfig::default();
        let split = SplitRatios::default();
        RunConfig {
            seed: 0,
            train_ratio: split.train,
            valid_ratio: split.valid,
            vocab_size: DEFAULT_VOCAB_SIZE,
            n_layer: model.n_layer,
            n_head: model.n_head,
            n_embd: model.n_embd,
            block_size: model.block_size,
            dropout: model.dropout,
            learning_rate: train.learning_rate,
            weight_decay: train.weight_decay,
            batch_size: train.batch_size,
            grad_accum_steps: train.grad_accum_steps,
            max_steps: train.max_steps,
            checkpoint_every: 0,
            strategy: Strategy::Hard,
            weights: TaskWeights::no_weight(),
            weights_label: "no-weight".into(),
            method: decode.method,
            b: decode.b,
            temp: decode.temp,
            k: decode.k,
            p: decode.p,
            max_new: decode.max_new,
            eval_lines: EvalOptions::default().lines,
            checker: Checker::GrammarSubset,
        }
    }
}

fn parse<T: FromStr>(key: &str, value: &str) -> Result<T> {
    value
        .trim()
        .parse()
        .map_err(|_| Error::Config(format!("{key}: cannot parse {value:?}")))
}

impl RunConfig {
    /// Defaults, then the file (if any), then `overrides` in order.
    pub fn load(file: Option<&Path>, overrides: &[String]) -> Result<RunConfig> {
        let mut cfg = RunConfig::default();
        if let Some(path) = file {
            let text = std::fs::read_to_string(path)?;
            for (n, line) in text.lines().enumerate() {
                let line = line.split('#').next().unwrap_or("").trim();
                if line.is_empty() {
                    continue;
                }
                cfg.apply(line)
                    .map_err(|e| Error::Config(format!("{} line {}: {e}", path.display(), n + 1)))?;
            }
        }
        for o in overrides {
            cfg.apply(o)?;
        }
        Ok(cfg)
    }

    /// Applies one `key=value` assignment.
    pub fn apply(&mut self, assignment: &str) -> Result<()> {
        let (key, value) = assignment
            .split_once('=')
            .ok_or_else(|| Error::Config(format!("expected key=value, got {assignment:?}")))?;
        self.set(key.trim(), value.trim())
    }

    pub fn set(&mut self, key: &str, value: &str) -> Result<()> {
        match key {
            "seed" => self.seed = parse(key, value)?,
            "train_ratio" => self.train_ratio = parse(key, value)?,
            "valid_ratio" => self.valid_ratio = parse(key, value)?,
            "vocab_size" => self.vocab_size = parse(key, value)?,
            "n_layer" => self.n_layer = parse(key, value)?,
            "n_head" => self.n_head = parse(key, value)?,
            "n_embd" => self.n_embd = parse(key, value)?,
            "block_size" => self.block_size = parse(key, value)?,
            "dropout" => self.dropout = parse(key, value)?,
            "learning_rate" => self.learning_rate = parse(key, value)?,
            "weight_decay" => self.weight_decay = parse(key, value)?,
            "batch_size" => self.batch_size = parse(key, value)?,
            "grad_accum_steps" => self.grad_accum_steps = parse(key, value)?,
            "max_steps" => self.max_steps = parse(key, value)?,
            "checkpoint_every" => self.checkpoint_every = parse(key, value)?,
            "strategy" => self.strategy = value.parse()?,
            "weights" => {
                self.weights = value.parse()?;
                self.weights_label = value.to_string();
            }
            "method" => self.method = value.parse()?,
            "b" => self.b = parse(key, value)?,
            "temp" => self.temp = parse(key, value)?,
            "k" => self.k = parse(key, value)?,
            "p" => self.p = parse(key, value)?,
            "max_new" => self.max_new = parse(key, value)?,
            "eval_lines" => self.eval_lines = parse(key, value)?,
            "checker" => self.checker = value.parse()?,
            other => return Err(Error::Config(format!("unknown config key {other:?}"))),
        }
        Ok(())
    }

    pub fn split_ratios(&self) -> Result<SplitRatios> {
        let ok = |x: f64| (0.0..=1.0).contains(&x);
        if !ok(self.train_ratio) || !ok(self.valid_ratio) || self.train_ratio + self.valid_ratio > 1.0 {
            return Err(Error::Config(format!(
                "split ratios train={} valid={} must be in [0,1] and sum to at most 1",
                self.train_ratio, self.valid_ratio
            )));
        }
        Ok(SplitRatios {
            train: self.train_ratio,
            valid: self.valid_ratio,
        })
    }

    pub fn model_config(&self, vocab_size: usize) -> Result<ModelConfig> {
        let cfg = ModelConfig {
            n_layer: self.n_layer,
            n_head: self.n_head,
            n_embd: self.n_embd,
            block_size: self.block_size,
            vocab_size,
            dropout: self.dropout,
        };
        cfg.validate()?;
        Ok(cfg)
    }

    pub fn train_config(&self) -> Result<TrainConfig> {
        let cfg = TrainConfig {
            learning_rate: self.learning_rate,
            weight_decay: self.weight_decay,
            batch_size: self.batch_size,
            grad_accum_steps: self.grad_accum_steps,
            max_steps: self.max_steps,
            seed: self.seed,
        };
        cfg.validate()?;
        Ok(cfg)
    }

    pub fn decode_config(&self) -> Result<DecodeConfig> {
        let cfg = DecodeConfig {
            method: self.method,
            b: self.b,
            temp: self.temp,
            k: self.k,
            p: self.p,
            seed: self.seed,
            max_new: self.max_new,
        };
        cfg.validate()?;
        Ok(cfg)
    }

    pub fn eval_options(&self) -> Result<EvalOptions> {
        Ok(EvalOptions {
            decode: self.decode_config()?,
            lines: self.eval_lines,
            seed: self.seed,
        })
    }

    /// Every key with its resolved value, one per line, in a fixed order.
    pub fn resolved(&self) -> String {
        let mut out = String::new();
        let mut put = |k: &str, v: &dyn std::fmt::Display| {
            let _ = writeln!(out, "{k} = {v}");
        };
        put("seed", &self.seed);
        put("train_ratio", &self.train_ratio);
        put("valid_ratio", &self.valid_ratio);
        put("vocab_size", &self.vocab_size);
        put("n_layer", &self.n_layer);
        put("n_head", &self.n_head);
        put("n_embd", &self.n_embd);
        put("block_size", &self.block_size);
        put("dropout", &self.dropout);
        put("learning_rate", &self.learning_rate);
        put("weight_decay", &self.weight_decay);
        put("batch_size", &self.batch_size);
        put("grad_accum_steps", &self.grad_accum_steps);
        put("max_steps", &self.max_steps);
        put("checkpoint_every", &self.checkpoint_every);
        put("strategy", &self.strategy.name());
        put("weights", &self.weights_label);
        put("method", &self.method);
        put("b", &self.b);
        put("temp", &self.temp);
        put("k", &self.k);
        put("p", &self.p);
        put("max_new", &self.max_new);
        put("eval_lines", &self.eval_lines);
        put("checker", &self.checker);
        out
    }

    /// SHA-256 of [`RunConfig::resolved`].
    pub fn hash(&self) -> String {
        hex::encode(Sha256::digest(self.resolved().as_bytes()))
    }
}
