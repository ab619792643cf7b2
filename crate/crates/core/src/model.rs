//! Decoder-only transformer with pre-norm residual blocks, a causal mask
//! and an output head tied to the token embedding.

use std::fs;
use std::io::{BufReader, BufWriter, Read, Write};
use std::path::Path;
use std::rc::Rc;

use byteorder::{LittleEndian, ReadBytesExt, WriteBytesExt};
use rand::SeedableRng;
use rand_chacha::ChaCha8Rng;
use rand_distr::{Distribution, Normal};
use serde::{Deserialize, Serialize};

use crate::autodiff::{Graph, Scalar, Tensor, Var};
use crate::{Error, Result};

pub const INIT_STD: f64 = 0.02;
const MASK_VALUE: f64 = -1e9;
const PARAMS_PER_LAYER: usize = 16;

#[derive(Debug, Clone, Copy, PartialEq, Serialize, Deserialize)]
pub struct ModelConfig {
    pub n_layer: usize,
    pub n_head: usize,
    pub n_embd: usize,
    pub block_size: usize,
    pub vocab_size: usize,
    pub dropout: f64,
}

impl ModelConfig {
    /// Desk-scale defaults: 4 layers, 4 heads, width 128, block 256.
    pub fn desk(vocab_size: usize) -> Self {
        ModelConfig {
            n_layer: 4,
            n_head: 4,
            n_embd: 128,
            block_size: 256,
            vocab_size,
            dropout: 0.1,
        }
    }

    pub fn validate(&self) -> Result<()> {
        let bad = |m: String| Err(Error::Config(m));
        if self.n_layer == 0 || self.n_head == 0 || self.n_embd == 0 || self.vocab_size == 0 {
            return bad(format!("model dimensions must be positive: {self:?}"));
        }
        if !self.n_embd.is_multiple_of(self.n_head) {
            return bad(format!("n_embd {} not divisible by n_head {}", self.n_embd, self.n_head));
        }
        if self.block_size < 2 {
            return bad(format!("block_size {} must be at least 2", self.block_size));
        }
        if !(0.0..1.0).contains(&self.dropout) {
            return bad(format!("dropout {} outside [0, 1)", self.dropout));
        }
        Ok(())
    }

    /// `V·E + B·E + L·(12E² + 13E) + 2E`.
    pub fn param_count(&self) -> usize {
        let e = self.n_embd;
        self.vocab_size * e + self.block_size * e + self.n_layer * (12 * e * e + 13 * e) + 2 * e
    }

    /// Parameter names and shapes in storage order.
    pub fn param_specs(&self) -> Vec<(String, Vec<usize>)> {
        let e = self.n_embd;
        let mut out = vec![
            ("wte".to_string(), vec![self.vocab_size, e]),
            ("wpe".to_string(), vec![self.block_size, e]),
        ];
        for l in 0..self.n_layer {
            let p = |s: &str| format!("h{l}.{s}");
            out.extend([
                (p("ln1.g"), vec![e]),
                (p("ln1.b"), vec![e]),
                (p("attn.wq"), vec![e, e]),
                (p("attn.bq"), vec![e]),
                (p("attn.wk"), vec![e, e]),
                (p("attn.bk"), vec![e]),
                (p("attn.wv"), vec![e, e]),
                (p("attn.bv"), vec![e]),
                (p("attn.wo"), vec![e, e]),
                (p("attn.bo"), vec![e]),
                (p("ln2.g"), vec![e]),
                (p("ln2.b"), vec![e]),
                (p("mlp.w1"), vec![e, 4 * e]),
                (p("mlp.b1"), vec![4 * e]),
                (p("mlp.w2"), vec![4 * e, e]),
                (p("mlp.b2"), vec![e]),
            ]);
        }
        out.push(("lnf.g".to_string(), vec![e]));
        out.push(("lnf.b".to_string(), vec![e]));
        out
    }
}

/// Padded batch of token windows with next-token targets.
#[derive(Debug, Clone, PartialEq)]
pub struct Batch {
    pub ids: Vec<u32>,
    pub targets: Vec<Option<u32>>,
    pub batch: usize,
    pub seq: usize,
}

impl Batch {
    /// Right-pads every window to the longest one. Position `i` of a window
    /// targets id `i + 1`; padding and final positions have no target.
    pub fn from_windows(windows: &[&[u32]]) -> Result<Batch> {
        let seq = windows.iter().map(|w| w.len()).max().unwrap_or(0);
        if seq == 0 {
            return Err(Error::Contract("batch has no tokens".into()));
        }
        let mut ids = Vec::with_capacity(windows.len() * seq);
        let mut targets = Vec::with_capacity(windows.len() * seq);
        for w in windows {
            for i in 0..seq {
                ids.push(w.get(i).copied().unwrap_or(0));
                targets.push(w.get(i + 1).copied());
            }
        }
        Ok(Batch {
            ids,
            targets,
            batch: windows.len(),
            seq,
        })
    }

    pub fn target_count(&self) -> usize {
        self.targets.iter().filter(|t| t.is_some()).count()
    }
}

#[derive(Debug, Clone, PartialEq)]
pub struct Model<T> {
    config: ModelConfig,
    params: Vec<Tensor<T>>,
}

fn causal_mask(seq: usize) -> Rc<[bool]> {
    (0..seq * seq).map(|i| i % seq > i / seq).collect()
}

impl<T: Scalar> Model<T> {
    /// Weights from Normal(0, 0.02), biases 0, layer-norm scale 1 / shift 0.
    pub fn init(config: ModelConfig, seed: u64) -> Result<Self> {
        config.validate()?;
        let mut rng = ChaCha8Rng::seed_from_u64(seed);
        let normal = Normal::new(0.0, INIT_STD).expect("valid std");
        let params = config
            .param_specs()
            .into_iter()
            .map(|(name, shape)| {
                let n: usize = shape.iter().product();
                let data = if name.ends_with(".g") {
                    vec![T::ONE; n]
                } else if shape.len() == 1 {
                    vec![T::ZERO; n]
                } else {
                    (0..n).map(|_| T::from_f64(normal.sample(&mut rng))).collect()
                };
                Tensor::new(shape, data)
            })
            .collect::<Result<_>>()?;
        Ok(Model { config, params })
    }

    /// Wraps existing tensors, checking them against the config's layout.
    pub fn from_params(config: ModelConfig, params: Vec<Tensor<T>>) -> Result<Self> {
        config.validate()?;
        let specs = config.param_specs();
        if specs.len() != params.len() {
            return Err(Error::Checkpoint(format!(
                "expected {} tensors, got {}",
                specs.len(),
                params.len()
            )));
        }
        for ((name, shape), p) in specs.iter().zip(&params) {
            if p.shape() != shape.as_slice() {
                return Err(Error::shape("model parameter", shape, p.shape()))
                    .map_err(|e| Error::Checkpoint(format!("{name}: {e}")));
            }
        }
        Ok(Model { config, params })
    }

    pub fn config(&self) -> &ModelConfig {
        &self.config
    }

    pub fn params(&self) -> &[Tensor<T>] {
        &self.params
    }

    pub fn params_mut(&mut self) -> &mut [Tensor<T>] {
        &mut self.params
    }

    pub fn num_params(&self) -> usize {
        self.params.iter().map(Tensor::len).sum()
    }

    pub fn cast<U: Scalar>(&self) -> Model<U> {
        Model {
            config: self.config,
            params: self.params.iter().map(Tensor::cast).collect(),
        }
    }

    /// Adds every parameter to `g` as a trainable leaf (or a constant when
    /// `trainable` is false), in storage order.
    pub fn bind(&self, g: &mut Graph<T>, trainable: bool) -> Vec<Var> {
        self.params
            .iter()
            .map(|p| if trainable { g.param(p.clone()) } else { g.constant(p.clone()) })
            .collect()
    }

    fn check_ids(&self, ids: &[u32], seq: usize) -> Result<()> {
        if seq > self.config.block_size {
            return Err(Error::Contract(format!(
                "sequence length {seq} exceeds block size {}",
                self.config.block_size
            )));
        }
        if let Some(bad) = ids.iter().find(|&&i| i as usize >= self.config.vocab_size) {
            return Err(Error::Contract(format!(
                "token id {bad} out of range for vocabulary of {}",
                self.config.vocab_size
            )));
        }
        Ok(())
    }

    /// Final-layer-normed hidden states `[batch·seq, n_embd]`.
    pub fn hidden(
        &self,
        g: &mut Graph<T>,
        p: &[Var],
        ids: &[u32],
        batch: usize,
        seq: usize,
        mut rng: Option<&mut ChaCha8Rng>,
    ) -> Result<Var> {
        if ids.len() != batch * seq || seq == 0 {
            return Err(Error::shape("forward", &[ids.len()], &[batch, seq]));
        }
        self.check_ids(ids, seq)?;
        let cfg = &self.config;
        let (heads, e) = (cfg.n_head, cfg.n_embd);
        let drop = cfg.dropout;
        let mut dropout = |g: &mut Graph<T>, x: Var| match rng.as_deref_mut() {
            Some(r) if drop > 0.0 => g.dropout(x, drop, r),
            _ => x,
        };

        let positions: Vec<u32> = (0..batch).flat_map(|_| 0..seq as u32).collect();
        let tok = g.embedding(p[0], ids)?;
        let pos = g.embedding(p[1], &positions)?;
        let mut x = g.add(tok, pos)?;
        x = dropout(g, x);
        let mask = causal_mask(seq);
        let att_scale = T::from_f64(1.0 / ((e / heads) as f64).sqrt());
        for l in 0..cfg.n_layer {
            let w = &p[2 + l * PARAMS_PER_LAYER..2 + (l + 1) * PARAMS_PER_LAYER];
            let h = g.layer_norm(x, w[0], w[1])?;
            let proj = |g: &mut Graph<T>, wm: Var, bv: Var| -> Result<Var> {
                let y = g.matmul(h, wm)?;
                let y = g.add(y, bv)?;
                g.split_heads(y, batch, seq, heads)
            };
            let q = proj(g, w[2], w[3])?;
            let k = proj(g, w[4], w[5])?;
            let v = proj(g, w[6], w[7])?;
            let scores = g.bmm_nt(q, k)?;
            let scores = g.scale(scores, att_scale);
            let scores = g.masked_fill(scores, mask.clone(), T::from_f64(MASK_VALUE))?;
            let att = g.softmax(scores);
            let ctx = g.bmm(att, v)?;
            let ctx = g.merge_heads(ctx, batch, seq, heads)?;
            let out = g.matmul(ctx, w[8])?;
            let out = g.add(out, w[9])?;
            let out = dropout(g, out);
            x = g.add(x, out)?;

            let h = g.layer_norm(x, w[10], w[11])?;
            let f = g.matmul(h, w[12])?;
            let f = g.add(f, w[13])?;
            let f = g.gelu(f);
            let f = g.matmul(f, w[14])?;
            let f = g.add(f, w[15])?;
            let f = dropout(g, f);
            x = g.add(x, f)?;
        }
        let n = p.len();
        g.layer_norm(x, p[n - 2], p[n - 1])
    }

    /// Logits `[batch·seq, vocab]` through the tied head.
    pub fn logits(
        &self,
        g: &mut Graph<T>,
        p: &[Var],
        ids: &[u32],
        batch: usize,
        seq: usize,
        rng: Option<&mut ChaCha8Rng>,
    ) -> Result<Var> {
        let h = self.hidden(g, p, ids, batch, seq, rng)?;
        g.matmul_nt(h, p[0])
    }

    /// Mean next-token cross-entropy over a padded batch.
    pub fn batch_loss(&self, g: &mut Graph<T>, p: &[Var], batch: &Batch, rng: Option<&mut ChaCha8Rng>) -> Result<Var> {
        let logits = self.logits(g, p, &batch.ids, batch.batch, batch.seq, rng)?;
        g.cross_entropy(logits, &batch.targets)
    }

    /// Logits `[T, vocab]` for one sequence, without dropout.
    pub fn forward(&self, ids: &[u32]) -> Result<Tensor<T>> {
        let mut g = Graph::new();
        let p = self.bind(&mut g, false);
        let out = self.logits(&mut g, &p, ids, 1, ids.len(), None)?;
        Ok(g.value(out).clone())
    }

    /// Logits at the final position only.
    pub fn next_logits(&self, ids: &[u32]) -> Result<Vec<T>> {
        if ids.is_empty() {
            return Err(Error::Contract("empty context".into()));
        }
        let mut g = Graph::new();
        let p = self.bind(&mut g, false);
        let h = self.hidden(&mut g, &p, ids, 1, ids.len(), None)?;
        let last = g.embedding(h, &[ids.len() as u32 - 1])?;
        let out = g.matmul_nt(last, p[0])?;
        Ok(g.value(out).data().to_vec())
    }

    /// Mean negative log-likelihood of `ids[1..]` given their prefixes.
    pub fn lm_loss(&self, ids: &[u32]) -> Result<f64> {
        if ids.len() < 2 {
            return Err(Error::Contract(format!("lm_loss needs at least 2 ids, got {}", ids.len())));
        }
        let mut g = Graph::new();
        let p = self.bind(&mut g, false);
        let batch = Batch::from_windows(&[ids])?;
        let loss = self.batch_loss(&mut g, &p, &batch, None)?;
        Ok(g.value(loss).data()[0].to_f64())
    }
}

const CHECKPOINT_MAGIC: &[u8; 6] = b"SAOTF1";

/// Checkpoint metadata stored in the JSON header.
#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct CheckpointMeta {
    pub vocab_hash: String,
    pub step: u64,
    pub seed: u64,
}

#[derive(Serialize, Deserialize)]
struct TensorEntry {
    name: String,
    shape: Vec<usize>,
}

#[derive(Serialize, Deserialize)]
struct Header {
    config: ModelConfig,
    #[serde(flatten)]
    meta: CheckpointMeta,
    tensors: Vec<TensorEntry>,
}

impl Model<f32> {
    /// Writes magic, u32 header length, JSON header, then every tensor as
    /// little-endian f32 in header order.
    pub fn save(&self, path: &Path, meta: &CheckpointMeta) -> Result<()> {
        let header = Header {
            config: self.config,
            meta: meta.clone(),
            tensors: self
                .config
                .param_specs()
                .into_iter()
                .map(|(name, shape)| TensorEntry { name, shape })
                .collect(),
        };
        let json = serde_json::to_vec(&header)?;
        let mut w = BufWriter::new(fs::File::create(path)?);
        w.write_all(CHECKPOINT_MAGIC)?;
        w.write_u32::<LittleEndian>(json.len() as u32)?;
        w.write_all(&json)?;
        for p in &self.params {
            for &v in p.data() {
                w.write_f32::<LittleEndian>(v)?;
            }
        }
        w.flush()?;
        Ok(())
    }

    pub fn load(path: &Path) -> Result<(Self, CheckpointMeta)> {
        let mut r = BufReader::new(fs::File::open(path)?);
        let mut magic = [0u8; 6];
        r.read_exact(&mut magic)?;
        if &magic != CHECKPOINT_MAGIC {
            return Err(Error::Checkpoint(format!("{}: bad magic", path.display())));
        }
        let len = r.read_u32::<LittleEndian>()? as usize;
        let mut json = vec![0u8; len];
        r.read_exact(&mut json)?;
        let header: Header = serde_json::from_slice(&json)?;
        let specs = header.config.param_specs();
        if specs.len() != header.tensors.len()
            || specs
                .iter()
                .zip(&header.tensors)
                .any(|((n, s), t)| *n != t.name || *s != t.shape)
        {
            return Err(Error::Checkpoint("tensor layout does not match config".into()));
        }
        let mut params = Vec::with_capacity(specs.len());
        for entry in header.tensors {
            let n: usize = entry.shape.iter().product();
            let mut data = vec![0f32; n];
            r.read_f32_into::<LittleEndian>(&mut data)
                .map_err(|e| Error::Checkpoint(format!("{}: {e}", entry.name)))?;
            params.push(Tensor::new(entry.shape, data)?);
        }
        let mut rest = Vec::new();
        r.read_to_end(&mut rest)?;
        if !rest.is_empty() {
            return Err(Error::Checkpoint(format!("{} trailing bytes", rest.len())));
        }
        Ok((Model::from_params(header.config, params)?, header.meta))
    }
}
